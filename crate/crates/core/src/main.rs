use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use irrtop::catalog::{self, CatalogPoint, CatalogSpace, DEFAULT_FUEL};
use irrtop::convergence::{self as conv, NetJson};
use irrtop::irr::WayBelow;
use irrtop::si::{si_iterate, Stage};
use irrtop::theorem_lab::{self as lab, SuiteResult};
use irrtop::{check_properties, Error, FiniteSpace, LabeledPoset, PosetJson, PropertyReport};

#[derive(Parser)]
#[command(
    name = "irrtop",
    version,
    about = "Irreducible sets, the SI topology and Irr-convergence"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Witness-search bound for catalog spaces.
    #[arg(long, default_value_t = DEFAULT_FUEL, global = true)]
    fuel: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Spaces.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Runs every implication of the suite on one space.
    Check { space: String },
    /// Iterates the SI derivative up to a fixpoint.
    DeriveSi { space: String },
    /// Decides `x ≪_Irr y`.
    WayBelow { space: String, x: String, y: String },
    /// Topological and Irr-convergence of a net given as JSON.
    Converge {
        space: String,
        #[arg(long)]
        net: String,
        #[arg(long)]
        to: String,
    },
    /// Lists the partial orders on a carrier.
    Enumerate {
        #[arg(long)]
        max_points: usize,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// Runs the implication suite over all small spaces.
    Suite {
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Also checks the catalog spaces.
        #[arg(long)]
        catalog: bool,
    },
    /// Finds the first small space satisfying a flag expression.
    Counterexample {
        #[arg(long)]
        query: String,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Exit with status 1 if a space is found.
        #[arg(long)]
        forbid: bool,
    },
}

#[derive(Subcommand)]
enum SpaceAction {
    /// Property report of a catalog space, a fixture or a JSON file.
    Info { space: String },
}

enum Loaded {
    Finite(FiniteSpace),
    Catalog(CatalogSpace),
}

/// Outcome of a command: rendered output and whether it signals failure.
struct Output {
    text: String,
    failed: bool,
}

fn load(arg: &str) -> irrtop::Result<Loaded> {
    use irrtop::space::fixtures;
    if let Ok(c) = catalog::catalog_get(arg) {
        return Ok(Loaded::Catalog(c));
    }
    let fixture = match arg {
        "chain3" => Some(fixtures::chain3()),
        "vee" => Some(fixtures::vee()),
        "diamond" => Some(fixtures::diamond()),
        "sierpinski" => Some(fixtures::sierpinski()),
        "point" => Some(fixtures::point()),
        _ => None,
    };
    if let Some(s) = fixture {
        return Ok(Loaded::Finite(s));
    }
    if !Path::new(arg).exists() {
        return Err(Error::UnknownSpace(arg.to_string()));
    }
    Ok(Loaded::Finite(FiniteSpace::from_json_str(&std::fs::read_to_string(
        arg,
    )?)?))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn report_text(r: &PropertyReport) -> String {
    let mut out = String::new();
    for (name, v) in r.flags() {
        let _ = write!(out, "{name}: {v}");
        if let Some(w) = r.witnesses.get(name) {
            let _ = write!(out, "  ({w})");
        }
        out.push('\n');
    }
    out
}

/// Solid Hasse edges for `≤`, dashed edges for strict `≪_Irr`; points with
/// `x ≪_Irr x` get a double border.
fn dot(names: &[String], covers: &[(usize, usize)], wb: &dyn Fn(usize, usize) -> bool) -> String {
    let q = |s: &str| format!("\"{}\"", s.replace('"', "\\\""));
    let mut out = String::from("digraph irrtop {\n  rankdir=BT;\n");
    for (i, n) in names.iter().enumerate() {
        let extra = if wb(i, i) { ", peripheries=2" } else { "" };
        let _ = writeln!(out, "  {} [label={}{extra}];", q(n), q(n));
    }
    for (x, y) in covers {
        let _ = writeln!(out, "  {} -> {} [style=solid];", q(&names[*x]), q(&names[*y]));
    }
    for x in 0..names.len() {
        for y in 0..names.len() {
            if x != y && wb(x, y) {
                let _ = writeln!(out, "  {} -> {} [style=dashed];", q(&names[x]), q(&names[y]));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn finite_dot(s: &FiniteSpace) -> String {
    let wb = WayBelow::compute(s);
    dot(s.names(), &s.order().covers(), &|x, y| wb.holds(x, y))
}

/// The order and `≪_Irr` restricted to a window of sample points.
fn catalog_dot(c: &CatalogSpace, fuel: usize) -> String {
    let pts = c.family().sample_points(fuel.min(4));
    let names: Vec<String> = pts.iter().map(|p| p.to_string()).collect();
    let lt = |x: usize, y: usize| x != y && c.leq(&pts[x], &pts[y]);
    let n = pts.len();
    let covers: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)))
        .collect();
    dot(&names, &covers, &|x, y| {
        catalog::catalog_way_below(c.name(), &pts[x], &pts[y])
    })
}

fn space_info(space: &Loaded, format: Format, fuel: usize) -> Output {
    let text = match (space, format) {
        (Loaded::Finite(s), Format::Dot) => finite_dot(s),
        (Loaded::Catalog(c), Format::Dot) => catalog_dot(c, fuel),
        (Loaded::Finite(s), Format::Json) => json(&check_properties(s)),
        (Loaded::Catalog(c), Format::Json) => json(&catalog::catalog_properties(c.name())),
        (Loaded::Finite(s), Format::Text) => {
            format!("{}\n{}", lab::suite::describe(s), report_text(&check_properties(s)))
        }
        (Loaded::Catalog(c), Format::Text) => {
            format!("{}\n{}", c.name(), report_text(&catalog::catalog_properties(c.name())))
        }
    };
    Output { text, failed: false }
}

fn suite_text(r: &SuiteResult) -> String {
    let mut out = format!(
        "spaces checked: {}\nimplications: {}\nviolations: {}\n",
        r.spaces_checked,
        r.implications_checked,
        r.violations.len()
    );
    for v in &r.violations {
        let _ = writeln!(out, "{} | {} [{}] {}", v.space, v.implication, v.anchor, v.witness);
    }
    out
}

fn check(space: &Loaded, format: Format, fuel: usize) -> Output {
    let r = match space {
        Loaded::Finite(s) => {
            let violations = lab::suite::check_space(s, &lab::implications(), &lab::suite::all_flags());
            SuiteResult {
                spaces_checked: 1,
                implications_checked: lab::IMPLICATIONS.len(),
                passed: violations.is_empty(),
                violations,
            }
        }
        Loaded::Catalog(c) => {
            let mut r = lab::catalog_suite(fuel);
            r.violations.retain(|v| v.space == c.name().to_string());
            r.spaces_checked = 1;
            r.passed = r.violations.is_empty();
            r
        }
    };
    let text = match format {
        Format::Json => json(&r),
        _ => suite_text(&r),
    };
    Output {
        text,
        failed: !r.passed,
    }
}

fn derive_si(space: Loaded, format: Format, fuel: usize) -> Output {
    let stage = match space {
        Loaded::Finite(s) => Stage::Finite(s),
        Loaded::Catalog(c) => Stage::Catalog(c),
    };
    let (trace, failed) = match si_iterate(&stage, fuel) {
        Ok(t) => (t, false),
        Err(Error::FuelExhausted { partial, .. }) => (*partial, true),
        Err(e) => unreachable!("si_iterate only runs out of fuel: {e}"),
    };
    let text = match format {
        Format::Json => json(&trace.to_json()),
        _ => {
            let mut out = String::new();
            for (k, st) in trace.stages.iter().enumerate() {
                let desc = match st {
                    Stage::Finite(s) => format!("{} opens", s.opens().len()),
                    Stage::Catalog(c) => c.to_stage_json().opens.join(", "),
                };
                let _ = writeln!(out, "stage {k}: {desc}");
            }
            if trace.fixpoint_reached {
                let _ = writeln!(out, "gamma: {}", trace.gamma);
            } else {
                let _ = writeln!(out, "no fixpoint within fuel {fuel}");
            }
            out
        }
    };
    Output { text, failed }
}

#[derive(Serialize)]
struct WayBelowJson {
    x: String,
    y: String,
    way_below: bool,
}

fn way_below(space: &Loaded, x: &str, y: &str, format: Format) -> irrtop::Result<Output> {
    let (x, y, v) = match space {
        Loaded::Finite(s) => {
            let (i, j) = (s.index_of(x)?, s.index_of(y)?);
            (x.to_string(), y.to_string(), irrtop::irr::way_below_irr(s, i, j))
        }
        Loaded::Catalog(c) => {
            let (p, q) = (c.parse_point(x)?, c.parse_point(y)?);
            (
                p.to_string(),
                q.to_string(),
                catalog::catalog_way_below(c.name(), &p, &q),
            )
        }
    };
    let text = match format {
        Format::Json => json(&WayBelowJson { x, y, way_below: v }),
        _ => format!("{v}\n"),
    };
    Ok(Output { text, failed: false })
}

#[derive(Serialize)]
struct ConvergeJson {
    to: String,
    net: String,
    topological: bool,
    irr: bool,
}

fn converge(space: &Loaded, net: &str, to: &str, format: Format) -> irrtop::Result<Output> {
    let doc = NetJson::parse(&std::fs::read_to_string(net)?)?;
    let r = match space {
        Loaded::Finite(s) => {
            let y = s.index_of(to)?;
            let n = doc.to_finite(s)?;
            n.check_carrier(s.len())?;
            let c = conv::tail_class_of(&n);
            ConvergeJson {
                to: to.to_string(),
                net: format!("tail class {{{}}}", s.labels_of(c.points()).join(", ")),
                topological: conv::topological_converges(s, c, y),
                irr: conv::irr_converges(s, c, y),
            }
        }
        Loaded::Catalog(c) => {
            let y: CatalogPoint = c.parse_point(to)?;
            let n = doc.to_catalog(c)?;
            ConvergeJson {
                to: y.to_string(),
                net: n.to_string(),
                topological: conv::catalog_topological_converges(c, &n, &y)?,
                irr: conv::catalog_irr_converges(c, &n, &y)?,
            }
        }
    };
    let text = match format {
        Format::Json => json(&r),
        _ => format!("net: {}\ntopological: {}\nirr: {}\n", r.net, r.topological, r.irr),
    };
    Ok(Output { text, failed: false })
}

#[derive(Serialize)]
struct EnumerationJson {
    points: usize,
    up_to_iso: bool,
    count: usize,
    posets: Vec<PosetJson>,
}

fn enumerate(max_points: usize, up_to_iso: bool, format: Format) -> irrtop::Result<Output> {
    let posets = lab::enumerate_posets(max_points, up_to_iso)?;
    let names: Vec<String> = (0..max_points).map(|i| i.to_string()).collect();
    let docs: Vec<PosetJson> = posets
        .into_iter()
        .map(|p| {
            LabeledPoset {
                names: names.clone(),
                order: p,
            }
            .to_json()
        })
        .collect();
    let text = match format {
        Format::Json => json(&EnumerationJson {
            points: max_points,
            up_to_iso,
            count: docs.len(),
            posets: docs,
        }),
        _ => {
            let mut out = format!("{} posets on {max_points} points\n", docs.len());
            for d in &docs {
                let le: Vec<String> = d.le.iter().map(|(a, b)| format!("{a}<{b}")).collect();
                let _ = writeln!(out, "{{{}}}", le.join(", "));
            }
            out
        }
    };
    Ok(Output { text, failed: false })
}

fn suite(max_points: usize, with_catalog: bool, format: Format, fuel: usize) -> irrtop::Result<Output> {
    let mut r = lab::run_implication_suite(max_points)?;
    if with_catalog {
        let c = lab::catalog_suite(fuel);
        r.spaces_checked += c.spaces_checked;
        r.implications_checked += c.implications_checked;
        r.violations.extend(c.violations);
        r.passed = r.violations.is_empty();
    }
    let text = match format {
        Format::Json => json(&r),
        _ => suite_text(&r),
    };
    Ok(Output {
        text,
        failed: !r.passed,
    })
}

fn counterexample(query: &str, max_points: usize, forbid: bool, format: Format) -> irrtop::Result<Output> {
    let found = lab::find_counterexample(query, max_points)?;
    let text = match (format, &found) {
        (Format::Json, _) => json(&found),
        (_, None) => format!("no space with at most {max_points} points satisfies {query}\n"),
        (_, Some(c)) => {
            let flags: Vec<String> = c.flags.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}\n{}\n", c.description, flags.join(" "))
        }
    };
    Ok(Output {
        text,
        failed: forbid && found.is_some(),
    })
}

fn run(cli: Cli) -> Result<Output, String> {
    let (format, fuel) = (cli.format, cli.fuel.max(1));
    if format == Format::Dot && !matches!(cli.command, Command::Space { .. }) {
        return Err("dot output applies to `space info` only".into());
    }
    dispatch(cli.command, format, fuel).map_err(|e| e.to_string())
}

fn dispatch(command: Command, format: Format, fuel: usize) -> irrtop::Result<Output> {
    match command {
        Command::Space {
            action: SpaceAction::Info { space },
        } => Ok(space_info(&load(&space)?, format, fuel)),
        Command::Check { space } => Ok(check(&load(&space)?, format, fuel)),
        Command::DeriveSi { space } => Ok(derive_si(load(&space)?, format, fuel)),
        Command::WayBelow { space, x, y } => way_below(&load(&space)?, &x, &y, format),
        Command::Converge { space, net, to } => converge(&load(&space)?, &net, &to, format),
        Command::Enumerate { max_points, up_to_iso } => enumerate(max_points, up_to_iso, format),
        Command::Suite { max_points, catalog } => suite(max_points, catalog, format, fuel),
        Command::Counterexample {
            query,
            max_points,
            forbid,
        } => counterexample(&query, max_points, forbid, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
