//! Boolean expressions over property flags.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::properties::FLAG_NAMES;

/// Flags computed on finite spaces beyond the property report.
pub const EXTENDED_FLAGS: [&str; 18] = [
    "wb_below",
    "m_sup",
    "m_irreducible",
    "interpolating",
    "dd_lemma",
    "si_c_space",
    "s_set_char",
    "kelley_constants",
    "kelley_subnets",
    "kelley_divergence",
    "kelley_iterated",
    "kelley",
    "topological",
    "induces_tau",
    "convergence_coincide",
    "si_within_irr",
    "irr_within_tau",
    "wb_char",
];

pub fn is_flag(name: &str) -> bool {
    FLAG_NAMES.contains(&name) || EXTENDED_FLAGS.contains(&name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Flag(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Implies(Box<Expr>, Box<Expr>),
    Iff(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Not,
    And,
    Or,
    Implies,
    Iff,
    Open,
    Close,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let rest: String = chars[i..].iter().take(3).collect();
        let single = match c {
            '¬' | '!' | '~' => Some(Tok::Not),
            '∧' => Some(Tok::And),
            '∨' => Some(Tok::Or),
            '⇒' | '→' => Some(Tok::Implies),
            '⇔' | '↔' => Some(Tok::Iff),
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            _ => None,
        };
        if c.is_whitespace() {
            i += 1;
        } else if let Some(t) = single {
            out.push(t);
            i += 1;
        } else if rest.starts_with("<->") || rest.starts_with("<=>") {
            out.push(Tok::Iff);
            i += 3;
        } else if rest.starts_with("->") || rest.starts_with("=>") {
            out.push(Tok::Implies);
            i += 2;
        } else if rest.starts_with("&&") || rest.starts_with("||") {
            out.push(if c == '&' { Tok::And } else { Tok::Or });
            i += 2;
        } else if c == '&' || c == '|' {
            out.push(if c == '&' { Tok::And } else { Tok::Or });
            i += 1;
        } else if c.is_alphanumeric() || c == '_' {
            let mut word = String::new();
            while i < chars.len() {
                let c = chars[i];
                let hyphen = c == '-' && chars.get(i + 1).is_some_and(|n| n.is_alphanumeric());
                if c.is_alphanumeric() || c == '_' || hyphen {
                    word.push(if hyphen { '_' } else { c });
                    i += 1;
                } else {
                    break;
                }
            }
            out.push(match word.as_str() {
                "not" => Tok::Not,
                "and" => Tok::And,
                "or" => Tok::Or,
                "implies" => Tok::Implies,
                "iff" => Tok::Iff,
                _ => Tok::Ident(word),
            });
        } else {
            return Err(Error::BadQuery(format!("unexpected '{c}' in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::BadQuery(format!("{what} in {:?}", self.src))
    }

    /// iff < implies (right-assoc) < or < and < not
    fn iff(&mut self) -> Result<Expr> {
        let mut e = self.implies()?;
        while self.eat(&Tok::Iff) {
            e = Expr::Iff(Box::new(e), Box::new(self.implies()?));
        }
        Ok(e)
    }

    fn implies(&mut self) -> Result<Expr> {
        let e = self.or()?;
        if self.eat(&Tok::Implies) {
            return Ok(Expr::Implies(Box::new(e), Box::new(self.implies()?)));
        }
        Ok(e)
    }

    fn or(&mut self) -> Result<Expr> {
        let mut e = self.and()?;
        while self.eat(&Tok::Or) {
            e = Expr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut e = self.not()?;
        while self.eat(&Tok::And) {
            e = Expr::And(Box::new(e), Box::new(self.not()?));
        }
        Ok(e)
    }

    fn not(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Not) {
            return Ok(Expr::Not(Box::new(self.not()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.iff()?;
                if !self.eat(&Tok::Close) {
                    return Err(self.err("missing ')'"));
                }
                Ok(e)
            }
            Some(Tok::Ident(w)) => {
                self.pos += 1;
                match w.as_str() {
                    "true" => Ok(Expr::Const(true)),
                    "false" => Ok(Expr::Const(false)),
                    f if is_flag(f) => Ok(Expr::Flag(w)),
                    _ => Err(Error::BadQuery(format!("unknown flag {w}"))),
                }
            }
            Some(t) => Err(self.err(&format!("unexpected {t:?}"))),
            None => Err(self.err("unexpected end")),
        }
    }
}

impl Expr {
    /// Parses `¬ ∧ ∨ ⇒ ⇔` or their ASCII and word spellings; flags must be
    /// in the vocabulary.
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            toks: lex(src)?,
            pos: 0,
            src: src.to_string(),
        };
        let e = p.iff()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }

    pub fn flags(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Expr::Const(_) => {}
            Expr::Flag(f) => {
                out.insert(f);
            }
            Expr::Not(a) => a.collect(out),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Implies(a, b) | Expr::Iff(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// `None` when a flag has no value.
    pub fn eval(&self, flag: &impl Fn(&str) -> Option<bool>) -> Option<bool> {
        Some(match self {
            Expr::Const(b) => *b,
            Expr::Flag(f) => flag(f)?,
            Expr::Not(a) => !a.eval(flag)?,
            Expr::And(a, b) => a.eval(flag)? && b.eval(flag)?,
            Expr::Or(a, b) => a.eval(flag)? || b.eval(flag)?,
            Expr::Implies(a, b) => !a.eval(flag)? || b.eval(flag)?,
            Expr::Iff(a, b) => a.eval(flag)? == b.eval(flag)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bin = |f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr| write!(f, "({a} {op} {b})");
        match self {
            Expr::Const(b) => write!(f, "{b}"),
            Expr::Flag(n) => f.write_str(n),
            Expr::Not(a) => write!(f, "¬{a}"),
            Expr::And(a, b) => bin(f, a, "∧", b),
            Expr::Or(a, b) => bin(f, a, "∨", b),
            Expr::Implies(a, b) => bin(f, a, "⇒", b),
            Expr::Iff(a, b) => bin(f, a, "⇔", b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags<'a>(on: &'a [&'a str]) -> impl Fn(&str) -> Option<bool> + 'a {
        move |f| Some(on.contains(&f))
    }

    #[test]
    fn precedence() {
        let e = Expr::parse("¬sober ∧ star ∨ oplus").unwrap();
        assert_eq!(e.to_string(), "((¬sober ∧ star) ∨ oplus)");
        let e = Expr::parse("sober -> star -> oplus").unwrap();
        assert_eq!(e.to_string(), "(sober ⇒ (star ⇒ oplus))");
        let e = Expr::parse("not (sober or star) <-> c-space").unwrap();
        assert_eq!(e.to_string(), "(¬(sober ∨ star) ⇔ c_space)");
    }

    #[test]
    fn evaluation() {
        let e = Expr::parse("sup_sober && !c_space").unwrap();
        assert_eq!(e.eval(&flags(&["sup_sober"])), Some(true));
        assert_eq!(e.eval(&flags(&["sup_sober", "c_space"])), Some(false));
        assert_eq!(e.eval(&|_| None), None);
        assert_eq!(e.flags().into_iter().collect::<Vec<_>>(), ["c_space", "sup_sober"]);
    }

    #[test]
    fn bad_queries() {
        for q in ["¬t0", "sober ∧", "(sober", "sober star", "sober $ star", ""] {
            assert!(matches!(Expr::parse(q), Err(Error::BadQuery(_))), "{q}");
        }
    }
}
