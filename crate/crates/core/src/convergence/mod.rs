//! Nets, tail classes, topological and Irr-convergence, Kelley's axioms
//! and the location of induced topologies.

pub mod catalog;
pub mod finite;
pub mod net;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogPoint, CatalogSpace, Family};
use crate::error::{Error, Result};
use crate::space::FiniteSpace;

pub use catalog::*;
pub use finite::*;
pub use net::*;

/// Net description read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetJson {
    pub index: IndexJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub prefix: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail: Option<TailJson>,
    /// Values of a finite-index net, one per index element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexJson {
    /// `"nat"`
    Named(String),
    Preorder {
        size: usize,
        le: Vec<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TailJson {
    Constant {
        value: String,
    },
    Periodic {
        values: Vec<String>,
    },
    Monotone {
        values: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        limit: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        value: Option<String>,
    },
}

enum Shape<'a> {
    Nat(&'a [String], &'a TailJson),
    Finite(Preorder, &'a [String]),
}

impl NetJson {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn shape(&self) -> Result<Shape<'_>> {
        match &self.index {
            IndexJson::Named(n) if n == "nat" => match &self.tail {
                Some(t) => Ok(Shape::Nat(&self.prefix, t)),
                None => Err(Error::InvalidNet("an ℕ-indexed net needs a tail".into())),
            },
            IndexJson::Named(n) => Err(Error::InvalidNet(format!("unknown index {n}"))),
            IndexJson::Preorder { size, le } => {
                let values = self
                    .values
                    .as_deref()
                    .ok_or_else(|| Error::InvalidNet("a finite-index net needs values".into()))?;
                if values.len() != *size {
                    return Err(Error::InvalidNet(format!("{} values for {size} indices", values.len())));
                }
                Ok(Shape::Finite(Preorder::from_pairs(*size, le)?, values))
            }
        }
    }

    /// A net over a finite space; monotone tails other than `constant`
    /// cannot live in a finite carrier.
    pub fn to_finite(&self, s: &FiniteSpace) -> Result<ConcreteNet> {
        let idx = |v: &String| s.index_of(v);
        let all = |vs: &[String]| vs.iter().map(idx).collect::<Result<Vec<_>>>();
        match self.shape()? {
            Shape::Finite(p, values) => ConcreteNet::indexed(p, all(values)?),
            Shape::Nat(prefix, tail) => {
                let cycle = match tail {
                    TailJson::Constant { value } => vec![idx(value)?],
                    TailJson::Periodic { values } => all(values)?,
                    TailJson::Monotone {
                        values, value: Some(v), ..
                    } if values == "constant" => {
                        vec![idx(v)?]
                    }
                    TailJson::Monotone { values, .. } => {
                        return Err(Error::UndecidableTail(format!(
                            "strictly monotone generator {values} over a finite space"
                        )))
                    }
                };
                ConcreteNet::sequence(all(prefix)?, cycle)
            }
        }
    }

    /// A net over a catalog space. Finite-index nets reduce to the cycle of
    /// values on their top cluster.
    pub fn to_catalog(&self, space: &CatalogSpace) -> Result<CatalogNet> {
        let fam = space.family();
        let pt = |v: &String| space.parse_point(v);
        let all = |vs: &[String]| vs.iter().map(pt).collect::<Result<Vec<_>>>();
        let net = match self.shape()? {
            Shape::Finite(p, values) => {
                let vs = all(values)?;
                CatalogNet {
                    prefix: Vec::new(),
                    tail: TailRule::Periodic(p.top_cluster().into_iter().map(|i| vs[i]).collect()),
                }
            }
            Shape::Nat(prefix, tail) => CatalogNet {
                prefix: all(prefix)?,
                tail: match tail {
                    TailJson::Constant { value } => TailRule::Constant(pt(value)?),
                    TailJson::Periodic { values } => TailRule::Periodic(all(values)?),
                    TailJson::Monotone { values, limit, value } => {
                        let limit = limit.as_ref().map(pt).transpose()?;
                        let value = value.as_ref().map(pt).transpose()?;
                        monotone_rule(fam, values, limit, value)?
                    }
                },
            },
        };
        net.validate(fam)?;
        Ok(net)
    }
}

fn monotone_rule(
    fam: Family,
    values: &str,
    limit: Option<CatalogPoint>,
    value: Option<CatalogPoint>,
) -> Result<TailRule> {
    let g = match values {
        "constant" => {
            let v = value
                .or(limit)
                .ok_or_else(|| Error::InvalidNet("constant generator needs a value".into()))?;
            return Ok(TailRule::Constant(v));
        }
        "n" => Generator::Naturals,
        "1-1/n" | "one-minus-one-over-n" => match limit {
            Some(CatalogPoint::Rational(q)) => Generator::ApproachFromBelow(q),
            None => Generator::ApproachFromBelow(crate::catalog::rat(1, 1)),
            Some(p) => return Err(Error::UndecidableTail(format!("{values} cannot approach {p}"))),
        },
        other => return Err(Error::UndecidableTail(format!("unknown generator {other}"))),
    };
    let actual = CatalogNet::generator_limit(fam, g);
    if let Some(l) = limit {
        if actual != Some(l) {
            return Err(Error::UndecidableTail(format!(
                "declared limit {l} does not match the generator's supremum"
            )));
        }
    }
    Ok(TailRule::Monotone(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{q, CatalogName};

    #[test]
    fn parses_both_index_forms() {
        let s = FiniteSpace::from_labeled_opens(&["a", "b", "c"], &[&["c"], &["b", "c"]]).unwrap();
        let n = NetJson::parse(r#"{"index":"nat","prefix":["c","c"],"tail":{"kind":"constant","value":"a"}}"#)
            .unwrap()
            .to_finite(&s)
            .unwrap();
        assert_eq!(tail_class_of(&n).points(), s.set_of(&["a"]).unwrap());
        let n = NetJson::parse(r#"{"index":{"size":3,"le":[[0,1],[0,2]]},"values":["a","b","c"]}"#).unwrap();
        assert!(matches!(n.to_finite(&s), Err(Error::NotDirected)));
        let n = NetJson::parse(r#"{"index":{"size":3,"le":[[0,1],[1,2]]},"values":["a","b","c"]}"#).unwrap();
        assert_eq!(
            tail_class_of(&n.to_finite(&s).unwrap()).points(),
            s.set_of(&["c"]).unwrap()
        );
    }

    #[test]
    fn catalog_monotone_tails() {
        let r = CatalogSpace::new(CatalogName::RationalScott);
        let n = NetJson::parse(r#"{"index":"nat","tail":{"kind":"monotone","values":"1-1/n","limit":"1"}}"#)
            .unwrap()
            .to_catalog(&r)
            .unwrap();
        assert!(catalog_irr_converges(&r, &n, &q(1, 1)).unwrap());
        let bad = NetJson::parse(r#"{"index":"nat","tail":{"kind":"monotone","values":"n","limit":"3"}}"#).unwrap();
        assert!(matches!(bad.to_catalog(&r), Err(Error::UndecidableTail(_))));
        let w = CatalogSpace::new(CatalogName::OmegaPlusOneAlex);
        let n = NetJson::parse(r#"{"index":"nat","tail":{"kind":"monotone","values":"n","limit":"inf"}}"#)
            .unwrap()
            .to_catalog(&w)
            .unwrap();
        assert_eq!(n.tail, TailRule::Monotone(Generator::Naturals));
        let f = FiniteSpace::from_labeled_opens(&["a"], &[]).unwrap();
        let m = NetJson::parse(r#"{"index":"nat","tail":{"kind":"monotone","values":"n"}}"#).unwrap();
        assert!(matches!(m.to_finite(&f), Err(Error::UndecidableTail(_))));
    }
}
