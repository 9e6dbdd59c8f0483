use thiserror::Error;

use crate::si::DerivedSpaceTrace;

#[derive(Debug, Error)]
pub enum Error {
    #[error("points `{0}` and `{1}` have the same open neighbourhoods (space is not T0)")]
    NotT0(String, String),
    #[error("carrier of {0} points exceeds the limit of {max}", max = crate::MAX_POINTS)]
    CarrierTooLarge(usize),
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("relation is not a partial order: {0}")]
    InvalidPoset(String),
    #[error("operation needs a nonempty set")]
    EmptySet,
    #[error("set {0} is not open")]
    NotOpen(String),
    #[error("set {0} is not closed")]
    NotClosed(String),
    #[error("no fixpoint within fuel {fuel}")]
    FuelExhausted {
        fuel: usize,
        partial: Box<DerivedSpaceTrace>,
    },
    #[error("unknown catalog space `{0}`")]
    UnknownSpace(String),
    #[error("catalog oracle disagrees with probe: {0}")]
    OracleMismatch(String),
    #[error("tail rule cannot decide: {0}")]
    UndecidableTail(String),
    #[error("selector is not cofinal: {0}")]
    NotCofinal(String),
    #[error("index set is not directed")]
    NotDirected,
    #[error("invalid net: {0}")]
    InvalidNet(String),
    #[error("budget {0} exceeded")]
    BudgetExceeded(usize),
    #[error("enumeration size {0} is too large")]
    TooLarge(usize),
    #[error("bad query: {0}")]
    BadQuery(String),
    #[error("carriers differ ({0} vs {1} points)")]
    CarrierMismatch(usize, usize),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
