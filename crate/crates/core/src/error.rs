use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight parity: k={k} is not admissible for component a={a} (need {need})")]
    WeightParity { k: i64, a: u8, need: &'static str },

    #[error("component out of range: a={0} (need 0..=3)")]
    ComponentOutOfRange(i64),

    #[error("weight out of modeled range: k={0} (need even k >= 4)")]
    WeightOutOfRange(i64),

    #[error("not 5-integral: valuation {0} is negative")]
    NotIntegral(i64),

    #[error("precision must be at least 1")]
    ZeroPrecision,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("minor size must be at least 1")]
    EmptyMinor,

    #[error("newton polygon needs at least one point")]
    EmptyPolygon,

    #[error("newton polygon needs a finite point at index 0")]
    MissingOrigin,

    #[error("characteristic valuations did not stabilize before n={cap}")]
    NotStabilized { cap: usize },

    #[error("weight k={k} exceeds the configured cap {cap}")]
    CapExceeded { k: i64, cap: i64 },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}
