use std::fmt;

/// Which side of a matched pair an action error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Side {
    /// `g ▷ h`, the left action of `G` on the set `H`.
    Left,
    /// `g ◁ h`, the right action of `H` on the set `G`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

/// A violation of `g ▷ 1 = 1` or `1 ◁ h = 1`, reported alongside the
/// compatibility failure it implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitViolation {
    /// `g ▷ 1 ≠ 1`.
    LeftMovesIdentity { g: usize },
    /// `1 ◁ h ≠ 1`.
    RightMovesIdentity { h: usize },
}

impl fmt::Display for UnitViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitViolation::LeftMovesIdentity { g } => write!(f, "g▷1 ≠ 1 for g={g}"),
            UnitViolation::RightMovesIdentity { h } => write!(f, "1◁h ≠ 1 for h={h}"),
        }
    }
}

fn unit_note(unit: &Option<UnitViolation>) -> String {
    match unit {
        Some(u) => format!(" (also {u})"),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("index {index} out of range for a set of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("order {order} exceeds the table cap {cap}")]
    TooLarge { order: usize, cap: usize },

    #[error("table is not unital: index 0 does not act as identity at {index}")]
    NotUnital { index: usize },
    #[error("row {row} is not a permutation")]
    NonBijectiveRow { row: usize },
    #[error("column {column} is not a permutation")]
    NonBijectiveColumn { column: usize },
    #[error("not associative: ({x}·{y})·{z} ≠ {x}·({y}·{z})")]
    NonAssociative { x: usize, y: usize, z: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: conjugation by {x} moves element {h}")]
    NotNormal { x: usize, h: usize },

    #[error("{side} action is not unital at {index}")]
    ActionNotUnital { side: Side, index: usize },
    #[error("{side} action fails composition at ({a}, {b}, {c})")]
    NotAnAction {
        side: Side,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("g▷(h1h2) ≠ (g▷h1)((g◁h1)▷h2) at g={g}, h1={h1}, h2={h2}{}", unit_note(unit))]
    Compat1Violation {
        g: usize,
        h1: usize,
        h2: usize,
        unit: Option<UnitViolation>,
    },
    #[error("(g1g2)◁h ≠ (g1◁(g2▷h))(g2◁h) at g1={g1}, g2={g2}, h={h}{}", unit_note(unit))]
    Compat2Violation {
        g1: usize,
        g2: usize,
        h: usize,
        unit: Option<UnitViolation>,
    },
    #[error("invalid matched pair: {0}")]
    InvalidMatchedPair(Box<Error>),
    #[error("element {g} does not act as an automorphism: g▷({h1}·{h2}) ≠ (g▷{h1})(g▷{h2})")]
    NotAutomorphismAction { g: usize, h1: usize, h2: usize },

    #[error("map is not a homomorphism: f({x}·{y}) ≠ f({x})·f({y})")]
    NotHomomorphism { x: usize, y: usize },
    #[error("maps are not a morphism of matched pairs: {0}")]
    NotAMorphism(String),
    #[error("incompatible pair at ({0}, {1})")]
    IncompatiblePair(usize, usize),

    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),

    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("matched pair #{pair} has no isomorphic semidirect product")]
    TheoremViolation { pair: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailure(String),
    #[error("Frobenius step failed: {0}")]
    FrobeniusStepFailure(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
