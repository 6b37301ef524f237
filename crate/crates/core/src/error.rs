use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation closes a cycle through elements {0} and {1}")]
    Cycle(usize, usize),
    #[error("element index {index} out of range for {size} elements")]
    Index { index: usize, size: usize },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("poset is not bounded")]
    Unbounded,
    #[error("poset needs at least two elements")]
    TooSmall,
    #[error("invalid interval [{lo},{hi}]")]
    InvalidInterval { lo: u32, hi: u32 },
    #[error("interval out of range: {0}")]
    Range(String),
    #[error("orders are defined over different ground sets")]
    GroundMismatch,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("rank iteration did not reach a chain within {0} steps")]
    CapExceeded(usize),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid configuration: {0}")]
    Config(String),
}
