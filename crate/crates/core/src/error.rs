use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base k={k}: expected 2 <= k <= {sigma}")]
    InvalidBase { k: u64, sigma: usize },

    #[error("alphabet size override {requested} is smaller than the text alphabet ({actual})")]
    SigmaTooSmall { requested: usize, actual: usize },

    #[error("at least {required} input strings are needed, got {got}")]
    TooFewTexts { required: usize, got: usize },

    #[error("state budget exceeded: construction needs {required} states, budget is {budget}")]
    StateBudget { required: u128, budget: usize },

    #[error("enumeration budget exceeded: {required} patterns, budget is {budget}")]
    EnumerationBudget { required: u128, budget: usize },

    #[error("cannot generate random text over {0} symbols (supported: 1..=256)")]
    RandomAlphabet(usize),

    #[error("unsupported document version {0}")]
    Version(u64),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("invalid automaton: {0}")]
    Invalid(String),
}
