use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("symbol {symbol} at index {index} is outside alphabet of size {alphabet_size}")]
    SymbolOutOfRange {
        index: usize,
        symbol: u8,
        alphabet_size: usize,
    },
    #[error("position {position} is outside a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("positions must be strictly increasing")]
    UnsortedPositions,
    #[error("empty word")]
    EmptyWord,
    #[error("length {len} is out of range 1..={max}")]
    LengthOutOfRange { len: usize, max: usize },
    #[error("morphism is not prolongable on seed {seed}")]
    NotProlongable { seed: u8 },
    #[error("requested prefix of length {requested} exceeds the budget of {budget} symbols")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("digit {digit} is outside base {base}")]
    DigitOutOfRange { digit: u8, base: usize },
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("arithmetic overflow computing {0}")]
    Overflow(String),
    #[error("index {index} is below the minimum {min} for {what}")]
    IndexTooSmall {
        what: &'static str,
        index: usize,
        min: usize,
    },
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("malformed morphism spec: {0}")]
    MalformedMorphism(String),
    #[error("malformed DFAO: {0}")]
    MalformedDfao(String),
    #[error("{0}")]
    Io(String),
    #[error("window of length {window} is too short for factor length {len}")]
    WindowTooShort { len: usize, window: usize },
    #[error("construction failed verification: uncovered factor at ({start}, {len})")]
    ConstructionFailed { start: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
