use thiserror::Error;

/// Errors raised while building or analysing words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("letter names must be non-empty")]
    EmptyLetterName,
    #[error("letter name {0:?} contains whitespace or the reserved token \"<->\"")]
    InvalidLetterName(String),
    #[error("duplicate letter {0:?}")]
    DuplicateLetter(String),
    #[error("unknown letter {token:?} at byte offset {offset}")]
    UnknownLetter { token: String, offset: usize },
    #[error("letter id {0} is not part of the alphabet")]
    AlphabetMismatch(usize),
    #[error("permutation is not an involution at letter {0:?}")]
    NotInvolution(String),
    #[error("letter {0:?} is listed more than once in the theta spec")]
    ThetaLetterRepeated(String),
    #[error("window of length {got} is too short, need at least {needed}")]
    WindowTooShort { needed: usize, got: usize },
    #[error("order {n} exceeds the factor index limit {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("periodic word needs a non-empty period")]
    EmptyPeriod,
    #[error("morphism image of letter {0:?} is empty")]
    ErasingMorphism(String),
    #[error("morphism source alphabet does not match the base word")]
    MorphismMismatch,
    #[error("Sturmian directive must be a non-empty list of positive integers")]
    InvalidDirective,
    #[error("closure budget of {steps} steps exhausted at length {length}")]
    StepBudgetExceeded { steps: usize, length: usize },
    #[error("factor is its own theta image; alternation is undefined")]
    SelfImageFactor,
    #[error("word is not theta-episturmian on the window")]
    NotEpisturmian,
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
