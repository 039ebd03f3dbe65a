use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An entering state is also reached from inside the component, which
    /// means the caller computed the entering list from a wrong reached set.
    #[error("entering state {state} is already reached from inside the component")]
    EnteringOverlap { state: u32 },
    #[error("macrostate cap of {cap} exceeded")]
    MacrostateCap { cap: usize },
    #[error("acceptance formula is not a disjunction of Fin(1) and shifted parity blocks")]
    UnexpectedAcceptance,
    #[error("lasso cycle must not be empty")]
    EmptyCycle,
    #[error("letter {letter} is outside the alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: u32, alphabet_size: usize },
    #[error("automaton is not complete: state {state} has no successor on letter {letter}")]
    Incomplete { state: u32, letter: u32 },
}
