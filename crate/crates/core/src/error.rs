use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter word needs at least 2 digits, got {0}")]
    TooFewDigits(usize),
    #[error("parameter word has {0} digits, at most {max} are supported", max = crate::words::MAX_ALPHABET)]
    TooManyDigits(usize),
    #[error("c_0 must be at least 1 (otherwise the morphism is not prolongable on 0)")]
    LeadingZeroDigit,
    #[error("c_{{k-1}} must be at least 1 (otherwise the morphism is erasing)")]
    TrailingZeroDigit,
    #[error("cannot parse {input:?} at byte {position}: {reason}")]
    Parse {
        input: String,
        position: usize,
        reason: String,
    },
    #[error("letter {letter} is outside the alphabet {{0,...,{}}}", .k - 1)]
    LetterOutOfRange { letter: u32, k: usize },
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("{digits} is not in the numeration language: {reason}")]
    NotInLanguage { digits: String, reason: String },
    #[error("the numeration system of c = {0} is not greedy")]
    NotGreedy(String),
    #[error("c = {0} fails the fractional power conditions, outside the scope of the Γ_n construction")]
    OutsideTheoremScope(String),
    #[error("attractor position {position} is outside 1..={len}")]
    PositionOutOfRange { position: u64, len: u64 },
    #[error("prefix length must be at least 1")]
    ZeroLength,
    #[error("comparison reached the cap of {0} letters without a mismatch (inconclusive)")]
    CapReached(u64),
    #[error("exact search is limited to words of length {cap}, got {len}")]
    SearchCapExceeded { len: usize, cap: usize },
    #[error("value {0} does not fit the machine-word positions used for prefixes")]
    Overflow(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
