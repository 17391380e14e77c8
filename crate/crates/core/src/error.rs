use thiserror::Error;

use crate::permutations::Pattern;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("NonBinaryCharacter: {ch:?} at position {position}")]
    NonBinaryCharacter { ch: char, position: usize },

    #[error("UnbalancedCounts: {north} north steps and {east} east steps")]
    UnbalancedCounts { north: usize, east: usize },

    #[error("PrefixViolation: prefix of length {position} has more east than north steps")]
    PrefixViolation { position: usize },

    #[error("empty path")]
    EmptyPath,

    #[error("NotAvoiding{0}: permutation contains the pattern {0}")]
    NotAvoiding(Pattern),

    #[error("position {0} is not an ascent")]
    NotAnAscent(usize),

    #[error("no 231-avoiding permutation has this descent data: {0}")]
    InconsistentDescentData(String),

    #[error("invalid valley set: {0}")]
    InvalidValleySet(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("q-binomial [{k} choose {l}] requested with l > k")]
    BinomialRange { k: usize, l: usize },

    #[error("NegativeExponent: substitution produces a negative power of q")]
    NegativeExponent,

    #[error("NoAssignment: no k_D assignment exists for n = {0}")]
    NoAssignment(usize),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("ResourceLimit: n = {n} exceeds the ceiling {max_n}")]
    ResourceLimit { n: usize, max_n: usize },

    #[error("internal error: {0}")]
    Internal(String),
}
