use alloc::string::String;

/// Everything that can go wrong inside the core library.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{what} exceeds the configured capacity of {limit}")]
    Capacity { what: &'static str, limit: usize },

    #[error("images do not form a permutation of 0..{degree}")]
    InvalidPermutation { degree: usize },

    #[error("permutation degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element is not in the group")]
    NotInGroup,

    #[error("not a subgroup of the given group")]
    NotASubgroup,

    #[error("cochain is not normalized")]
    NotNormalized,

    #[error("cochain is not a 2-cocycle")]
    NotACocycle,

    #[error("map is not a homomorphism into Z/{modulus}")]
    NotAHomomorphism { modulus: u32 },

    #[error("cochain modulus {modulus} cannot be embedded into presentation modulus {presentation}")]
    ModulusIncompatible { modulus: u32, presentation: u32 },

    #[error("cochains live on different host groups")]
    HostMismatch,

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
