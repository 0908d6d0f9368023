//! Words, the deglex order, sparse noncommutative polynomials and the
//! homomorphisms of the bi-indexed alphabet.

mod hom;
mod poly;
mod word;

use thiserror::Error;

pub use hom::{common_signature, signature_of, Hom, Signature};
pub use poly::{PolyOp, Polynomial};
pub(crate) use poly::render_terms;
pub use word::{deglex_cmp, Alphabet, Family, Generator, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("alphabet of {0} generators exceeds the supported size")]
    AlphabetTooLarge(usize),
    #[error("polynomials over different fields (char {0} and char {1})")]
    FieldMismatch(u64, u64),
    #[error("generator `{0}` is not in the bi-indexed X/Y alphabet")]
    PlainLetter(String),
}
