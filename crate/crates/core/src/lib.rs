//! Exact computation with finitely presented graded associative algebras:
//! truncated noncommutative Gröbner bases, Hilbert series, nilpotency
//! certification and the inflation construction for quadratic algebras.

pub mod automaton;
pub mod corpus;
pub mod freealg;
pub mod groebner;
pub mod hilbert;
pub mod inflate;
pub mod par;
pub mod presentation;
pub mod scalar;

pub use freealg::{Alphabet, Polynomial, Word};
pub use groebner::{buchberger, CompletionOptions, GroebnerBasis};
pub use hilbert::{hilbert_series, nilpotency_index, HilbertData, NilpotencyVerdict};
pub use presentation::{builtin, parse_presentation, Presentation};
pub use scalar::{FieldSpec, Scalar};
