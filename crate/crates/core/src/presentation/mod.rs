//! Finite presentations of graded algebras: the data type, the text format
//! and the built-in catalog.

mod catalog;
mod parse;
mod serialize;

use thiserror::Error;

use crate::freealg::{Alphabet, FreeAlgError, Polynomial};
use crate::scalar::{FieldSpec, ScalarError};

pub use catalog::{builtin, catalog, CatalogEntry, CATALOG_KEYS};
pub use parse::{parse_expression, parse_presentation, ParseError};
pub use serialize::{relation_json, serialize, to_json};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("relation {index} is zero")]
    ZeroRelation { index: usize },
    #[error("relation {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("relation {index} has degree 0")]
    ConstantRelation { index: usize },
    #[error("relation {index} is over a different field")]
    FieldMismatch { index: usize },
    #[error("relation {index} uses a letter outside the alphabet")]
    LetterOutOfRange { index: usize },
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error(transparent)]
    Alphabet(#[from] FreeAlgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Generators (in monomial order), coefficient field and homogeneous relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    field: FieldSpec,
    alphabet: Alphabet,
    relations: Vec<Polynomial>,
    label: Option<String>,
}

impl Presentation {
    pub fn new(field: FieldSpec, alphabet: Alphabet, relations: Vec<Polynomial>) -> Result<Self, PresentationError> {
        for (index, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(PresentationError::ZeroRelation { index });
            }
            if r.field() != field {
                return Err(PresentationError::FieldMismatch { index });
            }
            match r.homogeneous_degree() {
                None => return Err(PresentationError::Inhomogeneous { index }),
                Some(0) => return Err(PresentationError::ConstantRelation { index }),
                Some(_) => {}
            }
            if r.terms().iter().any(|(w, _)| w.letters().iter().any(|&l| l as usize >= alphabet.len())) {
                return Err(PresentationError::LetterOutOfRange { index });
            }
        }
        Ok(Presentation { field, alphabet, relations, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().filter_map(Polynomial::homogeneous_degree).max().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.relations.iter().all(|r| r.homogeneous_degree() == Some(2))
    }
}
