//! Degree-truncated noncommutative Gröbner bases of graded two-sided ideals.
//!
//! Completion runs degree by degree. In degree `d` the input relations of
//! degree `d` and the S-polynomials of all overlaps with ambiguity degree
//! `d` are reduced against the (frozen) basis of degree `< d`, which can
//! happen in parallel; the results are then put in reduced row echelon form
//! serially. For homogeneous ideals this produces exactly the reduced
//! Gröbner basis truncated at `maxdeg`, whatever order pairs are handled in.

mod export;
mod integer;
mod obstruction;
mod reduce;

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::freealg::{Alphabet, Polynomial, Word};
use crate::par::{self, Execution};
use crate::presentation::{ParseError, Presentation, PresentationError};
use crate::scalar::{FieldSpec, ScalarError};

pub use export::{export_basis, parse_basis};
pub use integer::{integerize, transfer_mod_p, IntegerBasis, IntegerPolynomial, IntegerizeReport, Transfer};
pub use obstruction::{find_obstructions, overlap_lengths, Obstruction, ObstructionKind};
pub use reduce::{echelon, Reducer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("maxdeg {maxdeg} is below the relation degree {needed}")]
    MaxdegTooSmall { maxdeg: usize, needed: usize },
    #[error("integerization needs a basis over Q, got characteristic {0}")]
    NotRational(u64),
    #[error("leading coefficient {coeff} of element g{element} vanishes modulo {p}")]
    LeadingVanishes { element: usize, coeff: String, p: u64 },
    #[error("degree {requested} requested but the basis is complete only through {complete}")]
    BeyondCompleteness { requested: usize, complete: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed basis file, line {line}: {msg}")]
    Format { line: usize, msg: String },
}

#[derive(Debug, Clone, Default)]
pub struct CompletionOptions {
    pub execution: Execution,
    /// Shuffles the per-degree work lists; the result must not depend on it.
    pub shuffle_seed: Option<u64>,
}

/// Reduced, monic Gröbner basis complete through `complete_through`.
/// Elements are sorted by degree, then by leading word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    complete_through: usize,
    field: FieldSpec,
    alphabet: Alphabet,
}

/// Outcome of [`GroebnerBasis::certify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub obstructions_checked: usize,
    /// Obstructions whose S-polynomial does not reduce to zero.
    pub failures: Vec<Obstruction>,
    /// Index pairs `(i, j)` where a word of element `i` contains the leading word of `j`.
    pub not_reduced: Vec<(usize, usize)>,
    pub not_monic: Vec<usize>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty() && self.not_reduced.is_empty() && self.not_monic.is_empty()
    }
}

impl GroebnerBasis {
    /// Wraps elements that are claimed to form a reduced basis; nothing is
    /// checked here, see [`GroebnerBasis::certify`].
    pub fn from_parts(
        alphabet: Alphabet,
        field: FieldSpec,
        mut elements: Vec<Polynomial>,
        complete_through: usize,
    ) -> Self {
        elements.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
        GroebnerBasis { elements, complete_through, field, alphabet }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn complete_through(&self) -> usize {
        self.complete_through
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.elements.iter().map(|g| g.leading_word().expect("nonzero").clone()).collect()
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer::new(self.alphabet.len(), self.field, &self.elements)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.reducer().normal_form(f)
    }

    /// Checks the reduced-basis invariants and that every obstruction of
    /// degree at most `complete_through` resolves.
    pub fn certify(&self, exec: Execution) -> Certificate {
        let reducer = self.reducer();
        let obstructions = find_obstructions(&self.elements, self.complete_through);
        let fails = par::map(exec, &obstructions, |o| !reducer.normal_form(&o.s_polynomial(&self.elements)).is_zero());
        let failures = obstructions.iter().zip(fails).filter(|(_, f)| *f).map(|(o, _)| o.clone()).collect();
        let not_monic = (0..self.elements.len())
            .filter(|&i| !self.elements[i].leading_coeff().is_some_and(|c| c.is_one()))
            .collect();
        let mut not_reduced = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            for (j, h) in self.elements.iter().enumerate() {
                let lw = h.leading_word().expect("nonzero").letters();
                let hit = g.terms().iter().enumerate().any(|(k, (w, _))| (i != j || k > 0) && w.contains(lw));
                if hit {
                    not_reduced.push((i, j));
                }
            }
        }
        Certificate { obstructions_checked: obstructions.len(), failures, not_reduced, not_monic }
    }

    /// Same basis viewed as complete through a smaller degree.
    pub fn truncate(&self, degree: usize) -> GroebnerBasis {
        let elements =
            self.elements.iter().filter(|g| g.leading_word().is_some_and(|w| w.degree() <= degree)).cloned().collect();
        GroebnerBasis {
            elements,
            complete_through: degree.min(self.complete_through),
            field: self.field,
            alphabet: self.alphabet.clone(),
        }
    }
}

/// Reduced Gröbner basis of the relation ideal of `p`, complete through
/// `maxdeg`, with default options.
pub fn buchberger(p: &Presentation, maxdeg: usize) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(p, maxdeg, &CompletionOptions::default())
}

pub fn buchberger_with(
    p: &Presentation,
    maxdeg: usize,
    opts: &CompletionOptions,
) -> Result<GroebnerBasis, GroebnerError> {
    let needed = p.max_relation_degree();
    if maxdeg < needed {
        return Err(GroebnerError::MaxdegTooSmall { maxdeg, needed });
    }
    let field = p.field();
    let n_letters = p.alphabet().len();
    let mut rng = opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64);

    let mut by_degree: BTreeMap<usize, Vec<&Polynomial>> = BTreeMap::new();
    for r in p.relations() {
        by_degree.entry(r.homogeneous_degree().expect("validated")).or_default().push(r);
    }

    let mut elements: Vec<Polynomial> = Vec::new();
    // overlaps waiting for their ambiguity degree
    let mut pending: BTreeMap<usize, Vec<Obstruction>> = BTreeMap::new();

    for d in 1..=maxdeg {
        let mut obstructions = pending.remove(&d).unwrap_or_default();
        let relations: Vec<&Polynomial> = by_degree.remove(&d).unwrap_or_default();
        if obstructions.is_empty() && relations.is_empty() {
            continue;
        }
        let mut order: Vec<usize> = (0..obstructions.len() + relations.len()).collect();
        match rng.as_mut() {
            Some(rng) => order.shuffle(rng),
            None => obstructions.sort_by(|a, b| (&a.word, a.left, a.right).cmp(&(&b.word, b.left, b.right))),
        }

        let reducer = Reducer::new(n_letters, field, &elements);
        let n_obs = obstructions.len();
        let reduced = par::map(opts.execution, &order, |&k| {
            let f = if k < n_obs { obstructions[k].s_polynomial(&elements) } else { relations[k - n_obs].clone() };
            reducer.normal_form(&f)
        });
        let fresh = echelon(reduced.into_iter().filter(|r| !r.is_zero()));

        let start = elements.len();
        elements.extend(fresh);
        let mut found = Vec::new();
        for k in start..elements.len() {
            for i in 0..=k {
                obstruction::overlaps_between(&elements, i, k, maxdeg, &mut found);
                if i != k {
                    obstruction::overlaps_between(&elements, k, i, maxdeg, &mut found);
                }
            }
        }
        for o in found {
            pending.entry(o.degree()).or_default().push(o);
        }
    }

    Ok(GroebnerBasis { elements, complete_through: maxdeg, field, alphabet: p.alphabet().clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{builtin, parse_presentation};

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    #[test]
    fn free_algebra_has_empty_basis() {
        let p = parse_presentation("field 0\ngenerators a b\nrelations\n").unwrap();
        let gb = buchberger(&p, 5).unwrap();
        assert!(gb.is_empty());
        assert_eq!(gb.complete_through(), 5);
    }

    #[test]
    fn maxdeg_below_relations() {
        let p = builtin("R31", q()).unwrap();
        assert_eq!(buchberger(&p, 1), Err(GroebnerError::MaxdegTooSmall { maxdeg: 1, needed: 2 }));
    }

    #[test]
    fn single_monomial() {
        let p = builtin("P41", q()).unwrap();
        let gb = buchberger(&p, 6).unwrap();
        assert_eq!(gb.len(), 1);
        assert!(gb.certify(Execution::Sequential).is_valid());
    }

    #[test]
    fn sorted_by_degree_then_leading_word() {
        let gb = buchberger(&builtin("P43", q()).unwrap(), 5).unwrap();
        let lws = gb.leading_words();
        assert!(lws.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn r31_is_certified() {
        let gb = buchberger(&builtin("R31", q()).unwrap(), 6).unwrap();
        let cert = gb.certify(Execution::default());
        assert!(cert.is_valid(), "{cert:?}");
        assert!(cert.obstructions_checked > 0);
    }

    #[test]
    fn shuffled_runs_agree() {
        let p = builtin("R32", FieldSpec::new(3).unwrap()).unwrap();
        let base = buchberger(&p, 5).unwrap();
        for seed in [1, 7, 42] {
            let opts = CompletionOptions { execution: Execution::Sequential, shuffle_seed: Some(seed) };
            assert_eq!(buchberger_with(&p, 5, &opts).unwrap(), base);
        }
    }

    #[test]
    fn truncation_drops_high_degree() {
        let gb = buchberger(&builtin("R31", q()).unwrap(), 6).unwrap();
        let t = gb.truncate(3);
        assert_eq!(t.complete_through(), 3);
        assert!(t.leading_words().iter().all(|w| w.degree() <= 3));
    }
}
