//! Hilbert series and nilpotency from leading words, an independent
//! linear-algebra dimension oracle, the Golod–Shafarevich product and the
//! thresholds `φ_k`.

mod gs;
mod oracle;

use std::fmt;

use thiserror::Error;

use crate::automaton::PatternAutomaton;
use crate::groebner::GroebnerBasis;

pub use gs::{gs_check, phi, GsReport, Phi, PhiExact};
pub use oracle::{dim_oracle, dim_oracle_with_cap, DEFAULT_ORACLE_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("degree {requested} requested but the basis is complete only through {complete}")]
    BeyondCompleteness { requested: usize, complete: usize },
    #[error("dimension count overflowed")]
    Overflow,
    #[error("oracle problem too large: {rows} rows x {cols} columns exceeds the cap {cap}")]
    TooLarge { rows: u128, cols: u128, cap: u128 },
    #[error("φ_k needs k >= 2, got {0}")]
    BadK(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesSource {
    Groebner,
    Oracle,
}

/// `dim R_q` for `q = 0..=exact_through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub coefficients: Vec<u128>,
    pub exact_through: usize,
    pub source: SeriesSource,
}

impl HilbertData {
    /// Coefficients with trailing zeros removed.
    pub fn trimmed(&self) -> &[u128] {
        let end = self.coefficients.iter().rposition(|&c| c != 0).map_or(0, |i| i + 1);
        &self.coefficients[..end]
    }

    pub fn first_zero(&self) -> Option<usize> {
        self.coefficients.iter().position(|&c| c == 0)
    }
}

impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_series(&self.coefficients))
    }
}

/// `1 + 4t + 10t^2`, zero terms omitted.
pub fn render_series(coeffs: &[u128]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(q, &c)| match (q, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}t"),
            (q, 1) => format!("t^{q}"),
            (q, c) => format!("{c}t^{q}"),
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Counts normal words (words avoiding every leading word) of each degree.
pub fn hilbert_series(gb: &GroebnerBasis, maxdeg: usize) -> Result<HilbertData, HilbertError> {
    if maxdeg > gb.complete_through() {
        return Err(HilbertError::BeyondCompleteness { requested: maxdeg, complete: gb.complete_through() });
    }
    let lws = gb.leading_words();
    let automaton = PatternAutomaton::new(gb.alphabet().len(), lws.iter().map(|w| w.letters()));
    let coefficients = automaton.count_avoiding(maxdeg).map_err(|_| HilbertError::Overflow)?;
    Ok(HilbertData { coefficients, exact_through: maxdeg, source: SeriesSource::Groebner })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NilpotencyVerdict {
    /// Least `k` with `R_k = 0`.
    Nilpotent(usize),
    NotNilpotentWithin(usize),
}

impl NilpotencyVerdict {
    pub fn is_nilpotent(self) -> bool {
        matches!(self, NilpotencyVerdict::Nilpotent(_))
    }

    /// True when `R_k = 0` is certified.
    pub fn is_k_step(self, k: usize) -> bool {
        matches!(self, NilpotencyVerdict::Nilpotent(i) if i <= k)
    }
}

impl fmt::Display for NilpotencyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotencyVerdict::Nilpotent(k) => write!(f, "nilpotent({k})"),
            NilpotencyVerdict::NotNilpotentWithin(d) => write!(f, "not-nilpotent-within({d})"),
        }
    }
}

pub fn nilpotency_index(gb: &GroebnerBasis) -> Result<NilpotencyVerdict, HilbertError> {
    let h = hilbert_series(gb, gb.complete_through())?;
    Ok(verdict(&h))
}

/// Verdict from an exact series; panics if the series vanishes and then
/// becomes nonzero again, which no graded algebra allows.
pub fn verdict(h: &HilbertData) -> NilpotencyVerdict {
    match h.first_zero() {
        Some(k) => {
            assert!(h.coefficients[k..].iter().all(|&c| c == 0), "series revives after a zero: {h}");
            NilpotencyVerdict::Nilpotent(k)
        }
        None => NilpotencyVerdict::NotNilpotentWithin(h.exact_through),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::presentation::{builtin, parse_presentation};
    use crate::scalar::FieldSpec;

    #[test]
    fn free_algebra_series() {
        let p = parse_presentation("field 0\ngenerators a b\nrelations\n").unwrap();
        let gb = buchberger(&p, 3).unwrap();
        let h = hilbert_series(&gb, 3).unwrap();
        assert_eq!(h.coefficients, vec![1, 2, 4, 8]);
        assert_eq!(nilpotency_index(&gb).unwrap(), NilpotencyVerdict::NotNilpotentWithin(3));
    }

    #[test]
    fn one_generator_free_algebra() {
        let p = parse_presentation("field 0\ngenerators a\nrelations\n").unwrap();
        let gb = buchberger(&p, 6).unwrap();
        assert_eq!(nilpotency_index(&gb).unwrap().to_string(), "not-nilpotent-within(6)");
    }

    #[test]
    fn beyond_completeness_is_an_error() {
        let gb = buchberger(&builtin("P42", FieldSpec::rationals()).unwrap(), 3).unwrap();
        assert_eq!(
            hilbert_series(&gb, 4).unwrap_err(),
            HilbertError::BeyondCompleteness { requested: 4, complete: 3 }
        );
    }

    #[test]
    fn p45_is_four_step() {
        let gb = buchberger(&builtin("P45", FieldSpec::rationals()).unwrap(), 4).unwrap();
        let h = hilbert_series(&gb, 4).unwrap();
        assert_eq!(h.to_string(), "1 + 5t + 15t^2 + 25t^3");
        assert_eq!(nilpotency_index(&gb).unwrap(), NilpotencyVerdict::Nilpotent(4));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_series(&[1, 1]), "1 + t");
        assert_eq!(render_series(&[1, 0, 1, 0]), "1 + t^2");
        assert_eq!(render_series(&[]), "0");
    }
}
