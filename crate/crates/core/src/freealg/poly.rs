use std::collections::BTreeMap;

use crate::scalar::{FieldSpec, Scalar};

use super::{Alphabet, FreeAlgError, Letter, Word};

/// A sparse element of the free algebra. Terms are stored leading-first
/// (deglex descending) with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Word, Scalar)>,
    field: FieldSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { terms: Vec::new(), field }
    }

    pub fn monomial(field: FieldSpec, word: Word, coeff: Scalar) -> Self {
        assert_eq!(coeff.field(), field, "coefficient field mismatch");
        if coeff.is_zero() {
            return Polynomial::zero(field);
        }
        Polynomial { terms: vec![(word, coeff)], field }
    }

    pub fn word(field: FieldSpec, word: Word) -> Self {
        Polynomial::monomial(field, word, field.one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        for (w, c) in terms {
            assert_eq!(c.field(), field, "coefficient field mismatch");
            match acc.get_mut(&w) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(w, c);
                }
            }
        }
        Self::from_sorted_map(field, acc)
    }

    pub(crate) fn from_sorted_map(field: FieldSpec, map: BTreeMap<Word, Scalar>) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { terms, field }
    }

    /// Terms must already be strictly descending with nonzero coefficients.
    pub(crate) fn from_descending(field: FieldSpec, terms: Vec<(Word, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms, field }
    }

    /// Integer-coefficient constructor used by the catalog and tests.
    pub fn from_int_terms(field: FieldSpec, terms: &[(i64, &[Letter])]) -> Self {
        Polynomial::from_terms(field, terms.iter().map(|(c, w)| (Word::from_letters(w), field.from_i64(*c))))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &[(Word, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn tail(&self) -> &[(Word, Scalar)] {
        if self.terms.is_empty() {
            &[]
        } else {
            &self.terms[1..]
        }
    }

    /// Common degree of all terms, or `None` for zero / inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(w, _)| w.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coeff_of(&self, w: &Word) -> Option<&Scalar> {
        self.terms.binary_search_by(|(t, _)| w.cmp(t)).ok().map(|i| &self.terms[i].1)
    }

    fn check(&self, other: &Polynomial) -> Result<(), FreeAlgError> {
        if self.field != other.field {
            Err(FreeAlgError::FieldMismatch(self.field.characteristic(), other.field.characteristic()))
        } else {
            Ok(())
        }
    }

    pub fn op(&self, other: &Polynomial, op: PolyOp) -> Result<Polynomial, FreeAlgError> {
        self.check(other)?;
        Ok(match op {
            PolyOp::Add => self.add_scaled(other, &self.field.one()),
            PolyOp::Sub => self.add_scaled(other, &-self.field.one()),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, FreeAlgError> {
        self.op(other, PolyOp::Add)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, FreeAlgError> {
        self.op(other, PolyOp::Sub)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, FreeAlgError> {
        self.op(other, PolyOp::Mul)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Polynomial, FreeAlgError> {
        if c.field() != self.field {
            return Err(FreeAlgError::FieldMismatch(self.field.characteristic(), c.field().characteristic()));
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.field));
        }
        Ok(Polynomial { terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(), field: self.field })
    }

    /// `self + c·other` by merging the two descending term lists.
    pub(crate) fn add_scaled(&self, other: &Polynomial, c: &Scalar) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => std::cmp::Ordering::Greater,
                _ => std::cmp::Ordering::Less,
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let k = &other.terms[j].1 * c;
                    if !k.is_zero() {
                        out.push((other.terms[j].0.clone(), k));
                    }
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let k = &self.terms[i].1 + &(&other.terms[j].1 * c);
                    if !k.is_zero() {
                        out.push((self.terms[i].0.clone(), k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out, field: self.field }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.terms
                .iter()
                .flat_map(|(u, a)| other.terms.iter().map(move |(v, b)| (u.concat(v), a * b))),
        )
    }

    /// `left · self · right` for words; deglex is multiplicative so order is kept.
    pub fn sandwich(&self, left: &[Letter], right: &[Letter]) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (Word::sandwich(left, w.letters(), right), c.clone())).collect(),
            field: self.field,
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => {
                let inv = c.inverse().expect("nonzero leading coefficient");
                self.scale(&inv).expect("same field")
            }
        }
    }

    /// Applies a letter map to every word and re-normalizes.
    pub fn map_words<E>(&self, mut f: impl FnMut(&Word) -> Result<Word, E>) -> Result<Polynomial, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (w, c) in &self.terms {
            terms.push((f(w)?, c.clone()));
        }
        Ok(Polynomial::from_terms(self.field, terms))
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        render_terms(self.terms.iter().map(|(w, c)| (alphabet.render_word(w), c.to_string())))
    }
}

/// Renders `(word, coefficient)` pairs as `w1 - 3 w2 + ...`.
pub(crate) fn render_terms(terms: impl Iterator<Item = (String, String)>) -> String {
    let mut out = String::new();
    for (i, (w, c)) in terms.enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" || w == "1" {
            out.push_str(&mag);
            if w != "1" {
                out.push(' ');
            }
        }
        if w != "1" {
            out.push_str(&w);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Alphabet, FieldSpec) {
        (Alphabet::plain(&["a", "b", "c"]).unwrap(), FieldSpec::rationals())
    }

    fn p(a: &Alphabet, f: FieldSpec, terms: &[(i64, &str)]) -> Polynomial {
        Polynomial::from_terms(
            f,
            terms.iter().map(|(c, w)| {
                let letters: Vec<Letter> = w.chars().map(|ch| a.letter(&ch.to_string()).unwrap()).collect();
                (Word::from(letters), f.from_i64(*c))
            }),
        )
    }

    #[test]
    fn concatenation_product() {
        let (a, f) = setup();
        let ab = p(&a, f, &[(1, "ab")]);
        let c = p(&a, f, &[(1, "c")]);
        assert_eq!(ab.try_mul(&c).unwrap(), p(&a, f, &[(1, "abc")]));
    }

    #[test]
    fn noncommutative_difference_of_squares() {
        let (a, f) = setup();
        let l = p(&a, f, &[(1, "a"), (1, "b")]);
        let r = p(&a, f, &[(1, "a"), (-1, "b")]);
        let expect = p(&a, f, &[(1, "aa"), (-1, "ab"), (1, "ba"), (-1, "bb")]);
        assert_eq!(l.try_mul(&r).unwrap(), expect);
        assert_eq!(expect.render(&a), "-bb + ba - ab + aa");
    }

    #[test]
    fn cancellation_in_sum() {
        let (a, f) = setup();
        let x = p(&a, f, &[(1, "cb"), (-1, "bc"), (1, "aa")]);
        let y = p(&a, f, &[(1, "bc"), (-1, "cb")]);
        assert_eq!(x.try_add(&y).unwrap(), p(&a, f, &[(1, "aa")]));
        assert!(x.try_sub(&x).unwrap().is_zero());
    }

    #[test]
    fn leading_term_first() {
        let (a, f) = setup();
        let x = p(&a, f, &[(1, "aa"), (-1, "bc"), (1, "cb")]);
        assert_eq!(a.render_word(x.leading_word().unwrap()), "cb");
        assert_eq!(x.render(&a), "cb - bc + aa");
        assert_eq!(x.homogeneous_degree(), Some(2));
    }

    #[test]
    fn field_mismatch_is_error() {
        let (a, f) = setup();
        let x = p(&a, f, &[(1, "a")]);
        let y = p(&a, FieldSpec::new(3).unwrap(), &[(1, "a")]);
        assert!(matches!(x.try_add(&y), Err(FreeAlgError::FieldMismatch(0, 3))));
        assert!(x.scale(&FieldSpec::new(3).unwrap().one()).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec((-3i64..4, proptest::collection::vec(0u16..3, 0..4)), 0..5).prop_map(|ts| {
                let f = FieldSpec::rationals();
                Polynomial::from_terms(f, ts.into_iter().map(|(c, w)| (Word::from(w), f.from_i64(c))))
            })
        }

        proptest! {
            #[test]
            fn ring_laws(x in poly(), y in poly(), z in poly()) {
                let xy_z = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
                let x_yz = x.try_mul(&y.try_mul(&z).unwrap()).unwrap();
                prop_assert_eq!(xy_z, x_yz);
                let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
                let rhs = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
                let lhs = x.try_add(&y).unwrap().try_mul(&z).unwrap();
                let rhs = x.try_mul(&z).unwrap().try_add(&y.try_mul(&z).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn deglex_is_multiplicative(
                u in proptest::collection::vec(0u16..3, 0..5),
                v in proptest::collection::vec(0u16..3, 0..5),
                w in proptest::collection::vec(0u16..3, 0..4),
            ) {
                let (u, v, w) = (Word::from(u), Word::from(v), Word::from(w));
                if u < v {
                    prop_assert!(w.concat(&u) < w.concat(&v));
                    prop_assert!(u.concat(&w) < v.concat(&w));
                }
                // totality / antisymmetry
                prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
            }
        }
    }
}
