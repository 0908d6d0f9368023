use num_bigint::BigInt;
use num_rational::BigRational;

use crate::freealg::{render_terms, Alphabet, Polynomial, Word};
use crate::par::Execution;
use crate::scalar::{integer_normalize, is_signed_power_of_two, reduce_mod, FieldSpec, ScalarError};

use crate::presentation::Presentation;

use super::{buchberger_with, Certificate, CompletionOptions, GroebnerBasis, GroebnerError};

/// Primitive integer polynomial, terms leading-first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    pub terms: Vec<(Word, BigInt)>,
}

impl IntegerPolynomial {
    pub fn leading_coeff(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn leading_word(&self) -> &Word {
        &self.terms[0].0
    }

    pub fn to_rational(&self) -> Polynomial {
        let q = FieldSpec::rationals();
        Polynomial::from_terms(q, self.terms.iter().map(|(w, c)| (w.clone(), q.from_bigint(c))))
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        render_terms(self.terms.iter().map(|(w, c)| (alphabet.render_word(w), c.to_string())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerBasis {
    pub alphabet: Alphabet,
    pub complete_through: usize,
    pub elements: Vec<IntegerPolynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerizeReport {
    pub leading: Vec<BigInt>,
    /// Indices of elements whose leading coefficient is not `±2^j`.
    pub offenders: Vec<usize>,
}

impl IntegerizeReport {
    pub fn all_signed_powers_of_two(&self) -> bool {
        self.offenders.is_empty()
    }
}

/// Scales every element of a basis over Q to a primitive integer
/// polynomial with positive leading coefficient.
pub fn integerize(gb: &GroebnerBasis) -> Result<(IntegerBasis, IntegerizeReport), GroebnerError> {
    if !gb.field().is_rational() {
        return Err(GroebnerError::NotRational(gb.field().characteristic()));
    }
    let mut elements = Vec::with_capacity(gb.len());
    for g in gb.elements() {
        let coeffs: Vec<BigRational> =
            g.terms().iter().map(|(_, c)| c.as_rational().expect("rational field").clone()).collect();
        let ints = integer_normalize(&coeffs)?;
        elements.push(IntegerPolynomial { terms: g.terms().iter().map(|(w, _)| w.clone()).zip(ints).collect() });
    }
    let leading: Vec<BigInt> = elements.iter().map(|e| e.leading_coeff().clone()).collect();
    let offenders = (0..leading.len()).filter(|&i| !is_signed_power_of_two(&leading[i])).collect();
    let basis = IntegerBasis { alphabet: gb.alphabet().clone(), complete_through: gb.complete_through(), elements };
    Ok((basis, IntegerizeReport { leading, offenders }))
}

#[derive(Debug, Clone)]
pub struct Transfer {
    pub basis: GroebnerBasis,
    pub certificate: Certificate,
    pub leading_words_unchanged: bool,
    /// Positions of defining relations, reduced mod `p`, that the
    /// transferred basis does not reduce to zero.
    pub relations_not_reduced: Vec<usize>,
    /// Positions of transferred elements that do not lie in the ideal of
    /// the relations mod `p`.
    pub outside_ideal: Vec<usize>,
    /// Basis computed directly over F_p from the relations.
    pub direct: GroebnerBasis,
}

impl Transfer {
    /// The reductions mod `p` form the reduced basis of the F_p ideal with
    /// the characteristic-0 leading words.
    pub fn is_valid(&self) -> bool {
        self.certificate.is_valid()
            && self.leading_words_unchanged
            && self.relations_not_reduced.is_empty()
            && self.outside_ideal.is_empty()
    }
}

/// Reduces an integer basis of the ideal of `relations` (over Q) modulo
/// `p`, makes it monic and checks that the result is the Gröbner basis of
/// the ideal of the relations mod `p` through `maxdeg`: every obstruction
/// resolves, every relation reduces to zero and every element lies in the
/// ideal, the last checked against a direct completion over F_p.
pub fn transfer_mod_p(
    ib: &IntegerBasis,
    relations: &Presentation,
    p: u64,
    maxdeg: usize,
    exec: Execution,
) -> Result<Transfer, GroebnerError> {
    if p < 2 {
        return Err(ScalarError::NotPrime(p).into());
    }
    let field = FieldSpec::new(p)?;
    if !relations.field().is_rational() {
        return Err(GroebnerError::NotRational(relations.field().characteristic()));
    }
    if maxdeg > ib.complete_through {
        return Err(GroebnerError::BeyondCompleteness { requested: maxdeg, complete: ib.complete_through });
    }
    let mut elements = Vec::new();
    let mut unchanged = true;
    for (idx, e) in ib.elements.iter().enumerate() {
        if e.leading_word().degree() > maxdeg {
            continue;
        }
        let ints: Vec<BigInt> = e.terms.iter().map(|(_, c)| c.clone()).collect();
        let residues = reduce_mod(&ints, p)?;
        if residues[0].is_zero() {
            return Err(GroebnerError::LeadingVanishes { element: idx + 1, coeff: e.leading_coeff().to_string(), p });
        }
        let poly = Polynomial::from_terms(field, e.terms.iter().map(|(w, _)| w.clone()).zip(residues)).monic();
        unchanged &= poly.leading_word() == Some(e.leading_word());
        elements.push(poly);
    }
    let basis = GroebnerBasis::from_parts(ib.alphabet.clone(), field, elements, maxdeg);
    let certificate = basis.certify(exec);

    let mut reduced = Vec::new();
    for r in relations.relations() {
        let terms = r
            .terms()
            .iter()
            .map(|(w, c)| Ok((w.clone(), field.from_rational(c.as_rational().expect("rational field"))?)))
            .collect::<Result<Vec<_>, ScalarError>>()?;
        reduced.push(Polynomial::from_terms(field, terms));
    }
    let relations_not_reduced = reduced
        .iter()
        .enumerate()
        .filter(|(_, r)| r.homogeneous_degree().is_some_and(|d| d <= maxdeg) && !basis.normal_form(r).is_zero())
        .map(|(i, _)| i)
        .collect();
    let nonzero: Vec<Polynomial> = reduced.into_iter().filter(|r| !r.is_zero()).collect();
    let modp = Presentation::new(field, ib.alphabet.clone(), nonzero)?;
    let direct = buchberger_with(&modp, maxdeg, &CompletionOptions { execution: exec, shuffle_seed: None })?;
    let outside_ideal =
        (0..basis.len()).filter(|&i| !direct.normal_form(&basis.elements()[i]).is_zero()).collect();
    Ok(Transfer {
        basis,
        certificate,
        leading_words_unchanged: unchanged,
        relations_not_reduced,
        outside_ideal,
        direct,
    })
}
