//! Exact coefficient arithmetic over the rationals and prime fields.
//!
//! Characteristic 0 uses arbitrary precision rationals; characteristic `p`
//! stores canonical residues in `0..p`. Operands from different fields are
//! rejected by the checked API ([`Scalar::arith`]); the operator impls treat
//! a field mismatch as a logic error and panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest supported prime characteristic. Residue products must fit in `u64`.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("characteristic {0} is neither 0 nor a prime")]
    NotPrime(u64),
    #[error("characteristic {0} exceeds the supported maximum {MAX_CHARACTERISTIC}")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields (char {0} and char {1})")]
    FieldMismatch(u64, u64),
    #[error("cannot normalize an all-zero coefficient vector")]
    AllZero,
}

/// The coefficient field: ℚ when `characteristic == 0`, otherwise 𝔽_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

/// Deterministic trial division; characteristics in practice are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<Self, ScalarError> {
        if characteristic != 0 {
            if characteristic > MAX_CHARACTERISTIC {
                return Err(ScalarError::TooLarge(characteristic));
            }
            if !is_prime(characteristic) {
                return Err(ScalarError::NotPrime(characteristic));
            }
        }
        Ok(FieldSpec { characteristic })
    }

    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.from_bigint(&BigInt::from(v))
    }

    /// Maps an integer into the field (`c + pℤ` in characteristic `p`).
    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        if self.characteristic == 0 {
            Scalar::Rational(BigRational::from_integer(v.clone()))
        } else {
            let p = BigInt::from(self.characteristic);
            let r = v.mod_floor(&p).to_u64().expect("residue fits in u64");
            Scalar::Modular { value: r, modulus: self.characteristic }
        }
    }

    /// Maps a rational into the field. Fails if the denominator vanishes mod `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar, ScalarError> {
        if self.characteristic == 0 {
            return Ok(Scalar::Rational(v.clone()));
        }
        let num = self.from_bigint(v.numer());
        let den = self.from_bigint(v.denom());
        num.checked_div(&den)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.characteristic == 0 {
            write!(f, "Q")
        } else {
            write!(f, "F_{}", self.characteristic)
        }
    }
}

/// An element of ℚ or 𝔽_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::rationals(),
            Scalar::Modular { modulus, .. } => FieldSpec { characteristic: *modulus },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<(), ScalarError> {
        let (a, b) = (self.field().characteristic, other.field().characteristic);
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(a, b))
        }
    }

    /// Checked field arithmetic.
    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        Ok(match op {
            ArithOp::Add => self + other,
            ArithOp::Sub => self - other,
            ArithOp::Mul => self * other,
            ArithOp::Div => return self.checked_div(other),
        })
    }

    pub fn inverse(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Modular { value, modulus } => {
                if *value == 0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Modular { value: mod_pow(*value, modulus - 2, *modulus), modulus: *modulus })
                }
            }
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check_same(other)?;
        Ok(self * &other.inverse()?)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $q:expr, $m:expr) => {
        #[allow(clippy::suspicious_arithmetic_impl)]
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($q(a, b)),
                    (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                        if p == q =>
                    {
                        Scalar::Modular { value: $m(*a, *b, *p), modulus: *p }
                    }
                    (a, b) => panic!(
                        "scalar field mismatch: char {} vs char {}",
                        a.field().characteristic(),
                        b.field().characteristic()
                    ),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Clears denominators and divides by the content, so the result is a
/// primitive integer vector whose first nonzero entry is positive.
pub fn integer_normalize(coeffs: &[BigRational]) -> Result<Vec<BigInt>, ScalarError> {
    let lead = coeffs.iter().find(|c| !c.is_zero()).ok_or(ScalarError::AllZero)?;
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let flip = lead.is_negative();
    for c in ints.iter_mut() {
        *c = &*c / &content;
        if flip {
            *c = -&*c;
        }
    }
    Ok(ints)
}

/// Componentwise residues `c + pℤ`.
pub fn reduce_mod(coeffs: &[BigInt], p: u64) -> Result<Vec<Scalar>, ScalarError> {
    if p == 0 || !is_prime(p) {
        return Err(ScalarError::NotPrime(p));
    }
    let field = FieldSpec::new(p)?;
    Ok(coeffs.iter().map(|c| field.from_bigint(c)).collect())
}

/// `true` iff `|v| = 2^j` for some `j ≥ 0`.
pub fn is_signed_power_of_two(v: &BigInt) -> bool {
    let m = v.magnitude();
    !m.is_zero() && (m & (m - 1u32)).is_zero()
}
