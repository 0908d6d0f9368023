use std::fmt;

use num_integer::Roots;

use super::{HilbertData, HilbertError};

/// `h(t)·(1 - n t + d t^2)` and whether it dominates `1` coefficientwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsReport {
    pub product: Vec<i128>,
    /// True when `h` vanishes somewhere, so the whole product is known.
    pub complete: bool,
    pub first_violation: Option<usize>,
}

impl GsReport {
    pub fn pass(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (q, &c) in self.product.iter().enumerate().filter(|(_, &c)| c != 0) {
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            match (q, mag) {
                (0, m) => out.push_str(&m.to_string()),
                (1, 1) => out.push('t'),
                (1, m) => out.push_str(&format!("{m}t")),
                (q, 1) => out.push_str(&format!("t^{q}")),
                (q, m) => out.push_str(&format!("{m}t^{q}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Coefficients `0..=exact_through` of the product are determined by the
/// known part of `h`; once `h` has vanished, all of them are.
pub fn gs_check(h: &HilbertData, n: u64, d: u64) -> Result<GsReport, HilbertError> {
    let complete = h.first_zero().is_some();
    let hs: Vec<i128> =
        h.coefficients.iter().map(|&c| i128::try_from(c).map_err(|_| HilbertError::Overflow)).collect::<Result<_, _>>()?;
    let len = if complete { hs.len() + 2 } else { hs.len() };
    let at = |i: isize| if i < 0 || i as usize >= hs.len() { 0 } else { hs[i as usize] };
    let (n, d) = (n as i128, d as i128);
    let mut product = Vec::with_capacity(len);
    for q in 0..len as isize {
        let v = n
            .checked_mul(at(q - 1))
            .and_then(|a| at(q).checked_sub(a))
            .and_then(|a| d.checked_mul(at(q - 2)).and_then(|b| a.checked_add(b)))
            .ok_or(HilbertError::Overflow)?;
        product.push(v);
    }
    if complete {
        while product.last() == Some(&0) {
            product.pop();
        }
    }
    let first_violation = product.iter().enumerate().position(|(q, &c)| if q == 0 { c < 1 } else { c < 0 });
    Ok(GsReport { product, complete, first_violation })
}

impl fmt::Display for GsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.render(), if self.pass() { "pass" } else { "FAIL" })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiExact {
    /// `num / den`
    Rational(u64, u64),
    /// `(3 - √5) / 2`
    ThreeMinusRootFiveOverTwo,
}

/// `φ_k = 1 / (4 cos²(π/(k+1)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phi {
    pub k: usize,
    pub value: f64,
    pub exact: Option<PhiExact>,
}

pub fn phi(k: usize) -> Result<Phi, HilbertError> {
    if k < 2 {
        return Err(HilbertError::BadK(k));
    }
    let c = (std::f64::consts::PI / (k as f64 + 1.0)).cos();
    let exact = match k {
        2 => Some(PhiExact::Rational(1, 1)),
        3 => Some(PhiExact::Rational(1, 2)),
        4 => Some(PhiExact::ThreeMinusRootFiveOverTwo),
        5 => Some(PhiExact::Rational(1, 3)),
        _ => None,
    };
    Ok(Phi { k, value: 1.0 / (4.0 * c * c), exact })
}

impl Phi {
    /// Exact `⌈φ_k · m⌉`, when an exact form is known.
    pub fn ceil_times(&self, m: u64) -> Option<u64> {
        match self.exact? {
            PhiExact::Rational(a, b) => Some((a * m).div_ceil(b)),
            PhiExact::ThreeMinusRootFiveOverTwo => {
                // √(5m²) is irrational for m > 0, so with r = ⌊√(5m²)⌋ the
                // ceiling of (3m - √(5m²))/2 is ⌊(3m - r + 1)/2⌋
                if m == 0 {
                    return Some(0);
                }
                let m = m as u128;
                let r = (5 * m * m).sqrt();
                Some(((3 * m + 1 - r) / 2) as u64)
            }
        }
    }

    pub fn render_exact(&self) -> Option<String> {
        Some(match self.exact? {
            PhiExact::Rational(a, 1) => a.to_string(),
            PhiExact::Rational(a, b) => format!("{a}/{b}"),
            PhiExact::ThreeMinusRootFiveOverTwo => "(3-sqrt5)/2".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::SeriesSource;
    use super::*;

    fn series(c: &[u128]) -> HilbertData {
        HilbertData { coefficients: c.to_vec(), exact_through: c.len() - 1, source: SeriesSource::Groebner }
    }

    #[test]
    fn r31_product() {
        let r = gs_check(&series(&[1, 4, 10, 18, 21, 0]), 4, 6).unwrap();
        assert_eq!(r.product, vec![1, 0, 0, 2, 9, 24, 126]);
        assert!(r.complete && r.pass());
        assert_eq!(r.render(), "1 + 2t^3 + 9t^4 + 24t^5 + 126t^6");
    }

    #[test]
    fn free_algebra_telescopes() {
        let r = gs_check(&series(&[1, 3, 9, 27, 81]), 3, 0).unwrap();
        assert_eq!(r.product, vec![1, 0, 0, 0, 0]);
        assert!(!r.complete && r.pass());
    }

    #[test]
    fn violation_found() {
        // impossible series: too small in degree 2 for 2 generators and 1 relation
        let r = gs_check(&series(&[1, 2, 2, 3]), 2, 1).unwrap();
        assert_eq!(r.first_violation, Some(2));
    }

    #[test]
    fn exact_thresholds() {
        assert_eq!(phi(5).unwrap().exact, Some(PhiExact::Rational(1, 3)));
        assert_eq!(phi(3).unwrap().exact, Some(PhiExact::Rational(1, 2)));
        assert_eq!(phi(2).unwrap().exact, Some(PhiExact::Rational(1, 1)));
        let p4 = phi(4).unwrap();
        assert!((p4.value - 0.381_966_011_250_105).abs() < 1e-12);
        assert_eq!(p4.render_exact().unwrap(), "(3-sqrt5)/2");
        assert!(phi(1).is_err());
        assert!(phi(9).unwrap().exact.is_none());
    }

    #[test]
    fn exact_forms_match_floats() {
        for k in 2..=5 {
            let p = phi(k).unwrap();
            let v = match p.exact.unwrap() {
                PhiExact::Rational(a, b) => a as f64 / b as f64,
                PhiExact::ThreeMinusRootFiveOverTwo => (3.0 - 5f64.sqrt()) / 2.0,
            };
            assert!((p.value - v).abs() < 1e-12, "k = {k}");
        }
    }

    #[test]
    fn k4_counts() {
        let p = phi(4).unwrap();
        let got: Vec<u64> = (1..=5).map(|n| p.ceil_times(n * n).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 4, 7, 10]);
        for m in 1..5000u64 {
            let f = (p.value * m as f64).ceil() as u64;
            assert_eq!(p.ceil_times(m), Some(f), "m = {m}");
        }
    }

    #[test]
    fn k5_counts() {
        let p = phi(5).unwrap();
        for n in 1..=30u64 {
            assert_eq!(p.ceil_times(n * n).unwrap(), (n * n).div_ceil(3));
        }
    }
}
