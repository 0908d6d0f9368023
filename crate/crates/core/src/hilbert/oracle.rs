use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::presentation::Presentation;
use crate::scalar::{integer_normalize, Scalar};

use super::HilbertError;

/// Largest accepted `rows + columns` for [`dim_oracle`].
pub const DEFAULT_ORACLE_CAP: u128 = 4_000_000;

/// `dim R_d` as `n^d` minus the rank of all products `U·r·V` of degree `d`,
/// by exact elimination. Shares no code with the Gröbner machinery.
pub fn dim_oracle(p: &Presentation, d: usize) -> Result<u128, HilbertError> {
    dim_oracle_with_cap(p, d, DEFAULT_ORACLE_CAP)
}

pub fn dim_oracle_with_cap(p: &Presentation, d: usize, cap: u128) -> Result<u128, HilbertError> {
    let n = p.generator_count() as u128;
    let pow = |k: usize| n.checked_pow(k as u32);
    let too_large = || HilbertError::TooLarge { rows: u128::MAX, cols: u128::MAX, cap };
    let cols = pow(d).ok_or_else(too_large)?;
    let mut rows: u128 = 0;
    for r in p.relations() {
        let e = r.homogeneous_degree().expect("validated");
        if e <= d {
            rows = rows.saturating_add(((d - e + 1) as u128).saturating_mul(pow(d - e).ok_or_else(too_large)?));
        }
    }
    if rows.saturating_add(cols) > cap || cols > u32::MAX as u128 {
        return Err(HilbertError::TooLarge { rows, cols, cap });
    }
    let cols_u32 = cols as u64;
    let n = n as u64;

    let rank = if p.field().is_rational() {
        let mut e = Eliminator::<IntOps>::default();
        for r in p.relations() {
            let qs: Vec<BigRational> = r.terms().iter().map(|(_, c)| c.as_rational().expect("rational").clone()).collect();
            let ints = integer_normalize(&qs).expect("nonzero relation");
            let shape: Vec<(u64, BigInt)> = r.terms().iter().map(|(w, _)| index_of(w.letters(), n)).zip(ints).collect();
            for_each_product(&shape, r.homogeneous_degree().expect("validated"), d, n, |row| e.insert(row));
        }
        e.rank()
    } else {
        let modulus = p.field().characteristic();
        let mut e = Eliminator::<ModOps>::with(ModOps(modulus));
        for r in p.relations() {
            let shape: Vec<(u64, u64)> = r
                .terms()
                .iter()
                .map(|(w, c)| {
                    let Scalar::Modular { value, .. } = c else { unreachable!("modular field") };
                    (index_of(w.letters(), n), *value)
                })
                .collect();
            for_each_product(&shape, r.homogeneous_degree().expect("validated"), d, n, |row| e.insert(row));
        }
        e.rank()
    };
    debug_assert!(rank as u64 <= cols_u32);
    Ok(cols - rank as u128)
}

fn index_of(letters: &[u16], n: u64) -> u64 {
    letters.iter().fold(0, |acc, &l| acc * n + l as u64)
}

/// Calls `sink` with every row `U·r·V` of total degree `d`, columns descending.
fn for_each_product<C: Clone>(shape: &[(u64, C)], e: usize, d: usize, n: u64, mut sink: impl FnMut(Vec<(u32, C)>)) {
    if e > d {
        return;
    }
    for i in 0..=d - e {
        let j = d - e - i;
        let (nu, nv) = (n.pow(i as u32), n.pow(j as u32));
        let scale = n.pow((e + j) as u32);
        for u in 0..nu {
            for v in 0..nv {
                let mut row: Vec<(u32, C)> =
                    shape.iter().map(|(w, c)| ((u * scale + w * nv + v) as u32, c.clone())).collect();
                row.sort_by_key(|e| std::cmp::Reverse(e.0));
                sink(row);
            }
        }
    }
}

trait RowOps: Default {
    type C: Clone;
    /// `a·x - b·y` style elimination of the leading entry of `row` by `pivot`.
    fn eliminate(&self, row: &[(u32, Self::C)], pivot: &[(u32, Self::C)]) -> Vec<(u32, Self::C)>;
    fn normalize(&self, row: Vec<(u32, Self::C)>) -> Vec<(u32, Self::C)>;
}

#[derive(Default)]
struct Eliminator<O: RowOps> {
    ops: O,
    pivots: HashMap<u32, Vec<(u32, O::C)>>,
}

impl<O: RowOps> Eliminator<O> {
    fn with(ops: O) -> Self {
        Eliminator { ops, pivots: HashMap::new() }
    }

    fn insert(&mut self, mut row: Vec<(u32, O::C)>) {
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(p) => row = self.ops.eliminate(&row, p),
                None => {
                    let row = self.ops.normalize(row);
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Merges `x·row + y·pivot` over descending columns, dropping zeros.
fn merge<C: Clone>(
    row: &[(u32, C)],
    pivot: &[(u32, C)],
    scale_row: impl Fn(&C) -> C,
    scale_pivot: impl Fn(&C) -> C,
    add: impl Fn(&C, &C) -> C,
    is_zero: impl Fn(&C) -> bool,
) -> Vec<(u32, C)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (col, val) = match (row.get(i), pivot.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, add(&scale_row(&a.1), &scale_pivot(&b.1)))
            }
            (Some(a), Some(b)) if a.0 > b.0 => {
                i += 1;
                (a.0, scale_row(&a.1))
            }
            (Some(a), None) => {
                i += 1;
                (a.0, scale_row(&a.1))
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, scale_pivot(&b.1))
            }
            (None, None) => unreachable!(),
        };
        if !is_zero(&val) {
            out.push((col, val));
        }
    }
    out
}

#[derive(Default)]
struct IntOps;

impl RowOps for IntOps {
    type C = BigInt;

    fn eliminate(&self, row: &[(u32, BigInt)], pivot: &[(u32, BigInt)]) -> Vec<(u32, BigInt)> {
        // pl·row - rl·pivot, with the common factor of pl and rl removed
        let (rl, pl) = (&row[0].1, &pivot[0].1);
        let g = rl.gcd(pl);
        let (a, b) = (pl / &g, rl / &g);
        let out = merge(row, pivot, |c| c * &a, |c| -(c * &b), |x, y| x + y, |c| c.is_zero());
        self.normalize(out)
    }

    fn normalize(&self, mut row: Vec<(u32, BigInt)>) -> Vec<(u32, BigInt)> {
        let content = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for (_, c) in row.iter_mut() {
                *c = &*c / &content;
            }
        }
        if row.first().is_some_and(|(_, c)| c.is_negative()) {
            for (_, c) in row.iter_mut() {
                *c = -&*c;
            }
        }
        row
    }
}

#[derive(Default)]
struct ModOps(u64);

impl RowOps for ModOps {
    type C = u64;

    fn eliminate(&self, row: &[(u32, u64)], pivot: &[(u32, u64)]) -> Vec<(u32, u64)> {
        // pivots are monic
        let p = self.0;
        let f = p - row[0].1;
        merge(row, pivot, |&c| c, |&c| c * f % p, |&x, &y| (x + y) % p, |&c| c == 0)
    }

    fn normalize(&self, mut row: Vec<(u32, u64)>) -> Vec<(u32, u64)> {
        let p = self.0;
        let inv = pow_mod(row[0].1, p - 2, p);
        for (_, c) in row.iter_mut() {
            *c = *c * inv % p;
        }
        row
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}
