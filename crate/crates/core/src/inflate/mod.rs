//! Inflation of bi-graded quadratic seeds: every X generator is replaced by
//! `α` indexed copies and every Y generator by `β` copies, with relations
//! indexed accordingly. Nilpotency degree is preserved, which gives the
//! 5-step nilpotent family with `⌈n²/3⌉` relations.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::freealg::{Alphabet, Family, FreeAlgError, Generator, Letter, Polynomial, Word};
use crate::presentation::{builtin, Presentation, PresentationError};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflateError {
    #[error("generator `{0}` is in neither X nor Y")]
    Unassigned(String),
    #[error("generator `{0}` is in both X and Y")]
    Overlapping(String),
    #[error("`{0}` is not a generator")]
    UnknownGenerator(String),
    #[error("X and Y must both be nonempty")]
    EmptyFamily,
    #[error("relation {index} is not quadratic")]
    NotQuadratic { index: usize },
    #[error("relation {index} mixes {first} and {second} terms")]
    MixedRelation { index: usize, first: &'static str, second: &'static str },
    #[error("alpha + beta must be at least 1")]
    EmptyAlphabet,
    #[error("inflation produced relation {0} twice")]
    DuplicateRelation(RelationId),
    #[error("index vector {which} has length {got}, expected {expected}")]
    IndexLength { which: char, got: usize, expected: usize },
    #[error("index {value} in {which} is outside 1..={bound}")]
    IndexRange { which: char, value: u32, bound: u32 },
    #[error("no relation {0} in the seed")]
    UnknownRelation(RelationId),
    #[error("word letter outside the (1,1) alphabet")]
    BadWord,
    #[error(transparent)]
    Alphabet(#[from] FreeAlgError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationClass {
    Xx,
    Yy,
    Xy,
}

impl RelationClass {
    fn name(self) -> &'static str {
        match self {
            RelationClass::Xx => "XX",
            RelationClass::Yy => "YY",
            RelationClass::Xy => "XY",
        }
    }
}

/// `f^{xx}_{p,a,b}`, `f^{yy}_{p,s,t}` or `f^{xy}_{p,a,s}`; all indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationId {
    pub class: RelationClass,
    pub p: usize,
    pub first: u32,
    pub second: u32,
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.class {
            RelationClass::Xx => "xx",
            RelationClass::Yy => "yy",
            RelationClass::Xy => "xy",
        };
        write!(f, "f^{c}_({},{},{})", self.p, self.first, self.second)
    }
}

type Tensor = Vec<Vec<Vec<Scalar>>>;

/// Coefficient tensors of a bi-graded quadratic presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeed {
    pub field: FieldSpec,
    pub x_names: Vec<String>,
    pub y_names: Vec<String>,
    /// `[p][j][l]`, coefficient of `x_j x_l`
    pub c_xx: Tensor,
    /// `[q][k][w]`, coefficient of `y_k y_w`
    pub c_yy: Tensor,
    /// `[r][j][k]`, coefficient of `x_j y_k`
    pub c_xy: Tensor,
    /// `[r][k][j]`, coefficient of `y_k x_j`
    pub c_yx: Tensor,
    pub label: Option<String>,
}

fn tensor(field: FieldSpec, rows: usize, a: usize, b: usize) -> Tensor {
    vec![vec![vec![field.zero(); b]; a]; rows]
}

/// Splits the generators of a quadratic presentation into X and Y and
/// reads off the coefficient tensors.
pub fn split_seed(p: &Presentation, x: &[&str], y: &[&str]) -> Result<BiSeed, InflateError> {
    if x.is_empty() || y.is_empty() {
        return Err(InflateError::EmptyFamily);
    }
    let names = p.alphabet().names();
    for n in x.iter().chain(y) {
        if !names.iter().any(|m| m == n) {
            return Err(InflateError::UnknownGenerator(n.to_string()));
        }
    }
    // positions within each family follow declaration order
    let mut side = vec![None; names.len()];
    let (mut x_names, mut y_names) = (Vec::new(), Vec::new());
    for (i, n) in names.iter().enumerate() {
        match (x.contains(&n.as_str()), y.contains(&n.as_str())) {
            (true, true) => return Err(InflateError::Overlapping(n.clone())),
            (false, false) => return Err(InflateError::Unassigned(n.clone())),
            (true, false) => {
                side[i] = Some((false, x_names.len()));
                x_names.push(n.clone());
            }
            (false, true) => {
                side[i] = Some((true, y_names.len()));
                y_names.push(n.clone());
            }
        }
    }
    let side: Vec<(bool, usize)> = side.into_iter().map(|s| s.expect("assigned")).collect();
    let field = p.field();
    let (gx, gy) = (x_names.len(), y_names.len());
    let (mut c_xx, mut c_yy, mut c_xy, mut c_yx) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (index, r) in p.relations().iter().enumerate() {
        if r.homogeneous_degree() != Some(2) {
            return Err(InflateError::NotQuadratic { index });
        }
        let class_of = |w: &Word| {
            let (u, v) = (side[w.letters()[0] as usize].0, side[w.letters()[1] as usize].0);
            match (u, v) {
                (false, false) => RelationClass::Xx,
                (true, true) => RelationClass::Yy,
                _ => RelationClass::Xy,
            }
        };
        let class = class_of(&r.terms()[0].0);
        if let Some((w, _)) = r.terms().iter().find(|(w, _)| class_of(w) != class) {
            return Err(InflateError::MixedRelation { index, first: class.name(), second: class_of(w).name() });
        }
        match class {
            RelationClass::Xx => {
                let mut t = tensor(field, 1, gx, gx).remove(0);
                for (w, c) in r.terms() {
                    t[side[w.letters()[0] as usize].1][side[w.letters()[1] as usize].1] = c.clone();
                }
                c_xx.push(t);
            }
            RelationClass::Yy => {
                let mut t = tensor(field, 1, gy, gy).remove(0);
                for (w, c) in r.terms() {
                    t[side[w.letters()[0] as usize].1][side[w.letters()[1] as usize].1] = c.clone();
                }
                c_yy.push(t);
            }
            RelationClass::Xy => {
                let mut txy = tensor(field, 1, gx, gy).remove(0);
                let mut tyx = tensor(field, 1, gy, gx).remove(0);
                for (w, c) in r.terms() {
                    let (u, v) = (side[w.letters()[0] as usize], side[w.letters()[1] as usize]);
                    if u.0 {
                        tyx[u.1][v.1] = c.clone();
                    } else {
                        txy[u.1][v.1] = c.clone();
                    }
                }
                c_xy.push(txy);
                c_yx.push(tyx);
            }
        }
    }
    Ok(BiSeed { field, x_names, y_names, c_xx, c_yy, c_xy, c_yx, label: p.label().map(str::to_string) })
}

/// Output of [`inflate`]; `ids[i]` names `presentation.relations()[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationResult {
    pub presentation: Presentation,
    pub alpha: u32,
    pub beta: u32,
    pub ids: Vec<RelationId>,
}

impl InflationResult {
    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    pub fn relation_count(&self) -> usize {
        self.presentation.relation_count()
    }

    pub fn relation(&self, id: RelationId) -> Option<&Polynomial> {
        self.ids.iter().position(|&i| i == id).map(|k| &self.presentation.relations()[k])
    }
}

impl BiSeed {
    pub fn g_x(&self) -> usize {
        self.x_names.len()
    }

    pub fn g_y(&self) -> usize {
        self.y_names.len()
    }

    pub fn r_xx(&self) -> usize {
        self.c_xx.len()
    }

    pub fn r_yy(&self) -> usize {
        self.c_yy.len()
    }

    pub fn r_xy(&self) -> usize {
        self.c_xy.len()
    }

    /// `α g_x + β g_y`
    pub fn generator_count(&self, alpha: u32, beta: u32) -> usize {
        alpha as usize * self.g_x() + beta as usize * self.g_y()
    }

    /// `α² r_xx + β² r_yy + αβ r_xy`
    pub fn relation_count(&self, alpha: u32, beta: u32) -> usize {
        let (a, b) = (alpha as usize, beta as usize);
        a * a * self.r_xx() + b * b * self.r_yy() + a * b * self.r_xy()
    }

    /// X copies by (base, copy), then Y copies by (base, copy).
    pub fn alphabet(&self, alpha: u32, beta: u32) -> Result<Alphabet, InflateError> {
        let mut gens = Vec::with_capacity(self.generator_count(alpha, beta));
        for base in &self.x_names {
            gens.extend((1..=alpha).map(|s| Generator::indexed(base.clone(), Family::X, s)));
        }
        for base in &self.y_names {
            gens.extend((1..=beta).map(|t| Generator::indexed(base.clone(), Family::Y, t)));
        }
        Ok(Alphabet::new(gens)?)
    }

    fn x_letter(&self, alpha: u32, j: usize, s: u32) -> Letter {
        (j * alpha as usize + (s as usize - 1)) as Letter
    }

    fn y_letter(&self, alpha: u32, beta: u32, k: usize, t: u32) -> Letter {
        (self.g_x() * alpha as usize + k * beta as usize + (t as usize - 1)) as Letter
    }

    /// The relation `id` of `R^(α,β)`.
    pub fn relation(&self, id: RelationId, alpha: u32, beta: u32) -> Result<Polynomial, InflateError> {
        let (a, b) = (id.first, id.second);
        let unknown = || InflateError::UnknownRelation(id);
        if id.p == 0 || a == 0 || b == 0 {
            return Err(unknown());
        }
        let mut terms = Vec::new();
        match id.class {
            RelationClass::Xx => {
                let t = self.c_xx.get(id.p - 1).ok_or_else(unknown)?;
                if a > alpha || b > alpha {
                    return Err(unknown());
                }
                for (j, row) in t.iter().enumerate() {
                    for (l, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let w = [self.x_letter(alpha, j, a), self.x_letter(alpha, l, b)];
                        terms.push((Word::from_letters(&w), c.clone()));
                    }
                }
            }
            RelationClass::Yy => {
                let t = self.c_yy.get(id.p - 1).ok_or_else(unknown)?;
                if a > beta || b > beta {
                    return Err(unknown());
                }
                for (k, row) in t.iter().enumerate() {
                    for (w_, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let w = [self.y_letter(alpha, beta, k, a), self.y_letter(alpha, beta, w_, b)];
                        terms.push((Word::from_letters(&w), c.clone()));
                    }
                }
            }
            RelationClass::Xy => {
                let txy = self.c_xy.get(id.p - 1).ok_or_else(unknown)?;
                let tyx = &self.c_yx[id.p - 1];
                if a > alpha || b > beta {
                    return Err(unknown());
                }
                for (j, row) in txy.iter().enumerate() {
                    for (k, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let w = [self.x_letter(alpha, j, a), self.y_letter(alpha, beta, k, b)];
                        terms.push((Word::from_letters(&w), c.clone()));
                    }
                }
                for (k, row) in tyx.iter().enumerate() {
                    for (j, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        let w = [self.y_letter(alpha, beta, k, b), self.x_letter(alpha, j, a)];
                        terms.push((Word::from_letters(&w), c.clone()));
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(self.field, terms))
    }

    /// All relation ids of `R^(α,β)`: XX by (p, a, b), then YY, then XY by (p, a, s).
    pub fn relation_ids(&self, alpha: u32, beta: u32) -> Vec<RelationId> {
        let mut ids = Vec::with_capacity(self.relation_count(alpha, beta));
        let mut push = |class, rows: usize, m: u32, n: u32| {
            for p in 1..=rows {
                for first in 1..=m {
                    for second in 1..=n {
                        ids.push(RelationId { class, p, first, second });
                    }
                }
            }
        };
        push(RelationClass::Xx, self.r_xx(), alpha, alpha);
        push(RelationClass::Yy, self.r_yy(), beta, beta);
        push(RelationClass::Xy, self.r_xy(), alpha, beta);
        ids
    }
}

/// `R^(α,β)`.
pub fn inflate(seed: &BiSeed, alpha: u32, beta: u32) -> Result<InflationResult, InflateError> {
    if alpha + beta == 0 {
        return Err(InflateError::EmptyAlphabet);
    }
    let alphabet = seed.alphabet(alpha, beta)?;
    let ids = seed.relation_ids(alpha, beta);
    let mut relations = Vec::with_capacity(ids.len());
    let mut seen = HashSet::with_capacity(ids.len());
    for &id in &ids {
        let r = seed.relation(id, alpha, beta)?;
        if !seen.insert(r.clone()) {
            return Err(InflateError::DuplicateRelation(id));
        }
        relations.push(r);
    }
    let mut presentation = Presentation::new(seed.field, alphabet, relations)?;
    if let Some(l) = &seed.label {
        presentation = presentation.with_label(format!("{l}^({alpha},{beta})"));
    }
    Ok(InflationResult { presentation, alpha, beta, ids })
}

/// Result of [`lift_product`]: `U'`, `f'`, `V'` over the `(α,β)` alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    pub left: Word,
    pub relation: RelationId,
    pub right: Word,
}

/// Given `U·f·V` over the `(1,1)` alphabet and copy-index vectors `s`, `t`
/// for its X and Y letters, the unique `U'·f'·V'` over the `(α,β)`
/// alphabet with `Φ(U'f'V') = UfV` whose signature is `(s, t)`.
#[allow(clippy::too_many_arguments)]
pub fn lift_product(
    seed: &BiSeed,
    alpha: u32,
    beta: u32,
    u: &Word,
    f: RelationId,
    v: &Word,
    s: &[u32],
    t: &[u32],
) -> Result<Lift, InflateError> {
    if f.first != 1 || f.second != 1 {
        return Err(InflateError::UnknownRelation(f));
    }
    seed.relation(f, 1, 1)?;
    let gx = seed.g_x();
    let n_letters = gx + seed.g_y();
    let is_y = |l: Letter| l as usize >= gx;
    if u.letters().iter().chain(v.letters()).any(|&l| l as usize >= n_letters) {
        return Err(InflateError::BadWord);
    }
    let count_x = |w: &Word| w.letters().iter().filter(|&&l| !is_y(l)).count();
    let (fx, fy) = match f.class {
        RelationClass::Xx => (2, 0),
        RelationClass::Yy => (0, 2),
        RelationClass::Xy => (1, 1),
    };
    let n = u.degree() + v.degree() + 2;
    let n_x = count_x(u) + count_x(v) + fx;
    for (which, vec, expected, bound) in [('s', s, n_x, alpha), ('t', t, n - n_x, beta)] {
        if vec.len() != expected {
            return Err(InflateError::IndexLength { which, got: vec.len(), expected });
        }
        if let Some(&value) = vec.iter().find(|&&c| c == 0 || c > bound) {
            return Err(InflateError::IndexRange { which, value, bound });
        }
    }
    // re-index X letters from s and Y letters from t, in order of occurrence
    let relabel = |w: &Word, mut si: usize, mut ti: usize| -> (Word, usize, usize) {
        let letters: Vec<Letter> = w
            .letters()
            .iter()
            .map(|&l| {
                if is_y(l) {
                    ti += 1;
                    seed.y_letter(alpha, beta, l as usize - gx, t[ti - 1])
                } else {
                    si += 1;
                    seed.x_letter(alpha, l as usize, s[si - 1])
                }
            })
            .collect();
        (Word::from(letters), si, ti)
    };
    let (left, a, b) = relabel(u, 0, 0);
    let relation = match f.class {
        RelationClass::Xx => RelationId { first: s[a], second: s[a + 1], ..f },
        RelationClass::Yy => RelationId { first: t[b], second: t[b + 1], ..f },
        RelationClass::Xy => RelationId { first: s[a], second: t[b], ..f },
    };
    let (right, _, _) = relabel(v, a + fx, b + fy);
    Ok(Lift { left, relation, right })
}

fn seed(key: &str, field: FieldSpec, y: &[&str]) -> Result<BiSeed, InflateError> {
    split_seed(&builtin(key, field)?, &["a", "b", "c"], y)
}

/// The 4-generator seed split as X = {a, b, c}, Y = {x}.
pub fn r31_seed(field: FieldSpec) -> Result<BiSeed, InflateError> {
    seed("R31", field, &["x"])
}

/// The 5-generator seed split as X = {a, b, c}, Y = {x, y}.
pub fn r32_seed(field: FieldSpec) -> Result<BiSeed, InflateError> {
    seed("R32", field, &["x", "y"])
}

/// A 5-step nilpotent quadratic algebra with `n` generators and
/// `⌈n²/3⌉` relations.
pub fn construct5(n: u32, field: FieldSpec) -> Result<InflationResult, InflateError> {
    if n == 0 {
        return Err(InflateError::EmptyAlphabet);
    }
    let mut r = match n % 3 {
        0 => inflate(&r31_seed(field)?, n / 3, 0)?,
        1 => inflate(&r31_seed(field)?, (n - 1) / 3, 1)?,
        _ => inflate(&r32_seed(field)?, (n - 2) / 3, 1)?,
    };
    r.presentation = r.presentation.with_label(format!("construct5({n})"));
    Ok(r)
}
