#![allow(dead_code)]

use quadalg::freealg::{common_signature, Alphabet, Hom, Letter, Polynomial, Word};
use quadalg::inflate::{lift_product, BiSeed, RelationClass, RelationId};
use quadalg::{FieldSpec, Presentation};
use rand::Rng;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];

/// Up to four generators and a random number of quadratic relations with
/// small integer coefficients.
pub fn random_quadratic<R: Rng>(rng: &mut R, field: FieldSpec) -> Presentation {
    let n = rng.gen_range(1..=4usize);
    let alphabet = Alphabet::plain(&NAMES[..n]).unwrap();
    let words: Vec<[Letter; 2]> =
        (0..n as Letter).flat_map(|i| (0..n as Letter).map(move |j| [i, j])).collect();
    let mut rels = Vec::new();
    for _ in 0..rng.gen_range(0..=(n * n).min(7)) {
        let k = rng.gen_range(1..=3.min(words.len()));
        let terms: Vec<(i64, &[Letter])> =
            (0..k).map(|_| (rng.gen_range(-3..=3), &words[rng.gen_range(0..words.len())][..])).collect();
        let r = Polynomial::from_int_terms(field, &terms);
        if !r.is_zero() {
            rels.push(r);
        }
    }
    Presentation::new(field, alphabet, rels).unwrap()
}

pub fn random_word<R: Rng>(rng: &mut R, letters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from((0..len).map(|_| rng.gen_range(0..letters) as Letter).collect::<Vec<_>>())
}

/// Checks `deg`, `Φ∘S_x = S_x∘Φ` and `Φ∘S_y = S_y∘Φ` on one word.
pub fn hom_identities(big: &Alphabet, small: &Alphabet, w: &Word) -> Result<(), String> {
    let phi = |w: &Word| Hom::Phi.apply(big, w, small).map_err(|e| e.to_string());
    let pw = phi(w)?;
    if pw.degree() != w.degree() {
        return Err(format!("deg Φ(w) = {} but deg w = {}", pw.degree(), w.degree()));
    }
    for h in [Hom::Sx, Hom::Sy] {
        let lhs = phi(&h.apply(big, w, big).map_err(|e| e.to_string())?)?;
        let rhs = h.apply(small, &pw, small).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("{h:?} does not commute with Φ on {}", big.render_word(w)));
        }
    }
    let sx = Hom::Sx.apply(big, w, big).unwrap().degree();
    let sy = Hom::Sy.apply(big, w, big).unwrap().degree();
    if sx + sy != w.degree() {
        return Err("deg S_x + deg S_y != deg".into());
    }
    Ok(())
}

pub struct LiftCase {
    pub u: Word,
    pub f: RelationId,
    pub v: Word,
    pub s: Vec<u32>,
    pub t: Vec<u32>,
}

fn relation_ids(seed: &BiSeed) -> Vec<RelationId> {
    seed.relation_ids(1, 1)
}

pub fn random_lift<R: Rng>(rng: &mut R, seed: &BiSeed, alpha: u32, beta: u32) -> LiftCase {
    let ids: Vec<RelationId> = relation_ids(seed)
        .into_iter()
        .filter(|id| match id.class {
            RelationClass::Xx => alpha > 0,
            RelationClass::Yy => beta > 0,
            RelationClass::Xy => alpha > 0 && beta > 0,
        })
        .collect();
    let f = ids[rng.gen_range(0..ids.len())];
    let gx = seed.g_x();
    let letters: Vec<usize> = (0..gx + seed.g_y()).filter(|&l| if l < gx { alpha > 0 } else { beta > 0 }).collect();
    let mut word = || {
        let len = rng.gen_range(0..=3);
        Word::from((0..len).map(|_| letters[rng.gen_range(0..letters.len())] as Letter).collect::<Vec<_>>())
    };
    let (u, v) = (word(), word());
    let xs = |w: &Word| w.letters().iter().filter(|&&l| (l as usize) < gx).count();
    let n = u.degree() + v.degree() + 2;
    let n_x = xs(&u) + xs(&v) + match f.class {
        RelationClass::Xx => 2,
        RelationClass::Yy => 0,
        RelationClass::Xy => 1,
    };
    let s = (0..n_x).map(|_| rng.gen_range(1..=alpha)).collect();
    let t = (0..n - n_x).map(|_| rng.gen_range(1..=beta)).collect();
    LiftCase { u, f, v, s, t }
}

/// `Φ(U'f'V') = UfV` and every term of `U'f'V'` carries the signature `(s, t)`.
pub fn lift_round_trip(seed: &BiSeed, alpha: u32, beta: u32, c: &LiftCase) -> Result<(), String> {
    let lift = lift_product(seed, alpha, beta, &c.u, c.f, &c.v, &c.s, &c.t).map_err(|e| e.to_string())?;
    let big = seed.alphabet(alpha, beta).map_err(|e| e.to_string())?;
    let small = seed.alphabet(1, 1).map_err(|e| e.to_string())?;
    let lifted =
        seed.relation(lift.relation, alpha, beta).map_err(|e| e.to_string())?.sandwich(lift.left.letters(), lift.right.letters());
    let original = seed.relation(c.f, 1, 1).map_err(|e| e.to_string())?.sandwich(c.u.letters(), c.v.letters());
    let image = Hom::Phi.apply_poly(&big, &lifted, &small).map_err(|e| e.to_string())?;
    if image != original {
        return Err(format!("Φ(U'f'V') = {} but UfV = {}", image.render(&small), original.render(&small)));
    }
    match common_signature(&big, &lifted).map_err(|e| e.to_string())? {
        Some(sig) if sig.s == c.s && sig.t == c.t => Ok(()),
        other => Err(format!("signature {other:?}, wanted s = {:?}, t = {:?}", c.s, c.t)),
    }
}
