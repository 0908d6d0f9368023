//! The letter-deleting projections `S_x`, `S_y` and the copy-forgetting map
//! `Phi` on the bi-indexed alphabet, and the signature that classifies words
//! into the multihomogeneous spaces those maps respect.

use super::{Alphabet, Family, FreeAlgError, Letter, Polynomial, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hom {
    /// Deletes Y-letters.
    Sx,
    /// Deletes X-letters.
    Sy,
    /// Sends every copy index to 1.
    Phi,
}

/// Multidegree of a word over the bi-indexed alphabet: total degree, the
/// number of X-letters and the copy indices of the X- and Y-letters in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub n: usize,
    pub n_x: usize,
    pub s: Vec<u32>,
    pub t: Vec<u32>,
}

fn indexed(src: &Alphabet, l: Letter) -> Result<&super::Generator, FreeAlgError> {
    let g = src.generator(l);
    if g.family == Family::Plain {
        Err(FreeAlgError::PlainLetter(g.name()))
    } else {
        Ok(g)
    }
}

impl Hom {
    /// Image of a word. `src` and `dst` may be the same alphabet; `dst` must
    /// contain every image letter.
    pub fn apply(&self, src: &Alphabet, w: &Word, dst: &Alphabet) -> Result<Word, FreeAlgError> {
        let mut out = Vec::with_capacity(w.degree());
        for &l in w.letters() {
            let g = indexed(src, l)?;
            let image = match (self, g.family) {
                (Hom::Sx, Family::Y) | (Hom::Sy, Family::X) => continue,
                (Hom::Phi, fam) => (fam, 1),
                (_, fam) => (fam, g.copy),
            };
            let target = dst
                .letter_of(&g.base, image.0, image.1)
                .ok_or_else(|| FreeAlgError::UnknownGenerator(format!("{}.{}", g.base, image.1)))?;
            out.push(target);
        }
        Ok(Word::from(out))
    }

    pub fn apply_poly(&self, src: &Alphabet, f: &Polynomial, dst: &Alphabet) -> Result<Polynomial, FreeAlgError> {
        f.map_words(|w| self.apply(src, w, dst))
    }
}

pub fn signature_of(alphabet: &Alphabet, w: &Word) -> Result<Signature, FreeAlgError> {
    let mut s = Vec::new();
    let mut t = Vec::new();
    for &l in w.letters() {
        let g = indexed(alphabet, l)?;
        match g.family {
            Family::X => s.push(g.copy),
            Family::Y => t.push(g.copy),
            Family::Plain => unreachable!(),
        }
    }
    Ok(Signature { n: w.degree(), n_x: s.len(), s, t })
}

/// The signature shared by all terms, or `None` if terms disagree.
pub fn common_signature(alphabet: &Alphabet, f: &Polynomial) -> Result<Option<Signature>, FreeAlgError> {
    let mut sig: Option<Signature> = None;
    for (w, _) in f.terms() {
        let s = signature_of(alphabet, w)?;
        match &sig {
            None => sig = Some(s),
            Some(prev) if *prev != s => return Ok(None),
            _ => {}
        }
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::super::Generator;
    use super::*;
    use std::collections::HashMap;

    /// Alphabet with bases x1,x2 (X) and y1,y2 (Y), copies 1..=3.
    fn bi_alphabet(alpha: u32, beta: u32) -> Alphabet {
        let mut g = Vec::new();
        for base in ["x1", "x2"] {
            for c in 1..=alpha {
                g.push(Generator::indexed(base, Family::X, c));
            }
        }
        for base in ["y1", "y2"] {
            for c in 1..=beta {
                g.push(Generator::indexed(base, Family::Y, c));
            }
        }
        Alphabet::new(g).unwrap()
    }

    fn w(a: &Alphabet, names: &[&str]) -> Word {
        a.word(names).unwrap()
    }

    #[test]
    fn sx_deletes_y_letters() {
        let a = bi_alphabet(3, 3);
        let u = w(&a, &["x1.2", "y1.1", "x2.1"]);
        assert_eq!(Hom::Sx.apply(&a, &u, &a).unwrap(), w(&a, &["x1.2", "x2.1"]));
        assert_eq!(Hom::Sy.apply(&a, &u, &a).unwrap(), w(&a, &["y1.1"]));
    }

    #[test]
    fn phi_resets_copies() {
        let a = bi_alphabet(3, 3);
        let u = w(&a, &["x1.2", "y1.3"]);
        assert_eq!(Hom::Phi.apply(&a, &u, &a).unwrap(), w(&a, &["x1.1", "y1.1"]));
    }

    #[test]
    fn degree_splits() {
        let a = bi_alphabet(3, 3);
        let u = w(&a, &["y1.1", "x1.1", "y2.2"]);
        let dx = Hom::Sx.apply(&a, &u, &a).unwrap().degree();
        let dy = Hom::Sy.apply(&a, &u, &a).unwrap().degree();
        assert_eq!((u.degree(), dx, dy), (3, 1, 2));
    }

    #[test]
    fn plain_letters_rejected() {
        let a = Alphabet::plain(&["a"]).unwrap();
        let u = Word::from_letters(&[0]);
        assert!(matches!(Hom::Phi.apply(&a, &u, &a), Err(FreeAlgError::PlainLetter(_))));
        assert!(matches!(signature_of(&a, &u), Err(FreeAlgError::PlainLetter(_))));
    }

    #[test]
    fn signature_examples() {
        let a = bi_alphabet(3, 3);
        let s = signature_of(&a, &w(&a, &["x1.1", "y1.1"])).unwrap();
        assert_eq!(s, Signature { n: 2, n_x: 1, s: vec![1], t: vec![1] });
        let s = signature_of(&a, &w(&a, &["y1.3", "x2.2", "x1.2"])).unwrap();
        assert_eq!(s, Signature { n: 3, n_x: 2, s: vec![2, 2], t: vec![3] });
    }

    fn all_words(n_letters: usize, deg: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..deg {
            out = out
                .into_iter()
                .flat_map(|w| (0..n_letters as Letter).map(move |l| w.concat(&Word::from_letters(&[l]))))
                .collect();
        }
        out
    }

    #[test]
    fn signatures_partition_words_and_phi_is_bijective_per_class() {
        let (alpha, beta) = (2u32, 3u32);
        let a = bi_alphabet(alpha, beta);
        let (gx, gy) = (2usize, 2usize);
        for n in 0..=4usize {
            let words = all_words(a.len(), n);
            assert_eq!(words.len(), (gx * alpha as usize + gy * beta as usize).pow(n as u32));
            let mut classes: HashMap<Signature, Vec<Word>> = HashMap::new();
            for u in words {
                classes.entry(signature_of(&a, &u).unwrap()).or_default().push(u);
            }
            let mut total = 0;
            for (sig, members) in &classes {
                let binom = (0..sig.n_x).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(members.len(), binom * gx.pow(sig.n_x as u32) * gy.pow((n - sig.n_x) as u32));
                total += members.len();
                // Phi maps the class bijectively onto the all-ones class
                let images: std::collections::HashSet<Word> =
                    members.iter().map(|u| Hom::Phi.apply(&a, u, &a).unwrap()).collect();
                assert_eq!(images.len(), members.len());
                for img in &images {
                    let s1 = signature_of(&a, img).unwrap();
                    assert_eq!(s1.n_x, sig.n_x);
                    assert!(s1.s.iter().chain(&s1.t).all(|&c| c == 1));
                }
            }
            assert_eq!(total, (gx * alpha as usize + gy * beta as usize).pow(n as u32));
        }
    }
}
