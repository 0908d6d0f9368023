use crate::freealg::{Letter, Polynomial, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObstructionKind {
    /// A proper suffix of the left leading word is a proper prefix of the right one.
    Overlap,
    /// The right leading word occurs inside the left one.
    Inclusion,
}

/// An ambiguity between two leading words. `offset` is the position of the
/// right leading word inside `word`; the left one always starts at 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub left: usize,
    pub right: usize,
    pub offset: usize,
    pub word: Word,
}

impl Obstruction {
    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    /// Difference of the two rewrites of the ambiguity word.
    pub fn s_polynomial(&self, elements: &[Polynomial]) -> Polynomial {
        let (g, h) = (&elements[self.left], &elements[self.right]);
        let w = self.word.letters();
        let lg = g.leading_word().expect("nonzero").degree();
        let lh = h.leading_word().expect("nonzero").degree();
        let a = g.sandwich(&[], &w[lg..]);
        let b = h.sandwich(&w[..self.offset], &w[self.offset + lh..]);
        let minus_one = -g.field().one();
        a.add_scaled(&b, &minus_one)
    }

    fn sort_key(&self) -> (usize, &Word, usize, usize, usize) {
        (self.degree(), &self.word, self.left, self.right, self.offset)
    }
}

/// Overlaps of `u` (on the left) with `v` (on the right): lengths `k` with
/// `0 < k < min(|u|, |v|)` and `u[|u|-k..] == v[..k]`.
pub fn overlap_lengths<'a>(u: &'a [Letter], v: &'a [Letter]) -> impl Iterator<Item = usize> + 'a {
    let max = u.len().min(v.len()).saturating_sub(1);
    (1..=max).filter(move |&k| u[u.len() - k..] == v[..k])
}

pub(crate) fn overlaps_between(
    elements: &[Polynomial],
    i: usize,
    j: usize,
    maxdeg: usize,
    out: &mut Vec<Obstruction>,
) {
    let u = elements[i].leading_word().expect("nonzero").letters();
    let v = elements[j].leading_word().expect("nonzero").letters();
    for k in overlap_lengths(u, v) {
        let deg = u.len() + v.len() - k;
        if deg > maxdeg {
            continue;
        }
        out.push(Obstruction {
            kind: ObstructionKind::Overlap,
            left: i,
            right: j,
            offset: u.len() - k,
            word: Word::sandwich(u, &v[k..], &[]),
        });
    }
}

/// Every overlap and inclusion ambiguity among the leading words of
/// `elements` whose ambiguity word has degree at most `maxdeg`, sorted by
/// degree, then ambiguity word, then element indices.
pub fn find_obstructions(elements: &[Polynomial], maxdeg: usize) -> Vec<Obstruction> {
    let mut out = Vec::new();
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            overlaps_between(elements, i, j, maxdeg, &mut out);
            if i == j {
                continue;
            }
            let u = elements[i].leading_word().expect("nonzero");
            let v = elements[j].leading_word().expect("nonzero");
            if u.degree() > maxdeg || v.degree() > u.degree() {
                continue;
            }
            // equal leading words are reported once, with the smaller index on the left
            if u == v && i > j {
                continue;
            }
            let (ul, vl) = (u.letters(), v.letters());
            for start in 0..=ul.len() - vl.len() {
                if ul[start..start + vl.len()] == *vl {
                    out.push(Obstruction {
                        kind: ObstructionKind::Inclusion,
                        left: i,
                        right: j,
                        offset: start,
                        word: u.clone(),
                    });
                }
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}
