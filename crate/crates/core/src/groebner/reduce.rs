use std::collections::BTreeMap;

use crate::automaton::PatternAutomaton;
use crate::freealg::{Polynomial, Word};
use crate::scalar::{FieldSpec, Scalar};

/// Rewriting system built from a set of monic polynomials: an occurrence of
/// a leading word is replaced by minus the tail.
#[derive(Debug, Clone)]
pub struct Reducer<'a> {
    elements: &'a [Polynomial],
    automaton: PatternAutomaton,
    field: FieldSpec,
}

impl<'a> Reducer<'a> {
    /// `elements` must be monic and nonzero.
    pub fn new(n_letters: usize, field: FieldSpec, elements: &'a [Polynomial]) -> Self {
        debug_assert!(elements.iter().all(|g| g.leading_coeff().is_some_and(Scalar::is_one)));
        let automaton = PatternAutomaton::new(
            n_letters,
            elements.iter().map(|g| g.leading_word().expect("nonzero element").letters()),
        );
        Reducer { elements, automaton, field }
    }

    pub fn elements(&self) -> &[Polynomial] {
        self.elements
    }

    /// True when `w` contains no leading word.
    pub fn is_normal(&self, w: &Word) -> bool {
        self.automaton.first_match(w.letters(), |p| self.pattern_len(p)).is_none()
    }

    fn pattern_len(&self, p: usize) -> usize {
        self.elements[p].leading_word().map_or(0, Word::degree)
    }

    /// Normal form: the deglex-greatest reducible word is rewritten first,
    /// at its leftmost-ending leading-word occurrence.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut pending: BTreeMap<Word, Scalar> = f.terms().iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((w, c)) = pending.pop_last() {
            let Some(m) = self.automaton.first_match(w.letters(), |p| self.pattern_len(p)) else {
                out.push((w, c));
                continue;
            };
            let g = &self.elements[m.pattern];
            let (left, right) = (&w.letters()[..m.start], &w.letters()[m.end..]);
            for (tw, tc) in g.tail() {
                let nw = Word::sandwich(left, tw.letters(), right);
                let delta = -(&c * tc);
                match pending.entry(nw) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &delta;
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta);
                    }
                }
            }
        }
        Polynomial::from_descending(self.field, out)
    }
}

/// Reduced row echelon form of homogeneous polynomials of one degree:
/// monic rows with distinct leading words, no row's word equal to another
/// row's leading word. Returned in ascending order of leading word.
pub fn echelon(rows: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut pivots: BTreeMap<Word, Polynomial> = BTreeMap::new();
    for mut r in rows {
        while let Some(lw) = r.leading_word() {
            match pivots.get(lw) {
                Some(p) => {
                    let c = -r.leading_coeff().expect("nonzero");
                    r = r.add_scaled(p, &c);
                }
                None => {
                    let m = r.monic();
                    pivots.insert(m.leading_word().expect("nonzero").clone(), m);
                    break;
                }
            }
        }
    }
    // back substitution in ascending pivot order
    let mut done: BTreeMap<Word, Polynomial> = BTreeMap::new();
    for (lw, row) in pivots {
        let mut row = row;
        loop {
            let hit = row.tail().iter().find(|(w, _)| done.contains_key(w)).map(|(w, c)| (w.clone(), c.clone()));
            match hit {
                Some((w, c)) => row = row.add_scaled(&done[&w], &-c),
                None => break,
            }
        }
        debug_assert_eq!(row.leading_word(), Some(&lw));
        done.insert(lw, row);
    }
    done.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;
    use crate::presentation::parse_expression;

    fn setup() -> (Alphabet, FieldSpec) {
        (Alphabet::plain(&["a", "b", "c"]).unwrap(), FieldSpec::rationals())
    }

    #[test]
    fn single_rewrite() {
        let (a, q) = setup();
        let g = vec![parse_expression("cb - bc + aa", &a, q).unwrap()];
        let r = Reducer::new(3, q, &g);
        let f = parse_expression("cb", &a, q).unwrap();
        assert_eq!(r.normal_form(&f), parse_expression("bc - aa", &a, q).unwrap());
        assert!(r.normal_form(&Polynomial::zero(q)).is_zero());
    }

    #[test]
    fn two_step_trace() {
        let (a, q) = setup();
        let g = vec![parse_expression("cc - ba", &a, q).unwrap(), parse_expression("cb - bc + aa", &a, q).unwrap()];
        let r = Reducer::new(3, q, &g);
        let f = parse_expression("ccb", &a, q).unwrap();
        assert_eq!(r.normal_form(&f), parse_expression("bab", &a, q).unwrap());
    }

    #[test]
    fn echelon_is_reduced() {
        let (a, q) = setup();
        let rows = ["ab + ba", "2ab + aa", "ba - bb", "ab + 2ba - bb"]
            .iter()
            .map(|s| parse_expression(s, &a, q).unwrap())
            .collect::<Vec<_>>();
        let e = echelon(rows);
        assert_eq!(e.len(), 3);
        let lws: Vec<_> = e.iter().map(|p| p.leading_word().unwrap().clone()).collect();
        for p in &e {
            assert!(p.leading_coeff().unwrap().is_one());
            for (w, _) in p.tail() {
                assert!(!lws.contains(w));
            }
        }
    }
}
