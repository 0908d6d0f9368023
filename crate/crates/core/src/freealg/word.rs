use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use super::FreeAlgError;

/// Index of a generator in its [`Alphabet`]; the numeric order is the
/// monomial order on letters.
pub type Letter = u16;

/// Which family of the bi-indexed alphabet a generator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Plain,
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub base: String,
    pub family: Family,
    pub copy: u32,
}

impl Generator {
    pub fn plain(name: impl Into<String>) -> Self {
        Generator { base: name.into(), family: Family::Plain, copy: 1 }
    }

    pub fn indexed(base: impl Into<String>, family: Family, copy: u32) -> Self {
        Generator { base: base.into(), family, copy }
    }

    /// Display name: plain generators use the base name, indexed ones `base.copy`.
    pub fn name(&self) -> String {
        match self.family {
            Family::Plain => self.base.clone(),
            Family::X | Family::Y => format!("{}.{}", self.base, self.copy),
        }
    }
}

/// A word in the free monoid. Ordered by deglex: shorter words first, then
/// lexicographically by letter index.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Letter; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`.
    pub fn sandwich(left: &[Letter], mid: &[Letter], right: &[Letter]) -> Word {
        let mut v = SmallVec::with_capacity(left.len() + mid.len() + right.len());
        v.extend_from_slice(left);
        v.extend_from_slice(mid);
        v.extend_from_slice(right);
        Word(v)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    /// Position of the first occurrence of `pat` as a factor.
    pub fn find(&self, pat: &[Letter]) -> Option<usize> {
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat)
    }

    pub fn contains(&self, pat: &[Letter]) -> bool {
        self.find(pat).is_some()
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(SmallVec::from_vec(v))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.as_slice())
    }
}

/// Deglex comparison of words given as generator sequences, under an
/// explicit ascending generator order.
pub fn deglex_cmp(order: &[Generator], u: &[Generator], v: &[Generator]) -> Result<Ordering, FreeAlgError> {
    let rank = |g: &Generator| {
        order.iter().position(|o| o == g).ok_or_else(|| FreeAlgError::UnknownGenerator(g.name()))
    };
    if u.len() != v.len() {
        // still validate letters
        for g in u.iter().chain(v) {
            rank(g)?;
        }
        return Ok(u.len().cmp(&v.len()));
    }
    let mut result = Ordering::Equal;
    for (a, b) in u.iter().zip(v) {
        let (ra, rb) = (rank(a)?, rank(b)?);
        if result == Ordering::Equal {
            result = ra.cmp(&rb);
        }
    }
    Ok(result)
}

/// An ordered generator set. Declaration order is the letter order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    by_name: HashMap<String, Letter>,
    by_key: HashMap<(String, Family, u32), Letter>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self, FreeAlgError> {
        if gens.len() > Letter::MAX as usize {
            return Err(FreeAlgError::AlphabetTooLarge(gens.len()));
        }
        let mut by_name = HashMap::with_capacity(gens.len());
        let mut by_key = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if by_name.insert(g.name(), i as Letter).is_some() {
                return Err(FreeAlgError::DuplicateGenerator(g.name()));
            }
            // (base, copy) pairs are unique regardless of family
            if by_key.insert((g.base.clone(), g.family, g.copy), i as Letter).is_some()
                || (g.family != Family::Plain
                    && gens[..i].iter().any(|h| h.base == g.base && h.copy == g.copy))
            {
                return Err(FreeAlgError::DuplicateGenerator(g.name()));
            }
        }
        Ok(Alphabet { gens, by_name, by_key })
    }

    pub fn plain<S: AsRef<str>>(names: &[S]) -> Result<Self, FreeAlgError> {
        Alphabet::new(names.iter().map(|n| Generator::plain(n.as_ref())).collect())
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, l: Letter) -> &Generator {
        &self.gens[l as usize]
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn letter_of(&self, base: &str, family: Family, copy: u32) -> Option<Letter> {
        self.by_key.get(&(base.to_string(), family, copy)).copied()
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, FreeAlgError> {
        names
            .iter()
            .map(|n| self.letter(n).ok_or_else(|| FreeAlgError::UnknownGenerator(n.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from)
    }

    /// True if every generator name is a single character, so words can be
    /// written by juxtaposition.
    pub fn single_char_names(&self) -> bool {
        self.gens.iter().all(|g| g.name().chars().count() == 1)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.single_char_names() { "" } else { "*" };
        w.letters().iter().map(|&l| self.gens[l as usize].name()).collect::<Vec<_>>().join(sep)
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(Generator::name).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering::*;

    fn gens(names: &str) -> Vec<Generator> {
        names.chars().map(|c| Generator::plain(c.to_string())).collect()
    }

    #[test]
    fn deglex_examples() {
        let order = gens("abcx");
        let g = |s: &str| gens(s);
        assert_eq!(deglex_cmp(&order, &g("a"), &g("b")).unwrap(), Less);
        assert_eq!(deglex_cmp(&order, &g("aa"), &g("b")).unwrap(), Greater);
        assert_eq!(deglex_cmp(&order, &g("ab"), &g("ba")).unwrap(), Less);
        assert_eq!(deglex_cmp(&order, &g("ab"), &g("ab")).unwrap(), Equal);
        assert!(matches!(deglex_cmp(&order, &g("az"), &g("ab")), Err(FreeAlgError::UnknownGenerator(_))));
    }

    #[test]
    fn word_order_matches_generator_order() {
        let a = Alphabet::plain(&["a", "b", "c", "x"]).unwrap();
        let w = |s: &str| a.word(&s.chars().map(|c| c.to_string()).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect::<Vec<_>>()).unwrap();
        assert!(w("a") < w("b"));
        assert!(w("aa") > w("x"));
        assert!(w("ab") < w("ba"));
        assert!(Word::empty() < w("a"));
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert!(matches!(Alphabet::plain(&["a", "a"]), Err(FreeAlgError::DuplicateGenerator(_))));
        let g = vec![Generator::indexed("a", Family::X, 1), Generator::indexed("a", Family::Y, 1)];
        assert!(Alphabet::new(g).is_err());
    }

    #[test]
    fn render_uses_star_for_long_names() {
        let a = Alphabet::new(vec![Generator::indexed("a", Family::X, 1), Generator::indexed("x", Family::Y, 2)]).unwrap();
        assert_eq!(a.render_word(&Word::from_letters(&[0, 1, 0])), "a.1*x.2*a.1");
        assert_eq!(a.letter("x.2"), Some(1));
    }
}
