//! The published Gröbner bases of the two seed algebras over Q, one
//! element per line as `g<i> = <expression>`, and a matcher comparing
//! them with computed bases up to a nonzero scalar per element.

use std::collections::HashMap;
use std::fmt;

use crate::freealg::{Polynomial, Word};
use crate::groebner::GroebnerBasis;
use crate::presentation::{parse_expression, ParseError};
use crate::scalar::Scalar;

pub const TABLE1: &str = include_str!("table1.txt");
pub const TABLE2: &str = include_str!("table2.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    One,
    Two,
}

impl Table {
    pub fn catalog_key(self) -> &'static str {
        match self {
            Table::One => "R31",
            Table::Two => "R32",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            Table::One => TABLE1,
            Table::Two => TABLE2,
        }
    }

    pub fn expected_len(self) -> usize {
        match self {
            Table::One => 46,
            Table::Two => 102,
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::One => "table1",
            Table::Two => "table2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// The `i` of `g<i>`.
    pub index: usize,
    pub text: String,
}

/// Splits corpus text into entries; blank lines and `#` comments are skipped.
pub fn entries(text: &str) -> Result<Vec<CorpusEntry>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let bad = || ParseError { line: i + 1, col: 1, msg: "expected `g<i> = <expression>`".into() };
        let (name, expr) = t.split_once('=').ok_or_else(bad)?;
        let index = name.trim().strip_prefix('g').and_then(|k| k.parse().ok()).ok_or_else(bad)?;
        out.push(CorpusEntry { index, text: expr.trim().to_string() });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: usize,
    pub printed: String,
    pub detail: String,
    /// When the printed polynomial is a linear combination of several
    /// computed elements: `(position, coefficient)` pairs.
    pub combination: Option<Vec<(usize, Scalar)>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusReport {
    pub table_len: usize,
    pub computed_len: usize,
    /// `(g index, position in the computed basis)`
    pub matched: Vec<(usize, usize)>,
    pub unmatched_table: Vec<Mismatch>,
    /// Positions of computed elements no table entry matches.
    pub unmatched_computed: Vec<usize>,
}

impl CorpusReport {
    pub fn is_exact_match(&self) -> bool {
        self.unmatched_table.is_empty() && self.unmatched_computed.is_empty() && self.table_len == self.computed_len
    }
}

/// Matches every entry of `text` against `gb` up to a nonzero scalar.
/// Entries that fail to parse or to match are reported, never dropped.
pub fn compare(text: &str, gb: &GroebnerBasis) -> Result<CorpusReport, ParseError> {
    let entries = entries(text)?;
    let alphabet = gb.alphabet();
    let by_lead: HashMap<&Word, usize> =
        gb.elements().iter().enumerate().map(|(i, g)| (g.leading_word().expect("nonzero"), i)).collect();
    let mut used = vec![false; gb.len()];
    let mut matched = Vec::new();
    let mut unmatched_table = Vec::new();
    for e in &entries {
        let parsed = match parse_expression(&e.text, alphabet, gb.field()) {
            Ok(p) if !p.is_zero() => p.monic(),
            Ok(_) => {
                unmatched_table.push(Mismatch {
                    index: e.index,
                    printed: e.text.clone(),
                    detail: "is zero".into(),
                    combination: None,
                });
                continue;
            }
            Err(err) => {
                unmatched_table.push(Mismatch {
                    index: e.index,
                    printed: e.text.clone(),
                    detail: err.to_string(),
                    combination: None,
                });
                continue;
            }
        };
        let lw = parsed.leading_word().expect("nonzero");
        let combination = as_combination(&parsed, gb, &by_lead);
        match by_lead.get(lw) {
            Some(&i) if gb.elements()[i] == parsed => {
                used[i] = true;
                matched.push((e.index, i));
            }
            Some(&i) => {
                let diff = difference(&parsed, &gb.elements()[i]);
                unmatched_table.push(Mismatch {
                    index: e.index,
                    printed: e.text.clone(),
                    detail: format!(
                        "leading word {} matches computed element {} but (printed - computed), both monic, is {}",
                        alphabet.render_word(lw),
                        i + 1,
                        diff.render(alphabet)
                    ),
                    combination,
                });
            }
            None => unmatched_table.push(Mismatch {
                index: e.index,
                printed: e.text.clone(),
                detail: format!("no computed element has leading word {}", alphabet.render_word(lw)),
                combination,
            }),
        }
    }
    let unmatched_computed = (0..gb.len()).filter(|&i| !used[i]).collect();
    Ok(CorpusReport { table_len: entries.len(), computed_len: gb.len(), matched, unmatched_table, unmatched_computed })
}

/// In a reduced basis the leading words occur only in their own element,
/// so a combination of elements is determined by its coefficients there.
fn as_combination(f: &Polynomial, gb: &GroebnerBasis, by_lead: &HashMap<&Word, usize>) -> Option<Vec<(usize, Scalar)>> {
    let parts: Vec<(usize, Scalar)> =
        f.terms().iter().filter_map(|(w, c)| by_lead.get(w).map(|&i| (i, c.clone()))).collect();
    if parts.len() < 2 {
        return None;
    }
    let mut sum = Polynomial::zero(f.field());
    for (i, c) in &parts {
        sum = sum.try_add(&gb.elements()[*i].scale(c).expect("same field")).expect("same field");
    }
    (sum == *f).then_some(parts)
}

fn difference(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.try_sub(b).expect("same field")
}
