//! Built-in presentations: the two 5-step nilpotent seeds on 4 and 5
//! generators and the five 4-step nilpotent semigroup algebras on 1..=5
//! generators, together with their known Hilbert series.

use crate::scalar::FieldSpec;

use super::{parse_presentation, Presentation, PresentationError};

pub struct CatalogEntry {
    pub key: &'static str,
    pub generators: &'static [&'static str],
    pub relations: &'static [&'static str],
    /// Hilbert coefficients `dim R_0, dim R_1, ...` up to the last nonzero one,
    /// over Q and F_2. Some odd characteristics give a larger series.
    pub expected_series: Option<&'static [u64]>,
    /// Least `k` with `R_k = 0`.
    pub expected_index: Option<usize>,
}

pub const CATALOG_KEYS: [&str; 7] = ["R31", "R32", "P41", "P42", "P43", "P44", "P45"];

static CATALOG: [CatalogEntry; 7] = [
    CatalogEntry {
        key: "R31",
        generators: &["a", "b", "c", "x"],
        relations: &["cb - bc + aa", "bb + aa - ac", "cc - ba", "xx", "ax + bx - xa - xb", "bx + cx - xa - xb - xc"],
        expected_series: Some(&[1, 4, 10, 18, 21]),
        expected_index: Some(5),
    },
    CatalogEntry {
        key: "R32",
        generators: &["a", "b", "c", "x", "y"],
        relations: &[
            "cb - bc + aa",
            "bb + aa - ac",
            "cc - ba",
            "yy - xx",
            "yx",
            "ay + bx + cy - xb - yc",
            "ax + by - xa - yb",
            "cy + bx - ya - xb - yc",
            "ax + by + cx - ya - xb",
        ],
        expected_series: Some(&[1, 5, 16, 35, 43]),
        expected_index: Some(5),
    },
    CatalogEntry {
        key: "P41",
        generators: &["a"],
        relations: &["aa"],
        expected_series: Some(&[1, 1]),
        expected_index: Some(2),
    },
    CatalogEntry {
        key: "P42",
        generators: &["a", "b"],
        relations: &["bb - aa", "ba"],
        expected_series: Some(&[1, 2, 2]),
        expected_index: Some(3),
    },
    CatalogEntry {
        key: "P43",
        generators: &["a", "b", "c"],
        relations: &["cc - ba", "cb - aa", "bb", "ca"],
        expected_series: Some(&[1, 3, 5, 4]),
        expected_index: Some(4),
    },
    CatalogEntry {
        key: "P44",
        generators: &["a", "b", "c", "d"],
        relations: &["dd - ca", "dc - ab", "db - aa", "da", "cd - bb", "cc - ba", "cb - bc"],
        expected_series: Some(&[1, 4, 9, 8]),
        expected_index: Some(4),
    },
    CatalogEntry {
        key: "P45",
        generators: &["a", "b", "c", "d", "e"],
        relations: &[
            "de - eb", "ce - db", "ee - da", "ed - cb", "dd - bb", "cd - ab", "ec - ca", "dc - ba", "cc - aa", "ea",
        ],
        expected_series: Some(&[1, 5, 15, 25]),
        expected_index: Some(4),
    },
];

pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

impl CatalogEntry {
    pub fn text(&self, field: FieldSpec) -> String {
        let mut s = format!("label {}\nfield {}\ngenerators {}\nrelations\n", self.key, field.characteristic(), self.generators.join(" "));
        for r in self.relations {
            s.push_str(r);
            s.push('\n');
        }
        s
    }

    pub fn presentation(&self, field: FieldSpec) -> Result<Presentation, PresentationError> {
        parse_presentation(&self.text(field))
    }
}

/// Catalog lookup; a leading `@` on the key is accepted.
pub fn builtin(key: &str, field: FieldSpec) -> Result<Presentation, PresentationError> {
    let key = key.strip_prefix('@').unwrap_or(key);
    CATALOG
        .iter()
        .find(|e| e.key.eq_ignore_ascii_case(key))
        .ok_or_else(|| PresentationError::UnknownKey(key.to_string()))?
        .presentation(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::phi;

    #[test]
    fn relation_counts() {
        let counts: Vec<usize> =
            CATALOG_KEYS.iter().map(|k| builtin(k, FieldSpec::rationals()).unwrap().relation_count()).collect();
        assert_eq!(counts, vec![6, 9, 1, 2, 4, 7, 10]);
        let g: Vec<usize> =
            CATALOG_KEYS.iter().map(|k| builtin(k, FieldSpec::rationals()).unwrap().generator_count()).collect();
        assert_eq!(g, vec![4, 5, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn semigroup_counts_meet_the_k4_threshold_exactly() {
        let t = phi(4).unwrap();
        for (n, key) in ["P41", "P42", "P43", "P44", "P45"].iter().enumerate() {
            let n = n as u64 + 1;
            let need = t.ceil_times(n * n).unwrap();
            assert_eq!(builtin(key, FieldSpec::rationals()).unwrap().relation_count() as u64, need);
        }
    }

    #[test]
    fn all_quadratic() {
        for key in CATALOG_KEYS {
            assert!(builtin(key, FieldSpec::new(2).unwrap()).unwrap().is_quadratic());
        }
    }

    #[test]
    fn r32_mod_2() {
        let p = builtin("@R32", FieldSpec::new(2).unwrap()).unwrap();
        assert_eq!((p.generator_count(), p.relation_count()), (5, 9));
        assert!(p.relations().iter().all(|r| r.terms().iter().all(|(_, c)| c.is_one())));
    }

    #[test]
    fn p45_first_relation() {
        let p = builtin("P45", FieldSpec::rationals()).unwrap();
        assert_eq!(p.relations()[0].render(p.alphabet()), "-eb + de");
    }

    #[test]
    fn unknown_key() {
        assert!(matches!(builtin("R99", FieldSpec::rationals()), Err(PresentationError::UnknownKey(_))));
    }
}
