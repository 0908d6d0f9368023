use serde_json::{json, Value};

use crate::freealg::{Alphabet, Family, Polynomial};
use crate::scalar::Scalar;

use super::Presentation;

/// Text rendering that [`super::parse_presentation`] reads back to an equal value.
pub fn serialize(p: &Presentation) -> String {
    let mut out = String::new();
    if let Some(l) = p.label() {
        out.push_str(&format!("label {l}\n"));
    }
    out.push_str(&format!("field {}\n", p.field().characteristic()));
    out.push_str("generators");
    for n in p.alphabet().names() {
        out.push(' ');
        out.push_str(&n);
    }
    out.push('\n');
    for (fam, tag) in [(Family::X, "X"), (Family::Y, "Y")] {
        let members: Vec<String> =
            p.alphabet().generators().iter().filter(|g| g.family == fam).map(|g| g.name()).collect();
        if !members.is_empty() {
            out.push_str(&format!("family {tag} {}\n", members.join(" ")));
        }
    }
    out.push_str("relations\n");
    for r in p.relations() {
        out.push_str(&r.render(p.alphabet()));
        out.push('\n');
    }
    out
}

fn coeff_json(c: &Scalar) -> Value {
    match c {
        Scalar::Modular { value, .. } => json!(value),
        Scalar::Rational(q) if q.is_integer() => match i64::try_from(q.numer()) {
            Ok(v) => json!(v),
            Err(_) => json!(q.numer().to_string()),
        },
        Scalar::Rational(q) => json!(q.to_string()),
    }
}

/// `[[coeff, [letters]], ...]` for one polynomial.
pub fn relation_json(r: &Polynomial, alphabet: &Alphabet) -> Value {
    Value::Array(
        r.terms()
            .iter()
            .map(|(w, c)| {
                let letters: Vec<String> = w.letters().iter().map(|&l| alphabet.generator(l).name()).collect();
                json!([coeff_json(c), letters])
            })
            .collect(),
    )
}

/// Machine-readable rendering `{field, generators, relations}`.
pub fn to_json(p: &Presentation) -> Value {
    let mut v = json!({
        "field": p.field().characteristic(),
        "generators": p.alphabet().names(),
        "relations": p.relations().iter().map(|r| relation_json(r, p.alphabet())).collect::<Vec<_>>(),
    });
    if let Some(l) = p.label() {
        v["label"] = json!(l);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::super::{builtin, parse_presentation, CATALOG_KEYS};
    use super::*;
    use crate::freealg::{Generator, Word};
    use crate::scalar::FieldSpec;
    use proptest::prelude::*;

    #[test]
    fn builtins_round_trip() {
        for key in CATALOG_KEYS {
            for ch in [0, 2, 3] {
                let p = builtin(key, FieldSpec::new(ch).unwrap()).unwrap();
                assert_eq!(parse_presentation(&serialize(&p)).unwrap(), p, "{key} char {ch}");
            }
        }
    }

    #[test]
    fn dotted_names_round_trip() {
        let gens = vec![
            Generator::indexed("a", Family::X, 1),
            Generator::indexed("a", Family::X, 2),
            Generator::indexed("x", Family::Y, 1),
        ];
        let alphabet = Alphabet::new(gens).unwrap();
        let f = FieldSpec::rationals();
        let r = Polynomial::from_int_terms(f, &[(1, &[0, 1]), (-3, &[2, 2])]);
        let p = Presentation::new(f, alphabet, vec![r]).unwrap();
        let text = serialize(&p);
        assert!(text.contains("a.1*a.2"));
        assert_eq!(parse_presentation(&text).unwrap(), p);
    }

    #[test]
    fn free_algebra_has_empty_relation_block() {
        let p = Presentation::new(FieldSpec::rationals(), Alphabet::plain(&["a", "b"]).unwrap(), vec![]).unwrap();
        let text = serialize(&p);
        assert!(text.ends_with("relations\n"));
        assert_eq!(parse_presentation(&text).unwrap(), p);
    }

    #[test]
    fn json_shape() {
        let p = builtin("R31", FieldSpec::rationals()).unwrap();
        let v = to_json(&p);
        assert_eq!(v["field"], json!(0));
        assert_eq!(v["generators"], json!(["a", "b", "c", "x"]));
        assert_eq!(v["relations"][0], json!([[1, ["c", "b"]], [-1, ["b", "c"]], [1, ["a", "a"]]]));
        assert_eq!(v["relations"].as_array().unwrap().len(), 6);
    }

    fn random_presentation() -> impl Strategy<Value = Presentation> {
        let names = prop_oneof![
            Just(vec!["a", "b", "c"]),
            Just(vec!["x.1", "x.2", "yy"]),
            Just(vec!["p", "q"]),
        ];
        (names, prop::sample::select(vec![0u64, 2, 5]), 1usize..4).prop_flat_map(|(names, ch, deg)| {
            let n = names.len() as u16;
            let rel = proptest::collection::vec(
                ((-5i64..6, 1i64..4), proptest::collection::vec(0..n, deg..=deg)),
                1..5,
            );
            (Just(names), Just(ch), proptest::collection::vec(rel, 0..4))
        })
        .prop_map(|(names, ch, rels)| {
            let f = FieldSpec::new(ch).unwrap();
            let alphabet = Alphabet::plain(&names).unwrap();
            let rels: Vec<Polynomial> = rels
                .into_iter()
                .map(|ts| {
                    Polynomial::from_terms(
                        f,
                        ts.into_iter().map(|((n, d), w)| {
                            let q = num_rational::BigRational::new(n.into(), d.into());
                            (Word::from(w), f.from_rational(&q).unwrap_or_else(|_| f.from_i64(n)))
                        }),
                    )
                })
                .filter(|r| !r.is_zero())
                .collect();
            Presentation::new(f, alphabet, rels).unwrap()
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(p in random_presentation()) {
            prop_assert_eq!(parse_presentation(&serialize(&p)).unwrap(), p);
        }
    }
}
