//! Basis files:
//!
//! ```text
//! field 0
//! generators a b c x
//! complete_through 6
//! elements
//! g1 = bb - ac + aa
//! ```

use crate::freealg::Family;
use crate::presentation::{parse_expression, parse_presentation};

use super::{GroebnerBasis, GroebnerError};

pub fn export_basis(gb: &GroebnerBasis) -> String {
    let a = gb.alphabet();
    let mut out = format!("field {}\ngenerators {}\n", gb.field().characteristic(), a.names().join(" "));
    for (fam, tag) in [(Family::X, "X"), (Family::Y, "Y")] {
        let members: Vec<String> = a.generators().iter().filter(|g| g.family == fam).map(|g| g.name()).collect();
        if !members.is_empty() {
            out.push_str(&format!("family {tag} {}\n", members.join(" ")));
        }
    }
    out.push_str(&format!("complete_through {}\nelements\n", gb.complete_through()));
    for (i, g) in gb.elements().iter().enumerate() {
        out.push_str(&format!("g{} = {}\n", i + 1, g.render(a)));
    }
    out
}

/// Reads a file written by [`export_basis`]. Elements are taken as given
/// (made monic, not re-verified).
pub fn parse_basis(text: &str) -> Result<GroebnerBasis, GroebnerError> {
    let mut header = String::new();
    let mut complete: Option<usize> = None;
    let mut body_start = None;
    for (i, line) in text.lines().enumerate() {
        let t = line.split('#').next().unwrap_or("").trim();
        if t == "elements" {
            body_start = Some(i + 1);
            break;
        }
        if let Some(rest) = t.strip_prefix("complete_through") {
            let d = rest.trim().parse().map_err(|_| GroebnerError::Format { line: i + 1, msg: "bad degree".into() })?;
            complete = Some(d);
            header.push('\n');
        } else {
            header.push_str(line);
            header.push('\n');
        }
    }
    let body_start = body_start.ok_or(GroebnerError::Format { line: 1, msg: "missing `elements` line".into() })?;
    let complete =
        complete.ok_or(GroebnerError::Format { line: 1, msg: "missing `complete_through` line".into() })?;
    header.push_str("relations\n");
    let shell = parse_presentation(&header)?;
    let mut elements = Vec::new();
    for (i, line) in text.lines().enumerate().skip(body_start) {
        let t = line.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        let expr = match t.split_once('=') {
            Some((name, e)) if name.trim().starts_with('g') => e,
            _ => return Err(GroebnerError::Format { line: i + 1, msg: "expected `g<i> = <expression>`".into() }),
        };
        let p = parse_expression(expr, shell.alphabet(), shell.field()).map_err(|mut e| {
            e.line = i + 1;
            e
        })?;
        if p.is_zero() {
            return Err(GroebnerError::Format { line: i + 1, msg: "zero element".into() });
        }
        elements.push(p.monic());
    }
    Ok(GroebnerBasis::from_parts(shell.alphabet().clone(), shell.field(), elements, complete))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::presentation::builtin;
    use crate::scalar::FieldSpec;

    #[test]
    fn round_trip() {
        for ch in [0, 5] {
            let gb = buchberger(&builtin("R31", FieldSpec::new(ch).unwrap()).unwrap(), 5).unwrap();
            let text = export_basis(&gb);
            assert!(text.starts_with(&format!("field {ch}\ngenerators a b c x\ncomplete_through 5\nelements\ng1 = ")));
            assert_eq!(parse_basis(&text).unwrap(), gb);
        }
    }

    #[test]
    fn empty_basis() {
        let p = parse_presentation("field 2\ngenerators a b\nrelations\n").unwrap();
        let gb = buchberger(&p, 4).unwrap();
        assert_eq!(parse_basis(&export_basis(&gb)).unwrap(), gb);
    }

    #[test]
    fn missing_header() {
        assert!(matches!(parse_basis("field 0\ngenerators a\nelements\n"), Err(GroebnerError::Format { .. })));
    }
}
