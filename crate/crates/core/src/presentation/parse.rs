//! Parser for the presentation file format and relation expressions.
//!
//! ```text
//! # comments run to end of line
//! label R31            (optional)
//! field 0
//! generators a b c x
//! family X a b c       (optional, marks bi-indexed generators)
//! family Y x
//! relations
//! cb - bc + aa
//! 2 a*x - x^2
//! ```
//!
//! In expressions a term is an optional coefficient (integer or `n/d`)
//! followed by generators. Single-letter generators may be juxtaposed;
//! any generator may be separated by `*` or whitespace. `g^k` repeats the
//! preceding letter.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::freealg::{Alphabet, Family, Generator, Letter, Polynomial, Word};
use crate::scalar::{FieldSpec, Scalar};

use super::{Presentation, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Int(s.parse().expect("digits")), col));
                continue;
            }
            c if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => return Err(ParseError::new(line, col, format!("unexpected character `{other}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct ExprParser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    alphabet: &'a Alphabet,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), msg)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expression(&mut self) -> Result<Vec<(BigRational, Vec<Letter>)>, ParseError> {
        let mut terms = Vec::new();
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected `+` or `-` between terms")),
            };
            first = false;
            let (c, w) = self.term()?;
            terms.push((if negative { -c } else { c }, w));
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(BigRational, Vec<Letter>), ParseError> {
        let mut coeff = BigRational::from_integer(1.into());
        let mut have_coeff = false;
        if let Some(Tok::Int(_)) = self.peek() {
            let Some(Tok::Int(n)) = self.next() else { unreachable!() };
            let mut q = BigRational::from_integer(n);
            if let Some(Tok::Slash) = self.peek() {
                self.pos += 1;
                match self.next() {
                    Some(Tok::Int(d)) if !d.is_zero() => q /= BigRational::from_integer(d),
                    _ => {
                        self.pos -= 1;
                        return Err(self.err("expected a nonzero denominator"));
                    }
                }
            }
            coeff = q;
            have_coeff = true;
            if let Some(Tok::Star) = self.peek() {
                self.pos += 1;
            }
        }
        let mut word = Vec::new();
        let mut need_factor = false;
        loop {
            match self.peek() {
                Some(Tok::Ident(_)) => {
                    let col = self.col();
                    let Some(Tok::Ident(name)) = self.next() else { unreachable!() };
                    let mut letters = self.resolve(&name, col)?;
                    if let Some(Tok::Caret) = self.peek() {
                        self.pos += 1;
                        let k = match self.next() {
                            Some(Tok::Int(k)) => k,
                            _ => {
                                self.pos -= 1;
                                return Err(self.err("expected an exponent"));
                            }
                        };
                        let k: usize = k.try_into().map_err(|_| self.err("exponent too large"))?;
                        let last = letters.pop().expect("nonempty factor");
                        letters.extend(std::iter::repeat_n(last, k));
                    }
                    word.extend(letters);
                    need_factor = false;
                    if let Some(Tok::Star) = self.peek() {
                        self.pos += 1;
                        need_factor = true;
                    }
                }
                Some(Tok::Plus) | Some(Tok::Minus) | None => break,
                Some(_) => return Err(self.err("unexpected token in term")),
            }
        }
        if need_factor {
            return Err(self.err("expected a generator after `*`"));
        }
        if word.is_empty() && !have_coeff {
            return Err(self.err("expected a term"));
        }
        Ok((coeff, word))
    }

    /// A whole identifier naming a generator, or a juxtaposition of
    /// single-character generator names.
    fn resolve(&self, name: &str, col: usize) -> Result<Vec<Letter>, ParseError> {
        if let Some(l) = self.alphabet.letter(name) {
            return Ok(vec![l]);
        }
        let mut out = Vec::new();
        for (k, ch) in name.chars().enumerate() {
            match self.alphabet.letter(&ch.to_string()) {
                Some(l) => out.push(l),
                None => {
                    return Err(ParseError::new(self.line, col + k, format!("unknown generator in `{name}`")));
                }
            }
        }
        Ok(out)
    }
}

/// Parses a single relation expression into a polynomial over `field`.
/// Zero results are not rejected here; see [`parse_presentation`].
pub fn parse_expression(text: &str, alphabet: &Alphabet, field: FieldSpec) -> Result<Polynomial, ParseError> {
    expression_at(text, alphabet, field, 1, 1)
}

fn expression_at(
    text: &str,
    alphabet: &Alphabet,
    field: FieldSpec,
    line: usize,
    col0: usize,
) -> Result<Polynomial, ParseError> {
    let toks = lex(text, line, col0)?;
    let end_col = col0 + text.chars().count();
    let mut p = ExprParser { toks, pos: 0, line, end_col, alphabet };
    let terms = p.expression()?;
    let mut out = Vec::with_capacity(terms.len());
    for (c, w) in terms {
        let s: Scalar = field
            .from_rational(&c)
            .map_err(|_| ParseError::new(line, col0, format!("coefficient {c} is undefined in {field}")))?;
        out.push((Word::from(w), s));
    }
    Ok(Polynomial::from_terms(field, out))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses and validates a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut field: Option<FieldSpec> = None;
    let mut names: Option<Vec<String>> = None;
    let mut families: Vec<(Family, Vec<String>, usize)> = Vec::new();
    let mut label: Option<String> = None;
    let mut relation_lines: Option<Vec<(usize, usize, String)>> = None;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if let Some(rels) = relation_lines.as_mut() {
            let indent = body.len() - body.trim_start().len();
            rels.push((lineno, indent + 1, body.trim().to_string()));
            continue;
        }
        let trimmed = body.trim();
        let (keyword, rest) = match trimmed.split_once(char::is_whitespace) {
            Some((k, r)) => (k, r.trim()),
            None => (trimmed, ""),
        };
        let err = |msg: String| PresentationError::Parse(ParseError::new(lineno, 1, msg));
        match keyword {
            "field" => {
                if names.is_some() || field.is_some() {
                    return Err(err("`field` must come first and only once".into()));
                }
                let ch: u64 = rest.parse().map_err(|_| err(format!("invalid characteristic `{rest}`")))?;
                field = Some(FieldSpec::new(ch).map_err(|e| err(e.to_string()))?);
            }
            "generators" => {
                if field.is_none() {
                    return Err(err("`generators` must follow `field`".into()));
                }
                if names.is_some() {
                    return Err(err("duplicate `generators` line".into()));
                }
                names = Some(rest.split_whitespace().map(str::to_string).collect());
            }
            "family" => {
                let mut parts = rest.split_whitespace();
                let fam = match parts.next() {
                    Some("X") => Family::X,
                    Some("Y") => Family::Y,
                    other => return Err(err(format!("expected `X` or `Y` after `family`, got {other:?}"))),
                };
                families.push((fam, parts.map(str::to_string).collect(), lineno));
            }
            "label" => label = Some(rest.to_string()),
            "relations" => {
                if names.is_none() {
                    return Err(err("`relations` must follow `generators`".into()));
                }
                if !rest.is_empty() {
                    return Err(err("unexpected text after `relations`".into()));
                }
                relation_lines = Some(Vec::new());
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let field = field.ok_or_else(|| ParseError::new(1, 1, "missing `field` line"))?;
    let names = names.ok_or_else(|| ParseError::new(1, 1, "missing `generators` line"))?;
    let relation_lines = relation_lines.unwrap_or_default();
    let alphabet = build_alphabet(&names, &families)?;

    let mut relations = Vec::with_capacity(relation_lines.len());
    for (lineno, col, text) in relation_lines {
        let p = expression_at(&text, &alphabet, field, lineno, col)?;
        if p.is_zero() {
            return Err(ParseError::new(lineno, col, "relation is zero").into());
        }
        if !p.is_homogeneous() {
            return Err(ParseError::new(lineno, col, "relation is not homogeneous").into());
        }
        if p.homogeneous_degree() == Some(0) {
            return Err(ParseError::new(lineno, col, "relation has degree 0").into());
        }
        relations.push(p);
    }
    let mut pres = Presentation::new(field, alphabet, relations)?;
    if let Some(l) = label {
        pres = pres.with_label(l);
    }
    Ok(pres)
}

fn build_alphabet(names: &[String], families: &[(Family, Vec<String>, usize)]) -> Result<Alphabet, PresentationError> {
    for n in names {
        let mut chars = n.chars();
        let ok = chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char);
        if !ok {
            return Err(ParseError::new(1, 1, format!("invalid generator name `{n}`")).into());
        }
    }
    let mut gens: Vec<Generator> = names.iter().map(|n| Generator::plain(n.clone())).collect();
    for (fam, members, lineno) in families {
        for m in members {
            let idx = names
                .iter()
                .position(|n| n == m)
                .ok_or_else(|| ParseError::new(*lineno, 1, format!("`{m}` is not a declared generator")))?;
            if gens[idx].family != Family::Plain {
                return Err(ParseError::new(*lineno, 1, format!("`{m}` is assigned to two families")).into());
            }
            let (base, copy) = match m.rsplit_once('.') {
                Some((b, c)) if !b.is_empty() => match c.parse::<u32>() {
                    Ok(k) if k >= 1 => (b.to_string(), k),
                    _ => (m.clone(), 1),
                },
                _ => (m.clone(), 1),
            };
            gens[idx] = Generator::indexed(base, *fam, copy);
        }
    }
    // indexed generators display as base.copy; renaming must not change names
    for (g, n) in gens.iter().zip(names) {
        if g.name() != *n {
            return Err(ParseError::new(1, 1, format!("family member `{n}` must be written as base.copy")).into());
        }
    }
    Ok(Alphabet::new(gens)?)
}
