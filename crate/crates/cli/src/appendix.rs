//! `verify-appendix`: recompute the seed bases through degree 6 and check
//! them against the published tables, over F_p and in characteristic 2.

use std::collections::BTreeSet;

use anyhow::Result;
use serde_json::{json, Value};

use quadalg::corpus::{compare, CorpusReport, Table};
use quadalg::groebner::{buchberger_with, integerize, transfer_mod_p, CompletionOptions, GroebnerBasis};
use quadalg::hilbert::hilbert_series;
use quadalg::presentation::{builtin, catalog};
use quadalg::FieldSpec;

use crate::report::series_json;

const DEGREE: usize = 6;

struct TransferRow {
    valid: bool,
    outside_ideal: usize,
    direct_series: Vec<u128>,
}

struct TableCheck {
    table: Table,
    corpus: CorpusReport,
    fof2: bool,
    non_powers: Vec<String>,
    transfers: Vec<(u64, Result<TransferRow, String>)>,
    series: Vec<u128>,
    expected: Vec<u128>,
    char2_series: Vec<u128>,
    char2_leading_only_0: Vec<String>,
    char2_leading_only_2: Vec<String>,
    gb: GroebnerBasis,
}

impl TableCheck {
    fn series_ok(&self) -> bool {
        self.series == self.expected
    }

    fn char2_ok(&self) -> bool {
        self.char2_series == self.series
    }

    fn transfers_ok(&self) -> bool {
        self.transfers.iter().all(|(_, r)| r.as_ref().is_ok_and(|t| t.valid))
    }

    fn ok(&self) -> bool {
        self.corpus.is_exact_match() && self.fof2 && self.transfers_ok() && self.series_ok() && self.char2_ok()
    }
}

fn check(table: Table, text: &str, primes: &[u64], opts: &CompletionOptions) -> Result<TableCheck> {
    let key = table.catalog_key();
    let p = builtin(key, FieldSpec::rationals())?;
    let gb = buchberger_with(&p, DEGREE, opts)?;
    let corpus = compare(text, &gb)?;
    let (ib, ir) = integerize(&gb)?;
    let non_powers = ir.offenders.iter().map(|&i| format!("g{}: {}", i + 1, ib.elements[i].leading_coeff())).collect();
    let mut transfers = Vec::new();
    for &q in primes {
        let row = match transfer_mod_p(&ib, &p, q, DEGREE, opts.execution) {
            Ok(t) => Ok(TransferRow {
                valid: t.is_valid(),
                outside_ideal: t.outside_ideal.len(),
                direct_series: hilbert_series(&t.direct, DEGREE)?.coefficients,
            }),
            Err(e) => Err(e.to_string()),
        };
        transfers.push((q, row));
    }
    let series = hilbert_series(&gb, DEGREE)?.coefficients;
    let mut expected: Vec<u128> = catalog()
        .iter()
        .find(|e| e.key == key)
        .and_then(|e| e.expected_series)
        .map(|s| s.iter().map(|&c| c as u128).collect())
        .unwrap_or_default();
    expected.resize(DEGREE + 1, 0);
    let p2 = builtin(key, FieldSpec::new(2)?)?;
    let gb2 = buchberger_with(&p2, DEGREE, opts)?;
    let char2_series = hilbert_series(&gb2, DEGREE)?.coefficients;
    let a = gb.alphabet();
    let l0: BTreeSet<_> = gb.leading_words().into_iter().collect();
    let l2: BTreeSet<_> = gb2.leading_words().into_iter().collect();
    let char2_leading_only_0 = l0.difference(&l2).map(|w| a.render_word(w)).collect();
    let char2_leading_only_2 = l2.difference(&l0).map(|w| a.render_word(w)).collect();
    Ok(TableCheck {
        table,
        corpus,
        fof2: ir.all_signed_powers_of_two(),
        non_powers,
        transfers,
        series,
        expected,
        char2_series,
        char2_leading_only_0,
        char2_leading_only_2,
        gb,
    })
}

fn to_json(c: &TableCheck) -> Value {
    let a = c.gb.alphabet();
    json!({
        "table": c.table.to_string(),
        "key": c.table.catalog_key(),
        "table_len": c.corpus.table_len,
        "expected_len": c.table.expected_len(),
        "computed_len": c.corpus.computed_len,
        "matched": c.corpus.matched.len(),
        "exact_match": c.corpus.is_exact_match(),
        "unmatched_table": c.corpus.unmatched_table.iter().map(|m| json!({
            "index": m.index,
            "printed": m.printed,
            "detail": m.detail,
            "combination": m.combination.as_ref().map(|parts| parts.iter().map(|(i, s)| json!({
                "element": i + 1,
                "coefficient": s.to_string(),
            })).collect::<Vec<_>>()),
        })).collect::<Vec<_>>(),
        "unmatched_computed": c.corpus.unmatched_computed.iter().map(|&i| json!({
            "element": i + 1,
            "text": c.gb.elements()[i].render(a),
        })).collect::<Vec<_>>(),
        "leading_coefficients_powers_of_two": c.fof2,
        "transfers": c.transfers.iter().map(|(p, r)| json!({
            "p": p,
            "valid": r.as_ref().is_ok_and(|t| t.valid),
            "outside_ideal": r.as_ref().ok().map(|t| t.outside_ideal),
            "direct_series": r.as_ref().ok().map(|t| series_json(&t.direct_series)),
            "error": r.as_ref().err(),
        })).collect::<Vec<_>>(),
        "series": series_json(&c.series),
        "expected_series": series_json(&c.expected),
        "series_ok": c.series_ok(),
        "char2_series": series_json(&c.char2_series),
        "char2_series_equal": c.char2_ok(),
        "char2_leading_words_only_in_char0": c.char2_leading_only_0,
        "char2_leading_words_only_in_char2": c.char2_leading_only_2,
        "pass": c.ok(),
    })
}

fn print_text(c: &TableCheck) {
    let a = c.gb.alphabet();
    let r = &c.corpus;
    println!("== {} ({}) through degree {DEGREE}", c.table, c.table.catalog_key());
    println!(
        "corpus: {} printed, {} computed, {} matched{}",
        r.table_len,
        r.computed_len,
        r.matched.len(),
        if r.is_exact_match() { " (exact)" } else { "" }
    );
    for m in &r.unmatched_table {
        println!("  g{} = {}", m.index, m.printed);
        println!("    {}", m.detail);
        if let Some(parts) = &m.combination {
            let terms: Vec<String> = parts.iter().map(|(i, s)| format!("({s})·[{}]", i + 1)).collect();
            println!("    equals the combination {}", terms.join(" + "));
        }
    }
    for &i in &r.unmatched_computed {
        println!("  computed [{}] not printed: {}", i + 1, c.gb.elements()[i].render(a));
    }
    if c.fof2 {
        println!("leading coefficients of the integer forms: all ±2^k");
    } else {
        println!("leading coefficients not ±2^k: {}", c.non_powers.join("; "));
    }
    for (p, res) in &c.transfers {
        match res {
            Ok(t) if t.valid => println!("F_{p}: reduction mod p is the F_p basis, same leading words"),
            Ok(t) => println!(
                "F_{p}: reduction mod p FAILED, {} elements outside the F_p ideal; direct F_p series {:?}",
                t.outside_ideal, t.direct_series
            ),
            Err(e) => println!("F_{p}: {e}"),
        }
    }
    println!(
        "series {:?} expected {:?}{}",
        c.series,
        c.expected,
        if c.series_ok() { "" } else { " MISMATCH" }
    );
    println!("char 2 series {:?}{}", c.char2_series, if c.char2_ok() { " (equal)" } else { " DIFFERS" });
    if !c.char2_leading_only_0.is_empty() || !c.char2_leading_only_2.is_empty() {
        println!(
            "char 2 leading words differ: only in char 0 {{{}}}, only in char 2 {{{}}}",
            c.char2_leading_only_0.join(", "),
            c.char2_leading_only_2.join(", ")
        );
    }
    println!("{}", if c.ok() { "PASS" } else { "FAIL" });
}

/// Returns whether every table passed.
pub fn run(tables: &[Table], primes: &[u64], corpus: Option<&str>, json: bool, opts: &CompletionOptions) -> Result<bool> {
    let mut checks = Vec::new();
    for &t in tables {
        checks.push(check(t, corpus.unwrap_or(t.text()), primes, opts)?);
    }
    let ok = checks.iter().all(TableCheck::ok);
    if json {
        let v = json!({ "tables": checks.iter().map(to_json).collect::<Vec<_>>(), "pass": ok });
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        for c in &checks {
            print_text(c);
        }
    }
    Ok(ok)
}
