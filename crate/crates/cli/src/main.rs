//! `quadalg`: Gröbner bases, Hilbert series and nilpotency checks for
//! graded algebras given by presentation files or catalog keys (`@R31`).

mod appendix;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadalg::groebner::{buchberger_with, export_basis, CompletionOptions, GroebnerBasis};
use quadalg::hilbert::{dim_oracle, gs_check, hilbert_series, verdict, HilbertData, HilbertError};
use quadalg::inflate::{construct5, inflate, split_seed, InflationResult};
use quadalg::par::Execution;
use quadalg::presentation::{builtin, parse_presentation, relation_json, serialize, to_json, Presentation};
use quadalg::FieldSpec;

use report::{series_json, RunReport, Timer};

#[derive(Parser, Debug)]
#[command(name = "quadalg", version, about = "Truncated noncommutative Gröbner bases and nilpotency of graded algebras")]
struct Cli {
    /// Coefficient field: 0 for Q, otherwise a prime.
    #[arg(long = "char", global = true)]
    characteristic: Option<u64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Exit nonzero when a nilpotency query comes back negative.
    #[arg(long, global = true)]
    strict: bool,
    /// File holding an integer that seeds the order in which completion
    /// handles its work lists. Results do not depend on it.
    #[arg(long, global = true, value_name = "PATH")]
    seedfile: Option<PathBuf>,
    /// Run completion on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Include per-phase timings in JSON output.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis truncated at --maxdeg.
    Gb {
        input: String,
        #[arg(long, default_value_t = 5)]
        maxdeg: usize,
        /// Write the basis here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hilbert series through --maxdeg (default --k).
    Hilbert(SeriesArgs),
    /// Whether R_k = 0.
    Nilpotent(SeriesArgs),
    /// The 5-step nilpotent algebra with n generators and ⌈n²/3⌉ relations.
    Construct {
        #[arg(long)]
        n: u32,
        /// Run the full pipeline and check nilpotent(≤5) and the relation count.
        #[arg(long)]
        verify: bool,
        /// Print only generator and relation counts.
        #[arg(long)]
        summary: bool,
    },
    /// R^(α,β) from a seed split into X and Y generators.
    Inflate {
        input: String,
        #[arg(long = "X", value_delimiter = ',', required = true)]
        x: Vec<String>,
        #[arg(long = "Y", value_delimiter = ',', required = true)]
        y: Vec<String>,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        beta: u32,
        #[arg(long)]
        summary: bool,
    },
    /// Golod–Shafarevich product H(t)(1 - nt + dt²).
    Gs {
        input: String,
        #[arg(long, default_value_t = 5)]
        maxdeg: usize,
    },
    /// Recompute the published bases of R31 and R32 and compare.
    VerifyAppendix {
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
        primes: Vec<u64>,
        /// Replacement corpus text (requires --which table1 or table2).
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SeriesArgs {
    input: String,
    #[arg(long, default_value_t = 5)]
    k: usize,
    /// Completion degree; defaults to k.
    #[arg(long)]
    maxdeg: Option<usize>,
    /// Cross-check degrees up to --oracle-degree with the linear-algebra oracle.
    #[arg(long)]
    oracle_check: bool,
    #[arg(long, default_value_t = 4)]
    oracle_degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Table1,
    Table2,
    All,
}

/// Failed checks exit with 1; bad input exits with 2.
struct Outcome {
    ok: bool,
}

struct Ctx {
    field: Option<FieldSpec>,
    json: bool,
    strict: bool,
    timings: bool,
    opts: CompletionOptions,
}

impl Ctx {
    fn field(&self) -> FieldSpec {
        self.field.unwrap_or_else(FieldSpec::rationals)
    }

    fn complete(&self, p: &Presentation, maxdeg: usize, timer: &mut Timer) -> Result<GroebnerBasis> {
        let gb = timer.phase("completion", || buchberger_with(p, maxdeg, &self.opts))?;
        Ok(gb)
    }

    fn emit(&self, v: Value) {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome { ok: true }) => ExitCode::SUCCESS,
        Ok(Outcome { ok: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_seed(path: &Path) -> Result<u64> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.trim().parse().with_context(|| format!("{} must hold one unsigned integer", path.display()))
}

fn run(cli: Cli) -> Result<Outcome> {
    let field = cli.characteristic.map(FieldSpec::new).transpose().map_err(|e| anyhow!("--char: {e}"))?;
    let shuffle_seed = cli.seedfile.as_deref().map(read_seed).transpose()?;
    let execution = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let ctx = Ctx {
        field,
        json: cli.json,
        strict: cli.strict,
        timings: cli.timings,
        opts: CompletionOptions { execution, shuffle_seed },
    };
    match cli.command {
        Command::Gb { input, maxdeg, out } => cmd_gb(&ctx, &input, maxdeg, out.as_deref()),
        Command::Hilbert(a) => cmd_series(&ctx, &a, false),
        Command::Nilpotent(a) => cmd_series(&ctx, &a, true),
        Command::Construct { n, verify, summary } => cmd_construct(&ctx, n, verify, summary),
        Command::Inflate { input, x, y, alpha, beta, summary } => {
            cmd_inflate(&ctx, &input, &x, &y, alpha, beta, summary)
        }
        Command::Gs { input, maxdeg } => cmd_gs(&ctx, &input, maxdeg),
        Command::VerifyAppendix { which, primes, corpus } => {
            let tables = match which {
                Which::Table1 => vec![quadalg::corpus::Table::One],
                Which::Table2 => vec![quadalg::corpus::Table::Two],
                Which::All => vec![quadalg::corpus::Table::One, quadalg::corpus::Table::Two],
            };
            let corpus = match corpus {
                Some(p) if tables.len() == 1 => {
                    Some(fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?)
                }
                Some(_) => bail!("--corpus needs --which table1 or --which table2"),
                None => None,
            };
            let ok = appendix::run(&tables, &primes, corpus.as_deref(), ctx.json, &ctx.opts)?;
            Ok(Outcome { ok })
        }
    }
}

/// `@KEY` names a catalog entry; anything else is a file. `--char`
/// overrides the field line of a file.
fn load(ctx: &Ctx, input: &str) -> Result<Presentation> {
    if input.starts_with('@') {
        return Ok(builtin(input, ctx.field())?);
    }
    let text = fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
    let p = parse_presentation(&text).with_context(|| format!("parsing {input}"))?;
    match ctx.field {
        Some(f) if f != p.field() => {
            let replaced: Vec<String> = text
                .lines()
                .map(|l| if l.trim_start().starts_with("field") { format!("field {}", f.characteristic()) } else { l.into() })
                .collect();
            Ok(parse_presentation(&replaced.join("\n"))?)
        }
        _ => Ok(p),
    }
}

fn cmd_gb(ctx: &Ctx, input: &str, maxdeg: usize, out: Option<&Path>) -> Result<Outcome> {
    let mut timer = Timer::default();
    let p = timer.phase("parse", || load(ctx, input))?;
    let gb = ctx.complete(&p, maxdeg, &mut timer)?;
    let text = if ctx.json {
        let mut v = json!({
            "input": input,
            "field": gb.field().characteristic(),
            "generators": gb.alphabet().names(),
            "complete_through": gb.complete_through(),
            "elements": gb.elements().iter().map(|g| relation_json(g, gb.alphabet())).collect::<Vec<_>>(),
        });
        if ctx.timings {
            v["timings_ms"] = timer.json();
        }
        serde_json::to_string_pretty(&v)? + "\n"
    } else {
        export_basis(&gb)
    };
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    if !ctx.json {
        eprintln!("{} elements, complete through degree {}; {}", gb.len(), gb.complete_through(), timer.render());
    }
    Ok(Outcome { ok: true })
}

fn oracle_rows(p: &Presentation, h: &HilbertData, upto: usize) -> Result<Vec<(usize, Option<u128>)>> {
    let mut rows = Vec::new();
    for d in 0..=upto.min(h.exact_through) {
        match dim_oracle(p, d) {
            Ok(v) => rows.push((d, Some(v))),
            Err(HilbertError::TooLarge { .. }) => rows.push((d, None)),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(rows)
}

fn cmd_series(ctx: &Ctx, a: &SeriesArgs, nilpotent_query: bool) -> Result<Outcome> {
    let mut timer = Timer::default();
    let p = timer.phase("parse", || load(ctx, &a.input))?;
    let maxdeg = a.maxdeg.unwrap_or(a.k).max(p.max_relation_degree());
    if maxdeg < a.k {
        bail!("--maxdeg {maxdeg} cannot decide R_{}", a.k);
    }
    let gb = ctx.complete(&p, maxdeg, &mut timer)?;
    let h = timer.phase("series", || hilbert_series(&gb, maxdeg))?;
    let v = verdict(&h);
    let gs = gs_check(&h, p.generator_count() as u64, p.relation_count() as u64)?;
    let oracle = if a.oracle_check { Some(timer.phase("oracle", || oracle_rows(&p, &h, a.oracle_degree))?) } else { None };
    let oracle_ok =
        oracle.as_ref().is_none_or(|rows| rows.iter().all(|(d, o)| o.is_none_or(|o| o == h.coefficients[*d])));
    let k_step = v.is_k_step(a.k);
    let mut ok = oracle_ok && gs.pass();
    if nilpotent_query && ctx.strict {
        ok &= k_step;
    }
    let report = RunReport {
        input: a.input.clone(),
        field: p.field().characteristic(),
        basis_size: gb.len(),
        complete_through: gb.complete_through(),
        series: h.clone(),
        verdict: v,
        gs,
        timer,
    };
    if ctx.json {
        let mut j = report.json(ctx.timings);
        j["k"] = json!(a.k);
        j["k_step_nilpotent"] = json!(k_step);
        if let Some(rows) = &oracle {
            j["oracle"] = json!(rows
                .iter()
                .map(|(d, o)| json!({"degree": d, "oracle": o.map(|x| x.to_string()), "agrees": o.is_none_or(|o| o == h.coefficients[*d])}))
                .collect::<Vec<_>>());
        }
        ctx.emit(j);
    } else {
        if nilpotent_query {
            println!("{v}");
            println!("H(t) = {h}");
        } else {
            println!("H(t) = {h}");
            println!("{v}");
        }
        if let Some(rows) = &oracle {
            for (d, o) in rows {
                match o {
                    Some(o) if *o == h.coefficients[*d] => println!("oracle degree {d}: {o} (agrees)"),
                    Some(o) => println!("oracle degree {d}: {o} (MISMATCH, series has {})", h.coefficients[*d]),
                    None => println!("oracle degree {d}: skipped (too large)"),
                }
            }
        }
        if !report.gs.pass() {
            println!("Golod-Shafarevich check FAILED: {}", report.gs.render());
        }
        eprintln!("{}", report.timer.render());
    }
    Ok(Outcome { ok })
}

fn inflation_summary(r: &InflationResult) -> Value {
    let n = r.generator_count() as u64;
    let target = (n * n).div_ceil(3);
    json!({
        "generators": n,
        "relations": r.relation_count(),
        "ceil_n2_over_3": target,
        "match": r.relation_count() as u64 == target,
    })
}

fn cmd_construct(ctx: &Ctx, n: u32, verify: bool, summary: bool) -> Result<Outcome> {
    let r = construct5(n, ctx.field())?;
    let s = inflation_summary(&r);
    let mut ok = s["match"].as_bool().expect("bool");
    let mut verified = Value::Null;
    if verify {
        let mut timer = Timer::default();
        let gb = ctx.complete(&r.presentation, 5, &mut timer)?;
        let h = timer.phase("series", || hilbert_series(&gb, 5))?;
        let v = verdict(&h);
        let gs = gs_check(&h, n as u64, r.relation_count() as u64)?;
        ok &= v.is_k_step(5) && gs.pass();
        let report = RunReport {
            input: format!("construct5({n})"),
            field: ctx.field().characteristic(),
            basis_size: gb.len(),
            complete_through: 5,
            series: h,
            verdict: v,
            gs,
            timer,
        };
        verified = report.json(ctx.timings);
        if !ctx.json {
            eprintln!("{}", report.timer.render());
        }
    }
    if ctx.json {
        let mut j = json!({ "n": n, "summary": s, "verify": verified });
        if !summary {
            j["presentation"] = to_json(&r.presentation);
        }
        ctx.emit(j);
    } else {
        if summary {
            println!(
                "generators {} relations {} ceil(n^2/3) {} match {}",
                s["generators"], s["relations"], s["ceil_n2_over_3"], s["match"]
            );
        } else {
            print!("{}", serialize(&r.presentation));
        }
        if verify {
            println!(
                "# verify: {}, H(t) = {}, relations {} = ceil(n^2/3): {}",
                verified["verdict"].as_str().unwrap_or("?"),
                verified["series_text"].as_str().unwrap_or("?"),
                s["relations"],
                s["match"]
            );
        }
    }
    Ok(Outcome { ok })
}

fn cmd_inflate(
    ctx: &Ctx,
    input: &str,
    x: &[String],
    y: &[String],
    alpha: u32,
    beta: u32,
    summary: bool,
) -> Result<Outcome> {
    let p = load(ctx, input)?;
    let xs: Vec<&str> = x.iter().map(String::as_str).collect();
    let ys: Vec<&str> = y.iter().map(String::as_str).collect();
    let seed = split_seed(&p, &xs, &ys)?;
    let r = inflate(&seed, alpha, beta)?;
    let s = inflation_summary(&r);
    if ctx.json {
        let mut j = json!({ "alpha": alpha, "beta": beta, "summary": s });
        if !summary {
            j["presentation"] = to_json(&r.presentation);
        }
        ctx.emit(j);
    } else if summary {
        println!(
            "generators {} relations {} ceil(n^2/3) {} match {}",
            s["generators"], s["relations"], s["ceil_n2_over_3"], s["match"]
        );
    } else {
        print!("{}", serialize(&r.presentation));
    }
    Ok(Outcome { ok: true })
}

fn cmd_gs(ctx: &Ctx, input: &str, maxdeg: usize) -> Result<Outcome> {
    let mut timer = Timer::default();
    let p = timer.phase("parse", || load(ctx, input))?;
    let maxdeg = maxdeg.max(p.max_relation_degree());
    let gb = ctx.complete(&p, maxdeg, &mut timer)?;
    let h = timer.phase("series", || hilbert_series(&gb, maxdeg))?;
    let gs = gs_check(&h, p.generator_count() as u64, p.relation_count() as u64)?;
    let ok = gs.pass();
    if ctx.json {
        let mut j = json!({
            "input": input,
            "field": p.field().characteristic(),
            "n": p.generator_count(),
            "d": p.relation_count(),
            "series": series_json(&h.coefficients),
            "product": gs.product.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "complete": gs.complete,
            "pass": ok,
        });
        if ctx.timings {
            j["timings_ms"] = timer.json();
        }
        ctx.emit(j);
    } else {
        println!("H(t) = {h}");
        println!(
            "H(t)(1 - {}t + {}t^2) = {}{} ({})",
            p.generator_count(),
            p.relation_count(),
            gs.render(),
            if gs.complete { "" } else { " + ..." },
            if ok { "pass" } else { "FAIL" }
        );
    }
    Ok(Outcome { ok })
}
