//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property or assertion failure, 2 usage or parse
//! error. File arguments accept `-` for standard input/output.

use std::fmt;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::batch;
use crate::counts::{check_laws, counted_run, Arith, Kind, LawCheck, OpCounts};
use crate::error::Error;
use crate::gf2m::{Fe, FieldParams};
use crate::hermite::{depth_for_len, evaluate_slice, interpolate_slice};
use crate::oracle;
use crate::poly::Polynomial;
use crate::textfmt::{format_elements, parse_elements};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gf2-hermite",
    version,
    about = "Hermite evaluation and interpolation over GF(2^m)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficients -> Hermite values (derivative i div q at point i mod q)
    Eval(IoArgs),
    /// Hermite values -> coefficients
    Interp(IoArgs),
    /// Random eval/interp round trips checked against the brute-force oracles
    Roundtrip(RoundtripArgs),
    /// Operation counts of one seeded instance against the predicted costs
    Count(CountArgs),
    /// Wall time and operation counts over a grid of lengths
    Bench(BenchArgs),
    /// Multiplicity-code style encoding: all derivatives below s at every point
    Encode(EncodeArgs),
}

#[derive(Debug, Args)]
pub struct IoArgs {
    /// Extension degree m of GF(2^m)
    #[arg(long)]
    pub field: u32,
    /// Problem length
    #[arg(long)]
    pub len: usize,
    #[arg(long = "in", default_value = "-")]
    pub input: String,
    #[arg(long = "out", default_value = "-")]
    pub output: String,
}

#[derive(Debug, Args)]
pub struct RoundtripArgs {
    #[arg(long)]
    pub field: u32,
    #[arg(long)]
    pub len: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub field: u32,
    #[arg(long)]
    pub len: usize,
    #[arg(long, default_value = "eval")]
    pub kind: Kind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Emit a single JSON object instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub field: u32,
    /// Lengths as `A..B [step S]`; terms may be integers, `q` or `<k>q`.
    /// The step defaults to q.
    #[arg(long = "len-grid", default_value = "q..8q step q")]
    pub len_grid: String,
    #[arg(long, default_value = "eval")]
    pub kind: Kind,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Timed repetitions per length (the minimum is reported)
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// One JSON object per line
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[arg(long)]
    pub field: u32,
    /// Multiplicity s: every derivative order below s at every point
    #[arg(long)]
    pub mult: usize,
    #[arg(long = "in", default_value = "-")]
    pub input: String,
    #[arg(long = "out", default_value = "-")]
    pub output: String,
}

/// Error carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }

    fn fail(msg: impl Into<String>) -> Self {
        CliError {
            code: EXIT_FAIL,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => CliError::fail(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.code
        }
    }
}

/// Runs a parsed command; report text goes to `out` unless the command
/// writes to a file.
pub fn run(cmd: &Command, out: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Interp(a) => cmd_interp(a, out),
        Command::Roundtrip(a) => cmd_roundtrip(a, out),
        Command::Count(a) => cmd_count(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Encode(a) => cmd_encode(a, out),
    }
}

fn field(m: u32) -> CliResult<FieldParams> {
    Ok(FieldParams::new(m)?)
}

fn check_len(len: usize) -> CliResult<()> {
    if len == 0 {
        return Err(CliError::usage("--len must be at least 1"));
    }
    Ok(())
}

fn read_input(path: &str) -> CliResult<String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn write_output(path: &str, text: &str, out: &mut dyn Write) -> CliResult<()> {
    let res = if path == "-" {
        out.write_all(text.as_bytes()).and_then(|_| out.flush())
    } else {
        std::fs::write(path, text)
    };
    res.map_err(|e| CliError::usage(format!("cannot write {path}: {e}")))
}

fn emit(out: &mut dyn Write, line: &str) -> CliResult<()> {
    writeln!(out, "{line}").map_err(|e| CliError::fail(format!("write failed: {e}")))
}

pub fn cmd_eval(a: &IoArgs, out: &mut dyn Write) -> CliResult<i32> {
    let f = field(a.field)?;
    check_len(a.len)?;
    let coeffs = parse_elements(&f, &read_input(&a.input)?)?;
    if coeffs.len() > a.len {
        return Err(CliError::usage(format!(
            "input has {} coefficients, more than --len {}",
            coeffs.len(),
            a.len
        )));
    }
    let h = evaluate_slice(&mut Arith::plain(f), &coeffs, a.len)?;
    write_output(&a.output, &format_elements(&h), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_interp(a: &IoArgs, out: &mut dyn Write) -> CliResult<i32> {
    let f = field(a.field)?;
    check_len(a.len)?;
    let h = parse_elements(&f, &read_input(&a.input)?)?;
    if h.len() != a.len {
        return Err(CliError::usage(format!(
            "input has {} values, expected exactly --len {}",
            h.len(),
            a.len
        )));
    }
    let coeffs = interpolate_slice(&mut Arith::plain(f), &h, a.len)?;
    write_output(&a.output, &format_elements(&coeffs), out)?;
    Ok(EXIT_OK)
}

pub fn cmd_encode(a: &EncodeArgs, out: &mut dyn Write) -> CliResult<i32> {
    let f = field(a.field)?;
    if a.mult == 0 {
        return Err(CliError::usage("--mult must be at least 1"));
    }
    let len = a.mult * f.q();
    let msg = parse_elements(&f, &read_input(&a.input)?)?;
    if msg.len() > len {
        return Err(CliError::usage(format!(
            "message has {} symbols, more than s*q = {len}",
            msg.len()
        )));
    }
    let codeword = evaluate_slice(&mut Arith::plain(f), &msg, len)?;
    write_output(&a.output, &format_elements(&codeword), out)?;
    Ok(EXIT_OK)
}

fn random_vec(rng: &mut ChaCha8Rng, f: &FieldParams, len: usize) -> Vec<Fe> {
    (0..len)
        .map(|_| Fe(rng.gen_range(0..f.q() as u32)))
        .collect()
}

/// What went wrong in one round-trip trial.
fn check_trial(f: FieldParams, len: usize, coeffs: &[Fe]) -> Result<Vec<Fe>, String> {
    let p = Polynomial::new(f, coeffs.to_vec()).map_err(|e| e.to_string())?;
    let h = evaluate_slice(&mut Arith::plain(f), coeffs, len).map_err(|e| e.to_string())?;
    let naive = oracle::hermite_eval_naive(&p, len).map_err(|e| e.to_string())?;
    if h != naive {
        let i = h.iter().zip(&naive).position(|(x, y)| x != y).unwrap_or(0);
        return Err(format!(
            "evaluation differs from oracle at index {i}: fast {} vs naive {}",
            h[i], naive[i]
        ));
    }
    let back = interpolate_slice(&mut Arith::plain(f), &h, len).map_err(|e| e.to_string())?;
    if back != coeffs {
        return Err("interpolate(evaluate(F)) != F".into());
    }
    Ok(h)
}

pub fn cmd_roundtrip(a: &RoundtripArgs, out: &mut dyn Write) -> CliResult<i32> {
    let f = field(a.field)?;
    check_len(a.len)?;
    let repro = format!(
        "gf2-hermite roundtrip --field {} --len {} --seed {} --trials {}",
        a.field, a.len, a.seed, a.trials
    );
    emit(out, &format!("seed {}", a.seed))?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let polys: Vec<Vec<Fe>> = (0..a.trials)
        .map(|_| random_vec(&mut rng, &f, a.len))
        .collect();
    let values: Vec<Vec<Fe>> = (0..a.trials)
        .map(|_| random_vec(&mut rng, &f, a.len))
        .collect();

    let results = batch::map(&polys, |c| check_trial(f, a.len, c));
    if let Some((k, e)) = results
        .iter()
        .enumerate()
        .find_map(|(k, r)| r.as_ref().err().map(|e| (k, e)))
    {
        emit(out, &format!("FAIL trial {k}: {e}"))?;
        emit(out, &format!("reproduce: {repro}"))?;
        return Ok(EXIT_FAIL);
    }

    // Reverse composition, and the interpolation oracle on the same vectors.
    let coeffs = batch::interpolate_many(f, a.len, &values)?;
    let again = batch::evaluate_many(f, a.len, &coeffs)?;
    let naive = oracle::hermite_interp_naive_many(&values, a.len, &f)?;
    for k in 0..a.trials {
        let failure = if again[k] != values[k] {
            Some("evaluate(interpolate(h)) != h")
        } else if naive[k].coeffs() != coeffs[k] {
            Some("interpolation differs from oracle")
        } else {
            None
        };
        if let Some(msg) = failure {
            emit(out, &format!("FAIL trial {k}: {msg}"))?;
            emit(out, &format!("reproduce: {repro}"))?;
            return Ok(EXIT_FAIL);
        }
    }
    emit(out, &format!("OK {} trials", a.trials))?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
pub struct CountReport {
    pub field: u32,
    pub q: usize,
    pub len: usize,
    pub kind: Kind,
    pub n: u32,
    pub seed: u64,
    #[serde(flatten)]
    pub counts: OpCounts,
    #[serde(flatten)]
    pub check: LawCheck,
    pub pass: bool,
}

/// Counted run of one seeded random instance, checked against the laws.
pub fn count_report(m: u32, len: usize, kind: Kind, seed: u64) -> Result<CountReport, Error> {
    let f = FieldParams::new(m)?;
    if len == 0 {
        return Err(Error::Domain("length must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let input = random_vec(&mut rng, &f, len);
    let (_, counts) = counted_run(f, kind, len, &input)?;
    let n = depth_for_len(f.q(), len);
    let check = check_laws(f.q(), n, len, kind, &counts);
    Ok(CountReport {
        field: m,
        q: f.q(),
        len,
        kind,
        n,
        seed,
        pass: check.passed(),
        counts,
        check,
    })
}

pub fn cmd_count(a: &CountArgs, out: &mut dyn Write) -> CliResult<i32> {
    check_len(a.len)?;
    let r = count_report(a.field, a.len, a.kind, a.seed)?;
    if a.json {
        emit(out, &serde_json::to_string(&r).expect("report serializes"))?;
    } else {
        let c = &r.check;
        let flag = |b: bool| if b { "PASS" } else { "FAIL" };
        let lines = [
            format!(
                "field GF(2^{}) q={} len={} kind={} n={} seed={}",
                r.field,
                r.q,
                r.len,
                r.kind.as_str(),
                r.n,
                r.seed
            ),
            format!(
                "adds={} muls={} invs={}",
                r.counts.adds, r.counts.muls, r.counts.invs
            ),
            format!("base calls (c): {:?}", r.counts.base_sizes()),
            format!(
                "mul law: measured {} predicted {} [{}]",
                r.counts.muls,
                c.predicted_mul_count,
                flag(c.mul_law_pass)
            ),
            format!(
                "inv law: measured {} predicted {} [{}]",
                r.counts.invs,
                c.predicted_inv_count,
                flag(c.inv_law_pass)
            ),
            format!(
                "add bound: measured {} <= {} [{}]",
                r.counts.adds,
                c.predicted_add_bound,
                flag(c.add_bound_pass)
            ),
            format!(
                "multiplication-free reduction [{}]",
                flag(c.reduction_mul_free)
            ),
            format!("base-call layout [{}]", flag(c.base_layout_pass)),
        ];
        for l in &lines {
            emit(out, l)?;
        }
        if let (Some(v), Some(ok)) = (c.full_length_adds, c.full_length_pass) {
            emit(
                out,
                &format!(
                    "full-length adds: measured {} exact {} [{}]",
                    r.counts.adds,
                    v,
                    flag(ok)
                ),
            )?;
        }
        emit(out, flag(r.pass))?;
    }
    Ok(if r.pass { EXIT_OK } else { EXIT_FAIL })
}

fn parse_term(t: &str, q: usize) -> Result<usize, String> {
    let t = t.trim();
    let bad = || format!("bad length term {t:?}");
    match t.strip_suffix('q') {
        Some("") => Ok(q),
        Some(k) => k.trim().parse::<usize>().map(|k| k * q).map_err(|_| bad()),
        None => t.parse::<usize>().map_err(|_| bad()),
    }
}

/// Expands `A..B [step S]` (inclusive of `B`) into lengths. An empty string
/// is an empty grid.
pub fn parse_len_grid(spec: &str, q: usize) -> Result<Vec<usize>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let (range, step) = match spec.split_once("step") {
        Some((r, s)) => (r, parse_term(s, q)?),
        None => (spec, q),
    };
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| format!("expected A..B in {spec:?}"))?;
    let (lo, hi) = (parse_term(lo, q)?, parse_term(hi, q)?);
    if step == 0 {
        return Err("step must be positive".into());
    }
    if lo == 0 {
        return Err("lengths start at 1".into());
    }
    Ok((lo..=hi).step_by(step).collect())
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub len: usize,
    pub kind: Kind,
    pub n: u32,
    pub wall_ns: u128,
    #[serde(flatten)]
    pub counts: OpCounts,
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> CliResult<i32> {
    let f = field(a.field)?;
    let grid = parse_len_grid(&a.len_grid, f.q()).map_err(CliError::usage)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    if !a.json {
        emit(out, &format!("# seed {}", a.seed))?;
        emit(out, "len\tn\twall_us\tadds\tmuls\tinvs\tbase_calls")?;
    }
    for len in grid {
        let input = random_vec(&mut rng, &f, len);
        let (_, counts) = counted_run(f, a.kind, len, &input)?;
        let mut best = u128::MAX;
        for _ in 0..a.reps.max(1) {
            let mut ctx = Arith::plain(f);
            let t = Instant::now();
            match a.kind {
                Kind::Eval => evaluate_slice(&mut ctx, &input, len)?,
                Kind::Interp => interpolate_slice(&mut ctx, &input, len)?,
            };
            best = best.min(t.elapsed().as_nanos());
        }
        let row = BenchRow {
            len,
            kind: a.kind,
            n: depth_for_len(f.q(), len),
            wall_ns: best,
            counts,
        };
        if a.json {
            emit(out, &serde_json::to_string(&row).expect("row serializes"))?;
        } else {
            emit(
                out,
                &format!(
                    "{}\t{}\t{:.1}\t{}\t{}\t{}\t{}",
                    row.len,
                    row.n,
                    row.wall_ns as f64 / 1e3,
                    row.counts.adds,
                    row.counts.muls,
                    row.counts.invs,
                    row.counts.base_calls.len()
                ),
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(
            parse_len_grid("q..4q step q", 4).unwrap(),
            vec![4, 8, 12, 16]
        );
        assert_eq!(
            parse_len_grid("256..1024", 256).unwrap(),
            vec![256, 512, 768, 1024]
        );
        assert_eq!(parse_len_grid("1..5 step 2", 4).unwrap(), vec![1, 3, 5]);
        assert!(parse_len_grid("", 4).unwrap().is_empty());
        assert!(parse_len_grid("  ", 4).unwrap().is_empty());
        assert!(parse_len_grid("8..4", 4).unwrap().is_empty());
        assert!(parse_len_grid("1..x", 4).is_err());
        assert!(parse_len_grid("0..4", 4).is_err());
        assert!(parse_len_grid("1..4 step 0", 4).is_err());
    }

    #[test]
    fn count_report_examples() {
        let r = count_report(2, 8, Kind::Eval, 0).unwrap();
        assert_eq!(r.counts.muls, 24);
        assert!(r.pass);
        assert_eq!(
            count_report(2, 4, Kind::Eval, 0)
                .unwrap()
                .counts
                .base_calls
                .len(),
            1
        );
        assert_eq!(
            count_report(2, 5, Kind::Eval, 0)
                .unwrap()
                .counts
                .base_sizes(),
            vec![4, 1]
        );
    }

    #[test]
    fn count_json_shape() {
        let r = count_report(2, 8, Kind::Eval, 0).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        for key in [
            "adds",
            "muls",
            "invs",
            "base_calls",
            "predicted_mul_count",
            "predicted_add_bound",
            "mul_law_pass",
            "add_bound_pass",
            "pass",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["kind"], "eval");
        assert_eq!(v["full_length_adds"], 30);
    }
}
