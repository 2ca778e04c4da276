//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit codes are shared by every command: 0 success or verified, 1 an
//! invariant mismatch (or failed self-test), 2 usage or parameter errors,
//! 3 a computation declared infeasible (Jones over the strand threshold).

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::mpsc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::burau::determinant_of;
use crate::error::Error;
use crate::family::{
    family_enumerate, family_verify, FamilyParams, Level, VerificationReport, Verdict, VerifyOptions,
};
use crate::knot_expr::{expr_alexander, expr_jones, expr_to_braid, KnotExpr};
use crate::selftest::{run_all, SelftestConfig};
use crate::temperley_lieb::DEFAULT_MAX_STRANDS;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

pub const THRESHOLD_ENV: &str = "TTKNOT_JONES_MAX_STRANDS";

#[derive(Debug, Parser)]
#[command(name = "ttknot", version, about = "Exact invariants of twisted torus knots and their connected-sum decompositions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,

    /// Largest strand count for the Temperley-Lieb Jones computation.
    #[arg(long, global = true, env = THRESHOLD_ENV, default_value_t = DEFAULT_MAX_STRANDS)]
    pub jones_max_strands: usize,

    /// Include wall time per check in verification reports.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructFormat {
    Braid,
    Pd,
    Expr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InvariantKind {
    Alexander,
    Jones,
    Determinant,
    Span,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Alexander,
    Standard,
    Full,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Self {
        match l {
            LevelArg::Alexander => Level::Alexander,
            LevelArg::Standard => Level::Standard,
            LevelArg::Full => Level::Full,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a knot expression and print its braid word, PD code or
    /// normalized form.
    Construct {
        expr: String,
        #[arg(long, value_enum, default_value_t = ConstructFormat::Braid)]
        format: ConstructFormat,
    },
    /// Compute one invariant of a knot expression.
    Invariant {
        expr: String,
        #[arg(value_enum)]
        which: InvariantKind,
    },
    /// Verify one member of the composite family.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        k1: i64,
        #[arg(long, allow_negative_numbers = true)]
        k2: i64,
        #[arg(long, value_enum, default_value_t = LevelArg::Full)]
        level: LevelArg,
    },
    /// Verify every family member inside a parameter window, one report per
    /// line followed by a summary line.
    Enumerate {
        #[arg(long, allow_negative_numbers = true)]
        a_max: i64,
        #[arg(long, allow_negative_numbers = true)]
        k1_max: i64,
        #[arg(long, allow_negative_numbers = true)]
        k2_max: i64,
        #[arg(long, value_enum, default_value_t = LevelArg::Alexander)]
        level: LevelArg,
    },
    /// Run the seeded oracle and property suites.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SelftestConfig::default().markov_cases)]
        markov_cases: usize,
        #[arg(long, default_value_t = SelftestConfig::default().sum_cases)]
        sum_cases: usize,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::TooManyStrands { .. } => EXIT_INFEASIBLE,
        Error::InternalInvariantViolation(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::TooManyStrands { .. } => "too-many-strands",
        Error::NotAKnot { .. } => "not-a-knot",
        Error::Parse { .. } => "parse-error",
        Error::InvalidParams(_) | Error::BadLetter { .. } => "invalid-parameters",
        Error::EmptyDiagram => "empty-diagram",
        Error::InternalInvariantViolation(_) => "internal-invariant-violation",
        _ => "error",
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn json(&mut self, v: &Value) {
        let _ = writeln!(self.out, "{}", serde_json::to_string(v).expect("json"));
    }

    fn line(&mut self, s: &str) {
        let _ = writeln!(self.out, "{s}");
    }

    fn fail(&mut self, e: &Error) -> i32 {
        if self.cli.output == OutputFormat::Json {
            let v = json!({"error": error_code(e), "reason": e.to_string()});
            self.json(&v);
        }
        let _ = writeln!(self.err, "error: {e}");
        exit_code(e)
    }

    fn options(&self, level: Level) -> VerifyOptions {
        VerifyOptions {
            level,
            jones_max_strands: self.cli.jones_max_strands,
            timing: self.cli.timing,
        }
    }

    fn report(&mut self, r: &VerificationReport) {
        match self.cli.output {
            OutputFormat::Json => self.json(&serde_json::to_value(r).expect("json")),
            OutputFormat::Text => {
                let _ = write!(self.out, "{}", r.summary());
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let mut ctx = Ctx {
        cli: &cli,
        out,
        err,
    };
    if cli.jones_max_strands < 2 {
        let e = Error::InvalidParams(format!(
            "jones strand threshold must be >= 2, got {}",
            cli.jones_max_strands
        ));
        return ctx.fail(&e);
    }
    match &cli.command {
        Command::Construct { expr, format } => construct(&mut ctx, expr, *format),
        Command::Invariant { expr, which } => invariant(&mut ctx, expr, *which),
        Command::Verify { a, k1, k2, level } => verify(&mut ctx, *a, *k1, *k2, (*level).into()),
        Command::Enumerate {
            a_max,
            k1_max,
            k2_max,
            level,
        } => enumerate(&mut ctx, *a_max, *k1_max, *k2_max, (*level).into()),
        Command::Selftest {
            seed,
            markov_cases,
            sum_cases,
        } => selftest(
            &mut ctx,
            SelftestConfig {
                seed: *seed,
                markov_cases: *markov_cases,
                sum_cases: *sum_cases,
                ..SelftestConfig::default()
            },
        ),
    }
}

fn construct(ctx: &mut Ctx, expr: &str, format: ConstructFormat) -> i32 {
    let result = (|| -> crate::Result<(String, String)> {
        let e: KnotExpr = expr.parse()?;
        Ok(match format {
            ConstructFormat::Expr => ("expr".into(), e.to_string()),
            ConstructFormat::Braid => ("braid".into(), expr_to_braid(&e)?.to_string()),
            ConstructFormat::Pd => ("pd".into(), expr_to_braid(&e)?.closure_pd_code()?.to_string()),
        })
    })();
    match result {
        Ok((kind, text)) => {
            match ctx.cli.output {
                OutputFormat::Text => ctx.line(&text),
                OutputFormat::Json => ctx.json(&json!({"format": kind, "value": text})),
            }
            EXIT_OK
        }
        Err(e) => ctx.fail(&e),
    }
}

fn invariant(ctx: &mut Ctx, expr: &str, which: InvariantKind) -> i32 {
    let threshold = ctx.cli.jones_max_strands;
    let result = (|| -> crate::Result<(Value, String)> {
        let e: KnotExpr = expr.parse()?;
        Ok(match which {
            InvariantKind::Alexander => {
                let p = expr_alexander(&e)?;
                (serde_json::to_value(p.to_serial("t")).unwrap(), p.display_with("t"))
            }
            InvariantKind::Jones => {
                let p = expr_jones(&e, threshold)?;
                (serde_json::to_value(p.to_serial("t")).unwrap(), p.display_with("t"))
            }
            InvariantKind::Determinant => {
                let d = determinant_of(&expr_alexander(&e)?)?;
                let v = i64::try_from(&d).map(Value::from).unwrap_or_else(|_| json!(d.to_string()));
                (v, d.to_string())
            }
            InvariantKind::Span => {
                let s = expr_alexander(&e)?.span().ok_or(Error::ZeroPolynomial)?;
                (json!(s), s.to_string())
            }
        })
    })();
    match result {
        Ok((value, text)) => {
            match ctx.cli.output {
                OutputFormat::Text => ctx.line(&text),
                OutputFormat::Json => {
                    let name = format!("{which:?}").to_lowercase();
                    ctx.json(&json!({"expr": expr.parse::<KnotExpr>().unwrap().to_string(), "invariant": name, "value": value}))
                }
            }
            EXIT_OK
        }
        Err(e) => ctx.fail(&e),
    }
}

fn verdict_exit(r: &VerificationReport) -> i32 {
    if r.verdict == Verdict::Mismatch {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

fn verify(ctx: &mut Ctx, a: i64, k1: i64, k2: i64, level: Level) -> i32 {
    let opts = ctx.options(level);
    match FamilyParams::new(a, k1, k2).and_then(|fp| family_verify(fp, opts)) {
        Ok(r) => {
            ctx.report(&r);
            verdict_exit(&r)
        }
        Err(e) => ctx.fail(&e),
    }
}

fn enumerate(ctx: &mut Ctx, a_max: i64, k1_max: i64, k2_max: i64, level: Level) -> i32 {
    let grid = match family_enumerate(a_max, k1_max, k2_max) {
        Ok(g) => g,
        Err(e) => return ctx.fail(&e),
    };
    let opts = ctx.options(level);
    let (tx, rx) = mpsc::channel();
    let (mut pass, mut skip, mut mismatch, mut errors) = (0usize, 0usize, 0usize, 0usize);
    let mut worst = EXIT_OK;
    std::thread::scope(|scope| {
        let grid = &grid;
        scope.spawn(move || {
            grid.par_iter().enumerate().for_each_with(tx, |tx, (i, fp)| {
                let _ = tx.send((i, family_verify(*fp, opts)));
            });
        });
        // reports arrive in any order; emit them in grid order
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, r) in rx {
            pending.insert(i, r);
            while let Some(r) = pending.remove(&next) {
                next += 1;
                match r {
                    Ok(r) => {
                        match r.verdict {
                            Verdict::VerifiedAtLevel => pass += 1,
                            Verdict::PartiallySkipped => skip += 1,
                            Verdict::Mismatch => mismatch += 1,
                        }
                        ctx.report(&r);
                    }
                    Err(e) => {
                        errors += 1;
                        worst = worst.max(ctx.fail(&e));
                    }
                }
                let _ = ctx.out.flush();
            }
        }
    });
    let summary = json!({"summary": {"pass": pass, "skip": skip, "mismatch": mismatch, "errors": errors}});
    match ctx.cli.output {
        OutputFormat::Json => ctx.json(&summary),
        OutputFormat::Text => ctx.line(&format!(
            "summary: pass={pass} skip={skip} mismatch={mismatch} errors={errors}"
        )),
    }
    if mismatch > 0 {
        EXIT_MISMATCH
    } else {
        worst
    }
}

fn selftest(ctx: &mut Ctx, cfg: SelftestConfig) -> i32 {
    let results = run_all(&cfg);
    let mut ok = true;
    for r in &results {
        ok &= r.passed();
        match ctx.cli.output {
            OutputFormat::Json => ctx.json(&serde_json::to_value(r).unwrap()),
            OutputFormat::Text => ctx.line(&format!(
                "{:<32} {:>5} cases  {}",
                r.suite,
                r.cases,
                if r.passed() { "pass" } else { "FAIL" }
            )),
        }
    }
    if ok {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}
