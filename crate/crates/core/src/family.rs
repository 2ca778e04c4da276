//! The composite twisted torus family and invariant-based verification.
//!
//! For integers `a > 0`, `k1 > 1`, `k2 > 1` put
//!
//! ```text
//! p = (a + 1)(k1 + k2) + 1,  q = a(k1 + k2) + 1,  r = p − k1,  s = −1.
//! ```
//!
//! The twisted torus knot T(p, q; r, s) is then expected to be the connected
//! sum T(k1, a·k1 + 1) # T(k2, −(a + 1)·k2 − 1). This module builds both
//! sides and compares their polynomial invariants. Equal invariants are
//! consistent with the decomposition; they never prove two knots equal.

use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::burau::determinant_of;
use crate::error::{Error, Result};
use crate::knot_expr::{
    expr_alexander, expr_genus, expr_jones, torus_alexander_closed, torus_jones_closed, KnotExpr,
};
use crate::laurent::LaurentPoly;
use crate::temperley_lieb::DEFAULT_MAX_STRANDS;

pub const CAVEAT: &str = "invariant equality does not prove knot equivalence";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: i64,
    pub k1: i64,
    pub k2: i64,
}

impl FamilyParams {
    pub fn new(a: i64, k1: i64, k2: i64) -> Result<Self> {
        if a <= 0 {
            return Err(Error::InvalidParams(format!("a > 0 violated: a = {a}")));
        }
        if k1 <= 1 {
            return Err(Error::InvalidParams(format!("k1 > 1 violated: k1 = {k1}")));
        }
        if k2 <= 1 {
            return Err(Error::InvalidParams(format!("k2 > 1 violated: k2 = {k2}")));
        }
        Ok(Self { a, k1, k2 })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derived {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub params: FamilyParams,
    pub derived: Derived,
    /// TT(p, q, r, −1).
    pub lhs: KnotExpr,
    /// Sum(T(k1, a·k1 + 1); T(k2, −(a + 1)·k2 − 1)).
    pub rhs: KnotExpr,
}

fn violated(msg: String) -> Error {
    Error::InternalInvariantViolation(msg)
}

pub fn family_instantiate(fp: FamilyParams) -> Result<FamilyInstance> {
    let FamilyParams { a, k1, k2 } = FamilyParams::new(fp.a, fp.k1, fp.k2)?;
    let p = (a + 1) * (k1 + k2) + 1;
    let q = a * (k1 + k2) + 1;
    let r = p - k1;
    let s = -1;
    if !(p > r && r > 1 && q > 0) {
        return Err(violated(format!("p > r > 1, q > 0 fails for ({p}, {q}, {r})")));
    }
    if p.gcd(&q) != 1 {
        return Err(violated(format!("gcd({p}, {q}) != 1")));
    }
    if r - q != k2 {
        return Err(violated(format!("r - q = {} but k2 = {k2}", r - q)));
    }
    Ok(FamilyInstance {
        params: fp,
        derived: Derived { p, q, r, s },
        lhs: KnotExpr::twisted_torus(p, q, r, s)?,
        rhs: KnotExpr::sum(vec![
            KnotExpr::torus(k1, a * k1 + 1)?,
            KnotExpr::torus(k2, -(a + 1) * k2 - 1)?,
        ])?,
    })
}

/// Bunch sizes the p, q and r strands split into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BunchCertificate {
    pub p_partition: Vec<i64>,
    pub q_partition: Vec<i64>,
    pub r_partition: Vec<i64>,
    /// `a·k2 + 1 − ((a + 1)·k2 + 1)`, which must equal `−k2`.
    pub rotation_identity: i64,
}

fn alternating(first: i64, second: i64, pairs: i64) -> Vec<i64> {
    (0..pairs).flat_map(|_| [first, second]).collect()
}

pub fn bunch_certificate(fp: FamilyParams) -> Result<BunchCertificate> {
    let inst = family_instantiate(fp)?;
    let FamilyParams { a, k1, k2 } = fp;

    // (a + 1) × k1, a × k2, one k2 + 1
    let mut p_partition = alternating(k1, k2, a);
    p_partition.extend([k1, k2 + 1]);
    // a × k1, (a − 1) × k2, one k2 + 1
    let mut q_partition = alternating(k1, k2, a - 1);
    q_partition.extend([k1, k2 + 1]);
    // a × k2, a × k1, one k2 + 1
    let mut r_partition = alternating(k2, k1, a);
    r_partition.push(k2 + 1);

    let cert = BunchCertificate {
        p_partition,
        q_partition,
        r_partition,
        rotation_identity: a * k2 + 1 - ((a + 1) * k2 + 1),
    };
    let Derived { p, q, r, .. } = inst.derived;
    let sums = (
        cert.p_partition.iter().sum::<i64>(),
        cert.q_partition.iter().sum::<i64>(),
        cert.r_partition.iter().sum::<i64>(),
    );
    if sums != (p, q, r) {
        return Err(violated(format!("bunch sums {sums:?} != ({p}, {q}, {r})")));
    }
    if cert.rotation_identity != -k2 {
        return Err(violated(format!(
            "rotation identity gives {} instead of {}",
            cert.rotation_identity, -k2
        )));
    }
    Ok(cert)
}

/// Closed-form comparison of T(p1, q1) and T(p2, q2): Alexander and Jones.
pub fn torus_invariants_agree(p1: i64, q1: i64, p2: i64, q2: i64) -> Result<bool> {
    Ok(torus_alexander_closed(p1, q1)? == torus_alexander_closed(p2, q2)?
        && torus_jones_closed(p1, q1)? == torus_jones_closed(p2, q2)?)
}

/// Whether T((a+1)·k2 + 1, −k2) and T(k2, −(a+1)·k2 − 1) have the same
/// invariants.
pub fn factor_equivalence_check(fp: FamilyParams) -> Result<bool> {
    let FamilyParams { a, k2, .. } = FamilyParams::new(fp.a, fp.k1, fp.k2)?;
    let m = (a + 1) * k2 + 1;
    torus_invariants_agree(m, -k2, k2, -m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// Normalized Alexander polynomial only.
    Alexander,
    /// Adds the determinant and the span against twice the genus.
    Standard,
    /// Adds the Jones polynomial where the strand count allows.
    Full,
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alexander" => Ok(Level::Alexander),
            "standard" => Ok(Level::Standard),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidParams(format!("unknown level {other:?}"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Alexander => "alexander",
            Level::Standard => "standard",
            Level::Full => "full",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub level: Level,
    pub jones_max_strands: usize,
    /// Records wall time per check; off by default so reports are
    /// byte-reproducible.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            level: Level::Full,
            jones_max_strands: DEFAULT_MAX_STRANDS,
            timing: false,
        }
    }
}

impl VerifyOptions {
    pub fn at(level: Level) -> Self {
        Self {
            level,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipReason {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub invariant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<SkipReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Check {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedAtLevel,
    Mismatch,
    PartiallySkipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::VerifiedAtLevel => "verified-at-level",
            Verdict::Mismatch => "mismatch",
            Verdict::PartiallySkipped => "partially-skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: Option<FamilyParams>,
    pub derived: Option<Derived>,
    pub lhs: String,
    pub rhs: String,
    pub level: Level,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub caveat: String,
}

impl VerificationReport {
    pub fn check(&self, invariant: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.invariant == invariant)
    }

    /// One-paragraph human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = format!("{} vs {}: {} (level {})\n", self.lhs, self.rhs, self.verdict.as_str(), self.level);
        for c in &self.checks {
            let line = match (&c.skipped, c.equal) {
                (Some(s), _) => format!("  {:<12} skipped: {}\n", c.invariant, s.message),
                (None, Some(true)) => format!("  {:<12} equal\n", c.invariant),
                _ => format!("  {:<12} DIFFERENT\n", c.invariant),
            };
            out.push_str(&line);
        }
        if self.verdict != Verdict::Mismatch {
            out.push_str("  invariants consistent with the connected-sum decomposition\n");
        }
        out.push_str(&format!("  note: {}\n", self.caveat));
        out
    }
}

fn poly_value(p: &LaurentPoly, var: &str) -> Value {
    serde_json::to_value(p.to_serial(var)).expect("serializable")
}

fn int_value(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn timed<T>(timing: bool, f: impl FnOnce() -> T) -> (T, Option<u64>) {
    let start = Instant::now();
    let out = f();
    (out, timing.then(|| start.elapsed().as_millis() as u64))
}

/// Span / genus value of one side: twice the genus when the expression
/// determines it, otherwise the Alexander span.
fn span_side(e: &KnotExpr, alexander: &LaurentPoly) -> Result<Value> {
    Ok(match expr_genus(e) {
        Some(g) => json!({"value": 2 * g, "source": "2-genus"}),
        None => json!({
            "value": alexander.span().ok_or(Error::ZeroPolynomial)?,
            "source": "alexander-span"
        }),
    })
}

fn computed(invariant: &str, lhs: Value, rhs: Value, equal: bool, millis: Option<u64>) -> Check {
    Check {
        invariant: invariant.into(),
        equal: Some(equal),
        lhs: Some(lhs),
        rhs: Some(rhs),
        skipped: None,
        millis,
    }
}

/// Compares the invariants of two expressions at the requested level.
pub fn verify_pair(lhs: &KnotExpr, rhs: &KnotExpr, opts: VerifyOptions) -> Result<VerificationReport> {
    lhs.validate()?;
    rhs.validate()?;
    let mut checks = Vec::new();

    let (alex, millis) = timed(opts.timing, || -> Result<_> {
        Ok((expr_alexander(lhs)?, expr_alexander(rhs)?))
    });
    let (la, ra) = alex?;
    checks.push(computed(
        "alexander",
        poly_value(&la, "t"),
        poly_value(&ra, "t"),
        la == ra,
        millis,
    ));

    if opts.level >= Level::Standard {
        let (dets, millis) = timed(opts.timing, || -> Result<_> {
            Ok((determinant_of(&la)?, determinant_of(&ra)?))
        });
        let (ld, rd) = dets?;
        checks.push(computed("determinant", int_value(&ld), int_value(&rd), ld == rd, millis));

        let (spans, millis) = timed(opts.timing, || -> Result<_> {
            Ok((span_side(lhs, &la)?, span_side(rhs, &ra)?))
        });
        let (ls, rs) = spans?;
        let equal = ls["value"] == rs["value"];
        checks.push(computed("span", ls, rs, equal, millis));
    }

    if opts.level >= Level::Full {
        let (jones, millis) = timed(opts.timing, || -> Result<_> {
            Ok((
                expr_jones(lhs, opts.jones_max_strands)?,
                expr_jones(rhs, opts.jones_max_strands)?,
            ))
        });
        match jones {
            Ok((lj, rj)) => checks.push(computed(
                "jones",
                poly_value(&lj, "t"),
                poly_value(&rj, "t"),
                lj == rj,
                millis,
            )),
            Err(e @ Error::TooManyStrands { .. }) => checks.push(Check {
                invariant: "jones".into(),
                equal: None,
                lhs: None,
                rhs: None,
                skipped: Some(SkipReason {
                    code: "too-many-strands".into(),
                    message: e.to_string(),
                }),
                millis: None,
            }),
            Err(e) => return Err(e),
        }
    }

    let verdict = if checks.iter().any(|c| c.equal == Some(false)) {
        Verdict::Mismatch
    } else if checks.iter().any(Check::is_skipped) {
        Verdict::PartiallySkipped
    } else {
        Verdict::VerifiedAtLevel
    };
    Ok(VerificationReport {
        params: None,
        derived: None,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        level: opts.level,
        checks,
        verdict,
        caveat: CAVEAT.into(),
    })
}

/// Verifies one family member: the twisted torus braid against the
/// closed-form connected sum.
pub fn family_verify(fp: FamilyParams, opts: VerifyOptions) -> Result<VerificationReport> {
    let inst = family_instantiate(fp)?;
    let mut report = verify_pair(&inst.lhs, &inst.rhs, opts)?;
    report.params = Some(inst.params);
    report.derived = Some(inst.derived);
    Ok(report)
}

/// Verifies many members in parallel; output order follows input order.
pub fn family_verify_batch(params: &[FamilyParams], opts: VerifyOptions) -> Vec<Result<VerificationReport>> {
    params.par_iter().map(|&fp| family_verify(fp, opts)).collect()
}

/// All `(a, k1, k2)` with `1 ≤ a ≤ a_max`, `2 ≤ k1 ≤ k1_max`,
/// `2 ≤ k2 ≤ k2_max`, in lexicographic order.
pub fn family_enumerate(a_max: i64, k1_max: i64, k2_max: i64) -> Result<Vec<FamilyParams>> {
    if a_max < 1 {
        return Err(Error::InvalidParams(format!("a-max >= 1 violated: {a_max}")));
    }
    if k1_max < 2 {
        return Err(Error::InvalidParams(format!("k1-max >= 2 violated: {k1_max}")));
    }
    if k2_max < 2 {
        return Err(Error::InvalidParams(format!("k2-max >= 2 violated: {k2_max}")));
    }
    let mut out = Vec::new();
    for a in 1..=a_max {
        for k1 in 2..=k1_max {
            for k2 in 2..=k2_max {
                out.push(FamilyParams { a, k1, k2 });
            }
        }
    }
    Ok(out)
}
