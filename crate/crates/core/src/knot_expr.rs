//! Symbolic knot expressions and closed-form torus-knot invariants.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr := "T(" int "," int ")"
//!       | "TT(" int "," int "," int "," int ")"
//!       | "Mirror(" expr ")"
//!       | "Sum(" expr (";" expr)* ")"
//! ```
//!
//! Closed forms for T(p, q) with p, q > 0:
//!
//! * Δ(t) = (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))
//! * V(t) = t^{(p−1)(q−1)/2} (1 − t^{p+1} − t^{q+1} + t^{p+q}) / (1 − t²)
//!
//! A negative sign on either parameter mirrors the knot, which leaves the
//! normalized Δ unchanged and sends V(t) to V(t⁻¹).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::braid::{torus_braid, twisted_torus_braid, BraidWord, TwistedTorusParams};
use crate::burau::alexander_from_braid;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::temperley_lieb::jones_from_braid;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    /// Torus knot with `p > 0` and the chirality carried by the sign of `q`.
    Torus { p: i64, q: i64 },
    TwistedTorus(TwistedTorusParams),
    Sum(Vec<KnotExpr>),
    Mirror(Box<KnotExpr>),
}

impl KnotExpr {
    /// T(p, q); a negative `p` is moved onto `q`.
    pub fn torus(p: i64, q: i64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidParams(format!("T({p},{q}) needs nonzero parameters")));
        }
        let g = p.abs().gcd(&q.abs());
        if g != 1 {
            return Err(Error::InvalidParams(format!(
                "gcd(|p|, |q|) = 1 violated: gcd({}, {}) = {g}",
                p.abs(),
                q.abs()
            )));
        }
        Ok(KnotExpr::Torus {
            p: p.abs(),
            q: q * p.signum(),
        })
    }

    pub fn unknot() -> Self {
        KnotExpr::Torus { p: 1, q: 1 }
    }

    pub fn twisted_torus(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        Ok(KnotExpr::TwistedTorus(TwistedTorusParams::new(p, q, r, s)?))
    }

    pub fn sum(children: Vec<KnotExpr>) -> Result<Self> {
        if children.is_empty() {
            return Err(Error::InvalidParams("Sum needs at least one summand".into()));
        }
        Ok(KnotExpr::Sum(children))
    }

    pub fn mirror(child: KnotExpr) -> Self {
        KnotExpr::Mirror(Box::new(child))
    }

    /// Checks the node invariants of the whole tree.
    pub fn validate(&self) -> Result<()> {
        match self {
            KnotExpr::Torus { p, q } => KnotExpr::torus(*p, *q).map(|_| ()),
            KnotExpr::TwistedTorus(params) => params.validate(),
            KnotExpr::Sum(children) if children.is_empty() => {
                Err(Error::InvalidParams("Sum needs at least one summand".into()))
            }
            KnotExpr::Sum(children) => children.iter().try_for_each(KnotExpr::validate),
            KnotExpr::Mirror(child) => child.validate(),
        }
    }

    /// Largest strand count of any braid the expression's invariants are
    /// computed from (closed-form nodes count as 1).
    pub fn computed_strands(&self) -> usize {
        match self {
            KnotExpr::Torus { .. } => 1,
            KnotExpr::TwistedTorus(params) => params.p as usize,
            KnotExpr::Sum(children) => children.iter().map(KnotExpr::computed_strands).max().unwrap_or(1),
            KnotExpr::Mirror(child) => child.computed_strands(),
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Torus { p, q } => write!(f, "T({p},{q})"),
            KnotExpr::TwistedTorus(TwistedTorusParams { p, q, r, s }) => {
                write!(f, "TT({p},{q},{r},{s})")
            }
            KnotExpr::Sum(children) => {
                f.write_str("Sum(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
            KnotExpr::Mirror(child) => write!(f, "Mirror({child})"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected T, TT, Mirror or Sum");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-' | b'+')) {
            self.pos += 1;
        }
        self.skip_ws();
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            self.pos = start;
            return self.err("expected integer");
        }
        let text: String = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn ints(&mut self, count: usize) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.eat(b',')?;
            }
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?;
        self.eat(b'(')?;
        let at = |e: Error| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                pos: start,
                msg: other.to_string(),
            },
        };
        let e = match name {
            "T" => {
                let v = self.ints(2)?;
                KnotExpr::torus(v[0], v[1]).map_err(at)?
            }
            "TT" => {
                let v = self.ints(4)?;
                KnotExpr::twisted_torus(v[0], v[1], v[2], v[3]).map_err(at)?
            }
            "Mirror" => KnotExpr::mirror(self.expr()?),
            "Sum" => {
                let mut children = vec![self.expr()?];
                while self.peek() == Some(b';') {
                    self.pos += 1;
                    children.push(self.expr()?);
                }
                KnotExpr::Sum(children)
            }
            other => {
                self.pos = start;
                return self.err(format!("unknown constructor {other:?}"));
            }
        };
        self.eat(b')')?;
        Ok(e)
    }
}

impl FromStr for KnotExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}

fn binomial_like(p: i64, q: i64) -> LaurentPoly {
    // 1 − t^{p+1} − t^{q+1} + t^{p+q}
    LaurentPoly::from_terms([(0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1)])
}

fn check_coprime(p: i64, q: i64) -> Result<(i64, i64)> {
    let (p, q) = (p.abs(), q.abs());
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidParams(format!(
            "gcd(|p|, |q|) = 1 violated: gcd({p}, {q}) = {}",
            p.gcd(&q)
        )));
    }
    Ok((p, q))
}

/// Normalized Alexander polynomial of T(p, q).
pub fn torus_alexander_closed(p: i64, q: i64) -> Result<LaurentPoly> {
    let (p, q) = check_coprime(p, q)?;
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let pow_minus_one = |k: i64| LaurentPoly::from_terms([(k, 1), (0, -1)]);
    let num = &pow_minus_one(p * q) * &pow_minus_one(1);
    let den = &pow_minus_one(p) * &pow_minus_one(q);
    num.div_exact(&den)?.normalize_alexander()
}

/// Jones polynomial of T(p, q), with T(p, q), p, q > 0 the positive braid
/// closure.
pub fn torus_jones_closed(p: i64, q: i64) -> Result<LaurentPoly> {
    let mirrored = (p < 0) != (q < 0);
    let (p, q) = check_coprime(p, q)?;
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let num = binomial_like(p, q).shift((p - 1) * (q - 1) / 2);
    let den = LaurentPoly::from_terms([(0, 1), (2, -1)]);
    let v = num.div_exact(&den)?;
    Ok(if mirrored { v.invert_var() } else { v })
}

/// Normalized Alexander polynomial of the knot the expression denotes.
pub fn expr_alexander(e: &KnotExpr) -> Result<LaurentPoly> {
    match e {
        KnotExpr::Torus { p, q } => torus_alexander_closed(*p, *q),
        KnotExpr::TwistedTorus(params) => alexander_from_braid(&twisted_torus_braid(params)?),
        KnotExpr::Sum(children) => children
            .iter()
            .map(expr_alexander)
            .product::<Result<LaurentPoly>>()?
            .normalize_alexander(),
        KnotExpr::Mirror(child) => expr_alexander(child),
    }
}

/// Jones polynomial of the knot the expression denotes; twisted torus nodes
/// go through the Temperley–Lieb transfer subject to `threshold`.
pub fn expr_jones(e: &KnotExpr, threshold: usize) -> Result<LaurentPoly> {
    match e {
        KnotExpr::Torus { p, q } => torus_jones_closed(*p, *q),
        KnotExpr::TwistedTorus(params) => {
            jones_from_braid(&twisted_torus_braid(params)?, threshold)
        }
        KnotExpr::Sum(children) => children.iter().map(|c| expr_jones(c, threshold)).product(),
        KnotExpr::Mirror(child) => Ok(expr_jones(child, threshold)?.invert_var()),
    }
}

/// Braid whose closure is the knot the expression denotes.
pub fn expr_to_braid(e: &KnotExpr) -> Result<BraidWord> {
    match e {
        KnotExpr::Torus { p, q } => {
            KnotExpr::torus(*p, *q)?;
            torus_braid(*p, *q)
        }
        KnotExpr::TwistedTorus(params) => twisted_torus_braid(params),
        KnotExpr::Sum(children) => {
            let mut it = children.iter();
            let first = it
                .next()
                .ok_or_else(|| Error::InvalidParams("Sum needs at least one summand".into()))?;
            it.try_fold(expr_to_braid(first)?, |acc, c| acc.connected_sum(&expr_to_braid(c)?))
        }
        KnotExpr::Mirror(child) => Ok(expr_to_braid(child)?.mirror()),
    }
}

/// Seifert genus where it follows from the expression alone; `None` for
/// twisted torus nodes.
pub fn expr_genus(e: &KnotExpr) -> Option<u64> {
    match e {
        KnotExpr::Torus { p, q } => Some((p.unsigned_abs() - 1) * (q.unsigned_abs() - 1) / 2),
        KnotExpr::TwistedTorus(_) => None,
        KnotExpr::Sum(children) => children.iter().map(expr_genus).sum(),
        KnotExpr::Mirror(child) => expr_genus(child),
    }
}
