//! Exact Laurent polynomials in one variable over arbitrary-precision integers.
//!
//! A [`LaurentPoly`] is stored densely: a lowest exponent plus the run of
//! coefficients from that exponent upward. The run is trimmed so that its
//! first and last entries are nonzero, and the zero polynomial is the empty
//! run. Two polynomials are equal exactly when their canonical forms are.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * x^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// `x^exp`.
    pub fn var_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Coefficients of `x^low, x^(low+1), ...`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Max exponent minus min exponent.
    pub fn span(&self) -> Option<u64> {
        (!self.is_zero()).then(|| self.coeffs.len() as u64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((exp - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by `x^k`, consuming `self`.
    pub fn into_shifted(mut self, k: i64) -> Self {
        if !self.is_zero() {
            self.low += k;
        }
        self
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Replaces every exponent `e` by `-e`.
    pub fn invert_var(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            low: -self.max_exp().unwrap(),
            coeffs,
        }
    }

    /// Replaces every exponent `e` by `e * k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power with k = 0");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Divides every exponent by `k`; `None` if some exponent is not a
    /// multiple of `k`.
    pub fn divide_exponents(&self, k: i64) -> Option<Self> {
        assert!(k != 0, "divide_exponents with k = 0");
        if self.terms().any(|(e, _)| e % k != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c.clone()))))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at `x = 1` or `x = -1`.
    pub fn eval_unit(&self, x: i64) -> Result<BigInt> {
        match x {
            1 => Ok(self.coeffs.iter().sum()),
            -1 => Ok(self
                .terms()
                .map(|(e, c)| if e.is_odd() { -c } else { c.clone() })
                .sum()),
            _ => Err(Error::BadEvaluationPoint(x)),
        }
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Both operands are shifted to lowest exponent 0 and long-divided as
    /// ordinary polynomials; the quotient is shifted back afterwards.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let num = &self.coeffs;
        let d = &den.coeffs;
        if num.len() < d.len() {
            return Err(Error::NotDivisible);
        }
        let lead = d.last().unwrap();
        let mut rem = num.clone();
        let qlen = num.len() - d.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + d.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dj) in d.iter().enumerate() {
                if !dj.is_zero() {
                    rem[i + j] -= &q * dj;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_dense(self.low - den.low, quot))
    }

    /// The unit `±x^k` times `self` with lowest exponent 0 and value +1 at
    /// `x = 1`.
    pub fn normalize_alexander(&self) -> Result<Self> {
        let at_one = self.eval_unit(1)?;
        if at_one.abs() != BigInt::one() {
            return Err(Error::NotAlexanderLike(at_one.to_string()));
        }
        let shifted = self.shift(-self.low);
        Ok(if at_one.is_negative() { -shifted } else { shifted })
    }

    /// True iff `self = ±x^k · other` for some `k`.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.coeffs == other.coeffs {
            return true;
        }
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }

    /// Conventional rendering such as `1 - t + t^2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    pub fn to_serial(&self, var: &str) -> SerialPoly {
        SerialPoly {
            var: var.to_string(),
            terms: self.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
    }

    pub fn from_serial(s: &SerialPoly) -> Result<Self> {
        let mut terms = Vec::with_capacity(s.terms.len());
        let mut last = None;
        for (e, c) in &s.terms {
            if last.is_some_and(|l| l >= *e) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "polynomial terms must be strictly ascending".into(),
                });
            }
            last = Some(*e);
            let c: BigInt = c.parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coefficient {c:?}"),
            })?;
            terms.push((*e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

/// JSON shape `{"var": "t", "terms": [[exponent, "coefficient"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerialPoly {
    pub var: String,
    pub terms: Vec<(i64, String)>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for p in [self, rhs] {
            let off = (p.low - low) as usize;
            for (i, c) in p.coeffs.iter().enumerate() {
                coeffs[off + i] += c;
            }
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        if rhs.low < self.low {
            let pad = (self.low - rhs.low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.low = rhs.low;
        }
        let off = (rhs.low - self.low) as usize;
        if self.coeffs.len() < off + rhs.coeffs.len() {
            self.coeffs.resize(off + rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}
