//! Test-side oracles that share no code with the library pipelines.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ttknot::LaurentPoly;

/// Sparse Laurent polynomial with machine-integer coefficients.
pub type Poly = BTreeMap<i64, i64>;

pub fn from_lib(p: &LaurentPoly) -> Poly {
    p.terms()
        .map(|(e, c)| (e, i64::try_from(c).expect("coefficient fits in i64")))
        .collect()
}

pub fn poly(terms: &[(i64, i64)]) -> Poly {
    let mut out = Poly::new();
    for &(e, c) in terms {
        *out.entry(e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn scale(a: &Poly, k: i64, shift: i64) -> Poly {
    a.iter().filter(|_| k != 0).map(|(e, c)| (e + shift, c * k)).collect()
}

/// Schoolbook division from the top degree; panics on a nonzero remainder.
pub fn div(num: &Poly, den: &Poly) -> Poly {
    let (&dtop, &dlead) = den.iter().next_back().expect("nonzero divisor");
    let dlow = *den.keys().next().unwrap();
    let mut rem = num.clone();
    let mut quot = Poly::new();
    while let Some((&top, &c)) = rem.iter().next_back() {
        if top - dtop < num.keys().next().unwrap() - dlow {
            break;
        }
        assert_eq!(c % dlead, 0, "inexact division");
        let q = c / dlead;
        quot.insert(top - dtop, q);
        rem = add(&rem, &scale(den, -q, top - dtop));
    }
    assert!(rem.is_empty(), "nonzero remainder {rem:?}");
    quot
}

pub fn invert(a: &Poly) -> Poly {
    a.iter().map(|(e, c)| (-e, *c)).collect()
}

/// Shifts to lowest exponent 0 and makes the value at 1 positive.
pub fn normalize(a: &Poly) -> Poly {
    let low = *a.keys().next().unwrap();
    let sign = if a.values().sum::<i64>() < 0 { -1 } else { 1 };
    scale(a, sign, -low)
}

fn binomial_minus_one(n: i64) -> Poly {
    poly(&[(n, 1), (0, -1)])
}

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) for positive coprime p, q.
pub fn torus_alexander(p: i64, q: i64) -> Poly {
    let (p, q) = (p.abs(), q.abs());
    let num = mul(&binomial_minus_one(p * q), &binomial_minus_one(1));
    let den = mul(&binomial_minus_one(p), &binomial_minus_one(q));
    normalize(&div(&num, &den))
}

/// t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2), mirrored
/// when exactly one of p, q is negative.
pub fn torus_jones(p: i64, q: i64) -> Poly {
    let (a, b) = (p.abs(), q.abs());
    let num = poly(&[(0, 1), (a + 1, -1), (b + 1, -1), (a + b, 1)]);
    let v = div(&num, &poly(&[(0, 1), (2, -1)]));
    let v = scale(&v, 1, (a - 1) * (b - 1) / 2);
    if p * q < 0 {
        invert(&v)
    } else {
        v
    }
}

pub fn product(polys: impl IntoIterator<Item = Poly>) -> Poly {
    polys.into_iter().fold(poly(&[(0, 1)]), |acc, p| mul(&acc, &p))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Number of noncrossing perfect matchings of `2n` points on a circle,
/// by splitting on the partner of the first point.
pub fn count_noncrossing(n: usize) -> u128 {
    let mut c = vec![1u128; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|k| c[k] * c[m - 1 - k]).sum();
    }
    c[n]
}
