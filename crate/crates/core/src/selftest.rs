//! Seeded consistency suites: closed-form oracles against the braid
//! pipelines, Markov invariance, multiplicativity under connected sum, and
//! the generator identities of both representations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{torus_braid, BraidWord};
use crate::burau::{alexander_from_braid, burau_generator, BurauMatrix};
use crate::error::Result;
use crate::knot_expr::{torus_alexander_closed, torus_jones_closed};
use crate::temperley_lieb::{catalan, enumerate_matchings, jones_from_braid, TlVector};

/// Jones of the small random braids used here never needs a larger basis.
const SELFTEST_STRANDS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    pub markov_cases: usize,
    pub sum_cases: usize,
    pub max_strands: usize,
    pub max_len: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            seed: 0x7407_0001,
            markov_cases: 200,
            sum_cases: 50,
            max_strands: 6,
            max_len: 20,
        }
    }
}

/// Random word on `2..=max_strands` strands whose closure is a knot.
pub fn random_knot_braid(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_len);
        let b = random_word(rng, n, len);
        if b.is_knot_closure() {
            return b;
        }
    }
}

pub fn random_word(rng: &mut impl Rng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

fn suite(name: &str) -> SuiteResult {
    SuiteResult {
        suite: name.into(),
        cases: 0,
        failures: Vec::new(),
    }
}

fn record(s: &mut SuiteResult, ok: Result<bool>, what: impl FnOnce() -> String) {
    s.cases += 1;
    match ok {
        Ok(true) => {}
        Ok(false) => s.failures.push(what()),
        Err(e) => s.failures.push(format!("{}: {e}", what())),
    }
}

pub fn torus_alexander_oracle() -> SuiteResult {
    let mut s = suite("torus-alexander-oracle");
    for p in 2..=7i64 {
        for q in p + 1..=7 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let ok = torus_braid(p, q)
                .and_then(|b| alexander_from_braid(&b))
                .and_then(|a| Ok(a == torus_alexander_closed(p, q)?));
            record(&mut s, ok, || format!("T({p},{q})"));
        }
    }
    s
}

pub const JONES_ORACLE_PAIRS: [(i64, i64); 5] = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)];

pub fn torus_jones_oracle() -> SuiteResult {
    let mut s = suite("torus-jones-oracle");
    for (p, q) in JONES_ORACLE_PAIRS {
        let ok = torus_braid(p, q)
            .and_then(|b| jones_from_braid(&b, SELFTEST_STRANDS))
            .and_then(|j| Ok(j == torus_jones_closed(p, q)?));
        record(&mut s, ok, || format!("T({p},{q})"));
    }
    s
}

fn same_invariants(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(alexander_from_braid(a)? == alexander_from_braid(b)?
        && jones_from_braid(a, SELFTEST_STRANDS)? == jones_from_braid(b, SELFTEST_STRANDS)?)
}

pub fn markov_invariance(cfg: &SelftestConfig) -> SuiteResult {
    let mut s = suite("markov-invariance");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.markov_cases {
        let b = random_knot_braid(&mut rng, cfg.max_strands, cfg.max_len);
        let clen = rng.gen_range(1..=6);
        let c = random_word(&mut rng, b.strands(), clen);
        let conj = c.then(&b).then(&c.inverse());
        record(&mut s, same_invariants(&b, &conj), || format!("conjugate {b} by {c}"));
        let positive = rng.gen_bool(0.5);
        let stab = b.stabilize(positive);
        record(&mut s, same_invariants(&b, &stab), || format!("stabilize {b} ({positive})"));
    }
    s
}

pub fn sum_multiplicativity(cfg: &SelftestConfig) -> SuiteResult {
    let mut s = suite("connected-sum-multiplicativity");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for _ in 0..cfg.sum_cases {
        let b1 = random_knot_braid(&mut rng, cfg.max_strands, cfg.max_len);
        let b2 = random_knot_braid(&mut rng, cfg.max_strands, cfg.max_len);
        let ok = (|| -> Result<bool> {
            let sum = b1.connected_sum(&b2)?;
            let alex = (alexander_from_braid(&b1)? * alexander_from_braid(&b2)?).normalize_alexander()?;
            let jones = jones_from_braid(&b1, SELFTEST_STRANDS)? * jones_from_braid(&b2, SELFTEST_STRANDS)?;
            Ok(alexander_from_braid(&sum)? == alex && jones_from_braid(&sum, SELFTEST_STRANDS)? == jones)
        })();
        record(&mut s, ok, || format!("{b1} # {b2}"));
    }
    s
}

pub const CATALAN: [u128; 10] = [1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];

pub fn catalan_counts() -> SuiteResult {
    let mut s = suite("catalan-basis-counts");
    for (n, &c) in (1..=10).zip(&CATALAN) {
        let count = enumerate_matchings(n).len() as u128;
        record(&mut s, Ok(count == c && catalan(n) == c), || format!("n={n}: {count} != {c}"));
    }
    s
}

pub fn generator_identities(max_strands: usize) -> SuiteResult {
    let mut s = suite("generator-identities");
    for n in 2..=max_strands {
        let id = BurauMatrix::identity(n - 1);
        for i in 1..n as i32 {
            let ok = burau_generator(n, i)
                .and_then(|g| Ok(g.mul(&burau_generator(n, -i)?) == id));
            record(&mut s, ok, || format!("burau inverse n={n} i={i}"));
            if (i as usize) + 1 < n {
                let ok = (|| -> Result<bool> {
                    let a = burau_generator(n, i)?;
                    let b = burau_generator(n, i + 1)?;
                    Ok(a.mul(&b).mul(&a) == b.mul(&a).mul(&b))
                })();
                record(&mut s, ok, || format!("burau braid relation n={n} i={i}"));
            }
            for j in i + 2..n as i32 {
                let ok = (|| -> Result<bool> {
                    let a = burau_generator(n, i)?;
                    let b = burau_generator(n, j)?;
                    Ok(a.mul(&b) == b.mul(&a))
                })();
                record(&mut s, ok, || format!("burau far commutation n={n} i={i} j={j}"));
            }
        }
        for m in enumerate_matchings(n) {
            let v = TlVector::basis(m);
            for i in 1..n as i32 {
                let ok = Ok(v.clone().apply_letter(i).apply_letter(-i) == v
                    && v.clone().apply_letter(-i).apply_letter(i) == v);
                record(&mut s, ok, || format!("TL inverse n={n} i={i} on {m:?}"));
                if (i as usize) + 1 < n {
                    let lhs = v.clone().apply_letter(i).apply_letter(i + 1).apply_letter(i);
                    let rhs = v.clone().apply_letter(i + 1).apply_letter(i).apply_letter(i + 1);
                    record(&mut s, Ok(lhs == rhs), || format!("TL braid relation n={n} i={i} on {m:?}"));
                }
            }
        }
    }
    s
}

/// Runs every suite.
pub fn run_all(cfg: &SelftestConfig) -> Vec<SuiteResult> {
    vec![
        torus_alexander_oracle(),
        torus_jones_oracle(),
        markov_invariance(cfg),
        sum_multiplicativity(cfg),
        catalan_counts(),
        generator_identities(5),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let cfg = SelftestConfig {
            markov_cases: 10,
            sum_cases: 5,
            ..SelftestConfig::default()
        };
        for r in run_all(&cfg) {
            assert!(r.passed(), "{}: {:?}", r.suite, r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn random_braids_are_knots() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let b = random_knot_braid(&mut rng, 6, 20);
            assert!(b.is_knot_closure());
            assert!(b.strands() <= 6 && b.len() <= 20);
        }
    }
}
