//! Independent brute-force oracles: Kauffman state sums over PD codes and
//! schoolbook division, checked against the library pipelines.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{from_lib, poly, Poly};
use ttknot::{alexander_from_braid, jones_from_braid, torus_braid, BraidWord, LaurentPoly};

/// Jones polynomial of a PD code by summing over all 2^c smoothings.
///
/// `X[a,b,c,d]` smooths to `a-b, c-d` with weight A and to `a-d, b-c` with
/// weight A^-1. Loops are counted with a union-find over edge labels.
fn state_sum_jones(pd: &[[usize; 4]]) -> Poly {
    let edges = 2 * pd.len();
    let mut bracket = Poly::new();
    for state in 0u32..1 << pd.len() {
        let mut parent: Vec<usize> = (0..=edges).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut union = |x: usize, y: usize| {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
        };
        let mut a_exp = 0i64;
        for (k, &[a, b, c, d]) in pd.iter().enumerate() {
            if state >> k & 1 == 0 {
                union(a, b);
                union(c, d);
                a_exp += 1;
            } else {
                union(a, d);
                union(b, c);
                a_exp -= 1;
            }
        }
        let loops = (1..=edges).filter(|&e| find(&mut parent, e) == e).count();
        // δ^(loops − 1) with δ = −A^2 − A^-2
        let delta = poly(&[(2, -1), (-2, -1)]);
        let term = (1..loops).fold(poly(&[(a_exp, 1)]), |acc, _| common::mul(&acc, &delta));
        bracket = common::add(&bracket, &term);
    }
    let writhe: i64 = pd
        .iter()
        .map(|&[_, b, _, d]| if b == d + 1 || d > b + 1 { 1 } else { -1 })
        .sum();
    // (−A^3)^(−w), then A = t^(−1/4)
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let v = common::scale(&bracket, sign, -3 * writhe);
    v.into_iter()
        .map(|(e, c)| {
            assert_eq!(e % 4, 0, "exponent {e} not divisible by 4");
            (-e / 4, c)
        })
        .collect()
}

#[test]
fn state_sum_reproduces_published_left_trefoil() {
    let pd = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    assert_eq!(state_sum_jones(&pd), poly(&[(-4, -1), (-3, 1), (-1, 1)]));
}

#[test]
fn state_sum_on_right_trefoil_closure() {
    let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
    let pd = b.closure_pd_code().unwrap();
    assert_eq!(state_sum_jones(&pd.0), poly(&[(4, -1), (3, 1), (1, 1)]));
}

#[test]
fn state_sum_on_figure_eight_is_amphichiral() {
    let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
    let v = state_sum_jones(&b.closure_pd_code().unwrap().0);
    assert_eq!(v, poly(&[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]));
    assert_eq!(from_lib(&jones_from_braid(&b, 12).unwrap()), v);
}

#[test]
fn temperley_lieb_matches_state_sum_on_random_braids() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0ac1e);
    let mut cases = 0;
    while cases < 60 {
        let n = rng.gen_range(2..=5);
        // a one-crossing PD code does not determine its crossing sign
        let len = rng.gen_range(2..=12);
        let letters = (0..len)
            .map(|_| rng.gen_range(1..n as i32) * if rng.gen() { 1 } else { -1 })
            .collect();
        let b = BraidWord::new(n, letters).unwrap();
        if !b.is_knot_closure() {
            continue;
        }
        let pd = b.closure_pd_code().unwrap();
        assert_eq!(from_lib(&jones_from_braid(&b, 12).unwrap()), state_sum_jones(&pd.0), "{b}");
        cases += 1;
    }
}

#[test]
fn state_sum_matches_torus_pipeline() {
    for (p, q) in [(2, 5), (3, 4), (2, -7), (3, -5)] {
        let b = torus_braid(p, q).unwrap();
        let v = state_sum_jones(&b.closure_pd_code().unwrap().0);
        assert_eq!(v, common::torus_jones(p, q), "T({p},{q})");
    }
}

#[test]
fn hand_expanded_divisions() {
    let t = |terms: &[(i64, i64)]| LaurentPoly::from_terms(terms.iter().copied());
    // (1 − t^3) / (1 − t) = 1 + t + t^2
    assert_eq!(
        t(&[(0, 1), (3, -1)]).div_exact(&t(&[(0, 1), (1, -1)])).unwrap(),
        t(&[(0, 1), (1, 1), (2, 1)])
    );
    // (t^-2 − t^2) / (t^-1 + t) = t^-1 − t
    assert_eq!(
        t(&[(-2, 1), (2, -1)]).div_exact(&t(&[(-1, 1), (1, 1)])).unwrap(),
        t(&[(-1, 1), (1, -1)])
    );
    // (t^4 − 1) / (2t − 2) leaves a fractional quotient
    assert!(t(&[(4, 1), (0, -1)]).div_exact(&t(&[(1, 2), (0, -2)])).is_err());
}

#[test]
fn alexander_pipeline_matches_schoolbook_oracle() {
    for (p, q) in [(2, 3), (3, 7), (4, 9), (5, 6), (2, -5)] {
        let got = alexander_from_braid(&torus_braid(p, q).unwrap()).unwrap();
        assert_eq!(from_lib(&got), common::torus_alexander(p, q), "T({p},{q})");
    }
}
