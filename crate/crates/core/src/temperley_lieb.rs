//! Kauffman bracket of a braid closure by a Temperley–Lieb transfer, and the
//! Jones polynomial obtained from it.
//!
//! The state is a sparse combination of noncrossing matchings of the `2n`
//! boundary points of an `n`-strand diagram, with coefficients in `Z[A, A⁻¹]`.
//! Letters are stacked on top of the current diagram one at a time:
//!
//! * σ_i   = A · 1 + A⁻¹ · e_i
//! * σ_i⁻¹ = A⁻¹ · 1 + A · e_i
//!
//! and a closed loop created by `e_i` contributes δ = −A² − A⁻². The
//! closure joins top point `i` to bottom point `i`.

use std::collections::HashMap;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Strand limit used when no override is configured.
pub const DEFAULT_MAX_STRANDS: usize = 12;

/// Matchings are packed into a `u64`, one bit per boundary point.
pub const HARD_MAX_STRANDS: usize = 32;

/// Noncrossing perfect matching of the boundary of an `n`-strand diagram.
///
/// Points `0..n` are the top endpoints left to right and `n..2n` the bottom
/// endpoints left to right. The encoding walks the boundary circle (top left
/// to right, then bottom right to left) and sets bit `c` when the point at
/// circle position `c` opens a pair, i.e. its partner comes later. Since the
/// matching is noncrossing this Dyck word determines it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingMatching {
    strands: u8,
    code: u64,
}

impl NoncrossingMatching {
    pub fn identity(n: usize) -> Self {
        let partners: Vec<usize> = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self::from_partners(&partners)
    }

    pub fn strands(&self) -> usize {
        self.strands as usize
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    fn circle_to_point(n: usize, c: usize) -> usize {
        if c < n {
            c
        } else {
            n + (2 * n - 1 - c)
        }
    }

    fn point_to_circle(n: usize, p: usize) -> usize {
        if p < n {
            p
        } else {
            2 * n - 1 - (p - n)
        }
    }

    /// Builds the matching from a partner table; panics if the table is not a
    /// noncrossing involution without fixed points.
    pub fn from_partners(partners: &[usize]) -> Self {
        let n = partners.len() / 2;
        assert!(partners.len() == 2 * n && n <= HARD_MAX_STRANDS);
        let mut code = 0u64;
        for c in 0..2 * n {
            let p = Self::circle_to_point(n, c);
            let q = partners[p];
            assert!(q != p && partners[q] == p, "not a perfect matching");
            if Self::point_to_circle(n, q) > c {
                code |= 1 << c;
            }
        }
        let m = Self {
            strands: n as u8,
            code,
        };
        debug_assert_eq!(m.partners(), partners, "matching is not noncrossing");
        m
    }

    /// `partners()[p]` is the point joined to `p`.
    pub fn partners(&self) -> Vec<usize> {
        let n = self.strands();
        let m = self.partner_array();
        m[..2 * n].iter().map(|&p| p as usize).collect()
    }

    fn partner_array(&self) -> [u8; 2 * HARD_MAX_STRANDS] {
        let n = self.strands();
        let mut out = [0u8; 2 * HARD_MAX_STRANDS];
        let mut stack = [0u8; HARD_MAX_STRANDS];
        let mut depth = 0;
        for c in 0..2 * n {
            let p = Self::circle_to_point(n, c) as u8;
            if self.code >> c & 1 == 1 {
                stack[depth] = p;
                depth += 1;
            } else {
                depth -= 1;
                let q = stack[depth];
                out[p as usize] = q;
                out[q as usize] = p;
            }
        }
        out
    }

    fn from_partner_array(n: usize, m: &[u8; 2 * HARD_MAX_STRANDS]) -> Self {
        let mut code = 0u64;
        for c in 0..2 * n {
            let q = m[Self::circle_to_point(n, c)] as usize;
            if Self::point_to_circle(n, q) > c {
                code |= 1 << c;
            }
        }
        Self {
            strands: n as u8,
            code,
        }
    }

    /// Stacks `e_i` (0-based `i`) on top. Returns the new matching and
    /// whether a closed loop was created.
    pub fn apply_generator(&self, i: usize) -> (Self, bool) {
        let mut m = self.partner_array();
        let (a, b) = (m[i], m[i + 1]);
        if a as usize == i + 1 {
            return (*self, true);
        }
        m[a as usize] = b;
        m[b as usize] = a;
        m[i] = i as u8 + 1;
        m[i + 1] = i as u8;
        (Self::from_partner_array(self.strands(), &m), false)
    }

    /// Number of loops in the closure.
    pub fn closure_loops(&self) -> usize {
        let n = self.strands();
        let m = self.partners();
        let closing = |p: usize| if p < n { p + n } else { p - n };
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for s in 0..2 * n {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut p = s;
            loop {
                seen[p] = true;
                let q = m[p];
                seen[q] = true;
                p = closing(q);
                if seen[p] {
                    break;
                }
            }
        }
        loops
    }
}

impl fmt::Debug for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NoncrossingMatching{:?}", self.partners())
    }
}

/// All noncrossing matchings on `n` strands, in increasing code order.
pub fn enumerate_matchings(n: usize) -> Vec<NoncrossingMatching> {
    assert!(n <= HARD_MAX_STRANDS);
    fn rec(n: usize, pos: usize, open: usize, depth: usize, code: u64, out: &mut Vec<u64>) {
        if pos == 2 * n {
            out.push(code);
            return;
        }
        if depth > 0 {
            rec(n, pos + 1, open, depth - 1, code, out);
        }
        if open < n {
            rec(n, pos + 1, open + 1, depth + 1, code | 1 << pos, out);
        }
    }
    let mut codes = Vec::new();
    rec(n, 0, 0, 0, 0, &mut codes);
    codes.sort_unstable();
    codes
        .into_iter()
        .map(|code| NoncrossingMatching {
            strands: n as u8,
            code,
        })
        .collect()
}

/// Catalan number C(n), the dimension of TL_n.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

/// δ = −A² − A⁻².
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Sparse combination of matchings with coefficients in `Z[A, A⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlVector {
    strands: usize,
    terms: HashMap<NoncrossingMatching, LaurentPoly>,
}

impl TlVector {
    /// The identity diagram with coefficient 1.
    pub fn identity(n: usize) -> Self {
        Self::basis(NoncrossingMatching::identity(n))
    }

    pub fn basis(m: NoncrossingMatching) -> Self {
        let mut terms = HashMap::new();
        terms.insert(m, LaurentPoly::one());
        Self {
            strands: m.strands(),
            terms,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NoncrossingMatching) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&NoncrossingMatching, &LaurentPoly)> {
        self.terms.iter()
    }

    fn accumulate(terms: &mut HashMap<NoncrossingMatching, LaurentPoly>, m: NoncrossingMatching, c: LaurentPoly) {
        use std::collections::hash_map::Entry;
        match terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
        }
    }

    /// Applies the skein expansion of one crossing.
    pub fn apply_letter(self, letter: i32) -> Self {
        let i = letter.unsigned_abs() as usize - 1;
        assert!(i + 1 < self.strands, "letter {letter} out of range");
        // weights A^keep on the identity term and A^-keep on e_i
        let keep = if letter > 0 { 1 } else { -1 };
        let mut terms = HashMap::with_capacity(self.terms.len() * 2);
        for (m, c) in self.terms {
            let (m2, closed) = m.apply_generator(i);
            let cup = if closed {
                // A^-keep · δ = −A^(2−keep) − A^(−2−keep)
                let mut w = c.shift(2 - keep);
                w += &c.shift(-2 - keep);
                -w
            } else {
                c.shift(-keep)
            };
            Self::accumulate(&mut terms, m, c.into_shifted(keep));
            Self::accumulate(&mut terms, m2, cup);
        }
        Self {
            strands: self.strands,
            terms,
        }
    }

    /// Evaluates the closure: each diagram contributes δ^(loops − 1).
    pub fn close(&self) -> LaurentPoly {
        let delta = loop_value();
        let mut powers = vec![LaurentPoly::one()];
        let mut by_loops: Vec<LaurentPoly> = Vec::new();
        for (m, c) in &self.terms {
            let k = m.closure_loops() - 1;
            if by_loops.len() <= k {
                by_loops.resize(k + 1, LaurentPoly::zero());
            }
            by_loops[k] += c;
        }
        while powers.len() < by_loops.len() {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        by_loops.iter().zip(&powers).map(|(c, d)| c * d).sum()
    }
}

fn check_strands(b: &BraidWord, threshold: usize) -> Result<()> {
    let n = b.strands();
    if n > threshold.min(HARD_MAX_STRANDS) {
        return Err(Error::TooManyStrands {
            strands: n,
            threshold,
            basis_size: catalan(n).to_string(),
        });
    }
    Ok(())
}

/// Kauffman bracket ⟨β̂⟩ in `A`, normalized so the unknot is 1.
pub fn kauffman_bracket(b: &BraidWord, threshold: usize) -> Result<LaurentPoly> {
    check_strands(b, threshold)?;
    let mut v = TlVector::identity(b.strands());
    for &l in b.letters() {
        v = v.apply_letter(l);
    }
    Ok(v.close())
}

/// `(−A³)^(−w) · ⟨β̂⟩` in `A`.
pub fn normalized_bracket(b: &BraidWord, threshold: usize) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(b, threshold)?;
    let w = b.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(&LaurentPoly::monomial(-3 * w, sign) * &bracket)
}

/// Jones polynomial in `t = A⁻⁴` of the closure.
pub fn jones_from_braid(b: &BraidWord, threshold: usize) -> Result<LaurentPoly> {
    b.require_knot()?;
    let f = normalized_bracket(b, threshold)?;
    if let Some((e, _)) = f.terms().find(|(e, _)| e % 4 != 0) {
        return Err(Error::ExponentNotDivisibleBy4(e));
    }
    Ok(f.divide_exponents(-4).expect("exponents checked"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn all_basis_vectors(n: usize) -> Vec<TlVector> {
        enumerate_matchings(n).into_iter().map(TlVector::basis).collect()
    }

    #[test]
    fn catalan_counts() {
        let expect = [1u128, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in (1..=10).zip(&expect) {
            assert_eq!(enumerate_matchings(n).len() as u128, c);
            assert_eq!(catalan(n), c);
        }
        assert_eq!(catalan(12), 208012);
        assert_eq!(catalan(19), 1_767_263_190);
    }

    #[test]
    fn encoding_round_trips() {
        for n in 1..=6 {
            for m in enumerate_matchings(n) {
                assert_eq!(NoncrossingMatching::from_partners(&m.partners()), m);
            }
        }
        let id = NoncrossingMatching::identity(3);
        assert_eq!(id.partners(), vec![3, 4, 5, 0, 1, 2]);
        assert_eq!(id.closure_loops(), 3);
    }

    #[test]
    fn skein_on_identity() {
        let v = TlVector::identity(2).apply_letter(1);
        let id = NoncrossingMatching::identity(2);
        let (cupcap, closed) = id.apply_generator(0);
        assert!(!closed);
        assert_eq!(cupcap.partners(), vec![1, 0, 3, 2]);
        assert_eq!(v.len(), 2);
        assert_eq!(v.coeff(&id), a(&[(1, 1)]));
        assert_eq!(v.coeff(&cupcap), a(&[(-1, 1)]));
    }

    #[test]
    fn letter_then_inverse_is_identity() {
        for n in 2..=4 {
            for v in all_basis_vectors(n) {
                for i in 1..n as i32 {
                    assert_eq!(v.clone().apply_letter(i).apply_letter(-i), v);
                    assert_eq!(v.clone().apply_letter(-i).apply_letter(i), v);
                }
            }
        }
    }

    #[test]
    fn temperley_lieb_relations() {
        for m in enumerate_matchings(3) {
            // e_i e_i = δ e_i
            for i in 0..2 {
                let (once, _) = m.apply_generator(i);
                let (twice, closed) = once.apply_generator(i);
                assert!(closed);
                assert_eq!(twice, once);
            }
            // e_1 e_2 e_1 = e_1
            let (x, l1) = m.apply_generator(0);
            let (y, l2) = x.apply_generator(1);
            let (z, l3) = y.apply_generator(0);
            assert!(!(l2 || l3));
            assert_eq!(z, x);
            let _ = l1;
        }
    }

    #[test]
    fn braid_relation_on_basis() {
        for v in all_basis_vectors(4) {
            for i in 1..3 {
                let lhs = v.clone().apply_letter(i).apply_letter(i + 1).apply_letter(i);
                let rhs = v.clone().apply_letter(i + 1).apply_letter(i).apply_letter(i + 1);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn small_brackets() {
        let t = DEFAULT_MAX_STRANDS;
        assert_eq!(kauffman_bracket(&BraidWord::identity(1).unwrap(), t).unwrap(), LaurentPoly::one());
        assert_eq!(kauffman_bracket(&BraidWord::identity(2).unwrap(), t).unwrap(), loop_value());
        let one = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(kauffman_bracket(&one, t).unwrap(), a(&[(3, -1)]));
    }

    #[test]
    fn jones_examples() {
        let t = DEFAULT_MAX_STRANDS;
        let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(jones_from_braid(&trefoil, t).unwrap(), a(&[(4, -1), (3, 1), (1, 1)]));
        assert_eq!(jones_from_braid(&BraidWord::identity(1).unwrap(), t).unwrap(), LaurentPoly::one());
        assert_eq!(
            jones_from_braid(&torus_braid(2, 5).unwrap(), t).unwrap(),
            a(&[(2, 1), (4, 1), (5, -1), (6, 1), (7, -1)])
        );
    }

    #[test]
    fn threshold_and_link_errors() {
        let b = torus_braid(13, 2).unwrap();
        match kauffman_bracket(&b, DEFAULT_MAX_STRANDS) {
            Err(Error::TooManyStrands { strands: 13, threshold: 12, basis_size }) => {
                assert_eq!(basis_size, "742900")
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            jones_from_braid(&torus_braid(2, 2).unwrap(), 12),
            Err(Error::NotAKnot { components: 2 })
        );
        // the bracket of a link is still defined
        assert!(kauffman_bracket(&torus_braid(2, 2).unwrap(), 12).is_ok());
    }
}
