//! Reduced Burau representation and the Alexander polynomial of a braid
//! closure.
//!
//! The image of σ_i differs from the identity only in column `i` (1-based):
//! `t` above the diagonal, `-t` on it and `1` below it. The image of σ_i⁻¹
//! has `1`, `-t⁻¹`, `t⁻¹` in the same places. Words are multiplied in from
//! the right, so each letter is a three-term column operation.
//!
//! For a braid β on `n` strands whose closure is a knot,
//! `det(ρ(β) − I) ≐ Δ(t) · (1 + t + … + t^{n−1})` up to a unit `±t^k`.

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Square matrix over `Z[t, t⁻¹]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurauMatrix {
    dim: usize,
    rows: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                    .collect()
            })
            .collect();
        Self { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .filter(|&k| !self.rows[i][k].is_zero() && !other.rows[k][j].is_zero())
                            .map(|k| &self.rows[i][k] * &other.rows[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        Self { dim: self.dim, rows }
    }

    /// Right multiplication by the image of one letter, in place.
    fn apply_letter(&mut self, letter: i32) {
        let a = letter.unsigned_abs() as usize - 1;
        let m = self.dim;
        let (t, t_inv) = (LaurentPoly::var_pow(1), LaurentPoly::var_pow(-1));
        for row in &mut self.rows {
            let mut col = LaurentPoly::zero();
            if letter > 0 {
                if a > 0 {
                    col = &col + &(&t * &row[a - 1]);
                }
                col = &col - &(&t * &row[a]);
                if a + 1 < m {
                    col = &col + &row[a + 1];
                }
            } else {
                if a > 0 {
                    col = &col + &row[a - 1];
                }
                col = &col - &(&t_inv * &row[a]);
                if a + 1 < m {
                    col = &col + &(&t_inv * &row[a + 1]);
                }
            }
            row[a] = col;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    ///
    /// Each row is first shifted by a power of `t` so that its lowest
    /// exponent is 0; the result is therefore only defined up to a unit
    /// `t^k`, which is all the Alexander computation needs.
    pub fn det_up_to_power(&self) -> LaurentPoly {
        let m = self.dim;
        if m == 0 {
            return LaurentPoly::one();
        }
        let mut a: Vec<Vec<LaurentPoly>> = self
            .rows
            .iter()
            .map(|row| {
                let low = row.iter().filter_map(LaurentPoly::min_exp).min().unwrap_or(0);
                row.iter().map(|e| e.shift(-low)).collect()
            })
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..m {
            let pivot_row = (k..m)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| (a[i][k].span().unwrap(), i));
            let Some(pr) = pivot_row else {
                return LaurentPoly::zero();
            };
            if pr != k {
                a.swap(pr, k);
                negate = !negate;
            }
            if k + 1 == m {
                break;
            }
            let (head, tail) = a.split_at_mut(k + 1);
            let pivot_row = &head[k];
            let pivot = &pivot_row[k];
            tail.par_iter_mut().for_each(|row| {
                let factor = row[k].clone();
                for j in k + 1..m {
                    let mut v = pivot * &row[j];
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v = &v - &(&factor * &pivot_row[j]);
                    }
                    row[j] = v
                        .div_exact(&prev)
                        .expect("Bareiss step must divide exactly");
                }
                row[k] = LaurentPoly::zero();
            });
            prev = a[k][k].clone();
        }
        let det = a[m - 1][m - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Dense image of σ_{|letter|}^{sign} on `n` strands.
pub fn burau_generator(n: usize, letter: i32) -> Result<BurauMatrix> {
    if n < 2 || letter == 0 || letter.unsigned_abs() as usize >= n {
        return Err(Error::BadLetter { letter, strands: n });
    }
    let mut m = BurauMatrix::identity(n - 1);
    m.apply_letter(letter);
    Ok(m)
}

/// Product of the generator images of the word, left to right.
pub fn burau_of_word(b: &BraidWord) -> Result<BurauMatrix> {
    if b.strands() < 2 {
        return Err(Error::InvalidParams(
            "reduced Burau needs at least two strands".into(),
        ));
    }
    let mut m = BurauMatrix::identity(b.strands() - 1);
    for &l in b.letters() {
        m.apply_letter(l);
    }
    Ok(m)
}

/// `1 + t + … + t^{n−1}`.
fn strand_factor(n: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, 1)))
}

/// Normalized Alexander polynomial of the closure of `b`.
pub fn alexander_from_braid(b: &BraidWord) -> Result<LaurentPoly> {
    b.require_knot()?;
    if b.strands() == 1 {
        return Ok(LaurentPoly::one());
    }
    let mut m = burau_of_word(b)?;
    for i in 0..m.dim {
        m.rows[i][i] = &m.rows[i][i] - &LaurentPoly::one();
    }
    let det = m.det_up_to_power();
    let delta = det.div_exact(&strand_factor(b.strands())).map_err(|_| {
        Error::InternalInvariantViolation(format!(
            "det(rho - I) is not divisible by 1 + t + ... + t^{}",
            b.strands() - 1
        ))
    })?;
    delta.normalize_alexander().map_err(|e| {
        Error::InternalInvariantViolation(format!("Burau determinant quotient: {e}"))
    })
}

/// `|Δ(−1)|` of the closure of `b`.
pub fn knot_determinant(b: &BraidWord) -> Result<BigInt> {
    determinant_of(&alexander_from_braid(b)?)
}

pub(crate) fn determinant_of(alexander: &LaurentPoly) -> Result<BigInt> {
    Ok(alexander.eval_unit(-1)?.abs())
}

/// Max exponent minus min exponent.
pub fn alexander_span(p: &LaurentPoly) -> Result<u64> {
    p.span().ok_or(Error::ZeroPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, twisted_torus_braid, TwistedTorusParams};

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn smallest_generator() {
        let g = burau_generator(2, 1).unwrap();
        assert_eq!(g.dim(), 1);
        assert_eq!(*g.get(0, 0), poly(&[(1, -1)]));
        assert!(burau_generator(3, 3).is_err());
        assert!(burau_generator(3, 0).is_err());
    }

    #[test]
    fn generator_times_inverse_is_identity() {
        for n in 2..=5 {
            for i in 1..n as i32 {
                let g = burau_generator(n, i).unwrap();
                let h = burau_generator(n, -i).unwrap();
                assert!(g.mul(&h).is_identity(), "n={n} i={i}");
                assert!(h.mul(&g).is_identity(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relation_at_three_strands() {
        let s1 = burau_generator(3, 1).unwrap();
        let s2 = burau_generator(3, 2).unwrap();
        // hand product: both sides equal [[0, -t^2], [-t, 0]]
        let lhs = s1.mul(&s2).mul(&s1);
        let rhs = s2.mul(&s1).mul(&s2);
        assert_eq!(lhs, rhs);
        assert!(lhs.get(0, 0).is_zero());
        assert_eq!(*lhs.get(0, 1), poly(&[(2, -1)]));
        assert_eq!(*lhs.get(1, 0), poly(&[(1, -1)]));
    }

    #[test]
    fn word_images() {
        assert!(burau_of_word(&BraidWord::identity(4).unwrap()).unwrap().is_identity());
        let one = burau_of_word(&BraidWord::new(2, vec![1]).unwrap()).unwrap();
        assert_eq!(*one.get(0, 0), poly(&[(1, -1)]));
        let three = burau_of_word(&BraidWord::new(2, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(*three.get(0, 0), poly(&[(3, -1)]));
    }

    #[test]
    fn word_image_matches_dense_product() {
        let b = BraidWord::new(4, vec![1, -2, 3, 3, -1, 2]).unwrap();
        let dense = b
            .letters()
            .iter()
            .map(|&l| burau_generator(4, l).unwrap())
            .fold(BurauMatrix::identity(3), |acc, g| acc.mul(&g));
        assert_eq!(burau_of_word(&b).unwrap(), dense);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        fn cofactor(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
            if rows.len() == 1 {
                return rows[0][0].clone();
            }
            (0..rows.len())
                .map(|j| {
                    let minor: Vec<Vec<LaurentPoly>> = rows[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                        .collect();
                    let term = &rows[0][j] * &cofactor(&minor);
                    if j % 2 == 0 { term } else { -term }
                })
                .sum()
        }
        let b = BraidWord::new(5, vec![1, 2, -3, 4, 4, -2, 1, 3, -4, 2]).unwrap();
        let m = burau_of_word(&b).unwrap();
        let exact = cofactor(m.rows());
        assert!(m.det_up_to_power().equal_up_to_units(&exact));
    }

    #[test]
    fn alexander_examples() {
        let trefoil = torus_braid(2, 3).unwrap();
        assert_eq!(alexander_from_braid(&trefoil).unwrap(), poly(&[(0, 1), (1, -1), (2, 1)]));
        let unknot = torus_braid(2, 1).unwrap();
        assert_eq!(alexander_from_braid(&unknot).unwrap(), LaurentPoly::one());
        assert_eq!(
            alexander_from_braid(&torus_braid(2, 2).unwrap()),
            Err(Error::NotAKnot { components: 2 })
        );
    }

    #[test]
    fn first_family_member() {
        let b = twisted_torus_braid(&TwistedTorusParams::new(9, 5, 7, -1).unwrap()).unwrap();
        let expected = (poly(&[(0, 1), (1, -1), (2, 1)])
            * poly(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]))
        .normalize_alexander()
        .unwrap();
        let alex = alexander_from_braid(&b).unwrap();
        assert_eq!(alex, expected);
        assert_eq!(alexander_span(&alex).unwrap(), 6);
        assert_eq!(knot_determinant(&b).unwrap(), BigInt::from(15));
    }

    #[test]
    fn determinants_and_spans() {
        assert_eq!(knot_determinant(&torus_braid(2, 3).unwrap()).unwrap(), BigInt::from(3));
        assert_eq!(knot_determinant(&BraidWord::identity(1).unwrap()).unwrap(), BigInt::from(1));
        assert_eq!(alexander_span(&poly(&[(0, 1), (1, -1), (2, 1)])).unwrap(), 2);
        assert_eq!(alexander_span(&LaurentPoly::one()).unwrap(), 0);
        assert_eq!(alexander_span(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }
}
