//! Square integer matrices with exact determinant and signature.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("matrix is not square"));
        }
        Ok(IntMatrix { n, rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        IntMatrix {
            n,
            rows: rows
                .iter()
                .map(|r| {
                    assert_eq!(r.len(), n);
                    r.iter().map(|&x| BigInt::from(x)).collect()
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.rows[j][i] = self.rows[i][j].clone();
            }
        }
        t
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.rows[i][j] = &self.rows[i][j] + &other.rows[i][j];
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in 0..i {
                if self.rows[i][j] != self.rows[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// Exact determinant (Bareiss fraction-free elimination).
    pub fn det(&self) -> BigInt {
        if self.n == 0 {
            return BigInt::one();
        }
        let mut m = self.rows.clone();
        let n = self.n;
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// Signature of a symmetric matrix by exact congruence reduction over
    /// the rationals. Zero eigenvalue directions contribute nothing.
    pub fn signature(&self) -> i64 {
        assert!(self.is_symmetric(), "signature needs a symmetric matrix");
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
            .collect();
        let mut live: Vec<usize> = (0..self.n).collect();
        let mut sig = 0i64;
        while !live.is_empty() {
            // prefer a nonzero diagonal pivot
            if let Some(pos) = live.iter().position(|&i| !m[i][i].is_zero()) {
                let i = live[pos];
                let d = m[i][i].clone();
                sig += if d.is_positive() { 1 } else { -1 };
                live.remove(pos);
                for &k in &live {
                    let f = &m[k][i] / &d;
                    for &l in &live {
                        let v = &m[k][l] - &f * &m[i][l];
                        m[k][l] = v;
                    }
                }
                continue;
            }
            // all-zero diagonal: find an off-diagonal pivot pair
            let mut pair = None;
            'outer: for (a, &i) in live.iter().enumerate() {
                for (b, &j) in live.iter().enumerate().skip(a + 1) {
                    if !m[i][j].is_zero() {
                        pair = Some((a, b, i, j));
                        break 'outer;
                    }
                }
            }
            let Some((a, b, i, j)) = pair else {
                break; // remaining block is zero
            };
            let av = m[i][j].clone();
            // hyperbolic pair: +1 and -1, net zero
            live.remove(b);
            live.remove(a);
            for (x, &k) in live.iter().enumerate() {
                for &l in live.iter().skip(x) {
                    let corr = (&m[k][i] * &m[l][j] + &m[k][j] * &m[l][i]) / &av;
                    let v = &m[k][l] - corr;
                    m[k][l] = v.clone();
                    m[l][k] = v;
                }
            }
        }
        sig
    }

    /// The Laurent-polynomial matrix V - t * V^T.
    pub fn alexander_matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.n;
        let mut out = vec![vec![LaurentPoly::zero(Var::T); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut p = LaurentPoly::zero(Var::T);
                p.add_term(0, self.rows[i][j].clone());
                p.add_term(1, -self.rows[j][i].clone());
                out[i][j] = p;
            }
        }
        out
    }
}

/// Fraction-free determinant of a Laurent-polynomial matrix.
pub fn det_poly(mat: &[Vec<LaurentPoly>], var: Var) -> LaurentPoly {
    let n = mat.len();
    if n == 0 {
        return LaurentPoly::one(var);
    }
    let mut m: Vec<Vec<LaurentPoly>> = mat.to_vec();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(var);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero(var);
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_basics() {
        assert_eq!(IntMatrix::zero(0).det(), BigInt::one());
        let m = IntMatrix::from_i64(&[&[-2, 1], &[1, -2]]);
        assert_eq!(m.det(), BigInt::from(3));
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(m.det(), BigInt::from(-1));
    }

    #[test]
    fn signature_examples() {
        let m = IntMatrix::from_i64(&[&[-2, 1], &[1, -2]]);
        assert_eq!(m.signature(), -2);
        let m = IntMatrix::from_i64(&[&[-2, 1], &[1, 2]]);
        assert_eq!(m.signature(), 0);
        // hyperbolic plane
        let m = IntMatrix::from_i64(&[&[0, 3], &[3, 0]]);
        assert_eq!(m.signature(), 0);
        // degenerate direction ignored
        let m = IntMatrix::from_i64(&[&[0, 0, 0], &[0, 5, 0], &[0, 0, -1]]);
        assert_eq!(m.signature(), 0);
        let m = IntMatrix::from_i64(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 7]]);
        assert_eq!(m.signature(), 2);
    }

    #[test]
    fn poly_determinant_matches_int_at_points() {
        let v = IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]);
        let am = v.alexander_matrix();
        let d = det_poly(&am, Var::T);
        // det(V - tV^T) for the trefoil Seifert matrix = t^2 - t + 1
        assert_eq!(d, LaurentPoly::from_terms(Var::T, &[(0, 1), (1, -1), (2, 1)]));
    }
}
