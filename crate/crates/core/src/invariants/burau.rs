//! Alexander polynomial via the reduced Burau representation, an
//! independent oracle for the Seifert and diagram routes.

use super::alexander::normalize_alexander;
use super::matrix::det_poly;
use crate::braid::{braid_permutation, BraidWord};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

type PolyMat = Vec<Vec<LaurentPoly>>;

fn identity(n: usize) -> PolyMat {
    let mut m = vec![vec![LaurentPoly::zero(Var::T); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = LaurentPoly::one(Var::T);
    }
    m
}

fn mat_mul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(Var::T); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

/// Reduced Burau matrix of a single generator on n strands (dimension n-1).
fn generator_matrix(n: usize, letter: i32) -> PolyMat {
    let dim = n - 1;
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let mut m = identity(dim);
    let t = |e: i64, c: i64| LaurentPoly::from_terms(Var::T, &[(e, c)]);
    if letter > 0 {
        // e_{i-1} gains t*e_i; e_i -> -t*e_i; e_{i+1} gains e_i
        if i >= 2 {
            m[i - 2][i - 1] = t(1, 1);
        }
        m[i - 1][i - 1] = t(1, -1);
        if i < dim {
            m[i][i - 1] = t(0, 1);
        }
    } else {
        if i >= 2 {
            m[i - 2][i - 1] = t(0, 1);
        }
        m[i - 1][i - 1] = t(-1, -1);
        if i < dim {
            m[i][i - 1] = t(-1, 1);
        }
    }
    m
}

/// Normalized Alexander polynomial of the closure of `b`, which must be a
/// knot.
pub fn burau_alexander(b: &BraidWord) -> Result<LaurentPoly> {
    if braid_permutation(b).cycle_count() != 1 {
        return Err(Error::input(
            "braid closure is not a knot; Burau route needs one component",
        ));
    }
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentPoly::one(Var::T));
    }
    let dim = n - 1;
    let mut acc = identity(dim);
    for &l in b.letters() {
        acc = mat_mul(&acc, &generator_matrix(n, l));
    }
    // det(B - I), then divide by 1 + t + ... + t^{n-1}
    let mut diff = acc;
    for (i, row) in diff.iter_mut().enumerate() {
        row[i] = row[i].sub(&LaurentPoly::one(Var::T));
    }
    let raw = det_poly(&diff, Var::T);
    let cyclotomic =
        LaurentPoly::from_terms(Var::T, &(0..n as i64).map(|k| (k, 1)).collect::<Vec<_>>());
    let quotient = raw.div_exact(&cyclotomic).ok_or_else(|| {
        Error::consistency("Burau determinant not divisible by 1 + t + ... + t^{n-1}")
    })?;
    normalize_alexander(&quotient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    #[test]
    fn trefoil() {
        let b = torus_braid(3, 2).unwrap();
        assert_eq!(
            burau_alexander(&b).unwrap(),
            LaurentPoly::from_terms(Var::T, &[(-1, 1), (0, -1), (1, 1)])
        );
    }

    #[test]
    fn trivial_braid() {
        let b = BraidWord::identity(1);
        assert_eq!(burau_alexander(&b).unwrap(), LaurentPoly::one(Var::T));
    }

    #[test]
    fn figure_eight() {
        let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        assert_eq!(
            burau_alexander(&b).unwrap(),
            LaurentPoly::from_terms(Var::T, &[(-1, -1), (0, 3), (1, -1)])
        );
    }

    #[test]
    fn rejects_links() {
        let b = BraidWord::new(3, vec![1]).unwrap();
        assert!(burau_alexander(&b).is_err());
    }

    #[test]
    fn matches_diagram_route_on_torus_braids() {
        use crate::diagram::{closure, orient};
        use crate::invariants::alexander::alexander_from_diagram;
        for (p, q) in [(3u64, 2u64), (5, 2), (4, 3), (9, 4)] {
            let b = torus_braid(p, q).unwrap();
            let from_burau = burau_alexander(&b).unwrap();
            let from_diagram = alexander_from_diagram(&orient(&closure(&b))).unwrap();
            assert_eq!(from_burau, from_diagram, "T({p},{q})");
        }
    }
}
