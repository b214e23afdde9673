//! Jones polynomial from the writhe-corrected Kauffman bracket.

use super::bracket::{kauffman_bracket_with, BracketLimits};
use crate::diagram::OrientedDiagram;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

/// V(t) in powers of sqrt(t): V = (-A^3)^(-w) * bracket, with t = A^-4.
pub fn jones(od: &OrientedDiagram) -> Result<LaurentPoly> {
    jones_with(od, BracketLimits::default())
}

pub fn jones_with(od: &OrientedDiagram, limits: BracketLimits) -> Result<LaurentPoly> {
    let b = kauffman_bracket_with(od.base(), limits)?;
    let w = od.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let corrected = b
        .mul(&LaurentPoly::monomial(Var::A, -3 * w, sign))
        .clone();
    // A^a = t^(-a/4) = sqrt_t^(-a/2)
    let v = corrected
        .substitute_exponents(Var::SqrtT, -1, 2)
        .ok_or_else(|| {
            Error::consistency("writhe-corrected bracket has odd A-exponents")
        })?;
    if od.is_knot() {
        // knots land in integer powers of t
        if v.terms().any(|(e, _)| e % 2 != 0) {
            return Err(Error::consistency(
                "Jones polynomial of a knot has half-integer exponents",
            ));
        }
    }
    Ok(v)
}

/// Reads a sqrt_t polynomial with only even exponents as a polynomial in t.
pub fn sqrt_t_to_t(v: &LaurentPoly) -> Option<LaurentPoly> {
    v.substitute_exponents(Var::T, 1, 2)
}

/// Writes a polynomial in t in the sqrt_t variable.
pub fn t_to_sqrt_t(v: &LaurentPoly) -> LaurentPoly {
    v.substitute_exponents(Var::SqrtT, 2, 1).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;
    use crate::diagram::{closure, orient, PlanarDiagram};

    #[test]
    fn unknot_jones_is_one() {
        let od = orient(&PlanarDiagram::unknot());
        assert_eq!(jones(&od).unwrap(), LaurentPoly::one(Var::SqrtT));
    }

    #[test]
    fn trefoil_jones() {
        // V(T(3,2)) = -t^4 + t^3 + t, here in sqrt_t exponents
        let od = orient(&closure(&torus_braid(3, 2).unwrap()));
        let v = jones(&od).unwrap();
        let expect = LaurentPoly::from_terms(Var::SqrtT, &[(2, 1), (6, 1), (8, -1)]);
        assert_eq!(v, expect);
        assert_eq!(
            sqrt_t_to_t(&v).unwrap(),
            LaurentPoly::from_terms(Var::T, &[(1, 1), (3, 1), (4, -1)])
        );
    }

    #[test]
    fn mirror_inverts_jones() {
        for (p, q) in [(3u64, 2u64), (5, 2), (4, 3)] {
            let d = closure(&torus_braid(p, q).unwrap());
            let v = jones(&orient(&d)).unwrap();
            let vm = jones(&orient(&d.mirror())).unwrap();
            assert_eq!(vm, v.reciprocal(), "T({p},{q})");
        }
    }
}
