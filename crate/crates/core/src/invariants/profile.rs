//! The invariant profile: the pruning and certification record combining
//! determinant, signature, Arf, Alexander, Jones, and the Fox-Milnor flag.

use super::alexander::{alexander_from_diagram, alexander_from_seifert, determinant_from_alexander};
use super::bracket::BracketLimits;
use super::factor::fox_milnor_test;
use super::goeritz::{determinant_from_diagram, signature_from_diagram};
use super::jones::jones_with;
use super::seifert::{extract_braid, seifert_matrix_from_braid};
use crate::diagram::OrientedDiagram;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantProfile {
    /// |Delta(-1)|, always odd for knots.
    pub determinant: BigInt,
    /// Signature of the symmetrized Seifert form, always even for knots.
    pub signature: i64,
    /// Arf invariant: 0 iff determinant = +-1 (mod 8).
    pub arf: u8,
    /// Normalized Alexander polynomial in t.
    pub alexander: LaurentPoly,
    /// Jones polynomial in sqrt_t exponents.
    pub jones: LaurentPoly,
    /// Fox-Milnor slice condition on the Alexander polynomial.
    pub fox_milnor: bool,
    /// Crossing count of the source diagram (not an invariant; bookkeeping).
    pub crossings: usize,
}

impl InvariantProfile {
    /// Equality on the knot-invariant fields, ignoring the crossing count.
    pub fn matches(&self, other: &InvariantProfile) -> bool {
        self.determinant == other.determinant
            && self.signature == other.signature
            && self.arf == other.arf
            && self.alexander == other.alexander
            && self.jones == other.jones
            && self.fox_milnor == other.fox_milnor
    }

    /// Canonical text rendering, one field per line.
    pub fn render(&self) -> String {
        format!(
            "determinant: {}\nsignature: {}\narf: {}\nalexander: {}\njones: {}\nfox_milnor: {}\ncrossings: {}\n",
            self.determinant,
            self.signature,
            self.arf,
            self.alexander.render(),
            self.jones.render(),
            self.fox_milnor,
            self.crossings
        )
    }

    /// Parses the `render` format.
    pub fn parse(text: &str) -> Result<InvariantProfile> {
        let mut determinant = None;
        let mut signature = None;
        let mut arf = None;
        let mut alexander = None;
        let mut jones = None;
        let mut fox_milnor = None;
        let mut crossings = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, val) = line
                .split_once(':')
                .ok_or_else(|| Error::input(format!("bad profile line '{line}'")))?;
            let val = val.trim();
            match key.trim() {
                "determinant" => {
                    determinant = Some(val.parse::<BigInt>().map_err(|_| {
                        Error::input(format!("bad determinant '{val}'"))
                    })?)
                }
                "signature" => {
                    signature = Some(
                        val.parse::<i64>()
                            .map_err(|_| Error::input(format!("bad signature '{val}'")))?,
                    )
                }
                "arf" => {
                    arf = Some(
                        val.parse::<u8>()
                            .map_err(|_| Error::input(format!("bad arf '{val}'")))?,
                    )
                }
                "alexander" => {
                    alexander =
                        Some(LaurentPoly::parse(Var::T, val).map_err(Error::input)?)
                }
                "jones" => {
                    jones = Some(LaurentPoly::parse(Var::SqrtT, val).map_err(Error::input)?)
                }
                "fox_milnor" => {
                    fox_milnor = Some(
                        val.parse::<bool>()
                            .map_err(|_| Error::input(format!("bad fox_milnor '{val}'")))?,
                    )
                }
                "crossings" => {
                    crossings = Some(
                        val.parse::<usize>()
                            .map_err(|_| Error::input(format!("bad crossings '{val}'")))?,
                    )
                }
                other => return Err(Error::input(format!("unknown profile field '{other}'"))),
            }
        }
        Ok(InvariantProfile {
            determinant: determinant.ok_or_else(|| Error::input("missing determinant"))?,
            signature: signature.ok_or_else(|| Error::input("missing signature"))?,
            arf: arf.ok_or_else(|| Error::input("missing arf"))?,
            alexander: alexander.ok_or_else(|| Error::input("missing alexander"))?,
            jones: jones.ok_or_else(|| Error::input("missing jones"))?,
            fox_milnor: fox_milnor.ok_or_else(|| Error::input("missing fox_milnor"))?,
            crossings: crossings.ok_or_else(|| Error::input("missing crossings"))?,
        })
    }
}

fn arf_from_determinant(det: &BigInt) -> Result<u8> {
    let m = det.mod_floor(&BigInt::from(8));
    if m == BigInt::from(1) || m == BigInt::from(7) {
        Ok(0)
    } else if m == BigInt::from(3) || m == BigInt::from(5) {
        Ok(1)
    } else {
        Err(Error::consistency(format!(
            "knot determinant {det} is even"
        )))
    }
}

/// Determinant, signature, and Arf of a knot diagram.
///
/// Signature comes from the checkerboard form; when the diagram is a braid
/// closure the Seifert-matrix route is computed too and must agree.
pub fn symmetrized_invariants(od: &OrientedDiagram) -> Result<(BigInt, i64, u8)> {
    if !od.is_knot() {
        return Err(Error::input("symmetrized invariants need a knot"));
    }
    let delta = alexander_from_diagram(od)?;
    let det = determinant_from_alexander(&delta);
    let det_goeritz = determinant_from_diagram(od)?;
    if det != det_goeritz {
        return Err(Error::consistency(format!(
            "determinant mismatch: |Delta(-1)| = {det}, Goeritz route = {det_goeritz}"
        )));
    }
    let signature = signature_from_diagram(od)?;
    if let Ok(b) = extract_braid(od) {
        let v = seifert_matrix_from_braid(&b)?;
        let sig_seifert = v.add(&v.transpose()).signature();
        if sig_seifert != signature {
            return Err(Error::consistency(format!(
                "signature mismatch: checkerboard {signature}, Seifert {sig_seifert}"
            )));
        }
    }
    if signature % 2 != 0 {
        return Err(Error::consistency(format!(
            "knot signature {signature} is odd"
        )));
    }
    let arf = arf_from_determinant(&det)?;
    Ok((det, signature, arf))
}

/// Assembles the full invariant profile with internal cross-checks.
pub fn invariant_profile(od: &OrientedDiagram) -> Result<InvariantProfile> {
    invariant_profile_with(od, &BracketLimits::default())
}

pub fn invariant_profile_with(
    od: &OrientedDiagram,
    limits: &BracketLimits,
) -> Result<InvariantProfile> {
    if !od.is_knot() {
        return Err(Error::input("invariant profile needs a knot diagram"));
    }
    let alexander = alexander_from_diagram(od)?;
    if let Ok(b) = extract_braid(od) {
        let from_seifert = alexander_from_seifert(&seifert_matrix_from_braid(&b)?)?;
        if from_seifert != alexander {
            return Err(Error::consistency(
                "Alexander mismatch between diagram and Seifert routes",
            ));
        }
    }
    let (determinant, signature, arf) = symmetrized_invariants(od)?;
    let check = determinant_from_alexander(&alexander);
    if check != determinant {
        return Err(Error::consistency(format!(
            "determinant {determinant} does not equal |Delta(-1)| = {check}"
        )));
    }
    if alexander.eval_int(1) != BigInt::one() {
        return Err(Error::consistency("Alexander polynomial not normalized"));
    }
    let jones = jones_with(od, *limits)?;
    let fox_milnor = fox_milnor_test(&alexander)?;
    Ok(InvariantProfile {
        determinant,
        signature,
        arf,
        alexander,
        jones,
        fox_milnor,
        crossings: od.base().crossing_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;
    use crate::diagram::{closure, orient, PlanarDiagram};
    use crate::invariants::torus::torus_closed_forms;

    #[test]
    fn unknot_profile() {
        let p = invariant_profile(&orient(&PlanarDiagram::unknot())).unwrap();
        assert_eq!(p.determinant, BigInt::from(1));
        assert_eq!(p.signature, 0);
        assert_eq!(p.arf, 0);
        assert_eq!(p.alexander, LaurentPoly::one(Var::T));
        assert_eq!(p.jones, LaurentPoly::one(Var::SqrtT));
        assert!(p.fox_milnor);
        assert_eq!(p.crossings, 0);
    }

    #[test]
    fn trefoil_profile() {
        let p = invariant_profile(&orient(&closure(&torus_braid(3, 2).unwrap()))).unwrap();
        assert_eq!(p.determinant, BigInt::from(3));
        assert_eq!(p.signature, -2);
        assert_eq!(p.arf, 1);
        assert!(!p.fox_milnor);
        assert!(p.render().contains("signature: -2"));
    }

    #[test]
    fn t94_profile_matches_closed_forms() {
        let f = torus_closed_forms(9, 4).unwrap();
        let p = invariant_profile(&orient(&closure(&torus_braid(9, 4).unwrap()))).unwrap();
        assert_eq!(p.determinant, BigInt::from(9));
        assert_eq!(p.alexander, f.alexander);
        assert_eq!(p.jones, f.jones);
        assert_eq!(p.arf, 0); // 9 = 1 mod 8
        assert_eq!(p.crossings, 27);
    }

    #[test]
    fn render_parse_round_trip() {
        let p = invariant_profile(&orient(&closure(&torus_braid(5, 2).unwrap()))).unwrap();
        let text = p.render();
        let q = InvariantProfile::parse(&text).unwrap();
        assert_eq!(p, q);
        assert!(p.matches(&q));
    }

    #[test]
    fn symmetrized_examples() {
        let (d, s, a) =
            symmetrized_invariants(&orient(&closure(&torus_braid(3, 2).unwrap()))).unwrap();
        assert_eq!((d, s, a), (BigInt::from(3), -2, 1));
        let (d, s, a) = symmetrized_invariants(&orient(&PlanarDiagram::unknot())).unwrap();
        assert_eq!((d, s, a), (BigInt::from(1), 0, 0));
    }

    #[test]
    fn mirror_profile_behavior() {
        let d = closure(&torus_braid(5, 2).unwrap());
        let p = invariant_profile(&orient(&d)).unwrap();
        let m = invariant_profile(&orient(&d.mirror())).unwrap();
        assert_eq!(m.determinant, p.determinant);
        assert_eq!(m.signature, -p.signature);
        assert_eq!(m.arf, p.arf);
        assert_eq!(m.alexander, p.alexander);
        assert_eq!(m.jones, p.jones.reciprocal());
    }
}
