//! Alexander polynomial: normalization, the Seifert-matrix route, and the
//! crossing-relation route that works on any knot diagram.

use super::matrix::{det_poly, IntMatrix};
use crate::diagram::OrientedDiagram;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::BTreeMap;

/// Normalizes a nonzero Alexander determinant to Delta(t) = Delta(1/t),
/// Delta(1) = +1.
pub fn normalize_alexander(raw: &LaurentPoly) -> Result<LaurentPoly> {
    if raw.is_zero() {
        return Err(Error::consistency("Alexander determinant vanished"));
    }
    let lo = raw.min_exp().unwrap();
    let hi = raw.max_exp().unwrap();
    if (lo + hi) % 2 != 0 {
        return Err(Error::consistency(
            "Alexander determinant has odd exponent span",
        ));
    }
    let centered = raw.shift(-(lo + hi) / 2);
    if !centered.is_palindromic() {
        return Err(Error::consistency(
            "centered Alexander polynomial is not palindromic",
        ));
    }
    let at_one = centered.eval_int(1);
    if !at_one.magnitude().is_one() {
        return Err(Error::consistency(format!(
            "Alexander polynomial evaluates to {at_one} at t = 1, expected a unit"
        )));
    }
    Ok(if at_one.is_negative() {
        centered.neg()
    } else {
        centered
    })
}

/// Delta(t) = det(V - t V^T), normalized.
pub fn alexander_from_seifert(v: &IntMatrix) -> Result<LaurentPoly> {
    let raw = det_poly(&v.alexander_matrix(), Var::T);
    normalize_alexander(&raw)
}

/// Delta(t) from the crossing relations of an arbitrary knot diagram:
/// each crossing relates its two under-arcs and its over-arc; any minor of
/// the relation matrix gives the polynomial up to units.
pub fn alexander_from_diagram(od: &OrientedDiagram) -> Result<LaurentPoly> {
    if !od.is_knot() {
        return Err(Error::input("Alexander-from-diagram needs a knot"));
    }
    let d = od.base();
    let n = d.crossing_count();
    if n == 0 {
        return Ok(LaurentPoly::one(Var::T));
    }
    // group edges into over-arcs: slots 1 and 3 continue the same arc
    let edges = d.edge_ids();
    let idx: BTreeMap<u32, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf: Vec<usize> = (0..edges.len()).collect();
    fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for c in d.crossings() {
        let a = find(&mut uf, idx[&c.slots[1]]);
        let b = find(&mut uf, idx[&c.slots[3]]);
        uf[a] = b;
    }
    let mut arc_of: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..edges.len() {
        let r = find(&mut uf, i);
        let next = arc_of.len();
        arc_of.entry(r).or_insert(next);
    }
    let arcs = arc_of.len();
    if arcs != n {
        return Err(Error::consistency(format!(
            "knot diagram with {n} crossings has {arcs} over-arcs"
        )));
    }
    let arc = |e: u32, uf: &mut Vec<usize>| -> usize { arc_of[&find(uf, idx[&e])] };

    // relation rows: positive: t*in + (1-t)*over - out; negative with t^-1
    let mut rows = vec![vec![LaurentPoly::zero(Var::T); arcs]; n];
    for (ci, c) in d.crossings().iter().enumerate() {
        // recorded under-in is slot 0 unless the orientation walk reversed it
        let here0 = crate::diagram::Incidence { crossing: ci, slot: 0 };
        let under_in_slot = if od.is_tail(c.slots[0], here0) { 2 } else { 0 };
        let a_in = arc(c.slots[under_in_slot], &mut uf);
        let a_out = arc(c.slots[(under_in_slot + 2) % 4], &mut uf);
        let a_over = arc(c.slots[1], &mut uf);
        let e = if od.sign(ci) > 0 { 1 } else { -1 };
        let te = LaurentPoly::monomial(Var::T, e, 1);
        rows[ci][a_in] = rows[ci][a_in].add(&te);
        let one = LaurentPoly::one(Var::T);
        rows[ci][a_over] = rows[ci][a_over].add(&one.sub(&te));
        rows[ci][a_out] = rows[ci][a_out].sub(&one);
    }
    // delete last row and column, take the determinant
    let minor: Vec<Vec<LaurentPoly>> = rows[..n - 1]
        .iter()
        .map(|r| r[..arcs - 1].to_vec())
        .collect();
    let raw = det_poly(&minor, Var::T);
    normalize_alexander(&raw)
}

/// |Delta(-1)|, the knot determinant.
pub fn determinant_from_alexander(delta: &LaurentPoly) -> BigInt {
    delta.eval_int(-1).abs()
}
