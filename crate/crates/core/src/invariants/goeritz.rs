//! Knot signature from the Goeritz matrix with the Gordon-Litherland
//! correction term. Works on any knot diagram, no braid structure needed.

use super::matrix::IntMatrix;
use crate::diagram::{Dart, Incidence, OrientedDiagram};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Two-colors the faces of the diagram; `true` is "white". Face 0 is black.
pub fn checkerboard_coloring(od: &OrientedDiagram) -> Result<Vec<bool>> {
    let d = od.base();
    let nf = d.faces().len();
    let mut color: Vec<Option<bool>> = vec![None; nf];
    let ef = d.edge_faces();
    if nf == 0 {
        return Ok(Vec::new());
    }
    // BFS per component of the face-adjacency graph
    for start in 0..nf {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let c = color[f].unwrap();
            for [l, r] in ef.values() {
                let (a, b) = (*l, *r);
                let other = if a == f {
                    b
                } else if b == f {
                    a
                } else {
                    continue;
                };
                match color[other] {
                    None => {
                        color[other] = Some(!c);
                        stack.push(other);
                    }
                    Some(x) if x == c => {
                        return Err(Error::consistency(
                            "diagram faces are not checkerboard colorable",
                        ));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}

/// Face index of the quadrant between slots `s` and `s+1` at a crossing.
fn quadrant_face(
    od: &OrientedDiagram,
    dart_face: &BTreeMap<Dart, usize>,
    crossing: usize,
    s: usize,
) -> usize {
    let d = od.base();
    let s1 = (s + 1) % 4;
    let e = d.crossings()[crossing].slots[s1];
    let dart = Dart {
        edge: e,
        head: Incidence {
            crossing,
            slot: s1,
        },
    };
    dart_face[&dart]
}

/// Signature of a knot from its diagram via the checkerboard form.
pub fn signature_from_diagram(od: &OrientedDiagram) -> Result<i64> {
    // Conventions fixed by calibration against the Seifert-matrix route on
    // braid closures (see calibrate_goeritz_convention below).
    signature_with_convention(od, 1, false)
}

fn signature_with_convention(od: &OrientedDiagram, eta_mult: i64, type2_white: bool) -> Result<i64> {
    if !od.is_knot() {
        return Err(Error::input("signature-from-diagram needs a knot"));
    }
    let d = od.base();
    let n = d.crossing_count();
    if n == 0 {
        return Ok(0);
    }
    let color = checkerboard_coloring(od)?;
    let faces = d.faces();
    let mut dart_face: BTreeMap<Dart, usize> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for &dt in &f.darts {
            dart_face.insert(dt, fi);
        }
    }
    let whites: Vec<usize> = (0..faces.len()).filter(|&f| color[f]).collect();
    let widx: BTreeMap<usize, usize> = whites.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let w = whites.len();
    if w == 0 {
        return Err(Error::consistency("no white faces in checkerboard coloring"));
    }
    let mut g = IntMatrix::zero(w);
    let mut mu = 0i64;
    for ci in 0..n {
        // quadrants (s, s+1); opposite quadrants share a color
        let q: Vec<usize> = (0..4)
            .map(|s| quadrant_face(od, &dart_face, ci, s))
            .collect();
        // white pair: quadrants (0,1)&(2,3) or (1,2)&(3,0)
        let pair_a_white = color[q[0]];
        if pair_a_white == color[q[1]] || color[q[0]] != color[q[2]] {
            return Err(Error::consistency("quadrant colors do not alternate"));
        }
        let (wq1, wq2) = if pair_a_white { (q[0], q[2]) } else { (q[1], q[3]) };
        // eta: +1 when the white quadrants follow the over-strand slots
        // counterclockwise (pair (1,2)&(3,0)), -1 otherwise
        let eta: i64 = eta_mult * if pair_a_white { -1 } else { 1 };
        let (u, v) = (widx[&wq1], widx[&wq2]);
        if u != v {
            let val = g.get(u, v) - BigInt::from(eta);
            g.set(u, v, val.clone());
            g.set(v, u, val);
        }
        // type II: the quadrant spanned by the two outgoing strands is white
        let under_out = if od.is_tail(
            d.crossings()[ci].slots[0],
            Incidence {
                crossing: ci,
                slot: 0,
            },
        ) {
            0
        } else {
            2
        };
        let over_out = if od.is_tail(
            d.crossings()[ci].slots[1],
            Incidence {
                crossing: ci,
                slot: 1,
            },
        ) {
            1
        } else {
            3
        };
        let out_quadrant = if (under_out + 1) % 4 == over_out {
            under_out
        } else {
            over_out
        };
        let out_white = color[q[out_quadrant]];
        if out_white == type2_white {
            mu += eta;
        }
    }
    // diagonal: negative row sums
    for i in 0..w {
        let mut s = BigInt::zero();
        for j in 0..w {
            if j != i {
                s += g.get(i, j);
            }
        }
        g.set(i, i, -s);
    }
    // delete the last white region
    let mut minor = IntMatrix::zero(w - 1);
    for i in 0..w - 1 {
        for j in 0..w - 1 {
            minor.set(i, j, g.get(i, j).clone());
        }
    }
    Ok(minor.signature() - mu)
}

/// |det| of the Goeritz minor, an independent route to the knot determinant.
pub fn determinant_from_diagram(od: &OrientedDiagram) -> Result<BigInt> {
    if !od.is_knot() {
        return Err(Error::input("determinant-from-diagram needs a knot"));
    }
    let d = od.base();
    if d.crossing_count() == 0 {
        return Ok(BigInt::from(1));
    }
    let color = checkerboard_coloring(od)?;
    let faces = d.faces();
    let mut dart_face: BTreeMap<Dart, usize> = BTreeMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for &dt in &f.darts {
            dart_face.insert(dt, fi);
        }
    }
    let whites: Vec<usize> = (0..faces.len()).filter(|&f| color[f]).collect();
    let widx: BTreeMap<usize, usize> = whites.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let w = whites.len();
    let mut g = IntMatrix::zero(w);
    for ci in 0..d.crossing_count() {
        let q: Vec<usize> = (0..4)
            .map(|s| quadrant_face(od, &dart_face, ci, s))
            .collect();
        let pair_a_white = color[q[0]];
        let (wq1, wq2) = if pair_a_white { (q[0], q[2]) } else { (q[1], q[3]) };
        let eta: i64 = if pair_a_white { -1 } else { 1 };
        let (u, v) = (widx[&wq1], widx[&wq2]);
        if u != v {
            let val = g.get(u, v) - BigInt::from(eta);
            g.set(u, v, val.clone());
            g.set(v, u, val);
        }
    }
    for i in 0..w {
        let mut s = BigInt::zero();
        for j in 0..w {
            if j != i {
                s += g.get(i, j);
            }
        }
        g.set(i, i, -s);
    }
    let mut minor = IntMatrix::zero(w - 1);
    for i in 0..w - 1 {
        for j in 0..w - 1 {
            minor.set(i, j, g.get(i, j).clone());
        }
    }
    let det = minor.det();
    Ok(if det < BigInt::zero() { -det } else { det })
}
