//! Reidemeister moves on planar diagrams: detection, application, and the
//! insertion directions used by tests and by band attachment.

use super::{Crossing, Dart, EdgeId, PlanarDiagram};
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Removes a set of crossings, reconnecting each strand straight through.
/// Strand segments that close up with no surviving crossing become loops.
pub(crate) fn remove_crossings(d: &PlanarDiagram, remove: &BTreeSet<usize>) -> PlanarDiagram {
    let edges = d.edge_ids();
    let idx: BTreeMap<EdgeId, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf: Vec<usize> = (0..edges.len()).collect();
    fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for (ci, c) in d.crossings().iter().enumerate() {
        if remove.contains(&ci) {
            for (a, b) in [(0, 2), (1, 3)] {
                let x = find(&mut uf, idx[&c.slots[a]]);
                let y = find(&mut uf, idx[&c.slots[b]]);
                uf[x] = y;
            }
        }
    }
    // representative id = smallest edge id in class
    let mut rep: BTreeMap<usize, EdgeId> = BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut uf, i);
        let cur = rep.entry(r).or_insert(e);
        if e < *cur {
            *cur = e;
        }
    }
    let mut survives: BTreeSet<usize> = BTreeSet::new();
    let mut crossings = Vec::new();
    for (ci, c) in d.crossings().iter().enumerate() {
        if remove.contains(&ci) {
            continue;
        }
        let mut slots = [0; 4];
        for (s, slot) in slots.iter_mut().enumerate() {
            let r = find(&mut uf, idx[&c.slots[s]]);
            *slot = rep[&r];
            survives.insert(r);
        }
        crossings.push(Crossing { slots });
    }
    // classes with no surviving incidence: either old loops or newly closed
    // strands through removed crossings
    let mut loops = Vec::new();
    let mut seen_class: BTreeSet<usize> = BTreeSet::new();
    for &l in d.loops() {
        let r = find(&mut uf, idx[&l]);
        if seen_class.insert(r) && !survives.contains(&r) {
            loops.push(rep[&r]);
        }
    }
    for (i, _) in edges.iter().enumerate() {
        let r = find(&mut uf, i);
        if survives.contains(&r) || !seen_class.insert(r) {
            continue;
        }
        // dead class: only count it if some member sat at a removed crossing
        loops.push(rep[&r]);
    }
    PlanarDiagram {
        crossings,
        loops,
    }
}

/// Crossings whose two adjacent slots carry the same edge (kinks).
pub fn r1_sites(d: &PlanarDiagram) -> Vec<usize> {
    let mut out = Vec::new();
    for (ci, c) in d.crossings().iter().enumerate() {
        if (0..4).any(|s| c.slots[s] == c.slots[(s + 1) % 4]) {
            out.push(ci);
        }
    }
    out
}

/// Removes one kink crossing.
pub fn apply_r1(d: &PlanarDiagram, site: usize) -> Result<PlanarDiagram> {
    if !r1_sites(d).contains(&site) {
        return Err(Error::input(format!("crossing {site} is not a kink")));
    }
    let out = remove_crossings(d, &BTreeSet::from([site]));
    out.validate()?;
    Ok(out)
}

/// Bigon faces where one strand stays over: pairs of removable crossings.
/// Returned as (crossing, crossing) with the smaller index first.
pub fn r2_sites(d: &PlanarDiagram) -> Vec<(usize, usize)> {
    let mut out = BTreeSet::new();
    for f in d.faces() {
        if f.darts.len() != 2 {
            continue;
        }
        let (d1, d2) = (f.darts[0], f.darts[1]);
        let (c1, c2) = (d1.head.crossing, d2.head.crossing);
        if c1 == c2 || d1.edge == d2.edge {
            continue;
        }
        // the bigon edges at each crossing: one over (odd slot), one under.
        // removable iff each edge keeps its role at both ends.
        let e1 = d1.edge;
        let cr1 = &d.crossings()[c1];
        let cr2 = &d.crossings()[c2];
        let parity = |cr: &Crossing, e: EdgeId, other: EdgeId| -> Option<usize> {
            // slot parity of e at this crossing, restricted to bigon slots
            for s in 0..4 {
                if cr.slots[s] == e && cr.slots[(s + 1) % 4] == other
                    || cr.slots[s] == e && cr.slots[(s + 3) % 4] == other
                {
                    return Some(s % 2);
                }
            }
            None
        };
        let e2 = d2.edge;
        let (Some(p1), Some(p2)) = (parity(cr1, e1, e2), parity(cr2, e1, e2)) else {
            continue;
        };
        if p1 == p2 {
            out.insert((c1.min(c2), c1.max(c2)));
        }
    }
    out.into_iter().collect()
}

/// Removes a bigon pair.
pub fn apply_r2(d: &PlanarDiagram, site: (usize, usize)) -> Result<PlanarDiagram> {
    if !r2_sites(d).contains(&site) {
        return Err(Error::input(format!(
            "crossings {site:?} do not bound a removable bigon"
        )));
    }
    let out = remove_crossings(d, &BTreeSet::from([site.0, site.1]));
    out.validate()?;
    Ok(out)
}

/// A triangle face admitting a slide move, described by its face darts in
/// walk order starting with the dart of the strand that slides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct R3Site {
    /// Dart of the moved (all-over or all-under) edge.
    pub moved: Dart,
    /// The two following darts of the triangle walk.
    pub next: [Dart; 2],
}

/// Triangle faces where one edge is over (or under) at both its crossings
/// and the local edges are pairwise distinct.
pub fn r3_sites(d: &PlanarDiagram) -> Vec<R3Site> {
    let mut out = Vec::new();
    for f in d.faces() {
        if f.darts.len() != 3 {
            continue;
        }
        let cs: BTreeSet<usize> = f.darts.iter().map(|x| x.head.crossing).collect();
        let es: BTreeSet<EdgeId> = f.darts.iter().map(|x| x.edge).collect();
        if cs.len() != 3 || es.len() != 3 {
            continue;
        }
        for rot in 0..3 {
            let moved = f.darts[rot];
            let n1 = f.darts[(rot + 1) % 3];
            let n2 = f.darts[(rot + 2) % 3];
            // moved edge's slots at both its crossings share parity
            let e = moved.edge;
            let par = |c: usize| -> usize {
                let cr = &d.crossings()[c];
                (0..4).find(|&s| cr.slots[s] == e).unwrap() % 2
            };
            // the moved edge runs between the head of `moved` and the head
            // of n2 (its tail along the walk)
            let (ca, cb) = (moved.head.crossing, n2.head.crossing);
            // careful: tail of `moved` is the crossing the walk came from,
            // which is the head of n2's successor... the walk is cyclic:
            // moved leaves from the head of n2? No: walk order moved, n1,
            // n2: moved arrives at its head; the dart before moved is n2, so
            // moved departs from n2's head.
            let _ = cb;
            let cb = n2.head.crossing;
            if par(ca) != par(cb) {
                continue;
            }
            // all nine local edges must be distinct for the simple rebuild
            let mut local: BTreeSet<EdgeId> = es.clone();
            let mut ok = true;
            for dart in [moved, n1, n2] {
                let cr = &d.crossings()[dart.head.crossing];
                let s = dart.head.slot;
                for extra in [(s + 1) % 4, (s + 2) % 4] {
                    if !local.insert(cr.slots[extra]) {
                        ok = false;
                    }
                }
            }
            if ok {
                out.push(R3Site {
                    moved,
                    next: [n1, n2],
                });
            }
        }
    }
    out.sort();
    out
}

/// Slides the marked edge across the opposite crossing.
pub fn apply_r3(d: &PlanarDiagram, site: R3Site) -> Result<PlanarDiagram> {
    if !r3_sites(d).contains(&site) {
        return Err(Error::input("not a valid slide-move site"));
    }
    // Labels per the triangle walk: moved edge t from cB to cA, then
    // v from cA to cC, then u from cC to cB.
    let t_dart = site.moved;
    let v_dart = site.next[0];
    let u_dart = site.next[1];
    let (ca, cb, cc) = (
        t_dart.head.crossing,
        u_dart.head.crossing,
        v_dart.head.crossing,
    );
    let cr = |c: usize| &d.crossings()[c];
    let slot_at = |c: usize, base: usize, off: usize| cr(c).slots[(base + off) % 4];
    // outer edges: at cA ccw [t, v_a, t_a, v]; at cB ccw [u, t_b, u_b, t];
    // at cC ccw [v, u_c, v_c, u]
    let s1 = t_dart.head.slot; // t at cA
    let v_a = slot_at(ca, s1, 1);
    let t_a = slot_at(ca, s1, 2);
    let s3 = u_dart.head.slot; // u at cB
    let t_b = slot_at(cb, s3, 1);
    let u_b = slot_at(cb, s3, 2);
    let s2 = v_dart.head.slot; // v at cC
    let u_c = slot_at(cc, s2, 1);
    let v_c = slot_at(cc, s2, 2);
    let t_e = t_dart.edge;
    let u_e = u_dart.edge;
    let v_e = v_dart.edge;
    // whether the moved strand passes over
    let alpha_over = {
        let s = (0..4).find(|&s| cr(ca).slots[s] == t_e).unwrap();
        s % 2 == 1
    };
    // under/over of beta (the u strand) at cC, before rebuilding
    let beta_under_at_cc = {
        let s = (0..4).find(|&s| {
            cr(cc).slots[s] == u_e && (s == (s2 + 3) % 4)
        });
        // u departs cC at slot s2 - 1
        let s = s.unwrap_or((s2 + 3) % 4);
        s % 2 == 0
    };
    let _ = beta_under_at_cc;

    // step 1: remove cA and cB, merging {t_a, t, t_b}, {v_a, v}, {u, u_b}
    let removed = remove_crossings(d, &BTreeSet::from([ca, cb]));
    // find merged ids
    let merged_of = |cands: &[EdgeId]| -> EdgeId { *cands.iter().min().unwrap() };
    let e_alpha = merged_of(&[t_a, t_e, t_b]);
    let e_beta = merged_of(&[u_e, u_b]);
    let e_gamma = merged_of(&[v_e, v_a]);
    let _ = (e_beta, e_gamma);
    // locate the surviving cC: it is the crossing holding both u_c and v_c
    // in the expected rotation
    let mut crossings = removed.crossings().to_vec();
    let cc_new = crossings
        .iter()
        .position(|c| {
            (0..4).any(|s| c.slots[s] == u_c && c.slots[(s + 1) % 4] == v_c)
        })
        .ok_or_else(|| Error::consistency("lost the pivot crossing during slide"))?;
    // rotation of cC now: ccw [.., u_c, v_c, ..]; slot of u_c:
    let s_uc = (0..4)
        .find(|&s| crossings[cc_new].slots[s] == u_c && crossings[cc_new].slots[(s + 1) % 4] == v_c)
        .unwrap();
    let s_vc = (s_uc + 1) % 4;
    // step 2: insert the two new crossings on u_c and v_c across e_alpha.
    // fresh ids
    let base = removed.fresh_edge_id();
    let t_mid = base; // alpha between the two new crossings
    let u_mid = base + 1; // beta between cA2 and cC
    let v_mid = base + 2; // gamma between cB2 and cC
    let e_alpha2 = base + 3; // alpha beyond cB2
    // split e_alpha: the far incidence on the t_b side becomes e_alpha2.
    // t_b's far incidence: the incidence of t_b not at cB in the original;
    // after merging it carries id e_alpha. The two incidences of e_alpha in
    // `crossings` are the far ends of t_a and t_b.
    // Find the incidence that belonged to t_b:
    let t_b_far = {
        let inc = d.edge_incidences();
        let ends = &inc[&t_b];
        let far = ends
            .iter()
            .copied()
            .find(|i| i.crossing != cb)
            .ok_or_else(|| Error::input("slide needs the outer edges to reach other crossings"))?;
        far
    };
    // map t_b_far through the removal (crossing indices shift)
    let shift = |old: usize| -> usize {
        old - [ca, cb].iter().filter(|&&r| r < old).count()
    };
    {
        let c = shift(t_b_far.crossing);
        if crossings[c].slots[t_b_far.slot] != e_alpha {
            return Err(Error::consistency("slide bookkeeping lost the moved strand"));
        }
        crossings[c].slots[t_b_far.slot] = e_alpha2;
    }
    // split u_c and v_c: their cC-side incidences become the mid segments
    crossings[cc_new].slots[s_uc] = u_mid;
    crossings[cc_new].slots[s_vc] = v_mid;
    // new crossing cA2: ccw [t_mid, u_mid, e_alpha, u_c]
    let ca2 = if alpha_over {
        // beta under: start at a beta slot
        Crossing {
            slots: [u_mid, e_alpha, u_c, t_mid],
        }
    } else {
        Crossing {
            slots: [e_alpha, u_c, t_mid, u_mid],
        }
    };
    // new crossing cB2: ccw [e_alpha2, v_mid, t_mid, v_c]
    let cb2 = if alpha_over {
        Crossing {
            slots: [v_mid, t_mid, v_c, e_alpha2],
        }
    } else {
        Crossing {
            slots: [t_mid, v_c, e_alpha2, v_mid],
        }
    };
    crossings.push(ca2);
    crossings.push(cb2);
    let out = PlanarDiagram {
        crossings,
        loops: removed.loops().to_vec(),
    };
    out.validate()
        .map_err(|e| Error::consistency(format!("slide produced an invalid diagram: {e}")))?;
    Ok(out)
}

/// Adds a kink on edge `e`. `variant` 0 and 1 give the two writhe signs.
pub fn insert_r1(d: &PlanarDiagram, e: EdgeId, variant: u8) -> Result<PlanarDiagram> {
    let inc = d.edge_incidences();
    let ends = inc
        .get(&e)
        .ok_or_else(|| Error::input(format!("no edge {e}")))?;
    if ends.is_empty() {
        // kink on a free loop: the loop becomes a one-crossing unknot
        let g = d.fresh_edge_id();
        let mut loops: Vec<EdgeId> = d.loops().to_vec();
        loops.retain(|&l| l != e);
        let slots = if variant == 0 {
            [e, g, g, e]
        } else {
            [e, e, g, g]
        };
        let out = PlanarDiagram {
            crossings: {
                let mut c = d.crossings().to_vec();
                c.push(Crossing { slots });
                c
            },
            loops,
        };
        out.validate()?;
        return Ok(out);
    }
    let b = d.fresh_edge_id();
    let g = b + 1;
    let mut crossings = d.crossings().to_vec();
    // the incidence listed second becomes the far end of the new edge b
    let far = ends[1];
    crossings[far.crossing].slots[far.slot] = b;
    let slots = if variant == 0 {
        [e, g, g, b]
    } else {
        [e, b, g, g]
    };
    crossings.push(Crossing { slots });
    let out = PlanarDiagram {
        crossings,
        loops: d.loops().to_vec(),
    };
    out.validate()?;
    Ok(out)
}

/// Pushes edge `de` across edge `df` (two new crossings). The darts must lie
/// on a common face; `e_over` selects which strand goes over at both.
pub fn insert_r2(d: &PlanarDiagram, de: Dart, df: Dart, e_over: bool) -> Result<PlanarDiagram> {
    if de.edge == df.edge {
        return Err(Error::input("cannot push an edge across itself"));
    }
    // both darts must belong to the same face
    let faces = d.faces();
    let face_of = |x: Dart| faces.iter().position(|f| f.darts.contains(&x));
    let (Some(fe), Some(ff)) = (face_of(de), face_of(df)) else {
        return Err(Error::input("dart not found in any face"));
    };
    if fe != ff {
        return Err(Error::input("edges do not share the given face"));
    }
    let e = de.edge;
    let f = df.edge;
    let base = d.fresh_edge_id();
    let (e2, f2, m, g) = (base, base + 1, base + 2, base + 3);
    let mut crossings = d.crossings().to_vec();
    // move the head incidences to the new tail edges
    crossings[de.head.crossing].slots[de.head.slot] = e2;
    crossings[df.head.crossing].slots[df.head.slot] = f2;
    // Walking the common face, both darts circle the face interior the same
    // way, so the pushed strand must return on the tail side of `f`: along
    // f the order is tail, return crossing c2, entry crossing c1, head.
    let (c1, c2) = if e_over {
        (
            Crossing {
                slots: [g, m, f2, e],
            },
            Crossing {
                slots: [f, m, g, e2],
            },
        )
    } else {
        (
            Crossing {
                slots: [m, f2, e, g],
            },
            Crossing {
                slots: [m, g, e2, f],
            },
        )
    };
    crossings.push(c1);
    crossings.push(c2);
    let out = PlanarDiagram {
        crossings,
        loops: d.loops().to_vec(),
    };
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, BraidWord};
    use crate::diagram::{closure, orient};
    use crate::invariants::kauffman_bracket;
    use crate::laurent::{LaurentPoly, Var};

    #[test]
    fn r1_on_stabilized_braid() {
        // trefoil with one kink: closure of 1 1 1 2 on 3 strands
        let d = closure(&BraidWord::new(3, vec![1, 1, 1, 2]).unwrap());
        let sites = r1_sites(&d);
        assert_eq!(sites.len(), 1);
        let out = apply_r1(&d, sites[0]).unwrap();
        assert_eq!(out.crossing_count(), 3);
        assert_eq!(out.component_count(), 1);
    }

    #[test]
    fn r2_on_cancelling_pair() {
        let d = closure(&BraidWord::new(2, vec![1, -1]).unwrap());
        let sites = r2_sites(&d);
        assert!(!sites.is_empty());
        let out = apply_r2(&d, sites[0]).unwrap();
        assert_eq!(out.crossing_count(), 0);
        assert_eq!(out.component_count(), 2);
    }

    #[test]
    fn no_r2_on_clasp() {
        // sigma_1^2 closure: bigon faces exist but the strands alternate
        let d = closure(&BraidWord::new(2, vec![1, 1]).unwrap());
        assert!(r2_sites(&d).is_empty());
    }

    #[test]
    fn r1_insert_multiplies_bracket() {
        let d = closure(&torus_braid(3, 2).unwrap());
        let b0 = kauffman_bracket(&d).unwrap();
        let e = d.edge_ids()[0];
        let mut factors = Vec::new();
        for variant in [0u8, 1] {
            let k = insert_r1(&d, e, variant).unwrap();
            let b1 = kauffman_bracket(&k).unwrap();
            let f = b1
                .div_exact(&b0)
                .expect("bracket must change by a unit under a kink");
            factors.push(f);
        }
        let a3 = LaurentPoly::from_terms(Var::A, &[(3, -1)]);
        let a3i = LaurentPoly::from_terms(Var::A, &[(-3, -1)]);
        assert!(factors.contains(&a3), "factors: {factors:?}");
        assert!(factors.contains(&a3i), "factors: {factors:?}");
    }

    #[test]
    fn r2_insert_preserves_bracket() {
        let d = closure(&torus_braid(3, 2).unwrap());
        let b0 = kauffman_bracket(&d).unwrap();
        // pick two darts of one face with distinct edges
        let faces = d.faces();
        let f = faces
            .iter()
            .find(|f| {
                f.darts.len() >= 2
                    && f.darts
                        .iter()
                        .any(|x| x.edge != f.darts[0].edge)
            })
            .unwrap();
        let de = f.darts[0];
        let df = *f.darts.iter().find(|x| x.edge != de.edge).unwrap();
        for over in [true, false] {
            let out = insert_r2(&d, de, df, over).unwrap();
            assert_eq!(out.crossing_count(), 5);
            assert_eq!(kauffman_bracket(&out).unwrap(), b0);
            // and the insertion is R2-removable again
            assert!(!r2_sites(&out).is_empty());
        }
    }

    #[test]
    fn r3_preserves_bracket_and_components() {
        // find triangles on some braid closures and slide
        for word in [
            BraidWord::new(3, vec![1, 2, 1, 2, 1, 2]).unwrap(),
            BraidWord::new(3, vec![1, 2, -1, 2, 1, 2]).unwrap(),
            torus_braid(4, 3).unwrap(),
        ] {
            let d = closure(&word);
            let b0 = kauffman_bracket(&d).unwrap();
            let comps = d.component_count();
            let sites = r3_sites(&d);
            for site in sites {
                let out = apply_r3(&d, site).unwrap();
                assert_eq!(out.crossing_count(), d.crossing_count());
                assert_eq!(out.component_count(), comps);
                assert_eq!(kauffman_bracket(&out).unwrap(), b0, "site {site:?}");
            }
        }
    }

    #[test]
    fn writhe_changes_by_one_under_r1() {
        let d = closure(&torus_braid(3, 2).unwrap());
        let w0 = orient(&d).writhe();
        let e = d.edge_ids()[0];
        let mut ws = Vec::new();
        for variant in [0u8, 1] {
            let k = insert_r1(&d, e, variant).unwrap();
            ws.push(orient(&k).writhe() - w0);
        }
        ws.sort();
        assert_eq!(ws, vec![-1, 1]);
    }
}
