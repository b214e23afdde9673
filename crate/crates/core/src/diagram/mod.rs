//! Planar diagrams of knots and links as PD codes.
//!
//! A crossing stores its four incident edge ends in counterclockwise order,
//! starting from the incoming under-strand. The under-strand therefore
//! occupies slots 0 and 2, the over-strand slots 1 and 3. Closed components
//! with no crossings are stored as explicit loop edges so that surgeries can
//! still attach to them.

mod band;
mod moves;
mod orient;
mod simplify;

pub use band::{attach_band, pinch_band_spec, BandSpec, Coherence, PathSide, SurfaceTrace};
pub use moves::{
    apply_r1, apply_r2, apply_r3, insert_r1, insert_r2, r1_sites, r2_sites, r3_sites, R3Site,
};
pub use orient::{orient, OrientedDiagram};
pub use simplify::simplify;

use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

pub type EdgeId = u32;

/// One crossing; `slots[0]` is the incoming under-strand in the recorded
/// traversal, the rest follow counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [EdgeId; 4],
}

/// Position of an edge end: which crossing and which slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Incidence {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    /// Closed circle components without crossings, by edge id.
    loops: Vec<EdgeId>,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, loops: Vec<EdgeId>) -> Result<Self> {
        let d = PlanarDiagram { crossings, loops };
        d.validate()?;
        Ok(d)
    }

    /// The 0-crossing unknot, one loop edge.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            loops: vec![1],
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn loops(&self) -> &[EdgeId] {
        &self.loops
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Edge ids with their incidences, in deterministic scan order.
    pub fn edge_incidences(&self) -> BTreeMap<EdgeId, Vec<Incidence>> {
        let mut map: BTreeMap<EdgeId, Vec<Incidence>> = BTreeMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &e) in c.slots.iter().enumerate() {
                map.entry(e).or_default().push(Incidence {
                    crossing: ci,
                    slot: si,
                });
            }
        }
        for &l in &self.loops {
            map.entry(l).or_default();
        }
        map
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edge_incidences().keys().copied().collect()
    }

    pub fn fresh_edge_id(&self) -> EdgeId {
        self.edge_incidences()
            .keys()
            .next_back()
            .map_or(1, |&m| m + 1)
    }

    /// Validates edge multiplicity, loop-id disjointness, and the Euler
    /// relation per connected piece of the underlying 4-valent graph.
    pub fn validate(&self) -> Result<()> {
        let inc = self.edge_incidences();
        for (&e, ends) in &inc {
            let in_loops = self.loops.iter().filter(|&&l| l == e).count();
            if in_loops > 0 {
                if in_loops > 1 || !ends.is_empty() {
                    return Err(Error::input(format!(
                        "edge {e} appears both as a loop and at crossings"
                    )));
                }
                continue;
            }
            if ends.len() != 2 {
                return Err(Error::input(format!(
                    "edge {e} appears {} times, expected exactly 2",
                    ends.len()
                )));
            }
        }
        // Euler characteristic per connected component of the crossing graph.
        if !self.crossings.is_empty() {
            let comps = self.crossing_graph_components();
            let faces = self.faces();
            let mut face_comp: Vec<usize> = Vec::new();
            for f in &faces {
                let d = f.darts[0];
                face_comp.push(comps[self.incidence_of_dart(d).crossing]);
            }
            let ncomp = comps.iter().copied().max().unwrap() + 1;
            for comp in 0..ncomp {
                let v = comps.iter().filter(|&&c| c == comp).count() as i64;
                let e = inc
                    .iter()
                    .filter(|(_, ends)| {
                        !ends.is_empty() && comps[ends[0].crossing] == comp
                    })
                    .count() as i64;
                let f = face_comp.iter().filter(|&&c| c == comp).count() as i64;
                if v - e + f != 2 {
                    return Err(Error::input(format!(
                        "diagram fails the planarity check (V - E + F = {} != 2)",
                        v - e + f
                    )));
                }
            }
        }
        Ok(())
    }

    /// Connected components of the 4-valent graph, indexed by crossing.
    fn crossing_graph_components(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let inc = self.edge_incidences();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = next;
            while let Some(c) = stack.pop() {
                for &e in &self.crossings[c].slots {
                    for end in &inc[&e] {
                        if comp[end.crossing] == usize::MAX {
                            comp[end.crossing] = next;
                            stack.push(end.crossing);
                        }
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Knot-theoretic components (strand orbits), each a set of edges.
    /// Loop edges each form their own component.
    pub fn components(&self) -> Vec<Vec<EdgeId>> {
        let inc = self.edge_incidences();
        let mut seen: BTreeMap<EdgeId, bool> =
            inc.keys().map(|&e| (e, false)).collect();
        let mut out = Vec::new();
        for &l in &self.loops {
            seen.insert(l, true);
            out.push(vec![l]);
        }
        for (&start, ends) in &inc {
            if seen[&start] || ends.is_empty() {
                continue;
            }
            let mut comp = Vec::new();
            // Walk the strand: cross each crossing to the opposite slot.
            let mut edge = start;
            let mut from = ends[0];
            loop {
                if !seen[&edge] {
                    seen.insert(edge, true);
                    comp.push(edge);
                }
                // continue through the crossing at the *other* end of `edge`
                let ends_e = &inc[&edge];
                let to = if ends_e[0] == from { ends_e[1] } else { ends_e[0] };
                let next_slot = (to.slot + 2) % 4;
                let next_edge = self.crossings[to.crossing].slots[next_slot];
                from = Incidence {
                    crossing: to.crossing,
                    slot: next_slot,
                };
                edge = next_edge;
                if edge == start && from == ends[0] {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    fn incidence_of_dart(&self, d: Dart) -> Incidence {
        d.head
    }

    /// Faces of the embedding determined by the counterclockwise slot order.
    /// Each face is the orbit of the left-face walk.
    pub fn faces(&self) -> Vec<Face> {
        let inc = self.edge_incidences();
        // darts: (edge, head incidence index 0/1)
        let mut darts: Vec<Dart> = Vec::new();
        for (&e, ends) in &inc {
            if ends.len() == 2 {
                darts.push(Dart {
                    edge: e,
                    head: ends[1],
                });
                darts.push(Dart {
                    edge: e,
                    head: ends[0],
                });
            }
        }
        darts.sort();
        let mut seen: BTreeMap<Dart, bool> = darts.iter().map(|&d| (d, false)).collect();
        let mut faces = Vec::new();
        for &start in &darts {
            if seen[&start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                seen.insert(d, true);
                cycle.push(d);
                // arrive at head (c, s); leave via slot (s+3)%4, keeping the
                // face on the left
                let c = d.head.crossing;
                let s = (d.head.slot + 3) % 4;
                let e = self.crossings[c].slots[s];
                let ends = &inc[&e];
                let here = Incidence { crossing: c, slot: s };
                let other = if ends[0] == here { ends[1] } else { ends[0] };
                d = Dart { edge: e, head: other };
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts: cycle });
        }
        faces
    }

    /// For each edge at crossings, the indices of the faces on its two sides:
    /// `[left, right]` with respect to the traversal from first to second
    /// incidence in scan order.
    pub fn edge_faces(&self) -> BTreeMap<EdgeId, [usize; 2]> {
        let inc = self.edge_incidences();
        let faces = self.faces();
        let mut dart_face: BTreeMap<Dart, usize> = BTreeMap::new();
        for (fi, f) in faces.iter().enumerate() {
            for &d in &f.darts {
                dart_face.insert(d, fi);
            }
        }
        let mut out = BTreeMap::new();
        for (&e, ends) in &inc {
            if ends.len() != 2 {
                continue;
            }
            let fwd = Dart { edge: e, head: ends[1] };
            let bwd = Dart { edge: e, head: ends[0] };
            out.insert(e, [dart_face[&fwd], dart_face[&bwd]]);
        }
        out
    }

    /// Mirror image, realized as a reflection of the page: the cyclic slot
    /// order reverses while slot 0 stays the incoming under-strand.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.slots;
                Crossing {
                    slots: [a, d, cc, b],
                }
            })
            .collect();
        PlanarDiagram {
            crossings,
            loops: self.loops.clone(),
        }
    }

    /// Parses the PD text format: one `X a b c d` per line or `/`-separated,
    /// `#` comments. Empty input is the 0-crossing unknot.
    pub fn parse(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for chunk in line.split('/') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let mut toks = chunk.split_whitespace();
                let head = toks.next().unwrap();
                if head != "X" && head != "x" {
                    return Err(Error::input(format!(
                        "expected crossing line starting with 'X', got '{chunk}'"
                    )));
                }
                let mut slots = [0u32; 4];
                for slot in slots.iter_mut() {
                    let tok = toks
                        .next()
                        .ok_or_else(|| Error::input(format!("crossing '{chunk}' needs 4 edges")))?;
                    *slot = tok
                        .parse()
                        .map_err(|_| Error::input(format!("bad edge label '{tok}'")))?;
                    if *slot == 0 {
                        return Err(Error::input("edge labels must be positive"));
                    }
                }
                if toks.next().is_some() {
                    return Err(Error::input(format!("trailing tokens in '{chunk}'")));
                }
                crossings.push(Crossing { slots });
            }
        }
        if crossings.is_empty() {
            return Ok(PlanarDiagram::unknot());
        }
        PlanarDiagram::new(crossings, Vec::new())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            out.push_str(&format!(
                "X {} {} {} {}\n",
                c.slots[0], c.slots[1], c.slots[2], c.slots[3]
            ));
        }
        for _ in &self.loops {
            out.push_str("# unknotted circle component\n");
        }
        out
    }

    /// Relabels edges to 1..E in scan order; canonical form for dedup keys.
    pub fn relabeled(&self) -> PlanarDiagram {
        let mut map: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
        let mut next = 1;
        let mut fresh = |map: &mut BTreeMap<EdgeId, EdgeId>, e: EdgeId| -> EdgeId {
            *map.entry(e).or_insert_with(|| {
                let id = next;
                next += 1;
                id
            })
        };
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                slots: [
                    fresh(&mut map, c.slots[0]),
                    fresh(&mut map, c.slots[1]),
                    fresh(&mut map, c.slots[2]),
                    fresh(&mut map, c.slots[3]),
                ],
            })
            .collect();
        let loops = self.loops.iter().map(|&l| fresh(&mut map, l)).collect();
        PlanarDiagram { crossings, loops }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Directed edge traversal; `head` is the incidence being walked toward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub edge: EdgeId,
    pub head: Incidence,
}

impl PartialOrd for Incidence {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Incidence {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.crossing, self.slot).cmp(&(other.crossing, other.slot))
    }
}

#[derive(Debug, Clone)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn edges(&self) -> Vec<EdgeId> {
        self.darts.iter().map(|d| d.edge).collect()
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Builds the braid closure diagram: strands top to bottom, closure arcs to
/// the right, crossing count equal to the word length.
pub fn closure(b: &crate::braid::BraidWord) -> PlanarDiagram {
    let n = b.strands();
    // top edge ids 1..=n per strand position
    let mut cur: Vec<EdgeId> = (1..=n as u32).collect();
    let top: Vec<EdgeId> = cur.clone();
    let mut next_id = n as u32 + 1;
    let mut crossings = Vec::new();
    // The closure identifies the bottom of each strand position with its top
    // edge, so the last crossing touching a position reuses the top id.
    let mut touches_left = vec![0usize; n];
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        touches_left[i] += 1;
        touches_left[i + 1] += 1;
    }
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let ul = cur[i];
        let ur = cur[i + 1];
        touches_left[i] -= 1;
        touches_left[i + 1] -= 1;
        let bl = if touches_left[i] == 0 {
            top[i]
        } else {
            let id = next_id;
            next_id += 1;
            id
        };
        let br = if touches_left[i + 1] == 0 {
            top[i + 1]
        } else {
            let id = next_id;
            next_id += 1;
            id
        };
        // strands oriented downward; UL->BR and UR->BL
        let slots = if l > 0 {
            // UR->BL passes under
            [ur, ul, bl, br]
        } else {
            // UL->BR passes under
            [ul, bl, br, ur]
        };
        crossings.push(Crossing { slots });
        cur[i] = bl;
        cur[i + 1] = br;
    }
    // untouched strand positions close into free loops
    let mut loops = Vec::new();
    for pos in 0..n {
        let mut touched = false;
        for &l in b.letters() {
            let i = l.unsigned_abs() as usize - 1;
            if i == pos || i + 1 == pos {
                touched = true;
                break;
            }
        }
        if !touched {
            loops.push(top[pos]);
        }
    }
    PlanarDiagram { crossings, loops }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_permutation, torus_braid, BraidWord};

    #[test]
    fn unknot_diagram() {
        let d = PlanarDiagram::unknot();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        d.validate().unwrap();
    }

    #[test]
    fn parse_two_crossing_link() {
        let d = PlanarDiagram::parse("X 1 2 3 4 / X 3 2 1 4").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        // V - E + F = 2: 2 - 4 + F => F = 4
        assert_eq!(d.faces().len(), 4);
    }

    #[test]
    fn parse_rejects_nonplanar_rotation() {
        // same abstract graph as above but with the second rotation not
        // reversed: embeds on the torus, not the sphere
        let err = PlanarDiagram::parse("X 1 2 3 4 / X 3 4 1 2").unwrap_err();
        assert!(format!("{err}").contains("planarity"));
    }

    #[test]
    fn parse_rejects_bad_multiplicity() {
        let err = PlanarDiagram::parse("X 1 1 1 2 / X 2 3 3 4").unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains("edge 1"), "got: {msg}");
    }

    #[test]
    fn parse_empty_is_unknot() {
        let d = PlanarDiagram::parse("  \n # just a comment\n").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn closure_counts() {
        let b = torus_braid(3, 2).unwrap();
        let d = closure(&b);
        d.validate().unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.faces().len(), 5); // 3 - 6 + F = 2 per sphere

        let b = torus_braid(9, 4).unwrap();
        let d = closure(&b);
        d.validate().unwrap();
        assert_eq!(d.crossing_count(), 27);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn closure_of_identity() {
        let d = closure(&BraidWord::identity(1));
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 1);
        let d = closure(&BraidWord::identity(3));
        assert_eq!(d.component_count(), 3);
    }

    #[test]
    fn closure_components_match_permutation_cycles() {
        for (p, q) in [(3u64, 2u64), (5, 2), (9, 4), (7, 3)] {
            let b = torus_braid(p, q).unwrap();
            let d = closure(&b);
            assert_eq!(
                d.component_count(),
                braid_permutation(&b).cycle_count()
            );
        }
        // non-knot: sigma_1 on 3 strands -> 2 components
        let b = BraidWord::new(3, vec![1]).unwrap();
        assert_eq!(closure(&b).component_count(), 2);
    }

    #[test]
    fn mirror_is_involutive() {
        let d = closure(&torus_braid(3, 2).unwrap());
        assert_eq!(d.mirror().mirror(), d);
        d.mirror().validate().unwrap();
    }
}
