//! Deterministic orientation of a planar diagram, crossing signs, writhe.

use super::{EdgeId, Incidence, PlanarDiagram};
use std::collections::BTreeMap;

/// A diagram together with a chosen orientation of every component.
///
/// The orientation rule is deterministic: the lowest-numbered edge of each
/// component is directed away from its first-listed incidence, and the rest
/// of the component follows.
#[derive(Debug, Clone)]
pub struct OrientedDiagram {
    base: PlanarDiagram,
    /// Tail incidence per edge (absent for loop edges).
    tails: BTreeMap<EdgeId, Incidence>,
    signs: Vec<i8>,
    writhe: i64,
    components: Vec<Vec<EdgeId>>,
}

impl OrientedDiagram {
    pub fn base(&self) -> &PlanarDiagram {
        &self.base
    }

    pub fn into_base(self) -> PlanarDiagram {
        self.base
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    pub fn components(&self) -> &[Vec<EdgeId>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    /// Tail incidence of an edge, i.e. where its orientation starts.
    /// None for loop edges.
    pub fn tail(&self, edge: EdgeId) -> Option<Incidence> {
        self.tails.get(&edge).copied()
    }

    /// Whether the given incidence is the tail end of its edge.
    pub fn is_tail(&self, edge: EdgeId, at: Incidence) -> bool {
        self.tails.get(&edge) == Some(&at)
    }

    /// Positive and negative crossing counts.
    pub fn signed_counts(&self) -> (usize, usize) {
        let pos = self.signs.iter().filter(|&&s| s > 0).count();
        (pos, self.signs.len() - pos)
    }
}

/// Orients a diagram deterministically and computes signs and writhe.
pub fn orient(d: &PlanarDiagram) -> OrientedDiagram {
    let inc = d.edge_incidences();
    let mut tails: BTreeMap<EdgeId, Incidence> = BTreeMap::new();
    let mut components: Vec<Vec<EdgeId>> = Vec::new();
    for &l in d.loops() {
        components.push(vec![l]);
    }
    for (&start, ends) in &inc {
        if ends.is_empty() || tails.contains_key(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut edge = start;
        let mut from = ends[0];
        loop {
            tails.insert(edge, from);
            comp.push(edge);
            let ends_e = &inc[&edge];
            let to = if ends_e[0] == from { ends_e[1] } else { ends_e[0] };
            let next_slot = (to.slot + 2) % 4;
            let next_edge = d.crossings()[to.crossing].slots[next_slot];
            from = Incidence {
                crossing: to.crossing,
                slot: next_slot,
            };
            edge = next_edge;
            if edge == start && from == ends[0] {
                break;
            }
        }
        components.push(comp);
    }

    let mut signs = Vec::with_capacity(d.crossing_count());
    let mut writhe = 0i64;
    for (ci, c) in d.crossings().iter().enumerate() {
        let out_slot = |cands: [usize; 2]| -> usize {
            for s in cands {
                let e = c.slots[s];
                let here = Incidence { crossing: ci, slot: s };
                if tails[&e] == here {
                    return s;
                }
            }
            // orientation must leave through exactly one of the two slots
            unreachable!("inconsistent orientation at crossing {ci}");
        };
        let u_out = out_slot([0, 2]);
        let v_out = out_slot([1, 3]);
        let sign: i8 = if v_out == (u_out + 1) % 4 { 1 } else { -1 };
        signs.push(sign);
        writhe += sign as i64;
    }

    OrientedDiagram {
        base: d.clone(),
        tails,
        signs,
        writhe,
        components,
    }
}
