//! Kauffman bracket by ordered crossing elimination.
//!
//! States are partial matchings on the open incidences of unprocessed
//! crossings, so the cost is exponential only in the sweep width of the
//! elimination order, not in the crossing count.

use crate::diagram::{Incidence, PlanarDiagram};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use std::collections::BTreeMap;

/// Resource limits for the bracket computation.
#[derive(Debug, Clone, Copy)]
pub struct BracketLimits {
    pub max_crossings: usize,
    /// Maximum number of open path endpoints tracked at once.
    pub max_width: usize,
}

impl Default for BracketLimits {
    fn default() -> Self {
        BracketLimits {
            max_crossings: 64,
            max_width: 40,
        }
    }
}

/// Loop value delta = -A^2 - A^-2.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, &[(2, -1), (-2, -1)])
}

/// Normalized Kauffman bracket (unknot -> 1), variable A.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with(d, BracketLimits::default())
}

pub fn kauffman_bracket_with(d: &PlanarDiagram, limits: BracketLimits) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > limits.max_crossings {
        return Err(Error::resource(format!(
            "bracket crossing budget exceeded: {n} > {}",
            limits.max_crossings
        )));
    }
    let delta = loop_value();

    // Elimination order: diagrams arrive in sweep order from braid closures
    // and surgeries; a greedy min-frontier pass fixes up anything else.
    let order = elimination_order(d);

    let inc = d.edge_incidences();
    // default partner of an incidence: the other end of its edge
    let edge_partner = |i: Incidence| -> Incidence {
        let e = d.crossings()[i.crossing].slots[i.slot];
        let ends = &inc[&e];
        if ends[0] == i {
            ends[1]
        } else {
            ends[0]
        }
    };

    type State = BTreeMap<Incidence, Incidence>;
    let mut states: BTreeMap<State, LaurentPoly> = BTreeMap::new();
    states.insert(State::new(), LaurentPoly::one(Var::A));

    let mut processed = vec![false; n];
    for &ci in &order {
        processed[ci] = true;
        let incs: [Incidence; 4] = [0, 1, 2, 3].map(|s| Incidence { crossing: ci, slot: s });
        let mut next: BTreeMap<State, LaurentPoly> = BTreeMap::new();
        for (state, coeff) in &states {
            // A-smoothing joins ends (0,3) and (1,2); B joins (0,1) and (2,3).
            for (arcs, exp) in [([(0usize, 3usize), (1, 2)], 1i64), ([(0, 1), (2, 3)], -1)] {
                let mut st = state.clone();
                let mut c = coeff.clone();
                c = c.mul(&LaurentPoly::monomial(Var::A, exp, 1));
                for (sa, sb) in arcs {
                    let ia = incs[sa];
                    let ib = incs[sb];
                    let p = st.get(&ia).copied().unwrap_or_else(|| edge_partner(ia));
                    let q = st.get(&ib).copied().unwrap_or_else(|| edge_partner(ib));
                    st.remove(&ia);
                    st.remove(&ib);
                    if p == ib {
                        // the arc closes a loop
                        c = c.mul(&delta);
                    } else {
                        st.insert(p, q);
                        st.insert(q, p);
                    }
                }
                // entries pointing at the just-processed crossing are stale
                for i in incs {
                    st.remove(&i);
                }
                if st.len() > limits.max_width {
                    return Err(Error::resource(format!(
                        "bracket width budget exceeded: {} > {}",
                        st.len(),
                        limits.max_width
                    )));
                }
                let entry = next
                    .entry(st)
                    .or_insert_with(|| LaurentPoly::zero(Var::A));
                *entry = entry.add(&c);
            }
        }
        next.retain(|_, c| !c.is_zero());
        states = next;
    }

    if n == 0 && d.loops().is_empty() {
        return Ok(LaurentPoly::one(Var::A));
    }
    let mut total = LaurentPoly::zero(Var::A);
    for (state, coeff) in &states {
        debug_assert!(state.is_empty());
        total = total.add(coeff);
    }
    // free circle components each contribute a loop factor
    for _ in d.loops() {
        total = total.mul(&delta);
    }
    // normalize so the unknot maps to 1
    total
        .div_exact(&delta)
        .ok_or_else(|| Error::consistency("bracket state sum not divisible by the loop value"))
}

/// Processing order for crossings: greedy minimum resulting frontier,
/// seeded at crossing 0. For braid closures this recovers the sweep order.
fn elimination_order(d: &PlanarDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let inc = d.edge_incidences();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for ends in inc.values() {
        if ends.len() == 2 && ends[0].crossing != ends[1].crossing {
            neighbors[ends[0].crossing].push(ends[1].crossing);
            neighbors[ends[1].crossing].push(ends[0].crossing);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut done = vec![false; n];
    for _ in 0..n {
        // candidate cost: open incidences after adding it
        let mut best: Option<(usize, usize)> = None;
        for c in 0..n {
            if done[c] {
                continue;
            }
            // frontier edges if c is added
            let mut width = 0usize;
            for (cc, nb) in neighbors.iter().enumerate() {
                let in_set = |x: usize| done[x] || x == c;
                if !in_set(cc) {
                    continue;
                }
                width += nb.iter().filter(|&&x| !in_set(x)).count();
            }
            // prefer crossings adjacent to the processed set
            let adjacent = order.is_empty()
                || neighbors[c].iter().any(|&x| done[x]);
            let cost = if adjacent { width } else { width + 1000 };
            if best.map_or(true, |(bc, _)| cost < bc) {
                best = Some((cost, c));
            }
        }
        let (_, c) = best.unwrap();
        done[c] = true;
        order.push(c);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, BraidWord};
    use crate::diagram::closure;

    /// Independent oracle: plain 2^n state sum with union-find loop counting.
    pub(crate) fn bracket_brute_force(d: &PlanarDiagram) -> LaurentPoly {
        let n = d.crossing_count();
        let inc = d.edge_incidences();
        let delta = loop_value();
        let mut ids: BTreeMap<Incidence, usize> = BTreeMap::new();
        for (ci, _) in d.crossings().iter().enumerate() {
            for s in 0..4 {
                let k = ids.len();
                ids.insert(Incidence { crossing: ci, slot: s }, k);
            }
        }
        let mut total = LaurentPoly::zero(Var::A);
        for mask in 0u64..(1u64 << n) {
            let mut uf: Vec<usize> = (0..ids.len()).collect();
            fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
                while uf[x] != x {
                    uf[x] = uf[uf[x]];
                    x = uf[x];
                }
                x
            }
            let union = |uf: &mut Vec<usize>, a: usize, b: usize| {
                let (ra, rb) = (find(uf, a), find(uf, b));
                uf[ra] = rb;
            };
            for ends in inc.values() {
                if ends.len() == 2 {
                    union(&mut uf, ids[&ends[0]], ids[&ends[1]]);
                }
            }
            let mut exp = 0i64;
            for ci in 0..n {
                let arcs = if mask & (1 << ci) == 0 {
                    exp += 1;
                    [(0, 3), (1, 2)]
                } else {
                    exp -= 1;
                    [(0, 1), (2, 3)]
                };
                for (a, b) in arcs {
                    union(
                        &mut uf,
                        ids[&Incidence { crossing: ci, slot: a }],
                        ids[&Incidence { crossing: ci, slot: b }],
                    );
                }
            }
            let mut roots = std::collections::BTreeSet::new();
            for x in 0..ids.len() {
                roots.insert(find(&mut uf, x));
            }
            let loops = roots.len() + d.loops().len();
            let term = LaurentPoly::monomial(Var::A, exp, 1).mul(&delta.pow(loops as u32));
            total = total.add(&term);
        }
        total.div_exact(&delta).unwrap()
    }

    #[test]
    fn unknot_bracket_is_one() {
        let d = PlanarDiagram::unknot();
        assert_eq!(kauffman_bracket(&d).unwrap(), LaurentPoly::one(Var::A));
    }

    #[test]
    fn single_kink_bracket() {
        // positive kink on the unknot: closure of sigma_1 on 2 strands
        let d = closure(&BraidWord::new(2, vec![1]).unwrap());
        assert_eq!(d.component_count(), 1);
        let b = kauffman_bracket(&d).unwrap();
        assert_eq!(b, LaurentPoly::from_terms(Var::A, &[(3, -1)]));
    }

    #[test]
    fn trefoil_bracket_matches_brute_force_oracle() {
        let d = closure(&torus_braid(3, 2).unwrap());
        let expect = LaurentPoly::from_terms(Var::A, &[(5, -1), (-3, -1), (-7, 1)]);
        assert_eq!(bracket_brute_force(&d), expect);
        assert_eq!(kauffman_bracket(&d).unwrap(), expect);
    }

    #[test]
    fn contraction_matches_brute_force_on_small_closures() {
        for (p, q) in [(3u64, 2u64), (5, 2), (4, 3), (5, 3)] {
            let d = closure(&torus_braid(p, q).unwrap());
            assert_eq!(
                kauffman_bracket(&d).unwrap(),
                bracket_brute_force(&d),
                "T({p},{q})"
            );
        }
        let d = closure(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap());
        assert_eq!(kauffman_bracket(&d).unwrap(), bracket_brute_force(&d));
    }

    #[test]
    fn t94_bracket_runs_within_budget() {
        let d = closure(&torus_braid(9, 4).unwrap());
        let b = kauffman_bracket(&d).unwrap();
        assert!(!b.is_zero());
    }

    #[test]
    fn crossing_budget_is_enforced() {
        let d = closure(&torus_braid(9, 4).unwrap());
        let err = kauffman_bracket_with(
            &d,
            BracketLimits {
                max_crossings: 5,
                max_width: 40,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
