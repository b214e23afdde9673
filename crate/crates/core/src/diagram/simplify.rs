//! Crossing-reducing Reidemeister simplification.

use super::moves::{apply_r1, apply_r2, apply_r3, r1_sites, r2_sites, r3_sites};
use super::PlanarDiagram;

/// One greedy reduction step if available: first kink, else first bigon.
fn reduce_once(d: &PlanarDiagram) -> Option<PlanarDiagram> {
    if let Some(&site) = r1_sites(d).first() {
        if let Ok(out) = apply_r1(d, site) {
            return Some(out);
        }
    }
    if let Some(&site) = r2_sites(d).first() {
        if let Ok(out) = apply_r2(d, site) {
            return Some(out);
        }
    }
    None
}

/// Searches for a chain of at most `depth` slide moves after which a kink or
/// bigon reduction exists; returns the reduced diagram if found.
fn slide_to_unlock(d: &PlanarDiagram, depth: usize) -> Option<PlanarDiagram> {
    if depth == 0 {
        return None;
    }
    for site in r3_sites(d) {
        let Ok(slid) = apply_r3(&site_owner(d), site) else {
            continue;
        };
        if let Some(out) = reduce_once(&slid) {
            return Some(out);
        }
        if let Some(out) = slide_to_unlock(&slid, depth - 1) {
            return Some(out);
        }
    }
    None
}

fn site_owner(d: &PlanarDiagram) -> PlanarDiagram {
    d.clone()
}

/// Greedy R1/R2 reduction, with R3 slides tried only when a chain of at most
/// two of them unlocks a further reduction. Crossing count never increases.
pub fn simplify(d: &PlanarDiagram) -> PlanarDiagram {
    simplify_with_depth(d, 2)
}

pub fn simplify_with_depth(d: &PlanarDiagram, depth: usize) -> PlanarDiagram {
    let mut cur = d.clone();
    loop {
        if let Some(next) = reduce_once(&cur) {
            cur = next;
            continue;
        }
        if let Some(next) = slide_to_unlock(&cur, depth) {
            cur = next;
            continue;
        }
        return cur;
    }
}
