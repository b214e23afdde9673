//! Pinch sequences on torus knots: iterating the adjacent-strand band to the
//! unknot and tabulating the resulting surface Betti numbers.

use crate::diagram::{BandSpec, SurfaceTrace};
use crate::error::{Error, Result};
use num_integer::Integer;
use rayon::prelude::*;
use std::fmt;

/// Normalized torus-knot parameters: either the unknot or p > q >= 2 coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TorusParams {
    Unknot,
    Knot { p: u64, q: u64 },
}

impl TorusParams {
    /// Normalizes an unordered pair: sorts descending, treats min <= 1 as the
    /// unknot, and requires coprimality otherwise.
    pub fn new(a: u64, b: u64) -> Result<TorusParams> {
        let (p, q) = if a >= b { (a, b) } else { (b, a) };
        if q <= 1 {
            return Ok(TorusParams::Unknot);
        }
        if p.gcd(&q) != 1 {
            return Err(Error::input(format!(
                "({p},{q}) is a torus link, not a knot: gcd != 1"
            )));
        }
        Ok(TorusParams::Knot { p, q })
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, TorusParams::Unknot)
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusParams::Unknot => f.write_str("U"),
            TorusParams::Knot { p, q } => write!(f, "({p},{q})"),
        }
    }
}

/// A full pinch sequence from a torus knot down to the unknot.
#[derive(Debug, Clone)]
pub struct PinchSequence {
    /// Parameters from the start knot (inclusive) to the unknot (inclusive).
    pub steps: Vec<TorusParams>,
    /// Number of pinches performed.
    pub b1: usize,
    pub trace: SurfaceTrace,
}

impl PinchSequence {
    /// Machine-readable line: `p q b1 seq=(p1,q1)->(p2,q2)->U`.
    pub fn machine_line(&self) -> String {
        let seq = self
            .steps
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("->");
        match self.steps.first() {
            Some(TorusParams::Knot { p, q }) => format!("{p} {q} {} seq={seq}", self.b1),
            _ => format!("1 1 {} seq={seq}", self.b1),
        }
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid on coprime inputs
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    debug_assert_eq!(old_r, 1, "inputs must be coprime");
    old_s.rem_euclid(m as i128) as u64
}

/// One pinch: (p,q) -> (|p - 2t|, |q - 2h|) normalized, where t is the least
/// positive residue of -q^{-1} mod p and h that of p^{-1} mod q.
pub fn pinch_step(k: TorusParams) -> Result<TorusParams> {
    let TorusParams::Knot { p, q } = k else {
        return Err(Error::input("cannot pinch the unknot"));
    };
    let t = (p - mod_inverse(q % p, p) % p) % p;
    let h = mod_inverse(p % q, q) % q;
    let p2 = (p as i128 - 2 * t as i128).unsigned_abs() as u64;
    let q2 = (q as i128 - 2 * h as i128).unsigned_abs() as u64;
    let next = TorusParams::new(p2, q2)?;
    if let TorusParams::Knot { p: np, q: nq } = next {
        if np * nq >= p * q {
            return Err(Error::consistency(format!(
                "pinch of ({p},{q}) produced non-simpler ({np},{nq})"
            )));
        }
    }
    Ok(next)
}

/// The canonical pinch band spec on a standard torus closure: strands 1 and 2
/// in the flat closure region, untwisted, empty path.
fn canonical_pinch_band() -> BandSpec {
    BandSpec {
        attach1: (1, 0.5),
        attach2: (2, 0.5),
        path: Vec::new(),
        twists: 0,
    }
}

/// Iterates pinch_step to the unknot; b1 equals the number of pinches.
pub fn pinch_sequence(k: TorusParams) -> PinchSequence {
    let mut steps = vec![k];
    let mut trace = SurfaceTrace::default();
    let mut cur = k;
    while let TorusParams::Knot { .. } = cur {
        let next = pinch_step(cur).expect("nontrivial parameters always pinch");
        trace.record(
            &canonical_pinch_band(),
            crate::diagram::Coherence::NonCoherent,
            &format!("{cur} -> {next}"),
        );
        steps.push(next);
        cur = next;
    }
    PinchSequence {
        b1: steps.len() - 1,
        steps,
        trace,
    }
}

/// All coprime rows (p, q) with 2 <= q < p, q <= q_max, p <= p_max, in
/// lexicographic order, each with its pinch sequence.
pub fn batson_table(p_max: u64, q_max: u64) -> Result<Vec<PinchSequence>> {
    if p_max < 2 || q_max < 2 {
        return Err(Error::input("table bounds must be at least 2"));
    }
    let mut pairs = Vec::new();
    for p in 2..=p_max {
        for q in 2..p.min(q_max + 1) {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    let rows: Vec<PinchSequence> = pairs
        .par_iter()
        .map(|&(p, q)| pinch_sequence(TorusParams::Knot { p, q }))
        .collect();
    Ok(rows)
}

/// Aligned text rendering of a table, one machine line per row.
pub fn batson_table_text(rows: &[PinchSequence]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&r.machine_line());
        out.push('\n');
    }
    out
}
