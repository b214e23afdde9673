//! Bundled small-knot table: golden diagrams and invariant profiles used as
//! search targets and cross-check material.

use crate::braid::BraidWord;
use crate::diagram::{closure, orient, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::{invariant_profile, InvariantProfile};

pub struct KnotTableEntry {
    pub name: &'static str,
    /// Braid word whose closure is the bundled diagram.
    pub braid: &'static str,
    /// PD text of the bundled diagram (closure of the braid).
    pub pd: &'static str,
    /// Golden profile in canonical rendering.
    pub profile: &'static str,
}

/// The bundled table: unknot, 3_1, 4_1, 5_1, 5_2, 6_1. PD texts are the
/// braid closures; profiles are golden values recomputed by the self-check.
pub const KNOT_TABLE: &[KnotTableEntry] = &[
    KnotTableEntry {
        name: "unknot",
        braid: "1:",
        pd: "",
        profile: "determinant: 1\nsignature: 0\narf: 0\nalexander: 1\njones: 1\nfox_milnor: true\ncrossings: 0\n",
    },
    KnotTableEntry {
        name: "3_1",
        braid: "2: 1 1 1",
        pd: "X 2 1 3 4\nX 4 3 5 6\nX 6 5 1 2\n",
        profile: "determinant: 3\nsignature: -2\narf: 1\nalexander: t^-1 - 1 + t^1\njones: sqrt_t^2 + sqrt_t^6 - sqrt_t^8\nfox_milnor: false\ncrossings: 3\n",
    },
    KnotTableEntry {
        name: "4_1",
        braid: "3: 1 -2 1 -2",
        pd: "X 2 1 4 5\nX 5 6 7 3\nX 6 4 1 8\nX 8 2 3 7\n",
        profile: "determinant: 5\nsignature: 0\narf: 1\nalexander: -t^-1 + 3 - t^1\njones: sqrt_t^-4 - sqrt_t^-2 + 1 - sqrt_t^2 + sqrt_t^4\nfox_milnor: false\ncrossings: 4\n",
    },
    KnotTableEntry {
        name: "5_1",
        braid: "2: 1 1 1 1 1",
        pd: "X 2 1 3 4\nX 4 3 5 6\nX 6 5 7 8\nX 8 7 9 10\nX 10 9 1 2\n",
        profile: "determinant: 5\nsignature: -4\narf: 1\nalexander: t^-2 - t^-1 + 1 - t^1 + t^2\njones: sqrt_t^4 + sqrt_t^8 - sqrt_t^10 + sqrt_t^12 - sqrt_t^14\nfox_milnor: false\ncrossings: 5\n",
    },
    KnotTableEntry {
        name: "5_2",
        braid: "3: 2 2 2 1 -2 1",
        pd: "X 3 2 4 5\nX 5 4 6 7\nX 7 6 8 9\nX 8 1 10 11\nX 11 12 3 9\nX 12 10 1 2\n",
        profile: "determinant: 7\nsignature: -2\narf: 0\nalexander: 2*t^-1 - 3 + 2*t^1\njones: sqrt_t^2 - sqrt_t^4 + 2*sqrt_t^6 - sqrt_t^8 + sqrt_t^10 - sqrt_t^12\nfox_milnor: false\ncrossings: 6\n",
    },
    KnotTableEntry {
        name: "6_1",
        braid: "4: -3 -3 -2 3 1 -2 1",
        pd: "X 3 5 6 4\nX 5 7 8 6\nX 2 9 10 7\nX 8 10 11 4\nX 9 1 12 13\nX 13 14 3 11\nX 14 12 1 2\n",
        profile: "determinant: 9\nsignature: 0\narf: 0\nalexander: -2*t^-1 + 5 - 2*t^1\njones: sqrt_t^-8 - sqrt_t^-6 + sqrt_t^-4 - 2*sqrt_t^-2 + 2 - sqrt_t^2 + sqrt_t^4\nfox_milnor: true\ncrossings: 7\n",
    },
];

/// Looks up a bundled knot by name.
pub fn knot_entry(name: &str) -> Result<&'static KnotTableEntry> {
    KNOT_TABLE
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::input(format!("unknown bundled knot '{name}'")))
}

/// Bundled diagram of a knot, parsed and validated.
pub fn knot_diagram(name: &str) -> Result<PlanarDiagram> {
    let e = knot_entry(name)?;
    PlanarDiagram::parse(e.pd)
}

/// Golden profile of a bundled knot.
pub fn knot_profile(name: &str) -> Result<InvariantProfile> {
    InvariantProfile::parse(knot_entry(name)?.profile)
}

/// Recomputes every bundled profile from its PD and compares with the golden
/// text; used as a startup self-check by the command-line tool.
pub fn table_self_check() -> Result<()> {
    for e in KNOT_TABLE {
        let d = PlanarDiagram::parse(e.pd)?;
        let braid = BraidWord::parse(e.braid)?;
        let from_braid = closure(&braid);
        if d != from_braid {
            return Err(Error::consistency(format!(
                "bundled PD of {} does not match its braid closure",
                e.name
            )));
        }
        let p = invariant_profile(&orient(&d))?;
        let golden = InvariantProfile::parse(e.profile)?;
        if p != golden {
            return Err(Error::consistency(format!(
                "bundled profile of {} does not recompute: got\n{}",
                e.name,
                p.render()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{LaurentPoly, Var};
    use num_bigint::BigInt;

    #[test]
    fn self_check_passes() {
        table_self_check().unwrap();
    }

    #[test]
    fn six_one_golden_values() {
        let p = knot_profile("6_1").unwrap();
        assert_eq!(p.determinant, BigInt::from(9));
        assert_eq!(p.signature, 0);
        assert_eq!(p.arf, 0);
        assert_eq!(
            p.alexander,
            LaurentPoly::from_terms(Var::T, &[(-1, -2), (0, 5), (1, -2)])
        );
        assert!(p.fox_milnor);
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(knot_entry("7_1").is_err());
    }

    #[test]
    #[ignore = "one-off generator for the bundled table constants"]
    fn generate_table_entries() {
        let knots = [
            ("unknot", "1:"),
            ("3_1", "2: 1 1 1"),
            ("4_1", "3: 1 -2 1 -2"),
            ("5_1", "2: 1 1 1 1 1"),
            ("5_2", "3: 2 2 2 1 -2 1"),
            ("6_1", "4: -3 -3 -2 3 1 -2 1"),
        ];
        for (name, braid) in knots {
            let b = BraidWord::parse(braid).unwrap();
            let d = closure(&b);
            let p = invariant_profile(&orient(&d)).unwrap();
            println!("=== {name}\nbraid: {braid}\npd:\n{}profile:\n{}", d.render(), p.render());
        }
    }

    #[test]
    #[ignore = "one-off braid word search for bundled knots"]
    fn find_bundled_braid_words() {
        use crate::braid::braid_permutation;
        use crate::invariants::burau_alexander;
        let targets = [
            (
                "5_2",
                3usize,
                6usize,
                LaurentPoly::from_terms(Var::T, &[(-1, 2), (0, -3), (1, 2)]),
            ),
            (
                "6_1",
                4,
                7,
                LaurentPoly::from_terms(Var::T, &[(-1, -2), (0, 5), (1, -2)]),
            ),
        ];
        for (name, strands, len, delta) in targets {
            let letters: Vec<i32> = (1..strands as i32)
                .flat_map(|i| [i, -i])
                .collect();
            let mut found = 0;
            let (mut leaves, mut knots) = (0u64, 0u64);
            let mut stack: Vec<Vec<i32>> = vec![Vec::new()];
            while let Some(w) = stack.pop() {
                if w.len() == len {
                    leaves += 1;
                    let b = BraidWord::new(strands, w.clone()).unwrap();
                    if braid_permutation(&b).cycle_count() != 1 {
                        continue;
                    }
                    knots += 1;
                    if burau_alexander(&b).unwrap() == delta {
                        let p = invariant_profile(&orient(&closure(&b))).unwrap();
                        println!(
                            "{name}: {:?} sig={} det={} jones={}",
                            b.letters(),
                            p.signature,
                            p.determinant,
                            p.jones.render()
                        );
                        found += 1;
                        if found >= 6 {
                            break;
                        }
                    }
                    continue;
                }
                for &l in &letters {
                    let mut w2 = w.clone();
                    w2.push(l);
                    stack.push(w2);
                }
            }
            println!("{name}: searched {leaves} words ({knots} knots), {found} matches");
        }
    }
}
