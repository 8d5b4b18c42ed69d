//! Explicit links with prescribed crossing number and signature.

use std::fmt;

use super::{gl_signature, ConwayDiagram};
use crate::braid::{mirror, BraidWord};
use crate::planar::DiagramError;
use crate::seifert::signature_nullity_of_closure;

/// A concrete diagram: a Conway notation or a braid closure.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    TwoBridge { diagram: ConwayDiagram },
    Braid { word: BraidWord },
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Realization {
    pub name: String,
    pub witness: Witness,
    /// Whether the link is the mirror image of `witness`.
    pub mirror: bool,
}

impl Realization {
    fn braid(name: impl Into<String>, strands: usize, letters: Vec<i32>) -> Realization {
        Realization {
            name: name.into(),
            witness: Witness::Braid { word: BraidWord::new(strands, letters).expect("valid witness word") },
            mirror: false,
        }
    }

    fn two_bridge(diagram: ConwayDiagram) -> Realization {
        Realization { name: diagram.to_string(), witness: Witness::TwoBridge { diagram }, mirror: false }
    }

    fn mirrored(self) -> Realization {
        Realization { name: format!("mirror of {}", self.name), mirror: !self.mirror, ..self }
    }

    /// Signature recomputed from the witness diagram.
    pub fn signature(&self) -> Result<i64, String> {
        let s = match &self.witness {
            Witness::TwoBridge { diagram } => gl_signature(diagram).map_err(|e| e.to_string())?.0,
            Witness::Braid { word } => signature_nullity_of_closure(word).map_err(|e| e.to_string())?.0,
        };
        Ok(if self.mirror { -s } else { s })
    }

    /// The witness as a braid word when it is one, mirrored if needed.
    pub fn braid_word(&self) -> Option<BraidWord> {
        match &self.witness {
            Witness::Braid { word } => Some(if self.mirror { mirror(word) } else { word.clone() }),
            Witness::TwoBridge { .. } => None,
        }
    }

    /// Signature of the diagram with every crossing switched, for 2-bridge witnesses.
    pub fn mirrored_diagram_signature(&self) -> Option<Result<i64, DiagramError>> {
        match &self.witness {
            Witness::TwoBridge { diagram } => {
                let d = diagram.diagram().ok()?;
                Some(d.mirror().signature_nullity().map(|(s, _)| s))
            }
            Witness::Braid { .. } => None,
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

const DELTA: [i32; 3] = [1, 2, 1];

fn delta_power(k: usize) -> Vec<i32> {
    DELTA.iter().copied().cycle().take(3 * k).collect()
}

/// Links with `σ = 2 − cr`: the closures `Δ²`, `Δ²σ₁σ₂`, `Δ²(σ₁σ₂)²`, `Δ³`,
/// `Δ²σ₂^q` and `σ₁^{q₁}σ₂^{q₂}`.
fn two_minus_c(c: i64) -> Option<Realization> {
    let with = |tail: &[i32]| {
        let mut v = delta_power(2);
        v.extend_from_slice(tail);
        v
    };
    Some(match c {
        6 => Realization::braid("T(3,3)", 3, delta_power(2)),
        8 => Realization::braid("T(3,4)", 3, with(&[1, 2])),
        10 => Realization::braid("T(3,5)", 3, with(&[1, 2, 1, 2])),
        9 => Realization::braid("closure of Delta^3", 3, delta_power(3)),
        4 | 5 => {
            let q2 = c as usize - 2;
            let mut letters = vec![1, 1];
            letters.extend(std::iter::repeat(2).take(q2));
            Realization::braid(format!("T(2,2)#T(2,{q2})"), 3, letters)
        }
        c if c >= 7 => {
            let q = c as usize - 6;
            Realization::braid(format!("P(-2,2,{})", q + 2), 3, with(&vec![2; q]))
        }
        _ => return None,
    })
}

/// A link with crossing number `c` and signature `d`, when one is known to exist.
pub fn geography_realizer(c: i64, d: i64) -> Option<Realization> {
    if d > 0 {
        return geography_realizer(c, -d).map(Realization::mirrored);
    }
    if c < 1 || d < 1 - c || matches!((c, d), (1, 0) | (2, 0) | (3, 0) | (3, -1) | (5, 0)) {
        return None;
    }
    if d == 1 - c {
        return Some(Realization::braid(format!("T(2,{c})"), 2, vec![1; c as usize]));
    }
    if d == 2 - c {
        return two_minus_c(c);
    }
    let diagram = if (c + d) % 2 != 0 && d < 0 {
        let q = (c - 1 + d) / 2;
        ConwayDiagram::pqr(1, q as u32, (-d) as u32)
    } else if d == 0 && c % 2 == 1 {
        ConwayDiagram::five_param(((c - 5) / 2) as u32, 1, 1, 1)
    } else {
        let r = (c + d) / 2 - 1;
        ConwayDiagram::pq2r((1 - d) as u32, 1, r as u32)
    };
    Some(Realization::two_bridge(diagram.expect("parameters are positive in this range")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twobridge::alternating_crossing_number;

    fn known_crossings(name: &str) -> Option<i64> {
        let name = name.strip_prefix("mirror of ").unwrap_or(name);
        if let Some(rest) = name.strip_prefix("T(2,").and_then(|r| r.strip_suffix(')')) {
            if !rest.contains('#') {
                return rest.parse().ok();
            }
        }
        match name {
            "T(3,3)" => Some(6),
            "T(3,4)" => Some(8),
            "T(3,5)" => Some(10),
            "closure of Delta^3" => Some(9),
            _ => {
                if let Some(rest) = name.strip_prefix("P(-2,2,").and_then(|r| r.strip_suffix(')')) {
                    return rest.parse::<i64>().ok().map(|x| x + 4);
                }
                let (a, b) = name.split_once('#')?;
                let parse = |s: &str| s.trim_start_matches("T(2,").trim_end_matches(')').parse::<i64>().ok();
                Some(parse(a)? + parse(b)?)
            }
        }
    }

    #[test]
    fn spec_examples() {
        let r = geography_realizer(7, 0).unwrap();
        assert_eq!(r.name, "C(2,1,1,1,2)@5p");
        assert_eq!(geography_realizer(6, -4).unwrap().name, "T(3,3)");
        assert!(geography_realizer(5, 0).is_none());
        for (c, d) in [(1, 0), (2, 0), (3, 0), (3, 1), (3, -1), (0, 0), (4, 4), (4, -4)] {
            assert!(geography_realizer(c, d).is_none(), "({c}, {d})");
        }
        assert_eq!(geography_realizer(4, -1).unwrap().name, "C(1,2,1)@pqr");
        assert_eq!(geography_realizer(4, 0).unwrap().name, "C(1,1,2)@pq2r");
        assert_eq!(geography_realizer(3, 2).unwrap().name, "mirror of T(2,3)");
    }

    #[test]
    fn every_realizer_has_the_requested_invariants() {
        for c in 1..=14 {
            for d in 1 - c..=c - 1 {
                let Some(r) = geography_realizer(c, d) else {
                    assert!(matches!((c, d), (1, 0) | (2, 0) | (3, 0) | (3, 1) | (3, -1) | (5, 0)), "({c}, {d})");
                    continue;
                };
                let cr = match &r.witness {
                    Witness::TwoBridge { diagram } => alternating_crossing_number(diagram).unwrap(),
                    Witness::Braid { .. } => known_crossings(&r.name).unwrap(),
                };
                assert_eq!(cr, c, "{r}");
                assert_eq!(r.signature().unwrap(), d, "{r}");
                if let Some(s) = r.mirrored_diagram_signature() {
                    assert_eq!(s.unwrap(), -gl_signature(match &r.witness {
                        Witness::TwoBridge { diagram } => diagram,
                        _ => unreachable!(),
                    })
                    .unwrap()
                    .0);
                }
            }
        }
    }
}
