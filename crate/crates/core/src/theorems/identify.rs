//! Link identification and crossing numbers of 3-braid closures.

use std::fmt;

use super::TheoremError;
use crate::braid::{closure_stats, free_reduce, mirror, word_flags, BraidWord};
use crate::garside3::{conjugate_to_positive, murasugi_class, MurasugiClass};
use crate::seifert::signature_nullity_of_closure;
use crate::twobridge::{alternating_crossing_number, fraction, gl_signature, ConwayDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LinkName {
    Unknot,
    Torus { p: u32, q: u32 },
    /// `P(−2, 2, p)`
    Pretzel { p: u32 },
    /// `T(2, a) # T(2, b)`
    ConnectedSum { a: u32, b: u32 },
    DeltaCubed,
    TwoBridge { numerator: u128, denominator: u128 },
    Unknown,
}

impl LinkName {
    fn torus2(c: u32) -> LinkName {
        if c <= 1 {
            LinkName::Unknot
        } else {
            LinkName::Torus { p: 2, q: c }
        }
    }

    fn sum(a: u32, b: u32) -> LinkName {
        LinkName::ConnectedSum { a: a.min(b), b: a.max(b) }
    }
}

impl fmt::Display for LinkName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkName::Unknot => f.write_str("unknot"),
            LinkName::Torus { p, q } => write!(f, "T({p},{q})"),
            LinkName::Pretzel { p } => write!(f, "P(-2,2,{p})"),
            LinkName::ConnectedSum { a, b } => write!(f, "T(2,{a})#T(2,{b})"),
            LinkName::DeltaCubed => f.write_str("closure of Delta^3"),
            LinkName::TwoBridge { numerator, denominator } => write!(f, "2-bridge {numerator}/{denominator}"),
            LinkName::Unknown => f.write_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingStatus {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CrossingNumber {
    pub value: i64,
    pub status: CrossingStatus,
}

impl CrossingNumber {
    fn exact(value: i64) -> CrossingNumber {
        CrossingNumber { value, status: CrossingStatus::Exact }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ThreeBraidCrossing {
    pub crossing_number: CrossingNumber,
    pub braid_index: Option<i64>,
    pub name: LinkName,
    /// The link is the mirror image of `name`.
    pub mirror: bool,
    /// Murasugi class of the word (or of its mirror, when `mirror`) if it was needed.
    pub class: Option<MurasugiClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LinkReport {
    pub name: LinkName,
    pub mirror: bool,
    pub sigma: i64,
    pub nullity: i64,
    pub components: usize,
    pub crossing_number: Option<CrossingNumber>,
    pub braid_index: Option<i64>,
}

impl LinkReport {
    /// `mirror of T(2,3)` style label.
    pub fn label(&self) -> String {
        if self.mirror {
            format!("mirror of {}", self.name)
        } else {
            self.name.to_string()
        }
    }
}

/// Names and crossing data for positive closures whose braid index is below 3.
fn low_index_exception(class: &MurasugiClass) -> Option<(i64, i64, LinkName)> {
    match class {
        MurasugiClass::Omega1 { n: 0 } => Some((0, 1, LinkName::Unknot)),
        MurasugiClass::Omega2 { n: 0 } => Some((3, 2, LinkName::torus2(3))),
        MurasugiClass::Omega3 { n: 0 } => Some((2, 2, LinkName::torus2(2))),
        MurasugiClass::Omega4 { n: 1, p: 1 } => Some((4, 2, LinkName::torus2(4))),
        MurasugiClass::Omega6 { n: 1, pairs } if pairs.len() == 1 && pairs[0].0 == 1 => {
            let c = pairs[0].1 + 4;
            Some((i64::from(c), 2, LinkName::torus2(c)))
        }
        _ => None,
    }
}

fn positive_class_name(class: &MurasugiClass) -> LinkName {
    match class {
        MurasugiClass::Omega0 { n } if *n >= 1 => LinkName::Torus { p: 3, q: 3 * *n as u32 },
        MurasugiClass::Omega1 { n } if *n >= 1 => LinkName::Torus { p: 3, q: 3 * *n as u32 + 1 },
        MurasugiClass::Omega2 { n } if *n >= 1 => LinkName::Torus { p: 3, q: 3 * *n as u32 + 2 },
        MurasugiClass::Omega3 { n: 1 } => LinkName::DeltaCubed,
        MurasugiClass::Omega5 { n: 1, q } => LinkName::Pretzel { p: q + 2 },
        MurasugiClass::Omega4 { n: 1, p: 2 } => LinkName::sum(2, 2),
        MurasugiClass::Omega6 { n: 1, pairs } => match pairs.as_slice() {
            [(2, q)] => LinkName::sum(2, q + 2),
            [(1, a), (1, b)] => LinkName::sum(a + 2, b + 2),
            _ => LinkName::Unknown,
        },
        _ => LinkName::Unknown,
    }
}

fn counts(w: &BraidWord) -> [usize; 2] {
    let mut c = [0; 2];
    for &l in w.letters() {
        c[l.unsigned_abs() as usize - 1] += 1;
    }
    c
}

fn positive_case(w: &BraidWord, positive: &BraidWord, flipped: bool) -> Result<ThreeBraidCrossing, TheoremError> {
    let class = murasugi_class(w)?;
    if let Some((cr, index, name)) = low_index_exception(&class) {
        return Ok(ThreeBraidCrossing {
            crossing_number: CrossingNumber::exact(cr),
            braid_index: Some(index),
            name,
            mirror: flipped,
            class: Some(class),
        });
    }
    let c = counts(positive);
    let (crossing_number, braid_index) = if c[0] >= 2 && c[1] >= 2 {
        (CrossingNumber::exact(positive.len() as i64), Some(3))
    } else {
        (CrossingNumber { value: positive.len() as i64, status: CrossingStatus::UpperBound }, None)
    };
    Ok(ThreeBraidCrossing { crossing_number, braid_index, name: positive_class_name(&class), mirror: flipped, class: Some(class) })
}

/// Crossing number, braid index and name of the closure of a 3-braid word.
///
/// Closures conjugate to positive (or negative) braids are handled through
/// their Murasugi class; other homogeneous words give reduced alternating
/// diagrams once a lone generator is destabilized. Anything else only gets
/// the length of its cyclically reduced form as an upper bound.
pub fn crossing_number_3braid(w: &BraidWord) -> Result<ThreeBraidCrossing, TheoremError> {
    if w.strands() != 3 {
        return Err(TheoremError::NotThreeStrands(w.strands()));
    }
    if !closure_stats(w).connected_surface {
        return Err(TheoremError::Split(w.to_string()));
    }
    if let (true, Some(positive)) = conjugate_to_positive(w)? {
        return positive_case(w, &positive, false);
    }
    let m = mirror(w);
    if let (true, Some(positive)) = conjugate_to_positive(&m)? {
        return positive_case(&m, &positive, true);
    }
    let reduced = free_reduce(w, true);
    if word_flags(&reduced).homogeneous {
        let c = counts(&reduced);
        if c[0] >= 2 && c[1] >= 2 {
            return Ok(ThreeBraidCrossing {
                crossing_number: CrossingNumber::exact(reduced.len() as i64),
                braid_index: Some(3),
                name: LinkName::Unknown,
                mirror: false,
                class: None,
            });
        }
        // a lone generator destabilizes to a 2-braid σ^k
        let lone = if c[0] == 1 { 1 } else { 2 };
        let k: i64 = reduced.letters().iter().filter(|l| l.abs() != lone).map(|l| i64::from(l.signum())).sum();
        let c = k.unsigned_abs() as u32;
        let (cr, index) = if c <= 1 { (0, 1) } else { (i64::from(c), 2) };
        return Ok(ThreeBraidCrossing {
            crossing_number: CrossingNumber::exact(cr),
            braid_index: Some(index),
            name: LinkName::torus2(c),
            mirror: k < 0 && c > 1,
            class: None,
        });
    }
    Ok(ThreeBraidCrossing {
        crossing_number: CrossingNumber { value: reduced.len() as i64, status: CrossingStatus::UpperBound },
        braid_index: None,
        name: LinkName::Unknown,
        mirror: false,
        class: None,
    })
}

/// Full report for the closure of a braid word with a connected canonical surface.
pub fn link_report(w: &BraidWord) -> Result<LinkReport, TheoremError> {
    let stats = closure_stats(w);
    let (sigma, nullity) = signature_nullity_of_closure(w)?;
    let (name, mirror, crossing_number, braid_index) = match w.strands() {
        1 => (LinkName::Unknot, false, Some(CrossingNumber::exact(0)), Some(1)),
        2 => {
            let k: i64 = free_reduce(w, true).letters().iter().map(|l| i64::from(l.signum())).sum();
            let c = k.unsigned_abs() as u32;
            let (cr, index) = if c <= 1 { (0, 1) } else { (i64::from(c), 2) };
            (LinkName::torus2(c), k < 0 && c > 1, Some(CrossingNumber::exact(cr)), Some(index))
        }
        3 => {
            let t = crossing_number_3braid(w)?;
            (t.name, t.mirror, Some(t.crossing_number), t.braid_index)
        }
        _ => {
            let bound = free_reduce(w, true).len() as i64;
            (LinkName::Unknown, false, Some(CrossingNumber { value: bound, status: CrossingStatus::UpperBound }), None)
        }
    };
    Ok(LinkReport { name, mirror, sigma, nullity, components: stats.components, crossing_number, braid_index })
}

/// Report for a Conway diagram: crossing number of the reduced alternating
/// diagram and the Goeritz signature.
pub fn link_report_two_bridge(d: &ConwayDiagram) -> Result<LinkReport, TheoremError> {
    let err = |e: crate::twobridge::TwoBridgeError| TheoremError::InvalidParameter(e.to_string());
    let (numerator, denominator) = fraction(d).map_err(err)?;
    let (sigma, nullity) = gl_signature(d).map_err(err)?;
    let cr = alternating_crossing_number(d).map_err(err)?;
    Ok(LinkReport {
        name: LinkName::TwoBridge { numerator, denominator },
        mirror: false,
        sigma,
        nullity,
        components: d.components().map_err(err)?,
        crossing_number: Some(CrossingNumber::exact(cr)),
        braid_index: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[i32]) -> BraidWord {
        BraidWord::new(3, letters.to_vec()).unwrap()
    }

    fn delta2(tail: &[i32]) -> BraidWord {
        let mut v = vec![1, 2, 1, 1, 2, 1];
        v.extend_from_slice(tail);
        w(&v)
    }

    #[test]
    fn spec_examples() {
        let t = crossing_number_3braid(&delta2(&[])).unwrap();
        assert_eq!((t.crossing_number.value, t.braid_index, &t.name), (6, Some(3), &LinkName::Torus { p: 3, q: 3 }));
        assert_eq!(t.crossing_number.status, CrossingStatus::Exact);

        let t = crossing_number_3braid(&w(&[1, 2])).unwrap();
        assert_eq!((t.crossing_number.value, t.braid_index, &t.name), (0, Some(1), &LinkName::Unknot));

        let t = crossing_number_3braid(&delta2(&[-1, 2, 2, 2])).unwrap();
        assert_eq!((t.crossing_number.value, &t.name), (7, &LinkName::Torus { p: 2, q: 7 }));
    }

    #[test]
    fn low_index_exceptions() {
        let t = crossing_number_3braid(&w(&[1, 2, 1, 2])).unwrap();
        assert_eq!((t.crossing_number.value, &t.name), (3, &LinkName::Torus { p: 2, q: 3 }));
        let t = crossing_number_3braid(&w(&[1, 2, 1])).unwrap();
        assert_eq!((t.crossing_number.value, &t.name), (2, &LinkName::Torus { p: 2, q: 2 }));
        let t = crossing_number_3braid(&delta2(&[-1])).unwrap();
        assert_eq!((t.crossing_number.value, &t.name), (4, &LinkName::Torus { p: 2, q: 4 }));
        let t = crossing_number_3braid(&w(&[1, 1, 1, 1, 1, 2])).unwrap();
        assert_eq!((t.crossing_number.value, t.braid_index, &t.name), (5, Some(2), &LinkName::Torus { p: 2, q: 5 }));
    }

    #[test]
    fn named_positive_closures() {
        let cases: Vec<(BraidWord, i64, LinkName)> = vec![
            (delta2(&[1, 2]), 8, LinkName::Torus { p: 3, q: 4 }),
            (delta2(&[1, 2, 1, 2]), 10, LinkName::Torus { p: 3, q: 5 }),
            (w(&[1, 2, 1, 1, 2, 1, 1, 2, 1]), 9, LinkName::DeltaCubed),
            (delta2(&[2, 2]), 8, LinkName::Pretzel { p: 4 }),
            (w(&[1, 1, 1, 2, 2]), 5, LinkName::ConnectedSum { a: 2, b: 3 }),
            (w(&[1, 1, 2, 2]), 4, LinkName::ConnectedSum { a: 2, b: 2 }),
            (w(&[1, 1, 1, 2, 2, 2, 2]), 7, LinkName::ConnectedSum { a: 3, b: 4 }),
        ];
        for (word, cr, name) in cases {
            let t = crossing_number_3braid(&word).unwrap();
            assert_eq!((t.crossing_number, &t.name), (CrossingNumber::exact(cr), &name), "{word}");
        }
    }

    #[test]
    fn mirrors_and_alternating_words() {
        let t = crossing_number_3braid(&w(&[-1, -1, -1, -2])).unwrap();
        assert!(t.mirror);
        assert_eq!((t.crossing_number.value, &t.name), (3, &LinkName::Torus { p: 2, q: 3 }));

        let fig8 = crossing_number_3braid(&w(&[1, -2, 1, -2])).unwrap();
        assert_eq!(fig8.crossing_number, CrossingNumber::exact(4));
        assert_eq!(fig8.braid_index, Some(3));

        let t = crossing_number_3braid(&w(&[-1, 2, 2, 2])).unwrap();
        assert_eq!((t.crossing_number.value, &t.name, t.mirror), (3, &LinkName::Torus { p: 2, q: 3 }, false));

        let t = crossing_number_3braid(&w(&[1, -2, 1, 2, 1, -2])).unwrap();
        assert_eq!(t.crossing_number.status, CrossingStatus::UpperBound);

        assert!(matches!(crossing_number_3braid(&w(&[1, 1])), Err(TheoremError::Split(_))));
        assert!(matches!(
            crossing_number_3braid(&BraidWord::new(2, vec![1]).unwrap()),
            Err(TheoremError::NotThreeStrands(2))
        ));
    }

    #[test]
    fn reports_satisfy_the_surface_bound() {
        let words = [
            delta2(&[]),
            delta2(&[1, 2]),
            w(&[1, -2, 1, -2]),
            w(&[1, 1, 2, 2]),
            delta2(&[-1, 2, 2]),
            w(&[1, 2]),
            w(&[-1, -1, -2, -2, -2]),
        ];
        for word in words {
            let r = link_report(&word).unwrap();
            let cr = r.crossing_number.unwrap();
            assert_eq!(cr.status, CrossingStatus::Exact);
            let index = r.braid_index.unwrap();
            assert!(r.sigma.abs() + r.nullity <= cr.value - index + 1, "{word}: {r:?}");
        }
        let r = link_report(&BraidWord::new(2, vec![-1, -1, -1]).unwrap()).unwrap();
        assert_eq!(r.label(), "mirror of T(2,3)");
        assert_eq!(r.sigma, 2);
        let r = link_report_two_bridge(&"C(2,1,1,1,2)@5p".parse().unwrap()).unwrap();
        assert_eq!((r.crossing_number.unwrap().value, r.sigma), (7, 0));
        assert_eq!(r.name.to_string(), "2-bridge 21/8");
    }
}
