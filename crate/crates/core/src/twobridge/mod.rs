//! 2-bridge links in Conway notation.
//!
//! `C(a₁, …, a_m)` is drawn as the 4-plat `σ₂^{a₁} σ₁^{-a₂} σ₂^{a₃} ⋯` with
//! caps joining ends 1–2 and 3–4 at both top and bottom. The diagram is
//! alternating and, for positive coefficients, reduced. Each component is
//! oriented to run down the braid at the first crossing it meets; with that
//! choice the three parametrized families below have the signatures listed
//! in [`family_invariants`].

mod geography;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::braid::ParseError;
use crate::planar::{Closure, Diagram, DiagramError};

pub use geography::{geography_realizer, Realization, Witness};

/// Coefficients accepted by the parser.
pub const MAX_COEFFICIENT: u32 = 1_000_000;
pub const MAX_COEFFICIENTS: usize = 64;
/// Largest diagram handed to the signature engine.
pub const MAX_DIAGRAM_CROSSINGS: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoBridgeError {
    #[error("Conway notation needs at least one coefficient")]
    Empty,
    #[error("Conway coefficients must be positive")]
    ZeroCoefficient,
    #[error("{coeffs:?} does not have the shape of family {family}")]
    FamilyShape { family: Family, coeffs: Vec<u32> },
    #[error("no closed form for a generic Conway diagram; use gl_signature")]
    NoClosedForm,
    #[error("{0} is a 2-component link; a generic Conway diagram has no fixed orientation")]
    LinkNeedsOrientation(String),
    #[error("diagram of {0} is not reduced alternating")]
    NotReduced(String),
    #[error("continued fraction of {0} overflows")]
    Overflow(String),
    #[error("{0} has more than {MAX_DIAGRAM_CROSSINGS} crossings")]
    TooLarge(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Orientation pattern attached to a Conway diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Family {
    /// `C(p, 2q, r)`
    #[serde(rename = "pqr")]
    Pqr,
    /// `C(p, 2q−1, 2r)`
    #[serde(rename = "pq2r")]
    Pq2r,
    /// `C(2p, 2q−1, 1, 2r−1, 2s)`
    #[serde(rename = "5p")]
    FiveParam,
    #[serde(rename = "generic")]
    Generic,
}

impl Family {
    pub fn suffix(self) -> &'static str {
        match self {
            Family::Pqr => "pqr",
            Family::Pq2r => "pq2r",
            Family::FiveParam => "5p",
            Family::Generic => "generic",
        }
    }

    fn from_suffix(s: &str) -> Option<Family> {
        [Family::Pqr, Family::Pq2r, Family::FiveParam, Family::Generic].into_iter().find(|f| f.suffix() == s)
    }

    fn admits(self, c: &[u32]) -> bool {
        let even = |x: u32| x % 2 == 0;
        match self {
            Family::Pqr => c.len() == 3 && even(c[1]),
            Family::Pq2r => c.len() == 3 && !even(c[1]) && even(c[2]),
            Family::FiveParam => c.len() == 5 && even(c[0]) && !even(c[1]) && c[2] == 1 && !even(c[3]) && even(c[4]),
            Family::Generic => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.suffix())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct ConwayDiagram {
    coeffs: Vec<u32>,
    family: Family,
}

impl ConwayDiagram {
    pub fn new(coeffs: Vec<u32>, family: Family) -> Result<ConwayDiagram, TwoBridgeError> {
        if coeffs.is_empty() {
            return Err(TwoBridgeError::Empty);
        }
        if coeffs.contains(&0) {
            return Err(TwoBridgeError::ZeroCoefficient);
        }
        if !family.admits(&coeffs) {
            return Err(TwoBridgeError::FamilyShape { family, coeffs });
        }
        Ok(ConwayDiagram { coeffs, family })
    }

    pub fn generic(coeffs: Vec<u32>) -> Result<ConwayDiagram, TwoBridgeError> {
        ConwayDiagram::new(coeffs, Family::Generic)
    }

    /// `C(p, 2q, r)`.
    pub fn pqr(p: u32, q: u32, r: u32) -> Result<ConwayDiagram, TwoBridgeError> {
        ConwayDiagram::new(vec![p, even(q), r], Family::Pqr)
    }

    /// `C(p, 2q−1, 2r)`.
    pub fn pq2r(p: u32, q: u32, r: u32) -> Result<ConwayDiagram, TwoBridgeError> {
        ConwayDiagram::new(vec![p, odd(q), even(r)], Family::Pq2r)
    }

    /// `C(2p, 2q−1, 1, 2r−1, 2s)`.
    pub fn five_param(p: u32, q: u32, r: u32, s: u32) -> Result<ConwayDiagram, TwoBridgeError> {
        ConwayDiagram::new(vec![even(p), odd(q), 1, odd(r), even(s)], Family::FiveParam)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Family parameters `(p, q, r)` or `(p, q, r, s)`; empty for generic diagrams.
    pub fn params(&self) -> Vec<u32> {
        let c = &self.coeffs;
        match self.family {
            Family::Pqr => vec![c[0], c[1] / 2, c[2]],
            Family::Pq2r => vec![c[0], (c[1] + 1) / 2, c[2] / 2],
            Family::FiveParam => vec![c[0] / 2, (c[1] + 1) / 2, (c[3] + 1) / 2, c[4] / 2],
            Family::Generic => Vec::new(),
        }
    }

    /// 1 for a knot, 2 for a 2-component link.
    pub fn components(&self) -> Result<usize, TwoBridgeError> {
        let (num, _) = fraction(self)?;
        Ok(if num % 2 == 0 { 2 } else { 1 })
    }

    /// Letters of the 4-plat; even-length notations are first rewritten to odd length.
    pub fn plat_word(&self) -> Vec<i32> {
        let mut c = self.coeffs.clone();
        if c.len() % 2 == 0 {
            let last = c.pop().expect("nonempty");
            if last == 1 {
                *c.last_mut().expect("even length ≥ 2") += 1;
            } else {
                c.push(last - 1);
                c.push(1);
            }
        }
        let mut letters = Vec::new();
        for (k, &a) in c.iter().enumerate() {
            let letter = if k % 2 == 0 { 2 } else { -1 };
            letters.extend(std::iter::repeat(letter).take(a as usize));
        }
        letters
    }

    /// Oriented plat diagram.
    pub fn diagram(&self) -> Result<Diagram, TwoBridgeError> {
        if self.coeffs.iter().map(|&a| a as u64).sum::<u64>() > MAX_DIAGRAM_CROSSINGS {
            return Err(TwoBridgeError::TooLarge(self.to_string()));
        }
        Ok(Diagram::from_braid(4, &self.plat_word(), Closure::Plat)?)
    }
}

// out-of-range parameters map to 0, which `new` rejects
fn even(x: u32) -> u32 {
    x.checked_mul(2).unwrap_or(0)
}

fn odd(x: u32) -> u32 {
    x.checked_mul(2).and_then(|y| y.checked_sub(1)).unwrap_or(0)
}

impl fmt::Display for ConwayDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(|a| a.to_string()).collect();
        write!(f, "C({})", body.join(","))?;
        if self.family != Family::Generic {
            write!(f, "@{}", self.family)?;
        }
        Ok(())
    }
}

impl FromStr for ConwayDiagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_conway(s)
    }
}

/// Reads `C(a1,a2,...)` with an optional `@pqr`, `@pq2r`, `@5p` or `@generic` suffix.
pub fn parse_conway(text: &str) -> Result<ConwayDiagram, ParseError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    let rest = body.strip_prefix('C').ok_or_else(|| ParseError::new("Conway notation starts with `C(`", lead))?;
    let after_c = lead + 1;
    let inner_start = rest.len() - rest.trim_start().len();
    let rest = rest.trim_start();
    let rest = rest.strip_prefix('(').ok_or_else(|| ParseError::new("expected `(`", after_c + inner_start))?;
    let open = after_c + inner_start + 1;
    let close = rest.find(')').ok_or_else(|| ParseError::new("missing `)`", text.len()))?;
    let mut coeffs = Vec::new();
    let mut pos = open;
    for piece in rest[..close].split(',') {
        let trimmed = piece.trim();
        let at = pos + (piece.len() - piece.trim_start().len());
        let a: u32 = trimmed.parse().map_err(|_| ParseError::new(format!("invalid coefficient `{trimmed}`"), at))?;
        if a == 0 || a > MAX_COEFFICIENT {
            return Err(ParseError::new(format!("coefficient must be between 1 and {MAX_COEFFICIENT}"), at));
        }
        coeffs.push(a);
        if coeffs.len() > MAX_COEFFICIENTS {
            return Err(ParseError::new(format!("more than {MAX_COEFFICIENTS} coefficients"), at));
        }
        pos += piece.len() + 1;
    }
    let tail_at = open + close + 1;
    let tail = rest[close + 1..].trim();
    let family = if tail.is_empty() {
        Family::Generic
    } else {
        let name = tail.strip_prefix('@').ok_or_else(|| ParseError::new("expected `@family` after `)`", tail_at))?;
        Family::from_suffix(name.trim()).ok_or_else(|| ParseError::new(format!("unknown family `{name}`"), tail_at))?
    };
    ConwayDiagram::new(coeffs, family).map_err(|e| ParseError::new(e.to_string(), lead))
}

/// Value of the continued fraction `a₁ + 1/(a₂ + 1/(⋯))`, in lowest terms.
pub fn fraction(d: &ConwayDiagram) -> Result<(u128, u128), TwoBridgeError> {
    let overflow = || TwoBridgeError::Overflow(d.to_string());
    let mut iter = d.coeffs.iter().rev();
    let mut num = *iter.next().ok_or(TwoBridgeError::Empty)? as u128;
    let mut den = 1u128;
    for &a in iter {
        let next = (a as u128).checked_mul(num).and_then(|x| x.checked_add(den)).ok_or_else(overflow)?;
        den = num;
        num = next;
    }
    Ok((num, den))
}

/// `(cr, σ)` of a family member, from the closed formulas.
pub fn family_invariants(d: &ConwayDiagram) -> Result<(i64, i64), TwoBridgeError> {
    let p: Vec<i64> = d.params().into_iter().map(i64::from).collect();
    match d.family {
        Family::Pqr => Ok((p[0] + 2 * p[1] + p[2], 1 - p[0] - p[2])),
        Family::Pq2r => Ok((p[0] + 2 * (p[1] + p[2]) - 1, 1 - p[0])),
        Family::FiveParam => Ok((2 * (p[0] + p[1] + p[2] + p[3]) - 1, 0)),
        Family::Generic => Err(TwoBridgeError::NoClosedForm),
    }
}

/// `(σ, n)` from the Goeritz form of the plat diagram.
pub fn gl_signature(d: &ConwayDiagram) -> Result<(i64, i64), TwoBridgeError> {
    if d.family == Family::Generic && d.components()? == 2 {
        return Err(TwoBridgeError::LinkNeedsOrientation(d.to_string()));
    }
    Ok(d.diagram()?.signature_nullity()?)
}

/// Crossing count of the plat diagram after checking it is reduced and alternating.
pub fn alternating_crossing_number(d: &ConwayDiagram) -> Result<i64, TwoBridgeError> {
    let diagram = d.diagram()?;
    if !diagram.is_alternating() || !diagram.nugatory_crossings().is_empty() || !diagram.is_connected() {
        return Err(TwoBridgeError::NotReduced(d.to_string()));
    }
    Ok(diagram.crossing_count() as i64)
}
