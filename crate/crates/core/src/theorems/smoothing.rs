//! Smoothing a crossing of a braid closure, and the smoothings of `T(2,c)`.

use super::identify::{crossing_number_3braid, link_report, LinkName};
use super::TheoremError;
use crate::braid::BraidWord;
use crate::garside3::conjugacy_test;
use crate::seifert::signature_nullity_of_closure;

/// Coherent smoothing of the crossing at `position`: the letter is deleted.
pub fn smooth(w: &BraidWord, position: usize) -> Result<BraidWord, TheoremError> {
    w.delete(position).map_err(|_| TheoremError::PositionOutOfRange { position, len: w.len() })
}

/// A smoothing of a diagram of `T(2,c)` that produces `name`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SmoothingCandidate {
    pub name: LinkName,
    pub source: BraidWord,
    pub smoothed: BraidWord,
    /// Both closures were identified and their signatures recomputed.
    pub verified: bool,
}

fn torus2(c: u32) -> LinkName {
    if c <= 1 {
        LinkName::Unknot
    } else {
        LinkName::Torus { p: 2, q: c }
    }
}

fn word(strands: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord::new(strands, letters).expect("letters fit the strand count")
}

fn power(letter: i32, k: u32) -> impl Iterator<Item = i32> {
    std::iter::repeat(letter).take(k as usize)
}

fn sigma(w: &BraidWord) -> Result<i64, TheoremError> {
    Ok(signature_nullity_of_closure(w)?.0)
}

/// `T(2,c−1)` and every `T(2,c₁)#T(2,c₂)` with `c₁ + c₂ = c`, `c₁, c₂ > 1`,
/// each with a diagram of `T(2,c)` and a crossing whose smoothing gives it.
///
/// The connected sums come from `σ₁^{c₁−1} σ₂^{c₂} σ₁ σ₂`, which closes to
/// `T(2,c)`; dropping its last letter leaves a conjugate of `σ₁^{c₁} σ₂^{c₂}`.
pub fn t2c_smoothing_candidates(c: i64) -> Result<Vec<SmoothingCandidate>, TheoremError> {
    if c <= 1 {
        return Err(TheoremError::InvalidParameter(format!("T(2,c) smoothings need c > 1, got {c}")));
    }
    let c = u32::try_from(c).map_err(|_| TheoremError::InvalidParameter(format!("c = {c} is too large")))?;
    let t2c_sigma = 1 - i64::from(c);

    let source = word(2, power(1, c).collect());
    let smoothed = smooth(&source, 0)?;
    let name = torus2(c - 1);
    let before = link_report(&source)?;
    let after = link_report(&smoothed)?;
    let verified = before.name == torus2(c)
        && before.sigma == t2c_sigma
        && after.name == name
        && after.sigma == 1 - i64::from(c - 1).max(1);
    let mut out = vec![SmoothingCandidate { name, source, smoothed, verified }];

    for c1 in 2..=c / 2 {
        let c2 = c - c1;
        if c2 < 2 {
            continue;
        }
        let source = word(3, power(1, c1 - 1).chain(power(2, c2)).chain([1, 2]).collect());
        let smoothed = smooth(&source, source.len() - 1)?;
        let name = LinkName::ConnectedSum { a: c1, b: c2 };
        let target = word(3, power(1, c1).chain(power(2, c2)).collect());
        let verified = crossing_number_3braid(&source)?.name == torus2(c)
            && sigma(&source)? == t2c_sigma
            && conjugacy_test(&smoothed, &target)?
            && crossing_number_3braid(&smoothed)?.name == name
            && sigma(&smoothed)? == (1 - i64::from(c1)) + (1 - i64::from(c2));
        out.push(SmoothingCandidate { name, source, smoothed, verified });
    }
    Ok(out)
}
