//! Conjugacy invariants from cycling and decycling: maximal `inf`, the super
//! summit set, and the conjugacy test built on it.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::normal_form::{left_canonical_form, left_canonical_form_unchecked, require_three, GarsideNormalForm};
use super::simple::ALL_SIMPLES;
use super::GarsideError;
use crate::braid::{word_flags, BraidWord};

/// Hard cap on elements visited by any orbit or summit-set search.
pub const EXPLORATION_CAP: usize = 1_000_000;

/// Cycles until the cycling orbit closes without raising `inf`, restarting
/// the orbit whenever `inf` goes up. The result has maximal `inf` in its
/// conjugacy class.
pub(crate) fn maximize_inf(start: GarsideNormalForm) -> Result<GarsideNormalForm, GarsideError> {
    let mut current = start;
    let mut seen = HashSet::new();
    let mut steps = 0;
    loop {
        if !seen.insert(current.clone()) {
            return Ok(current);
        }
        let Some(next) = current.cycle() else {
            return Ok(current);
        };
        steps += 1;
        if steps > EXPLORATION_CAP {
            return Err(GarsideError::ExplorationCap);
        }
        if next.inf() > current.inf() {
            seen.clear();
        }
        current = next;
    }
}

/// Decycles (keeping `inf`) until `sup` can no longer be lowered.
pub(crate) fn minimize_sup(start: GarsideNormalForm) -> Result<GarsideNormalForm, GarsideError> {
    let mut current = start;
    let mut seen = HashSet::new();
    let mut steps = 0;
    loop {
        if !seen.insert(current.clone()) {
            return Ok(current);
        }
        let Some(next) = current.decycle() else {
            return Ok(current);
        };
        steps += 1;
        if steps > EXPLORATION_CAP {
            return Err(GarsideError::ExplorationCap);
        }
        debug_assert!(next.inf() >= current.inf(), "decycling lowered inf");
        if next.sup() < current.sup() || next.inf() > current.inf() {
            seen.clear();
        }
        current = next;
    }
}

/// Some element of the super summit set of `nf`'s conjugacy class.
pub(crate) fn summit_representative(nf: GarsideNormalForm) -> Result<GarsideNormalForm, GarsideError> {
    let mut current = nf;
    loop {
        let next = minimize_sup(maximize_inf(current.clone())?)?;
        if next.inf() == current.inf() && next.sup() == current.sup() {
            return Ok(next);
        }
        current = next;
    }
}

/// The full super summit set: every conjugate with maximal `inf` and minimal `sup`.
///
/// Any two elements of the set are joined by a chain of conjugations by
/// permutation braids inside the set, so a breadth-first search from one
/// representative reaches all of it.
pub fn super_summit_set(w: &BraidWord) -> Result<BTreeSet<GarsideNormalForm>, GarsideError> {
    let nf = left_canonical_form(w)?;
    super_summit_set_of(summit_representative(nf)?)
}

pub(crate) fn super_summit_set_of(rep: GarsideNormalForm) -> Result<BTreeSet<GarsideNormalForm>, GarsideError> {
    let (inf, sup) = (rep.inf(), rep.sup());
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::new();
    set.insert(rep.clone());
    queue.push_back(rep);
    while let Some(x) = queue.pop_front() {
        for s in ALL_SIMPLES.iter().skip(1) {
            let y = x.conjugate_by_simple(*s);
            if y.inf() == inf && y.sup() == sup && !set.contains(&y) {
                if set.len() >= EXPLORATION_CAP {
                    return Err(GarsideError::ExplorationCap);
                }
                set.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(set)
}

/// Maximal `inf` over the conjugacy class of `w`, with a conjugate attaining it.
pub fn summit_inf(w: &BraidWord) -> Result<(i64, BraidWord), GarsideError> {
    let nf = maximize_inf(left_canonical_form(w)?)?;
    Ok((nf.inf(), nf.to_word()))
}

/// Summit `(inf, sup)`: the pair shared by every element of the super summit set.
pub fn summit_inf_sup(w: &BraidWord) -> Result<(i64, i64), GarsideError> {
    let rep = summit_representative(left_canonical_form(w)?)?;
    Ok((rep.inf(), rep.sup()))
}

/// Whether `w` is conjugate to a positive braid, with a positive conjugate when it is.
pub fn conjugate_to_positive(w: &BraidWord) -> Result<(bool, Option<BraidWord>), GarsideError> {
    let (inf, witness) = summit_inf(w)?;
    if inf >= 0 {
        Ok((true, Some(witness)))
    } else {
        Ok((false, None))
    }
}

/// Whether two 3-braid words are conjugate in `B₃`.
pub fn conjugacy_test(a: &BraidWord, b: &BraidWord) -> Result<bool, GarsideError> {
    require_three(a)?;
    require_three(b)?;
    if word_flags(a).exponent_sum != word_flags(b).exponent_sum {
        return Ok(false);
    }
    let ra = summit_representative(left_canonical_form_unchecked(a))?;
    let rb = summit_representative(left_canonical_form_unchecked(b))?;
    if ra.inf() != rb.inf() || ra.sup() != rb.sup() {
        return Ok(false);
    }
    if ra == rb {
        return Ok(true);
    }
    Ok(super_summit_set_of(ra)?.contains(&rb))
}
