//! Murasugi's seven conjugacy families of 3-braids.

use std::fmt;

use super::normal_form::{left_canonical_form, GarsideNormalForm};
use super::summit::{conjugacy_test, summit_representative};
use super::GarsideError;
use crate::braid::{word_flags, BraidWord};

/// Conjugacy family `Ω₀ … Ω₆` with its parameters. `n` is the exponent of `Δ²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(tag = "family")]
pub enum MurasugiClass {
    /// `Δ^{2n}`
    Omega0 { n: i64 },
    /// `Δ^{2n} σ₁σ₂`
    Omega1 { n: i64 },
    /// `Δ^{2n} (σ₁σ₂)²`
    Omega2 { n: i64 },
    /// `Δ^{2n+1}`
    Omega3 { n: i64 },
    /// `Δ^{2n} σ₁^{−p}`
    Omega4 { n: i64, p: u32 },
    /// `Δ^{2n} σ₂^q`
    Omega5 { n: i64, q: u32 },
    /// `Δ^{2n} σ₁^{−p₁}σ₂^{q₁} ··· σ₁^{−p_r}σ₂^{q_r}`, pairs listed as `(pᵢ, qᵢ)`
    Omega6 { n: i64, pairs: Vec<(u32, u32)> },
}

impl MurasugiClass {
    /// Ω6 with its pairs rotated into the lexicographically least cyclic order.
    pub fn omega6(n: i64, pairs: Vec<(u32, u32)>) -> MurasugiClass {
        MurasugiClass::Omega6 { n, pairs: least_rotation(pairs) }
    }

    pub fn family(&self) -> u8 {
        match self {
            MurasugiClass::Omega0 { .. } => 0,
            MurasugiClass::Omega1 { .. } => 1,
            MurasugiClass::Omega2 { .. } => 2,
            MurasugiClass::Omega3 { .. } => 3,
            MurasugiClass::Omega4 { .. } => 4,
            MurasugiClass::Omega5 { .. } => 5,
            MurasugiClass::Omega6 { .. } => 6,
        }
    }

    pub fn n(&self) -> i64 {
        match *self {
            MurasugiClass::Omega0 { n }
            | MurasugiClass::Omega1 { n }
            | MurasugiClass::Omega2 { n }
            | MurasugiClass::Omega3 { n }
            | MurasugiClass::Omega4 { n, .. }
            | MurasugiClass::Omega5 { n, .. }
            | MurasugiClass::Omega6 { n, .. } => n,
        }
    }

    /// Checks the parameter constraints of the family.
    pub fn is_valid(&self) -> bool {
        match self {
            MurasugiClass::Omega4 { p, .. } => *p >= 1,
            MurasugiClass::Omega5 { q, .. } => *q >= 1,
            MurasugiClass::Omega6 { pairs, .. } => !pairs.is_empty() && pairs.iter().all(|&(p, q)| p >= 1 && q >= 1),
            _ => true,
        }
    }

    /// The family's normal-form word.
    pub fn word(&self) -> BraidWord {
        let mut letters = Vec::new();
        let delta_power = match self {
            MurasugiClass::Omega3 { n } => 2 * n + 1,
            other => 2 * other.n(),
        };
        let delta: [i32; 3] = if delta_power >= 0 { [1, 2, 1] } else { [-1, -2, -1] };
        for _ in 0..delta_power.unsigned_abs() {
            letters.extend_from_slice(&delta);
        }
        match self {
            MurasugiClass::Omega1 { .. } => letters.extend([1, 2]),
            MurasugiClass::Omega2 { .. } => letters.extend([1, 2, 1, 2]),
            MurasugiClass::Omega4 { p, .. } => letters.extend(std::iter::repeat(-1).take(*p as usize)),
            MurasugiClass::Omega5 { q, .. } => letters.extend(std::iter::repeat(2).take(*q as usize)),
            MurasugiClass::Omega6 { pairs, .. } => {
                for &(p, q) in pairs {
                    letters.extend(std::iter::repeat(-1).take(p as usize));
                    letters.extend(std::iter::repeat(2).take(q as usize));
                }
            }
            _ => {}
        }
        BraidWord::new(3, letters).expect("B3 letters")
    }

    pub fn exponent_sum(&self) -> i64 {
        let n = self.n();
        match self {
            MurasugiClass::Omega0 { .. } => 6 * n,
            MurasugiClass::Omega1 { .. } => 6 * n + 2,
            MurasugiClass::Omega2 { .. } => 6 * n + 4,
            MurasugiClass::Omega3 { .. } => 6 * n + 3,
            MurasugiClass::Omega4 { p, .. } => 6 * n - *p as i64,
            MurasugiClass::Omega5 { q, .. } => 6 * n + *q as i64,
            MurasugiClass::Omega6 { pairs, .. } => 6 * n + pairs.iter().map(|&(p, q)| q as i64 - p as i64).sum::<i64>(),
        }
    }

    /// `Σ pᵢ` for Ω6, `p` for Ω4, zero otherwise.
    pub fn total_p(&self) -> u32 {
        match self {
            MurasugiClass::Omega4 { p, .. } => *p,
            MurasugiClass::Omega6 { pairs, .. } => pairs.iter().map(|pq| pq.0).sum(),
            _ => 0,
        }
    }
}

impl fmt::Display for MurasugiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MurasugiClass::Omega0 { n } => write!(f, "Omega0(n={n})"),
            MurasugiClass::Omega1 { n } => write!(f, "Omega1(n={n})"),
            MurasugiClass::Omega2 { n } => write!(f, "Omega2(n={n})"),
            MurasugiClass::Omega3 { n } => write!(f, "Omega3(n={n})"),
            MurasugiClass::Omega4 { n, p } => write!(f, "Omega4(n={n}, p={p})"),
            MurasugiClass::Omega5 { n, q } => write!(f, "Omega5(n={n}, q={q})"),
            MurasugiClass::Omega6 { n, pairs } => {
                write!(f, "Omega6(n={n}, pairs=[")?;
                for (i, (p, q)) in pairs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "({p},{q})")?;
                }
                f.write_str("])")
            }
        }
    }
}

fn least_rotation(pairs: Vec<(u32, u32)>) -> Vec<(u32, u32)> {
    (0..pairs.len().max(1))
        .map(|k| {
            let mut r = pairs.clone();
            if !r.is_empty() {
                r.rotate_left(k);
            }
            r
        })
        .min()
        .unwrap_or_default()
}

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if total < parts {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 1..=total - (parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Candidate normal forms sharing the summit `(inf, sup)` and exponent sum of a braid.
///
/// Summit data of each family: Ω0, Ω3 sit in `[r, r]`; Ω1 in `[2n, 2n+1]`;
/// Ω2 in `[2n+1, 2n+2]`; Ω4 in `[2n−p, 2n]`; Ω5 in `[2n, 2n+q]`;
/// Ω6 in `[2n−p, 2n+q]` with `p = Σpᵢ`, `q = Σqᵢ`.
fn candidates(inf: i64, sup: i64, exponent_sum: i64) -> Vec<MurasugiClass> {
    let len = sup - inf;
    let mut out = Vec::new();
    if len == 0 {
        if inf.rem_euclid(2) == 0 {
            out.push(MurasugiClass::Omega0 { n: inf / 2 });
        } else {
            out.push(MurasugiClass::Omega3 { n: (inf - 1).div_euclid(2) });
        }
    }
    if len == 1 {
        if inf.rem_euclid(2) == 0 {
            out.push(MurasugiClass::Omega1 { n: inf / 2 });
        } else {
            out.push(MurasugiClass::Omega2 { n: (inf - 1).div_euclid(2) });
        }
    }
    if len >= 1 {
        let p = len;
        if (inf + p).rem_euclid(2) == 0 {
            out.push(MurasugiClass::Omega4 { n: (inf + p) / 2, p: p as u32 });
        }
        if inf.rem_euclid(2) == 0 {
            out.push(MurasugiClass::Omega5 { n: inf / 2, q: len as u32 });
        }
    }
    // Ω6: 2n = inf + p, q = len − p, e = 6n + q − p  ⇒  p = e − 3·inf − len
    let p = exponent_sum - 3 * inf - len;
    let q = len - p;
    if p >= 1 && q >= 1 && (inf + p).rem_euclid(2) == 0 {
        let n = (inf + p) / 2;
        let mut seen = std::collections::BTreeSet::new();
        for r in 1..=p.min(q) as u32 {
            for ps in compositions(p as u32, r) {
                for qs in compositions(q as u32, r) {
                    let pairs = least_rotation(ps.iter().copied().zip(qs.iter().copied()).collect());
                    if seen.insert(pairs.clone()) {
                        out.push(MurasugiClass::Omega6 { n, pairs });
                    }
                }
            }
        }
    }
    out.retain(|c| c.exponent_sum() == exponent_sum);
    out
}

/// The Murasugi family and parameters of the conjugacy class of `w`.
pub fn murasugi_class(w: &BraidWord) -> Result<MurasugiClass, GarsideError> {
    let nf: GarsideNormalForm = left_canonical_form(w)?;
    let rep = summit_representative(nf)?;
    let e = word_flags(w).exponent_sum;
    let mut found = Vec::new();
    for candidate in candidates(rep.inf(), rep.sup(), e) {
        if conjugacy_test(w, &candidate.word())? {
            found.push(candidate);
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("one match")),
        0 => Err(GarsideError::Unclassified(w.to_string())),
        _ => Err(GarsideError::AmbiguousClass(w.to_string())),
    }
}
