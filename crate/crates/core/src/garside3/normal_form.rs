use std::fmt;
use std::str::FromStr;

use super::simple::{left_weight, PermutationBraid};
use super::GarsideError;
use crate::braid::{BraidWord, ParseError};

/// Left-canonical form `Δ^r · P₁ ··· P_k` of an element of `B₃`.
///
/// No factor is `e` or `Δ`, and consecutive factors are left-weighted, so
/// `inf = r` and `sup = r + k`. Two words are equal in `B₃` exactly when
/// their forms are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GarsideNormalForm {
    pub delta_power: i64,
    pub factors: Vec<PermutationBraid>,
}

pub(crate) fn require_three(w: &BraidWord) -> Result<(), GarsideError> {
    if w.strands() == 3 {
        Ok(())
    } else {
        Err(GarsideError::NotThreeStrands(w.strands()))
    }
}

impl GarsideNormalForm {
    pub fn identity() -> Self {
        GarsideNormalForm { delta_power: 0, factors: Vec::new() }
    }

    pub fn delta_power(r: i64) -> Self {
        GarsideNormalForm { delta_power: r, factors: Vec::new() }
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Word `Δ^r P₁ ··· P_k` in the Artin generators.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        let delta: [i32; 3] = if self.delta_power >= 0 { [1, 2, 1] } else { [-1, -2, -1] };
        for _ in 0..self.delta_power.unsigned_abs() {
            letters.extend_from_slice(&delta);
        }
        for f in &self.factors {
            letters.extend_from_slice(f.letters());
        }
        BraidWord::new(3, letters).expect("B3 letters")
    }

    /// Multiplies on the right by a permutation braid, keeping the form canonical.
    pub fn push(&mut self, s: PermutationBraid) {
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        self.tidy();
    }

    /// Multiplies on the right by `Δ^m`.
    fn push_delta_power(&mut self, m: i64) {
        self.delta_power += m;
        if m.rem_euclid(2) == 1 {
            for f in &mut self.factors {
                *f = f.tau();
            }
        }
    }

    fn tidy(&mut self) {
        let lead = self.factors.iter().take_while(|&&f| f == PermutationBraid::Delta).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.delta_power += lead as i64;
        }
        while self.factors.last() == Some(&PermutationBraid::E) {
            self.factors.pop();
        }
    }

    /// Right multiplication by one Artin letter.
    pub fn push_letter(&mut self, letter: i32) {
        let i = letter.abs();
        if letter > 0 {
            self.push(PermutationBraid::generator(i));
        } else {
            // σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹), with Δσ₁⁻¹ = σ₁σ₂ and Δσ₂⁻¹ = σ₂σ₁
            self.push_delta_power(-1);
            self.push(if i == 1 { PermutationBraid::AB } else { PermutationBraid::BA });
        }
    }

    pub fn mul(&self, other: &GarsideNormalForm) -> GarsideNormalForm {
        let mut out = self.clone();
        out.push_delta_power(other.delta_power);
        for &f in &other.factors {
            out.push(f);
        }
        out
    }

    pub fn inverse(&self) -> GarsideNormalForm {
        left_canonical_form_unchecked(&self.to_word().inverse())
    }

    pub fn tau(&self) -> GarsideNormalForm {
        GarsideNormalForm { delta_power: self.delta_power, factors: self.factors.iter().map(|f| f.tau()).collect() }
    }

    /// `s⁻¹ · self · s` for a permutation braid `s`.
    pub fn conjugate_by_simple(&self, s: PermutationBraid) -> GarsideNormalForm {
        let mut word = BraidWord::new(3, s.letters().to_vec()).expect("B3 letters").inverse();
        word = word.concat(&self.to_word());
        let mut nf = left_canonical_form_unchecked(&word);
        for &l in s.letters() {
            nf.push_letter(l);
        }
        nf
    }

    /// `Δ^r P₂ ··· P_k τ^r(P₁)`, a conjugate of `self`. `None` for pure `Δ` powers.
    pub fn cycle(&self) -> Option<GarsideNormalForm> {
        let (&first, rest) = self.factors.split_first()?;
        let mut out = GarsideNormalForm::delta_power(self.delta_power);
        for &f in rest {
            out.push(f);
        }
        out.push(first.tau_pow(self.delta_power));
        Some(out)
    }

    /// `P_k Δ^r P₁ ··· P_{k−1}`, the sup-lowering counterpart of cycling.
    pub(crate) fn decycle(&self) -> Option<GarsideNormalForm> {
        let (&last, rest) = self.factors.split_last()?;
        let mut out = left_canonical_form_unchecked(&BraidWord::new(3, last.letters().to_vec()).expect("B3 letters"));
        out.push_delta_power(self.delta_power);
        for &f in rest {
            out.push(f);
        }
        Some(out)
    }
}

impl fmt::Display for GarsideNormalForm {
    /// `D^r | F1.F2...Fk` with factor names `a, b, ab, ba`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta_power)?;
        for (i, factor) in self.factors.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "." })?;
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl FromStr for GarsideNormalForm {
    type Err = ParseError;

    /// Reads the printed form back; the factors are re-normalized, so any
    /// sequence of permutation-braid names is accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let rest = s.strip_prefix("D^").ok_or_else(|| ParseError::new("normal form must start with `D^`", 0))?;
        let bar = rest.find('|').ok_or_else(|| ParseError::new("missing `|` after the Δ power", s.len()))?;
        let power: i64 = rest[..bar]
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("invalid Δ power `{}`", rest[..bar].trim()), 2))?;
        if power.unsigned_abs() > 1 << 16 {
            return Err(ParseError::new("Δ power out of range", 2));
        }
        let mut nf = GarsideNormalForm::delta_power(power);
        let body = rest[bar + 1..].trim();
        if !body.is_empty() {
            let base = s.len() - body.len();
            let mut at = base;
            for name in body.split('.') {
                let factor = PermutationBraid::from_name(name.trim())
                    .ok_or_else(|| ParseError::new(format!("unknown factor `{name}`"), at))?;
                nf.push(factor);
                at += name.len() + 1;
            }
        }
        Ok(nf)
    }
}

pub(crate) fn left_canonical_form_unchecked(w: &BraidWord) -> GarsideNormalForm {
    let mut nf = GarsideNormalForm::identity();
    for &l in w.letters() {
        nf.push_letter(l);
    }
    nf
}

/// Left-canonical form of a 3-braid word.
pub fn left_canonical_form(w: &BraidWord) -> Result<GarsideNormalForm, GarsideError> {
    require_three(w)?;
    Ok(left_canonical_form_unchecked(w))
}

/// `(inf, sup)` of the element represented by `w`.
pub fn inf_sup(w: &BraidWord) -> Result<(i64, i64), GarsideError> {
    let nf = left_canonical_form(w)?;
    Ok((nf.inf(), nf.sup()))
}

/// The automorphism `σ₁ ↔ σ₂` applied letter by letter.
pub fn tau(w: &BraidWord) -> Result<BraidWord, GarsideError> {
    require_three(w)?;
    let letters = w.letters().iter().map(|&l| l.signum() * (3 - l.abs())).collect();
    Ok(BraidWord::new(3, letters).expect("B3 letters"))
}

/// Word of the cycled normal form.
pub fn cycling(w: &BraidWord) -> Result<BraidWord, GarsideError> {
    let nf = left_canonical_form(w)?;
    nf.cycle().map(|c| c.to_word()).ok_or(GarsideError::PureDeltaPower)
}

/// Equality in `B₃`.
pub fn equal_in_b3(a: &BraidWord, b: &BraidWord) -> Result<bool, GarsideError> {
    Ok(left_canonical_form(a)? == left_canonical_form(b)?)
}
