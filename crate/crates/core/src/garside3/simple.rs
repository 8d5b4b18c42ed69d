use std::fmt;

/// The six positive braids between `e` and `Δ` in `B₃` (permutation braids).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum PermutationBraid {
    E,
    /// `σ₁`
    A,
    /// `σ₂`
    B,
    /// `σ₁σ₂`
    AB,
    /// `σ₂σ₁`
    BA,
    /// `Δ = σ₁σ₂σ₁`
    Delta,
}

use PermutationBraid::*;

pub const ALL_SIMPLES: [PermutationBraid; 6] = [E, A, B, AB, BA, Delta];

type Perm = [u8; 3];

fn compose(p: Perm, q: Perm) -> Perm {
    [p[q[0] as usize], p[q[1] as usize], p[q[2] as usize]]
}

const S1: Perm = [1, 0, 2];
const S2: Perm = [0, 2, 1];

fn inversions(p: Perm) -> u8 {
    let mut n = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

impl PermutationBraid {
    /// Positive word in generator indices.
    pub fn letters(self) -> &'static [i32] {
        match self {
            E => &[],
            A => &[1],
            B => &[2],
            AB => &[1, 2],
            BA => &[2, 1],
            Delta => &[1, 2, 1],
        }
    }

    pub fn len(self) -> usize {
        self.letters().len()
    }

    fn perm(self) -> Perm {
        self.letters().iter().fold([0, 1, 2], |p, &i| compose(p, if i == 1 { S1 } else { S2 }))
    }

    fn from_perm(p: Perm) -> PermutationBraid {
        *ALL_SIMPLES.iter().find(|s| s.perm() == p).expect("every permutation of three points is simple")
    }

    pub fn generator(i: i32) -> PermutationBraid {
        match i {
            1 => A,
            2 => B,
            _ => panic!("B3 has generators 1 and 2, got {i}"),
        }
    }

    /// Product when it stays simple (lengths add), otherwise `None`.
    pub fn mul(self, other: PermutationBraid) -> Option<PermutationBraid> {
        let p = compose(self.perm(), other.perm());
        (inversions(p) as usize == self.len() + other.len()).then(|| Self::from_perm(p))
    }

    /// `self⁻¹ · other` when `self` is a left divisor of `other`.
    pub fn left_quotient(self, other: PermutationBraid) -> Option<PermutationBraid> {
        ALL_SIMPLES.iter().copied().find(|&x| self.mul(x) == Some(other))
    }

    /// Starting set: generators `i` with `σ_i` a left divisor.
    pub fn starting_set(self) -> [bool; 2] {
        [1, 2].map(|i| PermutationBraid::generator(i).left_quotient(self).is_some())
    }

    /// Finishing set: generators `i` with `σ_i` a right divisor.
    pub fn finishing_set(self) -> [bool; 2] {
        [1, 2].map(|i| ALL_SIMPLES.iter().any(|&x| x.mul(PermutationBraid::generator(i)) == Some(self)))
    }

    /// The flip `σ₁ ↔ σ₂`, i.e. conjugation by `Δ`.
    pub fn tau(self) -> PermutationBraid {
        match self {
            A => B,
            B => A,
            AB => BA,
            BA => AB,
            other => other,
        }
    }

    pub fn tau_pow(self, r: i64) -> PermutationBraid {
        if r.rem_euclid(2) == 1 {
            self.tau()
        } else {
            self
        }
    }

    /// Right complement `∂(x)` with `x · ∂(x) = Δ`.
    pub fn complement(self) -> PermutationBraid {
        ALL_SIMPLES.iter().copied().find(|&x| self.mul(x) == Some(Delta)).expect("every simple divides Δ")
    }

    pub fn name(self) -> &'static str {
        match self {
            E => "e",
            A => "a",
            B => "b",
            AB => "ab",
            BA => "ba",
            Delta => "D",
        }
    }

    pub fn from_name(name: &str) -> Option<PermutationBraid> {
        ALL_SIMPLES.iter().copied().find(|s| s.name() == name)
    }
}

impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rewrites the pair `(x, y)` so that it is left-weighted: every generator
/// starting `y` also finishes `x`. Returns whether anything moved.
pub(crate) fn left_weight(x: &mut PermutationBraid, y: &mut PermutationBraid) -> bool {
    let mut changed = false;
    loop {
        let start = y.starting_set();
        let finish = x.finishing_set();
        let Some(i) = (0..2).find(|&i| start[i] && !finish[i]) else {
            return changed;
        };
        let g = PermutationBraid::generator(i as i32 + 1);
        *x = x.mul(g).expect("generator outside the finishing set extends a simple braid");
        *y = g.left_quotient(*y).expect("generator in the starting set divides");
        changed = true;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starting_and_finishing_sets() {
        // S(σ1)=S(σ1σ2)=F(σ1)=F(σ2σ1)={1}, S(σ2)=S(σ2σ1)=F(σ2)=F(σ1σ2)={2}, S(Δ)=F(Δ)={1,2}
        let one = [true, false];
        let two = [false, true];
        assert_eq!(A.starting_set(), one);
        assert_eq!(AB.starting_set(), one);
        assert_eq!(A.finishing_set(), one);
        assert_eq!(BA.finishing_set(), one);
        assert_eq!(B.starting_set(), two);
        assert_eq!(BA.starting_set(), two);
        assert_eq!(B.finishing_set(), two);
        assert_eq!(AB.finishing_set(), two);
        assert_eq!(Delta.starting_set(), [true, true]);
        assert_eq!(Delta.finishing_set(), [true, true]);
        assert_eq!(E.starting_set(), [false, false]);
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(A.mul(B), Some(AB));
        assert_eq!(AB.mul(A), Some(Delta));
        assert_eq!(BA.mul(B), Some(Delta));
        assert_eq!(A.mul(A), None);
        assert_eq!(AB.mul(B), None);
        assert_eq!(E.mul(BA), Some(BA));
        for s in ALL_SIMPLES {
            assert_eq!(s.mul(s.complement()), Some(Delta));
            assert_eq!(s.tau().tau(), s);
        }
    }

    #[test]
    fn left_weighting_moves_generators() {
        let (mut x, mut y) = (A, BA);
        assert!(left_weight(&mut x, &mut y));
        assert_eq!((x, y), (Delta, E));
        let (mut x, mut y) = (AB, B);
        assert!(!left_weight(&mut x, &mut y));
        let (mut x, mut y) = (B, AB);
        assert!(left_weight(&mut x, &mut y));
        assert_eq!((x, y), (Delta, E));
        let (mut x, mut y) = (A, B);
        assert!(left_weight(&mut x, &mut y));
        assert_eq!((x, y), (AB, E));
        let (mut x, mut y) = (BA, AB);
        assert!(!left_weight(&mut x, &mut y));
    }
}
