//! Exhaustive enumeration of braid words up to symmetries that preserve every
//! checked invariant.

/// Moves a word may be reduced by before comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Symmetry {
    /// Cyclic rotation (conjugation by a prefix).
    pub rotation: bool,
    /// `σᵢ ↦ σ_{n−i}` (conjugation by the half twist).
    pub flip: bool,
    /// Every letter negated.
    pub mirror: bool,
}

impl Symmetry {
    pub const NONE: Symmetry = Symmetry { rotation: false, flip: false, mirror: false };
    pub const CONJUGATION: Symmetry = Symmetry { rotation: true, flip: true, mirror: false };
    pub const ALL: Symmetry = Symmetry { rotation: true, flip: true, mirror: true };
}

/// Whether `letters` is the lexicographically least word among its images
/// under the allowed symmetries.
pub fn is_canonical(letters: &[i32], strands: usize, sym: Symmetry) -> bool {
    let n = letters.len();
    if n == 0 {
        return true;
    }
    let top = strands as i32;
    for flip in [false, true] {
        if flip && !sym.flip {
            continue;
        }
        for negate in [false, true] {
            if negate && !sym.mirror {
                continue;
            }
            let map = |l: i32| {
                let l = if flip { l.signum() * (top - l.abs()) } else { l };
                if negate {
                    -l
                } else {
                    l
                }
            };
            let shifts = if sym.rotation { n } else { 1 };
            for k in 0..shifts {
                for i in 0..n {
                    let x = map(letters[(i + k) % n]);
                    if x != letters[i] {
                        if x < letters[i] {
                            return false;
                        }
                        break;
                    }
                }
            }
        }
    }
    true
}

/// Canonical words over `alphabet` with lengths in `min_len..=max_len`, in
/// order of length and then lexicographically.
pub struct WordEnumerator {
    alphabet: Vec<i32>,
    strands: usize,
    symmetry: Symmetry,
    max_len: usize,
    digits: Vec<usize>,
    started: bool,
}

impl WordEnumerator {
    pub fn new(alphabet: Vec<i32>, strands: usize, min_len: usize, max_len: usize, symmetry: Symmetry) -> Self {
        let mut alphabet = alphabet;
        alphabet.sort_unstable();
        WordEnumerator { alphabet, strands, symmetry, max_len, digits: vec![0; min_len], started: false }
    }

    /// All nonzero letters `±1..±(strands−1)`.
    pub fn all_letters(strands: usize) -> Vec<i32> {
        (1..strands as i32).flat_map(|i| [i, -i]).collect()
    }

    /// Positive letters `1..strands−1`.
    pub fn positive_letters(strands: usize) -> Vec<i32> {
        (1..strands as i32).collect()
    }

    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return self.digits.len() <= self.max_len;
        }
        let base = self.alphabet.len();
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < base {
                return true;
            }
            self.digits[i] = 0;
        }
        self.digits.push(0);
        self.digits.len() <= self.max_len
    }
}

impl Iterator for WordEnumerator {
    type Item = Vec<i32>;

    fn next(&mut self) -> Option<Vec<i32>> {
        if self.alphabet.is_empty() {
            return None;
        }
        while self.advance() {
            let word: Vec<i32> = self.digits.iter().map(|&d| self.alphabet[d]).collect();
            if is_canonical(&word, self.strands, self.symmetry) {
                return Some(word);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representatives() {
        assert!(is_canonical(&[1, 1, 2], 3, Symmetry::CONJUGATION));
        assert!(!is_canonical(&[1, 2, 1], 3, Symmetry::CONJUGATION));
        assert!(!is_canonical(&[2, 2, 1], 3, Symmetry::CONJUGATION));
        assert!(is_canonical(&[-2, 1], 3, Symmetry::ALL));
        assert!(!is_canonical(&[1, -2], 3, Symmetry::ALL));
        assert!(is_canonical(&[2, 1], 3, Symmetry::NONE));
        assert!(is_canonical(&[], 3, Symmetry::ALL));
    }

    #[test]
    fn counts_match_necklace_formulas() {
        // binary necklaces of length 1..=6: 2, 3, 4, 6, 8, 14
        let words: Vec<_> = WordEnumerator::new(vec![1, 2], 3, 1, 6, Symmetry { rotation: true, flip: false, mirror: false }).collect();
        assert_eq!(words.len(), 2 + 3 + 4 + 6 + 8 + 14);
        let all: Vec<_> = WordEnumerator::new(vec![1, 2], 3, 0, 3, Symmetry::NONE).collect();
        assert_eq!(all.len(), 1 + 2 + 4 + 8);
        assert_eq!(all[0], Vec::<i32>::new());
        assert_eq!(all[3], vec![1, 1]);
    }

    #[test]
    fn every_word_has_a_canonical_image() {
        let reps: std::collections::HashSet<Vec<i32>> =
            WordEnumerator::new(WordEnumerator::all_letters(3), 3, 0, 4, Symmetry::ALL).collect();
        for word in WordEnumerator::new(WordEnumerator::all_letters(3), 3, 0, 4, Symmetry::NONE) {
            let n = word.len();
            let found = (0..n.max(1)).any(|k| {
                let rotated: Vec<i32> = (0..n).map(|i| word[(i + k) % n]).collect();
                [1, -1].iter().any(|&s| {
                    let a: Vec<i32> = rotated.iter().map(|l| s * l).collect();
                    let b: Vec<i32> = a.iter().map(|l| l.signum() * (3 - l.abs())).collect();
                    reps.contains(&a) || reps.contains(&b)
                })
            });
            assert!(found, "{word:?}");
        }
    }
}
