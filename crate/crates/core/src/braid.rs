//! Braid words and the combinatorics of their closure diagrams.
//!
//! A letter `e > 0` stands for the Artin generator `σ_e` and `e < 0` for
//! `σ_{-e}^{-1}`. Positive letters are drawn as right-handed crossings, so
//! closures of positive braids have negative signature.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Error produced while reading the braid text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at byte {position}")]
pub struct ParseError {
    pub message: String,
    /// Byte offset of the offending token in the input.
    pub position: usize,
}

impl ParseError {
    pub(crate) fn new(message: impl Into<String>, position: usize) -> Self {
        ParseError { message: message.into(), position }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} is not a generator of B{strands}")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("{0} strands exceeds the supported maximum")]
    TooManyStrands(usize),
    #[error("position {position} is out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
}

/// Largest strand count accepted by the constructors and the parser.
pub const MAX_STRANDS: usize = 4096;

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if strands > MAX_STRANDS {
            return Err(BraidError::TooManyStrands(strands));
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Word on the minimal number of strands containing every letter (at least two).
    pub fn from_letters(letters: Vec<i32>) -> Result<Self, BraidError> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(2).max(2);
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    /// Concatenation. Both words must live in the same braid group.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "concatenating braids on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &BraidWord) -> BraidWord {
        g.inverse().concat(self).concat(g)
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// The same word read in a braid group with more strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Markov stabilization: one more strand and a trailing `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(k) }
    }

    /// Removes the letter at `position`, i.e. the coherent smoothing of that crossing.
    pub fn delete(&self, position: usize) -> Result<BraidWord, BraidError> {
        if position >= self.letters.len() {
            return Err(BraidError::PositionOutOfRange { position, len: self.letters.len() });
        }
        let mut letters = self.letters.clone();
        letters.remove(position);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Permutation of strand positions induced by the word: `perm[i]` is where
    /// the strand entering at position `i` leaves.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.letters {
            let i = letter.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Groups of strand positions joined by some crossing (connected pieces of
    /// the canonical Seifert surface), as a label per strand.
    pub(crate) fn surface_pieces(&self) -> (usize, Vec<usize>) {
        let mut used = vec![false; self.strands.saturating_sub(1)];
        for &letter in &self.letters {
            used[letter.unsigned_abs() as usize - 1] = true;
        }
        let mut label = vec![0; self.strands];
        let mut count = 1;
        for i in 1..self.strands {
            if !used[i - 1] {
                count += 1;
            }
            label[i] = count - 1;
        }
        (count, label)
    }
}

impl fmt::Display for BraidWord {
    /// Emits `B<n>: l1 l2 ...`, the format read back by `parse_braid`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for letter in &self.letters {
            write!(f, " {letter}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_ascii_whitespace().map(move |tok| (tok.as_ptr() as usize - text.as_ptr() as usize, tok))
}

/// Reads whitespace-separated nonzero integers, optionally prefixed by
/// `B<n>:` to fix the strand count.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let mut body = text;
    let mut offset = 0;
    let mut declared = None;

    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    if let Some(rest) = trimmed.strip_prefix('B') {
        let colon = rest
            .find(':')
            .ok_or_else(|| ParseError::new("strand prefix must look like `B<n>:`", lead))?;
        let digits = &rest[..colon];
        let n: usize = digits
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("invalid strand count `{digits}`"), lead + 1))?;
        if n == 0 || n > MAX_STRANDS {
            return Err(ParseError::new(format!("strand count must be between 1 and {MAX_STRANDS}"), lead + 1));
        }
        declared = Some(n);
        offset = lead + 1 + colon + 1;
        body = &text[offset..];
    }

    let mut letters = Vec::new();
    let mut max_index = 0usize;
    for (pos, tok) in tokens(body) {
        let at = offset + pos;
        let letter: i32 = tok.parse().map_err(|_| ParseError::new(format!("invalid letter `{tok}`"), at))?;
        if letter == 0 {
            return Err(ParseError::new("letter `0` is not a generator", at));
        }
        let index = letter.unsigned_abs() as usize;
        if let Some(n) = declared {
            if index >= n {
                return Err(ParseError::new(format!("letter `{tok}` is not a generator of B{n}"), at));
            }
        }
        max_index = max_index.max(index);
        letters.push(letter);
    }

    let strands = match declared {
        Some(n) => n,
        None if letters.is_empty() => return Err(ParseError::new("empty braid word without a `B<n>:` prefix", text.len())),
        None if max_index >= MAX_STRANDS => {
            return Err(ParseError::new(format!("letter index {max_index} needs more than {MAX_STRANDS} strands"), offset))
        }
        None => (max_index + 1).max(2),
    };
    Ok(BraidWord { strands, letters })
}

/// Diagram-level data of the closure of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ClosureStats {
    /// Number of link components `μ(L)`.
    pub components: usize,
    /// Seifert circles `s(D)`; one per strand.
    pub seifert_circles: usize,
    /// Crossings `cr(D)` of the closure diagram.
    pub crossings: usize,
    /// Euler characteristic of the canonical Seifert surface, `s(D) − cr(D)`.
    pub euler_char: i64,
    /// First Betti number of the canonical surface.
    pub betti: i64,
    /// Whether the canonical surface is connected.
    pub connected_surface: bool,
}

pub fn closure_stats(w: &BraidWord) -> ClosureStats {
    let perm = w.permutation();
    let mut seen = vec![false; w.strands];
    let mut components = 0;
    for start in 0..w.strands {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    let (pieces, _) = w.surface_pieces();
    let euler_char = w.strands as i64 - w.len() as i64;
    ClosureStats {
        components,
        seifert_circles: w.strands,
        crossings: w.len(),
        euler_char,
        betti: pieces as i64 - euler_char,
        connected_surface: pieces == 1,
    }
}

/// Mirror image: every crossing switched.
pub fn mirror(w: &BraidWord) -> BraidWord {
    BraidWord { strands: w.strands, letters: w.letters.iter().map(|l| -l).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordFlags {
    pub positive: bool,
    pub homogeneous: bool,
    pub exponent_sum: i64,
}

pub fn word_flags(w: &BraidWord) -> WordFlags {
    let mut sign = vec![0i32; w.strands];
    let mut homogeneous = true;
    for &letter in &w.letters {
        let i = letter.unsigned_abs() as usize;
        let s = letter.signum();
        if sign[i] == 0 {
            sign[i] = s;
        } else if sign[i] != s {
            homogeneous = false;
        }
    }
    WordFlags {
        positive: w.letters.iter().all(|&l| l > 0),
        homogeneous,
        exponent_sum: w.letters.iter().map(|l| l.signum() as i64).sum(),
    }
}

/// Cancels adjacent `e, -e` pairs until none remain. In cyclic mode the last
/// and first letters are also treated as adjacent.
pub fn free_reduce(w: &BraidWord, cyclic: bool) -> BraidWord {
    let mut stack: Vec<i32> = Vec::with_capacity(w.len());
    for &letter in &w.letters {
        if stack.last() == Some(&-letter) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    if cyclic {
        let mut lo = 0;
        let mut hi = stack.len();
        while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        stack = stack[lo..hi].to_vec();
    }
    BraidWord { strands: w.strands, letters: stack }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    #[test]
    fn parses_plain_and_prefixed_words() {
        assert_eq!(parse_braid("1 2 1").unwrap(), word(3, &[1, 2, 1]));
        assert_eq!(parse_braid("B2: 1 1 1").unwrap(), word(2, &[1, 1, 1]));
        assert_eq!(parse_braid("1 -2 1 -2").unwrap(), word(3, &[1, -2, 1, -2]));
        assert_eq!(parse_braid("B4:").unwrap(), word(4, &[]));
        assert_eq!(parse_braid("-1").unwrap(), word(2, &[-1]));
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = parse_braid("1 0 2").unwrap_err();
        assert_eq!(err.position, 2);
        assert!(err.message.contains('0'));

        let err = parse_braid("B3: 1 3").unwrap_err();
        assert_eq!(err.position, 6);
        assert!(err.message.contains("`3`"));

        let err = parse_braid("   ").unwrap_err();
        assert!(err.message.contains("empty"));

        assert!(parse_braid("1 x").is_err());
        assert!(parse_braid("B0:").is_err());
        assert!(parse_braid("B3 1 2").is_err());
    }

    #[test]
    fn emitter_round_trips() {
        let w = word(3, &[1, -2, 1, -2]);
        assert_eq!(w.to_string(), "B3: 1 -2 1 -2");
        assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
        assert_eq!(word(1, &[]).to_string(), "B1:");
        assert_eq!(parse_braid("B1:").unwrap(), word(1, &[]));
    }

    #[test]
    fn closure_stats_of_full_twist() {
        let s = closure_stats(&word(3, &[1, 2, 1, 1, 2, 1]));
        assert_eq!(s.components, 3);
        assert_eq!(s.seifert_circles, 3);
        assert_eq!(s.crossings, 6);
        assert_eq!(s.euler_char, -3);
        assert_eq!(s.betti, 4);
        assert!(s.connected_surface);
    }

    #[test]
    fn closure_stats_small_cases() {
        let s = closure_stats(&word(1, &[]));
        assert_eq!((s.components, s.crossings), (1, 0));

        let s = closure_stats(&word(2, &[1, 1, 1]));
        assert_eq!((s.components, s.seifert_circles, s.crossings, s.betti), (1, 2, 3, 2));

        let s = closure_stats(&word(3, &[1, 1]));
        assert!(!s.connected_surface);
        assert_eq!(s.components, 3);
        // an annulus on strands 1,2 plus a lone disk
        assert_eq!(s.betti, 1);
    }

    #[test]
    fn mirror_and_flags() {
        assert_eq!(mirror(&word(3, &[1, 2, 1])), word(3, &[-1, -2, -1]));
        assert_eq!(mirror(&word(3, &[])), word(3, &[]));
        let w = word(3, &[1, -2, 2, 1]);
        assert_eq!(mirror(&mirror(&w)), w);

        let f = word_flags(&word(3, &[1, 2, 1]));
        assert_eq!((f.positive, f.homogeneous, f.exponent_sum), (true, true, 3));
        let f = word_flags(&word(3, &[1, -2, 1, -2]));
        assert_eq!((f.positive, f.homogeneous, f.exponent_sum), (false, true, 0));
        let f = word_flags(&word(2, &[1, -1]));
        assert_eq!((f.positive, f.homogeneous, f.exponent_sum), (false, false, 0));
    }

    #[test]
    fn free_reduction() {
        assert_eq!(free_reduce(&word(3, &[1, -1, 2]), false), word(3, &[2]));
        assert_eq!(free_reduce(&word(3, &[1, 2, -2, -1]), false), word(3, &[]));
        assert_eq!(free_reduce(&word(3, &[1, 2, 1]), false), word(3, &[1, 2, 1]));
        assert_eq!(free_reduce(&word(3, &[1, 2, -1]), false), word(3, &[1, 2, -1]));
        assert_eq!(free_reduce(&word(3, &[1, 2, -1]), true), word(3, &[2]));
        assert_eq!(free_reduce(&word(3, &[-2, 1, 2, -1, 2]), true), word(3, &[2]));
        assert_eq!(free_reduce(&word(3, &[-2, 1, 1, 2]), true), word(3, &[1, 1]));
    }

    #[test]
    fn delete_checks_range() {
        assert_eq!(word(2, &[1, 1, 1]).delete(0).unwrap(), word(2, &[1, 1]));
        assert!(word(2, &[1]).delete(1).is_err());
    }
}
