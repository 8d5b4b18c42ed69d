//! Seifert matrix of the canonical Seifert surface of a braid closure.
//!
//! The surface is one disk per strand with a half-twisted band per letter.
//! Homology is generated by loops running down column `i` through two
//! consecutive bands `σ_i^{±1}` and back up through the next one.

use thiserror::Error;

use crate::braid::{closure_stats, BraidWord, ClosureStats};
use crate::symform::SymBilinearForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error(
        "canonical Seifert surface of `{word}` is disconnected ({pieces} pieces); split the word into connected summands"
    )]
    Disconnected { word: String, pieces: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    /// Linking numbers `lk(a_i, a_j⁺)`, size `b₁(F)`.
    pub matrix: Vec<Vec<i64>>,
    pub stats: ClosureStats,
    /// `M + Mᵀ`.
    pub symmetrized: SymBilinearForm,
}

/// One homology loop: positions `s < t` of consecutive letters of the same index.
#[derive(Debug, Clone, Copy)]
struct Loop {
    column: usize,
    start: usize,
    end: usize,
}

fn loops(letters: &[i32]) -> Vec<Loop> {
    let mut last: Vec<Option<usize>> = Vec::new();
    let mut out = Vec::new();
    for (pos, &letter) in letters.iter().enumerate() {
        let column = letter.unsigned_abs() as usize;
        if last.len() <= column {
            last.resize(column + 1, None);
        }
        if let Some(start) = last[column] {
            out.push(Loop { column, start, end: pos });
        }
        last[column] = Some(pos);
    }
    out
}

pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertData, SeifertError> {
    let stats = closure_stats(w);
    if !stats.connected_surface {
        let (pieces, _) = w.surface_pieces();
        return Err(SeifertError::Disconnected { word: w.to_string(), pieces });
    }
    let letters = w.letters();
    let sign = |pos: usize| i64::from(letters[pos].signum());
    let basis = loops(letters);
    let n = basis.len();
    let mut m = vec![vec![0i64; n]; n];
    for (x, a) in basis.iter().enumerate() {
        m[x][x] = -(sign(a.start) + sign(a.end)) / 2;
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (basis[x], basis[y]);
            // a starts first and b begins inside a, ending after it
            if !(a.start < b.start && b.start <= a.end && a.end < b.end) {
                continue;
            }
            if a.end == b.start {
                if sign(a.end) > 0 {
                    m[x][y] = 1;
                } else {
                    m[y][x] = -1;
                }
            } else if a.column == b.column + 1 {
                m[y][x] = -1;
            } else if b.column == a.column + 1 {
                m[x][y] = 1;
            }
        }
    }
    let symmetrized = SymBilinearForm::symmetrize(&m).expect("Seifert matrix is square");
    Ok(SeifertData { matrix: m, stats, symmetrized })
}

/// `(σ, n)` of the closure of `w`.
pub fn signature_nullity_of_closure(w: &BraidWord) -> Result<(i64, i64), SeifertError> {
    Ok(seifert_matrix(w)?.symmetrized.signature_nullity())
}

/// `M` and `M + Mᵀ` as integer grids.
pub fn debug_report(data: &SeifertData) -> String {
    let grid = |rows: &[Vec<i64>]| {
        rows.iter()
            .map(|r| r.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" ") + "\n")
            .collect::<String>()
    };
    format!("M\n{}M+M^T\n{}", grid(&data.matrix), grid(data.symmetrized.entries()))
}
