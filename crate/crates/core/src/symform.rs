//! Signature and nullity of symmetric integer bilinear forms by exact
//! congruence diagonalization over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
}

/// A symmetric integer matrix, e.g. `M + Mᵀ` for a Seifert matrix `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBilinearForm {
    entries: Vec<Vec<i64>>,
}

impl SymBilinearForm {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, FormError> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(FormError::NotSquare);
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i][j] != entries[j][i] {
                    return Err(FormError::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymBilinearForm { entries })
    }

    /// `M + Mᵀ` for an arbitrary square matrix `M`.
    pub fn symmetrize(m: &[Vec<i64>]) -> Result<Self, FormError> {
        let n = m.len();
        if m.iter().any(|row| row.len() != n) {
            return Err(FormError::NotSquare);
        }
        let entries = (0..n).map(|i| (0..n).map(|j| m[i][j] + m[j][i]).collect()).collect();
        Ok(SymBilinearForm { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn negate(&self) -> Self {
        SymBilinearForm { entries: self.entries.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// Orthogonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SymBilinearForm) -> Self {
        let (a, b) = (self.size(), other.size());
        let mut entries = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            entries[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            entries[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        SymBilinearForm { entries }
    }

    pub fn diagonalize(&self) -> Diagonalization {
        diagonalize(&self.entries)
    }

    /// `(#positive − #negative, #zero)` of a congruent diagonal form.
    pub fn signature_nullity(&self) -> (i64, i64) {
        let d = self.diagonalize();
        (d.signature(), d.nullity())
    }
}

/// Result of congruence diagonalization: rational pivots plus hyperbolic planes
/// split off when no diagonal pivot was available.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagonalization {
    pub pivots: Vec<BigRational>,
    pub hyperbolic_planes: usize,
    pub zeros: usize,
}

impl Diagonalization {
    pub fn signature(&self) -> i64 {
        self.pivots.iter().map(|p| if p.is_positive() { 1 } else { -1 }).sum()
    }

    pub fn nullity(&self) -> i64 {
        self.zeros as i64
    }
}

impl fmt::Display for Diagonalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("diag(")?;
        let mut first = true;
        let mut item = |f: &mut fmt::Formatter<'_>, s: String| -> fmt::Result {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            f.write_str(&s)
        };
        for p in &self.pivots {
            item(f, p.to_string())?;
        }
        for _ in 0..self.hyperbolic_planes {
            item(f, "H".to_string())?;
        }
        for _ in 0..self.zeros {
            item(f, "0".to_string())?;
        }
        f.write_str(")")
    }
}

fn diagonalize(entries: &[Vec<i64>]) -> Diagonalization {
    let mut a: Vec<Vec<BigRational>> = entries
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut hyperbolic_planes = 0;

    // a shrinks as rows/columns are eliminated
    loop {
        let n = a.len();
        if n == 0 {
            break;
        }
        if let Some(i) = (0..n).find(|&i| !a[i][i].is_zero()) {
            let pivot = a[i][i].clone();
            let rest: Vec<usize> = (0..n).filter(|&k| k != i).collect();
            let next: Vec<Vec<BigRational>> = rest
                .iter()
                .map(|&k| rest.iter().map(|&l| &a[k][l] - &a[k][i] * &a[i][l] / &pivot).collect())
                .collect();
            pivots.push(pivot);
            a = next;
            continue;
        }
        let Some((i, j)) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        // zero diagonal, a[i][j] = b ≠ 0: the block [[0, b], [b, 0]] is a hyperbolic
        // plane; its Schur complement is A' = A − C·[[0, 1/b], [1/b, 0]]·Cᵀ
        let b = a[i][j].clone();
        let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        let next: Vec<Vec<BigRational>> = rest
            .iter()
            .map(|&k| {
                rest.iter()
                    .map(|&l| &a[k][l] - (&a[k][i] * &a[j][l] + &a[k][j] * &a[i][l]) / &b)
                    .collect()
            })
            .collect();
        hyperbolic_planes += 1;
        a = next;
    }
    Diagonalization { pivots, hyperbolic_planes, zeros: a.len() }
}

/// Multi-line trace of the diagonal form, for `--debug` style output.
pub fn debug_report(form: &SymBilinearForm) -> String {
    let d = form.diagonalize();
    let mut out = String::new();
    for row in form.entries() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str(&format!("{d}\nsignature {} nullity {}\n", d.signature(), d.nullity()));
    out
}
