//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use knotgeo::braid::closure_stats;
use knotgeo::BraidWord;
use num_rational::Ratio;
use rand::Rng;

/// Adds `σᵢσᵢ⁻¹` for every generator the word misses, so the canonical
/// surface is connected without changing the braid.
pub fn padded(w: &BraidWord) -> BraidWord {
    if closure_stats(w).connected_surface {
        return w.clone();
    }
    let mut letters = w.letters().to_vec();
    for i in 1..w.strands() as i32 {
        if !letters.iter().any(|l| l.abs() == i) {
            letters.extend([i, -i]);
        }
    }
    BraidWord::new(w.strands(), letters).unwrap()
}

/// Random word using every generator at least once.
pub fn random_word(rng: &mut impl Rng, strands: usize, max_len: usize) -> BraidWord {
    let top = strands as i32 - 1;
    let len = rng.gen_range(1..=max_len.max(1));
    let mut letters: Vec<i32> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=top);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    for i in 1..=top {
        if !letters.iter().any(|l| l.abs() == i) {
            letters.insert(rng.gen_range(0..=letters.len()), if rng.gen_bool(0.5) { i } else { -i });
        }
    }
    BraidWord::new(strands, letters).unwrap()
}

type Q = Ratio<i128>;

fn mul(a: &[[Q; 2]; 2], b: &[[Q; 2]; 2]) -> [[Q; 2]; 2] {
    let mut out = [[Q::from(0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Reduced Burau matrix of a 3-braid evaluated at an integer `t`.
pub fn burau(w: &BraidWord, t: i128) -> [[Q; 2]; 2] {
    let (z, o) = (Q::from(0), Q::from(1));
    let t = Q::from(t);
    let mut m = [[o, z], [z, o]];
    for &l in w.letters() {
        let g = match l {
            1 => [[-t, o], [z, o]],
            -1 => [[-o / t, o / t], [z, o]],
            2 => [[o, z], [t, -t]],
            -2 => [[o, z], [o, -o / t]],
            _ => panic!("not a 3-braid letter"),
        };
        m = mul(&m, &g);
    }
    m
}

pub fn random_symmetric(rng: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = if rng.gen_bool(0.3) { 0 } else { rng.gen_range(-4..=4) };
            a[i][j] = x;
            a[j][i] = x;
        }
    }
    a
}

/// Product of random elementary integer row operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if i != j => {
                let k = rng.gen_range(-2..=2);
                for c in 0..n {
                    p[i][c] += k * p[j][c];
                }
            }
            1 => p.swap(i, j),
            _ => p[i].iter_mut().for_each(|x| *x = -*x),
        }
    }
    p
}

/// `Pᵀ A P`.
pub fn congruent(a: &[Vec<i64>], p: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out[i][j] += p[k][i] * a[k][l] * p[l][j];
                }
            }
        }
    }
    out
}

/// Coefficients of `det(xI − A)`, constant term first (Faddeev–LeVerrier).
pub fn char_poly(a: &[Vec<i64>]) -> Vec<i128> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|l| i128::from(a[i][l]) * m[l][j]).sum::<i128>();
            }
            next[i][i] += c[n + 1 - k];
        }
        m = next;
        let trace: i128 = (0..n).map(|i| (0..n).map(|l| i128::from(a[i][l]) * m[l][i]).sum::<i128>()).sum();
        c[n - k] = -trace / k as i128;
    }
    c
}

fn sign_changes(coeffs: impl Iterator<Item = i128>) -> i64 {
    let signs: Vec<i128> = coeffs.filter(|&x| x != 0).map(i128::signum).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

/// `(positive − negative roots, zero roots)` of a real-rooted polynomial.
pub fn descartes_signature(c: &[i128]) -> (i64, i64) {
    let zeros = c.iter().position(|&x| x != 0).unwrap_or(c.len()) as i64;
    let positive = sign_changes(c.iter().copied());
    let negative = sign_changes(c.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x } else { -x }));
    (positive - negative, zeros)
}
