//! Finite verifiers. Each walks a deterministic enumeration (or a seeded
//! sample), checks one claim per element and collects a [`Report`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::{is_canonical, Symmetry, WordEnumerator};
use super::identify::{crossing_number_3braid, CrossingStatus, LinkName};
use super::report::{Finding, Report};
use super::TheoremError;
use crate::braid::{closure_stats, BraidWord};
use crate::garside3::conjugacy_test;
use crate::seifert::signature_nullity_of_closure;

/// Samples drawn by the sampling verifiers when none are requested.
pub const DEFAULT_SAMPLES: u64 = 100_000;
const MAX_LEN: usize = 14;

/// Splits an enumeration into `shards` interleaved slices: element `k` of the
/// enumeration belongs to shard `k mod shards`. Checks outside the
/// enumeration run in shard 0 only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sharding {
    pub shards: usize,
    pub index: usize,
}

impl Default for Sharding {
    fn default() -> Self {
        Sharding { shards: 1, index: 0 }
    }
}

impl Sharding {
    pub fn new(shards: usize, index: usize) -> Result<Sharding, TheoremError> {
        if shards == 0 || index >= shards {
            return Err(TheoremError::InvalidParameter(format!("shard index {index} not below shard count {shards}")));
        }
        Ok(Sharding { shards, index })
    }

    fn owns(&self, k: u64) -> bool {
        k % self.shards as u64 == self.index as u64
    }

    fn first(&self) -> bool {
        self.index == 0
    }
}

fn word(strands: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord::new(strands, letters).expect("enumerated letters fit")
}

fn sigma(w: &BraidWord) -> Result<(i64, i64), TheoremError> {
    Ok(signature_nullity_of_closure(w)?)
}

fn check_len(max_len: usize) -> Result<(), TheoremError> {
    if max_len > MAX_LEN {
        return Err(TheoremError::InvalidParameter(format!("length bound {max_len} above {MAX_LEN}")));
    }
    Ok(())
}

/// Per-sample generator: the same `(seed, index)` always gives the same word,
/// whichever shard draws it.
fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_connected_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let alphabet = WordEnumerator::all_letters(strands);
    let min_len = strands - 1;
    loop {
        let len = rng.gen_range(min_len..=max_len.max(min_len));
        let letters: Vec<i32> = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
        let w = word(strands, letters);
        if closure_stats(&w).connected_surface {
            return w;
        }
    }
}

/// `|σ| + n + s(D) ≤ cr(D) + 1` for every connected-surface word: exhaustive
/// on 2 and 3 strands, `samples` seeded words on 4 strands.
pub fn verify_inequality(
    max_len: usize,
    strands: usize,
    samples: u64,
    seed: u64,
    sharding: Sharding,
) -> Result<Report, TheoremError> {
    check_len(max_len)?;
    if !(2..=4).contains(&strands) {
        return Err(TheoremError::InvalidParameter(format!("strand count {strands} not in 2..=4")));
    }
    let mut params = vec![("max_len", max_len as i64), ("strands", strands as i64)];
    if strands == 4 {
        params.push(("samples", samples as i64));
        params.push(("seed", seed as i64));
    }
    let mut report = Report::new("inequality", &params);
    let check = |w: BraidWord, report: &mut Report| -> Result<(), TheoremError> {
        let stats = closure_stats(&w);
        let (s, n) = sigma(&w)?;
        let lhs = s.abs() + n + stats.seifert_circles as i64;
        let rhs = stats.crossings as i64 + 1;
        report.checked += 1;
        if lhs > rhs {
            report.violation(&w, format!("|σ|+n+s = {lhs} > cr+1 = {rhs}"));
        } else if lhs == rhs {
            let uniform = w.letters().iter().all(|&l| l == w.letters()[0]);
            let label = if uniform { "equality: uniform power" } else { "equality: other" };
            report.finding(Finding { label: label.into(), word: w.clone(), crossing_number: rhs - 1, sigma: s, count: 1 });
        }
        Ok(())
    };
    if strands <= 3 {
        let words = WordEnumerator::new(WordEnumerator::all_letters(strands), strands, 1, max_len, Symmetry::ALL);
        let mut k = 0u64;
        for letters in words {
            let w = word(strands, letters);
            if !closure_stats(&w).connected_surface {
                continue;
            }
            k += 1;
            if sharding.owns(k - 1) {
                check(w, &mut report)?;
            }
        }
    } else {
        for i in (0..samples).filter(|&i| sharding.owns(i)) {
            let w = random_connected_word(&mut sample_rng(seed, i), strands, max_len);
            check(w, &mut report)?;
        }
    }
    Ok(report.normalize())
}

/// `|σ(L) − σ(L')| ≤ c` when `L'` comes from `L` by smoothing `c` crossings:
/// every single deletion in every 3-braid word of length `≤ max_len`, plus
/// `samples` seeded 4-braid words with several letters deleted at once.
pub fn verify_smoothing_lemma(
    max_len: usize,
    samples: u64,
    seed: u64,
    sharding: Sharding,
) -> Result<Report, TheoremError> {
    check_len(max_len)?;
    let mut report = Report::new(
        "smoothing",
        &[("max_len", max_len as i64), ("samples", samples as i64), ("seed", seed as i64)],
    );
    let words = WordEnumerator::new(WordEnumerator::all_letters(3), 3, 2, max_len, Symmetry::ALL);
    let mut k = 0u64;
    for letters in words {
        let w = word(3, letters);
        if !closure_stats(&w).connected_surface {
            continue;
        }
        k += 1;
        if !sharding.owns(k - 1) {
            continue;
        }
        let (s, _) = sigma(&w)?;
        for pos in 0..w.len() {
            let v = w.delete(pos).expect("position in range");
            if !closure_stats(&v).connected_surface {
                continue;
            }
            let (t, _) = sigma(&v)?;
            report.checked += 1;
            if (s - t).abs() > 1 {
                report.violation(&w, format!("deleting position {pos} moves σ from {s} to {t}"));
            }
        }
    }
    for i in (0..samples).filter(|&i| sharding.owns(i)) {
        let mut rng = sample_rng(seed, i);
        let w = random_connected_word(&mut rng, 4, max_len.max(3));
        let c = rng.gen_range(1..=w.len());
        let mut v = w.clone();
        for _ in 0..c {
            let pos = rng.gen_range(0..v.len());
            v = v.delete(pos).expect("position in range");
        }
        if !closure_stats(&v).connected_surface {
            continue;
        }
        let ((s, _), (t, _)) = (sigma(&w)?, sigma(&v)?);
        report.checked += 1;
        if (s - t).abs() > c as i64 {
            report.violation(&w, format!("deleting {c} letters moves σ from {s} to {t}"));
        }
    }
    if sharding.first() {
        for c in 2..=12 {
            let (a, _) = sigma(&word(2, vec![1; c]))?;
            let (b, _) = sigma(&word(2, vec![1; c - 1]))?;
            report.checked += 1;
            if a - b != -1 || a != 1 - c as i64 {
                report.violation(format!("σ1^{c}"), format!("σ = {a} after σ1^{} had {b}", c - 1));
            }
        }
        let delta2 = word(3, vec![1, 2, 1, 1, 2, 1]);
        let (a, _) = sigma(&delta2)?;
        let (b, _) = sigma(&delta2.delete(1).expect("position in range"))?;
        report.checked += 1;
        if (a - b).abs() > 1 {
            report.violation(&delta2, format!("deleting σ2 moves σ from {a} to {b}"));
        }
    }
    Ok(report.normalize())
}

const DELTA2: [i32; 6] = [1, 2, 1, 1, 2, 1];

fn delta2_then(tail: &[i32]) -> BraidWord {
    let mut v = DELTA2.to_vec();
    v.extend_from_slice(tail);
    word(3, v)
}

/// The closures with `σ = 2 − cr`, one entry per family member, with the
/// crossing number and signature they are stated to have.
fn two_minus_c_list(max_crossings: usize) -> Vec<(String, BraidWord, i64, i64)> {
    let mut out = vec![
        ("(i) T(3,3)".to_string(), delta2_then(&[]), 6, -4),
        ("(ii) T(3,4)".to_string(), delta2_then(&[1, 2]), 8, -6),
        ("(iii) T(3,5)".to_string(), delta2_then(&[1, 2, 1, 2]), 10, -8),
        ("(iv) Delta^3".to_string(), word(3, DELTA2.iter().chain(&[1, 2, 1]).copied().collect()), 9, -7),
    ];
    for q in 1..=max_crossings.saturating_sub(6) as i64 {
        out.push((format!("(v) P(-2,2,{:02})", q + 2), delta2_then(&vec![2; q as usize]), q + 6, -q - 4));
    }
    for total in 4..=max_crossings as i64 {
        for q1 in 2..=total / 2 {
            let q2 = total - q1;
            let mut letters = vec![1; q1 as usize];
            letters.extend(std::iter::repeat(2).take(q2 as usize));
            out.push((format!("(vi) T(2,{q1:02})#T(2,{q2:02})"), word(3, letters), total, 2 - total));
        }
    }
    out
}

/// Every positive 3-braid closure with at most `max_crossings` crossings and
/// `σ = 2 − cr` is one of the six listed families, and each family member
/// has its stated invariants.
pub fn verify_main_theorem(max_crossings: usize, sharding: Sharding) -> Result<Report, TheoremError> {
    check_len(max_crossings)?;
    let mut report = Report::new("main", &[("max_crossings", max_crossings as i64)]);
    let list = two_minus_c_list(max_crossings);
    let words = WordEnumerator::new(vec![1, 2], 3, 2, max_crossings, Symmetry::CONJUGATION);
    let mut k = 0u64;
    for letters in words {
        let w = word(3, letters);
        if !closure_stats(&w).connected_surface {
            continue;
        }
        k += 1;
        if !sharding.owns(k - 1) {
            continue;
        }
        report.checked += 1;
        let (s, _) = sigma(&w)?;
        let t = crossing_number_3braid(&w)?;
        if t.crossing_number.status != CrossingStatus::Exact {
            report.violation(&w, "crossing number not determined");
            continue;
        }
        let cr = t.crossing_number.value;
        if s != 2 - cr {
            continue;
        }
        let mut identified = None;
        for (label, candidate, c, _) in &list {
            if *c == cr && conjugacy_test(&w, candidate)? {
                identified = Some(label.clone());
                break;
            }
        }
        match identified {
            Some(label) => report.finding(Finding { label, word: w, crossing_number: cr, sigma: s, count: 1 }),
            None => report.violation(&w, format!("σ = {s} = 2 − cr with cr = {cr}, outside the list")),
        }
    }
    if sharding.first() {
        for (label, w, cr, expected) in two_minus_c_list(max_crossings.max(12)) {
            let (s, _) = sigma(&w)?;
            let t = crossing_number_3braid(&w)?;
            report.checked += 1;
            if t.crossing_number.value != cr || t.crossing_number.status != CrossingStatus::Exact || s != expected {
                report.violation(
                    &w,
                    format!("{label}: expected (cr, σ) = ({cr}, {expected}), got ({}, {s})", t.crossing_number.value),
                );
            }
        }
    }
    if sharding.shards == 1 {
        check_main_omissions(&mut report, max_crossings);
    }
    Ok(report.normalize())
}

/// Flags list members up to `max_crossings` that the enumeration never met;
/// run once on a complete (possibly merged) report.
pub fn check_main_omissions(report: &mut Report, max_crossings: usize) {
    for (label, w, cr, _) in two_minus_c_list(max_crossings) {
        if cr <= max_crossings as i64 && report.finding_count(&label) == 0 {
            report.violation(&w, format!("{label}: no enumerated word found"));
        }
    }
    report.violations.sort();
}

/// Homogeneous 3-braid words (each generator used with one sign), canonical
/// up to rotation, flip and mirror.
fn homogeneous_words(max_len: usize) -> impl Iterator<Item = Vec<i32>> {
    WordEnumerator::new(vec![1, 2], 3, 2, max_len, Symmetry::NONE).flat_map(|positive| {
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].into_iter().filter_map(move |(a, b)| {
            let letters: Vec<i32> = positive.iter().map(|&l| if l == 1 { a } else { 2 * b }).collect();
            is_canonical(&letters, 3, Symmetry::ALL).then_some(letters)
        })
    })
}

/// Among homogeneous 3-braid closures with at most `max_crossings` crossings,
/// `|σ| = cr − 1` exactly for the closures conjugate to a stabilized `σ₁^{±c}`.
pub fn verify_t2c_theorem(max_crossings: usize, sharding: Sharding) -> Result<Report, TheoremError> {
    check_len(max_crossings)?;
    let mut report = Report::new("t2c", &[("max_crossings", max_crossings as i64)]);
    let mut k = 0u64;
    for letters in homogeneous_words(max_crossings) {
        let w = word(3, letters);
        if !closure_stats(&w).connected_surface {
            continue;
        }
        k += 1;
        if !sharding.owns(k - 1) {
            continue;
        }
        report.checked += 1;
        let (s, _) = sigma(&w)?;
        let t = crossing_number_3braid(&w)?;
        if t.crossing_number.status != CrossingStatus::Exact {
            report.violation(&w, "crossing number not determined");
            continue;
        }
        let cr = t.crossing_number.value;
        let extremal = cr >= 1 && s.abs() == cr - 1;
        let named = matches!(t.name, LinkName::Torus { p: 2, .. });
        if extremal {
            let sign = if s < 0 { 1 } else { -1 };
            let mut found = false;
            for e in [1, -1] {
                let mut target = vec![sign; cr as usize];
                target.push(2 * e);
                if conjugacy_test(&w, &word(3, target))? {
                    found = true;
                    break;
                }
            }
            if !found || !named {
                report.violation(&w, format!("|σ| = cr − 1 = {} but not conjugate to a stabilized σ1^{cr}", cr - 1));
                continue;
            }
            report.finding(Finding { label: format!("T(2,{cr:02})"), word: w, crossing_number: cr, sigma: s, count: 1 });
        } else if named {
            report.violation(&w, format!("named {} but σ = {s}, cr = {cr}", t.name));
        }
    }
    if sharding.first() {
        for c in 2..=12 {
            let (s, _) = sigma(&word(2, vec![1; c]))?;
            report.checked += 1;
            if s != 1 - c as i64 {
                report.violation(format!("σ1^{c}"), format!("σ = {s}, expected {}", 1 - c as i64));
            }
        }
        let w = delta2_then(&[-1]);
        let (s, _) = sigma(&w)?;
        let t = crossing_number_3braid(&w)?;
        report.checked += 1;
        if s != -3 || t.crossing_number.value != 4 || t.name != (LinkName::Torus { p: 2, q: 4 }) {
            report.violation(&w, format!("expected T(2,4) with σ = −3, got {} with σ = {s}", t.name));
        }
        let (s, _) = sigma(&delta2_then(&[]))?;
        report.checked += 1;
        if s == 1 - 6 {
            report.violation(delta2_then(&[]), "T(3,3) has σ = 1 − cr");
        }
    }
    Ok(report.normalize())
}
