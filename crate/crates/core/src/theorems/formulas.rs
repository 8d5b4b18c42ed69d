use crate::garside3::MurasugiClass;

/// Signature of the closure of a 3-braid from its Murasugi class.
pub fn murasugi_erle_sigma(class: &MurasugiClass) -> i64 {
    let n = class.n();
    let even = n.rem_euclid(2) == 0;
    match class {
        MurasugiClass::Omega0 { .. } => -4 * n,
        MurasugiClass::Omega1 { .. } => {
            if even {
                -4 * n
            } else {
                -4 * n - 2
            }
        }
        MurasugiClass::Omega2 { .. } => {
            if even {
                -4 * n - 2
            } else {
                -4 * n - 4
            }
        }
        MurasugiClass::Omega3 { .. } => {
            if even {
                -4 * n - 1
            } else {
                -4 * n - 3
            }
        }
        MurasugiClass::Omega4 { p, .. } => {
            let p = i64::from(*p);
            if even {
                p - 4 * n - 1
            } else {
                p - 4 * n
            }
        }
        MurasugiClass::Omega5 { q, .. } => {
            let q = i64::from(*q);
            if even {
                -q - 4 * n + 1
            } else {
                -q - 4 * n
            }
        }
        MurasugiClass::Omega6 { pairs, .. } => {
            pairs.iter().map(|&(p, q)| i64::from(p) - i64::from(q)).sum::<i64>() - 4 * n
        }
    }
}

/// Whether a class is conjugate to a positive braid: `n ≥ 0`, or `n ≥ p/2`
/// with `p = Σ pᵢ` for the two families carrying negative letters.
pub fn positivity_predicate(class: &MurasugiClass) -> bool {
    match class {
        MurasugiClass::Omega4 { .. } | MurasugiClass::Omega6 { .. } => {
            let p = i64::from(class.total_p());
            p > 0 && 2 * class.n() >= p
        }
        other => other.n() >= 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        assert_eq!(murasugi_erle_sigma(&MurasugiClass::Omega0 { n: 1 }), -4);
        assert_eq!(murasugi_erle_sigma(&MurasugiClass::Omega5 { n: 1, q: 3 }), -7);
        assert_eq!(murasugi_erle_sigma(&MurasugiClass::Omega3 { n: 1 }), -7);
        assert_eq!(murasugi_erle_sigma(&MurasugiClass::Omega3 { n: -1 }), 1);
        assert_eq!(murasugi_erle_sigma(&MurasugiClass::omega6(1, vec![(1, 2), (1, 3)])), -7);
    }

    #[test]
    fn positivity_boundaries() {
        assert!(positivity_predicate(&MurasugiClass::Omega0 { n: 0 }));
        assert!(!positivity_predicate(&MurasugiClass::Omega2 { n: -1 }));
        assert!(positivity_predicate(&MurasugiClass::Omega4 { n: 1, p: 2 }));
        assert!(!positivity_predicate(&MurasugiClass::Omega4 { n: 1, p: 3 }));
        assert!(!positivity_predicate(&MurasugiClass::Omega4 { n: 0, p: 1 }));
        assert!(positivity_predicate(&MurasugiClass::omega6(2, vec![(2, 1), (2, 1)])));
        assert!(!positivity_predicate(&MurasugiClass::omega6(1, vec![(2, 1), (1, 1)])));
    }
}
