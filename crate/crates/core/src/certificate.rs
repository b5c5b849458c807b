//! Factorization certificates for membership in `I(2,n)^m`.

use serde::{Deserialize, Serialize};

use crate::axes::{normalize, ordinary_violation};
use crate::error::{check_dim, Error, Result};
use crate::exponent::ExponentVector;

/// `m` pairs `(i, j)`, `1 <= i < j <= n`, such that `∏ x_i x_j` divides the
/// certified monomial. Serializes as `{"n":..,"m":..,"pairs":[[i,j],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCertificate {
    pub n: usize,
    pub m: u64,
    pub pairs: Vec<(usize, usize)>,
}

impl FactorizationCertificate {
    /// Checks pair ranges and ordering, not divisibility.
    pub fn validate(&self) -> Result<()> {
        for &(i, j) in &self.pairs {
            if i == 0 || j > self.n || i >= j {
                return Err(Error::MalformedCertificate(format!(
                    "pair ({i},{j}) is not of the form 1 <= i < j <= {}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Exponent vector of the certified product `∏ x_i x_j`.
    pub fn product(&self) -> Result<ExponentVector> {
        self.validate()?;
        let mut v = vec![0u64; self.n];
        for &(i, j) in &self.pairs {
            v[i - 1] += 1;
            v[j - 1] += 1;
        }
        ExponentVector::new(v)
    }
}

/// Builds a certificate for `x^a ∈ I(2,n)^m`.
///
/// The vector is first normalized to degree `2m`. Each round then either
/// finishes with the equal-exponent factorization or peels off `x_i x_j`
/// for the two largest entries (smallest index on ties) and continues with
/// `m - 1`.
pub fn greedy_certificate(a: &ExponentVector, m: u64) -> Result<FactorizationCertificate> {
    if let Some(v) = ordinary_violation(a, m)? {
        return Err(Error::NotAMember {
            vector: a.to_string(),
            reason: format!("{v} fails for m={m}"),
        });
    }
    let n = a.n();
    let mut cur = normalize(a, m)?.into_vec();
    let mut remaining = m;
    let mut pairs = Vec::with_capacity(usize::try_from(m).unwrap_or(0));

    while remaining > 0 {
        if cur.iter().all(|&e| e == cur[0]) {
            equal_exponent_pairs(n, cur[0], &mut pairs)?;
            remaining = 0;
            break;
        }
        let (i, j) = top_two(&cur);
        if cur[j] == 0 {
            return Err(Error::Internal(format!(
                "greedy step reached a vector with a single non-zero entry at m={remaining}"
            )));
        }
        cur[i] -= 1;
        cur[j] -= 1;
        pairs.push((i.min(j) + 1, i.max(j) + 1));
        remaining -= 1;
    }
    debug_assert_eq!(remaining, 0);

    let cert = FactorizationCertificate { n, m, pairs };
    if !verify_certificate(&cert, a)? {
        return Err(Error::Internal(format!(
            "greedy certificate for {a} at m={m} does not verify"
        )));
    }
    Ok(cert)
}

/// Indices of the largest and second-largest entries, ties to the smallest index.
fn top_two(v: &[u64]) -> (usize, usize) {
    let mut first = 0;
    for (k, &e) in v.iter().enumerate() {
        if e > v[first] {
            first = k;
        }
    }
    let mut second = usize::from(first == 0);
    for (k, &e) in v.iter().enumerate() {
        if k != first && e > v[second] {
            second = k;
        }
    }
    (first, second)
}

/// All entries equal `value` and sum to `2m`.
///
/// Even `n`: `(x1x2)^value (x3x4)^value ...`.
/// Odd `n`: `value` is even and `(x1x2)^b (x2x3)^b ... (xn x1)^b` with `b = value / 2`.
fn equal_exponent_pairs(n: usize, value: u64, pairs: &mut Vec<(usize, usize)>) -> Result<()> {
    if n.is_multiple_of(2) {
        for k in (1..=n).step_by(2) {
            pairs.extend(std::iter::repeat_n((k, k + 1), value as usize));
        }
        return Ok(());
    }
    if !value.is_multiple_of(2) {
        return Err(Error::Internal(format!(
            "odd n={n} with equal odd exponent {value} cannot have degree 2m"
        )));
    }
    let b = (value / 2) as usize;
    for k in 1..n {
        pairs.extend(std::iter::repeat_n((k, k + 1), b));
    }
    pairs.extend(std::iter::repeat_n((1, n), b));
    Ok(())
}

/// `Ok(true)` iff the certificate has exactly `m` pairs whose product divides
/// `x^a`. A certificate with out-of-range or unordered pairs is an error,
/// not a negative answer.
pub fn verify_certificate(cert: &FactorizationCertificate, a: &ExponentVector) -> Result<bool> {
    check_dim(cert.n, a.n())?;
    let product = cert.product()?;
    if cert.pairs.len() as u64 != cert.m {
        return Ok(false);
    }
    Ok(product.divides_unchecked(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axes::member_ordinary_fast;
    use proptest::prelude::*;

    fn ev(v: &[u64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn sorted(mut p: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        p.sort();
        p
    }

    #[test]
    fn even_base_case() {
        let c = greedy_certificate(&ev(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(c.pairs, vec![(1, 2), (3, 4)]);
        assert_eq!(c.m, 2);
    }

    #[test]
    fn odd_base_case_cycle() {
        let c = greedy_certificate(&ev(&[2, 2, 2]), 3).unwrap();
        assert_eq!(sorted(c.pairs), vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn greedy_step() {
        let c = greedy_certificate(&ev(&[2, 1, 1]), 2).unwrap();
        assert_eq!(c.pairs, vec![(1, 2), (1, 3)]);
        assert!(verify_certificate(&c, &ev(&[2, 1, 1])).unwrap());
    }

    #[test]
    fn certify_with_normalization_and_large_m() {
        let a = ev(&[5000, 4000, 3000, 10]);
        let c = greedy_certificate(&a, 5000).unwrap();
        assert_eq!(c.pairs.len(), 5000);
        assert!(verify_certificate(&c, &a).unwrap());
    }

    #[test]
    fn certify_rejects_non_members() {
        let err = greedy_certificate(&ev(&[1, 1, 1]), 2).unwrap_err();
        match err {
            Error::NotAMember { reason, .. } => assert!(reason.contains("degree-inequality")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_examples() {
        let c = FactorizationCertificate {
            n: 4,
            m: 2,
            pairs: vec![(1, 2), (3, 4)],
        };
        assert!(verify_certificate(&c, &ev(&[1, 1, 1, 1])).unwrap());

        let c = FactorizationCertificate {
            n: 3,
            m: 2,
            pairs: vec![(1, 2), (1, 2)],
        };
        assert!(!verify_certificate(&c, &ev(&[1, 1, 0])).unwrap());

        let empty = FactorizationCertificate {
            n: 3,
            m: 0,
            pairs: vec![],
        };
        assert!(verify_certificate(&empty, &ev(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn verify_wrong_pair_count_is_false() {
        let c = FactorizationCertificate {
            n: 3,
            m: 2,
            pairs: vec![(1, 2)],
        };
        assert!(!verify_certificate(&c, &ev(&[5, 5, 5])).unwrap());
    }

    #[test]
    fn verify_malformed_is_error() {
        for pairs in [vec![(2, 1)], vec![(1, 1)], vec![(0, 2)], vec![(1, 4)]] {
            let c = FactorizationCertificate { n: 3, m: 1, pairs };
            assert!(matches!(
                verify_certificate(&c, &ev(&[1, 1, 1])),
                Err(Error::MalformedCertificate(_))
            ));
        }
        let c = FactorizationCertificate {
            n: 3,
            m: 0,
            pairs: vec![],
        };
        assert!(matches!(
            verify_certificate(&c, &ev(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn json_shape() {
        let c = FactorizationCertificate {
            n: 4,
            m: 2,
            pairs: vec![(1, 2), (3, 4)],
        };
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":4,"m":2,"pairs":[[1,2],[3,4]]}"#);
        assert_eq!(
            serde_json::from_str::<FactorizationCertificate>(&s).unwrap(),
            c
        );
    }

    #[test]
    fn top_two_ties() {
        assert_eq!(top_two(&[3, 3, 3]), (0, 1));
        assert_eq!(top_two(&[1, 3, 3]), (1, 2));
        assert_eq!(top_two(&[4, 1, 2]), (0, 2));
    }

    proptest! {
        #[test]
        fn certificates_verify(exps in proptest::collection::vec(0u64..10, 2..7), m in 0u64..8) {
            let a = ev(&exps);
            prop_assume!(member_ordinary_fast(&a, m).unwrap());
            let c = greedy_certificate(&a, m).unwrap();
            prop_assert_eq!(c.pairs.len() as u64, m);
            prop_assert!(verify_certificate(&c, &a).unwrap());
        }
    }
}
