//! Closed-form membership tests for powers of the coordinate-axes ideal
//! `I(2,n) = (x_i x_j : 1 <= i < j <= n)`.
//!
//! For `x^a` with total degree `A`:
//!
//! * `x^a ∈ I(2,n)^(m)` iff `A - a_i >= m` for every `i` (the codim-inequalities);
//! * `x^a ∈ I(2,n)^m` iff additionally `A >= 2m` (the degree-inequality).

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;

/// The coordinate-axes ideal in `n >= 2` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AxesIdealSpec {
    n: usize,
}

impl AxesIdealSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "the axes ideal needs at least 2 variables, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.n;
        let gens = (1..=n).flat_map(|i| {
            (i + 1..=n).map(move |j| {
                let mut v = vec![0u64; n];
                v[i - 1] = 1;
                v[j - 1] = 1;
                ExponentVector::new(v).expect("n >= 2")
            })
        });
        MonomialIdeal::from_generators(n, gens).expect("dimensions agree by construction")
    }
}

/// The `C(n,2)` squarefree quadrics `x_i x_j`, in canonical order.
pub fn i2n_generators(n: usize) -> Result<MonomialIdeal> {
    Ok(AxesIdealSpec::new(n)?.ideal())
}

/// A failed membership inequality, used for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inequality {
    /// `A - a_i >= m` fails for this variable (1-based).
    Codim(usize),
    /// `A >= 2m` fails.
    Degree,
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inequality::Codim(i) => write!(f, "codim-inequality {i}"),
            Inequality::Degree => f.write_str("degree-inequality"),
        }
    }
}

fn check_axes_vector(a: &ExponentVector) -> Result<()> {
    AxesIdealSpec::new(a.n()).map(|_| ())
}

fn total(a: &ExponentVector) -> u128 {
    a.as_slice().iter().map(|&e| e as u128).sum()
}

/// First violated codim-inequality for the symbolic power `I^(m)`, if any.
pub fn symbolic_violation(a: &ExponentVector, m: u64) -> Result<Option<Inequality>> {
    check_axes_vector(a)?;
    let big_a = total(a);
    Ok(a.as_slice()
        .iter()
        .position(|&ai| big_a - (ai as u128) < m as u128)
        .map(|i| Inequality::Codim(i + 1)))
}

/// First violated inequality for the ordinary power `I^m`, if any.
/// Codim-inequalities are reported before the degree-inequality.
pub fn ordinary_violation(a: &ExponentVector, m: u64) -> Result<Option<Inequality>> {
    if let Some(v) = symbolic_violation(a, m)? {
        return Ok(Some(v));
    }
    if total(a) < 2 * (m as u128) {
        return Ok(Some(Inequality::Degree));
    }
    Ok(None)
}

/// Membership of `x^a` in `I(2,n)^m` by the inequality criterion.
pub fn member_ordinary_fast(a: &ExponentVector, m: u64) -> Result<bool> {
    Ok(ordinary_violation(a, m)?.is_none())
}

/// Membership of `x^a` in `I(2,n)^(m)` by the inequality criterion.
pub fn member_symbolic_fast(a: &ExponentVector, m: u64) -> Result<bool> {
    Ok(symbolic_violation(a, m)?.is_none())
}

/// `⌈(2 - 2/n) m⌉ = ⌈(2n - 2) m / n⌉`, in exact integer arithmetic.
pub fn bound(n: usize, m: u64) -> Result<u64> {
    AxesIdealSpec::new(n)?;
    let n = n as u128;
    let num = (2 * n - 2) * m as u128;
    u64::try_from(num.div_ceil(n)).map_err(|_| Error::Overflow)
}

/// Lowers `a` to total degree exactly `2m` while keeping it in `I(2,n)^m`.
///
/// Equivalent to repeatedly decrementing the largest entry (smallest index
/// on ties) until the degree is `2m`, computed in one pass: every entry is
/// capped at a level `L`, then the first few entries sitting at `L` drop to
/// `L - 1`.
pub fn normalize(a: &ExponentVector, m: u64) -> Result<ExponentVector> {
    if let Some(v) = ordinary_violation(a, m)? {
        return Err(Error::NotAMember {
            vector: a.to_string(),
            reason: format!("{v} fails for m={m}"),
        });
    }
    let excess = total(a) - 2 * (m as u128);
    let above = |level: u64| -> u128 {
        a.as_slice()
            .iter()
            .map(|&e| e.saturating_sub(level) as u128)
            .sum()
    };

    // Smallest level whose capping removes at most `excess`.
    let (mut lo, mut hi) = (0u64, *a.as_slice().iter().max().expect("n >= 2"));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if above(mid) <= excess {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let level = lo;
    let mut leftover = excess - above(level);

    let mut out = a.clone();
    for e in out.as_mut_slice() {
        if *e >= level {
            *e = level;
            if leftover > 0 {
                *e -= 1;
                leftover -= 1;
            }
        }
    }
    if leftover != 0 {
        return Err(Error::Internal(
            "normalization did not reach degree 2m".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[u64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    /// One decrement at a time, exactly as the rule is stated.
    fn normalize_stepwise(a: &ExponentVector, m: u64) -> ExponentVector {
        let mut v = a.as_slice().to_vec();
        while v.iter().sum::<u64>() > 2 * m {
            let max = *v.iter().max().unwrap();
            let i = v.iter().position(|&e| e == max).unwrap();
            v[i] -= 1;
        }
        ev(&v)
    }

    #[test]
    fn generators() {
        let i = i2n_generators(3).unwrap();
        assert_eq!(
            i.generators(),
            &[ev(&[0, 1, 1]), ev(&[1, 0, 1]), ev(&[1, 1, 0])]
        );
        assert_eq!(i2n_generators(2).unwrap().generators(), &[ev(&[1, 1])]);
        assert_eq!(i2n_generators(4).unwrap().len(), 6);
        assert!(i2n_generators(1).is_err());
        assert!(i2n_generators(0).is_err());
    }

    #[test]
    fn ordinary_examples() {
        assert!(member_ordinary_fast(&ev(&[1, 1, 1, 1]), 2).unwrap());
        assert!(member_ordinary_fast(&ev(&[2, 2, 2]), 3).unwrap());
        assert!(!member_ordinary_fast(&ev(&[1, 1, 1]), 2).unwrap());
        assert_eq!(
            ordinary_violation(&ev(&[1, 1, 1]), 2).unwrap(),
            Some(Inequality::Degree)
        );
        assert_eq!(
            ordinary_violation(&ev(&[3, 0, 0]), 1).unwrap(),
            Some(Inequality::Codim(1))
        );
    }

    #[test]
    fn symbolic_examples() {
        assert!(member_symbolic_fast(&ev(&[1, 1, 1]), 2).unwrap());
        for m in 1..6 {
            assert!(!member_symbolic_fast(&ev(&[m, 0, 0, 0]), m).unwrap());
        }
        assert!(member_symbolic_fast(&ev(&[1, 1, 0]), 1).unwrap());
    }

    #[test]
    fn single_variable_rejected() {
        assert!(member_ordinary_fast(&ev(&[3]), 1).is_err());
        assert!(member_symbolic_fast(&ev(&[3]), 1).is_err());
    }

    #[test]
    fn inequality_labels() {
        assert_eq!(Inequality::Codim(2).to_string(), "codim-inequality 2");
        assert_eq!(Inequality::Degree.to_string(), "degree-inequality");
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bound(3, 2).unwrap(), 3);
        assert_eq!(bound(3, 1).unwrap(), 2);
        assert_eq!(bound(4, 3).unwrap(), 5);
        assert_eq!(bound(2, 7).unwrap(), 7);
        assert!(bound(1, 1).is_err());
    }

    #[test]
    fn bound_matches_rational_ceiling() {
        for n in 2..12usize {
            for m in 1..40u64 {
                let exact = (2.0 - 2.0 / n as f64) * m as f64;
                // Exact rational ceiling, avoiding float rounding at integers.
                let num = (2 * n as u64 - 2) * m;
                let ceil = num / n as u64 + u64::from(!num.is_multiple_of(n as u64));
                assert_eq!(bound(n, m).unwrap(), ceil);
                assert!((ceil as f64) >= exact - 1e-9 && (ceil as f64) < exact + 1.0);
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&ev(&[2, 1, 1]), 2).unwrap(), ev(&[2, 1, 1]));
        assert_eq!(normalize(&ev(&[3, 1, 1]), 2).unwrap(), ev(&[2, 1, 1]));
        let v = normalize(&ev(&[2, 2, 2]), 2).unwrap();
        assert_eq!(v, ev(&[1, 1, 2]));
        assert_eq!(v.degree().unwrap(), 4);
        assert!(member_ordinary_fast(&v, 2).unwrap());
    }

    #[test]
    fn normalize_rejects_non_members() {
        assert!(matches!(
            normalize(&ev(&[1, 1, 1]), 2),
            Err(Error::NotAMember { .. })
        ));
    }

    #[test]
    fn normalize_huge_exponents() {
        // stepwise: (H,5,5) -> (5,5,5) -> (4,4,4) -> (3,3,4)
        let a = ev(&[u64::MAX / 4, 5, 5]);
        assert_eq!(normalize(&a, 5).unwrap(), ev(&[3, 3, 4]));
    }

    proptest! {
        #[test]
        fn normalize_agrees_with_stepwise(
            exps in proptest::collection::vec(0u64..8, 2..6),
            m in 0u64..6,
        ) {
            let a = ev(&exps);
            prop_assume!(member_ordinary_fast(&a, m).unwrap());
            let fast = normalize(&a, m).unwrap();
            prop_assert_eq!(&fast, &normalize_stepwise(&a, m));
            prop_assert_eq!(fast.degree().unwrap(), 2 * m);
            prop_assert!(member_ordinary_fast(&fast, m).unwrap());
            prop_assert!(fast.as_slice().iter().zip(a.as_slice()).all(|(x, y)| x <= y));
        }

        #[test]
        fn powers_are_nested(exps in proptest::collection::vec(0u64..8, 2..6), m in 2u64..8) {
            let a = ev(&exps);
            if member_symbolic_fast(&a, m).unwrap() {
                prop_assert!(member_symbolic_fast(&a, m - 1).unwrap());
            }
            if member_ordinary_fast(&a, m).unwrap() {
                prop_assert!(member_ordinary_fast(&a, m - 1).unwrap());
                prop_assert!(member_symbolic_fast(&a, m).unwrap());
            }
        }
    }
}
