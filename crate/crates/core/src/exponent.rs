//! Exponent vectors of monomials in `k[x1, ..., xn]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// The exponent tuple `(a1, ..., an)` of the monomial `x1^a1 * ... * xn^an`.
///
/// The derived ordering is lexicographic, which is the canonical generator
/// order used by [`crate::MonomialIdeal`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ExponentVector(Vec<u64>);

impl ExponentVector {
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidArgument(
                "exponent vector needs at least one variable".into(),
            ));
        }
        Ok(Self(exps))
    }

    /// The monomial `1` in `n` variables.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "ambient variable count must be positive");
        Self(vec![0; n])
    }

    /// The variable `x_var` (1-based) in `n` variables.
    pub fn unit(n: usize, var: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[var - 1] = 1;
        v
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Total degree `A = a1 + ... + an`.
    pub fn degree(&self) -> Result<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .ok_or(Error::Overflow)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Coordinatewise sum, i.e. the exponent vector of the product.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.n(), other.n())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [u64] {
        &mut self.0
    }
}

impl TryFrom<Vec<u64>> for ExponentVector {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ExponentVector> for Vec<u64> {
    fn from(v: ExponentVector) -> Self {
        v.0
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u64;

    fn index(&self, i: usize) -> &u64 {
        &self.0[i]
    }
}

/// Vector form, e.g. `[2,1,1]`.
impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// `true` iff `d` divides `m`, i.e. `d_i <= m_i` for every coordinate.
pub fn divides(d: &ExponentVector, m: &ExponentVector) -> Result<bool> {
    check_dim(d.n(), m.n())?;
    Ok(d.divides_unchecked(m))
}

/// Coordinatewise maximum.
pub fn lcm(a: &ExponentVector, b: &ExponentVector) -> Result<ExponentVector> {
    check_dim(a.n(), b.n())?;
    Ok(a.lcm_unchecked(b))
}

/// All exponent vectors in `n` variables of total degree exactly `degree`,
/// in lexicographically ascending order.
pub fn vectors_of_degree(n: usize, degree: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut buf = vec![0u64; n];
    fill_compositions(&mut buf, 0, degree, &mut out);
    out
}

/// All exponent vectors in `n` variables of total degree at most `max_degree`.
pub fn vectors_up_to_degree(n: usize, max_degree: u64) -> Vec<ExponentVector> {
    (0..=max_degree)
        .flat_map(|d| vectors_of_degree(n, d))
        .collect()
}

fn fill_compositions(buf: &mut [u64], pos: usize, remaining: u64, out: &mut Vec<ExponentVector>) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        out.push(ExponentVector(buf.to_vec()));
        return;
    }
    for e in 0..=remaining {
        buf[pos] = e;
        fill_compositions(buf, pos + 1, remaining - e, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn divides_examples() {
        assert!(divides(&ev(&[1, 1, 0]), &ev(&[2, 1, 1])).unwrap());
        assert!(divides(&ev(&[0, 0, 0]), &ev(&[5, 0, 2])).unwrap());
        assert!(!divides(&ev(&[2, 0]), &ev(&[1, 3])).unwrap());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(
            lcm(&ev(&[1, 0, 2]), &ev(&[0, 3, 1])).unwrap(),
            ev(&[1, 3, 2])
        );
        let a = ev(&[4, 0, 7]);
        assert_eq!(lcm(&a, &a).unwrap(), a);
        assert_eq!(lcm(&ev(&[0, 0]), &ev(&[1, 1])).unwrap(), ev(&[1, 1]));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = divides(&ev(&[1, 0]), &ev(&[1, 0, 0])).unwrap_err();
        assert_eq!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
        assert!(lcm(&ev(&[1]), &ev(&[1, 1])).is_err());
    }

    #[test]
    fn empty_vector_rejected() {
        assert!(ExponentVector::new(vec![]).is_err());
    }

    #[test]
    fn add_detects_overflow() {
        let big = ev(&[u64::MAX, 0]);
        assert_eq!(big.checked_add(&ev(&[1, 0])), Err(Error::Overflow));
        assert_eq!(ev(&[u64::MAX, 1]).degree(), Err(Error::Overflow));
    }

    #[test]
    fn composition_counts() {
        // C(d + n - 1, n - 1)
        assert_eq!(vectors_of_degree(3, 4).len(), 15);
        assert_eq!(vectors_of_degree(5, 10).len(), 1001);
        assert_eq!(vectors_up_to_degree(2, 3).len(), 10);
        let v = vectors_of_degree(3, 2);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|x| x.degree().unwrap() == 2));
    }

    #[test]
    fn serde_roundtrip_and_validation() {
        let v = ev(&[2, 1, 1]);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[2,1,1]");
        assert_eq!(serde_json::from_str::<ExponentVector>(&s).unwrap(), v);
        assert!(serde_json::from_str::<ExponentVector>("[]").is_err());
    }
}
