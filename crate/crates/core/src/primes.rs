//! Monomial primes, minimal primes of squarefree ideals, and symbolic powers.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exponent::{vectors_of_degree, ExponentVector};
use crate::ideal::{ensure_nontrivial, intersect_all, minimalize, MonomialIdeal};

/// The monomial prime `(x_i : i in support)`; variables are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeSupport {
    n: usize,
    support: Vec<usize>,
}

impl PrimeSupport {
    pub fn new<I: IntoIterator<Item = usize>>(n: usize, vars: I) -> Result<Self> {
        let support: BTreeSet<usize> = vars.into_iter().collect();
        if support.is_empty() {
            return Err(Error::InvalidArgument(
                "prime support must be non-empty".into(),
            ));
        }
        if let Some(&bad) = support.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidArgument(format!(
                "variable x{bad} out of range 1..={n}"
            )));
        }
        Ok(Self {
            n,
            support: support.into_iter().collect(),
        })
    }

    /// The prime generated by every variable except `x_omit`.
    pub fn omitting(n: usize, omit: usize) -> Result<Self> {
        Self::new(n, (1..=n).filter(|&v| v != omit))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Variable numbers (1-based), ascending.
    pub fn variables(&self) -> &[usize] {
        &self.support
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        prime_power_ideal(self, 1)
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.support.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Minimal primes of a squarefree monomial ideal: the minimal vertex covers of
/// the hypergraph whose edges are the generator supports. Returned in
/// ascending order of their variable lists.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    ensure_nontrivial(ideal)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let edges: Vec<Vec<usize>> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut covers = BTreeSet::new();
    let mut chosen = vec![false; ideal.n()];
    branch_covers(&edges, &mut chosen, &mut covers);

    // Keep only inclusion-minimal covers; smaller covers come first.
    let mut by_size: Vec<Vec<usize>> = covers.into_iter().collect();
    by_size.sort_by_key(Vec::len);
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for c in by_size {
        if !minimal.iter().any(|m| m.iter().all(|v| c.contains(v))) {
            minimal.push(c);
        }
    }
    minimal.sort();
    minimal
        .into_iter()
        .map(|c| PrimeSupport::new(ideal.n(), c.into_iter().map(|v| v + 1)))
        .collect()
}

fn branch_covers(edges: &[Vec<usize>], chosen: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
    let uncovered = edges.iter().find(|e| !e.iter().any(|&v| chosen[v]));
    match uncovered {
        None => {
            let cover = (0..chosen.len()).filter(|&v| chosen[v]).collect();
            out.insert(cover);
        }
        Some(edge) => {
            for &v in edge {
                chosen[v] = true;
                branch_covers(edges, chosen, out);
                chosen[v] = false;
            }
        }
    }
}

/// `x^m ∈ P^k` iff the exponents over the support of `P` sum to at least `k`.
pub fn prime_power_member(m: &ExponentVector, prime: &PrimeSupport, k: u64) -> Result<bool> {
    check_dim(prime.n, m.n())?;
    let mut sum = 0u64;
    for &v in &prime.support {
        sum = sum.saturating_add(m[v - 1]);
        if sum >= k {
            return Ok(true);
        }
    }
    Ok(sum >= k)
}

/// `P^k` with its full generator set: every degree-`k` monomial in the
/// variables of `P`.
pub fn prime_power_ideal(prime: &PrimeSupport, k: u64) -> MonomialIdeal {
    let local = vectors_of_degree(prime.support.len(), k);
    let embedded = local.into_iter().map(|v| {
        let mut full = vec![0u64; prime.n];
        for (&var, &e) in prime.support.iter().zip(v.as_slice()) {
            full[var - 1] = e;
        }
        ExponentVector::new(full).expect("n is positive")
    });
    minimalize(embedded, prime.n).expect("dimensions agree by construction")
}

/// Symbolic power `I^(k)` of a squarefree monomial ideal, computed as the
/// intersection of the `k`-th powers of its minimal primes.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u64) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "symbolic power exponent must be at least 1".into(),
        ));
    }
    let primes = minimal_primes(ideal)?;
    let powers: Vec<MonomialIdeal> = primes.iter().map(|p| prime_power_ideal(p, k)).collect();
    intersect_all(ideal.n(), &powers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{intersect, power};

    fn ev(v: &[u64]) -> ExponentVector {
        ExponentVector::new(v.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(n, gens.iter().map(|g| ev(g))).unwrap()
    }

    fn i2n(n: usize) -> MonomialIdeal {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = 1;
                gens.push(ev(&v));
            }
        }
        MonomialIdeal::from_generators(n, gens).unwrap()
    }

    fn supports(primes: &[PrimeSupport]) -> BTreeSet<Vec<usize>> {
        primes.iter().map(|p| p.variables().to_vec()).collect()
    }

    #[test]
    fn prime_support_validation() {
        assert!(PrimeSupport::new(3, []).is_err());
        assert!(PrimeSupport::new(3, [0]).is_err());
        assert!(PrimeSupport::new(3, [4]).is_err());
        let p = PrimeSupport::new(3, [3, 2, 3]).unwrap();
        assert_eq!(p.variables(), &[2, 3]);
        assert_eq!(p.to_string(), "{2,3}");
    }

    #[test]
    fn minimal_primes_of_i23() {
        let got = supports(&minimal_primes(&i2n(3)).unwrap());
        let want: BTreeSet<Vec<usize>> = [vec![2, 3], vec![1, 3], vec![1, 2]].into();
        assert_eq!(got, want);
    }

    #[test]
    fn minimal_primes_of_single_edge() {
        let got = supports(&minimal_primes(&ideal(2, &[&[1, 1]])).unwrap());
        assert_eq!(got, [vec![1], vec![2]].into());
    }

    #[test]
    fn minimal_primes_of_i24() {
        let got = supports(&minimal_primes(&i2n(4)).unwrap());
        let want: BTreeSet<Vec<usize>> =
            [vec![2, 3, 4], vec![1, 3, 4], vec![1, 2, 4], vec![1, 2, 3]].into();
        assert_eq!(got, want);
    }

    #[test]
    fn minimal_primes_of_path() {
        // x1x2, x2x3: covers {2} and {1,3}
        let got = supports(&minimal_primes(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])).unwrap());
        assert_eq!(got, [vec![2], vec![1, 3]].into());
    }

    #[test]
    fn minimal_primes_rejects_bad_input() {
        assert_eq!(
            minimal_primes(&ideal(2, &[&[2, 1]])),
            Err(Error::NotSquarefree)
        );
        assert_eq!(
            minimal_primes(&MonomialIdeal::zero(2)),
            Err(Error::TrivialIdeal("zero"))
        );
        assert_eq!(
            minimal_primes(&MonomialIdeal::unit(2)),
            Err(Error::TrivialIdeal("unit"))
        );
    }

    #[test]
    fn prime_power_member_examples() {
        let p23 = PrimeSupport::new(3, [2, 3]).unwrap();
        assert!(prime_power_member(&ev(&[1, 1, 1]), &p23, 2).unwrap());
        assert!(!prime_power_member(&ev(&[3, 0, 0]), &p23, 1).unwrap());
        let all = PrimeSupport::new(3, [1, 2, 3]).unwrap();
        assert!(prime_power_member(&ev(&[0, 1, 1]), &all, 2).unwrap());
        assert!(prime_power_member(&ev(&[0, 1]), &all, 1).is_err());
    }

    #[test]
    fn prime_power_generator_count() {
        // C(|S| + k - 1, k)
        let p = PrimeSupport::new(5, [1, 2, 4]).unwrap();
        let pk = prime_power_ideal(&p, 3);
        assert_eq!(pk.len(), 10);
        assert!(pk.generators().iter().all(|g| g[2] == 0 && g[4] == 0));
    }

    #[test]
    fn symbolic_power_examples() {
        let i = i2n(3);
        assert_eq!(symbolic_power(&i, 1).unwrap(), i);

        // ∩ (x_j, x_k)^2 worked by hand: the squares of I plus x1x2x3.
        let s2 = symbolic_power(&i, 2).unwrap();
        assert!(s2.generators().contains(&ev(&[1, 1, 1])));
        let expected = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[1, 1, 1]]);
        assert_eq!(s2, expected);

        let edge = ideal(2, &[&[1, 1]]);
        for k in 1..5 {
            assert_eq!(symbolic_power(&edge, k).unwrap(), power(&edge, k).unwrap());
        }
    }

    #[test]
    fn symbolic_power_rejects_non_squarefree() {
        assert_eq!(
            symbolic_power(&ideal(2, &[&[2, 1]]), 2),
            Err(Error::NotSquarefree)
        );
        assert!(symbolic_power(&i2n(3), 0).is_err());
    }

    #[test]
    fn primes_of_i2n_intersect_back() {
        for n in 3..=6 {
            let i = i2n(n);
            let primes = minimal_primes(&i).unwrap();
            assert_eq!(primes.len(), n);
            assert!(primes.iter().all(|p| p.variables().len() == n - 1));
            let ideals: Vec<_> = primes.iter().map(PrimeSupport::to_ideal).collect();
            assert_eq!(intersect_all(n, &ideals).unwrap(), i);
            assert_eq!(intersect(&ideals[0], &ideals[0]).unwrap(), ideals[0]);
        }
    }
}
