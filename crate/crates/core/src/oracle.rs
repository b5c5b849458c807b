//! Independent verifiers and the containment-threshold survey.
//!
//! Everything here recomputes facts about `I(2,n)` from definitions
//! (generator expansion, intersections of prime powers, brute-force
//! factorization search) so that the closed-form criteria in
//! [`crate::axes`] can be checked against them.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::axes::{bound, i2n_generators, member_ordinary_fast, member_symbolic_fast};
use crate::error::{check_dim, Error, Result};
use crate::exponent::{vectors_up_to_degree, ExponentVector};
use crate::ideal::{first_non_member, intersect_all, member, power, MonomialIdeal};
use crate::primes::{
    minimal_primes, prime_power_ideal, prime_power_member, symbolic_power, PrimeSupport,
};

/// Size limits for the grid computations. Exceeding one is a refusal, not a crash.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceLimits {
    pub max_n: usize,
    pub max_m: u64,
    pub max_degree: u64,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_m: 10,
            max_degree: 40,
        }
    }
}

impl ResourceLimits {
    pub fn check(&self, n: usize, m: u64, degree: u64) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceLimit(format!(
                "n={n} exceeds max-n={}",
                self.max_n
            )));
        }
        if m > self.max_m {
            return Err(Error::ResourceLimit(format!(
                "m={m} exceeds max-m={}",
                self.max_m
            )));
        }
        if degree > self.max_degree {
            return Err(Error::ResourceLimit(format!(
                "degree {degree} exceeds max-degree={}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

fn require_grid_cell(n: usize, m: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "grid checks need n >= 3, got {n}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidArgument("grid checks need m >= 1".into()));
    }
    Ok(())
}

/// `x^a ∈ I^m` decided from the definition: is there a multiset of `m`
/// generators whose product divides `x^a`?
pub fn member_bruteforce(a: &ExponentVector, ideal: &MonomialIdeal, m: u64) -> Result<bool> {
    Ok(bruteforce_witness(a, ideal, m)?.is_some())
}

/// Like [`member_bruteforce`], returning the `m` generators (in canonical
/// order, with repetition) whose product divides `x^a`.
pub fn bruteforce_witness(
    a: &ExponentVector,
    ideal: &MonomialIdeal,
    m: u64,
) -> Result<Option<Vec<ExponentVector>>> {
    check_dim(ideal.n(), a.n())?;
    let gens = ideal.generators();
    let mut search = Search {
        gens,
        min_degree: gens
            .iter()
            .map(|g| g.as_slice().iter().map(|&e| e as u128).sum::<u128>())
            .min()
            .unwrap_or(0),
        failed: HashSet::new(),
        path: Vec::new(),
    };
    let mut residual = a.as_slice().to_vec();
    if search.dfs(&mut residual, m, 0) {
        Ok(Some(search.path.iter().map(|&k| gens[k].clone()).collect()))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    gens: &'a [ExponentVector],
    min_degree: u128,
    // (residual, remaining depth, first generator index allowed)
    failed: HashSet<(Vec<u64>, u64, usize)>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, residual: &mut Vec<u64>, depth: u64, start: usize) -> bool {
        if depth == 0 {
            return true;
        }
        let budget: u128 = residual.iter().map(|&e| e as u128).sum();
        if budget < self.min_degree * depth as u128 {
            return false;
        }
        let key = (residual.clone(), depth, start);
        if self.failed.contains(&key) {
            return false;
        }
        for k in start..self.gens.len() {
            let g = self.gens[k].as_slice();
            if !g.iter().zip(residual.iter()).all(|(x, r)| x <= r) {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(g) {
                *r -= x;
            }
            self.path.push(k);
            let found = self.dfs(residual, depth - 1, k);
            for (r, x) in residual.iter_mut().zip(g) {
                *r += x;
            }
            if found {
                return true;
            }
            self.path.pop();
        }
        self.failed.insert(key);
        false
    }
}

/// Result of a grid check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// Two computations disagree on this exponent vector.
    Disagreement {
        vector: ExponentVector,
        detail: String,
    },
    /// A minimal generator lies above the degree that was enumerated.
    DegreeBoundExceeded {
        generator: ExponentVector,
        bound: u64,
    },
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }
}

/// The right-hand side `(∩_i P_i^m) ∩ (x1,...,xn)^(2m)`, every factor built
/// from its explicit generator list.
pub fn decomposition_rhs(n: usize, m: u64) -> Result<MonomialIdeal> {
    let mut factors = (1..=n)
        .map(|i| PrimeSupport::omitting(n, i).map(|p| prime_power_ideal(&p, m)))
        .collect::<Result<Vec<_>>>()?;
    let maximal = PrimeSupport::new(n, 1..=n)?;
    factors.push(prime_power_ideal(&maximal, 2 * m));
    intersect_all(n, &factors)
}

/// `I(2,n)^m` equals the intersection of the `m`-th powers of the primes
/// omitting one variable with the `2m`-th power of the maximal ideal.
pub fn check_primary_decomposition(
    n: usize,
    m: u64,
    limits: &ResourceLimits,
) -> Result<CheckOutcome> {
    require_grid_cell(n, m)?;
    limits.check(n, m, 2 * m)?;
    let lhs = power(&i2n_generators(n)?, m)?;
    let rhs = decomposition_rhs(n, m)?;
    if lhs == rhs {
        return Ok(CheckOutcome::Pass);
    }
    if let Some(g) = first_non_member(&rhs, &lhs)? {
        return Ok(CheckOutcome::Disagreement {
            vector: g.clone(),
            detail: "generator of the ordinary power missing from the decomposition".into(),
        });
    }
    match first_non_member(&lhs, &rhs)? {
        Some(g) => Ok(CheckOutcome::Disagreement {
            vector: g.clone(),
            detail: "generator of the decomposition missing from the ordinary power".into(),
        }),
        None => Err(Error::Internal(
            "mutually contained ideals with different canonical generators".into(),
        )),
    }
}

/// The codim-inequalities agree with membership in the intersection of
/// prime powers on every monomial of degree `<= 2m + 2`, and every minimal
/// generator of the symbolic power has degree `<= 2m`.
pub fn check_symbolic_lemma(n: usize, m: u64, limits: &ResourceLimits) -> Result<CheckOutcome> {
    require_grid_cell(n, m)?;
    let max_deg = 2 * m + 2;
    limits.check(n, m, max_deg)?;
    let sym = symbolic_power(&i2n_generators(n)?, m)?;
    for g in sym.generators() {
        if g.degree()? > 2 * m {
            return Ok(CheckOutcome::DegreeBoundExceeded {
                generator: g.clone(),
                bound: 2 * m,
            });
        }
    }
    for a in vectors_up_to_degree(n, max_deg) {
        let fast = member_symbolic_fast(&a, m)?;
        let core = member(&a, &sym)?;
        if fast != core {
            return Ok(CheckOutcome::Disagreement {
                vector: a,
                detail: format!("inequality criterion says {fast}, symbolic power says {core}"),
            });
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Verdicts of the three membership engines for one monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineVerdicts {
    pub fast: bool,
    pub core: bool,
    pub oracle: bool,
}

impl EngineVerdicts {
    pub fn agree(&self) -> bool {
        self.fast == self.core && self.core == self.oracle
    }
}

/// Ordinary and symbolic membership agree across the inequality criterion,
/// generator expansion, and definition-level search, on every monomial of
/// degree `<= 2m + 3`.
pub fn check_engine_agreement(n: usize, m: u64, limits: &ResourceLimits) -> Result<CheckOutcome> {
    require_grid_cell(n, m)?;
    let max_deg = 2 * m + 3;
    limits.check(n, m, max_deg)?;
    let ideal = i2n_generators(n)?;
    let pow = power(&ideal, m)?;
    let sym = symbolic_power(&ideal, m)?;
    let primes = minimal_primes(&ideal)?;

    for a in vectors_up_to_degree(n, max_deg) {
        let ordinary = EngineVerdicts {
            fast: member_ordinary_fast(&a, m)?,
            core: member(&a, &pow)?,
            oracle: member_bruteforce(&a, &ideal, m)?,
        };
        if !ordinary.agree() {
            return Ok(CheckOutcome::Disagreement {
                vector: a,
                detail: format!("ordinary membership engines disagree: {ordinary:?}"),
            });
        }
        let symbolic = EngineVerdicts {
            fast: member_symbolic_fast(&a, m)?,
            core: member(&a, &sym)?,
            oracle: primes
                .iter()
                .map(|p| prime_power_member(&a, p, m))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b),
        };
        if !symbolic.agree() {
            return Ok(CheckOutcome::Disagreement {
                vector: a,
                detail: format!("symbolic membership engines disagree: {symbolic:?}"),
            });
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Smallest `d` with `I^(d) ⊆ I^m`, plus a monomial in `I^(d-1) \ I^m`
/// when `d > m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub d_min: u64,
    pub witness: Option<ExponentVector>,
}

/// Ascending search from `d = m` up to the guaranteed `bound(n, m)`.
pub fn threshold_search(n: usize, m: u64, limits: &ResourceLimits) -> Result<Threshold> {
    require_grid_cell(n, m)?;
    let upper = bound(n, m)?;
    limits.check(n, m, 2 * m)?;
    let ideal = i2n_generators(n)?;
    let pow = power(&ideal, m)?;
    let mut witness = None;
    for d in m..=upper {
        let sym = symbolic_power(&ideal, d)?;
        match first_non_member(&pow, &sym)? {
            None => return Ok(Threshold { d_min: d, witness }),
            Some(g) => witness = Some(g.clone()),
        }
    }
    Err(Error::Internal(format!(
        "no d <= {upper} gives I^(d) ⊆ I^{m} for n={n}"
    )))
}

pub fn containment_threshold(n: usize, m: u64, limits: &ResourceLimits) -> Result<u64> {
    Ok(threshold_search(n, m, limits)?.d_min)
}

/// One cell of the containment survey.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub m: u64,
    pub d_min: u64,
    pub paper_bound: u64,
    pub els_bound: u64,
    pub witness: Option<ExponentVector>,
}

/// Thresholds for every `(n, m)` cell, in lexicographic `(n, m)` order.
/// Cells run on the current rayon pool; output is independent of scheduling.
pub fn survey(
    n_values: &[usize],
    m_values: &[u64],
    limits: &ResourceLimits,
) -> Result<Vec<SurveyRow>> {
    let ns: BTreeSet<usize> = n_values.iter().copied().collect();
    let ms: BTreeSet<u64> = m_values.iter().copied().collect();
    let cells: Vec<(usize, u64)> = ns
        .iter()
        .flat_map(|&n| ms.iter().map(move |&m| (n, m)))
        .collect();
    for &(n, m) in &cells {
        require_grid_cell(n, m)?;
        limits.check(n, m, 2 * m)?;
    }

    let mut rows = cells
        .par_iter()
        .map(|&(n, m)| survey_cell(n, m, limits))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| (r.n, r.m));
    Ok(rows)
}

fn survey_cell(n: usize, m: u64, limits: &ResourceLimits) -> Result<SurveyRow> {
    let t = threshold_search(n, m, limits)?;
    let row = SurveyRow {
        n,
        m,
        d_min: t.d_min,
        paper_bound: bound(n, m)?,
        els_bound: 2 * m,
        witness: t.witness,
    };
    if !(row.m <= row.d_min && row.d_min <= row.paper_bound && row.paper_bound <= row.els_bound) {
        return Err(Error::Internal(format!(
            "survey row violates the bound sandwich: {row:?}"
        )));
    }
    Ok(row)
}
