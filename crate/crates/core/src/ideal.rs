//! Monomial ideals represented by their minimal generating sets.

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::exponent::ExponentVector;

/// A monomial ideal in `k[x1, ..., xn]`, stored as its minimal generators.
///
/// Generators form an antichain under divisibility and are kept in
/// lexicographically ascending order, so two ideals are equal exactly when
/// their generator sequences are identical. The zero ideal has no
/// generators; the unit ideal is generated by the all-zeros vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, reducing to minimal generators.
    pub fn from_generators<I>(n: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(raw, n)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![ExponentVector::zeros(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].as_slice().iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(ExponentVector::is_squarefree)
    }

    /// Largest total degree among the minimal generators, `None` for the zero ideal.
    pub fn max_generator_degree(&self) -> Result<Option<u64>> {
        let mut best: Option<u64> = None;
        for g in &self.gens {
            let d = g.degree()?;
            best = Some(best.map_or(d, |b| b.max(d)));
        }
        Ok(best)
    }

    pub fn member(&self, m: &ExponentVector) -> Result<bool> {
        member(m, self)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Ideal file format: `n=<n>` followed by one generator per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for g in &self.gens {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Trie over exponent coordinates answering "does some stored vector divide `v`?".
#[derive(Debug, Default)]
pub(crate) struct DivisorIndex {
    // nodes[0] is the root; children are sorted by exponent.
    nodes: Vec<Vec<(u64, usize)>>,
    depth: usize,
}

impl DivisorIndex {
    pub(crate) fn new(depth: usize) -> Self {
        Self {
            nodes: vec![Vec::new()],
            depth,
        }
    }

    pub(crate) fn from_vectors<'a, I>(depth: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        let mut idx = Self::new(depth);
        for v in vectors {
            idx.insert(v);
        }
        idx
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.nodes[0].is_empty()
    }

    pub(crate) fn insert(&mut self, v: &ExponentVector) {
        let mut node = 0;
        for &e in v.as_slice() {
            node = match self.nodes[node].binary_search_by_key(&e, |&(k, _)| k) {
                Ok(pos) => self.nodes[node][pos].1,
                Err(pos) => {
                    let child = self.nodes.len();
                    self.nodes.push(Vec::new());
                    self.nodes[node].insert(pos, (e, child));
                    child
                }
            };
        }
    }

    pub(crate) fn has_divisor(&self, v: &ExponentVector) -> bool {
        if self.is_empty() {
            return false;
        }
        let coords = v.as_slice();
        let mut stack = vec![(0usize, 0usize)];
        while let Some((node, level)) = stack.pop() {
            if level == self.depth {
                return true;
            }
            for &(k, child) in &self.nodes[node] {
                if k > coords[level] {
                    break;
                }
                stack.push((child, level + 1));
            }
        }
        false
    }
}

/// Reduces `raw` to its divisibility-minimal elements, deduplicated and in
/// canonical order.
pub fn minimalize<I>(raw: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut keyed = Vec::new();
    for v in raw {
        check_dim(n, v.n())?;
        // u128 cannot overflow for any realistic n
        let deg: u128 = v.as_slice().iter().map(|&e| e as u128).sum();
        keyed.push((deg, v));
    }
    keyed.sort_unstable();
    keyed.dedup_by(|a, b| a.1 == b.1);

    // A proper divisor has strictly smaller degree, so it is seen first.
    let mut index = DivisorIndex::new(n);
    let mut gens = Vec::new();
    for (_, v) in keyed {
        if !index.has_divisor(&v) {
            index.insert(&v);
            gens.push(v);
        }
    }
    gens.sort_unstable();
    Ok(MonomialIdeal { n, gens })
}

/// `true` iff some generator of `ideal` divides `m`.
pub fn member(m: &ExponentVector, ideal: &MonomialIdeal) -> Result<bool> {
    check_dim(ideal.n, m.n())?;
    Ok(ideal.gens.iter().any(|g| g.divides_unchecked(m)))
}

pub fn product(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_dim(i.n, j.n)?;
    let mut raw = Vec::with_capacity(i.len() * j.len());
    for g in &i.gens {
        for h in &j.gens {
            raw.push(g.checked_add(h)?);
        }
    }
    minimalize(raw, i.n)
}

/// `I^m` by repeated multiplication; `I^0` is the unit ideal.
pub fn power(ideal: &MonomialIdeal, m: u64) -> Result<MonomialIdeal> {
    if m == 0 {
        return Ok(MonomialIdeal::unit(ideal.n));
    }
    let mut acc = ideal.clone();
    for _ in 1..m {
        acc = product(&acc, ideal)?;
    }
    Ok(acc)
}

/// Intersection via pairwise lcm of generators.
///
/// A generator of one side that already lies in the other side contributes
/// only itself, so lcms are formed only between the remaining generators.
pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_dim(i.n, j.n)?;
    let i_index = DivisorIndex::from_vectors(i.n, &i.gens);
    let j_index = DivisorIndex::from_vectors(j.n, &j.gens);

    let (i_in_j, i_rest): (Vec<_>, Vec<_>) = i.gens.iter().partition(|g| j_index.has_divisor(g));
    let (j_in_i, j_rest): (Vec<_>, Vec<_>) = j.gens.iter().partition(|h| i_index.has_divisor(h));

    let mut raw: Vec<ExponentVector> = i_in_j.into_iter().chain(j_in_i).cloned().collect();
    for g in &i_rest {
        for h in &j_rest {
            raw.push(g.lcm_unchecked(h));
        }
    }
    minimalize(raw, i.n)
}

/// Left fold of [`intersect`]; the empty intersection is the unit ideal.
pub fn intersect_all<'a, I>(n: usize, ideals: I) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = &'a MonomialIdeal>,
{
    let mut iter = ideals.into_iter();
    let Some(first) = iter.next() else {
        return Ok(MonomialIdeal::unit(n));
    };
    check_dim(n, first.n)?;
    iter.try_fold(first.clone(), |acc, next| intersect(&acc, next))
}

/// `inner ⊆ outer`, decided on the minimal generators of `inner`.
pub fn contains(outer: &MonomialIdeal, inner: &MonomialIdeal) -> Result<bool> {
    check_dim(outer.n, inner.n)?;
    Ok(first_non_member(outer, inner)?.is_none())
}

/// The first generator of `inner` (in canonical order) outside `outer`.
pub fn first_non_member<'a>(
    outer: &MonomialIdeal,
    inner: &'a MonomialIdeal,
) -> Result<Option<&'a ExponentVector>> {
    check_dim(outer.n, inner.n)?;
    let index = DivisorIndex::from_vectors(outer.n, &outer.gens);
    Ok(inner.gens.iter().find(|g| !index.has_divisor(g)))
}

pub(crate) fn ensure_nontrivial(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::TrivialIdeal("zero"))
    } else if ideal.is_unit() {
        Err(Error::TrivialIdeal("unit"))
    } else {
        Ok(())
    }
}
