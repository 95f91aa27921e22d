//! Exact arithmetic of numerical semigroups: membership, Apéry sets,
//! gaps, factorization length sets, and the pseudo-symmetric and
//! homogeneous predicates.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of generators is {0}, expected 1")]
    GcdNotOne(u64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
}

/// A numerical semigroup `<n_1, ..., n_k>` with gcd 1.
///
/// Membership is answered from the Apéry table of the multiplicity,
/// which is built once at construction; values are immutable afterwards
/// and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    multiplicity: u64,
    /// `apery_table[r]` is the least element of S congruent to r modulo
    /// the multiplicity.
    apery_table: Vec<u64>,
}

/// Apéry set of S with respect to an element s: the least element of S in
/// each residue class mod s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AperySet {
    pub base: u64,
    pub elements: Vec<u64>,
}

/// The set of total factorization lengths of an element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthSet {
    pub target: u64,
    pub lengths: BTreeSet<u64>,
}

impl LengthSet {
    pub fn is_singleton(&self) -> bool {
        self.lengths.len() == 1
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    pub fn new(generators: Vec<u64>) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = generators.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let multiplicity = *generators.iter().min().unwrap();
        let apery_table = build_apery_table(&generators, multiplicity);
        Ok(NumericalSemigroup { generators, multiplicity, apery_table })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.apery_table[(x % self.multiplicity) as usize]
    }

    /// All factorizations of `s` over the generators, as exponent tuples
    /// in generator order. Exhaustive bounded depth-first search.
    pub fn factorizations(&self, s: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut current = vec![0u64; self.generators.len()];
        factorization_dfs(&self.generators, 0, s, &mut current, &mut out);
        out
    }

    pub fn length_set(&self, s: u64) -> Result<LengthSet, SemigroupError> {
        if !self.contains(s) {
            return Err(SemigroupError::NotInSemigroup(s));
        }
        let lengths: BTreeSet<u64> = self
            .factorizations(s)
            .iter()
            .map(|f| f.iter().sum())
            .collect();
        Ok(LengthSet { target: s, lengths })
    }

    pub fn apery_set(&self, s: u64) -> Result<AperySet, SemigroupError> {
        if s == 0 || !self.contains(s) {
            return Err(SemigroupError::NotInSemigroup(s));
        }
        let mut elements = Vec::with_capacity(s as usize);
        for r in 0..s {
            let mut x = r;
            while !self.contains(x) {
                x += s;
            }
            elements.push(x);
        }
        elements.sort_unstable();
        Ok(AperySet { base: s, elements })
    }

    /// Frobenius number and the (finite) gap set. By convention the
    /// Frobenius number of the whole of N is -1.
    pub fn frobenius_and_gaps(&self) -> (i64, BTreeSet<u64>) {
        let m = self.multiplicity;
        let mut gaps = BTreeSet::new();
        for r in 0..m {
            let top = self.apery_table[r as usize];
            let mut x = r;
            while x < top {
                if x > 0 {
                    gaps.insert(x);
                }
                x += m;
            }
        }
        let frobenius = gaps.iter().next_back().map(|&g| g as i64).unwrap_or(-1);
        (frobenius, gaps)
    }

    pub fn genus(&self) -> u64 {
        self.frobenius_and_gaps().1.len() as u64
    }

    /// Gap-theoretic pseudo-symmetry: the Frobenius number F is even and
    /// every gap x other than F/2 has F - x in S.
    pub fn is_pseudo_symmetric(&self) -> bool {
        let (frobenius, gaps) = self.frobenius_and_gaps();
        if frobenius < 0 || frobenius % 2 != 0 {
            return false;
        }
        let f = frobenius as u64;
        gaps.iter()
            .filter(|&&x| x != f / 2)
            .all(|&x| self.contains(f - x))
    }

    /// A semigroup is homogeneous when every nonzero element of the Apéry
    /// set of the multiplicity has a single factorization length.
    pub fn is_homogeneous(&self) -> bool {
        let apery = self
            .apery_set(self.multiplicity)
            .expect("multiplicity is an element");
        apery
            .elements
            .iter()
            .filter(|&&x| x != 0)
            .all(|&x| self.length_set(x).expect("apery element").is_singleton())
    }

    /// Hilbert function of the associated graded ring, from the
    /// semigroup side: the dimension of `m^i / m^{i+1}` is the number of
    /// elements whose maximal factorization length is exactly `i`.
    pub fn graded_hilbert_function(&self, up_to: usize) -> Vec<usize> {
        let largest = *self.generators.iter().max().unwrap();
        let bound = (up_to as u64 + 1) * largest;
        // maximal factorization length per element, by dynamic programming
        let mut max_len: Vec<Option<usize>> = vec![None; (bound + 1) as usize];
        max_len[0] = Some(0);
        for s in 1..=bound {
            let mut best: Option<usize> = None;
            for &g in &self.generators {
                if g <= s {
                    if let Some(l) = max_len[(s - g) as usize] {
                        best = Some(best.map_or(l + 1, |b| b.max(l + 1)));
                    }
                }
            }
            max_len[s as usize] = best;
        }
        let mut hf = vec![0usize; up_to + 1];
        for entry in max_len.iter().flatten() {
            if *entry <= up_to {
                hf[*entry] += 1;
            }
        }
        hf
    }

    /// Check that no generator is a nonnegative combination of the others.
    pub fn is_minimally_generated(&self) -> bool {
        (0..self.generators.len()).all(|i| {
            let others: Vec<u64> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &g)| g)
                .collect();
            !representable(self.generators[i], &others)
        })
    }
}

/// Least element of `<gens>` in each residue class mod `m`, by repeated
/// relaxation (shortest paths on the residue graph).
fn build_apery_table(gens: &[u64], m: u64) -> Vec<u64> {
    let m = m as usize;
    let mut table = vec![u64::MAX; m];
    table[0] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for r in 0..m {
            if table[r] == u64::MAX {
                continue;
            }
            for &g in gens {
                let value = table[r] + g;
                let r2 = (value % m as u64) as usize;
                if value < table[r2] {
                    table[r2] = value;
                    changed = true;
                }
            }
        }
    }
    table
}

fn factorization_dfs(
    gens: &[u64],
    index: usize,
    remaining: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if index == gens.len() {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    if index == gens.len() - 1 {
        // last coordinate is forced
        if remaining.is_multiple_of(gens[index]) {
            current[index] = remaining / gens[index];
            out.push(current.clone());
            current[index] = 0;
        }
        return;
    }
    let bound = remaining / gens[index];
    for u in 0..=bound {
        current[index] = u;
        factorization_dfs(gens, index + 1, remaining - u * gens[index], current, out);
    }
    current[index] = 0;
}

/// Is `x` a nonnegative integer combination of `gens`? Used for the
/// minimal-generation check, where `gens` may have gcd > 1.
pub fn representable(x: u64, gens: &[u64]) -> bool {
    if x == 0 {
        return true;
    }
    if gens.is_empty() {
        return false;
    }
    let mut reachable = vec![false; (x + 1) as usize];
    reachable[0] = true;
    for v in 1..=x {
        for &g in gens {
            if g <= v && reachable[(v - g) as usize] {
                reachable[v as usize] = true;
                break;
            }
        }
    }
    reachable[x as usize]
}
