//! Independent Betti-number oracle.
//!
//! For monomial ideals the multigraded Koszul homology is computed
//! exactly, one multidegree at a time, over the lcm lattice of the
//! generators. For general homogeneous ideals a graded-strand fallback
//! walks total degrees up to a regularity bound read off the initial
//! ideal, with the Euler characteristic against the Hilbert numerator as
//! a completeness certificate.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, One, Zero};
use thiserror::Error;

use crate::groebner::{groebner_basis, normal_form, Ideal, TermOrder};
use crate::komeda::BettiSequence;
use crate::poly::matrix::rational_matrix_rank;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("generator is not a monomial: {0}")]
    NotMonomial(String),
    #[error("ideal is not homogeneous in total degree: {0}")]
    NotHomogeneous(String),
    #[error("homological index {index} carries Betti number {value}, beyond the length-4 convention")]
    ProjectiveDimensionTooLarge { index: usize, value: usize },
    #[error("Euler identity failed at the degree cutoff {cutoff}; graded table incomplete")]
    CutoffExceeded { cutoff: usize },
}

/// Multigraded Betti table: dimensions keyed by homological index and
/// multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedBettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl MultigradedBettiTable {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), usize> {
        &self.entries
    }

    /// Total Betti number in homological index `i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Collapse multidegrees to total degrees.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for ((i, b), &v) in &self.entries {
            let j: usize = b.iter().map(|&e| e as usize).sum();
            *out.entry((*i, j)).or_insert(0) += v;
        }
        out
    }

    /// Castelnuovo-Mumford regularity of the table: max of `j - i`.
    pub fn regularity(&self) -> usize {
        self.graded()
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    pub fn betti_sequence(&self) -> Result<BettiSequence, BettiError> {
        totals_to_sequence(self.nvars, |i| self.total(i))
    }
}

/// Graded (total-degree) Betti table from the general fallback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBettiTable {
    nvars: usize,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl GradedBettiTable {
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn betti_sequence(&self) -> Result<BettiSequence, BettiError> {
        totals_to_sequence(self.nvars, |i| self.total(i))
    }
}

/// Pad totals into the length-4 convention, rejecting any mass beyond
/// homological index 3.
fn totals_to_sequence(
    nvars: usize,
    total: impl Fn(usize) -> usize,
) -> Result<BettiSequence, BettiError> {
    let mut beta = [0u64; 4];
    for (i, slot) in beta.iter_mut().enumerate() {
        *slot = total(i) as u64;
    }
    for i in 4..=nvars.max(3) {
        let extra = total(i);
        if i >= 4 && extra != 0 {
            return Err(BettiError::ProjectiveDimensionTooLarge { index: i, value: extra });
        }
    }
    Ok(BettiSequence(beta))
}

fn as_monomials(gens: &[Polynomial]) -> Result<Vec<Monomial>, BettiError> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            g.as_monomial()
                .map(|(m, _)| m.clone())
                .ok_or_else(|| BettiError::NotMonomial(g.to_string()))
        })
        .collect()
}

/// Remove duplicates and non-minimal generators (divisibility filter).
pub fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut keep = Vec::new();
    'outer: for (i, m) in sorted.iter().enumerate() {
        for (j, other) in sorted.iter().enumerate() {
            if i != j && other.divides(m) && (other != m || j < i) {
                continue 'outer;
            }
        }
        keep.push(m.clone());
    }
    keep
}

fn monomial_in_ideal(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Betti numbers of `A/I` for a monomial ideal, via multigraded Koszul
/// homology at the lcms of generator subsets.
pub fn monomial_betti(
    gens: &[Polynomial],
    nvars: usize,
) -> Result<MultigradedBettiTable, BettiError> {
    let monomials = as_monomials(gens)?;
    monomial_betti_at(&monomials, nvars, lcm_lattice(&minimalize_monomials(&monomials), nvars))
}

/// Slow cross-check: scan the full box of multidegrees below the lcm of
/// all generators instead of the lcm lattice.
pub fn monomial_betti_full_box(
    gens: &[Polynomial],
    nvars: usize,
) -> Result<MultigradedBettiTable, BettiError> {
    let monomials = as_monomials(gens)?;
    let minimal = minimalize_monomials(&monomials);
    let mut top = vec![0u32; nvars];
    for m in &minimal {
        for (i, &e) in m.exponents().iter().enumerate() {
            top[i] = top[i].max(e);
        }
    }
    let mut degrees = BTreeSet::new();
    let mut current = vec![0u32; nvars];
    loop {
        degrees.insert(current.clone());
        let mut i = 0;
        loop {
            if i == nvars {
                return monomial_betti_at(&monomials, nvars, degrees);
            }
            current[i] += 1;
            if current[i] <= top[i] {
                break;
            }
            current[i] = 0;
            i += 1;
        }
    }
}

fn lcm_lattice(minimal: &[Monomial], nvars: usize) -> BTreeSet<Vec<u32>> {
    let mut degrees = BTreeSet::new();
    degrees.insert(vec![0u32; nvars]);
    let r = minimal.len();
    for mask in 1u32..(1 << r) {
        let mut acc = Monomial::one(nvars);
        for (i, m) in minimal.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc.lcm(m);
            }
        }
        degrees.insert(acc.exponents().to_vec());
    }
    degrees
}

fn monomial_betti_at(
    monomials: &[Monomial],
    nvars: usize,
    degrees: BTreeSet<Vec<u32>>,
) -> Result<MultigradedBettiTable, BettiError> {
    let minimal = minimalize_monomials(monomials);
    let mut entries = BTreeMap::new();
    for b in degrees {
        let homology = koszul_homology_multidegree(&minimal, nvars, &b);
        for (i, dim) in homology.into_iter().enumerate() {
            if dim > 0 {
                entries.insert((i, b.clone()), dim);
            }
        }
    }
    Ok(MultigradedBettiTable { nvars, entries })
}

/// All subsets of {0..nvars-1} of size `i`, each sorted ascending.
fn subsets(nvars: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0usize)];
    while let Some((prefix, start)) = stack.pop() {
        if prefix.len() == size {
            out.push(prefix);
            continue;
        }
        for v in (start..nvars).rev() {
            let mut next = prefix.clone();
            next.push(v);
            stack.push((next, v + 1));
        }
    }
    out.sort();
    out
}

/// Koszul homology dimensions `H_0 .. H_nvars` of `K(x_1..x_n) (x) A/I`
/// in a single multidegree. Bases are pairs `(J, b - chi(J))` with the
/// monomial part outside `I`; the differential sends a basis vector to
/// the alternating sum over dropping one index, with terms landing in `I`
/// killed.
fn koszul_homology_multidegree(minimal: &[Monomial], nvars: usize, b: &[u32]) -> Vec<usize> {
    // basis of C_i: subsets J with b - chi(J) >= 0 and monomial not in I
    let mut bases: Vec<Vec<Vec<usize>>> = Vec::with_capacity(nvars + 1);
    for i in 0..=nvars {
        let mut basis = Vec::new();
        for j_set in subsets(nvars, i) {
            let mut exps = b.to_vec();
            let mut ok = true;
            for &v in &j_set {
                if exps[v] == 0 {
                    ok = false;
                    break;
                }
                exps[v] -= 1;
            }
            if !ok {
                continue;
            }
            let m = Monomial::new(exps);
            if !monomial_in_ideal(&m, minimal) {
                basis.push(j_set);
            }
        }
        bases.push(basis);
    }
    // differential ranks
    let mut ranks = vec![0usize; nvars + 2];
    for i in 1..=nvars {
        let domain = &bases[i];
        let codomain = &bases[i - 1];
        if domain.is_empty() || codomain.is_empty() {
            ranks[i] = 0;
            continue;
        }
        let index_of: BTreeMap<&Vec<usize>, usize> =
            codomain.iter().enumerate().map(|(k, j)| (j, k)).collect();
        let mut matrix =
            vec![vec![BigRational::zero(); domain.len()]; codomain.len()];
        for (col, j_set) in domain.iter().enumerate() {
            let mut exps = b.to_vec();
            for &v in j_set {
                exps[v] -= 1;
            }
            for (pos, &drop) in j_set.iter().enumerate() {
                // multiply the monomial part by x_drop
                let mut target_exps = exps.clone();
                target_exps[drop] += 1;
                if monomial_in_ideal(&Monomial::new(target_exps), minimal) {
                    continue;
                }
                let smaller: Vec<usize> =
                    j_set.iter().copied().filter(|&v| v != drop).collect();
                if let Some(&row) = index_of.get(&smaller) {
                    let sign = if pos % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                    matrix[row][col] = sign;
                }
            }
        }
        ranks[i] = rational_matrix_rank(matrix);
    }
    (0..=nvars)
        .map(|i| bases[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

/// Numerator of the Hilbert series of `A/I` over `(1-t)^nvars` for a
/// monomial ideal, by inclusion-exclusion over generator subsets (the
/// Euler characteristic of the Taylor complex). Dense coefficients,
/// index = degree.
pub fn hilbert_numerator(gens: &[Polynomial], nvars: usize) -> Result<Vec<i64>, BettiError> {
    let monomials = minimalize_monomials(&as_monomials(gens)?);
    let r = monomials.len();
    assert!(r < 24, "inclusion-exclusion over 2^{r} subsets is infeasible");
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    for mask in 0u32..(1 << r) {
        let mut acc = Monomial::one(nvars);
        for (i, m) in monomials.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc.lcm(m);
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *coeffs.entry(acc.degree() as usize).or_insert(0) += sign;
    }
    let top = coeffs.keys().next_back().copied().unwrap_or(0);
    let mut dense = vec![0i64; top + 1];
    for (deg, c) in coeffs {
        dense[deg] = c;
    }
    while dense.len() > 1 && *dense.last().unwrap() == 0 {
        dense.pop();
    }
    Ok(dense)
}

/// Betti numbers of `A/I` for a general homogeneous ideal, through
/// Koszul graded strands.
///
/// The degree cutoff comes from the regularity of the initial ideal
/// (upper semicontinuity bounds the table of `A/I` by the table of
/// `A/in(I)` entrywise); completeness is certified by comparing the
/// alternating sum of the computed table against the Hilbert numerator
/// of the initial ideal.
pub fn graded_betti_general(ideal: &Ideal) -> Result<GradedBettiTable, BettiError> {
    let nvars = ideal.nvars();
    for g in ideal.generators() {
        if !g.is_homogeneous() {
            return Err(BettiError::NotHomogeneous(g.to_string()));
        }
    }
    let order = TermOrder::grevlex();
    let gb = groebner_basis(ideal.generators(), &order);
    let initial: Vec<Polynomial> = crate::groebner::initial_ideal(&gb, &order)
        .into_iter()
        .map(|m| Polynomial::from_term(m, BigRational::one()))
        .collect();
    let initial_table = monomial_betti(&initial, nvars)?;
    let regularity = initial_table.regularity();
    let cutoff = nvars + regularity;

    // standard monomials per degree, up to the cutoff
    let initial_monomials = minimalize_monomials(&as_monomials(&initial)?);
    let mut standard: Vec<Vec<Monomial>> = Vec::with_capacity(cutoff + 1);
    for d in 0..=cutoff {
        standard.push(
            monomials_of_degree(nvars, d)
                .into_iter()
                .filter(|m| !monomial_in_ideal(m, &initial_monomials))
                .collect(),
        );
    }

    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for j in 0..=cutoff {
        let strand = koszul_strand_dimensions(&gb, &order, &standard, nvars, j);
        for (i, dim) in strand.into_iter().enumerate() {
            if dim > 0 {
                entries.insert((i, j), dim);
            }
        }
    }

    // Euler certificate: sum_i (-1)^i beta_{i,j} must match the Hilbert
    // numerator of the initial ideal coefficientwise.
    let numerator = hilbert_numerator(&initial, nvars)?;
    let mut euler = vec![0i64; cutoff + 1];
    for (&(i, j), &v) in &entries {
        if j > cutoff {
            return Err(BettiError::CutoffExceeded { cutoff });
        }
        euler[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
    }
    let mut expected = numerator.clone();
    expected.resize(cutoff + 1, 0);
    if euler != expected {
        return Err(BettiError::CutoffExceeded { cutoff });
    }

    Ok(GradedBettiTable { nvars, entries })
}

fn monomials_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_monomials(nvars, degree, 0, &mut exps, &mut out);
    out
}

fn fill_monomials(
    nvars: usize,
    remaining: usize,
    index: usize,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if index == nvars - 1 {
        exps[index] = remaining as u32;
        out.push(Monomial::new(exps.clone()));
        exps[index] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[index] = e as u32;
        fill_monomials(nvars, remaining - e, index + 1, exps, out);
    }
    exps[index] = 0;
}

/// Homology dimensions of the Koszul strand in total degree `j`: bases
/// are `e_J (x) m` with `m` a standard monomial of degree `j - |J|`, and
/// multiplication by a variable is a normal form against the Gröbner
/// basis expanded in standard monomials.
#[allow(clippy::needless_range_loop)]
fn koszul_strand_dimensions(
    gb: &[Polynomial],
    order: &TermOrder,
    standard: &[Vec<Monomial>],
    nvars: usize,
    j: usize,
) -> Vec<usize> {
    let empty: Vec<Monomial> = Vec::new();
    let basis_at = |d: isize| -> &Vec<Monomial> {
        if d < 0 || d as usize >= standard.len() {
            &empty
        } else {
            &standard[d as usize]
        }
    };
    let mut ranks = vec![0usize; nvars + 2];
    let dims: Vec<usize> = (0..=nvars)
        .map(|i| subsets(nvars, i).len() * basis_at(j as isize - i as isize).len())
        .collect();
    for i in 1..=nvars {
        let dom_subsets = subsets(nvars, i);
        let cod_subsets = subsets(nvars, i - 1);
        let dom_mons = basis_at(j as isize - i as isize);
        let cod_mons = basis_at(j as isize - i as isize + 1);
        if dom_subsets.is_empty()
            || cod_subsets.is_empty()
            || dom_mons.is_empty()
            || cod_mons.is_empty()
        {
            ranks[i] = 0;
            continue;
        }
        let cod_sub_index: BTreeMap<&Vec<usize>, usize> =
            cod_subsets.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let cod_mon_index: BTreeMap<&Monomial, usize> =
            cod_mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let rows = cod_subsets.len() * cod_mons.len();
        let cols = dom_subsets.len() * dom_mons.len();
        let mut matrix = vec![vec![BigRational::zero(); cols]; rows];
        for (sj, j_set) in dom_subsets.iter().enumerate() {
            for (sm, m) in dom_mons.iter().enumerate() {
                let col = sj * dom_mons.len() + sm;
                for (pos, &drop) in j_set.iter().enumerate() {
                    let smaller: Vec<usize> =
                        j_set.iter().copied().filter(|&v| v != drop).collect();
                    let row_block = cod_sub_index[&smaller];
                    let sign = if pos % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                    // x_drop * m reduced to the standard basis
                    let product =
                        Polynomial::from_term(m.mul(&Monomial::var(nvars, drop)), BigRational::one());
                    let reduced = normal_form(&product, gb, order);
                    for (mm, c) in reduced.terms() {
                        let row = row_block * cod_mons.len()
                            + cod_mon_index
                                .get(mm)
                                .copied()
                                .expect("normal form lands in standard monomials");
                        matrix[row][col] = &matrix[row][col] + &sign * c;
                    }
                }
            }
        }
        ranks[i] = rational_matrix_rank(matrix);
    }
    (0..=nvars)
        .map(|i| dims[i] - ranks[i] - ranks[i + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::matrix::mono;

    #[test]
    fn koszul_of_maximal_ideal() {
        let gens = vec![mono(3, &[(0, 1)]), mono(3, &[(1, 1)]), mono(3, &[(2, 1)])];
        let table = monomial_betti(&gens, 3).unwrap();
        assert_eq!(table.betti_sequence().unwrap(), BettiSequence([1, 3, 3, 1]));
    }

    #[test]
    fn two_generators_with_one_syzygy() {
        // <x1^2, x1 x2> in two variables: Taylor complex is minimal here
        let gens = vec![mono(2, &[(0, 2)]), mono(2, &[(0, 1), (1, 1)])];
        let table = monomial_betti(&gens, 2).unwrap();
        assert_eq!(table.betti_sequence().unwrap(), BettiSequence([1, 2, 1, 0]));
    }

    #[test]
    fn beta_one_counts_minimal_generators() {
        let gens = vec![
            mono(3, &[(0, 4)]),
            mono(3, &[(0, 2), (2, 1)]),
            mono(3, &[(1, 2)]),
            mono(3, &[(2, 5)]),
            mono(3, &[(0, 3), (1, 1)]),
        ];
        let table = monomial_betti(&gens, 3).unwrap();
        assert_eq!(table.total(1), 5);
    }

    #[test]
    fn full_box_agrees_with_lcm_lattice() {
        let gens = vec![
            mono(3, &[(0, 2)]),
            mono(3, &[(1, 2)]),
            mono(3, &[(0, 1), (1, 1), (2, 1)]),
        ];
        let fast = monomial_betti(&gens, 3).unwrap();
        let slow = monomial_betti_full_box(&gens, 3).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn multidegree_support_divides_total_lcm() {
        let gens = vec![
            mono(3, &[(0, 3)]),
            mono(3, &[(1, 2), (2, 1)]),
            mono(3, &[(0, 1), (2, 2)]),
        ];
        let table = monomial_betti(&gens, 3).unwrap();
        let lcm = [3u32, 2, 2];
        for (_, b) in table.entries().keys() {
            for (i, &e) in b.iter().enumerate() {
                assert!(e <= lcm[i]);
            }
        }
    }

    #[test]
    fn hilbert_numerator_examples() {
        // <x1> in one variable: 1 - t
        let gens = vec![mono(1, &[(0, 1)])];
        assert_eq!(hilbert_numerator(&gens, 1).unwrap(), vec![1, -1]);
        // <x1,x2,x3>: (1-t)^3 = 1 - 3t + 3t^2 - t^3
        let gens = vec![mono(3, &[(0, 1)]), mono(3, &[(1, 1)]), mono(3, &[(2, 1)])];
        assert_eq!(hilbert_numerator(&gens, 3).unwrap(), vec![1, -3, 3, -1]);
    }

    #[test]
    fn euler_identity_for_monomial_table() {
        let gens = vec![
            mono(3, &[(0, 4)]),
            mono(3, &[(0, 2), (2, 1)]),
            mono(3, &[(1, 2)]),
            mono(3, &[(2, 5)]),
            mono(3, &[(0, 3), (1, 1)]),
        ];
        let table = monomial_betti(&gens, 3).unwrap();
        let numerator = hilbert_numerator(&gens, 3).unwrap();
        let mut euler = vec![0i64; numerator.len().max(table.regularity() + 4)];
        for ((i, b), &v) in table.entries() {
            let j: usize = b.iter().map(|&e| e as usize).sum();
            euler[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        let mut expected = numerator;
        expected.resize(euler.len(), 0);
        assert_eq!(euler, expected);
    }

    #[test]
    fn graded_general_on_principal_ideal() {
        let ideal = Ideal::new(3, vec![mono(3, &[(0, 2)])]);
        let table = graded_betti_general(&ideal).unwrap();
        assert_eq!(table.betti_sequence().unwrap(), BettiSequence([1, 1, 0, 0]));
    }

    #[test]
    fn graded_general_agrees_with_monomial_oracle() {
        let gens = vec![
            mono(3, &[(0, 2)]),
            mono(3, &[(1, 2)]),
            mono(3, &[(0, 1), (1, 1), (2, 1)]),
        ];
        let ideal = Ideal::new(3, gens.clone());
        let general = graded_betti_general(&ideal).unwrap();
        let monomial = monomial_betti(&gens, 3).unwrap();
        assert_eq!(
            general.betti_sequence().unwrap(),
            monomial.betti_sequence().unwrap()
        );
    }

    #[test]
    fn graded_general_rejects_inhomogeneous() {
        let f = mono(2, &[(0, 2)]).sub(&mono(2, &[(1, 1)])).unwrap();
        let ideal = Ideal::new(2, vec![f]);
        assert!(matches!(
            graded_betti_general(&ideal),
            Err(BettiError::NotHomogeneous(_))
        ));
    }
}
