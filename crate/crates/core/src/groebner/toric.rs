//! Toric ideals from lattice kernels, ideal quotients by a variable via
//! tag elimination, saturation, and the Cohen-Macaulayness test for
//! tangent cones.

use num::BigRational;
use serde::Serialize;

use super::buchberger::{groebner_basis, ideal_equal};
use super::mora::tangent_cone_ideal;
use super::{GroebnerError, Ideal, TermOrder};
use crate::komeda::{KomedaParams, ParamError};
use crate::poly::{Monomial, Polynomial};

/// Integer kernel basis of the single relation `u . n = 0`, by unimodular
/// column reduction. Returns `len(n) - 1` vectors.
pub fn lattice_kernel(n: &[u64]) -> Vec<Vec<i64>> {
    let k = n.len();
    // columns of m form a basis of Z^k; v tracks n applied to them
    let mut m: Vec<Vec<i64>> = (0..k)
        .map(|j| (0..k).map(|i| i64::from(i == j)).collect())
        .collect();
    let mut v: Vec<i64> = n.iter().map(|&x| x as i64).collect();
    loop {
        let nonzero: Vec<usize> = (0..k).filter(|&j| v[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let &pivot = nonzero
            .iter()
            .min_by_key(|&&j| v[j].unsigned_abs())
            .unwrap();
        for &j in &nonzero {
            if j == pivot {
                continue;
            }
            let q = v[j].div_euclid(v[pivot]);
            if q != 0 {
                v[j] -= q * v[pivot];
                for row in m.iter_mut() {
                    row[j] -= q * row[pivot];
                }
            }
        }
    }
    let mut kernel = Vec::new();
    for j in 0..k {
        if v[j] == 0 {
            kernel.push((0..k).map(|i| m[i][j]).collect::<Vec<i64>>());
        }
    }
    debug_assert_eq!(kernel.len(), k - 1);
    size_reduce(&mut kernel);
    for u in &kernel {
        debug_assert_eq!(
            u.iter().zip(n).map(|(&ui, &ni)| ui * ni as i64).sum::<i64>(),
            0
        );
    }
    kernel
}

/// Pairwise Gauss-style size reduction; small basis vectors keep the
/// degrees of the lattice binomials small, which is what makes the
/// saturation Gröbner bases cheap.
fn size_reduce(basis: &mut [Vec<i64>]) {
    let dot = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(&x, &y)| x * y).sum() };
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let num = dot(&basis[i], &basis[j]);
                let den = dot(&basis[j], &basis[j]);
                if den == 0 {
                    continue;
                }
                // nearest integer to num/den
                let q = (2 * num + den.signum() * den).div_euclid(2 * den);
                if q == 0 {
                    continue;
                }
                let candidate: Vec<i64> = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(&a, &b)| a - q * b)
                    .collect();
                if dot(&candidate, &candidate) < dot(&basis[i], &basis[i]) {
                    basis[i] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// The binomial `X^{u+} - X^{u-}` of a lattice vector.
pub fn lattice_binomial(u: &[i64]) -> Polynomial {
    let plus = Monomial::new(u.iter().map(|&x| x.max(0) as u32).collect());
    let minus = Monomial::new(u.iter().map(|&x| (-x).max(0) as u32).collect());
    Polynomial::from_term(plus, BigRational::from_integer(1.into()))
        .sub(&Polynomial::from_term(minus, BigRational::from_integer(1.into())))
        .expect("same ambient")
}

/// Ideal quotient `(I : x_v)`, computed as `(I meet <x_v>) / x_v` with a
/// tag variable: generators `t*f_i` and `(1-t)*x_v` in one more variable,
/// Gröbner basis under an order eliminating the tag, keep the tag-free
/// part, divide by `x_v`.
pub fn quotient_by_variable(ideal: &Ideal, variable: usize) -> Ideal {
    let k = ideal.nvars();
    let embedding: Vec<usize> = (0..k).collect();
    let tag = Polynomial::var(k + 1, k);
    let xv_big = Polynomial::var(k + 1, variable);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|f| f.embed_variables(k + 1, &embedding).mul(&tag).expect("same ambient"))
        .collect();
    // (1 - t) * x_v = x_v - t*x_v
    gens.push(xv_big.sub(&xv_big.mul(&tag).expect("same ambient")).expect("same ambient"));
    let order = TermOrder::elim_last();
    let gb = groebner_basis(&gens, &order);
    let keep: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    for g in &gb {
        if g.terms().all(|(m, _)| m.exponent(k) == 0) {
            let small = g.restrict_variables(&keep);
            // each element lies in <x_v>, so x_v divides every term
            let divided = divide_by_variable(&small, variable);
            out.push(divided);
        }
    }
    Ideal::new(k, out)
}

fn divide_by_variable(f: &Polynomial, variable: usize) -> Polynomial {
    let mut out = Polynomial::zero(f.nvars());
    for (m, c) in f.terms() {
        assert!(m.exponent(variable) >= 1, "element not divisible by the variable");
        let reduced = m.div(&Monomial::var(f.nvars(), variable));
        out = out
            .add(&Polynomial::from_term(reduced, c.clone()))
            .expect("same ambient");
    }
    out
}

/// Saturate by the product of all variables: iterate single-variable
/// quotients until a full round changes nothing. Works for any ideal but
/// peels one power per round; prefer [`saturate_positively_graded`] when
/// a positive grading is available.
pub fn saturate_by_variables(ideal: &Ideal) -> Result<Ideal, GroebnerError> {
    let mut current = ideal.clone();
    loop {
        let mut next = current.clone();
        for v in 0..ideal.nvars() {
            next = quotient_by_variable(&next, v);
        }
        if ideal_equal(&next, &current)? {
            return Ok(next);
        }
        current = next;
    }
}

/// Saturation by the variable product for an ideal homogeneous under
/// positive `weights`. `(J : x_v^inf)` falls out of one Gröbner basis
/// under the weighted revlex order with `x_v` cheapest by dividing each
/// element by the largest power of `x_v` it contains; single-variable
/// saturations compose exactly, so one pass over the variables suffices.
pub fn saturate_positively_graded(ideal: &Ideal, weights: &[u64]) -> Ideal {
    let k = ideal.nvars();
    let mut gens = ideal.generators().to_vec();
    for v in 0..k {
        let order = TermOrder::weighted_saturating(weights, v);
        let gb = groebner_basis(&gens, &order);
        gens = gb.iter().map(|g| divide_out_variable(g, v)).collect();
    }
    Ideal::new(k, gens)
}

fn divide_out_variable(f: &Polynomial, variable: usize) -> Polynomial {
    let power = f
        .terms()
        .map(|(m, _)| m.exponent(variable))
        .min()
        .unwrap_or(0);
    let mut g = f.clone();
    for _ in 0..power {
        g = divide_by_variable(&g, variable);
    }
    g
}

/// The toric ideal of the monoid map `X_i -> t^{n_i}`: lattice-kernel
/// binomials saturated by the product of the variables. The lattice
/// ideal is homogeneous under the weights `n`, so the graded saturation
/// applies.
pub fn toric_ideal(n: &[u64]) -> Result<Ideal, GroebnerError> {
    let kernel = lattice_kernel(n);
    let gens: Vec<Polynomial> = kernel.iter().map(|u| lattice_binomial(u)).collect();
    let lattice_ideal = Ideal::new(n.len(), gens);
    Ok(saturate_positively_graded(&lattice_ideal, n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmReport {
    /// 1-based index of the multiplicity variable tested for regularity.
    pub multiplicity_index: usize,
    pub is_cm: bool,
    /// The regularity test: `(I* : X_i) = I*`. `X_i` regular on the
    /// quotient gives depth >= 1 = dim, hence Cohen-Macaulay; conversely a
    /// Cohen-Macaulay tangent cone forces the multiplicity variable to be
    /// regular.
    pub note: &'static str,
}

/// Cohen-Macaulayness of the tangent cone, decided by whether the
/// multiplicity variable is a nonzerodivisor on the associated graded
/// ring.
pub fn cm_check(params: &KomedaParams) -> Result<CmReport, CmError> {
    let tag = params.classify()?;
    let n = params.generators();
    let toric = toric_ideal(&n)?;
    let cone = tangent_cone_ideal(&toric, None)?;
    let quotient = quotient_by_variable(&cone, tag.multiplicity_index - 1);
    let is_cm = ideal_equal(&quotient, &cone)?;
    Ok(CmReport {
        multiplicity_index: tag.multiplicity_index,
        is_cm,
        note: "tested (I* : X_mult) = I*; equality means X_mult is regular on A/I*, \
               so depth = dim = 1 and the tangent cone is Cohen-Macaulay",
    })
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CmError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Mora(#[from] super::MoraError),
}
