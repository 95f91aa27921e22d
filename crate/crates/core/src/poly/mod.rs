//! Exact sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors of a fixed ambient length (3 or 4 in
//! practice), terms are kept in a `BTreeMap` keyed by graded reverse
//! lexicographic order, so polynomial equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

pub mod matrix;
pub mod regseq;
pub mod text;

pub use matrix::PolyMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("ambient variable counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("zero polynomial has no initial form")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("row/column index sets have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("claimed rank {claimed} but actual rank is {actual}")]
    RankMismatch { claimed: usize, actual: usize },
}

/// A monomial as an exponent vector. Ordering is graded reverse
/// lexicographic with `x1 > x2 > ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Weighted degree for weights `(n_1, ..., n_k)`; this is the S-degree
    /// when the weights are the semigroup generators.
    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Exact quotient; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `Some(i)` if the monomial is a positive power of the single variable `x_{i+1}`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let support = self.support();
        if support.len() == 1 {
            Some(support[0])
        } else {
            None
        }
    }

    /// Graded reverse lexicographic comparison (same as `Ord`).
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        grevlex_tiebreak(&self.exps, &other.exps)
    }
}

/// Equal-degree tiebreak of grevlex: the last nonzero entry of `a - b`
/// negative means `a` is larger.
pub(crate) fn grevlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_grevlex(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Polynomial { nvars, terms }
    }

    pub fn constant_i64(nvars: usize, c: i64) -> Self {
        Polynomial::constant(nvars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Polynomial::from_term(Monomial::var(nvars, index), BigRational::one())
    }

    pub fn from_term(m: Monomial, c: BigRational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// Monomial with coefficient +1 built from `(variable, exponent)` pairs.
    pub fn monomial(nvars: usize, powers: &[(usize, u32)]) -> Self {
        let mut exps = vec![0u32; nvars];
        for &(v, e) in powers {
            exps[v] += e;
        }
        Polynomial::from_term(Monomial::new(exps), BigRational::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// `Some((monomial, coeff))` for single-term polynomials.
    pub fn as_monomial(&self) -> Option<(&Monomial, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Maximal total degree of the terms; zero polynomial gives `None`.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Every term has positive degree, i.e. the polynomial lies in the
    /// irrelevant maximal ideal.
    pub fn has_no_constant_term(&self) -> bool {
        self.terms.keys().all(|m| !m.is_one())
    }

    /// All terms share the same total degree (the zero polynomial counts
    /// as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.total_degree()) {
            (Some(lo), Some(hi)) => lo == hi,
            _ => true,
        }
    }

    /// Common weighted degree of all terms, if they agree.
    pub fn weighted_degree_if_homogeneous(&self, weights: &[u64]) -> Option<u64> {
        let mut degree = None;
        for m in self.terms.keys() {
            let d = m.weighted_degree(weights);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        degree
    }

    fn insert_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_dims(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, k)| (mm.mul(m), k * c))
                .collect(),
        }
    }

    fn check_dims(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::DimensionMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    /// Sum of the terms of minimal total degree (`f*` in tangent cone
    /// language: the least homogeneous summand).
    pub fn initial_form(&self) -> Result<Polynomial, PolyError> {
        let low = self.min_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == low)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Set the variable `index` to zero, dropping every term it divides.
    pub fn kill_variable(&self, index: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(index) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-embed into the polynomial ring on the `keep` variables (which
    /// must cover the support of every term).
    pub fn restrict_variables(&self, keep: &[usize]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let exps: Vec<u32> = keep.iter().map(|&v| m.exponent(v)).collect();
            debug_assert_eq!(
                exps.iter().map(|&e| u64::from(e)).sum::<u64>(),
                u64::from(m.degree()),
                "restrict_variables dropped a nonzero exponent"
            );
            terms.insert(Monomial::new(exps), c.clone());
        }
        Polynomial { nvars: keep.len(), terms }
    }

    /// Re-embed into a larger ring; `embedding[i]` is the new index of the
    /// current variable `i`.
    pub fn embed_variables(&self, new_nvars: usize, embedding: &[usize]) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_nvars];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[embedding[i]] = e;
            }
            terms.insert(Monomial::new(exps), c.clone());
        }
        Polynomial { nvars: new_nvars, terms }
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= pow_rational(&point[i], e);
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluation modulo a prime; the denominator is inverted mod `p`.
    /// Returns `None` if a denominator vanishes mod `p`.
    pub fn evaluate_mod_p(&self, point: &[u64], p: u64) -> Option<u64> {
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let num = bigint_mod_p(c.numer(), p);
            let den = bigint_mod_p(c.denom(), p);
            if den == 0 {
                return None;
            }
            let mut term = mulmod(num, modinv(den, p), p);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = mulmod(term, powmod(point[i] % p, u64::from(e), p), p);
                }
            }
            acc = (acc + term) % p;
        }
        Some(acc)
    }

    /// Leading monomial under plain grevlex.
    pub fn leading_monomial_grevlex(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }
}

fn pow_rational(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub(crate) fn bigint_mod_p(x: &BigInt, p: u64) -> u64 {
    let m = x % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn modinv(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) inverts a.
    powmod(a, p - 2, p)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_polynomial(f, self)
    }
}
