//! Regular-sequence certificates in the style used by the exactness
//! arguments: pure variable powers and coprime pairs.
//!
//! Failure to find a certificate never proves that the depth is small;
//! callers must report such outcomes as inconclusive.

use serde::Serialize;
use thiserror::Error;

use super::{Monomial, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("no certificate found for length {length} (inconclusive, not a disproof)")]
    NoCertificateFound { length: usize },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("unsupported certificate length {0}")]
    UnsupportedLength(usize),
}

/// A found regular sequence, by index into the generator list. Witness
/// text is the printed polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularSequenceCertificate {
    pub length: usize,
    pub indices: Vec<usize>,
    pub witnesses: Vec<String>,
    pub kind: CertificateKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    /// A single nonzero element (always a nonzerodivisor in a domain).
    NonzeroElement,
    /// Elements with pairwise trivial gcd.
    CoprimePair,
    /// Pure powers of pairwise distinct variables.
    DistinctVariablePowers,
}

/// `Some(var)` when `f` is a unit times a positive power of one variable.
fn pure_power_of(f: &Polynomial) -> Option<usize> {
    let (m, _) = f.as_monomial()?;
    m.pure_power_variable()
}

/// Monomial part usable for gcd arguments: the gcd of all terms.
fn monomial_content(f: &Polynomial) -> Option<Monomial> {
    let mut it = f.terms();
    let (first, _) = it.next()?;
    let mut acc = first.clone();
    for (m, _) in it {
        acc = acc.gcd(m);
    }
    Some(acc)
}

/// Variables occurring anywhere in `f`.
fn variable_support(f: &Polynomial) -> Vec<usize> {
    let mut seen = vec![false; f.nvars()];
    for (m, _) in f.terms() {
        for v in m.support() {
            seen[v] = true;
        }
    }
    seen.iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| i)
        .collect()
}

/// Decide coprimality where we can do so soundly.
///
/// Handles monomial/monomial, monomial/polynomial (gcd with the monomial
/// content of the other side), and disjoint variable supports. Anything
/// else is `None` (unknown).
fn coprime(f: &Polynomial, g: &Polynomial) -> Option<bool> {
    if f.is_zero() || g.is_zero() {
        return Some(false);
    }
    if let (Some((mf, _)), Some((mg, _))) = (f.as_monomial(), g.as_monomial()) {
        return Some(mf.is_coprime_with(mg));
    }
    if let Some((mf, _)) = f.as_monomial() {
        // any common factor divides the monomial, hence divides every term
        // of g, hence divides the monomial content of g
        let content = monomial_content(g).expect("nonzero");
        return Some(mf.is_coprime_with(&content));
    }
    if let Some((_, _)) = g.as_monomial() {
        return coprime(g, f);
    }
    let sf = variable_support(f);
    let sg = variable_support(g);
    if sf.iter().all(|v| !sg.contains(v)) {
        // no shared variables: any common factor would be a constant
        return Some(true);
    }
    None
}

/// Search for a regular sequence of the given length inside `gens`.
///
/// Length 1: any nonzero element. Length 2: a coprime pair. Length >= 3:
/// pure powers of pairwise distinct variables.
pub fn regular_sequence_certificate(
    gens: &[Polynomial],
    length: usize,
) -> Result<RegularSequenceCertificate, CertificateError> {
    if gens.is_empty() {
        return Err(CertificateError::EmptyGenerators);
    }
    if length == 0 {
        return Err(CertificateError::UnsupportedLength(0));
    }
    match length {
        1 => {
            for (i, f) in gens.iter().enumerate() {
                if !f.is_zero() {
                    return Ok(RegularSequenceCertificate {
                        length: 1,
                        indices: vec![i],
                        witnesses: vec![f.to_string()],
                        kind: CertificateKind::NonzeroElement,
                    });
                }
            }
            Err(CertificateError::NoCertificateFound { length })
        }
        2 => {
            // prefer pure variable powers; they compose to longer sequences
            if let Ok(cert) = distinct_variable_powers(gens, 2) {
                return Ok(cert);
            }
            for i in 0..gens.len() {
                for j in (i + 1)..gens.len() {
                    if coprime(&gens[i], &gens[j]) == Some(true) {
                        return Ok(RegularSequenceCertificate {
                            length: 2,
                            indices: vec![i, j],
                            witnesses: vec![gens[i].to_string(), gens[j].to_string()],
                            kind: CertificateKind::CoprimePair,
                        });
                    }
                }
            }
            Err(CertificateError::NoCertificateFound { length })
        }
        n => distinct_variable_powers(gens, n),
    }
}

fn distinct_variable_powers(
    gens: &[Polynomial],
    length: usize,
) -> Result<RegularSequenceCertificate, CertificateError> {
    let nvars = gens[0].nvars();
    // first pure power found per variable
    let mut per_var: Vec<Option<usize>> = vec![None; nvars];
    for (i, f) in gens.iter().enumerate() {
        if let Some(v) = pure_power_of(f) {
            if per_var[v].is_none() {
                per_var[v] = Some(i);
            }
        }
    }
    let found: Vec<(usize, usize)> = per_var
        .iter()
        .enumerate()
        .filter_map(|(v, idx)| idx.map(|i| (v, i)))
        .collect();
    if found.len() < length {
        return Err(CertificateError::NoCertificateFound { length });
    }
    let chosen = &found[..length];
    Ok(RegularSequenceCertificate {
        length,
        indices: chosen.iter().map(|&(_, i)| i).collect(),
        witnesses: chosen.iter().map(|&(_, i)| gens[i].to_string()).collect(),
        kind: CertificateKind::DistinctVariablePowers,
    })
}
