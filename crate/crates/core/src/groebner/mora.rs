//! Mora's tangent cone algorithm: weak normal forms with ecart-based
//! reducer selection and local standard bases, from which the ideal of
//! initial forms is read off.

use num::BigRational;
use thiserror::Error;

use super::{leading_term, Ideal, TermOrder};
use crate::poly::Polynomial;

/// Default degree cap as a multiple of the largest input degree. Mora's
/// algorithm terminates without it; the cap turns a runaway computation
/// (i.e. a bug) into a structured failure instead of a hang.
pub const DEFAULT_DEGREE_CAP_FACTOR: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoraError {
    #[error("working degree {reached} exceeded the cap {cap}; raise the cap to continue")]
    DegreeCapExceeded { cap: u32, reached: u32 },
}

fn ecart(f: &Polynomial, order: &TermOrder) -> u32 {
    let (lm, _) = leading_term(f, order).expect("nonzero");
    f.total_degree().expect("nonzero") - lm.degree()
}

/// Mora's weak normal form. The reducer set starts from `basis` and
/// absorbs intermediate results whose ecart is smaller than every
/// applicable reducer's.
fn mora_normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &TermOrder,
    cap: u32,
) -> Result<Polynomial, MoraError> {
    let mut reducers: Vec<Polynomial> = basis.to_vec();
    let mut h = f.clone();
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        if let Some(d) = h.total_degree() {
            if d > cap {
                return Err(MoraError::DegreeCapExceeded { cap, reached: d });
            }
        }
        let (h_lm, h_lc) = {
            let (m, c) = leading_term(&h, order).expect("nonzero");
            (m.clone(), c.clone())
        };
        // applicable reducer of minimal ecart, first in insertion order
        let mut chosen: Option<(usize, u32)> = None;
        for (i, g) in reducers.iter().enumerate() {
            let (g_lm, _) = leading_term(g, order).expect("nonzero");
            if g_lm.divides(&h_lm) {
                let e = ecart(g, order);
                if chosen.is_none_or(|(_, best)| e < best) {
                    chosen = Some((i, e));
                }
            }
        }
        let Some((gi, g_ecart)) = chosen else {
            return Ok(h);
        };
        if g_ecart > ecart(&h, order) {
            reducers.push(h.clone());
        }
        let g = reducers[gi].clone();
        let (g_lm, g_lc) = leading_term(&g, order).expect("nonzero");
        let factor = &h_lc / g_lc;
        let quotient_mono = h_lm.div(g_lm);
        h = h.sub(&g.mul_term(&quotient_mono, &factor)).expect("same ambient");
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (fm, fc) = leading_term(f, order).expect("nonzero");
    let (gm, gc) = leading_term(g, order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.div(fm), &(BigRational::from_integer(1.into()) / fc));
    let b = g.mul_term(&lcm.div(gm), &(BigRational::from_integer(1.into()) / gc));
    a.sub(&b).expect("same ambient")
}

/// Standard basis with respect to the local degree order: the leading
/// monomials of the result generate the leading ideal, so the initial
/// forms of the result generate the ideal of initial forms.
pub fn local_standard_basis(gens: &[Polynomial], cap: Option<u32>) -> Result<Vec<Polynomial>, MoraError> {
    let order = TermOrder::local();
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(basis);
    }
    let max_degree = basis
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(1);
    let cap = cap.unwrap_or(DEFAULT_DEGREE_CAP_FACTOR * max_degree.max(1));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let position = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let (mi, _) = leading_term(&basis[i], &order).expect("nonzero");
                let (mj, _) = leading_term(&basis[j], &order).expect("nonzero");
                mi.lcm(mj).degree()
            })
            .map(|(pos, _)| pos)
            .unwrap();
        let (i, j) = pairs.swap_remove(position);
        let (mi, _) = leading_term(&basis[i], &order).expect("nonzero");
        let (mj, _) = leading_term(&basis[j], &order).expect("nonzero");
        if mi.is_coprime_with(mj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &order);
        if s.is_zero() {
            continue;
        }
        let h = mora_normal_form(&s, &basis, &order, cap)?;
        if !h.is_zero() {
            let new_index = basis.len();
            basis.push(h);
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
        }
    }
    Ok(basis)
}

/// Recertify a claimed standard basis by reducing every S-polynomial to
/// a zero weak normal form, with no pair skipped. Independent of the
/// pair-selection and product-criterion shortcuts in the construction
/// loop.
pub fn certify_standard_basis_closure(
    basis: &[Polynomial],
    cap: Option<u32>,
) -> Result<bool, MoraError> {
    let order = TermOrder::local();
    let max_degree = basis
        .iter()
        .filter_map(Polynomial::total_degree)
        .max()
        .unwrap_or(1);
    let cap = cap.unwrap_or(4 * DEFAULT_DEGREE_CAP_FACTOR * max_degree.max(1));
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], &order);
            if s.is_zero() {
                continue;
            }
            if !mora_normal_form(&s, basis, &order, cap)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The tangent cone ideal: initial forms of a standard basis of the
/// input. The returned presentation is homogeneous by construction.
pub fn tangent_cone_ideal(ideal: &Ideal, cap: Option<u32>) -> Result<Ideal, MoraError> {
    let basis = local_standard_basis(ideal.generators(), cap)?;
    let mut initial_forms: Vec<Polynomial> = Vec::with_capacity(basis.len());
    for g in &basis {
        let form = g.initial_form().expect("standard basis has no zero element");
        if !initial_forms.contains(&form) {
            initial_forms.push(form);
        }
    }
    let mut out = Ideal::new(ideal.nvars(), initial_forms);
    out.is_standard_basis = false;
    debug_assert!(out.is_homogeneous);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::komeda::KomedaParams;
    use crate::poly::Polynomial;

    #[test]
    fn monomial_ideal_is_its_own_standard_basis() {
        let gens = vec![
            Polynomial::monomial(3, &[(0, 2)]),
            Polynomial::monomial(3, &[(1, 1), (2, 1)]),
        ];
        let sb = local_standard_basis(&gens, None).unwrap();
        assert_eq!(sb, gens);
    }

    #[test]
    fn tangent_cone_of_cusp() {
        // <x1 - x2^2>: initial form ideal is <x1>
        let f = Polynomial::var(2, 0)
            .sub(&Polynomial::monomial(2, &[(1, 2)]))
            .unwrap();
        let ideal = Ideal::new(2, vec![f]);
        let cone = tangent_cone_ideal(&ideal, None).unwrap();
        assert_eq!(cone.generators(), &[Polynomial::var(2, 0)]);
    }

    #[test]
    fn homogeneous_input_is_fixed() {
        let f = Polynomial::monomial(2, &[(0, 2)])
            .sub(&Polynomial::monomial(2, &[(1, 2)]))
            .unwrap();
        let ideal = Ideal::new(2, vec![f.clone()]);
        let cone = tangent_cone_ideal(&ideal, None).unwrap();
        assert_eq!(cone.generators(), &[f]);
    }

    #[test]
    fn n2_gt_standard_basis_grows_by_x1_power() {
        // at (2,5,4,2,4) the standard basis picks up an element with
        // initial form x1^(alpha1 + alpha21) = x1^7
        let p = KomedaParams::new(2, 5, 4, 2, 4).unwrap();
        let gens = p.toric_generators();
        let sb = local_standard_basis(&gens, None).unwrap();
        assert!(sb.len() > 5);
        let order = TermOrder::local();
        let target = Polynomial::monomial(4, &[(0, 7)]);
        let found = sb.iter().any(|g| {
            let (lm, _) = leading_term(g, &order).expect("nonzero");
            Polynomial::from_term(lm.clone(), num::BigRational::from_integer(1.into())) == target
        });
        assert!(found, "expected a standard basis element with leading monomial x1^7");
    }
}
