//! Buchberger's algorithm for reduced Gröbner bases under a global
//! order, plus normal forms, membership, and ideal equality.

use num::{BigRational, One};

use super::{leading_term, GroebnerError, Ideal, TermOrder};
use crate::poly::{Monomial, Polynomial};

/// Fully reduced normal form: top reductions first, then the remainder
/// tail is processed term by term. Deterministic: reducers are tried in
/// list order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &TermOrder) -> Polynomial {
    let nvars = f.nvars();
    let mut remainder = Polynomial::zero(nvars);
    let mut work = f.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = leading_term(&work, order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (glm, glc) = leading_term(g, order).expect("nonzero");
            if glm.divides(&lm) {
                let factor = &lc / glc;
                let quotient_mono = lm.div(glm);
                work = work
                    .sub(&g.mul_term(&quotient_mono, &factor))
                    .expect("same ambient");
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the remainder
        remainder = remainder
            .add(&Polynomial::from_term(lm.clone(), lc.clone()))
            .expect("same ambient");
        work = work
            .sub(&Polynomial::from_term(lm, lc))
            .expect("same ambient");
    }
    remainder
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &TermOrder) -> Polynomial {
    let (fm, fc) = leading_term(f, order).expect("nonzero");
    let (gm, gc) = leading_term(g, order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.div(fm), &(BigRational::one() / fc));
    let b = g.mul_term(&lcm.div(gm), &(BigRational::one() / gc));
    a.sub(&b).expect("same ambient")
}

/// Reduced Gröbner basis: monic, pairwise irreducible, sorted by leading
/// monomial. Canonical for the (ideal, order) pair.
pub fn groebner_basis(gens: &[Polynomial], order: &TermOrder) -> Vec<Polynomial> {
    assert!(order.is_global(), "Buchberger needs a global order");
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return basis;
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some(position) = select_pair(&pairs, &basis, order) {
        let (i, j) = pairs.swap_remove(position);
        let (fi_lm, _) = leading_term(&basis[i], order).expect("nonzero");
        let (fj_lm, _) = leading_term(&basis[j], order).expect("nonzero");
        // product criterion: coprime leading monomials give a trivial pair
        if fi_lm.is_coprime_with(fj_lm) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let reduced = normal_form(&s, &basis, order);
        if !reduced.is_zero() {
            let new_index = basis.len();
            basis.push(reduced);
            for k in 0..new_index {
                pairs.push((k, new_index));
            }
        }
    }
    reduce_basis(basis, order)
}

/// Pick the pair with the smallest lcm degree (normal selection).
fn select_pair(
    pairs: &[(usize, usize)],
    basis: &[Polynomial],
    order: &TermOrder,
) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by_key(|(_, &(i, j))| {
            let (mi, _) = leading_term(&basis[i], order).expect("nonzero");
            let (mj, _) = leading_term(&basis[j], order).expect("nonzero");
            mi.lcm(mj).degree()
        })
        .map(|(pos, _)| pos)
}

fn reduce_basis(mut basis: Vec<Polynomial>, order: &TermOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = leading_term(&basis[i], order).expect("nonzero");
        let mi = mi.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = leading_term(&basis[j], order).expect("nonzero");
            if mj.divides(&mi) && (mj != &mi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let pruned: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect();
    // tail-reduce each element against the others and normalize to monic
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(pruned.len());
    for i in 0..pruned.len() {
        let others: Vec<Polynomial> = pruned
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&pruned[i], &others, order);
        if r.is_zero() {
            continue;
        }
        let (_, lc) = leading_term(&r, order).expect("nonzero");
        let monic = r.scale(&(BigRational::one() / lc));
        reduced.push(monic);
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = leading_term(a, order).expect("nonzero");
        let (mb, _) = leading_term(b, order).expect("nonzero");
        order.cmp(ma, mb)
    });
    reduced
}

/// Recertify a claimed Gröbner basis by reducing every S-polynomial to
/// zero with plain normal forms, independently of the construction loop.
pub fn certify_groebner(basis: &[Polynomial], order: &TermOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Membership via normal form against a Gröbner basis of the ideal.
pub fn ideal_contains(groebner: &[Polynomial], order: &TermOrder, f: &Polynomial) -> bool {
    normal_form(f, groebner, order).is_zero()
}

/// Mutual membership of generators against each other's Gröbner bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool, GroebnerError> {
    if a.nvars() != b.nvars() {
        return Err(GroebnerError::AmbientMismatch(a.nvars(), b.nvars()));
    }
    let order = TermOrder::grevlex();
    let gb_a = groebner_basis(a.generators(), &order);
    let gb_b = groebner_basis(b.generators(), &order);
    let a_in_b = a.generators().iter().all(|f| ideal_contains(&gb_b, &order, f));
    let b_in_a = b.generators().iter().all(|f| ideal_contains(&gb_a, &order, f));
    Ok(a_in_b && b_in_a)
}

/// Certified Gröbner presentation of an ideal.
pub fn groebner_ideal(ideal: &Ideal, order: &TermOrder) -> Ideal {
    let basis = groebner_basis(ideal.generators(), order);
    let mut out = Ideal::new(ideal.nvars(), basis);
    out.is_groebner = Some(order.clone());
    out
}

/// Leading monomials of a Gröbner basis: the initial ideal.
pub fn initial_ideal(groebner: &[Polynomial], order: &TermOrder) -> Vec<Monomial> {
    groebner
        .iter()
        .map(|g| leading_term(g, order).expect("nonzero").0.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(i: usize) -> Polynomial {
        Polynomial::var(3, i)
    }

    #[test]
    fn principal_ideal_basis() {
        let order = TermOrder::grevlex();
        let gb = groebner_basis(&[var(0)], &order);
        assert_eq!(gb, vec![var(0)]);
    }

    #[test]
    fn linear_chain_reduces() {
        // <x1 - x2, x2 - x3> under grevlex: reduced basis {x1 - x3, x2 - x3}
        let order = TermOrder::grevlex();
        let f = var(0).sub(&var(1)).unwrap();
        let g = var(1).sub(&var(2)).unwrap();
        let gb = groebner_basis(&[f, g], &order);
        let expect_a = var(1).sub(&var(2)).unwrap();
        let expect_b = var(0).sub(&var(2)).unwrap();
        assert_eq!(gb, vec![expect_a, expect_b]);
        assert!(certify_groebner(&gb, &order));
    }

    #[test]
    fn membership_and_equality() {
        let order = TermOrder::grevlex();
        let x = var(0);
        let x2 = x.mul(&x).unwrap();
        let i1 = Ideal::new(3, vec![x.clone()]);
        let i2 = Ideal::new(3, vec![x2.clone()]);
        assert!(!ideal_equal(&i1, &i2).unwrap());
        // I vs I plus a zero generator
        let i3 = Ideal::new(3, vec![x.clone(), Polynomial::zero(3)]);
        assert!(ideal_equal(&i1, &i3).unwrap());
        let gb = groebner_basis(i1.generators(), &order);
        assert!(ideal_contains(&gb, &order, &x2));
        assert!(!ideal_contains(&gb, &order, &var(1)));
    }

    #[test]
    fn katsura_like_nonlinear_example() {
        // <x1^2 - x2, x1*x2 - x3>: S-pair gives x2^2 - x1*x3
        let order = TermOrder::grevlex();
        let f = Polynomial::monomial(3, &[(0, 2)]).sub(&var(1)).unwrap();
        let g = Polynomial::monomial(3, &[(0, 1), (1, 1)]).sub(&var(2)).unwrap();
        let gb = groebner_basis(&[f.clone(), g.clone()], &order);
        assert!(certify_groebner(&gb, &order));
        let h = Polynomial::monomial(3, &[(1, 2)])
            .sub(&Polynomial::monomial(3, &[(0, 1), (2, 1)]))
            .unwrap();
        assert!(ideal_contains(&gb, &order, &h));
    }

    #[test]
    fn normal_form_is_deterministic_function() {
        let order = TermOrder::grevlex();
        let f = Polynomial::monomial(3, &[(0, 3), (1, 1)]);
        let basis = vec![
            Polynomial::monomial(3, &[(0, 2)]).sub(&var(2)).unwrap(),
            Polynomial::monomial(3, &[(1, 1)]).sub(&var(2)).unwrap(),
        ];
        let a = normal_form(&f, &basis, &order);
        let b = normal_form(&f, &basis, &order);
        assert_eq!(a, b);
    }
}
