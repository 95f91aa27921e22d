//! Self-contained Buchberger/Mora machinery: global Gröbner bases,
//! elimination, ideal quotient and saturation, toric ideals from lattice
//! kernels, local standard bases, tangent cone ideals, and the
//! Cohen-Macaulayness test for the multiplicity variable.

use std::cmp::Ordering;

use num::BigRational;
use thiserror::Error;

use crate::poly::{grevlex_tiebreak, Monomial, Polynomial};

mod buchberger;
mod mora;
mod toric;

pub use buchberger::{
    certify_groebner, groebner_basis, groebner_ideal, ideal_contains, ideal_equal,
    initial_ideal, normal_form,
};
pub use mora::{
    certify_standard_basis_closure, local_standard_basis, tangent_cone_ideal, MoraError,
    DEFAULT_DEGREE_CAP_FACTOR,
};
pub use toric::{
    cm_check, lattice_kernel, quotient_by_variable, saturate_by_variables,
    saturate_positively_graded, toric_ideal, CmError, CmReport,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("ideals live in different ambient rings ({0} vs {1} variables)")]
    AmbientMismatch(usize, usize),
    #[error(transparent)]
    Mora(#[from] MoraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Graded reverse lexicographic; a global well-order.
    Grevlex,
    /// Negative graded reverse lexicographic (smaller total degree is
    /// larger); the local order used for standard bases.
    NegGrevlex,
    /// Compare the exponent of the last variable first, then grevlex on
    /// the rest: an elimination order for a trailing tag variable.
    ElimLast,
    /// Reverse lexicographic refining a positive weighted grading; the
    /// order behind single-GB saturation of graded ideals.
    WeightedGrevlex(Vec<u64>),
}

/// A monomial order, optionally precomposed with a variable priority
/// permutation (`priority[i]` is the variable read in position `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    pub kind: OrderKind,
    priority: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder { kind: OrderKind::Grevlex, priority: None }
    }

    pub fn local() -> Self {
        TermOrder { kind: OrderKind::NegGrevlex, priority: None }
    }

    pub fn elim_last() -> Self {
        TermOrder { kind: OrderKind::ElimLast, priority: None }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        TermOrder { kind, priority: Some(priority) }
    }

    /// Weighted reverse lexicographic order with `cheapest` moved to the
    /// revlex-cheapest position. For an ideal homogeneous under the
    /// weights, a Gröbner basis under this order saturates with respect
    /// to `x_cheapest` by dividing out its powers.
    pub fn weighted_saturating(weights: &[u64], cheapest: usize) -> Self {
        let k = weights.len();
        let mut priority: Vec<usize> = (0..k).filter(|&i| i != cheapest).collect();
        priority.push(cheapest);
        let permuted_weights: Vec<u64> = priority.iter().map(|&i| weights[i]).collect();
        TermOrder {
            kind: OrderKind::WeightedGrevlex(permuted_weights),
            priority: Some(priority),
        }
    }

    pub fn is_global(&self) -> bool {
        !matches!(self.kind, OrderKind::NegGrevlex)
    }

    fn permuted(&self, m: &Monomial) -> Vec<u32> {
        match &self.priority {
            None => m.exponents().to_vec(),
            Some(p) => p.iter().map(|&i| m.exponent(i)).collect(),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ea = self.permuted(a);
        let eb = self.permuted(b);
        match &self.kind {
            OrderKind::Grevlex => {
                let da: u64 = ea.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = eb.iter().map(|&e| u64::from(e)).sum();
                da.cmp(&db).then_with(|| grevlex_tiebreak(&ea, &eb))
            }
            OrderKind::NegGrevlex => {
                let da: u64 = ea.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = eb.iter().map(|&e| u64::from(e)).sum();
                db.cmp(&da).then_with(|| grevlex_tiebreak(&ea, &eb))
            }
            OrderKind::ElimLast => {
                let last = ea.len() - 1;
                ea[last]
                    .cmp(&eb[last])
                    .then_with(|| {
                        let ra: u64 = ea[..last].iter().map(|&e| u64::from(e)).sum();
                        let rb: u64 = eb[..last].iter().map(|&e| u64::from(e)).sum();
                        ra.cmp(&rb)
                    })
                    .then_with(|| grevlex_tiebreak(&ea[..last], &eb[..last]))
            }
            OrderKind::WeightedGrevlex(weights) => {
                let da: u64 = ea.iter().zip(weights).map(|(&e, &w)| u64::from(e) * w).sum();
                let db: u64 = eb.iter().zip(weights).map(|(&e, &w)| u64::from(e) * w).sum();
                da.cmp(&db).then_with(|| grevlex_tiebreak(&ea, &eb))
            }
        }
    }
}

/// Leading monomial and coefficient of `f` under `order`.
pub fn leading_term<'a>(
    f: &'a Polynomial,
    order: &TermOrder,
) -> Option<(&'a Monomial, &'a BigRational)> {
    f.terms().max_by(|(a, _), (b, _)| order.cmp(a, b))
}

/// A set of generators with certification flags. Flags are only set by
/// the routines that actually establish them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    pub is_groebner: Option<TermOrder>,
    pub is_standard_basis: bool,
    pub is_homogeneous: bool,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.nvars(), nvars, "generator has wrong ambient variable count");
        }
        let is_homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ideal {
            nvars,
            generators,
            is_groebner: None,
            is_standard_basis: false,
            is_homogeneous,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_order_prefers_low_degree() {
        let ord = TermOrder::local();
        let one = Monomial::one(3);
        let x = Monomial::var(3, 0);
        let x2 = Monomial::new(vec![2, 0, 0]);
        assert_eq!(ord.cmp(&one, &x), Ordering::Greater);
        assert_eq!(ord.cmp(&x, &x2), Ordering::Greater);
        // equal degree falls back to the grevlex tiebreak
        let xy = Monomial::new(vec![1, 1, 0]);
        let z2 = Monomial::new(vec![0, 0, 2]);
        assert_eq!(ord.cmp(&xy, &z2), Ordering::Greater);
    }

    #[test]
    fn elim_order_separates_tag() {
        let ord = TermOrder::elim_last();
        // any monomial containing the tag beats any tag-free monomial
        let tag = Monomial::new(vec![0, 0, 1]);
        let big = Monomial::new(vec![7, 9, 0]);
        assert_eq!(ord.cmp(&tag, &big), Ordering::Greater);
        assert_eq!(ord.cmp(&big, &tag), Ordering::Less);
    }

    #[test]
    fn leading_terms_per_order() {
        // f2 = x2^4 - x1^2*x4 (degrees 4 vs 3)
        let f = Polynomial::monomial(4, &[(1, 4)])
            .sub(&Polynomial::monomial(4, &[(0, 2), (3, 1)]))
            .unwrap();
        let (lm, _) = leading_term(&f, &TermOrder::grevlex()).unwrap();
        assert_eq!(lm, &Monomial::new(vec![0, 4, 0, 0]));
        let (lm, _) = leading_term(&f, &TermOrder::local()).unwrap();
        assert_eq!(lm, &Monomial::new(vec![2, 0, 0, 1]));
    }
}
