//! Deep cross-checks of the tangent cone pipeline against routes that
//! share no code with it.
//!
//! The Hilbert function check is decisive: the computed cone ideal is
//! generated by initial forms of elements of the toric ideal, so it is
//! contained in the true ideal of initial forms; equality of Hilbert
//! functions degree by degree then forces equality of the ideals. The
//! semigroup side needs nothing but factorization lengths.

use betticone_core::groebner::{
    certify_standard_basis_closure, groebner_basis, initial_ideal, local_standard_basis,
    TermOrder,
};
use betticone_core::scan::{enumerate_valid, ScanConfig, TupleAnalysis};
use betticone_core::Monomial;

/// Hilbert function of `A/J` for a monomial ideal given by its minimal
/// generators, by direct monomial counting.
fn hilbert_function_of_monomial_ideal(lead: &[Monomial], nvars: usize, up_to: usize) -> Vec<usize> {
    fn count(nvars: usize, rem: usize, idx: usize, exps: &mut Vec<u32>, lead: &[Monomial]) -> usize {
        if idx == nvars - 1 {
            exps[idx] = rem as u32;
            let m = Monomial::new(exps.clone());
            exps[idx] = 0;
            return usize::from(!lead.iter().any(|l| l.divides(&m)));
        }
        let mut total = 0;
        for e in 0..=rem {
            exps[idx] = e as u32;
            total += count(nvars, rem - e, idx + 1, exps, lead);
        }
        exps[idx] = 0;
        total
    }
    (0..=up_to)
        .map(|d| count(nvars, d, 0, &mut vec![0u32; nvars], lead))
        .collect()
}

#[test]
fn hilbert_function_matches_factorization_lengths() {
    let mut tuples = enumerate_valid(&ScanConfig::up_to(3));
    // a few larger instances, including one outside the case table and a
    // large-generator one
    for extra in [[2u64, 4, 4, 2, 5], [1, 4, 2, 2, 4], [2, 4, 5, 4, 5], [3, 5, 5, 2, 2]] {
        let p = betticone_core::KomedaParams::new(extra[0], extra[1], extra[2], extra[3], extra[4])
            .unwrap();
        assert!(p.validate().is_ok(), "extra tuple {extra:?} must be fully valid");
        tuples.push(p);
    }
    let order = TermOrder::grevlex();
    for p in &tuples {
        let semigroup = p.validate().unwrap();
        let analysis = TupleAnalysis::new(p).unwrap();
        let gb = groebner_basis(analysis.cone.generators(), &order);
        let lead = initial_ideal(&gb, &order);
        let up_to = 2 * semigroup.multiplicity() as usize + 4;
        let from_ideal = hilbert_function_of_monomial_ideal(&lead, 4, up_to);
        let from_semigroup = semigroup.graded_hilbert_function(up_to);
        assert_eq!(
            from_ideal, from_semigroup,
            "Hilbert functions diverge at {p:?}"
        );
    }
}

#[test]
fn standard_bases_recertify_without_pair_shortcuts() {
    let mut tuples = enumerate_valid(&ScanConfig::up_to(3));
    for extra in [[2u64, 5, 4, 2, 4], [3, 6, 3, 4, 6], [1, 4, 3, 5, 4]] {
        tuples.push(
            betticone_core::KomedaParams::new(extra[0], extra[1], extra[2], extra[3], extra[4])
                .unwrap(),
        );
    }
    for p in &tuples {
        let analysis = TupleAnalysis::new(p).unwrap();
        let basis = local_standard_basis(analysis.toric.generators(), None).unwrap();
        assert!(
            certify_standard_basis_closure(&basis, None).unwrap(),
            "{p:?}: an S-polynomial escaped the standard basis closure"
        );
    }
}
