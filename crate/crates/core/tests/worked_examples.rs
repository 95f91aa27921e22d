//! Worked examples pinning concrete values across module boundaries:
//! Cohen-Macaulayness of the table rows, projected tangent cone ideals
//! against their stated generator lists, standard-basis recertification,
//! and the two Betti oracles on known instances.

use betticone_core::betti::{graded_betti_general, monomial_betti};
use betticone_core::groebner::{cm_check, ideal_equal, Ideal};
use betticone_core::komeda::{BettiSequence, KomedaParams};
use betticone_core::poly::Polynomial;
use betticone_core::scan::{run_scan, ScanConfig, TupleAnalysis};

fn params(a: [u64; 5]) -> KomedaParams {
    KomedaParams::new(a[0], a[1], a[2], a[3], a[4]).unwrap()
}

#[test]
fn factorizations_of_zero() {
    let s = params([2, 5, 3, 2, 2]).validate().unwrap();
    assert_eq!(s.factorizations(0), vec![vec![0, 0, 0, 0]]);
    assert_eq!(
        s.length_set(0).unwrap().lengths,
        std::collections::BTreeSet::from([0])
    );
}

#[test]
fn homogeneity_criterion_on_the_degenerate_row() {
    // (2,5,4,2,4) has multiplicity n2 with alpha1 > alpha4
    assert!(!params([2, 5, 4, 2, 4]).is_homogeneous_criterion().unwrap());
}

#[test]
fn cm_check_on_table_rows() {
    for a in [[2u64, 5, 3, 2, 2], [3, 6, 3, 4, 6]] {
        let report = cm_check(&params(a)).unwrap();
        assert!(report.is_cm, "{a:?}");
    }
}

#[test]
fn scan_discovers_non_cm_instances() {
    let mut config = ScanConfig::up_to(3);
    config.run_homogeneity = false;
    let result = run_scan(&config).unwrap();
    assert!(result.summary.cm_false > 0, "{:?}", result.summary);
    assert!(!result.has_disagreements());
    // a specific one: (1,3,2,3,2) has a non-Cohen-Macaulay tangent cone
    let record = result
        .records
        .iter()
        .find(|r| r.alphas == [1, 3, 2, 3, 2])
        .unwrap();
    assert!(!record.cm);
}

#[test]
fn projected_cone_matches_stated_generators_on_table_rows() {
    for a in [[2u64, 4, 4, 2, 5], [3, 6, 3, 4, 6], [1, 4, 2, 2, 4]] {
        let p = params(a);
        let tag = p.classify().unwrap();
        let analysis = TupleAnalysis::new(&p).unwrap();
        assert!(analysis.is_cm);
        let stated = p.projected_generators(tag).unwrap();
        assert!(
            analysis.projected_matches(&stated.monomials).unwrap(),
            "{a:?}: stated generator list differs from the recomputed projection"
        );
    }
}

#[test]
fn stated_standard_bases_recertify() {
    // row 3: f1..f5 is already a standard basis
    let p = params([2, 4, 4, 2, 5]);
    let analysis = TupleAnalysis::new(&p).unwrap();
    assert_eq!(analysis.certify_standard_basis().unwrap(), Some("f1..f5"));
    let forms: Vec<Polynomial> = p
        .toric_generators()
        .iter()
        .map(|f| f.initial_form().unwrap())
        .collect();
    assert!(ideal_equal(&Ideal::new(4, forms), &analysis.cone).unwrap());

    // row 6: the six-element basis with f6 is the one that matches
    let p = params([3, 6, 3, 4, 6]);
    let analysis = TupleAnalysis::new(&p).unwrap();
    assert_eq!(analysis.certify_standard_basis().unwrap(), Some("f1..f5, f6"));
}

#[test]
fn monomial_oracle_on_stated_projection() {
    // projected generators at (2,4,4,2,5) give (1,5,7,3)
    let p = params([2, 4, 4, 2, 5]);
    let gens = p.projected_generators(p.classify().unwrap()).unwrap().monomials;
    let table = monomial_betti(&gens, 3).unwrap();
    assert_eq!(table.betti_sequence().unwrap(), BettiSequence([1, 5, 7, 3]));
}

#[test]
fn graded_oracle_on_the_four_variable_cone() {
    // multiplicity n1 row: the tangent cone ideal itself, no projection
    let p = params([2, 5, 3, 2, 2]);
    let analysis = TupleAnalysis::new(&p).unwrap();
    let table = graded_betti_general(&analysis.cone).unwrap();
    assert_eq!(table.betti_sequence().unwrap(), BettiSequence([1, 5, 6, 2]));
}

#[test]
fn model_generator_route_agrees_with_lattice_route_on_valid_tuples() {
    let p = params([1, 4, 2, 2, 4]);
    let lattice = TupleAnalysis::new(&p).unwrap();
    let model = TupleAnalysis::from_model_generators(&p).unwrap();
    assert!(ideal_equal(&lattice.toric, &model.toric).unwrap());
    assert_eq!(lattice.is_cm, model.is_cm);
    assert_eq!(
        lattice.oracle_betti().unwrap().0,
        model.oracle_betti().unwrap().0
    );
}
