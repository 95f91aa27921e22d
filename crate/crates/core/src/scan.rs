//! Parameter-space sweeps: enumerate valid tuples, analyze each one
//! (classification, homogeneity both ways, Cohen-Macaulayness, Betti by
//! formula / oracle / resolution), and cross-check everything that can be
//! cross-checked.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{graded_betti_general, monomial_betti};
use crate::groebner::{
    ideal_equal, quotient_by_variable, tangent_cone_ideal, toric_ideal, Ideal,
};
use crate::komeda::{betti_formula, BettiSequence, CaseTag, KomedaParams};
use crate::poly::Polynomial;
use crate::resolution::{
    build_resolution, spot_check_minors, verify_complex, buchsbaum_eisenbud_check,
    MinorOutcome, Verdict,
};

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub alpha21: RangeInclusive<u64>,
    pub alpha1: RangeInclusive<u64>,
    pub alpha2: RangeInclusive<u64>,
    pub alpha3: RangeInclusive<u64>,
    pub alpha4: RangeInclusive<u64>,
    pub run_oracle: bool,
    pub run_resolutions: bool,
    pub run_homogeneity: bool,
}

/// Safety cap on any range bound; sweeps beyond this explode
/// combinatorially and are almost certainly a typo.
pub const MAX_ALPHA_CAP: u64 = 8;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ScanConfigError {
    #[error("range for {name} is empty")]
    EmptyRange { name: &'static str },
    #[error("range bound {bound} for {name} exceeds the safety cap {cap}")]
    BeyondCap { name: &'static str, bound: u64, cap: u64 },
}

impl ScanConfig {
    /// Ranges covering every tuple with all entries at most `max`.
    pub fn up_to(max: u64) -> Self {
        ScanConfig {
            alpha21: 1..=max,
            alpha1: 2..=max,
            alpha2: 2..=max,
            alpha3: 2..=max,
            alpha4: 2..=max,
            run_oracle: false,
            run_resolutions: false,
            run_homogeneity: true,
        }
    }

    pub fn check(&self) -> Result<(), ScanConfigError> {
        for (name, range) in [
            ("alpha21", &self.alpha21),
            ("alpha1", &self.alpha1),
            ("alpha2", &self.alpha2),
            ("alpha3", &self.alpha3),
            ("alpha4", &self.alpha4),
        ] {
            if range.is_empty() {
                return Err(ScanConfigError::EmptyRange { name });
            }
            if *range.end() > MAX_ALPHA_CAP {
                return Err(ScanConfigError::BeyondCap {
                    name,
                    bound: *range.end(),
                    cap: MAX_ALPHA_CAP,
                });
            }
        }
        Ok(())
    }
}

/// All fully valid parameter tuples in the configured ranges, in
/// lexicographic order.
pub fn enumerate_valid(config: &ScanConfig) -> Vec<KomedaParams> {
    let mut out = Vec::new();
    for a21 in config.alpha21.clone() {
        for a1 in config.alpha1.clone() {
            for a2 in config.alpha2.clone() {
                for a3 in config.alpha3.clone() {
                    for a4 in config.alpha4.clone() {
                        let Ok(p) = KomedaParams::new(a21, a1, a2, a3, a4) else {
                            continue;
                        };
                        if p.validate().is_ok() {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub alphas: [u64; 5],
    pub n: [u64; 4],
    pub mult_index: usize,
    pub case: String,
    pub cm: bool,
    /// Cohen-Macaulay but outside the closed-form case table (multiplicity
    /// n3 with alpha2 > alpha21 + 1 can be CM; the table is silent there).
    pub outside_table: bool,
    pub homog_criterion: Option<bool>,
    pub homog_apery: Option<bool>,
    pub beta: Option<BettiSequence>,
    pub oracle_beta: Option<BettiSequence>,
    pub oracle_route: Option<String>,
    pub standard_basis_match: Option<String>,
    pub resolution_verdict: Option<String>,
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanSummary {
    pub tuples: usize,
    pub cm_true: usize,
    pub cm_false: usize,
    pub outside_table: usize,
    pub homogeneity_disagreements: usize,
    pub oracle_disagreements: usize,
    pub resolution_disagreements: usize,
    pub inconclusive_certificates: usize,
    pub other_disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanResult {
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
}

impl ScanResult {
    pub fn has_disagreements(&self) -> bool {
        self.records.iter().any(|r| !r.disagreements.is_empty())
    }
}

/// Intermediate ideals for one tuple; built once and shared by the
/// Cohen-Macaulay test, the oracle, and the recertifications.
pub struct TupleAnalysis {
    pub params: KomedaParams,
    pub tag: CaseTag,
    pub n: [u64; 4],
    pub toric: Ideal,
    pub cone: Ideal,
    pub is_cm: bool,
}

impl TupleAnalysis {
    /// Independent route: the toric ideal comes from the lattice kernel
    /// of `n`, not from the model binomials.
    pub fn new(params: &KomedaParams) -> Result<Self, String> {
        let n = params.generators();
        let toric = toric_ideal(&n).map_err(|e| e.to_string())?;
        Self::with_toric(params, toric)
    }

    /// Same analysis over the ideal generated by the model binomials
    /// `f1..f5`. For fully valid tuples this is the same ideal; for
    /// degenerate tuples (gcd > 1, where the lattice route describes a
    /// different curve) it is the faithful formal object.
    pub fn from_model_generators(params: &KomedaParams) -> Result<Self, String> {
        let toric = Ideal::new(4, params.toric_generators());
        Self::with_toric(params, toric)
    }

    fn with_toric(params: &KomedaParams, toric: Ideal) -> Result<Self, String> {
        let tag = params.classify().map_err(|e| e.to_string())?;
        let n = params.generators();
        let cone = tangent_cone_ideal(&toric, None).map_err(|e| e.to_string())?;
        let quotient = quotient_by_variable(&cone, tag.multiplicity_index - 1);
        let is_cm = ideal_equal(&quotient, &cone).map_err(|e| e.to_string())?;
        Ok(TupleAnalysis { params: *params, tag, n, toric, cone, is_cm })
    }

    /// Generators of the projected ideal `pi_i(I*)` in the 3-variable
    /// ring on the surviving variables.
    pub fn projected_cone_generators(&self) -> Vec<Polynomial> {
        let (surviving, killed) =
            crate::komeda::surviving_variables(self.tag.multiplicity_index);
        self.cone
            .generators()
            .iter()
            .map(|g| g.kill_variable(killed).restrict_variables(&surviving))
            .filter(|g| !g.is_zero())
            .collect()
    }

    /// Oracle Betti sequence of the tangent cone via the projection
    /// (valid when the tangent cone is Cohen-Macaulay): multigraded
    /// Koszul homology when the projection is monomial, graded strands
    /// otherwise. Returns the route taken.
    pub fn oracle_betti(&self) -> Result<(BettiSequence, &'static str), String> {
        let projected = self.projected_cone_generators();
        let all_monomial = projected.iter().all(Polynomial::is_monomial);
        if all_monomial {
            let table = monomial_betti(&projected, 3).map_err(|e| e.to_string())?;
            Ok((table.betti_sequence().map_err(|e| e.to_string())?, "monomial-koszul"))
        } else {
            let ideal = Ideal::new(3, projected);
            let table = graded_betti_general(&ideal).map_err(|e| e.to_string())?;
            Ok((table.betti_sequence().map_err(|e| e.to_string())?, "graded-strands"))
        }
    }

    /// Compare the projected tangent cone ideal with a stated generator
    /// list, as ideals.
    pub fn projected_matches(&self, stated: &[Polynomial]) -> Result<bool, String> {
        let ours = Ideal::new(3, self.projected_cone_generators());
        let theirs = Ideal::new(3, stated.to_vec());
        ideal_equal(&ours, &theirs).map_err(|e| e.to_string())
    }

    /// Which stated standard-basis candidate matches: its elements all lie
    /// in the toric ideal and its initial forms generate the tangent cone
    /// ideal.
    pub fn certify_standard_basis(&self) -> Result<Option<&'static str>, String> {
        let candidates = match self.params.standard_basis_candidates(self.tag) {
            Ok(c) => c,
            Err(_) => return Ok(None),
        };
        let order = crate::groebner::TermOrder::grevlex();
        let toric_gb = crate::groebner::groebner_basis(self.toric.generators(), &order);
        for candidate in &candidates.candidates {
            if !candidate.is_s_balanced(&self.n) {
                continue;
            }
            let in_ideal = candidate
                .generators
                .iter()
                .all(|f| crate::groebner::ideal_contains(&toric_gb, &order, f));
            if !in_ideal {
                continue;
            }
            let forms: Vec<Polynomial> = candidate
                .generators
                .iter()
                .map(|f| f.initial_form().expect("nonzero"))
                .collect();
            let from_candidate = Ideal::new(4, forms);
            if ideal_equal(&from_candidate, &self.cone).map_err(|e| e.to_string())? {
                return Ok(Some(candidate.description));
            }
        }
        Ok(None)
    }
}

/// Analyze one valid tuple under the given toggles.
pub fn analyze_tuple(params: &KomedaParams, config: &ScanConfig) -> ScanRecord {
    let alphas = [params.alpha21, params.alpha1, params.alpha2, params.alpha3, params.alpha4];
    let mut disagreements = Vec::new();

    let analysis = match TupleAnalysis::new(params) {
        Ok(a) => a,
        Err(e) => {
            return ScanRecord {
                alphas,
                n: params.generators(),
                mult_index: 0,
                case: "error".into(),
                cm: false,
                outside_table: false,
                homog_criterion: None,
                homog_apery: None,
                beta: None,
                oracle_beta: None,
                oracle_route: None,
                standard_basis_match: None,
                resolution_verdict: None,
                disagreements: vec![format!("analysis failed: {e}")],
            };
        }
    };
    let tag = analysis.tag;
    let beta = betti_formula(tag);

    // homogeneity two ways: the parameter criterion vs the Apery oracle
    let (homog_criterion, homog_apery) = if config.run_homogeneity {
        let criterion = params.is_homogeneous_criterion().ok();
        let apery = params.validate().ok().map(|s| s.is_homogeneous());
        if let (Some(a), Some(b)) = (criterion, apery) {
            if a != b {
                disagreements
                    .push(format!("homogeneity criterion {a} but Apery computation {b}"));
            }
        }
        (criterion, apery)
    } else {
        (None, None)
    };

    // Cohen-Macaulay tuples outside the case table do occur (n3
    // multiplicity with alpha2 > alpha21 + 1); the oracle still computes
    // their Betti sequence, there is just no closed form to compare it to.
    let outside_table = analysis.is_cm && beta.is_none();

    let mut oracle_beta = None;
    let mut oracle_route = None;
    let mut standard_basis_match = None;
    if config.run_oracle && analysis.is_cm {
        match analysis.oracle_betti() {
            Ok((b, route)) => {
                oracle_beta = Some(b);
                oracle_route = Some(route.to_string());
                match beta {
                    Some(f) if f != b => {
                        disagreements.push(format!("formula Betti {f} but oracle Betti {b}"));
                    }
                    _ => {}
                }
            }
            Err(e) => disagreements.push(format!("oracle failed: {e}")),
        }
        // recertify the imported standard bases and the stated projections;
        // formula-only candidates (the homogeneous subcases) are a guess,
        // not an imported statement, so a non-match there is not an error
        match analysis.certify_standard_basis() {
            Ok(m) => {
                standard_basis_match = m.map(String::from);
                let imported = params
                    .standard_basis_candidates(tag)
                    .map(|c| !c.formula_only)
                    .unwrap_or(false);
                if imported && standard_basis_match.is_none() {
                    disagreements
                        .push("no stated standard-basis candidate matches the tangent cone".into());
                }
            }
            Err(e) => disagreements.push(format!("standard basis certification failed: {e}")),
        }
        if let Ok(proj) = params.projected_generators(tag) {
            match analysis.projected_matches(&proj.monomials) {
                Ok(true) => {}
                Ok(false) => disagreements.push(
                    "stated projected generators differ from the recomputed projection".into(),
                ),
                Err(e) => disagreements.push(format!("projection comparison failed: {e}")),
            }
        }
    }

    let mut resolution_verdict = None;
    if config.run_resolutions && tag.has_resolution() && analysis.is_cm {
        match build_resolution(params, tag) {
            Err(e) => {
                resolution_verdict = Some(format!("build failed: {e}"));
                disagreements.push(format!("resolution build failed: {e}"));
            }
            Ok(res) => {
                let complex = verify_complex(&res);
                let be = buchsbaum_eisenbud_check(&res);
                let minors = spot_check_minors(&res);
                let hard_mismatch = minors.iter().any(|m| m.outcome == MinorOutcome::Mismatch);
                let verdict = if !complex.is_complex() {
                    disagreements.push(format!("not a complex: {}", complex.describe_failure()));
                    "not-a-complex".to_string()
                } else if be.verdict != Verdict::Exact {
                    disagreements.push(format!("Buchsbaum-Eisenbud verdict {:?}", be.verdict));
                    format!("{:?}", be.verdict).to_lowercase()
                } else if hard_mismatch {
                    disagreements.push("named minor mismatch beyond sign".into());
                    "minor-mismatch".to_string()
                } else {
                    let betti = BettiSequence([
                        res.ranks[0] as u64,
                        res.ranks[1] as u64,
                        res.ranks[2] as u64,
                        res.ranks[3] as u64,
                    ]);
                    match beta {
                        Some(f) if f != betti => {
                            disagreements
                                .push(format!("formula Betti {f} but resolution Betti {betti}"));
                        }
                        _ => {}
                    }
                    if minors.iter().any(|m| m.outcome == MinorOutcome::UpToSign) {
                        "exact (some minors match up to sign)".to_string()
                    } else {
                        "exact".to_string()
                    }
                };
                resolution_verdict = Some(verdict);
            }
        }
    }

    ScanRecord {
        alphas,
        n: analysis.n,
        mult_index: tag.multiplicity_index,
        case: tag.to_string(),
        cm: analysis.is_cm,
        outside_table,
        homog_criterion,
        homog_apery,
        beta,
        oracle_beta,
        oracle_route,
        standard_basis_match,
        resolution_verdict,
        disagreements,
    }
}

/// Aggregate counters over a record set.
pub fn summarize_records(records: &[ScanRecord]) -> ScanSummary {
    let mut summary = ScanSummary { tuples: records.len(), ..Default::default() };
    for r in records {
        if r.cm {
            summary.cm_true += 1;
        } else {
            summary.cm_false += 1;
        }
        if r.outside_table {
            summary.outside_table += 1;
        }
        for d in &r.disagreements {
            if d.contains("homogeneity") {
                summary.homogeneity_disagreements += 1;
            } else if d.contains("oracle") {
                summary.oracle_disagreements += 1;
            } else if d.contains("resolution") || d.contains("complex") || d.contains("minor") {
                summary.resolution_disagreements += 1;
            } else {
                summary.other_disagreements += 1;
            }
        }
        if r
            .resolution_verdict
            .as_deref()
            .is_some_and(|v| v.contains("inconclusive"))
        {
            summary.inconclusive_certificates += 1;
        }
    }
    summary
}

/// Run the sweep. Tuples are analyzed in parallel; the record order is
/// the deterministic enumeration order regardless of worker count.
pub fn run_scan(config: &ScanConfig) -> Result<ScanResult, ScanConfigError> {
    config.check()?;
    let tuples = enumerate_valid(config);
    let records: Vec<ScanRecord> = tuples
        .par_iter()
        .map(|p| analyze_tuple(p, config))
        .collect();
    let summary = summarize_records(&records);
    Ok(ScanResult { records, summary })
}
