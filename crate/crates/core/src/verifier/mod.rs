//! Named brute-force checks. Each one restates a closed-form claim about roots,
//! pairings or pi-systems and tests it against direct computation with the
//! `root_core` and `pi_systems` primitives; no classifier function is called.

mod appendix;
mod borcherds;
mod enumeration;
mod inequalities;
mod matrices;
mod report;
mod roots;
mod sums;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

pub use appendix::{beta_eps_delta, from_eps_delta, to_eps_delta, EpsDeltaVec};
pub use borcherds::BorcherdsSystems;
pub use report::{CheckId, CheckReport, CheckTarget, Counterexample};

use crate::error::{Error, Result};
use crate::root_core::{Gcm2, Regime};

/// Matrices the finite-type check always runs on in [`run_all`].
pub const FINITE_GRID: [(i64, i64); 3] = [(1, 1), (2, 1), (3, 1)];
/// Values of `a` for the fixed runs on `(2 -a; -3 2)` in [`run_all`].
pub const BORCHERDS_A: [i64; 7] = [4, 5, 6, 7, 8, 9, 10];

fn mismatch(id: CheckId, target: &str, reason: &str) -> Error {
    Error::RegimeMismatch {
        check: id.name().to_string(),
        target: target.to_string(),
        reason: reason.to_string(),
    }
}

/// Target a check runs against, or the regime error if it cannot run there.
fn resolve(id: CheckId, g: Option<Gcm2>) -> Result<CheckTarget> {
    use CheckId::*;
    let shown = g.map_or_else(|| "none".to_string(), |g| g.to_string());
    if matches!(id, AppendixRoots | AppendixThm41) {
        return match g {
            None => Ok(CheckTarget::Appendix),
            Some(g) if g.regime() == Regime::TwistedAffine => Ok(CheckTarget::Appendix),
            Some(_) => Err(mismatch(id, &shown, "runs only on (4,1) or with no matrix")),
        };
    }
    let g = g.ok_or_else(|| mismatch(id, &shown, "needs a matrix"))?;
    let regime = g.regime();
    let (ok, reason) = match id {
        Lemrelcd | AuxeqIdentity => (true, ""),
        RootfourtypesIdentity => (regime != Regime::Finite, "needs ab >= 4"),
        FinpisystemFinite => (regime == Regime::Finite, "needs ab <= 3"),
        BorcherdsSigma => (g.b() == 3, "needs the matrix (2 -a; -3 2) with a >= 3"),
        _ => (
            regime == Regime::Standing,
            "needs b >= 2, or b = 1 and a >= 5",
        ),
    };
    if ok {
        Ok(CheckTarget::Gcm(g))
    } else {
        Err(mismatch(id, &shown, reason))
    }
}

/// Checks that [`run_check`] accepts for `g`, in report order. The appendix
/// checks are listed for `(4,1)`.
pub fn applicable_checks(g: &Gcm2) -> Vec<CheckId> {
    CheckId::ALL
        .into_iter()
        .filter(|&id| resolve(id, Some(*g)).is_ok())
        .collect()
}

fn dispatch(id: CheckId, target: CheckTarget, bound: usize) -> Result<Vec<Counterexample>> {
    use CheckId::*;
    let g = match target {
        CheckTarget::Appendix => {
            return match id {
                AppendixRoots => appendix::appendix_roots(bound),
                _ => appendix::appendix_thm41(bound),
            }
        }
        CheckTarget::Gcm(g) => g,
    };
    match id {
        RootfourtypesIdentity => roots::rootfourtypes_identity(&g, bound),
        Lemrelcd => roots::lemrelcd(&g, bound),
        IncreasingMonotonicity => roots::increasing_monotonicity(&g, bound),
        AuxeqIdentity => roots::auxeq_identity(&g, bound),
        Lem1Ineq => inequalities::lem1_ineq(&g, bound),
        Lem2Ineq => inequalities::lem2_ineq(&g, bound),
        Lem41Ineq => inequalities::lem41_ineq(&g, bound),
        Lem42Ineq => inequalities::lem42_ineq(&g, bound),
        KeypropposDiffs => sums::keyproppos_diffs(&g, bound),
        NsumrootSums => sums::nsumroot_sums(&g, bound),
        ThmabExhaustive => enumeration::thmab_exhaustive(&g, bound),
        NthmabExhaustive => enumeration::nthmab_exhaustive(&g, bound),
        FinpisystemFinite => enumeration::finpisystem_finite(&g),
        GcmSymmetryRelations => matrices::gcm_symmetry_relations(&g, bound),
        EtaRecurrence => matrices::eta_recurrence(&g, bound),
        ConverseRecurrence => matrices::converse_recurrence(&g, bound),
        IsoTable => matrices::iso_table(&g, bound),
        BorcherdsSigma => borcherds::borcherds_sigma(&g),
        AppendixRoots | AppendixThm41 => unreachable!("resolved to the appendix target"),
    }
}

/// Runs one check over indices `<= bound` (the check's default bound when
/// `None`). A matrix outside the check's regime is an error, never a skip; an
/// internal failure inside a compatible run is reported as a counterexample.
pub fn run_check(id: CheckId, g: Option<Gcm2>, bound: Option<usize>) -> Result<CheckReport> {
    let bound = bound.unwrap_or_else(|| id.default_bound());
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let target = resolve(id, g)?;
    Ok(run_resolved(id, target, bound))
}

fn run_resolved(id: CheckId, target: CheckTarget, bound: usize) -> CheckReport {
    let start = Instant::now();
    let counterexamples = dispatch(id, target, bound).unwrap_or_else(|e| {
        vec![Counterexample::new("check ran to completion").value("internal_error", e)]
    });
    let elapsed = start.elapsed().as_millis() as u64;
    CheckReport::new(id, target, bound, counterexamples, elapsed)
}

/// Every applicable check at each grid point, plus the fixed appendix,
/// finite-type and Borcherds runs. Reports are sorted by `(check, target)`
/// and duplicates are dropped; an empty grid gives no reports.
pub fn run_all(grid: &[Gcm2], bound: Option<usize>) -> Result<Vec<CheckReport>> {
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    if bound == Some(0) {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let mut jobs = BTreeSet::new();
    for g in grid {
        for id in applicable_checks(g) {
            jobs.insert((id, resolve(id, Some(*g))?));
        }
    }
    jobs.insert((CheckId::AppendixRoots, CheckTarget::Appendix));
    jobs.insert((CheckId::AppendixThm41, CheckTarget::Appendix));
    for (a, b) in FINITE_GRID {
        jobs.insert((
            CheckId::FinpisystemFinite,
            CheckTarget::Gcm(Gcm2::new(a, b)?),
        ));
    }
    for a in BORCHERDS_A {
        jobs.insert((CheckId::BorcherdsSigma, CheckTarget::Gcm(Gcm2::new(a, 3)?)));
    }
    let jobs: Vec<_> = jobs.into_iter().collect();
    Ok(jobs
        .into_par_iter()
        .map(|(id, target)| run_resolved(id, target, bound.unwrap_or_else(|| id.default_bound())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gcm(a: i64, b: i64) -> Gcm2 {
        Gcm2::new(a, b).unwrap()
    }

    #[test]
    fn regime_mismatch_is_an_error() {
        assert!(matches!(
            run_check(CheckId::Lem1Ineq, Some(gcm(1, 1)), None),
            Err(Error::RegimeMismatch { .. })
        ));
        assert!(run_check(CheckId::AppendixRoots, Some(gcm(3, 2)), Some(4)).is_err());
        assert!(run_check(CheckId::IsoTable, Some(gcm(4, 1)), Some(4)).is_err());
        assert!(run_check(CheckId::Lem1Ineq, None, Some(4)).is_err());
        assert!(run_check(CheckId::Lem1Ineq, Some(gcm(3, 2)), Some(0)).is_err());
    }

    #[test]
    fn applicability() {
        assert_eq!(
            applicable_checks(&gcm(2, 1)),
            vec![
                CheckId::Lemrelcd,
                CheckId::AuxeqIdentity,
                CheckId::FinpisystemFinite
            ]
        );
        let twisted = applicable_checks(&gcm(4, 1));
        assert!(twisted.contains(&CheckId::AppendixThm41));
        assert!(twisted.contains(&CheckId::RootfourtypesIdentity));
        assert!(!twisted.contains(&CheckId::Lem1Ineq));
        assert_eq!(applicable_checks(&gcm(3, 2)).len(), 16);
    }

    #[test]
    fn run_all_orders_and_dedups() {
        assert!(run_all(&[], Some(4)).unwrap().is_empty());
        let reports = run_all(&[gcm(3, 2), gcm(2, 3)], Some(4)).unwrap();
        let keys: Vec<_> = reports.iter().map(|r| (r.check, r.gcm)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
    }
}
