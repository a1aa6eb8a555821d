//! Parallel versions of the core sweeps. Each semigroup is an independent
//! work unit; results come back in enumeration order.

use kunz_core::analysis::{
    multiplicity_three_semigroups, oracle_agreement, verify_instance, Failure,
};
use kunz_core::{Check, CheckReport, IdealPoset, IdealSet, NumericalSemigroup};
use rayon::prelude::*;

/// Same result as [`kunz_core::verify_suite`], one poset per thread.
pub fn verify_suite(max_genus: u64, checks: &[Check]) -> Vec<CheckReport> {
    let semigroups = multiplicity_three_semigroups(max_genus);
    let per_instance: Vec<Vec<Option<String>>> = semigroups
        .par_iter()
        .map(|s| {
            let poset = IdealPoset::new(s.clone());
            checks
                .iter()
                .map(|&c| verify_instance(c, &poset).err())
                .collect()
        })
        .collect();
    checks
        .iter()
        .enumerate()
        .map(|(k, &check)| CheckReport {
            check,
            max_genus,
            instances: semigroups.len(),
            failures: semigroups
                .iter()
                .zip(&per_instance)
                .filter_map(|(s, results)| {
                    results[k].clone().map(|detail| Failure {
                        semigroup: s.clone(),
                        detail,
                    })
                })
                .collect(),
        })
        .collect()
}

/// Same result as [`kunz_core::order_coincidence_sweep`].
pub fn order_coincidence_sweep(max_genus: u64) -> Vec<NumericalSemigroup> {
    NumericalSemigroup::all_up_to_genus(max_genus)
        .into_par_iter()
        .filter(|s| IdealSet::enumerate(s.clone()).orders_coincide())
        .collect()
}

/// Kunz formulas against explicit sets for every semigroup (any
/// multiplicity) of genus at most `max_genus`. Returns the semigroup count
/// and the disagreements.
pub fn oracle_sweep(max_genus: u64) -> (usize, Vec<Failure>) {
    let all = NumericalSemigroup::all_up_to_genus(max_genus);
    let failures = all
        .par_iter()
        .filter_map(|s| {
            oracle_agreement(&IdealSet::enumerate(s.clone()))
                .err()
                .map(|detail| Failure {
                    semigroup: s.clone(),
                    detail,
                })
        })
        .collect();
    (all.len(), failures)
}
