//! Quark classification, reconstruction of a multiplicity-3 semigroup from
//! its unlabeled ideal poset, and exhaustive sweeps.

mod verify;

pub use verify::{verify_instance, verify_suite, Check, CheckReport, Failure};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kunz::KunzVector;
use crate::oracle::{self, Truncation};
use crate::poset::{AbstractPoset, IdealPoset, IdealSet};
use crate::semigroup::{Classification, NumericalSemigroup};

/// Quarks (covers of `S`) of a multiplicity-3 semigroup with their depths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarkReport {
    pub semigroup: NumericalSemigroup,
    pub quark_kunz: Vec<KunzVector>,
    pub quark_depths: Vec<u32>,
    pub classification: Classification,
}

pub fn quark_report(s: &NumericalSemigroup) -> Result<QuarkReport> {
    let m = s.multiplicity();
    if m != 3 {
        return Err(Error::WrongMultiplicity(m));
    }
    Ok(quark_report_of(&IdealPoset::new(s.clone())))
}

pub(crate) fn quark_report_of(poset: &IdealPoset) -> QuarkReport {
    let quarks = poset.quarks();
    QuarkReport {
        semigroup: (**poset.ambient()).clone(),
        quark_kunz: quarks.iter().map(|&q| poset.ideal(q).kunz().clone()).collect(),
        quark_depths: quarks.iter().map(|&q| poset.depth(q)).collect(),
        classification: poset.ambient().classify().expect("multiplicity 3 is not ℕ"),
    }
}

/// The three quarks of a non-irreducible `S = (k₁, k₂)`, or `None` when
/// `S` is irreducible or does not have multiplicity 3.
pub fn closed_form_quarks(s: &NumericalSemigroup) -> Option<[KunzVector; 3]> {
    if s.multiplicity() != 3 || s.is_irreducible().ok()? {
        return None;
    }
    let [k1, k2] = *s.kunz().entries() else {
        return None;
    };
    let third = if k1 <= k2 {
        [k2 - k1, k2]
    } else {
        [k1, k1 - k2 - 1]
    };
    Some([[k1 - 1, k2].into(), [k1, k2 - 1].into(), third.into()])
}

/// Every multiplicity-3 semigroup with genus at most `max_genus`, by genus
/// and then Kunz coordinates. These are the pairs `(k₁, k₂)` with
/// `k₁ + k₂ = g`, `k₁ ≤ 2k₂ + 1` and `k₂ ≤ 2k₁`.
pub fn multiplicity_three_semigroups(max_genus: u64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    for g in 2..=max_genus as u32 {
        for k1 in 1..g {
            let k2 = g - k1;
            if k1 <= 2 * k2 + 1 && k2 <= 2 * k1 {
                out.push(
                    NumericalSemigroup::from_kunz(&[k1, k2].into())
                        .expect("pair satisfies the semigroup inequalities"),
                );
            }
        }
    }
    out
}

/// Outcome of [`reconstruct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub genus: u64,
    pub quark_count: usize,
    /// Depth `d < g − 1` of the odd quark, when there are three.
    pub odd_quark_depth: Option<u64>,
    pub recovered: NumericalSemigroup,
}

fn not_m3(msg: impl Into<String>) -> Error {
    Error::NotMultiplicityThreePoset(msg.into())
}

/// Recovers the multiplicity-3 semigroup whose ideal poset is `poset`.
///
/// Only the shape is used. The genus is the longest chain length `g`; one
/// quark means `F = 2g − 1`, two mean `F = 2g − 2`, and then
/// `S = ⟨3, 3g − F, F + 3⟩`. With three quarks the odd quark depth `d`
/// fixes `(k₁, k₂)`. The answer is confirmed by rebuilding its poset.
pub fn reconstruct(poset: &AbstractPoset) -> Result<ReconstructionResult> {
    if poset.is_chain() {
        return Err(not_m3(format!(
            "a chain of length {} is the poset of ⟨2, {}⟩ and of no multiplicity-3 semigroup",
            poset.height(),
            2 * poset.height() + 1
        )));
    }
    let g = poset.height() as u64;
    let quarks = poset.upper_covers(poset.minimum());
    let (recovered, odd) = match quarks.len() {
        1 | 2 => {
            let f = 2 * g - quarks.len() as u64;
            let s = NumericalSemigroup::from_generators(&[3, 3 * g - f, f + 3])?;
            (s, None)
        }
        3 => {
            let short: Vec<u64> = quarks
                .iter()
                .map(|&q| poset.depth(q) as u64)
                .filter(|&d| d + 1 < g)
                .collect();
            let [d] = short[..] else {
                return Err(not_m3(format!(
                    "{} quarks have depth below g − 1 = {}",
                    short.len(),
                    g - 1
                )));
            };
            let (k1, k2) = match (g + d) % 3 {
                0 => ((2 * g - d) / 3, (g + d) / 3),
                2 => ((g + d + 1) / 3, (2 * g - d - 1) / 3),
                _ => return Err(not_m3(format!("g + d = {} is 1 mod 3", g + d))),
            };
            let kunz = KunzVector::new(alloc::vec![k1 as u32, k2 as u32]);
            let s = NumericalSemigroup::from_kunz(&kunz)
                .map_err(|_| not_m3(format!("{kunz} is not a semigroup")))?;
            (s, Some(d))
        }
        n => return Err(not_m3(format!("{n} quarks"))),
    };
    if recovered.multiplicity() != 3
        || !IdealPoset::new(recovered.clone()).to_abstract().is_isomorphic(poset)
    {
        return Err(not_m3(format!(
            "candidate {recovered} does not reproduce the input"
        )));
    }
    Ok(ReconstructionResult {
        genus: g,
        quark_count: quarks.len(),
        odd_quark_depth: odd,
        recovered,
    })
}

/// Whether `S` is one of ℕ, `⟨2, 2k+1⟩`, `⟨3,4⟩`, `⟨3,4,5⟩`, `⟨3,5⟩`,
/// `⟨3,5,7⟩`: the semigroups for which `⊆` and `⪯` agree.
pub fn in_coincidence_list(s: &NumericalSemigroup) -> bool {
    s.multiplicity() <= 2
        || [&[3u64, 4][..], &[3, 4, 5], &[3, 5], &[3, 5, 7]]
            .iter()
            .any(|g| s.minimal_generators() == *g)
}

/// Semigroups of genus at most `max_genus` whose `⊆` and `⪯` coincide, in
/// the order of [`NumericalSemigroup::all_up_to_genus`].
pub fn order_coincidence_sweep(max_genus: u64) -> Vec<NumericalSemigroup> {
    NumericalSemigroup::all_up_to_genus(max_genus)
        .into_iter()
        .filter(|s| IdealSet::enumerate(s.clone()).orders_coincide())
        .collect()
}

/// Compares every Kunz-coordinate formula on `𝔍₀(S)` (membership, gap
/// count, inclusion, sum, union, intersection) with explicit truncated sets.
/// Returns a description of the first disagreement.
pub fn oracle_agreement(set: &IdealSet) -> core::result::Result<(), String> {
    let s = set.ambient();
    let m = s.multiplicity();
    let top = s.kunz();
    let bound = oracle::binary_bound(top, top);
    let truncs: Vec<Truncation> = set
        .ideals()
        .iter()
        .map(|i| oracle::staircase_set(i.kunz(), bound).expect("bound covers every ideal"))
        .collect();
    for (ideal, t) in set.ideals().iter().zip(&truncs) {
        let v = ideal.kunz();
        if let Some(n) = (0..=bound).find(|&n| v.contains(n as i64) != t.contains(n)) {
            return Err(format!("membership of {n} in {v}"));
        }
        if v.gap_count() != t.missing() as u64 {
            return Err(format!("gap count of {v}"));
        }
    }
    for (a, ta) in set.ideals().iter().zip(&truncs) {
        for (b, tb) in set.ideals().iter().zip(&truncs) {
            let (x, y) = (a.kunz(), b.kunz());
            let cases = [
                ("sum", x.sum(y), ta.minkowski_sum(tb)),
                ("union", x.union(y), ta.union(tb)),
                ("intersection", x.intersection(y), ta.intersection(tb)),
            ];
            for (name, formula, explicit) in cases {
                if formula.ok() != explicit.kunz(m) {
                    return Err(format!("{name} of {x} and {y}"));
                }
            }
            if x.is_subset(y).ok() != Some(ta.is_subset(tb)) {
                return Err(format!("inclusion of {x} in {y}"));
            }
        }
    }
    Ok(())
}
