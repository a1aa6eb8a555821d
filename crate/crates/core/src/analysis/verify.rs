use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{
    closed_form_quarks, in_coincidence_list, multiplicity_three_semigroups, oracle_agreement,
    quark_report_of, reconstruct,
};
use crate::error::{Error, Result};
use crate::kunz::KunzVector;
use crate::poset::{unique_cover, IdealPoset, IdealSet};
use crate::semigroup::{kunz_of_set, Classification, NumericalSemigroup};

/// A named invariant checked on every multiplicity-3 semigroup up to a
/// genus bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Lattice,
    Covers,
    CoverInjectivity,
    Quarks,
    Depth,
    Reconstruction,
    OrderEq,
    SumOracle,
    UpsetOversemigroup,
    UnionEqSum,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::Lattice,
        Check::Covers,
        Check::CoverInjectivity,
        Check::Quarks,
        Check::Depth,
        Check::Reconstruction,
        Check::OrderEq,
        Check::SumOracle,
        Check::UpsetOversemigroup,
        Check::UnionEqSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lattice => "lattice",
            Check::Covers => "covers",
            Check::CoverInjectivity => "cover-injectivity",
            Check::Quarks => "quarks",
            Check::Depth => "depth",
            Check::Reconstruction => "reconstruction",
            Check::OrderEq => "order-eq",
            Check::SumOracle => "sum-oracle",
            Check::UpsetOversemigroup => "upset-oversemigroup",
            Check::UnionEqSum => "union-eq-sum",
        }
    }

    /// Parses a comma-separated list such as `lattice,depth`.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        list.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheckName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub semigroup: NumericalSemigroup,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: Check,
    pub max_genus: u64,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs each check on every multiplicity-3 semigroup of genus at most
/// `max_genus`, one report per check in the order given.
pub fn verify_suite(max_genus: u64, checks: &[Check]) -> Vec<CheckReport> {
    let posets: Vec<IdealPoset> = multiplicity_three_semigroups(max_genus)
        .into_iter()
        .map(IdealPoset::new)
        .collect();
    checks
        .iter()
        .map(|&check| CheckReport {
            check,
            max_genus,
            instances: posets.len(),
            failures: posets
                .iter()
                .filter_map(|p| {
                    verify_instance(check, p).err().map(|detail| Failure {
                        semigroup: (**p.ambient()).clone(),
                        detail,
                    })
                })
                .collect(),
        })
        .collect()
}

/// Runs one check on one poset; `Err` carries the first counterexample.
pub fn verify_instance(check: Check, p: &IdealPoset) -> core::result::Result<(), String> {
    let m = p.ambient().multiplicity();
    if m != 3 && check != Check::SumOracle && check != Check::OrderEq {
        return Err(format!("multiplicity {m}, expected 3"));
    }
    match check {
        Check::Lattice => lattice(p),
        Check::Covers => covers(p),
        Check::CoverInjectivity => cover_injectivity(p),
        Check::Quarks => quarks(p),
        Check::Depth => depth(p),
        Check::Reconstruction => reconstruction(p),
        Check::OrderEq => order_eq(p),
        Check::SumOracle => oracle_agreement(p.ideal_set()),
        Check::UpsetOversemigroup => upset_oversemigroup(p),
        Check::UnionEqSum => union_eq_sum(p),
    }
}

fn kunz(p: &IdealPoset, i: usize) -> &KunzVector {
    p.ideal(i).kunz()
}

fn lattice(p: &IdealPoset) -> core::result::Result<(), String> {
    if let Err((i, j)) = p.is_lattice() {
        return Err(format!("{} and {} lack a bound", kunz(p, i), kunz(p, j)));
    }
    for i in 0..p.len() {
        for j in 0..p.len() {
            let join = p.join(i, j).map_err(|e| e.to_string())?;
            let meet = p.meet(i, j).map_err(|e| e.to_string())?;
            if Some(join) != p.lub(i, j) {
                return Err(format!("join of {} and {}", kunz(p, i), kunz(p, j)));
            }
            if Some(meet) != p.glb(i, j) {
                return Err(format!("meet of {} and {}", kunz(p, i), kunz(p, j)));
            }
            if p.is_idempotent(i) && Some(p.ideal_set().sum_index(i, j)) != p.lub(i, j) {
                return Err(format!("join of idempotent {} and {} is not the sum", kunz(p, i), kunz(p, j)));
            }
            // Folding the common lower bounds from the top gives the same meet.
            let reversed = p
                .down_set(i)
                .into_iter()
                .filter(|&k| p.preceq(k, j))
                .rev()
                .try_fold(p.minimum(), |acc, k| p.join(acc, k))
                .map_err(|e| e.to_string())?;
            if reversed != meet {
                return Err(format!("meet fold of {} and {} depends on order", kunz(p, i), kunz(p, j)));
            }
        }
    }
    Ok(())
}

fn covers(p: &IdealPoset) -> core::result::Result<(), String> {
    for i in 0..p.len() {
        let ideal = p.ideal(i);
        let v = ideal.kunz();
        let squares = ideal.sum(ideal).map_err(|e| e.to_string())? == *ideal;
        if squares != p.is_idempotent(i) {
            return Err(format!("idempotency of {v}"));
        }
        if p.is_idempotent(i) {
            continue;
        }
        let cover = unique_cover(ideal).map_err(|e| format!("{v}: {e}"))?;
        let c = p.index_of(cover.kunz()).ok_or_else(|| format!("cover of {v} missing"))?;
        if cover.gap_count() + 1 != ideal.gap_count() {
            return Err(format!("{v} and its cover {} differ by more than one gap", cover.kunz()));
        }
        if p.covers_of(i) != [c] {
            return Err(format!("{v} has covers {:?}, formula gives {}", p.covers_of(i), cover.kunz()));
        }
        // I + L = I^c + L can only fail for L ⪯ I (L = S always does).
        for (l, lideal) in p.ideals().iter().enumerate() {
            if ideal.sum(lideal) != cover.sum(lideal) && !p.preceq(l, i) {
                return Err(format!(
                    "{v} + {} differs from {} + {}",
                    lideal.kunz(),
                    cover.kunz(),
                    lideal.kunz()
                ));
            }
        }
    }
    Ok(())
}

fn cover_injectivity(p: &IdealPoset) -> core::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for i in (0..p.len()).filter(|&i| !p.is_idempotent(i)) {
        let [c] = p.covers_of(i) else {
            return Err(format!("{} has {} covers", kunz(p, i), p.covers_of(i).len()));
        };
        if !seen.insert(*c) {
            return Err(format!("{} shares its cover", kunz(p, i)));
        }
    }
    Ok(())
}

fn quarks(p: &IdealPoset) -> core::result::Result<(), String> {
    let report = quark_report_of(p);
    let g = p.ambient().genus() as u32;
    let expected = match report.classification {
        Classification::Symmetric => 1,
        Classification::PseudoSymmetric => 2,
        Classification::NonIrreducible => 3,
    };
    if report.quark_kunz.len() != expected {
        return Err(format!(
            "{} quarks for a {} semigroup",
            report.quark_kunz.len(),
            report.classification
        ));
    }
    // Non-irreducible needs SG(S) = PF(S), which rests on type <= m - 1 = 2.
    let pf = p.ambient().pseudo_frobenius().map_err(|e| e.to_string())?;
    let sg = p.ambient().special_gaps().map_err(|e| e.to_string())?;
    if pf.len() > 2 || (report.classification == Classification::NonIrreducible && pf != sg) {
        return Err(format!("PF {pf:?}, SG {sg:?}"));
    }
    let Some(closed) = closed_form_quarks(p.ambient()) else {
        return Ok(());
    };
    let found: BTreeSet<&KunzVector> = report.quark_kunz.iter().collect();
    if found != closed.iter().collect() {
        return Err(format!("quarks {:?}, formula {:?}", found, closed));
    }
    let short: Vec<u32> = report
        .quark_depths
        .iter()
        .copied()
        .filter(|&d| d + 1 < g)
        .collect();
    let long = report.quark_depths.iter().filter(|&&d| d + 1 == g).count();
    match short[..] {
        [d] if long == 2 && (g + d) % 3 != 1 => Ok(()),
        _ => Err(format!("quark depths {:?} with g = {g}", report.quark_depths)),
    }
}

fn depth(p: &IdealPoset) -> core::result::Result<(), String> {
    for i in 0..p.len() {
        let v = kunz(p, i);
        if u64::from(p.depth(i)) != v.gap_count() {
            return Err(format!("{v} has depth {}", p.depth(i)));
        }
    }
    Ok(())
}

/// A fixed scrambling of `0..n`, so reconstruction never sees the index
/// order.
fn scramble(n: usize) -> Vec<usize> {
    let mut keys: Vec<(u64, usize)> = (0..n)
        .map(|i| ((i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17), i))
        .collect();
    keys.sort_unstable();
    let mut perm = alloc::vec![0; n];
    for (new, &(_, old)) in keys.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

fn reconstruction(p: &IdealPoset) -> core::result::Result<(), String> {
    let shuffled = p
        .to_abstract()
        .relabel(&scramble(p.len()))
        .map_err(|e| e.to_string())?;
    let result = reconstruct(&shuffled).map_err(|e| e.to_string())?;
    if result.recovered != **p.ambient() {
        return Err(format!("recovered {}", result.recovered));
    }
    Ok(())
}

fn order_eq(p: &IdealPoset) -> core::result::Result<(), String> {
    let coincide = p.orders_coincide();
    if coincide != p.ideal_set().orders_coincide() {
        return Err("residual test disagrees with the relation matrices".into());
    }
    if coincide != in_coincidence_list(p.ambient()) {
        return Err(format!("orders coincide: {coincide}"));
    }
    Ok(())
}

fn upset_oversemigroup(p: &IdealPoset) -> core::result::Result<(), String> {
    let s = p.ambient();
    let m = s.multiplicity();
    let over: BTreeSet<KunzVector> = s.oversemigroups().iter().map(|t| t.kunz_modulo(m)).collect();
    let idem: BTreeSet<KunzVector> = (0..p.len())
        .filter(|&i| p.is_idempotent(i))
        .map(|i| kunz(p, i).clone())
        .collect();
    if over != idem {
        return Err("idempotent ideals differ from oversemigroups".into());
    }
    for t in (0..p.len()).filter(|&t| p.is_idempotent(t)) {
        let tv = kunz(p, t);
        for i in 0..p.len() {
            let absorbs = p.ideal_set().sum_index(i, t) == t;
            if p.subseteq(i, t) != absorbs {
                return Err(format!("{} ⊆ {tv} but the sum is not {tv}", kunz(p, i)));
            }
        }
        let up: BTreeSet<KunzVector> = p.up_set(t).into_iter().map(|i| kunz(p, i).clone()).collect();
        let semigroup = p.ideal(t).as_semigroup().expect("idempotent ideal");
        let own: BTreeSet<KunzVector> = IdealSet::enumerate(semigroup)
            .ideals()
            .iter()
            .map(|j| kunz_of_set(|n| j.contains(n), m))
            .collect();
        if up != own {
            return Err(format!("up-set of {tv} is not the ideal set of the oversemigroup"));
        }
    }
    Ok(())
}

fn union_eq_sum(p: &IdealPoset) -> core::result::Result<(), String> {
    let over: Vec<usize> = (0..p.len()).filter(|&i| p.is_idempotent(i)).collect();
    for &i in &over {
        for &j in &over {
            let (a, b) = (p.ideal(i), p.ideal(j));
            if a.sum(b) != a.union(b) {
                return Err(format!("{} + {} is not the union", a.kunz(), b.kunz()));
            }
        }
    }
    Ok(())
}
