//! The poset `(𝔍₀(S), ⪯)` of normalized ideals, where `I ⪯ J` iff
//! `I + K = J` for some normalized ideal `K`.
//!
//! Ideals are indexed by gap count descending and then by Kunz coordinates,
//! so index 0 is `S`, the last index is ℕ, and every strict `⪯` (or `⊆`)
//! step goes to a larger index.

mod abstract_poset;

pub use abstract_poset::AbstractPoset;

use alloc::sync::Arc;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::{first_violation, NormalizedIdeal};
use crate::kunz::{self, KunzVector};
use crate::semigroup::{for_each_below, NumericalSemigroup};

/// Dense lookup from Kunz vectors inside the box `0 ≤ v ≤ k(S)` to indices.
#[derive(Clone, Debug)]
struct IndexTable {
    bound: Vec<u32>,
    strides: Vec<usize>,
    slots: Vec<u32>,
}

impl IndexTable {
    const EMPTY: u32 = u32::MAX;

    fn new(bound: &[u32]) -> Self {
        let mut strides = alloc::vec![0; bound.len()];
        let mut size = 1usize;
        for k in (0..bound.len()).rev() {
            strides[k] = size;
            size = size
                .checked_mul(bound[k] as usize + 1)
                .expect("Kunz box too large to index");
        }
        IndexTable {
            bound: bound.to_vec(),
            strides,
            slots: alloc::vec![Self::EMPTY; size],
        }
    }

    #[inline]
    fn key(&self, v: &[u32]) -> usize {
        v.iter().zip(&self.strides).map(|(&x, &s)| x as usize * s).sum()
    }

    fn get(&self, v: &[u32]) -> Option<usize> {
        if v.len() != self.bound.len() || v.iter().zip(&self.bound).any(|(x, b)| x > b) {
            return None;
        }
        match self.slots[self.key(v)] {
            Self::EMPTY => None,
            i => Some(i as usize),
        }
    }
}

/// `𝔍₀(S)` enumerated and indexed, with no order relations computed yet.
#[derive(Clone, Debug)]
pub struct IdealSet {
    ambient: Arc<NumericalSemigroup>,
    ideals: Vec<NormalizedIdeal>,
    table: IndexTable,
}

impl IdealSet {
    /// Enumerates every normalized ideal of `S`.
    ///
    /// For multiplicity 3 with `S = (u, v)` the candidates are the pairs
    /// `x ≤ u, y ≤ v` with `x + u ≥ y` and `y + v + 1 ≥ x`; otherwise every
    /// `v ≤ k(S)` passing `v + S = v` is kept.
    pub fn enumerate(ambient: impl Into<Arc<NumericalSemigroup>>) -> Self {
        let ambient = ambient.into();
        let bound = ambient.kunz().entries().to_vec();
        let mut found: Vec<KunzVector> = Vec::new();
        if let [u, v] = bound[..] {
            for x in 0..=u {
                for y in 0..=v {
                    if x + u >= y && y + v + 1 >= x {
                        found.push(KunzVector::new(alloc::vec![x, y]));
                    }
                }
            }
        } else {
            for_each_below(&bound, |v| {
                if first_violation(&bound, v).is_none() {
                    found.push(KunzVector::new(v.to_vec()));
                }
            });
        }
        found.sort_by(|a, b| b.gap_count().cmp(&a.gap_count()).then_with(|| a.cmp(b)));

        let mut table = IndexTable::new(&bound);
        for (i, v) in found.iter().enumerate() {
            let key = table.key(v.entries());
            table.slots[key] = i as u32;
        }
        let ideals = found
            .into_iter()
            .map(|v| NormalizedIdeal::new_unchecked(ambient.clone(), v))
            .collect();
        IdealSet {
            ambient,
            ideals,
            table,
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[NormalizedIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &NormalizedIdeal {
        &self.ideals[i]
    }

    pub fn index_of(&self, v: &KunzVector) -> Option<usize> {
        self.table.get(v.entries())
    }

    fn kunz(&self, i: usize) -> &[u32] {
        self.ideals[i].kunz().entries()
    }

    /// Index of `I_i + I_j`.
    pub fn sum_index(&self, i: usize, j: usize) -> usize {
        let mut out = alloc::vec![0; self.ambient.kunz().len()];
        kunz::sum_into(self.kunz(i), self.kunz(j), &mut out);
        self.table.get(&out).expect("sum of ideals is an ideal")
    }

    /// Rows of the `⪯` relation by exhaustive search: `I_i ⪯ I_i + I_k` for
    /// every `k`, and nothing else.
    pub fn preceq_rows(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut rows = alloc::vec![FixedBitSet::with_capacity(n); n];
        let mut out = alloc::vec![0; self.ambient.kunz().len()];
        for i in 0..n {
            for k in i..n {
                kunz::sum_into(self.kunz(i), self.kunz(k), &mut out);
                let j = self.table.get(&out).expect("sum of ideals is an ideal");
                rows[i].insert(j);
                rows[k].insert(j);
            }
        }
        rows
    }

    /// Rows of the `⊆` relation.
    pub fn subseteq_rows(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in i..n {
                    if kunz::is_subset(self.kunz(i), self.kunz(j)) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect()
    }

    /// `true` iff `⊆` and `⪯` are the same relation on `𝔍₀(S)`.
    ///
    /// Every `K` with `I + K = J` lies inside the residual `J − I`, so
    /// `I ⪯ J` iff `I + (J − I) = J`. This stops at the first pair with
    /// `I ⊆ J` but not `I ⪯ J`.
    pub fn orders_coincide(&self) -> bool {
        let len = self.ambient.kunz().len();
        let mut res = alloc::vec![0; len];
        let mut sum = alloc::vec![0; len];
        (0..self.len()).all(|i| {
            (i + 1..self.len()).all(|j| {
                let (a, b) = (self.kunz(i), self.kunz(j));
                if !kunz::is_subset(a, b) {
                    return true;
                }
                kunz::residual_into(a, b, &mut res);
                kunz::sum_into(a, &res, &mut sum);
                sum == b
            })
        })
    }

    /// Up-sets for multiplicity 3 computed by climbing unique covers: a
    /// non-idempotent `I` has `↑I = {I} ∪ ↑I^c`, and an oversemigroup `T`
    /// has `↑T = {J : J + T = J}`.
    pub fn preceq_rows_by_cover_ascent(&self) -> Result<Vec<FixedBitSet>> {
        let m = self.ambient.multiplicity();
        if m != 3 {
            return Err(Error::WrongMultiplicity(m));
        }
        let n = self.len();
        let mut rows = alloc::vec![FixedBitSet::with_capacity(n); n];
        for i in (0..n).rev() {
            let ideal = &self.ideals[i];
            match unique_cover(ideal) {
                Ok(cover) => {
                    let c = self.index_of(cover.kunz()).expect("cover is an ideal");
                    let mut row = rows[c].clone();
                    row.insert(i);
                    rows[i] = row;
                }
                Err(Error::IdempotentInput) => {
                    for j in i..n {
                        if self.sum_index(j, i) == j {
                            rows[i].insert(j);
                        }
                    }
                }
                Err(e) => return Err(e),
            }
        }
        Ok(rows)
    }

    /// Computes `⪯` (by exhaustive search), `⊆`, the Hasse diagram and the
    /// depths.
    pub fn into_poset(self) -> IdealPoset {
        let up = self.preceq_rows();
        IdealPoset::from_parts(self, up)
    }
}

/// Unique cover `I^c` of a non-idempotent ideal of a multiplicity-3
/// semigroup: `(a−1, b)` when `2b + 1 < a`, and `(a, b−1)` when `2a < b`.
pub fn unique_cover(ideal: &NormalizedIdeal) -> Result<NormalizedIdeal> {
    let m = ideal.ambient().multiplicity();
    if m != 3 {
        return Err(Error::WrongMultiplicity(m));
    }
    let [a, b] = *ideal.kunz().entries() else {
        unreachable!("multiplicity 3 has two coordinates")
    };
    let cover = if 2 * b + 1 < a {
        [a - 1, b]
    } else if 2 * a < b {
        [a, b - 1]
    } else {
        return Err(Error::IdempotentInput);
    };
    NormalizedIdeal::from_kunz(ideal.ambient().clone(), cover.into())
}

/// `(𝔍₀(S), ⪯)` with its relations, Hasse diagram and depths.
#[derive(Clone, Debug)]
pub struct IdealPoset {
    set: IdealSet,
    idempotent: Vec<bool>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    subseteq: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    depth: Vec<u32>,
}

impl IdealPoset {
    /// Enumerates `𝔍₀(S)` and builds every relation.
    pub fn new(ambient: impl Into<Arc<NumericalSemigroup>>) -> Self {
        IdealSet::enumerate(ambient).into_poset()
    }

    /// Builds the poset from precomputed `⪯` rows (for instance the
    /// cover-ascent route).
    pub fn from_parts(set: IdealSet, up: Vec<FixedBitSet>) -> Self {
        let n = set.len();
        assert_eq!(up.len(), n);
        let mut down = alloc::vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        // j covers i iff the interval [i, j] is exactly {i, j}.
        let upper_covers: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                up[i]
                    .ones()
                    .filter(|&j| j != i && up[i].intersection_count(&down[j]) == 2)
                    .collect()
            })
            .collect();
        let mut depth = alloc::vec![0u32; n];
        for i in (0..n).rev() {
            depth[i] = upper_covers[i]
                .iter()
                .map(|&j| depth[j] + 1)
                .max()
                .unwrap_or(0);
        }
        let idempotent = set.ideals.iter().map(NormalizedIdeal::is_idempotent).collect();
        let subseteq = set.subseteq_rows();
        IdealPoset {
            set,
            idempotent,
            up,
            down,
            subseteq,
            upper_covers,
            depth,
        }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        self.set.ambient()
    }

    pub fn ideal_set(&self) -> &IdealSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn ideals(&self) -> &[NormalizedIdeal] {
        self.set.ideals()
    }

    pub fn ideal(&self, i: usize) -> &NormalizedIdeal {
        self.set.ideal(i)
    }

    pub fn index_of(&self, v: &KunzVector) -> Option<usize> {
        self.set.index_of(v)
    }

    /// Index of `S`.
    pub fn minimum(&self) -> usize {
        0
    }

    /// Index of ℕ.
    pub fn maximum(&self) -> usize {
        self.len() - 1
    }

    pub fn idempotent_mask(&self) -> &[bool] {
        &self.idempotent
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.idempotent[i]
    }

    pub fn preceq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn subseteq(&self, i: usize, j: usize) -> bool {
        self.subseteq[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.preceq(i, j) || self.preceq(j, i)
    }

    pub fn preceq_rows(&self) -> &[FixedBitSet] {
        &self.up
    }

    pub fn subseteq_rows(&self) -> &[FixedBitSet] {
        &self.subseteq
    }

    pub fn orders_coincide(&self) -> bool {
        self.up == self.subseteq
    }

    /// Hasse edges `(lower, upper)` in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.upper_covers
            .iter()
            .enumerate()
            .flat_map(|(i, cs)| cs.iter().map(move |&j| (i, j)))
            .collect()
    }

    /// Ideals covering `I_i`.
    pub fn covers_of(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Hasse edges of `(𝔍₀(S), ⊆)`.
    pub fn subseteq_covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut below = alloc::vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in self.subseteq.iter().enumerate() {
            for j in row.ones() {
                below[j].insert(i);
            }
        }
        (0..n)
            .flat_map(|i| {
                let below = &below;
                self.subseteq[i]
                    .ones()
                    .filter(move |&j| j != i && self.subseteq[i].intersection_count(&below[j]) == 2)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Covers of `S`.
    pub fn quarks(&self) -> &[usize] {
        self.covers_of(self.minimum())
    }

    /// Length of the longest `⪯`-chain from `I_i` up to ℕ.
    pub fn depth(&self, i: usize) -> u32 {
        self.depth[i]
    }

    pub fn depths(&self) -> &[u32] {
        &self.depth
    }

    pub fn up_set(&self, i: usize) -> Vec<usize> {
        self.up[i].ones().collect()
    }

    pub fn down_set(&self, i: usize) -> Vec<usize> {
        self.down[i].ones().collect()
    }

    /// Least upper bound of `{I_i, I_j}` by inspecting the relation.
    pub fn lub(&self, i: usize, j: usize) -> Option<usize> {
        let mut bounds = self.up[i].clone();
        bounds.intersect_with(&self.up[j]);
        let candidate = bounds.minimum()?;
        bounds.is_subset(&self.up[candidate]).then_some(candidate)
    }

    /// Greatest lower bound of `{I_i, I_j}` by inspecting the relation.
    pub fn glb(&self, i: usize, j: usize) -> Option<usize> {
        let mut bounds = self.down[i].clone();
        bounds.intersect_with(&self.down[j]);
        let candidate = bounds.maximum()?;
        bounds.is_subset(&self.down[candidate]).then_some(candidate)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(i))
        }
    }

    /// Join. For multiplicity at most 3 this is `I ∪ J` when the ideals are
    /// comparable and `I + J` otherwise; larger multiplicities fall back to
    /// [`lub`](Self::lub).
    pub fn join(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        if self.ambient().multiplicity() > 3 {
            return self.lub(i, j).ok_or(Error::NotALattice(i, j));
        }
        let (a, b) = (self.ideal(i), self.ideal(j));
        let joined = if self.comparable(i, j) {
            a.union(b)?
        } else {
            a.sum(b)?
        };
        Ok(self.index_of(joined.kunz()).expect("join is an ideal"))
    }

    /// Meet. For multiplicity at most 3 this is `I ∩ J` when comparable and
    /// the join of all common lower bounds otherwise; larger multiplicities
    /// fall back to [`glb`](Self::glb).
    pub fn meet(&self, i: usize, j: usize) -> Result<usize> {
        self.check_index(i)?;
        self.check_index(j)?;
        if self.ambient().multiplicity() > 3 {
            return self.glb(i, j).ok_or(Error::NotALattice(i, j));
        }
        if self.comparable(i, j) {
            let met = self.ideal(i).intersection(self.ideal(j))?;
            return Ok(self.index_of(met.kunz()).expect("meet is an ideal"));
        }
        let mut common = self.down[i].clone();
        common.intersect_with(&self.down[j]);
        common
            .ones()
            .try_fold(self.minimum(), |acc, k| self.join(acc, k))
    }

    /// `Ok(())` if every pair has a least upper and a greatest lower bound,
    /// otherwise the first offending pair.
    pub fn is_lattice(&self) -> core::result::Result<(), (usize, usize)> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.lub(i, j).is_none() || self.glb(i, j).is_none() {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// The Hasse diagram with labels dropped.
    pub fn to_abstract(&self) -> AbstractPoset {
        AbstractPoset::new(self.len(), self.covers()).expect("Hasse diagram of a finite poset")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn sg(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn kunz_list(p: &IdealPoset, idx: &[usize]) -> BTreeSet<KunzVector> {
        idx.iter().map(|&i| p.ideal(i).kunz().clone()).collect()
    }

    fn set_of<const N: usize>(vs: &[[u32; N]]) -> BTreeSet<KunzVector> {
        vs.iter().map(|&v| KunzVector::from(v)).collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(IdealSet::enumerate(sg(&[1])).len(), 1);
        let two = IdealSet::enumerate(sg(&[2, 3]));
        assert_eq!(two.len(), 2);
        let four = IdealSet::enumerate(sg(&[3, 4, 5]));
        let ks: Vec<_> = four.ideals().iter().map(|i| i.kunz().clone()).collect();
        assert_eq!(
            ks,
            [[1, 1].into(), [0, 1].into(), [1, 0].into(), KunzVector::from([0, 0])]
        );
        assert_eq!(IdealSet::enumerate(sg(&[3, 13, 17])).len(), 29);
    }

    /// Brute force: every subset of gaps whose union with S is S-closed.
    fn ideal_count_by_gap_subsets(s: &NumericalSemigroup) -> usize {
        let gaps = s.gaps();
        let f = s.frobenius();
        (0u32..1 << gaps.len())
            .filter(|mask| {
                let inside = |n: i64| {
                    n > f
                        || s.contains(n)
                        || gaps.iter().enumerate().any(|(k, &g)| g == n && mask >> k & 1 == 1)
                };
                (0..=f).filter(|&a| inside(a)).all(|a| {
                    s.minimal_generators().iter().all(|&g| inside(a + g as i64))
                })
            })
            .count()
    }

    #[test]
    fn enumeration_matches_gap_subsets() {
        for s in NumericalSemigroup::all_up_to_genus(7) {
            let expected = ideal_count_by_gap_subsets(&s);
            assert_eq!(IdealSet::enumerate(s.clone()).len(), expected, "{s}");
        }
    }

    #[test]
    fn ordering_puts_s_first_and_naturals_last() {
        let p = IdealSet::enumerate(sg(&[4, 7, 9, 10]));
        assert_eq!(p.ideal(0).kunz(), p.ambient().kunz());
        assert!(p.ideal(p.len() - 1).is_naturals());
        for w in p.ideals().windows(2) {
            assert!(w[0].gap_count() >= w[1].gap_count());
        }
    }

    #[test]
    fn index_lookup() {
        let p = IdealSet::enumerate(sg(&[3, 13, 17]));
        for (i, ideal) in p.ideals().iter().enumerate() {
            assert_eq!(p.index_of(ideal.kunz()), Some(i));
        }
        assert_eq!(p.index_of(&[0, 5].into()), None);
        assert_eq!(p.index_of(&[5, 0].into()), None);
        assert_eq!(p.index_of(&[0, 6].into()), None);
        assert_eq!(p.index_of(&[1].into()), None);
    }

    #[test]
    fn subset_not_preceq_examples() {
        let s = Arc::new(sg(&[4, 5, 6, 7]));
        let p = IdealPoset::new(s.clone());
        let a = NormalizedIdeal::from_generator_set(s.clone(), &[0, 2]).unwrap();
        let b = NormalizedIdeal::from_generator_set(s, &[0, 1, 2]).unwrap();
        assert_eq!(a.kunz(), &KunzVector::from([1, 0, 1]));
        assert_eq!(b.kunz(), &KunzVector::from([0, 0, 1]));
        let (i, j) = (p.index_of(a.kunz()).unwrap(), p.index_of(b.kunz()).unwrap());
        assert!(p.subseteq(i, j));
        assert!(!p.preceq(i, j));

        let s = Arc::new(sg(&[3, 7, 8]));
        assert_eq!(s.kunz(), &KunzVector::from([2, 2]));
        let p = IdealPoset::new(s.clone());
        let a = NormalizedIdeal::from_generator_set(s.clone(), &[0, 4]).unwrap();
        let b = NormalizedIdeal::from_generator_set(s, &[0, 1]).unwrap();
        let (i, j) = (p.index_of(a.kunz()).unwrap(), p.index_of(b.kunz()).unwrap());
        assert!(p.subseteq(i, j));
        assert!(!p.preceq(i, j));
        assert!(p.is_lattice().is_ok());
    }

    #[test]
    fn s_precedes_everything() {
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        assert_eq!(p.up_set(0), (0..p.len()).collect::<Vec<_>>());
        assert_eq!(p.down_set(0), [0]);
        assert_eq!(p.covers_of(p.maximum()), [] as [usize; 0]);
    }

    #[test]
    fn relation_is_a_partial_order_inside_inclusion() {
        for gens in [&[3u64, 13, 17][..], &[4, 5, 6, 7], &[4, 7, 9, 10], &[5, 6, 7]] {
            let p = IdealPoset::new(sg(gens));
            let n = p.len();
            for i in 0..n {
                assert!(p.preceq(i, i));
                for j in 0..n {
                    if p.preceq(i, j) {
                        assert!(p.subseteq(i, j));
                        if i != j {
                            assert!(!p.preceq(j, i));
                        }
                        for k in 0..n {
                            if p.preceq(j, k) {
                                assert!(p.preceq(i, k));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unique_cover_examples() {
        let s = Arc::new(sg(&[3, 13, 17]));
        let i = NormalizedIdeal::from_kunz(s.clone(), [4, 0].into()).unwrap();
        assert_eq!(unique_cover(&i).unwrap().kunz(), &KunzVector::from([3, 0]));
        assert!(NormalizedIdeal::from_kunz(s.clone(), [0, 5].into()).is_err());
        let i = NormalizedIdeal::from_kunz(s.clone(), [0, 4].into()).unwrap();
        assert_eq!(unique_cover(&i).unwrap().kunz(), &KunzVector::from([0, 3]));
        let i = NormalizedIdeal::from_kunz(s.clone(), [1, 1].into()).unwrap();
        assert_eq!(unique_cover(&i), Err(Error::IdempotentInput));
        let t = Arc::new(sg(&[4, 5, 6, 7]));
        let i = NormalizedIdeal::naturals(t);
        assert_eq!(unique_cover(&i), Err(Error::WrongMultiplicity(4)));
    }

    #[test]
    fn case_two_cover_with_larger_ambient() {
        // (0,5) is an ideal once u ≥ 5.
        let s = Arc::new(NumericalSemigroup::from_kunz(&[5, 5].into()).unwrap());
        let i = NormalizedIdeal::from_kunz(s, [0, 5].into()).unwrap();
        assert_eq!(unique_cover(&i).unwrap().kunz(), &KunzVector::from([0, 4]));
    }

    #[test]
    fn covers_examples() {
        let p = IdealPoset::new(sg(&[4, 7, 9, 10]));
        let i = p.index_of(&[2, 2, 0].into()).unwrap();
        assert_eq!(
            kunz_list(&p, p.covers_of(i)),
            set_of(&[[1, 2, 0], [2, 1, 0], [0, 2, 0]])
        );
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        let i = p.index_of(&[4, 0].into()).unwrap();
        assert_eq!(kunz_list(&p, p.covers_of(i)), set_of(&[[3, 0]]));
    }

    #[test]
    fn quark_examples() {
        let p = IdealPoset::new(sg(&[3, 4]));
        assert_eq!(kunz_list(&p, p.quarks()), set_of(&[[1, 1]]));
        let s = Arc::new(sg(&[3, 5, 7]));
        let p = IdealPoset::new(s.clone());
        let expected: BTreeSet<KunzVector> = [&[0i64, 4][..], &[0, 2]]
            .iter()
            .map(|x| NormalizedIdeal::from_generator_set(s.clone(), x).unwrap().into_kunz())
            .collect();
        assert_eq!(kunz_list(&p, p.quarks()), expected);
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        assert_eq!(kunz_list(&p, p.quarks()), set_of(&[[3, 5], [4, 4], [1, 5]]));
    }

    #[test]
    fn depth_examples() {
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        assert_eq!(p.depth(p.maximum()), 0);
        assert_eq!(p.depth(0), 9);
        assert_eq!(p.depth(p.index_of(&[1, 5].into()).unwrap()), 6);
    }

    #[test]
    fn join_meet_examples() {
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        for j in 0..p.len() {
            assert_eq!(p.join(0, j), Ok(j));
            assert_eq!(p.meet(j, p.maximum()), Ok(j));
        }
        let a = p.index_of(&[4, 0].into()).unwrap();
        let b = p.index_of(&[0, 4].into()).unwrap();
        assert!(!p.comparable(a, b));
        assert_eq!(p.join(a, b), Ok(p.maximum()));
        assert_eq!(p.join(0, p.len()), Err(Error::IndexOutOfRange(p.len())));
    }

    #[test]
    fn multiplicity_four_uses_brute_force_bounds() {
        let p = IdealPoset::new(sg(&[4, 5, 6, 7]));
        for i in 0..p.len() {
            for j in 0..p.len() {
                assert_eq!(p.join(i, j).ok(), p.lub(i, j));
                assert_eq!(p.meet(i, j).ok(), p.glb(i, j));
            }
        }
    }

    #[test]
    fn chain_for_small_multiplicity() {
        for gens in [&[2u64, 3][..], &[2, 9], &[2, 25], &[1]] {
            let p = IdealPoset::new(sg(gens));
            assert_eq!(p.len() as u64, p.ambient().genus() + 1);
            let expected: Vec<(usize, usize)> = (1..p.len()).map(|j| (j - 1, j)).collect();
            assert_eq!(p.covers(), expected);
        }
    }

    #[test]
    fn cover_ascent_matches_brute_force() {
        for (u, v) in [(4u32, 5u32), (1, 1), (1, 2), (2, 1), (2, 2), (5, 3), (6, 6), (3, 6)] {
            let set = IdealSet::enumerate(NumericalSemigroup::from_kunz(&[u, v].into()).unwrap());
            assert_eq!(set.preceq_rows_by_cover_ascent().unwrap(), set.preceq_rows());
        }
        let set = IdealSet::enumerate(sg(&[4, 5, 6, 7]));
        assert_eq!(set.preceq_rows_by_cover_ascent(), Err(Error::WrongMultiplicity(4)));
    }

    #[test]
    fn hasse_counts_for_3_13_17() {
        // Frozen from an explicit-set computation of the whole relation.
        let p = IdealPoset::new(sg(&[3, 13, 17]));
        assert_eq!(p.len(), 29);
        assert_eq!(p.covers().len(), 47);
    }

    #[test]
    fn subseteq_hasse_of_naturals_chain() {
        let p = IdealPoset::new(sg(&[3, 4, 5]));
        assert_eq!(p.subseteq_covers().len(), 4);
        assert_eq!(p.covers().len(), 4);
    }

    #[test]
    fn residual_coincidence_matches_matrices() {
        for s in NumericalSemigroup::all_up_to_genus(7) {
            let set = IdealSet::enumerate(s);
            assert_eq!(
                set.orders_coincide(),
                set.preceq_rows() == set.subseteq_rows(),
                "{}",
                set.ambient()
            );
        }
    }

    #[test]
    fn residual_is_largest_complement() {
        // J − I computed by brute force over the ideals: the union of all K
        // with I + K ⊆ J.
        let set = IdealSet::enumerate(sg(&[4, 6, 9, 11]));
        let len = set.ambient().kunz().len();
        let mut res = alloc::vec![0; len];
        let mut sum = alloc::vec![0; len];
        for i in 0..set.len() {
            for j in 0..set.len() {
                let (a, b) = (set.kunz(i), set.kunz(j));
                if !kunz::is_subset(a, b) {
                    continue;
                }
                let mut expect = set.ambient().kunz().entries().to_vec();
                for k in 0..set.len() {
                    kunz::sum_into(a, set.kunz(k), &mut sum);
                    if kunz::is_subset(&sum, b) {
                        for (e, &x) in expect.iter_mut().zip(set.kunz(k)) {
                            *e = (*e).min(x);
                        }
                    }
                }
                kunz::residual_into(a, b, &mut res);
                assert_eq!(res, expect);
            }
        }
    }
}
