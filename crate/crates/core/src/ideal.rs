//! Normalized ideals of a numerical semigroup, stored by Kunz coordinates.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, Violation};
use crate::kunz::{self, KunzVector};
use crate::semigroup::NumericalSemigroup;

/// An ideal `I` of `S` with `min(I) = 0`, i.e. `I + S = I` and `0 ∈ I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalizedIdeal {
    ambient: Arc<NumericalSemigroup>,
    kunz: KunzVector,
}

/// First constraint `v` violates as an ideal of the semigroup with Kunz
/// vector `ambient`. Both slices must have the same length.
pub(crate) fn first_violation(ambient: &[u32], v: &[u32]) -> Option<Violation> {
    let multiplicity = ambient.len() as u32 + 1;
    if let Some(k) = v.iter().zip(ambient).position(|(x, k)| x > k) {
        return Some(Violation::ExceedsAmbient {
            coordinate: k + 1,
            multiplicity,
        });
    }
    let mut closed = alloc::vec![0; v.len()];
    kunz::sum_into(v, ambient, &mut closed);
    closed
        .iter()
        .zip(v)
        .position(|(z, x)| z != x)
        .map(|k| Violation::NotClosed {
            coordinate: k + 1,
            multiplicity,
        })
}

impl NormalizedIdeal {
    /// Validates `kunz` as an ideal of `ambient`: `S ⊆ I` and `I + S = I`.
    pub fn from_kunz(ambient: Arc<NumericalSemigroup>, kunz: KunzVector) -> Result<Self> {
        let k = ambient.kunz();
        if k.len() != kunz.len() {
            return Err(Error::LengthMismatch(kunz.len(), k.len()));
        }
        if let Some(v) = first_violation(k.entries(), kunz.entries()) {
            return Err(Error::NotAnIdeal(v));
        }
        Ok(NormalizedIdeal { ambient, kunz })
    }

    pub(crate) fn new_unchecked(ambient: Arc<NumericalSemigroup>, kunz: KunzVector) -> Self {
        debug_assert!(first_violation(ambient.kunz().entries(), kunz.entries()).is_none());
        NormalizedIdeal { ambient, kunz }
    }

    /// `X + S` for a finite set `X` of non-negative integers containing 0.
    pub fn from_generator_set(ambient: Arc<NumericalSemigroup>, xs: &[i64]) -> Result<Self> {
        if !xs.contains(&0) || xs.iter().any(|&x| x < 0) {
            return Err(Error::NotNormalized);
        }
        let apery = ambient.apery_set();
        let m = apery.len() as i64;
        let kunz = (1..m)
            .map(|i| {
                let w = xs
                    .iter()
                    .map(|&x| x + apery[(i - x).rem_euclid(m) as usize] as i64)
                    .min()
                    .unwrap();
                ((w - i) / m) as u32
            })
            .collect::<Vec<_>>();
        Ok(Self::new_unchecked(ambient, KunzVector::new(kunz)))
    }

    /// The ambient semigroup as an ideal of itself.
    pub fn semigroup(ambient: Arc<NumericalSemigroup>) -> Self {
        let kunz = ambient.kunz().clone();
        NormalizedIdeal { ambient, kunz }
    }

    /// ℕ as an ideal of `ambient`.
    pub fn naturals(ambient: Arc<NumericalSemigroup>) -> Self {
        let kunz = KunzVector::zero(ambient.multiplicity());
        NormalizedIdeal { ambient, kunz }
    }

    pub fn ambient(&self) -> &Arc<NumericalSemigroup> {
        &self.ambient
    }

    pub fn kunz(&self) -> &KunzVector {
        &self.kunz
    }

    pub fn into_kunz(self) -> KunzVector {
        self.kunz
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    fn with_kunz(&self, kunz: KunzVector) -> Self {
        Self::new_unchecked(self.ambient.clone(), kunz)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(self.with_kunz(self.kunz.sum(&other.kunz)?))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(self.with_kunz(self.kunz.union(&other.kunz)?))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Ok(self.with_kunz(self.kunz.intersection(&other.kunz)?))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_ambient(other)?;
        self.kunz.is_subset(&other.kunz)
    }

    pub fn contains(&self, n: i64) -> bool {
        self.kunz.contains(n)
    }

    /// `|ℕ ∖ I|`.
    pub fn gap_count(&self) -> u64 {
        self.kunz.gap_count()
    }

    pub fn is_naturals(&self) -> bool {
        self.kunz.is_zero()
    }

    /// `I + I = I`; exactly the ideals that are oversemigroups of `S`.
    pub fn is_idempotent(&self) -> bool {
        match *self.kunz.entries() {
            [a, b] => !(2 * b + 1 < a) && !(2 * a < b),
            _ => self.kunz.sum(&self.kunz).expect("same length") == self.kunz,
        }
    }

    /// The ideal as a numerical semigroup, when it is idempotent.
    pub fn as_semigroup(&self) -> Option<NumericalSemigroup> {
        if self.is_idempotent() {
            Some(NumericalSemigroup::from_kunz(&self.kunz).expect("idempotent ideal"))
        } else {
            None
        }
    }

    /// `Minimals_{≤_S}(I)`, in increasing order. Always contains 0.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let ap: Vec<i64> = self.kunz.apery_set().iter().map(|&w| w as i64).collect();
        let mut out: Vec<i64> = ap
            .iter()
            .enumerate()
            .filter(|&(i, &w)| {
                ap.iter()
                    .enumerate()
                    .all(|(j, &v)| j == i || !self.ambient.contains(w - v))
            })
            .map(|(_, &w)| w)
            .collect();
        out.sort_unstable();
        out
    }

    /// `max(ℤ ∖ I)`.
    pub fn max_gap(&self) -> Result<i64> {
        self.kunz.max_gap().ok_or(Error::FullSet)
    }
}

impl fmt::Display for NormalizedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_K", self.kunz)
    }
}
