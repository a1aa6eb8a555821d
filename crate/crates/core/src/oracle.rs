//! Explicit finite truncations of staircase sets.
//!
//! Everything here works on plain membership vectors and never uses the
//! Kunz-coordinate formulas, so it serves as the reference the closed forms
//! are checked against.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::kunz::KunzVector;

/// A finite truncation `A ∩ [0, bound]` of a set `A ⊆ ℕ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    members: Vec<bool>,
}

/// Smallest bound for which [`staircase_set`] accepts `v`.
pub fn safe_bound(v: &KunzVector) -> u64 {
    let max = v.entries().iter().copied().max().unwrap_or(0);
    u64::from(v.multiplicity()) * (1 + u64::from(max))
}

/// Smallest bound that keeps every Apéry element of a binary operation on
/// `a` and `b` inside the truncation.
pub fn binary_bound(a: &KunzVector, b: &KunzVector) -> u64 {
    let max = a.entries().iter().chain(b.entries()).copied().max().unwrap_or(0);
    u64::from(a.multiplicity()) * (u64::from(max) + 2)
}

/// `{n ∈ [0, bound] : n = q·m + i with q ≥ x_i}`.
pub fn staircase_set(v: &KunzVector, bound: u64) -> Result<Truncation> {
    let required = safe_bound(v);
    if bound < required {
        return Err(Error::BoundTooSmall { bound, required });
    }
    let m = u64::from(v.multiplicity());
    let members = (0..=bound)
        .map(|n| {
            let class = (n % m) as usize;
            let x = if class == 0 { 0 } else { v.entries()[class - 1] };
            n / m >= u64::from(x)
        })
        .collect();
    Ok(Truncation { members })
}

impl Truncation {
    pub fn from_members(bound: u64, members: impl IntoIterator<Item = u64>) -> Self {
        let mut v = alloc::vec![false; bound as usize + 1];
        for n in members {
            if n <= bound {
                v[n as usize] = true;
            }
        }
        Truncation { members: v }
    }

    pub fn bound(&self) -> u64 {
        self.members.len() as u64 - 1
    }

    pub fn contains(&self, n: u64) -> bool {
        self.members.get(n as usize).copied().unwrap_or(false)
    }

    /// Members in increasing order.
    pub fn elements(&self) -> Vec<u64> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(n, _)| n as u64)
            .collect()
    }

    /// Number of non-members in `[0, bound]`.
    pub fn missing(&self) -> usize {
        self.members.iter().filter(|&&b| !b).count()
    }

    /// `(A + B) ∩ [0, bound]`, exact because both operands are subsets of ℕ.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let bound = self.members.len().min(other.members.len());
        let mut out = alloc::vec![false; bound];
        let a = self.elements();
        let b = other.elements();
        for &x in &a {
            for &y in &b {
                let s = (x + y) as usize;
                if s < bound {
                    out[s] = true;
                }
            }
        }
        Truncation { members: out }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        Truncation {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Reads the Kunz coordinates back: the first member of each class.
    /// `None` when some class has no member below the bound.
    pub fn kunz(&self, multiplicity: u32) -> Option<KunzVector> {
        let m = multiplicity as usize;
        (1..m)
            .map(|i| {
                (i..self.members.len())
                    .step_by(m)
                    .find(|&n| self.members[n])
                    .map(|n| ((n - i) / m) as u32)
            })
            .collect::<Option<Vec<_>>>()
            .map(KunzVector::new)
    }
}
