//! Kunz vectors and the closed-form set operations on the staircase sets
//! they encode.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Kunz coordinates `(x_1, …, x_{m-1})` of a normalized staircase set.
///
/// The vector encodes `{q·m + i : 0 ≤ i < m, q ≥ x_i}` with `x_0 = 0`, so its
/// multiplicity `m` is the length plus one. The empty vector is ℕ with
/// `m = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KunzVector(Vec<u32>);

impl KunzVector {
    pub fn new(entries: Vec<u32>) -> Self {
        KunzVector(entries)
    }

    /// All-zero vector, i.e. ℕ written with modulus `multiplicity`.
    pub fn zero(multiplicity: u32) -> Self {
        assert!(multiplicity >= 1, "multiplicity must be positive");
        KunzVector(alloc::vec![0; multiplicity as usize - 1])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self) -> u32 {
        self.0.len() as u32 + 1
    }

    /// Threshold of residue class `i`, with class 0 always at 0.
    #[inline]
    pub fn threshold(&self, class: usize) -> u32 {
        if class == 0 {
            0
        } else {
            self.0[class - 1]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Membership: `q·m + i` belongs to the set iff `x_i ≤ q`.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = i64::from(self.multiplicity());
        let (q, i) = (n / m, (n % m) as usize);
        q >= i64::from(self.threshold(i))
    }

    /// Number of non-negative integers outside the set, `x_1 + … + x_{m-1}`.
    pub fn gap_count(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// Apéry set `w_i = m·x_i + i`, index 0 included.
    pub fn apery_set(&self) -> Vec<u64> {
        let m = u64::from(self.multiplicity());
        (0..m as usize)
            .map(|i| m * u64::from(self.threshold(i)) + i as u64)
            .collect()
    }

    /// Largest integer not in the set, or `None` for ℕ.
    pub fn max_gap(&self) -> Option<i64> {
        let m = i64::from(self.multiplicity());
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x >= 1)
            .map(|(k, &x)| m * (i64::from(x) - 1) + k as i64 + 1)
            .max()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch(self.len(), other.len()))
        }
    }

    /// Minkowski sum of the two staircase sets.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = alloc::vec![0; self.len()];
        sum_into(&self.0, &other.0, &mut out);
        Ok(KunzVector(out))
    }

    /// Union: entrywise minimum.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(KunzVector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect(),
        ))
    }

    /// Intersection: entrywise maximum.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(KunzVector(
            self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect(),
        ))
    }

    /// `true` iff the set of `self` is contained in the set of `other`,
    /// which holds iff `other ≤ self` entrywise.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(is_subset(&self.0, &other.0))
    }
}

#[inline]
pub(crate) fn is_subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| y <= x)
}

/// `z_i = min { x_{i1} + y_{i2} + ⌊(i1 + i2)/m⌋ : i1 + i2 ≡ i (mod m) }` with
/// `x_0 = y_0 = 0` taking part in the minimum.
#[inline]
pub(crate) fn sum_into(a: &[u32], b: &[u32], out: &mut [u32]) {
    let m = a.len() + 1;
    let at = |v: &[u32], k: usize| if k == 0 { 0 } else { v[k - 1] };
    for i in 1..m {
        // i1 = 0 and i1 = i give y_i and x_i with no carry.
        let mut best = a[i - 1].min(b[i - 1]);
        for i1 in 1..m {
            if i1 == i {
                continue;
            }
            let (i2, carry) = if i1 < i { (i - i1, 0) } else { (m + i - i1, 1) };
            let cand = at(a, i1) + at(b, i2) + carry;
            if cand < best {
                best = cand;
            }
        }
        out[i - 1] = best;
    }
}

/// Kunz coordinates of the residual `B − A = {z : z + A ⊆ B}`, assuming
/// `A ⊆ B` so that `0` belongs to it. The class `c` threshold is the largest
/// `y_{c+i} − x_i − ⌊(c + i)/m⌋` over all `i`, clipped at zero.
#[inline]
pub(crate) fn residual_into(a: &[u32], b: &[u32], out: &mut [u32]) {
    let m = a.len() + 1;
    let at = |v: &[u32], k: usize| if k == 0 { 0 } else { i64::from(v[k - 1]) };
    for c in 1..m {
        let mut q = 0i64;
        for i in 0..m {
            let (k, carry) = if c + i < m { (c + i, 0) } else { (c + i - m, 1) };
            q = q.max(at(b, k) - at(a, i) - carry);
        }
        out[c - 1] = q as u32;
    }
}

impl fmt::Display for KunzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for KunzVector {
    type Err = core::num::ParseIntError;

    /// Accepts `(4,5)` or `4,5`; `()` and the empty string give ℕ with `m = 1`.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(KunzVector::default());
        }
        inner
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map(KunzVector)
    }
}

impl From<Vec<u32>> for KunzVector {
    fn from(v: Vec<u32>) -> Self {
        KunzVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for KunzVector {
    fn from(v: [u32; N]) -> Self {
        KunzVector(v.to_vec())
    }
}
