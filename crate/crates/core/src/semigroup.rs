//! Numerical semigroups in Apéry/Kunz form.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::kunz::KunzVector;

/// A co-finite submonoid of ℕ, stored through its Apéry set with respect to
/// the multiplicity. ℕ itself has multiplicity 1, an empty Kunz vector and
/// Frobenius number −1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumericalSemigroup {
    minimal_generators: Vec<u64>,
    apery: Vec<u64>,
    kunz: KunzVector,
    frobenius: i64,
    genus: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Symmetric,
    PseudoSymmetric,
    NonIrreducible,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Symmetric => "symmetric",
            Classification::PseudoSymmetric => "pseudo-symmetric",
            Classification::NonIrreducible => "non-irreducible",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// ℕ = ⟨1⟩.
    pub fn natural() -> Self {
        Self::from_apery(alloc::vec![0])
    }

    /// The semigroup generated by `gens`, with the generating set reduced to
    /// the minimal one.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoFinite(g));
        }
        let m = *gens.iter().min().unwrap();
        let gens: BTreeSet<u64> = gens.iter().copied().filter(|&x| x != m).collect();

        // Shortest paths on residues mod m: apery[r] is the least element of
        // the monoid congruent to r.
        let mut apery = alloc::vec![u64::MAX; m as usize];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > apery[r] {
                continue;
            }
            for &g in &gens {
                let r2 = ((r as u64 + g) % m) as usize;
                let d2 = d.checked_add(g).expect("Apéry element overflow");
                if d2 < apery[r2] {
                    apery[r2] = d2;
                    heap.push(Reverse((d2, r2)));
                }
            }
        }
        debug_assert!(apery.iter().all(|&w| w != u64::MAX));
        Ok(Self::from_apery(apery))
    }

    /// The semigroup with the given Kunz coordinates. Entries may be zero, in
    /// which case the true multiplicity is smaller than `len + 1`.
    pub fn from_kunz(kunz: &KunzVector) -> Result<Self> {
        if kunz.sum(kunz)? != *kunz {
            return Err(Error::NotASemigroup(alloc::format!("{kunz}")));
        }
        let mut gens = kunz.apery_set();
        gens[0] = u64::from(kunz.multiplicity());
        Self::from_generators(&gens)
    }

    fn from_apery(apery: Vec<u64>) -> Self {
        let m = apery.len() as u64;
        let kunz = KunzVector::new(
            apery
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &w)| ((w - i as u64) / m) as u32)
                .collect(),
        );
        // A nonzero Apéry element is a minimal generator unless it is the sum
        // of two nonzero Apéry elements.
        let nonzero: BTreeSet<u64> = apery[1..].iter().copied().collect();
        let mut minimal_generators = alloc::vec![m];
        for &w in &apery[1..] {
            let decomposes = nonzero
                .range(..w)
                .any(|&a| nonzero.contains(&(w - a)));
            if !decomposes {
                minimal_generators.push(w);
            }
        }
        minimal_generators.sort_unstable();
        let frobenius = *apery.iter().max().unwrap() as i64 - m as i64;
        let genus = kunz.gap_count();
        NumericalSemigroup {
            minimal_generators,
            apery,
            kunz,
            frobenius,
            genus,
        }
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal_generators
    }

    pub fn multiplicity(&self) -> u32 {
        self.apery.len() as u32
    }

    pub fn apery_set(&self) -> &[u64] {
        &self.apery
    }

    pub fn kunz(&self) -> &KunzVector {
        &self.kunz
    }

    /// `F(S)`, or −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    pub fn is_natural(&self) -> bool {
        self.apery.len() == 1
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let m = self.apery.len() as u64;
        let n = n as u64;
        n >= self.apery[(n % m) as usize]
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius).filter(|&n| !self.contains(n)).collect()
    }

    /// `PF(S) = Maximals_{≤_S}(Ap(S)) − m`, in increasing order.
    pub fn pseudo_frobenius(&self) -> Result<Vec<i64>> {
        if self.is_natural() {
            return Err(Error::FullMonoid);
        }
        let m = self.apery.len() as i64;
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .enumerate()
            .skip(1)
            .filter(|&(i, &w)| {
                self.apery
                    .iter()
                    .enumerate()
                    .all(|(j, &v)| j == i || !self.contains(v as i64 - w as i64))
            })
            .map(|(_, &w)| w as i64 - m)
            .collect();
        pf.sort_unstable();
        Ok(pf)
    }

    /// Cohen-Macaulay type `|PF(S)|`.
    pub fn type_(&self) -> Result<usize> {
        self.pseudo_frobenius().map(|pf| pf.len())
    }

    /// `SG(S) = {g ∈ PF(S) : 2g ∈ S}`.
    pub fn special_gaps(&self) -> Result<Vec<i64>> {
        Ok(self
            .pseudo_frobenius()?
            .into_iter()
            .filter(|&g| self.contains(2 * g))
            .collect())
    }

    pub fn classify(&self) -> Result<Classification> {
        let pf = self.pseudo_frobenius()?;
        let f = self.frobenius;
        Ok(match pf.as_slice() {
            [_] => Classification::Symmetric,
            [half, full] if f % 2 == 0 && *half == f / 2 && *full == f => {
                Classification::PseudoSymmetric
            }
            _ => Classification::NonIrreducible,
        })
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.classify()? != Classification::NonIrreducible)
    }

    /// `S ∪ {g}` for a special gap `g`.
    pub fn adjoin_gap(&self, g: i64) -> Result<Self> {
        if !self.special_gaps()?.contains(&g) {
            return Err(Error::NotSpecialGap(g));
        }
        let mut gens = self.minimal_generators.clone();
        gens.push(g as u64);
        Self::from_generators(&gens)
    }

    /// All numerical semigroups `T` with `S ⊆ T ⊆ ℕ`, ordered by genus
    /// descending and then by Kunz coordinates (relative to `m(S)`).
    pub fn oversemigroups(&self) -> Vec<Self> {
        let mut found: Vec<KunzVector> = Vec::new();
        for_each_below(self.kunz.entries(), |v| {
            let v = KunzVector::new(v.to_vec());
            if v.sum(&v).expect("same length") == v {
                found.push(v);
            }
        });
        found.sort_by(|a, b| b.gap_count().cmp(&a.gap_count()).then_with(|| a.cmp(b)));
        found
            .iter()
            .map(|v| Self::from_kunz(v).expect("idempotent Kunz vector is a semigroup"))
            .collect()
    }

    /// Kunz coordinates of this semigroup with respect to an arbitrary
    /// modulus `modulus ∈ S`.
    pub fn kunz_modulo(&self, modulus: u32) -> KunzVector {
        debug_assert!(self.contains(i64::from(modulus)));
        kunz_of_set(|n| self.contains(n), modulus)
    }

    /// Children in the semigroup tree: `S ∖ {x}` for each minimal generator
    /// `x > F(S)`. Each has genus `g(S) + 1`.
    pub fn children(&self) -> Vec<Self> {
        self.minimal_generators
            .iter()
            .filter(|&&x| x as i64 > self.frobenius)
            .map(|&x| {
                let mut gens: Vec<u64> = self
                    .minimal_generators
                    .iter()
                    .copied()
                    .filter(|&g| g != x)
                    .collect();
                gens.extend(self.minimal_generators.iter().map(|&g| g + x));
                // Needed only when x is the multiplicity, i.e. S = ℕ.
                gens.push(3 * x);
                Self::from_generators(&gens).expect("removing a generator above F keeps gcd 1")
            })
            .collect()
    }

    /// Every numerical semigroup of genus at most `max_genus`, ordered by
    /// genus and then by minimal generators.
    pub fn all_up_to_genus(max_genus: u64) -> Vec<Self> {
        let mut out = alloc::vec![Self::natural()];
        let mut level = alloc::vec![Self::natural()];
        for _ in 0..max_genus {
            let mut next: Vec<Self> = level.iter().flat_map(Self::children).collect();
            next.sort_by(|a, b| a.minimal_generators.cmp(&b.minimal_generators));
            out.extend(next.iter().cloned());
            level = next;
        }
        out
    }

    /// Comma-separated minimal generators, e.g. `3,13,17`.
    pub fn generators_string(&self) -> String {
        join_numbers(&self.minimal_generators)
    }
}

pub(crate) fn join_numbers<T: fmt::Display>(xs: &[T]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s
}

/// Kunz coordinates of a co-finite set containing 0 and closed under adding
/// `modulus`, read off from a membership predicate.
pub(crate) fn kunz_of_set(contains: impl Fn(i64) -> bool, modulus: u32) -> KunzVector {
    let m = i64::from(modulus);
    KunzVector::new(
        (1..m)
            .map(|i| {
                let mut q = 0;
                while !contains(q * m + i) {
                    q += 1;
                }
                q as u32
            })
            .collect(),
    )
}

/// Calls `f` on every vector `v` with `0 ≤ v ≤ bound` entrywise, in
/// lexicographic order.
pub(crate) fn for_each_below(bound: &[u32], mut f: impl FnMut(&[u32])) {
    let mut v = alloc::vec![0u32; bound.len()];
    loop {
        f(&v);
        let mut k = v.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if v[k] < bound[k] {
                v[k] += 1;
                break;
            }
            v[k] = 0;
        }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.generators_string())
    }
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    /// Parses a comma-separated generator list such as `3,13,17`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('<')
            .and_then(|t| t.strip_suffix('>'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let gens = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::NonPositiveGenerator))
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(&gens)
    }
}
