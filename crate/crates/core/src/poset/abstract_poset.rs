use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// An unlabeled finite poset given by its Hasse diagram.
///
/// Construction checks that the edges are acyclic, form a transitive
/// reduction, and that there is a unique minimum and a unique maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPoset {
    node_count: usize,
    cover_edges: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    minimum: usize,
    maximum: usize,
    /// Longest path up to the maximum.
    depth: Vec<usize>,
    /// Longest path down to the minimum.
    height: Vec<usize>,
    reach_up: Vec<FixedBitSet>,
}

fn invalid(msg: impl Into<alloc::string::String>) -> Error {
    Error::InvalidPoset(msg.into())
}

impl AbstractPoset {
    pub fn new(node_count: usize, cover_edges: Vec<(usize, usize)>) -> Result<Self> {
        if node_count == 0 {
            return Err(invalid("no nodes"));
        }
        let mut upper = alloc::vec![Vec::new(); node_count];
        let mut lower = alloc::vec![Vec::new(); node_count];
        for &(lo, hi) in &cover_edges {
            if lo >= node_count || hi >= node_count {
                return Err(invalid(format!("edge ({lo}, {hi}) out of range")));
            }
            if lo == hi {
                return Err(invalid(format!("self-loop at {lo}")));
            }
            if upper[lo].contains(&hi) {
                return Err(invalid(format!("duplicate edge ({lo}, {hi})")));
            }
            upper[lo].push(hi);
            lower[hi].push(lo);
        }

        // Kahn's algorithm from the bottom.
        let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
        let mut order: Vec<usize> = (0..node_count).filter(|&v| indeg[v] == 0).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &upper[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    order.push(w);
                }
            }
        }
        if order.len() != node_count {
            return Err(invalid("cover edges contain a cycle"));
        }

        let sources: Vec<usize> = (0..node_count).filter(|&v| lower[v].is_empty()).collect();
        let sinks: Vec<usize> = (0..node_count).filter(|&v| upper[v].is_empty()).collect();
        let (&[minimum], &[maximum]) = (&sources[..], &sinks[..]) else {
            return Err(invalid(format!(
                "{} minimal and {} maximal nodes",
                sources.len(),
                sinks.len()
            )));
        };

        let mut reach_up = alloc::vec![FixedBitSet::with_capacity(node_count); node_count];
        let mut depth = alloc::vec![0; node_count];
        for &v in order.iter().rev() {
            reach_up[v].insert(v);
            for &w in &upper[v] {
                let (before, after) = reach_up.split_at_mut(v.max(w));
                if v < w {
                    before[v].union_with(&after[0]);
                } else {
                    after[0].union_with(&before[w]);
                }
                depth[v] = depth[v].max(depth[w] + 1);
            }
        }
        for (v, ups) in upper.iter().enumerate() {
            for &w in ups {
                if ups.iter().any(|&x| x != w && reach_up[x].contains(w)) {
                    return Err(invalid(format!("edge ({v}, {w}) is implied by transitivity")));
                }
            }
        }
        let mut height = alloc::vec![0; node_count];
        for &v in &order {
            for &w in &upper[v] {
                height[w] = height[w].max(height[v] + 1);
            }
        }

        Ok(AbstractPoset {
            node_count,
            cover_edges,
            upper,
            lower,
            minimum,
            maximum,
            depth,
            height,
            reach_up,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    pub fn minimum(&self) -> usize {
        self.minimum
    }

    pub fn maximum(&self) -> usize {
        self.maximum
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper[v]
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower[v]
    }

    /// Length of the longest chain from `v` up to the maximum.
    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Length of the longest chain from the minimum to the maximum.
    pub fn height(&self) -> usize {
        self.depth[self.minimum]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.reach_up[a].contains(b)
    }

    pub fn is_chain(&self) -> bool {
        self.upper.iter().all(|u| u.len() <= 1)
    }

    /// Same poset with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.node_count {
            return Err(invalid("permutation has the wrong length"));
        }
        let edges = self
            .cover_edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Self::new(self.node_count, edges)
    }

    /// Colour refinement seeded with depth, height, degrees and up/down-set
    /// sizes, run on both posets with a shared colour table.
    fn joint_colours(&self, other: &Self) -> (Vec<usize>, Vec<usize>) {
        let seed = |p: &Self, v: usize| {
            let down = (0..p.node_count).filter(|&u| p.leq(u, v)).count();
            alloc::vec![
                p.depth[v],
                p.height[v],
                p.upper[v].len(),
                p.lower[v].len(),
                p.reach_up[v].count_ones(..),
                down
            ]
        };
        let mut table: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut intern = |sig: Vec<usize>| {
            let next = table.len();
            *table.entry(sig).or_insert(next)
        };
        let mut a: Vec<usize> = (0..self.node_count).map(|v| intern(seed(self, v))).collect();
        let mut b: Vec<usize> = (0..other.node_count).map(|v| intern(seed(other, v))).collect();
        loop {
            let classes = |c: &[usize]| {
                let mut s: Vec<usize> = c.to_vec();
                s.sort_unstable();
                s.dedup();
                s.len()
            };
            let before = classes(&a) + classes(&b);
            let mut table: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let mut refine = |p: &Self, c: &[usize]| -> Vec<usize> {
                (0..p.node_count)
                    .map(|v| {
                        let mut up: Vec<usize> = p.upper[v].iter().map(|&w| c[w]).collect();
                        let mut down: Vec<usize> = p.lower[v].iter().map(|&w| c[w]).collect();
                        up.sort_unstable();
                        down.sort_unstable();
                        let mut sig = alloc::vec![c[v], usize::MAX];
                        sig.extend(up);
                        sig.push(usize::MAX);
                        sig.extend(down);
                        let next = table.len();
                        *table.entry(sig).or_insert(next)
                    })
                    .collect()
            };
            let a2 = refine(self, &a);
            let b2 = refine(other, &b);
            a = a2;
            b = b2;
            if classes(&a) + classes(&b) == before {
                return (a, b);
            }
        }
    }

    /// Whether the two posets are order isomorphic.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        if self.node_count != other.node_count
            || self.cover_edges.len() != other.cover_edges.len()
        {
            return false;
        }
        let (ca, cb) = self.joint_colours(other);
        let mut ha = ca.clone();
        let mut hb = cb.clone();
        ha.sort_unstable();
        hb.sort_unstable();
        if ha != hb {
            return false;
        }
        // Assign nodes bottom-up so most neighbours are already mapped.
        let mut order: Vec<usize> = (0..self.node_count).collect();
        order.sort_by_key(|&v| (self.height[v], ca[v], v));
        let mut map = alloc::vec![usize::MAX; self.node_count];
        let mut inv = alloc::vec![usize::MAX; other.node_count];
        self.extend_map(other, &ca, &cb, &order, 0, &mut map, &mut inv)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_map(
        &self,
        other: &Self,
        ca: &[usize],
        cb: &[usize],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        inv: &mut [usize],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for w in 0..other.node_count {
            if inv[w] != usize::MAX || cb[w] != ca[v] {
                continue;
            }
            let consistent = self.upper[v]
                .iter()
                .filter(|&&x| map[x] != usize::MAX)
                .all(|&x| other.upper[w].contains(&map[x]))
                && self.lower[v]
                    .iter()
                    .filter(|&&x| map[x] != usize::MAX)
                    .all(|&x| other.lower[w].contains(&map[x]))
                && other.upper[w]
                    .iter()
                    .chain(&other.lower[w])
                    .all(|&y| {
                        inv[y] == usize::MAX
                            || self.upper[v].contains(&inv[y])
                            || self.lower[v].contains(&inv[y])
                    });
            if !consistent {
                continue;
            }
            map[v] = w;
            inv[w] = v;
            if self.extend_map(other, ca, cb, order, depth + 1, map, inv) {
                return true;
            }
            map[v] = usize::MAX;
            inv[w] = usize::MAX;
        }
        false
    }
}
