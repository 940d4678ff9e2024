//! Exhaustive ground truth for small instances.
//!
//! Everything here works on `u64` adjacency masks and enumerates subsets
//! directly from the definitions. None of it shares code with the fast
//! algorithms it is used to check.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{BlockAssignment, Representation};
use crate::twosat::{Assignment, TwoSatFormula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest vertex count accepted by subset-exponential routines.
    pub max_n: usize,
    /// Largest variable count accepted by 2-SAT enumeration.
    pub max_vars: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_n: 15,
            max_vars: 20,
        }
    }
}

/// Brute-force solver bound to a set of limits.
#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            v
        })
    })
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_vertices(n, bits(mask))
}

/// Adjacency as bitmasks, one per vertex.
fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

fn is_clique_mask(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| (s & !(1 << v)) & !adj[v] == 0)
}

fn is_independent_mask(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| adj[v] & s == 0)
}

/// `G[s]` is a disjoint union of cliques: adjacent vertices have identical
/// closed neighbourhoods inside `s` (equivalently, no induced `P3`).
fn is_cluster_mask(adj: &[u64], s: u64) -> bool {
    bits(s).all(|v| {
        let closed = (adj[v] | 1 << v) & s;
        bits(adj[v] & s).all(|u| (adj[u] | 1 << u) & s == closed)
    })
}

/// Connected components of `G[s]`, ordered by smallest vertex.
fn components_mask(adj: &[u64], s: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = s;
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let grown = bits(comp).fold(comp, |m, v| m | (adj[v] & s));
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    fn masks(&self, g: &Graph) -> Result<Vec<u64>> {
        if g.n() > self.limits.max_n {
            return Err(Error::OracleLimit {
                size: g.n(),
                limit: self.limits.max_n,
            });
        }
        Ok(adjacency_masks(g))
    }

    /// Central-clique masks of every representation, in increasing encoding.
    pub fn central_masks(&self, g: &Graph) -> Result<Vec<u64>> {
        let adj = self.masks(g)?;
        let all = full_mask(g.n());
        Ok((0..=all)
            .filter(|&c| is_clique_mask(&adj, c) && is_cluster_mask(&adj, all & !c))
            .collect())
    }

    fn representation_for(&self, adj: &[u64], n: usize, central: u64) -> Representation {
        let sides = components_mask(adj, full_mask(n) & !central)
            .into_iter()
            .map(|m| mask_to_set(n, m))
            .collect();
        Representation::new(mask_to_set(n, central), sides)
    }

    /// The representation with the smallest central-clique encoding, if any.
    pub fn is_unipolar(&self, g: &Graph) -> Result<Option<Representation>> {
        let adj = self.masks(g)?;
        let all = full_mask(g.n());
        Ok((0..=all)
            .find(|&c| is_clique_mask(&adj, c) && is_cluster_mask(&adj, all & !c))
            .map(|c| self.representation_for(&adj, g.n(), c)))
    }

    /// Every representation of `g`.
    pub fn representations(&self, g: &Graph) -> Result<Vec<Representation>> {
        let adj = self.masks(g)?;
        Ok(self
            .central_masks(g)?
            .into_iter()
            .map(|c| self.representation_for(&adj, g.n(), c))
            .collect())
    }

    /// Largest side-clique count over all representations; 0 if none.
    pub fn s(&self, g: &Graph) -> Result<usize> {
        let adj = self.masks(g)?;
        let all = full_mask(g.n());
        Ok(self
            .central_masks(g)?
            .into_iter()
            .map(|c| components_mask(&adj, all & !c).len())
            .max()
            .unwrap_or(0))
    }

    pub fn alpha(&self, g: &Graph) -> Result<usize> {
        let adj = self.masks(g)?;
        Ok((0..=full_mask(g.n()))
            .filter(|&s| is_independent_mask(&adj, s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    pub fn omega(&self, g: &Graph) -> Result<usize> {
        let adj = self.masks(g)?;
        Ok((0..=full_mask(g.n()))
            .filter(|&s| is_clique_mask(&adj, s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0))
    }

    /// Chromatic number by dynamic programming over vertex subsets.
    pub fn chi(&self, g: &Graph) -> Result<usize> {
        let adj = self.masks(g)?;
        let n = g.n();
        let size = 1usize << n;
        let mut independent = vec![true; size];
        for s in 1..size {
            let low = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            independent[s] = independent[rest] && adj[low] & rest as u64 == 0;
        }
        let mut chi = vec![usize::MAX; size];
        chi[0] = 0;
        for s in 1..size {
            let low = s & s.wrapping_neg();
            let others = s & !low;
            // Colour classes containing the lowest vertex of s.
            let mut sub = others;
            loop {
                let class = sub | low;
                if independent[class] {
                    chi[s] = chi[s].min(chi[s & !class] + 1);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & others;
            }
        }
        Ok(chi[size - 1])
    }

    /// Clique cover number.
    pub fn cover(&self, g: &Graph) -> Result<usize> {
        self.chi(&g.complement())
    }

    /// Tries every assignment in increasing binary order.
    pub fn two_sat(&self, formula: &TwoSatFormula) -> Result<Option<Assignment>> {
        let vars = formula.vars();
        if vars > self.limits.max_vars {
            return Err(Error::OracleLimit {
                size: vars,
                limit: self.limits.max_vars,
            });
        }
        let satisfied = |mask: u64, lit: crate::twosat::Literal| {
            (mask >> lit.var() & 1 == 1) == lit.is_positive()
        };
        Ok((0..1u64 << vars)
            .find(|&mask| {
                formula
                    .clauses()
                    .iter()
                    .all(|&(a, b)| satisfied(mask, a) || satisfied(mask, b))
            })
            .map(|mask| Assignment::from_values((0..vars).map(|v| mask >> v & 1 == 1).collect())))
    }
}

pub fn oracle_is_unipolar(g: &Graph) -> Result<Option<Representation>> {
    Oracle::default().is_unipolar(g)
}

pub fn oracle_representations(g: &Graph) -> Result<Vec<Representation>> {
    Oracle::default().representations(g)
}

pub fn oracle_s(g: &Graph) -> Result<usize> {
    Oracle::default().s(g)
}

pub fn oracle_alpha(g: &Graph) -> Result<usize> {
    Oracle::default().alpha(g)
}

pub fn oracle_omega(g: &Graph) -> Result<usize> {
    Oracle::default().omega(g)
}

pub fn oracle_chi(g: &Graph) -> Result<usize> {
    Oracle::default().chi(g)
}

pub fn oracle_cover(g: &Graph) -> Result<usize> {
    Oracle::default().cover(g)
}

pub fn oracle_2sat(formula: &TwoSatFormula) -> Result<Option<Assignment>> {
    Oracle::default().two_sat(formula)
}

/// Whether `central` (a bitmask) is the central clique of a representation
/// for which `f` is a block decomposition: every block meets the periphery in
/// a whole side clique or not at all.
pub fn is_block_decomposition_for(g: &Graph, f: &BlockAssignment, central: u64) -> bool {
    assert!(g.n() <= 64, "mask-based check supports at most 64 vertices");
    let adj = adjacency_masks(g);
    let periphery = full_mask(g.n()) & !central;
    if !is_clique_mask(&adj, central) || !is_cluster_mask(&adj, periphery) {
        return false;
    }
    let sides = components_mask(&adj, periphery);
    (0..f.block_count()).all(|b| {
        let part = bits(periphery)
            .filter(|&v| f.block_of(v) == b)
            .fold(0u64, |m, v| m | 1 << v);
        part == 0 || sides.contains(&part)
    })
}

/// Maximum matching size of a bipartite graph given as left-to-right
/// adjacency masks, by exhaustive branching over left vertices.
pub fn oracle_matching_size(left_adj: &[u64]) -> usize {
    fn go(left_adj: &[u64], used: u64) -> usize {
        let Some((&first, rest)) = left_adj.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        bits(first & !used).fold(skip, |best, r| best.max(1 + go(rest, used | 1 << r)))
    }
    go(left_adj, 0)
}
