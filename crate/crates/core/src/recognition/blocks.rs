use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::verify::{verify_unchecked, BlockAssignment};
use super::Representation;

/// Partitions the vertices into the closed neighbourhoods of the members of
/// `independent` (taken in ascending order, each restricted to what is still
/// unassigned) plus one block for whatever is left, then runs
/// [`verify`](super::verify) on the partition.
pub fn test(g: &Graph, independent: &VertexSet) -> Result<Option<Representation>> {
    check_universe(g, independent)?;
    if !g.is_independent(independent) {
        return Err(Error::Contract("vertex set is not independent".into()));
    }
    Ok(test_unchecked(g, independent))
}

pub(crate) fn test_unchecked(g: &Graph, independent: &VertexSet) -> Option<Representation> {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut unassigned = VertexSet::full(n);
    let mut blocks = 0;
    for i in independent {
        let mut block = g.closed_neighborhood(i);
        block.intersect_with(&unassigned);
        for v in &block {
            labels[v] = blocks;
        }
        blocks += 1;
        unassigned.difference_with(&block);
    }
    if !unassigned.is_empty() {
        for v in &unassigned {
            labels[v] = blocks;
        }
        blocks += 1;
    }
    verify_unchecked(g, &BlockAssignment::from_parts_unchecked(labels, blocks))
}

/// Localizes the (at most one) member of `independent` that may sit in the
/// central clique, then tries at most two partitions with [`test`].
///
/// `independent` must be a maximal independent set at least as large as the
/// side-clique count of every representation, as returned by
/// [`indep`](super::indep).
pub fn blocks(g: &Graph, independent: &VertexSet) -> Result<Option<Representation>> {
    check_universe(g, independent)?;
    if !g.is_independent(independent) {
        return Err(Error::Contract("vertex set is not independent".into()));
    }
    if let Some(v) =
        (0..g.n()).find(|&v| !independent.contains(v) && g.neighbors(v).is_disjoint(independent))
    {
        return Err(Error::Contract(format!(
            "independent set is not maximal: vertex {v} can be added"
        )));
    }
    Ok(blocks_unchecked(g, independent))
}

pub(crate) fn blocks_unchecked(g: &Graph, independent: &VertexSet) -> Option<Representation> {
    let mut candidates = independent.clone();
    for v in 0..g.n() {
        if independent.contains(v) {
            // Closed neighbourhood meets an independent set only in v itself.
            continue;
        }
        if g.neighbors(v).intersection_len(independent) == 2 {
            candidates.intersect_with(g.neighbors(v));
        }
    }
    match candidates.len() {
        1 | 2 => candidates.iter().find_map(|c| {
            let mut reduced = independent.clone();
            reduced.remove(c);
            test_unchecked(g, &reduced)
        }),
        _ => test_unchecked(g, independent),
    }
}

fn check_universe(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::Contract(format!(
            "vertex set ranges over 0..{}, graph has {} vertices",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}
