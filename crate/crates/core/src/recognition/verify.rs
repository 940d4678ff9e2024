use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::twosat::{solve_rows, ImplicationRows, Literal, TwoSatFormula};

use super::Representation;

/// A partition of the vertices into blocks `0..blocks`, stored as one label
/// per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAssignment {
    labels: Vec<usize>,
    blocks: usize,
}

impl BlockAssignment {
    /// Accepts `labels` only if they cover every index in `0..=max(labels)`.
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let blocks = labels.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; blocks];
        for &l in &labels {
            used[l] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidBlockAssignment {
                blocks,
                reason: format!("block {missing} is empty"),
            });
        }
        Ok(BlockAssignment { labels, blocks })
    }

    /// All vertices in one block.
    pub fn single(n: usize) -> Self {
        BlockAssignment {
            labels: vec![0; n],
            blocks: usize::from(n > 0),
        }
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<usize>, blocks: usize) -> Self {
        BlockAssignment { labels, blocks }
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Builds the 2-SAT instance whose satisfying assignments are exactly the
/// representations for which `f` is a block decomposition. Variable `v` is true
/// when `v` goes to the central clique.
pub fn block_formula(g: &Graph, f: &BlockAssignment) -> TwoSatFormula {
    let n = g.n();
    let mut formula = TwoSatFormula::with_capacity(n, n * n.saturating_sub(1));
    for u in 0..n {
        let row = g.neighbors(u);
        let fu = f.block_of(u);
        for v in u + 1..n {
            let adjacent = row.contains(v);
            let same_block = fu == f.block_of(v);
            if !adjacent {
                // Two non-adjacent vertices cannot both be central.
                formula.push_clause(Literal::neg(u), Literal::neg(v));
            }
            if adjacent != same_block {
                // Adjacent across blocks, or non-adjacent inside a block:
                // they cannot both be side vertices.
                formula.push_clause(Literal::pos(u), Literal::pos(v));
            }
        }
    }
    formula
}

/// Returns a representation for which `f` is a block decomposition, or `None`
/// if there is no such representation.
pub fn verify(g: &Graph, f: &BlockAssignment) -> Result<Option<Representation>> {
    if f.len() != g.n() {
        return Err(Error::Contract(format!(
            "block assignment covers {} vertices, graph has {}",
            f.len(),
            g.n()
        )));
    }
    Ok(verify_unchecked(g, f))
}

/// The implications of [`block_formula`] read straight off the adjacency and
/// block bitsets, so the quadratic clause list is never materialised.
struct BlockRows<'a> {
    g: &'a Graph,
    f: &'a BlockAssignment,
    members: Vec<VertexSet>,
}

impl<'a> BlockRows<'a> {
    fn new(g: &'a Graph, f: &'a BlockAssignment) -> Self {
        let n = g.n();
        let mut members = vec![VertexSet::empty(n); f.block_count()];
        for v in 0..n {
            members[f.block_of(v)].insert(v);
        }
        BlockRows { g, f, members }
    }
}

impl ImplicationRows for BlockRows<'_> {
    fn vars(&self) -> usize {
        self.g.n()
    }

    fn successors(&self, lit: Literal) -> (VertexSet, VertexSet) {
        let n = self.g.n();
        let u = lit.var();
        if lit.is_positive() {
            // x_u forces every non-neighbour out of the centre.
            let mut out = self.g.neighbors(u).complement();
            out.remove(u);
            (VertexSet::empty(n), out)
        } else {
            // ¬x_u forces into the centre every v whose adjacency to u
            // disagrees with sharing u's block.
            let mut into = self.g.neighbors(u).clone();
            into.symmetric_difference_with(&self.members[self.f.block_of(u)]);
            into.remove(u);
            (into, VertexSet::empty(n))
        }
    }
}

pub(crate) fn verify_unchecked(g: &Graph, f: &BlockAssignment) -> Option<Representation> {
    let n = g.n();
    let assignment = solve_rows(&BlockRows::new(g, f))?;
    let mut central = VertexSet::empty(n);
    let mut by_block: Vec<Option<VertexSet>> = vec![None; f.block_count()];
    for v in 0..n {
        if assignment.value(v) {
            central.insert(v);
        } else {
            by_block[f.block_of(v)]
                .get_or_insert_with(|| VertexSet::empty(n))
                .insert(v);
        }
    }
    Some(Representation::new(
        central,
        by_block.into_iter().flatten().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::recognition::check_representation;
    use crate::twosat::Assignment;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rows_list_exactly_the_formula_implications() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xb10c);
        for _ in 0..200 {
            let n = rng.random_range(0..=20);
            let g = crate::generators::gen_gnp(n, rng.random_range(0.1..0.9), rng.random());
            let blocks = rng.random_range(1..=n.max(1));
            let labels: Vec<usize> = (0..n)
                .map(|v| {
                    if v < blocks {
                        v
                    } else {
                        rng.random_range(0..blocks)
                    }
                })
                .collect();
            let f = BlockAssignment::new(labels).unwrap();
            let formula = block_formula(&g, &f);
            let rows = BlockRows::new(&g, &f);
            for var in 0..n {
                for lit in [Literal::pos(var), Literal::neg(var)] {
                    let (mut pos, mut neg) = (VertexSet::empty(n), VertexSet::empty(n));
                    for &(a, b) in formula.clauses() {
                        for (x, y) in [(a, b), (b, a)] {
                            if x.negate() == lit {
                                if y.is_positive() {
                                    pos.insert(y.var());
                                } else {
                                    neg.insert(y.var());
                                }
                            }
                        }
                    }
                    assert_eq!(rows.successors(lit), (pos, neg));
                }
            }
            assert_eq!(solve_rows(&rows).is_some(), formula.solve().is_some());
        }
    }

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    /// Enumerates every assignment of the formula and checks that the
    /// satisfying ones are exactly the central sets whose induced split is a
    /// representation with `f` as a block decomposition.
    fn assert_formula_matches_definition(g: &Graph, f: &BlockAssignment) {
        let formula = block_formula(g, f);
        for mask in 0u32..1 << g.n() {
            let values: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
            let sat = Assignment::from_values(values).satisfies(&formula);
            let by_definition = oracle::is_block_decomposition_for(g, f, mask as u64);
            assert_eq!(sat, by_definition, "{g:?} {f:?} mask {mask:b}");
        }
    }

    #[test]
    fn rejects_non_surjective_labels() {
        assert!(BlockAssignment::new(vec![0, 2, 2]).is_err());
        assert_eq!(
            BlockAssignment::new(vec![1, 0, 1]).unwrap().block_count(),
            2
        );
        assert_eq!(BlockAssignment::new(vec![]).unwrap().block_count(), 0);
    }

    #[test]
    fn rejects_wrong_length() {
        let g = Graph::complete(3);
        assert!(matches!(
            verify(&g, &BlockAssignment::single(2)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn complete_graph_single_block() {
        let g = Graph::complete(3);
        let r = verify(&g, &BlockAssignment::single(3)).unwrap().unwrap();
        assert!(check_representation(&g, &r));
    }

    #[test]
    fn path_single_block() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let f = BlockAssignment::single(3);
        let formula = block_formula(&p3, &f);
        // Pair (0,2) contributes both clauses; the edges contribute none.
        assert_eq!(formula.len(), 2);
        assert_formula_matches_definition(&p3, &f);
        let r = verify(&p3, &f).unwrap().unwrap();
        assert!(check_representation(&p3, &r));
        assert_eq!(r.central().len(), 2);
        assert!(r.central().contains(1));
        assert_eq!(r.side_count(), 1);
    }

    #[test]
    fn two_disjoint_edges_single_block() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        let f = BlockAssignment::single(4);
        assert_formula_matches_definition(&g, &f);
        let r = verify(&g, &f).unwrap().unwrap();
        assert!(check_representation(&g, &r));
        assert_eq!(r.central().len(), 2);
        assert_eq!(r.side_count(), 1);
    }

    #[test]
    fn c5_single_block_fails() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(verify(&c5, &BlockAssignment::single(5)).unwrap(), None);
    }

    #[test]
    fn random_assignments_match_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xb10c);
        for _ in 0..400 {
            let n = rng.random_range(1..=8);
            let p = rng.random_range(0.2..0.8);
            let g = crate::generators::gen_gnp(n, p, rng.random());
            let blocks = rng.random_range(1..=n);
            let mut labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..blocks)).collect();
            // Compact labels so the assignment is surjective.
            let mut seen = Vec::new();
            for l in labels.iter_mut() {
                let pos = seen.iter().position(|s| s == l).unwrap_or_else(|| {
                    seen.push(*l);
                    seen.len() - 1
                });
                *l = pos;
            }
            let f = BlockAssignment::new(labels).unwrap();
            assert_formula_matches_definition(&g, &f);
            let exists = (0u64..1 << n).any(|m| oracle::is_block_decomposition_for(&g, &f, m));
            match verify(&g, &f).unwrap() {
                Some(r) => {
                    assert!(exists);
                    assert!(check_representation(&g, &r));
                    let mask = r.central().iter().fold(0u64, |m, v| m | 1 << v);
                    assert!(oracle::is_block_decomposition_for(&g, &f, mask));
                }
                None => assert!(!exists, "{g:?} {f:?}"),
            }
        }
    }
}
