//! Large maximal independent sets in amortized `O(n^2)`.
//!
//! [`indep`] repeatedly picks a non-adjacent pair and decides whether to put
//! one or both of its endpoints into the independent set, looking at whether
//! the two private closed neighbourhoods are cliques. Clique tests are done
//! by [`antiedge`], which grows a known clique instead of re-checking it, so
//! every vertex is absorbed into a clique at most once over the whole run.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Result of a completeness scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntiEdge {
    /// The scanned set induces a complete graph.
    Complete,
    /// `(u, v)` with `u` inside the returned clique, `v` outside it, and
    /// `uv` not an edge.
    NonEdge(usize, usize),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IndepStats {
    /// Vertices appended to a growing clique by the completeness scan.
    pub absorptions: usize,
    /// Single-pair adjacency probes made by the completeness scan.
    pub adjacency_tests: usize,
    /// Iterations of the main loop.
    pub iterations: usize,
}

impl std::ops::Add for IndepStats {
    type Output = IndepStats;

    fn add(self, rhs: IndepStats) -> IndepStats {
        IndepStats {
            absorptions: self.absorptions + rhs.absorptions,
            adjacency_tests: self.adjacency_tests + rhs.adjacency_tests,
            iterations: self.iterations + rhs.iterations,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IndepResult {
    pub set: VertexSet,
    pub stats: IndepStats,
}

/// A clique known to be complete, with its members in absorption order.
#[derive(Clone, Debug)]
struct Clique {
    set: VertexSet,
    order: Vec<usize>,
}

impl Clique {
    fn empty(n: usize) -> Self {
        Clique {
            set: VertexSet::empty(n),
            order: Vec::new(),
        }
    }

    fn from_set(set: VertexSet) -> Self {
        let order = set.to_vec();
        Clique { set, order }
    }

    fn restrict(&self, within: &VertexSet) -> Clique {
        Clique {
            set: self.set.intersection(within),
            order: self
                .order
                .iter()
                .copied()
                .filter(|&v| within.contains(v))
                .collect(),
        }
    }

    fn push(&mut self, v: usize) {
        self.set.insert(v);
        self.order.push(v);
    }
}

struct Scanner<'g> {
    g: &'g Graph,
    stats: IndepStats,
}

impl Scanner<'_> {
    /// Grows `clique` inside `within` by scanning the remaining vertices in
    /// ascending order. Stops at the first vertex with a non-neighbour in the
    /// clique.
    fn antiedge(&mut self, within: &VertexSet, mut clique: Clique) -> (AntiEdge, Clique) {
        let candidates = within.difference(&clique.set);
        for v in &candidates {
            let row = self.g.neighbors(v);
            for &c in &clique.order {
                self.stats.adjacency_tests += 1;
                if !row.contains(c) {
                    return (AntiEdge::NonEdge(c, v), clique);
                }
            }
            clique.push(v);
            self.stats.absorptions += 1;
        }
        (AntiEdge::Complete, clique)
    }
}

/// Checks whether `within` induces a complete graph, growing the known clique
/// `seed` along the way.
///
/// Returns `(Complete, within)` when it does. Otherwise returns
/// `(NonEdge(u, v), grown)` where `seed ⊆ grown ⊆ within`, `grown` is a clique,
/// `u ∈ grown`, `v ∈ within \ grown` and `uv` is not an edge. Among several
/// non-neighbours of `v` in the clique, the earliest absorbed one is reported.
pub fn antiedge(g: &Graph, within: &VertexSet, seed: &VertexSet) -> Result<(AntiEdge, VertexSet)> {
    if within.universe() != g.n() || seed.universe() != g.n() {
        return Err(Error::Contract("vertex sets must range over 0..n".into()));
    }
    if !seed.is_subset(within) {
        return Err(Error::Contract(
            "seed clique is not inside the scanned set".into(),
        ));
    }
    if cfg!(debug_assertions) && !g.is_clique(seed) {
        return Err(Error::Contract("seed is not a clique".into()));
    }
    let mut scanner = Scanner {
        g,
        stats: IndepStats::default(),
    };
    let (outcome, clique) = scanner.antiedge(within, Clique::from_set(seed.clone()));
    Ok((outcome, clique.set))
}

/// Finds a maximal independent set `I`. If `g` is unipolar then `|I|` is at
/// least the number of side cliques of every representation of `g`.
pub fn indep(g: &Graph) -> IndepResult {
    let n = g.n();
    let mut scanner = Scanner {
        g,
        stats: IndepStats::default(),
    };
    let mut chosen = VertexSet::empty(n);
    let mut remaining = VertexSet::full(n);
    let mut known = Clique::empty(n);

    while !remaining.is_empty() {
        scanner.stats.iterations += 1;
        let (outcome, grown) = scanner.antiedge(&remaining, known);
        let (u1, u2) = match outcome {
            AntiEdge::Complete => {
                chosen.insert(remaining.min().expect("non-empty"));
                break;
            }
            AntiEdge::NonEdge(u1, u2) => (u1, u2),
        };

        let closed1 = g.closed_neighborhood(u1);
        let closed2 = g.closed_neighborhood(u2);
        let mut private1 = closed1.difference(&closed2);
        private1.intersect_with(&remaining);
        let mut private2 = closed2.difference(&closed1);
        private2.intersect_with(&remaining);

        let seed1 = grown.restrict(&private1);
        let seed2 = grown.restrict(&private2);
        let (e1, c1) = scanner.antiedge(&private1, seed1);
        let (e2, c2) = scanner.antiedge(&private2, seed2);

        match (e1, e2) {
            (AntiEdge::Complete, AntiEdge::Complete) => {
                chosen.insert(u1);
                chosen.insert(u2);
                remaining.difference_with(&closed1);
                remaining.difference_with(&closed2);
                known = Clique::empty(n);
            }
            (_, AntiEdge::NonEdge(..)) => {
                chosen.insert(u1);
                remaining.difference_with(&closed1);
                known = c2;
            }
            (AntiEdge::NonEdge(..), AntiEdge::Complete) => {
                chosen.insert(u2);
                remaining.difference_with(&closed2);
                known = c1;
            }
        }
        debug_assert!(known.set.is_subset(&remaining));
    }

    IndepResult {
        set: chosen,
        stats: scanner.stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, GenParams};
    use crate::oracle;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn is_maximal_independent(g: &Graph, s: &VertexSet) -> bool {
        g.is_independent(s) && (0..g.n()).all(|v| s.contains(v) || !g.neighbors(v).is_disjoint(s))
    }

    /// Full postcondition of the completeness scan.
    fn assert_antiedge_contract(g: &Graph, within: &VertexSet, seed: &VertexSet) {
        let (outcome, grown) = antiedge(g, within, seed).unwrap();
        match outcome {
            AntiEdge::Complete => {
                assert!(g.is_clique(within));
                assert_eq!(&grown, within);
            }
            AntiEdge::NonEdge(u, v) => {
                assert!(!g.is_clique(within));
                assert!(grown.contains(u));
                assert!(within.contains(v) && !grown.contains(v));
                assert!(!g.has_edge(u, v));
                assert!(seed.is_subset(&grown) && grown.is_subset(within));
                assert!(g.is_clique(&grown));
            }
        }
    }

    #[test]
    fn antiedge_complete() {
        let k4 = Graph::complete(4);
        let all = k4.vertices();
        let (e, c) = antiedge(&k4, &all, &VertexSet::empty(4)).unwrap();
        assert_eq!(e, AntiEdge::Complete);
        assert_eq!(c, all);
    }

    #[test]
    fn antiedge_path_trace() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let (e, c) = antiedge(&p3, &p3.vertices(), &VertexSet::empty(3)).unwrap();
        assert_eq!(e, AntiEdge::NonEdge(0, 2));
        assert_eq!(c.to_vec(), vec![0, 1]);
    }

    #[test]
    fn antiedge_triangle_plus_isolated() {
        let g = graph(4, &[(0, 1), (1, 2), (0, 2)]);
        let seed = VertexSet::singleton(4, 0);
        let (e, c) = antiedge(&g, &g.vertices(), &seed).unwrap();
        let AntiEdge::NonEdge(u, v) = e else {
            panic!("expected a non-edge");
        };
        assert_eq!(v, 3);
        assert!(u < 3 && c.contains(u) && c.contains(0));
        assert!(!c.contains(3));
        assert_antiedge_contract(&g, &g.vertices(), &seed);
    }

    #[test]
    fn antiedge_rejects_bad_seed() {
        let p3 = graph(3, &[(0, 1), (1, 2)]);
        let not_clique = VertexSet::from_vertices(3, [0, 2]);
        assert!(antiedge(&p3, &p3.vertices(), &not_clique).is_err());
        let outside = VertexSet::singleton(3, 2);
        let within = VertexSet::from_vertices(3, [0, 1]);
        assert!(antiedge(&p3, &within, &outside).is_err());
    }

    #[test]
    fn antiedge_contract_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..2000 {
            let n = rng.random_range(1..=14);
            let g = generators::gen_gnp(n, rng.random_range(0.3..0.95), rng.random());
            let within = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.7)));
            // Greedy random clique inside `within` as the seed.
            let mut seed = VertexSet::empty(n);
            for v in &within {
                if rng.random_bool(0.5) && seed.is_subset(g.neighbors(v)) {
                    seed.insert(v);
                }
            }
            assert_antiedge_contract(&g, &within, &seed);
        }
    }

    #[test]
    fn indep_small_cases() {
        assert_eq!(indep(&Graph::complete(5)).set.len(), 1);
        assert_eq!(indep(&Graph::empty(6)).set, VertexSet::full(6));
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let found = indep(&p4);
        assert_eq!(found.set.len(), 2);
        assert!(is_maximal_independent(&p4, &found.set));
        assert_eq!(indep(&Graph::empty(0)).set.len(), 0);
    }

    #[test]
    fn indep_is_large_enough_on_all_small_graphs() {
        for n in 0..=6 {
            for g in generators::all_labeled_graphs(n) {
                let found = indep(&g);
                assert!(is_maximal_independent(&g, &found.set), "{g:?}");
                assert!(found.set.len() >= oracle::oracle_s(&g).unwrap(), "{g:?}");
                assert!(found.stats.absorptions <= n);
            }
        }
    }

    #[test]
    fn indep_on_planted_instances() {
        for seed in 0..40 {
            let params = GenParams {
                n: 300,
                seed,
                ..GenParams::default()
            };
            let (g, planted) = generators::gen_unipolar(&params);
            let found = indep(&g);
            assert!(is_maximal_independent(&g, &found.set));
            assert!(found.set.len() >= planted.side_count());
            assert!(found.stats.absorptions <= g.n());
        }
    }
}
