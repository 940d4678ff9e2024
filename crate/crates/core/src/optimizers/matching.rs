use std::collections::VecDeque;

use crate::graph::VertexSet;

/// Bipartite graph with parts `0..left` and `0..right`; edges only go across.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            right,
            adj: vec![Vec::new(); left],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(
        left: usize,
        right: usize,
        edges: I,
    ) -> Self {
        let mut b = BipartiteGraph::new(left, right);
        for (l, r) in edges {
            b.add_edge(l, r);
        }
        b
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(
            l < self.adj.len() && r < self.right,
            "edge ({l}, {r}) out of range"
        );
        self.adj[l].push(r);
    }

    pub fn left_count(&self) -> usize {
        self.adj.len()
    }

    pub fn right_count(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(l, rs)| rs.iter().map(move |&r| (l, r)))
    }
}

/// A set of vertex-disjoint edges, stored as mates on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    left_mate: Vec<Option<usize>>,
    right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(b: &BipartiteGraph) -> Self {
        Matching {
            left_mate: vec![None; b.left_count()],
            right_mate: vec![None; b.right_count()],
        }
    }

    pub fn len(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn mate_of_left(&self, l: usize) -> Option<usize> {
        self.left_mate[l]
    }

    pub fn mate_of_right(&self, r: usize) -> Option<usize> {
        self.right_mate[r]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, m)| m.map(|r| (l, r)))
    }

    /// Every pair is an edge of `b` and mates agree on both sides.
    pub fn is_valid_for(&self, b: &BipartiteGraph) -> bool {
        self.left_mate.len() == b.left_count()
            && self.right_mate.len() == b.right_count()
            && self
                .pairs()
                .all(|(l, r)| self.right_mate[r] == Some(l) && b.neighbors(l).contains(&r))
            && self
                .right_mate
                .iter()
                .enumerate()
                .all(|(r, m)| m.is_none_or(|l| self.left_mate[l] == Some(r)))
    }
}

/// Maximum-cardinality matching by Hopcroft–Karp, `O(E sqrt(V))`.
pub fn max_matching(b: &BipartiteGraph) -> Matching {
    const INF: usize = usize::MAX;
    let left = b.left_count();
    let mut m = Matching::empty(b);
    let mut dist = vec![INF; left];
    let mut queue = VecDeque::new();

    loop {
        // Layer the graph from every free left vertex.
        queue.clear();
        for (l, d) in dist.iter_mut().enumerate() {
            if m.left_mate[l].is_none() {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = INF;
            }
        }
        let mut reachable_free = false;
        while let Some(l) = queue.pop_front() {
            for &r in &b.adj[l] {
                match m.right_mate[r] {
                    None => reachable_free = true,
                    Some(next) if dist[next] == INF => {
                        dist[next] = dist[l] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free {
            break;
        }

        let mut cursor = vec![0usize; left];
        for l in 0..left {
            if m.left_mate[l].is_none() {
                augment(b, &mut m, &mut dist, &mut cursor, l);
            }
        }
    }
    m
}

/// Depth-first search for a shortest augmenting path along the BFS layers.
fn augment(
    b: &BipartiteGraph,
    m: &mut Matching,
    dist: &mut [usize],
    cursor: &mut [usize],
    l: usize,
) -> bool {
    while cursor[l] < b.adj[l].len() {
        let r = b.adj[l][cursor[l]];
        cursor[l] += 1;
        let ok = match m.right_mate[r] {
            None => true,
            Some(next) => dist[next] == dist[l] + 1 && augment(b, m, dist, cursor, next),
        };
        if ok {
            m.left_mate[l] = Some(r);
            m.right_mate[r] = Some(l);
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Vertex cover of a bipartite graph; `left` and `right` are over the
/// respective part indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteCover {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl BipartiteCover {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn covers(&self, b: &BipartiteGraph) -> bool {
        b.edges()
            .all(|(l, r)| self.left.contains(l) || self.right.contains(r))
    }
}

/// König's construction: with `Z` the vertices reachable from free left
/// vertices by alternating paths, the cover is `(L \ Z) ∪ (R ∩ Z)`. Its size
/// equals `|m|` when `m` is maximum.
pub fn min_vertex_cover(b: &BipartiteGraph, m: &Matching) -> BipartiteCover {
    let left = b.left_count();
    let mut seen_left = VertexSet::empty(left);
    let mut seen_right = VertexSet::empty(b.right_count());
    let mut stack: Vec<usize> = (0..left).filter(|&l| m.left_mate[l].is_none()).collect();
    for &l in &stack {
        seen_left.insert(l);
    }
    while let Some(l) = stack.pop() {
        for &r in &b.adj[l] {
            if m.left_mate[l] == Some(r) || !seen_right.insert(r) {
                continue;
            }
            if let Some(next) = m.right_mate[r] {
                if seen_left.insert(next) {
                    stack.push(next);
                }
            }
        }
    }
    BipartiteCover {
        left: seen_left.complement(),
        right: seen_right,
    }
}
