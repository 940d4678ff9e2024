//! Maximum clique, minimum colouring, maximum stable set and minimum clique
//! cover for a graph with a known unipolar representation.
//!
//! Stable set and clique cover depend only on whether some central vertex
//! misses a vertex of every side clique. Clique and colouring split into the
//! co-bipartite pieces `G[C0 ∪ Ci]`; in each piece a maximum matching of the
//! bipartite complement gives the colour classes, and its König cover the
//! vertices outside a maximum clique. The central clique is a clique cutset,
//! so the per-piece colourings merge without extra colours.

mod matching;

pub use matching::{max_matching, min_vertex_cover, BipartiteCover, BipartiteGraph, Matching};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{check_representation, Representation};

/// A proper colouring using colours `0..count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    count: usize,
}

impl Coloring {
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut classes = vec![VertexSet::empty(n); self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }

    /// Adjacent vertices differ and every colour in `0..count` is used.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
            && self.classes().iter().all(|c| !c.is_empty())
    }
}

fn require_valid(g: &Graph, r: &Representation) -> Result<()> {
    if check_representation(g, r) {
        Ok(())
    } else {
        Err(Error::Contract(
            "representation does not validate against the graph".into(),
        ))
    }
}

/// First central vertex that has a non-neighbour in every side clique.
fn free_central_vertex(g: &Graph, r: &Representation) -> Option<usize> {
    r.central()
        .iter()
        .find(|&v| r.sides().iter().all(|side| !side.is_subset(g.neighbors(v))))
}

pub fn solve_stable_set(g: &Graph, r: &Representation) -> Result<VertexSet> {
    require_valid(g, r)?;
    let mut stable = VertexSet::empty(g.n());
    match free_central_vertex(g, r) {
        Some(v) => {
            stable.insert(v);
            for side in r.sides() {
                let miss = side
                    .difference(g.neighbors(v))
                    .min()
                    .expect("free vertex misses every side");
                stable.insert(miss);
            }
        }
        None => {
            for side in r.sides() {
                stable.insert(side.min().expect("side cliques are non-empty"));
            }
        }
    }
    Ok(stable)
}

/// Partition of the vertices into the fewest cliques.
pub fn solve_clique_cover(g: &Graph, r: &Representation) -> Result<Vec<VertexSet>> {
    require_valid(g, r)?;
    if free_central_vertex(g, r).is_some() || r.sides().is_empty() {
        let mut cover = Vec::with_capacity(r.side_count() + 1);
        if !r.central().is_empty() {
            cover.push(r.central().clone());
        }
        cover.extend(r.sides().iter().cloned());
        return Ok(cover);
    }
    // Every central vertex sees some side clique completely; join it there.
    let mut cover = r.sides().to_vec();
    for v in r.central() {
        let host = r
            .sides()
            .iter()
            .position(|side| side.is_subset(g.neighbors(v)))
            .expect("no free central vertex");
        cover[host].insert(v);
    }
    Ok(cover)
}

/// The bipartite complement of `G[central ∪ side]` between its two cliques.
struct Piece {
    central: Vec<usize>,
    side: Vec<usize>,
    complement: BipartiteGraph,
    matching: Matching,
}

impl Piece {
    fn new(g: &Graph, central: &[usize], side: &VertexSet) -> Piece {
        let side: Vec<usize> = side.to_vec();
        let mut complement = BipartiteGraph::new(central.len(), side.len());
        for (a, &c) in central.iter().enumerate() {
            let row = g.neighbors(c);
            for (b, &s) in side.iter().enumerate() {
                if !row.contains(s) {
                    complement.add_edge(a, b);
                }
            }
        }
        let matching = max_matching(&complement);
        Piece {
            central: central.to_vec(),
            side,
            complement,
            matching,
        }
    }

    /// Clique number (and chromatic number) of the piece.
    fn omega(&self) -> usize {
        self.central.len() + self.side.len() - self.matching.len()
    }

    fn max_clique(&self, n: usize) -> VertexSet {
        let cover = min_vertex_cover(&self.complement, &self.matching);
        let central = self
            .central
            .iter()
            .enumerate()
            .filter(|&(a, _)| !cover.left.contains(a));
        let side = self
            .side
            .iter()
            .enumerate()
            .filter(|&(b, _)| !cover.right.contains(b));
        VertexSet::from_vertices(n, central.chain(side).map(|(_, &v)| v))
    }
}

fn pieces(g: &Graph, r: &Representation) -> (Vec<usize>, Vec<Piece>) {
    let central = r.central().to_vec();
    let pieces = r
        .sides()
        .iter()
        .map(|side| Piece::new(g, &central, side))
        .collect();
    (central, pieces)
}

pub fn solve_max_clique(g: &Graph, r: &Representation) -> Result<VertexSet> {
    require_valid(g, r)?;
    let (_, pieces) = pieces(g, r);
    // Lowest index wins ties.
    let best = pieces
        .iter()
        .enumerate()
        .max_by_key(|&(i, p)| (p.omega(), std::cmp::Reverse(i)));
    Ok(match best {
        Some((_, piece)) => piece.max_clique(g.n()),
        None => r.central().clone(),
    })
}

/// Colours central vertex `central[i]` with `i`. In each piece a side vertex
/// matched to a central vertex in the bipartite complement shares its colour;
/// unmatched side vertices take fresh colours `|C0|, |C0| + 1, ...`, reused
/// across pieces since distinct side cliques are non-adjacent.
pub fn solve_coloring(g: &Graph, r: &Representation) -> Result<Coloring> {
    require_valid(g, r)?;
    let (central, pieces) = pieces(g, r);
    let mut colors = vec![usize::MAX; g.n()];
    for (i, &c) in central.iter().enumerate() {
        colors[c] = i;
    }
    let mut count = central.len();
    for piece in &pieces {
        let mut fresh = central.len();
        for (b, &s) in piece.side.iter().enumerate() {
            colors[s] = match piece.matching.mate_of_right(b) {
                Some(a) => a,
                None => {
                    fresh += 1;
                    fresh - 1
                }
            };
        }
        count = count.max(fresh);
    }
    Ok(Coloring { colors, count })
}
