//! Recognition of unipolar and generalised split graphs.
//!
//! The pipeline has three stages:
//!
//! 1. [`indep`] finds a maximal independent set that is at least as large as
//!    the side-clique count of every representation.
//! 2. [`blocks`] uses that set to build at most two candidate partitions of
//!    the vertex set ([`test`]).
//! 3. [`verify`] decides, through a 2-SAT instance, whether a partition is a
//!    block decomposition of some representation, and extracts one if so.
//!
//! Every stage is `O(n^2)`.

mod blocks;
mod indep;
mod verify;

pub use blocks::{blocks, test};
pub use indep::{antiedge, indep, AntiEdge, IndepResult, IndepStats};
pub use verify::{block_formula, verify, BlockAssignment};

use crate::graph::{Graph, VertexSet};

/// A unipolar representation: a central clique plus pairwise non-adjacent
/// side cliques that together partition the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    central: VertexSet,
    sides: Vec<VertexSet>,
}

impl Representation {
    pub fn new(central: VertexSet, sides: Vec<VertexSet>) -> Self {
        Representation { central, sides }
    }

    pub fn from_vertex_lists(n: usize, central: &[usize], sides: &[Vec<usize>]) -> Self {
        Representation {
            central: VertexSet::from_vertices(n, central.iter().copied()),
            sides: sides
                .iter()
                .map(|s| VertexSet::from_vertices(n, s.iter().copied()))
                .collect(),
        }
    }

    pub fn central(&self) -> &VertexSet {
        &self.central
    }

    pub fn sides(&self) -> &[VertexSet] {
        &self.sides
    }

    /// Number of side cliques.
    pub fn side_count(&self) -> usize {
        self.sides.len()
    }

    pub fn into_parts(self) -> (VertexSet, Vec<VertexSet>) {
        (self.central, self.sides)
    }
}

/// Checks a representation against a graph without trusting anything about
/// how it was produced.
pub fn check_representation(g: &Graph, r: &Representation) -> bool {
    let n = g.n();
    if r.central.universe() != n || r.sides.iter().any(|s| s.universe() != n) {
        return false;
    }
    let mut covered = r.central.clone();
    for side in &r.sides {
        if side.is_empty() || !side.is_disjoint(&covered) {
            return false;
        }
        covered.union_with(side);
    }
    if covered.len() != n || !g.is_clique(&r.central) {
        return false;
    }
    let periphery = r.central.complement();
    r.sides.iter().all(|side| {
        g.is_clique(side)
            && side
                .iter()
                .all(|v| g.neighbors(v).intersection(&periphery).is_subset(side))
    })
}

/// Representation (if any) together with the instrumentation counters of the
/// independent-set stage.
#[derive(Clone, Debug)]
pub struct Recognition {
    pub representation: Option<Representation>,
    pub stats: IndepStats,
}

/// Returns a representation of `g` if and only if `g` is unipolar.
pub fn recognise(g: &Graph) -> Option<Representation> {
    recognise_with_stats(g).representation
}

pub fn recognise_with_stats(g: &Graph) -> Recognition {
    let found = indep::indep(g);
    Recognition {
        representation: blocks::blocks_unchecked(g, &found.set),
        stats: found.stats,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GsgVerdict {
    Unipolar,
    CoUnipolar,
    Both,
    Neither,
}

impl GsgVerdict {
    pub fn from_sides(unipolar: bool, co_unipolar: bool) -> Self {
        match (unipolar, co_unipolar) {
            (true, true) => GsgVerdict::Both,
            (true, false) => GsgVerdict::Unipolar,
            (false, true) => GsgVerdict::CoUnipolar,
            (false, false) => GsgVerdict::Neither,
        }
    }

    pub fn is_generalised_split(self) -> bool {
        self != GsgVerdict::Neither
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GsgVerdict::Unipolar => "unipolar",
            GsgVerdict::CoUnipolar => "co-unipolar",
            GsgVerdict::Both => "both",
            GsgVerdict::Neither => "neither",
        }
    }
}

/// Outcome of testing a graph and its complement for unipolarity.
#[derive(Clone, Debug)]
pub struct GsgCertificate {
    pub verdict: GsgVerdict,
    /// Representation of the graph itself.
    pub unipolar: Option<Representation>,
    /// Representation of the complement.
    pub co_unipolar: Option<Representation>,
}

impl GsgCertificate {
    pub fn new(unipolar: Option<Representation>, co_unipolar: Option<Representation>) -> Self {
        GsgCertificate {
            verdict: GsgVerdict::from_sides(unipolar.is_some(), co_unipolar.is_some()),
            unipolar,
            co_unipolar,
        }
    }

    /// Checks every included representation against `g` or its complement.
    pub fn validates(&self, g: &Graph) -> bool {
        let primal = self
            .unipolar
            .as_ref()
            .is_none_or(|r| check_representation(g, r));
        let dual = self
            .co_unipolar
            .as_ref()
            .is_none_or(|r| check_representation(&g.complement(), r));
        primal && dual
    }
}

pub fn recognise_gsg(g: &Graph) -> GsgCertificate {
    recognise_gsg_with_stats(g).0
}

/// Like [`recognise_gsg`], also returning the counters of both runs, graph
/// first.
pub fn recognise_gsg_with_stats(g: &Graph) -> (GsgCertificate, [IndepStats; 2]) {
    let primal = recognise_with_stats(g);
    let dual = recognise_with_stats(&g.complement());
    (
        GsgCertificate::new(primal.representation, dual.representation),
        [primal.stats, dual.stats],
    )
}
