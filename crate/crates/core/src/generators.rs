//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 seeded with the 64-bit `seed`. Each
//! structural choice draws from its own ChaCha stream, so for example changing
//! the cross-edge probability leaves the planted partition unchanged.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognition::{GsgCertificate, Representation};

const STREAM_LABELS: u64 = 0;
const STREAM_SIDE_SIZES: u64 = 1;
const STREAM_CROSS_EDGES: u64 = 2;
const STREAM_COMPLEMENT: u64 = 3;

fn stream(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

/// Whether [`gen_gsg`] complements the planted unipolar graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Complement {
    Never,
    Always,
    /// Fair coin drawn from the seed.
    #[default]
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub n: usize,
    pub seed: u64,
    /// Fraction of vertices placed in the central clique.
    pub central_fraction: f64,
    /// Mean side-clique size; sizes are geometric on `1, 2, ...`.
    pub mean_side_size: f64,
    /// Probability of each central–side edge.
    pub p_cross: f64,
    pub complement: Complement,
}

impl Default for GenParams {
    /// About `n^2 / 4` edges: half the vertices central, cross edges with
    /// probability one half, side cliques of mean size 2.
    fn default() -> Self {
        GenParams {
            n: 0,
            seed: 0,
            central_fraction: 0.5,
            mean_side_size: 2.0,
            p_cross: 0.5,
            complement: Complement::Random,
        }
    }
}

impl GenParams {
    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, x: f64| {
            if (0.0..=1.0).contains(&x) {
                Ok(())
            } else {
                Err(Error::Contract(format!("{name} = {x} is outside [0, 1]")))
            }
        };
        unit("central fraction", self.central_fraction)?;
        unit("cross-edge probability", self.p_cross)?;
        if self.mean_side_size.is_nan() || self.mean_side_size < 1.0 {
            return Err(Error::Contract(format!(
                "mean side-clique size {} is below 1",
                self.mean_side_size
            )));
        }
        Ok(())
    }
}

/// A unipolar graph with a planted representation.
///
/// Panics if `params` fails [`GenParams::validate`].
pub fn gen_unipolar(params: &GenParams) -> (Graph, Representation) {
    if let Err(e) = params.validate() {
        panic!("invalid generator parameters: {e}");
    }
    let n = params.n;
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut stream(params.seed, STREAM_LABELS));
    let central_size = ((params.central_fraction * n as f64).round() as usize).min(n);
    let (central, periphery) = labels.split_at(central_size);

    let sizes = Geometric::new(1.0 / params.mean_side_size).expect("mean side size >= 1");
    let mut size_rng = stream(params.seed, STREAM_SIDE_SIZES);
    let mut sides: Vec<&[usize]> = Vec::new();
    let mut rest = periphery;
    while !rest.is_empty() {
        let size = (1 + sizes.sample(&mut size_rng) as usize).min(rest.len());
        let (side, tail) = rest.split_at(size);
        sides.push(side);
        rest = tail;
    }

    let mut rows = vec![VertexSet::empty(n); n];
    let mut connect = |u: usize, v: usize| {
        rows[u].insert(v);
        rows[v].insert(u);
    };
    for clique in std::iter::once(central).chain(sides.iter().copied()) {
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                connect(u, v);
            }
        }
    }
    let mut cross = stream(params.seed, STREAM_CROSS_EDGES);
    for &c in central {
        for &s in periphery {
            if cross.random_bool(params.p_cross) {
                connect(c, s);
            }
        }
    }

    let planted = Representation::new(
        VertexSet::from_vertices(n, central.iter().copied()),
        sides
            .iter()
            .map(|s| VertexSet::from_vertices(n, s.iter().copied()))
            .collect(),
    );
    (Graph::from_rows(rows), planted)
}

/// A generalised split graph: a planted unipolar graph, complemented according
/// to `params.complement`. The certificate carries the planted representation
/// on the side it was planted.
pub fn gen_gsg(params: &GenParams) -> (Graph, GsgCertificate) {
    let (g, planted) = gen_unipolar(params);
    let flip = match params.complement {
        Complement::Never => false,
        Complement::Always => true,
        Complement::Random => stream(params.seed, STREAM_COMPLEMENT).random_bool(0.5),
    };
    if flip {
        (g.complement(), GsgCertificate::new(None, Some(planted)))
    } else {
        (g, GsgCertificate::new(Some(planted), None))
    }
}

/// Erdős–Rényi `G(n, p)`, pairs drawn in lexicographic order.
pub fn gen_gnp(n: usize, prob: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&prob),
        "edge probability {prob} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(prob) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    Graph::from_rows(rows)
}

/// Toggles `flips` distinct vertex pairs chosen uniformly from the seed.
/// Applying the same call twice restores the input.
pub fn perturb(g: &Graph, flips: usize, seed: u64) -> Graph {
    let n = g.n();
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(flips <= pairs, "cannot flip {flips} of {pairs} pairs");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = index::sample(&mut rng, pairs, flips).into_vec();
    chosen.sort_unstable();

    let mut rows: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let (mut u, mut row_start) = (0, 0);
    for k in chosen {
        while k >= row_start + (n - 1 - u) {
            row_start += n - 1 - u;
            u += 1;
        }
        let v = u + 1 + (k - row_start);
        if !rows[u].remove(v) {
            rows[u].insert(v);
        }
        if !rows[v].remove(u) {
            rows[v].insert(u);
        }
    }
    Graph::from_rows(rows)
}

/// The graph on `0..n` whose edges are the set bits of `mask`, bit `k` being
/// the `k`-th pair `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(
        n,
        pairs
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e),
    )
    .expect("pairs are in range")
}

/// Every labeled graph on `0..n`. Requires `n <= 11`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "too many labeled graphs on {n} vertices");
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask))
}
