use gsplit::recognition::IndepStats;
use gsplit::{check_representation, Graph, GsgVerdict, Representation};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Unipolar,
    CoUnipolar,
    Both,
    Neither,
    NotUnipolar,
}

impl From<GsgVerdict> for Verdict {
    fn from(v: GsgVerdict) -> Self {
        match v {
            GsgVerdict::Unipolar => Verdict::Unipolar,
            GsgVerdict::CoUnipolar => Verdict::CoUnipolar,
            GsgVerdict::Both => Verdict::Both,
            GsgVerdict::Neither => Verdict::Neither,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub adjacency_tests: usize,
    pub absorptions: usize,
}

impl From<IndepStats> for Counters {
    fn from(s: IndepStats) -> Self {
        Counters {
            adjacency_tests: s.adjacency_tests,
            absorptions: s.absorptions,
        }
    }
}

/// The JSON object printed by `recognise`.
///
/// `central` and `side_cliques` describe a representation of the input graph
/// when the verdict is `unipolar` or `both`, and of its complement when it is
/// `co-unipolar`. They are `null` otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub verdict: Verdict,
    pub central: Option<Vec<usize>>,
    pub side_cliques: Option<Vec<Vec<usize>>>,
    pub counters: Counters,
    pub wall_ms: f64,
    pub n: usize,
    pub m: usize,
}

impl CertificateDocument {
    pub fn new(
        g: &Graph,
        verdict: Verdict,
        representation: Option<&Representation>,
        counters: Counters,
        wall_ms: f64,
    ) -> Self {
        CertificateDocument {
            verdict,
            central: representation.map(|r| r.central().to_vec()),
            side_cliques: representation.map(|r| r.sides().iter().map(|s| s.to_vec()).collect()),
            counters,
            wall_ms,
            n: g.n(),
            m: g.m(),
        }
    }

    /// The recorded representation, if the verdict claims one.
    pub fn representation(&self) -> Option<Representation> {
        let (central, sides) = (self.central.as_ref()?, self.side_cliques.as_ref()?);
        let in_range = central
            .iter()
            .chain(sides.iter().flatten())
            .all(|&v| v < self.n);
        in_range.then(|| Representation::from_vertex_lists(self.n, central, sides))
    }

    /// The document describes `g`, and any representation it claims is valid
    /// for `g` (or for its complement, on a `co-unipolar` verdict).
    pub fn validates(&self, g: &Graph) -> bool {
        if self.n != g.n() || self.m != g.m() {
            return false;
        }
        let claims = matches!(
            self.verdict,
            Verdict::Unipolar | Verdict::CoUnipolar | Verdict::Both
        );
        match (claims, self.representation()) {
            (false, None) => self.central.is_none() && self.side_cliques.is_none(),
            (true, Some(r)) if self.verdict == Verdict::CoUnipolar => {
                check_representation(&g.complement(), &r)
            }
            (true, Some(r)) => check_representation(g, &r),
            _ => false,
        }
    }
}
