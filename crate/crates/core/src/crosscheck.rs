//! Compares every fast routine with the brute-force oracle on one graph.

use crate::error::Result;
use crate::graph::Graph;
use crate::optimizers::{solve_clique_cover, solve_coloring, solve_max_clique, solve_stable_set};
use crate::oracle::Oracle;
use crate::recognition::{check_representation, indep, recognise, recognise_gsg, GsgVerdict};

/// Everything that disagrees with the oracle on `g`, as human-readable lines.
/// An empty vector means full agreement.
pub fn check_graph(oracle: &Oracle, g: &Graph) -> Result<Vec<String>> {
    let mut issues = Vec::new();
    let complement = g.complement();
    let truth = oracle.is_unipolar(g)?.is_some();
    let co_truth = oracle.is_unipolar(&complement)?.is_some();

    let found = indep(g);
    let maximal = g.is_independent(&found.set)
        && (0..g.n()).all(|v| found.set.contains(v) || !g.neighbors(v).is_disjoint(&found.set));
    if !maximal {
        issues.push(format!("indep returned a non-maximal set {:?}", found.set));
    }
    let s = oracle.s(g)?;
    if found.set.len() < s {
        issues.push(format!("indep size {} below s(G) = {s}", found.set.len()));
    }
    if found.stats.absorptions > g.n() {
        issues.push(format!(
            "{} absorptions on {} vertices",
            found.stats.absorptions,
            g.n()
        ));
    }

    let rep = recognise(g);
    if rep.is_some() != truth {
        issues.push(format!(
            "recognise says {}, oracle says {truth}",
            rep.is_some()
        ));
    }
    if let Some(r) = &rep {
        if !check_representation(g, r) {
            issues.push(format!("invalid certificate {r:?}"));
        }
    }

    let cert = recognise_gsg(g);
    let expected = GsgVerdict::from_sides(truth, co_truth);
    if cert.verdict != expected {
        issues.push(format!(
            "gsg verdict {:?}, oracle {expected:?}",
            cert.verdict
        ));
    }
    if !cert.validates(g) {
        issues.push("gsg certificate does not validate".into());
    }

    if let Some(r) = &rep {
        let clique = solve_max_clique(g, r)?;
        let coloring = solve_coloring(g, r)?;
        let stable = solve_stable_set(g, r)?;
        let cover = solve_clique_cover(g, r)?;
        let (omega, chi) = (oracle.omega(g)?, oracle.chi(g)?);
        let (alpha, theta) = (oracle.alpha(g)?, oracle.cover(g)?);
        if !g.is_clique(&clique) || clique.len() != omega {
            issues.push(format!("max clique {clique:?}, oracle omega {omega}"));
        }
        if !coloring.is_proper(g) || coloring.count() != chi {
            issues.push(format!(
                "colouring with {} colours, oracle chi {chi}",
                coloring.count()
            ));
        }
        if !g.is_independent(&stable) || stable.len() != alpha {
            issues.push(format!("stable set {stable:?}, oracle alpha {alpha}"));
        }
        let partitions = cover.iter().map(|c| c.len()).sum::<usize>() == g.n()
            && cover
                .iter()
                .fold(g.vertices().complement(), |acc, c| acc.union(c))
                == g.vertices();
        if !partitions || !cover.iter().all(|c| g.is_clique(c)) || cover.len() != theta {
            issues.push(format!(
                "clique cover of size {}, oracle {theta}",
                cover.len()
            ));
        }
    }
    Ok(issues)
}
