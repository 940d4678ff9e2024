//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fails.
//!
//! Run alone with `cargo test -p gsplit --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gsplit::generators::{all_labeled_graphs, gen_gnp, gen_unipolar, GenParams};
use gsplit::optimizers::{
    max_matching, min_vertex_cover, solve_clique_cover, solve_coloring, solve_max_clique,
    solve_stable_set, BipartiteGraph,
};
use gsplit::oracle::{
    oracle_2sat, oracle_alpha, oracle_chi, oracle_cover, oracle_is_unipolar, oracle_matching_size,
    oracle_omega, oracle_representations, oracle_s,
};
use gsplit::recognition::{antiedge, indep, recognise_with_stats, AntiEdge};
use gsplit::twosat::{Literal, TwoSatFormula};
use gsplit::{
    check_representation, recognise, recognise_gsg, Graph, GsgVerdict, Representation, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Documented bound: the completeness scans of `indep` make at most
/// `ADJACENCY_C * n^2` adjacency tests on planted instances.
const ADJACENCY_C: f64 = 0.5;
const RATIO_BAND: (f64, f64) = (2.5, 6.0);
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(300);
const SAMPLES_PER_P: u64 = 10_000;
const EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(violations: &[String], detail: String) -> Outcome {
    let mut detail = detail;
    if let Some(first) = violations.first() {
        detail = format!("{detail}; {} violations, first: {first}", violations.len());
    }
    Outcome {
        pass: violations.is_empty(),
        detail,
    }
}

fn sampled_corpus() -> Vec<(f64, Graph)> {
    let mut corpus = Vec::new();
    for (k, &p) in EDGE_PROBABILITIES.iter().enumerate() {
        for i in 0..SAMPLES_PER_P {
            corpus.push((p, gen_gnp(10, p, (k as u64) << 32 | i)));
        }
    }
    corpus
}

fn verdict_issues(g: &Graph, label: &str, out: &mut Vec<String>) {
    let truth = oracle_is_unipolar(g).unwrap().is_some();
    let co_truth = oracle_is_unipolar(&g.complement()).unwrap().is_some();
    let rep = recognise(g);
    if rep.is_some() != truth {
        out.push(format!(
            "{label}: recognise {} vs oracle {truth}",
            rep.is_some()
        ));
    }
    if let Some(r) = &rep {
        if !check_representation(g, r) {
            out.push(format!("{label}: invalid certificate {r:?}"));
        }
    }
    let cert = recognise_gsg(g);
    if cert.verdict != GsgVerdict::from_sides(truth, co_truth) {
        out.push(format!("{label}: gsg verdict {:?}", cert.verdict));
    }
    if !cert.validates(g) {
        out.push(format!("{label}: gsg certificate invalid"));
    }
}

fn exhaustive_equivalence() -> Outcome {
    let start = Instant::now();
    let mut issues = Vec::new();
    let mut count = 0;
    for g in all_labeled_graphs(6) {
        verdict_issues(&g, &format!("{g:?}"), &mut issues);
        count += 1;
    }
    let elapsed = start.elapsed();
    if elapsed > EXHAUSTIVE_BUDGET {
        issues.push(format!("took {elapsed:?}, budget {EXHAUSTIVE_BUDGET:?}"));
    }
    outcome(
        &issues,
        format!(
            "{count} graphs on 6 vertices in {:.1} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn sampled_equivalence(corpus: &[(f64, Graph)]) -> Outcome {
    let mut issues = Vec::new();
    for (i, (p, g)) in corpus.iter().enumerate() {
        verdict_issues(g, &format!("sample {i} (p = {p})"), &mut issues);
    }
    outcome(
        &issues,
        format!(
            "{} graphs G(10, p), p in {EDGE_PROBABILITIES:?}",
            corpus.len()
        ),
    )
}

/// Greedy clique inside `within`, scanning from the highest vertex down.
fn greedy_clique(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut clique = VertexSet::empty(g.n());
    for v in within.to_vec().into_iter().rev() {
        if clique.is_subset(g.neighbors(v)) {
            clique.insert(v);
        }
    }
    clique
}

fn antiedge_issues(g: &Graph, within: &VertexSet, seed: &VertexSet) -> Option<String> {
    let (edge, grown) = antiedge(g, within, seed).unwrap();
    let ok = match edge {
        AntiEdge::Complete => g.is_clique(within) && grown == *within,
        AntiEdge::NonEdge(u, v) => {
            !g.is_clique(within)
                && grown.contains(u)
                && within.contains(v)
                && !grown.contains(v)
                && !g.has_edge(u, v)
                && seed.is_subset(&grown)
                && grown.is_subset(within)
                && g.is_clique(&grown)
        }
    };
    (!ok).then(|| format!("antiedge({within:?}, {seed:?}) on {g:?} gave {edge:?}, {grown:?}"))
}

fn invariant_issues(g: &Graph, out: &mut Vec<String>) {
    let n = g.n();
    let found = indep(g);
    let set = &found.set;
    let maximal = g.is_independent(set)
        && (0..n).all(|v| set.contains(v) || !g.neighbors(v).is_disjoint(set));
    if !maximal {
        out.push(format!("indep not maximal on {g:?}: {set:?}"));
    }
    let s = oracle_s(g).unwrap();
    if set.len() < s {
        out.push(format!("|I| = {} < s = {s} on {g:?}", set.len()));
    }
    if found.stats.absorptions > n {
        out.push(format!("{} absorptions on {g:?}", found.stats.absorptions));
    }

    let all = g.vertices();
    let mut tail = all.clone();
    tail.remove(0);
    for (within, seed) in [
        (all.clone(), VertexSet::empty(n)),
        (all.clone(), greedy_clique(g, &all)),
        (tail.clone(), greedy_clique(g, &tail)),
    ] {
        out.extend(antiedge_issues(g, &within, &seed));
    }

    let alpha = oracle_alpha(g).unwrap();
    for r in oracle_representations(g).unwrap() {
        let k = r.side_count();
        if !(k <= alpha && alpha <= k + 1) {
            out.push(format!("s(R) = {k}, alpha = {alpha} on {g:?}"));
        }
    }
}

fn invariant_properties(corpus: &[(f64, Graph)]) -> Outcome {
    let mut issues = Vec::new();
    let mut count = 0;
    for g in all_labeled_graphs(6).chain(corpus.iter().map(|(_, g)| g.clone())) {
        invariant_issues(&g, &mut issues);
        count += 1;
    }
    outcome(
        &issues,
        format!("{count} graphs (exhaustive n = 6 plus samples)"),
    )
}

fn planted(n: usize, seed: u64) -> Graph {
    gen_unipolar(&GenParams {
        n,
        seed,
        ..GenParams::default()
    })
    .0
}

fn adjacency_counter_bound() -> Outcome {
    let mut issues = Vec::new();
    let mut worst: f64 = 0.0;
    for n in [100, 200, 400, 800, 1600] {
        for seed in 0..5 {
            let g = planted(n, seed);
            let tests = recognise_with_stats(&g).stats.adjacency_tests as f64;
            let ratio = tests / (n * n) as f64;
            worst = worst.max(ratio);
            if ratio > ADJACENCY_C {
                issues.push(format!("n = {n}, seed {seed}: {tests} tests"));
            }
        }
    }
    outcome(
        &issues,
        format!("max tests / n^2 = {worst:.4}, c = {ADJACENCY_C}"),
    )
}

fn median_recognise_ms(n: usize, reps: u64) -> f64 {
    let graphs: Vec<Graph> = (0..reps).map(|seed| planted(n, 1000 + seed)).collect();
    // Warm-up.
    assert!(recognise(&graphs[0]).is_some());
    let mut times: Vec<f64> = graphs
        .iter()
        .map(|g| {
            let start = Instant::now();
            let r = std::hint::black_box(recognise(std::hint::black_box(g)));
            let t = start.elapsed().as_secs_f64() * 1e3;
            assert!(r.is_some(), "planted instance rejected");
            t
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn wall_time_ratios() -> Outcome {
    let medians: Vec<(usize, f64)> = [500, 1000, 2000]
        .into_iter()
        .map(|n| (n, median_recognise_ms(n, 9)))
        .collect();
    let mut issues = Vec::new();
    let mut parts = Vec::new();
    for w in medians.windows(2) {
        let ((a, ta), (b, tb)) = (w[0], w[1]);
        let ratio = tb / ta;
        parts.push(format!("T({b})/T({a}) = {ratio:.2}"));
        if !(RATIO_BAND.0..=RATIO_BAND.1).contains(&ratio) {
            issues.push(format!(
                "ratio {ratio:.2} for {a} -> {b} outside {RATIO_BAND:?}"
            ));
        }
    }
    let times: Vec<String> = medians
        .iter()
        .map(|(n, t)| format!("{n}: {t:.2} ms"))
        .collect();
    outcome(
        &issues,
        format!("{} ({})", parts.join(", "), times.join(", ")),
    )
}

fn solver_issues(g: &Graph, r: &Representation, out: &mut Vec<String>) {
    let clique = solve_max_clique(g, r).unwrap();
    let coloring = solve_coloring(g, r).unwrap();
    let stable = solve_stable_set(g, r).unwrap();
    let cover = solve_clique_cover(g, r).unwrap();
    let omega = oracle_omega(g).unwrap();
    let chi = oracle_chi(g).unwrap();
    let alpha = oracle_alpha(g).unwrap();
    let theta = oracle_cover(g).unwrap();

    let mut covered = VertexSet::empty(g.n());
    let mut partition = true;
    for part in &cover {
        partition &= !part.is_empty() && part.is_disjoint(&covered) && g.is_clique(part);
        covered.union_with(part);
    }
    partition &= covered.len() == g.n();

    let checks = [
        (g.is_clique(&clique), "clique witness"),
        (coloring.is_proper(g), "proper colouring"),
        (g.is_independent(&stable), "stable witness"),
        (partition, "clique cover partition"),
        (clique.len() == omega, "omega"),
        (coloring.count() == chi, "chi"),
        (stable.len() == alpha, "alpha"),
        (cover.len() == theta, "clique cover number"),
        (clique.len() == coloring.count(), "omega = chi"),
        (stable.len() == cover.len(), "alpha = theta"),
    ];
    for (ok, what) in checks {
        if !ok {
            out.push(format!("{what} fails on {g:?} with {r:?}"));
        }
    }
}

fn solver_correctness() -> Outcome {
    let mut issues = Vec::new();
    let mut exhaustive = 0;
    for n in 0..=6 {
        for g in all_labeled_graphs(n) {
            if let Some(r) = recognise(&g) {
                solver_issues(&g, &r, &mut issues);
                exhaustive += 1;
            }
        }
    }
    let fractions = [0.25, 0.5, 0.75];
    let crosses = [0.2, 0.5, 0.8];
    for seed in 0..1000u64 {
        let (g, planted) = gen_unipolar(&GenParams {
            n: 8,
            seed,
            central_fraction: fractions[seed as usize % 3],
            p_cross: crosses[seed as usize / 3 % 3],
            ..GenParams::default()
        });
        solver_issues(&g, &planted, &mut issues);
        match recognise(&g) {
            Some(r) => solver_issues(&g, &r, &mut issues),
            None => issues.push(format!("planted n = 8 seed {seed} not recognised")),
        }
    }
    outcome(
        &issues,
        format!("{exhaustive} unipolar graphs with n <= 6, 1000 planted with n = 8"),
    )
}

fn random_formula(rng: &mut ChaCha8Rng) -> TwoSatFormula {
    let vars = rng.random_range(1..=12);
    let clauses = rng.random_range(0..=40);
    let mut f = TwoSatFormula::new(vars);
    for _ in 0..clauses {
        let a = Literal::new(rng.random_range(0..vars), rng.random());
        let b = Literal::new(rng.random_range(0..vars), rng.random());
        f.add_clause(a, b).unwrap();
    }
    f
}

fn two_sat() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2_5a7);
    let mut issues = Vec::new();
    let mut satisfiable = 0;
    for i in 0..10_000 {
        let f = random_formula(&mut rng);
        let fast = f.solve();
        let slow = oracle_2sat(&f).unwrap();
        if fast.is_some() != slow.is_some() {
            issues.push(format!("formula {i}: verdict mismatch on {f:?}"));
        }
        if let Some(a) = fast {
            satisfiable += 1;
            if !a.satisfies(&f) {
                issues.push(format!("formula {i}: assignment falsifies a clause"));
            }
        }
    }
    outcome(
        &issues,
        format!("10000 formulas, {satisfiable} satisfiable"),
    )
}

fn konig() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f);
    let mut issues = Vec::new();
    for i in 0..1000 {
        let total = rng.random_range(0..=12);
        let left = rng.random_range(0..=total);
        let right = total - left;
        let p = rng.random_range(0.05..0.95);
        let mut b = BipartiteGraph::new(left, right);
        let mut masks = vec![0u64; left];
        for (l, mask) in masks.iter_mut().enumerate() {
            for r in 0..right {
                if rng.random_bool(p) {
                    b.add_edge(l, r);
                    *mask |= 1 << r;
                }
            }
        }
        let m = max_matching(&b);
        let cover = min_vertex_cover(&b, &m);
        let expected = oracle_matching_size(&masks);
        if !m.is_valid_for(&b) || m.len() != expected || cover.len() != m.len() || !cover.covers(&b)
        {
            issues.push(format!(
                "graph {i}: matching {}, cover {}, oracle {expected}",
                m.len(),
                cover.len()
            ));
        }
    }
    outcome(
        &issues,
        "1000 bipartite graphs with at most 12 vertices".into(),
    )
}

fn main() -> ExitCode {
    let corpus = sampled_corpus();
    let criteria: [Criterion; 8] = [
        (
            "exhaustive oracle equivalence, n = 6",
            Box::new(exhaustive_equivalence),
        ),
        (
            "sampled oracle equivalence, G(10, p)",
            Box::new(|| sampled_equivalence(&corpus)),
        ),
        (
            "independent-set and antiedge invariants, side-count sandwich",
            Box::new(|| invariant_properties(&corpus)),
        ),
        (
            "adjacency tests <= c n^2 on planted instances",
            Box::new(adjacency_counter_bound),
        ),
        (
            "recognise wall-time ratios T(2n)/T(n)",
            Box::new(wall_time_ratios),
        ),
        (
            "solver correctness and perfection identities",
            Box::new(solver_correctness),
        ),
        ("2-SAT against enumeration", Box::new(two_sat)),
        ("König cover equals maximum matching", Box::new(konig)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} {name}: {} [{:.1} s]",
            result.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!result.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
