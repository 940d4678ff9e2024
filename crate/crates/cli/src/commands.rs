use std::fs;
use std::hash::Hasher;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::ValueEnum as _;
use fnv::FnvHasher;
use gsplit::crosscheck::check_graph;
use gsplit::generators::{self, Complement, GenParams};
use gsplit::optimizers::{solve_clique_cover, solve_coloring, solve_max_clique, solve_stable_set};
use gsplit::oracle::Oracle;
use gsplit::recognition::{recognise_gsg_with_stats, recognise_with_stats};
use gsplit::{Graph, GsgVerdict, Representation, VertexSet};
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::certificate::{CertificateDocument, Counters, Verdict};
use crate::formats::{self, ParseError};
use crate::{
    BenchArgs, Cli, Command, ComplementArg, GenArgs, InputArgs, Kind, OracleCheckArgs, Problem,
    RecogniseArgs, SolveArgs,
};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

type Outcome = Result<u8, CliError>;

/// Runs one parsed command line, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let outcome = match cli.command {
        Command::Recognise(a) => recognise(&a, out),
        Command::Solve(a) => solve(&a, out, err),
        Command::Gen(a) => gen(&a, out),
        Command::Bench(a) => bench(&a, out),
        Command::OracleCheck(a) => oracle_check(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn stdout_error(e: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, CliError> {
    let io_error = |source| CliError::Io {
        path: input.file.clone(),
        source,
    };
    let text = if input.file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_error)?;
        s
    } else {
        fs::read_to_string(&input.file).map_err(io_error)?
    };
    formats::parse(&text, input.format).map_err(|source| CliError::Parse {
        path: input.file.clone(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("documents serialize")
}

fn recognise(args: &RecogniseArgs, out: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.input)?;
    let start = Instant::now();
    let doc = if args.gsg {
        let (cert, [primal, dual]) = recognise_gsg_with_stats(&g);
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let rep = cert.unipolar.as_ref().or(cert.co_unipolar.as_ref());
        CertificateDocument::new(
            &g,
            cert.verdict.into(),
            rep,
            (primal + dual).into(),
            wall_ms,
        )
    } else {
        let found = recognise_with_stats(&g);
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let verdict = if found.representation.is_some() {
            Verdict::Unipolar
        } else {
            Verdict::NotUnipolar
        };
        CertificateDocument::new(
            &g,
            verdict,
            found.representation.as_ref(),
            found.stats.into(),
            wall_ms,
        )
    };
    let json = to_json(&doc);
    if let Some(path) = &args.certificate {
        write_file(path, &format!("{json}\n"))?;
    }
    writeln!(out, "{json}").map_err(stdout_error)?;
    Ok(match doc.verdict {
        Verdict::Neither | Verdict::NotUnipolar => EXIT_NO,
        _ => EXIT_YES,
    })
}

fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
    v.iter().map(VertexSet::to_vec).collect()
}

fn solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let g = read_graph(&args.input)?;
    let solved = |h: &Graph, r: &Representation, problem: Problem| -> gsplit::Result<_> {
        Ok(match problem {
            Problem::Clique => json!(solve_max_clique(h, r)?.to_vec()),
            Problem::StableSet => json!(solve_stable_set(h, r)?.to_vec()),
            Problem::Coloring => json!(sets(&solve_coloring(h, r)?.classes())),
            Problem::CliqueCover => json!(sets(&solve_clique_cover(h, r)?)),
        })
    };
    let contract = |e: gsplit::Error| CliError::Usage(e.to_string());

    let start = Instant::now();
    let (via, witness) = if let Some(r) = recognise_with_stats(&g).representation {
        ("graph", solved(&g, &r, args.problem).map_err(contract)?)
    } else {
        let h = g.complement();
        let Some(r) = recognise_with_stats(&h).representation else {
            writeln!(err, "graph is not a generalised split graph").map_err(stdout_error)?;
            return Ok(EXIT_NO);
        };
        // Cliques of the complement are stable sets of the graph and its
        // colour classes are cliques of the graph.
        let dual = match args.problem {
            Problem::Clique => Problem::StableSet,
            Problem::StableSet => Problem::Clique,
            Problem::Coloring => Problem::CliqueCover,
            Problem::CliqueCover => Problem::Coloring,
        };
        ("complement", solved(&h, &r, dual).map_err(contract)?)
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let size = witness.as_array().map_or(0, Vec::len);
    let name = args
        .problem
        .to_possible_value()
        .expect("no skipped variants");
    let doc = json!({
        "problem": name.get_name(),
        "size": size,
        "via": via,
        "witness": witness,
        "wall_ms": wall_ms,
    });
    writeln!(out, "{doc}").map_err(stdout_error)?;
    Ok(EXIT_YES)
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> Outcome {
    let params = GenParams {
        n: args.n,
        seed: args.seed,
        central_fraction: args.central_fraction,
        mean_side_size: args.mean_side_size,
        p_cross: args.p_cross,
        complement: match args.complement {
            ComplementArg::Never => Complement::Never,
            ComplementArg::Always => Complement::Always,
            ComplementArg::Random => Complement::Random,
        },
    };
    if args.kind != Kind::Gnp {
        params
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let (g, planted) = match args.kind {
        Kind::Unipolar => {
            let (g, r) = generators::gen_unipolar(&params);
            (g, Some((Verdict::Unipolar, r)))
        }
        Kind::Gsg => {
            let (g, cert) = generators::gen_gsg(&params);
            let planted = match (cert.verdict, cert.unipolar, cert.co_unipolar) {
                (GsgVerdict::CoUnipolar, _, Some(r)) => (Verdict::CoUnipolar, r),
                (_, Some(r), _) => (Verdict::Unipolar, r),
                _ => unreachable!("generated instances carry a planted representation"),
            };
            (g, Some(planted))
        }
        Kind::Gnp => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(CliError::Usage(format!(
                    "edge probability {} is outside [0, 1]",
                    args.p
                )));
            }
            (generators::gen_gnp(args.n, args.p, args.seed), None)
        }
    };
    let g = if args.perturb > 0 {
        let pairs = args.n * args.n.saturating_sub(1) / 2;
        if args.perturb > pairs {
            return Err(CliError::Usage(format!(
                "cannot toggle {} of {pairs} vertex pairs",
                args.perturb
            )));
        }
        generators::perturb(&g, args.perturb, args.seed)
    } else {
        g
    };

    if let Some(path) = &args.certificate {
        let Some((verdict, r)) = planted.as_ref().filter(|_| args.perturb == 0) else {
            return Err(CliError::Usage(
                "only unperturbed unipolar and gsg instances have a planted certificate".into(),
            ));
        };
        let doc = CertificateDocument::new(&g, *verdict, Some(r), Counters::default(), 0.0);
        write_file(path, &format!("{}\n", to_json(&doc)))?;
    }
    let text = formats::write(&g, args.format);
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes()).map_err(stdout_error)?,
    }
    Ok(EXIT_YES)
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

fn hash_graph(h: &mut FnvHasher, g: &Graph) {
    h.write_u64(g.n() as u64);
    for (u, v) in g.edges() {
        h.write_u64(u as u64);
        h.write_u64(v as u64);
    }
}

fn time_recognise(g: &Graph) -> f64 {
    let start = Instant::now();
    std::hint::black_box(recognise_with_stats(std::hint::black_box(g)));
    start.elapsed().as_secs_f64() * 1e3
}

/// Planted positives of size `n` come from seeds `seed + rep`; each negative is
/// its positive with `n` vertex pairs toggled.
fn bench(args: &BenchArgs, out: &mut dyn Write) -> Outcome {
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be positive".into()));
    }
    if args.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("--sizes must be strictly ascending".into()));
    }
    let mut emit = |line: String| writeln!(out, "{line}").map_err(stdout_error);
    emit(format!(
        "{:>8} {:>5} {:>13} {:>13} {:>7} {:>18}",
        "n", "reps", "positive_ms", "negative_ms", "ratio", "instances"
    ))?;
    let mut previous: Option<f64> = None;
    for &n in &args.sizes {
        let mut hasher = FnvHasher::default();
        let (mut positive, mut negative) = (Vec::new(), Vec::new());
        for rep in 0..args.reps as u64 {
            let seed = args.seed.wrapping_add(rep);
            let (g, _) = generators::gen_unipolar(&GenParams {
                n,
                seed,
                ..GenParams::default()
            });
            let flips = n.min(n * n.saturating_sub(1) / 2);
            let bad = generators::perturb(&g, flips, seed);
            hash_graph(&mut hasher, &g);
            hash_graph(&mut hasher, &bad);
            positive.push(time_recognise(&g));
            negative.push(time_recognise(&bad));
        }
        let pos = median(positive);
        let ratio = previous.map_or("-".to_string(), |p| format!("{:.2}", pos / p));
        previous = Some(pos);
        emit(format!(
            "{n:>8} {:>5} {pos:>13.3} {:>13.3} {ratio:>7} {:>18}",
            args.reps,
            median(negative),
            format!("{:016x}", hasher.finish())
        ))?;
    }
    Ok(EXIT_YES)
}

const MAX_REPORTED: usize = 10;

fn oracle_check(args: &OracleCheckArgs, out: &mut dyn Write) -> Outcome {
    let oracle = Oracle::default();
    let exhaustive_limit = 11.min(oracle.limits.max_n);
    if args.max_n > exhaustive_limit {
        return Err(CliError::Usage(format!(
            "--max-n {} exceeds the exhaustive limit {exhaustive_limit}",
            args.max_n
        )));
    }
    if args.samples > 0 && args.sample_n > oracle.limits.max_n {
        return Err(CliError::Usage(format!(
            "--sample-n {} exceeds the oracle limit {}",
            args.sample_n, oracle.limits.max_n
        )));
    }
    if let Some(p) = args.sample_p.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(CliError::Usage(format!(
            "edge probability {p} is outside [0, 1]"
        )));
    }

    let mut total = 0usize;
    let mut mismatches = 0usize;
    let mut emit = |line: String| writeln!(out, "{line}").map_err(stdout_error);
    let mut sweep = |label: String,
                     graphs: Vec<Graph>,
                     emit: &mut dyn FnMut(String) -> Result<(), CliError>|
     -> Result<(), CliError> {
        let reports: Vec<Vec<String>> = graphs
            .par_iter()
            .map(|g| check_graph(&oracle, g).unwrap_or_else(|e| vec![e.to_string()]))
            .collect();
        let bad: Vec<usize> = (0..graphs.len())
            .filter(|&i| !reports[i].is_empty())
            .collect();
        emit(format!(
            "{label}: {} graphs, {} mismatches",
            graphs.len(),
            bad.len()
        ))?;
        for &i in bad.iter().take(MAX_REPORTED.saturating_sub(mismatches)) {
            emit(format!("mismatch on graph {i} of {label}:"))?;
            for issue in &reports[i] {
                emit(format!("  {issue}"))?;
            }
            for line in formats::write_edgelist(&graphs[i]).lines() {
                emit(format!("  | {line}"))?;
            }
        }
        total += graphs.len();
        mismatches += bad.len();
        Ok(())
    };

    for n in 0..=args.max_n {
        let graphs = generators::all_labeled_graphs(n).collect();
        sweep(format!("exhaustive n={n}"), graphs, &mut emit)?;
    }
    if args.samples > 0 {
        for (k, &p) in args.sample_p.iter().enumerate() {
            let base = args.seed.wrapping_add((k as u64) << 32);
            let graphs = (0..args.samples as u64)
                .map(|i| generators::gen_gnp(args.sample_n, p, base.wrapping_add(i)))
                .collect();
            sweep(
                format!("sampled n={} p={p}", args.sample_n),
                graphs,
                &mut emit,
            )?;
        }
    }
    emit(format!("total: {total} graphs, {mismatches} mismatches"))?;
    Ok(if mismatches == 0 { EXIT_YES } else { EXIT_NO })
}
