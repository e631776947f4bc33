//! Command-line front end: solve / verify / bound / generate / reduce.
//!
//! Exit codes: 0 success (for `verify`: cover is valid), 1 invalid cover,
//! 2 precondition violation, 3 parse or I/O error, 4 oracle size cap
//! exceeded, 5 internal verification failure (a solver returned a set that
//! does not verify — always a bug).
//!
//! Identical (input, algorithm, k, seed) produce byte-identical stdout;
//! wall-clock timing goes to stderr, and in `--json` mode into the single
//! JSON object as `elapsed_ms`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use kpvc::approx::{caro_wei_cover, greedy_k_approx, sparse3, subcubic_cover3};
use kpvc::bounds::bound_report;
use kpvc::error::Error;
use kpvc::exact::psi_exact;
use kpvc::generate::{gen_family, gen_random_mop, reduce_vc_to_kpvc};
use kpvc::outerplanar::{outerplanar_cover3, parse_mop, serialize_mop};
use kpvc::partition::cover3_via_partition;
use kpvc::tree::pvcp_tree;
use kpvc::{delete_vertices, find_path_of_order, is_k_path_cover};
use kpvc::{parse_edge_list, serialize_edge_list, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "kpvc", version, about = "Minimum k-path vertex cover toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a solver and print the verified cover
    Solve {
        /// One of: exact, tree, greedy, subcubic, sparse3, carowei, partition, outerplanar
        #[arg(long)]
        algo: String,
        #[arg(long)]
        k: usize,
        /// Seed for carowei (default 0)
        #[arg(long, conflicts_with = "seeds")]
        seed: Option<u64>,
        /// Seed sweep for carowei as a half-open range A..B; keeps the
        /// smallest cover, lowest seed on ties
        #[arg(long)]
        seeds: Option<String>,
        /// Override the exact oracle's instance size cap (default 20)
        #[arg(long)]
        cap: Option<usize>,
        /// Emit the run record as a single JSON object
        #[arg(long)]
        json: bool,
        /// Edge-list file, or an embedding file for --algo outerplanar
        input: PathBuf,
    },
    /// Check whether a vertex set is a k-path vertex cover
    Verify {
        #[arg(long)]
        k: usize,
        /// File of whitespace-separated vertex indices ('#' comments allowed)
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        json: bool,
        input: PathBuf,
    },
    /// Print the degree-based upper bounds applicable to k
    Bound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
        input: PathBuf,
    },
    /// Write a generated instance to a file.
    ///
    /// Families: path N, cycle N, star N, complete N, random_tree N,
    /// tight_sparse3 X Y, h6, random_mop N (embedding format)
    Generate {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the vertex-cover-to-k-path-cover gadget for an input graph
    Reduce {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
        input: PathBuf,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        Failure {
            code,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => 3,
            Error::InstanceTooLarge { .. } => 4,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(3, format!("cannot read {}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, format!("{text}\n"))
        .map_err(|e| Failure::new(3, format!("cannot write {}: {e}", path.display())))
}

fn main() {
    let cli = Cli::parse();
    if let Err(f) = run(cli.cmd) {
        eprintln!("error: {}", f.msg);
        std::process::exit(f.code);
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Solve {
            algo,
            k,
            seed,
            seeds,
            cap,
            json,
            input,
        } => cmd_solve(&algo, k, seed, seeds.as_deref(), cap, json, &input),
        Cmd::Verify {
            k,
            cover,
            json,
            input,
        } => cmd_verify(k, &cover, json, &input),
        Cmd::Bound { k, json, input } => cmd_bound(k, json, &input),
        Cmd::Generate {
            family,
            params,
            seed,
            out,
            json,
        } => cmd_generate(&family, &params, seed, &out, json),
        Cmd::Reduce { k, out, json, input } => cmd_reduce(k, &out, json, &input),
    }
}

fn cmd_solve(
    algo: &str,
    k: usize,
    seed: Option<u64>,
    seeds: Option<&str>,
    cap: Option<usize>,
    json: bool,
    input: &Path,
) -> Result<(), Failure> {
    if k == 0 {
        return Err(Failure::new(2, "k must be at least 1"));
    }
    let started = Instant::now();
    let text = read(input)?;

    // the graph the cover is verified against, the cover, and bookkeeping
    let (graph, cover, used_seed, note): (Graph, VertexSet, Option<u64>, Option<&str>);

    if algo == "outerplanar" {
        let rep = parse_mop(&text)?;
        let g = rep.graph();
        if k == 1 {
            (graph, cover, used_seed, note) = (g.clone(), all_of(&g), None, Some(NOTE_K1));
        } else if k != 3 {
            return Err(Failure::new(2, "outerplanar solves k = 3 only"));
        } else {
            let s = outerplanar_cover3(&rep);
            (graph, cover, used_seed, note) = (g, s, None, None);
        }
    } else {
        let g = parse_edge_list(&text)?;
        if k == 1 {
            (graph, cover, used_seed, note) = (g.clone(), all_of(&g), None, Some(NOTE_K1));
        } else {
            let (s, us) = dispatch(algo, &g, k, seed, seeds, cap)?;
            (graph, cover, used_seed, note) = (g, s, us, None);
        }
    }

    // a cover is printed only after it re-verifies; anything else is a bug
    if !is_k_path_cover(&graph, &cover, k)? {
        return Err(Failure::new(
            5,
            format!("internal verification failure: {algo} returned a non-cover"),
        ));
    }
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    if json {
        let record = serde_json::json!({
            "input": input.display().to_string(),
            "algorithm": algo,
            "k": k,
            "size": cover.len(),
            "cover": cover.members(),
            "seed": used_seed,
            "note": note,
            "elapsed_ms": elapsed_ms,
        });
        println!("{record}");
    } else {
        println!("algorithm: {algo}");
        println!("k: {k}");
        if let Some(s) = used_seed {
            println!("seed: {s}");
        }
        println!("size: {}", cover.len());
        println!("cover: {}", join(cover.members()));
        if let Some(n) = note {
            println!("note: {n}");
        }
        eprintln!("elapsed_ms: {elapsed_ms:.3}");
    }
    Ok(())
}

const NOTE_K1: &str = "k = 1: every vertex is itself a forbidden path, so the cover is all of V";

fn all_of(g: &Graph) -> VertexSet {
    g.vertices().collect()
}

fn dispatch(
    algo: &str,
    g: &Graph,
    k: usize,
    seed: Option<u64>,
    seeds: Option<&str>,
    cap: Option<usize>,
) -> Result<(VertexSet, Option<u64>), Failure> {
    if matches!(algo, "subcubic" | "sparse3" | "partition") && k != 3 {
        return Err(Failure::new(2, format!("{algo} solves k = 3 only")));
    }
    match algo {
        "exact" => Ok((psi_exact(g, k, cap)?.cover, None)),
        "tree" => Ok((pvcp_tree(g, k)?, None)),
        "greedy" => Ok((greedy_k_approx(g, k), None)),
        "subcubic" => Ok((subcubic_cover3(g)?, None)),
        "sparse3" => Ok((sparse3(g), None)),
        "partition" => Ok((cover3_via_partition(g), None)),
        "carowei" => {
            if let Some(range) = seeds {
                let (lo, hi) = parse_seed_range(range)?;
                // deterministic aggregation: smallest cover, then lowest seed
                let mut best: Option<(usize, u64, VertexSet)> = None;
                for s in lo..hi {
                    let c = caro_wei_cover(g, k, s);
                    if best.as_ref().is_none_or(|(len, _, _)| c.len() < *len) {
                        best = Some((c.len(), s, c));
                    }
                }
                let (_, s, c) =
                    best.ok_or_else(|| Failure::new(2, "empty seed range"))?;
                Ok((c, Some(s)))
            } else {
                let s = seed.unwrap_or(0);
                Ok((caro_wei_cover(g, k, s), Some(s)))
            }
        }
        other => Err(Failure::new(2, format!("unknown algorithm \"{other}\""))),
    }
}

fn parse_seed_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::new(2, format!("--seeds expects A..B, got \"{text}\""));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: u64 = lo.parse().map_err(|_| bad())?;
    let hi: u64 = hi.parse().map_err(|_| bad())?;
    if lo >= hi {
        return Err(Failure::new(2, "--seeds range must be non-empty"));
    }
    Ok((lo, hi))
}

fn cmd_verify(k: usize, cover_path: &Path, json: bool, input: &Path) -> Result<(), Failure> {
    let g = parse_edge_list(&read(input)?)?;
    let cover = parse_vertex_list(&read(cover_path)?)?;
    let valid = is_k_path_cover(&g, &cover, k)?;

    let witness: Option<Vec<usize>> = if valid {
        None
    } else {
        let (rest, back) = delete_vertices(&g, &cover);
        find_path_of_order(&rest, k)?
            .map(|w| w.vertices().iter().map(|&v| back[v]).collect())
    };

    if json {
        println!(
            "{}",
            serde_json::json!({ "k": k, "valid": valid, "witness": witness })
        );
    } else {
        println!("valid: {valid}");
        if let Some(w) = &witness {
            println!("witness: {}", join(w));
        }
    }
    if valid {
        Ok(())
    } else {
        Err(Failure::new(1, "cover is not a k-path vertex cover"))
    }
}

fn parse_vertex_list(text: &str) -> Result<VertexSet, Failure> {
    let mut vs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| {
                Failure::from(Error::Parse {
                    line: i + 1,
                    msg: format!("malformed vertex index \"{tok}\""),
                })
            })?;
            vs.push(v);
        }
    }
    Ok(VertexSet::from_unsorted(vs))
}

fn cmd_bound(k: usize, json: bool, input: &Path) -> Result<(), Failure> {
    if k < 2 {
        return Err(Failure::new(2, "bounds are defined for k >= 2"));
    }
    let g = parse_edge_list(&read(input)?)?;
    let report = bound_report(&g, k, None);
    if json {
        let sparse3 = report
            .sparse3
            .map(|r| serde_json::json!({ "num": *r.numer(), "den": *r.denom() }));
        println!(
            "{}",
            serde_json::json!({
                "k": k,
                "generalized_caro_wei": report.generalized_cw,
                "caro_wei_vc": report.caro_wei_vc,
                "goering": report.goering,
                "sparse3": sparse3,
            })
        );
    } else {
        println!("k: {k}");
        print!("{report}");
    }
    Ok(())
}

fn cmd_generate(
    family: &str,
    params: &[usize],
    seed: u64,
    out: &Path,
    json: bool,
) -> Result<(), Failure> {
    let (n, m, text) = if family == "random_mop" {
        let &[n] = params else {
            return Err(Failure::new(2, "random_mop takes exactly one parameter"));
        };
        let rep = gen_random_mop(n, seed)?;
        let g = rep.graph();
        (g.n(), g.m(), serialize_mop(&rep))
    } else {
        let g = gen_family(family, params, seed)?;
        (g.n(), g.m(), serialize_edge_list(&g))
    };
    write_out(out, &text)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "family": family,
                "params": params,
                "seed": seed,
                "n": n,
                "m": m,
                "out": out.display().to_string(),
            })
        );
    } else {
        println!("family: {family}");
        println!("n: {n}");
        println!("m: {m}");
        println!("out: {}", out.display());
    }
    Ok(())
}

fn cmd_reduce(k: usize, out: &Path, json: bool, input: &Path) -> Result<(), Failure> {
    let g = parse_edge_list(&read(input)?)?;
    let r = reduce_vc_to_kpvc(&g, k)?;
    let tail = (k - 1) / 2;

    let mut text = String::new();
    writeln!(text, "# gadget for k = {k}: every original vertex v of the").unwrap();
    writeln!(text, "# {}-vertex input keeps its index and grows a tail of", g.n()).unwrap();
    writeln!(text, "# {tail} new vertices {} + v*{tail} .. ; psi_k here equals", g.n()).unwrap();
    writeln!(text, "# the minimum vertex cover of the input").unwrap();
    text.push_str(&serialize_edge_list(&r.gadget));
    write_out(out, &text)?;

    if json {
        println!(
            "{}",
            serde_json::json!({
                "k": k,
                "original_n": g.n(),
                "gadget_n": r.gadget.n(),
                "gadget_m": r.gadget.m(),
                "out": out.display().to_string(),
            })
        );
    } else {
        println!("k: {k}");
        println!("original_n: {}", g.n());
        println!("gadget_n: {}", r.gadget.n());
        println!("gadget_m: {}", r.gadget.m());
        println!("out: {}", out.display());
    }
    Ok(())
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
