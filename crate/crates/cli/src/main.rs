use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_cli::io::{self, StatsRow};
use hurwitz_cli::{CliError, ReferenceSequence, RunConfig};
use hurwitz_core::catalan::{
    alternating_trees, dyck_paths, dyck_polynomial, dyck_statistics, edge_pair_statistics, enumerate_capped,
    statistics_polynomial, tree_polynomial, word_of_tree, DEFAULT_ENUM_CAP,
};
use hurwitz_core::metrics::{build_graph_capped, radius_and_diameter, METRICS_CAP};
use hurwitz_core::typeb::{b_metrics_capped, enumerate_hbn_capped, B_CAP};
use hurwitz_core::verify::{run_suite, Suite};
use hurwitz_core::weak::{maximal_among, HasseDiagram};
use hurwitz_core::MAX_N;

/// Largest `n` for the verification suites by default.
const VERIFY_CAP: usize = 7;
/// Largest semilength / tree size listed by default.
const LISTING_CAP: usize = 12;

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Minimal factorizations of the long cycle and their Hurwitz graph")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Rank parameter.
    #[arg(long)]
    n: usize,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupType {
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// List F_n, one word per line, then `count=N`.
    Enumerate(Common),
    /// Per-word rank and inversion counts as CSV.
    Stats {
        #[command(flatten)]
        common: Common,
        /// Emit the (q,t) polynomial over the maximal words as JSON instead.
        #[arg(long)]
        poly: bool,
    },
    /// DOT export of the Hurwitz graph.
    Graph {
        #[command(flatten)]
        common: Common,
        /// Export the Hasse diagram of the weak order instead.
        #[arg(long)]
        hasse: bool,
    },
    /// Radius, diameter and antipode report as JSON.
    Metrics {
        #[command(flatten)]
        common: Common,
        #[arg(long = "type", value_enum, default_value = "a", ignore_case = true)]
        group: GroupType,
        /// TOML file with reference antipode counts (type B only).
        #[arg(long)]
        ref_seq: Option<PathBuf>,
    },
    /// Run invariant suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Run a single suite.
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
    },
    /// Alternating non-crossing trees on [n] with their words and edge-pair counts.
    Trees {
        #[command(flatten)]
        common: Common,
        /// Emit the (q,t) polynomial as JSON instead.
        #[arg(long)]
        poly: bool,
    },
    /// Dyck paths of semilength n with area and bounce-major statistics.
    Dyck {
        #[command(flatten)]
        common: Common,
        /// Emit the (q,t) polynomial as JSON instead.
        #[arg(long)]
        poly: bool,
    },
    /// List the vertices of the type-B Hurwitz graph H(B_n).
    Typeb(Common),
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

fn config(common: &Common, ref_seq: Option<PathBuf>, cap: usize) -> Result<RunConfig, CliError> {
    let cfg = RunConfig::from_env(common.n, common.threads, common.out.clone(), ref_seq, cap)?;
    cfg.install_thread_pool()?;
    Ok(cfg)
}

fn output(cfg: &RunConfig) -> Result<Box<dyn Write>, CliError> {
    Ok(io::open_output(cfg.out.as_deref())?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate(common) => {
            let cfg = config(&common, None, DEFAULT_ENUM_CAP)?;
            let words = enumerate_capped(cfg.n, cfg.cap.min(MAX_N))?;
            let mut out = output(&cfg)?;
            io::write_listing(&mut *out, &words)?;
            out.flush()?;
        }
        Command::Stats { common, poly } => {
            let cfg = config(&common, None, DEFAULT_ENUM_CAP)?;
            let words = enumerate_capped(cfg.n, cfg.cap.min(MAX_N))?;
            let mut out = output(&cfg)?;
            if poly {
                io::write_json(&mut *out, &statistics_polynomial(&maximal_among(words)))?;
            } else {
                let rows: Vec<StatsRow> = words.iter().map(StatsRow::of).collect();
                io::write_stats_csv(&mut *out, &rows)?;
            }
            out.flush()?;
        }
        Command::Graph { common, hasse } => {
            let cfg = config(&common, None, METRICS_CAP)?;
            let words = enumerate_capped(cfg.n, cfg.cap.min(MAX_N))?;
            let mut out = output(&cfg)?;
            if hasse {
                let h = HasseDiagram::from_words(cfg.n, words);
                let labels: Vec<String> = h.words().iter().map(io::node_label).collect();
                let ranks: Vec<u32> = (0..h.len() as u32).map(|v| h.rank_of(v)).collect();
                io::write_dot(&mut *out, "weak_order", &labels, h.covers(), Some(&ranks))?;
            } else {
                let g = hurwitz_core::metrics::HurwitzGraph::from_words(words);
                let labels: Vec<String> = g.words().iter().map(io::node_label).collect();
                io::write_dot(&mut *out, "hurwitz", &labels, g.csr().edges(), None)?;
            }
            out.flush()?;
        }
        Command::Metrics { common, group: GroupType::A, ref_seq } => {
            if ref_seq.is_some() {
                return Err(CliError::Usage("--ref-seq applies to --type B only".into()));
            }
            let cfg = config(&common, None, METRICS_CAP)?;
            let report = radius_and_diameter(&build_graph_capped(cfg.n, cfg.cap.min(MAX_N))?)?;
            let mut out = output(&cfg)?;
            io::write_json(&mut *out, &report)?;
            out.flush()?;
            if !report.theorems_hold() {
                return Err(CliError::CheckFailed(format!(
                    "n = {}: radius {} / ecc(e) {} against formula {}, diameter {} against bounds [{}, {}]",
                    report.n,
                    report.radius,
                    report.ecc_e,
                    report.radius_formula,
                    report.diameter,
                    report.radius_formula,
                    report.diameter_upper_bound
                )));
            }
            if !report.conjecture_matches {
                eprintln!("note: diameter {} differs from conjectured {}", report.diameter, report.conjecture);
            }
        }
        Command::Metrics { common, group: GroupType::B, ref_seq } => {
            let cfg = config(&common, ref_seq, B_CAP)?;
            let reference = match &cfg.ref_seq {
                Some(path) => ReferenceSequence::load(path)?.get(cfg.n),
                None => None,
            };
            let report = b_metrics_capped(cfg.n, reference, cfg.cap)?;
            let mut out = output(&cfg)?;
            io::write_json(&mut *out, &report)?;
            out.flush()?;
            if !report.radius_matches {
                eprintln!("note: radius {} differs from conjectured {}", report.radius, report.conjecture_radius);
            }
            if let Some(r) = reference {
                if r != report.antipodes_e as u64 && r != report.geodesic_maximal_e as u64 {
                    eprintln!(
                        "note: reference antipode count {r} matches neither {} nor {}",
                        report.antipodes_e, report.geodesic_maximal_e
                    );
                }
            }
        }
        Command::Verify { common, suite } => {
            let cfg = config(&common, None, VERIFY_CAP)?;
            let suites: Vec<Suite> = suite.map_or_else(|| Suite::ALL.to_vec(), |s| vec![s]);
            let mut out = output(&cfg)?;
            let mut failed = Vec::new();
            let only_one = suites.len() == 1;
            for s in suites {
                if !only_one && cfg.n > s.max_n() {
                    writeln!(out, "SKIP {s} (n = {} above {})", cfg.n, s.max_n())?;
                    continue;
                }
                let outcome = run_suite(s, cfg.n)?;
                writeln!(out, "{outcome}")?;
                out.flush()?;
                if !outcome.passed() {
                    failed.push(s.name());
                }
            }
            if !failed.is_empty() {
                return Err(CliError::CheckFailed(format!("failed suites: {}", failed.join(", "))));
            }
        }
        Command::Trees { common, poly } => {
            let cfg = config(&common, None, LISTING_CAP.min(MAX_N))?;
            let mut out = output(&cfg)?;
            if poly {
                io::write_json(&mut *out, &tree_polynomial(cfg.n))?;
            } else {
                let mut rows = Vec::new();
                for tree in alternating_trees(cfg.n) {
                    let stats = edge_pair_statistics(&tree)?;
                    let edges: Vec<String> = tree.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    rows.push(vec![
                        edges.join(" "),
                        word_of_tree(&tree)?.to_string(),
                        stats.right.to_string(),
                        stats.left.to_string(),
                        stats.neutral.to_string(),
                    ]);
                }
                io::write_csv(&mut *out, &["tree", "word", "right", "left", "neutral"], rows)?;
            }
            out.flush()?;
        }
        Command::Dyck { common, poly } => {
            let cfg = config(&common, None, LISTING_CAP)?;
            let mut out = output(&cfg)?;
            if poly {
                io::write_json(&mut *out, &dyck_polynomial(cfg.n))?;
            } else {
                let rows = dyck_paths(cfg.n).into_iter().map(|p| {
                    let s = dyck_statistics(&p);
                    vec![p.to_string(), s.area.to_string(), s.bmaj.to_string()]
                });
                io::write_csv(&mut *out, &["path", "area", "bmaj"], rows)?;
            }
            out.flush()?;
        }
        Command::Typeb(common) => {
            let cfg = config(&common, None, B_CAP)?;
            let words = enumerate_hbn_capped(cfg.n, cfg.cap)?;
            let mut out = output(&cfg)?;
            io::write_listing(&mut *out, &words)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
