use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use turan3::coloring::{
    hypergraph_chromatic_number, link_chromatic_profile, p_value, q_value,
};
use turan3::colored::max_colored_sum;
use turan3::constructions::ConstructionSpec;
use turan3::containment::contains;
use turan3::io;
use turan3::report::{run_verification_suite, Scale, Verdict};
use turan3::search::{enumerate_extremal, solve, SearchInstance};
use turan3::{Error, Result};

#[derive(Parser)]
#[command(name = "turan3", version, about = "Exact workbench for 3-graph Turán problems under bounded matching number")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Build a named construction, writing an .h3 file plus a JSON sidecar
    /// with part labels and the claimed edge count.
    Construct {
        /// Catalog name, e.g. h-ns, h-b, k4minus-extremal, h-double-turan,
        /// h-profile, matching, f-star-partition, full-star, f32, ...
        name: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        /// Profile index for h-profile.
        #[arg(short = 'i', long)]
        index: Option<u64>,
        /// Pattern file (.h3) for h-profile.
        #[arg(short = 'F', long)]
        pattern: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compute invariants of an .h3 file. With no flags, print all of them.
    Invariant {
        file: PathBuf,
        /// Matching number.
        #[arg(long)]
        nu: bool,
        /// Weak chromatic number.
        #[arg(long)]
        chi: bool,
        /// Minimum red set of a proper red-blue coloring.
        #[arg(long)]
        p: bool,
        /// Minimum red set of a strong red-blue coloring.
        #[arg(long)]
        q: bool,
        /// Maximum co-degree.
        #[arg(long)]
        codegree: bool,
        /// Link-chromatic ordering and values.
        #[arg(long)]
        links: bool,
    },
    /// Decide whether a pattern embeds into a host as a subhypergraph.
    Contains {
        #[arg(short = 'F', long)]
        pattern: PathBuf,
        #[arg(short = 'H', long)]
        host: PathBuf,
    },
    /// Exact maximum edge count at tiny n avoiding the given patterns and
    /// matching bound.
    SearchExtremal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: Option<u32>,
        /// Forbidden pattern files (.h3); repeatable.
        #[arg(short = 'F', long = "forbid")]
        forbidden: Vec<PathBuf>,
        /// Write one extremal witness here.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Also list all extremal hosts up to isomorphism (n <= 6).
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Exact maximum of the layer edge sum over star-colored-clique-free
    /// families, by exhaustive search.
    ColoredMax {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        /// Require exactly r-1 colors in the forbidden clique instead of at
        /// most r-1.
        #[arg(long)]
        exact_k: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run the machine-checked claim suite and emit a certificate report.
    VerifyPaper {
        #[arg(long, default_value = "tiny")]
        scale: String,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn env_budget() -> Option<u64> {
    std::env::var("TURAN_BUDGET").ok().and_then(|v| v.parse().ok())
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Commands::Construct { name, n, s, t, index, pattern, output } => {
            let mut params: BTreeMap<String, u64> = BTreeMap::new();
            if let Some(v) = n {
                params.insert("n".into(), v);
            }
            if let Some(v) = s {
                params.insert("s".into(), v);
            }
            if let Some(v) = t {
                params.insert("t".into(), v);
            }
            if let Some(v) = index {
                params.insert("i".into(), v);
            }
            let pattern = pattern.map(|p| io::load_h3(&p)).transpose()?;
            let spec = ConstructionSpec { name, params };
            let built = spec.build(pattern.as_ref())?;
            io::save_h3(&output, &built.hypergraph)?;
            let sidecar = output.with_extension("json");
            let doc = json!({
                "name": built.name,
                "params": built.params,
                "n": built.hypergraph.n(),
                "claimed_edges": built.claimed_edges,
                "built_edges": built.hypergraph.edge_count(),
                "part_labels": built.part_labels,
            });
            std::fs::write(&sidecar, serde_json::to_string_pretty(&doc).expect("serializes"))
                .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", sidecar.display())))?;
            println!(
                "{}: n = {}, edges = {} (claimed {}), wrote {} and {}",
                built.name,
                built.hypergraph.n(),
                built.hypergraph.edge_count(),
                built.claimed_edges,
                output.display(),
                sidecar.display()
            );
            Ok(0)
        }
        Commands::Invariant { file, nu, chi, p, q, codegree, links } => {
            let h = io::load_h3(&file)?;
            let all = !(nu || chi || p || q || codegree || links);
            if nu || all {
                println!("nu = {}", h.matching_number());
            }
            if chi || all {
                println!("chi = {}", hypergraph_chromatic_number(&h));
            }
            if p || all {
                println!("p = {}", p_value(&h));
            }
            if q || all {
                println!("q = {}", q_value(&h));
            }
            if codegree || all {
                if h.n() >= 2 {
                    println!("max-codegree = {}", h.max_codegree()?);
                } else {
                    println!("max-codegree = undefined (n < 2)");
                }
            }
            if links || all {
                let profile = link_chromatic_profile(&h);
                let pairs: Vec<String> = profile
                    .ordering
                    .iter()
                    .zip(&profile.values)
                    .map(|(v, c)| format!("{v}:{c}"))
                    .collect();
                println!("link-chromatic = {}", pairs.join(" "));
            }
            Ok(0)
        }
        Commands::Contains { pattern, host } => {
            let f = io::load_h3(&pattern)?;
            let h = io::load_h3(&host)?;
            match contains(&f, &h) {
                Some(embedding) => {
                    let map: Vec<String> = embedding
                        .map
                        .iter()
                        .enumerate()
                        .map(|(i, v)| format!("{i}->{v}"))
                        .collect();
                    println!("contained: {}", map.join(" "));
                }
                None => println!("free"),
            }
            Ok(0)
        }
        Commands::SearchExtremal { n, s, forbidden, witness, enumerate, budget } => {
            let family: Vec<_> = forbidden
                .iter()
                .map(|p| io::load_h3(p))
                .collect::<Result<_>>()?;
            let inst = SearchInstance { n, s, family, budget: budget.or_else(env_budget) };
            let result = solve(&inst)?;
            println!(
                "value = {} ({}), nodes = {}",
                result.value,
                if result.exact { "exact" } else { "lower bound, budget exhausted" },
                result.nodes
            );
            if let Some(path) = witness {
                io::save_h3(&path, &result.witness)?;
                println!("witness -> {}", path.display());
            }
            if enumerate {
                let classes = enumerate_extremal(&inst)?;
                println!("extremal classes up to isomorphism: {}", classes.len());
                for (i, class) in classes.iter().enumerate() {
                    let edges: Vec<String> = class
                        .edges()
                        .iter()
                        .map(|e| format!("{} {} {}", e[0], e[1], e[2]))
                        .collect();
                    println!("class {i}: {}", edges.join(", "));
                }
            }
            Ok(if result.exact { 0 } else { 2 })
        }
        Commands::ColoredMax { n, s, r, exact_k, budget } => {
            let result = max_colored_sum(n, s, r, exact_k, budget.or_else(env_budget))?;
            println!("max layer sum = {}, nodes = {}", result.value, result.nodes);
            let m = turan3::colored::ColoredMultigraph::new(n, result.layers)?;
            print!("{}", io::write_cmg(&m));
            Ok(0)
        }
        Commands::VerifyPaper { scale, json: json_path } => {
            let scale = Scale::parse(&scale)?;
            let report = run_verification_suite(scale);
            for cert in &report.certificates {
                let tag = match cert.verdict() {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "FAIL",
                    Verdict::Inconclusive => "inconclusive",
                };
                println!("[{tag}] {} ({} ms)", cert.subject, cert.elapsed_ms);
            }
            println!(
                "suite {} at scale {}: {} pass, {} fail, {} inconclusive",
                report.suite,
                report.scale,
                report.summary.pass,
                report.summary.fail,
                report.summary.inconclusive
            );
            if let Some(path) = json_path {
                std::fs::write(&path, report.to_json())
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
                println!("report -> {}", path.display());
            }
            Ok(report.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Error::BudgetExhausted { nodes, best }) => {
            eprintln!("error: node budget exhausted after {nodes} nodes (best lower bound: {best:?})");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
