use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zd_labeling::analysis::analyze;
use zd_labeling::incidence::incidence_matrix;
use zd_labeling::labeling::{self, Violation};
use zd_labeling::linalg::{snf, IntMatrix};
use zd_labeling::oracle::{brute_force_solutions_with, DEFAULT_MAX_STATES};
use zd_labeling::{parse_graph, toric, Error, LabeledGraph, Strategy, VLabeling};

/// Additive edge labelings over Z_d.
///
/// Exit status: 0 on success, 1 when the answer is negative (not additive,
/// no extension, no solutions), 2 on malformed input or a violated guard.
#[derive(Parser)]
#[command(name = "zdlabel", version)]
struct Cli {
    /// Read labels as exponents of d-th roots of unity.
    #[arg(long, global = true)]
    multiplicative: bool,

    /// Worker threads for per-component work; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide additivity; prints a violating kernel generator if any.
    Check { file: PathBuf },
    /// Print one valid vertex labeling.
    Solve { file: PathBuf },
    /// Print the number of valid vertex labelings.
    Count { file: PathBuf },
    /// Print valid vertex labelings, separated by blank lines.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Fill in `?` labels so the result is additive.
    Extend { file: PathBuf },
    /// Smith Normal Form of a matrix dump, or of a graph's incidence matrix.
    Snf {
        file: PathBuf,
        #[arg(long)]
        graph: bool,
    },
    /// Generators of the incidence kernel mod d.
    Kernel { file: PathBuf },
    /// All valid vertex labelings by exhaustive search.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
    },
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load_graph(path: &PathBuf) -> Result<LabeledGraph, String> {
    parse_graph(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn residues(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn labelings_text(g: &LabeledGraph, all: impl IntoIterator<Item = VLabeling>) -> String {
    all.into_iter().map(|f| f.to_text(g)).collect::<Vec<_>>().join("\n")
}

fn violation_text(v: &Violation) -> String {
    format!(
        "{} # component {}: {}, pairing {}\n",
        residues(&v.generator),
        v.component + 1,
        v.provenance,
        v.pairing
    )
}

struct Outcome {
    stdout: String,
    success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, success: true }
    }

    fn negative(stdout: &str) -> Self {
        Outcome {
            stdout: format!("{stdout}\n"),
            success: false,
        }
    }
}

fn run(cli: &Cli, strategy: Strategy) -> Result<Outcome, String> {
    let mult = cli.multiplicative;
    let lib = |e: Error| e.to_string();
    Ok(match &cli.command {
        Command::Check { file } => {
            let g = load_graph(file)?;
            let verdict = if mult {
                toric::multiplicative_check(&g)
            } else {
                labeling::check_with(&g, strategy)
            }
            .map_err(lib)?;
            match verdict.violations.first() {
                None => Outcome::ok("ADDITIVE\n".into()),
                Some(v) => Outcome {
                    stdout: format!("NOT ADDITIVE\n{}", violation_text(v)),
                    success: false,
                },
            }
        }
        Command::Solve { file } => {
            let g = load_graph(file)?;
            let f = if mult {
                toric::toric_solve(&g).map(|x| x.map(|x| VLabeling::from_values(&x.vertex_exponents)))
            } else {
                labeling::solve_one_with(&g, strategy)
            }
            .map_err(lib)?;
            match f {
                Some(f) => Outcome::ok(f.to_text(&g)),
                None => Outcome::negative("NOT ADDITIVE"),
            }
        }
        Command::Count { file } => {
            let g = load_graph(file)?;
            let counts = if mult {
                toric::toric_count(&g).map(|c| c.map(|c| (c.per_component, c.total)))
            } else {
                labeling::count_with(&g, strategy).map(|c| c.map(|c| (c.per_component, c.total)))
            }
            .map_err(lib)?;
            match counts {
                Some((per, total)) => {
                    let mut out = format!("{total}\n");
                    if per.len() > 1 {
                        for (i, c) in per.iter().enumerate() {
                            out.push_str(&format!("component {} {c}\n", i + 1));
                        }
                    }
                    Outcome::ok(out)
                }
                None => Outcome::negative("NOT ADDITIVE"),
            }
        }
        Command::Enumerate { file, limit } => {
            let g = load_graph(file)?;
            let all: Vec<VLabeling> = if mult {
                toric::toric_enumerate(&g, *limit)
                    .map_err(lib)?
                    .into_iter()
                    .map(|x| VLabeling::from_values(&x.vertex_exponents))
                    .collect()
            } else {
                labeling::enumerate_with(&g, *limit, strategy).map_err(lib)?.collect()
            };
            if all.is_empty() && !labeling::check_with(&g, strategy).map_err(lib)?.additive {
                Outcome::negative("NOT ADDITIVE")
            } else {
                Outcome::ok(labelings_text(&g, all))
            }
        }
        Command::Extend { file } => {
            let g = load_graph(file)?;
            match labeling::extend(&g).map_err(lib)? {
                Some(done) => Outcome::ok(done.to_text()),
                None => Outcome::negative("NO EXTENSION"),
            }
        }
        Command::Snf { file, graph } => {
            let a = if *graph {
                incidence_matrix(&load_graph(file)?).to_int_matrix()
            } else {
                IntMatrix::parse_dump(&read_input(file)?).map_err(|e| format!("{}: {e}", file.display()))?
            };
            let res = snf(&a);
            let mut out = String::new();
            for (name, m) in [("A", &a), ("U", &res.u), ("S", &res.s), ("V", &res.v), ("V^-1", &res.v_inv)] {
                out.push_str(&format!("### {name}\n{}", m.to_dump()));
            }
            Outcome::ok(out)
        }
        Command::Kernel { file } => {
            let g = load_graph(file)?;
            let analysis = analyze(&g, strategy).map_err(lib)?;
            let mut out = String::new();
            for ca in &analysis.components {
                let edges = &analysis.decomposition.component_edges[ca.component];
                for (local, prov) in ca.kernel.iter() {
                    let mut gen = vec![0u64; g.edge_count()];
                    for (j, &e) in edges.iter().enumerate() {
                        gen[e] = local[j];
                    }
                    out.push_str(&format!("{} # component {}: {prov}\n", residues(&gen), ca.component + 1));
                }
            }
            Outcome::ok(out)
        }
        Command::Oracle { file, max_states } => {
            let g = load_graph(file)?;
            let all = brute_force_solutions_with(&g, *max_states, strategy).map_err(lib)?;
            if all.is_empty() {
                Outcome::negative("NO SOLUTIONS")
            } else {
                Outcome::ok(labelings_text(&g, all))
            }
        }
    })
}

fn strategy_for(jobs: Option<usize>) -> Result<Strategy, String> {
    match jobs {
        Some(0) => Err("--jobs must be at least 1".into()),
        Some(1) => Ok(Strategy::Sequential),
        _ => Ok(Strategy::Parallel),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let strategy = strategy_for(cli.jobs)?;
    #[cfg(feature = "parallel")]
    if let Some(n) = cli.jobs.filter(|&n| n > 1) {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?;
        return pool.install(|| run(cli, strategy));
    }
    run(cli, strategy)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
