//! Batch command-line front end for the SSP <-> directed HCP toolkit.
//!
//! Exit codes follow the solver convention: 0 for successful non-decision
//! commands, 10 for YES/Hamiltonian decisions, 20 for NO decisions, 1 for
//! usage or input errors, 2 for an exhausted search or enumeration
//! budget, and 3 when the `roundtrip` oracles disagree.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::exit;

use clap::{Parser, Subcommand};

use ssp2hcp::io;
use ssp2hcp::*;

const EXIT_OK: i32 = 0;
const EXIT_ERROR: i32 = 1;
const EXIT_BUDGET: i32 = 2;
const EXIT_DISAGREE: i32 = 3;
const EXIT_YES: i32 = 10;
const EXIT_NO: i32 = 20;

#[derive(Parser)]
#[command(
    name = "ssp2hcp",
    version,
    about = "Convert Set Splitting Problem instances to directed Hamiltonian Cycle Problem graphs, solve both sides, and translate witnesses"
)]
struct Cli {
    /// Suppress informational messages (primary outputs still print).
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the simplification rules and report the outcome.
    Simplify {
        /// Instance file (text or JSON).
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the reduced instance or YES witness.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit the reduced instance as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Convert an instance to a directed graph edge list.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        /// Edge-list output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the vertex label map to this path.
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Write a DOT rendering to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Convert the instance verbatim; reject non-simple-form input.
        #[arg(long)]
        no_simplify: bool,
    },
    /// Decide an instance by exhaustive enumeration.
    SolveSsp {
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the solution partition.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide Hamiltonicity of an edge-list graph.
    SolveHcp {
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the found cycle.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Node-expansion budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Recover the partition a Hamiltonian cycle encodes.
    Extract {
        /// Instance file; the conversion is recomputed deterministically.
        #[arg(long = "in")]
        input: PathBuf,
        /// Cycle file produced by solve-hcp or trace.
        #[arg(long)]
        cycle: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        no_simplify: bool,
    },
    /// Trace the Hamiltonian cycle a solution partition induces.
    Trace {
        #[arg(long = "in")]
        input: PathBuf,
        /// Partition file over the original universe.
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a DOT rendering with the cycle highlighted by stage.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        no_simplify: bool,
    },
    /// Check a partition against an instance, or a cycle against a graph.
    Verify {
        /// Instance file (with --partition) or edge list (with --cycle).
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, conflicts_with = "cycle")]
        partition: Option<PathBuf>,
        #[arg(long)]
        cycle: Option<PathBuf>,
    },
    /// Run both oracles end to end and cross-check their witnesses.
    Roundtrip {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Generate a random instance.
    Gen {
        /// Universe size.
        #[arg(short = 'u', long)]
        universe: u32,
        /// Number of subsets.
        #[arg(short = 's', long)]
        subsets: u32,
        #[arg(long, default_value_t = 2)]
        min_size: u32,
        #[arg(long)]
        max_size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print conversion dimensions and check the closed-form counts.
    Stats {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        no_simplify: bool,
    },
}

struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn input(err: impl Display) -> Failure {
        Failure {
            message: err.to_string(),
            code: EXIT_ERROR,
        }
    }
}

type CmdResult = Result<i32, Failure>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = err.print();
            exit(code);
        }
    };
    match run(cli) {
        Ok(code) => exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            exit(failure.code);
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let quiet = cli.quiet;
    match cli.command {
        Command::Simplify { input, out, json } => cmd_simplify(&input, out.as_deref(), json, quiet),
        Command::Convert {
            input,
            out,
            labels,
            dot,
            no_simplify,
        } => cmd_convert(
            &input,
            out.as_deref(),
            labels.as_deref(),
            dot.as_deref(),
            no_simplify,
            quiet,
        ),
        Command::SolveSsp { input, out } => cmd_solve_ssp(&input, out.as_deref(), quiet),
        Command::SolveHcp { input, out, budget } => {
            cmd_solve_hcp(&input, out.as_deref(), budget, quiet)
        }
        Command::Extract {
            input,
            cycle,
            out,
            no_simplify,
        } => cmd_extract(&input, &cycle, out.as_deref(), no_simplify, quiet),
        Command::Trace {
            input,
            partition,
            out,
            dot,
            no_simplify,
        } => cmd_trace(
            &input,
            &partition,
            out.as_deref(),
            dot.as_deref(),
            no_simplify,
            quiet,
        ),
        Command::Verify {
            input,
            partition,
            cycle,
        } => cmd_verify(&input, partition.as_deref(), cycle.as_deref(), quiet),
        Command::Roundtrip { input, budget } => cmd_roundtrip(&input, budget, quiet),
        Command::Gen {
            universe,
            subsets,
            min_size,
            max_size,
            seed,
            out,
            json,
        } => cmd_gen(
            universe,
            subsets,
            (min_size, max_size),
            seed,
            out.as_deref(),
            json,
            quiet,
        ),
        Command::Stats { input, no_simplify } => cmd_stats(&input, no_simplify, quiet),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<SspInstance, Failure> {
    io::parse_ssp(&read_file(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Writes to `path` when given, otherwise prints to stdout.
fn deliver(path: Option<&Path>, content: &str, what: &str, quiet: bool) -> Result<(), Failure> {
    match path {
        Some(path) => {
            fs::write(path, content)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
            if !quiet {
                eprintln!("{what} written to {}", path.display());
            }
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

enum Prepared {
    Artifact(Box<ReductionArtifact>),
    Decided(SimplificationResult),
}

fn prepare(instance: &SspInstance, no_simplify: bool) -> Result<Prepared, Failure> {
    if no_simplify {
        let sf = SimpleForm::try_from_instance(instance.clone())
            .map_err(|e| Failure::input(format!("not in simple form: {e}")))?;
        let art = build_graph(&sf).map_err(Failure::input)?;
        return Ok(Prepared::Artifact(Box::new(art)));
    }
    match simplify(instance) {
        SimplificationResult::Reduced(sf) => {
            let art = build_graph(&sf).map_err(Failure::input)?;
            Ok(Prepared::Artifact(Box::new(art)))
        }
        decided => Ok(Prepared::Decided(decided)),
    }
}

fn describe_no(reason: &NoReason) -> String {
    match reason {
        NoReason::SingletonSubset { subset } => {
            format!("subset {subset} has a single entry and can never be split")
        }
        NoReason::UniverseTooSmall => {
            "no subsets remain and the universe cannot fill two non-empty sides".to_string()
        }
    }
}

fn describe_yes(reason: &YesReason) -> &'static str {
    match reason {
        YesReason::EmptyFamily => "every subset is split by any two-sided partition",
        YesReason::ExactCover => {
            "the remaining subsets exactly cover the remaining universe (c = u)"
        }
    }
}

/// Decision exit for an instance fully decided during simplification.
fn decided_exit(decided: &SimplificationResult, context: &str, quiet: bool) -> i32 {
    match decided {
        SimplificationResult::DecidedYes { reason, .. } => {
            println!(
                "YES (decided during simplification: {})",
                describe_yes(reason)
            );
            if !quiet {
                eprintln!("{context}: no graph to produce");
            }
            EXIT_YES
        }
        SimplificationResult::DecidedNo { reason } => {
            println!("NO ({})", describe_no(reason));
            if !quiet {
                eprintln!("{context}: no graph to produce");
            }
            EXIT_NO
        }
        SimplificationResult::Reduced(_) => unreachable!("reduced instances are converted"),
    }
}

fn cmd_simplify(input: &Path, out: Option<&Path>, json: bool, quiet: bool) -> CmdResult {
    let instance = load_instance(input)?;
    match simplify(&instance) {
        SimplificationResult::DecidedYes { witness, reason } => {
            println!("YES ({})", describe_yes(&reason));
            deliver(
                out,
                &io::write_partition(&witness),
                "witness partition",
                quiet,
            )?;
            Ok(EXIT_YES)
        }
        SimplificationResult::DecidedNo { reason } => {
            println!("NO ({})", describe_no(&reason));
            Ok(EXIT_NO)
        }
        SimplificationResult::Reduced(sf) => {
            let reduced = sf.instance();
            if !quiet {
                eprintln!(
                    "reduced: u={} s={} c={} (dropped subsets: {:?})",
                    reduced.universe_size(),
                    reduced.subset_count(),
                    reduced.total_entries(),
                    sf.dropped_subsets()
                );
            }
            let content = if json {
                io::write_ssp_json(reduced)
            } else {
                io::write_ssp_text(reduced)
            };
            deliver(out, &content, "reduced instance", quiet)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_convert(
    input: &Path,
    out: Option<&Path>,
    labels: Option<&Path>,
    dot: Option<&Path>,
    no_simplify: bool,
    quiet: bool,
) -> CmdResult {
    let instance = load_instance(input)?;
    let art = match prepare(&instance, no_simplify)? {
        Prepared::Artifact(art) => art,
        Prepared::Decided(decided) => return Ok(decided_exit(&decided, "convert", quiet)),
    };
    deliver(out, &io::write_edge_list(&art), "edge list", quiet)?;
    if let Some(labels) = labels {
        deliver(Some(labels), &io::write_label_map(&art), "label map", quiet)?;
    }
    if let Some(dot) = dot {
        let text = io::write_dot(&art, &io::RenderOptions::plain()).map_err(Failure::input)?;
        deliver(Some(dot), &text, "DOT rendering", quiet)?;
    }
    Ok(EXIT_OK)
}

fn cmd_solve_ssp(input: &Path, out: Option<&Path>, quiet: bool) -> CmdResult {
    let instance = load_instance(input)?;
    match brute_force_ssp(&instance) {
        Ok(Some(partition)) => {
            if !quiet {
                eprintln!("YES");
            }
            deliver(out, &io::write_partition(&partition), "partition", quiet)?;
            Ok(EXIT_YES)
        }
        Ok(None) => {
            println!("NO");
            Ok(EXIT_NO)
        }
        Err(err) => {
            eprintln!("error: {err}");
            Ok(EXIT_BUDGET)
        }
    }
}

fn cmd_solve_hcp(input: &Path, out: Option<&Path>, budget: u64, quiet: bool) -> CmdResult {
    let graph = io::read_edge_list(&read_file(input)?)
        .map_err(|e| Failure::input(format!("{}: {e}", input.display())))?;
    let config = SolveConfig {
        budget,
        pruning: true,
    };
    let outcome = find_hamiltonian_cycle(&graph, &config).map_err(Failure::input)?;
    match outcome {
        SolveOutcome::Hamiltonian { cycle, stats } => {
            if !quiet {
                eprintln!(
                    "Hamiltonian ({} expansions, {} forced)",
                    stats.expansions, stats.forced_moves
                );
            }
            deliver(out, &io::write_cycle(&cycle), "cycle", quiet)?;
            Ok(EXIT_YES)
        }
        SolveOutcome::NonHamiltonian { stats } => {
            println!("NO");
            if !quiet {
                eprintln!(
                    "search exhausted ({} expansions, {} pruned branches)",
                    stats.expansions, stats.pruned_branches
                );
            }
            Ok(EXIT_NO)
        }
        SolveOutcome::Indeterminate { stats } => {
            eprintln!(
                "budget of {budget} node expansions exhausted ({} spent)",
                stats.expansions
            );
            Ok(EXIT_BUDGET)
        }
    }
}

fn cmd_extract(
    input: &Path,
    cycle_path: &Path,
    out: Option<&Path>,
    no_simplify: bool,
    quiet: bool,
) -> CmdResult {
    let instance = load_instance(input)?;
    let art = match prepare(&instance, no_simplify)? {
        Prepared::Artifact(art) => art,
        Prepared::Decided(decided) => return Ok(decided_exit(&decided, "extract", quiet)),
    };
    let cycle = io::read_cycle(&read_file(cycle_path)?)
        .map_err(|e| Failure::input(format!("{}: {e}", cycle_path.display())))?;
    let partition = extract_partition_original(&art, &cycle).map_err(Failure::input)?;
    deliver(out, &io::write_partition(&partition), "partition", quiet)?;
    Ok(EXIT_OK)
}

fn cmd_trace(
    input: &Path,
    partition_path: &Path,
    out: Option<&Path>,
    dot: Option<&Path>,
    no_simplify: bool,
    quiet: bool,
) -> CmdResult {
    let instance = load_instance(input)?;
    let art = match prepare(&instance, no_simplify)? {
        Prepared::Artifact(art) => art,
        Prepared::Decided(decided) => return Ok(decided_exit(&decided, "trace", quiet)),
    };
    let original = io::read_partition(&read_file(partition_path)?, instance.universe_size())
        .map_err(|e| Failure::input(format!("{}: {e}", partition_path.display())))?;
    let reduced = art
        .source()
        .project_partition(&original)
        .map_err(Failure::input)?;
    match cycle_from_partition(&art, &reduced) {
        Ok(cycle) => {
            deliver(out, &io::write_cycle(&cycle), "cycle", quiet)?;
            if let Some(dot) = dot {
                let text = io::write_dot(&art, &io::RenderOptions::highlighted(cycle))
                    .map_err(Failure::input)?;
                deliver(Some(dot), &text, "DOT rendering", quiet)?;
            }
            Ok(EXIT_YES)
        }
        Err(failure) => {
            let original_subset = art.source().original_subset_index(failure.subset_index);
            println!("NO ({failure}; original subset index {original_subset})");
            Ok(EXIT_NO)
        }
    }
}

fn cmd_verify(
    input: &Path,
    partition: Option<&Path>,
    cycle: Option<&Path>,
    quiet: bool,
) -> CmdResult {
    match (partition, cycle) {
        (Some(partition_path), None) => {
            let instance = load_instance(input)?;
            let p = io::read_partition(&read_file(partition_path)?, instance.universe_size())
                .map_err(|e| Failure::input(format!("{}: {e}", partition_path.display())))?;
            let report = check_partition(&instance, &p).map_err(Failure::input)?;
            if report.is_solution {
                println!("VALID");
                Ok(EXIT_YES)
            } else {
                println!("INVALID");
                if !quiet {
                    if !report.unsplit.is_empty() {
                        eprintln!("unsplit subsets: {:?}", report.unsplit);
                    }
                    if let Some(side) = report.side_empty {
                        eprintln!("side {side} is empty");
                    }
                }
                Ok(EXIT_NO)
            }
        }
        (None, Some(cycle_path)) => {
            let graph = io::read_edge_list(&read_file(input)?)
                .map_err(|e| Failure::input(format!("{}: {e}", input.display())))?;
            let cycle = io::read_cycle(&read_file(cycle_path)?)
                .map_err(|e| Failure::input(format!("{}: {e}", cycle_path.display())))?;
            if verify_cycle(&graph, &cycle) {
                println!("VALID");
                Ok(EXIT_YES)
            } else {
                println!("INVALID");
                Ok(EXIT_NO)
            }
        }
        _ => Err(Failure::input(
            "verify needs exactly one of --partition or --cycle",
        )),
    }
}

fn cmd_roundtrip(input: &Path, budget: u64, quiet: bool) -> CmdResult {
    let instance = load_instance(input)?;

    let ssp_solution = match brute_force_ssp(&instance) {
        Ok(solution) => solution,
        Err(err) => {
            eprintln!("error: {err}");
            return Ok(EXIT_BUDGET);
        }
    };
    let ssp_yes = ssp_solution.is_some();
    if !quiet {
        eprintln!("ssp oracle: {}", if ssp_yes { "YES" } else { "NO" });
    }

    // Conversion side: solve the converted graph whenever one exists,
    // fall back to the simplification verdict otherwise.
    let artifact = match simplify(&instance) {
        SimplificationResult::Reduced(sf) => build_graph(&sf).map_err(Failure::input)?,
        decided => match SimpleForm::try_from_instance(instance.clone()) {
            Ok(sf) => build_graph(&sf).map_err(Failure::input)?,
            Err(_) => {
                let yes = matches!(decided, SimplificationResult::DecidedYes { .. });
                if !quiet {
                    eprintln!(
                        "hcp oracle: {} (instance decided during simplification; no graph)",
                        if yes { "YES" } else { "NO" }
                    );
                }
                return finish_roundtrip(ssp_yes, yes);
            }
        },
    };

    let config = SolveConfig {
        budget,
        pruning: true,
    };
    let outcome = find_hamiltonian_cycle(artifact.graph(), &config).map_err(Failure::input)?;
    let hcp_yes = match &outcome {
        SolveOutcome::Hamiltonian { .. } => true,
        SolveOutcome::NonHamiltonian { .. } => false,
        SolveOutcome::Indeterminate { stats } => {
            eprintln!(
                "budget of {budget} node expansions exhausted ({} spent)",
                stats.expansions
            );
            return Ok(EXIT_BUDGET);
        }
    };
    if !quiet {
        eprintln!(
            "hcp oracle: {} ({} vertices, {} arcs, {} expansions)",
            if hcp_yes { "YES" } else { "NO" },
            artifact.graph().vertex_count(),
            artifact.graph().edge_count(),
            outcome.stats().expansions
        );
    }

    if ssp_yes && hcp_yes {
        // Cross-validate witnesses in both directions.
        let cycle = outcome.cycle().expect("outcome is Hamiltonian");
        let extracted = extract_partition_original(&artifact, cycle).map_err(Failure::input)?;
        let report = check_partition(&instance, &extracted).map_err(Failure::input)?;
        if !report.is_solution {
            println!("DISAGREE: extracted partition fails the split check");
            return Ok(EXIT_DISAGREE);
        }
        let brute = ssp_solution.expect("ssp side is YES");
        let reduced = artifact
            .source()
            .project_partition(&brute)
            .map_err(Failure::input)?;
        let traced = match cycle_from_partition(&artifact, &reduced) {
            Ok(traced) => traced,
            Err(failure) => {
                println!("DISAGREE: brute-force solution does not trace ({failure})");
                return Ok(EXIT_DISAGREE);
            }
        };
        if !verify_cycle(artifact.graph(), &traced) {
            println!("DISAGREE: traced cycle fails verification");
            return Ok(EXIT_DISAGREE);
        }
        if extract_partition(&artifact, &traced).map_err(Failure::input)? != reduced {
            println!("DISAGREE: extraction does not invert tracing");
            return Ok(EXIT_DISAGREE);
        }
        if !quiet {
            eprintln!("witnesses cross-validate in both directions");
        }
    }
    finish_roundtrip(ssp_yes, hcp_yes)
}

fn finish_roundtrip(ssp_yes: bool, hcp_yes: bool) -> CmdResult {
    if ssp_yes != hcp_yes {
        println!(
            "DISAGREE: ssp oracle says {}, hcp oracle says {}",
            if ssp_yes { "YES" } else { "NO" },
            if hcp_yes { "YES" } else { "NO" }
        );
        return Ok(EXIT_DISAGREE);
    }
    if ssp_yes {
        println!("AGREE: YES");
        Ok(EXIT_YES)
    } else {
        println!("AGREE: NO");
        Ok(EXIT_NO)
    }
}

fn cmd_gen(
    universe: u32,
    subsets: u32,
    size_range: (u32, u32),
    seed: u64,
    out: Option<&Path>,
    json: bool,
    quiet: bool,
) -> CmdResult {
    let instance =
        generate_random_instance(universe, subsets, size_range, seed).map_err(Failure::input)?;
    let content = if json {
        io::write_ssp_json(&instance)
    } else {
        io::write_ssp_text(&instance)
    };
    deliver(out, &content, "instance", quiet)?;
    Ok(EXIT_OK)
}

fn cmd_stats(input: &Path, no_simplify: bool, quiet: bool) -> CmdResult {
    let instance = load_instance(input)?;
    let art = match prepare(&instance, no_simplify)? {
        Prepared::Artifact(art) => art,
        Prepared::Decided(decided) => return Ok(decided_exit(&decided, "stats", quiet)),
    };
    let reduced = art.source().instance();
    let (u, s, c) = (
        reduced.universe_size() as u64,
        reduced.subset_count() as u64,
        reduced.total_entries(),
    );
    let (ev, ee) = expected_counts(u, s, c);
    let (v, e) = (art.graph().vertex_count() as u64, art.graph().edge_count());
    let formulas = if (v, e) == (ev, ee) { "ok" } else { "MISMATCH" };
    println!("u={u} s={s} c={c} V={v} E={e} formulas={formulas}");
    Ok(EXIT_OK)
}
