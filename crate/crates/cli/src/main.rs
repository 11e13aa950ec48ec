//! `incol`: generate graphs, solve and construct incidence list-colourings,
//! fuzz the constructions at their bounds.
//!
//! Exit codes: 0 success, 1 failures found (or no colouring exists),
//! 2 configuration or input error, 3 incomplete (a search gave up).

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use incol_core::constructive::{construct, theorem_bound, ConstructiveReport, Precoloured};
use incol_core::generators::{
    gen_basic, gen_cactus_random, gen_corona, gen_cycle_power, gen_grid, gen_ham_cubic_random,
    gen_random_halin, gen_random_tree, BasicFamily, CactusParams, FamilySpec,
};
use incol_core::harness::{
    default_regression_suite, random_list_assignment, regression_chi, run_campaign_with_workers,
    FuzzCampaign, ListSizeRule, RegressionStatus,
};
use incol_core::io::{
    colouring_from_json, colouring_to_json, graph_dot, graph_from_json, graph_to_json,
    incidence_graph_dot, lists_from_json, lists_to_json,
};
use incol_core::solver::{
    incidence_chromatic_number, solve_list_colouring, ChiOutcome, SolveOutcome, SolverConfig,
};
use incol_core::{validate_colouring, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PASS: u8 = 0;
const FAILURES: u8 = 1;
const CONFIG: u8 = 2;
const INCOMPLETE: u8 = 3;

#[derive(Parser)]
#[command(name = "incol", version, about = "Incidence list-colouring toolkit")]
struct Cli {
    /// Directory for output files; without it JSON goes to stdout.
    #[arg(long, global = true, env = "INCOL_OUT_DIR")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member; writes graph.json, spec.json and, with --k, lists.json.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also draw a random k-list assignment.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        universe: Option<usize>,
    },
    /// Exact search for a colouring from the given lists.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Incidence chromatic number.
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run the constructive colouring for a family.
    Construct {
        /// Family spec file, as written by `generate`.
        #[arg(long, conflicts_with = "family")]
        spec: Option<PathBuf>,
        #[command(flatten)]
        family: OptionalFamily,
        #[arg(long)]
        lists: PathBuf,
        /// JSON array of `{"incidence": id, "colour": c}`.
        #[arg(long)]
        pre: Option<PathBuf>,
        /// Write the step-by-step trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Random list assignments at the theorem bound (or --k) against a construction.
    Fuzz {
        /// Campaign file; replaces the family flags.
        #[arg(long, conflicts_with = "family")]
        campaign: Option<PathBuf>,
        #[command(flatten)]
        family: OptionalFamily,
        /// Random instances for random families.
        #[arg(long, default_value_t = 1)]
        instances: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        universe: Option<usize>,
        /// Coronae: pre-colour the pendant edge at v_0.
        #[arg(long)]
        precolour: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Exact χ_i of small reference graphs against known values.
    Regress {
        #[command(flatten)]
        budget: Budget,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Graphviz DOT of a graph, optionally coloured.
    ExportDot {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
        /// Draw the incidence graph instead.
        #[arg(long)]
        incidence: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    Path,
    Cycle,
    Star,
    Wheel,
    Complete,
    Grid,
    Tree,
    Halin,
    Corona,
    Cactus,
    HamCubic,
    CyclePower,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[command(flatten)]
    dims: Dims,
}

#[derive(Args, Clone)]
struct OptionalFamily {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[command(flatten)]
    dims: Dims,
}

#[derive(Args, Clone)]
struct Dims {
    /// Size: vertices, cycle length, leaves of a star, grid columns, or the
    /// number of tree expansions for random Halin graphs.
    #[arg(long)]
    n: Option<usize>,
    /// Grid rows.
    #[arg(long)]
    m: Option<usize>,
    /// Pendants per cycle vertex, or the power of a cycle power.
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct Budget {
    /// Search nodes before giving up.
    #[arg(long)]
    budget: Option<u64>,
}

impl Budget {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            node_budget: self.budget,
            ..SolverConfig::default()
        }
    }
}

impl Dims {
    fn need(v: Option<usize>, name: &str, family: Family) -> Result<usize> {
        v.with_context(|| format!("--{name} is required for {family:?}"))
    }

    fn build(&self, family: Family, rng: &mut ChaCha8Rng) -> Result<(Graph, FamilySpec)> {
        let n = || Self::need(self.n, "n", family);
        let basic = |kind| gen_basic(kind, n()?).map_err(anyhow::Error::from);
        Ok(match family {
            Family::Path => basic(BasicFamily::Path)?,
            Family::Cycle => basic(BasicFamily::Cycle)?,
            Family::Star => basic(BasicFamily::Star)?,
            Family::Wheel => basic(BasicFamily::Wheel)?,
            Family::Complete => basic(BasicFamily::Complete)?,
            Family::Grid => gen_grid(Self::need(self.m, "m", family)?, n()?)?,
            Family::Corona => gen_corona(n()?, Self::need(self.p, "p", family)?)?,
            Family::CyclePower => gen_cycle_power(n()?, Self::need(self.p, "p", family)?)?,
            Family::Tree => gen_random_tree(n()?, rng)?,
            Family::Halin => gen_random_halin(n()?, 3, rng)?,
            Family::Cactus => gen_cactus_random(CactusParams::with_size(n()?), rng)?,
            Family::HamCubic => gen_ham_cubic_random(n()?, rng)?,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Writes `name` under the output directory, or prints it when there is none.
fn emit(out: &Option<PathBuf>, name: &str, body: &str) -> Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let path = dir.join(name);
            fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{body}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn load_spec(spec: &Option<PathBuf>, family: &OptionalFamily) -> Result<(Graph, FamilySpec)> {
    match (spec, family.family) {
        (Some(path), _) => {
            let spec: FamilySpec =
                serde_json::from_str(&read(path)?).context("parsing family spec")?;
            Ok((spec.build()?, spec))
        }
        (None, Some(f)) => family
            .dims
            .build(f, &mut ChaCha8Rng::seed_from_u64(family.dims.seed)),
        (None, None) => bail!("give --spec or --family"),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let out = cli.out;
    match cli.command {
        Command::Generate {
            family,
            k,
            universe,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(family.dims.seed);
            let (g, spec) = family.dims.build(family.family, &mut rng)?;
            emit(&out, "graph.json", &graph_to_json(&g))?;
            emit(&out, "spec.json", &json(&spec))?;
            if let Some(k) = k {
                let l = random_list_assignment(&g, k, universe.unwrap_or(3 * k), family.dims.seed)?;
                emit(&out, "lists.json", &lists_to_json(&g, &l))?;
            }
            eprintln!(
                "{}: {} vertices, {} edges, Δ = {}, bound {}",
                spec.tag(),
                g.n(),
                g.edge_count(),
                g.max_degree(),
                theorem_bound(&spec, &g).map_or("none".into(), |b| b.to_string())
            );
            Ok(PASS)
        }
        Command::Solve {
            graph,
            lists,
            budget,
        } => {
            let g = graph_from_json(&read(&graph)?)?;
            let l = lists_from_json(&g, &read(&lists)?)?;
            match solve_list_colouring(&g, &l, &budget.config())? {
                SolveOutcome::Colouring(c) => {
                    emit(&out, "colouring.json", &colouring_to_json(&g, &c))?;
                    eprintln!("colourable with {} colours", c.colour_count());
                    Ok(PASS)
                }
                SolveOutcome::Unsatisfiable => {
                    eprintln!("no colouring exists");
                    Ok(FAILURES)
                }
                SolveOutcome::Unknown { nodes } => {
                    eprintln!("unknown after {nodes} search nodes");
                    Ok(INCOMPLETE)
                }
            }
        }
        Command::Chi { graph, budget } => {
            let g = graph_from_json(&read(&graph)?)?;
            let outcome = incidence_chromatic_number(&g, &budget.config());
            emit(&out, "chi.json", &json(&outcome))?;
            Ok(match outcome {
                ChiOutcome::Exact { value } => {
                    eprintln!("χ_i = {value}");
                    PASS
                }
                ChiOutcome::Unknown { lower, upper } => {
                    eprintln!("{lower} ≤ χ_i ≤ {upper}");
                    INCOMPLETE
                }
            })
        }
        Command::Construct {
            spec,
            family,
            lists,
            pre,
            trace,
        } => {
            let (g, spec) = load_spec(&spec, &family)?;
            let l = lists_from_json(&g, &read(&lists)?)?;
            let pre: Vec<Precoloured> = match pre {
                Some(p) => serde_json::from_str(&read(&p)?).context("parsing pre-colouring")?,
                None => Vec::new(),
            };
            match construct(&spec, &g, &l, &pre) {
                Ok(report) => {
                    emit(
                        &out,
                        "colouring.json",
                        &colouring_to_json(&g, &report.colouring),
                    )?;
                    if let Some(path) = trace {
                        fs::write(&path, json(&report.trace))
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    let verdict = validate_colouring(&g, Some(&l), &report.colouring)?;
                    eprintln!("{}", trace_summary(&report));
                    Ok(if verdict.is_valid() { PASS } else { FAILURES })
                }
                Err(e) if e.is_algorithm_failure() => {
                    eprintln!("construction failed: {e}");
                    Ok(FAILURES)
                }
                Err(e) => bail!(e),
            }
        }
        Command::Fuzz {
            campaign,
            family,
            instances,
            trials,
            k,
            universe,
            precolour,
            workers,
        } => {
            let c = match campaign {
                Some(path) => serde_json::from_str(&read(&path)?).context("parsing campaign")?,
                None => {
                    let Some(f) = family.family else {
                        bail!("give --campaign or --family")
                    };
                    let mut rng = ChaCha8Rng::seed_from_u64(family.dims.seed);
                    let specs = (0..instances)
                        .map(|_| family.dims.build(f, &mut rng).map(|(_, s)| s))
                        .collect::<Result<Vec<_>>>()?;
                    FuzzCampaign {
                        instances: specs,
                        list_size: k
                            .map_or(ListSizeRule::TheoremBound, |k| ListSizeRule::Explicit { k }),
                        universe,
                        trials,
                        master_seed: family.dims.seed,
                        precolour,
                    }
                }
            };
            let report = run_campaign_with_workers(&c, workers)?;
            emit(&out, "report.json", &json(&report))?;
            eprint!("{}", report.summary());
            Ok(if report.failure_count() == 0 {
                PASS
            } else {
                FAILURES
            })
        }
        Command::Regress { budget, workers } => {
            let suite = default_regression_suite();
            let rows = rayon_pool(workers)?.install(|| regression_chi(&suite, &budget.config()));
            emit(&out, "regression.json", &json(&rows))?;
            for r in &rows {
                eprintln!(
                    "{:<4} expected {:<2} {:?} {:?}",
                    r.name, r.expected, r.outcome, r.status
                );
            }
            Ok(if rows.iter().any(|r| r.status == RegressionStatus::Fail) {
                FAILURES
            } else if rows.iter().any(|r| r.status == RegressionStatus::Unknown) {
                INCOMPLETE
            } else {
                PASS
            })
        }
        Command::ExportDot {
            graph,
            colouring,
            incidence,
        } => {
            let g = graph_from_json(&read(&graph)?)?;
            let c = match colouring {
                Some(p) => Some(colouring_from_json(&g, &read(&p)?)?),
                None => None,
            };
            let (name, dot) = if incidence {
                ("incidence.dot", incidence_graph_dot(&g, c.as_ref()))
            } else {
                ("graph.dot", graph_dot(&g, c.as_ref()))
            };
            emit(&out, name, &dot)?;
            Ok(PASS)
        }
    }
}

fn rayon_pool(workers: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?)
}

fn trace_summary(r: &ConstructiveReport) -> String {
    let mut s = format!(
        "{} incidences coloured with {} colours",
        r.trace.len(),
        r.colouring.colour_count()
    );
    for (rule, n) in r.rule_counts() {
        s.push_str(&format!("\n  {:<28} {n}", rule.tag()));
    }
    s
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(CONFIG)
        }
    }
}
