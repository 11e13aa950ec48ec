//! Seeded list assignments, fuzz campaigns over the constructive colourings,
//! and the exact-value regression table.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructive::{construct, corona_bound, theorem_bound, Precoloured};
use crate::error::HarnessError;
use crate::generators::{corona_pendant, gen_basic, BasicFamily, FamilySpec};
use crate::graph::{validate_colouring, Colour, Graph, ListAssignment};
use crate::solver::{incidence_chromatic_number, ChiOutcome, SolverConfig};

/// Every incidence gets a uniform `k`-subset of `{1..universe}`.
pub fn random_list_assignment(
    g: &Graph,
    k: usize,
    universe: usize,
    seed: u64,
) -> Result<ListAssignment, HarnessError> {
    if k == 0 || k > universe {
        return Err(HarnessError::ListSize { k, universe });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..g.incidence_count())
        .map(|_| {
            rand::seq::index::sample(&mut rng, universe, k)
                .into_iter()
                .map(|i| i as Colour + 1)
                .collect()
        })
        .collect();
    Ok(ListAssignment::new(lists).expect("k >= 1"))
}

/// Seed of one trial; a splitmix64 chain over the three inputs.
pub fn trial_seed(master: u64, instance: usize, trial: usize) -> u64 {
    fn mix(mut z: u64) -> u64 {
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
    mix(mix(mix(master) ^ instance as u64) ^ trial as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum ListSizeRule {
    TheoremBound,
    Explicit { k: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FuzzCampaign {
    pub instances: Vec<FamilySpec>,
    pub list_size: ListSizeRule,
    /// Defaults to `3k`.
    pub universe: Option<usize>,
    pub trials: usize,
    pub master_seed: u64,
    /// Coronae only: fix the pendant edge `v_0 v_0^1` before colouring.
    #[serde(default)]
    pub precolour: bool,
}

impl FuzzCampaign {
    pub fn at_bound(instances: Vec<FamilySpec>, trials: usize, master_seed: u64) -> Self {
        Self {
            instances,
            list_size: ListSizeRule::TheoremBound,
            universe: None,
            trials,
            master_seed,
            precolour: false,
        }
    }
}

/// Everything needed to rerun one trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureBundle {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub lists: ListAssignment,
    pub pre: Vec<Precoloured>,
    pub seed: u64,
    pub trial: usize,
    pub error: String,
}

impl FailureBundle {
    /// Reruns the trial; returns the failure message, or `None` if it passes.
    pub fn replay(&self) -> Option<String> {
        run_trial(&self.spec, &self.graph, &self.lists, &self.pre).err()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub spec: FamilySpec,
    pub k: usize,
    pub universe: usize,
    pub trials: usize,
    pub successes: usize,
    pub failures: Vec<FailureBundle>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub instances: Vec<InstanceReport>,
    pub wall_seconds: f64,
}

impl CampaignReport {
    pub fn failure_count(&self) -> usize {
        self.instances.iter().map(|i| i.failures.len()).sum()
    }

    pub fn trial_count(&self) -> usize {
        self.instances.iter().map(|i| i.trials).sum()
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.instances {
            s.push_str(&format!(
                "{:<60} k={:<2} trials={:<5} ok={:<5} failed={}\n",
                describe(&r.spec),
                r.k,
                r.trials,
                r.successes,
                r.failures.len()
            ));
        }
        s.push_str(&format!(
            "total: {} trials, {} failures, {:.2}s\n",
            self.trial_count(),
            self.failure_count(),
            self.wall_seconds
        ));
        s
    }
}

/// Short human label for a spec.
pub fn describe(spec: &FamilySpec) -> String {
    match spec {
        FamilySpec::Path { n } => format!("path n={n}"),
        FamilySpec::Cycle { n } => format!("cycle n={n}"),
        FamilySpec::Star { n } => format!("star n={n}"),
        FamilySpec::Wheel { n } => format!("wheel n={n}"),
        FamilySpec::Complete { n } => format!("complete n={n}"),
        FamilySpec::Grid { m, n } => format!("grid {m}x{n}"),
        FamilySpec::Tree { n, .. } => format!("tree n={n}"),
        FamilySpec::Halin { n, .. } => format!("halin n={n}"),
        FamilySpec::Corona { n, p } => format!("corona n={n} p={p}"),
        FamilySpec::Cactus { n, cycles, .. } => format!("cactus n={n} cycles={}", cycles.len()),
        FamilySpec::HamCubic { n, .. } => format!("ham_cubic n={n}"),
        FamilySpec::CyclePower { n, p } => format!("cycle_power n={n} p={p}"),
    }
}

fn run_trial(
    spec: &FamilySpec,
    g: &Graph,
    l: &ListAssignment,
    pre: &[Precoloured],
) -> Result<(), String> {
    let r = construct(spec, g, l, pre).map_err(|e| e.to_string())?;
    let v = validate_colouring(g, Some(l), &r.colouring).map_err(|e| e.to_string())?;
    if !v.is_valid() {
        return Err(format!("invalid colouring: {v:?}"));
    }
    if pre
        .iter()
        .any(|p| r.colouring.get(p.incidence) != Some(p.colour))
    {
        return Err("pre-coloured incidence changed".into());
    }
    Ok(())
}

/// Pre-colouring of the corona pendant edge drawn from the trial lists.
fn corona_pre(spec: &FamilySpec, g: &Graph, l: &ListAssignment, seed: u64) -> Vec<Precoloured> {
    let FamilySpec::Corona { n, p } = spec else {
        return Vec::new();
    };
    let x = corona_pendant(*n, *p, 0, 1);
    let (i, e) = (g.id(0, x), g.id(x, 0));
    let la = l.list(i);
    let a = la[(seed % la.len() as u64) as usize];
    let b = *l
        .list(e)
        .iter()
        .find(|&&c| c != a)
        .expect("lists have two colours");
    vec![
        Precoloured {
            incidence: i,
            colour: a,
        },
        Precoloured {
            incidence: e,
            colour: b,
        },
    ]
}

/// Runs every trial of every instance on the current rayon pool.
pub fn run_campaign(c: &FuzzCampaign) -> Result<CampaignReport, HarnessError> {
    let start = Instant::now();
    let mut prepared = Vec::new();
    for spec in &c.instances {
        let g = spec
            .build()
            .map_err(|e| HarnessError::Config(e.to_string()))?;
        let bound = theorem_bound(spec, &g)
            .ok_or_else(|| HarnessError::Config(format!("no construction for {}", spec.tag())))?;
        let bound = match spec {
            FamilySpec::Corona { n, p } if c.precolour => corona_bound(*n, *p, true),
            _ => bound,
        };
        let k = match c.list_size {
            ListSizeRule::TheoremBound => bound,
            ListSizeRule::Explicit { k } => k,
        };
        let universe = c.universe.unwrap_or(3 * k);
        if k == 0 || k > universe {
            return Err(HarnessError::ListSize { k, universe });
        }
        if c.precolour && !matches!(spec, FamilySpec::Corona { .. }) {
            return Err(HarnessError::Config(
                "pre-colouring is supported for coronae only".into(),
            ));
        }
        prepared.push((spec, g, k, universe));
    }
    let jobs: Vec<(usize, usize)> = (0..prepared.len())
        .flat_map(|i| (0..c.trials).map(move |t| (i, t)))
        .collect();
    let outcomes: Vec<Option<FailureBundle>> = jobs
        .par_iter()
        .map(|&(i, t)| {
            let (spec, g, k, universe) = &prepared[i];
            let seed = trial_seed(c.master_seed, i, t);
            let lists = random_list_assignment(g, *k, *universe, seed).expect("checked above");
            let pre = if c.precolour {
                corona_pre(spec, g, &lists, seed)
            } else {
                Vec::new()
            };
            run_trial(spec, g, &lists, &pre)
                .err()
                .map(|error| FailureBundle {
                    spec: (*spec).clone(),
                    graph: g.clone(),
                    lists,
                    pre,
                    seed,
                    trial: t,
                    error,
                })
        })
        .collect();
    let mut instances: Vec<InstanceReport> = prepared
        .iter()
        .map(|(spec, _, k, universe)| InstanceReport {
            spec: (*spec).clone(),
            k: *k,
            universe: *universe,
            trials: c.trials,
            successes: 0,
            failures: Vec::new(),
        })
        .collect();
    for (&(i, _), out) in jobs.iter().zip(outcomes) {
        match out {
            Some(f) => instances[i].failures.push(f),
            None => instances[i].successes += 1,
        }
    }
    Ok(CampaignReport {
        instances,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Runs the campaign on a dedicated pool of `workers` threads.
pub fn run_campaign_with_workers(
    c: &FuzzCampaign,
    workers: usize,
) -> Result<CampaignReport, HarnessError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| HarnessError::Config(e.to_string()))?;
    pool.install(|| run_campaign(c))
}

/// Value of the incidence chromatic number of `K_4` found by exact search.
pub const CHI_K4: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegressionCase {
    pub name: String,
    pub graph: Graph,
    pub expected: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegressionStatus {
    Pass,
    Fail,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegressionRow {
    pub name: String,
    pub expected: u32,
    pub outcome: ChiOutcome,
    pub status: RegressionStatus,
}

/// Cycles `C_3..C_12`, stars `S_2..S_5` and `K_4`.
pub fn default_regression_suite() -> Vec<RegressionCase> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push(RegressionCase {
            name: format!("C{n}"),
            graph: gen_basic(BasicFamily::Cycle, n).expect("n >= 3").0,
            expected: if n % 3 == 0 { 3 } else { 4 },
        });
    }
    for n in 2..=5 {
        out.push(RegressionCase {
            name: format!("S{n}"),
            graph: gen_basic(BasicFamily::Star, n).expect("n >= 1").0,
            expected: n as u32 + 1,
        });
    }
    out.push(RegressionCase {
        name: "K4".into(),
        graph: gen_basic(BasicFamily::Complete, 4).expect("n >= 1").0,
        expected: CHI_K4,
    });
    out
}

/// Exact `χ_i` for each case, compared with its expected value.
pub fn regression_chi(suite: &[RegressionCase], cfg: &SolverConfig) -> Vec<RegressionRow> {
    suite
        .par_iter()
        .map(|c| {
            let outcome = incidence_chromatic_number(&c.graph, cfg);
            let status = match outcome {
                ChiOutcome::Exact { value } if value == c.expected => RegressionStatus::Pass,
                ChiOutcome::Exact { .. } => RegressionStatus::Fail,
                ChiOutcome::Unknown { .. } => RegressionStatus::Unknown,
            };
            RegressionRow {
                name: c.name.clone(),
                expected: c.expected,
                outcome,
                status,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_list_colouring, SolveOutcome};

    #[test]
    fn full_universe_gives_identical_lists() {
        let g = gen_basic(BasicFamily::Cycle, 5).unwrap().0;
        let l = random_list_assignment(&g, 4, 4, 11).unwrap();
        assert!(l.lists().iter().all(|x| x == &vec![1, 2, 3, 4]));
    }

    #[test]
    fn deterministic_per_seed() {
        let g = gen_basic(BasicFamily::Cycle, 3).unwrap().0;
        assert_eq!(
            random_list_assignment(&g, 3, 9, 0).unwrap(),
            random_list_assignment(&g, 3, 9, 0).unwrap()
        );
        assert_ne!(
            random_list_assignment(&g, 3, 9, 0).unwrap(),
            random_list_assignment(&g, 3, 9, 1).unwrap()
        );
    }

    #[test]
    fn rejects_bad_sizes() {
        let g = gen_basic(BasicFamily::Cycle, 3).unwrap().0;
        assert_eq!(
            random_list_assignment(&g, 5, 4, 0),
            Err(HarnessError::ListSize { k: 5, universe: 4 })
        );
        assert!(random_list_assignment(&g, 0, 4, 0).is_err());
    }

    #[test]
    fn two_subsets_are_uniform() {
        // One incidence, k = 2 of 4: six subsets, each with probability 1/6.
        let g = gen_basic(BasicFamily::Path, 2).unwrap().0;
        let draws = 10_000;
        let mut counts = std::collections::HashMap::new();
        for seed in 0..draws {
            let l = random_list_assignment(&g, 2, 4, seed).unwrap();
            *counts.entry(l.list(0).to_vec()).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 6);
        let p = 1.0 / 6.0;
        let mean = draws as f64 * p;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        for (s, &c) in &counts {
            assert!((c as f64 - mean).abs() <= 5.0 * sigma, "{s:?}: {c}");
        }
    }

    #[test]
    fn seeds_differ_across_coordinates() {
        let mut seen = std::collections::HashSet::new();
        for i in 0..20 {
            for t in 0..20 {
                assert!(seen.insert(trial_seed(7, i, t)));
            }
        }
    }

    #[test]
    fn k4_constant_matches_search() {
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap().0;
        assert_eq!(
            incidence_chromatic_number(&k4, &SolverConfig::default()),
            ChiOutcome::Exact { value: CHI_K4 }
        );
        let below = ListAssignment::uniform(&k4, CHI_K4 - 1);
        assert_eq!(
            solve_list_colouring(&k4, &below, &SolverConfig::default()).unwrap(),
            SolveOutcome::Unsatisfiable
        );
    }

    #[test]
    fn campaign_independent_of_workers() {
        let c = FuzzCampaign::at_bound(
            vec![
                FamilySpec::Grid { m: 4, n: 2 },
                FamilySpec::Corona { n: 4, p: 3 },
            ],
            25,
            99,
        );
        let a = run_campaign_with_workers(&c, 1).unwrap();
        let b = run_campaign_with_workers(&c, 4).unwrap();
        assert_eq!(a.instances, b.instances);
        assert_eq!(a.failure_count(), 0);
    }

    #[test]
    fn below_bound_failures_replay() {
        let c = FuzzCampaign {
            instances: vec![FamilySpec::Grid { m: 4, n: 2 }],
            list_size: ListSizeRule::Explicit { k: 4 },
            universe: None,
            trials: 20,
            master_seed: 1,
            precolour: false,
        };
        let r = run_campaign(&c).unwrap();
        // Below the bound the construction refuses every trial; each refusal
        // is recorded and reproduces from its bundle.
        assert_eq!(r.failure_count(), 20);
        for f in &r.instances[0].failures {
            assert_eq!(f.replay().as_deref(), Some(f.error.as_str()));
        }
    }

    #[test]
    fn precoloured_corona_campaign() {
        let mut c = FuzzCampaign::at_bound(vec![FamilySpec::Corona { n: 3, p: 4 }], 30, 5);
        c.precolour = true;
        let r = run_campaign(&c).unwrap();
        assert_eq!(
            r.failure_count(),
            0,
            "{:?}",
            r.instances[0].failures.first().map(|f| &f.error)
        );
        c.instances = vec![FamilySpec::Grid { m: 3, n: 3 }];
        assert!(matches!(run_campaign(&c), Err(HarnessError::Config(_))));
    }

    #[test]
    fn regression_table_passes() {
        let rows = regression_chi(&default_regression_suite(), &SolverConfig::default());
        for r in &rows {
            assert_eq!(r.status, RegressionStatus::Pass, "{r:?}");
        }
    }
}
