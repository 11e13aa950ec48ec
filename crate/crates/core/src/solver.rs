//! Exact engines: backtracking list colouring of `I_G`, the incidence
//! chromatic number, exhaustive choosability over a finite colour universe,
//! and the greedy colouring along a degeneracy order of `I_G`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::SolverError;
use crate::graph::{Colour, Graph, IncidenceColouring, IncidenceId, ListAssignment};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarOrder {
    /// Incidences in id order.
    Static,
    /// Smallest remaining domain first, ties by id.
    #[default]
    MostConstrained,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub order: VarOrder,
    /// Maximum number of search nodes before giving up.
    pub node_budget: Option<u64>,
    pub timeout: Option<Duration>,
}

impl SolverConfig {
    pub fn with_budget(nodes: u64) -> Self {
        Self {
            node_budget: Some(nodes),
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Colouring(IncidenceColouring),
    Unsatisfiable,
    /// Budget or timeout hit; nothing is known.
    Unknown {
        nodes: u64,
    },
}

impl SolveOutcome {
    pub fn colouring(&self) -> Option<&IncidenceColouring> {
        match self {
            Self::Colouring(c) => Some(c),
            _ => None,
        }
    }
}

/// Finds an `l`-respecting incidence colouring of `g`, if one exists.
pub fn solve_list_colouring(
    g: &Graph,
    l: &ListAssignment,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, SolverError> {
    solve_extending(g, l, &IncidenceColouring::empty(g.incidence_count()), cfg)
}

/// Like [`solve_list_colouring`], but the incidences coloured in `fixed` keep
/// their colours.
pub fn solve_extending(
    g: &Graph,
    l: &ListAssignment,
    fixed: &IncidenceColouring,
    cfg: &SolverConfig,
) -> Result<SolveOutcome, SolverError> {
    let m = g.incidence_count();
    if l.len() != m || fixed.len() != m {
        return Err(SolverError::MalformedLists {
            expected: m,
            found: if l.len() != m { l.len() } else { fixed.len() },
        });
    }
    let neighbours: Vec<Vec<IncidenceId>> = (0..m).map(|i| g.incidence_neighbourhood(i)).collect();
    let uniform =
        fixed.as_slice().iter().all(Option::is_none) && l.lists().windows(2).all(|w| w[0] == w[1]);
    let mut search = Search::new(l, neighbours, cfg, uniform);
    for id in 0..m {
        if let Some(c) = fixed.get(id) {
            let Some(idx) = search
                .palette
                .binary_search(&c)
                .ok()
                .filter(|_| l.contains(id, c))
            else {
                return Ok(SolveOutcome::Unsatisfiable);
            };
            if !search.domains[id].has(idx) || !search.assign(id, idx) {
                return Ok(SolveOutcome::Unsatisfiable);
            }
        }
    }
    Ok(match search.run() {
        Some(true) => SolveOutcome::Colouring(search.colouring()),
        Some(false) => SolveOutcome::Unsatisfiable,
        None => SolveOutcome::Unknown {
            nodes: search.nodes,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn remove(&mut self, i: usize) -> bool {
        let was = self.has(i);
        self.0[i / 64] &= !(1 << (i % 64));
        was
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            })
        })
    }
}

struct Search<'a> {
    cfg: &'a SolverConfig,
    palette: Vec<Colour>,
    neighbours: Vec<Vec<IncidenceId>>,
    domains: Vec<Bits>,
    value: Vec<Option<usize>>,
    trail: Vec<(IncidenceId, usize)>,
    uniform: bool,
    used_max: Option<usize>,
    nodes: u64,
    start: Instant,
}

impl<'a> Search<'a> {
    fn new(
        l: &ListAssignment,
        neighbours: Vec<Vec<IncidenceId>>,
        cfg: &'a SolverConfig,
        uniform: bool,
    ) -> Self {
        let mut palette: Vec<Colour> = l.lists().iter().flatten().copied().collect();
        palette.sort_unstable();
        palette.dedup();
        let words = palette.len().div_ceil(64).max(1);
        let domains = l
            .lists()
            .iter()
            .map(|list| {
                let mut b = Bits(vec![0; words]);
                for c in list {
                    b.insert(palette.binary_search(c).expect("palette covers lists"));
                }
                b
            })
            .collect();
        Self {
            cfg,
            palette,
            value: vec![None; neighbours.len()],
            neighbours,
            domains,
            trail: Vec::new(),
            uniform,
            used_max: None,
            nodes: 0,
            start: Instant::now(),
        }
    }

    /// Assigns and forward-checks; false on a wiped-out domain (the trail
    /// still records the removals so the caller can undo).
    fn assign(&mut self, id: IncidenceId, idx: usize) -> bool {
        self.value[id] = Some(idx);
        let mut ok = true;
        for k in 0..self.neighbours[id].len() {
            let j = self.neighbours[id][k];
            if self.value[j].is_none() && self.domains[j].remove(idx) {
                self.trail.push((j, idx));
                if self.domains[j].count() == 0 {
                    ok = false;
                }
            } else if self.value[j] == Some(idx) {
                ok = false;
            }
        }
        ok
    }

    fn undo(&mut self, id: IncidenceId, mark: usize) {
        self.value[id] = None;
        while self.trail.len() > mark {
            let (j, idx) = self.trail.pop().expect("non-empty trail");
            self.domains[j].insert(idx);
        }
    }

    fn pick(&self) -> Option<IncidenceId> {
        let free = (0..self.value.len()).filter(|&i| self.value[i].is_none());
        match self.cfg.order {
            VarOrder::Static => free.take(1).next(),
            VarOrder::MostConstrained => free.min_by_key(|&i| (self.domains[i].count(), i)),
        }
    }

    fn out_of_budget(&self) -> bool {
        if self.cfg.node_budget.is_some_and(|b| self.nodes >= b) {
            return true;
        }
        self.nodes.is_multiple_of(1024)
            && self.cfg.timeout.is_some_and(|t| self.start.elapsed() >= t)
    }

    /// Some(true) solved, Some(false) exhausted, None gave up.
    fn run(&mut self) -> Option<bool> {
        let Some(id) = self.pick() else {
            return Some(true);
        };
        let values: Vec<usize> = self.domains[id].iter().collect();
        for idx in values {
            // Under identical lists all colours beyond the largest used one
            // are interchangeable; trying the first of them suffices.
            let saved_max = self.used_max;
            if self.uniform {
                if self.used_max.map_or(idx > 0, |m| idx > m + 1) {
                    break;
                }
                self.used_max = Some(self.used_max.map_or(idx, |m| m.max(idx)));
            }
            if self.out_of_budget() {
                return None;
            }
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(id, idx) {
                match self.run() {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.undo(id, mark);
            self.used_max = saved_max;
        }
        Some(false)
    }

    fn colouring(&self) -> IncidenceColouring {
        IncidenceColouring::from_options(
            self.value
                .iter()
                .map(|v| v.map(|i| self.palette[i]))
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ChiOutcome {
    Exact {
        value: u32,
    },
    /// `lower ≤ χᵢ ≤ upper`.
    Unknown {
        lower: u32,
        upper: u32,
    },
}

/// Incidence chromatic number by increasing `p` from `Δ+1` with lists
/// `{1..p}` everywhere. Edgeless graphs give 0.
pub fn incidence_chromatic_number(g: &Graph, cfg: &SolverConfig) -> ChiOutcome {
    if g.edge_count() == 0 {
        return ChiOutcome::Exact { value: 0 };
    }
    let delta = g.max_degree() as u32;
    let upper = if delta >= 2 { 3 * delta - 2 } else { 2 };
    for p in delta + 1..=upper {
        let lists = ListAssignment::uniform(g, p);
        match solve_list_colouring(g, &lists, cfg).expect("uniform lists match the graph") {
            SolveOutcome::Colouring(_) => return ChiOutcome::Exact { value: p },
            SolveOutcome::Unsatisfiable => {}
            SolveOutcome::Unknown { .. } => return ChiOutcome::Unknown { lower: p, upper },
        }
    }
    // Unreachable for simple graphs; kept total.
    ChiOutcome::Unknown {
        lower: upper + 1,
        upper: upper + 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Choosability {
    /// Every canonical `k`-list assignment over the universe is colourable.
    Choosable {
        assignments: u64,
    },
    Counterexample(ListAssignment),
}

/// Checks `L`-colourability for every `k`-list assignment drawn from
/// `{1..universe}`, up to renaming of colours.
///
/// Lists are enumerated incidence by incidence; the first is `{1..k}` and
/// each later list may only use colours already seen plus the next unused
/// ones in increasing order. `budget` caps the number of assignments.
pub fn check_choosability_exhaustive(
    g: &Graph,
    k: usize,
    universe: usize,
    budget: u64,
    cfg: &SolverConfig,
) -> Result<Choosability, SolverError> {
    if universe < k {
        return Err(SolverError::UniverseTooSmall { universe, k });
    }
    let m = g.incidence_count();
    let limit = k * m;
    if universe > limit.max(k) {
        return Err(SolverError::UniverseTooLarge { universe, limit });
    }
    let mut state = Enumeration {
        g,
        k,
        universe,
        budget,
        cfg,
        lists: Vec::with_capacity(m),
        count: 0,
    };
    match state.extend(0)? {
        Some(l) => Ok(Choosability::Counterexample(l)),
        None => Ok(Choosability::Choosable {
            assignments: state.count,
        }),
    }
}

struct Enumeration<'a> {
    g: &'a Graph,
    k: usize,
    universe: usize,
    budget: u64,
    cfg: &'a SolverConfig,
    lists: Vec<Vec<Colour>>,
    count: u64,
}

impl Enumeration<'_> {
    fn extend(&mut self, seen: usize) -> Result<Option<ListAssignment>, SolverError> {
        if self.lists.len() == self.g.incidence_count() {
            self.count += 1;
            if self.count > self.budget {
                return Err(SolverError::Infeasible {
                    budget: self.budget,
                });
            }
            let l = ListAssignment::new(self.lists.clone()).expect("non-empty lists");
            return match solve_list_colouring(self.g, &l, self.cfg)? {
                SolveOutcome::Unsatisfiable => Ok(Some(l)),
                SolveOutcome::Colouring(_) => Ok(None),
                SolveOutcome::Unknown { .. } => Err(SolverError::Infeasible {
                    budget: self.budget,
                }),
            };
        }
        let max_fresh = self.k.min(self.universe - seen);
        for fresh in 0..=max_fresh {
            let old = self.k - fresh;
            if old > seen {
                continue;
            }
            for subset in subsets(seen, old) {
                let mut list: Vec<Colour> = subset.iter().map(|&c| c as Colour + 1).collect();
                list.extend((seen + 1..=seen + fresh).map(|c| c as Colour));
                self.lists.push(list);
                let r = self.extend(seen + fresh)?;
                self.lists.pop();
                if r.is_some() {
                    return Ok(r);
                }
            }
        }
        Ok(None)
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    rec(0, n, r, &mut cur, &mut out);
    out
}

/// A degeneracy ordering: `order` is the min-degree removal sequence and
/// `degeneracy` the largest degree seen at removal time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

/// Bucket-queue min-degree elimination.
pub fn degeneracy_order(g: &Graph) -> DegeneracyOrder {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); maxd + 1];
    for v in (0..n).rev() {
        buckets[deg[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut low = 0;
    while order.len() < n {
        low = low.min(maxd);
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop().expect("non-empty bucket");
        // Lazy deletion: skip stale entries.
        if removed[v] || deg[v] != low {
            continue;
        }
        removed[v] = true;
        degeneracy = degeneracy.max(low);
        order.push(v);
        for &u in g.neighbours(v) {
            if !removed[u] {
                deg[u] -= 1;
                buckets[deg[u]].push(u);
                low = low.min(deg[u]);
            }
        }
    }
    DegeneracyOrder { order, degeneracy }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Colouring(IncidenceColouring),
    /// No list colour was free at this incidence.
    Stuck(IncidenceId),
}

/// Colours `I_G` in reverse degeneracy order with the smallest free colour.
/// Succeeds whenever every list exceeds the degeneracy of `I_G`.
pub fn greedy_degenerate(g: &Graph, l: &ListAssignment) -> GreedyOutcome {
    let ig = g.incidence_graph();
    let order = degeneracy_order(&ig).order;
    let mut c = IncidenceColouring::empty(ig.n());
    for &id in order.iter().rev() {
        let taken: Vec<Colour> = ig.neighbours(id).iter().filter_map(|&j| c.get(j)).collect();
        match l.list(id).iter().find(|x| !taken.contains(x)) {
            Some(&x) => c.set(id, x),
            None => return GreedyOutcome::Stuck(id),
        }
    }
    GreedyOutcome::Colouring(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_basic, gen_grid, BasicFamily};
    use crate::graph::validate_colouring;

    fn cycle(n: usize) -> Graph {
        gen_basic(BasicFamily::Cycle, n).unwrap().0
    }

    fn exact(g: &Graph) -> u32 {
        match incidence_chromatic_number(g, &SolverConfig::default()) {
            ChiOutcome::Exact { value } => value,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cycles_with_three_colours() {
        let cfg = SolverConfig::default();
        let c6 = cycle(6);
        let out = solve_list_colouring(&c6, &ListAssignment::uniform(&c6, 3), &cfg).unwrap();
        let col = out.colouring().expect("C6 is 3-incidence-colourable");
        assert!(validate_colouring(&c6, None, col).unwrap().is_valid());
        let c4 = cycle(4);
        let out = solve_list_colouring(&c4, &ListAssignment::uniform(&c4, 3), &cfg).unwrap();
        assert_eq!(out, SolveOutcome::Unsatisfiable);
    }

    #[test]
    fn k2_with_singletons() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let l = ListAssignment::for_graph(&k2, vec![vec![1], vec![2]]).unwrap();
        let out = solve_list_colouring(&k2, &l, &SolverConfig::default()).unwrap();
        assert_eq!(
            out,
            SolveOutcome::Colouring(IncidenceColouring::from_total(vec![1, 2]))
        );
    }

    #[test]
    fn static_order_agrees() {
        let cfg = SolverConfig {
            order: VarOrder::Static,
            ..SolverConfig::default()
        };
        for n in 3..9 {
            let g = cycle(n);
            let out = solve_list_colouring(&g, &ListAssignment::uniform(&g, 3), &cfg).unwrap();
            assert_eq!(out.colouring().is_some(), n % 3 == 0);
        }
    }

    #[test]
    fn budget_gives_unknown() {
        let g = cycle(11);
        let out = solve_list_colouring(
            &g,
            &ListAssignment::uniform(&g, 3),
            &SolverConfig::with_budget(3),
        )
        .unwrap();
        assert!(matches!(out, SolveOutcome::Unknown { .. }));
    }

    #[test]
    fn fixed_colours_respected() {
        let g = cycle(6);
        let l = ListAssignment::uniform(&g, 3);
        let mut fixed = IncidenceColouring::empty(12);
        fixed.set(0, 3);
        let out = solve_extending(&g, &l, &fixed, &SolverConfig::default()).unwrap();
        assert_eq!(out.colouring().unwrap().get(0), Some(3));
        fixed.set(1, 3);
        // Incidences 0 and 1 are both at vertex 0.
        let out = solve_extending(&g, &l, &fixed, &SolverConfig::default()).unwrap();
        assert_eq!(out, SolveOutcome::Unsatisfiable);
    }

    #[test]
    fn chromatic_numbers() {
        for (n, want) in [(3, 3), (4, 4), (5, 4), (6, 3), (7, 4), (9, 3)] {
            assert_eq!(exact(&cycle(n)), want, "C{n}");
        }
        assert_eq!(exact(&Graph::empty(3)), 0);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(exact(&k2), 2);
        let s4 = gen_basic(BasicFamily::Star, 4).unwrap().0;
        assert_eq!(exact(&s4), 5);
    }

    #[test]
    fn choosability_small_cases() {
        let cfg = SolverConfig::default();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            check_choosability_exhaustive(&k2, 2, 4, 1 << 20, &cfg).unwrap(),
            Choosability::Choosable { .. }
        ));
        let c3 = cycle(3);
        let Choosability::Counterexample(l) =
            check_choosability_exhaustive(&c3, 2, 4, 1 << 20, &cfg).unwrap()
        else {
            panic!("C3 is not 2-choosable");
        };
        assert_eq!(
            solve_list_colouring(&c3, &l, &cfg).unwrap(),
            SolveOutcome::Unsatisfiable
        );
        let p3 = gen_basic(BasicFamily::Path, 3).unwrap().0;
        assert!(matches!(
            check_choosability_exhaustive(&p3, 3, 6, 1 << 24, &cfg).unwrap(),
            Choosability::Choosable { .. }
        ));
    }

    #[test]
    fn choosability_errors() {
        let cfg = SolverConfig::default();
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(
            check_choosability_exhaustive(&k2, 3, 2, 10, &cfg),
            Err(SolverError::UniverseTooSmall { universe: 2, k: 3 })
        );
        assert!(matches!(
            check_choosability_exhaustive(&k2, 2, 5, 10, &cfg),
            Err(SolverError::UniverseTooLarge { .. })
        ));
        assert_eq!(
            check_choosability_exhaustive(&k2, 2, 4, 1, &cfg),
            Err(SolverError::Infeasible { budget: 1 })
        );
    }

    #[test]
    fn canonical_enumeration_counts() {
        // Two lists of size 1: {1} then {1} or {2}.
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let cfg = SolverConfig::default();
        let r = check_choosability_exhaustive(&k2, 1, 2, 100, &cfg).unwrap();
        assert!(matches!(r, Choosability::Counterexample(_)));
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn degeneracy_of_small_graphs() {
        assert_eq!(degeneracy_order(&cycle(5)).degeneracy, 2);
        let k4 = gen_basic(BasicFamily::Complete, 4).unwrap().0;
        assert_eq!(degeneracy_order(&k4).degeneracy, 3);
        let t = gen_basic(BasicFamily::Star, 6).unwrap().0;
        let d = degeneracy_order(&t);
        assert_eq!(d.degeneracy, 1);
        let mut o = d.order.clone();
        o.sort_unstable();
        assert_eq!(o, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn greedy_on_grid_and_tree() {
        let (g, _) = gen_grid(4, 4).unwrap();
        let l = ListAssignment::uniform(&g, 7);
        let GreedyOutcome::Colouring(c) = greedy_degenerate(&g, &l) else {
            panic!("grid greedy failed")
        };
        assert!(validate_colouring(&g, Some(&l), &c).unwrap().is_valid());
        let t = gen_basic(BasicFamily::Star, 5).unwrap().0;
        let l = ListAssignment::uniform(&t, 6);
        assert!(matches!(
            greedy_degenerate(&t, &l),
            GreedyOutcome::Colouring(_)
        ));
    }

    #[test]
    fn greedy_reports_stuck() {
        let c3 = cycle(3);
        let l = ListAssignment::uniform(&c3, 2);
        assert!(matches!(
            greedy_degenerate(&c3, &l),
            GreedyOutcome::Stuck(_)
        ));
    }
}
