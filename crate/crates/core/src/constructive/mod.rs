//! Polynomial-time list incidence colourings for trees, grids, Halin graphs,
//! coronae of cycles, cactuses and Hamiltonian cubic graphs.
//!
//! Every procedure is deterministic: wherever a free choice is allowed the
//! smallest admissible colour is taken. Lists longer than the bound the
//! procedure works with are first cut down to exactly that many colours
//! (keeping pre-coloured colours), because several selection arguments
//! compare lists of equal size.

mod cactus;
mod corona;
mod cubic;
mod grid;
mod halin;
mod tree;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ConstructError, GraphError};
use crate::generators::{gen_basic, BasicFamily, FamilySpec};
use crate::graph::{
    Colour, Graph, Incidence, IncidenceColouring, IncidenceId, ListAssignment, Vertex,
};
use crate::solver::{solve_list_colouring, SolveOutcome, SolverConfig};

pub use cactus::{cactus_bound, colour_cactus};
pub use corona::{colour_corona, corona_bound};
pub use cubic::{claim_ham_choose, colour_hamiltonian_cubic, HamChoice, HamClaimInput};
pub use grid::{
    colour_grid, grid_bound, grid_lemma_choose, GridLemmaCase, GridLemmaChoice, GridLemmaInput,
};
pub use halin::{
    claim_halin_choose, claim_k4_choose, colour_halin, colour_k4, halin_bound, HalinChoice,
    HalinClaimInput, K4Case, K4Choice,
};
pub use tree::colour_tree;

macro_rules! rules {
    ($($variant:ident => $tag:literal,)*) => {
        /// Step of a construction, recorded in the trace of every colour
        /// assignment. Tags are stable.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum Rule {
            $(#[serde(rename = $tag)] $variant,)*
        }

        impl Rule {
            pub const ALL: &'static [Rule] = &[$(Rule::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(Rule::$variant => $tag,)*
                }
            }
        }

        impl FromStr for Rule {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($tag => Ok(Rule::$variant),)*
                    _ => Err(format!("unknown rule tag `{s}`")),
                }
            }
        }
    };
}

rules! {
    TreePrecoloured => "tree-precoloured",
    TreeBaseEdge => "tree-base-edge",
    TreeTopDown => "tree-top-down",
    GridSquareFirst => "grid-square-first",
    GridSquareNext => "grid-square-next",
    GridStep1 => "grid-step-1",
    GridStep2 => "grid-step-2",
    GridStep3a => "grid-step-3a",
    GridStep3b => "grid-step-3b",
    GridStep3c => "grid-step-3c",
    GridStep4 => "grid-step-4",
    GridStep5 => "grid-step-5",
    HalinTree => "halin-tree",
    HalinCycleSearch => "halin-cycle-search",
    HalinClaim => "halin-claim",
    HalinPath => "halin-path",
    HalinEndpoint => "halin-endpoint",
    HalinPathExternal => "halin-path-external",
    HalinSubtree => "halin-subtree",
    HalinCycle => "halin-cycle",
    HalinCycleClose => "halin-cycle-close",
    HalinSearchFallback => "halin-search-fallback",
    K4Claim => "halin-k4-claim",
    K4Case1 => "halin-claim-case-1",
    K4Case2a => "halin-claim-case-2a",
    K4Case2b => "halin-claim-case-2b",
    K4Case2bSelect => "halin-claim-case-2b-select",
    K4Disjoint => "halin-k4-disjoint",
    CoronaPrecoloured => "corona-precoloured",
    CoronaPendantEdge => "corona-pendant-edge",
    CoronaSelectC => "corona-select-c",
    CoronaCycle => "corona-cycle",
    CoronaSelectCd => "corona-select-cd",
    CoronaAlpha => "corona-alpha",
    CoronaCycleRest => "corona-cycle-rest",
    CoronaInternal => "corona-internal",
    CoronaExternal => "corona-external",
    CactusNormal => "cactus-normal",
    HamClaim => "ham-claim",
    HamMatching => "ham-matching",
    HamCycle => "ham-cycle",
    HamCycleClose => "ham-cycle-close",
    CycleSearch => "cycle-search",
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An incidence whose colour is fixed in advance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Precoloured {
    pub incidence: IncidenceId,
    pub colour: Colour,
}

/// One colour assignment made by a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub id: IncidenceId,
    pub incidence: Incidence,
    pub colour: Colour,
    pub rule: Rule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructiveReport {
    pub colouring: IncidenceColouring,
    pub trace: Vec<TraceStep>,
}

impl ConstructiveReport {
    /// Re-applies the trace in order onto an empty colouring.
    pub fn replay(&self) -> IncidenceColouring {
        let mut c = IncidenceColouring::empty(self.colouring.len());
        for s in &self.trace {
            c.set(s.id, s.colour);
        }
        c
    }

    /// Trace steps per rule, in first-use order.
    pub fn rule_counts(&self) -> Vec<(Rule, usize)> {
        let mut out: Vec<(Rule, usize)> = Vec::new();
        for s in &self.trace {
            match out.iter_mut().find(|(r, _)| *r == s.rule) {
                Some((_, n)) => *n += 1,
                None => out.push((s.rule, 1)),
            }
        }
        out
    }
}

/// Partial colouring under construction, with clash checking and a trace.
pub(crate) struct Painter<'g> {
    g: &'g Graph,
    lists: ListAssignment,
    colouring: IncidenceColouring,
    trace: Vec<TraceStep>,
}

impl<'g> Painter<'g> {
    pub(crate) fn new(g: &'g Graph, lists: ListAssignment) -> Self {
        Self {
            g,
            colouring: IncidenceColouring::empty(g.incidence_count()),
            lists,
            trace: Vec::new(),
        }
    }

    pub(crate) fn graph(&self) -> &'g Graph {
        self.g
    }

    pub(crate) fn list(&self, id: IncidenceId) -> &[Colour] {
        self.lists.list(id)
    }

    pub(crate) fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub(crate) fn colour(&self, id: IncidenceId) -> Option<Colour> {
        self.colouring.get(id)
    }

    pub(crate) fn colouring(&self) -> &IncidenceColouring {
        &self.colouring
    }

    /// List colours not used on any coloured adjacent incidence.
    pub(crate) fn available(&self, id: IncidenceId) -> Vec<Colour> {
        let used: Vec<Colour> = self
            .g
            .incidence_neighbourhood(id)
            .into_iter()
            .filter_map(|j| self.colouring.get(j))
            .collect();
        self.lists
            .list(id)
            .iter()
            .copied()
            .filter(|c| !used.contains(c))
            .collect()
    }

    pub(crate) fn set(
        &mut self,
        id: IncidenceId,
        colour: Colour,
        rule: Rule,
    ) -> Result<(), ConstructError> {
        if !self.lists.contains(id, colour) {
            return Err(ConstructError::OffList {
                incidence: id,
                colour,
                rule,
            });
        }
        if let Some(with) = self
            .g
            .incidence_neighbourhood(id)
            .into_iter()
            .find(|&j| self.colouring.get(j) == Some(colour))
        {
            return Err(ConstructError::Clash {
                incidence: id,
                colour,
                with,
                rule,
            });
        }
        self.colouring.set(id, colour);
        self.trace.push(TraceStep {
            id,
            incidence: self.g.incidence(id),
            colour,
            rule,
        });
        Ok(())
    }

    /// Smallest available colour.
    pub(crate) fn greedy(&mut self, id: IncidenceId, rule: Rule) -> Result<Colour, ConstructError> {
        let c = *self.available(id).first().ok_or(ConstructError::Stuck {
            incidence: id,
            rule,
        })?;
        self.set(id, c, rule)?;
        Ok(c)
    }

    /// Greedy, unless already coloured.
    pub(crate) fn fill(&mut self, id: IncidenceId, rule: Rule) -> Result<(), ConstructError> {
        if self.colouring.get(id).is_none() {
            self.greedy(id, rule)?;
        }
        Ok(())
    }

    /// `greedy` on `(v, vu)`.
    pub(crate) fn fill_at(
        &mut self,
        v: Vertex,
        u: Vertex,
        rule: Rule,
    ) -> Result<(), ConstructError> {
        let id = self.g.id(v, u);
        self.fill(id, rule)
    }

    /// Copies a report on a graph whose vertex `i` is `map[i]` here. Already
    /// coloured incidences must carry the same colour.
    pub(crate) fn absorb(
        &mut self,
        local: &Graph,
        map: &[Vertex],
        report: &ConstructiveReport,
        keep: impl Fn(Vertex, Vertex) -> bool,
    ) -> Result<(), ConstructError> {
        for s in &report.trace {
            let (v, u) = (s.incidence.vertex, s.incidence.other);
            debug_assert_eq!(local.id(v, u), s.id);
            if !keep(v, u) {
                continue;
            }
            let id = self.g.id(map[v], map[u]);
            match self.colouring.get(id) {
                Some(c) if c == s.colour => {}
                Some(_) => {
                    return Err(ConstructError::Clash {
                        incidence: id,
                        colour: s.colour,
                        with: id,
                        rule: s.rule,
                    })
                }
                None => self.set(id, s.colour, s.rule)?,
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<ConstructiveReport, ConstructError> {
        if let Some(id) = (0..self.colouring.len()).find(|&i| self.colouring.get(i).is_none()) {
            return Err(ConstructError::Incomplete(id));
        }
        Ok(ConstructiveReport {
            colouring: self.colouring,
            trace: self.trace,
        })
    }
}

/// Checks list count and minimum size, then cuts every list to `k` colours,
/// keeping the pinned ones.
pub(crate) fn prepare_lists(
    g: &Graph,
    l: &ListAssignment,
    k: usize,
    pins: &[(IncidenceId, Colour)],
) -> Result<ListAssignment, ConstructError> {
    if l.len() != g.incidence_count() {
        return Err(GraphError::ListCount {
            expected: g.incidence_count(),
            found: l.len(),
        }
        .into());
    }
    if g.incidence_count() > 0 && l.min_size() < k {
        return Err(ConstructError::ListTooSmall {
            needed: k,
            found: l.min_size(),
        });
    }
    Ok(l.truncated(k, pins))
}

/// Subgraph on `vertices` (in that order) with the given host edges; vertex
/// `i` of the result is `vertices[i]`.
pub(crate) fn local_graph(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Graph {
    let pos = |v: Vertex| {
        vertices
            .iter()
            .position(|&x| x == v)
            .expect("edge inside vertex set")
    };
    let e: Vec<_> = edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
    Graph::new(vertices.len(), &e).expect("subgraph of a simple graph")
}

/// Lists of `local` read from `lists` on `host` through the vertex map.
pub(crate) fn local_lists(
    local: &Graph,
    map: &[Vertex],
    host: &Graph,
    lists: &ListAssignment,
) -> ListAssignment {
    let l = local
        .incidences()
        .into_iter()
        .map(|i| lists.list(host.id(map[i.vertex], map[i.other])).to_vec())
        .collect();
    ListAssignment::new(l).expect("host lists are non-empty")
}

pub(crate) fn smallest(it: impl IntoIterator<Item = Colour>) -> Option<Colour> {
    it.into_iter().min()
}

pub(crate) fn minus(list: &[Colour], excl: &[Colour]) -> Vec<Colour> {
    list.iter().copied().filter(|c| !excl.contains(c)).collect()
}

pub(crate) fn intersect(a: &[Colour], b: &[Colour]) -> Vec<Colour> {
    a.iter().copied().filter(|c| b.contains(c)).collect()
}

/// Incidences of the cycle `v[0] … v[n-1]` in the order in which
/// consecutive ones are adjacent: `s_{2i} = (v_i, v_i v_{i+1})`,
/// `s_{2i+1} = (v_{i+1}, v_{i+1} v_i)`.
pub(crate) fn cycle_sequence(g: &Graph, v: &[Vertex]) -> Vec<IncidenceId> {
    let n = v.len();
    (0..n)
        .flat_map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            [g.id(a, b), g.id(b, a)]
        })
        .collect()
}

/// Lists of size at least 4 (3 when `3 | n`) always admit a colouring of
/// `C_n`; the colouring itself is found by exact search.
pub fn colour_cycle(n: usize, l: &ListAssignment) -> Result<ConstructiveReport, ConstructError> {
    let g = gen_basic(BasicFamily::Cycle, n)
        .map_err(|e| ConstructError::pre(e.to_string()))?
        .0;
    let k = cycle_bound(n);
    let lists = prepare_lists(&g, l, k, &[])?;
    let mut painter = Painter::new(&g, lists);
    match solve_list_colouring(&g, painter.lists(), &SolverConfig::default()).expect("lists match")
    {
        SolveOutcome::Colouring(c) => {
            for id in 0..g.incidence_count() {
                painter.set(id, c.get(id).expect("total"), Rule::CycleSearch)?;
            }
            painter.finish()
        }
        _ => Err(ConstructError::Stuck {
            incidence: 0,
            rule: Rule::CycleSearch,
        }),
    }
}

pub fn cycle_bound(n: usize) -> usize {
    if n.is_multiple_of(3) {
        3
    } else {
        4
    }
}

/// Runs the construction matching `spec` on `g`.
///
/// `pre` is honoured by trees (any incidences) and coronae (the two
/// incidences of the pendant edge `v_0 v_0^1`, in that order).
pub fn construct(
    spec: &FamilySpec,
    g: &Graph,
    l: &ListAssignment,
    pre: &[Precoloured],
) -> Result<ConstructiveReport, ConstructError> {
    let built = spec
        .build()
        .map_err(|e| ConstructError::pre(e.to_string()))?;
    if &built != g {
        return Err(ConstructError::pre("graph does not match its family spec"));
    }
    let no_pre = |name: &str| {
        if pre.is_empty() {
            Ok(())
        } else {
            Err(ConstructError::Unsupported(format!(
                "pre-colouring for {name}"
            )))
        }
    };
    match spec {
        FamilySpec::Path { .. } | FamilySpec::Star { .. } | FamilySpec::Tree { .. } => {
            colour_tree(g, l, pre)
        }
        FamilySpec::Cycle { n } => {
            no_pre("cycles")?;
            colour_cycle(*n, l)
        }
        FamilySpec::Grid { m, n } => {
            no_pre("grids")?;
            colour_grid(*m, *n, l)
        }
        FamilySpec::Halin { .. } => {
            no_pre("Halin graphs")?;
            colour_halin(g, spec, l)
        }
        FamilySpec::Wheel { n } => {
            no_pre("wheels")?;
            let halin = wheel_as_halin(*n);
            colour_halin(g, &halin, l)
        }
        FamilySpec::Complete { n: 4 } => {
            no_pre("K4")?;
            colour_k4(g, l)
        }
        FamilySpec::Corona { n, p } => {
            let ab = match pre {
                [] => None,
                [a, b] => {
                    let p1 = crate::generators::corona_pendant(*n, *p, 0, 1);
                    if a.incidence != g.id(0, p1) || b.incidence != g.id(p1, 0) {
                        return Err(ConstructError::BadPrecolouring(
                            "corona pre-colouring must be ((v0,v0v0^1), (v0^1,v0^1v0))".into(),
                        ));
                    }
                    Some((a.colour, b.colour))
                }
                _ => {
                    return Err(ConstructError::BadPrecolouring(
                        "corona pre-colouring takes exactly two incidences".into(),
                    ))
                }
            };
            colour_corona(*n, *p, l, ab)
        }
        FamilySpec::Cactus { .. } => {
            no_pre("cactuses")?;
            colour_cactus(g, spec, l)
        }
        FamilySpec::HamCubic { .. } => {
            no_pre("Hamiltonian cubic graphs")?;
            colour_hamiltonian_cubic(g, spec, l)
        }
        other => Err(ConstructError::Unsupported(other.tag().to_string())),
    }
}

/// The wheel `W_n` (hub `n`) as a Halin spec over the star.
pub fn wheel_as_halin(n: usize) -> FamilySpec {
    FamilySpec::Halin {
        n: n + 1,
        tree_edges: (0..n).map(|i| (i, n)).collect(),
        leaf_order: (0..n).collect(),
    }
}

/// List size at which `construct` is guaranteed to succeed for `spec`.
pub fn theorem_bound(spec: &FamilySpec, g: &Graph) -> Option<usize> {
    Some(match spec {
        FamilySpec::Path { .. } | FamilySpec::Star { .. } | FamilySpec::Tree { .. } => {
            g.max_degree() + 1
        }
        FamilySpec::Cycle { n } => cycle_bound(*n),
        FamilySpec::Grid { m, n } => grid_bound(*m, *n),
        FamilySpec::Halin { .. } => halin_bound(g, spec)?,
        FamilySpec::Wheel { n } => halin_bound(g, &wheel_as_halin(*n))?,
        FamilySpec::Complete { n: 4 } => 6,
        FamilySpec::Corona { n, p } => corona_bound(*n, *p, false),
        FamilySpec::Cactus { cycles, .. } => {
            let s = crate::generators::CactusStructure::new(g, cycles);
            cactus_bound(g, &s)
        }
        FamilySpec::HamCubic { .. } => 6,
        _ => return None,
    })
}
