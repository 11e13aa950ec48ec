//! Graphs, incidences, list assignments and incidence colourings.
//!
//! A graph on `n` vertices has its vertices numbered `0..n`. Each edge
//! `{v, u}` contributes the two incidences `(v, vu)` and `(u, uv)`. Incidences
//! are enumerated in lexicographic order of `(vertex, other endpoint)` and an
//! incidence id is its position in that enumeration, so every per-incidence
//! map in this crate is a plain vector indexed by id.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;
pub type Colour = u32;
pub type IncidenceId = usize;

/// Simple undirected loopless graph with sorted adjacency lists.
///
/// Serializes as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphShape", try_from = "GraphShape")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    // offsets[v] is the id of the first incidence at v.
    offsets: Vec<usize>,
}

/// An incidence `(vertex, vertex·other)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: Vertex,
    pub other: Vertex,
}

impl Incidence {
    pub fn new(vertex: Vertex, other: Vertex) -> Self {
        Self { vertex, other }
    }

    /// The underlying edge, canonicalised as `(min, max)`.
    pub fn edge(&self) -> (Vertex, Vertex) {
        canonical(self.vertex, self.other)
    }

    /// The incidence on the same edge at the other endpoint.
    pub fn reverse(&self) -> Self {
        Self::new(self.other, self.vertex)
    }
}

impl fmt::Display for Incidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}{})", self.vertex, self.vertex, self.other)
    }
}

pub(crate) fn canonical(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Adjacency of two incidences: same vertex, same edge, or the edge joining
/// their vertices is one of the two edges.
pub fn incidence_adjacent(a: Incidence, b: Incidence) -> bool {
    if a == b {
        return false;
    }
    if a.vertex == b.vertex || a.edge() == b.edge() {
        return true;
    }
    // vw = e or f: w lies on e, or v lies on f.
    a.other == b.vertex || b.other == a.vertex
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !set.insert(canonical(a, b)) {
                return Err(GraphError::ParallelEdge(a.min(b), a.max(b)));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for list in &adj {
            offsets.push(acc);
            acc += list.len();
        }
        offsets.push(acc);
        Ok(Self {
            n,
            edges,
            adj,
            offsets,
        })
    }

    /// Like [`Graph::new`] but silently drops duplicate edges.
    pub fn from_edge_set(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let set: BTreeSet<_> = edges.into_iter().map(|(a, b)| canonical(a, b)).collect();
        let edges: Vec<_> = set.into_iter().collect();
        Self::new(n, &edges)
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, &[]).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn incidence_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// All incidences, in id order.
    pub fn incidences(&self) -> Vec<Incidence> {
        (0..self.n)
            .flat_map(|v| self.adj[v].iter().map(move |&u| Incidence::new(v, u)))
            .collect()
    }

    pub fn incidence(&self, id: IncidenceId) -> Incidence {
        let v = self.offsets.partition_point(|&o| o <= id) - 1;
        Incidence::new(v, self.adj[v][id - self.offsets[v]])
    }

    /// Id of the incidence `(v, vu)`, if `vu` is an edge.
    pub fn incidence_id(&self, v: Vertex, u: Vertex) -> Option<IncidenceId> {
        if v >= self.n {
            return None;
        }
        self.adj[v]
            .binary_search(&u)
            .ok()
            .map(|pos| self.offsets[v] + pos)
    }

    /// Id of `(v, vu)`; panics when `vu` is not an edge.
    pub fn id(&self, v: Vertex, u: Vertex) -> IncidenceId {
        self.incidence_id(v, u)
            .unwrap_or_else(|| panic!("({v},{v}{u}) is not an incidence"))
    }

    /// Internal incidences `A⁻(v)`.
    pub fn internal(&self, v: Vertex) -> std::ops::Range<IncidenceId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// External incidences `A⁺(v)`.
    pub fn external(&self, v: Vertex) -> impl Iterator<Item = IncidenceId> + '_ {
        self.adj[v].iter().map(move |&u| self.id(u, v))
    }

    /// Incidences adjacent to `id`: `A⁻(v) ∪ A⁺(v) ∪ A⁻(u)` without `id`.
    pub fn incidence_neighbourhood(&self, id: IncidenceId) -> Vec<IncidenceId> {
        let inc = self.incidence(id);
        let mut out: Vec<IncidenceId> = self
            .internal(inc.vertex)
            .chain(self.external(inc.vertex))
            .chain(self.internal(inc.other))
            .filter(|&j| j != id)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The incidence graph `I_G`: vertex `i` is incidence `i`.
    pub fn incidence_graph(&self) -> Graph {
        let m = self.incidence_count();
        let mut edges = Vec::new();
        for i in 0..m {
            for j in self.incidence_neighbourhood(i) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(m, &edges).expect("incidence adjacency is simple")
    }

    /// Removes one edge (used for subgraph monotonicity checks).
    pub fn without_edge(&self, a: Vertex, b: Vertex) -> Graph {
        let e = canonical(a, b);
        let edges: Vec<_> = self.edges.iter().copied().filter(|&x| x != e).collect();
        Graph::new(self.n, &edges).expect("subgraph of a simple graph")
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Graph::new(self.n, &edges).expect("relabelling preserves simplicity")
    }
}

#[derive(Serialize, Deserialize)]
struct GraphShape {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl From<Graph> for GraphShape {
    fn from(g: Graph) -> Self {
        Self {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl TryFrom<GraphShape> for Graph {
    type Error = GraphError;

    fn try_from(s: GraphShape) -> Result<Self, Self::Error> {
        Graph::new(s.n, &s.edges)
    }
}

/// Lists of admissible colours, one per incidence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<Colour>>", try_from = "Vec<Vec<Colour>>")]
pub struct ListAssignment {
    lists: Vec<Vec<Colour>>,
}

impl From<ListAssignment> for Vec<Vec<Colour>> {
    fn from(l: ListAssignment) -> Self {
        l.lists
    }
}

impl TryFrom<Vec<Vec<Colour>>> for ListAssignment {
    type Error = GraphError;

    fn try_from(lists: Vec<Vec<Colour>>) -> Result<Self, Self::Error> {
        ListAssignment::new(lists)
    }
}

impl ListAssignment {
    /// Lists are sorted and deduplicated; every list must be non-empty.
    pub fn new(lists: Vec<Vec<Colour>>) -> Result<Self, GraphError> {
        let mut lists = lists;
        for (id, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(GraphError::EmptyList(id));
            }
        }
        Ok(Self { lists })
    }

    /// Every incidence of `g` gets `{1..k}`.
    pub fn uniform(g: &Graph, k: Colour) -> Self {
        Self {
            lists: vec![(1..=k).collect(); g.incidence_count()],
        }
    }

    pub fn for_graph(g: &Graph, lists: Vec<Vec<Colour>>) -> Result<Self, GraphError> {
        if lists.len() != g.incidence_count() {
            return Err(GraphError::ListCount {
                expected: g.incidence_count(),
                found: lists.len(),
            });
        }
        Self::new(lists)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, id: IncidenceId) -> &[Colour] {
        &self.lists[id]
    }

    pub fn lists(&self) -> &[Vec<Colour>] {
        &self.lists
    }

    pub fn contains(&self, id: IncidenceId, c: Colour) -> bool {
        self.lists[id].binary_search(&c).is_ok()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(usize::MAX)
    }

    /// Keeps the `k` smallest colours of each list, but always retains the
    /// colours in `keep[id]` when present.
    pub fn truncated(&self, k: usize, keep: &[(IncidenceId, Colour)]) -> Self {
        let lists = self
            .lists
            .iter()
            .enumerate()
            .map(|(id, list)| {
                let pinned: Vec<Colour> = keep
                    .iter()
                    .filter(|&&(i, c)| i == id && list.binary_search(&c).is_ok())
                    .map(|&(_, c)| c)
                    .collect();
                let mut out = pinned.clone();
                for &c in list {
                    if out.len() >= k.max(pinned.len()) {
                        break;
                    }
                    if !pinned.contains(&c) {
                        out.push(c);
                    }
                }
                out.sort_unstable();
                out
            })
            .collect();
        Self { lists }
    }

    /// Largest colour appearing in any list.
    pub fn max_colour(&self) -> Colour {
        self.lists
            .iter()
            .flat_map(|l| l.last().copied())
            .max()
            .unwrap_or(0)
    }
}

/// A possibly partial map from incidences to colours.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IncidenceColouring {
    colours: Vec<Option<Colour>>,
}

impl IncidenceColouring {
    pub fn empty(len: usize) -> Self {
        Self {
            colours: vec![None; len],
        }
    }

    pub fn from_options(colours: Vec<Option<Colour>>) -> Self {
        Self { colours }
    }

    pub fn from_total(colours: Vec<Colour>) -> Self {
        Self {
            colours: colours.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, id: IncidenceId) -> Option<Colour> {
        self.colours.get(id).copied().flatten()
    }

    pub fn set(&mut self, id: IncidenceId, c: Colour) {
        self.colours[id] = Some(c);
    }

    pub fn clear(&mut self, id: IncidenceId) {
        self.colours[id] = None;
    }

    pub fn as_slice(&self) -> &[Option<Colour>] {
        &self.colours
    }

    pub fn is_total(&self) -> bool {
        self.colours.iter().all(Option::is_some)
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        self.colours.iter().flatten().collect::<BTreeSet<_>>().len()
    }
}

/// Outcome of [`validate_colouring`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub total: bool,
    pub proper: bool,
    pub list_respecting: bool,
    /// First incidence without a colour.
    pub uncoloured: Option<IncidenceId>,
    /// First pair of adjacent incidences sharing a colour.
    pub conflict: Option<(IncidenceId, IncidenceId)>,
    /// First incidence whose colour is not in its list.
    pub off_list: Option<IncidenceId>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.total && self.proper && self.list_respecting
    }
}

/// Checks totality, properness and (when lists are given) list membership.
///
/// A colouring or list assignment whose length differs from the incidence
/// count of `g` refers to unknown incidences and is a structural error.
pub fn validate_colouring(
    g: &Graph,
    lists: Option<&ListAssignment>,
    c: &IncidenceColouring,
) -> Result<Verdict, GraphError> {
    let m = g.incidence_count();
    if c.len() != m {
        return Err(GraphError::UnknownIncidence {
            id: c.len().max(m) - 1,
            count: m,
        });
    }
    if let Some(l) = lists {
        if l.len() != m {
            return Err(GraphError::ListCount {
                expected: m,
                found: l.len(),
            });
        }
    }
    let uncoloured = (0..m).find(|&i| c.get(i).is_none());
    let mut conflict = None;
    'outer: for i in 0..m {
        let Some(ci) = c.get(i) else { continue };
        for j in g.incidence_neighbourhood(i) {
            if j > i && c.get(j) == Some(ci) {
                conflict = Some((i, j));
                break 'outer;
            }
        }
    }
    let off_list =
        lists.and_then(|l| (0..m).find(|&i| matches!(c.get(i), Some(x) if !l.contains(i, x))));
    Ok(Verdict {
        total: uncoloured.is_none(),
        proper: conflict.is_none(),
        list_respecting: off_list.is_none(),
        uncoloured,
        conflict,
        off_list,
    })
}
