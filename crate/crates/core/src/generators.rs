//! Graph families with the structural annotations the constructive colourings
//! rely on.
//!
//! Every generator returns the graph together with a [`FamilySpec`] from which
//! the graph can be rebuilt exactly. Labelling conventions:
//!
//! * cycles and paths: `0..n` in order; star centre `0`; wheel hub `n`;
//! * grid `G_{m,n}`: vertex `v_{i,j}` (1-based) is `(i-1)*n + (j-1)`;
//! * corona `C_n ⊙ pK₁`: cycle `0..n`, pendant `v_i^j` is `n + i*p + (j-1)`;
//! * Hamiltonian cubic: Hamilton cycle `0..n` in order plus the matching.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::GenError;
use crate::graph::{canonical, Graph, Vertex};

/// Parametric description of a generated graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// `K_{1,n}`.
    Star {
        n: usize,
    },
    Wheel {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Grid {
        m: usize,
        n: usize,
    },
    Tree {
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
    },
    /// Tree on `0..n` plus the cycle through its leaves in `leaf_order`.
    Halin {
        n: usize,
        tree_edges: Vec<(Vertex, Vertex)>,
        leaf_order: Vec<Vertex>,
    },
    Corona {
        n: usize,
        p: usize,
    },
    /// Vertex-disjoint `cycles` (each a cyclic vertex sequence) plus the
    /// remaining `edges`.
    Cactus {
        n: usize,
        cycles: Vec<Vec<Vertex>>,
        edges: Vec<(Vertex, Vertex)>,
    },
    HamCubic {
        n: usize,
        matching: Vec<(Vertex, Vertex)>,
    },
    CyclePower {
        n: usize,
        p: usize,
    },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Path { .. } => "path",
            Self::Cycle { .. } => "cycle",
            Self::Star { .. } => "star",
            Self::Wheel { .. } => "wheel",
            Self::Complete { .. } => "complete",
            Self::Grid { .. } => "grid",
            Self::Tree { .. } => "tree",
            Self::Halin { .. } => "halin",
            Self::Corona { .. } => "corona",
            Self::Cactus { .. } => "cactus",
            Self::HamCubic { .. } => "ham_cubic",
            Self::CyclePower { .. } => "cycle_power",
        }
    }

    /// Validates the parameters and builds the graph.
    pub fn build(&self) -> Result<Graph, GenError> {
        match self {
            Self::Path { n } => basic(BasicFamily::Path, *n),
            Self::Cycle { n } => basic(BasicFamily::Cycle, *n),
            Self::Star { n } => basic(BasicFamily::Star, *n),
            Self::Wheel { n } => basic(BasicFamily::Wheel, *n),
            Self::Complete { n } => basic(BasicFamily::Complete, *n),
            Self::Grid { m, n } => grid(*m, *n),
            Self::Tree { n, edges } => {
                let g = Graph::new(*n, edges)?;
                if !g.is_tree() {
                    return Err(GenError::invalid(
                        "tree",
                        "edges do not form a spanning tree",
                    ));
                }
                Ok(g)
            }
            Self::Halin {
                n,
                tree_edges,
                leaf_order,
            } => halin(*n, tree_edges, leaf_order),
            Self::Corona { n, p } => corona(*n, *p),
            Self::Cactus { n, cycles, edges } => cactus(*n, cycles, edges),
            Self::HamCubic { n, matching } => ham_cubic(*n, matching),
            Self::CyclePower { n, p } => cycle_power(*n, *p),
        }
    }

    /// Tree, outer cycle and `t_i` of a Halin spec.
    pub fn halin_structure(&self) -> Option<HalinStructure> {
        let Self::Halin {
            n,
            tree_edges,
            leaf_order,
        } = self
        else {
            return None;
        };
        let tree = Graph::new(*n, tree_edges).ok()?;
        let attach = leaf_order.iter().map(|&v| tree.neighbours(v)[0]).collect();
        Some(HalinStructure {
            tree,
            cycle: leaf_order.clone(),
            attach,
        })
    }
}

/// Decomposition of a Halin graph into its tree `T_G` and outer cycle `C_G`.
#[derive(Clone, Debug)]
pub struct HalinStructure {
    pub tree: Graph,
    /// Outer cycle `v_0 … v_{k-1}`.
    pub cycle: Vec<Vertex>,
    /// `attach[i] = t_i`, the tree neighbour of `cycle[i]`.
    pub attach: Vec<Vertex>,
}

impl HalinStructure {
    pub fn tree_is_star(&self) -> bool {
        let internal = (0..self.tree.n())
            .filter(|&v| self.tree.degree(v) > 1)
            .count();
        internal == 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasicFamily {
    Path,
    Cycle,
    Star,
    Wheel,
    Complete,
}

fn basic(kind: BasicFamily, n: usize) -> Result<Graph, GenError> {
    let (name, min) = match kind {
        BasicFamily::Path => ("path", 1),
        BasicFamily::Cycle => ("cycle", 3),
        BasicFamily::Star => ("star", 1),
        BasicFamily::Wheel => ("wheel", 3),
        BasicFamily::Complete => ("complete", 1),
    };
    if n < min {
        return Err(GenError::invalid(
            name,
            format!("size {n} below minimum {min}"),
        ));
    }
    let g = match kind {
        BasicFamily::Path => Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())?,
        BasicFamily::Cycle => Graph::new(n, &cycle_edges(n))?,
        BasicFamily::Star => Graph::new(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>())?,
        BasicFamily::Wheel => {
            let mut e = cycle_edges(n);
            e.extend((0..n).map(|i| (i, n)));
            Graph::new(n + 1, &e)?
        }
        BasicFamily::Complete => {
            let e: Vec<_> = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .collect();
            Graph::new(n, &e)?
        }
    };
    Ok(g)
}

fn cycle_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn gen_basic(kind: BasicFamily, n: usize) -> Result<(Graph, FamilySpec), GenError> {
    let g = basic(kind, n)?;
    let spec = match kind {
        BasicFamily::Path => FamilySpec::Path { n },
        BasicFamily::Cycle => FamilySpec::Cycle { n },
        BasicFamily::Star => FamilySpec::Star { n },
        BasicFamily::Wheel => FamilySpec::Wheel { n },
        BasicFamily::Complete => FamilySpec::Complete { n },
    };
    Ok((g, spec))
}

fn grid(m: usize, n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(GenError::invalid("grid", format!("n = {n} < 2")));
    }
    if m < n {
        return Err(GenError::invalid(
            "grid",
            format!("m = {m} < n = {n}; transpose first"),
        ));
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut e = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                e.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < m {
                e.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Ok(Graph::new(m * n, &e)?)
}

/// `G_{m,n} = P_m □ P_n`, `m ≥ n ≥ 2`.
pub fn gen_grid(m: usize, n: usize) -> Result<(Graph, FamilySpec), GenError> {
    Ok((grid(m, n)?, FamilySpec::Grid { m, n }))
}

/// Id of grid vertex `v_{i,j}` with 1-based coordinates.
pub fn grid_vertex(n: usize, i: usize, j: usize) -> Vertex {
    (i - 1) * n + (j - 1)
}

fn halin(
    n: usize,
    tree_edges: &[(Vertex, Vertex)],
    leaf_order: &[Vertex],
) -> Result<Graph, GenError> {
    let tree = Graph::new(n, tree_edges)?;
    if n < 4 {
        return Err(GenError::invalid("halin", format!("tree order {n} < 4")));
    }
    if !tree.is_tree() {
        return Err(GenError::invalid("halin", "tree edges do not form a tree"));
    }
    if let Some(v) = (0..n).find(|&v| tree.degree(v) == 2) {
        return Err(GenError::invalid(
            "halin",
            format!("tree vertex {v} has degree 2"),
        ));
    }
    let leaves: BTreeSet<_> = (0..n).filter(|&v| tree.degree(v) == 1).collect();
    let order: BTreeSet<_> = leaf_order.iter().copied().collect();
    if order != leaves || leaf_order.len() != leaves.len() {
        return Err(GenError::invalid(
            "halin",
            "leaf order is not a permutation of the leaves",
        ));
    }
    let k = leaf_order.len();
    let mut e = tree_edges.to_vec();
    e.extend((0..k).map(|i| (leaf_order[i], leaf_order[(i + 1) % k])));
    Ok(Graph::new(n, &e)?)
}

/// Halin graph from a tree and a cyclic leaf order.
///
/// The leaf order must come from a planar embedding of the tree; only the
/// permutation property is checked.
pub fn gen_halin(tree: &Graph, leaf_order: &[Vertex]) -> Result<(Graph, FamilySpec), GenError> {
    let spec = FamilySpec::Halin {
        n: tree.n(),
        tree_edges: tree.edges().to_vec(),
        leaf_order: leaf_order.to_vec(),
    };
    Ok((spec.build()?, spec))
}

/// Leaves of `tree` in depth-first order from `root`, children visited in
/// increasing id. This is the cyclic leaf order of the embedding that draws
/// children left to right.
pub fn planar_leaf_order(tree: &Graph, root: Vertex) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        if tree.degree(v) == 1 && v != root {
            out.push(v);
            continue;
        }
        if tree.degree(v) == 1 && v == root {
            out.push(v);
        }
        for &u in tree.neighbours(v).iter().rev() {
            if u != parent {
                stack.push((u, v));
            }
        }
    }
    out
}

fn corona(n: usize, p: usize) -> Result<Graph, GenError> {
    if n < 3 || p < 1 {
        return Err(GenError::invalid(
            "corona",
            format!("need n >= 3 and p >= 1, got n = {n}, p = {p}"),
        ));
    }
    let mut e = cycle_edges(n);
    for i in 0..n {
        for j in 1..=p {
            e.push((i, corona_pendant(n, p, i, j)));
        }
    }
    Ok(Graph::new(n * (p + 1), &e)?)
}

/// Generalized corona `C_n ⊙ pK₁`.
pub fn gen_corona(n: usize, p: usize) -> Result<(Graph, FamilySpec), GenError> {
    Ok((corona(n, p)?, FamilySpec::Corona { n, p }))
}

/// Id of pendant `v_i^j` (`0 ≤ i < n`, `1 ≤ j ≤ p`).
pub fn corona_pendant(n: usize, p: usize, i: usize, j: usize) -> Vertex {
    n + i * p + (j - 1)
}

fn ham_cubic(n: usize, matching: &[(Vertex, Vertex)]) -> Result<Graph, GenError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(GenError::invalid(
            "ham_cubic",
            format!("n = {n} must be even and at least 4"),
        ));
    }
    if matching.len() != n / 2 {
        return Err(GenError::invalid("ham_cubic", "matching is not perfect"));
    }
    let mut covered = vec![false; n];
    for &(a, b) in matching {
        if a >= n || b >= n || a == b {
            return Err(GenError::invalid(
                "ham_cubic",
                format!("bad pair ({a},{b})"),
            ));
        }
        if (a + 1) % n == b || (b + 1) % n == a {
            return Err(GenError::invalid(
                "ham_cubic",
                format!("pair ({a},{b}) is a cycle edge"),
            ));
        }
        if covered[a] || covered[b] {
            return Err(GenError::invalid("ham_cubic", "matching is not perfect"));
        }
        covered[a] = true;
        covered[b] = true;
    }
    let mut e = cycle_edges(n);
    e.extend_from_slice(matching);
    Ok(Graph::new(n, &e)?)
}

/// Hamilton cycle `0..n` plus an explicit perfect matching.
pub fn gen_ham_cubic(
    n: usize,
    matching: &[(Vertex, Vertex)],
) -> Result<(Graph, FamilySpec), GenError> {
    let matching: Vec<_> = matching.iter().map(|&(a, b)| canonical(a, b)).collect();
    let spec = FamilySpec::HamCubic { n, matching };
    Ok((spec.build()?, spec))
}

/// Hamilton cycle `0..n` plus a matching drawn by rejection sampling.
pub fn gen_ham_cubic_random<R: Rng>(
    n: usize,
    rng: &mut R,
) -> Result<(Graph, FamilySpec), GenError> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(GenError::invalid(
            "ham_cubic",
            format!("n = {n} must be even and at least 4"),
        ));
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    loop {
        perm.shuffle(rng);
        let pairs: Vec<_> = perm.chunks(2).map(|c| canonical(c[0], c[1])).collect();
        if pairs
            .iter()
            .all(|&(a, b)| b - a != 1 && !(a == 0 && b == n - 1))
        {
            let mut pairs = pairs;
            pairs.sort_unstable();
            return gen_ham_cubic(n, &pairs);
        }
    }
}

fn cycle_power(n: usize, p: usize) -> Result<Graph, GenError> {
    if n < 3 || p < 1 {
        return Err(GenError::invalid(
            "cycle_power",
            format!("need n >= 3 and p >= 1, got n = {n}, p = {p}"),
        ));
    }
    let mut e = BTreeSet::new();
    for i in 0..n {
        for d in 1..=p.min(n / 2) {
            e.insert(canonical(i, (i + d) % n));
        }
    }
    Ok(Graph::new(n, &e.into_iter().collect::<Vec<_>>())?)
}

/// `C_n^p`: vertices at cycle distance at most `p` are adjacent.
pub fn gen_cycle_power(n: usize, p: usize) -> Result<(Graph, FamilySpec), GenError> {
    Ok((cycle_power(n, p)?, FamilySpec::CyclePower { n, p }))
}

fn cactus(n: usize, cycles: &[Vec<Vertex>], edges: &[(Vertex, Vertex)]) -> Result<Graph, GenError> {
    let mut on_cycle = vec![false; n];
    let mut all = Vec::new();
    for c in cycles {
        if c.len() < 3 {
            return Err(GenError::invalid("cactus", "cycle shorter than 3"));
        }
        for &v in c {
            if v >= n {
                return Err(GenError::invalid(
                    "cactus",
                    format!("vertex {v} out of range"),
                ));
            }
            if on_cycle[v] {
                return Err(GenError::invalid(
                    "cactus",
                    format!("vertex {v} lies on two cycles"),
                ));
            }
            on_cycle[v] = true;
        }
        all.extend((0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])));
    }
    all.extend_from_slice(edges);
    let g = Graph::new(n, &all)?;
    // With vertex-disjoint cycles forming a basis of the cycle space, no
    // other cycle exists.
    let rank = g.edge_count() + g.components().len() - n;
    if rank != cycles.len() {
        return Err(GenError::invalid(
            "cactus",
            "extra edges close additional cycles",
        ));
    }
    Ok(g)
}

/// Cactus from explicit vertex-disjoint cycles and connecting edges.
pub fn gen_cactus(
    n: usize,
    cycles: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
) -> Result<(Graph, FamilySpec), GenError> {
    let spec = FamilySpec::Cactus { n, cycles, edges };
    Ok((spec.build()?, spec))
}

/// Knobs for the random cactus model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CactusParams {
    /// Vertices of the underlying random tree.
    pub tree_size: usize,
    /// Probability that a tree vertex is expanded into a cycle.
    pub cycle_probability: f64,
    /// Longest cycle produced by an expansion (at least 3).
    pub max_cycle_len: usize,
}

impl CactusParams {
    pub fn with_size(tree_size: usize) -> Self {
        Self {
            tree_size,
            cycle_probability: 0.3,
            max_cycle_len: 5,
        }
    }
}

/// Random cactus: a uniform random tree in which some vertices are blown up
/// into cycles, their tree edges redistributed over the cycle vertices.
/// At least one cycle is always produced.
pub fn gen_cactus_random<R: Rng>(
    params: CactusParams,
    rng: &mut R,
) -> Result<(Graph, FamilySpec), GenError> {
    let size = params.tree_size;
    if size < 2 {
        return Err(GenError::invalid(
            "cactus",
            "random model needs a tree of at least 2 vertices",
        ));
    }
    if params.max_cycle_len < 3 {
        return Err(GenError::invalid("cactus", "max_cycle_len below 3"));
    }
    let tree = random_tree_edges(size, rng);
    let mut expand: Vec<bool> = (0..size)
        .map(|_| rng.gen_bool(params.cycle_probability.clamp(0.0, 1.0)))
        .collect();
    if !expand.iter().any(|&b| b) {
        let v = rng.gen_range(0..size);
        expand[v] = true;
    }
    let mut next = size;
    let mut cycles = Vec::new();
    // members[v]: the vertices that replace v.
    let mut members: Vec<Vec<Vertex>> = (0..size).map(|v| vec![v]).collect();
    for v in 0..size {
        if expand[v] {
            let len = rng.gen_range(3..=params.max_cycle_len);
            let mut c = vec![v];
            for _ in 1..len {
                c.push(next);
                next += 1;
            }
            members[v] = c.clone();
            cycles.push(c);
        }
    }
    let edges: Vec<_> = tree
        .iter()
        .map(|&(a, b)| {
            let x = *members[a].choose(rng).expect("non-empty");
            let y = *members[b].choose(rng).expect("non-empty");
            canonical(x, y)
        })
        .collect();
    gen_cactus(next, cycles, edges)
}

/// Cactus annotations: the cycles and whether each one is maximal (contains
/// a vertex of maximum degree).
#[derive(Clone, Debug)]
pub struct CactusStructure {
    pub cycles: Vec<Vec<Vertex>>,
    pub maximal: Vec<bool>,
}

impl CactusStructure {
    pub fn new(g: &Graph, cycles: &[Vec<Vertex>]) -> Self {
        let delta = g.max_degree();
        let maximal = cycles
            .iter()
            .map(|c| c.iter().any(|&v| g.degree(v) == delta))
            .collect();
        Self {
            cycles: cycles.to_vec(),
            maximal,
        }
    }

    pub fn has_maximal_cycle(&self) -> bool {
        self.maximal.iter().any(|&b| b)
    }

    pub fn maximal_triangles(&self) -> usize {
        self.cycles
            .iter()
            .zip(&self.maximal)
            .filter(|(c, &m)| m && c.len() == 3)
            .count()
    }
}

/// Cactus predicate via biconnected components: every block is a bridge or a
/// cycle, and no vertex lies on two cyclic blocks.
pub fn is_cactus(g: &Graph) -> bool {
    let blocks = biconnected_blocks(g);
    let mut cyclic_count = vec![0usize; g.n()];
    for block in &blocks {
        let mut verts: Vec<Vertex> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
        verts.sort_unstable();
        verts.dedup();
        if block.len() == 1 {
            continue;
        }
        if block.len() != verts.len() {
            return false;
        }
        for v in verts {
            cyclic_count[v] += 1;
            if cyclic_count[v] > 1 {
                return false;
            }
        }
    }
    true
}

/// Edge sets of the biconnected components (Hopcroft–Tarjan).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let u = g.neighbours(v)[*idx];
                *idx += 1;
                if u == parent {
                    continue;
                }
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(canonical(e.0, e.1));
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn gen_random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<(Graph, FamilySpec), GenError> {
    if n < 1 {
        return Err(GenError::invalid("tree", "empty tree"));
    }
    let edges = random_tree_edges(n, rng);
    let spec = FamilySpec::Tree { n, edges };
    Ok((spec.build()?, spec))
}

fn random_tree_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = *leaves.iter().next().expect("a leaf always exists");
        leaves.remove(&leaf);
        edges.push(canonical(leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<_> = leaves.into_iter().collect();
    edges.push(canonical(rest[0], rest[1]));
    edges.sort_unstable();
    edges
}

/// Random tree with no vertex of degree 2 and its planar leaf order.
///
/// Starting from a star with `3..=max_children` leaves, `expansions` times a
/// random leaf receives between 2 and `max_children - 1` new children.
pub fn gen_random_halin<R: Rng>(
    expansions: usize,
    max_children: usize,
    rng: &mut R,
) -> Result<(Graph, FamilySpec), GenError> {
    if max_children < 3 {
        return Err(GenError::invalid("halin", "max_children below 3"));
    }
    let root_children = rng.gen_range(3..=max_children);
    let mut edges: Vec<(Vertex, Vertex)> = (1..=root_children).map(|i| (0, i)).collect();
    let mut n = root_children + 1;
    let mut leaves: Vec<Vertex> = (1..=root_children).collect();
    for _ in 0..expansions {
        let pos = rng.gen_range(0..leaves.len());
        let leaf = leaves.swap_remove(pos);
        let kids = rng.gen_range(2..max_children);
        for _ in 0..kids {
            edges.push((leaf, n));
            leaves.push(n);
            n += 1;
        }
    }
    let tree = Graph::new(n, &edges)?;
    let order = planar_leaf_order(&tree, 0);
    gen_halin(&tree, &order)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                e.push((a, b));
            }
        }
    }
    Graph::new(n, &e).expect("distinct pairs")
}

/// Random `d`-degenerate graph: vertex `i` joins up to `d` random earlier
/// vertices (at least one, so the graph is connected).
pub fn gen_random_degenerate<R: Rng>(n: usize, d: usize, rng: &mut R) -> Graph {
    let mut e = Vec::new();
    for v in 1..n {
        let k = rng.gen_range(1..=d.min(v).max(1));
        let earlier: Vec<Vertex> = rand::seq::index::sample(rng, v, k).into_iter().collect();
        e.extend(earlier.into_iter().map(|u| (u, v)));
    }
    Graph::new(n, &e).expect("distinct pairs")
}
