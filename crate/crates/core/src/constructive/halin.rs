use serde::{Deserialize, Serialize};

use super::{
    cycle_sequence, intersect, local_graph, local_lists, minus, prepare_lists, smallest,
    tree::colour_tree, ConstructiveReport, Painter, Precoloured, Rule,
};
use crate::error::ConstructError;
use crate::generators::{FamilySpec, HalinStructure};
use crate::graph::{Colour, Graph, ListAssignment, Vertex};
use crate::solver::{solve_extending, SolveOutcome, SolverConfig};

/// How three colours were drawn from three lists with a common target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum K4Case {
    /// One colour common to all three lists.
    Common,
    /// Two lists intersect; the third is chosen against the target.
    Pair,
    /// Pairwise disjoint lists.
    Disjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4Choice {
    pub a: Colour,
    pub b: Colour,
    pub c: Colour,
    pub case: K4Case,
}

fn same_size(lists: &[&[Colour]], min: usize, rule: Rule) -> Result<(), ConstructError> {
    let k = lists[0].len();
    if k < min || lists.iter().any(|l| l.len() != k) {
        return Err(ConstructError::pre(format!(
            "{rule}: lists must have one common size of at least {min}"
        )));
    }
    Ok(())
}

/// Picks `a ∈ A`, `b ∈ B`, `c ∈ C` with at most one of them in `target`,
/// where the four lists have the same size.
pub fn claim_k4_choose(
    a: &[Colour],
    b: &[Colour],
    c: &[Colour],
    target: &[Colour],
) -> Result<K4Choice, ConstructError> {
    same_size(&[a, b, c, target], 2, Rule::K4Claim)?;
    let ([x, y, z], case) = triple_select(a, b, c, target);
    Ok(K4Choice {
        a: x,
        b: y,
        c: z,
        case,
    })
}

/// Shared by the selection claims: three colours from three equal-size lists
/// with at most one in `target`.
pub(crate) fn triple_select(
    a: &[Colour],
    b: &[Colour],
    c: &[Colour],
    t: &[Colour],
) -> ([Colour; 3], K4Case) {
    let sets = [a, b, c];
    if let Some(g) = smallest(a.iter().copied().filter(|x| b.contains(x) && c.contains(x))) {
        return ([g; 3], K4Case::Common);
    }
    let away = |s: &[Colour]| smallest(minus(s, t)).unwrap_or(s[0]);
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if let Some(g) = smallest(intersect(sets[i], sets[j])) {
            let mut out = [0; 3];
            out[i] = g;
            out[j] = g;
            out[k] = if t.contains(&g) {
                away(sets[k])
            } else {
                sets[k][0]
            };
            return (out, K4Case::Pair);
        }
    }
    ([away(a), away(b), away(c)], K4Case::Disjoint)
}

/// Colours `K_4` from 6-lists.
pub fn colour_k4(g: &Graph, l: &ListAssignment) -> Result<ConstructiveReport, ConstructError> {
    if g.n() != 4 || g.edge_count() != 6 {
        return Err(ConstructError::pre("graph is not K4"));
    }
    let lists = prepare_lists(g, l, 6, &[])?;
    let mut p = Painter::new(g, lists);
    k4_into(&mut p)?;
    p.finish()
}

fn k4_into(p: &mut Painter<'_>) -> Result<(), ConstructError> {
    let g = p.graph();
    let list = |x: Vertex, y: Vertex| p.list(g.id(x, y)).to_vec();
    let mut labellings = Vec::new();
    for hub in 0..4 {
        for first in (0..4).filter(|&x| x != hub) {
            let rest: Vec<Vertex> = (0..4).filter(|&x| x != hub && x != first).collect();
            labellings.push([hub, first, rest[0], rest[1]]);
        }
    }
    for v in labellings {
        let ch = claim_k4_choose(
            &list(v[1], v[0]),
            &list(v[2], v[0]),
            &list(v[3], v[0]),
            &list(v[0], v[1]),
        )?;
        let (a, b, c) = (ch.a, ch.b, ch.c);
        if a == b || a == c || b == c {
            return k4_case1(p, v, [a, b, c]);
        }
        let t = list(v[0], v[1]);
        if t.contains(&a) {
            continue;
        }
        if t.contains(&b) {
            return k4_case2(p, [v[0], v[1], v[3], v[2]], [a, c, b]);
        }
        return k4_case2(p, v, [a, b, c]);
    }
    // Every vertex sees pairwise disjoint lists on its external incidences,
    // each equal to the list of the opposite incidence: greedy succeeds.
    for id in 0..g.incidence_count() {
        p.fill(id, Rule::K4Disjoint)?;
    }
    Ok(())
}

fn k4_case1(p: &mut Painter<'_>, v: [Vertex; 4], col: [Colour; 3]) -> Result<(), ConstructError> {
    let g = p.graph();
    for i in 0..3 {
        p.set(g.id(v[i + 1], v[0]), col[i], Rule::K4Claim)?;
    }
    let (x, y, z) = match col {
        [a, b, _] if a == b => (1, 2, 3),
        [a, _, c] if a == c => (1, 3, 2),
        _ => (2, 3, 1),
    };
    for (s, t) in [
        (z, x),
        (z, y),
        (y, z),
        (x, z),
        (y, x),
        (x, y),
        (0, 3),
        (0, 2),
        (0, 1),
    ] {
        p.fill_at(v[s], v[t], Rule::K4Case1)?;
    }
    Ok(())
}

/// `a, b, c` pairwise distinct with `a, b` outside `L(v0,v0v1)`.
fn k4_case2(p: &mut Painter<'_>, v: [Vertex; 4], col: [Colour; 3]) -> Result<(), ConstructError> {
    let g = p.graph();
    let [a, b, c] = col;
    let id = |x: usize, y: usize| g.id(v[x], v[y]);
    let l02 = p.list(id(0, 2)).to_vec();
    let l03 = p.list(id(0, 3)).to_vec();
    let hits = |l: &[Colour]| [a, b].iter().filter(|x| l.contains(x)).count();
    if hits(&l02) <= 1 || hits(&l03) <= 1 {
        p.set(id(1, 0), a, Rule::K4Claim)?;
        p.set(id(2, 0), b, Rule::K4Claim)?;
        let last = if hits(&l02) <= 1 {
            [(0, 3), (0, 2)]
        } else {
            [(0, 2), (0, 3)]
        };
        for (s, t) in [(1, 3), (1, 2), (2, 1), (2, 3), (3, 2), (3, 1), (3, 0)]
            .into_iter()
            .chain(last)
            .chain([(0, 1)])
        {
            p.fill(id(s, t), Rule::K4Case2a)?;
        }
        return Ok(());
    }
    p.set(id(3, 0), c, Rule::K4Claim)?;
    p.set(id(0, 2), a, Rule::K4Case2b)?;
    p.set(id(0, 3), b, Rule::K4Case2b)?;
    let l10 = p.list(id(1, 0)).to_vec();
    let l12 = p.list(id(1, 2)).to_vec();
    let d = if !l10.contains(&b) {
        l12[0]
    } else if l12.contains(&b) {
        b
    } else {
        smallest(minus(&l12, &l10)).ok_or(ConstructError::SelectionFailed {
            rule: Rule::K4Case2bSelect,
        })?
    };
    p.set(id(1, 2), d, Rule::K4Case2bSelect)?;
    for (s, t) in [
        (3, 1),
        (3, 2),
        (2, 3),
        (2, 0),
        (2, 1),
        (1, 3),
        (1, 0),
        (0, 1),
    ] {
        p.fill(id(s, t), Rule::K4Case2b)?;
    }
    Ok(())
}

/// Lists for the selection around the first three outer vertices of a Halin
/// graph. With `v_0 … v_{k-1}` the outer cycle, `t_0` the common tree
/// neighbour of `v_{k-1}, v_0` and `t_1` that of `v_1, v_2`:
/// `a = (v_{k-1},v_{k-1}t_0)`, `b = (v_0,v_0t_0)`, `c = (v_0,v_0v_1)`,
/// `d = (t_1,t_1v_1)`, `e = (v_2,v_2v_1)`; targets `t1 = (v_1,v_1v_0)`,
/// `t0 = (v_0,v_0v_{k-1})`, `tk = (v_{k-1},v_{k-1}v_0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalinClaimInput {
    pub a: Vec<Colour>,
    pub b: Vec<Colour>,
    pub c: Vec<Colour>,
    pub d: Vec<Colour>,
    pub e: Vec<Colour>,
    pub t1: Vec<Colour>,
    pub t0: Vec<Colour>,
    pub tk: Vec<Colour>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalinChoice {
    pub a: Colour,
    pub b: Colour,
    pub c: Colour,
    pub d: Colour,
    pub e: Colour,
}

impl HalinClaimInput {
    pub fn admits(&self, ch: &HalinChoice) -> bool {
        let count = |t: &[Colour], xs: &[Colour]| {
            let mut xs = xs.to_vec();
            xs.sort_unstable();
            xs.dedup();
            xs.iter().filter(|x| t.contains(x)).count()
        };
        self.a.contains(&ch.a)
            && self.b.contains(&ch.b)
            && self.c.contains(&ch.c)
            && self.d.contains(&ch.d)
            && self.e.contains(&ch.e)
            && ch.b != ch.c
            && count(&self.tk, &[ch.a, ch.b, ch.c]) <= 2
            && count(&self.t0, &[ch.a, ch.b, ch.c]) <= 2
            && count(&self.t1, &[ch.c, ch.d, ch.e]) <= 1
    }
}

/// Picks the five colours; all lists must share one size of at least six.
pub fn claim_halin_choose(inp: &HalinClaimInput) -> Result<HalinChoice, ConstructError> {
    same_size(
        &[
            &inp.a, &inp.b, &inp.c, &inp.d, &inp.e, &inp.t1, &inp.t0, &inp.tk,
        ],
        6,
        Rule::HalinClaim,
    )?;
    let ([c, d, e], _) = triple_select(&inp.c, &inp.d, &inp.e, &inp.t1);
    let (la, lb) = (&inp.a, &inp.b);
    let fail = || ConstructError::SelectionFailed {
        rule: Rule::HalinClaim,
    };
    let (mut a, mut b): (Option<Colour>, Option<Colour>) = (None, None);
    // Keeps at most two of a, b, c inside `t` when c lies in `t`.
    let guard = |t: &[Colour]| -> Result<(Option<Colour>, Option<Colour>), ConstructError> {
        let common = minus(&intersect(la, lb), &[c]);
        if intersect(la, lb).len() >= 2 {
            let l = smallest(common).ok_or_else(fail)?;
            Ok((Some(l), Some(l)))
        } else if la.as_slice() != t {
            Ok((Some(smallest(minus(la, t)).ok_or_else(fail)?), None))
        } else {
            Ok((None, Some(smallest(minus(lb, t)).ok_or_else(fail)?)))
        }
    };
    if inp.t0.contains(&c) {
        (a, b) = guard(&inp.t0)?;
    }
    if inp.tk.contains(&c) {
        match (a, b) {
            (None, None) => (a, b) = guard(&inp.tk)?,
            (Some(_), Some(_)) => {}
            (Some(x), None) => {
                if lb.contains(&x) {
                    b = Some(x);
                } else if inp.tk.contains(&x) {
                    b = Some(smallest(minus(lb, &inp.tk)).ok_or_else(fail)?);
                }
            }
            (None, Some(y)) => {
                if la.contains(&y) {
                    a = Some(y);
                } else if inp.tk.contains(&y) {
                    a = Some(smallest(minus(la, &inp.tk)).ok_or_else(fail)?);
                }
            }
        }
    }
    let a = a.unwrap_or(la[0]);
    let b = match b {
        Some(b) => b,
        None => smallest(minus(lb, &[c])).ok_or_else(fail)?,
    };
    Ok(HalinChoice { a, b, c, d, e })
}

/// List size at which `colour_halin` always succeeds.
pub fn halin_bound(g: &Graph, spec: &FamilySpec) -> Option<usize> {
    let h = spec.halin_structure()?;
    let delta = g.max_degree();
    let w4 = h.tree_is_star() && h.cycle.len() == 4;
    Some(if (3..=4).contains(&delta) && !w4 {
        6
    } else if delta == 5 || w4 {
        7
    } else {
        delta + 1
    })
}

/// Colours a Halin graph given by `spec`.
pub fn colour_halin(
    g: &Graph,
    spec: &FamilySpec,
    l: &ListAssignment,
) -> Result<ConstructiveReport, ConstructError> {
    let h = spec
        .halin_structure()
        .ok_or_else(|| ConstructError::pre("not a Halin spec"))?;
    let built = spec
        .build()
        .map_err(|e| ConstructError::pre(e.to_string()))?;
    if &built != g {
        return Err(ConstructError::pre("graph does not match its Halin spec"));
    }
    let bound = halin_bound(g, spec).expect("Halin spec");
    if l.len() == g.incidence_count() && l.min_size() < bound {
        return Err(ConstructError::ListTooSmall {
            needed: bound,
            found: l.min_size(),
        });
    }
    let delta = g.max_degree();
    if g.n() == 4 {
        return colour_k4(g, l);
    }
    if delta <= 4 && !h.tree_is_star() {
        let lists = prepare_lists(g, l, 6, &[])?;
        return match rotate_for_claim(&h) {
            Some((cycle, attach)) => {
                let mut p = Painter::new(g, lists);
                two_fans(&mut p, &h.tree, &cycle, &attach)?;
                p.finish()
            }
            None => search_all(g, lists),
        };
    }
    let lists = prepare_lists(g, l, (delta + 1).max(7), &[])?;
    let mut p = Painter::new(g, lists);
    tree_then_cycle(&mut p, &h)?;
    p.finish()
}

fn search_all(g: &Graph, lists: ListAssignment) -> Result<ConstructiveReport, ConstructError> {
    let mut p = Painter::new(g, lists);
    match solve_extending(g, p.lists(), p.colouring(), &SolverConfig::default())
        .expect("lists match")
    {
        SolveOutcome::Colouring(c) => {
            for id in 0..g.incidence_count() {
                p.set(id, c.get(id).expect("total"), Rule::HalinSearchFallback)?;
            }
            p.finish()
        }
        _ => Err(ConstructError::Stuck {
            incidence: 0,
            rule: Rule::HalinSearchFallback,
        }),
    }
}

/// The tree first, from lists of size at least `Δ(T) + 1`, then the outer
/// cycle, where each incidence keeps at least four free colours.
fn tree_then_cycle(p: &mut Painter<'_>, h: &HalinStructure) -> Result<(), ConstructError> {
    let g = p.graph();
    let map: Vec<Vertex> = (0..g.n()).collect();
    let tl = local_lists(&h.tree, &map, g, p.lists());
    let r = colour_tree(&h.tree, &tl, &[])?;
    p.absorb(&h.tree, &map, &r, |_, _| true)?;
    let fixed = p.colouring().clone();
    match solve_extending(g, p.lists(), &fixed, &SolverConfig::default()).expect("lists match") {
        SolveOutcome::Colouring(c) => {
            for id in cycle_sequence(g, &h.cycle) {
                p.set(id, c.get(id).expect("total"), Rule::HalinCycleSearch)?;
            }
            Ok(())
        }
        _ => Err(ConstructError::Stuck {
            incidence: g.id(h.cycle[0], h.cycle[1]),
            rule: Rule::HalinCycleSearch,
        }),
    }
}

/// Relabels the outer cycle (rotation and direction) so that
/// `t_{k-1} = t_0 ≠ t_1 = t_2`.
fn rotate_for_claim(h: &HalinStructure) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let k = h.cycle.len();
    for dir in [false, true] {
        for r in 0..k {
            let idx = |i: usize| {
                if dir {
                    (r + k * 2 - i) % k
                } else {
                    (r + i) % k
                }
            };
            let t = |i: usize| h.attach[idx(i)];
            if t(k - 1) == t(0) && t(0) != t(1) && t(1) == t(2) {
                let cycle = (0..k).map(|i| h.cycle[idx(i)]).collect();
                let attach = (0..k).map(t).collect();
                return Some((cycle, attach));
            }
        }
    }
    None
}

fn tree_path(tree: &Graph, from: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut parent = vec![usize::MAX; tree.n()];
    parent[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &u in tree.neighbours(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Colouring with lists of size `max(Δ + 2, 6)` around two cyclically
/// consecutive fans at distinct tree vertices.
fn two_fans(
    p: &mut Painter<'_>,
    tree: &Graph,
    v: &[Vertex],
    t: &[Vertex],
) -> Result<(), ConstructError> {
    let g = p.graph();
    let k = v.len();
    let (t0, t1) = (t[0], t[1]);
    let l = |x: Vertex, y: Vertex| p.list(g.id(x, y)).to_vec();
    let inp = HalinClaimInput {
        a: l(v[k - 1], t0),
        b: l(v[0], t0),
        c: l(v[0], v[1]),
        d: l(t1, v[1]),
        e: l(v[2], v[1]),
        t1: l(v[1], v[0]),
        t0: l(v[0], v[k - 1]),
        tk: l(v[k - 1], v[0]),
    };
    let ch = claim_halin_choose(&inp)?;
    for (x, y, c) in [
        (v[k - 1], t0, ch.a),
        (v[0], t0, ch.b),
        (v[0], v[1], ch.c),
        (t1, v[1], ch.d),
        (v[2], v[1], ch.e),
    ] {
        p.set(g.id(x, y), c, Rule::HalinClaim)?;
    }

    let path = tree_path(tree, t0, t1);
    let len = path.len();
    p.fill_at(t0, v[0], Rule::HalinPath)?;
    p.fill_at(t0, path[1], Rule::HalinPath)?;
    for &y in tree.neighbours(t0) {
        p.fill_at(t0, y, Rule::HalinPath)?;
    }
    for i in 1..len - 1 {
        let u = path[i];
        p.fill_at(u, path[i - 1], Rule::HalinPath)?;
        p.fill_at(u, path[i + 1], Rule::HalinPath)?;
        for &y in tree.neighbours(u) {
            p.fill_at(u, y, Rule::HalinPath)?;
        }
    }
    p.fill_at(t1, path[len - 2], Rule::HalinEndpoint)?;
    p.fill_at(v[1], t1, Rule::HalinEndpoint)?;
    p.fill_at(t1, v[2], Rule::HalinEndpoint)?;
    for &y in tree.neighbours(t1) {
        p.fill_at(t1, y, Rule::HalinEndpoint)?;
    }
    for &x in &path {
        for &y in tree.neighbours(x) {
            p.fill_at(y, x, Rule::HalinPathExternal)?;
        }
    }

    for &x in &path {
        for &y in tree.neighbours(x) {
            if path.contains(&y) || tree.degree(y) == 1 {
                continue;
            }
            let verts = branch(tree, x, y);
            let edges: Vec<_> = tree
                .edges()
                .iter()
                .copied()
                .filter(|(a, b)| verts.contains(a) && verts.contains(b))
                .collect();
            let local = local_graph(&verts, &edges);
            let ll = local_lists(&local, &verts, g, p.lists());
            // verts[0] = x, verts[1] = y.
            let pre = [
                Precoloured {
                    incidence: local.id(0, 1),
                    colour: p.colour(g.id(x, y)).expect("path external coloured"),
                },
                Precoloured {
                    incidence: local.id(1, 0),
                    colour: p.colour(g.id(y, x)).expect("path internal coloured"),
                },
            ];
            let r = colour_tree(&local, &ll, &pre)?;
            let mut r = r;
            for s in &mut r.trace {
                s.rule = Rule::HalinSubtree;
            }
            p.absorb(&local, &verts, &r, |_, _| true)?;
        }
    }

    let s = cycle_sequence(g, v);
    p.fill(s[2], Rule::HalinCycle)?;
    for &id in &s[4..2 * k - 2] {
        p.fill(id, Rule::HalinCycle)?;
    }
    for id in [s[2 * k - 2], s[2 * k - 1], s[1]] {
        p.fill(id, Rule::HalinCycleClose)?;
    }
    Ok(())
}

/// `x` followed by the component of `tree - x` containing `y` (BFS from `y`).
fn branch(tree: &Graph, x: Vertex, y: Vertex) -> Vec<Vertex> {
    let mut out = vec![x, y];
    let mut i = 1;
    while i < out.len() {
        let v = out[i];
        for &u in tree.neighbours(v) {
            if !out.contains(&u) {
                out.push(u);
            }
        }
        i += 1;
    }
    out
}
