use std::collections::VecDeque;

use super::corona::{corona_run, Branch};
use super::{corona_bound, prepare_lists, ConstructiveReport, Painter, Rule};
use crate::error::ConstructError;
use crate::generators::{corona_pendant, gen_corona, CactusStructure, FamilySpec};
use crate::graph::{Colour, Graph, ListAssignment, Vertex};

/// List size at which `colour_cactus` always succeeds.
pub fn cactus_bound(g: &Graph, s: &CactusStructure) -> usize {
    let delta = g.max_degree();
    match delta {
        0..=3 => 5,
        4 if !s.has_maximal_cycle() => 5,
        4 => 6,
        _ if s.maximal_triangles() <= 1 => (delta + 1).max(7),
        _ => (delta + 1).max(8),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Node {
    Cycle(usize),
    Plain(Vertex),
}

/// Colours a connected cactus that is neither a tree nor a cycle.
///
/// Cycles are contracted; the resulting tree is swept breadth-first from a
/// cycle. A cycle with its pendant edges is coloured as a corona (missing
/// pendants padded with private colours), a plain vertex greedily.
pub fn colour_cactus(
    g: &Graph,
    spec: &FamilySpec,
    l: &ListAssignment,
) -> Result<ConstructiveReport, ConstructError> {
    let FamilySpec::Cactus { cycles, .. } = spec else {
        return Err(ConstructError::pre("not a cactus spec"));
    };
    let built = spec
        .build()
        .map_err(|e| ConstructError::pre(e.to_string()))?;
    if &built != g {
        return Err(ConstructError::pre("graph does not match its cactus spec"));
    }
    if !g.is_connected() {
        return Err(ConstructError::pre("cactus must be connected"));
    }
    if cycles.is_empty() {
        return Err(ConstructError::pre("cactus without cycles is a tree"));
    }
    if cycles.len() == 1 && cycles[0].len() == g.n() {
        return Err(ConstructError::pre("cactus is a cycle"));
    }
    let s = CactusStructure::new(g, cycles);
    let k = cactus_bound(g, &s);
    let lists = prepare_lists(g, l, k, &[])?;
    let fresh = lists.max_colour() + 1;
    let mut p = Painter::new(g, lists);

    let mut node_of: Vec<Node> = (0..g.n()).map(Node::Plain).collect();
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            node_of[v] = Node::Cycle(i);
        }
    }
    let members = |n: Node| -> Vec<Vertex> {
        match n {
            Node::Cycle(i) => cycles[i].clone(),
            Node::Plain(v) => vec![v],
        }
    };
    let first = (0..cycles.len())
        .find(|&i| s.maximal[i] && cycles[i].len() == 3)
        .unwrap_or(0);
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([(Node::Cycle(first), None::<(Vertex, Vertex)>)]);
    for v in members(Node::Cycle(first)) {
        seen[v] = true;
    }
    let mut fresh = fresh;
    while let Some((node, attach)) = queue.pop_front() {
        match node {
            Node::Cycle(i) => cycle_step(&mut p, &cycles[i], attach, k, &mut fresh)?,
            Node::Plain(v) => {
                for id in g.internal(v) {
                    p.fill(id, Rule::CactusNormal)?;
                }
                for id in g.external(v).collect::<Vec<_>>() {
                    p.fill(id, Rule::CactusNormal)?;
                }
            }
        }
        for w in members(node) {
            for &y in g.neighbours(w) {
                if !seen[y] {
                    let next = node_of[y];
                    for u in members(next) {
                        seen[u] = true;
                    }
                    queue.push_back((next, Some((y, w))));
                }
            }
        }
    }
    p.finish()
}

/// `attach = Some((u, x))`: `u` on the cycle, `x` its coloured predecessor.
fn cycle_step(
    p: &mut Painter<'_>,
    cycle: &[Vertex],
    attach: Option<(Vertex, Vertex)>,
    k: usize,
    fresh: &mut Colour,
) -> Result<(), ConstructError> {
    let g = p.graph();
    let n = cycle.len();
    let start = match attach {
        Some((u, _)) => cycle
            .iter()
            .position(|&v| v == u)
            .expect("attachment on cycle"),
        None => (0..n)
            .max_by_key(|&i| (g.degree(cycle[i]), std::cmp::Reverse(i)))
            .unwrap(),
    };
    let cyc: Vec<Vertex> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    let pend = cyc
        .iter()
        .map(|&v| g.degree(v) - 2)
        .max()
        .unwrap_or(0)
        .max(1);
    let mut hang: Vec<Vec<Vertex>> = cyc
        .iter()
        .map(|&v| {
            g.neighbours(v)
                .iter()
                .copied()
                .filter(|u| !cyc.contains(u))
                .collect()
        })
        .collect();
    if let Some((_, x)) = attach {
        hang[0].retain(|&y| y != x);
        hang[0].insert(0, x);
    }
    let pre = attach.map(|(u, x)| {
        (
            p.colour(g.id(u, x)).expect("attachment coloured"),
            p.colour(g.id(x, u)).expect("attachment coloured"),
        )
    });
    let (branch, kk) = if pend >= 3 && corona_bound(n, pend, pre.is_some()) <= k {
        (Branch::Tight, corona_bound(n, pend, pre.is_some()))
    } else if pend + 4 <= k {
        (Branch::Wide, pend + 4)
    } else {
        return Err(ConstructError::pre(
            "lists too short for a cycle of this cactus",
        ));
    };

    let (local, _) = gen_corona(n, pend).expect("valid corona");
    // Host vertex of each local vertex, if any.
    let mut host: Vec<Option<Vertex>> = vec![None; local.n()];
    for i in 0..n {
        host[i] = Some(cyc[i]);
        for (j, &y) in hang[i].iter().enumerate() {
            host[corona_pendant(n, pend, i, j + 1)] = Some(y);
        }
    }
    let lists = local
        .incidences()
        .into_iter()
        .map(|inc| match (host[inc.vertex], host[inc.other]) {
            (Some(a), Some(b)) => p.list(g.id(a, b)).to_vec(),
            _ => {
                let l: Vec<Colour> = (*fresh..*fresh + kk as Colour).collect();
                *fresh += kk as Colour;
                l
            }
        })
        .collect();
    let lists = ListAssignment::new(lists).expect("non-empty lists");
    let r = corona_run(&local, n, pend, &lists, pre, branch, kk)?;
    for s in &r.trace {
        if let (Some(a), Some(b)) = (host[s.incidence.vertex], host[s.incidence.other]) {
            let id = g.id(a, b);
            if p.colour(id).is_none() {
                p.set(id, s.colour, s.rule)?;
            }
        }
    }
    Ok(())
}
