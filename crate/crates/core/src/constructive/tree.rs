use std::collections::{HashMap, VecDeque};

use super::{ConstructiveReport, Painter, Precoloured, Rule};
use crate::error::ConstructError;
use crate::graph::{incidence_adjacent, Colour, Graph, IncidenceId, ListAssignment, Vertex};

/// Colours a tree from lists of size at least `Δ + max(k, 1)`, where `k`
/// incidences are pre-coloured.
///
/// The first pre-coloured incidence (by id) seeds a top-down sweep; every
/// other pre-coloured colour is removed from the lists of the incidences
/// adjacent to it, so the sweep can never collide with it.
pub fn colour_tree(
    t: &Graph,
    l: &ListAssignment,
    pre: &[Precoloured],
) -> Result<ConstructiveReport, ConstructError> {
    if t.edge_count() > 0 && !t.is_tree() {
        return Err(ConstructError::pre("graph is not a tree"));
    }
    let m = t.incidence_count();
    if l.len() != m {
        return Err(crate::error::GraphError::ListCount {
            expected: m,
            found: l.len(),
        }
        .into());
    }
    let need = t.max_degree() + pre.len().max(1);
    if m > 0 && l.min_size() < need {
        return Err(ConstructError::ListTooSmall {
            needed: need,
            found: l.min_size(),
        });
    }
    let mut pre = pre.to_vec();
    pre.sort_by_key(|p| p.incidence);
    for (i, p) in pre.iter().enumerate() {
        if p.incidence >= m {
            return Err(ConstructError::BadPrecolouring(format!(
                "unknown incidence {}",
                p.incidence
            )));
        }
        if !l.contains(p.incidence, p.colour) {
            return Err(ConstructError::BadPrecolouring(format!(
                "colour {} not in the list of incidence {}",
                p.colour, p.incidence
            )));
        }
        for q in &pre[..i] {
            if q.incidence == p.incidence {
                return Err(ConstructError::BadPrecolouring(format!(
                    "incidence {} pre-coloured twice",
                    p.incidence
                )));
            }
            if q.colour == p.colour
                && incidence_adjacent(t.incidence(q.incidence), t.incidence(p.incidence))
            {
                return Err(ConstructError::BadPrecolouring(format!(
                    "adjacent incidences {} and {} share colour {}",
                    q.incidence, p.incidence, p.colour
                )));
            }
        }
    }
    if m == 0 {
        return Painter::new(t, l.clone()).finish();
    }

    let mut lists: Vec<Vec<Colour>> = l.lists().to_vec();
    for p in pre.iter().skip(1) {
        for j in t.incidence_neighbourhood(p.incidence) {
            lists[j].retain(|&c| c != p.colour);
        }
    }
    let lists = ListAssignment::new(lists).expect("lists keep at least Δ colours");
    let fixed: HashMap<IncidenceId, Colour> = pre.iter().map(|p| (p.incidence, p.colour)).collect();
    let mut painter = Painter::new(t, lists);

    let first = pre.first().map_or(0, |p| p.incidence);
    let base = t.incidence(first);
    let (x1, y1) = (base.vertex, base.other);
    paint(&mut painter, &fixed, x1, y1, Rule::TreeBaseEdge)?;
    paint(&mut painter, &fixed, y1, x1, Rule::TreeBaseEdge)?;
    sweep(&mut painter, &fixed, x1, y1)?;
    sweep(&mut painter, &fixed, y1, x1)?;
    painter.finish()
}

fn paint(
    painter: &mut Painter<'_>,
    fixed: &HashMap<IncidenceId, Colour>,
    v: Vertex,
    u: Vertex,
    rule: Rule,
) -> Result<(), ConstructError> {
    let id = painter.graph().id(v, u);
    match fixed.get(&id) {
        Some(&c) => painter.set(id, c, Rule::TreePrecoloured),
        None => painter.greedy(id, rule).map(|_| ()),
    }
}

/// Breadth-first from `root`, away from `parent`: at each vertex first its
/// incidences towards the children, then the children's incidences back.
fn sweep(
    painter: &mut Painter<'_>,
    fixed: &HashMap<IncidenceId, Colour>,
    root: Vertex,
    parent: Vertex,
) -> Result<(), ConstructError> {
    let g = painter.graph();
    let mut queue = VecDeque::from([(root, parent)]);
    while let Some((v, par)) = queue.pop_front() {
        let children: Vec<Vertex> = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&c| c != par)
            .collect();
        for &c in &children {
            paint(painter, fixed, v, c, Rule::TreeTopDown)?;
        }
        for &c in &children {
            paint(painter, fixed, c, v, Rule::TreeTopDown)?;
            queue.push_back((c, v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_basic, gen_random_tree, BasicFamily};
    use crate::graph::validate_colouring;
    use crate::harness::random_list_assignment;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check(t: &Graph, l: &ListAssignment, pre: &[Precoloured]) -> ConstructiveReport {
        let r = colour_tree(t, l, pre).unwrap();
        assert!(validate_colouring(t, Some(l), &r.colouring)
            .unwrap()
            .is_valid());
        assert_eq!(r.replay(), r.colouring);
        for p in pre {
            assert_eq!(r.colouring.get(p.incidence), Some(p.colour));
        }
        r
    }

    #[test]
    fn stars_and_paths_with_delta_plus_one() {
        for n in 1..8 {
            let (s, _) = gen_basic(BasicFamily::Star, n).unwrap();
            check(&s, &ListAssignment::uniform(&s, n as Colour + 1), &[]);
            let (p, _) = gen_basic(BasicFamily::Path, n + 1).unwrap();
            check(
                &p,
                &ListAssignment::uniform(&p, 3.min(n as Colour + 1)),
                &[],
            );
        }
    }

    #[test]
    fn single_vertex_is_empty() {
        let g = Graph::empty(1);
        let r = colour_tree(&g, &ListAssignment::new(vec![]).unwrap(), &[]).unwrap();
        assert!(r.trace.is_empty());
    }

    #[test]
    fn random_lists_on_random_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..40u64 {
            let (t, _) = gen_random_tree(2 + (seed as usize % 11), &mut rng).unwrap();
            let k = t.max_degree() + 1;
            let l = random_list_assignment(&t, k, 3 * k, seed).unwrap();
            check(&t, &l, &[]);
        }
    }

    #[test]
    fn precoloured_incidences_are_kept() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for seed in 0..40u64 {
            let (t, _) = gen_random_tree(3 + (seed as usize % 9), &mut rng).unwrap();
            let k = t.max_degree() + 2;
            let l = random_list_assignment(&t, k, 2 * k, seed).unwrap();
            let m = t.incidence_count();
            let a = (seed as usize * 7) % m;
            let b = (a + 1 + seed as usize % (m - 1)) % m;
            let ca = l.list(a)[0];
            let cb = l
                .list(b)
                .iter()
                .copied()
                .find(|&c| c != ca || !incidence_adjacent(t.incidence(a), t.incidence(b)))
                .unwrap();
            check(
                &t,
                &l,
                &[
                    Precoloured {
                        incidence: a,
                        colour: ca,
                    },
                    Precoloured {
                        incidence: b,
                        colour: cb,
                    },
                ],
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let (c, _) = gen_basic(BasicFamily::Cycle, 4).unwrap();
        assert!(matches!(
            colour_tree(&c, &ListAssignment::uniform(&c, 9), &[]),
            Err(ConstructError::Precondition(_))
        ));
        let (s, _) = gen_basic(BasicFamily::Star, 3).unwrap();
        assert!(matches!(
            colour_tree(&s, &ListAssignment::uniform(&s, 3), &[]),
            Err(ConstructError::ListTooSmall {
                needed: 4,
                found: 3
            })
        ));
        let l = ListAssignment::uniform(&s, 5);
        let clash = [
            Precoloured {
                incidence: s.id(0, 1),
                colour: 1,
            },
            Precoloured {
                incidence: s.id(0, 2),
                colour: 1,
            },
        ];
        assert!(matches!(
            colour_tree(&s, &l, &clash),
            Err(ConstructError::BadPrecolouring(_))
        ));
        let off = [Precoloured {
            incidence: 0,
            colour: 9,
        }];
        assert!(matches!(
            colour_tree(&s, &l, &off),
            Err(ConstructError::BadPrecolouring(_))
        ));
    }
}
