//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::{BTreeSet, HashSet};
use std::time::{Duration, Instant};

use incol_core::constructive::{
    colour_k4, colour_tree, grid_lemma_choose, theorem_bound, GridLemmaInput,
};
use incol_core::generators::{
    gen_basic, gen_cactus, gen_cactus_random, gen_cycle_power, gen_halin, gen_ham_cubic,
    gen_ham_cubic_random, gen_random_degenerate, gen_random_graph, gen_random_tree,
    planar_leaf_order, BasicFamily, CactusParams, CactusStructure, FamilySpec,
};
use incol_core::harness::{random_list_assignment, run_campaign, FuzzCampaign, CHI_K4};
use incol_core::solver::{
    greedy_degenerate, incidence_chromatic_number, solve_list_colouring, ChiOutcome, GreedyOutcome,
    SolveOutcome, SolverConfig,
};
use incol_core::{validate_colouring, Colour, Graph, Incidence, ListAssignment, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "cycle regression",
            cycle_regression,
            Some(Duration::from_secs(10)),
        ),
        (
            "tree exactness",
            tree_exactness,
            Some(Duration::from_secs(60)),
        ),
        ("grid bounds", grid_bounds, Some(Duration::from_secs(300))),
        ("grid-lemma oracle", grid_lemma_oracle, None),
        ("K4", k4, None),
        ("Halin", halin, None),
        ("coronae", coronae, None),
        ("cactus", cactus, None),
        ("Hamiltonian cubic", ham_cubic, None),
        ("structural invariants", structural_invariants, None),
        ("solver vs enumeration", solver_vs_enumeration, None),
        ("degeneracy greedy", degeneracy_greedy, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let out = match (out, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match out {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

fn campaign_line(specs: Vec<FamilySpec>, trials: usize, seed: u64, precolour: bool) -> Outcome {
    let mut c = FuzzCampaign::at_bound(specs, trials, seed);
    c.precolour = precolour;
    let r = run_campaign(&c).map_err(|e| e.to_string())?;
    if r.failure_count() > 0 {
        let f = r.instances.iter().flat_map(|i| &i.failures).next().unwrap();
        return Err(format!(
            "{} failures out of {} trials; first: {:?} seed {}: {}",
            r.failure_count(),
            r.trial_count(),
            f.spec,
            f.seed,
            f.error
        ));
    }
    Ok(format!(
        "{} instances, {} trials, 0 failures",
        r.instances.len(),
        r.trial_count()
    ))
}

fn cycle_regression() -> Outcome {
    for n in 3..=12 {
        let g = gen_basic(BasicFamily::Cycle, n).unwrap().0;
        let want = if n % 3 == 0 { 3 } else { 4 };
        match incidence_chromatic_number(&g, &SolverConfig::default()) {
            ChiOutcome::Exact { value } if value == want => {}
            other => return Err(format!("C{n}: expected {want}, got {other:?}")),
        }
    }
    Ok("C3..C12 match 3,4,4,3,4,4,3,4,4,3".into())
}

fn tree_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let trees: Vec<Graph> = (0..50)
        .map(|_| {
            let n = rng.gen_range(2..=13);
            gen_random_tree(n, &mut rng).unwrap().0
        })
        .collect();
    let errors: Vec<String> = trees
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, t)| {
            let mut errs = Vec::new();
            let delta = t.max_degree() as u32;
            match incidence_chromatic_number(t, &SolverConfig::default()) {
                ChiOutcome::Exact { value } if value == delta + 1 => {}
                other => errs.push(format!("tree {i}: chi {other:?}, Δ+1 = {}", delta + 1)),
            }
            let k = delta as usize + 1;
            for s in 0..100u64 {
                let l = random_list_assignment(t, k, 3 * k, i as u64 * 1000 + s).unwrap();
                match colour_tree(t, &l, &[]) {
                    Ok(r)
                        if validate_colouring(t, Some(&l), &r.colouring)
                            .unwrap()
                            .is_valid() => {}
                    Ok(_) => errs.push(format!("tree {i} seed {s}: invalid colouring")),
                    Err(e) => errs.push(format!("tree {i} seed {s}: {e}")),
                }
            }
            errs
        })
        .collect();
    match errors.first() {
        None => Ok("50 trees, χ_i = Δ+1, 5000 list colourings".into()),
        Some(e) => Err(format!("{} failures; first: {e}", errors.len())),
    }
}

fn grid_bounds() -> Outcome {
    let mut specs: Vec<FamilySpec> = (2..=10).map(|m| FamilySpec::Grid { m, n: 2 }).collect();
    for m in 3..=7 {
        for n in 3..=m {
            specs.push(FamilySpec::Grid { m, n });
        }
    }
    campaign_line(specs, 200, 31, false)
}

/// Independent check of the conditions on `(a, b, c, d)`.
fn lemma_ok(inp: &GridLemmaInput, a: Colour, b: Colour, c: Colour, d: Colour) -> bool {
    let not_in = |x: Colour, s: &[Colour]| !s.contains(&x);
    let [b1, b2, b3, b4] = inp.beta;
    inp.l_a.contains(&a)
        && inp.l_b.contains(&b)
        && inp.l_c.contains(&c)
        && inp.l_d.contains(&d)
        && not_in(a, &[inp.alpha1, inp.alpha1p, inp.alpha2, inp.alpha2p])
        && not_in(b, &[inp.alpha1, inp.alpha1p, inp.alpha2, inp.alpha2p])
        && not_in(c, &[inp.alpha1, inp.alpha2, b4])
        && not_in(d, &[b1, b2, b3, b4])
        && BTreeSet::from([a, b, c]).len() == 3
        && BTreeSet::from([a, c, d]).len() == 3
}

fn grid_lemma_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut done = 0;
    let mut mismatches = Vec::new();
    while done < 10_000 {
        let universe = rng.gen_range(6..=18u32);
        let mut list = || {
            let mut l: Vec<Colour> = rand::seq::index::sample(&mut rng, universe as usize, 6)
                .into_iter()
                .map(|x| x as Colour + 1)
                .collect();
            l.sort_unstable();
            l
        };
        let (l_a, l_b, l_c, l_d) = (list(), list(), list(), list());
        let mut col = || rng.gen_range(1..=universe);
        let (alpha1, alpha1p, alpha2, alpha2p) = (col(), col(), col(), col());
        let beta = [col(), col(), col(), col()];
        // The context must itself be a proper partial colouring of the grid.
        let distinct = [
            (alpha1, alpha1p),
            (alpha1, alpha2),
            (alpha2, alpha2p),
            (alpha1p, alpha2),
            (alpha1, alpha2p),
            (beta[0], alpha2p),
        ];
        if distinct.iter().any(|(x, y)| x == y) || BTreeSet::from(beta).len() < 4 {
            continue;
        }
        let inp = GridLemmaInput {
            l_a,
            l_b,
            l_c,
            l_d,
            alpha1,
            alpha1p,
            alpha2,
            alpha2p,
            beta,
        };
        done += 1;
        let mut oracle = HashSet::new();
        for &a in &inp.l_a {
            for &b in &inp.l_b {
                for &c in &inp.l_c {
                    for &d in &inp.l_d {
                        if lemma_ok(&inp, a, b, c, d) {
                            oracle.insert((a, b, c, d));
                        }
                    }
                }
            }
        }
        match grid_lemma_choose(&inp) {
            Ok(ch) if oracle.contains(&(ch.a, ch.b, ch.c, ch.d)) => {}
            other => mismatches.push(format!("{inp:?} -> {other:?}, oracle has {}", oracle.len())),
        }
    }
    match mismatches.first() {
        None => Ok("10000 instances agree with the exhaustive oracle".into()),
        Some(m) => Err(format!("{} mismatches; first: {m}", mismatches.len())),
    }
}

fn k4() -> Outcome {
    let g = gen_basic(BasicFamily::Complete, 4).unwrap().0;
    match incidence_chromatic_number(&g, &SolverConfig::default()) {
        ChiOutcome::Exact { value } if value == CHI_K4 => {}
        other => return Err(format!("chi(K4) = {other:?}, frozen {CHI_K4}")),
    }
    for seed in 0..1000 {
        let l = random_list_assignment(&g, 6, 18, seed).unwrap();
        match colour_k4(&g, &l) {
            Ok(r)
                if validate_colouring(&g, Some(&l), &r.colouring)
                    .unwrap()
                    .is_valid() => {}
            Ok(_) => return Err(format!("seed {seed}: invalid colouring")),
            Err(e) => return Err(format!("seed {seed}: {e}")),
        }
    }
    Ok(format!(
        "1000 six-list assignments coloured, χ_i(K4) = {CHI_K4}"
    ))
}

fn halin_from_tree(n: usize, edges: &[(Vertex, Vertex)]) -> FamilySpec {
    let tree = Graph::new(n, edges).unwrap();
    let order = planar_leaf_order(&tree, 0);
    gen_halin(&tree, &order).unwrap().1
}

fn halin() -> Outcome {
    let mut specs: Vec<FamilySpec> = (4..=8).map(|n| FamilySpec::Wheel { n }).collect();
    let expected = [7, 7, 7, 8, 9];
    for (s, want) in specs.iter().zip(expected) {
        let g = s.build().unwrap();
        let got = theorem_bound(s, &g).unwrap();
        if got != want {
            return Err(format!("{s:?}: bound {got}, expected {want}"));
        }
    }
    let non_wheels = [
        // Two adjacent centres with two leaves each.
        halin_from_tree(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
        // Spine of three centres.
        halin_from_tree(
            9,
            &[
                (0, 1),
                (1, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (2, 6),
                (2, 7),
                (1, 8),
            ],
        ),
        // Centre of degree 4 with three branching children.
        halin_from_tree(
            11,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 8),
                (3, 9),
                (3, 10),
            ],
        ),
        // Caterpillar with mixed degrees 3 and 4.
        halin_from_tree(
            12,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (0, 5),
                (1, 6),
                (1, 7),
                (2, 8),
                (3, 9),
                (3, 10),
                (3, 11),
            ],
        ),
    ];
    for s in &non_wheels {
        let g = s.build().unwrap();
        let d = g.max_degree();
        if !(3..=4).contains(&d) || theorem_bound(s, &g) != Some(6) {
            return Err(format!("{s:?}: Δ = {d}, bound {:?}", theorem_bound(s, &g)));
        }
    }
    specs.extend(non_wheels);
    campaign_line(specs, 200, 41, false)
}

fn coronae() -> Outcome {
    let specs: Vec<FamilySpec> = (3..=5)
        .flat_map(|n| (1..=5).map(move |p| FamilySpec::Corona { n, p }))
        .collect();
    let plain = campaign_line(specs.clone(), 200, 51, false)?;
    let pre = campaign_line(specs, 200, 52, true)?;
    Ok(format!("plain: {plain}; pre-coloured: {pre}"))
}

fn cactus() -> Outcome {
    let hand = vec![
        // Δ = 3.
        (gen_cactus(4, vec![vec![0, 1, 2]], vec![(2, 3)]).unwrap(), 5),
        // Δ = 4, no cycle through a vertex of degree 4.
        (
            gen_cactus(7, vec![vec![0, 1, 2]], vec![(2, 3), (3, 4), (3, 5), (3, 6)]).unwrap(),
            5,
        ),
        // Δ = 4 on a cycle.
        (
            gen_cactus(7, vec![vec![0, 1, 2], vec![4, 5, 6]], vec![(0, 3), (0, 4)]).unwrap(),
            6,
        ),
        // Δ = 5, maximal cycle of length 4.
        (
            gen_cactus(
                8,
                vec![vec![0, 1, 2, 3]],
                vec![(0, 4), (0, 5), (0, 6), (6, 7)],
            )
            .unwrap(),
            7,
        ),
        // Δ = 6, one maximal triangle and a second cycle.
        (
            gen_cactus(
                11,
                vec![vec![0, 1, 2], vec![3, 4, 5, 6]],
                vec![(0, 3), (0, 7), (0, 8), (0, 9), (4, 10)],
            )
            .unwrap(),
            7,
        ),
        // Δ = 5, two maximal triangles.
        (
            gen_cactus(
                10,
                vec![vec![0, 1, 2], vec![3, 4, 5]],
                vec![(0, 3), (0, 6), (0, 7), (3, 8), (3, 9)],
            )
            .unwrap(),
            8,
        ),
    ];
    let mut specs = Vec::new();
    for ((g, spec), want) in hand {
        let got = theorem_bound(&spec, &g).unwrap();
        if got != want {
            return Err(format!("{spec:?}: bound {got}, expected {want}"));
        }
        specs.push(spec);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut random = 0;
    while random < 20 {
        let size = rng.gen_range(3..=10);
        let (g, spec) = gen_cactus_random(CactusParams::with_size(size), &mut rng).unwrap();
        let FamilySpec::Cactus { cycles, .. } = &spec else {
            unreachable!()
        };
        if cycles.len() == 1 && cycles[0].len() == g.n() {
            continue;
        }
        let _ = CactusStructure::new(&g, cycles);
        specs.push(spec);
        random += 1;
    }
    campaign_line(specs, 100, 62, false)
}

fn is_cube(g: &Graph) -> bool {
    let q3: BTreeSet<(usize, usize)> = (0..8usize)
        .flat_map(|a| (0..3).map(move |b| (a, a ^ (1 << b))))
        .filter(|(a, b)| a < b)
        .collect();
    let mut perm: Vec<usize> = (0..8).collect();
    loop {
        let image: BTreeSet<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        if image == q3 {
            return true;
        }
        // Next permutation in lexicographic order.
        let Some(i) = (0..7).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..8).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

fn ham_cubic() -> Outcome {
    let (k4, k4s) = gen_ham_cubic(4, &[(0, 2), (1, 3)]).unwrap();
    let (k33, k33s) = gen_ham_cubic(6, &[(0, 3), (1, 4), (2, 5)]).unwrap();
    let (q3, q3s) = gen_ham_cubic(8, &[(0, 5), (1, 4), (2, 7), (3, 6)]).unwrap();
    if k4 != gen_basic(BasicFamily::Complete, 4).unwrap().0 {
        return Err("K4 spec is not K4".into());
    }
    let bip = |a: usize, b: usize| (a + b) % 2 == 1;
    if !k33.edges().iter().all(|&(a, b)| bip(a, b)) {
        return Err("K33 spec is not bipartite".into());
    }
    if !is_cube(&q3) {
        return Err("Q3 spec is not the cube".into());
    }
    let mut specs = vec![k4s, k33s, q3s];
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..20 {
        let n = 2 * rng.gen_range(3..=10);
        specs.push(gen_ham_cubic_random(n, &mut rng).unwrap().1);
    }
    campaign_line(specs, 200, 72, false)
}

fn structural_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    for t in 0..100 {
        let n = rng.gen_range(1..=15);
        let p = rng.gen_range(0.1..0.7);
        let g = gen_random_graph(n, p, &mut rng);
        if g.incidence_count() != 2 * g.edge_count() {
            return Err(format!(
                "graph {t}: {} incidences, {} edges",
                g.incidence_count(),
                g.edge_count()
            ));
        }
        let all = g.incidences();
        for (id, inc) in all.iter().enumerate() {
            let expected = 2 * g.degree(inc.vertex) + g.degree(inc.other) - 2;
            // Brute-force neighbourhood from the definition.
            let brute = all
                .iter()
                .filter(|j| {
                    *j != inc
                        && (j.vertex == inc.vertex
                            || j.edge() == inc.edge()
                            || j.other == inc.vertex
                            || inc.other == j.vertex)
                })
                .count();
            let lib = g.incidence_neighbourhood(id).len();
            if brute != expected || lib != expected {
                return Err(format!(
                    "graph {t} incidence {inc}: brute {brute}, library {lib}, formula {expected}"
                ));
            }
        }
    }
    for n in 3..=8 {
        let c = gen_basic(BasicFamily::Cycle, n).unwrap().0;
        let ic = c.incidence_graph();
        let target = gen_cycle_power(2 * n, 2).unwrap().0;
        // (i, i·i+1) ↦ 2i and (i+1, (i+1)·i) ↦ 2i+1.
        let mut map = vec![usize::MAX; 2 * n];
        for i in 0..n {
            let j = (i + 1) % n;
            map[c.incidence_id(i, j).unwrap()] = 2 * i;
            map[c.incidence_id(j, i).unwrap()] = 2 * i + 1;
        }
        let image: BTreeSet<(usize, usize)> = ic
            .edges()
            .iter()
            .map(|&(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
            .collect();
        let want: BTreeSet<(usize, usize)> = target.edges().iter().copied().collect();
        if image != want || ic.edge_count() != target.edge_count() {
            return Err(format!("I(C{n}) is not C^2_{}", 2 * n));
        }
    }
    Ok("100 random graphs; I(C_n) ≅ C²_2n for n = 3..8".into())
}

/// Canonical form of a connected graph with at most six vertices.
fn canon_component(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap_or_default()
}

fn canon(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut out: Vec<Vec<(usize, usize)>> = g
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let pos = |v: Vertex| c.iter().position(|&x| x == v).unwrap();
            let e: Vec<_> = g
                .edges()
                .iter()
                .filter(|(a, _)| c.contains(a))
                .map(|&(a, b)| (pos(a), pos(b)))
                .collect();
            canon_component(c.len(), &e)
        })
        .collect();
    out.sort();
    out
}

/// All graphs without isolated vertices and at most `max_edges` edges, one
/// per isomorphism class.
fn small_graphs(max_edges: usize) -> Vec<Graph> {
    let mut layer = vec![Graph::empty(0)];
    let mut all = layer.clone();
    for _ in 0..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let n = g.n();
            let mut cands = Vec::new();
            for a in 0..n + 2 {
                for b in a + 1..n + 2 {
                    if a > n || (a == n && b != n + 1) {
                        continue;
                    }
                    if b < n && g.has_edge(a, b) {
                        continue;
                    }
                    cands.push((a, b));
                }
            }
            for (a, b) in cands {
                let nn = n.max(b + 1);
                let mut e = g.edges().to_vec();
                e.push((a, b));
                let h = Graph::new(nn, &e).unwrap();
                if seen.insert(canon(&h)) {
                    next.push(h);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

fn naive_colourable(g: &Graph, p: Colour) -> bool {
    let m = g.incidence_count();
    if m == 0 {
        return true;
    }
    let all: Vec<Incidence> = g.incidences();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (all[i], all[j]);
            if a.vertex == b.vertex
                || a.edge() == b.edge()
                || a.other == b.vertex
                || b.other == a.vertex
            {
                pairs.push((i, j));
            }
        }
    }
    let mut c = vec![1; m];
    loop {
        if pairs.iter().all(|&(i, j)| c[i] != c[j]) {
            return true;
        }
        let mut k = 0;
        loop {
            if k == m {
                return false;
            }
            if c[k] < p {
                c[k] += 1;
                break;
            }
            c[k] = 1;
            k += 1;
        }
    }
}

fn solver_vs_enumeration() -> Outcome {
    let graphs = small_graphs(5);
    let checks: Vec<Result<(), String>> = graphs
        .par_iter()
        .flat_map_iter(|g| (1..=5).map(move |p| (g, p)))
        .map(|(g, p)| {
            let l = ListAssignment::uniform(g, p);
            let naive = naive_colourable(g, p);
            match solve_list_colouring(g, &l, &SolverConfig::default())
                .map_err(|e| e.to_string())?
            {
                SolveOutcome::Colouring(c) if naive => {
                    if validate_colouring(g, Some(&l), &c).unwrap().is_valid() {
                        Ok(())
                    } else {
                        Err(format!("{:?} p={p}: invalid solver colouring", g.edges()))
                    }
                }
                SolveOutcome::Unsatisfiable if !naive => Ok(()),
                other => Err(format!(
                    "{:?} p={p}: solver {other:?}, enumeration {naive}",
                    g.edges()
                )),
            }
        })
        .collect();
    let bad: Vec<&String> = checks.iter().filter_map(|r| r.as_ref().err()).collect();
    match bad.first() {
        None => Ok(format!("{} graphs × p = 1..5 agree", graphs.len())),
        Some(e) => Err(format!("{} disagreements; first: {e}", bad.len())),
    }
}

/// Degeneracy by repeatedly deleting a minimum-degree vertex.
fn degeneracy(g: &Graph) -> usize {
    let mut alive: Vec<bool> = vec![true; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let deg = |v: usize| g.neighbours(v).iter().filter(|&&u| alive[u]).count();
        let v = (0..g.n())
            .filter(|&v| alive[v])
            .min_by_key(|&v| deg(v))
            .unwrap();
        best = best.max(deg(v));
        alive[v] = false;
    }
    best
}

fn degeneracy_greedy() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for t in 0..30 {
        let n = rng.gen_range(3..=30);
        let g = gen_random_degenerate(n, 2, &mut rng);
        if degeneracy(&g) > 2 {
            return Err(format!("graph {t} is not 2-degenerate"));
        }
        let k = g.max_degree() + 3;
        for s in 0..20 {
            let l = random_list_assignment(&g, k, 3 * k, t * 100 + s).unwrap();
            match greedy_degenerate(&g, &l) {
                GreedyOutcome::Colouring(c)
                    if validate_colouring(&g, Some(&l), &c).unwrap().is_valid() => {}
                other => return Err(format!("graph {t} seed {s}: {other:?}")),
            }
        }
    }
    Ok("30 graphs × 20 list assignments coloured".into())
}
