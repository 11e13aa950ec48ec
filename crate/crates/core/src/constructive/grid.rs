use serde::{Deserialize, Serialize};

use super::{minus, prepare_lists, smallest, ConstructiveReport, Painter, Rule};
use crate::error::ConstructError;
use crate::graph::{Colour, Graph, ListAssignment, Vertex};

/// Lists at which `colour_grid` always succeeds.
pub fn grid_bound(m: usize, n: usize) -> usize {
    if m.min(n) == 2 {
        5
    } else {
        6
    }
}

/// Local situation of one step inside a grid row.
///
/// Vertices: `u = v_{i,j}`, `x = v_{i,j+1}`, `u' = v_{i,j-1}`,
/// `u'' = v_{i+1,j}`, `v = v_{i-1,j}`, `w = v_{i-1,j+1}`.
/// The lists belong to `(u,ux)`, `(u,uu'')`, `(x,xu)`, `(x,xw)`; the other
/// fields are colours already present: `alpha1 = (u,uu')`,
/// `alpha1p = (u',u'u)`, `alpha2 = (u,uv)`, `alpha2p = (v,vu)` and
/// `beta = [(w,wv), (w,ww'), (w,ww''), (w,wx)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLemmaInput {
    pub l_a: Vec<Colour>,
    pub l_b: Vec<Colour>,
    pub l_c: Vec<Colour>,
    pub l_d: Vec<Colour>,
    pub alpha1: Colour,
    pub alpha1p: Colour,
    pub alpha2: Colour,
    pub alpha2p: Colour,
    pub beta: [Colour; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridLemmaCase {
    /// `(x,xu)` keeps a spare colour.
    SpareC,
    /// `(x,xw)` keeps a spare colour.
    SpareD,
    /// `beta4` usable on `(u,ux)`.
    ReuseA,
    /// `beta4` usable on `(u,uu'')`.
    ReuseB,
    DisjointPairs,
    SharedLoose,
    SharedTight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLemmaChoice {
    pub a: Colour,
    pub b: Colour,
    pub c: Colour,
    pub d: Colour,
    pub case: GridLemmaCase,
}

impl GridLemmaInput {
    /// The conditions a choice must meet.
    pub fn admits(&self, a: Colour, b: Colour, c: Colour, d: Colour) -> bool {
        let sa = [self.alpha1, self.alpha1p, self.alpha2, self.alpha2p];
        let sc = [self.alpha1, self.alpha2, self.beta[3]];
        self.l_a.contains(&a)
            && !sa.contains(&a)
            && self.l_b.contains(&b)
            && !sa.contains(&b)
            && self.l_c.contains(&c)
            && !sc.contains(&c)
            && self.l_d.contains(&d)
            && !self.beta.contains(&d)
            && a != b
            && a != c
            && b != c
            && a != d
            && c != d
    }
}

/// Picks colours for `(u,ux)`, `(u,uu'')`, `(x,xu)`, `(x,xw)`; lists must
/// have at least six colours.
pub fn grid_lemma_choose(inp: &GridLemmaInput) -> Result<GridLemmaChoice, ConstructError> {
    let lists = [&inp.l_a, &inp.l_b, &inp.l_c, &inp.l_d];
    if let Some(l) = lists.iter().find(|l| l.len() < 6) {
        return Err(ConstructError::ListTooSmall {
            needed: 6,
            found: l.len(),
        });
    }
    let fail = || ConstructError::SelectionFailed {
        rule: Rule::GridStep3b,
    };
    let sa = [inp.alpha1, inp.alpha1p, inp.alpha2, inp.alpha2p];
    let b4 = inp.beta[3];
    let a_ok = minus(&inp.l_a, &sa);
    let b_ok = minus(&inp.l_b, &sa);
    let c_ok = minus(&inp.l_c, &[inp.alpha1, inp.alpha2, b4]);
    let d_ok = minus(&inp.l_d, &inp.beta);
    let pick = |from: &[Colour], excl: &[Colour]| smallest(minus(from, excl)).ok_or_else(fail);
    let done = |a, b, c, d, case| Ok(GridLemmaChoice { a, b, c, d, case });

    if inp.l_c.len() - c_ok.len() <= 2 {
        let a = pick(&a_ok, &[])?;
        let b = pick(&b_ok, &[a])?;
        let d = pick(&d_ok, &[a])?;
        let c = pick(&c_ok, &[a, b, d])?;
        return done(a, b, c, d, GridLemmaCase::SpareC);
    }
    if inp.l_d.len() - d_ok.len() <= 3 {
        let a = pick(&a_ok, &[])?;
        let b = pick(&b_ok, &[a])?;
        let c = pick(&c_ok, &[a, b])?;
        let d = pick(&d_ok, &[a, c])?;
        return done(a, b, c, d, GridLemmaCase::SpareD);
    }
    if a_ok.contains(&b4) {
        let a = b4;
        let b = pick(&b_ok, &[a])?;
        let c = pick(&c_ok, &[b])?;
        let d = pick(&d_ok, &[c])?;
        return done(a, b, c, d, GridLemmaCase::ReuseA);
    }
    if b_ok.contains(&b4) {
        let b = b4;
        let a = pick(&a_ok, &[b])?;
        let d = pick(&d_ok, &[a])?;
        let c = pick(&c_ok, &[a, d])?;
        return done(a, b, c, d, GridLemmaCase::ReuseB);
    }
    if a_ok.len() < 2 || b_ok.len() < 2 {
        return Err(fail());
    }
    let (e1, e2) = (a_ok[0], a_ok[1]);
    let (e3, e4) = (b_ok[0], b_ok[1]);
    let common: Vec<Colour> = [e1, e2]
        .into_iter()
        .filter(|c| [e3, e4].contains(c))
        .collect();
    let other = |pair: [Colour; 2], x: Colour| if pair[0] == x { pair[1] } else { pair[0] };
    match common.first() {
        None => {
            let (d, c) = d_ok
                .iter()
                .flat_map(|&d| c_ok.iter().map(move |&c| (d, c)))
                .find(|&(d, c)| c != d && !([e1, e2] == [c, d] || [e1, e2] == [d, c]))
                .ok_or_else(fail)?;
            let a = pick(&[e1, e2], &[c, d])?;
            let b = pick(&[e3, e4], &[c])?;
            done(a, b, c, d, GridLemmaCase::DisjointPairs)
        }
        Some(&mu) => {
            let in_c = inp.l_c.contains(&mu);
            let in_d = inp.l_d.contains(&mu);
            if !in_c || !in_d {
                let a = mu;
                let b = other([e3, e4], mu);
                if !in_c {
                    let d = pick(&d_ok, &[mu])?;
                    let c = pick(&c_ok, &[b, d])?;
                    done(a, b, c, d, GridLemmaCase::SharedLoose)
                } else {
                    let c = pick(&c_ok, &[a, b])?;
                    let d = pick(&d_ok, &[c])?;
                    done(a, b, c, d, GridLemmaCase::SharedLoose)
                }
            } else if !inp.beta.contains(&mu) {
                let a = other([e1, e2], mu);
                let c = pick(&c_ok, &[a, mu])?;
                done(a, mu, c, mu, GridLemmaCase::SharedTight)
            } else {
                let b = other([e3, e4], mu);
                let c = pick(&c_ok, &[mu, b])?;
                let d = pick(&d_ok, &[c])?;
                done(mu, b, c, d, GridLemmaCase::SharedTight)
            }
        }
    }
}

/// The grid `P_m □ P_n` with `v_{i,j} = (i-1)n + (j-1)`, for any `m, n ≥ 1`.
pub(crate) fn grid_graph(m: usize, n: usize) -> Graph {
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if j + 1 < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(m * n, &edges).expect("grid is simple")
}

/// Colours `P_m □ P_n` from 5-lists when `min(m, n) = 2` and from 6-lists
/// otherwise. Lists are indexed by the incidences of the `m × n` grid with
/// `v_{i,j} = (i-1)n + (j-1)`; a grid with `m < n` is processed transposed.
pub fn colour_grid(
    m: usize,
    n: usize,
    l: &ListAssignment,
) -> Result<ConstructiveReport, ConstructError> {
    if m < 2 || n < 2 {
        return Err(ConstructError::pre("grid sides must be at least 2"));
    }
    let g = grid_graph(m, n);
    let lists = prepare_lists(&g, l, grid_bound(m, n), &[])?;
    let (rows, cols) = (m.max(n), m.min(n));
    // 1-based coordinates of the (possibly transposed) grid.
    let vid = move |i: usize, j: usize| -> Vertex {
        if m >= n {
            (i - 1) * n + (j - 1)
        } else {
            (j - 1) * n + (i - 1)
        }
    };
    let mut p = Painter::new(&g, lists);
    if cols == 2 {
        ladder(&mut p, rows, vid)?;
    } else {
        wide(&mut p, rows, cols, vid)?;
    }
    p.finish()
}

fn ladder(
    p: &mut Painter<'_>,
    rows: usize,
    vid: impl Fn(usize, usize) -> Vertex,
) -> Result<(), ConstructError> {
    let square = [vid(1, 1), vid(1, 2), vid(2, 2), vid(2, 1)];
    for s in super::cycle_sequence(p.graph(), &square) {
        p.fill(s, Rule::GridSquareFirst)?;
    }
    for i in 2..rows {
        let (a, b, c, d) = (vid(i, 1), vid(i + 1, 1), vid(i, 2), vid(i + 1, 2));
        for (x, y) in [(a, b), (b, a), (c, d), (d, c), (b, d), (d, b)] {
            p.fill_at(x, y, Rule::GridSquareNext)?;
        }
    }
    Ok(())
}

fn wide(
    p: &mut Painter<'_>,
    m: usize,
    n: usize,
    vid: impl Fn(usize, usize) -> Vertex,
) -> Result<(), ConstructError> {
    // Internal incidences of the first row and the first column, each vertex
    // starting with the incidence towards its predecessor.
    let mut prev = None;
    let border: Vec<_> = (1..=n)
        .map(|j| (1, j))
        .chain((2..=m).map(|i| (i, 1)))
        .collect();
    for &(i, j) in &border {
        let v = vid(i, j);
        if let Some(u) = prev {
            p.fill_at(v, u, Rule::GridStep1)?;
        }
        for k in p.graph().internal(v) {
            p.fill(k, Rule::GridStep1)?;
        }
        prev = Some(if i == 1 && j == n { vid(1, 1) } else { v });
    }

    let at = |i: usize, j: usize| -> Option<Vertex> {
        (i >= 1 && i <= m && j >= 1 && j <= n).then(|| vid(i, j))
    };
    for j in 2..=n {
        let v = vid(2, j);
        for w in [at(2, j - 1), at(1, j), at(3, j), at(2, j + 1)]
            .into_iter()
            .flatten()
        {
            p.fill_at(v, w, Rule::GridStep2)?;
        }
    }

    for i in 3..m {
        p.fill_at(vid(i, 2), vid(i - 1, 2), Rule::GridStep3a)?;
        p.fill_at(vid(i, 2), vid(i, 1), Rule::GridStep3a)?;
        for j in 2..=n - 2 {
            lemma_step(p, i, j, &vid)?;
        }
        p.fill_at(vid(i, n - 1), vid(i, n), Rule::GridStep3c)?;
        p.fill_at(vid(i, n - 1), vid(i + 1, n - 1), Rule::GridStep3c)?;
    }
    for i in 3..m {
        let v = vid(i, n);
        for w in [vid(i, n - 1), vid(i - 1, n), vid(i + 1, n)] {
            p.fill_at(v, w, Rule::GridStep4)?;
        }
    }
    for j in 2..=n {
        let v = vid(m, j);
        for w in [at(m - 1, j), at(m, j - 1), at(m, j + 1)]
            .into_iter()
            .flatten()
        {
            p.fill_at(v, w, Rule::GridStep5)?;
        }
    }
    Ok(())
}

fn lemma_step(
    p: &mut Painter<'_>,
    i: usize,
    j: usize,
    vid: &impl Fn(usize, usize) -> Vertex,
) -> Result<(), ConstructError> {
    let g = p.graph();
    let (u, x, u1, u2) = (vid(i, j), vid(i, j + 1), vid(i, j - 1), vid(i + 1, j));
    let (v, w, w1, w2) = (
        vid(i - 1, j),
        vid(i - 1, j + 1),
        vid(i - 2, j + 1),
        vid(i - 1, j + 2),
    );
    let col = |a: Vertex, b: Vertex| {
        p.colour(g.id(a, b)).ok_or(ConstructError::SelectionFailed {
            rule: Rule::GridStep3b,
        })
    };
    let inp = GridLemmaInput {
        l_a: p.list(g.id(u, x)).to_vec(),
        l_b: p.list(g.id(u, u2)).to_vec(),
        l_c: p.list(g.id(x, u)).to_vec(),
        l_d: p.list(g.id(x, w)).to_vec(),
        alpha1: col(u, u1)?,
        alpha1p: col(u1, u)?,
        alpha2: col(u, v)?,
        alpha2p: col(v, u)?,
        beta: [col(w, v)?, col(w, w1)?, col(w, w2)?, col(w, x)?],
    };
    let ch = grid_lemma_choose(&inp)?;
    p.set(g.id(u, x), ch.a, Rule::GridStep3b)?;
    p.set(g.id(u, u2), ch.b, Rule::GridStep3b)?;
    p.set(g.id(x, u), ch.c, Rule::GridStep3b)?;
    p.set(g.id(x, w), ch.d, Rule::GridStep3b)?;
    Ok(())
}
