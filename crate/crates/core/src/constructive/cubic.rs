use serde::{Deserialize, Serialize};

use super::halin::{colour_k4, triple_select};
use super::{
    cycle_sequence, intersect, minus, prepare_lists, smallest, ConstructiveReport, Painter, Rule,
};
use crate::error::ConstructError;
use crate::generators::FamilySpec;
use crate::graph::{Colour, Graph, ListAssignment, Vertex};

/// Lists around the start of the Hamiltonian cycle `v_0 v_1 v_2 …`, with
/// `v_s` matched to `v_0` and `v_t` matched to `v_1`:
/// `a = (v_1,v_1v_t)`, `b = (v_s,v_sv_0)`, `c = (v_2,v_2v_1)`,
/// `d = (v_0,v_0v_s)`, `e = (v_t,v_tv_1)`; targets `t10 = (v_1,v_1v_0)` and
/// `t01 = (v_0,v_0v_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamClaimInput {
    pub a: Vec<Colour>,
    pub b: Vec<Colour>,
    pub c: Vec<Colour>,
    pub d: Vec<Colour>,
    pub e: Vec<Colour>,
    pub t10: Vec<Colour>,
    pub t01: Vec<Colour>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamChoice {
    pub a: Colour,
    pub b: Colour,
    pub c: Colour,
    pub d: Colour,
    pub e: Colour,
}

impl HamClaimInput {
    pub fn admits(&self, ch: &HamChoice) -> bool {
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
            && ch.a != ch.c
            && ch.a != ch.e
            && ch.b != ch.d
            && count(&self.t01, &[ch.a, ch.b]) <= 1
            && count(&self.t10, &[ch.c, ch.d, ch.e]) <= 1
    }
}

/// Picks the five colours; all lists must share one size of at least six.
pub fn claim_ham_choose(inp: &HamClaimInput) -> Result<HamChoice, ConstructError> {
    let all: [&[Colour]; 7] = [&inp.a, &inp.b, &inp.c, &inp.d, &inp.e, &inp.t10, &inp.t01];
    let k = all[0].len();
    if k < 6 || all.iter().any(|l| l.len() != k) {
        return Err(ConstructError::pre(
            "ham-claim: lists must have one common size of at least 6",
        ));
    }
    let ([c, d, e], _) = triple_select(&inp.c, &inp.d, &inp.e, &inp.t10);
    let la = minus(&inp.a, &[e, c]);
    let lb = minus(&inp.b, &[d]);
    let fail = || ConstructError::SelectionFailed {
        rule: Rule::HamClaim,
    };
    let (a, b) = if let Some(x) = smallest(intersect(&la, &lb)) {
        (x, x)
    } else if let Some(b) = smallest(minus(&lb, &inp.t01)) {
        (smallest(la).ok_or_else(fail)?, b)
    } else {
        let a = smallest(minus(&la, &inp.t01)).ok_or_else(fail)?;
        (a, smallest(lb).ok_or_else(fail)?)
    };
    Ok(HamChoice { a, b, c, d, e })
}

/// Colours a Hamiltonian cubic graph (cycle `0 … n-1` plus a perfect
/// matching) from 6-lists.
pub fn colour_hamiltonian_cubic(
    g: &Graph,
    spec: &FamilySpec,
    l: &ListAssignment,
) -> Result<ConstructiveReport, ConstructError> {
    let FamilySpec::HamCubic { n, matching } = spec else {
        return Err(ConstructError::pre("not a Hamiltonian cubic spec"));
    };
    let n = *n;
    let built = spec
        .build()
        .map_err(|e| ConstructError::pre(e.to_string()))?;
    if &built != g {
        return Err(ConstructError::pre("graph does not match its spec"));
    }
    if n == 4 {
        return colour_k4(g, l);
    }
    let lists = prepare_lists(g, l, 6, &[])?;
    let mut mate = vec![0; n];
    for &(a, b) in matching {
        mate[a] = b;
        mate[b] = a;
    }
    let r = if mate[0] == 2 { 2 } else { 0 };
    let v: Vec<Vertex> = (0..n).map(|i| (i + r) % n).collect();
    let (vs, vt) = (mate[v[0]], mate[v[1]]);
    let mut p = Painter::new(g, lists);
    let li = |x: Vertex, y: Vertex| p.list(g.id(x, y)).to_vec();
    let inp = HamClaimInput {
        a: li(v[1], vt),
        b: li(vs, v[0]),
        c: li(v[2], v[1]),
        d: li(v[0], vs),
        e: li(vt, v[1]),
        t10: li(v[1], v[0]),
        t01: li(v[0], v[1]),
    };
    let ch = claim_ham_choose(&inp)?;
    for (x, y, c) in [
        (v[1], vt, ch.a),
        (vs, v[0], ch.b),
        (v[2], v[1], ch.c),
        (v[0], vs, ch.d),
        (vt, v[1], ch.e),
    ] {
        p.set(g.id(x, y), c, Rule::HamClaim)?;
    }
    for &x in &v {
        p.fill_at(x, mate[x], Rule::HamMatching)?;
    }
    let s = cycle_sequence(g, &v);
    p.fill(s[2], Rule::HamCycle)?;
    for &id in &s[4..] {
        p.fill(id, Rule::HamCycle)?;
    }
    p.fill(s[0], Rule::HamCycleClose)?;
    p.fill(s[1], Rule::HamCycleClose)?;
    p.finish()
}
