use super::{
    cycle_sequence, intersect, minus, prepare_lists, smallest, ConstructiveReport, Painter, Rule,
};
use crate::error::ConstructError;
use crate::generators::{corona_pendant, gen_corona};
use crate::graph::{Colour, Graph, ListAssignment};

/// List size at which `colour_corona` always succeeds; `pre` means the
/// pendant edge `v_0 v_0^1` arrives coloured.
pub fn corona_bound(n: usize, p: usize, pre: bool) -> usize {
    if p <= 2 {
        p + 4
    } else if pre && n == 3 {
        (p + 3).max(8)
    } else {
        (p + 3).max(7)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Branch {
    /// Lists of size `p + 4`: the cycle goes first, then the pendant edges.
    Wide,
    /// Lists of size `max(p + 3, 7)` (8 for a pre-coloured triangle): each
    /// cycle vertex first gets a colour that its last pendant incidence
    /// cannot use.
    Tight,
}

/// Colours `C_n ⊙ pK_1`. With `pre = Some((a, b))` the incidences
/// `(v_0, v_0v_0^1)` and `(v_0^1, v_0^1v_0)` are fixed to `a` and `b`.
pub fn colour_corona(
    n: usize,
    p: usize,
    l: &ListAssignment,
    pre: Option<(Colour, Colour)>,
) -> Result<ConstructiveReport, ConstructError> {
    let (g, _) = gen_corona(n, p).map_err(|e| ConstructError::pre(e.to_string()))?;
    let branch = if p <= 2 { Branch::Wide } else { Branch::Tight };
    corona_run(&g, n, p, l, pre, branch, corona_bound(n, p, pre.is_some()))
}

pub(crate) fn corona_run(
    g: &Graph,
    n: usize,
    p: usize,
    l: &ListAssignment,
    pre: Option<(Colour, Colour)>,
    branch: Branch,
    k: usize,
) -> Result<ConstructiveReport, ConstructError> {
    let pend = |i: usize, j: usize| corona_pendant(n, p, i % n, j);
    let v = |i: usize| i % n;
    let (i01, e01) = (g.id(0, pend(0, 1)), g.id(pend(0, 1), 0));
    let pins: Vec<_> = pre
        .iter()
        .flat_map(|&(a, b)| [(i01, a), (e01, b)])
        .collect();
    if let Some((a, b)) = pre {
        if a == b {
            return Err(ConstructError::BadPrecolouring(
                "the two pre-coloured incidences share a colour".into(),
            ));
        }
        if !l.contains(i01, a) || !l.contains(e01, b) {
            return Err(ConstructError::BadPrecolouring(
                "pre-colour outside its list".into(),
            ));
        }
    }
    let lists = prepare_lists(g, l, k, &pins)?;
    let mut pa = Painter::new(g, lists);
    let cyc: Vec<usize> = (0..n).collect();
    let s = cycle_sequence(g, &cyc);

    if branch == Branch::Wide {
        let (a, b) = match pre {
            Some(ab) => ab,
            None => {
                let a = pa.list(i01)[0];
                let b = smallest(minus(pa.list(e01), &[a])).ok_or(ConstructError::Stuck {
                    incidence: e01,
                    rule: Rule::CoronaPendantEdge,
                })?;
                (a, b)
            }
        };
        let rule = if pre.is_some() {
            Rule::CoronaPrecoloured
        } else {
            Rule::CoronaPendantEdge
        };
        pa.set(i01, a, rule)?;
        pa.set(e01, b, rule)?;
        let last = s[2 * n - 2];
        if p >= 2 {
            let lp = pa.list(g.id(0, pend(0, p))).to_vec();
            let lc = pa.list(last).to_vec();
            let c = if !(lp.contains(&a) && lp.contains(&b)) {
                smallest(minus(&lc, &[a]))
            } else if lc.contains(&b) {
                Some(b)
            } else {
                smallest(minus(&lc, &lp))
            }
            .ok_or(ConstructError::SelectionFailed {
                rule: Rule::CoronaSelectC,
            })?;
            pa.set(last, c, Rule::CoronaSelectC)?;
        } else {
            pa.fill(last, Rule::CoronaCycle)?;
        }
        pa.fill(s[2 * n - 1], Rule::CoronaCycle)?;
        for &id in &s[..2 * n - 2] {
            pa.fill(id, Rule::CoronaCycle)?;
        }
        internals_and_externals(&mut pa, n, p, &pend)?;
        return pa.finish();
    }

    if let Some((a, b)) = pre {
        pa.set(i01, a, Rule::CoronaPrecoloured)?;
        pa.set(e01, b, Rule::CoronaPrecoloured)?;
        let lp = pa.list(g.id(0, pend(0, p))).to_vec();
        let (c_id, d_id) = (g.id(v(1), 0), g.id(v(n - 1), 0));
        let lc = pa.list(c_id).to_vec();
        let ld = pa.list(d_id).to_vec();
        let fail = || ConstructError::SelectionFailed {
            rule: Rule::CoronaSelectCd,
        };
        let (c, d) = if [a, b].iter().filter(|x| lp.contains(x)).count() <= 1 {
            let c1 = minus(&lc, &[a]);
            let d1 = minus(&ld, &[a]);
            if let Some(x) = smallest(intersect(&c1, &d1)) {
                (x, x)
            } else if let Some(x) = smallest(minus(&c1, &lp)) {
                (x, smallest(d1).ok_or_else(fail)?)
            } else {
                let y = smallest(minus(&d1, &lp)).ok_or_else(fail)?;
                (smallest(c1).ok_or_else(fail)?, y)
            }
        } else {
            let pick = |l: &[Colour]| {
                if l.contains(&b) {
                    Some(b)
                } else {
                    smallest(minus(l, &lp))
                }
            };
            (pick(&lc).ok_or_else(fail)?, pick(&ld).ok_or_else(fail)?)
        };
        pa.set(c_id, c, Rule::CoronaSelectCd)?;
        pa.set(d_id, d, Rule::CoronaSelectCd)?;
        alpha(&mut pa, n, p, 1, &pend)?;
        let last_pend = pa.list(g.id(v(n - 1), pend(n - 1, p))).to_vec();
        if !last_pend.contains(&d) {
            pa.fill(g.id(0, v(n - 1)), Rule::CoronaAlpha)?;
        } else {
            alpha(&mut pa, n, p, n - 1, &pend)?;
        }
        for i in 2..n.saturating_sub(1) {
            alpha(&mut pa, n, p, i, &pend)?;
        }
    } else {
        for i in 0..n {
            alpha(&mut pa, n, p, i, &pend)?;
        }
    }
    for &id in &s {
        pa.fill(id, Rule::CoronaCycleRest)?;
    }
    internals_and_externals(&mut pa, n, p, &pend)?;
    pa.finish()
}

/// Colours the external cycle incidences at `v_i` (one or both) with a colour
/// outside the list of `(v_i, v_iv_i^p)`.
fn alpha(
    pa: &mut Painter<'_>,
    n: usize,
    p: usize,
    i: usize,
    pend: &impl Fn(usize, usize) -> usize,
) -> Result<(), ConstructError> {
    let g = pa.graph();
    let (prev, next) = ((i + n - 1) % n, (i + 1) % n);
    let (left, right) = (g.id(prev, i), g.id(next, i));
    let lp = pa.list(g.id(i, pend(i, p))).to_vec();
    let al = if pa.colour(left).is_none() {
        pa.available(left)
    } else {
        Vec::new()
    };
    let ar = if pa.colour(right).is_none() {
        pa.available(right)
    } else {
        Vec::new()
    };
    if let Some(x) = smallest(intersect(&al, &ar)) {
        pa.set(left, x, Rule::CoronaAlpha)?;
        pa.set(right, x, Rule::CoronaAlpha)?;
    } else if let Some(x) = smallest(minus(&al, &lp)) {
        pa.set(left, x, Rule::CoronaAlpha)?;
    } else if let Some(x) = smallest(minus(&ar, &lp)) {
        pa.set(right, x, Rule::CoronaAlpha)?;
    } else {
        return Err(ConstructError::SelectionFailed {
            rule: Rule::CoronaAlpha,
        });
    }
    Ok(())
}

fn internals_and_externals(
    pa: &mut Painter<'_>,
    n: usize,
    p: usize,
    pend: &impl Fn(usize, usize) -> usize,
) -> Result<(), ConstructError> {
    for i in 0..n {
        for j in 1..=p {
            pa.fill_at(i, pend(i, j), Rule::CoronaInternal)?;
        }
    }
    for i in 0..n {
        for j in 1..=p {
            pa.fill_at(pend(i, j), i, Rule::CoronaExternal)?;
        }
    }
    Ok(())
}
