//! Self-describing JSON documents and DOT export.
//!
//! List and colouring documents carry an echo of the incidence enumeration,
//! `"incidences": [[v, [a, b]], ...]`, checked against the graph on load.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{canonical, Colour, Graph, IncidenceColouring, ListAssignment, Vertex};

type Echo = Vec<(Vertex, (Vertex, Vertex))>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListsDoc {
    pub lists: BTreeMap<String, Vec<Colour>>,
    pub incidences: Echo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringDoc {
    pub colours: BTreeMap<String, Colour>,
    pub incidences: Echo,
}

fn echo(g: &Graph) -> Echo {
    g.incidences()
        .into_iter()
        .map(|i| (i.vertex, canonical(i.vertex, i.other)))
        .collect()
}

fn check_echo(g: &Graph, found: &Echo) -> Result<(), GraphError> {
    let expected = echo(g);
    if found.len() != expected.len() {
        return Err(GraphError::EchoMismatch(format!(
            "{} incidences listed, graph has {}",
            found.len(),
            expected.len()
        )));
    }
    if let Some(i) = (0..expected.len()).find(|&i| found[i] != expected[i]) {
        return Err(GraphError::EchoMismatch(format!(
            "incidence {i} is {:?} in the document but {:?} in the graph",
            found[i], expected[i]
        )));
    }
    Ok(())
}

fn parse_id(key: &str, count: usize) -> Result<usize, GraphError> {
    let id: usize = key
        .parse()
        .map_err(|_| GraphError::Format(format!("incidence key `{key}` is not an integer")))?;
    if id >= count {
        return Err(GraphError::UnknownIncidence { id, count });
    }
    Ok(id)
}

fn json_err(e: serde_json::Error) -> GraphError {
    GraphError::Format(e.to_string())
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(g).expect("graphs serialize")
}

pub fn graph_from_json(s: &str) -> Result<Graph, GraphError> {
    serde_json::from_str(s).map_err(json_err)
}

pub fn lists_to_doc(g: &Graph, l: &ListAssignment) -> ListsDoc {
    ListsDoc {
        lists: l
            .lists()
            .iter()
            .enumerate()
            .map(|(i, x)| (i.to_string(), x.clone()))
            .collect(),
        incidences: echo(g),
    }
}

pub fn lists_from_doc(g: &Graph, doc: &ListsDoc) -> Result<ListAssignment, GraphError> {
    check_echo(g, &doc.incidences)?;
    let m = g.incidence_count();
    let mut lists = vec![None; m];
    for (k, v) in &doc.lists {
        lists[parse_id(k, m)?] = Some(v.clone());
    }
    let lists: Vec<Vec<Colour>> = lists
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or(GraphError::EmptyList(i)))
        .collect::<Result<_, _>>()?;
    ListAssignment::new(lists)
}

pub fn lists_to_json(g: &Graph, l: &ListAssignment) -> String {
    serde_json::to_string_pretty(&lists_to_doc(g, l)).expect("documents serialize")
}

pub fn lists_from_json(g: &Graph, s: &str) -> Result<ListAssignment, GraphError> {
    lists_from_doc(g, &serde_json::from_str(s).map_err(json_err)?)
}

pub fn colouring_to_doc(g: &Graph, c: &IncidenceColouring) -> ColouringDoc {
    ColouringDoc {
        colours: c
            .as_slice()
            .iter()
            .enumerate()
            .filter_map(|(i, x)| x.map(|x| (i.to_string(), x)))
            .collect(),
        incidences: echo(g),
    }
}

/// Missing keys stay uncoloured.
pub fn colouring_from_doc(g: &Graph, doc: &ColouringDoc) -> Result<IncidenceColouring, GraphError> {
    check_echo(g, &doc.incidences)?;
    let m = g.incidence_count();
    let mut c = IncidenceColouring::empty(m);
    for (k, &v) in &doc.colours {
        c.set(parse_id(k, m)?, v);
    }
    Ok(c)
}

pub fn colouring_to_json(g: &Graph, c: &IncidenceColouring) -> String {
    serde_json::to_string_pretty(&colouring_to_doc(g, c)).expect("documents serialize")
}

pub fn colouring_from_json(g: &Graph, s: &str) -> Result<IncidenceColouring, GraphError> {
    colouring_from_doc(g, &serde_json::from_str(s).map_err(json_err)?)
}

/// `g` with each edge end labelled by the colour of the incidence at that end.
pub fn graph_dot(g: &Graph, c: Option<&IncidenceColouring>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for &(a, b) in g.edges() {
        let label = |x: Vertex, y: Vertex| {
            c.and_then(|c| c.get(g.id(x, y)))
                .map_or_else(|| "?".to_string(), |k| k.to_string())
        };
        match c {
            Some(_) => {
                let _ = writeln!(
                    s,
                    "  {a} -- {b} [taillabel=\"{}\", headlabel=\"{}\"];",
                    label(a, b),
                    label(b, a)
                );
            }
            None => {
                let _ = writeln!(s, "  {a} -- {b};");
            }
        }
    }
    s.push_str("}\n");
    s
}

/// The incidence graph `I_G`, one node per incidence, labelled `(v,vu)` and
/// its colour.
pub fn incidence_graph_dot(g: &Graph, c: Option<&IncidenceColouring>) -> String {
    let ig = g.incidence_graph();
    let mut s = String::from("graph I {\n  node [shape=box];\n");
    for (id, inc) in g.incidences().into_iter().enumerate() {
        let colour = c
            .and_then(|c| c.get(id))
            .map(|k| format!(" : {k}"))
            .unwrap_or_default();
        let _ = writeln!(s, "  i{id} [label=\"{inc}{colour}\"];");
    }
    for &(a, b) in ig.edges() {
        let _ = writeln!(s, "  i{a} -- i{b};");
    }
    s.push_str("}\n");
    s
}
