//! Text and JSON formats for graphs and LP points.
//!
//! Graph text format:
//! ```text
//! n m
//! u v [mult] [label]
//! ```
//!
//! Point (instance) text format:
//! ```text
//! n m
//! u v x [cost] [label]
//! estar <label>        (optional trailer)
//! ```
//! `x` and `cost` are rationals written as `p/q`; `-` stands for a missing
//! cost. Both formats also have JSON mirrors.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::ratio::{rat_from_str, rat_to_string, Rat};
use num::One;
use serde::{Deserialize, Serialize};

/// An LP point on a graph, with optional edge costs and a marked edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Multigraph,
    pub x: Vec<Rat>,
    pub cost: Option<Vec<Rat>>,
    /// index of the marked edge `e*` for triangle points
    pub estar: Option<usize>,
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let n = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("missing vertex count".into()))?;
    let m = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("missing edge count".into()))?;
    Ok((n, m))
}

fn content_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

pub fn parse_graph_text(text: &str) -> Result<Multigraph> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return Err(Error::Parse("empty graph".into()));
    }
    let (n, m) = parse_header(lines[0])?;
    if lines.len() != m + 1 {
        return Err(Error::Parse(format!(
            "expected {m} edge lines, found {}",
            lines.len() - 1
        )));
    }
    let mut g = Multigraph::new(n);
    for (i, line) in lines[1..].iter().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(Error::Parse(format!("bad edge line {line:?}")));
        }
        let u: usize = toks[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad endpoint in {line:?}")))?;
        let v: usize = toks[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad endpoint in {line:?}")))?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse(format!("edge {u}-{v} out of range")));
        }
        let mut mult = 1u32;
        let mut label = format!("e{i}");
        let mut rest = &toks[2..];
        if let Some(first) = rest.first() {
            if let Ok(k) = first.parse::<u32>() {
                mult = k;
                rest = &rest[1..];
            }
        }
        if let Some(l) = rest.first() {
            label = (*l).to_string();
        }
        if mult == 0 {
            return Err(Error::Parse(format!("zero multiplicity in {line:?}")));
        }
        for copy in 0..mult {
            let lab = if copy == 0 { label.clone() } else { format!("{label}.{copy}") };
            g.add_labeled_edge(u, v, lab);
        }
    }
    Ok(g)
}

pub fn graph_to_text(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n, g.m());
    for e in &g.edges {
        out.push_str(&format!("{} {} {} {}\n", e.u, e.v, e.mult, e.label));
    }
    out
}

pub fn parse_instance_text(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let mut estar_label = None;
    if let Some(last) = lines.last() {
        if let Some(rest) = last.strip_prefix("estar ") {
            estar_label = Some(rest.trim().to_string());
            lines.pop();
        }
    }
    if lines.is_empty() {
        return Err(Error::Parse("empty instance".into()));
    }
    let (n, m) = parse_header(lines[0])?;
    if lines.len() != m + 1 {
        return Err(Error::Parse(format!(
            "expected {m} edge lines, found {}",
            lines.len() - 1
        )));
    }
    let mut g = Multigraph::new(n);
    let mut x = Vec::new();
    let mut cost = Vec::new();
    let mut any_cost = false;
    for (i, line) in lines[1..].iter().enumerate() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 3 {
            return Err(Error::Parse(format!("bad instance line {line:?}")));
        }
        let u: usize = toks[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad endpoint in {line:?}")))?;
        let v: usize = toks[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad endpoint in {line:?}")))?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse(format!("edge {u}-{v} out of range")));
        }
        let xe = rat_from_str(toks[2]).map_err(Error::Parse)?;
        let mut ce = Rat::one();
        let mut label = format!("e{i}");
        let mut rest = &toks[3..];
        if let Some(first) = rest.first() {
            if *first == "-" {
                rest = &rest[1..];
            } else if let Ok(c) = rat_from_str(first) {
                ce = c;
                any_cost = true;
                rest = &rest[1..];
            }
        }
        if let Some(l) = rest.first() {
            label = (*l).to_string();
        }
        g.add_labeled_edge(u, v, label);
        x.push(xe);
        cost.push(ce);
    }
    let estar = match estar_label {
        None => None,
        Some(l) => Some(
            g.edge_by_label(&l)
                .ok_or_else(|| Error::Parse(format!("estar label {l:?} not found")))?,
        ),
    };
    Ok(Instance {
        graph: g,
        x,
        cost: if any_cost { Some(cost) } else { None },
        estar,
    })
}

pub fn instance_to_text(inst: &Instance) -> String {
    let g = &inst.graph;
    let mut out = format!("{} {}\n", g.n, g.m());
    for (i, e) in g.edges.iter().enumerate() {
        let cost = match &inst.cost {
            Some(c) => rat_to_string(&c[i]),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            e.u,
            e.v,
            rat_to_string(&inst.x[i]),
            cost,
            e.label
        ));
    }
    if let Some(es) = inst.estar {
        out.push_str(&format!("estar {}\n", g.edges[es].label));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct InstanceEdgeDoc {
    u: usize,
    v: usize,
    label: String,
    x: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    cost: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    n: usize,
    edges: Vec<InstanceEdgeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    estar: Option<String>,
}

pub fn instance_to_json(inst: &Instance) -> String {
    let doc = InstanceDoc {
        n: inst.graph.n,
        edges: inst
            .graph
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| InstanceEdgeDoc {
                u: e.u,
                v: e.v,
                label: e.label.clone(),
                x: rat_to_string(&inst.x[i]),
                cost: inst.cost.as_ref().map(|c| rat_to_string(&c[i])),
            })
            .collect(),
        estar: inst.estar.map(|i| inst.graph.edges[i].label.clone()),
    };
    serde_json::to_string_pretty(&doc).expect("instance serializes")
}

pub fn instance_from_json(text: &str) -> Result<Instance> {
    let doc: InstanceDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut g = Multigraph::new(doc.n);
    let mut x = Vec::new();
    let mut cost = Vec::new();
    let mut any_cost = false;
    for e in &doc.edges {
        if e.u >= doc.n || e.v >= doc.n || e.u == e.v {
            return Err(Error::Parse(format!("edge {}-{} out of range", e.u, e.v)));
        }
        g.add_labeled_edge(e.u, e.v, e.label.clone());
        x.push(rat_from_str(&e.x).map_err(Error::Parse)?);
        match &e.cost {
            Some(c) => {
                cost.push(rat_from_str(c).map_err(Error::Parse)?);
                any_cost = true;
            }
            None => cost.push(Rat::one()),
        }
    }
    let estar = match &doc.estar {
        None => None,
        Some(l) => Some(
            g.edge_by_label(l)
                .ok_or_else(|| Error::Parse(format!("estar label {l:?} not found")))?,
        ),
    };
    Ok(Instance {
        graph: g,
        x,
        cost: if any_cost { Some(cost) } else { None },
        estar,
    })
}

pub fn graph_to_json(g: &Multigraph) -> String {
    serde_json::to_string_pretty(g).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<Multigraph> {
    let g: Multigraph =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for e in &g.edges {
        if e.u >= g.n || e.v >= g.n || e.u == e.v || e.mult == 0 {
            return Err(Error::Parse(format!("bad edge {}-{}", e.u, e.v)));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::ratio::rat;

    #[test]
    fn graph_text_round_trip() {
        let g = gen::petersen();
        let text = graph_to_text(&g);
        let back = parse_graph_text(&text).unwrap();
        assert_eq!(g, back);
        assert_eq!(graph_to_text(&back), text);
    }

    #[test]
    fn graph_json_round_trip() {
        let g = gen::prism();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn instance_round_trips() {
        let inst = gen::triangulated_k4();
        assert!(inst.estar.is_some());
        let text = instance_to_text(&inst);
        let back = parse_instance_text(&text).unwrap();
        assert_eq!(inst, back);
        assert_eq!(instance_to_text(&back), text);
        let jback = instance_from_json(&instance_to_json(&inst)).unwrap();
        assert_eq!(inst, jback);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("2 1\n0 0").is_err());
        assert!(parse_graph_text("2 2\n0 1").is_err());
        assert!(parse_instance_text("2 1\n0 1 notarational").is_err());
    }

    #[test]
    fn instance_costs_parse() {
        let text = "4 2\n0 1 1/2 3 a\n2 3 1 - b\n";
        let inst = parse_instance_text(text).unwrap();
        assert_eq!(inst.x, vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(inst.cost.as_ref().unwrap()[0], rat(3, 1));
        assert_eq!(inst.graph.edges[1].label, "b");
    }
}
