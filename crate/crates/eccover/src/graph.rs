//! Multigraphs with stable edge labels.
//!
//! Parallel edges are kept as separate entries so that labels survive
//! contraction and gluing. The `mult` field is only used for edge *multisets*
//! (members of convex combinations); graphs themselves store parallel copies
//! as distinct entries with `mult == 1`.

use crate::error::{Error, Result};
use crate::ratio::{zero, Rat};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub mult: u32,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub n: usize,
    pub edges: Vec<Edge>,
}

/// Result of contracting a vertex subset or a partition of the vertices.
pub struct Contraction {
    pub graph: Multigraph,
    /// parent vertex -> child vertex
    pub vertex_map: Vec<usize>,
    /// parent edge index -> child edge index, `None` if the edge was dropped
    pub edge_map: Vec<Option<usize>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        let label = format!("e{}", self.edges.len());
        self.add_labeled_edge(u, v, label)
    }

    pub fn add_labeled_edge(&mut self, u: usize, v: usize, label: String) -> usize {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.edges.push(Edge { u, v, mult: 1, label });
        self.edges.len() - 1
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v);
        }
        g
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        (self.edges[e].u, self.edges[e].v)
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let ed = &self.edges[e];
        if ed.u == v {
            ed.v
        } else {
            debug_assert_eq!(ed.v, v);
            ed.u
        }
    }

    pub fn is_incident(&self, e: usize, v: usize) -> bool {
        self.edges[e].u == v || self.edges[e].v == v
    }

    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.m()).filter(|&e| self.is_incident(e, v)).collect()
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.edges
            .iter()
            .map(|e| if e.u == v || e.v == v { e.mult } else { 0 })
            .sum()
    }

    pub fn label_index(&self) -> HashMap<String, usize> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.label.clone(), i))
            .collect()
    }

    pub fn edge_by_label(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// Connectivity of the support of `mults` (edge entry counts).
    pub fn is_connected_with(&self, mults: &[u32]) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            if mults[i] > 0 {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_connected(&self) -> bool {
        let mults: Vec<u32> = self.edges.iter().map(|e| e.mult).collect();
        self.is_connected_with(&mults)
    }

    /// Is the edge multiset a spanning 2-edge-connected multigraph?
    pub fn is_2ec(&self, mults: &[u32]) -> bool {
        if self.n <= 1 {
            return true;
        }
        if !self.is_connected_with(mults) {
            return false;
        }
        for i in 0..self.m() {
            if mults[i] == 1 {
                let mut reduced = mults.to_vec();
                reduced[i] = 0;
                if !self.is_connected_with(&reduced) {
                    return false;
                }
            }
        }
        true
    }

    /// Is the edge multiset spanning and 2-vertex-connected?
    ///
    /// A 2-vertex host with at least two parallel copies counts as
    /// 2-vertex-connected.
    pub fn is_2vc(&self, mults: &[u32]) -> bool {
        if self.n <= 1 {
            return true;
        }
        if !self.is_connected_with(mults) {
            return false;
        }
        if self.n == 2 {
            let total: u32 = mults.iter().sum();
            return total >= 2;
        }
        for cut in 0..self.n {
            let mut adj = vec![Vec::new(); self.n];
            for (i, e) in self.edges.iter().enumerate() {
                if mults[i] > 0 && e.u != cut && e.v != cut {
                    adj[e.u].push(e.v);
                    adj[e.v].push(e.u);
                }
            }
            let start = (0..self.n).find(|&v| v != cut).unwrap();
            let mut seen = vec![false; self.n];
            seen[cut] = true;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut count = 1;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push_back(w);
                    }
                }
            }
            if count != self.n - 1 {
                return false;
            }
        }
        true
    }

    /// Max-flow between `s` and `t` with per-edge capacities `caps`.
    /// Returns the flow value and the residual-reachable side of `s`.
    pub fn max_flow(&self, s: usize, t: usize, caps: &[Rat]) -> (Rat, Vec<bool>) {
        // arcs 2i and 2i+1 are the two directions of edge i
        let mut cap: Vec<Rat> = Vec::with_capacity(2 * self.m());
        for c in caps {
            cap.push(c.clone());
            cap.push(c.clone());
        }
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push(2 * i);
            adj[e.v].push(2 * i + 1);
        }
        let head = |a: usize| {
            let e = &self.edges[a / 2];
            if a % 2 == 0 {
                e.v
            } else {
                e.u
            }
        };
        let mut value = zero();
        loop {
            let mut pred: Vec<Option<usize>> = vec![None; self.n];
            let mut seen = vec![false; self.n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &a in &adj[v] {
                    let w = head(a);
                    if !seen[w] && cap[a] > zero() {
                        seen[w] = true;
                        pred[w] = Some(a);
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                return (value, seen);
            }
            let mut path = Vec::new();
            let mut v = t;
            while v != s {
                let a = pred[v].unwrap();
                path.push(a);
                v = if a % 2 == 0 { self.edges[a / 2].u } else { self.edges[a / 2].v };
            }
            let bottleneck = path.iter().map(|&a| cap[a].clone()).min().unwrap();
            for &a in &path {
                cap[a] = &cap[a] - &bottleneck;
                let rev = a ^ 1;
                cap[rev] = &cap[rev] + &bottleneck;
            }
            value = &value + &bottleneck;
        }
    }

    /// Global edge connectivity counting multiplicities.
    pub fn edge_connectivity(&self) -> u32 {
        if self.n <= 1 {
            return u32::MAX;
        }
        if !self.is_connected() {
            return 0;
        }
        let caps: Vec<Rat> = self
            .edges
            .iter()
            .map(|e| Rat::from_integer(e.mult.into()))
            .collect();
        let mut best: Option<Rat> = None;
        for t in 1..self.n {
            let (val, _) = self.max_flow(0, t, &caps);
            if best.as_ref().is_none_or(|b| val < *b) {
                best = Some(val);
            }
        }
        let b = best.unwrap();
        assert!(b.is_integer());
        u32::try_from(b.to_integer()).unwrap_or(u32::MAX)
    }

    /// Minimum weighted cut separating `s` from any other vertex, over all
    /// choices of the other vertex. Returns the value and the `s` side.
    pub fn global_min_cut(&self, weights: &[Rat]) -> (Rat, Vec<bool>) {
        assert!(self.n >= 2);
        let mut best: Option<(Rat, Vec<bool>)> = None;
        for t in 1..self.n {
            let (val, side) = self.max_flow(0, t, weights);
            if best.as_ref().is_none_or(|(b, _)| val < *b) {
                best = Some((val, side));
            }
        }
        best.unwrap()
    }

    /// Weight of the cut induced by `side`.
    pub fn cut_weight(&self, side: &[bool], weights: &[Rat]) -> Rat {
        let mut total = zero();
        for (i, e) in self.edges.iter().enumerate() {
            if side[e.u] != side[e.v] {
                total = &total + &weights[i];
            }
        }
        total
    }

    /// Edge indices crossing `side`.
    pub fn cut_edges(&self, side: &[bool]) -> Vec<usize> {
        (0..self.m())
            .filter(|&i| side[self.edges[i].u] != side[self.edges[i].v])
            .collect()
    }

    /// All proper cuts (both sides with >= 2 vertices) of size at most
    /// `budget`, counting multiplicities. Each cut is reported once, as the
    /// side containing vertex 0.
    pub fn proper_cuts_upto(&self, budget: u32) -> Vec<Vec<bool>> {
        assert!(self.n >= 4, "no proper cuts on fewer than 4 vertices");
        // BFS order keeps partial cuts tight, so pruning bites early.
        let order = self.bfs_order();
        let mut side = vec![false; self.n];
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        self.cut_search(&order, 0, 0, budget, &mut side, &mut assigned, &mut out);
        out
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for e in &self.edges {
                    let w = if e.u == v {
                        e.v
                    } else if e.v == v {
                        e.u
                    } else {
                        continue;
                    };
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }

    #[allow(clippy::too_many_arguments)]
    fn cut_search(
        &self,
        order: &[usize],
        pos: usize,
        crossing: u32,
        budget: u32,
        side: &mut Vec<bool>,
        assigned: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if pos == order.len() {
            let a = side.iter().filter(|&&b| b).count();
            if a >= 2 && self.n - a >= 2 && crossing <= budget {
                out.push(side.clone());
            }
            return;
        }
        let v = order[pos];
        // vertex 0 is pinned to the true side to break the symmetry
        let choices: &[bool] = if v == 0 { &[true] } else { &[true, false] };
        for &b in choices {
            side[v] = b;
            assigned[v] = true;
            let mut cross = crossing;
            for e in &self.edges {
                let w = if e.u == v {
                    e.v
                } else if e.v == v {
                    e.u
                } else {
                    continue;
                };
                if assigned[w] && side[w] != b {
                    cross += e.mult;
                }
            }
            if cross <= budget {
                self.cut_search(order, pos + 1, cross, budget, side, assigned, out);
            }
            assigned[v] = false;
        }
    }

    /// Proper 3-edge cuts of a 3-edge-connected graph.
    pub fn proper_3cuts(&self) -> Vec<Vec<bool>> {
        if self.n < 4 {
            return Vec::new();
        }
        self.proper_cuts_upto(3)
            .into_iter()
            .filter(|s| {
                let w = self.cut_weight(
                    s,
                    &self
                        .edges
                        .iter()
                        .map(|e| Rat::from_integer(e.mult.into()))
                        .collect::<Vec<_>>(),
                );
                w == Rat::from_integer(3.into())
            })
            .collect()
    }

    /// Cubic, 3-edge-connected, and every 3-edge cut is the star of a vertex.
    pub fn is_essentially_4ec(&self) -> bool {
        self.is_cubic() && self.edge_connectivity() >= 3 && self.proper_3cuts().is_empty()
    }

    /// Contracts the complement of `keep` into a single vertex. Vertices with
    /// `keep[v]` retain their relative order and the new vertex comes last.
    /// Edges inside the complement are dropped; labels are preserved.
    pub fn contract_complement(&self, keep: &[bool]) -> Contraction {
        let inside: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        assert!(!inside.is_empty() && inside.len() < self.n);
        let mut vertex_map = vec![inside.len(); self.n];
        for (new, &old) in inside.iter().enumerate() {
            vertex_map[old] = new;
        }
        let mut graph = Multigraph::new(inside.len() + 1);
        let mut edge_map = vec![None; self.m()];
        for (i, e) in self.edges.iter().enumerate() {
            let (u, v) = (vertex_map[e.u], vertex_map[e.v]);
            if u == v {
                continue;
            }
            edge_map[i] = Some(graph.add_labeled_edge(u, v, e.label.clone()));
        }
        Contraction { graph, vertex_map, edge_map }
    }

    /// Contracts each group of the partition `groups` into one vertex. The
    /// new vertex for `groups[i]` is `i`. Intra-group edges are dropped.
    pub fn contract_groups(&self, groups: &[Vec<usize>]) -> Contraction {
        let mut vertex_map = vec![usize::MAX; self.n];
        for (gi, group) in groups.iter().enumerate() {
            for &v in group {
                assert_eq!(vertex_map[v], usize::MAX, "groups overlap");
                vertex_map[v] = gi;
            }
        }
        assert!(vertex_map.iter().all(|&g| g != usize::MAX), "groups must cover V");
        let mut graph = Multigraph::new(groups.len());
        let mut edge_map = vec![None; self.m()];
        for (i, e) in self.edges.iter().enumerate() {
            let (u, v) = (vertex_map[e.u], vertex_map[e.v]);
            if u == v {
                continue;
            }
            edge_map[i] = Some(graph.add_labeled_edge(u, v, e.label.clone()));
        }
        Contraction { graph, vertex_map, edge_map }
    }

    /// Checks `x` against LP(G): 0 <= x_e <= 2 and x(delta(S)) >= 2 for every
    /// proper cut. Returns the violated cut on failure.
    pub fn check_in_lp(&self, x: &[Rat]) -> Result<()> {
        if x.len() != self.m() {
            return Err(Error::InvalidInput(format!(
                "x has {} entries, graph has {} edges",
                x.len(),
                self.m()
            )));
        }
        let two = Rat::from_integer(2.into());
        for (i, v) in x.iter().enumerate() {
            if *v < zero() || *v > two {
                return Err(Error::NotInLp(format!(
                    "x[{}] = {} outside [0, 2]",
                    self.edges[i].label,
                    crate::ratio::rat_to_string(v)
                )));
            }
        }
        let (val, side) = self.global_min_cut(x);
        if val < two {
            let cut: Vec<&str> = self
                .cut_edges(&side)
                .into_iter()
                .map(|i| self.edges[i].label.as_str())
                .collect();
            return Err(Error::NotInLp(format!(
                "cut {{{}}} has x-weight {} < 2",
                cut.join(", "),
                crate::ratio::rat_to_string(&val)
            )));
        }
        Ok(())
    }
}

/// Sum of `x_e` over edges incident to `v`.
pub fn vertex_x_degree(g: &Multigraph, x: &[Rat], v: usize) -> Rat {
    let mut total = zero();
    for (i, e) in g.edges.iter().enumerate() {
        if e.u == v || e.v == v {
            total = &total + &x[i];
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::ratio::rat;

    #[test]
    fn k4_basics() {
        let g = gen::k4();
        assert_eq!(g.n, 4);
        assert_eq!(g.m(), 6);
        assert!(g.is_cubic());
        assert!(g.is_connected());
        assert_eq!(g.edge_connectivity(), 3);
        assert!(g.is_essentially_4ec());
    }

    #[test]
    fn prism_has_proper_3cuts() {
        let g = gen::prism();
        assert_eq!(g.edge_connectivity(), 3);
        let cuts = g.proper_3cuts();
        // the two triangles of the prism are separated by a proper 3-cut
        assert_eq!(cuts.len(), 1);
        let side = &cuts[0];
        assert_eq!(side.iter().filter(|&&b| b).count(), 3);
        assert!(!g.is_essentially_4ec());
    }

    #[test]
    fn petersen_essentially_4ec() {
        let g = gen::petersen();
        assert_eq!(g.n, 10);
        assert!(g.is_cubic());
        assert!(g.is_essentially_4ec());
    }

    #[test]
    fn member_predicates() {
        let g = gen::k4();
        // the 4-cycle 0-1-2-3 inside K4
        let mut cyc = vec![0u32; 6];
        for (i, e) in g.edges.iter().enumerate() {
            let (a, b) = (e.u.min(e.v), e.u.max(e.v));
            if matches!((a, b), (0, 1) | (1, 2) | (2, 3) | (0, 3)) {
                cyc[i] = 1;
            }
        }
        assert!(g.is_2ec(&cyc));
        assert!(g.is_2vc(&cyc));
        // drop one cycle edge: spanning tree, not 2EC
        let mut tree = cyc.clone();
        let drop = tree.iter().position(|&m| m == 1).unwrap();
        tree[drop] = 0;
        assert!(!g.is_2ec(&tree));
        // doubling the remaining path restores 2EC
        let doubled: Vec<u32> = tree.iter().map(|&m| m * 2).collect();
        assert!(g.is_2ec(&doubled));
        assert!(!g.is_2vc(&doubled));
    }

    #[test]
    fn two_vertex_2vc_convention() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 1);
        g.add_edge(0, 1);
        assert!(g.is_2vc(&[1, 1]));
        assert!(g.is_2ec(&[1, 1]));
        assert!(!g.is_2vc(&[1, 0]));
    }

    #[test]
    fn contraction_keeps_labels() {
        let g = gen::prism();
        let cut = &g.proper_3cuts()[0];
        let c = g.contract_complement(cut);
        assert_eq!(c.graph.n, 4);
        assert!(c.graph.is_cubic());
        for (i, m) in c.edge_map.iter().enumerate() {
            if let Some(j) = m {
                assert_eq!(g.edges[i].label, c.graph.edges[*j].label);
            }
        }
    }

    #[test]
    fn lp_membership() {
        let g = gen::k4();
        let x = vec![rat(2, 3); 6];
        assert!(g.check_in_lp(&x).is_ok());
        let bad = vec![rat(1, 2); 6];
        assert!(matches!(g.check_in_lp(&bad), Err(Error::NotInLp(_))));
    }

    #[test]
    fn max_flow_on_cycle() {
        let g = gen::cycle(5);
        let caps = vec![rat(1, 2); 5];
        let (v, _) = g.max_flow(0, 2, &caps);
        assert_eq!(v, rat(1, 1));
    }
}
