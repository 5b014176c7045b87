//! Rooted spanning trees, tree paths, and the subdivision used by the
//! vertex-connectivity coloring.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    /// host edge -> is a tree edge
    pub in_tree: Vec<bool>,
    /// per vertex: (parent vertex, host edge to parent); `None` at the root
    pub parent: Vec<Option<(usize, usize)>>,
    pub depth: Vec<usize>,
}

impl RootedTree {
    /// Builds a rooted tree from a spanning-tree edge set.
    pub fn from_edge_set(g: &Multigraph, edges: &[usize], root: usize) -> Result<Self> {
        let mut in_tree = vec![false; g.m()];
        for &e in edges {
            if in_tree[e] {
                return Err(Error::InvalidInput(format!("repeated tree edge {e}")));
            }
            in_tree[e] = true;
        }
        if edges.len() != g.n.saturating_sub(1) {
            return Err(Error::InvalidInput(format!(
                "{} edges cannot form a spanning tree on {} vertices",
                edges.len(),
                g.n
            )));
        }
        let mut parent = vec![None; g.n];
        let mut depth = vec![usize::MAX; g.n];
        depth[root] = 0;
        let mut stack = vec![root];
        let mut seen = 1;
        while let Some(v) = stack.pop() {
            for &e in edges {
                if !g.is_incident(e, v) {
                    continue;
                }
                let w = g.other_end(e, v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, e));
                    seen += 1;
                    stack.push(w);
                }
            }
        }
        if seen != g.n {
            return Err(Error::InvalidInput("edge set is not spanning".into()));
        }
        Ok(RootedTree { root, in_tree, parent, depth })
    }

    pub fn contains(&self, e: usize) -> bool {
        self.in_tree[e]
    }

    pub fn tree_edges(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| self.in_tree[e]).collect()
    }

    pub fn links(&self) -> Vec<usize> {
        (0..self.in_tree.len()).filter(|&e| !self.in_tree[e]).collect()
    }

    pub fn lca(&self, mut u: usize, mut v: usize) -> usize {
        while u != v {
            if self.depth[u] >= self.depth[v] {
                u = self.parent[u].expect("below the root").0;
            } else {
                v = self.parent[v].expect("below the root").0;
            }
        }
        u
    }

    /// Tree edges on the path between `u` and `v`.
    pub fn path_edges(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        while u != v {
            if self.depth[u] >= self.depth[v] {
                let (p, e) = self.parent[u].expect("below the root");
                left.push(e);
                u = p;
            } else {
                let (p, e) = self.parent[v].expect("below the root");
                right.push(e);
                v = p;
            }
        }
        right.reverse();
        left.extend(right);
        left
    }

    /// Path of tree edges covered by a link.
    pub fn cov(&self, g: &Multigraph, link: usize) -> Vec<usize> {
        let (u, v) = g.endpoints(link);
        self.path_edges(u, v)
    }

    pub fn tree_degree(&self, g: &Multigraph, v: usize) -> usize {
        (0..g.m())
            .filter(|&e| self.in_tree[e] && g.is_incident(e, v))
            .count()
    }

    pub fn is_leaf(&self, g: &Multigraph, v: usize) -> bool {
        self.tree_degree(g, v) == 1
    }
}

/// The subdivided graph of `(G, T)`: every tree edge is split at a new
/// vertex, and each link is re-attached per the standard rules (internal
/// endpoints move to the subdivision vertex of the first path edge).
pub struct Subdivision {
    pub graph: Multigraph,
    pub tree: RootedTree,
    /// old link edge index -> new link edge index
    pub link_map: Vec<(usize, usize)>,
    /// old tree edge index -> its subdivision vertex
    pub mid_vertex: Vec<Option<usize>>,
    /// new vertex -> old vertex (subdivision vertices map to `None`)
    pub orig_vertex: Vec<Option<usize>>,
    /// per new link edge: original endpoints {u, v} of the link in G
    pub link_ends: Vec<Option<(usize, usize)>>,
}

pub fn subdivide(g: &Multigraph, t: &RootedTree) -> Subdivision {
    let tree_edges = t.tree_edges();
    let mut mid_vertex = vec![None; g.m()];
    let mut graph = Multigraph::new(g.n + tree_edges.len());
    let mut orig_vertex: Vec<Option<usize>> = (0..g.n).map(Some).collect();
    for (k, &e) in tree_edges.iter().enumerate() {
        mid_vertex[e] = Some(g.n + k);
        orig_vertex.push(None);
    }
    let mut new_tree_edges = Vec::new();
    for &e in &tree_edges {
        let (u, w) = g.endpoints(e);
        let mid = mid_vertex[e].unwrap();
        let lab = &g.edges[e].label;
        new_tree_edges.push(graph.add_labeled_edge(u, mid, format!("{lab}.a")));
        new_tree_edges.push(graph.add_labeled_edge(mid, w, format!("{lab}.b")));
    }
    let mut link_map = Vec::new();
    let mut link_ends = vec![None; graph.m()];
    for link in t.links() {
        let (u, v) = g.endpoints(link);
        let path = t.cov(g, link);
        let attach = |orig: usize| -> usize {
            if orig == t.root || t.is_leaf(g, orig) {
                orig
            } else {
                let e = *path
                    .iter()
                    .find(|&&e| g.is_incident(e, orig))
                    .expect("path touches its endpoint");
                mid_vertex[e].unwrap()
            }
        };
        let (mut nu, mut nv) = (attach(u), attach(v));
        if nu == nv {
            // a link parallel to a single tree edge with both ends
            // internal; keep the deeper end in place so the link covers
            // the child half instead of degenerating into a loop
            if t.depth[u] > t.depth[v] {
                nu = u;
            } else {
                nv = v;
            }
        }
        let idx = graph.add_labeled_edge(nu, nv, g.edges[link].label.clone());
        link_map.push((link, idx));
        link_ends.push(Some((u, v)));
    }
    let tree = RootedTree::from_edge_set(&graph, &new_tree_edges, t.root)
        .expect("subdivided tree is spanning");
    Subdivision { graph, tree, link_map, mid_vertex, orig_vertex, link_ends }
}
