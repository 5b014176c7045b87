//! Two edge-disjoint spanning trees.
//!
//! 4-edge-connected graphs always have them (Nash-Williams/Tutte). The
//! contracted graphs here are tiny, so a pruned enumeration of spanning
//! trees with connected complement beats a full matroid union.

use crate::error::{Error, Result};
use crate::graph::Multigraph;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }
    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Finds two edge-disjoint spanning trees, as edge index lists.
pub fn two_disjoint_spanning_trees(g: &Multigraph) -> Result<(Vec<usize>, Vec<usize>)> {
    if g.n == 1 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut chosen = Vec::new();
    if search(g, 0, &mut Dsu::new(g.n), 0, &mut chosen) {
        let t1 = chosen.clone();
        let mut in_t1 = vec![false; g.m()];
        for &e in &t1 {
            in_t1[e] = true;
        }
        // any spanning tree of the complement will do; take the greedy one
        let mut dsu = Dsu::new(g.n);
        let mut t2 = Vec::new();
        for e in 0..g.m() {
            if !in_t1[e] {
                let (u, v) = g.endpoints(e);
                if dsu.union(u, v) {
                    t2.push(e);
                }
            }
        }
        assert_eq!(t2.len(), g.n - 1);
        return Ok((t1, t2));
    }
    Err(Error::DecompositionFailed(
        "no two edge-disjoint spanning trees".into(),
    ))
}

/// Extends a partial forest (edges chosen from a prefix) to a spanning tree
/// whose complement is connected.
fn search(g: &Multigraph, from: usize, dsu: &mut Dsu, size: usize, chosen: &mut Vec<usize>) -> bool {
    if size == g.n - 1 {
        let mults: Vec<u32> = (0..g.m())
            .map(|e| if chosen.contains(&e) { 0 } else { 1 })
            .collect();
        return g.is_connected_with(&mults);
    }
    if from == g.m() || g.m() - from < g.n - 1 - size {
        return false;
    }
    let (u, v) = g.endpoints(from);
    let joins = {
        let (a, b) = (dsu.find(u), dsu.find(v));
        a != b
    };
    if joins {
        let saved = dsu.parent.clone();
        dsu.union(u, v);
        chosen.push(from);
        if search(g, from + 1, dsu, size + 1, chosen) {
            return true;
        }
        chosen.pop();
        dsu.parent = saved;
    }
    search(g, from + 1, dsu, size, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn check_pack(g: &Multigraph) {
        let (t1, t2) = two_disjoint_spanning_trees(g).unwrap();
        assert_eq!(t1.len(), g.n - 1);
        assert_eq!(t2.len(), g.n - 1);
        for e in &t1 {
            assert!(!t2.contains(e));
        }
        for edges in [&t1, &t2] {
            crate::tree::RootedTree::from_edge_set(g, edges, 0).unwrap();
        }
    }

    #[test]
    fn packs_4ec_graphs() {
        check_pack(&gen::k5());
        check_pack(&gen::octahedron());
        check_pack(&gen::doubled_cycle(2));
        check_pack(&gen::doubled_cycle(4));
    }

    #[test]
    fn fails_on_sparse_graphs() {
        assert!(two_disjoint_spanning_trees(&gen::cycle(4)).is_err());
        assert!(two_disjoint_spanning_trees(&gen::petersen()).is_err());
    }
}
