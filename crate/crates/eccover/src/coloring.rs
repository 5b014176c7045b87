//! Top-down coloring algorithms for tree augmentation.
//!
//! A coloring with factor p/q gives every link p of q colors, processing
//! links in descending LCA order. Admissibility (every tree edge sees all q
//! colors once its covering links are colored) makes each color class a
//! feasible augmentation, so `T + L_c` is 2-edge-connected for every c.

use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::ratio::rat;
use crate::tree::{RootedTree, Subdivision};

#[derive(Debug, Clone)]
pub struct LinkColoring {
    pub q: u8,
    pub p: u8,
    /// color bitmask per host edge; tree edges carry 0
    pub colors: Vec<u16>,
    /// links in the order they were colored
    pub order: Vec<usize>,
}

/// Links sorted by descending LCA (ascending LCA depth), ties by index.
pub fn lca_order(g: &Multigraph, t: &RootedTree) -> Vec<usize> {
    let mut links = t.links();
    links.sort_by_key(|&l| {
        let (u, v) = g.endpoints(l);
        t.depth[t.lca(u, v)]
    });
    links
}

struct ColorState<'a> {
    g: &'a Multigraph,
    t: &'a RootedTree,
    q: u8,
    /// received colors per tree edge
    received: Vec<u16>,
    /// links covering each tree edge
    cov: Vec<Vec<usize>>,
    colored: Vec<bool>,
    colors: Vec<u16>,
}

impl<'a> ColorState<'a> {
    fn new(g: &'a Multigraph, t: &'a RootedTree, q: u8) -> Self {
        let mut cov = vec![Vec::new(); g.m()];
        for l in t.links() {
            for e in t.cov(g, l) {
                cov[e].push(l);
            }
        }
        ColorState {
            g,
            t,
            q,
            received: vec![0; g.m()],
            cov,
            colored: vec![false; g.m()],
            colors: vec![0; g.m()],
        }
    }

    fn full(&self) -> u16 {
        (1u16 << self.q) - 1
    }

    fn missing(&self, e: usize) -> u16 {
        self.full() & !self.received[e]
    }

    /// is `l` the only uncolored link covering `e`?
    fn last_cover(&self, e: usize, l: usize) -> bool {
        self.cov[e]
            .iter()
            .all(|&other| other == l || self.colored[other])
    }

    fn apply(&mut self, l: usize, mask: u16) {
        self.colors[l] = mask;
        self.colored[l] = true;
        for e in self.t.cov(self.g, l) {
            self.received[e] |= mask;
        }
    }

    /// path from the LCA towards `to`, ordered highest (nearest LCA) first
    fn side_path(&self, lca: usize, to: usize) -> Vec<usize> {
        let mut edges = Vec::new();
        let mut v = to;
        while v != lca {
            let (p, e) = self.t.parent[v].expect("lca is an ancestor");
            edges.push(e);
            v = p;
        }
        edges.reverse();
        edges
    }
}

fn lowest_color(mask: u16) -> Option<u16> {
    if mask == 0 {
        None
    } else {
        Some(1 << mask.trailing_zeros())
    }
}

/// The factor-3/5 coloring for spanning trees without leaf-matching links.
pub fn color_3_5(g: &Multigraph, t: &RootedTree) -> Result<LinkColoring> {
    for l in t.links() {
        let (u, v) = g.endpoints(l);
        if u != t.root && v != t.root && t.is_leaf(g, u) && t.is_leaf(g, v) {
            return Err(Error::ColoringInfeasible(format!(
                "leaf-matching link {} is present",
                g.edges[l].label
            )));
        }
    }
    let mut st = ColorState::new(g, t, 5);
    let order = lca_order(g, t);
    for &l in &order {
        let (mut u, mut v) = g.endpoints(l);
        // the side contributing one color must not end at a leaf
        if st.t.tree_degree(g, u) < st.t.tree_degree(g, v) {
            std::mem::swap(&mut u, &mut v);
        }
        let s = st.t.lca(u, v);
        let mut lu = st.side_path(s, u);
        let mut rv = st.side_path(s, v);
        if lu.is_empty() {
            lu = rv.clone();
        }
        if rv.is_empty() {
            rv = lu.clone();
        }
        let mut mask = 0u16;
        // one color missed by the highest missing edge towards u, then two
        // (distinct) colors missed by the highest such edges towards v
        for (path, want) in [(&lu, 1), (&rv, 2)] {
            for _ in 0..want {
                let pick = path
                    .iter()
                    .find_map(|&e| lowest_color(st.missing(e) & !mask));
                if let Some(c) = pick {
                    mask |= c;
                }
            }
        }
        while mask.count_ones() < 3 {
            mask |= lowest_color(st.full() & !mask).unwrap();
        }
        st.apply(l, mask);
    }
    let coloring = LinkColoring { q: 5, p: 3, colors: st.colors, order };
    verify_admissible(g, t, &coloring)?;
    Ok(coloring)
}

/// All 5-subsets of 8 colors, as bitmasks in ascending order.
fn five_of_eight() -> Vec<u16> {
    (0u16..256).filter(|m| m.count_ones() == 5).collect()
}

/// Chooses five colors meeting the claim's constraints: contains `a` and
/// `b`, at least two from each of `A` and `B`, and at least three from
/// `C5`. A satisfying subset always exists for |A| = |B| = 3 and |C5| = 5.
pub fn select_five_colors(a: u16, b: u16, aa: u16, bb: u16, c5: u16) -> u16 {
    debug_assert!(a & aa != 0 && b & bb != 0);
    debug_assert_eq!(aa.count_ones(), 3);
    debug_assert_eq!(bb.count_ones(), 3);
    debug_assert_eq!(c5.count_ones(), 5);
    (0u16..256)
        .filter(|m| m.count_ones() == 5)
        .find(|&s| {
            s & a != 0
                && s & b != 0
                && (s & aa).count_ones() >= 2
                && (s & bb).count_ones() >= 2
                && (s & c5).count_ones() >= 3
        })
        .expect("a feasible 5-subset exists")
}

/// The factor-5/8 coloring for spanning trees whose leaf-matching links are
/// vertex-disjoint. Implemented as a constraint search: each link takes the
/// lexicographically first 5-subset that keeps the coloring admissible and
/// preserves the published invariants.
pub fn color_5_8(g: &Multigraph, t: &RootedTree) -> Result<LinkColoring> {
    // leaf-matching links must form a matching
    let links = t.links();
    let mut lm_partner: Vec<Option<usize>> = vec![None; g.n];
    for &l in &links {
        let (u, v) = g.endpoints(l);
        if u != t.root && v != t.root && t.is_leaf(g, u) && t.is_leaf(g, v) {
            for end in [u, v] {
                if lm_partner[end].is_some() {
                    return Err(Error::ColoringInfeasible(format!(
                        "leaf-matching links are not vertex-disjoint at vertex {end}"
                    )));
                }
            }
            lm_partner[u] = Some(v);
            lm_partner[v] = Some(u);
        }
    }
    let mut st = ColorState::new(g, t, 8);
    let order = lca_order(g, t);
    let subsets = five_of_eight();
    for &l in &order {
        let (u, v) = g.endpoints(l);
        // constraints: (mask, minimum overlap)
        let mut constraints: Vec<(u16, u32)> = Vec::new();
        for e in st.t.cov(g, l) {
            let miss = st.missing(e);
            let k = miss.count_ones();
            if k == 0 {
                continue;
            }
            if st.last_cover(e, l) {
                constraints.push((miss, k));
            } else {
                match k {
                    8 => {}
                    3 => constraints.push((miss, 2)),
                    1 => constraints.push((miss, 1)),
                    _ => {
                        return Err(Error::ColoringInfeasible(format!(
                            "edge {} misses {} colors; invariant broken",
                            g.edges[e].label, k
                        )))
                    }
                }
            }
        }
        // a leaf endpoint whose leaf-mate's other link is colored must share
        // three colors with it, so the mates keep a common missing color
        for end in [u, v] {
            let Some(mate) = lm_partner[end] else { continue };
            if mate == u || mate == v {
                continue; // `l` is the leaf-matching link itself
            }
            for &lw in &links {
                if st.colored[lw] && g.is_incident(lw, mate) && lm_partner[mate] != {
                    let (a, b) = g.endpoints(lw);
                    Some(if a == mate { b } else { a })
                } {
                    constraints.push((st.colors[lw], 3));
                }
            }
        }
        let choice = subsets.iter().copied().find(|&s| {
            constraints
                .iter()
                .all(|&(mask, min)| (s & mask).count_ones() >= min)
        });
        let Some(mask) = choice else {
            return Err(Error::ColoringInfeasible(format!(
                "no 5-subset satisfies the constraints of link {}",
                g.edges[l].label
            )));
        };
        st.apply(l, mask);
    }
    let coloring = LinkColoring { q: 8, p: 5, colors: st.colors, order };
    verify_admissible(g, t, &coloring)?;
    Ok(coloring)
}

/// The factor-4/5 coloring on a subdivided tree that additionally covers
/// vertices: degree-2 tree vertices of the original graph see all five
/// colors, degree-1 vertices see all five twice.
pub fn color_4_5_vertex(sub: &Subdivision) -> Result<LinkColoring> {
    let g = &sub.graph;
    let t = &sub.tree;
    let orig_n = sub
        .orig_vertex
        .iter()
        .filter(|v| v.is_some())
        .count();
    // per original vertex: how often each color has been received
    let mut seen = vec![[0u32; 5]; orig_n];
    let mut st = ColorState::new(g, t, 5);
    let order = lca_order(g, t);
    for &l in &order {
        let (up, vp) = g.endpoints(l);
        let (u, v) = sub.link_ends[l].ok_or_else(|| {
            Error::ColoringInfeasible("link without original endpoints".into())
        })?;
        let s = t.lca(up, vp);
        let mut mask = 0u16;
        let give = |m: Option<u16>, mask: &mut u16| {
            if let Some(c) = m {
                *mask |= c;
            }
        };
        // rules 1 and 2: a color the endpoint has not received, else one it
        // is missing for the second time
        for &end in &[u, v] {
            let fresh = (0..5).find(|&c| seen[end][c] == 0 && mask & (1 << c) == 0);
            let second = (0..5).find(|&c| seen[end][c] == 1 && mask & (1 << c) == 0);
            give(fresh.or(second).map(|c| 1 << c), &mut mask);
        }
        // rules 3 and 4: highest missing edge on each side, else a color
        // the endpoint misses for the second time
        for (&end, top) in [(&u, up), (&v, vp)] {
            let path = st.side_path(s, top);
            let from_edge = path
                .iter()
                .find_map(|&e| lowest_color(st.missing(e) & !mask));
            let second = (0..5).find(|&c| seen[end][c] == 1 && mask & (1 << c) == 0);
            give(from_edge.or(second.map(|c| 1u16 << c)), &mut mask);
        }
        // rule 5: fill to four colors
        while mask.count_ones() < 4 {
            mask |= lowest_color(st.full() & !mask).unwrap();
        }
        st.apply(l, mask);
        for &end in &[u, v] {
            for c in 0..5 {
                if mask & (1 << c) != 0 {
                    seen[end][c] += 1;
                }
            }
        }
    }
    let coloring = LinkColoring { q: 5, p: 4, colors: st.colors, order };
    verify_admissible(g, t, &coloring)?;
    // vertex conditions
    for v in 0..orig_n {
        let deg = t_degree_original(sub, v);
        let need = match deg {
            1 => 2,
            2 => 1,
            _ => 0,
        };
        for c in 0..5 {
            if seen[v][c] < need {
                return Err(Error::ColoringInfeasible(format!(
                    "vertex {v} of tree degree {deg} received color {c} only {} times",
                    seen[v][c]
                )));
            }
        }
    }
    Ok(coloring)
}

/// Degree of original vertex `v` in the original tree (half the subdivided
/// tree degree of its image).
fn t_degree_original(sub: &Subdivision, v: usize) -> usize {
    sub.tree.tree_degree(&sub.graph, v)
}

/// Replays a coloring and checks top-down order, the factor, and
/// admissibility.
pub fn verify_admissible(g: &Multigraph, t: &RootedTree, col: &LinkColoring) -> Result<()> {
    let links = t.links();
    if col.order.len() != links.len() {
        return Err(Error::VerificationFailed("order does not list every link".into()));
    }
    let mut last_depth = 0usize;
    for &l in &col.order {
        if t.in_tree[l] {
            return Err(Error::VerificationFailed(format!(
                "tree edge {} was colored",
                g.edges[l].label
            )));
        }
        let (u, v) = g.endpoints(l);
        let d = t.depth[t.lca(u, v)];
        if d < last_depth {
            return Err(Error::VerificationFailed(
                "links are not in descending LCA order".into(),
            ));
        }
        last_depth = d;
        if col.colors[l].count_ones() != u32::from(col.p)
            || col.colors[l] >> col.q != 0
        {
            return Err(Error::VerificationFailed(format!(
                "link {} does not carry exactly {} of {} colors",
                g.edges[l].label, col.p, col.q
            )));
        }
    }
    let full = (1u16 << col.q) - 1;
    for e in t.tree_edges() {
        let mut received = 0u16;
        for &l in &links {
            if t.cov(g, l).contains(&e) {
                received |= col.colors[l];
            }
        }
        if received != full {
            return Err(Error::VerificationFailed(format!(
                "tree edge {} missing colors {:#b}",
                g.edges[e].label,
                full & !received
            )));
        }
    }
    Ok(())
}

/// Turns the color classes into a convex combination: member c is the tree
/// plus all links carrying color c, with weight 1/q.
pub fn classes_to_combination(
    g: &Multigraph,
    t: &RootedTree,
    col: &LinkColoring,
) -> ConvexCombination {
    let mut comb = ConvexCombination::new(g.m());
    for c in 0..col.q {
        let mut mults = vec![0u32; g.m()];
        for e in 0..g.m() {
            if t.in_tree[e] || col.colors[e] & (1 << c) != 0 {
                mults[e] = 1;
            }
        }
        comb.push(rat(1, i64::from(col.q)), mults);
    }
    comb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_cover::cycle_cover_decomposition;
    use crate::pairing::{pair_half_edges, PairingConstraints};
    use crate::rainbow::{one_trees_to_spanning_trees, rainbow_one_trees, RemovalPolicy};
    use crate::tree::subdivide;
    use crate::treepack::two_disjoint_spanning_trees;

    fn pipeline_trees(g: &Multigraph, r: usize) -> Vec<RootedTree> {
        let mut out = Vec::new();
        for cov in &cycle_cover_decomposition(g).unwrap().terms {
            let cons = PairingConstraints { rainbow: vec![r], not_rainbow: vec![] };
            let pairing = pair_half_edges(g, &cov.mults, &cons).unwrap();
            let ones = rainbow_one_trees(g, &cov.mults, &pairing, r).unwrap();
            let trees = one_trees_to_spanning_trees(
                g,
                &ones,
                &cov.mults,
                RemovalPolicy::CoverEdgeAtRoot { r },
            )
            .unwrap();
            for t in &trees.terms {
                let edges: Vec<usize> = (0..g.m()).filter(|&e| t.mults[e] == 1).collect();
                out.push(RootedTree::from_edge_set(g, &edges, r).unwrap());
            }
        }
        out
    }

    fn check_classes(g: &Multigraph, t: &RootedTree, col: &LinkColoring) {
        let comb = classes_to_combination(g, t, col);
        comb.check_weights().unwrap();
        for term in &comb.terms {
            assert!(g.is_2ec(&term.mults), "augmented class not 2EC");
        }
        // links appear in exactly p of q classes
        let agg = comb.aggregate();
        for e in 0..g.m() {
            let expect = if t.in_tree[e] {
                rat(1, 1)
            } else {
                rat(i64::from(col.p), i64::from(col.q))
            };
            assert_eq!(agg[e], expect);
        }
    }

    #[test]
    fn three_fifths_on_k33_trees() {
        let g = crate::gen::k33();
        for t in pipeline_trees(&g, 0) {
            let col = color_3_5(&g, &t).unwrap();
            check_classes(&g, &t, &col);
        }
    }

    #[test]
    fn five_eighths_on_petersen_trees() {
        let g = crate::gen::petersen();
        for t in pipeline_trees(&g, 0) {
            let col = color_5_8(&g, &t).unwrap();
            check_classes(&g, &t, &col);
        }
    }

    #[test]
    fn five_eighths_on_k33_and_k4() {
        for g in [crate::gen::k33(), crate::gen::k4()] {
            for t in pipeline_trees(&g, 0) {
                let col = color_5_8(&g, &t).unwrap();
                check_classes(&g, &t, &col);
            }
        }
    }

    #[test]
    fn select_five_colors_exhaustive() {
        let threes: Vec<u16> = (0u16..256).filter(|m| m.count_ones() == 3).collect();
        let fives = five_of_eight();
        for &aa in &threes {
            for &bb in &threes {
                for &c5 in &fives {
                    // a and b range over the members of A and B
                    for ai in 0..8 {
                        let a = 1u16 << ai;
                        if a & aa == 0 {
                            continue;
                        }
                        for bi in 0..8 {
                            let b = 1u16 << bi;
                            if b & bb == 0 {
                                continue;
                            }
                            let s = select_five_colors(a, b, aa, bb, c5);
                            assert_eq!(s.count_ones(), 5, "not five colors");
                            assert!(s & a != 0 && s & b != 0);
                            assert!((s & aa).count_ones() >= 2);
                            assert!((s & bb).count_ones() >= 2);
                            assert!((s & c5).count_ones() >= 3);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn vertex_coloring_on_octahedron() {
        let g = crate::gen::octahedron();
        let (t1, t2) = two_disjoint_spanning_trees(&g).unwrap();
        for edges in [t1, t2] {
            let t = RootedTree::from_edge_set(&g, &edges, 0).unwrap();
            let sub = subdivide(&g, &t);
            let col = color_4_5_vertex(&sub).unwrap();
            // every class must give a 2EC augmentation of the subdivided tree
            let comb = classes_to_combination(&sub.graph, &sub.tree, &col);
            for term in &comb.terms {
                assert!(sub.graph.is_2ec(&term.mults));
            }
        }
    }

    #[test]
    fn leaf_matching_links_rejected_by_3_5() {
        // a path tree in K4 has a leaf-matching link
        let g = crate::gen::k4();
        // path 0-1, 1-2, 2-3: edge indices 0 (01), 3 (12), 5 (23)
        let t = RootedTree::from_edge_set(&g, &[0, 3, 5], 1).unwrap();
        // link 03 joins two leaves (0 is not the root here; root is 1)
        assert!(color_3_5(&g, &t).is_err());
    }
}
