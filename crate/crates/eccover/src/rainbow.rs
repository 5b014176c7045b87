//! Rainbow 1-tree decompositions of half-integer degree-tight points.
//!
//! Members contain every 1-edge and exactly one edge from each pair of
//! half-edges, so there are at most 2^(#pairs) candidates; exact LP
//! feasibility picks convex weights that reproduce the point.

use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::lp;
use crate::pairing::Pairing;
use crate::ratio::{one, rat, zero, Rat};

/// Is `mults` a 1-tree with its cycle through `r`: spanning, n edges,
/// degree 2 at `r`, and a spanning tree of `G - r` once `r` is removed?
pub fn is_one_tree_at(g: &Multigraph, mults: &[u32], r: usize) -> bool {
    if mults.iter().any(|&k| k > 1) {
        return false;
    }
    let total: u32 = mults.iter().sum();
    if total as usize != g.n || !g.is_connected_with(mults) {
        return false;
    }
    let deg_r: u32 = (0..g.m())
        .filter(|&e| g.is_incident(e, r))
        .map(|e| mults[e])
        .sum();
    if deg_r != 2 {
        return false;
    }
    // dropping r must leave a spanning tree of G - r; edge and vertex counts
    // already match, so connectivity of the rest is enough
    let mut without = mults.to_vec();
    for e in 0..g.m() {
        if g.is_incident(e, r) {
            without[e] = 0;
        }
    }
    connected_ignoring(g, &without, r)
}

fn connected_ignoring(g: &Multigraph, mults: &[u32], skip: usize) -> bool {
    let start = (0..g.n).find(|&v| v != skip).unwrap();
    let mut seen = vec![false; g.n];
    seen[skip] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for e in 0..g.m() {
            if mults[e] == 0 || !g.is_incident(e, v) {
                continue;
            }
            let w = g.other_end(e, v);
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == g.n - 1
}

/// Decomposes `y` (1 off the cover, 1/2 on it) into 1-trees at `r` that
/// contain exactly one edge from each pair.
pub fn rainbow_one_trees(
    g: &Multigraph,
    cover: &[u32],
    pairing: &Pairing,
    r: usize,
) -> Result<ConvexCombination> {
    rainbow_one_trees_with(g, cover, pairing, r, &|_| true)
}

/// Like `rainbow_one_trees`, restricted to candidates accepted by `keep`.
/// The decomposition then only uses acceptable 1-trees, if possible.
pub fn rainbow_one_trees_with(
    g: &Multigraph,
    cover: &[u32],
    pairing: &Pairing,
    r: usize,
    keep: &dyn Fn(&[u32]) -> bool,
) -> Result<ConvexCombination> {
    let mut in_pair = vec![false; g.m()];
    for &(e, f) in &pairing.pairs {
        for idx in [e, f] {
            if cover[idx] == 0 || in_pair[idx] {
                return Err(Error::InvalidInput(
                    "pairing does not partition the half-edges".into(),
                ));
            }
            in_pair[idx] = true;
        }
    }
    for e in 0..g.m() {
        if cover[e] == 1 && !in_pair[e] {
            return Err(Error::InvalidInput(format!(
                "half-edge {} is unpaired",
                g.edges[e].label
            )));
        }
    }
    let p = pairing.pairs.len();
    let mut candidates = Vec::new();
    for choice in 0..(1u32 << p) {
        let mut mults: Vec<u32> = (0..g.m())
            .map(|e| if cover[e] == 0 { 1 } else { 0 })
            .collect();
        for (i, &(e, f)) in pairing.pairs.iter().enumerate() {
            let pick = if choice >> i & 1 == 0 { e } else { f };
            mults[pick] = 1;
        }
        if is_one_tree_at(g, &mults, r) && keep(&mults) {
            candidates.push(mults);
        }
    }
    if candidates.is_empty() {
        return Err(Error::DecompositionFailed("no valid 1-tree candidates".into()));
    }
    let y: Vec<Rat> = (0..g.m())
        .map(|e| if cover[e] == 0 { one() } else { rat(1, 2) })
        .collect();
    let mut cols = Vec::with_capacity(candidates.len());
    for c in &candidates {
        let mut col: Vec<Rat> = c.iter().map(|&k| Rat::from_integer(k.into())).collect();
        col.push(one());
        cols.push(col);
    }
    let mut rhs = y;
    rhs.push(one());
    let lambda = lp::solve_eq(&cols, &rhs).ok_or_else(|| {
        Error::DecompositionFailed("point is not in the rainbow 1-tree hull".into())
    })?;
    let mut comb = ConvexCombination::new(g.m());
    for (j, l) in lambda.into_iter().enumerate() {
        if l > zero() {
            comb.push(l, candidates[j].clone());
        }
    }
    comb.check_weights()?;
    Ok(comb)
}

/// How a 1-tree loses one cycle edge to become a spanning tree.
#[derive(Debug, Clone, Copy)]
pub enum RemovalPolicy {
    /// remove the unique cover edge at the root (the root becomes a leaf)
    CoverEdgeAtRoot { r: usize },
    /// remove `e_star` when present, otherwise remove `e_prime`
    PreferEstar { e_star: usize, e_prime: usize },
}

/// The cycle edge a 1-tree loses under the policy.
pub fn removal_edge(
    g: &Multigraph,
    mults: &[u32],
    cover: &[u32],
    policy: RemovalPolicy,
) -> Result<usize> {
    match policy {
        RemovalPolicy::CoverEdgeAtRoot { r } => {
            let at_root: Vec<usize> = (0..g.m())
                .filter(|&e| mults[e] == 1 && cover[e] == 1 && g.is_incident(e, r))
                .collect();
            if at_root.len() != 1 {
                return Err(Error::DecompositionFailed(format!(
                    "1-tree has {} cover edges at the root",
                    at_root.len()
                )));
            }
            Ok(at_root[0])
        }
        RemovalPolicy::PreferEstar { e_star, e_prime } => {
            if mults[e_star] == 1 {
                Ok(e_star)
            } else if mults[e_prime] == 1 {
                Ok(e_prime)
            } else {
                Err(Error::DecompositionFailed(
                    "1-tree avoids both removal edges".into(),
                ))
            }
        }
    }
}

/// Converts each 1-tree member into a spanning tree per the policy.
pub fn one_trees_to_spanning_trees(
    g: &Multigraph,
    comb: &ConvexCombination,
    cover: &[u32],
    policy: RemovalPolicy,
) -> Result<ConvexCombination> {
    let mut out = ConvexCombination::new(g.m());
    for t in &comb.terms {
        let mut mults = t.mults.clone();
        let removed = removal_edge(g, &mults, cover, policy)?;
        mults[removed] = 0;
        out.push(t.weight.clone(), mults);
    }
    out.compact();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_cover::cycle_cover_decomposition;
    use crate::pairing::{pair_half_edges, PairingConstraints};
    use crate::tree::RootedTree;

    fn decompose_for(g: &Multigraph, r: usize) -> Vec<(Vec<u32>, ConvexCombination)> {
        let covers = cycle_cover_decomposition(g).unwrap();
        covers
            .terms
            .iter()
            .map(|t| {
                let cons = PairingConstraints { rainbow: vec![r], not_rainbow: vec![] };
                let p = pair_half_edges(g, &t.mults, &cons).unwrap();
                let comb = rainbow_one_trees(g, &t.mults, &p, r).unwrap();
                (t.mults.clone(), comb)
            })
            .collect()
    }

    #[test]
    fn k4_one_trees_reproduce_y() {
        let g = crate::gen::k4();
        for (cover, comb) in decompose_for(&g, 0) {
            let y: Vec<_> = (0..g.m())
                .map(|e| if cover[e] == 0 { one() } else { rat(1, 2) })
                .collect();
            assert_eq!(comb.aggregate(), y);
            for t in &comb.terms {
                assert!(is_one_tree_at(&g, &t.mults, 0));
            }
        }
    }

    #[test]
    fn petersen_trees_from_one_trees() {
        let g = crate::gen::petersen();
        for (cover, comb) in decompose_for(&g, 0) {
            let trees =
                one_trees_to_spanning_trees(&g, &comb, &cover, RemovalPolicy::CoverEdgeAtRoot { r: 0 })
                    .unwrap();
            for t in &trees.terms {
                let edges: Vec<usize> =
                    (0..g.m()).filter(|&e| t.mults[e] == 1).collect();
                let rt = RootedTree::from_edge_set(&g, &edges, 0).unwrap();
                assert!(rt.is_leaf(&g, 0));
            }
            // off the root the aggregate keeps its y value; at the root the
            // cover edges drop to 0 and the 1-edge stays at 1
            let agg = trees.aggregate();
            for e in 0..g.m() {
                let expect = match (g.is_incident(e, 0), cover[e]) {
                    (true, 1) => zero(),
                    (true, _) => one(),
                    (false, 1) => rat(1, 2),
                    (false, _) => one(),
                };
                assert_eq!(agg[e], expect, "edge {e}");
            }
        }
    }

    #[test]
    fn one_tree_predicate() {
        let g = crate::gen::k4();
        // 4-cycle 0-1-2-3 plus chord: edges 01,12,23,30 and 02
        let mut mults = vec![0u32; 6];
        for (i, e) in g.edges.iter().enumerate() {
            let (a, b) = (e.u.min(e.v), e.u.max(e.v));
            if matches!((a, b), (0, 1) | (1, 2) | (2, 3) | (0, 3)) {
                mults[i] = 1;
            }
        }
        assert!(is_one_tree_at(&g, &mults, 0));
        let mut with_chord = mults.clone();
        let chord = g
            .edges
            .iter()
            .position(|e| e.u.min(e.v) == 0 && e.u.max(e.v) == 2)
            .unwrap();
        with_chord[chord] = 1;
        assert!(!is_one_tree_at(&g, &with_chord, 0));
    }
}
