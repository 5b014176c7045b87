//! Uniform covers of cubic 3-edge-connected graphs.
//!
//! The everywhere 7/8 vector is decomposed by mixing, over a cycle cover
//! decomposition of the everywhere 2/3 vector, rainbow 1-tree
//! decompositions whose trees are augmented through the 5/8 coloring. On
//! graphs with proper 3-edge cuts the problem is first reduced to the
//! essentially 4-edge-connected pieces and glued back.

use crate::coloring::{classes_to_combination, color_3_5, color_5_8};
use crate::comb::ConvexCombination;
use crate::cycle_cover::cycle_cover_decomposition;
use crate::error::{Error, Result};
use crate::glue::glue_3cut;
use crate::graph::Multigraph;
use crate::pairing::{pair_half_edges, PairingConstraints};
use crate::rainbow::{
    one_trees_to_spanning_trees, rainbow_one_trees_with, removal_edge, RemovalPolicy,
};
use crate::ratio::{rat, Rat};
use crate::tree::RootedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFactor {
    FiveEighths,
    ThreeFifths,
}

/// Decomposes the cover into rooted spanning trees, colors each tree, and
/// mixes the color classes. The result aggregates to p/q + (1 - p/q) y'
/// where y' is the tree aggregate.
pub(crate) fn trees_through_colors(
    g: &Multigraph,
    covers: &ConvexCombination,
    r: usize,
    constraints: impl Fn(&[u32]) -> PairingConstraints,
    policy: impl Fn(&[u32]) -> RemovalPolicy,
    factor: TreeFactor,
) -> Result<ConvexCombination> {
    let mut parts: Vec<(Rat, ConvexCombination)> = Vec::new();
    for cover in &covers.terms {
        let cons = constraints(&cover.mults);
        // the not-rainbow wishes can be unsatisfiable on short cycles; they
        // only help the colorings succeed, and those verify on their own
        let pairing = match pair_half_edges(g, &cover.mults, &cons) {
            Ok(p) => p,
            Err(Error::PairingInfeasible(_)) if !cons.not_rainbow.is_empty() => {
                let relaxed = PairingConstraints {
                    rainbow: cons.rainbow.clone(),
                    not_rainbow: vec![],
                };
                pair_half_edges(g, &cover.mults, &relaxed)?
            }
            Err(e) => return Err(e),
        };
        // not every 1-tree candidate leads to a colorable tree; restrict
        // the decomposition to those that do up front
        let pol = policy(&cover.mults);
        let colorable = |mults: &[u32]| -> bool {
            let Ok(removed) = removal_edge(g, mults, &cover.mults, pol) else {
                return false;
            };
            let edges: Vec<usize> = (0..g.m())
                .filter(|&e| mults[e] == 1 && e != removed)
                .collect();
            let Ok(tree) = RootedTree::from_edge_set(g, &edges, r) else {
                return false;
            };
            match factor {
                TreeFactor::FiveEighths => color_5_8(g, &tree).is_ok(),
                TreeFactor::ThreeFifths => color_3_5(g, &tree).is_ok(),
            }
        };
        let one_trees = rainbow_one_trees_with(g, &cover.mults, &pairing, r, &colorable)?;
        let trees = one_trees_to_spanning_trees(g, &one_trees, &cover.mults, pol)?;
        for t in &trees.terms {
            let edges: Vec<usize> = (0..g.m()).filter(|&e| t.mults[e] == 1).collect();
            let tree = RootedTree::from_edge_set(g, &edges, r)?;
            let col = match factor {
                TreeFactor::FiveEighths => color_5_8(g, &tree)?,
                TreeFactor::ThreeFifths => color_3_5(g, &tree)?,
            };
            let classes = classes_to_combination(g, &tree, &col);
            parts.push((cover.weight.clone() * &t.weight, classes));
        }
    }
    let borrowed: Vec<(Rat, &ConvexCombination)> =
        parts.iter().map(|(w, c)| (w.clone(), c)).collect();
    let mut out = ConvexCombination::mix(&borrowed);
    out.compact();
    Ok(out)
}

fn validate_cubic_3ec(g: &Multigraph, what: &str) -> Result<()> {
    if !g.is_cubic() {
        return Err(Error::NotCubic(what.into()));
    }
    if g.edge_connectivity() < 3 {
        return Err(Error::NotEdgeConnected {
            need: 3,
            detail: what.into(),
        });
    }
    Ok(())
}

/// The everywhere 7/8 vector as a convex combination of 2-edge-connected
/// spanning subgraphs. The aggregate is entrywise at most 7/8; it falls
/// short only on the three edges at the chosen root.
pub fn cover_7_8(g: &Multigraph) -> Result<ConvexCombination> {
    validate_cubic_3ec(g, "uniform 7/8 cover")?;
    cover_7_8_inner(g, false)
}

fn cover_7_8_inner(g: &Multigraph, exact: bool) -> Result<ConvexCombination> {
    let cuts = g.proper_3cuts();
    let mut comb = match cuts.first() {
        None => {
            let covers = cycle_cover_decomposition(g)?;
            let r = 0;
            trees_through_colors(
                g,
                &covers,
                r,
                |_| PairingConstraints {
                    rainbow: vec![r],
                    not_rainbow: vec![],
                },
                |_| RemovalPolicy::CoverEdgeAtRoot { r },
                TreeFactor::FiveEighths,
            )?
        }
        Some(cut) => {
            let inv: Vec<bool> = cut.iter().map(|&b| !b).collect();
            let side1 = g.contract_complement(cut);
            let side2 = g.contract_complement(&inv);
            let c1 = cover_7_8_inner(&side1.graph, true)?;
            let c2 = cover_7_8_inner(&side2.graph, true)?;
            let cut_edges = g.cut_edges(cut);
            let cut3: [usize; 3] = cut_edges
                .try_into()
                .map_err(|_| Error::GluingFailed("not a 3-edge cut".into()))?;
            glue_3cut(g, (&side1.graph, &c1), (&side2.graph, &c2), &cut3)?
        }
    };
    if exact {
        comb.pad_to_target(&vec![rat(7, 8); g.m()], 1)?;
    }
    Ok(comb)
}

/// The everywhere 13/15 vector for a 3-edge-colorable cubic graph, from a
/// supplied proper 3-edge-coloring. Pairs of color classes give three even
/// cycle covers, so the trees have no leaf-matching links and the 3/5
/// coloring applies.
pub fn cover_13_15(g: &Multigraph, coloring: &[u8]) -> Result<ConvexCombination> {
    validate_cubic_3ec(g, "uniform 13/15 cover")?;
    if coloring.len() != g.m() {
        return Err(Error::InvalidInput("coloring length mismatch".into()));
    }
    for v in 0..g.n {
        let mut seen = [false; 3];
        for e in g.incident_edges(v) {
            let c = coloring[e] as usize;
            if c > 2 || seen[c] {
                return Err(Error::InvalidInput(format!(
                    "not a proper 3-edge-coloring at vertex {v}"
                )));
            }
            seen[c] = true;
        }
    }
    let mut covers = ConvexCombination::new(g.m());
    for (i, j) in [(0u8, 1u8), (0, 2), (1, 2)] {
        let mults: Vec<u32> = coloring
            .iter()
            .map(|&c| u32::from(c == i || c == j))
            .collect();
        covers.push(rat(1, 3), mults);
    }
    let r = 0;
    trees_through_colors(
        g,
        &covers,
        r,
        |_| PairingConstraints {
            rainbow: vec![r],
            not_rainbow: vec![],
        },
        |_| RemovalPolicy::CoverEdgeAtRoot { r },
        TreeFactor::ThreeFifths,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::ratio::rat;

    fn check_cover(g: &Multigraph, comb: &ConvexCombination, bound: Rat, root: usize) {
        comb.check_weights().unwrap();
        for t in &comb.terms {
            assert!(t.mults.iter().all(|&m| m <= 1), "member is not a subgraph");
            assert!(g.is_2ec(&t.mults), "member is not 2EC");
            for v in 0..g.n {
                assert!(
                    g.incident_edges(v).iter().any(|&e| t.mults[e] == 1),
                    "member is not spanning"
                );
            }
        }
        let agg = comb.aggregate();
        for e in 0..g.m() {
            assert!(agg[e] <= bound, "aggregate exceeds the bound on edge {e}");
            if !g.is_incident(e, root) {
                assert_eq!(agg[e], bound, "off-root aggregate should be tight");
            }
        }
    }

    #[test]
    fn seven_eighths_on_k4() {
        let g = gen::k4();
        let comb = cover_7_8(&g).unwrap();
        check_cover(&g, &comb, rat(7, 8), 0);
    }

    #[test]
    fn seven_eighths_on_petersen() {
        let g = gen::petersen();
        let comb = cover_7_8(&g).unwrap();
        check_cover(&g, &comb, rat(7, 8), 0);
    }

    #[test]
    fn seven_eighths_on_prism_uses_gluing() {
        let g = gen::prism();
        assert!(!g.proper_3cuts().is_empty());
        let comb = cover_7_8(&g).unwrap();
        comb.check_weights().unwrap();
        for t in &comb.terms {
            assert!(g.is_2ec(&t.mults));
        }
        // glued pieces are padded to exactly 7/8 everywhere
        for v in comb.aggregate() {
            assert_eq!(v, rat(7, 8));
        }
    }

    #[test]
    fn thirteen_fifteenths_on_k4_and_k33() {
        for (g, col) in [
            (gen::k4(), gen::k4_coloring()),
            (gen::k33(), gen::k33_coloring()),
        ] {
            let comb = cover_13_15(&g, &col).unwrap();
            check_cover(&g, &comb, rat(13, 15), 0);
        }
    }

    #[test]
    fn bad_coloring_rejected() {
        let g = gen::k4();
        let col = vec![0u8; g.m()];
        assert!(cover_13_15(&g, &col).is_err());
    }
}
