//! Cycle covers of cubic graphs and the 2/3 decomposition.

use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::lp;
use crate::matching::perfect_matchings;
use crate::ratio::{one, rat, zero, Rat};

/// Writes the all-2/3 vector of a bridgeless cubic graph as an exact convex
/// combination of cycle covers (complements of perfect matchings).
pub fn cycle_cover_decomposition(g: &Multigraph) -> Result<ConvexCombination> {
    if !g.is_cubic() {
        return Err(Error::NotCubic("cycle cover decomposition".into()));
    }
    if g.edge_connectivity() < 2 {
        return Err(Error::NotEdgeConnected {
            need: 2,
            detail: "cycle cover decomposition".into(),
        });
    }
    let pms = perfect_matchings(g);
    if pms.is_empty() {
        return Err(Error::DecompositionFailed("no perfect matching".into()));
    }
    let covers: Vec<Vec<u32>> = pms
        .iter()
        .map(|pm| {
            let mut mults = vec![1u32; g.m()];
            for &e in pm {
                mults[e] = 0;
            }
            mults
        })
        .collect();
    // rows: one per edge (= 2/3) plus the convexity row
    let mut cols = Vec::with_capacity(covers.len());
    for c in &covers {
        let mut col: Vec<Rat> = c.iter().map(|&k| Rat::from_integer(k.into())).collect();
        col.push(one());
        cols.push(col);
    }
    let mut rhs = vec![rat(2, 3); g.m()];
    rhs.push(one());
    let lambda = lp::solve_eq(&cols, &rhs).ok_or_else(|| {
        Error::DecompositionFailed("2/3 vector is not in the cycle cover hull".into())
    })?;
    let mut comb = ConvexCombination::new(g.m());
    for (j, l) in lambda.into_iter().enumerate() {
        if l > zero() {
            comb.push(l, covers[j].clone());
        }
    }
    comb.check_weights()?;
    Ok(comb)
}

/// Each cycle of a cycle cover, as lists of edge indices in traversal order.
/// `mults` must be 2-regular on the support.
pub fn cycles_of_cover(g: &Multigraph, mults: &[u32]) -> Result<Vec<Vec<usize>>> {
    for v in 0..g.n {
        let deg: u32 = (0..g.m())
            .filter(|&e| g.is_incident(e, v))
            .map(|e| mults[e])
            .sum();
        if deg != 2 {
            return Err(Error::InvalidInput(format!(
                "vertex {v} has degree {deg} in the cover"
            )));
        }
    }
    if mults.iter().any(|&k| k > 1) {
        return Err(Error::InvalidInput("doubled edge in a cycle cover".into()));
    }
    let mut used = vec![false; g.m()];
    let mut cycles = Vec::new();
    for start in 0..g.m() {
        if mults[start] == 0 || used[start] {
            continue;
        }
        let mut cycle = vec![start];
        used[start] = true;
        let (origin, mut at) = g.endpoints(start);
        while at != origin {
            let next = (0..g.m())
                .find(|&e| mults[e] == 1 && !used[e] && g.is_incident(e, at))
                .expect("2-regular cover closes its cycles");
            used[next] = true;
            at = g.other_end(next, at);
            cycle.push(next);
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}
