//! Adjacent pairings of the half-edges of a cycle cover.
//!
//! Each cycle is partitioned into adjacent pairs (one edge per odd cycle is
//! left over); the shared endpoint of a pair is a *rainbow vertex*. Leftover
//! edges from odd cycles are paired with each other across cycles.

use crate::cycle_cover::cycles_of_cover;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

#[derive(Debug, Clone, Default)]
pub struct PairingConstraints {
    /// vertices that must be rainbow
    pub rainbow: Vec<usize>,
    /// vertices that must not be rainbow
    pub not_rainbow: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Pairing {
    /// every half-edge appears in exactly one pair
    pub pairs: Vec<(usize, usize)>,
    /// rainbow vertices (shared endpoints of adjacent pairs)
    pub rainbow: Vec<usize>,
}

fn common_vertex(g: &Multigraph, e: usize, f: usize) -> usize {
    let (u, v) = g.endpoints(e);
    if g.is_incident(f, u) {
        u
    } else {
        debug_assert!(g.is_incident(f, v));
        v
    }
}

/// Candidate adjacent pairings of one cycle, in a fixed deterministic order.
/// Each candidate is (pairs, leftover edge for odd cycles).
fn cycle_pairings(cycle: &[usize]) -> Vec<(Vec<(usize, usize)>, Option<usize>)> {
    let len = cycle.len();
    let mut out = Vec::new();
    if len % 2 == 0 {
        for offset in 0..2usize {
            let pairs = (0..len / 2)
                .map(|i| (cycle[(2 * i + offset) % len], cycle[(2 * i + 1 + offset) % len]))
                .collect();
            out.push((pairs, None));
        }
    } else {
        for skip in 0..len {
            let pairs = (0..len / 2)
                .map(|i| {
                    (
                        cycle[(skip + 2 * i + 1) % len],
                        cycle[(skip + 2 * i + 2) % len],
                    )
                })
                .collect();
            out.push((pairs, Some(cycle[skip])));
        }
    }
    out
}

/// Pairs the half-edges of `cover` cycle by cycle, honoring the rainbow
/// constraints. Within each cycle the first feasible candidate in
/// enumeration order is taken, so the result is deterministic.
pub fn pair_half_edges(
    g: &Multigraph,
    cover: &[u32],
    cons: &PairingConstraints,
) -> Result<Pairing> {
    let cycles = cycles_of_cover(g, cover)?;
    let mut pairs = Vec::new();
    let mut rainbow_all = Vec::new();
    let mut leftovers = Vec::new();
    for cycle in &cycles {
        let on_cycle = |v: usize| cycle.iter().any(|&e| g.is_incident(e, v));
        let mut chosen = None;
        'cand: for (cand, leftover) in cycle_pairings(cycle) {
            let rainbow: Vec<usize> =
                cand.iter().map(|&(e, f)| common_vertex(g, e, f)).collect();
            for &v in &cons.rainbow {
                if on_cycle(v) && !rainbow.contains(&v) {
                    continue 'cand;
                }
            }
            for &v in &cons.not_rainbow {
                if rainbow.contains(&v) {
                    continue 'cand;
                }
            }
            chosen = Some((cand, leftover, rainbow));
            break;
        }
        let Some((cand, leftover, rainbow)) = chosen else {
            return Err(Error::PairingInfeasible(format!(
                "no adjacent pairing of a {}-cycle satisfies the rainbow constraints",
                cycle.len()
            )));
        };
        pairs.extend(cand);
        rainbow_all.extend(rainbow);
        leftovers.extend(leftover);
    }
    if leftovers.len() % 2 != 0 {
        return Err(Error::PairingInfeasible(
            "odd number of leftover edges".into(),
        ));
    }
    for pair in leftovers.chunks(2) {
        pairs.push((pair[0], pair[1]));
    }
    rainbow_all.sort_unstable();
    rainbow_all.dedup();
    Ok(Pairing { pairs, rainbow: rainbow_all })
}
