//! Gluing convex combinations over small edge cuts.
//!
//! Over a 3-edge cut, every 2-edge-connected subgraph uses two or three of
//! the cut edges, and the mass of each usage pattern is forced by the
//! aggregate values on the cut. Two combinations agreeing on the cut can
//! therefore be paired greedily, pattern by pattern.

use crate::comb::{ConvexCombination, Term};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::ratio::{one, rat, zero, Rat};

/// Pattern masses over a 3-cut {a, b, c}, ordered [ab, ac, bc, abc].
pub fn three_cut_multipliers(xa: &Rat, xb: &Rat, xc: &Rat) -> [Rat; 4] {
    [
        one() - xc,
        one() - xb,
        one() - xa,
        xa.clone() + xb + xc - rat(2, 1),
    ]
}

/// Maps edge indices of `side` into `host` by label.
fn label_map(side: &Multigraph, host: &Multigraph) -> Result<Vec<usize>> {
    side.edges
        .iter()
        .map(|e| {
            host.edge_by_label(&e.label).ok_or_else(|| {
                Error::GluingFailed(format!("edge {} is missing from the host", e.label))
            })
        })
        .collect()
}

fn side_terms(
    side: &Multigraph,
    comb: &ConvexCombination,
    host: &Multigraph,
) -> Result<Vec<Term>> {
    let map = label_map(side, host)?;
    let mut out = Vec::with_capacity(comb.terms.len());
    for t in &comb.terms {
        let mut mults = vec![0u32; host.m()];
        for (e, &m) in t.mults.iter().enumerate() {
            mults[map[e]] = m;
        }
        out.push(Term { weight: t.weight.clone(), mults });
    }
    Ok(out)
}

/// Pairs two term lists bucketed by `key`, taking the union of each pair.
/// The key masses must agree on both sides.
fn pair_by_key<K: Ord + Clone + std::fmt::Debug>(
    host: &Multigraph,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
    key: impl Fn(&Term) -> Result<K>,
    merge: impl Fn(&Term, &Term) -> Vec<u32>,
) -> Result<ConvexCombination> {
    use std::collections::BTreeMap;
    let mut buckets: BTreeMap<K, (Vec<Term>, Vec<Term>)> = BTreeMap::new();
    for t in lhs {
        buckets.entry(key(&t)?).or_default().0.push(t);
    }
    for t in rhs {
        buckets.entry(key(&t)?).or_default().1.push(t);
    }
    let mut out = ConvexCombination::new(host.m());
    for (k, (mut l, mut r)) in buckets {
        let mass = |v: &[Term]| v.iter().map(|t| t.weight.clone()).sum::<Rat>();
        if mass(&l) != mass(&r) {
            return Err(Error::GluingFailed(format!(
                "pattern {:?} has mass {} on one side and {} on the other",
                k,
                crate::ratio::rat_to_string(&mass(&l)),
                crate::ratio::rat_to_string(&mass(&r))
            )));
        }
        let (mut i, mut j) = (0, 0);
        while i < l.len() && j < r.len() {
            let w = l[i].weight.clone().min(r[j].weight.clone());
            if w > zero() {
                out.push(w.clone(), merge(&l[i], &r[j]));
            }
            l[i].weight -= w.clone();
            r[j].weight -= w;
            if l[i].weight == zero() {
                i += 1;
            }
            if r[j].weight == zero() {
                j += 1;
            }
        }
    }
    Ok(out)
}

/// Glues combinations of 2-edge-connected subgraphs over a 3-edge cut.
/// `side1` and `side2` are the two contractions of `host`; both contain the
/// three cut edges under the same labels and agree on their aggregates.
pub fn glue_3cut(
    host: &Multigraph,
    side1: (&Multigraph, &ConvexCombination),
    side2: (&Multigraph, &ConvexCombination),
    cut: &[usize; 3],
) -> Result<ConvexCombination> {
    for (g, comb) in [side1, side2] {
        comb.check_weights()?;
        if comb.m != g.m() {
            return Err(Error::GluingFailed("combination does not fit its side".into()));
        }
    }
    let lhs = side_terms(side1.0, side1.1, host)?;
    let rhs = side_terms(side2.0, side2.1, host)?;
    let cut = *cut;
    let key = move |t: &Term| -> Result<[u32; 3]> {
        let k = [t.mults[cut[0]], t.mults[cut[1]], t.mults[cut[2]]];
        let used: u32 = k.iter().sum();
        if k.iter().any(|&m| m > 1) || used < 2 {
            return Err(Error::GluingFailed(
                "a member uses the 3-cut with an impossible pattern".into(),
            ));
        }
        Ok(k)
    };
    let merge = move |a: &Term, b: &Term| -> Vec<u32> {
        let mut m: Vec<u32> = a
            .mults
            .iter()
            .zip(&b.mults)
            .map(|(x, y)| x + y)
            .collect();
        for &c in &cut {
            // the cut edges are shared, do not double count them
            m[c] = a.mults[c];
        }
        m
    };
    let mut glued = pair_by_key(host, lhs, rhs, key, merge)?;
    glued.compact();
    Ok(glued)
}

/// Glues combinations of 2-edge-connected multigraphs over a 2-edge cut
/// {a, b}. Each side carries a marker edge standing in for the cut: members
/// with a doubled marker pair with members omitting the other marker and
/// receive two copies of both cut edges; single markers pair together and
/// receive one copy of each.
pub fn glue_2cut(
    host: &Multigraph,
    side1: (&Multigraph, &ConvexCombination, usize),
    side2: (&Multigraph, &ConvexCombination, usize),
    cut: &[usize; 2],
) -> Result<ConvexCombination> {
    let (g1, comb1, marker1) = side1;
    let (g2, comb2, marker2) = side2;
    for (g, comb) in [(g1, comb1), (g2, comb2)] {
        comb.check_weights()?;
        if comb.m != g.m() {
            return Err(Error::GluingFailed("combination does not fit its side".into()));
        }
    }
    let m1 = g1.edges[marker1].label.clone();
    let m2 = g2.edges[marker2].label.clone();
    for label in [&m1, &m2] {
        if host.edge_by_label(label).is_some() {
            return Err(Error::GluingFailed(format!(
                "marker {label} must not be a host edge"
            )));
        }
    }
    // markers are not host edges; map them through a host extended by them
    let mut ext = host.clone();
    let (hu, hv) = (host.endpoints(cut[0]), host.endpoints(cut[1]));
    ext.add_labeled_edge(hu.0, hu.1, m1.clone());
    ext.add_labeled_edge(hv.0, hv.1, m2.clone());
    let ext1 = ext.edge_by_label(&m1).unwrap();
    let ext2 = ext.edge_by_label(&m2).unwrap();
    let lhs = side_terms(g1, comb1, &ext)?;
    let rhs = side_terms(g2, comb2, &ext)?;
    // a doubled marker on side 1 pairs with an absent marker on side 2
    let key = move |t: &Term| -> Result<u32> {
        match (t.mults[ext1], t.mults[ext2]) {
            (1, 0) | (0, 1) => Ok(1),
            (2, 0) | (0, 0) => Ok(2),
            _ => Err(Error::GluingFailed(
                "a member uses its marker with an impossible multiplicity".into(),
            )),
        }
    };
    let cut = *cut;
    let merge = move |a: &Term, b: &Term| -> Vec<u32> {
        let copies = if a.mults[ext1] == 2 { 2 } else { 1 };
        let mut m: Vec<u32> = a
            .mults
            .iter()
            .zip(&b.mults)
            .map(|(x, y)| x + y)
            .collect();
        m[ext1] = 0;
        m[ext2] = 0;
        m[cut[0]] = copies;
        m[cut[1]] = copies;
        m
    };
    let glued = pair_by_key(&ext, lhs, rhs, key, merge)?;
    let mut out = ConvexCombination::new(host.m());
    for t in glued.terms {
        let mut m = t.mults;
        m.truncate(host.m());
        out.push(t.weight, m);
    }
    out.compact();
    Ok(out)
}
