//! Certificates for half-integer square points.
//!
//! The half-edges of a square point form disjoint 4-cycles joined by
//! paths of 1-edges. Contracting the squares and the paths gives a
//! 4-regular 4-edge-connected graph G. A matching decomposition of the
//! everywhere alpha vector of G with 2-vertex-connected complements is
//! expanded, square by square, to a combination equal to r^{alpha,x};
//! mixing with a Hamiltonian cycle through the squares yields 9/7 x.

use crate::coloring::color_4_5_vertex;
use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::lp;
use crate::matching::all_matchings;
use crate::ratio::{one, rat, rat_to_string, zero, Rat};
use crate::tree::{subdivide, RootedTree};
use crate::treepack::two_disjoint_spanning_trees;

pub struct SquarePoint {
    pub graph: Multigraph,
    pub x: Vec<Rat>,
    /// per square: corner vertices in cyclic order
    pub squares: Vec<[usize; 4]>,
    /// per square: half-edge i joins corners i and i+1 mod 4
    pub square_edges: Vec<[usize; 4]>,
}

/// A 1-path of the point, one edge of the contracted graph.
pub struct PathInfo {
    pub edges: Vec<usize>,
    /// corner in the tail square (the lower square index)
    pub tail_corner: usize,
    pub head_corner: usize,
}

pub struct SquareContraction {
    /// 4-regular 4-edge-connected; vertex i is square i
    pub graph: Multigraph,
    pub square_of: Vec<Option<usize>>,
    /// contracted edge -> its 1-path
    pub paths: Vec<PathInfo>,
}

pub fn validate_square(g: &Multigraph, x: &[Rat]) -> Result<SquarePoint> {
    if x.len() != g.m() {
        return Err(Error::BadPoint("x length does not match edge count".into()));
    }
    let half = rat(1, 2);
    for (e, v) in x.iter().enumerate() {
        if *v != half && *v != one() {
            return Err(Error::BadPoint(format!(
                "edge {} has value {}, not 1/2 or 1",
                g.edges[e].label,
                rat_to_string(v)
            )));
        }
    }
    // half-edges must induce disjoint 4-cycles
    let mut half_at: Vec<Vec<usize>> = vec![Vec::new(); g.n];
    for e in 0..g.m() {
        if x[e] == half {
            let (u, v) = g.endpoints(e);
            half_at[u].push(e);
            half_at[v].push(e);
        }
    }
    let mut seen = vec![false; g.n];
    let mut squares = Vec::new();
    let mut square_edges = Vec::new();
    for v in 0..g.n {
        if seen[v] || half_at[v].is_empty() {
            continue;
        }
        if half_at[v].len() != 2 {
            return Err(Error::BadPoint(format!(
                "vertex {v} has {} half-edges, not 0 or 2",
                half_at[v].len()
            )));
        }
        // walk the cycle of half-edges from v
        let mut verts = vec![v];
        let mut edges = Vec::new();
        let mut prev_edge = usize::MAX;
        let mut cur = v;
        loop {
            seen[cur] = true;
            if half_at[cur].len() != 2 {
                return Err(Error::BadPoint(format!(
                    "vertex {cur} has {} half-edges, not 0 or 2",
                    half_at[cur].len()
                )));
            }
            let &e = half_at[cur]
                .iter()
                .find(|&&e| e != prev_edge)
                .ok_or_else(|| Error::BadPoint("half-edge cycle stalls".into()))?;
            edges.push(e);
            cur = g.other_end(e, cur);
            prev_edge = e;
            if cur == v {
                break;
            }
            verts.push(cur);
            if verts.len() > 4 {
                return Err(Error::BadPoint(
                    "half-edges do not form disjoint 4-cycles".into(),
                ));
            }
        }
        if verts.len() != 4 {
            return Err(Error::BadPoint(
                "half-edges do not form disjoint 4-cycles".into(),
            ));
        }
        squares.push([verts[0], verts[1], verts[2], verts[3]]);
        square_edges.push([edges[0], edges[1], edges[2], edges[3]]);
    }
    if squares.is_empty() {
        return Err(Error::BadPoint("point has no half-squares".into()));
    }
    // corners carry one 1-edge; path vertices carry two and nothing else
    for v in 0..g.n {
        let ones = g
            .incident_edges(v)
            .iter()
            .filter(|&&e| x[e] == one())
            .count();
        let need = if half_at[v].is_empty() { 2 } else { 1 };
        if ones != need {
            return Err(Error::BadPoint(format!(
                "vertex {v} has {ones} incident 1-edges, expected {need}"
            )));
        }
    }
    g.check_in_lp(x)?;
    Ok(SquarePoint {
        graph: g.clone(),
        x: x.to_vec(),
        squares,
        square_edges,
    })
}

pub fn contract_squares(sp: &SquarePoint) -> Result<SquareContraction> {
    let g = &sp.graph;
    let mut square_of = vec![None; g.n];
    for (i, sq) in sp.squares.iter().enumerate() {
        for &v in sq {
            square_of[v] = Some(i);
        }
    }
    let mut gc = Multigraph::new(sp.squares.len());
    let mut paths = Vec::new();
    let mut used = vec![false; g.m()];
    for v in 0..g.n {
        let Some(sq) = square_of[v] else { continue };
        for start in g.incident_edges(v) {
            if sp.x[start] != one() || used[start] {
                continue;
            }
            // walk the 1-path to the next corner
            let mut edges = vec![start];
            used[start] = true;
            let mut cur = g.other_end(start, v);
            while square_of[cur].is_none() {
                let e = g
                    .incident_edges(cur)
                    .into_iter()
                    .find(|&e| sp.x[e] == one() && !used[e])
                    .ok_or_else(|| Error::BadPoint("1-path dead-ends".into()))?;
                used[e] = true;
                cur = g.other_end(e, cur);
                edges.push(e);
            }
            let other = square_of[cur].unwrap();
            if other == sq {
                return Err(Error::BadPoint(
                    "a 1-path joins a square to itself".into(),
                ));
            }
            // orient from the lower square to the higher one
            let (tail_corner, head_corner, tail, head) = if sq < other {
                (v, cur, sq, other)
            } else {
                (cur, v, other, sq)
            };
            gc.add_labeled_edge(tail, head, g.edges[start].label.clone());
            paths.push(PathInfo { edges, tail_corner, head_corner });
        }
    }
    for q in 0..gc.n {
        if gc.degree(q) != 4 {
            return Err(Error::BadPoint(format!(
                "contracted square {q} has degree {}, not 4",
                gc.degree(q)
            )));
        }
    }
    if gc.edge_connectivity() < 4 {
        return Err(Error::NotEdgeConnected {
            need: 4,
            detail: "contracted square graph".into(),
        });
    }
    Ok(SquareContraction { graph: gc, square_of, paths })
}

/// A Hamiltonian cycle of the point containing every 1-edge and one
/// opposite half-edge pair per square, by transition merging: flipping
/// the chosen pair at a square visited by two distinct cycles unites
/// them.
pub fn find_hamiltonian(sp: &SquarePoint) -> Result<Vec<u32>> {
    let g = &sp.graph;
    let s = sp.squares.len();
    let mut choice = vec![false; s];
    let build = |choice: &[bool]| -> Vec<u32> {
        let mut mults = vec![0u32; g.m()];
        for e in 0..g.m() {
            if sp.x[e] == one() {
                mults[e] = 1;
            }
        }
        for (i, &c) in choice.iter().enumerate() {
            let pair = if c { [1, 3] } else { [0, 2] };
            for k in pair {
                mults[sp.square_edges[i][k]] = 1;
            }
        }
        mults
    };
    for _ in 0..=s {
        let mults = build(&choice);
        let comp = components(g, &mults);
        let distinct = comp.iter().max().map_or(0, |&c| c + 1);
        if distinct == 1 {
            for v in 0..g.n {
                let deg: u32 = g
                    .incident_edges(v)
                    .iter()
                    .map(|&e| mults[e])
                    .sum();
                if deg != 2 {
                    return Err(Error::DecompositionFailed(format!(
                        "H is not 2-regular at vertex {v}"
                    )));
                }
            }
            return Ok(mults);
        }
        let flip = (0..s).find(|&i| {
            let sq = sp.squares[i];
            sq.iter().any(|&v| comp[v] != comp[sq[0]])
        });
        match flip {
            Some(i) => choice[i] = !choice[i],
            None => break,
        }
    }
    Err(Error::DecompositionFailed(
        "transition merging failed to produce one cycle".into(),
    ))
}

fn components(g: &Multigraph, mults: &[u32]) -> Vec<usize> {
    let mut comp = vec![usize::MAX; g.n];
    let mut next = 0;
    for start in 0..g.n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in g.incident_edges(v) {
                if mults[e] == 0 {
                    continue;
                }
                let w = g.other_end(e, v);
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn check_matching_complement(g: &Multigraph, matching: &[u32]) -> Result<()> {
    for v in 0..g.n {
        let picked: u32 = g.incident_edges(v).iter().map(|&e| matching[e]).sum();
        if picked > 1 {
            return Err(Error::VerificationFailed(format!(
                "two matched edges at vertex {v}"
            )));
        }
    }
    let comp: Vec<u32> = matching.iter().map(|&m| 1 - m).collect();
    if !g.is_2vc(&comp) {
        return Err(Error::VerificationFailed(
            "matching complement is not 2-vertex-connected".into(),
        ));
    }
    for v in 0..g.n {
        let deg: u32 = g.incident_edges(v).iter().map(|&e| comp[e]).sum();
        if deg < 3 {
            return Err(Error::VerificationFailed(format!(
                "matching complement has degree {deg} at vertex {v}"
            )));
        }
    }
    Ok(())
}

/// P(G, 1/10) for 4-regular 4-edge-connected G: the everywhere 1/10
/// vector as matchings whose complements are 2-vertex-connected with
/// minimum degree three. Two edge-disjoint spanning trees, each colored
/// at factor 4/5 through the subdivision, give the complements.
pub fn p_matchings_1_10(g: &Multigraph) -> Result<ConvexCombination> {
    for v in 0..g.n {
        if g.degree(v) != 4 {
            return Err(Error::InvalidInput(format!(
                "vertex {v} is not 4-regular"
            )));
        }
    }
    if g.edge_connectivity() < 4 {
        return Err(Error::NotEdgeConnected {
            need: 4,
            detail: "matching decomposition".into(),
        });
    }
    let (t1, t2) = two_disjoint_spanning_trees(g)?;
    let mut parts = Vec::new();
    for edges in [&t1, &t2] {
        let mut tdeg = vec![0u32; g.n];
        for &e in edges.iter() {
            let (u, v) = g.endpoints(e);
            tdeg[u] += 1;
            tdeg[v] += 1;
        }
        let root = (0..g.n)
            .find(|&v| tdeg[v] == 1)
            .ok_or_else(|| Error::DecompositionFailed("tree has no leaf".into()))?;
        let tree = RootedTree::from_edge_set(g, edges, root)?;
        let sub = subdivide(g, &tree);
        let col = color_4_5_vertex(&sub)?;
        let mut comb = ConvexCombination::new(g.m());
        for c in 0..col.q {
            let mut mults = vec![0u32; g.m()];
            for &e in edges.iter() {
                mults[e] = 1;
            }
            for &(old, new) in &sub.link_map {
                if col.colors[new] & (1 << c) != 0 {
                    mults[old] = 1;
                }
            }
            comb.push(rat(1, i64::from(col.q)), mults);
        }
        parts.push(comb);
    }
    let weighted: Vec<(Rat, &ConvexCombination)> =
        parts.iter().map(|c| (rat(1, 2), c)).collect();
    let mut kept = ConvexCombination::mix(&weighted);
    let target: Vec<Rat> = (0..g.m()).map(|_| rat(9, 10)).collect();
    kept.pad_to_target(&target, 1)?;
    let mut out = ConvexCombination::new(g.m());
    for t in &kept.terms {
        let matching: Vec<u32> = t.mults.iter().map(|&m| 1 - m).collect();
        check_matching_complement(g, &matching)?;
        out.push(t.weight.clone(), matching);
    }
    out.compact();
    debug_assert!(out.aggregate().iter().all(|a| *a == rat(1, 10)));
    Ok(out)
}

/// P(G, alpha) by brute force: enumerate matchings with 2-vertex-connected
/// complements and solve for exact convex weights.
pub fn p_matchings_exact(g: &Multigraph, alpha: &Rat) -> Result<ConvexCombination> {
    let mut cols = Vec::new();
    let mut members = Vec::new();
    for m in all_matchings(g) {
        let mut mults = vec![0u32; g.m()];
        for &e in &m {
            mults[e] = 1;
        }
        if check_matching_complement(g, &mults).is_err() {
            continue;
        }
        let mut col: Vec<Rat> = mults
            .iter()
            .map(|&k| Rat::from_integer(k.into()))
            .collect();
        col.push(one());
        cols.push(col);
        members.push(mults);
    }
    let mut rhs: Vec<Rat> = (0..g.m()).map(|_| alpha.clone()).collect();
    rhs.push(one());
    let lambda = lp::solve_eq(&cols, &rhs).ok_or_else(|| {
        Error::DecompositionFailed(format!(
            "everywhere {} is not in the good-matching hull",
            rat_to_string(alpha)
        ))
    })?;
    let mut out = ConvexCombination::new(g.m());
    for (j, l) in lambda.into_iter().enumerate() {
        if l > zero() {
            out.push(l, members[j].clone());
        }
    }
    out.check_weights()?;
    Ok(out)
}

/// The vector r^{alpha,x}: 1 + alpha on 1-edges, 1/2 on half-edges of H,
/// 1 - alpha on half-edges off H.
pub fn r_vector(sp: &SquarePoint, h: &[u32], alpha: &Rat) -> Vec<Rat> {
    (0..sp.graph.m())
        .map(|e| {
            if sp.x[e] == one() {
                one() + alpha
            } else if h[e] == 1 {
                rat(1, 2)
            } else {
                one() - alpha
            }
        })
        .collect()
}

/// Expands a matching decomposition of the everywhere alpha vector of the
/// contracted graph into a combination of 2-edge-connected multigraphs of
/// the point equal to r^{alpha,x}: two coupled members per matching.
pub fn expand_matchings_to_r(
    sp: &SquarePoint,
    con: &SquareContraction,
    h: &[u32],
    matchings: &ConvexCombination,
    alpha: &Rat,
) -> Result<ConvexCombination> {
    let g = &sp.graph;
    // per square: split its edges into the H pair and the other pair
    for (i, se) in sp.square_edges.iter().enumerate() {
        let on: Vec<bool> = se.iter().map(|&e| h[e] == 1).collect();
        if on != [true, false, true, false] && on != [false, true, false, true] {
            return Err(Error::DecompositionFailed(format!(
                "H does not take an opposite pair in square {i}"
            )));
        }
    }
    let mut out = ConvexCombination::new(g.m());
    for term in &matchings.terms {
        let mut base = vec![0u32; g.m()];
        for e in 0..g.m() {
            if sp.x[e] == one() {
                base[e] = 1;
            }
        }
        for (f, info) in con.paths.iter().enumerate() {
            if term.mults[f] == 1 {
                for &e in &info.edges {
                    base[e] = 2;
                }
            }
        }
        let mut f1 = base.clone();
        let mut f2 = base;
        for (i, se) in sp.square_edges.iter().enumerate() {
            // the matched 1-path at this square, if any
            let mut hit = None;
            for (f, info) in con.paths.iter().enumerate() {
                if term.mults[f] != 1 {
                    continue;
                }
                let (t, hd) = con.graph.endpoints(f);
                if t == i {
                    hit = match hit {
                        None => Some((info.tail_corner, false)),
                        Some(_) => {
                            return Err(Error::VerificationFailed(format!(
                                "two matched edges at square {i}"
                            )))
                        }
                    };
                } else if hd == i {
                    hit = match hit {
                        None => Some((info.head_corner, true)),
                        Some(_) => {
                            return Err(Error::VerificationFailed(format!(
                                "two matched edges at square {i}"
                            )))
                        }
                    };
                }
            }
            match hit {
                None => {
                    // both off-H edges to both; H pair split by edge index
                    let (bs, cs): (Vec<usize>, Vec<usize>) =
                        se.iter().partition(|&&e| h[e] == 1);
                    for &e in &cs {
                        f1[e] += 1;
                        f2[e] += 1;
                    }
                    let lo = *bs.iter().min().unwrap();
                    let hi = *bs.iter().max().unwrap();
                    f1[lo] += 1;
                    f2[hi] += 1;
                }
                Some((u, incoming)) => {
                    let at_u: Vec<usize> = se
                        .iter()
                        .copied()
                        .filter(|&e| g.is_incident(e, u))
                        .collect();
                    let off_u: Vec<usize> = se
                        .iter()
                        .copied()
                        .filter(|&e| !g.is_incident(e, u))
                        .collect();
                    let c_off_u = *off_u.iter().find(|&&e| h[e] == 0).unwrap();
                    // lean member: the pair avoiding u; rich member: the
                    // pair at u plus the off-H edge avoiding u
                    let (lean, rich) = if incoming {
                        (&mut f1, &mut f2)
                    } else {
                        (&mut f2, &mut f1)
                    };
                    for &e in &off_u {
                        lean[e] += 1;
                    }
                    for &e in &at_u {
                        rich[e] += 1;
                    }
                    rich[c_off_u] += 1;
                }
            }
        }
        for member in [f1, f2] {
            if !g.is_2ec(&member) {
                return Err(Error::DecompositionFailed(
                    "expanded member is not 2-edge-connected".into(),
                ));
            }
            out.push(term.weight.clone() * rat(1, 2), member);
        }
    }
    out.compact();
    let want = r_vector(sp, h, alpha);
    if out.aggregate() != want {
        return Err(Error::VerificationFailed(
            "expansion does not aggregate to r^{alpha,x}".into(),
        ));
    }
    Ok(out)
}

/// The 9/7 certificate: 5/7 r^{1/10,x} + 2/7 chi^H, entrywise at most
/// 9/7 x, every member a 2-edge-connected spanning multigraph.
pub fn square_certificate(g: &Multigraph, x: &[Rat]) -> Result<ConvexCombination> {
    let sp = validate_square(g, x)?;
    let con = contract_squares(&sp)?;
    let h = find_hamiltonian(&sp)?;
    let alpha = rat(1, 10);
    let matchings = p_matchings_1_10(&con.graph)?;
    let r = expand_matchings_to_r(&sp, &con, &h, &matchings, &alpha)?;
    let mut hcomb = ConvexCombination::new(g.m());
    hcomb.push(one(), h.clone());
    let out = ConvexCombination::mix(&[(rat(5, 7), &r), (rat(2, 7), &hcomb)]);
    let agg = out.aggregate();
    for e in 0..g.m() {
        let bound = rat(9, 7) * &x[e];
        if agg[e] > bound {
            return Err(Error::VerificationFailed(format!(
                "aggregate {} exceeds 9/7 x on edge {}",
                rat_to_string(&agg[e]),
                g.edges[e].label
            )));
        }
        // half-edges are tight at 9/14, 1-edges sit at 15/14
        let want = if x[e] == one() { rat(15, 14) } else { rat(9, 14) };
        if agg[e] != want {
            return Err(Error::VerificationFailed(format!(
                "aggregate {} off the expected value on edge {}",
                rat_to_string(&agg[e]),
                g.edges[e].label
            )));
        }
    }
    Ok(out)
}

/// The bespoke k-donut combination 1/5 chi^H + 4/5 r^{alpha,x} with
/// alpha = 1/4 - 1/(2k): aggregates 6/5 - 2/(5k) on 1-edges, 3/5 on
/// half-edges of H and 3/5 + 2/(5k) off H.
pub fn donut_certificate(k: usize) -> Result<(crate::io::Instance, ConvexCombination)> {
    if k < 2 {
        return Err(Error::InvalidInput("donuts need k >= 2".into()));
    }
    let inst = crate::gen::k_donut(k);
    let sp = validate_square(&inst.graph, &inst.x)?;
    let con = contract_squares(&sp)?;
    let h = find_hamiltonian(&sp)?;
    let alpha = rat(1, 4) - rat(1, 2 * k as i64);
    let matchings = p_matchings_exact(&con.graph, &alpha)?;
    let r = expand_matchings_to_r(&sp, &con, &h, &matchings, &alpha)?;
    let mut hcomb = ConvexCombination::new(inst.graph.m());
    hcomb.push(one(), h.clone());
    let out = ConvexCombination::mix(&[(rat(1, 5), &hcomb), (rat(4, 5), &r)]);
    let agg = out.aggregate();
    let kk = k as i64;
    for e in 0..inst.graph.m() {
        let want = if inst.x[e] == one() {
            rat(6, 5) - rat(2, 5 * kk)
        } else if h[e] == 1 {
            rat(3, 5)
        } else {
            rat(3, 5) + rat(2, 5 * kk)
        };
        if agg[e] != want {
            return Err(Error::VerificationFailed(format!(
                "donut aggregate {} off the expected value on edge {}",
                rat_to_string(&agg[e]),
                inst.graph.edges[e].label
            )));
        }
    }
    Ok((inst, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn donut_contraction_is_doubled_cycle() {
        let inst = gen::k_donut(4);
        let sp = validate_square(&inst.graph, &inst.x).unwrap();
        let con = contract_squares(&sp).unwrap();
        assert_eq!(con.graph.n, 4);
        assert_eq!(con.graph.m(), 8);
        for f in 0..con.graph.m() {
            let (u, v) = con.graph.endpoints(f);
            assert!(matches!((v + 4 - u) % 4, 1 | 3), "edge {f} not on the cycle");
            assert_eq!(con.paths[f].edges.len(), 4);
        }
    }

    #[test]
    fn two_square_point_contracts_to_two_vertices() {
        let inst = gen::square_point_from_4regular(&gen::doubled_cycle(2)).unwrap();
        let sp = validate_square(&inst.graph, &inst.x).unwrap();
        assert_eq!(sp.graph.n, 8);
        let con = contract_squares(&sp).unwrap();
        assert_eq!(con.graph.n, 2);
        assert_eq!(con.graph.m(), 4);
    }

    #[test]
    fn overlapping_squares_rejected() {
        // half-edges forming a 6-cycle are not disjoint 4-cycles
        let mut g = gen::cycle(6);
        let mut x: Vec<Rat> = (0..6).map(|_| rat(1, 2)).collect();
        for i in 0..6 {
            g.add_edge(i, (i + 3) % 6);
        }
        x.extend((0..3).map(|_| one()));
        assert!(matches!(
            validate_square(&g, &x),
            Err(Error::BadPoint(_))
        ));
    }

    #[test]
    fn hamiltonian_on_donut() {
        let inst = gen::k_donut(4);
        let sp = validate_square(&inst.graph, &inst.x).unwrap();
        let h = find_hamiltonian(&sp).unwrap();
        let used: u32 = h.iter().sum();
        assert_eq!(used as usize, inst.graph.n);
        for e in 0..inst.graph.m() {
            if inst.x[e] == one() {
                assert_eq!(h[e], 1, "1-edge missing from H");
            }
        }
        assert!(inst.graph.is_2ec(&h));
    }

    #[test]
    fn matchings_1_10_on_octahedron_and_k5() {
        for g in [gen::octahedron(), gen::k5()] {
            let m = p_matchings_1_10(&g).unwrap();
            m.check_weights().unwrap();
            assert!(m.aggregate().iter().all(|a| *a == rat(1, 10)));
            for t in &m.terms {
                check_matching_complement(&g, &t.mults).unwrap();
            }
        }
    }

    #[test]
    fn certificate_on_doubled_triangle_expansion() {
        let inst = gen::square_point_from_4regular(&gen::doubled_cycle(3)).unwrap();
        let comb = square_certificate(&inst.graph, &inst.x).unwrap();
        comb.check_weights().unwrap();
        for t in &comb.terms {
            assert!(inst.graph.is_2ec(&t.mults));
            assert!(t.mults.iter().all(|&m| m <= 2));
        }
    }

    #[test]
    fn certificates_on_donuts() {
        for k in 2..=4 {
            let inst = gen::k_donut(k);
            let comb = square_certificate(&inst.graph, &inst.x).unwrap();
            for t in &comb.terms {
                assert!(inst.graph.is_2ec(&t.mults));
            }
        }
    }

    #[test]
    fn bespoke_donut_combination() {
        for k in [2, 4] {
            let (inst, comb) = donut_certificate(k).unwrap();
            comb.check_weights().unwrap();
            for t in &comb.terms {
                assert!(inst.graph.is_2ec(&t.mults));
            }
        }
    }
}
