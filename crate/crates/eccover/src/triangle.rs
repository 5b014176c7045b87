//! Half-integer triangle points and the z^{x,e*} certificate.
//!
//! The half-edges of a triangle point form disjoint triangles covering
//! every vertex, one 1-edge per vertex. Contracting the triangles gives a
//! cubic 2-edge-connected graph; the certificate is built by recursion
//! over its 2-edge cuts with a base case on 3-edge-connected contractions.

use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::glue::glue_2cut;
use crate::graph::{Contraction, Multigraph};
use crate::pairing::PairingConstraints;
use crate::rainbow::RemovalPolicy;
use crate::ratio::{one, rat, zero, Rat};
use crate::uniform::{trees_through_colors, TreeFactor};

#[derive(Debug, Clone)]
pub struct TrianglePoint {
    pub graph: Multigraph,
    pub x: Vec<Rat>,
    pub estar: usize,
    /// vertex triples of the half-edge triangles
    pub triangles: Vec<[usize; 3]>,
}

impl TrianglePoint {
    /// z^{x,e*}: 29/24 on 1-edges, 19/24 on e*, 29/48 on half-edges.
    pub fn z_vector(&self) -> Vec<Rat> {
        (0..self.graph.m())
            .map(|e| {
                if e == self.estar {
                    rat(19, 24)
                } else if self.x[e] == one() {
                    rat(29, 24)
                } else {
                    rat(29, 48)
                }
            })
            .collect()
    }

    /// Contracts each triangle; the remaining edges are the 1-edges.
    pub fn contract_triangles(&self) -> Contraction {
        let groups: Vec<Vec<usize>> = self.triangles.iter().map(|t| t.to_vec()).collect();
        self.graph.contract_groups(&groups)
    }
}

/// Checks that (x, e*) is a half-integer triangle point with e* outside
/// every 2-edge cut.
pub fn validate_triangle(g: &Multigraph, x: &[Rat], estar: usize) -> Result<TrianglePoint> {
    if x.len() != g.m() || estar >= g.m() {
        return Err(Error::BadPoint("x or e* does not fit the graph".into()));
    }
    if !g.is_cubic() {
        return Err(Error::NotCubic("triangle point support".into()));
    }
    if g.edge_connectivity() < 2 {
        return Err(Error::NotEdgeConnected {
            need: 2,
            detail: "triangle point support".into(),
        });
    }
    let half = rat(1, 2);
    for v in x {
        if *v != one() && *v != half {
            return Err(Error::BadPoint("entries must be 1 or 1/2".into()));
        }
    }
    g.check_in_lp(x)?;
    if x[estar] != one() {
        return Err(Error::BadPoint("e* must be a 1-edge".into()));
    }
    // one 1-edge per vertex, half-edges forming disjoint triangles
    let mut tri_of = vec![usize::MAX; g.n];
    let mut triangles = Vec::new();
    for v in 0..g.n {
        let ones = g
            .incident_edges(v)
            .into_iter()
            .filter(|&e| x[e] == one())
            .count();
        if ones != 1 {
            return Err(Error::BadPoint(format!(
                "vertex {v} has {ones} incident 1-edges, wanted one"
            )));
        }
    }
    for v in 0..g.n {
        if tri_of[v] != usize::MAX {
            continue;
        }
        // walk the half-edges from v; they must close a triangle
        let mut comp = vec![v];
        let mut frontier = vec![v];
        tri_of[v] = triangles.len();
        while let Some(u) = frontier.pop() {
            for e in g.incident_edges(u) {
                if x[e] != half {
                    continue;
                }
                let w = g.other_end(e, u);
                if tri_of[w] == usize::MAX {
                    tri_of[w] = triangles.len();
                    comp.push(w);
                    frontier.push(w);
                }
            }
        }
        if comp.len() != 3 {
            return Err(Error::BadPoint(format!(
                "half-edge component at vertex {v} has {} vertices, wanted a triangle",
                comp.len()
            )));
        }
        let t = [comp[0], comp[1], comp[2]];
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            let joined = g.edges.iter().enumerate().any(|(e, ed)| {
                x[e] == half && ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))
            });
            if !joined {
                return Err(Error::BadPoint("half-edge component is not a triangle".into()));
            }
        }
        triangles.push(t);
    }
    // e* must avoid every 2-edge cut
    let mut caps: Vec<Rat> = vec![one(); g.m()];
    caps[estar] = zero();
    let (u, v) = g.endpoints(estar);
    let (flow, _) = g.max_flow(u, v, &caps);
    if flow < rat(2, 1) {
        return Err(Error::BadPoint("e* lies in a 2-edge cut".into()));
    }
    Ok(TrianglePoint {
        graph: g.clone(),
        x: x.to_vec(),
        estar,
        triangles,
    })
}

/// The vector with 7/8 off {e1, e2}, 3/4 on e1, 5/8 on e2, as a convex
/// combination of 2-edge-connected spanning subgraphs. e1 and e2 must
/// share an endpoint.
pub fn combo_a1(g: &Multigraph, e1: usize, e2: usize) -> Result<ConvexCombination> {
    if !g.is_cubic() {
        return Err(Error::NotCubic("combo a1".into()));
    }
    if g.edge_connectivity() < 3 {
        return Err(Error::NotEdgeConnected {
            need: 3,
            detail: "combo a1".into(),
        });
    }
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    let r = if a == c || a == d {
        a
    } else if b == c || b == d {
        b
    } else {
        return Err(Error::InvalidInput("e1 and e2 do not share an endpoint".into()));
    };
    if e1 == e2 {
        return Err(Error::InvalidInput("e1 and e2 must differ".into()));
    }
    let covers = crate::cycle_cover::cycle_cover_decomposition(g)?;
    let comb = trees_through_colors(
        g,
        &covers,
        r,
        |cover| {
            // an edge at r outside the cover forbids a rainbow at its far end
            let mut not_rainbow = Vec::new();
            for e in [e1, e2] {
                if cover[e] == 0 {
                    not_rainbow.push(g.other_end(e, r));
                }
            }
            PairingConstraints {
                rainbow: vec![r],
                not_rainbow,
            }
        },
        |_| RemovalPolicy::PreferEstar {
            e_star: e2,
            e_prime: e1,
        },
        TreeFactor::FiveEighths,
    )?;
    let agg = comb.aggregate();
    for e in 0..g.m() {
        let expect = if e == e1 {
            rat(3, 4)
        } else if e == e2 {
            rat(5, 8)
        } else {
            rat(7, 8)
        };
        if agg[e] != expect {
            return Err(Error::VerificationFailed(format!(
                "a1 aggregate on edge {} is {}, wanted {}",
                g.edges[e].label,
                crate::ratio::rat_to_string(&agg[e]),
                crate::ratio::rat_to_string(&expect)
            )));
        }
    }
    Ok(comb)
}

/// The vector with 7/8 off the neighborhood of e*, 19/24 on e*, 13/16 on
/// the four edges sharing an endpoint with e*. Average of four a1 calls
/// followed by padding e* from 3/4 up to 19/24.
pub fn combo_a2(g: &Multigraph, estar: usize) -> Result<ConvexCombination> {
    let (u, v) = g.endpoints(estar);
    let mut partners: Vec<usize> = Vec::new();
    for end in [u, v] {
        for e in g.incident_edges(end) {
            if e != estar && !partners.contains(&e) {
                partners.push(e);
            }
        }
    }
    if partners.len() != 4 {
        return Err(Error::InvalidInput(format!(
            "e* has {} distinct neighboring edges, wanted 4",
            partners.len()
        )));
    }
    let parts: Vec<ConvexCombination> = partners
        .iter()
        .map(|&p| combo_a1(g, estar, p))
        .collect::<Result<_>>()?;
    let weighted: Vec<(Rat, &ConvexCombination)> =
        parts.iter().map(|c| (rat(1, 4), c)).collect();
    let mut comb = ConvexCombination::mix(&weighted);
    comb.compact();
    let target: Vec<Rat> = (0..g.m())
        .map(|e| {
            if e == estar {
                rat(19, 24)
            } else if partners.contains(&e) {
                rat(13, 16)
            } else {
                rat(7, 8)
            }
        })
        .collect();
    comb.pad_to_target(&target, 1)?;
    Ok(comb)
}

/// Expands a combination on the triangle contraction to 2-edge-connected
/// multigraphs of the triangle point, six coupled members per input
/// member. `seed` rotates the tie-breaking between the equal-weight
/// choices.
pub fn base_expand_a3(
    point: &TrianglePoint,
    con: &Contraction,
    comb: &ConvexCombination,
    seed: u64,
) -> Result<ConvexCombination> {
    let gx = &point.graph;
    let gc = &con.graph;
    // G_x index of each contracted edge
    let mut lift = vec![usize::MAX; gc.m()];
    for (e, m) in con.edge_map.iter().enumerate() {
        if let Some(ce) = *m {
            lift[ce] = e;
        }
    }
    let estar_c = con.edge_map[point.estar].ok_or_else(|| {
        Error::DecompositionFailed("e* vanished in the contraction".into())
    })?;
    // per triangle: (vertices, their 1-edges, half-edges between the pairs)
    struct Tri {
        verts: [usize; 3],
        one_edges: [usize; 3],
        halves: [usize; 3], // halves[i] joins the two vertices other than verts[i]
    }
    let half = rat(1, 2);
    let mut tris = Vec::new();
    for t in &point.triangles {
        let one_of = |v: usize| -> Result<usize> {
            gx.incident_edges(v)
                .into_iter()
                .find(|&e| point.x[e] == one())
                .ok_or_else(|| Error::BadPoint("vertex without a 1-edge".into()))
        };
        let half_between = |a: usize, b: usize| -> Result<usize> {
            gx.edges
                .iter()
                .enumerate()
                .find(|(e, ed)| {
                    point.x[*e] == half
                        && ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))
                })
                .map(|(e, _)| e)
                .ok_or_else(|| Error::BadPoint("missing triangle side".into()))
        };
        tris.push(Tri {
            verts: *t,
            one_edges: [one_of(t[0])?, one_of(t[1])?, one_of(t[2])?],
            halves: [
                half_between(t[1], t[2])?,
                half_between(t[0], t[2])?,
                half_between(t[0], t[1])?,
            ],
        });
    }
    let mut tri_of = vec![usize::MAX; gx.n];
    for (i, t) in point.triangles.iter().enumerate() {
        for &v in t {
            tri_of[v] = i;
        }
    }
    let mut out = ConvexCombination::new(gx.m());
    for term in &comb.terms {
        if term.mults.iter().any(|&m| m > 1) {
            return Err(Error::DecompositionFailed(
                "base combination must consist of subgraphs".into(),
            ));
        }
        for jj in 0..6u64 {
            let j = ((jj + seed) % 6) as usize;
            let mut mults = vec![0u32; gx.m()];
            for ce in 0..gc.m() {
                let e = lift[ce];
                mults[e] = if term.mults[ce] == 1 {
                    1
                } else if ce == estar_c {
                    0
                } else {
                    2
                };
            }
            for (ti, tri) in tris.iter().enumerate() {
                let infs: Vec<bool> = tri
                    .one_edges
                    .iter()
                    .map(|&oe| term.mults[con.edge_map[oe].unwrap()] == 1)
                    .collect();
                let present = infs.iter().filter(|&&b| b).count();
                if present < 2 {
                    return Err(Error::DecompositionFailed(
                        "a member misses two 1-edges of one triangle".into(),
                    ));
                }
                let estar_at = tri
                    .one_edges
                    .iter()
                    .position(|&oe| oe == point.estar);
                let take = |mults: &mut Vec<u32>, edges: &[usize]| {
                    for &e in edges {
                        mults[e] += 1;
                    }
                };
                // an absent 1-edge is doubled; the two triangles at its
                // ends alternate in opposite phase so one of them always
                // keeps the corner attached to its triangle
                let phase = |miss: usize| -> usize {
                    let oe = tri.one_edges[miss];
                    let ed = &gx.edges[oe];
                    let pv = if ed.u == tri.verts[miss] { ed.v } else { ed.u };
                    (j + (ti > tri_of[pv]) as usize) % 2
                };
                match estar_at {
                    None => {
                        if present == 3 {
                            // one of the three pairs, each a third of the time
                            let skip = j % 3;
                            let pair: Vec<usize> = (0..3)
                                .filter(|&i| i != skip)
                                .map(|i| tri.halves[i])
                                .collect();
                            take(&mut mults, &pair);
                        } else {
                            let miss = infs.iter().position(|&b| !b).unwrap();
                            if phase(miss) == 0 {
                                // the side opposite the missing 1-edge
                                take(&mut mults, &[tri.halves[miss]]);
                            } else {
                                let both: Vec<usize> = (0..3)
                                    .filter(|&i| i != miss)
                                    .map(|i| tri.halves[i])
                                    .collect();
                                take(&mut mults, &both);
                            }
                        }
                    }
                    Some(su) => {
                        // u is the corner whose 1-edge is e*
                        if present == 3 {
                            // {uv, vw} or {uw, vw}: drop one side at u
                            let others: Vec<usize> =
                                (0..3).filter(|&i| i != su).collect();
                            let keep = others[j % 2];
                            let pair: Vec<usize> = (0..3)
                                .filter(|&i| i != keep)
                                .map(|i| tri.halves[i])
                                .collect();
                            take(&mut mults, &pair);
                        } else {
                            let miss = infs.iter().position(|&b| !b).unwrap();
                            if miss == su {
                                // e* absent: both sides at u, deterministic
                                let both: Vec<usize> = (0..3)
                                    .filter(|&i| i != su)
                                    .map(|i| tri.halves[i])
                                    .collect();
                                take(&mut mults, &both);
                            } else if phase(miss) == 0 {
                                take(&mut mults, &[tri.halves[miss]]);
                            } else {
                                let both: Vec<usize> = (0..3)
                                    .filter(|&i| i != miss)
                                    .map(|i| tri.halves[i])
                                    .collect();
                                take(&mut mults, &both);
                            }
                        }
                    }
                }
            }
            if mults[point.estar] > 1 {
                return Err(Error::DecompositionFailed("e* was doubled".into()));
            }
            if !gx.is_2ec(&mults) {
                return Err(Error::DecompositionFailed(
                    "expanded member is not 2-edge-connected".into(),
                ));
            }
            out.push(term.weight.clone() * rat(1, 6), mults);
        }
    }
    out.compact();
    Ok(out)
}

/// The z^{x,e*} certificate: a convex combination of 2-edge-connected
/// spanning multigraphs of the triangle point aggregating to exactly
/// z^{x,e*}, with e* used at most once in every member.
pub fn triangle_certificate(g: &Multigraph, x: &[Rat], estar: usize) -> Result<ConvexCombination> {
    let point = validate_triangle(g, x, estar)?;
    certify(&point, 0)
}

fn certify(point: &TrianglePoint, depth: usize) -> Result<ConvexCombination> {
    let con = point.contract_triangles();
    let gc = &con.graph;
    let estar_c = con.edge_map[point.estar]
        .ok_or_else(|| Error::DecompositionFailed("e* vanished in the contraction".into()))?;
    let two_cuts: Vec<Vec<bool>> = if gc.n >= 4 {
        gc.proper_cuts_upto(2)
            .into_iter()
            .filter(|s| gc.cut_edges(s).len() == 2)
            .collect()
    } else {
        Vec::new()
    };
    let mut comb = if two_cuts.is_empty() {
        let base = combo_a2(gc, estar_c)?;
        base_expand_a3(point, &con, &base, 0)?
    } else {
        split_and_glue(point, &con, &two_cuts, depth)?
    };
    let z = point.z_vector();
    comb.pad_to_target(&z, 2)?;
    for t in &comb.terms {
        if t.mults[point.estar] > 1 {
            return Err(Error::VerificationFailed("e* doubled after padding".into()));
        }
    }
    Ok(comb)
}

fn split_and_glue(
    point: &TrianglePoint,
    con: &Contraction,
    two_cuts: &[Vec<bool>],
    depth: usize,
) -> Result<ConvexCombination> {
    let gx = &point.graph;
    let gc = &con.graph;
    // pick the cut whose e*-free side is smallest, so that side's marker
    // cannot fall in a 2-edge cut of its piece
    let (eu, _) = gc.endpoints(con.edge_map[point.estar].unwrap());
    let mut best: Option<(Vec<bool>, usize)> = None;
    for cut in two_cuts {
        // orient the cut so `false` marks the e*-free side
        let side = if cut[eu] {
            cut.clone()
        } else {
            cut.iter().map(|&b| !b).collect()
        };
        let far = side.iter().filter(|&&b| !b).count();
        if best.as_ref().map_or(true, |(_, s)| far < *s) {
            best = Some((side, far));
        }
    }
    let (side, _) = best.unwrap();
    let cut_c = gc.cut_edges(&side);
    let cut_gx: Vec<usize> = cut_c
        .iter()
        .map(|&ce| {
            con.edge_map
                .iter()
                .position(|m| *m == Some(ce))
                .expect("cut edge exists upstairs")
        })
        .collect();
    let (f, h) = (cut_gx[0], cut_gx[1]);
    // endpoints of the cut edges on each side of the point graph
    let on_side1 = |v: usize| side[con.vertex_map[v]];
    let pick = |e: usize, want_side1: bool| -> usize {
        let (a, b) = gx.endpoints(e);
        if on_side1(a) == want_side1 {
            a
        } else {
            b
        }
    };
    let (u1, w1) = (pick(f, true), pick(f, false));
    let (v1, z1) = (pick(h, true), pick(h, false));
    let m1_label = format!("glue.{depth}.a");
    let m2_label = format!("glue.{depth}.b");
    let build_side = |keep1: bool, ma: usize, mb: usize, label: &str| -> (Multigraph, Vec<Rat>, usize) {
        let verts: Vec<usize> = (0..gx.n).filter(|&v| on_side1(v) == keep1).collect();
        let mut index = vec![usize::MAX; gx.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Multigraph::new(verts.len());
        let mut x = Vec::new();
        for (e, ed) in gx.edges.iter().enumerate() {
            if index[ed.u] != usize::MAX && index[ed.v] != usize::MAX {
                g.add_labeled_edge(index[ed.u], index[ed.v], ed.label.clone());
                x.push(point.x[e].clone());
            }
        }
        let marker = g.add_labeled_edge(index[ma], index[mb], label.to_string());
        x.push(one());
        (g, x, marker)
    };
    let (g1, x1, m1) = build_side(true, u1, v1, &m1_label);
    let (g2, x2, m2) = build_side(false, w1, z1, &m2_label);
    let estar1 = g1
        .edge_by_label(&gx.edges[point.estar].label)
        .ok_or_else(|| Error::DecompositionFailed("e* left its side".into()))?;
    let p1 = validate_triangle(&g1, &x1, estar1)?;
    let p2 = validate_triangle(&g2, &x2, m2)?;
    let c1 = certify(&p1, depth + 1)?;
    let c2 = certify(&p2, depth + 1)?;
    glue_2cut(gx, (&g1, &c1, m1), (&g2, &c2, m2), &[f, h])
}
