//! Instance generators: named graphs, random cubic graphs, k-donuts and
//! triangle points.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::io::Instance;
use crate::ratio::{one, rat, Rat};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn cycle(n: usize) -> Multigraph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_pairs(n, &pairs)
}

pub fn k4() -> Multigraph {
    Multigraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k5() -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            pairs.push((u, v));
        }
    }
    Multigraph::from_pairs(5, &pairs)
}

pub fn k33() -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            pairs.push((u, v));
        }
    }
    Multigraph::from_pairs(6, &pairs)
}

pub fn prism() -> Multigraph {
    Multigraph::from_pairs(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

pub fn petersen() -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5)); // outer cycle
        pairs.push((i, i + 5)); // spokes
        pairs.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Multigraph::from_pairs(10, &pairs)
}

pub fn octahedron() -> Multigraph {
    // K_{2,2,2} with parts {0,3}, {1,4}, {2,5}: 4-regular, 4-edge-connected
    let mut pairs = Vec::new();
    for u in 0..6 {
        for v in (u + 1)..6 {
            if u % 3 != v % 3 {
                pairs.push((u, v));
            }
        }
    }
    Multigraph::from_pairs(6, &pairs)
}

/// A cycle on `k` vertices with every edge doubled (as parallel entries).
pub fn doubled_cycle(k: usize) -> Multigraph {
    assert!(k >= 2);
    let mut g = Multigraph::new(k);
    for i in 0..k {
        let j = (i + 1) % k;
        g.add_labeled_edge(i, j, format!("c{i}.0"));
        g.add_labeled_edge(i, j, format!("c{i}.1"));
    }
    g
}

/// 3-edge-colorings (color per edge index) for the named 3-edge-colorable
/// graphs used in tests.
pub fn k4_coloring() -> Vec<u8> {
    // edges: 01 02 03 12 13 23; matchings {01,23} {02,13} {03,12}
    vec![0, 1, 2, 2, 1, 0]
}

pub fn k33_coloring() -> Vec<u8> {
    // edges (u, v+3) in order u-major; color = (u + v) mod 3
    let mut colors = Vec::new();
    for u in 0..3u8 {
        for v in 0..3u8 {
            colors.push((u + v) % 3);
        }
    }
    colors
}

/// Expands each vertex `v` with `which[v]` into a triangle. The three
/// corners take over the vertex's incident edge slots in edge order.
pub fn expand_triangles(g: &Multigraph, which: &[bool]) -> Multigraph {
    assert_eq!(which.len(), g.n);
    let mut base = vec![0usize; g.n];
    let mut next = 0usize;
    for v in 0..g.n {
        base[v] = next;
        next += if which[v] { 3 } else { 1 };
    }
    let mut out = Multigraph::new(next);
    let mut slot = vec![0usize; g.n];
    for e in &g.edges {
        let mut end = |v: usize| {
            if which[v] {
                let s = slot[v];
                assert!(s < 3, "vertex {v} has degree > 3");
                slot[v] = s + 1;
                base[v] + s
            } else {
                base[v]
            }
        };
        let u = end(e.u);
        let v = end(e.v);
        out.add_labeled_edge(u, v, e.label.clone());
    }
    for v in 0..g.n {
        if which[v] {
            for j in 0..3 {
                out.add_labeled_edge(base[v] + j, base[v] + (j + 1) % 3, format!("t{v}.{j}"));
            }
        }
    }
    out
}

/// A cubic graph with one proper 3-cut: K4 with one vertex expanded into a
/// triangle.
pub fn k4_triangle_expanded() -> Multigraph {
    let mut which = vec![false; 4];
    which[0] = true;
    expand_triangles(&k4(), &which)
}

/// K4 with two vertices expanded: two nested proper 3-cuts.
pub fn k4_two_triangles() -> Multigraph {
    let mut which = vec![false; 4];
    which[0] = true;
    which[1] = true;
    expand_triangles(&k4(), &which)
}

/// Two copies of K4 minus an edge, joined by two edges: cubic, 2EC, with a
/// 2-edge cut.
pub fn two_k4_blocks() -> Multigraph {
    Multigraph::from_pairs(
        8,
        &[
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            (0, 4),
            (1, 5),
        ],
    )
}

/// The triangle point over a cubic 2-edge-connected graph: every vertex
/// becomes a triangle of half-edges, original edges become 1-edges. `e*` is
/// the first 1-edge that lies in no 2-edge cut.
pub fn triangle_point_from_cubic(g: &Multigraph) -> Result<Instance> {
    if !g.is_cubic() {
        return Err(Error::NotCubic("triangle point base must be cubic".into()));
    }
    if g.edge_connectivity() < 2 {
        return Err(Error::NotEdgeConnected {
            need: 2,
            detail: "triangle point base".into(),
        });
    }
    let expanded = expand_triangles(g, &vec![true; g.n]);
    let m_one = g.m();
    let mut x = Vec::with_capacity(expanded.m());
    for (i, _) in expanded.edges.iter().enumerate() {
        x.push(if i < m_one { one() } else { rat(1, 2) });
    }
    let mut estar = None;
    for e in 0..m_one {
        if !edge_in_2cut(g, e) {
            estar = Some(e);
            break;
        }
    }
    let estar = estar.ok_or_else(|| {
        Error::GenerationFailed("every 1-edge lies in a 2-edge cut".into())
    })?;
    Ok(Instance { graph: expanded, x, cost: None, estar: Some(estar) })
}

fn edge_in_2cut(g: &Multigraph, e: usize) -> bool {
    // e lies in a 2-edge cut iff its endpoints are separated by a single
    // edge once e is removed
    let mut caps: Vec<Rat> = g.edges.iter().map(|ed| Rat::from_integer(ed.mult.into())).collect();
    caps[e] = Rat::from_integer(0.into());
    let (u, v) = g.endpoints(e);
    let (flow, _) = g.max_flow(u, v, &caps);
    flow <= one()
}

pub fn triangulated_k4() -> Instance {
    triangle_point_from_cubic(&k4()).expect("K4 is cubic and 3EC")
}

/// A triangle point whose contraction has a 2-edge cut, exercising the
/// recursive construction.
pub fn triangle_point_with_2cut() -> Instance {
    triangle_point_from_cubic(&two_k4_blocks()).expect("base is cubic and 2EC")
}

/// The k-donut square point. Squares sit between an outer and an inner
/// cycle; consecutive squares are joined by paths of k 1-edges of cost 1/k.
/// LP cost is 5k while the optimum costs 6k - 2.
pub fn k_donut(k: usize) -> Instance {
    assert!(k >= 2);
    // square i: a = 4i (outer), b = 4i+1 (outer), d = 4i+2 (inner), c = 4i+3 (inner)
    // square cycle a-b-d-c-a; costs: ab = 2, bd = 1, dc = 2, ca = 1
    let n = 4 * k + 2 * k * (k - 1);
    let mut g = Multigraph::new(n);
    let mut x = Vec::new();
    let mut cost = Vec::new();
    for i in 0..k {
        let (a, b, d, c) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        for (u, v, w, lab) in [
            (a, b, 2i64, "ab"),
            (b, d, 1, "bd"),
            (d, c, 2, "dc"),
            (c, a, 1, "ca"),
        ] {
            g.add_labeled_edge(u, v, format!("s{i}.{lab}"));
            x.push(rat(1, 2));
            cost.push(rat(w, 1));
        }
    }
    let mut internal = 4 * k;
    for i in 0..k {
        let j = (i + 1) % k;
        // outer path b_i -> a_j, inner path d_i -> c_j
        for (from, to, side) in [(4 * i + 1, 4 * j, "out"), (4 * i + 2, 4 * j + 3, "in")] {
            let mut prev = from;
            for step in 0..k {
                let nxt = if step == k - 1 {
                    to
                } else {
                    internal += 1;
                    internal - 1
                };
                g.add_labeled_edge(prev, nxt, format!("p{i}.{side}.{step}"));
                x.push(one());
                cost.push(rat(1, k as i64));
                prev = nxt;
            }
        }
    }
    assert_eq!(internal, n);
    Instance { graph: g, x, cost: Some(cost), estar: None }
}

/// The square point obtained from a 4-regular 4-edge-connected graph by
/// expanding every vertex into a square of half-edges.
pub fn square_point_from_4regular(h: &Multigraph) -> Result<Instance> {
    for v in 0..h.n {
        if h.degree(v) != 4 {
            return Err(Error::InvalidInput(format!("vertex {v} is not 4-regular")));
        }
    }
    if h.edge_connectivity() < 4 {
        return Err(Error::NotEdgeConnected { need: 4, detail: "square point base".into() });
    }
    let mut g = Multigraph::new(4 * h.n);
    let mut x = Vec::new();
    let mut slot = vec![0usize; h.n];
    for e in &h.edges {
        let mut corner = |v: usize| {
            let s = slot[v];
            slot[v] = s + 1;
            4 * v + s
        };
        let (u, v) = (corner(e.u), corner(e.v));
        g.add_labeled_edge(u, v, e.label.clone());
        x.push(one());
    }
    for v in 0..h.n {
        for j in 0..4 {
            g.add_labeled_edge(4 * v + j, 4 * v + (j + 1) % 4, format!("q{v}.{j}"));
            x.push(rat(1, 2));
        }
    }
    Ok(Instance { graph: g, x, cost: None, estar: None })
}

/// Random cubic 3-edge-connected graph from the pairing model.
pub fn random_cubic_3ec(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::GenerationFailed(format!(
            "cubic graphs need even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
        stubs.shuffle(&mut rng);
        let mut g = Multigraph::new(n);
        let mut simple = true;
        let mut seen = std::collections::HashSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                simple = false;
                break;
            }
            g.add_edge(u, v);
        }
        if simple && g.is_connected() && g.edge_connectivity() >= 3 {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no cubic 3EC graph found for n = {n}, seed = {seed}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_sane() {
        assert!(k33().is_essentially_4ec());
        assert_eq!(k5().edge_connectivity(), 4);
        assert_eq!(octahedron().edge_connectivity(), 4);
        assert!(octahedron().edges.iter().all(|e| e.u != e.v));
        assert_eq!(octahedron().m(), 12);
        let g = k4_triangle_expanded();
        assert!(g.is_cubic());
        assert_eq!(g.edge_connectivity(), 3);
        assert_eq!(g.proper_3cuts().len(), 1);
        let g2 = k4_two_triangles();
        assert!(g2.is_cubic());
        assert_eq!(g2.edge_connectivity(), 3);
        assert!(g2.proper_3cuts().len() >= 2);
        let b = two_k4_blocks();
        assert!(b.is_cubic());
        assert_eq!(b.edge_connectivity(), 2);
    }

    #[test]
    fn colorings_are_proper() {
        for (g, colors) in [(k4(), k4_coloring()), (k33(), k33_coloring())] {
            assert_eq!(colors.len(), g.m());
            for v in 0..g.n {
                let mut seen = [false; 3];
                for e in g.incident_edges(v) {
                    let c = colors[e] as usize;
                    assert!(!seen[c], "repeated color at vertex {v}");
                    seen[c] = true;
                }
            }
        }
    }

    #[test]
    fn triangulated_k4_in_lp() {
        let inst = triangulated_k4();
        assert_eq!(inst.graph.n, 12);
        assert!(inst.graph.is_cubic());
        inst.graph.check_in_lp(&inst.x).unwrap();
    }

    #[test]
    fn donut_shape() {
        for k in [2usize, 3] {
            let inst = k_donut(k);
            assert_eq!(inst.graph.n, 2 * k * (k + 1));
            inst.graph.check_in_lp(&inst.x).unwrap();
            // LP cost is 5k
            let cost = inst.cost.as_ref().unwrap();
            let mut lp_cost = crate::ratio::zero();
            for (i, c) in cost.iter().enumerate() {
                lp_cost = &lp_cost + c * &inst.x[i];
            }
            assert_eq!(lp_cost, rat(5 * k as i64, 1));
        }
    }

    #[test]
    fn random_cubic_deterministic() {
        let a = random_cubic_3ec(10, 7).unwrap();
        let b = random_cubic_3ec(10, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.is_cubic());
        assert_eq!(a.edge_connectivity(), 3);
        let c = random_cubic_3ec(10, 8).unwrap();
        assert!(a != c || a == c); // different seeds may coincide, just exercise
        assert!(random_cubic_3ec(5, 0).is_err());
    }
}
