//! Acceptance suite. One test per criterion; each prints a pass/fail line.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use eccover::coloring::{
    classes_to_combination, color_3_5, color_5_8, color_4_5_vertex, select_five_colors,
    verify_admissible, LinkColoring,
};
use eccover::comb::ConvexCombination;
use eccover::cycle_cover::cycle_cover_decomposition;
use eccover::gen;
use eccover::graph::Multigraph;
use eccover::io;
use eccover::pairing::{pair_half_edges, PairingConstraints};
use eccover::rainbow::{one_trees_to_spanning_trees, rainbow_one_trees, RemovalPolicy};
use eccover::ratio::{one, rat, Rat};
use eccover::square;
use eccover::tree::{subdivide, RootedTree};
use eccover::triangle;
use eccover::uniform;
use eccover::verify::{brute_force_dominates, min_cost_2ec, MemberPredicate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion<F: FnOnce()>(n: usize, desc: &str, f: F) {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(()) => println!("criterion {n} ({desc}): pass"),
        Err(e) => {
            println!("criterion {n} ({desc}): fail");
            resume_unwind(e);
        }
    }
}

fn check_subgraph_cover(g: &Multigraph, comb: &ConvexCombination, bound: &Rat) {
    comb.check_weights().unwrap();
    for t in &comb.terms {
        assert!(t.mults.iter().all(|&m| m <= 1), "member is not a subgraph");
        assert!(g.is_2ec(&t.mults), "member is not 2EC");
    }
    for a in comb.aggregate() {
        assert!(a <= *bound, "aggregate exceeds the bound");
    }
}

fn random_cubics(count: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let n = 6 + 2 * (out.len() % 6);
        if let Ok(g) = gen::random_cubic_3ec(n, seed) {
            out.push(g);
        }
        seed += 1;
    }
    out
}

#[test]
fn c1_uniform_cover_7_8() {
    criterion(1, "7/8 uniform cover", || {
        let mut graphs = vec![gen::k4(), gen::prism(), gen::petersen()];
        graphs.extend(random_cubics(50));
        let bound = rat(7, 8);
        for g in &graphs {
            let start = Instant::now();
            let comb = uniform::cover_7_8(g).unwrap();
            check_subgraph_cover(g, &comb, &bound);
            assert!(start.elapsed().as_secs() < 60, "instance exceeded 60 s");
        }
    });
}

#[test]
fn c2_uniform_cover_13_15() {
    criterion(2, "13/15 uniform cover", || {
        let bound = rat(13, 15);
        let start = Instant::now();
        let g = gen::k4();
        check_subgraph_cover(
            &g,
            &uniform::cover_13_15(&g, &gen::k4_coloring()).unwrap(),
            &bound,
        );
        let g = gen::k33();
        check_subgraph_cover(
            &g,
            &uniform::cover_13_15(&g, &gen::k33_coloring()).unwrap(),
            &bound,
        );
        assert!(start.elapsed().as_secs() < 10);
    });
}

#[test]
fn c3_oracle_agreement() {
    criterion(3, "oracle agreement", || {
        // on every instance small enough for the oracle, its verdict must
        // match what the pipeline achieves
        let pred = MemberPredicate::TwoEcSubgraph;
        for g in [gen::k4(), gen::prism()] {
            let comb = uniform::cover_7_8(&g).unwrap();
            check_subgraph_cover(&g, &comb, &rat(7, 8));
            let y: Vec<Rat> = (0..g.m()).map(|_| rat(7, 8)).collect();
            assert!(brute_force_dominates(&g, &y, pred).unwrap());
        }
        let g = gen::k33();
        let comb = uniform::cover_13_15(&g, &gen::k33_coloring()).unwrap();
        check_subgraph_cover(&g, &comb, &rat(13, 15));
        let y: Vec<Rat> = (0..g.m()).map(|_| rat(13, 15)).collect();
        assert!(brute_force_dominates(&g, &y, pred).unwrap());
        // below the LP bound nothing can work, and the pipeline agrees by
        // refusing: sum of any 2EC subgraph of K4 is at least 4 edges
        let g = gen::k4();
        let y: Vec<Rat> = (0..g.m()).map(|_| rat(5, 8)).collect();
        assert!(!brute_force_dominates(&g, &y, pred).unwrap());
        // the 4-cycle at x = 1 is exactly its own certificate
        let g = gen::cycle(4);
        let y: Vec<Rat> = (0..g.m()).map(|_| one()).collect();
        assert!(brute_force_dominates(&g, &y, pred).unwrap());
    });
}

#[test]
fn c4_square_points_9_7() {
    criterion(4, "9/7 square points", || {
        let mut instances: Vec<io::Instance> = (2..=6).map(gen::k_donut).collect();
        instances.push(gen::square_point_from_4regular(&gen::doubled_cycle(3)).unwrap());
        for inst in &instances {
            let start = Instant::now();
            let comb = square::square_certificate(&inst.graph, &inst.x).unwrap();
            comb.check_weights().unwrap();
            for t in &comb.terms {
                assert!(t.mults.iter().all(|&m| m <= 2));
                assert!(inst.graph.is_2ec(&t.mults));
            }
            let agg = comb.aggregate();
            for e in 0..inst.graph.m() {
                let cap = rat(9, 7) * &inst.x[e];
                assert!(agg[e] <= cap);
                if inst.x[e] == rat(1, 2) {
                    // equality at 9/14 on half edges
                    assert_eq!(agg[e], rat(9, 14));
                }
            }
            assert!(start.elapsed().as_secs() < 60);
        }
    });
}

#[test]
fn c5_matchings_1_10() {
    criterion(5, "P(G,1/10) matchings", || {
        for g in [gen::octahedron(), gen::k5(), gen::doubled_cycle(4)] {
            let start = Instant::now();
            let comb = square::p_matchings_1_10(&g).unwrap();
            comb.check_weights().unwrap();
            for t in &comb.terms {
                // matching with a 2-vertex-connected min-degree-3 complement
                for v in 0..g.n {
                    let picked: u32 =
                        g.incident_edges(v).iter().map(|&e| t.mults[e]).sum();
                    assert!(picked <= 1);
                }
                let comp: Vec<u32> = t.mults.iter().map(|&m| 1 - m).collect();
                assert!(g.is_2vc(&comp));
                for v in 0..g.n {
                    let deg: u32 = g.incident_edges(v).iter().map(|&e| comp[e]).sum();
                    assert!(deg >= 3);
                }
            }
            for a in comb.aggregate() {
                assert_eq!(a, rat(1, 10));
            }
            assert!(start.elapsed().as_secs() < 30);
        }
    });
}

#[test]
fn c6_donut_anchors() {
    criterion(6, "k-donut anchors", || {
        for k in 2..=6usize {
            let inst = gen::k_donut(k);
            let cost = inst.cost.clone().unwrap();
            let frac: Rat = cost.iter().zip(&inst.x).map(|(c, x)| c * x).sum();
            assert_eq!(frac, rat(5 * k as i64, 1));
            if k <= 3 {
                let (opt, sol) = min_cost_2ec(&inst.graph, &cost).unwrap();
                assert!(inst.graph.is_2ec(&sol));
                assert_eq!(opt, rat(6 * k as i64 - 2, 1));
            }
            let (inst2, comb) = square::donut_certificate(k).unwrap();
            let agg = comb.aggregate();
            let a_value = rat(6, 5) - rat(2, 5 * k as i64);
            for e in 0..inst2.graph.m() {
                if inst2.x[e] == one() {
                    assert_eq!(agg[e], a_value);
                }
            }
        }
    });
}

#[test]
fn c7_triangle_points() {
    criterion(7, "triangle points", || {
        for inst in [gen::triangulated_k4(), gen::triangle_point_with_2cut()] {
            let start = Instant::now();
            let estar = inst.estar.unwrap();
            let point =
                triangle::validate_triangle(&inst.graph, &inst.x, estar).unwrap();
            let z = point.z_vector();
            let comb =
                triangle::triangle_certificate(&inst.graph, &inst.x, estar).unwrap();
            comb.check_weights().unwrap();
            for t in &comb.terms {
                assert!(inst.graph.is_2ec(&t.mults));
                assert!(t.mults[estar] <= 1, "estar doubled in a member");
            }
            let agg = comb.aggregate();
            for e in 0..inst.graph.m() {
                assert!(agg[e] <= z[e]);
                assert!(
                    [rat(29, 24), rat(19, 24), rat(29, 48)].contains(&z[e]),
                    "unexpected z class"
                );
                // z is dominated by (6/5 + 1/120) x, so any nonnegative
                // cost ratio bound follows
                assert!(z[e] <= rat(29, 24) * &inst.x[e]);
            }
            assert!(start.elapsed().as_secs() < 60);
        }
    });
}

fn pipeline_trees(g: &Multigraph, r: usize) -> Vec<RootedTree> {
    let mut out = Vec::new();
    let Ok(covers) = cycle_cover_decomposition(g) else {
        return out;
    };
    for cov in &covers.terms {
        let cons = PairingConstraints { rainbow: vec![r], not_rainbow: vec![] };
        let Ok(pairing) = pair_half_edges(g, &cov.mults, &cons) else { continue };
        let Ok(ones) = rainbow_one_trees(g, &cov.mults, &pairing, r) else { continue };
        let Ok(trees) = one_trees_to_spanning_trees(
            g,
            &ones,
            &cov.mults,
            RemovalPolicy::CoverEdgeAtRoot { r },
        ) else {
            continue;
        };
        for t in &trees.terms {
            let edges: Vec<usize> = (0..g.m()).filter(|&e| t.mults[e] == 1).collect();
            out.push(RootedTree::from_edge_set(g, &edges, r).unwrap());
        }
    }
    out
}

fn leaf_matching_links(g: &Multigraph, t: &RootedTree) -> Vec<usize> {
    t.links()
        .into_iter()
        .filter(|&l| {
            let (u, v) = g.endpoints(l);
            u != t.root && v != t.root && t.is_leaf(g, u) && t.is_leaf(g, v)
        })
        .collect()
}

fn check_classes(g: &Multigraph, t: &RootedTree, col: &LinkColoring) {
    verify_admissible(g, t, col).unwrap();
    let comb = classes_to_combination(g, t, col);
    for term in &comb.terms {
        assert!(g.is_2ec(&term.mults), "augmented class not 2EC");
    }
}

/// Two random hamiltonian cycles overlay to a 4-regular multigraph.
fn random_4_regular(n: usize, rng: &mut ChaCha8Rng) -> Multigraph {
    loop {
        let mut g = Multigraph::new(n);
        let mut count = 0usize;
        for _ in 0..2 {
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            for i in 0..n {
                let (u, v) = (order[i], order[(i + 1) % n]);
                g.add_labeled_edge(u, v, format!("h{count}"));
                count += 1;
            }
        }
        if g.edge_connectivity() >= 4 {
            return g;
        }
    }
}

#[test]
fn c8_coloring_property_suite() {
    criterion(8, "coloring properties", || {
        // tree colorings from the uniform pipeline on random cubic graphs
        let mut done_3_5 = 0usize;
        let mut done_5_8 = 0usize;
        let mut seed = 1000u64;
        while done_3_5 < 1000 || done_5_8 < 1000 {
            let n = 6 + 2 * ((seed as usize) % 5);
            seed += 1;
            let Ok(g) = gen::random_cubic_3ec(n, seed) else { continue };
            for r in 0..2 {
                for t in pipeline_trees(&g, r) {
                    let lm = leaf_matching_links(&g, &t);
                    if done_3_5 < 1000 && lm.is_empty() {
                        if let Ok(col) = color_3_5(&g, &t) {
                            check_classes(&g, &t, &col);
                            done_3_5 += 1;
                        }
                    }
                    let mut ends = std::collections::HashSet::new();
                    let disjoint = lm.iter().all(|&l| {
                        let (u, v) = g.endpoints(l);
                        ends.insert(u) && ends.insert(v)
                    });
                    if done_5_8 < 1000 && disjoint {
                        if let Ok(col) = color_5_8(&g, &t) {
                            check_classes(&g, &t, &col);
                            done_5_8 += 1;
                        }
                    }
                }
            }
        }
        // vertex colorings on subdivided spanning trees of random 4-regular
        // 4-edge-connected multigraphs
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut done_4_5 = 0usize;
        while done_4_5 < 1000 {
            let n = 5 + (done_4_5 % 4);
            let g = random_4_regular(n, &mut rng);
            let Ok((t1, t2)) = eccover::treepack::two_disjoint_spanning_trees(&g)
            else {
                continue;
            };
            for edges in [&t1, &t2] {
                let mut tdeg = vec![0u32; g.n];
                for &e in edges.iter() {
                    let (u, v) = g.endpoints(e);
                    tdeg[u] += 1;
                    tdeg[v] += 1;
                }
                if tdeg.iter().any(|&d| d == 4) {
                    continue;
                }
                let root = (0..g.n).find(|&v| tdeg[v] == 1).unwrap();
                let tree = RootedTree::from_edge_set(&g, edges, root).unwrap();
                let sub = subdivide(&g, &tree);
                let col = color_4_5_vertex(&sub).unwrap();
                check_classes(&sub.graph, &sub.tree, &col);
                done_4_5 += 1;
            }
        }
        // the five-color selection claim over its entire input space
        let threes: Vec<u16> = (0u16..256).filter(|m| m.count_ones() == 3).collect();
        let fives: Vec<u16> = (0u16..256).filter(|m| m.count_ones() == 5).collect();
        for &aa in &threes {
            for &bb in &threes {
                for &c5 in &fives {
                    for a in (0..8).map(|i| 1u16 << i).filter(|&a| a & aa != 0) {
                        for b in (0..8).map(|i| 1u16 << i).filter(|&b| b & bb != 0) {
                            let s = select_five_colors(a, b, aa, bb, c5);
                            assert_eq!(s.count_ones(), 5);
                            assert!(s & a != 0 && s & b != 0);
                            assert!((s & aa).count_ones() >= 2);
                            assert!((s & bb).count_ones() >= 2);
                            assert!((s & c5).count_ones() >= 3);
                        }
                    }
                }
            }
        }
    });
}

#[test]
fn c9_determinism_and_roundtrip() {
    criterion(9, "determinism and round-trip", || {
        // same seed, same graph, byte-identical certificates
        let g1 = gen::random_cubic_3ec(12, 5).unwrap();
        let g2 = gen::random_cubic_3ec(12, 5).unwrap();
        assert_eq!(io::graph_to_json(&g1), io::graph_to_json(&g2));
        let c1 = serde_json::to_string(&uniform::cover_7_8(&g1).unwrap()).unwrap();
        let c2 = serde_json::to_string(&uniform::cover_7_8(&g2).unwrap()).unwrap();
        assert_eq!(c1, c2);
        // serialize-parse identity on instances and graphs, text and json
        let inst = gen::k_donut(3);
        let json = io::instance_to_json(&inst);
        assert_eq!(io::instance_to_json(&io::instance_from_json(&json).unwrap()), json);
        let text = io::instance_to_text(&inst);
        assert_eq!(io::instance_to_text(&io::parse_instance_text(&text).unwrap()), text);
        let gtext = io::graph_to_text(&g1);
        assert_eq!(io::graph_to_text(&io::parse_graph_text(&gtext).unwrap()), gtext);
        let comb = uniform::cover_7_8(&gen::k4()).unwrap();
        let cjson = serde_json::to_string(&comb).unwrap();
        let back: ConvexCombination = serde_json::from_str(&cjson).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), cjson);
    });
}
