//! Matching enumeration on small multigraphs.

use crate::graph::Multigraph;

/// All perfect matchings, each as a sorted list of edge indices.
pub fn perfect_matchings(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut matched = vec![false; g.n];
    let mut chosen = Vec::new();
    pm_search(g, &mut matched, &mut chosen, &mut out);
    out
}

fn pm_search(
    g: &Multigraph,
    matched: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(v) = (0..g.n).find(|&v| !matched[v]) else {
        out.push(chosen.clone());
        return;
    };
    for e in 0..g.m() {
        if !g.is_incident(e, v) {
            continue;
        }
        let w = g.other_end(e, v);
        if matched[w] {
            continue;
        }
        matched[v] = true;
        matched[w] = true;
        chosen.push(e);
        pm_search(g, matched, chosen, out);
        chosen.pop();
        matched[v] = false;
        matched[w] = false;
    }
}

/// All matchings (the empty one included), each as a sorted list of edge
/// indices.
pub fn all_matchings(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut matched = vec![false; g.n];
    let mut chosen = Vec::new();
    m_search(g, 0, &mut matched, &mut chosen, &mut out);
    out
}

fn m_search(
    g: &Multigraph,
    from: usize,
    matched: &mut Vec<bool>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if from == g.m() {
        out.push(chosen.clone());
        return;
    }
    m_search(g, from + 1, matched, chosen, out);
    let (u, v) = g.endpoints(from);
    if !matched[u] && !matched[v] {
        matched[u] = true;
        matched[v] = true;
        chosen.push(from);
        m_search(g, from + 1, matched, chosen, out);
        chosen.pop();
        matched[u] = false;
        matched[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn k4_perfect_matchings() {
        let pms = perfect_matchings(&gen::k4());
        assert_eq!(pms.len(), 3);
        for pm in &pms {
            assert_eq!(pm.len(), 2);
        }
    }

    #[test]
    fn petersen_has_six_pms() {
        assert_eq!(perfect_matchings(&gen::petersen()).len(), 6);
    }

    #[test]
    fn odd_cycle_has_no_pm() {
        assert!(perfect_matchings(&gen::cycle(5)).is_empty());
    }

    #[test]
    fn all_matchings_of_triangle() {
        // empty + three single edges
        assert_eq!(all_matchings(&gen::cycle(3)).len(), 4);
    }
}
