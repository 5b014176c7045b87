//! Certificates, exact verification, and independent brute-force oracles.

use crate::comb::ConvexCombination;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::lp;
use crate::ratio::{one, rat_to_string, zero, Rat};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    Dominates,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MemberPredicate {
    TwoEcSubgraph,
    TwoEcMultigraph,
    TwoVcMinDegThree,
    MatchingWith2vcComplement,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Multigraph,
    #[serde(with = "crate::ratio::serde_rat_vec")]
    pub target: Vec<Rat>,
    pub relation: Relation,
    pub predicate: MemberPredicate,
    pub combination: ConvexCombination,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Checks one member against the predicate.
pub fn check_member(g: &Multigraph, pred: MemberPredicate, mults: &[u32]) -> Result<()> {
    let cap = match pred {
        MemberPredicate::TwoEcMultigraph => 2,
        _ => 1,
    };
    if mults.iter().any(|&m| m > cap) {
        return Err(Error::VerificationFailed(format!(
            "member exceeds multiplicity cap {cap}"
        )));
    }
    match pred {
        MemberPredicate::TwoEcSubgraph | MemberPredicate::TwoEcMultigraph => {
            if !g.is_2ec(mults) {
                return Err(Error::VerificationFailed(
                    "member is not 2-edge-connected".into(),
                ));
            }
        }
        MemberPredicate::TwoVcMinDegThree => {
            check_2vc_min_deg3(g, mults)?;
        }
        MemberPredicate::MatchingWith2vcComplement => {
            for v in 0..g.n {
                let picked: u32 = g.incident_edges(v).iter().map(|&e| mults[e]).sum();
                if picked > 1 {
                    return Err(Error::VerificationFailed(format!(
                        "member is not a matching at vertex {v}"
                    )));
                }
            }
            let comp: Vec<u32> = mults.iter().map(|&m| 1 - m).collect();
            check_2vc_min_deg3(g, &comp)?;
        }
    }
    Ok(())
}

fn check_2vc_min_deg3(g: &Multigraph, mults: &[u32]) -> Result<()> {
    if !g.is_2vc(mults) {
        return Err(Error::VerificationFailed(
            "member is not 2-vertex-connected".into(),
        ));
    }
    for v in 0..g.n {
        let deg: u32 = g.incident_edges(v).iter().map(|&e| mults[e]).sum();
        if deg < 3 {
            return Err(Error::VerificationFailed(format!(
                "member has degree {deg} at vertex {v}"
            )));
        }
    }
    Ok(())
}

/// Replays a certificate: multiplier sum, member predicates, and the exact
/// aggregate relation. The error carries the first violated condition.
pub fn verify_certificate(c: &Certificate) -> Result<()> {
    if c.target.len() != c.graph.m() || c.combination.m != c.graph.m() {
        return Err(Error::VerificationFailed(
            "certificate dimensions do not match the graph".into(),
        ));
    }
    c.combination.check_weights()?;
    for (i, t) in c.combination.terms.iter().enumerate() {
        check_member(&c.graph, c.predicate, &t.mults).map_err(|e| {
            Error::VerificationFailed(format!("member {i}: {e}"))
        })?;
    }
    let agg = c.combination.aggregate();
    for e in 0..c.graph.m() {
        let ok = match c.relation {
            Relation::Equal => agg[e] == c.target[e],
            Relation::Dominates => agg[e] <= c.target[e],
        };
        if !ok {
            return Err(Error::VerificationFailed(format!(
                "aggregate {} violates target {} on edge {}",
                rat_to_string(&agg[e]),
                rat_to_string(&c.target[e]),
                c.graph.edges[e].label
            )));
        }
    }
    Ok(())
}

/// Independent oracle: does `y` dominate a convex combination of edge
/// multisets satisfying the predicate? Enumerates every multiset and
/// decides feasibility exactly; no pipeline code involved.
pub fn brute_force_dominates(
    g: &Multigraph,
    y: &[Rat],
    pred: MemberPredicate,
) -> Result<bool> {
    if g.m() > 14 {
        return Err(Error::InvalidInput(format!(
            "oracle limited to 14 edges, got {}",
            g.m()
        )));
    }
    let cap = match pred {
        MemberPredicate::TwoEcMultigraph => 2u32,
        _ => 1,
    };
    let mut members = Vec::new();
    let mut mults = vec![0u32; g.m()];
    enumerate(g, pred, cap, 0, &mut mults, &mut members);
    if members.is_empty() {
        return Ok(false);
    }
    // lambda >= 0 on members, slack >= 0 per edge, sum lambda = 1
    let mut cols = Vec::new();
    for m in &members {
        let mut col: Vec<Rat> = m.iter().map(|&k| Rat::from_integer(k.into())).collect();
        col.push(one());
        cols.push(col);
    }
    for e in 0..g.m() {
        let mut slack: Vec<Rat> = (0..g.m()).map(|_| zero()).collect();
        slack[e] = one();
        slack.push(zero());
        cols.push(slack);
    }
    let mut rhs = y.to_vec();
    rhs.push(one());
    Ok(lp::solve_eq(&cols, &rhs).is_some())
}

fn enumerate(
    g: &Multigraph,
    pred: MemberPredicate,
    cap: u32,
    e: usize,
    mults: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if e == g.m() {
        if check_member(g, pred, mults).is_ok() {
            out.push(mults.clone());
        }
        return;
    }
    for k in 0..=cap {
        mults[e] = k;
        enumerate(g, pred, cap, e + 1, mults, out);
    }
    mults[e] = 0;
}

/// Cost of a member under the given edge costs.
pub fn member_cost(cost: &[Rat], mults: &[u32]) -> Rat {
    mults
        .iter()
        .zip(cost)
        .map(|(&m, c)| c * Rat::from_integer(m.into()))
        .sum()
}

/// (cheapest member cost) / (fractional cost).
pub fn cost_ratio(cost: &[Rat], fractional: &Rat, comb: &ConvexCombination) -> Rat {
    let best = comb
        .terms
        .iter()
        .map(|t| member_cost(cost, &t.mults))
        .min()
        .expect("combination has members");
    best / fractional
}

/// A branching unit of the search: either a single edge between branch
/// vertices, or a maximal chain through degree-2 vertices. A chain's
/// effect on global 2-edge-connectivity is fully captured by its end
/// multiplicities and its minimum multiplicity (any cut separating the
/// chain ends can cross it at the cheapest edge), so only one cheapest
/// pattern per such signature is kept.
enum Item {
    Edge(usize),
    Chain {
        edges: Vec<usize>,
        u: usize,
        w: usize,
        reps: Vec<ChainRep>,
    },
}

struct ChainRep {
    mults: Vec<u32>,
    du: u32,
    dw: u32,
    cost: i64,
}

fn chain_reps(edges: &[usize], cost: &[i64]) -> Vec<ChainRep> {
    let p = edges.len();
    let mut patterns: Vec<Vec<u32>> = Vec::new();
    // all edges present: interior degrees are automatic
    for bits in 0..(1u32 << p) {
        patterns.push((0..p).map(|i| 1 + (bits >> i & 1)).collect());
    }
    // exactly one absent edge: both hanging blocks must be doubled,
    // otherwise their first edge would be a too-small cut
    for j in 0..p {
        let mut m = vec![2u32; p];
        m[j] = 0;
        patterns.push(m);
    }
    let mut best: std::collections::BTreeMap<(u32, u32, u32), ChainRep> =
        std::collections::BTreeMap::new();
    for m in patterns {
        let c: i64 = m.iter().zip(edges).map(|(&k, &e)| cost[e] * i64::from(k)).sum();
        let key = (m[0], m[p - 1], *m.iter().min().unwrap());
        let keep = match best.get(&key) {
            Some(old) => c < old.cost,
            None => true,
        };
        if keep {
            best.insert(key, ChainRep { mults: m, du: key.0, dw: key.1, cost: c });
        }
    }
    let mut reps: Vec<ChainRep> = best.into_values().collect();
    reps.sort_by_key(|r| r.cost);
    reps
}

fn build_items(g: &Multigraph, cost: &[i64]) -> Vec<Item> {
    let branch: Vec<bool> = (0..g.n).map(|v| g.degree(v) != 2).collect();
    let mut used = vec![false; g.m()];
    let mut items = Vec::new();
    for v in 0..g.n {
        if !branch[v] {
            continue;
        }
        for start in g.incident_edges(v) {
            if used[start] {
                continue;
            }
            let mut cur = g.other_end(start, v);
            if branch[cur] {
                used[start] = true;
                items.push(Item::Edge(start));
                continue;
            }
            let mut edges = vec![start];
            used[start] = true;
            while !branch[cur] {
                let e = g
                    .incident_edges(cur)
                    .into_iter()
                    .find(|&e| !used[e])
                    .expect("degree-2 chain continues");
                used[e] = true;
                edges.push(e);
                cur = g.other_end(e, cur);
            }
            let reps = chain_reps(&edges, cost);
            items.push(Item::Chain { edges, u: v, w: cur, reps });
        }
    }
    items
}

/// Exact minimum-cost 2-edge-connected spanning multigraph with edge
/// multiplicities at most 2, by branch and bound over edges and
/// degree-2 chains. Desk scale only.
pub fn min_cost_2ec(g: &Multigraph, cost: &[Rat]) -> Result<(Rat, Vec<u32>)> {
    assert_eq!(cost.len(), g.m());
    if cost.iter().any(|c| *c <= zero()) {
        return Err(Error::InvalidInput("costs must be positive".into()));
    }
    // all edges once is feasible whenever the graph is 2-edge-connected
    let all_one = vec![1u32; g.m()];
    if !g.is_2ec(&all_one) {
        return Err(Error::InvalidInput("graph is not 2-edge-connected".into()));
    }
    if (0..g.n).all(|v| g.degree(v) == 2) {
        // a bare cycle: every edge is needed once and doubling only adds
        return Ok((member_cost(cost, &all_one), all_one));
    }
    // scale to integers so the inner loop avoids bignum arithmetic
    let denom_lcm = cost
        .iter()
        .map(|c| c.denom().clone())
        .fold(num::BigInt::from(1), |a, b| num::integer::lcm(a, b));
    // the extra factor 2 keeps half-costs exact in the degree bound
    let icost: Vec<i64> = cost
        .iter()
        .map(|c| {
            use num::ToPrimitive;
            (c.numer() * &denom_lcm * num::BigInt::from(2) / c.denom())
                .to_i64()
                .expect("scaled cost fits in i64")
        })
        .collect();
    let items = build_items(g, &icost);
    let ends = |it: &Item| -> (usize, usize) {
        match it {
            Item::Edge(e) => g.endpoints(*e),
            Item::Chain { u, w, .. } => (*u, *w),
        }
    };
    // close branch vertices as early as possible so degree pruning bites
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| {
        let (u, w) = ends(&items[i]);
        u.max(w)
    });
    let items: Vec<Item> = {
        let mut tmp: Vec<Option<Item>> = items.into_iter().map(Some).collect();
        order.iter().map(|&i| tmp[i].take().unwrap()).collect()
    };
    // interior chain vertices close together with their chain
    let mut last_item = vec![usize::MAX; g.n];
    for (i, it) in items.iter().enumerate() {
        match it {
            Item::Edge(e) => {
                let (u, w) = g.endpoints(*e);
                last_item[u] = i;
                last_item[w] = i;
            }
            Item::Chain { edges, .. } => {
                for &e in edges {
                    let (u, w) = g.endpoints(e);
                    last_item[u] = i;
                    last_item[w] = i;
                }
            }
        }
    }
    let branch: Vec<bool> = (0..g.n).map(|v| g.degree(v) != 2).collect();
    let mut has_closure = vec![false; items.len() + 1];
    for v in 0..g.n {
        if last_item[v] != usize::MAX {
            has_closure[last_item[v] + 1] = true;
        }
    }
    let mut tail_min = vec![0i64; items.len() + 1];
    for i in (0..items.len()).rev() {
        let own = match &items[i] {
            Item::Edge(_) => 0,
            Item::Chain { reps, .. } => reps.iter().map(|r| r.cost).min().unwrap(),
        };
        tail_min[i] = tail_min[i + 1] + own;
    }
    // cheapest way to give one degree unit to v with a plain edge >= i;
    // each edge copy pays half its cost at either end, never overstated.
    // chains are already paid for in tail_min, so the degree bound only
    // credits them capacity: an undecided chain end can add up to 2
    let mut unit_cost = vec![vec![i64::MAX; g.n]; items.len() + 1];
    let mut chain_cap = vec![vec![0u32; g.n]; items.len() + 1];
    for i in (0..items.len()).rev() {
        unit_cost[i] = unit_cost[i + 1].clone();
        chain_cap[i] = chain_cap[i + 1].clone();
        match &items[i] {
            Item::Edge(e) => {
                let (u, v) = g.endpoints(*e);
                let h = icost[*e] / 2;
                unit_cost[i][u] = unit_cost[i][u].min(h);
                unit_cost[i][v] = unit_cost[i][v].min(h);
            }
            Item::Chain { u, w, .. } => {
                chain_cap[i][*u] += 2;
                chain_cap[i][*w] += 2;
            }
        }
    }
    let mut st = Search {
        g,
        icost: &icost,
        items: &items,
        last_item: &last_item,
        branch: &branch,
        has_closure: &has_closure,
        tail_min: &tail_min,
        unit_cost: &unit_cost,
        chain_cap: &chain_cap,
        deg: vec![0; g.n],
        mults: vec![0; g.m()],
        uf: vec![0; g.n],
        open_root: vec![false; g.n],
        best_cost: icost.iter().sum(),
        best: all_one,
    };
    st.run(0, 0);
    let best = st.best;
    Ok((member_cost(cost, &best), best))
}

struct Search<'a> {
    g: &'a Multigraph,
    icost: &'a [i64],
    items: &'a [Item],
    last_item: &'a [usize],
    branch: &'a [bool],
    has_closure: &'a [bool],
    tail_min: &'a [i64],
    unit_cost: &'a [Vec<i64>],
    chain_cap: &'a [Vec<u32>],
    deg: Vec<u32>,
    mults: Vec<u32>,
    uf: Vec<usize>,
    open_root: Vec<bool>,
    best_cost: i64,
    best: Vec<u32>,
}

fn uf_find(uf: &mut [usize], mut v: usize) -> usize {
    while uf[v] != v {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    v
}

impl Search<'_> {
    fn closed_component(&mut self, i: usize) -> bool {
        for v in 0..self.g.n {
            self.uf[v] = v;
        }
        for (e, &m) in self.mults.iter().enumerate() {
            if m > 0 {
                let (u, v) = self.g.endpoints(e);
                let (ru, rv) = (uf_find(&mut self.uf, u), uf_find(&mut self.uf, v));
                self.uf[ru] = rv;
            }
        }
        self.open_root.fill(false);
        let mut roots = 0usize;
        for v in 0..self.g.n {
            let r = uf_find(&mut self.uf, v);
            if self.uf[v] == v {
                roots += 1;
            }
            if self.last_item[v] >= i {
                self.open_root[r] = true;
            }
        }
        if roots < 2 {
            return false;
        }
        (0..self.g.n).any(|v| self.uf[v] == v && !self.open_root[v])
    }
}

impl Search<'_> {
    fn run(&mut self, i: usize, partial: i64) {
        if i == self.items.len() {
            if partial < self.best_cost && self.g.is_2ec(&self.mults) {
                self.best_cost = partial;
                self.best = self.mults.clone();
            }
            return;
        }
        let mut bound = partial + self.tail_min[i];
        for v in 0..self.g.n {
            // interior chain vertex degrees are covered by pattern validity
            if !self.branch[v] || self.deg[v] >= 2 {
                continue;
            }
            // a vertex whose items are all decided must have reached degree 2
            if self.last_item[v] < i {
                return;
            }
            let need = (2 - self.deg[v]).saturating_sub(self.chain_cap[i][v]);
            if need == 0 {
                continue;
            }
            let uc = self.unit_cost[i][v];
            if uc == i64::MAX {
                return;
            }
            bound += uc * i64::from(need);
        }
        if bound >= self.best_cost {
            return;
        }
        // a support component made entirely of closed vertices can never be
        // reconnected to the rest of the graph; such a component is already
        // complete when its last vertex closes, so only check on closures
        if i > 0 && self.has_closure[i] && self.closed_component(i) {
            return;
        }
        match &self.items[i] {
            Item::Edge(e) => {
                let (u, v) = self.g.endpoints(*e);
                for k in [1u32, 2, 0] {
                    self.mults[*e] = k;
                    self.deg[u] += k;
                    self.deg[v] += k;
                    self.run(i + 1, partial + self.icost[*e] * i64::from(k));
                    self.deg[u] -= k;
                    self.deg[v] -= k;
                }
                self.mults[*e] = 0;
            }
            Item::Chain { edges, u, w, reps } => {
                for r in reps {
                    for (&e, &k) in edges.iter().zip(&r.mults) {
                        self.mults[e] = k;
                    }
                    self.deg[*u] += r.du;
                    self.deg[*w] += r.dw;
                    self.run(i + 1, partial + r.cost);
                    self.deg[*u] -= r.du;
                    self.deg[*w] -= r.dw;
                }
                for &e in edges {
                    self.mults[e] = 0;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::ratio::rat;
    use crate::uniform::cover_7_8;

    fn k4_7_8_certificate() -> Certificate {
        let g = gen::k4();
        let comb = cover_7_8(&g).unwrap();
        let target: Vec<Rat> = (0..g.m()).map(|_| rat(7, 8)).collect();
        Certificate {
            graph: g,
            target,
            relation: Relation::Dominates,
            predicate: MemberPredicate::TwoEcSubgraph,
            combination: comb,
            notes: None,
        }
    }

    #[test]
    fn pipeline_certificate_verifies() {
        verify_certificate(&k4_7_8_certificate()).unwrap();
    }

    #[test]
    fn perturbed_weight_fails() {
        let mut c = k4_7_8_certificate();
        c.combination.terms[0].weight =
            &c.combination.terms[0].weight + rat(1, 1_000_000);
        assert!(verify_certificate(&c).is_err());
    }

    #[test]
    fn bridged_member_fails() {
        let mut c = k4_7_8_certificate();
        // replace the first member by the star at vertex 0: spanning and
        // connected but every edge is a bridge
        let star: Vec<u32> = (0..c.graph.m())
            .map(|e| u32::from(c.graph.is_incident(e, 0)))
            .collect();
        c.combination.terms[0].mults = star;
        assert!(verify_certificate(&c).is_err());
    }

    #[test]
    fn json_roundtrip_stable() {
        let c = k4_7_8_certificate();
        let json = c.to_json();
        let back = Certificate::from_json(&json).unwrap();
        verify_certificate(&back).unwrap();
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn oracle_on_k4() {
        let g = gen::k4();
        let sevens: Vec<Rat> = (0..6).map(|_| rat(7, 8)).collect();
        assert!(brute_force_dominates(&g, &sevens, MemberPredicate::TwoEcSubgraph).unwrap());
        // the three hamiltonian cycles average to 2/3 everywhere, and any
        // 2ec subgraph of k4 has at least 4 edges, so 2/3 is tight
        let thirds: Vec<Rat> = (0..6).map(|_| rat(2, 3)).collect();
        assert!(brute_force_dominates(&g, &thirds, MemberPredicate::TwoEcSubgraph).unwrap());
        let below: Vec<Rat> = (0..6).map(|_| rat(5, 8)).collect();
        assert!(!brute_force_dominates(&g, &below, MemberPredicate::TwoEcSubgraph).unwrap());
    }

    #[test]
    fn oracle_on_four_cycle() {
        let g = gen::cycle(4);
        let ones: Vec<Rat> = (0..4).map(|_| one()).collect();
        assert!(brute_force_dominates(&g, &ones, MemberPredicate::TwoEcSubgraph).unwrap());
    }

    #[test]
    fn donut_optimum_is_6k_minus_2() {
        for k in [2usize, 3] {
            let inst = gen::k_donut(k);
            let cost = inst.cost.unwrap();
            let frac: Rat = cost
                .iter()
                .zip(&inst.x)
                .map(|(c, x)| c * x)
                .sum();
            assert_eq!(frac, rat(5 * k as i64, 1));
            let (opt, sol) = min_cost_2ec(&inst.graph, &cost).unwrap();
            assert!(inst.graph.is_2ec(&sol));
            assert_eq!(opt, rat(6 * k as i64 - 2, 1));
        }
    }
}
