//! Convex combinations of edge multisets.

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::ratio::{one, rat_to_string, zero, Rat};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "crate::ratio::serde_rat")]
    pub weight: Rat,
    /// multiplicity per host edge index
    pub mults: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexCombination {
    /// number of edges of the host graph
    pub m: usize,
    pub terms: Vec<Term>,
}

impl ConvexCombination {
    pub fn new(m: usize) -> Self {
        ConvexCombination { m, terms: Vec::new() }
    }

    pub fn push(&mut self, weight: Rat, mults: Vec<u32>) {
        assert_eq!(mults.len(), self.m);
        assert!(weight > zero());
        self.terms.push(Term { weight, mults });
    }

    pub fn weight_sum(&self) -> Rat {
        let mut s = zero();
        for t in &self.terms {
            s = &s + &t.weight;
        }
        s
    }

    pub fn check_weights(&self) -> Result<()> {
        for t in &self.terms {
            if t.weight <= zero() {
                return Err(Error::VerificationFailed(format!(
                    "non-positive weight {}",
                    rat_to_string(&t.weight)
                )));
            }
            if t.mults.len() != self.m {
                return Err(Error::VerificationFailed(
                    "member multiplicity vector has the wrong length".into(),
                ));
            }
        }
        if self.weight_sum() != one() {
            return Err(Error::VerificationFailed(format!(
                "weights sum to {}, not 1",
                rat_to_string(&self.weight_sum())
            )));
        }
        Ok(())
    }

    pub fn aggregate(&self) -> Vec<Rat> {
        let mut agg = vec![zero(); self.m];
        for t in &self.terms {
            for (i, &k) in t.mults.iter().enumerate() {
                if k > 0 {
                    agg[i] = &agg[i] + &t.weight * Rat::from_integer(k.into());
                }
            }
        }
        agg
    }

    /// Merges identical members and drops zero-weight terms.
    pub fn compact(&mut self) {
        let mut merged: Vec<Term> = Vec::new();
        for t in self.terms.drain(..) {
            if t.weight == zero() {
                continue;
            }
            if let Some(prev) = merged.iter_mut().find(|p| p.mults == t.mults) {
                prev.weight = &prev.weight + &t.weight;
            } else {
                merged.push(t);
            }
        }
        self.terms = merged;
    }

    /// Convex mixture of combinations over the same host.
    pub fn mix(parts: &[(Rat, &ConvexCombination)]) -> Self {
        assert!(!parts.is_empty());
        let m = parts[0].1.m;
        let mut out = ConvexCombination::new(m);
        for (w, comb) in parts {
            assert_eq!(comb.m, m);
            for t in &comb.terms {
                let weight = w * &t.weight;
                if weight > zero() {
                    out.push(weight, t.mults.clone());
                }
            }
        }
        out.compact();
        out
    }

    /// Lifts members from a piece graph into the host graph by edge label.
    /// Host edges that have no preimage get multiplicity 0.
    pub fn relabel(&self, from: &Multigraph, to: &Multigraph) -> Result<Self> {
        assert_eq!(self.m, from.m());
        let to_idx = to.label_index();
        let mut map = Vec::with_capacity(from.m());
        for e in &from.edges {
            let idx = to_idx.get(&e.label).ok_or_else(|| {
                Error::GluingFailed(format!("edge label {} missing in host", e.label))
            })?;
            map.push(*idx);
        }
        let mut out = ConvexCombination::new(to.m());
        for t in &self.terms {
            let mut mults = vec![0u32; to.m()];
            for (i, &k) in t.mults.iter().enumerate() {
                mults[map[i]] += k;
            }
            out.push(t.weight.clone(), mults);
        }
        Ok(out)
    }

    /// Raises the aggregate up to `target` by adding edge copies to members,
    /// never exceeding `max_mult` copies per member. This is the constructive
    /// form of the dominance observation: adding edges keeps members
    /// 2-edge-connected, so a dominated combination can always be promoted to
    /// an exact one.
    pub fn pad_to_target(&mut self, target: &[Rat], max_mult: u32) -> Result<()> {
        assert_eq!(target.len(), self.m);
        for e in 0..self.m {
            let mut have = zero();
            for t in &self.terms {
                have = &have + &t.weight * Rat::from_integer(t.mults[e].into());
            }
            if have > target[e] {
                return Err(Error::DecompositionFailed(format!(
                    "aggregate {} exceeds target {} on edge {e}",
                    rat_to_string(&have),
                    rat_to_string(&target[e])
                )));
            }
            let mut deficit = &target[e] - &have;
            let mut j = 0;
            while deficit > zero() {
                if j >= self.terms.len() {
                    return Err(Error::DecompositionFailed(format!(
                        "cannot pad edge {e}: multiplicity cap {max_mult} reached"
                    )));
                }
                if self.terms[j].mults[e] >= max_mult {
                    j += 1;
                    continue;
                }
                let w = self.terms[j].weight.clone();
                if w <= deficit {
                    self.terms[j].mults[e] += 1;
                    deficit = &deficit - &w;
                    // the same member may still have headroom
                } else {
                    // split the member: a `deficit` slice takes the extra copy
                    let mut bumped = self.terms[j].mults.clone();
                    bumped[e] += 1;
                    self.terms[j].weight = &w - &deficit;
                    self.push(deficit.clone(), bumped);
                    deficit = zero();
                }
            }
        }
        self.compact();
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    #[test]
    fn aggregate_and_mix() {
        let mut a = ConvexCombination::new(2);
        a.push(rat(1, 2), vec![1, 0]);
        a.push(rat(1, 2), vec![0, 1]);
        assert_eq!(a.aggregate(), vec![rat(1, 2), rat(1, 2)]);
        a.check_weights().unwrap();

        let mut b = ConvexCombination::new(2);
        b.push(one(), vec![1, 1]);
        let mixed = ConvexCombination::mix(&[(rat(1, 3), &a), (rat(2, 3), &b)]);
        mixed.check_weights().unwrap();
        assert_eq!(mixed.aggregate(), vec![rat(5, 6), rat(5, 6)]);
    }

    #[test]
    fn padding_hits_target_exactly() {
        let mut c = ConvexCombination::new(2);
        c.push(rat(1, 2), vec![1, 0]);
        c.push(rat(1, 2), vec![1, 1]);
        c.pad_to_target(&[rat(1, 1), rat(7, 8)], 1).unwrap();
        c.check_weights().unwrap();
        assert_eq!(c.aggregate(), vec![rat(1, 1), rat(7, 8)]);
    }

    #[test]
    fn padding_with_doubling() {
        let mut c = ConvexCombination::new(1);
        c.push(one(), vec![1]);
        c.pad_to_target(&[rat(29, 24)], 2).unwrap();
        assert_eq!(c.aggregate(), vec![rat(29, 24)]);
        assert!(c.terms.iter().all(|t| t.mults[0] <= 2));
    }

    #[test]
    fn padding_respects_cap() {
        let mut c = ConvexCombination::new(1);
        c.push(one(), vec![1]);
        assert!(c.pad_to_target(&[rat(3, 2)], 1).is_err());
    }

    #[test]
    fn padding_rejects_excess() {
        let mut c = ConvexCombination::new(1);
        c.push(one(), vec![1]);
        assert!(c.pad_to_target(&[rat(1, 2)], 1).is_err());
    }
}
