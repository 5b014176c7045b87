//! Exact rational feasibility LPs.
//!
//! Phase-1 simplex with Bland's rule over `BigRational`, sized for the small
//! systems that arise here (tens of rows, a few hundred columns).

use crate::ratio::{one, zero, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
}

/// Finds `lambda >= 0` with `sum_j lambda_j * cols[j]` related to `rhs`
/// row by row, or `None` if the system is infeasible.
pub fn solve(cols: &[Vec<Rat>], rels: &[Rel], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let m = rhs.len();
    assert_eq!(rels.len(), m);
    for c in cols {
        assert_eq!(c.len(), m);
    }
    let n = cols.len();
    let slacks: Vec<usize> = (0..m).filter(|&i| rels[i] == Rel::Le).collect();
    let total = n + slacks.len() + m; // structural, slack, artificial

    // tableau rows: [structural | slack | artificial | rhs]
    let mut t = vec![vec![zero(); total + 1]; m];
    for i in 0..m {
        for (j, col) in cols.iter().enumerate() {
            t[i][j] = col[i].clone();
        }
        t[i][total] = rhs[i].clone();
    }
    for (k, &i) in slacks.iter().enumerate() {
        t[i][n + k] = one();
    }
    // normalize rhs >= 0, then seed the basis with artificials
    for (i, row) in t.iter_mut().enumerate() {
        if row[total] < zero() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[n + slacks.len() + i] = one();
    }
    let art0 = n + slacks.len();
    let mut basis: Vec<usize> = (0..m).map(|i| art0 + i).collect();

    loop {
        // reduced cost of column j under the phase-1 objective
        let reduced = |t: &Vec<Vec<Rat>>, basis: &[usize], j: usize| -> Rat {
            let mut r = if j >= art0 { one() } else { zero() };
            for i in 0..m {
                if basis[i] >= art0 {
                    r = &r - &t[i][j];
                }
            }
            r
        };
        let mut entering = None;
        for j in 0..total {
            if basis.contains(&j) {
                continue;
            }
            if reduced(&t, &basis, j) < zero() {
                entering = Some(j);
                break;
            }
        }
        let Some(je) = entering else {
            // optimal; feasible iff all artificial basics carry zero
            let mut obj = zero();
            for i in 0..m {
                if basis[i] >= art0 {
                    obj = &obj + &t[i][total];
                }
            }
            if obj != zero() {
                return None;
            }
            let mut lambda = vec![zero(); n];
            for i in 0..m {
                if basis[i] < n {
                    lambda[basis[i]] = t[i][total].clone();
                }
            }
            return Some(lambda);
        };
        // ratio test, ties broken by smallest basis index (Bland)
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][je] > zero() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let ri = &t[i][total] / &t[i][je];
                        let rl = &t[l][total] / &t[l][je];
                        ri < rl || (ri == rl && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let il = leave.expect("phase-1 objective is bounded");
        let pivot = t[il][je].clone();
        for v in t[il].iter_mut() {
            *v = &*v / &pivot;
        }
        for i in 0..m {
            if i != il && t[i][je] != zero() {
                let factor = t[i][je].clone();
                for j in 0..=total {
                    let delta = &factor * &t[il][j];
                    t[i][j] = &t[i][j] - &delta;
                }
            }
        }
        basis[il] = je;
    }
}

/// Convenience wrapper: all rows are equalities.
pub fn solve_eq(cols: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    solve(cols, &vec![Rel::Eq; rhs.len()], rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;

    #[test]
    fn simple_convex_system() {
        // lambda1 * (1,0) + lambda2 * (0,1) = (1/3, 2/3)
        let cols = vec![vec![rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1)]];
        let l = solve_eq(&cols, &[rat(1, 3), rat(2, 3)]).unwrap();
        assert_eq!(l, vec![rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn infeasible_system() {
        let cols = vec![vec![rat(1, 1)]];
        assert!(solve_eq(&cols, &[rat(-1, 1)]).is_none());
        // nonnegative combination of (1,1) cannot hit (1,2)
        let cols = vec![vec![rat(1, 1), rat(1, 1)]];
        assert!(solve_eq(&cols, &[rat(1, 1), rat(2, 1)]).is_none());
    }

    #[test]
    fn inequality_rows() {
        // lambda <= bounds with an equality pin
        let cols = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(2, 1)]];
        let rels = [Rel::Eq, Rel::Le];
        let l = solve(&cols, &rels, &[rat(1, 1), rat(3, 2)]).unwrap();
        let combo0 = &l[0] + &l[1];
        let combo1 = &l[0] + &l[1] * rat(2, 1);
        assert_eq!(combo0, rat(1, 1));
        assert!(combo1 <= rat(3, 2));
    }

    #[test]
    fn degenerate_cycling_guard() {
        // a classic degenerate instance; Bland's rule must terminate
        let cols = vec![
            vec![rat(1, 4), rat(1, 2), rat(0, 1)],
            vec![rat(-8, 1), rat(-12, 1), rat(0, 1)],
            vec![rat(-1, 1), rat(-1, 2), rat(0, 1)],
            vec![rat(9, 1), rat(3, 1), rat(1, 1)],
        ];
        let rels = [Rel::Le, Rel::Le, Rel::Le];
        assert!(solve(&cols, &rels, &[rat(0, 1), rat(0, 1), rat(1, 1)]).is_some());
    }
}
