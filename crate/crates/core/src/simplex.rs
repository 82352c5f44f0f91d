//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Solves `min c·x` subject to `A x = b`, `x >= 0`. Bland's rule (lowest
//! index enters, lowest basic index leaves on ratio ties) cannot cycle, so
//! the pivot sequence is finite and fully determined by the column order.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Rational>,
    pub objective: Rational,
    /// Row multipliers `y` with `c − yᵀA >= 0` and `y·b = objective`.
    pub duals: Vec<Rational>,
    /// Basic column per row; values `>= x.len()` are leftover artificials
    /// on redundant rows.
    pub basis: Vec<usize>,
    pub pivots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("constraint matrix shape does not match b and c")]
    Shape,
    #[error("problem is infeasible")]
    Infeasible,
    #[error("objective is unbounded below")]
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    /// Reduced costs; the last entry holds minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    rhs: usize,
    pivots: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let pivot_row = core::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
        self.pivots += 1;
    }

    /// Runs Bland's rule over entering columns `0..allowed`.
    fn optimize(&mut self, allowed: usize) -> Result<(), LpError> {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.rhs] / &row[c];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let (r, _) = leave.ok_or(LpError::Unbounded)?;
            self.pivot(r, c);
        }
    }

    fn reprice(&mut self, c: &[Rational]) {
        let width = self.rhs + 1;
        let mut cost = vec![Rational::zero(); width];
        cost[..c.len()].clone_from_slice(c);
        for (i, row) in self.rows.iter().enumerate() {
            let cb = if self.basis[i] < c.len() { c[self.basis[i]].clone() } else { Rational::zero() };
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                if !row[j].is_zero() {
                    cost[j] -= &cb * &row[j];
                }
            }
        }
        self.cost = cost;
    }
}

pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> Result<LpSolution, LpError> {
    let m = a.len();
    let nv = c.len();
    if b.len() != m || a.iter().any(|row| row.len() != nv) {
        return Err(LpError::Shape);
    }
    let rhs = nv + m;
    let mut flipped = vec![false; m];
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        flipped[i] = neg;
        let mut row = vec![Rational::zero(); rhs + 1];
        for j in 0..nv {
            row[j] = if neg { -a[i][j].clone() } else { a[i][j].clone() };
        }
        row[nv + i] = Rational::one();
        row[rhs] = if neg { -b[i].clone() } else { b[i].clone() };
        rows.push(row);
    }
    let mut phase_one = vec![Rational::zero(); rhs];
    for v in &mut phase_one[nv..] {
        *v = Rational::one();
    }
    let mut t = Tableau { rows, cost: Vec::new(), basis: (nv..nv + m).collect(), rhs, pivots: 0 };
    t.reprice(&phase_one);
    t.optimize(nv)?;
    if t.cost[rhs].is_negative() {
        return Err(LpError::Infeasible);
    }
    // Pivot zero-level artificials out of the basis where possible; rows
    // where that fails are redundant.
    for i in 0..m {
        if t.basis[i] >= nv {
            if let Some(j) = (0..nv).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }
    t.reprice(c);
    t.optimize(nv)?;

    let mut x = vec![Rational::zero(); nv];
    for (i, &bj) in t.basis.iter().enumerate() {
        if bj < nv {
            x[bj] = t.rows[i][rhs].clone();
        }
    }
    let objective = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    let duals = (0..m)
        .map(|i| {
            let y = -t.cost[nv + i].clone();
            if flipped[i] {
                -y
            } else {
                y
            }
        })
        .collect();
    Ok(LpSolution { x, objective, duals, basis: t.basis, pivots: t.pivots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn r(v: i64) -> Rational {
        ratio(v, 1)
    }

    fn check_duality(a: &[Vec<Rational>], b: &[Rational], c: &[Rational], s: &LpSolution) {
        for (row, bi) in a.iter().zip(b) {
            let lhs: Rational = row.iter().zip(&s.x).map(|(aij, xj)| aij * xj).sum();
            assert_eq!(&lhs, bi);
        }
        for j in 0..c.len() {
            let col: Rational = a.iter().zip(&s.duals).map(|(row, y)| &row[j] * y).sum();
            assert!(c[j] >= col, "dual infeasible at column {j}");
        }
        let dual_value: Rational = s.duals.iter().zip(b).map(|(y, bi)| y * bi).sum();
        assert_eq!(dual_value, s.objective);
    }

    #[test]
    fn textbook_problem() {
        // min −x − y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6.
        let a = vec![vec![r(1), r(2), r(1), r(0)], vec![r(3), r(1), r(0), r(1)]];
        let b = vec![r(4), r(6)];
        let c = vec![r(-1), r(-1), r(0), r(0)];
        let s = minimize(&a, &b, &c).unwrap();
        assert_eq!(s.objective, ratio(-14, 5));
        assert_eq!(&s.x[..2], &[ratio(8, 5), ratio(6, 5)]);
        check_duality(&a, &b, &c, &s);
    }

    #[test]
    fn negative_rhs_and_redundant_row() {
        // x + y = 2 twice (once negated), min x.
        let a = vec![vec![r(1), r(1)], vec![r(-1), r(-1)]];
        let b = vec![r(2), r(-2)];
        let c = vec![r(1), r(0)];
        let s = minimize(&a, &b, &c).unwrap();
        assert_eq!(s.x, vec![r(0), r(2)]);
        check_duality(&a, &b, &c, &s);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let a = vec![vec![r(1)], vec![r(1)]];
        assert_eq!(minimize(&a, &[r(1), r(2)], &[r(0)]), Err(LpError::Infeasible));
        let a = vec![vec![r(1), r(-1)]];
        assert_eq!(minimize(&a, &[r(1)], &[r(0), r(-1)]), Err(LpError::Unbounded));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let a = vec![
            vec![ratio(1, 4), r(-8), r(-1), r(9), r(1), r(0), r(0)],
            vec![ratio(1, 2), r(-12), ratio(-1, 2), r(3), r(0), r(1), r(0)],
            vec![r(0), r(0), r(1), r(0), r(0), r(0), r(1)],
        ];
        let b = vec![r(0), r(0), r(1)];
        let c = vec![ratio(-3, 4), r(20), ratio(-1, 2), r(6), r(0), r(0), r(0)];
        let s = minimize(&a, &b, &c).unwrap();
        assert_eq!(s.objective, ratio(-5, 4));
        check_duality(&a, &b, &c, &s);
    }
}
