//! Phase-one simplex for the convex-combination feasibility problem
//! behind Newton polyhedron membership.
//!
//! Given points `g_1..g_t` and a target `a`, decide whether some
//! `λ ≥ 0` with `Σ λ_j = 1` satisfies `Σ λ_j g_j ≤ a` componentwise.
//! The tableau is exact over any [`OrderedField`]; pivoting uses Bland's
//! rule so the method terminates.

use crate::scalar::OrderedField;

/// Dense simplex tableau in standard form `A x = b, x ≥ 0, b ≥ 0`.
#[derive(Debug, Clone)]
pub struct Tableau<F> {
    rows: Vec<Vec<F>>,
    rhs: Vec<F>,
    /// Reduced costs of the minimization objective.
    cost: Vec<F>,
    value: F,
    basis: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Optimal,
    Unbounded,
}

impl<F: OrderedField> Tableau<F> {
    /// `rows`/`rhs` must already be in canonical form for `basis`
    /// (identity columns, `rhs ≥ 0`), and `cost` reduced accordingly.
    pub fn new(rows: Vec<Vec<F>>, rhs: Vec<F>, cost: Vec<F>, value: F, basis: Vec<usize>) -> Self {
        debug_assert_eq!(rows.len(), rhs.len());
        debug_assert_eq!(rows.len(), basis.len());
        Tableau {
            rows,
            rhs,
            cost,
            value,
            basis,
        }
    }

    pub fn value(&self) -> &F {
        &self.value
    }

    /// Current value of every variable.
    pub fn solution(&self) -> Vec<F> {
        let mut x = vec![F::zero(); self.cost.len()];
        for (r, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[r].clone();
        }
        x
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.rhs[row] = self.rhs[row].clone() / p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let f = self.rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.rows[r].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
            self.rhs[r] = self.rhs[r].clone() - f * pivot_rhs.clone();
        }
        let f = self.cost[col].clone();
        if !f.is_zero() {
            for (c, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *c = c.clone() - f.clone() * pv.clone();
                }
            }
            // value tracks the objective: z = value + Σ cost_j x_j over nonbasics
            self.value = self.value.clone() + f * pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Minimizes the objective with Bland's rule.
    pub fn minimize(&mut self) -> Outcome {
        loop {
            let Some(col) = self.cost.iter().position(|c| c.is_negative()) else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, F)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[r].clone() / a.clone();
                best = match best {
                    None => Some((r, ratio)),
                    Some((br, bratio)) => {
                        if ratio < bratio || (ratio == bratio && self.basis[r] < self.basis[br]) {
                            Some((r, ratio))
                        } else {
                            Some((br, bratio))
                        }
                    }
                };
            }
            match best {
                None => return Outcome::Unbounded,
                Some((r, _)) => self.pivot(r, col),
            }
        }
    }
}

/// Searches for weights `λ ≥ 0`, `Σ λ = 1`, with `Σ λ_j points[j] ≤ target`.
///
/// Returns the weights of a feasible point, or `None` when the target lies
/// outside `conv(points) + ℝ^n_{≥0}`. All points must have the target's
/// length.
pub fn convex_combination_below<F: OrderedField>(points: &[Vec<F>], target: &[F]) -> Option<Vec<F>> {
    let t = points.len();
    let n = target.len();
    if t == 0 || target.iter().any(|a| a.is_negative()) {
        return None;
    }
    // Columns: λ_0..λ_{t-1}, slack s_0..s_{n-1}, artificial r.
    let width = t + n + 1;
    let art = t + n;
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    let mut basis = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![F::zero(); width];
        for (j, p) in points.iter().enumerate() {
            row[j] = p[i].clone();
        }
        row[t + i] = F::one();
        rows.push(row);
        rhs.push(target[i].clone());
        basis.push(t + i);
    }
    let mut sum_row = vec![F::zero(); width];
    for v in sum_row.iter_mut().take(t) {
        *v = F::one();
    }
    sum_row[art] = F::one();
    rows.push(sum_row);
    rhs.push(F::one());
    basis.push(art);

    // Minimize r = 1 - Σ λ_j.
    let mut cost = vec![F::zero(); width];
    for c in cost.iter_mut().take(t) {
        *c = -F::one();
    }
    let mut tableau = Tableau::new(rows, rhs, cost, F::one(), basis);
    match tableau.minimize() {
        Outcome::Optimal if tableau.value().is_zero() => {
            let x = tableau.solution();
            Some(x[..t].to_vec())
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Ratio};

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn pts(v: &[&[i64]]) -> Vec<Vec<BigRational>> {
        v.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn midpoint_is_feasible() {
        let p = pts(&[&[2, 0], &[0, 2]]);
        let lambda = convex_combination_below(&p, &[q(1), q(1)]).unwrap();
        assert_eq!(lambda, vec![BigRational::new(1.into(), 2.into()); 2]);
    }

    #[test]
    fn below_the_segment_is_infeasible() {
        let p = pts(&[&[2, 0], &[0, 2]]);
        assert!(convex_combination_below(&p, &[q(1), q(0)]).is_none());
        assert!(convex_combination_below(&p, &[q(0), q(1)]).is_none());
    }

    #[test]
    fn vertices_are_feasible() {
        let p = pts(&[&[3, 1, 0], &[0, 2, 2], &[1, 1, 1]]);
        for v in &p {
            assert!(convex_combination_below(&p, v).is_some());
        }
    }

    #[test]
    fn works_over_machine_rationals() {
        let p: Vec<Vec<Ratio<i64>>> = vec![
            vec![Ratio::from_integer(3), Ratio::from_integer(0)],
            vec![Ratio::from_integer(0), Ratio::from_integer(3)],
        ];
        let target = [Ratio::from_integer(1), Ratio::from_integer(2)];
        let lambda = convex_combination_below(&p, &target).unwrap();
        let s: Ratio<i64> = lambda.iter().sum();
        assert_eq!(s, Ratio::from_integer(1));
        assert!(convex_combination_below(&p, &[Ratio::from_integer(1), Ratio::from_integer(1)]).is_none());
    }

    #[test]
    fn degenerate_inputs() {
        assert!(convex_combination_below::<BigRational>(&[], &[q(1)]).is_none());
        assert!(convex_combination_below(&pts(&[&[0, 0]]), &[q(0), q(0)]).is_some());
    }
}
