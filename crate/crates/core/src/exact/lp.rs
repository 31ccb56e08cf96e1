//! Feasibility of `A x = b, x >= 0` by the phase-one simplex method.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, lowest-index
//! basic variable on ratio ties), so the method terminates and the returned
//! solution is a deterministic function of the input.

use num_traits::{Signed, Zero};

use super::{QVector, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A basic feasible solution, one entry per variable.
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides whether the equalities `row · x = rhs` have a solution with every
/// one of the `num_vars` variables nonnegative.
pub fn lp_feasible(equalities: &[(QVector, Rational)], num_vars: usize) -> Result<Feasibility> {
    for (i, (row, _)) in equalities.iter().enumerate() {
        if row.dim() != num_vars {
            return Err(Error::input(format!(
                "equality {i} has {} coefficients, expected {num_vars}",
                row.dim()
            )));
        }
    }
    Ok(Tableau::phase_one(equalities, num_vars).solve())
}

struct Tableau {
    n: usize,
    /// `rows[i]` holds `n + m` column entries followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs of the phase-one objective, same layout as a row.
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn phase_one(equalities: &[(QVector, Rational)], n: usize) -> Self {
        let m = equalities.len();
        let width = n + m + 1;
        let mut rows = Vec::with_capacity(m);
        for (i, (row, rhs)) in equalities.iter().enumerate() {
            // Artificial columns need a nonnegative right-hand side.
            let flip = rhs.is_negative();
            let mut r = Vec::with_capacity(width);
            r.extend(row.coords().iter().map(|a| if flip { -a } else { a.clone() }));
            r.extend((0..m).map(|k| if k == i { super::int(1) } else { Rational::zero() }));
            r.push(if flip { -rhs } else { rhs.clone() });
            rows.push(r);
        }
        let mut cost = vec![Rational::zero(); width];
        for r in &rows {
            for j in (0..n).chain(std::iter::once(n + m)) {
                cost[j] -= &r[j];
            }
        }
        Tableau {
            n,
            rows,
            cost,
            basis: (n..n + m).collect(),
        }
    }

    fn rhs(&self) -> usize {
        self.n + self.rows.len()
    }

    fn solve(mut self) -> Feasibility {
        while let Some(col) = (0..self.n).find(|&j| self.cost[j].is_negative()) {
            let rhs = self.rhs();
            let mut best: Option<(usize, Rational)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if !r[col].is_positive() {
                    continue;
                }
                let ratio = &r[rhs] / &r[col];
                let better = match &best {
                    None => true,
                    Some((b, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // The phase-one objective is bounded below by zero, so some row
            // always limits the step.
            let (row, _) = best.expect("phase-one objective is bounded");
            self.pivot(row, col);
        }
        let rhs = self.rhs();
        let infeasibility = self
            .rows
            .iter()
            .zip(&self.basis)
            .filter(|(_, &b)| b >= self.n)
            .fold(Rational::zero(), |acc, (r, _)| acc + &r[rhs]);
        if !infeasibility.is_zero() {
            return Feasibility::Infeasible;
        }
        let mut x = vec![Rational::zero(); self.n];
        for (r, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.n {
                x[b] = r[rhs].clone();
            }
        }
        Feasibility::Feasible(x)
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[row].clone();
        let eliminate = |target: &mut Vec<Rational>| {
            let f = target[col].clone();
            if f.is_zero() {
                return;
            }
            for (t, s) in target.iter_mut().zip(&pivot_row) {
                if !s.is_zero() {
                    *t -= &f * s;
                }
            }
        };
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(r);
            }
        }
        eliminate(&mut self.cost);
        self.basis[row] = col;
    }
}
