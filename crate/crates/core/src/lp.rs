//! Dense two-phase simplex over exact rational scalars.
//!
//! Bland's rule (lowest eligible index for both the entering column and the
//! tie-broken leaving row) guarantees termination, and exact arithmetic makes
//! the optimum a certificate: callers compare LP values with `==`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Constraint<R> {
    pub coeffs: Vec<R>,
    pub rel: Rel,
    pub rhs: R,
}

impl<R> Constraint<R> {
    pub fn le(coeffs: Vec<R>, rhs: R) -> Self {
        Constraint {
            coeffs,
            rel: Rel::Le,
            rhs,
        }
    }

    pub fn ge(coeffs: Vec<R>, rhs: R) -> Self {
        Constraint {
            coeffs,
            rel: Rel::Ge,
            rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Clone, Debug)]
pub struct LpSolution<R> {
    pub value: R,
    pub x: Vec<R>,
}

/// Solve `sense c·x  s.t.  constraints, x ≥ 0`.
pub fn solve<R: Scalar>(
    sense: Sense,
    objective: &[R],
    constraints: &[Constraint<R>],
) -> Result<LpSolution<R>> {
    let n = objective.len();
    let mut tab = Tableau::build(n, constraints);

    if tab.artificial_count > 0 {
        let phase1: Vec<R> = (0..tab.cols)
            .map(|j| {
                if j >= tab.artificial_start {
                    R::one()
                } else {
                    R::zero()
                }
            })
            .collect();
        tab.optimize(&phase1)?;
        if !tab.objective_value(&phase1).is_zero() {
            return Err(Error::LpInfeasible);
        }
        tab.evict_artificials();
    }

    let mut cost: Vec<R> = match sense {
        Sense::Minimize => objective.to_vec(),
        Sense::Maximize => objective.iter().map(|c| -c.clone()).collect(),
    };
    cost.resize(tab.cols, R::zero());
    tab.optimize(&cost)?;

    let x = tab.extract(n);
    let value = objective
        .iter()
        .zip(&x)
        .fold(R::zero(), |acc, (c, v)| acc + c.clone() * v.clone());
    Ok(LpSolution { value, x })
}

struct Tableau<R> {
    rows: Vec<Vec<R>>,
    rhs: Vec<R>,
    basis: Vec<usize>,
    cols: usize,
    artificial_start: usize,
    artificial_count: usize,
}

impl<R: Scalar> Tableau<R> {
    fn build(n: usize, constraints: &[Constraint<R>]) -> Self {
        let m = constraints.len();
        let slack_count = m;
        let artificial_count = constraints
            .iter()
            .filter(|c| {
                let neg = c.rhs < R::zero();
                match c.rel {
                    // after normalizing the rhs sign these need an artificial
                    Rel::Ge => !neg,
                    Rel::Le => neg,
                }
            })
            .count();
        let artificial_start = n + slack_count;
        let cols = artificial_start + artificial_count;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = artificial_start;

        for (r, con) in constraints.iter().enumerate() {
            assert_eq!(con.coeffs.len(), n, "constraint arity mismatch");
            let mut row = vec![R::zero(); cols];
            let negate = con.rhs < R::zero();
            for (j, c) in con.coeffs.iter().enumerate() {
                row[j] = if negate { -c.clone() } else { c.clone() };
            }
            let b = if negate {
                -con.rhs.clone()
            } else {
                con.rhs.clone()
            };
            let effective_rel = match (con.rel, negate) {
                (Rel::Le, false) | (Rel::Ge, true) => Rel::Le,
                (Rel::Ge, false) | (Rel::Le, true) => Rel::Ge,
            };
            match effective_rel {
                Rel::Le => {
                    row[n + r] = R::one();
                    basis.push(n + r);
                }
                Rel::Ge => {
                    row[n + r] = -R::one();
                    row[next_art] = R::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }

        Tableau {
            rows,
            rhs,
            basis,
            cols,
            artificial_start,
            artificial_count,
        }
    }

    fn reduced_costs(&self, cost: &[R]) -> Vec<R> {
        let mut red = cost.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !self.rows[r][j].is_zero() {
                    red[j] = red[j].clone() - cb.clone() * self.rows[r][j].clone();
                }
            }
        }
        red
    }

    fn objective_value(&self, cost: &[R]) -> R {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(R::zero(), |acc, (&b, v)| acc + cost[b].clone() * v.clone())
    }

    /// Minimize `cost` from the current feasible basis.
    // TODO: update reduced costs incrementally per pivot instead of
    // recomputing; fine at the problem sizes this crate targets.
    fn optimize(&mut self, cost: &[R]) -> Result<()> {
        loop {
            let red = self.reduced_costs(cost);
            let entering = match (0..self.cols).find(|&j| red[j] < R::zero()) {
                Some(j) => j,
                None => return Ok(()),
            };
            let mut leaving: Option<usize> = None;
            let mut best: Option<R> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][entering] <= R::zero() {
                    continue;
                }
                let ratio = self.rhs[r].clone() / self.rows[r][entering].clone();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && self.basis[r] < self.basis[leaving.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leaving = Some(r);
                }
            }
            let leaving = leaving.ok_or(Error::LpUnbounded)?;
            self.pivot(leaving, entering);
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        self.rhs[r] = self.rhs[r].clone() / p;
        for r2 in 0..self.rows.len() {
            if r2 == r || self.rows[r2][j].is_zero() {
                continue;
            }
            let f = self.rows[r2][j].clone();
            for c in 0..self.cols {
                let delta = f.clone() * self.rows[r][c].clone();
                self.rows[r2][c] = self.rows[r2][c].clone() - delta;
            }
            self.rhs[r2] = self.rhs[r2].clone() - f * self.rhs[r].clone();
        }
        self.basis[r] = j;
    }

    /// After phase 1: pivot zero-level artificials out of the basis, drop
    /// redundant rows, and truncate the artificial columns.
    fn evict_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.artificial_start {
                let pivot_col = (0..self.artificial_start)
                    .find(|&j| !self.rows[r][j].is_zero());
                match pivot_col {
                    Some(j) => self.pivot(r, j),
                    None => {
                        // all-zero over real variables: redundant constraint
                        self.rows.remove(r);
                        self.rhs.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        for row in &mut self.rows {
            row.truncate(self.artificial_start);
        }
        self.cols = self.artificial_start;
        self.artificial_count = 0;
    }

    fn extract(&self, n: usize) -> Vec<R> {
        let mut x = vec![R::zero(); n];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs[r].clone();
            }
        }
        x
    }
}
