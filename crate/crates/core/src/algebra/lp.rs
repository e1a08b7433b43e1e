//! Exact phase-1 simplex over the rationals.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// A system of linear constraints over free (unbounded) rational variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpVerdict {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpVerdict::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            LpVerdict::Feasible(w) => Some(w),
            LpVerdict::Infeasible => None,
        }
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coefficients: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coefficients.len() != self.num_vars {
            return Err(Error::ArityMismatch {
                expected: self.num_vars,
                found: coefficients.len(),
            });
        }
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// True iff `x` satisfies every constraint exactly.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c
                    .coefficients
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum();
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    /// Decides feasibility with a phase-1 simplex using Bland's rule.
    ///
    /// Each free variable is split as `v = v⁺ - v⁻`. Rows are negated where
    /// needed so every right-hand side is nonnegative; `≤` rows start with
    /// their slack basic, the others with an artificial. The sum of the
    /// artificials is minimised; the system is feasible iff it reaches zero.
    pub fn feasible(&self) -> LpVerdict {
        let m = self.constraints.len();
        let split = 2 * self.num_vars;
        let num_slack = self
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let art_start = split + num_slack;
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut artificial_rows = Vec::new();
        let mut slack = split;
        let mut num_art = 0;
        // Column layout: v⁺/v⁻ pairs, slacks, artificials, rhs.
        let mut layout = Vec::with_capacity(m);
        for c in &self.constraints {
            let flip = c.rhs.is_negative();
            let rel = match (c.relation, flip) {
                (Relation::Le, true) => Relation::Ge,
                (Relation::Ge, true) => Relation::Le,
                (r, _) => r,
            };
            let slack_col = (c.relation != Relation::Eq).then(|| {
                slack += 1;
                slack - 1
            });
            let art_col = (rel != Relation::Le).then(|| {
                num_art += 1;
                num_art - 1
            });
            layout.push((flip, rel, slack_col, art_col));
        }
        let width = art_start + num_art + 1;
        for (c, &(flip, rel, slack_col, art_col)) in self.constraints.iter().zip(&layout) {
            let sign = if flip { -Rational::one() } else { Rational::one() };
            let mut row = vec![Rational::zero(); width];
            for (j, a) in c.coefficients.iter().enumerate() {
                if !a.is_zero() {
                    let v = a * &sign;
                    row[2 * j + 1] = -v.clone();
                    row[2 * j] = v;
                }
            }
            if let Some(s) = slack_col {
                row[s] = if rel == Relation::Le {
                    Rational::one()
                } else {
                    -Rational::one()
                };
            }
            row[width - 1] = &c.rhs * &sign;
            match art_col {
                Some(a) => {
                    row[art_start + a] = Rational::one();
                    basis.push(art_start + a);
                    artificial_rows.push(rows.len());
                }
                None => basis.push(slack_col.expect("≤ rows have a slack")),
            }
            rows.push(row);
        }
        // Reduced costs of the phase-1 objective (minimise Σ artificials).
        let mut obj = vec![Rational::zero(); width];
        for j in art_start..art_start + num_art {
            obj[j] = Rational::one();
        }
        for &r in &artificial_rows {
            for j in 0..width {
                if !rows[r][j].is_zero() {
                    obj[j] -= &rows[r][j];
                }
            }
        }
        let mut tableau = Tableau { rows, basis, obj };
        tableau.run();
        // obj[rhs] holds minus the objective value.
        if !tableau.obj[width - 1].is_zero() {
            return LpVerdict::Infeasible;
        }
        let mut values = vec![Rational::zero(); width - 1];
        for (r, &b) in tableau.basis.iter().enumerate() {
            values[b] = tableau.rows[r][width - 1].clone();
        }
        let x: Vec<Rational> = (0..self.num_vars)
            .map(|j| &values[2 * j] - &values[2 * j + 1])
            .collect();
        assert!(self.is_satisfied_by(&x), "simplex produced an invalid witness");
        LpVerdict::Feasible(x)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    obj: Vec<Rational>,
}

impl Tableau {
    fn run(&mut self) {
        let rhs = self.obj.len() - 1;
        // Bland: smallest improving column, then smallest basic index among ties.
        while let Some(enter) = (0..rhs).find(|&j| self.obj[j].is_negative()) {
            let mut leave: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            // Phase 1 is bounded below by zero, so a leaving row exists.
            let (r, _) = leave.expect("phase-1 objective is bounded");
            self.pivot(r, enter);
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for e in &mut self.rows[r] {
                if !e.is_zero() {
                    *e /= &p;
                }
            }
        }
        let pivot_row = self.rows[r].clone();
        let nz: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &j in &nz {
                row[j] -= &f * &pivot_row[j];
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.basis[r] = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn contradictory_bounds_infeasible() {
        let mut lp = LinearProgram::new(1);
        lp.add(vec![int(1)], Relation::Ge, int(1)).unwrap();
        lp.add(vec![int(1)], Relation::Le, int(-1)).unwrap();
        assert_eq!(lp.feasible(), LpVerdict::Infeasible);
    }

    #[test]
    fn single_lower_bound_feasible() {
        let mut lp = LinearProgram::new(1);
        lp.add(vec![int(1)], Relation::Ge, int(1)).unwrap();
        let w = lp.feasible();
        assert!(lp.is_satisfied_by(w.witness().unwrap()));
    }

    #[test]
    fn equalities_and_negative_rhs() {
        let mut lp = LinearProgram::new(3);
        lp.add(vec![int(1), int(1), int(0)], Relation::Eq, int(-2)).unwrap();
        lp.add(vec![int(0), int(1), int(-1)], Relation::Le, int(-5)).unwrap();
        lp.add(vec![int(1), int(0), int(1)], Relation::Ge, int(3)).unwrap();
        let v = lp.feasible();
        assert!(lp.is_satisfied_by(v.witness().unwrap()));
    }

    #[test]
    fn empty_system_feasible() {
        let lp = LinearProgram::new(2);
        assert_eq!(lp.feasible(), LpVerdict::Feasible(vec![int(0), int(0)]));
    }

    #[test]
    fn wrong_width_rejected() {
        let mut lp = LinearProgram::new(2);
        assert!(lp.add(vec![int(1)], Relation::Le, int(0)).is_err());
    }
}
