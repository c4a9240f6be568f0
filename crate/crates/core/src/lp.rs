//! Exact two-phase tableau simplex with Bland's rule.
//!
//! Variables are free; constraints are `coeffs · x <= rhs`. The pivot rule is
//! fixed, so identical inputs always produce identical witnesses.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Self { coeffs, rhs }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        crate::linalg::dot(&self.coeffs, x) <= self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, witness: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("constraint {index} has {found} coefficients, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if self.rows[r][j].is_zero() {
                    continue;
                }
                let delta = &f * &self.rows[r][j];
                self.rows[i][j] -= delta;
            }
            let delta = &f * &self.rhs[r];
            self.rhs[i] -= delta;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · z` over the columns flagged in `allowed`. Returns
    /// `false` when unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            // Reduced costs c_j - c_B B^-1 A_j, entering by smallest index.
            let mut entering = None;
            for j in 0..cost.len() {
                if !allowed[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][c].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][c];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rational::zero, |i| self.rhs[i].clone())
    }
}

fn check_dims(nvars: usize, constraints: &[Inequality]) -> Result<(), LpError> {
    for (index, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != nvars {
            return Err(LpError::DimensionMismatch { index, expected: nvars, found: c.coeffs.len() });
        }
    }
    Ok(())
}

/// Maximizes `objective · x` subject to `constraints`.
pub fn maximize(objective: &[Rational], constraints: &[Inequality]) -> Result<LpOutcome, LpError> {
    let k = objective.len();
    check_dims(k, constraints)?;
    let m = constraints.len();
    // Columns: x+ (k), x- (k), slacks (m), artificials (one per negative rhs).
    let negative: Vec<usize> = (0..m).filter(|&i| constraints[i].rhs.is_negative()).collect();
    let ncols = 2 * k + m + negative.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        let flip = c.rhs.is_negative();
        let sign = if flip { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); ncols];
        for j in 0..k {
            row[j] = &sign * &c.coeffs[j];
            row[k + j] = -&row[j];
        }
        row[2 * k + i] = sign.clone();
        if flip {
            let a = 2 * k + m + negative.iter().position(|&x| x == i).unwrap();
            row[a] = Rational::one();
            basis.push(a);
        } else {
            basis.push(2 * k + i);
        }
        rows.push(row);
        rhs.push(&sign * &c.rhs);
    }
    let mut t = Tableau { rows, rhs, basis };

    if !negative.is_empty() {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(2 * k + m) {
            *c = -Rational::one();
        }
        let allowed = vec![true; ncols];
        t.optimize(&cost, &allowed);
        let infeasibility: Rational = (2 * k + m..ncols).map(|a| t.value_of(a)).sum();
        if infeasibility.is_positive() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive zero-level artificials out of the basis.
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= 2 * k + m {
                if let Some(c) = (0..2 * k + m).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, c);
                    r += 1;
                } else {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                }
            } else {
                r += 1;
            }
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..k {
        cost[j] = objective[j].clone();
        cost[k + j] = -objective[j].clone();
    }
    let allowed: Vec<bool> = (0..ncols).map(|j| j < 2 * k + m).collect();
    if !t.optimize(&cost, &allowed) {
        return Ok(LpOutcome::Unbounded);
    }
    let witness: Vec<Rational> = (0..k).map(|j| t.value_of(j) - t.value_of(k + j)).collect();
    let value = crate::linalg::dot(objective, &witness);
    Ok(LpOutcome::Optimal { value, witness })
}

/// A feasible point of the system, or `None` when infeasible.
pub fn feasible_point(nvars: usize, constraints: &[Inequality]) -> Result<Option<Vec<Rational>>, LpError> {
    let zero = vec![Rational::zero(); nvars];
    match maximize(&zero, constraints)? {
        LpOutcome::Optimal { witness, .. } => Ok(Some(witness)),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}
