//! Exact rational linear programming.
//!
//! A dense two-phase simplex with Bland's rule. Every outcome carries a
//! certificate that [`verify_outcome`] re-checks by direct substitution:
//! a feasible point for `Optimal`, Farkas multipliers for `Infeasible`,
//! and a feasible point plus an improving ray for `Unbounded`.
//!
//! Farkas convention: the certificate is `y = (y_eq, y_le)` with
//! `y_le >= 0`. Setting `g = y_eq^T A_eq + y_le^T A_le`, it must hold
//! that `g_j >= 0` for sign-restricted variables, `g_j = 0` for free ones,
//! and `y_eq^T b_eq + y_le^T b_le < 0`. Any feasible `x` would give
//! `0 <= g^T x <= y^T b < 0`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::point::RatVector;
use crate::rat::Rat;

/// `minimize objective . x` subject to `a_eq x = b_eq`, `a_le x <= b_le`
/// and `x_j >= 0` wherever `nonneg[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rat>,
    pub a_eq: Vec<Vec<Rat>>,
    pub b_eq: Vec<Rat>,
    pub a_le: Vec<Vec<Rat>>,
    pub b_le: Vec<Rat>,
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    /// A feasibility problem over `num_vars` nonnegative variables.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rat::zero(); num_vars],
            a_eq: Vec::new(),
            b_eq: Vec::new(),
            a_le: Vec::new(),
            b_le: Vec::new(),
            nonneg: vec![true; num_vars],
        }
    }

    pub fn add_eq(&mut self, row: Vec<Rat>, rhs: Rat) {
        self.a_eq.push(row);
        self.b_eq.push(rhs);
    }

    pub fn add_le(&mut self, row: Vec<Rat>, rhs: Rat) {
        self.a_le.push(row);
        self.b_le.push(rhs);
    }

    /// `row . x >= rhs`, stored as `-row . x <= -rhs`.
    pub fn add_ge(&mut self, row: Vec<Rat>, rhs: Rat) {
        self.add_le(row.into_iter().map(|r| -r).collect(), -rhs);
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars;
        let bad = |what: &str| Err(Error::input(format!("malformed LP: {what}")));
        if self.objective.len() != n {
            return bad("objective length");
        }
        if self.nonneg.len() != n {
            return bad("nonneg mask length");
        }
        if self.a_eq.len() != self.b_eq.len() || self.a_le.len() != self.b_le.len() {
            return bad("row count differs from right-hand side length");
        }
        if self.a_eq.iter().chain(&self.a_le).any(|r| r.len() != n) {
            return bad("row length differs from variable count");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    /// Optimal point, or a feasible point when unbounded.
    pub solution: Option<RatVector>,
    pub value: Option<Rat>,
    /// Farkas multipliers `(y_eq, y_le)` when infeasible.
    pub infeasibility_certificate: Option<RatVector>,
    /// Feasible direction with negative objective slope when unbounded.
    pub ray: Option<RatVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Column {
    Plus(usize),
    Minus(usize),
    Slack(usize),
    Artificial(usize),
}

/// Fraction-free tableau: the entry at `(r, j)` stands for
/// `rows[r][j] / den`, and every pivot keeps all entries integral.
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    // reduced costs; last entry is minus the objective value
    obj: Vec<BigInt>,
    den: BigInt,
    basis: Vec<usize>,
    columns: Vec<Column>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.columns.len()
    }

    fn value(&self, x: &BigInt) -> Rat {
        Rat::from_bigints(x.clone(), self.den.clone()).expect("positive denominator")
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let p = self.rows[pr][pc].clone();
        let den = core::mem::replace(&mut self.den, p.clone());
        let (before, rest) = self.rows.split_at_mut(pr);
        let (prow, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()).chain(core::iter::once(&mut self.obj)) {
            let f = row[pc].clone();
            for (v, a) in row.iter_mut().zip(prow.iter()) {
                let mut t = &*v * &p;
                if !f.is_zero() && !a.is_zero() {
                    t -= &f * a;
                }
                debug_assert!((&t % &den).is_zero());
                *v = t / &den;
            }
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for row in self.rows.iter_mut().chain(core::iter::once(&mut self.obj)) {
                for v in row.iter_mut() {
                    *v = -core::mem::take(v);
                }
            }
        }
        self.basis[pr] = pc;
    }

    /// Runs Bland's rule over columns `< limit`. Returns the entering
    /// column of an unbounded direction, if any.
    fn optimize(&mut self, limit: usize) -> Option<usize> {
        loop {
            let pc = (0..limit).find(|&j| self.obj[j].is_negative())?;
            let rhs = self.rhs();
            let mut best: Option<usize> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][pc].is_positive() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(br) => {
                        // b_r / a_r versus b_br / a_br, both a positive
                        let lhs = &self.rows[r][rhs] * &self.rows[br][pc];
                        let rhs_v = &self.rows[br][rhs] * &self.rows[r][pc];
                        lhs < rhs_v || (lhs == rhs_v && self.basis[r] < self.basis[br])
                    }
                };
                if better {
                    best = Some(r);
                }
            }
            match best {
                None => return Some(pc),
                Some(pr) => self.pivot(pr, pc),
            }
        }
    }

    /// Installs integer costs and prices out the current basis.
    fn set_costs(&mut self, costs: &[BigInt]) {
        let rhs = self.rhs();
        let mut obj: Vec<BigInt> = costs.iter().map(|c| c * &self.den).collect();
        obj.push(BigInt::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=rhs {
                if !self.rows[r][j].is_zero() {
                    obj[j] -= cb * &self.rows[r][j];
                }
            }
        }
        self.obj = obj;
    }
}

/// Positive integer `s` such that every `s * v` is an integer.
fn common_scale<'a>(values: impl Iterator<Item = &'a Rat>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scaled(v: &Rat, s: &BigInt) -> BigInt {
    v.numer() * (s / v.denom())
}

/// Solves `lp` exactly. Errors only on malformed dimensions.
pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let n = lp.num_vars;
    let m_eq = lp.a_eq.len();
    let m = m_eq + lp.a_le.len();

    let mut columns = Vec::new();
    for j in 0..n {
        columns.push(Column::Plus(j));
        if !lp.nonneg[j] {
            columns.push(Column::Minus(j));
        }
    }
    for i in 0..lp.a_le.len() {
        columns.push(Column::Slack(m_eq + i));
    }
    let first_artificial = columns.len();
    for i in 0..m {
        columns.push(Column::Artificial(i));
    }
    let width = columns.len() + 1;

    // variable j is substituted by col_scale[j] * x'_j so that its column
    // becomes integral; rows are then scaled to integers and normalized
    // to b >= 0
    let col_scale: Vec<BigInt> = (0..n)
        .map(|j| common_scale(lp.a_eq.iter().chain(&lp.a_le).map(|row| &row[j])))
        .collect();
    let a_scaled = |a: &[Rat], j: usize| &a[j] * Rat::from_bigint(col_scale[j].clone());
    let mut row_factor = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let (a, b) = if i < m_eq {
            (&lp.a_eq[i], &lp.b_eq[i])
        } else {
            (&lp.a_le[i - m_eq], &lp.b_le[i - m_eq])
        };
        let a: Vec<Rat> = (0..n).map(|j| a_scaled(a, j)).collect();
        let s = common_scale(a.iter().chain(core::iter::once(b)));
        let flip = b.is_negative();
        let mut row = vec![BigInt::zero(); width];
        for (c, col) in columns.iter().enumerate() {
            let v = match *col {
                Column::Plus(j) => scaled(&a[j], &s),
                Column::Minus(j) => -scaled(&a[j], &s),
                Column::Slack(k) if k == i => s.clone(),
                Column::Artificial(k) if k == i => {
                    row[c] = BigInt::one();
                    continue;
                }
                _ => continue,
            };
            row[c] = if flip { -v } else { v };
        }
        let rhs = scaled(b, &s);
        row[width - 1] = if flip { -rhs } else { rhs };
        row_factor.push(if flip { -s } else { s });
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        obj: Vec::new(),
        den: BigInt::one(),
        basis: (first_artificial..first_artificial + m).collect(),
        columns,
    };

    // phase 1: minimize the sum of artificials
    let phase1: Vec<BigInt> = (0..t.columns.len())
        .map(|c| if c >= first_artificial { BigInt::one() } else { BigInt::zero() })
        .collect();
    t.set_costs(&phase1);
    t.optimize(t.columns.len());
    if t.obj[t.rhs()].is_negative() {
        // y'_i = 1 - d(artificial_i) certifies the normalized rows; the
        // certificate is -y' mapped back through the row scaling
        let y: Vec<Rat> = (0..m)
            .map(|i| {
                let y_std = t.value(&(&t.obj[first_artificial + i] - &t.den));
                y_std * Rat::from_bigint(row_factor[i].clone())
            })
            .collect();
        let outcome = LpOutcome {
            status: LpStatus::Infeasible,
            solution: None,
            value: None,
            infeasibility_certificate: Some(RatVector::new(y)),
            ray: None,
        };
        return Ok(outcome);
    }

    // drive artificials out of the basis; drop redundant rows
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= first_artificial {
            match (0..first_artificial).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    let objective: Vec<Rat> = (0..n).map(|j| a_scaled(&lp.objective, j)).collect();
    let cost_scale = common_scale(objective.iter());
    let costs: Vec<BigInt> = t
        .columns
        .iter()
        .map(|col| match *col {
            Column::Plus(j) => scaled(&objective[j], &cost_scale),
            Column::Minus(j) => -scaled(&objective[j], &cost_scale),
            _ => BigInt::zero(),
        })
        .collect();
    t.set_costs(&costs);
    let unbounded_col = t.optimize(first_artificial);

    let rhs = t.rhs();
    let to_original = |std: &[Rat]| -> RatVector {
        let mut x = vec![Rat::zero(); n];
        for (c, col) in t.columns.iter().enumerate() {
            match *col {
                Column::Plus(j) => x[j] += &std[c],
                Column::Minus(j) => x[j] -= &std[c],
                _ => {}
            }
        }
        for (v, c) in x.iter_mut().zip(&col_scale) {
            *v *= Rat::from_bigint(c.clone());
        }
        RatVector::new(x)
    };
    let mut x_std = vec![Rat::zero(); t.columns.len()];
    for (r, &b) in t.basis.iter().enumerate() {
        x_std[b] = t.value(&t.rows[r][rhs]);
    }
    let solution = to_original(&x_std);
    let value = dot(&lp.objective, &solution);

    if let Some(pc) = unbounded_col {
        let mut d_std = vec![Rat::zero(); t.columns.len()];
        d_std[pc] = Rat::one();
        for (r, &b) in t.basis.iter().enumerate() {
            d_std[b] = -t.value(&t.rows[r][pc]);
        }
        return Ok(LpOutcome {
            status: LpStatus::Unbounded,
            solution: Some(solution),
            value: None,
            infeasibility_certificate: None,
            ray: Some(to_original(&d_std)),
        });
    }

    Ok(LpOutcome {
        status: LpStatus::Optimal,
        solution: Some(solution),
        value: Some(value),
        infeasibility_certificate: None,
        ray: None,
    })
}


fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

fn is_feasible(lp: &LinearProgram, x: &RatVector) -> bool {
    x.dim() == lp.num_vars
        && lp.nonneg.iter().zip(x.iter()).all(|(&nn, v)| !nn || !v.is_negative())
        && lp.a_eq.iter().zip(&lp.b_eq).all(|(row, b)| dot(row, x) == *b)
        && lp.a_le.iter().zip(&lp.b_le).all(|(row, b)| dot(row, x) <= *b)
}

/// Re-checks an outcome against `lp` by substitution, trusting nothing
/// computed by the solver.
pub fn verify_outcome(lp: &LinearProgram, out: &LpOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    match out.status {
        LpStatus::Optimal => {
            let (Some(x), Some(v)) = (&out.solution, &out.value) else {
                return false;
            };
            is_feasible(lp, x) && dot(&lp.objective, x) == *v
        }
        LpStatus::Infeasible => {
            let Some(y) = &out.infeasibility_certificate else {
                return false;
            };
            let m_eq = lp.a_eq.len();
            if y.dim() != m_eq + lp.a_le.len() {
                return false;
            }
            if y[m_eq..].iter().any(Rat::is_negative) {
                return false;
            }
            let rows = lp.a_eq.iter().chain(&lp.a_le);
            let mut g = vec![Rat::zero(); lp.num_vars];
            for (yi, row) in y.iter().zip(rows) {
                if yi.is_zero() {
                    continue;
                }
                for (gj, a) in g.iter_mut().zip(row) {
                    *gj += yi * a;
                }
            }
            let sign_ok = g
                .iter()
                .zip(&lp.nonneg)
                .all(|(gj, &nn)| if nn { !gj.is_negative() } else { gj.is_zero() });
            let yb = dot(y, &lp.b_eq.iter().chain(&lp.b_le).cloned().collect::<Vec<_>>());
            sign_ok && yb.is_negative()
        }
        LpStatus::Unbounded => {
            let (Some(x), Some(d)) = (&out.solution, &out.ray) else {
                return false;
            };
            is_feasible(lp, x)
                && d.dim() == lp.num_vars
                && lp.nonneg.iter().zip(d.iter()).all(|(&nn, v)| !nn || !v.is_negative())
                && lp.a_eq.iter().all(|row| dot(row, d).is_zero())
                && lp.a_le.iter().all(|row| !dot(row, d).is_positive())
                && dot(&lp.objective, d).is_negative()
        }
    }
}
