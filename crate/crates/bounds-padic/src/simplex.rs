use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Optimization direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coefficients . x  (<=|>=|=)  rhs`
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coefficients: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// A linear program over free (sign-unrestricted) rational variables.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<BigRational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        variables: Vec<BigRational>,
        objective: BigRational,
    },
    Infeasible,
    Unbounded,
}

/// Two-phase dense simplex with Bland's rule, entirely in exact rational
/// arithmetic.  Bland's rule guarantees termination; there is no floating
/// arithmetic anywhere.  Free variables are split into positive parts
/// internally.
pub fn rational_simplex(lp: &LinearProgram) -> LpOutcome {
    let n_free = lp.objective.len();
    debug_assert!(lp
        .constraints
        .iter()
        .all(|c| c.coefficients.len() == n_free));

    // split x = x+ - x-; columns 2j, 2j+1
    let n_split = 2 * n_free;
    let m = lp.constraints.len();

    // count extra columns: slack/surplus per inequality, artificial per
    // Ge/Eq row (after normalizing rhs >= 0)
    let mut rows: Vec<(Vec<BigRational>, Relation, BigRational)> = Vec::with_capacity(m);
    for constraint in &lp.constraints {
        let mut coeffs: Vec<BigRational> = Vec::with_capacity(n_split);
        for a in &constraint.coefficients {
            coeffs.push(a.clone());
            coeffs.push(-a.clone());
        }
        let (coeffs, relation, rhs) = if constraint.rhs.is_negative() {
            let flipped = match constraint.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
            (
                coeffs.iter().map(|a| -a.clone()).collect(),
                flipped,
                -constraint.rhs.clone(),
            )
        } else {
            (coeffs, constraint.relation, constraint.rhs.clone())
        };
        rows.push((coeffs, relation, rhs));
    }

    let n_slack = rows
        .iter()
        .filter(|(_, r, _)| matches!(r, Relation::Le | Relation::Ge))
        .count();
    let n_artificial = rows
        .iter()
        .filter(|(_, r, _)| matches!(r, Relation::Ge | Relation::Eq))
        .count();
    let total = n_split + n_slack + n_artificial;

    // build tableau
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs_col: Vec<BigRational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut slack_cursor = n_split;
    let mut artificial_cursor = n_split + n_slack;
    let artificial_start = n_split + n_slack;

    for (coeffs, relation, rhs) in rows {
        let mut row = vec![BigRational::zero(); total];
        row[..n_split].clone_from_slice(&coeffs);
        match relation {
            Relation::Le => {
                row[slack_cursor] = BigRational::one();
                basis.push(slack_cursor);
                slack_cursor += 1;
            }
            Relation::Ge => {
                row[slack_cursor] = -BigRational::one();
                slack_cursor += 1;
                row[artificial_cursor] = BigRational::one();
                basis.push(artificial_cursor);
                artificial_cursor += 1;
            }
            Relation::Eq => {
                row[artificial_cursor] = BigRational::one();
                basis.push(artificial_cursor);
                artificial_cursor += 1;
            }
        }
        tableau.push(row);
        rhs_col.push(rhs);
    }

    // phase 1: minimize the sum of artificial variables
    if n_artificial > 0 {
        let mut phase1_cost = vec![BigRational::zero(); total];
        for column in artificial_start..total {
            phase1_cost[column] = BigRational::one();
        }
        let outcome = optimize(
            &mut tableau,
            &mut rhs_col,
            &mut basis,
            &phase1_cost,
            total,
        );
        debug_assert!(
            !matches!(outcome, PivotOutcome::Unbounded),
            "phase-1 objective is bounded below by zero"
        );
        let phase1_value = objective_value(&rhs_col, &basis, &phase1_cost);
        if !phase1_value.is_zero() {
            return LpOutcome::Infeasible;
        }
        // pivot remaining artificial variables out of the basis
        for row in 0..basis.len() {
            if basis[row] >= artificial_start {
                let pivot_col = (0..artificial_start)
                    .find(|&column| !tableau[row][column].is_zero());
                match pivot_col {
                    Some(column) => pivot(&mut tableau, &mut rhs_col, &mut basis, row, column),
                    None => {
                        // redundant constraint: the whole row is zero
                        debug_assert!(rhs_col[row].is_zero());
                    }
                }
            }
        }
    }

    // phase 2: the real objective over the split variables
    let mut cost = vec![BigRational::zero(); total];
    for (j, coefficient) in lp.objective.iter().enumerate() {
        let c = match lp.sense {
            Sense::Minimize => coefficient.clone(),
            Sense::Maximize => -coefficient.clone(),
        };
        cost[2 * j] = c.clone();
        cost[2 * j + 1] = -c;
    }
    // forbid re-entering artificial columns
    let limit = artificial_start;
    let outcome = optimize(&mut tableau, &mut rhs_col, &mut basis, &cost, limit);
    if matches!(outcome, PivotOutcome::Unbounded) {
        return LpOutcome::Unbounded;
    }

    // read the solution
    let mut split_values = vec![BigRational::zero(); total];
    for (row, &var) in basis.iter().enumerate() {
        split_values[var] = rhs_col[row].clone();
    }
    let variables: Vec<BigRational> = (0..n_free)
        .map(|j| &split_values[2 * j] - &split_values[2 * j + 1])
        .collect();
    let objective = lp
        .objective
        .iter()
        .zip(&variables)
        .fold(BigRational::zero(), |acc, (c, x)| acc + c * x);
    LpOutcome::Optimal {
        variables,
        objective,
    }
}

enum PivotOutcome {
    Optimal,
    Unbounded,
}

/// Bland-rule simplex iterations over columns `0..limit`.
fn optimize(
    tableau: &mut Vec<Vec<BigRational>>,
    rhs: &mut Vec<BigRational>,
    basis: &mut Vec<usize>,
    cost: &[BigRational],
    limit: usize,
) -> PivotOutcome {
    loop {
        let reduced = reduced_costs(tableau, basis, cost, limit);
        // Bland: the lowest-index improving column
        let entering = (0..limit).find(|&j| reduced[j].is_negative());
        let entering = match entering {
            Some(j) => j,
            None => return PivotOutcome::Optimal,
        };
        // ratio test; Bland tie-break on the smallest basic variable index
        let mut leaving: Option<(usize, BigRational)> = None;
        for row in 0..tableau.len() {
            let a = &tableau[row][entering];
            if a.is_positive() {
                let ratio = &rhs[row] / a;
                let better = match &leaving {
                    None => true,
                    Some((best_row, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && basis[row] < basis[*best_row])
                    }
                };
                if better {
                    leaving = Some((row, ratio));
                }
            }
        }
        let (row, _) = match leaving {
            Some(l) => l,
            None => return PivotOutcome::Unbounded,
        };
        pivot(tableau, rhs, basis, row, entering);
    }
}

fn reduced_costs(
    tableau: &[Vec<BigRational>],
    basis: &[usize],
    cost: &[BigRational],
    limit: usize,
) -> Vec<BigRational> {
    let mut reduced: Vec<BigRational> = cost[..limit].to_vec();
    for (row, &var) in basis.iter().enumerate() {
        let basic_cost = &cost[var];
        if basic_cost.is_zero() {
            continue;
        }
        for j in 0..limit {
            if !tableau[row][j].is_zero() {
                let delta = basic_cost * &tableau[row][j];
                reduced[j] -= delta;
            }
        }
    }
    reduced
}

fn objective_value(rhs: &[BigRational], basis: &[usize], cost: &[BigRational]) -> BigRational {
    basis
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (row, &var)| {
            acc + &cost[var] * &rhs[row]
        })
}

fn pivot(
    tableau: &mut [Vec<BigRational>],
    rhs: &mut [BigRational],
    basis: &mut [usize],
    pivot_row: usize,
    pivot_col: usize,
) {
    let divisor = tableau[pivot_row][pivot_col].clone();
    debug_assert!(!divisor.is_zero());
    for value in tableau[pivot_row].iter_mut() {
        *value /= &divisor;
    }
    rhs[pivot_row] /= &divisor;
    for row in 0..tableau.len() {
        if row == pivot_row {
            continue;
        }
        let factor = tableau[row][pivot_col].clone();
        if factor.is_zero() {
            continue;
        }
        let pivot_row_copy = tableau[pivot_row].clone();
        for (value, pivot_value) in tableau[row].iter_mut().zip(&pivot_row_copy) {
            *value -= &factor * pivot_value;
        }
        let delta = &factor * &rhs[pivot_row];
        rhs[row] -= delta;
    }
    basis[pivot_row] = pivot_col;
}
