//! Exact linear programs by enumeration of basic solutions.

use super::{AffineForm, InequalitySystem, Relation};
use crate::error::{Error, Result};
use crate::linalg::{for_each_subset, rank, solve};
use crate::semifield::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Unbounded => None,
        }
    }
}

/// Maximises `objective` over a system of `≥` / `=` constraints.
///
/// Unboundedness is decided first, by looking for an improving recession
/// direction. A bounded feasible program attains its optimum on a minimal
/// face, which is cut out by `rank` independent tight rows, so the optimum
/// is the best feasible basic solution.
pub fn lp_max(objective: &AffineForm, system: &InequalitySystem) -> Result<LpOutcome> {
    let dim = system.dim();
    if objective.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: objective.dim() });
    }
    if system.constraints().iter().any(|c| c.relation == Relation::Gt) {
        return Err(Error::StrictConstraint);
    }
    if !system.is_feasible() {
        return Err(Error::Infeasible);
    }

    let zero = Rational::default();
    let mut recession = InequalitySystem::new(dim);
    recession.push(AffineForm::new(objective.coeffs().to_vec(), zero.clone()), Relation::Gt)?;
    for c in system.constraints() {
        recession.push(AffineForm::new(c.form.coeffs().to_vec(), zero.clone()), c.relation)?;
    }
    if recession.is_feasible() {
        return Ok(LpOutcome::Unbounded);
    }

    let (equalities, inequalities): (Vec<_>, Vec<_>) =
        system.constraints().iter().partition(|c| c.relation == Relation::Eq);
    let all_rows: Vec<Vec<Rational>> =
        system.constraints().iter().map(|c| c.form.coeffs().to_vec()).collect();
    let full_rank = rank(&all_rows, dim);
    let eq_rows: Vec<Vec<Rational>> = equalities.iter().map(|c| c.form.coeffs().to_vec()).collect();
    let eq_rhs: Vec<Rational> = equalities.iter().map(|c| -c.form.constant().clone()).collect();
    let eq_rank = rank(&eq_rows, dim);

    let mut best: Option<(Rational, Vec<Rational>)> = None;
    for_each_subset(inequalities.len(), full_rank - eq_rank, |subset| {
        let mut rows = eq_rows.clone();
        let mut rhs = eq_rhs.clone();
        for &i in subset {
            rows.push(inequalities[i].form.coeffs().to_vec());
            rhs.push(-inequalities[i].form.constant().clone());
        }
        if rank(&rows, dim) != full_rank {
            return true;
        }
        if let Some(x) = solve(&rows, &rhs, dim) {
            if system.is_satisfied_by(&x) {
                let value = objective.eval(&x);
                if best.as_ref().is_none_or(|(b, _)| value > *b) {
                    best = Some((value, x));
                }
            }
        }
        true
    });
    let (value, point) = best.ok_or(Error::Infeasible)?;
    Ok(LpOutcome::Optimal { value, point })
}
