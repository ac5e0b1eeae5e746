//! Exact rational polyhedral kernel.
//!
//! Affine constraint systems with strict and non-strict relations,
//! feasibility by Fourier–Motzkin elimination, small linear programs by
//! basis enumeration, and Newton polytopes with their concave envelopes.

mod fm;
mod hull;
mod lp;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::semifield::Rational;

pub use hull::{lattice_points, minkowski_sum, ConcaveEnvelope, NewtonData, Polytope};
pub use lp::{lp_max, LpOutcome};

/// `c·x + constant` over `ℚⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    coeffs: Vec<Rational>,
    constant: Rational,
}

impl AffineForm {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        AffineForm { coeffs, constant }
    }

    /// The form `x_i`.
    pub fn coordinate(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); dim];
        coeffs[i] = Rational::from_integer(1.into());
        AffineForm { coeffs, constant: Rational::zero() }
    }

    pub fn constant_form(dim: usize, c: Rational) -> Self {
        AffineForm { coeffs: vec![Rational::zero(); dim], constant: c }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (a, v)| acc + a * v)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn sub(&self, other: &AffineForm) -> AffineForm {
        AffineForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            constant: &self.constant - &other.constant,
        }
    }

    pub fn neg(&self) -> AffineForm {
        AffineForm {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
            constant: -&self.constant,
        }
    }

    pub fn scale(&self, k: &Rational) -> AffineForm {
        AffineForm {
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
            constant: &self.constant * k,
        }
    }

    /// The `k` with `self = k·other`, if the two forms are proportional.
    pub fn ratio_to(&self, other: &AffineForm) -> Option<Rational> {
        let pairs = self.coeffs.iter().chain(Some(&self.constant)).zip(
            other.coeffs.iter().chain(Some(&other.constant)),
        );
        let mut k: Option<Rational> = None;
        for (a, b) in pairs {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => {}
                (false, false) => {
                    let r = a / b;
                    match &k {
                        Some(prev) if *prev != r => return None,
                        _ => k = Some(r),
                    }
                }
                _ => return None,
            }
        }
        k
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let name = crate::polynomial::variable_name(self.coeffs.len(), i);
            if wrote {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            } else if a.is_negative() {
                f.write_str("-")?;
            }
            let abs = a.abs();
            if abs == Rational::from_integer(1.into()) {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}*{name}")?;
            }
            wrote = true;
        }
        if !wrote {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { " - " } else { " + " };
            write!(f, "{sign}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// Relation of a form against zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `form > 0`
    Gt,
    /// `form ≥ 0`
    Ge,
    /// `form = 0`
    Eq,
}

impl Relation {
    fn holds(self, v: &Rational) -> bool {
        match self {
            Relation::Gt => v.is_positive(),
            Relation::Ge => !v.is_negative(),
            Relation::Eq => v.is_zero(),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub form: AffineForm,
    pub relation: Relation,
}

impl Constraint {
    pub fn holds_at(&self, x: &[Rational]) -> bool {
        self.relation.holds(&self.form.eval(x))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} 0", self.form, self.relation.symbol())
    }
}

/// A conjunction of affine constraints over `ℚⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct InequalitySystem {
    dim: usize,
    constraints: Vec<Constraint>,
}

impl InequalitySystem {
    pub fn new(dim: usize) -> Self {
        InequalitySystem { dim, constraints: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn push(&mut self, form: AffineForm, relation: Relation) -> Result<()> {
        if form.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: form.dim() });
        }
        self.constraints.push(Constraint { form, relation });
        Ok(())
    }

    /// `lhs > rhs`, `lhs ≥ rhs` or `lhs = rhs`.
    pub fn push_cmp(&mut self, lhs: &AffineForm, relation: Relation, rhs: &AffineForm) -> Result<()> {
        if rhs.dim() != lhs.dim() {
            return Err(Error::DimensionMismatch { expected: lhs.dim(), found: rhs.dim() });
        }
        self.push(lhs.sub(rhs), relation)
    }

    pub fn with(mut self, form: AffineForm, relation: Relation) -> Result<Self> {
        self.push(form, relation)?;
        Ok(self)
    }

    /// Conjunction of two systems over the same space.
    pub fn conjoin(&self, other: &InequalitySystem) -> Result<InequalitySystem> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut out = self.clone();
        out.constraints.extend(other.constraints.iter().cloned());
        Ok(out)
    }

    /// The same system with every strict relation relaxed.
    pub fn closure(&self) -> InequalitySystem {
        let constraints = self
            .constraints
            .iter()
            .map(|c| Constraint {
                form: c.form.clone(),
                relation: if c.relation == Relation::Gt { Relation::Ge } else { c.relation },
            })
            .collect();
        InequalitySystem { dim: self.dim, constraints }
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.holds_at(x))
    }

    /// An exact rational point satisfying every constraint (strict ones
    /// strictly), or `None` when the system is infeasible.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        fm::feasible_point(self.dim, &self.constraints)
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }

    /// Dimension of the affine hull of the solution set of the closure;
    /// `-1` when it is empty.
    pub fn affine_dimension(&self) -> i64 {
        let closed = self.closure();
        if !closed.is_feasible() {
            return -1;
        }
        let mut equalities: Vec<Vec<Rational>> = Vec::new();
        for (i, c) in closed.constraints.iter().enumerate() {
            match c.relation {
                Relation::Eq => equalities.push(c.form.coeffs.clone()),
                _ => {
                    // An inequality that cannot be strict anywhere on the
                    // set is an implicit equality.
                    let mut probe = closed.clone();
                    probe.constraints[i].relation = Relation::Gt;
                    if !probe.is_feasible() {
                        equalities.push(c.form.coeffs.clone());
                    }
                }
            }
        }
        let rank = crate::linalg::rank(&equalities, self.dim);
        self.dim as i64 - rank as i64
    }
}

impl fmt::Display for InequalitySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.constraints.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{frac, int};

    fn form(coeffs: &[i64], c: i64) -> AffineForm {
        AffineForm::new(coeffs.iter().map(|&a| int(a)).collect(), int(c))
    }

    #[test]
    fn open_interval() {
        let s = InequalitySystem::new(1)
            .with(form(&[1], 0), Relation::Gt)
            .unwrap()
            .with(form(&[-1], 1), Relation::Gt)
            .unwrap();
        assert_eq!(s.feasible_point(), Some(vec![frac(1, 2)]));
    }

    #[test]
    fn empty_open_interval() {
        let s = InequalitySystem::new(1)
            .with(form(&[1], 0), Relation::Gt)
            .unwrap()
            .with(form(&[-1], 0), Relation::Gt)
            .unwrap();
        assert!(!s.is_feasible());
        // Its closure is the single point 0.
        assert_eq!(s.closure().feasible_point(), Some(vec![int(0)]));
    }

    #[test]
    fn equality_substitution() {
        // x + y ≥ 0, x = y, -x > 1  (x = y < -1 contradicts x + y ≥ 0)
        let s = InequalitySystem::new(2)
            .with(form(&[1, 1], 0), Relation::Ge)
            .unwrap()
            .with(form(&[1, -1], 0), Relation::Eq)
            .unwrap()
            .with(form(&[-1, 0], -1), Relation::Gt)
            .unwrap();
        assert!(!s.is_feasible());
    }

    #[test]
    fn dimension_mismatch() {
        let mut s = InequalitySystem::new(2);
        assert!(matches!(s.push(form(&[1], 0), Relation::Ge), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn affine_dimensions() {
        let line = InequalitySystem::new(2).with(form(&[1, -1], 0), Relation::Eq).unwrap();
        assert_eq!(line.affine_dimension(), 1);
        let point = InequalitySystem::new(2)
            .with(form(&[1, 0], 0), Relation::Eq)
            .unwrap()
            .with(form(&[0, 1], 0), Relation::Eq)
            .unwrap();
        assert_eq!(point.affine_dimension(), 0);
        let half = InequalitySystem::new(2).with(form(&[1, 0], 0), Relation::Ge).unwrap();
        assert_eq!(half.affine_dimension(), 2);
        // x ≥ 0 and -x ≥ 0 pins x implicitly.
        let pinned = half.with(form(&[-1, 0], 0), Relation::Ge).unwrap();
        assert_eq!(pinned.affine_dimension(), 1);
        let empty = InequalitySystem::new(1)
            .with(form(&[1], -1), Relation::Ge)
            .unwrap()
            .with(form(&[-1], 0), Relation::Ge)
            .unwrap();
        assert_eq!(empty.affine_dimension(), -1);
    }

    #[test]
    fn proportional_forms() {
        assert_eq!(form(&[1, -1], 0).ratio_to(&form(&[3, -3], 0)), Some(frac(1, 3)));
        assert_eq!(form(&[1, 0], 1).ratio_to(&form(&[2, 0], 1)), None);
        assert_eq!(form(&[1, 0], 0).ratio_to(&form(&[1, 1], 0)), None);
    }

    #[test]
    fn display() {
        assert_eq!(form(&[1, -2], 3).to_string(), "x - 2*y + 3");
        assert_eq!(form(&[0, 0], -3).to_string(), "-3");
        assert_eq!(form(&[-1, 1], 0).to_string(), "-x + y");
    }
}
