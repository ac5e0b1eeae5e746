//! Rational polynomials: the image of max-plus polynomials in their
//! semifield of fractions.
//!
//! Two polynomials define the same rational polynomial exactly when they
//! have the same concave envelope, i.e. the same polynomial function. The
//! canonical identity of a class is its set of extremal (locally dominant)
//! terms, the minimal representative. The maximal representative fills
//! every lattice point of the Newton polytope with its envelope value.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{lattice_points, lp_max, AffineForm, ConcaveEnvelope, InequalitySystem, LpOutcome, Relation};
use crate::polynomial::{Exponent, Polynomial};
use crate::semifield::{MaxPlus, Rational};

/// The affine form `c + α·y` of the monomial `c·X^α` in the log domain.
pub fn term_form(exponent: &Exponent, coefficient: &Rational) -> AffineForm {
    AffineForm::new(exponent.to_rationals(), coefficient.clone())
}

/// Constraints `c_α + α·y (rel) c_β + β·y` for every listed `β ≠ α`.
pub(crate) fn push_dominance<'a, I>(
    system: &mut InequalitySystem,
    exponent: &Exponent,
    coefficient: &Rational,
    others: I,
    relation: Relation,
) where
    I: IntoIterator<Item = (&'a Exponent, &'a Rational)>,
{
    let own = term_form(exponent, coefficient);
    for (e, c) in others {
        if e != exponent {
            system
                .push_cmp(&own, relation, &term_form(e, c))
                .expect("forms share the ambient dimension");
        }
    }
}

fn finite_terms(p: &Polynomial<MaxPlus>) -> Vec<(Exponent, Rational)> {
    p.terms()
        .map(|(e, c)| (e.clone(), c.value().expect("stored coefficients are finite").clone()))
        .collect()
}

/// A locally dominant term together with a point where it strictly
/// dominates every other term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalTerm {
    pub exponent: Exponent,
    pub coefficient: Rational,
    pub witness: Vec<Rational>,
}

/// The terms whose strict-dominance region is non-empty.
pub fn extremal_monomials(p: &Polynomial<MaxPlus>) -> Result<Vec<ExtremalTerm>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let terms = finite_terms(p);
    Ok(extremal_among(p.arity(), &terms))
}

fn extremal_among(arity: usize, terms: &[(Exponent, Rational)]) -> Vec<ExtremalTerm> {
    let mut out = Vec::new();
    for (e, c) in terms {
        let mut system = InequalitySystem::new(arity);
        push_dominance(&mut system, e, c, terms.iter().map(|(e, c)| (e, c)), Relation::Gt);
        if let Some(witness) = system.feasible_point() {
            out.push(ExtremalTerm { exponent: e.clone(), coefficient: c.clone(), witness });
        }
    }
    out
}

/// Concave-envelope value of `p` at `gamma`, as the linear program
/// `max Σ μᵢcᵢ` subject to `Σ μᵢαᵢ = γ`, `Σ μᵢ = 1`, `μ ≥ 0`.
pub fn envelope_value(p: &Polynomial<MaxPlus>, gamma: &Exponent) -> Result<MaxPlus> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if gamma.arity() != p.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), found: gamma.arity() });
    }
    let terms = finite_terms(p);
    let s = terms.len();
    let one = Rational::from_integer(1.into());
    let mut system = InequalitySystem::new(s);
    for (i, &g) in gamma.entries().iter().enumerate() {
        let coeffs = terms.iter().map(|(e, _)| Rational::from_integer(e.entries()[i].into())).collect();
        system.push(AffineForm::new(coeffs, -Rational::from_integer(g.into())), Relation::Eq)?;
    }
    system.push(AffineForm::new(vec![one.clone(); s], -one), Relation::Eq)?;
    for i in 0..s {
        system.push(AffineForm::coordinate(s, i), Relation::Ge)?;
    }
    let objective = AffineForm::new(terms.iter().map(|(_, c)| c.clone()).collect(), Rational::zero());
    match lp_max(&objective, &system) {
        Ok(LpOutcome::Optimal { value, .. }) => Ok(MaxPlus::finite(value)),
        Ok(LpOutcome::Unbounded) => unreachable!("the simplex of weights is bounded"),
        Err(Error::Infeasible) => Err(Error::OutsideNewtonPolytope),
        Err(e) => Err(e),
    }
}

/// A class of the simplifiable envelope `K{X₁…Xₙ}` over max-plus rationals.
#[derive(Clone, Debug)]
pub struct RationalPolynomial {
    arity: usize,
    terms: BTreeMap<Exponent, Rational>,
    witnesses: BTreeMap<Exponent, Vec<Rational>>,
    envelope: OnceLock<ConcaveEnvelope>,
}

impl PartialEq for RationalPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.terms == other.terms
    }
}

impl Eq for RationalPolynomial {}

/// Outcome of comparing two rational polynomials as functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// A point where the two functions take different values.
    Separated(Vec<Rational>),
}

impl Comparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal)
    }
}

/// Outcome of a bounded search for `P | Q^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerDivisibility {
    Divides { exponent: u32, cofactor: RationalPolynomial },
    NotWithin { bound: u32 },
}

/// Canonical class of a max-plus polynomial.
pub fn canonicalize(p: &Polynomial<MaxPlus>) -> RationalPolynomial {
    if p.is_zero() {
        return RationalPolynomial::zero(p.arity());
    }
    RationalPolynomial::from_extremal(p.arity(), extremal_among(p.arity(), &finite_terms(p)))
}

impl RationalPolynomial {
    pub fn zero(arity: usize) -> Self {
        RationalPolynomial {
            arity,
            terms: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            envelope: OnceLock::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::from_extremal(
            arity,
            vec![ExtremalTerm {
                exponent: Exponent::zeros(arity),
                coefficient: Rational::zero(),
                witness: vec![Rational::zero(); arity],
            }],
        )
    }

    fn from_extremal(arity: usize, terms: Vec<ExtremalTerm>) -> Self {
        let mut r = Self::zero(arity);
        for t in terms {
            r.witnesses.insert(t.exponent.clone(), t.witness);
            r.terms.insert(t.exponent, t.coefficient);
        }
        r
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The extremal terms, i.e. the minimal representative.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &Exponent) -> Option<&Rational> {
        self.terms.get(e)
    }

    /// A point where the extremal term `e` strictly dominates.
    pub fn witness(&self, e: &Exponent) -> Option<&[Rational]> {
        self.witnesses.get(e).map(Vec::as_slice)
    }

    pub fn extremal_terms(&self) -> Vec<ExtremalTerm> {
        self.terms
            .iter()
            .map(|(e, c)| ExtremalTerm {
                exponent: e.clone(),
                coefficient: c.clone(),
                witness: self.witnesses[e].clone(),
            })
            .collect()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::total_degree).max()
    }

    /// The concave envelope of the class; `None` for zero.
    pub fn envelope(&self) -> Option<&ConcaveEnvelope> {
        if self.is_zero() {
            return None;
        }
        Some(self.envelope.get_or_init(|| {
            let pts: Vec<(Vec<Rational>, Rational)> =
                self.terms.iter().map(|(e, c)| (e.to_rationals(), c.clone())).collect();
            ConcaveEnvelope::new(&pts).expect("non-empty point set")
        }))
    }

    pub fn min_representative(&self) -> Polynomial<MaxPlus> {
        Polynomial::from_terms(
            self.arity,
            self.terms.iter().map(|(e, c)| (e.clone(), MaxPlus::finite(c.clone()))),
        )
        .expect("consistent arity")
    }

    /// Every lattice point of the Newton polytope with its envelope value.
    pub fn max_representative(&self) -> Polynomial<MaxPlus> {
        let Some(env) = self.envelope() else {
            return Polynomial::zero(self.arity);
        };
        let vertices: Vec<Exponent> = self.terms.keys().cloned().collect();
        let points = lattice_points(&vertices).expect("non-empty");
        let terms = points.into_iter().map(|e| {
            let v = env.value_at_exponent(&e).expect("lattice point of the polytope");
            (e, MaxPlus::finite(v))
        });
        Polynomial::from_terms(self.arity, terms).expect("consistent arity")
    }

    /// Value of the polynomial function at a finite point.
    pub fn eval(&self, y: &[Rational]) -> MaxPlus {
        self.terms
            .iter()
            .map(|(e, c)| MaxPlus::finite(c + e.dot(y)))
            .max()
            .unwrap_or_else(MaxPlus::bottom)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity, found: other.arity })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(canonicalize(&self.min_representative().add(&other.min_representative())?))
    }

    /// Product of classes. A sum `α + β` of extremal exponents is extremal in
    /// the product exactly when the dominance regions of `α` and `β`
    /// intersect; that intersection also supplies the witness.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut terms = Vec::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut system = InequalitySystem::new(self.arity);
                push_dominance(&mut system, a, ca, &self.terms, Relation::Gt);
                push_dominance(&mut system, b, cb, &other.terms, Relation::Gt);
                if let Some(witness) = system.feasible_point() {
                    terms.push(ExtremalTerm { exponent: a.add(b), coefficient: ca + cb, witness });
                }
            }
        }
        Ok(Self::from_extremal(self.arity, terms))
    }

    /// `self^k`: the extremal terms are the `k`-fold dilations, with the
    /// same witnesses.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.arity);
        }
        let kq = Rational::from_integer(k.into());
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| ExtremalTerm {
                exponent: e.scale(k),
                coefficient: c * &kq,
                witness: self.witnesses[e].clone(),
            })
            .collect();
        Self::from_extremal(self.arity, terms)
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        let terms = self
            .extremal_terms()
            .into_iter()
            .map(|t| ExtremalTerm { coefficient: t.coefficient + c, ..t })
            .collect();
        Self::from_extremal(self.arity, terms)
    }

    /// Equality of classes, with a separating point when they differ.
    ///
    /// When the classes differ, some extremal term of `self ⊕ other` is
    /// missing from one of them; at its dominance witness that one is
    /// strictly below the other.
    pub fn compare(&self, other: &Self) -> Result<Comparison> {
        self.check_arity(other)?;
        if self.terms == other.terms {
            return Ok(Comparison::Equal);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Comparison::Separated(vec![Rational::zero(); self.arity]));
        }
        let sum = self.add(other)?;
        for side in [self, other] {
            if let Some((e, _)) = sum.terms.iter().find(|(e, c)| side.terms.get(*e) != Some(*c)) {
                return Ok(Comparison::Separated(sum.witnesses[e].clone()));
            }
        }
        unreachable!("distinct classes cannot both equal their sum")
    }

    /// The quotient `R` with `other · R = self`, if it exists.
    pub fn divide(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let Some(env) = self.envelope() else {
            return Ok(Some(Self::zero(self.arity)));
        };
        let dividend: Vec<(Exponent, Rational)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        Ok(residuate(self.arity, &dividend, env, divisor).map(|r| canonicalize(&r)))
    }

    /// The least `k ≤ bound` with `self | q^k`, and the cofactor.
    pub fn divides_power(&self, q: &Self, bound: u32) -> Result<PowerDivisibility> {
        self.check_arity(q)?;
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let Some(env) = q.envelope() else {
            return Ok(PowerDivisibility::Divides { exponent: 1, cofactor: Self::zero(self.arity) });
        };
        for k in 1..=bound {
            let kq = Rational::from_integer(k.into());
            let dividend: Vec<(Exponent, Rational)> =
                q.terms.iter().map(|(e, c)| (e.scale(k), c * &kq)).collect();
            if let Some(r) = residuate(self.arity, &dividend, &env.dilate(k), self) {
                return Ok(PowerDivisibility::Divides { exponent: k, cofactor: canonicalize(&r) });
            }
        }
        Ok(PowerDivisibility::NotWithin { bound })
    }

    /// Whether `self^m = other^m`.
    pub fn power_cancel(&self, other: &Self, m: u32) -> Result<bool> {
        Ok(self.pow(m).compare(&other.pow(m))?.is_equal())
    }
}

/// Greatest candidate quotient of `dividend` by `divisor`, accepted only if
/// it reproduces the dividend.
///
/// Only differences `γ - α` of extremal exponents can carry extremal terms
/// of an exact quotient, so the residuated coefficient
/// `min_α (env(α + β) - c_α)` is computed there and nowhere else. The
/// candidate product never exceeds the dividend, so it equals it as soon
/// as every extremal term of the dividend is reached.
fn residuate(
    arity: usize,
    dividend: &[(Exponent, Rational)],
    envelope: &ConcaveEnvelope,
    divisor: &RationalPolynomial,
) -> Option<Polynomial<MaxPlus>> {
    let candidates: BTreeSet<Exponent> = dividend
        .iter()
        .flat_map(|(g, _)| divisor.terms.keys().filter_map(move |a| g.checked_sub(a)))
        .collect();
    let mut quotient: BTreeMap<Exponent, Rational> = BTreeMap::new();
    'candidates: for beta in candidates {
        let mut best: Option<Rational> = None;
        for (a, ca) in &divisor.terms {
            let Some(v) = envelope.value_at_exponent(&a.add(&beta)) else {
                continue 'candidates;
            };
            let bound = v - ca;
            if best.as_ref().is_none_or(|b| bound < *b) {
                best = Some(bound);
            }
        }
        quotient.insert(beta, best.expect("divisor is non-zero"));
    }
    for (g, cg) in dividend {
        let reached = divisor.terms.iter().any(|(a, ca)| {
            g.checked_sub(a)
                .and_then(|beta| quotient.get(&beta))
                .is_some_and(|r| ca + r >= *cg)
        });
        if !reached {
            return None;
        }
    }
    Some(
        Polynomial::from_terms(arity, quotient.into_iter().map(|(e, c)| (e, MaxPlus::finite(c))))
            .expect("consistent arity"),
    )
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.min_representative())
    }
}
