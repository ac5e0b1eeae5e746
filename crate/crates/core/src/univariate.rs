//! One-variable polynomials: roots read off the Newton polygon, linear
//! factorisation and adjunction of `n`-th roots.

use std::fmt;

use crate::canon::{canonicalize, RationalPolynomial};
use crate::error::{Error, Result};
use crate::polynomial::{Exponent, Polynomial};
use crate::semifield::{MaxPlus, Rational, Semifield};

/// Roots with multiplicities, finite ones strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootMultiset {
    finite: Vec<(Rational, u32)>,
    bottom: u32,
}

impl RootMultiset {
    pub fn finite(&self) -> &[(Rational, u32)] {
        &self.finite
    }

    /// Multiplicity of the root `⊥`, i.e. the valuation.
    pub fn bottom_multiplicity(&self) -> u32 {
        self.bottom
    }

    /// Total count, `⊥` included.
    pub fn count(&self) -> u32 {
        self.finite_count() + self.bottom
    }

    pub fn finite_count(&self) -> u32 {
        self.finite.iter().map(|(_, m)| m).sum()
    }

    /// Each root repeated by its multiplicity, `⊥` last.
    pub fn expanded(&self) -> Vec<MaxPlus> {
        let mut out = Vec::new();
        for (r, m) in &self.finite {
            out.extend(std::iter::repeat_n(MaxPlus::finite(r.clone()), *m as usize));
        }
        out.extend(std::iter::repeat_n(MaxPlus::bottom(), self.bottom as usize));
        out
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut merged: Vec<(Rational, u32)> = Vec::new();
        let mut all: Vec<&(Rational, u32)> = self.finite.iter().chain(&other.finite).collect();
        all.sort_by(|a, b| b.0.cmp(&a.0));
        for (r, m) in all {
            match merged.last_mut() {
                Some((last, n)) if last == r => *n += m,
                _ => merged.push((r.clone(), *m)),
            }
        }
        RootMultiset { finite: merged, bottom: self.bottom + other.bottom }
    }
}

/// `leading ⊗ Π (X ⊕ aᵢ)` with the roots as `aᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub leading: Rational,
    pub roots: RootMultiset,
}

impl Factorization {
    /// The raw product of the linear factors.
    pub fn expand(&self) -> Polynomial<MaxPlus> {
        let mut acc = Polynomial::constant(1, MaxPlus::finite(self.leading.clone()));
        for root in self.roots.expanded() {
            let linear = Polynomial::from_terms(
                1,
                [(Exponent::new(vec![1]), MaxPlus::one()), (Exponent::new(vec![0]), root)],
            )
            .expect("univariate");
            acc = acc.mul(&linear).expect("univariate");
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.leading)?;
        for (r, m) in &self.roots.finite {
            write!(f, " * (x + {r})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if self.roots.bottom > 0 {
            write!(f, " * x")?;
            if self.roots.bottom > 1 {
                write!(f, "^{}", self.roots.bottom)?;
            }
        }
        Ok(())
    }
}

fn canonical_univariate(p: &Polynomial<MaxPlus>) -> Result<RationalPolynomial> {
    if p.arity() != 1 {
        return Err(Error::NotUnivariate(p.arity()));
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(canonicalize(p))
}

/// Roots of a non-zero univariate polynomial.
///
/// Consecutive extremal terms `(eᵢ, cᵢ)`, `(eᵢ₊₁, cᵢ₊₁)` bound an edge of the
/// Newton polygon; it contributes the root `(cᵢ - cᵢ₊₁)/(eᵢ₊₁ - eᵢ)` with
/// multiplicity equal to its lattice length.
pub fn roots(p: &Polynomial<MaxPlus>) -> Result<RootMultiset> {
    let canon = canonical_univariate(p)?;
    let vertices: Vec<(u32, &Rational)> = canon.terms().map(|(e, c)| (e.entries()[0], c)).collect();
    let finite = vertices
        .windows(2)
        .rev()
        .map(|w| {
            let ((e0, c0), (e1, c1)) = (w[0], w[1]);
            let width = e1 - e0;
            ((c0 - c1) / Rational::from_integer(width.into()), width)
        })
        .collect();
    Ok(RootMultiset { finite, bottom: vertices[0].0 })
}

pub fn factor(p: &Polynomial<MaxPlus>) -> Result<Factorization> {
    let canon = canonical_univariate(p)?;
    let (_, leading) = canon.terms().last().expect("non-zero");
    Ok(Factorization { leading: leading.clone(), roots: roots(p)? })
}

/// The `n`-th root of `a`, i.e. `a/n` in the log domain.
pub fn adjoin_nth_root(a: &MaxPlus, n: u32) -> Result<MaxPlus> {
    if n == 0 {
        return Err(Error::Invalid("root order must be at least 1".into()));
    }
    match a.value() {
        None => Err(Error::Invalid("no root of the zero element is adjoined".into())),
        Some(v) => Ok(MaxPlus::finite(v / Rational::from_integer(n.into()))),
    }
}

/// Whether `p` lies in the ideal generated by `X ⊕ x` in the rational
/// semifield.
pub fn root_ideal_member(p: &Polynomial<MaxPlus>, x: &Rational) -> Result<bool> {
    if p.arity() != 1 {
        return Err(Error::NotUnivariate(p.arity()));
    }
    let linear = Polynomial::from_terms(
        1,
        [(Exponent::new(vec![1]), MaxPlus::one()), (Exponent::new(vec![0]), MaxPlus::finite(x.clone()))],
    )?;
    Ok(canonicalize(p).divide(&canonicalize(&linear))?.is_some())
}
