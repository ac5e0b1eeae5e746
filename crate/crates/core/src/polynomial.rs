//! Sparse multivariate polynomials over a semifield.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semifield::{Rational, Semifield};

/// An exponent vector `α ∈ ℕⁿ`. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zeros(arity: usize) -> Self {
        Exponent(vec![0; arity])
    }

    /// The exponent of the `i`-th variable.
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Exponent(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when it stays in `ℕⁿ`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn scale(&self, k: u32) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&a| Rational::from_integer(a.into())).collect()
    }

    /// `α·y` for a rational point `y`.
    pub fn dot(&self, y: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(y)
            .fold(Rational::default(), |acc, (&a, v)| acc + v * Rational::from_integer(a.into()))
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A polynomial with a fixed number of variables. No stored coefficient is
/// the semifield zero; the empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<K> {
    arity: usize,
    terms: BTreeMap<Exponent, K>,
}

fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

impl<K: Semifield> Polynomial<K> {
    pub fn zero(arity: usize) -> Self {
        Polynomial { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: K) -> Self {
        Self::monomial(Exponent::zeros(arity), c)
    }

    pub fn monomial(exponent: Exponent, c: K) -> Self {
        let mut p = Self::zero(exponent.arity());
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// The polynomial `X_i` (coefficient `1_K`).
    pub fn variable(arity: usize, i: usize) -> Result<Self> {
        if i >= arity {
            return Err(Error::VariableOutOfRange { index: i, arity });
        }
        Ok(Self::monomial(Exponent::unit(arity, i), K::one()))
    }

    /// Builds a polynomial from terms, combining repeated exponents with `⊕`
    /// and dropping zero coefficients.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, K)>,
    {
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            check_arity(arity, e.arity())?;
            p.accumulate(e, c);
        }
        Ok(p)
    }

    fn accumulate(&mut self, e: Exponent, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => *existing = existing.add(&c),
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &K)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &Exponent) -> K {
        self.terms.get(e).cloned().unwrap_or_else(K::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::total_degree).max()
    }

    /// Smallest total degree of a term; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::total_degree).min()
    }

    /// Re-embeds the polynomial with `arity` variables, appending unused ones.
    pub fn with_arity(&self, arity: usize) -> Result<Self> {
        if arity < self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: arity });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut v = e.entries().to_vec();
                v.resize(arity, 0);
                (Exponent(v), c.clone())
            })
            .collect();
        Ok(Polynomial { arity, terms })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut sum = self.clone();
        for (e, c) in &other.terms {
            sum.accumulate(e.clone(), c.clone());
        }
        Ok(sum)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let mut product = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                product.accumulate(e1.add(e2), c1.mul(c2));
            }
        }
        Ok(product)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.arity, K::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same arity");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same arity");
            }
        }
        acc
    }

    pub fn scalar_mul(&self, c: &K) -> Self {
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c)));
        Self::from_terms(self.arity, terms).expect("same arity")
    }

    /// Multiplies by the monomial `X^shift`.
    pub fn shift(&self, shift: &Exponent) -> Result<Self> {
        check_arity(self.arity, shift.arity())?;
        let terms = self.terms.iter().map(|(e, c)| (e.add(shift), c.clone())).collect();
        Ok(Polynomial { arity: self.arity, terms })
    }

    fn term_values<'a>(&'a self, x: &'a [K]) -> impl Iterator<Item = K> + 'a {
        self.terms.iter().map(move |(e, c)| {
            e.entries()
                .iter()
                .zip(x)
                .fold(c.clone(), |acc, (&a, xi)| acc.mul(&xi.pow(a)))
        })
    }

    /// `⊕` over the terms of `λ_α ⊗ x^α`.
    pub fn eval(&self, x: &[K]) -> Result<K> {
        check_arity(self.arity, x.len())?;
        Ok(self.term_values(x).fold(K::zero(), |acc, v| acc.add(&v)))
    }

    /// Whether `x` is a zero: the value is `0_K`, or at least two distinct
    /// monomials attain it.
    pub fn is_zero_of(&self, x: &[K]) -> Result<bool> {
        let value = self.eval(x)?;
        if value.is_zero() {
            return Ok(true);
        }
        Ok(self.term_values(x).filter(|v| *v == value).count() >= 2)
    }

    /// Derivation with respect to `X_i`: exponents shift down by one and
    /// coefficients are kept (characteristic one has no integer factor).
    pub fn derivative(&self, i: usize) -> Result<Self> {
        if i >= self.arity {
            return Err(Error::VariableOutOfRange { index: i, arity: self.arity });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.entries()[i] > 0)
            .map(|(e, c)| {
                let mut v = e.entries().to_vec();
                v[i] -= 1;
                (Exponent(v), c.clone())
            });
        Self::from_terms(self.arity, terms)
    }

    /// Orthogonality in the free module: disjoint supports.
    pub fn orthogonal(&self, other: &Self) -> Result<bool> {
        check_arity(self.arity, other.arity)?;
        Ok(self.terms.keys().all(|e| !other.terms.contains_key(e)))
    }

    /// Coefficientwise order `self ≤ other`.
    pub fn le_coefficientwise(&self, other: &Self) -> bool {
        self.terms.iter().all(|(e, c)| c.le(&other.coefficient(e)))
    }

    pub fn map_coefficients<L: Semifield>(&self, f: impl Fn(&K) -> L) -> Polynomial<L> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), f(c)));
        Polynomial::from_terms(self.arity, terms).expect("same arity")
    }
}

/// Variable names used when printing: `x, y, z` up to three variables and
/// `x1 … xn` beyond.
pub fn variable_name(arity: usize, i: usize) -> String {
    if arity <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl<K: Semifield + fmt::Display> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", K::zero());
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &a) in e.entries().iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*{}", variable_name(self.arity, i))?,
                    _ => write!(f, "*{}^{}", variable_name(self.arity, i), a)?,
                }
            }
        }
        Ok(())
    }
}
