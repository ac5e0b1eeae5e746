//! Principal ideals: exact membership and closure in `K[X]`, congruence and
//! radical membership for rational polynomials.

use crate::canon::{push_dominance, RationalPolynomial};
use crate::error::{Error, Result};
use crate::geometry::Relation;
use crate::polynomial::{Exponent, Polynomial};
use crate::semifield::Semifield;
use crate::variety::{variety_cells, variety_included};

/// The ideal `P·K[X]` of univariate polynomials with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalIdeal<K: Semifield> {
    generator: Polynomial<K>,
}

fn degree_of(e: &Exponent) -> u32 {
    e.entries()[0]
}

fn x_pow(j: u32) -> Exponent {
    Exponent::new(vec![j])
}

impl<K: Semifield> PrincipalIdeal<K> {
    pub fn new(generator: Polynomial<K>) -> Result<Self> {
        if generator.arity() != 1 {
            return Err(Error::NotUnivariate(generator.arity()));
        }
        if generator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PrincipalIdeal { generator })
    }

    pub fn generator(&self) -> &Polynomial<K> {
        &self.generator
    }

    /// The largest `v` with `X^v | P`.
    pub fn valuation(&self) -> u32 {
        self.generator.valuation().expect("non-zero generator")
    }

    fn check(&self, a: &Polynomial<K>) -> Result<()> {
        if a.arity() == 1 {
            Ok(())
        } else {
            Err(Error::NotUnivariate(a.arity()))
        }
    }

    /// A `Q` with `P ⊗ Q = a` coefficientwise, if one exists.
    ///
    /// The candidate `Q̂_j = min_i a_{i+j} / P_i` bounds every solution from
    /// above and satisfies `P ⊗ Q̂ ≤ a`, so it solves the equation whenever
    /// anything does.
    pub fn membership_exact(&self, a: &Polynomial<K>) -> Result<Option<Polynomial<K>>> {
        self.check(a)?;
        let (Some(da), Some(dp)) = (a.degree(), self.generator.degree()) else {
            return Ok(Some(Polynomial::zero(1)));
        };
        if da < dp {
            return Ok(None);
        }
        let mut terms = Vec::new();
        for j in 0..=da - dp {
            let mut best: Option<K> = None;
            for (e, pi) in self.generator.terms() {
                let bound = a.coefficient(&x_pow(degree_of(e) + j)).div(pi)?;
                best = Some(match best {
                    Some(b) => b.meet(&bound),
                    None => bound,
                });
            }
            terms.push((x_pow(j), best.expect("non-zero generator")));
        }
        let q = Polynomial::from_terms(1, terms)?;
        Ok((self.generator.mul(&q)? == *a).then_some(q))
    }

    /// Whether `(a + I) ∩ I` is non-empty: no term of `a` below the
    /// valuation of the generator.
    pub fn closure_member(&self, a: &Polynomial<K>) -> Result<bool> {
        self.check(a)?;
        let v = self.valuation();
        Ok(a.terms().all(|(e, _)| degree_of(e) >= v))
    }

    /// A `Q` with `a ⊕ P·Q = P·Q`, for members of the closure.
    pub fn closure_witness(&self, a: &Polynomial<K>) -> Result<Option<Polynomial<K>>> {
        if !self.closure_member(a)? {
            return Ok(None);
        }
        let v = self.valuation();
        let p0_inv = self.generator.coefficient(&x_pow(v)).inv()?;
        let q = Polynomial::from_terms(
            1,
            a.terms().map(|(e, c)| (x_pow(degree_of(e) - v), c.mul(&p0_inv))),
        )?;
        Ok(Some(q))
    }

    /// Every element is in the closure.
    pub fn is_dense(&self) -> bool {
        self.valuation() == 0
    }

    /// The closure `X^v·K[X]` equals the ideal, i.e. the generator is a
    /// monomial.
    pub fn is_closed(&self) -> bool {
        self.generator.len() == 1
    }
}

/// Whether `a` and `b` agree at every finite point of `V(p)`.
///
/// They disagree exactly when some point of a cell has a term of one side
/// attaining its maximum strictly above every term of the other side.
pub fn congruent_mod(a: &RationalPolynomial, b: &RationalPolynomial, p: &RationalPolynomial) -> Result<bool> {
    for other in [b, p] {
        if a.arity() != other.arity() {
            return Err(Error::ArityMismatch { expected: a.arity(), found: other.arity() });
        }
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let cells = variety_cells(p);
    for (high, low) in [(a, b), (b, a)] {
        for cell in cells.cells() {
            for (m, cm) in high.terms() {
                let mut system = cell.system.clone();
                push_dominance(&mut system, m, cm, high.terms(), Relation::Ge);
                let own = crate::canon::term_form(m, cm);
                for (e, c) in low.terms() {
                    system.push_cmp(&own, Relation::Gt, &crate::canon::term_form(e, c))?;
                }
                if system.is_feasible() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `q` lies in the radical of the ideal generated by `p`.
pub fn radical_member(q: &RationalPolynomial, p: &RationalPolynomial) -> Result<bool> {
    variety_included(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;
    use crate::semifield::{Boolean, MaxPlus};

    fn uni(coeffs: &[(u32, i64)]) -> Polynomial<MaxPlus> {
        Polynomial::from_terms(1, coeffs.iter().map(|&(e, c)| (x_pow(e), MaxPlus::from_int(c)))).unwrap()
    }

    fn ideal(coeffs: &[(u32, i64)]) -> PrincipalIdeal<MaxPlus> {
        PrincipalIdeal::new(uni(coeffs)).unwrap()
    }

    #[test]
    fn exact_membership() {
        let i = ideal(&[(1, 0), (0, 1)]);
        assert_eq!(i.membership_exact(&uni(&[(2, 0), (1, 3), (0, 4)])).unwrap(), Some(uni(&[(1, 0), (0, 3)])));
        assert_eq!(ideal(&[(2, 0)]).membership_exact(&uni(&[(1, 0), (0, 0)])).unwrap(), None);
        assert_eq!(i.membership_exact(&uni(&[(1, 0), (0, 1)])).unwrap(), Some(uni(&[(0, 0)])));
        // Equal as functions but not as coefficient lists.
        assert_eq!(i.membership_exact(&uni(&[(2, 0), (0, 4)])).unwrap(), None);
        assert!(PrincipalIdeal::new(Polynomial::<MaxPlus>::zero(1)).is_err());
    }

    #[test]
    fn closure() {
        let dense = ideal(&[(1, 0), (0, 1)]);
        assert!(dense.closure_member(&uni(&[(0, 7)])).unwrap());
        let x = ideal(&[(1, 0)]);
        assert!(!x.closure_member(&uni(&[(0, 0)])).unwrap());
        assert!(x.closure_member(&uni(&[(3, 0)])).unwrap());
        let a = uni(&[(3, 2), (0, 5)]);
        let q = dense.closure_witness(&a).unwrap().unwrap();
        let pq = dense.generator().mul(&q).unwrap();
        assert!(a.le_coefficientwise(&pq));
    }

    #[test]
    fn density_classification() {
        assert!(ideal(&[(1, 0), (0, 1)]).is_dense());
        assert!(!ideal(&[(1, 0), (0, 1)]).is_closed());
        assert!(ideal(&[(1, 0)]).is_closed());
        assert!(!ideal(&[(1, 0)]).is_dense());
        assert!(ideal(&[(0, 2)]).is_dense() && ideal(&[(0, 2)]).is_closed());
    }

    #[test]
    fn boolean_ideals() {
        let one = Boolean::ONE;
        let p = Polynomial::from_terms(1, [(x_pow(1), one), (x_pow(0), one)]).unwrap();
        let i = PrincipalIdeal::new(p.clone()).unwrap();
        let sq = p.mul(&p).unwrap();
        assert_eq!(i.membership_exact(&sq).unwrap(), Some(p));
    }

    #[test]
    fn congruence() {
        let p = canonicalize(&uni(&[(1, 0), (0, 0)]));
        let x = canonicalize(&uni(&[(1, 0)]));
        assert!(congruent_mod(&x, &canonicalize(&uni(&[(0, 0)])), &p).unwrap());
        assert!(!congruent_mod(&x, &canonicalize(&uni(&[(0, 1)])), &p).unwrap());
        assert!(congruent_mod(&x, &x, &p).unwrap());
        // A term may tie with the generator's maximum without dominating it.
        assert!(!congruent_mod(&p, &canonicalize(&uni(&[(0, 5)])), &p).unwrap());
    }

    #[test]
    fn radicals() {
        let line = |c| {
            canonicalize(
                &Polynomial::from_terms(
                    2,
                    [
                        (Exponent::new(vec![1, 0]), MaxPlus::from_int(c)),
                        (Exponent::new(vec![0, 1]), MaxPlus::from_int(c)),
                        (Exponent::new(vec![0, 0]), MaxPlus::from_int(c)),
                    ],
                )
                .unwrap(),
            )
        };
        let q = line(0);
        assert!(radical_member(&q, &q.pow(2)).unwrap());
        assert!(radical_member(&q, &line(4)).unwrap());
        assert!(!radical_member(&canonicalize(&uni(&[(1, 0), (0, 1)])), &canonicalize(&uni(&[(1, 0), (0, 0)]))).unwrap());
    }
}
