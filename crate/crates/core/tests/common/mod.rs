#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropical_core::{Exponent, MaxPlus, Polynomial, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A rational in `[lo, hi]` with denominator at most `den`.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Rational {
    let d = rng.gen_range(1..=den);
    rat(rng.gen_range(lo * d..=hi * d), d)
}

pub fn univariate(rng: &mut impl Rng, max_degree: u32, bound: i64) -> Polynomial<MaxPlus> {
    loop {
        let degree = rng.gen_range(0..=max_degree);
        let mut terms = Vec::new();
        for e in 0..=degree {
            if e == degree || rng.gen_bool(0.6) {
                terms.push((Exponent::new(vec![e]), MaxPlus::finite(random_rational(rng, -bound, bound, 4))));
            }
        }
        let p = Polynomial::from_terms(1, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A non-zero polynomial with at most `support` terms and exponents below
/// `max_exp` in each variable.
pub fn sparse(rng: &mut impl Rng, arity: usize, support: usize, max_exp: u32, bound: i64) -> Polynomial<MaxPlus> {
    let count = rng.gen_range(1..=support);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let e = Exponent::new((0..arity).map(|_| rng.gen_range(0..=max_exp)).collect());
            (e, MaxPlus::finite(random_rational(rng, -bound, bound, 2)))
        })
        .collect();
    Polynomial::from_terms(arity, terms).unwrap()
}

pub fn point(rng: &mut impl Rng, arity: usize, bound: i64) -> Vec<Rational> {
    (0..arity).map(|_| random_rational(rng, -bound, bound, 8)).collect()
}

pub fn finite_point(x: &[Rational]) -> Vec<MaxPlus> {
    x.iter().cloned().map(MaxPlus::finite).collect()
}
