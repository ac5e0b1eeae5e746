//! Newton polytopes and concave envelopes of lifted point sets.
//!
//! Point sets are small, so facets are found by enumerating affinely
//! independent subsets. Lower-dimensional sets are handled in coordinates of
//! their affine hull: the pivot coordinates of the echelon form of the
//! difference vectors parametrise the hull injectively.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, for_each_subset, nullspace, rank, rref, solve};
use crate::polynomial::{Exponent, Polynomial};
use crate::semifield::{MaxPlus, Rational};

/// Facet description of the convex hull of finitely many rational points.
#[derive(Clone, Debug)]
pub struct Polytope {
    ambient: usize,
    base: Vec<Rational>,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    /// `w·q ≥ b` in hull coordinates.
    facets: Vec<(Vec<Rational>, Rational)>,
}

fn normalize(w: Vec<Rational>, b: Rational) -> (Vec<Rational>, Rational) {
    let lead = w.iter().find(|a| !a.is_zero()).map(Signed::abs).unwrap_or_else(Rational::one);
    (w.iter().map(|a| a / &lead).collect(), b / lead)
}

impl Polytope {
    pub fn new(points: &[Vec<Rational>]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let ambient = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, found: p.len() });
        }
        let base = first.clone();
        let diffs: Vec<Vec<Rational>> =
            points.iter().map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
        let ech = rref(diffs, ambient);
        let mut polytope = Polytope {
            ambient,
            base,
            basis: ech.rows,
            pivots: ech.pivots,
            facets: Vec::new(),
        };
        let projected = polytope.projected_points(points);
        polytope.facets = facets_of(&projected, polytope.hull_dimension());
        Ok(polytope)
    }

    fn projected_points(&self, points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        let set: BTreeSet<Vec<Rational>> =
            points.iter().map(|p| self.project(p).expect("point of its own hull")).collect();
        set.into_iter().collect()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient
    }

    /// Dimension of the affine hull.
    pub fn hull_dimension(&self) -> usize {
        self.pivots.len()
    }

    /// Hull coordinates of `x`, or `None` when `x` is off the affine hull.
    pub fn project(&self, x: &[Rational]) -> Option<Vec<Rational>> {
        if x.len() != self.ambient {
            return None;
        }
        let diff: Vec<Rational> = x.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        let q: Vec<Rational> = self.pivots.iter().map(|&p| diff[p].clone()).collect();
        let mut rebuilt = vec![Rational::zero(); self.ambient];
        for (coef, row) in q.iter().zip(&self.basis) {
            for (r, v) in rebuilt.iter_mut().zip(row) {
                *r += coef * v;
            }
        }
        (rebuilt == diff).then_some(q)
    }

    fn contains_projected(&self, q: &[Rational]) -> bool {
        self.facets.iter().all(|(w, b)| dot(w, q) >= *b)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.project(x).is_some_and(|q| self.contains_projected(&q))
    }

    pub fn contains_exponent(&self, e: &Exponent) -> bool {
        self.contains(&e.to_rationals())
    }

    fn dilate(&self, k: &Rational) -> Polytope {
        Polytope {
            ambient: self.ambient,
            base: self.base.iter().map(|a| a * k).collect(),
            basis: self.basis.clone(),
            pivots: self.pivots.clone(),
            facets: self.facets.iter().map(|(w, b)| (w.clone(), b * k)).collect(),
        }
    }
}

fn facets_of(points: &[Vec<Rational>], d: usize) -> Vec<(Vec<Rational>, Rational)> {
    if d == 0 {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    for_each_subset(points.len(), d, |subset| {
        let origin = &points[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&j| points[j].iter().zip(origin).map(|(a, b)| a - b).collect())
            .collect();
        let ns = nullspace(&rows, d);
        if ns.len() != 1 {
            return true;
        }
        let w = ns.into_iter().next().expect("one vector");
        let b = dot(&w, origin);
        let (mut above, mut below) = (false, false);
        for p in points {
            let s = dot(&w, p) - &b;
            above |= s.is_positive();
            below |= s.is_negative();
        }
        match (above, below) {
            (true, false) => {
                found.insert(normalize(w, b));
            }
            (false, true) => {
                found.insert(normalize(w.iter().map(|a| -a).collect(), -b));
            }
            _ => {}
        }
        true
    });
    found.into_iter().collect()
}

/// The least concave function over the convex hull of the points that lies
/// above every lifted value: `γ ↦ max Σ μᵢcᵢ` over convex combinations
/// `Σ μᵢαᵢ = γ`. Stored as the minimum of its upper facets.
#[derive(Clone, Debug)]
pub struct ConcaveEnvelope {
    polytope: Polytope,
    /// `t + y·q` in hull coordinates.
    upper: Vec<(Vec<Rational>, Rational)>,
}

impl ConcaveEnvelope {
    pub fn new(points: &[(Vec<Rational>, Rational)]) -> Result<Self> {
        let positions: Vec<Vec<Rational>> = points.iter().map(|(p, _)| p.clone()).collect();
        let polytope = Polytope::new(&positions)?;
        let d = polytope.hull_dimension();
        let mut lifted: BTreeMap<Vec<Rational>, Rational> = BTreeMap::new();
        for (p, c) in points {
            let q = polytope.project(p).expect("point of its own hull");
            match lifted.get_mut(&q) {
                Some(v) if *v < *c => *v = c.clone(),
                Some(_) => {}
                None => {
                    lifted.insert(q, c.clone());
                }
            }
        }
        let lifted: Vec<(Vec<Rational>, Rational)> = lifted.into_iter().collect();
        let mut upper = BTreeSet::new();
        for_each_subset(lifted.len(), d + 1, |subset| {
            let rows: Vec<Vec<Rational>> = subset
                .iter()
                .map(|&j| {
                    let mut r = vec![Rational::one()];
                    r.extend(lifted[j].0.iter().cloned());
                    r
                })
                .collect();
            if rank(&rows, d + 1) != d + 1 {
                return true;
            }
            let rhs: Vec<Rational> = subset.iter().map(|&j| lifted[j].1.clone()).collect();
            let sol = solve(&rows, &rhs, d + 1).expect("nonsingular");
            let t = sol[0].clone();
            let y = sol[1..].to_vec();
            if lifted.iter().all(|(q, c)| &t + dot(&y, q) >= *c) {
                upper.insert((y, t));
            }
            true
        });
        Ok(ConcaveEnvelope { polytope, upper: upper.into_iter().collect() })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Envelope value at `x`, or `None` outside the polytope.
    pub fn value_at(&self, x: &[Rational]) -> Option<Rational> {
        let q = self.polytope.project(x)?;
        if !self.polytope.contains_projected(&q) {
            return None;
        }
        self.upper.iter().map(|(y, t)| t + dot(y, &q)).min()
    }

    pub fn value_at_exponent(&self, e: &Exponent) -> Option<Rational> {
        self.value_at(&e.to_rationals())
    }

    /// Envelope of the `k`-fold dilated data, `γ ↦ k·f(γ/k)`.
    pub fn dilate(&self, k: u32) -> ConcaveEnvelope {
        let k = Rational::from_integer(k.into());
        ConcaveEnvelope {
            polytope: self.polytope.dilate(&k),
            upper: self.upper.iter().map(|(y, t)| (y.clone(), t * &k)).collect(),
        }
    }
}

/// The lifted support `(α, log λ_α)` of a max-plus polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonData {
    points: Vec<(Exponent, Rational)>,
}

impl NewtonData {
    pub fn from_polynomial(p: &Polynomial<MaxPlus>) -> Self {
        let points = p
            .terms()
            .map(|(e, c)| (e.clone(), c.value().expect("stored coefficients are finite").clone()))
            .collect();
        NewtonData { points }
    }

    pub fn points(&self) -> &[(Exponent, Rational)] {
        &self.points
    }

    pub fn exponents(&self) -> Vec<Exponent> {
        self.points.iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn envelope(&self) -> Result<ConcaveEnvelope> {
        let pts: Vec<(Vec<Rational>, Rational)> =
            self.points.iter().map(|(e, c)| (e.to_rationals(), c.clone())).collect();
        ConcaveEnvelope::new(&pts)
    }
}

/// All integer points of the convex hull of `points`, sorted.
pub fn lattice_points(points: &[Exponent]) -> Result<Vec<Exponent>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let n = first.arity();
    let coords: Vec<Vec<Rational>> = points.iter().map(Exponent::to_rationals).collect();
    let polytope = Polytope::new(&coords)?;
    let lo: Vec<u32> = (0..n).map(|i| points.iter().map(|p| p.entries()[i]).min().unwrap_or(0)).collect();
    let hi: Vec<u32> = (0..n).map(|i| points.iter().map(|p| p.entries()[i]).max().unwrap_or(0)).collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let e = Exponent::new(cur.clone());
        if polytope.contains_exponent(&e) {
            out.push(e);
        }
        let Some(i) = (0..n).rev().find(|&i| cur[i] < hi[i]) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..n {
            cur[j] = lo[j];
        }
    }
    out.sort();
    Ok(out)
}

/// `{a + b}` over both sets, deduplicated and sorted.
pub fn minkowski_sum(a: &[Exponent], b: &[Exponent]) -> Result<Vec<Exponent>> {
    if let (Some(x), Some(y)) = (a.first(), b.first()) {
        if x.arity() != y.arity() {
            return Err(Error::DimensionMismatch { expected: x.arity(), found: y.arity() });
        }
    }
    let set: BTreeSet<Exponent> = a.iter().flat_map(|x| b.iter().map(move |y| x.add(y))).collect();
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{frac, int};

    fn ex(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    #[test]
    fn triangle_lattice_points() {
        let pts = lattice_points(&[ex(&[0, 0]), ex(&[2, 0]), ex(&[0, 2])]).unwrap();
        assert_eq!(
            pts,
            vec![ex(&[0, 0]), ex(&[0, 1]), ex(&[0, 2]), ex(&[1, 0]), ex(&[1, 1]), ex(&[2, 0])]
        );
    }

    #[test]
    fn segment_and_singleton() {
        assert_eq!(
            lattice_points(&[ex(&[0]), ex(&[3])]).unwrap(),
            vec![ex(&[0]), ex(&[1]), ex(&[2]), ex(&[3])]
        );
        assert_eq!(lattice_points(&[ex(&[1, 1])]).unwrap(), vec![ex(&[1, 1])]);
        assert_eq!(lattice_points(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn diagonal_segment_in_plane() {
        let pts = lattice_points(&[ex(&[0, 2]), ex(&[2, 0])]).unwrap();
        assert_eq!(pts, vec![ex(&[0, 2]), ex(&[1, 1]), ex(&[2, 0])]);
    }

    #[test]
    fn minkowski() {
        assert_eq!(
            minkowski_sum(&[ex(&[0]), ex(&[1])], &[ex(&[0]), ex(&[2])]).unwrap(),
            vec![ex(&[0]), ex(&[1]), ex(&[2]), ex(&[3])]
        );
        let a = vec![ex(&[1, 2]), ex(&[0, 3])];
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(minkowski_sum(&a, &[ex(&[0, 0])]).unwrap(), sorted);
        assert_eq!(
            minkowski_sum(&[ex(&[0, 0]), ex(&[1, 0])], &[ex(&[0, 0]), ex(&[0, 1])]).unwrap(),
            vec![ex(&[0, 0]), ex(&[0, 1]), ex(&[1, 0]), ex(&[1, 1])]
        );
    }

    #[test]
    fn envelope_values() {
        let env = ConcaveEnvelope::new(&[(vec![int(2)], int(0)), (vec![int(0)], int(6))]).unwrap();
        assert_eq!(env.value_at(&[int(1)]), Some(int(3)));
        assert_eq!(env.value_at(&[int(3)]), None);
        let env = ConcaveEnvelope::new(&[
            (vec![int(2)], int(0)),
            (vec![int(1)], int(3)),
            (vec![int(0)], int(4)),
        ])
        .unwrap();
        assert_eq!(env.value_at(&[int(1)]), Some(int(3)));
        assert_eq!(env.value_at(&[frac(1, 2)]), Some(frac(7, 2)));
        let d = env.dilate(2);
        assert_eq!(d.value_at(&[int(2)]), Some(int(6)));
        assert_eq!(d.value_at(&[int(5)]), None);
    }

    #[test]
    fn single_point_envelope() {
        let env = ConcaveEnvelope::new(&[(vec![int(1), int(1)], int(5))]).unwrap();
        assert_eq!(env.value_at(&[int(1), int(1)]), Some(int(5)));
        assert_eq!(env.value_at(&[int(0), int(1)]), None);
    }
}
