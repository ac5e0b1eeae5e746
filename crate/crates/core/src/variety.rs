//! Tropical varieties over finite points: dominance regions, the cell
//! complex, the dominance graph and inclusion of varieties.

use std::collections::{BTreeMap, VecDeque};

use crate::canon::{push_dominance, term_form, RationalPolynomial};
use crate::error::{Error, Result};
use crate::geometry::{AffineForm, InequalitySystem, Relation};
use crate::polynomial::Exponent;
use crate::semifield::Rational;

/// Extremal exponents with a point of their strict-dominance region.
pub fn dominance_regions(p: &RationalPolynomial) -> Vec<(Exponent, Vec<Rational>)> {
    p.extremal_terms().into_iter().map(|t| (t.exponent, t.witness)).collect()
}

/// Points where the terms `α` and `β` tie and attain the maximum.
#[derive(Clone, Debug)]
pub struct Cell {
    pub pair: (Exponent, Exponent),
    pub system: InequalitySystem,
    pub dimension: i64,
    pub witness: Vec<Rational>,
}

impl Cell {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.system.is_satisfied_by(x)
    }
}

fn cell_system(p: &RationalPolynomial, alpha: &Exponent, beta: &Exponent) -> InequalitySystem {
    let ca = p.coefficient(alpha).expect("extremal exponent");
    let cb = p.coefficient(beta).expect("extremal exponent");
    let mut system = InequalitySystem::new(p.arity());
    system
        .push_cmp(&term_form(alpha, ca), Relation::Eq, &term_form(beta, cb))
        .expect("same dimension");
    push_dominance(&mut system, alpha, ca, p.terms(), Relation::Ge);
    system
}

/// The cells of `V(p)`, one per pair of extremal terms whose tie set meets
/// the maximum. Geometric faces shared by several pairs are repeated.
#[derive(Clone, Debug)]
pub struct VarietyComplex {
    arity: usize,
    cells: Vec<Cell>,
}

impl VarietyComplex {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains(x))
    }
}

pub fn variety_cells(p: &RationalPolynomial) -> VarietyComplex {
    let exps: Vec<&Exponent> = p.terms().map(|(e, _)| e).collect();
    let mut cells = Vec::new();
    for (i, a) in exps.iter().enumerate() {
        for b in &exps[i + 1..] {
            let system = cell_system(p, a, b);
            if let Some(witness) = system.feasible_point() {
                let dimension = system.affine_dimension();
                cells.push(Cell { pair: ((*a).clone(), (*b).clone()), system, dimension, witness });
            }
        }
    }
    VarietyComplex { arity: p.arity(), cells }
}

/// An edge between two regions sharing a wall of codimension one, carrying
/// the difference of their affine forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub form: AffineForm,
}

#[derive(Clone, Debug)]
pub struct DominanceGraph {
    pub vertices: Vec<Exponent>,
    pub edges: Vec<GraphEdge>,
}

impl DominanceGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adjacency[e.from].push(e.to);
            adjacency[e.to].push(e.from);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.vertices.iter().position(|v| v == e)
    }

    pub fn has_edge(&self, a: &Exponent, b: &Exponent) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => {
                self.edges.iter().any(|e| (e.from, e.to) == (i, j) || (e.from, e.to) == (j, i))
            }
            _ => false,
        }
    }

    /// The edge set as pairs of exponents, each pair ordered.
    pub fn edge_pairs(&self) -> Vec<(Exponent, Exponent)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let (a, b) = (&self.vertices[e.from], &self.vertices[e.to]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect();
        out.sort();
        out
    }
}

pub fn dominance_graph(p: &RationalPolynomial) -> DominanceGraph {
    let vertices: Vec<Exponent> = p.terms().map(|(e, _)| e.clone()).collect();
    let codim_one = p.arity() as i64 - 1;
    let edges = variety_cells(p)
        .cells
        .into_iter()
        .filter(|c| c.dimension == codim_one)
        .map(|c| {
            let (a, b) = c.pair;
            let form = term_form(&a, p.coefficient(&a).expect("extremal"))
                .sub(&term_form(&b, p.coefficient(&b).expect("extremal")));
            GraphEdge {
                from: vertices.iter().position(|v| *v == a).expect("vertex"),
                to: vertices.iter().position(|v| *v == b).expect("vertex"),
                form,
            }
        })
        .collect();
    DominanceGraph { vertices, edges }
}

/// Whether the maximum of `p` at the finite point `x` is attained twice.
pub fn variety_contains_point(p: &RationalPolynomial, x: &[Rational]) -> Result<bool> {
    if x.len() != p.arity() {
        return Err(Error::DimensionMismatch { expected: p.arity(), found: x.len() });
    }
    let values: Vec<Rational> = p.terms().map(|(e, c)| c + e.dot(x)).collect();
    let Some(max) = values.iter().max() else {
        return Ok(true);
    };
    Ok(values.iter().filter(|v| *v == max).count() >= 2)
}

/// Whether `V(p) ⊆ V(q)`, points with `⊥` coordinates included.
///
/// Finite points are handled cell by cell: no point of a cell of `V(p)`
/// may have a strictly dominant term of `q`. On a coordinate stratum
/// `{y_Z = ⊥}` where every term of `p` vanishes, `q` must vanish too;
/// the remaining strata are limits of finite points.
pub fn variety_included(p: &RationalPolynomial, q: &RationalPolynomial) -> Result<bool> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), found: q.arity() });
    }
    if q.is_zero() {
        return Ok(true);
    }
    if p.is_zero() {
        return Ok(false);
    }
    for cell in variety_cells(p).cells {
        for (g, cg) in q.terms() {
            let mut system = cell.system.clone();
            push_dominance(&mut system, g, cg, q.terms(), Relation::Gt);
            if system.is_feasible() {
                return Ok(false);
            }
        }
    }
    let n = p.arity();
    let vanishes = |r: &RationalPolynomial, mask: u64| {
        r.terms().all(|(e, _)| e.entries().iter().enumerate().any(|(i, &a)| mask >> i & 1 == 1 && a > 0))
    };
    for mask in 1..(1u64 << n) {
        if vanishes(p, mask) && !vanishes(q, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The unique term of `q` dominating at `x`, if there is one.
fn dominant_term(q: &RationalPolynomial, x: &[Rational]) -> Option<Exponent> {
    let values: Vec<(Exponent, Rational)> = q.terms().map(|(e, c)| (e.clone(), c + e.dot(x))).collect();
    let max = values.iter().map(|(_, v)| v).max()?.clone();
    let mut top = values.into_iter().filter(|(_, v)| *v == max);
    let first = top.next()?;
    top.next().is_none().then_some(first.0)
}

/// Pairs every region of `p` with the region of `q` containing its witness.
pub fn region_pairing(p: &RationalPolynomial, q: &RationalPolynomial) -> Result<BTreeMap<Exponent, Exponent>> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), found: q.arity() });
    }
    p.extremal_terms()
        .into_iter()
        .map(|t| dominant_term(q, &t.witness).map(|e| (t.exponent, e)).ok_or(Error::NoSharedWall))
        .collect()
}

/// The positive rational `k` with `L = k·M`, where `L` is the form of the
/// wall `edge` in the graph of `p` and `M` the form of the same wall for `q`.
pub fn edge_exponent(
    p: &RationalPolynomial,
    q: &RationalPolynomial,
    edge: (&Exponent, &Exponent),
) -> Result<Rational> {
    let (a, b) = edge;
    if !dominance_graph(p).has_edge(a, b) {
        return Err(Error::NoSharedWall);
    }
    let pairing = region_pairing(p, q)?;
    let (qa, qb) = (&pairing[a], &pairing[b]);
    if qa == qb {
        return Err(Error::NoSharedWall);
    }
    let form = |r: &RationalPolynomial, x: &Exponent, y: &Exponent| {
        term_form(x, r.coefficient(x).expect("extremal")).sub(&term_form(y, r.coefficient(y).expect("extremal")))
    };
    let k = form(p, a, b).ratio_to(&form(q, qa, qb)).ok_or(Error::NoSharedWall)?;
    if k > Rational::default() {
        Ok(k)
    } else {
        Err(Error::NoSharedWall)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;
    use crate::polynomial::Polynomial;
    use crate::semifield::{frac, int, MaxPlus};

    fn poly(arity: usize, terms: &[(&[u32], i64)]) -> RationalPolynomial {
        canonicalize(
            &Polynomial::from_terms(
                arity,
                terms.iter().map(|(e, c)| (Exponent::new(e.to_vec()), MaxPlus::from_int(*c))),
            )
            .unwrap(),
        )
    }

    fn xy0() -> RationalPolynomial {
        poly(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[0, 0], 0)])
    }

    #[test]
    fn regions() {
        let r = dominance_regions(&xy0());
        assert_eq!(r.len(), 3);
        assert_eq!(dominance_regions(&poly(1, &[(&[2], 0), (&[1], 0), (&[0], 0)])).len(), 2);
        assert_eq!(dominance_regions(&poly(2, &[(&[1, 1], 3)])).len(), 1);
    }

    #[test]
    fn cells_of_tropical_line() {
        let v = variety_cells(&xy0());
        assert_eq!(v.cells().len(), 3);
        assert!(v.cells().iter().all(|c| c.dimension == 1));
        assert!(v.contains(&[int(2), int(2)]));
        assert!(v.contains(&[int(0), int(-4)]));
        assert!(!v.contains(&[int(1), int(0)]));
    }

    #[test]
    fn univariate_cells_are_roots() {
        let v = variety_cells(&poly(1, &[(&[2], 0), (&[1], 3), (&[0], 4)]));
        let mut pts: Vec<Rational> = v.cells().iter().map(|c| c.witness[0].clone()).collect();
        pts.sort();
        assert_eq!(pts, vec![int(1), int(3)]);
        assert!(v.cells().iter().all(|c| c.dimension == 0));
        assert!(variety_cells(&poly(1, &[(&[2], 0)])).is_empty());
    }

    #[test]
    fn graphs() {
        let g = dominance_graph(&xy0());
        assert_eq!(g.edges.len(), 3);
        assert!(g.is_connected());
        let g = dominance_graph(&poly(1, &[(&[1], 0), (&[0], 0)]));
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        let g = dominance_graph(&poly(2, &[(&[1, 1], 0)]));
        assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
        assert!(g.is_connected());
    }

    #[test]
    fn point_membership() {
        assert!(variety_contains_point(&xy0(), &[int(2), int(2)]).unwrap());
        assert!(!variety_contains_point(&xy0(), &[int(1), int(0)]).unwrap());
        assert!(variety_contains_point(&xy0(), &[int(0), int(0)]).unwrap());
    }

    #[test]
    fn inclusion() {
        let x0 = poly(2, &[(&[1, 0], 0), (&[0, 0], 0)]);
        let prod = canonicalize(
            &x0.min_representative().mul(&poly(2, &[(&[0, 1], 0), (&[0, 0], 0)]).min_representative()).unwrap(),
        );
        assert!(variety_included(&x0, &prod).unwrap());
        assert!(variety_included(&xy0(), &poly(2, &[(&[1, 0], 2), (&[0, 1], 2), (&[0, 0], 2)])).unwrap());
        assert!(!variety_included(&poly(1, &[(&[1], 0), (&[0], 0)]), &poly(1, &[(&[1], 0), (&[0], 1)])).unwrap());
    }

    #[test]
    fn inclusion_sees_bottom_strata() {
        // V(X) is the point ⊥, which lies outside V(X ⊕ 0).
        let x = poly(1, &[(&[1], 0)]);
        let x0 = poly(1, &[(&[1], 0), (&[0], 0)]);
        assert!(!variety_included(&x, &x0).unwrap());
        assert!(variety_included(&x, &poly(1, &[(&[2], 3)])).unwrap());
    }

    #[test]
    fn wall_exponents() {
        let p = poly(1, &[(&[1], 0), (&[0], 0)]);
        let q = poly(1, &[(&[2], 0), (&[0], 0)]);
        let (a, b) = (Exponent::new(vec![0]), Exponent::new(vec![1]));
        assert_eq!(edge_exponent(&p, &q, (&a, &b)).unwrap(), frac(1, 2));
        assert_eq!(edge_exponent(&p, &p, (&a, &b)).unwrap(), int(1));
        let p = poly(2, &[(&[1, 0], 0), (&[0, 1], 0)]);
        let q = poly(2, &[(&[3, 0], 0), (&[0, 3], 0)]);
        let (a, b) = (Exponent::new(vec![1, 0]), Exponent::new(vec![0, 1]));
        assert_eq!(edge_exponent(&p, &q, (&a, &b)).unwrap(), frac(1, 3));
        let r = poly(2, &[(&[1, 0], 0), (&[0, 1], 5)]);
        assert_eq!(edge_exponent(&p, &r, (&a, &b)), Err(Error::NoSharedWall));
    }
}
