//! Fourier–Motzkin elimination with strictness tracking.
//!
//! The last variable is eliminated at each level: through an equality when
//! one involves it, otherwise by pairing every lower bound with every upper
//! bound. A witness is rebuilt on the way back by choosing each eliminated
//! coordinate inside the interval left by the already fixed ones.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{Constraint, Relation};
use crate::semifield::Rational;

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    constant: Rational,
    relation: Relation,
}

impl Row {
    fn eval_prefix(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (a, v)| acc + a * v)
    }
}

pub(super) fn feasible_point(dim: usize, constraints: &[Constraint]) -> Option<Vec<Rational>> {
    let rows = constraints
        .iter()
        .map(|c| Row {
            coeffs: c.form.coeffs().to_vec(),
            constant: c.form.constant().clone(),
            relation: c.relation,
        })
        .collect();
    eliminate(rows, dim)
}

/// Drops trivially true constant rows and merges parallel inequalities,
/// keeping the tightest. Returns `None` on a violated constant row.
fn simplify(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut equalities = Vec::new();
    let mut tightest: BTreeMap<Vec<Rational>, (Rational, Relation)> = BTreeMap::new();
    for row in rows {
        let Some(lead) = row.coeffs.iter().find(|a| !a.is_zero()).cloned() else {
            if !row.relation.holds(&row.constant) {
                return None;
            }
            continue;
        };
        if row.relation == Relation::Eq {
            equalities.push(row);
            continue;
        }
        let scale = lead.abs();
        let coeffs: Vec<Rational> = row.coeffs.iter().map(|a| a / &scale).collect();
        let constant = &row.constant / &scale;
        match tightest.get_mut(&coeffs) {
            Some((c, rel)) => {
                if constant < *c || (constant == *c && row.relation == Relation::Gt) {
                    *c = constant;
                    *rel = row.relation;
                }
            }
            None => {
                tightest.insert(coeffs, (constant, row.relation));
            }
        }
    }
    equalities.extend(
        tightest
            .into_iter()
            .map(|(coeffs, (constant, relation))| Row { coeffs, constant, relation }),
    );
    Some(equalities)
}

fn eliminate(rows: Vec<Row>, dim: usize) -> Option<Vec<Rational>> {
    let rows = simplify(rows)?;
    if dim == 0 {
        return Some(Vec::new());
    }
    let v = dim - 1;

    if let Some(pos) = rows.iter().position(|r| r.relation == Relation::Eq && !r.coeffs[v].is_zero()) {
        let pivot = rows[pos].clone();
        let reduced = rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, r)| {
                let factor = &r.coeffs[v] / &pivot.coeffs[v];
                let mut coeffs: Vec<Rational> =
                    r.coeffs.iter().zip(&pivot.coeffs).map(|(a, p)| a - &factor * p).collect();
                coeffs.truncate(v);
                Row { coeffs, constant: &r.constant - &factor * &pivot.constant, relation: r.relation }
            })
            .collect();
        let mut point = eliminate(reduced, v)?;
        // pivot: a_v x_v + rest = 0
        let rest = pivot.eval_prefix(&point);
        point.push(-rest / &pivot.coeffs[v]);
        return Some(point);
    }

    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut passthrough = Vec::new();
    for r in rows {
        let a = r.coeffs[v].clone();
        if a.is_zero() {
            let mut r = r;
            r.coeffs.truncate(v);
            passthrough.push(r);
        } else {
            // Normalise to ±x_v + rest (rel) 0.
            let scale = a.abs();
            let normalized = Row {
                coeffs: r.coeffs.iter().map(|c| c / &scale).collect(),
                constant: &r.constant / &scale,
                relation: r.relation,
            };
            if a.is_positive() {
                lower.push(normalized);
            } else {
                upper.push(normalized);
            }
        }
    }

    let mut next = passthrough;
    for l in &lower {
        for u in &upper {
            let coeffs = l.coeffs[..v].iter().zip(&u.coeffs[..v]).map(|(a, b)| a + b).collect();
            let relation = if l.relation == Relation::Gt || u.relation == Relation::Gt {
                Relation::Gt
            } else {
                Relation::Ge
            };
            next.push(Row { coeffs, constant: &l.constant + &u.constant, relation });
        }
    }
    let mut point = eliminate(next, v)?;

    // x_v ≥ -(rest) from lower rows, x_v ≤ rest from upper rows.
    let mut lo: Option<(Rational, bool)> = None;
    for l in &lower {
        let bound = -l.eval_prefix(&point);
        let strict = l.relation == Relation::Gt;
        lo = Some(match lo {
            Some((b, s)) if b > bound || (b == bound && s) => (b, s),
            Some((b, s)) if b == bound => (b, s || strict),
            _ => (bound, strict),
        });
    }
    let mut hi: Option<(Rational, bool)> = None;
    for u in &upper {
        let bound = u.eval_prefix(&point);
        let strict = u.relation == Relation::Gt;
        hi = Some(match hi {
            Some((b, s)) if b < bound || (b == bound && s) => (b, s),
            Some((b, s)) if b == bound => (b, s || strict),
            _ => (bound, strict),
        });
    }
    let one = Rational::one();
    let value = match (lo, hi) {
        (None, None) => Rational::zero(),
        (Some((l, strict)), None) => if strict { l + one } else { l },
        (None, Some((h, strict))) => if strict { h - one } else { h },
        (Some((l, _)), Some((h, _))) => {
            if l == h {
                l
            } else {
                (l + h) / Rational::from_integer(2.into())
            }
        }
    };
    point.push(value);
    Some(point)
}
