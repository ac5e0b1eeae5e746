//! JSON values, SVG pictures of plane curves and DOT graphs.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use tropical_core::geometry::{lp_max, AffineForm, LpOutcome, Relation};
use tropical_core::univariate::{Factorization, RootMultiset};
use tropical_core::variety::{Cell, DominanceGraph, VarietyComplex};
use tropical_core::{Exponent, MaxPlus, Polynomial, Rational, RationalPolynomial};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn point(x: &[Rational]) -> Value {
    Value::Array(x.iter().map(rational).collect())
}

pub fn exponent(e: &Exponent) -> Value {
    json!(e.entries())
}

pub fn polynomial(p: &Polynomial<MaxPlus>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({"exp": exponent(e), "coef": c.to_string()}))
        .collect();
    json!({"arity": p.arity(), "terms": terms, "text": p.to_string()})
}

pub fn class(r: &RationalPolynomial) -> Value {
    polynomial(&r.min_representative())
}

pub fn roots(r: &RootMultiset) -> Value {
    let mut out: Vec<Value> = r.finite().iter().map(|(x, m)| json!({"root": x.to_string(), "mult": m})).collect();
    if r.bottom_multiplicity() > 0 {
        out.push(json!({"root": "-inf", "mult": r.bottom_multiplicity()}));
    }
    Value::Array(out)
}

pub fn factorization(f: &Factorization) -> Value {
    json!({
        "leading": f.leading.to_string(),
        "roots": roots(&f.roots),
        "text": f.to_string(),
        "expanded": polynomial(&f.expand()),
    })
}

pub fn cell(c: &Cell) -> Value {
    json!({
        "pair": [exponent(&c.pair.0), exponent(&c.pair.1)],
        "dimension": c.dimension,
        "witness": point(&c.witness),
        "constraints": c.system.constraints().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
    })
}

pub fn variety(v: &VarietyComplex) -> Value {
    json!({"cells": v.cells().iter().map(cell).collect::<Vec<_>>()})
}

pub fn graph(g: &DominanceGraph) -> Value {
    json!({
        "vertices": g.vertices.iter().map(exponent).collect::<Vec<_>>(),
        "edges": g.edges.iter().map(|e| json!({
            "from": exponent(&g.vertices[e.from]),
            "to": exponent(&g.vertices[e.to]),
            "form": e.form.to_string(),
        })).collect::<Vec<_>>(),
        "connected": g.is_connected(),
    })
}

/// Drawing window `[xmin, xmax] × [ymin, ymax]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingBox {
    pub xmin: Rational,
    pub ymin: Rational,
    pub xmax: Rational,
    pub ymax: Rational,
}

const SIZE: f64 = 400.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

impl BoundingBox {
    fn constraints(&self) -> [(AffineForm, Relation); 4] {
        let r = |n: i64| Rational::from_integer(n.into());
        [
            (AffineForm::new(vec![r(1), r(0)], -self.xmin.clone()), Relation::Ge),
            (AffineForm::new(vec![r(-1), r(0)], self.xmax.clone()), Relation::Ge),
            (AffineForm::new(vec![r(0), r(1)], -self.ymin.clone()), Relation::Ge),
            (AffineForm::new(vec![r(0), r(-1)], self.ymax.clone()), Relation::Ge),
        ]
    }

    fn screen(&self, p: &[Rational]) -> (f64, f64) {
        let f = |r: &Rational| r.to_f64().unwrap_or(0.0);
        let (x0, x1, y0, y1) = (f(&self.xmin), f(&self.xmax), f(&self.ymin), f(&self.ymax));
        ((f(&p[0]) - x0) / (x1 - x0) * SIZE, (y1 - f(&p[1])) / (y1 - y0) * SIZE)
    }
}

fn colour(c: &Cell) -> &'static str {
    let key: u32 = c.pair.0.entries().iter().chain(c.pair.1.entries()).enumerate().map(|(i, &a)| (i as u32 + 1) * a).sum();
    PALETTE[key as usize % PALETTE.len()]
}

/// The part of a cell inside the box, as its extreme points.
fn clip(c: &Cell, bbox: &BoundingBox) -> Option<Vec<Vec<Rational>>> {
    let mut system = c.system.clone();
    for (form, rel) in bbox.constraints() {
        system.push(form, rel).ok()?;
    }
    if c.dimension == 0 {
        return system.feasible_point().map(|p| vec![p]);
    }
    let normal = c.system.constraints().iter().find(|k| k.relation == Relation::Eq)?.form.coeffs().to_vec();
    let direction = AffineForm::new(vec![-normal[1].clone(), normal[0].clone()], Rational::default());
    let end = |d: &AffineForm| match lp_max(d, &system) {
        Ok(LpOutcome::Optimal { point, .. }) => Some(point),
        _ => None,
    };
    let a = end(&direction)?;
    let b = end(&direction.neg())?;
    Some(if a == b { vec![a] } else { vec![a, b] })
}

/// SVG 1.1 picture of a plane tropical curve: one `<line>` per clipped
/// one-dimensional cell, one `<circle>` per isolated point.
pub fn svg(v: &VarietyComplex, bbox: &BoundingBox) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>");
    for c in v.cells() {
        let Some(points) = clip(c, bbox) else { continue };
        match (c.dimension, points.as_slice()) {
            (1, [a, b]) => {
                let ((x1, y1), (x2, y2)) = (bbox.screen(a), bbox.screen(b));
                let _ = writeln!(
                    out,
                    "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{}\" stroke-width=\"2\"/>",
                    colour(c)
                );
            }
            (0, [p]) => {
                let (x, y) = bbox.screen(p);
                let _ = writeln!(out, "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"{}\"/>", colour(c));
            }
            _ => {}
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn dot(g: &DominanceGraph) -> String {
    let mut out = String::from("graph dominance {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{v}\"];");
    }
    for e in &g.edges {
        let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.from, e.to, e.form);
    }
    out.push_str("}\n");
    out
}
