//! Gauss-Legendre rules on [-1, 1], cached per order.
//!
//! Nodes are Legendre roots refined by Newton iteration from the Chebyshev
//! initial guess; weights follow from the derivative values. Orders in use
//! are small (16 for oscillatory panels, 64 for the mollifier integral), so
//! the cache stays tiny.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_complex::Complex64;
use once_cell::sync::Lazy;

#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

static CACHE: Lazy<Mutex<HashMap<usize, Arc<GaussRule>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn compute_rule(order: usize) -> GaussRule {
    assert!(order >= 2, "quadrature order must be at least 2");
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    for i in 0..order.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(order, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x.abs();
        weights[i] = w;
        nodes[order - 1 - i] = x.abs();
        weights[order - 1 - i] = w;
    }
    GaussRule { nodes, weights }
}

pub fn gauss_legendre(order: usize) -> Arc<GaussRule> {
    let mut cache = CACHE.lock().expect("quadrature cache poisoned");
    cache
        .entry(order)
        .or_insert_with(|| Arc::new(compute_rule(order)))
        .clone()
}

/// Integral over [a, b] split into equal panels, complex integrand.
pub fn integrate_panels_c<F: FnMut(f64) -> Complex64>(
    rule: &GaussRule,
    a: f64,
    b: f64,
    panels: usize,
    mut f: F,
) -> Complex64 {
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let mid = lo + width / 2.0;
        let half = width / 2.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            total += f(mid + half * x) * (w * half);
        }
    }
    total
}

/// Integral over [a, b] split into equal panels, real integrand.
pub fn integrate_panels<F: FnMut(f64) -> f64>(
    rule: &GaussRule,
    a: f64,
    b: f64,
    panels: usize,
    mut f: F,
) -> f64 {
    let panels = panels.max(1);
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * width;
        let mid = lo + width / 2.0;
        let half = width / 2.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            total += f(mid + half * x) * w * half;
        }
    }
    total
}
