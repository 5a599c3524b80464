//! Minimal (h,φ)-entropy at a fixed maximum probability.
//!
//! Over probability vectors with max component P, the entropy minimum is
//! attained at a vertex of the constraint polytope, of the form
//! `(P, …, P, 1 − ⌊1/P⌋·P, 0, …, 0)` with ⌊1/P⌋ copies of P. This module
//! evaluates the closed form `H_min(P) = h(⌊1/P⌋ φ(P) + φ(1 − ⌊1/P⌋ P))`,
//! its angle form `D(θ) = H_min(cos²θ)`, and the achieving vector.
//!
//! Both `h_min` and `d_theta` are independent of the ambient dimension N;
//! only `vertex_vector` takes N, to size its output.

use crate::entropy::{EntropySpec, ProbabilityVector};
use crate::error::{Error, Result};

/// Relative slack when deciding whether 1/P sits on an integer.
const FLOOR_GUARD: f64 = 1e-12;

/// ⌊1/P⌋ with a guard against 1/P landing just below an integer in floating
/// point, which would silently change the vertex structure.
pub fn guarded_floor_inverse(p: f64) -> usize {
    let inv = 1.0 / p;
    let nearest = inv.round();
    if (inv - nearest).abs() < FLOOR_GUARD {
        nearest as usize
    } else {
        inv.floor() as usize
    }
}

/// ⌈1/x⌉ with the same integer guard; used by the λ = 0 closed forms.
pub fn guarded_ceil_inverse(x: f64) -> usize {
    let inv = 1.0 / x;
    let nearest = inv.round();
    if (inv - nearest).abs() < FLOOR_GUARD {
        nearest as usize
    } else {
        inv.ceil() as usize
    }
}

/// Multiplicity and residual of the minimizing vertex for max probability P:
/// `m = ⌊1/P⌋` copies of P and a residual `s* = 1 − mP` clamped at zero.
fn vertex_terms(p: f64) -> (usize, f64) {
    let m = guarded_floor_inverse(p);
    let residual = (1.0 - m as f64 * p).max(0.0);
    (m, residual)
}

/// Minimal entropy at fixed maximum probability P ∈ (0, 1].
pub fn h_min(spec: &EntropySpec, p: f64) -> Result<f64> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Input(format!(
            "max probability must lie in (0, 1], got {p}"
        )));
    }
    let (m, residual) = vertex_terms(p);
    Ok(spec.entropy_of_terms(&[(p, m as f64), (residual, 1.0)]))
}

/// The probability vector achieving `h_min(spec, P)` for every spec,
/// embedded in dimension N.
pub fn vertex_vector(p: f64, n: usize) -> Result<ProbabilityVector> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::Input(format!(
            "max probability must lie in (0, 1], got {p}"
        )));
    }
    if p * (n as f64) < 1.0 - 1e-12 {
        return Err(Error::Input(format!(
            "no probability vector of length {n} has max component {p}"
        )));
    }
    let (m, residual) = vertex_terms(p);
    let mut components = vec![p; m.min(n)];
    if components.len() < n {
        components.push(residual);
    }
    components.resize(n, 0.0);
    // swallow the float defect so the vector sums to 1 exactly enough
    let sum: f64 = components.iter().sum();
    ProbabilityVector::renormalized(components, (sum - 1.0).abs().max(1e-15))
}

/// D(θ) = h_min(cos²θ) for θ ∈ [0, π/2), the angle form used by the bound
/// minimization. Non-decreasing in θ.
pub fn d_theta(spec: &EntropySpec, theta: f64) -> Result<f64> {
    if !(0.0..std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::Input(format!(
            "theta must lie in [0, pi/2), got {theta}"
        )));
    }
    Ok(d_theta_unchecked(spec, theta))
}

/// Range-checked by the caller.
pub(crate) fn d_theta_unchecked(spec: &EntropySpec, theta: f64) -> f64 {
    let p = theta.cos().powi(2);
    let (m, residual) = vertex_terms(p);
    spec.entropy_of_terms(&[(p, m as f64), (residual, 1.0)])
}

/// Angles θ_m = arccos(1/√m), m = 2, 3, …, strictly inside `(lo, hi)`.
/// These are the kinks of D(θ), where the floor term jumps; D is smooth
/// only between consecutive ones.
pub fn kink_angles(lo: f64, hi: f64) -> Vec<f64> {
    let mut kinks = Vec::new();
    if !(hi > lo) {
        return kinks;
    }
    // smallest P along the range decides the largest multiplicity involved
    let p_min = hi.cos().powi(2);
    if p_min <= 0.0 {
        return kinks;
    }
    let m_max = guarded_ceil_inverse(p_min);
    for m in 2..=m_max {
        let theta = (1.0 / (m as f64).sqrt()).acos();
        if theta > lo && theta < hi {
            kinks.push(theta);
        }
    }
    kinks
}
