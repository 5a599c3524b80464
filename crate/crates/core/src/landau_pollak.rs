//! The Landau–Pollak constraint layer.
//!
//! For two measurements with overlap triplet (c_A, c_B, c_{A,B}), the pair of
//! maximal outcome probabilities (P_A, P_B) is confined to the domain D_LP:
//! P_A ≤ c_A², P_B ≤ c_B², and arccos√P_A + arccos√P_B ≥ arccos c_{A,B}.
//! Comparisons are done in angle space, where precision survives arguments
//! near one.

use crate::error::{Error, Result};

/// Additive slack absorbing rounding noise in measured probabilities.
const LP_SLACK: f64 = 1e-12;

/// arccos with its argument clamped into [−1, 1]; arguments further than
/// 1e−12 outside are rejected.
fn guarded_acos(x: f64) -> Result<f64> {
    if !x.is_finite() || x.abs() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "arccos argument {x} outside [-1, 1]"
        )));
    }
    Ok(x.clamp(-1.0, 1.0).acos())
}

/// The overlap triplet (c_A, c_B, c_{A,B}) of a measurement pair, with the
/// derived angles γ = arccos c computed once at construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapTriplet {
    c_a: f64,
    c_b: f64,
    c_ab: f64,
    gamma_a: f64,
    gamma_b: f64,
    gamma_ab: f64,
}

impl OverlapTriplet {
    /// Validates 0 < c_{A,B} ≤ c_A·c_B ≤ 1. Values overshooting their cap by
    /// at most 1e−9 (eigendecomposition noise) are clamped onto it.
    pub fn new(c_a: f64, c_b: f64, c_ab: f64) -> Result<Self> {
        let clamp_overlap = |v: f64, name: &str| -> Result<f64> {
            if !v.is_finite() || v <= 0.0 || v > 1.0 + 1e-9 {
                return Err(Error::InvalidTriplet(format!(
                    "{name} = {v} outside (0, 1]"
                )));
            }
            Ok(v.min(1.0))
        };
        let c_a = clamp_overlap(c_a, "c_A")?;
        let c_b = clamp_overlap(c_b, "c_B")?;
        let mut c_ab = clamp_overlap(c_ab, "c_AB")?;
        let cap = c_a * c_b;
        if c_ab > cap + 1e-9 {
            return Err(Error::InvalidTriplet(format!(
                "c_AB = {c_ab} exceeds c_A * c_B = {cap}"
            )));
        }
        c_ab = c_ab.min(cap);
        Ok(OverlapTriplet {
            c_a,
            c_b,
            c_ab,
            gamma_a: guarded_acos(c_a)?,
            gamma_b: guarded_acos(c_b)?,
            gamma_ab: guarded_acos(c_ab)?,
        })
    }

    /// The nondegenerate-observables triplet (1, 1, c).
    pub fn nondegenerate(c: f64) -> Result<Self> {
        Self::new(1.0, 1.0, c)
    }

    pub fn c_a(&self) -> f64 {
        self.c_a
    }

    pub fn c_b(&self) -> f64 {
        self.c_b
    }

    pub fn c_ab(&self) -> f64 {
        self.c_ab
    }

    pub fn gamma_a(&self) -> f64 {
        self.gamma_a
    }

    pub fn gamma_b(&self) -> f64 {
        self.gamma_b
    }

    pub fn gamma_ab(&self) -> f64 {
        self.gamma_ab
    }
}

/// g_c(x) = cos²(arccos c − arccos √x), the Landau–Pollak boundary curve:
/// the largest P_B compatible with P_A = x at overlap c.
pub fn g_c(c: f64, x: f64) -> Result<f64> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::Domain(format!("overlap c = {c} outside (0, 1]")));
    }
    // at c = 1 the constraint is trivial and g is the identity on [0, 1]
    let floor = if c == 1.0 { 0.0 } else { c * c };
    if !x.is_finite() || x < floor - 1e-12 || x > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "g_c argument {x} outside [c^2, 1] = [{floor}, 1]"
        )));
    }
    let x = x.clamp(floor, 1.0);
    let angle = guarded_acos(c)? - guarded_acos(x.sqrt())?;
    Ok(angle.cos().powi(2))
}

/// Membership of a measured pair of maximal probabilities in D_LP, with
/// 1e−12 slack on every comparison.
pub fn lp_domain_contains(t: &OverlapTriplet, p_a: f64, p_b: f64, n_a: usize, n_b: usize) -> bool {
    if n_a == 0 || n_b == 0 || !p_a.is_finite() || !p_b.is_finite() {
        return false;
    }
    // feasibility box: P ∈ [1/N, 1]
    if p_a < 1.0 / n_a as f64 - LP_SLACK || p_a > 1.0 + LP_SLACK {
        return false;
    }
    if p_b < 1.0 / n_b as f64 - LP_SLACK || p_b > 1.0 + LP_SLACK {
        return false;
    }
    let (Ok(theta_a), Ok(theta_b)) = (
        guarded_acos(p_a.clamp(0.0, 1.0).sqrt()),
        guarded_acos(p_b.clamp(0.0, 1.0).sqrt()),
    ) else {
        return false;
    };
    // caps P_A <= c_A^2, P_B <= c_B^2, in angle form
    if theta_a < t.gamma_a() - LP_SLACK || theta_b < t.gamma_b() - LP_SLACK {
        return false;
    }
    // the Landau-Pollak curve itself
    theta_a + theta_b >= t.gamma_ab() - LP_SLACK
}
