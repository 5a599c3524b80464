//! Lower bounds on the entropy sum of a measurement pair.
//!
//! The central bound takes an overlap triplet (c_A, c_B, c_{A,B}) and a pair
//! of entropic functionals and minimizes D_A(θ) + D_B(γ_{A,B} − θ) over the
//! angle interval allowed by the Landau–Pollak constraint, where D is the
//! fixed-max-probability minimal entropy in angle form. D carries kinks from
//! its floor term, so the interval is partitioned at every kink of both
//! summands and each smooth piece is searched by a grid-seeded golden
//! section.
//!
//! Also implemented: the analytic corner value that lower-bounds the
//! minimized result, and the literature bounds it is compared against
//! (Deutsch, Maassen–Uffink, Rastegin, Coles–Piani, the worst-case
//! Puchała–Rudnicki–Życzkowski element, and the Tsallis product-form
//! relation).

use crate::entropy::{renyi_to_tsallis, EntropySpec, FTag, Index, SHANNON_LIMIT_TOL};
use crate::error::{Error, Result};
use crate::landau_pollak::OverlapTriplet;
use crate::maxprob::{d_theta_unchecked, kink_angles};

/// How the bound value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// γ_{A,B} ≤ γ_A + γ_B: the corner (c_A², c_B²) is feasible and optimal.
    AnalyticCorner,
    /// One-dimensional minimization along the Landau–Pollak curve.
    Minimized,
}

/// Bound value with minimizer location and search diagnostics.
#[derive(Debug, Clone)]
pub struct BoundResult {
    pub value: f64,
    pub branch: Branch,
    /// Minimizing angle, when the `Minimized` branch ran.
    pub minimizer_theta: Option<f64>,
    /// Objective evaluations spent.
    pub evaluations: u64,
}

/// Corner-branch slack: ranges empty only through rounding snap to the
/// analytic corner.
const BRANCH_SLACK: f64 = 1e-12;

/// Ties in the minimum within this tolerance resolve to the smallest θ.
const TIE_TOL: f64 = 1e-12;

/// Golden-section window width at termination.
const GSS_TOL: f64 = 1e-10;

/// Seed grid density per smooth sub-interval.
const GRID_POINTS: usize = 512;

struct Objective<'a> {
    spec_a: &'a EntropySpec,
    spec_b: &'a EntropySpec,
    gamma_ab: f64,
    evaluations: u64,
}

impl Objective<'_> {
    fn eval(&mut self, theta: f64) -> f64 {
        self.evaluations += 1;
        d_theta_unchecked(self.spec_a, theta)
            + d_theta_unchecked(self.spec_b, self.gamma_ab - theta)
    }
}

fn golden_section(obj: &mut Objective<'_>, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = obj.eval(x1);
    let mut f2 = obj.eval(x2);
    while b - a > GSS_TOL {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = obj.eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = obj.eval(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Best (θ, value) over a smooth sub-interval: dense grid to escape
/// non-unimodality, then golden section inside the bracketing cell pair.
fn minimize_smooth(obj: &mut Objective<'_>, a: f64, b: f64) -> (f64, f64) {
    if b - a <= GSS_TOL {
        let mid = 0.5 * (a + b);
        return (mid, obj.eval(mid));
    }
    let n = GRID_POINTS;
    let step = (b - a) / (n - 1) as f64;
    let mut best_i = 0;
    let mut best_theta = a;
    let mut best_val = f64::INFINITY;
    for i in 0..n {
        let theta = if i == n - 1 { b } else { a + i as f64 * step };
        let v = obj.eval(theta);
        if v < best_val - TIE_TOL {
            best_val = v;
            best_theta = theta;
            best_i = i;
        }
    }
    let lo = if best_i == 0 {
        a
    } else {
        a + (best_i - 1) as f64 * step
    };
    let hi = if best_i + 1 >= n {
        b
    } else {
        a + (best_i + 1) as f64 * step
    };
    let (gt, gv) = golden_section(obj, lo, hi);
    if gv < best_val - TIE_TOL {
        (gt, gv)
    } else {
        (best_theta, best_val)
    }
}

/// The overlap-triplet lower bound on the entropy sum.
///
/// Returns the corner value D_A(γ_A) + D_B(γ_B) when γ_{A,B} ≤ γ_A + γ_B;
/// otherwise the minimum of D_A(θ) + D_B(γ_{A,B} − θ) over
/// θ ∈ [γ_A, γ_{A,B} − γ_B]. Nondegenerate observables enter as the triplet
/// (1, 1, c), reducing the range to [0, arccos c].
pub fn proposition_bound(
    spec_a: &EntropySpec,
    spec_b: &EntropySpec,
    t: &OverlapTriplet,
) -> BoundResult {
    let (gamma_a, gamma_b, gamma_ab) = (t.gamma_a(), t.gamma_b(), t.gamma_ab());
    let mut obj = Objective {
        spec_a,
        spec_b,
        gamma_ab,
        evaluations: 0,
    };
    if gamma_ab <= gamma_a + gamma_b + BRANCH_SLACK {
        let value = d_theta_unchecked(spec_a, gamma_a) + d_theta_unchecked(spec_b, gamma_b);
        return BoundResult {
            value: value.max(0.0),
            branch: Branch::AnalyticCorner,
            minimizer_theta: None,
            evaluations: 2,
        };
    }
    let lo = gamma_a;
    let hi = gamma_ab - gamma_b;

    // partition at the floor kinks of both D_A(θ) and D_B(γ_AB − θ)
    let mut cuts = vec![lo, hi];
    cuts.extend(kink_angles(lo, hi));
    for k in kink_angles(gamma_ab - hi, gamma_ab - lo) {
        let theta = gamma_ab - k;
        if theta > lo && theta < hi {
            cuts.push(theta);
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let mut best_theta = lo;
    let mut best_val = f64::INFINITY;
    for pair in cuts.windows(2) {
        let (theta, val) = minimize_smooth(&mut obj, pair[0], pair[1]);
        if val < best_val - TIE_TOL {
            best_val = val;
            best_theta = theta;
        }
    }
    BoundResult {
        value: best_val.max(0.0),
        branch: Branch::Minimized,
        minimizer_theta: Some(best_theta),
        evaluations: obj.evaluations,
    }
}

/// The always-valid analytic lower form D_A(γ_A) + D_B(γ_B). Coincides with
/// `proposition_bound` on the corner branch and lower-bounds it otherwise;
/// trivial (zero) when γ_A = γ_B = 0.
pub fn analytic_lower(spec_a: &EntropySpec, spec_b: &EntropySpec, t: &OverlapTriplet) -> f64 {
    (d_theta_unchecked(spec_a, t.gamma_a()) + d_theta_unchecked(spec_b, t.gamma_b())).max(0.0)
}

fn check_overlap(c: f64) -> Result<f64> {
    // measured overlaps overshoot 1 by rounding; clamp like OverlapTriplet
    if !(c > 0.0 && c <= 1.0 + 1e-9) {
        return Err(Error::Input(format!("overlap must lie in (0, 1], got {c}")));
    }
    Ok(c.min(1.0))
}

fn check_index(v: f64, name: &str) -> Result<f64> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::InvalidIndex(format!(
            "{name} must be a nonnegative real, got {v}"
        )));
    }
    Ok(v)
}

/// Deutsch bound −2 log((1+c)/2).
pub fn deutsch(c: f64) -> Result<f64> {
    let c = check_overlap(c)?;
    Ok(-2.0 * ((1.0 + c) / 2.0).ln())
}

/// Maassen–Uffink bound −2 log c.
pub fn maassen_uffink(c: f64) -> Result<f64> {
    let c = check_overlap(c)?;
    Ok(-2.0 * c.ln())
}

/// Position of an index pair relative to the Hölder conjugacy curve
/// 1/(2α) + 1/(2β) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjugacyRegion {
    OnCurve,
    Below,
    Above,
}

/// Classifies (α, β) against the conjugacy curve β = α/(2α−1). The whole
/// strip α ≤ 1/2 lies below the curve.
pub fn conjugacy_region(alpha: f64, beta: f64) -> Result<ConjugacyRegion> {
    let alpha = check_index(alpha, "alpha")?;
    let beta = check_index(beta, "beta")?;
    if alpha <= 0.5 {
        return Ok(ConjugacyRegion::Below);
    }
    let curve = alpha / (2.0 * alpha - 1.0);
    let tol = 1e-9 * curve.max(1.0);
    Ok(if (beta - curve).abs() <= tol {
        ConjugacyRegion::OnCurve
    } else if beta < curve {
        ConjugacyRegion::Below
    } else {
        ConjugacyRegion::Above
    })
}

/// Riesz–Thorin-based bound f(c^{2(λ−1)})/(1−λ) with λ = max{α, β}, valid on
/// and below the conjugacy curve. With f = log it collapses to the
/// Maassen–Uffink value for every admissible pair.
pub fn rastegin_f(f: FTag, alpha: f64, beta: f64, c: f64) -> Result<f64> {
    let c = check_overlap(c)?;
    if conjugacy_region(alpha, beta)? == ConjugacyRegion::Above {
        return Err(Error::Domain(format!(
            "({alpha}, {beta}) lies above the conjugacy curve; the bound is not claimed there"
        )));
    }
    let lambda = alpha.max(beta);
    if f == FTag::Log || (lambda - 1.0).abs() < SHANNON_LIMIT_TOL {
        return maassen_uffink(c);
    }
    Ok((1.0 - c.powf(2.0 * (lambda - 1.0))) / (lambda - 1.0))
}

/// Coles–Piani bound −2 log c + (1−c) log(c/c₂), with c₂ the second-largest
/// transformation-matrix modulus.
pub fn coles_piani(c: f64, c2: f64) -> Result<f64> {
    let c = check_overlap(c)?;
    if !(c2 > 0.0) || c2 > c + 1e-12 {
        return Err(Error::Input(format!(
            "second overlap must satisfy 0 < c2 <= c, got c2 = {c2}, c = {c}"
        )));
    }
    let c2 = c2.min(c);
    Ok(-2.0 * c.ln() + (1.0 - c) * (c / c2).ln())
}

/// Coles–Piani bound at the smallest admissible second overlap
/// c₂* = √(N−2+c²)/(N−1); requires c ≥ 1/√N so that c₂* ≤ c.
pub fn coles_piani_star(c: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Input(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    let c = check_overlap(c)?;
    let c2 = (n as f64 - 2.0 + c * c).sqrt() / (n as f64 - 1.0);
    coles_piani(c, c2)
}

/// Worst element of the majorization-based bound series for equal indices:
/// log[((1+c)/2)^{2α} + (1 − ((1+c)/2)²)^α]/(1−α), with the Shannon limit at
/// α = 1. Tends to the Deutsch bound as α → ∞.
pub fn prz_worst(alpha: f64, c: f64) -> Result<f64> {
    let alpha = check_index(alpha, "alpha")?;
    let c = check_overlap(c)?;
    let u2 = ((1.0 + c) / 2.0).powi(2);
    let v = (1.0 - u2).max(0.0);
    if (alpha - 1.0).abs() < SHANNON_LIMIT_TOL {
        // Shannon entropy of (u^2, 1 - u^2)
        let term = |x: f64| if x > 0.0 { -x * x.ln() } else { 0.0 };
        return Ok(term(u2) + term(v));
    }
    // log-sum-exp keeps large indices from underflowing
    let a1 = alpha * u2.ln();
    let a2 = if v > 0.0 {
        alpha * v.ln()
    } else {
        f64::NEG_INFINITY
    };
    let m = a1.max(a2);
    let log_sum = if m.is_finite() {
        m + ((a1 - m).exp() + (a2 - m).exp()).ln()
    } else {
        0.0
    };
    Ok(log_sum / (1.0 - alpha))
}

/// Right-hand side of the Tsallis product-form relation
/// (1 − e^{(1−α) B_{α,α;log}})/(α−1): the equal-index Rényi bound pushed
/// through the Rényi→Tsallis mapping. At α = 1 it is the bound itself.
pub fn tsallis_product_relation(alpha: f64, t: &OverlapTriplet) -> Result<f64> {
    let alpha = check_index(alpha, "alpha")?;
    let spec = EntropySpec::renyi(Index::Finite(alpha))?;
    let bound = proposition_bound(&spec, &spec, t);
    renyi_to_tsallis(alpha, bound.value)
}
