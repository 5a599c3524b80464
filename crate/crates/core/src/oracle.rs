//! Independent brute-force minimizers used to validate the bounds and closed
//! forms: over probability vectors at fixed maximum component, over pure or
//! mixed states for a given transformation matrix, and over the
//! Landau–Pollak domain.
//!
//! These are sampling-based validators, not certified global optimizers.
//! Sampling is prefix-stable per seed (a larger budget replays the smaller
//! budget's draws first), and the best candidates are polished by
//! coordinate-wise golden-section descent with a shrinking step.

use nalgebra::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::entropy::{EntropySpec, ProbabilityVector};
use crate::error::{Error, Result};
use crate::landau_pollak::OverlapTriplet;
use crate::maxprob::h_min;
use crate::quantum::{ComplexMatrix, DensityOperator, Purity, Sampler, UnitaryMatrix};

/// Location of an oracle minimum.
#[derive(Debug, Clone)]
pub enum Argmin {
    /// Full probability vector, for the fixed-max problem.
    Probabilities(ProbabilityVector),
    /// Quantum state, for the state-space problem.
    State(DensityOperator),
    /// Pair of maximal probabilities, for the Landau–Pollak grid.
    MaxProbabilityPair(f64, f64),
}

/// Result of a brute-force minimization.
#[derive(Debug, Clone)]
pub struct OracleReport {
    pub minimum_value: f64,
    pub argmin: Argmin,
    pub samples_used: usize,
    pub refinement_iterations: usize,
}

/// Candidates kept for local refinement.
const REFINE_CANDIDATES: usize = 8;

/// Full refinement sweeps before giving up.
const REFINE_SWEEPS: usize = 200;

fn golden_line<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > 1e-12 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    // a concave restriction bottoms out at an interval end, which the
    // bracketing update can miss; check both ends exactly
    let (e1, e2) = (f(lo), f(hi));
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    if e1 < best.1 {
        best = (lo, e1);
    }
    if e2 < best.1 {
        best = (hi, e2);
    }
    best
}

fn keep_best_candidates<T: Clone>(pool: &mut Vec<(f64, T)>, value: f64, payload: &T) {
    let worst = pool.last().map(|(v, _)| *v).unwrap_or(f64::INFINITY);
    if pool.len() < REFINE_CANDIDATES || value < worst {
        pool.push((value, payload.clone()));
        pool.sort_by(|a, b| a.0.total_cmp(&b.0));
        pool.truncate(REFINE_CANDIDATES);
    }
}

fn entropy_of_slice(spec: &EntropySpec, components: &[f64]) -> f64 {
    let p = ProbabilityVector::renormalized(components.to_vec(), 1e-9)
        .expect("oracle candidates stay on the simplex");
    spec.entropy(&p)
}

/// Brute-force minimum entropy over probability vectors of length `n` with
/// maximum component exactly `p`: random feasible samples plus pairwise mass
/// transfers refined by golden section.
pub fn min_entropy_fixed_max(
    spec: &EntropySpec,
    p: f64,
    n: usize,
    budget: usize,
    seed: u64,
) -> Result<OracleReport> {
    if n == 0 {
        return Err(Error::Input("dimension must be at least 1".into()));
    }
    if !(p > 0.0 && p <= 1.0) || p * (n as f64) < 1.0 - 1e-12 {
        return Err(Error::Input(format!(
            "max probability {p} infeasible for length {n}"
        )));
    }
    if budget == 0 {
        return Err(Error::Input("budget must be positive".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let rest = 1.0 - p;
    let m = n - 1;

    let sample = |rng: &mut ChaCha12Rng| -> Vec<f64> {
        if m == 0 || rest <= 0.0 {
            return vec![0.0; m];
        }
        // exponential draws scaled onto the sub-simplex, then excess above
        // the cap p is poured into the remaining headroom
        let mut q: Vec<f64> = (0..m)
            .map(|_| -(rng.gen::<f64>().max(f64::MIN_POSITIVE)).ln())
            .collect();
        let total: f64 = q.iter().sum();
        for v in &mut q {
            *v *= rest / total;
        }
        for _ in 0..n {
            let mut excess = 0.0;
            for v in &mut q {
                if *v > p {
                    excess += *v - p;
                    *v = p;
                }
            }
            if excess <= 0.0 {
                break;
            }
            let headroom: f64 = q.iter().map(|v| p - v).sum();
            if headroom <= 0.0 {
                break;
            }
            for v in &mut q {
                *v += excess * (p - *v) / headroom;
            }
        }
        q
    };

    let objective = |q: &[f64]| -> f64 {
        let mut full = Vec::with_capacity(n);
        full.push(p);
        full.extend_from_slice(q);
        entropy_of_slice(spec, &full)
    };

    let mut pool: Vec<(f64, Vec<f64>)> = Vec::new();
    for _ in 0..budget {
        let q = sample(&mut rng);
        let value = objective(&q);
        keep_best_candidates(&mut pool, value, &q);
    }

    let mut best_value = pool[0].0;
    let mut best_q = pool[0].1.clone();
    let mut sweeps_total = 0;
    for (_, start) in pool.clone() {
        let mut q = start;
        let mut current = objective(&q);
        for _ in 0..REFINE_SWEEPS {
            sweeps_total += 1;
            let mut improved = false;
            for i in 0..m {
                for j in (i + 1)..m {
                    let lo = -(q[j].min(p - q[i]));
                    let hi = q[i].min(p - q[j]);
                    if hi - lo <= 1e-13 {
                        continue;
                    }
                    let (qi, qj) = (q[i], q[j]);
                    let (t, value) = golden_line(
                        |t| {
                            let mut trial = q.clone();
                            trial[i] = qi - t;
                            trial[j] = qj + t;
                            objective(&trial)
                        },
                        lo,
                        hi,
                    );
                    if value < current - 1e-15 {
                        q[i] = qi - t;
                        q[j] = qj + t;
                        current = value;
                        improved = true;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        if current < best_value {
            best_value = current;
            best_q = q;
        }
    }

    let mut full = Vec::with_capacity(n);
    full.push(p);
    full.extend_from_slice(&best_q);
    Ok(OracleReport {
        minimum_value: best_value,
        argmin: Argmin::Probabilities(ProbabilityVector::renormalized(full, 1e-9)?),
        samples_used: budget,
        refinement_iterations: sweeps_total,
    })
}

/// Probabilities of a state (given by factor `l`, ρ ∝ LL†) in the
/// computational basis and in the basis transformed by `t`.
fn factored_probabilities(l: &ComplexMatrix, t: &ComplexMatrix) -> (Vec<f64>, Vec<f64>) {
    let rho = l * l.adjoint();
    let trace: f64 = (0..rho.nrows()).map(|i| rho[(i, i)].re).sum();
    let p_a: Vec<f64> = (0..rho.nrows()).map(|i| rho[(i, i)].re / trace).collect();
    let m = t * &rho;
    let p_b: Vec<f64> = (0..rho.nrows())
        .map(|j| {
            let mut acc = Complex::new(0.0, 0.0);
            for k in 0..rho.ncols() {
                acc += m[(j, k)] * t[(j, k)].conj();
            }
            acc.re / trace
        })
        .collect();
    (p_a, p_b)
}

/// Brute-force minimum of the entropy sum over states, for nondegenerate
/// measurements related by the unitary `t`: Haar samples refined by
/// coordinate descent on the state parameters (unit-vector components for
/// pure states, triangular-factor entries for mixed ones).
pub fn min_entropy_sum_states(
    spec_a: &EntropySpec,
    spec_b: &EntropySpec,
    t: &UnitaryMatrix,
    purity: Purity,
    budget: usize,
    seed: u64,
) -> Result<OracleReport> {
    if budget == 0 {
        return Err(Error::Input("budget must be positive".into()));
    }
    let n = t.dim();
    let tm = t.matrix().clone();
    let mut sampler = Sampler::new(seed);

    let entropy_sum = |p_a: &[f64], p_b: &[f64]| -> f64 {
        entropy_of_slice(spec_a, p_a) + entropy_of_slice(spec_b, p_b)
    };

    // candidates as factors: a column vector for pure states, a full
    // triangular factor for mixed ones
    let mut pool: Vec<(f64, ComplexMatrix)> = Vec::new();
    for _ in 0..budget {
        let factor = match purity {
            Purity::Pure => {
                let v = sampler.state_vector(n)?;
                ComplexMatrix::from_column_slice(n, 1, v.as_slice())
            }
            Purity::Mixed => {
                let rho = sampler.state(n, Purity::Mixed)?;
                cholesky_factor(rho.matrix())
            }
        };
        let (p_a, p_b) = factored_probabilities(&factor, &tm);
        let value = entropy_sum(&p_a, &p_b);
        keep_best_candidates(&mut pool, value, &factor);
    }

    let mut best_value = pool[0].0;
    let mut best_factor = pool[0].1.clone();
    let mut sweeps_total = 0;
    for (_, start) in pool.clone() {
        let mut factor = start;
        let mut current = {
            let (p_a, p_b) = factored_probabilities(&factor, &tm);
            entropy_sum(&p_a, &p_b)
        };
        let mut window = 0.7;
        for _ in 0..REFINE_SWEEPS {
            sweeps_total += 1;
            let mut improved = false;
            for idx in 0..factor.len() {
                for part in 0..2 {
                    let base = factor[idx];
                    let (t_best, value) = golden_line(
                        |d| {
                            let mut trial = factor.clone();
                            trial[idx] = if part == 0 {
                                Complex::new(base.re + d, base.im)
                            } else {
                                Complex::new(base.re, base.im + d)
                            };
                            let (p_a, p_b) = factored_probabilities(&trial, &tm);
                            entropy_sum(&p_a, &p_b)
                        },
                        -window,
                        window,
                    );
                    if value < current - 1e-15 {
                        factor[idx] = if part == 0 {
                            Complex::new(base.re + t_best, base.im)
                        } else {
                            Complex::new(base.re, base.im + t_best)
                        };
                        current = value;
                        improved = true;
                    }
                }
            }
            window = (window * 0.85).max(1e-8);
            if !improved && window <= 1e-7 {
                break;
            }
        }
        if current < best_value {
            best_value = current;
            best_factor = factor;
        }
    }

    let rho = {
        let raw = &best_factor * best_factor.adjoint();
        let trace: f64 = (0..n).map(|i| raw[(i, i)].re).sum();
        DensityOperator::new(raw / Complex::new(trace, 0.0))?
    };
    Ok(OracleReport {
        minimum_value: best_value,
        argmin: Argmin::State(rho),
        samples_used: budget,
        refinement_iterations: sweeps_total,
    })
}

fn cholesky_factor(rho: &ComplexMatrix) -> ComplexMatrix {
    let n = rho.nrows();
    let ridge = ComplexMatrix::identity(n, n) * Complex::new(1e-12, 0.0);
    match (rho + &ridge).cholesky() {
        Some(chol) => chol.l(),
        // fall back to the matrix itself; rho = MM't normalization still
        // yields a valid state for refinement purposes
        None => rho.clone(),
    }
}

/// Brute-force minimum of h_min(P_A) + h_min(P_B) over a grid of the
/// Landau–Pollak domain. The grid walks the angle of P_A from γ_A to γ_{A,B}
/// and pairs it with the largest feasible P_B; monotonicity of h_min puts
/// the domain minimum on that boundary.
pub fn min_sum_lp_grid(
    spec_a: &EntropySpec,
    spec_b: &EntropySpec,
    t: &OverlapTriplet,
    gridsize: usize,
) -> Result<OracleReport> {
    if gridsize < 2 {
        return Err(Error::Input("gridsize must be at least 2".into()));
    }
    let (lo, hi) = (t.gamma_a(), t.gamma_ab());
    let mut best = f64::INFINITY;
    let mut best_pair = (t.c_a() * t.c_a(), t.c_b() * t.c_b());
    let mut evals = 0;
    for k in 0..=gridsize {
        let theta_a = lo + (hi - lo) * k as f64 / gridsize as f64;
        let p_a = theta_a.cos().powi(2);
        let theta_b = (t.gamma_ab() - theta_a).max(t.gamma_b());
        let p_b = theta_b.cos().powi(2);
        let value = h_min(spec_a, p_a)? + h_min(spec_b, p_b)?;
        evals += 1;
        if value < best {
            best = value;
            best_pair = (p_a, p_b);
        }
    }
    Ok(OracleReport {
        minimum_value: best,
        argmin: Argmin::MaxProbabilityPair(best_pair.0, best_pair.1),
        samples_used: evals,
        refinement_iterations: 0,
    })
}

/// Random majorization pairs (p, q) with p ≺ q by construction: q is drawn
/// on the simplex and p is q after a handful of random T-transforms (mixing
/// two components toward equality).
pub fn majorization_pairs(
    n: usize,
    count: usize,
    seed: u64,
) -> Result<Vec<(ProbabilityVector, ProbabilityVector)>> {
    if n < 2 {
        return Err(Error::Input(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(count);
    for _ in 0..count {
        let mut q: Vec<f64> = (0..n)
            .map(|_| -(rng.gen::<f64>().max(f64::MIN_POSITIVE)).ln())
            .collect();
        let total: f64 = q.iter().sum();
        for v in &mut q {
            *v /= total;
        }
        let mut p = q.clone();
        let transforms = rng.gen_range(1..=2 * n);
        for _ in 0..transforms {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let lambda: f64 = rng.gen();
            let (pi, pj) = (p[i], p[j]);
            p[i] = lambda * pi + (1.0 - lambda) * pj;
            p[j] = (1.0 - lambda) * pi + lambda * pj;
        }
        pairs.push((
            ProbabilityVector::renormalized(p, 1e-9)?,
            ProbabilityVector::renormalized(q, 1e-9)?,
        ));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{deutsch, maassen_uffink, proposition_bound};
    use crate::entropy::Index;
    use crate::quantum::dft_matrix;
    use approx::assert_abs_diff_eq;

    #[test]
    fn fixed_max_trivial_cases() {
        let s = EntropySpec::shannon();
        let r = min_entropy_fixed_max(&s, 1.0, 4, 100, 0).unwrap();
        assert_abs_diff_eq!(r.minimum_value, 0.0, epsilon = 1e-12);
        if let Argmin::Probabilities(p) = &r.argmin {
            assert_abs_diff_eq!(p.max_component(), 1.0, epsilon = 1e-12);
        } else {
            panic!("wrong argmin payload");
        }

        let r = min_entropy_fixed_max(&s, 0.25, 4, 100, 0).unwrap();
        assert_abs_diff_eq!(r.minimum_value, 4.0f64.ln(), epsilon = 1e-10);
    }

    #[test]
    fn fixed_max_matches_closed_form() {
        let s = EntropySpec::shannon();
        let r = min_entropy_fixed_max(&s, 0.4, 3, 10_000, 1).unwrap();
        assert!(r.minimum_value >= 1.0549201679861441 - 1e-9);
        assert_abs_diff_eq!(r.minimum_value, 1.0549201679861441, epsilon = 1e-6);
        if let Argmin::Probabilities(p) = &r.argmin {
            let mut c = p.components().to_vec();
            c.sort_by(|a, b| b.total_cmp(a));
            assert_abs_diff_eq!(c[0], 0.4, epsilon = 1e-9);
            assert_abs_diff_eq!(c[1], 0.4, epsilon = 1e-4);
            assert_abs_diff_eq!(c[2], 0.2, epsilon = 1e-4);
        }
    }

    #[test]
    fn fixed_max_budget_doubling_never_worsens() {
        let specs = [
            EntropySpec::shannon(),
            EntropySpec::renyi(Index::Finite(2.0)).unwrap(),
            EntropySpec::tsallis(Index::Finite(0.5)).unwrap(),
        ];
        for spec in &specs {
            let mut prev = f64::INFINITY;
            for budget in [1000, 2000, 4000, 8000] {
                let r = min_entropy_fixed_max(spec, 0.37, 4, budget, 9).unwrap();
                assert!(
                    r.minimum_value <= prev + 1e-12,
                    "budget {budget} worsened: {} -> {}",
                    prev,
                    r.minimum_value
                );
                prev = r.minimum_value;
            }
        }
    }

    #[test]
    fn fixed_max_rejects_infeasible() {
        let s = EntropySpec::shannon();
        assert!(min_entropy_fixed_max(&s, 0.2, 3, 100, 0).is_err());
        assert!(min_entropy_fixed_max(&s, 1.2, 3, 100, 0).is_err());
        assert!(min_entropy_fixed_max(&s, 0.5, 3, 0, 0).is_err());
    }

    #[test]
    fn states_identity_reaches_zero() {
        let s = EntropySpec::shannon();
        let t = UnitaryMatrix::identity(2).unwrap();
        let r = min_entropy_sum_states(&s, &s, &t, Purity::Pure, 2000, 0).unwrap();
        assert!(r.minimum_value >= -1e-12);
        assert!(r.minimum_value < 1e-6, "got {}", r.minimum_value);
    }

    #[test]
    fn states_hadamard_meets_mu() {
        let s = EntropySpec::shannon();
        let t = dft_matrix(2).unwrap();
        let r = min_entropy_sum_states(&s, &s, &t, Purity::Pure, 20_000, 0).unwrap();
        let mu = maassen_uffink(1.0 / 2.0f64.sqrt()).unwrap();
        assert!(r.minimum_value >= mu - 1e-9);
        assert_abs_diff_eq!(r.minimum_value, mu, epsilon = 1e-4);
    }

    #[test]
    fn states_meet_qubit_bound() {
        // c-optimality for a qubit rotation at c > 1/sqrt(2)
        let c: f64 = 0.9;
        let t = crate::quantum::qubit_rotation(c).unwrap();
        let spec = EntropySpec::renyi(Index::Finite(2.0)).unwrap();
        let bound = proposition_bound(&spec, &spec, &OverlapTriplet::nondegenerate(c).unwrap());
        let r = min_entropy_sum_states(&spec, &spec, &t, Purity::Pure, 20_000, 3).unwrap();
        assert!(r.minimum_value >= bound.value - 1e-9);
        assert_abs_diff_eq!(r.minimum_value, bound.value, epsilon = 1e-4);
        if let Argmin::State(rho) = &r.argmin {
            assert_eq!(rho.dim(), 2);
        }
    }

    #[test]
    fn lp_grid_examples() {
        let s = EntropySpec::shannon();
        let t = OverlapTriplet::nondegenerate(1.0).unwrap();
        let r = min_sum_lp_grid(&s, &s, &t, 100).unwrap();
        assert_abs_diff_eq!(r.minimum_value, 0.0, epsilon = 1e-12);

        let inf = EntropySpec::renyi(Index::Infinite).unwrap();
        let t = OverlapTriplet::nondegenerate(0.7).unwrap();
        let r = min_sum_lp_grid(&inf, &inf, &t, 10_000).unwrap();
        assert_abs_diff_eq!(r.minimum_value, deutsch(0.7).unwrap(), epsilon = 1e-4);
        assert!(r.minimum_value >= deutsch(0.7).unwrap() - 1e-9);

        // corner branch: the rectangle corner is feasible
        let t = OverlapTriplet::new(0.8, 0.8, 0.64).unwrap();
        let b = proposition_bound(&s, &s, &t);
        let r = min_sum_lp_grid(&s, &s, &t, 4000).unwrap();
        assert_abs_diff_eq!(r.minimum_value, b.value, epsilon = 1e-6);
    }

    #[test]
    fn lp_grid_matches_minimized_branch() {
        let a = EntropySpec::renyi(Index::Finite(0.5)).unwrap();
        let b = EntropySpec::tsallis(Index::Finite(2.0)).unwrap();
        for &c in &[0.5, 0.75, 0.9] {
            let t = OverlapTriplet::nondegenerate(c).unwrap();
            let bound = proposition_bound(&a, &b, &t);
            let r = min_sum_lp_grid(&a, &b, &t, 20_000).unwrap();
            assert!(r.minimum_value >= bound.value - 1e-9);
            assert_abs_diff_eq!(r.minimum_value, bound.value, epsilon = 1e-5);
        }
    }

    #[test]
    fn majorization_pairs_are_ordered() {
        let pairs = majorization_pairs(5, 50, 0).unwrap();
        assert_eq!(pairs.len(), 50);
        for (p, q) in &pairs {
            assert!(
                p.majorized_by(q),
                "p = {:?} not majorized by q = {:?}",
                p,
                q
            );
            // uniform below, delta above
            assert!(ProbabilityVector::uniform(5).unwrap().majorized_by(q));
            assert!(p.majorized_by(&ProbabilityVector::delta(5, 0).unwrap()));
        }
        assert!(majorization_pairs(1, 5, 0).is_err());
    }
}
