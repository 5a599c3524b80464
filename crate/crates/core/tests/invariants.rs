//! Cross-module invariants: Schur-concavity, entropy bounds, index
//! monotonicity, oracle agreement, Landau–Pollak membership of measured
//! probabilities, and soundness of the bound against sampled states.

use eur_core::bounds::{analytic_lower, proposition_bound, Branch};
use eur_core::entropy::{renyi_to_tsallis, tsallis_to_renyi, EntropySpec, Index};
use eur_core::landau_pollak::lp_domain_contains;
use eur_core::maxprob::{d_theta, h_min};
use eur_core::oracle::{majorization_pairs, min_entropy_fixed_max};
use eur_core::quantum::{outcome_probabilities, overlap_triplet, Povm, Purity, Sampler};
use eur_core::OverlapTriplet;

fn renyi(v: f64) -> EntropySpec {
    EntropySpec::renyi(Index::Finite(v)).unwrap()
}

fn tsallis(v: f64) -> EntropySpec {
    EntropySpec::tsallis(Index::Finite(v)).unwrap()
}

fn battery() -> Vec<EntropySpec> {
    vec![
        EntropySpec::shannon(),
        renyi(0.0),
        renyi(0.5),
        renyi(2.0),
        renyi(8.0),
        EntropySpec::renyi(Index::Infinite).unwrap(),
        tsallis(0.5),
        tsallis(2.0),
    ]
}

#[test]
fn schur_concavity_across_battery() {
    for n in [3usize, 4, 6] {
        let pairs = majorization_pairs(n, 120, 2024).unwrap();
        for spec in battery() {
            for (p, q) in &pairs {
                let hp = spec.entropy(p);
                let hq = spec.entropy(q);
                assert!(
                    hp >= hq - 1e-12,
                    "{spec}: H({:?}) = {hp} < H({:?}) = {hq}",
                    p.components(),
                    q.components()
                );
            }
        }
    }
}

#[test]
fn entropy_is_bounded_by_zero_and_uniform() {
    for n in [2usize, 4, 7] {
        let pairs = majorization_pairs(n, 80, 7).unwrap();
        for spec in battery() {
            let top = spec.max_entropy(n).unwrap();
            for (p, q) in &pairs {
                for v in [p, q] {
                    let h = spec.entropy(v);
                    assert!(h >= -1e-12, "{spec}: negative entropy {h}");
                    assert!(h <= top + 1e-12, "{spec}: {h} above max {top}");
                }
            }
        }
    }
}

#[test]
fn family_entropy_nonincreasing_in_index() {
    let grid: Vec<Index> = (0..=32)
        .map(|k| Index::Finite(k as f64 * 0.25))
        .chain(std::iter::once(Index::Infinite))
        .collect();
    let pairs = majorization_pairs(5, 40, 99).unwrap();
    for (p, _) in &pairs {
        for family in [EntropySpec::renyi as fn(Index) -> _, EntropySpec::tsallis] {
            let values: Vec<f64> = grid
                .iter()
                .map(|&ix| family(ix).unwrap().entropy(p))
                .collect();
            for w in values.windows(2) {
                assert!(
                    w[1] <= w[0] + 1e-12,
                    "entropy increased along the index grid: {} -> {}",
                    w[0],
                    w[1]
                );
            }
        }
    }
}

#[test]
fn renyi_tsallis_mapping_roundtrip() {
    let lambdas = [0.0, 0.3, 0.999, 1.0, 1.5, 2.0, 5.0, 8.0];
    let values = [0.0, 0.1, 0.5, 1.0, 2.3, 3.0];
    for &l in &lambdas {
        for &r in &values {
            let s = renyi_to_tsallis(l, r).unwrap();
            let back = tsallis_to_renyi(l, s).unwrap();
            // For λ > 1 the intermediate Tsallis value approaches 1/(λ−1)
            // like e^{-(λ-1)R}: past e^{(λ-1)R} ≈ 1e4 an f64 cannot carry
            // the digits back, whatever the algorithm. Scale the tolerance
            // by that conditioning factor.
            let u = (l - 1.0) * r;
            let tol = if u <= 8.0 {
                1e-12
            } else {
                1e-15 * u.exp() / (l - 1.0)
            };
            assert!(
                (back - r).abs() <= tol,
                "roundtrip at λ={l}: {r} -> {back} (tol {tol})"
            );
        }
    }
}

#[test]
fn fixed_max_oracle_agrees_with_closed_form() {
    let specs = [EntropySpec::shannon(), renyi(2.0), tsallis(0.5)];
    for n in [3usize, 5] {
        for k in 1..=4 {
            let p = 1.0 / n as f64 + k as f64 * 0.2 * (1.0 - 1.0 / n as f64);
            for spec in &specs {
                let exact = h_min(spec, p).unwrap();
                let report = min_entropy_fixed_max(spec, p, n, 10_000, 5).unwrap();
                assert!(
                    report.minimum_value >= exact - 1e-9,
                    "oracle beat the closed form: {} < {exact}",
                    report.minimum_value
                );
                assert!(
                    (report.minimum_value - exact).abs() <= 1e-4,
                    "{spec} P={p} N={n}: oracle {} vs closed {exact}",
                    report.minimum_value
                );
            }
        }
    }
}

#[test]
fn measured_probabilities_stay_in_lp_domain() {
    let mut sampler = Sampler::new(31);
    for n in [2usize, 3] {
        let a = Povm::computational(n).unwrap();
        for draw in 0..250 {
            let u = sampler.haar_unitary(n).unwrap();
            let b = Povm::projective_from_unitary(&u).unwrap();
            // exercise the full POVM overlap path on a subsample
            let t = if draw % 10 == 0 {
                overlap_triplet(&a, &b).unwrap()
            } else {
                OverlapTriplet::nondegenerate(u.overlap()).unwrap()
            };
            let purity = if draw % 2 == 0 {
                Purity::Pure
            } else {
                Purity::Mixed
            };
            let rho = sampler.state(n, purity).unwrap();
            let pa = outcome_probabilities(&a, &rho).unwrap();
            let pb = outcome_probabilities(&b, &rho).unwrap();
            assert!(
                lp_domain_contains(&t, pa.max_component(), pb.max_component(), n, n),
                "violation at N={n}, draw {draw}"
            );
        }
    }
}

#[test]
fn rank_one_povm_pairs_stay_in_lp_domain() {
    let mut sampler = Sampler::new(77);
    let n = 3;
    for draw in 0..60 {
        let a = sampler.rank_one_povm(n, 4).unwrap();
        let b = sampler.rank_one_povm(n, 5).unwrap();
        let t = overlap_triplet(&a, &b).unwrap();
        let rho = sampler
            .state(
                n,
                if draw % 2 == 0 {
                    Purity::Pure
                } else {
                    Purity::Mixed
                },
            )
            .unwrap();
        let pa = outcome_probabilities(&a, &rho).unwrap();
        let pb = outcome_probabilities(&b, &rho).unwrap();
        assert!(
            lp_domain_contains(&t, pa.max_component(), pb.max_component(), 4, 5),
            "POVM violation at draw {draw}"
        );
    }
}

#[test]
fn bound_is_sound_on_sampled_states() {
    let pairs = [
        (EntropySpec::shannon(), EntropySpec::shannon()),
        (renyi(2.0), renyi(0.5)),
        (tsallis(2.0), tsallis(2.0)),
    ];
    let mut sampler = Sampler::new(13);
    for n in [2usize, 3] {
        let a = Povm::computational(n).unwrap();
        for _ in 0..80 {
            let u = sampler.haar_unitary(n).unwrap();
            let b = Povm::projective_from_unitary(&u).unwrap();
            let t = OverlapTriplet::nondegenerate(u.overlap()).unwrap();
            for (ea, eb) in &pairs {
                let bound = proposition_bound(ea, eb, &t).value;
                for purity in [Purity::Pure, Purity::Mixed] {
                    for _ in 0..2 {
                        let rho = sampler.state(n, purity).unwrap();
                        let pa = outcome_probabilities(&a, &rho).unwrap();
                        let pb = outcome_probabilities(&b, &rho).unwrap();
                        let sum = ea.entropy(&pa) + eb.entropy(&pb);
                        assert!(
                            sum >= bound - 1e-9,
                            "soundness violation: sum {sum} < bound {bound} at N={n}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn corner_branch_equals_analytic_lower() {
    let specs = [EntropySpec::shannon(), renyi(3.0), tsallis(0.5)];
    for &(ca, cb) in &[(0.7f64, 0.8f64), (0.9, 0.6), (0.95, 0.95)] {
        // any c_ab at or above cos(gamma_a + gamma_b) lands in the corner
        let corner_c = (ca.acos() + cb.acos()).cos().max(0.05);
        let t = OverlapTriplet::new(ca, cb, corner_c.min(ca * cb)).unwrap();
        if t.gamma_ab() > t.gamma_a() + t.gamma_b() + 1e-12 {
            continue;
        }
        for ea in &specs {
            for eb in &specs {
                let r = proposition_bound(ea, eb, &t);
                assert_eq!(r.branch, Branch::AnalyticCorner);
                assert_eq!(r.value, analytic_lower(ea, eb, &t));
            }
        }
    }
}

#[test]
fn bound_nonincreasing_in_overlap_above_qubit_threshold() {
    let pairs = [
        (EntropySpec::shannon(), EntropySpec::shannon()),
        (renyi(2.0), renyi(0.5)),
        (tsallis(2.0), tsallis(2.0)),
    ];
    let steps = 30;
    for (ea, eb) in &pairs {
        let mut prev = f64::INFINITY;
        for k in 0..=steps {
            let c = std::f64::consts::FRAC_1_SQRT_2
                + (1.0 - std::f64::consts::FRAC_1_SQRT_2) * k as f64 / steps as f64;
            let b = proposition_bound(ea, eb, &OverlapTriplet::nondegenerate(c).unwrap()).value;
            assert!(
                b <= prev + 1e-9,
                "bound increased with overlap at c={c}: {prev} -> {b}"
            );
            prev = b;
        }
    }
}

#[test]
fn d_theta_consistent_with_h_min() {
    for spec in battery() {
        for k in 0..40 {
            let theta = k as f64 * (std::f64::consts::FRAC_PI_2 - 1e-6) / 40.0;
            let via_theta = d_theta(&spec, theta).unwrap();
            let via_p = h_min(&spec, theta.cos().powi(2)).unwrap();
            assert!((via_theta - via_p).abs() < 1e-12);
        }
    }
}
