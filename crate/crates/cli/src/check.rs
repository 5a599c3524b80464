//! Invariant suites behind `eur check`: each suite returns a pass/fail
//! verdict with its worst observed violation.

use eur_core::bounds::{deutsch, proposition_bound};
use eur_core::entropy::{EntropySpec, Index};
use eur_core::landau_pollak::lp_domain_contains;
use eur_core::maxprob::{d_theta, guarded_ceil_inverse, h_min};
use eur_core::oracle::{majorization_pairs, min_entropy_fixed_max, min_entropy_sum_states};
use eur_core::quantum::{
    outcome_probabilities, overlap_triplet, qubit_rotation, Povm, Purity, Sampler,
};
use eur_core::OverlapTriplet;

pub struct CheckConfig {
    pub budget: usize,
    pub seed: u64,
    pub c: f64,
    pub n: usize,
    pub samples: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            budget: 20_000,
            seed: 0,
            c: 0.9,
            n: 3,
            samples: 10_000,
        }
    }
}

pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const SUITE_NAMES: &[&str] = &[
    "entropy-props",
    "monotonicity",
    "closed-forms",
    "soundness",
    "qubit-optimal",
    "lp-domain",
    "oracle-hmin",
];

pub fn run_suite(name: &str, cfg: &CheckConfig) -> Option<SuiteOutcome> {
    match name {
        "entropy-props" => Some(entropy_props(cfg)),
        "monotonicity" => Some(monotonicity(cfg)),
        "closed-forms" => Some(closed_forms(cfg)),
        "soundness" => Some(soundness(cfg)),
        "qubit-optimal" => Some(qubit_optimal(cfg)),
        "lp-domain" => Some(lp_domain(cfg)),
        "oracle-hmin" => Some(oracle_hmin(cfg)),
        _ => None,
    }
}

fn renyi(ix: Index) -> EntropySpec {
    EntropySpec::renyi(ix).unwrap()
}

fn battery() -> Vec<EntropySpec> {
    vec![
        EntropySpec::shannon(),
        renyi(Index::Finite(0.0)),
        renyi(Index::Finite(0.5)),
        renyi(Index::Finite(2.0)),
        renyi(Index::Infinite),
        EntropySpec::tsallis(Index::Finite(0.5)).unwrap(),
        EntropySpec::tsallis(Index::Finite(2.0)).unwrap(),
    ]
}

fn spec_pairs() -> Vec<(EntropySpec, EntropySpec)> {
    vec![
        (EntropySpec::shannon(), EntropySpec::shannon()),
        (renyi(Index::Finite(2.0)), renyi(Index::Finite(0.5))),
        (
            EntropySpec::tsallis(Index::Finite(2.0)).unwrap(),
            EntropySpec::tsallis(Index::Finite(2.0)).unwrap(),
        ),
    ]
}

fn entropy_props(cfg: &CheckConfig) -> SuiteOutcome {
    let mut worst: f64 = 0.0;
    for n in [3usize, 5] {
        let pairs = majorization_pairs(n, 150, cfg.seed).unwrap();
        for spec in battery() {
            let top = spec.max_entropy(n).unwrap();
            for (p, q) in &pairs {
                // Schur-concavity
                worst = worst.max(spec.entropy(q) - spec.entropy(p));
                // range
                for v in [p, q] {
                    let h = spec.entropy(v);
                    worst = worst.max(-h);
                    worst = worst.max(h - top);
                }
            }
        }
    }
    SuiteOutcome {
        name: "entropy-props",
        passed: worst <= 1e-12,
        detail: format!("worst violation {worst:.2e}"),
    }
}

fn monotonicity(_cfg: &CheckConfig) -> SuiteOutcome {
    let mut worst: f64 = 0.0;
    for spec in battery() {
        let mut prev = f64::INFINITY;
        for k in 1..=1000 {
            let v = h_min(&spec, k as f64 / 1000.0).unwrap();
            worst = worst.max(v - prev);
            prev = v;
        }
        let mut prev = f64::NEG_INFINITY;
        for k in 0..1000 {
            let v = d_theta(&spec, k as f64 * std::f64::consts::FRAC_PI_2 / 1000.0).unwrap();
            worst = worst.max(prev - v);
            prev = v;
        }
    }
    SuiteOutcome {
        name: "monotonicity",
        passed: worst <= 1e-12,
        detail: format!("worst violation {worst:.2e}"),
    }
}

fn closed_forms(_cfg: &CheckConfig) -> SuiteOutcome {
    let mut worst: f64 = 0.0;
    let inf = renyi(Index::Infinite);
    for &c in &[0.4, 0.6, std::f64::consts::FRAC_1_SQRT_2, 0.9] {
        let t = OverlapTriplet::nondegenerate(c).unwrap();
        let r = proposition_bound(&inf, &inf, &t);
        worst = worst.max((r.value - deutsch(c).unwrap()).abs());
    }
    let r0 = renyi(Index::Finite(0.0));
    for k in 1..=50 {
        let c = 0.3 + 0.7 * k as f64 / 51.0;
        let b = proposition_bound(&r0, &r0, &OverlapTriplet::nondegenerate(c).unwrap()).value;
        let expected = (2.0 * 2.0f64.ln()).min((guarded_ceil_inverse(c * c) as f64).ln());
        worst = worst.max((b - expected).abs());
    }
    SuiteOutcome {
        name: "closed-forms",
        passed: worst <= 1e-8,
        detail: format!("worst closed-form gap {worst:.2e}"),
    }
}

fn soundness(cfg: &CheckConfig) -> SuiteOutcome {
    let pairs = spec_pairs();
    let mut min_margin = f64::INFINITY;
    let mut violations = 0u64;
    let unitaries = (cfg.samples / 40).max(10);
    for n in [2usize, 3] {
        let mut sampler = Sampler::new(cfg.seed.wrapping_add(n as u64));
        let basis = Povm::computational(n).unwrap();
        for _ in 0..unitaries {
            let u = sampler.haar_unitary(n).unwrap();
            let rotated = Povm::projective_from_unitary(&u).unwrap();
            let t = OverlapTriplet::nondegenerate(u.overlap()).unwrap();
            for (ea, eb) in &pairs {
                let bound = proposition_bound(ea, eb, &t).value;
                for purity in [Purity::Pure, Purity::Mixed] {
                    for _ in 0..5 {
                        let rho = sampler.state(n, purity).unwrap();
                        let pa = outcome_probabilities(&basis, &rho).unwrap();
                        let pb = outcome_probabilities(&rotated, &rho).unwrap();
                        let margin = ea.entropy(&pa) + eb.entropy(&pb) - bound;
                        min_margin = min_margin.min(margin);
                        if margin < -1e-9 {
                            violations += 1;
                        }
                    }
                }
            }
        }
    }
    SuiteOutcome {
        name: "soundness",
        passed: violations == 0,
        detail: format!("{violations} violations, min margin {min_margin:.2e}"),
    }
}

fn qubit_optimal(cfg: &CheckConfig) -> SuiteOutcome {
    let c = cfg.c;
    if !(c > std::f64::consts::FRAC_1_SQRT_2 && c <= 1.0) {
        return SuiteOutcome {
            name: "qubit-optimal",
            passed: false,
            detail: format!("requires 1/sqrt(2) < c <= 1, got {c}"),
        };
    }
    let t = qubit_rotation(c).unwrap();
    let triplet = OverlapTriplet::nondegenerate(c).unwrap();
    let mut worst: f64 = 0.0;
    for (ea, eb) in spec_pairs() {
        let bound = proposition_bound(&ea, &eb, &triplet).value;
        let oracle =
            min_entropy_sum_states(&ea, &eb, &t, Purity::Pure, cfg.budget, cfg.seed).unwrap();
        worst = worst.max((oracle.minimum_value - bound).abs());
    }
    SuiteOutcome {
        name: "qubit-optimal",
        passed: worst <= 1e-4,
        detail: format!("max |oracle - bound| = {worst:.2e} at c = {c}"),
    }
}

fn lp_domain(cfg: &CheckConfig) -> SuiteOutcome {
    let n = cfg.n;
    let mut sampler = Sampler::new(cfg.seed);
    let basis = Povm::computational(n).unwrap();
    let mut violations = 0u64;
    for draw in 0..cfg.samples {
        let u = sampler.haar_unitary(n).unwrap();
        let b = Povm::projective_from_unitary(&u).unwrap();
        let t = OverlapTriplet::nondegenerate(u.overlap()).unwrap();
        let purity = if draw % 2 == 0 {
            Purity::Pure
        } else {
            Purity::Mixed
        };
        let rho = sampler.state(n, purity).unwrap();
        let pa = outcome_probabilities(&basis, &rho).unwrap();
        let pb = outcome_probabilities(&b, &rho).unwrap();
        if !lp_domain_contains(&t, pa.max_component(), pb.max_component(), n, n) {
            violations += 1;
        }
    }
    let povm_draws = (cfg.samples / 10).max(10);
    for draw in 0..povm_draws {
        let a = sampler.rank_one_povm(n, n + 1).unwrap();
        let b = sampler.rank_one_povm(n, n + 2).unwrap();
        let t = overlap_triplet(&a, &b).unwrap();
        let purity = if draw % 2 == 0 {
            Purity::Pure
        } else {
            Purity::Mixed
        };
        let rho = sampler.state(n, purity).unwrap();
        let pa = outcome_probabilities(&a, &rho).unwrap();
        let pb = outcome_probabilities(&b, &rho).unwrap();
        if !lp_domain_contains(&t, pa.max_component(), pb.max_component(), n + 1, n + 2) {
            violations += 1;
        }
    }
    SuiteOutcome {
        name: "lp-domain",
        passed: violations == 0,
        detail: format!(
            "{violations} violations over {} projective + {povm_draws} POVM draws at N = {n}",
            cfg.samples
        ),
    }
}

fn oracle_hmin(cfg: &CheckConfig) -> SuiteOutcome {
    let mut worst_gap: f64 = 0.0;
    let mut worst_undershoot: f64 = 0.0;
    for n in [3usize, 4] {
        for k in 0..6 {
            let p = 1.0 / n as f64 + (k as f64 + 0.5) / 6.0 * (1.0 - 1.0 / n as f64);
            for spec in battery() {
                let exact = h_min(&spec, p).unwrap();
                let report =
                    min_entropy_fixed_max(&spec, p, n, cfg.budget.max(1000), cfg.seed).unwrap();
                worst_gap = worst_gap.max((report.minimum_value - exact).abs());
                worst_undershoot = worst_undershoot.max(exact - report.minimum_value);
            }
        }
    }
    SuiteOutcome {
        name: "oracle-hmin",
        passed: worst_gap <= 1e-4 && worst_undershoot <= 1e-9,
        detail: format!("max gap {worst_gap:.2e}, max undershoot {worst_undershoot:.2e}"),
    }
}
