//! Salicrú (h,φ)-entropies and the named one-parameter families.
//!
//! An (h,φ)-entropy is `H(p) = h(Σ_k φ(p_k))` where either φ is strictly
//! concave and h strictly increasing, or φ is strictly convex and h strictly
//! decreasing, with φ(0) = 0 and h(φ(1)) = 0. Shannon, Rényi and Tsallis
//! entropies are the shipped named instances; Rényi and Tsallis are the
//! F_λ family `f(Σ p_k^λ)/(1−λ)` with f = log and f = id−1 respectively.
//!
//! All logarithms are natural.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Indices closer to 1 than this evaluate through the Shannon limit.
pub const SHANNON_LIMIT_TOL: f64 = 1e-9;

/// Components at or below this threshold do not count toward the support
/// (the λ = 0 branch).
pub const SUPPORT_THRESHOLD: f64 = 1e-12;

/// An entropic index λ ∈ [0, ∞]. Infinity is a distinguished value, never a
/// float, so dispatch to the min-entropy limit is unambiguous.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Index {
    Finite(f64),
    Infinite,
}

impl Index {
    /// True when the index falls in the Shannon window |λ−1| < 1e−9.
    pub fn is_shannon(self) -> bool {
        matches!(self, Index::Finite(v) if (v - 1.0).abs() < SHANNON_LIMIT_TOL)
    }

    /// True for the support-counting branch λ ≈ 0.
    pub fn is_zero(self) -> bool {
        matches!(self, Index::Finite(v) if v < SUPPORT_THRESHOLD)
    }

    fn validate(self) -> Result<Self> {
        match self {
            Index::Finite(v) if !v.is_finite() || v < 0.0 => Err(Error::InvalidIndex(format!(
                "index must be a nonnegative real or inf, got {v}"
            ))),
            other => Ok(other),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(v) => write!(f, "{v}"),
            Index::Infinite => write!(f, "inf"),
        }
    }
}

/// The `f` of the F_λ family, Rényi (`log`) or Tsallis (`id − 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FTag {
    Log,
    IdMinusOne,
}

/// Convexity class of φ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiShape {
    StrictlyConcave,
    StrictlyConvex,
}

/// Monotonicity of h.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HDirection {
    Increasing,
    Decreasing,
}

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Shannon,
    Renyi(Index),
    Tsallis(Index),
    Custom { phi: ScalarFn, h: ScalarFn },
}

/// An entropic functional pair with its concavity/monotonicity metadata.
#[derive(Clone)]
pub struct EntropySpec {
    kind: Kind,
    phi_shape: PhiShape,
    h_direction: HDirection,
}

impl fmt::Debug for EntropySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EntropySpec({self})")
    }
}

impl fmt::Display for EntropySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Shannon => write!(f, "shannon"),
            Kind::Renyi(ix) => write!(f, "renyi:{ix}"),
            Kind::Tsallis(ix) => write!(f, "tsallis:{ix}"),
            Kind::Custom { .. } => write!(f, "custom"),
        }
    }
}

/// Metadata for a power-law φ(x) = x^λ with increasing h for λ < 1,
/// decreasing h for λ > 1. Infinity inherits the λ > 1 class.
fn power_metadata(index: Index) -> (PhiShape, HDirection) {
    let convex = match index {
        Index::Finite(v) => v > 1.0,
        Index::Infinite => true,
    };
    if convex {
        (PhiShape::StrictlyConvex, HDirection::Decreasing)
    } else {
        (PhiShape::StrictlyConcave, HDirection::Increasing)
    }
}

impl EntropySpec {
    /// Shannon entropy: φ(x) = −x log x, h = id.
    pub fn shannon() -> Self {
        EntropySpec {
            kind: Kind::Shannon,
            phi_shape: PhiShape::StrictlyConcave,
            h_direction: HDirection::Increasing,
        }
    }

    /// Rényi entropy of index λ: `log(Σ p_k^λ)/(1−λ)`.
    pub fn renyi(index: Index) -> Result<Self> {
        let index = index.validate()?;
        let (phi_shape, h_direction) = power_metadata(index);
        Ok(EntropySpec {
            kind: Kind::Renyi(index),
            phi_shape,
            h_direction,
        })
    }

    /// Tsallis entropy of index λ: `(1 − Σ p_k^λ)/(λ−1)`.
    pub fn tsallis(index: Index) -> Result<Self> {
        let index = index.validate()?;
        let (phi_shape, h_direction) = power_metadata(index);
        Ok(EntropySpec {
            kind: Kind::Tsallis(index),
            phi_shape,
            h_direction,
        })
    }

    /// An F_λ family member: `f(Σ p_k^λ)/(1−λ)`. The two shipped tags map
    /// onto the named families.
    pub fn general_f(f: FTag, index: Index) -> Result<Self> {
        match f {
            FTag::Log => Self::renyi(index),
            FTag::IdMinusOne => Self::tsallis(index),
        }
    }

    /// A custom (h,φ) pair. The caller states the concavity/monotonicity
    /// class; φ(0) = 0 and h(φ(1)) = 0 are checked numerically.
    pub fn custom<P, H>(phi: P, h: H, phi_shape: PhiShape, h_direction: HDirection) -> Result<Self>
    where
        P: Fn(f64) -> f64 + Send + Sync + 'static,
        H: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let matched = matches!(
            (phi_shape, h_direction),
            (PhiShape::StrictlyConcave, HDirection::Increasing)
                | (PhiShape::StrictlyConvex, HDirection::Decreasing)
        );
        if !matched {
            return Err(Error::Input(
                "phi/h classes must pair concave with increasing or convex with decreasing".into(),
            ));
        }
        let spec = EntropySpec {
            kind: Kind::Custom {
                phi: Arc::new(phi),
                h: Arc::new(h),
            },
            phi_shape,
            h_direction,
        };
        spec.check_functionals()?;
        Ok(spec)
    }

    pub fn phi_shape(&self) -> PhiShape {
        self.phi_shape
    }

    pub fn h_direction(&self) -> HDirection {
        self.h_direction
    }

    /// The index for the named power families, `None` for Shannon/custom.
    pub fn index(&self) -> Option<Index> {
        match self.kind {
            Kind::Renyi(ix) | Kind::Tsallis(ix) => Some(ix),
            _ => None,
        }
    }

    /// The F-family tag of a named kind. Shannon reports `Log`: it is the
    /// λ → 1 member of both families and the log form is its usual
    /// comparison scale. Custom specs report `None`.
    pub fn family_tag(&self) -> Option<FTag> {
        match self.kind {
            Kind::Shannon | Kind::Renyi(_) => Some(FTag::Log),
            Kind::Tsallis(_) => Some(FTag::IdMinusOne),
            Kind::Custom { .. } => None,
        }
    }

    /// φ/h evaluators when the pair has an explicit form (everything except
    /// the infinite-index limits).
    fn phi_h(&self) -> Option<(ScalarFn, ScalarFn)> {
        match &self.kind {
            Kind::Shannon => Some((
                Arc::new(|x: f64| if x > 0.0 { -x * x.ln() } else { 0.0 }),
                Arc::new(|y: f64| y),
            )),
            Kind::Renyi(Index::Finite(l)) => {
                let (l0, l1) = (*l, *l);
                Some((
                    Arc::new(move |x: f64| if x > 0.0 { x.powf(l0) } else { 0.0 }),
                    Arc::new(move |y: f64| y.ln() / (1.0 - l1)),
                ))
            }
            Kind::Tsallis(Index::Finite(l)) => {
                let (l0, l1) = (*l, *l);
                Some((
                    Arc::new(move |x: f64| if x > 0.0 { x.powf(l0) } else { 0.0 }),
                    Arc::new(move |y: f64| (y - 1.0) / (1.0 - l1)),
                ))
            }
            Kind::Renyi(Index::Infinite) | Kind::Tsallis(Index::Infinite) => None,
            Kind::Custom { phi, h } => Some((phi.clone(), h.clone())),
        }
    }

    /// Numeric functional checks: φ(0) = 0 and h(φ(1)) = 0 within 1e−12.
    /// Skipped for infinite indices, whose entropy is only defined as a limit.
    pub fn check_functionals(&self) -> Result<()> {
        if let Some(ix) = self.index() {
            if ix.is_shannon() || ix.is_zero() {
                // λ ≈ 1 evaluates through Shannon and λ ≈ 0 through support
                // counting; both satisfy the conventions by construction.
                return Ok(());
            }
        }
        let Some((phi, h)) = self.phi_h() else {
            return Ok(());
        };
        let phi0 = phi(0.0);
        if phi0.abs() > 1e-12 {
            return Err(Error::Input(format!("phi(0) = {phi0}, expected 0")));
        }
        let h1 = h(phi(1.0));
        if h1.abs() > 1e-12 {
            return Err(Error::Input(format!("h(phi(1)) = {h1}, expected 0")));
        }
        Ok(())
    }

    /// Entropy of a distribution given as (value, multiplicity) terms whose
    /// weighted values sum to 1. Shared by `entropy` and the fixed-max
    /// minimal-entropy closed form.
    pub(crate) fn entropy_of_terms(&self, terms: &[(f64, f64)]) -> f64 {
        match &self.kind {
            Kind::Shannon => shannon_terms(terms),
            Kind::Renyi(ix) | Kind::Tsallis(ix) if ix.is_shannon() => shannon_terms(terms),
            Kind::Renyi(ix) => match ix {
                Index::Infinite => -max_term(terms).ln(),
                Index::Finite(_) if ix.is_zero() => support_terms(terms).ln(),
                Index::Finite(l) => power_sum(terms, *l).ln() / (1.0 - l),
            },
            Kind::Tsallis(ix) => match ix {
                // λ → ∞ limit of (1 − Σ p^λ)/(λ−1); zero for every p.
                Index::Infinite => 0.0,
                Index::Finite(_) if ix.is_zero() => support_terms(terms) - 1.0,
                Index::Finite(l) => (1.0 - power_sum(terms, *l)) / (l - 1.0),
            },
            Kind::Custom { phi, h } => {
                let sum: f64 = terms.iter().map(|&(x, w)| w * phi(x)).sum();
                h(sum)
            }
        }
    }

    /// H(p) = h(Σ_k φ(p_k)) with the family limits: λ = 1 is Shannon,
    /// Rényi λ = ∞ is −log max_k p_k, Rényi λ = 0 is log of the support size.
    pub fn entropy(&self, p: &ProbabilityVector) -> f64 {
        let terms: Vec<(f64, f64)> = p.components().iter().map(|&x| (x, 1.0)).collect();
        self.entropy_of_terms(&terms)
    }

    /// The maximal entropy h(N φ(1/N)), attained by the uniform distribution.
    pub fn max_entropy(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Input("max_entropy requires N >= 1".into()));
        }
        Ok(self.entropy_of_terms(&[(1.0 / n as f64, n as f64)]))
    }
}

fn shannon_terms(terms: &[(f64, f64)]) -> f64 {
    terms
        .iter()
        .map(|&(x, w)| if x > 0.0 { -w * x * x.ln() } else { 0.0 })
        .sum()
}

fn power_sum(terms: &[(f64, f64)], l: f64) -> f64 {
    terms
        .iter()
        .map(|&(x, w)| if x > 0.0 { w * x.powf(l) } else { 0.0 })
        .sum()
}

fn support_terms(terms: &[(f64, f64)]) -> f64 {
    terms
        .iter()
        .map(|&(x, w)| if x > SUPPORT_THRESHOLD { w } else { 0.0 })
        .sum()
}

fn max_term(terms: &[(f64, f64)]) -> f64 {
    terms.iter().map(|&(x, _)| x).fold(0.0, f64::max)
}

impl FromStr for EntropySpec {
    type Err = Error;

    /// Grammar: `shannon | renyi:<λ|inf> | tsallis:<λ>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} (in entropy spec {s:?})"));
        if s == "shannon" {
            return Ok(EntropySpec::shannon());
        }
        let (family, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected shannon, renyi:<index|inf> or tsallis:<index>"))?;
        match family {
            "renyi" => {
                let ix = if arg == "inf" {
                    Index::Infinite
                } else {
                    Index::Finite(arg.parse::<f64>().map_err(|_| bad("bad index"))?)
                };
                EntropySpec::renyi(ix)
            }
            "tsallis" => {
                let v = arg.parse::<f64>().map_err(|_| bad("bad index"))?;
                EntropySpec::tsallis(Index::Finite(v))
            }
            _ => Err(bad("unknown family")),
        }
    }
}

/// S = (1 − exp((1−λ) R))/(λ−1), the Rényi → Tsallis mapping at fixed λ.
/// Written through `exp_m1` so the roundtrip with its inverse holds to
/// machine precision even for large (1−λ)R.
pub fn renyi_to_tsallis(lambda: f64, r: f64) -> Result<f64> {
    let lambda = mapping_index(lambda)?;
    if (lambda - 1.0).abs() < SHANNON_LIMIT_TOL {
        return Ok(r);
    }
    Ok(-((1.0 - lambda) * r).exp_m1() / (lambda - 1.0))
}

/// Inverse mapping: R = log(1 + (1−λ) S)/(1−λ).
pub fn tsallis_to_renyi(lambda: f64, s: f64) -> Result<f64> {
    let lambda = mapping_index(lambda)?;
    if (lambda - 1.0).abs() < SHANNON_LIMIT_TOL {
        return Ok(s);
    }
    let arg = (1.0 - lambda) * s;
    if arg <= -1.0 {
        return Err(Error::Domain(format!(
            "tsallis value {s} out of range for index {lambda}"
        )));
    }
    Ok(arg.ln_1p() / (1.0 - lambda))
}

fn mapping_index(lambda: f64) -> Result<f64> {
    if !lambda.is_finite() || lambda < 0.0 {
        return Err(Error::InvalidIndex(format!(
            "mapping index must be a nonnegative real, got {lambda}"
        )));
    }
    Ok(lambda)
}

/// A probability vector: nonnegative components summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    components: Vec<f64>,
}

impl ProbabilityVector {
    /// Strict constructor: components ≥ −1e−15 (tiny negatives are clamped
    /// to zero) and sum within 1e−12 of one.
    pub fn new(components: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(components, 1e-15, 1e-12, false)
    }

    /// Constructor for measured probabilities: clamps negatives down to
    /// −`drift` and renormalizes a sum within `drift` of one.
    pub fn renormalized(components: Vec<f64>, drift: f64) -> Result<Self> {
        Self::with_tolerance(components, drift, drift, true)
    }

    fn with_tolerance(
        mut components: Vec<f64>,
        neg_tol: f64,
        sum_tol: f64,
        renormalize: bool,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidProbability("empty vector".into()));
        }
        for c in &mut components {
            if !c.is_finite() {
                return Err(Error::InvalidProbability(format!(
                    "non-finite component {c}"
                )));
            }
            if *c < -neg_tol {
                return Err(Error::InvalidProbability(format!("negative component {c}")));
            }
            if *c < 0.0 {
                *c = 0.0;
            }
        }
        let sum: f64 = components.iter().sum();
        if (sum - 1.0).abs() > sum_tol {
            return Err(Error::InvalidProbability(format!(
                "components sum to {sum}, expected 1"
            )));
        }
        if renormalize && sum > 0.0 {
            for c in &mut components {
                *c /= sum;
            }
        }
        Ok(ProbabilityVector { components })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProbability("uniform requires N >= 1".into()));
        }
        Ok(ProbabilityVector {
            components: vec![1.0 / n as f64; n],
        })
    }

    pub fn delta(n: usize, position: usize) -> Result<Self> {
        if position >= n {
            return Err(Error::InvalidProbability(format!(
                "delta position {position} out of range for N = {n}"
            )));
        }
        let mut components = vec![0.0; n];
        components[position] = 1.0;
        Ok(ProbabilityVector { components })
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn max_component(&self) -> f64 {
        self.components.iter().cloned().fold(0.0, f64::max)
    }

    /// Majorization test `self ≺ other`: every partial sum of the decreasing
    /// rearrangement of `self` is at most the matching sum of `other`, within
    /// 1e−12. Vectors of different lengths compare as if zero-padded.
    pub fn majorized_by(&self, other: &Self) -> bool {
        let mut p = self.components.clone();
        let mut q = other.components.clone();
        p.sort_by(|a, b| b.total_cmp(a));
        q.sort_by(|a, b| b.total_cmp(a));
        let n = p.len().max(q.len());
        let (mut sp, mut sq) = (0.0, 0.0);
        for k in 0..n {
            sp += p.get(k).copied().unwrap_or(0.0);
            sq += q.get(k).copied().unwrap_or(0.0);
            if sp > sq + 1e-12 {
                return false;
            }
        }
        true
    }
}
