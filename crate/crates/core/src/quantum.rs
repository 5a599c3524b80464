//! Dense complex linear algebra for the quantum layer: POVMs, states,
//! outcome probabilities, overlap triplets, Haar-random unitaries, DFT
//! matrices and fractional powers of the circular permutation matrix.

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::entropy::ProbabilityVector;
use crate::error::{Error, Result};
use crate::landau_pollak::OverlapTriplet;

pub type ComplexMatrix = DMatrix<Complex<f64>>;
pub type ComplexVector = DVector<Complex<f64>>;

/// Hermiticity / completeness / trace / unitarity tolerance.
pub const MATRIX_TOL: f64 = 1e-10;

/// Eigenvalues of PSD inputs are clamped at −1e−10 → 0 before square roots.
const PSD_CLAMP: f64 = 1e-10;

fn cplx(re: f64) -> Complex<f64> {
    Complex::new(re, 0.0)
}

fn hermitian_defect(m: &ComplexMatrix) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// the matching eigenvector columns.
fn hermitian_eigen(m: &ComplexMatrix) -> (Vec<f64>, ComplexMatrix) {
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors =
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| eig.eigenvectors[(i, order[j])]);
    (values, vectors)
}

/// Largest singular value, computed as √λ_max(M†M).
pub fn spectral_norm(m: &ComplexMatrix) -> f64 {
    let gram = m.adjoint() * m;
    let (values, _) = hermitian_eigen(&gram);
    values.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Square root of a Hermitian PSD matrix via eigendecomposition.
fn sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (values, vectors) = hermitian_eigen(m);
    if values.first().copied().unwrap_or(0.0) < -PSD_CLAMP {
        return Err(Error::Matrix(format!(
            "matrix is not positive semidefinite (min eigenvalue {})",
            values[0]
        )));
    }
    let roots = DVector::from_iterator(
        values.len(),
        values.iter().map(|&v| cplx(v.max(0.0).sqrt())),
    );
    let scaled = &vectors * ComplexMatrix::from_diagonal(&roots);
    Ok(scaled * vectors.adjoint())
}

/// A positive operator-valued measure: Hermitian PSD elements summing to the
/// identity.
#[derive(Debug, Clone)]
pub struct Povm {
    elements: Vec<ComplexMatrix>,
    dim: usize,
}

impl Povm {
    pub fn new(elements: Vec<ComplexMatrix>) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::Input("a POVM needs at least one element".into()));
        };
        let dim = first.nrows();
        if dim == 0 {
            return Err(Error::Input("zero-dimensional POVM element".into()));
        }
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for (k, e) in elements.iter().enumerate() {
            if e.nrows() != dim || e.ncols() != dim {
                return Err(Error::Matrix(format!(
                    "element {k} is {}x{}, expected {dim}x{dim}",
                    e.nrows(),
                    e.ncols()
                )));
            }
            let defect = hermitian_defect(e);
            if defect > MATRIX_TOL {
                return Err(Error::Matrix(format!(
                    "element {k} is not Hermitian (defect {defect})"
                )));
            }
            let (values, _) = hermitian_eigen(e);
            if values.first().copied().unwrap_or(0.0) < -PSD_CLAMP {
                return Err(Error::Matrix(format!(
                    "element {k} has negative eigenvalue {}",
                    values[0]
                )));
            }
            sum += e;
        }
        let completeness = (&sum - ComplexMatrix::identity(dim, dim)).norm();
        if completeness > MATRIX_TOL {
            return Err(Error::Matrix(format!(
                "elements do not sum to the identity (defect {completeness})"
            )));
        }
        Ok(Povm { elements, dim })
    }

    /// Projectors onto the computational basis.
    pub fn computational(n: usize) -> Result<Self> {
        Self::projective_from_unitary(&UnitaryMatrix::identity(n)?)
    }

    /// Rank-one projectors onto the columns of a unitary.
    pub fn projective_from_unitary(u: &UnitaryMatrix) -> Result<Self> {
        let n = u.dim();
        let elements = (0..n)
            .map(|j| {
                let col = u.matrix().column(j).into_owned();
                &col * col.adjoint()
            })
            .collect();
        Self::new(elements)
    }

    pub fn elements(&self) -> &[ComplexMatrix] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn outcomes(&self) -> usize {
        self.elements.len()
    }
}

/// A density operator: Hermitian, PSD, unit trace.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.nrows();
        if n == 0 || matrix.ncols() != n {
            return Err(Error::Matrix(format!(
                "density operator must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let defect = hermitian_defect(&matrix);
        if defect > MATRIX_TOL {
            return Err(Error::Matrix(format!(
                "density operator is not Hermitian (defect {defect})"
            )));
        }
        let trace = matrix.trace();
        if (trace.re - 1.0).abs() > MATRIX_TOL || trace.im.abs() > MATRIX_TOL {
            return Err(Error::Matrix(format!(
                "density operator trace is {trace}, expected 1"
            )));
        }
        let (values, _) = hermitian_eigen(&matrix);
        if values.first().copied().unwrap_or(0.0) < -PSD_CLAMP {
            return Err(Error::Matrix(format!(
                "density operator has negative eigenvalue {}",
                values[0]
            )));
        }
        Ok(DensityOperator { matrix })
    }

    /// |ψ⟩⟨ψ| from an arbitrary nonzero vector, normalized first.
    pub fn pure_from_vector(psi: &ComplexVector) -> Result<Self> {
        let norm = psi.norm();
        if !(norm > 0.0) {
            return Err(Error::Input("state vector must be nonzero".into()));
        }
        let unit = psi / cplx(norm);
        Self::new(&unit * unit.adjoint())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// An N×N unitary matrix; in the nondegenerate setting, the basis
/// transformation T with T_ij = ⟨b_j|a_i⟩.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    matrix: ComplexMatrix,
}

impl UnitaryMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let n = matrix.nrows();
        if n == 0 || matrix.ncols() != n {
            return Err(Error::Matrix(format!(
                "unitary must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let defect = (&matrix * matrix.adjoint() - ComplexMatrix::identity(n, n)).norm();
        if defect > MATRIX_TOL {
            return Err(Error::Matrix(format!(
                "matrix is not unitary (defect {defect})"
            )));
        }
        Ok(UnitaryMatrix { matrix })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("dimension must be at least 1".into()));
        }
        Ok(UnitaryMatrix {
            matrix: ComplexMatrix::identity(n, n),
        })
    }

    /// Greatest entry modulus max_{i,j} |T_ij| ∈ [1/√N, 1], the overlap
    /// between the two eigenbases related by this matrix.
    pub fn overlap(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Outcome probabilities p_i = Tr(A_i ρ), clamped and renormalized within
/// 1e−10 drift.
pub fn outcome_probabilities(povm: &Povm, rho: &DensityOperator) -> Result<ProbabilityVector> {
    if povm.dim() != rho.dim() {
        return Err(Error::Matrix(format!(
            "POVM dimension {} does not match state dimension {}",
            povm.dim(),
            rho.dim()
        )));
    }
    let probs: Vec<f64> = povm
        .elements()
        .iter()
        .map(|a| (a * rho.matrix()).trace().re)
        .collect();
    ProbabilityVector::renormalized(probs, MATRIX_TOL)
}

/// The overlap triplet (c_A, c_B, c_{A,B}) of a POVM pair: spectral norms of
/// the element square roots and of their cross products. Reduces to
/// (1, 1, max|⟨b_j|a_i⟩|) for projective nondegenerate measurements.
pub fn overlap_triplet(a: &Povm, b: &Povm) -> Result<OverlapTriplet> {
    if a.dim() != b.dim() {
        return Err(Error::Matrix(format!(
            "POVM dimensions differ: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    let roots_a: Vec<ComplexMatrix> = a.elements().iter().map(sqrt_psd).collect::<Result<_>>()?;
    let roots_b: Vec<ComplexMatrix> = b.elements().iter().map(sqrt_psd).collect::<Result<_>>()?;
    let c_a = roots_a.iter().map(spectral_norm).fold(0.0, f64::max);
    let c_b = roots_b.iter().map(spectral_norm).fold(0.0, f64::max);
    let mut c_ab: f64 = 0.0;
    for ra in &roots_a {
        for rb in &roots_b {
            c_ab = c_ab.max(spectral_norm(&(ra * rb)));
        }
    }
    OverlapTriplet::new(c_a, c_b, c_ab)
}

/// The real 2×2 rotation with overlap c, the canonical qubit basis
/// transformation: [[c, −s], [s, c]] with s = √(1−c²).
pub fn qubit_rotation(c: f64) -> Result<UnitaryMatrix> {
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::Input(format!("overlap must lie in (0, 1], got {c}")));
    }
    let s = (1.0 - c * c).sqrt();
    UnitaryMatrix::new(ComplexMatrix::from_row_slice(
        2,
        2,
        &[cplx(c), cplx(-s), cplx(s), cplx(c)],
    ))
}

/// The unitary DFT matrix F_jk = e^{2πi jk/N}/√N.
pub fn dft_matrix(n: usize) -> Result<UnitaryMatrix> {
    if n == 0 {
        return Err(Error::Input("dimension must be at least 1".into()));
    }
    let scale = 1.0 / (n as f64).sqrt();
    let tau = std::f64::consts::TAU;
    let m = ComplexMatrix::from_fn(n, n, |j, k| {
        Complex::from_polar(scale, tau * (j * k % n) as f64 / n as f64)
    });
    UnitaryMatrix::new(m)
}

/// T_N(s): the circular N-dimensional permutation matrix raised to the real
/// power s through its DFT eigenbasis, with eigenphases on the principal
/// branch (−π, π]. One-parameter group: T(s)T(t) = T(s+t). s = 0 gives the
/// identity, s = 1 the permutation itself.
pub fn permutation_power(n: usize, s: f64) -> Result<UnitaryMatrix> {
    if n < 2 {
        return Err(Error::Input(format!(
            "dimension must be at least 2, got {n}"
        )));
    }
    if !s.is_finite() || !(0.0..=1.0).contains(&s) {
        return Err(Error::Input(format!("power must lie in [0, 1], got {s}")));
    }
    let tau = std::f64::consts::TAU;
    let f = dft_matrix(n)?;
    let phases = DVector::from_iterator(
        n,
        (0..n).map(|k| {
            let mut phase = tau * k as f64 / n as f64;
            if phase > std::f64::consts::PI {
                phase -= tau;
            }
            Complex::from_polar(1.0, s * phase)
        }),
    );
    let m = f.matrix() * ComplexMatrix::from_diagonal(&phases) * f.matrix().adjoint();
    UnitaryMatrix::new(m)
}

/// Purity class of a sampled state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purity {
    Pure,
    Mixed,
}

/// Seeded sampler for Haar unitaries, random states and random POVMs. Each
/// sampler owns its RNG stream; concurrent use requires distinct instances.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha12Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    fn gaussian(&mut self) -> Complex<f64> {
        let re: f64 = self.rng.sample(StandardNormal);
        let im: f64 = self.rng.sample(StandardNormal);
        Complex::new(re, im) / cplx(std::f64::consts::SQRT_2)
    }

    fn ginibre(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |_, _| self.gaussian())
    }

    /// Haar-distributed unitary: QR of a complex Ginibre matrix with the
    /// R-diagonal phases divided out (plain QR alone is not Haar).
    pub fn haar_unitary(&mut self, n: usize) -> Result<UnitaryMatrix> {
        if n == 0 {
            return Err(Error::Input("dimension must be at least 1".into()));
        }
        let g = self.ginibre(n, n);
        let qr = g.qr();
        let r = qr.r();
        let phases = DVector::from_iterator(
            n,
            (0..n).map(|k| {
                let d = r[(k, k)];
                if d.norm() > 0.0 {
                    d / cplx(d.norm())
                } else {
                    cplx(1.0)
                }
            }),
        );
        UnitaryMatrix::new(qr.q() * ComplexMatrix::from_diagonal(&phases))
    }

    /// A Haar-random unit state vector.
    pub fn state_vector(&mut self, n: usize) -> Result<ComplexVector> {
        if n == 0 {
            return Err(Error::Input("dimension must be at least 1".into()));
        }
        loop {
            let v = DVector::from_fn(n, |_, _| self.gaussian());
            let norm = v.norm();
            if norm > 1e-12 {
                return Ok(v / cplx(norm));
            }
        }
    }

    /// A random density operator: a Haar vector's projector (pure) or a
    /// trace-normalized Wishart matrix GG† (mixed).
    pub fn state(&mut self, n: usize, purity: Purity) -> Result<DensityOperator> {
        match purity {
            Purity::Pure => {
                let v = self.state_vector(n)?;
                DensityOperator::pure_from_vector(&v)
            }
            Purity::Mixed => {
                if n == 0 {
                    return Err(Error::Input("dimension must be at least 1".into()));
                }
                let g = self.ginibre(n, n);
                let w = &g * g.adjoint();
                let trace = w.trace().re;
                DensityOperator::new(w / cplx(trace))
            }
        }
    }

    /// A random rank-one POVM with `outcomes` elements, completed to the
    /// identity: A_i = S^{−1/2} g_i g_i† S^{−1/2} with S = Σ g_i g_i†.
    pub fn rank_one_povm(&mut self, n: usize, outcomes: usize) -> Result<Povm> {
        if outcomes < n {
            return Err(Error::Input(format!(
                "need at least {n} rank-one outcomes to span dimension {n}"
            )));
        }
        let vectors: Vec<ComplexVector> = (0..outcomes)
            .map(|_| DVector::from_fn(n, |_, _| self.gaussian()))
            .collect();
        let mut frame = ComplexMatrix::zeros(n, n);
        for v in &vectors {
            frame += v * v.adjoint();
        }
        let (values, basis) = hermitian_eigen(&frame);
        if values.first().copied().unwrap_or(0.0) < 1e-9 {
            return Err(Error::Matrix(
                "sampled frame is numerically singular; draw again".into(),
            ));
        }
        let inv_roots =
            DVector::from_iterator(values.len(), values.iter().map(|&v| cplx(1.0 / v.sqrt())));
        let whitener = &basis * ComplexMatrix::from_diagonal(&inv_roots) * basis.adjoint();
        let elements = vectors
            .iter()
            .map(|v| {
                let w = &whitener * v;
                &w * w.adjoint()
            })
            .collect();
        Povm::new(elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn povm_validation() {
        assert!(Povm::computational(3).is_ok());
        // halves do not sum to the identity
        let half = ComplexMatrix::identity(2, 2) * cplx(0.25);
        assert!(Povm::new(vec![half.clone(), half.clone()]).is_err());
        // non-Hermitian element
        let mut bad = ComplexMatrix::identity(2, 2) * cplx(0.5);
        bad[(0, 1)] = Complex::new(0.3, 0.1);
        let rest = ComplexMatrix::identity(2, 2) * cplx(0.5);
        assert!(Povm::new(vec![bad, rest]).is_err());
    }

    #[test]
    fn outcome_probability_examples() {
        let basis = Povm::computational(3).unwrap();
        let psi = ComplexVector::from_vec(vec![cplx(1.0), cplx(0.0), cplx(0.0)]);
        let rho = DensityOperator::pure_from_vector(&psi).unwrap();
        let p = outcome_probabilities(&basis, &rho).unwrap();
        assert_eq!(p.components(), &[1.0, 0.0, 0.0]);

        let mixed = DensityOperator::new(ComplexMatrix::identity(3, 3) * cplx(1.0 / 3.0)).unwrap();
        let p = outcome_probabilities(&basis, &mixed).unwrap();
        for &x in p.components() {
            assert_abs_diff_eq!(x, 1.0 / 3.0, epsilon = 1e-14);
        }

        // Hadamard-rotated projectors measured on |0><0|
        let h = UnitaryMatrix::new(
            ComplexMatrix::from_row_slice(2, 2, &[cplx(1.0), cplx(1.0), cplx(1.0), cplx(-1.0)])
                / cplx(std::f64::consts::SQRT_2),
        )
        .unwrap();
        let povm = Povm::projective_from_unitary(&h).unwrap();
        let zero =
            DensityOperator::pure_from_vector(&ComplexVector::from_vec(vec![cplx(1.0), cplx(0.0)]))
                .unwrap();
        let p = outcome_probabilities(&povm, &zero).unwrap();
        assert_abs_diff_eq!(p.components()[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(p.components()[1], 0.5, epsilon = 1e-12);

        let rho2 = DensityOperator::new(ComplexMatrix::identity(2, 2) * cplx(0.5)).unwrap();
        assert!(outcome_probabilities(&basis, &rho2).is_err());
    }

    #[test]
    fn projective_triplet_matches_unitary_overlap() {
        let mut sampler = Sampler::new(7);
        for n in [2usize, 3, 4] {
            let u = sampler.haar_unitary(n).unwrap();
            let a = Povm::computational(n).unwrap();
            let b = Povm::projective_from_unitary(&u).unwrap();
            let t = overlap_triplet(&a, &b).unwrap();
            assert_abs_diff_eq!(t.c_a(), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(t.c_b(), 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(t.c_ab(), u.overlap(), epsilon = 1e-12);
        }
    }

    #[test]
    fn identical_bases_are_fully_overlapping() {
        let a = Povm::computational(4).unwrap();
        let t = overlap_triplet(&a, &a).unwrap();
        assert_eq!((t.c_a(), t.c_b(), t.c_ab()), (1.0, 1.0, 1.0));
    }

    #[test]
    fn dft_bases_are_complementary() {
        for n in [2usize, 3, 5, 8] {
            let f = dft_matrix(n).unwrap();
            assert_abs_diff_eq!(f.overlap(), 1.0 / (n as f64).sqrt(), epsilon = 1e-12);
            let a = Povm::computational(n).unwrap();
            let b = Povm::projective_from_unitary(&f).unwrap();
            let t = overlap_triplet(&a, &b).unwrap();
            assert_abs_diff_eq!(t.c_ab(), 1.0 / (n as f64).sqrt(), epsilon = 1e-11);
        }
    }

    #[test]
    fn haar_scalar_case() {
        let mut sampler = Sampler::new(0);
        let u = sampler.haar_unitary(1).unwrap();
        assert_abs_diff_eq!(u.matrix()[(0, 0)].norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn haar_first_moment() {
        // <|U_11|^2> = 1/N for Haar; 3 standard errors at 10^4 draws
        let n = 3;
        let draws = 10_000;
        let mut sampler = Sampler::new(42);
        let mut mean = 0.0;
        for _ in 0..draws {
            let u = sampler.haar_unitary(n).unwrap();
            mean += u.matrix()[(0, 0)].norm_sqr();
            let c = u.overlap();
            assert!(c >= 1.0 / (n as f64).sqrt() - 1e-12 && c <= 1.0 + 1e-12);
        }
        mean /= draws as f64;
        let nf = n as f64;
        let variance = 2.0 / (nf * (nf + 1.0)) - 1.0 / (nf * nf);
        let se = (variance / draws as f64).sqrt();
        assert!(
            (mean - 1.0 / nf).abs() <= 3.0 * se,
            "mean {mean} vs 1/N {} (3se = {})",
            1.0 / nf,
            3.0 * se
        );
    }

    #[test]
    fn haar_is_deterministic_per_seed() {
        let a = Sampler::new(5).haar_unitary(3).unwrap();
        let b = Sampler::new(5).haar_unitary(3).unwrap();
        assert_eq!(a.matrix(), b.matrix());
    }

    fn cycle_matrix(n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n, n, |i, j| {
            if j == (i + 1) % n {
                cplx(1.0)
            } else {
                cplx(0.0)
            }
        })
    }

    #[test]
    fn permutation_power_endpoints() {
        for n in [2usize, 3, 5] {
            let t0 = permutation_power(n, 0.0).unwrap();
            assert!((t0.matrix() - ComplexMatrix::identity(n, n)).norm() < 1e-10);
            assert_abs_diff_eq!(t0.overlap(), 1.0, epsilon = 1e-10);
            let t1 = permutation_power(n, 1.0).unwrap();
            assert!((t1.matrix() - cycle_matrix(n)).norm() < 1e-10);
            assert_abs_diff_eq!(t1.overlap(), 1.0, epsilon = 1e-10);
        }
        assert!(permutation_power(1, 0.5).is_err());
        assert!(permutation_power(3, 1.5).is_err());
    }

    #[test]
    fn half_power_of_three_cycle() {
        // entries are 2/3 and -1/3; the overlap is 2/3
        let t = permutation_power(3, 0.5).unwrap();
        assert_abs_diff_eq!(t.overlap(), 2.0 / 3.0, epsilon = 1e-10);
        // independent square check: T(1/2) T(1/2) = T(1)
        let sq = t.matrix() * t.matrix();
        assert!((sq - cycle_matrix(3)).norm() < 1e-10);
    }

    #[test]
    fn random_states_are_valid() {
        let mut sampler = Sampler::new(11);
        for n in [2usize, 3, 5] {
            let pure = sampler.state(n, Purity::Pure).unwrap();
            let (values, _) = hermitian_eigen(pure.matrix());
            // rank one: all but the top eigenvalue vanish
            for &v in &values[..n - 1] {
                assert!(v.abs() < 1e-10);
            }
            assert_abs_diff_eq!(values[n - 1], 1.0, epsilon = 1e-10);

            let mixed = sampler.state(n, Purity::Mixed).unwrap();
            assert_abs_diff_eq!(mixed.matrix().trace().re, 1.0, epsilon = 1e-12);
        }
        // Bloch vector of a pure qubit state has unit length
        let rho = sampler.state(2, Purity::Pure).unwrap();
        let m = rho.matrix();
        let bloch_sq = (m[(0, 0)].re - m[(1, 1)].re).powi(2) + 4.0 * m[(0, 1)].norm_sqr();
        assert_abs_diff_eq!(bloch_sq.sqrt(), 1.0, epsilon = 1e-10);
    }

    #[test]
    fn rank_one_povm_is_complete() {
        let mut sampler = Sampler::new(3);
        let povm = sampler.rank_one_povm(3, 5).unwrap();
        assert_eq!(povm.outcomes(), 5);
        for e in povm.elements() {
            let (values, _) = hermitian_eigen(e);
            // rank one
            for &v in &values[..2] {
                assert!(v.abs() < 1e-10);
            }
        }
        assert!(sampler.rank_one_povm(3, 2).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn permutation_powers_form_a_group(n in 2usize..6, a in 0.0f64..1.0, b in 0.0f64..1.0) {
            let (s, t) = (a.min(b) * 0.5, b.max(a) * 0.5);
            let ts = permutation_power(n, s).unwrap();
            let tt = permutation_power(n, t).unwrap();
            let tst = permutation_power(n, s + t).unwrap();
            let product = ts.matrix() * tt.matrix();
            prop_assert!((product - tst.matrix()).norm() < 1e-9);
        }
    }
}
