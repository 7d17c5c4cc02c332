//! Dense complex linear algebra helpers shared by every module.
//!
//! Everything here works on `nalgebra` dynamic matrices over `Complex<f64>`.
//! Conventions: composite indices are big-endian (the first factor of a
//! tensor product is the most significant digit), eigenvalues are returned
//! ascending, singular values descending.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

/// Relative eigenvalue cutoff for rank and support decisions.
pub const TAU_RANK: f64 = 1e-9;
/// Absolute clamp for negative eigenvalue drift of nominally PSD operators.
pub const TAU_PSD: f64 = 1e-10;

pub fn identity(dim: usize) -> CMat {
    CMat::identity(dim, dim)
}

pub fn trace(m: &CMat) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Eigendecomposition of a Hermitian matrix; eigenvalues ascending,
/// eigenvectors as the matching columns.
pub fn herm_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let se = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..se.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| se.eigenvalues[a].total_cmp(&se.eigenvalues[b]));
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let n = m.nrows();
    let mut vectors = CMat::zeros(n, n);
    for (col, &i) in order.iter().enumerate() {
        vectors.set_column(col, &se.eigenvectors.column(i));
    }
    (values, vectors)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn herm_eigenvalues(m: &CMat) -> Vec<f64> {
    let mut v: Vec<f64> = m.clone().symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Clamp small negative eigenvalue drift to zero. Values below `-TAU_PSD`
/// are reported untouched so callers can detect genuine negativity.
pub fn clamp_eigenvalue(x: f64) -> f64 {
    if x < 0.0 && x >= -TAU_PSD {
        0.0
    } else {
        x
    }
}

/// Apply `f` to the eigenvalues of a Hermitian matrix.
pub fn herm_function(m: &CMat, f: impl Fn(f64) -> f64) -> CMat {
    let (values, vectors) = herm_eigen(m);
    let diag = CVec::from_iterator(
        values.len(),
        values.iter().map(|&x| Complex64::new(f(x), 0.0)),
    );
    &vectors * CMat::from_diagonal(&diag) * vectors.adjoint()
}

/// Square root of a PSD matrix (negative drift clamped to zero).
pub fn herm_sqrt(m: &CMat) -> CMat {
    herm_function(m, |x| clamp_eigenvalue(x).max(0.0).sqrt())
}

/// Pseudo-inverse square root on the support of a PSD matrix. Eigenvalues
/// below `TAU_RANK` times the largest are treated as zero.
pub fn pinv_sqrt(m: &CMat) -> CMat {
    let (values, vectors) = herm_eigen(m);
    let top = values.last().copied().unwrap_or(0.0).max(0.0);
    let cut = TAU_RANK * top;
    let diag = CVec::from_iterator(
        values.len(),
        values.iter().map(|&x| {
            if x > cut {
                Complex64::new(1.0 / x.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
    );
    &vectors * CMat::from_diagonal(&diag) * vectors.adjoint()
}

/// Projector onto the support of a PSD matrix, with the same relative cutoff
/// as `pinv_sqrt`.
pub fn support_projector(m: &CMat) -> CMat {
    herm_support(m).0
}

/// Support projector together with the support rank.
pub fn herm_support(m: &CMat) -> (CMat, usize) {
    let (values, vectors) = herm_eigen(m);
    let top = values.last().copied().unwrap_or(0.0).max(0.0);
    let cut = TAU_RANK * top;
    let n = m.nrows();
    let mut proj = CMat::zeros(n, n);
    let mut rank = 0;
    for (i, &x) in values.iter().enumerate() {
        if x > cut {
            let v = vectors.column(i);
            proj += &v * v.adjoint();
            rank += 1;
        }
    }
    (proj, rank)
}

/// Unnormalized trace norm of a Hermitian matrix: the sum of absolute
/// eigenvalues.
pub fn trace_norm_hermitian(m: &CMat) -> f64 {
    herm_eigenvalues(m).iter().map(|x| x.abs()).sum()
}

/// Unnormalized trace norm of an arbitrary matrix: the sum of singular
/// values.
pub fn trace_norm(m: &CMat) -> f64 {
    m.clone().svd(false, false).singular_values.iter().sum()
}

/// Maximal deviation of `m` from its own adjoint.
pub fn hermiticity_residual(m: &CMat) -> f64 {
    let d = m - m.adjoint();
    d.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest absolute entry of `m - 1`.
pub fn identity_residual(m: &CMat) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let expect = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((m[(i, j)] - expect).norm());
        }
    }
    worst
}

/// Haar-distributed unitary: QR of a standard complex Gaussian matrix with
/// the R diagonal phases folded back into Q.
pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMat {
    assert!(dim >= 1, "haar_unitary needs dim >= 1");
    let g = CMat::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..dim {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// One standard complex Gaussian sample (variance 1/2 per quadrature).
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) / 2f64.sqrt()
}

/// Haar-distributed unit vector.
pub fn random_unit_vector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CVec {
    loop {
        let v = CVec::from_fn(dim, |_, _| complex_gaussian(rng));
        let n = v.norm();
        if n > 1e-12 {
            return v / Complex64::new(n, 0.0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn herm_eigen_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = CMat::from_fn(6, 6, |_, _| complex_gaussian(&mut rng));
        let h = &g + g.adjoint();
        let (values, vectors) = herm_eigen(&h);
        let diag = CVec::from_iterator(6, values.iter().map(|&x| Complex64::new(x, 0.0)));
        let back = &vectors * CMat::from_diagonal(&diag) * vectors.adjoint();
        assert!((&back - &h).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-10);
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn haar_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in [1, 2, 5, 16] {
            let u = haar_unitary(dim, &mut rng);
            assert!(identity_residual(&(u.adjoint() * &u)) < 1e-12);
        }
    }

    #[test]
    fn haar_first_moment() {
        // E|U_00|^2 = 1/dim; binomial-style 3-sigma band around the mean.
        let dim = 4;
        let trials = 10_000;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mean = (0..trials)
            .map(|_| haar_unitary(dim, &mut rng)[(0, 0)].norm_sqr())
            .sum::<f64>()
            / trials as f64;
        // Var|U_00|^2 for Haar is ~ 1/dim^2 scale; use a generous band.
        let sigma = (1.0 / (dim as f64 * dim as f64)) / (trials as f64).sqrt();
        assert!(
            (mean - 1.0 / dim as f64).abs() < 3.0 * sigma * 2.0,
            "mean {mean} vs {}",
            1.0 / dim as f64
        );
    }

    #[test]
    fn haar_second_moment() {
        // E[Tr(A U B Udag)] = Tr A Tr B / d for fixed A, B.
        let dim = 3;
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let a = CMat::from_fn(dim, dim, |_, _| complex_gaussian(&mut rng));
        let b = CMat::from_fn(dim, dim, |_, _| complex_gaussian(&mut rng));
        let trials = 20_000;
        let mut acc = Complex64::new(0.0, 0.0);
        for _ in 0..trials {
            let u = haar_unitary(dim, &mut rng);
            acc += trace(&(&a * &u * &b * u.adjoint()));
        }
        let mean = acc / trials as f64;
        let expect = trace(&a) * trace(&b) / dim as f64;
        assert!((mean - expect).norm() < 0.05, "mean {mean} expect {expect}");
    }

    #[test]
    fn pinv_sqrt_inverts_on_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let g = CMat::from_fn(5, 3, |_, _| complex_gaussian(&mut rng));
        let m = &g * g.adjoint(); // PSD of rank 3
        let (proj, rank) = herm_support(&m);
        assert_eq!(rank, 3);
        let s = pinv_sqrt(&m);
        let back = &s * &m * &s;
        assert!((&back - &proj).iter().map(|z| z.norm()).fold(0.0, f64::max) < 1e-8);
    }

    #[test]
    fn trace_norm_matches_hermitian_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let g = CMat::from_fn(4, 4, |_, _| complex_gaussian(&mut rng));
        let h = &g + g.adjoint();
        assert!((trace_norm(&h) - trace_norm_hermitian(&h)).abs() < 1e-10);
    }
}
