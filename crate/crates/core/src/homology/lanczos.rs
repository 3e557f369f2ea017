use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Result of [`smallest_eigenpair`].
#[derive(Clone, Debug)]
pub struct LanczosOutcome {
    pub value: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// `‖A v - value v‖` for the returned unit vector.
    pub residual: f64,
}

/// Krylov basis size before an explicit restart from the current Ritz vector.
const RESTART: usize = 300;
/// Ritz values are extracted every this many steps.
const CHECK_EVERY: usize = 10;

/// Smallest eigenpair of a symmetric operator given by `apply(x, out)`,
/// which must overwrite `out` with `A x`. Lanczos with full
/// reorthogonalisation; converged once the Ritz residual drops below
/// `tol · max(1, |θ|)` or the Krylov space is exhausted.
pub fn smallest_eigenpair<F>(dim: usize, mut apply: F, tol: f64, max_iter: usize, seed: u64) -> LanczosOutcome
where
    F: FnMut(&[f64], &mut [f64]),
{
    if dim == 0 {
        return LanczosOutcome {
            value: f64::INFINITY,
            vector: Vec::new(),
            iterations: 0,
            converged: true,
            residual: 0.0,
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut start: Vec<f64> = (0..dim).map(|_| rng.gen::<f64>() - 0.5).collect();
    normalize(&mut start);

    let mut total = 0;
    let mut best = (f64::INFINITY, start.clone());
    let mut w = vec![0.0; dim];
    while total < max_iter.max(1) {
        let cap = RESTART.min(dim).min(max_iter - total).max(1);
        let mut basis: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut exhausted = false;
        loop {
            let k = basis.len() - 1;
            apply(&basis[k], &mut w);
            total += 1;
            let a = dot(&w, &basis[k]);
            alpha.push(a);
            // two passes of classical Gram-Schmidt against the whole basis
            for _ in 0..2 {
                for q in &basis {
                    let c = dot(&w, q);
                    axpy(-c, q, &mut w);
                }
            }
            let b = norm(&w);
            let size = basis.len();
            let check = size.is_multiple_of(CHECK_EVERY) || size == cap || b < 1e-14 || total >= max_iter;
            if check {
                let (theta, s) = smallest_ritz(&alpha, &beta);
                let resid = (b * s[size - 1]).abs();
                let vector = combine(&basis, &s);
                best = (theta, vector);
                if b < 1e-14 {
                    exhausted = true;
                }
                if resid <= tol * theta.abs().max(1.0) || exhausted || size == dim {
                    let residual = true_residual(&mut apply, &best.1, theta);
                    return LanczosOutcome {
                        value: theta,
                        vector: best.1,
                        iterations: total,
                        converged: true,
                        residual,
                    };
                }
                if size == cap || total >= max_iter {
                    break;
                }
            }
            beta.push(b);
            basis.push(w.iter().map(|v| v / b).collect());
        }
        start = best.1.clone();
        normalize(&mut start);
        if exhausted {
            break;
        }
    }
    let residual = true_residual(&mut apply, &best.1, best.0);
    LanczosOutcome {
        value: best.0,
        converged: residual <= tol * best.0.abs().max(1.0),
        vector: best.1,
        iterations: total,
        residual,
    }
}

fn smallest_ritz(alpha: &[f64], beta: &[f64]) -> (f64, Vec<f64>) {
    let k = alpha.len();
    let mut t = DMatrix::zeros(k, k);
    for i in 0..k {
        t[(i, i)] = alpha[i];
        if i + 1 < k {
            t[(i, i + 1)] = beta[i];
            t[(i + 1, i)] = beta[i];
        }
    }
    let eig = SymmetricEigen::new(t);
    let (idx, &theta) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty tridiagonal");
    (theta, eig.eigenvectors.column(idx).iter().copied().collect())
}

fn combine(basis: &[Vec<f64>], coeffs: &[f64]) -> Vec<f64> {
    let mut v = vec![0.0; basis[0].len()];
    for (q, &c) in basis.iter().zip(coeffs) {
        axpy(c, q, &mut v);
    }
    normalize(&mut v);
    v
}

fn true_residual<F: FnMut(&[f64], &mut [f64])>(apply: &mut F, v: &[f64], theta: f64) -> f64 {
    let mut av = vec![0.0; v.len()];
    apply(v, &mut av);
    axpy(-theta, v, &mut av);
    norm(&av)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(c: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

fn normalize(v: &mut [f64]) {
    let n = norm(v);
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
}
