//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra or enumeration code.

#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use simplicial_expansion::Complex;

/// All k-subsets of `[0, n)` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Dense boundary matrix from `hi` faces (columns) to `lo` faces (rows),
/// entry `(-1)^i` when `lo` is `hi` with its i-th vertex removed.
pub fn boundary(hi: &[Vec<usize>], lo: &[Vec<usize>]) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(lo.len(), hi.len());
    for (c, rho) in hi.iter().enumerate() {
        for i in 0..rho.len() {
            let mut sigma = rho.clone();
            sigma.remove(i);
            if let Some(r) = lo.iter().position(|s| *s == sigma) {
                m[(r, c)] = if i % 2 == 0 { 1.0 } else { -1.0 };
            }
        }
    }
    m
}

pub fn top_faces(y: &Complex) -> Vec<Vec<usize>> {
    y.top_faces().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn sorted_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    let mut e: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

/// λ(Y) via the Hodge Laplacian `∂_d ∂_dᵀ + ∂_{d-1}ᵀ ∂_{d-1}` restricted to
/// the kernel of `∂_{d-1}`. The kernel basis is the null eigenspace of the
/// Gram matrix `∂_{d-1}ᵀ ∂_{d-1}`; for d = 1 it is the sum-zero vectors.
pub fn spectral_gap_oracle(y: &Complex) -> f64 {
    let n = y.n();
    let d = y.d();
    let ridges = subsets(n, d);
    let up = boundary(&top_faces(y), &ridges);
    let gram = if d == 1 {
        DMatrix::from_element(n, n, 1.0)
    } else {
        let down = boundary(&ridges, &subsets(n, d - 1));
        down.transpose() * down
    };
    let eig = SymmetricEigen::new(gram);
    let cols: Vec<_> = (0..ridges.len())
        .filter(|&i| eig.eigenvalues[i].abs() < 1e-9)
        .map(|i| eig.eigenvectors.column(i).into_owned())
        .collect();
    let kernel = DMatrix::from_columns(&cols);
    let k = kernel.transpose() * (&up * up.transpose()) * &kernel;
    sorted_eigenvalues(k).first().copied().unwrap_or(f64::INFINITY)
}

/// Second smallest eigenvalue of the graph Laplacian of a 1-complex.
pub fn algebraic_connectivity(y: &Complex) -> f64 {
    let n = y.n();
    let mut l = DMatrix::zeros(n, n);
    for e in top_faces(y) {
        let (a, b) = (e[0], e[1]);
        l[(a, a)] += 1.0;
        l[(b, b)] += 1.0;
        l[(a, b)] -= 1.0;
        l[(b, a)] -= 1.0;
    }
    sorted_eigenvalues(l)[1]
}
