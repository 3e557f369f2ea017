//! Forms, boundary and coboundary operators, upper Laplacians, and the
//! spectral gap over the cycle space `Z_{d-1} = ker ∂_{d-1}`.
//!
//! Faces are canonically oriented by ascending vertex order and forms are
//! stored on canonical representatives only. For a j-face `ρ` and the
//! (j-1)-face `σ = ρ \ ρ_i` the incidence sign is `(-1)^i`, which is the
//! sign of `f(vσ)` relative to `f(ρ)` when `v = ρ_i`.
//!
//! Face index spaces: level `j <= d - 1` is indexed by colex rank over all
//! `C(n, j + 1)` subsets (level -1 is the single empty face), level `d` by
//! position in [`Complex::top_faces`].

mod garland;
mod lanczos;
mod rank;

pub use garland::{adjacency_form_bound, garland_check, GarlandReport};
pub use lanczos::{smallest_eigenpair, LanczosOutcome};
pub use rank::{exact_rank, numeric_rank, RANK_TOLERANCE};

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, next_colex};
use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::sparse::SparseMatrix;

pub type IntMatrix = SparseMatrix<i64>;

/// Weight scheme of the inner product on forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightScheme {
    /// `w ≡ 1`.
    Combinatorial,
    /// `w(σ) = 1 / deg σ` on (d-1)-faces, 1 elsewhere.
    Normalized,
}

/// A real operator between face index spaces, tagged with its weight scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix {
    pub scheme: WeightScheme,
    pub matrix: SparseMatrix<f64>,
}

/// A (d-1)-form stored on canonically oriented faces, indexed by colex rank.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    values: Vec<f64>,
}

impl Cochain {
    pub fn zeros(y: &Complex) -> Self {
        Cochain {
            values: vec![0.0; y.num_ridges()],
        }
    }

    pub fn from_values(y: &Complex, values: Vec<f64>) -> Result<Self> {
        if values.len() != y.num_ridges() {
            return Err(Error::param(format!(
                "cochain needs {} values, got {}",
                y.num_ridges(),
                values.len()
            )));
        }
        Ok(Cochain { values })
    }

    /// Indicator of one canonically oriented (d-1)-face.
    pub fn indicator(y: &Complex, sigma: &Face) -> Result<Self> {
        y.validate(sigma, y.d())?;
        let mut c = Self::zeros(y);
        c.values[y.rank_of(sigma) as usize] = 1.0;
        Ok(c)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on an oriented face given as an arbitrary vertex ordering:
    /// the canonical value times the sign of the sorting permutation.
    pub fn value(&self, y: &Complex, oriented: &[usize]) -> Result<f64> {
        let mut sorted = oriented.to_vec();
        let sign = permutation_sign(&mut sorted);
        let face = Face::new(sorted)?;
        y.validate(&face, y.d())?;
        Ok(sign * self.values[y.rank_of(&face) as usize])
    }

    pub fn dot(&self, other: &Cochain) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

/// Sorts in place and returns the sign of the permutation applied.
fn permutation_sign(v: &mut [usize]) -> f64 {
    let mut sign = 1.0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

#[inline]
fn incidence_sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Number of faces of dimension `j` (`-1 <= j <= d`).
pub fn face_count(y: &Complex, j: isize) -> usize {
    if j == y.d() as isize {
        y.num_top_faces()
    } else {
        binomial(y.n(), (j + 1) as usize) as usize
    }
}

/// Calls `f(index, vertices)` for every face of dimension `j` in index order.
fn for_each_face(y: &Complex, j: usize, mut f: impl FnMut(usize, &[usize])) {
    if j == y.d() {
        for (idx, face) in y.top_faces().iter().enumerate() {
            f(idx, face.vertices());
        }
        return;
    }
    let mut c: Vec<usize> = (0..=j).collect();
    let mut idx = 0;
    loop {
        f(idx, &c);
        idx += 1;
        if !next_colex(&mut c, y.n()) {
            break;
        }
    }
}

/// The boundary `∂_j` from j-forms to (j-1)-forms as an integer matrix with
/// rows indexed by (j-1)-faces and columns by j-faces. `j = 0` is the
/// augmentation onto the empty face.
pub fn boundary_matrix(y: &Complex, j: usize) -> Result<IntMatrix> {
    if j > y.d() {
        return Err(Error::param(format!("boundary index {j} out of range 0..={}", y.d())));
    }
    let rows = face_count(y, j as isize - 1);
    let cols = face_count(y, j as isize);
    let binom = y.binom();
    let mut triplets = Vec::with_capacity(cols * (j + 1));
    for_each_face(y, j, |col, verts| {
        for i in 0..verts.len() {
            let row = binom.rank_without(verts, i) as usize;
            triplets.push((row, col, incidence_sign(i)));
        }
    });
    Ok(SparseMatrix::from_triplets(rows, cols, triplets))
}

fn weight(y: &Complex, scheme: WeightScheme, dim: usize, index: usize) -> Result<f64> {
    match scheme {
        WeightScheme::Combinatorial => Ok(1.0),
        WeightScheme::Normalized if dim + 1 == y.d() => {
            let deg = y.codegree_by_rank(index);
            if deg == 0 {
                return Err(Error::Degenerate(format!(
                    "normalized weights need positive co-degrees; face {} has co-degree 0",
                    y.ridge(index)
                )));
            }
            Ok(1.0 / deg as f64)
        }
        WeightScheme::Normalized => Ok(1.0),
    }
}

/// The coboundary `δ_j` from j-forms to (j+1)-forms:
/// `(δ_j f)(ρ) = (1 / w(ρ)) Σ_i (-1)^i w(ρ \ ρ_i) f(ρ \ ρ_i)`.
pub fn coboundary_matrix(y: &Complex, j: usize, scheme: WeightScheme) -> Result<OperatorMatrix> {
    if j + 1 > y.d() {
        return Err(Error::param(format!(
            "coboundary index {j} out of range 0..={}",
            y.d() - 1
        )));
    }
    let rows = face_count(y, j as isize + 1);
    let cols = face_count(y, j as isize);
    let binom = y.binom();
    let mut triplets = Vec::with_capacity(rows * (j + 2));
    let mut failure = None;
    for_each_face(y, j + 1, |row, verts| {
        if failure.is_some() {
            return;
        }
        let w_row = match weight(y, scheme, j + 1, binom.rank(verts) as usize) {
            Ok(w) => w,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        for i in 0..verts.len() {
            let col = binom.rank_without(verts, i) as usize;
            match weight(y, scheme, j, col) {
                Ok(w) => triplets.push((row, col, incidence_sign(i) as f64 * w / w_row)),
                Err(e) => {
                    failure = Some(e);
                    return;
                }
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(OperatorMatrix {
        scheme,
        matrix: SparseMatrix::from_triplets(rows, cols, triplets),
    })
}

/// `Δ⁺ = ∂_d δ_{d-1}` on (d-1)-forms.
pub fn upper_laplacian(y: &Complex, scheme: WeightScheme) -> Result<OperatorMatrix> {
    if scheme == WeightScheme::Normalized {
        if let Some(r) = (0..y.num_ridges()).find(|&r| y.codegree_by_rank(r) == 0) {
            return Err(Error::Degenerate(format!(
                "normalized Laplacian needs positive co-degrees; face {} has co-degree 0",
                y.ridge(r)
            )));
        }
    }
    let partial = boundary_matrix(y, y.d())?.to_f64();
    let delta = coboundary_matrix(y, y.d() - 1, scheme)?;
    Ok(OperatorMatrix {
        scheme,
        matrix: partial.matmul(&delta.matrix),
    })
}

/// Orthonormal basis of `Z_{d-1}` as the columns of a dense matrix.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    pub basis: DMatrix<f64>,
    /// Numerical rank of `∂_{d-1}`.
    pub boundary_rank: usize,
}

impl CycleBasis {
    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }
}

/// Kernel of `∂_{d-1}`; the rank is read off the singular values with
/// relative tolerance [`RANK_TOLERANCE`].
pub fn cycle_space_basis(y: &Complex) -> Result<CycleBasis> {
    let lower = boundary_matrix(y, y.d() - 1)?.to_f64().to_dense();
    let r = numeric_rank(&lower);
    let gram = lower.transpose() * &lower;
    let eig = SymmetricEigen::new(gram);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let k = y.num_ridges() - r;
    let mut basis = DMatrix::zeros(y.num_ridges(), k);
    for (c, &idx) in order.iter().take(k).enumerate() {
        basis.set_column(c, &eig.eigenvectors.column(idx));
    }
    Ok(CycleBasis {
        basis,
        boundary_rank: r,
    })
}

/// Rank of `∂_j` on the complete complex on `n` vertices (`j <= d - 1`).
pub fn complete_boundary_rank(n: usize, j: usize) -> usize {
    binomial(n - 1, j) as usize
}

/// Spectral data of `Δ⁺` restricted to `Z_{d-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub lambda: f64,
    pub cycle_dim: usize,
    pub harmonic_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub spectrum: Option<Vec<f64>>,
}

/// Eigenvalues below this count as harmonic.
pub const HARMONIC_TOLERANCE: f64 = 1e-8;
/// Above this many (d-1)-faces the spectral gap switches to Lanczos.
pub const DENSE_LIMIT: usize = 3000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenMethod {
    Auto,
    Dense,
    Iterative,
}

/// λ(Y), the smallest eigenvalue of `Δ⁺` over `Z_{d-1}`.
pub fn spectral_gap(y: &Complex) -> Result<SpectralReport> {
    spectral_gap_with(y, EigenMethod::Auto)
}

pub fn spectral_gap_with(y: &Complex, method: EigenMethod) -> Result<SpectralReport> {
    let dense = match method {
        EigenMethod::Auto => y.num_ridges() <= DENSE_LIMIT,
        EigenMethod::Dense => true,
        EigenMethod::Iterative => false,
    };
    if dense {
        dense_gap(y)
    } else {
        iterative_gap(y)
    }
}

fn dense_gap(y: &Complex) -> Result<SpectralReport> {
    let cycles = cycle_space_basis(y)?;
    let lap = upper_laplacian(y, WeightScheme::Combinatorial)?.matrix.to_dense();
    let projected = cycles.basis.transpose() * lap * &cycles.basis;
    let mut spectrum: Vec<f64> = SymmetricEigen::new(projected).eigenvalues.iter().copied().collect();
    spectrum.sort_by(f64::total_cmp);
    let lambda = spectrum.first().copied().unwrap_or(f64::INFINITY);
    let harmonic_dim = spectrum.iter().filter(|&&e| e < HARMONIC_TOLERANCE).count();
    Ok(SpectralReport {
        lambda,
        cycle_dim: cycles.dim(),
        harmonic_dim,
        spectrum: Some(spectrum),
    })
}

/// On a complete (d-1)-skeleton `Δ⁻` acts as `n` on `Z_{d-1}^⊥` and `Δ⁺`
/// vanishes there, while `λ(Y) <= h(Y) <= n`. The smallest eigenvalue of
/// `Δ⁺ + 2Δ⁻` on the whole space is therefore λ(Y), which avoids forming a
/// cycle basis.
fn iterative_gap(y: &Complex) -> Result<SpectralReport> {
    let upper = upper_laplacian(y, WeightScheme::Combinatorial)?.matrix;
    let lower = boundary_matrix(y, y.d() - 1)?.to_f64();
    let lower_t = lower.transpose();
    let dim = y.num_ridges();
    let mut scratch = vec![0.0; lower.nrows()];
    let apply = |x: &[f64], out: &mut [f64]| {
        out.iter_mut().for_each(|v| *v = 0.0);
        upper.mul_vec_into(x, out);
        scratch.iter_mut().for_each(|v| *v = 0.0);
        lower.mul_vec_into(x, &mut scratch);
        scratch.iter_mut().for_each(|v| *v *= 2.0);
        lower_t.mul_vec_into(&scratch, out);
    };
    let outcome = smallest_eigenpair(dim, apply, HARMONIC_TOLERANCE, 10 * dim, 0x5eed);
    let cycle_dim = dim - complete_boundary_rank(y.n(), y.d() - 1);
    let lambda = outcome.value.max(0.0);
    let harmonic_dim = if lambda < HARMONIC_TOLERANCE {
        harmonic_dimension(y)?
    } else {
        0
    };
    Ok(SpectralReport {
        lambda: outcome.value,
        cycle_dim,
        harmonic_dim,
        spectrum: None,
    })
}

/// Above this many potential top faces ranks are computed numerically.
pub const EXACT_RANK_LIMIT: u64 = 5000;

fn boundary_rank(y: &Complex, j: usize) -> Result<usize> {
    let m = boundary_matrix(y, j)?;
    if binomial(y.n(), y.d() + 1) <= EXACT_RANK_LIMIT {
        Ok(exact_rank(&m))
    } else {
        Ok(numeric_rank(&m.to_f64().to_dense()))
    }
}

/// `dim H_{d-1} = dim Z_{d-1} - rank ∂_d`.
pub fn harmonic_dimension(y: &Complex) -> Result<usize> {
    let cycle_dim = y.num_ridges() - boundary_rank(y, y.d() - 1)?;
    Ok(cycle_dim - boundary_rank(y, y.d())?)
}

/// `dim Z_{d-1}` and `rank ∂_d` by exact or numeric rank.
pub fn hodge_dimensions(y: &Complex) -> Result<(usize, usize)> {
    let cycle_dim = y.num_ridges() - boundary_rank(y, y.d() - 1)?;
    Ok((cycle_dim, boundary_rank(y, y.d())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Complex {
        Complex::from_faces(4, 2, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap()
    }

    #[test]
    fn boundary_signs_of_a_triangle() {
        let y = Complex::from_faces(3, 2, &[vec![0, 1, 2]]).unwrap();
        let b = boundary_matrix(&y, 2).unwrap();
        let image = b.mul_vec(&[1]);
        let at = |v: &[usize]| image[y.rank_of(&Face::new(v.to_vec()).unwrap()) as usize];
        assert_eq!(at(&[1, 2]), 1);
        assert_eq!(at(&[0, 2]), -1);
        assert_eq!(at(&[0, 1]), 1);
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let y = Complex::generate(7, 3, 0.5, 11).unwrap();
        for j in 1..=3 {
            let lo = boundary_matrix(&y, j - 1).unwrap();
            let hi = boundary_matrix(&y, j).unwrap();
            assert!(lo.matmul(&hi).is_zero(), "∂_{} ∂_{} != 0", j - 1, j);
        }
        assert!(boundary_matrix(&y, 4).is_err());
    }

    #[test]
    fn coboundary_is_transpose_under_unit_weights() {
        let y = Complex::generate(6, 2, 0.6, 2).unwrap();
        let co = coboundary_matrix(&y, 1, WeightScheme::Combinatorial).unwrap();
        let bt = boundary_matrix(&y, 2).unwrap().to_f64().transpose();
        assert_eq!(co.matrix, bt);
        assert!(coboundary_matrix(&y, 2, WeightScheme::Combinatorial).is_err());
    }

    #[test]
    fn coboundary_of_an_edge_indicator() {
        let y = Complex::from_faces(3, 2, &[vec![0, 1, 2]]).unwrap();
        let f = Cochain::indicator(&y, &Face::new(vec![0, 1]).unwrap()).unwrap();
        let co = coboundary_matrix(&y, 1, WeightScheme::Combinatorial).unwrap();
        assert_eq!(co.matrix.mul_vec(f.values()), vec![1.0]);
    }

    #[test]
    fn normalized_row_on_two_triangles() {
        let y = two_triangles();
        let co = coboundary_matrix(&y, 1, WeightScheme::Normalized).unwrap();
        let e = |v: &[usize]| y.rank_of(&Face::new(v.to_vec()).unwrap()) as usize;
        // row 0 is [0,1,2]; deg [0,1] = 2, deg [0,2] = deg [1,2] = 1
        assert!((co.matrix.get(0, e(&[0, 1])) - 0.5).abs() < 1e-15);
        assert!((co.matrix.get(0, e(&[0, 2])) + 1.0).abs() < 1e-15);
        assert!((co.matrix.get(0, e(&[1, 2])) - 1.0).abs() < 1e-15);
        // the normalized Laplacian needs every co-degree positive
        assert!(upper_laplacian(&y, WeightScheme::Normalized).is_err());
    }

    #[test]
    fn normalized_laplacian_formula() {
        let y = Complex::complete(5, 2).unwrap();
        let lap = upper_laplacian(&y, WeightScheme::Normalized).unwrap();
        let f: Vec<f64> = (0..y.num_ridges()).map(|i| (i as f64 * 0.37).sin()).collect();
        let got = lap.matrix.mul_vec(&f);
        let comb = upper_laplacian(&y, WeightScheme::Combinatorial).unwrap().matrix;
        for r in 0..y.num_ridges() {
            let deg = y.codegree_by_rank(r) as f64;
            // off-diagonal part of the combinatorial operator carries the signs
            let mut expected = f[r];
            for (c, v) in comb.row(r) {
                if c != r {
                    expected += v * f[c] / y.codegree_by_rank(c) as f64;
                }
            }
            assert!((got[r] - expected).abs() < 1e-12, "row {r}: deg {deg}");
        }
    }

    #[test]
    fn laplacian_of_empty_and_complete() {
        let y = Complex::generate(5, 2, 0.0, 0).unwrap();
        assert!(upper_laplacian(&y, WeightScheme::Combinatorial)
            .unwrap()
            .matrix
            .is_zero());
        let y = Complex::complete(4, 2).unwrap();
        let lap = upper_laplacian(&y, WeightScheme::Combinatorial).unwrap().matrix;
        for r in 0..y.num_ridges() {
            assert_eq!(lap.get(r, r), 2.0);
        }
        assert_eq!(lap.max_asymmetry(), 0.0);
    }

    #[test]
    fn combinatorial_laplacian_matches_explicit_formula() {
        // (Δ⁺f)(σ) = deg(σ) f(σ) - Σ_{vσ ∈ Y} Σ_{i<d} (-1)^i f(vσ \ v_i),
        // with σ = [v_0..v_{d-1}] and vσ = [v, v_0, .., v_{d-1}] as an oriented list.
        let y = Complex::generate(7, 2, 0.5, 4).unwrap();
        let f: Vec<f64> = (0..y.num_ridges()).map(|i| ((i * 7 + 3) % 11) as f64 - 5.0).collect();
        let c = Cochain::from_values(&y, f.clone()).unwrap();
        let lap = upper_laplacian(&y, WeightScheme::Combinatorial).unwrap().matrix;
        let got = lap.mul_vec(&f);
        for r in 0..y.num_ridges() {
            let sigma = y.ridge(r);
            let mut expected = y.codegree_by_rank(r) as f64 * f[r];
            for v in 0..y.n() {
                if sigma.contains(v) || !y.contains_top(&sigma.with_vertex(v)) {
                    continue;
                }
                // σ_i sits at index i + 1 of the oriented list vσ
                let mut vs = vec![v];
                vs.extend_from_slice(sigma.vertices());
                for i in 0..y.d() {
                    let dropped: Vec<usize> = vs
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i + 1)
                        .map(|(_, &u)| u)
                        .collect();
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    expected -= sign * c.value(&y, &dropped).unwrap();
                }
            }
            assert!((got[r] - expected).abs() < 1e-12, "row {r}");
        }
    }

    #[test]
    fn cycle_basis_of_complete_four() {
        let y = Complex::complete(4, 2).unwrap();
        let cb = cycle_space_basis(&y).unwrap();
        assert_eq!(cb.dim(), 3);
        assert_eq!(cb.boundary_rank, 3);
        let gram = cb.basis.transpose() * &cb.basis;
        assert!((gram - DMatrix::identity(3, 3)).abs().max() < 1e-10);
        let lower = boundary_matrix(&y, 1).unwrap().to_f64().to_dense();
        assert!((lower * &cb.basis).abs().max() < 1e-9);
    }

    #[test]
    fn complete_gap_is_n() {
        let y = Complex::complete(5, 2).unwrap();
        let rep = spectral_gap(&y).unwrap();
        assert!((rep.lambda - 5.0).abs() < 1e-8);
        assert_eq!(rep.harmonic_dim, 0);
    }

    #[test]
    fn empty_complex_is_all_harmonic() {
        let y = Complex::generate(6, 2, 0.0, 0).unwrap();
        let rep = spectral_gap(&y).unwrap();
        assert!(rep.lambda.abs() < 1e-12);
        assert_eq!(rep.harmonic_dim, rep.cycle_dim);
        assert_eq!(harmonic_dimension(&y).unwrap(), 15 - 5);
    }

    #[test]
    fn path_graph_gap() {
        let y = Complex::from_faces(3, 1, &[vec![0, 1], vec![1, 2]]).unwrap();
        let rep = spectral_gap(&y).unwrap();
        assert!((rep.lambda - 1.0).abs() < 1e-12);
        let spec = rep.spectrum.unwrap();
        assert_eq!(spec.len(), 2);
        assert!((spec[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn iterative_matches_dense() {
        for seed in 0..3 {
            let y = Complex::generate(12, 2, 0.35, seed).unwrap();
            let a = spectral_gap_with(&y, EigenMethod::Dense).unwrap();
            let b = spectral_gap_with(&y, EigenMethod::Iterative).unwrap();
            assert!((a.lambda - b.lambda).abs() < 1e-6, "{} vs {}", a.lambda, b.lambda);
            assert_eq!(a.cycle_dim, b.cycle_dim);
            assert_eq!(a.harmonic_dim, b.harmonic_dim);
        }
    }

    #[test]
    fn complete_boundary_rank_formula() {
        for (n, d) in [(5, 2), (6, 3), (7, 1)] {
            let y = Complex::complete(n, d).unwrap();
            let m = boundary_matrix(&y, d - 1).unwrap();
            assert_eq!(exact_rank(&m), complete_boundary_rank(n, d - 1));
        }
    }

    #[test]
    fn hodge_dimension_count() {
        let y = Complex::complete(5, 2).unwrap();
        assert_eq!(harmonic_dimension(&y).unwrap(), 0);
        let y = Complex::generate(7, 2, 0.3, 9).unwrap();
        let (cycle_dim, rank_top) = hodge_dimensions(&y).unwrap();
        let h = harmonic_dimension(&y).unwrap();
        assert_eq!(cycle_dim, h + rank_top);
        assert_eq!(spectral_gap(&y).unwrap().harmonic_dim, h);
    }

    #[test]
    fn oriented_values_flip_sign() {
        let y = Complex::complete(4, 2).unwrap();
        let f = Cochain::indicator(&y, &Face::new(vec![1, 3]).unwrap()).unwrap();
        assert_eq!(f.value(&y, &[1, 3]).unwrap(), 1.0);
        assert_eq!(f.value(&y, &[3, 1]).unwrap(), -1.0);
    }
}
