//! Garland's decomposition of `Δ⁺` into operators localised on (d-2)-faces
//! and the link-graph spectra they reduce to.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::{upper_laplacian, Cochain, WeightScheme};
use crate::combinatorics::binomial;
use crate::complex::{Complex, LinkGraph};
use crate::error::{Error, Result};

/// Absolute residuals of the decomposition identities for one form `f`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GarlandReport {
    /// `‖Δ⁺f − (Σ_τ Δ_τ⁺ f − (d−1) D f)‖`.
    pub decomposition: f64,
    /// `max_τ |⟨Δ_τ⁺ f, f⟩ − ⟨Δ⁺_{lk τ} f_τ, f_τ⟩|`.
    pub local_quadratic: f64,
    /// `max_τ |Σ_v f_τ(v)|`, present only when `f` is a cycle.
    pub cycle_sums: Option<f64>,
    /// `|Σ_τ ⟨f_τ, f_τ⟩ − d ⟨f, f⟩|`.
    pub norm_sum: f64,
    /// `|⟨Df, f⟩ − (1/d) Σ_τ ⟨D_{lk τ} f_τ, f_τ⟩|`.
    pub degree_sum: f64,
}

impl GarlandReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.decomposition,
            self.local_quadratic,
            self.cycle_sums.unwrap_or(0.0),
            self.norm_sum,
            self.degree_sum,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// The cycle test uses this bound on `‖∂_{d-1} f‖ / max(1, ‖f‖)`.
const CYCLE_TOLERANCE: f64 = 1e-9;

/// Evaluates every identity of the decomposition on `f`.
pub fn garland_check(y: &Complex, f: &Cochain) -> Result<GarlandReport> {
    let d = y.d();
    if d < 2 {
        return Err(Error::param("the Garland decomposition needs d >= 2"));
    }
    if f.len() != y.num_ridges() {
        return Err(Error::param(format!(
            "cochain has {} values, complex has {} (d-1)-faces",
            f.len(),
            y.num_ridges()
        )));
    }
    let fv = f.values();
    let ridges = y.num_ridges();

    let mut local_sum = vec![0.0; ridges];
    let mut local_quadratic: f64 = 0.0;
    let mut cycle_sum: f64 = 0.0;
    let mut norm_total = 0.0;
    let mut link_degree_total = 0.0;

    let taus = binomial(y.n(), d - 1);
    for t in 0..taus {
        let tau = y.face_of_rank(t, d - 1);
        // Δ_τ⁺ f on every σ = τ ∪ {v}
        let mut local = 0.0;
        for v in (0..y.n()).filter(|&v| !tau.contains(v)) {
            let sigma = tau.with_vertex(v);
            let s = y.rank_of(&sigma) as usize;
            let mut value = y.codegree_by_rank(s) as f64 * fv[s];
            for &top in y.cofaces_by_rank(s) {
                let rho = y.top_faces()[top as usize].vertices();
                let u = rho
                    .iter()
                    .copied()
                    .find(|&u| !sigma.contains(u))
                    .expect("top face extends sigma by one vertex");
                let pu = rho.binary_search(&u).expect("u in rho");
                let pv = rho.binary_search(&v).expect("v in rho");
                let other = y.binom().rank_without(rho, pv) as usize;
                value += sign(pu) * sign(pv) * fv[other];
            }
            local_sum[s] += value;
            local += value * fv[s];
        }

        let lk = y.link_graph(&tau)?;
        let f_tau = localize(y, &lk, fv);
        let lap = lk.laplacian();
        let fl = DVector::from_column_slice(&f_tau);
        let link_form = fl.dot(&(&lap * &fl));
        local_quadratic = local_quadratic.max((local - link_form).abs());

        cycle_sum = cycle_sum.max(f_tau.iter().sum::<f64>().abs());
        norm_total += f_tau.iter().map(|x| x * x).sum::<f64>();
        link_degree_total += lk
            .degrees()
            .iter()
            .zip(&f_tau)
            .map(|(&deg, x)| deg as f64 * x * x)
            .sum::<f64>();
    }

    let upper = upper_laplacian(y, WeightScheme::Combinatorial)?.matrix;
    let lhs = upper.mul_vec(fv);
    let degrees = y.codegrees();
    let decomposition = lhs
        .iter()
        .enumerate()
        .map(|(s, &l)| {
            let rhs = local_sum[s] - (d - 1) as f64 * degrees[s] as f64 * fv[s];
            (l - rhs).powi(2)
        })
        .sum::<f64>()
        .sqrt();

    let norm_sq = f.dot(f);
    let degree_form: f64 = degrees.iter().zip(fv).map(|(&deg, x)| deg as f64 * x * x).sum();

    Ok(GarlandReport {
        decomposition,
        local_quadratic,
        cycle_sums: is_cycle(y, f)?.then_some(cycle_sum),
        norm_sum: (norm_total - d as f64 * norm_sq).abs(),
        degree_sum: (degree_form - link_degree_total / d as f64).abs(),
    })
}

/// `f_τ(v) = f(vτ)`, the value on the face oriented with `v` first.
fn localize(y: &Complex, lk: &LinkGraph, fv: &[f64]) -> Vec<f64> {
    lk.vertices
        .iter()
        .map(|&v| {
            let sigma = lk.tau.with_vertex(v);
            let pos = sigma.vertices().binary_search(&v).expect("v in sigma");
            sign(pos) * fv[y.rank_of(&sigma) as usize]
        })
        .collect()
}

fn is_cycle(y: &Complex, f: &Cochain) -> Result<bool> {
    let boundary = super::boundary_matrix(y, y.d() - 1)?.to_f64();
    let image = boundary.mul_vec(f.values());
    let norm = image.iter().map(|x| x * x).sum::<f64>().sqrt();
    Ok(norm <= CYCLE_TOLERANCE * f.norm().max(1.0))
}

#[inline]
fn sign(pos: usize) -> f64 {
    if pos.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `max ⟨Af, f⟩` over unit `f ⊥ 𝟏`: the top eigenvalue of the adjacency
/// matrix compressed onto the complement of the all-ones vector.
pub fn adjacency_form_bound(g: &LinkGraph) -> f64 {
    let m = g.num_vertices();
    if m < 2 {
        return 0.0;
    }
    // Householder reflection taking 𝟏/√m to e₀; its last m-1 columns span 𝟏⊥
    let mut u = DVector::from_element(m, 1.0);
    u[0] -= (m as f64).sqrt();
    let h = DMatrix::identity(m, m) - (&u * u.transpose()) * (2.0 / u.norm_squared());
    let basis = h.columns(1, m - 1).into_owned();
    let compressed = basis.transpose() * g.adjacency() * &basis;
    SymmetricEigen::new(compressed)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}
