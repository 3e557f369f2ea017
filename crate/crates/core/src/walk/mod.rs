//! The γ-lazy random walk on (d-1)-faces of positive co-degree, its
//! stationary distribution, cut flows and the conductance of face sets.
//!
//! With `T = |Y^{(d)}|` and `tot = (d+1)·T`:
//! `π(σ) = deg σ / tot`, `Q(S, S̄) = cut(S) / (d·tot)` where `cut(S)` counts
//! ordered adjacent pairs leaving `S`, and `Φ(S) = Q / (π(S) π(S̄))`.

mod conductance;
mod shadow;

pub use conductance::{
    conductance_estimate, conductance_exact, exit_ratio, set_measures, ConductanceMethod, ConductanceReport,
    EXACT_SUPPORT_LIMIT,
};
pub use shadow::{coface_profile, kruskal_katona_bound, tight_components, upper_shadow, ShadowProfile};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Face};
use crate::error::{Error, Result};
use crate::sparse::SparseMatrix;

/// The state space: (d-1)-faces of positive co-degree, in colex order.
#[derive(Clone, Debug, PartialEq)]
pub struct Support {
    ranks: Vec<usize>,
    /// Ridge rank to state index.
    index: Vec<Option<usize>>,
}

impl Support {
    pub fn of(y: &Complex) -> Self {
        let mut index = vec![None; y.num_ridges()];
        let mut ranks = Vec::new();
        for (r, slot) in index.iter_mut().enumerate() {
            if y.codegree_by_rank(r) > 0 {
                *slot = Some(ranks.len());
                ranks.push(r);
            }
        }
        Support { ranks, index }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Ridge rank of state `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// State index of a ridge rank, if the ridge has positive co-degree.
    pub fn state_of_rank(&self, rank: usize) -> Option<usize> {
        self.index.get(rank).copied().flatten()
    }

    pub fn faces(&self, y: &Complex) -> Vec<Face> {
        self.ranks.iter().map(|&r| y.ridge(r)).collect()
    }

    /// State indices of a face set, rejecting faces outside the support.
    pub fn states(&self, y: &Complex, faces: &[Face]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(faces.len());
        for f in faces {
            y.validate(f, y.d())?;
            let state = self
                .state_of_rank(y.rank_of(f) as usize)
                .ok_or_else(|| Error::InvalidFace {
                    vertices: f.vertices().to_vec(),
                    reason: "face has co-degree 0 and lies outside the walk's state space".into(),
                })?;
            out.push(state);
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Neighbour lists in state indices.
    pub fn adjacency(&self, y: &Complex) -> Vec<Vec<usize>> {
        self.ranks
            .iter()
            .map(|&r| {
                y.neighbor_ranks(r)
                    .into_iter()
                    .map(|s| self.state_of_rank(s).expect("neighbours have positive co-degree"))
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct WalkKernel {
    pub gamma: f64,
    pub support: Support,
    /// Row-stochastic matrix over support states.
    pub transition: SparseMatrix<f64>,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::param(format!("laziness must lie in [0, 1), got {gamma}")));
    }
    Ok(())
}

/// `P(σ, σ) = γ` and `P(σ, σ') = (1 − γ) / (d · deg σ)` for `σ' ∼ σ`.
pub fn transition_kernel(y: &Complex, gamma: f64) -> Result<WalkKernel> {
    check_gamma(gamma)?;
    let support = Support::of(y);
    if support.is_empty() {
        return Err(Error::Degenerate("the walk needs at least one top face".into()));
    }
    let d = y.d() as f64;
    let mut triplets = Vec::new();
    for (i, nbrs) in support.adjacency(y).into_iter().enumerate() {
        let deg = y.codegree_by_rank(support.rank(i)) as f64;
        triplets.push((i, i, gamma));
        let w = (1.0 - gamma) / (d * deg);
        triplets.extend(nbrs.into_iter().map(|j| (i, j, w)));
    }
    let m = support.len();
    Ok(WalkKernel {
        gamma,
        transition: SparseMatrix::from_triplets(m, m, triplets),
        support,
    })
}

impl WalkKernel {
    /// `max_σ |Σ_σ' P(σ, σ') − 1|`.
    pub fn row_sum_error(&self) -> f64 {
        (0..self.transition.nrows())
            .map(|i| (self.transition.row(i).map(|(_, v)| v).sum::<f64>() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `πP` for a distribution over support states.
    pub fn step_distribution(&self, pi: &[f64]) -> Vec<f64> {
        self.transition.transpose().mul_vec(pi)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StationaryDist {
    pub support: Support,
    /// Probability of each support state.
    pub pi: Vec<f64>,
}

impl StationaryDist {
    pub fn of_rank(&self, rank: usize) -> f64 {
        self.support.state_of_rank(rank).map_or(0.0, |i| self.pi[i])
    }

    pub fn of_face(&self, y: &Complex, face: &Face) -> f64 {
        self.of_rank(y.rank_of(face) as usize)
    }
}

/// `π(σ) = deg σ / ((d + 1) · |Y^{(d)}|)`.
pub fn stationary(y: &Complex) -> Result<StationaryDist> {
    if y.num_top_faces() == 0 {
        return Err(Error::Degenerate("stationary distribution of an empty complex".into()));
    }
    let support = Support::of(y);
    let tot = ((y.d() + 1) * y.num_top_faces()) as f64;
    let pi = support
        .ranks()
        .iter()
        .map(|&r| y.codegree_by_rank(r) as f64 / tot)
        .collect();
    Ok(StationaryDist { support, pi })
}

/// Total variation distance between the empirical visit distribution and π.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub step: usize,
    pub tv: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WalkTrace {
    /// Visits of each support state among `X_0, …, X_steps`.
    pub visits: Vec<u64>,
    pub checkpoints: Vec<Checkpoint>,
    pub end: Face,
}

impl WalkTrace {
    pub fn tv(&self) -> f64 {
        self.checkpoints.last().map_or(f64::NAN, |c| c.tv)
    }
}

/// Runs the γ-lazy walk from `start` for `steps` moves. The empirical
/// distribution counts `X_0, …, X_t`; TV distances to π are recorded at each
/// requested checkpoint and at the final step.
pub fn simulate(
    y: &Complex,
    gamma: f64,
    start: &Face,
    steps: usize,
    seed: u64,
    checkpoints: &[usize],
) -> Result<WalkTrace> {
    check_gamma(gamma)?;
    y.validate(start, y.d())?;
    let pi = stationary(y)?;
    let support = &pi.support;
    let mut state = support
        .state_of_rank(y.rank_of(start) as usize)
        .ok_or_else(|| Error::InvalidFace {
            vertices: start.vertices().to_vec(),
            reason: "walk cannot start at a face of co-degree 0".into(),
        })?;
    let adjacency = support.adjacency(y);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut visits = vec![0u64; support.len()];
    visits[state] += 1;

    let mut marks: Vec<usize> = checkpoints.iter().copied().filter(|&c| c <= steps).collect();
    marks.push(steps);
    marks.sort_unstable();
    marks.dedup();
    let mut out = Vec::with_capacity(marks.len());
    let mut next_mark = 0;
    for t in 0..=steps {
        if t > 0 {
            if gamma == 0.0 || rng.gen::<f64>() >= gamma {
                let nbrs = &adjacency[state];
                state = nbrs[rng.gen_range(0..nbrs.len())];
            }
            visits[state] += 1;
        }
        while next_mark < marks.len() && marks[next_mark] == t {
            out.push(Checkpoint {
                step: t,
                tv: total_variation(&visits, (t + 1) as f64, &pi.pi),
            });
            next_mark += 1;
        }
    }
    Ok(WalkTrace {
        visits,
        checkpoints: out,
        end: y.ridge(support.rank(state)),
    })
}

fn total_variation(visits: &[u64], total: f64, pi: &[f64]) -> f64 {
    0.5 * visits
        .iter()
        .zip(pi)
        .map(|(&c, &p)| (c as f64 / total - p).abs())
        .sum::<f64>()
}

/// Degree sum and ordered cut count of a set of support states.
pub(crate) fn cut_stats(y: &Complex, support: &Support, adjacency: &[Vec<usize>], states: &[usize]) -> (u64, u64) {
    let mut inside = vec![false; support.len()];
    for &s in states {
        inside[s] = true;
    }
    let mut deg_sum = 0u64;
    let mut cut = 0u64;
    for &s in states {
        deg_sum += y.codegree_by_rank(support.rank(s)) as u64;
        cut += adjacency[s].iter().filter(|&&t| !inside[t]).count() as u64;
    }
    (deg_sum, cut)
}

/// `Q(S, S̄)` with the non-lazy weights, independent of γ.
pub fn flow_q(y: &Complex, s: &[Face]) -> Result<f64> {
    let support = Support::of(y);
    let states = support.states(y, s)?;
    if y.num_top_faces() == 0 {
        return Ok(0.0);
    }
    let (_, cut) = cut_stats(y, &support, &support.adjacency(y), &states);
    let d = y.d() as f64;
    Ok(cut as f64 / (d * (d + 1.0) * y.num_top_faces() as f64))
}

/// `Φ_Y(S) = Q(S, S̄) / (π(S) π(S̄))`, rejecting `π(S) ∈ {0, 1}`.
pub fn phi_set(y: &Complex, s: &[Face]) -> Result<f64> {
    let support = Support::of(y);
    let states = support.states(y, s)?;
    let (deg_sum, cut) = cut_stats(y, &support, &support.adjacency(y), &states);
    let tot = ((y.d() + 1) * y.num_top_faces()) as u64;
    if deg_sum == 0 || deg_sum == tot {
        return Err(Error::param("Φ(S) needs 0 < π(S) < 1"));
    }
    Ok(phi_value(y.d(), cut, deg_sum, tot))
}

/// `Φ(S) = cut · tot / (d · ds · (tot − ds))`.
pub(crate) fn phi_value(d: usize, cut: u64, deg_sum: u64, tot: u64) -> f64 {
    let ds = deg_sum as f64;
    let tot = tot as f64;
    cut as f64 * tot / (d as f64 * ds * (tot - ds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Complex {
        Complex::from_faces(4, 2, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap()
    }

    fn f(v: &[usize]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    fn entry(k: &WalkKernel, y: &Complex, a: &[usize], b: &[usize]) -> f64 {
        let i = k.support.state_of_rank(y.rank_of(&f(a)) as usize).unwrap();
        let j = k.support.state_of_rank(y.rank_of(&f(b)) as usize).unwrap();
        k.transition.get(i, j)
    }

    #[test]
    fn kernel_rows() {
        let y = two_triangles();
        let k = transition_kernel(&y, 0.0).unwrap();
        assert_eq!(k.support.len(), 5);
        assert_eq!(entry(&k, &y, &[0, 2], &[0, 1]), 0.5);
        assert_eq!(entry(&k, &y, &[0, 2], &[1, 2]), 0.5);
        for other in [[0, 2], [1, 2], [0, 3], [1, 3]] {
            assert_eq!(entry(&k, &y, &[0, 1], &other), 0.25);
        }
        let lazy = transition_kernel(&y, 0.5).unwrap();
        assert_eq!(entry(&lazy, &y, &[0, 1], &[0, 1]), 0.5);
        assert_eq!(entry(&lazy, &y, &[0, 1], &[1, 3]), 0.125);
        assert!(lazy.row_sum_error() < 1e-12);
    }

    #[test]
    fn kernel_rejects_bad_input() {
        let y = two_triangles();
        assert!(transition_kernel(&y, 1.0).is_err());
        assert!(transition_kernel(&y, -0.1).is_err());
        let empty = Complex::generate(5, 2, 0.0, 0).unwrap();
        assert!(transition_kernel(&empty, 0.0).is_err());
        assert!(stationary(&empty).is_err());
    }

    #[test]
    fn stationary_values() {
        let y = two_triangles();
        let pi = stationary(&y).unwrap();
        assert!((pi.of_face(&y, &f(&[0, 1])) - 2.0 / 6.0).abs() < 1e-15);
        assert!((pi.of_face(&y, &f(&[1, 3])) - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(pi.of_face(&y, &f(&[2, 3])), 0.0);
        for gamma in [0.0, 0.3] {
            let k = transition_kernel(&y, gamma).unwrap();
            let next = k.step_distribution(&pi.pi);
            for (a, b) in next.iter().zip(&pi.pi) {
                assert!((a - b).abs() < 1e-12);
            }
        }
        let full = Complex::complete(5, 2).unwrap();
        let pi = stationary(&full).unwrap();
        assert!(pi.pi.iter().all(|&p| (p - 0.1).abs() < 1e-15));
    }

    #[test]
    fn flow_and_phi() {
        let y = two_triangles();
        let s = [f(&[0, 2])];
        assert!((flow_q(&y, &s).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert!((phi_set(&y, &s).unwrap() - 1.2).abs() < 1e-12);
        let complement: Vec<Face> = [[0, 1], [1, 2], [0, 3], [1, 3]].iter().map(|v| f(v)).collect();
        assert!((flow_q(&y, &complement).unwrap() - flow_q(&y, &s).unwrap()).abs() < 1e-12);
        assert!((phi_set(&y, &complement).unwrap() - 1.2).abs() < 1e-12);
        let all = Support::of(&y).faces(&y);
        assert_eq!(flow_q(&y, &all).unwrap(), 0.0);
        assert!(phi_set(&y, &all).is_err());
        assert!(phi_set(&y, &[]).is_err());
        assert!(flow_q(&y, &[f(&[2, 3])]).is_err());
    }

    #[test]
    fn simulation_basics() {
        let y = Complex::complete(5, 2).unwrap();
        let t = simulate(&y, 0.0, &f(&[0, 1]), 0, 1, &[]).unwrap();
        assert_eq!(t.visits.iter().sum::<u64>(), 1);
        assert_eq!(t.end, f(&[0, 1]));
        assert!((t.tv() - 0.9).abs() < 1e-12);
        let t = simulate(&y, 0.0, &f(&[0, 1]), 100_000, 2, &[10, 1000]).unwrap();
        assert_eq!(t.checkpoints.len(), 3);
        assert!(t.tv() < 0.02);
        let bad = two_triangles();
        assert!(simulate(&bad, 0.0, &f(&[2, 3]), 10, 0, &[]).is_err());
    }
}
