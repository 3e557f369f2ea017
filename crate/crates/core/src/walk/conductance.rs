use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{cut_stats, phi_value, Support};
use crate::combinatorics::mix_pair;
use crate::complex::{Complex, Face};
use crate::error::{Error, Result};

/// Largest support for exhaustive subset enumeration.
pub const EXACT_SUPPORT_LIMIT: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConductanceMethod {
    Exact,
    Estimate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConductanceReport {
    pub phi: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub argmin: Option<Vec<Face>>,
    pub method: ConductanceMethod,
    /// Subsets evaluated (exact) or sets sampled (estimate).
    pub samples: u64,
    /// Smallest realised exit ratio among sampled sets (estimate only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_ratio: Option<f64>,
}

/// Best subset so far: `cut / (ds · (tot − ds))` compared exactly.
#[derive(Clone, Copy, Debug)]
struct Best {
    cut: u64,
    ds: u64,
    denom: u128,
    mask: u32,
}

impl Best {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.cut as u128 * other.denom)
            .cmp(&(other.cut as u128 * self.denom))
            .then_with(|| lex_cmp(self.mask, other.mask))
    }

    fn better(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if a.cmp(&b) == Ordering::Greater { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

/// Lexicographic order of the ascending index lists encoded by two masks.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let j = (a ^ b).trailing_zeros();
    let above = |m: u32| if j >= 31 { 0 } else { m >> (j + 1) };
    // the list holding j is smaller unless the other list ends before j
    if a & (1 << j) != 0 {
        if above(b) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Exact `Φ_Y` over all subsets with `0 < π(S) ≤ 1/2`, by Gray-code
/// enumeration of the support in parallel chunks. Ties go to the
/// lexicographically smallest list of support indices.
pub fn conductance_exact(y: &Complex) -> Result<ConductanceReport> {
    let support = Support::of(y);
    let m = support.len();
    if m > EXACT_SUPPORT_LIMIT {
        return Err(Error::TooLarge {
            what: "conductance support",
            size: m as u128,
            limit: EXACT_SUPPORT_LIMIT as u128,
        });
    }
    if m < 2 {
        return Err(Error::Degenerate("conductance needs at least two support faces".into()));
    }
    let adjacency = support.adjacency(y);
    let nbr: Vec<u32> = adjacency
        .iter()
        .map(|list| list.iter().fold(0u32, |acc, &j| acc | (1 << j)))
        .collect();
    let deg: Vec<u64> = (0..m).map(|i| y.codegree_by_rank(support.rank(i)) as u64).collect();
    let tot = ((y.d() + 1) * y.num_top_faces()) as u64;

    let high = m.min(8);
    let low = m - high;
    let best = (0u32..1 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut mask = chunk << low;
            let mut ds: u64 = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| deg[i]).sum();
            let mut cut: u64 = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| (nbr[i] & !mask).count_ones() as u64)
                .sum();
            let mut best = None;
            let mut k: u32 = 0;
            loop {
                if ds > 0 && 2 * ds <= tot {
                    let cand = Best {
                        cut,
                        ds,
                        denom: ds as u128 * (tot - ds) as u128,
                        mask,
                    };
                    best = Best::better(best, Some(cand));
                }
                k += 1;
                if k >> low != 0 {
                    break;
                }
                let i = k.trailing_zeros() as usize;
                let bit = 1u32 << i;
                let inside = (nbr[i] & mask).count_ones() as u64;
                let outside = (nbr[i] & !mask & !bit).count_ones() as u64;
                if mask & bit == 0 {
                    mask |= bit;
                    ds += deg[i];
                    cut = cut + outside - inside;
                } else {
                    mask &= !bit;
                    ds -= deg[i];
                    cut = cut + inside - outside;
                }
            }
            best
        })
        .reduce(|| None, Best::better)
        .expect("some singleton has π ≤ 1/2");

    let argmin: Vec<Face> = (0..m)
        .filter(|&i| best.mask >> i & 1 == 1)
        .map(|i| y.ridge(support.rank(i)))
        .collect();
    Ok(ConductanceReport {
        phi: phi_value(y.d(), best.cut, best.ds, tot),
        argmin: Some(argmin),
        method: ConductanceMethod::Exact,
        samples: 1u64 << m,
        min_ratio: None,
    })
}

/// `|(∂⁺S ∖ B_S) ∩ Y| / |∂⁺S ∩ Y|` for support states `S`: the fraction of
/// top faces touching `S` that also have a (d-1)-face outside `S`.
pub fn exit_ratio(y: &Complex, support: &Support, states: &[usize]) -> f64 {
    let mut inside = vec![false; support.len()];
    for &s in states {
        inside[s] = true;
    }
    let mut tops: Vec<u32> = states
        .iter()
        .flat_map(|&s| y.cofaces_by_rank(support.rank(s)).iter().copied())
        .collect();
    tops.sort_unstable();
    tops.dedup();
    if tops.is_empty() {
        return 1.0;
    }
    let d = y.d();
    let interior = tops
        .iter()
        .filter(|&&t| {
            let rho = y.top_faces()[t as usize].vertices();
            (0..=d).all(|i| {
                let r = y.binom().rank_without(rho, i) as usize;
                support.state_of_rank(r).is_some_and(|s| inside[s])
            })
        })
        .count();
    (tops.len() - interior) as f64 / tops.len() as f64
}

/// Lower estimate `min ratio(S) / (d(d+1))` over `trials` tightly connected
/// sets grown by randomised BFS from a uniform start. Target sizes are
/// `2^j` with `j` uniform, and growth stops before `π(S)` would pass 1/2.
pub fn conductance_estimate(y: &Complex, trials: usize, seed: u64) -> Result<ConductanceReport> {
    let support = Support::of(y);
    let m = support.len();
    if m < 2 {
        return Err(Error::Degenerate("conductance needs at least two support faces".into()));
    }
    let adjacency = support.adjacency(y);
    let deg: Vec<u64> = (0..m).map(|i| y.codegree_by_rank(support.rank(i)) as u64).collect();
    let tot = ((y.d() + 1) * y.num_top_faces()) as u64;
    let max_exp = usize::BITS - m.leading_zeros();

    let samples: Vec<(f64, Vec<usize>)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_pair(seed, trial as u64));
            let target = 1usize << rng.gen_range(0..max_exp);
            let set = grow(&adjacency, &deg, tot, target, &mut rng);
            (exit_ratio(y, &support, &set), set)
        })
        .collect();

    let d = y.d() as f64;
    let best = samples
        .into_iter()
        .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let (min_ratio, argmin) = match best {
        Some((r, set)) => (r, Some(set.iter().map(|&i| y.ridge(support.rank(i))).collect())),
        None => (f64::INFINITY, None),
    };
    Ok(ConductanceReport {
        phi: min_ratio / (d * (d + 1.0)),
        argmin,
        method: ConductanceMethod::Estimate,
        samples: trials as u64,
        min_ratio: Some(min_ratio),
    })
}

fn grow(adjacency: &[Vec<usize>], deg: &[u64], tot: u64, target: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let m = adjacency.len();
    let mut inside = vec![false; m];
    let start = rng.gen_range(0..m);
    inside[start] = true;
    let mut set = vec![start];
    let mut ds = deg[start];
    let mut frontier: Vec<usize> = Vec::new();
    let mut queued = vec![false; m];
    let push_nbrs = |v: usize, frontier: &mut Vec<usize>, queued: &mut [bool], inside: &[bool]| {
        for &u in &adjacency[v] {
            if !inside[u] && !queued[u] {
                queued[u] = true;
                frontier.push(u);
            }
        }
    };
    push_nbrs(start, &mut frontier, &mut queued, &inside);
    while set.len() < target && !frontier.is_empty() {
        let pick = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(pick);
        if 2 * (ds + deg[v]) > tot {
            // too heavy; leave it out but keep exploring the rest
            continue;
        }
        inside[v] = true;
        ds += deg[v];
        set.push(v);
        push_nbrs(v, &mut frontier, &mut queued, &inside);
    }
    set.sort_unstable();
    set
}

/// `Φ(S)` and the exit ratio of a state set, for cross-checking the
/// per-set bound `Φ(S) ≥ ratio(S) / (d(d+1))`.
pub fn set_measures(y: &Complex, support: &Support, states: &[usize]) -> (f64, f64) {
    let adjacency = support.adjacency(y);
    let (ds, cut) = cut_stats(y, support, &adjacency, states);
    let tot = ((y.d() + 1) * y.num_top_faces()) as u64;
    (phi_value(y.d(), cut, ds, tot), exit_ratio(y, support, states))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::phi_set;

    fn two_triangles() -> Complex {
        Complex::from_faces(4, 2, &[vec![0, 1, 2], vec![0, 1, 3]]).unwrap()
    }

    fn brute_force(y: &Complex) -> (f64, Vec<usize>) {
        let support = Support::of(y);
        let m = support.len();
        let faces = support.faces(y);
        let pi = crate::walk::stationary(y).unwrap();
        let mut best = (f64::INFINITY, Vec::new());
        for mask in 1u32..(1 << m) - 1 {
            let set: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let mass: f64 = set.iter().map(|&i| pi.pi[i]).sum();
            if mass > 0.5 + 1e-12 {
                continue;
            }
            let chosen: Vec<Face> = set.iter().map(|&i| faces[i].clone()).collect();
            let v = phi_set(y, &chosen).unwrap();
            if v < best.0 - 1e-12 || ((v - best.0).abs() <= 1e-12 && set < best.1) {
                best = (v, set);
            }
        }
        best
    }

    #[test]
    fn lexicographic_masks() {
        assert_eq!(lex_cmp(0b011, 0b101), Ordering::Less);
        assert_eq!(lex_cmp(0b001, 0b011), Ordering::Less);
        assert_eq!(lex_cmp(0b110, 0b001), Ordering::Greater);
        assert_eq!(lex_cmp(0b100, 0b010), Ordering::Greater);
    }

    #[test]
    fn exact_matches_brute_force() {
        for y in [
            two_triangles(),
            Complex::complete(4, 2).unwrap(),
            Complex::generate(6, 2, 0.3, 4).unwrap(),
        ] {
            let r = conductance_exact(&y).unwrap();
            let (phi, set) = brute_force(&y);
            assert!((r.phi - phi).abs() < 1e-12, "{} vs {}", r.phi, phi);
            let support = Support::of(&y);
            let got = support.states(&y, r.argmin.as_ref().unwrap()).unwrap();
            assert_eq!(got, set);
        }
        assert!(conductance_exact(&Complex::complete(4, 2).unwrap()).unwrap().phi > 0.0);
    }

    #[test]
    fn estimate_on_complete_complex() {
        let y = Complex::complete(6, 2).unwrap();
        let support = Support::of(&y);
        assert_eq!(exit_ratio(&y, &support, &[0]), 1.0);
        let r = conductance_estimate(&y, 50, 1).unwrap();
        assert!(r.phi > 0.0 && r.phi <= 1.0 / 6.0);
        assert_eq!(r.samples, 50);
    }

    #[test]
    fn per_set_bound_holds() {
        let y = Complex::generate(7, 2, 0.5, 9).unwrap();
        let support = Support::of(&y);
        let d = y.d() as f64;
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let adjacency = support.adjacency(&y);
            let deg: Vec<u64> = (0..support.len())
                .map(|i| y.codegree_by_rank(support.rank(i)) as u64)
                .collect();
            let tot = 3 * y.num_top_faces() as u64;
            let set = grow(&adjacency, &deg, tot, 1 + seed as usize % 8, &mut rng);
            let (phi, ratio) = set_measures(&y, &support, &set);
            assert!(phi + 1e-12 >= ratio / (d * (d + 1.0)));
        }
    }

    #[test]
    fn report_json() {
        let r = conductance_exact(&two_triangles()).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["method"], "exact");
        assert!(v.get("min_ratio").is_none());
    }
}
