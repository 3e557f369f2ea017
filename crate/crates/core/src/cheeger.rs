//! The Cheeger constant `h(Y) = min n·|F(A₀,…,A_d)| / Π|A_i|` over
//! partitions of the vertex set into d+1 non-empty blocks, where `F` counts
//! top faces with exactly one vertex in each block.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::stirling2;
use crate::complex::Complex;
use crate::error::{Error, Result};

/// Enumeration cap on `S(n, d+1)`.
pub const EXACT_PARTITION_LIMIT: u128 = 10_000_000;

/// d+1 labelled, disjoint, non-empty blocks covering `[0, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Sorts each block; validation against a complex happens at use.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes in label order.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Builds the partition whose block `i` holds the vertices labelled `i`.
    fn from_labels(labels: &[u8], k: usize) -> Self {
        let mut blocks = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l as usize].push(v);
        }
        Partition { blocks }
    }

    /// Block label of every vertex, after checking the partition is valid for `y`.
    fn labels(&self, y: &Complex) -> Result<Vec<u8>> {
        let n = y.n();
        if self.blocks.len() != y.d() + 1 {
            return Err(Error::InvalidPartition(format!(
                "expected {} blocks, got {}",
                y.d() + 1,
                self.blocks.len()
            )));
        }
        let mut labels = vec![u8::MAX; n];
        for (i, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if labels[v] != u8::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
                labels[v] = i as u8;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == u8::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(labels)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheegerResult {
    pub h: f64,
    pub witness: Partition,
    /// `|F(witness)|`.
    pub crossing: usize,
}

/// `|F(A₀,…,A_d)|`: top faces meeting every block exactly once.
pub fn crossing_faces(y: &Complex, p: &Partition) -> Result<usize> {
    let labels = p.labels(y)?;
    Ok(count_transversal(y, &labels))
}

fn count_transversal(y: &Complex, labels: &[u8]) -> usize {
    y.top_faces()
        .iter()
        .filter(|face| {
            // d+1 vertices in d+1 blocks: transversal iff labels are distinct
            let mut seen = 0u64;
            face.vertices().iter().all(|&v| {
                let bit = 1u64 << labels[v];
                let fresh = seen & bit == 0;
                seen |= bit;
                fresh
            })
        })
        .count()
}

pub fn partition_score(y: &Complex, p: &Partition) -> Result<f64> {
    let crossing = crossing_faces(y, p)?;
    Ok(score(y.n(), crossing, &p.sizes()))
}

fn score(n: usize, crossing: usize, sizes: &[usize]) -> f64 {
    let prod: f64 = sizes.iter().map(|&s| s as f64).product();
    n as f64 * crossing as f64 / prod
}

/// Candidate during enumeration: compared by `crossing / prod` exactly, then by
/// restricted-growth string.
#[derive(Clone, Debug)]
struct Candidate {
    crossing: u128,
    prod: u128,
    labels: Vec<u8>,
}

impl Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.crossing * other.prod)
            .cmp(&(other.crossing * self.prod))
            .then_with(|| self.labels.cmp(&other.labels))
    }

    fn better(a: Option<Self>, b: Option<Self>) -> Option<Self> {
        match (a, b) {
            (Some(a), Some(b)) => Some(if a.cmp(&b) == Ordering::Greater { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

/// Exact `h(Y)` by enumerating all restricted-growth strings with exactly
/// d+1 blocks. Every unordered partition is visited once; the score does
/// not depend on block labels.
pub fn cheeger_exact(y: &Complex) -> Result<CheegerResult> {
    let n = y.n();
    let k = y.d() + 1;
    let count = stirling2(n, k);
    if count > EXACT_PARTITION_LIMIT {
        return Err(Error::TooLarge {
            what: "partition enumeration S(n, d+1)",
            size: count,
            limit: EXACT_PARTITION_LIMIT,
        });
    }
    if k > 64 {
        return Err(Error::param("at most 64 blocks are supported"));
    }
    // split the search tree into prefixes processed in parallel
    let depth = n.min(7);
    let mut prefixes = Vec::new();
    let mut labels = vec![0u8; n];
    collect_prefixes(&mut labels, 1, 1, depth, n, k, &mut prefixes);

    let best = prefixes
        .into_par_iter()
        .map(|(mut labels, used)| {
            let mut best = None;
            search(y, &mut labels, depth, used, k, &mut best);
            best
        })
        .reduce(|| None, Candidate::better)
        .expect("S(n, d+1) >= 1 when n > d");

    let witness = Partition::from_labels(&best.labels, k);
    let crossing = best.crossing as usize;
    Ok(CheegerResult {
        h: score(n, crossing, &witness.sizes()),
        witness,
        crossing,
    })
}

/// Whether blocks `used..k` can still be opened in the positions `pos..n`.
#[inline]
fn feasible(pos: usize, used: usize, n: usize, k: usize) -> bool {
    k - used <= n - pos
}

fn collect_prefixes(
    labels: &mut Vec<u8>,
    pos: usize,
    used: usize,
    depth: usize,
    n: usize,
    k: usize,
    out: &mut Vec<(Vec<u8>, usize)>,
) {
    if pos == depth {
        out.push((labels.clone(), used));
        return;
    }
    for l in 0..=used.min(k - 1) {
        let next = used.max(l + 1);
        if !feasible(pos + 1, next, n, k) {
            continue;
        }
        labels[pos] = l as u8;
        collect_prefixes(labels, pos + 1, next, depth, n, k, out);
    }
}

fn search(y: &Complex, labels: &mut [u8], pos: usize, used: usize, k: usize, best: &mut Option<Candidate>) {
    let n = labels.len();
    if pos == n {
        if used < k {
            return;
        }
        let crossing = count_transversal(y, labels) as u128;
        let mut sizes = vec![0u128; k];
        for &l in labels.iter() {
            sizes[l as usize] += 1;
        }
        let cand = Candidate {
            crossing,
            prod: sizes.iter().product(),
            labels: labels.to_vec(),
        };
        *best = Candidate::better(best.take(), Some(cand));
        return;
    }
    for l in 0..=used.min(k - 1) {
        let next = used.max(l + 1);
        if !feasible(pos + 1, next, n, k) {
            continue;
        }
        labels[pos] = l as u8;
        search(y, labels, pos + 1, next, k, best);
    }
}

/// Upper bound from the singleton partition on a minimum co-degree face σ:
/// `A_i = {σ_i}` for `i < d` and `A_d` the rest, scoring `n·δ(Y)/(n−d)`.
pub fn cheeger_from_min_codegree(y: &Complex) -> Result<CheegerResult> {
    let sigma = y.min_codegree_face();
    let mut blocks: Vec<Vec<usize>> = sigma.vertices().iter().map(|&v| vec![v]).collect();
    blocks.push((0..y.n()).filter(|&v| !sigma.contains(v)).collect());
    let witness = Partition::new(blocks);
    let crossing = crossing_faces(y, &witness)?;
    Ok(CheegerResult {
        h: score(y.n(), crossing, &witness.sizes()),
        witness,
        crossing,
    })
}
