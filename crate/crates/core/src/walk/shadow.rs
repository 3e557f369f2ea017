//! Upper shadows of (d-1)-face sets, their intersection profile, tight
//! connectivity, and the weak Kruskal-Katona bound on interior cofaces.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, real_binomial, BinomialTable};
use crate::complex::{Complex, Face};
use crate::error::{Error, Result};

/// Counts of potential cofaces `ρ ∈ ∂⁺S` by `i = |∂ρ ∩ S|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowProfile {
    /// `|S|`.
    pub m: usize,
    /// `f[i - 1] = f_i(S)` for `i = 1, …, d + 1` over all (d+1)-subsets.
    pub f: Vec<u64>,
    /// `|B_S|`: potential cofaces whose every facet lies in `S`.
    pub b_count: u64,
    /// The same counts restricted to top faces of the complex, when given.
    pub realized: Option<Vec<u64>>,
}

impl ShadowProfile {
    /// `|∂⁺S|`.
    pub fn shadow_size(&self) -> u64 {
        self.f.iter().sum()
    }

    /// `|B_S ∩ Y^{(d)}|`, when realised counts are present.
    pub fn realized_interior(&self) -> Option<u64> {
        self.realized.as_ref().map(|r| *r.last().expect("d + 1 entries"))
    }
}

fn check_set(n: usize, d: usize, s: &[Face]) -> Result<BTreeSet<Vec<usize>>> {
    let mut set = BTreeSet::new();
    for face in s {
        if face.len() != d || face.vertices().iter().any(|&v| v >= n) {
            return Err(Error::InvalidFace {
                vertices: face.vertices().to_vec(),
                reason: format!("expected {d} vertices in [0, {n})"),
            });
        }
        set.insert(face.vertices().to_vec());
    }
    Ok(set)
}

/// Profile of `S` against the complete (d+1)-level of `[n]`, and against
/// the top faces of `y` when given. Panics if the double-counting identity
/// `Σ i·f_i = m(n − d)` fails, which would indicate corrupted input.
pub fn coface_profile(n: usize, d: usize, s: &[Face], y: Option<&Complex>) -> Result<ShadowProfile> {
    if d < 1 || n <= d {
        return Err(Error::param(format!("need n > d >= 1, got n = {n}, d = {d}")));
    }
    if let Some(y) = y {
        if y.n() != n || y.d() != d {
            return Err(Error::param("complex dimensions differ from the profile's"));
        }
    }
    let set = check_set(n, d, s)?;
    if set.is_empty() {
        return Err(Error::param("the face set must be non-empty"));
    }
    let binom = BinomialTable::new(n, d + 1);
    let mut hits: HashMap<u64, (u8, Vec<usize>)> = HashMap::new();
    for sigma in &set {
        for v in (0..n).filter(|v| sigma.binary_search(v).is_err()) {
            let mut rho = sigma.clone();
            let at = rho.binary_search(&v).unwrap_err();
            rho.insert(at, v);
            hits.entry(binom.rank(&rho)).or_insert_with(|| (0, rho)).0 += 1;
        }
    }
    let mut f = vec![0u64; d + 1];
    let mut realized = y.map(|_| vec![0u64; d + 1]);
    for (count, rho) in hits.values() {
        let i = *count as usize;
        f[i - 1] += 1;
        if let (Some(r), Some(y)) = (realized.as_mut(), y) {
            if y.contains_top(&Face::from_sorted_unchecked(rho.clone())) {
                r[i - 1] += 1;
            }
        }
    }
    let m = set.len();
    let weighted: u64 = f.iter().enumerate().map(|(i, &c)| (i as u64 + 1) * c).sum();
    assert_eq!(weighted, (m * (n - d)) as u64, "double counting identity failed");
    Ok(ShadowProfile {
        m,
        b_count: f[d],
        f,
        realized,
    })
}

/// Indices of top faces of `y` containing some member of `s`.
pub fn upper_shadow(y: &Complex, s: &[Face]) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for face in s {
        y.validate(face, y.d())?;
        out.extend(y.cofaces_by_rank(y.rank_of(face) as usize).iter().map(|&t| t as usize));
    }
    Ok(out)
}

/// Splits `s` into maximal classes connected through shared top faces of
/// `y`. Components are ordered by their smallest face; faces within a
/// component sort by colex rank.
pub fn tight_components(y: &Complex, s: &[Face]) -> Result<Vec<Vec<Face>>> {
    let mut ranks: Vec<usize> = Vec::with_capacity(s.len());
    for face in s {
        y.validate(face, y.d())?;
        ranks.push(y.rank_of(face) as usize);
    }
    ranks.sort_unstable();
    ranks.dedup();
    let member: HashMap<usize, usize> = ranks.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut seen = vec![false; ranks.len()];
    let mut components = Vec::new();
    for start in 0..ranks.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut comp = Vec::new();
        while let Some(i) = queue.pop_front() {
            comp.push(ranks[i]);
            for nb in y.neighbor_ranks(ranks[i]) {
                if let Some(&j) = member.get(&nb) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        comp.sort_unstable();
        components.push(comp.into_iter().map(|r| y.ridge(r)).collect());
    }
    Ok(components)
}

/// Solves `C(x, r) = m` for real `x ≥ r` and returns `C(x, r + 1)`.
pub fn kruskal_katona_bound(r: usize, m: u64) -> Result<f64> {
    if r < 1 || m < 1 {
        return Err(Error::param("need r >= 1 and m >= 1"));
    }
    let target = m as f64;
    let mut lo = r as f64;
    let mut hi = lo + 1.0;
    while real_binomial(hi, r) < target {
        hi = lo + 2.0 * (hi - lo);
    }
    while hi - lo > 1e-12 * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if real_binomial(mid, r) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    // land exactly on integer solutions so the equality case is exact
    let rounded = x.round();
    if (x - rounded).abs() < 1e-6 && binomial(rounded as usize, r) == m {
        x = rounded;
    }
    Ok(real_binomial(x, r + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: &[usize]) -> Face {
        Face::new(v.to_vec()).unwrap()
    }

    #[test]
    fn profile_examples() {
        let p = coface_profile(5, 2, &[f(&[0, 1]), f(&[0, 2])], None).unwrap();
        assert_eq!(p.f, vec![4, 1, 0]);
        assert_eq!(p.m, 2);
        let single = coface_profile(7, 2, &[f(&[3, 5])], None).unwrap();
        assert_eq!(single.f, vec![5, 0, 0]);
        let all: Vec<Face> = (0..6).map(|r| Complex::complete(4, 2).unwrap().ridge(r)).collect();
        let p = coface_profile(4, 2, &all, None).unwrap();
        assert_eq!(p.b_count, 4);
        assert_eq!(p.f[2], 4);
    }

    #[test]
    fn realized_counts() {
        let y = Complex::from_faces(4, 2, &[vec![0, 1, 2]]).unwrap();
        let p = coface_profile(4, 2, &[f(&[0, 1]), f(&[0, 2]), f(&[1, 2])], Some(&y)).unwrap();
        assert_eq!(p.b_count, 1);
        assert_eq!(p.realized_interior(), Some(1));
        assert_eq!(p.realized.unwrap().iter().sum::<u64>(), 1);
    }

    #[test]
    fn components() {
        let tri = Complex::from_faces(3, 2, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(tight_components(&tri, &[f(&[0, 1]), f(&[0, 2])]).unwrap().len(), 1);
        let y = Complex::from_faces(6, 2, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let comps = tight_components(&y, &[f(&[0, 1]), f(&[3, 4])]).unwrap();
        assert_eq!(comps.len(), 2);
        let shadows: Vec<_> = comps.iter().map(|c| upper_shadow(&y, c).unwrap()).collect();
        assert!(shadows[0].is_disjoint(&shadows[1]));
    }

    #[test]
    fn kruskal_katona_values() {
        assert_eq!(kruskal_katona_bound(2, 6).unwrap(), 4.0);
        assert_eq!(kruskal_katona_bound(2, 3).unwrap(), 1.0);
        assert_eq!(kruskal_katona_bound(2, 10).unwrap(), 10.0);
        let b = kruskal_katona_bound(2, 7).unwrap();
        assert!(b > 4.0 && b < 10.0);
        assert!(kruskal_katona_bound(0, 3).is_err());
    }
}
