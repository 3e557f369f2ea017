//! d-dimensional complexes with complete (d-1)-skeleton.
//!
//! Only the top faces are stored. Every face of dimension at most `d - 1`
//! is implicitly present and is addressed by its colex rank, so the
//! `C(n, d)` potential (d-1)-faces live in dense arrays.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, next_colex, stream_uniform, BinomialTable};
use crate::error::{Error, Result};

/// A face as a strictly increasing list of 0-based vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<usize>);

impl Face {
    /// Sorts the vertices and rejects repeats.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace {
                vertices,
                reason: "repeated vertex".into(),
            });
        }
        Ok(Face(vertices))
    }

    /// Accepts only an already strictly increasing list.
    pub fn from_sorted(vertices: Vec<usize>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidFace {
                vertices,
                reason: "vertices must be strictly increasing".into(),
            });
        }
        Ok(Face(vertices))
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices minus one; the empty face has dimension -1.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// `self ∪ {v}` for `v` not in `self`.
    pub fn with_vertex(&self, v: usize) -> Face {
        let pos = self.0.partition_point(|&u| u < v);
        let mut out = self.0.clone();
        out.insert(pos, v);
        Face(out)
    }

    /// `self` minus the vertex at position `i`.
    pub fn without_position(&self, i: usize) -> Face {
        let mut out = self.0.clone();
        out.remove(i);
        Face(out)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A d-complex on `[0, n)` with complete (d-1)-skeleton.
#[derive(Clone, Debug)]
pub struct Complex {
    n: usize,
    d: usize,
    binom: BinomialTable,
    /// Top faces sorted by colex rank.
    top_faces: Vec<Face>,
    top_ranks: Vec<u64>,
    /// CSR index from (d-1)-face rank to the top faces containing it.
    coface_offsets: Vec<usize>,
    coface_list: Vec<u32>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.d == other.d && self.top_ranks == other.top_ranks
    }
}

/// Largest `C(n, d)` for which the dense (d-1)-face index is allocated.
const MAX_RIDGES: u64 = 1 << 28;

fn check_dims(n: usize, d: usize) -> Result<()> {
    if d < 1 {
        return Err(Error::param(format!("dimension must be at least 1, got {d}")));
    }
    if n <= d {
        return Err(Error::param(format!("need n > d, got n = {n}, d = {d}")));
    }
    let ridges = binomial(n, d);
    if ridges > MAX_RIDGES {
        return Err(Error::TooLarge {
            what: "(d-1)-face index",
            size: ridges as u128,
            limit: MAX_RIDGES as u128,
        });
    }
    Ok(())
}

impl Complex {
    fn assemble(n: usize, d: usize, mut top: Vec<(u64, Face)>) -> Self {
        top.sort_unstable_by_key(|(r, _)| *r);
        top.dedup_by_key(|(r, _)| *r);
        let binom = BinomialTable::new(n, d + 1);
        let ridges = binomial(n, d) as usize;

        let mut counts = vec![0usize; ridges + 1];
        for (_, face) in &top {
            for i in 0..=d {
                counts[binom.rank_without(face.vertices(), i) as usize + 1] += 1;
            }
        }
        for i in 0..ridges {
            counts[i + 1] += counts[i];
        }
        let coface_offsets = counts.clone();
        let mut fill = counts;
        let mut coface_list = vec![0u32; top.len() * (d + 1)];
        for (idx, (_, face)) in top.iter().enumerate() {
            for i in 0..=d {
                let r = binom.rank_without(face.vertices(), i) as usize;
                coface_list[fill[r]] = idx as u32;
                fill[r] += 1;
            }
        }

        let (top_ranks, top_faces) = top.into_iter().unzip();
        Complex {
            n,
            d,
            binom,
            top_faces,
            top_ranks,
            coface_offsets,
            coface_list,
        }
    }

    /// Samples the Linial-Meshulam complex: each (d+1)-subset of `[0, n)` is
    /// a top face independently with probability `p`. The decision for the
    /// subset of colex rank `r` depends only on `(seed, r)`.
    pub fn generate(n: usize, d: usize, p: f64, seed: u64) -> Result<Self> {
        check_dims(n, d)?;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param(format!("probability must lie in [0, 1], got {p}")));
        }
        let mut top = Vec::new();
        if p > 0.0 {
            let mut c: Vec<usize> = (0..=d).collect();
            let mut rank = 0u64;
            loop {
                if stream_uniform(seed, rank) < p {
                    top.push((rank, Face::from_sorted_unchecked(c.clone())));
                }
                rank += 1;
                if !next_colex(&mut c, n) {
                    break;
                }
            }
        }
        Ok(Self::assemble(n, d, top))
    }

    /// The complex with every (d+1)-subset as a top face.
    pub fn complete(n: usize, d: usize) -> Result<Self> {
        Self::generate(n, d, 1.0, 0)
    }

    /// Builds a complex from explicit top faces (any vertex order, duplicates merged).
    pub fn from_faces(n: usize, d: usize, faces: &[Vec<usize>]) -> Result<Self> {
        check_dims(n, d)?;
        let binom = BinomialTable::new(n, d + 1);
        let mut top = Vec::with_capacity(faces.len());
        for raw in faces {
            let face = Face::new(raw.clone())?;
            validate_face(n, d + 1, &face)?;
            top.push((binom.rank(face.vertices()), face));
        }
        Ok(Self::assemble(n, d, top))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn top_faces(&self) -> &[Face] {
        &self.top_faces
    }

    pub fn num_top_faces(&self) -> usize {
        self.top_faces.len()
    }

    /// Number of potential (and, by completeness, actual) (d-1)-faces, `C(n, d)`.
    pub fn num_ridges(&self) -> usize {
        self.coface_offsets.len() - 1
    }

    pub(crate) fn binom(&self) -> &BinomialTable {
        &self.binom
    }

    /// Colex rank of a face of size at most `d + 1`.
    pub fn rank_of(&self, face: &Face) -> u64 {
        self.binom.rank(face.vertices())
    }

    /// The face of size `k` with colex rank `rank`.
    pub fn face_of_rank(&self, rank: u64, k: usize) -> Face {
        Face::from_sorted_unchecked(self.binom.unrank(rank, k))
    }

    pub fn ridge(&self, rank: usize) -> Face {
        self.face_of_rank(rank as u64, self.d)
    }

    /// Checks that `face` is a valid face of the requested size on `[0, n)`.
    pub fn validate(&self, face: &Face, size: usize) -> Result<()> {
        validate_face(self.n, size, face)
    }

    /// Index into [`top_faces`](Self::top_faces), if `face` is a top face.
    pub fn top_index(&self, face: &Face) -> Option<usize> {
        if face.len() != self.d + 1 || face.vertices().iter().any(|&v| v >= self.n) {
            return None;
        }
        self.top_ranks.binary_search(&self.rank_of(face)).ok()
    }

    pub fn contains_top(&self, face: &Face) -> bool {
        self.top_index(face).is_some()
    }

    /// Co-degree of the (d-1)-face of colex rank `rank`.
    #[inline]
    pub fn codegree_by_rank(&self, rank: usize) -> usize {
        self.coface_offsets[rank + 1] - self.coface_offsets[rank]
    }

    /// Indices of the top faces containing the (d-1)-face of rank `rank`.
    #[inline]
    pub fn cofaces_by_rank(&self, rank: usize) -> &[u32] {
        &self.coface_list[self.coface_offsets[rank]..self.coface_offsets[rank + 1]]
    }

    pub fn codegree(&self, sigma: &Face) -> Result<usize> {
        self.validate(sigma, self.d)?;
        Ok(self.codegree_by_rank(self.rank_of(sigma) as usize))
    }

    /// Co-degrees of all `C(n, d)` (d-1)-faces, indexed by colex rank.
    pub fn codegrees(&self) -> Vec<usize> {
        (0..self.num_ridges()).map(|r| self.codegree_by_rank(r)).collect()
    }

    /// δ(Y): the minimum co-degree over all (d-1)-faces, zero-degree faces included.
    pub fn min_codegree(&self) -> usize {
        (0..self.num_ridges())
            .map(|r| self.codegree_by_rank(r))
            .min()
            .unwrap_or(0)
    }

    /// A (d-1)-face attaining the minimum co-degree (smallest colex rank).
    pub fn min_codegree_face(&self) -> Face {
        let best = (0..self.num_ridges())
            .min_by_key(|&r| (self.codegree_by_rank(r), r))
            .unwrap_or(0);
        self.ridge(best)
    }

    /// Ranks of the (d-1)-faces sharing a top face with the ridge of rank `rank`.
    pub fn neighbor_ranks(&self, rank: usize) -> Vec<usize> {
        let sigma = self.binom.unrank(rank as u64, self.d);
        let mut out = Vec::with_capacity(self.d * self.codegree_by_rank(rank));
        for &t in self.cofaces_by_rank(rank) {
            let rho = self.top_faces[t as usize].vertices();
            // the vertex of rho outside sigma stays, each vertex of sigma is dropped in turn
            for (i, v) in rho.iter().enumerate() {
                if sigma.binary_search(v).is_ok() {
                    out.push(self.binom.rank_without(rho, i) as usize);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// All (d-1)-faces σ' ≠ σ with σ ∪ σ' a top face.
    pub fn neighbors(&self, sigma: &Face) -> Result<BTreeSet<Face>> {
        self.validate(sigma, self.d)?;
        let r = self.rank_of(sigma) as usize;
        Ok(self.neighbor_ranks(r).into_iter().map(|s| self.ridge(s)).collect())
    }

    /// The link graph of a (d-2)-face τ.
    pub fn link_graph(&self, tau: &Face) -> Result<LinkGraph> {
        if tau.len() + 1 != self.d {
            return Err(Error::InvalidFace {
                vertices: tau.vertices().to_vec(),
                reason: format!("link graphs need a face of dimension {}", self.d as isize - 2),
            });
        }
        self.validate(tau, self.d - 1)?;
        let vertices: Vec<usize> = (0..self.n).filter(|v| !tau.contains(*v)).collect();
        let mut edges = Vec::new();
        for &v in &vertices {
            let sigma = tau.with_vertex(v);
            for &t in self.cofaces_by_rank(self.rank_of(&sigma) as usize) {
                let rho = &self.top_faces[t as usize];
                let u = rho
                    .vertices()
                    .iter()
                    .copied()
                    .find(|&u| u != v && !tau.contains(u))
                    .expect("top face has one vertex beyond sigma");
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        edges.sort_unstable();
        Ok(LinkGraph {
            tau: tau.clone(),
            vertices,
            edges,
        })
    }

    /// Returns a copy with one more top face.
    pub fn with_top_face(&self, face: &Face) -> Result<Complex> {
        self.validate(face, self.d + 1)?;
        let mut top: Vec<(u64, Face)> = self
            .top_ranks
            .iter()
            .copied()
            .zip(self.top_faces.iter().cloned())
            .collect();
        top.push((self.rank_of(face), face.clone()));
        Ok(Self::assemble(self.n, self.d, top))
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            n: self.n,
            d: self.d,
            faces: self.top_faces.iter().map(|f| f.vertices().to_vec()).collect(),
        }
    }

    pub fn from_file(file: &ComplexFile) -> Result<Self> {
        for raw in &file.faces {
            Face::from_sorted(raw.clone())?;
        }
        Self::from_faces(file.n, file.d, &file.faces)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("complex serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text)?;
        Self::from_file(&file)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).map_err(|e| Error::io(path, e))
    }
}

fn validate_face(n: usize, size: usize, face: &Face) -> Result<()> {
    if face.len() != size {
        return Err(Error::InvalidFace {
            vertices: face.vertices().to_vec(),
            reason: format!("expected {size} vertices"),
        });
    }
    if let Some(&v) = face.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::InvalidFace {
            vertices: face.vertices().to_vec(),
            reason: format!("vertex {v} out of range for n = {n}"),
        });
    }
    Ok(())
}

/// On-disk form of a complex: `{"n": int, "d": int, "faces": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub n: usize,
    pub d: usize,
    pub faces: Vec<Vec<usize>>,
}

/// The link of a (d-2)-face τ: vertices outside τ, with `{u, v}` an edge
/// whenever `τ ∪ {u, v}` is a top face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub tau: Face,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl LinkGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Position of an original vertex label in [`vertices`](Self::vertices).
    pub fn local_index(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Edges in local indices.
    pub fn local_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| {
            (
                self.local_index(u).expect("edge endpoint is a link vertex"),
                self.local_index(v).expect("edge endpoint is a link vertex"),
            )
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices()];
        for (a, b) in self.local_edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> nalgebra::DMatrix<f64> {
        let m = self.num_vertices();
        let mut a = nalgebra::DMatrix::zeros(m, m);
        for (i, j) in self.local_edges() {
            a[(i, j)] = 1.0;
            a[(j, i)] = 1.0;
        }
        a
    }

    /// Graph Laplacian `D - A`.
    pub fn laplacian(&self) -> nalgebra::DMatrix<f64> {
        let mut l = -self.adjacency();
        for (i, deg) in self.degrees().into_iter().enumerate() {
            l[(i, i)] = deg as f64;
        }
        l
    }
}
