//! Counting helpers shared by every module: binomial coefficients, the
//! colexicographic ranking of k-subsets, Stirling numbers of the second kind,
//! and the 64-bit mixer behind all seeded randomness.

/// Binomial coefficient `C(n, k)` saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Generalised binomial `x (x-1) ... (x-k+1) / k!` for real `x`.
pub fn real_binomial(x: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 0..k {
        acc *= (x - i as f64) / (i + 1) as f64;
    }
    acc
}

/// Table of `C(v, i)` for `v <= n` and `i <= k`, used for O(k) colex ranking.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    n: usize,
    k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (k + 1)];
        for v in 0..=n {
            for i in 0..=k {
                table[v * (k + 1) + i] = binomial(v, i);
            }
        }
        BinomialTable { n, k, table }
    }

    #[inline]
    pub fn get(&self, v: usize, i: usize) -> u64 {
        debug_assert!(v <= self.n && i <= self.k);
        self.table[v * (self.k + 1) + i]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Colex rank of a strictly increasing vertex list: `sum_i C(v_i, i + 1)`.
    #[inline]
    pub fn rank(&self, sorted: &[usize]) -> u64 {
        sorted.iter().enumerate().map(|(i, &v)| self.get(v, i + 1)).sum()
    }

    /// Colex rank of `sorted` with the entry at `skip` removed.
    #[inline]
    pub fn rank_without(&self, sorted: &[usize], skip: usize) -> u64 {
        let mut r = 0;
        let mut pos = 0;
        for (i, &v) in sorted.iter().enumerate() {
            if i == skip {
                continue;
            }
            pos += 1;
            r += self.get(v, pos);
        }
        r
    }

    /// Inverse of [`rank`](Self::rank) for subsets of size `k`.
    pub fn unrank(&self, mut rank: u64, k: usize) -> Vec<usize> {
        let mut out = vec![0usize; k];
        let mut hi = self.n;
        for i in (1..=k).rev() {
            // largest v < hi with C(v, i) <= rank
            let mut v = hi;
            while v > 0 && self.get(v - 1, i) > rank {
                v -= 1;
            }
            let v = v - 1;
            out[i - 1] = v;
            rank -= self.get(v, i);
            hi = v;
        }
        out
    }
}

/// Advances `c` to the next k-subset of `[0, n)` in colex order.
/// Returns `false` once the last subset has been passed.
pub fn next_colex(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in 0..k {
        let limit = if i + 1 < k { c[i + 1] } else { n };
        if c[i] + 1 < limit {
            c[i] += 1;
            for (j, slot) in c.iter_mut().enumerate().take(i) {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// Stirling number of the second kind `S(n, k)`, saturating at `u128::MAX`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = (j as u128).saturating_mul(row[j]).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

const MIX_GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const MIX_M1: u64 = 0xBF58_476D_1CE4_E5B9;
const MIX_M2: u64 = 0x94D0_49BB_1331_11EB;

/// SplitMix64 finaliser: `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
/// z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31`.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(MIX_M1);
    z ^= z >> 27;
    z = z.wrapping_mul(MIX_M2);
    z ^ (z >> 31)
}

/// Combines a seed with a counter into a new well-mixed 64-bit word.
#[inline]
pub fn mix_pair(seed: u64, counter: u64) -> u64 {
    mix64(seed ^ mix64(counter.wrapping_mul(MIX_GOLDEN).wrapping_add(MIX_GOLDEN)))
}

/// Uniform draw in `[0, 1)` from the counter-based stream `(seed, counter)`.
#[inline]
pub fn stream_uniform(seed: u64, counter: u64) -> f64 {
    (mix_pair(seed, counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(200, 3), 1_313_400);
        assert!((real_binomial(4.0, 3) - 4.0).abs() < 1e-15);
        assert_eq!(real_binomial(2.0, 3), 0.0);
    }

    #[test]
    fn colex_rank_matches_enumeration_order() {
        let t = BinomialTable::new(7, 4);
        for k in 0..=4 {
            let mut c: Vec<usize> = (0..k).collect();
            let mut expected = 0;
            loop {
                assert_eq!(t.rank(&c), expected);
                assert_eq!(t.unrank(expected, k), c);
                expected += 1;
                if !next_colex(&mut c, 7) {
                    break;
                }
            }
            assert_eq!(expected, binomial(7, k));
        }
    }

    #[test]
    fn rank_without_drops_one_vertex() {
        let t = BinomialTable::new(9, 4);
        let s = [1, 3, 4, 8];
        assert_eq!(t.rank_without(&s, 2), t.rank(&[1, 3, 8]));
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(7, 3), 301);
        assert_eq!(stirling2(8, 3), 966);
        assert_eq!(stirling2(4, 4), 1);
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling2(5, 0), 0);
    }

    #[test]
    fn uniform_stream_is_in_unit_interval() {
        for i in 0..1000 {
            let u = stream_uniform(42, i);
            assert!((0.0..1.0).contains(&u));
        }
        assert_ne!(stream_uniform(1, 0), stream_uniform(2, 0));
    }
}
