//! Closed-form predictions: the Lambert W branches, the co-degree constant
//! `a(ε)`, the deviation exponent `H(c)`, binomial tails, Chernoff bounds
//! and the predicted concentration window for δ(Y).
//!
//! At `p = (1+ε) d log n / n` the minimum co-degree concentrates around
//! `(1+ε) a d log n` where `a ∈ (0, 1)` solves `(1+ε) H(a) = −1`, i.e.
//! `ε = (1+ε)(1 − log a) a`.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Principal branch `W₀`, `W ≥ −1`.
    Principal,
    /// Lower branch `W₋₁`, `W ≤ −1`.
    Lower,
}

const INV_E: f64 = 1.0 / E;

/// Solves `w e^w = x` on the requested branch by Halley iteration.
pub fn lambert_w(branch: Branch, x: f64) -> Result<f64> {
    if x.is_nan() || x < -INV_E * (1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::param(format!("Lambert W is undefined below -1/e, got {x}")));
    }
    if branch == Branch::Lower && x >= 0.0 {
        return Err(Error::param(format!("the lower branch needs x in [-1/e, 0), got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    // distance to the branch point; p is the series variable √(2(ex + 1))
    let q = (E * x + 1.0).max(0.0);
    if q == 0.0 {
        return Ok(-1.0);
    }
    let mut w = match branch {
        Branch::Principal if x < -0.25 => branch_series(q.sqrt() * 2f64.sqrt()),
        Branch::Principal if x.abs() <= 0.5 => x * (1.0 - x),
        Branch::Principal if x < 3.0 => x.ln_1p(),
        Branch::Principal => {
            let l = x.ln();
            l - l.ln()
        }
        Branch::Lower if x < -0.25 => branch_series(-(q.sqrt() * 2f64.sqrt())),
        Branch::Lower => {
            let l = (-x).ln();
            l - (-l).ln()
        }
    };
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        let step = f / denom;
        if !step.is_finite() {
            break;
        }
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(1.0) {
            break;
        }
    }
    Ok(w)
}

/// Series of W around the branch point: `−1 + p − p²/3 + 11p³/72 − 43p⁴/540`.
fn branch_series(p: f64) -> f64 {
    -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p.powi(3) - 43.0 / 540.0 * p.powi(4)
}

/// `a(ε) = exp(1 + W₋₁(−ε / (e(1+ε))))`.
pub fn a_eps(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let w = lambert_w(Branch::Lower, -eps / (E * (1.0 + eps)))?;
    Ok((1.0 + w).exp())
}

/// The root of `g(a) = (1+ε)(1 − log a) a − ε` on `(0, 1)` by bisection;
/// `g` increases from `−ε` to `1`.
pub fn a_eps_bisection(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let g = |a: f64| (1.0 + eps) * (1.0 - a.ln()) * a - eps;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `1 − √(2 / ((1+ε) d))`, the large-ε expansion of `a(ε)` as quoted for
/// dimension `d`. Note `a(ε)` itself does not depend on `d`.
pub fn a_eps_large(eps: f64, d: usize) -> f64 {
    1.0 - (2.0 / ((1.0 + eps) * d as f64)).sqrt()
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::param(format!("eps must be positive, got {eps}")));
    }
    Ok(())
}

/// `H(c) = c − c log c − 1`.
pub fn entropy_h(c: f64) -> Result<f64> {
    if !(c > 0.0) {
        return Err(Error::param(format!("H(c) needs c > 0, got {c}")));
    }
    Ok(c - c * c.ln() - 1.0)
}

fn check_binomial(n: u64, p: f64) -> Result<()> {
    if n < 1 {
        return Err(Error::param("binomial tails need N >= 1"));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::param(format!("binomial tails need p in (0, 1), got {p}")));
    }
    Ok(())
}

/// `log P[Bin(N, p) ≤ c N p]`, summed exactly in log space.
pub fn log_binomial_lower_tail(n: u64, p: f64, c: f64) -> Result<f64> {
    check_binomial(n, p)?;
    if !(c >= 0.0) {
        return Err(Error::param(format!("c must be non-negative, got {c}")));
    }
    let k = (c * n as f64 * p).floor();
    if k >= n as f64 {
        return Ok(0.0);
    }
    let k = k as u64;
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let mut log_choose = 0.0;
    let mut terms = Vec::with_capacity(k as usize + 1);
    for i in 0..=k {
        if i > 0 {
            log_choose += ((n - i + 1) as f64).ln() - (i as f64).ln();
        }
        terms.push(log_choose + i as f64 * lp + (n - i) as f64 * lq);
    }
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|t| (t - max).exp()).sum();
    Ok((max + sum.ln()).min(0.0))
}

/// `P[Bin(N, p) ≤ c N p]`.
pub fn binomial_lower_tail(n: u64, p: f64, c: f64) -> Result<f64> {
    Ok(log_binomial_lower_tail(n, p, c)?.exp())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail {
    /// `P[Bin ≥ (1+ε)Np] ≤ exp(−ε²Np/3)`.
    Upper,
    /// `P[Bin ≤ (1−ε)Np] ≤ exp(−ε²Np/2)`.
    Lower,
}

pub fn chernoff_bound(n: u64, p: f64, eps: f64, side: Tail) -> Result<f64> {
    check_eps(eps)?;
    let mean = n as f64 * p;
    let div = match side {
        Tail::Upper => 3.0,
        Tail::Lower => 2.0,
    };
    Ok((-eps * eps * mean / div).exp())
}

/// `p = (1+ε) d log n / n`.
pub fn edge_probability(n: usize, d: usize, eps: f64) -> f64 {
    (1.0 + eps) * d as f64 * (n as f64).ln() / n as f64
}

/// Default band constant; the theory only asserts that some constant works.
pub const DEFAULT_BAND: f64 = 3.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub n: usize,
    pub d: usize,
    pub eps: f64,
    pub a: f64,
    /// `(1+ε) a d log n`.
    pub center: f64,
    /// `C √(log n)`.
    pub band: f64,
    /// `(D − √(2D)) log n` with `D = (1+ε) d`, the large-ε comparison.
    pub large_eps: f64,
}

impl Prediction {
    pub fn contains(&self, value: f64) -> bool {
        (value - self.center).abs() < self.band
    }
}

pub fn predict(n: usize, d: usize, eps: f64, c: f64) -> Result<Prediction> {
    if d < 1 || n <= d {
        return Err(Error::param(format!("need n > d >= 1, got n = {n}, d = {d}")));
    }
    if !(c > 0.0) {
        return Err(Error::param(format!("band constant must be positive, got {c}")));
    }
    let a = a_eps(eps)?;
    let log_n = (n as f64).ln();
    let big_d = (1.0 + eps) * d as f64;
    Ok(Prediction {
        n,
        d,
        eps,
        a,
        center: (1.0 + eps) * a * d as f64 * log_n,
        band: c * log_n.sqrt(),
        large_eps: (big_d - (2.0 * big_d).sqrt()) * log_n,
    })
}
