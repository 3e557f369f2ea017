//! a(ε), the concentration window for δ and binomial tail scales.

use simplicial_expansion::asymptotics::{a_eps, a_eps_bisection, log_binomial_lower_tail, predict, DEFAULT_BAND};

fn main() -> simplicial_expansion::Result<()> {
    for eps in [0.1, 1.0, 2.0 / (std::f64::consts::E - 2.0), 10.0] {
        println!(
            "a({eps:.4}) = {:.12} (bisection {:.12})",
            a_eps(eps)?,
            a_eps_bisection(eps)?
        );
    }
    for n in [100, 1_000, 10_000] {
        let p = predict(n, 2, 1.0, DEFAULT_BAND)?;
        println!("n = {n:>5}: δ ≈ {:.2} ± {:.2}", p.center, p.band);
    }
    println!(
        "log P[Bin(500, 0.2) ≤ 50] = {:.4}",
        log_binomial_lower_tail(500, 0.2, 0.5)?
    );
    Ok(())
}
