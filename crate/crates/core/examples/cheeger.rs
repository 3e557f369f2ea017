//! Exact Cheeger constant against λ and the co-degree bound.

use simplicial_expansion::cheeger::{cheeger_exact, cheeger_from_min_codegree};
use simplicial_expansion::homology::spectral_gap;
use simplicial_expansion::Complex;

fn main() -> simplicial_expansion::Result<()> {
    for (p, seed) in [(0.3, 1), (0.6, 3), (0.9, 5)] {
        let y = Complex::generate(8, 2, p, seed)?;
        let exact = cheeger_exact(&y)?;
        let bound = cheeger_from_min_codegree(&y)?;
        let lambda = spectral_gap(&y)?.lambda.max(0.0);
        println!(
            "p = {p}: λ = {lambda:.4} ≤ h = {:.4} ≤ nδ/(n−d) = {:.4}, witness {:?}",
            exact.h,
            bound.h,
            exact.witness.blocks()
        );
    }
    Ok(())
}
