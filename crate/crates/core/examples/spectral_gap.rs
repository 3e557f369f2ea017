//! Spectral gap of complete and random 2-complexes, dense and iterative.

use simplicial_expansion::homology::{spectral_gap, spectral_gap_with, EigenMethod};
use simplicial_expansion::Complex;

fn main() -> simplicial_expansion::Result<()> {
    for n in [5, 6, 8] {
        let r = spectral_gap(&Complex::complete(n, 2)?)?;
        println!("complete n = {n}: λ = {:.6}, dim Z = {}", r.lambda, r.cycle_dim);
    }
    let y = Complex::generate(20, 2, 0.4, 1)?;
    let dense = spectral_gap_with(&y, EigenMethod::Dense)?;
    let lanczos = spectral_gap_with(&y, EigenMethod::Iterative)?;
    println!(
        "Y(20, 0.4; 2): δ = {}, λ dense = {:.8}, λ Lanczos = {:.8}, harmonic dim = {}",
        y.min_codegree(),
        dense.lambda,
        lanczos.lambda,
        dense.harmonic_dim
    );
    Ok(())
}
