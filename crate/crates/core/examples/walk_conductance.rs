//! The lazy face walk: mixing, exact conductance and the sampled estimate.

use simplicial_expansion::asymptotics::edge_probability;
use simplicial_expansion::walk::{conductance_estimate, conductance_exact, simulate, transition_kernel};
use simplicial_expansion::{Complex, Face};

fn main() -> simplicial_expansion::Result<()> {
    let small = Complex::from_faces(5, 2, &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 3, 4], vec![2, 3, 4]])?;
    let kernel = transition_kernel(&small, 0.3)?;
    println!("row-sum error {:.1e}", kernel.row_sum_error());
    let exact = conductance_exact(&small)?;
    println!("exact Φ = {:.4}, attained by {:?}", exact.phi, exact.argmin);

    let start = Face::new(vec![0, 1])?;
    let trace = simulate(&small, 0.3, &start, 100_000, 1, &[100, 1_000, 10_000])?;
    for c in &trace.checkpoints {
        println!("after {:>6} steps TV to π = {:.4}", c.step, c.tv);
    }

    let y = Complex::generate(40, 2, edge_probability(40, 2, 1.0), 8)?;
    let est = conductance_estimate(&y, 200, 8)?;
    println!(
        "Y(40, ε = 1; 2): Φ̂ = {:.4} from {} sets, min exit ratio {:.4}",
        est.phi,
        est.samples,
        est.min_ratio.unwrap_or(f64::NAN)
    );
    Ok(())
}
