//! Samples Y(n, p; 2) at p = 2·2·log n / n and prints co-degree statistics.

use simplicial_expansion::asymptotics::edge_probability;
use simplicial_expansion::Complex;

fn main() -> simplicial_expansion::Result<()> {
    let n = 60;
    let p = edge_probability(n, 2, 1.0);
    let y = Complex::generate(n, 2, p, 42)?;
    let degrees = y.codegrees();
    let mean = degrees.iter().sum::<usize>() as f64 / degrees.len() as f64;
    println!(
        "Y({n}, {p:.4}; 2): {} triangles over {} edges",
        y.num_top_faces(),
        y.num_ridges()
    );
    println!(
        "mean co-degree {mean:.2}, minimum {} at {:?}",
        y.min_codegree(),
        y.min_codegree_face().vertices()
    );
    let again = Complex::generate(n, 2, p, 42)?;
    println!("same seed reproduces the complex: {}", again == y);
    Ok(())
}
