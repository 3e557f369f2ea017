//! Reduces the upper Laplacian to link graphs and checks every identity.

use nalgebra::DVector;
use simplicial_expansion::homology::{adjacency_form_bound, cycle_space_basis, garland_check, Cochain};
use simplicial_expansion::{Complex, Face};

fn main() -> simplicial_expansion::Result<()> {
    let y = Complex::generate(9, 2, 0.5, 7)?;
    let basis = cycle_space_basis(&y)?.basis;
    let coeffs = DVector::from_fn(basis.ncols(), |i, _| ((i * 37 % 11) as f64) - 5.0);
    let f = Cochain::from_values(&y, (&basis * coeffs).iter().copied().collect())?;
    let report = garland_check(&y, &f)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    println!("largest residual {:.2e}", report.max_residual());
    for v in 0..3 {
        let link = y.link_graph(&Face::new(vec![v])?)?;
        println!(
            "link of {v}: {} vertices, {} edges, max ⟨Af, f⟩ on 1⊥ = {:.4}",
            link.num_vertices(),
            link.num_edges(),
            adjacency_form_bound(&link)
        );
    }
    Ok(())
}
