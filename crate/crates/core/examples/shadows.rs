//! Upper shadows of edge sets and the Kruskal-Katona bound on filled triangles.

use simplicial_expansion::walk::{coface_profile, kruskal_katona_bound, tight_components};
use simplicial_expansion::{Complex, Face};

fn edges(list: &[[usize; 2]]) -> Vec<Face> {
    list.iter().map(|e| Face::new(e.to_vec()).unwrap()).collect()
}

fn main() -> simplicial_expansion::Result<()> {
    let k4 = edges(&[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    let y = Complex::complete(6, 2)?;
    let profile = coface_profile(6, 2, &k4, Some(&y))?;
    println!(
        "K₄ in [6]: f = {:?}, |∂⁺S| = {}, |B_S| = {}",
        profile.f,
        profile.shadow_size(),
        profile.b_count
    );
    for m in [3, 6, 10, 15] {
        println!(
            "m = {m:>2} edges span at most {:.3} triangles",
            kruskal_katona_bound(2, m)?
        );
    }
    let sparse = Complex::from_faces(6, 2, &[vec![0, 1, 2], vec![3, 4, 5]])?;
    let s = edges(&[[0, 1], [1, 2], [3, 4]]);
    println!("tight components: {:?}", tight_components(&sparse, &s)?);
    Ok(())
}
