//! Expansion of Linial-Meshulam random d-complexes.
//!
//! A [`Complex`] is a d-dimensional complex on `[0, n)` with complete
//! (d-1)-skeleton, sampled with [`Complex::generate`] or built from faces.
//! On top of it the crate measures the minimum co-degree δ(Y), the spectral
//! gap λ(Y) of the upper Laplacian over the cycle space ([`homology`]), the
//! Cheeger constant h(Y) ([`cheeger`]) and the conductance of the face walk
//! ([`walk`]), and compares them with the predictions in [`asymptotics`].
//! The [`harness`] runs seeded experiments over many samples.
//!
//! ```
//! use simplicial_expansion::{cheeger::cheeger_exact, homology::spectral_gap, Complex};
//!
//! let y = Complex::generate(7, 2, 0.6, 3).unwrap();
//! let lambda = spectral_gap(&y).unwrap().lambda;
//! let h = cheeger_exact(&y).unwrap().h;
//! assert!(lambda <= h + 1e-8);
//! ```

pub mod asymptotics;
pub mod cheeger;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod harness;
pub mod homology;
pub mod sparse;
pub mod walk;

pub use complex::{Complex, Face, LinkGraph};
pub use error::{Error, Result};
