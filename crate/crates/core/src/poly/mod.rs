//! Exact linear algebra for the polynomial lower bound on star weak
//! saturation numbers.

pub mod coloring;
pub mod dimension;
pub mod matrix;
pub mod polynomial;
pub mod primes;
pub mod witnesses;

pub use coloring::{hamming_coloring, lift_coloring, product_coloring, vertex_product_coloring, EdgeColoring};
pub use dimension::{dim_w, dim_w_detailed, dim_w_lower_bound_knd, dim_w_lower_bound_knd_with_cap, DimWReport};
pub use matrix::RationalMatrix;
pub use polynomial::PolynomialR;
pub use witnesses::{lmekn_witnesses, Witness, WitnessFamily};
