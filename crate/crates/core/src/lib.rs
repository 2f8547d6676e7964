//! Generalized Grover matrices and the `(a,b)`-zeta functions of graphs.
//!
//! The crate builds `Ũ(a, b)` for simple connected graphs, evaluates
//! `Z_{a,b}(G, u)^{-1} = det(I - uŨ)` and the generalized zeta
//! `ζ_{a,b}(G, u)` along several independent routes, and computes the
//! `N → ∞` limits on tori by periodic quadrature. Every route can be
//! checked against the others, and against brute-force cycle enumeration,
//! through [`verify`].
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | graph families, canonical arc indexing, JSON graph files |
//! | [`matrices`] | `A`, `D`, `P`, `Δ` and their spectra |
//! | [`grover`] | `Ũ(a, b)`, positive support, `A_d`, closed-form spectra |
//! | [`zeta`] | determinant, spectral and series evaluations |
//! | [`lattice`] | finite-torus values and limit integrals |
//! | [`oracle`] | brute-force cycle sums and cofactor determinants |
//! | [`verify`] | identity checks producing JSON-lines reports |
//! | [`cli`] | the `gzl` command-line surface |

pub mod cli;
pub mod error;
pub mod graph;
pub mod grover;
pub mod lattice;
pub mod linalg;
pub mod matrices;
pub mod oracle;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use graph::Graph;
pub use grover::CoinParams;
pub use num_complex::Complex64;
