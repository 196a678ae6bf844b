//! Exact computational projective geometry for Pascal-type theorems.
//!
//! Everything is computed over the rationals with no floating point:
//!
//! * [`matrix`]: fraction-free determinants, rank and kernels;
//! * [`poly`]: sparse multivariate polynomials and symbolic determinants;
//! * [`projective`]: points, lines, hyperplanes, projections and frames;
//! * [`pascal`]: the conic determinant and the hexagon's derived points;
//! * [`rnc`]: `d+4` points on a rational normal curve in `P^d`;
//! * [`quadric3`]: quadric surfaces through points, lines and curves;
//! * [`rsb`]: five lines in `P^4` on a quadric;
//! * [`verdict`] and [`json`]: reporting and exact JSON I/O.

pub mod error;
pub mod identity;
pub mod json;
pub mod matrix;
pub mod pascal;
pub mod poly;
pub mod projective;
pub mod quadric3;
pub mod rng;
pub mod rnc;
pub mod rsb;
pub mod scalar;
pub mod verdict;

pub use error::{Error, Result};
pub use identity::{IdentityProof, ProofMode, ProofStats};
pub use matrix::Mat;
pub use poly::{poly_det, MPoly, PolyMat};
pub use projective::{Hyperplane, PLine, PPoint};
pub use rng::Lcg64;
pub use scalar::Scalar;
pub use verdict::{Verdict, Witness};
