//! Exact combinatorics for affine Schubert varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`root_data`]: finite Cartan data, lattices, pairings and the Weyl
//!   dimension formula.
//! * [`affine_weyl`]: the extended affine Weyl group as affine maps of
//!   coweight space, with length, reduced words and Bruhat order.
//! * [`admissible`]: μ-admissible sets, parahoric double cosets and
//!   strict-chain inclusion–exclusion coefficients.
//! * [`demazure`]: the level-tagged affine weight lattice and Demazure
//!   operators.
//! * [`picard`]: degree vectors on Demazure varieties, ampleness tests,
//!   boundary intersection numbers and Fano perturbations.
//! * [`coherence`]: comparison of section dimensions on the admissible locus
//!   with the Borel–Weil side.
//!
//! All arithmetic is exact (`i64`, [`Q`] rationals, and big integers where a
//! product can grow).

pub mod admissible;
pub mod affine_weyl;
pub mod coherence;
pub mod demazure;
mod error;
pub mod parallel;
pub mod picard;
pub mod rational;
pub mod root_data;

pub use error::{Error, Result};
pub use rational::Q;
