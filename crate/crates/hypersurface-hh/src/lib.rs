//! Exact Hochschild cohomology of smooth projective hypersurfaces.
//!
//! The crate computes dimensions of Hochschild cohomology groups of a
//! hypersurface `X = V(F) ⊂ P^n` from finite-dimensional slices of Koszul-type
//! complexes over `S = Q[x_0..x_n]/(F)`, certifies smoothness, measures the
//! first-order tangent space, and assembles explicit deformation cocycles on
//! affine charts. All arithmetic is exact over `Q`.

pub mod cli;
pub mod cochain;
pub mod exactla;
pub mod hhproj;
pub mod koszul;
pub mod poly;
