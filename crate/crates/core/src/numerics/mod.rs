//! Quadrature and root-finding substrate.
//!
//! Integrals over the disk use the normalized area measure
//! `dA = dx dy / π`, so the disk itself has measure 1. All integrands of
//! interest concentrate mass at the boundary, which drives the design:
//! geometric annuli `[1-2⁻ᵏ, 1-2⁻ᵏ⁻¹]` with Gauss-Legendre radial nodes
//! per annulus and an angular resolution that doubles with the annulus
//! index.

mod gauss;
pub mod poly;
mod quadrature;
mod roots;

pub use quadrature::{
    CapRegion, DiskIntegral, QuadratureRule, RadialNode, DEFAULT_ABS_TOL, DEFAULT_REL_TOL,
};
pub use roots::{polynomial_roots, polynomial_roots_with_tol};

pub(crate) use gauss::gauss_legendre;
