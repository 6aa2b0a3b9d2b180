//! Numerical toolkit for composition operators `C_φ(f) = f∘φ` acting on
//! weighted Hilbert spaces of analytic functions on the unit disk.
//!
//! The spaces are defined by a radial weight `ω`: a function `f = Σ aₙzⁿ`
//! belongs to the space when `|f(0)|² + ∫_D |f'|² ω dA < ∞`, which in
//! coefficients reads `Σ |aₙ|² ωₙ < ∞` with moments
//! `ωₙ = 2n² ∫₀¹ r^(2n-1) ω(r) dr`. The scale covers the Dirichlet space,
//! the Hardy space and all standard weighted Bergman spaces.
//!
//! What the crate computes:
//!
//! - [`weight`]: construction and certification of radial weights
//!   (monotonicity, boundary regularity, convexity class), moment
//!   sequences, the density-to-weight transform `ω_σ(r) = ∫_r¹ (t-r)σ(t)dt`
//!   and related structure functions.
//! - [`symbol`]: rational holomorphic self-maps of the disk (polynomials,
//!   finite Blaschke products, Möbius maps and their compositions) with
//!   exact preimage enumeration through polynomial root finding.
//! - [`nevanlinna`]: generalized counting functions
//!   `N_{φ,ω}(z) = Σ_{φ(a)=z} ω(a)` on polar grids, plus the structural
//!   inequalities they satisfy (sub-mean value, Littlewood bound, the
//!   Aleman integral identity).
//! - [`space`]: coefficient and integral norms, their equivalence, kernel
//!   test functions and composition of Taylor series.
//! - [`operator`]: truncated matrices of `C_φ` in the orthonormal basis
//!   `zⁿ/√ωₙ` and singular-value trends as an independent compactness
//!   witness.
//! - [`criteria`]: boundedness/compactness verdicts from the boundary
//!   behavior of `N_{φ,ω}/ω`, angular-derivative and weight-ratio tests,
//!   and Carleson-type cap integrals, each with supporting evidence.
//! - [`numerics`]: the quadrature and root-finding substrate (normalized
//!   area integrals with geometric boundary refinement, cap and radial
//!   integrals, an Aberth-Ehrlich root finder).
//!
//! All types are immutable after construction and every operation is pure,
//! so values can be shared freely across threads.

pub mod catalog;
pub mod criteria;
pub mod error;
pub mod nevanlinna;
pub mod numerics;
pub mod operator;
pub mod space;
pub mod symbol;
pub mod verify;
pub mod weight;

pub use crate::criteria::{CarlesonReport, Criterion, CriterionVerdict, Verdict};
pub use crate::error::{Error, Result};
pub use crate::nevanlinna::{CountingSample, RatioField};
pub use crate::numerics::{CapRegion, DiskIntegral, QuadratureRule};
pub use crate::operator::{CompositionMatrix, SingularSpectrum, TrendClass};
pub use crate::space::AnalyticFunction;
pub use crate::symbol::{PreimageSet, SymbolSpec, TaylorSeries};
pub use crate::weight::{AdmissibilityReport, MomentKind, MomentSequence, WeightClass, WeightProfile};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
