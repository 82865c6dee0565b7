//! Exact computer algebra for rational Cherednik algebras of small complex
//! reflection groups, with a numerical Knizhnik-Zamolodchikov monodromy
//! engine.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`]: exact rationals and cyclotomic numbers Q(zeta_N).
//! * [`linalg`]: dense matrices generic over a scalar [`scalar::Field`],
//!   with fraction-free exact rank and kernel computations.
//! * [`poly`]: multivariate polynomials with group actions and exact
//!   division by linear forms.
//! * [`group`]: the supported complex reflection groups (cyclic, dihedral,
//!   symmetric) with exact irreducible representations, hyperplane data and
//!   isotypic projectors.
//! * [`params`]: Cherednik coupling parameters, the group-algebra elements
//!   gamma_H and a_H, the central element z, and the c-function.
//! * [`algebra`]: PBW normal forms for the rational Cherednik algebra and
//!   the Euler element.
//! * [`dunkl`]: Dunkl operators and exact matrices of the action on graded
//!   layers of standard modules.
//! * [`cato`]: category O invariants: graded characters of standard and
//!   simple modules, blocks, decomposition matrices, singular vectors.
//! * [`numeric`]: floating-point scalar abstraction, complex arithmetic and
//!   small dense numerical linear algebra, including eigenvalues.
//! * [`kz`]: the KZ connection, parallel transport and braid monodromy.
//! * [`hecke`]: predicted Hecke parameters and the seminormal Specht-module
//!   oracle used to identify type A monodromy representations.
//! * [`config`]: serde-friendly descriptions of groups and parameters.

pub mod algebra;
pub mod cato;
pub mod config;
pub mod dunkl;
pub mod error;
pub mod group;
pub mod hecke;
pub mod kz;
pub mod linalg;
pub mod numeric;
pub mod params;
pub mod poly;
pub mod scalar;

pub use error::Error;

/// Exact scalar type used throughout the algebraic layer.
pub type ExactScalar = scalar::Cyc;
/// Exact dense matrix over [`ExactScalar`].
pub type ExactMatrix = linalg::Mat<ExactScalar>;
/// Complex floating scalar used by the numerical (monodromy) layer.
pub type ComplexFloat = numeric::Cplx<numeric::DD>;
