//! Exact rational algebra of double forms on an oriented Euclidean space.
//!
//! The crate is organised bottom-up:
//!
//! * [`index`] holds [`MultiIndex`], the bitmask basis label for exterior powers.
//! * [`exterior`] is the single-graded exterior algebra ([`Form`]): wedge,
//!   interior product, inner product and Hodge star.
//! * [`double`] is the bigraded algebra of double forms ([`DoubleForm`]) with the
//!   exterior and composition products, the four basic maps (multiplication by
//!   the metric, contraction, first Bianchi sum and its adjoint), `Alt`, the
//!   double Hodge star and the volume double form.
//! * [`curvature`] validates algebraic curvature tensors and computes the
//!   Ricci/Weyl decomposition, Gauss-Bonnet curvatures and the classification
//!   predicates. [`models`] builds the standard fixtures.
//! * [`pontrjagin`] computes Pontrjagin forms and scalars through several
//!   independent routes, tracking powers of π exactly with [`PiScalar`].
//! * [`identities`] packages every algebraic identity as a runnable, seeded check.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and π is
//! never evaluated.
//!
//! ```
//! use dforms::{DoubleForm, Rational};
//!
//! let g = DoubleForm::metric(4);
//! // g^2 = 2 * sum_{i<j} e_ij ⊗ e_ij, so its contraction is 2(n-1) g.
//! let g2 = &g * &g;
//! assert_eq!(g2.contract(), g.scale(&Rational::from_integer(6.into())));
//! ```

pub mod curvature;
pub mod double;
mod error;
pub mod exterior;
pub mod identities;
pub mod index;
pub mod linalg;
pub mod models;
pub mod pontrjagin;
pub mod random;
pub mod rational;

pub use curvature::{CurvatureTensor, WeylDecomposition};
pub use double::{Action, DoubleForm};
pub use error::{Error, Result};
pub use exterior::{Form, Orientation};
pub use index::MultiIndex;
pub use models::ModelSpec;
pub use pontrjagin::{PiForm, PiScalar};
pub use rational::Rational;
