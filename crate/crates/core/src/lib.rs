//! Exact symbolic exterior calculus over coordinate charts.
//!
//! Everything is computed over arbitrary-precision rationals, so every
//! identity in the library is decided by structural equality of canonical
//! forms rather than by floating-point tolerances. The layers are:
//!
//! * [`poly`] — sparse multivariate polynomials with rational coefficients,
//!   the coefficient ring of every differential form;
//! * [`exterior`] — differential forms on named coordinate charts, with
//!   wedge product, exterior derivative, interior product, pullback and
//!   pointwise evaluation;
//! * [`octonion`] — the octonion algebra, its 2-fold cross product and the
//!   model 3-form `phi0` it induces on the imaginary units;
//! * [`cotangent`] — the tautological 1-form, the canonical symplectic form,
//!   chart transitions and conormal inclusions on cotangent charts;
//! * [`g2`] — the closed G2-structure `phi = Re(Omega) + omega ∧ dt` on the
//!   seven-coordinate chart of `T*R3 × R`, together with the verification
//!   reports for closedness, model equivalence, the induced pairing and the
//!   conormal restriction results.
//!
//! [`render`] provides the canonical text and JSON serializations and
//! [`sample`] the seeded random generators used by the property checks.

pub mod cotangent;
pub mod exterior;
pub mod g2;
pub mod linalg;
pub mod octonion;
pub mod poly;
pub mod rational;
pub mod render;
pub mod sample;

pub use exterior::{Chart, DifferentialForm, ExteriorError, PolyMap, VectorField};
pub use poly::{ComplexPolynomial, PolyError, Polynomial, VarList};
pub use rational::{rat, ratio, ComplexRational, Rational};
