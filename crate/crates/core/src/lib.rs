//! Exact symbolic computation of Betti sequences for Cohen-Macaulay
//! tangent cones of monomial curves attached to 4-generated
//! pseudo-symmetric numerical semigroups.
//!
//! The toolkit has three independent routes to the same numbers and a
//! verification layer that plays them against each other:
//!
//! * a closed-form case dispatch on the defining parameters
//!   ([`komeda`]),
//! * explicit free resolutions checked for exactness with the
//!   Buchsbaum-Eisenbud criterion ([`resolution`]),
//! * a Koszul-homology Betti oracle over tangent cone ideals computed
//!   from scratch with Buchberger/Mora machinery ([`betti`],
//!   [`groebner`]).
//!
//! [`scan`] sweeps parameter ranges and cross-checks all routes.

pub mod betti;
pub mod groebner;
pub mod komeda;
pub mod poly;
pub mod resolution;
pub mod scan;
pub mod semigroup;
pub mod table1;

pub use komeda::{BettiSequence, CaseTag, KomedaParams, Subcase};
pub use poly::{Monomial, PolyMatrix, Polynomial};
pub use semigroup::NumericalSemigroup;
