//! Exact lattice computations for ordered configurations of (-2)-sphere classes.
//!
//! The library models the second cohomology of a 4-manifold as an integral
//! lattice, applies Picard-Lefschetz reflections to it, and measures the
//! winding number of the resulting orbit loop in a positive 2-plane. All
//! geometry is carried out in arbitrary-precision rational arithmetic, so
//! every reported invariant (signature, monodromy order, winding number) is
//! bit-exact.
//!
//! Module map:
//!
//! - [`lattice`]: rationals, rational vectors, integer Gram matrices, and
//!   exact signature computation.
//! - [`reflection`]: sphere classes, reflection matrices, composition, and
//!   monodromy orders.
//! - [`dynkin`]: the Gabrielov lattices T(p,q,r) of the 14 exceptional
//!   unimodal singularities, their positive frames, and the catalog table.
//! - [`spin`]: projection of reflection orbits to a frame plane, loop
//!   construction, and exact winding numbers.
//! - [`mutation`]: the braid-group action on sphere sequences.
//! - [`obstruction`]: arithmetic checkers for the isotopy obstruction and
//!   the Dirac index parity congruence.
//! - [`problem`]: the line-oriented problem-file format.
//! - [`svg`]: deterministic SVG rendering of loops.
//! - [`verify`]: the seeded self-verification checklist used by CI and the
//!   command-line `verify` subcommand.

pub mod dynkin;
pub mod error;
pub mod lattice;
pub mod mutation;
pub mod obstruction;
pub mod problem;
pub mod reflection;
pub mod spin;
pub mod svg;
pub mod verify;

pub use error::Error;
pub use lattice::{Lattice, RatVector, Rational, Signature};
pub use reflection::{LatticeMap, SphereClass, SphereSeq};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
