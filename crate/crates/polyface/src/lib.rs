//! Face census of order and chain polytopes of finite posets.
//!
//! For a poset `P` on `{0, .., n-1}` this crate enumerates the vertices,
//! edges, and two-dimensional faces of two lattice polytopes attached to
//! `P`:
//!
//! * the **order polytope** — points `x` in the unit cube with
//!   `x_p <= x_q` whenever `p < q`; its vertices are indicator vectors of
//!   filters;
//! * the **chain polytope** — nonnegative points whose sum along every
//!   maximal chain is at most one; its vertices are indicator vectors of
//!   antichains.
//!
//! The [`census`] module produces the counts and explicit combinatorial
//! descriptions of every face of dimension at most two, [`oracle`]
//! recomputes the same numbers from vertex coordinates with exact integer
//! arithmetic, [`bijection`] matches the square faces of the two polytopes
//! against each other, and [`verify`] sweeps all posets up to a size bound
//! checking that every advertised relation between the two face censuses
//! actually holds.

pub mod bijection;
pub mod census;
pub mod gen;
pub mod oracle;
pub mod poset;
pub mod report;
pub mod verify;
pub mod set;

pub use poset::{Poset, PosetError};
pub use set::ElementSet;
