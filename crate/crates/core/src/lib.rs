//! Combinatorial invariants of Brouwer mapping classes.
//!
//! The library computes, for a mapping class of the plane relative to finitely
//! many orbits of a fixed-point-free orientation-preserving homeomorphism:
//!
//! * its *diagram* (a cyclic word of signed orbit endpoints),
//! * the *walls* and the induced decomposition into stable areas,
//! * the determinancy classification of all diagrams for a given orbit count,
//! * a braid-word engine (linking numbers, Garside normal form, combing,
//!   half-twist factorizations, deflectors),
//! * the *tangle* invariant on the two-marked cylinder,
//! * and the total invariant couple (diagram with walls, tangle) that decides
//!   conjugacy relative to four orbits.

pub mod braid;
pub mod classify;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod face;
pub mod render;
pub mod tangle;
pub mod walls;

pub use diagram::{AdjacencyProfile, Diagram, Endpoint, Sign};
pub use error::Error;
pub use walls::{AreaKind, DiagramWithWalls, StableArea, Wall};
