//! Fractional Repetition (FR) codes for distributed storage, constructed from
//! finite binary sequences.
//!
//! A pair of binary sequences drives a circular placement of packet replicas
//! on storage nodes: the *packet selection sequence* `y` picks which packet to
//! drop next (packet index congruent to the position of each 1, mod θ) and the
//! *packet dropping sequence* `x` picks the node it lands on (node index
//! congruent to the position of the matching 1, mod n). On top of that
//! construction the crate provides:
//!
//! - verification of the *universally good* property (no two nodes share more
//!   than one distinct packet),
//! - exact file-size guarantees `M(k)` and the MBR / generalized capacity
//!   bounds,
//! - code duality (incidence-matrix transpose; sequence swap for constructed
//!   codes),
//! - incremental generation of sequence pairs whose code is universally good,
//! - exact repair planning (minimum helper set via set cover),
//! - brute-force oracles cross-checking every closed-form path.

pub mod flower;
pub mod frcode;
pub mod generator;
pub mod oracle;
pub mod repair;
pub mod sequence;

pub use flower::{FlowerSpec, PlacementEvent, PlacementTrace};
pub use frcode::{CapacityProfile, FrCode, Goodness, Parameters};
pub use generator::{Generated, Strategy};
pub use repair::RepairPlan;
pub use sequence::BitSeq;
