//! Exact-arithmetic computational convexity for three-part Tverberg
//! partitions.
//!
//! Every geometric question (hull membership, hull intersection, distances
//! between hulls) is answered by an exact rational LP whose certificate is
//! re-checked by substitution. On top of that kernel sit certified searches
//! for Tverberg 3-partitions and van Kampen–Flores triples, and a
//! reduction pipeline that lifts `6k + 1` points from `Q^(3k-1)` into
//! `Q^(3k)`, erects four mast points over a hull vertex, finds a
//! van Kampen–Flores triple there, runs a last-coordinate descent and
//! projects the result back down to a verified Tverberg partition.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature scans
//! candidate lists with rayon while keeping results identical to the
//! sequential scan.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod convexity;
pub mod enumerate;
pub mod error;
pub mod instance;
pub mod linalg;
pub mod lp;
pub mod point;
pub mod rat;
pub mod reduction;
pub mod rng;
mod scan;
pub mod tverberg;
pub mod vkf;

pub use convexity::{CandidateTriple, IntersectionCertificate};
pub use error::{Error, Result};
pub use point::{PointConfig, RatVector};
pub use rat::Rat;
pub use tverberg::TverbergWitness;
pub use vkf::VkfWitness;
