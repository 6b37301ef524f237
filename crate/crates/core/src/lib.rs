//! Finite posets, integer interval orders and interval rank functions.
//!
//! The crate is organised bottom-up:
//!
//! * [`poset`] holds the dense [`Poset`] type and its structural queries
//!   (covers, heights, width, chains, gradedness, isomorphism).
//! * [`interval`] defines integer intervals, the strong/weak/subset interval
//!   orders and conjugacy tests; [`conjugate`] searches for conjugates of the
//!   strong order.
//! * [`rank`] computes the standard and conjugate interval ranks, the
//!   interval rank poset and the iteration of the rank operator down to a
//!   chain.
//! * [`generate`] enumerates posets up to isomorphism and samples random ones.
//! * [`experiments`] batches iteration statistics and least-squares fits.

pub mod conjugate;
pub mod error;
pub mod experiments;
pub mod generate;
pub mod interval;
pub mod poset;
pub mod rank;

pub use error::{Error, Result};
pub use interval::{IntInterval, IntervalOrder, OrderRelationTable};
pub use poset::{CanonicalForm, CoverRelation, Poset, SubsetView};
pub use rank::{IterationTrace, RankAssignment, RankClass, RankPoset};
