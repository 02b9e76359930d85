//! Packing colorings of subcubic graphs.
//!
//! * [`graph`]: graphs, distances, cuts and named constructions.
//! * [`packing`]: packing colorings, an exact extension search and refutation.
//! * [`reducibility`]: the configuration file format and the reducibility checker.
//! * [`discharging`]: face tracing on rotation systems and charge bookkeeping.

#![allow(clippy::needless_range_loop)]

pub mod discharging;
pub mod error;
pub mod graph;
pub mod packing;
mod par;
pub mod reducibility;
mod text;

pub use error::{Error, ParseError, Result};
pub use par::{with_workers, workers};
