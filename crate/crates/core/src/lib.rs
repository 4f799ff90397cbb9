//! Discrete Fréchet distance, gap and ratio between point sequences.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is pure
//! computation over an all-pairs [`DistanceMatrix`]; file formats, curve
//! generation and the command line live in the `frechet-gap` crate.
//!
//! Three reachability notions are supported, selected by [`Variant`]:
//!
//! * [`Variant::Strong`]: both frogs move forward, possibly together.
//! * [`Variant::Shortcut`]: the A-frog may skip points; every B point is matched.
//! * [`Variant::Weak`]: the frogs may also step backwards (no simultaneous jumps).
//!
//! The gap (`t - s`) and ratio (`t / s`) of the best feasible distance range
//! are computed by [`sweep::plain_range_search`] for the strong variant and by
//! the recursive [`salg::search_smallest_range`] over contractible deciders
//! ([`shortcut_graph::ShortcutGraph`], [`weak_maze::WeakMaze`]) for the other two.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod curves;
pub mod decisions;
mod error;
#[cfg(test)]
mod fixtures;
pub mod ladder;
pub mod oracle;
pub mod ranges;
pub mod salg;
pub mod shortcut_graph;
pub mod sweep;
pub mod weak_maze;

pub use curves::{Curve, DistanceMatrix};
pub use decisions::{Decision, Position, Walk};
pub use error::{Error, Result};
pub use ladder::DistanceLadder;
pub use ranges::{DistanceRange, MonotoneScore, RangeScore};
pub use salg::{RangeMatrixView, SearchOutcome};

/// Which reachability notion a decision or search refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Strong,
    Shortcut,
    Weak,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Strong, Variant::Shortcut, Variant::Weak];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Strong => "plain",
            Variant::Shortcut => "shortcut",
            Variant::Weak => "weak",
        }
    }
}
