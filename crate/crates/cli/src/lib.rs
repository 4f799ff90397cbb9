//! File formats, curve generation, dispatch and benchmarking around
//! `frechet-gap-core`.

pub mod bench;
pub mod compute;
pub mod error;
pub mod generate;
pub mod ingest;
