//! Host-side companion to mlbp-core: instance files, random generation,
//! result records, and the bench harness behind the `mlbp` binary.

pub mod bench;
pub mod clock;
pub mod instance;
pub mod report;
