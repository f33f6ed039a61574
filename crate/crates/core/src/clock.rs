//! Wall-clock abstraction for time-limited searches.
//!
//! This crate cannot read a clock (`no_std`), so solvers poll a
//! [`Stopwatch`] handed in by the caller. A std host wraps
//! `std::time::Instant`; tests use a fake that advances on demand.

use core::time::Duration;

pub trait Stopwatch {
    /// Time elapsed since the watch was started.
    fn elapsed(&self) -> Duration;
}

/// Stopwatch that never advances. Time limits never fire with it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NullStopwatch;

impl Stopwatch for NullStopwatch {
    fn elapsed(&self) -> Duration {
        Duration::ZERO
    }
}

impl<S: Stopwatch + ?Sized> Stopwatch for &S {
    fn elapsed(&self) -> Duration {
        (**self).elapsed()
    }
}
