use core::time::Duration;
use std::time::Instant;

use mlbp_core::Stopwatch;

/// Stopwatch backed by the system monotonic clock.
pub struct WallClock(Instant);

impl WallClock {
    pub fn start() -> Self {
        WallClock(Instant::now())
    }
}

impl Stopwatch for WallClock {
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}
