//! Shared inputs for the criterion benchmarks in `benches/`.

use kpell_core::sweep::{SweepSpec, Target};

/// The full exact sweep: every theorem and lemma over small parameters.
pub fn desk_sweep() -> SweepSpec {
    SweepSpec { targets: Target::all(), k: 1..=10, l: 0..=8, m: 0..=8, n: 0..=8, r: 0..=8 }
}

/// A cheaper sweep for per-iteration timing.
pub fn small_sweep() -> SweepSpec {
    SweepSpec { targets: Target::all(), k: 1..=3, l: 0..=4, m: 0..=4, n: 0..=4, r: 0..=4 }
}
