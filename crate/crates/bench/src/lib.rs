//! Shared fixtures for the pipeline benchmarks.

use carpetcalc_core::ScrollSpec;

/// Every scroll with 1 <= b <= a <= a_max, in sweep order.
pub fn scroll_grid(a_max: i64) -> Vec<ScrollSpec> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=a {
            out.push(ScrollSpec::new(a, b).expect("grid bounds are valid"));
        }
    }
    out
}
