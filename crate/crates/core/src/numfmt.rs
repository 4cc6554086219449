//! Deterministic decimal rendering of floats.

/// Values with magnitude below this are written as zero.
pub const FLUSH_TO_ZERO: f64 = 1e-14;

/// Rounds to 15 significant digits, flushing rounding noise to zero and
/// normalizing negative zero.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < FLUSH_TO_ZERO {
        return 0.0;
    }
    let y: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

/// Shortest decimal string of `round_sig(x)`.
pub fn format_sig(x: f64) -> String {
    format!("{}", round_sig(x))
}
