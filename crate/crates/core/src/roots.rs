//! Roots of unity with exact exponent reduction.

use std::f64::consts::TAU;

use num_complex::Complex64;

/// `exp(2*pi*i * num/den)`, with `num` reduced modulo `den` before the
/// angle is formed.
pub fn root_of_unity(num: i64, den: usize) -> Complex64 {
    assert!(den > 0, "root of unity with zero denominator");
    let den_i = den as i64;
    let mut t = num.rem_euclid(den_i);
    if t == 0 {
        return Complex64::new(1.0, 0.0);
    }
    // Exact values at quarter turns keep characters of small orders clean.
    if 4 * t == den_i {
        return Complex64::new(0.0, 1.0);
    }
    if 2 * t == den_i {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * t == 3 * den_i {
        return Complex64::new(0.0, -1.0);
    }
    // Evaluate on the symmetric range (-1/2, 1/2] for a smaller angle.
    if 2 * t > den_i {
        t -= den_i;
    }
    let angle = TAU * (t as f64) / (den as f64);
    Complex64::new(angle.cos(), angle.sin())
}
