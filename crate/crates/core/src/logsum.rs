//! Sums of positive terms given in logarithmic form.
//!
//! Lorentz sums contain factors like `T^{q/p}` with `q/p` up to a few
//! hundred, which overflow `f64` long before the final `1/q` root brings the
//! result back into range. Terms are kept as `(ln magnitude, factor)` and
//! rescaled by the largest magnitude before summing.

use alloc::vec::Vec;

#[derive(Debug, Default)]
pub(crate) struct LogSum {
    terms: Vec<(f64, f64)>,
}

impl LogSum {
    pub(crate) fn new() -> Self {
        LogSum { terms: Vec::new() }
    }

    /// Adds `factor * exp(log_mag)`. `factor` must be finite and `>= 0`.
    pub(crate) fn push(&mut self, log_mag: f64, factor: f64) {
        debug_assert!(factor >= 0.0 && factor.is_finite());
        if factor > 0.0 && log_mag > f64::NEG_INFINITY {
            self.terms.push((log_mag, factor));
        }
    }

    /// `ln` of the sum, `-inf` for an empty sum.
    pub(crate) fn ln(&self) -> f64 {
        let top = self.terms.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
        if top == f64::NEG_INFINITY {
            return f64::NEG_INFINITY;
        }
        let scaled: f64 = self.terms.iter().map(|&(l, c)| c * libm::exp(l - top)).sum();
        top + libm::log(scaled)
    }
}

/// `1 - (lo/hi)^r` for `0 <= lo < hi`, accurate when `lo` is close to `hi`.
pub(crate) fn one_minus_ratio_pow(lo: f64, hi: f64, r: f64) -> f64 {
    if lo == 0.0 {
        1.0
    } else {
        -libm::expm1(r * libm::log(lo / hi))
    }
}
