//! Lorentz quasi-norms of simple functions.
//!
//! For `0 < p, q < inf`,
//!
//! ```text
//! ||f||_{p,q} = ( int_0^inf (t^{1/p} f*(t))^q dt/t )^{1/q}
//! ```
//!
//! and `||f||_{p,inf} = sup_t t^{1/p} f*(t)`. Because `f*` is a step function
//! both reduce to finite sums over its segments. Three routes are provided:
//! the closed form over `f*` ([`lorentz_norm`]), the closed form over `d_f`
//! ([`lorentz_norm_via_distribution`]) and a midpoint-rule quadrature that
//! never uses an antiderivative ([`quadrature_norm_oracle`]).

use crate::error::{Error, Result};
use crate::ext::{ExtReal, LorentzIndex};
use crate::logsum::{one_minus_ratio_pow, LogSum};
use crate::measure::SimpleFunction;

/// A (quasi-)norm value, possibly `+inf`.
pub type NormValue = ExtReal;

fn from_ln(ln: f64) -> NormValue {
    ExtReal::from_f64_unchecked(libm::exp(ln))
}

/// `||f||_{L_{p,q}}` for any `(p, q)` in `(0, inf]^2`.
///
/// * `p, q < inf`: `(sum_k v_k^q (p/q) (T_k^{q/p} - T_{k-1}^{q/p}))^{1/q}`.
/// * `p < inf, q = inf`: `max_k v_k T_k^{1/p}` (the supremum over each
///   segment is approached at its right endpoint).
/// * `p = inf, q < inf`: `+inf` for every nonzero `f`, so `L_{inf,q} = {0}`.
/// * `p = q = inf`: `f*(0)`, the essential supremum.
pub fn lorentz_norm(f: &SimpleFunction, idx: LorentzIndex) -> NormValue {
    if f.is_zero() {
        return ExtReal::ZERO;
    }
    let star = f.rearrangement();
    match (idx.p().finite(), idx.q().finite()) {
        (Some(p), Some(q)) => {
            let r = q / p;
            let mut sum = LogSum::new();
            let mut prev = 0.0;
            for seg in star.segments() {
                let log_mag = q * libm::log(seg.value) + r * libm::log(seg.end);
                sum.push(log_mag, one_minus_ratio_pow(prev, seg.end, r));
                prev = seg.end;
            }
            from_ln((sum.ln() + libm::log(p / q)) / q)
        }
        (Some(p), None) => {
            let sup = star.segments().iter().map(|s| s.value * libm::pow(s.end, 1.0 / p)).fold(0.0, f64::max);
            ExtReal::from_f64_unchecked(sup)
        }
        (None, Some(_)) => ExtReal::INFINITY,
        (None, None) => ExtReal::from_f64_unchecked(star.evaluate(0.0)),
    }
}

/// `||f||_{L_{p,s}} = (p int_0^inf d_f(a)^{s/p} a^{s-1} da)^{1/s}`, evaluated
/// in closed form over the segments of the distribution function.
pub fn lorentz_norm_via_distribution(f: &SimpleFunction, p: f64, s: f64) -> Result<NormValue> {
    check_finite_positive("p", p)?;
    check_finite_positive("s", s)?;
    let mut sum = LogSum::new();
    let mut prev = 0.0;
    for seg in f.distribution_profile().segments() {
        let log_mag = (s / p) * libm::log(seg.value) + s * libm::log(seg.end);
        sum.push(log_mag, one_minus_ratio_pow(prev, seg.end, s));
        prev = seg.end;
    }
    if f.is_zero() {
        return Ok(ExtReal::ZERO);
    }
    Ok(from_ln((sum.ln() + libm::log(p / s)) / s))
}

/// `||f||_p` with the convention of the Lebesgue scale: `(int |f|^p)^{1/p}`
/// for `p >= 1`, the bare integral `int |f|^p` for `0 < p < 1`, and the
/// largest value for `p = inf`.
pub fn lebesgue_norm(f: &SimpleFunction, p: ExtReal) -> Result<NormValue> {
    let Some(p) = p.finite() else {
        return Ok(ExtReal::from_f64_unchecked(f.max_value()));
    };
    check_finite_positive("p", p)?;
    let integral: f64 = f.atoms().iter().map(|a| a.mass * libm::pow(a.value, p)).sum();
    let out = if p >= 1.0 { libm::pow(integral, 1.0 / p) } else { integral };
    Ok(ExtReal::from_f64_unchecked(out))
}

/// `int_0^inf f*(t)^p dt` in closed form over the segments of `f*`.
pub fn rearrangement_power_integral(f: &SimpleFunction, p: f64) -> Result<f64> {
    check_finite_positive("p", p)?;
    let mut prev = 0.0;
    let mut acc = 0.0;
    for seg in f.rearrangement().segments() {
        acc += libm::pow(seg.value, p) * (seg.end - prev);
        prev = seg.end;
    }
    Ok(acc)
}

/// Midpoint-rule approximation of `||f||_{L_{p,q}}` for finite `p, q`.
///
/// Substituting `t = e^u` turns each segment of `f*` into
/// `v^q int e^{(q/p) u} du` over `[ln T_{k-1}, ln T_k]`, which is sampled at
/// the midpoints of `subdivisions` equal parts. The first segment, which
/// reaches down to `t = 0`, is truncated where the integrand has decayed by
/// `e^{-40}` relative to its value at `T_1`. Working in `ln t` keeps the
/// integrand smooth when `q/p` is small and `t^{q/p - 1}` is nearly singular
/// at the origin.
pub fn quadrature_norm_oracle(f: &SimpleFunction, idx: LorentzIndex, subdivisions: usize) -> Result<NormValue> {
    let (Some(p), Some(q)) = (idx.p().finite(), idx.q().finite()) else {
        return Err(Error::InvalidIndex { name: "p,q (quadrature needs finite indices)", value: f64::INFINITY });
    };
    if subdivisions == 0 {
        return Err(Error::ParameterOrder("subdivisions >= 1"));
    }
    if f.is_zero() {
        return Ok(ExtReal::ZERO);
    }
    let r = q / p;
    let star = f.rearrangement();
    let segs = star.segments();
    let scale = segs.iter().map(|s| q * libm::log(s.value) + r * libm::log(s.end)).fold(f64::NEG_INFINITY, f64::max);

    let mut total = 0.0;
    let mut prev = 0.0_f64;
    for seg in segs {
        let hi = libm::log(seg.end);
        let lo = if prev == 0.0 { hi - 40.0 / r } else { libm::log(prev) };
        let h = (hi - lo) / subdivisions as f64;
        let base = q * libm::log(seg.value) - scale;
        let mut piece = 0.0;
        for i in 0..subdivisions {
            let u = lo + (i as f64 + 0.5) * h;
            piece += libm::exp(base + r * u);
        }
        total += piece * h;
        prev = seg.end;
    }
    Ok(from_ln((scale + libm::log(total)) / q))
}

fn check_finite_positive(name: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidIndex { name, value: x })
    }
}
