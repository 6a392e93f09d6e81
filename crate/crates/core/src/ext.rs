use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use crate::error::{Error, Result};

/// An extended nonnegative real: a finite value `>= 0` or `+inf`.
///
/// Stored as an `f64` that is never NaN and never negative; `f64::INFINITY`
/// is the infinity marker. Products `0 * inf` are excluded by the callers'
/// preconditions and trip a debug assertion.
#[derive(Clone, Copy, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "ext_serde::Repr", into = "ext_serde::Repr"))]
pub struct ExtReal(f64);

impl ExtReal {
    /// Zero.
    pub const ZERO: ExtReal = ExtReal(0.0);
    /// One.
    pub const ONE: ExtReal = ExtReal(1.0);
    /// The infinity marker.
    pub const INFINITY: ExtReal = ExtReal(f64::INFINITY);

    /// Wraps `x`, which must be `>= 0` (possibly `+inf`). `None` for negatives and NaN.
    pub fn new(x: f64) -> Option<Self> {
        (x >= 0.0).then_some(ExtReal(x))
    }

    pub(crate) fn from_f64_unchecked(x: f64) -> Self {
        debug_assert!(x >= 0.0, "ExtReal from {x}");
        ExtReal(x)
    }

    /// The finite value, or `None` for infinity.
    pub fn finite(self) -> Option<f64> {
        self.0.is_finite().then_some(self.0)
    }

    /// `true` unless this is the infinity marker.
    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// `true` for the infinity marker.
    pub fn is_infinite(self) -> bool {
        !self.0.is_finite()
    }

    /// `true` for zero.
    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }

    /// The value as an `f64`, with infinity mapped to `f64::INFINITY`.
    pub fn to_f64(self) -> f64 {
        self.0
    }

    /// `self ^ exponent` for a positive (possibly infinite) exponent.
    ///
    /// Infinite exponents follow the limits: `x^inf` is `0`, `1` or `inf`
    /// depending on whether `x < 1`, `x == 1` or `x > 1`.
    pub fn pow(self, exponent: f64) -> Self {
        debug_assert!(exponent > 0.0);
        ExtReal(libm::pow(self.0, exponent))
    }

    /// The larger of two values.
    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// The smaller of two values.
    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Supremum of an iterator; zero for an empty one.
    pub fn sup<I: IntoIterator<Item = ExtReal>>(values: I) -> Self {
        values.into_iter().fold(ExtReal::ZERO, ExtReal::max)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        ExtReal(self.0 + rhs.0)
    }
}

impl Mul<f64> for ExtReal {
    type Output = ExtReal;
    /// Multiplication by a positive finite scalar.
    fn mul(self, rhs: f64) -> ExtReal {
        debug_assert!(rhs > 0.0 && rhs.is_finite(), "scalar {rhs}");
        ExtReal(self.0 * rhs)
    }
}

impl Mul for ExtReal {
    type Output = ExtReal;
    fn mul(self, rhs: ExtReal) -> ExtReal {
        let out = self.0 * rhs.0;
        debug_assert!(!out.is_nan(), "0 * inf");
        ExtReal(out)
    }
}

impl From<ExtReal> for f64 {
    fn from(x: ExtReal) -> f64 {
        x.0
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            fmt::Display::fmt(&self.0, f)
        }
    }
}

impl core::str::FromStr for ExtReal {
    type Err = Error;

    /// Parses a nonnegative decimal or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(ExtReal::INFINITY);
        }
        let x: f64 = s.parse().map_err(|_| Error::InvalidIndex { name: "number", value: f64::NAN })?;
        if x.is_infinite() {
            return Ok(ExtReal::INFINITY);
        }
        ExtReal::new(x).ok_or(Error::InvalidIndex { name: "number", value: x })
    }
}

#[cfg(feature = "serde")]
mod ext_serde {
    use alloc::string::String;

    use super::ExtReal;

    /// Numbers for finite values and the string `"inf"` for infinity.
    #[derive(serde::Serialize, serde::Deserialize)]
    #[serde(untagged)]
    pub enum Repr {
        Finite(f64),
        Marker(String),
    }

    impl From<ExtReal> for Repr {
        fn from(x: ExtReal) -> Repr {
            match x.finite() {
                Some(v) => Repr::Finite(v),
                None => Repr::Marker(String::from("inf")),
            }
        }
    }

    impl TryFrom<Repr> for ExtReal {
        type Error = &'static str;
        fn try_from(r: Repr) -> Result<ExtReal, Self::Error> {
            match r {
                Repr::Finite(v) => ExtReal::new(v).ok_or("expected a nonnegative number"),
                Repr::Marker(s) if s == "inf" => Ok(ExtReal::INFINITY),
                Repr::Marker(_) => Err("expected a nonnegative number or \"inf\""),
            }
        }
    }
}

/// A Lorentz index pair `(p, q)` with both components in `(0, inf]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LorentzIndex {
    p: ExtReal,
    q: ExtReal,
}

impl LorentzIndex {
    /// Validates `p > 0` and `q > 0`.
    pub fn new(p: ExtReal, q: ExtReal) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidIndex { name: "p", value: 0.0 });
        }
        if q.is_zero() {
            return Err(Error::InvalidIndex { name: "q", value: 0.0 });
        }
        Ok(LorentzIndex { p, q })
    }

    /// Convenience constructor from raw floats; `f64::INFINITY` means `inf`.
    pub fn from_f64(p: f64, q: f64) -> Result<Self> {
        let p = ExtReal::new(p).ok_or(Error::InvalidIndex { name: "p", value: p })?;
        let q = ExtReal::new(q).ok_or(Error::InvalidIndex { name: "q", value: q })?;
        Self::new(p, q)
    }

    /// The integrability index.
    pub fn p(self) -> ExtReal {
        self.p
    }

    /// The fine index.
    pub fn q(self) -> ExtReal {
        self.q
    }
}
