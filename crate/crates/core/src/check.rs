use alloc::string::String;
use alloc::vec::Vec;

use crate::ext::ExtReal;

/// Acceptance rule for an inequality `lhs <= rhs`:
/// passes iff `lhs <= rhs * (1 + rel) + abs`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tolerance {
    /// Relative slack on the right-hand side.
    pub rel: f64,
    /// Absolute slack.
    pub abs: f64,
}

impl Tolerance {
    /// `1e-9` relative, `1e-12` absolute.
    pub const INEQUALITY: Tolerance = Tolerance { rel: 1e-9, abs: 1e-12 };

    /// Whether `lhs <= rhs` holds under this tolerance. An infinite `rhs`
    /// accepts everything.
    pub fn accepts(self, lhs: ExtReal, rhs: ExtReal) -> bool {
        if rhs.is_infinite() {
            return self.rel > -1.0;
        }
        let (l, r) = (lhs.to_f64(), rhs.to_f64());
        l <= r * (1.0 + self.rel) + self.abs
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::INEQUALITY
    }
}

/// `|a - b| <= rel * max(|a|, |b|)`, with two infinities counted as equal.
pub fn relative_eq(a: ExtReal, b: ExtReal, rel: f64) -> bool {
    if a.is_infinite() || b.is_infinite() {
        return a == b;
    }
    let (a, b) = (a.to_f64(), b.to_f64());
    (a - b).abs() <= rel * a.max(b)
}

/// One inequality `lhs <= constant-adjusted rhs` within a larger check.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheck {
    /// Short human-readable name of the inequality and where it was evaluated.
    pub label: String,
    /// Left-hand side.
    pub lhs: ExtReal,
    /// Right-hand side, constant already applied.
    pub rhs: ExtReal,
    /// The multiplicative constant contained in `rhs`.
    pub constant: f64,
    /// Outcome under the check's tolerance.
    pub passed: bool,
}

impl BoundCheck {
    /// Evaluates `lhs <= rhs` under `tol`.
    pub fn new(label: String, lhs: ExtReal, rhs: ExtReal, constant: f64, tol: Tolerance) -> Self {
        let passed = tol.accepts(lhs, rhs);
        BoundCheck { label, lhs, rhs, constant, passed }
    }

    /// An equality check `lhs == rhs` up to relative error `rel`.
    pub fn equality(label: String, lhs: ExtReal, rhs: ExtReal, rel: f64) -> Self {
        let passed = relative_eq(lhs, rhs, rel);
        BoundCheck { label, lhs, rhs, constant: 1.0, passed }
    }

    /// `lhs / rhs`, zero when both vanish, infinite when only `rhs` does.
    pub fn tightness(&self) -> f64 {
        let (l, r) = (self.lhs.to_f64(), self.rhs.to_f64());
        if l == 0.0 {
            0.0
        } else if r.is_infinite() {
            if l.is_infinite() {
                1.0
            } else {
                0.0
            }
        } else {
            l / r
        }
    }
}

/// Outcome of one inequality check on one input.
///
/// A check can consist of several inequalities (`parts`); the headline
/// `lhs`, `rhs` and `constant` are those of the failing part if any,
/// otherwise of the tightest part.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    /// Left-hand side of the headline inequality.
    pub lhs: ExtReal,
    /// Right-hand side of the headline inequality.
    pub rhs: ExtReal,
    /// Constant of the headline inequality.
    pub constant: f64,
    /// `rhs - lhs` (may be infinite).
    #[cfg_attr(feature = "serde", serde(with = "signed_inf"))]
    pub slack: f64,
    /// `true` iff every part passed.
    pub passed: bool,
    /// Parameters and the headline part, for humans.
    pub witness: String,
    /// Every inequality that was evaluated.
    pub parts: Vec<BoundCheck>,
}

impl CheckReport {
    /// Aggregates parts. `context` describes the parameters.
    pub fn from_parts(context: String, parts: Vec<BoundCheck>) -> Self {
        assert!(!parts.is_empty(), "a check needs at least one inequality");
        let passed = parts.iter().all(|b| b.passed);
        let head = parts
            .iter()
            .filter(|b| b.passed == passed)
            .max_by(|a, b| a.tightness().total_cmp(&b.tightness()))
            .expect("nonempty");
        let slack =
            if head.rhs.is_infinite() && head.lhs.is_infinite() { 0.0 } else { head.rhs.to_f64() - head.lhs.to_f64() };
        let witness = alloc::format!("{context}; {}: {} <= {}", head.label, head.lhs, head.rhs);
        CheckReport { lhs: head.lhs, rhs: head.rhs, constant: head.constant, slack, passed, witness, parts }
    }

    /// Largest `lhs / rhs` over all parts.
    pub fn tightness(&self) -> f64 {
        self.parts.iter().map(BoundCheck::tightness).fold(0.0, f64::max)
    }
}

// Serialises infinite slack as "inf" / "-inf" rather than JSON null.
#[cfg(feature = "serde")]
mod signed_inf {
    use alloc::string::String;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Number(f64),
        Marker(String),
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        match *x {
            f64::INFINITY => Repr::Marker("inf".into()).serialize(s),
            f64::NEG_INFINITY => Repr::Marker("-inf".into()).serialize(s),
            v => Repr::Number(v).serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(v),
            Repr::Marker(m) if m == "inf" => Ok(f64::INFINITY),
            Repr::Marker(m) if m == "-inf" => Ok(f64::NEG_INFINITY),
            Repr::Marker(_) => Err(serde::de::Error::custom("expected a number, \"inf\" or \"-inf\"")),
        }
    }
}
