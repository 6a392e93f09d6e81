//! Simple functions on an abstract measure space, their distribution
//! functions and decreasing rearrangements.
//!
//! Only `|f|` is stored. A [`SimpleFunction`] is a finite list of atoms, each
//! with a positive mass and a nonnegative value. Both the distribution
//! function `d_f(a) = mu{|f| > a}` and the rearrangement
//! `f*(t) = inf{s > 0 : d_f(s) <= t}` of such a function are non-increasing,
//! right-continuous step functions, represented by [`StepProfile`].
//!
//! Masses are accumulated in one canonical order (values descending, ties by
//! atom id) everywhere, so `d_f` evaluated directly and the endpoints of `f*`
//! agree bit for bit.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ext::ExtReal;

/// Opaque identifier of an atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AtomId(pub u32);

/// One atom of a simple function.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Atom {
    /// Identifier, unique within the function.
    pub id: AtomId,
    /// Measure of the atom, `> 0`.
    pub mass: f64,
    /// Value of `|f|` on the atom, `>= 0`.
    pub value: f64,
}

/// A nonnegative simple function: finitely many atoms of finite positive mass.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleFunction {
    atoms: Vec<Atom>,
    // Indices into `atoms` of the positive-valued atoms, values descending.
    order: Vec<usize>,
}

/// Builds a simple function from `(mass, value)` pairs.
///
/// Zero-mass atoms are dropped. Atoms with value zero are kept (they matter
/// for [`SimpleFunction::pointwise_product`]) but do not contribute to `d_f`
/// or `f*`. The atom id is the position in `raw`.
pub fn make_simple_function(raw: &[(f64, f64)]) -> Result<SimpleFunction> {
    let mut atoms = Vec::with_capacity(raw.len());
    for (index, &(mass, value)) in raw.iter().enumerate() {
        if mass.is_nan() || mass < 0.0 {
            return Err(Error::NegativeMass { index, mass });
        }
        if value.is_nan() || value < 0.0 {
            return Err(Error::NegativeValue { index, value });
        }
        if !mass.is_finite() || !value.is_finite() {
            return Err(Error::NonFinite { index });
        }
        if mass > 0.0 {
            atoms.push(Atom { id: AtomId(index as u32), mass, value });
        }
    }
    SimpleFunction::from_atoms(atoms)
}

impl SimpleFunction {
    /// The zero function (no atoms).
    pub fn zero() -> Self {
        SimpleFunction { atoms: Vec::new(), order: Vec::new() }
    }

    /// Builds from explicit atoms. Ids must be distinct, masses positive and
    /// finite, values finite and nonnegative.
    pub fn from_atoms(atoms: Vec<Atom>) -> Result<Self> {
        for (index, a) in atoms.iter().enumerate() {
            if a.mass.is_nan() || a.mass <= 0.0 {
                return Err(Error::NegativeMass { index, mass: a.mass });
            }
            if a.value.is_nan() || a.value < 0.0 {
                return Err(Error::NegativeValue { index, value: a.value });
            }
            if !a.mass.is_finite() || !a.value.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        let mut ids: Vec<AtomId> = atoms.iter().map(|a| a.id).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DomainMismatch);
        }

        let mut order: Vec<usize> = (0..atoms.len()).filter(|&i| atoms[i].value > 0.0).collect();
        order.sort_by(|&i, &j| atoms[j].value.total_cmp(&atoms[i].value).then(atoms[i].id.cmp(&atoms[j].id)));
        Ok(SimpleFunction { atoms, order })
    }

    /// The atoms, in construction order.
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Total mass of all atoms (including zero-valued ones).
    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.mass).sum()
    }

    /// Mass of the support `{|f| > 0}`, accumulated in canonical order.
    pub fn support_mass(&self) -> f64 {
        self.order.iter().map(|&i| self.atoms[i].mass).sum()
    }

    /// `true` if `|f| = 0` almost everywhere.
    pub fn is_zero(&self) -> bool {
        self.order.is_empty()
    }

    /// Largest value (the essential supremum), zero for the zero function.
    pub fn max_value(&self) -> f64 {
        self.order.first().map_or(0.0, |&i| self.atoms[i].value)
    }

    /// Same atoms and masses with new values (one per atom, in atom order).
    pub fn with_values(&self, values: &[f64]) -> Result<SimpleFunction> {
        if values.len() != self.atoms.len() {
            return Err(Error::DomainMismatch);
        }
        let atoms = self.atoms.iter().zip(values).map(|(a, &value)| Atom { value, ..*a }).collect();
        SimpleFunction::from_atoms(atoms)
    }

    /// `c * f` for a finite `c > 0`.
    pub fn scaled(&self, c: f64) -> SimpleFunction {
        debug_assert!(c > 0.0 && c.is_finite());
        let atoms = self.atoms.iter().map(|a| Atom { value: a.value * c, ..*a }).collect();
        SimpleFunction::from_atoms(atoms).expect("scaling preserves validity")
    }

    /// `d_f(alpha) = mu{|f| > alpha}`; strict inequality, `alpha >= 0`.
    pub fn distribution(&self, alpha: f64) -> ExtReal {
        debug_assert!(alpha >= 0.0);
        let mut acc = 0.0;
        for &i in &self.order {
            let a = &self.atoms[i];
            if a.value <= alpha {
                break;
            }
            acc += a.mass;
        }
        ExtReal::from_f64_unchecked(acc)
    }

    /// `d_f` as a step profile in `alpha`, with breakpoints at the distinct
    /// positive atom values.
    pub fn distribution_profile(&self) -> StepProfile {
        let mut levels: Vec<f64> = self.order.iter().map(|&i| self.atoms[i].value).collect();
        levels.dedup();
        levels.reverse();
        let mut segments = Vec::with_capacity(levels.len());
        let mut left = 0.0;
        for &right in &levels {
            let d = self.distribution(left).to_f64();
            segments.push(Segment { value: d, end: right });
            left = right;
        }
        StepProfile { segments }
    }

    /// The decreasing rearrangement `f*` as a step profile in `t`.
    ///
    /// With distinct positive values `v_1 > v_2 > ...` and cumulative masses
    /// `T_k = mu{|f| >= v_k}`, `f* = v_k` on `[T_{k-1}, T_k)` and `0` from
    /// the last `T_k` on. Never infinite for a simple function.
    pub fn rearrangement(&self) -> StepProfile {
        let mut segments: Vec<Segment> = Vec::new();
        let mut acc = 0.0;
        for &i in &self.order {
            let a = &self.atoms[i];
            acc += a.mass;
            match segments.last_mut() {
                Some(last) if last.value == a.value => last.end = acc,
                _ => segments.push(Segment { value: a.value, end: acc }),
            }
        }
        StepProfile { segments }
    }

    /// Atomwise product `f * g`; both must have the same atom ids and masses.
    pub fn pointwise_product(&self, other: &SimpleFunction) -> Result<SimpleFunction> {
        if self.atoms.len() != other.atoms.len() {
            return Err(Error::DomainMismatch);
        }
        let atoms = self
            .atoms
            .iter()
            .zip(&other.atoms)
            .map(|(a, b)| {
                if a.id != b.id || a.mass != b.mass {
                    Err(Error::DomainMismatch)
                } else {
                    Ok(Atom { value: a.value * b.value, ..*a })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        SimpleFunction::from_atoms(atoms)
    }
}

/// One constant piece `[previous end, end)` of a step profile.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Segment {
    /// Value on the piece.
    pub value: f64,
    /// Right endpoint (exclusive).
    pub end: f64,
}

/// A non-increasing, right-continuous, piecewise-constant function on
/// `[0, inf)`: `segments[k].value` on `[segments[k-1].end, segments[k].end)`,
/// zero past the last endpoint.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StepProfile {
    segments: Vec<Segment>,
}

impl StepProfile {
    /// Validates strictly decreasing positive values and strictly
    /// increasing positive endpoints.
    pub fn from_segments(segments: Vec<Segment>) -> Result<Self> {
        let ok_each = segments.iter().all(|s| s.value > 0.0 && s.value.is_finite() && s.end > 0.0 && s.end.is_finite());
        let ok_order = segments.windows(2).all(|w| w[0].value > w[1].value && w[0].end < w[1].end);
        if ok_each && ok_order {
            Ok(StepProfile { segments })
        } else {
            Err(Error::MalformedProfile)
        }
    }

    /// The segments, left to right.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// `true` for the identically zero profile.
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// End of the support (the last endpoint), zero for the empty profile.
    pub fn support_end(&self) -> f64 {
        self.segments.last().map_or(0.0, |s| s.end)
    }

    /// Value at `t >= 0`; at a breakpoint this is the right-hand value.
    pub fn evaluate(&self, t: f64) -> f64 {
        debug_assert!(t >= 0.0);
        let k = self.segments.partition_point(|s| s.end <= t);
        self.segments.get(k).map_or(0.0, |s| s.value)
    }

    /// Lebesgue measure of `{t : P(t) > alpha}`, i.e. the distribution
    /// function of the profile itself.
    pub fn level_measure(&self, alpha: f64) -> f64 {
        let k = self.segments.partition_point(|s| s.value > alpha);
        if k == 0 {
            0.0
        } else {
            self.segments[k - 1].end
        }
    }

    /// The generalized inverse `t -> inf{s > 0 : P(s) <= t}`.
    ///
    /// For a strictly ordered profile this swaps the roles of values and
    /// endpoints and reverses the order; it maps `d_f` to `f*` and back.
    pub fn generalized_inverse(&self) -> StepProfile {
        let segments = self.segments.iter().rev().map(|s| Segment { value: s.end, end: s.value }).collect();
        StepProfile { segments }
    }

    /// All breakpoints, increasing.
    pub fn breakpoints(&self) -> impl Iterator<Item = f64> + '_ {
        self.segments.iter().map(|s| s.end)
    }
}
