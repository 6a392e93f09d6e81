//! Exact Lorentz quasi-norms for nonnegative simple functions and finitely
//! supported sequences.
//!
//! A simple function is a finite list of weighted atoms on an abstract measure
//! space. Its distribution function and decreasing rearrangement are step
//! profiles, so every `L_{p,q}` quasi-norm reduces to a short closed-form sum.
//! On top of the norms, [`embeddings`] and [`sequence`] evaluate the explicit
//! constants of the classical inclusions between Lorentz spaces (and their
//! intersections over index sets) and check each inequality on concrete
//! inputs, returning a [`CheckReport`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod check;
mod error;
mod ext;
mod logsum;

pub mod embeddings;
pub mod measure;
pub mod norms;
pub mod sequence;

pub use check::{relative_eq, BoundCheck, CheckReport, Tolerance};
pub use error::{Error, Result};
pub use ext::{ExtReal, LorentzIndex};
pub use measure::{make_simple_function, Atom, AtomId, Segment, SimpleFunction, StepProfile};
pub use norms::NormValue;
pub use sequence::NormSequence;
