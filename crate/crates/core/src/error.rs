use core::fmt;

/// Errors raised by constructors and by checks whose preconditions fail.
#[allow(missing_docs)]
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An atom was given a negative (or NaN) mass.
    NegativeMass { index: usize, mass: f64 },
    /// An atom or sequence term was given a negative (or NaN) value.
    NegativeValue { index: usize, value: f64 },
    /// A mass or value was infinite.
    NonFinite { index: usize },
    /// Two simple functions do not live on the same atoms.
    DomainMismatch,
    /// A Lorentz index component outside its admissible range.
    InvalidIndex { name: &'static str, value: f64 },
    /// Parameters violate a required ordering such as `p1 < p < p2`.
    ParameterOrder(&'static str),
    /// Step profile segments are not strictly ordered.
    MalformedProfile,
    /// An index grid with no points, or with non-increasing points.
    MalformedGrid,
    /// The operation needs a grid with a finite supremum.
    UnboundedGrid,
    /// The weak `L_{p1,inf}` quasi-norm vanishes, so the crossover point is undefined.
    ZeroWeakNorm,
    /// `(p, q)` lies outside the definition of the sequence space.
    OutOfDefinition { p: f64, q: f64 },
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeMass { index, mass } => {
                write!(f, "atom {index}: mass must be nonnegative, got {mass}")
            }
            Error::NegativeValue { index, value } => {
                write!(f, "entry {index}: value must be nonnegative, got {value}")
            }
            Error::NonFinite { index } => write!(f, "entry {index}: quantity must be finite"),
            Error::DomainMismatch => f.write_str("functions are not defined on the same atoms"),
            Error::InvalidIndex { name, value } => {
                write!(f, "index {name} = {value} is outside its admissible range")
            }
            Error::ParameterOrder(what) => write!(f, "parameter ordering violated: {what}"),
            Error::MalformedProfile => {
                f.write_str("step profile must have strictly decreasing values and increasing endpoints")
            }
            Error::MalformedGrid => f.write_str("index grid must be nonempty, positive and strictly increasing"),
            Error::UnboundedGrid => f.write_str("index grid must have a finite supremum"),
            Error::ZeroWeakNorm => f.write_str("weak quasi-norm at the lower index is zero"),
            Error::OutOfDefinition { p, q } => {
                write!(f, "sequence space l_{{{p},{q}}} is not defined")
            }
        }
    }
}

impl core::error::Error for Error {}
