//! The JSON input document.
//!
//! ```json
//! {"kind": "step", "atoms": [{"mass": 1, "value": 2}, {"mass": 1, "value": 1}]}
//! {"kind": "sequence", "terms": [1, 3, 2]}
//! ```

use std::io::Read;
use std::path::Path;

use lorentz_core::{make_simple_function, Error, NormSequence, SimpleFunction};
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtomDoc {
    pub mass: f64,
    pub value: f64,
}

/// Wire form of an input. Validation happens in [`Document::into_input`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum Document {
    Step { atoms: Vec<AtomDoc> },
    Sequence { terms: Vec<f64> },
}

/// A validated input.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Step(SimpleFunction),
    Sequence(NormSequence),
}

impl Document {
    pub fn from_function(f: &SimpleFunction) -> Self {
        let atoms = f.atoms().iter().map(|a| AtomDoc { mass: a.mass, value: a.value }).collect();
        Document::Step { atoms }
    }

    pub fn from_sequence(s: &NormSequence) -> Self {
        Document::Sequence { terms: s.terms().to_vec() }
    }

    pub fn into_input(self, origin: &str) -> Result<Input, HarnessError> {
        let field_err =
            |field: String, message: String| HarnessError::Field { origin: origin.to_string(), field, message };
        match self {
            Document::Step { atoms } => {
                let raw: Vec<(f64, f64)> = atoms.iter().map(|a| (a.mass, a.value)).collect();
                make_simple_function(&raw).map(Input::Step).map_err(|e| match e {
                    Error::NegativeMass { index, mass } => {
                        field_err(format!("atoms[{index}].mass"), format!("must be nonnegative, got {mass}"))
                    }
                    Error::NegativeValue { index, value } => {
                        field_err(format!("atoms[{index}].value"), format!("must be nonnegative, got {value}"))
                    }
                    Error::NonFinite { index } => field_err(format!("atoms[{index}]"), "must be finite".into()),
                    other => HarnessError::Domain(other),
                })
            }
            Document::Sequence { terms } => NormSequence::new(terms).map(Input::Sequence).map_err(|e| match e {
                Error::NegativeValue { index, value } => {
                    field_err(format!("terms[{index}]"), format!("must be nonnegative, got {value}"))
                }
                Error::NonFinite { index } => field_err(format!("terms[{index}]"), "must be finite".into()),
                other => HarnessError::Domain(other),
            }),
        }
    }
}

/// Parses and validates a document. `origin` names the source in diagnostics.
pub fn parse_input<R: Read>(reader: R, origin: &str) -> Result<Input, HarnessError> {
    let doc: Document = serde_json::from_reader(reader).map_err(|e| HarnessError::Syntax {
        origin: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.into_input(origin)
}

/// [`parse_input`] on a file, or on stdin when `path` is `-`.
pub fn parse_input_path(path: &Path) -> Result<Input, HarnessError> {
    if path.as_os_str() == "-" {
        return parse_input(std::io::stdin().lock(), "<stdin>");
    }
    let file = std::fs::File::open(path).map_err(|e| HarnessError::io(path, e))?;
    parse_input(std::io::BufReader::new(file), &path.display().to_string())
}
