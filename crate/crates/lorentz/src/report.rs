//! Text, JSON and CSV output. Infinity is written `inf` everywhere.

use std::io::{self, Write};

use lorentz_core::ExtReal;
use serde::{Deserialize, Serialize};

use crate::suite::RunReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One entry of a norm table.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormRow {
    pub p: ExtReal,
    pub q: ExtReal,
    pub norm: ExtReal,
}

/// Writes suite reports. Text output is one line per suite plus detail for
/// each failure, and omits wall time so that it is reproducible byte for byte.
pub fn emit_report<W: Write>(reports: &[RunReport], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in reports {
                if r.passed() {
                    writeln!(out, "OK   {}  trials={}  max_tightness={}", r.suite_name, r.trials_run, r.max_tightness)?;
                    continue;
                }
                writeln!(
                    out,
                    "FAIL {}  trials={}  failures={}  max_tightness={}",
                    r.suite_name,
                    r.trials_run,
                    r.failures.len(),
                    r.max_tightness
                )?;
                for f in &r.failures {
                    match (&f.report, &f.error) {
                        (Some(rep), _) => writeln!(out, "  offset {}: {}", f.offset, rep.witness)?,
                        (None, Some(e)) => writeln!(out, "  offset {}: error: {e}", f.offset)?,
                        (None, None) => writeln!(out, "  offset {}", f.offset)?,
                    }
                    writeln!(out, "    input: {}", f.input)?;
                    writeln!(
                        out,
                        "    replay: lorentz check --suite {} --seed {} --offset {} --trials 1",
                        r.suite_name, r.seed, f.offset
                    )?;
                }
            }
        }
        Format::Json => {
            if let [single] = reports {
                serde_json::to_writer_pretty(&mut *out, single)?;
            } else {
                serde_json::to_writer_pretty(&mut *out, reports)?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "suite,trials,failures,max_tightness,wall_time")?;
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.suite_name,
                    r.trials_run,
                    r.failures.len(),
                    r.max_tightness,
                    r.wall_time
                )?;
            }
        }
    }
    Ok(())
}

/// Writes a norm table; CSV has the header `p,q,norm`.
pub fn emit_norm_table<W: Write>(rows: &[NormRow], format: Format, out: &mut W) -> io::Result<()> {
    match format {
        Format::Text => {
            for r in rows {
                writeln!(out, "p={} q={} norm={}", r.p, r.q, r.norm)?;
            }
        }
        Format::Json => {
            if let [single] = rows {
                serde_json::to_writer_pretty(&mut *out, single)?;
            } else {
                serde_json::to_writer_pretty(&mut *out, rows)?;
            }
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "p,q,norm")?;
            for r in rows {
                writeln!(out, "{},{},{}", r.p, r.q, r.norm)?;
            }
        }
    }
    Ok(())
}
