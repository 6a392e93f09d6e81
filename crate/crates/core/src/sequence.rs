//! Lorentz sequence spaces `l_{p,q}`.
//!
//! A vector-valued zero sequence enters every formula only through the norms
//! of its terms, so sequences are stored as [`NormSequence`]s of nonnegative
//! reals with finite support. With `r_1 >= r_2 >= ...` the non-increasing
//! rearrangement,
//!
//! ```text
//! ||x||_{p,q}   = (sum_i i^{q/p - 1} r_i^q)^{1/q}    1 <= p <= inf, 1 <= q < inf
//! ||x||_{p,inf} = sup_i i^{1/p} r_i                   1 <= p < inf
//! ```

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{BoundCheck, CheckReport, Tolerance};
use crate::embeddings::IndexGrid;
use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::logsum::LogSum;
use crate::measure::{make_simple_function, SimpleFunction};
use crate::norms::NormValue;

/// Norms `||x_i||` of a finitely supported sequence; trailing zeros implicit.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NormSequence {
    terms: Vec<f64>,
}

impl NormSequence {
    /// Validates that every term is finite and `>= 0`.
    pub fn new(terms: Vec<f64>) -> Result<Self> {
        for (index, &value) in terms.iter().enumerate() {
            if value.is_nan() || value < 0.0 {
                return Err(Error::NegativeValue { index, value });
            }
            if !value.is_finite() {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(NormSequence { terms })
    }

    /// The terms in their given order.
    pub fn terms(&self) -> &[f64] {
        &self.terms
    }

    /// Unit-mass atoms carrying the terms as values.
    pub fn to_simple_function(&self) -> SimpleFunction {
        let raw: Vec<(f64, f64)> = self.terms.iter().map(|&v| (1.0, v)).collect();
        make_simple_function(&raw).expect("validated terms")
    }
}

/// Terms sorted non-increasingly with zeros dropped.
pub fn seq_rearrange(s: &NormSequence) -> NormSequence {
    let mut terms: Vec<f64> = s.terms.iter().copied().filter(|&v| v > 0.0).collect();
    terms.sort_by(|a, b| b.total_cmp(a));
    NormSequence { terms }
}

fn admissible(p: ExtReal, q: ExtReal) -> Result<()> {
    let ok = p >= ExtReal::ONE && q >= ExtReal::ONE && !(p.is_infinite() && q.is_infinite());
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfDefinition { p: p.to_f64(), q: q.to_f64() })
    }
}

/// `||s||_{p,q}` on the admissible range `1 <= p <= inf, 1 <= q < inf` or
/// `1 <= p < inf, q = inf`; `(inf, inf)` is outside the definition.
pub fn seq_lorentz_norm(s: &NormSequence, p: ExtReal, q: ExtReal) -> Result<NormValue> {
    admissible(p, q)?;
    let r = seq_rearrange(s);
    let inv_p = p.finite().map_or(0.0, |p| 1.0 / p);
    match q.finite() {
        Some(q) => {
            if r.terms.is_empty() {
                return Ok(ExtReal::ZERO);
            }
            let mut sum = LogSum::new();
            for (i, &v) in r.terms.iter().enumerate() {
                let weight = q * inv_p - 1.0;
                sum.push(weight * libm::log((i + 1) as f64) + q * libm::log(v), 1.0);
            }
            Ok(ExtReal::from_f64_unchecked(libm::exp(sum.ln() / q)))
        }
        None => {
            let sup =
                r.terms.iter().enumerate().map(|(i, &v)| libm::pow((i + 1) as f64, inv_p) * v).fold(0.0, f64::max);
            Ok(ExtReal::from_f64_unchecked(sup))
        }
    }
}

/// The classical `l_p` norm `(sum |x_i|^p)^{1/p}` for `p >= 1`, in the given order.
pub fn seq_lp_norm(s: &NormSequence, p: f64) -> Result<f64> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidIndex { name: "p", value: p });
    }
    let sum: f64 = s.terms.iter().map(|&v| libm::pow(v, p)).sum();
    Ok(libm::pow(sum, 1.0 / p))
}

fn snorm(s: &NormSequence, p: f64, q: ExtReal) -> NormValue {
    seq_lorentz_norm(s, ExtReal::from_f64_unchecked(p), q).expect("admissible indices")
}

fn ext(x: f64) -> ExtReal {
    ExtReal::from_f64_unchecked(x)
}

/// Growth in the fine index: for `1 <= p < inf`, `1 <= q < q1 <= inf`,
/// `||s||_{p,q1} <= (q/p)^{1/q - 1/q1} ||s||_{p,q}` when `p < q`,
/// `||s||_{p,q1} <= ||s||_{p,q}` when `p >= q`, and in all cases
/// `||s||_{p,q1} <= max{1, q/p} ||s||_{p,q}`. Both applicable bounds are checked.
pub fn check_prop22_i(s: &NormSequence, p: f64, q: f64, q1: ExtReal, tol: Tolerance) -> Result<CheckReport> {
    if !(p >= 1.0 && p.is_finite() && q >= 1.0 && q.is_finite() && ext(q) < q1) {
        return Err(Error::ParameterOrder("1 <= p < inf, 1 <= q < q1 <= inf"));
    }
    let lhs = snorm(s, p, q1);
    let base = snorm(s, p, ext(q));
    let inv_q1 = q1.finite().map_or(0.0, |v| 1.0 / v);
    let sharp = if p < q { libm::pow(q / p, 1.0 / q - inv_q1) } else { 1.0 };
    let blanket = (q / p).max(1.0);
    let parts = vec![
        BoundCheck::new(String::from("sharp constant"), lhs, base * sharp, sharp, tol),
        BoundCheck::new(String::from("max{1,q/p} constant"), lhs, base * blanket, blanket, tol),
    ];
    Ok(CheckReport::from_parts(format!("l_{{p,q}} in l_{{p,q1}}: p={p} q={q} q1={q1}"), parts))
}

/// Monotonicity in the integrability index: `||s||_{p1,q} <= ||s||_{p,q}` for
/// `1 <= p < p1 <= inf` with `q < inf`, or `1 <= p < p1 < inf` with `q = inf`.
pub fn check_prop22_ii(s: &NormSequence, p: f64, p1: ExtReal, q: ExtReal, tol: Tolerance) -> Result<CheckReport> {
    let valid = p >= 1.0 && p.is_finite() && ext(p) < p1 && q >= ExtReal::ONE && !(q.is_infinite() && p1.is_infinite());
    if !valid {
        return Err(Error::ParameterOrder("1 <= p < p1, with p1 < inf when q = inf"));
    }
    let lhs = seq_lorentz_norm(s, p1, q)?;
    let rhs = snorm(s, p, q);
    let part = BoundCheck::new(String::from("||s||_{p1,q} <= ||s||_{p,q}"), lhs, rhs, 1.0, tol);
    Ok(CheckReport::from_parts(format!("l_{{p,q}} in l_{{p1,q}}: p={p} p1={p1} q={q}"), vec![part]))
}

/// The intersection over `J x Q` (both in `[1, inf)`) is `l_{m_J,m_Q}`.
///
/// Checks the chain behind the identification:
/// * for each `p in J`: `max_q ||s||_{p,q} <= max{1, m_Q/p} ||s||_{p,m_Q}`;
/// * for each `(p, q)`: `||s||_{p,q} <= ||s||_{m_J,q}`;
/// * `max_q ||s||_{m_J,q} <= max{1, m_Q/m_J} ||s||_{m_J,m_Q}`;
/// * for each `q`: `||s||_{m_J,q} <= max_{p in J} ||s||_{p,q}`;
/// * the headline `max_{J x Q} ||s||_{p,q} <= max{1, m_Q/m_J} ||s||_{m_J,m_Q}`.
pub fn check_seq_iljq(s: &NormSequence, j_grid: &IndexGrid, q_grid: &IndexGrid, tol: Tolerance) -> Result<CheckReport> {
    let (mj, mq) = (j_grid.min(), q_grid.min());
    if mj < 1.0 || mq < 1.0 {
        return Err(Error::ParameterOrder("J, Q subsets of [1, inf)"));
    }
    let js = j_grid.points();
    let qs = q_grid.points();
    let table: Vec<Vec<NormValue>> = js.iter().map(|&p| qs.iter().map(|&q| snorm(s, p, ext(q))).collect()).collect();
    let base = snorm(s, mj, ext(mq));
    let c = (mq / mj).max(1.0);
    let mut parts = Vec::new();

    let overall = ExtReal::sup(table.iter().flatten().copied());
    parts.push(BoundCheck::new(
        String::from("sup_{J x Q} <= max{1,m_Q/m_J} ||s||_{m_J,m_Q}"),
        overall,
        base * c,
        c,
        tol,
    ));

    let at_mj: Vec<NormValue> = qs.iter().map(|&q| snorm(s, mj, ext(q))).collect();
    let sup_mj = ExtReal::sup(at_mj.iter().copied());
    parts.push(BoundCheck::new(
        String::from("sup_q ||s||_{m_J,q} <= max{1,m_Q/m_J} ||s||_{m_J,m_Q}"),
        sup_mj,
        base * c,
        c,
        tol,
    ));

    for (row, &p) in table.iter().zip(js) {
        let cp = (mq / p).max(1.0);
        let at_p_mq = snorm(s, p, ext(mq));
        let row_sup = ExtReal::sup(row.iter().copied());
        parts.push(BoundCheck::new(
            format!("sup_q ||s||_{{{p},q}} <= max{{1,m_Q/p}} ||s||_{{{p},m_Q}}"),
            row_sup,
            at_p_mq * cp,
            cp,
            tol,
        ));
        for ((&n, &q), &ref_mj) in row.iter().zip(qs).zip(&at_mj) {
            parts.push(BoundCheck::new(format!("||s||_{{{p},{q}}} <= ||s||_{{m_J,{q}}}"), n, ref_mj, 1.0, tol));
        }
    }
    for (k, &q) in qs.iter().enumerate() {
        let col_sup = ExtReal::sup(table.iter().map(|row| row[k]));
        parts.push(BoundCheck::new(format!("||s||_{{m_J,{q}}} <= sup_p ||s||_{{p,{q}}}"), at_mj[k], col_sup, 1.0, tol));
    }
    Ok(CheckReport::from_parts(format!("IL_{{J,Q}} = l_{{m_J,m_Q}}: m_J={mj} m_Q={mq}"), parts))
}
