//! Embedding constants between Lorentz spaces and checks of the
//! corresponding inequalities.
//!
//! Index sets `J` (for `p`) and `Q` (for `q`) are finite [`IndexGrid`]s whose
//! first point is the infimum. Suprema of norms over an index set are taken
//! as maxima over the grid. Every `check_*` function evaluates one or more
//! inequalities `lhs <= constant * rhs` and returns a [`CheckReport`]. The
//! inequalities are theorems, with one known exception: the explicit
//! interpolation constant of [`check_interpolation`] is too small for `s < 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{BoundCheck, CheckReport, Tolerance};
use crate::error::{Error, Result};
use crate::ext::{ExtReal, LorentzIndex};
use crate::measure::SimpleFunction;
use crate::norms::{lebesgue_norm, lorentz_norm, NormValue};

/// A finite stand-in for an index set: strictly increasing positive points,
/// with infimum `points[0]` and a supremum that is either the last point or
/// `+inf`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IndexGrid {
    points: Vec<f64>,
    sup: ExtReal,
}

impl IndexGrid {
    /// A grid whose supremum is its last point.
    pub fn new(points: Vec<f64>) -> Result<Self> {
        let valid = !points.is_empty()
            && points.iter().all(|&x| x > 0.0 && x.is_finite())
            && points.windows(2).all(|w| w[0] < w[1]);
        if !valid {
            return Err(Error::MalformedGrid);
        }
        let sup = ExtReal::from_f64_unchecked(*points.last().expect("nonempty"));
        Ok(IndexGrid { points, sup })
    }

    /// A grid modelling an index set that is unbounded above.
    pub fn unbounded(points: Vec<f64>) -> Result<Self> {
        let mut g = Self::new(points)?;
        g.sup = ExtReal::INFINITY;
        Ok(g)
    }

    /// The grid points, increasing.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Infimum `m`.
    pub fn min(&self) -> f64 {
        self.points[0]
    }

    /// Supremum `M` (possibly infinite).
    pub fn sup(&self) -> ExtReal {
        self.sup
    }

    fn finite_sup(&self) -> Result<f64> {
        self.sup.finite().ok_or(Error::UnboundedGrid)
    }
}

fn ext(x: f64) -> ExtReal {
    ExtReal::from_f64_unchecked(x)
}

fn norm(f: &SimpleFunction, p: f64, q: ExtReal) -> NormValue {
    lorentz_norm(f, LorentzIndex::new(ext(p), q).expect("validated indices"))
}

fn weak(f: &SimpleFunction, p: f64) -> NormValue {
    norm(f, p, ExtReal::INFINITY)
}

fn require(cond: bool, what: &'static str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOrder(what))
    }
}

fn positive(x: f64) -> bool {
    x > 0.0 && x.is_finite()
}

/// `2^{1/q}`, which is `1` for `q = inf`.
fn two_to_inverse(q: ExtReal) -> f64 {
    q.finite().map_or(1.0, |q| libm::pow(2.0, 1.0 / q))
}

/// `max{1, (a/b)^{1/a}}`.
fn max_one_root_ratio(a: f64, b: f64) -> f64 {
    libm::pow(a / b, 1.0 / a).max(1.0)
}

/// The interpolation constant
/// `C = (p / (s - s p1/p))^{1/s} + (p / (s p2/p - s))^{1/s}`
/// for `0 < p1 < p < p2 < inf` and `0 < s < inf`. It blows up as `p` approaches either end.
pub fn interpolation_constant(p1: f64, p2: f64, p: f64, s: f64) -> Result<f64> {
    require(positive(p1) && positive(p2) && positive(p) && positive(s), "finite positive indices")?;
    require(p1 < p && p < p2, "p1 < p < p2")?;
    let lower = libm::pow(p / (s - s * p1 / p), 1.0 / s);
    let upper = libm::pow(p / (s * p2 / p - s), 1.0 / s);
    Ok(lower + upper)
}

/// The crossover level `B = (||f||_{p2,inf}^{p2} / ||f||_{p1,inf}^{p1})^{1/(p2-p1)}`
/// at which the two weak-type tail bounds on `d_f` coincide.
pub fn crossover_point(f: &SimpleFunction, p1: f64, p2: f64) -> Result<ExtReal> {
    require(positive(p1) && positive(p2) && p1 < p2, "0 < p1 < p2 < inf")?;
    let n1 = weak(f, p1).to_f64();
    if n1 == 0.0 {
        return Err(Error::ZeroWeakNorm);
    }
    let n2 = weak(f, p2).to_f64();
    let ln_b = (p2 * libm::log(n2) - p1 * libm::log(n1)) / (p2 - p1);
    Ok(ext(libm::exp(ln_b)))
}

/// Weak-type tail bound: `d_f(a) <= ||f||_{p,inf}^p / a^p` at every `a` in `alphas`.
pub fn check_weak_type_tail(f: &SimpleFunction, p: f64, alphas: &[f64], tol: Tolerance) -> Result<CheckReport> {
    require(positive(p), "0 < p < inf")?;
    require(!alphas.is_empty() && alphas.iter().all(|&a| positive(a)), "alpha > 0")?;
    let n = weak(f, p).to_f64();
    let parts = alphas
        .iter()
        .map(|&a| {
            let rhs = libm::pow(n / a, p);
            BoundCheck::new(format!("d_f({a})"), f.distribution(a), ext(rhs), 1.0, tol)
        })
        .collect();
    Ok(CheckReport::from_parts(format!("weak-type tail, p={p}"), parts))
}

/// `||f||_{p,s} <= C(p1,p2,p,s) ||f||_{p1,inf}^{a} ||f||_{p2,inf}^{b}` with
/// `a = (p1/p)(p2-p)/(p2-p1)` and `b = (p2/p)(p-p1)/(p2-p1)`.
///
/// A second part checks the same product against the summed constant
/// [`interpolation_constant_summed`]. For `s >= 1` that constant is at most
/// `C`; for `s < 1` it is larger and `C` itself can be exceeded.
pub fn check_interpolation(
    f: &SimpleFunction,
    p1: f64,
    p2: f64,
    p: f64,
    s: f64,
    tol: Tolerance,
) -> Result<CheckReport> {
    let c = interpolation_constant(p1, p2, p, s)?;
    let c_sum = interpolation_constant_summed(p1, p2, p, s)?;
    let lhs = norm(f, p, ext(s));
    let n1 = weak(f, p1).to_f64();
    let n2 = weak(f, p2).to_f64();
    let (product, crossover) = if n1 == 0.0 {
        (ExtReal::ZERO, String::from("f = 0"))
    } else {
        let a = (p1 / p) * (p2 - p) / (p2 - p1);
        let b = (p2 / p) * (p - p1) / (p2 - p1);
        let ln = a * libm::log(n1) + b * libm::log(n2);
        let bpt = crossover_point(f, p1, p2)?;
        (ext(libm::exp(ln)), format!("B={bpt}"))
    };
    let context = format!("interpolation p1={p1} p={p} p2={p2} s={s}, {crossover}");
    let parts = vec![
        BoundCheck::new(String::from("||f||_{p,s} <= C N1^a N2^b"), lhs, scale(product, c), c, tol),
        BoundCheck::new(String::from("||f||_{p,s} <= C_sum N1^a N2^b"), lhs, scale(product, c_sum), c_sum, tol),
    ];
    Ok(CheckReport::from_parts(context, parts))
}

/// `(p / (s - s p1/p) + p / (s p2/p - s))^{1/s}`: the constant obtained by
/// integrating both tail bounds before taking the `1/s` root.
pub fn interpolation_constant_summed(p1: f64, p2: f64, p: f64, s: f64) -> Result<f64> {
    interpolation_constant(p1, p2, p, s)?;
    Ok(libm::pow(p / (s - s * p1 / p) + p / (s * p2 / p - s), 1.0 / s))
}

fn scale(x: ExtReal, c: f64) -> ExtReal {
    if x.is_zero() {
        x
    } else {
        ext(x.to_f64() * c)
    }
}

/// The `p2 = inf` variant:
/// `||f||_{p,s}^s <= p/(s - s p1/p) ||f||_{p1,inf}^{s p1/p} ||f||_inf^{s - s p1/p}`,
/// compared after taking `s`-th roots.
pub fn check_interpolation_infinite_top(
    f: &SimpleFunction,
    p1: f64,
    p: f64,
    s: f64,
    tol: Tolerance,
) -> Result<CheckReport> {
    require(positive(p1) && positive(p) && positive(s), "finite positive indices")?;
    require(p1 < p, "p1 < p")?;
    let gap = s - s * p1 / p;
    let c = libm::pow(p / gap, 1.0 / s);
    let lhs = norm(f, p, ext(s));
    let n1 = weak(f, p1).to_f64();
    let sup = lebesgue_norm(f, ExtReal::INFINITY)?.to_f64();
    let rhs = if n1 == 0.0 {
        ExtReal::ZERO
    } else {
        let ln = libm::log(c) + (p1 / p) * libm::log(n1) + (gap / s) * libm::log(sup);
        ext(libm::exp(ln))
    };
    let part = BoundCheck::new(String::from("||f||_{p,s} <= C N1^{p1/p} ||f||_inf^{1-p1/p}"), lhs, rhs, c, tol);
    Ok(CheckReport::from_parts(format!("interpolation p1={p1} p={p} p2=inf s={s}"), vec![part]))
}

/// `||f||_{r,q} <= 2^{1/q} max{||f||_{p1,q}, ||f||_{p2,q}}` for `p1 < r < p2`;
/// the constant is `1` when `q = inf`. `p2` may be infinite.
pub fn check_two_point(
    f: &SimpleFunction,
    p1: f64,
    r: f64,
    p2: ExtReal,
    q: ExtReal,
    tol: Tolerance,
) -> Result<CheckReport> {
    require(positive(p1) && positive(r) && !q.is_zero(), "positive indices")?;
    require(p1 < r && ext(r) < p2, "p1 < r < p2")?;
    let c = two_to_inverse(q);
    let lhs = norm(f, r, q);
    let top = lorentz_norm(f, LorentzIndex::new(p2, q)?);
    let rhs = norm(f, p1, q).max(top) * c;
    let part = BoundCheck::new(String::from("||f||_{r,q} <= 2^{1/q} max endpoints"), lhs, rhs, c, tol);
    Ok(CheckReport::from_parts(format!("two-point p1={p1} r={r} p2={p2} q={q}"), vec![part]))
}

/// Sandwich for the intersection over `q in Q` at fixed `p`:
/// `||f||_{p,m_Q} <= max_q ||f||_{p,q} <= max{1, (m_Q/p)^{1/m_Q}} ||f||_{p,m_Q}`.
pub fn check_ilpq_sandwich(f: &SimpleFunction, p: f64, q_grid: &IndexGrid, tol: Tolerance) -> Result<CheckReport> {
    require(positive(p), "0 < p < inf")?;
    let mq = q_grid.min();
    let at_min = norm(f, p, ext(mq));
    let (arg, sup) = q_grid.points().iter().map(|&q| (q, norm(f, p, ext(q)))).fold((mq, ExtReal::ZERO), |acc, x| {
        if x.1 > acc.1 {
            x
        } else {
            acc
        }
    });
    let c = max_one_root_ratio(mq, p);
    let parts = vec![
        BoundCheck::new(format!("||f||_{{p,m_Q}} <= max_q (at q={arg})"), at_min, sup, 1.0, tol),
        BoundCheck::new(format!("max_q (at q={arg}) <= c ||f||_{{p,m_Q}}"), sup, at_min * c, c, tol),
    ];
    Ok(CheckReport::from_parts(format!("IL_{{p,Q}} p={p} m_Q={mq}"), parts))
}

/// For every `p in J`, `||f||_{p,q} <= 2^{1/q} max{||f||_{m_J,q}, ||f||_{M_J,q}}`,
/// plus the reverse inequality `max endpoints <= max_{p in J} ||f||_{p,q}`.
pub fn check_iljq_endpoints(f: &SimpleFunction, j_grid: &IndexGrid, q: ExtReal, tol: Tolerance) -> Result<CheckReport> {
    require(!q.is_zero(), "q > 0")?;
    let (mj, sup_j) = (j_grid.min(), j_grid.finite_sup()?);
    let c = two_to_inverse(q);
    let ends = norm(f, mj, q).max(norm(f, sup_j, q));
    let mut parts = Vec::with_capacity(j_grid.points().len() + 1);
    let mut over_grid = ExtReal::ZERO;
    for &p in j_grid.points() {
        let n = norm(f, p, q);
        over_grid = over_grid.max(n);
        parts.push(BoundCheck::new(format!("||f||_{{{p},q}} <= 2^{{1/q}} max endpoints"), n, ends * c, c, tol));
    }
    parts.push(BoundCheck::new(String::from("max endpoints <= max over J"), ends, over_grid, 1.0, tol));
    Ok(CheckReport::from_parts(format!("IL_{{J,q}} m_J={mj} M_J={sup_j} q={q}"), parts))
}

/// The two-sided bound for the intersection over `J x Q`:
/// `E <= S <= K E` where `S = max_{J x Q} ||f||_{p,q}`,
/// `E = max{||f||_{m_J,m_Q}, ||f||_{M_J,m_Q}}` and
/// `K = 2^{1/m_Q} max{1, (m_Q/m_J)^{1/m_Q}}`.
pub fn check_iljq_two_sided(
    f: &SimpleFunction,
    j_grid: &IndexGrid,
    q_grid: &IndexGrid,
    tol: Tolerance,
) -> Result<CheckReport> {
    let (mj, sup_j) = (j_grid.min(), j_grid.finite_sup()?);
    let mq = q_grid.min();
    let k = two_constant_k(mj, mq);
    let e = norm(f, mj, ext(mq)).max(norm(f, sup_j, ext(mq)));
    let s = sup_over(f, j_grid, q_grid);
    let parts = vec![
        BoundCheck::new(String::from("E <= S"), e, s, 1.0, tol),
        BoundCheck::new(String::from("S <= K E"), s, e * k, k, tol),
    ];
    Ok(CheckReport::from_parts(format!("IL_{{J,Q}} m_J={mj} M_J={sup_j} m_Q={mq} K={k}"), parts))
}

/// `K = 2^{1/m_Q} max{1, (m_Q/m_J)^{1/m_Q}}`.
pub fn two_constant_k(mj: f64, mq: f64) -> f64 {
    libm::pow(2.0, 1.0 / mq) * max_one_root_ratio(mq, mj)
}

fn sup_over(f: &SimpleFunction, j_grid: &IndexGrid, q_grid: &IndexGrid) -> NormValue {
    ExtReal::sup(j_grid.points().iter().flat_map(|&p| q_grid.points().iter().map(move |&q| norm(f, p, ext(q)))))
}

/// Product bound for `f in L_inf`, `g in L_{p,inf}` on shared atoms:
/// pointwise `(fg)*(t) <= f*(t/2) g*(t/2)` on every breakpoint and midpoint of
/// the three profiles, and `||fg||_{p,inf} <= 2^{1/p} ||g||_{p,inf} ||f||_inf`.
pub fn check_product_bound(f: &SimpleFunction, g: &SimpleFunction, p: ExtReal, tol: Tolerance) -> Result<CheckReport> {
    require(!p.is_zero(), "p > 0")?;
    let fg = f.pointwise_product(g)?;
    let (fs, gs, fgs) = (f.rearrangement(), g.rearrangement(), fg.rearrangement());

    let mut ts: Vec<f64> = vec![0.0];
    ts.extend(fgs.breakpoints());
    ts.extend(fs.breakpoints().map(|t| 2.0 * t));
    ts.extend(gs.breakpoints().map(|t| 2.0 * t));
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    let last = *ts.last().expect("nonempty");
    let mids: Vec<f64> = ts.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    ts.extend(mids);
    ts.push(2.0 * last + 1.0);

    let mut parts: Vec<BoundCheck> = ts
        .iter()
        .map(|&t| {
            let lhs = ext(fgs.evaluate(t));
            let rhs = ext(fs.evaluate(0.5 * t) * gs.evaluate(0.5 * t));
            BoundCheck::new(format!("(fg)*({t}) <= f*(t/2) g*(t/2)"), lhs, rhs, 1.0, tol)
        })
        .collect();

    let c = two_to_inverse(p);
    let weak_idx = LorentzIndex::new(p, ExtReal::INFINITY)?;
    let lhs = lorentz_norm(&fg, weak_idx);
    let rhs = lorentz_norm(g, weak_idx) * ext(f.max_value()) * c;
    parts.push(BoundCheck::new(String::from("||fg||_{p,inf} <= 2^{1/p} ||g||_{p,inf} ||f||_inf"), lhs, rhs, c, tol));
    Ok(CheckReport::from_parts(format!("product p={p}"), parts))
}

/// `max_{J x Q} ||f||_{p,q} <= max{1, (m_Q/m_J)^{1/m_Q}} M_{m_Q}` with
/// `M_{m_Q} = max_{p in J} ||f||_{p,m_Q}`.
pub fn check_ab_decomposition(
    f: &SimpleFunction,
    j_grid: &IndexGrid,
    q_grid: &IndexGrid,
    tol: Tolerance,
) -> Result<CheckReport> {
    let (mj, mq) = (j_grid.min(), q_grid.min());
    require(q_grid.points().contains(&mq), "m_Q in Q")?;
    let c = max_one_root_ratio(mq, mj);
    let m_mq = ExtReal::sup(j_grid.points().iter().map(|&p| norm(f, p, ext(mq))));
    let s = sup_over(f, j_grid, q_grid);
    let parts = vec![
        BoundCheck::new(String::from("M_{m_Q} <= sup_{J x Q}"), m_mq, s, 1.0, tol),
        BoundCheck::new(String::from("sup_{J x Q} <= c M_{m_Q}"), s, m_mq * c, c, tol),
    ];
    Ok(CheckReport::from_parts(format!("A cap B m_J={mj} m_Q={mq}"), parts))
}
