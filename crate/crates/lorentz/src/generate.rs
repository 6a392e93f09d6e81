//! Random instances.
//!
//! Everything is sampled log-uniformly so that values, masses and indices
//! spread over many orders of magnitude; uniform sampling would almost never
//! produce the extreme ratios where quasi-norm constants are stressed.

use lorentz_core::embeddings::IndexGrid;
use lorentz_core::{make_simple_function, NormSequence, SimpleFunction};
use rand::Rng;

use crate::config::SuiteConfig;

// Probability that a sampled value repeats an earlier one, so ties in the
// rearrangement are exercised.
const TIE_PROBABILITY: f64 = 0.1;
// Probability of a zero value where zeros are admissible.
const ZERO_PROBABILITY: f64 = 0.1;

/// `exp(U)` with `U` uniform on `[ln lo, ln hi]`.
pub fn log_uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    if lo == hi {
        return lo;
    }
    let (a, b) = (lo.ln(), hi.ln());
    (a + rng.random::<f64>() * (b - a)).exp().clamp(lo, hi)
}

/// `n` strictly increasing log-uniform points in `[lo, hi]`.
pub fn increasing_points<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    loop {
        let mut pts: Vec<f64> = (0..n).map(|_| log_uniform(rng, lo, hi)).collect();
        pts.sort_by(f64::total_cmp);
        if pts.windows(2).all(|w| w[0] < w[1]) {
            return pts;
        }
    }
}

fn values<R: Rng + ?Sized>(rng: &mut R, n: usize, range: (f64, f64), zeros: bool) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(n);
    for _ in 0..n {
        let v = if zeros && rng.random_bool(ZERO_PROBABILITY) {
            0.0
        } else if !out.is_empty() && rng.random_bool(TIE_PROBABILITY) {
            out[rng.random_range(0..out.len())]
        } else {
            log_uniform(rng, range.0, range.1)
        };
        out.push(v);
    }
    out
}

/// A simple function with `1..=max_atoms` atoms, masses and values
/// log-uniform in their configured ranges.
pub fn generate_step_function<R: Rng + ?Sized>(rng: &mut R, config: &SuiteConfig) -> SimpleFunction {
    let n = rng.random_range(1..=config.max_atoms);
    let masses: Vec<f64> = (0..n).map(|_| log_uniform(rng, config.mass_range.0, config.mass_range.1)).collect();
    let vals = values(rng, n, config.value_range, false);
    let raw: Vec<(f64, f64)> = masses.into_iter().zip(vals).collect();
    make_simple_function(&raw).expect("sampled atoms are valid")
}

/// Two simple functions on the same atoms. Values may be zero.
pub fn generate_shared_pair<R: Rng + ?Sized>(rng: &mut R, config: &SuiteConfig) -> (SimpleFunction, SimpleFunction) {
    let n = rng.random_range(1..=config.max_atoms);
    let masses: Vec<f64> = (0..n).map(|_| log_uniform(rng, config.mass_range.0, config.mass_range.1)).collect();
    let a = values(rng, n, config.value_range, true);
    let b = values(rng, n, config.value_range, true);
    let raw: Vec<(f64, f64)> = masses.into_iter().zip(a).collect();
    let f = make_simple_function(&raw).expect("sampled atoms are valid");
    let g = f.with_values(&b).expect("same atom count");
    (f, g)
}

/// A sequence of `1..=max_atoms` terms; about one in ten is zero.
pub fn generate_sequence<R: Rng + ?Sized>(rng: &mut R, config: &SuiteConfig) -> NormSequence {
    let n = rng.random_range(1..=config.max_atoms);
    NormSequence::new(values(rng, n, config.value_range, true)).expect("sampled terms are valid")
}

/// A grid of strictly increasing points log-uniform in `[low, high]`, with a
/// size drawn uniformly from `size_range` (inclusive).
pub fn generate_index_grid<R: Rng + ?Sized>(rng: &mut R, low: f64, high: f64, size_range: (usize, usize)) -> IndexGrid {
    let n = rng.random_range(size_range.0..=size_range.1);
    IndexGrid::new(increasing_points(rng, n, low, high)).expect("points are increasing and positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn same_seed_same_function() {
        let cfg = SuiteConfig::default();
        assert_eq!(generate_step_function(&mut rng(5), &cfg), generate_step_function(&mut rng(5), &cfg));
        assert_ne!(generate_step_function(&mut rng(5), &cfg), generate_step_function(&mut rng(6), &cfg));
    }

    #[test]
    fn max_atoms_one_gives_single_atoms() {
        let cfg = SuiteConfig { max_atoms: 1, ..Default::default() };
        let mut r = rng(1);
        for _ in 0..200 {
            assert_eq!(generate_step_function(&mut r, &cfg).atoms().len(), 1);
        }
    }

    #[test]
    fn sampled_functions_respect_ranges() {
        let cfg = SuiteConfig::default();
        let mut r = rng(2);
        let mut sizes = [false; 13];
        for _ in 0..1000 {
            let f = generate_step_function(&mut r, &cfg);
            sizes[f.atoms().len()] = true;
            for a in f.atoms() {
                assert!((1e-3..=1e3).contains(&a.mass) && (1e-3..=1e3).contains(&a.value));
            }
            // the profile is well formed: strictly ordered segments
            let star = f.rearrangement();
            assert!(star.segments().windows(2).all(|w| w[0].value > w[1].value && w[0].end < w[1].end));
        }
        assert!(sizes[1..].iter().all(|&seen| seen));
    }

    #[test]
    fn grids_have_requested_size() {
        let mut r = rng(3);
        for _ in 0..100 {
            assert_eq!(generate_index_grid(&mut r, 0.1, 10.0, (2, 2)).points().len(), 2);
        }
        let g1 = generate_index_grid(&mut rng(9), 1.0, 10.0, (2, 6));
        let g2 = generate_index_grid(&mut rng(9), 1.0, 10.0, (2, 6));
        assert_eq!(g1, g2);
    }

    #[test]
    fn grids_are_strictly_increasing() {
        let mut r = rng(4);
        for _ in 0..1000 {
            let g = generate_index_grid(&mut r, 0.1, 10.0, (2, 6));
            let pts = g.points();
            assert!((2..=6).contains(&pts.len()));
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            assert!(pts.iter().all(|&p| (0.1..=10.0).contains(&p)));
        }
    }
}
