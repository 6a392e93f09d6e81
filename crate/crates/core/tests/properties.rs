use lorentz_core::embeddings::{
    check_ab_decomposition, check_iljq_two_sided, check_ilpq_sandwich, check_interpolation, check_product_bound,
    check_two_point, IndexGrid,
};
use lorentz_core::norms::{lebesgue_norm, lorentz_norm, lorentz_norm_via_distribution, rearrangement_power_integral};
use lorentz_core::sequence::{check_prop22_i, seq_lorentz_norm, seq_lp_norm};
use lorentz_core::{make_simple_function, relative_eq, ExtReal, LorentzIndex, NormSequence, SimpleFunction, Tolerance};
use proptest::prelude::*;

const TOL: Tolerance = Tolerance::INEQUALITY;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..hi.ln()).prop_map(f64::exp)
}

fn simple_function() -> impl Strategy<Value = SimpleFunction> {
    // a small value pool forces ties
    let value = prop_oneof![log_uniform(1e-3, 1e3), prop::sample::select(vec![0.0, 1.0, 2.0, 5.0])];
    prop::collection::vec((log_uniform(1e-3, 1e3), value), 0..12).prop_map(|raw| make_simple_function(&raw).unwrap())
}

fn shared_pair() -> impl Strategy<Value = (SimpleFunction, SimpleFunction)> {
    (1usize..10).prop_flat_map(|n| {
        (
            prop::collection::vec(log_uniform(1e-3, 1e3), n),
            prop::collection::vec(prop_oneof![log_uniform(1e-3, 1e3), Just(0.0)], n),
            prop::collection::vec(prop_oneof![log_uniform(1e-3, 1e3), Just(0.0)], n),
        )
            .prop_map(|(m, a, b)| {
                let raw: Vec<_> = m.iter().copied().zip(a).collect();
                let f = make_simple_function(&raw).unwrap();
                let g = f.with_values(&b).unwrap();
                (f, g)
            })
    })
}

fn index() -> impl Strategy<Value = f64> {
    log_uniform(0.1, 10.0)
}

fn grid(lo: f64, hi: f64) -> impl Strategy<Value = IndexGrid> {
    prop::collection::vec(log_uniform(lo, hi), 1..6).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        v.dedup();
        IndexGrid::new(v).unwrap()
    })
}

fn norm(f: &SimpleFunction, p: f64, q: f64) -> ExtReal {
    lorentz_norm(f, LorentzIndex::from_f64(p, q).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn profiles_are_strictly_ordered(f in simple_function()) {
        for prof in [f.rearrangement(), f.distribution_profile()] {
            let segs = prof.segments();
            prop_assert!(segs.windows(2).all(|w| w[0].value > w[1].value && w[0].end < w[1].end));
            prop_assert!(segs.iter().all(|s| s.value > 0.0 && s.end > 0.0));
        }
    }

    #[test]
    fn equimeasurable_and_dual(f in simple_function()) {
        let star = f.rearrangement();
        let dist = f.distribution_profile();
        prop_assert_eq!(&dist.generalized_inverse(), &star);
        prop_assert_eq!(&star.generalized_inverse(), &dist);
        let mut alphas = vec![0.0];
        for a in f.atoms() {
            alphas.extend([a.value, a.value * 0.5, a.value * 1.5]);
        }
        for alpha in alphas {
            let d = f.distribution(alpha).to_f64();
            prop_assert_eq!(star.level_measure(alpha), d);
            prop_assert_eq!(dist.evaluate(alpha), d);
        }
        prop_assert_eq!(star.support_end(), f.support_mass());
    }

    #[test]
    fn product_commutes_and_associates((f, g) in shared_pair(), c in log_uniform(1e-2, 1e2)) {
        let h = g.scaled(c);
        prop_assert_eq!(f.pointwise_product(&g).unwrap(), g.pointwise_product(&f).unwrap());
        let left = f.pointwise_product(&g).unwrap().pointwise_product(&h).unwrap();
        let right = f.pointwise_product(&g.pointwise_product(&h).unwrap()).unwrap();
        for (a, b) in left.atoms().iter().zip(right.atoms()) {
            prop_assert!((a.value - b.value).abs() <= 1e-15 * a.value.max(b.value));
        }
    }

    #[test]
    fn power_integral_identity(f in simple_function(), p in index()) {
        let direct: f64 = f.atoms().iter().map(|a| a.mass * a.value.powf(p)).sum();
        let closed = rearrangement_power_integral(&f, p).unwrap();
        prop_assert!((direct - closed).abs() <= 1e-12 * direct.max(closed), "{direct} vs {closed}");
    }

    #[test]
    fn two_closed_forms_agree(f in simple_function(), p in index(), s in index()) {
        let a = norm(&f, p, s);
        let b = lorentz_norm_via_distribution(&f, p, s).unwrap();
        prop_assert!(relative_eq(a, b, 1e-12), "{a} vs {b}");
    }

    #[test]
    fn diagonal_is_lebesgue(f in simple_function(), p in index()) {
        let l = lorentz_norm(&f, LorentzIndex::from_f64(p, p).unwrap());
        let leb = lebesgue_norm(&f, ExtReal::new(p).unwrap()).unwrap();
        let comparable = if p >= 1.0 { l } else { l.pow(p) };
        prop_assert!(relative_eq(comparable, leb, 1e-11), "{comparable} vs {leb}");
    }

    #[test]
    fn positively_homogeneous(f in simple_function(), p in index(), q in prop_oneof![index(), Just(f64::INFINITY)], c in log_uniform(1e-2, 1e2)) {
        let base = norm(&f, p, q).to_f64();
        let scaled = norm(&f.scaled(c), p, q).to_f64();
        prop_assert!((scaled - c * base).abs() <= 1e-12 * scaled.max(c * base));
        let esup = lorentz_norm(&f.scaled(c), LorentzIndex::from_f64(f64::INFINITY, f64::INFINITY).unwrap());
        prop_assert!((esup.to_f64() - c * f.max_value()).abs() <= 1e-15 * esup.to_f64());
    }

    #[test]
    fn weak_type_tail(f in simple_function(), p in index(), alpha in log_uniform(1e-4, 1e4)) {
        let n = norm(&f, p, f64::INFINITY).to_f64();
        let bound = (n / alpha).powf(p);
        prop_assert!(f.distribution(alpha).to_f64() <= bound * (1.0 + 1e-9) + 1e-12);
    }

    #[test]
    fn interpolation_bound(f in simple_function(), mut ps in prop::collection::vec(index(), 3), s in index()) {
        ps.sort_by(f64::total_cmp);
        prop_assume!(ps[0] < ps[1] && ps[1] < ps[2]);
        let r = check_interpolation(&f, ps[0], ps[2], ps[1], s, TOL).unwrap();
        // the stated constant is only guaranteed for s >= 1
        prop_assert!(r.parts[1].passed, "{:?}", r);
        if s >= 1.0 {
            prop_assert!(r.passed, "{:?}", r);
        }
    }

    #[test]
    fn two_point_bound(f in simple_function(), mut ps in prop::collection::vec(index(), 3), q in prop_oneof![index(), Just(f64::INFINITY)]) {
        ps.sort_by(f64::total_cmp);
        prop_assume!(ps[0] < ps[1] && ps[1] < ps[2]);
        let q = ExtReal::new(q).unwrap();
        let r = check_two_point(&f, ps[0], ps[1], ExtReal::new(ps[2]).unwrap(), q, TOL).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn enlarging_q_never_decreases_sup(f in simple_function(), p in index(), q in grid(0.1, 10.0), extra in log_uniform(0.1, 10.0)) {
        let r = check_ilpq_sandwich(&f, p, &q, TOL).unwrap();
        prop_assert!(r.passed);
        prop_assume!(extra > q.min() && !q.points().contains(&extra));
        let mut pts = q.points().to_vec();
        pts.push(extra);
        pts.sort_by(f64::total_cmp);
        let bigger = IndexGrid::new(pts).unwrap();
        let r2 = check_ilpq_sandwich(&f, p, &bigger, TOL).unwrap();
        prop_assert!(r2.passed);
        prop_assert!(r2.parts[1].lhs >= r.parts[1].lhs);
    }

    #[test]
    fn checks_scale_equivariantly(f in simple_function(), j in grid(0.1, 10.0), q in grid(0.1, 10.0), c in log_uniform(1e-2, 1e2)) {
        let r = check_iljq_two_sided(&f, &j, &q, TOL).unwrap();
        let rc = check_iljq_two_sided(&f.scaled(c), &j, &q, TOL).unwrap();
        prop_assert_eq!(r.passed, rc.passed);
        for (a, b) in r.parts.iter().zip(&rc.parts) {
            prop_assert!((b.lhs.to_f64() - c * a.lhs.to_f64()).abs() <= 1e-11 * b.lhs.to_f64().max(1e-300));
            prop_assert!((b.rhs.to_f64() - c * a.rhs.to_f64()).abs() <= 1e-11 * b.rhs.to_f64().max(1e-300));
        }
        prop_assert!(check_ab_decomposition(&f, &j, &q, TOL).unwrap().passed);
    }

    #[test]
    fn product_bound((f, g) in shared_pair(), p in prop_oneof![index(), Just(f64::INFINITY)]) {
        let r = check_product_bound(&f, &g, ExtReal::new(p).unwrap(), TOL).unwrap();
        prop_assert!(r.passed, "{:?}", r);
    }

    #[test]
    fn sequence_rearrangement_invariance(mut terms in prop::collection::vec(log_uniform(1e-3, 1e3), 0..12), p in log_uniform(1.0, 10.0), q in log_uniform(1.0, 10.0), seed in any::<u64>()) {
        let s = NormSequence::new(terms.clone()).unwrap();
        let n = seq_lorentz_norm(&s, ExtReal::new(p).unwrap(), ExtReal::new(q).unwrap()).unwrap();
        // deterministic shuffle
        let len = terms.len();
        let mut state = seed;
        for i in (1..len).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            terms.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = NormSequence::new(terms).unwrap();
        let m = seq_lorentz_norm(&shuffled, ExtReal::new(p).unwrap(), ExtReal::new(q).unwrap()).unwrap();
        prop_assert_eq!(n, m);
    }

    #[test]
    fn sequence_monotone_in_terms(terms in prop::collection::vec((log_uniform(1e-3, 1e3), 1.0f64..3.0), 0..12), p in log_uniform(1.0, 10.0), q in prop_oneof![log_uniform(1.0, 10.0), Just(f64::INFINITY)]) {
        let small = NormSequence::new(terms.iter().map(|t| t.0).collect()).unwrap();
        let large = NormSequence::new(terms.iter().map(|t| t.0 * t.1).collect()).unwrap();
        let (p, q) = (ExtReal::new(p).unwrap(), ExtReal::new(q).unwrap());
        prop_assert!(seq_lorentz_norm(&small, p, q).unwrap() <= seq_lorentz_norm(&large, p, q).unwrap());
    }

    #[test]
    fn sequence_diagonal_is_lp(terms in prop::collection::vec(log_uniform(1e-3, 1e3), 0..12), p in log_uniform(1.0, 10.0)) {
        let s = NormSequence::new(terms).unwrap();
        let x = ExtReal::new(p).unwrap();
        let a = seq_lorentz_norm(&s, x, x).unwrap();
        let b = ExtReal::new(seq_lp_norm(&s, p).unwrap()).unwrap();
        prop_assert!(relative_eq(a, b, 1e-12), "{a} vs {b}");
    }

    #[test]
    fn sequence_fine_index_growth(terms in prop::collection::vec(log_uniform(1e-3, 1e3), 0..12), p in log_uniform(1.0, 10.0), mut qs in prop::collection::vec(log_uniform(1.0, 10.0), 2)) {
        qs.sort_by(f64::total_cmp);
        prop_assume!(qs[0] < qs[1]);
        let s = NormSequence::new(terms).unwrap();
        prop_assert!(check_prop22_i(&s, p, qs[0], ExtReal::new(qs[1]).unwrap(), TOL).unwrap().passed);
        prop_assert!(check_prop22_i(&s, p, qs[0], ExtReal::INFINITY, TOL).unwrap().passed);
    }

    #[test]
    fn weak_norm_discrete_continuous(terms in prop::collection::vec(prop_oneof![log_uniform(1e-3, 1e3), Just(1.0), Just(0.0)], 0..12), p in log_uniform(1.0, 10.0)) {
        let s = NormSequence::new(terms).unwrap();
        let a = seq_lorentz_norm(&s, ExtReal::new(p).unwrap(), ExtReal::INFINITY).unwrap();
        let b = norm(&s.to_simple_function(), p, f64::INFINITY);
        prop_assert!(relative_eq(a, b, 1e-14), "{a} vs {b}");
    }
}
