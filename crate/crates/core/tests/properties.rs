//! Property tests for the scalar kernels, measure types, and divergence
//! orderings.

use proptest::prelude::*;

use geoskew::{
    divergence_lower_bound, divergence_upper_bound, f_alpha, f_alpha_inv, f_interpolate,
    geodesical_skew, normalize, tv_distance, Alpha, Lambda, NormalizeMode,
};

fn finite_alpha() -> impl Strategy<Value = f64> {
    -30.0..30.0f64
}

fn any_alpha() -> impl Strategy<Value = Alpha> {
    prop_oneof![
        8 => finite_alpha().prop_map(|v| Alpha::new(v).unwrap()),
        1 => Just(Alpha::INFINITY),
        1 => Just(Alpha::NEG_INFINITY),
    ]
}

fn log_uniform() -> impl Strategy<Value = f64> {
    (-8.0..8.0f64).prop_map(|e| 10f64.powf(e))
}

fn raw_weights() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec((-5.0..1.0f64).prop_map(|e| 10f64.powf(e)), 2..64)
}

fn ulp_diff(a: f64, b: f64) -> u64 {
    (a.to_bits() as i64 - b.to_bits() as i64).unsigned_abs()
}

proptest! {
    #[test]
    fn interpolation_stays_between_endpoints(
        alpha in any_alpha(),
        lam in 0.0..=1.0f64,
        a in log_uniform(),
        b in log_uniform(),
    ) {
        let m = f_interpolate(alpha, Lambda::new(lam).unwrap(), a, b).unwrap();
        prop_assert!(a.min(b) <= m && m <= a.max(b), "m={m} outside [{}, {}]", a.min(b), a.max(b));
    }

    #[test]
    fn interpolation_recovers_endpoints_exactly(
        alpha in any_alpha(),
        a in log_uniform(),
        b in log_uniform(),
    ) {
        prop_assert_eq!(f_interpolate(alpha, Lambda::ZERO, a, b).unwrap(), a);
        prop_assert_eq!(f_interpolate(alpha, Lambda::ONE, a, b).unwrap(), b);
    }

    #[test]
    fn interpolation_is_nonincreasing_in_alpha(
        lo in finite_alpha(),
        hi in finite_alpha(),
        lam in 0.01..0.99f64,
        a in log_uniform(),
        b in log_uniform(),
    ) {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let l = Lambda::new(lam).unwrap();
        let m_lo = f_interpolate(Alpha::new(lo).unwrap(), l, a, b).unwrap();
        let m_hi = f_interpolate(Alpha::new(hi).unwrap(), l, a, b).unwrap();
        let scale = m_lo.max(m_hi);
        prop_assert!(m_hi <= m_lo + 1e-12 * scale, "m({lo})={m_lo} < m({hi})={m_hi}");
    }

    #[test]
    fn generator_round_trips_within_four_ulp(
        alpha in prop_oneof![-30.0..0.5f64, 1.5..30.0f64],
        exp10 in -6.0..6.0f64,
    ) {
        let x = 10f64.powf(exp10);
        let u = (1.0 - alpha) / 2.0;
        // keep the intermediate representable
        prop_assume!((u * x.ln()).abs() < 690.0);
        let a = Alpha::new(alpha).unwrap();
        let back = f_alpha_inv(a, f_alpha(a, x).unwrap()).unwrap();
        prop_assert!(ulp_diff(x, back) <= 4, "x={x} back={back} ulp={}", ulp_diff(x, back));
    }

    #[test]
    fn normalized_vectors_are_positive_and_unit_sum(raw in raw_weights()) {
        let p = normalize(&raw, NormalizeMode::Strict).unwrap();
        prop_assert!(p.weights().iter().all(|&w| w > 0.0));
        let sum: f64 = p.weights().iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn tv_distance_is_a_metric(
        raw_p in raw_weights(),
        seed_q in 1u64..1000,
        seed_r in 1u64..1000,
    ) {
        // derive q and r from p so all three share a length
        let perturb = |raw: &[f64], seed: u64| -> Vec<f64> {
            raw.iter()
                .enumerate()
                .map(|(i, &w)| w * (1.0 + 0.9 * (((i as u64 + 1) * seed % 97) as f64 / 97.0)))
                .collect()
        };
        let p = normalize(&raw_p, NormalizeMode::Strict).unwrap();
        let q = normalize(&perturb(&raw_p, seed_q), NormalizeMode::Strict).unwrap();
        let r = normalize(&perturb(&raw_p, seed_r), NormalizeMode::Strict).unwrap();
        let pq = tv_distance(&p, &q).unwrap();
        let qp = tv_distance(&q, &p).unwrap();
        let pp = tv_distance(&p, &p).unwrap();
        let pr = tv_distance(&p, &r).unwrap();
        let qr = tv_distance(&q, &r).unwrap();
        prop_assert!((pq - qp).abs() <= 1e-15);
        prop_assert!(pp <= 1e-12);
        prop_assert!(pr <= pq + qr + 1e-12);
        prop_assert!((0.0..=2.0 + 1e-12).contains(&pq));
    }

    #[test]
    fn divergence_is_nonnegative_and_sandwiched(
        raw_p in raw_weights(),
        seed_q in 1u64..1000,
        alpha in -1.0..12.0f64,
        lam in 0.0..=1.0f64,
    ) {
        let perturb: Vec<f64> = raw_p
            .iter()
            .enumerate()
            .map(|(i, &w)| w * (1.0 + 0.9 * (((i as u64 + 1) * seed_q % 89) as f64 / 89.0)))
            .collect();
        let p = normalize(&raw_p, NormalizeMode::Strict).unwrap();
        let q = normalize(&perturb, NormalizeMode::Strict).unwrap();
        let a = Alpha::new(alpha).unwrap();
        let l = Lambda::new(lam).unwrap();
        let v = geodesical_skew(a, l, &p, &q).unwrap().nats();
        prop_assert!(v >= -1e-12, "negative divergence {v} at alpha={alpha}");
        let lower = divergence_lower_bound(&p, &q).unwrap().nats();
        let upper = divergence_upper_bound(&p, &q).unwrap().nats();
        prop_assert!(lower - 1e-10 <= v && v <= upper + 1e-10);
    }

    #[test]
    fn alpha_text_round_trip(v in finite_alpha()) {
        let a = Alpha::new(v).unwrap();
        let back: Alpha = a.to_string().parse().unwrap();
        prop_assert_eq!(a.value(), back.value());
    }
}
