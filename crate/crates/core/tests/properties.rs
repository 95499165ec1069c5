mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rug::Float;

use common::cofactor_det;
use cubicmap::numeric::{self, PREC};
use cubicmap::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-10_000i64..10_000, 1i64..5_000).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

fn qs2_strategy() -> impl Strategy<Value = QS2> {
    (rat_strategy(), rat_strategy()).prop_map(|(a, b)| QS2::new(a, b))
}

fn nonzero_qs2() -> impl Strategy<Value = QS2> {
    qs2_strategy().prop_filter("nonzero", |x| !x.is_zero())
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(qs2_strategy(), 0..max_len).prop_map(Poly::new)
}

/// γ₀..=γ₆₂ by the chain route, shared across cases.
fn deep_gamma() -> &'static [Rat] {
    static G: OnceLock<Vec<Rat>> = OnceLock::new();
    G.get_or_init(|| RecurrenceTable::build(20).unwrap().gamma().to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(x in qs2_strategy(), y in qs2_strategy(), z in qs2_strategy()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &QS2::zero(), x.clone());
        prop_assert_eq!(&x * &QS2::one(), x.clone());
        prop_assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn inverse_laws(x in nonzero_qs2()) {
        let inv = x.inv().unwrap();
        prop_assert!((&x * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), x);
    }

    #[test]
    fn rat_components_stay_reduced(x in qs2_strategy(), y in nonzero_qs2()) {
        let q = x.checked_div(&y).unwrap();
        for r in [q.rat_part(), q.sqrt2_part()] {
            prop_assert!(*r.denom() > 0);
            prop_assert_eq!(r.numer().clone().gcd(r.denom()), 1);
        }
    }

    #[test]
    fn sign_matches_high_precision_float(x in qs2_strategy()) {
        let f: Float = x.rat_part().to_float(PREC)
            + x.sqrt2_part().to_float(PREC) * Float::with_val(PREC, 2).sqrt();
        let expect = if f.is_zero() { 0 } else if f > 0 { 1 } else { -1 };
        prop_assert_eq!(x.sign(), expect);
    }

    #[test]
    fn is_rational_iff_no_sqrt2_part(x in qs2_strategy()) {
        prop_assert_eq!(x.is_rational(), x.sqrt2_part().is_zero());
        if let Some(r) = x.to_rat() {
            prop_assert_eq!(QS2::from(r), x);
        }
    }

    #[test]
    fn serialization_is_stable(x in qs2_strategy(), p in poly_strategy(6)) {
        let s1 = serde_json::to_string(&x).unwrap();
        let back: QS2 = serde_json::from_str(&s1).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s1);

        let r = x.rat_part().to_string();
        prop_assert_eq!(r.parse::<Rat>().unwrap().to_string(), r);

        let ps = serde_json::to_string(&p).unwrap();
        let pb: Poly = serde_json::from_str(&ps).unwrap();
        prop_assert_eq!(serde_json::to_string(&pb).unwrap(), ps);
    }

    #[test]
    fn degree_is_additive(p in poly_strategy(6), q in poly_strategy(6)) {
        let prod = &p * &q;
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn divrem_recovers_quotient(p in poly_strategy(6), r in poly_strategy(2)) {
        let u2 = cheb_u_monic(2);
        let n = &(&p * &u2) + &r;
        let (q, rem) = n.divrem(&u2).unwrap();
        prop_assert_eq!(q, p);
        prop_assert_eq!(rem, r);
    }

    #[test]
    fn divrem_reconstructs(p in poly_strategy(8), d in poly_strategy(4)) {
        prop_assume!(!d.is_zero());
        let (q, r) = p.divrem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, p);
        if let (Some(rd), Some(dd)) = (r.degree(), d.degree()) {
            prop_assert!(rd < dd);
        }
    }

    #[test]
    fn compose_agrees_with_eval(p in poly_strategy(5), inner in poly_strategy(4), x in qs2_strategy()) {
        let composed = p.compose(&inner);
        prop_assert_eq!(composed.eval(&x), p.eval(&inner.eval(&x)));
    }

    #[test]
    fn det_fraction_free_matches_cofactor(
        size in 1usize..=6,
        entries in prop::collection::vec((-20i64..20, 1i64..8, -20i64..20, 1i64..8), 36),
    ) {
        let m: Vec<Vec<QS2>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| {
                        let (a, b, c, d) = entries[i * 6 + j];
                        QS2::new(Rat::new(a, b).unwrap(), Rat::new(c, d).unwrap())
                    })
                    .collect()
            })
            .collect();
        prop_assert_eq!(det_fraction_free(&m), cofactor_det(&m));
    }

    #[test]
    fn quad_stable_under_refinement(k in 0usize..10) {
        let coarse = numeric::quad_moment_p(k, 1e-12).unwrap();
        let fine = numeric::quad_moment_p(k, 1e-16).unwrap();
        prop_assert!(coarse.error_estimate >= 0.0);
        let diff = Float::with_val(PREC, &coarse.value - &fine.value).abs().to_f64();
        prop_assert!(diff <= 1e-12, "k={} diff={}", k, diff);
    }
}

#[test]
fn recurrence_output_is_monic_and_rational() {
    let polys = recurrence_polys(deep_gamma(), 62).unwrap();
    for (n, p) in polys.iter().enumerate() {
        assert_eq!(p.degree(), Some(n));
        assert!(p.is_monic(), "P_{n}");
        assert!(p.is_rational(), "P_{n}");
    }
}

#[test]
fn recurrence_polys_have_parity() {
    let polys = recurrence_polys(deep_gamma(), 62).unwrap();
    for (n, p) in polys.iter().enumerate() {
        let expect = if n % 2 == 0 { p.clone() } else { -p };
        assert_eq!(p.reflect(), expect, "P_{n}");
    }
}

#[test]
fn chain_bounds_at_every_depth() {
    let table = RecurrenceTable::build(20).unwrap();
    for (n, s) in table.s().iter().enumerate().skip(1) {
        let sixteen_s = Rat::from_int(16) * s;
        assert!(sixteen_s.signum() > 0 && sixteen_s < Rat::one(), "16 s_{n}");
    }
    for (n, g) in table.g().iter().enumerate().skip(1) {
        assert!(g.signum() > 0 && *g < Rat::one(), "g_{n}");
    }
    assert!(table.g()[0].is_zero());
    for (n, d) in table.deltas().iter().enumerate() {
        assert_eq!(d.sign(), 1, "Delta_{}", n as isize - 1);
    }
    assert!(table.gamma().iter().skip(1).all(|g| g.signum() > 0));
}

#[test]
fn s_is_quarter_gamma_product() {
    let table = RecurrenceTable::build(20).unwrap();
    let g = table.gamma();
    let quarter = Rat::new(1, 4).unwrap();
    for n in 1..=20 {
        assert_eq!(&quarter * &g[3 * n - 2] * &g[3 * n], table.s()[n], "n={n}");
    }
}

#[test]
fn s_is_norm_ratio_of_q() {
    let depth = 12;
    let table = moment_table(&WeightSpec::q(), depth).unwrap();
    let s = s_sequence(&table, depth).unwrap();
    let q = recurrence_polys(&s, depth).unwrap();
    let norms: Vec<QS2> = q
        .iter()
        .map(|p| inner_product(p, p, &table).unwrap())
        .collect();
    for n in 1..=depth {
        let ratio = norms[n].checked_div(&norms[n - 1]).unwrap();
        assert_eq!(ratio, QS2::from(s[n].clone()), "n={n}");
    }
}

#[test]
fn even_q_moments_are_sqrt2_multiples() {
    let table = moment_table(&WeightSpec::q(), 20).unwrap();
    for (k, m) in table.moments().iter().enumerate() {
        if k % 2 == 1 {
            assert!(m.is_zero(), "mu_{k}");
        } else {
            assert!(m.rat_part().is_zero() && m.sign() > 0, "mu_{k}");
        }
    }
    // moment_q agrees with the table's incremental pushforward.
    for k in [0, 5, 10, 17] {
        assert_eq!(&moment_q(k), &table.moments()[k]);
    }
}

#[test]
fn degree_bookkeeping_of_mapping() {
    let gamma = deep_gamma();
    let p = recurrence_polys(gamma, 62).unwrap();
    let q = build_q_from_gamma(gamma, 21).unwrap();
    let t3 = cheb_t_monic(3);
    let u2 = cheb_u_monic(2);
    for n in 0..=20 {
        let lhs = &u2 * &p[3 * n + 1];
        let rhs = q[n + 1].compose(&t3);
        assert_eq!(lhs.degree(), Some(3 * n + 3));
        assert_eq!(rhs.degree(), Some(3 * n + 3));
        assert!(lhs.is_monic() && rhs.is_monic());
    }
}
