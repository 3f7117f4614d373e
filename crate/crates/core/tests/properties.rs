use proptest::prelude::*;
use rug::{Integer, Rational};

use rootzeta::exact::{
    bernoulli_number, bernoulli_polynomial, binomial, lemma42_identities_check, PiPolynomial,
    RationalPolynomial,
};
use rootzeta::numeric::{tornheim_a2, zeta_g2, ClausenKind, G2Exponents, SummationConfig};
use rootzeta::roots::{
    act_on_exponents, inversion_set, sign_product, weyl_group, ExponentTuple, WeylElement,
};
use rootzeta::symbolic::ZetaExpr;

fn falling_binomial(n: i64, k: u32) -> Rational {
    let mut num = Integer::from(1);
    for i in 0..k as i64 {
        num *= n - i;
    }
    let mut den = Integer::from(1);
    for i in 1..=k {
        den *= i;
    }
    Rational::from((num, den))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=30).prop_map(|(n, d)| Rational::from((n, d)))
}

fn pi_poly() -> impl Strategy<Value = PiPolynomial> {
    prop::collection::vec(rational(), 0..4).prop_map(|c| PiPolynomial(RationalPolynomial::new(c)))
}

fn factor() -> impl Strategy<Value = ZetaExpr> {
    prop_oneof![
        (2u32..9).prop_map(|n| ZetaExpr::zeta(n).unwrap()),
        (2u32..9).prop_map(|n| ZetaExpr::phi(n).unwrap()),
        (1u32..7).prop_map(|n| ZetaExpr::l_chi3(n).unwrap()),
        (1u32..4).prop_map(ZetaExpr::pi_pow),
        Just(ZetaExpr::sqrt3()),
        (2u32..7, 0i64..12, prop::bool::ANY).prop_map(|(r, k, sin)| {
            let kind = if sin {
                ClausenKind::Sin
            } else {
                ClausenKind::Cos
            };
            ZetaExpr::clausen(kind, r, &Rational::from((k, 6))).unwrap()
        }),
        (2u32..5, 1i64..5).prop_map(|(r, k)| {
            ZetaExpr::clausen(ClausenKind::Cos, r, &Rational::from((k, 5))).unwrap()
        }),
    ]
}

fn expr() -> impl Strategy<Value = ZetaExpr> {
    prop::collection::vec((rational(), prop::collection::vec(factor(), 0..3)), 0..4).prop_map(
        |terms| {
            let mut e = ZetaExpr::zero();
            for (c, fs) in terms {
                let mut t = ZetaExpr::constant(c);
                for f in &fs {
                    t = &t * f;
                }
                e = &e + &t;
            }
            e
        },
    )
}

fn cfg() -> SummationConfig {
    SummationConfig::new(128, 1e-12, 1 << 20).unwrap()
}

#[test]
fn binomial_matches_falling_factorial() {
    for n in -30..=30 {
        for k in 0..=15 {
            assert_eq!(binomial(n, k), falling_binomial(n, k), "({n} choose {k})");
        }
    }
}

#[test]
fn bernoulli_recurrence_and_endpoints() {
    for n in 1..=20usize {
        let mut acc = Rational::new();
        for k in 0..=n {
            acc += binomial(n as i64 + 1, k as u32) * bernoulli_number(k);
        }
        assert_eq!(acc, 0, "n = {n}");
    }
    for n in 0..=20usize {
        let b = bernoulli_polynomial(n);
        assert_eq!(b.eval(&Rational::new()), bernoulli_number(n));
        if n >= 2 {
            assert_eq!(
                b.eval(&Rational::from(1)),
                b.eval(&Rational::new()),
                "n = {n}"
            );
        }
    }
}

#[test]
fn weyl_action_is_a_group_action() {
    let s = [1u8, 2, 3, 4, 5, 6];
    let group = weyl_group();
    for v in &group {
        for w in &group {
            let vw = v.compose(w);
            assert_eq!(
                act_on_exponents(&vw, &s),
                act_on_exponents(v, &act_on_exponents(w, &s))
            );
        }
        assert_eq!(
            v.compose(&v.inverse()).matrix(),
            WeylElement::identity().matrix()
        );
        assert_eq!(inversion_set(v).len(), v.length());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lemma_identities_hold(r in prop::collection::vec(pi_poly(), 11), h in 0usize..=5) {
        prop_assert!(lemma42_identities_check(&r[..=2 * h], h));
    }

    #[test]
    fn sign_product_depends_on_parity(
        s in prop::array::uniform6(1i64..9),
        shift in prop::array::uniform6(0i64..3),
        w in 0usize..12,
    ) {
        let w = &weyl_group()[w];
        let t: [i64; 6] = std::array::from_fn(|i| s[i] + 2 * shift[i]);
        prop_assert_eq!(sign_product(w, &ExponentTuple(s)), sign_product(w, &ExponentTuple(t)));
    }

    #[test]
    fn normalize_is_idempotent(e in expr()) {
        let n = e.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        prop_assert_eq!(e.normalize_deep().normalize_deep(), e.normalize_deep());
    }

    #[test]
    fn ring_laws(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn normalize_preserves_value(e in expr()) {
        let cfg = cfg();
        let raw = e.eval_numeric(&cfg).unwrap();
        let norm = e.normalize().eval_numeric(&cfg).unwrap();
        let deep = e.normalize_deep().eval_numeric(&cfg).unwrap();
        let scale = 1.0 + raw.to_f64().abs();
        prop_assert!(raw.agrees_with(&norm, 1e-25 * scale), "{} vs {}", raw, norm);
        prop_assert!(raw.agrees_with(&deep, 1e-25 * scale), "{} vs {}", raw, deep);
    }

    #[test]
    fn tornheim_is_symmetric(a in 2u32..6, b in 2u32..6, c in 1u32..4) {
        let cfg = cfg().with_tol(1e-10);
        let x = tornheim_a2(a as f64, b as f64, c as f64, &cfg).unwrap();
        let y = tornheim_a2(b as f64, a as f64, c as f64, &cfg).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn zeta_g2_decreases_in_each_exponent(
        s in prop::array::uniform6(1u32..4),
        slot in 0usize..6,
    ) {
        let cfg = cfg().with_tol(1e-12);
        let mut s = s.map(f64::from);
        let deficit = (8.0 - s.iter().sum::<f64>()).max(0.0);
        s[(slot + 1) % 6] += deficit;
        let lo = zeta_g2(&G2Exponents(s), &cfg).unwrap();
        s[slot] += 1.0;
        let hi = zeta_g2(&G2Exponents(s), &cfg).unwrap();
        let gap = lo.to_f64() - hi.to_f64();
        prop_assert!(gap > lo.error_bound() + hi.error_bound(), "{} !> {}", lo, hi);
    }
}

#[test]
fn raising_the_outer_cap_stays_within_bounds() {
    let cfg = cfg().with_tol(1e-11);
    let doubled = SummationConfig {
        max_outer: 2 * cfg.max_outer,
        ..cfg.clone()
    };
    for s in [
        [2.0, 1.0, 1.0, 1.0, 1.0, 1.0],
        [1.0, 2.0, 2.0, 1.0, 1.0, 2.0],
    ] {
        let a = zeta_g2(&G2Exponents(s), &cfg).unwrap();
        let b = zeta_g2(&G2Exponents(s), &doubled).unwrap();
        assert!(a.distance(&b) <= a.error_bound() + b.error_bound());
    }
}
