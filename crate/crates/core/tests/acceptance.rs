//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed.
//! Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use rootzeta::exact::{lemma42_identities_check, PiPolynomial, RationalPolynomial};
use rootzeta::funcrel::{
    catalog, closed_form_special, fr01_rhs, fr01_rhs_middle, section4_pieces, verify_catalog,
    verify_fr01, verify_funcrel_grid, Report,
};
use rootzeta::numeric::{
    clausen, lerch_sides, s_sum_g2, sigma11, sigma21, sigma_sharp, tornheim_a2, zeta_c2, zeta_g2,
    zeta_g2_int, ClausenKind, G2Exponents, HPReal, SummationConfig,
};
use rootzeta::roots::{
    functional_sum_terms, parabolic_transversal, reduction_terms, weyl_group, ExponentTuple,
    SignedTerm, SimpleSubset, WeylElement,
};
use rootzeta::symbolic::ZetaExpr;

type Check = Result<String, String>;
type Criterion = fn() -> Check;
/// Coefficient numerator, denominator and the zeta arguments of a product.
type Term = (i64, i64, &'static [u32]);

fn cfg() -> SummationConfig {
    SummationConfig::new(128, 1e-10, 1 << 20).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Rigorous: the true values differ by less than `tol`.
fn within(a: &HPReal, b: &HPReal, tol: f64) -> bool {
    a.distance(b) + a.error_bound() + b.error_bound() < tol
}

fn report_ok(r: &Report, tol: f64) -> bool {
    within(&r.lhs, &r.rhs, tol)
}

fn worst(reports: &[Report]) -> f64 {
    reports.iter().map(|r| r.diff).fold(0.0, f64::max)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `sum coef * prod zeta(n)` built by hand.
fn zeta_combo(terms: &[Term]) -> ZetaExpr {
    let mut e = ZetaExpr::zero();
    for &(n, d, zs) in terms {
        let mut t = ZetaExpr::constant(q(n, d));
        for &k in zs {
            t = &t * &ZetaExpr::zeta(k).unwrap();
        }
        e = &e + &t;
    }
    e
}

fn zhao() -> Check {
    let start = Instant::now();
    let v = zeta_g2(&G2Exponents([2.0, 1.0, 1.0, 1.0, 1.0, 1.0]), &cfg()).map_err(err)?;
    let elapsed = start.elapsed();
    let dev = (v.to_f64() - 0.0099527234).abs() + v.error_bound();
    ensure(
        dev <= 1e-8,
        format!("value {v} is {dev:e} from 0.0099527234"),
    )?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{} in {:.2?}", v.to_decimal(14), elapsed))
}

fn exact_catalog() -> Check {
    let cases: [([i64; 4], Vec<Term>); 7] = [
        ([1, 1, 1, 1], vec![(1, 18, &[2, 5]), (-109, 1296, &[7])]),
        (
            [2, 1, 1, 1],
            vec![(1, 18, &[4, 5]), (145, 648, &[2, 7]), (-19753, 46656, &[9])],
        ),
        (
            [1, 1, 1, 2],
            vec![(-187, 324, &[2, 7]), (11149, 11664, &[9])],
        ),
        (
            [2, 2, 1, 1],
            vec![
                (1, 18, &[4, 7]),
                (595, 648, &[2, 9]),
                (-73201, 46656, &[11]),
            ],
        ),
        (
            [1, 1, 3, 3],
            vec![
                (5, 4, &[4, 11]),
                (1043857, 23328, &[2, 13]),
                (-41971423, 559872, &[15]),
            ],
        ),
        (
            [2, 2, 1, 4],
            vec![
                (61441, 209952, &[4, 13]),
                (600677, 944784, &[2, 15]),
                (-23172773, 17006112, &[17]),
            ],
        ),
        (
            [1, 4, 2, 3],
            vec![
                (1, 8, &[4, 15]),
                (281221, 23328, &[2, 17]),
                (-11177971, 559872, &[19]),
            ],
        ),
    ];
    for ([a, b, c, d], terms) in &cases {
        let kv = closed_form_special(*a, *b, *c, *d).map_err(err)?;
        let want = zeta_combo(terms).normalize();
        ensure(
            kv.expr.normalize() == want,
            format!(
                "zeta2{} gave {} not {}",
                kv.args,
                kv.expr.display_form(),
                want.display_form()
            ),
        )?;
    }
    let half = fr01_rhs(1).map_err(err)?.scale(&q(1, 2)).normalize();
    let l1l6 = &ZetaExpr::l_chi3(1).unwrap() * &ZetaExpr::l_chi3(6).unwrap();
    let want =
        (&zeta_combo(&[(1, 2, &[2, 5]), (-109, 16, &[7])]) + &l1l6.scale(&q(81, 8))).normalize();
    ensure(half == want, format!("fr01_rhs(1)/2 = {half}"))?;
    Ok(format!(
        "{} closed forms and the L(1)L(6) value match exactly",
        cases.len() + 1
    ))
}

fn numeric_catalog() -> Check {
    let start = Instant::now();
    let reports = verify_catalog(&cfg(), 1e-8).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(
        reports.len() == catalog().map_err(err)?.len() && reports.len() == 8,
        "catalog size",
    )?;
    for r in &reports {
        ensure(
            report_ok(r, 1e-8),
            format!("{}: diff {:e}", r.target, r.diff),
        )?;
    }
    ensure(
        elapsed < Duration::from_secs(15 * 60),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "8/8 entries, max diff {:.1e}, {:.2?}",
        worst(&reports),
        elapsed
    ))
}

fn fr01_family() -> Check {
    let mut reports = Vec::new();
    for s in 1..=4 {
        let r = verify_fr01(s, &cfg(), 1e-8).map_err(err)?;
        ensure(report_ok(&r, 1e-8), format!("s = {s}: diff {:e}", r.diff))?;
        let a = fr01_rhs(s).map_err(err)?.normalize();
        let b = fr01_rhs_middle(s).map_err(err)?;
        ensure(a.equals(&b), format!("printed forms differ at s = {s}"))?;
        reports.push(r);
    }
    Ok(format!(
        "s = 1..4, max diff {:.1e}, printed forms equal",
        worst(&reports)
    ))
}

fn signed_sum(terms: &[SignedTerm], cfg: &SummationConfig) -> Result<HPReal, String> {
    let mut acc = HPReal::zero(cfg.working_precision());
    for t in terms {
        let v = zeta_g2_int(&t.exps, cfg).map_err(err)?;
        acc = if t.sign > 0 { &acc + &v } else { &acc - &v };
    }
    Ok(acc)
}

fn weyl_expansion() -> Check {
    let cfg = cfg();
    let mut pool: Vec<[i64; 6]> = (0..64u32)
        .map(|bits| std::array::from_fn(|i| 2 + ((bits >> i) & 1) as i64))
        .filter(|s: &[i64; 6]| s.iter().sum::<i64>() <= 15)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a2);
    let mut sample = Vec::new();
    while sample.len() < 20 {
        let i = rng.gen_range(0..pool.len());
        sample.push(pool.swap_remove(i));
    }
    let mut max_diff = 0f64;
    for s in &sample {
        let tuple = ExponentTuple(*s);
        for subset in [SimpleSubset::ONE, SimpleSubset::TWO] {
            let lhs = s_sum_g2(subset, &G2Exponents::from(&tuple), &cfg).map_err(err)?;
            let rhs = signed_sum(&functional_sum_terms(subset, &tuple), &cfg)?;
            ensure(within(&lhs, &rhs, 1e-8), format!("S{tuple} I = {subset}"))?;
            max_diff = max_diff.max(lhs.distance(&rhs));
        }
    }
    // (p,q,q,r,u,u) with p even, r odd; (p,q,r,r,p,u) with q even, u odd
    let w0 = WeylElement::longest();
    let reductions = [
        (SimpleSubset::TWO, 1, [2, 2, 2, 3, 2, 2]),
        (SimpleSubset::TWO, 1, [4, 2, 2, 3, 2, 2]),
        (SimpleSubset::TWO, 1, [2, 3, 3, 3, 2, 2]),
        (SimpleSubset::ONE, 2, [2, 2, 3, 3, 2, 3]),
        (SimpleSubset::ONE, 2, [3, 2, 2, 2, 3, 3]),
    ];
    for (subset, i, s) in reductions {
        let tuple = ExponentTuple(s);
        let w1 = w0.compose(&WeylElement::simple(i));
        let terms = reduction_terms(subset, &w1, &tuple).map_err(err)?;
        let want = vec![
            SignedTerm {
                sign: 1,
                exps: tuple
            };
            2
        ];
        ensure(
            terms == want,
            format!("reduction at {tuple} gave {terms:?}"),
        )?;
        let lhs = s_sum_g2(subset, &G2Exponents::from(&tuple), &cfg).map_err(err)?;
        let rhs = zeta_g2_int(&tuple, &cfg).map_err(err)?.scale(&q(2, 1));
        ensure(within(&lhs, &rhs, 1e-8), format!("S{tuple} != 2 zeta2"))?;
        max_diff = max_diff.max(lhs.distance(&rhs));
    }
    Ok(format!(
        "40 expansions and 5 reductions, max diff {max_diff:.1e}"
    ))
}

fn coefficient_tables() -> Check {
    let start = Instant::now();
    let reports = verify_funcrel_grid(&cfg(), 1e-6).map_err(err)?;
    ensure(
        reports.len() >= 50,
        format!("only {} instances", reports.len()),
    )?;
    for r in &reports {
        ensure(
            report_ok(r, 1e-6),
            format!("{}: diff {:e}", r.target, r.diff),
        )?;
    }
    Ok(format!(
        "{} relations, max diff {:.1e}, {:.2?}",
        reports.len(),
        worst(&reports),
        start.elapsed()
    ))
}

fn section4_chain() -> Check {
    let cfg = cfg();
    let mut max_diff = 0f64;
    let mut check = |label: String, a: &HPReal, b: &HPReal| -> Result<(), String> {
        max_diff = max_diff.max(a.distance(b));
        ensure(
            within(a, b, 1e-8),
            format!("{label}: diff {:e}", a.distance(b)),
        )
    };
    for s in 1..=3i64 {
        let sf = s as f64;
        let pieces = section4_pieces(s).map_err(err)?;
        let eval = |e: &ZetaExpr| e.eval_numeric(&cfg).map_err(err);

        let s21 = sigma21(sf, &cfg).map_err(err)?;
        let t = |a, b, c| tornheim_a2(a, b, c, &cfg).map_err(err);
        let a2 = &(&t(sf + 1.0, 4.0, 1.0)? + &t(4.0, 1.0, sf + 1.0)?) - &t(1.0, sf + 1.0, 4.0)?;
        check(format!("sigma21 split, s = {s}"), &s21, &a2)?;
        check(
            format!("sigma21 closed form, s = {s}"),
            &s21,
            &eval(&pieces.a2_combination)?,
        )?;

        let sharp = sigma_sharp(sf, &cfg).map_err(err)?;
        check(
            format!("sigma_sharp, s = {s}"),
            &sharp,
            &eval(&pieces.sigma_sharp)?,
        )?;

        let s11 = sigma11(sf, &cfg).map_err(err)?;
        check(format!("sigma11, s = {s}"), &s11, &eval(&pieces.sigma11)?)?;

        let combo = &s11.scale(&q(2, 1)) - &s21.scale(&q(5, 2));
        check(
            format!("weighted, s = {s}"),
            &combo,
            &eval(&pieces.weighted)?,
        )?;

        if s <= 2 {
            let c = |e: [f64; 4]| zeta_c2(e, &cfg).map_err(err);
            let c2 = &(&(&c([sf + 1.0, 3.0, 1.0, 1.0])? - &c([sf + 1.0, 1.0, 3.0, 1.0])?)
                + &c([1.0, 1.0, 3.0, sf + 1.0])?)
                - &c([1.0, 3.0, 1.0, sf + 1.0])?;
            check(format!("C2 split, s = {s}"), &s11, &c2)?;
        }
    }
    Ok(format!(
        "all pieces at s = 1..3, C2 split at s = 1, 2, max diff {max_diff:.1e}"
    ))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from((rng.gen_range(-1000i64..=1000), rng.gen_range(1i64..=500)))
}

fn exact_algebra() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..100 {
        let h = rng.gen_range(0..=5usize);
        let r: Vec<PiPolynomial> = (0..=2 * h)
            .map(|_| {
                let deg = rng.gen_range(0..=3usize);
                PiPolynomial(RationalPolynomial::new(
                    (0..=deg).map(|_| random_rational(&mut rng)).collect(),
                ))
            })
            .collect();
        ensure(
            lemma42_identities_check(&r, h),
            format!("lemma fails on trial {trial}"),
        )?;
    }

    let cfg = cfg().with_tol(1e-12);
    for k in 2..=4 {
        for theta in [q(0, 1), q(1, 4), q(1, 3), q(1, 2)] {
            let (lhs, rhs) = lerch_sides(k, &theta, &cfg).map_err(err)?;
            ensure(
                within(&lhs, &rhs, 1e-10),
                format!("Lerch k = {k}, theta = {theta}"),
            )?;
        }
    }

    let third = q(1, 3);
    for r in 5..=10u32 {
        let cos = clausen(ClausenKind::Cos, r, &third, &cfg).map_err(err)?;
        let cos_closed = ZetaExpr::zeta(r)
            .map_err(err)?
            .scale(&((Rational::from(1) / Rational::from(3u32.pow(r - 1)) - 1u32) / 2u32))
            .eval_numeric(&cfg)
            .map_err(err)?;
        ensure(
            within(&cos, &cos_closed, 1e-10),
            format!("cosine Clausen r = {r}"),
        )?;
        let sin = clausen(ClausenKind::Sin, r, &third, &cfg).map_err(err)?;
        let sin_closed = (&ZetaExpr::sqrt3() * &ZetaExpr::l_chi3(r).map_err(err)?)
            .scale(&q(1, 2))
            .eval_numeric(&cfg)
            .map_err(err)?;
        ensure(
            within(&sin, &sin_closed, 1e-10),
            format!("sine Clausen r = {r}"),
        )?;
    }
    Ok("100 lemma sequences, 12 Lerch cases, Clausen r = 5..10".into())
}

fn weyl_structure() -> Check {
    let w = weyl_group();
    ensure(w.len() == 12, format!("|W| = {}", w.len()))?;
    let words = |i| -> Vec<String> {
        parabolic_transversal(i)
            .iter()
            .map(|w| w.word_string())
            .collect()
    };
    let one = words(SimpleSubset::ONE);
    let two = words(SimpleSubset::TWO);
    ensure(one.len() == 6 && two.len() == 6, "|W^I| != 6")?;
    ensure(
        one == ["1", "s2", "s2s1", "s2s1s2", "s2s1s2s1", "s2s1s2s1s2"],
        format!("W^{{1}} = {one:?}"),
    )?;
    ensure(
        two == ["1", "s1", "s1s2", "s1s2s1", "s1s2s1s2", "s1s2s1s2s1"],
        format!("W^{{2}} = {two:?}"),
    )?;
    Ok("|W| = 12, both transversals match".into())
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("zhao value", zhao),
        ("exact catalog", exact_catalog),
        ("numeric catalog", numeric_catalog),
        ("I = {1} family", fr01_family),
        ("Weyl expansion and reductions", weyl_expansion),
        ("coefficient tables", coefficient_tables),
        ("partial sums chain", section4_chain),
        ("exact algebra", exact_algebra),
        ("Weyl structure", weyl_structure),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} [{elapsed:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why} [{elapsed:.1?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
