//! Functional relations for the G2 zeta-function and the closed forms they
//! produce, plus a harness that checks symbolic results against lattice sums.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::binomial;
use crate::numeric::{s_sum_g2, zeta_g2_int, ClausenKind, G2Exponents, HPReal, SummationConfig};
use crate::roots::{
    functional_sum_terms, reduction_terms, ExponentTuple, SignedTerm, SimpleSubset, WeylElement,
};
use crate::symbolic::ZetaExpr;

/// Summation indices and parameters the coefficient tables depend on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableContext {
    pub k: i64,
    pub sigma: i64,
    pub rho: i64,
    pub omega: i64,
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub u: i64,
    pub v: i64,
}

/// `a_l(j)` for `l = 1..=12`, `j = 1..=8`.
pub fn a_coeff(l: usize, j: usize, c: &TableContext) -> Option<i64> {
    table(l, j, c, 2 * c.k + c.sigma, false)
}

/// `b_l(j)` for `l` in `{1, 4, 5, 7, 8, 11, 12}`, `j = 1..=8`.
pub fn b_coeff(l: usize, j: usize, c: &TableContext) -> Option<i64> {
    match l {
        1 | 11 | 12 => table(l, j, c, 1 + c.sigma, true),
        4 | 5 | 7 | 8 => table(l, j, c, 1 + c.sigma, false),
        _ => None,
    }
}

/// `t` stands for `2k + sigma` in the `a` tables and `1 + sigma` in the
/// `b` tables; `b_row` selects the separate `b_1`, `b_11`, `b_12` rows.
fn table(l: usize, j: usize, c: &TableContext, t: i64, b_row: bool) -> Option<i64> {
    if !(1..=8).contains(&j) {
        return None;
    }
    let TableContext {
        k,
        sigma: s,
        rho: r_,
        omega: w,
        p,
        q,
        r,
        u,
        v,
    } = *c;
    let row: [i64; 8] = match (l, b_row) {
        (1, false) => [1, v + 1, 1, v, v + 1, v, v, v + 1],
        (1, true) => [1, v + 1, 0, v, v + 1, v, v, v + 1],
        (2, _) => [p, u, q, u, r, u, r, u],
        (3, _) => [p, p, q, q, r, r, r, r],
        (4, _) => [t, 1, t, 1, t, 1, t, 1],
        (5, _) => [1, t, 1, t, 1, t, 1, t],
        (6, _) => [p, p, q, q, p, p, q, q],
        (7, _) => [t + r_, 1 + r_, t + r_, 1 + r_, 1, 1, 1, 1],
        (8, _) => [1, 1, 1, 1, t + r_, 1 + r_, t + r_, 1 + r_],
        (9, _) => [q, q, p, p, q, q, p, p],
        (10, _) => [0, 0, s + r_ + w, r_ + w, r_, r_, r_ + w, r_ + w],
        (11, false) => [
            s - r - w,
            s - r - w,
            s - u - r_,
            -u + 2 * k + 2 * s - r_ - 1,
            -r + 2 * k + 2 * s + r_ - w - 1,
            -r + s + r_ - w,
            s,
            s,
        ],
        (11, true) => [
            s - r - w,
            s - r - w,
            s - u - r_,
            -u + 2 * s - r_,
            -r + 2 * s + r_ - w,
            -r + s + r_ - w,
            s,
            s,
        ],
        (12, false) => [
            -u - v - s - r_,
            -u - v + 2 * k - r_ - 1,
            0,
            -v - s,
            0,
            -v - s,
            0,
            -v - s,
        ],
        (12, true) => [
            -u - v + 2 * k - s - r_ - 1,
            -u - v + 2 * k - r_ - 1,
            0,
            -v + 2 * k - s - 1,
            0,
            -v + 2 * k - s - 1,
            0,
            -v + 2 * k - s - 1,
        ],
        _ => return None,
    };
    Some(row[j - 1])
}

fn pow_q(base: i64, e: i64) -> Rational {
    Rational::from(base).pow(e as i32)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn binom(n: i64, k: i64) -> Rational {
    if k < 0 {
        Rational::new()
    } else {
        binomial(n, k as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Tail {
    Zeta,
    Phi,
}

/// Coefficients of `zeta(2k) * zeta(N)` and `zeta(2k) * phi(N)`, keyed by
/// `(k, tail, N - s)`.
type Accumulator = BTreeMap<(i64, Tail, i64), Rational>;

fn check_params(params: [i64; 5]) -> Result<()> {
    if params.iter().any(|&x| x < 1) {
        return Err(Error::InvalidInput(format!(
            "p, q, r, u, v must be positive, got {params:?}"
        )));
    }
    Ok(())
}

fn accumulate_ij(j: usize, params: [i64; 5], acc: &mut Accumulator) -> Result<()> {
    if !(1..=8).contains(&j) {
        return Err(Error::InvalidInput(format!("j must lie in 1..=8, got {j}")));
    }
    let [p, q, r, u, v] = params;
    let weight = p + q + r + u + v;
    let base = TableContext {
        p,
        q,
        r,
        u,
        v,
        ..TableContext::default()
    };
    let a = |l: usize, c: &TableContext| a_coeff(l, j, c).expect("valid table index");
    let b = |l: usize, c: &TableContext| b_coeff(l, j, c).expect("valid table index");
    let (a2, a3, a6, a9) = (a(2, &base), a(3, &base), a(6, &base), a(9, &base));

    // A_j
    let outer = 2 * sign(p + a(1, &base));
    for k in 0..=a2 / 2 {
        for sigma in 0..=(a2 - 2 * k) {
            let c = TableContext { k, sigma, ..base };
            let f_sigma = binom(sigma + v - 1, sigma);
            for rho in 0..=(a3 - a(4, &c)) {
                let c = TableContext { rho, ..c };
                let f_rho = binom(rho + u - a(5, &c), rho);
                for omega in 0..=(a6 - a(7, &c)) {
                    let c = TableContext { omega, ..c };
                    let term = Rational::from(&f_sigma * &f_rho)
                        * binom(omega + r - a(8, &c), omega)
                        * binom(p + q - 1 - omega - a(7, &c), a9 - 1)
                        * sign(a(10, &c))
                        * pow_q(2, a(11, &c))
                        * pow_q(3, a(12, &c))
                        * outer;
                    *acc.entry((k, Tail::Zeta, weight - 2 * k)).or_default() += term;
                }
            }
        }
    }

    // B_1j and B_2j
    let outer = 2 * sign(p + b(1, &base));
    for second in [false, true] {
        let k_max = if second { (v + 1) / 2 } else { v / 2 };
        for k in 0..=k_max {
            let weight_k = if second {
                1 - pow_q(2, -2 * k)
            } else {
                pow_q(2, -2 * k)
            };
            if weight_k == 0 {
                continue;
            }
            for sigma in 0..a2 {
                let c = TableContext { k, sigma, ..base };
                let f_sigma = binom(sigma + v - 2 * k, sigma);
                for rho in 0..=(a3 - b(4, &c)) {
                    let c = TableContext { rho, ..c };
                    let f_rho = binom(rho + u - b(5, &c), rho);
                    for omega in 0..=(a6 - b(7, &c)) {
                        let c = TableContext { omega, ..c };
                        let term = Rational::from(&f_sigma * &f_rho)
                            * binom(omega + r - b(8, &c), omega)
                            * binom(p + q - 1 - omega - b(7, &c), a9 - 1)
                            * sign(a(10, &c))
                            * pow_q(2, b(11, &c))
                            * pow_q(3, b(12, &c))
                            * &weight_k
                            * outer;
                        let key = weight - 2 * k;
                        let phi_term = if second {
                            Rational::from(-&term)
                        } else {
                            term.clone()
                        };
                        *acc.entry((k, Tail::Zeta, key)).or_default() += term;
                        *acc.entry((k, Tail::Phi, key)).or_default() += phi_term;
                    }
                }
            }
        }
    }
    Ok(())
}

fn accumulator_to_expr(acc: &Accumulator, s: i64) -> Result<ZetaExpr> {
    let mut out = ZetaExpr::zero();
    for ((k, tail, offset), c) in acc {
        if *c == 0 {
            continue;
        }
        let arg = s + offset;
        if arg < 2 {
            return Err(Error::ArgumentOutOfRange(format!(
                "zeta/phi argument {arg} < 2 at k = {k}, s = {s}"
            )));
        }
        let even = ZetaExpr::zeta(2 * *k as u32)?;
        let tail = match tail {
            Tail::Zeta => ZetaExpr::zeta(arg as u32)?,
            Tail::Phi => ZetaExpr::phi(arg as u32)?,
        };
        out = &out + &(&even * &tail).scale(c);
    }
    Ok(out)
}

/// `I_j = A_j + B_1j + B_2j` at integer `s`, in terms of `zeta` and `phi`
/// (not normalized).
pub fn compute_ij(j: usize, p: i64, q: i64, r: i64, u: i64, v: i64, s: i64) -> Result<ZetaExpr> {
    let params = [p, q, r, u, v];
    check_params(params)?;
    let mut acc = Accumulator::new();
    accumulate_ij(j, params, &mut acc)?;
    accumulator_to_expr(&acc, s)
}

/// `I_1 + ... + I_8`, not normalized.
pub fn sum_ij(p: i64, q: i64, r: i64, u: i64, v: i64, s: i64) -> Result<ZetaExpr> {
    let params = [p, q, r, u, v];
    check_params(params)?;
    let mut acc = Accumulator::new();
    for j in 1..=8 {
        accumulate_ij(j, params, &mut acc)?;
    }
    accumulator_to_expr(&acc, s)
}

/// Integer instantiation of the free variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeVar {
    /// 0-based slot of `s` in the first left-hand tuple.
    pub slot: usize,
    pub value: i64,
}

/// `sum sign * zeta_2(lhs; G2) = rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Vec<SignedTerm>,
    pub rhs: ZetaExpr,
    pub free_var_slot: Option<FreeVar>,
}

/// The six signed tuples of the `I = {2}` relation with `s` in place.
pub fn fn_rel_lhs(p: i64, q: i64, r: i64, u: i64, v: i64, s: i64) -> Vec<SignedTerm> {
    let term = |e: i64, exps: [i64; 6]| SignedTerm {
        sign: sign(e),
        exps: ExponentTuple(exps),
    };
    vec![
        term(0, [p, s, q, r, u, v]),
        term(p, [p, q, s, r, v, u]),
        term(p + q, [v, q, r, s, p, u]),
        term(p + q + v, [v, r, q, s, u, p]),
        term(p + q + r + v, [u, r, s, q, v, p]),
        term(p + q + r + u + v, [u, s, r, q, p, v]),
    ]
}

/// The relation at integer `s`, with `rhs = -(I_1 + ... + I_8)` normalized.
pub fn fn_rel(p: i64, q: i64, r: i64, u: i64, v: i64, s: i64) -> Result<Relation> {
    if s < 1 {
        return Err(Error::ArgumentOutOfRange(format!(
            "s must be >= 1, got {s}"
        )));
    }
    let rhs = (-&sum_ij(p, q, r, u, v, s)?).normalize();
    Ok(Relation {
        lhs: fn_rel_lhs(p, q, r, u, v, s),
        rhs,
        free_var_slot: Some(FreeVar { slot: 1, value: s }),
    })
}

/// A tuple with an exact value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KnownValue {
    pub args: ExponentTuple,
    pub expr: ZetaExpr,
    pub source: String,
}

/// `w0 s1`, the element whose coset reduction gives the factor 2 for
/// `I = {2}`.
pub fn w0_s1() -> WeylElement {
    WeylElement::longest().compose(&WeylElement::simple(1))
}

/// `zeta_2(2a, b, b, 2c-1, d, d; G2)` in closed form.
pub fn closed_form_special(a: i64, b: i64, c: i64, d: i64) -> Result<KnownValue> {
    if [a, b, c, d].iter().any(|&x| x < 1) {
        return Err(Error::InvalidInput(format!(
            "a, b, c, d must be positive, got ({a}, {b}, {c}, {d})"
        )));
    }
    let args = ExponentTuple([2 * a, b, b, 2 * c - 1, d, d]);
    let kept = reduction_terms(SimpleSubset::TWO, &w0_s1(), &args)?;
    if kept.len() != 2 || kept.iter().any(|t| t.sign != 1 || t.exps != args) {
        return Err(Error::HypothesisViolated(format!(
            "the symmetrized sum at {args} does not reduce to 2 zeta_2"
        )));
    }
    let rel = fn_rel(2 * a, b, 2 * c - 1, d, d, b)?;
    Ok(KnownValue {
        args,
        expr: rel.rhs.scale(&Rational::from((1, 2))),
        source: format!("closed_form_special({a},{b},{c},{d})"),
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn zeta(n: i64) -> ZetaExpr {
    ZetaExpr::zeta(n as u32).expect("argument >= 2")
}

fn lchi(n: i64) -> ZetaExpr {
    ZetaExpr::l_chi3(n as u32).expect("argument >= 1")
}

/// Right-hand side of the `I = {1}` relation for `(s, 2, 1, 1, 1, 1)`:
/// `zeta(2) zeta(s+4) - (111/8 - 2^{-s-1}) zeta(s+6) + 81/4 L(1) L(s+5)`.
pub fn fr01_rhs(s: i64) -> Result<ZetaExpr> {
    if s < 1 {
        return Err(Error::ArgumentOutOfRange(format!(
            "s must be >= 1, got {s}"
        )));
    }
    let c6 = q(111, 8) - pow_q(2, -s - 1);
    Ok(&(&(&zeta(2) * &zeta(s + 4)) - &zeta(s + 6).scale(&c6))
        + &(&lchi(1) * &lchi(s + 5)).scale(&q(81, 4)))
}

/// The same right-hand side before the Clausen values are reduced.
pub fn fr01_rhs_middle(s: i64) -> Result<ZetaExpr> {
    if s < 1 {
        return Err(Error::ArgumentOutOfRange(format!(
            "s must be >= 1, got {s}"
        )));
    }
    let c6 = q(651, 8) - pow_q(2, -s - 1) - pow_q(3, -s - 2) * q(5, 2);
    let third = q(1, 3);
    let sin = ZetaExpr::clausen(ClausenKind::Sin, (s + 5) as u32, &third)?;
    let cos = ZetaExpr::clausen(ClausenKind::Cos, (s + 6) as u32, &third)?;
    let mut e = &(&zeta(2) * &zeta(s + 4)) - &zeta(s + 6).scale(&c6);
    e = &e + &(&ZetaExpr::pi_pow(1) * &sin).scale(&q(9, 2));
    e = &e - &cos.scale(&q(135, 1));
    Ok(e)
}

/// Closed forms of the partial sums met while reducing the `I = {1}` sum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section4Pieces {
    /// `sum_{m>=1, n!=0, m+2n!=0} m^{-s-1} n^{-4} (m+2n)^{-1}`
    pub sigma_sharp: ZetaExpr,
    /// `sum m^{-s-1} n^{-3} (m+n)^{-1} (m+2n)^{-1}` over `m >= 1` and nonvanishing forms
    pub sigma11: ZetaExpr,
    /// `sigma11 + sigma_sharp + (1 + 2^{-s-1}) zeta(s+6)`
    pub sigma21: ZetaExpr,
    /// `T(s+1,4,1) + T(4,1,s+1) - T(1,s+1,4)` with `T` the Tornheim sum
    pub a2_combination: ZetaExpr,
    /// `2 sigma11 - 5/2 sigma21` as a closed form
    pub weighted: ZetaExpr,
}

pub fn section4_pieces(s: i64) -> Result<Section4Pieces> {
    if s < 1 {
        return Err(Error::ArgumentOutOfRange(format!(
            "s must be >= 1, got {s}"
        )));
    }
    let pi2 = ZetaExpr::pi_pow(2);
    let pi4 = ZetaExpr::pi_pow(4);
    let sigma_sharp = &(&(&pi4 * &zeta(s + 2)).scale(&q(1, 45))
        + &(&pi2 * &zeta(s + 4)).scale(&q(4, 3)))
        - &zeta(s + 6).scale(&(q(16, 1) + pow_q(2, -s)));
    let sigma11 = &(-&(&pi2 * &zeta(s + 4))) + &zeta(s + 6).scale(&(q(10, 1) + pow_q(2, -s - 1)));
    let sigma21 = &(&sigma11 + &sigma_sharp) + &zeta(s + 6).scale(&(q(1, 1) + pow_q(2, -s - 1)));
    let a2_combination = &(&zeta(s + 6).scale(&q(-5, 1))
        + &(&zeta(2) * &zeta(s + 4)).scale(&q(2, 1)))
        + &(&zeta(4) * &zeta(s + 2)).scale(&q(2, 1));
    let weighted = &(&(&pi4 * &zeta(s + 2)).scale(&q(-1, 18))
        - &(&pi2 * &zeta(s + 4)).scale(&q(17, 6)))
        + &zeta(s + 6).scale(&(q(65, 2) + pow_q(2, -s)));
    Ok(Section4Pieces {
        sigma_sharp,
        sigma11,
        sigma21,
        a2_combination,
        weighted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Derivation {
    ClosedForm([i64; 4]),
    Fr01Half(i64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub args: [i64; 6],
    pub derivation: Derivation,
    pub expr: ZetaExpr,
}

/// The catalog shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog.json");

fn derive(d: &Derivation) -> Result<KnownValue> {
    match *d {
        Derivation::ClosedForm([a, b, c, dd]) => closed_form_special(a, b, c, dd),
        Derivation::Fr01Half(s) => {
            if s != 1 {
                return Err(Error::InvalidInput(
                    "only s = 1 halves to a single zeta_2 value".into(),
                ));
            }
            Ok(KnownValue {
                args: ExponentTuple([1, 2, 1, 1, 1, 1]),
                expr: fr01_rhs(1)?.scale(&q(1, 2)),
                source: "fr01_rhs(1)/2".into(),
            })
        }
    }
}

/// Parses a catalog and re-derives every entry, failing on any difference.
pub fn load_catalog(json: &str) -> Result<Vec<KnownValue>> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(json)?;
    entries
        .iter()
        .map(|e| {
            let derived = derive(&e.derivation)?;
            if derived.args.0 != e.args {
                return Err(Error::CatalogMismatch(format!(
                    "{}: stored args {:?}, derivation gives {}",
                    e.name, e.args, derived.args
                )));
            }
            if !derived.expr.equals(&e.expr) {
                return Err(Error::CatalogMismatch(format!(
                    "{}: stored {} but derived {}",
                    e.name,
                    e.expr,
                    derived.expr.display_form()
                )));
            }
            Ok(KnownValue {
                args: derived.args,
                expr: e.expr.clone(),
                source: format!("{} = {}", e.name, derived.source),
            })
        })
        .collect()
}

pub fn catalog() -> Result<Vec<KnownValue>> {
    load_catalog(BUNDLED_CATALOG)
}

/// Outcome of one numeric comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub target: String,
    pub lhs: HPReal,
    pub rhs: HPReal,
    pub diff: f64,
    pub tol: f64,
    pub pass: bool,
    pub wall_ms: f64,
}

impl Report {
    fn new(target: String, lhs: HPReal, rhs: HPReal, tol: f64, start: Instant) -> Self {
        let diff = lhs.distance(&rhs);
        let pass = lhs.agrees_with(&rhs, tol);
        Report {
            target,
            lhs,
            rhs,
            diff,
            tol,
            pass,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn signed_sum(terms: &[SignedTerm], cfg: &SummationConfig) -> Result<HPReal> {
    let mut acc = HPReal::zero(cfg.working_precision());
    for t in terms {
        let v = zeta_g2_int(&t.exps, cfg)?;
        acc = if t.sign > 0 { &acc + &v } else { &acc - &v };
    }
    Ok(acc)
}

/// `zeta_2(args)` against the closed form.
pub fn verify_known(kv: &KnownValue, cfg: &SummationConfig, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let lhs = zeta_g2_int(&kv.args, cfg)?;
    let rhs = kv.expr.eval_numeric(cfg)?;
    Ok(Report::new(
        format!("zeta2{}", kv.args),
        lhs,
        rhs,
        tol,
        start,
    ))
}

/// Signed lattice sums against the closed right-hand side.
pub fn verify_relation(rel: &Relation, cfg: &SummationConfig, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let lhs = signed_sum(&rel.lhs, cfg)?;
    let rhs = rel.rhs.eval_numeric(cfg)?;
    let target = match (rel.lhs.first(), rel.free_var_slot) {
        (Some(t), Some(fv)) => format!("relation{} at s = {}", t.exps, fv.value),
        (Some(t), None) => format!("relation{}", t.exps),
        _ => "relation".into(),
    };
    Ok(Report::new(target, lhs, rhs, tol, start))
}

/// The `I = {1}` lattice sum at `(s, 2, 1, 1, 1, 1)` against its closed form.
pub fn verify_fr01(s: i64, cfg: &SummationConfig, tol: f64) -> Result<Report> {
    let start = Instant::now();
    let exps = G2Exponents([s as f64, 2.0, 1.0, 1.0, 1.0, 1.0]);
    let lhs = s_sum_g2(SimpleSubset::ONE, &exps, cfg)?;
    let rhs = fr01_rhs(s)?.eval_numeric(cfg)?;
    Ok(Report::new(
        format!("fr01 at s = {s}"),
        lhs,
        rhs,
        tol,
        start,
    ))
}

/// The symmetrized sum `S(s, I)` against its expansion over `W^I`.
pub fn verify_weyl(
    subset: SimpleSubset,
    s: &ExponentTuple,
    cfg: &SummationConfig,
    tol: f64,
) -> Result<Report> {
    let start = Instant::now();
    let lhs = s_sum_g2(subset, &G2Exponents::from(s), cfg)?;
    let rhs = signed_sum(&functional_sum_terms(subset, s), cfg)?;
    Ok(Report::new(
        format!("S{s} I = {subset}"),
        lhs,
        rhs,
        tol,
        start,
    ))
}

/// The `I = {2}` relation at every `(p, q, r, u, v)` in `{1, 2}^5` and
/// `s` in `{1, 2, 3}` whose total weight is at least 7.
pub fn funcrel_grid() -> Vec<([i64; 5], i64)> {
    let mut out = Vec::new();
    for bits in 0..32u32 {
        let params: [i64; 5] = std::array::from_fn(|i| 1 + ((bits >> (4 - i)) & 1) as i64);
        for s in 1..=3 {
            if params.iter().sum::<i64>() + s >= 7 {
                out.push((params, s));
            }
        }
    }
    out
}

/// Tuples for the symmetrized-sum checks.
pub fn weyl_grid() -> Vec<ExponentTuple> {
    [
        [2, 2, 2, 2, 2, 2],
        [2, 3, 2, 2, 2, 2],
        [3, 2, 2, 3, 2, 2],
        [2, 2, 3, 2, 3, 2],
        [3, 3, 2, 2, 2, 3],
        [2, 1, 1, 1, 1, 1],
        [1, 2, 1, 1, 1, 2],
    ]
    .into_iter()
    .map(ExponentTuple)
    .collect()
}

pub fn verify_values(
    values: &[KnownValue],
    cfg: &SummationConfig,
    tol: f64,
) -> Result<Vec<Report>> {
    values
        .par_iter()
        .map(|kv| verify_known(kv, cfg, tol))
        .collect()
}

pub fn verify_catalog(cfg: &SummationConfig, tol: f64) -> Result<Vec<Report>> {
    verify_values(&catalog()?, cfg, tol)
}

pub fn verify_funcrel_grid(cfg: &SummationConfig, tol: f64) -> Result<Vec<Report>> {
    funcrel_grid()
        .par_iter()
        .map(|&([p, q, r, u, v], s)| verify_relation(&fn_rel(p, q, r, u, v, s)?, cfg, tol))
        .collect()
}

pub fn verify_weyl_grid(cfg: &SummationConfig, tol: f64) -> Result<Vec<Report>> {
    let cases: Vec<(SimpleSubset, ExponentTuple)> = weyl_grid()
        .into_iter()
        .flat_map(|s| [(SimpleSubset::ONE, s), (SimpleSubset::TWO, s)])
        .collect();
    cases
        .par_iter()
        .map(|(i, s)| verify_weyl(*i, s, cfg, tol))
        .collect()
}
