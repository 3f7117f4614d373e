//! One-variable constants: pi, the Riemann zeta function, the alternating
//! zeta function, `L(s, chi_3)` and Clausen-type sums.
//!
//! All Dirichlet series here have periodic coefficients and are evaluated by
//! a single Euler-Maclaurin routine on each residue class.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::{Deserialize, Serialize};

use super::{abs_up, unit_roundoff, up, HPReal, SummationConfig};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, bernoulli_polynomial};

/// Number of Euler-Maclaurin correction terms.
const EM_TERMS: usize = 8;

fn atan_inv(x: u32, prec: u32) -> Float {
    // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    let x2 = Integer::from(x) * x;
    let mut power = Float::with_val(prec, 1) / x;
    let mut sum = Float::with_val(prec, &power);
    let stop = -(prec as i32) - 4;
    let mut k = 1u32;
    loop {
        power /= &x2;
        if power.get_exp().is_none_or(|e| e < stop) {
            break;
        }
        let term = Float::with_val(prec, &power / (2 * k + 1));
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    sum
}

/// Pi to `prec` bits by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> Float {
    static CACHE: OnceLock<Mutex<HashMap<u32, Float>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("pi cache poisoned").get(&prec) {
        return v.clone();
    }
    let wp = prec + 24;
    let a = atan_inv(5, wp) << 4;
    let b = atan_inv(239, wp) << 2;
    let v = Float::with_val(prec, a - b);
    cache
        .lock()
        .expect("pi cache poisoned")
        .insert(prec, v.clone());
    v
}

pub(crate) fn pi_hp(prec: u32) -> HPReal {
    // Series truncation and rounding at prec + 24 bits are far below one ulp.
    HPReal::new(pi(prec), up(4.0 * unit_roundoff(prec)))
}

/// `s (s+1) ... (s+n-1)` in `f64`.
fn rising_f64(s: f64, n: usize) -> f64 {
    (0..n).map(|i| s + i as f64).product()
}

fn em_coefficients(prec: u32) -> Vec<Float> {
    // B_{2j} / (2j)! for j = 1..=EM_TERMS
    (1..=EM_TERMS)
        .map(|j| {
            let b = bernoulli_number(2 * j);
            let f = Integer::from(Integer::factorial(2 * j as u32));
            Float::with_val(prec, b / Rational::from(f))
        })
        .collect()
}

fn em_remainder_coefficient() -> f64 {
    let b = bernoulli_number(2 * EM_TERMS);
    let f = Integer::from(Integer::factorial(2 * EM_TERMS as u32));
    up((b / Rational::from(f)).abs().to_f64())
}

/// `sum_{k >= 0} (k q + c)^{-s}`, with the divergent constant dropped when
/// `s == 1` (the caller guarantees the weights cancel it).
///
/// Returns the value, the truncation remainder bound and the sum of absolute
/// values of all parts (for rounding analysis).
fn residue_class_sum(q: u32, c: u32, s: f64, tol: f64, wp: u32) -> (Float, f64, f64) {
    let qf = q as f64;
    let rem_coeff = em_remainder_coefficient();
    let remainder = |n: u64| -> f64 {
        let x = n as f64 * qf + c as f64;
        let log = rem_coeff.ln()
            + (2 * EM_TERMS - 1) as f64 * qf.ln()
            + rising_f64(s, 2 * EM_TERMS - 1).ln()
            - (s + (2 * EM_TERMS - 1) as f64) * x.ln();
        up(log.exp() * 1.0001)
    };
    let mut n = (s.ceil() as u64).max(4);
    while remainder(n) > tol {
        n *= 2;
    }
    let s_f = Float::with_val(wp, s);
    let neg_s = Float::with_val(wp, -&s_f);
    let mut sum = Float::new(wp);
    let mut abs_sum = 0.0;
    for k in 0..n {
        let base = Float::with_val(wp, k * q as u64 + c as u64);
        let t = base.pow(&neg_s);
        abs_sum += t.to_f64();
        sum += t;
    }
    let x = Float::with_val(wp, n * q as u64 + c as u64);
    let x_neg_s = Float::with_val(wp, (&x).pow(&neg_s));
    // integral of (t q + c)^{-s} over [n, inf)
    let integral = if s == 1.0 {
        -Float::with_val(wp, x.ln_ref()) / q
    } else {
        Float::with_val(wp, &x_neg_s * &x) / (q as f64 * (s - 1.0))
    };
    abs_sum += abs_up(&integral);
    sum += &integral;
    let half = Float::with_val(wp, &x_neg_s / 2u32);
    abs_sum += half.to_f64();
    sum += half;
    let coeffs = em_coefficients(wp);
    let x2 = Float::with_val(wp, &x * &x);
    let mut x_pow = Float::with_val(wp, &x_neg_s / &x);
    let mut rising = Float::with_val(wp, &s_f);
    let mut q_pow = Float::with_val(wp, q);
    let q2 = Float::with_val(wp, q * q);
    for (j, b) in coeffs.iter().enumerate() {
        let term = Float::with_val(wp, b * &rising) * &q_pow * &x_pow;
        abs_sum += abs_up(&term);
        sum += term;
        // advance rising factorial by two factors, q^{2j-1} and x^{-s-2j+1}
        let a = 2 * j as u32 + 1;
        rising *= Float::with_val(wp, &s_f + a);
        rising *= Float::with_val(wp, &s_f + (a + 1));
        q_pow *= &q2;
        x_pow /= &x2;
    }
    let count = (n as f64) + 2.0 * EM_TERMS as f64 + 8.0;
    let rounding = up(4.0 * count * unit_roundoff(wp) * abs_sum);
    (sum, up(remainder(n) + rounding), abs_sum)
}

/// A weight on a residue class: exact zero classes are skipped.
struct Weight {
    value: Float,
    error: f64,
}

/// `sum_{n >= 1} w(n) n^{-s}` for weights with period `weights.len()`.
fn periodic_series(weights: &[Weight], s: f64, tol: f64, wp: u32) -> HPReal {
    let q = weights.len() as u32;
    let total_weight: f64 = weights
        .iter()
        .map(|w| abs_up(&w.value))
        .sum::<f64>()
        .max(1.0);
    let per_class_tol = tol / (4.0 * total_weight);
    let mut sum = Float::new(wp);
    let mut err = 0.0;
    let mut abs_sum = 0.0;
    for (i, w) in weights.iter().enumerate() {
        if w.value.is_zero() && w.error == 0.0 {
            continue;
        }
        let (h, h_err, _) = residue_class_sum(q, i as u32 + 1, s, per_class_tol, wp);
        let term = Float::with_val(wp, &w.value * &h);
        abs_sum += abs_up(&term);
        err += abs_up(&w.value) * h_err + w.error * (abs_up(&h) + h_err);
        sum += term;
    }
    err += 4.0 * (q as f64 + 2.0) * unit_roundoff(wp) * abs_sum;
    HPReal::new(sum, up(err))
}

fn exact_weight(v: i32, wp: u32) -> Weight {
    Weight {
        value: Float::with_val(wp, v),
        error: 0.0,
    }
}

fn check_cfg(cfg: &SummationConfig) -> Result<u32> {
    cfg.validate()?;
    Ok(cfg.working_precision())
}

/// `zeta(s)` for real `s > 1`; `zeta(0) = -1/2` exactly.
pub fn riemann_zeta(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    let wp = check_cfg(cfg)?;
    if s == 0.0 {
        return Ok(HPReal::exact(Float::with_val(wp, -0.5)));
    }
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::Domain(format!(
            "zeta(s) needs s > 1 or s = 0, got {s}"
        )));
    }
    Ok(periodic_series(
        &[exact_weight(1, wp)],
        s,
        cfg.target_tol,
        wp,
    ))
}

/// `phi(s) = sum (-1)^m m^{-s} = (2^{1-s} - 1) zeta(s)`; `phi(0) = -1/2`.
pub fn phi(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    let wp = check_cfg(cfg)?;
    if s == 0.0 {
        return Ok(HPReal::exact(Float::with_val(wp, -0.5)));
    }
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::Domain(format!(
            "phi(s) needs s > 1 or s = 0, got {s}"
        )));
    }
    let z = riemann_zeta(s, &cfg.with_tol(cfg.target_tol / 2.0))?;
    let two = Float::with_val(wp, 2);
    let factor = Float::with_val(wp, two.pow(Float::with_val(wp, 1.0 - s))) - 1u32;
    let f = HPReal::new(
        factor.clone(),
        up(abs_up(&factor) * 4.0 * unit_roundoff(wp)),
    );
    Ok(&f * &z)
}

/// `L(s, chi_3)` for real `s >= 1`.
pub fn dirichlet_l_chi3(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    let wp = check_cfg(cfg)?;
    if !(s.is_finite() && s >= 1.0) {
        return Err(Error::Domain(format!("L(s, chi_3) needs s >= 1, got {s}")));
    }
    let weights = [
        exact_weight(1, wp),
        exact_weight(-1, wp),
        exact_weight(0, wp),
    ];
    Ok(periodic_series(&weights, s, cfg.target_tol, wp))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClausenKind {
    Sin,
    Cos,
}

fn clausen_weights(kind: ClausenKind, j: &Integer, q: u32, wp: u32) -> Vec<Weight> {
    let qi = Integer::from(q);
    let pi2 = Float::with_val(wp + 16, pi(wp + 16) << 1);
    (1..=q)
        .map(|c| {
            let t = Integer::from(j * c) % &qi;
            let t = t.to_u32().expect("residue fits");
            // exact values on the quarter lattice
            let quarter = 4 * t % q == 0;
            if quarter {
                let idx = 4 * t / q; // angle = idx * pi / 2
                let (cos, sin) = match idx {
                    0 => (1, 0),
                    1 => (0, 1),
                    2 => (-1, 0),
                    _ => (0, -1),
                };
                return exact_weight(if kind == ClausenKind::Cos { cos } else { sin }, wp);
            }
            let angle = Float::with_val(wp + 16, &pi2 * t) / q;
            let v = match kind {
                ClausenKind::Cos => Float::with_val(wp, angle.cos_ref()),
                ClausenKind::Sin => Float::with_val(wp, angle.sin_ref()),
            };
            Weight {
                value: v,
                error: up(4.0 * unit_roundoff(wp)),
            }
        })
        .collect()
}

/// `S_r(x) = sum sin(2 pi m x) / m^r` or `C_r(x) = sum cos(2 pi m x) / m^r`
/// for rational `x` in `[0, 1)`.
pub fn clausen(kind: ClausenKind, r: u32, x: &Rational, cfg: &SummationConfig) -> Result<HPReal> {
    let wp = check_cfg(cfg)?;
    if *x < 0 || *x >= 1 {
        return Err(Error::Domain(format!(
            "Clausen argument must lie in [0, 1), got {x}"
        )));
    }
    match (kind, r) {
        (_, 0) => return Err(Error::Domain("Clausen order must be positive".into())),
        (ClausenKind::Cos, 1) => {
            return Err(Error::Domain("C_1(x) does not converge absolutely".into()))
        }
        (ClausenKind::Sin, 1) if *x == 0 => {
            return Err(Error::Domain("S_1(x) requires x != 0".into()))
        }
        _ => {}
    }
    let q = x
        .denom()
        .to_u32()
        .ok_or_else(|| Error::Domain("denominator too large".into()))?;
    let weights = clausen_weights(kind, x.numer(), q, wp);
    Ok(periodic_series(&weights, r as f64, cfg.target_tol, wp))
}

fn fractional_part(theta: &Rational) -> Rational {
    let floor = Integer::from(theta.floor_ref());
    Rational::from(theta - floor)
}

/// Both sides of Lerch's formula for `k >= 2`:
/// the symmetric sum `sum_{m != 0} e^{2 pi i m theta} m^{-k}` (its real part
/// for even `k`, imaginary part for odd `k`) and
/// `-(2 pi i)^k / k! B_k({theta})` reduced the same way.
pub fn lerch_sides(k: u32, theta: &Rational, cfg: &SummationConfig) -> Result<(HPReal, HPReal)> {
    let wp = check_cfg(cfg)?;
    if k < 2 {
        return Err(Error::Domain(format!("Lerch check needs k >= 2, got {k}")));
    }
    let frac = fractional_part(theta);
    let kind = if k.is_multiple_of(2) {
        ClausenKind::Cos
    } else {
        ClausenKind::Sin
    };
    let lhs = clausen(kind, k, &frac, &cfg.with_tol(cfg.target_tol / 4.0))?.mul_pow2(1);

    let two_pi = pi_hp(wp).mul_pow2(1);
    let bk = bernoulli_polynomial(k as usize).eval(&frac);
    let fact = Rational::from(Integer::from(Integer::factorial(k)));
    let sign = if (k / 2).is_multiple_of(2) { -1 } else { 1 };
    let coeff = (bk / fact) * sign;
    let rhs = two_pi.powi(k).scale(&coeff);
    Ok((lhs, rhs))
}

/// Checks Lerch's formula within `cfg.target_tol` plus both error bounds.
pub fn lerch_check(k: u32, theta: &Rational, cfg: &SummationConfig) -> Result<bool> {
    let (lhs, rhs) = lerch_sides(k, theta, cfg)?;
    Ok(lhs.agrees_with(&rhs, cfg.target_tol))
}
