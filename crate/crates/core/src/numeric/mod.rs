//! Arbitrary-precision evaluation with rigorous absolute error bounds.
//!
//! Every routine returns an [`HPReal`]: an MPFR value together with an upper
//! bound on its distance from the true mathematical value. Bounds are kept in
//! `f64` and always rounded upward.

mod constants;
mod lattice;
mod sums;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Round;
use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use constants::{
    clausen, dirichlet_l_chi3, lerch_check, lerch_sides, phi, pi, riemann_zeta, ClausenKind,
};
pub use lattice::{LatticeResult, LatticeSum, LinearForm, Range};
pub use sums::{
    g2_lattice, s_sum_g2, sigma11, sigma21, sigma_sharp, tornheim_a2, zeta_c2, zeta_g2,
    zeta_g2_int, G2Exponents,
};

/// Extra bits carried internally on top of the requested precision.
pub const GUARD_BITS: u32 = 32;

/// Rounds a nonnegative bound up by a few ulps.
pub(crate) fn up(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (x * (1.0 + 8.0 * f64::EPSILON)).next_up()
}

/// `|x|` as an `f64`, rounded up.
pub(crate) fn abs_up(x: &Float) -> f64 {
    Float::with_val(x.prec(), x.abs_ref()).to_f64_round(Round::Up)
}

/// Unit roundoff at `prec` bits, as an `f64`.
pub(crate) fn unit_roundoff(prec: u32) -> f64 {
    2f64.powi(1 - prec as i32)
}

/// Tuning knobs shared by all numeric routines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummationConfig {
    pub precision_bits: u32,
    pub target_tol: f64,
    pub max_outer: u64,
}

impl Default for SummationConfig {
    fn default() -> Self {
        SummationConfig {
            precision_bits: 128,
            target_tol: 1e-12,
            max_outer: 1 << 20,
        }
    }
}

impl SummationConfig {
    pub fn new(precision_bits: u32, target_tol: f64, max_outer: u64) -> Result<Self> {
        let cfg = SummationConfig {
            precision_bits,
            target_tol,
            max_outer,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < 53 {
            return Err(Error::InvalidInput(format!(
                "precision_bits must be at least 53, got {}",
                self.precision_bits
            )));
        }
        if !(self.target_tol.is_finite() && self.target_tol > 0.0) {
            return Err(Error::InvalidInput("target_tol must be positive".into()));
        }
        let floor = 2f64.powi(8 - self.precision_bits as i32);
        if self.target_tol < floor {
            return Err(Error::InvalidInput(format!(
                "target_tol {:e} is below 2^(8-precision) = {:e}",
                self.target_tol, floor
            )));
        }
        if self.max_outer < 4 {
            return Err(Error::InvalidInput("max_outer must be at least 4".into()));
        }
        Ok(())
    }

    /// Same configuration with a different tolerance.
    pub fn with_tol(&self, target_tol: f64) -> Self {
        SummationConfig {
            target_tol,
            ..self.clone()
        }
    }

    pub fn working_precision(&self) -> u32 {
        self.precision_bits + GUARD_BITS
    }
}

/// A real number known to lie within `error_bound` of `value`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPReal {
    value: Float,
    error_bound: f64,
}

impl HPReal {
    pub fn new(value: Float, error_bound: f64) -> Self {
        assert!(
            error_bound.is_finite() && error_bound >= 0.0,
            "bad error bound {error_bound}"
        );
        HPReal { value, error_bound }
    }

    pub fn exact(value: Float) -> Self {
        HPReal {
            value,
            error_bound: 0.0,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Self::exact(Float::new(prec))
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let value = Float::with_val(prec, r);
        let err = abs_up(&value) * unit_roundoff(prec);
        HPReal {
            value,
            error_bound: up(err),
        }
    }

    pub fn from_i64(x: i64, prec: u32) -> Self {
        Self::from_rational(&Rational::from(x), prec)
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    pub fn prec(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Widens the bound by `extra`.
    pub fn with_extra_error(mut self, extra: f64) -> Self {
        self.error_bound = up(self.error_bound + extra);
        self
    }

    fn rounded(value: Float, propagated: f64) -> Self {
        let err = propagated + abs_up(&value) * unit_roundoff(value.prec());
        HPReal {
            value,
            error_bound: up(err),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let cf = HPReal::from_rational(c, self.prec());
        self * &cf
    }

    /// `2^k * self`, exact in the value.
    pub fn mul_pow2(&self, k: i32) -> Self {
        let value = Float::with_val(self.prec(), &self.value) << k;
        HPReal {
            value,
            error_bound: up(self.error_bound * 2f64.powi(k)),
        }
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = HPReal::exact(Float::with_val(self.prec(), 1));
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `|self - other|`, rounded up, ignoring bounds.
    pub fn distance(&self, other: &HPReal) -> f64 {
        let d = Float::with_val(self.prec().max(other.prec()), &self.value - &other.value);
        abs_up(&d)
    }

    /// Whether the two intervals, each widened by `tol`, are consistent.
    pub fn agrees_with(&self, other: &HPReal, tol: f64) -> bool {
        self.distance(other) <= tol + self.error_bound + other.error_bound
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.value.is_zero() {
            return "0".into();
        }
        let s = self.value.to_string_radix(10, Some(digits));
        // MPFR renders as "d.ddde-3"; prefer plain notation for moderate exponents.
        match s.split_once('e') {
            Some((mantissa, exp)) => {
                let exp: i32 = exp.parse().unwrap_or(0);
                if (-30..=30).contains(&exp) {
                    shift_decimal(mantissa, exp)
                } else {
                    s
                }
            }
            None => s,
        }
    }
}

fn shift_decimal(mantissa: &str, exp: i32) -> String {
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    let digits: String = format!("{int_part}{frac_part}");
    let point = int_part.len() as i32 + exp;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.push_str(&"0".repeat(point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    out
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} +/- {:.1e}", self.to_decimal(30), self.error_bound)
    }
}

impl Serialize for HPReal {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("HPReal", 2)?;
        st.serialize_field("value", &self.to_decimal(40))?;
        st.serialize_field("error_bound", &self.error_bound)?;
        st.end()
    }
}

impl Add for &HPReal {
    type Output = HPReal;
    fn add(self, rhs: &HPReal) -> HPReal {
        let prec = self.prec().max(rhs.prec());
        let v = Float::with_val(prec, &self.value + &rhs.value);
        HPReal::rounded(v, self.error_bound + rhs.error_bound)
    }
}

impl Sub for &HPReal {
    type Output = HPReal;
    fn sub(self, rhs: &HPReal) -> HPReal {
        let prec = self.prec().max(rhs.prec());
        let v = Float::with_val(prec, &self.value - &rhs.value);
        HPReal::rounded(v, self.error_bound + rhs.error_bound)
    }
}

impl Mul for &HPReal {
    type Output = HPReal;
    fn mul(self, rhs: &HPReal) -> HPReal {
        let prec = self.prec().max(rhs.prec());
        let v = Float::with_val(prec, &self.value * &rhs.value);
        let err = abs_up(&self.value) * rhs.error_bound
            + abs_up(&rhs.value) * self.error_bound
            + self.error_bound * rhs.error_bound;
        HPReal::rounded(v, up(err))
    }
}

impl Neg for &HPReal {
    type Output = HPReal;
    fn neg(self) -> HPReal {
        HPReal {
            value: Float::with_val(self.prec(), -&self.value),
            error_bound: self.error_bound,
        }
    }
}

/// Sum in slice order.
pub fn sum_all<'a>(items: impl IntoIterator<Item = &'a HPReal>, prec: u32) -> HPReal {
    items
        .into_iter()
        .fold(HPReal::zero(prec), |acc, x| &acc + x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(SummationConfig::default().validate().is_ok());
        assert!(SummationConfig::new(40, 1e-5, 100).is_err());
        assert!(SummationConfig::new(64, 1e-30, 100).is_err());
        assert!(SummationConfig::new(64, 1e-10, 100).is_ok());
    }

    #[test]
    fn arithmetic_propagates_bounds() {
        let a = HPReal::new(Float::with_val(100, 1.5), 1e-20);
        let b = HPReal::new(Float::with_val(100, -0.25), 1e-21);
        let s = &a + &b;
        assert_eq!(s.to_f64(), 1.25);
        assert!(s.error_bound() >= 1.1e-20);
        let p = &a * &b;
        assert_eq!(p.to_f64(), -0.375);
        assert!(p.error_bound() >= 1.5e-21 + 0.25e-20);
        assert!(s.agrees_with(&HPReal::exact(Float::with_val(100, 1.25)), 0.0));
    }

    #[test]
    fn decimal_rendering() {
        let x = HPReal::exact(Float::with_val(64, 0.0099527234f64));
        assert!(x.to_decimal(10).starts_with("0.009952723"));
        let y = HPReal::exact(Float::with_val(64, -1234.5));
        assert_eq!(y.to_decimal(5), "-1234.5");
        assert_eq!(HPReal::zero(64).to_decimal(5), "0");
    }
}
