//! Two-dimensional lattice sums `sum prod_i (a_i m + b_i n)^{-e_i}` over a
//! region where one coordinate is positive and the other is positive or any
//! nonzero integer, skipping every point where some form vanishes.
//!
//! The sum is split into rows indexed by the outer coordinate `y`. Row `y`
//! is summed exactly over `1 <= x <= M_y` and its tail is bounded by an
//! integral. Rows with `|y| > N` are bounded as a whole using homogeneity:
//! on the ray `x = z |y|` the summand is `|y|^{-w} g(z)`, and `g` is
//! controlled piecewise in `z` (windows around walls where a form vanishes,
//! regular cells between them, and a far region).

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::{Deserialize, Serialize};

use super::{abs_up, unit_roundoff, up, HPReal, SummationConfig};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Range {
    /// `1, 2, 3, ...`
    Positive,
    /// every nonzero integer
    NonzeroAll,
}

/// `(m_coeff m + n_coeff n)^{-exponent}`. An exponent of zero only excludes
/// the points where the form vanishes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinearForm {
    pub m_coeff: i64,
    pub n_coeff: i64,
    pub exponent: f64,
}

impl LinearForm {
    pub fn new(m_coeff: i64, n_coeff: i64, exponent: f64) -> Self {
        LinearForm {
            m_coeff,
            n_coeff,
            exponent,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Power {
    Exclude,
    Int(u32),
    Real(f64),
}

/// A form in (inner x, outer y) coordinates.
#[derive(Clone, Debug)]
struct Oriented {
    a: i64,
    b: i64,
    e: f64,
    power: Power,
}

#[derive(Clone, Copy, Debug)]
enum PieceKind {
    /// `coeff * sum_{t > N} t^{-beta}`
    Plain,
    /// `coeff * sum_{t > N} (1 + ln(1 + x t)) t^{-beta}`
    Log { x: f64 },
}

#[derive(Clone, Copy, Debug)]
struct Piece {
    coeff: f64,
    beta: f64,
    kind: PieceKind,
}

/// `sum_{t > n} t^{-beta} <= n^{1-beta} / (beta - 1)`
fn power_tail(n: f64, beta: f64) -> f64 {
    n.powf(1.0 - beta) / (beta - 1.0)
}

impl Piece {
    fn bound(&self, n: u64) -> f64 {
        let nf = n as f64;
        let s = power_tail(nf, self.beta);
        match self.kind {
            PieceKind::Plain => self.coeff * s,
            PieceKind::Log { x } => {
                // ln(1 + x t) <= ln(1 + x) + ln t for t >= 1, and
                // sum_{t>n} ln t / t^beta <= n^{1-beta} (ln n / (beta-1) + 1/(beta-1)^2)
                let b1 = self.beta - 1.0;
                let log_part = nf.powf(-b1) * (nf.ln() / b1 + 1.0 / (b1 * b1));
                self.coeff * ((1.0 + (1.0 + x).ln()) * s + log_part)
            }
        }
    }
}

/// Rough decay exponent of row sums when `m` (or `n` if `outer_m`) is the
/// outer coordinate: a row `y` is about `y^{-d}` with `d` the weight carried
/// by forms involving `y`, capped by `w - 1` from the diagonal region.
fn row_decay(forms: &[LinearForm], outer_m: bool) -> f64 {
    let w: f64 = forms.iter().map(|f| f.exponent).sum();
    let outer: f64 = forms
        .iter()
        .filter(|f| {
            if outer_m {
                f.m_coeff != 0
            } else {
                f.n_coeff != 0
            }
        })
        .map(|f| f.exponent)
        .sum();
    let inner_only = w - outer;
    if inner_only > 0.0 && inner_only <= 1.0 {
        // rows pick up a log factor; count it as a small loss
        return outer.min(w - 1.0) - 0.5;
    }
    outer.min(w - 1.0)
}

/// Cells used to subdivide each regular gap between windows.
const CELLS_PER_GAP: usize = 32;

fn linear_min_abs(a: i64, b: i64, z0: f64, z1: f64) -> f64 {
    let v0 = (a as f64 * z0 + b as f64).abs();
    let v1 = (a as f64 * z1 + b as f64).abs();
    v0.min(v1)
}

fn convergence(msg: impl Into<String>) -> Error {
    Error::Convergence(msg.into())
}

/// Builds the pieces bounding all rows with `|y| > N` for one sign of `y`.
fn tail_model(forms: &[(i64, i64, f64)], pieces: &mut Vec<Piece>) -> Result<()> {
    let w: f64 = forms.iter().map(|f| f.2).sum();
    let inner_weight: f64 = forms.iter().filter(|f| f.0 != 0).map(|f| f.2).sum();
    if inner_weight <= 1.0 {
        return Err(convergence(
            "row sums diverge: inner exponent sum must exceed 1",
        ));
    }
    if w <= 2.0 {
        return Err(convergence("total weight must exceed 2"));
    }
    let rho = forms
        .iter()
        .filter(|f| f.0 != 0)
        .map(|f| (f.1 as f64 / f.0 as f64).abs())
        .fold(0.0, f64::max);
    let z_far = (2.0 * rho + 1.0).max(2.0);

    let mut walls: Vec<(usize, f64)> = forms
        .iter()
        .enumerate()
        .filter(|(_, f)| f.0 != 0)
        .map(|(i, f)| (i, -(f.1 as f64) / f.0 as f64))
        .filter(|&(_, z)| z >= 0.0)
        .collect();
    walls.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut h: f64 = 0.5;
    for pair in walls.windows(2) {
        h = h.min((pair[1].1 - pair[0].1) / 3.0);
    }
    if let Some(&(_, z)) = walls.first() {
        if z > 0.0 {
            h = h.min(z / 2.0);
        }
    }
    if h <= 0.0 {
        return Err(convergence("two weighted forms vanish on the same line"));
    }

    let mut windows = Vec::new();
    for &(i, z) in &walls {
        let lo = (z - h).max(0.0);
        let hi = z + h;
        windows.push((lo, hi));
        let sides = if z == 0.0 { 1.0 } else { 2.0 };
        let mut coeff = sides;
        for (j, f) in forms.iter().enumerate() {
            if j != i {
                let mu = linear_min_abs(f.0, f.1, lo, hi);
                coeff *= mu.powf(-f.2);
            }
        }
        let e = forms[i].2;
        let beta = w - e;
        if beta <= 1.0 {
            return Err(convergence("a single form carries too much of the weight"));
        }
        let kind = if e > 1.0 {
            coeff *= 1.0 + 1.0 / (e - 1.0);
            PieceKind::Plain
        } else {
            PieceKind::Log {
                x: forms[i].0.unsigned_abs() as f64 * h,
            }
        };
        pieces.push(Piece { coeff, beta, kind });
    }

    let mut gaps = Vec::new();
    let mut cursor = 0.0;
    for &(lo, hi) in &windows {
        if lo > cursor {
            gaps.push((cursor, lo));
        }
        cursor = hi;
    }
    if z_far > cursor {
        gaps.push((cursor, z_far));
    }
    for (g0, g1) in gaps {
        let width = (g1 - g0) / CELLS_PER_GAP as f64;
        for c in 0..CELLS_PER_GAP {
            let z0 = g0 + c as f64 * width;
            let z1 = if c + 1 == CELLS_PER_GAP {
                g1
            } else {
                z0 + width
            };
            let g: f64 = forms
                .iter()
                .map(|f| linear_min_abs(f.0, f.1, z0, z1).powf(-f.2))
                .product();
            // points with x / t in [z0, z1] number at most (z1 - z0) t + 1
            pieces.push(Piece {
                coeff: g * (z1 - z0),
                beta: w - 1.0,
                kind: PieceKind::Plain,
            });
            pieces.push(Piece {
                coeff: g,
                beta: w,
                kind: PieceKind::Plain,
            });
        }
    }

    // x > Z t: |a x + b t| >= x (|a| - |b| / Z), and sum_{x > Zt} x^{-E} <= (Zt/2)^{1-E}/(E-1)
    let mut far = (z_far / 2.0).powf(1.0 - inner_weight) / (inner_weight - 1.0);
    for f in forms {
        let base = if f.0 == 0 {
            f.1.unsigned_abs() as f64
        } else {
            f.0.unsigned_abs() as f64 - f.1.unsigned_abs() as f64 / z_far
        };
        far *= base.powf(-f.2);
    }
    pieces.push(Piece {
        coeff: far,
        beta: w - 1.0,
        kind: PieceKind::Plain,
    });
    Ok(())
}

/// Outcome of a lattice summation.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeResult {
    pub value: HPReal,
    pub terms_summed: u64,
    /// Largest `|y|` summed row by row.
    pub outer_cutoff: u64,
}

#[derive(Clone, Debug)]
pub struct LatticeSum {
    forms: Vec<Oriented>,
    outer_signs: Vec<i64>,
    pieces: Vec<Piece>,
}

impl LatticeSum {
    pub fn new(forms: &[LinearForm], m_range: Range, n_range: Range) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::InvalidInput("no linear forms given".into()));
        }
        let positive =
            |coeff: i64, range: Range| coeff == 0 || (coeff > 0 && range == Range::Positive);
        let outer_m = m_range == Range::Positive
            && n_range == Range::Positive
            && row_decay(forms, true) > row_decay(forms, false);
        let mut oriented = Vec::with_capacity(forms.len());
        for f in forms {
            if f.m_coeff == 0 && f.n_coeff == 0 {
                return Err(Error::InvalidInput("zero linear form".into()));
            }
            let e = f.exponent;
            if !e.is_finite() || (e != 0.0 && e < 1.0) {
                return Err(Error::InvalidInput(format!(
                    "exponent {e} not supported (need 0 or at least 1)"
                )));
            }
            let power = if e == 0.0 {
                Power::Exclude
            } else if e.fract() == 0.0 && e <= u32::MAX as f64 {
                Power::Int(e as u32)
            } else {
                if !(positive(f.m_coeff, m_range) && positive(f.n_coeff, n_range)) {
                    return Err(Error::InvalidInput(format!(
                        "non-integer exponent {e} on a form that changes sign"
                    )));
                }
                Power::Real(e)
            };
            let (a, b) = match (m_range, n_range) {
                (Range::Positive, Range::Positive) if outer_m => (f.n_coeff, f.m_coeff),
                (Range::Positive, _) => (f.m_coeff, f.n_coeff),
                (_, Range::Positive) => (f.n_coeff, f.m_coeff),
                _ => {
                    return Err(Error::InvalidInput(
                        "at least one coordinate must range over positive integers".into(),
                    ))
                }
            };
            oriented.push(Oriented { a, b, e, power });
        }
        let weighted: Vec<&Oriented> = oriented.iter().filter(|f| f.e > 0.0).collect();
        for (i, f) in weighted.iter().enumerate() {
            for g in &weighted[i + 1..] {
                if f.a * g.b == f.b * g.a {
                    return Err(Error::InvalidInput(
                        "weighted forms must be pairwise non-proportional".into(),
                    ));
                }
            }
        }
        let outer_range = if m_range == Range::Positive {
            n_range
        } else {
            m_range
        };
        let outer_signs = match outer_range {
            Range::Positive => vec![1],
            Range::NonzeroAll => vec![1, -1],
        };
        let mut pieces = Vec::new();
        for &sigma in &outer_signs {
            let eff: Vec<(i64, i64, f64)> =
                weighted.iter().map(|f| (f.a, sigma * f.b, f.e)).collect();
            tail_model(&eff, &mut pieces)?;
        }
        Ok(LatticeSum {
            forms: oriented,
            outer_signs,
            pieces,
        })
    }

    /// Bound on the contribution of all rows with `|y| > n` (`n >= 3`).
    fn beyond_rows_bound(&self, n: u64) -> f64 {
        up(1.01 * self.pieces.iter().map(|p| p.bound(n)).sum::<f64>())
    }

    fn inner_weight(&self) -> f64 {
        self.forms
            .iter()
            .filter(|f| f.a != 0 && f.e > 0.0)
            .map(|f| f.e)
            .sum()
    }

    fn rho(&self) -> f64 {
        self.forms
            .iter()
            .filter(|f| f.a != 0 && f.e > 0.0)
            .map(|f| (f.b as f64 / f.a as f64).abs())
            .fold(0.0, f64::max)
    }

    /// Tail of row `y` beyond `x = m`, valid for `m >= 2 rho |y|`.
    fn row_tail(&self, y: i64, m: u64) -> f64 {
        let inner = self.inner_weight();
        let yf = y.unsigned_abs() as f64;
        let mf = m as f64;
        let mut bound = mf.powf(1.0 - inner) / (inner - 1.0);
        for f in self.forms.iter().filter(|f| f.e > 0.0) {
            let base = if f.a == 0 {
                f.b.unsigned_abs() as f64 * yf
            } else {
                f.a.unsigned_abs() as f64 - f.b.unsigned_abs() as f64 * yf / mf
            };
            bound *= base.powf(-f.e);
        }
        up(1.01 * bound)
    }

    /// Smallest `N >= 3` whose beyond-rows bound is at most `tol`.
    fn outer_cutoff(&self, tol: f64, cap: u64) -> Result<u64> {
        let too_far = || {
            convergence(format!(
                "outer cutoff exceeds max_outer = {cap} before reaching tolerance {tol:e}"
            ))
        };
        let mut lo = 3u64;
        if self.beyond_rows_bound(lo) <= tol {
            return Ok(lo);
        }
        let mut hi = 4u64;
        while self.beyond_rows_bound(hi) > tol {
            lo = hi;
            hi *= 2;
            if hi > 2 * cap {
                return Err(too_far());
            }
        }
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.beyond_rows_bound(mid) <= tol {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if hi > cap {
            return Err(too_far());
        }
        Ok(hi)
    }

    /// Row lengths `M_y` minimizing the total work subject to the summed
    /// row tails staying below `budget`.
    fn allocate_rows(&self, n: u64, budget: f64, cap: u64) -> Result<Vec<(i64, u64)>> {
        let alpha = self.inner_weight() - 1.0;
        let rho = self.rho();
        let mut rows = Vec::new();
        for t in 1..=n as i64 {
            for &sigma in &self.outer_signs {
                rows.push(sigma * t);
            }
        }
        let min_len = |y: i64| ((2.0 * rho * y.unsigned_abs() as f64).ceil() as u64).max(1);
        let scale: Vec<f64> = rows
            .iter()
            .map(|&y| {
                let m0 = min_len(y);
                self.row_tail(y, m0) * (m0 as f64).powf(alpha)
            })
            .collect();
        let root: Vec<f64> = scale.iter().map(|c| c.powf(1.0 / (alpha + 1.0))).collect();
        let lambda = (root.iter().sum::<f64>() / budget).powf(1.0 / alpha);
        let mut total = 0f64;
        let mut out = Vec::with_capacity(rows.len());
        for (i, &y) in rows.iter().enumerate() {
            let want = (lambda * root[i]).ceil();
            if !want.is_finite() || want > 1e15 {
                return Err(convergence("row length overflow"));
            }
            let m = (want as u64).max(min_len(y));
            total += m as f64;
            out.push((y, m));
        }
        let cap_terms = (cap as f64) * (cap as f64);
        if total > cap_terms {
            return Err(convergence(format!(
                "needs about {total:.3e} terms, more than max_outer^2 = {cap_terms:.3e}"
            )));
        }
        Ok(out)
    }

    fn row_sum(&self, y: i64, len: u64, wp: u32) -> (Float, f64, u64) {
        let mut sum = Float::new(wp);
        let mut abs_sum = 0.0f64;
        let mut count = 0u64;
        let one = Float::with_val(wp, 1);
        'points: for x in 1..=len as i64 {
            let mut negative = false;
            let mut exact: u128 = 1;
            let mut spill: Option<Float> = None;
            for f in &self.forms {
                let v = f.a * x + f.b * y;
                if v == 0 {
                    continue 'points;
                }
                match f.power {
                    Power::Exclude => {}
                    Power::Int(e) => {
                        if v < 0 && e % 2 == 1 {
                            negative = !negative;
                        }
                        let base = v.unsigned_abs() as u128;
                        for _ in 0..e {
                            match exact.checked_mul(base) {
                                Some(p) => exact = p,
                                None => {
                                    let s = spill.get_or_insert_with(|| Float::with_val(wp, 1));
                                    *s *= exact;
                                    exact = base;
                                }
                            }
                        }
                    }
                    Power::Real(e) => {
                        let p = Float::with_val(wp, v).pow(e);
                        let s = spill.get_or_insert_with(|| Float::with_val(wp, 1));
                        *s *= p;
                    }
                }
            }
            let term = match spill {
                None => Float::with_val(wp, &one / Float::with_val(wp, exact)),
                Some(mut s) => {
                    s *= exact;
                    Float::with_val(wp, &one / &s)
                }
            };
            abs_sum += term.to_f64();
            if negative {
                sum -= term;
            } else {
                sum += term;
            }
            count += 1;
        }
        (sum, abs_sum, count)
    }

    pub fn evaluate(&self, cfg: &SummationConfig) -> Result<LatticeResult> {
        cfg.validate()?;
        let wp = cfg.working_precision();
        let tol = cfg.target_tol;
        let n = self.outer_cutoff(tol / 2.0, cfg.max_outer)?;
        let rows = self.allocate_rows(n, tol / 4.0, cfg.max_outer)?;
        let tails: f64 = rows.iter().map(|&(y, m)| self.row_tail(y, m)).sum();
        let partial: Vec<(Float, f64, u64)> = rows
            .par_iter()
            .map(|&(y, m)| self.row_sum(y, m, wp))
            .collect();

        let ops_per_term = self.forms.iter().map(|f| f.e).sum::<f64>() + 8.0;
        let mut total = Float::new(wp);
        let mut rounding = 0.0;
        let mut abs_total = 0.0;
        let mut terms = 0u64;
        for (s, a, c) in &partial {
            rounding += (*c as f64 + ops_per_term) * a;
            abs_total += abs_up(s);
            total += s;
            terms += c;
        }
        rounding += (partial.len() as f64 + 2.0) * abs_total;
        rounding *= 1.01 * unit_roundoff(wp);
        let err = self.beyond_rows_bound(n) + tails + rounding;
        Ok(LatticeResult {
            value: HPReal::new(total, up(err)),
            terms_summed: terms,
            outer_cutoff: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(tol: f64) -> SummationConfig {
        SummationConfig {
            target_tol: tol,
            ..SummationConfig::default()
        }
    }

    #[test]
    fn product_of_zetas() {
        // sum m^-3 n^-4 = zeta(3) zeta(4)
        let forms = [LinearForm::new(1, 0, 3.0), LinearForm::new(0, 1, 4.0)];
        let sum = LatticeSum::new(&forms, Range::Positive, Range::Positive).unwrap();
        let r = sum.evaluate(&cfg(1e-10)).unwrap();
        let exact = 1.2020569031595942 * 1.0823232337111381;
        assert!((r.value.to_f64() - exact).abs() <= r.value.error_bound() + 1e-15);
        assert!(r.value.error_bound() <= 1e-10);
    }

    #[test]
    fn tornheim_one_one_three() {
        // sum 1/(m n (m+n)^3) = 2 zeta(4,1) = 4 zeta(5) - 2 zeta(2) zeta(3)
        let forms = [
            LinearForm::new(1, 0, 1.0),
            LinearForm::new(0, 1, 1.0),
            LinearForm::new(1, 1, 3.0),
        ];
        let sum = LatticeSum::new(&forms, Range::Positive, Range::Positive).unwrap();
        let r = sum.evaluate(&cfg(1e-9)).unwrap();
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        let exact = 4.0 * 1.036_927_755_143_37 - 2.0 * zeta2 * 1.202_056_903_159_594;
        assert!((r.value.to_f64() - exact).abs() <= r.value.error_bound() + 1e-14);
    }

    #[test]
    fn signed_rows_cancel_exactly_for_odd_symmetric_sums() {
        // sum over m >= 1, n != 0 of m^-3 n^-5 vanishes by n -> -n
        let forms = [LinearForm::new(1, 0, 3.0), LinearForm::new(0, 1, 5.0)];
        let sum = LatticeSum::new(&forms, Range::Positive, Range::NonzeroAll).unwrap();
        let r = sum.evaluate(&cfg(1e-10)).unwrap();
        assert!(r.value.to_f64().abs() <= r.value.error_bound());
    }

    #[test]
    fn rejects_bad_inputs() {
        let divergent = [LinearForm::new(1, 0, 1.0), LinearForm::new(0, 1, 1.0)];
        assert!(matches!(
            LatticeSum::new(&divergent, Range::Positive, Range::Positive),
            Err(Error::Convergence(_))
        ));
        let real_on_signed = [LinearForm::new(1, 0, 3.0), LinearForm::new(0, 1, 2.5)];
        assert!(LatticeSum::new(&real_on_signed, Range::Positive, Range::NonzeroAll).is_err());
        let both_all = [LinearForm::new(1, 0, 3.0), LinearForm::new(0, 1, 3.0)];
        assert!(LatticeSum::new(&both_all, Range::NonzeroAll, Range::NonzeroAll).is_err());
    }
}
