//! Exact rational machinery: generalized binomials, Bernoulli numbers and
//! polynomials, even zeta values as rational multiples of powers of pi, and
//! the pair of sequence transforms over `Q[pi^2]` used by the functional
//! relation tables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

/// Generalized binomial coefficient `n (n-1) ... (n-k+1) / k!`.
///
/// The upper argument may be any integer; the result is zero when
/// `0 <= n < k` and follows the falling-factorial formula otherwise, so
/// `binomial(-3, 2) == 6`.
pub fn binomial(n: i64, k: u32) -> Rational {
    let mut num = Integer::from(1);
    for i in 0..k as i64 {
        num *= n - i;
    }
    let mut den = Integer::from(1);
    for i in 2..=k as u64 {
        den *= i;
    }
    Rational::from((num, den))
}

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// Akiyama-Tanigawa table; yields B_n with the B_1 = +1/2 convention.
fn akiyama_tanigawa(n_max: usize) -> Vec<Rational> {
    let mut row: Vec<Rational> = Vec::with_capacity(n_max + 1);
    let mut out = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        row.push(Rational::from((1, m as u64 + 1)));
        for j in (1..=m).rev() {
            let diff = Rational::from(&row[j - 1] - &row[j]);
            row[j - 1] = diff * j as u64;
        }
        out.push(row[0].clone());
    }
    out
}

/// Exact Bernoulli number `B_n`, with `B_1 = -1/2` (generating function
/// `t / (e^t - 1)`).
pub fn bernoulli_number(n: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    if cache.len() <= n {
        let target = (n + 1).max(2 * cache.len()).max(32);
        *cache = akiyama_tanigawa(target);
        cache[1] = Rational::from((-1, 2));
    }
    cache[n].clone()
}

/// Dense polynomial in one variable with rational coefficients; index `k`
/// holds the coefficient of `x^k`. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::new(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == 0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Bernoulli polynomial `B_n(x) = sum_k C(n,k) B_k x^(n-k)`, from
/// `t e^{xt} / (e^t - 1) = sum_n B_n(x) t^n / n!`.
pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    let coeffs = (0..=n)
        .map(|p| binomial(n as i64, p as u32) * bernoulli_number(n - p))
        .collect();
    RationalPolynomial::new(coeffs)
}

/// Polynomial in the formal variable `pi^2`: index `k` is the coefficient of
/// `(pi^2)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PiPolynomial(pub RationalPolynomial);

impl PiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self(RationalPolynomial::constant(c))
    }

    /// `c * (pi^2)^k`
    pub fn term(c: Rational, k: usize) -> Self {
        Self(RationalPolynomial::monomial(c, k))
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.coeff(k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.scale(c))
    }

    /// Divide by `pi^2`; `None` if the constant term is nonzero.
    pub fn div_pi2(&self) -> Option<Self> {
        if self.coeff(0) != 0 {
            return None;
        }
        Some(Self(RationalPolynomial::new(
            self.0.coeffs().iter().skip(1).cloned().collect(),
        )))
    }

    /// Numerical value for a given `pi`.
    pub fn eval_f64(&self, pi: f64) -> f64 {
        let pi2 = pi * pi;
        self.0
            .coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * pi2 + c.to_f64())
    }
}

impl Add for &PiPolynomial {
    type Output = PiPolynomial;
    fn add(self, rhs: Self) -> PiPolynomial {
        PiPolynomial(&self.0 + &rhs.0)
    }
}

impl Sub for &PiPolynomial {
    type Output = PiPolynomial;
    fn sub(self, rhs: Self) -> PiPolynomial {
        PiPolynomial(&self.0 - &rhs.0)
    }
}

impl Mul for &PiPolynomial {
    type Output = PiPolynomial;
    fn mul(self, rhs: Self) -> PiPolynomial {
        PiPolynomial(&self.0 * &rhs.0)
    }
}

impl fmt::Display for PiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.coeffs().iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})pi^{}", 2 * k)?,
            }
        }
        Ok(())
    }
}

fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Rational `c_k` with `zeta(2k) = c_k * pi^(2k)`; `c_0 = -1/2` encodes
/// `zeta(0) = -1/2`.
pub fn zeta_even_coefficient(k: u32) -> Rational {
    let two_k = 2 * k;
    let b = bernoulli_number(two_k as usize);
    let num = Integer::from(1) << two_k;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let c = b * Rational::from((num, factorial(two_k) * 2u32));
    c * sign
}

/// `zeta(2k)` as an element of `Q[pi^2]`.
pub fn zeta_even(k: u32) -> PiPolynomial {
    PiPolynomial::term(zeta_even_coefficient(k), k as usize)
}

/// `(i pi)^(2j) / d` encoded as `(-1)^j (pi^2)^j / d`.
fn i_pi_power(j: usize, den: &Integer) -> PiPolynomial {
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    PiPolynomial::term(Rational::from((Integer::from(sign), den.clone())), j)
}

/// The two transforms
/// `P_m = sum_{j<=m/2} R_{m-2j} (i pi)^{2j} / (2j)!` and
/// `Q_m = sum_{j<=m/2} R_{m-2j} (i pi)^{2j} / (2j+1)!`.
///
/// Panics if `r` has fewer than `m + 1` entries.
pub fn lemma42_forward(r: &[PiPolynomial], m: usize) -> (PiPolynomial, PiPolynomial) {
    assert!(r.len() > m, "sequence must be defined up to index {m}");
    let mut p = PiPolynomial::zero();
    let mut q = PiPolynomial::zero();
    for j in 0..=m / 2 {
        let rj = &r[m - 2 * j];
        p = &p + &(rj * &i_pi_power(j, &factorial(2 * j as u32)));
        q = &q + &(rj * &i_pi_power(j, &factorial(2 * j as u32 + 1)));
    }
    (p, q)
}

/// Left and right sides of the two identities relating the transforms, for
/// all `m <= 2h` (first identity) and for `2h` (second identity).
pub struct Lemma42Sides {
    /// `(P_m, -2 sum_tau zeta(2 tau) Q_{m - 2 tau})` for `m = 0..=2h`.
    pub p_identity: Vec<(PiPolynomial, PiPolynomial)>,
    /// `(Q_{2h}, (2/pi^2) sum_tau (2^{2h-2tau+2} - 1) zeta(2h-2tau+2) P_{2tau})`.
    pub q_identity: (PiPolynomial, PiPolynomial),
}

pub fn lemma42_sides(r: &[PiPolynomial], h: usize) -> Lemma42Sides {
    let top = 2 * h;
    let pq: Vec<_> = (0..=top).map(|m| lemma42_forward(r, m)).collect();
    let p_identity = (0..=top)
        .map(|m| {
            let mut rhs = PiPolynomial::zero();
            for tau in 0..=m / 2 {
                let term = &zeta_even(tau as u32) * &pq[m - 2 * tau].1;
                rhs = &rhs + &term;
            }
            (pq[m].0.clone(), rhs.scale(&Rational::from(-2)))
        })
        .collect();
    let mut rhs = PiPolynomial::zero();
    for tau in 0..=h {
        let e = (2 * h - 2 * tau + 2) as u32;
        let factor = Rational::from((Integer::from(1) << e) - 1u32);
        let z = zeta_even(e / 2).scale(&factor);
        rhs = &rhs + &(&z * &pq[2 * tau].0);
    }
    let rhs = rhs
        .scale(&Rational::from(2))
        .div_pi2()
        .expect("every zeta(2k) with k >= 1 carries a factor pi^2");
    Lemma42Sides {
        p_identity,
        q_identity: (pq[top].1.clone(), rhs),
    }
}

/// True iff both identities hold exactly in `Q[pi^2]`.
pub fn lemma42_identities_check(r: &[PiPolynomial], h: usize) -> bool {
    let sides = lemma42_sides(r, h);
    sides.p_identity.iter().all(|(l, r)| l == r) && sides.q_identity.0 == sides.q_identity.1
}
