//! Exact linear combinations of zeta-type constants with rational
//! coefficients.
//!
//! A [`ZetaExpr`] maps monomials (multisets of [`Symbol`]s) to nonzero
//! rationals. [`ZetaExpr::normalize`] rewrites into the canonical basis
//! `pi^k`, `sqrt3`, `zeta(odd)`, `L(n, chi_3)` and the Clausen values that
//! have no closed form here, so equality of normalized expressions is a
//! rational comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::zeta_even_coefficient;
use crate::numeric::{
    clausen, dirichlet_l_chi3, phi, pi, riemann_zeta, ClausenKind, HPReal, SummationConfig,
};

/// A basis constant. `Pi` and `Sqrt3` carry their power in the monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Pi,
    Sqrt3,
    /// `zeta(n)`, `n >= 2`
    Zeta(u32),
    /// `phi(n) = (2^{1-n} - 1) zeta(n)`, `n >= 2`
    Phi(u32),
    /// `L(n, chi_3)`, `n >= 1`
    LChi3(u32),
    /// `S_r(x)` or `C_r(x)` with `x` reduced to `[0, 1/2]`
    Clausen {
        kind: ClausenKind,
        order: u32,
        x: Rational,
    },
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Pi => write!(f, "pi"),
            Symbol::Sqrt3 => write!(f, "sqrt3"),
            Symbol::Zeta(n) => write!(f, "zeta({n})"),
            Symbol::Phi(n) => write!(f, "phi({n})"),
            Symbol::LChi3(n) => write!(f, "L({n},chi3)"),
            Symbol::Clausen { kind, order, x } => {
                let k = match kind {
                    ClausenKind::Sin => "S",
                    ClausenKind::Cos => "C",
                };
                write!(f, "{k}({order},{x})")
            }
        }
    }
}

fn parse_err(s: &str) -> Error {
    Error::Parse(format!("unknown symbol {s:?}"))
}

fn inner<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_suffix(')')
}

/// Parses one serialized token into a symbol and its power.
fn parse_token(tok: &str) -> Result<(Symbol, u32)> {
    let tok = tok.trim();
    if tok == "pi" {
        return Ok((Symbol::Pi, 1));
    }
    if let Some(k) = tok.strip_prefix("pi^") {
        let k: u32 = k.parse().map_err(|_| parse_err(tok))?;
        return Ok((Symbol::Pi, k));
    }
    if tok == "sqrt3" {
        return Ok((Symbol::Sqrt3, 1));
    }
    let int = |s: &str| s.trim().parse::<u32>().map_err(|_| parse_err(tok));
    if let Some(n) = inner(tok, "zeta(") {
        return Ok((Symbol::Zeta(int(n)?), 1));
    }
    if let Some(n) = inner(tok, "phi(") {
        return Ok((Symbol::Phi(int(n)?), 1));
    }
    if let Some(body) = inner(tok, "L(") {
        let n = body.strip_suffix(",chi3").ok_or_else(|| parse_err(tok))?;
        return Ok((Symbol::LChi3(int(n)?), 1));
    }
    for (head, kind) in [("S(", ClausenKind::Sin), ("C(", ClausenKind::Cos)] {
        if let Some(body) = inner(tok, head) {
            let (r, x) = body.split_once(',').ok_or_else(|| parse_err(tok))?;
            let x = parse_rational(x)?;
            return Ok((
                Symbol::Clausen {
                    kind,
                    order: int(r)?,
                    x,
                },
                1,
            ));
        }
    }
    Err(parse_err(tok))
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    Rational::parse(s.trim())
        .map(Rational::from)
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Product of symbols with positive powers.
pub type Monomial = BTreeMap<Symbol, u32>;

/// A finite `Q`-linear combination of monomials. No stored coefficient is
/// zero; the empty map is `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaExpr {
    terms: BTreeMap<Monomial, Rational>,
}

fn pow_rational(base: i64, e: i64) -> Rational {
    Rational::from(base).pow(e as i32)
}

impl ZetaExpr {
    pub fn zero() -> Self {
        ZetaExpr::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut e = ZetaExpr::zero();
        e.add_term(Monomial::new(), c.into());
        e
    }

    pub fn one() -> Self {
        ZetaExpr::constant(1)
    }

    fn symbol(sym: Symbol, power: u32) -> Self {
        let mut m = Monomial::new();
        if power > 0 {
            m.insert(sym, power);
        }
        let mut e = ZetaExpr::zero();
        e.add_term(m, Rational::from(1));
        e.reduce_sqrt3()
    }

    /// `pi^k`.
    pub fn pi_pow(k: u32) -> Self {
        ZetaExpr::symbol(Symbol::Pi, k)
    }

    pub fn sqrt3() -> Self {
        ZetaExpr::symbol(Symbol::Sqrt3, 1)
    }

    /// `zeta(n)`; `zeta(0) = -1/2`.
    pub fn zeta(n: u32) -> Result<Self> {
        match n {
            0 => Ok(ZetaExpr::constant(Rational::from((-1, 2)))),
            1 => Err(Error::ArgumentOutOfRange("zeta(1) is a pole".into())),
            _ => Ok(ZetaExpr::symbol(Symbol::Zeta(n), 1)),
        }
    }

    /// `phi(n)`; `phi(0) = -1/2`, `phi(1) = -log 2` is not representable.
    pub fn phi(n: u32) -> Result<Self> {
        match n {
            0 => Ok(ZetaExpr::constant(Rational::from((-1, 2)))),
            1 => Err(Error::ArgumentOutOfRange(
                "phi(1) is not a rational multiple of a basis constant".into(),
            )),
            _ => Ok(ZetaExpr::symbol(Symbol::Phi(n), 1)),
        }
    }

    pub fn l_chi3(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ArgumentOutOfRange(
                "L(0, chi_3) not supported".into(),
            ));
        }
        Ok(ZetaExpr::symbol(Symbol::LChi3(n), 1))
    }

    /// `S_r(x)` or `C_r(x)` for any rational `x`, reduced with periodicity
    /// and the reflection `x -> 1 - x`.
    pub fn clausen(kind: ClausenKind, order: u32, x: &Rational) -> Result<Self> {
        if order == 0 || (order == 1 && kind == ClausenKind::Cos) {
            return Err(Error::ArgumentOutOfRange(format!(
                "Clausen order {order} not supported for {kind:?}"
            )));
        }
        let floor = Integer::from(x.floor_ref());
        let mut t = Rational::from(x - floor);
        let mut sign = 1;
        let half = Rational::from((1, 2));
        if t > half {
            t = 1 - t;
            if kind == ClausenKind::Sin {
                sign = -1;
            }
        }
        if kind == ClausenKind::Sin && (t == 0 || t == half) {
            return Ok(ZetaExpr::zero());
        }
        let e = ZetaExpr::symbol(Symbol::Clausen { kind, order, x: t }, 1);
        Ok(e.scale(&Rational::from(sign)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return ZetaExpr::zero();
        }
        ZetaExpr {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), Rational::from(v * c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ZetaExpr::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `sqrt3^2 = 3` to every monomial.
    fn reduce_sqrt3(self) -> Self {
        if !self
            .terms
            .keys()
            .any(|m| m.get(&Symbol::Sqrt3).is_some_and(|p| *p >= 2))
        {
            return self;
        }
        let mut out = ZetaExpr::zero();
        for (mut m, c) in self.terms {
            let mut c = c;
            if let Some(p) = m.get(&Symbol::Sqrt3).copied() {
                c *= Rational::from(Integer::from(3).pow(p / 2));
                if p % 2 == 0 {
                    m.remove(&Symbol::Sqrt3);
                } else {
                    m.insert(Symbol::Sqrt3, 1);
                }
            }
            out.add_term(m, c);
        }
        out
    }

    /// Rewrites to the canonical basis: even zeta values become rational
    /// multiples of `pi^{2k}`, `phi` becomes `zeta`, and Clausen values with
    /// denominator 1, 2, 3 or 6 become `zeta` or `sqrt3 L(., chi_3)`.
    pub fn normalize(&self) -> Self {
        self.rewrite(false)
    }

    /// [`normalize`](Self::normalize) followed by `L(1, chi_3) = pi sqrt3 / 9`.
    pub fn normalize_deep(&self) -> Self {
        self.rewrite(true)
    }

    fn rewrite(&self, deep: bool) -> Self {
        let mut out = ZetaExpr::zero();
        for (m, c) in &self.terms {
            let mut prod = ZetaExpr::constant(c.clone());
            for (sym, p) in m {
                let image = rewrite_symbol(sym, deep);
                prod = &prod * &image.pow(*p);
            }
            out = &out + &prod;
        }
        out
    }

    /// Exact equality after deep normalization.
    pub fn equals(&self, other: &ZetaExpr) -> bool {
        self.normalize_deep() == other.normalize_deep()
    }

    /// Presentation form: every even power `pi^{2k}` is written as a
    /// rational multiple of `zeta(2k)`.
    pub fn display_form(&self) -> Self {
        let mut out = ZetaExpr::zero();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            let mut c = c.clone();
            if let Some(k) = m.get(&Symbol::Pi).copied() {
                if k % 2 == 0 {
                    m.remove(&Symbol::Pi);
                    *m.entry(Symbol::Zeta(k)).or_insert(0) += 1;
                    c /= zeta_even_coefficient(k / 2);
                }
            }
            out.add_term(m, c);
        }
        out
    }

    /// Numeric value with a propagated error bound.
    pub fn eval_numeric(&self, cfg: &SummationConfig) -> Result<HPReal> {
        cfg.validate()?;
        let wp = cfg.working_precision();
        if self.is_zero() {
            return Ok(HPReal::zero(wp));
        }
        // constants are cheap; evaluate them well below the target
        let floor = 2f64.powi(8 - cfg.precision_bits as i32);
        let sub = cfg.with_tol((cfg.target_tol * 1e-10).max(floor * 4.0));
        let mut cache: BTreeMap<Symbol, HPReal> = BTreeMap::new();
        let mut total = HPReal::zero(wp);
        for (m, c) in &self.terms {
            let mut term = HPReal::from_rational(c, wp);
            for (sym, p) in m {
                if !cache.contains_key(sym) {
                    cache.insert(sym.clone(), eval_symbol(sym, &sub)?);
                }
                term = &term * &cache[sym].powi(*p);
            }
            total = &total + &term;
        }
        Ok(total)
    }

    fn wire_terms(&self) -> Vec<(String, Vec<String>)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut syms = Vec::new();
                for (sym, p) in m {
                    match sym {
                        Symbol::Pi if *p > 1 => syms.push(format!("pi^{p}")),
                        _ => {
                            for _ in 0..*p {
                                syms.push(sym.to_string());
                            }
                        }
                    }
                }
                (c.to_string(), syms)
            })
            .collect()
    }

    /// Builds an expression from `(coefficient, symbols)` pairs.
    pub fn from_wire(pairs: &[(String, Vec<String>)]) -> Result<Self> {
        let mut out = ZetaExpr::zero();
        for (c, syms) in pairs {
            let mut term = ZetaExpr::constant(parse_rational(c)?);
            for tok in syms {
                let (sym, p) = parse_token(tok)?;
                let factor = match sym {
                    Symbol::Zeta(n) => ZetaExpr::zeta(n)?,
                    Symbol::Phi(n) => ZetaExpr::phi(n)?,
                    Symbol::LChi3(n) => ZetaExpr::l_chi3(n)?,
                    Symbol::Clausen { kind, order, x } => ZetaExpr::clausen(kind, order, &x)?,
                    other => ZetaExpr::symbol(other, 1),
                };
                term = &term * &factor.pow(p);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("expression serializes")
    }
}

fn rewrite_symbol(sym: &Symbol, deep: bool) -> ZetaExpr {
    match sym {
        Symbol::Zeta(n) if n % 2 == 0 => ZetaExpr::pi_pow(*n).scale(&zeta_even_coefficient(n / 2)),
        Symbol::Phi(n) => {
            let factor = pow_rational(2, 1 - *n as i64) - Rational::from(1);
            rewrite_symbol(&Symbol::Zeta(*n), deep).scale(&factor)
        }
        Symbol::LChi3(1) if deep => {
            (&ZetaExpr::pi_pow(1) * &ZetaExpr::sqrt3()).scale(&Rational::from((1, 9)))
        }
        Symbol::Clausen { kind, order, x } => match clausen_closed_form(*kind, *order, x) {
            Some(e) => e.rewrite(deep),
            None => ZetaExpr::symbol(sym.clone(), 1),
        },
        other => ZetaExpr::symbol(other.clone(), 1),
    }
}

/// Closed forms for `x` in `{0, 1/6, 1/3, 1/2}`.
fn clausen_closed_form(kind: ClausenKind, r: u32, x: &Rational) -> Option<ZetaExpr> {
    let den = x.denom().to_u32()?;
    let r_i = r as i64;
    let zeta = || ZetaExpr::symbol(Symbol::Zeta(r), 1);
    let l = || ZetaExpr::symbol(Symbol::LChi3(r), 1);
    let half_sqrt3_l = || (&ZetaExpr::sqrt3() * &l()).scale(&Rational::from((1, 2)));
    let one = Rational::from(1);
    match (kind, den) {
        (ClausenKind::Cos, 1) => Some(zeta()),
        (ClausenKind::Cos, 2) => Some(zeta().scale(&(pow_rational(2, 1 - r_i) - &one))),
        (ClausenKind::Cos, 3) => {
            Some(zeta().scale(&((pow_rational(3, 1 - r_i) - &one) / Rational::from(2))))
        }
        (ClausenKind::Cos, 6) => {
            let c = ((&one - pow_rational(2, 1 - r_i)) * (&one - pow_rational(3, 1 - r_i)))
                / Rational::from(2);
            Some(zeta().scale(&c))
        }
        (ClausenKind::Sin, 3) => Some(half_sqrt3_l()),
        (ClausenKind::Sin, 6) => Some(half_sqrt3_l().scale(&(&one + pow_rational(2, 1 - r_i)))),
        _ => None,
    }
}

fn eval_symbol(sym: &Symbol, cfg: &SummationConfig) -> Result<HPReal> {
    let wp = cfg.working_precision();
    match sym {
        Symbol::Pi => {
            let v = pi(wp);
            let err = 4.0 * 2f64.powi(2 - wp as i32);
            Ok(HPReal::new(v, err))
        }
        Symbol::Sqrt3 => {
            let v = Float::with_val(wp, 3).sqrt();
            let err = 2.0 * 2f64.powi(1 - wp as i32);
            Ok(HPReal::new(v, err))
        }
        Symbol::Zeta(n) => riemann_zeta(*n as f64, cfg),
        Symbol::Phi(n) => phi(*n as f64, cfg),
        Symbol::LChi3(n) => dirichlet_l_chi3(*n as f64, cfg),
        Symbol::Clausen { kind, order, x } => clausen(*kind, *order, x, cfg),
    }
}

impl Add for &ZetaExpr {
    type Output = ZetaExpr;
    fn add(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: &ZetaExpr) -> ZetaExpr {
        self + &(-rhs)
    }
}

impl Neg for &ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        self.scale(&Rational::from(-1))
    }
}

impl Mul for &ZetaExpr {
    type Output = ZetaExpr;
    fn mul(self, rhs: &ZetaExpr) -> ZetaExpr {
        let mut out = ZetaExpr::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let mut m = m1.clone();
                for (sym, p) in m2 {
                    *m.entry(sym.clone()).or_insert(0) += p;
                }
                out.add_term(m, Rational::from(c1 * c2));
            }
        }
        out.reduce_sqrt3()
    }
}

impl Mul<&Rational> for &ZetaExpr {
    type Output = ZetaExpr;
    fn mul(self, rhs: &Rational) -> ZetaExpr {
        self.scale(rhs)
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, syms)) in self.wire_terms().into_iter().enumerate() {
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, c),
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if syms.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", syms.join("*"))?;
            } else {
                write!(f, "{mag}*{}", syms.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Serialized as `{"coef": [symbols]}` when all coefficients are distinct,
/// otherwise as a list of `[coef, [symbols]]` pairs.
impl Serialize for ZetaExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = self.wire_terms();
        let mut seen = std::collections::BTreeSet::new();
        let distinct = wire.iter().all(|(c, _)| seen.insert(c.clone()));
        if distinct {
            let mut map = serializer.serialize_map(Some(wire.len()))?;
            for (c, syms) in &wire {
                map.serialize_entry(c, syms)?;
            }
            map.end()
        } else {
            let mut seq = serializer.serialize_seq(Some(wire.len()))?;
            for pair in &wire {
                seq.serialize_element(pair)?;
            }
            seq.end()
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Wire {
    Map(BTreeMap<String, Vec<String>>),
    Pairs(Vec<(String, Vec<String>)>),
}

impl<'de> Deserialize<'de> for ZetaExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(String, Vec<String>)> = match Wire::deserialize(deserializer)? {
            Wire::Map(m) => m.into_iter().collect(),
            Wire::Pairs(p) => p,
        };
        ZetaExpr::from_wire(&pairs).map_err(de::Error::custom)
    }
}
