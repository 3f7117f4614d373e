//! Named double sums built on the lattice engine.

use serde::{Deserialize, Serialize};

use super::{HPReal, LatticeSum, LinearForm, Range, SummationConfig};
use crate::error::{Error, Result};
use crate::roots::{ExponentTuple, SimpleSubset, POSITIVE_FORMS};

/// Exponents attached to the six G2 forms `m, n, m+n, m+2n, m+3n, 2m+3n`.
/// At most one slot may hold a non-integer value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct G2Exponents(pub [f64; 6]);

impl From<&ExponentTuple> for G2Exponents {
    fn from(s: &ExponentTuple) -> Self {
        G2Exponents(s.0.map(|e| e as f64))
    }
}

impl std::fmt::Display for G2Exponents {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl G2Exponents {
    pub fn weight(&self) -> f64 {
        self.0.iter().sum()
    }

    /// All exponents at least 1 and total weight at least 7; anything weaker
    /// is rejected even where the series might still converge.
    pub fn validate(&self) -> Result<()> {
        if self.0.iter().any(|e| !e.is_finite() || *e < 1.0) {
            return Err(Error::Convergence(format!(
                "every G2 exponent must be at least 1, got {:?}",
                self.0
            )));
        }
        if self.0.iter().filter(|e| e.fract() != 0.0).count() > 1 {
            return Err(Error::InvalidInput(
                "at most one exponent may be non-integer".into(),
            ));
        }
        if self.weight() < 7.0 {
            return Err(Error::Convergence(format!(
                "G2 weight {} is below 7; absolute convergence is not established",
                self.weight()
            )));
        }
        Ok(())
    }

    fn forms(&self) -> Vec<LinearForm> {
        POSITIVE_FORMS
            .iter()
            .zip(self.0)
            .map(|(&(a, b), e)| LinearForm::new(a, b, e))
            .collect()
    }
}

fn range_for(in_subset: bool) -> Range {
    if in_subset {
        Range::Positive
    } else {
        Range::NonzeroAll
    }
}

/// The lattice sum for the Weyl-symmetrized sum over `I`: coordinates in
/// `I` run over positive integers, the rest over nonzero integers, and all
/// six forms must be nonzero.
pub fn g2_lattice(subset: Option<SimpleSubset>, s: &G2Exponents) -> Result<LatticeSum> {
    s.validate()?;
    let (m, n) = match subset {
        None => (Range::Positive, Range::Positive),
        Some(i) => (range_for(i.contains_1), range_for(i.contains_2)),
    };
    LatticeSum::new(&s.forms(), m, n)
}

/// `zeta_2(s; G_2)`.
pub fn zeta_g2(s: &G2Exponents, cfg: &SummationConfig) -> Result<HPReal> {
    Ok(g2_lattice(None, s)?.evaluate(cfg)?.value)
}

pub fn zeta_g2_int(s: &ExponentTuple, cfg: &SummationConfig) -> Result<HPReal> {
    zeta_g2(&G2Exponents::from(s), cfg)
}

/// The Weyl-symmetrized lattice sum `S(s, I)`.
pub fn s_sum_g2(subset: SimpleSubset, s: &G2Exponents, cfg: &SummationConfig) -> Result<HPReal> {
    Ok(g2_lattice(Some(subset), s)?.evaluate(cfg)?.value)
}

/// Mordell-Tornheim sum `sum_{m,n>=1} m^{-s1} n^{-s2} (m+n)^{-s3}`.
pub fn tornheim_a2(s1: f64, s2: f64, s3: f64, cfg: &SummationConfig) -> Result<HPReal> {
    if !(s1 + s2 > 2.0 && s1 + s3 > 2.0 && s2 + s3 > 2.0 && s1 + s2 + s3 > 3.0) {
        return Err(Error::Convergence(format!(
            "A2 exponents ({s1}, {s2}, {s3}) need pairwise sums > 2 and total > 3"
        )));
    }
    // the summand is symmetric in (s1, s2); fix an order so both run identically
    let (s1, s2) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    let forms = [
        LinearForm::new(1, 0, s1),
        LinearForm::new(0, 1, s2),
        LinearForm::new(1, 1, s3),
    ];
    Ok(LatticeSum::new(&forms, Range::Positive, Range::Positive)?
        .evaluate(cfg)?
        .value)
}

/// `sum_{m,n>=1} m^{-s1} n^{-s2} (m+n)^{-s3} (m+2n)^{-s4}`.
pub fn zeta_c2(s: [f64; 4], cfg: &SummationConfig) -> Result<HPReal> {
    if s.iter().any(|e| *e < 1.0) || s.iter().sum::<f64>() < 5.0 {
        return Err(Error::Convergence(format!(
            "C2 exponents {s:?} need every entry >= 1 and weight >= 5"
        )));
    }
    let forms = [
        LinearForm::new(1, 0, s[0]),
        LinearForm::new(0, 1, s[1]),
        LinearForm::new(1, 1, s[2]),
        LinearForm::new(1, 2, s[3]),
    ];
    Ok(LatticeSum::new(&forms, Range::Positive, Range::Positive)?
        .evaluate(cfg)?
        .value)
}

fn half_plane_sum(s: f64, rest: &[LinearForm], cfg: &SummationConfig) -> Result<HPReal> {
    if !(s.is_finite() && s >= 1.0) {
        return Err(Error::Domain(format!(
            "free variable must be >= 1, got {s}"
        )));
    }
    let mut forms = vec![LinearForm::new(1, 0, s + 1.0)];
    forms.extend_from_slice(rest);
    Ok(LatticeSum::new(&forms, Range::Positive, Range::NonzeroAll)?
        .evaluate(cfg)?
        .value)
}

/// `sum_{m>=1, n!=0, m+2n!=0} m^{-s-1} n^{-4} (m+2n)^{-1}`.
pub fn sigma_sharp(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    half_plane_sum(
        s,
        &[LinearForm::new(0, 1, 4.0), LinearForm::new(1, 2, 1.0)],
        cfg,
    )
}

/// `sum_{m>=1, n!=0, m+n!=0, m+2n!=0} m^{-s-1} n^{-3} (m+n)^{-1} (m+2n)^{-1}`.
pub fn sigma11(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    let rest = [
        LinearForm::new(0, 1, 3.0),
        LinearForm::new(1, 1, 1.0),
        LinearForm::new(1, 2, 1.0),
    ];
    half_plane_sum(s, &rest, cfg)
}

/// `sum_{m>=1, n!=0, m+n!=0} m^{-s-1} n^{-4} (m+n)^{-1}`.
pub fn sigma21(s: f64, cfg: &SummationConfig) -> Result<HPReal> {
    half_plane_sum(
        s,
        &[LinearForm::new(0, 1, 4.0), LinearForm::new(1, 1, 1.0)],
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SummationConfig {
        SummationConfig::default().with_tol(1e-10)
    }

    #[test]
    fn zhao_value() {
        let v = zeta_g2(&G2Exponents([2.0, 1.0, 1.0, 1.0, 1.0, 1.0]), &cfg()).unwrap();
        assert!((v.to_f64() - 0.0099527234).abs() < 1e-10, "{v}");
    }

    #[test]
    fn weight_six_is_rejected() {
        let r = zeta_g2(&G2Exponents([1.0; 6]), &cfg());
        assert!(matches!(r, Err(Error::Convergence(_))));
        let two_real = G2Exponents([1.5, 2.5, 1.0, 1.0, 1.0, 1.0]);
        assert!(two_real.validate().is_err());
    }

    #[test]
    fn tornheim_symmetry_and_value() {
        let a = tornheim_a2(2.0, 3.0, 2.0, &cfg()).unwrap();
        let b = tornheim_a2(3.0, 2.0, 2.0, &cfg()).unwrap();
        assert_eq!(a, b);
        let c = tornheim_a2(3.0, 3.0, 3.0, &cfg()).unwrap();
        // direct double sum over a square box, tail below 1e-11
        let n = 400u32;
        let mut oracle = 0.0f64;
        for m in 1..n {
            for k in 1..n {
                let (m, k) = (m as f64, k as f64);
                oracle += 1.0 / (m * k * (m + k)).powi(3);
            }
        }
        assert!((c.to_f64() - oracle).abs() < 1e-9, "{c} vs {oracle}");
        assert!((c.to_f64() - 0.136_150_924_753_844_3).abs() < 1e-9, "{c}");
    }
}
