//! The scalar quantities the experiments are calibrated against: the
//! completion-count scale `Λ_r`, the equality threshold for `p(n)`, the
//! exact rational constants `a_r, b_r, c_r` with the bad-pair budget `γ`,
//! and the degree cap `Σ`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact rational from an `f64` (every finite double is rational).
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or_else(|| Error::invalid(format!("{x} is not finite")))
}

/// Integer power with negative exponents allowed.
pub fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// `Λ_r(n, p) = n^(r-2) · p^(C(r,2)-1)`, the natural scale of the number of
/// near-clique completions over a fixed pair.
pub fn lambda_r(n: usize, p: f64, r: usize) -> f64 {
    (n as f64).powi(r as i32 - 2) * p.powi(choose2(r) as i32 - 1)
}

/// Exact rational version of [`lambda_r`] for threshold comparisons.
pub fn lambda_r_exact(n: usize, p: f64, r: usize) -> Result<BigRational> {
    let p = rational_from_f64(p)?;
    Ok(rational_pow(&big(n as i64), r as i64 - 2) * rational_pow(&p, choose2(r) as i64 - 1))
}

#[inline]
pub fn choose2(r: usize) -> usize {
    r * (r - 1) / 2
}

/// Equality threshold `C · n^(-2/(r+1)) · (log n)^(2/((r+1)(r-2)))`
/// (natural logarithm).  At `r = 3` this is `C (log n / n)^(1/2)`.
pub fn threshold_p(n: usize, r: usize, c: f64) -> Result<f64> {
    if n < 3 || r < 3 {
        return Err(Error::invalid("threshold_p needs n >= 3 and r >= 3"));
    }
    let nf = n as f64;
    let main = nf.powf(-2.0 / (r as f64 + 1.0));
    let logpart = nf.ln().powf(2.0 / ((r as f64 + 1.0) * (r as f64 - 2.0)));
    Ok(c * main * logpart)
}

/// Exact rational constants attached to a clique order `r >= 4`.
#[derive(Debug, Clone)]
pub struct RankConstants {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    /// Upper bound on the bad-pair constant: `(1/2) ((c-a)/(4r^2+6))^(r-2)`.
    pub gamma_max: BigRational,
    /// The working value; defaults to `gamma_max / 2`.
    pub gamma: BigRational,
}

/// `a_r = (r-4)/(2(r-3))`, `b_r = r(r-3)/(2(r-1)^2)`, `c_r = (a_r+b_r)/2`,
/// plus the admissible range for `γ`.
pub fn constants(r: usize, gamma: Option<BigRational>) -> Result<RankConstants> {
    if r < 4 {
        return Err(Error::invalid("constants a_r, b_r, c_r need r >= 4"));
    }
    let ri = r as i64;
    let a = big(ri - 4) / big(2 * (ri - 3));
    let b = big(ri * (ri - 3)) / big(2 * (ri - 1) * (ri - 1));
    let c = (&a + &b) / big(2);
    assert!(a < b, "a_r < b_r failed at r = {r}");
    let base = (&c - &a) / big(4 * ri * ri + 6);
    let gamma_max = rational_pow(&base, ri - 2) / big(2);
    let gamma = match gamma {
        Some(g) => {
            if g <= BigRational::zero() || g >= gamma_max {
                return Err(Error::invalid(format!(
                    "gamma must lie in (0, gamma_max); gamma_max = {gamma_max}"
                )));
            }
            g
        }
        None => &gamma_max / big(2),
    };
    Ok(RankConstants { a, b, c, gamma_max, gamma })
}

/// `Σ = 24 r log r · 2^r · max{ (ζp)^{-1}, np (ζ^{r-2} Λ_r)^{-1} }`.
pub fn sigma_cap(n: usize, p: f64, r: usize, zeta: f64) -> Result<f64> {
    if p <= 0.0 || p.is_nan() || zeta <= 0.0 || zeta.is_nan() {
        return Err(Error::invalid("sigma_cap needs p > 0 and zeta > 0"));
    }
    let rf = r as f64;
    let prefactor = 24.0 * rf * rf.ln() * 2f64.powi(r as i32);
    let first = 1.0 / (zeta * p);
    let second = (n as f64) * p / (zeta.powi(r as i32 - 2) * lambda_r(n, p, r));
    Ok(prefactor * first.max(second))
}

/// Parameter bundle for a run: inputs plus every derived constant.
#[derive(Debug, Clone, Serialize)]
pub struct ParamSet {
    pub n: usize,
    pub r: usize,
    pub p: f64,
    pub big_c: f64,
    pub delta: f64,
    pub alpha: f64,
    /// Bad-pair constant as an exact rational rendered as a string, plus a
    /// float echo for convenience.
    pub gamma: String,
    pub gamma_f64: f64,
    pub zeta: f64,
    pub lambda_r: f64,
    pub a_r: String,
    pub b_r: String,
    pub c_r: String,
    pub gamma_max: String,
    pub sigma: f64,
    pub threshold_p: f64,
}

pub const DEFAULT_DELTA: f64 = 0.1;
pub const DEFAULT_ALPHA: f64 = 0.2;

impl ParamSet {
    /// Builds the bundle; `gamma` defaults to half the admissible bound and
    /// `ζ = (2γ)^(1/(r-2))`.
    pub fn new(
        n: usize,
        r: usize,
        p: f64,
        big_c: f64,
        delta: Option<f64>,
        alpha: Option<f64>,
        gamma: Option<f64>,
    ) -> Result<ParamSet> {
        let gamma_rat = gamma.map(rational_from_f64).transpose()?;
        let k = constants(r, gamma_rat)?;
        let gamma_f64 = k.gamma.to_f64().unwrap();
        let zeta = (2.0 * gamma_f64).powf(1.0 / (r as f64 - 2.0));
        Ok(ParamSet {
            n,
            r,
            p,
            big_c,
            delta: delta.unwrap_or(DEFAULT_DELTA),
            alpha: alpha.unwrap_or(DEFAULT_ALPHA),
            gamma: k.gamma.to_string(),
            gamma_f64,
            zeta,
            lambda_r: lambda_r(n, p, r),
            a_r: k.a.to_string(),
            b_r: k.b.to_string(),
            c_r: k.c.to_string(),
            gamma_max: k.gamma_max.to_string(),
            sigma: sigma_cap(n, p, r, zeta)?,
            threshold_p: threshold_p(n, r, big_c)?,
        })
    }
}

/// Exact comparison `lhs < q · n^2 · p^2` for a rational `q` and dyadic `p`;
/// used for bad-vertex classification.
pub fn below_quadratic_threshold(lhs: usize, q: &BigRational, n: usize, p: f64) -> Result<bool> {
    let p = rational_from_f64(p)?;
    let rhs = q * big((n * n) as i64) * (&p * &p);
    Ok(big(lhs as i64) < rhs)
}

pub fn is_nonnegative(x: &BigRational) -> bool {
    !x.is_negative()
}
