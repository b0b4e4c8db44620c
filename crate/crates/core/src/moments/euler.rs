//! Truncated Euler product for the arithmetic factor
//! `a(m) = prod_p (1 - 1/p)^{m^2} sum_k binom(k+m-1, k)^2 p^{-k}`.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::UBig;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Strategy;

/// Binary floating point with explicit precision, rounding half to even.
pub type Real = FBig<HalfEven>;

pub const DEFAULT_PRIME_CUTOFF: u64 = 100_000;
pub const DEFAULT_SERIES_CUTOFF: u32 = 64;
pub const DEFAULT_PRECISION_BITS: usize = 128;

/// Extra bits carried through the product before the final rounding.
const GUARD_BITS: usize = 32;

/// Primes per task; the chunking fixes the reduction order.
const CHUNK: usize = 512;

/// A truncated evaluation of `a(m)` together with its truncation parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaFactorEstimate {
    pub m: u32,
    pub value: Real,
    pub prime_cutoff: u64,
    pub series_cutoff: u32,
    pub precision_bits: usize,
    pub primes_used: usize,
}

impl ZetaFactorEstimate {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn decimal(&self, digits: usize) -> String {
        self.value
            .clone()
            .with_base_and_precision::<10>(digits)
            .value()
            .to_string()
    }

    /// Significant decimal digits supported by `precision_bits`.
    pub fn decimal_digits(&self) -> usize {
        (self.precision_bits as f64 * std::f64::consts::LOG10_2).floor() as usize
    }
}

impl Serialize for ZetaFactorEstimate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ZetaFactorEstimate", 7)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("value", &self.decimal(self.decimal_digits()))?;
        s.serialize_field("decimal_digits", &self.decimal_digits())?;
        s.serialize_field("prime_cutoff", &self.prime_cutoff)?;
        s.serialize_field("series_cutoff", &self.series_cutoff)?;
        s.serialize_field("precision_bits", &self.precision_bits)?;
        s.serialize_field("primes_used", &self.primes_used)?;
        s.end()
    }
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

fn binomial(n: u64, k: u64) -> UBig {
    let k = k.min(n - k);
    let mut acc = UBig::ONE;
    for i in 0..k {
        acc = acc * UBig::from(n - i) / UBig::from(i + 1);
    }
    acc
}

/// The factor for prime `p` as one correctly rounded quotient of the exact
/// rational `(p-1)^{m^2} sum_{k<=K} c_k p^{K-k} / p^{m^2+K}`.
fn prime_factor(p: u64, m: u32, coeffs: &[UBig], bits: usize) -> Real {
    let p_big = UBig::from(p);
    let series_cutoff = coeffs.len() - 1;
    let mut series = UBig::ZERO;
    for c in coeffs {
        series = series * &p_big + c;
    }
    let m2 = (m as usize) * (m as usize);
    let num = UBig::from(p - 1).pow(m2) * series;
    let den = p_big.pow(m2 + series_cutoff);
    let num = Real::from(num).with_precision(bits).value();
    let den = Real::from(den).with_precision(bits).value();
    num / den
}

/// `a(m)` truncated to primes `p <= prime_cutoff` and series terms
/// `k <= series_cutoff`, evaluated at `precision_bits`.
pub fn a_factor(
    m: u32,
    prime_cutoff: u64,
    series_cutoff: u32,
    precision_bits: usize,
) -> Result<ZetaFactorEstimate> {
    a_factor_with(
        m,
        prime_cutoff,
        series_cutoff,
        precision_bits,
        Strategy::default(),
    )
}

pub fn a_factor_with(
    m: u32,
    prime_cutoff: u64,
    series_cutoff: u32,
    precision_bits: usize,
    strategy: Strategy,
) -> Result<ZetaFactorEstimate> {
    if prime_cutoff < 2 {
        return Err(Error::InvalidParameter(format!(
            "prime cutoff must be at least 2, got {prime_cutoff}"
        )));
    }
    if series_cutoff < 1 {
        return Err(Error::InvalidParameter(
            "series cutoff must be at least 1".into(),
        ));
    }
    if precision_bits < 64 {
        return Err(Error::InvalidParameter(format!(
            "precision must be at least 64 bits, got {precision_bits}"
        )));
    }

    let primes = primes_up_to(prime_cutoff);
    let primes_used = primes.len();
    let work = precision_bits + GUARD_BITS;
    let one = Real::ONE.with_precision(work).value();

    // a(0) is the empty structure.
    let value = if m == 0 {
        one
    } else {
        let mm = u64::from(m);
        let coeffs: Vec<UBig> = (0..=u64::from(series_cutoff))
            .map(|k| binomial(k + mm - 1, k).pow(2))
            .collect();
        let chunks: Vec<&[u64]> = primes.chunks(CHUNK).collect();
        let partials = strategy.map(chunks, |chunk| {
            chunk.iter().fold(one.clone(), |acc, &p| {
                acc * prime_factor(p, m, &coeffs, work)
            })
        });
        partials.into_iter().fold(one.clone(), |acc, x| acc * x)
    };

    Ok(ZetaFactorEstimate {
        m,
        value: value.with_precision(precision_bits).value(),
        prime_cutoff,
        series_cutoff,
        precision_bits,
        primes_used,
    })
}
