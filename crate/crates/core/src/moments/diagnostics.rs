//! Tables of `moment(m, n) / n^{m^2}` for watching the large-`n` limit.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Pow, Zero};
use serde::Serialize;

use super::{moment_product, MomentQuery};
use crate::error::{Error, Result};
use crate::ExactCount;

/// Fractional digits in the decimal rendering of each entry.
pub const DECIMAL_DIGITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiagnosticKind {
    /// The random-matrix factor `f(m)`.
    FEstimate,
    /// `I_m / a(m)`, meaningful only if `I_m = a(m) f(m)` holds.
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
    Mixed,
    /// Fewer than two entries.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: ExactCount,
    pub den: ExactCount,
}

impl Ratio {
    /// Lowest terms.
    pub fn reduced(&self) -> (BigUint, BigUint) {
        let g = self.num.0.gcd(&self.den.0);
        (&self.num.0 / &g, &self.den.0 / &g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitEntry {
    pub n: u64,
    /// Numerator is the exact moment, denominator is `n^{m^2}`.
    pub value: Ratio,
    pub decimal: String,
    pub decimal_digits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimitDiagnostic {
    pub kind: DiagnosticKind,
    pub m: u32,
    pub entries: Vec<LimitEntry>,
    /// Decimal renderings of `entries[k] - entries[k-1]`.
    pub differences: Vec<String>,
    pub trend: Trend,
    /// Set when the quantity depends on the factorization `I_m = a(m) f(m)`.
    pub conditional_on_conjecture: bool,
}

/// Rounds `num / den` (half away from zero) to `digits` fractional digits.
pub fn render_decimal(num: &BigInt, den: &BigUint, digits: usize) -> String {
    let scale = BigUint::from(10u32).pow(digits);
    let mag = num.magnitude() * &scale;
    let (q, r) = mag.div_rem(den);
    let q = if r * 2u32 >= *den { q + 1u32 } else { q };
    let (int, frac) = q.div_rem(&scale);
    let sign = if num.sign() == Sign::Minus && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>digits$}")
}

fn build(kind: DiagnosticKind, m: u32, n_list: &[u64]) -> Result<LimitDiagnostic> {
    if let Some(bad) = n_list.iter().find(|&&n| n == 0) {
        return Err(Error::InvalidParameter(format!(
            "n must be positive, got {bad}"
        )));
    }
    let exponent = m * m;
    let entries: Vec<LimitEntry> = n_list
        .iter()
        .map(|&n| {
            let num = moment_product(MomentQuery::new(m, n));
            let den = BigUint::from(n).pow(exponent);
            let decimal = render_decimal(&BigInt::from(num.0.clone()), &den, DECIMAL_DIGITS);
            LimitEntry {
                n,
                value: Ratio {
                    num,
                    den: ExactCount(den),
                },
                decimal,
                decimal_digits: DECIMAL_DIGITS,
            }
        })
        .collect();

    let mut orders = Vec::new();
    let mut differences = Vec::new();
    for w in entries.windows(2) {
        let (a, b) = (&w[0].value, &w[1].value);
        let lhs = BigInt::from(&b.num.0 * &a.den.0);
        let rhs = BigInt::from(&a.num.0 * &b.den.0);
        orders.push(lhs.cmp(&rhs));
        differences.push(render_decimal(
            &(lhs - rhs),
            &(&a.den.0 * &b.den.0),
            DECIMAL_DIGITS,
        ));
    }
    let trend = if orders.is_empty() {
        Trend::Undetermined
    } else if orders.iter().all(|&o| o == Ordering::Greater) {
        Trend::Increasing
    } else if orders.iter().all(|&o| o == Ordering::Less) {
        Trend::Decreasing
    } else if orders.iter().all(|&o| o == Ordering::Equal) {
        Trend::Constant
    } else {
        Trend::Mixed
    };

    Ok(LimitDiagnostic {
        kind,
        m,
        entries,
        differences,
        trend,
        conditional_on_conjecture: kind == DiagnosticKind::Ratio,
    })
}

/// `moment(m, n) / n^{m^2}` for each `n`, whose limit defines `f(m)`.
pub fn f_estimate(m: u32, n_list: &[u64]) -> Result<LimitDiagnostic> {
    build(DiagnosticKind::FEstimate, m, n_list)
}

/// The same table read as the number of lexicographic arrays with bounded
/// increasing subsequences over `n^{m^2}`, whose limit is `I_m / a(m)`
/// provided the factorization `I_m = a(m) f(m)` holds.
pub fn ratio_estimate(m: u32, n_list: &[u64]) -> Result<LimitDiagnostic> {
    build(DiagnosticKind::Ratio, m, n_list)
}
