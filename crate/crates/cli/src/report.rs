//! Counting methods, guard limits and the cross-method verification report.

use std::time::Instant;

use clap::ValueEnum;
use lexcount_core::biwords::count_biwords;
use lexcount_core::lpp::count_matrices_with;
use lexcount_core::moments::{moment_partition_sum_with, moment_product, MomentQuery};
use lexcount_core::{ExactCount, Strategy};
use serde::Serialize;

use crate::Failure;

/// Brute-force array enumeration is refused above this `m * N`.
pub const ARRAY_GUARD_MN: u64 = 12;
/// Brute-force matrix counting is refused above these.
pub const MATRIX_GUARD_M: u32 = 3;
pub const MATRIX_GUARD_N: u64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Product,
    PartitionSum,
    BruteArrays,
    BruteMatrices,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Product,
        Method::PartitionSum,
        Method::BruteArrays,
        Method::BruteMatrices,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Product => "product",
            Method::PartitionSum => "partition-sum",
            Method::BruteArrays => "brute-arrays",
            Method::BruteMatrices => "brute-matrices",
        }
    }

    /// Why this method is refused for `(m, n)`, if it is.
    pub fn guard(self, m: u32, n: u64) -> Option<String> {
        match self {
            Method::BruteArrays if u64::from(m) * n > ARRAY_GUARD_MN => Some(format!(
                "brute-arrays with m*N = {} exceeds the guard limit {ARRAY_GUARD_MN}",
                u64::from(m) * n
            )),
            Method::BruteMatrices if m > MATRIX_GUARD_M || n > MATRIX_GUARD_N => Some(format!(
                "brute-matrices needs m <= {MATRIX_GUARD_M} and N <= {MATRIX_GUARD_N} (got m={m}, N={n})"
            )),
            _ => None,
        }
    }

    pub fn compute(self, m: u32, n: u64, strategy: Strategy) -> Result<ExactCount, Failure> {
        let q = MomentQuery::new(m, n);
        Ok(match self {
            Method::Product => moment_product(q),
            Method::PartitionSum => {
                if u32::try_from(n).is_err() {
                    return Err(Failure::usage(format!(
                        "N = {n} is too large for partition-sum"
                    )));
                }
                moment_partition_sum_with(q, strategy)
            }
            Method::BruteArrays => {
                let n = usize::try_from(n).map_err(|_| Failure::usage("N too large"))?;
                count_biwords(m, n, strategy)
            }
            Method::BruteMatrices => count_matrices_with(m, n, strategy),
        })
    }
}

/// Milliseconds since `start`, rounded to microseconds.
pub fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Debug, Clone, Serialize)]
pub struct MethodResult {
    pub method: Method,
    pub value: ExactCount,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub m: u32,
    pub n: u64,
    pub results: Vec<MethodResult>,
    /// Methods not run on this cell because of the guard limits.
    pub skipped: Vec<Method>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub methods: Vec<Method>,
    pub cells: Vec<Cell>,
    pub all_agree: bool,
}

/// Parses `m:n` and `m:lo-hi` items separated by commas.
pub fn parse_cells(spec: &str) -> Result<Vec<(u32, u64)>, Failure> {
    let bad = |item: &str| Failure::usage(format!("bad cell {item:?}, expected m:n or m:lo-hi"));
    let mut cells = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (m, ns) = item.split_once(':').ok_or_else(|| bad(item))?;
        let m: u32 = m.trim().parse().map_err(|_| bad(item))?;
        let (lo, hi) = match ns.split_once('-') {
            Some((lo, hi)) => (lo.trim().parse(), hi.trim().parse()),
            None => (ns.trim().parse(), ns.trim().parse()),
        };
        let (lo, hi): (u64, u64) = (lo.map_err(|_| bad(item))?, hi.map_err(|_| bad(item))?);
        if lo > hi {
            return Err(bad(item));
        }
        cells.extend((lo..=hi).map(|n| (m, n)));
    }
    Ok(cells)
}

/// Runs every requested method on every cell. With `explicit` methods a
/// guard violation is refused unless `force` is set; otherwise guarded
/// methods are skipped on the cells they do not fit.
pub fn verify_grid(
    cells: &[(u32, u64)],
    methods: &[Method],
    explicit: bool,
    force: bool,
    timing: bool,
    strategy: Strategy,
) -> Result<VerificationReport, Failure> {
    if explicit && !force {
        for &(m, n) in cells {
            if let Some(why) = methods.iter().find_map(|meth| meth.guard(m, n)) {
                return Err(Failure::guard(format!("{why}; pass --force to run anyway")));
            }
        }
    }
    let mut out = Vec::with_capacity(cells.len());
    for &(m, n) in cells {
        let mut results = Vec::new();
        let mut skipped = Vec::new();
        for &method in methods {
            if !force && method.guard(m, n).is_some() {
                skipped.push(method);
                continue;
            }
            let start = Instant::now();
            let value = method.compute(m, n, strategy)?;
            results.push(MethodResult {
                method,
                value,
                elapsed_ms: timing.then(|| elapsed_ms(start)),
            });
        }
        let agree = results.windows(2).all(|w| w[0].value == w[1].value);
        out.push(Cell {
            m,
            n,
            results,
            skipped,
            agree,
        });
    }
    let all_agree = out.iter().all(|c| c.agree);
    Ok(VerificationReport {
        methods: methods.to_vec(),
        cells: out,
        all_agree,
    })
}
