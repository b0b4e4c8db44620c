//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! fails if any criterion fails or overruns its time budget.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use lexcount_core::biwords::{
    enumerate_biwords, from_matrix, lis_by_definition, longest_weakly_increasing, parse_letter_row,
    Biword, PlanarArray,
};
use lexcount_core::lpp::{count_matrices, last_passage_time};
use lexcount_core::moments::{
    a_factor, f_estimate, moment_partition_sum, moment_product, MomentQuery,
};
use lexcount_core::partitions::{d_lambda, enumerate_partitions, PartitionBounds};
use lexcount_core::rsk::{rsk_forward, rsk_inverse, TableauPair};
use lexcount_core::tableaux::enumerate_ssyt;
use num_bigint::BigUint;

type Check = Result<(), String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Check);

const BIN: &str = env!("CARGO_BIN_EXE_lexcount");

/// The (m, N) grid shared by criteria 4, 5 and 9.
const GRID: [(u32, u64); 10] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 1),
    (3, 2),
];
const GRID_SPEC: &str = "1:1-5,2:1-3,3:1-2";

/// The twenty arrays over {a, b} with longest weakly increasing subsequence
/// at most 2, as (top, bottom).
const TWENTY_ARRAYS: [(&str, &str); 20] = [
    ("", ""),
    ("a", "a"),
    ("a", "b"),
    ("b", "b"),
    ("b", "a"),
    ("ab", "aa"),
    ("aa", "ab"),
    ("ab", "ba"),
    ("aa", "bb"),
    ("aa", "aa"),
    ("bb", "ab"),
    ("bb", "bb"),
    ("ab", "bb"),
    ("bb", "aa"),
    ("ab", "ab"),
    ("abb", "bab"),
    ("aab", "bba"),
    ("abb", "baa"),
    ("aab", "aba"),
    ("aabb", "bbaa"),
];

fn q(m: u32, n: u64) -> MomentQuery {
    MomentQuery::new(m, n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str], threads: Option<&str>) -> Result<(i32, String), String> {
    let mut cmd = Command::new(BIN);
    cmd.args(args);
    if let Some(t) = threads {
        cmd.env("LEXCOUNT_THREADS", t);
    }
    let out = cmd.output().map_err(|e| format!("cannot run {BIN}: {e}"))?;
    let stdout = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), stdout))
}

/// Number of leading decimal digits on which `a` and `b` agree, measured as
/// the log relative error `-log10(|a - b| / |b|)`.
fn agreeing_digits(a: f64, b: f64) -> f64 {
    let rel = ((a - b) / b).abs();
    if rel == 0.0 {
        f64::INFINITY
    } else {
        -rel.log10()
    }
}

fn c1_headline_number() -> Check {
    let routes = [
        ("product", moment_product(q(2, 2))),
        ("partition-sum", moment_partition_sum(q(2, 2))),
        ("arrays", (enumerate_biwords(2, 2).len() as u64).into()),
        ("matrices", count_matrices(2, 2)),
    ];
    for (name, v) in &routes {
        ensure(*v == 20, || format!("{name} gave {v}, expected 20"))?;
    }
    Ok(())
}

fn c2_listed_arrays() -> Check {
    let expect: BTreeSet<(String, String)> = TWENTY_ARRAYS
        .iter()
        .map(|(u, v)| (u.to_string(), v.to_string()))
        .collect();
    ensure(expect.len() == 20, || {
        "transcribed list has duplicates".into()
    })?;
    for (u, v) in &expect {
        let b = Biword::from_rows(
            2,
            &parse_letter_row(u).unwrap(),
            &parse_letter_row(v).unwrap(),
        );
        ensure(b.is_ok(), || format!("({u}; {v}) is not lexicographic"))?;
    }

    let (code, out) = run_cli(&["enumerate", "--m", "2", "--N", "2"], None)?;
    ensure(code == 0, || format!("enumerate exited with {code}"))?;
    let lines: Vec<&str> = out.lines().collect();
    ensure(lines.len() == 20, || {
        format!("{} lines, expected 20", lines.len())
    })?;
    let got: BTreeSet<(String, String)> = lines
        .iter()
        .map(|l| {
            let inner = l.trim_start_matches('(').trim_end_matches(')');
            let (u, v) = inner.split_once(';').unwrap_or((inner, ""));
            (u.trim().to_string(), v.trim().to_string())
        })
        .collect();
    ensure(got == expect, || format!("sets differ: got {got:?}"))?;

    let (code, out) = run_cli(&["enumerate", "--m", "2", "--N", "2", "--size", "4"], None)?;
    ensure(code == 0 && out == "(aabb; bbaa)\n", || {
        format!("size-4 listing was {out:?} (exit {code})")
    })
}

fn c3_formula_cross_equality() -> Check {
    for m in 0..=4 {
        for n in 0..=6 {
            let a = moment_product(q(m, n));
            let b = moment_partition_sum(q(m, n));
            ensure(a == b, || {
                format!("m={m} n={n}: product {a} vs partition sum {b}")
            })?;
        }
    }
    Ok(())
}

fn c4_arrays_match_moment() -> Check {
    for &(m, n) in &GRID {
        let listed = enumerate_biwords(m, n as usize).len() as u64;
        let expect = moment_product(q(m, n));
        ensure(expect == listed, || {
            format!("m={m} n={n}: {listed} arrays vs moment {expect}")
        })?;
    }
    Ok(())
}

fn c5_matrices_match_moment() -> Check {
    for &(m, n) in &GRID {
        let counted = count_matrices(m, n);
        let expect = moment_product(q(m, n));
        ensure(counted == expect, || {
            format!("m={m} n={n}: {counted} matrices vs moment {expect}")
        })?;
    }
    let x = PlanarArray::new(vec![vec![1, 2, 0], vec![3, 0, 0], vec![1, 1, 2]]).unwrap();
    let a = Biword::from_rows(
        3,
        &[1, 1, 1, 2, 2, 2, 3, 3, 3, 3],
        &[1, 2, 2, 1, 1, 1, 1, 2, 3, 3],
    )
    .unwrap();
    ensure(from_matrix(&x) == a, || {
        "matrix does not correspond to the biword".into()
    })?;
    let t = last_passage_time(&x);
    let l = longest_weakly_increasing(&a);
    ensure(t == 8 && l == 8 && lis_by_definition(&a) == 8, || {
        format!("passage time {t}, longest subsequence {l}; expected 8")
    })
}

fn all_biwords_of_size(m: u32, k: usize) -> Vec<Biword> {
    fn go(m: u32, k: usize, start: u32, acc: &mut Vec<(u32, u32)>, out: &mut Vec<Biword>) {
        if acc.len() == k {
            out.push(Biword::new(m, acc.clone()).unwrap());
            return;
        }
        for idx in start..m * m {
            acc.push((idx / m + 1, idx % m + 1));
            go(m, k, idx, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(m, k, 0, &mut Vec::new(), &mut out);
    out
}

fn c6_rsk_bijection() -> Check {
    for m in 0..=3u32 {
        let mut forward_images = BTreeSet::new();
        for k in 0..=6 {
            for a in all_biwords_of_size(m, k) {
                let pair = rsk_forward(&a);
                pair.validate().map_err(|e| format!("{a}: {e}"))?;
                let back = rsk_inverse(&pair).map_err(|e| format!("{a}: {e}"))?;
                ensure(back == a, || format!("inverse of forward({a}) is {back}"))?;
                let first = pair.shape().first_row() as usize;
                let lis = longest_weakly_increasing(&a);
                ensure(first == lis, || {
                    format!("{a}: first row {first} vs lis {lis}")
                })?;
                forward_images.insert(format!("{pair:?}"));
            }
        }
        let mut pairs = 0usize;
        for weight in 0..=6u64 {
            for shape in enumerate_partitions(weight, PartitionBounds::new(m, 6)) {
                let tabs = enumerate_ssyt(&shape, m);
                for p in &tabs {
                    for qt in &tabs {
                        let pair = TableauPair {
                            p: p.clone(),
                            q: qt.clone(),
                        };
                        let a = rsk_inverse(&pair).map_err(|e| e.to_string())?;
                        ensure(rsk_forward(&a) == pair, || {
                            format!("forward(inverse) differs for {a}")
                        })?;
                        pairs += 1;
                    }
                }
            }
        }
        ensure(pairs == forward_images.len(), || {
            format!(
                "m={m}: {pairs} tableau pairs vs {} biword images",
                forward_images.len()
            )
        })?;
    }
    Ok(())
}

fn c7_d_lambda_oracle() -> Check {
    for weight in 0..=8u64 {
        for lambda in enumerate_partitions(weight, PartitionBounds::new(4, 4)) {
            for m in 0..=4 {
                let d = d_lambda(&lambda, m);
                let listed = enumerate_ssyt(&lambda, m).len() as u64;
                ensure(d == listed, || {
                    format!("{lambda}, m={m}: formula {d} vs {listed} tableaux")
                })?;
            }
        }
    }
    Ok(())
}

fn c8_asymptotic_diagnostics() -> Check {
    let mut ns: Vec<u64> = (1..=200).collect();
    ns.extend([
        1_000, 4_096, 10_000, 65_537, 100_000, 314_159, 500_000, 999_999, 1_000_000,
    ]);
    let d = f_estimate(1, &ns).map_err(|e| e.to_string())?;
    for e in &d.entries {
        let ok = e.value.num.value() == &BigUint::from(e.n + 1)
            && e.value.den.value() == &BigUint::from(e.n);
        ensure(ok, || {
            format!("f_estimate(1, {}) = {}/{}", e.n, e.value.num, e.value.den)
        })?;
    }

    let d = f_estimate(2, &[1000]).map_err(|e| e.to_string())?;
    let v: f64 = d.entries[0].decimal.parse().unwrap();
    let rel = (v - 1.0 / 12.0).abs() * 12.0;
    ensure(rel < 0.01, || {
        format!("f_estimate(2, 1000) = {v}, {rel} away from 1/12")
    })?;

    let a1 = a_factor(1, 100_000, 64, 128).map_err(|e| e.to_string())?;
    let digits = agreeing_digits(a1.to_f64(), 1.0);
    ensure(digits >= 10.0, || {
        format!(
            "a(1) = {} agrees with 1 to {digits:.2} digits",
            a1.decimal(30)
        )
    })?;

    let small = a_factor(2, 100_000, 64, 128).map_err(|e| e.to_string())?;
    let large = a_factor(2, 1_000_000, 64, 128).map_err(|e| e.to_string())?;
    let digits = agreeing_digits(small.to_f64(), large.to_f64());
    ensure(digits >= 6.0, || {
        format!(
            "a(2) at 1e5 = {}, at 1e6 = {}: {digits:.2} digits",
            small.decimal(12),
            large.decimal(12)
        )
    })
}

fn c9_determinism() -> Check {
    let args = [
        "verify",
        "--cells",
        GRID_SPEC,
        "--no-timing",
        "--format",
        "json",
    ];
    let (c1, one) = run_cli(&args, Some("1"))?;
    let (c8, eight) = run_cli(&args, Some("8"))?;
    ensure(c1 == 0 && c8 == 0, || format!("exit codes {c1} and {c8}"))?;
    ensure(!one.is_empty() && one == eight, || {
        "outputs differ between 1 and 8 threads".into()
    })
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 9] = [
        (
            "1",
            "moment(2,2) = 20 by all four routes",
            Duration::from_secs(1),
            c1_headline_number,
        ),
        (
            "2",
            "enumerate --m 2 --N 2 reproduces the twenty listed arrays",
            Duration::from_secs(1),
            c2_listed_arrays,
        ),
        (
            "3",
            "product == partition sum for m <= 4, N <= 6",
            Duration::from_secs(5),
            c3_formula_cross_equality,
        ),
        (
            "4",
            "array counts == moment on the test grid",
            Duration::from_secs(60),
            c4_arrays_match_moment,
        ),
        (
            "5",
            "matrix counts == moment; passage time of the 3x3 example is 8",
            Duration::from_secs(60),
            c5_matrices_match_moment,
        ),
        (
            "6",
            "RSK roundtrips both ways for m <= 3, K <= 6; first row == lis",
            Duration::from_secs(120),
            c6_rsk_bijection,
        ),
        (
            "7",
            "d_lambda == SSYT enumeration for |lambda| <= 8, m <= 4",
            Duration::from_secs(10),
            c7_d_lambda_oracle,
        ),
        (
            "8",
            "limit diagnostics and Euler factor stability",
            Duration::from_secs(60),
            c8_asymptotic_diagnostics,
        ),
        (
            "9",
            "verify JSON is byte-identical with 1 and 8 threads",
            Duration::from_secs(60),
            c9_determinism,
        ),
    ];

    let mut failures = Vec::new();
    for (id, what, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= budget => Ok(()),
            Ok(()) => Err(format!("took {took:.2?}, budget {budget:?}")),
            Err(e) => Err(e),
        };
        match &verdict {
            Ok(()) => println!("[PASS] criterion {id}: {what} ({took:.2?})"),
            Err(e) => {
                println!("[FAIL] criterion {id}: {what} ({took:.2?}): {e}");
                failures.push(id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
