use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::time::Instant;

use lexcount_core::biwords::{enumerate_biwords_with, render_row, Biword, PlanarArray};
use lexcount_core::lpp::{chain_certificate, last_passage_time};
use lexcount_core::moments::{a_factor_with, f_estimate, ratio_estimate, LimitDiagnostic};
use lexcount_core::rsk::{rsk_forward, rsk_inverse, TableauPair};
use lexcount_core::tableaux::SemistandardTableau;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{
    elapsed_ms, parse_cells, verify_grid, Method, VerificationReport, ARRAY_GUARD_MN,
};
use crate::{
    exit, AFactorArgs, CountArgs, EnumerateArgs, Failure, Format, LimitArgs, Outcome, RskArgs,
    RunConfig, VerifyArgs,
};

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn warn_forced(why: &str) {
    eprintln!("warning: {why}; running anyway because of --force");
}

fn check_guard(config: &RunConfig, why: Option<String>) -> Result<(), Failure> {
    match why {
        Some(why) if !config.opts.force => {
            Err(Failure::guard(format!("{why}; pass --force to run anyway")))
        }
        Some(why) => {
            warn_forced(&why);
            Ok(())
        }
        None => Ok(()),
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::io(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::usage(format!("invalid {what} JSON: {e}")))
}

pub fn count(config: &RunConfig, args: &CountArgs) -> Result<Outcome, Failure> {
    check_guard(config, args.method.guard(args.m, args.n))?;
    let start = Instant::now();
    let value = args.method.compute(args.m, args.n, config.strategy)?;
    let elapsed = config.timing().then(|| elapsed_ms(start));

    let text = match config.opts.format {
        Format::Json => {
            let mut v = json!({
                "command": "count",
                "method": args.method,
                "m": args.m,
                "N": args.n,
                "value": value,
            });
            if let Some(ms) = elapsed {
                v["elapsed_ms"] = json!(ms);
            }
            to_json(&v)
        }
        Format::Csv => {
            let mut s = String::from("method,m,N,value");
            if elapsed.is_some() {
                s.push_str(",elapsed_ms");
            }
            write!(
                s,
                "\n{},{},{},{}",
                args.method.name(),
                args.m,
                args.n,
                value
            )
            .unwrap();
            if let Some(ms) = elapsed {
                write!(s, ",{ms}").unwrap();
            }
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!(
                "{value}\n# method={} m={} N={}",
                args.method.name(),
                args.m,
                args.n
            );
            if let Some(ms) = elapsed {
                write!(s, " elapsed_ms={ms}").unwrap();
            }
            s.push('\n');
            s
        }
    };
    Ok(Outcome::ok(text))
}

pub fn verify(config: &RunConfig, args: &VerifyArgs) -> Result<Outcome, Failure> {
    let cells = match (&args.cells, args.m_max, args.n_max) {
        (Some(spec), _, _) => parse_cells(spec)?,
        (None, Some(m_max), Some(n_max)) => (0..=m_max)
            .flat_map(|m| (0..=n_max).map(move |n| (m, n)))
            .collect(),
        _ => {
            return Err(Failure::usage(
                "verify needs --cells or --m-max with --n-max",
            ))
        }
    };
    let explicit = !args.methods.is_empty();
    let mut methods = if explicit {
        args.methods.clone()
    } else {
        Method::ALL.to_vec()
    };
    methods.sort();
    methods.dedup();

    if config.opts.force {
        for &(m, n) in &cells {
            for meth in &methods {
                if let Some(why) = meth.guard(m, n) {
                    warn_forced(&why);
                }
            }
        }
    }
    let report = verify_grid(
        &cells,
        &methods,
        explicit,
        config.opts.force,
        config.timing(),
        config.strategy,
    )?;
    let text = render_report(&report, config.opts.format);
    Ok(Outcome {
        text,
        code: if report.all_agree {
            exit::SUCCESS
        } else {
            exit::DISAGREEMENT
        },
    })
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => {
            let mut s = String::from("m,N,method,value,agree\n");
            for c in &report.cells {
                for r in &c.results {
                    writeln!(
                        s,
                        "{},{},{},{},{}",
                        c.m,
                        c.n,
                        r.method.name(),
                        r.value,
                        c.agree
                    )
                    .unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            write!(s, "{:>3} {:>4}", "m", "N").unwrap();
            for meth in &report.methods {
                write!(s, " {:>16}", meth.name()).unwrap();
            }
            s.push_str("  agree\n");
            for c in &report.cells {
                write!(s, "{:>3} {:>4}", c.m, c.n).unwrap();
                for meth in &report.methods {
                    let v = c
                        .results
                        .iter()
                        .find(|r| r.method == *meth)
                        .map_or_else(|| "-".to_string(), |r| r.value.to_string());
                    write!(s, " {v:>16}").unwrap();
                }
                writeln!(s, "  {}", if c.agree { "yes" } else { "NO" }).unwrap();
            }
            writeln!(
                s,
                "# {} cells, {}",
                report.cells.len(),
                if report.all_agree {
                    "all methods agree"
                } else {
                    "DISAGREEMENT"
                }
            )
            .unwrap();
            s
        }
    }
}

pub fn enumerate(config: &RunConfig, args: &EnumerateArgs) -> Result<Outcome, Failure> {
    let mn = u64::from(args.m) * args.n as u64;
    let why = (mn > ARRAY_GUARD_MN)
        .then(|| format!("enumerate with m*N = {mn} exceeds the guard limit {ARRAY_GUARD_MN}"));
    check_guard(config, why)?;

    let arrays: Vec<Biword> = enumerate_biwords_with(args.m, args.n, config.strategy)
        .into_iter()
        .filter(|a| args.size.is_none_or(|k| a.size() == k))
        .collect();
    let mut s = String::new();
    match config.opts.format {
        Format::Json => {
            for a in &arrays {
                writeln!(s, "{}", serde_json::to_string(a).unwrap()).unwrap();
            }
        }
        Format::Csv => {
            s.push_str("size,u,v\n");
            for a in &arrays {
                writeln!(
                    s,
                    "{},{},{}",
                    a.size(),
                    render_row(&a.top(), a.m()),
                    render_row(&a.bottom(), a.m())
                )
                .unwrap();
            }
        }
        Format::Text => {
            for a in &arrays {
                writeln!(s, "{}", a.display_letters()).unwrap();
            }
        }
    }
    Ok(Outcome::ok(s))
}

fn render_tableau(s: &mut String, name: &str, t: &SemistandardTableau) {
    writeln!(s, "{name}:").unwrap();
    for row in &t.rows {
        writeln!(s, "  {}", render_row(row, t.m)).unwrap();
    }
}

pub fn rsk(config: &RunConfig, args: &RskArgs) -> Result<Outcome, Failure> {
    let input = read_input(args.input.as_deref())?;
    let text = if args.inverse {
        let pair: TableauPair = parse_json(&input, "tableau pair")?;
        let a = rsk_inverse(&pair)?;
        match config.opts.format {
            Format::Json => to_json(&a),
            Format::Csv => format!(
                "u,v\n{},{}\n",
                render_row(&a.top(), a.m()),
                render_row(&a.bottom(), a.m())
            ),
            Format::Text => format!("{}\n", a.display_letters()),
        }
    } else {
        let a: Biword = parse_json(&input, "biword")?;
        let pair = rsk_forward(&a);
        match config.opts.format {
            Format::Json => to_json(&pair),
            Format::Csv => {
                let mut s = String::from("tableau,row,entries\n");
                for (name, t) in [("p", &pair.p), ("q", &pair.q)] {
                    for (r, row) in t.rows.iter().enumerate() {
                        writeln!(s, "{name},{},{}", r + 1, render_row(row, t.m)).unwrap();
                    }
                }
                s
            }
            Format::Text => {
                let mut s = format!("shape {}\n", pair.shape());
                render_tableau(&mut s, "P", &pair.p);
                render_tableau(&mut s, "Q", &pair.q);
                s
            }
        }
    };
    Ok(Outcome::ok(text))
}

pub fn lpp_time(config: &RunConfig, matrix: &Path) -> Result<Outcome, Failure> {
    let x: PlanarArray = parse_json(&read_input(Some(matrix))?, "matrix")?;
    let time = last_passage_time(&x);
    let chain = chain_certificate(&x);
    let text = match config.opts.format {
        Format::Json => to_json(&json!({ "time": time, "chain": chain.points })),
        Format::Csv => {
            let mut s = String::from("time,i,j\n");
            for (i, j) in &chain.points {
                writeln!(s, "{time},{i},{j}").unwrap();
            }
            s
        }
        Format::Text => {
            let pts: Vec<String> = chain
                .points
                .iter()
                .map(|(i, j)| format!("({i},{j})"))
                .collect();
            format!("{time}\n# chain {}\n", pts.join(" "))
        }
    };
    Ok(Outcome::ok(text))
}

pub fn a_factor(config: &RunConfig, args: &AFactorArgs) -> Result<Outcome, Failure> {
    let start = Instant::now();
    let est = a_factor_with(
        args.m,
        args.prime_cutoff,
        args.series_cutoff,
        args.precision,
        config.strategy,
    )?;
    let elapsed = config.timing().then(|| elapsed_ms(start));
    let value = est.decimal(est.decimal_digits());
    let text = match config.opts.format {
        Format::Json => {
            let mut v: Value = serde_json::to_value(&est).expect("estimate serializes");
            if let Some(ms) = elapsed {
                v["elapsed_ms"] = json!(ms);
            }
            to_json(&v)
        }
        Format::Csv => format!(
            "m,value,prime_cutoff,series_cutoff,precision_bits,primes_used\n{},{},{},{},{},{}\n",
            est.m, value, est.prime_cutoff, est.series_cutoff, est.precision_bits, est.primes_used
        ),
        Format::Text => {
            let mut s = format!(
                "{value}\n# a(m) m={} prime_cutoff={} series_cutoff={} precision_bits={} primes_used={}",
                est.m, est.prime_cutoff, est.series_cutoff, est.precision_bits, est.primes_used
            );
            if let Some(ms) = elapsed {
                write!(s, " elapsed_ms={ms}").unwrap();
            }
            s.push('\n');
            s
        }
    };
    Ok(Outcome::ok(text))
}

pub fn limit(config: &RunConfig, args: &LimitArgs, ratio: bool) -> Result<Outcome, Failure> {
    let diag = if ratio {
        ratio_estimate(args.m, &args.n_list)?
    } else {
        f_estimate(args.m, &args.n_list)?
    };
    Ok(Outcome::ok(render_limit(&diag, config.opts.format)))
}

fn render_limit(d: &LimitDiagnostic, format: Format) -> String {
    match format {
        Format::Json => to_json(d),
        Format::Csv => {
            let mut s = String::from("N,num,den,decimal\n");
            for e in &d.entries {
                writeln!(s, "{},{},{},{}", e.n, e.value.num, e.value.den, e.decimal).unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for e in &d.entries {
                let (rn, rd) = e.value.reduced();
                writeln!(
                    s,
                    "{}\t{}/{}\t{rn}/{rd}\t{}",
                    e.n, e.value.num, e.value.den, e.decimal
                )
                .unwrap();
            }
            let label = if d.conditional_on_conjecture {
                "I_m/a(m), conditional on I_m = a(m) f(m)"
            } else {
                "f(m) estimate"
            };
            writeln!(s, "# {label}, m={}, trend {:?}", d.m, d.trend).unwrap();
            s
        }
    }
}
