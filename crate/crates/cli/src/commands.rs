//! Subcommand implementations. Each renders its whole report into an
//! [`Output`]; nothing here touches stdout directly.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use quadrics_core::coxeter::{all_subsets, b_poly, special_subsets, RootSubset};
use quadrics_core::orbits::{b_equivariant, fibonacci, ordered_bell_table, Method};
use quadrics_core::tableaux::involution_table;
use quadrics_core::Cutoffs;
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::Cache;
use crate::config::{Command, Format, MethodSel, NRange, RunConfig};
use crate::reference::{self, Audit, TABLE_N};
use crate::verify::{self, Status};
use crate::{CliError, EXIT_FAILURE, EXIT_OK};

/// Rendered result of one command.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// Timings and other run-dependent diagnostics.
    pub stderr: String,
    pub code: i32,
}

pub fn run(config: &RunConfig) -> Result<Output, CliError> {
    config.validate()?;
    match &config.command {
        Command::Count { range, method } => count(config, range, *method),
        Command::Table { n } => table(config, *n),
        Command::Verify { range } => verify_cmd(config, range.as_ref()),
        Command::Conjecture { range } => conjecture(config, range),
        Command::Sequence { name, terms } => sequence(config, name, *terms),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize") + "\n"
}

/// One RFC 4180 record, CRLF-terminated.
fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("fields are UTF-8")
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---------------------------------------------------------------- count

struct Computed {
    n: usize,
    method: Method,
    value: BigUint,
    elapsed: Duration,
    cached: bool,
}

#[derive(Serialize)]
struct MethodValue {
    method: &'static str,
    value: String,
}

#[derive(Serialize)]
struct CountJson {
    n: usize,
    value: Option<String>,
    agree: bool,
    methods: Vec<MethodValue>,
    skipped: Vec<&'static str>,
}

fn count(config: &RunConfig, range: &NRange, method: MethodSel) -> Result<Output, CliError> {
    let cutoffs = &config.cutoffs;
    if range.start() == 0 {
        return Err(CliError::Usage("orbit counts start at n = 1".into()));
    }
    if method == MethodSel::One(Method::Descents) && range.end() > cutoffs.perm_scan {
        return Err(CliError::Usage(format!(
            "n = {} exceeds the descent-scan cutoff {} (raise --cutoff-perm)",
            range.end(),
            cutoffs.perm_scan
        )));
    }
    let mut cache = Cache::open(config.cache.as_deref())?;

    let tasks: Vec<(usize, Method)> = range
        .iter()
        .flat_map(|n| method.methods().into_iter().map(move |m| (n, m)))
        .filter(|&(n, m)| m != Method::Descents || n <= cutoffs.perm_scan)
        .collect();
    let results: Vec<Computed> = tasks
        .par_iter()
        .map(|&(n, m)| {
            if let Some(value) = cache.get(m, n) {
                return Ok(Computed {
                    n,
                    method: m,
                    value,
                    elapsed: Duration::ZERO,
                    cached: true,
                });
            }
            let start = Instant::now();
            let value = m.compute(n, cutoffs)?;
            Ok(Computed {
                n,
                method: m,
                value,
                elapsed: start.elapsed(),
                cached: false,
            })
        })
        .collect::<Result<_, CliError>>()?;
    for r in &results {
        cache.insert(r.method, r.n, &r.value);
    }
    cache.save()?;

    let mut out = Output::default();
    let mut reports = Vec::new();
    let mut csv = csv_line(&["n", "method", "value"]);
    for n in range.iter() {
        let rows: Vec<&Computed> = results.iter().filter(|r| r.n == n).collect();
        let agree = rows.windows(2).all(|w| w[0].value == w[1].value);
        if !agree {
            out.code = EXIT_FAILURE;
        }
        let skipped: Vec<&'static str> = method
            .methods()
            .into_iter()
            .filter(|m| !rows.iter().any(|r| r.method == *m))
            .map(Method::name)
            .collect();
        for r in &rows {
            let tag = if r.cached { " (cache)" } else { "" };
            let _ = writeln!(
                out.stderr,
                "timing n={n} {}: {:.3} ms{tag}",
                r.method,
                millis(r.elapsed)
            );
            csv += &csv_line(&[&n.to_string(), r.method.name(), &r.value.to_string()]);
        }
        let value = agree.then(|| rows[0].value.to_string());
        match (method, &value) {
            (MethodSel::One(m), Some(v)) => {
                let _ = writeln!(out.stdout, "b(X_{n}) = {v}  ({m})");
            }
            _ => {
                match &value {
                    Some(v) => {
                        let _ = writeln!(out.stdout, "b(X_{n}) = {v}");
                    }
                    None => {
                        let _ = writeln!(out.stdout, "b(X_{n}): METHODS DISAGREE");
                    }
                }
                for r in &rows {
                    let _ = writeln!(out.stdout, "  {:<13}{}", r.method.name(), r.value);
                }
                for s in &skipped {
                    let _ = writeln!(out.stdout, "  {s:<13}skipped (n > scan cutoff {})", cutoffs.perm_scan);
                }
                if value.is_some() {
                    let _ = writeln!(out.stdout, "  all {} methods agree", rows.len());
                }
            }
        }
        reports.push(CountJson {
            n,
            value,
            agree,
            methods: rows
                .iter()
                .map(|r| MethodValue {
                    method: r.method.name(),
                    value: r.value.to_string(),
                })
                .collect(),
            skipped,
        });
    }
    match config.format {
        Format::Text => {}
        Format::Json if range.is_single() => out.stdout = to_json(&reports[0]),
        Format::Json => out.stdout = to_json(&reports),
        Format::Csv => out.stdout = csv,
    }
    Ok(out)
}

// ---------------------------------------------------------------- table

#[derive(Serialize)]
struct TableRowJson {
    subset: String,
    special: bool,
    polynomial: String,
    value_at_one: String,
    unimodal: bool,
}

#[derive(Serialize)]
struct AuditRowJson {
    subset: String,
    printed: String,
    computed: String,
    matches: bool,
    diagnosis: String,
}

#[derive(Serialize)]
struct AuditJson {
    matching: usize,
    total: usize,
    rows: Vec<AuditRowJson>,
}

#[derive(Serialize)]
struct TableJson {
    n: usize,
    rows: Vec<TableRowJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    audit: Option<AuditJson>,
}

fn check_scan_size(n: usize, cutoffs: &Cutoffs) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > cutoffs.perm_scan {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the permutation-scan cutoff {} (raise --cutoff-perm)",
            cutoffs.perm_scan
        )));
    }
    Ok(())
}

fn table(config: &RunConfig, n: usize) -> Result<Output, CliError> {
    check_scan_size(n, &config.cutoffs)?;
    let subsets = all_subsets(n);
    let polys: Vec<_> = subsets.par_iter().map(b_poly).collect();
    let audit = (n == TABLE_N).then(|| {
        reference::audit_with(|j| {
            let idx = subsets.iter().position(|s| s == j).expect("every subset was scanned");
            polys[idx].clone()
        })
    });
    let one = num_bigint::BigInt::from(1);
    let rows: Vec<TableRowJson> = subsets
        .iter()
        .zip(&polys)
        .map(|(j, p)| TableRowJson {
            subset: j.to_string(),
            special: j.is_special(),
            polynomial: p.display_var('q').to_string(),
            value_at_one: p.eval(&one).to_string(),
            unimodal: p.is_unimodal(),
        })
        .collect();

    let stdout = match config.format {
        Format::Text => table_text(n, &rows, audit.as_ref()),
        Format::Csv => {
            let mut s = csv_line(&["subset", "special", "polynomial", "value_at_one", "unimodal"]);
            for r in &rows {
                s += &csv_line(&[
                    &r.subset,
                    yes_no(r.special),
                    &r.polynomial,
                    &r.value_at_one,
                    yes_no(r.unimodal),
                ]);
            }
            s
        }
        Format::Json => to_json(&TableJson {
            n,
            rows,
            audit: audit.map(|a| AuditJson {
                matching: a.matching(),
                total: a.rows.len(),
                rows: a
                    .rows
                    .iter()
                    .map(|r| AuditRowJson {
                        subset: r.subset.to_string(),
                        printed: r.printed.clone(),
                        computed: r.computed.clone(),
                        matches: r.matches(),
                        diagnosis: r.diagnosis.describe(),
                    })
                    .collect(),
            }),
        }),
    };
    Ok(Output {
        stdout,
        ..Output::default()
    })
}

fn table_text(n: usize, rows: &[TableRowJson], audit: Option<&Audit>) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "B_{{{n},J}}(q) for every J in [{}], by size then lexicographic",
        n - 1
    );
    let _ = writeln!(s, "{:<12} {:<8} {:>8} {:<9} B(q)", "J", "special", "B(1)", "unimodal");
    for r in rows {
        let _ = writeln!(
            s,
            "{:<12} {:<8} {:>8} {:<9} {}",
            r.subset,
            yes_no(r.special),
            r.value_at_one,
            yes_no(r.unimodal),
            r.polynomial
        );
    }
    if let Some(audit) = audit {
        let _ = writeln!(s);
        let _ = writeln!(s, "Comparison with the published table (published row order)");
        let _ = writeln!(s, "{:<12} {:<24} {:<24} status", "J", "printed", "computed");
        for r in &audit.rows {
            let _ = writeln!(
                s,
                "{:<12} {:<24} {:<24} {}",
                r.subset.to_string(),
                r.printed,
                r.computed,
                r.diagnosis.describe()
            );
        }
        let _ = writeln!(s, "{}", audit.summary());
    }
    s
}

// ---------------------------------------------------------------- verify

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    range: Option<String>,
    status: &'static str,
    detail: Option<String>,
    micros: u64,
}

#[derive(Serialize)]
struct VerifyJson {
    status: &'static str,
    checks: Vec<CheckJson>,
}

fn verify_cmd(config: &RunConfig, range: Option<&NRange>) -> Result<Output, CliError> {
    let report = verify::run(range, &config.cutoffs);
    let passed = report.passed();
    let code = if passed { EXIT_OK } else { EXIT_FAILURE };
    let overall = if passed { "pass" } else { "FAIL" };
    let stdout = match config.format {
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let range = c.range.as_ref().map_or("-".to_string(), ToString::to_string);
                let _ = write!(
                    s,
                    "[{:<7}] {:<42} n={:<7} {:>10.1} ms",
                    c.status.label(),
                    c.name,
                    range,
                    millis(c.elapsed)
                );
                if let Some(d) = &c.detail {
                    let _ = write!(s, "  {d}");
                }
                s.push('\n');
            }
            let ran = report.checks.iter().filter(|c| c.status != Status::Skipped).count();
            let _ = writeln!(s, "overall: {overall} ({ran} checks run)");
            s
        }
        Format::Csv => {
            let mut s = csv_line(&["check", "range", "status", "millis", "detail"]);
            for c in &report.checks {
                let range = c.range.as_ref().map_or(String::new(), ToString::to_string);
                s += &csv_line(&[
                    c.name,
                    &range,
                    c.status.label(),
                    &format!("{:.3}", millis(c.elapsed)),
                    c.detail.as_deref().unwrap_or(""),
                ]);
            }
            s
        }
        Format::Json => to_json(&VerifyJson {
            status: overall,
            checks: report
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name,
                    range: c.range.as_ref().map(ToString::to_string),
                    status: c.status.label(),
                    detail: c.detail.clone(),
                    micros: u64::try_from(c.elapsed.as_micros()).unwrap_or(u64::MAX),
                })
                .collect(),
        }),
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code,
    })
}

// ---------------------------------------------------------------- conjecture

#[derive(Serialize)]
struct Counterexample {
    subset: String,
    polynomial: String,
}

#[derive(Serialize)]
struct ConjectureJson {
    n: usize,
    subsets: usize,
    unimodal: usize,
    counterexamples: Vec<Counterexample>,
}

fn conjecture(config: &RunConfig, range: &NRange) -> Result<Output, CliError> {
    check_scan_size(range.start(), &config.cutoffs)?;
    check_scan_size(range.end(), &config.cutoffs)?;
    let mut text = String::new();
    let mut csv = csv_line(&["n", "subset", "polynomial", "unimodal"]);
    let mut reports = Vec::new();
    for n in range.iter() {
        let subsets: Vec<RootSubset> = all_subsets(n);
        let polys: Vec<_> = subsets.par_iter().map(b_poly).collect();
        let mut report = ConjectureJson {
            n,
            subsets: subsets.len(),
            unimodal: 0,
            counterexamples: Vec::new(),
        };
        for (j, p) in subsets.iter().zip(&polys) {
            let rendered = p.display_var('q').to_string();
            let ok = p.is_unimodal();
            csv += &csv_line(&[&n.to_string(), &j.to_string(), &rendered, yes_no(ok)]);
            if ok {
                report.unimodal += 1;
            } else {
                let _ = writeln!(text, "counterexample: n={n} J={j} B(q)={rendered}");
                report.counterexamples.push(Counterexample {
                    subset: j.to_string(),
                    polynomial: rendered,
                });
            }
        }
        let _ = writeln!(
            text,
            "n={n}: {} of {} polynomials B_{{n,J}}(q) unimodal{}",
            report.unimodal,
            report.subsets,
            if report.counterexamples.is_empty() {
                "; no counterexample found"
            } else {
                ""
            }
        );
        reports.push(report);
    }
    let stdout = match config.format {
        Format::Text => text,
        Format::Csv => csv,
        Format::Json if range.is_single() => to_json(&reports[0]),
        Format::Json => to_json(&reports),
    };
    Ok(Output {
        stdout,
        ..Output::default()
    })
}

// ---------------------------------------------------------------- sequence

pub const SEQUENCES: [&str; 6] = [
    "borel_orbits",
    "ordered_bell",
    "involutions",
    "fibonacci",
    "equivariant_orbits",
    "special_subset_counts",
];

/// Beyond this `n` the composition route (which visits `2^{n-1}`
/// compositions) is left out of the agreement check for `borel_orbits`.
pub const COMPOSITION_AGREEMENT_MAX: usize = 25;

#[derive(Serialize)]
struct SequenceJson<'a> {
    sequence: &'a str,
    offset: usize,
    provenance: String,
    terms: Vec<String>,
}

fn borel_term(n: usize, cutoffs: &Cutoffs) -> Result<BigUint, CliError> {
    let mut methods = vec![Method::Skew, Method::Hermite];
    if n <= COMPOSITION_AGREEMENT_MAX {
        methods.insert(0, Method::Compositions);
    }
    let values = methods
        .iter()
        .map(|m| m.compute(n, cutoffs))
        .collect::<Result<Vec<_>, _>>()?;
    if values.windows(2).any(|w| w[0] != w[1]) {
        let listed: Vec<String> = methods.iter().zip(&values).map(|(m, v)| format!("{m} {v}")).collect();
        return Err(CliError::Failure(format!(
            "n={n}: methods disagree: {}",
            listed.join(", ")
        )));
    }
    Ok(values.into_iter().next().expect("at least two methods"))
}

fn sequence(config: &RunConfig, name: &str, terms: usize) -> Result<Output, CliError> {
    let (offset, provenance, values): (usize, String, Vec<BigUint>) = match name {
        "borel_orbits" => (
            1,
            format!(
                "b(X_n): skew-tableau sum and Hermite sum, plus the composition sum for n <= {COMPOSITION_AGREEMENT_MAX}; all must agree"
            ),
            (1..=terms)
                .into_par_iter()
                .map(|n| borel_term(n, &config.cutoffs))
                .collect::<Result<_, _>>()?,
        ),
        "ordered_bell" => (
            0,
            "b_n = sum_{k=1..n} C(n,k) b_(n-k), b_0 = 1".into(),
            ordered_bell_table(terms.saturating_sub(1)).into_iter().take(terms).collect(),
        ),
        "involutions" => (
            0,
            "I(n) = I(n-1) + (n-1) I(n-2), I(0) = I(1) = 1".into(),
            involution_table(terms.saturating_sub(1)).into_iter().take(terms).collect(),
        ),
        "fibonacci" => (
            1,
            "F_n = F_(n-1) + F_(n-2), F_1 = F_2 = 1".into(),
            (1..=terms).map(fibonacci).collect(),
        ),
        "equivariant_orbits" => (
            1,
            "b(X_e) = n! b_n, cross-checked against the sum over I of (n!)^2/n_I for n <= 20".into(),
            (1..=terms)
                .into_par_iter()
                .map(|n| b_equivariant(n).map_err(CliError::from))
                .collect::<Result<_, _>>()?,
        ),
        "special_subset_counts" => {
            if terms >= quadrics_core::coxeter::MAX_RANK {
                return Err(CliError::Usage(format!(
                    "special_subset_counts supports at most {} terms",
                    quadrics_core::coxeter::MAX_RANK - 1
                )));
            }
            (
                1,
                "number of J in [n-1] with no two consecutive elements, by enumeration".into(),
                (1..=terms).map(|n| BigUint::from(special_subsets(n).len())).collect(),
            )
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown sequence {name:?}; expected one of {}",
                SEQUENCES.join(", ")
            )))
        }
    };
    let terms: Vec<String> = values.iter().map(ToString::to_string).collect();
    let stdout = match config.format {
        Format::Json => to_json(&SequenceJson {
            sequence: name,
            offset,
            provenance,
            terms,
        }),
        Format::Text => format!("# {name}: {provenance}\n{}", to_json(&terms)),
        Format::Csv => {
            let mut s = csv_line(&["index", "value"]);
            for (i, t) in terms.iter().enumerate() {
                s += &csv_line(&[&(i + offset).to_string(), t]);
            }
            s
        }
    };
    Ok(Output {
        stdout,
        ..Output::default()
    })
}
