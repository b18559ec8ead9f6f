//! The verification suite behind `quadrics verify`: every cross-formula
//! identity and brute-force comparison, each over its own range of `n`.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use quadrics_core::arith::{factorial, IntPolynomial};
use quadrics_core::coxeter::{
    all_subsets, b_poly, eulerian_poly, for_each_min_coset_rep, par_fold_min_coset_reps, root_exponent,
    special_subsets, stat_a, stat_b, RootSubset,
};
use quadrics_core::hermite::{b_via_hermite_double_sum, hermite_poly, hermite_via_convolution};
use quadrics_core::orbits::{
    asymptotic_ratios, b_equivariant, b_via_compositions, b_via_descents, b_via_hermite, b_via_psi, b_via_skew,
    b_via_skew_enumerated, check_bounds, composition_to_subset, compositions_of, fibonacci, ordered_bell,
    subset_to_composition, wonderful_sum,
};
use quadrics_core::perm::Permutation;
use quadrics_core::tableaux::{
    enumerate_involutions, enumerate_syt, involution_table, num_skew_syt_with, partitions_of, skew_shapes_of,
    SytCounter,
};
use quadrics_core::Cutoffs;

use crate::config::NRange;
use crate::reference::{self, Diagnosis};

/// Tolerance for `|bell_ratio(20) - 1|`.
pub const BELL_RATIO_TOL: f64 = 1e-3;
/// Tolerance for `|fib_ratio(30) - 1|`.
pub const FIB_RATIO_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The requested range does not meet this check's range.
    Skipped,
    /// Reported, never failing.
    Info,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub range: Option<NRange>,
    pub status: Status,
    /// Failure witness or informational note.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

/// What a check returns: `Ok(note)` or `Err(witness)`.
type Outcome = Result<Option<String>, String>;

#[derive(Clone, Copy)]
enum Limit {
    None,
    Perm,
    Boxes,
}

struct CheckDef {
    name: &'static str,
    lo: usize,
    hi: usize,
    limit: Limit,
    informational: bool,
    run: fn(&NRange, &Cutoffs) -> Outcome,
}

const fn check(name: &'static str, lo: usize, hi: usize, run: fn(&NRange, &Cutoffs) -> Outcome) -> CheckDef {
    CheckDef {
        name,
        lo,
        hi,
        limit: Limit::None,
        informational: false,
        run,
    }
}

const fn perm_check(name: &'static str, lo: usize, hi: usize, run: fn(&NRange, &Cutoffs) -> Outcome) -> CheckDef {
    CheckDef {
        name,
        lo,
        hi,
        limit: Limit::Perm,
        informational: false,
        run,
    }
}

fn checks() -> Vec<CheckDef> {
    vec![
        perm_check("b(X_3) = 22 by every method", 3, 3, example_b3),
        check("compositions = skew = hermite", 1, 25, three_way),
        perm_check("descent scan agrees", 1, 9, descent_agreement),
        perm_check("published B_5 table audit", 5, 5, table_audit),
        perm_check("B_{n,{}} is Eulerian", 1, 8, eulerian),
        perm_check("B_{n,[n-1]} = 1", 1, 8, full_subset),
        perm_check("B_{n,J}(1) = n!/prod (m_i+1)!", 1, 7, value_at_one),
        perm_check("r_J = a_J + b_J", 1, 7, root_exponents),
        perm_check("|W^J| = n!/prod n_i!", 1, 8, coset_counts),
        perm_check("Eulerian symmetric and unimodal", 1, 8, eulerian_shape),
        CheckDef {
            limit: Limit::Boxes,
            ..check("skew SYT formula = brute force", 1, 8, skew_brute_force)
        },
        check("skew sum over listed shapes", 1, 9, skew_listing),
        check("RSK: I(n) = sum f^lambda", 1, 12, rsk),
        perm_check("I(n) = involution scan", 1, 9, involution_scan),
        check("H_n(1) = I(n)", 1, 20, hermite_at_one),
        check("published H_0..H_4", 0, 4, hermite_rows),
        check("H_n(k) = weak-composition sum", 0, 12, hermite_convolution),
        check("Hermite double sum = collected sum", 1, 12, hermite_double_sum),
        check("psi composition form", 1, 12, psi_form),
        check("composition/subset bijection", 1, 12, bijection),
        check("special subsets vs F_n", 1, 25, special_counts),
        check("bounds F_n n! < b < 2^(n-1) n! < n! b_n", 1, 20, bounds),
        check("n! b_n = subset sum", 1, 9, equivariant),
        check("ordered Bell asymptotic", 20, 20, bell_asymptotic),
        check("Fibonacci asymptotic", 30, 30, fib_asymptotic),
        CheckDef {
            informational: true,
            ..perm_check("unimodality conjecture scan", 1, 7, unimodality)
        },
    ]
}

/// Runs every check whose range meets `range` (all checks when `None`).
pub fn run(range: Option<&NRange>, cutoffs: &Cutoffs) -> VerificationReport {
    let full = NRange(0..=usize::MAX);
    let range = range.unwrap_or(&full);
    let checks = checks()
        .into_iter()
        .map(|def| {
            let hi = match def.limit {
                Limit::None => def.hi,
                Limit::Perm => def.hi.min(cutoffs.perm_scan),
                Limit::Boxes => def.hi.min(cutoffs.boxes),
            };
            let Some(clipped) = range.clip(def.lo, hi) else {
                return CheckResult {
                    name: def.name,
                    range: None,
                    status: Status::Skipped,
                    detail: None,
                    elapsed: Duration::ZERO,
                };
            };
            let start = Instant::now();
            let outcome = (def.run)(&clipped, cutoffs);
            let elapsed = start.elapsed();
            let (status, detail) = match outcome {
                Ok(note) if def.informational => (Status::Info, note),
                Ok(note) => (Status::Pass, note),
                Err(witness) => (Status::Fail, Some(witness)),
            };
            CheckResult {
                name: def.name,
                range: Some(clipped),
                status,
                detail,
                elapsed,
            }
        })
        .collect();
    VerificationReport { checks }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

fn err(e: quadrics_core::Error) -> String {
    e.to_string()
}

fn example_b3(_: &NRange, cutoffs: &Cutoffs) -> Outcome {
    let expected = BigUint::from(22u32);
    let values = [
        ("compositions", b_via_compositions(3).map_err(err)?),
        ("skew", b_via_skew(3).map_err(err)?),
        ("hermite", b_via_hermite(3).map_err(err)?),
        ("descents", b_via_descents(3, cutoffs.perm_scan).map_err(err)?),
    ];
    for (name, v) in values {
        ensure(v == expected, || format!("n=3 {name} gives {v}"))?;
    }
    Ok(None)
}

fn three_way(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let c = b_via_compositions(n).map_err(err)?;
        let s = b_via_skew(n).map_err(err)?;
        let h = b_via_hermite(n).map_err(err)?;
        ensure(c == s && s == h, || {
            format!("n={n}: compositions {c}, skew {s}, hermite {h}")
        })?;
    }
    Ok(None)
}

fn descent_agreement(range: &NRange, cutoffs: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let d = b_via_descents(n, cutoffs.perm_scan).map_err(err)?;
        let c = b_via_compositions(n).map_err(err)?;
        ensure(d == c, || format!("n={n}: descents {d}, compositions {c}"))?;
    }
    Ok(None)
}

fn table_audit(_: &NRange, _: &Cutoffs) -> Outcome {
    let audit = reference::audit();
    for row in &audit.rows {
        ensure(row.computed_at_one == BigInt::from(row.expected_at_one.clone()), || {
            format!(
                "n=5 J={}: computed B(1) = {}, identity gives {}",
                row.subset, row.computed_at_one, row.expected_at_one
            )
        })?;
    }
    let flagged = audit.row(&[3, 4]).expect("row {3,4} is published");
    ensure(matches!(flagged.diagnosis, Diagnosis::IdentityViolated { .. }), || {
        format!("n=5 J={{3,4}} not flagged: {}", flagged.diagnosis.describe())
    })?;
    Ok(Some(audit.summary()))
}

fn eulerian(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let b = b_poly(&RootSubset::empty(n));
        let e = eulerian_poly(n);
        ensure(b == e, || {
            format!("n={n}: B = {}, Eulerian = {}", b.display_var('q'), e.display_var('q'))
        })?;
    }
    Ok(None)
}

fn full_subset(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let b = b_poly(&RootSubset::full(n));
        ensure(b == IntPolynomial::one(), || {
            format!("n={n}: B = {}", b.display_var('q'))
        })?;
    }
    Ok(None)
}

fn value_at_one(range: &NRange, _: &Cutoffs) -> Outcome {
    let one = BigInt::from(1);
    for n in range.iter() {
        for j in all_subsets(n) {
            let b = b_poly(&j);
            let expected = BigInt::from(reference::value_at_one_identity(&j));
            ensure(b.has_nonnegative_coeffs() && b.eval(&one) == expected, || {
                format!("n={n} J={j}: B = {}, expected B(1) = {expected}", b.display_var('q'))
            })?;
        }
    }
    Ok(None)
}

fn root_exponents(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        for j in special_subsets(n) {
            let mut witness = None;
            for_each_min_coset_rep(&j, |w| {
                if witness.is_some() {
                    return;
                }
                let w = Permutation::new(w.to_vec()).expect("scan yields permutations");
                let r = root_exponent(&w, &j);
                let ab = stat_a(&w, &j) + stat_b(&w, &j);
                if r != ab {
                    witness = Some(format!("n={n} J={j} w={w}: r_J = {r}, a_J + b_J = {ab}"));
                }
            });
            if let Some(w) = witness {
                return Err(w);
            }
        }
    }
    Ok(None)
}

fn coset_counts(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        for j in all_subsets(n) {
            let scanned = par_fold_min_coset_reps(&j, || 0u64, |c, _| *c += 1, |a, b| a + b);
            let formula = j.coset_count();
            ensure(BigUint::from(scanned) == formula, || {
                format!("n={n} J={j}: scan {scanned}, formula {formula}")
            })?;
        }
    }
    Ok(None)
}

fn eulerian_shape(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let e = eulerian_poly(n);
        ensure(e.is_symmetric() && e.is_unimodal(), || {
            format!("n={n}: {}", e.display_var('q'))
        })?;
    }
    Ok(None)
}

fn skew_brute_force(range: &NRange, cutoffs: &Cutoffs) -> Outcome {
    let mut counter = SytCounter::new();
    let mut shapes = 0usize;
    for n in range.iter() {
        for shape in skew_shapes_of(n).map_err(err)? {
            let formula = num_skew_syt_with(&shape, &mut counter);
            let brute = enumerate_syt(&shape, cutoffs.boxes).map_err(err)?;
            ensure(formula == brute, || {
                format!("shape {shape}: formula {formula}, brute force {brute}")
            })?;
            shapes += 1;
        }
    }
    Ok(Some(format!("{shapes} shapes")))
}

fn skew_listing(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let listed = b_via_skew_enumerated(n).map_err(err)?;
        let grouped = b_via_skew(n).map_err(err)?;
        ensure(listed == grouped, || {
            format!("n={n}: listed {listed}, grouped {grouped}")
        })?;
    }
    Ok(None)
}

fn rsk(range: &NRange, _: &Cutoffs) -> Outcome {
    let table = involution_table(range.end());
    let mut counter = SytCounter::new();
    for n in range.iter() {
        let total: BigUint = partitions_of(n).iter().map(|p| counter.count(p)).sum();
        ensure(total == table[n], || {
            format!("n={n}: sum f = {total}, I = {}", table[n])
        })?;
    }
    Ok(None)
}

fn involution_scan(range: &NRange, cutoffs: &Cutoffs) -> Outcome {
    let table = involution_table(range.end());
    for n in range.iter() {
        let listed = enumerate_involutions(n, cutoffs.perm_scan).map_err(err)?;
        ensure(BigUint::from(listed.len()) == table[n], || {
            format!("n={n}: scan {}, recurrence {}", listed.len(), table[n])
        })?;
    }
    Ok(None)
}

fn hermite_at_one(range: &NRange, _: &Cutoffs) -> Outcome {
    let table = involution_table(range.end());
    let one = BigInt::from(1);
    for n in range.iter() {
        let h = hermite_poly(n).eval(&one);
        ensure(h == BigInt::from(table[n].clone()), || {
            format!("n={n}: H_n(1) = {h}, I = {}", table[n])
        })?;
    }
    Ok(None)
}

fn hermite_rows(range: &NRange, _: &Cutoffs) -> Outcome {
    let published = ["1", "y", "y^2 + y", "y^3 + 3y^2", "y^4 + 6y^3 + 3 y^2"];
    for (k, text) in published.iter().enumerate().take(range.end() + 1) {
        let expected: IntPolynomial = text.parse().map_err(err)?;
        let got = hermite_poly(k);
        ensure(got == expected, || format!("H_{k} = {}", got.display_var('y')))?;
    }
    Ok(None)
}

fn hermite_convolution(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let h = hermite_poly(n);
        for k in 1..=12usize {
            let direct = h.eval(&BigInt::from(k));
            let conv = hermite_via_convolution(n, k);
            ensure(direct == BigInt::from(conv.clone()), || {
                format!("H_{n}({k}) = {direct}, convolution {conv}")
            })?;
        }
    }
    Ok(None)
}

fn hermite_double_sum(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let double = b_via_hermite_double_sum(n);
        let collected = BigInt::from(b_via_hermite(n).map_err(err)?);
        ensure(double == collected, || {
            format!("n={n}: double {double}, collected {collected}")
        })?;
    }
    Ok(None)
}

fn psi_form(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let p = b_via_psi(n).map_err(err)?;
        let c = b_via_compositions(n).map_err(err)?;
        ensure(p == c, || format!("n={n}: psi form {p}, compositions {c}"))?;
    }
    Ok(None)
}

fn bijection(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let mut seen = std::collections::HashSet::new();
        for gamma in compositions_of(n).map_err(err)? {
            let j = composition_to_subset(&gamma);
            ensure(subset_to_composition(&j) == gamma && seen.insert(j), || {
                format!("n={n}: {gamma} -> {j} is not invertible")
            })?;
        }
        ensure(seen.len() == 1 << (n - 1), || {
            format!("n={n}: image has {} subsets", seen.len())
        })?;
    }
    Ok(None)
}

fn special_counts(range: &NRange, _: &Cutoffs) -> Outcome {
    let mut mismatched_index = Vec::new();
    for n in range.iter() {
        let count = special_subsets(n).len();
        // Binary words of length n-1 with no two adjacent ones: F_{n+1}.
        let words = fibonacci(n + 1);
        ensure(BigUint::from(count) == words, || {
            format!("n={n}: {count} special subsets, F_(n+1) = {words}")
        })?;
        let f_n = fibonacci(n);
        ensure(f_n <= BigUint::from(count), || {
            format!("n={n}: F_n = {f_n} exceeds {count}")
        })?;
        if BigUint::from(count) != f_n {
            mismatched_index.push(n);
        }
    }
    Ok((!mismatched_index.is_empty()).then(|| "count is F_(n+1); F_n is a strict lower bound for n >= 3".to_string()))
}

fn bounds(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let r = check_bounds(n).map_err(err)?;
        ensure(r.holds(), || {
            format!(
                "n={n}: {} / {} / {} / {} (strict: {})",
                r.lower, r.value, r.upper, r.equivariant, r.strict
            )
        })?;
        if n == 2 {
            ensure(r.value == r.upper, || {
                format!("n=2: b = {} but 2*2! = {}", r.value, r.upper)
            })?;
        }
    }
    Ok(None)
}

fn equivariant(range: &NRange, _: &Cutoffs) -> Outcome {
    for n in range.iter() {
        let lhs = factorial(n) * ordered_bell(n);
        let rhs = wonderful_sum(n).map_err(err)?;
        ensure(lhs == rhs, || format!("n={n}: n! b_n = {lhs}, subset sum {rhs}"))?;
        b_equivariant(n).map_err(err)?;
    }
    Ok(None)
}

fn bell_asymptotic(range: &NRange, _: &Cutoffs) -> Outcome {
    let r = asymptotic_ratios(range.start()).bell_ratio;
    ensure((r - 1.0).abs() < BELL_RATIO_TOL, || {
        format!("bell_ratio({}) = {r}", range.start())
    })?;
    Ok(Some(format!("bell_ratio = {r:.12}")))
}

fn fib_asymptotic(range: &NRange, _: &Cutoffs) -> Outcome {
    let r = asymptotic_ratios(range.start()).fib_ratio;
    ensure((r - 1.0).abs() < FIB_RATIO_TOL, || {
        format!("fib_ratio({}) = {r}", range.start())
    })?;
    Ok(Some(format!("fib_ratio = {r:.15}")))
}

/// Never fails; reports counterexamples if any turn up.
fn unimodality(range: &NRange, _: &Cutoffs) -> Outcome {
    let mut scanned = 0;
    let mut counterexamples = Vec::new();
    for n in range.iter() {
        for j in all_subsets(n) {
            let b = b_poly(&j);
            scanned += 1;
            if !b.is_unimodal() {
                counterexamples.push(format!("n={n} J={j} B={}", b.display_var('q')));
            }
        }
    }
    Ok(Some(if counterexamples.is_empty() {
        format!("{scanned} polynomials scanned, no counterexample found")
    } else {
        format!(
            "{} counterexample(s): {}",
            counterexamples.len(),
            counterexamples.join("; ")
        )
    }))
}
