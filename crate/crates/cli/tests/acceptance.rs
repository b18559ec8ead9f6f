//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Runs without the libtest harness so the lines are never captured.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use quadrics_cli::reference::{self, value_at_one_identity, Diagnosis};
use quadrics_core::arith::{factorial, IntPolynomial};
use quadrics_core::coxeter::{
    all_subsets, b_poly, eulerian_poly, min_coset_reps, root_exponent, special_subsets, stat_a, stat_b, RootSubset,
};
use quadrics_core::hermite::{b_via_hermite, hermite_eval, hermite_poly, hermite_via_convolution};
use quadrics_core::orbits::{
    asymptotic_ratios, b_equivariant, b_via_compositions, b_via_descents, b_via_skew, check_bounds, wonderful_sum,
};
use quadrics_core::tableaux::{
    enumerate_involutions, enumerate_syt, involution_count, num_skew_syt, num_syt, partitions_of, skew_shapes_of,
    SkewShape,
};

const EXAMPLE_BUDGET: Duration = Duration::from_millis(10);
const AGREEMENT_BUDGET: Duration = Duration::from_secs(60);
const BELL_RATIO_TOL: f64 = 1e-3;
const FIB_RATIO_TOL: f64 = 1e-6;
const SCAN_CUTOFF: usize = 9;
const BOX_CUTOFF: usize = 8;

type Criterion = (&'static str, fn() -> Verdict);

enum Verdict {
    Pass(String),
    Fail(String),
    /// Recorded but never fails the suite.
    Info(String),
}

use Verdict::{Fail, Info, Pass};

fn verdict(ok: bool, detail: String) -> Verdict {
    if ok {
        Pass(detail)
    } else {
        Fail(detail)
    }
}

fn all_methods(n: usize) -> [BigUint; 4] {
    [
        b_via_compositions(n).unwrap(),
        b_via_skew(n).unwrap(),
        b_via_hermite(n).unwrap(),
        b_via_descents(n, SCAN_CUTOFF).unwrap(),
    ]
}

fn example_b3() -> Verdict {
    let start = Instant::now();
    let values = all_methods(3);
    let elapsed = start.elapsed();
    let ok = values.iter().all(|v| *v == BigUint::from(22u32)) && elapsed < EXAMPLE_BUDGET;
    verdict(
        ok,
        format!("values {values:?}, {elapsed:?} (budget {EXAMPLE_BUDGET:?})"),
    )
}

fn agreement() -> Verdict {
    let start = Instant::now();
    for n in 1..=25 {
        let (c, s, h) = (
            b_via_compositions(n).unwrap(),
            b_via_skew(n).unwrap(),
            b_via_hermite(n).unwrap(),
        );
        if c != s || s != h {
            return Fail(format!("n={n}: compositions {c}, skew {s}, hermite {h}"));
        }
        if n <= SCAN_CUTOFF {
            let d = b_via_descents(n, SCAN_CUTOFF).unwrap();
            if d != c {
                return Fail(format!("n={n}: descents {d}, others {c}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        elapsed < AGREEMENT_BUDGET,
        format!("n<=25 three-way, n<=9 four-way, {elapsed:.2?} (budget {AGREEMENT_BUDGET:?})"),
    )
}

fn table_audit() -> Verdict {
    let audit = reference::audit();
    let row = audit.row(&[3, 4]).expect("published table has {3,4}");
    let flagged = matches!(
        &row.diagnosis,
        Diagnosis::IdentityViolated { printed, expected }
            if *printed == BigInt::from(15) && *expected == BigUint::from(20u32)
    );
    let row_ok = flagged
        && row.computed == "6q^2+13q+1"
        && row.computed_at_one == BigInt::from(20)
        && row.diagnosis.describe().contains("15 != 20");
    let mismatches: Vec<String> = audit
        .rows
        .iter()
        .filter(|r| !r.matches())
        .map(|r| format!("{} printed {} computed {}", r.subset, r.printed, r.computed))
        .collect();
    verdict(
        audit.matching() == 15 && row_ok,
        format!(
            "{} of 16 rows match (required 15); {{3,4}} flagged: {row_ok}; mismatches: {}",
            audit.matching(),
            mismatches.join("; ")
        ),
    )
}

fn closed_forms() -> Verdict {
    for n in 1..=8 {
        if b_poly(&RootSubset::empty(n)) != eulerian_poly(n) {
            return Fail(format!("n={n}: B_(n,{{}}) is not Eulerian"));
        }
        if b_poly(&RootSubset::full(n)) != IntPolynomial::one() {
            return Fail(format!("n={n}: B_(n,[n-1]) != 1"));
        }
    }
    let one = BigInt::from(1);
    for n in 1..=7 {
        for j in all_subsets(n) {
            let got = b_poly(&j).eval(&one);
            let want = BigInt::from(value_at_one_identity(&j));
            if got != want {
                return Fail(format!("n={n} J={j}: B(1) = {got}, identity {want}"));
            }
        }
    }
    Pass("Eulerian and full-subset forms n<=8, B(1) identity for all J n<=7".into())
}

fn root_exponents() -> Verdict {
    let mut checked = 0usize;
    for n in 1..=7 {
        for j in special_subsets(n) {
            for w in min_coset_reps(&j) {
                let (r, a, b) = (root_exponent(&w, &j), stat_a(&w, &j), stat_b(&w, &j));
                if r != a + b {
                    return Fail(format!("n={n} J={j} w={w}: r={r}, a={a}, b={b}"));
                }
                checked += 1;
            }
        }
    }
    Pass(format!("{checked} pairs (J, w)"))
}

fn skew_formula() -> Verdict {
    let mut shapes = 0usize;
    for n in 1..=BOX_CUTOFF {
        for shape in skew_shapes_of(n).unwrap() {
            let (formula, brute) = (num_skew_syt(&shape), enumerate_syt(&shape, BOX_CUTOFF).unwrap());
            if formula != brute {
                return Fail(format!("{shape}: formula {formula}, brute force {brute}"));
            }
            shapes += 1;
        }
    }
    let anchor = SkewShape::from_parts(&[&[3, 2], &[2, 1, 1]]);
    let value = num_skew_syt(&anchor);
    verdict(
        value == BigUint::from(1890u32),
        format!("{shapes} shapes of weight <= {BOX_CUTOFF}; f^{anchor} = {value}"),
    )
}

fn involutions() -> Verdict {
    for n in 0..=12 {
        let rsk: BigUint = partitions_of(n).iter().map(num_syt).sum();
        if rsk != involution_count(n) {
            return Fail(format!("n={n}: sum f^lambda = {rsk}, I(n) = {}", involution_count(n)));
        }
    }
    for n in 1..=SCAN_CUTOFF {
        let listed = enumerate_involutions(n, SCAN_CUTOFF).unwrap().len();
        if BigUint::from(listed) != involution_count(n) {
            return Fail(format!(
                "n={n}: {listed} involutions listed, I(n) = {}",
                involution_count(n)
            ));
        }
    }
    for n in 0..=20 {
        if hermite_eval(n, &BigInt::from(1)) != BigInt::from(involution_count(n)) {
            return Fail(format!("n={n}: H_n(1) != I(n)"));
        }
    }
    Pass("RSK n<=12, enumeration n<=9, H_n(1) n<=20".into())
}

fn hermite_table() -> Verdict {
    let printed = ["1", "y", "y^2+y", "y^3+3y^2", "y^4+6y^3+3y^2"];
    for (k, text) in printed.iter().enumerate() {
        let want: IntPolynomial = text.parse().unwrap();
        if hermite_poly(k) != want {
            return Fail(format!("H_{k} = {}, printed {text}", hermite_poly(k).display_var('y')));
        }
    }
    for n in 0..=12 {
        for k in 1..=12 {
            let (direct, conv) = (hermite_eval(n, &BigInt::from(k)), hermite_via_convolution(n, k));
            if direct != BigInt::from(conv.clone()) {
                return Fail(format!("H_{n}({k}) = {direct}, convolution {conv}"));
            }
        }
    }
    Pass("H_0..H_4 exact, convolution n,k<=12".into())
}

fn bounds() -> Verdict {
    for n in 1..=20 {
        let report = check_bounds(n).unwrap();
        if !report.holds() || report.strict != (n >= 3) {
            return Fail(format!("{report:?}"));
        }
    }
    let two = check_bounds(2).unwrap();
    let one = check_bounds(1).unwrap();
    let edges = two.value == two.upper
        && two.value == BigUint::from(4u32)
        && one.lower == one.value
        && one.value == one.upper
        && one.upper == one.equivariant;
    verdict(edges, format!("strict for 3<=n<=20; b(X_2) = {} = 2^1 2!", two.value))
}

fn equivariant_sum() -> Verdict {
    for n in 1..=9 {
        let (closed, sum) = (b_equivariant(n).unwrap(), wonderful_sum(n).unwrap());
        if closed != sum {
            return Fail(format!("n={n}: n! b_n = {closed}, subset sum = {sum}"));
        }
    }
    let nine = factorial(9) * quadrics_core::orbits::ordered_bell(9);
    Pass(format!("n<=9; 9! b_9 = {nine}"))
}

fn asymptotics() -> Verdict {
    let bell = asymptotic_ratios(20).bell_ratio;
    let fib = asymptotic_ratios(30).fib_ratio;
    verdict(
        (bell - 1.0).abs() < BELL_RATIO_TOL && (fib - 1.0).abs() < FIB_RATIO_TOL,
        format!(
            "bell_ratio(20) = {bell:.12} (tol {BELL_RATIO_TOL:e}), fib_ratio(30) = {fib:.15} (tol {FIB_RATIO_TOL:e})"
        ),
    )
}

fn unimodality() -> Verdict {
    let mut scanned = 0usize;
    let mut counterexamples = Vec::new();
    for n in 1..=7 {
        for j in all_subsets(n) {
            let p = b_poly(&j);
            if !p.is_unimodal() {
                counterexamples.push(format!("n={n} J={j} {}", p.display_var('q')));
            }
            scanned += 1;
        }
    }
    if counterexamples.is_empty() {
        Info(format!("{scanned} polynomials, all unimodal"))
    } else {
        Info(format!(
            "{scanned} polynomials, counterexamples: {}",
            counterexamples.join("; ")
        ))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("b(X_3) = 22 by every method", example_b3),
        ("method agreement n<=25, descents n<=9", agreement),
        ("B_5 table audit", table_audit),
        ("Eulerian, full-subset and B(1) identities", closed_forms),
        ("r_J = a_J + b_J on special J", root_exponents),
        ("skew SYT formula vs brute force", skew_formula),
        ("involution counts", involutions),
        ("Hermite table and convolution", hermite_table),
        ("bound chain", bounds),
        ("n! b_n = subset sum", equivariant_sum),
        ("asymptotic ratios", asymptotics),
        ("unimodality scan", unimodality),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (label, detail) = match check() {
            Pass(d) => ("PASS", d),
            Fail(d) => {
                failed.push(i + 1);
                ("FAIL", d)
            }
            Info(d) => ("INFO", d),
        };
        println!("[{label}] {:>2}. {name}: {detail}", i + 1);
    }
    if failed.is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
