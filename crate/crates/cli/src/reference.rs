//! Published table of `B_{5,J}(q)` for every `J ⊆ [4]`, and an audit that
//! compares it row by row with the exhaustive scan.

use num_bigint::{BigInt, BigUint};
use quadrics_core::arith::{factorial, IntPolynomial};
use quadrics_core::coxeter::{b_poly, RootSubset};

/// Rank of the published table.
pub const TABLE_N: usize = 5;

/// Rows as printed, in the published order, whitespace removed.
pub const PUBLISHED_B5: [(&[usize], &str); 16] = [
    (&[], "q^4+26q^3+66q^2+26q+1"),
    (&[1], "q^3+22q^2+33q+4"),
    (&[2], "2q^3+29q^2+26q+3"),
    (&[3], "3q^3+26q^2+29q+2"),
    (&[4], "4q^3+33q^2+22q+1"),
    (&[1, 2], "3q^2+14q+3"),
    (&[1, 3], "3q^2+19q+8"),
    (&[1, 4], "4q^2+22q+4"),
    (&[2, 3], "7q^2+11q+2"),
    (&[2, 4], "8q^2+19q+3"),
    (&[3, 4], "q^2+13q+1"),
    (&[1, 2, 3], "2q+3"),
    (&[1, 2, 4], "7q+3"),
    (&[1, 3, 4], "6q+4"),
    (&[2, 3, 4], "4q+1"),
    (&[1, 2, 3, 4], "1"),
];

/// `n! / ∏ (m_i + 1)!` over the maximal runs `m_i` of `J`; equals
/// `|W^J|` and therefore `B_{n,J}(1)`.
pub fn value_at_one_identity(j: &RootSubset) -> BigUint {
    j.run_sizes()
        .iter()
        .fold(factorial(j.n()), |acc, &m| acc / factorial(m + 1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnosis {
    Match,
    /// The printed row cannot be right: its value at 1 breaks the identity.
    IdentityViolated {
        printed: BigInt,
        expected: BigUint,
    },
    /// The printed row passes the identity but disagrees with the scan.
    ScanMismatch {
        same_coefficients: bool,
    },
}

impl Diagnosis {
    pub fn describe(&self) -> String {
        match self {
            Diagnosis::Match => "match".into(),
            Diagnosis::IdentityViolated { printed, expected } => format!(
                "printed row violates B(1) = n!/prod(m_i+1)!: {printed} != {expected}; typo in the published table"
            ),
            Diagnosis::ScanMismatch { same_coefficients: true } => {
                "printed row satisfies the B(1) identity but disagrees with the exhaustive scan; same coefficients in a different order".into()
            }
            Diagnosis::ScanMismatch { same_coefficients: false } => {
                "printed row satisfies the B(1) identity but disagrees with the exhaustive scan".into()
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AuditRow {
    pub subset: RootSubset,
    pub printed: String,
    pub computed: String,
    pub computed_at_one: BigInt,
    pub expected_at_one: BigUint,
    pub diagnosis: Diagnosis,
}

impl AuditRow {
    pub fn matches(&self) -> bool {
        self.diagnosis == Diagnosis::Match
    }
}

#[derive(Debug, Clone)]
pub struct Audit {
    pub rows: Vec<AuditRow>,
}

impl Audit {
    pub fn matching(&self) -> usize {
        self.rows.iter().filter(|r| r.matches()).count()
    }

    pub fn row(&self, members: &[usize]) -> Option<&AuditRow> {
        self.rows.iter().find(|r| r.subset.members() == members)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} of {} published rows match the exhaustive scan",
            self.matching(),
            self.rows.len()
        )
    }
}

fn sorted_coeffs(p: &IntPolynomial) -> Vec<BigInt> {
    let mut c = p.coeffs().to_vec();
    c.sort();
    c
}

/// Recomputes every published row; `computed` lets callers reuse polynomials
/// they already have.
pub fn audit_with(computed: impl Fn(&RootSubset) -> IntPolynomial) -> Audit {
    let one = BigInt::from(1);
    let rows = PUBLISHED_B5
        .iter()
        .map(|&(members, printed)| {
            let subset = RootSubset::new(TABLE_N, members).expect("published subsets lie in [4]");
            let poly = computed(&subset);
            let rendered = poly.display_var('q').to_string();
            let printed_poly: IntPolynomial = printed.parse().expect("published rows parse");
            let expected_at_one = value_at_one_identity(&subset);
            let diagnosis = if rendered == printed {
                Diagnosis::Match
            } else {
                let printed_at_one = printed_poly.eval(&one);
                if printed_at_one != BigInt::from(expected_at_one.clone()) {
                    Diagnosis::IdentityViolated {
                        printed: printed_at_one,
                        expected: expected_at_one.clone(),
                    }
                } else {
                    Diagnosis::ScanMismatch {
                        same_coefficients: sorted_coeffs(&printed_poly) == sorted_coeffs(&poly),
                    }
                }
            };
            AuditRow {
                subset,
                printed: printed.to_string(),
                computed: rendered,
                computed_at_one: poly.eval(&one),
                expected_at_one,
                diagnosis,
            }
        })
        .collect();
    Audit { rows }
}

pub fn audit() -> Audit {
    audit_with(b_poly)
}
