//! Orbit-count engine: `b(X_n)` by composition sums, skew tableaux, Hermite
//! polynomials and descent scans; ordered Bell and Fibonacci numbers; the
//! equivariant count `b(X_e) = n! b_n`; bounds and asymptotic ratios.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::{binomial_table, factorial, Natural, Rational};
use crate::coxeter::{special_subsets, weighted_coset_sum, RootSubset, MAX_RANK};
use crate::tableaux::{involution_table, num_skew_syt_with, partitions_of, skew_shapes_of, SytCounter};
use crate::{Cutoffs, Error, Result};

pub use crate::hermite::b_via_hermite;

/// Ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("composition", format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `2^{n-1}` compositions of `n`, lexicographically descending:
/// `(3), (2,1), (1,2), (1,1,1)`.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    fn grow(rest: usize, parts: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(parts.clone()));
            return;
        }
        for first in (1..=rest).rev() {
            parts.push(first);
            grow(rest - first, parts, out);
            parts.pop();
        }
    }
    if n == 0 {
        return Err(Error::EmptyInput("compositions_of"));
    }
    let mut out = Vec::with_capacity(1 << (n - 1).min(20));
    grow(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// `γ ↦ [n-1] \ {γ_1, γ_1+γ_2, …, γ_1+⋯+γ_{k-1}}`.
pub fn composition_to_subset(gamma: &Composition) -> RootSubset {
    let n = gamma.n();
    assert!(n <= MAX_RANK, "composition of {n} is too large for a root subset");
    let mut cuts = 0u64;
    let mut running = 0;
    for &p in &gamma.0[..gamma.0.len().saturating_sub(1)] {
        running += p;
        cuts |= 1 << running;
    }
    RootSubset::from_mask(n, RootSubset::full(n).mask() & !cuts)
}

/// Inverse of [`composition_to_subset`]: the block sizes of `J`.
pub fn subset_to_composition(j: &RootSubset) -> Composition {
    Composition(j.block_sizes())
}

/// `C(m, j) · c_j` for `0 <= j <= m <= n`.
fn step_weights(n: usize, c: &[Natural]) -> Vec<Vec<Natural>> {
    let pascal = binomial_table(n);
    (0..=n)
        .map(|m| (0..=m).map(|j| &pascal[m][j] * &c[j]).collect())
        .collect()
}

/// `Σ_{γ ⊨ n} multinomial(n; γ) · ∏ I(γ_i)`, visiting every composition.
pub fn b_via_compositions(n: usize) -> Result<Natural> {
    if n == 0 {
        return Err(Error::EmptyInput("b_via_compositions"));
    }
    let step = step_weights(n, &involution_table(n));

    fn walk(rest: usize, prefix: &Natural, step: &[Vec<Natural>], total: &mut Natural) {
        if rest == 0 {
            *total += prefix;
            return;
        }
        for first in 1..=rest {
            walk(rest - first, &(prefix * &step[rest][first]), step, total);
        }
    }

    Ok((1..=n)
        .into_par_iter()
        .map(|first| {
            let mut total = Natural::zero();
            walk(n - first, &step[n][first], &step, &mut total);
            total
        })
        .sum())
}

/// `Σ` over all skew shapes `λ¹ × ⋯ × λᵏ` of weight `n` of their SYT count.
///
/// Shapes are grouped by the composition of factor weights, so that the
/// inner sum over each factor is `Σ_{λ ⊢ γ_i} f^λ`; the composition sum is
/// then accumulated by first part. The shapes themselves are never listed
/// (there are ~2.6^n of them); [`b_via_skew_enumerated`] does list them.
pub fn b_via_skew(n: usize) -> Result<Natural> {
    if n == 0 {
        return Err(Error::EmptyInput("b_via_skew"));
    }
    let mut counter = SytCounter::new();
    let per_block: Vec<Natural> = (0..=n)
        .map(|m| partitions_of(m).iter().map(|p| counter.count(p)).sum())
        .collect();
    let step = step_weights(n, &per_block);
    // by_size[m]: the sum restricted to m of the n points.
    let mut by_size = vec![Natural::one()];
    for m in 1..=n {
        let s = (1..=m).map(|first| &step[m][first] * &by_size[m - first]).sum();
        by_size.push(s);
    }
    Ok(by_size.pop().expect("n >= 1"))
}

/// Same value as [`b_via_skew`], summing `f^shape` over the explicit list of
/// shapes. Exponential in `n`.
pub fn b_via_skew_enumerated(n: usize) -> Result<Natural> {
    let mut counter = SytCounter::new();
    Ok(skew_shapes_of(n)?
        .iter()
        .map(|s| num_skew_syt_with(s, &mut counter))
        .sum())
}

/// Per special subset `J`: `Σ_{w ∈ W^J} 2^{a_J(w) + b_J(w)}`.
pub fn b_via_descents_by_subset(n: usize, cutoff: usize) -> Result<Vec<(RootSubset, Natural)>> {
    if n == 0 {
        return Err(Error::EmptyInput("b_via_descents"));
    }
    if n > cutoff {
        return Err(Error::CutoffExceeded {
            what: "descent scan",
            size: n,
            cutoff,
        });
    }
    Ok(special_subsets(n)
        .into_iter()
        .map(|j| {
            let sum = weighted_coset_sum(&j);
            (j, sum)
        })
        .collect())
}

/// `Σ_{J special} Σ_{w ∈ W^J} 2^{a_J(w) + b_J(w)}`, by exhaustive scan.
pub fn b_via_descents(n: usize, cutoff: usize) -> Result<Natural> {
    Ok(b_via_descents_by_subset(n, cutoff)?.into_iter().map(|(_, s)| s).sum())
}

/// `ψ(m) = I(m) / m!`
pub fn psi(n: usize) -> Rational {
    Rational::new(BigInt::from(involution_table(n)[n].clone()), BigInt::from(factorial(n)))
}

/// `n! · Σ_{γ ⊨ n} ∏ ψ(γ_i)` in exact rational arithmetic.
pub fn b_via_psi(n: usize) -> Result<Natural> {
    let ratios: Vec<Rational> = (0..=n).map(psi).collect();
    let sum = compositions_of(n)?
        .iter()
        .map(|g| g.parts().iter().fold(Rational::one(), |acc, &p| acc * &ratios[p]))
        .fold(Rational::zero(), |acc, t| acc + t);
    let total = sum * Rational::from_integer(BigInt::from(factorial(n)));
    if !total.is_integer() {
        return Err(Error::InvariantFailure {
            what: "psi composition sum",
            left: total.to_string(),
            right: "an integer".into(),
        });
    }
    Ok(total.to_integer().to_biguint().expect("sum of positive terms"))
}

/// `[b_0, ..., b_n]` via `b_m = Σ_{k=1}^{m} C(m, k) b_{m-k}`.
pub fn ordered_bell_table(n: usize) -> Vec<Natural> {
    let pascal = binomial_table(n);
    let mut table = vec![Natural::one()];
    for m in 1..=n {
        let b = (1..=m).map(|k| &pascal[m][k] * &table[m - k]).sum();
        table.push(b);
    }
    table
}

/// Number of ordered set partitions of an `n`-set.
pub fn ordered_bell(n: usize) -> Natural {
    ordered_bell_table(n).pop().expect("table is nonempty")
}

/// `F_n` with `F_1 = F_2 = 1` (and `F_0 = 0`).
pub fn fibonacci(n: usize) -> Natural {
    let (mut a, mut b) = (Natural::zero(), Natural::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Largest `n` for which [`wonderful_sum`] enumerates subsets.
pub const WONDERFUL_MAX: usize = 26;

/// `Σ_{I ⊆ [n-1]} (n!)² / n_I`, with `n_I` the product of the block
/// factorials of `I`, by enumerating all `2^{n-1}` subsets.
pub fn wonderful_sum(n: usize) -> Result<Natural> {
    if n == 0 {
        return Err(Error::EmptyInput("wonderful_sum"));
    }
    if n > WONDERFUL_MAX {
        return Err(Error::CutoffExceeded {
            what: "subset enumeration",
            size: n,
            cutoff: WONDERFUL_MAX,
        });
    }
    // n <= 26 keeps every factorial, and n!/n_I, inside u128.
    let facts: Vec<u128> = (0..=n as u128)
        .scan(1u128, |acc, k| {
            if k > 0 {
                *acc *= k;
            }
            Some(*acc)
        })
        .collect();
    let n_fact = facts[n];
    let quotient_sum: Natural = (0u64..1 << (n - 1))
        .into_par_iter()
        .fold(Natural::zero, |mut acc, bits| {
            let mut n_i = 1u128;
            let mut block = 1;
            for i in 1..n {
                if bits & (1 << (i - 1)) != 0 {
                    block += 1;
                } else {
                    n_i *= facts[block];
                    block = 1;
                }
            }
            n_i *= facts[block];
            acc += n_fact / n_i;
            acc
        })
        .sum();
    Ok(quotient_sum * factorial(n))
}

/// `b(X_e) = n! · b_n`. For `n <= WONDERFUL_CHECK_MAX` the value is also
/// computed as [`wonderful_sum`] and the two must agree.
pub fn b_equivariant(n: usize) -> Result<Natural> {
    if n == 0 {
        return Err(Error::EmptyInput("b_equivariant"));
    }
    let value = factorial(n) * ordered_bell(n);
    if n <= WONDERFUL_CHECK_MAX {
        let other = wonderful_sum(n)?;
        if other != value {
            return Err(Error::InvariantFailure {
                what: "n! b_n vs subset sum",
                left: value.to_string(),
                right: other.to_string(),
            });
        }
    }
    Ok(value)
}

/// Largest `n` at which [`b_equivariant`] cross-checks against the subset sum.
pub const WONDERFUL_CHECK_MAX: usize = 20;

/// `F_n n! < b(X_n) < 2^{n-1} n! < b(X_e)` with all four quantities exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub lower: Natural,
    pub value: Natural,
    pub upper: Natural,
    pub equivariant: Natural,
    /// Strict inequalities were tested (`n >= 3`); otherwise non-strict.
    pub strict: bool,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub equivariant_ok: bool,
}

impl BoundsReport {
    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok && self.equivariant_ok
    }
}

/// Two independent routes must agree on `b(X_n)`.
fn agreed_value(n: usize) -> Result<Natural> {
    let by_compositions = b_via_compositions(n)?;
    let by_hermite = b_via_hermite(n)?;
    if by_compositions != by_hermite {
        return Err(Error::InvariantFailure {
            what: "compositions vs hermite",
            left: by_compositions.to_string(),
            right: by_hermite.to_string(),
        });
    }
    Ok(by_compositions)
}

pub fn check_bounds(n: usize) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::EmptyInput("check_bounds"));
    }
    let n_fact = factorial(n);
    let lower = fibonacci(n) * &n_fact;
    let value = agreed_value(n)?;
    let upper = (Natural::one() << (n - 1)) * &n_fact;
    let equivariant = b_equivariant(n)?;
    let strict = n >= 3;
    let rel = |a: &Natural, b: &Natural| if strict { a < b } else { a <= b };
    Ok(BoundsReport {
        n,
        lower_ok: rel(&lower, &value),
        upper_ok: rel(&value, &upper),
        equivariant_ok: rel(&upper, &equivariant),
        lower,
        value,
        upper,
        equivariant,
        strict,
    })
}

/// Ratios of exact values to their asymptotic forms; both tend to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRatios {
    /// `b_n · 2 (ln 2)^{n+1} / n!`
    pub bell_ratio: f64,
    /// `F_n · √5 / φ^n`
    pub fib_ratio: f64,
}

pub fn asymptotic_ratios(n: usize) -> AsymptoticRatios {
    let bell = ordered_bell(n).to_f64().unwrap_or(f64::INFINITY);
    let n_fact = factorial(n).to_f64().unwrap_or(f64::INFINITY);
    let ln2 = std::f64::consts::LN_2;
    let bell_ratio = bell / n_fact * 2.0 * ln2.powi(n as i32 + 1);
    let sqrt5 = 5f64.sqrt();
    let phi = (1.0 + sqrt5) / 2.0;
    let fib = fibonacci(n).to_f64().unwrap_or(f64::INFINITY);
    AsymptoticRatios {
        bell_ratio,
        fib_ratio: fib * sqrt5 / phi.powi(n as i32),
    }
}

/// One of the independent routes to `b(X_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Compositions,
    Skew,
    Hermite,
    Descents,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Compositions, Method::Skew, Method::Hermite, Method::Descents];

    pub fn name(self) -> &'static str {
        match self {
            Method::Compositions => "compositions",
            Method::Skew => "skew",
            Method::Hermite => "hermite",
            Method::Descents => "descents",
        }
    }

    pub fn compute(self, n: usize, cutoffs: &Cutoffs) -> Result<Natural> {
        match self {
            Method::Compositions => b_via_compositions(n),
            Method::Skew => b_via_skew(n),
            Method::Hermite => b_via_hermite(n),
            Method::Descents => b_via_descents(n, cutoffs.perm_scan),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::invalid("method", format!("unknown method {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::binomial;
    use crate::coxeter::all_subsets;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    /// Ordered set partitions as surjections onto k blocks, counted by
    /// inclusion–exclusion: Σ_k Σ_i (-1)^i C(k, i) (k - i)^n.
    fn surjection_oracle(n: usize) -> BigInt {
        (0..=n)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let term = BigInt::from(binomial(k, i)) * BigInt::from(k - i).pow(n as u32);
                        if i % 2 == 0 {
                            term
                        } else {
                            -term
                        }
                    })
                    .sum::<BigInt>()
            })
            .sum()
    }

    #[test]
    fn composition_listing() {
        assert_eq!(compositions_of(0), Err(Error::EmptyInput("compositions_of")));
        assert_eq!(compositions_of(1).unwrap(), vec![Composition(vec![1])]);
        let three: Vec<String> = compositions_of(3).unwrap().iter().map(ToString::to_string).collect();
        assert_eq!(three, ["(3)", "(2,1)", "(1,2)", "(1,1,1)"]);
        for n in 1..=12 {
            assert_eq!(compositions_of(n).unwrap().len(), 1 << (n - 1));
        }
        assert!(Composition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn subset_bijection_examples() {
        assert_eq!(composition_to_subset(&Composition(vec![5])), RootSubset::full(5));
        assert_eq!(composition_to_subset(&Composition(vec![1; 5])), RootSubset::empty(5));
        assert_eq!(
            composition_to_subset(&Composition(vec![2, 1, 2])),
            RootSubset::new(5, &[1, 4]).unwrap()
        );
    }

    #[test]
    fn subset_bijection_is_bijective() {
        for n in 1..=10 {
            let images: Vec<RootSubset> = compositions_of(n)
                .unwrap()
                .iter()
                .map(|g| {
                    let j = composition_to_subset(g);
                    // Runs of the image have lengths γ_i - 1.
                    let mut runs: Vec<usize> = g.parts().iter().filter(|&&p| p > 1).map(|p| p - 1).collect();
                    runs.sort_unstable();
                    let mut got = j.run_sizes();
                    got.sort_unstable();
                    assert_eq!(got, runs);
                    assert_eq!(&subset_to_composition(&j), g);
                    j
                })
                .collect();
            let distinct: std::collections::HashSet<_> = images.iter().collect();
            assert_eq!(distinct.len(), 1 << (n - 1));
            assert_eq!(distinct.len(), all_subsets(n).len());
        }
    }

    #[test]
    fn orbit_count_examples() {
        for method in Method::ALL {
            let c = Cutoffs::default();
            assert_eq!(method.compute(1, &c).unwrap(), nat(1), "{method}");
            assert_eq!(method.compute(3, &c).unwrap(), nat(22), "{method}");
            assert_eq!(method.compute(4, &c).unwrap(), nat(162), "{method}");
            assert!(matches!(method.compute(0, &c), Err(Error::EmptyInput(_))));
        }
        assert_eq!(b_via_skew(2).unwrap(), nat(4));
        assert_eq!(b_via_skew(5).unwrap(), nat(1486));
    }

    #[test]
    fn descent_contributions_at_three() {
        let parts: Vec<(String, Natural)> = b_via_descents_by_subset(3, 9)
            .unwrap()
            .into_iter()
            .map(|(j, s)| (j.to_string(), s))
            .collect();
        assert_eq!(
            parts,
            vec![("{}".into(), nat(13)), ("{1}".into(), nat(4)), ("{2}".into(), nat(5))]
        );
        assert!(matches!(b_via_descents(10, 9), Err(Error::CutoffExceeded { .. })));
    }

    #[test]
    fn skew_grouping_matches_shape_listing() {
        for n in 1..=9 {
            assert_eq!(b_via_skew_enumerated(n).unwrap(), b_via_skew(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(1), Rational::one());
        assert_eq!(psi(3), Rational::new(2.into(), 3.into()));
        assert_eq!(psi(4), Rational::new(5.into(), 12.into()));
        for n in 1..=15 {
            assert!(psi(n) <= Rational::one());
        }
    }

    #[test]
    fn psi_form_matches_compositions() {
        for n in 1..=12 {
            assert_eq!(b_via_psi(n).unwrap(), b_via_compositions(n).unwrap());
        }
    }

    #[test]
    fn ordered_bell_values() {
        assert_eq!(ordered_bell(0), nat(1));
        assert_eq!(ordered_bell(2), nat(3));
        assert_eq!(ordered_bell(5), nat(541));
        for n in 0..=20 {
            assert_eq!(BigInt::from(ordered_bell(n)), surjection_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(1), nat(1));
        assert_eq!(fibonacci(2), nat(1));
        assert_eq!(fibonacci(4), nat(3));
        assert_eq!(fibonacci(20), nat(6765));
    }

    #[test]
    fn equivariant_examples() {
        assert_eq!(b_equivariant(1).unwrap(), nat(1));
        assert_eq!(b_equivariant(2).unwrap(), nat(6));
        assert_eq!(b_equivariant(3).unwrap(), nat(78));
        assert_eq!(wonderful_sum(3).unwrap(), nat(36 + 18 + 18 + 6));
        for n in 1..=12 {
            assert_eq!(wonderful_sum(n).unwrap(), factorial(n) * ordered_bell(n));
        }
        assert!(matches!(
            wonderful_sum(WONDERFUL_MAX + 1),
            Err(Error::CutoffExceeded { .. })
        ));
    }

    #[test]
    fn bounds_examples() {
        let three = check_bounds(3).unwrap();
        assert_eq!(
            (
                three.lower.clone(),
                three.value.clone(),
                three.upper.clone(),
                three.equivariant.clone()
            ),
            (nat(12), nat(22), nat(24), nat(78))
        );
        assert!(three.strict && three.holds());

        let one = check_bounds(1).unwrap();
        assert!(!one.strict && one.holds());
        assert_eq!((one.lower, one.value, one.upper), (nat(1), nat(1), nat(1)));

        let two = check_bounds(2).unwrap();
        assert_eq!(two.value, nat(4));
        assert_eq!(two.upper, two.value);
        assert!(two.holds());
    }

    #[test]
    fn asymptotic_examples() {
        let r = asymptotic_ratios(30);
        assert!((r.fib_ratio - 1.0).abs() < 1e-6, "{r:?}");
        let r = asymptotic_ratios(20);
        assert!((r.bell_ratio - 1.0).abs() < 1e-3, "{r:?}");
        let r = asymptotic_ratios(1);
        assert!((r.bell_ratio - 2.0 * std::f64::consts::LN_2.powi(2)).abs() < 1e-12);
    }

    #[test]
    fn regression_values() {
        let expected = [1u64, 4, 22, 162, 1486, 16368, 210316];
        for (i, &v) in expected.iter().enumerate() {
            assert_eq!(b_via_compositions(i + 1).unwrap(), nat(v));
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fourier".parse::<Method>().is_err());
    }
}
