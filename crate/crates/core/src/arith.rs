//! Exact arithmetic: factorials, binomial and multinomial coefficients, and
//! dense integer polynomials.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`; the
//! aliases below name them by the role they play in this crate.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Nonnegative exact count.
pub type Natural = BigUint;
/// Signed exact integer.
pub type Integer = BigInt;
/// Exact rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n!`
pub fn factorial(n: usize) -> Natural {
    (2..=n).fold(Natural::one(), |acc, k| acc * k)
}

/// `[0!, 1!, ..., n!]`
pub fn factorial_table(n: usize) -> Vec<Natural> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(Natural::one());
    for k in 1..=n {
        let next = &table[k - 1] * k;
        table.push(next);
    }
    table
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    // Each partial product C(n-k+i, i) is an integer, so the division is exact.
    (1..=k).fold(Natural::one(), |acc, i| acc * (n - k + i) / i)
}

/// Rows `0..=n` of Pascal's triangle.
pub fn binomial_table(n: usize) -> Vec<Vec<Natural>> {
    let mut rows: Vec<Vec<Natural>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![Natural::one(); m + 1];
        for k in 1..m {
            row[k] = &rows[m - 1][k - 1] + &rows[m - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// `n! / (parts[0]! parts[1]! ...)`.
///
/// Panics if the parts do not sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> Natural {
    let total: usize = parts.iter().sum();
    assert_eq!(total, n, "multinomial parts {parts:?} do not sum to {n}");
    let mut acc = Natural::one();
    let mut running = 0;
    for &p in parts {
        running += p;
        acc *= binomial(running, p);
    }
    acc
}

/// Dense univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The representation is canonical:
/// the last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Integer::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, canonical (no trailing zeros).
    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn lowest_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * x0 + c)
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// True iff the coefficient sequence weakly rises and then weakly falls.
    pub fn is_unimodal(&self) -> bool {
        let mut falling = false;
        for pair in self.coeffs.windows(2) {
            if pair[1] > pair[0] {
                if falling {
                    return false;
                }
            } else if pair[1] < pair[0] {
                falling = true;
            }
        }
        true
    }

    /// True iff the coefficient list reads the same in both directions.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Renders the polynomial with the given variable name, highest power
    /// first, without spaces: `3q^2+14q+3`.
    pub fn display_var(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a IntPolynomial,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_var('x').fmt(f)
    }
}

/// Parses sums of terms like `3q^2`, `-q`, `14`, in any single-letter
/// variable. Whitespace is ignored; repeated powers are added.
impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::invalid("polynomial", format!("{reason} in {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad("empty string"));
        }
        let mut coeffs: Vec<Integer> = Vec::new();
        let mut var: Option<char> = None;
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if rest.starts_with(['+', '-']) {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            if term.is_empty() {
                return Err(bad("dangling sign"));
            }
            let digits_end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
            let (digits, power_part) = term.split_at(digits_end);
            let mut c = if digits.is_empty() {
                Integer::one()
            } else {
                digits.parse::<Integer>().map_err(|_| bad("bad coefficient"))?
            };
            let power = if power_part.is_empty() {
                if digits.is_empty() {
                    return Err(bad("empty term"));
                }
                0
            } else {
                let mut chars = power_part.chars();
                let v = chars.next().unwrap();
                if !v.is_ascii_alphabetic() || var.is_some_and(|w| w != v) {
                    return Err(bad("unexpected variable"));
                }
                var = Some(v);
                let exp = chars.as_str();
                if exp.is_empty() {
                    1
                } else {
                    exp.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| bad("bad exponent"))?
                }
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Integer::zero());
            }
            coeffs[power] += c;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}
