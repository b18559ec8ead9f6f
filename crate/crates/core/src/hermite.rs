//! Modified Hermite polynomials `H_k(y)`, defined by
//! `e^{y(x + x²/2)} = Σ H_k(y) x^k / k!`, and the orbit count
//! `b(X_n) = Σ_r a_{n,r} H_n(r)`.
//!
//! The generating function is never expanded; rows come from the recurrence
//! `H_{k+1} = y (H_k + k H_{k-1})`.

use num_traits::{One, Zero};

use crate::arith::{binomial, binomial_table, IntPolynomial, Integer, Natural};
use crate::tableaux::involution_table;
use crate::{Error, Result};

/// Rows `H_0, H_1, ...` built on demand.
#[derive(Debug, Clone)]
pub struct HermiteTable {
    rows: Vec<IntPolynomial>,
}

impl Default for HermiteTable {
    fn default() -> Self {
        Self::new()
    }
}

impl HermiteTable {
    pub fn new() -> Self {
        HermiteTable {
            rows: vec![IntPolynomial::one(), IntPolynomial::x()],
        }
    }

    pub fn with_rows(k: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(k);
        table
    }

    /// Ensures rows `0..=k` exist.
    pub fn extend_to(&mut self, k: usize) {
        while self.rows.len() <= k {
            let m = self.rows.len() - 1;
            let inner = &self.rows[m] + &self.rows[m - 1].scale(&Integer::from(m));
            self.rows.push(inner.shift(1));
        }
    }

    pub fn row(&mut self, k: usize) -> &IntPolynomial {
        self.extend_to(k);
        &self.rows[k]
    }

    pub fn rows(&self) -> &[IntPolynomial] {
        &self.rows
    }
}

/// `H_k(y)`
pub fn hermite_poly(k: usize) -> IntPolynomial {
    HermiteTable::with_rows(k).rows[k].clone()
}

/// `H_n(y0)`, exact.
pub fn hermite_eval(n: usize, y0: &Integer) -> Integer {
    hermite_poly(n).eval(y0)
}

/// `H_n(k)` as the coefficient of `x^n/n!` in `Q(x)^k`, `Q` the involution
/// generating function: the sum over weak compositions `j_1 + ⋯ + j_k = n`
/// of `multinomial(n; j) · ∏ I(j_i)`, enumerated one composition at a time.
///
/// Panics if `k = 0` and `n > 0`.
pub fn hermite_via_convolution(n: usize, k: usize) -> Natural {
    assert!(k > 0 || n == 0, "hermite_via_convolution needs k >= 1 for n > 0");
    let involutions = involution_table(n);
    let pascal = binomial_table(n);
    // Weight of choosing the next part j out of the m points still free.
    let step: Vec<Vec<Natural>> = (0..=n)
        .map(|m| (0..=m).map(|j| &pascal[m][j] * &involutions[j]).collect())
        .collect();

    fn walk(rest: usize, slots: usize, prefix: &Natural, step: &[Vec<Natural>], total: &mut Natural) {
        if slots == 1 {
            *total += prefix * &step[rest][rest];
            return;
        }
        for j in 0..=rest {
            walk(rest - j, slots - 1, &(prefix * &step[rest][j]), step, total);
        }
    }

    if k == 0 {
        return Natural::one();
    }
    let mut total = Natural::zero();
    walk(n, k, &Natural::one(), &step, &mut total);
    total
}

/// `a_{n,r} = Σ_{i=0}^{n-r} (-1)^i C(r+i, r)`.
///
/// Panics unless `1 <= r <= n`.
pub fn coeff_a(n: usize, r: usize) -> Integer {
    assert!(1 <= r && r <= n, "coeff_a needs 1 <= r <= n, got n = {n}, r = {r}");
    (0..=n - r).fold(Integer::zero(), |acc, i| {
        let term = Integer::from(binomial(r + i, r));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// `Σ_{k=1}^{n} Σ_{j=1}^{k} (-1)^{k-j} C(k, j) H_n(j)`, the uncollected form.
pub fn b_via_hermite_double_sum(n: usize) -> Integer {
    let h = hermite_poly(n);
    let values: Vec<Integer> = (0..=n).map(|j| h.eval(&Integer::from(j))).collect();
    let mut total = Integer::zero();
    for k in 1..=n {
        for (j, value) in values.iter().enumerate().take(k + 1).skip(1) {
            let term = Integer::from(binomial(k, j)) * value;
            if (k - j) % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

/// `b(X_n) = Σ_{r=1}^{n} a_{n,r} H_n(r)`, checked against the uncollected
/// double sum before returning.
pub fn b_via_hermite(n: usize) -> Result<Natural> {
    if n == 0 {
        return Err(Error::EmptyInput("b_via_hermite"));
    }
    let h = hermite_poly(n);
    let collected = (1..=n).fold(Integer::zero(), |acc, r| {
        acc + coeff_a(n, r) * h.eval(&Integer::from(r))
    });
    let double = b_via_hermite_double_sum(n);
    if collected != double {
        return Err(Error::InvariantFailure {
            what: "hermite collected vs double sum",
            left: collected.to_string(),
            right: double.to_string(),
        });
    }
    collected.to_biguint().ok_or_else(|| Error::InvariantFailure {
        what: "hermite sum sign",
        left: collected.to_string(),
        right: "a nonnegative count".into(),
    })
}
