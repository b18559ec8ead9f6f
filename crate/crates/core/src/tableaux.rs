//! Partitions, skew cross-product shapes `λ¹ × ⋯ × λᵏ`, standard Young
//! tableau counts, and involution counts.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{multinomial, Natural};
use crate::coxeter::{for_each_min_coset_rep, RootSubset};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition", format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::invalid(
                "partition",
                format!("{parts:?} is not weakly decreasing"),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n`, in lexicographically descending order:
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn grow(rest: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(parts.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            parts.push(p);
            grow(rest - p, p, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    grow(n, n, &mut Vec::new(), &mut out);
    out
}

/// Memoized `f^λ` by corner removal: `f^λ = Σ_corners f^{λ - corner}`.
///
/// A counter owns its memo table; share one per worker.
#[derive(Debug, Default)]
pub struct SytCounter {
    memo: HashMap<Vec<usize>, Natural>,
}

impl SytCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, lambda: &Partition) -> Natural {
        self.count_parts(lambda.parts())
    }

    fn count_parts(&mut self, parts: &[usize]) -> Natural {
        if parts.iter().sum::<usize>() <= 1 {
            return Natural::one();
        }
        if let Some(hit) = self.memo.get(parts) {
            return hit.clone();
        }
        let mut total = Natural::zero();
        let mut smaller = parts.to_vec();
        for row in 0..parts.len() {
            let is_corner = row + 1 == parts.len() || parts[row] > parts[row + 1];
            if !is_corner {
                continue;
            }
            smaller[row] -= 1;
            let trimmed = if smaller[row] == 0 {
                &smaller[..row]
            } else {
                &smaller[..]
            };
            total += self.count_parts(trimmed);
            smaller[row] += 1;
        }
        self.memo.insert(parts.to_vec(), total.clone());
        total
    }
}

/// Number of standard Young tableaux of shape `λ`.
pub fn num_syt(lambda: &Partition) -> Natural {
    SytCounter::new().count(lambda)
}

/// Cross product `λ¹ × ⋯ × λᵏ` of nonempty partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    factors: Vec<Partition>,
}

impl SkewShape {
    pub fn new(factors: Vec<Partition>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::invalid("skew shape", "no factors"));
        }
        if factors.iter().any(Partition::is_empty) {
            return Err(Error::invalid("skew shape", "empty factor"));
        }
        Ok(SkewShape { factors })
    }

    /// Shorthand for tests and examples; panics on invalid input.
    pub fn from_parts(factors: &[&[usize]]) -> Self {
        let factors = factors
            .iter()
            .map(|f| Partition::new(f.to_vec()).expect("invalid partition"))
            .collect();
        Self::new(factors).expect("invalid skew shape")
    }

    pub fn factors(&self) -> &[Partition] {
        &self.factors
    }

    pub fn weight(&self) -> usize {
        self.factors.iter().map(Partition::weight).sum()
    }
}

/// `(3,2)x(2,1,1)`
impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Concrete cells of a skew shape. Each factor after the first is placed so
/// that the last cell of its first row sits one row below and one column left
/// of the previous factor's lowest first-column cell.
#[derive(Debug)]
struct CellGrid {
    cells: Vec<(i64, i64)>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

impl CellGrid {
    fn new(shape: &SkewShape) -> Self {
        let mut cells = Vec::with_capacity(shape.weight());
        let (mut top, mut first_col) = (0i64, 0i64);
        for (k, factor) in shape.factors().iter().enumerate() {
            if k > 0 {
                first_col -= factor.parts()[0] as i64;
            }
            for (r, &len) in factor.parts().iter().enumerate() {
                for c in 0..len {
                    cells.push((top + r as i64, first_col + c as i64));
                }
            }
            top += factor.len() as i64;
        }
        let index: HashMap<(i64, i64), usize> = cells.iter().enumerate().map(|(i, &rc)| (rc, i)).collect();
        let left = cells.iter().map(|&(r, c)| index.get(&(r, c - 1)).copied()).collect();
        let up = cells.iter().map(|&(r, c)| index.get(&(r - 1, c)).copied()).collect();
        CellGrid { cells, left, up }
    }

    /// Places 1, 2, ... one at a time into any cell whose left and upper
    /// neighbours are already filled; counts complete fillings.
    fn count_fillings(&self) -> u64 {
        fn go(grid: &CellGrid, filled: &mut [bool], placed: usize) -> u64 {
            if placed == grid.cells.len() {
                return 1;
            }
            let mut total = 0;
            for i in 0..grid.cells.len() {
                let ready =
                    !filled[i] && grid.left[i].is_none_or(|l| filled[l]) && grid.up[i].is_none_or(|u| filled[u]);
                if ready {
                    filled[i] = true;
                    total += go(grid, filled, placed + 1);
                    filled[i] = false;
                }
            }
            total
        }
        go(self, &mut vec![false; self.cells.len()], 0)
    }
}

/// Brute-force count of standard fillings of a skew shape.
pub fn enumerate_syt(shape: &SkewShape, cutoff: usize) -> Result<Natural> {
    let size = shape.weight();
    if size > cutoff {
        return Err(Error::CutoffExceeded {
            what: "tableau enumeration",
            size,
            cutoff,
        });
    }
    Ok(Natural::from(CellGrid::new(shape).count_fillings()))
}

/// `f^{λ¹×⋯×λᵏ} = multinomial(n; |λ¹|, …, |λᵏ|) · ∏ f^{λⁱ}`
pub fn num_skew_syt(shape: &SkewShape) -> Natural {
    num_skew_syt_with(shape, &mut SytCounter::new())
}

pub fn num_skew_syt_with(shape: &SkewShape, counter: &mut SytCounter) -> Natural {
    let sizes: Vec<usize> = shape.factors().iter().map(Partition::weight).collect();
    shape
        .factors()
        .iter()
        .fold(multinomial(shape.weight(), &sizes), |acc, f| acc * counter.count(f))
}

/// Every sequence of nonempty partitions with total weight `n`, each exactly
/// once. Ordered by the composition of factor weights (lexicographically
/// descending), then by each factor's partition in [`partitions_of`] order.
pub fn skew_shapes_of(n: usize) -> Result<Vec<SkewShape>> {
    if n == 0 {
        return Err(Error::EmptyInput("skew_shapes_of"));
    }
    let tables: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    let mut weights = Vec::new();
    fn compositions(rest: usize, weights: &mut Vec<usize>, tables: &[Vec<Partition>], out: &mut Vec<SkewShape>) {
        if rest == 0 {
            push_products(weights, tables, out);
            return;
        }
        for first in (1..=rest).rev() {
            weights.push(first);
            compositions(rest - first, weights, tables, out);
            weights.pop();
        }
    }
    fn push_products(weights: &[usize], tables: &[Vec<Partition>], out: &mut Vec<SkewShape>) {
        let mut odometer = vec![0usize; weights.len()];
        loop {
            let factors = weights
                .iter()
                .zip(&odometer)
                .map(|(&w, &i)| tables[w][i].clone())
                .collect();
            out.push(SkewShape { factors });
            let mut k = weights.len();
            loop {
                if k == 0 {
                    return;
                }
                k -= 1;
                odometer[k] += 1;
                if odometer[k] < tables[weights[k]].len() {
                    break;
                }
                odometer[k] = 0;
            }
        }
    }
    compositions(n, &mut weights, &tables, &mut out);
    Ok(out)
}

/// `[I(0), ..., I(n)]` via `I(m) = I(m-1) + (m-1) I(m-2)`.
pub fn involution_table(n: usize) -> Vec<Natural> {
    let mut table: Vec<Natural> = vec![Natural::one(); (n + 1).max(2)];
    for m in 2..=n {
        table[m] = &table[m - 1] + &table[m - 2] * (m - 1);
    }
    table.truncate(n + 1);
    table
}

/// Number of involutions in `S_n`.
pub fn involution_count(n: usize) -> Natural {
    involution_table(n).pop().expect("table has n + 1 entries")
}

/// All `w ∈ S_n` with `w ∘ w = id`, in lexicographic order.
pub fn enumerate_involutions(n: usize, cutoff: usize) -> Result<Vec<Permutation>> {
    if n > cutoff {
        return Err(Error::CutoffExceeded {
            what: "involution enumeration",
            size: n,
            cutoff,
        });
    }
    let mut out = Vec::new();
    for_each_min_coset_rep(&RootSubset::empty(n), |w| {
        if w.iter().enumerate().all(|(i, &v)| w[v as usize - 1] as usize == i + 1) {
            out.push(Permutation::new(w.to_vec()).expect("scan yields permutations"));
        }
    });
    Ok(out)
}
