//! Type-A Coxeter combinatorics: descents, parabolic subsets `J ⊆ [n-1]`,
//! minimal coset representatives `W^J`, the statistics `a_J`, `b_J` and the
//! root-vector count `r_J`, and the enumerators
//! `B_{n,J}(q) = Σ_{w ∈ W^J} q^{a_J(w) + b_J(w)}`.
//!
//! Conventions: `J` holds indices `i` of simple roots `α_i = ε_i - ε_{i+1}`;
//! a permutation acts on the ε-basis by `w(ε_j) = ε_{w(j)}`; a weight vector
//! is positive when its lowest-index nonzero coordinate is positive.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{multinomial, IntPolynomial, Integer, Natural};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Largest `n` a [`RootSubset`] can describe.
pub const MAX_RANK: usize = 64;

/// A subset `J ⊆ [n-1]`, naming the simple roots `α_i, i ∈ J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSubset {
    n: usize,
    mask: u64,
}

impl RootSubset {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        if n > MAX_RANK {
            return Err(Error::invalid("root subset", format!("n = {n} exceeds {MAX_RANK}")));
        }
        let mut mask = 0u64;
        for &i in members {
            if i == 0 || i >= n {
                return Err(Error::invalid(
                    "root subset",
                    format!("{i} is not in [{}]", n.saturating_sub(1)),
                ));
            }
            mask |= 1 << i;
        }
        Ok(RootSubset { n, mask })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_RANK);
        RootSubset { n, mask: 0 }
    }

    /// `J = [n-1]`
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_RANK);
        let mask = (1..n).fold(0u64, |m, i| m | (1 << i));
        RootSubset { n, mask }
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(mask & 1 == 0 && (n == MAX_RANK || mask >> n == 0));
        RootSubset { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bit `i` is set iff `i ∈ J`.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Membership test; `0` and `n` are never members.
    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.mask & (1 << i) != 0
    }

    pub fn members(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// No two members are consecutive, i.e. the roots are pairwise orthogonal.
    pub fn is_special(&self) -> bool {
        self.mask & (self.mask >> 1) == 0
    }

    /// Sizes `m_1, ..., m_s` of the maximal runs of consecutive members.
    pub fn run_sizes(&self) -> Vec<usize> {
        let mut runs = Vec::new();
        let mut current = 0;
        for i in 1..=self.n {
            if self.contains(i) {
                current += 1;
            } else if current > 0 {
                runs.push(current);
                current = 0;
            }
        }
        runs
    }

    /// Sizes of the blocks of positions `1..=n` glued together by `J`
    /// (positions `i` and `i+1` share a block iff `i ∈ J`). These are the
    /// orders of the symmetric factors of `W_J`; they sum to `n`.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::new();
        let mut current = 0;
        for i in 1..=self.n {
            current += 1;
            if !self.contains(i) {
                sizes.push(current);
                current = 0;
            }
        }
        sizes
    }

    /// `|W^J| = n! / ∏ (block size)!`
    pub fn coset_count(&self) -> Natural {
        multinomial(self.n, &self.block_sizes())
    }
}

/// `{1,2}`, with `{}` for the empty set.
impl fmt::Display for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.members().into_iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

fn size_then_lex(a: &RootSubset, b: &RootSubset) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.members().cmp(&b.members()))
}

/// Every `J ⊆ [n-1]`, ordered by size and then lexicographically.
pub fn all_subsets(n: usize) -> Vec<RootSubset> {
    assert!(n <= 32, "refusing to list 2^{} subsets", n.saturating_sub(1));
    let top = if n == 0 { 0 } else { n - 1 };
    let mut subsets: Vec<RootSubset> = (0u64..1 << top)
        .map(|bits| RootSubset::from_mask(n, bits << 1))
        .collect();
    subsets.sort_by(size_then_lex);
    subsets
}

/// Every `J ⊆ [n-1]` with no two consecutive members, ordered by size and
/// then lexicographically.
pub fn special_subsets(n: usize) -> Vec<RootSubset> {
    assert!(n <= MAX_RANK);
    fn grow(n: usize, next: usize, mask: u64, out: &mut Vec<RootSubset>) {
        out.push(RootSubset::from_mask(n, mask));
        for i in next..n {
            grow(n, i + 2, mask | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    grow(n, 1, 0, &mut out);
    out.sort_by(size_then_lex);
    out
}

/// Integer vector in the ε-basis; coordinate `j` (0-based) is the
/// coefficient of `ε_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    /// `α_i = ε_i - ε_{i+1}`
    pub fn simple_root(n: usize, i: usize) -> Self {
        assert!(1 <= i && i < n, "simple root index {i} out of range for n = {n}");
        let mut v = Self::zero(n);
        v.0[i - 1] = 1;
        v.0[i] = -1;
        v
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &WeightVector) -> Self {
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        WeightVector(self.0.iter().map(|c| -c).collect())
    }

    /// Image under `w(ε_j) = ε_{w(j)}`.
    pub fn act(&self, w: &Permutation) -> Self {
        assert_eq!(w.len(), self.0.len());
        let mut out = vec![0; self.0.len()];
        for (j, &c) in self.0.iter().enumerate() {
            out[w.one_line()[j] as usize - 1] = c;
        }
        WeightVector(out)
    }

    /// True iff the lowest-index nonzero coordinate is positive.
    ///
    /// Panics on the zero vector.
    pub fn lex_positive(&self) -> bool {
        let lead = self
            .0
            .iter()
            .find(|&&c| c != 0)
            .expect("lex_positive on the zero vector");
        *lead > 0
    }
}

/// Descent bitmask of a one-line word: bit `i` set iff `w(i) > w(i+1)`.
pub(crate) fn descent_mask(w: &[u8]) -> u64 {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .fold(0, |m, (i, _)| m | (1 << (i + 1)))
}

/// `Des(w) = {i : w(i) > w(i+1)}`
pub fn descent_set(w: &Permutation) -> Vec<usize> {
    let mask = descent_mask(w.one_line());
    (1..w.len()).filter(|&i| mask & (1 << i) != 0).collect()
}

pub(crate) fn stat_a_word(w: &[u8], j: u64) -> usize {
    (1..w.len())
        .filter(|&i| w[i - 1] > w[i] && j & (1 << i) == 0 && j & (1 << (i - 1)) == 0)
        .count()
}

pub(crate) fn stat_b_word(w: &[u8], j: u64) -> usize {
    // 1-based i ↔ w(i-1) = w[i-2], w(i) = w[i-1], w(i+1) = w[i].
    (2..w.len())
        .filter(|&i| j & (1 << (i - 1)) != 0 && j & (1 << i) == 0 && w[i] < w[i - 2] && w[i - 2] < w[i - 1])
        .count()
}

/// Descents `i` of `w` with neither `i` nor `i-1` in `J`.
pub fn stat_a(w: &Permutation, j: &RootSubset) -> usize {
    assert_eq!(w.len(), j.n());
    stat_a_word(w.one_line(), j.mask)
}

/// Descents `i` of `w` with `i-1 ∈ J`, `i ∉ J` and `w(i+1) < w(i-1) < w(i)`.
pub fn stat_b(w: &Permutation, j: &RootSubset) -> usize {
    assert_eq!(w.len(), j.n());
    stat_b_word(w.one_line(), j.mask)
}

/// Depth-first generator of `W^J` in lexicographic order.
struct CosetScan {
    n: usize,
    /// `glued[p]`: 0-based position `p` must exceed position `p - 1`.
    glued: Vec<bool>,
    /// Positions after `p` in the same block.
    ahead: Vec<usize>,
}

impl CosetScan {
    fn new(j: &RootSubset) -> Self {
        let n = j.n();
        let glued: Vec<bool> = (0..n).map(|p| p > 0 && j.contains(p)).collect();
        let mut ahead = vec![0; n];
        for p in (0..n.saturating_sub(1)).rev() {
            if glued[p + 1] {
                ahead[p] = ahead[p + 1] + 1;
            }
        }
        CosetScan { n, glued, ahead }
    }

    fn admissible(&self, word: &[u8], used: u64, v: u8) -> bool {
        let p = word.len();
        if self.glued[p] && v < word[p - 1] {
            return false;
        }
        // The rest of the block needs that many unused values above v.
        let above = (v as usize + 1..=self.n).filter(|&u| used & (1 << u) == 0).count();
        above >= self.ahead[p]
    }

    fn dfs<F: FnMut(&[u8])>(&self, word: &mut Vec<u8>, used: u64, f: &mut F) {
        if word.len() == self.n {
            f(word);
            return;
        }
        for v in 1..=self.n as u8 {
            if used & (1 << v) == 0 && self.admissible(word, used, v) {
                word.push(v);
                self.dfs(word, used | (1 << v), f);
                word.pop();
            }
        }
    }

    /// All representatives whose first entry is `first`.
    fn scan_block<F: FnMut(&[u8])>(&self, first: u8, f: &mut F) {
        let mut word = Vec::with_capacity(self.n);
        if self.admissible(&word, 0, first) {
            word.push(first);
            self.dfs(&mut word, 1 << first, f);
        }
    }

    fn scan<F: FnMut(&[u8])>(&self, f: &mut F) {
        if self.n == 0 {
            f(&[]);
            return;
        }
        for first in 1..=self.n as u8 {
            self.scan_block(first, f);
        }
    }
}

fn check_rank(n: usize) {
    assert!(n < MAX_RANK, "permutation scans need n < {MAX_RANK}, got {n}");
}

/// Visits every `w ∈ W^J` (no descent at a position of `J`) in lexicographic
/// order, passing its one-line word.
pub fn for_each_min_coset_rep<F: FnMut(&[u8])>(j: &RootSubset, mut f: F) {
    check_rank(j.n());
    CosetScan::new(j).scan(&mut f);
}

/// Parallel fold over `W^J`, split into blocks by first entry. `merge` must
/// be associative and commutative for the result to be deterministic.
pub fn par_fold_min_coset_reps<T, I, F, M>(j: &RootSubset, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &[u8]) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    check_rank(j.n());
    let scan = CosetScan::new(j);
    if j.n() == 0 {
        let mut acc = init();
        fold(&mut acc, &[]);
        return acc;
    }
    (1..=j.n() as u8)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            scan.scan_block(first, &mut |w| fold(&mut acc, w));
            acc
        })
        .reduce(&init, &merge)
}

/// All minimal-length coset representatives `W^J`, in lexicographic order.
pub fn min_coset_reps(j: &RootSubset) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_min_coset_rep(j, |w| out.push(Permutation::from_word_unchecked(w)));
    out
}

/// Longest element `w_J` of the parabolic subgroup `W_J`: reverses every
/// block of positions glued together by `J`.
pub fn longest_parabolic_element(j: &RootSubset) -> Permutation {
    let mut word = Vec::with_capacity(j.n());
    let mut start = 1;
    for size in j.block_sizes() {
        word.extend((start..start + size).rev().map(|v| v as u8));
        start += size;
    }
    Permutation::from_word_unchecked(&word)
}

/// Number of `i ∉ J` with `-w(α_i + w_J(α_i))` positive, computed directly
/// on weight vectors.
///
/// Panics unless `J` is special and `w ∈ W^J`.
pub fn root_exponent(w: &Permutation, j: &RootSubset) -> usize {
    let n = j.n();
    assert_eq!(w.len(), n, "permutation and subset ranks differ");
    assert!(j.is_special(), "root_exponent needs a special subset, got {j}");
    assert!(
        descent_mask(w.one_line()) & j.mask() == 0,
        "{w} is not a minimal coset representative for {j}"
    );
    let longest = longest_parabolic_element(j);
    (1..n)
        .filter(|&i| !j.contains(i))
        .filter(|&i| {
            let alpha = WeightVector::simple_root(n, i);
            alpha.add(&alpha.act(&longest)).act(w).neg().lex_positive()
        })
        .count()
}

/// `B_{n,J}(q) = Σ_{w ∈ W^J} q^{a_J(w) + b_J(w)}` by exhaustive scan.
pub fn b_poly(j: &RootSubset) -> IntPolynomial {
    let n = j.n();
    let mask = j.mask();
    let counts = par_fold_min_coset_reps(
        j,
        || vec![0u64; n.max(1)],
        |acc, w| acc[stat_a_word(w, mask) + stat_b_word(w, mask)] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    IntPolynomial::new(counts.into_iter().map(Integer::from).collect())
}

/// `Σ_{w ∈ S_n} q^{|Des(w)|}`, scanned directly over all permutations.
pub fn eulerian_poly(n: usize) -> IntPolynomial {
    let counts = par_fold_min_coset_reps(
        &RootSubset::empty(n),
        || vec![0u64; n.max(1)],
        |acc, w| acc[descent_mask(w).count_ones() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    IntPolynomial::new(counts.into_iter().map(Integer::from).collect())
}

/// `Σ_{w ∈ W^J} 2^{a_J(w) + b_J(w)}`, i.e. `B_{n,J}(2)`, accumulated
/// exactly during the scan.
pub fn weighted_coset_sum(j: &RootSubset) -> Natural {
    let mask = j.mask();
    par_fold_min_coset_reps(
        j,
        BigUint::zero,
        |acc, w| *acc += BigUint::from(1u32) << (stat_a_word(w, mask) + stat_b_word(w, mask)),
        |a, b| a + b,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn subset(n: usize, m: &[usize]) -> RootSubset {
        RootSubset::new(n, m).unwrap()
    }

    /// Filters the full symmetric group, built by a separate recursion.
    fn brute_force_reps(j: &RootSubset) -> Vec<Permutation> {
        fn all(n: usize) -> Vec<Vec<u8>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for w in all(n - 1) {
                for pos in 0..=w.len() {
                    let mut v = w.clone();
                    v.insert(pos, n as u8);
                    out.push(v);
                }
            }
            out
        }
        let mut reps: Vec<Permutation> = all(j.n())
            .into_iter()
            .filter(|w| j.members().iter().all(|&i| w[i - 1] < w[i]))
            .map(|w| Permutation::new(w).unwrap())
            .collect();
        reps.sort();
        reps
    }

    #[test]
    fn subset_validation() {
        assert!(RootSubset::new(4, &[0]).is_err());
        assert!(RootSubset::new(4, &[4]).is_err());
        assert!(RootSubset::new(65, &[]).is_err());
        assert_eq!(subset(5, &[3, 1]).members(), vec![1, 3]);
        assert_eq!(subset(5, &[1, 3]).to_string(), "{1,3}");
        assert_eq!(RootSubset::empty(5).to_string(), "{}");
    }

    #[test]
    fn runs_and_blocks() {
        let i = subset(12, &[2, 5, 6, 7, 10, 11]);
        assert_eq!(i.run_sizes(), vec![1, 3, 2]);
        assert_eq!(i.block_sizes(), vec![1, 2, 1, 4, 1, 3]);
        assert_eq!(RootSubset::full(5).block_sizes(), vec![5]);
        assert_eq!(RootSubset::empty(3).block_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn descent_examples() {
        assert!(descent_set(&Permutation::identity(5)).is_empty());
        assert_eq!(descent_set(&perm("3142")), vec![1, 3]);
        assert_eq!(descent_set(&Permutation::reversal(6)), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn coset_rep_examples() {
        let reps: Vec<String> = min_coset_reps(&subset(3, &[1]))
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(reps, ["123", "132", "231"]);
        assert_eq!(min_coset_reps(&RootSubset::empty(5)).len(), 120);
        assert_eq!(min_coset_reps(&RootSubset::empty(0)).len(), 1);
    }

    #[test]
    fn coset_reps_match_filtered_scan() {
        for n in 0..=6 {
            for j in all_subsets(n) {
                let fast = min_coset_reps(&j);
                assert_eq!(fast, brute_force_reps(&j), "n = {n}, J = {j}");
                assert_eq!(Natural::from(fast.len()), j.coset_count());
            }
        }
    }

    #[test]
    fn coset_count_for_large_parabolic() {
        let j = subset(12, &[2, 5, 6, 7, 10, 11]);
        let expected = factorial(12) / (factorial(2) * factorial(4) * factorial(3));
        assert_eq!(expected, Natural::from(1_663_200u32));
        assert_eq!(j.coset_count(), expected);
        let scanned = par_fold_min_coset_reps(&j, || 0u64, |c, _| *c += 1, |a, b| a + b);
        assert_eq!(scanned, 1_663_200);
    }

    #[test]
    fn longest_element_examples() {
        assert_eq!(longest_parabolic_element(&subset(4, &[1, 3])), perm("2143"));
        assert!(longest_parabolic_element(&RootSubset::empty(6)).is_identity());
        assert_eq!(longest_parabolic_element(&subset(3, &[1, 2])), perm("321"));
    }

    #[test]
    fn longest_element_has_maximal_length() {
        for n in 1..=6 {
            for j in all_subsets(n) {
                let wj = longest_parabolic_element(&j);
                // Length of the longest element of a product of symmetric
                // groups is Σ C(b, 2) over the blocks.
                let expected: usize = j.block_sizes().iter().map(|b| b * (b - 1) / 2).sum();
                assert_eq!(wj.length(), expected, "J = {j}");
                assert!(wj.is_involution());
            }
        }
    }

    #[test]
    fn special_subset_examples() {
        assert_eq!(special_subsets(1), vec![RootSubset::empty(1)]);
        let three: Vec<String> = special_subsets(3).iter().map(ToString::to_string).collect();
        assert_eq!(three, ["{}", "{1}", "{2}"]);
        assert_eq!(special_subsets(5).len(), 8);
        for n in 1..=10 {
            let filtered: Vec<RootSubset> = all_subsets(n).into_iter().filter(RootSubset::is_special).collect();
            assert_eq!(special_subsets(n), filtered);
        }
    }

    #[test]
    fn special_subset_count_recurrence() {
        // Binary strings of length m with no two adjacent ones.
        let mut strings = vec![1u64, 2];
        for m in 2..40 {
            strings.push(strings[m - 1] + strings[m - 2]);
        }
        for n in 1..=25 {
            assert_eq!(special_subsets(n).len() as u64, strings[n - 1], "n = {n}");
        }
    }

    #[test]
    fn statistic_examples() {
        let id = Permutation::identity(4);
        for j in all_subsets(4) {
            assert_eq!(stat_a(&id, &j), 0);
            assert_eq!(stat_b(&id, &j), 0);
        }
        assert_eq!(stat_a(&perm("321"), &RootSubset::empty(3)), 2);
        assert_eq!(stat_a(&perm("231"), &subset(3, &[1])), 0);
        assert_eq!(stat_b(&perm("231"), &subset(3, &[1])), 1);
        assert_eq!(stat_b(&perm("132"), &subset(3, &[1])), 0);
        // i = 1 never sees i - 1 = 0 as a member.
        assert_eq!(stat_a(&perm("213"), &subset(3, &[2])), 1);
    }

    #[test]
    fn lex_positive_examples() {
        assert!(WeightVector(vec![1, -1, 0]).lex_positive());
        assert!(!WeightVector(vec![-1, 1, 0]).lex_positive());
        assert!(WeightVector(vec![2, -1, -1]).lex_positive());
        assert!(!WeightVector(vec![0, -2, 1, 1]).lex_positive());
    }

    #[test]
    #[should_panic(expected = "zero vector")]
    fn lex_positive_rejects_zero() {
        WeightVector::zero(3).lex_positive();
    }

    #[test]
    fn root_exponent_examples() {
        assert_eq!(root_exponent(&Permutation::identity(4), &RootSubset::empty(4)), 0);
        assert_eq!(root_exponent(&perm("231"), &subset(3, &[1])), 1);
        assert_eq!(root_exponent(&perm("321"), &RootSubset::empty(3)), 2);
        // The vector behind the second example.
        let j = subset(3, &[1]);
        let a2 = WeightVector::simple_root(3, 2);
        let v = a2.add(&a2.act(&longest_parabolic_element(&j))).act(&perm("231")).neg();
        assert_eq!(v, WeightVector(vec![2, -1, -1]));
    }

    #[test]
    #[should_panic(expected = "special")]
    fn root_exponent_rejects_non_special() {
        root_exponent(&Permutation::identity(3), &subset(3, &[1, 2]));
    }

    #[test]
    #[should_panic(expected = "minimal coset representative")]
    fn root_exponent_rejects_non_representative() {
        root_exponent(&perm("213"), &subset(3, &[1]));
    }

    #[test]
    fn b_poly_examples() {
        assert_eq!(b_poly(&subset(5, &[1, 2])), IntPolynomial::from_i64s(&[3, 14, 3]));
        for n in 1..=6 {
            assert_eq!(b_poly(&RootSubset::full(n)), IntPolynomial::one());
        }
        assert_eq!(b_poly(&RootSubset::empty(3)), IntPolynomial::from_i64s(&[1, 4, 1]));
        assert_eq!(eulerian_poly(1), IntPolynomial::one());
        assert_eq!(eulerian_poly(3), IntPolynomial::from_i64s(&[1, 4, 1]));
        assert_eq!(eulerian_poly(5), IntPolynomial::from_i64s(&[1, 26, 66, 26, 1]));
    }

    #[test]
    fn weighted_sum_is_b_poly_at_two() {
        for n in 1..=6 {
            for j in all_subsets(n) {
                let at_two = b_poly(&j).eval(&Integer::from(2));
                assert_eq!(Integer::from(weighted_coset_sum(&j)), at_two);
            }
        }
    }
}
