//! Counting and listing the bigrassmannian permutations weakly below `x`.
//!
//! Four independent closed forms compute the count `beta(x)`:
//!
//! * positional: `sum_{a<n} (x(a) - a)(n - a)`
//! * squares: `(1/2) sum_a (x(a) - a)^2`
//! * inversions: `sum_{(i,j) inversion} (x(i) - x(j))`
//! * sigma: entry sum of the monotone triangle of `x` minus that of the identity
//!
//! The set itself is `{ J_abc : 1 <= b <= a <= n-1, b < c <= x[a][b] }`, a union of
//! chains `J_{a,b,b+1} < ... < J_{a,b,x[a][b]}` over the cells of the triangle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::triangle::{triangle_of_permutation, JoinIrreducibleIndex, MonotoneTriangle};

/// `beta(x)` computed by every closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaReport {
    pub beta_positional: u64,
    pub beta_squares: u64,
    pub beta_inversions: u64,
    pub beta_sigma: u64,
    pub agree: bool,
}

impl BetaReport {
    /// The common value, when all methods agree.
    pub fn value(&self) -> Option<u64> {
        self.agree.then_some(self.beta_positional)
    }
}

/// `B(x)`: each bigrassmannian element below `x` with the index generating it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BelowSet {
    entries: Vec<(JoinIrreducibleIndex, Permutation)>,
}

impl BelowSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Ordered by index `(a, b, c)`.
    pub fn iter(&self) -> impl Iterator<Item = &(JoinIrreducibleIndex, Permutation)> {
        self.entries.iter()
    }

    pub fn permutations(&self) -> impl Iterator<Item = &Permutation> {
        self.entries.iter().map(|(_, w)| w)
    }

    pub fn indices(&self) -> impl Iterator<Item = JoinIrreducibleIndex> + '_ {
        self.entries.iter().map(|(idx, _)| *idx)
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.entries.iter().any(|(_, v)| v == w)
    }
}

pub fn beta_positional(x: &Permutation) -> u64 {
    let n = x.degree() as i64;
    let total: i64 = (1..n)
        .map(|a| (x.at(a as usize) as i64 - a) * (n - a))
        .sum();
    u64::try_from(total).expect("positional sum is nonnegative")
}

pub fn beta_squares(x: &Permutation) -> u64 {
    let squares: u64 = x
        .values()
        .iter()
        .enumerate()
        .map(|(p, &v)| {
            let d = v.abs_diff(p + 1) as u64;
            d * d
        })
        .sum();
    assert!(
        squares.is_multiple_of(2),
        "odd displacement-square sum {squares} for {x}"
    );
    squares / 2
}

pub fn beta_inversions(x: &Permutation) -> u64 {
    inversion_summands(x).map(|(_, d)| d).sum()
}

/// `(pair, x(i) - x(j))` for each inversion `(i, j)`; every difference is at least 1.
pub fn inversion_summands(x: &Permutation) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
    let values = x.values();
    let n = values.len();
    (0..n).flat_map(move |i| {
        (i + 1..n)
            .filter(move |&j| values[i] > values[j])
            .map(move |j| ((i + 1, j + 1), (values[i] - values[j]) as u64))
    })
}

/// `sigma(t) - sigma(e)`. Defined on the whole completion, where it counts the
/// join-irreducible triangles weakly below `t`.
pub fn beta_sigma_triangle(t: &MonotoneTriangle) -> u64 {
    let n = t.order() as u64;
    // sigma(e) = sum_{a<n} a(a+1)/2 = (n-1)n(n+1)/6
    let sigma_identity = (n - 1) * n * (n + 1) / 6;
    t.sigma() - sigma_identity
}

pub fn beta_sigma(x: &Permutation) -> u64 {
    beta_sigma_triangle(&triangle_of_permutation(x))
}

pub fn beta_report(x: &Permutation) -> BetaReport {
    let beta_positional = beta_positional(x);
    let beta_squares = beta_squares(x);
    let beta_inversions = beta_inversions(x);
    let beta_sigma = beta_sigma(x);
    let agree = beta_positional == beta_squares
        && beta_squares == beta_inversions
        && beta_inversions == beta_sigma;
    BetaReport {
        beta_positional,
        beta_squares,
        beta_inversions,
        beta_sigma,
        agree,
    }
}

/// Lists `B(x)` from the monotone triangle of `x`.
pub fn below_set(x: &Permutation) -> BelowSet {
    below_set_triangle(&triangle_of_permutation(x))
}

/// Join-irreducibles weakly below an arbitrary triangle of the completion.
pub fn below_set_triangle(t: &MonotoneTriangle) -> BelowSet {
    let n = t.order();
    let mut entries = Vec::new();
    for a in 1..n {
        for b in 1..=a {
            for c in b + 1..=t.get(a, b) {
                let idx = JoinIrreducibleIndex { n, a, b, c };
                entries.push((idx, idx.permutation()));
            }
        }
    }
    debug_assert!({
        let mut perms: Vec<_> = entries.iter().map(|(_, w)| w.clone()).collect();
        perms.sort();
        perms.dedup();
        perms.len() as u64 == beta_sigma_triangle(t)
    });
    BelowSet { entries }
}

/// `beta(x) - beta(x * t_ij) = (j - i)(x(i) - x(j))`.
pub fn beta_transposition_delta(x: &Permutation, i: usize, j: usize) -> Result<i64> {
    let n = x.degree();
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::IndexOutOfRange { i, j, n });
    }
    Ok((j - i) as i64 * (x.at(i) as i64 - x.at(j) as i64))
}
