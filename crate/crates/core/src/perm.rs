//! Permutations of `{1..n}` in one-line notation.
//!
//! Positions and values are 1-indexed everywhere in the public API: `x.at(1)`
//! is `x(1)`, inversion pairs are `(i, j)` with `1 <= i < j <= n`, and descent
//! sets hold the index `i` of the simple transposition `s_i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest degree accepted by the formula-based operations.
pub const MAX_DEGREE: usize = 10_000;

/// Largest degree accepted by anything that walks all of `S_n`.
pub const MAX_ENUMERATION_DEGREE: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // values[p] = x(p + 1)
    values: Vec<usize>,
}

/// The inversion pairs of a permutation, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionSet {
    pairs: Vec<(usize, usize)>,
}

/// Indices `i` of simple transpositions `s_i`, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DescentSet {
    positions: Vec<usize>,
}

impl Permutation {
    /// Validates one-line notation.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotABijection { n, values });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Result<Self> {
        Self::new((1..=n).rev().collect())
    }

    /// The permutation of rank `rank` (0-based) in lexicographic order of
    /// one-line notation.
    pub fn from_lex_rank(n: usize, mut rank: u64) -> Result<Self> {
        check_enumeration_degree(n)?;
        let total = factorial(n);
        if rank >= total {
            return Err(Error::Parse {
                input: rank.to_string(),
                reason: format!("rank must be below {n}! = {total}"),
            });
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut values = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let block = factorial(k);
            let pick = (rank / block) as usize;
            rank %= block;
            values.push(pool.remove(pick));
        }
        Ok(Permutation { values })
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// `x(position)`, 1-indexed. Panics outside `1..=n`.
    pub fn at(&self, position: usize) -> usize {
        self.values[position - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (p, &v) in self.values.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Permutation { values: inv }
    }

    pub fn inversions(&self) -> InversionSet {
        let n = self.degree();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.values[i] > self.values[j] {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        InversionSet { pairs }
    }

    /// Number of inversions, counted in `O(n log n)` with a Fenwick tree.
    pub fn length(&self) -> u64 {
        let n = self.degree();
        let mut tree = vec![0u32; n + 1];
        let mut count = 0u64;
        for (seen, &v) in self.values.iter().enumerate() {
            // values <= v already inserted
            let mut le = 0u64;
            let mut k = v;
            while k > 0 {
                le += u64::from(tree[k]);
                k &= k - 1;
            }
            count += seen as u64 - le;
            let mut k = v;
            while k <= n {
                tree[k] += 1;
                k += k & k.wrapping_neg();
            }
        }
        count
    }

    /// `x * t_ij`: swaps the values at positions `i` and `j`.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<Permutation> {
        let n = self.degree();
        if !(1 <= i && i < j && j <= n) {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Ok(Permutation { values })
    }

    /// One entry `((i, j), x * t_ij)` per inversion `(i, j)`.
    pub fn reductions(&self) -> Vec<((usize, usize), Permutation)> {
        self.inversions()
            .iter()
            .map(|(i, j)| {
                let mut values = self.values.clone();
                values.swap(i - 1, j - 1);
                ((i, j), Permutation { values })
            })
            .collect()
    }

    pub fn right_descents(&self) -> DescentSet {
        let positions = self
            .values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(p, _)| p + 1)
            .collect();
        DescentSet { positions }
    }

    pub fn left_descents(&self) -> DescentSet {
        self.inverse().right_descents()
    }

    /// Exactly one left descent and exactly one right descent.
    pub fn is_bigrassmannian(&self) -> bool {
        self.right_descents().len() == 1 && self.left_descents().len() == 1
    }

    /// Compact digits for `n <= 9`, comma-separated otherwise.
    pub fn one_line(&self) -> String {
        if self.degree() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_line())
    }
}

/// Accepts `"42513"` (digits, `n <= 9`) or separated values such as
/// `"4 2 5 1 3"` / `"4,2,5,1,3"`. Any comma or whitespace selects the
/// separated form.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        if trimmed.is_empty() {
            return Err(parse_err("empty input".into()));
        }
        let separated = trimmed.contains(|c: char| c == ',' || c.is_whitespace());
        let values = if separated {
            trimmed
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|e| parse_err(format!("{tok:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            if trimmed.chars().count() > 9 {
                return Err(parse_err(
                    "compact digit form only covers n <= 9; separate values with commas or spaces"
                        .into(),
                ));
            }
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

impl InversionSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.binary_search(&(i, j)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

impl DescentSet {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.positions.binary_search(&i).is_ok()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }
}

pub(crate) fn check_enumeration_degree(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyPermutation);
    }
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::DegreeTooLarge {
            n,
            max: MAX_ENUMERATION_DEGREE,
        });
    }
    Ok(())
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Every element of `S_n`, in lexicographic order of one-line notation.
pub fn enumerate_symmetric_group(n: usize) -> Result<SymmetricGroupIter> {
    check_enumeration_degree(n)?;
    Ok(SymmetricGroupIter {
        next: Some((1..=n).collect()),
    })
}

pub struct SymmetricGroupIter {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { values: current })
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] > v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut k = n - 1;
    while v[k] < v[i - 1] {
        k -= 1;
    }
    v.swap(i - 1, k);
    v[i..].reverse();
    true
}
