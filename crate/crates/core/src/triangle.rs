//! Monotone triangles of order `n` and the lattice they form.
//!
//! A triangle of order `n` has rows `1..=n-1`; row `a` holds `a` strictly
//! increasing values in `1..=n`, and consecutive rows interlace:
//! `x[a+1][b] <= x[a][b] <= x[a+1][b+1]`. A permutation `x` maps to the
//! triangle whose row `a` is the sorted prefix `{x(1), ..., x(a)}`, and the
//! componentwise order on triangles restricts to Bruhat order on `S_n`.
//!
//! Row `n` would be `1 2 ... n` for every triangle, so it is not stored. Any
//! strictly increasing row `y` of length `n-1` drawn from `1..=n` already
//! interlaces it: `y[b] >= b` because the row starts at 1 or above and climbs
//! by at least one per step, and `y[b] <= b+1` because it ends at `n` or
//! below. Validation and generation therefore stop at row `n-1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

/// Largest order accepted by [`enumerate_triangles`].
pub const MAX_TRIANGLE_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneTriangle {
    n: usize,
    // row-major; row a (1-indexed) starts at a(a-1)/2
    entries: Vec<u16>,
}

/// The triple `(a, b, c)` naming the join-irreducible triangle `J_abc` of
/// order `n`: the least triangle whose `(a, b)` entry is at least `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoinIrreducibleIndex {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

fn row_start(a: usize) -> usize {
    a * (a - 1) / 2
}

fn entry_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl MonotoneTriangle {
    /// Builds a triangle from its rows `1..=n-1`, checking every invariant.
    pub fn from_rows(n: usize, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() + 1 != n.max(1) {
            return Err(Error::InvalidTriangle(format!(
                "order {n} needs {} rows, got {}",
                n.saturating_sub(1),
                rows.len()
            )));
        }
        let mut entries = Vec::with_capacity(entry_count(n));
        for (a, row) in rows.iter().enumerate() {
            if row.len() != a + 1 {
                return Err(Error::InvalidTriangle(format!(
                    "row {} has {} entries, expected {}",
                    a + 1,
                    row.len(),
                    a + 1
                )));
            }
            for &v in row {
                if v == 0 || v > n {
                    return Err(Error::InvalidTriangle(format!(
                        "entry {v} outside 1..={n} in row {}",
                        a + 1
                    )));
                }
                entries.push(v as u16);
            }
        }
        let t = MonotoneTriangle { n, entries };
        t.check()?;
        Ok(t)
    }

    /// The triangle of the identity: every `e[a][b] = b`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::InvalidTriangle(format!("unsupported order {n}")));
        }
        let mut entries = Vec::with_capacity(entry_count(n));
        for a in 1..n {
            entries.extend((1..=a).map(|b| b as u16));
        }
        Ok(MonotoneTriangle { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry `x[a][b]`, 1-indexed. Panics unless `1 <= b <= a <= n-1`.
    pub fn get(&self, a: usize, b: usize) -> usize {
        assert!(
            1 <= b && b <= a && a < self.n,
            "entry ({a}, {b}) outside order {}",
            self.n
        );
        usize::from(self.entries[row_start(a) + b - 1])
    }

    pub fn row(&self, a: usize) -> &[u16] {
        assert!(1 <= a && a < self.n, "row {a} outside order {}", self.n);
        &self.entries[row_start(a)..row_start(a + 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u16]> + '_ {
        (1..self.n).map(move |a| self.row(a))
    }

    /// Flattened row-major entries.
    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    fn check(&self) -> Result<()> {
        let n = self.n;
        for a in 1..n {
            let row = self.row(a);
            for (b, &v) in row.iter().enumerate() {
                if v == 0 || usize::from(v) > n {
                    return Err(Error::InvalidTriangle(format!(
                        "entry ({a}, {}) = {v} out of range",
                        b + 1
                    )));
                }
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTriangle(format!(
                    "row {a} is not strictly increasing"
                )));
            }
            if a + 1 < n {
                let below = self.row(a + 1);
                for (b, &v) in row.iter().enumerate() {
                    if below[b] > v || v > below[b + 1] {
                        return Err(Error::InvalidTriangle(format!(
                            "rows {a} and {} do not interlace at column {}",
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Sum of all entries.
    pub fn sigma(&self) -> u64 {
        self.entries.iter().map(|&v| u64::from(v)).sum()
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Componentwise `<=`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_order(other)?;
        Ok(self.entries.iter().zip(&other.entries).all(|(s, t)| s <= t))
    }

    /// `None` when the triangles are incomparable.
    pub fn compare(&self, other: &Self) -> Result<Option<Ordering>> {
        let le = self.leq(other)?;
        let ge = other.leq(self)?;
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u16, u16) -> u16) -> Result<Self> {
        self.same_order(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&s, &t)| f(s, t))
            .collect();
        let t = MonotoneTriangle { n: self.n, entries };
        debug_assert!(t.is_valid());
        Ok(t)
    }

    /// Least upper bound: entrywise maximum.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u16::max)
    }

    /// Greatest lower bound: entrywise minimum.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u16::min)
    }

    /// Inverse of [`triangle_of_permutation`]. Fails when some row is not its
    /// predecessor plus one new value, which happens only for elements of the
    /// completion that are not permutations.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.n;
        let full: Vec<u16> = (1..=n as u16).collect();
        let mut values = Vec::with_capacity(n);
        let mut prev: &[u16] = &[];
        for a in 1..=n {
            let row = if a < n { self.row(a) } else { &full[..] };
            let added = single_addition(prev, row).ok_or(Error::NotAPermutation { row: a })?;
            values.push(usize::from(added));
            prev = row;
        }
        Permutation::new(values)
    }
}

/// The one value of `longer` missing from `shorter`, if `longer` is exactly
/// `shorter` plus one value. Both sorted.
fn single_addition(shorter: &[u16], longer: &[u16]) -> Option<u16> {
    let mut added = None;
    let mut s = shorter.iter().peekable();
    for &v in longer {
        if s.peek() == Some(&&v) {
            s.next();
        } else if added.replace(v).is_some() {
            return None;
        }
    }
    if s.next().is_some() {
        return None;
    }
    added
}

/// Row `a` is the sorted set `{x(1), ..., x(a)}`.
pub fn triangle_of_permutation(x: &Permutation) -> MonotoneTriangle {
    let n = x.degree();
    let mut entries = Vec::with_capacity(entry_count(n));
    let mut prefix: Vec<u16> = Vec::with_capacity(n);
    for &v in &x.values()[..n - 1] {
        let v = v as u16;
        let at = prefix.partition_point(|&p| p < v);
        prefix.insert(at, v);
        entries.extend_from_slice(&prefix);
    }
    MonotoneTriangle { n, entries }
}

pub fn permutation_of_triangle(t: &MonotoneTriangle) -> Result<Permutation> {
    t.to_permutation()
}

impl fmt::Display for MonotoneTriangle {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl JoinIrreducibleIndex {
    pub fn new(n: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        let valid = n <= MAX_DEGREE && 1 <= b && b <= a && a < n && b < c && c + a <= n + b;
        if !valid {
            return Err(Error::InvalidIndex { n, a, b, c });
        }
        Ok(JoinIrreducibleIndex { n, a, b, c })
    }

    /// Every valid triple of order `n`, ordered by `(a, b, c)`.
    pub fn all(n: usize) -> impl Iterator<Item = JoinIrreducibleIndex> {
        (1..n).flat_map(move |a| {
            (1..=a).flat_map(move |b| {
                (b + 1..=n - a + b).map(move |c| JoinIrreducibleIndex { n, a, b, c })
            })
        })
    }

    /// Number of valid triples, `n(n^2-1)/6`.
    pub fn count(n: usize) -> u64 {
        let n = n as u64;
        n * (n * n).saturating_sub(1) / 6
    }

    /// One-line notation of `J_abc`:
    /// `1..b-1, c..c+a-b, b..c-1, c+a-b+1..n`.
    pub fn permutation(&self) -> Permutation {
        let JoinIrreducibleIndex { n, a, b, c } = *self;
        let top = c + a - b;
        let values: Vec<usize> = (1..b)
            .chain(c..=top)
            .chain(b..c)
            .chain(top + 1..=n)
            .collect();
        Permutation::new(values).expect("closed form is a bijection for a valid index")
    }

    pub fn triangle(&self) -> MonotoneTriangle {
        make_join_irreducible(*self)
    }
}

impl fmt::Display for JoinIrreducibleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={},b={},c={})", self.a, self.b, self.c)
    }
}

/// `J_abc`: for every triangle `x` of the same order,
/// `J_abc <= x` exactly when `x[a][b] >= c`.
pub fn make_join_irreducible(idx: JoinIrreducibleIndex) -> MonotoneTriangle {
    let t = triangle_of_permutation(&idx.permutation());
    debug_assert!(t.is_valid());
    debug_assert_eq!(t.get(idx.a, idx.b), idx.c);
    t
}

/// Chains at a fixed `(a, b)` are decided by `c`; anything else falls back to
/// comparing the triangles.
pub fn compare_join_irreducibles(
    first: JoinIrreducibleIndex,
    second: JoinIrreducibleIndex,
) -> Result<Option<Ordering>> {
    if first.n != second.n {
        return Err(Error::OrderMismatch {
            left: first.n,
            right: second.n,
        });
    }
    if (first.a, first.b) == (second.a, second.b) {
        return Ok(Some(first.c.cmp(&second.c)));
    }
    first.triangle().compare(&second.triangle())
}

/// Every monotone triangle of order `n`, in lexicographic order of the
/// flattened entries.
pub fn enumerate_triangles(n: usize) -> Result<TriangleIter> {
    if n == 0 {
        return Err(Error::InvalidTriangle("order must be at least 1".into()));
    }
    if n > MAX_TRIANGLE_ENUMERATION_ORDER {
        return Err(Error::DegreeTooLarge {
            n,
            max: MAX_TRIANGLE_ENUMERATION_ORDER,
        });
    }
    let mut iter = TriangleIter {
        n,
        cells: cells(n),
        entries: vec![0; entry_count(n)],
        started: false,
        done: false,
    };
    iter.reset_from(0);
    Ok(iter)
}

/// Row and column (1-indexed) of each flattened slot.
fn cells(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|a| (1..=a).map(move |b| (a, b))).collect()
}

/// Row-by-row odometer over interlacing extensions. With each slot bounded
/// above by both the row above and the room left in its own row, every
/// partial fill has a completion, so the walk never hits a dead end.
pub struct TriangleIter {
    n: usize,
    cells: Vec<(usize, usize)>,
    entries: Vec<u16>,
    started: bool,
    done: bool,
}

impl TriangleIter {
    fn above(&self, a: usize, b: usize) -> u16 {
        self.entries[row_start(a) + b - 1]
    }

    fn lower(&self, k: usize) -> u16 {
        let (a, b) = self.cells[k];
        if b == 1 {
            return 1;
        }
        let left = self.entries[k - 1] + 1;
        if a == 1 {
            left
        } else {
            left.max(self.above(a - 1, b - 1))
        }
    }

    fn upper(&self, k: usize) -> u16 {
        let (a, b) = self.cells[k];
        // room for the a - b larger entries still to come in this row
        let room = (self.n - a + b) as u16;
        if b == a {
            room
        } else {
            room.min(self.above(a - 1, b))
        }
    }

    fn reset_from(&mut self, start: usize) {
        for k in start..self.entries.len() {
            self.entries[k] = self.lower(k);
        }
    }

    fn advance(&mut self) -> bool {
        for k in (0..self.entries.len()).rev() {
            if self.entries[k] < self.upper(k) {
                self.entries[k] += 1;
                self.reset_from(k + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for TriangleIter {
    type Item = MonotoneTriangle;

    fn next(&mut self) -> Option<MonotoneTriangle> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some(MonotoneTriangle {
            n: self.n,
            entries: self.entries.clone(),
        })
    }
}
