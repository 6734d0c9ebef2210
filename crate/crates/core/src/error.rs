use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a bijection on 1..{n}: {values:?}")]
    NotABijection { n: usize, values: Vec<usize> },

    #[error("a permutation needs at least one value")]
    EmptyPermutation,

    #[error("degree {n} exceeds the limit of {max} for this operation")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("positions ({i}, {j}) out of range for degree {n}; need 1 <= i < j <= n")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("monotone triangle does not come from a permutation (row {row})")]
    NotAPermutation { row: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid join-irreducible index (a={a}, b={b}, c={c}) for order {n}; need 1 <= b <= a <= n-1 and b+1 <= c <= n-a+b")]
    InvalidIndex {
        n: usize,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),

    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
