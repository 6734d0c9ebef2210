#![allow(dead_code)]

use bruhat_beta::MonotoneTriangle;

/// All `k`-subsets of `1..=n`, ascending, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every monotone triangle of order `n`, found by taking each combination of
/// strictly increasing rows and keeping those that interlace. Shares no code
/// with the library's row-extension generator.
pub fn triangles_by_filter(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fn go(a: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if a == n {
            if interlaces_all(rows) {
                out.push(rows.clone());
            }
            return;
        }
        for row in subsets(n, a) {
            rows.push(row);
            go(a + 1, n, rows, out);
            rows.pop();
        }
    }
    go(1, n, &mut rows, &mut out);
    out
}

fn interlaces_all(rows: &[Vec<usize>]) -> bool {
    rows.windows(2).all(|pair| {
        let (upper, lower) = (&pair[0], &pair[1]);
        (0..upper.len()).all(|b| lower[b] <= upper[b] && upper[b] <= lower[b + 1])
    })
}

pub fn as_rows(t: &MonotoneTriangle) -> Vec<Vec<usize>> {
    t.rows()
        .map(|r| r.iter().map(|&v| usize::from(v)).collect())
        .collect()
}

/// Entrywise minimum of a nonempty list of triangles, computed on raw rows.
pub fn entrywise_min(list: &[Vec<Vec<usize>>]) -> Vec<Vec<usize>> {
    let mut acc = list[0].clone();
    for t in &list[1..] {
        for (ra, rt) in acc.iter_mut().zip(t) {
            for (x, &y) in ra.iter_mut().zip(rt) {
                *x = (*x).min(y);
            }
        }
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}
