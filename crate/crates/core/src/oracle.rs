//! Brute-force ground truth for validation.
//!
//! Bruhat order is decided straight from its definition: `w <= y` when `w`
//! is reachable from `y` by repeatedly swapping the two positions of an
//! inversion. Nothing here touches the triangle machinery or the closed
//! forms it is used to check.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::{enumerate_symmetric_group, Permutation};

pub const MAX_IDEAL_DEGREE: usize = 8;
pub const MAX_ORACLE_BETA_DEGREE: usize = 7;

/// Everything weakly below `top` in Bruhat order.
#[derive(Debug, Clone)]
pub struct BruhatIdeal {
    top: Permutation,
    members: HashSet<Permutation>,
}

impl BruhatIdeal {
    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.members.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &Permutation> {
        self.members.iter()
    }

    /// Members in lexicographic order.
    pub fn sorted(&self) -> Vec<Permutation> {
        let mut out: Vec<_> = self.members.iter().cloned().collect();
        out.sort();
        out
    }
}

fn check_degree(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::DegreeTooLarge { n, max });
    }
    Ok(())
}

/// Closure of `{y}` under reductions, breadth first.
pub fn lower_ideal(y: &Permutation) -> Result<BruhatIdeal> {
    check_degree(y.degree(), MAX_IDEAL_DEGREE)?;
    let mut members = HashSet::new();
    members.insert(y.clone());
    let mut queue = VecDeque::from([y.clone()]);
    while let Some(v) = queue.pop_front() {
        for (_, w) in v.reductions() {
            if members.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(BruhatIdeal {
        top: y.clone(),
        members,
    })
}

/// Searches down from `y` for `w`, stopping as soon as it is found.
pub fn bruhat_leq_bfs(w: &Permutation, y: &Permutation) -> Result<bool> {
    if w.degree() != y.degree() {
        return Err(Error::OrderMismatch {
            left: w.degree(),
            right: y.degree(),
        });
    }
    check_degree(y.degree(), MAX_IDEAL_DEGREE)?;
    let target_len = w.length();
    if target_len > y.length() {
        return Ok(false);
    }
    if w == y {
        return Ok(true);
    }
    let mut seen = HashSet::from([y.clone()]);
    let mut queue = VecDeque::from([y.clone()]);
    while let Some(v) = queue.pop_front() {
        for (_, u) in v.reductions() {
            if &u == w {
                return Ok(true);
            }
            // lengths only drop along reductions
            if u.length() > target_len && seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    Ok(false)
}

/// `beta(x)` and `B(x)` by filtering all of `S_n`.
pub fn oracle_beta(x: &Permutation) -> Result<(u64, Vec<Permutation>)> {
    check_degree(x.degree(), MAX_ORACLE_BETA_DEGREE)?;
    let ideal = lower_ideal(x)?;
    let below: Vec<Permutation> = enumerate_symmetric_group(x.degree())?
        .filter(|w| w.is_bigrassmannian() && ideal.contains(w))
        .collect();
    Ok((below.len() as u64, below))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ideals() {
        let e = Permutation::identity(4).unwrap();
        assert_eq!(lower_ideal(&e).unwrap().sorted(), vec![e.clone()]);
        assert_eq!(lower_ideal(&p("321")).unwrap().len(), 6);
        assert_eq!(
            lower_ideal(&p("21")).unwrap().sorted(),
            vec![p("12"), p("21")]
        );
        let ideal = lower_ideal(&p("42513")).unwrap();
        assert!(ideal.contains(ideal.top()));
        assert!(ideal.contains(&Permutation::identity(5).unwrap()));
        assert!(matches!(
            lower_ideal(&Permutation::identity(9).unwrap()),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn pairwise_queries() {
        let x = p("42513");
        assert!(bruhat_leq_bfs(&x, &x).unwrap());
        assert!(bruhat_leq_bfs(&Permutation::identity(5).unwrap(), &x).unwrap());
        assert!(bruhat_leq_bfs(&p("24513"), &x).unwrap());
        assert!(!bruhat_leq_bfs(&x, &p("24513")).unwrap());
        assert!(!bruhat_leq_bfs(&p("213"), &p("132")).unwrap());
        assert!(!bruhat_leq_bfs(&p("132"), &p("213")).unwrap());
        assert!(matches!(
            bruhat_leq_bfs(&p("21"), &p("321")),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(oracle_beta(&p("42513")).unwrap().0, 13);
        assert_eq!(
            oracle_beta(&Permutation::identity(4).unwrap()).unwrap().0,
            0
        );
        assert_eq!(oracle_beta(&p("4321")).unwrap().0, 10);
        assert_eq!(oracle_beta(&p("321")).unwrap().0, 4);
        assert_eq!(oracle_beta(&p("21")).unwrap().1, vec![p("21")]);
        assert!(oracle_beta(&Permutation::identity(8).unwrap()).is_err());
    }

    #[test]
    fn ideal_agrees_with_pairwise_search() {
        let all: Vec<_> = enumerate_symmetric_group(4).unwrap().collect();
        for y in &all {
            let ideal = lower_ideal(y).unwrap();
            for w in &all {
                assert_eq!(
                    ideal.contains(w),
                    bruhat_leq_bfs(w, y).unwrap(),
                    "{w} vs {y}"
                );
            }
        }
    }
}
