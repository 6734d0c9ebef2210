//! Graphviz export of `B(x)` together with `x`.

use std::fmt::Write;

use crate::bigrassmannian::below_set;
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_ENUMERATION_DEGREE};
use crate::triangle::{triangle_of_permutation, MonotoneTriangle};

/// Nodes and `(lower, upper)` index pairs of a Hasse diagram.
pub type Hasse = (Vec<Permutation>, Vec<(usize, usize)>);

/// Node labels and covering edges `(lower, upper)` of the triangle order
/// restricted to `B(x) ∪ {x}`. The first node is `x`; the rest follow the
/// `(a, b, c)` order of `B(x)`.
pub fn below_set_hasse(x: &Permutation) -> Result<Hasse> {
    if x.degree() > MAX_ENUMERATION_DEGREE {
        return Err(Error::DegreeTooLarge {
            n: x.degree(),
            max: MAX_ENUMERATION_DEGREE,
        });
    }
    let mut nodes = vec![x.clone()];
    nodes.extend(below_set(x).permutations().filter(|w| *w != x).cloned());
    let triangles: Vec<MonotoneTriangle> = nodes.iter().map(triangle_of_permutation).collect();
    let m = nodes.len();
    let less = |u: usize, v: usize| u != v && triangles[u].leq(&triangles[v]).expect("same order");
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..m {
            if less(u, v) && !(0..m).any(|w| less(u, w) && less(w, v)) {
                edges.push((u, v));
            }
        }
    }
    Ok((nodes, edges))
}

pub fn below_set_dot(x: &Permutation) -> Result<String> {
    let (nodes, edges) = below_set_hasse(x)?;
    let mut out = String::new();
    writeln!(out, "digraph below {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (k, w) in nodes.iter().enumerate() {
        let shape = if k == 0 { ", shape=box" } else { "" };
        writeln!(out, "  \"{w}\" [label=\"{w}\"{shape}];").unwrap();
    }
    for (u, v) in edges {
        writeln!(out, "  \"{}\" -> \"{}\";", nodes[u], nodes[v]).unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
