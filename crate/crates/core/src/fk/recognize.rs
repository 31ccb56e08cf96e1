//! Cartan type of a symmetric closed subset of roots.

use std::cmp::Ordering;

use super::{check_symmetric_closed, subsystem_simple_roots};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::{CartanType, RootSet, RootSystem, Series};

/// Simple components of the subsystem `set`, sorted.
///
/// Rank-two double bonds are reported as `C₂`, and diagrams that coincide
/// in low rank come out under their `A` name (`B₁ = C₁ = A₁`, `D₃ = A₃`),
/// since recognition goes by diagram shape.
pub fn recognize_type(rs: &RootSystem, set: &RootSet) -> Result<Vec<CartanType>> {
    check_symmetric_closed(rs, set)?;
    let simple: Vec<usize> = subsystem_simple_roots(rs, set).to_vec();
    let r = simple.len();
    let pair = |i: usize, j: usize| -> i64 {
        rs.coroot_pairing(rs.root(simple[j]), rs.root(simple[i]))
            .to_integer()
            .try_into()
            .unwrap_or(0)
    };
    let bond = |i: usize, j: usize| pair(i, j) * pair(j, i);

    let mut component = vec![usize::MAX; r];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..r {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut nodes = vec![start];
        component[start] = id;
        let mut k = 0;
        while k < nodes.len() {
            let u = nodes[k];
            for v in 0..r {
                if component[v] == usize::MAX && bond(u, v) != 0 {
                    component[v] = id;
                    nodes.push(v);
                }
            }
            k += 1;
        }
        components.push(nodes);
    }

    let length = |i: usize| rs.inner(rs.root(simple[i]), rs.root(simple[i]));
    let mut types = components
        .iter()
        .map(|nodes| classify(nodes, &bond, &length))
        .collect::<Result<Vec<_>>>()?;
    types.sort();
    Ok(types)
}

fn classify(
    nodes: &[usize],
    bond: &impl Fn(usize, usize) -> i64,
    length: &impl Fn(usize) -> Rational,
) -> Result<CartanType> {
    let r = nodes.len();
    let neighbours = |u: usize| -> Vec<usize> {
        nodes.iter().copied().filter(|&v| v != u && bond(u, v) != 0).collect()
    };
    let edges: Vec<(usize, usize, i64)> = nodes
        .iter()
        .flat_map(|&u| nodes.iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| u < v && bond(u, v) != 0)
        .map(|(u, v)| (u, v, bond(u, v)))
        .collect();
    let unknown = || Error::internal(format!("unrecognized Dynkin diagram on {r} nodes"));
    if edges.len() != r - 1 {
        return Err(unknown());
    }
    if r == 1 {
        return Ok(CartanType::new(Series::A, 1));
    }
    let max_bond = edges.iter().map(|e| e.2).max().unwrap_or(0);
    match max_bond {
        3 if r == 2 => Ok(CartanType::new(Series::G, 2)),
        2 => {
            if r == 2 {
                return Ok(CartanType::new(Series::C, 2));
            }
            let &(u, v, _) = edges.iter().find(|e| e.2 == 2).ok_or_else(unknown)?;
            let (leaf, inner) = match (neighbours(u).len(), neighbours(v).len()) {
                (1, _) => (u, v),
                (_, 1) => (v, u),
                _ if r == 4 => return Ok(CartanType::new(Series::F, 4)),
                _ => return Err(unknown()),
            };
            match length(leaf).cmp(&length(inner)) {
                Ordering::Less => Ok(CartanType::new(Series::B, r)),
                Ordering::Greater => Ok(CartanType::new(Series::C, r)),
                Ordering::Equal => Err(unknown()),
            }
        }
        1 => {
            let Some(&branch) = nodes.iter().find(|&&u| neighbours(u).len() >= 3) else {
                return Ok(CartanType::new(Series::A, r));
            };
            if neighbours(branch).len() != 3 {
                return Err(unknown());
            }
            let mut legs: Vec<usize> = neighbours(branch)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> = neighbours(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => return len,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return usize::MAX,
                        }
                    }
                })
                .collect();
            legs.sort();
            match legs.as_slice() {
                [1, 1, _] => Ok(CartanType::new(Series::D, r)),
                [1, 2, 2] => Ok(CartanType::new(Series::E, 6)),
                [1, 2, 3] => Ok(CartanType::new(Series::E, 7)),
                [1, 2, 4] => Ok(CartanType::new(Series::E, 8)),
                _ => Err(unknown()),
            }
        }
        _ => Err(unknown()),
    }
}
