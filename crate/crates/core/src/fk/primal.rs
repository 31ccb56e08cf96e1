//! Primality of reductive subalgebras `k = (root part) ⊕ (toral part)`.

use num_traits::Zero;

use super::check_symmetric_closed;
use crate::error::{Error, Result};
use crate::exact::linalg::{rank, rref, Matrix};
use crate::exact::QVector;
use crate::{RootSet, RootSystem};

/// Decides `C(k) = Z(k)` for `k = t ⊕ ⊕_{β ∈ k_roots} g^β`, where `t ⊆ h`
/// is spanned by `toral_part` (vectors of `h`, identified with `h*` through
/// the invariant form) and must contain the coroots of `k_roots`.
///
/// Root spaces separate under the bracket, so the centralizer splits as
/// `{h' ∈ h : β(h') = 0 ∀β ∈ k_roots}` plus the root spaces `g^γ` with
/// `γ(t) = 0` and `γ + β ∉ Δ` for all `β ∈ k_roots`. The centre is
/// `{h' ∈ t : β(h') = 0 ∀β ∈ k_roots}`, which always sits inside the
/// centralizer, so equality is a dimension count.
pub fn is_primal(rs: &RootSystem, k_roots: &RootSet, toral_part: &[QVector]) -> Result<bool> {
    check_symmetric_closed(rs, k_roots)?;
    for t in toral_part {
        rs.check_dim(t)?;
    }
    let cartan_rank = rs.rank();
    let toral = basis(toral_part);
    let with_simple = |extra: &[QVector]| -> usize {
        let rows: Matrix = rs.simple_roots().iter().chain(extra).map(|v| v.coords().to_vec()).collect();
        rank(&rows)
    };
    if with_simple(&toral) != cartan_rank {
        return Err(Error::input("toral part is not contained in the Cartan subalgebra"));
    }
    for b in k_roots.iter() {
        let mut rows = toral.clone();
        rows.push(rs.root(b).clone());
        if basis(&rows).len() != toral.len() {
            return Err(Error::input(format!(
                "toral part does not contain the coroot of {}",
                rs.root(b)
            )));
        }
    }

    let k_vectors = rs.vectors(k_roots);
    let k_rank = basis(&k_vectors).len();
    let torus_centralizer = cartan_rank - k_rank;
    let pairing: Matrix = k_vectors
        .iter()
        .map(|b| toral.iter().map(|t| rs.inner(b, t)).collect())
        .collect();
    let centre = toral.len() - if pairing.is_empty() { 0 } else { rank(&pairing) };

    let extra_root_spaces = (0..rs.num_roots())
        .filter(|&g| toral.iter().all(|t| rs.inner(rs.root(g), t).is_zero()))
        .filter(|&g| k_roots.iter().all(|b| rs.sum(g, b).is_none()))
        .count();
    Ok(extra_root_spaces == 0 && torus_centralizer == centre)
}

fn basis(vectors: &[QVector]) -> Vec<QVector> {
    let mut m: Matrix = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let pivots = rref(&mut m);
    m.truncate(pivots.len());
    m.into_iter().map(QVector::new).collect::<Vec<_>>()
}
