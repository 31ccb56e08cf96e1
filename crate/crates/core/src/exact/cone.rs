//! Membership in, and intersection of, finitely generated cones over Q.
//!
//! Fernando-Kac finite-type conditions are phrased with Z₊-monoids, but
//! every question asked here is whether two monoids `⟨A⟩_{Z₊}`, `⟨B⟩_{Z₊}`
//! share a nonzero element. That happens exactly when the R₊-cones share a
//! nonzero point: a rational common point `Σ aᵢ Aᵢ = Σ bⱼ Bⱼ` with
//! `aᵢ, bⱼ ∈ Q₊` becomes an integral one after multiplying both sides by a
//! common denominator of all coefficients, and the cone spanned by rational
//! generators meets any nonempty rational polyhedron in a rational point.

use num_traits::Zero;

use super::lp::{lp_feasible, Feasibility};
use super::{int, QVector, Rational};
use crate::error::{Error, Result};

/// A nonzero point in two cones at once, with its coefficients on each
/// generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeWitness {
    pub coefficients_a: Vec<Rational>,
    pub coefficients_b: Vec<Rational>,
    pub point: QVector,
}

impl ConeWitness {
    /// Re-evaluates both combinations and checks they agree with `point`,
    /// that all coefficients are nonnegative and that `point` is nonzero.
    pub fn verify(&self, gens_a: &[QVector], gens_b: &[QVector]) -> bool {
        let dim = self.point.dim();
        let nonneg = self
            .coefficients_a
            .iter()
            .chain(&self.coefficients_b)
            .all(|c| *c >= Rational::zero());
        nonneg
            && self.coefficients_a.len() == gens_a.len()
            && self.coefficients_b.len() == gens_b.len()
            && !self.point.is_zero()
            && QVector::combination(dim, &self.coefficients_a, gens_a) == self.point
            && QVector::combination(dim, &self.coefficients_b, gens_b) == self.point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeIntersection {
    /// The cones meet only at the origin.
    Trivial,
    Meets(ConeWitness),
}

impl ConeIntersection {
    pub fn is_trivial(&self) -> bool {
        matches!(self, ConeIntersection::Trivial)
    }

    pub fn witness(&self) -> Option<&ConeWitness> {
        match self {
            ConeIntersection::Trivial => None,
            ConeIntersection::Meets(w) => Some(w),
        }
    }
}

fn common_dim<'a>(vectors: impl IntoIterator<Item = &'a QVector>) -> Result<Option<usize>> {
    let mut dim = None;
    for v in vectors {
        match dim {
            None => dim = Some(v.dim()),
            Some(d) if d != v.dim() => {
                return Err(Error::input(format!("dimension mismatch: {d} vs {}", v.dim())))
            }
            Some(_) => {}
        }
    }
    Ok(dim)
}

/// Returns nonnegative coefficients `c` with `Σ cᵢ generators[i] = v`, or
/// `None` when `v` is not in the cone. The zero vector is always a member.
pub fn cone_member(v: &QVector, generators: &[QVector]) -> Result<Option<Vec<Rational>>> {
    common_dim(std::iter::once(v).chain(generators))?;
    let rows: Vec<(QVector, Rational)> = (0..v.dim())
        .map(|k| {
            let row = QVector::new(generators.iter().map(|g| g[k].clone()).collect());
            (row, v[k].clone())
        })
        .collect();
    Ok(match lp_feasible(&rows, generators.len())? {
        Feasibility::Feasible(c) => Some(c),
        Feasibility::Infeasible => None,
    })
}

/// Decides whether the cones spanned by `gens_a` and `gens_b` meet only at
/// the origin.
///
/// A nonzero common point has some nonzero coordinate; rescaling it, some
/// coordinate equals ±1. So the intersection is nontrivial iff one of the
/// `2·dim` systems `Σ aᵢ Aᵢ − Σ bⱼ Bⱼ = 0, (Σ aᵢ Aᵢ)_k = ±1` is feasible.
/// Normalising a single coordinate, rather than `Σ aᵢ = 1`, keeps the test
/// sound when a cone contains a line. Coordinates are tried in order, `+1`
/// before `−1`, so the witness is deterministic.
pub fn cones_intersect_trivially(gens_a: &[QVector], gens_b: &[QVector]) -> Result<ConeIntersection> {
    let Some(dim) = common_dim(gens_a.iter().chain(gens_b))? else {
        return Ok(ConeIntersection::Trivial);
    };
    if gens_a.is_empty() || gens_b.is_empty() {
        return Ok(ConeIntersection::Trivial);
    }
    let (na, nb) = (gens_a.len(), gens_b.len());
    let mut rows: Vec<(QVector, Rational)> = (0..dim)
        .map(|k| {
            let mut row: Vec<Rational> = gens_a.iter().map(|g| g[k].clone()).collect();
            row.extend(gens_b.iter().map(|g| -&g[k]));
            (QVector::new(row), Rational::zero())
        })
        .collect();
    for k in 0..dim {
        for sign in [1, -1] {
            let mut row: Vec<Rational> = gens_a.iter().map(|g| g[k].clone()).collect();
            row.extend(std::iter::repeat_n(Rational::zero(), nb));
            rows.push((QVector::new(row), int(sign)));
            let verdict = lp_feasible(&rows, na + nb)?;
            rows.pop();
            if let Feasibility::Feasible(x) = verdict {
                let coefficients_a = x[..na].to_vec();
                let coefficients_b = x[na..].to_vec();
                let point = QVector::combination(dim, &coefficients_a, gens_a);
                debug_assert!(!point.is_zero() && point[k] == int(sign));
                return Ok(ConeIntersection::Meets(ConeWitness {
                    coefficients_a,
                    coefficients_b,
                    point,
                }));
            }
        }
    }
    Ok(ConeIntersection::Trivial)
}
