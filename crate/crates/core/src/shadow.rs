//! Shadow decompositions `Δ = Δ^I ∪ Δ^F ∪ Δ^+ ∪ Δ^−` attached to a root
//! subalgebra, through the cone generated by the roots it omits.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cone_member, QVector};
use crate::{RootSet, RootSystem};

/// A closed set of roots; together with the Cartan subalgebra it spans a
/// subalgebra of `g`.
#[derive(Clone, Debug)]
pub struct RootSubalgebra<'a> {
    rs: &'a RootSystem,
    roots: RootSet,
}

impl<'a> RootSubalgebra<'a> {
    pub fn new(rs: &'a RootSystem, roots: RootSet) -> Result<Self> {
        rs.check_set(&roots)?;
        if !rs.is_closed(&roots) {
            return Err(Error::input(format!("root set {roots:?} is not closed")));
        }
        Ok(RootSubalgebra { rs, roots })
    }

    pub fn from_indices(rs: &'a RootSystem, indices: &[usize]) -> Result<Self> {
        Self::new(rs, indices.iter().copied().collect())
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn roots(&self) -> &RootSet {
        &self.roots
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowDecomposition {
    #[serde(rename = "I")]
    pub infinite: RootSet,
    #[serde(rename = "F")]
    pub finite: RootSet,
    pub plus: RootSet,
    pub minus: RootSet,
    /// `Δ ∖ Δ(fk)`, the generators of `Γ`.
    pub gamma_generators: RootSet,
}

/// Classifies each root `α` by whether `α` and `−α` lie in the cone spanned
/// by the roots outside `fk`.
pub fn shadow(fk: &RootSubalgebra<'_>) -> Result<ShadowDecomposition> {
    let rs = fk.rs;
    let gamma = rs.all_roots_set().difference(&fk.roots);
    let gens = rs.vectors(&gamma);
    let mut in_cone = Vec::with_capacity(rs.num_roots());
    for r in rs.roots() {
        in_cone.push(cone_member(r, &gens)?.is_some());
    }
    let mut sd = ShadowDecomposition {
        infinite: RootSet::new(),
        finite: RootSet::new(),
        plus: RootSet::new(),
        minus: RootSet::new(),
        gamma_generators: gamma,
    };
    for i in 0..rs.num_roots() {
        let part = match (in_cone[i], in_cone[rs.negate(i)]) {
            (true, true) => &mut sd.infinite,
            (false, false) => &mut sd.finite,
            (false, true) => &mut sd.plus,
            (true, false) => &mut sd.minus,
        };
        part.insert(i);
    }
    Ok(sd)
}

/// Roots of `p_M = (g^I + g^F) ⊕ g^+`.
pub fn parabolic_pm(sd: &ShadowDecomposition) -> RootSet {
    sd.infinite.union(&sd.finite).union(&sd.plus)
}

/// Roots of `g^F ⊕ g^+`, the Fernando-Kac subalgebra of a weight module of
/// finite type with this shadow.
pub fn fernando_fk(sd: &ShadowDecomposition) -> RootSet {
    sd.finite.union(&sd.plus)
}

/// `{ b + Σ cᵢ γᵢ : b ∈ base_points, cᵢ ∈ Z₊, Σ cᵢ ≤ radius }` over the
/// generators of `Γ`.
pub fn support_shape(
    rs: &RootSystem,
    sd: &ShadowDecomposition,
    base_points: &[QVector],
    radius: usize,
) -> Result<BTreeSet<QVector>> {
    for b in base_points {
        rs.check_dim(b)?;
    }
    let gens = rs.vectors(&sd.gamma_generators);
    let mut out: BTreeSet<QVector> = base_points.iter().cloned().collect();
    let mut layer = out.clone();
    for _ in 0..radius {
        let next: BTreeSet<QVector> = layer
            .iter()
            .flat_map(|p| gens.iter().map(move |g| p + g))
            .filter(|p| !out.contains(p))
            .collect();
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::Series;

    fn set(ix: &[usize]) -> RootSet {
        ix.iter().copied().collect()
    }

    fn check_partition(rs: &RootSystem, sd: &ShadowDecomposition) {
        let parts = [&sd.infinite, &sd.finite, &sd.plus, &sd.minus];
        let total: usize = parts.iter().map(|p| p.len()).sum();
        assert_eq!(total, rs.num_roots());
        let union = parts.iter().fold(RootSet::new(), |acc, p| acc.union(p));
        assert_eq!(union, rs.all_roots_set());
        assert_eq!(rs.negate_set(&sd.infinite), sd.infinite);
        assert_eq!(rs.negate_set(&sd.finite), sd.finite);
        assert_eq!(rs.negate_set(&sd.plus), sd.minus);
    }

    #[test]
    fn full_algebra_is_all_finite() {
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        let fk = RootSubalgebra::new(&a2, a2.all_roots_set()).unwrap();
        let sd = shadow(&fk).unwrap();
        assert_eq!(sd.finite, a2.all_roots_set());
        assert!(sd.infinite.is_empty() && sd.plus.is_empty() && sd.minus.is_empty());
        assert_eq!(parabolic_pm(&sd), a2.all_roots_set());
        assert_eq!(fernando_fk(&sd), a2.all_roots_set());
    }

    #[test]
    fn a1_borel_and_cartan() {
        let a1 = RootSystem::build(Series::A, 1).unwrap();
        let borel = shadow(&RootSubalgebra::from_indices(&a1, &[0]).unwrap()).unwrap();
        assert_eq!(borel.plus, set(&[0]));
        assert_eq!(borel.minus, set(&[1]));
        assert!(borel.infinite.is_empty() && borel.finite.is_empty());
        assert_eq!(parabolic_pm(&borel), set(&[0]));
        assert_eq!(fernando_fk(&borel), set(&[0]));

        let cartan = shadow(&RootSubalgebra::from_indices(&a1, &[]).unwrap()).unwrap();
        assert_eq!(cartan.infinite, set(&[0, 1]));
        assert!(fernando_fk(&cartan).is_empty());
        check_partition(&a1, &borel);
        check_partition(&a1, &cartan);
    }

    #[test]
    fn a2_borel() {
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        let sd = shadow(&RootSubalgebra::from_indices(&a2, &[0, 1, 2]).unwrap()).unwrap();
        assert_eq!(sd.plus, set(&[0, 1, 2]));
        assert_eq!(parabolic_pm(&sd), set(&[0, 1, 2]));
    }

    #[test]
    fn rejects_non_closed() {
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        assert!(matches!(RootSubalgebra::from_indices(&a2, &[0, 1]), Err(Error::Input(_))));
        assert!(RootSubalgebra::from_indices(&a2, &[7]).is_err());
    }

    #[test]
    fn support_shapes() {
        let a1 = RootSystem::build(Series::A, 1).unwrap();
        let nu = QVector::new(vec![rat(1, 3), rat(-1, 5)]);
        let alpha = a1.root(0).clone();

        let full = shadow(&RootSubalgebra::new(&a1, a1.all_roots_set()).unwrap()).unwrap();
        let zero = QVector::zeros(2);
        assert_eq!(
            support_shape(&a1, &full, std::slice::from_ref(&zero), 3).unwrap(),
            [zero].into_iter().collect()
        );

        let cartan = shadow(&RootSubalgebra::from_indices(&a1, &[]).unwrap()).unwrap();
        let got = support_shape(&a1, &cartan, std::slice::from_ref(&nu), 2).unwrap();
        let two = alpha.scale(&crate::exact::int(2));
        let expected: BTreeSet<QVector> =
            [nu.clone(), &nu + &alpha, &nu - &alpha, &nu + &two, &nu - &two].into_iter().collect();
        assert_eq!(got, expected);

        let borel = shadow(&RootSubalgebra::from_indices(&a1, &[0]).unwrap()).unwrap();
        let got = support_shape(&a1, &borel, std::slice::from_ref(&nu), 1).unwrap();
        assert_eq!(got, [nu.clone(), &nu - &alpha].into_iter().collect());
    }

    #[test]
    fn support_shape_is_monotone_in_radius() {
        let a2 = RootSystem::build(Series::A, 2).unwrap();
        let sd = shadow(&RootSubalgebra::from_indices(&a2, &[0]).unwrap()).unwrap();
        let base = [QVector::new(vec![rat(1, 2), rat(0, 1), rat(-1, 3)])];
        let mut prev = support_shape(&a2, &sd, &base, 0).unwrap();
        for r in 1..4 {
            let cur = support_shape(&a2, &sd, &base, r).unwrap();
            assert!(prev.is_subset(&cur));
            prev = cur;
        }
    }

    #[test]
    fn every_closed_subset_gives_a_parabolic_pm() {
        for (s, n) in [(Series::A, 2), (Series::C, 2)] {
            let rs = RootSystem::build(s, n).unwrap();
            for fk in rs.closed_subsets() {
                let sd = shadow(&RootSubalgebra::new(&rs, fk).unwrap()).unwrap();
                check_partition(&rs, &sd);
                assert!(rs.is_parabolic(&parabolic_pm(&sd)));
            }
        }
    }
}
