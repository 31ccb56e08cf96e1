//! Bounded weight modules after Mathieu: existence of cuspidal modules,
//! the `sp(2n)` bounded-multiplicity conditions, equivalence of coherent
//! families, fiber irreducibility and degrees.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, is_half_odd, parse_rational, QVector, Rational};
use crate::{CartanType, RootSystem, Series};

/// Whether a reductive algebra with these simple components has cuspidal
/// modules: every component must be of type A or C.
///
/// Components are first brought to a normal form so that isomorphic root
/// systems are not misjudged: `B₁ = C₁ = A₁`, `B₂ = C₂`, `D₂ = A₁ × A₁`,
/// `D₃ = A₃`.
pub fn cuspidal_exists(components: &[CartanType]) -> bool {
    components.iter().all(|&ty| {
        normalize(ty)
            .iter()
            .all(|c| matches!(c.series, Series::A | Series::C))
    })
}

fn normalize(ty: CartanType) -> Vec<CartanType> {
    match (ty.series, ty.rank) {
        (Series::B | Series::C, 1) => vec![CartanType::new(Series::A, 1)],
        (Series::B, 2) => vec![CartanType::new(Series::C, 2)],
        (Series::D, 2) => vec![CartanType::new(Series::A, 1); 2],
        (Series::D, 3) => vec![CartanType::new(Series::A, 3)],
        _ => vec![ty],
    }
}

/// A weight `x = Σ x_i ε_i` of `sp(2n)` in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpWeight(Vec<Rational>);

impl SpWeight {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::input("an sp(2n) weight needs at least one coordinate"));
        }
        Ok(SpWeight(entries))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

/// `L(x)` has bounded multiplicities iff every `x_i ∈ Z + ½` and
/// `x₁ > x₂ > … > x_{n−1} > |x_n|`.
pub fn sp_bounded(x: &SpWeight) -> bool {
    let e = x.entries();
    let n = e.len();
    let mut tail = e[..n - 1].to_vec();
    tail.push(e[n - 1].abs());
    e.iter().all(is_half_odd) && tail.windows(2).all(|w| w[0] > w[1])
}

/// Bounded `L(x)` and `L(x')` lie in the same coherent family iff they agree
/// except possibly for the sign of the last coordinate.
pub fn sp_equivalent(x: &SpWeight, y: &SpWeight) -> Result<bool> {
    for w in [x, y] {
        if !sp_bounded(w) {
            return Err(Error::input(format!(
                "weight ({}) does not have bounded multiplicities",
                w.to_strings().join(", ")
            )));
        }
    }
    if x.rank() != y.rank() {
        return Err(Error::input("weights have different ranks"));
    }
    let n = x.rank();
    let (a, b) = (x.entries(), y.entries());
    Ok(a[..n - 1] == b[..n - 1] && a[n - 1].abs() == b[n - 1].abs())
}

/// The fiber of a coherent family over `η` (coordinates taken modulo the
/// root lattice) is irreducible iff no `η_i` lies in `Z + ½`.
pub fn sp_fiber_irreducible(eta: &[Rational]) -> bool {
    !eta.iter().any(is_half_odd)
}

/// Degree of the coherent family containing the bounded module `L(x)`:
/// `2^{1−n} · dim L_{o(2n)}(x + ε)` with `ε = Σ ε_i`.
pub fn sp_degree(x: &SpWeight) -> Result<u128> {
    if !sp_bounded(x) {
        return Err(Error::input(format!(
            "weight ({}) does not have bounded multiplicities",
            x.to_strings().join(", ")
        )));
    }
    let n = x.rank();
    if n == 1 {
        // o(2) is abelian, so every irreducible module is one-dimensional.
        return Ok(1);
    }
    let d = RootSystem::build(Series::D, n)?;
    let shifted = QVector::new(x.entries().iter().map(|c| c + Rational::from_integer(1.into())).collect());
    let dim = d.weyl_dim(&shifted)?;
    let denom = 1u128 << (n - 1);
    if dim % denom != 0 {
        return Err(Error::internal(format!("dimension {dim} is not divisible by {denom}")));
    }
    Ok(dim / denom)
}

/// Degree for `sl(n+1)` in the non-regular-integral case:
/// `dim L_{gl(n)}(x)`, where `x` is given by its `n+1` ε-coordinates and
/// `gl(n)` acts on the first `n`.
///
/// Whether `L(x)` has bounded multiplicities is not checked; the caller
/// asserts it.
pub fn sl_degree(x: &QVector) -> Result<u128> {
    let dim = x.dim();
    if dim < 2 {
        return Err(Error::input("an sl(n+1) weight needs at least two ε-coordinates"));
    }
    let n = dim - 1;
    let full = RootSystem::build(Series::A, n)?;
    if full.is_regular_integral(x)? {
        return Err(Error::RegularIntegralCase);
    }
    if n == 1 {
        return Ok(1);
    }
    let companion = RootSystem::build(Series::A, n - 1)?;
    companion.weyl_dim(&QVector::new(x.coords()[..n].to_vec()))
}

/// A coherent family of `sp(2n)`-modules, recorded by a bounded
/// representative `x` and its degree. The companion algebra is `o(2n)`.
///
/// Equality is equivalence of representatives, so the stored degree does
/// not take part in comparisons.
#[derive(Clone, Debug)]
pub struct CoherentFamilyDescriptor {
    representative: SpWeight,
    degree: u128,
}

impl CoherentFamilyDescriptor {
    pub fn new(representative: SpWeight) -> Result<Self> {
        let degree = sp_degree(&representative)?;
        Ok(CoherentFamilyDescriptor { representative, degree })
    }

    pub fn representative(&self) -> &SpWeight {
        &self.representative
    }

    pub fn degree(&self) -> u128 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.representative.rank()
    }

    pub fn companion(&self) -> CartanType {
        CartanType::new(Series::D, self.rank())
    }
}

impl PartialEq for CoherentFamilyDescriptor {
    fn eq(&self, other: &Self) -> bool {
        sp_equivalent(&self.representative, &other.representative).unwrap_or(false)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorJson {
    bounded: bool,
    degree: u128,
    class_rep: Vec<String>,
    companion: CartanType,
}

impl Serialize for CoherentFamilyDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DescriptorJson {
            bounded: true,
            degree: self.degree,
            class_rep: self.representative.to_strings(),
            companion: self.companion(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoherentFamilyDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = DescriptorJson::deserialize(d)?;
        let entries = raw
            .class_rep
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let representative = SpWeight::new(entries).map_err(D::Error::custom)?;
        if !raw.bounded || !sp_bounded(&representative) {
            return Err(D::Error::custom("representative does not have bounded multiplicities"));
        }
        if raw.companion != CartanType::new(Series::D, representative.rank()) {
            return Err(D::Error::custom("companion must be D_n"));
        }
        Ok(CoherentFamilyDescriptor {
            representative,
            degree: raw.degree,
        })
    }
}

/// Checks that the descriptor and every sample carry the same degree and
/// that each stored degree agrees with a fresh computation.
pub fn degree_constancy_check(descriptor: &CoherentFamilyDescriptor, samples: &[CoherentFamilyDescriptor]) -> bool {
    let fresh = |c: &CoherentFamilyDescriptor| sp_degree(&c.representative).is_ok_and(|d| d == c.degree);
    fresh(descriptor) && samples.iter().all(|s| s.degree == descriptor.degree && fresh(s))
}
