//! Finite reduced root systems in exact coordinates.
//!
//! Classical types use the usual ε-coordinates (`A_n` sits in an
//! `(n+1)`-dimensional space with sum-zero roots, `C_n` has simple roots
//! `ε₁−ε₂, …, ε_{n−1}−ε_n, 2ε_n`). Exceptional types are realized in the
//! basis of simple roots with the symmetrized Cartan matrix as inner
//! product. In both cases the full root set is the closure of the simple
//! roots under simple reflections.
//!
//! Roots carry a canonical index: positive roots sorted by height and then
//! by simple-root coordinates in descending lexicographic order, followed by
//! their negatives in the same order, so `-roots[i] == roots[i ± |Δ⁺|]`.

mod realize;
mod weights;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{int, QVector, Rational};
use crate::RootSet;

/// Rank bound applied by [`RootSystem::build`].
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::input(format!("unknown series {s:?}"))),
        }
    }
}

/// A Cartan type such as `C2` or `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Self {
        CartanType { series, rank }
    }

    /// Whether `(series, rank)` names a realization this crate can build.
    ///
    /// Small ranks with coincidences (`B₁`, `C₁`, `D₂`, `D₃`) are accepted
    /// because their ε-realizations are well defined; only the exceptional
    /// series are pinned to their ranks.
    pub fn validate(&self) -> Result<()> {
        let ok = match self.series {
            Series::A | Series::B | Series::C => self.rank >= 1,
            Series::D => self.rank >= 2,
            Series::E => (6..=8).contains(&self.rank),
            Series::F => self.rank == 4,
            Series::G => self.rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::input(format!("{self} is not a valid root system type")))
        }
    }

    /// True for the simple (indecomposable) types; `D₂ = A₁ × A₁` is not.
    pub fn is_simple(&self) -> bool {
        !(self.series == Series::D && self.rank == 2)
    }

    /// `|Δ|` from the classification.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CartanType,
    gram: Matrix,
    simple: Vec<QVector>,
    roots: Vec<QVector>,
    coeffs: Vec<Vec<i64>>,
    index: HashMap<QVector, usize>,
    num_positive: usize,
    cartan: Vec<Vec<i64>>,
    fundamental: Vec<QVector>,
    rho: QVector,
    sums: Vec<Vec<Option<usize>>>,
}

impl RootSystem {
    pub fn build(series: Series, rank: usize) -> Result<Self> {
        Self::build_with_max_rank(series, rank, DEFAULT_MAX_RANK)
    }

    pub fn build_with_max_rank(series: Series, rank: usize, max_rank: usize) -> Result<Self> {
        let ty = CartanType::new(series, rank);
        ty.validate()?;
        if rank > max_rank {
            return Err(Error::input(format!("rank {rank} exceeds the configured bound {max_rank}")));
        }
        let (simple, gram) = realize::simple_roots(ty);
        Self::from_simple_roots(ty, simple, gram)
    }

    fn from_simple_roots(ty: CartanType, simple: Vec<QVector>, gram: Matrix) -> Result<Self> {
        let rank = simple.len();
        let form = |u: &QVector, v: &QVector| bilinear(&gram, u, v);
        let pair = |v: &QVector, a: &QVector| int(2) * form(v, a) / form(a, a);

        // Reflection closure, tracking simple-root coordinates alongside.
        let mut found: HashMap<QVector, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for (i, s) in simple.iter().enumerate() {
            let mut c = vec![0; rank];
            c[i] = 1;
            found.insert(s.clone(), c.clone());
            queue.push_back((s.clone(), c));
        }
        while let Some((v, c)) = queue.pop_front() {
            for (i, a) in simple.iter().enumerate() {
                let p = pair(&v, a);
                let p = p
                    .to_integer()
                    .to_i64()
                    .filter(|_| p.is_integer())
                    .ok_or_else(|| Error::internal("non-integral coroot pairing"))?;
                if p == 0 {
                    continue;
                }
                let w = v.add_scaled(&int(-p), a);
                if !found.contains_key(&w) {
                    let mut wc = c.clone();
                    wc[i] -= p;
                    found.insert(w.clone(), wc.clone());
                    queue.push_back((w, wc));
                }
            }
        }

        let mut positive: Vec<(QVector, Vec<i64>)> = found
            .into_iter()
            .filter(|(_, c)| c.iter().all(|&x| x >= 0))
            .collect();
        positive.sort_by(|(_, a), (_, b)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let num_positive = positive.len();
        let mut roots = Vec::with_capacity(2 * num_positive);
        let mut coeffs = Vec::with_capacity(2 * num_positive);
        for (v, c) in &positive {
            roots.push(v.clone());
            coeffs.push(c.clone());
        }
        for (v, c) in &positive {
            roots.push(-v);
            coeffs.push(c.iter().map(|x| -x).collect());
        }
        if roots.len() != ty.root_count() {
            return Err(Error::internal(format!(
                "{ty}: generated {} roots, expected {}",
                roots.len(),
                ty.root_count()
            )));
        }
        let index: HashMap<QVector, usize> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        // Sums are looked up through integer simple-root coordinates.
        let by_coeffs: HashMap<&[i64], usize> = coeffs.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let mut scratch = vec![0i64; rank];
        let sums = coeffs
            .iter()
            .map(|a| {
                coeffs
                    .iter()
                    .map(|b| {
                        for (s, (x, y)) in scratch.iter_mut().zip(a.iter().zip(b)) {
                            *s = x + y;
                        }
                        by_coeffs.get(scratch.as_slice()).copied()
                    })
                    .collect()
            })
            .collect();

        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|ai| {
                simple
                    .iter()
                    .map(|aj| pair(ai, aj).to_integer().to_i64().unwrap_or(0))
                    .collect()
            })
            .collect();
        // ⟨ω_i, α_j^∨⟩ = δ_ij with ω_i = Σ_k M_ik α_k forces M = C⁻¹.
        let cartan_q: Matrix = cartan.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let inv = linalg::inverse(&cartan_q).ok_or_else(|| Error::internal("singular Cartan matrix"))?;
        let dim = simple[0].dim();
        let fundamental = inv.iter().map(|row| QVector::combination(dim, row, &simple)).collect();
        let rho = roots[..num_positive]
            .iter()
            .fold(QVector::zeros(dim), |acc, r| &acc + r)
            .scale(&Rational::new(1.into(), 2.into()));

        Ok(RootSystem {
            ty,
            gram,
            simple,
            roots,
            coeffs,
            index,
            num_positive,
            cartan,
            fundamental,
            rho,
            sums,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn series(&self) -> Series {
        self.ty.series
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.len()
    }

    /// `dim g = |Δ| + rank`.
    pub fn dim_algebra(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn roots(&self) -> &[QVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &QVector {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[QVector] {
        &self.roots[..self.num_positive]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.num_positive
    }

    /// Index of `−roots[i]`.
    pub fn negate(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    pub fn index_of(&self, v: &QVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Coordinates of `roots[i]` on the simple roots.
    pub fn simple_coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn simple_roots(&self) -> &[QVector] {
        &self.simple
    }

    /// Canonical index of the `k`-th simple root.
    pub fn simple_index(&self, k: usize) -> usize {
        self.index[&self.simple[k]]
    }

    /// `cartan_matrix()[i][j] = ⟨α_j, α_i^∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[QVector] {
        &self.fundamental
    }

    pub fn rho(&self) -> &QVector {
        &self.rho
    }

    /// The invariant form on the ambient space.
    pub fn inner(&self, u: &QVector, v: &QVector) -> Rational {
        bilinear(&self.gram, u, v)
    }

    /// `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)`.
    pub fn coroot_pairing(&self, lambda: &QVector, alpha: &QVector) -> Rational {
        int(2) * self.inner(lambda, alpha) / self.inner(alpha, alpha)
    }

    /// Index of `roots[i] + roots[j]` when that sum is a root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i][j]
    }

    pub fn height_of(&self, i: usize) -> i64 {
        self.coeffs[i].iter().sum()
    }

    /// Height of a root given by its coordinates.
    pub fn height(&self, alpha: &QVector) -> Result<i64> {
        self.index_of(alpha)
            .map(|i| self.height_of(i))
            .ok_or_else(|| Error::input(format!("{alpha} is not a root of {}", self.ty)))
    }

    /// Number of positive roots of each height.
    pub fn height_distribution(&self) -> BTreeMap<i64, usize> {
        let mut dist = BTreeMap::new();
        for i in 0..self.num_positive {
            *dist.entry(self.height_of(i)).or_insert(0) += 1;
        }
        dist
    }

    pub fn check_dim(&self, v: &QVector) -> Result<()> {
        if v.dim() == self.ambient_dim() {
            Ok(())
        } else {
            Err(Error::input(format!(
                "weight has {} coordinates, {} expects {}",
                v.dim(),
                self.ty,
                self.ambient_dim()
            )))
        }
    }

    pub fn check_set(&self, set: &RootSet) -> Result<()> {
        match set.iter().find(|&i| i >= self.num_roots()) {
            Some(i) => Err(Error::input(format!(
                "root index {i} out of range for {} ({} roots)",
                self.ty,
                self.num_roots()
            ))),
            None => Ok(()),
        }
    }

    /// Whether `α, β ∈ set, α + β ∈ Δ` implies `α + β ∈ set`.
    pub fn is_closed(&self, set: &RootSet) -> bool {
        set.iter()
            .all(|i| set.iter().all(|j| self.sum(i, j).is_none_or(|k| set.contains(k))))
    }

    /// Smallest closed subset containing `set`.
    pub fn closure(&self, set: &RootSet) -> RootSet {
        let mut out = RootSet::new();
        for i in set.iter() {
            self.close_with(&mut out, i);
        }
        out
    }

    /// Adds `root` to the closed set `set` and restores closedness.
    pub fn close_with(&self, set: &mut RootSet, root: usize) {
        if set.contains(root) {
            return;
        }
        set.insert(root);
        let mut pending = vec![root];
        while let Some(x) = pending.pop() {
            let members: Vec<usize> = set.iter().collect();
            for y in members {
                if let Some(s) = self.sum(x, y) {
                    if set.insert(s) {
                        pending.push(s);
                    }
                }
            }
        }
    }

    /// `{−α : α ∈ set}`.
    pub fn negate_set(&self, set: &RootSet) -> RootSet {
        set.iter().map(|i| self.negate(i)).collect()
    }

    pub fn all_roots_set(&self) -> RootSet {
        (0..self.num_roots()).collect()
    }

    pub fn vectors(&self, set: &RootSet) -> Vec<QVector> {
        set.iter().map(|i| self.roots[i].clone()).collect()
    }
}

fn bilinear(gram: &Matrix, u: &QVector, v: &QVector) -> Rational {
    let mut acc = Rational::zero();
    for (i, row) in gram.iter().enumerate() {
        if u[i].is_zero() {
            continue;
        }
        for (j, g) in row.iter().enumerate() {
            if !g.is_zero() && !v[j].is_zero() {
                acc += &u[i] * g * &v[j];
            }
        }
    }
    acc
}


impl RootSystem {
    /// Every closed subset of `Δ` (each one a root subalgebra together with
    /// the Cartan subalgebra), ordered by size and then by index list.
    ///
    /// Grown breadth-first: each closed set is reached from a smaller one by
    /// adding a root and closing. Only practical for small systems.
    pub fn closed_subsets(&self) -> Vec<RootSet> {
        let mut seen: std::collections::HashSet<RootSet> = std::collections::HashSet::new();
        let mut frontier = vec![RootSet::new()];
        seen.insert(RootSet::new());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for set in &frontier {
                for r in 0..self.num_roots() {
                    if set.contains(r) {
                        continue;
                    }
                    let mut grown = set.clone();
                    self.close_with(&mut grown, r);
                    if seen.insert(grown.clone()) {
                        next.push(grown);
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<RootSet> = seen.into_iter().collect();
        all.sort_by_cached_key(|s| (s.len(), s.to_vec()));
        all
    }

    /// Closed `P` with `P ∪ −P = Δ`.
    pub fn is_parabolic(&self, set: &RootSet) -> bool {
        self.is_closed(set) && set.union(&self.negate_set(set)).len() == self.num_roots()
    }
}

impl RootSystem {
    /// The simple reflection `s_k` as a permutation of root indices.
    pub fn reflection_permutation(&self, k: usize) -> Vec<usize> {
        let a = &self.simple[k];
        self.roots
            .iter()
            .map(|r| {
                let image = r.add_scaled(&-self.coroot_pairing(r, a), a);
                self.index[&image]
            })
            .collect()
    }

    /// The group generated by the simple reflections and `α ↦ −α`, as root
    /// permutations. Sorted, identity first.
    pub fn automorphism_permutations(&self) -> Vec<Vec<usize>> {
        let mut gens: Vec<Vec<usize>> = (0..self.rank()).map(|k| self.reflection_permutation(k)).collect();
        gens.push((0..self.num_roots()).map(|i| self.negate(i)).collect());
        let identity: Vec<usize> = (0..self.num_roots()).collect();
        let mut group = std::collections::BTreeSet::new();
        group.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q: Vec<usize> = p.iter().map(|&i| g[i]).collect();
                if group.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        group.into_iter().collect()
    }
}
