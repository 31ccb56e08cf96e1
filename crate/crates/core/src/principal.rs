//! Principal `sl(2)`-subalgebras and the k-type multiplicities of the
//! cohomologically induced modules `A¹(λ)`.
//!
//! Everything here lives on the line `t* = C·ρ_k`: a weight of `t` is
//! recorded by its value at the principal `h`, so `ρ_k` is `1` and the
//! k-type `W(m·ρ_k)` has `t`-weights `m, m−2, …, −m`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::linalg::{self, Matrix};
use crate::exact::{format_rational, int, is_integer, rat, to_i64, QVector, Rational};
use crate::RootSystem;

/// Multiset of `h`-eigenvalues: eigenvalue → multiplicity.
pub type Spectrum = BTreeMap<u64, usize>;

#[derive(Clone, Debug)]
pub struct PrincipalData<'a> {
    rs: &'a RootSystem,
    h: QVector,
    exponents: Vec<u64>,
    nbar: Spectrum,
    nbar_kperp: Spectrum,
}

impl<'a> PrincipalData<'a> {
    /// Principal data of a simple root system of rank at least 2.
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        let ty = rs.cartan_type();
        if !ty.is_simple() {
            return Err(Error::input(format!("{ty} is not simple")));
        }
        if ty.rank < 2 {
            return Err(Error::input(format!("principal data needs rank at least 2, got {ty}")));
        }
        let h = principal_h(rs)?;
        let mut nbar = Spectrum::new();
        for i in 0..rs.num_positive() {
            let value = rs.inner(rs.root(i), &h);
            let v = to_i64(&value)
                .filter(|v| *v > 0 && v % 2 == 0)
                .ok_or_else(|| Error::internal(format!("h-eigenvalue {value} is not a positive even integer")))?;
            *nbar.entry(v as u64).or_default() += 1;
        }
        let mut nbar_kperp = nbar.clone();
        match nbar_kperp.get_mut(&2) {
            Some(c) if *c > 1 => *c -= 1,
            Some(_) => {
                nbar_kperp.remove(&2);
            }
            None => return Err(Error::internal("h has no eigenvalue 2 on the negative roots")),
        }
        Ok(PrincipalData {
            rs,
            h,
            exponents: exponents(rs),
            nbar,
            nbar_kperp,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn h_element(&self) -> &QVector {
        &self.h
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// `h`-spectrum (up to sign) of `n̄`.
    pub fn nbar_multiset(&self) -> &Spectrum {
        &self.nbar
    }

    /// `h`-spectrum (up to sign) of `n̄ ∩ k⊥`: one copy of 2 fewer than `n̄`.
    pub fn nbar_kperp_multiset(&self) -> &Spectrum {
        &self.nbar_kperp
    }

    /// `λ(h)`.
    pub fn lambda_h(&self, lambda: &QVector) -> Result<Rational> {
        self.rs.check_dim(lambda)?;
        Ok(self.rs.inner(lambda, &self.h))
    }

    /// `dim k − dim t`: above this degree the derived functors vanish, so
    /// only `A⁰`, `A¹`, `A²` can be nonzero.
    pub fn vanishing_degree(&self) -> usize {
        2
    }

    fn require_nonintegral(&self, lambda: &QVector) -> Result<Rational> {
        let lh = self.lambda_h(lambda)?;
        if self.rs.is_integral(lambda)? {
            return Err(Error::input("lambda must be non-integral"));
        }
        Ok(lh)
    }
}

/// The element `h` of the root span with `α_i(h) = 2` for every simple root,
/// written in ambient coordinates through the invariant form.
pub fn principal_h(rs: &RootSystem) -> Result<QVector> {
    let simple = rs.simple_roots();
    let gram: Matrix = simple
        .iter()
        .map(|a| simple.iter().map(|b| rs.inner(a, b)).collect())
        .collect();
    let coeffs = linalg::solve(&gram, &vec![int(2); simple.len()])
        .ok_or_else(|| Error::internal("simple roots are linearly dependent"))?;
    Ok(QVector::combination(rs.ambient_dim(), &coeffs, simple))
}

/// Exponents read off the height distribution: `e` occurs
/// `#{ht = e} − #{ht = e + 1}` times.
pub fn exponents(rs: &RootSystem) -> Vec<u64> {
    let dist = rs.height_distribution();
    let count = |h: i64| dist.get(&h).copied().unwrap_or(0);
    let mut out = Vec::new();
    for (&h, &c) in &dist {
        let reps = c.saturating_sub(count(h + 1));
        out.extend(std::iter::repeat_n(h as u64, reps));
    }
    out
}

/// Number of ways to write `target` as a sum of parts drawn from
/// `multiset`, copies of a repeated part counted as distinct colours: the
/// coefficient of `q^target` in `∏ (1 − q^part)^{−mult}`.
///
/// Negative, odd and non-integral targets give 0. Parts must be positive
/// and even.
pub fn partition_p(multiset: &Spectrum, target: &Rational) -> Result<u128> {
    if let Some(&bad) = multiset.keys().find(|&&p| p == 0 || p % 2 == 1) {
        return Err(Error::input(format!("part {bad} is not a positive even integer")));
    }
    let Some(t) = to_i64(target) else {
        return Ok(0);
    };
    if t < 0 || t % 2 == 1 {
        return Ok(0);
    }
    let t = t as usize;
    let mut coeff = vec![0u128; t + 1];
    coeff[0] = 1;
    for (&part, &mult) in multiset {
        let part = part as usize;
        for _ in 0..mult {
            for n in part..=t {
                coeff[n] = coeff[n]
                    .checked_add(coeff[n - part])
                    .ok_or_else(|| Error::input("partition count overflows 128 bits"))?;
            }
        }
    }
    Ok(coeff[t])
}

/// `dim Hom_k(W(m·ρ_k), A¹(λ)) = P(m − λ(h) + 2) − P(−m − λ(h))`, with `P`
/// the partition function of `n̄ ∩ k⊥`. Requires `λ` non-integral.
pub fn a1_multiplicity(pd: &PrincipalData<'_>, m: u64, lambda: &QVector) -> Result<u128> {
    let lh = pd.require_nonintegral(lambda)?;
    a1_at(pd, m, &lh)
}

fn a1_at(pd: &PrincipalData<'_>, m: u64, lh: &Rational) -> Result<u128> {
    let m = Rational::from_integer((m as i64).into());
    let plus = partition_p(&pd.nbar_kperp, &(&m - lh + int(2)))?;
    let minus = partition_p(&pd.nbar_kperp, &(-&m - lh))?;
    plus.checked_sub(minus)
        .ok_or_else(|| Error::internal(format!("negative multiplicity {plus} - {minus}")))
}

/// Euler characteristic `Σ_i (−1)^i dim Hom_t(W(m) ⊗ Λ^i(k/t), M)`,
/// enumerating `t`-weights directly. `k/t` has weights `±2`, so `Λ⁰` and
/// `Λ²` contribute weight 0 and `Λ¹` contributes `±2`. Since `−h` acts on
/// `n̄` with positive eigenvalues, the `t`-weights of the generalized Verma
/// module are `λ(h)` plus sums from the spectrum of `n̄`, and `v` occurs
/// with multiplicity `P(v − λ(h))` over all of `n̄`.
pub fn euler_rhs(pd: &PrincipalData<'_>, m: u64, lambda: &QVector) -> Result<i128> {
    let lh = pd.lambda_h(lambda)?;
    euler_at(pd, m, &lh)
}

fn euler_at(pd: &PrincipalData<'_>, m: u64, lh: &Rational) -> Result<i128> {
    let w_weights = (0..=m).map(|j| m as i64 - 2 * j as i64);
    let lambda_i: [&[i64]; 3] = [&[0], &[2, -2], &[0]];
    let mut total: i128 = 0;
    for (i, shifts) in lambda_i.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for w in w_weights.clone() {
            for s in shifts.iter() {
                let v = int(w + s);
                let count = partition_p(&pd.nbar, &(v - lh))?;
                total += sign * count as i128;
            }
        }
    }
    Ok(total)
}

/// Smallest `m` with `W(m·ρ_k)` occurring in `A¹(λ)`. Requires
/// `λ(h) − 2 ∈ Z₊` and `λ` non-integral; the answer is `λ(h) − 2`, reached
/// with multiplicity one.
pub fn minimal_ktype(pd: &PrincipalData<'_>, lambda: &QVector) -> Result<u64> {
    let lh = pd.require_nonintegral(lambda)?;
    let top = to_i64(&(&lh - int(2)))
        .filter(|n| *n >= 0)
        .ok_or_else(|| Error::input(format!("lambda(h) - 2 = {} is not a nonnegative integer", format_rational(&(&lh - int(2))))))?;
    for m in 0..=top as u64 {
        let mult = a1_at(pd, m, &lh)?;
        if mult > 0 {
            if m != top as u64 || mult != 1 {
                return Err(Error::internal(format!("k-type {m} occurs with multiplicity {mult}")));
            }
            return Ok(m);
        }
    }
    Err(Error::internal(format!("no k-type up to {top}")))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTypeSeries {
    pub lambda_h: Rational,
    /// `m ↦ dim Hom_k(W(m·ρ_k), A¹(λ))` for `m = 0..=truncation`.
    pub entries: BTreeMap<u64, u128>,
    pub truncation: u64,
    /// Smallest occurring `m`, when `λ(h) − 2 ∈ Z₊`.
    pub minimal_ktype: Option<u64>,
}

impl KTypeSeries {
    pub fn to_json(&self) -> serde_json::Value {
        let series: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().map(|(m, c)| (m.to_string(), serde_json::json!(*c as u64))).collect();
        serde_json::json!({
            "lambda_h": format_rational(&self.lambda_h),
            "series": series,
            "minimal_ktype": self.minimal_ktype,
        })
    }
}

pub fn ktype_series(pd: &PrincipalData<'_>, lambda: &QVector, max_m: u64) -> Result<KTypeSeries> {
    let lh = pd.require_nonintegral(lambda)?;
    let entries = (0..=max_m)
        .map(|m| Ok((m, a1_at(pd, m, &lh)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let minimal = if is_integer(&lh) && lh >= int(2) {
        Some(minimal_ktype(pd, lambda)?)
    } else {
        None
    };
    Ok(KTypeSeries {
        lambda_h: lh,
        entries,
        truncation: max_m,
        minimal_ktype: minimal,
    })
}

/// A non-integral weight `λ` with `λ(h) = value`: `(value/2)·α₁` moved
/// along `α₁ − α₂`, which `h` does not see, by a small fraction.
pub fn nonintegral_weight(rs: &RootSystem, value: &Rational) -> Result<QVector> {
    if rs.rank() < 2 {
        return Err(Error::input("need rank at least 2 to perturb inside ker h"));
    }
    let a1 = &rs.simple_roots()[0];
    let a2 = &rs.simple_roots()[1];
    let base = a1.scale(&(value / int(2)));
    let direction = a1 - a2;
    for k in 1..64 {
        let t = rat(1, 2 * k + 1);
        let lambda = base.add_scaled(&t, &direction);
        if !rs.is_integral(&lambda)? {
            return Ok(lambda);
        }
    }
    Err(Error::internal("no non-integral perturbation found"))
}
