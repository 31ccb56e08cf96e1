//! Integrality, dominance and the Weyl dimension formula.

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RootSystem;
use crate::error::{Error, Result};
use crate::exact::{is_integer, QVector, Rational};

impl RootSystem {
    /// `⟨λ, α_i^∨⟩` for each simple root.
    pub fn simple_pairings(&self, lambda: &QVector) -> Result<Vec<Rational>> {
        self.check_dim(lambda)?;
        Ok(self
            .simple_roots()
            .iter()
            .map(|a| self.coroot_pairing(lambda, a))
            .collect())
    }

    /// `⟨λ, α^∨⟩ ∈ Z` for every simple root `α`.
    pub fn is_integral(&self, lambda: &QVector) -> Result<bool> {
        Ok(self.simple_pairings(lambda)?.iter().all(is_integer))
    }

    /// `⟨λ, α^∨⟩ ≥ 0` for every simple root `α`.
    pub fn is_dominant(&self, lambda: &QVector) -> Result<bool> {
        Ok(self.simple_pairings(lambda)?.iter().all(|p| !p.is_negative()))
    }

    /// `⟨λ + ρ, α^∨⟩ ∈ Z ∖ {0}` for every positive root `α`.
    pub fn is_regular_integral(&self, lambda: &QVector) -> Result<bool> {
        self.check_dim(lambda)?;
        let shifted = lambda + self.rho();
        Ok(self.positive_roots().iter().all(|a| {
            let p = self.coroot_pairing(&shifted, a);
            is_integer(&p) && !p.is_zero()
        }))
    }

    /// Dimension of the irreducible module of highest weight `λ`:
    /// `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
    ///
    /// `λ` must have integral simple-coroot pairings and be dominant;
    /// half-integral ε-coordinates are fine as long as the pairings are
    /// integers.
    pub fn weyl_dim(&self, lambda: &QVector) -> Result<u128> {
        let pairings = self.simple_pairings(lambda)?;
        if !pairings.iter().all(is_integer) {
            return Err(Error::input(format!("{lambda} is not integral for {}", self.cartan_type())));
        }
        if pairings.iter().any(Signed::is_negative) {
            return Err(Error::input(format!("{lambda} is not dominant for {}", self.cartan_type())));
        }
        let shifted = lambda + self.rho();
        let mut product = Rational::one();
        for a in self.positive_roots() {
            product *= self.inner(&shifted, a) / self.inner(self.rho(), a);
        }
        if !is_integer(&product) {
            return Err(Error::internal(format!("Weyl product {product} is not an integer")));
        }
        product
            .to_integer()
            .to_u128()
            .ok_or_else(|| Error::input("dimension does not fit in 128 bits"))
    }
}
