//! Exhaustive classification of the root subalgebras of `sl(n+1)`.

use serde_json::{json, Value};

use super::{verdict_json, Config};
use crate::error::{Error, Result};
use crate::fk::{finite_type_by_cones, FiniteTypeVerdict};
use crate::shadow::RootSubalgebra;
use crate::{RootSet, RootSystem, Series};

/// Largest rank the census will enumerate.
pub const CENSUS_MAX_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub subalgebra: RootSet,
    pub verdict: FiniteTypeVerdict,
}

impl CensusRow {
    pub fn to_json(&self) -> Value {
        let mut row = json!({"subalgebra": self.subalgebra.to_vec()});
        if let (Some(obj), Value::Object(rest)) = (row.as_object_mut(), verdict_json(&self.verdict)) {
            obj.extend(rest);
        }
        row
    }
}

/// Every closed root subset of `A_rank` with its finite-type verdict,
/// ordered by size and then index list. With `dedup`, only the smallest
/// member of each orbit under the Weyl group and `α ↦ −α` is kept.
pub fn census(series: Series, rank: usize, dedup: bool, config: &Config) -> Result<Vec<CensusRow>> {
    if series != Series::A {
        return Err(Error::Unsupported(format!("census is only available for type A, not {series}")));
    }
    let cap = CENSUS_MAX_RANK.min(config.max_rank);
    if rank > cap {
        return Err(Error::input(format!("census rank {rank} exceeds the bound {cap}")));
    }
    let rs = RootSystem::build_with_max_rank(series, rank, config.max_rank)?;
    let perms = if dedup { rs.automorphism_permutations() } else { Vec::new() };
    let mut rows = Vec::new();
    for set in rs.closed_subsets() {
        if dedup {
            let own = set.to_vec();
            let smaller = perms.iter().any(|p| {
                let mut image: Vec<usize> = own.iter().map(|&i| p[i]).collect();
                image.sort_unstable();
                image < own
            });
            if smaller {
                continue;
            }
        }
        let l = RootSubalgebra::new(&rs, set.clone())?;
        rows.push(CensusRow {
            verdict: finite_type_by_cones(&l)?,
            subalgebra: set,
        });
    }
    Ok(rows)
}
