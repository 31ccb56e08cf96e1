//! JSON request/response front end.
//!
//! A request is `{"command": ..., "parameters": {...}}`. Rationals travel
//! as strings (`"3/2"`), root subsets as lists of canonical root indices,
//! and responses are compact JSON with a fixed key order, so identical
//! requests produce byte-identical output.

mod census;
mod params;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, ConeWitness, QVector};
use crate::fk::{finite_type_by_cones, is_primal, solvable_finite_type, FiniteTypeVerdict};
use crate::mathieu::{sl_degree, sp_bounded, sp_fiber_irreducible, CoherentFamilyDescriptor, SpWeight};
use crate::principal::{exponents, ktype_series, nonintegral_weight, PrincipalData};
use crate::rootsys::DEFAULT_MAX_RANK;
use crate::shadow::{fernando_fk, parabolic_pm, shadow, RootSubalgebra};
use crate::{RootSet, RootSystem, Series};

pub use census::{census, CensusRow};
use params::*;

/// Environment variable overriding the rank cap.
pub const MAX_RANK_ENV: &str = "GHC_MAX_RANK";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_rank: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

impl Config {
    /// Default configuration with `GHC_MAX_RANK` applied when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_RANK_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_rank| Config { max_rank })
                .map_err(|_| Error::input(format!("{MAX_RANK_ENV} must be a nonnegative integer, got {v:?}"))),
            Err(_) => Ok(Config::default()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommandRequest {
    pub command: String,
    #[serde(default = "empty_object")]
    pub parameters: Value,
}

fn empty_object() -> Value {
    json!({})
}

/// Runs a request given as JSON text. Always returns a JSON document: the
/// result, or `{"error": {"kind", "message"}}`, with the matching exit code.
pub fn run_text(text: &str, config: &Config) -> (Value, i32) {
    match serde_json::from_str::<CommandRequest>(text) {
        Ok(request) => run(&request, config),
        Err(e) => {
            let err = Error::input(format!("malformed request: {e}"));
            (error_json(&err), err.exit_code())
        }
    }
}

/// Runs one request and returns the response document and exit code.
pub fn run(request: &CommandRequest, config: &Config) -> (Value, i32) {
    match dispatch(request, config) {
        Ok(v) => (v, 0),
        Err(e) => (error_json(&e), e.exit_code()),
    }
}

pub fn error_json(e: &Error) -> Value {
    let message = match e {
        Error::Input(m) | Error::Unsupported(m) | Error::Internal(m) => m.clone(),
        Error::RegularIntegralCase => e.to_string(),
    };
    json!({"error": {"kind": e.kind(), "message": message}})
}

fn dispatch(request: &CommandRequest, config: &Config) -> Result<Value> {
    let p = &request.parameters;
    match request.command.as_str() {
        "root-system" => root_system_cmd(parse(p)?, config),
        "shadow" => shadow_cmd(parse(p)?, config),
        "fk-test" => fk_test_cmd(parse(p)?, config),
        "solvable-test" => solvable_cmd(parse(p)?, config),
        "primal-test" => primal_cmd(parse(p)?, config),
        "mathieu" => mathieu_cmd(parse(p)?),
        "ktype-series" => ktype_cmd(parse(p)?, config),
        "exponents" => exponents_cmd(parse(p)?, config),
        "census" => census_cmd(parse(p)?, config),
        other => Err(Error::input(format!("unknown command {other:?}"))),
    }
}

fn build(ty: &TypeParams, config: &Config) -> Result<RootSystem> {
    RootSystem::build_with_max_rank(ty.series()?, ty.rank, config.max_rank)
}

fn set_json(set: &RootSet) -> Value {
    json!(set.to_vec())
}

fn vector_json(v: &QVector) -> Value {
    json!(v.to_strings())
}

fn witness_json(w: Option<&ConeWitness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "point": vector_json(&w.point),
            "coefficients_a": w.coefficients_a.iter().map(format_rational).collect::<Vec<_>>(),
            "coefficients_b": w.coefficients_b.iter().map(format_rational).collect::<Vec<_>>(),
        }),
    }
}

fn root_system_cmd(p: TypeParams, config: &Config) -> Result<Value> {
    let rs = build(&p, config)?;
    let roots: Vec<Value> = (0..rs.num_roots())
        .map(|i| {
            json!({
                "index": i,
                "coords": vector_json(rs.root(i)),
                "height": rs.height_of(i),
            })
        })
        .collect();
    Ok(json!({
        "type": rs.cartan_type().to_string(),
        "rank": rs.rank(),
        "ambient_dim": rs.ambient_dim(),
        "dim": rs.dim_algebra(),
        "num_roots": rs.num_roots(),
        "num_positive": rs.num_positive(),
        "simple_roots": (0..rs.rank()).map(|k| rs.simple_index(k)).collect::<Vec<_>>(),
        "cartan_matrix": rs.cartan_matrix(),
        "rho": vector_json(rs.rho()),
        "roots": roots,
    }))
}

fn shadow_cmd(p: SubalgebraParams, config: &Config) -> Result<Value> {
    let rs = build(&p.ty(), config)?;
    let fk = RootSubalgebra::from_indices(&rs, &p.subalgebra)?;
    let sd = shadow(&fk)?;
    Ok(json!({
        "I": set_json(&sd.infinite),
        "F": set_json(&sd.finite),
        "plus": set_json(&sd.plus),
        "minus": set_json(&sd.minus),
        "gamma_generators": set_json(&sd.gamma_generators),
        "p_M": set_json(&parabolic_pm(&sd)),
        "fernando_fk": set_json(&fernando_fk(&sd)),
    }))
}

pub(crate) fn verdict_json(v: &FiniteTypeVerdict) -> Value {
    json!({
        "finite_type": v.finite_type,
        "witness": witness_json(v.witness.as_ref()),
        "singular_weights_g_mod_l": set_json(&v.singular_g_mod_l),
        "singular_weights_n": set_json(&v.singular_n),
        "levi": {"k_roots": set_json(&v.levi.k_roots), "n_roots": set_json(&v.levi.n_roots)},
    })
}

fn fk_test_cmd(p: SubalgebraParams, config: &Config) -> Result<Value> {
    let rs = build(&p.ty(), config)?;
    if rs.series() != Series::A {
        return Err(Error::Unsupported(format!(
            "fk-test is only available for type A, not {}",
            rs.cartan_type()
        )));
    }
    let l = RootSubalgebra::from_indices(&rs, &p.subalgebra)?;
    Ok(verdict_json(&finite_type_by_cones(&l)?))
}

fn solvable_cmd(p: SubalgebraParams, config: &Config) -> Result<Value> {
    let rs = build(&p.ty(), config)?;
    let l = RootSubalgebra::from_indices(&rs, &p.subalgebra)?;
    let v = solvable_finite_type(&l)?;
    Ok(json!({
        "finite_type": v.finite_type,
        "levi_roots": set_json(&v.levi_roots),
        "levi_types": v.levi_types.map(|ts| ts.iter().map(|t| t.to_string()).collect::<Vec<_>>()),
    }))
}

fn primal_cmd(p: PrimalParams, config: &Config) -> Result<Value> {
    let rs = build(&p.ty(), config)?;
    let k: RootSet = p.subalgebra.iter().copied().collect();
    let toral = match p.toral {
        Some(list) => list.into_iter().map(|v| v.into_vector()).collect::<Result<Vec<_>>>()?,
        None => rs.simple_roots().to_vec(),
    };
    Ok(json!({"primal": is_primal(&rs, &k, &toral)?}))
}

fn mathieu_cmd(p: MathieuParams) -> Result<Value> {
    let lambda = p.lambda.into_vector()?;
    let fiber = p
        .eta
        .map(|eta| eta.into_vector().map(|v| sp_fiber_irreducible(v.coords())))
        .transpose()?;
    let mut out = match p.series.as_deref().unwrap_or("C").parse::<Series>()? {
        Series::C => {
            let x = SpWeight::new(lambda.into_coords())?;
            if sp_bounded(&x) {
                serde_json::to_value(CoherentFamilyDescriptor::new(x)?)
                    .map_err(|e| Error::internal(e.to_string()))?
            } else {
                json!({
                    "bounded": false,
                    "degree": null,
                    "class_rep": null,
                    "companion": {"series": "D", "rank": x.rank()},
                })
            }
        }
        Series::A => {
            let n = lambda.dim().saturating_sub(1);
            json!({
                "degree": sl_degree(&lambda)?,
                "companion": {"series": "A", "rank": n.saturating_sub(1)},
            })
        }
        other => {
            return Err(Error::Unsupported(format!(
                "bounded modules exist only for types A and C, not {other}"
            )))
        }
    };
    if let (Some(f), Some(obj)) = (fiber, out.as_object_mut()) {
        obj.insert("fiber_irreducible".into(), json!(f));
    }
    Ok(out)
}

fn ktype_cmd(p: KTypeParams, config: &Config) -> Result<Value> {
    let rs = build(&p.ty(), config)?;
    let pd = PrincipalData::new(&rs)?;
    let lambda = match (p.lambda, p.lambda_h) {
        (Some(l), None) => l.into_vector()?,
        (None, Some(h)) => nonintegral_weight(&rs, &h.into_rational()?)?,
        _ => return Err(Error::input("give exactly one of lambda and lambda_h")),
    };
    Ok(ktype_series(&pd, &lambda, p.max_m.unwrap_or(20))?.to_json())
}

fn exponents_cmd(p: TypeParams, config: &Config) -> Result<Value> {
    let rs = build(&p, config)?;
    Ok(json!({"exponents": exponents(&rs)}))
}

fn census_cmd(p: CensusParams, config: &Config) -> Result<Value> {
    let series = p.ty().series()?;
    let rows = census(series, p.rank, p.dedup.unwrap_or(false), config)?;
    Ok(json!({
        "series": series.to_string(),
        "rank": p.rank,
        "count": rows.len(),
        "rows": rows.iter().map(CensusRow::to_json).collect::<Vec<_>>(),
    }))
}
