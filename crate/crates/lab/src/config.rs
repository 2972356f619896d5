//! JSON run configuration. Every scalar is an exact string such as `"3/2"`.

use std::path::Path;

use lfactor_core::algebra::{Field, Scalar};
use lfactor_core::langlands::{JordanType, LanglandsParameter, Realization};
use lfactor_core::repring::{irreducible_character, Character, GradedRep};
use lfactor_core::rootdata::{Coweight, GroupData};
use lfactor_core::satake::SatakeParameter;
use lfactor_core::semigroup::{rho_from_cone, ConeData};
use lfactor_core::toric::ToricData;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::LabError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    #[serde(default)]
    pub group: Option<GroupSpec>,
    #[serde(default)]
    pub rho: Option<RhoSpec>,
    #[serde(default)]
    pub q: Option<String>,
    #[serde(default)]
    pub satake: Option<Vec<String>>,
    #[serde(default = "default_order")]
    pub order: usize,
    #[serde(default)]
    pub jordan: Option<Vec<usize>>,
    #[serde(default)]
    pub sgn_twist: bool,
    #[serde(default)]
    pub zeta: Option<ZetaSpec>,
    #[serde(default)]
    pub toric: Option<ToricSpec>,
    #[serde(default)]
    pub cone: Option<ConeSpec>,
    #[serde(default)]
    pub golden: Vec<GoldenSpec>,
}

fn default_order() -> usize {
    6
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Gl { n: usize },
    Torus { rank: usize, chi: Vec<i64> },
    GlTimesTorus { n: usize, torus_rank: usize, chi: Vec<i64> },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RhoSpec {
    Standard,
    Sym(usize),
    HighestWeights(Vec<Vec<i64>>),
    Weights(Vec<Vec<i64>>),
    Cone,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ZetaModule {
    Spherical,
    PrincipalSeries,
    Steinberg,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum IwahoriFunction {
    MatO,
    IwahoriOrder,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ZetaSpec {
    pub module: ZetaModule,
    #[serde(default = "default_function")]
    pub function: IwahoriFunction,
    #[serde(default)]
    pub central: Option<String>,
    #[serde(default = "default_bound")]
    pub num_degree: usize,
    #[serde(default = "default_bound")]
    pub den_degree: usize,
}

fn default_function() -> IwahoriFunction {
    IwahoriFunction::MatO
}

fn default_bound() -> usize {
    3
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ToricSpec {
    pub rank: usize,
    pub weights: Vec<Vec<i64>>,
    pub chi: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    #[serde(default)]
    pub equations: Vec<Vec<i64>>,
    #[serde(default)]
    pub inequalities: Vec<Vec<i64>>,
    pub bound: u32,
}

/// A subcommand run whose TSV output must match a stored file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GoldenSpec {
    pub command: String,
    pub config: String,
    pub expected: String,
}

fn config_error(msg: impl Into<String>) -> LabError {
    LabError::Config(msg.into())
}

/// Parse `"n"` or `"n/d"` into an exact rational.
pub fn parse_ratio(s: &str) -> Result<Ratio<i64>, LabError> {
    let s = s.trim();
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| config_error(format!("not an exact rational: {s:?}")));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let d = parse(d)?;
            if d == 0 {
                return Err(config_error(format!("zero denominator in {s:?}")));
            }
            Ratio::new(parse(n)?, d)
        }
        None => Ratio::from_integer(parse(s)?),
    };
    Ok(r)
}

pub fn parse_scalar(s: &str) -> Result<Scalar, LabError> {
    let r = parse_ratio(s)?;
    Ok(Scalar::from_fraction(*r.numer(), *r.denom()))
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, LabError> {
        let config: RunConfig = serde_json::from_str(text).map_err(|e| config_error(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: &Path) -> Result<Self, LabError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn validate(&self) -> Result<(), LabError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(config_error(format!(
                "unsupported schema_version {}; expected {SCHEMA_VERSION}",
                self.schema_version
            )));
        }
        if self.q.is_some() {
            self.field()?;
        }
        if self.satake.is_some() {
            self.satake_parameter()?;
        }
        if let Some(z) = &self.zeta {
            if let Some(c) = &z.central {
                if parse_scalar(c)? == Scalar::from_integer(0) {
                    return Err(config_error("central character must be nonzero"));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> Result<GroupData, LabError> {
        let spec = self.group.as_ref().ok_or_else(|| config_error("missing \"group\""))?;
        let g = match spec {
            GroupSpec::Gl { n } => GroupData::gl(*n),
            GroupSpec::Torus { rank, chi } => GroupData::torus(*rank, chi.clone()),
            GroupSpec::GlTimesTorus { n, torus_rank, chi } => GroupData::gl_times_torus(*n, *torus_rank, chi.clone()),
        };
        g.map_err(|e| config_error(e.to_string()))
    }

    pub fn field(&self) -> Result<Field, LabError> {
        let q = self.q.as_deref().ok_or_else(|| config_error("missing \"q\""))?;
        let r = parse_ratio(q)?;
        Field::new(r).map_err(|_| config_error(format!("q must be a positive rational, got {q:?}")))
    }

    pub fn satake_parameter(&self) -> Result<SatakeParameter, LabError> {
        let entries = self.satake.as_ref().ok_or_else(|| config_error("missing \"satake\""))?;
        let scalars = entries.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>, _>>()?;
        SatakeParameter::new(scalars).map_err(|_| config_error("Satake parameter entries must be nonzero"))
    }

    pub fn central(&self) -> Result<Scalar, LabError> {
        let c = self.zeta.as_ref().and_then(|z| z.central.as_deref());
        parse_scalar(c.ok_or_else(|| config_error("missing \"zeta.central\""))?)
    }

    pub fn cone(&self) -> Result<(ConeData, u32), LabError> {
        let spec = self.cone.as_ref().ok_or_else(|| config_error("missing \"cone\""))?;
        let c = ConeData::new(self.group()?, spec.equations.clone(), spec.inequalities.clone())
            .map_err(|e| config_error(e.to_string()))?;
        Ok((c, spec.bound))
    }

    pub fn toric_data(&self) -> Result<ToricData, LabError> {
        let spec = self.toric.as_ref().ok_or_else(|| config_error("missing \"toric\""))?;
        let weights = spec.weights.iter().map(|w| Coweight::new(w.clone())).collect();
        ToricData::new(spec.rank, weights, spec.chi.clone()).map_err(|e| config_error(e.to_string()))
    }

    /// The representation as explicit matrices, when it has such a form.
    pub fn realization(&self) -> Result<Realization, LabError> {
        match self.rho.as_ref().ok_or_else(|| config_error("missing \"rho\""))? {
            RhoSpec::Standard => Ok(Realization::Standard),
            RhoSpec::Sym(k) => Ok(Realization::Sym(*k)),
            _ => Ok(Realization::Weights(self.graded_rep()?.character().clone())),
        }
    }

    pub fn graded_rep(&self) -> Result<GradedRep, LabError> {
        let g = self.group()?;
        let character = match self.rho.as_ref().ok_or_else(|| config_error("missing \"rho\""))? {
            RhoSpec::Standard => Realization::Standard.character(&g)?,
            RhoSpec::Sym(k) => Realization::Sym(*k).character(&g)?,
            RhoSpec::HighestWeights(list) => {
                let mut c = Character::zero();
                for w in list {
                    c = c.add(&irreducible_character(&Coweight::new(w.clone()), &g)?);
                }
                c
            }
            RhoSpec::Weights(list) => Character::from_weights(list.iter().map(|w| Coweight::new(w.clone()))),
            RhoSpec::Cone => {
                let (cone, bound) = self.cone()?;
                return Ok(rho_from_cone(&cone, bound)?);
            }
        };
        Ok(GradedRep::new(character, &g)?)
    }

    pub fn langlands_parameter(&self) -> Result<LanglandsParameter, LabError> {
        let g = self.group()?;
        let jordan = match &self.jordan {
            Some(blocks) => JordanType::new(blocks.clone()).map_err(|e| config_error(e.to_string()))?,
            None => JordanType::zero(g.gl_rank()),
        };
        let p = LanglandsParameter::new(self.satake_parameter()?, jordan, self.sgn_twist, &g, &self.field()?)?;
        Ok(p)
    }
}
