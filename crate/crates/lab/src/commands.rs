//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use lfactor_core::algebra::{recognize_rational, Field, Scalar};
use lfactor_core::hecke::{
    iwahori_basic_function_std_gl2, iwahori_order_basic_function, pi, principal_series_module, s0, s1,
    steinberg_module, HeckeElement, HeckeModule, IwahoriMatrixCoefficient,
};
use lfactor_core::langlands::{l_factor, nilpotent_invariants, LanglandsParameter, Realization};
use lfactor_core::rootdata::GroupData;
use lfactor_core::satake::BasicFunction;
use lfactor_core::semigroup::{indecomposables, rho_from_cone, s_max};
use lfactor_core::toric::{
    fibered_pushforward, is_nondegenerate, pushforward_basic, support_projection_compact, toric_basic_function,
};
use lfactor_core::zeta::{iwahori_zeta, iwahori_zeta_battery, spherical_zeta, spherical_zeta_of_basic, zeta_ideal, ZetaSeries};
use lfactor_core::Error;

use crate::acceptance;
use crate::config::{IwahoriFunction, RunConfig, ZetaModule};
use crate::error::LabError;
use crate::output::{Format, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    BasicFn,
    Lfactor,
    Zeta,
    Toric,
    Semigroup,
    Selfcheck,
}

impl Command {
    pub fn parse(name: &str) -> Option<Self> {
        <Self as clap::ValueEnum>::from_str(name, true).ok()
    }
}

/// Outcome of a command: the report, and whether a self-check failed.
pub struct Outcome {
    pub report: Report,
    pub check_failed: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, check_failed: false }
    }
}

pub fn run(command: Command, config: &RunConfig, base: &Path) -> Result<Outcome, LabError> {
    Ok(match command {
        Command::BasicFn => basic_fn(config)?.into(),
        Command::Lfactor => lfactor(config)?.into(),
        Command::Zeta => zeta(config)?.into(),
        Command::Toric => toric(config)?.into(),
        Command::Semigroup => semigroup(config)?.into(),
        Command::Selfcheck => selfcheck(config, base)?,
    })
}

/// Values of `f_{rho, d}` for `d = 1..=order` on every coweight of its support.
pub fn basic_fn(config: &RunConfig) -> Result<Report, LabError> {
    let g = config.group()?;
    let f = BasicFunction::new(config.graded_rep()?, g.clone(), config.field()?)?;
    let mut report = Report::new(["degree", "coweight", "value"]);
    for d in 1..=config.order as i64 {
        let part = f.degree(d)?;
        for (lambda, value) in part.terms() {
            for mu in g.weyl_orbit(lambda).iter().rev() {
                report.row([d.to_string(), mu.to_string(), value.to_string()]);
            }
        }
    }
    report.note("q", config.field()?.q());
    Ok(report)
}

pub fn lfactor(config: &RunConfig) -> Result<Report, LabError> {
    let g = config.group()?;
    let p = config.langlands_parameter()?;
    let rho = config.realization()?;
    let mut report = Report::new(["eigenvalue", "degree", "multiplicity"]);
    for ev in nilpotent_invariants(&p, &rho, &g)? {
        report.row([ev.eigenvalue.to_string(), ev.degree.to_string(), ev.multiplicity.to_string()]);
    }
    report.note("L", l_factor(&p, &rho, &g)?);
    Ok(report)
}

fn iwahori_module(config: &RunConfig, module: &ZetaModule, field: &Field) -> Result<(HeckeModule, LanglandsParameter), LabError> {
    let g = GroupData::gl(2)?;
    match module {
        ZetaModule::PrincipalSeries => {
            let alpha = config.satake_parameter()?;
            let m = principal_series_module(field, &alpha)?;
            Ok((m, LanglandsParameter::unramified(alpha, &g, field)?))
        }
        ZetaModule::Steinberg => {
            let kappa = config.central()?;
            Ok((steinberg_module(field, &kappa)?, LanglandsParameter::steinberg_gl2(&kappa, field)?))
        }
        ZetaModule::Spherical => unreachable!("spherical zeta has no Iwahori module"),
    }
}

fn iwahori_function(kind: &IwahoriFunction, field: Field) -> impl Fn(i64) -> HeckeElement {
    let order = matches!(kind, IwahoriFunction::IwahoriOrder);
    move |d| if order { iwahori_order_basic_function(&field, d) } else { iwahori_basic_function_std_gl2(&field, d) }
}

/// Right and left translates used in the Iwahori battery.
pub fn battery_translates() -> Vec<HeckeElement> {
    [pi(), s0(), s1()].into_iter().map(HeckeElement::basis).collect()
}

pub fn zeta(config: &RunConfig) -> Result<Report, LabError> {
    let spec = config.zeta.clone().ok_or_else(|| LabError::Config("missing \"zeta\"".into()))?;
    let field = config.field()?;
    let order = config.order;
    let (main, battery, expected) = match spec.module {
        ZetaModule::Spherical => {
            let g = config.group()?;
            let f = BasicFunction::new(config.graded_rep()?, g.clone(), field)?;
            let alpha = config.satake_parameter()?;
            let z = spherical_zeta_of_basic(&f, &alpha, order)?;
            let expected = match config.realization() {
                Ok(rho) => {
                    let p = LanglandsParameter::unramified(alpha, &g, &field)?.with_sgn_twist(true);
                    Some(l_factor(&p, &rho, &g)?)
                }
                Err(_) => None,
            };
            (z.clone(), vec![z], expected)
        }
        module => {
            let (m, p) = iwahori_module(config, &module, &field)?;
            let phi = iwahori_function(&spec.function, field);
            let c = match module {
                ZetaModule::PrincipalSeries => IwahoriMatrixCoefficient::spherical(m.clone())?,
                _ => IwahoriMatrixCoefficient::new(m.clone(), vec![Scalar::from_integer(1)], vec![Scalar::from_integer(1)])?,
            };
            let z = iwahori_zeta(&phi, &c, order)?;
            let battery = iwahori_zeta_battery(&phi, &m, &battery_translates(), order)?;
            let g = GroupData::gl(2)?;
            let expected = l_factor(&p.with_sgn_twist(true), &Realization::Standard, &g)?;
            (z, battery, Some(expected))
        }
    };
    let mut report = Report::new(["degree", "coefficient"]);
    for (d, c) in main.series.coeffs().iter().enumerate() {
        report.row([d.to_string(), c.to_string()]);
    }
    report.note("series", &main.provenance);
    match recognize_rational(&main.series, spec.num_degree, spec.den_degree) {
        Ok(r) => report.note("recognized", r),
        Err(e) => report.note("recognized", format!("none ({e})")),
    }
    let ideal = match zeta_ideal(&battery, spec.num_degree, spec.den_degree) {
        Ok(r) => Some(r),
        Err(Error::ZeroIdeal) => None,
        Err(e) => return Err(e.into()),
    };
    report.note("battery size", battery.len());
    match &ideal {
        Some(r) => report.note("ideal generator", r),
        None => report.note("ideal generator", "none (every test series vanishes)"),
    }
    if let Some(l) = expected {
        report.note("L (sgn-twisted parameter)", &l);
        let agrees = ideal.as_ref() == Some(l.as_rational());
        report.note("agrees", if agrees { "yes" } else { "no" });
    }
    Ok(report)
}

fn toric_series(config: &RunConfig) -> Result<Option<ZetaSeries>, LabError> {
    if config.satake.is_none() {
        return Ok(None);
    }
    let d = config.toric_data()?;
    let g = d.group()?;
    let alpha = config.satake_parameter()?;
    Ok(Some(spherical_zeta(|k| toric_basic_function(&d, k), &alpha, config.order, &g, &config.field()?)?))
}

pub fn toric(config: &RunConfig) -> Result<Report, LabError> {
    let d = config.toric_data()?;
    let nondegenerate = is_nondegenerate(&d);
    let mut report = Report::new(["degree", "coweight", "value"]);
    for k in 0..=config.order as i64 {
        for mu in toric_basic_function(&d, k)?.support() {
            let v = if nondegenerate { pushforward_basic(&d, mu)? } else { fibered_pushforward(&d, mu)? };
            report.row([k.to_string(), mu.to_string(), v.to_string()]);
        }
    }
    report.note("nondegenerate", nondegenerate);
    if !nondegenerate {
        report.note("support projection compact", support_projection_compact(&d, 8)?);
    }
    if let Some(z) = toric_series(config)? {
        report.note("zeta", &z.series);
    }
    Ok(report)
}

pub fn semigroup(config: &RunConfig) -> Result<Report, LabError> {
    let (cone, bound) = config.cone()?;
    let gens = indecomposables(&cone, bound)?;
    let top = s_max(&gens, cone.group())?;
    let mut report = Report::new(["kind", "coweight"]);
    for x in &gens {
        report.row(["indecomposable", &x.to_string()]);
    }
    for x in &top {
        report.row(["maximal", &x.to_string()]);
    }
    let rho = rho_from_cone(&cone, bound)?;
    report.note("rho dimension", rho.character().dimension());
    report.note("rho", rho.character());
    Ok(report)
}

/// Runs the acceptance suite, then every golden comparison in the config.
pub fn selfcheck(config: &RunConfig, base: &Path) -> Result<Outcome, LabError> {
    let mut report = Report::new(["check", "status", "seconds", "limit", "detail"]);
    let mut failed = false;
    for r in acceptance::run_all() {
        failed |= !r.passed();
        report.row([
            format!("criterion {}", r.id),
            r.status().to_string(),
            format!("{:.2}", r.elapsed.as_secs_f64()),
            r.limit.map_or_else(|| "-".to_string(), |l| format!("{}", l.as_secs())),
            r.detail(),
        ]);
    }
    for golden in &config.golden {
        let (ok, detail) = check_golden(golden, base);
        failed |= !ok;
        report.row([
            format!("golden {}", golden.expected),
            (if ok { "PASS" } else { "FAIL" }).to_string(),
            "-".to_string(),
            "-".to_string(),
            detail,
        ]);
    }
    Ok(Outcome { report, check_failed: failed })
}

/// Runs a golden command and compares its TSV output with the stored file.
pub fn check_golden(golden: &crate::config::GoldenSpec, base: &Path) -> (bool, String) {
    let run = || -> Result<(String, String), LabError> {
        let command = Command::parse(&golden.command)
            .filter(|c| *c != Command::Selfcheck)
            .ok_or_else(|| LabError::Config(format!("unknown golden command {:?}", golden.command)))?;
        let config_path = base.join(&golden.config);
        let config = RunConfig::load(&config_path)?;
        let parent = config_path.parent().unwrap_or(base).to_path_buf();
        let actual = run(command, &config, &parent)?.report.render(Format::Tsv);
        let expected = std::fs::read_to_string(base.join(&golden.expected))?;
        Ok((actual, expected))
    };
    match run() {
        Ok((actual, expected)) if actual == expected => (true, "matches".to_string()),
        Ok((actual, expected)) => {
            let line = actual
                .lines()
                .zip(expected.lines())
                .position(|(a, b)| a != b)
                .unwrap_or_else(|| actual.lines().count().min(expected.lines().count()));
            (false, format!("differs at line {}", line + 1))
        }
        Err(e) => (false, e.to_string()),
    }
}
