//! Invariants of a curve in one record, and comparison of fixtures against
//! their expected values.

use serde::Serialize;

use crate::bounds::bound_ballico;
use crate::constructions::fixtures::{fixture, manifest, Expected, FixtureObject};
use crate::constructions::{analyze_image, minimal_ci_degrees, Parametrization};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::regularity::{general_section, regularity_curve, trial_seed};

/// Which of the costlier invariants to compute.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Want {
    /// Minimal complete-intersection degrees of the curve.
    pub alpha: bool,
    /// Minimal complete-intersection degrees of the general section.
    pub section_ci: bool,
    pub saturated: bool,
}

impl Want {
    pub fn all() -> Self {
        Want {
            alpha: true,
            section_ci: true,
            saturated: true,
        }
    }

    fn for_expected(e: &Expected) -> Self {
        Want {
            alpha: e.alpha.is_some(),
            section_ci: e.section_ci.is_some(),
            saturated: e.saturated.is_some(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub degree: i64,
    pub hilbert_polynomial: Option<[i64; 2]>,
    pub rho: u32,
    pub reg: u32,
    pub rho_z: u32,
    pub sat_j: u32,
    pub case: u8,
    pub alpha_i: Option<u32>,
    pub omega_i: Option<u32>,
    pub generator_degrees: Option<Vec<u32>>,
    pub alpha: Option<Vec<u32>>,
    pub section_ci: Option<Vec<u32>>,
    pub saturated: Option<bool>,
    pub section_in_hyperplane: Option<bool>,
    /// `ceil((deg - 1) / (n - 1))`, only for integral curves.
    pub ballico: Option<u64>,
    pub warnings: Vec<String>,
}

/// Invariants of the curve defined by `i` (assumed saturated unless `want.saturated`).
pub fn curve_invariants<F: Field>(i: &Ideal<F>, seed: u64, trials: usize, integral: bool, want: Want) -> Result<Invariants> {
    let sat = if want.saturated { Some(i.is_saturated()?) } else { None };
    let h = i.hilbert()?;
    if h.dim != 1 {
        return Err(Error::Dimension { expected: 1, got: h.dim });
    }
    let r = regularity_curve(i, seed, trials)?;
    let mut warnings = r.warnings.clone();
    let gens = i.generator_degrees()?;
    let p0 = h.polynomial.eval(0);
    let sec = general_section(i, seed, trials)?;
    let alpha = if want.alpha {
        let w = minimal_ci_degrees(i, trials, trial_seed(seed, 500), integral)?;
        warnings.extend(w.warnings.iter().cloned());
        Some(w.degrees)
    } else {
        None
    };
    let section_ci = if want.section_ci {
        let w = minimal_ci_degrees(&sec.section_ideal, trials, trial_seed(seed, 600), false)?;
        warnings.extend(w.warnings.iter().cloned());
        Some(w.degrees)
    } else {
        None
    };
    warnings.sort();
    warnings.dedup();
    Ok(Invariants {
        degree: h.degree,
        hilbert_polynomial: Some([h.polynomial.eval(1) - p0, p0]),
        rho: r.rho_x,
        reg: r.reg_x,
        rho_z: r.rho_z,
        sat_j: r.sat_j,
        case: r.case.number(),
        alpha_i: gens.first().copied(),
        omega_i: gens.last().copied(),
        generator_degrees: Some(gens),
        alpha,
        section_ci,
        saturated: sat,
        section_in_hyperplane: Some(r.section_degenerate),
        ballico: if integral { Some(bound_ballico(h.degree as u64, i.nvars() - 1)?) } else { None },
        warnings,
    })
}

/// Invariants of a parametrized curve computed inside its image algebra.
pub fn image_invariants<F: Field>(p: &Parametrization<F>, seed: u64, trials: usize) -> Result<Invariants> {
    let a = analyze_image(p, seed, trials)?;
    let r = &a.report;
    Ok(Invariants {
        degree: a.degree,
        hilbert_polynomial: Some([a.degree, a.hilbert_constant]),
        rho: r.rho_x,
        reg: r.reg_x,
        rho_z: r.rho_z,
        sat_j: r.sat_j,
        case: r.case.number(),
        alpha_i: Some(a.alpha),
        omega_i: Some(a.omega),
        generator_degrees: None,
        alpha: None,
        section_ci: None,
        saturated: Some(true),
        section_in_hyperplane: Some(r.section_degenerate),
        ballico: Some(bound_ballico(a.degree as u64, p.target().nvars() - 1)?),
        warnings: r.warnings.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub invariant: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn show<T: std::fmt::Debug>(v: &Option<T>) -> String {
    match v {
        Some(x) => format!("{x:?}"),
        None => "-".into(),
    }
}

/// One row per expected value.
pub fn compare(e: &Expected, inv: &Invariants) -> Vec<Comparison> {
    let mut out = Vec::new();
    let mut row = |name: &str, exp: String, got: String| {
        out.push(Comparison {
            invariant: name.into(),
            pass: exp == got,
            expected: exp,
            computed: got,
        })
    };
    if let Some(v) = e.degree {
        row("degree", format!("{v:?}"), format!("{:?}", inv.degree));
    }
    if let Some(v) = e.hilbert_polynomial {
        row("hilbert_polynomial", format!("{v:?}"), show(&inv.hilbert_polynomial));
    }
    if let Some(v) = e.rho {
        row("rho", format!("{v:?}"), format!("{:?}", inv.rho));
    }
    if let Some(v) = e.reg {
        row("reg", format!("{v:?}"), format!("{:?}", inv.reg));
    }
    if let Some(v) = e.rho_z {
        row("rho_z", format!("{v:?}"), format!("{:?}", inv.rho_z));
    }
    if let Some(v) = &e.alpha {
        row("alpha", format!("{v:?}"), show(&inv.alpha));
    }
    if let Some(v) = e.alpha_i {
        row("alpha_i", format!("{v:?}"), show(&inv.alpha_i));
    }
    if let Some(v) = e.omega_i {
        row("omega_i", format!("{v:?}"), show(&inv.omega_i));
    }
    if let Some(v) = e.case {
        row("case", format!("{v:?}"), format!("{:?}", inv.case));
    }
    if let Some(v) = &e.section_ci {
        row("section_ci", format!("{v:?}"), show(&inv.section_ci));
    }
    if let Some(v) = e.ballico {
        row("ballico", format!("{v:?}"), show(&inv.ballico));
    }
    if let Some(v) = e.saturated {
        row("saturated", format!("{v:?}"), show(&inv.saturated));
    }
    if let Some(v) = e.section_in_hyperplane {
        row("section_in_hyperplane", format!("{v:?}"), show(&inv.section_in_hyperplane));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub name: String,
    pub field: String,
    pub seed: u64,
    pub invariants: Option<Invariants>,
    pub rows: Vec<Comparison>,
    pub error: Option<String>,
    pub seconds: f64,
}

impl FixtureCheck {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.rows.iter().all(|r| r.pass)
    }
}

/// Parametrized curves too large to implicitize; their invariants come from the image algebra.
pub const SLOW_FIXTURES: [&str; 2] = ["ex36-1", "ex44-1-c0"];

pub fn fast_fixture_names() -> Vec<&'static str> {
    manifest()
        .iter()
        .map(|e| e.name.as_str())
        .filter(|n| !SLOW_FIXTURES.contains(n))
        .collect()
}

pub fn all_fixture_names() -> Vec<&'static str> {
    manifest().iter().map(|e| e.name.as_str()).collect()
}

/// Builds the fixture, computes what its record asks for and compares.
pub fn check_fixture<F: Field>(field: F, name: &str, seed: u64, trials: usize) -> FixtureCheck {
    let start = std::time::Instant::now();
    let fname = field.name();
    let res = (|| -> Result<(Invariants, Vec<Comparison>)> {
        let fx = fixture(field, name, seed)?;
        let want = Want::for_expected(&fx.expected);
        let inv = match &fx.object {
            FixtureObject::Ideal(i) => curve_invariants(i, seed, trials, fx.integral, want)?,
            FixtureObject::Parametrization(p) if SLOW_FIXTURES.contains(&name) => image_invariants(p, seed, trials)?,
            FixtureObject::Parametrization(p) => {
                let bound = p.degree() + 2;
                let imp = crate::constructions::implicitize(p, crate::constructions::ImplicitMethod::LinearAlgebra, Some(bound))?;
                if imp.possibly_truncated {
                    return Err(Error::Inconsistent(format!("implicitization possibly truncated at degree {bound}")));
                }
                curve_invariants(&imp.ideal, seed, trials, fx.integral, want)?
            }
        };
        let rows = compare(&fx.expected, &inv);
        Ok((inv, rows))
    })();
    let seconds = start.elapsed().as_secs_f64();
    match res {
        Ok((inv, rows)) => FixtureCheck {
            name: name.into(),
            field: fname,
            seed,
            invariants: Some(inv),
            rows,
            error: None,
            seconds,
        },
        Err(e) => FixtureCheck {
            name: name.into(),
            field: fname,
            seed,
            invariants: None,
            rows: Vec::new(),
            error: Some(e.to_string()),
            seconds,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn monomial_fixtures_match() {
        for name in ["ex42-1b", "ex42-2b", "twisted-cubic"] {
            let c = check_fixture(PrimeField::default_field(), name, 0, 3);
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn compare_flags_mismatch() {
        let e = Expected {
            degree: Some(3),
            rho: Some(1),
            ..Expected::default()
        };
        let inv = Invariants {
            degree: 3,
            rho: 0,
            ..Invariants::default()
        };
        let rows = compare(&e, &inv);
        assert_eq!(rows.iter().map(|r| r.pass).collect::<Vec<_>>(), vec![true, false]);
    }
}
