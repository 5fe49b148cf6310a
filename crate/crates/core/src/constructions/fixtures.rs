//! Named example curves and their expected invariants.
//!
//! Expected values are read from `data/fixtures.json`. Curves described as
//! general are built from seeded random choices.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::constructions::liaison::{basic_double_link_general, link, random_form, CIWitness};
use crate::constructions::param::{implicitize, ImplicitMethod, Parametrization};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linear_change::{linear_form, rng_for};
use crate::poly::{PolyRing, Polynomial, Ring};
use crate::regularity::trial_seed;

const MANIFEST: &str = include_str!("../../data/fixtures.json");

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    /// `[a, b]` for `P(t) = a t + b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_polynomial: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_z: Option<u32>,
    /// Minimal degrees of a complete intersection containing the curve.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega_i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    /// Minimal complete-intersection degrees for the general hyperplane section.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_ci: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ballico: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturated: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub section_in_hyperplane: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub name: String,
    pub kind: String,
    pub seeded: bool,
    pub integral: bool,
    pub description: String,
    pub expected: Expected,
}

pub fn manifest() -> &'static [ManifestEntry] {
    static M: OnceLock<Vec<ManifestEntry>> = OnceLock::new();
    M.get_or_init(|| serde_json::from_str(MANIFEST).expect("fixture manifest is valid JSON"))
}

pub fn manifest_entry(name: &str) -> Result<&'static ManifestEntry> {
    manifest()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

#[derive(Clone, Debug)]
pub enum FixtureObject<F: Field> {
    Ideal(Ideal<F>),
    Parametrization(Parametrization<F>),
}

#[derive(Clone, Debug)]
pub struct Fixture<F: Field> {
    pub name: String,
    pub seed: u64,
    pub integral: bool,
    pub object: FixtureObject<F>,
    pub expected: Expected,
}

impl<F: Field> Fixture<F> {
    pub fn ideal(&self) -> Option<&Ideal<F>> {
        match &self.object {
            FixtureObject::Ideal(i) => Some(i),
            FixtureObject::Parametrization(_) => None,
        }
    }

    pub fn parametrization(&self) -> Option<&Parametrization<F>> {
        match &self.object {
            FixtureObject::Parametrization(p) => Some(p),
            FixtureObject::Ideal(_) => None,
        }
    }
}

pub const MONOMIAL_CURVES: [(&str, &[&str]); 3] = [
    ("ex42-1b", &["x0^2", "x1^3", "x2^4", "x1*x2^2*x3", "x0*x1^2*x2"]),
    ("ex42-2b", &["x0^2", "x1^3", "x2^4", "x0*x1", "x0*x2", "x0*x3"]),
    ("ex42-3", &["x0^2", "x1^3", "x2^3", "x0*x1", "x0*x3"]),
];

pub const DEGREE_30: [&str; 5] = [
    "u^30 + v^30",
    "u^29*v + u^19*v^11 + u^9*v^21",
    "u^29*v + u^18*v^12 + u^8*v^22",
    "u^27*v^3 + u^17*v^13 + u^7*v^23",
    "u^26*v^4 + u^16*v^14 + u^6*v^24",
];

pub const DEGREE_31: [&str; 4] = ["u^31", "u^25*v^6 + v^31", "u^23*v^8", "u^21*v^10"];

pub const DEGREE_12: [&str; 4] = ["u^12 + v^12", "u^11*v + u*v^11", "u^10*v^2 + v^12", "u^9*v^3"];

/// Builds the named fixture over `field`. `seed` only matters for seeded fixtures.
pub fn fixture<F: Field>(field: F, name: &str, seed: u64) -> Result<Fixture<F>> {
    let entry = manifest_entry(name)?;
    let object = match name {
        "twisted-cubic" => {
            let r = PolyRing::standard(field, 4);
            FixtureObject::Ideal(Ideal::from_strs(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])?)
        }
        "rational-quartic-p3" => FixtureObject::Ideal(rational_quartic(field, seed)?),
        "elliptic-quintic-p3" => FixtureObject::Ideal(elliptic_quintic_p3(field, seed)?),
        "ex36-1" => FixtureObject::Parametrization(Parametrization::from_strs(field, &DEGREE_30)?),
        "ex36-2" => {
            let c0 = elliptic_quintic_p3(field, seed)?;
            FixtureObject::Ideal(double_links(&c0, &[[1, 5], [1, 7]], seed)?)
        }
        "ex36-3" => {
            let c0 = rational_quartic(field, seed)?;
            FixtureObject::Ideal(double_links(&c0, &[[1, 4], [1, 6]], seed)?)
        }
        "ex42-1a" => FixtureObject::Ideal(elliptic_sextic_p4(field, seed)?),
        "ex42-2a" => FixtureObject::Ideal(elliptic_quintic_p4(field, seed)?),
        "ex42-1b" | "ex42-2b" | "ex42-3" => {
            let gens = MONOMIAL_CURVES.iter().find(|(n, _)| *n == name).unwrap().1;
            let r = PolyRing::standard(field, 5);
            FixtureObject::Ideal(Ideal::from_strs(&r, gens)?)
        }
        "ex44-1-c0" => FixtureObject::Parametrization(Parametrization::from_strs(field, &DEGREE_31)?),
        "ex44-2-c0" => FixtureObject::Parametrization(Parametrization::from_strs(field, &DEGREE_12)?),
        "ex44-2" => {
            let p = Parametrization::from_strs(field, &DEGREE_12)?;
            // the curve has omega = 11; search two degrees beyond
            let c0 = implicitize(&p, ImplicitMethod::LinearAlgebra, Some(13))?;
            if c0.possibly_truncated {
                return Err(Error::Inconsistent("implicitization of the degree-12 curve truncated".into()));
            }
            FixtureObject::Ideal(double_links(&c0.ideal, &[[1, 9]], seed)?)
        }
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    Ok(Fixture {
        name: name.to_string(),
        seed,
        integral: entry.integral,
        object,
        expected: entry.expected.clone(),
    })
}

fn double_links<F: Field>(i: &Ideal<F>, types: &[[u32; 2]], seed: u64) -> Result<Ideal<F>> {
    let mut cur = i.clone();
    for (k, t) in types.iter().enumerate() {
        cur = basic_double_link_general(&cur, t, trial_seed(seed, 200 + k))?.ideal;
    }
    Ok(cur)
}

/// Image of four random binary quartics.
pub fn rational_quartic<F: Field>(field: F, seed: u64) -> Result<Ideal<F>> {
    let params = PolyRing::new(field.clone(), vec!["u".into(), "v".into()], crate::monomial::TermOrder::DegRevLex)?;
    let target = PolyRing::standard(field, 4);
    for k in 0..crate::linear_change::MAX_DRAWS {
        let mut rng = rng_for(trial_seed(seed, 100 + k));
        let images: Vec<Polynomial<F>> = (0..4).map(|_| random_form(&params, 4, &mut rng)).collect();
        let p = Parametrization::new(&params, &target, images)?;
        if p.common_factor_degree() > 0 {
            continue;
        }
        let r = implicitize(&p, ImplicitMethod::LinearAlgebra, Some(5))?;
        let h = r.ideal.hilbert()?;
        if !r.possibly_truncated && h.degree == 4 && h.polynomial.eval(0) == 1 && r.ideal.component_dim(1)? == 0 {
            return Ok(r.ideal);
        }
    }
    Err(Error::Exhausted("no smooth rational quartic drawn".into()))
}

/// Residual to a seeded rational quartic in two general cubics.
pub fn elliptic_quintic_p3<F: Field>(field: F, seed: u64) -> Result<Ideal<F>> {
    let rq = rational_quartic(field, seed)?;
    for k in 0..crate::linear_change::MAX_DRAWS {
        let s = trial_seed(seed, 150 + k);
        let mut rng = rng_for(s);
        let f = vec![rq.random_element(3, &mut rng)?, rq.random_element(3, &mut rng)?];
        let Ok(w) = CIWitness::from_polys(f, s) else { continue };
        let y = link(&rq, &w)?.ideal;
        let h = y.hilbert()?;
        if h.degree == 5 && h.polynomial.eval(0) == 0 {
            return Ok(y);
        }
    }
    Err(Error::Exhausted("no elliptic quintic drawn".into()))
}

/// Residual to two skew lines in three general quadrics.
pub fn elliptic_sextic_p4<F: Field>(field: F, seed: u64) -> Result<Ideal<F>> {
    let r = PolyRing::standard(field, 5);
    let lines = Ideal::from_strs(&r, &["x0", "x1", "x2"])?.intersect(&Ideal::from_strs(&r, &["x2", "x3", "x4"])?)?;
    for k in 0..crate::linear_change::MAX_DRAWS {
        let s = trial_seed(seed, 300 + k);
        let mut rng = rng_for(s);
        let q = (0..3).map(|_| lines.random_element(2, &mut rng)).collect::<Result<Vec<_>>>()?;
        let Ok(w) = CIWitness::from_polys(q, s) else { continue };
        let y = link(&lines, &w)?.ideal;
        let h = y.hilbert()?;
        if h.degree == 6 && h.polynomial.eval(0) == 0 && y.component_dim(1)? == 0 {
            return Ok(y);
        }
    }
    Err(Error::Exhausted("no elliptic sextic drawn".into()))
}

/// Pfaffians of order 4 of a random skew-symmetric 5x5 matrix of linear forms.
pub fn elliptic_quintic_p4<F: Field>(field: F, seed: u64) -> Result<Ideal<F>> {
    let r: Ring<F> = PolyRing::standard(field.clone(), 5);
    for k in 0..crate::linear_change::MAX_DRAWS {
        let mut rng = rng_for(trial_seed(seed, 400 + k));
        let mut m: Vec<Vec<Polynomial<F>>> = vec![vec![Polynomial::zero(&r); 5]; 5];
        for i in 0..5 {
            for j in i + 1..5 {
                let c: Vec<F::Elem> = (0..5).map(|_| field.random(&mut rng)).collect();
                let l = linear_form(&r, &c);
                m[j][i] = l.neg();
                m[i][j] = l;
            }
        }
        let pf = |a: usize, b: usize, c: usize, d: usize| -> Polynomial<F> {
            &(&(&m[a][b] * &m[c][d]) - &(&m[a][c] * &m[b][d])) + &(&m[a][d] * &m[b][c])
        };
        let gens: Vec<Polynomial<F>> = (0..5)
            .map(|skip| {
                let idx: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
                pf(idx[0], idx[1], idx[2], idx[3])
            })
            .collect();
        let i = Ideal::new(&r, gens)?;
        let h = i.hilbert()?;
        if h.dim == 1 && h.degree == 5 && h.polynomial.eval(0) == 0 {
            return Ok(i);
        }
    }
    Err(Error::Exhausted("no elliptic normal quintic drawn".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn manifest_parses_and_covers_builders() {
        let names: Vec<&str> = manifest().iter().map(|e| e.name.as_str()).collect();
        assert!(names.contains(&"ex42-1b"));
        assert!(manifest_entry("nope").is_err());
        let e = manifest_entry("ex42-1b").unwrap();
        assert_eq!(e.expected.reg, Some(6));
        assert_eq!(e.expected.alpha, Some(vec![2, 3, 4]));
    }

    #[test]
    fn small_fixtures() {
        let f = PrimeField::default_field();
        for name in ["twisted-cubic", "ex42-1b", "ex42-2b", "ex42-3", "rational-quartic-p3", "elliptic-quintic-p3", "ex42-2a", "ex42-1a"] {
            let fx = fixture(f, name, 1).unwrap();
            let i = fx.ideal().unwrap();
            let h = i.hilbert().unwrap();
            assert_eq!(Some(h.degree), fx.expected.degree, "{name}");
            if let Some([a, b]) = fx.expected.hilbert_polynomial {
                assert_eq!((h.polynomial.eval(1) - h.polynomial.eval(0), h.polynomial.eval(0)), (a, b), "{name}");
            }
        }
        assert!(fixture(f, "unknown", 0).is_err());
    }
}
