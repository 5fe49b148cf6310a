//! Castelnuovo-Mumford regularity of curves and points through general
//! hyperplane sections, satiety, and generic initial ideals.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linear_change::{genericity_warning, hyperplane_ring, LinearChange, MAX_DRAWS};
use crate::monomial_ideal::MonomialIdeal;

pub const DEFAULT_TRIALS: usize = 3;

/// Seed of the `k`-th independent draw derived from a user seed.
pub fn trial_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(k as u64)
}

/// A general hyperplane section `Z` of the scheme defined by `I`.
#[derive(Clone, Debug)]
pub struct SectionResult<F: Field> {
    /// `(I, h)^sat`, in the ring with one variable fewer.
    pub section_ideal: Ideal<F>,
    /// Image of `(I, h)` before saturation.
    pub raw_j: Ideal<F>,
    pub change: LinearChange<F>,
    pub seeds_agreeing: usize,
    /// Seeds that were rejected because the linear form was a zero divisor.
    pub rejected_seeds: Vec<u64>,
    pub warnings: Vec<String>,
}

impl<F: Field> SectionResult<F> {
    /// True when `Z` lies in a hyperplane of its ambient space.
    pub fn is_degenerate(&self) -> Result<bool> {
        Ok(self.section_ideal.component_dim(1)? > 0)
    }
}

fn cut<F: Field>(i: &Ideal<F>, seed: u64) -> Result<(LinearChange<F>, Ideal<F>)> {
    let ring = i.ring();
    let change = LinearChange::hyperplane(ring, seed)?;
    let target = hyperplane_ring(ring)?;
    let images = change.section_images(&target);
    let raw = i.map(&target, |g| g.substitute(&images))?;
    Ok((change, raw))
}

/// Cuts `I` with seeded random hyperplanes.
///
/// A linear form `h` is accepted when `S'/J'` has the Hilbert series
/// numerator of `S/I`, which holds exactly when `h` is a non-zero-divisor
/// on `S/I`. The Hilbert functions of the sections must agree for `trials`
/// accepted seeds.
pub fn general_section<F: Field>(i: &Ideal<F>, seed: u64, trials: usize) -> Result<SectionResult<F>> {
    i.require_homogeneous("general section")?;
    let prof = i.hilbert()?;
    if prof.dim < 1 {
        return Err(Error::Dimension {
            expected: 1,
            got: prof.dim,
        });
    }
    let mut warnings: Vec<String> = genericity_warning(i.field()).into_iter().collect();
    let mut accepted: Vec<(LinearChange<F>, Ideal<F>, Ideal<F>)> = Vec::new();
    let mut rejected = Vec::new();
    let mut k = 0;
    while accepted.len() < trials.max(1) {
        if rejected.len() >= MAX_DRAWS {
            return Err(Error::GenericityNotCertified(format!(
                "{} hyperplanes were zero divisors modulo the ideal",
                rejected.len()
            )));
        }
        let s = trial_seed(seed, k);
        k += 1;
        let (change, raw) = cut(i, s)?;
        if raw.hilbert()?.numerator != prof.numerator {
            rejected.push(s);
            continue;
        }
        let z = raw.saturate()?;
        accepted.push((change, raw, z));
    }
    if !rejected.is_empty() {
        warnings.push(format!("rejected zero-divisor hyperplanes for seeds {rejected:?}"));
    }
    let reference = accepted[0].2.hilbert()?.numerator.clone();
    let agreeing = accepted
        .iter()
        .filter(|(_, _, z)| z.hilbert().map(|h| h.numerator == reference).unwrap_or(false))
        .count();
    if agreeing != accepted.len() {
        return Err(Error::GenericityNotCertified(format!(
            "sections for {} seeds have different Hilbert functions",
            accepted.len()
        )));
    }
    let (change, raw_j, section_ideal) = accepted.swap_remove(0);
    let z = section_ideal.hilbert()?;
    if z.dim != prof.dim - 1 || z.degree != prof.degree {
        return Err(Error::Inconsistent(format!(
            "section has dimension {} and degree {}, expected {} and {}",
            z.dim,
            z.degree,
            prof.dim - 1,
            prof.degree
        )));
    }
    Ok(SectionResult {
        section_ideal,
        raw_j,
        change,
        seeds_agreeing: agreeing,
        rejected_seeds: rejected,
        warnings,
    })
}

/// Satiety of `I`, given its saturation: 0 when saturated, otherwise one
/// more than the last degree in which `I` and `I^sat` differ.
pub fn satiety_with<F: Field>(i: &Ideal<F>, sat: &Ideal<F>) -> Result<u32> {
    let a = i.hilbert()?;
    let b = sat.hilbert()?;
    // both functions equal the common Hilbert polynomial from max(rho) on
    let top = a.rho.max(b.rho) as i64;
    for t in (0..top).rev() {
        if a.h(t) != b.h(t) {
            return Ok(t as u32 + 1);
        }
    }
    Ok(0)
}

pub fn satiety<F: Field>(i: &Ideal<F>) -> Result<u32> {
    let sat = i.saturate()?;
    satiety_with(i, &sat)
}

/// Regularity of a zero-dimensional scheme: `rho + 1`.
pub fn regularity_points<F: Field>(i: &Ideal<F>) -> Result<u32> {
    let h = i.hilbert()?;
    if h.dim != 0 {
        return Err(Error::Dimension { expected: 0, got: h.dim });
    }
    Ok(h.rho + 1)
}

/// Which of the three cases of the hyperplane-section theorem applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// `rho_X + 1 >= reg Z`
    One,
    /// `rho_X + 1 = reg Z - 1`
    Two,
    /// `rho_X + 1 < reg Z - 1`
    Three,
}

impl Case {
    pub fn number(&self) -> u8 {
        match self {
            Case::One => 1,
            Case::Two => 2,
            Case::Three => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub degree: i64,
    /// Least `t >= 0` with `H_X = P_X` from `t` on.
    pub rho_x: u32,
    /// `rho_X + 1` without the clip at zero: 0 when `H_X` and `P_X` already agree at `t = -1`.
    pub rho_x_plus_one: u32,
    pub rho_z: u32,
    pub reg_z: u32,
    pub sat_j: u32,
    /// `max{rho_X + 1, reg Z}`
    pub reg_x: u32,
    /// `min{t >= rho_Z + 1 : Delta H_X(s) = Delta P_X(s) for all s >= t}`
    pub reg_via_delta: u32,
    /// `max{sat J, reg Z}`
    pub reg_via_satiety: u32,
    pub case: Case,
    pub section_degenerate: bool,
    pub seeds_agreeing: usize,
    pub warnings: Vec<String>,
}

/// Case of the theorem, with its satiety prediction checked.
pub fn classify_case(r: &RegularityReport) -> Result<Case> {
    let (rho1, reg_z, sat) = (r.rho_x_plus_one, r.reg_z, r.sat_j);
    let (case, ok, pred) = if rho1 >= reg_z {
        (Case::One, sat == rho1, format!("sat(J) = {rho1}"))
    } else if rho1 + 1 == reg_z {
        (Case::Two, sat < reg_z, format!("sat(J) <= {}", reg_z - 1))
    } else {
        (Case::Three, sat + 1 == reg_z, format!("sat(J) = {}", reg_z - 1))
    };
    if !ok {
        return Err(Error::GenericityNotCertified(format!(
            "case {} predicts {pred}, computed sat(J) = {sat}",
            case.number()
        )));
    }
    Ok(case)
}

/// `min{t >= from : delta H(s) = delta P(s) for every s >= t}`.
fn delta_stabilizes<F: Field>(i: &Ideal<F>, from: u32) -> Result<u32> {
    let h = i.hilbert()?;
    // past rho + 1 the differences agree automatically
    let mut t = h.rho as i64 + 1;
    while t > from as i64 && h.delta(t - 1) == h.delta_p(t - 1) {
        t -= 1;
    }
    Ok(t.max(from as i64) as u32)
}

/// Regularity of a saturated curve ideal through a general hyperplane section.
pub fn regularity_curve<F: Field>(i: &Ideal<F>, seed: u64, trials: usize) -> Result<RegularityReport> {
    let h = i.hilbert()?;
    if h.dim != 1 {
        return Err(Error::Dimension { expected: 1, got: h.dim });
    }
    let sec = general_section(i, seed, trials)?;
    let rho_x = h.rho;
    let rho_z = sec.section_ideal.hilbert()?.rho;
    let reg_z = rho_z + 1;
    let sat_j = satiety_with(&sec.raw_j, &sec.section_ideal)?;
    let rho_x_plus_one = if rho_x == 0 && h.p(-1) == 0 { 0 } else { rho_x + 1 };
    let reg_x = rho_x_plus_one.max(reg_z);
    let reg_via_delta = delta_stabilizes(i, rho_z + 1)?;
    let reg_via_satiety = sat_j.max(reg_z);
    let mut report = RegularityReport {
        degree: h.degree,
        rho_x,
        rho_x_plus_one,
        rho_z,
        reg_z,
        sat_j,
        reg_x,
        reg_via_delta,
        reg_via_satiety,
        case: Case::One,
        section_degenerate: sec.is_degenerate()?,
        seeds_agreeing: sec.seeds_agreeing,
        warnings: sec.warnings.clone(),
    };
    if reg_x != reg_via_delta || reg_x != reg_via_satiety {
        return Err(Error::Inconsistent(format!(
            "regularity formulas disagree: max formula {reg_x}, Delta H formula {reg_via_delta}, satiety formula {reg_via_satiety}"
        )));
    }
    report.case = classify_case(&report)?;
    Ok(report)
}

/// Generic initial ideal for degrevlex: leading terms after random coordinate
/// changes, which must agree for `trials` seeds.
#[derive(Clone, Debug)]
pub struct GinResult {
    pub gin: MonomialIdeal,
    pub borel_fixed: bool,
    pub seeds_agreeing: usize,
    pub warnings: Vec<String>,
}

pub fn gin<F: Field>(i: &Ideal<F>, seed: u64, trials: usize) -> Result<GinResult> {
    i.require_homogeneous("generic initial ideal")?;
    let ring = i.ring();
    let mut warnings: Vec<String> = genericity_warning(i.field()).into_iter().collect();
    let mut results: Vec<MonomialIdeal> = Vec::new();
    for k in 0..trials.max(1) {
        let ch = LinearChange::random(ring, trial_seed(seed, k))?;
        let moved = i.map(ring, |g| ch.apply(g))?;
        results.push(moved.leading_ideal()?);
    }
    if results.iter().any(|m| m != &results[0]) {
        return Err(Error::GenericityNotCertified(format!(
            "initial ideals differ across {} coordinate changes",
            results.len()
        )));
    }
    let gin = results.swap_remove(0);
    let borel_fixed = gin.is_borel_fixed();
    if !borel_fixed {
        let msg = format!("initial ideal {gin:?} is not Borel-fixed");
        if i.field().characteristic() == 0 {
            return Err(Error::GenericityNotCertified(msg));
        }
        warnings.push(format!("{msg} (expected in positive characteristic only up to p-th powers)"));
    }
    if i.field().characteristic() > 0 {
        warnings.push(format!(
            "generic initial ideal computed in characteristic {}",
            i.field().characteristic()
        ));
    }
    Ok(GinResult {
        gin,
        borel_fixed,
        seeds_agreeing: trials.max(1),
        warnings,
    })
}

/// `omega` of the degrevlex generic initial ideal.
pub fn regularity_via_gin<F: Field>(i: &Ideal<F>, seed: u64, trials: usize) -> Result<(u32, GinResult)> {
    let g = gin(i, seed, trials)?;
    Ok((g.gin.max_degree().unwrap_or(0), g))
}

/// `(x0^s, x0^{s-1} x1^{lambda_{s-1}}, ..., x1^{lambda_0})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinShape {
    pub s: u32,
    /// `lambdas[i] = lambda_i`.
    pub lambdas: Vec<u32>,
}

impl GinShape {
    pub fn lambda0(&self) -> u32 {
        self.lambdas[0]
    }

    pub fn degree(&self) -> u32 {
        self.lambdas.iter().sum()
    }

    /// `lambda_i - 2 <= lambda_{i+1} <= lambda_i - 1`.
    pub fn spacing_ok(&self) -> bool {
        self.lambdas
            .windows(2)
            .all(|w| w[1] + 2 >= w[0] && w[1] < w[0])
    }
}

/// Reads off the shape of a Borel-fixed saturated ideal of points in the plane.
/// With `rho_z` given, `lambda_0 = rho_Z + 1` is checked too.
pub fn gin_shape(m: &MonomialIdeal, degree: Option<u32>, rho_z: Option<u32>) -> Result<GinShape> {
    if m.nvars() != 3 {
        return Err(Error::Shape(format!("expected 3 variables, got {}", m.nvars())));
    }
    if !m.is_borel_fixed() {
        return Err(Error::Shape("ideal is not Borel-fixed".into()));
    }
    if m.gens().iter().any(|g| g.exp(2) > 0) {
        return Err(Error::Shape("a generator involves the last variable (ideal not saturated)".into()));
    }
    let s = m
        .gens()
        .iter()
        .find(|g| g.exp(1) == 0 && g.exp(2) == 0)
        .map(|g| g.exp(0))
        .ok_or_else(|| Error::Shape("no pure power of the first variable".into()))?;
    let mut lambdas = Vec::with_capacity(s as usize);
    for i in 0..s {
        let l = m
            .gens()
            .iter()
            .filter(|g| g.exp(0) <= i)
            .map(|g| g.exp(1))
            .min()
            .ok_or_else(|| Error::Shape(format!("no generator bounds x0^{i} x1^b")))?;
        lambdas.push(l);
    }
    let shape = GinShape { s, lambdas };
    if !shape.spacing_ok() {
        return Err(Error::Shape(format!("spacing violated: lambdas {:?}", shape.lambdas)));
    }
    if let Some(d) = degree {
        if shape.degree() != d {
            return Err(Error::Shape(format!("sum of lambdas {} differs from degree {d}", shape.degree())));
        }
    }
    if let Some(r) = rho_z {
        if shape.lambda0() != r + 1 {
            return Err(Error::Shape(format!("lambda_0 = {} but rho_Z + 1 = {}", shape.lambda0(), r + 1)));
        }
    }
    Ok(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::{PolyRing, Polynomial, Ring};

    fn gf(n: usize) -> Ring<PrimeField> {
        PolyRing::standard(PrimeField::default_field(), n)
    }

    fn twisted_cubic<F: Field>(r: &Ring<F>) -> Ideal<F> {
        Ideal::from_strs(r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap()
    }

    #[test]
    fn twisted_cubic_section_and_regularity() {
        let r = gf(4);
        let tc = twisted_cubic(&r);
        let sec = general_section(&tc, 0, 3).unwrap();
        let z = sec.section_ideal.hilbert().unwrap();
        assert_eq!((z.dim, z.degree, z.rho), (0, 3, 1));
        assert_eq!(&z.values[..4], &[1, 3, 3, 3]);
        assert_eq!(regularity_points(&sec.section_ideal).unwrap(), 2);
        let rep = regularity_curve(&tc, 0, 3).unwrap();
        assert_eq!((rep.reg_x, rep.rho_x, rep.rho_z, rep.case), (2, 0, 1, Case::Two));
    }

    #[test]
    fn satiety_of_powers_of_the_maximal_ideal() {
        let r = gf(3);
        let m3 = Ideal::new(
            &r,
            crate::monomial::monomials_of_degree(3, 3)
                .into_iter()
                .map(|m| Polynomial::monomial(&r, m, 1))
                .collect(),
        )
        .unwrap();
        assert_eq!(satiety(&m3).unwrap(), 3);
        assert_eq!(satiety(&twisted_cubic(&gf(4))).unwrap(), 0);
    }

    #[test]
    fn one_point() {
        let r = gf(3);
        let p = Ideal::from_strs(&r, &["x0", "x1"]).unwrap();
        assert_eq!(regularity_points(&p).unwrap(), 1);
        assert!(regularity_points(&twisted_cubic(&gf(4))).is_err());
    }

    #[test]
    fn gin_of_three_points_and_borel_inputs() {
        let r = PolyRing::standard(Rationals, 3);
        let pts = Ideal::from_strs(&r, &["x0*x1", "x0*x2", "x1*x2"]).unwrap();
        let g = gin(&pts, 1, 3).unwrap();
        assert_eq!(g.gin, MonomialIdeal::from_exps(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]));
        let shape = gin_shape(&g.gin, Some(3), Some(1)).unwrap();
        assert_eq!((shape.s, shape.lambdas.clone()), (2, vec![2, 1]));
        let borel = Ideal::from_strs(&r, &["x0^2", "x0*x1", "x1^3"]).unwrap();
        let (w, g) = regularity_via_gin(&borel, 2, 3).unwrap();
        assert_eq!(g.gin, MonomialIdeal::from_exps(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]));
        assert_eq!(w, 3);
    }

    #[test]
    fn shapes() {
        let collinear = MonomialIdeal::from_exps(3, &[&[1, 0, 0], &[0, 4, 0]]);
        let s = gin_shape(&collinear, Some(4), Some(3)).unwrap();
        assert_eq!((s.s, s.lambdas), (1, vec![4]));
        // lambda_1 = lambda_0 violates the spacing
        let bad = MonomialIdeal::from_exps(3, &[&[2, 0, 0], &[1, 2, 0], &[0, 2, 0]]);
        assert!(gin_shape(&bad, None, None).is_err());
    }

    #[test]
    fn line_has_rho_minus_one() {
        let r = PolyRing::standard(PrimeField::default_field(), 4);
        let line = Ideal::from_strs(&r, &["x0", "x1"]).unwrap();
        let rep = regularity_curve(&line, 0, 3).unwrap();
        assert_eq!((rep.rho_x, rep.rho_x_plus_one, rep.sat_j, rep.reg_x, rep.case), (0, 0, 0, 1, Case::Two));
    }

    #[test]
    fn case_assertions() {
        let mut r = RegularityReport {
            degree: 9,
            rho_x: 2,
            rho_x_plus_one: 3,
            rho_z: 4,
            reg_z: 5,
            sat_j: 4,
            reg_x: 5,
            reg_via_delta: 5,
            reg_via_satiety: 5,
            case: Case::Three,
            section_degenerate: true,
            seeds_agreeing: 3,
            warnings: vec![],
        };
        assert_eq!(classify_case(&r).unwrap(), Case::Three);
        r.sat_j = 3;
        assert!(classify_case(&r).is_err());
    }
}
