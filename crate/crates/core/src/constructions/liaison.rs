//! Basic double links, linkage by complete intersections, and the search for
//! minimal complete-intersection degrees.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{is_regular_sequence, Ideal};
use crate::linear_change::{rng_for, MAX_DRAWS};
use crate::monomial::monomials_of_degree;
use crate::poly::{Polynomial, Ring};
use crate::regularity::trial_seed;

/// A random form of degree `d` with every coefficient drawn independently.
pub fn random_form<F: Field, R: Rng + ?Sized>(ring: &Ring<F>, d: u32, rng: &mut R) -> Polynomial<F> {
    let field = ring.field();
    let terms = monomials_of_degree(ring.nvars(), d)
        .into_iter()
        .map(|m| (m, field.random(rng)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Codimension of the scheme defined by `i`.
pub fn codimension<F: Field>(i: &Ideal<F>) -> Result<usize> {
    let h = i.hilbert()?;
    Ok((i.nvars() as i64 - 1 - h.dim) as usize)
}

#[derive(Clone, Debug)]
pub struct DoubleLink<F: Field> {
    pub ideal: Ideal<F>,
    pub f1: Polynomial<F>,
    pub others: Vec<Polynomial<F>>,
    pub draws: usize,
}

/// `(F_1 I, F_2, ..., F_c)` for a random form `F_1` of degree `a1` and the
/// given `F_2, ..., F_c` in `I` (`c` the codimension of `I`).
pub fn basic_double_link<F: Field>(i: &Ideal<F>, a1: u32, others: &[Polynomial<F>], seed: u64) -> Result<DoubleLink<F>> {
    i.require_homogeneous("basic double link")?;
    let c = codimension(i)?;
    if others.len() + 1 != c {
        return Err(Error::Arity {
            expected: c - 1,
            got: others.len(),
        });
    }
    for f in others {
        if !i.contains(f)? {
            return Err(Error::NotContained(format!("{f} is not in the ideal")));
        }
    }
    for k in 0..MAX_DRAWS {
        let s = trial_seed(seed, k);
        let f1 = random_form(i.ring(), a1, &mut rng_for(s));
        let mut seq = vec![f1.clone()];
        seq.extend(others.iter().cloned());
        if is_regular_sequence(&seq, s)? {
            let link = assemble(i, f1, others.to_vec(), k + 1)?;
            return Ok(link);
        }
    }
    Err(Error::Exhausted(format!(
        "no regular sequence after {MAX_DRAWS} draws of a form of degree {a1}"
    )))
}

/// Basic double link of type `(a_1, ..., a_c)` with `F_2, ..., F_c` general in `I`.
pub fn basic_double_link_general<F: Field>(i: &Ideal<F>, types: &[u32], seed: u64) -> Result<DoubleLink<F>> {
    i.require_homogeneous("basic double link")?;
    let c = codimension(i)?;
    if types.len() != c {
        return Err(Error::Arity {
            expected: c,
            got: types.len(),
        });
    }
    for k in 0..MAX_DRAWS {
        let s = trial_seed(seed, k);
        let mut rng = rng_for(s);
        let f1 = random_form(i.ring(), types[0], &mut rng);
        let others = types[1..]
            .iter()
            .map(|&d| i.random_element(d, &mut rng))
            .collect::<Result<Vec<_>>>()?;
        if others.iter().any(|f| f.is_zero()) {
            return Err(Error::InvalidArgument(format!(
                "the ideal has no nonzero forms of some degree in {:?}",
                &types[1..]
            )));
        }
        let mut seq = vec![f1.clone()];
        seq.extend(others.iter().cloned());
        if is_regular_sequence(&seq, s)? {
            return assemble(i, f1, others, k + 1);
        }
    }
    Err(Error::Exhausted(format!("no regular sequence of type {types:?} after {MAX_DRAWS} draws")))
}

fn assemble<F: Field>(i: &Ideal<F>, f1: Polynomial<F>, others: Vec<Polynomial<F>>, draws: usize) -> Result<DoubleLink<F>> {
    let mut gens: Vec<Polynomial<F>> = i.gens().iter().map(|g| &f1 * g).collect();
    gens.extend(others.iter().cloned());
    let ideal = Ideal::new(i.ring(), gens)?.with_limits(i.limits()).saturate()?;
    // P_{C'}(t) = P_C(t - a_1) + P_W(t) for the complete intersection W
    let mut ci = vec![f1.clone()];
    ci.extend(others.iter().cloned());
    let w = Ideal::new(i.ring(), ci)?;
    let a1 = f1.degree().unwrap() as i64;
    let (pc, pw, pn) = (&i.hilbert()?.polynomial, &w.hilbert()?.polynomial, &ideal.hilbert()?.polynomial);
    for t in 60..64 {
        if pn.eval(t) != pc.eval(t - a1) + pw.eval(t) {
            return Err(Error::Inconsistent(format!(
                "basic double link violates the Hilbert polynomial law at t = {t}"
            )));
        }
    }
    Ok(DoubleLink {
        ideal,
        f1,
        others,
        draws,
    })
}

/// Forms of weakly increasing degrees generating a complete intersection.
#[derive(Clone, Debug)]
pub struct CIWitness<F: Field> {
    pub degrees: Vec<u32>,
    pub polys: Vec<Polynomial<F>>,
    pub trials_used: usize,
    /// Set when a smaller tuple was also realized, so the degrees only bound the minimum.
    pub upper_bound_only: bool,
    pub warnings: Vec<String>,
}

impl<F: Field> CIWitness<F> {
    /// Builds a witness from given forms, checking the regular-sequence condition.
    pub fn from_polys(polys: Vec<Polynomial<F>>, seed: u64) -> Result<Self> {
        if !is_regular_sequence(&polys, seed)? {
            return Err(Error::InvalidArgument("forms are not a regular sequence".into()));
        }
        let mut polys = polys;
        polys.sort_by_key(|p| p.degree());
        Ok(CIWitness {
            degrees: polys.iter().map(|p| p.degree().unwrap()).collect(),
            polys,
            trials_used: 0,
            upper_bound_only: false,
            warnings: Vec::new(),
        })
    }

    pub fn ideal(&self) -> Result<Ideal<F>> {
        Ideal::new(self.polys[0].ring(), self.polys.clone())
    }

    /// `reg(W) = sum (a_i - 1) + 1`.
    pub fn regularity(&self) -> u32 {
        self.degrees.iter().map(|d| d - 1).sum::<u32>() + 1
    }
}

/// Greedy lexicographic search for the least degrees of a complete
/// intersection containing the scheme of `i`.
///
/// Slot `k` takes the least degree `d` (not below slot `k - 1`) for which one
/// of `trials` random elements of `I_d` extends the sequence. With
/// `integral` set, the first two minimal generator degrees are tried first.
pub fn minimal_ci_degrees<F: Field>(i: &Ideal<F>, trials: usize, seed: u64, integral: bool) -> Result<CIWitness<F>> {
    i.require_homogeneous("complete intersection search")?;
    let c = codimension(i)?;
    if c == 0 {
        return Err(Error::InvalidArgument("zero ideal".into()));
    }
    let degs = i.generator_degrees()?;
    let omega = *degs.iter().max().unwrap();
    let mut warnings = Vec::new();
    let mut counter = 0usize;
    if integral && c == 2 && degs.len() >= 2 {
        for _ in 0..trials.max(1) {
            let s = trial_seed(seed, counter);
            counter += 1;
            let mut rng = rng_for(s);
            let seq = vec![i.random_element(degs[0], &mut rng)?, i.random_element(degs[1], &mut rng)?];
            if is_regular_sequence(&seq, s)? {
                let mut w = CIWitness::from_polys(seq, s)?;
                w.trials_used = counter;
                return Ok(w);
            }
        }
        warnings.push("minimal generator degrees do not give a complete intersection; searching".into());
    }
    let mut chosen: Vec<Polynomial<F>> = Vec::new();
    let mut d = degs[0];
    while chosen.len() < c {
        let mut found = None;
        while found.is_none() {
            if d > omega.max(degs[0]) {
                return Err(Error::Exhausted(format!(
                    "slot {} not filled up to degree {}",
                    chosen.len() + 1,
                    d - 1
                )));
            }
            for _ in 0..trials.max(1) {
                let s = trial_seed(seed, counter);
                counter += 1;
                let f = i.random_element(d, &mut rng_for(s))?;
                if f.is_zero() {
                    break;
                }
                let mut seq = chosen.clone();
                seq.push(f.clone());
                if is_regular_sequence(&seq, s)? {
                    found = Some(f);
                    break;
                }
            }
            if found.is_none() {
                d += 1;
            }
        }
        chosen.push(found.unwrap());
    }
    let degrees: Vec<u32> = chosen.iter().map(|p| p.degree().unwrap()).collect();
    // decrementing any single slot should not admit a witness
    let mut upper_bound_only = false;
    for k in 0..c {
        let mut alt = degrees.clone();
        if alt[k] == 0 || (k > 0 && alt[k] - 1 < alt[k - 1]) || alt[k] - 1 < degs[0] {
            continue;
        }
        alt[k] -= 1;
        for _ in 0..trials.max(1) {
            let s = trial_seed(seed, counter);
            counter += 1;
            let mut rng = rng_for(s);
            let seq = alt
                .iter()
                .map(|&e| i.random_element(e, &mut rng))
                .collect::<Result<Vec<_>>>()?;
            if seq.iter().any(|f| f.is_zero()) {
                break;
            }
            if is_regular_sequence(&seq, s)? {
                upper_bound_only = true;
                warnings.push(format!("degrees {alt:?} also admit a complete intersection"));
                break;
            }
        }
    }
    Ok(CIWitness {
        degrees,
        polys: chosen,
        trials_used: counter,
        upper_bound_only,
        warnings,
    })
}

#[derive(Clone, Debug)]
pub struct LinkResult<F: Field> {
    /// `I_W : I`.
    pub ideal: Ideal<F>,
    pub witness_ideal: Ideal<F>,
    /// The residual scheme is empty (`I` equals the complete intersection).
    pub empty: bool,
    /// The Hilbert function identity was checked (points only).
    pub delta_identity_checked: bool,
}

/// The scheme linked to `V(I)` by the complete intersection `W`.
///
/// For points the identity `dH_W(t) = dH_Z(t) + dH_Y(s - t)` and the symmetry
/// `dH_W(t) = dH_W(s - t)`, `s = reg(W) - 1`, are checked for `0 <= t <= s`.
pub fn link<F: Field>(i: &Ideal<F>, w: &CIWitness<F>) -> Result<LinkResult<F>> {
    let wi = w.ideal()?;
    if !crate::poly::same_ring(wi.ring(), i.ring()) {
        return Err(Error::RingMismatch("witness and ideal in different rings".into()));
    }
    for f in &w.polys {
        if !i.contains(f)? {
            return Err(Error::NotContained(format!("{f} is not in the ideal")));
        }
    }
    let y = wi.quotient(i)?;
    let empty = y.is_unit()?;
    let (hz, hw, hy) = (i.hilbert()?, wi.hilbert()?, y.hilbert()?);
    let mut checked = false;
    if hz.dim == 0 {
        let s = w.regularity() as i64 - 1;
        for t in 0..=s {
            if hw.delta(t) != hw.delta(s - t) {
                return Err(Error::GenericityNotCertified(format!(
                    "complete intersection Delta H is not symmetric at t = {t}"
                )));
            }
            if hw.delta(t) != hz.delta(t) + hy.delta(s - t) {
                return Err(Error::GenericityNotCertified(format!("liaison Delta H identity fails at t = {t}")));
            }
        }
        checked = true;
    }
    if hy.dim == hz.dim && hy.degree + hz.degree != hw.degree {
        return Err(Error::Inconsistent(format!(
            "linked degrees {} + {} differ from {}",
            hz.degree, hy.degree, hw.degree
        )));
    }
    Ok(LinkResult {
        ideal: y,
        witness_ideal: wi,
        empty,
        delta_identity_checked: checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn gf(n: usize) -> Ring<PrimeField> {
        PolyRing::standard(PrimeField::default_field(), n)
    }

    fn p<F: Field>(r: &Ring<F>, s: &str) -> Polynomial<F> {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn double_link_of_a_line() {
        let r = gf(4);
        let line = Ideal::from_strs(&r, &["x0", "x1"]).unwrap();
        let l = basic_double_link(&line, 1, &[p(&r, "x0")], 3).unwrap();
        let h = l.ideal.hilbert().unwrap();
        assert_eq!((h.dim, h.degree), (1, 2));
        assert!(basic_double_link(&line, 1, &[p(&r, "x2")], 3).is_err());
    }

    #[test]
    fn double_link_degree_law() {
        let r = gf(4);
        let tc = Ideal::from_strs(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        let l = basic_double_link_general(&tc, &[2, 3], 5).unwrap();
        assert_eq!(l.ideal.hilbert().unwrap().degree, 3 + 6);
    }

    #[test]
    fn link_line_in_ci23() {
        let r = gf(4);
        let line = Ideal::from_strs(&r, &["x0", "x1"]).unwrap();
        let w = CIWitness::from_polys(vec![p(&r, "x0*x2 + x1*x3"), p(&r, "x0*x3^2 + x1*x2^2 + x1^3")], 0).unwrap();
        let y = link(&line, &w).unwrap();
        let h = y.ideal.hilbert().unwrap();
        assert_eq!((h.dim, h.degree), (1, 5));
        assert!(!y.empty);
    }

    #[test]
    fn linking_points_twice() {
        // three coordinate points, linked to one point by two conics
        let r = gf(3);
        let z = Ideal::from_strs(&r, &["x0*x1", "x0*x2", "x1*x2"]).unwrap();
        let w = minimal_ci_degrees(&z, 3, 1, false).unwrap();
        assert_eq!(w.degrees, vec![2, 2]);
        let y = link(&z, &w).unwrap();
        assert!(y.delta_identity_checked);
        assert_eq!(y.ideal.hilbert().unwrap().degree, 1);
        let back = link(&y.ideal, &w).unwrap();
        assert_eq!(back.ideal.hilbert().unwrap().values, z.hilbert().unwrap().values);
        assert!(back.ideal.equals(&z).unwrap());
    }

    #[test]
    fn self_link_is_empty() {
        let r = gf(3);
        let w = CIWitness::from_polys(vec![p(&r, "x0^2 - x1*x2"), p(&r, "x1^2 - x0*x2")], 0).unwrap();
        let y = link(&w.ideal().unwrap(), &w).unwrap();
        assert!(y.empty);
        assert!(y.delta_identity_checked);
    }

    #[test]
    fn ci_degrees() {
        let r = gf(4);
        let tc = Ideal::from_strs(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        let w = minimal_ci_degrees(&tc, 3, 0, false).unwrap();
        assert_eq!(w.degrees, vec![2, 2]);
        assert!(!w.upper_bound_only);
        let w = minimal_ci_degrees(&tc, 3, 0, true).unwrap();
        assert_eq!(w.degrees, vec![2, 2]);
        let q = PolyRing::standard(Rationals, 5);
        let i = Ideal::from_strs(&q, &["x0^2", "x1^3", "x2^4", "x1*x2^2*x3", "x0*x1^2*x2"]).unwrap();
        assert_eq!(minimal_ci_degrees(&i, 3, 0, false).unwrap().degrees, vec![2, 3, 4]);
    }
}
