//! Rational curves given by binary forms, and their implicit equations.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Engine;
use crate::ideal::Ideal;
use crate::linalg;
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};
use crate::poly::{PolyRing, Polynomial, Ring};

/// A map `P^1 -> P^n`, `x_i = f_i(u, v)`, by forms of a common degree.
#[derive(Clone, Debug)]
pub struct Parametrization<F: Field> {
    params: Ring<F>,
    target: Ring<F>,
    images: Vec<Polynomial<F>>,
    degree: u32,
}

/// Binary form of degree `e` as its coefficient vector, index = exponent of `v`.
pub(crate) type Dense<E> = Vec<E>;

impl<F: Field> Parametrization<F> {
    pub fn new(params: &Ring<F>, target: &Ring<F>, images: Vec<Polynomial<F>>) -> Result<Self> {
        if params.nvars() != 2 {
            return Err(Error::InvalidArgument("parameter ring must have two variables".into()));
        }
        if images.len() != target.nvars() {
            return Err(Error::Arity {
                expected: target.nvars(),
                got: images.len(),
            });
        }
        if params.field() != target.field() {
            return Err(Error::RingMismatch("parameter and target rings over different fields".into()));
        }
        let mut degree = None;
        for f in &images {
            if f.is_zero() {
                continue;
            }
            let d = f.homogeneous_degree().ok_or_else(|| Error::NotHomogeneous(f.to_string()))?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::InvalidArgument(format!("images of degrees {e} and {d}")));
                }
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| Error::InvalidArgument("all images are zero".into()))?;
        if degree == 0 {
            return Err(Error::InvalidArgument("constant parametrization".into()));
        }
        Ok(Parametrization {
            params: params.clone(),
            target: target.clone(),
            images,
            degree,
        })
    }

    /// Parses images written in `u, v` into the standard ring `x0..xn` over `field`.
    pub fn from_strs(field: F, images: &[&str]) -> Result<Self> {
        let params = PolyRing::new(field.clone(), vec!["u".into(), "v".into()], TermOrder::DegRevLex)?;
        let target = PolyRing::standard(field, images.len());
        let polys = images
            .iter()
            .map(|s| crate::parse::parse_polynomial(&params, s))
            .collect::<Result<Vec<_>>>()?;
        Parametrization::new(&params, &target, polys)
    }

    pub fn params(&self) -> &Ring<F> {
        &self.params
    }

    pub fn target(&self) -> &Ring<F> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> &F {
        self.target.field()
    }

    pub(crate) fn dense(&self, i: usize) -> Dense<F::Elem> {
        to_dense(&self.images[i], self.degree)
    }

    /// Degree of the common factor of the images.
    pub fn common_factor_degree(&self) -> u32 {
        let field = self.field();
        let dense: Vec<Dense<F::Elem>> = (0..self.images.len()).map(|i| self.dense(i)).collect();
        let nonzero: Vec<&Dense<F::Elem>> = dense.iter().filter(|c| c.iter().any(|x| !field.is_zero(x))).collect();
        // v^k divides f iff the coefficients of index < k vanish
        let ord_v = nonzero
            .iter()
            .map(|c| c.iter().position(|x| !field.is_zero(x)).unwrap())
            .min()
            .unwrap_or(0);
        // f(u, 1) as a univariate polynomial in u, ascending powers
        let mut g: Option<Vec<F::Elem>> = None;
        for c in nonzero {
            let mut uni: Vec<F::Elem> = c.iter().rev().cloned().collect();
            trim(field, &mut uni);
            g = Some(match g {
                None => uni,
                Some(h) => uni_gcd(field, h, uni),
            });
        }
        let deg_g = g.map(|h| h.len().saturating_sub(1)).unwrap_or(0);
        ord_v as u32 + deg_g as u32
    }

    pub fn warnings(&self) -> Vec<String> {
        let g = self.common_factor_degree();
        if g > 0 {
            vec![format!(
                "images share a factor of degree {g}; the image curve has degree at most {}",
                self.degree - g
            )]
        } else {
            Vec::new()
        }
    }

    /// `f(x_0 -> f_0, ...)`, a binary form.
    pub fn pull_back(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        f.substitute(&self.images)
    }
}

pub(crate) fn to_dense<F: Field>(f: &Polynomial<F>, d: u32) -> Dense<F::Elem> {
    let field = f.field();
    let mut out = vec![field.zero(); d as usize + 1];
    for (m, c) in f.terms() {
        out[m.exp(1) as usize] = c.clone();
    }
    out
}

pub(crate) fn dense_mul<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Dense<F::Elem> {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !field.is_zero(y) {
                let p = field.mul(x, y);
                out[i + j] = field.add(&out[i + j], &p);
            }
        }
    }
    out
}

fn trim<F: Field>(field: &F, a: &mut Vec<F::Elem>) {
    while a.last().is_some_and(|x| field.is_zero(x)) {
        a.pop();
    }
}

/// Remainder of `a` by `b` (ascending coefficients, `b` nonzero and trimmed).
fn uni_rem<F: Field>(field: &F, mut a: Vec<F::Elem>, b: &[F::Elem]) -> Vec<F::Elem> {
    let lb = field.inv(b.last().unwrap()).unwrap();
    trim(field, &mut a);
    while a.len() >= b.len() {
        let c = field.mul(a.last().unwrap(), &lb);
        let shift = a.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            let p = field.mul(&c, y);
            a[shift + j] = field.sub(&a[shift + j], &p);
        }
        trim(field, &mut a);
    }
    a
}

fn uni_gcd<F: Field>(field: &F, mut a: Vec<F::Elem>, mut b: Vec<F::Elem>) -> Vec<F::Elem> {
    trim(field, &mut a);
    trim(field, &mut b);
    while !b.is_empty() {
        let r = uni_rem(field, a, &b);
        a = b;
        b = r;
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicitMethod {
    /// Degree-by-degree kernels of the substitution map.
    LinearAlgebra,
    /// Elimination of `u, v` from `x_i - f_i(u, v)`.
    Elimination,
    /// Both, compared.
    Both,
}

#[derive(Clone, Debug)]
pub struct Implicitization<F: Field> {
    /// Saturated ideal of the image curve.
    pub ideal: Ideal<F>,
    /// Set when a minimal generator sits in the top degree searched.
    pub possibly_truncated: bool,
    pub degree_bound: Option<u32>,
    pub warnings: Vec<String>,
}

/// Implicit equations of the image of `p`.
///
/// The linear-algebra method needs a degree bound `D` and returns the ideal
/// generated by the kernels in degrees `<= D`.
pub fn implicitize<F: Field>(
    p: &Parametrization<F>,
    method: ImplicitMethod,
    degree_bound: Option<u32>,
) -> Result<Implicitization<F>> {
    let mut warnings = p.warnings();
    let (gens, truncated) = match method {
        ImplicitMethod::LinearAlgebra => {
            let d = degree_bound.ok_or_else(|| Error::InvalidArgument("linear-algebra method needs a degree bound".into()))?;
            kernel_generators(p, d)?
        }
        ImplicitMethod::Elimination => (eliminate(p)?, false),
        ImplicitMethod::Both => {
            let d = degree_bound.ok_or_else(|| Error::InvalidArgument("linear-algebra method needs a degree bound".into()))?;
            let (g, t) = kernel_generators(p, d)?;
            let e = Ideal::new(p.target(), eliminate(p)?)?;
            let l = Ideal::new(p.target(), g.clone())?.saturate()?;
            if !l.equals(&e)? {
                return Err(Error::Inconsistent(
                    "linear-algebra and elimination implicitizations differ".into(),
                ));
            }
            (g, t)
        }
    };
    for g in &gens {
        if !p.pull_back(g)?.is_zero() {
            return Err(Error::Inconsistent(format!("{g} does not vanish on the parametrization")));
        }
    }
    let ideal = Ideal::new(p.target(), gens)?.saturate()?;
    let h = ideal.hilbert()?;
    if h.dim != 1 {
        return Err(Error::Dimension { expected: 1, got: h.dim });
    }
    let expected = (p.degree() - p.common_factor_degree()) as i64;
    if h.degree != expected {
        if h.degree > 0 && expected % h.degree == 0 {
            warnings.push(format!(
                "image has degree {}, so the map has degree {}",
                h.degree,
                expected / h.degree
            ));
        } else {
            return Err(Error::Inconsistent(format!(
                "image degree {} is incompatible with a parametrization of degree {expected}",
                h.degree
            )));
        }
    }
    if truncated {
        warnings.push(format!(
            "possibly truncated: a generator has the bound degree {}",
            degree_bound.unwrap_or(0)
        ));
    }
    Ok(Implicitization {
        ideal,
        possibly_truncated: truncated,
        degree_bound,
        warnings,
    })
}

/// Images of all degree-`t` monomials, keyed in ascending degrevlex order.
pub(crate) struct PowerImages<E> {
    pub t: u32,
    pub monomials: Vec<Monomial>,
    pub images: Vec<Dense<E>>,
}

pub(crate) fn next_powers<F: Field>(p: &Parametrization<F>, prev: &PowerImages<F::Elem>, dense: &[Dense<F::Elem>]) -> PowerImages<F::Elem> {
    let n = p.target().nvars();
    let t = prev.t + 1;
    let index: rustc_hash::FxHashMap<&Monomial, usize> = prev.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut monomials = monomials_of_degree(n, t);
    monomials.sort_by(|a, b| TermOrder::DegRevLex.cmp(a, b));
    let images = monomials
        .iter()
        .map(|m| {
            let k = (0..n).find(|&k| m.exp(k) > 0).unwrap();
            let mut e: Vec<u32> = m.exps().iter().map(|&x| x as u32).collect();
            e[k] -= 1;
            let q = Monomial::from_exps(&e).unwrap();
            dense_mul(p.field(), &prev.images[index[&q]], &dense[k])
        })
        .collect();
    PowerImages { t, monomials, images }
}

pub(crate) fn first_powers<F: Field>(p: &Parametrization<F>) -> PowerImages<F::Elem> {
    PowerImages {
        t: 0,
        monomials: vec![Monomial::one(p.target().nvars())],
        images: vec![vec![p.field().one()]],
    }
}

/// Minimal generators of the image ideal in degrees `<= bound`.
///
/// In degree `t` the kernel is computed in reduced echelon form with the
/// monomials in ascending order, so each kernel vector has its free monomial
/// as leading term. A kernel vector becomes a new generator exactly when that
/// monomial is not a leading term of the generators found so far.
fn kernel_generators<F: Field>(p: &Parametrization<F>, bound: u32) -> Result<(Vec<Polynomial<F>>, bool)> {
    let field = p.field();
    let ring = p.target();
    let dense: Vec<Dense<F::Elem>> = (0..ring.nvars()).map(|i| p.dense(i)).collect();
    let mut engine = Engine::new(ring, Default::default());
    let mut kept = Vec::new();
    let mut powers = first_powers(p);
    let mut truncated = false;
    for t in 1..=bound {
        powers = next_powers(p, &powers, &dense);
        engine.run_through(Some(t))?;
        let width = (t * p.degree()) as usize + 1;
        let ncols = powers.monomials.len();
        let rows: Vec<Vec<F::Elem>> = (0..width)
            .map(|j| powers.images.iter().map(|img| img[j].clone()).collect())
            .collect();
        let kernel = linalg::kernel(field, rows, ncols);
        for v in kernel {
            let free = v.iter().rposition(|x| !field.is_zero(x)).unwrap();
            let lm = &powers.monomials[free];
            if engine.lm_divides(lm) {
                continue;
            }
            let terms: Vec<(Monomial, F::Elem)> = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(i, c)| (powers.monomials[i].clone(), c))
                .collect();
            let g = Polynomial::from_terms(ring, terms);
            let h = engine.reduce(&g);
            debug_assert!(!h.is_empty());
            engine.insert(h, t);
            kept.push(g);
            if t == bound {
                truncated = true;
            }
        }
    }
    Ok((kept, truncated))
}

/// Elimination in `K[u, v, x_0..x_n]` with `u, v` weighted by 1 and the `x_i` by `d`.
fn eliminate<F: Field>(p: &Parametrization<F>) -> Result<Vec<Polynomial<F>>> {
    let n = p.target().nvars();
    let mut names = p.params().names().to_vec();
    names.extend(p.target().names().iter().cloned());
    let big = PolyRing::new(p.field().clone(), names, TermOrder::BlockElim(2))?;
    let one = p.field().one();
    let gens = (0..n)
        .map(|i| {
            let x = Polynomial::monomial(&big, Monomial::var(n + 2, i + 2, 1).unwrap(), one.clone());
            let f = p.images()[i].map_monomials(&big, |m| m.embed(n + 2, 0));
            &x - &f
        })
        .collect();
    let elim = Ideal::new(&big, gens)?.eliminate(2)?;
    elim.gens().iter().map(|g| g.to_ring(p.target())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;

    #[test]
    fn conic() {
        let p = Parametrization::from_strs(Rationals, &["u^2", "u*v", "v^2"]).unwrap();
        for m in [ImplicitMethod::LinearAlgebra, ImplicitMethod::Elimination, ImplicitMethod::Both] {
            let r = implicitize(&p, m, Some(4)).unwrap();
            let g = r.ideal.minimal_generators().unwrap();
            assert_eq!(g.len(), 1);
            assert_eq!(g[0].monic(), parse_polynomial(p.target(), "x0*x2 - x1^2").unwrap().monic());
            assert!(!r.possibly_truncated);
        }
    }

    #[test]
    fn twisted_cubic_both_methods() {
        let p = Parametrization::from_strs(PrimeField::default_field(), &["u^3", "u^2*v", "u*v^2", "v^3"]).unwrap();
        let r = implicitize(&p, ImplicitMethod::Both, Some(4)).unwrap();
        assert_eq!(r.ideal.generator_degrees().unwrap(), vec![2, 2, 2]);
        assert_eq!(r.ideal.hilbert().unwrap().degree, 3);
    }

    #[test]
    fn truncation_flag() {
        let p = Parametrization::from_strs(Rationals, &["u^3", "u^2*v", "u*v^2", "v^3"]).unwrap();
        let r = implicitize(&p, ImplicitMethod::LinearAlgebra, Some(2)).unwrap();
        assert!(r.possibly_truncated);
    }

    #[test]
    fn common_factor() {
        let p = Parametrization::from_strs(Rationals, &["u^3", "u^2*v", "u*v^2"]).unwrap();
        assert_eq!(p.common_factor_degree(), 1);
        let q = Parametrization::from_strs(Rationals, &["u^2*v + u*v^2", "u*v^2 + v^3", "u^3 + u^2*v"]).unwrap();
        assert_eq!(q.common_factor_degree(), 1);
        let r = implicitize(&q, ImplicitMethod::LinearAlgebra, Some(3)).unwrap();
        assert_eq!(r.ideal.hilbert().unwrap().degree, 2);
        assert_eq!(q.warnings().len(), 1);
        let s = Parametrization::from_strs(Rationals, &["u^4", "u^2*v^2", "v^4"]).unwrap();
        let r = implicitize(&s, ImplicitMethod::LinearAlgebra, Some(3)).unwrap();
        assert_eq!(r.ideal.hilbert().unwrap().degree, 2);
        assert!(r.warnings.iter().any(|w| w.contains("map has degree 2")));
    }

    #[test]
    fn rejects_mixed_degrees() {
        assert!(Parametrization::from_strs(Rationals, &["u^2", "v"]).is_err());
        assert!(Parametrization::from_strs(Rationals, &["0", "0"]).is_err());
    }
}
