//! Polynomial rings and sparse polynomials in canonical form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};

/// `K[x_0, ..., x_n]` with a fixed term order.
#[derive(Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: TermOrder,
}

pub type Ring<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: TermOrder) -> Result<Ring<F>> {
        if names.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        if let TermOrder::BlockElim(k) = order {
            if k >= names.len() {
                return Err(Error::InvalidArgument(format!(
                    "cannot eliminate {k} of {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing { field, names, order }))
    }

    /// Ring on `x0, ..., x{n-1}` with degrevlex.
    pub fn standard(field: F, nvars: usize) -> Ring<F> {
        let names = (0..nvars).map(|i| format!("x{i}")).collect();
        Self::new(field, names, TermOrder::DegRevLex).expect("valid standard ring")
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }
    #[inline]
    pub fn names(&self) -> &[String] {
        &self.names
    }
    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }
    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Result<Ring<F>> {
        Self::new(self.field.clone(), self.names.clone(), order)
    }

    pub fn with_names(&self, names: Vec<String>) -> Result<Ring<F>> {
        Self::new(self.field.clone(), names, self.order)
    }
}

pub fn same_ring<F: Field>(a: &Ring<F>, b: &Ring<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn var<F: Field>(ring: &Ring<F>, i: usize) -> Polynomial<F> {
    let m = Monomial::var(ring.nvars(), i, 1).expect("exponent 1");
    Polynomial::monomial(ring, m, ring.field().one())
}

/// A polynomial: nonzero terms, strictly decreasing in the ring's order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring<F>, c: F::Elem) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring<F>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn monomial(ring: &Ring<F>, m: Monomial, c: F::Elem) -> Self {
        let terms = if ring.field().is_zero(&c) { vec![] } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary terms (any order, repeats allowed).
    pub fn from_terms(ring: &Ring<F>, mut terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already sorted and free of zeros.
    pub(crate) fn from_sorted_terms(ring: &Ring<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }
    #[inline]
    pub fn field(&self) -> &F {
        self.ring.field()
    }
    #[inline]
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }
    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }
    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }
    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Common degree of all terms, `None` if zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn involves_var(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(i) > 0)
    }

    pub fn coeff_of(&self, m: &Monomial) -> F::Elem {
        self.terms
            .binary_search_by(|t| self.ring.cmp(m, &t.0))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring.names(),
                other.ring.names()
            )))
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let field = self.field();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: &F::Elem| if negate_other { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !field.is_zero(&c) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), conv(&t.1))));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let field = self.field();
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if short.len() == 1 {
            let (m, c) = &short.terms[0];
            return Ok(long.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.try_mul(mb)?;
                let p = field.mul(ca, cb);
                acc.entry(m)
                    .and_modify(|c| *c = field.add(c, &p))
                    .or_insert(p);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`; monomial multiplication preserves the order of terms.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Scaled to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Replaces `x_i` by `images[i]` (all in a common target ring).
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Arity {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Err(Error::Arity { expected: 1, got: 0 }),
        };
        for p in images {
            if !same_ring(&p.ring, &target) {
                return Err(Error::RingMismatch("substitution images live in different rings".into()));
            }
        }
        let field = target.field().clone();
        let mut powers: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                let e = e as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().try_mul(&images[i])?;
                    powers[i].push(next);
                }
                prod = prod.try_mul(&powers[i][e])?;
            }
            for (mm, cc) in prod.terms {
                acc.entry(mm)
                    .and_modify(|x| *x = field.add(x, &cc))
                    .or_insert(cc);
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        Ok(Polynomial::from_terms(&target, terms))
    }

    /// Re-expresses the polynomial in `target`, mapping every monomial through `f`.
    pub fn map_monomials(&self, target: &Ring<F>, f: impl Fn(&Monomial) -> Monomial) -> Polynomial<F> {
        let terms = self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, possibly a different order.
    pub fn to_ring(&self, target: &Ring<F>) -> Result<Polynomial<F>> {
        if target.nvars() != self.ring.nvars() || target.field() != self.field() {
            return Err(Error::RingMismatch("target ring has different variables or field".into()));
        }
        Ok(self.map_monomials(target, |m| m.clone()))
    }

    /// Divides out the largest power of `x_i` dividing every term.
    pub fn strip_var(&self, i: usize) -> Polynomial<F> {
        let k = self.terms.iter().map(|t| t.0.exp(i)).min().unwrap_or(0);
        if k == 0 {
            return self.clone();
        }
        let d = Monomial::var(self.ring.nvars(), i, k).expect("within cap");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (d.quotient_of(m).expect("divisible"), c.clone()))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|t| t.0.degree() == d).cloned().collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a, F: Field> std::ops::$tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$f(rhs).expect("ring mismatch in polynomial arithmetic")
            }
        }
    };
}
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

/// The arithmetic operations exposed through [`poly_arith`].
pub enum ArithOp<'a, F: Field> {
    Add(&'a Polynomial<F>, &'a Polynomial<F>),
    Sub(&'a Polynomial<F>, &'a Polynomial<F>),
    Mul(&'a Polynomial<F>, &'a Polynomial<F>),
    Scale(&'a Polynomial<F>, F::Elem),
    Substitute(&'a Polynomial<F>, &'a [Polynomial<F>]),
}

pub fn poly_arith<F: Field>(op: ArithOp<'_, F>) -> Result<Polynomial<F>> {
    match op {
        ArithOp::Add(a, b) => a.try_add(b),
        ArithOp::Sub(a, b) => a.try_sub(b),
        ArithOp::Mul(a, b) => a.try_mul(b),
        ArithOp::Scale(a, c) => Ok(a.scale(&c)),
        ArithOp::Substitute(a, imgs) => a.substitute(imgs),
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let ms = fmt_monomial(m, names);
            if m.is_one() {
                write!(f, "{}", field.format(&abs))?;
            } else if field.is_one(&abs) {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{}*{ms}", field.format(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn ring() -> Ring<PrimeField> {
        PolyRing::standard(PrimeField::default_field(), 3)
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x0, x1) = (var(&r, 0), var(&r, 1));
        let p = &(&x0 + &x1) * &(&x0 - &x1);
        let expect = &(&x0 * &x0) - &(&x1 * &x1);
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x0^2 - x1^2");
    }

    #[test]
    fn scale_by_zero() {
        let r = ring();
        assert!(var(&r, 0).scale(&0).is_zero());
    }

    #[test]
    fn conic_parametrization_substitutes_to_zero() {
        let r = ring();
        let params = PolyRing::new(
            PrimeField::default_field(),
            vec!["u".into(), "v".into()],
            TermOrder::DegRevLex,
        )
        .unwrap();
        let (u, v) = (var(&params, 0), var(&params, 1));
        let imgs = vec![&u * &u, &u * &v, &v * &v];
        let f = &(&var(&r, 0) * &var(&r, 2)) - &(&var(&r, 1) * &var(&r, 1));
        assert!(f.substitute(&imgs).unwrap().is_zero());
        assert!(matches!(f.substitute(&imgs[..2]), Err(Error::Arity { .. })));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = var(&ring(), 0);
        let other = PolyRing::standard(PrimeField::new(7).unwrap(), 3);
        let b = var(&other, 0);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn duplicate_names_rejected() {
        let r = PolyRing::new(Rationals, vec!["x".into(), "x".into()], TermOrder::DegRevLex);
        assert_eq!(r.unwrap_err(), Error::DuplicateVariable("x".into()));
    }

    #[test]
    fn homogeneous_degree_tracking() {
        let r = ring();
        let p = &(&var(&r, 0) * &var(&r, 1)) + &(&var(&r, 2) * &var(&r, 2));
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = &p + &var(&r, 0);
        assert_eq!(q.homogeneous_degree(), None);
        assert_eq!(q.component(2), p);
    }
}
