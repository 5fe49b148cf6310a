//! Polynomial ideals with cached Groebner bases and the usual operations:
//! membership, quotients, saturation, elimination, intersection and
//! minimal generators.

use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{self, Engine, GbLimits};
use crate::hilbert::HilbertProfile;
use crate::monomial::{monomials_of_degree, Monomial, TermOrder};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{same_ring, PolyRing, Polynomial, Ring};

/// Default cap on the exponent searched for saturation witnesses.
pub const WITNESS_CAP: u32 = 64;

#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    limits: GbLimits,
    gb: OnceLock<Vec<Polynomial<F>>>,
    profile: OnceLock<HilbertProfile>,
    mingens: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch("generator outside the ideal's ring".into()));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            limits: GbLimits::default(),
            gb: OnceLock::new(),
            profile: OnceLock::new(),
            mingens: OnceLock::new(),
        })
    }

    pub fn from_strs(ring: &Ring<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| crate::parse::parse_polynomial(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn from_monomial_ideal(ring: &Ring<F>, m: &MonomialIdeal) -> Result<Self> {
        if m.nvars() != ring.nvars() {
            return Err(Error::Arity {
                expected: ring.nvars(),
                got: m.nvars(),
            });
        }
        let one = ring.field().one();
        Ideal::new(
            ring,
            m.gens().iter().map(|g| Polynomial::monomial(ring, g.clone(), one.clone())).collect(),
        )
    }

    pub fn with_limits(mut self, limits: GbLimits) -> Self {
        self.limits = limits;
        self.gb = OnceLock::new();
        self
    }

    pub fn limits(&self) -> GbLimits {
        self.limits
    }
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }
    pub fn field(&self) -> &F {
        self.ring.field()
    }
    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }
    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    fn derived(&self, gens: Vec<Polynomial<F>>) -> Result<Self> {
        Ok(Ideal::new(&self.ring, gens)?.with_limits(self.limits))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn require_homogeneous(&self, op: &str) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::NotHomogeneous(format!("{op} needs homogeneous generators; got {g}"))),
            None => Ok(()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// Reduced Groebner basis in the ring's term order.
    pub fn groebner_basis(&self) -> Result<&[Polynomial<F>]> {
        if self.gb.get().is_none() {
            let g = groebner::groebner(&self.gens, self.limits)?;
            let _ = self.gb.set(g);
        }
        Ok(self.gb.get().unwrap())
    }

    /// Reduced Groebner basis for another order; polynomials live in the re-ordered ring.
    pub fn groebner_in(&self, order: TermOrder) -> Result<Vec<Polynomial<F>>> {
        if order == self.ring.order() {
            return Ok(self.groebner_basis()?.to_vec());
        }
        let r = self.ring.with_order(order)?;
        let gens = self.gens.iter().map(|g| g.to_ring(&r)).collect::<Result<Vec<_>>>()?;
        groebner::groebner(&gens, self.limits)
    }

    /// Leading-term ideal (of a graded order, so the Hilbert function is preserved).
    pub fn leading_ideal(&self) -> Result<MonomialIdeal> {
        let lts: Vec<Monomial> = if self.ring.order().is_graded() || self.is_homogeneous() {
            self.groebner_basis()?
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect()
        } else {
            self.groebner_in(TermOrder::DegRevLex)?
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect()
        };
        Ok(MonomialIdeal::new(self.nvars(), lts))
    }

    pub fn hilbert(&self) -> Result<&HilbertProfile> {
        if self.profile.get().is_none() {
            self.require_homogeneous("Hilbert series")?;
            let p = HilbertProfile::of_monomial_ideal(&self.leading_ideal()?);
            let _ = self.profile.set(p);
        }
        Ok(self.profile.get().unwrap())
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("normal form of a polynomial from another ring".into()));
        }
        Ok(groebner::reduce_by(f, self.groebner_basis()?))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (identical reduced bases).
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("comparing ideals of different rings".into()));
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        self.derived(g)
    }

    pub fn add_generators(&self, extra: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        self.derived(g)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.try_mul(b)?);
            }
        }
        self.derived(g)
    }

    /// `f * I`.
    pub fn scale_by(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        let g = self.gens.iter().map(|a| a.try_mul(f)).collect::<Result<Vec<_>>>()?;
        self.derived(g)
    }

    /// Applies a ring map to the generators.
    pub fn map(&self, target: &Ring<F>, f: impl Fn(&Polynomial<F>) -> Result<Polynomial<F>>) -> Result<Ideal<F>> {
        let g = self.gens.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, g)?.with_limits(self.limits))
    }

    /// Ring with `k` new variables in front, eliminated by a block order.
    fn extended_ring(&self, k: usize) -> Result<Ring<F>> {
        let mut names: Vec<String> = (0..k).map(|i| format!("_t{i}")).collect();
        names.extend(self.ring.names().iter().cloned());
        PolyRing::new(self.field().clone(), names, TermOrder::BlockElim(k))
    }

    fn embed(&self, f: &Polynomial<F>, target: &Ring<F>, k: usize) -> Polynomial<F> {
        f.map_monomials(target, |m| m.embed(self.nvars() + k, k))
    }

    /// Elements of `gb` free of the first `k` variables, mapped back to this ring.
    fn contract(&self, gb: &[Polynomial<F>], k: usize) -> Vec<Polynomial<F>> {
        let n = self.nvars();
        gb.iter()
            .filter(|g| (0..k).all(|i| !g.involves_var(i)))
            .map(|g| g.map_monomials(&self.ring, |m| m.restrict(k..k + n)))
            .collect()
    }

    /// `I ∩ J` as the contraction of `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("intersecting ideals of different rings".into()));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let r = self.extended_ring(1)?;
        let t = crate::poly::var(&r, 0);
        let one_minus_t = &Polynomial::one(&r) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &self.embed(g, &r, 1));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &self.embed(g, &r, 1));
        }
        let gb = groebner::groebner(&gens, self.limits)?;
        self.derived(self.contract(&gb, 1))?.trimmed()
    }

    /// `I : f`.
    pub fn quotient_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let principal = self.derived(vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .gens()
            .iter()
            .map(|g| divide_exact(g, f))
            .collect::<Result<Vec<_>>>()?;
        self.derived(gens)
    }

    /// `I : J = {g : g J ⊆ I}`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("quotient of ideals of different rings".into()));
        }
        if other.is_zero() {
            return Err(Error::InvalidArgument(
                "quotient by the zero ideal (the answer would be the whole ring)".into(),
            ));
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let q = self.quotient_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        acc.unwrap().trimmed()
    }

    /// `I : f^inf` by the added-variable trick: `(I, 1 - t f) ∩ S`.
    pub fn saturate_wrt_elimination(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
        }
        let r = self.extended_ring(1)?;
        let t = crate::poly::var(&r, 0);
        let mut gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| self.embed(g, &r, 1)).collect();
        gens.push(&Polynomial::one(&r) - &(&t * &self.embed(f, &r, 1)));
        let gb = groebner::groebner(&gens, self.limits)?;
        self.derived(self.contract(&gb, 1))
    }

    /// `I : x_j^inf`. For homogeneous ideals a degrevlex basis with `x_j`
    /// moved to the last place is divided by the largest power of `x_j`.
    pub fn saturate_var(&self, j: usize) -> Result<Ideal<F>> {
        if j >= self.nvars() {
            return Err(Error::InvalidArgument(format!("no variable with index {j}")));
        }
        if self.is_monomial() {
            let m = self.leading_ideal_of_gens().saturate_var(j);
            return Ideal::from_monomial_ideal(&self.ring, &m).map(|i| i.with_limits(self.limits));
        }
        if !self.is_homogeneous() {
            return self.saturate_wrt_elimination(&crate::poly::var(&self.ring, j));
        }
        let n = self.nvars();
        if j == n - 1 && self.ring.order() == TermOrder::DegRevLex {
            let out = self.groebner_basis()?.iter().map(|g| g.strip_var(j)).collect();
            return self.derived(out);
        }
        // perm[k] = original index of the k-th variable of the permuted ring
        let perm: Vec<usize> = (0..n).filter(|&i| i != j).chain(std::iter::once(j)).collect();
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.names()[i].clone()).collect();
        let r = PolyRing::new(self.field().clone(), names, TermOrder::DegRevLex)?;
        let gens: Vec<Polynomial<F>> = self
            .gens
            .iter()
            .map(|g| g.map_monomials(&r, |m| m.permute(&perm)))
            .collect();
        let gb = groebner::groebner(&gens, self.limits)?;
        let out = gb
            .iter()
            .map(|g| g.strip_var(n - 1).map_monomials(&self.ring, |m| m.permute(&inv)))
            .collect();
        self.derived(out)
    }

    fn leading_ideal_of_gens(&self) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars(),
            self.gens.iter().filter_map(|g| g.leading_monomial().cloned()).collect(),
        )
    }

    /// `I : f^inf`. Monomials go through the per-variable route, other
    /// polynomials through elimination.
    pub fn saturate_wrt(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::InvalidArgument("saturation by the zero polynomial".into()));
        }
        if f.len() == 1 {
            let m = f.leading_monomial().unwrap();
            let mut cur = self.clone();
            for j in (0..self.nvars()).filter(|&j| m.exp(j) > 0) {
                cur = cur.saturate_var(j)?;
            }
            return Ok(cur);
        }
        self.saturate_wrt_elimination(f)
    }

    /// `I^sat`, the ideal of all `f` with `x_j^r f ∈ I` for every `j` and some `r`.
    ///
    /// Each `K_j = I : x_j^inf` contains `I^sat`; when `K_j` has the Hilbert
    /// polynomial of `I` it agrees with `I` in high degrees and so equals
    /// `I^sat`. Otherwise the intersection of all `K_j` is returned.
    pub fn saturate(&self) -> Result<Ideal<F>> {
        self.require_homogeneous("saturation")?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.is_monomial() {
            let m = self.leading_ideal_of_gens().saturate();
            return Ideal::from_monomial_ideal(&self.ring, &m).map(|i| i.with_limits(self.limits));
        }
        let hp = self.hilbert()?.polynomial.clone();
        let mut all = Vec::new();
        for j in (0..self.nvars()).rev() {
            let k = self.saturate_var(j)?;
            if k.hilbert()?.polynomial == hp {
                return k.reduced_copy();
            }
            all.push(k);
        }
        let mut acc = all.pop().unwrap();
        for k in all {
            acc = acc.intersect(&k)?;
        }
        acc.reduced_copy()
    }

    /// The per-variable saturation route taken literally (intersection of all `I : x_j^inf`).
    pub fn saturate_by_definition(&self) -> Result<Ideal<F>> {
        let mut acc: Option<Ideal<F>> = None;
        for j in 0..self.nvars() {
            let k = self.saturate_wrt_elimination(&crate::poly::var(&self.ring, j))?;
            acc = Some(match acc {
                None => k,
                Some(a) => a.intersect(&k)?,
            });
        }
        Ok(acc.unwrap_or_else(|| self.clone()))
    }

    /// Same ideal, generated by its reduced Groebner basis.
    fn reduced_copy(&self) -> Result<Ideal<F>> {
        let gb = self.groebner_basis()?.to_vec();
        let out = self.derived(gb.clone())?;
        let _ = out.gb.set(gb);
        Ok(out)
    }

    /// Same ideal with a minimal generating set when homogeneous.
    fn trimmed(&self) -> Result<Ideal<F>> {
        if self.is_homogeneous() {
            let g = self.minimal_generators()?.to_vec();
            self.derived(g)
        } else {
            self.reduced_copy()
        }
    }

    pub fn is_saturated(&self) -> Result<bool> {
        let s = self.saturate()?;
        self.contains_ideal(&s)
    }

    /// For every minimal generator `g` of `I^sat` and every variable `x_j`, the
    /// least `r <= cap` with `x_j^r g ∈ I` (`None` if there is none up to `cap`).
    pub fn saturation_witnesses(&self, sat: &Ideal<F>, cap: u32) -> Result<Vec<(Polynomial<F>, Vec<Option<u32>>)>> {
        let mut out = Vec::new();
        for g in sat.minimal_generators()? {
            let mut row = Vec::with_capacity(self.nvars());
            for j in 0..self.nvars() {
                let x = crate::poly::var(&self.ring, j);
                let mut cur = g.clone();
                let mut found = None;
                for r in 0..=cap {
                    if self.contains(&cur)? {
                        found = Some(r);
                        break;
                    }
                    cur = cur.try_mul(&x)?;
                }
                row.push(found);
            }
            out.push((g.clone(), row));
        }
        Ok(out)
    }

    /// `I ∩ K[x_k, ..., x_n]`, as an ideal of the ring on the remaining variables.
    pub fn eliminate(&self, k: usize) -> Result<Ideal<F>> {
        let n = self.nvars();
        if k >= n {
            return Err(Error::InvalidArgument(format!("cannot eliminate {k} of {n} variables")));
        }
        if k == 0 {
            return Ok(self.clone());
        }
        let r = self.ring.with_order(TermOrder::BlockElim(k))?;
        let gens = self.gens.iter().map(|g| g.to_ring(&r)).collect::<Result<Vec<_>>>()?;
        let gb = groebner::groebner(&gens, self.limits)?;
        let sub = PolyRing::new(self.field().clone(), self.ring.names()[k..].to_vec(), TermOrder::DegRevLex)?;
        let kept = gb
            .iter()
            .filter(|g| (0..k).all(|i| !g.involves_var(i)))
            .map(|g| g.map_monomials(&sub, |m| m.restrict(k..n)))
            .collect();
        Ok(Ideal::new(&sub, kept)?.with_limits(self.limits))
    }

    /// A minimal homogeneous generating set. Candidates are taken by
    /// increasing degree, larger leading monomial first, and kept when they
    /// are not in the ideal of the generators kept so far.
    pub fn minimal_generators(&self) -> Result<&[Polynomial<F>]> {
        if self.mingens.get().is_none() {
            self.require_homogeneous("minimal generators")?;
            let g = trim_generators(&self.ring, &self.gens, self.limits)?;
            let _ = self.mingens.set(g);
        }
        Ok(self.mingens.get().unwrap())
    }

    pub fn generator_degrees(&self) -> Result<Vec<u32>> {
        Ok(self
            .minimal_generators()?
            .iter()
            .map(|g| g.degree().unwrap())
            .collect())
    }

    /// Initial degree `alpha_I`.
    pub fn alpha(&self) -> Result<Option<u32>> {
        Ok(self.generator_degrees()?.into_iter().min())
    }

    /// Largest minimal generator degree `omega_I`.
    pub fn omega(&self) -> Result<Option<u32>> {
        Ok(self.generator_degrees()?.into_iter().max())
    }

    /// Basis of `I_d`: `m - NF(m)` for the degree-`d` monomials `m` of the leading-term ideal.
    pub fn component_basis(&self, d: u32) -> Result<Vec<Polynomial<F>>> {
        self.require_homogeneous("graded components")?;
        let lt = self.leading_ideal()?;
        let one = self.field().one();
        let mut out = Vec::new();
        for m in monomials_of_degree(self.nvars(), d) {
            if lt.contains(&m) {
                let p = Polynomial::monomial(&self.ring, m, one.clone());
                let nf = self.normal_form(&p)?;
                out.push(&p - &nf);
            }
        }
        Ok(out)
    }

    /// `dim_K I_d`.
    pub fn component_dim(&self, d: u32) -> Result<u64> {
        let total = crate::hilbert::binom_poly((d as usize + self.nvars() - 1) as i64, self.nvars() as u32 - 1);
        let h = self.hilbert()?.h(d as i64);
        Ok(u64::try_from(total - num_bigint::BigInt::from(h)).expect("non-negative"))
    }

    /// A random element of `I_d` (uniform coefficients on a basis).
    pub fn random_element<R: Rng + ?Sized>(&self, d: u32, rng: &mut R) -> Result<Polynomial<F>> {
        let basis = self.component_basis(d)?;
        let f = self.field();
        let mut acc = Polynomial::zero(&self.ring);
        for b in &basis {
            acc = &acc + &b.scale(&f.random(rng));
        }
        Ok(acc)
    }
}

/// Exact division `f / g`; errors when `g` does not divide `f`.
pub fn divide_exact<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let ring = f.ring();
    let field = ring.field();
    let lm = g.leading_monomial().ok_or_else(|| Error::InvalidArgument("division by zero".into()))?;
    let inv = field.inv(g.leading_coeff().unwrap()).unwrap();
    let mut rem = f.clone();
    let mut q_terms = Vec::new();
    while let Some(m) = rem.leading_monomial() {
        let Some(qm) = lm.quotient_of(m) else {
            return Err(Error::NotContained(format!("{g} does not divide {f}")));
        };
        let qc = field.mul(rem.leading_coeff().unwrap(), &inv);
        rem = &rem - &g.mul_term(&qm, &qc);
        q_terms.push((qm, qc));
    }
    Ok(Polynomial::from_terms(ring, q_terms))
}

fn trim_generators<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], limits: GbLimits) -> Result<Vec<Polynomial<F>>> {
    let mut cands: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    cands.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()))
    });
    let mut engine = Engine::new(ring, limits);
    let mut kept = Vec::new();
    let mut cur_deg = None;
    for c in cands {
        let d = c.degree().unwrap();
        if cur_deg != Some(d) {
            engine.run_through(Some(d))?;
            cur_deg = Some(d);
        }
        let h = engine.reduce(&c);
        if !h.is_empty() {
            engine.insert(h, d);
            kept.push(c);
        }
    }
    Ok(kept)
}

/// True when `polys` is a regular sequence, i.e. the ideal they generate has codimension `polys.len()`.
///
/// First a sufficient test: substitute random linear forms in the first `k`
/// variables for the remaining ones and check that the image is primary to
/// the maximal ideal. If that fails the codimension is computed exactly.
pub fn is_regular_sequence<F: Field>(polys: &[Polynomial<F>], seed: u64) -> Result<bool> {
    let Some(first) = polys.first() else {
        return Err(Error::InvalidArgument("empty sequence".into()));
    };
    let ring = first.ring().clone();
    for p in polys {
        if p.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial in a sequence".into()));
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous(p.to_string()));
        }
        if !same_ring(p.ring(), &ring) {
            return Err(Error::RingMismatch("sequence elements in different rings".into()));
        }
    }
    let n = ring.nvars();
    let k = polys.len();
    if k > n {
        return Ok(false);
    }
    if polys.iter().any(|p| p.is_constant()) {
        return Ok(false);
    }
    if k < n && cut_is_m_primary(polys, seed)? {
        return Ok(true);
    }
    let ideal = Ideal::new(&ring, polys.to_vec())?;
    let codim = n as i64 - ideal.hilbert()?.krull_dim();
    Ok(codim == k as i64)
}

fn cut_is_m_primary<F: Field>(polys: &[Polynomial<F>], seed: u64) -> Result<bool> {
    let ring = polys[0].ring();
    let n = ring.nvars();
    let k = polys.len();
    let field = ring.field();
    let sub = PolyRing::new(field.clone(), ring.names()[..k].to_vec(), TermOrder::DegRevLex)?;
    let mut rng = crate::linear_change::rng_for(seed);
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| {
            if i < k {
                crate::poly::var(&sub, i)
            } else {
                let c: Vec<F::Elem> = (0..k).map(|_| field.random(&mut rng)).collect();
                crate::linear_change::linear_form(&sub, &c)
            }
        })
        .collect();
    let cut = polys.iter().map(|p| p.substitute(&images)).collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(&sub, cut)?;
    Ok(ideal.hilbert()?.dim < 0)
}
