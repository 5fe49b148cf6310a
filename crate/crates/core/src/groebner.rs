//! Buchberger's algorithm.
//!
//! Pairs are selected by the normal strategy with sugar degrees, useless
//! pairs are discarded with the Gebauer-Moeller update (which implements
//! both Buchberger criteria), and the final basis is inter-reduced, made
//! monic and sorted by increasing leading monomial. The result is the
//! reduced basis and does not depend on the order of the input generators.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};

pub type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// Resource caps for a Groebner basis computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    /// Largest sugar degree of a pair that may be reduced.
    pub max_degree: u32,
    /// Largest number of pair reductions.
    pub max_pairs: u64,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_degree: 64,
            max_pairs: 10_000_000,
        }
    }
}

struct OrdMon {
    m: Monomial,
    order: TermOrder,
}

impl PartialEq for OrdMon {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m
    }
}
impl Eq for OrdMon {}
impl PartialOrd for OrdMon {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for OrdMon {
    fn cmp(&self, o: &Self) -> Ordering {
        self.order.cmp(&self.m, &o.m)
    }
}

/// A set of monic polynomials used as reducers.
pub(crate) struct Basis<F: Field> {
    pub(crate) field: F,
    pub(crate) order: TermOrder,
    pub(crate) polys: Vec<Terms<F>>,
    masks: Vec<u64>,
    pub(crate) active: Vec<bool>,
}

impl<F: Field> Basis<F> {
    pub(crate) fn new(field: F, order: TermOrder) -> Self {
        Basis {
            field,
            order,
            polys: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
        }
    }

    pub(crate) fn from_polys(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Self {
        let mut b = Basis::new(ring.field().clone(), ring.order());
        for p in polys {
            if !p.is_zero() {
                b.push(p.monic().into_terms());
            }
        }
        b
    }

    pub(crate) fn push(&mut self, terms: Terms<F>) -> usize {
        self.masks.push(terms[0].0.support_mask());
        self.polys.push(terms);
        self.active.push(true);
        self.polys.len() - 1
    }

    #[inline]
    pub(crate) fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.polys.len()).find(|&i| {
            self.active[i]
                && Some(i) != skip
                && self.masks[i] & !mask == 0
                && self.polys[i][0].0.divides(m)
        })
    }

    /// Full reduction of `terms` by the active reducers (except `skip`).
    pub(crate) fn reduce(&self, terms: Terms<F>, skip: Option<usize>) -> Terms<F> {
        let field = &self.field;
        let order = self.order;
        let mut map: FxHashMap<Monomial, F::Elem> = FxHashMap::default();
        let mut heap: BinaryHeap<OrdMon> = BinaryHeap::with_capacity(terms.len());
        for (m, c) in terms {
            if field.is_zero(&c) {
                continue;
            }
            heap.push(OrdMon { m: m.clone(), order });
            map.insert(m, c);
        }
        let mut out = Vec::new();
        while let Some(OrdMon { m, .. }) = heap.pop() {
            let Some(c) = map.remove(&m) else { continue };
            match self.find_reducer(&m, skip) {
                None => out.push((m, c)),
                Some(r) => {
                    let g = &self.polys[r];
                    let q = g[0].0.quotient_of(&m).expect("reducer divides");
                    for (gm, gc) in &g[1..] {
                        let pm = gm.mul(&q);
                        match map.get_mut(&pm) {
                            Some(v) => {
                                field.sub_mul_assign(v, &c, gc);
                                if field.is_zero(v) {
                                    map.remove(&pm);
                                }
                            }
                            None => {
                                let mut v = field.zero();
                                field.sub_mul_assign(&mut v, &c, gc);
                                heap.push(OrdMon { m: pm.clone(), order });
                                map.insert(pm, v);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn make_monic<F: Field>(field: &F, mut t: Terms<F>) -> Terms<F> {
    if let Some((_, lc)) = t.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc).expect("nonzero");
            for (_, c) in t.iter_mut() {
                *c = field.mul(c, &inv);
            }
        }
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    Pair(usize, usize),
    Gen(usize),
}

struct QueueEntry {
    sugar: u32,
    lcm: Monomial,
    seq: usize,
    item: Item,
    order: TermOrder,
}

impl PartialEq for QueueEntry {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for QueueEntry {}
impl PartialOrd for QueueEntry {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for QueueEntry {
    // BinaryHeap is a max-heap: the smallest (sugar, lcm, seq) must compare greatest.
    fn cmp(&self, o: &Self) -> Ordering {
        o.sugar
            .cmp(&self.sugar)
            .then_with(|| self.order.cmp(&o.lcm, &self.lcm))
            .then_with(|| o.seq.cmp(&self.seq))
    }
}

/// Incremental Buchberger state. Homogeneous inputs are processed degree by
/// degree, which allows truncated computations (see [`Engine::run_through`]).
pub(crate) struct Engine<F: Field> {
    ring: Ring<F>,
    pub(crate) basis: Basis<F>,
    sugar: Vec<u32>,
    gens: Vec<(Terms<F>, u32)>,
    queue: BinaryHeap<QueueEntry>,
    /// (i, j, lcm) of pairs still pending; `None` once treated or discarded.
    pairs: Vec<Option<(usize, usize, Monomial)>>,
    seq: usize,
    limits: GbLimits,
    reductions: u64,
}

impl<F: Field> Engine<F> {
    pub(crate) fn new(ring: &Ring<F>, limits: GbLimits) -> Self {
        Engine {
            ring: ring.clone(),
            basis: Basis::new(ring.field().clone(), ring.order()),
            sugar: Vec::new(),
            gens: Vec::new(),
            queue: BinaryHeap::new(),
            pairs: Vec::new(),
            seq: 0,
            limits,
            reductions: 0,
        }
    }

    fn order(&self) -> TermOrder {
        self.ring.order()
    }

    pub(crate) fn add_generator(&mut self, p: &Polynomial<F>) {
        if p.is_zero() {
            return;
        }
        let sugar = p.degree().unwrap_or(0);
        let lm = p.leading_monomial().unwrap().clone();
        let k = self.gens.len();
        self.gens.push((p.terms().to_vec(), sugar));
        self.seq += 1;
        self.queue.push(QueueEntry {
            sugar,
            lcm: lm,
            seq: self.seq,
            item: Item::Gen(k),
            order: self.order(),
        });
    }

    /// Inserts a reduced, nonzero polynomial and updates the pair set.
    pub(crate) fn insert(&mut self, h: Terms<F>, sugar: u32) {
        let h = make_monic(&self.basis.field, h);
        let sugar = h.iter().map(|t| t.0.degree()).max().unwrap_or(0).max(sugar);
        let lm_h = h[0].0.clone();
        let hi = self.basis.push(h);
        self.sugar.push(sugar);
        let active: Vec<usize> = (0..hi).filter(|&g| self.basis.active[g]).collect();

        // Gebauer-Moeller: new pairs (h, g)
        let cands: Vec<(usize, Monomial, bool)> = active
            .iter()
            .map(|&g| {
                let lg = self.basis.lm(g);
                (g, lg.lcm(&lm_h), lg.is_coprime(&lm_h))
            })
            .collect();
        let mut keep = vec![false; cands.len()];
        for k in 0..cands.len() {
            let (_, ref l, coprime) = cands[k];
            if coprime {
                keep[k] = true;
                continue;
            }
            // discard if another pair's lcm divides this one (strictly, or equal with a kept/earlier one)
            let dominated = (0..cands.len()).any(|o| {
                if o == k {
                    return false;
                }
                let lo = &cands[o].1;
                if !lo.divides(l) {
                    return false;
                }
                if lo != l {
                    // pending (later) or kept (earlier) candidates both dominate
                    o > k || keep[o]
                } else {
                    // equal lcm: keep only the first one
                    o < k && keep[o]
                }
            });
            keep[k] = !dominated;
        }

        // old pairs (i, j) whose lcm is divisible by lm_h in the strict sense
        for entry in self.pairs.iter_mut() {
            if let Some((i, j, l)) = entry {
                if lm_h.divides(l) {
                    let li = self.basis.polys[*i][0].0.lcm(&lm_h);
                    let lj = self.basis.polys[*j][0].0.lcm(&lm_h);
                    if &li != l && &lj != l {
                        *entry = None;
                    }
                }
            }
        }

        for (k, (g, l, coprime)) in cands.into_iter().enumerate() {
            if !keep[k] || coprime {
                continue;
            }
            let s = (self.sugar[g] - self.basis.lm(g).degree()).max(sugar - lm_h.degree()) + l.degree();
            let pid = self.pairs.len();
            self.pairs.push(Some((g, hi, l.clone())));
            self.seq += 1;
            self.queue.push(QueueEntry {
                sugar: s,
                lcm: l,
                seq: self.seq,
                item: Item::Pair(pid, 0),
                order: self.order(),
            });
        }

        for &g in &active {
            if lm_h.divides(self.basis.lm(g)) {
                self.basis.active[g] = false;
            }
        }
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Terms<F> {
        let field = &self.basis.field;
        let (a, b) = (&self.basis.polys[i], &self.basis.polys[j]);
        let qa = a[0].0.quotient_of(lcm).unwrap();
        let qb = b[0].0.quotient_of(lcm).unwrap();
        let mut out: Terms<F> = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (1, 1);
        let order = self.order();
        while x < a.len() || y < b.len() {
            let ta = a.get(x).map(|t| t.0.mul(&qa));
            let tb = b.get(y).map(|t| t.0.mul(&qb));
            match (ta, tb) {
                (Some(ma), Some(mb)) => match order.cmp(&ma, &mb) {
                    Ordering::Greater => {
                        out.push((ma, a[x].1.clone()));
                        x += 1;
                    }
                    Ordering::Less => {
                        out.push((mb, field.neg(&b[y].1)));
                        y += 1;
                    }
                    Ordering::Equal => {
                        let c = field.sub(&a[x].1, &b[y].1);
                        if !field.is_zero(&c) {
                            out.push((ma, c));
                        }
                        x += 1;
                        y += 1;
                    }
                },
                (Some(ma), None) => {
                    out.push((ma, a[x].1.clone()));
                    x += 1;
                }
                (None, Some(mb)) => {
                    out.push((mb, field.neg(&b[y].1)));
                    y += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// Processes queued items with sugar at most `max_sugar` (all items when `None`).
    pub(crate) fn run_through(&mut self, max_sugar: Option<u32>) -> Result<()> {
        loop {
            let Some(top) = self.queue.peek() else { break };
            if let Some(d) = max_sugar {
                if top.sugar > d {
                    break;
                }
            }
            let top = self.queue.pop().unwrap();
            if top.sugar > self.limits.max_degree {
                return Err(Error::ResourceLimit(format!(
                    "pair of degree {} exceeds the degree cap {}",
                    top.sugar, self.limits.max_degree
                )));
            }
            let (terms, sugar) = match top.item {
                Item::Gen(k) => {
                    let (t, s) = std::mem::take(&mut self.gens[k]);
                    (t, s)
                }
                Item::Pair(pid, _) => {
                    let Some((i, j, l)) = self.pairs[pid].take() else { continue };
                    (self.spoly(i, j, &l), top.sugar)
                }
            };
            self.reductions += 1;
            if self.reductions > self.limits.max_pairs {
                return Err(Error::ResourceLimit(format!(
                    "more than {} pair reductions",
                    self.limits.max_pairs
                )));
            }
            let h = self.basis.reduce(terms, None);
            if !h.is_empty() {
                self.insert(h, sugar);
            }
        }
        Ok(())
    }

    /// Reduce `f` fully by the current basis.
    pub(crate) fn reduce(&self, f: &Polynomial<F>) -> Terms<F> {
        self.basis.reduce(f.terms().to_vec(), None)
    }

    /// True when `m` is divisible by the leading monomial of an active basis element.
    pub(crate) fn lm_divides(&self, m: &Monomial) -> bool {
        (0..self.basis.polys.len()).any(|i| self.basis.active[i] && self.basis.lm(i).divides(m))
    }

    /// Current active basis, inter-reduced, monic and sorted by increasing leading monomial.
    pub(crate) fn reduced_basis(&self) -> Vec<Polynomial<F>> {
        let field = &self.basis.field;
        let idx: Vec<usize> = (0..self.basis.polys.len()).filter(|&i| self.basis.active[i]).collect();
        let mut out: Vec<Polynomial<F>> = idx
            .iter()
            .map(|&i| {
                let p = &self.basis.polys[i];
                let mut t = vec![p[0].clone()];
                t.extend(self.basis.reduce(p[1..].to_vec(), Some(i)));
                Polynomial::from_sorted_terms(&self.ring, make_monic(field, t))
            })
            .collect();
        let ring = &self.ring;
        out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        out
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`, in the order of their ring.
pub fn groebner<F: Field>(gens: &[Polynomial<F>], limits: GbLimits) -> Result<Vec<Polynomial<F>>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let mut e = Engine::new(&ring, limits);
    for g in gens {
        if !crate::poly::same_ring(g.ring(), &ring) {
            return Err(Error::RingMismatch("generators live in different rings".into()));
        }
        e.add_generator(g);
    }
    e.run_through(None)?;
    Ok(e.reduced_basis())
}

/// Remainder of `f` modulo a Groebner basis.
pub fn reduce_by<F: Field>(f: &Polynomial<F>, gb: &[Polynomial<F>]) -> Polynomial<F> {
    let b = Basis::from_polys(f.ring(), gb);
    Polynomial::from_sorted_terms(f.ring(), b.reduce(f.terms().to_vec(), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;

    fn polys<F: Field>(r: &Ring<F>, s: &[&str]) -> Vec<Polynomial<F>> {
        s.iter().map(|t| parse_polynomial(r, t).unwrap()).collect()
    }

    /// Independent check: every S-polynomial of `g` reduces to zero by plain division.
    fn is_groebner<F: Field>(g: &[Polynomial<F>]) -> bool {
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (a, b) = (&g[i], &g[j]);
                let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                let l = la.lcm(lb);
                let fa = a.field();
                let sa = a.mul_term(&la.quotient_of(&l).unwrap(), &fa.inv(a.leading_coeff().unwrap()).unwrap());
                let sb = b.mul_term(&lb.quotient_of(&l).unwrap(), &fa.inv(b.leading_coeff().unwrap()).unwrap());
                if !reduce_by(&(&sa - &sb), g).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn linear_ideal_is_already_reduced() {
        let r = PolyRing::standard(PrimeField::default_field(), 4);
        let g = groebner(&polys(&r, &["x0", "x1"]), GbLimits::default()).unwrap();
        assert_eq!(g, polys(&r, &["x1", "x0"]));
    }

    #[test]
    fn twisted_cubic_minors() {
        let r = PolyRing::standard(Rationals, 4);
        let gens = polys(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        assert!(is_groebner(&gens));
        let g = groebner(&gens, GbLimits::default()).unwrap();
        assert_eq!(g.len(), 3);
        for p in &gens {
            assert!(g.contains(&p.monic()) || g.contains(&p.neg().monic()));
        }
    }

    #[test]
    fn permuted_generators_give_identical_bases() {
        let r = PolyRing::standard(PrimeField::default_field(), 5);
        let a = polys(&r, &["x0^2", "x1^3", "x2^4", "x1*x2^2*x3", "x0*x1^2*x2"]);
        let mut b = a.clone();
        b.reverse();
        b.swap(0, 2);
        assert_eq!(
            groebner(&a, GbLimits::default()).unwrap(),
            groebner(&b, GbLimits::default()).unwrap()
        );
    }

    #[test]
    fn non_homogeneous_and_lex() {
        let r = PolyRing::new(
            Rationals,
            vec!["x".into(), "y".into(), "z".into()],
            TermOrder::Lex,
        )
        .unwrap();
        let gens = polys(&r, &["x^2 + y + z - 1", "x + y^2 + z - 1", "x + y + z^2 - 1"]);
        let g = groebner(&gens, GbLimits::default()).unwrap();
        assert!(is_groebner(&g));
        // lex basis of this system ends in a univariate polynomial in z of degree 6
        let last = &g[0];
        assert!(last.terms().iter().all(|(m, _)| m.exp(0) == 0 && m.exp(1) == 0));
        assert_eq!(last.degree(), Some(6));
        for p in &gens {
            assert!(reduce_by(p, &g).is_zero());
        }
    }

    #[test]
    fn degree_cap_aborts() {
        let r = PolyRing::standard(PrimeField::default_field(), 3);
        let gens = polys(&r, &["x0^3 - x1^2*x2", "x0*x1 - x2^2"]);
        let lim = GbLimits {
            max_degree: 3,
            max_pairs: 100,
        };
        assert!(matches!(groebner(&gens, lim), Err(Error::ResourceLimit(_))));
    }
}
