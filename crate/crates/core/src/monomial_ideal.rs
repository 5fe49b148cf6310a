//! Monomial ideals given by their minimal generators.

use std::fmt;

use crate::monomial::{Monomial, TermOrder};

/// A monomial ideal in `nvars` variables; generators are minimal and sorted
/// by degree, then degrevlex descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|m| m.nvars() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// Ideal generated by `x_i^{e}` for the given exponent vectors.
    pub fn from_exps(nvars: usize, exps: &[&[u32]]) -> Self {
        MonomialIdeal::new(
            nvars,
            exps.iter().map(|e| Monomial::from_exps(e).expect("exponent within cap")).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    /// Least generator degree (`None` for the zero ideal).
    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(|m| m.degree()).min()
    }

    /// Greatest generator degree (`None` for the zero ideal).
    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(|m| m.degree()).max()
    }

    /// `I : x_j`.
    pub fn quotient_var(&self, j: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|m| {
                let mut e: Vec<u32> = m.exps().iter().map(|&x| x as u32).collect();
                e[j] = e[j].saturating_sub(1);
                Monomial::from_exps(&e).expect("smaller exponents")
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `I : x_j^inf`, obtained by setting `x_j = 1` in every generator.
    pub fn saturate_var(&self, j: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|m| m.without_var(j)).collect())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, out)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, g)
    }

    /// Saturation with respect to the maximal ideal: the intersection of `I : x_j^inf` over all j.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for j in 0..self.nvars {
            let s = self.saturate_var(j);
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s),
            });
        }
        acc.unwrap_or_else(|| self.clone())
    }

    /// Strong stability: for every generator `m`, every `x_j | m` and `i < j`,
    /// `m * x_i / x_j` lies in the ideal.
    pub fn is_borel_fixed(&self) -> bool {
        self.borel_violation().is_none()
    }

    /// A generator and a pair `(i, j)` violating strong stability, if any.
    pub fn borel_violation(&self) -> Option<(Monomial, usize, usize)> {
        for m in &self.gens {
            for j in 0..self.nvars {
                if m.exp(j) == 0 {
                    continue;
                }
                for i in 0..j {
                    let mut e: Vec<u32> = m.exps().iter().map(|&x| x as u32).collect();
                    e[j] -= 1;
                    e[i] += 1;
                    let moved = Monomial::from_exps(&e).ok()?;
                    if !self.contains(&moved) {
                        return Some((m.clone(), i, j));
                    }
                }
            }
        }
        None
    }

    /// Number of degree-`d` monomials outside the ideal, by enumeration.
    pub fn count_standard(&self, d: u32) -> u64 {
        crate::monomial::monomials_of_degree(self.nvars, d)
            .iter()
            .filter(|m| !self.contains(m))
            .count() as u64
    }

    /// Same generators viewed in a ring with the last variable removed;
    /// generators involving it are an error.
    pub fn drop_last_var(&self) -> Option<MonomialIdeal> {
        let n = self.nvars;
        if self.gens.iter().any(|m| m.exp(n - 1) > 0) {
            return None;
        }
        Some(MonomialIdeal::new(n - 1, self.gens.iter().map(|m| m.restrict(0..n - 1)).collect()))
    }

    /// Display with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|m| crate::poly::fmt_monomial(m, names))
            .collect();
        format!("({})", parts.join(", "))
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| TermOrder::DegRevLex.cmp(b, a));
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}
