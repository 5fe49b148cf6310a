//! Monomials and term orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exp = u16;
pub const MAX_EXP: u32 = u16::MAX as u32;

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exp; 8]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn from_exps(exps: &[u32]) -> Result<Self> {
        let mut v = SmallVec::with_capacity(exps.len());
        let mut degree = 0u32;
        for &e in exps {
            if e > MAX_EXP {
                return Err(Error::ExponentOverflow);
            }
            v.push(e as Exp);
            degree += e;
        }
        Ok(Monomial { exps: v, degree })
    }

    /// `x_i^e` in `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: u32) -> Result<Self> {
        let mut exps = vec![0u32; nvars];
        exps[i] = e;
        Self::from_exps(&exps)
    }

    #[inline]
    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            exps,
            degree: self.degree + other.degree,
        })
    }

    /// Product; panics on exponent overflow (callers bound degrees well below the cap).
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars()];
        for (i, x) in self.exps.iter().enumerate() {
            exps[i] = (*x as u32).checked_mul(e).ok_or(Error::ExponentOverflow)?;
        }
        Monomial::from_exps(&exps)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: SmallVec<[Exp; 8]> = self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 8]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[Exp; 8]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask with bit `i` set when variable `i` (mod 64) occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    /// Same exponents with variable `i` set to zero.
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        let d = exps[i] as u32;
        exps[i] = 0;
        Monomial {
            exps,
            degree: self.degree - d,
        }
    }

    /// Reorder exponents: the result's variable `k` is this monomial's variable `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let exps: SmallVec<[Exp; 8]> = perm.iter().map(|&k| self.exps[k]).collect();
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Embed into a ring with more variables, placing the exponents at `offset`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Monomial {
        let mut exps: SmallVec<[Exp; 8]> = SmallVec::from_elem(0, nvars);
        exps[offset..offset + self.exps.len()].copy_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Keep only the variables in `range`.
    pub fn restrict(&self, range: std::ops::Range<usize>) -> Monomial {
        let exps: SmallVec<[Exp; 8]> = self.exps[range].iter().copied().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders. Variables are ordered `x_0 > x_1 > ... > x_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    DegRevLex,
    Lex,
    /// Eliminates the first `k` variables: compares the degree in those
    /// variables first, then falls back to degrevlex.
    BlockElim(usize),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::BlockElim(k) => {
                let da: u32 = a.exps[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = b.exps[..k].iter().map(|&e| e as u32).sum();
                da.cmp(&db).then_with(|| degrevlex(a, b))
            }
        }
    }

    /// True when the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::DegRevLex)
    }

    pub fn name(&self) -> String {
        match self {
            TermOrder::DegRevLex => "degrevlex".into(),
            TermOrder::Lex => "lex".into(),
            TermOrder::BlockElim(k) => format!("elim({k})"),
        }
    }
}

#[inline]
fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {
            for i in (0..a.exps.len()).rev() {
                match a.exps[i].cmp(&b.exps[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing variable wins
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

/// All monomials of total degree `d` in `nvars` variables, in decreasing degrevlex order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exps(cur).expect("degree within cap"));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by(|a, b| degrevlex(b, a));
    out
}
