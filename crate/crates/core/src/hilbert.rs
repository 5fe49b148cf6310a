//! Hilbert series, function and polynomial of graded quotients `S/I`.
//!
//! Everything is computed from a monomial ideal (the leading-term ideal of a
//! homogeneous ideal has the same Hilbert function).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

/// Extra values stored beyond `rho`.
pub const PROFILE_MARGIN: u32 = 5;

/// Numerator `N(t)` of `HS_{S/I}(t) = N(t) / (1-t)^nvars`, ascending coefficients.
pub fn hilbert_numerator(m: &MonomialIdeal) -> Vec<i64> {
    let mut memo = FxHashMap::default();
    let mut n = numerator_rec(m.gens(), m.nvars(), &mut memo);
    trim(&mut n);
    n
}

fn trim(v: &mut Vec<i64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_shifted(acc: &mut Vec<i64>, b: &[i64], shift: usize) {
    if acc.len() < b.len() + shift {
        acc.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        acc[i + shift] += y;
    }
}

fn numerator_rec(gens: &[Monomial], nvars: usize, memo: &mut FxHashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product formula
    let mut used = 0u64;
    let mut coprime = true;
    for m in gens {
        let mask = m.support_mask();
        if used & mask != 0 || nvars > 64 {
            coprime = false;
            break;
        }
        used |= mask;
    }
    if coprime {
        let mut acc = vec![1i64];
        for m in gens {
            acc = poly_mul(&acc, &one_minus_t_pow(m.degree()));
        }
        return acc;
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    // pivot: the variable occurring in the most non-pure generators
    let mut counts = vec![0usize; nvars];
    for m in gens {
        let support: Vec<usize> = (0..nvars).filter(|&i| m.exp(i) > 0).collect();
        if support.len() > 1 {
            for i in support {
                counts[i] += 1;
            }
        }
    }
    let var = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|m| m.exp(var) > 0 && m.degree() > m.exp(var))
        .map(|m| m.exp(var))
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2].max(1);
    let pivot = Monomial::var(nvars, var, e).expect("within cap");

    let mut with_pivot = gens.to_vec();
    with_pivot.push(pivot.clone());
    let plus = MonomialIdeal::new(nvars, with_pivot);
    let colon = MonomialIdeal::new(
        nvars,
        gens.iter()
            .map(|m| {
                let mut x: Vec<u32> = m.exps().iter().map(|&v| v as u32).collect();
                x[var] = x[var].saturating_sub(e);
                Monomial::from_exps(&x).expect("smaller exponents")
            })
            .collect(),
    );
    let mut acc = numerator_rec(plus.gens(), nvars, memo);
    let b = numerator_rec(colon.gens(), nvars, memo);
    add_shifted(&mut acc, &b, e as usize);
    trim(&mut acc);
    memo.insert(gens.to_vec(), acc.clone());
    acc
}

/// `binom(x, d)` as a polynomial in `x`, evaluated at an integer.
pub fn binom_poly(x: i64, d: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..d as i64 {
        num *= BigInt::from(x - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}

/// Hilbert polynomial `P(z) = sum_i c_i * binom(z - i + d, d)`.
///
/// Equality compares the polynomials, not the binomial coefficient lists.
#[derive(Clone, Debug)]
pub struct HilbertPolynomial {
    /// Projective dimension `d`; `-1` for the zero polynomial.
    pub dim: i64,
    /// Coefficients `c_i` (the cancelled numerator).
    pub binomial_coeffs: Vec<i64>,
}

impl HilbertPolynomial {
    pub fn zero() -> Self {
        HilbertPolynomial {
            dim: -1,
            binomial_coeffs: Vec::new(),
        }
    }

    pub fn eval(&self, t: i64) -> i64 {
        if self.dim < 0 {
            return 0;
        }
        let d = self.dim as u32;
        let mut acc = BigInt::zero();
        for (i, c) in self.binomial_coeffs.iter().enumerate() {
            acc += BigInt::from(*c) * binom_poly(t - i as i64 + d as i64, d);
        }
        acc.to_i64().expect("Hilbert polynomial value fits in i64")
    }

    /// Coefficients in the monomial basis `1, z, z^2, ...`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        if self.dim < 0 {
            return Vec::new();
        }
        let d = self.dim as usize;
        // interpolate through d+1 integer points
        let xs: Vec<i64> = (0..=d as i64).collect();
        let ys: Vec<BigRational> = xs.iter().map(|&x| BigRational::from_integer(self.eval(x).into())).collect();
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (k, &xk) in xs.iter().enumerate() {
            // Lagrange basis polynomial for xk
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, &xj) in xs.iter().enumerate() {
                if j == k {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (i, b) in basis.iter().enumerate() {
                    next[i + 1] += b.clone();
                    next[i] -= b.clone() * BigRational::from_integer(xj.into());
                }
                basis = next;
                denom *= BigRational::from_integer((xk - xj).into());
            }
            for (i, b) in basis.into_iter().enumerate() {
                coeffs[i] += b * ys[k].clone() / denom.clone();
            }
        }
        coeffs
    }

    /// Leading coefficient times `dim!`, i.e. the degree.
    pub fn degree(&self) -> i64 {
        self.binomial_coeffs.iter().sum()
    }
}

impl PartialEq for HilbertPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.coefficients() == other.coefficients()
    }
}
impl Eq for HilbertPolynomial {}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coefficients();
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (i, a) in c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            let coeff = if mag.is_one() && i > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.to_integer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push((a.is_negative(), format!("{coeff}{var}")));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (neg, s)) in parts.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{s}")?,
                (0, false) => write!(f, "{s}")?,
                (_, true) => write!(f, " - {s}")?,
                (_, false) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// Hilbert data of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertProfile {
    pub nvars: usize,
    /// `N(t)` with `HS(t) = N(t)/(1-t)^nvars`.
    pub numerator: Vec<i64>,
    /// `N'(t)` after cancelling all factors `1-t`.
    pub reduced_numerator: Vec<i64>,
    /// Projective dimension; `-1` for the empty scheme.
    pub dim: i64,
    pub degree: i64,
    pub polynomial: HilbertPolynomial,
    pub rho: u32,
    /// `H(t)` for `0 <= t <= rho + PROFILE_MARGIN`.
    pub values: Vec<i64>,
}

/// Divides by `1 - t` while the numerator vanishes at 1; returns the quotient and the count.
fn cancel_one_minus_t(n: &[i64], max: usize) -> (Vec<i64>, usize) {
    let mut cur = n.to_vec();
    let mut k = 0;
    while k < max && cur.iter().sum::<i64>() == 0 && cur.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t): q_i = sum_{j<=i} c_j
        let mut q = Vec::with_capacity(cur.len() - 1);
        let mut s = 0i64;
        for c in &cur[..cur.len() - 1] {
            s += c;
            q.push(s);
        }
        cur = q;
        trim(&mut cur);
        k += 1;
    }
    (cur, k)
}

impl HilbertProfile {
    pub fn from_numerator(nvars: usize, numerator: Vec<i64>) -> Self {
        let zero = numerator.iter().all(|&c| c == 0);
        let (reduced, k) = if zero {
            (vec![0], nvars)
        } else {
            cancel_one_minus_t(&numerator, nvars)
        };
        let dim = nvars as i64 - k as i64 - 1;
        let polynomial = if dim >= 0 {
            HilbertPolynomial {
                dim,
                binomial_coeffs: reduced.clone(),
            }
        } else {
            HilbertPolynomial::zero()
        };
        let degree = if zero { 0 } else { reduced.iter().sum() };
        let mut prof = HilbertProfile {
            nvars,
            numerator,
            reduced_numerator: reduced,
            dim,
            degree,
            polynomial,
            rho: 0,
            values: Vec::new(),
        };
        // past deg N' equality of H and P is automatic
        let bound = prof.reduced_numerator.len() as u32 + 1;
        let mut rho = 0;
        for t in 0..=bound {
            if prof.h_from_series(t) != prof.polynomial.eval(t as i64) {
                rho = t + 1;
            }
        }
        prof.rho = rho;
        prof.values = (0..=rho + PROFILE_MARGIN).map(|t| prof.h_from_series(t)).collect();
        prof
    }

    pub fn of_monomial_ideal(m: &MonomialIdeal) -> Self {
        HilbertProfile::from_numerator(m.nvars(), hilbert_numerator(m))
    }

    fn h_from_series(&self, t: u32) -> i64 {
        let n = self.nvars as u32 - 1;
        let mut acc = BigInt::zero();
        for (i, c) in self.numerator.iter().enumerate() {
            if i as u32 > t || *c == 0 {
                continue;
            }
            acc += BigInt::from(*c) * binom_poly((t - i as u32 + n) as i64, n);
        }
        acc.to_i64().expect("Hilbert function value fits in i64")
    }

    /// `H(t)`; zero for negative `t`.
    pub fn h(&self, t: i64) -> i64 {
        if t < 0 {
            return 0;
        }
        match self.values.get(t as usize) {
            Some(v) => *v,
            None => self.h_from_series(t as u32),
        }
    }

    pub fn p(&self, t: i64) -> i64 {
        self.polynomial.eval(t)
    }

    /// `H(t) - H(t-1)`, with `delta(0) = H(0)`.
    pub fn delta(&self, t: i64) -> i64 {
        self.h(t) - self.h(t - 1)
    }

    /// `P(t) - P(t-1)`.
    pub fn delta_p(&self, t: i64) -> i64 {
        self.p(t) - self.p(t - 1)
    }

    /// Krull dimension of `S/I`.
    pub fn krull_dim(&self) -> i64 {
        self.dim + 1
    }
}

/// Brute-force Hilbert function of `S/M` by counting standard monomials.
pub fn hilbert_function_brute(m: &MonomialIdeal, t: u32) -> i64 {
    m.count_standard(t) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(n: usize, e: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(n, e)
    }

    #[test]
    fn basic_numerators() {
        assert_eq!(hilbert_numerator(&MonomialIdeal::zero(3)), vec![1]);
        assert_eq!(hilbert_numerator(&mi(2, &[&[1, 0]])), vec![1, -1]);
        // twisted cubic leading ideal (x0x2, x0x3, x1x3)... degrevlex LT of the minors is (x1^2, x1x2, x2^2)
        let tc = mi(4, &[&[0, 2, 0, 0], &[0, 1, 1, 0], &[0, 0, 2, 0]]);
        assert_eq!(hilbert_numerator(&tc), vec![1, 0, -3, 2]);
        let p = HilbertProfile::of_monomial_ideal(&tc);
        assert_eq!((p.dim, p.degree, p.rho), (1, 3, 0));
        assert_eq!(p.h(2), 7);
        assert_eq!(p.polynomial.to_string(), "3t + 1");
    }

    #[test]
    fn unit_ideal_is_empty() {
        let p = HilbertProfile::of_monomial_ideal(&MonomialIdeal::unit(3));
        assert_eq!((p.dim, p.degree, p.rho), (-1, 0, 0));
        assert_eq!(p.h(0), 0);
    }

    #[test]
    fn points_and_hyperplanes() {
        // (x0^2, x0x1, x1^2) in 3 vars: three points, H = 1, 3, 3, ...
        let p = HilbertProfile::of_monomial_ideal(&mi(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]));
        assert_eq!((p.dim, p.degree, p.rho), (0, 3, 1));
        assert_eq!(&p.values[..3], &[1, 3, 3]);
        // a linear form in P^4
        let p = HilbertProfile::of_monomial_ideal(&mi(5, &[&[1, 0, 0, 0, 0]]));
        assert_eq!((p.dim, p.degree), (3, 1));
    }

    #[test]
    fn ex42_monomial_curves() {
        let c = HilbertProfile::of_monomial_ideal(&mi(
            5,
            &[&[2, 0, 0, 0, 0], &[0, 3, 0, 0, 0], &[0, 0, 4, 0, 0], &[0, 1, 2, 1, 0], &[1, 2, 1, 0, 0]],
        ));
        assert_eq!((c.dim, c.degree, c.rho), (1, 15, 5));
        let c = HilbertProfile::of_monomial_ideal(&mi(
            5,
            &[&[2, 0, 0, 0, 0], &[0, 3, 0, 0, 0], &[0, 0, 3, 0, 0], &[1, 1, 0, 0, 0], &[1, 0, 0, 1, 0]],
        ));
        assert_eq!((c.dim, c.degree, c.rho), (1, 9, 2));
    }

    #[test]
    fn polynomial_display() {
        let p = HilbertPolynomial {
            dim: 1,
            binomial_coeffs: vec![1, 2, -5, 3],
        };
        assert_eq!(p.degree(), 1);
        let z = HilbertPolynomial {
            dim: 1,
            binomial_coeffs: vec![0, 1],
        };
        assert_eq!(p, z);
        assert_eq!(p.to_string(), "t");
        let q = HilbertPolynomial {
            dim: 2,
            binomial_coeffs: vec![1],
        };
        assert_eq!(q.to_string(), "1/2t^2 + 3/2t + 1");
    }

    fn arb_monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..4, n), 1..6).prop_map(move |gs| {
                let gens = gs
                    .iter()
                    .filter(|e| e.iter().sum::<u32>() > 0)
                    .map(|e| Monomial::from_exps(e).unwrap())
                    .collect();
                MonomialIdeal::new(n, gens)
            })
        })
    }

    proptest! {
        #[test]
        fn series_matches_counting(m in arb_monomial_ideal()) {
            let p = HilbertProfile::of_monomial_ideal(&m);
            for t in 0..=8 {
                prop_assert_eq!(p.h(t), hilbert_function_brute(&m, t as u32));
            }
        }

        #[test]
        fn rho_is_tight(m in arb_monomial_ideal()) {
            let p = HilbertProfile::of_monomial_ideal(&m);
            let r = p.rho as i64;
            if r > 0 {
                prop_assert_ne!(p.h(r - 1), p.p(r - 1));
            }
            for t in r..=r + 5 {
                prop_assert_eq!(p.h(t), p.p(t));
            }
        }
    }
}
