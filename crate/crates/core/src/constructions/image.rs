//! Invariants of a parametrized curve computed inside its coordinate ring.
//!
//! The homogeneous coordinate ring of the image of `P^1 -> P^n` is the
//! graded subalgebra `A = K[f_0, ..., f_n]` of `K[u, v]` with `A_t` inside
//! the forms of degree `t d`. Everything here is linear algebra on these
//! pieces, so no Groebner basis of the curve is ever formed:
//!
//! * `H_C(t) = dim A_t`; the curve is integral and, when nondegenerate,
//!   has regularity at most `d - n + 2`, so `H_C = P_C` from `d - n + 1` on.
//! * For a general linear form `h`, `L = h(f)` has `d` simple roots, and
//!   `H_Z(t)` is the rank of `A_t` in `K[u, v]_{td} / L K[u, v]_{(t-1)d}`.
//! * `S/(I, h) = A / L A`, so `H_{S/J} = Delta H_C`, and the minimal
//!   generators of `I` in degree `t` are counted by the Koszul homology
//!   `H_1` of `A / L A` over the remaining `n` variables.

use serde::Serialize;

use crate::constructions::param::{dense_mul, Dense, Parametrization};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::linear_change::{genericity_warning, rng_for, MAX_DRAWS};
use crate::regularity::{classify_case, trial_seed, Case, RegularityReport};

#[derive(Clone, Debug, Serialize)]
pub struct ImageAnalysis {
    pub degree: i64,
    /// `P_C(t) = degree * t + constant`.
    pub hilbert_constant: i64,
    /// `H_C(t)` for `0 <= t <= bound`.
    pub hilbert: Vec<i64>,
    /// Regularity bound used to pin down `P_C`.
    pub bound: u32,
    pub section_hilbert: Vec<i64>,
    /// Number of minimal generators of the curve ideal in each degree `<= reg`.
    pub generators_by_degree: Vec<u64>,
    pub alpha: u32,
    pub omega: u32,
    pub report: RegularityReport,
}

/// Row-reduced basis of a subspace of binary forms of one degree.
struct Space<E> {
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

fn span<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>, width: usize) -> Space<F::Elem> {
    let e = linalg::echelon(field, rows, width, true);
    Space {
        rows: e.rows,
        pivots: e.pivots,
    }
}

/// Clears the pivot columns of `s` in `w`.
fn reduce<F: Field>(field: &F, s: &Space<F::Elem>, w: &mut [F::Elem]) {
    for (row, &pc) in s.rows.iter().zip(&s.pivots) {
        if field.is_zero(&w[pc]) {
            continue;
        }
        let c = w[pc].clone();
        for (x, y) in w.iter_mut().zip(row) {
            if !field.is_zero(y) {
                field.sub_mul_assign(x, &c, y);
            }
        }
    }
}

/// `A_t / L A_{t-1}`: `sub` spans `L A_{t-1}`, `quot` a complement inside `A_t`.
struct Quotient<E> {
    sub: Space<E>,
    quot: Space<E>,
}

impl<E: Clone> Quotient<E> {
    fn dim(&self) -> usize {
        self.quot.rows.len()
    }

    fn coords<F: Field<Elem = E>>(&self, field: &F, w: &[E]) -> Vec<E> {
        let mut w = w.to_vec();
        reduce(field, &self.sub, &mut w);
        self.quot.pivots.iter().map(|&c| w[c].clone()).collect()
    }
}

/// Remainder of a form of degree `len - 1` modulo `L` (leading coefficient `l[0]` nonzero).
fn rem_by<F: Field>(field: &F, w: &[F::Elem], l: &[F::Elem]) -> Vec<F::Elem> {
    let d = l.len() - 1;
    let mut w = w.to_vec();
    if w.len() <= d {
        return w;
    }
    let inv = field.inv(&l[0]).unwrap();
    for j in 0..w.len() - d {
        if field.is_zero(&w[j]) {
            continue;
        }
        let c = field.mul(&w[j], &inv);
        for (k, y) in l.iter().enumerate() {
            field.sub_mul_assign(&mut w[j + k], &c, y);
        }
    }
    w[w.len() - d..].to_vec()
}

struct SectionData {
    h_z: Vec<i64>,
    betti: Vec<u64>,
}

/// Theorem-style invariants of the image of `p`, certified through `trials` general sections.
pub fn analyze_image<F: Field>(p: &Parametrization<F>, seed: u64, trials: usize) -> Result<ImageAnalysis> {
    let field = p.field().clone();
    let nv = p.target().nvars();
    let n = nv - 1;
    let d = p.degree() as usize;
    if p.common_factor_degree() > 0 {
        return Err(Error::InvalidArgument("images share a common factor".into()));
    }
    let f: Vec<Dense<F::Elem>> = (0..nv).map(|i| p.dense(i)).collect();
    if linalg::rank(&field, f.clone(), d + 1) != nv {
        return Err(Error::InvalidArgument("image curve is degenerate".into()));
    }
    let bound = (d + 2).saturating_sub(n).max(2) as u32;
    // A_t for t <= bound
    let mut pieces: Vec<Space<F::Elem>> = vec![Space {
        rows: vec![vec![field.one()]],
        pivots: vec![0],
    }];
    for t in 1..=bound as usize {
        let prev = &pieces[t - 1];
        let rows: Vec<Vec<F::Elem>> = prev
            .rows
            .iter()
            .flat_map(|b| f.iter().map(move |fi| (b, fi)))
            .map(|(b, fi)| dense_mul(&field, b, fi))
            .collect();
        pieces.push(span(&field, rows, t * d + 1));
    }
    let hilbert: Vec<i64> = pieces.iter().map(|s| s.rows.len() as i64).collect();
    let b = bound as usize;
    let deg = hilbert[b] - hilbert[b - 1];
    if deg != d as i64 {
        return Err(Error::InvalidArgument(format!(
            "image has degree {deg}, the map is not birational onto its image"
        )));
    }
    let constant = hilbert[b] - deg * b as i64;
    let p_c = |t: usize| deg * t as i64 + constant;
    let rho_x = (0..=b).rev().find(|&t| hilbert[t] != p_c(t)).map_or(0, |t| t + 1) as u32;

    let mut agreed: Option<SectionData> = None;
    let mut accepted = 0usize;
    let mut draws = 0usize;
    let mut k = 0usize;
    while accepted < trials.max(1) {
        if draws >= MAX_DRAWS * trials.max(1) {
            return Err(Error::Exhausted("no admissible hyperplane".into()));
        }
        draws += 1;
        let s = trial_seed(seed, k);
        k += 1;
        let mut rng = rng_for(s);
        let a: Vec<F::Elem> = (0..nv).map(|_| field.random(&mut rng)).collect();
        if field.is_zero(&a[n]) {
            continue;
        }
        let mut l = vec![field.zero(); d + 1];
        for (ai, fi) in a.iter().zip(&f) {
            for (x, y) in l.iter_mut().zip(fi) {
                let m = field.mul(ai, y);
                *x = field.add(x, &m);
            }
        }
        if field.is_zero(&l[0]) {
            continue;
        }
        let data = section_data(&field, &pieces, &f[..n], &l, d, rho_x, deg)?;
        let Some(data) = data else { continue };
        match &agreed {
            None => agreed = Some(data),
            Some(prev) => {
                if prev.h_z != data.h_z || prev.betti != data.betti {
                    return Err(Error::GenericityNotCertified(format!(
                        "sections for seeds {seed} and {s} disagree"
                    )));
                }
            }
        }
        accepted += 1;
    }
    let data = agreed.unwrap();
    let h_z = &data.h_z;
    let rho_z = (0..=b).rev().find(|&t| h_z[t] != deg).map_or(0, |t| t + 1) as u32;
    let delta = |t: usize| hilbert[t] - if t == 0 { 0 } else { hilbert[t - 1] };
    let sat_j = (0..=b).rev().find(|&t| delta(t) != h_z[t]).map_or(0, |t| t + 1) as u32;
    let reg_z = rho_z + 1;
    let reg_x = (rho_x + 1).max(reg_z);
    let mut reg_via_delta = b as u32;
    while reg_via_delta > reg_z && delta(reg_via_delta as usize - 1) == deg {
        reg_via_delta -= 1;
    }
    let reg_via_delta = reg_via_delta.max(reg_z);
    let mut warnings = Vec::new();
    if let Some(w) = genericity_warning(&field) {
        warnings.push(w);
    }
    let mut report = RegularityReport {
        degree: deg,
        rho_x,
        rho_x_plus_one: rho_x + 1,
        rho_z,
        reg_z,
        sat_j,
        reg_x,
        reg_via_delta,
        reg_via_satiety: sat_j.max(reg_z),
        case: Case::One,
        section_degenerate: h_z.get(1).copied().unwrap_or(0) < n as i64,
        seeds_agreeing: accepted,
        warnings,
    };
    if report.reg_x != report.reg_via_delta || report.reg_x != report.reg_via_satiety {
        return Err(Error::Inconsistent(format!(
            "regularity formulas disagree: {}, {}, {}",
            report.reg_x, report.reg_via_delta, report.reg_via_satiety
        )));
    }
    report.case = classify_case(&report)?;
    let betti = data.betti;
    let alpha = betti.iter().position(|&c| c > 0).unwrap_or(0) as u32;
    let omega = betti.iter().rposition(|&c| c > 0).unwrap_or(0) as u32;
    Ok(ImageAnalysis {
        degree: deg,
        hilbert_constant: constant,
        hilbert,
        bound,
        section_hilbert: data.h_z,
        generators_by_degree: betti,
        alpha,
        omega,
        report,
    })
}

/// Section Hilbert function and generator counts for one linear form; `None`
/// when the section does not impose `deg C` conditions.
fn section_data<F: Field>(
    field: &F,
    pieces: &[Space<F::Elem>],
    ys: &[Dense<F::Elem>],
    l: &[F::Elem],
    d: usize,
    rho_x: u32,
    deg: i64,
) -> Result<Option<SectionData>> {
    let b = pieces.len() - 1;
    let mut h_z = Vec::with_capacity(b + 1);
    for (t, piece) in pieces.iter().enumerate() {
        let rows: Vec<Vec<F::Elem>> = piece.rows.iter().map(|w| rem_by(field, w, l)).collect();
        let width = if t == 0 { 1 } else { d };
        h_z.push(linalg::rank(field, rows, width) as i64);
    }
    if h_z[b] != deg {
        return Ok(None);
    }
    // generators live in degrees <= reg(C), and reg(C) <= rho_x + 1 or rho_z + 1
    let rho_z = (0..=b).rev().find(|&t| h_z[t] != deg).map_or(0, |t| t + 1) as u32;
    let top = (rho_x + 1).max(rho_z + 1) as usize;
    let quotients: Vec<Quotient<F::Elem>> = (0..=top.min(b))
        .map(|t| {
            let width = t * d + 1;
            let sub = if t == 0 {
                Space {
                    rows: Vec::new(),
                    pivots: Vec::new(),
                }
            } else {
                span(field, pieces[t - 1].rows.iter().map(|w| dense_mul(field, w, l)).collect(), width)
            };
            let rest = pieces[t]
                .rows
                .iter()
                .map(|w| {
                    let mut w = w.clone();
                    reduce(field, &sub, &mut w);
                    w
                })
                .collect();
            Quotient {
                quot: span(field, rest, width),
                sub,
            }
        })
        .collect();
    let m = ys.len();
    let mut betti = vec![0u64; top.min(b) + 1];
    for t in 1..=top.min(b) {
        let (qt, q1) = (&quotients[t], &quotients[t - 1]);
        let d1: Vec<Vec<F::Elem>> = (0..m)
            .flat_map(|i| q1.quot.rows.iter().map(move |w| (i, w)))
            .map(|(i, w)| qt.coords(field, &dense_mul(field, w, &ys[i])))
            .collect();
        let r1 = linalg::rank(field, d1, qt.dim());
        let r2 = if t >= 2 {
            let q2 = &quotients[t - 2];
            let block = q1.dim();
            let mut rows = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    for w in &q2.quot.rows {
                        let mut v = vec![field.zero(); m * block];
                        let a = q1.coords(field, &dense_mul(field, w, &ys[i]));
                        let c = q1.coords(field, &dense_mul(field, w, &ys[j]));
                        for k in 0..block {
                            v[j * block + k] = a[k].clone();
                            v[i * block + k] = field.neg(&c[k]);
                        }
                        rows.push(v);
                    }
                }
            }
            linalg::rank(field, rows, m * block)
        } else {
            0
        };
        betti[t] = (m * q1.dim() - r1 - r2) as u64;
    }
    Ok(Some(SectionData { h_z, betti }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::param::{implicitize, ImplicitMethod};
    use crate::field::{PrimeField, Rationals};
    use crate::regularity::regularity_curve;

    fn agree<F: Field>(p: &Parametrization<F>, bound: u32) {
        let a = analyze_image(p, 1, 3).unwrap();
        let i = implicitize(p, ImplicitMethod::LinearAlgebra, Some(bound)).unwrap().ideal;
        let r = regularity_curve(&i, 1, 3).unwrap();
        assert_eq!(a.report.reg_x, r.reg_x);
        assert_eq!(a.report.rho_x, r.rho_x);
        assert_eq!(a.report.rho_z, r.rho_z);
        assert_eq!(a.report.sat_j, r.sat_j);
        assert_eq!(a.report.case, r.case);
        let h = i.hilbert().unwrap();
        assert_eq!(a.degree, h.degree);
        for t in 0..a.hilbert.len() {
            assert_eq!(a.hilbert[t], h.h(t as i64));
        }
        let degs = i.generator_degrees().unwrap();
        for (t, &c) in a.generators_by_degree.iter().enumerate() {
            assert_eq!(c as usize, degs.iter().filter(|&&e| e as usize == t).count(), "degree {t}");
        }
        assert_eq!(Some(a.alpha), i.alpha().unwrap());
        assert_eq!(Some(a.omega), i.omega().unwrap());
    }

    #[test]
    fn twisted_cubic() {
        let p = Parametrization::from_strs(Rationals, &["u^3", "u^2*v", "u*v^2", "v^3"]).unwrap();
        let a = analyze_image(&p, 0, 3).unwrap();
        assert_eq!(a.hilbert, vec![1, 4, 7]);
        assert_eq!(a.generators_by_degree, vec![0, 0, 3]);
        assert_eq!(a.report.reg_x, 2);
        agree(&p, 4);
    }

    #[test]
    fn agrees_with_the_ideal_route() {
        let gf = PrimeField::default_field();
        agree(&Parametrization::from_strs(gf, &["u^4", "u^3*v", "u*v^3", "v^4"]).unwrap(), 5);
        agree(
            &Parametrization::from_strs(gf, &["u^6 + v^6", "u^5*v + u*v^5", "u^3*v^3", "u^2*v^4 - v^6"]).unwrap(),
            8,
        );
        agree(
            &Parametrization::from_strs(gf, &["u^7", "u^6*v + v^7", "u^2*v^5", "u*v^6", "u^4*v^3"]).unwrap(),
            8,
        );
    }

    #[test]
    fn remainder_by_linear_factor() {
        let f = Rationals;
        let r = |x: i64| f.from_i64(x);
        // (u^2 + 3uv + 2v^2) mod (u + v) leaves v^2 * 0
        let w = rem_by(&f, &[r(1), r(3), r(2)], &[r(1), r(1)]);
        assert_eq!(w, vec![r(0)]);
    }
}
