//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 1 and 9 contain target values that disagree with the underlying
//! mathematics (sat(J) = 5 for ex42-3, and a stated bound of 8 that computes
//! to 6). They are checked literally and reported as FAIL. The binary exits
//! non-zero only when the set of failing criteria differs from `KNOWN_FAILURES`.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use curvereg::bounds::{arithmetic_suite, check_row, gin_shape_check, ShapeCheck};
use curvereg::constructions::fixtures::fixture;
use curvereg::constructions::liaison::random_form;
use curvereg::constructions::{implicitize, ImplicitMethod};
use curvereg::monomial::monomials_of_degree;
use curvereg::poly::var;
use curvereg::regularity::{general_section, gin, regularity_curve, regularity_via_gin};
use curvereg::reproduce::{all_fixture_names, curve_invariants, image_invariants, Want, SLOW_FIXTURES};
use curvereg::{Field, HilbertProfile, Ideal, Monomial, MonomialIdeal, PolyRing, Polynomial, PrimeField, Rationals};

const KNOWN_FAILURES: [u32; 2] = [1, 9];

struct Outcome {
    pass: bool,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, lines: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: String) {
        if !ok {
            self.pass = false;
            self.lines.push(format!("violated: {what}"));
        }
    }

    fn note(&mut self, what: String) {
        self.lines.push(what);
    }
}

type Cache = HashMap<String, Ideal<Rationals>>;

fn gf() -> PrimeField {
    PrimeField::default_field()
}

/// Ideal of a fixture; parametrized curves are implicitized, the two image-algebra ones give `None`.
fn curve_ideal<F: Field>(field: F, name: &str, seed: u64) -> curvereg::Result<Option<Ideal<F>>> {
    if SLOW_FIXTURES.contains(&name) {
        return Ok(None);
    }
    let fx = fixture(field, name, seed)?;
    if let Some(i) = fx.ideal() {
        return Ok(Some(i.clone()));
    }
    let p = fx.parametrization().unwrap();
    let imp = implicitize(p, ImplicitMethod::LinearAlgebra, Some(p.degree() + 2))?;
    assert!(!imp.possibly_truncated, "{name}");
    Ok(Some(imp.ideal))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

// ---------------------------------------------------------------- criterion 1

struct Target42 {
    name: &'static str,
    deg: i64,
    reg: u32,
    rho: u32,
    rho_z: u32,
    alpha: [u32; 3],
    saturated: Option<bool>,
    linear_form: Option<bool>,
    case: Option<u8>,
    sat_j: Option<u32>,
}

const TARGETS_42: [Target42; 3] = [
    Target42 { name: "ex42-1b", deg: 15, reg: 6, rho: 5, rho_z: 4, alpha: [2, 3, 4], saturated: Some(true), linear_form: None, case: None, sat_j: None },
    Target42 { name: "ex42-2b", deg: 12, reg: 6, rho: 4, rho_z: 5, alpha: [2, 3, 4], saturated: None, linear_form: Some(true), case: None, sat_j: None },
    Target42 { name: "ex42-3", deg: 9, reg: 5, rho: 2, rho_z: 4, alpha: [2, 3, 3], saturated: None, linear_form: None, case: Some(3), sat_j: Some(5) },
];

fn criterion1_in<F: Field>(field: F, out: &mut Outcome) {
    for t in &TARGETS_42 {
        let fname = field.name();
        let (res, dt) = timed(|| {
            let i = curve_ideal(field.clone(), t.name, 0)?.unwrap();
            curve_invariants(&i, 0, 3, false, Want::all())
        });
        let Ok(inv) = res else {
            out.check(false, format!("{} in {fname}: {}", t.name, res.unwrap_err()));
            continue;
        };
        let tag = format!("{} in {fname}", t.name);
        out.check(inv.degree == t.deg, format!("{tag}: deg {} != {}", inv.degree, t.deg));
        out.check(inv.reg == t.reg, format!("{tag}: reg {} != {}", inv.reg, t.reg));
        out.check(inv.rho == t.rho, format!("{tag}: rho {} != {}", inv.rho, t.rho));
        out.check(inv.rho_z == t.rho_z, format!("{tag}: rho_Z {} != {}", inv.rho_z, t.rho_z));
        out.check(inv.alpha.as_deref() == Some(&t.alpha[..]), format!("{tag}: alpha {:?} != {:?}", inv.alpha, t.alpha));
        if let Some(s) = t.saturated {
            out.check(inv.saturated == Some(s), format!("{tag}: saturated {:?}", inv.saturated));
        }
        if let Some(l) = t.linear_form {
            out.check(inv.section_in_hyperplane == Some(l), format!("{tag}: section linear form {:?}", inv.section_in_hyperplane));
        }
        if let Some(c) = t.case {
            out.check(inv.case == c, format!("{tag}: case {} != {c}", inv.case));
        }
        if let Some(s) = t.sat_j {
            out.check(inv.sat_j == s, format!("{tag}: sat(J) = {}, target {s}", inv.sat_j));
        }
        out.check(dt < Duration::from_secs(10), format!("{tag}: {:.1}s >= 10s", dt.as_secs_f64()));
        out.note(format!("{tag}: {:.2}s", dt.as_secs_f64()));
    }
}

fn criterion1() -> Outcome {
    let mut out = Outcome::new();
    criterion1_in(gf(), &mut out);
    criterion1_in(Rationals, &mut out);
    out
}

// ---------------------------------------------------------------- criterion 2

fn criterion2(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    let (res, dt) = timed(|| -> curvereg::Result<_> {
        let i = curve_ideal(Rationals, "ex44-2", 0)?.unwrap();
        let inv = curve_invariants(&i, 0, 3, false, Want { section_ci: true, ..Want::default() })?;
        Ok((i, inv))
    });
    match res {
        Err(e) => out.check(false, format!("ex44-2: {e}")),
        Ok((i, inv)) => {
            out.check(inv.degree == 21, format!("deg {}", inv.degree));
            out.check(inv.hilbert_polynomial == Some([21, -38]), format!("P_C {:?}", inv.hilbert_polynomial));
            out.check(inv.reg == 12 && inv.reg == inv.rho + 1, format!("reg {} rho {}", inv.reg, inv.rho));
            out.check(inv.alpha_i == Some(5), format!("alpha_I {:?}", inv.alpha_i));
            out.check(inv.omega_i == Some(12), format!("omega_I {:?}", inv.omega_i));
            out.check(inv.rho_z == 8, format!("rho_Z {}", inv.rho_z));
            out.check(inv.section_ci.as_deref() == Some(&[5, 9][..]), format!("section c.i. {:?}", inv.section_ci));
            cache.insert("ex44-2".into(), i);
        }
    }
    out.check(dt < Duration::from_secs(300), format!("{:.1}s >= 300s", dt.as_secs_f64()));
    out.note(format!("ex44-2 in QQ: {:.1}s", dt.as_secs_f64()));
    out
}

// ---------------------------------------------------------------- criterion 3

fn criterion3_in<F: Field>(field: F, out: &mut Outcome, mut keep: impl FnMut(&str, &Ideal<F>)) {
    for (name, deg, reg, rho_z, case) in [("ex36-2", 17, 7, 6, 2), ("ex36-3", 14, 6, 5, 3)] {
        let (_, dt) = timed(|| {
            for seed in 1..=3u64 {
                let tag = format!("{name} seed {seed} in {}", field.name());
                let res = curve_ideal(field.clone(), name, seed).and_then(|i| {
                    let i = i.unwrap();
                    let r = regularity_curve(&i, seed, 3)?;
                    Ok((i, r))
                });
                match res {
                    Err(e) => out.check(false, format!("{tag}: {e}")),
                    Ok((i, r)) => {
                        out.check(
                            (r.degree, r.reg_x, r.rho_z, r.case.number()) == (deg, reg, rho_z, case),
                            format!("{tag}: deg {} reg {} rho_Z {} case {}", r.degree, r.reg_x, r.rho_z, r.case.number()),
                        );
                        if seed == 1 {
                            keep(name, &i);
                        }
                    }
                }
            }
        });
        out.check(dt < Duration::from_secs(300), format!("{name} in {}: {:.1}s", field.name(), dt.as_secs_f64()));
        out.note(format!("{name} in {}, 3 seeds: {:.1}s", field.name(), dt.as_secs_f64()));
    }
}

fn criterion3(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    criterion3_in(gf(), &mut out, |_, _| {});
    criterion3_in(Rationals, &mut out, |n, i| {
        cache.insert(n.to_string(), i.clone());
    });
    out
}

// ---------------------------------------------------------------- criterion 4

fn criterion4() -> Outcome {
    let mut out = Outcome::new();
    let (res, dt) = timed(|| {
        let fx = fixture(gf(), "ex36-1", 0)?;
        image_invariants(fx.parametrization().unwrap(), 0, 3)
    });
    match res {
        Err(e) => out.check(false, format!("ex36-1: {e}")),
        Ok(inv) => {
            out.check(inv.rho + 1 == 21 && inv.omega_i == Some(21), format!("rho+1 {} omega_I {:?}", inv.rho + 1, inv.omega_i));
            out.check(inv.reg == 21, format!("reg {}", inv.reg));
            out.check(inv.case == 1, format!("case {}", inv.case));
            out.check(inv.rho_z == 4, format!("rho_Z {}", inv.rho_z));
            out.check(inv.ballico == Some(10), format!("Ballico {:?}", inv.ballico));
        }
    }
    out.check(dt < Duration::from_secs(1800), format!("{:.1}s", dt.as_secs_f64()));
    out.note(format!("ex36-1 in GF(31991): {:.1}s", dt.as_secs_f64()));
    out
}

// ---------------------------------------------------------------- criterion 5

/// The three regularity formulas and the satiety prediction, computed from Hilbert functions.
fn theorem_oracle<F: Field>(i: &Ideal<F>, seed: u64) -> Result<u32, String> {
    let e = |e: curvereg::Error| e.to_string();
    let hc = i.hilbert().map_err(e)?;
    let sec = general_section(i, seed, 3).map_err(e)?;
    let hz = sec.section_ideal.hilbert().map_err(e)?;
    let hj = sec.raw_j.hilbert().map_err(e)?;
    let rho_z = hz.rho;
    let reg_z = rho_z + 1;
    // least t >= -1 from which H_C = P_C, with H_C(-1) = 0
    let hval = |t: i64| if t < 0 { 0 } else { hc.h(t) };
    let mut rho_c = hc.rho as i64;
    while rho_c > -1 && hval(rho_c - 1) == hc.p(rho_c - 1) {
        rho_c -= 1;
    }

    // J and its saturation agree from some degree on; both Hilbert functions are constant past their rhos
    let top = hj.rho.max(rho_z) as i64 + 1;
    let mut sat = top;
    while sat > 0 && hj.h(sat - 1) == hz.h(sat - 1) {
        sat -= 1;
    }
    let sat = sat as u32;

    let rho1 = (rho_c + 1) as u32;
    let f1 = rho1.max(rho_z + 1);
    let dp = |t: i64| hc.p(t) - hc.p(t - 1);
    let dh = |t: i64| hval(t) - hval(t - 1);
    let mut f2 = rho_c + 2;
    while f2 > (rho_z + 1) as i64 && dh(f2 - 1) == dp(f2 - 1) {
        f2 -= 1;
    }
    let f2 = f2.max((rho_z + 1) as i64) as u32;
    let f3 = sat.max(reg_z);
    if f1 != f2 || f1 != f3 {
        return Err(format!("formulas {f1}, {f2}, {f3} disagree"));
    }
    let predicted = if rho1 >= reg_z {
        sat == rho1
    } else if rho1 + 1 == reg_z {
        sat < reg_z
    } else {
        sat + 1 == reg_z
    };
    if !predicted {
        return Err(format!("satiety prediction fails: rho+1 = {rho1}, reg Z = {reg_z}, sat(J) = {sat}"));
    }
    let lib = regularity_curve(i, seed, 3).map_err(e)?;
    if lib.reg_x != f1 || lib.sat_j != sat {
        return Err(format!("library reports reg {} sat {}, oracle {f1} {sat}", lib.reg_x, lib.sat_j));
    }
    Ok(f1)
}

/// Saturated monomial ideal of a union of multiple structures on coordinate lines of P^n.
fn random_monomial_curve(n: usize, rng: &mut ChaCha8Rng) -> MonomialIdeal {
    loop {
        let nv = n + 1;
        let mut acc: Option<MonomialIdeal> = None;
        for _ in 0..rng.gen_range(1..=3) {
            let a = rng.gen_range(0..nv);
            let b = (a + rng.gen_range(1..nv)) % nv;
            let mut gens = Vec::new();
            for k in (0..nv).filter(|&k| k != a && k != b) {
                gens.push(Monomial::var(nv, k, rng.gen_range(1..=3)).unwrap());
            }
            for _ in 0..rng.gen_range(0..=3) {
                let e: Vec<u32> = (0..nv).map(|_| rng.gen_range(0..=2)).collect();
                let m = Monomial::from_exps(&e).unwrap();
                if m.degree() > 0 {
                    gens.push(m);
                }
            }
            let part = MonomialIdeal::new(nv, gens);
            acc = Some(match acc {
                None => part,
                Some(x) => x.intersect(&part),
            });
        }
        let m = acc.unwrap().saturate();
        if HilbertProfile::of_monomial_ideal(&m).dim == 1 {
            return m;
        }
    }
}

fn criterion5() -> Outcome {
    let mut out = Outcome::new();
    let mut checked = 0;
    for name in all_fixture_names() {
        if SLOW_FIXTURES.contains(&name) {
            let r = fixture(gf(), name, 0).and_then(|fx| curvereg::constructions::analyze_image(fx.parametrization().unwrap(), 0, 3));
            match r {
                Err(e) => out.check(false, format!("{name}: {e}")),
                Ok(a) => {
                    let r = a.report;
                    out.check(
                        r.reg_x == r.reg_via_delta && r.reg_x == r.reg_via_satiety,
                        format!("{name}: {} {} {}", r.reg_x, r.reg_via_delta, r.reg_via_satiety),
                    );
                }
            }
            checked += 1;
            continue;
        }
        match curve_ideal(gf(), name, 0) {
            Err(e) => out.check(false, format!("{name}: {e}")),
            Ok(i) => {
                let r = theorem_oracle(&i.unwrap(), 0);
                out.check(r.is_ok(), format!("{name}: {r:?}"));
            }
        }
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut random = 0;
    let (mut seen, mut distinct) = (std::collections::BTreeSet::new(), std::collections::HashSet::new());
    for n in [3usize, 4] {
        let ring = PolyRing::standard(gf(), n + 1);
        for k in 0..20 {
            let m = random_monomial_curve(n, &mut rng);
            let i = Ideal::from_monomial_ideal(&ring, &m).unwrap();
            let r = theorem_oracle(&i, k);
            out.check(r.is_ok(), format!("random P^{n} #{k} {:?}: {r:?}", m.display_with(ring.names())));
            if let Ok(rep) = regularity_curve(&i, k, 3) {
                seen.insert((rep.degree, rep.reg_x, rep.case.number()));
                distinct.insert(m.gens().to_vec());
            }
            random += 1;
        }
    }
    out.note(format!("{checked} fixtures, {random} random monomial curves ({} distinct)", distinct.len()));
    out.note(format!("random (deg, reg, case): {seen:?}"));
    out
}

// ---------------------------------------------------------------- criterion 6

fn criterion6(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    let (mut agree, mut uncertified) = (0, Vec::new());
    for name in all_fixture_names() {
        if SLOW_FIXTURES.contains(&name) {
            uncertified.push(format!("{name} (no ideal)"));
            continue;
        }
        let i = match cache.get(name) {
            Some(i) => i.clone(),
            None => match curve_ideal(Rationals, name, 0) {
                Ok(i) => i.unwrap(),
                Err(e) => {
                    out.check(false, format!("{name}: {e}"));
                    continue;
                }
            },
        };
        let seed = 0;
        let (res, dt) = timed(|| regularity_via_gin(&i, seed, 3));
        match res {
            Err(curvereg::Error::GenericityNotCertified(m)) => uncertified.push(format!("{name} ({m})")),
            Err(e) => out.check(false, format!("{name}: {e}")),
            Ok((g, _)) => match regularity_curve(&i, seed, 3) {
                Ok(r) => {
                    out.check(g == r.reg_x, format!("{name}: gin {g}, theorem {}", r.reg_x));
                    out.note(format!("{name}: {g} ({:.1}s)", dt.as_secs_f64()));
                    agree += 1;
                }
                Err(e) => out.check(false, format!("{name}: {e}")),
            },
        }
    }
    out.note(format!("{agree} certified, not certified: {uncertified:?}"));
    out
}

// ---------------------------------------------------------------- criterion 7

fn brute_hilbert(m: &MonomialIdeal, t: u32) -> i64 {
    fn rec(m: &MonomialIdeal, e: &mut Vec<u32>, k: usize, left: u32) -> i64 {
        if k + 1 == e.len() {
            e[k] = left;
            let inside = m.gens().iter().any(|g| (0..e.len()).all(|j| g.exp(j) <= e[j]));
            return i64::from(!inside);
        }
        (0..=left)
            .map(|a| {
                e[k] = a;
                rec(m, e, k + 1, left - a)
            })
            .sum()
    }
    rec(m, &mut vec![0; m.nvars()], 0, t)
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let pw = |mut b: u64, mut e: u64| {
        let mut a = 1;
        while e > 0 {
            if e & 1 == 1 {
                a = a * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        a
    };
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pw(rows[rank][c], p - 2);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c] * inv % p;
                for j in c..ncols {
                    rows[r][j] = (rows[r][j] + p * p - f * rows[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Membership of a homogeneous `f` by comparing ranks of the degree-`d` piece.
fn in_ideal_by_rank(gens: &[Polynomial<PrimeField>], f: &Polynomial<PrimeField>, d: u32, p: u64) -> bool {
    let ring = f.ring();
    let basis = monomials_of_degree(ring.nvars(), d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let row = |g: &Polynomial<PrimeField>| {
        let mut v = vec![0u64; basis.len()];
        for (m, c) in g.terms() {
            v[index[m]] = *c as u64;
        }
        v
    };
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.homogeneous_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), d - dg) {
            rows.push(row(&g.mul_term(&m, &1)));
        }
    }
    let r0 = rank_mod_p(rows.clone(), p);
    rows.push(row(f));
    rank_mod_p(rows, p) == r0
}

fn criterion7() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for k in 0..50 {
        let nv = rng.gen_range(2..=5);
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=6))
            .map(|_| {
                let mut e = vec![0u32; nv];
                for _ in 0..rng.gen_range(1..=5) {
                    e[rng.gen_range(0..nv)] += 1;
                }
                Monomial::from_exps(&e).unwrap()
            })
            .collect();
        let m = MonomialIdeal::new(nv, gens);
        let h = HilbertProfile::of_monomial_ideal(&m);
        for t in 0..=8 {
            let b = brute_hilbert(&m, t);
            out.check(h.h(t as i64) == b, format!("hilbert #{k} t={t}: {} vs {b}", h.h(t as i64)));
        }
    }

    let field = gf();
    let p = field.p();
    let mut members = 0;
    for k in 0..20 {
        let ring = PolyRing::standard(field, rng.gen_range(3..=4));
        let gens: Vec<_> = (0..rng.gen_range(2..=3)).map(|_| random_form(&ring, rng.gen_range(1..=3), &mut rng)).collect();
        let i = Ideal::new(&ring, gens.clone()).unwrap();
        for d in 0..=6u32 {
            let mut f = Polynomial::zero(&ring);
            for g in &gens {
                let dg = g.homogeneous_degree().unwrap();
                if dg <= d {
                    f = f.try_add(&g.try_mul(&random_form(&ring, d - dg, &mut rng)).unwrap()).unwrap();
                }
            }
            let noise = random_form(&ring, d, &mut rng);
            for cand in [f.clone(), f.try_add(&noise).unwrap(), noise] {
                let lib = i.contains(&cand).unwrap();
                let la = in_ideal_by_rank(&gens, &cand, d, p);
                out.check(lib == la, format!("membership #{k} d={d}: normal form {lib}, rank {la}"));
                members += usize::from(la);
            }
        }
    }

    let mut sat_checked = 0;
    for name in all_fixture_names() {
        let Ok(Some(i)) = curve_ideal(field, name, 0) else { continue };
        let ring = i.ring().clone();
        let sat = i.saturate().unwrap();
        out.check(sat.equals(&i).unwrap(), format!("{name}: fixture not saturated"));
        out.check(sat.saturate().unwrap().equals(&sat).unwrap(), format!("{name}: saturation not a fixpoint"));
        let maxi = Ideal::new(&ring, (0..ring.nvars()).map(|j| var(&ring, j)).collect()).unwrap();
        let j = i.product(&maxi).unwrap();
        let sj = j.saturate().unwrap();
        out.check(sj.equals(&i).unwrap(), format!("{name}: (I m)^sat != I"));
        for g in sj.minimal_generators().unwrap() {
            for x in 0..ring.nvars() {
                let mut h = g.clone();
                let found = (0..=4).any(|_| {
                    let inside = j.contains(&h).unwrap();
                    h = h.try_mul(&var(&ring, x)).unwrap();
                    inside
                });
                out.check(found, format!("{name}: no witness exponent for x{x} * {g}"));
            }
        }
        let w = j.saturation_witnesses(&sj, 8).unwrap();
        out.check(w.iter().all(|(_, r)| r.iter().all(|e| e.is_some())), format!("{name}: library witnesses missing"));
        sat_checked += 1;
    }
    out.note(format!("50 Hilbert functions, 420 membership tests ({members} members), {sat_checked} fixtures saturated"));
    out
}

// ---------------------------------------------------------------- criterion 8

/// `(s, lambda_0, ..., lambda_{s-1})` read from `(x0^s, x0^{s-1} x1^{l_{s-1}}, ..., x1^{l_0})`.
fn read_shape(m: &MonomialIdeal) -> Option<(u32, Vec<u32>)> {
    let mut by_x0: HashMap<u32, u32> = HashMap::new();
    for g in m.gens() {
        if g.exp(2) != 0 {
            return None;
        }
        by_x0.insert(g.exp(0), g.exp(1));
    }
    let s = *by_x0.keys().max()?;
    if by_x0.len() != s as usize + 1 || by_x0[&s] != 0 {
        return None;
    }
    Some((s, (0..s).map(|i| by_x0[&i]).collect()))
}

fn criterion8(cache: &mut Cache) -> Outcome {
    let mut out = Outcome::new();
    for name in ["twisted-cubic", "elliptic-quintic-p3"] {
        let res = (|| -> curvereg::Result<_> {
            let i = curve_ideal(Rationals, name, 0)?.unwrap();
            let z = general_section(&i, 0, 3)?.section_ideal;
            let hz = z.hilbert()?.clone();
            let g = gin(&z, 0, 3)?;
            Ok((hz, g.gin))
        })();
        let (hz, g) = match res {
            Ok(v) => v,
            Err(e) => {
                out.check(false, format!("{name}: {e}"));
                continue;
            }
        };
        let Some((s, l)) = read_shape(&g) else {
            out.check(false, format!("{name}: gin {g:?} is not of the plane-points shape"));
            continue;
        };
        let deg = hz.degree as u64;
        let spacing = l.windows(2).all(|w| w[0] <= w[1] + 2 && w[1] < w[0]);
        out.check(spacing, format!("{name}: spacing {l:?}"));
        out.check(l.iter().map(|&x| x as u64).sum::<u64>() == deg, format!("{name}: sum {l:?} != {deg}"));
        out.check(l[0] == hz.rho + 1, format!("{name}: lambda_0 {} != rho_Z + 1 = {}", l[0], hz.rho + 1));
        let (s64, l0) = (s as u64, l[0] as u64);
        let lower = 2 * deg + s64 * (s64 - 1) <= 2 * s64 * l0;
        let upper = s64 * l0 <= deg + s64 * (s64 - 1);
        out.check(lower && upper, format!("{name}: lambda_0 inequalities {lower} {upper}"));
        let lib = gin_shape_check(s, l[0], deg, true).unwrap();
        out.check(lib == ShapeCheck::Holds, format!("{name}: library says {lib:?}"));
        out.note(format!("{name}: s = {s}, lambdas = {l:?}"));
    }
    let i = match cache.get("ex44-2") {
        Some(i) => i.clone(),
        None => curve_ideal(Rationals, "ex44-2", 0).unwrap().unwrap(),
    };
    let z = general_section(&i, 0, 3).unwrap().section_ideal;
    let hz = z.hilbert().unwrap();
    let g = gin(&z, 0, 3).unwrap().gin;
    match read_shape(&g) {
        Some((s, l)) => match gin_shape_check(s, l[0], hz.degree as u64, false).unwrap() {
            ShapeCheck::NotApplicable(why) => out.note(format!("ex44-2 section: not applicable ({why})")),
            other => out.check(false, format!("ex44-2 section: {other:?}")),
        },
        None => out.check(false, format!("ex44-2 section gin {g:?} has no plane-points shape")),
    }
    out
}

// ---------------------------------------------------------------- criterion 9

fn criterion9() -> Outcome {
    let mut out = Outcome::new();
    let (rows, dt) = timed(|| arithmetic_suite().iter().map(check_row).collect::<Vec<_>>());
    for r in &rows {
        out.check(r.passed, format!("{}: {}", r.name, r.mismatches.join("; ")));
    }
    out.check(dt < Duration::from_secs(1), format!("{:.3}s", dt.as_secs_f64()));
    out.note(format!("{} rows in {:.3}s", rows.len(), dt.as_secs_f64()));
    out
}

fn main() {
    let mut cache = Cache::new();
    let mut failed = Vec::new();
    let titles = [
        "monomial curves of degree 15, 12 and 9",
        "degree-21 double link, char 0",
        "degree-17 and degree-14 double links, 3 seeds",
        "degree-30 rational curve",
        "regularity formulas and satiety predictions",
        "gin regularity, char 0",
        "engine oracles",
        "gin shape of plane sections",
        "bound arithmetic",
    ];
    // `cargo test --test acceptance -- 3 5` runs a subset
    let only: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    for (k, title) in titles.iter().enumerate() {
        let n = k as u32 + 1;
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let (out, dt) = timed(|| match n {
            1 => criterion1(),
            2 => criterion2(&mut cache),
            3 => criterion3(&mut cache),
            4 => criterion4(),
            5 => criterion5(),
            6 => criterion6(&mut cache),
            7 => criterion7(),
            8 => criterion8(&mut cache),
            _ => criterion9(),
        });
        let status = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {n}: {status}  {title} ({:.1}s)", dt.as_secs_f64());
        for l in &out.lines {
            println!("    {l}");
        }
        if !out.pass {
            failed.push(n);
        }
    }
    let expected: Vec<u32> = KNOWN_FAILURES.into_iter().filter(|n| only.is_empty() || only.contains(n)).collect();
    if failed != expected {
        println!("failing criteria {failed:?}, expected exactly {expected:?}");
        std::process::exit(1);
    }
    println!("failing criteria match the documented set {expected:?}");
}
