//! The `curvereg` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bounds::{arithmetic_suite, bound_report, check_row, verdict, BoundInputs, Flags};
use crate::constructions::{
    basic_double_link_general, implicitize, link, minimal_ci_degrees, CIWitness, ImplicitMethod, Parametrization,
};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use crate::ideal::Ideal;
use crate::linear_change::rng_for;
use crate::parse::{parse_file, FieldKind, IdealFile};
use crate::poly::Ring;
use crate::regularity::{general_section, gin, gin_shape, regularity_curve, satiety, trial_seed, DEFAULT_TRIALS};
use crate::reproduce::{all_fixture_names, check_fixture, curve_invariants, fast_fixture_names, Want};

#[derive(Parser, Debug)]
#[command(name = "curvereg", version, about = "Regularity of projective curves and related ideal computations")]
pub struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field characteristic, 0 for the rationals. Defaults to the field declared in the file.
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Independent random draws that must agree.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Groebner basis.
    Gb(FileArgs),
    /// Hilbert function, polynomial and regularity index.
    Hilbert(FileArgs),
    /// Saturation with respect to the irrelevant ideal.
    Saturate(FileArgs),
    /// Satiety of the ideal.
    Satiety(FileArgs),
    /// General hyperplane section of a curve.
    Section(FileArgs),
    /// Generic initial ideal in degrevlex.
    Gin(FileArgs),
    /// Regularity of a curve through its general hyperplane section.
    Regularity {
        #[command(flatten)]
        input: FileArgs,
        /// The curve is integral (enables the generator-degree shortcut for `alpha`).
        #[arg(long)]
        integral: bool,
        /// Also compute the minimal complete-intersection degrees.
        #[arg(long)]
        ci: bool,
    },
    /// Minimal degrees of a complete intersection containing the scheme.
    Ci {
        #[command(flatten)]
        input: FileArgs,
        #[arg(long)]
        integral: bool,
    },
    /// Regularity bounds compared with the computed regularity.
    Bounds {
        #[command(flatten)]
        input: FileArgs,
        /// Comma-separated hypotheses: integral, connected, non-special, lcm, quadric, char0.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        flags: Vec<String>,
    },
    /// Ideal of the image of the parametrization in the file.
    Implicitize {
        file: String,
        #[arg(long, value_enum, default_value_t = Method::LinearAlgebra)]
        method: Method,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Basic double link of the given type.
    Bdl {
        #[command(flatten)]
        input: FileArgs,
        /// Degrees `a_1,...,a_{n-1}`; `a_1` is the general form.
        #[arg(long, value_delimiter = ',', required = true)]
        types: Vec<u32>,
    },
    /// Residual scheme in a complete intersection.
    Link {
        #[command(flatten)]
        input: FileArgs,
        /// Degrees of a random complete intersection inside the ideal.
        #[arg(long, value_delimiter = ',', conflicts_with = "with")]
        degrees: Vec<u32>,
        /// Name of an ideal in the same file whose generators form the complete intersection.
        #[arg(long)]
        with: Option<String>,
    },
    /// Rebuild the example curves and compare with their recorded invariants.
    Reproduce {
        #[arg(value_enum)]
        subset: Subset,
    },
}

#[derive(clap::Args, Debug)]
pub struct FileArgs {
    pub file: String,
    /// Ideal to use when the file declares several.
    #[arg(long)]
    pub ideal: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    LinearAlgebra,
    Elimination,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subset {
    Fast,
    Full,
    Arithmetic,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReportInvariants {
    pub deg: Option<i64>,
    pub rho: Option<u32>,
    pub rho_section: Option<u32>,
    #[serde(rename = "sat_J")]
    pub sat_j: Option<u32>,
    pub reg: Option<u32>,
    #[serde(rename = "alpha_I")]
    pub alpha_i: Option<u32>,
    #[serde(rename = "omega_I")]
    pub omega_i: Option<u32>,
    pub alpha: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSummary {
    pub name: String,
    pub applicable: bool,
    pub value: Option<u64>,
    pub sharp: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: Option<String>,
    pub field: String,
    pub seed: u64,
    pub trials: usize,
    pub invariants: ReportInvariants,
    pub bounds: Vec<BoundSummary>,
    pub results: Value,
    pub warnings: Vec<String>,
    /// Set when the run found a mathematical inconsistency.
    pub failed: bool,
    pub timing_ms: u128,
}

impl RunReport {
    fn new(command: &str, field: String, cli: &Cli) -> Self {
        RunReport {
            command: command.into(),
            input_digest: None,
            field,
            seed: cli.seed,
            trials: cli.trials,
            invariants: ReportInvariants::default(),
            bounds: Vec::new(),
            results: Value::Null,
            warnings: Vec::new(),
            failed: false,
            timing_ms: 0,
        }
    }

    /// Aligned `key: value` text.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\nfield: {}\nseed: {}\n", self.command, self.field, self.seed);
        let inv = &self.invariants;
        let show = |v: &Option<u32>| v.map(|x| x.to_string());
        let present: Vec<(&str, String)> = [
            ("deg", inv.deg.map(|x| x.to_string())),
            ("rho", show(&inv.rho)),
            ("rho_section", show(&inv.rho_section)),
            ("sat_J", show(&inv.sat_j)),
            ("reg", show(&inv.reg)),
            ("alpha_I", show(&inv.alpha_i)),
            ("omega_I", show(&inv.omega_i)),
            ("alpha", inv.alpha.as_ref().map(|a| format!("{a:?}"))),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect();
        if !present.is_empty() {
            out.push_str("invariants:\n");
            for (k, v) in present {
                out.push_str(&format!("  {k:<22} {v}\n"));
            }
        }
        if !self.bounds.is_empty() {
            out.push_str("bounds:\n");
            for b in &self.bounds {
                let v = b.value.map_or("n/a".to_string(), |v| v.to_string());
                let s = match b.sharp {
                    Some(true) => " sharp",
                    _ => "",
                };
                out.push_str(&format!("  {:<22} {v}{s}\n", b.name));
            }
        }
        if !self.results.is_null() {
            out.push_str("results:\n");
            text_value(&self.results, 1, &mut out);
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn text_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        text_value(x, indent + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|e| e.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for e in a {
                            text_value(e, indent + 1, out);
                            out.push_str(&format!("{pad}  --\n"));
                        }
                    }
                    Value::Array(a) if a.iter().all(|e| e.is_string()) && !a.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for e in a {
                            out.push_str(&format!("{pad}  {}\n", e.as_str().unwrap()));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k:<22} {x}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

/// Runs the command line and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&report).unwrap() + "\n"
            } else {
                report.to_text()
            };
            // a closed pipe is not an error of the computation
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.failed {
                2
            } else {
                0
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"error": e.to_string(), "mathematical": e.is_mathematical()}));
            }
            eprintln!("error: {e}");
            if e.is_mathematical() {
                2
            } else {
                1
            }
        }
    }
}

/// Parses arguments and runs without printing.
pub fn run(cli: &Cli) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Reproduce { subset } => reproduce(cli, *subset)?,
        cmd => {
            let path = file_of(cmd);
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            let file = parse_file(&text)?;
            let kind = match cli.characteristic {
                None => file.ring.field,
                Some(0) => FieldKind::Rationals,
                Some(p) => FieldKind::Prime(p),
            };
            let mut r = match kind {
                FieldKind::Prime(p) => run_file(cli, &file, PrimeField::new(p)?)?,
                FieldKind::Rationals => run_file(cli, &file, Rationals)?,
            };
            r.input_digest = Some(format!("{:x}", Sha256::digest(text.as_bytes())));
            r
        }
    };
    report.timing_ms = start.elapsed().as_millis();
    Ok(report)
}

fn file_of(cmd: &Command) -> &str {
    match cmd {
        Command::Gb(a)
        | Command::Hilbert(a)
        | Command::Saturate(a)
        | Command::Satiety(a)
        | Command::Section(a)
        | Command::Gin(a)
        | Command::Regularity { input: a, .. }
        | Command::Ci { input: a, .. }
        | Command::Bounds { input: a, .. }
        | Command::Bdl { input: a, .. }
        | Command::Link { input: a, .. } => &a.file,
        Command::Implicitize { file, .. } => file,
        Command::Reproduce { .. } => unreachable!(),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Gb(_) => "gb",
        Command::Hilbert(_) => "hilbert",
        Command::Saturate(_) => "saturate",
        Command::Satiety(_) => "satiety",
        Command::Section(_) => "section",
        Command::Gin(_) => "gin",
        Command::Regularity { .. } => "regularity",
        Command::Ci { .. } => "ci",
        Command::Bounds { .. } => "bounds",
        Command::Implicitize { .. } => "implicitize",
        Command::Bdl { .. } => "bdl",
        Command::Link { .. } => "link",
        Command::Reproduce { .. } => "reproduce",
    }
}

fn strings<F: Field>(ps: &[crate::poly::Polynomial<F>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn load_ideal<F: Field>(file: &IdealFile, ring: &Ring<F>, name: Option<&str>) -> Result<Ideal<F>> {
    let gens = file.generators(ring, name)?;
    if gens.is_empty() {
        return Err(Error::InvalidArgument("empty ideal".into()));
    }
    Ideal::new(ring, gens)
}

fn require_saturated<F: Field>(i: &Ideal<F>) -> Result<()> {
    if !i.is_saturated()? {
        return Err(Error::InvalidArgument("ideal is not saturated (see `saturate`)".into()));
    }
    Ok(())
}

fn parse_flags(names: &[String]) -> Result<Flags> {
    let mut f = Flags::default();
    for n in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match n {
            "integral" => f.integral = true,
            "connected" => f.connected = true,
            "non-special" => f.non_special = true,
            "lcm" => f.locally_cm = true,
            "quadric" => f.in_quadric = true,
            "char0" => f.char0 = true,
            other => return Err(Error::InvalidArgument(format!("unknown flag `{other}`"))),
        }
    }
    Ok(f)
}

fn run_file<F: Field>(cli: &Cli, file: &IdealFile, field: F) -> Result<RunReport> {
    let ring = file.ring.build(field.clone())?;
    let mut rep = RunReport::new(command_name(&cli.command), field.name(), cli);
    let (seed, trials) = (cli.seed, cli.trials);
    match &cli.command {
        Command::Gb(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            let gb = i.groebner_basis()?;
            rep.results = json!({ "basis": strings(gb), "size": gb.len() });
        }
        Command::Hilbert(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            let h = i.hilbert()?;
            rep.invariants.deg = Some(h.degree);
            rep.invariants.rho = Some(h.rho);
            rep.results = json!({
                "dim": h.dim,
                "degree": h.degree,
                "polynomial": h.polynomial.to_string(),
                "numerator": h.numerator,
                "rho": h.rho,
                "values": h.values,
            });
        }
        Command::Saturate(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            let s = i.saturate()?;
            let sat = crate::regularity::satiety_with(&i, &s)?;
            rep.results = json!({
                "saturation": strings(s.minimal_generators()?),
                "was_saturated": sat == 0,
                "satiety": sat,
            });
        }
        Command::Satiety(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            rep.results = json!({ "satiety": satiety(&i)? });
        }
        Command::Section(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            let s = general_section(&i, seed, trials)?;
            let z = s.section_ideal.hilbert()?;
            rep.invariants.rho_section = Some(z.rho);
            rep.invariants.sat_j = Some(crate::regularity::satiety_with(&s.raw_j, &s.section_ideal)?);
            rep.warnings.extend(s.warnings.iter().cloned());
            rep.results = json!({
                "section": strings(s.section_ideal.minimal_generators()?),
                "section_degree": z.degree,
                "section_hilbert": z.values,
                "in_hyperplane": s.is_degenerate()?,
                "seeds_agreeing": s.seeds_agreeing,
                "rejected_seeds": s.rejected_seeds,
            });
        }
        Command::Gin(a) => {
            let i = load_ideal(file, &ring, a.ideal.as_deref())?;
            let g = gin(&i, seed, trials)?;
            rep.warnings.extend(g.warnings.iter().cloned());
            let mut res = json!({
                "gin": g.gin.display_with(ring.names()),
                "borel_fixed": g.borel_fixed,
                "reg_via_gin": g.gin.max_degree().unwrap_or(0),
                "seeds_agreeing": g.seeds_agreeing,
            });
            if ring.nvars() == 3 && i.hilbert()?.dim == 0 {
                let m = g.gin.saturate();
                res["shape"] = match gin_shape(&m, None, None) {
                    Ok(s) => json!({ "s": s.s, "lambdas": s.lambdas, "spacing_ok": s.spacing_ok() }),
                    Err(e) => json!(e.to_string()),
                };
            }
            rep.results = res;
        }
        Command::Regularity { input, integral, ci } => {
            let i = load_ideal(file, &ring, input.ideal.as_deref())?;
            require_saturated(&i)?;
            let r = regularity_curve(&i, seed, trials)?;
            let gens = i.generator_degrees()?;
            rep.invariants = ReportInvariants {
                deg: Some(r.degree),
                rho: Some(r.rho_x),
                rho_section: Some(r.rho_z),
                sat_j: Some(r.sat_j),
                reg: Some(r.reg_x),
                alpha_i: gens.first().copied(),
                omega_i: gens.last().copied(),
                alpha: None,
            };
            if *ci {
                let w = minimal_ci_degrees(&i, trials, trial_seed(seed, 500), *integral)?;
                rep.warnings.extend(w.warnings.iter().cloned());
                rep.invariants.alpha = Some(w.degrees);
            }
            rep.warnings.extend(r.warnings.iter().cloned());
            rep.results = json!({
                "case": r.case.number(),
                "reg_max_formula": r.reg_x,
                "reg_delta_formula": r.reg_via_delta,
                "reg_satiety_formula": r.reg_via_satiety,
                "section_in_hyperplane": r.section_degenerate,
                "generator_degrees": gens,
            });
        }
        Command::Ci { input, integral } => {
            let i = load_ideal(file, &ring, input.ideal.as_deref())?;
            let w = minimal_ci_degrees(&i, trials, seed, *integral)?;
            rep.invariants.alpha = Some(w.degrees.clone());
            rep.warnings.extend(w.warnings.iter().cloned());
            rep.results = json!({
                "degrees": w.degrees,
                "witness": strings(&w.polys),
                "upper_bound_only": w.upper_bound_only,
                "trials_used": w.trials_used,
            });
        }
        Command::Bounds { input, flags } => {
            let i = load_ideal(file, &ring, input.ideal.as_deref())?;
            require_saturated(&i)?;
            let mut flags = parse_flags(flags)?;
            if field.characteristic() != 0 && flags.char0 {
                rep.warnings.push("char0 flag ignored in positive characteristic".into());
                flags.char0 = false;
            }
            let inv = curve_invariants(&i, seed, trials, flags.integral, Want { alpha: true, ..Want::default() })?;
            rep.warnings.extend(inv.warnings.iter().cloned());
            rep.invariants = ReportInvariants {
                deg: Some(inv.degree),
                rho: Some(inv.rho),
                rho_section: Some(inv.rho_z),
                sat_j: Some(inv.sat_j),
                reg: Some(inv.reg),
                alpha_i: inv.alpha_i,
                omega_i: inv.omega_i,
                alpha: inv.alpha.clone(),
            };
            let inputs = BoundInputs {
                n: ring.nvars() - 1,
                deg: inv.degree as u64,
                rho: inv.rho,
                alpha_i: inv.alpha_i,
                omega_i: inv.omega_i,
                alpha: inv.alpha.clone(),
                generator_degrees: inv.generator_degrees.clone(),
                flags,
            };
            let report = bound_report(&inputs);
            let judged = match verdict(report.clone(), inv.reg) {
                Ok(r) => r,
                Err(e) => {
                    rep.failed = true;
                    rep.warnings.push(e.to_string());
                    report
                }
            };
            rep.bounds = judged
                .entries
                .iter()
                .map(|b| BoundSummary {
                    name: b.name.clone(),
                    applicable: b.applicable,
                    value: b.value,
                    sharp: b.sharp,
                })
                .collect();
            let reasons: BTreeMap<&str, &str> = judged
                .entries
                .iter()
                .filter_map(|b| b.reason.as_deref().map(|r| (b.name.as_str(), r)))
                .collect();
            rep.results = json!({ "reasons": reasons, "case": inv.case });
        }
        Command::Implicitize { method, degree_bound, .. } => {
            let (params, images) = file
                .parametrization(&ring)?
                .ok_or_else(|| Error::InvalidArgument("file declares no parametrization".into()))?;
            let p = Parametrization::new(&params, &ring, images)?;
            let m = match method {
                Method::LinearAlgebra => ImplicitMethod::LinearAlgebra,
                Method::Elimination => ImplicitMethod::Elimination,
                Method::Both => ImplicitMethod::Both,
            };
            let bound = degree_bound.or(match m {
                ImplicitMethod::Elimination => None,
                _ => Some(p.degree() + 2),
            });
            let r = implicitize(&p, m, bound)?;
            rep.warnings.extend(r.warnings.iter().cloned());
            let h = r.ideal.hilbert()?;
            rep.invariants.deg = Some(h.degree);
            rep.invariants.rho = Some(h.rho);
            let gens = r.ideal.minimal_generators()?;
            rep.results = json!({
                "generators": strings(gens),
                "possibly_truncated": r.possibly_truncated,
                "degree_bound": r.degree_bound,
            });
        }
        Command::Bdl { input, types } => {
            let i = load_ideal(file, &ring, input.ideal.as_deref())?;
            let d = basic_double_link_general(&i, types, seed)?;
            let h = d.ideal.hilbert()?;
            rep.invariants.deg = Some(h.degree);
            rep.invariants.rho = Some(h.rho);
            rep.results = json!({
                "generators": strings(d.ideal.minimal_generators()?),
                "general_form": d.f1.to_string(),
                "others": strings(&d.others),
                "hilbert_polynomial": h.polynomial.to_string(),
                "draws": d.draws,
            });
        }
        Command::Link { input, degrees, with } => {
            let i = load_ideal(file, &ring, input.ideal.as_deref())?;
            let w = match with {
                Some(name) => CIWitness::from_polys(file.generators(&ring, Some(name))?, seed)?,
                None if !degrees.is_empty() => random_ci(&i, degrees, seed)?,
                None => return Err(Error::InvalidArgument("give --degrees or --with".into())),
            };
            let l = link(&i, &w)?;
            let h = l.ideal.hilbert()?;
            rep.invariants.deg = Some(h.degree);
            rep.results = json!({
                "linked": strings(l.ideal.minimal_generators()?),
                "complete_intersection": strings(&w.polys),
                "empty": l.empty,
                "hilbert_polynomial": h.polynomial.to_string(),
                "delta_identity_checked": l.delta_identity_checked,
            });
        }
        Command::Reproduce { .. } => unreachable!(),
    }
    Ok(rep)
}

/// Random elements of `I` of the given degrees forming a regular sequence.
fn random_ci<F: Field>(i: &Ideal<F>, degrees: &[u32], seed: u64) -> Result<CIWitness<F>> {
    for k in 0..crate::linear_change::MAX_DRAWS {
        let s = trial_seed(seed, 700 + k);
        let mut rng = rng_for(s);
        let polys = degrees
            .iter()
            .map(|&d| i.random_element(d, &mut rng))
            .collect::<Result<Vec<_>>>()?;
        if polys.iter().any(|p| p.is_zero()) {
            return Err(Error::InvalidArgument(format!("ideal has no elements in some degree of {degrees:?}")));
        }
        if let Ok(w) = CIWitness::from_polys(polys, s) {
            return Ok(w);
        }
    }
    Err(Error::Exhausted(format!("no regular sequence of degrees {degrees:?} found in the ideal")))
}

fn reproduce(cli: &Cli, subset: Subset) -> Result<RunReport> {
    let p = cli.characteristic.unwrap_or(DEFAULT_PRIME);
    let field_name = if p == 0 { "QQ".to_string() } else { PrimeField::new(p)?.name() };
    let mut rep = RunReport::new("reproduce", field_name, cli);
    if subset == Subset::Arithmetic {
        let rows: Vec<_> = arithmetic_suite().iter().map(check_row).collect();
        rep.failed = rows.iter().any(|r| !r.passed);
        rep.results = json!({ "subset": "arithmetic", "rows": rows });
        return Ok(rep);
    }
    let names = match subset {
        Subset::Fast => fast_fixture_names(),
        _ => all_fixture_names(),
    };
    let mut checks = Vec::new();
    for n in names {
        let c = if p == 0 {
            check_fixture(Rationals, n, cli.seed, cli.trials)
        } else {
            check_fixture(PrimeField::new(p)?, n, cli.seed, cli.trials)
        };
        checks.push(c);
    }
    rep.failed = checks.iter().any(|c| !c.passed());
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            let mismatches: Vec<Value> = c
                .rows
                .iter()
                .filter(|r| !r.pass)
                .map(|r| json!({"invariant": r.invariant, "expected": r.expected, "computed": r.computed}))
                .collect();
            json!({
                "fixture": c.name,
                "pass": c.passed(),
                "checked": c.rows.len(),
                "mismatches": mismatches,
                "error": c.error,
            })
        })
        .collect();
    for c in &checks {
        if let Some(inv) = &c.invariants {
            rep.warnings.extend(inv.warnings.iter().map(|w| format!("{}: {w}", c.name)));
        }
    }
    rep.warnings.sort();
    rep.warnings.dedup();
    rep.results = json!({
        "subset": match subset { Subset::Fast => "fast", _ => "full" },
        "fixtures": rows,
    });
    Ok(rep)
}
