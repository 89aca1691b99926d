//! Command-line front end. [`main`] parses arguments, runs one command and
//! returns the process exit code: 0 pass, 1 verified failure, 2 usage error.
//! Failures print a single JSON line `{"error": kind, "message": text}` on
//! stderr.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bohr::{bohr_set, BohrSpec};
use crate::density::{density_along, weyl_profile, IndexSequence, IntegerSet, Theta};
use crate::engine::{
    certify, large_spectrum, uniform_measure_on, CertificateInputs, FiniteAction, PointSet, Representation,
    Theorem,
};
use crate::error::{Error, Result};
use crate::groups::{parse_group, ElementSet, Group};
use crate::instances::{
    arithmetic_progression, doubled_translation, interval, polygon_action, quadratic_residues, quotient_action,
    random_set, rng, unit_vector_with_invariant_mass, InstanceRng,
};
use crate::repr::{irreps, seminorm_set, spectrum_norms, IrrepId};
use crate::selftest::{self, SelftestOptions};
use crate::sweep::{
    exhaustive_comb, pass_rate, random_grid, rows_to_csv, run_all, run_instance, GridConfig, GroupPool, Instance,
    RowVerdict,
};

pub const ZDEMO_LABEL: &str = "demonstration — no theorem verified";
pub const ZDEMO_N_MAX: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "bohrcert",
    version,
    about = "Bohr-set containment certificates for A B B^-1 on finite groups",
    after_help = "Exit codes: 0 pass, 1 verified failure, 2 usage error."
)]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; json by default for certify, csv otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one certificate and check it with the oracle.
    ///
    /// CSV columns: index,group,theorem,alpha,beta,r,spectrum_size,bound,eps,
    /// base_point,margin_bohr,margin_levelset,margin_bound,verdict,error
    Certify(CertifyArgs),
    /// Run a grid of certificates; the pass rate goes to stderr.
    ///
    /// CSV columns: index,group,theorem,alpha,beta,r,spectrum_size,bound,eps,
    /// base_point,margin_bohr,margin_levelset,margin_bound,verdict,error
    Sweep(SweepArgs),
    /// Dump the operator norms of sigma(mu_A) over the irrep catalog.
    ///
    /// CSV columns: irrep,dim,norm,large
    Spectrum(SpectrumArgs),
    /// Enumerate the Bohr set U_{S,eps}.
    ///
    /// CSV columns: element,seminorm
    Bohr(BohrArgs),
    /// Densities and Weyl averages along a sequence in Z (no theorem is
    /// verified).
    ///
    /// CSV columns: n,term,density, then one weyl:<theta> column per theta
    Zdemo(ZdemoArgs),
    /// Run the invariant suite.
    ///
    /// CSV columns: check,passed,detail
    Selftest(SelftestArgs),
}

/// Set syntax: `all`, `0,3,6,9`, `random:<density>`, `interval:<len>`,
/// `ap:<start>:<step>:<len>`, `qr` (the last two in cyclic `Z_n` only).
#[derive(Args, Debug)]
pub struct CertifyArgs {
    /// Group descriptor: Z12, Z2xZ3, D8, A5.
    #[arg(long)]
    pub group: String,
    #[arg(long, value_enum, default_value_t = TheoremArg::Comb)]
    pub theorem: TheoremArg,
    /// The set A.
    #[arg(long = "A")]
    pub a: Option<String>,
    /// The set B (points of the action for erg).
    #[arg(long = "B")]
    pub b: Option<String>,
    /// Draw A (and B) at random with densities --alpha and --beta.
    #[arg(long)]
    pub random: bool,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Density of random B, or the invariant mass ||Pu||^2 for uni.
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Action for erg: translation, polygon, doubled, quotient:<m>.
    #[arg(long, default_value = "translation")]
    pub action: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Comb,
    Erg,
    Uni,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Comb => Theorem::Comb,
            TheoremArg::Erg => Theorem::Erg,
            TheoremArg::Uni => Theorem::Uni,
        }
    }
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Every pair of nonempty subsets of this group (order <= 10), theorem comb.
    #[arg(long, conflicts_with_all = ["groups", "mixed"])]
    pub exhaustive: Option<String>,
    /// Comma-separated group descriptors; D3..D24 style ranges are accepted.
    #[arg(long, conflicts_with = "mixed")]
    pub groups: Option<String>,
    /// Draw groups from Z_N (12..256), Z_a x Z_b (2..16), D_n (3..24).
    #[arg(long)]
    pub mixed: bool,
    /// Instances per listed group, or total draws with --mixed.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Level-set thresholds r as fractions of beta.
    #[arg(long, default_value = "0,0.25,0.5")]
    pub r_fractions: String,
    #[arg(long, value_enum, default_value_t = SweepTheorem::Both)]
    pub theorem: SweepTheorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepTheorem {
    Comb,
    Erg,
    Both,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub group: String,
    /// The set A, same syntax as certify.
    #[arg(long = "A")]
    pub a: Option<String>,
    #[arg(long)]
    pub random: bool,
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Mark irreps with norm above delta as large.
    #[arg(long)]
    pub delta: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BohrArgs {
    #[arg(long)]
    pub group: String,
    /// Irrep ids separated by commas or semicolons, e.g. "chi(4),chi(8)".
    #[arg(long, default_value = "")]
    pub freqs: String,
    #[arg(long)]
    pub eps: f64,
}

#[derive(Args, Debug)]
pub struct ZdemoArgs {
    /// Integer set: all, even, odd, squares, multiples:<m>, residue:<a>:<m>.
    #[arg(long, default_value = "even")]
    pub set: String,
    /// Sequence: intervals or power:<exponent>.
    #[arg(long, default_value = "power:2.5")]
    pub seq: String,
    /// Comma-separated frequencies: 0, 1/2, sqrt2-1, (sqrt5-1)/2, decimals.
    #[arg(long, default_value = "0,sqrt2-1,(sqrt5-1)/2")]
    pub theta: String,
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,
    /// Emit every k-th row (the last row is always emitted).
    #[arg(long, default_value_t = 1)]
    pub every: u64,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Inject a sign error into a dihedral irrep; the suite must fail.
    #[arg(long)]
    pub mutate: bool,
}

/// Outcome of a command that ran to completion.
pub struct Output {
    pub body: String,
    pub passed: bool,
    /// One-line summary for stderr.
    pub summary: Option<String>,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    if let Err(e) = crate::engine::check_t_fixed() {
        report_error("invariant", &e.to_string());
        return 1;
    }
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            report_error("usage", first);
            return 2;
        }
    };
    let result = match cli.threads {
        Some(0) => Err(Error::Domain("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Domain(e.to_string()))
            .and_then(|pool| pool.install(|| execute(&cli))),
        None => execute(&cli),
    };
    match result {
        Ok(out) => {
            if let Some(s) = &out.summary {
                eprintln!("{s}");
            }
            if let Err(e) = emit(&cli.out, &out.body) {
                report_error("io", &e.to_string());
                return 2;
            }
            if out.passed { 0 } else { 1 }
        }
        Err(e) => {
            report_error("usage", &e.to_string());
            2
        }
    }
}

fn report_error(kind: &str, message: &str) {
    eprintln!("{}", json!({ "error": kind, "message": message }));
}

fn emit(out: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Runs the parsed command without touching stdout.
pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Certify(a) => cmd_certify(a, cli.seed, cli.format.unwrap_or(Format::Json)),
        Command::Sweep(a) => cmd_sweep(a, cli.seed, cli.format.unwrap_or(Format::Csv)),
        Command::Spectrum(a) => cmd_spectrum(a, cli.seed, cli.format.unwrap_or(Format::Csv)),
        Command::Bohr(a) => cmd_bohr(a, cli.format.unwrap_or(Format::Csv)),
        Command::Zdemo(a) => cmd_zdemo(a, cli.format.unwrap_or(Format::Csv)),
        Command::Selftest(a) => cmd_selftest(a, cli.seed, cli.format.unwrap_or(Format::Csv)),
    }
}

fn parse_list(input: &str) -> Result<Vec<usize>> {
    input
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse { what: "index list", input: input.into() }))
        .collect()
}

fn parse_density(input: &str, spec: &str) -> Result<f64> {
    input.parse::<f64>().map_err(|_| Error::Parse { what: "density", input: spec.into() })
}

/// A set of group elements from the set syntax.
pub fn element_set(spec: &str, group: &Group, rng: &mut InstanceRng) -> Result<ElementSet> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse { what: "set", input: spec.into() });
    let set = match parts.as_slice() {
        ["all"] => ElementSet::full(group),
        ["random", d] => random_set(group, parse_density(d, spec)?, rng)?,
        ["interval", len] => interval(group, num(len)?)?,
        ["ap", start, step, len] => arithmetic_progression(group, num(start)?, num(step)?, num(len)?)?,
        ["qr"] => quadratic_residues(group)?,
        [list] => ElementSet::from_indices(group, parse_list(list)?)?,
        _ => return Err(Error::Parse { what: "set", input: spec.into() }),
    };
    if set.is_empty() {
        return Err(Error::EmptySet("set is empty"));
    }
    Ok(set)
}

/// A set of action points from the set syntax; progressions use index
/// arithmetic mod the number of points.
pub fn point_set(spec: &str, points: usize, rng: &mut InstanceRng) -> Result<PointSet> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse { what: "set", input: spec.into() });
    let set = match parts.as_slice() {
        ["all"] => PointSet::from_indices(points, 0..points)?,
        ["random", d] => crate::instances::random_points(points, parse_density(d, spec)?, rng)?,
        ["interval", len] => PointSet::from_indices(points, 0..num(len)?)?,
        ["ap", start, step, len] => {
            let (s, t) = (num(start)?, num(step)?);
            PointSet::from_indices(points, (0..num(len)?).map(|k| (s + k * t) % points))?
        }
        ["qr"] => PointSet::from_indices(points, (1..points).map(|x| x * x % points).filter(|&y| y != 0))?,
        [list] => PointSet::from_indices(points, parse_list(list)?)?,
        _ => return Err(Error::Parse { what: "set", input: spec.into() }),
    };
    if set.is_empty() {
        return Err(Error::EmptySet("set is empty"));
    }
    Ok(set)
}

pub fn parse_action(spec: &str, group: &Group) -> Result<FiniteAction> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    match parts.as_slice() {
        ["translation"] => Ok(FiniteAction::translation(group)),
        ["polygon"] => polygon_action(group),
        ["doubled"] => doubled_translation(group),
        ["quotient", m] => quotient_action(
            group,
            m.parse().map_err(|_| Error::Parse { what: "action", input: spec.into() })?,
        ),
        _ => Err(Error::Parse { what: "action", input: spec.into() }),
    }
}

fn set_source(explicit: &Option<String>, random: bool, density: Option<f64>, name: &'static str) -> Result<String> {
    match (explicit, random) {
        (Some(s), false) => Ok(s.clone()),
        (None, true) => Ok(format!("random:{}", density.unwrap_or(0.5))),
        (Some(_), true) => Err(Error::Domain(format!("give either --{name} or --random, not both"))),
        (None, false) => Err(Error::Domain(format!("missing --{name} (or --random)"))),
    }
}

/// Builds the certificate inputs for `certify`. Random draws happen in the
/// order A, B (or action then B), u.
pub fn certify_inputs(args: &CertifyArgs, group: &Group, seed: u64) -> Result<CertificateInputs> {
    let mut r = rng(seed);
    let a = element_set(&set_source(&args.a, args.random, args.alpha, "A")?, group, &mut r)?;
    match args.theorem {
        TheoremArg::Comb => {
            let b = element_set(&set_source(&args.b, args.random, args.beta, "B")?, group, &mut r)?;
            Ok(CertificateInputs::Comb { a, b })
        }
        TheoremArg::Erg => {
            let action = parse_action(&args.action, group)?;
            let b = point_set(&set_source(&args.b, args.random, args.beta, "B")?, action.points(), &mut r)?;
            Ok(CertificateInputs::Erg { a, action, b, r: args.r })
        }
        TheoremArg::Uni => {
            let beta = args.beta.ok_or_else(|| Error::Domain("uni needs --beta".into()))?;
            let rep = Representation::regular(group);
            let u = unit_vector_with_invariant_mass(&rep, beta, &mut r)?;
            Ok(CertificateInputs::Uni { a, rep, u, beta, r: args.r })
        }
    }
}

pub fn cmd_certify(args: &CertifyArgs, seed: u64, format: Format) -> Result<Output> {
    let group = parse_group(&args.group)?;
    let catalog = irreps(&group);
    let inputs = certify_inputs(args, &group, seed)?;
    let cert = certify(&catalog, &inputs)?;
    let body = match format {
        Format::Json => cert.to_json() + "\n",
        Format::Csv => {
            let inst = Instance {
                catalog: std::sync::Arc::new(catalog),
                inputs: Ok(inputs),
                theorem: args.theorem.into(),
                r_fraction: 0.0,
            };
            rows_to_csv(&[run_instance(0, &inst).0])
        }
    };
    let summary = format!(
        "verdict={} spectrum_size={} bound={} eps={} base_point={}",
        if cert.passed() { "pass" } else { "fail" },
        cert.spectrum_size,
        cert.bound,
        cert.eps,
        cert.base_point
    );
    Ok(Output { body, passed: cert.passed(), summary: Some(summary) })
}

/// Splits a comma list of group descriptors, expanding `D3..D24` and
/// `Z12..Z20` ranges.
pub fn expand_groups(input: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for item in input.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((lo, hi)) => {
                let bad = || Error::Parse { what: "group range", input: item.into() };
                let prefix = &lo[..1];
                if !matches!(prefix, "D" | "Z") {
                    return Err(bad());
                }
                let hi = hi.strip_prefix(prefix).unwrap_or(hi);
                let (a, b): (usize, usize) =
                    (lo[1..].parse().map_err(|_| bad())?, hi.parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                out.extend((a..=b).map(|k| format!("{prefix}{k}")));
            }
            None => out.push(item.to_string()),
        }
    }
    if out.is_empty() {
        return Err(Error::Domain("no groups given".into()));
    }
    Ok(out)
}

pub fn cmd_sweep(args: &SweepArgs, seed: u64, format: Format) -> Result<Output> {
    let instances = if let Some(desc) = &args.exhaustive {
        exhaustive_comb(&parse_group(desc)?)?
    } else {
        let pool = match (&args.groups, args.mixed) {
            (Some(list), false) => GroupPool::Listed(expand_groups(list)?),
            (None, true) => GroupPool::Mixed,
            _ => return Err(Error::Domain("give one of --exhaustive, --groups, --mixed".into())),
        };
        let r_fractions = args
            .r_fractions
            .split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse { what: "r fractions", input: args.r_fractions.clone() }))
            .collect::<Result<Vec<_>>>()?;
        let theorems = match args.theorem {
            SweepTheorem::Comb => vec![Theorem::Comb],
            SweepTheorem::Erg => vec![Theorem::Erg],
            SweepTheorem::Both => vec![Theorem::Comb, Theorem::Erg],
        };
        random_grid(&GridConfig {
            pool,
            count: args.count,
            alpha: args.alpha,
            beta: args.beta,
            r_fractions,
            theorems,
            seed,
        })?
    };
    let rows = run_all(&instances);
    let body = match format {
        Format::Csv => rows_to_csv(&rows),
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    let failed = rows.iter().filter(|r| r.verdict != RowVerdict::Pass).count();
    let summary = format!("rows={} failed={} pass_rate={}", rows.len(), failed, pass_rate(&rows));
    Ok(Output { body, passed: failed == 0, summary: Some(summary) })
}

#[derive(Serialize)]
struct SpectrumRow {
    irrep: IrrepId,
    dim: usize,
    norm: f64,
    large: Option<bool>,
}

pub fn cmd_spectrum(args: &SpectrumArgs, seed: u64, format: Format) -> Result<Output> {
    let group = parse_group(&args.group)?;
    let catalog = irreps(&group);
    let a = element_set(&set_source(&args.a, args.random, args.alpha, "A")?, &group, &mut rng(seed))?;
    let mu = uniform_measure_on(&a)?;
    let norms = spectrum_norms(&catalog, &mu)?;
    let large = match args.delta {
        Some(d) => Some(large_spectrum(&catalog, &mu, d)?),
        None => None,
    };
    let rows: Vec<SpectrumRow> = catalog
        .items()
        .iter()
        .zip(norms)
        .map(|(s, norm)| SpectrumRow {
            irrep: s.id().clone(),
            dim: s.dim(),
            norm,
            large: large.as_ref().map(|l| l.contains(s.id())),
        })
        .collect();
    let body = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row).expect("rows serialize");
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
    };
    Ok(Output { body, passed: true, summary: None })
}

/// Splits irrep ids on commas or semicolons outside parentheses.
pub fn split_ids(input: &str) -> Vec<IrrepId> {
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for c in input.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (c == ',' || c == ';') && depth == 0 {
            if !cur.trim().is_empty() {
                out.push(IrrepId(cur.trim().to_string()));
            }
            cur.clear();
        } else {
            cur.push(c);
        }
    }
    if !cur.trim().is_empty() {
        out.push(IrrepId(cur.trim().to_string()));
    }
    out
}

pub fn cmd_bohr(args: &BohrArgs, format: Format) -> Result<Output> {
    let group = parse_group(&args.group)?;
    let catalog = irreps(&group);
    let spec = BohrSpec::new(split_ids(&args.freqs), args.eps)?;
    let set = bohr_set(&catalog, &spec)?;
    let sigmas = spec.resolve(&catalog)?;
    let body = match format {
        Format::Csv => {
            let mut s = String::from("element,seminorm\n");
            for g in set.iter() {
                writeln!(s, "{g},{}", seminorm_set(sigmas.iter().copied(), g)).expect("string write");
            }
            s
        }
        Format::Json => {
            let value = json!({
                "group": group.name(),
                "freqs": spec.frequencies,
                "eps": spec.radius,
                "size": set.len(),
                "elements": set.to_vec(),
            });
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
    };
    Ok(Output { body, passed: true, summary: Some(format!("size={}", set.len())) })
}

pub fn cmd_zdemo(args: &ZdemoArgs, format: Format) -> Result<Output> {
    if args.n_max == 0 || args.n_max > ZDEMO_N_MAX {
        return Err(Error::Domain(format!("n_max must lie in 1..={ZDEMO_N_MAX}")));
    }
    if args.every == 0 {
        return Err(Error::Domain("--every must be positive".into()));
    }
    let set: IntegerSet = args.set.parse()?;
    let seq: IndexSequence = args.seq.parse()?;
    let thetas: Vec<Theta> = args.theta.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
    let density = density_along(|x| set.contains(x), &seq, args.n_max)?;
    let weyl: Vec<Vec<f64>> = thetas.iter().map(|t| weyl_profile(&seq, t, args.n_max)).collect();
    let keep = |n: u64| n.is_multiple_of(args.every) || n == args.n_max;
    let body = match format {
        Format::Csv => {
            let mut s = format!("# {ZDEMO_LABEL}; set={set}; seq={seq}\nn,term,density");
            for t in &thetas {
                write!(s, ",weyl:{t}").expect("string write");
            }
            s.push('\n');
            for n in (1..=args.n_max).filter(|&n| keep(n)) {
                let i = (n - 1) as usize;
                write!(s, "{n},{},{}", seq.term(n), density.densities[i]).expect("string write");
                for w in &weyl {
                    write!(s, ",{}", w[i]).expect("string write");
                }
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = (1..=args.n_max)
                .filter(|&n| keep(n))
                .map(|n| {
                    let i = (n - 1) as usize;
                    json!({
                        "n": n,
                        "term": seq.term(n),
                        "density": density.densities[i],
                        "weyl": weyl.iter().map(|w| w[i]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let value = json!({
                "note": ZDEMO_LABEL,
                "set": set.to_string(),
                "seq": seq.to_string(),
                "theta": thetas.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "density_limsup_proxy": density.limsup_proxy(),
                "rows": rows,
            });
            serde_json::to_string_pretty(&value).expect("json") + "\n"
        }
    };
    Ok(Output { body, passed: true, summary: None })
}

pub fn cmd_selftest(args: &SelftestArgs, seed: u64, format: Format) -> Result<Output> {
    let report = selftest::run(&SelftestOptions { mutate: args.mutate, seed })?;
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    let body = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &report.checks {
                w.serialize(c).expect("rows serialize");
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
        }
        Format::Json => serde_json::to_string_pretty(&report.checks).expect("json") + "\n",
    };
    let summary = format!(
        "checks={} failed={} seconds={:.2}",
        report.checks.len(),
        failed,
        report.seconds
    );
    Ok(Output { body, passed: failed == 0, summary: Some(summary) })
}
