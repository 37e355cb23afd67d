use std::path::{Path, PathBuf};
use std::process::ExitCode;

// Stdout may be a closed pipe (`| head`); stop quietly instead of panicking.
macro_rules! println {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! print {
    ($($t:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use clap::{Args, Parser, Subcommand};
use polycyclic::celestial::{celestial_construct, CelestialSymbol};
use polycyclic::config::{extract_incidences, GeometricConfiguration};
use polycyclic::families::{scan_family, Family, FamilySpec};
use polycyclic::incidence::{incidence_table, validate_nk};
use polycyclic::io::{load_catalog, parse_config_catalog, Catalog, ConfigRecord, Provenance};
use polycyclic::real::{MpFloat, Precision, Real};
use polycyclic::realize::{realize_from, solve_system, Certificate, SearchDomain, SolveOptions, Status};
use polycyclic::render::{render_svg, Style};
use polycyclic::report::census_report;
use polycyclic::symmetry::{automorphisms, canonical_form, duality_rank};
use polycyclic::synthetic::{bisect_realize, self_reciprocity_check, Frame, ReciprocityKind};
use polycyclic::verify::{verify_all, Verdict, VerifyOptions};
use polycyclic::voltage::{
    enumerate, lift, rlg_b_template, rlg_gr_template, EnumerationFilters, EnumerationRecord, ParameterVector,
    B_LINE_CLASSES,
};
use polycyclic::Error;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const UNDECIDED: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "polycyclic", version, about = "Polycyclic point-line configurations")]
struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 256)]
    bits: u32,
    /// Re-read incidences off coordinates at tolerance 2^-k (default: bits/2).
    #[arg(long, global = true)]
    tol_exponent: Option<u32>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output file (JSON).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep the 15-parameter template over Z_m and classify the lifts.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Keep disconnected lifts.
        #[arg(long)]
        allow_disconnected: bool,
    },
    /// Lift a reduced Levi graph and describe the result.
    Lift(LiftArgs),
    /// Solve the reduced system and build coordinates.
    Realize(RealizeArgs),
    /// Ruler-and-compass construction of B(21_4).
    Synthesize {
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve a range of family members.
    FamilyScan {
        #[arg(long)]
        family: String,
        /// Modulus or range such as 3..8 (inclusive).
        #[arg(long)]
        m: String,
    },
    /// Census of the Z_3 Levi graphs with solver outcomes.
    Report(ReportArgs),
    /// Draw a stored configuration.
    Render(RenderArgs),
    /// Run every verification check.
    Verify {
        /// Comma-separated check numbers.
        #[arg(long)]
        only: Option<String>,
        /// Enumeration catalog to check instead of sweeping afresh.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct LiftArgs {
    #[arg(long, default_value_t = 3)]
    m: u32,
    /// Template voltages, 15 comma-separated integers.
    #[arg(long, conflicts_with = "gr")]
    params: Option<String>,
    /// Use the 3-class GR template over Z_7 instead.
    #[arg(long)]
    gr: bool,
    /// Print the incidence table.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct RealizeArgs {
    #[arg(long, default_value_t = 3)]
    m: u32,
    #[arg(long, required_unless_present = "symbol")]
    params: Option<String>,
    /// Celestial symbol such as 7#(2,1;3,2;1,3) instead of template voltages.
    #[arg(long, conflicts_with = "params")]
    symbol: Option<String>,
    /// Search box x_min,x_max,z_min,z_max.
    #[arg(long)]
    domain: Option<String>,
    /// Multistart grid seed; the grid is fixed without it.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct ReportArgs {
    /// Enumeration catalog (swept afresh when absent).
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// File of parameter vectors to solve, one per line, matched to classes by certificate.
    #[arg(long)]
    vectors: Option<PathBuf>,
    /// Skip the solver; the NDsols column shows gaps.
    #[arg(long)]
    no_solve: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    svg: PathBuf,
    /// Record to draw.
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long)]
    no_omega: bool,
    #[arg(long)]
    no_mirror: bool,
    #[arg(long)]
    labels: bool,
}

struct Ctx {
    bits: u32,
    tol_exponent: Option<u32>,
    out: Option<PathBuf>,
    command: Vec<String>,
}

impl Ctx {
    fn precision(&self) -> Result<Precision, Error> {
        Precision::new(self.bits)
    }

    fn provenance(&self) -> Provenance {
        Provenance { command: self.command.clone(), precision_bits: Some(self.bits), timestamp: None }
    }

    fn write<T: serde::Serialize>(&self, kind: &str, records: T) -> Result<(), Error> {
        if let Some(path) = &self.out {
            Catalog::new(kind, self.provenance(), records).save(path)?;
            eprintln!("wrote {}", path.display());
        }
        Ok(())
    }

    fn incidences_at_tolerance(&self, cfg: &GeometricConfiguration) -> Option<(u32, usize)> {
        let k = self.tol_exponent?;
        let tol = MpFloat::pow2(-(k as i32), cfg.precision);
        Some((k, extract_incidences(&cfg.points, &cfg.lines, &tol).len()))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    let ctx = Ctx { bits: cli.bits, tol_exponent: cli.tol_exponent, out: cli.out, command: std::iter::once("polycyclic".to_string()).chain(std::env::args().skip(1)).collect() };
    let result = match cli.cmd {
        Cmd::Enumerate { m, allow_disconnected } => cmd_enumerate(&ctx, m, allow_disconnected),
        Cmd::Lift(a) => cmd_lift(&ctx, a),
        Cmd::Realize(a) => cmd_realize(&ctx, a),
        Cmd::Synthesize { svg } => cmd_synthesize(&ctx, svg),
        Cmd::FamilyScan { family, m } => cmd_family_scan(&ctx, &family, &m),
        Cmd::Report(a) => cmd_report(&ctx, a),
        Cmd::Render(a) => cmd_render(a),
        Cmd::Verify { only, catalog, json } => cmd_verify(&ctx, only, catalog, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) | Error::Validation(_) | Error::Domain(_) => USAGE,
                _ => FAIL,
            })
        }
    }
}

fn cmd_enumerate(ctx: &Ctx, m: u32, allow_disconnected: bool) -> Result<u8, Error> {
    let filters = EnumerationFilters { require_connected: !allow_disconnected, ..Default::default() };
    let stats = enumerate(m, filters);
    println!(
        "{} vectors, {} with girth >= 6, {} disconnected, {} Levi graphs",
        stats.total,
        stats.girth_survivors,
        stats.disconnected,
        stats.records.len()
    );
    for (i, r) in stats.records.iter().enumerate() {
        println!(
            "{:>3}  {}  |Aut| {:>4}  self-dual {}  class size {}",
            i + 1,
            r.params,
            r.aut_order,
            if r.self_dual { "y" } else { "n" },
            r.class_size
        );
    }
    ctx.write("enumeration", &stats.records)?;
    Ok(PASS)
}

fn cmd_lift(ctx: &Ctx, a: LiftArgs) -> Result<u8, Error> {
    let (rlg, classes): (_, Vec<&str>) = if a.gr {
        (rlg_gr_template(), vec!["L", "M", "N"])
    } else {
        let s = a.params.ok_or_else(|| Error::Validation("--params or --gr is required".into()))?;
        (rlg_b_template(a.m, &ParameterVector::parse(a.m, &s)?), B_LINE_CLASSES.to_vec())
    };
    let (g, s) = lift(&rlg)?;
    let n = g.order() / 2;
    let nk = validate_nk(&g, n, 4);
    let aut = automorphisms(&g);
    println!("({n}_4) valid: {}  girth {}  connected {}", nk.valid, nk.girth, nk.connected);
    for v in &nk.violations {
        println!("  {v}");
    }
    println!("|Aut| = {} ({} preserving, {} reversing)", aut.order, aut.preserving_count, aut.reversing_count);
    if let Some(r) = duality_rank(&g) {
        println!("self-dual, duality rank {r}");
    }
    println!("certificate {}", canonical_form(&g, true).hex());
    if a.table {
        print!("{}", incidence_table(&s, &classes)?);
    }
    ctx.write("incidences", &s)?;
    Ok(if nk.valid { PASS } else { FAIL })
}

fn solution_value<T: serde::Serialize>(params: Option<&ParameterVector>, sol: &T) -> Result<serde_json::Value, Error> {
    let mut v = serde_json::to_value(sol)?;
    if let (Some(p), Some(obj)) = (params, v.as_object_mut()) {
        obj.insert("params".into(), serde_json::to_value(p)?);
    }
    Ok(v)
}

fn decorate(rec: ConfigRecord, cfg: &GeometricConfiguration) -> ConfigRecord {
    let r = self_reciprocity_check(cfg);
    let mut rec = match &r.omega {
        Some(o) if r.is_self_reciprocal() => rec.with_omega(o),
        _ => rec,
    };
    if let Some(m) = r.maps.iter().find(|m| m.kind == ReciprocityKind::Reflexive) {
        rec = rec.with_mirror(&m.isometry);
    }
    rec
}

fn cmd_realize(ctx: &Ctx, a: RealizeArgs) -> Result<u8, Error> {
    if let Some(sym) = a.symbol {
        let sym: CelestialSymbol = sym.parse()?;
        let cfg = celestial_construct(&sym, ctx.precision()?)?;
        report_config(ctx, &cfg);
        let rec = decorate(ConfigRecord::from_config(&sym.to_string(), &cfg), &cfg);
        if let Some(svg) = &a.svg {
            write_svg(&rec, svg, &Style::default())?;
        }
        ctx.write("configurations", vec![rec])?;
        return Ok(PASS);
    }
    let params = ParameterVector::parse(a.m, a.params.as_deref().unwrap_or_default())?;
    let mut opts = SolveOptions::new(ctx.bits)?;
    if let Some(d) = &a.domain {
        opts.domain = SearchDomain::parse(d)?;
    }
    opts.seed = a.seed;
    let sols = solve_system(a.m, &params, &opts)?;
    for s in &sols {
        let exact = s.exact.as_ref().map(|(x, z)| format!("  = ({x}, {z})")).unwrap_or_default();
        let certs: Vec<String> = s.certifications.iter().map(|c| format!("{} {:?}", c.name, c.outcome)).collect();
        println!(
            "{:<10} x = {:>+.12}  z = {:>+.12}{exact}{}  {}",
            format!("{:?}", s.status),
            s.xf(),
            s.zf(),
            if s.singular { "  singular" } else { "" },
            if certs.is_empty() { s.witnesses.join(", ") } else { certs.join(", ") }
        );
    }
    let full: Vec<_> = sols.iter().filter(|s| s.status == Status::Full).collect();
    let cfgs = realize_from(a.m, &params, &sols)?;
    let mut records = Vec::new();
    for (k, (cfg, s)) in cfgs.iter().zip(&full).enumerate() {
        report_config(ctx, cfg);
        let name = format!("{params} solution {}", k + 1);
        records.push(decorate(ConfigRecord::from_config(&name, cfg), cfg).with_solution(solution_value(Some(&params), *s)?));
    }
    if let (Some(svg), Some(rec)) = (&a.svg, records.first()) {
        write_svg(rec, svg, &Style::default())?;
    }
    ctx.write("configurations", records)?;
    let undecided = sols.iter().flat_map(|s| &s.certifications).any(|c| c.outcome == Certificate::Undecided);
    Ok(if !cfgs.is_empty() {
        PASS
    } else if undecided {
        UNDECIDED
    } else {
        FAIL
    })
}

fn report_config(ctx: &Ctx, cfg: &GeometricConfiguration) {
    println!(
        "{} points, {} lines, {} incidences, max residual {:.3e}, min point separation {:.3e}, rotation order {}",
        cfg.points.len(),
        cfg.lines.len(),
        cfg.incidences.len(),
        cfg.max_incidence_residual.to_f64(),
        cfg.min_point_separation.to_f64(),
        cfg.symmetry_order
    );
    if let Some((k, n)) = ctx.incidences_at_tolerance(cfg) {
        println!("{n} incidences hold at 2^-{k}");
    }
}

fn cmd_synthesize(ctx: &Ctx, svg: Option<PathBuf>) -> Result<u8, Error> {
    let sol = bisect_realize(&Frame::standard(ctx.precision()?))?;
    println!("Y2 x = {}", sol.xpos.to_decimal());
    println!("gap  = {:.3e}", sol.gap.to_f64());
    report_config(ctx, &sol.config);
    let r = self_reciprocity_check(&sol.config);
    println!("{}", r.summary());
    let rec = decorate(ConfigRecord::from_config("B(21_4) synthetic", &sol.config), &sol.config)
        .with_solution(serde_json::json!({ "xpos": sol.xpos.to_decimal(), "gap": sol.gap.to_decimal() }));
    if let Some(svg) = &svg {
        write_svg(&rec, svg, &Style::default())?;
    }
    ctx.write("configurations", vec![rec])?;
    Ok(PASS)
}

fn parse_range(s: &str) -> Result<Vec<u32>, Error> {
    let bad = || Error::Parse(format!("expected m or lo..hi, got {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(bad());
            }
            Ok((lo..=hi).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn cmd_family_scan(ctx: &Ctx, family: &str, m: &str) -> Result<u8, Error> {
    let family: Family = family.parse()?;
    let specs = FamilySpec::all(family, parse_range(m)?);
    let rows = scan_family(&specs, &SolveOptions::new(ctx.bits)?);
    println!("{:<12} {:>5} {:>4} {:>7} {:>10} {:>12}  note", "spec", "valid", "full", "partial", "degenerate", "separation");
    for r in &rows {
        println!(
            "{:<12} {:>5} {:>4} {:>7} {:>10} {:>12}  {}",
            r.spec.to_string(),
            if r.combinatorially_valid() { "y" } else { "n" },
            r.full,
            r.partial,
            r.degenerate,
            r.min_separation_f64().map_or("-".into(), |v| format!("{v:.3e}")),
            r.error.as_deref().unwrap_or("")
        );
    }
    ctx.write("family-scan", &rows)?;
    Ok(PASS)
}

fn read_vectors(path: &Path) -> Result<Vec<ParameterVector>, Error> {
    std::fs::read_to_string(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| ParameterVector::parse(3, l))
        .collect()
}

fn cmd_report(ctx: &Ctx, a: ReportArgs) -> Result<u8, Error> {
    let records: Vec<EnumerationRecord> = match &a.catalog {
        Some(p) => load_catalog(p, "enumeration")?.records,
        None => enumerate(3, EnumerationFilters::default()).records,
    };
    let vectors = a.vectors.as_deref().map(read_vectors).transpose()?.unwrap_or_default();
    let opts = SolveOptions::new(ctx.bits)?;
    let report = census_report(&records, &vectors, (!a.no_solve).then_some(&opts))?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.to_text());
    }
    ctx.write("census", &report)?;
    Ok(PASS)
}

fn write_svg(rec: &ConfigRecord, path: &Path, style: &Style) -> Result<(), Error> {
    std::fs::write(path, render_svg(rec, style)?)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_render(a: RenderArgs) -> Result<u8, Error> {
    let cat = parse_config_catalog(&std::fs::read_to_string(&a.input)?)?;
    let style = Style { show_omega: !a.no_omega, show_mirror: !a.no_mirror, labels: a.labels, ..Style::default() };
    match cat.records.get(a.index) {
        Some(rec) => write_svg(rec, &a.svg, &style)?,
        None if cat.records.is_empty() => {
            let empty = GeometricConfiguration::new(1, vec![], vec![], vec![])?;
            write_svg(&ConfigRecord::from_config("empty", &empty), &a.svg, &style)?
        }
        None => return Err(Error::Validation(format!("no record {} in {}", a.index, a.input.display()))),
    }
    Ok(PASS)
}

fn cmd_verify(ctx: &Ctx, only: Option<String>, catalog: Option<PathBuf>, json: bool) -> Result<u8, Error> {
    let only = match only {
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad check number {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    let records = match &catalog {
        Some(p) => match load_catalog::<Vec<EnumerationRecord>>(p, "enumeration") {
            Ok(c) => Some(c.records),
            Err(e) => {
                println!("FAIL  catalog {}: {e}", p.display());
                return Ok(FAIL);
            }
        },
        None => None,
    };
    let report = verify_all(&VerifyOptions { bits: ctx.bits, only, records });
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        for c in &report.checks {
            let v = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Undecided => "UNDECIDED",
            };
            println!("{v:<9} {:>2} {:<30} {:>6.1}s  {}", c.id, c.title, c.seconds, c.detail);
        }
    }
    ctx.write("verification", &report)?;
    Ok(report.exit_code() as u8)
}
