//! Command-line front end: argument parsing, report rendering and the
//! fixture runner.
//!
//! Exit codes: `0` success, `2` input error, `3` fixture mismatch.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::cochain::{
    check_fermat_pair, check_gs_cocycle, emit_h2_representative, emit_intertwined_representative,
    fermat_equivalence_pair, intertwined_ring, ClassSpec, GSCochain, Sampling,
};
use crate::hhproj::{
    default_eres_cap, eres_mult_subspace, h2_report_with_cap, hh_dim, smooth_projective, verify_intertwined_witness,
    CaseTag, ChartVerdict, H2Report, HHReport, IntertwinedPossibility,
};
use crate::koszul::{p_dim, q_dim, z_dim};
use crate::poly::{parse_poly, render_rational, PolyError, RingDesc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hhx", version, about = "Hochschild cohomology of projective hypersurfaces, computed exactly over Q")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress explanatory notes; print only results.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions of HH^i with their Hodge decomposition.
    Hh {
        /// Homogeneous polynomial in x0..xn, e.g. "x0^4+x1^4+x2^4+x3^4".
        poly: String,
        /// Number n of the ambient projective space P^n.
        #[arg(long)]
        n: usize,
        /// Range of degrees, `a..b` (inclusive) or a single degree; default 0..2n.
        #[arg(long)]
        i: Option<String>,
        /// Show every Hodge summand with its source.
        #[arg(long)]
        hodge: bool,
    },
    /// The degree-2 report: Hodge pieces, smoothness, HKR, E_mult, h1 of the tangent sheaf.
    H2 {
        poly: String,
        #[arg(long)]
        n: usize,
        /// Cap on the power M in the E_res kernel chains.
        #[arg(long)]
        cap_power: Option<i32>,
    },
    /// Smoothness certificate (graded test cross-checked on every chart).
    Smooth {
        poly: String,
        #[arg(long)]
        n: usize,
    },
    /// Kernel chains describing E_mult ∩ E_res.
    Eres {
        poly: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cap_power: Option<i32>,
    },
    /// Checks the intertwined witness for x0^d + x1^(d-1) x2.
    Witness {
        #[arg(long)]
        d: i32,
    },
    /// Emits an explicit degree-2 cocycle on the affine charts.
    Repr {
        /// Polynomial (not needed for `--class intertwined`).
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// `hodge0-k`, `hodge1-k`, `hodge2-k`, a degree-d form `t`, `pair:<t>` (Fermat
        /// equivalence pair) or `intertwined`.
        #[arg(long)]
        class: String,
        /// Degree for `--class intertwined`.
        #[arg(long)]
        d: Option<i32>,
        /// Evaluate the cocycle conditions on sampled basis monomials.
        #[arg(long)]
        verify: bool,
        /// Degree bound of the sampled monomials (default d + 2).
        #[arg(long)]
        sample_degree: Option<i32>,
    },
    /// Runs a fixture file and compares every expected value.
    Fixtures {
        file: PathBuf,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

#[derive(Debug)]
struct CliError(String);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

fn input_error(text: &str, e: &PolyError) -> CliError {
    let pos = match e {
        PolyError::Syntax { pos, .. } | PolyError::VariableOutOfRange { pos, .. } => Some(*pos),
        _ => None,
    };
    match pos {
        Some(p) => CliError(format!("{e}\n  {text}\n  {}^", " ".repeat(text[..p.min(text.len())].chars().count()))),
        None => CliError(e.to_string()),
    }
}

fn load_ring(text: &str, n: usize) -> Result<RingDesc, CliError> {
    RingDesc::parse(text, n).map_err(|e| input_error(text, &e))
}

/// Parses `a..b` / `a..=b` (both inclusive) or a single integer.
pub fn parse_range(text: &str) -> Option<(i32, i32)> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let (a, b) = (a.trim().parse().ok()?, b.trim().parse().ok()?);
        (a <= b).then_some((a, b))
    } else {
        let k = text.parse().ok()?;
        Some((k, k))
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Hh { poly, n, i, hodge } => {
            let ring = load_ring(poly, *n)?;
            let (lo, hi) = match i {
                Some(t) => parse_range(t).ok_or_else(|| CliError(format!("invalid range `{t}`")))?,
                None => (0, 2 * *n as i32),
            };
            let reports: Vec<HHReport> = (lo..=hi).map(|k| hh_dim(&ring, k)).collect();
            if cli.json {
                let doc = ReportJson::new(&ring, &reports, None);
                writeln!(out, "{}", doc.render())?;
            } else {
                write_header(out, &ring, cli.quiet)?;
                write_hh_table(out, &reports, *hodge)?;
            }
        }
        Command::H2 { poly, n, cap_power } => {
            let ring = load_ring(poly, *n)?;
            let cap = cap_power.unwrap_or_else(|| default_eres_cap(&ring));
            let report = h2_report_with_cap(&ring, cap);
            if cli.json {
                let doc = ReportJson::new(&ring, std::slice::from_ref(&report.hh2), Some(&report));
                writeln!(out, "{}", doc.render())?;
            } else {
                write_header(out, &ring, cli.quiet)?;
                write_h2(out, &report, cli.quiet)?;
            }
        }
        Command::Smooth { poly, n } => {
            let ring = load_ring(poly, *n)?;
            let cert = smooth_projective(&ring);
            if cli.json {
                let charts: BTreeMap<String, String> =
                    cert.charts.iter().map(|(i, v)| (i.to_string(), render_verdict(v))).collect();
                let doc = serde_json::json!({
                    "smooth": cert.verdict,
                    "degree_checked": cert.socle_degree_checked,
                    "dim_P0_at_degree": cert.dim_p0_at_mstar,
                    "charts": charts,
                });
                writeln!(out, "{}", pretty(&doc))?;
            } else {
                write_header(out, &ring, cli.quiet)?;
                writeln!(out, "smooth: {}", yes_no(cert.verdict))?;
                writeln!(out, "dim P^0 in degree {}: {}", cert.socle_degree_checked, cert.dim_p0_at_mstar)?;
                for (i, v) in &cert.charts {
                    writeln!(out, "chart x{i} = 1: {}", render_verdict(v))?;
                }
                if !cli.quiet {
                    writeln!(out, "justification: {}", cert.justification)?;
                }
            }
        }
        Command::Eres { poly, n, cap_power } => {
            let ring = load_ring(poly, *n)?;
            let cap = cap_power.unwrap_or_else(|| default_eres_cap(&ring));
            let res = eres_mult_subspace(&ring, cap);
            if cli.json {
                let chains: BTreeMap<String, serde_json::Value> = res
                    .chains
                    .iter()
                    .map(|c| (format!("x{}", c.var), serde_json::json!({"dims": c.dims, "flagged": c.flagged})))
                    .collect();
                let doc = serde_json::json!({"dim_Emult_cap_Eres": res.dim, "flagged": res.flagged, "cap": cap, "chains": chains});
                writeln!(out, "{}", pretty(&doc))?;
            } else {
                write_header(out, &ring, cli.quiet)?;
                writeln!(out, "dim E_mult ∩ E_res = {}{}", res.dim, if res.flagged { " (flagged: cap reached)" } else { "" })?;
                for c in &res.chains {
                    let dims: Vec<String> = c.dims.iter().map(usize::to_string).collect();
                    writeln!(out, "x{}: {}{}", c.var, dims.join(" ⊆ "), if c.flagged { "  [not stationary at cap]" } else { "" })?;
                }
            }
        }
        Command::Witness { d } => {
            let v = verify_intertwined_witness(*d).map_err(|e| CliError(e.to_string()))?;
            if cli.json {
                let doc = serde_json::json!({
                    "d": v.d,
                    "intertwined": v.intertwined,
                    "target_exponents": v.target,
                    "unknowns": v.unknowns,
                    "equations": v.equations,
                    "target_untouched": v.target_untouched,
                    "window_min_x2": v.window_min_x2,
                });
                writeln!(out, "{}", pretty(&doc))?;
            } else {
                writeln!(out, "F = x0^{} + x1^{}*x2", v.d, v.d - 1)?;
                writeln!(out, "intertwined: {}", yes_no(v.intertwined))?;
                let t: Vec<String> = v.target.iter().enumerate().map(|(i, e)| format!("x{i}^{e}")).collect();
                if v.intertwined && v.target_untouched {
                    writeln!(
                        out,
                        "certificate: the monomial {} does not occur in any of the {} columns of the {}-equation system (window x2-exponent ≥ {}); the system is infeasible",
                        t.join("*"),
                        v.unknowns,
                        v.equations,
                        v.window_min_x2
                    )?;
                } else if v.intertwined {
                    writeln!(out, "certificate: the target {} lies outside the column span of the {}x{} system", t.join("*"), v.equations, v.unknowns)?;
                } else {
                    writeln!(out, "an untwined representative exists inside the window x2-exponent ≥ {}", v.window_min_x2)?;
                }
            }
        }
        Command::Repr { poly, n, class, d, verify, sample_degree } => {
            return repr(cli, out, poly.as_deref(), *n, class, *d, *verify, *sample_degree);
        }
        Command::Fixtures { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| CliError(format!("{}: {e}", file.display())))?;
            let fixtures: Vec<Fixture> =
                serde_json::from_str(&text).map_err(|e| CliError(format!("{}: {e}", file.display())))?;
            let results = run_fixtures(&fixtures)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            let fixtures_failed: std::collections::BTreeSet<&str> =
                results.iter().filter(|r| !r.passed).map(|r| r.fixture.as_str()).collect();
            if cli.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&results).expect("serializable"))?;
            } else {
                for r in &results {
                    if cli.quiet && r.passed {
                        continue;
                    }
                    writeln!(
                        out,
                        "{} {} {}: expected {}, got {}  [{}]",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.fixture,
                        r.quantity,
                        r.expected,
                        r.got,
                        r.provenance
                    )?;
                }
                writeln!(
                    out,
                    "{}/{} fixtures pass ({} of {} checks)",
                    fixtures.len() - fixtures_failed.len(),
                    fixtures.len(),
                    results.len() - failed,
                    results.len()
                )?;
            }
            return Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH });
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn repr(
    cli: &Cli,
    out: &mut dyn Write,
    poly: Option<&str>,
    n: Option<usize>,
    class: &str,
    d: Option<i32>,
    verify: bool,
    sample_degree: Option<i32>,
) -> Result<i32, CliError> {
    let cerr = |e: crate::cochain::CochainError| CliError(e.to_string());
    let (ring, cochains): (RingDesc, Vec<(String, GSCochain)>) = if class == "intertwined" {
        let d = d.ok_or_else(|| CliError("--class intertwined needs --d".into()))?;
        (intertwined_ring(), vec![("(m,f,0)".into(), emit_intertwined_representative(d).map_err(cerr)?)])
    } else {
        let poly = poly.ok_or_else(|| CliError("a polynomial is required".into()))?;
        let n = n.ok_or_else(|| CliError("--n is required".into()))?;
        let ring = load_ring(poly, n)?;
        if let Some(t) = class.strip_prefix("pair:") {
            let t = parse_poly(t, n).map_err(|e| input_error(t, &e))?;
            let (m, f) = fermat_equivalence_pair(&ring, &t).map_err(cerr)?;
            (ring, vec![("(m,0,0)".into(), m), ("(0,f,0)".into(), f)])
        } else {
            let spec = ClassSpec::parse(class, &ring).map_err(cerr)?;
            let x = emit_h2_representative(&ring, &spec).map_err(cerr)?;
            (ring, vec![(class.to_string(), x)])
        }
    };
    let mut sampling = Sampling::default_for(ring.d);
    if let Some(b) = sample_degree {
        sampling.bound = b;
        sampling.triple_bound = sampling.triple_bound.min(b);
    }
    let mut checks = Vec::new();
    if verify {
        for (_, x) in &cochains {
            checks.push(check_gs_cocycle(&ring, x, sampling));
        }
        if let Some(t) = class.strip_prefix("pair:") {
            let t = parse_poly(t, ring.n).map_err(|e| input_error(t, &e))?;
            let pc = check_fermat_pair(&ring, &t, sampling).map_err(cerr)?;
            checks.push(pc.m_cocycle.clone());
            if !(pc.m_is_coboundary && pc.f_matches_formula) {
                writeln!(out, "equivalence check failed")?;
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    if cli.json {
        let items: Vec<serde_json::Value> = cochains
            .iter()
            .enumerate()
            .map(|(k, (name, x))| {
                let mut v = x.to_json();
                v["class"] = serde_json::Value::String(name.clone());
                if let Some(c) = checks.get(k) {
                    v["verified"] = serde_json::json!({"cocycle": c.passed(), "evaluations": c.evaluations});
                }
                v
            })
            .collect();
        writeln!(out, "{}", pretty(&serde_json::Value::Array(items)))?;
    } else {
        for (k, (name, x)) in cochains.iter().enumerate() {
            writeln!(out, "# {name}")?;
            writeln!(out, "{}", x.render())?;
            if let Some(c) = checks.get(k) {
                let verdict = if c.passed() { "pass" } else { "FAIL" };
                if c.evaluations == 0 {
                    writeln!(out, "cocycle check: {verdict} (every condition is vacuous: the cover has no chains of the required length)")?;
                } else {
                    writeln!(out, "cocycle check: {verdict} ({} evaluations)", c.evaluations)?;
                }
                for f in c.failures.iter().take(5) {
                    writeln!(out, "  {f}")?;
                }
            }
        }
    }
    Ok(if checks.iter().all(|c| c.passed()) { EXIT_OK } else { EXIT_MISMATCH })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn render_verdict(v: &ChartVerdict) -> String {
    match v {
        ChartVerdict::Smooth(k) => format!("smooth (x^{k} lies in the Jacobian ideal)"),
        ChartVerdict::Singular(p) => {
            let coords: Vec<String> = p.iter().map(render_rational).collect();
            format!("singular point ({})", coords.join(":"))
        }
        ChartVerdict::Inconclusive { cap } => format!("inconclusive up to power {cap}"),
    }
}

fn write_header(out: &mut dyn Write, ring: &RingDesc, quiet: bool) -> std::io::Result<()> {
    writeln!(out, "F = {}   (n = {}, d = {}, case {})", ring.f.render(), ring.n, ring.d, CaseTag::of(ring.n, ring.d).as_str())?;
    if let (Some(note), false) = (ring.substitution.note(), quiet) {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}

fn write_hh_table(out: &mut dyn Write, reports: &[HHReport], hodge: bool) -> std::io::Result<()> {
    writeln!(out, "{:>3}  {:>6}  hodge", "i", "total")?;
    for r in reports {
        let parts: Vec<String> = r
            .hodge_summary()
            .into_iter()
            .map(|(k, (dim, src))| if hodge { format!("r{k}={dim}[{src}]") } else { format!("r{k}={dim}") })
            .collect();
        writeln!(out, "{:>3}  {:>6}  {}", r.i, r.total, parts.join("  "))?;
        if hodge {
            for t in &r.terms {
                let slot = t.slot.map(|(j, m)| format!(" at (j={j}, m={m})")).unwrap_or_default();
                let inferred = if t.inferred { " (inferred)" } else { "" };
                writeln!(out, "       r={} {} {}{}{}", t.hodge_r, t.source.as_str(), t.dim, slot, inferred)?;
            }
        }
    }
    Ok(())
}

fn write_h2(out: &mut dyn Write, r: &H2Report, quiet: bool) -> std::io::Result<()> {
    writeln!(out, "HH^2 = {}   (hodge 0: {}, 1: {}, 2: {})", r.hh2.total, r.hodge0, r.hodge1, r.hodge2)?;
    writeln!(out, "smooth: {}", yes_no(r.smooth))?;
    writeln!(out, "HKR in degree 2: {}", if r.hkr2 { "holds" } else { "fails" })?;
    writeln!(out, "dim E_mult = {}", r.dim_emult)?;
    writeln!(out, "dim E_mult ∩ E_res = {}{}", r.dim_emult_cap_eres, if r.eres_flagged { " (flagged)" } else { "" })?;
    match r.h1_tangent {
        Some(h) => writeln!(out, "h1_tangent = {h}")?,
        None => writeln!(out, "h1_tangent: not reported (d != n+1)")?,
    }
    let status = if r.intertwined.open {
        "open"
    } else if r.intertwined.possible {
        "possible"
    } else {
        "impossible"
    };
    if quiet {
        writeln!(out, "intertwined classes: {status}")?;
    } else {
        writeln!(out, "intertwined classes: {status} ({})", r.intertwined.reason)?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// JSON report schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeJson {
    pub dim: usize,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HHJson {
    pub total: usize,
    pub hodge: BTreeMap<String, HodgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct H2Json {
    pub smooth: bool,
    pub hkr2: bool,
    pub dim_Emult: usize,
    pub dim_Emult_cap_Eres: usize,
    pub h1_tangent: Option<usize>,
    pub intertwined_possible: IntertwinedPossibility,
}

/// The documented report document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct ReportJson {
    pub n: usize,
    pub d: i32,
    pub case: CaseTag,
    pub substitution: Option<String>,
    pub HH: BTreeMap<String, HHJson>,
    pub h2: Option<H2Json>,
}

impl ReportJson {
    pub fn new(ring: &RingDesc, reports: &[HHReport], h2: Option<&H2Report>) -> Self {
        let hh = reports
            .iter()
            .map(|r| {
                let hodge = r
                    .hodge_summary()
                    .into_iter()
                    .map(|(k, (dim, source))| (k.to_string(), HodgeJson { dim, source }))
                    .collect();
                (r.i.to_string(), HHJson { total: r.total, hodge })
            })
            .collect();
        let h2 = h2.map(|r| H2Json {
            smooth: r.smooth,
            hkr2: r.hkr2,
            dim_Emult: r.dim_emult,
            dim_Emult_cap_Eres: r.dim_emult_cap_eres,
            h1_tangent: r.h1_tangent,
            intertwined_possible: r.intertwined.clone(),
        });
        ReportJson {
            n: ring.n,
            d: ring.d,
            case: CaseTag::of(ring.n, ring.d),
            substitution: ring.substitution.note(),
            HH: hh,
            h2,
        }
    }

    /// Canonical rendering: keys sorted, two-space indentation.
    pub fn render(&self) -> String {
        pretty(&serde_json::to_value(self).expect("serializable"))
    }
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// One expected value with its provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expected {
    /// Hodge summand `r` of `HH^i`.
    Hodge { i: i32, r: i32, value: usize, provenance: String },
    H1Tangent { value: usize, provenance: String },
    Smooth { value: bool, provenance: String },
    QDim { j: i32, m: i32, value: usize, provenance: String },
    PDim { j: i32, m: i32, value: usize, provenance: String },
    ZDim { j: i32, m: i32, value: usize, provenance: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub polynomial: String,
    pub n: usize,
    pub expected: Vec<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub fixture: String,
    pub quantity: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
    pub provenance: String,
}

/// Evaluates every expectation; the ring is parsed once per fixture and the
/// degree-2 report computed at most once.
fn run_fixtures(fixtures: &[Fixture]) -> Result<Vec<CheckResult>, CliError> {
    let mut out = Vec::new();
    for fx in fixtures {
        let ring = load_ring(&fx.polynomial, fx.n).map_err(|CliError(m)| CliError(format!("fixture {}: {m}", fx.name)))?;
        let mut h2: Option<H2Report> = None;
        let mut hh: BTreeMap<i32, HHReport> = BTreeMap::new();
        for e in &fx.expected {
            let (quantity, expected, got, provenance) = match e {
                Expected::Hodge { i, r, value, provenance } => {
                    let rep = if *i == 2 {
                        h2.get_or_insert_with(|| crate::hhproj::h2_report(&ring)).hh2.clone()
                    } else {
                        hh.entry(*i).or_insert_with(|| hh_dim(&ring, *i)).clone()
                    };
                    (format!("HH^{i} hodge {r}"), value.to_string(), rep.hodge(*r).to_string(), provenance)
                }
                Expected::H1Tangent { value, provenance } => {
                    let got = h2.get_or_insert_with(|| crate::hhproj::h2_report(&ring)).h1_tangent;
                    let got = got.map_or_else(|| "n/a".to_string(), |v| v.to_string());
                    ("h1_tangent".to_string(), value.to_string(), got, provenance)
                }
                Expected::Smooth { value, provenance } => {
                    let got = h2.get_or_insert_with(|| crate::hhproj::h2_report(&ring)).smooth;
                    ("smooth".to_string(), value.to_string(), got.to_string(), provenance)
                }
                Expected::QDim { j, m, value, provenance } => {
                    (format!("q_dim({j},{m})"), value.to_string(), q_dim(&ring, *j, *m).to_string(), provenance)
                }
                Expected::PDim { j, m, value, provenance } => {
                    (format!("p_dim({j},{m})"), value.to_string(), p_dim(&ring, *j, *m).to_string(), provenance)
                }
                Expected::ZDim { j, m, value, provenance } => {
                    (format!("z_dim({j},{m})"), value.to_string(), z_dim(ring.n, *j, *m).to_string(), provenance)
                }
            };
            out.push(CheckResult {
                fixture: fx.name.clone(),
                passed: expected == got,
                quantity,
                expected,
                got,
                provenance: provenance.clone(),
            });
        }
    }
    Ok(out)
}

/// Loads and evaluates a fixture file (library entry point for tests).
pub fn evaluate_fixture_file(path: &std::path::Path) -> Result<Vec<CheckResult>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let fixtures: Vec<Fixture> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    run_fixtures(&fixtures).map_err(|CliError(m)| m)
}
