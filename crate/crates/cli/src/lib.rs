//! The `monores` command line: argument model, job execution and exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monores::decomposition::{decompose_brute, decompose_minimal, decompose_scarf, primary_grouping, Decomposition};
use monores::io::{self, ParsedIdeal};
use monores::residue::{duality_check_with, Limits, Verdict};
use monores::scarf::{contains_scarf_complex, scarf_complex, scarf_pairs, star_ideal};
use monores::{Error, ErrorKind, FreeComplex, LabeledComplex, MonomialIdeal, Staircase};
use serde_json::{json, Value};

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const CAP: i32 = 4;
    pub const VERIFICATION: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = "monores", version, about = "Cellular resolutions and irreducible decompositions of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report genericity, Artinian-ness and basic invariants.
    Check(CommonArgs),
    /// Scarf complex of the ideal and the facet pairs of its ghosted version.
    Scarf(CommonArgs),
    /// Taylor complex and its free complex.
    Taylor(CommonArgs),
    /// Free complex of a user-supplied labeled complex.
    Resolve(CommonArgs),
    /// Irredundant irreducible decomposition.
    Decompose(CommonArgs),
    /// Associated primes and primary components.
    Ass(CommonArgs),
    /// Symbolic residue current and the duality check.
    Residue(CommonArgs),
    /// Staircase diagram (two variables only).
    Staircase(CommonArgs),
    /// Cross-check every applicable decomposition route.
    Verify(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Scarf,
    Minimal,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).args(["ideal", "inline"]))]
pub struct CommonArgs {
    /// Ideal file, text or JSON; `-` reads standard input.
    #[arg(long, short = 'i')]
    pub ideal: Option<PathBuf>,
    /// Ideal given inline, e.g. "vars: x,y; ideal: x^2, x*y".
    #[arg(long, short = 'e')]
    pub inline: Option<String>,
    /// Labeled complex file (JSON).
    #[arg(long)]
    pub complex: Option<PathBuf>,
    /// Use the Taylor complex for `residue`.
    #[arg(long, conflicts_with = "complex")]
    pub taylor: bool,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Exponent D of the ghost generators.
    #[arg(long)]
    pub ghost_exponent: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long, default_value_t = monores::DEFAULT_VERTEX_CAP)]
    pub cap_vertices: usize,
    /// Bound on the brute-force candidate box.
    #[arg(long, default_value_t = monores::DEFAULT_CANDIDATE_CAP)]
    pub cap_candidates: usize,
}

/// Which computation to run, independent of how the arguments arrived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Check,
    Scarf,
    Taylor,
    Resolve,
    Decompose,
    Ass,
    Residue,
    Staircase,
    Verify,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Check => "check",
            Task::Scarf => "scarf",
            Task::Taylor => "taylor",
            Task::Resolve => "resolve",
            Task::Decompose => "decompose",
            Task::Ass => "ass",
            Task::Residue => "residue",
            Task::Staircase => "staircase",
            Task::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Inline(String),
}

#[derive(Debug, Clone)]
pub struct Job {
    pub task: Task,
    pub ideal: Source,
    pub complex: Option<Source>,
    pub taylor: bool,
    pub method: Option<MethodArg>,
    pub ghost_exponent: Option<u32>,
    pub format: Format,
    pub cap_vertices: usize,
    pub cap_candidates: usize,
}

impl Job {
    pub fn new(task: Task, ideal: Source) -> Self {
        Job {
            task,
            ideal,
            complex: None,
            taylor: false,
            method: None,
            ghost_exponent: None,
            format: Format::Json,
            cap_vertices: monores::DEFAULT_VERTEX_CAP,
            cap_candidates: monores::DEFAULT_CANDIDATE_CAP,
        }
    }
}

impl From<Cli> for Job {
    fn from(cli: Cli) -> Self {
        let (task, a) = match cli.command {
            Command::Check(a) => (Task::Check, a),
            Command::Scarf(a) => (Task::Scarf, a),
            Command::Taylor(a) => (Task::Taylor, a),
            Command::Resolve(a) => (Task::Resolve, a),
            Command::Decompose(a) => (Task::Decompose, a),
            Command::Ass(a) => (Task::Ass, a),
            Command::Residue(a) => (Task::Residue, a),
            Command::Staircase(a) => (Task::Staircase, a),
            Command::Verify(a) => (Task::Verify, a),
        };
        let ideal = match (a.ideal, a.inline) {
            (Some(p), _) => Source::File(p),
            (None, Some(s)) => Source::Inline(s),
            (None, None) => unreachable!("clap enforces one ideal source"),
        };
        Job {
            task,
            ideal,
            complex: a.complex.map(Source::File),
            taylor: a.taylor,
            method: a.method,
            ghost_exponent: a.ghost_exponent,
            format: a.format,
            cap_vertices: a.cap_vertices,
            cap_candidates: a.cap_candidates,
        }
    }
}

/// Result of a run: the document for standard output, diagnostics for
/// standard error, and the exit status. Failed runs have an empty document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub code: i32,
}

enum Failure {
    Io(String),
    Usage(String),
    Lib(Error),
    /// A cross-check disagreed.
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Parse => exit::PARSE,
        ErrorKind::Precondition => exit::PRECONDITION,
        ErrorKind::CapExceeded => exit::CAP,
        ErrorKind::Verification => exit::VERIFICATION,
    }
}

pub fn run(job: &Job) -> Outcome {
    let mut warnings = Vec::new();
    match execute(job, &mut warnings) {
        Ok(stdout) => Outcome { stdout, stderr: warnings, code: exit::OK },
        Err(f) => {
            let (msg, code) = match f {
                Failure::Io(m) => (format!("error: {m}"), exit::USAGE),
                Failure::Usage(m) => (format!("error: {m}"), exit::USAGE),
                Failure::Mismatch(m) => (format!("verification failed: {m}"), exit::VERIFICATION),
                Failure::Lib(e) => (format!("error: {e}"), exit_code(&e)),
            };
            warnings.push(msg);
            Outcome { stdout: String::new(), stderr: warnings, code }
        }
    }
}

fn read_source(src: &Source) -> Run<String> {
    match src {
        Source::Inline(s) => Ok(s.replace(';', "\n")),
        Source::File(p) if p.as_os_str() == "-" => {
            std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Io(format!("standard input: {e}")))
        }
        Source::File(p) => std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
    }
}

struct Ctx<'a> {
    job: &'a Job,
    parsed: ParsedIdeal,
}

impl Ctx<'_> {
    fn ideal(&self) -> &MonomialIdeal {
        &self.parsed.ideal
    }

    fn names(&self) -> &[String] {
        &self.parsed.names
    }

    fn limits(&self) -> Limits {
        Limits { vertices: self.job.cap_vertices, candidates: self.job.cap_candidates }
    }

    fn user_complex(&self) -> Run<Option<LabeledComplex>> {
        match &self.job.complex {
            None => Ok(None),
            Some(src) => Ok(Some(io::parse_complex(&read_source(src)?, self.ideal())?)),
        }
    }

    fn taylor(&self) -> Run<LabeledComplex> {
        monores::complex::check_vertex_cap(self.ideal().len(), self.job.cap_vertices)?;
        Ok(LabeledComplex::full_simplex(self.ideal().generators().to_vec())?)
    }

    fn text(&self, m: &MonomialIdeal) -> String {
        m.display_with(self.names()).to_string()
    }
}

fn execute(job: &Job, warnings: &mut Vec<String>) -> Run<String> {
    let parsed = io::parse_ideal(&read_source(&job.ideal)?)?;
    for w in &parsed.warnings {
        warnings.push(format!("warning: {w}"));
    }
    if job.format == Format::Svg && job.task != Task::Staircase {
        return Err(Failure::Usage("`--format svg` is only available for `staircase`".into()));
    }
    let ctx = Ctx { job, parsed };
    let (body, text) = match job.task {
        Task::Check => check(&ctx)?,
        Task::Scarf => scarf(&ctx)?,
        Task::Taylor => taylor(&ctx)?,
        Task::Resolve => resolve(&ctx)?,
        Task::Decompose => decompose(&ctx)?,
        Task::Ass => ass(&ctx)?,
        Task::Residue => residue(&ctx)?,
        Task::Staircase => return staircase(&ctx),
        Task::Verify => return verify(&ctx),
    };
    Ok(render(job, body, text))
}

fn render(job: &Job, body: Value, text: String) -> String {
    match job.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&io::document(job.task.name(), body)).expect("values serialize");
            s.push('\n');
            s
        }
        _ => text,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn check(ctx: &Ctx) -> Run<(Value, String)> {
    let m = ctx.ideal();
    let (generic, strongly, artinian) = (m.is_generic()?, m.is_strongly_generic()?, m.is_artinian()?);
    let body = json!({
        "ideal": io::ideal_json(m, ctx.names()),
        "generators": m.len(),
        "generic": generic,
        "strongly_generic": strongly,
        "artinian": artinian,
        "max_degrees": m.max_degrees(),
    });
    let text = format!(
        "ideal: {}\ngenerators: {}\ngeneric: {}\nstrongly generic: {}\nartinian: {}\n",
        ctx.text(m),
        m.len(),
        yes_no(generic),
        yes_no(strongly),
        yes_no(artinian)
    );
    Ok((body, text))
}

fn complex_text(x: &LabeledComplex, names: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "dimension: {}", x.dim());
    for f in x.facets() {
        let face = x.face(f);
        let verts: Vec<String> = face.vertices().iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(s, "facet {{{}}}  label {}", verts.join(","), face.label().display_with(names));
    }
    s
}

fn scarf(ctx: &Ctx) -> Run<(Value, String)> {
    let m = ctx.ideal();
    let x = scarf_complex(m, ctx.job.cap_vertices)?;
    let ghosted = star_ideal(m, ctx.job.ghost_exponent)?;
    let d = ghosted.ghost_exponent();
    let pairs = scarf_pairs(m, Some(d), ctx.job.cap_vertices)?;
    let body = json!({
        "ideal": io::ideal_json(m, ctx.names()),
        "complex": io::complex_json(&x, ctx.names()),
        "ghost_exponent": d,
        "star": io::ideal_json(ghosted.star(), ctx.names()),
        "pairs": io::scarf_pairs_json(&pairs, ctx.names()),
    });
    let mut text = complex_text(&x, ctx.names());
    let _ = writeln!(text, "ghost exponent: {d}");
    for p in &pairs {
        let k: Vec<String> = p.k.iter().map(|i| (i + 1).to_string()).collect();
        let t: Vec<String> = p.tau.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(text, "pair K={{{}}} tau={{{}}}  label {}", k.join(","), t.join(","), p.label.display_with(ctx.names()));
    }
    Ok((body, text))
}

fn free_text(f: &FreeComplex, resolution: bool) -> String {
    let ranks: Vec<String> = f.ranks().iter().map(ToString::to_string).collect();
    format!(
        "ranks: {}\nchain complex: {}\nresolution: {}\nminimal: {}\n",
        ranks.join(" "),
        yes_no(f.verify_chain()),
        yes_no(resolution),
        yes_no(f.is_minimal())
    )
}

fn free_body(ctx: &Ctx, x: &LabeledComplex, f: &FreeComplex, resolution: bool) -> Value {
    let mut body = json!({
        "ideal": io::ideal_json(ctx.ideal(), ctx.names()),
        "complex": io::complex_json(x, ctx.names()),
        "free_complex": io::free_complex_json(f, ctx.names()),
        "resolution": resolution,
    });
    if resolution && f.is_minimal() {
        body["betti"] = json!(f.ranks());
    }
    body
}

fn taylor(ctx: &Ctx) -> Run<(Value, String)> {
    let x = ctx.taylor()?;
    let f = FreeComplex::build(&x, ctx.ideal())?;
    let resolution = f.is_resolution(ctx.job.cap_vertices)?;
    Ok((free_body(ctx, &x, &f, resolution), free_text(&f, resolution)))
}

fn resolve(ctx: &Ctx) -> Run<(Value, String)> {
    let x = ctx.user_complex()?.ok_or_else(|| Failure::Usage("`resolve` needs `--complex FILE`".into()))?;
    let f = FreeComplex::build(&x, ctx.ideal())?;
    let resolution = f.is_resolution(ctx.job.cap_vertices)?;
    let mut body = free_body(ctx, &x, &f, resolution);
    let mut text = free_text(&f, resolution);
    if resolution && ctx.ideal().is_generic()? {
        let contains = contains_scarf_complex(&x, ctx.ideal(), ctx.job.cap_vertices)?;
        if !contains {
            return Err(Error::Verification("resolution of a generic ideal misses a Scarf face".into()).into());
        }
        body["contains_scarf"] = json!(contains);
        let _ = writeln!(text, "contains Scarf complex: yes");
    }
    Ok((body, text))
}

fn run_decomposition(ctx: &Ctx, method: MethodArg) -> Run<Decomposition> {
    let m = ctx.ideal();
    let cap = ctx.job.cap_vertices;
    Ok(match method {
        MethodArg::Scarf => decompose_scarf(m, ctx.job.ghost_exponent, cap)?,
        MethodArg::Minimal => {
            let x = match ctx.user_complex()? {
                Some(x) => x,
                None => scarf_complex(m, cap)?,
            };
            decompose_minimal(m, &x, cap)?
        }
        MethodArg::Brute => decompose_brute(m, ctx.job.cap_candidates)?,
    })
}

fn decomposition_text(ctx: &Ctx, d: &Decomposition, verified: bool) -> String {
    let mut s = format!("method: {}\n", d.method().as_str());
    for c in d.components() {
        let _ = writeln!(s, "{}", c.display_with(ctx.names()));
    }
    let _ = writeln!(s, "verified: {}", yes_no(verified));
    s
}

fn decompose(ctx: &Ctx) -> Run<(Value, String)> {
    let method = match ctx.job.method {
        Some(m) => m,
        None if ctx.ideal().is_generic()? => MethodArg::Scarf,
        None => MethodArg::Brute,
    };
    let d = run_decomposition(ctx, method)?;
    let verified = d.verify()?;
    if !verified {
        return Err(Error::Verification("decomposition does not intersect irredundantly to the ideal".into()).into());
    }
    let mut body = io::decomposition_json(&d, ctx.names(), verified);
    body["ideal"] = io::ideal_json(ctx.ideal(), ctx.names());
    Ok((body, decomposition_text(ctx, &d, verified)))
}

fn ass(ctx: &Ctx) -> Run<(Value, String)> {
    let d = decompose_brute(ctx.ideal(), ctx.job.cap_candidates)?;
    let groups = primary_grouping(&d)?;
    let var = |i: &usize| ctx.names().get(*i).cloned().unwrap_or_else(|| format!("z{}", i + 1));
    let mut text = String::new();
    let primes: Vec<Value> = groups
        .iter()
        .map(|(k, q)| {
            let gens: Vec<String> = k.iter().map(var).collect();
            let _ = writeln!(text, "({})  primary component {}", gens.join(", "), ctx.text(q));
            json!({
                "K": k.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "prime": format!("({})", gens.join(", ")),
                "primary_component": io::ideal_json(q, ctx.names()),
            })
        })
        .collect();
    let body = json!({ "ideal": io::ideal_json(ctx.ideal(), ctx.names()), "associated_primes": primes });
    Ok((body, text))
}

fn residue_complex(ctx: &Ctx) -> Run<(LabeledComplex, &'static str)> {
    if let Some(x) = ctx.user_complex()? {
        return Ok((x, "custom"));
    }
    if !ctx.job.taylor && ctx.ideal().is_generic()? {
        return Ok((scarf_complex(ctx.ideal(), ctx.job.cap_vertices)?, "scarf"));
    }
    Ok((ctx.taylor()?, "taylor"))
}

fn residue(ctx: &Ctx) -> Run<(Value, String)> {
    let (x, kind) = residue_complex(ctx)?;
    let report = duality_check_with(ctx.ideal(), &x, ctx.limits(), monores::Execution::default())?;
    if report.verdict == Verdict::Violated {
        return Err(Error::Verification("annihilator bounds do not bracket the ideal".into()).into());
    }
    let mut body = io::duality_json(&report, ctx.names());
    body["ideal"] = io::ideal_json(ctx.ideal(), ctx.names());
    body["complex_kind"] = json!(kind);
    let mut text = format!("complex: {kind}\n");
    text.push_str(&report.current.render(ctx.names()));
    let _ = writeln!(text, "lower: {}\nupper: {}\nverdict: {}", ctx.text(&report.lower), ctx.text(&report.upper), report.verdict.as_str());
    Ok((body, text))
}

fn staircase(ctx: &Ctx) -> Run<String> {
    let s = Staircase::new(ctx.ideal())?;
    Ok(match ctx.job.format {
        Format::Text => s.ascii(),
        Format::Svg => s.svg(ctx.names()),
        Format::Json => {
            let mut body = s.json();
            body["ideal"] = io::ideal_json(ctx.ideal(), ctx.names());
            body["components"] = json!(s.components().iter().map(|c| io::irreducible_json(c, ctx.names())).collect::<Vec<_>>());
            render(ctx.job, body, String::new())
        }
    })
}

fn verify(ctx: &Ctx) -> Run<String> {
    let m = ctx.ideal();
    let brute = decompose_brute(m, ctx.job.cap_candidates)?;
    let reference = brute.component_set();
    let mut routes = vec![json!({ "method": "brute", "verified": brute.verify()?, "agrees": true })];
    let mut text = format!("brute: {} components, verified {}\n", reference.len(), yes_no(brute.verify()?));
    let mut all_agree = brute.verify()?;

    let mut compare = |name: &str, d: Run<Decomposition>, text: &mut String, routes: &mut Vec<Value>| -> Run<()> {
        match d {
            Ok(d) => {
                let agrees = d.component_set() == reference;
                let verified = d.verify()?;
                all_agree &= agrees && verified;
                let _ = writeln!(text, "{name}: agrees {}, verified {}", yes_no(agrees), yes_no(verified));
                routes.push(json!({ "method": name, "verified": verified, "agrees": agrees }));
            }
            Err(Failure::Lib(e)) if e.kind() == ErrorKind::Precondition => {
                let _ = writeln!(text, "{name}: skipped ({e})");
                routes.push(json!({ "method": name, "skipped": e.to_string() }));
            }
            Err(f) => return Err(f),
        }
        Ok(())
    };
    compare("scarf", run_decomposition(ctx, MethodArg::Scarf), &mut text, &mut routes)?;
    compare("minimal", run_decomposition(ctx, MethodArg::Minimal), &mut text, &mut routes)?;

    let (x, kind) = residue_complex(ctx)?;
    let report = duality_check_with(m, &x, ctx.limits(), monores::Execution::default())?;
    let duality_ok = report.verdict != Verdict::Violated;
    let _ = writeln!(text, "residue ({kind}): verdict {}", report.verdict.as_str());
    let consistent = all_agree && duality_ok;
    let _ = writeln!(text, "all consistent: {}", yes_no(consistent));

    let body = json!({
        "ideal": io::ideal_json(m, ctx.names()),
        "components": brute.components().iter().map(|c| io::irreducible_json(c, ctx.names())).collect::<Vec<_>>(),
        "routes": routes,
        "residue": { "complex_kind": kind, "verdict": report.verdict.as_str() },
        "equal": consistent,
    });
    if !consistent {
        return Err(Failure::Mismatch("decomposition routes or duality check disagree".into()));
    }
    Ok(render(ctx.job, body, text))
}
