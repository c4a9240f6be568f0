//! Command-line front end: instance files in, JSON or table reports out.
//!
//! Exit status is 0 when every verdict holds, 1 when some check fails and 2
//! for usage, parse or precondition errors.

pub mod expr;
pub mod instance;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use torzar::positivity;
use torzar::rational::{format_rational, Rational};
use torzar::verifier::{self, random_instance, run_suite, IntersectionReport, RandomSpec, SuiteKind, Verdict};
use torzar::{lattice, FanError, ToricClass};

pub use instance::{parse_instance, Instance, InstanceFile};
pub use report::ReportFile;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed instance JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Io(String),
    #[error("invalid fan: {0}")]
    Fan(FanError),
    #[error("invalid class: {0}")]
    Class(String),
    #[error("bad rational: {0}")]
    Rational(String),
    #[error("bad class expression {0}")]
    Expression(String),
    #[error("unknown class '{0}'")]
    UnknownClass(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot evaluate: {0}")]
    Precondition(String),
}

impl From<positivity::PositivityError> for CliError {
    fn from(e: positivity::PositivityError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<verifier::VerifyError> for CliError {
    fn from(e: verifier::VerifyError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "torzar", version, about = "Exact positivity invariants of toric divisor classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Input {
    /// Instance file (JSON).
    #[arg(short = 'i', long)]
    instance: PathBuf,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct One {
    #[command(flatten)]
    input: Input,
    /// Class expression, e.g. `2H-E`.
    #[arg(short = 'c', long = "class")]
    class: String,
}

#[derive(Debug, Args)]
struct Many {
    #[command(flatten)]
    input: Input,
    /// Class expressions; a single one is repeated to the required arity.
    #[arg(short = 'c', long = "class", required = true)]
    classes: Vec<String>,
}

#[derive(Debug, Args)]
struct Two {
    #[command(flatten)]
    input: Input,
    #[arg(short = 'a')]
    a: String,
    #[arg(short = 'b')]
    b: String,
}

#[derive(Debug, Args)]
struct TwoPrecise {
    #[command(flatten)]
    two: Two,
    /// Decimal digits for irrational quantities.
    #[arg(long, default_value_t = 60)]
    precision: u32,
}

#[derive(Debug, Args)]
struct WithRay {
    #[command(flatten)]
    one: One,
    /// Ray index or literal vector such as `1,1` or `(1,1)`.
    #[arg(long, allow_hyphen_values = true)]
    ray: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate an instance and summarize its classes.
    Validate(Input),
    /// Newton polytope of a class.
    Newton(One),
    /// Zariski decomposition P + N.
    Zariski(One),
    /// Volume n!·vol(Nw).
    Vol(One),
    /// Positive intersection product of n classes.
    Product(Many),
    /// Pairing of n-1 psef classes with an arbitrary class.
    Pair {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'a', required = true)]
        a: Vec<String>,
        #[arg(short = 'b')]
        b: String,
    },
    /// Largest t with α - tβ pseudo-effective.
    Slope(Two),
    Nef(One),
    Psef(One),
    Big(One),
    Dpsef(WithRay),
    Dbig(WithRay),
    /// Restricted volume along a ray divisor.
    Restricted(WithRay),
    /// Section counts h0(kα) for k = 1..=kmax.
    H0 {
        #[command(flatten)]
        one: One,
        #[arg(long, default_value_t = 8)]
        kmax: u64,
        /// Also count sections restricted to this ray divisor.
        #[arg(long, allow_hyphen_values = true)]
        ray: Option<String>,
    },
    /// Derivative of the volume against n·pairing.
    ThmA(Two),
    CorC(WithRay),
    Morse(Two),
    Kt(Many),
    Ortho(One),
    Diskant(TwoPrecise),
    ThmD(Two),
    CorE(TwoPrecise),
    /// Integral formula for (α^n) along the segment to β.
    Integral {
        #[command(flatten)]
        two: Two,
        #[arg(long, default_value_t = 4)]
        grid: usize,
        #[arg(long, default_value_t = 9)]
        precision: u32,
    },
    FujitaSections {
        #[command(flatten)]
        one: One,
        #[arg(long, default_value_t = 8)]
        kmax: u64,
    },
    /// Run the randomized suites.
    Suite {
        #[arg(long, env = "TORZAR_SEED", default_value_t = 0)]
        seed: u64,
        /// Restrict to one dimension.
        #[arg(long)]
        dim: Option<usize>,
        /// Cases per suite (default depends on suite and dimension).
        #[arg(long)]
        count: Option<u64>,
        /// Restrict to one suite by name.
        #[arg(long)]
        suite: Option<String>,
        /// Include every case, not only failures.
        #[arg(long)]
        all_cases: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Write a random instance file.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        subdivisions: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a command and prints its output; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = execute(argv);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

/// Runs a command without touching the terminal. `argv[0]` is the program name.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(cli.command, echo) {
        Ok(o) => o,
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Ctx {
    instance: Instance,
}

impl Ctx {
    fn load(input: &Input) -> Result<Self, CliError> {
        Ok(Self { instance: parse_instance(&input.instance)? })
    }

    fn class(&self, text: &str) -> Result<ToricClass, CliError> {
        expr::evaluate(text, &self.instance.classes)
    }

    fn dim(&self) -> usize {
        self.instance.fan.dim()
    }

    fn ray(&self, text: &str) -> Result<usize, CliError> {
        let n_rays = self.instance.fan.rays().len();
        let t = text.trim();
        if let Ok(i) = t.parse::<usize>() {
            return if i < n_rays {
                Ok(i)
            } else {
                Err(CliError::Usage(format!("ray index {i} out of range ({n_rays} rays)")))
            };
        }
        let inner = t.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let coords: Vec<i64> = inner
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Usage(format!("bad ray '{text}'")))?;
        if coords.len() != self.dim() {
            return Err(CliError::Usage(format!("ray '{text}' has the wrong dimension")));
        }
        self.instance
            .fan
            .ray_index(&lattice(&coords))
            .ok_or_else(|| CliError::Usage(format!("'{text}' is not a ray of the fan")))
    }

    /// A single expression repeated to `arity`, or exactly `arity` expressions.
    fn tuple(&self, exprs: &[String], arity: usize) -> Result<Vec<ToricClass>, CliError> {
        let classes = exprs.iter().map(|e| self.class(e)).collect::<Result<Vec<_>, _>>()?;
        match classes.len() {
            1 => Ok(vec![classes[0].clone(); arity]),
            k if k == arity => Ok(classes),
            k => Err(CliError::Usage(format!("expected 1 or {arity} classes, got {k}"))),
        }
    }
}

fn values(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn check_record(command: &str, report: &IntersectionReport) -> Value {
    let mut v = serde_json::to_value(report).expect("report serializes");
    v.as_object_mut().unwrap().insert("command".into(), json!(command));
    v
}

fn finish(
    echo: Vec<String>,
    digest: Option<String>,
    records: Vec<Value>,
    ok: bool,
    output: &Output,
) -> Result<Outcome, CliError> {
    let status = if ok { 0 } else { 1 };
    let report = ReportFile { schema: report::SCHEMA, command: echo, instance: digest, records, status };
    let text = match output.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    emit(text, output.out.as_ref(), status)
}

fn emit(text: String, out: Option<&PathBuf>, code: i32) -> Result<Outcome, CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome { code, stdout: String::new(), stderr: String::new() })
        }
        None => Ok(Outcome { code, stdout: text, stderr: String::new() }),
    }
}

fn dispatch(command: Command, echo: Vec<String>) -> Result<Outcome, CliError> {
    match command {
        Command::Suite { seed, dim, count, suite, all_cases, output } => {
            return suite_command(echo, seed, dim, count, suite, all_cases, &output)
        }
        Command::Gen { seed, dim, subdivisions, out } => return gen_command(seed, dim, subdivisions, out),
        _ => {}
    }
    let input = match &command {
        Command::Validate(i) | Command::Pair { input: i, .. } => i,
        Command::Newton(o)
        | Command::Zariski(o)
        | Command::Vol(o)
        | Command::Nef(o)
        | Command::Psef(o)
        | Command::Big(o)
        | Command::Ortho(o)
        | Command::H0 { one: o, .. }
        | Command::FujitaSections { one: o, .. } => &o.input,
        Command::Product(m) | Command::Kt(m) => &m.input,
        Command::Slope(t) | Command::ThmA(t) | Command::Morse(t) | Command::ThmD(t) | Command::Integral { two: t, .. } => {
            &t.input
        }
        Command::Diskant(t) | Command::CorE(t) => &t.two.input,
        Command::Dpsef(r) | Command::Dbig(r) | Command::Restricted(r) | Command::CorC(r) => &r.one.input,
        Command::Suite { .. } | Command::Gen { .. } => unreachable!(),
    };
    let ctx = Ctx::load(input)?;
    let digest = Some(ctx.instance.file.digest());
    let name = echo.first().cloned().unwrap_or_default();
    let n = ctx.dim();
    let mut ok = true;
    let mut check = |r: IntersectionReport| {
        ok &= r.verdict.passed();
        check_record(&name, &r)
    };
    let records: Vec<Value> = match &command {
        Command::Validate(_) => {
            let fan = &ctx.instance.fan;
            let mut recs = vec![json!({
                "command": "validate",
                "dim": n,
                "rays": fan.rays().len(),
                "cones": fan.cones().len(),
                "ample": values(fan.ample_values()),
            })];
            for (cname, c) in &ctx.instance.classes {
                let s = positivity::summary(c);
                recs.push(json!({
                    "class": cname,
                    "psef": s.psef,
                    "big": s.big,
                    "nef": s.nef,
                    "volume": format_rational(&s.volume),
                }));
            }
            recs
        }
        Command::Newton(o) => {
            let c = ctx.class(&o.class)?;
            let p = c.newton_polytope();
            let vertices: Vec<Vec<String>> = p
                .vertices()
                .map_err(|e| CliError::Precondition(e.to_string()))?
                .iter()
                .map(|v| values(v))
                .collect();
            let affine = p.affine_dim().map_err(|e| CliError::Precondition(e.to_string()))?;
            let volume = p.volume().map_err(|e| CliError::Precondition(e.to_string()))?;
            vec![json!({
                "command": "newton",
                "class": o.class,
                "empty": affine.is_none(),
                "affine_dim": affine,
                "vertices": vertices,
                "euclidean_volume": format_rational(&volume),
            })]
        }
        Command::Zariski(o) => {
            let c = ctx.class(&o.class)?;
            let z = positivity::zariski(&c)?;
            vec![json!({
                "command": "zariski",
                "class": o.class,
                "positive": values(z.positive_class.values()),
                "negative": values(&z.negative),
                "support": z.support(),
            })]
        }
        Command::Vol(o) => {
            let c = ctx.class(&o.class)?;
            vec![json!({"command": "vol", "class": o.class, "value": format_rational(&positivity::vol(&c))})]
        }
        Command::Product(m) => {
            let cs = ctx.tuple(&m.classes, n)?;
            let refs: Vec<&ToricClass> = cs.iter().collect();
            let v = positivity::positive_product(&refs)?;
            vec![json!({"command": "product", "classes": m.classes, "value": format_rational(&v)})]
        }
        Command::Pair { a, b, .. } => {
            let alphas = ctx.tuple(a, n - 1)?;
            let gamma = ctx.class(b)?;
            let refs: Vec<&ToricClass> = alphas.iter().collect();
            let v = positivity::pair(&refs, &gamma)?;
            vec![json!({"command": "pair", "a": a, "b": b, "value": format_rational(&v)})]
        }
        Command::Slope(t) => {
            let v = positivity::slope(&ctx.class(&t.a)?, &ctx.class(&t.b)?)?;
            vec![json!({"command": "slope", "a": t.a, "b": t.b, "value": format_rational(&v)})]
        }
        Command::Nef(o) | Command::Psef(o) | Command::Big(o) => {
            let c = ctx.class(&o.class)?;
            let v = match command {
                Command::Nef(_) => positivity::is_nef(&c),
                Command::Psef(_) => positivity::is_psef(&c),
                _ => positivity::is_big(&c),
            };
            vec![json!({"command": name, "class": o.class, "value": v})]
        }
        Command::Dpsef(r) | Command::Dbig(r) | Command::Restricted(r) => {
            let c = ctx.class(&r.one.class)?;
            let rho = ctx.ray(&r.ray)?;
            let v = match command {
                Command::Dpsef(_) => json!(positivity::is_d_psef(&c, rho)?),
                Command::Dbig(_) => json!(positivity::is_d_big(&c, rho)?),
                _ => json!(format_rational(&positivity::restricted_volume(&c, rho)?)),
            };
            vec![json!({"command": name, "class": r.one.class, "ray": rho, "value": v})]
        }
        Command::H0 { one, kmax, ray } => {
            let c = ctx.class(&one.class)?;
            let rho = ray.as_deref().map(|r| ctx.ray(r)).transpose()?;
            let mut recs = Vec::new();
            for k in 1..=*kmax {
                let mut rec = json!({"command": "h0", "class": one.class, "k": k, "value": positivity::h0(&c, k)?});
                if let Some(rho) = rho {
                    let obj = rec.as_object_mut().unwrap();
                    obj.insert("ray".into(), json!(rho));
                    obj.insert("restricted".into(), json!(positivity::h0_restricted(&c, rho, k)?));
                }
                recs.push(rec);
            }
            recs
        }
        Command::ThmA(t) => {
            let r = verifier::check_theorem_a(&ctx.class(&t.a)?, &ctx.class(&t.b)?)?;
            ok &= r.verdict.passed();
            let mut v = serde_json::to_value(&r).expect("report serializes");
            let obj = v.as_object_mut().unwrap();
            obj.insert("command".into(), json!("thm-a"));
            obj.insert("second_order_jump".into(), json!(r.second_order_jump()));
            vec![v]
        }
        Command::CorC(r) => {
            let rho = ctx.ray(&r.ray)?;
            vec![check(verifier::check_corollary_c(&ctx.class(&r.one.class)?, rho)?)]
        }
        Command::Morse(t) => vec![check(verifier::check_morse(&ctx.class(&t.a)?, &ctx.class(&t.b)?)?)],
        Command::Kt(m) => vec![check(verifier::check_kt(&ctx.tuple(&m.classes, n)?)?)],
        Command::Ortho(o) => {
            let c = ctx.class(&o.class)?;
            vec![check(verifier::check_ortho(&c)?), check(verifier::check_fujita(&c)?)]
        }
        Command::Diskant(t) => {
            vec![check(verifier::check_diskant(&ctx.class(&t.two.a)?, &ctx.class(&t.two.b)?, t.precision)?)]
        }
        Command::ThmD(t) => vec![check(verifier::check_theorem_d(&ctx.class(&t.a)?, &ctx.class(&t.b)?)?)],
        Command::CorE(t) => {
            vec![check(verifier::check_corollary_e(&ctx.class(&t.two.a)?, &ctx.class(&t.two.b)?, t.precision)?)]
        }
        Command::Integral { two, grid, precision } => {
            if *grid == 0 {
                return Err(CliError::Usage("--grid must be positive".into()));
            }
            vec![check(verifier::check_integral_formula(
                &ctx.class(&two.a)?,
                &ctx.class(&two.b)?,
                *grid,
                *precision,
            )?)]
        }
        Command::FujitaSections { one, kmax } => {
            vec![check(verifier::check_fujita_sections(&ctx.class(&one.class)?, *kmax)?)]
        }
        Command::Suite { .. } | Command::Gen { .. } => unreachable!(),
    };
    finish(echo, digest, records, ok, output_of(&command))
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Validate(i) | Command::Pair { input: i, .. } => &i.output,
        Command::Newton(o)
        | Command::Zariski(o)
        | Command::Vol(o)
        | Command::Nef(o)
        | Command::Psef(o)
        | Command::Big(o)
        | Command::Ortho(o)
        | Command::H0 { one: o, .. }
        | Command::FujitaSections { one: o, .. } => &o.input.output,
        Command::Product(m) | Command::Kt(m) => &m.input.output,
        Command::Slope(t) | Command::ThmA(t) | Command::Morse(t) | Command::ThmD(t) | Command::Integral { two: t, .. } => {
            &t.input.output
        }
        Command::Diskant(t) | Command::CorE(t) => &t.two.input.output,
        Command::Dpsef(r) | Command::Dbig(r) | Command::Restricted(r) | Command::CorC(r) => &r.one.input.output,
        Command::Suite { output, .. } => output,
        Command::Gen { .. } => unreachable!(),
    }
}

/// Dimensions each suite runs in by default.
fn suite_dims(kind: SuiteKind) -> &'static [usize] {
    match kind {
        SuiteKind::TheoremA | SuiteKind::Diskant => &[2, 3],
        _ => &[2],
    }
}

fn suite_command(
    echo: Vec<String>,
    seed: u64,
    dim: Option<usize>,
    count: Option<u64>,
    suite: Option<String>,
    all_cases: bool,
    output: &Output,
) -> Result<Outcome, CliError> {
    let kinds: Vec<SuiteKind> = match &suite {
        Some(name) => vec![SuiteKind::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = SuiteKind::ALL.iter().map(|k| k.name()).collect();
            CliError::Usage(format!("unknown suite '{name}' (expected one of {})", names.join(", ")))
        })?],
        None => SuiteKind::ALL.to_vec(),
    };
    if let Some(d) = dim {
        if !(1..=4).contains(&d) {
            return Err(CliError::Usage(format!("--dim {d} not supported (1 to 4)")));
        }
    }
    let mut records = Vec::new();
    let mut ok = true;
    for kind in kinds {
        let dims: Vec<usize> = match dim {
            Some(d) => vec![d],
            None => suite_dims(kind).to_vec(),
        };
        for d in dims {
            let n = count.unwrap_or_else(|| kind.default_count(d));
            let report = run_suite(kind, d, n, seed);
            ok &= report.ok();
            let cases: Vec<Value> = report
                .cases
                .iter()
                .filter(|c| all_cases || c.verdict == Verdict::Fails)
                .map(|c| json!({"seed": c.seed, "verdict": c.verdict, "summary": c.summary}))
                .collect();
            records.push(json!({
                "suite": kind.name(),
                "dim": d,
                "base_seed": seed,
                "count": n,
                "passed": report.passed,
                "failed": report.failed,
                "equalities": report.equalities,
                "cases": cases,
            }));
        }
    }
    finish(echo, None, records, ok, output)
}

fn gen_command(seed: u64, dim: usize, subdivisions: usize, out: Option<PathBuf>) -> Result<Outcome, CliError> {
    if !(1..=4).contains(&dim) {
        return Err(CliError::Usage(format!("--dim {dim} not supported (1 to 4)")));
    }
    let spec = RandomSpec::new(seed, dim).with_subdivisions(subdivisions);
    let inst = random_instance(&spec);
    let mut classes = BTreeMap::new();
    for (i, c) in inst.classes.iter().enumerate() {
        classes.insert(format!("C{}", i + 1), c.clone());
    }
    classes.insert("omega".to_string(), ToricClass::ample(inst.fan.clone()));
    let file = InstanceFile::from_parts(&inst.fan, &classes);
    emit(file.to_pretty_json(), out.as_ref(), 0)
}
