//! Command-line front end.
//!
//! Exit codes: 0 for a true verdict or a successful command, 1 for a false
//! verdict or a mathematical obstruction (no unique series, even hook, a
//! failed verification), 2 for malformed input.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::decomp::young_filtration;
use crate::error::Error;
use crate::hook::{hook_decompose, hook_ds_uniserial, hook_indecomposable, normalize_hook};
use crate::partition::{HookShape, TwoPartPartition};
use crate::render::{decomposition_diagrams, render_decomposition, render_series, Format, LatticeDiagram};
use crate::structure::{
    specht_factors, specht_uniserial, young_factors, young_series, young_uniserial, FactorMultiset,
};
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "spechtlab", version, about = "Uniserial 2-part Specht and Young modules and odd hook decompositions in characteristic 2")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "SPECHTLAB_FORMAT", default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassifyKind {
    Specht,
    Young,
    Hook,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FactorKind {
    Specht,
    Young,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderTarget {
    /// Composition series of a uniserial Young module `l1 l2`.
    Series,
    /// All summands of the odd hook `arm leg`.
    Hook,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanFilter {
    Partitions,
    SpechtUniserial,
    YoungUniserial,
    Hooks,
    HooksDsUniserial,
    HooksIndecomposable,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide uniseriality of S^λ or Y^λ, or whether S^(a,1^b) is a direct sum of uniserials.
    Classify {
        kind: ClassifyKind,
        /// `l1 l2` (or `arm leg`), or a single `l1,l2` / `a,1^b`.
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Decompose the odd hook Specht module S^(a,1^b) into Young modules.
    Decompose {
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Specht filtration of Y^λ, bottom to top.
    Filtration {
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Composition factors of S^λ or Y^λ.
    Factors {
        kind: FactorKind,
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Unique composition series of a uniserial Y^λ, socle first.
    Series {
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Draw submodule lattices.
    Render {
        target: RenderTarget,
        #[arg(num_args = 1..=2, required = true)]
        shape: Vec<String>,
    },
    /// Tabulate shapes up to a size: `scan [MAX_N] [FILTER]`.
    Scan {
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long, value_enum)]
        filter: Option<ScanFilter>,
        #[arg(value_name = "MAX_N|FILTER", num_args = 0..=2)]
        args: Vec<String>,
    },
    /// Run exhaustive cross-checks: `verify [SUITE] [BOUND]`.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(value_name = "SUITE|BOUND", num_args = 0..=2)]
        args: Vec<String>,
    },
}

/// A failure carrying the exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotUniserial | Error::EvenHook(_) | Error::SingularLabel => 1,
            _ => 2,
        };
        Self { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn parse_num(s: &str) -> std::result::Result<u64, Failure> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Failure::input(format!("not a non-negative decimal integer: {s:?}")));
    }
    s.parse().map_err(|_| Failure::input(format!("integer out of range: {s:?}")))
}

fn partition_arg(shape: &[String]) -> std::result::Result<TwoPartPartition, Failure> {
    match shape {
        [a, b] => Ok(TwoPartPartition::new(parse_num(a)?, parse_num(b)?)?),
        [s] => Ok(s.parse()?),
        _ => Err(Failure::input("expected `l1 l2` or `l1,l2`")),
    }
}

fn hook_arg(shape: &[String]) -> std::result::Result<HookShape, Failure> {
    match shape {
        [a, b] => Ok(HookShape::new(parse_num(a)?, parse_num(b)?)?),
        [s] => Ok(s.parse()?),
        _ => Err(Failure::input("expected `arm leg` or `a,1^b`")),
    }
}

fn meta(lam: TwoPartPartition) -> Value {
    json!({"alpha": lam.alpha(), "nu": lam.nu(), "L": lam.modulus_exponent()})
}

/// Serializes `value` and merges the `alpha`/`nu`/`L` metadata into it.
fn with_meta(value: impl Serialize, lam: TwoPartPartition) -> Value {
    let mut v = serde_json::to_value(value).expect("serializable report");
    let Value::Object(extra) = meta(lam) else { unreachable!() };
    match &mut v {
        Value::Object(map) => map.extend(extra),
        _ => {
            let mut map = extra;
            map.insert("value".into(), v);
            v = Value::Object(map);
        }
    }
    v
}

fn print_json(out: &mut dyn Write, v: &Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn quantities(lam: TwoPartPartition) -> String {
    format!("alpha={} nu={} L={}", lam.alpha(), lam.nu(), lam.modulus_exponent())
}

fn no_dot(format: Format) -> std::result::Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::input("dot output is only available for series, decompose and render"));
    }
    Ok(())
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn classify(kind: ClassifyKind, shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    no_dot(format)?;
    // every failure to produce a verdict is an input error here
    let input = |f: Failure| Failure { code: 2, ..f };
    let (verdict, shape_text, lam, clause, extra) = match kind {
        ClassifyKind::Specht => {
            let lam = partition_arg(shape)?;
            let v = specht_uniserial(lam);
            (v.uniserial, lam.to_string(), lam, v.case_tag.to_string(), Value::Null)
        }
        ClassifyKind::Young => {
            let lam = partition_arg(shape)?;
            let v = young_uniserial(lam);
            let clause = if v { "alpha + 2^nu ≡ 0 mod 2^L" } else { "alpha + 2^nu ≢ 0 mod 2^L" };
            (v, lam.to_string(), lam, clause.to_string(), Value::Null)
        }
        ClassifyKind::Hook => {
            let h = hook_arg(shape)?;
            let lam = normalize_hook(h).map_err(|e| input(e.into()))?;
            let v = hook_ds_uniserial(h).map_err(|e| input(e.into()))?;
            let clause = if !v.congruence {
                "alpha + 2^nu ≢ 0 mod 2^L".to_string()
            } else if !v.bound_known {
                format!("alpha + 2^nu ≡ 0 mod 2^L; no tabulated bound for nu={}", v.nu)
            } else if v.ds_uniserial {
                format!("alpha + 2^nu ≡ 0 mod 2^L and lam2 <= {} (nu={})", v.bound, v.nu)
            } else {
                format!("nu={} bound {} violated (lam2={})", v.nu, v.bound, lam.lam2())
            };
            (v.ds_uniserial, format!("{h} ~ {lam}"), lam, clause, serde_json::to_value(v).unwrap())
        }
    };
    let kind_name = kind.to_possible_value().expect("named").get_name().to_string();
    match format {
        Format::Json => {
            let mut v = meta(lam);
            v["kind"] = json!(kind_name);
            v["shape"] = json!(shape_text);
            v["verdict"] = json!(verdict);
            v["clause"] = json!(clause);
            if !extra.is_null() {
                v["hook_verdict"] = extra;
            }
            print_json(out, &v);
        }
        _ => {
            let word = match (kind, verdict) {
                (ClassifyKind::Hook, true) => "direct sum of uniserial summands",
                (ClassifyKind::Hook, false) => "not a direct sum of uniserial summands",
                (_, true) => "uniserial",
                (_, false) => "not uniserial",
            };
            let _ = writeln!(out, "{kind_name} {shape_text}: {verdict} ({word})");
            let _ = writeln!(out, "{}", quantities(lam));
            let _ = writeln!(out, "clause: {clause}");
        }
    }
    Ok(if verdict { 0 } else { 1 })
}

fn decompose(shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    let h = hook_arg(shape)?;
    let dec = hook_decompose(h)?;
    match format {
        Format::Json => {
            let mut v = with_meta(&dec, dec.base);
            v["diagrams"] = serde_json::to_value(decomposition_diagrams(&dec)?).unwrap();
            print_json(out, &v);
        }
        Format::Dot => {
            let _ = write!(out, "{}", render_decomposition(&dec, Format::Dot)?);
        }
        Format::Text => {
            let _ = writeln!(out, "S^{h} ~ Y-label {}: {}", dec.base, quantities(dec.base));
            let _ = writeln!(out, "{} summands", dec.summands.len());
            for (s, d) in dec.summands.iter().zip(decomposition_diagrams(&dec)?) {
                let status = if s.uniserial {
                    format!("uniserial [{}]", join(d.labels()))
                } else {
                    format!("non-uniserial, {} factors", young_factors(s.label).total())
                };
                let _ = writeln!(out, "delta={} Y^{} {status}", s.delta, s.label);
            }
        }
    }
    Ok(0)
}

fn filtration(shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    no_dot(format)?;
    let lam = partition_arg(shape)?;
    let f = young_filtration(lam);
    match format {
        Format::Json => print_json(out, &with_meta(&f, lam)),
        _ => {
            let _ = writeln!(out, "Y^{lam}: {}", quantities(lam));
            let _ = writeln!(out, "layers (bottom to top): {}", join(f.layers().map(|l| format!("S^{l}"))));
            let _ = writeln!(out, "shifts: {}", join(&f.shifts));
        }
    }
    Ok(0)
}

fn factor_report(m: &FactorMultiset) -> Value {
    json!({
        "base": m.base,
        "entries": m.iter().map(|(e, k)| json!({"shift": e, "multiplicity": k})).collect::<Vec<_>>(),
        "total": m.total(),
    })
}

fn factors(kind: FactorKind, shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    no_dot(format)?;
    let lam = partition_arg(shape)?;
    let (m, name) = match kind {
        FactorKind::Specht => (specht_factors(lam), "S"),
        FactorKind::Young => (young_factors(lam), "Y"),
    };
    match format {
        Format::Json => print_json(out, &with_meta(factor_report(&m), lam)),
        _ => {
            let _ = writeln!(out, "{name}^{lam}: {} ({} factors)", quantities(lam), m.total());
            for (e, k) in m.iter() {
                let label = lam.shift(e).expect("factor shift within lam2");
                let _ = writeln!(out, "shift {e}: D^{label} x{k}");
            }
        }
    }
    Ok(0)
}

fn series(shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    let lam = partition_arg(shape)?;
    let s = young_series(lam)?;
    match format {
        Format::Json => {
            let mut v = with_meta(LatticeDiagram::from_series(&s, 0)?, lam);
            v["series"] = serde_json::to_value(&s).unwrap();
            print_json(out, &v);
        }
        Format::Dot => {
            let _ = write!(out, "{}", render_series(&s, 0, Format::Dot)?);
        }
        Format::Text => {
            let _ = writeln!(out, "Y^{lam}: {}", quantities(lam));
            let _ = writeln!(out, "socle to head: {}", join(&s.labels));
            let _ = writeln!(out, "shifts: {}", join(s.shifts()));
        }
    }
    Ok(0)
}

fn render(target: RenderTarget, shape: &[String], format: Format, out: &mut dyn Write) -> CmdResult {
    match target {
        RenderTarget::Series => {
            let lam = partition_arg(shape)?;
            let s = young_series(lam)?;
            match format {
                Format::Json => print_json(out, &with_meta(LatticeDiagram::from_series(&s, 0)?, lam)),
                f => {
                    let _ = write!(out, "{}", render_series(&s, 0, f)?);
                }
            }
        }
        RenderTarget::Hook => {
            let dec = hook_decompose(hook_arg(shape)?)?;
            match format {
                Format::Json => {
                    let mut v = meta(dec.base);
                    v["diagrams"] = serde_json::to_value(decomposition_diagrams(&dec)?).unwrap();
                    print_json(out, &v);
                }
                f => {
                    let _ = write!(out, "{}", render_decomposition(&dec, f)?);
                }
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct PartitionRow {
    n: u64,
    lam1: u64,
    lam2: u64,
    alpha: u64,
    nu: u32,
    #[serde(rename = "L")]
    l: u32,
    specht_uniserial: bool,
    young_uniserial: bool,
}

#[derive(Serialize)]
struct HookRow {
    n: u64,
    arm: u64,
    leg: u64,
    alpha: u64,
    nu: u32,
    #[serde(rename = "L")]
    l: u32,
    ds_uniserial: bool,
    indecomposable: bool,
    summands: usize,
}

fn scan(max_n: u64, filter: ScanFilter, format: Format, out: &mut dyn Write) -> CmdResult {
    no_dot(format)?;
    if max_n < 3 {
        return Err(Failure::input("scan requires max-n >= 3"));
    }
    let hooks = matches!(filter, ScanFilter::Hooks | ScanFilter::HooksDsUniserial | ScanFilter::HooksIndecomposable);
    let mut rows: Vec<Value> = Vec::new();
    let mut lines: Vec<String> = Vec::new();
    if hooks {
        lines.push("n arm leg alpha nu L ds_uniserial indecomposable summands".into());
        for n in (1..=max_n).filter(|n| n % 2 == 1) {
            for leg in 0..=(n - 1) / 2 {
                let h = HookShape::new(n - leg, leg)?;
                let lam = normalize_hook(h)?;
                let row = HookRow {
                    n,
                    arm: h.arm(),
                    leg,
                    alpha: lam.alpha(),
                    nu: lam.nu(),
                    l: lam.modulus_exponent(),
                    ds_uniserial: hook_ds_uniserial(h)?.ds_uniserial,
                    indecomposable: hook_indecomposable(h)?,
                    summands: hook_decompose(h)?.summands.len(),
                };
                let keep = match filter {
                    ScanFilter::HooksDsUniserial => row.ds_uniserial,
                    ScanFilter::HooksIndecomposable => row.indecomposable,
                    _ => true,
                };
                if keep {
                    lines.push(format!(
                        "{} {} {} {} {} {} {} {} {}",
                        row.n, row.arm, row.leg, row.alpha, row.nu, row.l, row.ds_uniserial,
                        row.indecomposable, row.summands
                    ));
                    rows.push(serde_json::to_value(row).unwrap());
                }
            }
        }
    } else {
        lines.push("n lam1 lam2 alpha nu L specht_uniserial young_uniserial".into());
        for n in 0..=max_n {
            for lam in TwoPartPartition::all_of_size(n) {
                let row = PartitionRow {
                    n,
                    lam1: lam.lam1(),
                    lam2: lam.lam2(),
                    alpha: lam.alpha(),
                    nu: lam.nu(),
                    l: lam.modulus_exponent(),
                    specht_uniserial: specht_uniserial(lam).uniserial,
                    young_uniserial: young_uniserial(lam),
                };
                let keep = match filter {
                    ScanFilter::SpechtUniserial => row.specht_uniserial,
                    ScanFilter::YoungUniserial => row.young_uniserial,
                    _ => true,
                };
                if keep {
                    lines.push(format!(
                        "{} {} {} {} {} {} {} {}",
                        row.n, row.lam1, row.lam2, row.alpha, row.nu, row.l, row.specht_uniserial,
                        row.young_uniserial
                    ));
                    rows.push(serde_json::to_value(row).unwrap());
                }
            }
        }
    }
    match format {
        Format::Json => print_json(out, &Value::Array(rows)),
        _ => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
        }
    }
    Ok(0)
}

fn run_verify(suite: Suite, bound: u64, format: Format, out: &mut dyn Write) -> CmdResult {
    no_dot(format)?;
    let reports = verify::run(suite, bound);
    let ok = reports.iter().all(|r| r.passed());
    match format {
        Format::Json => print_json(out, &serde_json::to_value(&reports).unwrap()),
        _ => {
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

/// Splits free positional tokens into at most one number and one named value.
fn split_args<T: ValueEnum>(args: &[String], what: &str) -> std::result::Result<(Option<u64>, Option<T>), Failure> {
    let mut num = None;
    let mut named = None;
    for a in args {
        if a.bytes().all(|b| b.is_ascii_digit()) && !a.is_empty() {
            if num.replace(parse_num(a)?).is_some() {
                return Err(Failure::input(format!("more than one number given for {what}")));
            }
        } else {
            let v = T::from_str(a, false).map_err(|_| Failure::input(format!("unknown {what}: {a}")))?;
            if named.replace(v).is_some() {
                return Err(Failure::input(format!("more than one {what} given")));
            }
        }
    }
    Ok((num, named))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let format = cli.format;
    match cli.command {
        Command::Classify { kind, shape } => classify(kind, &shape, format, out),
        Command::Decompose { shape } => decompose(&shape, format, out),
        Command::Filtration { shape } => filtration(&shape, format, out),
        Command::Factors { kind, shape } => factors(kind, &shape, format, out),
        Command::Series { shape } => series(&shape, format, out),
        Command::Render { target, shape } => render(target, &shape, format, out),
        Command::Scan { max_n, filter, args } => {
            let (n, f) = split_args::<ScanFilter>(&args, "scan filter")?;
            let max_n = max_n.or(n).unwrap_or(400);
            scan(max_n, filter.or(f).unwrap_or(ScanFilter::Partitions), format, out)
        }
        Command::Verify { suite, bound, args } => {
            let (n, s) = split_args::<Suite>(&args, "suite")?;
            let suite = suite.or(s).unwrap_or(Suite::All);
            run_verify(suite, bound.or(n).unwrap_or(suite.default_bound()), format, out)
        }
    }
}

/// Runs one parsed invocation and returns its exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() { 2 } else { 0 }
        }
    }
}
