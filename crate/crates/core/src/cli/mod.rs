//! Command-line front end: `bbw`, `koszul`, `chern`, `fm` and `verify`.
//!
//! Exit codes: 0 on success, 1 when a computation fails or a verify suite has
//! a failing check, 2 on a usage or syntax error.

mod parse;
mod verify;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bbw::{cohomology, make_bundle, CohomologyTable, HomogBundle};
use crate::error::{Error, Result};
use crate::intersect::{
    eta_square_solve, gamma_square_solve, tautological_ch, universal_ch, ChernData, CohClass,
    ExtraSquare, Geometry, Space, UniversalBundle, Q,
};
use crate::mukai::{gram, kernel, named_class, point, transform, GramReport, KernelName};
use crate::sections::{section_cohomology, SectionResult};

pub use parse::parse_bundle_expr;
pub use verify::{verify_suite, Check, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "v12", version, about = "Exact cohomology and Chern class computations on the spinor tenfold and its linear sections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChernTarget {
    #[value(name = "E1")]
    E1,
    #[value(name = "E2")]
    E2,
    #[value(name = "U-plus")]
    UPlus,
    #[value(name = "eta2")]
    Eta2,
    #[value(name = "gamma2")]
    Gamma2,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cohomology of a homogeneous bundle on the spinor tenfold.
    Bbw {
        #[arg(long)]
        bundle: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Cohomology of a homogeneous bundle restricted to a linear section.
    Koszul {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=9))]
        codim: u32,
        #[arg(long)]
        bundle: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Chern data of the universal bundles.
    Chern {
        #[arg(long, value_enum)]
        target: ChernTarget,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Numerical Fourier-Mukai transforms and Euler pairing matrices.
    Fm {
        #[arg(long, requires = "apply", conflicts_with = "gram")]
        kernel: Option<String>,
        /// A named class or a JSON map of basis coefficients on the source.
        #[arg(long, requires = "kernel")]
        apply: Option<String>,
        /// Comma-separated collection; `u`, `o` and `phi1` are shorthands.
        #[arg(long, required_unless_present = "kernel")]
        gram: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Replays a suite of checks.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Output of one subcommand, before formatting.
struct Rendered {
    json: Value,
    table: String,
    ok: bool,
}

impl Rendered {
    fn ok(json: Value, table: String) -> Self {
        Rendered { json, table, ok: true }
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownName(_)
            | Error::MalformedClass(_)
            | Error::MalformedWeight(_)
            | Error::CodimOutOfRange(_)
    )
}

/// Runs the CLI on `argv` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let format = match &cli.command {
        Command::Bbw { format, .. }
        | Command::Koszul { format, .. }
        | Command::Chern { format, .. }
        | Command::Fm { format, .. }
        | Command::Verify { format, .. } => *format,
    };
    match dispatch(&cli.command) {
        Ok(r) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&r.json).expect("JSON values serialize"),
                Format::Table => r.table,
            };
            let _ = writeln!(out, "{text}");
            if r.ok {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if is_usage_error(&e) {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            }
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Bbw { bundle, twist, .. } => {
            let b = bundle_arg(bundle, *twist)?;
            let t = cohomology(&b);
            Ok(Rendered::ok(
                json!({ "bundle": b.to_string(), "h": table_json(&t), "euler": t.euler() }),
                t.to_string(),
            ))
        }
        Command::Koszul { codim, bundle, twist, .. } => {
            let b = bundle_arg(bundle, *twist)?;
            let r = section_cohomology(&b, *codim)?;
            Ok(Rendered::ok(section_json(&r), section_table(&r)))
        }
        Command::Chern { target, .. } => chern(*target),
        Command::Fm { kernel: Some(k), apply: Some(a), .. } => fm_apply(k, a),
        Command::Fm { gram: Some(g), .. } => fm_gram(g),
        Command::Fm { .. } => Err(Error::UnknownName("fm needs --kernel/--apply or --gram".into())),
        Command::Verify { suite, .. } => {
            let report = verify_suite(suite.parse()?);
            Ok(Rendered {
                json: serde_json::to_value(&report).expect("report serializes"),
                table: report.to_string(),
                ok: report.pass,
            })
        }
    }
}

fn bundle_arg(text: &str, twist: i64) -> Result<HomogBundle> {
    Ok(make_bundle(&parse_bundle_expr(text)?)?.twist(twist))
}

pub fn table_json(t: &CohomologyTable) -> Value {
    Value::Object(t.iter().map(|(d, n)| (d.to_string(), json!(n))).collect())
}

pub fn section_json(r: &SectionResult) -> Value {
    let mut v = json!({
        "status": r.status.as_str(),
        "h": table_json(&r.table),
        "euler": r.euler,
    });
    if !r.is_exact() {
        v["lower"] = table_json(&r.lower);
    }
    v
}

fn section_table(r: &SectionResult) -> String {
    if r.is_exact() {
        r.table.to_string()
    } else {
        format!("{} (euler_only, lower {}, euler {})", r.table, r.lower, r.euler)
    }
}

fn rational(v: Q) -> Value {
    Value::String(v.to_string())
}

/// Nonzero coefficients keyed by basis name, as "p/q" strings.
pub fn class_json(c: &CohClass) -> Value {
    Value::Object(
        c.to_map()
            .into_iter()
            .filter(|(_, v)| *v != Q::from_integer(0))
            .map(|(k, v)| (k, rational(v)))
            .collect(),
    )
}

fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Q::from_integer)
            .ok_or_else(|| Error::MalformedClass(format!("coefficient {n} is not an integer"))),
        Value::String(s) => {
            let parsed = match s.split_once('/') {
                Some((p, d)) => p.trim().parse::<i64>().ok().zip(d.trim().parse::<i64>().ok()),
                None => s.trim().parse::<i64>().ok().map(|p| (p, 1)),
            };
            match parsed {
                Some((_, 0)) | None => Err(Error::MalformedClass(format!("bad rational `{s}`"))),
                Some((p, d)) => Ok(Q::new(p, d)),
            }
        }
        other => Err(Error::MalformedClass(format!("coefficient {other} is not a rational"))),
    }
}

/// Parses a `{"basis": coeff}` map on the given space.
pub fn class_from_json(geom: &Geometry, space: Space, text: &str) -> Result<CohClass> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::MalformedClass(e.to_string()))?;
    let Value::Object(obj) = v else {
        return Err(Error::MalformedClass("expected a JSON object".into()));
    };
    let map = obj
        .iter()
        .map(|(k, v)| Ok((k.clone(), parse_rational(v)?)))
        .collect::<Result<BTreeMap<String, Q>>>()?;
    CohClass::from_map(geom.model(space), &map)
}

fn bundle_json(u: &UniversalBundle) -> Value {
    let coefficients: Map<String, Value> = u
        .coefficients
        .iter()
        .map(|(k, v)| (k.clone(), rational(*v)))
        .collect();
    json!({
        "space": u.product.name(),
        "rank": rational(u.chern.rank()),
        "c1": class_json(&u.c1),
        "c2": class_json(&u.c2),
        "ch3": class_json(&u.ch3),
        "ch": class_json(u.chern.ch()),
        "coefficients": coefficients,
    })
}

fn square_json(s: &ExtraSquare) -> Value {
    json!({
        "space": s.product.name(),
        "value": rational(s.value),
        "euler_target": rational(s.euler_target),
        "euler_constant": rational(s.euler_constant),
        "euler_slope": rational(s.euler_slope),
        "positive": s.is_positive(),
    })
}

fn chern(target: ChernTarget) -> Result<Rendered> {
    let geom = Geometry::standard();
    match target {
        ChernTarget::E1 | ChernTarget::E2 => {
            let space = if target == ChernTarget::E1 { Space::XxC } else { Space::SxSDual };
            let u = universal_ch(geom, space)?;
            let table = format!(
                "space {}\nc1  = {}\nc2  = {}\nch3 = {}\nch  = {}",
                geom.model(space).describe(),
                u.c1,
                u.c2,
                u.ch3,
                u.chern.ch()
            );
            Ok(Rendered::ok(bundle_json(&u), table))
        }
        ChernTarget::UPlus => {
            let u = tautological_ch(geom, Space::X)?;
            let json = json!({
                "space": Space::X.name(),
                "rank": rational(u.rank()),
                "c1": class_json(&u.c(1)),
                "c2": class_json(&u.c(2)),
                "c3": class_json(&u.c(3)),
                "ch": class_json(u.ch()),
            });
            let table = format!("ch = {}\nc1 = {}\nc2 = {}\nc3 = {}", u.ch(), u.c(1), u.c(2), u.c(3));
            Ok(Rendered::ok(json, table))
        }
        ChernTarget::Eta2 | ChernTarget::Gamma2 => {
            let (name, s) = if target == ChernTarget::Eta2 {
                ("eta", eta_square_solve()?)
            } else {
                ("gamma", gamma_square_solve()?)
            };
            let table = format!(
                "{name}^2 = {}\nchi(E, E) = {} + {} {name}^2 = {}",
                s.value, s.euler_constant, s.euler_slope, s.euler_target
            );
            Ok(Rendered::ok(square_json(&s), table))
        }
    }
}

fn fm_apply(kernel_name: &str, class_text: &str) -> Result<Rendered> {
    let geom = Geometry::standard();
    let k = kernel(geom, kernel_name.parse::<KernelName>()?)?;
    let input = match class_text.trim() {
        t if t.starts_with('{') => ChernData::new(class_from_json(geom, k.source, t)?),
        "pt" => point(geom, k.source)?,
        "1" => ChernData::new(geom.one(k.source)),
        name => named_class(geom, name)?,
    };
    let out = transform(geom, &k, &input)?;
    let json = json!({
        "kernel": kernel_name,
        "source": k.source.name(),
        "target": k.target.name(),
        "input": class_json(input.ch()),
        "output": class_json(out.ch()),
        "rank": rational(out.rank()),
    });
    let table = format!("{kernel_name}({}) = {}", input.ch(), out.ch());
    Ok(Rendered::ok(json, table))
}

/// Expands the `--gram` list into labelled classes and their block sizes.
fn gram_collection(geom: &Geometry, spec: &str) -> Result<(Vec<(String, ChernData)>, Vec<usize>)> {
    let mut classes = Vec::new();
    let mut blocks = Vec::new();
    for item in spec.split(',').map(str::trim) {
        let names: &[&str] = match item {
            "u" | "U" => &["U"],
            "o" | "O" => &["O"],
            "phi1" => &["phi1(1)", "phi1(pt)"],
            other => &[other][..],
        };
        for n in names {
            classes.push((n.to_string(), named_class(geom, n)?));
        }
        blocks.push(names.len());
    }
    Ok((classes, blocks))
}

fn gram_json(r: &GramReport, blocks: &[usize]) -> Value {
    json!({
        "labels": r.labels,
        "matrix": r.matrix.iter().map(|row| row.iter().map(|v| rational(*v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "exceptional": (0..r.labels.len()).map(|i| r.is_exceptional(i)).collect::<Vec<_>>(),
        "block_upper_triangular": r.is_block_upper_triangular(blocks),
        "rank": r.rank(),
    })
}

fn fm_gram(spec: &str) -> Result<Rendered> {
    let geom = Geometry::standard();
    let (classes, blocks) = gram_collection(geom, spec)?;
    let r = gram(geom, &classes)?;
    let width = r.labels.iter().map(String::len).max().unwrap_or(0).max(4);
    let mut table = format!("{:width$}", "");
    for l in &r.labels {
        table += &format!(" {l:>width$}");
    }
    for (l, row) in r.labels.iter().zip(&r.matrix) {
        table += &format!("\n{l:width$}");
        for v in row {
            table += &format!(" {:>width$}", v.to_string());
        }
    }
    table += &format!(
        "\nblock upper triangular: {}\nrank: {}",
        r.is_block_upper_triangular(&blocks),
        r.rank()
    );
    Ok(Rendered::ok(gram_json(&r, &blocks), table))
}
