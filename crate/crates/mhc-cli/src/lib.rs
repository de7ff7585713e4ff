//! Command-line front end for the exact cohomology engine: group and
//! character parsing, computation dispatch, JSON/CSV emission, and result
//! caching.
//!
//! Output is canonical JSON (objects serialized with sorted keys), so a
//! given invocation is byte-stable across runs and across cache hits and
//! misses. CSV is a lossy tabular projection of the same data.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use mhc_core::cochain::hochschild_cohomology;
use mhc_core::cocyclic::{cyclic_cohomology, verify_cocyclic_identities, CocyclicError};
use mhc_core::crossed::{classify_grouplike, classify_mpi, CrossedAlgebra};
use mhc_core::group::characters;
use mhc_core::mha::{verify_structure, FunctionAlgebra};
use mhc_core::modpair::ModularPair;
use mhc_core::zline::{hh1_z_dim, tau2_escape_check, ZFunction, DEFAULT_WINDOW};
use mhc_core::{Character, CycloField, CycloScalar, GroupTable};

const CACHE_SCHEMA_VERSION: &str = "1.0.0";

#[derive(Parser)]
#[command(
    name = "mhc",
    version,
    about = "Exact Hochschild and cyclic cohomology computations for function algebras over finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Cache directory; results are stored and reused keyed by a canonical
    /// hash of the request.
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Verb {
    /// Run the structural checks for a group's function algebra, optionally
    /// followed by the cocyclic identity suite up to a degree
    Verify {
        #[arg(long)]
        group: String,
        /// Twisting character for the identity suite: `trivial` or
        /// `char:k1,k2,...` (exponents on the canonical generators)
        #[arg(long, default_value = "trivial")]
        sigma: String,
        /// Also check the cocyclic identities for degrees 0..=MAX
        #[arg(long, value_name = "MAX")]
        max_degree: Option<usize>,
    },
    /// List the linear characters of a group
    Characters {
        #[arg(long)]
        group: String,
    },
    /// Classify modular pairs in involution over a group
    Mpi {
        #[arg(long)]
        group: String,
    },
    /// Twisted Hochschild cohomology dimensions in one degree
    Hochschild {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        sigma: String,
        #[arg(long)]
        degree: usize,
    },
    /// Cohomology of the cyclic subcomplex in one degree
    Cyclic {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        sigma: String,
        #[arg(long)]
        degree: usize,
    },
    /// Degree-one cohomology over the integer line, or an escape check for
    /// a two-variable profile
    Zline {
        /// Twisting scalar: `p`, `p/q`, or `zeta:N:k`
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: i64,
        /// Profile to test against the cyclic-image model:
        /// `step`, `step:<threshold>`, `finite:<json map>`, or `geom:a,b`
        #[arg(long)]
        q: Option<String>,
    },
    /// Classify group-like elements or modular pairs on the mod-N crossed
    /// product
    Crossed {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_enum)]
        classify: ClassifyKind,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassifyKind {
    Grouplike,
    Mpi,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed request; exit code 2.
    Usage(String),
    /// The request exceeds a capacity bound; exit code 1.
    Capacity(String),
    /// Any other runtime failure; exit code 1.
    Runtime(String),
}

impl From<mhc_core::group::GroupError> for CliError {
    fn from(e: mhc_core::group::GroupError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<mhc_core::cochain::CochainError> for CliError {
    fn from(e: mhc_core::cochain::CochainError) -> Self {
        CliError::Capacity(e.to_string())
    }
}

impl From<CocyclicError> for CliError {
    fn from(e: CocyclicError) -> Self {
        match e {
            CocyclicError::Capacity(inner) => CliError::Capacity(inner.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<mhc_core::zline::ZLineError> for CliError {
    fn from(e: mhc_core::zline::ZLineError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<mhc_core::crossed::CrossedError> for CliError {
    fn from(e: mhc_core::crossed::CrossedError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parse arguments (including the program name), run the request, print
/// the result to stdout, and return the process exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{text}").and_then(|_| out.flush()) {
                Ok(()) => 0,
                // A closed pipe (e.g. piping into `head`) is not a failure.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
                Err(e) => {
                    eprintln!("mhc: {e}");
                    1
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("mhc: {msg}");
            2
        }
        Err(CliError::Capacity(msg)) | Err(CliError::Runtime(msg)) => {
            eprintln!("mhc: {msg}");
            1
        }
    }
}

/// Run one parsed request and return the formatted output.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let input = canonical_input(&cli.verb)?;
    let cached = cache_get(cli.cache.as_deref(), &input);
    let output = match cached {
        Some(v) => v,
        None => {
            let v = compute_output(&cli.verb)?;
            if let Some(dir) = cli.cache.as_deref() {
                if let Err(msg) = cache_put(dir, &input, &v) {
                    eprintln!("mhc: warning: cache write failed: {msg}");
                }
            }
            v
        }
    };
    Ok(match cli.format {
        Format::Json => serde_json::to_string(&output)
            .map_err(|e| CliError::Runtime(e.to_string()))?,
        Format::Csv => to_csv(&output),
    })
}

/// The canonical JSON key for a request: every parameter that affects the
/// computed result, with specs validated and normalized. Excludes the
/// output format and cache location.
fn canonical_input(verb: &Verb) -> Result<Value, CliError> {
    Ok(match verb {
        Verb::Verify {
            group,
            sigma,
            max_degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            json!({
                "group": group.trim(),
                "max_degree": max_degree,
                "sigma": s.generator_exponents(),
                "verb": "verify",
            })
        }
        Verb::Characters { group } => {
            parse_group(group)?;
            json!({ "group": group.trim(), "verb": "characters" })
        }
        Verb::Mpi { group } => {
            parse_group(group)?;
            json!({ "group": group.trim(), "verb": "mpi" })
        }
        Verb::Hochschild {
            group,
            sigma,
            degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            json!({
                "degree": degree,
                "group": group.trim(),
                "sigma": s.generator_exponents(),
                "verb": "hochschild",
            })
        }
        Verb::Cyclic {
            group,
            sigma,
            degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            json!({
                "degree": degree,
                "group": group.trim(),
                "sigma": s.generator_exponents(),
                "verb": "cyclic",
            })
        }
        Verb::Zline { lambda, window, q } => {
            let (field, l) = parse_lambda(lambda)?;
            let q_canonical = match q {
                None => Value::Null,
                Some(spec) => parse_q(spec, &field, &l)?.1,
            };
            json!({
                "lambda": scalar_json(&l),
                "q": q_canonical,
                "verb": "zline",
                "window": window,
            })
        }
        Verb::Crossed { n, classify } => json!({
            "classify": match classify {
                ClassifyKind::Grouplike => "grouplike",
                ClassifyKind::Mpi => "mpi",
            },
            "modulus": n,
            "verb": "crossed",
        }),
    })
}

fn compute_output(verb: &Verb) -> Result<Value, CliError> {
    Ok(match verb {
        Verb::Verify {
            group,
            sigma,
            max_degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            let ctx = FunctionAlgebra::new(&g);
            let mut rows = Vec::new();
            for check in verify_structure(&ctx) {
                let mut row = Map::new();
                row.insert("check".into(), json!(check.name));
                row.insert("pass".into(), json!(check.pass));
                if let Some(detail) = &check.detail {
                    row.insert("detail".into(), json!(detail));
                }
                rows.push(Value::Object(row));
            }
            if let Some(max_degree) = max_degree {
                for degree in 0..=*max_degree {
                    for report in verify_cocyclic_identities(&s, degree)? {
                        let mut row = Map::new();
                        row.insert(
                            "check".into(),
                            json!(format!("{}@degree{}", report.identity, degree)),
                        );
                        row.insert("pass".into(), json!(report.pass));
                        if let Some(detail) = &report.counterexample {
                            row.insert("detail".into(), json!(detail));
                        }
                        rows.push(Value::Object(row));
                    }
                }
            }
            Value::Array(rows)
        }
        Verb::Characters { group } => {
            let g = parse_group(group)?;
            Value::Array(
                characters(&g)
                    .iter()
                    .map(|c| {
                        json!({
                            "sigma": c.generator_exponents(),
                            "trivial": c.is_trivial(),
                        })
                    })
                    .collect(),
            )
        }
        Verb::Mpi { group } => {
            let g = parse_group(group)?;
            let ctx = FunctionAlgebra::new(&g);
            let chars = characters(&g);
            let mut rows = Vec::new();
            for point in 0..g.order() {
                for sigma in &chars {
                    let pair = ModularPair::new(&ctx, point, sigma.clone());
                    rows.push(json!({
                        "g": g.name(point),
                        "mpi": pair.is_involutive(),
                        "sigma": sigma.generator_exponents(),
                    }));
                }
            }
            Value::Array(rows)
        }
        Verb::Hochschild {
            group,
            sigma,
            degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            let r = hochschild_cohomology(&s, *degree)?;
            json!({
                "degree": r.degree,
                "dim": r.dim,
                "dim_image_prev": r.dim_image_prev,
                "dim_kernel": r.dim_kernel,
            })
        }
        Verb::Cyclic {
            group,
            sigma,
            degree,
        } => {
            let g = parse_group(group)?;
            let s = parse_sigma(&g, sigma)?;
            let r = cyclic_cohomology(&s, *degree)?;
            json!({
                "degree": r.degree,
                "dim": r.dim,
                "dim_cyclic": r.dim_cyclic,
                "dim_image_prev": r.dim_image_prev,
                "dim_kernel": r.dim_kernel,
            })
        }
        Verb::Zline { lambda, window, q } => {
            let (field, l) = parse_lambda(lambda)?;
            match q {
                None => {
                    let dim = hh1_z_dim(&l, *window)?;
                    json!({
                        "hh1_dim": dim,
                        "lambda": scalar_json(&l),
                        "window": window,
                    })
                }
                Some(spec) => {
                    let (profile, q_canonical) = parse_q(spec, &field, &l)?;
                    let report = tau2_escape_check(&profile, &l, *window)?;
                    json!({
                        "escapes": report.escapes,
                        "lambda": scalar_json(&l),
                        "q": q_canonical,
                        "residual_size": report.residual_size,
                        "threshold": report.threshold,
                        "window": window,
                        "witness_support": report.witness_support,
                    })
                }
            }
        }
        Verb::Crossed { n, classify } => {
            let algebra = CrossedAlgebra::new(*n)?;
            match classify {
                ClassifyKind::Grouplike => Value::Array(
                    classify_grouplike(&algebra)
                        .iter()
                        .map(|r| {
                            json!({
                                "f": r.f_exponents.map(|(a, b)| vec![a, b]),
                                "grouplike": r.grouplike,
                                "h": r.h_exponents.map(|(a, b)| vec![a, b]),
                            })
                        })
                        .collect(),
                ),
                ClassifyKind::Mpi => Value::Array(
                    classify_mpi(&algebra)
                        .iter()
                        .map(|r| {
                            json!({
                                "base_point": r.base_point,
                                "eps": r.eps,
                                "exponents": [r.exponents.0, r.exponents.1],
                                "mpi": r.mpi,
                            })
                        })
                        .collect(),
                ),
            }
        }
    })
}

fn parse_group(spec: &str) -> Result<Arc<GroupTable>, CliError> {
    Ok(GroupTable::named(spec)?)
}

fn parse_sigma(group: &Arc<GroupTable>, spec: &str) -> Result<Character, CliError> {
    let spec = spec.trim();
    if spec == "trivial" {
        return Ok(Character::trivial(group));
    }
    let Some(list) = spec.strip_prefix("char:") else {
        return Err(CliError::Usage(format!(
            "bad sigma spec '{spec}': expected 'trivial' or 'char:k1,k2,...'"
        )));
    };
    let mut exps = Vec::new();
    for part in list.split(',') {
        let k: u32 = part.trim().parse().map_err(|_| {
            CliError::Usage(format!("bad sigma exponent '{part}': expected an integer"))
        })?;
        exps.push(k);
    }
    Ok(Character::from_generator_exponents(group, &exps)?)
}

/// `p`, `p/q`, or `zeta:N:k`. Returns the ambient field along with the
/// scalar.
fn parse_lambda(spec: &str) -> Result<(Arc<CycloField>, CycloScalar), CliError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("zeta:") {
        let mut parts = rest.split(':');
        let order: u32 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                CliError::Usage(format!("bad lambda spec '{spec}': expected zeta:N:k"))
            })?;
        let power: i64 = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                CliError::Usage(format!("bad lambda spec '{spec}': expected zeta:N:k"))
            })?;
        if parts.next().is_some() {
            return Err(CliError::Usage(format!(
                "bad lambda spec '{spec}': expected zeta:N:k"
            )));
        }
        let field = CycloField::new(order);
        let value = field.root_power(power);
        return Ok((field, value));
    }
    let field = CycloField::new(1);
    let value = parse_rational(spec, &field)?;
    Ok((field, value))
}

/// `p` or `p/q` over a given field.
fn parse_rational(spec: &str, field: &Arc<CycloField>) -> Result<CycloScalar, CliError> {
    let spec = spec.trim();
    let bad = || CliError::Usage(format!("bad rational '{spec}': expected p or p/q"));
    let (num, den) = match spec.split_once('/') {
        None => (spec, "1"),
        Some((n, d)) => (n, d),
    };
    let num: i64 = num.trim().parse().map_err(|_| bad())?;
    let den: i64 = den.trim().parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(CliError::Usage(format!("bad rational '{spec}': zero denominator")));
    }
    Ok(&field.from_integer(num) / &field.from_integer(den))
}

/// Parse a profile spec into the profile itself and its canonical JSON
/// form (used in the cache key and echoed in the report).
fn parse_q(
    spec: &str,
    field: &Arc<CycloField>,
    lambda: &CycloScalar,
) -> Result<(ZFunction, Value), CliError> {
    let spec = spec.trim();
    if spec == "step" {
        return Ok((
            ZFunction::Step { threshold: 0 },
            json!({ "kind": "step", "threshold": 0 }),
        ));
    }
    if let Some(t) = spec.strip_prefix("step:") {
        let threshold: i64 = t.trim().parse().map_err(|_| {
            CliError::Usage(format!("bad profile '{spec}': expected step:<integer>"))
        })?;
        return Ok((
            ZFunction::Step { threshold },
            json!({ "kind": "step", "threshold": threshold }),
        ));
    }
    if let Some(body) = spec.strip_prefix("finite:") {
        let raw: Value = serde_json::from_str(body).map_err(|e| {
            CliError::Usage(format!("bad profile '{spec}': {e}"))
        })?;
        let Value::Object(entries) = raw else {
            return Err(CliError::Usage(format!(
                "bad profile '{spec}': expected a JSON object mapping integers to rationals"
            )));
        };
        let mut support = std::collections::BTreeMap::new();
        let mut canonical = Map::new();
        for (key, val) in &entries {
            let n: i64 = key.trim().parse().map_err(|_| {
                CliError::Usage(format!("bad profile key '{key}': expected an integer"))
            })?;
            let scalar = match val {
                Value::Number(num) if num.is_i64() => field.from_integer(num.as_i64().unwrap()),
                Value::String(s) => parse_rational(s, field)?,
                other => {
                    return Err(CliError::Usage(format!(
                        "bad profile value '{other}': expected an integer or 'p/q' string"
                    )))
                }
            };
            canonical.insert(n.to_string(), json!(scalar.coeffs()[0].to_string()));
            support.insert(n, scalar);
        }
        return Ok((
            ZFunction::FiniteSupport(support),
            json!({ "kind": "finite", "support": canonical }),
        ));
    }
    if let Some(body) = spec.strip_prefix("geom:") {
        let Some((a, b)) = body.split_once(',') else {
            return Err(CliError::Usage(format!(
                "bad profile '{spec}': expected geom:a,b"
            )));
        };
        let a = parse_rational(a, field)?;
        let b = parse_rational(b, field)?;
        let profile = ZFunction::geom(&a, &b, lambda)?;
        return Ok((
            profile,
            json!({
                "a": a.coeffs()[0].to_string(),
                "b": b.coeffs()[0].to_string(),
                "kind": "geom",
            }),
        ));
    }
    Err(CliError::Usage(format!(
        "bad profile '{spec}': expected step, step:<t>, finite:<json>, or geom:a,b"
    )))
}

/// `{"N": ..., "coeffs": ["p/q", ...]}` on the power basis of the field.
fn scalar_json(s: &CycloScalar) -> Value {
    json!({
        "N": s.field().order(),
        "coeffs": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

fn cache_key(input: &Value) -> String {
    let bytes = serde_json::to_string(input).expect("canonical input serializes");
    let digest = Sha256::digest(bytes.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn cache_get(dir: Option<&Path>, input: &Value) -> Option<Value> {
    let dir = dir?;
    let path = dir.join(format!("{}.json", cache_key(input)));
    let text = fs::read_to_string(path).ok()?;
    let stored: Value = serde_json::from_str(&text).ok()?;
    if stored.get("version")? != CACHE_SCHEMA_VERSION || stored.get("input")? != input {
        return None;
    }
    stored.get("output").cloned()
}

fn cache_put(dir: &Path, input: &Value, output: &Value) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| e.to_string())?;
    let key = cache_key(input);
    let record = json!({
        "input": input,
        "output": output,
        "version": CACHE_SCHEMA_VERSION,
    });
    let text = serde_json::to_string(&record).map_err(|e| e.to_string())?;
    let tmp = dir.join(format!(".tmp-{key}"));
    fs::write(&tmp, text).map_err(|e| e.to_string())?;
    fs::rename(&tmp, dir.join(format!("{key}.json"))).map_err(|e| e.to_string())
}

/// Tabular projection: arrays of objects become header + rows over the
/// union of keys; a single object becomes header + one row. Nested values
/// are embedded as JSON text.
fn to_csv(value: &Value) -> String {
    let rows: Vec<&Map<String, Value>> = match value {
        Value::Array(items) => items.iter().filter_map(|v| v.as_object()).collect(),
        Value::Object(map) => vec![map],
        _ => return csv_cell(Some(value)),
    };
    let mut keys: BTreeSet<&str> = BTreeSet::new();
    for row in &rows {
        keys.extend(row.keys().map(String::as_str));
    }
    let mut lines = Vec::with_capacity(rows.len() + 1);
    lines.push(keys.iter().copied().collect::<Vec<_>>().join(","));
    for row in &rows {
        let cells: Vec<String> = keys.iter().map(|k| csv_cell(row.get(*k))).collect();
        lines.push(cells.join(","));
    }
    lines.join("\n")
}

fn csv_cell(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => csv_escape(s),
        Some(Value::Bool(b)) => b.to_string(),
        Some(Value::Number(n)) => n.to_string(),
        Some(other) => {
            csv_escape(&serde_json::to_string(other).expect("value serializes"))
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        let mut argv = vec!["mhc".to_string()];
        argv.extend(args.iter().map(|s| s.to_string()));
        Cli::try_parse_from(&argv).expect("args parse")
    }

    #[test]
    fn hochschild_output_is_canonical_json() {
        let cli = parse(&["hochschild", "--group", "Z2", "--sigma", "trivial", "--degree", "0"]);
        let out = execute(&cli).unwrap();
        assert_eq!(
            out,
            r#"{"degree":0,"dim":1,"dim_image_prev":0,"dim_kernel":1}"#
        );
    }

    #[test]
    fn verify_reports_all_checks_passing() {
        let cli = parse(&["verify", "--group", "S3", "--max-degree", "1"]);
        let out = execute(&cli).unwrap();
        let parsed: Value = serde_json::from_str(&out).unwrap();
        let rows = parsed.as_array().unwrap();
        // 10 structural checks plus 5 identity families per degree.
        assert_eq!(rows.len(), 20);
        for row in rows {
            assert_eq!(row["pass"], Value::Bool(true), "{row}");
        }
    }

    #[test]
    fn sigma_spec_errors_are_usage_errors() {
        let cli = parse(&["hochschild", "--group", "Z4", "--sigma", "char:1,2", "--degree", "0"]);
        match execute(&cli) {
            Err(CliError::Usage(_)) => {}
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn capacity_errors_are_reported_as_capacity() {
        let cli = parse(&["hochschild", "--group", "Z6", "--degree", "7"]);
        match execute(&cli) {
            Err(CliError::Capacity(_)) => {}
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn rational_and_zeta_lambda_specs_parse() {
        let (field, l) = parse_lambda("-3/2").unwrap();
        assert_eq!(field.order(), 1);
        assert_eq!(l.coeffs()[0].to_string(), "-3/2");
        let (field, l) = parse_lambda("zeta:6:2").unwrap();
        assert_eq!(field.order(), 6);
        assert!(!l.is_zero());
        assert!(parse_lambda("3/0").is_err());
        assert!(parse_lambda("zeta:6").is_err());
    }

    #[test]
    fn csv_projection_is_deterministic_and_escaped() {
        let value = json!([
            {"b": "x,y", "a": 1},
            {"a": 2, "c": true},
        ]);
        assert_eq!(to_csv(&value), "a,b,c\n1,\"x,y\",\n2,,true");
        let single = json!({"n": 3, "list": [1, 2]});
        assert_eq!(to_csv(&single), "list,n\n\"[1,2]\",3");
    }

    #[test]
    fn cache_round_trip_returns_identical_value() {
        let dir = std::env::temp_dir().join(format!("mhc-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let input = json!({"verb": "test", "x": 1});
        assert!(cache_get(Some(&dir), &input).is_none());
        let output = json!({"dim": 4});
        cache_put(&dir, &input, &output).unwrap();
        assert_eq!(cache_get(Some(&dir), &input), Some(output));
        // A different input misses even with a file present.
        assert!(cache_get(Some(&dir), &json!({"verb": "test", "x": 2})).is_none());
        let _ = fs::remove_dir_all(&dir);
    }
}
