use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use qmckay::chmap::ch;
use qmckay::group::{parse_group_spec, CharacterTable};
use qmckay::mckay::{is_cyclic, kappa_weight, mckay_graph, mckay_weight, quantum_cartan, WeightFunction};
use qmckay::suite::{self, Check};
use qmckay::toroidal::{Dictionary, Orientation, RepOptions, Variant, Window};
use qmckay::vertex::LatticeConvention;
use qmckay::wreath::{enumerate_types, eta_of, PartValuedFn, WreathClassFunction};
use qmckay::{CycScalar, Error, RSLaurent};

#[derive(Parser)]
#[command(name = "qmckay", version, about = "Exact computations for the two-parameter quantum McKay correspondence")]
struct Cli {
    /// Machine-readable JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Human-readable rendering.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Seed for randomized samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character tables.
    Table {
        #[command(subcommand)]
        action: TableCmd,
    },
    /// The quantum Cartan matrix, optionally specialized.
    Cartan {
        group: String,
        /// Use the κ-weight with this value of κ (`k` is symbolic).
        #[arg(long)]
        kappa: Option<String>,
        /// `r=..,s=..` with rational values, or `q` for r = q, s = q^-1.
        #[arg(long)]
        spec: Option<String>,
    },
    /// The McKay graph.
    Graph {
        group: String,
        #[arg(long)]
        dot: bool,
    },
    /// Types of the wreath product and its weighted form.
    Wreath {
        #[command(subcommand)]
        action: WreathCmd,
    },
    /// The characteristic map on a class function given as [{type, value}].
    Ch {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        input: PathBuf,
    },
    /// Exact identity checks.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum TableCmd {
    Validate { file: PathBuf },
    Builtin { kind: String, n: Option<u32> },
}

#[derive(Clone, Copy, ValueEnum)]
enum XiKind {
    Mckay,
    Trivial,
}

#[derive(Subcommand)]
enum WreathCmd {
    Types {
        group: String,
        n: u32,
    },
    Form {
        group: String,
        n: u32,
        #[arg(long, value_enum, default_value_t = XiKind::Mckay)]
        xi: XiKind,
    },
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct HeisArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 4)]
    modes: i32,
    #[arg(long, default_value_t = 6)]
    degree: u32,
}

#[derive(Args)]
struct WeightArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 4)]
    n: u32,
}

#[derive(Args)]
struct OpeArgs {
    #[arg(long)]
    group: String,
    #[arg(long, requires = "j")]
    i: Option<usize>,
    #[arg(long, requires = "i")]
    j: Option<usize>,
    /// κ-variant; only the symbolic value `k` is supported.
    #[arg(long, num_args = 0..=1, default_missing_value = "k")]
    kappa: Option<String>,
    #[arg(long, default_value_t = 4)]
    degree: u32,
    #[arg(long, default_value_t = 1)]
    modes: i64,
}

#[derive(Clone, Copy, ValueEnum)]
enum DictArg {
    First,
    Second,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Corrected,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    LowerToHigher,
    Cyclic,
}

#[derive(Args)]
struct ToroidalArgs {
    #[arg(long)]
    group: String,
    #[arg(long, num_args = 0..=1, default_missing_value = "k", conflicts_with = "affine")]
    kappa: Option<String>,
    /// Indices 1..N on the space without γ_0 directions.
    #[arg(long)]
    affine: bool,
    #[arg(long, default_value_t = 4)]
    degree: u32,
    #[arg(long, default_value_t = 2)]
    modes: i64,
    #[arg(long, default_value_t = 1)]
    radius: u32,
    #[arg(long, value_enum, default_value_t = DictArg::Both)]
    dictionary: DictArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Corrected)]
    convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = OrientationArg::LowerToHigher)]
    orientation: OrientationArg,
    /// Skip the Serre relations.
    #[arg(long)]
    no_serre: bool,
}

#[derive(Args)]
struct OneParamArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    affine: bool,
    #[arg(long, default_value_t = 3)]
    degree: u32,
    #[arg(long, default_value_t = 2)]
    modes: i64,
    #[arg(long, value_enum, default_value_t = DictArg::Both)]
    dictionary: DictArg,
    #[arg(long, value_enum, default_value_t = ConventionArg::Corrected)]
    convention: ConventionArg,
}

#[derive(Args)]
struct NondegArgs {
    #[arg(long)]
    group: String,
    /// Extra random samples t ∈ [2, 50], drawn with --seed.
    #[arg(long, default_value_t = 0)]
    random: usize,
}

#[derive(Args)]
struct AllArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 3)]
    degree: u32,
    #[arg(long, default_value_t = 1)]
    modes: i64,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Mckay(GroupArgs),
    Eigenvectors(GroupArgs),
    Heisenberg(HeisArgs),
    Isometry(WeightArgs),
    Hopf(WeightArgs),
    Generating(WeightArgs),
    Ope(OpeArgs),
    Toroidal(ToroidalArgs),
    OneParam(OneParamArgs),
    Nondegeneracy(NondegArgs),
    /// Every check for one group.
    All(AllArgs),
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Invalid(_) | Error::InvalidTable(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

/// A payload, whether every check in it passed, and raw text that replaces the rendering.
struct Outcome {
    payload: Value,
    pass: bool,
    raw: Option<String>,
}

impl Outcome {
    fn data(payload: Value) -> Self {
        Outcome { payload, pass: true, raw: None }
    }

    fn checks(checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Outcome {
            payload: json!({ "pass": pass, "checks": checks }),
            pass,
            raw: None,
        }
    }
}

fn load_group(spec: &str) -> Result<Arc<CharacterTable>, Failure> {
    let path = Path::new(spec);
    let t = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?;
        CharacterTable::from_json(&text)?
    } else {
        parse_group_spec(spec)?
    };
    Ok(Arc::new(t))
}

fn symbolic_kappa(k: &Option<String>) -> Result<bool, Failure> {
    match k.as_deref() {
        None => Ok(false),
        Some("k") => Ok(true),
        Some(other) => Err(Failure::Usage(format!("κ must be symbolic (`k`), got `{other}`"))),
    }
}

fn scalar_json(c: &CycScalar) -> Value {
    match c.to_i64() {
        Some(k) => json!(k),
        None => json!(c.pretty()),
    }
}

fn parse_spec(spec: &str) -> Result<(CycScalar, CycScalar), Failure> {
    let mut r = None;
    let mut s = None;
    for part in spec.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("bad --spec `{spec}`")))?;
        let v: CycScalar = v.parse()?;
        match k.trim() {
            "r" => r = Some(v),
            "s" => s = Some(v),
            _ => return Err(Failure::Usage(format!("unknown parameter `{k}` in --spec"))),
        }
    }
    match (r, s) {
        (Some(r), Some(s)) => Ok((r, s)),
        _ => Err(Failure::Usage("--spec needs both r and s".into())),
    }
}

fn cmd_table(action: &TableCmd) -> Result<Outcome, Failure> {
    match action {
        TableCmd::Validate { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            Ok(match CharacterTable::from_json(&text) {
                Ok(t) => Outcome::data(json!({
                    "valid": true,
                    "name": t.name,
                    "order": t.order,
                    "classes": t.num_classes(),
                    "characters": t.num_chars(),
                })),
                Err(e) => Outcome {
                    payload: json!({ "valid": false, "error": e.to_string() }),
                    pass: false,
                    raw: None,
                },
            })
        }
        TableCmd::Builtin { kind, n } => {
            let spec = match n {
                Some(n) => format!("{kind}:{n}"),
                None => kind.clone(),
            };
            let t = parse_group_spec(&spec)?;
            Ok(Outcome::data(serde_json::to_value(t.to_doc()).map_err(|e| Failure::Internal(e.to_string()))?))
        }
    }
}

fn cmd_cartan(group: &str, kappa: &Option<String>, spec: &Option<String>) -> Result<Outcome, Failure> {
    let t = load_group(group)?;
    let (xi, weight) = match kappa {
        Some(k) => {
            if !is_cyclic(&t) {
                return Err(Failure::Usage("the κ-weight needs a cyclic group".into()));
            }
            (kappa_weight(&t, &k.parse::<RSLaurent>()?)?, format!("kappa={k}"))
        }
        None => (mckay_weight(&t)?, "mckay".to_string()),
    };
    let a = quantum_cartan(&t, &xi)?;
    let symbolic: Vec<Vec<Value>> = a.entries.iter().map(|row| row.iter().map(|x| json!(x)).collect()).collect();
    let mut payload = json!({ "group": t.name, "weight": weight, "matrix": symbolic });
    match spec.as_deref() {
        None => {}
        Some("q") => {
            let m: Vec<Vec<String>> = a
                .entries
                .iter()
                .map(|row| row.iter().map(|x| x.specialize_q().to_string()).collect())
                .collect();
            payload["specialization"] = json!("r=q,s=q^-1");
            payload["specialized"] = json!(m);
        }
        Some(sp) => {
            let (r, s) = parse_spec(sp)?;
            let roots = match (r.rational_sqrt(), s.rational_sqrt()) {
                (Some(u), Some(v)) => Some((u, v)),
                _ => None,
            };
            let m = a.specialize(&r, &s, roots.as_ref().map(|(u, v)| (u, v)))?;
            let m: Vec<Vec<Value>> = m.iter().map(|row| row.iter().map(scalar_json).collect()).collect();
            payload["specialization"] = json!(sp);
            payload["specialized"] = json!(m);
        }
    }
    Ok(Outcome::data(payload))
}

fn cmd_graph(group: &str, dot: bool) -> Result<Outcome, Failure> {
    let t = load_group(group)?;
    let g = mckay_graph(&t, &mckay_weight(&t)?)?;
    let mut out = Outcome::data(json!({
        "group": t.name,
        "vertices": g.vertices,
        "edges": g.edges,
        "degrees": g.degrees(),
    }));
    if dot {
        out.raw = Some(g.to_dot(&t.name));
    }
    Ok(out)
}

fn weight_of(t: &Arc<CharacterTable>, xi: XiKind) -> Result<WeightFunction, Failure> {
    Ok(match xi {
        XiKind::Mckay => mckay_weight(t)?,
        XiKind::Trivial => WeightFunction::trivial(t),
    })
}

fn cmd_wreath(action: &WreathCmd) -> Result<Outcome, Failure> {
    match action {
        WreathCmd::Types { group, n } => {
            let t = load_group(group)?;
            let types: Vec<Value> = enumerate_types(&t, *n)
                .iter()
                .map(|rho| json!({ "type": rho, "centralizer": rho.centralizer_order(&t).to_string() }))
                .collect();
            Ok(Outcome::data(json!({ "group": t.name, "n": n, "count": types.len(), "types": types })))
        }
        WreathCmd::Form { group, n, xi } => {
            let t = load_group(group)?;
            let w = weight_of(&t, *xi)?;
            let values: Vec<Value> = enumerate_types(&t, *n)
                .iter()
                .map(|rho| json!({ "type": rho, "value": eta_of(&w.base, rho) }))
                .collect();
            Ok(Outcome::data(json!({ "group": t.name, "n": n, "values": values })))
        }
    }
}

fn cmd_ch(group: &str, n: u32, input: &Path) -> Result<Outcome, Failure> {
    let t = load_group(group)?;
    let text = std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
    let items = doc
        .as_array()
        .ok_or_else(|| Failure::Usage("input must be a list of {type, value}".into()))?;
    let mut f = WreathClassFunction::zero(&t, n);
    for item in items {
        let ty: std::collections::BTreeMap<usize, Vec<u32>> = serde_json::from_value(item["type"].clone())
            .map_err(|e| Failure::Usage(format!("bad type: {e}")))?;
        let rho = PartValuedFn::from_map(t.num_classes(), &ty)?;
        let value: RSLaurent = item["value"]
            .as_str()
            .ok_or_else(|| Failure::Usage("value must be a string".into()))?
            .parse()?;
        f.set(rho, value)?;
    }
    Ok(Outcome::data(json!({ "group": t.name, "n": n, "vector": ch(&f).to_json() })))
}

fn dictionaries(d: DictArg) -> Vec<Dictionary> {
    match d {
        DictArg::First => vec![Dictionary::First],
        DictArg::Second => vec![Dictionary::Second],
        DictArg::Both => vec![Dictionary::First, Dictionary::Second],
    }
}

fn convention(c: ConventionArg) -> LatticeConvention {
    match c {
        ConventionArg::Corrected => LatticeConvention::CORRECTED,
        ConventionArg::Literal => LatticeConvention::LITERAL,
    }
}

/// The Serre window: modes in {−1, 0, 1} on vectors of degree ≤ 2.
fn serre_window(radius: u32) -> Window {
    Window {
        degree: 2,
        modes: 1,
        radius,
    }
}

fn toroidal_checks(a: &ToroidalArgs) -> Result<Vec<Check>, Failure> {
    let t = load_group(&a.group)?;
    let variant = if symbolic_kappa(&a.kappa)? {
        Variant::Kappa
    } else if a.affine {
        Variant::Affine
    } else {
        Variant::Plain
    };
    let window = Window {
        degree: a.degree,
        modes: a.modes,
        radius: a.radius,
    };
    let serre = serre_window(a.radius);
    let orientation = match a.orientation {
        OrientationArg::LowerToHigher => Orientation::LowerToHigher,
        OrientationArg::Cyclic => Orientation::Cyclic,
    };
    dictionaries(a.dictionary)
        .into_iter()
        .map(|d| {
            let options = RepOptions {
                dictionary: d,
                convention: convention(a.convention),
                orientation,
            };
            Ok(suite::check_toroidal(&t, variant, options, &window, (!a.no_serre).then_some(&serre))?)
        })
        .collect()
}

fn one_param_checks(a: &OneParamArgs) -> Result<Vec<Check>, Failure> {
    let t = load_group(&a.group)?;
    let variant = if a.affine { Variant::Affine } else { Variant::Plain };
    let window = Window {
        degree: a.degree,
        modes: a.modes,
        radius: 1,
    };
    dictionaries(a.dictionary)
        .into_iter()
        .map(|d| {
            let options = RepOptions {
                dictionary: d,
                convention: convention(a.convention),
                ..RepOptions::default()
            };
            Ok(suite::check_one_param(&t, variant, options, &window)?)
        })
        .collect()
}

fn all_checks(a: &AllArgs) -> Result<Vec<Check>, Failure> {
    let t = load_group(&a.group)?;
    let d = a.degree;
    let mut out = Vec::new();
    if suite::reference_affine_cartan(&t.name).is_some() {
        out.push(suite::check_mckay_specialization(&t)?);
    }
    out.push(suite::check_eigenvectors(&t)?);
    out.push(suite::check_heisenberg(&t, 4, d)?);
    out.push(suite::check_generating_functions(&t, d));
    out.push(suite::check_isometry(&t, d.min(3))?);
    out.push(suite::check_hopf(&t, d.min(3))?);
    out.push(suite::check_ope(&t, false, d.min(3), 1, None)?);
    let cyclic = is_cyclic(&t) && t.num_chars() >= 3;
    if cyclic {
        out.push(suite::check_ope(&t, true, d.min(3), 1, None)?);
    }
    let window = Window {
        degree: d,
        modes: a.modes,
        radius: 1,
    };
    let serre = serre_window(1);
    for dict in [Dictionary::First, Dictionary::Second] {
        let options = RepOptions {
            dictionary: dict,
            ..RepOptions::default()
        };
        out.push(suite::check_toroidal(&t, Variant::Plain, options, &window, Some(&serre))?);
        out.push(suite::check_one_param(&t, Variant::Plain, options, &Window { degree: d.min(3), ..window })?);
    }
    if cyclic {
        out.push(suite::check_toroidal(&t, Variant::Kappa, RepOptions::default(), &window, Some(&serre))?);
    }
    out.push(suite::check_toroidal(&t, Variant::Affine, RepOptions::default(), &window, Some(&serre))?);
    out.push(suite::check_nondegeneracy(&t, &[2, 3, 5])?);
    Ok(out)
}

fn cmd_verify(what: &VerifyCmd, seed: u64) -> Result<Outcome, Failure> {
    let checks = match what {
        VerifyCmd::Mckay(a) => vec![suite::check_mckay_specialization(&load_group(&a.group)?)?],
        VerifyCmd::Eigenvectors(a) => vec![suite::check_eigenvectors(&load_group(&a.group)?)?],
        VerifyCmd::Heisenberg(a) => vec![suite::check_heisenberg(&load_group(&a.group)?, a.modes, a.degree)?],
        VerifyCmd::Isometry(a) => vec![suite::check_isometry(&load_group(&a.group)?, a.n)?],
        VerifyCmd::Hopf(a) => vec![suite::check_hopf(&load_group(&a.group)?, a.n)?],
        VerifyCmd::Generating(a) => vec![suite::check_generating_functions(&load_group(&a.group)?, a.n)],
        VerifyCmd::Ope(a) => {
            let t = load_group(&a.group)?;
            let kappa = symbolic_kappa(&a.kappa)?;
            if kappa && !(is_cyclic(&t) && t.num_chars() >= 3) {
                return Err(Failure::Usage("the κ-variant needs a cyclic group of order ≥ 3".into()));
            }
            let pair = a.i.zip(a.j);
            if let Some((i, j)) = pair {
                if i.max(j) >= t.num_chars() {
                    return Err(Failure::Usage(format!("index out of range for {}", t.name)));
                }
            }
            vec![suite::check_ope(&t, kappa, a.degree, a.modes, pair)?]
        }
        VerifyCmd::Toroidal(a) => toroidal_checks(a)?,
        VerifyCmd::OneParam(a) => one_param_checks(a)?,
        VerifyCmd::Nondegeneracy(a) => {
            let mut rng = StdRng::seed_from_u64(seed);
            let mut samples = vec![2, 3, 5];
            samples.extend((0..a.random).map(|_| rng.gen_range(2..=50)));
            vec![suite::check_nondegeneracy(&load_group(&a.group)?, &samples)?]
        }
        VerifyCmd::All(a) => all_checks(a)?,
    };
    Ok(Outcome::checks(checks))
}

fn prettify(s: &str) -> String {
    if s.contains("r^(") || s.contains("k^(") {
        if let Ok(x) = s.parse::<RSLaurent>() {
            return x.pretty();
        }
    }
    s.to_string()
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", inline(x));
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    let _ = writeln!(out, "{pad}- {}", inline(x));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(x, indent + 1, out);
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", inline(v));
        }
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => prettify(s),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Table { action } => cmd_table(action),
        Command::Cartan { group, kappa, spec } => cmd_cartan(group, kappa, spec),
        Command::Graph { group, dot } => cmd_graph(group, *dot),
        Command::Wreath { action } => cmd_wreath(action),
        Command::Ch { group, n, input } => cmd_ch(group, *n, input),
        Command::Verify { what } => cmd_verify(what, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (result, code) = match run(&cli) {
        Ok(o) => {
            if let Some(raw) = &o.raw {
                if !cli.json {
                    emit(raw);
                    return ExitCode::SUCCESS;
                }
            }
            let status = if o.pass { "ok" } else { "fail" };
            (json!({ "command": argv, "status": status, "payload": o.payload }), if o.pass { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => (json!({ "command": argv, "status": "usage_error", "error": m }), 2),
        Err(Failure::Internal(m)) => (json!({ "command": argv, "status": "internal_error", "error": m }), 3),
    };
    if cli.pretty {
        let mut s = String::new();
        render(&result, 0, &mut s);
        emit(&s);
    } else {
        emit(&(serde_json::to_string_pretty(&result).expect("serializable") + "\n"));
    }
    ExitCode::from(code)
}
