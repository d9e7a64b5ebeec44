//! The `knotlab` command line.
//!
//! Every command writes one report. Exit codes: 0 ok, 1 domain error,
//! 2 usage error. With `--json` the report is a JSON object instead of
//! `key: value` lines. `construct` prints the report as `#` comment lines
//! followed by the PD text, so its output can be piped into other commands.

mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::branched::{build_bf, persistence_certificate, BranchedSurfaceModel};
use crate::constructions::{
    cable2, cf_to_fraction, paper_family, rational_knot, torus_2n, twist_knot, whitehead_double, DoubleSpec,
};
use crate::diagram::PlanarDiagram;
use crate::invariants::{goeritz_torsion, invariant_tuple};
use crate::knotdb::{check_paper_family, identify, paper_list, KnotTable};
use crate::seifert::{incompressibility_certificate, seifert_circles};

pub use report::{Report, Status};
use report::Inputs;

/// Environment variable naming the default knot table.
pub const TABLE_ENV: &str = "KNOTLAB_TABLE";

#[derive(Debug, Parser)]
#[command(name = "knotlab", version, about = "Knot diagrams, invariants and branched-surface certificates")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a PD file against the diagram rules.
    Validate {
        /// PD file, `-` for standard input.
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Alexander polynomial, determinant, signature and genus bound.
    Invariants {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Seifert circles, genus of the Seifert surface and its certificate.
    Seifert {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Generate a diagram.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Certify the branched surface built from a genus `g` Seifert surface.
    Bf {
        #[arg(long)]
        genus: Option<u32>,
        /// Read a model file instead of building one.
        #[arg(long, conflicts_with = "genus")]
        model: Option<PathBuf>,
        /// The Seifert surface is known to be incompressible.
        #[arg(long)]
        certified: bool,
    },
    /// Look a diagram up in a knot table.
    Identify {
        #[arg(default_value = "-")]
        file: PathBuf,
        /// Table file; defaults to $KNOTLAB_TABLE, then the bundled table.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// List the knots known to carry persistent laminations.
    Paperlist {
        /// Rebuild the first three family members and check they are listed.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// Closed 2-braid T(2, n), n odd.
    Torus {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Twist knot with c crossings, c even and at least 4.
    Twist {
        #[arg(long)]
        c: i64,
    },
    /// 2-bridge knot from a continued fraction, e.g. `--cf 2,4`.
    Rational {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        cf: Vec<i64>,
    },
    /// (2, f) cable of a companion.
    Cable2 {
        /// PD file, bundled table name, or `unknot`.
        #[arg(long, default_value = "unknot")]
        companion: String,
        #[arg(long, allow_negative_numbers = true)]
        f: i64,
    },
    /// Twisted double of a companion.
    Double {
        #[arg(long, default_value = "unknot")]
        companion: String,
        /// Half-twists added to the blackboard 2-parallel.
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        twists: i64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
        clasp: i8,
    },
    /// The n-th member of the twist-knot family built by doubling.
    Family {
        #[arg(long)]
        n: u32,
    },
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    inputs: Inputs,
}

impl Ctx<'_> {
    fn read(&mut self, path: &Path) -> Result<String, String> {
        let mut text = String::new();
        if path == Path::new("-") {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
        } else {
            text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        }
        self.inputs.add(text.as_bytes());
        Ok(text)
    }

    fn diagram(&mut self, path: &Path) -> Result<PlanarDiagram, String> {
        let text = self.read(path)?;
        PlanarDiagram::parse_pd(&text).map_err(|e| e.to_string())
    }

    fn table(&mut self, explicit: Option<&Path>) -> Result<KnotTable, String> {
        let env = std::env::var_os(TABLE_ENV).map(PathBuf::from);
        match explicit.map(Path::to_path_buf).or(env) {
            Some(p) => {
                let text = self.read(&p)?;
                crate::knotdb::parse_table(&text).map_err(|e| format!("{}: {e}", p.display()))
            }
            None => Ok(KnotTable::bundled()),
        }
    }

    /// A PD file, a bundled table name, or `unknot`.
    fn companion(&mut self, spec: &str) -> Result<PlanarDiagram, String> {
        if spec == "unknot" {
            return Ok(PlanarDiagram::unknot());
        }
        let path = Path::new(spec);
        if path.exists() {
            return self.diagram(path);
        }
        KnotTable::bundled()
            .get(spec)
            .map(|r| r.pd.clone())
            .ok_or_else(|| format!("companion {spec:?} is neither a file nor a table name"))
    }
}

fn to_map<T: Serialize>(v: &T) -> Map<String, Value> {
    match serde_json::to_value(v).expect("serializable") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

/// What a command produced: the report fields, whether they count as a
/// failure, and an optional diagram to print.
struct Outcome {
    status: Status,
    result: Map<String, Value>,
    pd: Option<PlanarDiagram>,
}

impl Outcome {
    fn ok(result: Map<String, Value>) -> Outcome {
        Outcome {
            status: Status::Ok,
            result,
            pd: None,
        }
    }
}

fn execute(cmd: Command, ctx: &mut Ctx<'_>) -> Result<Outcome, String> {
    match cmd {
        Command::Validate { file } => {
            let pd = ctx.diagram(&file)?;
            let report = pd.validate();
            let status = if report.ok { Status::Ok } else { Status::Error };
            let mut result = to_map(&report);
            result.insert("crossings".into(), json!(pd.crossing_count()));
            Ok(Outcome { status, result, pd: None })
        }
        Command::Invariants { file } => {
            let pd = ctx.diagram(&file)?;
            let t = invariant_tuple(&pd).map_err(|e| e.to_string())?;
            let torsion = goeritz_torsion(&pd).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(object(json!({
                "alexander": t.alexander,
                "determinant": t.determinant,
                "signature": t.signature,
                "genus_bound": t.genus_lower_bound,
                "goeritz_torsion": torsion,
                "crossings": pd.crossing_count(),
                "writhe": pd.writhe().map_err(|e| e.to_string())?,
            }))))
        }
        Command::Seifert { file } => {
            let pd = ctx.diagram(&file)?;
            let d = seifert_circles(&pd).map_err(|e| e.to_string())?;
            let c = incompressibility_certificate(&pd).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(object(json!({
                "circles": d.circle_count,
                "crossings": pd.crossing_count(),
                "genus": d.genus,
                "graph_connected": d.graph_is_connected(),
                "certificate": {
                    "method": c.method.as_str(),
                    "certified": c.certified(),
                    "alternating": c.alternating,
                    "span_equality": c.span_equality,
                    "span_half": c.span_half,
                },
            }))))
        }
        Command::Construct { kind } => construct(kind, ctx),
        Command::Bf { genus, model, certified } => {
            let (m, source) = match (genus, model) {
                (Some(g), None) => (build_bf(g), json!({"genus": g})),
                (None, Some(path)) => {
                    let text = ctx.read(&path)?;
                    let m = BranchedSurfaceModel::parse(&text).map_err(|e| e.to_string())?;
                    (m, json!({"model": path.display().to_string()}))
                }
                _ => return Err("bf needs --genus or --model".into()),
            };
            let report = persistence_certificate(&m, certified).map_err(|e| e.to_string())?;
            let mut result = object(json!({ "source": source }));
            result.extend(to_map(&report));
            result.insert("branch_equations".into(), json!(crate::branched::branch_equations(&m)));
            Ok(Outcome::ok(result))
        }
        Command::Identify { file, table } => {
            let pd = ctx.diagram(&file)?;
            let table = ctx.table(table.as_deref())?;
            let r = identify(&pd, &table).map_err(|e| e.to_string())?;
            let mut result = to_map(&r);
            result.insert(
                "name".into(),
                r.unique().map_or(Value::Null, |m| Value::String(m.name.clone())),
            );
            Ok(Outcome::ok(result))
        }
        Command::Paperlist { check, table } => {
            let list = paper_list();
            let mut result = object(json!({ "count": list.len(), "names": list }));
            if !check {
                return Ok(Outcome::ok(result));
            }
            let table = ctx.table(table.as_deref())?;
            let checks = check_paper_family(&table, 2).map_err(|e| e.to_string())?;
            let all = checks.iter().all(|c| c.ok);
            result.insert("checks".into(), json!(checks));
            result.insert("check_passed".into(), json!(all));
            Ok(Outcome {
                status: if all { Status::Ok } else { Status::Error },
                result,
                pd: None,
            })
        }
    }
}

fn construct(kind: Construct, ctx: &mut Ctx<'_>) -> Result<Outcome, String> {
    let err = |e: crate::constructions::ConstructionError| e.to_string();
    let (pd, mut result) = match kind {
        Construct::Torus { n } => (torus_2n(n).map_err(err)?, object(json!({"kind": "torus", "n": n}))),
        Construct::Twist { c } => (twist_knot(c).map_err(err)?, object(json!({"kind": "twist", "c": c}))),
        Construct::Rational { cf } => {
            let pd = rational_knot(&cf).map_err(err)?;
            let f = cf_to_fraction(&cf).map_err(err)?;
            (pd, object(json!({"kind": "rational", "cf": cf, "fraction": f.to_string()})))
        }
        Construct::Cable2 { companion, f } => {
            let c = ctx.companion(&companion)?;
            (cable2(&c, f).map_err(err)?, object(json!({"kind": "cable2", "companion": companion, "f": f})))
        }
        Construct::Double { companion, twists, clasp } => {
            let c = ctx.companion(&companion)?;
            let pd = whitehead_double(&DoubleSpec {
                companion: c,
                twists,
                clasp,
            })
            .map_err(err)?;
            (
                pd,
                object(json!({"kind": "double", "companion": companion, "twists": twists, "clasp": clasp})),
            )
        }
        Construct::Family { n } => {
            let m = paper_family(n).map_err(err)?;
            (
                m.diagram,
                object(json!({"kind": "family", "n": n, "expected_name": m.expected_name})),
            )
        }
    };
    result.insert("crossings".into(), json!(pd.crossing_count()));
    result.insert("writhe".into(), json!(pd.writhe().map_err(|e| e.to_string())?));
    Ok(Outcome {
        status: Status::Ok,
        result,
        pd: Some(pd),
    })
}

fn write_report(report: &Report, pd: Option<&PlanarDiagram>, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        let mut r = report.clone();
        if let Some(pd) = pd {
            r.result.insert("pd".into(), Value::String(pd.to_pd_string()));
        }
        return out.write_all(r.to_json().as_bytes());
    }
    match pd {
        Some(pd) => {
            for line in report.to_text().lines() {
                writeln!(out, "# {line}")?;
            }
            out.write_all(pd.to_pd_string().as_bytes())
        }
        None => out.write_all(report.to_text().as_bytes()),
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// report to `out`; returns the exit code.
pub fn run(args: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let json = cli.json;
    let command = args.get(1..).unwrap_or_default().join(" ");
    let mut ctx = Ctx {
        stdin,
        inputs: Inputs::new(),
    };
    let outcome = execute(cli.command, &mut ctx);
    let inputs_sha256 = ctx.inputs.hex();
    let (report, pd) = match outcome {
        Ok(o) => (
            Report {
                command,
                inputs_sha256,
                status: o.status,
                result: o.result,
            },
            o.pd,
        ),
        Err(message) => {
            let _ = writeln!(err, "knotlab: {message}");
            (
                Report {
                    command,
                    inputs_sha256,
                    status: Status::Error,
                    result: object(json!({ "error": message })),
                },
                None,
            )
        }
    };
    if write_report(&report, pd.as_ref(), json, out).is_err() {
        return 1;
    }
    report.exit_code()
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(&args, &mut std::io::stdin(), &mut stdout.lock(), &mut stderr.lock())
}
