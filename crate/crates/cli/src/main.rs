use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use forge_core::acceptance::acceptance_report;
use forge_core::amalgamation::{flat_amalgamate, is_flat, AmalgamationSpec};
use forge_core::automorphisms::{num_orbits, symmetry_type_graph, AutomorphismGroup};
use forge_core::constructions::{catalog, Construction};
use forge_core::extender::{face_lattice_oracle, is_polytopal};
use forge_core::friendly::{
    friendly_group, has_unique_universal_extension, heart_oracle, predicted_stg_universal,
    universal_extensions_isomorphic,
};
use forge_core::io::{
    export_dot, export_stg_dot, load_coextender, load_extender, load_mpx, load_pre_extender, premaniplex_json,
    save_mpx, stg_json, write_extender, RunReport,
};
use forge_core::universal::{ball_local_checks, rn_order_universal, UniversalBall};
use forge_core::{is_isomorphic, Error, Premaniplex};

#[derive(Parser)]
#[command(name = "forge", version, about = "Cayley extensions of maniplexes")]
struct Cli {
    /// Also write a full run report (input digests, parameters, wall time) here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the premaniplex axioms of an MPX file; exits 1 on violations.
    Validate { file: PathBuf },
    /// Named constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Build a named extension, e.g. `build two-hat --seed cube3 -o out.mpx`
    /// or `build toroid44 3 2 -o t.mpx`.
    Build {
        kind: String,
        params: Vec<usize>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the extender file here, with its base next to it.
        #[arg(long)]
        save_extender: Option<PathBuf>,
    },
    /// Derive the maniplex of an extender file.
    Extend {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Polytopality of an MPX file; exits 1 if it is not polytopal.
    Polytopal {
        file: PathBuf,
        /// Cross-check with the face-lattice oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Ball of the universal extension of a pre-extender file.
    Universal {
        #[arg(long)]
        pre: PathBuf,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// Include local axiom checks of the ball.
        #[arg(long)]
        stats: bool,
    },
    /// Friendly group of a pre-extender.
    Friendly {
        #[arg(long)]
        pre: PathBuf,
        /// Compare with the subgroup-enumeration oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Symmetry type graph of an MPX file.
    Stg {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Predicted symmetry type graph of the universal extension.
    StgUniversal {
        #[arg(long)]
        pre: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Whether a maniplex has a unique universal extension; exits 1 if not.
    UniqueUniversal { file: PathBuf },
    /// Whether two pre-extenders have isomorphic universal extensions; exits 1 if not.
    UnivIso {
        #[arg(long)]
        pre1: PathBuf,
        #[arg(long)]
        pre2: PathBuf,
    },
    /// Flat amalgamation of a coextender and an extender of the same base.
    Amalgamate {
        #[arg(long)]
        coext: PathBuf,
        #[arg(long)]
        ext: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Isomorphism of two MPX files; exits 1 if they are not isomorphic.
    Iso { a: PathBuf, b: PathBuf },
    /// Export an MPX file as DOT or JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the acceptance suite; exits 1 if any criterion fails.
    Accept {
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Catalog { .. } => "catalog",
            Command::Build { .. } => "build",
            Command::Extend { .. } => "extend",
            Command::Polytopal { .. } => "polytopal",
            Command::Universal { .. } => "universal",
            Command::Friendly { .. } => "friendly",
            Command::Stg { .. } => "stg",
            Command::StgUniversal { .. } => "stg-universal",
            Command::UniqueUniversal { .. } => "unique-universal",
            Command::UnivIso { .. } => "univ-iso",
            Command::Amalgamate { .. } => "amalgamate",
            Command::Iso { .. } => "iso",
            Command::Export { .. } => "export",
            Command::Accept { .. } => "accept",
        }
    }
}

/// Result of a command: JSON for stdout and whether a property failed.
struct Outcome {
    results: Value,
    violation: bool,
}

impl Outcome {
    fn ok(results: Value) -> Outcome {
        Outcome { results, violation: false }
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn graph_summary(g: &Premaniplex) -> Value {
    json!({
        "rank": g.rank(),
        "flags": g.num_flags(),
        "maniplex": g.is_maniplex(),
        "defect": g.maniplex_defect().map(|d| d.to_string()),
    })
}

fn run(cmd: &Command, report: &mut RunReport) -> Result<Outcome, Error> {
    let mut input = |p: &Path| report.add_input_file(p);
    match cmd {
        Command::Validate { file } => {
            input(file)?;
            let g = load_mpx(file)?;
            let v = g.validate();
            let ok = v.is_ok();
            Ok(Outcome {
                results: json!({
                    "premaniplex": ok,
                    "maniplex": ok && g.is_maniplex(),
                    "defect": if ok { g.maniplex_defect().map(|d| d.to_string()) } else { None },
                    "involution_failures": v.involution_failures,
                    "commutation_failures": v.commutation_failures,
                    "semiedges": v.semiedges,
                }),
                violation: !ok,
            })
        }
        Command::Catalog { action: CatalogAction::List } => {
            let entries: Vec<Value> = catalog()
                .iter()
                .map(|e| json!({ "name": e.name, "construction": e.construction, "flags": e.expected_flags, "polytopal": e.polytopal }))
                .collect();
            Ok(Outcome::ok(Value::Array(entries)))
        }
        Command::Build { kind, params, seed, output, save_extender } => {
            let construction = Construction::parse(kind, seed.as_deref(), params)?;
            let ext = construction.build()?;
            let d = ext.derive();
            if let Some(out) = output {
                save_mpx(&d.graph, out)?;
            }
            if let Some(path) = save_extender {
                let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("extender");
                let base_name = format!("{stem}.base.mpx");
                let base_path = path.with_file_name(&base_name);
                save_mpx(ext.base(), &base_path)?;
                write_out(path, &write_extender(&ext, &base_name))?;
            }
            Ok(Outcome::ok(json!({
                "construction": construction,
                "group": ext.group().spec(),
                "group_order": ext.group().order(),
                "voltages_generate": d.diagnostics.voltages_generate,
                "derived": graph_summary(&d.graph),
            })))
        }
        Command::Extend { file, output } => {
            input(file)?;
            let ext = load_extender(file)?;
            let d = ext.derive();
            if let Some(out) = output {
                save_mpx(&d.graph, out)?;
            }
            Ok(Outcome {
                results: json!({
                    "group": ext.group().spec(),
                    "voltages_generate": d.diagnostics.voltages_generate,
                    "degenerate_facets": d.diagnostics.degenerate_facets,
                    "derived": graph_summary(&d.graph),
                }),
                violation: !d.is_maniplex(),
            })
        }
        Command::Polytopal { file, oracle } => {
            input(file)?;
            let g = load_mpx(file)?;
            g.validate().into_result()?;
            let witness = is_polytopal(&g);
            let oracle = if *oracle { Some(face_lattice_oracle(&g)?) } else { None };
            Ok(Outcome {
                results: json!({ "polytopal": witness.is_none(), "witness": witness, "oracle": oracle }),
                violation: witness.is_some(),
            })
        }
        Command::Universal { pre, radius, stats } => {
            input(pre)?;
            let pre = load_pre_extender(pre)?;
            let ball = UniversalBall::new(&pre, *radius)?;
            let mut results = json!({
                "radius": radius,
                "census": ball.census(),
                "cumulative": ball.cumulative_census(),
                "flags": ball.num_flags(),
                "rn_order": rn_order_universal(&pre).to_string(),
            });
            let mut violation = false;
            if *stats {
                let r = ball_local_checks(&ball);
                violation = !r.passes();
                results["local_checks"] = serde_json::to_value(&r).expect("serializable");
            }
            Ok(Outcome { results, violation })
        }
        Command::Friendly { pre, oracle } => {
            input(pre)?;
            let pre = load_pre_extender(pre)?;
            let g = friendly_group(&pre)?;
            let aut = AutomorphismGroup::of(pre.base())?.order();
            let elements: Vec<Vec<usize>> = g.elements.iter().map(|p| p.to_vec()).collect();
            let mut results = json!({
                "order": g.order(),
                "aut_order": aut,
                "iterations": g.history.len(),
                "elements": elements,
            });
            let mut violation = false;
            if *oracle {
                let o = heart_oracle(&pre)?;
                let mut a: Vec<Vec<usize>> = elements;
                let mut b: Vec<Vec<usize>> = o.elements.iter().map(|p| p.to_vec()).collect();
                a.sort();
                b.sort();
                violation = a != b;
                results["oracle_order"] = json!(o.order());
                results["oracle_agrees"] = json!(!violation);
            }
            Ok(Outcome { results, violation })
        }
        Command::Stg { file, dot } => {
            input(file)?;
            let g = load_mpx(file)?;
            let stg = symmetry_type_graph(&g)?;
            if let Some(path) = dot {
                write_out(path, &export_stg_dot(&stg))?;
            }
            let aut = AutomorphismGroup::of(&g)?.order();
            Ok(Outcome::ok(json!({ "aut_order": aut, "orbits": num_orbits(&g)?, "stg": stg_json(&stg) })))
        }
        Command::StgUniversal { pre, dot } => {
            input(pre)?;
            let pre = load_pre_extender(pre)?;
            let stg = predicted_stg_universal(&pre)?;
            if let Some(path) = dot {
                write_out(path, &export_stg_dot(&stg))?;
            }
            Ok(Outcome::ok(json!({ "stg": stg_json(&stg) })))
        }
        Command::UniqueUniversal { file } => {
            input(file)?;
            let k = load_mpx(file)?;
            let r = has_unique_universal_extension(&k)?;
            Ok(Outcome { violation: !r.unique, results: serde_json::to_value(&r).expect("serializable") })
        }
        Command::UnivIso { pre1, pre2 } => {
            input(pre1)?;
            input(pre2)?;
            let (a, b) = (load_pre_extender(pre1)?, load_pre_extender(pre2)?);
            let tau = universal_extensions_isomorphic(&a, &b)?;
            Ok(Outcome {
                violation: tau.is_none(),
                results: json!({ "isomorphic": tau.is_some(), "tau": tau.map(|t| t.to_vec()) }),
            })
        }
        Command::Amalgamate { coext, ext, output } => {
            input(coext)?;
            input(ext)?;
            let spec = AmalgamationSpec::new(load_coextender(coext)?, load_extender(ext)?)?;
            let m = flat_amalgamate(&spec)?;
            if let Some(out) = output {
                save_mpx(&m.graph, out)?;
            }
            let polytopal = m.is_maniplex() && is_polytopal(&m.graph).is_none();
            Ok(Outcome::ok(json!({
                "derived": graph_summary(&m.graph),
                "flat": is_flat(&m.graph),
                "polytopal": polytopal,
            })))
        }
        Command::Iso { a, b } => {
            input(a)?;
            input(b)?;
            let (p, q) = (load_mpx(a)?, load_mpx(b)?);
            let map = is_isomorphic(&p, &q);
            Ok(Outcome {
                violation: map.is_none(),
                results: json!({ "isomorphic": map.is_some(), "map": map.map(|m| m.to_vec()) }),
            })
        }
        Command::Export { file, format, output } => {
            input(file)?;
            let g = load_mpx(file)?;
            let text = match format {
                Format::Dot => export_dot(&g),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&premaniplex_json(&g)).expect("serializable");
                    s.push('\n');
                    s
                }
            };
            match output {
                Some(path) => write_out(path, &text)?,
                None => emit(&text),
            }
            Ok(Outcome::ok(Value::Null))
        }
        Command::Accept { .. } => unreachable!("handled in main"),
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn accept(json_path: Option<&Path>) -> ExitCode {
    let report = acceptance_report();
    let criteria = report.results["criteria"].as_array().cloned().unwrap_or_default();
    for c in &criteria {
        emit(&format!(
            "[{}] {:>2} {} ({} ms)\n",
            if c["passed"] == true { "PASS" } else { "FAIL" },
            c["id"],
            c["name"].as_str().unwrap_or(""),
            c["elapsed_ms"]
        ));
    }
    emit(&format!("total {} ms\n", report.wall_time_ms));
    if let Some(path) = json_path {
        if let Err(e) = write_out(path, &report.to_json()) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.results["all_passed"] == true {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Accept { json } = &cli.command {
        return accept(json.as_deref());
    }
    let start = Instant::now();
    let name = cli.command.name();
    let params = json!({ "args": std::env::args().skip(1).collect::<Vec<_>>() });
    let mut report = RunReport::new(name, params);
    match run(&cli.command, &mut report) {
        Ok(outcome) => {
            if !outcome.results.is_null() {
                let report = report.finish(outcome.results, start);
                emit(&format!("{}\n", serde_json::to_string_pretty(&report.results).expect("serializable")));
                if let Some(path) = &cli.report {
                    if let Err(e) = write_out(path, &report.to_json()) {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                }
            }
            if outcome.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
