use std::fmt::Write;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use packing_core::discharging::{discharge, Element, RotationSystem};
use packing_core::graph::{find_edge_cuts, parse_edge_list, structure_report, Graph};
use packing_core::packing::{extend_with, prove_uncolorable, validate_sharpness_gadget, verify, Coloring, ExtendOptions, PackingSpec, ProveOptions};
use packing_core::reducibility::{check_reducible, parse_config_file, CheckOptions, Progress, Verdict};
use packing_core::Error;
use serde_json::json;

use crate::args::{Cli, Command};
use crate::fixtures;
use crate::report::{read_input, Input, Outcome};

pub fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let mut inputs = Vec::new();
    match cli.command {
        Command::Solve { graph, spec, partial, out, sdr_tail } => {
            let g = load_graph(&graph, &mut inputs)?;
            let spec = parse_spec(&spec)?;
            let partial = match partial {
                Some(p) => load_coloring(&p, &mut inputs)?,
                None => Coloring::uncolored(g.n()),
            };
            let found = extend_with(&g, &spec, &partial, ExtendOptions { sdr_tail }).map_err(input_error)?;
            let (exit, text) = match &found {
                Some(c) => {
                    if let Some(out) = &out {
                        std::fs::write(out, format!("{c}\n")).with_context(|| format!("cannot write {}", out.display()))?;
                    }
                    (0, format!("{c}\n"))
                }
                None => (1, format!("no ({spec}) coloring extends the given partial coloring\n")),
            };
            Ok(outcome("solve", inputs, exit, text, json!({ "spec": spec, "coloring": found })))
        }
        Command::Verify { graph, coloring, spec } => {
            let g = load_graph(&graph, &mut inputs)?;
            let c = load_coloring(&coloring, &mut inputs)?;
            let spec = parse_spec(&spec)?;
            let report = verify(&g, &spec, &c).map_err(input_error)?;
            let mut text = String::new();
            if report.valid {
                text.push_str("valid\n");
            } else {
                for v in &report.violations {
                    writeln!(text, "color {} on {} and {} at distance {}", v.color, v.u, v.v, v.dist).unwrap();
                }
            }
            let exit = if report.valid { 0 } else { 1 };
            Ok(outcome("verify", inputs, exit, text, json!({ "spec": spec, "report": report })))
        }
        Command::Refute { graph, spec, break_symmetry } => {
            let g = load_graph(&graph, &mut inputs)?;
            let spec = parse_spec(&spec)?;
            match prove_uncolorable(&g, &spec, ProveOptions { break_symmetry }) {
                Ok(cert) => {
                    let text = format!("no ({spec}) coloring exists; {} search nodes\n", cert.node_count);
                    Ok(outcome("refute", inputs, 0, text, json!({ "spec": spec, "certificate": cert })))
                }
                Err(Error::Colorable { coloring }) => {
                    let text = format!("colorable: {coloring}\n");
                    Ok(outcome("refute", inputs, 1, text, json!({ "spec": spec, "coloring": coloring })))
                }
                Err(e) => Err(input_error(e)),
            }
        }
        Command::Info { graph, cuts } => {
            let g = load_graph(&graph, &mut inputs)?;
            let report = structure_report(&g).map_err(input_error)?;
            let cut_list = find_edge_cuts(&g, cuts).map_err(input_error)?;
            let mut text = format!(
                "n {} m {}\nmax_degree {}\ncubic {}\ndiameter {}\nindependence_number {}\ngirth {}\n",
                g.n(),
                g.m(),
                report.max_degree,
                report.is_cubic,
                opt(report.diameter),
                report.independence_number,
                opt(report.girth),
            );
            for c in &cut_list {
                let parts: Vec<String> = c.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(text, "cut {}", parts.join(" ")).unwrap();
            }
            Ok(outcome("info", inputs, 0, text, json!({ "structure": report, "edge_cuts": cut_list })))
        }
        Command::CheckConfig { file, exhaustive_first_triple, workers, resume, engine, witness_limit, timings, quiet } => {
            let bytes = read_input(&file, &mut inputs)?;
            let cfgs = parse_config_file(&bytes).map_err(|e| anyhow!("{}: {e}", file.display()))?;
            let (first, cursor) = match resume {
                Some(r) => parse_resume(&r)?,
                None => (0, None),
            };
            if first > 0 && first >= cfgs.len() {
                bail!("resume record {first} but the file has {} records", cfgs.len());
            }
            let start = Instant::now();
            let mut exit = 0;
            let mut text = String::new();
            let mut records = Vec::new();
            for (i, cfg) in cfgs.iter().enumerate().skip(first) {
                for w in cfg.warnings() {
                    eprintln!("warning: '{}': {w}", cfg.name);
                }
                let progress: Option<packing_core::reducibility::ProgressFn> = if quiet {
                    None
                } else {
                    Some(Arc::new(move |p: &Progress| match p {
                        Progress::Cursor { cursor, leaves } => {
                            let c: Vec<String> = cursor.iter().map(u8::to_string).collect();
                            eprintln!("progress: record {i} resume {i}:{} after {leaves} precolorings", c.join(","));
                        }
                        Progress::Note(msg) => eprintln!("progress: record {i}: {msg}"),
                    }))
                };
                let opts = CheckOptions {
                    exhaustive_first: exhaustive_first_triple,
                    witness_limit,
                    engine: engine.into(),
                    resume: if i == first { cursor.clone() } else { None },
                    workers,
                    progress,
                };
                let t = Instant::now();
                let r = check_reducible(cfg, &opts).map_err(input_error)?;
                let seconds = t.elapsed().as_secs_f64();
                writeln!(text, "{}", r.summary_line()).unwrap();
                if r.verdict == Verdict::Counterexample {
                    exit = 1;
                }
                let mut rec = json!({
                    "name": r.name,
                    "verdict": r.verdict,
                    "summary": r.summary_line(),
                    "stats": r.stats,
                    "witness": r.witness(),
                    "witnesses": r.witnesses,
                    "engine": r.engine,
                    "warnings": cfg.warnings(),
                });
                if timings {
                    rec["seconds"] = json!(seconds);
                }
                records.push(rec);
            }
            let mut out = outcome(
                "check-config",
                inputs,
                exit,
                text,
                json!({ "exhaustive_first_triple": exhaustive_first_triple, "records": records }),
            );
            if timings {
                out.wall_seconds = Some(start.elapsed().as_secs_f64());
            }
            Ok(out)
        }
        Command::Discharge { graph, rotation } => {
            let g = load_graph(&graph, &mut inputs)?;
            let rot_bytes = read_input(&rotation, &mut inputs)?;
            let rot = RotationSystem::parse(&rot_bytes, &g).map_err(|e| anyhow!("{}: {e}", rotation.display()))?;
            let report = discharge(&g, &rot).map_err(input_error)?;
            let mut text = format!("euler_total {}\n", report.euler_total);
            for f in &report.faces {
                writeln!(
                    text,
                    "face {} length {} x {} y {} z {} initial {} final {}",
                    f.id, f.length, f.x, f.y, f.z, f.initial, f.final_charge
                )
                .unwrap();
            }
            for u in report.unhappy_faces.iter().chain(&report.unhappy_vertices) {
                let kind = match u.kind {
                    Element::Vertex => "vertex",
                    Element::Face => "face",
                };
                writeln!(text, "unhappy {kind} {} charge {}", u.id, u.charge).unwrap();
            }
            let ok = report.all_faces_happy() && report.formula_mismatches.is_empty();
            let exit = if ok { 0 } else { 1 };
            let unhappy: Vec<_> = report.unhappy_faces.iter().chain(&report.unhappy_vertices).collect();
            let result = json!({
                "euler_total": report.euler_total,
                "final_total": report.final_total,
                "faces": report.faces,
                "vertices_final": report.vertices_final,
                "transfers": report.transfers,
                "unhappy": unhappy,
                "formula_mismatches": report.formula_mismatches,
            });
            Ok(outcome("discharge", inputs, exit, text, result))
        }
        Command::Gadget { graph, v1 } => {
            let g = load_graph(&graph, &mut inputs)?;
            if v1 >= g.n() {
                bail!("vertex {v1} is out of range for {} vertices", g.n());
            }
            let report = validate_sharpness_gadget(&g, v1);
            let mut text = String::new();
            for c in &report.checks {
                writeln!(text, "{} {} {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail).unwrap();
            }
            let exit = if report.passed() { 0 } else { 1 };
            Ok(outcome("gadget", inputs, exit, text, json!(report)))
        }
        Command::Fixtures { name, out_dir } => {
            let written = fixtures::write(name, &out_dir)?;
            let mut text = String::new();
            for w in &written {
                writeln!(text, "{}", w.display()).unwrap();
            }
            let paths: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
            Ok(outcome("fixtures", inputs, 0, text, json!({ "written": paths })))
        }
    }
}

fn outcome(command: &'static str, inputs: Vec<Input>, exit: u8, text: String, result: serde_json::Value) -> Outcome {
    Outcome { command, inputs, exit, text, result, wall_seconds: None }
}

fn opt(x: Option<u32>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn input_error(e: Error) -> anyhow::Error {
    anyhow::Error::new(e)
}

fn load_graph(path: &Path, inputs: &mut Vec<Input>) -> anyhow::Result<Graph> {
    let bytes = read_input(path, inputs)?;
    parse_edge_list(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_coloring(path: &Path, inputs: &mut Vec<Input>) -> anyhow::Result<Coloring> {
    let bytes = read_input(path, inputs)?;
    Coloring::parse(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn parse_spec(s: &str) -> anyhow::Result<PackingSpec> {
    s.parse().map_err(|e: Error| anyhow!("--spec {s}: {e}"))
}

/// `RECORD:i,j,...` or `i,j,...`.
fn parse_resume(s: &str) -> anyhow::Result<(usize, Option<Vec<u8>>)> {
    let (record, cursor) = match s.split_once(':') {
        Some((r, c)) => (r.trim().parse().with_context(|| format!("bad record in --resume {s}"))?, c),
        None => (0, s),
    };
    let cursor = if cursor.trim().is_empty() {
        Vec::new()
    } else {
        cursor
            .split(',')
            .map(|x| x.trim().parse::<u8>().with_context(|| format!("bad index `{x}` in --resume {s}")))
            .collect::<anyhow::Result<_>>()?
    };
    Ok((record, Some(cursor)))
}
