//! Command-line front end: every library operation behind one binary with
//! JSON input and output.
//!
//! Arguments that expect JSON accept either an inline document or a file
//! path. Output is a single `CommandResult` envelope; the `enumerate` verb
//! additionally prints a plain-text grid unless `--json` is given. Exit
//! codes: 0 on success, 2 on validation errors, 3 on unsupported input.

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use rswf_core::cobordism::{check_closed, check_ineq1, check_ineq2_and_theorem_b, unoriented_bound};
use rswf_core::cw::{
    d_invariant, d_invariant_with_bound, dbar_dunder, dbar_dunder_with_bound, smash, GCWComplex,
    Group,
};
use rswf_core::froyshov::{delta_triple, DeltaTriple};
use rswf_core::links::{classical_invariants, LinkDesc};
use rswf_core::plumbing::{mubar, SeifertData};
use rswf_core::rat::{serde_wire, to_wire, Rat};
use rswf_core::surfaces::{classify_pairs, mo_delta_known_zero, Window};
use rswf_core::{Error, SurfaceCobordismData};

#[derive(Parser)]
#[command(name = "rswf", version, about = "exact invariants for links and equivariant complexes")]
struct Cli {
    /// Emit only the JSON envelope, suppressing any plain-text rendering.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature of a link descriptor.
    Signature { link: String },
    /// Determinant of a link descriptor.
    Determinant { link: String },
    /// Neumann-Siebenmann invariant of a Seifert homology sphere.
    Mubar { seifert: String },
    /// Delta invariant triple of a link descriptor.
    Delta { link: String },
    /// Equivariant complex operations.
    #[command(subcommand)]
    Cw(CwCommand),
    /// Inequality and obstruction evaluators.
    #[command(subcommand)]
    Obstruct(ObstructCommand),
    /// Classify (normal Euler number, first Betti number) pairs for a knot.
    Enumerate(EnumerateArgs),
    /// Built-in value tables.
    #[command(subcommand)]
    Tables(TablesCommand),
}

#[derive(Subcommand)]
enum CwCommand {
    /// d (order-two group) or dbar/dunder (order-four group) of a complex.
    Invariants {
        complex: String,
        /// Override the Borel truncation bound.
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Smash product of two complexes, with its invariants when defined.
    Smash {
        x: String,
        y: String,
        /// Override the Borel truncation bound.
        #[arg(long)]
        truncation: Option<u32>,
    },
}

#[derive(Subcommand)]
enum ObstructCommand {
    /// Closed four-manifold obstruction from characteristic numbers.
    Closed { data: String },
    /// Surface-cobordism inequalities between two links.
    Cobordism { data: String },
    /// Lower bound for the first Betti number of a bounding surface.
    Unoriented { data: String },
}

#[derive(Args)]
struct EnumerateArgs {
    knot: String,
    #[arg(long, allow_negative_numbers = true)]
    e_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    e_max: i64,
    #[arg(long)]
    h_max: i64,
    /// Negate the normal Euler number convention.
    #[arg(long)]
    flip_euler_sign: bool,
    /// Assert that the Manolescu-Owens invariant of the knot vanishes.
    #[arg(long)]
    mo_delta_zero: bool,
}

#[derive(Subcommand)]
enum TablesCommand {
    /// Delta triples of the supported Montesinos family, diffed against the
    /// plumbing pipeline.
    Montesinos {
        /// Range of the family index, e.g. "1..4" or "2".
        #[arg(long, default_value = "1..4")]
        k: String,
    },
    /// Neumann-Siebenmann values for Sigma(2,3,q).
    Brieskorn {
        #[arg(long, default_value_t = 49)]
        q_max: u64,
    },
}

#[derive(Serialize)]
struct ProvenanceEntry {
    value: String,
    tag: String,
}

#[derive(Serialize)]
struct CommandResult {
    status: &'static str,
    payload: Value,
    provenance_log: Vec<ProvenanceEntry>,
}

fn prov(value: &str, tag: &str) -> ProvenanceEntry {
    ProvenanceEntry {
        value: value.into(),
        tag: tag.into(),
    }
}

/// Inline JSON if the argument looks like a document, file contents
/// otherwise.
fn read_payload(arg: &str) -> Result<String, Error> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') || trimmed.starts_with('"') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Error::Validation(format!("cannot read {arg}: {e}")))
    }
}

fn parse_json<T: DeserializeOwned>(arg: &str) -> Result<T, Error> {
    let text = read_payload(arg)?;
    serde_json::from_str(&text).map_err(|e| Error::Validation(format!("malformed JSON: {e}")))
}

#[derive(Deserialize)]
struct ClosedInput {
    #[serde(with = "serde_wire")]
    c1_sq: Rat,
    sigma: i64,
    bplus: i64,
    bplus_inv: i64,
}

#[derive(Deserialize)]
struct CobordismInput {
    data: SurfaceCobordismData,
    source: LinkDesc,
    target: LinkDesc,
}

#[derive(Deserialize)]
struct UnorientedInput {
    link: LinkDesc,
    e: i64,
    #[serde(default)]
    mo_delta_zero: bool,
}

fn family_tag(link: &LinkDesc) -> &'static str {
    match link.unmarked() {
        LinkDesc::Unknot => "trivial",
        LinkDesc::Torus(..) => "counting-formula",
        LinkDesc::TwoBridge(..) => "goeritz-form",
        LinkDesc::Montesinos236(..) => "table",
        LinkDesc::SeifertMatrix(..) | LinkDesc::GoeritzMatrix { .. } => "matrix",
        LinkDesc::ConnectedSum(..) | LinkDesc::Mirror(..) | LinkDesc::Marked { .. } => "recursive",
    }
}

fn triple_payload(triple: &DeltaTriple) -> Value {
    serde_json::to_value(triple).expect("serializable report")
}

fn cw_invariants_payload(x: &GCWComplex, truncation: Option<u32>) -> Result<Value, Error> {
    match x.group {
        Group::Z2 => {
            let d = match truncation {
                Some(n) => d_invariant_with_bound(x, n)?,
                None => d_invariant(x)?,
            };
            Ok(json!({ "d": d }))
        }
        Group::Z4 => {
            let (dbar, dunder) = match truncation {
                Some(n) => dbar_dunder_with_bound(x, n)?,
                None => dbar_dunder(x)?,
            };
            Ok(json!({ "dbar": dbar, "dunder": dunder }))
        }
    }
}

fn parse_k_range(spec: &str) -> Result<(u64, u64), Error> {
    let err = || Error::Validation(format!("k range must be \"a..b\" or \"a\", got {spec:?}"));
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo.parse().map_err(|_| err())?;
        let hi: u64 = hi.parse().map_err(|_| err())?;
        if lo == 0 || hi < lo {
            return Err(err());
        }
        Ok((lo, hi))
    } else {
        let k: u64 = spec.parse().map_err(|_| err())?;
        if k == 0 {
            return Err(err());
        }
        Ok((k, k))
    }
}

fn run(cli: &Cli) -> Result<(CommandResult, Option<String>), Error> {
    match &cli.command {
        Command::Signature { link } => {
            let link: LinkDesc = parse_json(link)?;
            let sigma = rswf_core::links::link_signature(&link)?;
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({ "signature": sigma }),
                    provenance_log: vec![prov("signature", family_tag(&link))],
                },
                None,
            ))
        }
        Command::Determinant { link } => {
            let link: LinkDesc = parse_json(link)?;
            let det = rswf_core::links::link_determinant(&link)?;
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({ "determinant": det }),
                    provenance_log: vec![prov("determinant", family_tag(&link))],
                },
                None,
            ))
        }
        Command::Mubar { seifert } => {
            let data: SeifertData = parse_json(seifert)?;
            let value = mubar(&data)?;
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({ "mubar": to_wire(&value) }),
                    provenance_log: vec![prov("mubar", "plumbing")],
                },
                None,
            ))
        }
        Command::Delta { link } => {
            let link: LinkDesc = parse_json(link)?;
            let triple = delta_triple(&link)?;
            let tag = triple.provenance.clone();
            Ok((
                CommandResult {
                    status: "ok",
                    payload: triple_payload(&triple),
                    provenance_log: vec![prov("delta", &tag)],
                },
                None,
            ))
        }
        Command::Cw(CwCommand::Invariants {
            complex,
            truncation,
        }) => {
            let x: GCWComplex = parse_json(complex)?;
            let payload = cw_invariants_payload(&x, *truncation)?;
            Ok((
                CommandResult {
                    status: "ok",
                    payload,
                    provenance_log: vec![prov("invariants", "computed")],
                },
                None,
            ))
        }
        Command::Cw(CwCommand::Smash { x, y, truncation }) => {
            let x: GCWComplex = parse_json(x)?;
            let y: GCWComplex = parse_json(y)?;
            let product = smash(&x, &y)?;
            let (invariants, invariants_error) = match cw_invariants_payload(&product, *truncation)
            {
                Ok(v) => (v, Value::Null),
                Err(e) => (Value::Null, Value::String(e.to_string())),
            };
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({
                        "reduced_cells": product.reduced_cell_count(),
                        "dimension": product.dimension(),
                        "level": product.level,
                        "invariants": invariants,
                        "invariants_error": invariants_error,
                        "complex": serde_json::to_value(&product)
                            .expect("serializable complex"),
                    }),
                    provenance_log: vec![prov("smash", "computed")],
                },
                None,
            ))
        }
        Command::Obstruct(ObstructCommand::Closed { data }) => {
            let input: ClosedInput = parse_json(data)?;
            let report = check_closed(&input.c1_sq, input.sigma, input.bplus, input.bplus_inv);
            Ok((
                CommandResult {
                    status: "ok",
                    payload: serde_json::to_value(&report).expect("serializable report"),
                    provenance_log: vec![prov("closed-obstruction", "computed")],
                },
                None,
            ))
        }
        Command::Obstruct(ObstructCommand::Cobordism { data }) => {
            let input: CobordismInput = parse_json(data)?;
            let source = delta_triple(&input.source)?;
            let target = delta_triple(&input.target)?;
            let (ineq1, ineq1_error) =
                match check_ineq1(&input.data, &source.delta, &target.delta) {
                    Ok(r) => (serde_json::to_value(&r).expect("serializable report"), Value::Null),
                    Err(e) => (Value::Null, Value::String(e.to_string())),
                };
            let (ineq2, ineq2_error) =
                match check_ineq2_and_theorem_b(&input.data, &source, &target) {
                    Ok(r) => (serde_json::to_value(&r).expect("serializable report"), Value::Null),
                    Err(e) => (Value::Null, Value::String(e.to_string())),
                };
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({
                        "source": triple_payload(&source),
                        "target": triple_payload(&target),
                        "ineq1": ineq1,
                        "ineq1_error": ineq1_error,
                        "ineq2": ineq2,
                        "ineq2_error": ineq2_error,
                    }),
                    provenance_log: vec![
                        prov("source-delta", &source.provenance.clone()),
                        prov("target-delta", &target.provenance.clone()),
                        prov("inequalities", "computed"),
                    ],
                },
                None,
            ))
        }
        Command::Obstruct(ObstructCommand::Unoriented { data }) => {
            let input: UnorientedInput = parse_json(data)?;
            let inv = classical_invariants(&input.link)?;
            let triple = delta_triple(&input.link)?;
            let mo = input.mo_delta_zero || mo_delta_known_zero(&input.link);
            let report = unoriented_bound(inv.signature, input.e, &triple.delta, inv.determinant, mo)?;
            Ok((
                CommandResult {
                    status: "ok",
                    payload: serde_json::to_value(&report).expect("serializable report"),
                    provenance_log: vec![
                        prov("delta", &triple.provenance.clone()),
                        prov("bound", "computed"),
                    ],
                },
                None,
            ))
        }
        Command::Enumerate(args) => {
            let link: LinkDesc = parse_json(&args.knot)?;
            let window = Window {
                e_min: args.e_min,
                e_max: args.e_max,
                h_max: args.h_max,
            };
            let sign = if args.flip_euler_sign { -1 } else { 1 };
            let region = classify_pairs(&link, window, args.mo_delta_zero, sign)?;
            let grid = if cli.json { None } else { Some(region.grid()) };
            Ok((
                CommandResult {
                    status: "ok",
                    payload: serde_json::to_value(&region).expect("serializable region"),
                    provenance_log: vec![prov("classification", "calibrated-convention")],
                },
                grid,
            ))
        }
        Command::Tables(TablesCommand::Montesinos { k }) => {
            let (lo, hi) = parse_k_range(k)?;
            let mut rows = Vec::new();
            for k in lo..=hi {
                for offset in [-5i64, -1, 1, 5] {
                    let q = (12 * k as i64 + offset) as u64;
                    let reference = delta_triple(&LinkDesc::Montesinos236(q))?;
                    let pipeline = -mubar(&SeifertData::new(vec![2, 3, q])?)? / rswf_core::rat::rat_int(2);
                    let matches = reference.dbar.as_ref() == Some(&pipeline)
                        && reference.delta == pipeline
                        && reference.dunder.as_ref() == Some(&pipeline);
                    rows.push(json!({
                        "k": k,
                        "q": q,
                        "reference": triple_payload(&reference),
                        "pipeline_delta": to_wire(&pipeline),
                        "matches_pipeline": matches,
                    }));
                }
            }
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({ "rows": rows }),
                    provenance_log: vec![
                        prov("reference", "table"),
                        prov("pipeline", "family-formula"),
                    ],
                },
                None,
            ))
        }
        Command::Tables(TablesCommand::Brieskorn { q_max }) => {
            let mut rows = Vec::new();
            let mut q = 5u64;
            while q <= *q_max {
                if q % 2 != 0 && q % 3 != 0 {
                    let m = mubar(&SeifertData::new(vec![2, 3, q])?)?;
                    let delta = -&m / rswf_core::rat::rat_int(2);
                    rows.push(json!({
                        "q": q,
                        "mubar": to_wire(&m),
                        "delta": to_wire(&delta),
                    }));
                }
                q += 2;
            }
            Ok((
                CommandResult {
                    status: "ok",
                    payload: json!({ "rows": rows }),
                    provenance_log: vec![prov("mubar", "plumbing")],
                },
                None,
            ))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let (result, trailer, code) = match run(&cli) {
        Ok((result, trailer)) => (result, trailer, 0),
        Err(e) => {
            let status = match e {
                Error::Unsupported(_) => "unsupported",
                Error::Validation(_) | Error::Internal(_) => "validation-error",
            };
            let code = match e {
                Error::Unsupported(_) => 3,
                Error::Validation(_) | Error::Internal(_) => 2,
            };
            (
                CommandResult {
                    status,
                    payload: json!({ "error": e.to_string() }),
                    provenance_log: Vec::new(),
                },
                None,
                code,
            )
        }
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&result).expect("serializable envelope")
    );
    if let Some(text) = trailer {
        print!("{text}");
    }
    std::process::exit(code);
}
