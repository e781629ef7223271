//! Command line front end: batch invariant computation, positivity
//! obstruction reports, braiding, reduction moves, Whitehead doubles,
//! verification suites over generated corpora, and format conversion.
//!
//! Exit codes: 0 success, 1 check failure, 2 input error.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use knots::codes::{
    parse_diagram, to_braid_text, to_conway_text, to_dt_text, to_gauss_text, to_pd_text, Format,
    Presentation,
};
use knots::gauss::{structural_checks, GaussDiagram};
use knots::moves::{reduce_diagram, trivialize_by_loops, whitehead_double};
use knots::positivity::{
    braid_positivity_obstructions, decide_braid_positive, generate_positive_corpus, knot_data,
    positive_diagram_suite, positivity_obstructions, BraidPositivity, Verdict, ALL_FAMILIES,
};
use knots::poly::bracket::{jones, vassiliev_from_jones};
use knots::surfaces::{braid_bounds, markov_reduce_positive, seifert_decomposition, vogel_braiding};
use knots::vassiliev::{v2_gauss, v3_gauss};
use knots::KnotError;

#[derive(Parser)]
#[command(name = "knots", version, about = "Knot diagram invariants and positivity obstructions")]
struct Cli {
    /// Skein recursion / braid search budget
    #[arg(long, global = true, env = "KNOTS_BUDGET", default_value_t = 16)]
    budget: usize,
    /// Emit JSON records instead of human-readable lines
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// v2, v3, Jones, HOMFLY, Conway/Alexander, signature and Seifert data
    Invariants(InputArgs),
    /// Positivity and braid-positivity obstruction reports
    Positivity(PositivityArgs),
    /// Vogel braiding, Markov reduction and braid bounds
    Braid(InputArgs),
    /// Reduction moves (default) or loop-move trivialization with traces
    Moves(MovesArgs),
    /// Whitehead double with its invariant checks
    Double(DoubleArgs),
    /// Theorem suites over a generated positive corpus or an ingested table
    Verify(VerifyArgs),
    /// Convert between presentation formats
    Convert(ConvertArgs),
}

#[derive(Args)]
struct InputArgs {
    /// One presentation per argument (or per line with --file)
    #[arg(required_unless_present = "file")]
    inputs: Vec<String>,
    /// Read presentations from a file, one per line, '#' comments
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// pd | dt | gauss | braid | conway | name (fixture or table lookup)
    #[arg(long, default_value = "gauss")]
    format: String,
}

#[derive(Args)]
struct PositivityArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also run the bounded braid-positivity decision search
    #[arg(long)]
    decide: bool,
}

#[derive(Args)]
struct MovesArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Loop-move trivialization instead of bireduction
    #[arg(long)]
    loops: bool,
}

#[derive(Args)]
struct DoubleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Clasp sign: 1 or -1
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    clasp: i8,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Corpus size; 0 is a vacuous pass
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    min_size: usize,
    #[arg(long, default_value_t = 16)]
    max_size: usize,
    /// Run the identity suite over an external DT table instead
    #[arg(long)]
    table: Option<std::path::PathBuf>,
    /// Test-harness fault: flip the sign in the mirror-antisymmetry check
    #[arg(long, hide = true)]
    inject_v3_sign_fault: bool,
}

#[derive(Args)]
struct ConvertArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Target: pd | dt | gauss | braid | conway
    #[arg(long)]
    to: String,
}

fn gather(input: &InputArgs) -> Result<Vec<String>, KnotError> {
    let mut texts = input.inputs.clone();
    if let Some(path) = &input.file {
        let body = std::fs::read_to_string(path)
            .map_err(|e| KnotError::parse(0, format!("{}: {e}", path.display())))?;
        for (ln, line) in body.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let _ = ln;
            texts.push(line.to_string());
        }
    }
    Ok(texts)
}

fn presentation(format: &str, text: &str) -> Result<Presentation, KnotError> {
    if format.eq_ignore_ascii_case("name") {
        if let Ok(d) = knots::fixtures::diagram(text) {
            return Ok(Presentation::Planar(d));
        }
        return knots::fixtures::table_diagram(text)
            .map(Presentation::Planar)
            .ok_or_else(|| KnotError::parse(0, format!("unknown knot name '{text}'")));
    }
    let f: Format = format.parse()?;
    parse_diagram(f, text)
}

fn to_gauss(p: &Presentation) -> Result<GaussDiagram, KnotError> {
    match p {
        Presentation::Gauss(g) => Ok(g.clone()),
        other => other.diagram()?.to_gauss(),
    }
}

/// Per-input batch driver: prints one record per input, isolates failures,
/// and returns the exit code (2 if any input failed).
fn batch<F>(input: &InputArgs, mut run: F) -> i32
where
    F: FnMut(usize, &str, Presentation) -> Result<i32, KnotError>,
{
    let texts = match gather(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let mut code = 0;
    for (i, text) in texts.iter().enumerate() {
        let item = presentation(&input.format, text).and_then(|p| run(i, text, p));
        match item {
            Ok(c) => code = code.max(c),
            Err(e) => {
                eprintln!("input {}: error: {e}", i + 1);
                code = 2;
            }
        }
    }
    code
}

fn verdict_str(v: knots::positivity::Overall) -> &'static str {
    match v {
        knots::positivity::Overall::NotPositive => "not-positive",
        knots::positivity::Overall::NotBraidPositive => "not-braid-positive",
        knots::positivity::Overall::Consistent => "consistent",
    }
}

fn run_invariants(cli: &Cli, input: &InputArgs) -> i32 {
    batch(input, |i, text, p| {
        let d = p.diagram()?;
        let data = knot_data(&d)?;
        let s = seifert_decomposition(&d);
        let min_v = data.jones.min_deg().map(|d| d.to_string()).unwrap_or_default();
        if cli.json {
            println!(
                "{}",
                json!({
                    "input": text,
                    "crossings": data.crossing_count,
                    "v2": data.v2,
                    "v3": data.v3,
                    "minDegV": min_v,
                    "jones": data.jones.to_string(),
                    "homfly": data.homfly.to_string(),
                    "conway": data.conway.to_string(),
                    "alexander": data.alexander.to_string(),
                    "signature": data.signature,
                    "seifert": {
                        "circles": s.circle_count,
                        "writhe": s.writhe,
                        "genus": s.canonical_genus(),
                    },
                })
            );
        } else {
            println!(
                "#{n} c={c} v2={v2} v3={v3} sig={sig} minDegV={min_v} g_can={g} | V = {v} | P = {p} | nabla = {cw}",
                n = i + 1,
                c = data.crossing_count,
                v2 = data.v2,
                v3 = data.v3,
                sig = data.signature,
                g = s.canonical_genus(),
                v = data.jones,
                p = data.homfly,
                cw = data.conway,
            );
        }
        Ok(0)
    })
}

fn run_positivity(cli: &Cli, args: &PositivityArgs) -> i32 {
    batch(&args.input, |i, text, p| {
        let d = p.diagram()?;
        let data = knot_data(&d)?;
        let pos = positivity_obstructions(&data);
        let bp = braid_positivity_obstructions(&data);
        let decision = if args.decide {
            Some(decide_braid_positive(&d, cli.budget)?)
        } else {
            None
        };
        if cli.json {
            println!(
                "{}",
                json!({
                    "input": text,
                    "positivity": pos,
                    "braid_positivity": bp,
                    "decision": decision,
                })
            );
        } else {
            println!(
                "#{n} positivity: {pv} {pw:?} | braid positivity: {bv} {bw:?}",
                n = i + 1,
                pv = verdict_str(pos.overall),
                pw = pos.violated(),
                bv = verdict_str(bp.overall),
                bw = bp.violated(),
            );
            match decision {
                Some(BraidPositivity::Yes { witness }) => {
                    println!("  braid positive: yes, witness {}", to_braid_text(&witness))
                }
                Some(BraidPositivity::No { reason, .. }) => {
                    println!("  braid positive: no ({reason})")
                }
                Some(BraidPositivity::Unknown { reason }) => {
                    println!("  braid positive: unknown ({reason})")
                }
                None => {}
            }
        }
        Ok(0)
    })
}

fn run_braid(cli: &Cli, input: &InputArgs) -> i32 {
    batch(input, |i, text, p| {
        let d = p.diagram()?;
        let v = vogel_braiding(&d)?;
        let reduced = if v.braid.is_positive() {
            Some(markov_reduce_positive(&v.braid)?)
        } else {
            None
        };
        let bounds = if v.braid.is_positive() { Some(braid_bounds(&v.braid)?) } else { None };
        if cli.json {
            println!(
                "{}",
                json!({
                    "input": text,
                    "braid": to_braid_text(&v.braid),
                    "vogel_moves": v.move_count,
                    "markov_reduced": reduced.as_ref().map(to_braid_text),
                    "bounds": bounds,
                })
            );
        } else {
            print!(
                "#{n} braid {b} (after {m} Vogel moves)",
                n = i + 1,
                b = to_braid_text(&v.braid),
                m = v.move_count
            );
            if let Some(r) = &reduced {
                print!(" | Markov-reduced {}", to_braid_text(r));
            }
            if let Some(b) = &bounds {
                print!(
                    " | minDegV = {} thm4 >= {} v2 >= {}",
                    b.min_deg_v_formula, b.thm4_bound, b.thv2bp_bound
                );
            }
            println!();
        }
        Ok(0)
    })
}

fn run_moves(cli: &Cli, args: &MovesArgs) -> i32 {
    batch(&args.input, |i, text, p| {
        let g = to_gauss(&p)?;
        if args.loops {
            let r = trivialize_by_loops(&g)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "input": text,
                        "switches": r.total_switches,
                        "moves": r.trace.entries,
                    })
                );
            } else {
                println!(
                    "#{n} unknotted with {s} switches over {m} loop moves",
                    n = i + 1,
                    s = r.total_switches,
                    m = r.trace.entries.len()
                );
            }
        } else {
            let r = reduce_diagram(&g)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "input": text,
                        "crossings": r.result.len(),
                        "trace": r.trace,
                    })
                );
            } else {
                println!(
                    "#{n} reduced {a} -> {b} crossings in {m} moves",
                    n = i + 1,
                    a = g.len(),
                    b = r.result.len(),
                    m = r.trace.entries.len()
                );
            }
        }
        Ok(0)
    })
}

fn run_double(cli: &Cli, args: &DoubleArgs) -> i32 {
    batch(&args.input, |i, text, p| {
        let d = p.diagram()?;
        let v2_companion = v2_gauss(&d.to_gauss()?)?;
        let w = whitehead_double(&d, args.clasp)?;
        let g = w.to_gauss()?;
        let (v2, v3) = (v2_gauss(&g)?, v3_gauss(&g)?);
        let expect_v3 = args.clasp as i64 * 8 * v2_companion;
        let ok = v2 == 0 && v3 == expect_v3;
        if cli.json {
            println!(
                "{}",
                json!({
                    "input": text,
                    "clasp": args.clasp,
                    "crossings": w.crossing_count(),
                    "v2": v2,
                    "v3": v3,
                    "v3_expected": expect_v3,
                    "ok": ok,
                })
            );
        } else {
            println!(
                "#{n} double has {c} crossings, v2 = {v2}, v3 = {v3} (expected {e}): {s}",
                n = i + 1,
                c = w.crossing_count(),
                e = expect_v3,
                s = if ok { "ok" } else { "FAIL" }
            );
        }
        Ok(if ok { 0 } else { 1 })
    })
}

struct SuiteTally {
    name: &'static str,
    pass: usize,
    fail: usize,
    first_counterexample: Option<String>,
}

impl SuiteTally {
    fn new(name: &'static str) -> Self {
        SuiteTally { name, pass: 0, fail: 0, first_counterexample: None }
    }

    fn record(&mut self, ok: bool, witness: impl Fn() -> String) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(witness());
            }
        }
    }
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> i32 {
    let mut suites: Vec<SuiteTally> = Vec::new();
    if let Some(path) = &args.table {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        };
        let table = match knots::fixtures::parse_dt_table(&text) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        };
        let mut identity = SuiteTally::new("gauss-sums-match-jones-derivatives");
        let mut structural = SuiteTally::new("structural-checks");
        for (name, d) in &table {
            let ok = (|| -> Result<bool, KnotError> {
                let g = d.to_gauss()?;
                let s = structural_checks(&g);
                structural.record(s.even_valence && s.double_connectivity, || name.clone());
                let (v2j, v3j) = vassiliev_from_jones(&jones(d)?)?;
                Ok(v2_gauss(&g)? == v2j && v3_gauss(&g)? == v3j)
            })()
            .unwrap_or(false);
            identity.record(ok, || name.clone());
        }
        suites.push(identity);
        suites.push(structural);
    } else {
        let corpus = generate_positive_corpus(
            args.seed,
            args.count,
            (args.min_size, args.max_size),
            &ALL_FAMILIES,
        );
        let mut theorems = SuiteTally::new("positive-diagram-theorems");
        let mut loops = SuiteTally::new("loop-move-accounting");
        let mut mirror = SuiteTally::new("v3-mirror-antisymmetry");
        for e in &corpus {
            let tag = || e.construction.clone();
            match positive_diagram_suite(&e.diagram) {
                Ok(entries) => {
                    for en in entries.iter().filter(|en| en.verdict != Verdict::Inapplicable) {
                        theorems.record(en.verdict == Verdict::Passes, || {
                            format!("{}: {} {}", e.construction, en.name, en.detail)
                        });
                    }
                }
                Err(_) => theorems.record(false, tag),
            }
            let ok = (|| -> Result<bool, KnotError> {
                let g = e.diagram.to_gauss()?;
                let r = trivialize_by_loops(&g)?;
                let v2 = v2_gauss(&g)?;
                let c = g.len() as i64;
                Ok(5 * v2 >= c + r.total_switches as i64
                    && r.total_switches as i64 >= e.canonical_genus)
            })()
            .unwrap_or(false);
            loops.record(ok, tag);
            let ok = (|| -> Result<bool, KnotError> {
                let g = e.diagram.to_gauss()?;
                let expected = if args.inject_v3_sign_fault {
                    v3_gauss(&g)?
                } else {
                    -v3_gauss(&g)?
                };
                Ok(v3_gauss(&g.mirror())? == expected)
            })()
            .unwrap_or(false);
            mirror.record(ok, tag);
        }
        suites.push(theorems);
        suites.push(loops);
        suites.push(mirror);
    }
    let mut failed = false;
    for s in &suites {
        failed |= s.fail > 0;
        if cli.json {
            println!(
                "{}",
                json!({
                    "suite": s.name,
                    "pass": s.pass,
                    "fail": s.fail,
                    "first_counterexample": s.first_counterexample,
                })
            );
        } else {
            match &s.first_counterexample {
                Some(w) => println!("{}: {} passed, {} FAILED (first: {w})", s.name, s.pass, s.fail),
                None => println!("{}: {} passed", s.name, s.pass),
            }
        }
    }
    if failed {
        1
    } else {
        0
    }
}

fn run_convert(args: &ConvertArgs) -> i32 {
    batch(&args.input, |_, _, p| {
        let out = match args.to.to_ascii_lowercase().as_str() {
            "pd" => to_pd_text(&p.diagram()?)?,
            "dt" => to_dt_text(&p.diagram()?)?,
            "gauss" => to_gauss_text(&to_gauss(&p)?)?,
            "braid" => match &p {
                Presentation::Braid(b) => to_braid_text(b),
                other => to_braid_text(&vogel_braiding(&other.diagram()?)?.braid),
            },
            "conway" => match &p {
                Presentation::Conway(t) => to_conway_text(t),
                _ => {
                    return Err(KnotError::parse(
                        0,
                        "conversion to conway is only defined from conway input",
                    ))
                }
            },
            other => return Err(KnotError::parse(0, format!("unknown target format '{other}'"))),
        };
        println!("{out}");
        Ok(0)
    })
}

fn main() {
    let cli = Cli::parse();
    let code = match &cli.cmd {
        Cmd::Invariants(input) => run_invariants(&cli, input),
        Cmd::Positivity(args) => run_positivity(&cli, args),
        Cmd::Braid(input) => run_braid(&cli, input),
        Cmd::Moves(args) => run_moves(&cli, args),
        Cmd::Double(args) => run_double(&cli, args),
        Cmd::Verify(args) => run_verify(&cli, args),
        Cmd::Convert(args) => run_convert(args),
    };
    std::process::exit(code);
}
