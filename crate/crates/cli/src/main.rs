//! `rslab`: build the extremal constructions, verify saturation verdicts,
//! run the census and regenerate the pass/fail tables.
//!
//! Exit codes: 0 established or true, 1 refuted or false, 2 bad input, 3
//! unknown (budget exhausted).

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rslab_core::constructions::{
    broom_gadget, broom_saturated, caterpillar_construction, double_star_construction, folded_cube,
    star_forest, DoubleStarVariant, GadgetBundle,
};
use rslab_core::engine::{
    is_properly_rainbow_saturated, is_saturated, is_semi_saturated, Status, DEFAULT_BUDGET,
};
use rslab_core::graph::{
    parse_graph_text, to_dot, to_graph6, ColouredGraphJson, Graph, GraphJson, PatternSpec,
};
use rslab_core::oracle::{
    census, CensusCache, CensusConfig, CensusRecord, CensusValue, Quantity, CACHE_ENV,
    CENSUS_BUDGET,
};
use rslab_core::reproduce::{run_suite, ReproduceConfig, Row, RowStatus, Suite};

/// `println!` that tolerates a closed stdout, as when piped into `head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

const EXIT_REFUTED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "rslab", version, about = "Proper rainbow saturation of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Graph6,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sat,
    Ssat,
    Prsat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Formulas,
    Constructions,
    Lemma4,
    Census,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Sat,
    Prsat,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the extremal graphs.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
    /// Decide sat, ssat or prsat for one graph.
    Verify {
        /// graph6 or JSON file; `-` reads standard input.
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: PatternSpec,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive census of sat, ssat or prsat over all graphs of order n.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: PatternSpec,
        #[arg(long)]
        quantity: Quantity,
        /// Per-graph node budget.
        #[arg(long, default_value_t = CENSUS_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        /// Worker threads; defaults to one per core.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        threads: Option<u64>,
        #[arg(long, env = CACHE_ENV)]
        cache_dir: Option<PathBuf>,
        /// Recompute and overwrite a cached record.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regenerate a pass/fail table.
    Reproduce {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Path length for the folded-cube suite (default: 4 and 5).
        #[arg(long)]
        ell: Option<usize>,
        /// Count rows whose search ran out of budget as passing.
        #[arg(long)]
        allow_unknown: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Folded cube carrying a rainbow-P_ell-free colouring.
    FoldedCube {
        #[arg(long)]
        ell: usize,
    },
    /// Triangle with m + 1 pendants per vertex and its colouring.
    BroomGadget {
        #[arg(long)]
        m: usize,
    },
    /// Properly rainbow B_{4,m}-saturated graph on n vertices.
    BroomSaturated {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Folded cube with pendants, for caterpillars T_{k,ell}.
    Caterpillar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// Disjoint stars K_{1,k} with a remainder clique.
    StarForest {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cliques joined to a centre, for double stars S_{t+1,s+1}.
    DoubleStar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Sat)]
        variant: VariantArg,
    },
}

/// A message for standard error and the exit code to return.
struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { family, format } => cmd_construct(family, format),
        Command::Verify {
            graph,
            pattern,
            mode,
            budget,
            format,
        } => cmd_verify(&graph, &pattern, mode, budget, format),
        Command::Oracle {
            n,
            pattern,
            quantity,
            budget,
            threads,
            cache_dir,
            force,
            format,
        } => {
            let config = CensusConfig {
                budget,
                threads: threads.unwrap_or(0) as usize,
            };
            cmd_oracle(n, &pattern, quantity, config, cache_dir, force, format)
        }
        Command::Reproduce {
            suite,
            ell,
            allow_unknown,
            budget,
            format,
        } => cmd_reproduce(suite, ell, allow_unknown, budget, format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json(v: &Value) {
    out!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn cmd_construct(family: Family, format: Format) -> Outcome {
    let built: Built = match family {
        Family::FoldedCube { ell } => folded_cube(ell).map(Into::into),
        Family::BroomGadget { m } => broom_gadget(m).map(Into::into),
        Family::BroomSaturated { n, m } => {
            broom_saturated(n, m).map(|g| Built::plain(g, format!("broom-saturated(n={n}, m={m})")))
        }
        Family::Caterpillar { n, k, ell } => caterpillar_construction(n, k, ell).map(Into::into),
        Family::StarForest { n, k } => {
            star_forest(n, k).map(|g| Built::plain(g, format!("star-forest(n={n}, k={k})")))
        }
        Family::DoubleStar { n, t, s, variant } => {
            let v = match variant {
                VariantArg::Sat => DoubleStarVariant::Sat,
                VariantArg::Prsat => DoubleStarVariant::Prsat,
            };
            double_star_construction(n, t, s, v).map(|g| {
                let name = if variant == VariantArg::Sat {
                    "sat"
                } else {
                    "prsat"
                };
                Built::plain(g, format!("double-star(n={n}, t={t}, s={s}, {name})"))
            })
        }
    }
    .map_err(input_error)?;
    let Built {
        graph,
        colours,
        provenance,
    } = built;
    match format {
        Format::Graph6 => out!("{}", to_graph6(&graph)),
        Format::Dot => out!("{}", to_dot(&graph, colours.as_deref()).trim_end()),
        Format::Json => {
            let body = match &colours {
                Some(c) => serde_json::to_value(ColouredGraphJson::new(&graph, c.clone())),
                None => serde_json::to_value(GraphJson::from(&graph)),
            }
            .expect("graph json serializes");
            let mut obj = json!({ "provenance": provenance, "edge_count": graph.edge_count() });
            if let Some(c) = &colours {
                obj["colour_count"] =
                    json!(c.iter().collect::<std::collections::BTreeSet<_>>().len());
            }
            obj["graph"] = body;
            print_json(&obj);
        }
        Format::Text => {
            out!(
                "{provenance}: {} vertices, {} edges",
                graph.n(),
                graph.edge_count()
            );
            out!("graph6 {}", to_graph6(&graph));
            if let Some(c) = &colours {
                let listed: Vec<String> = graph
                    .edges()
                    .iter()
                    .zip(c)
                    .map(|(&(u, v), col)| format!("{u}-{v}:{col}"))
                    .collect();
                out!("colouring {}", listed.join(" "));
            }
        }
    }
    Ok(0)
}

struct Built {
    graph: Graph,
    colours: Option<Vec<u32>>,
    provenance: String,
}

impl Built {
    fn plain(graph: Graph, provenance: String) -> Self {
        Built {
            graph,
            colours: None,
            provenance,
        }
    }
}

impl From<GadgetBundle> for Built {
    fn from(b: GadgetBundle) -> Self {
        let colours = Some(b.colours());
        Built {
            graph: b.graph,
            colours,
            provenance: b.provenance,
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(input_error)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?
    };
    parse_graph_text(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn text_or_json(format: Format) -> Result<(), Failure> {
    match format {
        Format::Text | Format::Json => Ok(()),
        _ => Err(input_error("this command prints text or json only")),
    }
}

fn status_code(status: Status) -> u8 {
    match status {
        Status::Established => 0,
        Status::Refuted => EXIT_REFUTED,
        Status::Unknown => EXIT_UNKNOWN,
    }
}

fn cmd_verify(
    path: &PathBuf,
    spec: &PatternSpec,
    mode: Mode,
    budget: u64,
    format: Format,
) -> Outcome {
    text_or_json(format)?;
    let g = read_graph(path)?;
    let h = spec.compile().map_err(input_error)?;
    let (status, detail) = match mode {
        Mode::Sat | Mode::Ssat => {
            let report = if mode == Mode::Sat {
                is_saturated(&g, &h)
            } else {
                is_semi_saturated(&g, &h)
            };
            let status = if report.holds {
                Status::Established
            } else {
                Status::Refuted
            };
            (status, serde_json::to_value(&report))
        }
        Mode::Prsat => {
            let v = is_properly_rainbow_saturated(&g, &h, budget);
            (v.status, serde_json::to_value(&v))
        }
    };
    let detail = detail.expect("verdicts serialize");
    let mode_name = match mode {
        Mode::Sat => "sat",
        Mode::Ssat => "ssat",
        Mode::Prsat => "prsat",
    };
    if format == Format::Json {
        print_json(&json!({
            "mode": mode_name,
            "pattern": spec.to_string(),
            "graph": GraphJson::from(&g),
            "status": status,
            "verdict": detail,
        }));
    } else {
        let status_word = serde_json::to_value(status).expect("status serializes");
        out!(
            "{mode_name} {spec}: {} ({} vertices, {} edges)",
            status_word.as_str().unwrap_or("?"),
            g.n(),
            g.edge_count()
        );
        if let Some(n) = detail.get("nodes_explored") {
            out!("nodes explored {n} of {budget}");
        }
        let witness = detail
            .get("certificate")
            .or_else(|| detail.get("witness"))
            .filter(|w| !w.is_null());
        if let Some(w) = witness {
            out!("certificate {w}");
        }
    }
    Ok(status_code(status))
}

fn cmd_oracle(
    n: usize,
    spec: &PatternSpec,
    quantity: Quantity,
    config: CensusConfig,
    cache_dir: Option<PathBuf>,
    force: bool,
    format: Format,
) -> Outcome {
    text_or_json(format)?;
    let h = spec.compile().map_err(input_error)?;
    let cache = cache_dir.map(CensusCache::new);
    let cached = match (&cache, force) {
        (Some(c), false) => c.lookup(n, &h, quantity).map_err(input_error)?,
        _ => None,
    };
    let from_cache = cached.is_some();
    let record = match cached {
        Some(r) => r,
        None => {
            let r = census(n, &h, quantity, config).map_err(input_error)?;
            if let Some(c) = &cache {
                c.store(&r, force).map_err(input_error)?;
            }
            r
        }
    };
    if format == Format::Json {
        let mut v = serde_json::to_value(&record).expect("records serialize");
        v["from_cache"] = json!(from_cache);
        print_json(&v);
    } else {
        print_record(&record, from_cache);
    }
    Ok(match record.value {
        CensusValue::Unknown { .. } => EXIT_UNKNOWN,
        _ => 0,
    })
}

fn print_record(r: &CensusRecord, from_cache: bool) {
    out!("{}({}, {}) = {}", r.quantity, r.n, r.pattern, r.value);
    out!(
        "witnesses {}, unresolved {}, graphs examined {}, nodes {}{}{}",
        r.witnesses.len(),
        r.unresolved.len(),
        r.total_graphs_examined,
        r.budget_used,
        if r.degenerate { ", degenerate" } else { "" },
        if from_cache { ", from cache" } else { "" },
    );
    for w in &r.witnesses {
        out!("witness {w}");
    }
    for w in &r.unresolved {
        out!("unresolved {w}");
    }
}

fn cmd_reproduce(
    suite: SuiteArg,
    ell: Option<usize>,
    allow_unknown: bool,
    budget: u64,
    format: Format,
) -> Outcome {
    text_or_json(format)?;
    let suites: Vec<Suite> = match suite {
        SuiteArg::Formulas => vec![Suite::Formulas],
        SuiteArg::Constructions => vec![Suite::Constructions],
        SuiteArg::Lemma4 => vec![Suite::Lemma4],
        SuiteArg::Census => vec![Suite::Census],
        SuiteArg::All => vec![
            Suite::Formulas,
            Suite::Constructions,
            Suite::Lemma4,
            Suite::Census,
        ],
    };
    let config = ReproduceConfig {
        budget,
        ell,
        ..Default::default()
    };
    let rows: Vec<Row> = suites
        .into_iter()
        .flat_map(|s| run_suite(s, &config))
        .collect();
    let failed = rows.iter().filter(|r| r.status == RowStatus::Fail).count();
    let unknown = rows
        .iter()
        .filter(|r| r.status == RowStatus::Unknown)
        .count();
    let passed = rows.iter().all(|r| r.passes(allow_unknown));
    if format == Format::Json {
        print_json(
            &json!({ "rows": rows, "failed": failed, "unknown": unknown, "passed": passed }),
        );
    } else {
        for r in &rows {
            out!(
                "{:<7} {} | expected {} | computed {}",
                r.status.to_string(),
                r.claim,
                r.expected,
                r.computed
            );
        }
        out!("{} rows: {failed} failed, {unknown} unknown", rows.len());
    }
    Ok(if passed {
        0
    } else if failed == 0 {
        EXIT_UNKNOWN
    } else {
        EXIT_REFUTED
    })
}
