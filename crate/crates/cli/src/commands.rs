//! The subcommands. Each returns human-readable text together with a
//! [`RunReport`]; the binary decides which one to print.

use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use brauerkit::brauer::{
    algebra_of_brauer_graph, classify_graph, gamma_of_gentle, predicted_count, tau_tilting_finite,
    BrauerGraph, ConstructionError, CountStatus, FormulaTag,
};
use brauerkit::gentle::check_gentle;
use brauerkit::presentation::Presentation;
use brauerkit::stt::{
    enumerate_stt_pairs, hasse_quiver, CountReport, SttError, SttOptions, DEFAULT_MAX_STRINGS,
};
use brauerkit::Algebra;
use serde_json::json;

use crate::input::{bind, load, Input, Loaded};
use crate::report::RunReport;
use crate::verify::{all_passed, render_table, run_suite, Level};
use crate::CliError;

pub struct Output {
    pub text: String,
    pub report: RunReport,
    /// Exit code for a run that completed but did not succeed.
    pub code: u8,
}

fn finish(command: &str, loaded: Option<&Loaded>, outcome: serde_json::Value, start: Instant, text: String) -> Output {
    Output {
        text,
        report: RunReport {
            command: command.to_string(),
            input_digest: loaded.map(|l| l.digest.clone()),
            outcome,
            elapsed_ms: start.elapsed().as_millis() as u64,
            seed: None,
        },
        code: 0,
    }
}

fn construction_error(e: ConstructionError) -> CliError {
    match e {
        ConstructionError::SelfFolded { .. } => CliError::Unsupported(format!(
            "{e}; Brauer graphs with loop edges are outside the supported class"
        )),
        ConstructionError::NotGentle(report) => {
            CliError::Validation(format!("presentation is not gentle\n{report}"))
        }
        other => CliError::Validation(other.to_string()),
    }
}

/// The Brauer graph of a gentle presentation.
fn gamma(pres: &Presentation) -> Result<(Algebra, BrauerGraph), CliError> {
    let a = bind(pres.clone())?;
    let g = gamma_of_gentle(&a).map_err(construction_error)?;
    Ok((a, g))
}

pub fn validate(path: &FsPath) -> Result<Output, CliError> {
    let start = Instant::now();
    let loaded = load(path)?;
    let (text, outcome) = match &loaded.input {
        Input::Presentation(p) => {
            let a = bind(p.clone())?;
            let report = check_gentle(&a);
            let text = format!(
                "valid presentation: {} vertices, {} arrows, dimension {}\n{report}",
                p.vertex_count(),
                p.quiver().arrow_count(),
                a.dimension()
            );
            let outcome = json!({
                "format": "presentation",
                "vertices": p.vertex_count(),
                "arrows": p.quiver().arrow_count(),
                "dimension": a.dimension(),
                "report": report,
            });
            (text, outcome)
        }
        Input::Graph(g) => {
            let class = classify_graph(g);
            let text = format!(
                "valid Brauer graph: {} vertices, {} edges\nclass: {class}\n",
                g.vertex_count(),
                g.edge_count()
            );
            let outcome = json!({
                "format": "brauer-graph",
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "class": class,
            });
            (text, outcome)
        }
    };
    Ok(finish("validate", Some(&loaded), outcome, start, text))
}

pub fn trivext(path: &FsPath, dot: Option<&FsPath>) -> Result<Output, CliError> {
    let start = Instant::now();
    let loaded = load(path)?;
    let Input::Presentation(p) = &loaded.input else {
        return Err(CliError::Validation("trivext expects a gentle presentation".into()));
    };
    let (a, g) = gamma(p)?;
    let t_pres = algebra_of_brauer_graph(&g);
    let t = bind(t_pres.clone())?;
    let c = a.cartan();
    let expected = c.add(&c.transpose());
    let dim_ok = t.dimension() == 2 * a.dimension();
    let cartan_ok = t.cartan().relabeled(&expected.labels) == Some(expected);
    if let Some(dot_path) = dot {
        write_file(dot_path, &g.to_dot())?;
    }
    let text = format!(
        "# Brauer graph\n{}\n# trivial extension\n{}\ndim A = {}, dim T(A) = {} ({})\nCartan T(A) = C + C^T: {}\n",
        g.to_text(),
        t_pres.to_text(),
        a.dimension(),
        t.dimension(),
        if dim_ok { "ok" } else { "MISMATCH" },
        if cartan_ok { "ok" } else { "MISMATCH" },
    );
    let outcome = json!({
        "graph": g.to_text(),
        "presentation": t_pres.to_text(),
        "dim_a": a.dimension(),
        "dim_t": t.dimension(),
        "dimension_identity": dim_ok,
        "cartan_identity": cartan_ok,
    });
    Ok(finish("trivext", Some(&loaded), outcome, start, text))
}

pub fn classify(path: &FsPath) -> Result<Output, CliError> {
    let start = Instant::now();
    let loaded = load(path)?;
    let g = match &loaded.input {
        Input::Graph(g) => g.clone(),
        Input::Presentation(p) => gamma(p)?.1,
    };
    let class = classify_graph(&g);
    let finite = tau_tilting_finite(&g);
    let prediction = predicted_count(&g);
    let count = match prediction.status {
        CountStatus::KnownCount(c) => c.to_string(),
        CountStatus::Infinite => "-".to_string(),
        CountStatus::FiniteUnknown => "unknown".to_string(),
    };
    let text = format!(
        "class: {class}\nτ-tilting finite: {finite}\npredicted count: {count} ({:?})\n",
        prediction.formula
    );
    let outcome = json!({
        "class": class,
        "tau_tilting_finite": finite,
        "prediction": prediction,
    });
    Ok(finish("classify", Some(&loaded), outcome, start, text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SttMode {
    Count,
    List,
    Hasse,
}

#[derive(Clone, Debug)]
pub struct SttArgs {
    pub mode: SttMode,
    pub max_strings: usize,
    pub max_string_len: Option<usize>,
    pub dot: Option<PathBuf>,
    /// Replace a gentle input by its trivial extension first.
    pub trivext: bool,
}

impl Default for SttArgs {
    fn default() -> Self {
        SttArgs {
            mode: SttMode::Count,
            max_strings: DEFAULT_MAX_STRINGS,
            max_string_len: None,
            dot: None,
            trivext: false,
        }
    }
}

fn write_file(path: &FsPath, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn stt(path: &FsPath, args: &SttArgs) -> Result<Output, CliError> {
    let start = Instant::now();
    let loaded = load(path)?;
    let (pres, graph) = match &loaded.input {
        Input::Graph(g) => (algebra_of_brauer_graph(g), Some(g.clone())),
        Input::Presentation(p) if args.trivext => {
            let g = gamma(p)?.1;
            (algebra_of_brauer_graph(&g), Some(g))
        }
        Input::Presentation(p) => (p.clone(), None),
    };
    let alg = Arc::new(bind(pres)?);
    let prediction = graph.as_ref().map(predicted_count);
    let opts = SttOptions {
        max_strings: args.max_strings,
        max_string_len: args.max_string_len,
    };
    let run = enumerate_stt_pairs(alg, opts).map_err(|e| match e {
        SttError::NotSpecialBiserial(r) => CliError::Validation(format!("not special biserial\n{r}")),
        SttError::Infinite { .. } | SttError::PresumedInfinite { .. } | SttError::StringCap { .. } => {
            let cycles = graph
                .as_ref()
                .map(|g| {
                    let c = classify_graph(g).cycle_census;
                    format!("; graph cycles of lengths {:?}", c.cycle_lengths)
                })
                .unwrap_or_default();
            CliError::Infinite(format!("{e}{cycles}"))
        }
        other => CliError::Validation(other.to_string()),
    })?;
    let formula = prediction.map_or(FormulaTag::None, |p| p.formula);
    let count = CountReport::new(loaded.name.clone(), &run, format!("{formula:?}"));
    let predicted = prediction.and_then(|p| p.count());
    if let Some(c) = predicted {
        if c != run.count() as u128 {
            return Err(CliError::Verification(format!(
                "enumerated {} pairs but the graph predicts {c}",
                run.count()
            )));
        }
    }
    let mut outcome = json!({
        "count": count,
        "certificate": run.certificate,
        "band": run.band,
        "catalog_size": run.catalog.len(),
    });
    let text = match args.mode {
        SttMode::Count => serde_json::to_string(&count).expect("plain data serializes") + "\n",
        SttMode::List => {
            let mut s = String::new();
            for (k, p) in run.pairs.iter().enumerate() {
                s.push_str(&format!("{:>4}  {}\n", k + 1, p.describe(&run.catalog)));
            }
            outcome["pairs"] = json!(run.pairs);
            s
        }
        SttMode::Hasse => {
            let h = hasse_quiver(&run).map_err(|e| CliError::Verification(e.to_string()))?;
            let n = run.catalog.algebra().vertex_count();
            let dot = h.to_dot(&run.catalog);
            let mut s = format!(
                "nodes: {}\narrows: {}\nsource: {}\nsink: {}\n{n}-regular: {}\n",
                h.nodes.len(),
                h.edges.len(),
                h.nodes[h.source].describe(&run.catalog),
                h.nodes[h.sink].describe(&run.catalog),
                h.is_regular(n)
            );
            match &args.dot {
                Some(p) => write_file(p, &dot)?,
                None => s.push_str(&dot),
            }
            outcome["hasse"] = json!({
                "nodes": h.nodes.len(),
                "arrows": h.edges.len(),
                "regular": h.is_regular(n),
            });
            s
        }
    };
    Ok(finish("stt", Some(&loaded), outcome, start, text))
}

pub fn verify_paper(level: Level, seed: u64) -> Result<Output, CliError> {
    let start = Instant::now();
    let rows = run_suite(level, seed);
    let table = render_table(&rows);
    let passed = all_passed(&rows);
    let mut out = finish(
        "verify-paper",
        None,
        json!({ "level": level, "passed": passed, "rows": rows }),
        start,
        table,
    );
    out.report.seed = Some(seed);
    if !passed {
        out.code = CliError::Verification(String::new()).exit_code();
    }
    Ok(out)
}
