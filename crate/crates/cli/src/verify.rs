//! The reproduction harness behind `verify-paper`: eleven numbered
//! criteria, each reported as one pass/fail row.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use brauerkit::brauer::{
    algebra_of_brauer_graph, central_binomial, classify_graph, gamma_of_gentle, predicted_count,
    shapes, tau_tilting_finite, BrauerGraph, CountStatus, GraphTag,
};
use brauerkit::corpus::{
    brauer_graphs, gentle_non_trees, gentle_trees, linear_orientations, radical_square_zero_cycle,
    tilde_a_cycles, GentleSample,
};
use brauerkit::fixtures;
use brauerkit::gentle::{quiver_shape, rad_square_zero, ShapeTag};
use brauerkit::presentation::Presentation;
use brauerkit::repmod::syzygy;
use brauerkit::stt::{enumerate_stt_pairs, hasse_quiver, SttError, SttOptions};
use brauerkit::{Algebra, Enumeration};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level `{other}` (expected quick or full)")),
        }
    }
}

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionRow {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    /// Number of individual checks behind the row.
    pub checked: usize,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    pub limit_secs: Option<u64>,
}

/// Outcome of enumerating one symmetric algebra, shared between criteria.
enum Computed {
    Finite(Arc<Enumeration>),
    Infinite(String),
    Failed(String),
}

/// Enumerations keyed by presentation text, so every algebra is handled
/// once however many criteria touch it.
#[derive(Default)]
pub struct Session {
    runs: BTreeMap<String, Computed>,
}

impl Session {
    fn enumerate(&mut self, pres: &Presentation) -> &Computed {
        let key = pres.to_text();
        self.runs.entry(key).or_insert_with(|| {
            let alg = match Algebra::new(pres.clone()) {
                Ok(a) => Arc::new(a),
                Err(e) => return Computed::Failed(e.to_string()),
            };
            match enumerate_stt_pairs(alg, SttOptions::default()) {
                Ok(run) => Computed::Finite(Arc::new(run)),
                Err(SttError::PresumedInfinite { witness, .. }) => Computed::Infinite(witness),
                Err(e) => Computed::Failed(e.to_string()),
            }
        })
    }

    fn count(&mut self, pres: &Presentation) -> Result<usize, String> {
        match self.enumerate(pres) {
            Computed::Finite(run) => Ok(run.count()),
            Computed::Infinite(w) => Err(format!("presumed infinite (band {w})")),
            Computed::Failed(e) => Err(e.clone()),
        }
    }

    fn finite_runs(&self) -> Vec<(&str, Arc<Enumeration>)> {
        self.runs
            .iter()
            .filter_map(|(k, c)| match c {
                Computed::Finite(r) => Some((k.as_str(), r.clone())),
                _ => None,
            })
            .collect()
    }
}

fn trivial_extension(pres: &Presentation) -> Result<Presentation, String> {
    let a = Algebra::new(pres.clone()).map_err(|e| e.to_string())?;
    let g = gamma_of_gentle(&a).map_err(|e| e.to_string())?;
    Ok(algebra_of_brauer_graph(&g))
}

fn binom(n: usize) -> usize {
    central_binomial(n).expect("small n") as usize
}

/// Collects failures and renders a short detail string.
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn detail(&self, summary: String) -> String {
        if self.failures.is_empty() {
            summary
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            format!("{} failure(s): {}", self.failures.len(), shown.join("; "))
        }
    }
}

struct Corpus {
    trees: Vec<GentleSample>,
    non_trees: Vec<GentleSample>,
    cycles: Vec<GentleSample>,
    orientations: Vec<GentleSample>,
}

impl Corpus {
    fn new(level: Level, seed: u64) -> Self {
        let (count, tree_n, other_n, cycle_n) = match level {
            Level::Quick => (20, 4, 4, 3),
            Level::Full => (60, 6, 5, 5),
        };
        Corpus {
            trees: gentle_trees(seed, count, tree_n),
            non_trees: gentle_non_trees(seed.wrapping_add(1), count, other_n),
            cycles: (2..=cycle_n).flat_map(tilde_a_cycles).collect(),
            orientations: (2..=4).flat_map(linear_orientations).collect(),
        }
    }

    fn all(&self) -> impl Iterator<Item = &GentleSample> {
        self.trees
            .iter()
            .chain(&self.non_trees)
            .chain(&self.cycles)
            .chain(&self.orientations)
    }
}

fn row(id: u8, title: &'static str, limit: Option<u64>, t: Tally, summary: String, start: Instant) -> CriterionRow {
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|s| elapsed <= Duration::from_secs(s));
    let mut detail = t.detail(summary);
    if !in_time {
        detail.push_str(&format!("; over the {}s limit", limit.unwrap_or_default()));
    }
    CriterionRow {
        id,
        title,
        passed: t.failures.is_empty() && in_time && t.checked > 0,
        checked: t.checked,
        detail,
        elapsed,
        limit_secs: limit,
    }
}

fn brauer_tree_counts(s: &mut Session, level: Level) -> CriterionRow {
    let start = Instant::now();
    let max_n = if level == Level::Quick { 3 } else { 4 };
    let mut t = Tally::new();
    let mut seen = Vec::new();
    for n in 2..=max_n {
        for sample in linear_orientations(n) {
            let got = trivial_extension(&sample.presentation).and_then(|p| s.count(&p));
            t.check(got == Ok(binom(n)), || format!("{}: {got:?}", sample.name));
        }
        seen.push(format!("{}", binom(n)));
    }
    let summary = format!("{} orientations, counts {}", t.checked, seen.join("/"));
    row(1, "Brauer tree counts over every orientation of A_n", Some(60), t, summary, start)
}

fn gentle_tree_counts(s: &mut Session, level: Level, seed: u64) -> CriterionRow {
    let start = Instant::now();
    let (count, max_n) = if level == Level::Quick { (25, 3) } else { (40, 4) };
    let mut t = Tally::new();
    for sample in gentle_trees(seed.wrapping_add(7), count, max_n) {
        let n = sample.presentation.vertex_count();
        let got = trivial_extension(&sample.presentation).and_then(|p| s.count(&p));
        t.check(got == Ok(binom(n)), || format!("{}: {got:?}", sample.name));
    }
    let summary = format!("{} random gentle trees with n <= {max_n}", t.checked);
    row(2, "gentle tree counts equal C(2n, n)", Some(120), t, summary, start)
}

fn cycle_counts(s: &mut Session, level: Level) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut cases = vec![(fixtures::presentation(fixtures::F5), 3)];
    if level == Level::Full {
        cases.push((radical_square_zero_cycle(5), 5));
    }
    let mut seen = Vec::new();
    for (pres, n) in cases {
        let expected = 1usize << (2 * n - 1);
        let got = trivial_extension(&pres).and_then(|p| s.count(&p));
        t.check(got == Ok(expected), || format!("n = {n}: {got:?}"));
        seen.push(format!("n={n}: {}", got.map_or("error".into(), |c| c.to_string())));
    }
    let summary = seen.join(", ");
    row(3, "odd Brauer cycle counts equal 2^(2n-1)", Some(300), t, summary, start)
}

fn tree_theorem(corpus: &Corpus) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    for sample in corpus.trees.iter().chain(&corpus.non_trees) {
        let verdict = Algebra::new(sample.presentation.clone())
            .map_err(|e| e.to_string())
            .and_then(|a| gamma_of_gentle(&a).map_err(|e| e.to_string()))
            .map(|g| classify_graph(&g).is_tree_without_exceptional_vertex());
        let tree = quiver_shape(&sample.presentation).is_tree();
        t.check(verdict == Ok(tree), || format!("{}: {verdict:?} vs tree = {tree}", sample.name));
    }
    let summary = format!(
        "{} presentations ({} trees, {} non-trees)",
        t.checked,
        corpus.trees.len(),
        corpus.non_trees.len()
    );
    row(4, "quiver is a tree iff Brauer tree without exceptional vertex", None, t, summary, start)
}

fn star_line_theorem(corpus: &Corpus) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let extra = [
        fixtures::presentation(fixtures::F2),
        fixtures::presentation(fixtures::F3),
    ];
    let members = corpus
        .trees
        .iter()
        .chain(&corpus.orientations)
        .map(|s| (s.name.clone(), s.presentation.clone()))
        .chain(extra.into_iter().enumerate().map(|(k, p)| (format!("F{}", k + 2), p)));
    let (mut stars, mut lines) = (0, 0);
    for (name, pres) in members {
        let a = match Algebra::new(pres.clone()) {
            Ok(a) => a,
            Err(e) => {
                t.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let class = match gamma_of_gentle(&a) {
            Ok(g) => classify_graph(&g),
            Err(e) => {
                t.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let linear = quiver_shape(&pres).tag == ShapeTag::LinearAOriented;
        let rsz = rad_square_zero(&a);
        stars += usize::from(class.is_star);
        lines += usize::from(class.is_line);
        t.check(class.is_star == linear, || format!("{name}: star {} vs linear {linear}", class.is_star));
        t.check(class.is_line == rsz, || format!("{name}: line {} vs rad^2 = 0 {rsz}", class.is_line));
    }
    let summary = format!("{} checks, {stars} stars, {lines} lines", t.checked);
    row(5, "star iff linearly oriented A_n, line iff radical square zero", None, t, summary, start)
}

fn cycle_theorem(corpus: &Corpus) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let mut cycles = 0;
    for sample in &corpus.cycles {
        let verdict = Algebra::new(sample.presentation.clone())
            .map_err(|e| e.to_string())
            .and_then(|a| {
                let g = gamma_of_gentle(&a).map_err(|e| e.to_string())?;
                Ok((classify_graph(&g).tag == GraphTag::Cycle, rad_square_zero(&a)))
            });
        match verdict {
            Ok((cycle, rsz)) => {
                cycles += usize::from(cycle);
                t.check(cycle == rsz, || format!("{}: cycle {cycle} vs rad^2 = 0 {rsz}", sample.name));
            }
            Err(e) => t.check(false, || format!("{}: {e}", sample.name)),
        }
    }
    let summary = format!("{} cyclic gentle algebras, {cycles} Brauer cycles", t.checked);
    row(6, "Brauer cycle iff radical square zero on cyclic quivers", None, t, summary, start)
}

fn structural_identities(corpus: &Corpus) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    for sample in corpus.all() {
        let result = Algebra::new(sample.presentation.clone())
            .map_err(|e| e.to_string())
            .and_then(|a| {
                let tp = trivial_extension(&sample.presentation)?;
                let ta = Algebra::new(tp).map_err(|e| e.to_string())?;
                let c = a.cartan();
                let expected = c.add(&c.transpose());
                let dims = ta.dimension() == 2 * a.dimension();
                let cartan = ta.cartan().relabeled(&expected.labels) == Some(expected);
                Ok((dims, cartan))
            });
        match result {
            Ok((dims, cartan)) => {
                t.check(dims, || format!("{}: dim T(A) != 2 dim A", sample.name));
                t.check(cartan, || format!("{}: Cartan identity fails", sample.name));
            }
            Err(e) => t.check(false, || format!("{}: {e}", sample.name)),
        }
    }
    let summary = format!("{} corpus members", t.checked / 2);
    row(7, "dim T(A) = 2 dim A and Cartan T(A) = C + C^T", None, t, summary, start)
}

fn tau_is_omega_squared(s: &Session) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let runs = s.finite_runs();
    for (key, run) in &runs {
        for e in run.catalog.entries() {
            if e.projective_at.is_some() {
                continue;
            }
            let omega2 = syzygy(&e.module).and_then(|m| syzygy(&m));
            let ok = matches!(&omega2, Ok(m) if m.dims() == e.tau.dims());
            t.check(ok, || format!("{} over {}", e.label(), key.lines().next().unwrap_or("")));
        }
    }
    let summary = format!("{} non-projective modules over {} algebras", t.checked, runs.len());
    row(8, "dim τM = dim Ω²M on Brauer graph algebras", None, t, summary, start)
}

fn exchange_regularity(s: &Session) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let runs = s.finite_runs();
    let mut nodes = 0;
    for (key, run) in &runs {
        let n = run.catalog.algebra().vertex_count();
        match hasse_quiver(run) {
            Ok(h) => {
                nodes += h.nodes.len();
                let ok = h.is_regular(n) && h.sources() == [h.source] && h.sinks() == [h.sink];
                t.check(ok, || format!("irregular quiver over {}", key.lines().next().unwrap_or("")));
            }
            Err(e) => t.check(false, || e.to_string()),
        }
    }
    let summary = format!("{} Hasse quivers, {nodes} nodes", t.checked);
    row(9, "Hasse quivers are n-regular with unique source and sink", None, t, summary, start)
}

fn finiteness_cross_check(s: &mut Session, seed: u64) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let graphs = brauer_graphs(seed.wrapping_add(2), 24);
    let (mut finite, mut banded) = (0, 0);
    for sample in &graphs {
        let g: &BrauerGraph = &sample.graph;
        let pres = algebra_of_brauer_graph(g);
        let class = classify_graph(g);
        // band detection against the representation-finiteness criterion
        let band = Algebra::new(pres.clone())
            .map_err(|e| e.to_string())
            .and_then(|a| {
                let sq = brauerkit::stt::string_quotient(&a).map_err(|e| e.to_string())?;
                brauerkit::stt::detect_bands(&sq).map_err(|e| e.to_string())
            })
            .map(|b| b.is_some());
        banded += usize::from(band == Ok(true));
        t.check(band == Ok(!class.is_brauer_tree()), || {
            format!("{}: band {band:?} vs Brauer tree {}", sample.name, class.is_brauer_tree())
        });
        // τ-tilting finiteness of the algebra against the cycle criterion
        let expected = tau_tilting_finite(g);
        let verdict = match s.enumerate(&pres) {
            Computed::Finite(run) => Ok(Some(run.count())),
            Computed::Infinite(_) => Ok(None),
            Computed::Failed(e) => Err(e.clone()),
        };
        finite += usize::from(matches!(verdict, Ok(Some(_))));
        t.check(verdict.as_ref().map(Option::is_some) == Ok(expected), || {
            format!("{}: finite {verdict:?} vs criterion {expected}", sample.name)
        });
        let prediction = predicted_count(g);
        if let (CountStatus::KnownCount(c), Ok(Some(got))) = (prediction.status, &verdict) {
            t.check(*got as u128 == c, || format!("{}: count {got} vs predicted {c}", sample.name));
        }
    }
    let summary = format!(
        "{} graphs: {finite} τ-tilting finite, {banded} with bands, {} checks",
        graphs.len(),
        t.checked
    );
    row(10, "finiteness verdicts agree with the cycle criterion", None, t, summary, start)
}

fn multiplicity_independence(s: &mut Session) -> CriterionRow {
    let start = Instant::now();
    let mut t = Tally::new();
    let a = s.count(&algebra_of_brauer_graph(&shapes::star(2, 1)));
    let b = s.count(&algebra_of_brauer_graph(&shapes::star(2, 2)));
    t.check(a == Ok(6), || format!("m = 1: {a:?}"));
    t.check(b == Ok(6), || format!("m = 2: {b:?}"));
    let show = |r: &Result<usize, String>| match r {
        Ok(c) => c.to_string(),
        Err(e) => e.clone(),
    };
    let summary = format!("m=1: {}, m=2: {}", show(&a), show(&b));
    row(11, "two-edge star count independent of multiplicity", None, t, summary, start)
}

/// Runs all criteria in order; `8` and `9` cover every algebra enumerated
/// by the others.
pub fn run_suite(level: Level, seed: u64) -> Vec<CriterionRow> {
    let mut s = Session::default();
    let corpus = Corpus::new(level, seed);
    let r1 = brauer_tree_counts(&mut s, level);
    let r2 = gentle_tree_counts(&mut s, level, seed);
    let r3 = cycle_counts(&mut s, level);
    let r4 = tree_theorem(&corpus);
    let r5 = star_line_theorem(&corpus);
    let r6 = cycle_theorem(&corpus);
    let r7 = structural_identities(&corpus);
    let r10 = finiteness_cross_check(&mut s, seed);
    let r11 = multiplicity_independence(&mut s);
    let r8 = tau_is_omega_squared(&s);
    let r9 = exchange_regularity(&s);
    vec![r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11]
}

/// One line per criterion; timings are left out so reruns are identical.
pub fn render_table(rows: &[CriterionRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{:>2}  {}  {:<62} {}\n",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.title,
            r.detail
        ));
    }
    out
}

pub fn all_passed(rows: &[CriterionRow]) -> bool {
    rows.iter().all(|r| r.passed)
}
