//! The Hasse quiver of support τ-tilting pairs.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::catalog::Catalog;
use super::pairs::{exchange_graph, SttEnumeration, SttPair};
use super::SttError;
use crate::linalg::Matrix;
use crate::repmod::hom_basis;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct HasseQuiver {
    pub nodes: Vec<SttPair>,
    /// Arrows `M -> N` with `Fac M ⊋ Fac N`.
    pub edges: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
}

impl HasseQuiver {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    /// Every node has `n` neighbours.
    pub fn is_regular(&self, n: usize) -> bool {
        let mut deg = vec![0; self.nodes.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().all(|&d| d == n)
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.nodes.len();
        let mut indeg = vec![0; n];
        let mut out = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            indeg[b] += 1;
            out[a].push(b);
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = ready.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        seen == n
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| self.in_degree(v) == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Graphviz text; nodes show module dimension vectors and marks.
    pub fn to_dot<F: Scalar>(&self, cat: &Catalog<F>) -> String {
        let q = cat.algebra().quiver();
        let mut s = String::from("digraph hasse {\n  node [shape=box];\n");
        for (k, p) in self.nodes.iter().enumerate() {
            let mods: Vec<String> = p
                .modules
                .iter()
                .map(|&m| {
                    let d: Vec<String> = cat.entries()[m].dims().iter().map(|x| x.to_string()).collect();
                    d.join("")
                })
                .collect();
            let marks: Vec<&str> = p.marks.iter().map(|&i| q.vertex_name(i)).collect();
            let _ = writeln!(
                s,
                "  n{k} [label=\"{} | {}\"];",
                mods.join(" "),
                marks.join(" ")
            );
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }
}

/// Row spaces of the trace of `M` in `X`, per vertex.
fn trace_rows<F: Scalar>(cat: &Catalog<F>, m: usize, x: usize) -> Result<Vec<Matrix<F>>, SttError> {
    let e = cat.entries();
    let target = &e[x].module;
    let basis = hom_basis(&e[m].module, target)?;
    Ok((0..target.dims().len())
        .map(|k| {
            let mut stacked = Matrix::zeros(0, target.dim_at(k));
            for f in &basis {
                stacked = stacked.vstack(&f.components[k]);
            }
            stacked.row_space()
        })
        .collect())
}

struct FacOracle<'a, F: Scalar> {
    cat: &'a Catalog<F>,
    traces: HashMap<(usize, usize), Vec<Matrix<F>>>,
}

impl<F: Scalar> FacOracle<'_, F> {
    /// Whether catalog member `x` lies in `Fac` of the sum of `ms`.
    fn contains(&mut self, ms: &[usize], x: usize) -> Result<bool, SttError> {
        let target = self.cat.entries()[x].module.dims().to_vec();
        if ms.contains(&x) {
            return Ok(true);
        }
        let mut acc: Vec<Matrix<F>> = target.iter().map(|&d| Matrix::zeros(0, d)).collect();
        for &m in ms {
            if !self.traces.contains_key(&(m, x)) {
                let t = trace_rows(self.cat, m, x)?;
                self.traces.insert((m, x), t);
            }
            for (k, rows) in self.traces[&(m, x)].iter().enumerate() {
                acc[k] = acc[k].vstack(rows);
            }
        }
        Ok(acc.iter().zip(&target).all(|(a, &d)| a.rank() == d))
    }

    fn all_in(&mut self, ms: &[usize], xs: &[usize]) -> Result<bool, SttError> {
        for &x in xs {
            if !self.contains(ms, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Orients the exchange graph by comparing `Fac` of the module parts and
/// checks the result: acyclic, `n`-regular, one source `(A, ∅)` and one
/// sink `(0, all marks)`.
pub fn hasse_quiver<F: Scalar>(run: &SttEnumeration<F>) -> Result<HasseQuiver, SttError> {
    let cat = &run.catalog;
    let pairs = &run.pairs;
    let n = cat.algebra().vertex_count();
    let (adj, _) = exchange_graph(pairs);
    let mut fac = FacOracle {
        cat,
        traces: HashMap::new(),
    };
    let mut edges = Vec::new();
    for (a, nbrs) in adj.iter().enumerate() {
        for &b in nbrs {
            if b <= a {
                continue;
            }
            let (pa, pb) = (&pairs[a], &pairs[b]);
            let only_a: Vec<usize> = pa.modules.iter().copied().filter(|m| !pb.modules.contains(m)).collect();
            let only_b: Vec<usize> = pb.modules.iter().copied().filter(|m| !pa.modules.contains(m)).collect();
            let down = fac.all_in(&pa.modules, &only_b)?;
            let up = fac.all_in(&pb.modules, &only_a)?;
            match (down, up) {
                (true, false) => edges.push((a, b)),
                (false, true) => edges.push((b, a)),
                _ => {
                    return Err(SttError::Inconsistent(format!(
                        "cannot orient {} -- {}",
                        pa.describe(cat),
                        pb.describe(cat)
                    )))
                }
            }
        }
    }
    edges.sort();
    let projectives: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).map(|i| cat.projective(i)).collect();
        v.sort();
        v
    };
    let source = pairs
        .iter()
        .position(|p| p.marks.is_empty() && p.modules == projectives)
        .ok_or_else(|| SttError::Inconsistent("no pair (A, ∅)".into()))?;
    let sink = pairs
        .iter()
        .position(|p| p.modules.is_empty())
        .ok_or_else(|| SttError::Inconsistent("no pair (0, all marks)".into()))?;
    let h = HasseQuiver {
        nodes: pairs.clone(),
        edges,
        source,
        sink,
    };
    if !h.is_regular(n) {
        return Err(SttError::Inconsistent("exchange graph is not regular".into()));
    }
    if !h.is_acyclic() {
        return Err(SttError::Inconsistent("oriented exchange graph has a cycle".into()));
    }
    if h.sources() != [source] || h.sinks() != [sink] {
        return Err(SttError::Inconsistent("source or sink is not unique".into()));
    }
    Ok(h)
}

/// Machine-readable count summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub algebra: String,
    pub n: usize,
    pub count: usize,
    pub finite: bool,
    pub formula: String,
}

impl CountReport {
    pub fn new<F: Scalar>(algebra: impl Into<String>, run: &SttEnumeration<F>, formula: impl Into<String>) -> Self {
        CountReport {
            algebra: algebra.into(),
            n: run.catalog.algebra().vertex_count(),
            count: run.count(),
            finite: true,
            formula: formula.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{algebra_of_brauer_graph, shapes};
    use crate::presentation::BoundAlgebra;
    use crate::repmod::tests::{alg, F1, F3, F4};
    use crate::stt::{enumerate_stt_pairs, SttOptions};
    use std::sync::Arc;

    fn quiver_of(a: Arc<BoundAlgebra<crate::repmod::tests::Q>>) -> HasseQuiver {
        hasse_quiver(&enumerate_stt_pairs(a, SttOptions::default()).unwrap()).unwrap()
    }

    #[test]
    fn local_algebra_has_one_arrow() {
        let h = quiver_of(alg("vertices: 1\narrow: x 1 1\nzero: x x\n"));
        assert_eq!(h.nodes.len(), 2);
        assert_eq!(h.edges, vec![(h.source, h.sink)]);
    }

    #[test]
    fn f4_is_a_hexagon() {
        let h = quiver_of(alg(F4));
        assert_eq!(h.nodes.len(), 6);
        assert!(h.is_regular(2));
        assert_eq!(h.edges.len(), 6);
    }

    #[test]
    fn regular_with_unique_ends() {
        for text in [F1, F3] {
            let a = alg(text);
            let n = a.vertex_count();
            let h = quiver_of(a);
            assert!(h.is_regular(n));
            assert!(h.is_acyclic());
        }
        let b = Arc::new(BoundAlgebra::new(algebra_of_brauer_graph(&shapes::line(2))).unwrap());
        let h = quiver_of(b);
        assert_eq!(h.nodes.len(), 6);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let run = enumerate_stt_pairs(alg(F4), SttOptions::default()).unwrap();
        let h = hasse_quiver(&run).unwrap();
        let dot = h.to_dot(&run.catalog);
        assert_eq!(dot.matches("->").count(), h.edges.len());
    }
}
