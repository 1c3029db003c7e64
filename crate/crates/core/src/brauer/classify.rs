//! Shape classification, the finiteness criterion and count predictions.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::BrauerGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphTag {
    Tree,
    Line,
    Star,
    Cycle,
    Other,
}

/// Cycle structure of the underlying multigraph. `cycle_lengths` are the
/// lengths of a fundamental cycle basis taken from a breadth-first spanning
/// tree; with at most one independent cycle this is the unique cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    pub independent_cycles: usize,
    pub cycle_lengths: Vec<usize>,
}

impl CycleCensus {
    pub fn odd_cycles(&self) -> usize {
        self.cycle_lengths.iter().filter(|&&l| l % 2 == 1).count()
    }

    pub fn even_cycles(&self) -> usize {
        self.cycle_lengths.len() - self.odd_cycles()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub tag: GraphTag,
    pub exceptional_vertices: Vec<String>,
    pub cycle_census: CycleCensus,
    pub is_line: bool,
    pub is_star: bool,
}

impl GraphClass {
    pub fn is_acyclic(&self) -> bool {
        self.cycle_census.independent_cycles == 0
    }

    /// Acyclic with at most one vertex of multiplicity above 1.
    pub fn is_brauer_tree(&self) -> bool {
        self.is_acyclic() && self.exceptional_vertices.len() <= 1
    }

    pub fn is_tree_without_exceptional_vertex(&self) -> bool {
        self.is_acyclic() && self.exceptional_vertices.is_empty()
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.tag)?;
        if !self.exceptional_vertices.is_empty() {
            write!(f, " (exceptional: {})", self.exceptional_vertices.join(", "))?;
        }
        write!(
            f,
            "; cycles: {} independent, lengths {:?}",
            self.cycle_census.independent_cycles, self.cycle_census.cycle_lengths
        )
    }
}

fn census(g: &BrauerGraph) -> CycleCensus {
    let n = g.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edge_count()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &e in g.rotation(v) {
            let w = g.other_end(e, v);
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((v, e));
                tree_edge[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut lengths = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let (mut a, mut b) = edge.ends;
        let mut len = 1;
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a].expect("non-root has a parent").0;
            } else {
                b = parent[b].expect("non-root has a parent").0;
            }
            len += 1;
        }
        lengths.push(len);
    }
    CycleCensus {
        independent_cycles: lengths.len(),
        cycle_lengths: lengths,
    }
}

pub fn classify_graph(g: &BrauerGraph) -> GraphClass {
    let cycle_census = census(g);
    let exceptional_vertices: Vec<String> = g
        .vertices()
        .iter()
        .filter(|v| v.multiplicity >= 2)
        .map(|v| v.id.clone())
        .collect();
    let unit = exceptional_vertices.is_empty();
    let acyclic = cycle_census.independent_cycles == 0;
    let max_degree = (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap_or(0);

    let is_line = acyclic && unit && max_degree <= 2;
    let is_star = acyclic && unit && max_degree == g.edge_count();
    let is_cycle = unit
        && cycle_census.independent_cycles == 1
        && g.vertex_count() >= 2
        && (0..g.vertex_count()).all(|v| g.degree(v) == 2);

    let tag = if is_line {
        GraphTag::Line
    } else if is_star {
        GraphTag::Star
    } else if is_cycle {
        GraphTag::Cycle
    } else if acyclic && exceptional_vertices.len() <= 1 {
        GraphTag::Tree
    } else {
        GraphTag::Other
    };
    GraphClass {
        tag,
        exceptional_vertices,
        cycle_census,
        is_line,
        is_star,
    }
}

/// At most one cycle, and that cycle of odd length.
pub fn tau_tilting_finite(g: &BrauerGraph) -> bool {
    let c = census(g);
    match c.independent_cycles {
        0 => true,
        1 => c.cycle_lengths[0] % 2 == 1,
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountStatus {
    Infinite,
    KnownCount(u128),
    FiniteUnknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormulaTag {
    TreeBinomial,
    OddCyclePower,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountPrediction {
    pub status: CountStatus,
    pub formula: FormulaTag,
}

impl CountPrediction {
    pub fn count(&self) -> Option<u128> {
        match self.status {
            CountStatus::KnownCount(c) => Some(c),
            _ => None,
        }
    }
}

/// `C(2n, n)`, or `None` on overflow.
pub fn central_binomial(n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for k in 1..=n as u128 {
        // acc = C(n + k, k) stays integral at every step
        acc = acc.checked_mul(n as u128 + k)? / k;
    }
    Some(acc)
}

pub fn predicted_count(g: &BrauerGraph) -> CountPrediction {
    let class = classify_graph(g);
    let n = g.edge_count();
    let unknown = CountPrediction {
        status: CountStatus::FiniteUnknown,
        formula: FormulaTag::None,
    };
    if !tau_tilting_finite(g) {
        return CountPrediction {
            status: CountStatus::Infinite,
            formula: FormulaTag::None,
        };
    }
    if class.is_brauer_tree() {
        return match central_binomial(n) {
            Some(c) => CountPrediction {
                status: CountStatus::KnownCount(c),
                formula: FormulaTag::TreeBinomial,
            },
            None => unknown,
        };
    }
    if class.tag == GraphTag::Cycle && n % 2 == 1 {
        return match 1u128.checked_shl((2 * n - 1) as u32) {
            Some(c) if 2 * n - 1 < 128 => CountPrediction {
                status: CountStatus::KnownCount(c),
                formula: FormulaTag::OddCyclePower,
            },
            _ => unknown,
        };
    }
    unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{parse_brauer_text, shapes};

    #[test]
    fn central_binomials() {
        let got: Vec<u128> = (1..=5).map(|n| central_binomial(n).unwrap()).collect();
        assert_eq!(got, vec![2, 6, 20, 70, 252]);
        assert!(central_binomial(200).is_none());
    }

    #[test]
    fn line_and_star_predicates() {
        let two = classify_graph(&shapes::line(2));
        assert!(two.is_line && two.is_star);
        assert_eq!(two.tag, GraphTag::Line);
        let s = classify_graph(&shapes::star(3, 1));
        assert_eq!(s.tag, GraphTag::Star);
        assert!(!s.is_line);
        let l = classify_graph(&shapes::line(3));
        assert_eq!(l.tag, GraphTag::Line);
        assert!(!l.is_star);
    }

    #[test]
    fn exceptional_star_is_a_tree() {
        let c = classify_graph(&shapes::star(2, 5));
        assert_eq!(c.tag, GraphTag::Tree);
        assert_eq!(c.exceptional_vertices, vec!["c".to_string()]);
        assert_eq!(
            predicted_count(&shapes::star(2, 5)).status,
            CountStatus::KnownCount(6)
        );
    }

    #[test]
    fn cycles() {
        let c3 = classify_graph(&shapes::cycle(3));
        assert_eq!(c3.tag, GraphTag::Cycle);
        assert_eq!(c3.cycle_census.cycle_lengths, vec![3]);
        assert!(tau_tilting_finite(&shapes::cycle(3)));
        assert!(!tau_tilting_finite(&shapes::cycle(4)));
        assert!(!tau_tilting_finite(&shapes::cycle(2)));
        assert_eq!(
            predicted_count(&shapes::cycle(3)).status,
            CountStatus::KnownCount(32)
        );
        assert_eq!(
            predicted_count(&shapes::cycle(4)).status,
            CountStatus::Infinite
        );
        assert_eq!(
            predicted_count(&shapes::line(3)).status,
            CountStatus::KnownCount(20)
        );
    }

    #[test]
    fn odd_cycle_with_pendant_edge() {
        let g = parse_brauer_text(
            "bvertex: a m=1\nbvertex: b m=1\nbvertex: c m=1\nbvertex: d m=1\n\
             bedge: 1 a b\nbedge: 2 b c\nbedge: 3 c a\nbedge: 4 a d\n\
             cyclic: a 1 3 4\ncyclic: b 1 2\ncyclic: c 2 3\n",
        )
        .unwrap();
        let c = classify_graph(&g);
        assert_eq!(c.tag, GraphTag::Other);
        assert_eq!(c.cycle_census.odd_cycles(), 1);
        assert!(tau_tilting_finite(&g));
        assert_eq!(predicted_count(&g).status, CountStatus::FiniteUnknown);
    }

    #[test]
    fn two_cycles_are_infinite() {
        let g = parse_brauer_text(
            "bvertex: a m=1\nbvertex: b m=1\nbvertex: c m=1\n\
             bedge: 1 a b\nbedge: 2 a b\nbedge: 3 b c\nbedge: 4 b c\n\
             cyclic: a 1 2\ncyclic: b 1 3 2 4\ncyclic: c 3 4\n",
        )
        .unwrap();
        let c = classify_graph(&g);
        assert_eq!(c.cycle_census.independent_cycles, 2);
        assert_eq!(c.cycle_census.even_cycles(), 2);
        assert_eq!(predicted_count(&g).status, CountStatus::Infinite);
    }
}
