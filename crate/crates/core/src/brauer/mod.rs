//! Brauer graphs with rotation systems, the graph of a gentle algebra, the
//! Brauer graph algebra, and shape classification.

mod classify;
mod construct;
mod parse;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use thiserror::Error;

use crate::gentle::{GentleError, GentleReport};
use crate::presentation::PresentationError;

pub use classify::{
    central_binomial, classify_graph, predicted_count, tau_tilting_finite, CountPrediction, CountStatus,
    CycleCensus, FormulaTag, GraphClass, GraphTag,
};
pub use construct::{algebra_of_brauer_graph, gamma_of_gentle};
pub use parse::parse_brauer_text;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BVertex {
    pub id: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BEdge {
    pub id: String,
    pub ends: (usize, usize),
}

/// A connected multigraph without loop edges, with a multiplicity per
/// vertex and a cyclic order of the incident edges at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerGraph {
    vertices: Vec<BVertex>,
    edges: Vec<BEdge>,
    rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BrauerError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{0}` is a loop; loop edges are not supported")]
    LoopEdge(String),
    #[error("vertex `{0}` has multiplicity 0")]
    ZeroMultiplicity(String),
    #[error("vertex `{vertex}`: cyclic order does not list each incident edge exactly once")]
    RotationMismatch { vertex: String },
    #[error("vertex `{0}` has degree at least 2 but no cyclic order")]
    MissingRotation(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("presentation is not gentle")]
    NotGentle(GentleReport),
    #[error(
        "quiver vertex `{vertex}` occurs twice in `{member}`; the resulting loop edge is not supported"
    )]
    SelfFolded { vertex: String, member: String },
    #[error(transparent)]
    Gentle(GentleError),
    #[error(transparent)]
    Graph(#[from] BrauerError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

impl From<GentleError> for ConstructionError {
    fn from(e: GentleError) -> Self {
        match e {
            GentleError::NotGentle(r) => ConstructionError::NotGentle(r),
            other => ConstructionError::Gentle(other),
        }
    }
}

impl BrauerGraph {
    /// Validates and builds a graph. `rotation[v]` may be empty for a vertex
    /// of degree 1; it is then filled with the single incident edge.
    pub fn new(
        vertices: Vec<BVertex>,
        edges: Vec<BEdge>,
        mut rotation: Vec<Vec<usize>>,
    ) -> Result<Self, BrauerError> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.id.as_str(), i).is_some() {
                return Err(BrauerError::DuplicateVertex(v.id.clone()));
            }
            if v.multiplicity == 0 {
                return Err(BrauerError::ZeroMultiplicity(v.id.clone()));
            }
        }
        let mut seen_edges = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if seen_edges.insert(e.id.as_str(), i).is_some() {
                return Err(BrauerError::DuplicateEdge(e.id.clone()));
            }
            if e.ends.0 == e.ends.1 {
                return Err(BrauerError::LoopEdge(e.id.clone()));
            }
        }
        if edges.is_empty() {
            return Err(BrauerError::NoEdges);
        }
        rotation.resize(vertices.len(), Vec::new());
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.ends.0].push(i);
            incident[e.ends.1].push(i);
        }
        for (v, inc) in incident.iter().enumerate() {
            if rotation[v].is_empty() {
                match inc.len() {
                    0 => return Err(BrauerError::Disconnected),
                    1 => rotation[v] = inc.clone(),
                    _ => return Err(BrauerError::MissingRotation(vertices[v].id.clone())),
                }
            }
            let mut listed = rotation[v].clone();
            listed.sort_unstable();
            let mut expected = inc.clone();
            expected.sort_unstable();
            if listed != expected {
                return Err(BrauerError::RotationMismatch {
                    vertex: vertices[v].id.clone(),
                });
            }
        }
        let g = BrauerGraph {
            vertices,
            edges,
            rotation,
        };
        if !g.is_connected() {
            return Err(BrauerError::Disconnected);
        }
        Ok(g)
    }

    pub fn vertices(&self) -> &[BVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[BEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Cyclic order of edge indices around vertex `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e].ends;
        if a == v {
            b
        } else {
            a
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &e in &self.rotation[v] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same ids, multiplicities and incidences, with every cyclic order equal
    /// up to rotation (never up to reflection).
    pub fn equivalent(&self, other: &BrauerGraph) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut vmap = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            match other.vertex_index(&v.id) {
                Some(w) if other.vertices[w].multiplicity == v.multiplicity => vmap.push(w),
                _ => return false,
            }
        }
        let mut emap = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let Some(f) = other.edge_index(&e.id) else {
                return false;
            };
            let (a, b) = (vmap[e.ends.0], vmap[e.ends.1]);
            let ends = other.edges[f].ends;
            if (a, b) != ends && (b, a) != ends {
                return false;
            }
            emap.push(f);
        }
        (0..self.vertices.len()).all(|v| {
            let mine: Vec<usize> = self.rotation[v].iter().map(|&e| emap[e]).collect();
            let theirs = &other.rotation[vmap[v]];
            cyclic_eq(&mine, theirs)
        })
    }

    /// Serializes to the line-oriented Brauer graph format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let _ = writeln!(out, "bvertex: {} m={}", v.id, v.multiplicity);
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "bedge: {} {} {}",
                e.id, self.vertices[e.ends.0].id, self.vertices[e.ends.1].id
            );
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let _ = write!(out, "cyclic: {}", self.vertices[v].id);
            for &e in rot {
                let _ = write!(out, " {}", self.edges[e].id);
            }
            out.push('\n');
        }
        out
    }

    /// Graphviz rendering; edge labels are edge ids and vertex labels show
    /// the multiplicity when it exceeds 1.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph brauer {\n");
        for v in &self.vertices {
            let label = if v.multiplicity >= 2 {
                format!("{} (m={})", v.id, v.multiplicity)
            } else {
                v.id.clone()
            };
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", escape(&v.id), escape(&label));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\" [label=\"{}\"];",
                escape(&self.vertices[e.ends.0].id),
                escape(&self.vertices[e.ends.1].id),
                escape(&e.id)
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]))
}

/// Shorthand builders used by tests, the corpus and the verification harness.
pub mod shapes {
    use super::{BEdge, BVertex, BrauerGraph};

    fn vertex(id: String, m: usize) -> BVertex {
        BVertex { id, multiplicity: m }
    }

    /// Path graph with `n` edges and multiplicity 1 everywhere.
    pub fn line(n: usize) -> BrauerGraph {
        let vertices = (0..=n).map(|i| vertex(format!("v{i}"), 1)).collect();
        let edges: Vec<BEdge> = (0..n)
            .map(|i| BEdge {
                id: format!("{}", i + 1),
                ends: (i, i + 1),
            })
            .collect();
        let rotation = (0..=n)
            .map(|v| {
                let mut r = Vec::new();
                if v > 0 {
                    r.push(v - 1);
                }
                if v < n {
                    r.push(v);
                }
                r
            })
            .collect();
        BrauerGraph::new(vertices, edges, rotation).expect("line graph")
    }

    /// Star with `n` edges around a center of multiplicity `m`.
    pub fn star(n: usize, m: usize) -> BrauerGraph {
        let mut vertices = vec![vertex("c".into(), m)];
        vertices.extend((1..=n).map(|i| vertex(format!("l{i}"), 1)));
        let edges = (0..n)
            .map(|i| BEdge {
                id: format!("{}", i + 1),
                ends: (0, i + 1),
            })
            .collect();
        let mut rotation = vec![(0..n).collect::<Vec<_>>()];
        rotation.extend((0..n).map(|i| vec![i]));
        BrauerGraph::new(vertices, edges, rotation).expect("star graph")
    }

    /// Cycle with `n >= 2` edges and multiplicity 1 everywhere.
    pub fn cycle(n: usize) -> BrauerGraph {
        assert!(n >= 2, "a cycle needs at least two edges");
        let vertices = (0..n).map(|i| vertex(format!("v{i}"), 1)).collect();
        let edges = (0..n)
            .map(|i| BEdge {
                id: format!("{}", i + 1),
                ends: (i, (i + 1) % n),
            })
            .collect();
        let rotation = (0..n).map(|v| vec![(v + n - 1) % n, v]).collect();
        BrauerGraph::new(vertices, edges, rotation).expect("cycle graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_must_match_incidence() {
        let vertices = vec![
            BVertex {
                id: "a".into(),
                multiplicity: 1,
            },
            BVertex {
                id: "b".into(),
                multiplicity: 1,
            },
        ];
        let edges = vec![
            BEdge {
                id: "1".into(),
                ends: (0, 1),
            },
            BEdge {
                id: "2".into(),
                ends: (0, 1),
            },
        ];
        let err = BrauerGraph::new(vertices.clone(), edges.clone(), vec![vec![0, 1], vec![0]]);
        assert!(matches!(err, Err(BrauerError::RotationMismatch { .. })));
        let err = BrauerGraph::new(vertices.clone(), edges.clone(), vec![vec![0, 1]]);
        assert!(matches!(err, Err(BrauerError::MissingRotation(_))));
        let ok = BrauerGraph::new(vertices, edges, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(ok.degree(0), 2);
    }

    #[test]
    fn loops_are_rejected() {
        let vertices = vec![BVertex {
            id: "a".into(),
            multiplicity: 1,
        }];
        let edges = vec![BEdge {
            id: "1".into(),
            ends: (0, 0),
        }];
        assert!(matches!(
            BrauerGraph::new(vertices, edges, vec![]),
            Err(BrauerError::LoopEdge(_))
        ));
    }

    #[test]
    fn equivalence_is_up_to_rotation_not_reflection() {
        let g = shapes::star(3, 1);
        let mut h = g.clone();
        h.rotation[0] = vec![1, 2, 0];
        assert!(g.equivalent(&h));
        h.rotation[0] = vec![2, 1, 0];
        assert!(!g.equivalent(&h));
    }

    #[test]
    fn text_round_trip() {
        for g in [shapes::line(3), shapes::star(4, 2), shapes::cycle(3)] {
            let back = parse_brauer_text(&g.to_text()).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn dot_mentions_multiplicity() {
        let dot = shapes::star(2, 5).to_dot();
        assert!(dot.contains("c (m=5)"));
        assert!(dot.contains("\"c\" -- \"l1\" [label=\"1\"]"));
    }
}
