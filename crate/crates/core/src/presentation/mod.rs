//! Quivers, paths, relations and bound quiver algebras.
//!
//! Paths compose left to right: the path `a b` traverses `a` first and
//! requires `target(a) == source(b)`. The same convention is used by the text
//! format, by module matrices and by every algorithm in the crate.

mod normal_form;
mod parse;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use normal_form::{BoundAlgebra, CartanMatrix, DEFAULT_MAX_PATH_LEN};
pub use parse::parse_presentation_text;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with named vertices and arrows. Vertex and arrow indices
/// follow declaration order.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new() -> Self {
        Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        }
    }

    pub fn add_vertex(&mut self, id: &str) -> Result<usize, PresentationError> {
        if self.vertex_index.contains_key(id) {
            return Err(PresentationError::DuplicateVertex(id.to_string()));
        }
        let idx = self.vertices.len();
        self.vertices.push(id.to_string());
        self.vertex_index.insert(id.to_string(), idx);
        Ok(idx)
    }

    pub fn add_arrow(
        &mut self,
        name: &str,
        source: &str,
        target: &str,
    ) -> Result<usize, PresentationError> {
        if self.arrow_index.contains_key(name) {
            return Err(PresentationError::DuplicateArrow(name.to_string()));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        let idx = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_index.insert(name.to_string(), idx);
        Ok(idx)
    }

    pub fn vertex(&self, id: &str) -> Result<usize, PresentationError> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| PresentationError::UnknownVertex(id.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, PresentationError> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| PresentationError::UnknownArrow(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_info(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }

    /// Degree of `v` in the underlying undirected multigraph; loops count twice.
    pub fn underlying_degree(&self, v: usize) -> usize {
        self.arrows
            .iter()
            .map(|a| usize::from(a.source == v) + usize::from(a.target == v))
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }
}

impl Default for Quiver {
    fn default() -> Self {
        Self::new()
    }
}

/// A path given by its start vertex and its arrows, composed left to right.
/// A trivial path has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    /// Builds a path from arrows, checking that consecutive arrows compose.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self, PresentationError> {
        let Some(&first) = arrows.first() else {
            return Err(PresentationError::EmptyPath);
        };
        for w in arrows.windows(2) {
            let (a, b) = (quiver.arrow_info(w[0]), quiver.arrow_info(w[1]));
            if a.target != b.source {
                return Err(PresentationError::NonComposing {
                    first: a.name.clone(),
                    second: b.name.clone(),
                });
            }
        }
        Ok(Path {
            start: quiver.arrow_info(first).source,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.start, |&a| quiver.arrow_info(a).target)
    }

    /// Vertex sequence visited by the path, including both ends.
    pub fn vertices(&self, quiver: &Quiver) -> Vec<usize> {
        let mut out = vec![self.start];
        out.extend(self.arrows.iter().map(|&a| quiver.arrow_info(a).target));
        out
    }

    /// `self` followed by `other`, or `None` if they do not meet.
    pub fn concat(&self, other: &Path, quiver: &Quiver) -> Option<Path> {
        if self.end(quiver) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    pub fn then_arrow(&self, a: usize, quiver: &Quiver) -> Option<Path> {
        if self.end(quiver) != quiver.arrow_info(a).source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    /// The same path read backwards, as a path of the opposite quiver.
    pub fn reversed(&self, quiver: &Quiver) -> Path {
        Path {
            start: self.end(quiver),
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn contains_subpath(&self, sub: &[usize]) -> bool {
        !sub.is_empty() && self.arrows.windows(sub.len()).any(|w| w == sub)
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e{}", self.quiver.vertex_name(self.path.start));
        }
        for (i, &a) in self.path.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.quiver.arrow_info(a).name)?;
        }
        Ok(())
    }
}

/// Monomial (zero) relations and binomial (equality) relations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    pub monomials: Vec<Path>,
    pub binomials: Vec<(Path, Path)>,
}

impl RelationSet {
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty() && self.binomials.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.binomials.is_empty()
    }
}

/// A validated quiver with relations: relation paths compose, binomials are
/// parallel, no relation is shorter than two arrows, and the quiver is
/// connected. Admissibility is checked when normal forms are built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    relations: RelationSet,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: RelationSet) -> Result<Self, PresentationError> {
        if quiver.vertex_count() == 0 {
            return Err(PresentationError::NoVertices);
        }
        let check_len = |p: &Path| {
            if p.len() < 2 {
                Err(PresentationError::ShortRelation(p.display(&quiver).to_string()))
            } else {
                Ok(())
            }
        };
        for m in &relations.monomials {
            check_len(m)?;
        }
        for (p, q) in &relations.binomials {
            check_len(p)?;
            check_len(q)?;
            if p.start != q.start || p.end(&quiver) != q.end(&quiver) {
                return Err(PresentationError::NotParallel(
                    p.display(&quiver).to_string(),
                    q.display(&quiver).to_string(),
                ));
            }
        }
        if !quiver.is_connected() {
            return Err(PresentationError::Disconnected);
        }
        Ok(Presentation { quiver, relations })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Presentation of the opposite algebra.
    pub fn opposite(&self) -> Presentation {
        let quiver = self.quiver.opposite();
        let rev = |p: &Path| p.reversed(&self.quiver);
        let relations = RelationSet {
            monomials: self.relations.monomials.iter().map(rev).collect(),
            binomials: self
                .relations
                .binomials
                .iter()
                .map(|(p, q)| (rev(p), rev(q)))
                .collect(),
        };
        Presentation { quiver, relations }
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let q = &self.quiver;
        let mut out = String::new();
        out.push_str("vertices:");
        for v in q.vertex_names() {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for a in q.arrows() {
            out.push_str(&format!(
                "arrow: {} {} {}\n",
                a.name,
                q.vertex_name(a.source),
                q.vertex_name(a.target)
            ));
        }
        for m in &self.relations.monomials {
            out.push_str(&format!("zero: {}\n", m.display(q)));
        }
        for (p, r) in &self.relations.binomials {
            out.push_str(&format!("equal: {} = {}\n", p.display(q), r.display(q)));
        }
        out
    }

    /// Vertices touched by some arrow of a relation, used for quick reports.
    pub fn relation_vertices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let q = &self.quiver;
        let all = self
            .relations
            .monomials
            .iter()
            .chain(self.relations.binomials.iter().flat_map(|(p, r)| [p, r]));
        for p in all {
            out.extend(p.vertices(q));
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<PresentationError>,
    },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrows `{first}` and `{second}` do not compose")]
    NonComposing { first: String, second: String },
    #[error("empty path in a relation")]
    EmptyPath,
    #[error("relation `{0}` has length below two")]
    ShortRelation(String),
    #[error("binomial sides `{0}` and `{1}` are not parallel")]
    NotParallel(String, String),
    #[error("quiver has no vertices")]
    NoVertices,
    #[error("quiver is not connected")]
    Disconnected,
    #[error("ideal is not admissible: paths of every length up to {cap} survive")]
    NonAdmissible { cap: usize },
    #[error("path enumeration exceeded {limit} paths before the ideal closed")]
    TooManyPaths { limit: usize },
}

impl PresentationError {
    /// Line number for errors raised while reading a file.
    pub fn line(&self) -> Option<usize> {
        match self {
            PresentationError::Syntax { line, .. } | PresentationError::AtLine { line, .. } => {
                Some(*line)
            }
            _ => None,
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, PresentationError::Syntax { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        q.add_vertex("2").unwrap();
        q.add_arrow("a", "1", "2").unwrap();
        q
    }

    #[test]
    fn duplicate_and_unknown_names() {
        let mut q = a2();
        assert_eq!(
            q.add_vertex("1"),
            Err(PresentationError::DuplicateVertex("1".into()))
        );
        assert_eq!(
            q.add_arrow("a", "2", "1"),
            Err(PresentationError::DuplicateArrow("a".into()))
        );
        assert_eq!(
            q.add_arrow("b", "2", "3"),
            Err(PresentationError::UnknownVertex("3".into()))
        );
    }

    #[test]
    fn path_composition_is_checked() {
        let q = a2();
        let a = q.arrow("a").unwrap();
        assert!(matches!(
            Path::from_arrows(&q, vec![a, a]),
            Err(PresentationError::NonComposing { .. })
        ));
        let p = Path::from_arrows(&q, vec![a]).unwrap();
        assert_eq!(p.end(&q), 1);
        assert_eq!(p.vertices(&q), vec![0, 1]);
        assert_eq!(p.reversed(&q).start, 1);
    }

    #[test]
    fn disconnected_quiver_rejected() {
        let mut q = a2();
        q.add_vertex("3").unwrap();
        assert_eq!(
            Presentation::new(q, RelationSet::default()),
            Err(PresentationError::Disconnected)
        );
    }

    #[test]
    fn short_relation_rejected() {
        let q = a2();
        let a = q.arrow("a").unwrap();
        let rel = RelationSet {
            monomials: vec![Path::from_arrows(&q, vec![a]).unwrap()],
            binomials: vec![],
        };
        assert!(matches!(
            Presentation::new(q, rel),
            Err(PresentationError::ShortRelation(_))
        ));
    }
}
