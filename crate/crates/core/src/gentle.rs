//! Gentle and special biserial conditions, maximal paths and quiver shapes.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::presentation::{BoundAlgebra, Path, Presentation, Quiver};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GentleCondition {
    /// At most two arrows start and at most two arrows end at each vertex.
    ArrowDegree,
    /// At most one continuation of an arrow (on each side) lies in the ideal.
    ContinuationInIdeal,
    /// At most one continuation of an arrow (on each side) survives.
    ContinuationOutsideIdeal,
    /// The ideal is generated by zero relations of length two.
    LengthTwoZeroRelations,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: GentleCondition,
    pub location: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GentleReport {
    pub is_special_biserial: bool,
    pub is_gentle: bool,
    pub violations: Vec<Violation>,
}

impl fmt::Display for GentleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "special biserial: {}", self.is_special_biserial)?;
        writeln!(f, "gentle: {}", self.is_gentle)?;
        for v in &self.violations {
            writeln!(f, "  {:?} at {}: {}", v.condition, v.location, v.message)?;
        }
        Ok(())
    }
}

fn two_path(q: &Quiver, a: usize, b: usize) -> Path {
    Path {
        start: q.arrow_info(a).source,
        arrows: vec![a, b],
    }
}

/// Checks the four gentle conditions. Special biseriality is reported
/// alongside: it needs the degree bound and unique surviving continuations.
pub fn check_gentle<F: Scalar>(alg: &BoundAlgebra<F>) -> GentleReport {
    let q = alg.quiver();
    let mut violations = Vec::new();
    let mut special = true;

    for v in 0..q.vertex_count() {
        let outs = q.arrows_from(v).count();
        let ins = q.arrows_into(v).count();
        if outs > 2 || ins > 2 {
            special = false;
            violations.push(Violation {
                condition: GentleCondition::ArrowDegree,
                location: format!("vertex {}", q.vertex_name(v)),
                message: format!("{ins} arrows in, {outs} arrows out"),
            });
        }
    }

    for (a, info) in q.arrows().iter().enumerate() {
        let after: Vec<usize> = q.arrows_from(info.target).collect();
        let before: Vec<usize> = q.arrows_into(info.source).collect();
        let zero_after = after
            .iter()
            .filter(|&&b| alg.is_zero_path(&two_path(q, a, b)))
            .count();
        let zero_before = before
            .iter()
            .filter(|&&c| alg.is_zero_path(&two_path(q, c, a)))
            .count();
        let live_after = after.len() - zero_after;
        let live_before = before.len() - zero_before;
        if zero_after > 1 || zero_before > 1 {
            violations.push(Violation {
                condition: GentleCondition::ContinuationInIdeal,
                location: format!("arrow {}", info.name),
                message: format!(
                    "{zero_after} vanishing continuations after, {zero_before} before"
                ),
            });
        }
        if live_after > 1 || live_before > 1 {
            special = false;
            violations.push(Violation {
                condition: GentleCondition::ContinuationOutsideIdeal,
                location: format!("arrow {}", info.name),
                message: format!(
                    "{live_after} surviving continuations after, {live_before} before"
                ),
            });
        }
    }

    let rel = alg.presentation().relations();
    for m in &rel.monomials {
        if m.len() != 2 {
            violations.push(Violation {
                condition: GentleCondition::LengthTwoZeroRelations,
                location: format!("relation {}", m.display(q)),
                message: format!("zero relation of length {}", m.len()),
            });
        }
    }
    for (p, r) in &rel.binomials {
        violations.push(Violation {
            condition: GentleCondition::LengthTwoZeroRelations,
            location: format!("relation {} = {}", p.display(q), r.display(q)),
            message: "binomial relation".into(),
        });
    }

    GentleReport {
        is_special_biserial: special,
        is_gentle: violations.is_empty(),
        violations,
    }
}

pub fn is_special_biserial<F: Scalar>(alg: &BoundAlgebra<F>) -> bool {
    check_gentle(alg).is_special_biserial
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GentleError {
    #[error("presentation is not gentle")]
    NotGentle(GentleReport),
    #[error("maximal path bookkeeping failed: {0}")]
    Bookkeeping(String),
}

/// A member of the extended set of maximal paths: a nonzero maximal path or
/// a marked trivial path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaximalMember {
    Path(Path),
    Trivial(usize),
}

impl MaximalMember {
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        match self {
            MaximalMember::Path(p) => p.vertices(q),
            MaximalMember::Trivial(v) => vec![*v],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalPathSet {
    pub maximal: Vec<Path>,
    pub trivial_marks: Vec<usize>,
}

impl MaximalPathSet {
    /// Maximal paths first, then marked trivial paths, in a fixed order.
    pub fn members(&self) -> Vec<MaximalMember> {
        self.maximal
            .iter()
            .cloned()
            .map(MaximalMember::Path)
            .chain(self.trivial_marks.iter().copied().map(MaximalMember::Trivial))
            .collect()
    }

    fn validate(&self, q: &Quiver) -> Result<(), GentleError> {
        let mut arrow_hits = vec![0usize; q.arrow_count()];
        for p in &self.maximal {
            for &a in &p.arrows {
                arrow_hits[a] += 1;
            }
        }
        if let Some(a) = arrow_hits.iter().position(|&h| h != 1) {
            return Err(GentleError::Bookkeeping(format!(
                "arrow {} lies in {} maximal paths",
                q.arrow_info(a).name,
                arrow_hits[a]
            )));
        }
        let mut vertex_hits = vec![0usize; q.vertex_count()];
        for m in self.members() {
            for v in m.vertices(q) {
                vertex_hits[v] += 1;
            }
        }
        if let Some(v) = vertex_hits.iter().position(|&h| h != 2) {
            return Err(GentleError::Bookkeeping(format!(
                "vertex {} occurs {} times",
                q.vertex_name(v),
                vertex_hits[v]
            )));
        }
        Ok(())
    }
}

/// Maximal nonzero paths and the marked trivial paths of a gentle algebra.
pub fn maximal_paths<F: Scalar>(alg: &BoundAlgebra<F>) -> Result<MaximalPathSet, GentleError> {
    let report = check_gentle(alg);
    if !report.is_gentle {
        return Err(GentleError::NotGentle(report));
    }
    let q = alg.quiver();
    let live_after = |a: usize| {
        q.arrows_from(q.arrow_info(a).target)
            .find(|&b| !alg.is_zero_path(&two_path(q, a, b)))
    };
    let has_live_before = |a: usize| {
        q.arrows_into(q.arrow_info(a).source)
            .any(|c| !alg.is_zero_path(&two_path(q, c, a)))
    };

    let mut maximal = Vec::new();
    for a in 0..q.arrow_count() {
        if has_live_before(a) {
            continue;
        }
        let mut arrows = vec![a];
        let mut last = a;
        while let Some(b) = live_after(last) {
            arrows.push(b);
            last = b;
            if arrows.len() > alg.cutoff() {
                return Err(GentleError::Bookkeeping(
                    "nonzero path longer than the algebra allows".into(),
                ));
            }
        }
        maximal.push(Path {
            start: q.arrow_info(a).source,
            arrows,
        });
    }
    maximal.sort();

    let mut trivial_marks = Vec::new();
    for v in 0..q.vertex_count() {
        let outs: Vec<usize> = q.arrows_from(v).collect();
        let ins: Vec<usize> = q.arrows_into(v).collect();
        let marked = (ins.is_empty() && outs.len() == 1)
            || (outs.is_empty() && ins.len() == 1)
            || (ins.len() == 1
                && outs.len() == 1
                && !alg.is_zero_path(&two_path(q, ins[0], outs[0])));
        if marked {
            trivial_marks.push(v);
        }
    }

    let set = MaximalPathSet {
        maximal,
        trivial_marks,
    };
    set.validate(q)?;
    Ok(set)
}

/// Whether every path of length two is zero.
pub fn rad_square_zero<F: Scalar>(alg: &BoundAlgebra<F>) -> bool {
    alg.rad_square_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeTag {
    LinearAOriented,
    TypeATree,
    GeneralTree,
    TildeACycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverShape {
    pub tag: ShapeTag,
    pub branching_witness: Option<usize>,
}

impl QuiverShape {
    pub fn is_tree(&self) -> bool {
        matches!(
            self.tag,
            ShapeTag::LinearAOriented | ShapeTag::TypeATree | ShapeTag::GeneralTree
        )
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.tag, ShapeTag::LinearAOriented | ShapeTag::TypeATree)
    }
}

/// Classifies the underlying graph and orientation of the quiver.
pub fn quiver_shape(pres: &Presentation) -> QuiverShape {
    let q = pres.quiver();
    let n = q.vertex_count();
    let m = q.arrow_count();
    let has_loop = q.arrows().iter().any(|a| a.source == a.target);
    let degrees: Vec<usize> = (0..n).map(|v| q.underlying_degree(v)).collect();
    let branching_witness = degrees.iter().position(|&d| d >= 3);
    let connected = q.is_connected();

    let tag = if connected && !has_loop && m + 1 == n {
        if branching_witness.is_none() {
            let linear = (0..n)
                .all(|v| q.arrows_from(v).count() <= 1 && q.arrows_into(v).count() <= 1);
            if linear && pres.relations().is_empty() {
                ShapeTag::LinearAOriented
            } else {
                ShapeTag::TypeATree
            }
        } else {
            ShapeTag::GeneralTree
        }
    } else if connected && n >= 2 && m == n && degrees.iter().all(|&d| d == 2) {
        ShapeTag::TildeACycle
    } else {
        ShapeTag::Other
    };
    QuiverShape {
        tag,
        branching_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation_text;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn alg(text: &str) -> BoundAlgebra<Q> {
        BoundAlgebra::new(parse_presentation_text(text).unwrap()).unwrap()
    }

    #[test]
    fn loop_with_square_zero_is_gentle() {
        let a = alg("vertices: 1\narrow: x 1 1\nzero: x x\n");
        let r = check_gentle(&a);
        assert!(r.is_gentle && r.is_special_biserial);
        let m = maximal_paths(&a).unwrap();
        assert_eq!(m.maximal.len(), 1);
        assert!(m.trivial_marks.is_empty());
        assert_eq!(quiver_shape(a.presentation()).tag, ShapeTag::Other);
    }

    #[test]
    fn three_arrows_out_is_not_special_biserial() {
        let a = alg("vertices: 1 2 3 4\narrow: a 1 2\narrow: b 1 3\narrow: c 1 4\n");
        let r = check_gentle(&a);
        assert!(!r.is_special_biserial);
        assert!(!r.is_gentle);
        assert_eq!(r.violations[0].condition, GentleCondition::ArrowDegree);
        assert_eq!(quiver_shape(a.presentation()).branching_witness, Some(0));
        assert_eq!(quiver_shape(a.presentation()).tag, ShapeTag::GeneralTree);
    }

    #[test]
    fn two_zero_continuations_violate_gentle_only() {
        // a b = 0 and a c = 0: special biserial but not gentle
        let a = alg(
            "vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\nzero: a b\nzero: a c\n",
        );
        let r = check_gentle(&a);
        assert!(r.is_special_biserial);
        assert!(!r.is_gentle);
        assert!(r
            .violations
            .iter()
            .all(|v| v.condition == GentleCondition::ContinuationInIdeal));
    }

    #[test]
    fn two_live_continuations_violate_special_biserial() {
        let a = alg("vertices: 1 2 3 4\narrow: a 1 2\narrow: b 2 3\narrow: c 2 4\n");
        let r = check_gentle(&a);
        assert!(!r.is_special_biserial);
    }

    #[test]
    fn maximal_paths_reject_non_gentle() {
        let a = alg("vertices: 1 2\narrow: a 1 2\narrow: b 2 1\nzero: a b a\nzero: b a b\n");
        assert!(matches!(maximal_paths(&a), Err(GentleError::NotGentle(_))));
    }

    #[test]
    fn single_vertex_fails_bookkeeping() {
        let a = alg("vertices: 1\n");
        assert!(check_gentle(&a).is_gentle);
        assert!(matches!(maximal_paths(&a), Err(GentleError::Bookkeeping(_))));
    }

    #[test]
    fn kronecker_is_a_two_cycle_shape() {
        let a = alg("vertices: 1 2\narrow: a 1 2\narrow: b 1 2\n");
        assert_eq!(quiver_shape(a.presentation()).tag, ShapeTag::TildeACycle);
        let m = maximal_paths(&a).unwrap();
        assert_eq!(m.maximal.len(), 2);
        assert!(m.trivial_marks.is_empty());
    }
}
