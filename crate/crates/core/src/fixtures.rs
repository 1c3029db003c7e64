//! Small algebras and Brauer graphs used by tests, the CLI and the
//! verification harness.

use crate::brauer::{parse_brauer_text, BrauerGraph};
use crate::presentation::{parse_presentation_text, Presentation};

/// Path algebra of A2.
pub const F1: &str = include_str!("../fixtures/F1.txt");
/// Linear A3 without relations.
pub const F2: &str = include_str!("../fixtures/F2.txt");
/// Linear A3 with radical square zero.
pub const F3: &str = include_str!("../fixtures/F3.txt");
/// Brauer line algebra on two edges.
pub const F4: &str = include_str!("../fixtures/F4.txt");
/// Cyclic Ã3 with radical square zero.
pub const F5: &str = include_str!("../fixtures/F5.txt");
/// `K[x]/(x^2)`.
pub const F6: &str = include_str!("../fixtures/F6.txt");

pub const LINE3: &str = include_str!("../fixtures/line3.brauer");
pub const CYCLE4: &str = include_str!("../fixtures/cycle4.brauer");
pub const TRIANGLE_PENDANT: &str = include_str!("../fixtures/triangle_pendant.brauer");
pub const STAR2_M2: &str = include_str!("../fixtures/star2_m2.brauer");

pub const PRESENTATIONS: [(&str, &str); 6] = [
    ("F1", F1),
    ("F2", F2),
    ("F3", F3),
    ("F4", F4),
    ("F5", F5),
    ("F6", F6),
];

pub fn presentation(text: &str) -> Presentation {
    parse_presentation_text(text).expect("shipped fixture parses")
}

pub fn graph(text: &str) -> BrauerGraph {
    parse_brauer_text(text).expect("shipped fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{classify_graph, shapes, GraphTag};

    #[test]
    fn fixtures_parse() {
        for (_, text) in PRESENTATIONS {
            presentation(text);
        }
        assert!(graph(LINE3).equivalent(&shapes::line(3)));
        assert!(graph(CYCLE4).equivalent(&shapes::cycle(4)));
        assert_eq!(classify_graph(&graph(TRIANGLE_PENDANT)).tag, GraphTag::Other);
        assert_eq!(classify_graph(&graph(STAR2_M2)).exceptional_vertices.len(), 1);
    }
}
