//! Reader for the Brauer graph text format.
//!
//! ```text
//! bvertex: c m=2
//! bvertex: x m=1
//! bedge: 1 c x
//! cyclic: c 1
//! ```

use std::collections::HashMap;

use super::{BEdge, BVertex, BrauerError, BrauerGraph};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> BrauerError {
    BrauerError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

struct Field<'a> {
    text: &'a str,
    column: usize,
}

fn fields(line: &str, offset: usize) -> Vec<Field<'_>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in line.split_whitespace() {
        let start = pos + line[pos..].find(piece).unwrap_or(0);
        out.push(Field {
            text: piece,
            column: offset + line[..start].chars().count() + 1,
        });
        pos = start + piece.len();
    }
    out
}

pub fn parse_brauer_text(text: &str) -> Result<BrauerGraph, BrauerError> {
    let mut vertices: Vec<BVertex> = Vec::new();
    let mut vindex: HashMap<String, usize> = HashMap::new();
    let mut raw_edges: Vec<(usize, String, (String, usize), (String, usize))> = Vec::new();
    let mut raw_cyclic: Vec<(usize, (String, usize), Vec<(String, usize)>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let kw_col = line.len() - line.trim_start().len() + 1;
        let Some(colon) = line.find(':') else {
            return Err(syntax(lineno, kw_col, "expected `<keyword>: ...`"));
        };
        let offset = line[..=colon].chars().count();
        let rest = fields(&line[colon + 1..], offset);
        match line[..colon].trim() {
            "bvertex" => {
                if rest.is_empty() || rest.len() > 2 {
                    return Err(syntax(lineno, offset + 1, "expected `bvertex: <id> m=<int>`"));
                }
                let id = rest[0].text.to_string();
                let m = match rest.get(1) {
                    None => 1,
                    Some(f) => f
                        .text
                        .strip_prefix("m=")
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| syntax(lineno, f.column, "expected `m=<int>`"))?,
                };
                if vindex.contains_key(&id) {
                    return Err(syntax(lineno, rest[0].column, format!("duplicate vertex `{id}`")));
                }
                vindex.insert(id.clone(), vertices.len());
                vertices.push(BVertex { id, multiplicity: m });
            }
            "bedge" => {
                if rest.len() != 3 {
                    return Err(syntax(
                        lineno,
                        offset + 1,
                        "expected `bedge: <id> <vertex> <vertex>`",
                    ));
                }
                raw_edges.push((
                    lineno,
                    rest[0].text.to_string(),
                    (rest[1].text.to_string(), rest[1].column),
                    (rest[2].text.to_string(), rest[2].column),
                ));
            }
            "cyclic" => {
                if rest.len() < 2 {
                    return Err(syntax(lineno, offset + 1, "expected `cyclic: <vertex> <edge> ...`"));
                }
                raw_cyclic.push((
                    lineno,
                    (rest[0].text.to_string(), rest[0].column),
                    rest[1..]
                        .iter()
                        .map(|f| (f.text.to_string(), f.column))
                        .collect(),
                ));
            }
            other => {
                return Err(syntax(lineno, kw_col, format!("unknown keyword `{other}`")));
            }
        }
    }

    let lookup_vertex = |lineno: usize, (name, col): &(String, usize)| {
        vindex
            .get(name)
            .copied()
            .ok_or_else(|| syntax(lineno, *col, format!("unknown vertex `{name}`")))
    };

    let mut edges = Vec::new();
    let mut eindex: HashMap<String, usize> = HashMap::new();
    for (lineno, id, u, v) in &raw_edges {
        let ends = (lookup_vertex(*lineno, u)?, lookup_vertex(*lineno, v)?);
        if eindex.insert(id.clone(), edges.len()).is_some() {
            return Err(syntax(*lineno, 1, format!("duplicate edge `{id}`")));
        }
        edges.push(BEdge {
            id: id.clone(),
            ends,
        });
    }

    let mut rotation = vec![Vec::new(); vertices.len()];
    for (lineno, v, es) in &raw_cyclic {
        let vi = lookup_vertex(*lineno, v)?;
        if !rotation[vi].is_empty() {
            return Err(syntax(*lineno, v.1, format!("second cyclic order for `{}`", v.0)));
        }
        for (name, col) in es {
            let e = eindex
                .get(name)
                .copied()
                .ok_or_else(|| syntax(*lineno, *col, format!("unknown edge `{name}`")))?;
            rotation[vi].push(e);
        }
    }
    BrauerGraph::new(vertices, edges, rotation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_optional_at_leaves() {
        let g = parse_brauer_text(
            "bvertex: c m=1\nbvertex: x m=1\nbvertex: y m=1\nbedge: 1 c x\nbedge: 2 c y\ncyclic: c 2 1\n",
        )
        .unwrap();
        assert_eq!(g.rotation(0), &[1, 0]);
        assert_eq!(g.rotation(1), &[0]);
    }

    #[test]
    fn unknown_edge_position() {
        let err = parse_brauer_text("bvertex: c m=1\nbvertex: x m=1\nbedge: 1 c x\ncyclic: c 9\n")
            .unwrap_err();
        assert_eq!(
            err,
            BrauerError::Syntax {
                line: 4,
                column: 11,
                message: "unknown edge `9`".into()
            }
        );
    }

    #[test]
    fn bad_multiplicity() {
        let err = parse_brauer_text("bvertex: c k=1\n").unwrap_err();
        assert!(matches!(err, BrauerError::Syntax { line: 1, column: 12, .. }));
    }

    #[test]
    fn missing_rotation_at_degree_two() {
        let err = parse_brauer_text(
            "bvertex: c m=1\nbvertex: x m=1\nbvertex: y m=1\nbedge: 1 c x\nbedge: 2 c y\n",
        )
        .unwrap_err();
        assert_eq!(err, BrauerError::MissingRotation("c".into()));
    }
}
