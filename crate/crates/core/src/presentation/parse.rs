//! Reader for the presentation text format.
//!
//! ```text
//! # comment
//! vertices: 1 2 3
//! arrow: a 1 2
//! arrow: b 2 3
//! zero: a b
//! equal: a b = c d
//! ```

use super::{Path, Presentation, PresentationError, Quiver, RelationSet};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: offset + line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: offset + line[..s].chars().count() + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> PresentationError {
    PresentationError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn at_line(line: usize) -> impl Fn(PresentationError) -> PresentationError {
    move |e| PresentationError::AtLine {
        line,
        source: Box::new(e),
    }
}

/// Parses and validates the structure of a presentation. Normal forms (and
/// with them the admissibility check) are built by [`super::BoundAlgebra`].
pub fn parse_presentation_text(text: &str) -> Result<Presentation, PresentationError> {
    let mut quiver = Quiver::new();
    // relation lines are resolved after all arrows are known
    let mut zero_lines: Vec<(usize, Vec<(String, usize)>)> = Vec::new();
    let mut equal_lines: Vec<(usize, Vec<(String, usize)>, Vec<(String, usize)>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            let col = line.len() - line.trim_start().len() + 1;
            return Err(syntax(lineno, col, "expected `<keyword>: ...`"));
        };
        let keyword = line[..colon].trim();
        let rest_offset = line[..=colon].chars().count();
        let rest = tokens(&line[colon + 1..], rest_offset);
        let kw_col = line.len() - line.trim_start().len() + 1;
        match keyword {
            "vertices" => {
                if rest.is_empty() {
                    return Err(syntax(lineno, rest_offset + 1, "no vertex ids given"));
                }
                for t in rest {
                    quiver.add_vertex(t.text).map_err(|e| match e {
                        PresentationError::DuplicateVertex(v) => {
                            syntax(lineno, t.column, format!("duplicate vertex `{v}`"))
                        }
                        other => other,
                    })?;
                }
            }
            "arrow" => {
                if rest.len() != 3 {
                    let col = rest.get(3).map_or(rest_offset + 1, |t| t.column);
                    return Err(syntax(lineno, col, "expected `arrow: <name> <source> <target>`"));
                }
                if rest[0].text == "=" {
                    return Err(syntax(lineno, rest[0].column, "`=` is not a valid arrow name"));
                }
                quiver
                    .add_arrow(rest[0].text, rest[1].text, rest[2].text)
                    .map_err(at_line(lineno))?;
            }
            "zero" => {
                if rest.is_empty() {
                    return Err(syntax(lineno, rest_offset + 1, "empty zero relation"));
                }
                zero_lines.push((
                    lineno,
                    rest.iter().map(|t| (t.text.to_string(), t.column)).collect(),
                ));
            }
            "equal" => {
                let eqs: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| t.text == "=")
                    .map(|(i, _)| i)
                    .collect();
                if eqs.len() != 1 {
                    return Err(syntax(
                        lineno,
                        rest_offset + 1,
                        "expected `equal: <path> = <path>`",
                    ));
                }
                let split = eqs[0];
                let lhs: Vec<_> = rest[..split]
                    .iter()
                    .map(|t| (t.text.to_string(), t.column))
                    .collect();
                let rhs: Vec<_> = rest[split + 1..]
                    .iter()
                    .map(|t| (t.text.to_string(), t.column))
                    .collect();
                if lhs.is_empty() || rhs.is_empty() {
                    return Err(syntax(lineno, rest[split].column, "empty side in binomial"));
                }
                equal_lines.push((lineno, lhs, rhs));
            }
            other => {
                return Err(syntax(lineno, kw_col, format!("unknown keyword `{other}`")));
            }
        }
    }

    let resolve = |lineno: usize, names: &[(String, usize)]| -> Result<Path, PresentationError> {
        let mut arrows = Vec::with_capacity(names.len());
        for (name, col) in names {
            let a = quiver
                .arrow(name)
                .map_err(|_| syntax(lineno, *col, format!("unknown arrow `{name}`")))?;
            arrows.push(a);
        }
        Path::from_arrows(&quiver, arrows).map_err(at_line(lineno))
    };

    let mut relations = RelationSet::default();
    for (lineno, names) in &zero_lines {
        relations.monomials.push(resolve(*lineno, names)?);
    }
    for (lineno, lhs, rhs) in &equal_lines {
        relations
            .binomials
            .push((resolve(*lineno, lhs)?, resolve(*lineno, rhs)?));
    }
    Presentation::new(quiver, relations)
}
