//! Reading presentation and Brauer graph files.

use std::path::Path as FsPath;

use brauerkit::brauer::{parse_brauer_text, BrauerError, BrauerGraph};
use brauerkit::presentation::{
    parse_presentation_text, PresentationError, Presentation, DEFAULT_MAX_PATH_LEN,
};
use brauerkit::Algebra;

use crate::report::digest;
use crate::CliError;

pub const MAX_PATH_LEN_VAR: &str = "BRAUERKIT_MAX_PATH_LEN";

#[derive(Clone, Debug)]
pub enum Input {
    Presentation(Presentation),
    Graph(BrauerGraph),
}

#[derive(Clone, Debug)]
pub struct Loaded {
    /// File stem, used to name the algebra in reports.
    pub name: String,
    pub digest: String,
    pub input: Input,
}

/// A file is a Brauer graph if its first keyword is one of the graph
/// keywords; otherwise it is read as a presentation.
pub fn is_graph_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| ["bvertex:", "bedge:", "cyclic:"].iter().any(|k| l.starts_with(k)))
}

pub fn presentation_error(e: PresentationError) -> CliError {
    if e.line().is_some() {
        CliError::Parse(e.to_string())
    } else {
        CliError::Validation(e.to_string())
    }
}

pub fn graph_error(e: BrauerError) -> CliError {
    match e {
        BrauerError::Syntax { .. } => CliError::Parse(e.to_string()),
        other => CliError::Validation(other.to_string()),
    }
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    if is_graph_text(text) {
        parse_brauer_text(text).map(Input::Graph).map_err(graph_error)
    } else {
        parse_presentation_text(text)
            .map(Input::Presentation)
            .map_err(presentation_error)
    }
}

pub fn load(path: &FsPath) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::Parse(format!("{} is not UTF-8", path.display())))?;
    Ok(Loaded {
        name: path
            .file_stem()
            .map_or_else(|| "input".to_string(), |s| s.to_string_lossy().into_owned()),
        digest: digest(&bytes),
        input: parse_input(&text)?,
    })
}

/// Path length cap for admissibility detection, overridable from the
/// environment.
pub fn max_path_len() -> Result<usize, CliError> {
    match std::env::var(MAX_PATH_LEN_VAR) {
        Err(_) => Ok(DEFAULT_MAX_PATH_LEN),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 2)
            .ok_or_else(|| CliError::Validation(format!("{MAX_PATH_LEN_VAR}={v} is not an integer >= 2"))),
    }
}

pub fn bind(pres: Presentation) -> Result<Algebra, CliError> {
    Algebra::with_max_path_len(pres, max_path_len()?).map_err(presentation_error)
}

#[cfg(test)]
mod tests {
    use super::*;
    use brauerkit::fixtures;

    #[test]
    fn format_detection() {
        assert!(is_graph_text(fixtures::LINE3));
        assert!(!is_graph_text(fixtures::F1));
        assert!(matches!(parse_input(fixtures::F4), Ok(Input::Presentation(_))));
    }

    #[test]
    fn error_classes() {
        let bad = parse_input("vertices: 1 2\narrow: a 1 3\n").unwrap_err();
        assert_eq!(bad.exit_code(), 1);
        let bad = parse_input("bvertex: a\nbedge: 1 a a\n").unwrap_err();
        assert_eq!(bad.exit_code(), 2);
    }
}
