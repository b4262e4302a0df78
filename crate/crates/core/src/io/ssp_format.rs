//! SSP instance text and JSON formats.
//!
//! Text: the first non-comment line is `u s`; the next `s` non-comment
//! lines each hold one subset as space-separated element ids. `#` starts a
//! comment to end of line; blank lines are ignored. JSON: an object
//! `{"u": int, "subsets": [[int]]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ssp::{InstanceError, SspInstance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseSspError {
    #[error("missing header line \"u s\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"u s\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: invalid integer token {token:?}")]
    BadInteger { line: usize, token: String },
    #[error("expected {expected} subset lines, found {found}")]
    MissingSubsets { expected: usize, found: usize },
    #[error("line {line}: unexpected content after the last subset")]
    TrailingContent { line: usize },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSsp {
    u: u32,
    subsets: Vec<Vec<u32>>,
}

/// Parses either format, sniffing JSON by a leading `{`.
pub fn parse_ssp(text: &str) -> Result<SspInstance, ParseSspError> {
    if text.trim_start().starts_with('{') {
        parse_ssp_json(text)
    } else {
        parse_ssp_text(text)
    }
}

pub fn parse_ssp_text(text: &str) -> Result<SspInstance, ParseSspError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(idx, line)| (idx + 1, line.split('#').next().unwrap_or("")))
        .filter(|(_, content)| !content.trim().is_empty());

    let (header_line, header) = data_lines.next().ok_or(ParseSspError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    let u: u32 = parse_token(tokens.next(), header_line)?
        .ok_or(ParseSspError::MalformedHeader { line: header_line })?;
    let s: usize = parse_token(tokens.next(), header_line)?
        .ok_or(ParseSspError::MalformedHeader { line: header_line })?;
    if tokens.next().is_some() {
        return Err(ParseSspError::MalformedHeader { line: header_line });
    }

    let mut subsets = Vec::with_capacity(s);
    for _ in 0..s {
        let Some((line_no, content)) = data_lines.next() else {
            return Err(ParseSspError::MissingSubsets {
                expected: s,
                found: subsets.len(),
            });
        };
        let subset: Vec<u32> = content
            .split_whitespace()
            .map(|tok| {
                tok.parse().map_err(|_| ParseSspError::BadInteger {
                    line: line_no,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        subsets.push(subset);
    }
    if let Some((line_no, _)) = data_lines.next() {
        return Err(ParseSspError::TrailingContent { line: line_no });
    }
    Ok(SspInstance::new(u, subsets)?)
}

fn parse_token<T: std::str::FromStr>(
    token: Option<&str>,
    line: usize,
) -> Result<Option<T>, ParseSspError> {
    match token {
        None => Ok(None),
        Some(tok) => tok
            .parse()
            .map(Some)
            .map_err(|_| ParseSspError::BadInteger {
                line,
                token: tok.to_string(),
            }),
    }
}

pub fn parse_ssp_json(text: &str) -> Result<SspInstance, ParseSspError> {
    let raw: RawSsp = serde_json::from_str(text).map_err(|e| ParseSspError::Json(e.to_string()))?;
    Ok(SspInstance::new(raw.u, raw.subsets)?)
}

pub fn write_ssp_text(inst: &SspInstance) -> String {
    let mut out = format!("{} {}\n", inst.universe_size(), inst.subset_count());
    for subset in inst.subsets() {
        let line: Vec<String> = subset.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_ssp_json(inst: &SspInstance) -> String {
    let raw = RawSsp {
        u: inst.universe_size(),
        subsets: inst.subsets().to_vec(),
    };
    let mut out = serde_json::to_string(&raw).expect("instance serializes");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_basic_instance() {
        let inst = parse_ssp_text("4 2\n1 2 3\n2 4\n").unwrap();
        assert_eq!(inst.universe_size(), 4);
        assert_eq!(inst.subsets(), &[vec![1, 2, 3], vec![2, 4]]);
    }

    #[test]
    fn parses_empty_family() {
        let inst = parse_ssp_text("2 0\n").unwrap();
        assert_eq!(inst.universe_size(), 2);
        assert_eq!(inst.subset_count(), 0);
    }

    #[test]
    fn sorts_unsorted_subsets() {
        let inst = parse_ssp_text("3 1\n3 1 2\n").unwrap();
        assert_eq!(inst.subsets(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn skips_comments_and_blank_lines() {
        let inst = parse_ssp_text("# instance\n\n4 2 # header\n1 2 3\n# middle\n2 4\n\n").unwrap();
        assert_eq!(inst.subset_count(), 2);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_ssp_text(""), Err(ParseSspError::MissingHeader));
        assert_eq!(
            parse_ssp_text("4\n"),
            Err(ParseSspError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_ssp_text("4 2 9\n"),
            Err(ParseSspError::MalformedHeader { line: 1 })
        );
        assert!(matches!(
            parse_ssp_text("x 2\n"),
            Err(ParseSspError::BadInteger { line: 1, .. })
        ));
        assert_eq!(
            parse_ssp_text("4 2\n1 2\n"),
            Err(ParseSspError::MissingSubsets {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_ssp_text("4 1\n1 2\n3 4\n"),
            Err(ParseSspError::TrailingContent { line: 3 })
        );
        assert_eq!(
            parse_ssp_text("4 1\n1 5\n"),
            Err(ParseSspError::Instance(InstanceError::ElementOutOfRange {
                element: 5,
                subset: 1,
                u: 4
            }))
        );
        assert_eq!(
            parse_ssp_text("4 1\n2 2\n"),
            Err(ParseSspError::Instance(InstanceError::DuplicateElement {
                element: 2,
                subset: 1
            }))
        );
    }

    #[test]
    fn json_round_trip_and_sniffing() {
        let inst = parse_ssp_text("4 2\n1 2 3\n2 4\n").unwrap();
        let json = write_ssp_json(&inst);
        assert_eq!(parse_ssp(&json).unwrap(), inst);
        let text = write_ssp_text(&inst);
        assert_eq!(parse_ssp(&text).unwrap(), inst);
    }

    #[test]
    fn json_rejects_empty_subset_and_unknown_fields() {
        assert!(matches!(
            parse_ssp_json(r#"{"u": 3, "subsets": [[]]}"#),
            Err(ParseSspError::Instance(InstanceError::EmptySubset {
                subset: 1
            }))
        ));
        assert!(matches!(
            parse_ssp_json(r#"{"u": 3, "subsets": [[1,2]], "extra": 1}"#),
            Err(ParseSspError::Json(_))
        ));
    }
}
