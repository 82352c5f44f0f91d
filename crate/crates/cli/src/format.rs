//! Text formats.
//!
//! Graph: a header line `n m d`, then `m` lines `u v`, ASCII with LF line
//! endings. Lines starting with `#` are comments. [`emit_graph`] writes the
//! canonical form: no comments, `u <= v`, edges sorted.
//!
//! Action: a line `n`, then four lines of `n` images, for the generators
//! `a`, `b`, `c`, `d` in that order.
//!
//! Labels: one generator letter per line, parallel to the edge lines of the
//! graph file.

use std::fmt::Write as _;

use hyperfinite::schreier::{Generator, InvolutionAction, SchreierGraph};
use hyperfinite::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: vertex {vertex} exceeds the degree bound {bound}")]
    DegreeBound { line: usize, vertex: usize, bound: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("invalid action: {0}")]
    Action(hyperfinite::Error),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
}

fn numbers(line: usize, text: &str, want: Option<usize>) -> Result<Vec<usize>, ParseError> {
    let parsed: Result<Vec<usize>, _> = text.split_ascii_whitespace().map(str::parse::<usize>).collect();
    let values = parsed.map_err(|e| ParseError::Malformed { line, reason: format!("{e}: {text:?}") })?;
    match want {
        Some(w) if values.len() != w => Err(ParseError::Malformed {
            line,
            reason: format!("expected {w} numbers, found {}", values.len()),
        }),
        _ => Ok(values),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let h = numbers(hline, header, Some(3))?;
    let (n, m, d) = (h[0], h[1], h[2]);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let uv = numbers(line, text, Some(2))?;
        let (u, v) = (uv[0], uv[1]);
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::EndpointOutOfRange { line, vertex: x, n });
            }
        }
        degree[u] += 1;
        if u != v {
            degree[v] += 1;
        }
        for x in [u, v] {
            if degree[x] > d {
                return Err(ParseError::DegreeBound { line, vertex: x, bound: d });
            }
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::new(n, d, edges).expect("endpoints and degrees were checked line by line"))
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("{} {} {}\n", g.n(), g.edges().len(), g.degree_bound());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_action(text: &str) -> Result<InvolutionAction, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n = numbers(hline, header, Some(1))?[0];
    let mut perms: [Vec<usize>; 4] = Default::default();
    for (i, slot) in perms.iter_mut().enumerate() {
        let (line, text) = lines.next().ok_or(ParseError::Malformed {
            line: hline + i + 1,
            reason: format!("missing images for generator {}", Generator::ALL[i]),
        })?;
        *slot = numbers(line, text, Some(n))?;
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Malformed { line, reason: "unexpected trailing line".into() });
    }
    InvolutionAction::new(perms).map_err(ParseError::Action)
}

pub fn emit_action(act: &InvolutionAction) -> String {
    let mut out = format!("{}\n", act.n());
    for g in Generator::ALL {
        let images: Vec<String> = act.images(g).iter().map(ToString::to_string).collect();
        writeln!(out, "{}", images.join(" ")).unwrap();
    }
    out
}

pub fn emit_labels(s: &SchreierGraph) -> String {
    s.labels.iter().map(|g| format!("{g}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperfinite::generators::path;

    #[test]
    fn path_on_three_vertices() {
        let g = parse_graph("3 2 4\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.degree_bound(), 4);
        assert_eq!(g.edges(), path(3).edges());
    }

    #[test]
    fn canonical_form_drops_comments_and_sorts() {
        let text = "# a comment\n4 3 3\n2 3\n# inside\n1 0\n0 2\n";
        assert_eq!(emit_graph(&parse_graph(text).unwrap()), "4 3 3\n0 1\n0 2\n2 3\n");
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            parse_graph("2 2 1\n0 1\n0 1\n"),
            Err(ParseError::DegreeBound { line: 3, vertex: 0, bound: 1 })
        );
        assert_eq!(
            parse_graph("2 1 1\n0 2\n"),
            Err(ParseError::EndpointOutOfRange { line: 2, vertex: 2, n: 2 })
        );
        assert!(matches!(parse_graph("2 1 1\n0 x\n"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("2 1\n"), Err(ParseError::Malformed { line: 1, .. })));
        assert_eq!(parse_graph("3 2 2\n0 1\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 }));
        assert_eq!(parse_graph("# only\n"), Err(ParseError::MissingHeader));
    }

    #[test]
    fn loops_count_once() {
        let g = parse_graph("1 4 4\n0 0\n0 0\n0 0\n0 0\n").unwrap();
        assert_eq!(g.degree(0), 4);
        assert!(matches!(parse_graph("1 5 4\n0 0\n0 0\n0 0\n0 0\n0 0\n"), Err(ParseError::DegreeBound { line: 6, .. })));
    }

    #[test]
    fn action_file() {
        let act = parse_action("2\n1 0\n1 0\n0 1\n0 1\n").unwrap();
        assert_eq!(emit_action(&act), "2\n1 0\n1 0\n0 1\n0 1\n");
        assert!(matches!(parse_action("3\n1 2 0\n0 1 2\n0 1 2\n0 1 2\n"), Err(ParseError::Action(_))));
        assert!(matches!(parse_action("2\n1 0\n1 0\n0 1\n"), Err(ParseError::Malformed { .. })));
    }
}
