//! Text formats: a plain edge list and graph6.
//!
//! The edge-list format is a line `order N` followed by one `u v` line per
//! edge (0-based). Blank lines and `#` comments are ignored, and several
//! documents may follow one another in one input. graph6 input holds one
//! graph per line, optionally preceded by a `>>graph6<<` header.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";

/// Largest order graph6 can encode (36 bits).
pub const GRAPH6_MAX_ORDER: usize = (1 << 36) - 1;

/// Input syntaxes recognized by [`parse_graphs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Renders `g` as an edge-list document.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("order {}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

/// Significant lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_order_line(line_no: usize, line: &str) -> Result<usize> {
    let mut words = line.split_whitespace();
    if words.next() != Some("order") {
        return Err(parse_error(line_no, "expected `order N`"));
    }
    let n = words
        .next()
        .ok_or_else(|| parse_error(line_no, "missing order"))?
        .parse()
        .map_err(|e| parse_error(line_no, format!("bad order: {e}")))?;
    if words.next().is_some() {
        return Err(parse_error(line_no, "trailing text after order"));
    }
    Ok(n)
}

/// An edge-list document being read: its `order` line, order and edges.
type Pending = (usize, usize, Vec<(usize, usize)>);

fn parse_edge_documents(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<Pending> = None;
    let finish = |(line, order, edges): Pending| {
        Graph::new(order, edges).map_err(|e| parse_error(line, e.to_string()))
    };
    for (line_no, line) in content_lines(text) {
        if line.starts_with("order") {
            if let Some(doc) = current.take() {
                graphs.push(finish(doc)?);
            }
            current = Some((line_no, parse_order_line(line_no, line)?, Vec::new()));
            continue;
        }
        let Some((_, order, edges)) = current.as_mut() else {
            return Err(parse_error(line_no, "edge before `order` line"));
        };
        let ends: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = ends[..] else {
            return Err(parse_error(line_no, "expected two vertices"));
        };
        let parse_end = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| parse_error(line_no, format!("bad vertex `{s}`: {e}")))
        };
        let (u, v) = (parse_end(u)?, parse_end(v)?);
        if u.max(v) >= *order {
            return Err(parse_error(
                line_no,
                format!("edge {u}-{v} out of range for order {order}"),
            ));
        }
        if u == v {
            return Err(parse_error(line_no, format!("loop at vertex {u}")));
        }
        if edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
        {
            return Err(parse_error(line_no, format!("duplicate edge {u}-{v}")));
        }
        edges.push((u, v));
    }
    if let Some(doc) = current {
        graphs.push(finish(doc)?);
    }
    Ok(graphs)
}

/// Parses exactly one edge-list document.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graphs = parse_edge_documents(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(parse_error(1, "no `order` line")),
        _ => Err(parse_error(1, "more than one graph in input")),
    }
}

/// Encodes `g` in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InvalidParameter(format!(
            "order {n} exceeds the graph6 limit"
        )));
    }
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8);
    } else if n <= 258_047 {
        bytes.push(63);
        bytes.extend((0..3).rev().map(|k| (n >> (6 * k) & 63) as u8));
    } else {
        bytes.extend([63, 63]);
        bytes.extend((0..6).rev().map(|k| (n >> (6 * k) & 63) as u8));
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(word);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(word << (6 - filled));
    }
    Ok(bytes.into_iter().map(|b| char::from(b + 63)).collect())
}

/// Decodes one graph6 string; `line_no` is used in error messages.
fn decode_graph6(line_no: usize, s: &str) -> Result<Graph> {
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let mut data = Vec::with_capacity(s.len());
    for (i, b) in s.bytes().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_error(
                line_no,
                format!("byte {i} ({b:#04x}) outside the graph6 range"),
            ));
        }
        data.push(b - 63);
    }
    let truncated = || parse_error(line_no, "truncated graph6 order");
    let (n, body) = match data.as_slice() {
        [63, 63, rest @ ..] => {
            let head = rest.get(..6).ok_or_else(truncated)?;
            (
                head.iter().fold(0usize, |n, &b| n << 6 | b as usize),
                &rest[6..],
            )
        }
        [63, rest @ ..] => {
            let head = rest.get(..3).ok_or_else(truncated)?;
            (
                head.iter().fold(0usize, |n, &b| n << 6 | b as usize),
                &rest[3..],
            )
        }
        [first, rest @ ..] => (*first as usize, rest),
        [] => return Err(parse_error(line_no, "empty graph6 string")),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(parse_error(
            line_no,
            format!(
                "order {n} needs {} data bytes, found {}",
                bits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..body.len() * 6).any(bit) {
        return Err(parse_error(line_no, "nonzero padding bits"));
    }
    Graph::new(n, edges).map_err(|e| parse_error(line_no, e.to_string()))
}

/// Decodes a single graph6 string.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    decode_graph6(1, s.trim())
}

/// Guesses the format from the first significant line.
pub fn detect_format(text: &str) -> Format {
    match content_lines(text).next() {
        Some((_, line)) if line.starts_with("order") => Format::EdgeList,
        Some(_) => Format::Graph6,
        None => Format::EdgeList,
    }
}

/// Parses any number of graphs in either format, detected automatically.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_documents(text),
        // graph6 never contains `#`, so such lines are comments
        Format::Graph6 => text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .map(|(i, l)| decode_graph6(i, l))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn edge_list_round_trip() {
        let g = named::t1();
        let text = to_edge_list(&g);
        assert!(text.starts_with("order 9\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(to_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn edge_list_tolerates_comments() {
        let text = "# a triangle\n\norder 3\n0 1  # first\n1 2\n\n2 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), named::cycle(3).unwrap());
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let cases = [
            ("order 3\n0 1\n0 5\n", 3),
            ("order 3\n\n1 1\n", 3),
            ("order 3\n0 1\n1 0\n", 3),
            ("0 1\n", 1),
            ("order x\n", 1),
            ("order 3\n0 1 2\n", 2),
            ("order 3\n0 a\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn known_graph6_strings() {
        // standard encodings
        assert_eq!(to_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(to_graph6(&named::path(1).unwrap()).unwrap(), "A_");
        assert_eq!(to_graph6(&named::cycle(3).unwrap()).unwrap(), "Bw");
        assert_eq!(to_graph6(&named::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(to_graph6(&named::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), named::cycle(5).unwrap());
        assert_eq!(
            parse_graph6(">>graph6<<Bw").unwrap(),
            named::cycle(3).unwrap()
        );
    }

    #[test]
    fn long_order_forms() {
        for n in [62, 63, 100, 300] {
            let g = named::path(n - 1).unwrap();
            let s = to_graph6(&g).unwrap();
            if n > 62 {
                assert!(s.starts_with('~'));
            }
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert!(parse_graph6("B ").is_err());
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("~??").is_err());
    }

    #[test]
    fn detection() {
        let text = "Bw\nC~\n\n";
        assert_eq!(detect_format(text), Format::Graph6);
        assert_eq!(parse_graphs(text).unwrap().len(), 2);
        let text = "order 2\n0 1\norder 1\n";
        assert_eq!(detect_format(text), Format::EdgeList);
        let graphs = parse_graphs(text).unwrap();
        assert_eq!(graphs, vec![named::path(1).unwrap(), Graph::empty(1)]);
        assert!(parse_edge_list(text).is_err());
    }
}
