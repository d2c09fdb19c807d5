//! Plain-text file formats for dice sets and digraphs.
//!
//! Dice sets:
//!
//! ```text
//! # dice-set v1
//! A: 9 5 1
//! B: 8 4 3
//! C: 7 6 2
//! ```
//!
//! Digraphs:
//!
//! ```text
//! # digraph v1
//! vertices: a b c
//! edge: a b
//! ```
//!
//! In both, the header must be the first line; blank lines and anything
//! after `#` on later lines are ignored. Several dice sets may share a file
//! when separated by a line holding only `---`; each block has its own header.

use std::collections::HashSet;

use crate::dice::{DiceSet, Die};
use crate::error::{parse_err, Error, Result};
use crate::graph::Digraph;

pub const DICE_HEADER: &str = "# dice-set v1";
pub const DIGRAPH_HEADER: &str = "# digraph v1";
pub const BLOCK_SEPARATOR: &str = "---";

pub fn write_dice_set(s: &DiceSet<u64>) -> String {
    let mut out = String::from(DICE_HEADER);
    out.push('\n');
    out.push_str(&s.to_string());
    out
}

pub fn write_dice_sets(sets: &[DiceSet<u64>]) -> String {
    sets.iter()
        .map(write_dice_set)
        .collect::<Vec<_>>()
        .join(&format!("{BLOCK_SEPARATOR}\n"))
}

/// Content lines after the header, with their 1-based line numbers.
fn body<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<Vec<(usize, &'a str)>> {
    let mut lines = lines.peekable();
    while let Some((_, l)) = lines.peek() {
        if l.trim().is_empty() {
            lines.next();
        } else {
            break;
        }
    }
    match lines.next() {
        Some((_, l)) if l.trim() == header => {}
        Some((no, l)) => {
            return Err(parse_err(no, format!("expected {header:?}, found {:?}", l.trim())))
        }
        None => return Err(parse_err(1, format!("missing {header:?} header"))),
    }
    Ok(lines
        .map(|(no, l)| (no, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn reattach(line: usize) -> impl FnOnce(Error) -> Error {
    move |e| match e {
        Error::InvalidInput(m) => parse_err(line, m),
        other => other,
    }
}

fn parse_die_line(no: usize, line: &str) -> Result<Die<u64>> {
    let (name, values) = line
        .split_once(':')
        .ok_or_else(|| parse_err(no, "expected `<name>: v1 v2 ...`"))?;
    let faces = values
        .split_whitespace()
        .map(|tok| match tok.parse::<u64>() {
            Ok(0) => Err(parse_err(no, "labels must be positive")),
            Ok(v) => Ok(v),
            Err(_) => Err(parse_err(no, format!("bad label {tok:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Die::new(name.trim(), faces).map_err(reattach(no))
}

fn parse_dice_lines<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<DiceSet<u64>> {
    let content = body(lines, DICE_HEADER)?;
    let last = content.last().map_or(1, |(no, _)| *no);
    let dice = content
        .into_iter()
        .map(|(no, l)| parse_die_line(no, l))
        .collect::<Result<Vec<_>>>()?;
    if dice.is_empty() {
        return Err(parse_err(last, "dice set has no dice"));
    }
    DiceSet::new(dice).map_err(reattach(last))
}

pub fn parse_dice_set(text: &str) -> Result<DiceSet<u64>> {
    parse_dice_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

/// Parses `---`-separated dice-set blocks. Empty input yields no sets.
pub fn parse_dice_sets(text: &str) -> Result<Vec<DiceSet<u64>>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, l) in text.lines().enumerate() {
        if l.trim() == BLOCK_SEPARATOR {
            blocks.push(Vec::new());
        } else {
            blocks.last_mut().expect("nonempty").push((i + 1, l));
        }
    }
    if blocks.len() == 1 && blocks[0].iter().all(|(_, l)| l.trim().is_empty()) {
        return Ok(Vec::new());
    }
    blocks
        .into_iter()
        .map(|b| parse_dice_lines(b.into_iter()))
        .collect()
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut out = format!("{DIGRAPH_HEADER}\nvertices: {}\n", g.names().join(" "));
    for (u, v) in g.arcs() {
        out.push_str(&format!("edge: {} {}\n", g.name(u), g.name(v)));
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let content = body(text.lines().enumerate().map(|(i, l)| (i + 1, l)), DIGRAPH_HEADER)?;
    let mut graph: Option<Digraph> = None;
    let mut seen = HashSet::new();
    for (no, line) in content {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| parse_err(no, "expected `vertices:` or `edge:`"))?;
        match key.trim() {
            "vertices" => {
                if graph.is_some() {
                    return Err(parse_err(no, "duplicate vertices line"));
                }
                graph = Some(Digraph::new(rest.split_whitespace()).map_err(reattach(no))?);
            }
            "edge" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(no, "edge before vertices line"))?;
                let ends: Vec<&str> = rest.split_whitespace().collect();
                let [u, v] = ends[..] else {
                    return Err(parse_err(no, "edge needs exactly two vertices"));
                };
                if !seen.insert((u.to_string(), v.to_string())) {
                    return Err(parse_err(no, format!("duplicate edge {u} {v}")));
                }
                g.add_arc_by_name(u, v).map_err(reattach(no))?;
            }
            other => return Err(parse_err(no, format!("unknown key {other:?}"))),
        }
    }
    graph.ok_or_else(|| parse_err(1, "missing vertices line"))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIPLE: &str = "# dice-set v1\nA: 9 5 1\nB: 8 4 3\nC: 7 6 2\n";

    #[test]
    fn dice_round_trip_is_bit_exact() {
        let s = parse_dice_set(TRIPLE).unwrap();
        assert_eq!(write_dice_set(&s), TRIPLE);
    }

    #[test]
    fn dice_comments_and_blank_lines() {
        let text = "# dice-set v1\n\n# a comment\nA: 9 5 1   # trailing\n\nB: 8 4 3\nC: 7 6 2";
        assert_eq!(parse_dice_set(text).unwrap(), parse_dice_set(TRIPLE).unwrap());
    }

    #[test]
    fn dice_errors_carry_line_numbers() {
        let cases = [
            ("A: 9 5 1\n", 1),
            ("# dice-set v1\nA 9 5 1\n", 2),
            ("# dice-set v1\nA: 9 x 1\n", 2),
            ("# dice-set v1\nA: 1 5 9\n", 2),
            ("# dice-set v1\nA: 9 5 0\n", 2),
            ("# dice-set v1\nA: 9 5 1\nB: 9 4 3\n", 3),
            ("# dice-set v1\n", 1),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse_dice_set(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn multiple_blocks() {
        let s = parse_dice_set(TRIPLE).unwrap();
        let text = write_dice_sets(&[s.clone(), s.clone()]);
        assert_eq!(text.matches(BLOCK_SEPARATOR).count(), 1);
        assert_eq!(parse_dice_sets(&text).unwrap(), vec![s.clone(), s]);
        assert!(parse_dice_sets("").unwrap().is_empty());
    }

    #[test]
    fn digraph_round_trip() {
        let text = "# digraph v1\nvertices: a b c\nedge: a b\nedge: b c\nedge: c a\n";
        let g = parse_digraph(text).unwrap();
        assert_eq!(g.arc_count(), 3);
        assert_eq!(write_digraph(&g), text);
    }

    #[test]
    fn digraph_errors() {
        for text in [
            "vertices: a b\n",
            "# digraph v1\nedge: a b\n",
            "# digraph v1\nvertices: a b\nedge: a c\n",
            "# digraph v1\nvertices: a b\nedge: a a\n",
            "# digraph v1\nvertices: a b\nedge: a b\nedge: a b\n",
            "# digraph v1\nvertices: a b\nedge: a\n",
            "# digraph v1\nvertices: a a\n",
            "# digraph v1\nnodes: a\n",
            "# digraph v1\n",
        ] {
            assert!(matches!(parse_digraph(text), Err(Error::Parse { .. })), "{text:?}");
        }
    }
}
