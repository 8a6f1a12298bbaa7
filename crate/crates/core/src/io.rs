//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated non-negative integers. Lines
//! starting with `#` are comments, except the directive `# n <count>`, which
//! fixes the vertex count.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses an edge list from a string.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("n") {
                let count = words.next().and_then(|w| w.parse::<usize>().ok());
                match (count, words.next()) {
                    (Some(c), None) => n = Some(c),
                    _ => {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("malformed vertex-count directive `{trimmed}`"),
                        })
                    }
                }
            }
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let mut id = || -> Result<usize> {
            let field = fields.next().ok_or_else(|| Error::Parse {
                line: lineno,
                message: "expected two vertex ids".into(),
            })?;
            field.parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("`{field}` is not a non-negative integer"),
            })
        };
        let u = id()?;
        let v = id()?;
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: "trailing fields after edge".into(),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edge_list(n, edges)
}

/// Writes the `# n` directive followed by every edge `u v` with `u < v`, sorted.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    writeln!(out, "# n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_edge_list_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge list is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_directive() {
        let g = parse_edge_list("# a comment\n# n 6\n0 1\n\n1   2\n2 1\n").unwrap();
        assert_eq!((g.n(), g.m()), (6, 2));
    }

    #[test]
    fn writer_sorts_and_orients() {
        let g = Graph::from_edge_list(None, [(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(to_edge_list_string(&g), "# n 4\n0 1\n0 2\n1 3\n");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(parse_edge_list("0 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("-1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("# n two\n"), Err(Error::Parse { .. })));
        assert_eq!(parse_edge_list("3 3\n"), Err(Error::SelfLoop(3)));
        assert!(matches!(
            parse_edge_list("# n 2\n0 5\n"),
            Err(Error::VertexOutOfRange { vertex: 5, n: 2 })
        ));
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(n in 1usize..40, raw in prop::collection::vec((0usize..40, 0usize..40), 0..120)) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v).collect();
            let g = Graph::from_edge_list(Some(n), edges).unwrap();
            let back = parse_edge_list(&to_edge_list_string(&g)).unwrap();
            prop_assert_eq!(&back, &g);
            let again = Graph::from_edge_list(Some(n), g.to_edge_list()).unwrap();
            prop_assert_eq!(again, g);
        }
    }
}
