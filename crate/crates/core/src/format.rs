//! Text formats for coloured posets, link diagrams, and graphs.
//!
//! All three formats are line-based; blank lines and `#` comments are
//! skipped everywhere. Matrices are written over the integers and cast to
//! the ring named in the header when the file is instantiated.
//!
//! Coloured posets:
//!
//! ```text
//! poset Q                  # or: boolean 2 Q
//! elem a rank 1
//! elem top rank 2
//! cover a top
//! map 1
//! map -1
//! ```
//!
//! Every `cover x y` is followed by `rank(y)` rows `map <rank(x) ints>`.
//! A `boolean <r> <ring>` header replaces the carrier with the Boolean
//! lattice of rank `r`; elements are then named by their atom sets (`0`,
//! `a1`, `a1a3`, ...) and all covers of the lattice must be given maps.
//!
//! Link diagrams: header `pd n+ <k> n- <m>`, then one `X a b c d` per
//! crossing. Graphs: header `graph <vertices>`, then `e u v` lines whose
//! order fixes the atom order.

use std::collections::HashMap;
use std::num::ParseIntError;

use num::BigInt;
use thiserror::Error;

use crate::boolean::BooleanLattice;
use crate::chromatic::{GraphError, SimpleGraph};
use crate::coloured::{ColouredData, ColouringError};
use crate::khovanov::{DiagramError, PlanarDiagram};
use crate::matrix::Matrix;
use crate::ring::{Integers, RingError, RingSpec};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("no `poset`, `boolean`, `pd`, or `graph` header found")]
    MissingHeader,
    #[error("line {line}: expected {want}, got `{got}`")]
    Malformed {
        line: usize,
        want: &'static str,
        got: String,
    },
    #[error("line {line}: {source}")]
    Number {
        line: usize,
        #[source]
        source: ParseIntError,
    },
    #[error("line {line}: {source}")]
    Ring {
        line: usize,
        #[source]
        source: RingError,
    },
    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },
    #[error("line {line}: duplicate element `{name}`")]
    DuplicateElement { line: usize, name: String },
    #[error("line {line}: `{directive}` appears before the matrix of the previous cover is complete")]
    UnfinishedMatrix { line: usize, directive: String },
    #[error("line {line}: map row has {got} entries, expected {want}")]
    RowLength {
        line: usize,
        want: usize,
        got: usize,
    },
    #[error("line {line}: stray `map` row with no preceding cover")]
    StrayMapRow { line: usize },
    #[error("line {line}: cover {x} {y} declared twice")]
    DuplicateCover { line: usize, x: String, y: String },
    #[error("file ends before the matrix of the last cover is complete")]
    TruncatedMatrix,
    #[error("line {line}: element `{name}` is not part of the declared Boolean lattice")]
    NotALatticeElement { line: usize, name: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
}

/// A parsed coloured-poset file: the integer template, the ring named in
/// the header, and the Boolean rank when the carrier was declared as one.
#[derive(Debug, Clone)]
pub struct PosetFile {
    pub data: ColouredData,
    pub ring: RingSpec,
    pub boolean_rank: Option<u32>,
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_int<T: std::str::FromStr<Err = ParseIntError>>(
    line: usize,
    token: &str,
) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|source| ParseError::Number { line, source })
}

pub fn parse_coloured(text: &str) -> Result<PosetFile, ParseError> {
    let mut lines = numbered_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::MissingHeader);
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut ranks: Vec<usize> = Vec::new();
    let (ring, boolean_rank) = match tokens.as_slice() {
        ["poset", ring] => (parse_ring(header_line, ring)?, None),
        ["boolean", r, ring] => {
            let rank: u32 = parse_int(header_line, r)?;
            let lattice =
                BooleanLattice::new(rank).map_err(|e| ParseError::Malformed {
                    line: header_line,
                    want: "a Boolean rank of at most 16",
                    got: e.to_string(),
                })?;
            for x in 0..lattice.len() as u32 {
                let name = lattice.name(x);
                index.insert(name.clone(), x as usize);
                names.push(name);
            }
            ranks = vec![0; names.len()];
            (parse_ring(header_line, ring)?, Some(rank))
        }
        _ => return Err(ParseError::MissingHeader),
    };

    let boolean_covers: Option<Vec<(usize, usize)>> = boolean_rank.map(|r| {
        let lattice = BooleanLattice::new(r).unwrap();
        lattice.poset().covers().to_vec()
    });
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut edges: Vec<((usize, usize), Matrix<Integers>)> = Vec::new();
    // rows collected for the cover currently being read
    let mut pending: Option<((usize, usize), usize, Vec<Vec<BigInt>>)> = None;

    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["elem", name, "rank", k] => {
                if pending.is_some() {
                    return Err(ParseError::UnfinishedMatrix {
                        line,
                        directive: "elem".into(),
                    });
                }
                let rank: usize = parse_int(line, k)?;
                if boolean_rank.is_some() {
                    let Some(&i) = index.get(*name) else {
                        return Err(ParseError::NotALatticeElement {
                            line,
                            name: name.to_string(),
                        });
                    };
                    ranks[i] = rank;
                } else {
                    if index.contains_key(*name) {
                        return Err(ParseError::DuplicateElement {
                            line,
                            name: name.to_string(),
                        });
                    }
                    index.insert(name.to_string(), names.len());
                    names.push(name.to_string());
                    ranks.push(rank);
                }
            }
            ["cover", x, y] => {
                if let Some((key, want, rows)) = pending.take() {
                    if rows.len() != want {
                        return Err(ParseError::UnfinishedMatrix {
                            line,
                            directive: "cover".into(),
                        });
                    }
                    push_edge(&mut covers, &mut edges, key, ranks[key.0], rows, line, &names)?;
                }
                let lookup = |name: &str| {
                    index
                        .get(name)
                        .copied()
                        .ok_or_else(|| ParseError::UnknownElement {
                            line,
                            name: name.to_string(),
                        })
                };
                let key = (lookup(x)?, lookup(y)?);
                pending = Some((key, ranks[key.1], Vec::new()));
            }
            ["map", entries @ ..] => {
                let Some((key, want_rows, rows)) = pending.as_mut() else {
                    return Err(ParseError::StrayMapRow { line });
                };
                let want = ranks[key.0];
                if entries.len() != want {
                    return Err(ParseError::RowLength {
                        line,
                        want,
                        got: entries.len(),
                    });
                }
                let mut row = Vec::with_capacity(entries.len());
                for e in entries {
                    row.push(BigInt::from(parse_int::<i64>(line, e)?));
                }
                rows.push(row);
                if rows.len() > *want_rows {
                    return Err(ParseError::RowLength {
                        line,
                        want: *want_rows,
                        got: rows.len(),
                    });
                }
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    want: "`elem`, `cover`, or `map`",
                    got: content.to_string(),
                })
            }
        }
    }
    if let Some((key, want, rows)) = pending.take() {
        if rows.len() != want {
            return Err(ParseError::TruncatedMatrix);
        }
        push_edge(&mut covers, &mut edges, key, ranks[key.0], rows, 0, &names)?;
    }

    if let Some(lattice_covers) = boolean_covers {
        covers = lattice_covers;
    }
    let data = ColouredData {
        names,
        covers,
        ranks,
        edges,
    };
    // reject structural problems (no unique top, missing or non-commuting
    // maps) at parse time; integer functoriality carries to every ring
    data.over(&Integers)?;
    Ok(PosetFile {
        data,
        ring,
        boolean_rank,
    })
}

fn parse_ring(line: usize, token: &str) -> Result<RingSpec, ParseError> {
    RingSpec::parse(token).map_err(|source| ParseError::Ring { line, source })
}

fn push_edge(
    covers: &mut Vec<(usize, usize)>,
    edges: &mut Vec<((usize, usize), Matrix<Integers>)>,
    key: (usize, usize),
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    line: usize,
    names: &[String],
) -> Result<(), ParseError> {
    if edges.iter().any(|(k, _)| *k == key) {
        return Err(ParseError::DuplicateCover {
            line,
            x: names[key.0].clone(),
            y: names[key.1].clone(),
        });
    }
    let m = if rows.is_empty() {
        Matrix::zero(&Integers, 0, cols)
    } else {
        Matrix::from_bigint_rows(rows).expect("rows validated line by line")
    };
    covers.push(key);
    edges.push((key, m));
    Ok(())
}

/// Render a coloured-poset template in the format `parse_coloured` reads.
pub fn write_coloured(file: &PosetFile) -> String {
    let mut out = String::new();
    match file.boolean_rank {
        Some(r) => out.push_str(&format!("boolean {r} {}\n", file.ring)),
        None => out.push_str(&format!("poset {}\n", file.ring)),
    }
    for (name, rank) in file.data.names.iter().zip(&file.data.ranks) {
        out.push_str(&format!("elem {name} rank {rank}\n"));
    }
    for (key, m) in &file.data.edges {
        out.push_str(&format!(
            "cover {} {}\n",
            file.data.names[key.0], file.data.names[key.1]
        ));
        for i in 0..m.rows() {
            out.push_str("map");
            for j in 0..m.cols() {
                out.push_str(&format!(" {}", m.get(i, j)));
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_pd(text: &str) -> Result<PlanarDiagram, ParseError> {
    let mut lines = numbered_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::MissingHeader);
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let ["pd", "n+", np, "n-", nm] = tokens.as_slice() else {
        return Err(ParseError::MissingHeader);
    };
    let n_plus: usize = parse_int(header_line, np)?;
    let n_minus: usize = parse_int(header_line, nm)?;
    let mut crossings = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let ["X", a, b, c, d] = tokens.as_slice() else {
            return Err(ParseError::Malformed {
                line,
                want: "`X a b c d`",
                got: content.to_string(),
            });
        };
        crossings.push([
            parse_int(line, a)?,
            parse_int(line, b)?,
            parse_int(line, c)?,
            parse_int(line, d)?,
        ]);
    }
    Ok(PlanarDiagram::new(crossings, n_plus, n_minus)?)
}

pub fn write_pd(d: &PlanarDiagram) -> String {
    let mut out = format!("pd n+ {} n- {}\n", d.n_plus(), d.n_minus());
    for [a, b, c, d] in d.crossings() {
        out.push_str(&format!("X {a} {b} {c} {d}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = numbered_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(ParseError::MissingHeader);
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let ["graph", n] = tokens.as_slice() else {
        return Err(ParseError::MissingHeader);
    };
    let vertices: usize = parse_int(header_line, n)?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let ["e", u, v] = tokens.as_slice() else {
            return Err(ParseError::Malformed {
                line,
                want: "`e u v`",
                got: content.to_string(),
            });
        };
        edges.push((parse_int(line, u)?, parse_int(line, v)?));
    }
    Ok(SimpleGraph::new(vertices, edges)?)
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.vertices());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;

    const TWO_CHAIN: &str = "poset Q\nelem a rank 1\nelem top rank 1\ncover a top\nmap 2\n";

    #[test]
    fn parse_simple_poset() {
        let file = parse_coloured(TWO_CHAIN).unwrap();
        assert_eq!(file.ring, RingSpec::Rationals);
        assert_eq!(file.data.names, vec!["a", "top"]);
        assert_eq!(file.data.ranks, vec![1, 1]);
        let cp = file.data.over(&Rationals).unwrap();
        assert_eq!(cp.top(), 1);
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let text = "# colouring of the two-chain\n\nposet Z # header\nelem a rank 1\nelem top rank 1\ncover a top # the only cover\nmap 2\n";
        let file = parse_coloured(text).unwrap();
        assert_eq!(file.ring, RingSpec::Integers);
        assert_eq!(file.data.edges.len(), 1);
    }

    #[test]
    fn boolean_header_uses_lattice_names() {
        let text = "boolean 1 Fp:3\nelem 0 rank 1\nelem a1 rank 2\ncover 0 a1\nmap 1\nmap 1\n";
        let file = parse_coloured(text).unwrap();
        assert_eq!(file.boolean_rank, Some(1));
        assert_eq!(file.data.names, vec!["0", "a1"]);
        assert_eq!(file.data.ranks, vec![1, 2]);

        let bad = "boolean 1 Z\nelem b rank 1\n";
        assert!(matches!(
            parse_coloured(bad),
            Err(ParseError::NotALatticeElement { line: 2, .. })
        ));
    }

    #[test]
    fn roundtrip_coloured() {
        let file = parse_coloured(TWO_CHAIN).unwrap();
        let text = write_coloured(&file);
        let again = parse_coloured(&text).unwrap();
        assert_eq!(again.data.names, file.data.names);
        assert_eq!(again.data.covers, file.data.covers);
        assert_eq!(again.data.ranks, file.data.ranks);
        assert_eq!(again.data.edges, file.data.edges);
        assert_eq!(again.ring, file.ring);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let missing_row = "poset Z\nelem a rank 1\nelem top rank 2\ncover a top\nmap 1\n";
        assert!(matches!(
            parse_coloured(missing_row),
            Err(ParseError::TruncatedMatrix)
        ));

        let bad_row = "poset Z\nelem a rank 2\nelem top rank 1\ncover a top\nmap 1\n";
        assert!(matches!(
            parse_coloured(bad_row),
            Err(ParseError::RowLength { line: 5, want: 2, got: 1 })
        ));

        let unknown = "poset Z\nelem a rank 1\ncover a b\n";
        assert!(matches!(
            parse_coloured(unknown),
            Err(ParseError::UnknownElement { line: 3, .. })
        ));

        let stray = "poset Z\nelem a rank 1\nmap 1\n";
        assert!(matches!(parse_coloured(stray), Err(ParseError::StrayMapRow { line: 3 })));

        let bad_number = "poset Z\nelem a rank x\n";
        assert!(matches!(
            parse_coloured(bad_number),
            Err(ParseError::Number { line: 2, .. })
        ));
    }

    #[test]
    fn pd_roundtrip_and_errors() {
        let text = "pd n+ 2 n- 0\nX 4 1 3 2\nX 2 3 1 4\n";
        let d = parse_pd(text).unwrap();
        assert_eq!(d.n_plus(), 2);
        assert_eq!(d.crossings().len(), 2);
        assert_eq!(write_pd(&d), text);

        assert!(matches!(parse_pd("pd n+ 1 n- 0\nY 1 1 2 2\n"),
            Err(ParseError::Malformed { line: 2, .. })));
        // sign counts are validated by the diagram itself
        assert!(matches!(
            parse_pd("pd n+ 0 n- 0\nX 1 1 2 2\n"),
            Err(ParseError::Diagram(DiagramError::SignCount { .. }))
        ));
    }

    #[test]
    fn graph_roundtrip_and_errors() {
        let text = "graph 3\ne 0 1\ne 1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertices(), 3);
        assert_eq!(write_graph(&g), text);

        assert!(matches!(
            parse_graph("graph 2\ne 0 5\n"),
            Err(ParseError::Graph(GraphError::VertexOutOfRange { v: 5, n: 2 }))
        ));
        assert!(matches!(
            parse_graph("graph 2\nedge 0 1\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
    }
}
