//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn encode_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn decode_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::EdgeList {
                line,
                reason: format!("expected two integers, found {} fields", fields.len()),
            });
        }
        let num = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::EdgeList {
                line,
                reason: format!("`{s}`: {e}"),
            })
        };
        Ok((num(fields[0])?, num(fields[1])?))
    };
    let (line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(line, header)?;
    let mut g = Graph::from_edges(n, [])?;
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        g.add_edge(u, v).map_err(|e| Error::EdgeList {
            line,
            reason: e.to_string(),
        })?;
        count += 1;
    }
    if count != m {
        return Err(Error::EdgeList {
            line,
            reason: format!("header announces {m} edges but {count} were listed"),
        });
    }
    Ok(g)
}
