use std::fs;

use rigikit::catalog::catalog;
use rigikit::graph::{decode_edge_list, decode_graph6};
use rigikit::Graph;

use crate::args::GraphInput;
use crate::Failure;

pub fn load(input: &GraphInput) -> Result<Graph, Failure> {
    if let Some(text) = &input.graph6 {
        return Ok(decode_graph6(text.trim())?);
    }
    if let Some(path) = &input.g6_file {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Failure::Usage(format!("{}: no graph6 line", path.display())))?;
        return Ok(decode_graph6(line)?);
    }
    if let Some(path) = &input.edge_list {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        return Ok(decode_edge_list(&text)?);
    }
    if let Some(name) = &input.catalog {
        return Ok(catalog(name)?.graph);
    }
    Err(Failure::Usage("no graph given".into()))
}
