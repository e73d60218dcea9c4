//! graph6 stream ingestion.

use crate::error::{Error, Result};
use crate::graph::{graph6, Graph};
use std::path::Path;

/// Decodes one graph per line. Blank lines and `#` comments are ignored;
/// errors carry the 1-based line number.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = graph6::decode(line).map_err(|e| Error::Input(format!("line {}: {e}", i + 1)))?;
        out.push(g);
    }
    Ok(out)
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse_graph6_stream(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Like [`read_graph6_file`], but every graph must be connected and cubic.
pub fn read_cubic_file(path: &Path) -> Result<Vec<Graph>> {
    let graphs = read_graph6_file(path)?;
    for (i, g) in graphs.iter().enumerate() {
        if !g.is_cubic() || !g.is_connected() {
            return Err(Error::Input(format!(
                "{}: graph {} is not a connected cubic graph",
                path.display(),
                i + 1
            )));
        }
    }
    Ok(graphs)
}
