//! Text and JSON catalogs of enumeration results.

use serde::{Deserialize, Serialize};

use crate::canonical::{EquivalenceMode, PlaneTree};
use crate::error::{Error, Result};

/// A sorted list of plane tree classes of one size and mode.
///
/// Fields are declared in alphabetical order so the JSON keys come out sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCatalog {
    pub codes: Vec<String>,
    pub count: usize,
    pub mode: EquivalenceMode,
    pub vertices: usize,
}

impl PlaneCatalog {
    pub fn new(vertices: usize, mode: EquivalenceMode, trees: &[PlaneTree]) -> Self {
        Self {
            codes: trees.iter().map(PlaneTree::to_string).collect(),
            count: trees.len(),
            mode,
            vertices,
        }
    }

    pub fn header(&self) -> String {
        format!(
            "# plane-trees v={} mode={} count={}",
            self.vertices, self.mode, self.count
        )
    }

    /// Header line, then one serialized tree per line, LF-terminated.
    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for code in &self.codes {
            out.push_str(code);
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    /// Parses [`Self::to_text`] output, checking the header against the body
    /// and every line for canonical form.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedPlaneTree("empty catalog".into()))?;
        let bad = || Error::MalformedPlaneTree(format!("bad catalog header {header:?}"));
        let fields = header.strip_prefix("# plane-trees ").ok_or_else(bad)?;
        let mut vertices = None;
        let mut mode = None;
        let mut count = None;
        for field in fields.split(' ') {
            match field.split_once('=') {
                Some(("v", v)) => vertices = v.parse::<usize>().ok(),
                Some(("mode", m)) => mode = m.parse::<EquivalenceMode>().ok(),
                Some(("count", c)) => count = c.parse::<usize>().ok(),
                _ => return Err(bad()),
            }
        }
        let (vertices, mode, count) = (
            vertices.ok_or_else(bad)?,
            mode.ok_or_else(bad)?,
            count.ok_or_else(bad)?,
        );
        let mut codes = Vec::new();
        for line in lines {
            let tree = PlaneTree::parse(line, mode)?;
            if tree.vertex_count() != vertices {
                return Err(Error::MalformedPlaneTree(format!(
                    "{line} has {} vertices, catalog declares {vertices}",
                    tree.vertex_count()
                )));
            }
            codes.push(line.to_owned());
        }
        if codes.len() != count {
            return Err(Error::MalformedPlaneTree(format!(
                "header declares {count} trees, found {}",
                codes.len()
            )));
        }
        Ok(Self {
            codes,
            count,
            mode,
            vertices,
        })
    }
}

/// Rooted trees of one edge count; JSON keys sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedCatalog {
    pub codes: Vec<String>,
    pub count: usize,
    pub edges: usize,
}

impl RootedCatalog {
    pub fn header(&self) -> String {
        format!("# rooted-trees e={} count={}", self.edges, self.count)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_plane_center;
    use crate::limits::Limits;

    fn catalog(v: usize, mode: EquivalenceMode) -> PlaneCatalog {
        PlaneCatalog::new(v, mode, &enumerate_plane_center(v, mode, &Limits::default()).unwrap())
    }

    #[test]
    fn text_layout() {
        let c = catalog(4, EquivalenceMode::Oriented);
        assert_eq!(c.to_text(), "# plane-trees v=4 mode=oriented count=2\nB:(())()\nU:()()()\n");
    }

    #[test]
    fn json_keys_sorted() {
        let c = catalog(3, EquivalenceMode::Mirror);
        assert_eq!(
            c.to_json(),
            "{\n  \"codes\": [\n    \"U:()()\"\n  ],\n  \"count\": 1,\n  \"mode\": \"mirror\",\n  \"vertices\": 3\n}\n"
        );
    }

    #[test]
    fn text_parses_back() {
        let c = catalog(7, EquivalenceMode::Mirror);
        assert_eq!(PlaneCatalog::parse_text(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn parse_rejects_mismatches() {
        assert!(PlaneCatalog::parse_text("# plane-trees v=4 mode=oriented count=3\nB:(())()\nU:()()()\n").is_err());
        assert!(PlaneCatalog::parse_text("# plane-trees v=5 mode=oriented count=1\nU:()()()\n").is_err());
        assert!(PlaneCatalog::parse_text("# trees v=4\n").is_err());
        assert!(PlaneCatalog::parse_text("").is_err());
    }
}
