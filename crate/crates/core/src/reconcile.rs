//! Side-by-side comparison of published counts with computed ones.
//!
//! A mismatch is data, not an error: the report only records it.

use std::fmt;

use serde::Serialize;

use crate::canonical::EquivalenceMode;
use crate::enumerate::{count_plane, enumerate_plane_oracle};
use crate::error::Result;
use crate::limits::Limits;
use crate::morse::count_flows;
use crate::tree::count_rooted;

/// Published rooted-tree counts, indexed by edge count 0..=5.
pub const PUBLISHED_ROOTED: [u64; 6] = [1, 1, 2, 5, 14, 51];
/// Published plane-tree counts, indexed by vertex count minus one (1..=8).
pub const PUBLISHED_PLANE: [u64; 8] = [1, 1, 1, 2, 3, 6, 14, 26];
/// Published flow counts, indexed by saddle count minus one (1..=7).
pub const PUBLISHED_FLOWS: [u64; 7] = [1, 1, 2, 3, 6, 14, 26];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Subject {
    Rooted { edges: usize },
    Plane { vertices: usize, mode: EquivalenceMode },
    Flows { saddles: usize, mode: EquivalenceMode },
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Rooted { edges } => write!(f, "rooted  edges={edges}"),
            Subject::Plane { vertices, mode } => write!(f, "plane   vertices={vertices} mode={mode}"),
            Subject::Flows { saddles, mode } => write!(f, "flows   saddles={saddles} mode={mode}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconcileRow {
    pub subject: Subject,
    pub published: u64,
    pub computed: u64,
    pub matches: bool,
}

impl ReconcileRow {
    fn new(subject: Subject, published: u64, computed: u64) -> Self {
        Self {
            subject,
            published,
            computed,
            matches: published == computed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconcileReport {
    pub rows: Vec<ReconcileRow>,
}

impl ReconcileReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &ReconcileRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn row(&self, subject: Subject) -> Option<&ReconcileRow> {
        self.rows.iter().find(|r| r.subject == subject)
    }
}

impl fmt::Display for ReconcileReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<36} {:>9} {:>9}  status", "subject", "published", "computed")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<36} {:>9} {:>9}  {}",
                r.subject.to_string(),
                r.published,
                r.computed,
                if r.matches { "match" } else { "MISMATCH" }
            )?;
        }
        Ok(())
    }
}

/// Builds the full table. Rooted counts come from the closed form; the
/// 8-vertex plane rows come from the exhaustive oracle so the report does not
/// depend on the generator it is meant to audit.
pub fn reconcile_with_paper() -> Result<ReconcileReport> {
    let limits = Limits::default();
    let mut rows = Vec::new();
    for (edges, &published) in PUBLISHED_ROOTED.iter().enumerate() {
        let computed = u64::try_from(count_rooted(edges)).expect("small");
        rows.push(ReconcileRow::new(Subject::Rooted { edges }, published, computed));
    }
    for mode in EquivalenceMode::ALL {
        for (i, &published) in PUBLISHED_PLANE.iter().enumerate() {
            let vertices = i + 1;
            let computed = if vertices == 8 {
                enumerate_plane_oracle(vertices, mode)?.len()
            } else {
                count_plane(vertices, mode, &limits)?
            };
            rows.push(ReconcileRow::new(Subject::Plane { vertices, mode }, published, computed as u64));
        }
    }
    for mode in EquivalenceMode::ALL {
        for (i, &published) in PUBLISHED_FLOWS.iter().enumerate() {
            let saddles = i + 1;
            let computed = count_flows(saddles, mode, &limits)?;
            rows.push(ReconcileRow::new(Subject::Flows { saddles, mode }, published, computed as u64));
        }
    }
    Ok(ReconcileReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_rows() {
        let report = reconcile_with_paper().unwrap();
        let four = report.row(Subject::Rooted { edges: 4 }).unwrap();
        assert_eq!((four.published, four.computed, four.matches), (14, 14, true));
        let five = report.row(Subject::Rooted { edges: 5 }).unwrap();
        assert_eq!((five.published, five.computed, five.matches), (51, 42, false));
    }

    #[test]
    fn seven_vertex_row_matches_oriented() {
        let report = reconcile_with_paper().unwrap();
        let row = report
            .row(Subject::Plane {
                vertices: 7,
                mode: EquivalenceMode::Oriented,
            })
            .unwrap();
        assert!(row.matches);
    }

    #[test]
    fn table_marks_mismatches() {
        let text = reconcile_with_paper().unwrap().to_string();
        let line = text.lines().find(|l| l.starts_with("rooted  edges=5")).unwrap();
        assert!(line.ends_with("MISMATCH"), "{line}");
    }
}
