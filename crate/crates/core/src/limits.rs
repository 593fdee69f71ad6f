//! Size guards for the exhaustive generators.

use crate::error::{Error, Result};

/// Environment variable that overrides the rooted enumeration cap.
pub const MAX_EDGES_ENV: &str = "PLANE_FOREST_MAX_EDGES";

pub const DEFAULT_MAX_EDGES: usize = 16;
pub const DEFAULT_MAX_PLANE_VERTICES: usize = 12;
pub const ORACLE_MAX_VERTICES: usize = 10;
pub const REROOTING_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest edge count accepted by rooted enumeration.
    pub max_edges: usize,
    /// Largest vertex count accepted by the center-gluing plane enumeration.
    pub max_plane_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_edges: DEFAULT_MAX_EDGES,
            max_plane_vertices: DEFAULT_MAX_PLANE_VERTICES,
        }
    }
}

impl Limits {
    /// Defaults, with `PLANE_FOREST_MAX_EDGES` raising or lowering both caps.
    ///
    /// The plane cap follows the edge cap as `max_edges + 1` vertices when the
    /// variable is set. Unparsable values are reported, not ignored.
    pub fn from_env() -> std::result::Result<Self, String> {
        match std::env::var(MAX_EDGES_ENV) {
            Ok(raw) => {
                let max_edges: usize = raw
                    .trim()
                    .parse()
                    .map_err(|_| format!("{MAX_EDGES_ENV}={raw:?} is not a non-negative integer"))?;
                Ok(Self::with_max_edges(max_edges))
            }
            Err(std::env::VarError::NotPresent) => Ok(Self::default()),
            Err(e) => Err(format!("{MAX_EDGES_ENV}: {e}")),
        }
    }

    pub fn with_max_edges(max_edges: usize) -> Self {
        Self {
            max_edges,
            max_plane_vertices: max_edges.saturating_add(1),
        }
    }

    pub fn check_edges(&self, edges: usize) -> Result<()> {
        check("edges", edges, self.max_edges)
    }

    pub fn check_plane_vertices(&self, vertices: usize) -> Result<()> {
        check("vertices", vertices, self.max_plane_vertices)
    }
}

pub(crate) fn check(what: &'static str, requested: usize, limit: usize) -> Result<()> {
    if requested > limit {
        Err(Error::LimitExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}
