//! Canonical forms of unrooted plane trees.
//!
//! A plane tree is re-rooted at its center. With one center the root's
//! neighbours form a cyclic sequence, and the representative is the rotation
//! whose code is least. With two centers the central edge is placed first at
//! one of its endpoints, and the least of the two choices is kept. Mirror mode
//! additionally minimizes over the reflected tree. Below the root, child
//! order is fixed relative to the parent edge.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::tree::{DyckCode, RootedPlaneTree};

/// Which plane isomorphisms identify two trees.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivalenceMode {
    /// Orientation-preserving: rotations of the cyclic orders only.
    #[default]
    Oriented,
    /// Rotations plus a global reflection.
    Mirror,
}

impl EquivalenceMode {
    pub const ALL: [EquivalenceMode; 2] = [EquivalenceMode::Oriented, EquivalenceMode::Mirror];

    pub fn as_str(self) -> &'static str {
        match self {
            EquivalenceMode::Oriented => "oriented",
            EquivalenceMode::Mirror => "mirror",
        }
    }
}

impl fmt::Display for EquivalenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EquivalenceMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "oriented" => Ok(EquivalenceMode::Oriented),
            "mirror" => Ok(EquivalenceMode::Mirror),
            other => Err(format!("unknown mode {other:?} (expected oriented or mirror)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Centrality {
    Unicentral,
    Bicentral,
}

impl Centrality {
    pub fn tag(self) -> char {
        match self {
            Centrality::Unicentral => 'U',
            Centrality::Bicentral => 'B',
        }
    }
}

/// Canonical representative of a plane tree class.
///
/// `canon` is the code of a rooted representative: rooted at the center
/// (unicentral) or at a central vertex with the central edge as first child
/// (bicentral). It always decodes to a tree of the class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    canon: DyckCode,
    mode: EquivalenceMode,
    centrality: Centrality,
}

impl PlaneTree {
    pub fn canon(&self) -> &DyckCode {
        &self.canon
    }

    pub fn mode(&self) -> EquivalenceMode {
        self.mode
    }

    pub fn centrality(&self) -> Centrality {
        self.centrality
    }

    pub fn vertex_count(&self) -> usize {
        self.canon.edge_count() + 1
    }

    pub fn edge_count(&self) -> usize {
        self.canon.edge_count()
    }

    /// The rooted representative stored as `canon`.
    pub fn representative(&self) -> RootedPlaneTree {
        self.canon.decode()
    }

    /// `U:<code>` or `B:<code>`; the mode lives at file level.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses a serialized line and checks that it is canonical for `mode`.
    pub fn parse(line: &str, mode: EquivalenceMode) -> Result<Self> {
        let (tag, code) = split_tagged(line)
            .ok_or_else(|| Error::MalformedPlaneTree(format!("expected U:<code> or B:<code>, got {line:?}")))?;
        let code = DyckCode::parse(code)?;
        let canonical = canonical_plane(&code.decode(), mode);
        if canonical.centrality.tag() != tag || canonical.canon != code {
            return Err(Error::MalformedPlaneTree(format!(
                "{line:?} is not in canonical {mode} form (expected {canonical})"
            )));
        }
        Ok(canonical)
    }
}

/// Splits `U:<code>` / `B:<code>` into tag and code text.
pub fn split_tagged(line: &str) -> Option<(char, &str)> {
    let rest = line.strip_prefix("U:").map(|r| ('U', r));
    rest.or_else(|| line.strip_prefix("B:").map(|r| ('B', r)))
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.centrality.tag(), self.canon)
    }
}

impl PartialOrd for PlaneTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by mode, then by the serialized line.
impl Ord for PlaneTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.mode
            .cmp(&other.mode)
            .then(self.centrality.tag().cmp(&other.centrality.tag()))
            .then_with(|| self.canon.cmp(&other.canon))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterResult {
    /// Preorder vertex ids in the rooted tree, ascending; one or two entries.
    pub centers: Vec<usize>,
    /// Eccentricity of each center, in edges.
    pub radius: usize,
}

impl CenterResult {
    pub fn centrality(&self) -> Centrality {
        if self.centers.len() == 1 {
            Centrality::Unicentral
        } else {
            Centrality::Bicentral
        }
    }
}

/// Center(s) of `tree`; vertex ids are preorder positions with the root at `0`.
pub fn center(tree: &RootedPlaneTree) -> CenterResult {
    let (centers, radius) = Embedding::from_rooted(tree).centers();
    CenterResult { centers, radius }
}

pub fn canonical_plane(tree: &RootedPlaneTree, mode: EquivalenceMode) -> PlaneTree {
    canonical_of_embedding(&Embedding::from_rooted(tree), mode)
}

pub(crate) fn canonical_of_embedding(emb: &Embedding, mode: EquivalenceMode) -> PlaneTree {
    let (centers, _) = emb.centers();
    let reflected;
    let mut views = vec![emb];
    if mode == EquivalenceMode::Mirror {
        reflected = emb.reflect();
        views.push(&reflected);
    }

    let (centrality, canon) = match centers[..] {
        [c] => {
            let canon = views
                .iter()
                .flat_map(|e| least_rotation_code(e, c))
                .min()
                .expect("at least one candidate");
            (Centrality::Unicentral, canon)
        }
        [a, b] => {
            let canon = views
                .iter()
                .flat_map(|e| {
                    let from_a = e.position(a, b).expect("centers are adjacent");
                    let from_b = e.position(b, a).expect("centers are adjacent");
                    [e.code_from(a, from_a), e.code_from(b, from_b)]
                })
                .min()
                .expect("at least one candidate");
            (Centrality::Bicentral, canon)
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    PlaneTree {
        canon,
        mode,
        centrality,
    }
}

/// Least code among all rotations of the cyclic order at `root`.
fn least_rotation_code(emb: &Embedding, root: usize) -> Option<DyckCode> {
    let deg = emb.degree(root);
    if deg == 0 {
        return Some(DyckCode::default());
    }
    let blocks: Vec<String> = emb
        .neighbours(root)
        .iter()
        .map(|&v| format!("({})", emb.branch_code(v, root)))
        .collect();
    let start = least_rotation(&blocks);
    let mut out = String::with_capacity(2 * (emb.vertex_count() - 1));
    for k in 0..deg {
        out.push_str(&blocks[(start + k) % deg]);
    }
    Some(DyckCode::from_trusted(out))
}

/// Start index of the least rotation of `blocks`, comparing rotations by
/// their concatenated text. Plain scan; ties keep the earliest start.
pub(crate) fn least_rotation(blocks: &[String]) -> usize {
    let n = blocks.len();
    let mut best = 0;
    for start in 1..n {
        let cand = (0..n).flat_map(|k| blocks[(start + k) % n].bytes());
        let incumbent = (0..n).flat_map(|k| blocks[(best + k) % n].bytes());
        if cand.lt(incumbent) {
            best = start;
        }
    }
    best
}

pub fn is_isomorphic(a: &RootedPlaneTree, b: &RootedPlaneTree, mode: EquivalenceMode) -> bool {
    a.edge_count() == b.edge_count() && canonical_plane(a, mode) == canonical_plane(b, mode)
}
