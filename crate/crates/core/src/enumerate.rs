//! Plane trees with a given number of vertices, one per class.
//!
//! The generator glues rooted trees at a common vertex (or along a common
//! edge) that is forced to be the center of the result, so every class is
//! built from exactly one cyclic arrangement of parts. A second, slower path
//! canonicalizes every rooted tree and deduplicates; the two must agree.

use std::collections::BTreeMap;

use crate::canonical::{canonical_plane, center, Centrality, EquivalenceMode, PlaneTree};
use crate::error::{Error, Result};
use crate::limits::{check, Limits, ORACLE_MAX_VERTICES};
use crate::oracle::rerooting_oracle_canon;
use crate::tree::{DyckCode, DyckWords, RootedPlaneTree};

/// Parts glued at a central vertex or along a central edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterGluingSpec {
    pub kind: Centrality,
    /// Unicentral: the branches around the center in cyclic order.
    /// Bicentral: the two sides of the central edge.
    pub parts: Vec<RootedPlaneTree>,
    pub target_vertices: usize,
}

impl CenterGluingSpec {
    /// Checks the size and height conditions that make the glue point the center.
    pub fn is_valid(&self) -> bool {
        let sizes: usize = self.parts.iter().map(RootedPlaneTree::vertex_count).sum();
        let heights: Vec<usize> = self.parts.iter().map(RootedPlaneTree::height).collect();
        match self.kind {
            Centrality::Unicentral => {
                let max = heights.iter().copied().max().unwrap_or(0);
                self.parts.len() >= 2
                    && sizes + 1 == self.target_vertices
                    && heights.iter().filter(|&&h| h == max).count() >= 2
            }
            Centrality::Bicentral => {
                self.parts.len() == 2 && sizes == self.target_vertices && heights[0] == heights[1]
            }
        }
    }

    /// The glued tree, rooted at the center (unicentral) or at the first
    /// part's root with the central edge as its first child (bicentral).
    pub fn assemble(&self) -> RootedPlaneTree {
        match self.kind {
            Centrality::Unicentral => RootedPlaneTree::new(self.parts.clone()),
            Centrality::Bicentral => {
                let mut children = vec![self.parts[1].clone()];
                children.extend(self.parts[0].children().iter().cloned());
                RootedPlaneTree::new(children)
            }
        }
    }

    /// Preorder ids that must come out as the center of [`Self::assemble`].
    fn expected_centers(&self) -> Vec<usize> {
        match self.kind {
            Centrality::Unicentral => vec![0],
            Centrality::Bicentral => vec![0, 1],
        }
    }
}

/// A rooted tree of the part pool with its cached code and height.
#[derive(Debug, Clone)]
struct Part {
    code: DyckCode,
    mirror: DyckCode,
    height: usize,
    tree: RootedPlaneTree,
}

/// All rooted trees with 1..=max_vertices vertices, indexed by vertex count.
fn part_pool(max_vertices: usize) -> Vec<Vec<Part>> {
    (0..=max_vertices)
        .map(|size| {
            if size == 0 {
                return Vec::new();
            }
            DyckWords::new(size - 1)
                .map(|code| {
                    let tree = code.decode();
                    Part {
                        mirror: tree.reflect().encode(),
                        height: tree.height(),
                        code,
                        tree,
                    }
                })
                .collect()
        })
        .collect()
}

/// Is `seq` the least of its rotations?
fn is_least_rotation<T: Ord>(seq: &[T]) -> bool {
    let n = seq.len();
    (1..n).all(|r| {
        let rotated = seq[r..].iter().chain(&seq[..r]);
        seq.iter().le(rotated)
    })
}

/// Is `seq` no greater than any rotation of `other`?
fn le_all_rotations<T: Ord>(seq: &[T], other: &[T]) -> bool {
    let n = other.len();
    (0..n).all(|r| {
        let rotated = other[r..].iter().chain(&other[..r]);
        seq.iter().le(rotated)
    })
}

/// One spec per unicentral class: cyclic arrangements of at least two parts
/// with `total` vertices in all, at least two of them of maximal height.
fn unicentral_specs(
    pool: &[Vec<Part>],
    total: usize,
    target: usize,
    mode: EquivalenceMode,
) -> Vec<CenterGluingSpec> {
    let mut out = Vec::new();
    let mut seq: Vec<&Part> = Vec::new();
    extend_sequence(pool, total, &mut seq, &mut |seq: &[&Part]| {
        if seq.len() < 2 {
            return;
        }
        let max = seq.iter().map(|p| p.height).max().unwrap_or(0);
        if seq.iter().filter(|p| p.height == max).count() < 2 {
            return;
        }
        let codes: Vec<&DyckCode> = seq.iter().map(|p| &p.code).collect();
        if !is_least_rotation(&codes) {
            return;
        }
        if mode == EquivalenceMode::Mirror {
            let reflected: Vec<&DyckCode> = seq.iter().rev().map(|p| &p.mirror).collect();
            if !le_all_rotations(&codes, &reflected) {
                return;
            }
        }
        out.push(CenterGluingSpec {
            kind: Centrality::Unicentral,
            parts: seq.iter().map(|p| p.tree.clone()).collect(),
            target_vertices: target,
        });
    });
    out
}

/// Depth-first over ordered compositions of `remaining` into parts.
///
/// A least rotation starts with its least element, so parts after the first
/// are never below it; that prunes without losing any necklace.
fn extend_sequence<'a>(
    pool: &'a [Vec<Part>],
    remaining: usize,
    seq: &mut Vec<&'a Part>,
    emit: &mut dyn FnMut(&[&Part]),
) {
    if remaining == 0 {
        emit(seq);
        return;
    }
    for size in 1..=remaining {
        for part in &pool[size] {
            if let Some(first) = seq.first() {
                if part.code < first.code {
                    continue;
                }
            }
            seq.push(part);
            extend_sequence(pool, remaining - size, seq, emit);
            seq.pop();
        }
    }
}

/// One spec per bicentral class: two equal-height sides, up to swapping
/// (and reflection in mirror mode).
fn bicentral_specs(pool: &[Vec<Part>], target: usize, mode: EquivalenceMode) -> Vec<CenterGluingSpec> {
    let mut out = Vec::new();
    for size1 in 1..target {
        let size2 = target - size1;
        for p1 in &pool[size1] {
            for p2 in &pool[size2] {
                if p1.height != p2.height || p1.code > p2.code {
                    continue;
                }
                if mode == EquivalenceMode::Mirror {
                    let key = (&p1.code, &p2.code);
                    let reflected = if p1.mirror <= p2.mirror {
                        (&p1.mirror, &p2.mirror)
                    } else {
                        (&p2.mirror, &p1.mirror)
                    };
                    if key > reflected {
                        continue;
                    }
                }
                out.push(CenterGluingSpec {
                    kind: Centrality::Bicentral,
                    parts: vec![p1.tree.clone(), p2.tree.clone()],
                    target_vertices: target,
                });
            }
        }
    }
    out
}

/// All gluing specs for `vertices`, before assembly.
pub fn gluing_specs(vertices: usize, mode: EquivalenceMode) -> Vec<CenterGluingSpec> {
    if vertices <= 1 {
        return Vec::new();
    }
    let pool = part_pool(vertices - 1);
    let mut specs = unicentral_specs(&pool, vertices - 1, vertices, mode);
    specs.extend(bicentral_specs(&pool, vertices, mode));
    specs
}

fn check_vertices(vertices: usize) -> Result<()> {
    if vertices == 0 {
        return Err(Error::InvalidArgument("a plane tree has at least one vertex".into()));
    }
    Ok(())
}

/// Every plane tree class with `vertices` vertices, built by center gluing,
/// sorted by serialized form.
///
/// Each assembled tree is checked to have its glue point as center, to keep
/// the spec's centrality after canonicalization, and to be new.
pub fn enumerate_plane_center(vertices: usize, mode: EquivalenceMode, limits: &Limits) -> Result<Vec<PlaneTree>> {
    check_vertices(vertices)?;
    limits.check_plane_vertices(vertices)?;
    if vertices == 1 {
        return Ok(vec![canonical_plane(&RootedPlaneTree::leaf(), mode)]);
    }
    let specs = gluing_specs(vertices, mode);
    let mut out = Vec::with_capacity(specs.len());
    for spec in &specs {
        if !spec.is_valid() {
            return Err(Error::Inconsistent(format!("generated an invalid gluing spec {spec:?}")));
        }
        let tree = spec.assemble();
        let c = center(&tree);
        if c.centers != spec.expected_centers() {
            return Err(Error::Inconsistent(format!(
                "glued tree {} has centers {:?}, expected {:?}",
                tree.encode(),
                c.centers,
                spec.expected_centers()
            )));
        }
        let plane = canonical_plane(&tree, mode);
        if plane.centrality() != spec.kind {
            return Err(Error::Inconsistent(format!("centrality changed for {plane}")));
        }
        out.push(plane);
    }
    out.sort();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Inconsistent(format!("class {} generated twice", w[0])));
    }
    Ok(out)
}

/// Oracle grouping: each class's canonical form and its number of rooted representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleClass {
    pub plane: PlaneTree,
    pub rooted_count: usize,
}

/// Groups all rooted trees with `vertices - 1` edges by the re-rooting
/// oracle and checks that the canonical form induces the same partition.
pub fn oracle_classes(vertices: usize, mode: EquivalenceMode) -> Result<Vec<OracleClass>> {
    check_vertices(vertices)?;
    check("vertices", vertices, ORACLE_MAX_VERTICES)?;
    let mut groups: BTreeMap<DyckCode, OracleClass> = BTreeMap::new();
    for code in DyckWords::new(vertices - 1) {
        let tree = code.decode();
        let key = rerooting_oracle_canon(&tree, mode)?;
        let plane = canonical_plane(&tree, mode);
        match groups.get_mut(&key) {
            Some(class) if class.plane == plane => class.rooted_count += 1,
            Some(class) => {
                return Err(Error::Inconsistent(format!(
                    "{code} is oracle-equivalent to {} but canonicalizes to {plane}",
                    class.plane
                )))
            }
            None => {
                groups.insert(key, OracleClass { plane, rooted_count: 1 });
            }
        }
    }
    let mut classes: Vec<OracleClass> = groups.into_values().collect();
    classes.sort_by(|a, b| a.plane.cmp(&b.plane));
    if let Some(w) = classes.windows(2).find(|w| w[0].plane == w[1].plane) {
        return Err(Error::Inconsistent(format!(
            "oracle-distinct classes share canonical form {}",
            w[0].plane
        )));
    }
    Ok(classes)
}

/// Every class with `vertices` vertices by exhaustive canonicalization.
pub fn enumerate_plane_oracle(vertices: usize, mode: EquivalenceMode) -> Result<Vec<PlaneTree>> {
    Ok(oracle_classes(vertices, mode)?
        .into_iter()
        .map(|c| c.plane)
        .collect())
}

pub fn count_plane(vertices: usize, mode: EquivalenceMode, limits: &Limits) -> Result<usize> {
    Ok(enumerate_plane_center(vertices, mode, limits)?.len())
}
