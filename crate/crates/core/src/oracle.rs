//! Brute-force canonical codes used to cross-check [`crate::canonical`].
//!
//! Every rooted representative of a plane tree is reached from any one of
//! them by two rewrites: rotating the root's children by one place, and
//! moving the root to its first child. The oracle closes a tree under both
//! (and under reflection in mirror mode) and returns the least code seen.
//! It shares no code with the center-based canonical form.

use std::collections::{BTreeSet, VecDeque};

use crate::canonical::EquivalenceMode;
use crate::error::Result;
use crate::limits::{check, REROOTING_MAX_VERTICES};
use crate::tree::{DyckCode, RootedPlaneTree};

/// Children `[c1, c2, .., ck]` become `[c2, .., ck, c1]`.
fn rotate_root(tree: &RootedPlaneTree) -> RootedPlaneTree {
    let mut children = tree.children().to_vec();
    if !children.is_empty() {
        children.rotate_left(1);
    }
    RootedPlaneTree::new(children)
}

/// Moves the root to its first child `c1`.
///
/// Around `c1` the old root comes first, followed by `c1`'s own children;
/// around the old root the edge to `c1` was first, so seen from `c1` its
/// remaining children keep their order.
fn step_to_first_child(tree: &RootedPlaneTree) -> Option<RootedPlaneTree> {
    let (first, rest) = tree.children().split_first()?;
    let old_root = RootedPlaneTree::new(rest.to_vec());
    let mut children = Vec::with_capacity(first.children().len() + 1);
    children.push(old_root);
    children.extend(first.children().iter().cloned());
    Some(RootedPlaneTree::new(children))
}

/// All distinct codes of rooted representatives of the class of `tree`.
pub fn all_rootings(tree: &RootedPlaneTree, mode: EquivalenceMode) -> BTreeSet<DyckCode> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut starts = vec![tree.clone()];
    if mode == EquivalenceMode::Mirror {
        starts.push(tree.reflect());
    }
    for s in starts {
        if seen.insert(s.encode()) {
            queue.push_back(s);
        }
    }
    while let Some(t) = queue.pop_front() {
        let next = [Some(rotate_root(&t)), step_to_first_child(&t)];
        for n in next.into_iter().flatten() {
            if seen.insert(n.encode()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Least rooted code over every root vertex, rotation, and (mirror) reflection.
///
/// Lives in a different code space from [`crate::canonical::canonical_plane`];
/// only the partition it induces is comparable.
pub fn rerooting_oracle_canon(tree: &RootedPlaneTree, mode: EquivalenceMode) -> Result<DyckCode> {
    check("vertices", tree.vertex_count(), REROOTING_MAX_VERTICES)?;
    Ok(all_rootings(tree, mode)
        .into_iter()
        .next()
        .expect("the tree itself"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::decode;
    use EquivalenceMode::*;

    fn t(code: &str) -> RootedPlaneTree {
        decode(code).unwrap()
    }

    #[test]
    fn single_vertex() {
        assert_eq!(rerooting_oracle_canon(&t(""), Oriented).unwrap().as_str(), "");
    }

    #[test]
    fn path_of_three() {
        let end = rerooting_oracle_canon(&t("(())"), Oriented).unwrap();
        let mid = rerooting_oracle_canon(&t("()()"), Oriented).unwrap();
        assert_eq!(end, mid);
    }

    #[test]
    fn rootings_of_a_path_of_four() {
        // Ends give ((())); inner vertices give (())() and ()(()).
        let codes: Vec<String> = all_rootings(&t("((()))"), Oriented)
            .into_iter()
            .map(DyckCode::into_string)
            .collect();
        assert_eq!(codes, ["((()))", "(())()", "()(())"]);
    }

    #[test]
    fn star_rootings() {
        // Hub with three rotations that coincide, plus a leaf root.
        let codes = all_rootings(&t("()()()"), Oriented);
        assert_eq!(codes.len(), 2);
    }

    #[test]
    fn size_cap() {
        let big = RootedPlaneTree::path(12);
        assert!(rerooting_oracle_canon(&big, Oriented).is_err());
        assert!(rerooting_oracle_canon(&RootedPlaneTree::path(11), Mirror).is_ok());
    }
}
