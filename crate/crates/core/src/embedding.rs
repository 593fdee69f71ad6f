//! Rotation systems of trees: each vertex lists its neighbours in cyclic order.

use crate::tree::{DyckCode, RootedPlaneTree};

/// A tree drawn in the plane, given by the cyclic order of neighbours at every vertex.
///
/// Vertices are numbered `0..n`. When built from a rooted tree the numbering is
/// preorder, so the root is `0`, and a non-root vertex lists its parent first
/// followed by its children left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn from_rooted(tree: &RootedPlaneTree) -> Self {
        Self::from_code(&tree.encode())
    }

    /// Builds the rotation system directly from the code text.
    pub fn from_code(code: &DyckCode) -> Self {
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(code.edge_count() + 1);
        rotation.push(Vec::new());
        let mut path = vec![0usize];
        for b in code.as_str().bytes() {
            if b == b'(' {
                let parent = *path.last().expect("balanced");
                let id = rotation.len();
                rotation.push(vec![parent]);
                rotation[parent].push(id);
                path.push(id);
            } else {
                path.pop();
            }
        }
        Self { rotation }
    }

    /// Caller guarantees the rotation describes a tree with symmetric adjacency.
    pub(crate) fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        Self { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Every cyclic order reversed: the mirror image.
    pub fn reflect(&self) -> Self {
        Self {
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Code of the tree rooted at `root`, whose first child is `rotation[root][start]`.
    pub fn code_from(&self, root: usize, start: usize) -> DyckCode {
        let mut out = String::with_capacity(2 * (self.vertex_count() - 1));
        let deg = self.degree(root);
        for k in 0..deg {
            let child = self.rotation[root][(start + k) % deg];
            out.push('(');
            self.write_branch(child, root, &mut out);
            out.push(')');
        }
        DyckCode::from_trusted(out)
    }

    /// Code of the branch at `v` hanging away from `parent`.
    pub fn branch_code(&self, v: usize, parent: usize) -> DyckCode {
        let mut out = String::new();
        self.write_branch(v, parent, &mut out);
        DyckCode::from_trusted(out)
    }

    fn write_branch(&self, v: usize, parent: usize, out: &mut String) {
        let rot = &self.rotation[v];
        let deg = rot.len();
        let at = rot
            .iter()
            .position(|&u| u == parent)
            .expect("parent is a neighbour");
        for k in 1..deg {
            let child = rot[(at + k) % deg];
            out.push('(');
            self.write_branch(child, v, out);
            out.push(')');
        }
    }

    /// Rooted tree at `root` starting from neighbour index `start`.
    pub fn rooted_at(&self, root: usize, start: usize) -> RootedPlaneTree {
        self.code_from(root, start).decode()
    }

    /// Index of `neighbour` in the cyclic order at `v`.
    pub fn position(&self, v: usize, neighbour: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&u| u == neighbour)
    }

    /// Tree center by repeated removal of all current leaves.
    ///
    /// Returns the one or two surviving vertices (sorted) and the radius.
    pub fn centers(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        if n <= 2 {
            return ((0..n).collect(), n - 1);
        }
        let mut degree: Vec<usize> = self.rotation.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        let mut remaining = n;
        let mut rounds = 0;
        while remaining > 2 {
            let mut next = Vec::new();
            for &leaf in &layer {
                removed[leaf] = true;
                remaining -= 1;
                for &u in &self.rotation[leaf] {
                    if !removed[u] {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            rounds += 1;
            layer = next;
        }
        let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
        let radius = if centers.len() == 1 { rounds } else { rounds + 1 };
        (centers, radius)
    }
}
