//! Morse flows with a single sink on the 2-sphere, modeled by their invariant.
//!
//! The sources of such a flow, joined by the stable manifolds of the saddles,
//! form a plane tree: a cycle would cut the sphere into two discs, each of
//! which needs its own sink. The tree determines the flow up to topological
//! equivalence, so flow classes with `k` saddles are plane tree classes with
//! `k + 1` vertices. A tree has a single face on the sphere, so embeddings in
//! the sphere and in the plane classify the same way.
//!
//! [`EquivalenceMode::Oriented`] corresponds to equivalence by
//! orientation-preserving homeomorphisms of the sphere and is the default;
//! [`EquivalenceMode::Mirror`] also admits orientation-reversing ones.

use std::fmt;

use crate::canonical::{canonical_of_embedding, EquivalenceMode, PlaneTree};
use crate::embedding::Embedding;
use crate::enumerate::{count_plane, enumerate_plane_center};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Euler characteristic of the sphere.
pub const SPHERE_EULER_CHARACTERISTIC: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseFlow {
    sources: usize,
    saddles: usize,
    sinks: usize,
    separatrices: PlaneTree,
}

impl MorseFlow {
    pub fn sources(&self) -> usize {
        self.sources
    }

    pub fn saddles(&self) -> usize {
        self.saddles
    }

    pub fn sinks(&self) -> usize {
        self.sinks
    }

    /// Vertices are sources, edges are the saddles' stable manifolds.
    pub fn separatrices(&self) -> &PlaneTree {
        &self.separatrices
    }

    /// Sum of fixed-point indices: +1 per source and sink, -1 per saddle.
    pub fn index_sum(&self) -> i64 {
        self.sources as i64 - self.saddles as i64 + self.sinks as i64
    }
}

/// `sources=<n> saddles=<n-1> sinks=1 tree=<U|B>:<code>`
impl fmt::Display for MorseFlow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sources={} saddles={} sinks={} tree={}",
            self.sources, self.saddles, self.sinks, self.separatrices
        )
    }
}

pub fn flow_from_tree(tree: &PlaneTree) -> MorseFlow {
    let flow = MorseFlow {
        sources: tree.vertex_count(),
        saddles: tree.edge_count(),
        sinks: 1,
        separatrices: tree.clone(),
    };
    assert_eq!(flow.sinks, 1);
    assert_eq!(flow.sources, flow.saddles + 1);
    assert_eq!(flow.index_sum(), SPHERE_EULER_CHARACTERISTIC);
    flow
}

/// A candidate separatrix graph: vertices `0..vertices`, edges as vertex
/// pairs, and optionally the cyclic order of edge indices around each vertex.
///
/// Without a rotation, edges are taken around each vertex in list order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlowGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub rotation: Option<Vec<Vec<usize>>>,
}

impl FlowGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        Self {
            vertices,
            edges,
            rotation: None,
        }
    }

    pub fn with_rotation(mut self, rotation: Vec<Vec<usize>>) -> Self {
        self.rotation = Some(rotation);
        self
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Accepts exactly the connected acyclic graphs and returns their flow.
///
/// A cycle is reported before disconnection; self-loops and parallel edges
/// count as cycles.
pub fn validate_flow_graph(graph: &FlowGraph, mode: EquivalenceMode) -> Result<MorseFlow> {
    let n = graph.vertices;
    if n == 0 {
        return Err(Error::InvalidGraph("a flow has at least one source".into()));
    }
    if let Some((i, &(u, v))) = graph.edges.iter().enumerate().find(|(_, &(u, v))| u >= n || v >= n) {
        return Err(Error::InvalidGraph(format!(
            "edge {i} = ({u}, {v}) names a vertex outside 0..{n}"
        )));
    }

    let mut parent: Vec<usize> = (0..n).collect();
    let mut components = n;
    for (i, &(u, v)) in graph.edges.iter().enumerate() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(Error::HasCycle { edge: i });
        }
        parent[ru] = rv;
        components -= 1;
    }
    if components > 1 {
        return Err(Error::Disconnected { components });
    }

    let rotation = neighbour_rotation(graph)?;
    let plane = canonical_of_embedding(&Embedding::from_rotation(rotation), mode);
    Ok(flow_from_tree(&plane))
}

/// Turns per-vertex edge orders into per-vertex neighbour orders.
fn neighbour_rotation(graph: &FlowGraph) -> Result<Vec<Vec<usize>>> {
    let n = graph.vertices;
    let edge_orders: Vec<Vec<usize>> = match &graph.rotation {
        None => {
            let mut orders = vec![Vec::new(); n];
            for (i, &(u, v)) in graph.edges.iter().enumerate() {
                orders[u].push(i);
                orders[v].push(i);
            }
            orders
        }
        Some(r) => {
            if r.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "rotation lists {} vertices, graph has {n}",
                    r.len()
                )));
            }
            for (v, order) in r.iter().enumerate() {
                let mut expected: Vec<usize> = graph
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(a, b))| a == v || b == v)
                    .map(|(i, _)| i)
                    .collect();
                let mut given = order.clone();
                expected.sort_unstable();
                given.sort_unstable();
                if expected != given {
                    return Err(Error::InvalidGraph(format!(
                        "rotation at vertex {v} must list exactly its incident edges {expected:?}"
                    )));
                }
            }
            r.clone()
        }
    };
    Ok(edge_orders
        .iter()
        .enumerate()
        .map(|(v, order)| {
            order
                .iter()
                .map(|&e| {
                    let (a, b) = graph.edges[e];
                    if a == v {
                        b
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect())
}

/// Number of flow classes with `saddles` saddles: plane trees with one more vertex.
pub fn count_flows(saddles: usize, mode: EquivalenceMode, limits: &Limits) -> Result<usize> {
    count_plane(saddles + 1, mode, limits)
}

/// One flow per class, in catalog order.
pub fn enumerate_flows(saddles: usize, mode: EquivalenceMode, limits: &Limits) -> Result<Vec<MorseFlow>> {
    Ok(enumerate_plane_center(saddles + 1, mode, limits)?
        .iter()
        .map(flow_from_tree)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_plane;
    use crate::tree::decode;
    use EquivalenceMode::*;

    #[test]
    fn one_saddle() {
        let flow = flow_from_tree(&canonical_plane(&decode("()").unwrap(), Oriented));
        assert_eq!((flow.sources(), flow.saddles(), flow.sinks()), (2, 1, 1));
        assert_eq!(flow.index_sum(), 2);
        assert_eq!(flow.to_string(), "sources=2 saddles=1 sinks=1 tree=B:()");
    }

    #[test]
    fn no_saddles() {
        let flow = flow_from_tree(&canonical_plane(&decode("").unwrap(), Oriented));
        assert_eq!((flow.sources(), flow.saddles(), flow.sinks()), (1, 0, 1));
    }

    #[test]
    fn triangle_has_cycle() {
        let g = FlowGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(validate_flow_graph(&g, Oriented), Err(Error::HasCycle { edge: 2 }));
    }

    #[test]
    fn self_loop_and_double_edge_are_cycles() {
        let g = FlowGraph::new(1, vec![(0, 0)]);
        assert!(matches!(validate_flow_graph(&g, Oriented), Err(Error::HasCycle { .. })));
        let g = FlowGraph::new(2, vec![(0, 1), (1, 0)]);
        assert!(matches!(validate_flow_graph(&g, Oriented), Err(Error::HasCycle { .. })));
    }

    #[test]
    fn isolated_vertices_are_disconnected() {
        let g = FlowGraph::new(2, vec![]);
        assert_eq!(
            validate_flow_graph(&g, Oriented),
            Err(Error::Disconnected { components: 2 })
        );
    }

    #[test]
    fn path_on_four_vertices() {
        let edges = vec![(0, 1), (1, 2), (2, 3)];
        for rotation in [None, Some(vec![vec![0], vec![1, 0], vec![2, 1], vec![2]])] {
            let g = FlowGraph {
                vertices: 4,
                edges: edges.clone(),
                rotation,
            };
            let flow = validate_flow_graph(&g, Oriented).unwrap();
            assert_eq!((flow.sources(), flow.saddles()), (4, 3));
            assert_eq!(flow.separatrices().to_string(), "B:(())()");
        }
    }

    #[test]
    fn rotation_decides_the_class() {
        // Vertex 0 with branches: a 2-path, a leaf, a 2-path, a leaf, in two
        // cyclic orders that are not related by rotation.
        let edges = vec![(0, 1), (1, 2), (0, 3), (0, 4), (4, 5), (0, 6)];
        let g1 = FlowGraph::new(7, edges.clone()).with_rotation(vec![
            vec![0, 2, 3, 5],
            vec![0, 1],
            vec![1],
            vec![2],
            vec![3, 4],
            vec![4],
            vec![5],
        ]);
        let g2 = FlowGraph::new(7, edges).with_rotation(vec![
            vec![0, 3, 2, 5],
            vec![0, 1],
            vec![1],
            vec![2],
            vec![3, 4],
            vec![4],
            vec![5],
        ]);
        let f1 = validate_flow_graph(&g1, Oriented).unwrap();
        let f2 = validate_flow_graph(&g2, Oriented).unwrap();
        assert_ne!(f1.separatrices(), f2.separatrices());
    }

    #[test]
    fn bad_rotation_rejected() {
        let g = FlowGraph::new(2, vec![(0, 1)]).with_rotation(vec![vec![0], vec![]]);
        assert!(matches!(validate_flow_graph(&g, Oriented), Err(Error::InvalidGraph(_))));
        let g = FlowGraph::new(2, vec![(0, 5)]);
        assert!(matches!(validate_flow_graph(&g, Oriented), Err(Error::InvalidGraph(_))));
        assert!(validate_flow_graph(&FlowGraph::default(), Oriented).is_err());
    }

    #[test]
    fn flow_counts() {
        let l = Limits::default();
        assert_eq!(count_flows(0, Oriented, &l).unwrap(), 1);
        assert_eq!(count_flows(1, Oriented, &l).unwrap(), 1);
        assert_eq!(count_flows(3, Oriented, &l).unwrap(), 2);
        assert_eq!(count_flows(4, Mirror, &l).unwrap(), 3);
    }
}
