//! Rooted and unrooted plane trees: exhaustive generation, canonical forms
//! under planar isomorphism, and their reading as the complete invariant of a
//! Morse flow with one sink on the 2-sphere.

pub mod canonical;
pub mod catalog;
pub mod cli;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod limits;
pub mod morse;
pub mod oracle;
pub mod reconcile;
pub mod render;
pub mod tree;

pub use canonical::{canonical_plane, center, is_isomorphic, CenterResult, Centrality, EquivalenceMode, PlaneTree};
pub use enumerate::{count_plane, enumerate_plane_center, enumerate_plane_oracle, CenterGluingSpec};
pub use error::{Error, Result};
pub use limits::Limits;
pub use morse::{count_flows, flow_from_tree, validate_flow_graph, FlowGraph, MorseFlow};
pub use oracle::rerooting_oracle_canon;
pub use reconcile::reconcile_with_paper;
pub use tree::{count_rooted, decode, encode, enumerate_rooted, height, DyckCode, RootedPlaneTree};
