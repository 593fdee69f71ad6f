#![allow(dead_code)]

use plane_forest::RootedPlaneTree;
use rand::Rng;

/// Catalan numbers by the convolution recurrence C_{n+1} = sum C_i C_{n-i}.
pub fn catalan_by_convolution(max: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for n in 0..max {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c
}

/// Random ordered tree: each new vertex picks a random parent and a random
/// slot among that parent's children.
pub fn random_tree<R: Rng>(rng: &mut R, vertices: usize) -> RootedPlaneTree {
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for v in 1..vertices {
        let p = rng.gen_range(0..v);
        let slot = rng.gen_range(0..=children[p].len());
        children[p].insert(slot, v);
    }
    build(&children, 0)
}

fn build(children: &[Vec<usize>], v: usize) -> RootedPlaneTree {
    RootedPlaneTree::new(children[v].iter().map(|&c| build(children, c)).collect())
}
