//! Drawings of trees: Graphviz dot, SVG, and an indented text outline.
//!
//! All output is a pure function of the input code; children always appear
//! in their embedding order.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::canonical::split_tagged;
use crate::error::Result;
use crate::tree::{decode, RootedPlaneTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Dot,
    Svg,
    Ascii,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dot" => Ok(Self::Dot),
            "svg" => Ok(Self::Svg),
            "ascii" => Ok(Self::Ascii),
            _ => Err(format!("unknown render format {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Layout {
    Layered,
    #[default]
    Radial,
}

impl FromStr for Layout {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "layered" => Ok(Self::Layered),
            "radial" => Ok(Self::Radial),
            _ => Err(format!("unknown layout {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: RenderFormat,
    pub layout: Layout,
    /// `U:<code>`, `B:<code>`, or a bare Dyck code.
    pub code: String,
}

impl RenderSpec {
    pub fn tree(&self) -> Result<RootedPlaneTree> {
        parse_any(&self.code)
    }

    pub fn render(&self) -> Result<String> {
        let tree = self.tree()?;
        Ok(match self.format {
            RenderFormat::Dot => to_dot(&tree, self.layout),
            RenderFormat::Svg => to_svg(&tree, self.layout),
            RenderFormat::Ascii => to_ascii(&tree),
        })
    }
}

/// Accepts a serialized plane tree or a bare Dyck code.
pub fn parse_any(code: &str) -> Result<RootedPlaneTree> {
    match split_tagged(code) {
        Some((_, dyck)) => decode(dyck),
        None => decode(code),
    }
}

/// Preorder numbering with parent, children, and depth of each vertex.
struct Flat {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

fn flatten(tree: &RootedPlaneTree) -> Flat {
    let mut flat = Flat {
        parent: vec![None],
        children: vec![Vec::new()],
        depth: vec![0],
    };
    let mut path = vec![0usize];
    for b in tree.encode().as_str().bytes() {
        if b == b'(' {
            let p = *path.last().expect("balanced");
            let id = flat.parent.len();
            flat.parent.push(Some(p));
            flat.children.push(Vec::new());
            flat.depth.push(flat.depth[p] + 1);
            flat.children[p].push(id);
            path.push(id);
        } else {
            path.pop();
        }
    }
    flat
}

/// One vertex per line, children indented under their parent in order.
pub fn to_ascii(tree: &RootedPlaneTree) -> String {
    let flat = flatten(tree);
    let mut out = String::new();
    for v in 0..flat.parent.len() {
        let _ = writeln!(out, "{}o{}", "  ".repeat(flat.depth[v]), v);
    }
    out
}

pub fn to_dot(tree: &RootedPlaneTree, layout: Layout) -> String {
    let flat = flatten(tree);
    let mut out = String::from("digraph plane_tree {\n");
    out.push_str("  ordering=out;\n");
    match layout {
        Layout::Layered => out.push_str("  rankdir=TB;\n"),
        Layout::Radial => out.push_str("  layout=twopi;\n  root=n0;\n"),
    }
    out.push_str("  node [shape=circle, width=0.2, label=\"\"];\n");
    for v in 0..flat.parent.len() {
        let _ = writeln!(out, "  n{v};");
    }
    for v in 0..flat.parent.len() {
        for &c in &flat.children[v] {
            let _ = writeln!(out, "  n{v} -> n{c};");
        }
    }
    out.push_str("}\n");
    out
}

const SPACING: f64 = 60.0;
const MARGIN: f64 = 30.0;

fn leaf_weights(flat: &Flat) -> Vec<usize> {
    let n = flat.parent.len();
    let mut w = vec![0usize; n];
    // Preorder ids: every child has a larger id than its parent.
    for v in (0..n).rev() {
        w[v] = flat.children[v].iter().map(|&c| w[c]).sum::<usize>().max(1);
    }
    w
}

fn positions(flat: &Flat, layout: Layout) -> Vec<(f64, f64)> {
    let n = flat.parent.len();
    let weights = leaf_weights(flat);
    let mut pos = vec![(0.0, 0.0); n];
    // Each vertex owns an interval; children split it by leaf weight, in order.
    let mut span = vec![(0.0f64, 0.0f64); n];
    span[0] = match layout {
        Layout::Radial => (0.0, TAU),
        Layout::Layered => (0.0, weights[0] as f64),
    };
    for v in 0..n {
        let (lo, hi) = span[v];
        let mut start = lo;
        for &c in &flat.children[v] {
            let width = (hi - lo) * weights[c] as f64 / weights[v] as f64;
            span[c] = (start, start + width);
            start += width;
        }
        let mid = (lo + hi) / 2.0;
        let r = flat.depth[v] as f64 * SPACING;
        pos[v] = match layout {
            Layout::Radial => (r * mid.cos(), r * mid.sin()),
            Layout::Layered => (mid * SPACING, r),
        };
    }
    pos
}

pub fn to_svg(tree: &RootedPlaneTree, layout: Layout) -> String {
    let flat = flatten(tree);
    let pos = positions(&flat, layout);
    let min_x = pos.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let min_y = pos.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_x = pos.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let max_y = pos.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let shift = |p: (f64, f64)| (p.0 - min_x + MARGIN, p.1 - min_y + MARGIN);
    // Clamp -0.00 so identical trees print identical text.
    let f = |x: f64| {
        let s = format!("{x:.2}");
        if s == "-0.00" {
            "0.00".to_owned()
        } else {
            s
        }
    };
    let width = max_x - min_x + 2.0 * MARGIN;
    let height = max_y - min_y + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = f(width),
        h = f(height)
    );
    out.push_str("  <g stroke=\"black\" stroke-width=\"2\">\n");
    for v in 1..flat.parent.len() {
        let p = flat.parent[v].expect("non-root");
        let (x1, y1) = shift(pos[p]);
        let (x2, y2) = shift(pos[v]);
        let _ = writeln!(
            out,
            "    <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            f(x1),
            f(y1),
            f(x2),
            f(y2)
        );
    }
    out.push_str("  </g>\n  <g fill=\"black\">\n");
    for (v, &p) in pos.iter().enumerate() {
        let (x, y) = shift(p);
        let r = if v == 0 { 7 } else { 5 };
        let _ = writeln!(out, "    <circle cx=\"{}\" cy=\"{}\" r=\"{r}\"/>", f(x), f(y));
    }
    out.push_str("  </g>\n</svg>\n");
    out
}
