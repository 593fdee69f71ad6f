//! Rooted plane trees (ordered trees) and their balanced-parentheses codes.
//!
//! A rooted plane tree is a rooted tree whose children carry a linear order.
//! Every such tree with `n` edges corresponds to exactly one balanced string
//! of `n` pairs of parentheses: walk the tree depth first, emit `(` when
//! descending an edge and `)` when returning along it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::limits::Limits;

/// Ordered tree: each vertex has a (possibly empty) left-to-right sequence of children.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RootedPlaneTree {
    children: Vec<RootedPlaneTree>,
}

impl RootedPlaneTree {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        Self::default()
    }

    pub fn new(children: Vec<RootedPlaneTree>) -> Self {
        Self { children }
    }

    /// Path with `edges` edges rooted at one end.
    pub fn path(edges: usize) -> Self {
        (0..edges).fold(Self::leaf(), |t, _| Self::new(vec![t]))
    }

    /// Root with `leaves` leaf children.
    pub fn star(leaves: usize) -> Self {
        Self::new(vec![Self::leaf(); leaves])
    }

    pub fn children(&self) -> &[RootedPlaneTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<RootedPlaneTree> {
        self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.edge_count() + 1
    }

    /// Height in edges; a lone root has height 0.
    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.height())
            .max()
            .unwrap_or(0)
    }

    /// Mirror image: child order reversed at every vertex.
    pub fn reflect(&self) -> Self {
        Self::new(self.children.iter().rev().map(Self::reflect).collect())
    }

    pub fn encode(&self) -> DyckCode {
        let mut s = String::with_capacity(2 * self.edge_count());
        self.write_code(&mut s);
        DyckCode(s)
    }

    fn write_code(&self, out: &mut String) {
        for c in &self.children {
            out.push('(');
            c.write_code(out);
            out.push(')');
        }
    }
}

/// Balanced-parentheses encoding of a [`RootedPlaneTree`].
///
/// Ordering is plain byte-wise comparison of the text, `(` sorting before `)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckCode(String);

impl DyckCode {
    /// Validates `text` as a balanced word over `(` and `)`.
    pub fn parse(text: &str) -> Result<Self> {
        validate(text.as_bytes())?;
        Ok(DyckCode(text.to_owned()))
    }

    pub(crate) fn from_trusted(text: String) -> Self {
        debug_assert!(validate(text.as_bytes()).is_ok(), "invalid code {text:?}");
        DyckCode(text)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.len() / 2
    }

    pub fn decode(&self) -> RootedPlaneTree {
        // Validated on construction.
        build_tree(self.0.as_bytes())
    }
}

impl fmt::Display for DyckCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for DyckCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl AsRef<str> for DyckCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

fn validate(bytes: &[u8]) -> Result<()> {
    let mut depth = 0usize;
    for (position, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return Err(Error::MalformedCode {
                        position,
                        reason: "unmatched ')'",
                    });
                }
                depth -= 1;
            }
            _ => {
                return Err(Error::MalformedCode {
                    position,
                    reason: "character other than '(' or ')'",
                })
            }
        }
    }
    if depth != 0 {
        return Err(Error::MalformedCode {
            position: bytes.len(),
            reason: "unclosed '('",
        });
    }
    Ok(())
}

// Iterative so that deep paths from untrusted input cannot overflow the stack.
fn build_tree(bytes: &[u8]) -> RootedPlaneTree {
    let mut stack: Vec<Vec<RootedPlaneTree>> = vec![Vec::new()];
    for &b in bytes {
        if b == b'(' {
            stack.push(Vec::new());
        } else {
            let children = stack.pop().expect("balanced");
            stack
                .last_mut()
                .expect("balanced")
                .push(RootedPlaneTree::new(children));
        }
    }
    RootedPlaneTree::new(stack.pop().expect("balanced"))
}

/// Parses and decodes a code in one step.
pub fn decode(code: &str) -> Result<RootedPlaneTree> {
    validate(code.as_bytes())?;
    Ok(build_tree(code.as_bytes()))
}

pub fn encode(tree: &RootedPlaneTree) -> DyckCode {
    tree.encode()
}

pub fn height(tree: &RootedPlaneTree) -> usize {
    tree.height()
}

/// Streams all balanced words with `edges` pairs in ascending lexicographic order.
///
/// Each step rewrites only the suffix after the rightmost `(` that can be
/// turned into `)`, so generation runs in constant amortized time and the
/// memory footprint is one word.
#[derive(Debug, Clone)]
pub struct DyckWords {
    word: Vec<u8>,
    started: bool,
    done: bool,
}

impl DyckWords {
    pub fn new(edges: usize) -> Self {
        // Least word: all opens first.
        let mut word = vec![b'('; edges];
        word.extend(std::iter::repeat_n(b')', edges));
        Self {
            word,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let len = self.word.len();
        // Balance and open-count of each prefix are needed while scanning
        // right to left, so compute them from the totals.
        let half = len / 2;
        let mut opens = half;
        let mut closes = half;
        for i in (0..len).rev() {
            if self.word[i] == b'(' {
                opens -= 1;
            } else {
                closes -= 1;
            }
            // Prefix word[..i] has `opens` opens and `closes` closes.
            if self.word[i] == b'(' && opens > closes {
                self.word[i] = b')';
                let remaining_opens = half - opens;
                let mut j = i + 1;
                for _ in 0..remaining_opens {
                    self.word[j] = b'(';
                    j += 1;
                }
                for slot in &mut self.word[j..] {
                    *slot = b')';
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = DyckCode;

    fn next(&mut self) -> Option<DyckCode> {
        if self.done {
            return None;
        }
        if self.started {
            if !self.advance() {
                self.done = true;
                return None;
            }
        } else {
            self.started = true;
        }
        let text = String::from_utf8(self.word.clone()).expect("ascii");
        Some(DyckCode::from_trusted(text))
    }
}

/// Streaming variant of [`enumerate_rooted`]; applies the same size guard.
pub fn rooted_codes(edges: usize, limits: &Limits) -> Result<DyckWords> {
    limits.check_edges(edges)?;
    Ok(DyckWords::new(edges))
}

/// All rooted plane trees with `edges` edges, once each, in code order.
pub fn enumerate_rooted(edges: usize, limits: &Limits) -> Result<Vec<RootedPlaneTree>> {
    Ok(rooted_codes(edges, limits)?.map(|c| c.decode()).collect())
}

/// Catalan number `C(2n, n) / (n + 1)`, exact.
pub fn count_rooted(edges: usize) -> BigUint {
    // C_{k+1} = C_k * 2(2k+1) / (k+2); each intermediate division is exact.
    let mut c = BigUint::one();
    for k in 0..edges {
        c = c * BigUint::from(2 * (2 * k as u64 + 1)) / BigUint::from(k as u64 + 2);
    }
    c
}
