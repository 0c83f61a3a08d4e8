//! Structure of a tree relative to a designated path (the stem).
//!
//! Every vertex `x` hangs off exactly one stem vertex `v_i`: the unique
//! `(x, v_i)`-path meets the stem only at `v_i`. Stem vertices hang off
//! themselves.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::tree::{Tree, TreePath};
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemDecomposition {
    stem: TreePath,
    /// Stem index each vertex originates from.
    origin: Vec<usize>,
    /// Distance from each vertex to its origin.
    depth: Vec<usize>,
    /// Next vertex toward the stem; `None` on the stem.
    toward_stem: Vec<Option<Vertex>>,
    /// Per stem index, the largest depth among vertices originating there.
    subtree_depth: Vec<usize>,
}

impl StemDecomposition {
    pub fn stem(&self) -> &TreePath {
        &self.stem
    }

    pub fn origin(&self, x: Vertex) -> usize {
        self.origin[x]
    }

    pub fn origin_vertex(&self, x: Vertex) -> Vertex {
        self.stem.vertices()[self.origin[x]]
    }

    pub fn depth(&self, x: Vertex) -> usize {
        self.depth[x]
    }

    pub fn subtree_depth(&self) -> &[usize] {
        &self.subtree_depth
    }

    pub fn on_stem(&self, x: Vertex) -> bool {
        self.toward_stem[x].is_none()
    }

    /// The vertex after `x` on its way to the stem.
    pub fn toward_stem(&self, x: Vertex) -> Option<Vertex> {
        self.toward_stem[x]
    }

    /// Vertices of the unique path from `x` to its origin, inclusive.
    pub fn walk_to_stem(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::successors(Some(x), move |&v| self.toward_stem[v])
    }

    /// Lemma-style diametral test: every vertex hanging at index `i` lies
    /// within `min(i, k - i)` of the stem, where `k` is the stem length.
    pub fn satisfies_diametral_bound(&self) -> bool {
        let k = self.stem.len();
        self.subtree_depth
            .iter()
            .enumerate()
            .all(|(i, &depth)| depth <= i.min(k - i))
    }
}

/// Multi-source BFS from every stem vertex without crossing the stem.
pub fn decompose(t: &Tree, stem: &TreePath) -> Result<StemDecomposition> {
    stem.validate(t)?;
    let n = t.order();
    let mut origin = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut toward_stem = vec![None; n];
    let mut queue = VecDeque::with_capacity(n);
    for (i, &v) in stem.vertices().iter().enumerate() {
        origin[v] = i;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &v in t.neighbors(u)? {
            if origin[v] == usize::MAX {
                origin[v] = origin[u];
                depth[v] = depth[u] + 1;
                toward_stem[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    let mut subtree_depth = vec![0; stem.vertices().len()];
    for x in 0..n {
        let slot = &mut subtree_depth[origin[x]];
        *slot = (*slot).max(depth[x]);
    }
    Ok(StemDecomposition {
        stem: stem.clone(),
        origin,
        depth,
        toward_stem,
        subtree_depth,
    })
}

/// First vertex of degree at least 3 on the walk from an off-stem leaf to
/// its origin. The origin itself is the last candidate.
pub fn first_big_vertex(t: &Tree, dec: &StemDecomposition, leaf: Vertex) -> Result<Vertex> {
    if t.degree(leaf)? != 1 {
        return Err(Error::NotALeaf(leaf));
    }
    if dec.on_stem(leaf) {
        return Err(Error::LeafOnStem(leaf));
    }
    dec.walk_to_stem(leaf)
        .find(|&v| t.adj_len(v) >= 3)
        .ok_or(Error::NoBigVertex(leaf))
}

/// True exactly when `p` is a diametral path of `t`, decided from the
/// per-index hanging depths rather than from the diameter.
pub fn is_diametral_by_lemma1(t: &Tree, p: &TreePath) -> Result<bool> {
    Ok(decompose(t, p)?.satisfies_diametral_bound())
}
