//! Rewriting an arbitrary tree into a spider with the same order, diameter
//! and leaf set.
//!
//! A diametral path `P = v_0 ... v_d` is fixed once as the stem and
//! `z = v_c` with `c = ⌊d/2⌋` is the target. While some off-stem leaf `u`
//! has a first big vertex `b(u) ≠ z`, the branch containing `u` is cut from
//! `b(u)` and re-hung directly on `z`. The potential `Φ = Σ_x d(x, z)`
//! strictly drops at every step, which bounds the number of steps.

use std::fmt;

use crate::error::{Error, Result};
use crate::stem::{decompose, first_big_vertex, is_diametral_by_lemma1, StemDecomposition};
use crate::tree::{Tree, TreePath};
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewireStep {
    pub leaf: Vertex,
    /// First big vertex of `leaf`, which loses the edge to `w`.
    pub big: Vertex,
    /// Neighbor of `big` on the way to `leaf`; re-hung on `z`.
    pub w: Vertex,
    pub z: Vertex,
    pub potential_before: usize,
    pub potential_after: usize,
}

/// `# step u=.. b=.. w=.. z=.. phi=..->..`
impl fmt::Display for RewireStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "# step u={} b={} w={} z={} phi={}->{}",
            self.leaf, self.big, self.w, self.z, self.potential_before, self.potential_after
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewireTrace {
    pub stem: TreePath,
    pub z_index: usize,
    pub steps: Vec<RewireStep>,
    pub result: Tree,
}

impl RewireTrace {
    pub fn z(&self) -> Vertex {
        self.stem.vertices()[self.z_index]
    }
}

/// `Σ_x d(x, z)`.
pub fn potential(t: &Tree, z: Vertex) -> Result<usize> {
    Ok(t.bfs_distances(z)?.iter().sum())
}

fn rewire_unchecked(
    t: &Tree,
    dec: &StemDecomposition,
    z: Vertex,
) -> Result<Option<(Tree, RewireStep)>> {
    for leaf in t.leaves()? {
        if dec.on_stem(leaf) {
            continue;
        }
        let big = first_big_vertex(t, dec, leaf)?;
        if big == z {
            continue;
        }
        let w = dec
            .walk_to_stem(leaf)
            .find(|&v| dec.toward_stem(v) == Some(big))
            .expect("big vertex lies strictly above the leaf");
        let edges: Vec<_> = t
            .edges()
            .map(|e| {
                if e == (w.min(big), w.max(big)) {
                    (w, z)
                } else {
                    e
                }
            })
            .collect();
        let next = Tree::new(t.order(), &edges)?;
        let step = RewireStep {
            leaf,
            big,
            w,
            z,
            potential_before: potential(t, z)?,
            potential_after: potential(&next, z)?,
        };
        return Ok(Some((next, step)));
    }
    Ok(None)
}

/// One rewiring step on the smallest-id off-stem leaf whose first big
/// vertex is not `z`; `Ok(None)` when no such leaf exists.
pub fn rewire_once(
    t: &Tree,
    dec: &StemDecomposition,
    z: Vertex,
) -> Result<Option<(Tree, RewireStep)>> {
    if !is_diametral_by_lemma1(t, dec.stem())? {
        return Err(Error::StemNotDiametral);
    }
    rewire_unchecked(t, dec, z)
}

/// Canonical diametral path, reversed when the diameter is odd and
/// `v_{c+1}` has larger degree than `v_c`. Without this, a spider whose
/// branch sits at `v_{c+1}` would be rewired onto `v_c` again.
fn stem_for(t: &Tree) -> (usize, TreePath) {
    let (d, stem) = t.diameter_and_path();
    let c = d / 2;
    let v = stem.vertices();
    if d % 2 == 1 && d >= 3 && t.adj_len(v[c + 1]) > t.adj_len(v[c]) {
        (d, stem.reversed())
    } else {
        (d, stem)
    }
}

/// Runs [`spiderize_with`] with per-step validation in debug builds only.
pub fn spiderize(t: &Tree) -> Result<RewireTrace> {
    spiderize_with(t, cfg!(debug_assertions))
}

/// Rewires `t` to a fixpoint. With `validate`, the stem is re-checked as a
/// diametral path after every step; otherwise only once at the end.
pub fn spiderize_with(t: &Tree, validate: bool) -> Result<RewireTrace> {
    if t.order() < 2 {
        return Err(Error::DegenerateOrder);
    }
    let (d, stem) = stem_for(t);
    let z_index = d / 2;
    let z = stem.vertices()[z_index];
    let mut current = t.clone();
    let mut steps = Vec::new();
    loop {
        let dec = decompose(&current, &stem)?;
        let next = if validate {
            rewire_once(&current, &dec, z)?
        } else {
            rewire_unchecked(&current, &dec, z)?
        };
        match next {
            Some((tree, step)) => {
                current = tree;
                steps.push(step);
            }
            None => break,
        }
    }
    if !is_diametral_by_lemma1(&current, &stem)? {
        return Err(Error::StemNotDiametral);
    }
    Ok(RewireTrace {
        stem,
        z_index,
        steps,
        result: current,
    })
}

/// `Some(branch)` when `t` has at most one vertex of degree above 2.
/// Paths report their central vertex (the smaller id when there are two).
pub fn is_spider(t: &Tree) -> Option<Vertex> {
    let mut big = (0..t.order()).filter(|&v| t.adj_len(v) >= 3);
    match (big.next(), big.next()) {
        (Some(b), None) => Some(b),
        (Some(_), Some(_)) => None,
        (None, _) => {
            let (d, p) = t.diameter_and_path();
            let v = p.vertices();
            Some(if d % 2 == 0 {
                v[d / 2]
            } else {
                v[d / 2].min(v[d / 2 + 1])
            })
        }
    }
}
