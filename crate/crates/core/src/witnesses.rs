//! Concrete trees attaining each extremal value.

use crate::error::{Error, Result};
use crate::formulas::{feasible_leaf_diameter, feasible_order_leaves};
use crate::tree::Tree;

/// A subdivided star, described by its leg lengths in nonincreasing order.
///
/// A spider with two legs is a path whose branch vertex is an interior
/// vertex; with one leg it degenerates to a path hanging off the branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spider {
    legs: Vec<usize>,
}

impl Spider {
    /// Sorts `legs` into nonincreasing order. Zero-length legs are rejected.
    pub fn new(mut legs: Vec<usize>) -> Result<Self> {
        if legs.is_empty() {
            return Err(Error::EmptySpider);
        }
        if legs.contains(&0) {
            return Err(Error::Infeasible(
                "spider legs must have positive length".into(),
            ));
        }
        legs.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Spider { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn order(&self) -> usize {
        1 + self.legs.iter().sum::<usize>()
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    pub fn diameter(&self) -> usize {
        self.legs.iter().take(2).sum()
    }

    /// Branch vertex 0; each leg occupies consecutive ids, increasing
    /// outward, legs in stored order.
    pub fn to_tree(&self) -> Tree {
        let mut edges = Vec::with_capacity(self.order() - 1);
        let mut next = 1;
        for &len in &self.legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::new(self.order(), &edges).expect("spider layout is always a tree")
    }
}

pub fn spider_to_tree(s: &Spider) -> Tree {
    s.to_tree()
}

/// Fills `budget` vertices into legs of length `len`, last leg taking the
/// remainder.
fn pack_legs(legs: &mut Vec<usize>, mut budget: usize, len: usize) {
    while budget > 0 {
        let take = budget.min(len);
        legs.push(take);
        budget -= take;
    }
}

/// Spider of order `n` and diameter `d` with as few legs as possible.
///
/// With `c = ⌊d/2⌋`, every leg has length at most `c` except, for odd `d`,
/// one leg of length `c + 1`.
pub fn min_leaf_spider(n: usize, d: usize) -> Result<Spider> {
    if !feasible_leaf_diameter(n, d) || d < 2 {
        return Err(Error::Infeasible(format!(
            "no spider witness for order {n} and diameter {d} (need 2 <= d <= n-1)"
        )));
    }
    let c = d / 2;
    let mut legs = Vec::new();
    let mut budget = n - 1;
    if d % 2 == 1 {
        legs.push(c + 1);
        budget -= c + 1;
    }
    pack_legs(&mut legs, budget, c);
    Spider::new(legs)
}

/// Spider of order `n` with exactly `f` legs and the smallest diameter.
pub fn min_diameter_spider(n: usize, f: usize) -> Result<Spider> {
    if !feasible_order_leaves(n, f) {
        return Err(Error::Infeasible(format!(
            "no tree of order {n} has exactly {f} leaves (need f >= 2 and n >= f+1)"
        )));
    }
    // n - 2 = kf + r.
    let (k, r) = ((n - 2) / f, (n - 2) % f);
    let legs = if r == 0 {
        std::iter::once(k + 1)
            .chain(std::iter::repeat_n(k, f - 1))
            .collect()
    } else {
        // n - 1 = kf + (r + 1) with 2 <= r + 1 <= f.
        let long = r + 1;
        let mut legs = vec![k + 1; long];
        legs.resize(f, k);
        legs
    };
    Spider::new(legs)
}

/// Path `0..=d` with the remaining `n - d - 1` vertices pendant on its
/// middle vertex `⌊d/2⌋`.
pub fn max_leaf_tree(n: usize, d: usize) -> Result<Tree> {
    if !feasible_leaf_diameter(n, d) {
        return Err(Error::Infeasible(format!(
            "no tree of order {n} has diameter {d}"
        )));
    }
    let mut edges: Vec<_> = (1..=d).map(|v| (v - 1, v)).collect();
    edges.extend((d + 1..n).map(|v| (d / 2, v)));
    Tree::new(n, &edges)
}

/// Path `0..=n-f+1` with the remaining `f - 2` vertices pendant on vertex 1.
pub fn max_diameter_tree(n: usize, f: usize) -> Result<Tree> {
    if !feasible_order_leaves(n, f) {
        return Err(Error::Infeasible(format!(
            "no tree of order {n} has exactly {f} leaves"
        )));
    }
    let len = n - f + 1;
    let mut edges: Vec<_> = (1..=len).map(|v| (v - 1, v)).collect();
    edges.extend((len + 1..n).map(|v| (1, v)));
    Tree::new(n, &edges)
}
