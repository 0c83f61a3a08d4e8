//! Closed forms for the extremal leaf/diameter functions of trees.
//!
//! All functions are exact integer arithmetic, generic over any primitive
//! integer type. Signed inputs below the feasible range are reported as
//! [`Error::Infeasible`] like any other out-of-range query.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::PrimInt;

use crate::error::{Error, Result};

/// Integer types the formulas can be evaluated in.
pub trait Count: PrimInt + Integer + Display + Debug {}

impl<T: PrimInt + Integer + Display + Debug> Count for T {}

fn two<T: Count>() -> T {
    T::one() + T::one()
}

/// Whether some tree has order `n` and diameter `d`.
pub fn feasible_leaf_diameter<T: Count>(n: T, d: T) -> bool {
    let one = T::one();
    n >= two() && d >= one && d < n && (d != one || n == two())
}

/// Whether some tree has order `n` and exactly `f` leaves.
pub fn feasible_order_leaves<T: Count>(n: T, f: T) -> bool {
    f >= two() && n > f
}

fn require_leaf_diameter<T: Count>(n: T, d: T) -> Result<()> {
    if feasible_leaf_diameter(n, d) {
        return Ok(());
    }
    if d == T::one() && n > two() {
        Err(Error::Infeasible("d=1 requires n=2".into()))
    } else {
        Err(Error::Infeasible(format!(
            "no tree of order {n} has diameter {d} (need n >= 2 and 1 <= d <= n-1)"
        )))
    }
}

fn require_order_leaves<T: Count>(n: T, f: T) -> Result<()> {
    if feasible_order_leaves(n, f) {
        Ok(())
    } else {
        Err(Error::Infeasible(format!(
            "no tree of order {n} has exactly {f} leaves (need f >= 2 and n >= f+1)"
        )))
    }
}

/// `⌈2a/b⌉` without forming `2a`.
fn ceil_twice_over<T: Count>(a: T, b: T) -> T {
    let (q, r) = a.div_rem(&b);
    let tail = if r.is_zero() {
        T::zero()
    } else if r <= b - r {
        T::one()
    } else {
        two()
    };
    q + q + tail
}

/// Minimum number of leaves over trees of order `n` and diameter `d`.
///
/// With `c = ⌊d/2⌋` this is `⌈(n-1)/c⌉` for even `d` and `⌈(n-2)/c⌉` for
/// odd `d ≥ 3`, i.e. `⌈2(n-1)/d⌉` and `⌈2(n-2)/(d-1)⌉` respectively.
pub fn min_leaves<T: Count>(n: T, d: T) -> Result<T> {
    require_leaf_diameter(n, d)?;
    if d == T::one() {
        return Ok(two());
    }
    let c = d / two();
    Ok(if d.is_even() {
        (n - T::one()).div_ceil(&c)
    } else {
        (n - two()).div_ceil(&c)
    })
}

/// The classical lower bound `⌈2(n-1)/d⌉` on [`min_leaves`].
pub fn lesniak_bound<T: Count>(n: T, d: T) -> Result<T> {
    require_leaf_diameter(n, d)?;
    Ok(ceil_twice_over(n - T::one(), d))
}

/// Minimum diameter over trees of order `n` with exactly `f` leaves.
///
/// Writing `n - 2 = kf + r` with `0 ≤ r < f`, the answer is `2k + 1` when
/// `r = 0` and `2k + 2` otherwise.
pub fn min_diameter<T: Count>(n: T, f: T) -> Result<T> {
    require_order_leaves(n, f)?;
    let (k, r) = (n - two()).div_rem(&f);
    Ok(if r.is_zero() {
        k + k + T::one()
    } else {
        k + k + two()
    })
}

/// Maximum number of leaves over trees of order `n` and diameter `d`.
pub fn max_leaves<T: Count>(n: T, d: T) -> Result<T> {
    require_leaf_diameter(n, d)?;
    Ok(n - d + T::one())
}

/// Maximum diameter over trees of order `n` with exactly `f` leaves.
pub fn max_diameter<T: Count>(n: T, f: T) -> Result<T> {
    require_order_leaves(n, f)?;
    Ok(n - f + T::one())
}

/// One extremal question about trees of a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtremalQuery<T> {
    /// Leaf counts among trees of order `n` and diameter `d`.
    Leaves { n: T, d: T },
    /// Diameters among trees of order `n` with exactly `f` leaves.
    Diameter { n: T, f: T },
}

impl<T: Count> ExtremalQuery<T> {
    pub fn is_feasible(&self) -> bool {
        match *self {
            Self::Leaves { n, d } => feasible_leaf_diameter(n, d),
            Self::Diameter { n, f } => feasible_order_leaves(n, f),
        }
    }

    pub fn min(&self) -> Result<T> {
        match *self {
            Self::Leaves { n, d } => min_leaves(n, d),
            Self::Diameter { n, f } => min_diameter(n, f),
        }
    }

    pub fn max(&self) -> Result<T> {
        match *self {
            Self::Leaves { n, d } => max_leaves(n, d),
            Self::Diameter { n, f } => max_diameter(n, f),
        }
    }

    /// `(min, max)` of the queried quantity.
    pub fn range(&self) -> Result<(T, T)> {
        Ok((self.min()?, self.max()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Statement of the minimum-diameter result as three separate cases.
    fn min_diameter_three_cases(n: u64, f: u64) -> u64 {
        if n == f + 1 {
            return 2;
        }
        if (n - 2).is_multiple_of(f) {
            return 2 * ((n - 2) / f) + 1;
        }
        let k = (0..)
            .find(|k| k * f + 3 <= n && n <= (k + 1) * f + 1)
            .unwrap();
        2 * k + 2
    }

    #[test]
    fn headline_values() {
        assert_eq!(min_leaves(21u32, 3).unwrap(), 19);
        assert_eq!(lesniak_bound(21u32, 3).unwrap(), 14);
        assert_eq!(min_leaves(7u8, 4).unwrap(), 3);
        assert_eq!(lesniak_bound(4i64, 3).unwrap(), 2);
        assert_eq!(min_leaves(4i64, 3).unwrap(), 2);
    }

    #[test]
    fn path_cases() {
        for n in 2u64..60 {
            assert_eq!(min_leaves(n, n - 1).unwrap(), 2);
            assert_eq!(max_leaves(n, n - 1).unwrap(), 2);
        }
        for n in 3u64..60 {
            assert_eq!(max_diameter(n, 2).unwrap(), n - 1);
            assert_eq!(min_diameter(n, 2).unwrap(), n - 1);
        }
    }

    #[test]
    fn min_diameter_examples() {
        assert_eq!(min_diameter(5u32, 4).unwrap(), 2);
        assert_eq!(min_diameter(4u32, 2).unwrap(), 3);
        assert_eq!(min_diameter(6u32, 3).unwrap(), 4);
        assert_eq!(max_diameter(6u32, 3).unwrap(), 4);
        assert_eq!(max_leaves(21u32, 3).unwrap(), 19);
    }

    #[test]
    fn min_diameter_matches_case_statement_on_grid() {
        for f in 2u64..40 {
            for n in f + 1..400 {
                assert_eq!(
                    min_diameter(n, f).unwrap(),
                    min_diameter_three_cases(n, f),
                    "n={n} f={f}"
                );
            }
        }
    }

    #[test]
    fn infeasible_inputs() {
        assert_eq!(
            min_leaves(3u32, 1),
            Err(Error::Infeasible("d=1 requires n=2".into()))
        );
        assert!(min_leaves(5u32, 5).is_err());
        assert!(min_leaves(5u32, 0).is_err());
        assert!(min_leaves(1u32, 0).is_err());
        assert!(min_leaves(-4i32, 3).is_err());
        assert!(lesniak_bound(3u32, 1).is_err());
        assert!(max_leaves(4u32, 7).is_err());
        assert!(min_diameter(4u32, 4).is_err());
        assert!(min_diameter(4u32, 1).is_err());
        assert!(max_diameter(2u32, 2).is_err());
        assert_eq!(min_leaves(2u32, 1).unwrap(), 2);
        assert_eq!(max_leaves(2u32, 1).unwrap(), 2);
    }

    #[test]
    fn feasibility_predicates() {
        assert!(feasible_leaf_diameter(2, 1));
        assert!(!feasible_leaf_diameter(3, 1));
        assert!(!feasible_leaf_diameter(1, 0));
        for n in 0..10 {
            for f in n..12 {
                assert!(!feasible_order_leaves(n, f));
            }
        }
        assert!(feasible_order_leaves(9, 8));
    }

    #[test]
    fn no_overflow_near_type_max() {
        let n = u64::MAX;
        assert_eq!(lesniak_bound(n, n - 1).unwrap(), 2);
        assert_eq!(min_leaves(n, 2).unwrap(), n - 1);
        assert_eq!(lesniak_bound(n, 2).unwrap(), n - 1);
        // n - 1 = 3q + 2, so the bound is 2q + 2.
        assert_eq!(lesniak_bound(n, 3).unwrap(), (n - 1) / 3 * 2 + 2);
        assert_eq!(min_diameter(n, 2).unwrap(), n - 1);
        assert_eq!(lesniak_bound(255u8, 254).unwrap(), 2);
        assert_eq!(min_leaves(255u8, 253).unwrap(), 3);
    }

    #[test]
    fn query_wrapper() {
        let q = ExtremalQuery::Leaves { n: 21u64, d: 3 };
        assert!(q.is_feasible());
        assert_eq!(q.range().unwrap(), (19, 19));
        let q = ExtremalQuery::Diameter { n: 6u64, f: 3 };
        assert_eq!(q.range().unwrap(), (4, 4));
        assert!(!ExtremalQuery::Diameter { n: 3u64, f: 3 }.is_feasible());
    }

    proptest! {
        #[test]
        fn bound_domination(n in 2u64..5000, d in 1u64..5000) {
            prop_assume!(feasible_leaf_diameter(n, d));
            let l = min_leaves(n, d).unwrap();
            let b = lesniak_bound(n, d).unwrap();
            prop_assert!(l >= b);
            if d % 2 == 0 {
                prop_assert_eq!(l, b);
            }
            prop_assert!(2 <= l && l <= max_leaves(n, d).unwrap());
            // The closed forms as originally stated.
            let stated = if d == 1 { 2 } else if d % 2 == 0 {
                (2 * (n - 1)).div_ceil(d)
            } else {
                (2 * (n - 2)).div_ceil(d - 1)
            };
            prop_assert_eq!(l, stated);
            prop_assert_eq!(b, (2 * (n - 1)).div_ceil(d));
        }

        #[test]
        fn diameter_sandwich_and_parity(n in 3u64..5000, f in 2u64..5000) {
            prop_assume!(feasible_order_leaves(n, f));
            let lo = min_diameter(n, f).unwrap();
            prop_assert!(2 <= lo && lo <= max_diameter(n, f).unwrap());
            prop_assert_eq!(lo % 2 == 1, (n - 2) % f == 0);
        }

        #[test]
        fn generic_widths_agree(n in 2u32..60000, d in 1u32..60000) {
            prop_assume!(feasible_leaf_diameter(n, d));
            let narrow = min_leaves(n, d).unwrap() as u128;
            let wide = min_leaves(n as u128, d as u128).unwrap();
            prop_assert_eq!(narrow, wide);
            prop_assert_eq!(lesniak_bound(n, d).unwrap() as i64, lesniak_bound(n as i64, d as i64).unwrap());
        }

        #[test]
        fn duality(n in 3u64..3000, d in 2u64..3000) {
            prop_assume!(feasible_leaf_diameter(n, d));
            let f = min_leaves(n, d).unwrap();
            prop_assert!(min_diameter(n, f).unwrap() <= d);
        }
    }
}
