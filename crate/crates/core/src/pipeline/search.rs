use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{rational_sqrt, Rational};
use crate::transform::{CurvePoint, TransformContext};

/// A rational point on the quartic and its image on the cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub u: Rational,
    pub v: Rational,
    pub point: CurvePoint,
}

/// Scans `u = p/s` with `0 < |p| ≤ bound`, `1 ≤ s ≤ bound`, `gcd(p, s) = 1`
/// for square values of the quartic. Of each pair `±v` only `v ≤ 0` is kept.
/// `u = 0` is skipped: it only reaches infinity and `(-a2, a1 a2 - a3)`.
///
/// Ordered by `|p| + s`, then `p`, then `s`.
pub fn point_search(ctx: &TransformContext, bound: u64) -> Vec<SearchHit> {
    let bound = bound as i64;
    let mut grid: Vec<(i64, i64)> = (-bound..=bound)
        .filter(|p| *p != 0)
        .flat_map(|p| (1..=bound).map(move |s| (p, s)))
        .filter(|(p, s)| p.gcd(s) == 1)
        .collect();
    grid.sort_by_key(|&(p, s)| (p.abs() + s, p, s));

    grid.into_iter()
        .filter_map(|(p, s)| {
            let u = Rational::new(BigInt::from(p), BigInt::from(s));
            let root = rational_sqrt(&ctx.quartic().eval(&u))?;
            let v = if root.is_zero() { root } else { -root };
            let point = ctx.quartic_to_cubic(&u, &v).ok()?;
            Some(SearchHit { u, v, point })
        })
        .collect()
}
