//! From curve points to verified integer identities.

mod display;
mod search;
mod stream;

pub use display::{display_identity, Identity, Term};
pub use search::{point_search, SearchHit};
pub use stream::{generate, Emission, GenerateOptions, PointLabel, Solutions};

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{biguint_to_int, factorize, valuation, Rational};
use crate::error::{Error, Result, SkipReason};
use crate::model::{
    substitute, EquationFamily, IntegerSolution, Parameterization, RationalSolution, Sign, SolutionTuple,
};
use crate::transform::{CurvePoint, TransformContext};

/// Pulls `p` back to the quartic and substitutes. The result solves the
/// equation exactly because `(u, v)` is on the quartic.
pub fn point_to_solution(
    fam: &EquationFamily,
    par: &Parameterization,
    ctx: &TransformContext,
    p: &CurvePoint,
) -> Result<RationalSolution> {
    point_to_uv_solution(fam, par, ctx, p).map(|(_, sol)| sol)
}

pub(crate) fn point_to_uv_solution(
    fam: &EquationFamily,
    par: &Parameterization,
    ctx: &TransformContext,
    p: &CurvePoint,
) -> Result<((Rational, Rational), RationalSolution)> {
    if p.is_infinity() {
        return Err(Error::SkippablePoint(SkipReason::Infinity));
    }
    let (u, v) = match ctx.cubic_to_quartic(p) {
        Err(Error::TwoTorsion) => return Err(Error::SkippablePoint(SkipReason::TwoTorsion)),
        other => other?,
    };
    let sol = substitute(fam, par, &u, &v);
    Ok(((u, v), sol))
}

/// Smallest positive integer `t` making `t x`, `t X`, `t^2 y`, `t^2 Y`
/// integral, and the scaled tuple.
///
/// For each prime `p`, its exponent in `t` is the larger of the exponents of
/// `p` in the sextic denominators and the halved (rounded up) exponents in
/// the cubic denominators.
pub fn clear_denominators(fam: &EquationFamily, sol: &RationalSolution) -> Result<IntegerSolution> {
    sol.check_dims(fam)?;
    let mut need: BTreeMap<BigUint, usize> = BTreeMap::new();
    let mut require = |den: &BigInt, halve: bool| {
        for (p, e) in factorize(den) {
            let e = if halve { e.div_ceil(2) } else { e };
            let slot = need.entry(p).or_default();
            *slot = (*slot).max(e);
        }
    };
    for r in sol.sextic_entries() {
        require(r.denom(), false);
    }
    for r in sol.cubic_entries() {
        require(r.denom(), true);
    }
    let t: BigInt = need
        .iter()
        .map(|(p, e)| num_traits::pow(biguint_to_int(p), *e))
        .product();
    let t2 = &t * &t;
    let values = sol.map_weighted(|x| scaled_integer(x, &t), |y| scaled_integer(y, &t2));
    Ok(IntegerSolution {
        values,
        scale: Rational::from_integer(t),
    })
}

fn scaled_integer(r: &Rational, by: &BigInt) -> BigInt {
    let s = r * Rational::from_integer(by.clone());
    debug_assert!(s.is_integer());
    s.to_integer()
}

/// Divides out the largest `g` with `g | x_i, X_i` and `g^2 | y_i, Y_i`,
/// giving the primitive representative of the scaling class. The stored
/// scale is divided by `g` as well.
pub fn reduce_primitive(sol: &IntegerSolution) -> IntegerSolution {
    let gcd_of = |it: &mut dyn Iterator<Item = &BigInt>| it.fold(BigInt::zero(), |g, v| g.gcd(v));
    let sextic = gcd_of(&mut sol.values.sextic_entries());
    let cubic = gcd_of(&mut sol.values.cubic_entries());
    let candidates = match (sextic.is_zero(), cubic.is_zero()) {
        (true, true) => return sol.clone(),
        (false, false) => sextic.gcd(&cubic),
        (true, false) => cubic.clone(),
        (false, true) => sextic.clone(),
    };
    let mut g = BigInt::one();
    for p in factorize(&candidates).into_keys() {
        let from_sextic = if sextic.is_zero() {
            usize::MAX
        } else {
            valuation(&sextic, &p)
        };
        let from_cubic = if cubic.is_zero() {
            usize::MAX
        } else {
            valuation(&cubic, &p) / 2
        };
        g *= num_traits::pow(biguint_to_int(&p), from_sextic.min(from_cubic));
    }
    if g.is_one() {
        return sol.clone();
    }
    let g2 = &g * &g;
    IntegerSolution {
        values: sol.values.map_weighted(|x| x / &g, |y| y / &g2),
        scale: &sol.scale / Rational::from_integer(g),
    }
}

/// A tuple is trivial when the two sides cancel term by term:
/// `|x_i| = |X_i|` for all `i`, and `y_i = Y_i` (plus) or `y_i = -Y_i` (minus).
pub fn is_trivial<T>(fam: &EquationFamily, sol: &SolutionTuple<T>) -> bool
where
    T: Signed + Clone,
{
    let sextic = sol.x.iter().zip(&sol.x_rhs).all(|(a, b)| a.abs() == b.abs());
    let cubic = sol.y.iter().zip(&sol.y_rhs).all(|(y, yr)| match fam.sign() {
        Sign::Plus => y == yr,
        Sign::Minus => *y == -yr.clone(),
    });
    sextic && cubic
}

/// Representative of `sol` under the symmetries that leave its printed
/// identity unchanged: sign flips of sextic entries, exchanging the two
/// sides, and trading each cubic term for its negation on the other side.
/// Prefers the fewest negative entries, then the lexicographically
/// smallest tuple.
pub fn canonical_form(fam: &EquationFamily, sol: &SolutionTuple<BigInt>) -> SolutionTuple<BigInt> {
    let base = SolutionTuple {
        x: sol.x.iter().map(Signed::abs).collect(),
        y: sol.y.clone(),
        x_rhs: sol.x_rhs.iter().map(Signed::abs).collect(),
        y_rhs: sol.y_rhs.clone(),
    };
    let neg = |v: &[BigInt]| -> Vec<BigInt> { v.iter().map(|e| -e).collect() };
    let companion = |s: &SolutionTuple<BigInt>| match fam.sign() {
        Sign::Plus => SolutionTuple::new(s.x.clone(), neg(&s.y_rhs), s.x_rhs.clone(), neg(&s.y)),
        Sign::Minus => SolutionTuple::new(s.x.clone(), s.y_rhs.clone(), s.x_rhs.clone(), s.y.clone()),
    };
    let swap = |s: &SolutionTuple<BigInt>| match fam.sign() {
        Sign::Plus => SolutionTuple::new(s.x_rhs.clone(), s.y_rhs.clone(), s.x.clone(), s.y.clone()),
        Sign::Minus => SolutionTuple::new(s.x_rhs.clone(), neg(&s.y_rhs), s.x.clone(), neg(&s.y)),
    };
    let swapped = swap(&base);
    let orbit = [companion(&base), companion(&swapped), base, swapped];
    orbit
        .into_iter()
        .min_by(|a, b| {
            let negatives = |s: &SolutionTuple<BigInt>| s.cubic_entries().filter(|v| v.is_negative()).count();
            negatives(a).cmp(&negatives(b)).then_with(|| a.cmp(b))
        })
        .expect("orbit is nonempty")
}
