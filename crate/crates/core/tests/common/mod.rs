#![allow(dead_code)]

use num_bigint::BigInt;
use sixcube_core::prelude::*;

pub struct Case {
    pub name: &'static str,
    pub fam: EquationFamily,
    pub par: Parameterization,
    pub ctx: TransformContext,
    pub generators: Vec<CurvePoint>,
}

fn case(name: &'static str, a: i64, b: i64, cubic_u: i64, h: Rational, gens: &[(Rational, Rational)]) -> Case {
    let fam = EquationFamily::from_i64(&[a], &[b], Sign::Plus).unwrap();
    let par = Parameterization::new(&fam, vec![int(cubic_u)], vec![int(1)], vec![int(1)], h).unwrap();
    let ctx = to_weierstrass(&build_quartic(&fam, &par).unwrap()).unwrap();
    let generators = gens
        .iter()
        .map(|(x, y)| ctx.curve().point(x.clone(), y.clone()).unwrap())
        .collect();
    Case {
        name,
        fam,
        par,
        ctx,
        generators,
    }
}

/// x^6 + y^3 = X^6 + Y^3, B = C = D = 1, h = 2.
pub fn example_one() -> Case {
    case("x^6+y^3, h=2", 1, 1, 1, int(2), &[(int(-48), int(80))])
}

/// 2x^6 + y^3 = 2X^6 + Y^3, B = 3, C = D = 1, h = 4/3, two generators.
pub fn example_two() -> Case {
    case(
        "2x^6+y^3, h=4/3",
        2,
        1,
        3,
        rat(4, 3),
        &[(rat(-1792, 243), rat(3328, 2187)), (rat(-2411, 324), rat(7007, 5832))],
    )
}

/// x^6 + 7y^3 = X^6 + 7Y^3, B = C = D = 1, h = 2/7.
pub fn example_three_a() -> Case {
    case(
        "x^6+7y^3, h=2/7",
        1,
        7,
        1,
        rat(2, 7),
        &[(rat(752, 2401), rat(240, 16807))],
    )
}

/// x^6 + 7y^3 = X^6 + 7Y^3, B = C = D = 1, h = 7/2.
pub fn example_three_b() -> Case {
    case("x^6+7y^3, h=7/2", 1, 7, 1, rat(7, 2), &[(rat(-77, 2), int(42))])
}

pub fn all_cases() -> Vec<Case> {
    vec![example_one(), example_two(), example_three_a(), example_three_b()]
}

pub fn tuple(x: i64, y: i64, xr: i64, yr: i64) -> SolutionTuple<BigInt> {
    SolutionTuple::new(vec![x.into()], vec![y.into()], vec![xr.into()], vec![yr.into()])
}

pub fn big_tuple(x: &str, y: &str, xr: &str, yr: &str) -> SolutionTuple<BigInt> {
    let p = |s: &str| -> BigInt { s.parse().unwrap() };
    SolutionTuple::new(vec![p(x)], vec![p(y)], vec![p(xr)], vec![p(yr)])
}

/// The ten published identities, each as `(family index, tuple)` with
/// the family given by `(a, b)`.
pub fn published_identities() -> Vec<((i64, i64), SolutionTuple<BigInt>)> {
    vec![
        ((1, 1), tuple(1, 12, 3, 10)),
        ((1, 1), tuple(74, 5768, 14, 7088)),
        ((1, 1), tuple(1503, 6175210, 1919, 5819322)),
        ((1, 1), big_tuple("693358", "2867762572208", "1427882", "2478237149768")),
        ((2, 1), tuple(15, 1380, 33, 408)),
        ((2, 1), tuple(22773, 72216552, 1317, 653700972)),
        ((2, 1), tuple(501, 997572, 885, 398820)),
        ((1, 7), tuple(287, 31570, 301, 17164)),
        ((1, 7), tuple(7, 140, 14, 119)),
        ((1, 7), tuple(251, 32089, 29, 40969)),
    ]
}

/// A square-constant parameterization for any family and any `B, C, D`
/// with `Σ a_i D_i ≠ 0`: with `k = ±2 Σ a_i D_i / W`, the choice
/// `h = ±k r^2` makes the constant term `k^6 r^10`.
pub fn square_h(
    fam: &EquationFamily,
    cubic_u: &[Rational],
    cubic_v: &[Rational],
    sextic_u: &[Rational],
    r: &Rational,
) -> Option<Rational> {
    let w: Rational = fam
        .b()
        .iter()
        .zip(cubic_u.iter().zip(cubic_v))
        .map(|(b, (bu, cv))| Rational::from_integer(b.clone()) * bu * cv * cv)
        .sum();
    let ad: Rational = fam
        .a()
        .iter()
        .zip(sextic_u)
        .map(|(a, d)| Rational::from_integer(a.clone()) * d)
        .sum();
    if w == int(0) || ad == int(0) {
        return None;
    }
    let k = int(2) * ad / w;
    Some(match fam.sign() {
        Sign::Plus => &k * r * r,
        Sign::Minus => -(&k * r * r),
    })
}
