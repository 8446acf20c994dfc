//! Curve fixtures shared by the benchmarks.

use sixcube_core::prelude::*;

pub struct Fixture {
    pub family: EquationFamily,
    pub params: Parameterization,
    pub context: TransformContext,
    pub generator: CurvePoint,
}

fn fixture(a: i64, b: i64, cubic_u: i64, h: Rational, gx: Rational, gy: Rational) -> Fixture {
    let family = EquationFamily::from_i64(&[a], &[b], Sign::Plus).expect("valid family");
    let params =
        Parameterization::new(&family, vec![int(cubic_u)], vec![int(1)], vec![int(1)], h).expect("valid parameters");
    let context = to_weierstrass(&build_quartic(&family, &params).expect("square constant")).expect("nonsingular");
    let generator = context.curve().point(gx, gy).expect("generator on curve");
    Fixture {
        family,
        params,
        context,
        generator,
    }
}

/// `x^6 + y^3 = X^6 + Y^3` with `B = C = D = 1`, `h = 2`.
pub fn sixth_and_cube() -> Fixture {
    fixture(1, 1, 1, int(2), int(-48), int(80))
}

/// `2x^6 + y^3 = 2X^6 + Y^3` with `B = 3`, `C = D = 1`, `h = 4/3`.
pub fn doubled_sixth() -> Fixture {
    fixture(2, 1, 3, rat(4, 3), rat(-1792, 243), rat(3328, 2187))
}
