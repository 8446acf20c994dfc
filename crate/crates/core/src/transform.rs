//! Birational map from a quartic with square constant term to a long-form
//! Weierstrass cubic.
//!
//! For `v^2 = a u^4 + b u^3 + c u^2 + d u + q^2` (q ≠ 0) put
//!
//! ```text
//! x = (2q(v + q) + d u) / u^2
//! y = (4q^2(v + q) + 2q(d u + c u^2) - d^2 u^2 / (2q)) / u^3
//! ```
//!
//! Then `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with
//! `a1 = d/q`, `a2 = c - d^2/(4q^2)`, `a3 = 2qb`, `a4 = -4q^2 a`, `a6 = a2 a4`.
//! The inverse is `u = (2q(x + c) - d^2/(2q)) / y`, `v = -q + u(ux - d)/(2q)`.
//! `(0, q)` corresponds to the point at infinity and `(0, -q)` to
//! `(-a2, a1 a2 - a3)`.

use std::fmt;

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::quartic::QuarticModel;

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over the rationals,
/// nonsingular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a1: Rational,
    a2: Rational,
    a3: Rational,
    a4: Rational,
    a6: Rational,
    discriminant: Rational,
}

impl WeierstrassCurve {
    /// Fails with [`Error::SingularCurve`] when the discriminant vanishes.
    pub fn new(a1: Rational, a2: Rational, a3: Rational, a4: Rational, a6: Rational) -> Result<Self> {
        let mut curve = Self {
            a1,
            a2,
            a3,
            a4,
            a6,
            discriminant: Rational::zero(),
        };
        curve.discriminant = curve.compute_discriminant();
        if curve.discriminant.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn a1(&self) -> &Rational {
        &self.a1
    }
    pub fn a2(&self) -> &Rational {
        &self.a2
    }
    pub fn a3(&self) -> &Rational {
        &self.a3
    }
    pub fn a4(&self) -> &Rational {
        &self.a4
    }
    pub fn a6(&self) -> &Rational {
        &self.a6
    }

    /// `[a1, a2, a3, a4, a6]`
    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    pub fn discriminant(&self) -> &Rational {
        &self.discriminant
    }

    fn compute_discriminant(&self) -> Rational {
        let c = |n: i64| Rational::from_integer(n.into());
        let b2 = &self.a1 * &self.a1 + c(4) * &self.a2;
        let b4 = c(2) * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + c(4) * &self.a6;
        let b8 = (&b2 * &b6 - &b4 * &b4) / c(4);
        -(&b2 * &b2 * &b8) - c(8) * &b4 * &b4 * &b4 - c(27) * &b6 * &b6 + c(9) * &b2 * &b4 * &b6
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        let lhs = y * y + &self.a1 * x * y + &self.a3 * y;
        let rhs = ((x + &self.a2) * x + &self.a4) * x + &self.a6;
        lhs == rhs
    }

    pub fn contains_point(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.contains(x, y),
        }
    }

    /// Affine point, checked against the curve equation.
    pub fn point(&self, x: Rational, y: Rational) -> Result<CurvePoint> {
        if self.contains(&x, &y) {
            Ok(CurvePoint::Affine { x, y })
        } else {
            Err(Error::PointNotOnCurve {
                x: Box::new(x),
                y: Box::new(y),
            })
        }
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("infinity"),
            CurvePoint::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

/// A quartic model together with its Weierstrass image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformContext {
    quartic: QuarticModel,
    curve: WeierstrassCurve,
}

pub fn to_weierstrass(model: &QuarticModel) -> Result<TransformContext> {
    TransformContext::new(model.clone())
}

impl TransformContext {
    pub fn new(quartic: QuarticModel) -> Result<Self> {
        let q = &quartic.q;
        if q.is_zero() {
            return Err(Error::DegenerateH("q = 0"));
        }
        let two = Rational::from_integer(2.into());
        let four = Rational::from_integer(4.into());
        let q2 = q * q;
        let d = &quartic.a1;
        let a1 = d / q;
        let a2 = &quartic.a2 - d * d / (&four * &q2);
        let a3 = two * q * &quartic.a3;
        let a4 = -(four * &q2 * &quartic.a4);
        let a6 = &a2 * &a4;
        let curve = WeierstrassCurve::new(a1, a2, a3, a4, a6)?;
        Ok(Self { quartic, curve })
    }

    pub fn quartic(&self) -> &QuarticModel {
        &self.quartic
    }

    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    /// Image of `(0, -q)`: `(-a2, a1 a2 - a3)`.
    pub fn exceptional_point(&self) -> CurvePoint {
        let c = &self.curve;
        CurvePoint::Affine {
            x: -c.a2.clone(),
            y: &c.a1 * &c.a2 - &c.a3,
        }
    }

    /// Forward map from the quartic to the cubic.
    pub fn quartic_to_cubic(&self, u: &Rational, v: &Rational) -> Result<CurvePoint> {
        let m = &self.quartic;
        if !m.contains(u, v) {
            return Err(Error::NotOnQuartic {
                u: Box::new(u.clone()),
                v: Box::new(v.clone()),
            });
        }
        let q = &m.q;
        if u.is_zero() {
            return Ok(if v == q {
                CurvePoint::Infinity
            } else {
                self.exceptional_point()
            });
        }
        let two = Rational::from_integer(2.into());
        let four = Rational::from_integer(4.into());
        let (c, d) = (&m.a2, &m.a1);
        let u2 = u * u;
        let vq = v + q;
        let x = (&two * q * &vq + d * u) / &u2;
        let y = (four * q * q * &vq + &two * q * (d * u + c * &u2) - d * d * &u2 / (two * q)) / (u2 * u);
        debug_assert!(self.curve.contains(&x, &y));
        Ok(CurvePoint::Affine { x, y })
    }

    /// Inverse map from the cubic back to the quartic. Infinity maps to
    /// `(0, q)`; points with `y = 0` have no preimage through the formulas.
    pub fn cubic_to_quartic(&self, p: &CurvePoint) -> Result<(Rational, Rational)> {
        let m = &self.quartic;
        let (x, y) = match p {
            CurvePoint::Infinity => return Ok((Rational::zero(), m.q.clone())),
            CurvePoint::Affine { x, y } => (x, y),
        };
        if !self.curve.contains(x, y) {
            return Err(Error::PointNotOnCurve {
                x: Box::new(x.clone()),
                y: Box::new(y.clone()),
            });
        }
        if y.is_zero() {
            return Err(Error::TwoTorsion);
        }
        let two = Rational::from_integer(2.into());
        let q = &m.q;
        let (c, d) = (&m.a2, &m.a1);
        let two_q = &two * q;
        let u = (&two_q * (x + c) - d * d / &two_q) / y;
        let v = -q + &u * (&u * x - d) / two_q;
        debug_assert!(m.contains(&u, &v));
        Ok((u, v))
    }
}
