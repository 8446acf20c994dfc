//! Chord-tangent group law on a long-form Weierstrass curve.

use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::transform::{CurvePoint, WeierstrassCurve};

impl WeierstrassCurve {
    fn ensure_on_curve(&self, p: &CurvePoint) -> Result<()> {
        match p {
            CurvePoint::Affine { x, y } if !self.contains(x, y) => Err(Error::PointNotOnCurve {
                x: Box::new(x.clone()),
                y: Box::new(y.clone()),
            }),
            _ => Ok(()),
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y - self.a1() * x - self.a3(),
            },
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.ensure_on_curve(p)?;
        self.ensure_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, p)
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (a1, a2, a3, a4) = (self.a1(), self.a2(), self.a3(), self.a4());
        let slope = if x1 == x2 {
            let denom = Rational::from_integer(2.into()) * y1 + a1 * x1 + a3;
            // covers both P + (-P) and doubling a 2-torsion point
            if y1 + y2 + a1 * x2 + a3 == Rational::zero() || denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let three = Rational::from_integer(3.into());
            let two = Rational::from_integer(2.into());
            (three * x1 * x1 + two * a2 * x1 + a4 - a1 * y1) / denom
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope + a1 * &slope - a2 - x1 - x2;
        let y3 = &slope * (x1 - &x3) - y1 - a1 * &x3 - a3;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    /// `k P` by double-and-add; negative `k` multiplies `-P`.
    pub fn multiply(&self, p: &CurvePoint, k: i64) -> Result<CurvePoint> {
        self.ensure_on_curve(p)?;
        let base = if k < 0 { self.negate(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut addend = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &addend);
            }
            k >>= 1;
            if k > 0 {
                addend = self.add_unchecked(&addend, &addend);
            }
        }
        Ok(acc)
    }
}
