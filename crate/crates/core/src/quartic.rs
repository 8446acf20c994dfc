//! The reduced quartic `v^2 = A4 u^4 + A3 u^3 + A2 u^2 + A1 u + q^2`.
//!
//! Substituting the linear parameterization into the target equation gives
//! `residual = 6 u W (v^2 - Q(u))` with `W = Σ b_i B_i C_i^2`, so rational
//! points on `v^2 = Q(u)` are exactly the rational solutions of the family.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{pow, Signed, Zero};

use crate::arith::{rational_sqrt, Rational};
use crate::error::{Error, Result};
use crate::model::{check_len, weight, EquationFamily, Parameterization, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticModel {
    pub a4: Rational,
    pub a3: Rational,
    pub a2: Rational,
    pub a1: Rational,
    /// Positive square root of the constant term.
    pub q: Rational,
    provenance: Option<(EquationFamily, Parameterization)>,
}

impl QuarticModel {
    /// A general quartic `v^2 = a4 u^4 + a3 u^3 + a2 u^2 + a1 u + q^2` with no
    /// attached family. `q` is stored as its absolute value.
    pub fn new(a4: Rational, a3: Rational, a2: Rational, a1: Rational, q: Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DegenerateH("q = 0"));
        }
        Ok(Self {
            a4,
            a3,
            a2,
            a1,
            q: q.abs(),
            provenance: None,
        })
    }

    /// The family and parameters this model was built from, if any.
    pub fn provenance(&self) -> Option<(&EquationFamily, &Parameterization)> {
        self.provenance.as_ref().map(|(f, p)| (f, p))
    }

    pub fn constant(&self) -> Rational {
        &self.q * &self.q
    }

    /// `Q(u)`; `(u, v)` is on the model iff `v^2 == Q(u)`.
    pub fn eval(&self, u: &Rational) -> Rational {
        // Horner
        let mut acc = self.a4.clone();
        for c in [&self.a3, &self.a2, &self.a1] {
            acc = acc * u + c;
        }
        acc * u + self.constant()
    }

    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        v * v == self.eval(u)
    }
}

/// Coefficients `(A4, A2, L)` of the even quartic, before the square test.
fn even_coefficients(
    fam: &EquationFamily,
    cubic_u: &[Rational],
    cubic_v: &[Rational],
    sextic_u: &[Rational],
    h: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    let w = weight(fam, cubic_u, cubic_v);
    if w.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let moment = |k: usize| -> Rational {
        fam.a()
            .iter()
            .zip(sextic_u)
            .map(|(a, d)| Rational::from_integer(a.clone()) * pow(d.clone(), k))
            .sum()
    };
    let cubic_moment: Rational = fam
        .b()
        .iter()
        .zip(cubic_u)
        .map(|(b, bu)| Rational::from_integer(b.clone()) * pow(bu.clone(), 3))
        .sum();
    let two = Rational::from_integer(2.into());
    let three = Rational::from_integer(3.into());
    let twenty = Rational::from_integer(20.into());
    let h3 = pow(h.clone(), 3);
    let h5 = pow(h.clone(), 5);

    let (a4, a2, constant) = match fam.sign() {
        Sign::Plus => (
            &two * h * moment(5) / &w,
            (twenty * h3 * moment(3) - cubic_moment) / (three * &w),
            two * h5 * moment(1) / &w,
        ),
        Sign::Minus => (
            -(&two * h * moment(5)) / &w,
            -(twenty * h3 * moment(3) + cubic_moment) / (three * &w),
            -(two * h5 * moment(1)) / &w,
        ),
    };
    Ok((a4, a2, constant))
}

/// Builds the quartic for `(fam, par)`, requiring its constant term to be a
/// nonzero rational square.
pub fn build_quartic(fam: &EquationFamily, par: &Parameterization) -> Result<QuarticModel> {
    check_len("B", fam.m(), par.cubic_u().len())?;
    check_len("D", fam.n(), par.sextic_u().len())?;
    let h = par.sextic_const();
    if h.is_zero() {
        return Err(Error::DegenerateH("h = 0"));
    }
    let (a4, a2, constant) = even_coefficients(fam, par.cubic_u(), par.cubic_v(), par.sextic_u(), h)?;
    if constant.is_zero() {
        // 0 is a square, but the transform divides by q
        return Err(Error::DegenerateH("constant term is 0 (Σ a_i D_i = 0)"));
    }
    let q = rational_sqrt(&constant).ok_or(Error::NotASquare {
        value: Box::new(constant),
    })?;
    Ok(QuarticModel {
        a4,
        a3: Rational::zero(),
        a2,
        a1: Rational::zero(),
        q,
        provenance: Some((fam.clone(), par.clone())),
    })
}

/// Every `h = p/s` with `0 < |p| ≤ bound`, `1 ≤ s ≤ bound`, `gcd(p, s) = 1`
/// whose constant term is a nonzero rational square, with its model.
///
/// Ordered by `|p| + s`, then `p`, then `s`.
pub fn search_h(
    fam: &EquationFamily,
    cubic_u: &[Rational],
    cubic_v: &[Rational],
    sextic_u: &[Rational],
    bound: u64,
) -> Result<Vec<(Rational, QuarticModel)>> {
    check_len("B", fam.m(), cubic_u.len())?;
    check_len("C", fam.m(), cubic_v.len())?;
    check_len("D", fam.n(), sextic_u.len())?;
    if weight(fam, cubic_u, cubic_v).is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let bound = bound as i64;
    let mut candidates: Vec<(i64, i64)> = (-bound..=bound)
        .filter(|p| *p != 0)
        .flat_map(|p| (1..=bound).map(move |s| (p, s)))
        .filter(|(p, s)| p.gcd(s) == 1)
        .collect();
    candidates.sort_by_key(|&(p, s)| (p.abs() + s, p, s));

    let mut out = Vec::new();
    for (p, s) in candidates {
        let h = Rational::new(BigInt::from(p), BigInt::from(s));
        let par = Parameterization::new(fam, cubic_u.to_vec(), cubic_v.to_vec(), sextic_u.to_vec(), h.clone())?;
        match build_quartic(fam, &par) {
            Ok(model) => out.push((h, model)),
            Err(Error::NotASquare { .. } | Error::DegenerateH(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
