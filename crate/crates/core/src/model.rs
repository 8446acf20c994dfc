//! The target equation
//!
//! ```text
//! Σ a_i x_i^6 + Σ b_i y_i^3 = Σ a_i X_i^6 ± Σ b_i Y_i^3
//! ```
//!
//! together with the linear substitution in two rational unknowns `(u, v)`
//! that reduces it to a quartic curve, exact residual evaluation, and the
//! weighted scaling symmetry `(x, y) -> (t x, t^2 y)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{pow, Num, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Which sign joins the cubic block on the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

/// Fixed coefficients of one member of the equation family.
///
/// `n = a.len()` sextic terms and `m = b.len()` cubic terms per side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationFamily {
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    sign: Sign,
}

impl EquationFamily {
    pub fn new(a: Vec<BigInt>, b: Vec<BigInt>, sign: Sign) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidFamily("need at least one sextic term".into()));
        }
        if b.is_empty() {
            return Err(Error::InvalidFamily("need at least one cubic term".into()));
        }
        if let Some(i) = a.iter().position(Zero::is_zero) {
            return Err(Error::InvalidFamily(format!("a[{i}] is zero")));
        }
        if let Some(i) = b.iter().position(Zero::is_zero) {
            return Err(Error::InvalidFamily(format!("b[{i}] is zero")));
        }
        Ok(Self { a, b, sign })
    }

    /// Shorthand for small integer coefficients.
    pub fn from_i64(a: &[i64], b: &[i64], sign: Sign) -> Result<Self> {
        Self::new(
            a.iter().copied().map(BigInt::from).collect(),
            b.iter().copied().map(BigInt::from).collect(),
            sign,
        )
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn m(&self) -> usize {
        self.b.len()
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// The free rational parameters of the substitution.
///
/// For the plus variant
/// `x_i = -D_i u + h`, `y_i = B_i u + C_i v`, `X_i = D_i u + h`, `Y_i = -B_i u + C_i v`;
/// for the minus variant
/// `x_i = D_i u + h`, `y_i = B_i u - C_i v`, `X_i = -D_i u + h`, `Y_i = B_i u + C_i v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameterization {
    /// `B_i`: coefficient of `u` in the cubic unknowns.
    cubic_u: Vec<Rational>,
    /// `C_i`: coefficient of `v` in the cubic unknowns.
    cubic_v: Vec<Rational>,
    /// `D_i`: coefficient of `u` in the sextic unknowns.
    sextic_u: Vec<Rational>,
    /// `h`: constant shared by all sextic unknowns.
    sextic_const: Rational,
}

impl Parameterization {
    /// Validates dimensions against `fam`, that `h ≠ 0` and that the
    /// weight `Σ b_i B_i C_i^2` is nonzero.
    pub fn new(
        fam: &EquationFamily,
        cubic_u: Vec<Rational>,
        cubic_v: Vec<Rational>,
        sextic_u: Vec<Rational>,
        sextic_const: Rational,
    ) -> Result<Self> {
        check_len("B", fam.m(), cubic_u.len())?;
        check_len("C", fam.m(), cubic_v.len())?;
        check_len("D", fam.n(), sextic_u.len())?;
        if sextic_const.is_zero() {
            return Err(Error::DegenerateH("h = 0"));
        }
        let par = Self {
            cubic_u,
            cubic_v,
            sextic_u,
            sextic_const,
        };
        if par.weight(fam).is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(par)
    }

    pub fn cubic_u(&self) -> &[Rational] {
        &self.cubic_u
    }

    pub fn cubic_v(&self) -> &[Rational] {
        &self.cubic_v
    }

    pub fn sextic_u(&self) -> &[Rational] {
        &self.sextic_u
    }

    pub fn sextic_const(&self) -> &Rational {
        &self.sextic_const
    }

    /// `Σ b_i B_i C_i^2`, the common denominator of the quartic's coefficients.
    pub fn weight(&self, fam: &EquationFamily) -> Rational {
        weight(fam, &self.cubic_u, &self.cubic_v)
    }
}

pub(crate) fn weight(fam: &EquationFamily, cubic_u: &[Rational], cubic_v: &[Rational]) -> Rational {
    fam.b()
        .iter()
        .zip(cubic_u.iter().zip(cubic_v))
        .map(|(b, (bu, cv))| Rational::from_integer(b.clone()) * bu * cv * cv)
        .sum()
}

pub(crate) fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { what, expected, found })
    }
}

/// A candidate tuple `(x_1..x_n, y_1..y_m, X_1..X_n, Y_1..Y_m)`.
///
/// `x`/`y` are the left-hand unknowns and `x_rhs`/`y_rhs` the right-hand ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionTuple<T> {
    pub x: Vec<T>,
    pub y: Vec<T>,
    pub x_rhs: Vec<T>,
    pub y_rhs: Vec<T>,
}

impl<T> SolutionTuple<T> {
    pub fn new(x: Vec<T>, y: Vec<T>, x_rhs: Vec<T>, y_rhs: Vec<T>) -> Self {
        Self { x, y, x_rhs, y_rhs }
    }

    pub fn check_dims(&self, fam: &EquationFamily) -> Result<()> {
        check_len("x", fam.n(), self.x.len())?;
        check_len("y", fam.m(), self.y.len())?;
        check_len("X", fam.n(), self.x_rhs.len())?;
        check_len("Y", fam.m(), self.y_rhs.len())
    }

    /// Sextic entries of both sides, left first.
    pub fn sextic_entries(&self) -> impl Iterator<Item = &T> {
        self.x.iter().chain(&self.x_rhs)
    }

    pub fn cubic_entries(&self) -> impl Iterator<Item = &T> {
        self.y.iter().chain(&self.y_rhs)
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> SolutionTuple<U> {
        SolutionTuple {
            x: self.x.iter().map(&mut f).collect(),
            y: self.y.iter().map(&mut f).collect(),
            x_rhs: self.x_rhs.iter().map(&mut f).collect(),
            y_rhs: self.y_rhs.iter().map(&mut f).collect(),
        }
    }

    /// Applies `f` to sextic entries and `g` to cubic entries.
    pub fn map_weighted<U>(&self, mut f: impl FnMut(&T) -> U, mut g: impl FnMut(&T) -> U) -> SolutionTuple<U> {
        SolutionTuple {
            x: self.x.iter().map(&mut f).collect(),
            y: self.y.iter().map(&mut g).collect(),
            x_rhs: self.x_rhs.iter().map(&mut f).collect(),
            y_rhs: self.y_rhs.iter().map(&mut g).collect(),
        }
    }
}

impl<T: fmt::Display> fmt::Display for SolutionTuple<T> {
    /// `x;y;X;Y` with comma-separated entries inside each block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |v: &[T]| v.iter().map(T::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{};{};{};{}",
            block(&self.x),
            block(&self.y),
            block(&self.x_rhs),
            block(&self.y_rhs)
        )
    }
}

pub type RationalSolution = SolutionTuple<Rational>;

/// A denominator-free solution, with the scale that relates it to the
/// rational solution it came from: `x = t·x_rat`, `y = t²·y_rat`.
///
/// `scale` is a positive integer coming out of
/// [`clear_denominators`](crate::pipeline::clear_denominators); primitive
/// reduction may make it a proper fraction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSolution {
    pub values: SolutionTuple<BigInt>,
    pub scale: Rational,
}

impl IntegerSolution {
    pub fn to_rational(&self) -> RationalSolution {
        self.values.map(|v| Rational::from_integer(v.clone()))
    }
}

/// Evaluates the substitution at `(u, v)`. The result solves the equation
/// only when `(u, v)` lies on the associated quartic.
pub fn substitute(fam: &EquationFamily, par: &Parameterization, u: &Rational, v: &Rational) -> RationalSolution {
    let h = par.sextic_const();
    let du = |d: &Rational| d * u;
    let near: Vec<Rational> = par.sextic_u().iter().map(|d| h - du(d)).collect();
    let far: Vec<Rational> = par.sextic_u().iter().map(|d| h + du(d)).collect();
    let cubic = |sign_u: i8, sign_v: i8| -> Vec<Rational> {
        par.cubic_u()
            .iter()
            .zip(par.cubic_v())
            .map(|(bu, cv)| {
                let bu = bu * u;
                let cv = cv * v;
                match (sign_u > 0, sign_v > 0) {
                    (true, true) => bu + cv,
                    (true, false) => bu - cv,
                    (false, true) => cv - bu,
                    (false, false) => -(bu + cv),
                }
            })
            .collect()
    };
    match fam.sign() {
        Sign::Plus => SolutionTuple::new(near, cubic(1, 1), far, cubic(-1, 1)),
        Sign::Minus => SolutionTuple::new(far, cubic(1, -1), near, cubic(1, 1)),
    }
}

/// `Σ a x^6 + Σ b y^3 − Σ a X^6 ∓ Σ b Y^3`, exactly. Zero iff the tuple
/// solves the equation.
pub fn residual<T>(fam: &EquationFamily, sol: &SolutionTuple<T>) -> Result<T>
where
    T: Clone + Num + From<BigInt>,
{
    sol.check_dims(fam)?;
    let sextic = |vals: &[T]| -> T {
        fam.a()
            .iter()
            .zip(vals)
            .fold(T::zero(), |acc, (a, x)| acc + T::from(a.clone()) * pow(x.clone(), 6))
    };
    let cubic = |vals: &[T]| -> T {
        fam.b()
            .iter()
            .zip(vals)
            .fold(T::zero(), |acc, (b, y)| acc + T::from(b.clone()) * pow(y.clone(), 3))
    };
    let lhs = sextic(&sol.x) + cubic(&sol.y);
    let rhs_sextic = sextic(&sol.x_rhs);
    let rhs_cubic = cubic(&sol.y_rhs);
    Ok(match fam.sign() {
        Sign::Plus => lhs - rhs_sextic - rhs_cubic,
        Sign::Minus => lhs - rhs_sextic + rhs_cubic,
    })
}

/// `(t x, t^2 y, t X, t^2 Y)`. Both sides of the equation scale by `t^6`.
pub fn scale_solution(sol: &RationalSolution, t: &Rational) -> Result<RationalSolution> {
    if t.is_zero() {
        return Err(Error::ZeroScale);
    }
    let t2 = t * t;
    Ok(sol.map_weighted(|x| x * t, |y| y * &t2))
}
