use std::fmt;

use num_bigint::BigInt;
use num_traits::{pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{EquationFamily, Sign, SolutionTuple};

/// One printed monomial `coef*base^exp`, all parts nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub coef: BigInt,
    pub base: BigInt,
    pub exp: u32,
}

impl Term {
    pub fn value(&self) -> BigInt {
        &self.coef * pow(self.base.clone(), self.exp as usize)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}^{}", self.coef, self.base, self.exp)
    }
}

/// An identity between two sums of nonnegative monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

struct Slot {
    coef: BigInt,
    base: BigInt,
    exp: u32,
    native: Side,
    /// Contribution to the native side is `negated ? -coef*base^exp : coef*base^exp`.
    negated: bool,
}

impl Slot {
    fn contribution(&self) -> BigInt {
        let v = &self.coef * pow(self.base.clone(), self.exp as usize);
        if self.negated {
            -v
        } else {
            v
        }
    }
}

fn slots(fam: &EquationFamily, sol: &SolutionTuple<BigInt>) -> Vec<Slot> {
    let sextic = |vals: &[BigInt], native: Side| -> Vec<Slot> {
        fam.a()
            .iter()
            .zip(vals)
            .map(|(a, x)| Slot {
                coef: a.clone(),
                base: x.clone(),
                exp: 6,
                native,
                negated: false,
            })
            .collect()
    };
    let cubic = |vals: &[BigInt], native: Side, negated: bool| -> Vec<Slot> {
        fam.b()
            .iter()
            .zip(vals)
            .map(|(b, y)| Slot {
                coef: b.clone(),
                base: y.clone(),
                exp: 3,
                native,
                negated,
            })
            .collect()
    };
    let mut out = sextic(&sol.x, Side::Left);
    out.extend(cubic(&sol.y, Side::Left, false));
    out.extend(sextic(&sol.x_rhs, Side::Right));
    out.extend(cubic(&sol.y_rhs, Side::Right, fam.sign() == Sign::Minus));
    out
}

impl Identity {
    /// Moves every negative monomial across the equals sign.
    ///
    /// Each side lists its own sextic terms, then its own cubic terms, then
    /// the sextic and cubic terms that moved in from the other side.
    pub fn normalize(fam: &EquationFamily, sol: &SolutionTuple<BigInt>) -> Self {
        let mut native = (Vec::new(), Vec::new());
        let mut moved = (Vec::new(), Vec::new());
        let mut push = |slot: &Slot| {
            let stays = !slot.contribution().is_negative();
            let side = match (slot.native, stays) {
                (Side::Left, true) | (Side::Right, false) => Side::Left,
                _ => Side::Right,
            };
            let term = Term {
                coef: slot.coef.abs(),
                base: slot.base.abs(),
                exp: slot.exp,
            };
            let bucket = if stays { &mut native } else { &mut moved };
            match side {
                Side::Left => bucket.0.push(term),
                Side::Right => bucket.1.push(term),
            }
        };
        let all = slots(fam, sol);
        // sextics before cubics within each group
        for exp in [6, 3] {
            for s in all.iter().filter(|s| s.exp == exp && s.native == Side::Left) {
                push(s);
            }
        }
        for exp in [6, 3] {
            for s in all.iter().filter(|s| s.exp == exp && s.native == Side::Right) {
                push(s);
            }
        }
        let (mut lhs, mut rhs) = native;
        lhs.extend(moved.0);
        rhs.extend(moved.1);
        Identity { lhs, rhs }
    }

    fn side_value(terms: &[Term]) -> BigInt {
        terms.iter().map(Term::value).sum()
    }

    /// Evaluates both sides exactly.
    pub fn holds(&self) -> bool {
        Self::side_value(&self.lhs) == Self::side_value(&self.rhs)
    }

    /// Same monomials per side, ignoring order and zero terms, allowing the
    /// two sides to be exchanged.
    pub fn same_terms(&self, other: &Identity) -> bool {
        let key = |terms: &[Term]| {
            let mut v: Vec<Term> = terms.iter().filter(|t| !t.value().is_zero()).cloned().collect();
            v.sort();
            v
        };
        let (a, b) = (key(&self.lhs), key(&self.rhs));
        let (c, d) = (key(&other.lhs), key(&other.rhs));
        (a == c && b == d) || (a == d && b == c)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (lhs, rhs) = text
            .split_once('=')
            .ok_or_else(|| Error::MalformedIdentity("missing '='".into()))?;
        if rhs.contains('=') {
            return Err(Error::MalformedIdentity("more than one '='".into()));
        }
        Ok(Identity {
            lhs: parse_side(lhs)?,
            rhs: parse_side(rhs)?,
        })
    }

    /// Recovers a tuple of `fam` whose normalized identity has these terms.
    ///
    /// Sextic slots with positive coefficient take a term from their own side
    /// and negative-coefficient slots one from the opposite side; cubic slots
    /// take any term with a matching coefficient and get their sign from where
    /// it sits. The result still has to be checked with
    /// [`residual`](crate::model::residual).
    pub fn to_solution(&self, fam: &EquationFamily) -> Result<SolutionTuple<BigInt>> {
        let mut pool: Vec<(Side, &Term, bool)> = self
            .lhs
            .iter()
            .map(|t| (Side::Left, t, false))
            .chain(self.rhs.iter().map(|t| (Side::Right, t, false)))
            .collect();

        let mut take_sextic = |coef: &BigInt, native: Side| -> Result<BigInt> {
            let wanted = if coef.is_positive() { native } else { other(native) };
            let abs = coef.abs();
            let pick = pool
                .iter()
                .position(|(s, t, used)| !used && t.exp == 6 && t.coef == abs && *s == wanted && !t.base.is_zero())
                .or_else(|| {
                    pool.iter()
                        .position(|(_, t, used)| !used && t.exp == 6 && t.coef == abs && t.base.is_zero())
                })
                .ok_or_else(|| Error::MalformedIdentity(format!("no sextic term with coefficient {abs}")))?;
            pool[pick].2 = true;
            Ok(pool[pick].1.base.clone())
        };
        let x: Vec<BigInt> = fam
            .a()
            .iter()
            .map(|a| take_sextic(a, Side::Left))
            .collect::<Result<_>>()?;
        let x_rhs: Vec<BigInt> = fam
            .a()
            .iter()
            .map(|a| take_sextic(a, Side::Right))
            .collect::<Result<_>>()?;

        let mut take_cubic = |coef: &BigInt, native: Side, negated: bool| -> Result<BigInt> {
            let abs = coef.abs();
            let pick = pool
                .iter()
                .position(|(_, t, used)| !used && t.exp == 3 && t.coef == abs)
                .ok_or_else(|| Error::MalformedIdentity(format!("no cubic term with coefficient {abs}")))?;
            pool[pick].2 = true;
            let (side, term, _) = &pool[pick];
            // sign of the slot's contribution to its native side
            let mut positive = *side == native;
            if negated {
                positive = !positive;
            }
            if coef.is_negative() {
                positive = !positive;
            }
            Ok(if positive {
                term.base.clone()
            } else {
                -term.base.clone()
            })
        };
        let minus = fam.sign() == Sign::Minus;
        let y: Vec<BigInt> = fam
            .b()
            .iter()
            .map(|b| take_cubic(b, Side::Left, false))
            .collect::<Result<_>>()?;
        let y_rhs: Vec<BigInt> = fam
            .b()
            .iter()
            .map(|b| take_cubic(b, Side::Right, minus))
            .collect::<Result<_>>()?;

        if pool.iter().any(|(_, _, used)| !used) {
            return Err(Error::MalformedIdentity("terms left over for this family".into()));
        }
        Ok(SolutionTuple::new(x, y, x_rhs, y_rhs))
    }
}

fn other(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

fn parse_side(text: &str) -> Result<Vec<Term>> {
    let text = text.trim();
    if text == "0" {
        return Ok(Vec::new());
    }
    text.split('+').map(parse_term).collect()
}

fn parse_term(text: &str) -> Result<Term> {
    let bad = || Error::MalformedIdentity(format!("bad term '{}'", text.trim()));
    let (coef, rest) = text.trim().split_once('*').ok_or_else(bad)?;
    let (base, exp) = rest.split_once('^').ok_or_else(bad)?;
    let coef: BigInt = coef.trim().parse().map_err(|_| bad())?;
    let base: BigInt = base.trim().parse().map_err(|_| bad())?;
    let exp: u32 = exp.trim().parse().map_err(|_| bad())?;
    if coef.is_negative() || base.is_negative() || !(exp == 3 || exp == 6) {
        return Err(bad());
    }
    Ok(Term { coef, base, exp })
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |terms: &[Term]| {
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.iter().map(Term::to_string).collect::<Vec<_>>().join(" + ")
            }
        };
        write!(f, "{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// The identity with all printed terms nonnegative, e.g.
/// `1*1^6 + 1*12^3 = 1*3^6 + 1*10^3`.
pub fn display_identity(fam: &EquationFamily, sol: &SolutionTuple<BigInt>) -> String {
    Identity::normalize(fam, sol).to_string()
}
