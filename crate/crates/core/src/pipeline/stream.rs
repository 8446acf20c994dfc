use std::collections::VecDeque;
use std::fmt;

use num_traits::Zero;

use super::display::Identity;
use super::{clear_denominators, is_trivial, point_to_uv_solution, reduce_primitive};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::model::{residual, substitute, EquationFamily, IntegerSolution, Parameterization, RationalSolution};
use crate::transform::{CurvePoint, TransformContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenerateOptions {
    /// Largest multiple `k` (and largest `|k_i|` in combinations).
    pub nmax: u32,
    /// Also walk `Σ k_i P_i` over at least two generators.
    pub combine: bool,
    /// Emit trivial solutions (flagged) instead of dropping them.
    pub keep_trivial: bool,
    /// Divide out common scalings after clearing denominators.
    pub primitive: bool,
}

impl Default for GenerateOptions {
    fn default() -> Self {
        Self {
            nmax: 4,
            combine: false,
            keep_trivial: false,
            primitive: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLabel {
    /// `k P_generator` (generator index is 0-based).
    Multiple { generator: usize, k: i64 },
    /// `Σ k_i P_i`.
    Combination(Vec<i64>),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Multiple { generator, k } => write!(f, "{k}*P{}", generator + 1),
            PointLabel::Combination(ks) => {
                let parts: Vec<String> = ks.iter().map(i64::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Emission {
    pub label: PointLabel,
    pub point: CurvePoint,
    pub u: Rational,
    pub v: Rational,
    pub solution: IntegerSolution,
    pub identity: Identity,
    pub trivial: bool,
    /// Came from `(u, -v)` rather than from the point's own preimage.
    pub companion: bool,
}

/// Lazily walks multiples (and optionally combinations) of the generators,
/// yielding verified integer solutions in a fixed order: all multiples of
/// the first generator for `k = 1..=nmax`, then the second, and so on, then
/// combinations in lexicographic order of their coefficient vectors.
pub struct Solutions<'a> {
    fam: &'a EquationFamily,
    par: &'a Parameterization,
    ctx: &'a TransformContext,
    generators: &'a [CurvePoint],
    opts: GenerateOptions,
    labels: std::vec::IntoIter<PointLabel>,
    multiples: Vec<Vec<CurvePoint>>,
    pending: VecDeque<Emission>,
}

pub fn generate<'a>(
    fam: &'a EquationFamily,
    par: &'a Parameterization,
    ctx: &'a TransformContext,
    generators: &'a [CurvePoint],
    opts: GenerateOptions,
) -> Result<Solutions<'a>> {
    for g in generators {
        if let CurvePoint::Affine { x, y } = g {
            if !ctx.curve().contains(x, y) {
                return Err(Error::PointNotOnCurve {
                    x: Box::new(x.clone()),
                    y: Box::new(y.clone()),
                });
            }
        }
    }
    let nmax = i64::from(opts.nmax);
    let mut labels: Vec<PointLabel> = (0..generators.len())
        .flat_map(|generator| (1..=nmax).map(move |k| PointLabel::Multiple { generator, k }))
        .collect();
    if opts.combine && generators.len() >= 2 {
        labels.extend(
            combinations(generators.len(), nmax)
                .into_iter()
                .map(PointLabel::Combination),
        );
    }
    Ok(Solutions {
        fam,
        par,
        ctx,
        generators,
        opts,
        labels: labels.into_iter(),
        multiples: generators.iter().map(|_| vec![CurvePoint::Infinity]).collect(),
        pending: VecDeque::new(),
    })
}

/// Coefficient vectors in `[-nmax, nmax]^len` with at least two nonzero
/// entries whose first nonzero entry is positive, in lexicographic order.
fn combinations(len: usize, nmax: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = vec![-nmax; len];
    loop {
        let nonzero: Vec<&i64> = cur.iter().filter(|k| **k != 0).collect();
        if nonzero.len() >= 2 && *nonzero[0] > 0 {
            out.push(cur.clone());
        }
        // odometer, last position fastest
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < nmax {
                cur[i] += 1;
                break;
            }
            cur[i] = -nmax;
        }
    }
}

impl Solutions<'_> {
    fn multiple(&mut self, generator: usize, k: i64) -> CurvePoint {
        let curve = self.ctx.curve();
        let wanted = k.unsigned_abs() as usize;
        let table = &mut self.multiples[generator];
        while table.len() <= wanted {
            let next = curve
                .add(
                    table.last().expect("table starts with infinity"),
                    &self.generators[generator],
                )
                .expect("generators were checked on the curve");
            table.push(next);
        }
        if k < 0 {
            curve.negate(&table[wanted])
        } else {
            table[wanted].clone()
        }
    }

    fn point_for(&mut self, label: &PointLabel) -> CurvePoint {
        match label {
            PointLabel::Multiple { generator, k } => self.multiple(*generator, *k),
            PointLabel::Combination(ks) => {
                let mut acc = CurvePoint::Infinity;
                for (g, k) in ks.iter().enumerate() {
                    let term = self.multiple(g, *k);
                    acc = self.ctx.curve().add(&acc, &term).expect("multiples stay on the curve");
                }
                acc
            }
        }
    }

    fn finish(
        &self,
        label: &PointLabel,
        point: &CurvePoint,
        (u, v): (Rational, Rational),
        sol: &RationalSolution,
        companion: bool,
    ) -> Result<Emission> {
        let mut solution = clear_denominators(self.fam, sol)?;
        if self.opts.primitive {
            solution = reduce_primitive(&solution);
        }
        let res = residual(self.fam, &solution.values)?;
        if !res.is_zero() {
            return Err(Error::VerificationFailed {
                residual: Box::new(Rational::from_integer(res)),
            });
        }
        Ok(Emission {
            label: label.clone(),
            point: point.clone(),
            u,
            v,
            trivial: is_trivial(self.fam, &solution.values),
            identity: Identity::normalize(self.fam, &solution.values),
            solution,
            companion,
        })
    }

    fn process(&mut self, label: PointLabel) -> Result<()> {
        let point = self.point_for(&label);
        let ((u, v), sol) = match point_to_uv_solution(self.fam, self.par, self.ctx, &point) {
            Err(Error::SkippablePoint(_)) => return Ok(()),
            other => other?,
        };
        let main = self.finish(&label, &point, (u.clone(), v.clone()), &sol, false)?;

        let mut companion = None;
        if !v.is_zero() {
            let neg_v = -v;
            let other = substitute(self.fam, self.par, &u, &neg_v);
            let c = self.finish(&label, &point, (u, neg_v), &other, true)?;
            if !c.trivial && !c.identity.same_terms(&main.identity) {
                companion = Some(c);
            }
        }
        if self.opts.keep_trivial || !main.trivial {
            self.pending.push_back(main);
        }
        self.pending.extend(companion);
        Ok(())
    }
}

impl Iterator for Solutions<'_> {
    type Item = Result<Emission>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(e) = self.pending.pop_front() {
                return Some(Ok(e));
            }
            let label = self.labels.next()?;
            if let Err(e) = self.process(label) {
                return Some(Err(e));
            }
        }
    }
}
