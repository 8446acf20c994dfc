//! Exhaustive search over a box, independent of the curve machinery.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, One};

use crate::model::{EquationFamily, IntegerSolution, Sign, SolutionTuple};
use crate::pipeline::{canonical_form, is_trivial};

/// All nontrivial integer solutions with sextic entries in
/// `[-sextic_bound, sextic_bound]` and cubic entries in
/// `[-cubic_bound, cubic_bound]`, one per symmetry class (see
/// [`canonical_form`]), sorted lexicographically.
///
/// Meets in the middle: right-hand values are hashed, left-hand tuples probe.
/// Memory is `(2 sextic_bound + 1)^n (2 cubic_bound + 1)^m` entries.
pub fn brute_force(fam: &EquationFamily, sextic_bound: u32, cubic_bound: u32) -> Vec<IntegerSolution> {
    let sextic_box = boxed(fam.n(), sextic_bound);
    let cubic_box = boxed(fam.m(), cubic_bound);

    let sextic_sum = |xs: &[BigInt]| -> BigInt { fam.a().iter().zip(xs).map(|(a, x)| a * pow(x.clone(), 6)).sum() };
    let cubic_sum = |ys: &[BigInt]| -> BigInt { fam.b().iter().zip(ys).map(|(b, y)| b * pow(y.clone(), 3)).sum() };
    let sextic_vals: Vec<BigInt> = sextic_box.iter().map(|xs| sextic_sum(xs)).collect();
    let cubic_vals: Vec<BigInt> = cubic_box.iter().map(|ys| cubic_sum(ys)).collect();

    let mut right: HashMap<BigInt, Vec<(usize, usize)>> = HashMap::new();
    for (i, sv) in sextic_vals.iter().enumerate() {
        for (j, cv) in cubic_vals.iter().enumerate() {
            let value = match fam.sign() {
                Sign::Plus => sv + cv,
                Sign::Minus => sv - cv,
            };
            right.entry(value).or_default().push((i, j));
        }
    }

    let mut found = BTreeSet::new();
    for (i, sv) in sextic_vals.iter().enumerate() {
        for (j, cv) in cubic_vals.iter().enumerate() {
            let Some(matches) = right.get(&(sv + cv)) else {
                continue;
            };
            for &(k, l) in matches {
                let sol = SolutionTuple::new(
                    sextic_box[i].clone(),
                    cubic_box[j].clone(),
                    sextic_box[k].clone(),
                    cubic_box[l].clone(),
                );
                if !is_trivial(fam, &sol) {
                    found.insert(canonical_form(fam, &sol));
                }
            }
        }
    }
    found
        .into_iter()
        .map(|values| IntegerSolution {
            values,
            scale: BigRational::one(),
        })
        .collect()
}

/// Every vector in `[-bound, bound]^len`.
fn boxed(len: usize, bound: u32) -> Vec<Vec<BigInt>> {
    let bound = i64::from(bound);
    let mut out: Vec<Vec<BigInt>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-bound..=bound).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(BigInt::from(v));
                    next
                })
            })
            .collect();
    }
    out
}
