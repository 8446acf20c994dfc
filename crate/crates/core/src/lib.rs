//! Exact elliptic-curve machinery for the Diophantine equations
//!
//! ```text
//! Σ a_i x_i^6 + Σ b_i y_i^3 = Σ a_i X_i^6 ± Σ b_i Y_i^3
//! ```
//!
//! A linear substitution in two rational unknowns `(u, v)` reduces the
//! equation to a quartic `v^2 = Q(u)`. When the constant term of `Q` is a
//! rational square the quartic is birational to a Weierstrass cubic, whose
//! group law produces new rational points. Mapping those back and clearing
//! denominators gives integer identities, each re-verified exactly.
//!
//! ```
//! use sixcube_core::prelude::*;
//!
//! let fam = EquationFamily::from_i64(&[1], &[1], Sign::Plus).unwrap();
//! let par = Parameterization::new(&fam, vec![int(1)], vec![int(1)], vec![int(1)], int(2)).unwrap();
//! let ctx = to_weierstrass(&build_quartic(&fam, &par).unwrap()).unwrap();
//! let p = ctx.curve().point(int(-48), int(80)).unwrap();
//! let first = generate(&fam, &par, &ctx, &[p], GenerateOptions::default())
//!     .unwrap()
//!     .next()
//!     .unwrap()
//!     .unwrap();
//! assert_eq!(first.identity.to_string(), "1*1^6 + 1*12^3 = 1*3^6 + 1*10^3");
//! ```

pub mod arith;
pub mod error;
mod group;
pub mod model;
pub mod oracle;
pub mod pipeline;
pub mod quartic;
pub mod transform;

pub use arith::Rational;
pub use error::{Error, Result, SkipReason};

pub mod prelude {
    pub use crate::arith::{int, parse_rational, rat, rational_sqrt, Rational};
    pub use crate::error::{Error, Result, SkipReason};
    pub use crate::model::{
        residual, scale_solution, substitute, EquationFamily, IntegerSolution, Parameterization, RationalSolution,
        Sign, SolutionTuple,
    };
    pub use crate::oracle::brute_force;
    pub use crate::pipeline::{
        canonical_form, clear_denominators, display_identity, generate, is_trivial, point_search, point_to_solution,
        reduce_primitive, Emission, GenerateOptions, Identity, PointLabel, SearchHit,
    };
    pub use crate::quartic::{build_quartic, search_h, QuarticModel};
    pub use crate::transform::{to_weierstrass, CurvePoint, TransformContext, WeierstrassCurve};
}
