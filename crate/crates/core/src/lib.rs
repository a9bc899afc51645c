//! Ambient 3-manifolds of non-singular Morse–Smale flows with a single
//! twisted saddle orbit, together with the lens, Seifert, surgery and
//! homology machinery needed to name and compare them.

pub mod arith;
pub mod classify;
pub mod error;
pub mod expr;
pub mod homology;
pub mod manifold;
pub mod report;
pub mod seifert;
pub mod selfcheck;
pub mod surgery;

pub use classify::{
    classify, enumerate, validate_invariant, ClassificationResult, FlowInvariant, HomeoClass, InvariantKind,
};
pub use error::{Error, QuadrupleRule, Result};
pub use expr::parse_manifold;
pub use homology::{h1, smith_normal_form, AbelianGroup, IntMatrix};
pub use manifold::{
    homeomorphic, homeomorphic_with, lens_canonical, lens_equivalent, sum_normalize, CanonicalManifold, LensParams,
    LensRelation,
};
pub use seifert::{euler_number, is_prime, seifert_isomorphic, seifert_normalize, seifert_to_lens, Fiber, SeifertData};
pub use surgery::{complete_to_sl2, invert_framing, Framing, GluingMatrix};
