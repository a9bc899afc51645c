//! Ambient manifolds of NMS flows with a single, twisted, saddle orbit.
//!
//! Such a flow has exactly three periodic orbits (saddle, attractor,
//! repeller) and is summarized by a quadruple `(l1, m1, l2, m2)`: the
//! homotopy types of the saddle separatrix traces on the boundary tori of
//! the repeller and attractor neighbourhoods, or the marker `(0, 2, l2, m2)`
//! when those traces are inessential. The ambient manifold falls into one of
//! seven cases determined by `l1` and `l2`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{coprime, mod_inverse, narrow};
use crate::error::{Error, QuadrupleRule, Result};
use crate::manifold::{homeomorphism_key, lens_canonical, sum_normalize, CanonicalManifold, HomeoKey, LensParams};
use crate::seifert::SeifertData;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    Essential,
    Inessential,
}

impl InvariantKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InvariantKind::Essential => "essential",
            InvariantKind::Inessential => "inessential",
        }
    }
}

/// A validated flow invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlowInvariant {
    l1: i64,
    m1: i64,
    l2: i64,
    m2: i64,
    kind: InvariantKind,
}

impl FlowInvariant {
    pub fn l1(&self) -> i64 {
        self.l1
    }
    pub fn m1(&self) -> i64 {
        self.m1
    }
    pub fn l2(&self) -> i64 {
        self.l2
    }
    pub fn m2(&self) -> i64 {
        self.m2
    }
    pub fn kind(&self) -> InvariantKind {
        self.kind
    }
    pub fn quadruple(&self) -> [i64; 4] {
        [self.l1, self.m1, self.l2, self.m2]
    }
}

/// Essential: both pairs coprime. Inessential: `(l1, m1) = (0, 2)` and
/// `(l2, m2)` coprime. Nothing else is a flow invariant.
pub fn validate_invariant(l1: i64, m1: i64, l2: i64, m2: i64) -> Result<FlowInvariant> {
    let reject = |rule| Error::InvalidQuadruple { l1, m1, l2, m2, rule };
    let kind = if (l1, m1) == (0, 2) {
        InvariantKind::Inessential
    } else if coprime(l1, m1) {
        InvariantKind::Essential
    } else {
        return Err(reject(QuadrupleRule::FirstPairNotCoprime));
    };
    if !coprime(l2, m2) {
        return Err(reject(QuadrupleRule::SecondPairNotCoprime));
    }
    Ok(FlowInvariant { l1, m1, l2, m2, kind })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    /// The quadruple, signs included.
    pub invariant: FlowInvariant,
    /// 1 through 7.
    pub case_number: u8,
    pub manifold: CanonicalManifold,
    /// `(2,1), (|l1|,β1), (|l2|,β2)`, present iff `l1·l2 != 0`.
    pub intermediate: Option<SeifertData>,
    /// The lens summand `L(a, b)` before it is summed with RP3 (cases 1–3).
    pub lens_before_rp3_sum: Option<LensParams>,
}

/// A case condition on `(l1, l2)`.
pub type CasePredicate = fn(i64, i64) -> bool;

/// The seven case conditions, in order. Exactly one holds for every
/// quadruple.
pub const CASE_PREDICATES: [(u8, CasePredicate); 7] = [
    (1, |l1, l2| l1 == 0 && l2 != 0),
    (2, |l1, l2| l1 != 0 && l2 == 0),
    (3, |l1, l2| l1 == 0 && l2 == 0),
    (4, |l1, l2| l1.unsigned_abs() == 1 && l2.unsigned_abs() > 1),
    (5, |l1, l2| l2.unsigned_abs() == 1 && l1.unsigned_abs() > 1),
    (6, |l1, l2| (l1 as i128 * l2 as i128).unsigned_abs() == 1),
    (7, |l1, l2| l1.unsigned_abs() > 1 && l2.unsigned_abs() > 1),
];

pub fn case_number(c: &FlowInvariant) -> u8 {
    match (c.l1.unsigned_abs(), c.l2.unsigned_abs()) {
        (0, 0) => 3,
        (0, _) => 1,
        (_, 0) => 2,
        (1, 1) => 6,
        (1, _) => 4,
        (_, 1) => 5,
        _ => 7,
    }
}

/// `β ≡ m⁻¹ (mod |l|)` in `(0, |l|)`, or 0 when `|l| = 1`.
fn seifert_beta(l: i64, m: i64) -> i64 {
    mod_inverse(m, l).expect("(l, m) is coprime")
}

/// The fibration `M(S2, (2,1), (|l1|,β1), (|l2|,β2))` with `β_i·m_i ≡ 1
/// (mod |l_i|)`, before ordinary fibers are absorbed.
pub fn intermediate_seifert(c: &FlowInvariant) -> Result<SeifertData> {
    if c.l1 == 0 || c.l2 == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let a1 = c.l1.checked_abs().ok_or(Error::Overflow)?;
    let a2 = c.l2.checked_abs().ok_or(Error::Overflow)?;
    SeifertData::new([(2, 1), (a1, seifert_beta(c.l1, c.m1)), (a2, seifert_beta(c.l2, c.m2))])
}

/// `L(2m − l, m)`, the lens space of cases 4 and 5.
fn twisted_lens(l: i64, m: i64) -> Result<CanonicalManifold> {
    let p = narrow(2 * m as i128 - l as i128)?;
    lens_canonical(p, m)
}

pub fn classify(c: &FlowInvariant) -> Result<ClassificationResult> {
    let case = case_number(c);
    let with_rp3 = |p: i64, q: i64| -> Result<(CanonicalManifold, Option<LensParams>)> {
        let params = LensParams::new(p, q)?;
        Ok((
            sum_normalize([params.canonical(), CanonicalManifold::RP3]),
            Some(params),
        ))
    };
    let (manifold, lens_before_rp3_sum) = match case {
        1 => with_rp3(c.l2, c.m2)?,
        2 => with_rp3(c.l1, c.m1)?,
        3 => with_rp3(0, 1)?,
        4 => (twisted_lens(c.l2, c.m2)?, None),
        5 => (twisted_lens(c.l1, c.m1)?, None),
        6 => (CanonicalManifold::Sphere, None),
        _ => (CanonicalManifold::seifert(&intermediate_seifert(c)?)?, None),
    };
    let intermediate = if case >= 4 {
        Some(intermediate_seifert(c)?)
    } else {
        None
    };
    Ok(ClassificationResult {
        invariant: *c,
        case_number: case,
        manifold,
        intermediate,
        lens_before_rp3_sum,
    })
}

/// All valid quadruples with every entry in `[-bound, bound]`, in
/// lexicographic order.
pub fn valid_invariants(bound: i64) -> Vec<FlowInvariant> {
    let r = -bound..=bound;
    let mut out = Vec::new();
    for l1 in r.clone() {
        for m1 in r.clone() {
            for l2 in r.clone() {
                for m2 in r.clone() {
                    if let Ok(c) = validate_invariant(l1, m1, l2, m2) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Classifies many invariants in parallel, keeping input order.
pub fn classify_all(invariants: &[FlowInvariant]) -> Result<Vec<ClassificationResult>> {
    invariants.par_iter().map(classify).collect()
}

/// One homeomorphism class of classifier outputs.
#[derive(Debug, Clone)]
pub struct HomeoClass {
    /// Least canonical manifold in the class.
    pub representative: CanonicalManifold,
    pub members: Vec<ClassificationResult>,
}

/// Every valid quadruple with entries bounded by `bound`, classified and
/// grouped into homeomorphism classes. Classes are ordered by their key and
/// members keep quadruple order.
pub fn enumerate(bound: i64) -> Result<Vec<HomeoClass>> {
    let results = classify_all(&valid_invariants(bound))?;
    let keyed: Vec<HomeoKey> = results.par_iter().map(|r| homeomorphism_key(&r.manifold)).collect();
    let mut groups: BTreeMap<HomeoKey, Vec<ClassificationResult>> = BTreeMap::new();
    for (key, r) in keyed.into_iter().zip(results) {
        groups.entry(key).or_default().push(r);
    }
    Ok(groups
        .into_values()
        .map(|members| HomeoClass {
            representative: members.iter().map(|r| &r.manifold).min().expect("nonempty").clone(),
            members,
        })
        .collect())
}
