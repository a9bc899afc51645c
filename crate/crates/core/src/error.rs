use thiserror::Error;

/// Which rule of the flow-invariant definition a quadruple broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadrupleRule {
    /// `(l1, m1)` is neither a coprime pair nor the inessential marker `(0, 2)`.
    FirstPairNotCoprime,
    /// `(l2, m2)` is not a coprime pair.
    SecondPairNotCoprime,
}

impl std::fmt::Display for QuadrupleRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            QuadrupleRule::FirstPairNotCoprime => {
                f.write_str("(l1,m1) must be coprime or the inessential marker (0,2)")
            }
            QuadrupleRule::SecondPairNotCoprime => f.write_str("(l2,m2) must be coprime"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid lens parameters ({p},{q}): need gcd(|p|,q) = 1, or p = 0 with q = ±1")]
    InvalidLensParameters { p: i64, q: i64 },

    #[error("invalid fiber ({alpha},{beta}): multiplicity must be positive and exceptional fibers coprime")]
    InvalidFiber { alpha: i64, beta: i64 },

    #[error("invalid framing ({beta},{alpha}): surgery coefficients must be coprime")]
    InvalidFraming { beta: i64, alpha: i64 },

    #[error("({a},{c}) is not a coprime pair")]
    NotCoprime { a: i64, c: i64 },

    #[error("invalid flow invariant ({l1},{m1},{l2},{m2}): {rule}")]
    InvalidQuadruple {
        l1: i64,
        m1: i64,
        l2: i64,
        m2: i64,
        rule: QuadrupleRule,
    },

    #[error("Seifert space with {exceptional} exceptional fibers over S2 is not a lens space")]
    NotALens { exceptional: usize },

    #[error("intermediate Seifert data needs l1*l2 != 0")]
    ZeroMultiplicity,

    #[error("integer overflow")]
    Overflow,

    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
