//! Dehn-surgery coefficient algebra.
//!
//! Surgery along an equipped knot is determined by the coprime coefficients
//! `(β, α)` in the bottom row of the gluing matrix
//!
//! ```text
//! h* = | ξ  -ν |   ξα + νβ = 1
//!      | β   α |
//! ```
//!
//! Nothing here builds triangulations or gluing maps; every result is read off
//! the coefficients.

use crate::arith::{coprime, mod_inverse, narrow};
use crate::error::{Error, Result};
use crate::manifold::{lens_canonical, sum_normalize, CanonicalManifold};

/// Surgery coefficients `(β, α)` of an equipped knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Framing {
    beta: i64,
    alpha: i64,
}

impl Framing {
    pub fn new(beta: i64, alpha: i64) -> Result<Self> {
        if coprime(beta, alpha) {
            Ok(Framing { beta, alpha })
        } else {
            Err(Error::InvalidFraming { beta, alpha })
        }
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    /// Completes the framing to its gluing matrix. `ξ` is the least
    /// nonnegative residue of `α⁻¹ (mod β)`; for `β = 0`, `ξ = α = ±1`.
    pub fn gluing_matrix(&self) -> GluingMatrix {
        let (beta, alpha) = (self.beta, self.alpha);
        let (xi, nu) = if beta == 0 {
            (alpha, 0)
        } else {
            let xi = mod_inverse(alpha, beta).expect("framing is coprime");
            let nu = (1 - xi as i128 * alpha as i128) / beta as i128;
            (xi, nu as i64)
        };
        GluingMatrix {
            rows: [[xi, -nu], [beta, alpha]],
        }
    }
}

/// A 2x2 integer matrix of determinant 1, rows `(ξ, -ν)` and `(β, α)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    rows: [[i64; 2]; 2],
}

impl GluingMatrix {
    pub fn rows(&self) -> [[i64; 2]; 2] {
        self.rows
    }

    pub fn det(&self) -> i128 {
        let [[a, b], [c, d]] = self.rows;
        a as i128 * d as i128 - b as i128 * c as i128
    }

    pub fn framing(&self) -> Framing {
        Framing {
            beta: self.rows[1][0],
            alpha: self.rows[1][1],
        }
    }

    pub fn xi(&self) -> i64 {
        self.rows[0][0]
    }

    pub fn nu(&self) -> i64 {
        -self.rows[0][1]
    }
}

/// `β = β'` and `α ≡ α' (mod β)`. Modulo 0 that is equality; modulo ±1 any
/// `α` agree.
pub fn framing_equivalent(a: &Framing, b: &Framing) -> bool {
    if a.beta != b.beta {
        return false;
    }
    if a.beta == 0 {
        return a.alpha == b.alpha;
    }
    (a.alpha as i128 - b.alpha as i128).rem_euclid(a.beta.unsigned_abs() as i128) == 0
}

/// Coefficients `(-β, ξ)` of the core of the reglued solid torus, which
/// recover the original manifold by a second surgery.
pub fn invert_framing(f: &Framing) -> Framing {
    let xi = f.gluing_matrix().xi();
    Framing {
        beta: -f.beta,
        alpha: xi,
    }
}

/// Completes `(a, c)` to a matrix with first row `(a, c)` and determinant 1.
/// The bottom-right entry is taken in `[0, |c|)` when `c != 0`.
pub fn complete_to_sl2(a: i64, c: i64) -> Result<GluingMatrix> {
    if !coprime(a, c) {
        return Err(Error::NotCoprime { a, c });
    }
    // a·α − c·β = 1
    let (beta, alpha) = if c == 0 {
        (0, a)
    } else {
        let alpha = mod_inverse(a, c).expect("coprime");
        let beta = (a as i128 * alpha as i128 - 1) / c as i128;
        (narrow(beta)?, alpha)
    };
    Ok(GluingMatrix {
        rows: [[a, c], [beta, alpha]],
    })
}

/// Surgery along the saddle orbit. The longitude goes to `(2, 1)`, and
/// completing to determinant 1 (`2α − β = 1`) gives coefficients `(-1, 0)`.
pub fn saddle_framing() -> (GluingMatrix, Framing) {
    let m = complete_to_sl2(2, 1).expect("(2,1) is coprime");
    (m, m.framing())
}

/// Surgery on S3 along the meridian of the first solid torus with framing
/// `(q, p)` yields `L(p, q)`. Arguments are in framing order.
pub fn meridian_surgery(q: i64, p: i64) -> Result<CanonicalManifold> {
    lens_canonical(p, q)
}

/// Surgery along a trivial link with framings `(q_i, p_i)`: the base summed
/// with `L(p_i, q_i)` for every component.
pub fn trivial_link_surgery(base: &CanonicalManifold, framings: &[(i64, i64)]) -> Result<CanonicalManifold> {
    let mut parts = vec![base.clone()];
    for &(q, p) in framings {
        parts.push(lens_canonical(p, q)?);
    }
    Ok(sum_normalize(parts))
}
