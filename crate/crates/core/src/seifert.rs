//! Seifert fibered spaces over S2, written `M(S2, (α1,β1), ..., (αr,βr))`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arith::{self, coprime, mod_inverse, narrow};
use crate::error::{Error, Result};
use crate::manifold::{lens_canonical, CanonicalManifold};

/// One fiber `(α, β)`: multiplicity `α >= 1` and Seifert invariant `β`.
/// Fibers with `α = 1` are ordinary and only contribute to the Euler number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber {
    pub alpha: i64,
    pub beta: i64,
}

impl Fiber {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 || (alpha >= 2 && !coprime(alpha, beta)) {
            return Err(Error::InvalidFiber { alpha, beta });
        }
        Ok(Fiber { alpha, beta })
    }

    pub fn is_exceptional(&self) -> bool {
        self.alpha >= 2
    }
}

/// Orbital invariants `(α, ν)` of a fibered solid torus: ordinary fibers
/// wind `α` times along the core and `ν` times around the meridian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitalInvariants {
    pub alpha: i64,
    pub nu: i64,
}

impl OrbitalInvariants {
    pub fn new(alpha: i64, nu: i64) -> Result<Self> {
        if alpha < 1 || !coprime(alpha, nu) {
            return Err(Error::InvalidFiber { alpha, beta: nu });
        }
        Ok(OrbitalInvariants { alpha, nu })
    }

    /// The fiber with `ν·β ≡ 1 (mod α)`, `β` taken in `[0, α)`.
    pub fn fiber(&self) -> Fiber {
        let beta = mod_inverse(self.nu, self.alpha).expect("ν is a unit mod α");
        Fiber {
            alpha: self.alpha,
            beta,
        }
    }

    /// Orbital invariants of a fiber, `ν` taken in `[0, α)`.
    pub fn of_fiber(f: &Fiber) -> Self {
        let nu = mod_inverse(f.beta, f.alpha).expect("β is a unit mod α");
        OrbitalInvariants { alpha: f.alpha, nu }
    }

    /// Solid-torus fibrations are isomorphic iff `α` agrees and `ν ≡ ν' (mod α)`.
    pub fn isomorphic(&self, other: &Self) -> bool {
        self.alpha == other.alpha && (self.nu - other.nu).rem_euclid(self.alpha) == 0
    }
}

/// A fiber list over the base S2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SeifertData {
    fibers: Vec<Fiber>,
}

impl SeifertData {
    pub fn new<I: IntoIterator<Item = (i64, i64)>>(fibers: I) -> Result<Self> {
        let fibers = fibers
            .into_iter()
            .map(|(a, b)| Fiber::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SeifertData { fibers })
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Fiber> + '_ {
        self.fibers.iter().filter(|f| f.is_exceptional())
    }

    pub fn exceptional_count(&self) -> usize {
        self.exceptional().count()
    }

    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.fibers.iter().map(|f| (f.alpha, f.beta)).collect()
    }

    pub fn is_normalized(&self) -> bool {
        let ordinary = self.fibers.iter().filter(|f| f.alpha == 1).count();
        ordinary <= 1
            && self
                .fibers
                .iter()
                .all(|f| f.alpha == 1 && f.beta != 0 || 0 < f.beta && f.beta < f.alpha)
            && self.fibers.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Reduces every exceptional `β` into `(0, α)` and collects the shifts,
/// together with all ordinary fibers, into a single `(1, b)` term. The Euler
/// number is unchanged.
pub fn seifert_normalize(s: &SeifertData) -> Result<SeifertData> {
    let mut b: i64 = 0;
    let mut out = Vec::with_capacity(s.fibers.len() + 1);
    for f in &s.fibers {
        if f.alpha == 1 {
            b = arith::checked(b.checked_add(f.beta))?;
        } else {
            let r = f.beta.rem_euclid(f.alpha);
            let k = (f.beta as i128 - r as i128) / f.alpha as i128;
            b = arith::checked(b.checked_add(narrow(k)?))?;
            out.push(Fiber {
                alpha: f.alpha,
                beta: r,
            });
        }
    }
    if b != 0 {
        out.push(Fiber { alpha: 1, beta: b });
    }
    out.sort();
    Ok(SeifertData { fibers: out })
}

/// `Σ β_i / α_i` over all fibers, exactly.
pub fn euler_number(s: &SeifertData) -> BigRational {
    s.fibers.iter().fold(BigRational::zero(), |acc, f| {
        acc + BigRational::new(BigInt::from(f.beta), BigInt::from(f.alpha))
    })
}

/// Fiber-orientation-preserving isomorphism over S2: the exceptional fibers
/// match up with equal `α` and `β' ≡ ±β (mod α)`, and the Euler numbers agree.
pub fn seifert_isomorphic(a: &SeifertData, b: &SeifertData) -> bool {
    let xs: Vec<Fiber> = a.exceptional().copied().collect();
    let ys: Vec<Fiber> = b.exceptional().copied().collect();
    if xs.len() != ys.len() || euler_number(a) != euler_number(b) {
        return false;
    }
    let mut used = vec![false; ys.len()];
    match_fibers(&xs, &ys, &mut used)
}

fn residues_match(x: &Fiber, y: &Fiber) -> bool {
    let a = x.alpha as i128;
    x.alpha == y.alpha
        && ((x.beta as i128 - y.beta as i128).rem_euclid(a) == 0
            || (x.beta as i128 + y.beta as i128).rem_euclid(a) == 0)
}

fn match_fibers(xs: &[Fiber], ys: &[Fiber], used: &mut [bool]) -> bool {
    let Some((x, rest)) = xs.split_first() else {
        return true;
    };
    for j in 0..ys.len() {
        if !used[j] && residues_match(x, &ys[j]) {
            used[j] = true;
            if match_fibers(rest, ys, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}

/// Lens space carried by a Seifert fibration with at most two exceptional
/// fibers.
///
/// The data is normalized first and the `(1, b)` term folded into the first
/// exceptional fiber as `β1 + b·α1`. Then
/// - no exceptional fiber: `(1, b)` alone is `L(b, 1)`, so S2xS1 when `b = 0`;
/// - `(α, β)`: `L(β, α)`;
/// - `(α1,β1), (α2,β2)`: `L(p, q)` with `p = β1·α2 − α1·β2`,
///   `q = β1·ν2 + α1·ξ2`, where `α2·ξ2 + ν2·β2 = 1` and `ν2 ∈ (0, α2)`.
pub fn seifert_to_lens(s: &SeifertData) -> Result<CanonicalManifold> {
    let normal = seifert_normalize(s)?;
    let b: i64 = normal.fibers.iter().filter(|f| f.alpha == 1).map(|f| f.beta).sum();
    let mut exc: Vec<Fiber> = normal.exceptional().copied().collect();
    if exc.len() > 2 {
        return Err(Error::NotALens { exceptional: exc.len() });
    }
    if exc.is_empty() {
        return lens_canonical(b, 1);
    }
    let first = exc[0];
    exc[0].beta = narrow(first.beta as i128 + b as i128 * first.alpha as i128)?;
    if let [f] = exc[..] {
        return lens_canonical(f.beta, f.alpha);
    }
    let (a1, b1) = (exc[0].alpha as i128, exc[0].beta as i128);
    let (a2, b2) = (exc[1].alpha, exc[1].beta);
    let nu2 = mod_inverse(b2, a2).expect("exceptional fibers are coprime") as i128;
    let xi2 = (1 - nu2 * b2 as i128) / a2 as i128;
    let p = b1 * a2 as i128 - a1 * b2 as i128;
    let q = b1 * nu2 + a1 * xi2;
    lens_canonical(narrow(p)?, narrow(q)?)
}

/// Three or more exceptional fibers over S2: never a lens space.
pub fn not_lens_obstruction(s: &SeifertData) -> bool {
    s.exceptional_count() >= 3
}

/// The two readings of the one non-prime Seifert space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeException {
    /// `(2,1)` four times, Euler number 2.
    Literal,
    /// `(2,1),(2,1),(2,-1),(2,-1)`, Euler number 0.
    EulerZero,
}

/// Matches a Seifert space against the non-prime exception
/// `M(S2, (2,1),(2,1),(2,1),(2,1)) ≅ RP3 # RP3`. Which Euler number the
/// exception carries depends on the sign convention, so both readings are
/// recognised.
pub fn prime_exception(s: &SeifertData) -> Option<PrimeException> {
    if s.exceptional_count() != 4 || s.exceptional().any(|f| f.alpha != 2) {
        return None;
    }
    let e = euler_number(s);
    if e == BigRational::from_integer(2.into()) {
        Some(PrimeException::Literal)
    } else if e.is_zero() {
        Some(PrimeException::EulerZero)
    } else {
        None
    }
}

pub fn is_prime(m: &CanonicalManifold) -> bool {
    match m {
        CanonicalManifold::SeifertOverS2(s) => prime_exception(s.data()).is_none(),
        CanonicalManifold::ConnectedSum(_) => false,
        _ => true,
    }
}
