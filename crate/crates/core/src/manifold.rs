//! Canonical forms for the manifolds that appear as ambient spaces:
//! S3, S2xS1, RP3, lens spaces, Seifert spaces over S2, and connected sums.

use std::cmp::Ordering;

use num_rational::BigRational;

use crate::arith::{coprime, mod_inverse};
use crate::error::{Error, Result};
use crate::seifert::{self, euler_number, seifert_normalize, SeifertData};

/// Gluing data `(p, q)` of a lens space `L(p,q)`, not necessarily canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensParams {
    p: i64,
    q: i64,
}

impl LensParams {
    /// Fails with [`Error::Overflow`] for `p = i64::MIN`, whose absolute
    /// value is not an `i64`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == i64::MIN {
            return Err(Error::Overflow);
        }
        let ok = if p == 0 { q == 1 || q == -1 } else { coprime(p, q) };
        if ok {
            Ok(LensParams { p, q })
        } else {
            Err(Error::InvalidLensParameters { p, q })
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn canonical(&self) -> CanonicalManifold {
        canonical_from_params(*self)
    }
}

/// A lens space in canonical form: `p >= 3`, `0 < q <= p - q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn params(&self) -> LensParams {
        LensParams { p: self.p, q: self.q }
    }
}

/// Normalized Seifert data with at least one fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertSpace(SeifertData);

impl SeifertSpace {
    pub fn data(&self) -> &SeifertData {
        &self.0
    }
}

/// Two or more prime summands, sorted, none of them a sphere or a sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectedSum(Vec<CanonicalManifold>);

impl ConnectedSum {
    pub fn summands(&self) -> &[CanonicalManifold] {
        &self.0
    }
}

/// A closed orientable 3-manifold held in canonical form.
///
/// Values are only built through [`lens_canonical`], [`sum_normalize`],
/// [`CanonicalManifold::seifert`] or the parser, so equal manifolds in the
/// same presentation compare equal with `==`. Cross-presentation questions
/// (a two-fiber Seifert space versus a lens space) go through [`homeomorphic`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CanonicalManifold {
    Sphere,
    S2xS1,
    RP3,
    Lens(LensSpace),
    SeifertOverS2(SeifertSpace),
    ConnectedSum(ConnectedSum),
}

impl CanonicalManifold {
    /// Seifert space over S2 from arbitrary valid data. The fibration with
    /// no fibers left after normalization is S2xS1.
    pub fn seifert(data: &SeifertData) -> Result<Self> {
        let normal = seifert_normalize(data)?;
        if normal.fibers().is_empty() {
            Ok(CanonicalManifold::S2xS1)
        } else {
            Ok(CanonicalManifold::SeifertOverS2(SeifertSpace(normal)))
        }
    }

    pub fn connected_sum<I: IntoIterator<Item = CanonicalManifold>>(summands: I) -> Self {
        sum_normalize(summands)
    }

    pub fn as_lens(&self) -> Option<LensSpace> {
        match self {
            CanonicalManifold::Lens(l) => Some(*l),
            _ => None,
        }
    }

    /// Prime summands: empty for the sphere, `[self]` for a prime manifold.
    pub fn summands(&self) -> &[CanonicalManifold] {
        match self {
            CanonicalManifold::Sphere => &[],
            CanonicalManifold::ConnectedSum(sum) => sum.summands(),
            other => std::slice::from_ref(other),
        }
    }

    /// Re-derives the canonical form from scratch. Identity on every value
    /// this crate constructs.
    pub fn canonicalize(&self) -> Result<Self> {
        Ok(match self {
            CanonicalManifold::Lens(l) => lens_canonical(l.p, l.q)?,
            CanonicalManifold::SeifertOverS2(s) => CanonicalManifold::seifert(s.data())?,
            CanonicalManifold::ConnectedSum(sum) => sum_normalize(
                sum.summands()
                    .iter()
                    .map(|m| m.canonicalize())
                    .collect::<Result<Vec<_>>>()?,
            ),
            atom => atom.clone(),
        })
    }

    fn rank(&self) -> u8 {
        match self {
            CanonicalManifold::Sphere => 0,
            CanonicalManifold::S2xS1 => 1,
            CanonicalManifold::Lens(_) => 2,
            CanonicalManifold::SeifertOverS2(_) => 3,
            CanonicalManifold::RP3 => 4,
            CanonicalManifold::ConnectedSum(_) => 5,
        }
    }
}

// RP3 sorts after the other atoms so that sums read `L(p,q) # RP3` and
// `S2xS1 # RP3`, the way the classification states them.
impl Ord for CanonicalManifold {
    fn cmp(&self, other: &Self) -> Ordering {
        use CanonicalManifold::*;
        match (self, other) {
            (Lens(a), Lens(b)) => a.cmp(b),
            (SeifertOverS2(a), SeifertOverS2(b)) => a.cmp(b),
            (ConnectedSum(a), ConnectedSum(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for CanonicalManifold {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn canonical_from_params(l: LensParams) -> CanonicalManifold {
    let p = l.p.unsigned_abs();
    match p {
        0 => CanonicalManifold::S2xS1,
        1 => CanonicalManifold::Sphere,
        2 => CanonicalManifold::RP3,
        _ => {
            let p = p as i128;
            let r = (l.q as i128).rem_euclid(p);
            let q = r.min(p - r);
            CanonicalManifold::Lens(LensSpace {
                p: p as i64,
                q: q as i64,
            })
        }
    }
}

/// Canonical representative of `L(p,q)` under `p ~ ±p`, `q ~ ±q (mod |p|)`.
pub fn lens_canonical(p: i64, q: i64) -> Result<CanonicalManifold> {
    Ok(canonical_from_params(LensParams::new(p, q)?))
}

/// `p_a = ±p_b` and `q_a ≡ ±q_b (mod |p_a|)`; for `p = 0` the congruence is
/// exact equality.
pub fn lens_equivalent(a: &LensParams, b: &LensParams) -> bool {
    if a.p.unsigned_abs() != b.p.unsigned_abs() {
        return false;
    }
    let m = a.p.unsigned_abs() as i128;
    let (qa, qb) = (a.q as i128, b.q as i128);
    if m == 0 {
        return qa == qb || qa == -qb;
    }
    (qa - qb).rem_euclid(m) == 0 || (qa + qb).rem_euclid(m) == 0
}

/// [`lens_equivalent`] widened by `q·q' ≡ ±1 (mod |p|)`, the classical
/// homeomorphism criterion that also allows swapping the two solid tori.
pub fn lens_homeomorphic_unoriented(a: &LensParams, b: &LensParams) -> bool {
    if lens_equivalent(a, b) {
        return true;
    }
    if a.p.unsigned_abs() != b.p.unsigned_abs() || a.p == 0 {
        return false;
    }
    let m = a.p.unsigned_abs() as i128;
    let prod = (a.q as i128 * b.q as i128).rem_euclid(m);
    prod == 1 % m || prod == m - 1
}

/// Flattens nested sums, drops sphere summands and sorts what is left.
pub fn sum_normalize<I: IntoIterator<Item = CanonicalManifold>>(summands: I) -> CanonicalManifold {
    let mut flat = Vec::new();
    for m in summands {
        match m {
            CanonicalManifold::Sphere => {}
            CanonicalManifold::ConnectedSum(sum) => flat.extend(sum.0),
            atom => flat.push(atom),
        }
    }
    flat.sort();
    match flat.len() {
        0 => CanonicalManifold::Sphere,
        1 => flat.pop().unwrap(),
        _ => CanonicalManifold::ConnectedSum(ConnectedSum(flat)),
    }
}

/// Which lens-space relation [`homeomorphism_key_with`] identifies by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LensRelation {
    /// `q ≡ ±q' (mod p)`.
    #[default]
    Oriented,
    /// Additionally `q·q' ≡ ±1 (mod p)`.
    Unoriented,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum PrimeKey {
    S2xS1,
    Lens(i64, i64),
    /// Exceptional fibers as `(α, min(β mod α, -β mod α))`, sorted, plus the
    /// Euler number.
    Seifert(Vec<(i64, i64)>, BigRational),
}

/// A complete invariant for [`homeomorphic`]: two manifolds are homeomorphic
/// exactly when their keys are equal. Ordered, so it can group values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomeoKey(Vec<PrimeKey>);

pub fn homeomorphism_key(m: &CanonicalManifold) -> HomeoKey {
    homeomorphism_key_with(m, LensRelation::Oriented)
}

pub fn homeomorphism_key_with(m: &CanonicalManifold, rel: LensRelation) -> HomeoKey {
    let mut keys = Vec::new();
    push_keys(m, rel, &mut keys);
    keys.sort();
    HomeoKey(keys)
}

fn lens_key(p: i64, q: i64, rel: LensRelation) -> PrimeKey {
    let r = q.rem_euclid(p);
    let mut best = r.min(p - r);
    if rel == LensRelation::Unoriented {
        if let Some(inv) = mod_inverse(q, p) {
            best = best.min(inv.min(p - inv));
        }
    }
    PrimeKey::Lens(p, best)
}

fn push_keys(m: &CanonicalManifold, rel: LensRelation, out: &mut Vec<PrimeKey>) {
    match m {
        CanonicalManifold::Sphere => {}
        CanonicalManifold::S2xS1 => out.push(PrimeKey::S2xS1),
        CanonicalManifold::RP3 => out.push(PrimeKey::Lens(2, 1)),
        CanonicalManifold::Lens(l) => out.push(lens_key(l.p, l.q, rel)),
        CanonicalManifold::SeifertOverS2(s) => {
            let data = s.data();
            if data.exceptional_count() <= 2 {
                // A lens space (or S3, S2xS1); compare it as one.
                match seifert::seifert_to_lens(data) {
                    Ok(lens) => push_keys(&lens, rel, out),
                    Err(_) => out.push(seifert_key(data)),
                }
            } else {
                out.push(seifert_key(data));
            }
        }
        CanonicalManifold::ConnectedSum(sum) => {
            for s in sum.summands() {
                push_keys(s, rel, out);
            }
        }
    }
}

fn seifert_key(data: &SeifertData) -> PrimeKey {
    let mut residues: Vec<(i64, i64)> = data
        .exceptional()
        .map(|f| {
            let r = f.beta.rem_euclid(f.alpha);
            (f.alpha, r.min(f.alpha - r))
        })
        .collect();
    residues.sort();
    PrimeKey::Seifert(residues, euler_number(data))
}

/// Homeomorphism of canonical manifolds: lens spaces by [`lens_equivalent`],
/// Seifert spaces with three or more exceptional fibers by the fibration
/// isomorphism criterion, Seifert spaces with at most two exceptional fibers
/// converted to lens spaces first, and connected sums as multisets of
/// summands.
pub fn homeomorphic(a: &CanonicalManifold, b: &CanonicalManifold) -> bool {
    homeomorphism_key(a) == homeomorphism_key(b)
}

pub fn homeomorphic_with(a: &CanonicalManifold, b: &CanonicalManifold, rel: LensRelation) -> bool {
    homeomorphism_key_with(a, rel) == homeomorphism_key_with(b, rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lens(p: i64, q: i64) -> CanonicalManifold {
        lens_canonical(p, q).unwrap()
    }

    fn sfs(fibers: &[(i64, i64)]) -> CanonicalManifold {
        CanonicalManifold::seifert(&SeifertData::new(fibers.iter().copied()).unwrap()).unwrap()
    }

    /// Brute-force orbit of `(p, q)` under the relation generators.
    fn orbit(p: i64, q: i64) -> BTreeSet<(i64, i64)> {
        let m = p.abs();
        let mut out = BTreeSet::new();
        for sp in [1, -1] {
            for sq in [1, -1] {
                let r = if m == 0 { sq * q } else { (sq * q).rem_euclid(m) };
                out.insert((sp * p, r));
            }
        }
        out
    }

    #[test]
    fn extreme_parameters() {
        assert_eq!(lens_canonical(i64::MIN, 1), Err(Error::Overflow));
        let m = lens_canonical(i64::MAX, i64::MIN).unwrap();
        let l = m.as_lens().unwrap();
        assert_eq!(l.p(), i64::MAX);
        assert!(0 < l.q() && l.q() <= l.p() - l.q());
    }

    #[test]
    fn lens_canonical_examples() {
        assert_eq!(lens(1, 0), CanonicalManifold::Sphere);
        assert_eq!(lens(0, 1), CanonicalManifold::S2xS1);
        assert_eq!(lens(0, -1), CanonicalManifold::S2xS1);
        assert_eq!(lens(2, 3), CanonicalManifold::RP3);
        assert_eq!(lens(-7, 9), CanonicalManifold::Lens(LensSpace { p: 7, q: 2 }));
        assert_eq!(lens(7, 5), CanonicalManifold::Lens(LensSpace { p: 7, q: 2 }));
        // (-7, 9): orbit contains (7, 2) and (7, 5); min picks 2.
        assert!(orbit(-7, 9).contains(&(7, 2)));
    }

    #[test]
    fn lens_canonical_rejects_non_coprime() {
        assert_eq!(lens_canonical(6, 4), Err(Error::InvalidLensParameters { p: 6, q: 4 }));
        assert!(lens_canonical(0, 2).is_err());
        assert!(lens_canonical(0, 0).is_err());
        assert!(lens_canonical(5, 0).is_err());
    }

    #[test]
    fn lens_canonical_agrees_with_orbit_minimum() {
        for p in -50..=50i64 {
            for q in -50..=50i64 {
                let Ok(c) = lens_canonical(p, q) else { continue };
                let m = p.abs();
                let expected = match m {
                    0 => CanonicalManifold::S2xS1,
                    1 => CanonicalManifold::Sphere,
                    2 => CanonicalManifold::RP3,
                    _ => {
                        let q = orbit(p, q).iter().filter(|(pp, _)| *pp > 0).map(|x| x.1).min().unwrap();
                        CanonicalManifold::Lens(LensSpace { p: m, q })
                    }
                };
                assert_eq!(c, expected, "({p},{q})");
                assert_eq!(c.canonicalize().unwrap(), c);
                if let CanonicalManifold::Lens(l) = c {
                    assert!(l.p >= 3 && 0 < l.q && l.q <= l.p - l.q);
                }
            }
        }
    }

    #[test]
    fn lens_equivalent_examples() {
        let lp = |p, q| LensParams::new(p, q).unwrap();
        assert!(lens_equivalent(&lp(7, 2), &lp(7, 5)));
        assert!(!lens_equivalent(&lp(7, 2), &lp(7, 3)));
        assert!(lens_equivalent(&lp(5, 2), &lp(-5, 2)));
        assert!(lens_equivalent(&lp(0, 1), &lp(0, -1)));
        // 2·3 = 6 ≡ -1 (mod 7): only the unoriented relation identifies them.
        assert!(lens_homeomorphic_unoriented(&lp(7, 2), &lp(7, 3)));
        assert!(!lens_homeomorphic_unoriented(&lp(7, 1), &lp(7, 2)));
    }

    #[test]
    fn lens_equivalent_iff_same_canonical_form() {
        let mut all = Vec::new();
        for p in -30..=30i64 {
            for q in -30..=30i64 {
                if let Ok(l) = LensParams::new(p, q) {
                    all.push(l);
                }
            }
        }
        for a in &all {
            for b in &all {
                assert_eq!(lens_equivalent(a, b), a.canonical() == b.canonical(), "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn sum_normalize_examples() {
        use CanonicalManifold::*;
        assert_eq!(sum_normalize([Sphere, RP3]), RP3);
        let s = sum_normalize([lens(5, 2), RP3]);
        assert_eq!(s.summands(), &[lens(5, 2), RP3]);
        assert_eq!(sum_normalize([RP3, lens(1, 0)]), RP3);
        assert_eq!(sum_normalize([]), Sphere);
        assert_eq!(sum_normalize([RP3, lens(5, 2)]), s);
        // nested sums flatten
        let nested = sum_normalize([s.clone(), S2xS1]);
        assert_eq!(nested.summands(), &[S2xS1, lens(5, 2), RP3]);
        assert_eq!(sum_normalize([RP3, s.clone()]), sum_normalize([s, RP3]));
    }

    #[test]
    fn order_puts_rp3_last() {
        use CanonicalManifold::*;
        let mut v = vec![RP3, sfs(&[(2, 1), (3, 1), (5, 1)]), lens(5, 2), S2xS1, lens(4, 1)];
        v.sort();
        assert_eq!(
            v,
            vec![S2xS1, lens(4, 1), lens(5, 2), sfs(&[(2, 1), (3, 1), (5, 1)]), RP3]
        );
    }

    #[test]
    fn homeomorphic_examples() {
        use CanonicalManifold::*;
        assert!(homeomorphic(&lens(7, 2), &lens(7, 5)));
        assert!(!homeomorphic(&sfs(&[(2, 1), (3, 1), (5, 1)]), &lens(30, 7)));
        assert!(homeomorphic(&Sphere, &Sphere));
        // two-fiber Seifert space bridged to S3
        assert!(homeomorphic(&sfs(&[(2, 1), (3, 1)]), &Sphere));
        // one fiber (3,2) is L(2,3) = RP3
        assert!(homeomorphic(&sfs(&[(3, 2)]), &RP3));
        assert!(homeomorphic(
            &sum_normalize([lens(5, 2), RP3]),
            &sum_normalize([RP3, lens(5, 3)])
        ));
        assert!(!homeomorphic(&sum_normalize([lens(5, 2), RP3]), &lens(10, 3)));
        // the summand inside a sum is bridged too
        assert!(homeomorphic(
            &sum_normalize([sfs(&[(3, 2)]), lens(5, 2)]),
            &sum_normalize([RP3, lens(5, 2)])
        ));
        // Seifert spaces with three fibers: β ≡ ±β' per fiber with equal Euler number
        assert!(homeomorphic(
            &sfs(&[(2, 1), (3, 1), (5, 1)]),
            &sfs(&[(5, 1), (2, 1), (3, 1)])
        ));
        assert!(!homeomorphic(
            &sfs(&[(2, 1), (3, 1), (5, 1)]),
            &sfs(&[(2, 1), (3, 1), (5, 2)])
        ));
    }

    #[test]
    fn unoriented_relation_is_only_used_on_request() {
        let a = lens(7, 2);
        let b = lens(7, 3);
        assert!(!homeomorphic(&a, &b));
        assert!(homeomorphic_with(&a, &b, LensRelation::Unoriented));
    }
}
