//! Small exact-integer helpers shared by the lens, Seifert and surgery code.

use num_integer::Integer;

use crate::error::{Error, Result};

/// `gcd(|a|, |b|)`, unsigned so that `i64::MIN` is representable.
pub fn gcd(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}

pub fn coprime(a: i64, b: i64) -> bool {
    gcd(a, b) == 1
}

/// Inverse of `a` modulo `m` as the least nonnegative residue; `None` when
/// `a` is not a unit. Modulo 1 everything is the unit and the answer is 0.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let m = m.checked_abs()?;
    if m == 0 {
        return None;
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

pub(crate) fn checked(v: Option<i64>) -> Result<i64> {
    v.ok_or(Error::Overflow)
}

pub(crate) fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}
