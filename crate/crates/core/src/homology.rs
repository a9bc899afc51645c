//! First homology by Smith normal form.
//!
//! A presentation is an integer matrix whose rows are relations among the
//! column generators; H1 is its cokernel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::manifold::CanonicalManifold;
use crate::seifert::SeifertData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = IntMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.iter().enumerate() {
                m.entries[i * cols + j] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = IntMatrix::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, BigInt::from(*v));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn block_diagonal(blocks: &[IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = IntMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= k * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let d = self.get(src, j) * k;
            self.entries[dst * self.cols + j] -= d;
        }
    }

    /// col[dst] -= k * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let d = self.get(i, src) * k;
            self.entries[i * self.cols + dst] -= d;
        }
    }
}

/// Smith normal form diagonal `d1 | d2 | ...` of length `min(rows, cols)`,
/// all nonnegative, zeros last.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let n = a.rows.min(a.cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        let Some((pi, pj)) = min_nonzero(&a, t, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..a.rows {
                if !a.get(i, t).is_zero() {
                    let k = a.get(i, t).div_floor(a.get(t, t));
                    a.sub_row(i, t, &k);
                    dirty |= !a.get(i, t).is_zero();
                }
            }
            for j in t + 1..a.cols {
                if !a.get(t, j).is_zero() {
                    let k = a.get(t, j).div_floor(a.get(t, t));
                    a.sub_col(j, t, &k);
                    dirty |= !a.get(t, j).is_zero();
                }
            }
            if dirty {
                // a smaller remainder is left in row or column t; make it the pivot
                let (pi, pj) = min_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // pivot must divide the rest of the block
            let pivot = a.get(t, t).clone();
            let bad = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    a.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        diag.push(a.get(t, t).abs());
    }
    diag.resize(n, BigInt::zero());
    diag
}

fn min_nonzero(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in r0..a.rows {
        for j in c0..a.cols {
            let v = a.get(i, j);
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_v = a.get(t, t).abs();
    for i in t + 1..a.rows {
        let v = a.get(i, t).abs();
        if !v.is_zero() && v < best_v {
            best = (i, t);
            best_v = v;
        }
    }
    for j in t + 1..a.cols {
        let v = a.get(t, j).abs();
        if !v.is_zero() && v < best_v {
            best = (t, j);
            best_v = v;
        }
    }
    best
}

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`; `Z` for `n = 0`.
    pub fn cyclic(n: i64) -> Self {
        AbelianGroup::from_cyclic_orders(&[BigInt::from(n)])
    }

    /// Direct sum of cyclic groups `Z/n_i` (`Z` for `n_i = 0`), brought to
    /// invariant-factor form by repeated `(gcd, lcm)` exchange.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let free_rank = orders.iter().filter(|n| n.is_zero()).count();
        let mut t: Vec<BigInt> = orders.iter().filter(|n| !n.is_zero()).map(|n| n.abs()).collect();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let g = t[i].gcd(&t[j]);
                let l = t[i].lcm(&t[j]);
                t[i] = g;
                t[j] = l;
            }
        }
        t.retain(|d| !d.is_one());
        AbelianGroup { free_rank, torsion: t }
    }

    /// Cokernel of a relation matrix (rows are relations on the columns).
    pub fn cokernel(m: &IntMatrix) -> Self {
        let diag = smith_normal_form(m);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        AbelianGroup {
            free_rank: m.cols - nonzero,
            torsion: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        orders.extend(std::iter::repeat_n(BigInt::zero(), self.free_rank + other.free_rank));
        AbelianGroup::from_cyclic_orders(&orders)
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// Order with the convention that an infinite group has "order" 0, the
    /// absolute value of the determinant of a square presentation.
    pub fn order_or_zero(&self) -> BigInt {
        self.order().unwrap_or_else(BigInt::zero)
    }
}

/// `Z^r + Z/d1 + ...`; the trivial group is `0`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Relations `α_i·x_i + β_i·h = 0` for every fiber and `Σ x_i = 0`, on the
/// generators `x_1..x_r, h`.
pub fn seifert_presentation(s: &SeifertData) -> IntMatrix {
    let r = s.fibers().len();
    let mut m = IntMatrix::zeros(r + 1, r + 1);
    for (i, f) in s.fibers().iter().enumerate() {
        m.set(i, i, BigInt::from(f.alpha));
        m.set(i, r, BigInt::from(f.beta));
        m.set(r, i, BigInt::one());
    }
    m
}

pub fn h1_seifert_presentation(s: &SeifertData) -> AbelianGroup {
    AbelianGroup::cokernel(&seifert_presentation(s))
}

/// A relation matrix whose cokernel is H1 of the manifold.
pub fn presentation(m: &CanonicalManifold) -> IntMatrix {
    match m {
        CanonicalManifold::Sphere => IntMatrix::zeros(0, 0),
        CanonicalManifold::S2xS1 => IntMatrix::diagonal(&[0]),
        CanonicalManifold::RP3 => IntMatrix::diagonal(&[2]),
        CanonicalManifold::Lens(l) => IntMatrix::diagonal(&[l.p()]),
        CanonicalManifold::SeifertOverS2(s) => seifert_presentation(s.data()),
        CanonicalManifold::ConnectedSum(sum) => {
            let blocks: Vec<IntMatrix> = sum.summands().iter().map(presentation).collect();
            IntMatrix::block_diagonal(&blocks)
        }
    }
}

pub fn h1(m: &CanonicalManifold) -> AbelianGroup {
    AbelianGroup::cokernel(&presentation(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::{lens_canonical, sum_normalize};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&IntMatrix::diagonal(&[2, 3])), ints(&[1, 6]));
        assert_eq!(smith_normal_form(&IntMatrix::zeros(2, 2)), ints(&[0, 0]));
        assert_eq!(smith_normal_form(&IntMatrix::diagonal(&[2, 2])), ints(&[2, 2]));
        assert_eq!(smith_normal_form(&IntMatrix::diagonal(&[0, 4, 6])), ints(&[2, 12, 0]));
        assert_eq!(
            smith_normal_form(&IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]])),
            ints(&[2, 6, 12])
        );
        assert_eq!(smith_normal_form(&IntMatrix::from_rows(&[[3, 5]])), ints(&[1]));
        assert!(smith_normal_form(&IntMatrix::zeros(0, 3)).is_empty());
    }

    #[test]
    fn cokernel_ranks() {
        // one relation on three generators
        let g = AbelianGroup::cokernel(&IntMatrix::from_rows(&[[0, 4, 0]]));
        assert_eq!(g.free_rank(), 2);
        assert_eq!(g.torsion(), &ints(&[4])[..]);
        assert_eq!(g.to_string(), "Z^2 + Z/4");
        assert_eq!(AbelianGroup::cokernel(&IntMatrix::zeros(0, 0)).to_string(), "0");
    }

    #[test]
    fn cyclic_orders_chain() {
        assert_eq!(AbelianGroup::from_cyclic_orders(&ints(&[5, 2])).to_string(), "Z/10");
        assert_eq!(
            AbelianGroup::from_cyclic_orders(&ints(&[4, 6, 0, 1])).to_string(),
            "Z + Z/2 + Z/12"
        );
        assert_eq!(
            AbelianGroup::from_cyclic_orders(&ints(&[2, 2])).to_string(),
            "Z/2 + Z/2"
        );
        assert!(AbelianGroup::from_cyclic_orders(&ints(&[1, -1])).is_trivial());
    }

    #[test]
    fn seifert_examples() {
        let s = SeifertData::new([(2, 1), (2, 1), (3, 2)]).unwrap();
        let g = h1_seifert_presentation(&s);
        assert_eq!(g.order(), Some(BigInt::from(20)));
        // rank 3 over F2, so cyclic
        assert_eq!(g.to_string(), "Z/20");
        for (a, b) in [(5, 3), (7, -2), (4, 1), (1, 6)] {
            let g = h1_seifert_presentation(&SeifertData::new([(a, b)]).unwrap());
            assert_eq!(g.order(), Some(BigInt::from(b).abs()));
        }
        assert_eq!(h1_seifert_presentation(&SeifertData::default()), AbelianGroup::free(1));
    }

    #[test]
    fn manifold_examples() {
        let sum = sum_normalize([lens_canonical(5, 2).unwrap(), CanonicalManifold::RP3]);
        assert_eq!(h1(&sum).to_string(), "Z/10");
        let sum = sum_normalize([CanonicalManifold::S2xS1, CanonicalManifold::RP3]);
        assert_eq!(h1(&sum).to_string(), "Z + Z/2");
        assert_eq!(h1(&lens_canonical(7, 2).unwrap()).to_string(), "Z/7");
        assert!(h1(&CanonicalManifold::Sphere).is_trivial());
        let sum = sum_normalize([CanonicalManifold::RP3, CanonicalManifold::RP3]);
        assert_eq!(h1(&sum).to_string(), "Z/2 + Z/2");
    }

    #[test]
    fn no_overflow_on_large_entries() {
        let big = i64::MAX;
        let m = IntMatrix::from_rows(&[[big, big - 1], [big - 1, big - 2]]);
        // det = big(big-2) - (big-1)^2 = -1
        assert_eq!(smith_normal_form(&m), ints(&[1, 1]));
    }
}
