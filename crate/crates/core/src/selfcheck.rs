//! Cross-validation of the classifier against the homology oracle and the
//! lens/Seifert/surgery calculi.
//!
//! Hard checks must hold; any failure is a bug. Diagnostics compare
//! formulas whose agreement depends on an orientation or Euler-number
//! convention; they are reported, never failed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::classify::{
    case_number, classify, classify_all, enumerate, valid_invariants, ClassificationResult, CASE_PREDICATES,
};
use crate::error::Result;
use crate::expr::parse_manifold;
use crate::homology::{h1, h1_seifert_presentation, presentation, smith_normal_form, AbelianGroup};
use crate::manifold::{
    homeomorphic, homeomorphic_with, lens_canonical, lens_equivalent, sum_normalize, CanonicalManifold, LensParams,
    LensRelation,
};
use crate::seifert::{
    euler_number, is_prime, not_lens_obstruction, prime_exception, seifert_isomorphic, seifert_normalize,
    seifert_to_lens, SeifertData,
};
use crate::surgery::{framing_equivalent, invert_framing, saddle_framing, Framing};

const MAX_REPORTED: usize = 5;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            checked: 0,
            failures: Vec::new(),
            failure_count: 0,
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Debug, Clone)]
pub struct Diagnostic {
    pub name: &'static str,
    pub lines: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SelfcheckReport {
    pub bound: i64,
    pub checks: Vec<CheckOutcome>,
    pub diagnostics: Vec<Diagnostic>,
}

impl SelfcheckReport {
    pub fn hard_failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl fmt::Display for SelfcheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "selfcheck --bound {}", self.bound)?;
        writeln!(f)?;
        writeln!(f, "hard invariants:")?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  {status}  {:<52} {:>8} checked  {:>4} failed",
                c.name, c.checked, c.failure_count
            )?;
            for d in &c.failures {
                writeln!(f, "        {d}")?;
            }
        }
        writeln!(f)?;
        writeln!(f, "convention-sensitive diagnostics (not failures):")?;
        for d in &self.diagnostics {
            writeln!(f, "  {}", d.name)?;
            for l in &d.lines {
                writeln!(f, "    {l}")?;
            }
        }
        writeln!(f)?;
        write!(f, "{} hard failure(s)", self.hard_failures())
    }
}

fn quad(r: &ClassificationResult) -> String {
    let [a, b, c, d] = r.invariant.quadruple();
    format!("({a},{b},{c},{d})")
}

/// `|Σ β_i Π_{j≠i} α_j|`, the order of H1 read off the fiber list.
pub fn seifert_order_formula(s: &SeifertData) -> BigInt {
    let f = s.fibers();
    let mut total = BigInt::from(0);
    for (i, fi) in f.iter().enumerate() {
        let mut term = BigInt::from(fi.beta);
        for (j, fj) in f.iter().enumerate() {
            if i != j {
                term *= fj.alpha;
            }
        }
        total += term;
    }
    total.abs()
}

/// Expected H1 in cases 1–3: `Z/|l| ⊕ Z/2`, with `Z` in place of `Z/0`.
pub fn expected_h1_with_rp3(l: i64) -> AbelianGroup {
    AbelianGroup::from_cyclic_orders(&[BigInt::from(l), BigInt::from(2)])
}

pub fn selfcheck(bound: i64) -> Result<SelfcheckReport> {
    let invariants = valid_invariants(bound);
    let results = classify_all(&invariants)?;
    let classes = enumerate(bound)?;
    let mut checks = Vec::new();

    let mut c = CheckOutcome::new("case predicates partition the quadruples");
    for r in &results {
        let inv = &r.invariant;
        let firing: Vec<u8> = CASE_PREDICATES
            .iter()
            .filter(|(_, p)| p(inv.l1(), inv.l2()))
            .map(|(n, _)| *n)
            .collect();
        c.check(firing == [r.case_number] && case_number(inv) == r.case_number, || {
            format!("{} fires {firing:?}", quad(r))
        });
    }
    checks.push(c);

    let mut c = CheckOutcome::new("classify is deterministic");
    for r in results.iter().step_by(7) {
        c.check(classify(&r.invariant)? == *r, || quad(r));
    }
    checks.push(c);

    let mut c = CheckOutcome::new("H1 of cases 1-3 is Z/|l| + Z/2");
    for r in results.iter().filter(|r| r.case_number <= 3) {
        let l = match r.case_number {
            1 => r.invariant.l2(),
            2 => r.invariant.l1(),
            _ => 0,
        };
        let got = h1(&r.manifold);
        c.check(got == expected_h1_with_rp3(l), || format!("{} gives {got}", quad(r)));
    }
    checks.push(c);

    let mut c = CheckOutcome::new("|H1| of cases 4-5 is |2m - l|");
    for r in results.iter().filter(|r| r.case_number == 4 || r.case_number == 5) {
        let inv = &r.invariant;
        let (l, m) = if r.case_number == 4 {
            (inv.l2(), inv.m2())
        } else {
            (inv.l1(), inv.m1())
        };
        let want = (BigInt::from(2) * m - l).abs();
        let got = h1(&r.manifold).order_or_zero();
        c.check(got == want, || format!("{} has |H1| = {got}, want {want}", quad(r)));
    }
    checks.push(c);

    let mut c = CheckOutcome::new("H1 of case 6 is trivial");
    for r in results.iter().filter(|r| r.case_number == 6) {
        c.check(h1(&r.manifold).is_trivial(), || quad(r));
    }
    checks.push(c);

    let mut c = CheckOutcome::new("|H1| of case 7 is |sum b_i prod_(j!=i) a_j|");
    for r in results.iter().filter(|r| r.case_number == 7) {
        let CanonicalManifold::SeifertOverS2(s) = &r.manifold else {
            c.check(false, || format!("{} is not a Seifert space", quad(r)));
            continue;
        };
        let want = seifert_order_formula(s.data());
        let got = h1(&r.manifold).order_or_zero();
        c.check(got == want, || format!("{} has |H1| = {got}, want {want}", quad(r)));
    }
    checks.push(c);

    let lenses: Vec<CanonicalManifold> = (3..=4 * bound.max(2))
        .flat_map(|p| (1..p).filter_map(move |q| lens_canonical(p, q).ok()))
        .chain([
            CanonicalManifold::Sphere,
            CanonicalManifold::S2xS1,
            CanonicalManifold::RP3,
        ])
        .collect();
    let mut c = CheckOutcome::new("case 7 is prime and not a lens space");
    for r in results.iter().filter(|r| r.case_number == 7) {
        let seifert_ok = match &r.manifold {
            CanonicalManifold::SeifertOverS2(s) => not_lens_obstruction(s.data()),
            _ => false,
        };
        let lens_hit = lenses.iter().find(|l| homeomorphic(&r.manifold, l));
        c.check(seifert_ok && is_prime(&r.manifold) && lens_hit.is_none(), || {
            format!("{} -> {} (lens match: {lens_hit:?})", quad(r), r.manifold)
        });
    }
    checks.push(c);

    let mut c = CheckOutcome::new("parse(render(m)) = m and canonical forms are fixed");
    for class in &classes {
        let m = &class.members[0].manifold;
        let back = parse_manifold(&m.to_string());
        c.check(back.as_ref() == Ok(m) && m.canonicalize().as_ref() == Ok(m), || {
            format!("{m}")
        });
    }
    checks.push(c);

    let mut c = CheckOutcome::new("homeomorphic outputs have isomorphic H1");
    for class in &classes {
        let g = h1(&class.representative);
        for r in &class.members {
            let ok = homeomorphic(&r.manifold, &class.representative) && h1(&r.manifold) == g;
            c.check(ok, || {
                format!("{} -> {} vs {}", quad(r), r.manifold, class.representative)
            });
        }
    }
    let reps: Vec<_> = classes.iter().map(|cl| &cl.representative).collect();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            c.check(!homeomorphic(a, b), || format!("classes {a} and {b} should be merged"));
        }
    }
    checks.push(c);

    let mut c = CheckOutcome::new("Smith form divides along the diagonal");
    for class in &classes {
        let d = smith_normal_form(&presentation(&class.representative));
        let chain = d.windows(2).all(|w| {
            if w[0] == BigInt::from(0) {
                w[1] == w[0]
            } else {
                (&w[1] % &w[0]) == BigInt::from(0)
            }
        });
        c.check(chain, || format!("{} -> {d:?}", class.representative));
    }
    checks.push(c);

    let mut c = CheckOutcome::new("lens_equivalent iff equal canonical forms");
    let range = 2 * bound + 4;
    let params: Vec<LensParams> = (-range..=range)
        .flat_map(|p| (-range..=range).filter_map(move |q| LensParams::new(p, q).ok()))
        .collect();
    for a in &params {
        for b in &params {
            c.check(lens_equivalent(a, b) == (a.canonical() == b.canonical()), || {
                format!("{a:?} {b:?}")
            });
        }
    }
    checks.push(c);

    let mut c = CheckOutcome::new("double inversion of framings, saddle framing");
    for beta in -50..=50 {
        for alpha in -50..=50 {
            if let Ok(f) = Framing::new(beta, alpha) {
                c.check(framing_equivalent(&invert_framing(&invert_framing(&f)), &f), || {
                    format!("{f:?}")
                });
                c.check(f.gluing_matrix().det() == 1, || format!("det of {f:?}"));
            }
        }
    }
    let (m, f) = saddle_framing();
    c.check(m.rows() == [[2, 1], [-1, 0]] && m.det() == 1, || {
        format!("saddle matrix {m:?}")
    });
    c.check(framing_equivalent(&invert_framing(&f), &Framing::new(1, 2)?), || {
        "inverse saddle framing".into()
    });
    checks.push(c);

    let mut c = CheckOutcome::new("Seifert normalization on intermediate data");
    for r in &results {
        if let Some(s) = &r.intermediate {
            let n = seifert_normalize(s)?;
            let ok = seifert_normalize(&n)? == n && euler_number(&n) == euler_number(s) && seifert_isomorphic(s, &n);
            c.check(ok, || format!("{} intermediate {:?}", quad(r), s.pairs()));
        }
    }
    checks.push(c);

    let diagnostics = vec![
        diagnose_lens_formulas(&results)?,
        diagnose_two_fiber_conversion()?,
        diagnose_prime_exception()?,
        diagnose_adjacent_representatives(&results)?,
        diagnose_signed_multiplicity(&results)?,
    ];

    Ok(SelfcheckReport {
        bound,
        checks,
        diagnostics,
    })
}

/// Cases 4/5 against the two-fiber conversion and the H1 presentation of the
/// intermediate fibration.
fn diagnose_lens_formulas(results: &[ClassificationResult]) -> Result<Diagnostic> {
    let (mut total, mut oriented, mut unoriented, mut order_agree) = (0, 0, 0, 0);
    let mut examples = Vec::new();
    for r in results.iter().filter(|r| r.case_number == 4 || r.case_number == 5) {
        let s = r.intermediate.as_ref().expect("cases 4-5 carry Seifert data");
        let via_seifert = seifert_to_lens(s)?;
        total += 1;
        let same = homeomorphic(&r.manifold, &via_seifert);
        oriented += same as usize;
        unoriented += homeomorphic_with(&r.manifold, &via_seifert, LensRelation::Unoriented) as usize;
        let oracle = h1_seifert_presentation(s).order_or_zero();
        order_agree += (h1(&r.manifold).order_or_zero() == oracle) as usize;
        if !same && examples.len() < MAX_REPORTED {
            examples.push(format!(
                "{}: case formula {} | fibration conversion {} | |H1| of fibration {}",
                quad(r),
                r.manifold,
                via_seifert,
                oracle
            ));
        }
    }
    let mut lines = vec![
        format!("case 4/5 outputs compared: {total}"),
        format!("agree with fibration conversion (oriented lens relation): {oriented}"),
        format!("agree with fibration conversion (unoriented lens relation): {unoriented}"),
        format!("|H1| agrees with the fibration presentation: {order_agree}"),
    ];
    lines.extend(examples);
    Ok(Diagnostic {
        name: "cases 4-5 vs two-fiber lens conversion of the intermediate fibration",
        lines,
    })
}

/// `|β1α2 − α1β2|` from the conversion against `|α1β2 + α2β1|` from the
/// presentation, over normalized two-fiber data.
fn diagnose_two_fiber_conversion() -> Result<Diagnostic> {
    let (mut total, mut agree) = (0, 0);
    let mut examples = Vec::new();
    for a1 in 2..=9 {
        for b1 in 1..a1 {
            for a2 in a1..=9 {
                for b2 in 1..a2 {
                    let Ok(s) = SeifertData::new([(a1, b1), (a2, b2)]) else {
                        continue;
                    };
                    total += 1;
                    let lens = seifert_to_lens(&s)?;
                    let lens_order = h1(&lens).order_or_zero();
                    let oracle = h1_seifert_presentation(&s).order_or_zero();
                    if lens_order == oracle {
                        agree += 1;
                    } else if examples.len() < MAX_REPORTED {
                        examples.push(format!(
                            "SFS(S2; ({a1},{b1}),({a2},{b2})): conversion {lens}, presentation |H1| = {oracle}"
                        ));
                    }
                }
            }
        }
    }
    let mut lines = vec![format!("two-fiber data (alpha <= 9): {total}, |H1| agrees for {agree}")];
    lines.extend(examples);
    Ok(Diagnostic {
        name: "two-fiber lens conversion vs H1 presentation",
        lines,
    })
}

fn diagnose_prime_exception() -> Result<Diagnostic> {
    let rp3_sum = h1(&sum_normalize([CanonicalManifold::RP3, CanonicalManifold::RP3]));
    let mut lines = vec![format!("RP3 # RP3: H1 = {rp3_sum}")];
    for fibers in [[(2, 1), (2, 1), (2, 1), (2, 1)], [(2, 1), (2, 1), (2, -1), (2, -1)]] {
        let s = SeifertData::new(fibers)?;
        let g = h1_seifert_presentation(&s);
        lines.push(format!(
            "{:?}: Euler {}, H1 = {g}, matches {:?}, H1 equal to RP3 # RP3: {}",
            s.pairs(),
            euler_number(&s),
            prime_exception(&s),
            g == rp3_sum
        ));
    }
    Ok(Diagnostic {
        name: "non-prime Seifert exception",
        lines,
    })
}

/// Case 7 fixes `β_i` in `(0, |l_i|)`; shifting one by `|l_i|` changes the
/// Euler number and so the isomorphism class.
fn diagnose_adjacent_representatives(results: &[ClassificationResult]) -> Result<Diagnostic> {
    let (mut total, mut distinct) = (0, 0);
    let mut example = None;
    for r in results.iter().filter(|r| r.case_number == 7) {
        let s = r.intermediate.as_ref().expect("case 7 carries Seifert data");
        let mut shifted = s.pairs();
        shifted[1].1 += shifted[1].0;
        let t = SeifertData::new(shifted)?;
        total += 1;
        if !seifert_isomorphic(s, &t) {
            distinct += 1;
            if example.is_none() {
                example = Some(format!(
                    "{}: Euler {} vs {} after beta1 += |l1|",
                    quad(r),
                    euler_number(s),
                    euler_number(&t)
                ));
            }
        }
    }
    let mut lines = vec![format!(
        "case 7 outputs: {total}, shifted representative non-isomorphic: {distinct}"
    )];
    lines.extend(example);
    Ok(Diagnostic {
        name: "case 7 beta representative dependence",
        lines,
    })
}

/// Case 7 uses `|l_i|` as the multiplicity. Reading `(l_i, β_i)` with the
/// sign kept, i.e. `(|l_i|, sign(l_i)·β_i)`, gives a different manifold
/// whenever some `l_i < 0`.
fn diagnose_signed_multiplicity(results: &[ClassificationResult]) -> Result<Diagnostic> {
    let (mut negative, mut differ) = (0, 0);
    let mut example = None;
    for r in results.iter().filter(|r| r.case_number == 7) {
        let inv = &r.invariant;
        if inv.l1() > 0 && inv.l2() > 0 {
            continue;
        }
        negative += 1;
        let s = r.intermediate.as_ref().expect("case 7 carries Seifert data");
        let mut pairs = s.pairs();
        pairs[1].1 *= inv.l1().signum();
        pairs[2].1 *= inv.l2().signum();
        let signed = CanonicalManifold::seifert(&SeifertData::new(pairs)?)?;
        if !homeomorphic(&signed, &r.manifold) {
            differ += 1;
            example.get_or_insert_with(|| format!("{}: {} vs signed reading {}", quad(r), r.manifold, signed));
        }
    }
    let mut lines = vec![format!(
        "case 7 outputs with a negative l_i: {negative}, signed reading differs: {differ}"
    )];
    lines.extend(example);
    Ok(Diagnostic {
        name: "case 7 sign of l_i",
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bound_is_clean() {
        let report = selfcheck(2).unwrap();
        assert_eq!(report.hard_failures(), 0, "{report}");
        assert!(report.checks.iter().all(|c| c.checked > 0), "{report}");
    }

    #[test]
    fn order_formula() {
        let s = SeifertData::new([(2, 1), (2, 1), (3, 2)]).unwrap();
        assert_eq!(seifert_order_formula(&s), BigInt::from(20));
        assert_eq!(expected_h1_with_rp3(0).to_string(), "Z + Z/2");
        assert_eq!(expected_h1_with_rp3(-5).to_string(), "Z/10");
        assert_eq!(expected_h1_with_rp3(1).to_string(), "Z/2");
    }
}
