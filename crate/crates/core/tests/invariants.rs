use proptest::prelude::*;

use twistflow::classify::{classify, validate_invariant};
use twistflow::expr::parse_manifold;
use twistflow::homology::h1;
use twistflow::manifold::{homeomorphic, lens_canonical, sum_normalize, CanonicalManifold};
use twistflow::seifert::{euler_number, seifert_isomorphic, seifert_normalize, seifert_to_lens, SeifertData};

fn fiber() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=9, -20i64..=20).prop_filter("coprime", |&(a, b)| num_integer::gcd(a, b) == 1)
}

fn seifert(min: usize, max: usize) -> impl Strategy<Value = SeifertData> {
    proptest::collection::vec(fiber(), min..=max).prop_map(|f| SeifertData::new(f).unwrap())
}

fn quadruple() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-30i64..=30, -30i64..=30, -30i64..=30, -30i64..=30)
        .prop_filter("valid", |&(a, b, c, d)| validate_invariant(a, b, c, d).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]

    // With three or more exceptional fibers the homeomorphism key is the
    // fibration isomorphism class.
    #[test]
    fn isomorphism_matches_homeomorphism(a in seifert(3, 4), b in seifert(3, 4)) {
        let ma = CanonicalManifold::seifert(&a).unwrap();
        let mb = CanonicalManifold::seifert(&b).unwrap();
        prop_assert_eq!(seifert_isomorphic(&a, &b), homeomorphic(&ma, &mb));
    }

    #[test]
    fn isomorphism_survives_flips_that_fix_the_euler_number(a in seifert(3, 4), i in 0usize..4, j in 0usize..4) {
        // negate two fibers with the same α and opposite residues
        let mut f = a.pairs();
        let (i, j) = (i % f.len(), j % f.len());
        if i != j && f[i].0 == f[j].0 {
            let (bi, bj) = (f[i].1, f[j].1);
            f[i].1 = -bj;
            f[j].1 = -bi;
            // Euler: -bj/α - bi/α, equal iff bi + bj = 0
            let b = SeifertData::new(f).unwrap();
            prop_assert_eq!(seifert_isomorphic(&a, &b), euler_number(&a) == euler_number(&b));
        }
    }

    #[test]
    fn classification_round_trips_through_text((l1, m1, l2, m2) in quadruple()) {
        let r = classify(&validate_invariant(l1, m1, l2, m2).unwrap()).unwrap();
        let text = r.manifold.to_string();
        prop_assert_eq!(parse_manifold(&text).unwrap(), r.manifold.clone());
        prop_assert_eq!(r.manifold.canonicalize().unwrap(), r.manifold.clone());
    }

    #[test]
    fn sign_of_l_is_ignored_in_case_seven((l1, m1, l2, m2) in quadruple()) {
        let a = classify(&validate_invariant(l1, m1, l2, m2).unwrap()).unwrap();
        if a.case_number != 7 {
            return Ok(());
        }
        let b = classify(&validate_invariant(-l1, m1, -l2, m2).unwrap()).unwrap();
        prop_assert_eq!(a.manifold, b.manifold);
    }

    #[test]
    fn lens_cases_survive_reversing_both_knots((l1, m1, l2, m2) in quadruple()) {
        prop_assume!((l1, m1) != (0, 2));
        let a = classify(&validate_invariant(l1, m1, l2, m2).unwrap()).unwrap();
        if a.case_number == 7 {
            return Ok(());
        }
        let b = classify(&validate_invariant(-l1, -m1, -l2, -m2).unwrap()).unwrap();
        prop_assert_eq!(a.case_number, b.case_number);
        prop_assert_eq!(a.manifold, b.manifold);
    }

    #[test]
    fn two_fiber_spaces_are_lens_spaces(s in seifert(2, 2)) {
        let lens = seifert_to_lens(&s).unwrap();
        prop_assert!(matches!(lens, CanonicalManifold::Lens(_) | CanonicalManifold::RP3 | CanonicalManifold::Sphere | CanonicalManifold::S2xS1));
        prop_assert_eq!(seifert_to_lens(&seifert_normalize(&s).unwrap()).unwrap(), lens);
    }

    #[test]
    fn homology_of_sums_is_additive(p in 0i64..40, q in 1i64..40, r in 0i64..40, t in 1i64..40) {
        let (Ok(a), Ok(b)) = (lens_canonical(p, q), lens_canonical(r, t)) else { return Ok(()) };
        let sum = sum_normalize([a.clone(), b.clone()]);
        prop_assert_eq!(h1(&sum), h1(&a).direct_sum(&h1(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    // Extreme inputs either classify or fail with an error; never panic.
    #[test]
    fn full_range_inputs_do_not_panic(
        v in proptest::collection::vec(prop_oneof![Just(i64::MIN), Just(i64::MAX), Just(i64::MIN + 1), any::<i64>(), -3i64..=3], 4)
    ) {
        if let Ok(c) = validate_invariant(v[0], v[1], v[2], v[3]) {
            if let Ok(r) = classify(&c) {
                let _ = h1(&r.manifold);
                prop_assert_eq!(parse_manifold(&r.manifold.to_string()).unwrap(), r.manifold);
            }
        }
    }
}

#[test]
fn homeomorphic_spaces_share_homology_on_outputs() {
    let classes = twistflow::enumerate(4).unwrap();
    for class in &classes {
        let g = h1(&class.representative);
        for r in &class.members {
            assert_eq!(h1(&r.manifold), g, "{}", r.manifold);
        }
    }
}
