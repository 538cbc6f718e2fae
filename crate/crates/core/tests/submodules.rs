use hyvkit_core::fixtures::{
    all_if_sets, classical_z2, grade_grid, graded_z4, graded_z4_if, ordinary_pool, total_module,
    z4_grades,
};
use hyvkit_core::{Error, FuzzySet, HvModule, IfSet, Subset, Verifier, Q};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Direct reading of the submodule axioms: non-empty, `a+S = S+a = S`,
/// weakly associative on `S`, closed under scalars.
fn crisp_oracle(m: &HvModule, s: Subset) -> bool {
    if s.is_empty() {
        return false;
    }
    let n = m.carrier().len();
    let sum = |a: Subset, b: Subset| -> Subset {
        let mut out = Subset::EMPTY;
        for x in 0..n {
            for y in 0..n {
                if a.contains(x) && b.contains(y) {
                    out = out.union(m.sum(x, y));
                }
            }
        }
        out
    };
    for a in s.iter() {
        let one = Subset::singleton(a);
        if sum(one, s) != s || sum(s, one) != s {
            return false;
        }
        for y in s.iter() {
            for z in s.iter() {
                if !sum(one, m.sum(y, z)).meets(sum(m.sum(a, y), Subset::singleton(z))) {
                    return false;
                }
            }
        }
        for r in 0..m.ring.carrier().len() {
            if !m.act(r, a).is_subset(s) {
                return false;
            }
        }
    }
    true
}

fn module_pool() -> Vec<HvModule> {
    let mut pool = vec![classical_z2(), graded_z4(), total_module(3).unwrap()];
    pool.extend(ordinary_pool().iter().map(|m| m.to_hv()));
    pool
}

#[test]
fn enumeration_agrees_with_oracle() {
    let v = Verifier::default();
    for m in module_pool() {
        let n = m.carrier().len();
        let expected: Vec<Subset> = (1..1u64 << n)
            .map(Subset)
            .filter(|&s| crisp_oracle(&m, s))
            .collect();
        assert_eq!(v.enumerate_crisp_submodules(&m).unwrap(), expected);
    }
}

#[test]
fn reference_enumerations() {
    let v = Verifier::default();
    assert_eq!(
        v.enumerate_crisp_submodules(&classical_z2()).unwrap(),
        vec![Subset::singleton(0), Subset::full(2)]
    );
    let graded = v.enumerate_crisp_submodules(&graded_z4()).unwrap();
    for s in [
        Subset::singleton(0),
        Subset::from_indices([0, 2]),
        Subset::full(4),
    ] {
        assert!(graded.contains(&s));
    }
    assert_eq!(
        v.enumerate_crisp_submodules(&total_module(3).unwrap())
            .unwrap(),
        vec![Subset::full(3)]
    );
    let tight = Verifier {
        enumeration_bound: 3,
        ..Verifier::default()
    };
    assert!(matches!(
        tight.enumerate_crisp_submodules(&graded_z4()),
        Err(Error::BoundExceeded { .. })
    ));
}

#[test]
fn empty_subset_is_rejected_by_name() {
    let cert = Verifier::default()
        .check_crisp_hv_submodule(&graded_z4(), Subset::EMPTY)
        .unwrap();
    assert!(!cert.verdict);
    assert_eq!(cert.violations[0].axiom, "empty");
}

#[test]
fn graded_z4_submodules() {
    let m = graded_z4();
    let v = Verifier::default();
    assert!(
        v.check_crisp_hv_submodule(&m, Subset::from_indices([0, 2]))
            .unwrap()
            .verdict
    );
    assert!(
        !v.check_crisp_hv_submodule(&m, Subset::from_indices([0, 1]))
            .unwrap()
            .verdict
    );
    assert!(
        v.check_fuzzy_hv_submodule(&m, &z4_grades())
            .unwrap()
            .verdict
    );
    let mut g = z4_grades().grades().to_vec();
    g[0] = q(0, 1);
    let dropped = FuzzySet::new(m.carrier().clone(), g).unwrap();
    let cert = v.check_fuzzy_hv_submodule(&m, &dropped).unwrap();
    assert!(!cert.verdict);
    assert!(cert
        .violations
        .iter()
        .any(|w| w.axiom.starts_with("(2)") && w.witness == vec![2, 2]));
    assert!(
        v.check_if_hv_submodule(&m, &graded_z4_if())
            .unwrap()
            .verdict
    );
}

#[test]
fn witnesses_satisfy_their_conditions() {
    let m = graded_z4();
    let a = graded_z4_if();
    let cert = Verifier::default().check_if_hv_submodule(&m, &a).unwrap();
    assert!(!cert.witnesses.is_empty());
    for w in &cert.witnesses {
        assert!(m.sum(w.a, w.y).contains(w.x) && m.sum(w.z, w.a).contains(w.x));
        let need = (*a.mu().grade(w.a)).min(*a.mu().grade(w.x));
        if w.condition == "(2)" {
            assert!(*a.mu().grade(w.y) >= need && *a.mu().grade(w.z) >= need);
        }
    }
}

#[test]
fn forward_direction_reports_vacuity() {
    let v = Verifier::default();
    let cert = v.levelcut_forward(&graded_z4(), &graded_z4_if()).unwrap();
    assert!(cert.verdict);
    assert_eq!(cert.fact_value("vacuous"), Some(true));
    let m = graded_z4();
    let s = Subset::from_indices([0, 2]);
    let step = v
        .two_valued_if(&m, s, (q(7, 10), q(1, 5)), (q(1, 5), q(7, 10)))
        .unwrap();
    let cert = v.levelcut_forward(&m, &step).unwrap();
    assert_eq!(cert.fact_value("vacuous"), Some(false));
    assert!(cert.verdict);
    let mut g = z4_grades().grades().to_vec();
    g[0] = q(0, 1);
    let bad = IfSet::new(
        FuzzySet::new(m.carrier().clone(), g).unwrap(),
        FuzzySet::constant(m.carrier().clone(), q(0, 1)).unwrap(),
    )
    .unwrap();
    assert!(matches!(
        v.levelcut_forward(&m, &bad),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn converse_on_characteristic_and_broken_sets() {
    let v = Verifier::default();
    let m = graded_z4();
    let chi = v
        .characteristic_if::<Q>(&m, Subset::from_indices([0, 2]))
        .unwrap();
    let cert = v.levelcut_converse(&m, &chi).unwrap();
    assert_eq!(cert.fact_value("hypothesis"), Some(true));
    assert_eq!(cert.fact_value("conclusion"), Some(true));
    // U(μ;1) = {0, 1} is not closed
    let mu = FuzzySet::new(
        m.carrier().clone(),
        vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)],
    )
    .unwrap();
    let broken = IfSet::new(mu.clone(), mu.complement()).unwrap();
    let cert = v.levelcut_converse(&m, &broken).unwrap();
    assert_eq!(cert.fact_value("hypothesis"), Some(false));
    assert!(cert.verdict);
}

#[test]
fn step_constructions() {
    let v = Verifier::default();
    let m = graded_z4();
    let s = Subset::from_indices([0, 2]);
    let a = v
        .two_valued_if(&m, s, (q(4, 5), q(1, 5)), (q(1, 10), q(3, 5)))
        .unwrap();
    assert_eq!(a.mu().upper_cut(&q(4, 5)), s);
    assert_eq!(a.lambda().lower_cut(&q(1, 10)), s);
    let degenerate = v
        .two_valued_if(&m, s, (q(1, 1), q(0, 1)), (q(0, 1), q(1, 1)))
        .unwrap();
    assert_eq!(degenerate, v.characteristic_if(&m, s).unwrap());
    let err = v
        .two_valued_if(&m, s, (q(1, 2), q(1, 2)), (q(0, 1), q(1, 2)))
        .unwrap_err();
    assert!(err.to_string().contains("α₁ < α₀"));
    assert!(v
        .characteristic_if::<Q>(&m, Subset::from_indices([0, 1]))
        .is_err());
    let full = v.characteristic_if::<Q>(&m, Subset::full(4)).unwrap();
    assert_eq!(
        full,
        IfSet::constant(m.carrier().clone(), q(1, 1), q(0, 1)).unwrap()
    );
}

#[test]
fn strict_pair_is_at_least_as_demanding() {
    let m = graded_z4();
    let grid = grade_grid(q(1, 2));
    let loose = Verifier::default();
    let strict = loose.strict(true);
    for a in all_if_sets(m.carrier(), &grid) {
        if strict.check_if_hv_submodule(&m, &a).unwrap().verdict {
            assert!(loose.check_if_hv_submodule(&m, &a).unwrap().verdict);
        }
    }
}

#[test]
fn box_fixes_complement_pairs() {
    let v = Verifier::default();
    let m = graded_z4();
    let grid = grade_grid(q(1, 2));
    for mu in hyvkit_core::fixtures::all_fuzzy_sets(m.carrier(), &grid) {
        let a = IfSet::new(mu.clone(), mu.complement()).unwrap();
        assert_eq!(a.modal(hyvkit_core::Modal::Necessity), a);
        assert_eq!(
            v.check_if_hv_submodule(&m, &a).unwrap().verdict,
            v.check_fuzzy_hv_submodule(&m, &mu).unwrap().verdict
        );
    }
}

fn arbitrary_if(n: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0i64..=4, 0i64..=4), n)
}

/// Tenths with `0 ≤ α₁ < α₀`, `0 ≤ β₀ < β₁`, `α₀+β₀ ≤ 1`, `α₁+β₁ ≤ 1`.
fn step_parameters() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (0i64..10)
        .prop_flat_map(|a1| (Just(a1), a1 + 1..=10))
        .prop_flat_map(|(a1, a0)| (Just(a1), Just(a0), 0..=(10 - a0).min(9)))
        .prop_flat_map(|(a1, a0, b0)| (Just(a0), Just(a1), Just(b0), b0 + 1..=(10 - a1)))
}

proptest! {
    #[test]
    fn modal_claims_are_consistent(pick in 0usize..3, pairs in arbitrary_if(4)) {
        let m = &module_pool()[pick];
        let n = m.carrier().len();
        let c = m.carrier().clone();
        let mu = pairs[..n].iter().map(|&(a, _)| q(a, 4)).collect();
        let lambda = pairs[..n].iter().map(|&(a, b)| q(b.min(4 - a), 4)).collect();
        let a = IfSet::new(FuzzySet::new(c.clone(), mu).unwrap(), FuzzySet::new(c, lambda).unwrap()).unwrap();
        let v = Verifier::default();
        prop_assert!(v.modal_theorem(m, &a).unwrap().verdict);
        prop_assert!(v.levelcut_converse(m, &a).unwrap().verdict);
    }

    #[test]
    fn step_sets_are_submodules((a0, a1, b0, b1) in step_parameters(), pick in 0usize..3) {
        let m = &module_pool()[pick];
        let v = Verifier::default();
        for s in v.enumerate_crisp_submodules(m).unwrap() {
            let a = v.two_valued_if(m, s, (q(a0, 10), q(a1, 10)), (q(b0, 10), q(b1, 10))).unwrap();
            prop_assert!(v.check_if_hv_submodule(m, &a).unwrap().verdict);
        }
    }
}
