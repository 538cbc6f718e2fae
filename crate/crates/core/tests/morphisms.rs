use hyvkit_core::fixtures::{
    all_if_sets, grade_grid, graded_z4, graded_z4_if, non_strong_collapse, ordinary_pool,
    parity_image,
};
use hyvkit_core::{Error, HvModule, HvModuleMap, Side, Subset, Verifier, Q};

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Every total map from `n` points to `k` points.
fn all_maps(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..k).map(move |y| {
                    let mut p = p.clone();
                    p.push(y);
                    p
                })
            })
            .collect();
    }
    out
}

fn image(f: &[usize], s: Subset) -> Subset {
    s.iter().map(|x| f[x]).collect()
}

fn hom_oracle(m1: &HvModule, m2: &HvModule, f: &[usize]) -> bool {
    let n = m1.carrier().len();
    (0..n).all(|x| (0..n).all(|y| image(f, m1.sum(x, y)) == m2.sum(f[x], f[y])))
        && (0..m1.ring.carrier().len())
            .all(|r| (0..n).all(|x| image(f, m1.act(r, x)) == m2.act(r, f[x])))
}

fn strong_oracle(m1: &HvModule, m2: &HvModule, f: &[usize], left: bool) -> bool {
    let n = m1.carrier().len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !m2.sum(f[x], f[y]).contains(f[z]) {
                    continue;
                }
                let lifted = if left {
                    (0..n).any(|x2| f[x2] == f[x] && m1.sum(x2, y).contains(z))
                } else {
                    (0..n).any(|y2| f[y2] == f[y] && m1.sum(x, y2).contains(z))
                };
                if !lifted {
                    return false;
                }
            }
        }
    }
    true
}

/// Pairs of modules over a common ring, both of at most four points.
fn pairs() -> Vec<(HvModule, HvModule)> {
    let pool: Vec<HvModule> = ordinary_pool().iter().map(|m| m.to_hv()).collect();
    let mut out = Vec::new();
    for a in &pool {
        for b in &pool {
            if a.ring == b.ring {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    let (g, p) = (graded_z4(), parity_image());
    out.push((g.clone(), p.clone()));
    out.push((g.clone(), g));
    out.push((p.clone(), p));
    let (s, t, _) = non_strong_collapse();
    out.push((s, t));
    out
}

#[test]
fn homomorphism_and_strongness_match_oracles() {
    let v = Verifier::default();
    let mut strong_seen = 0;
    let mut weak_seen = 0;
    for (m1, m2) in pairs() {
        for map in all_maps(m1.carrier().len(), m2.carrier().len()) {
            let f = HvModuleMap::new(&m1, &m2, map.clone()).unwrap();
            let hom = hom_oracle(&m1, &m2, &map);
            assert_eq!(v.check_homomorphism(&f).passed, hom, "{map:?}");
            if !hom {
                assert!(matches!(
                    v.check_strong(&f, Side::Both),
                    Err(Error::Precondition { .. })
                ));
                continue;
            }
            let left = strong_oracle(&m1, &m2, &map, true);
            let right = strong_oracle(&m1, &m2, &map, false);
            assert_eq!(v.check_strong(&f, Side::Left).unwrap().passed, left);
            assert_eq!(v.check_strong(&f, Side::Right).unwrap().passed, right);
            assert_eq!(
                v.check_strong(&f, Side::Both).unwrap().passed,
                left && right
            );
            if left && right {
                strong_seen += 1;
            } else {
                weak_seen += 1;
            }
        }
    }
    assert!(strong_seen > 0 && weak_seen > 0);
}

#[test]
fn preimage_cut_identities_hold_for_every_map() {
    let v = Verifier::default();
    let grid = grade_grid(q(1, 2));
    let (g, p) = (graded_z4(), parity_image());
    for map in all_maps(4, 2) {
        let f = HvModuleMap::new(&g, &p, map).unwrap();
        for b in all_if_sets(p.carrier(), &grid) {
            for t in &grid {
                assert!(v.preimage_levelcut_props(&f, &b, t).unwrap().verdict);
            }
        }
    }
}

#[test]
fn parity_reduction_transports_structure() {
    let v = Verifier::default();
    let (g, p) = (graded_z4(), parity_image());
    let f = HvModuleMap::new(&g, &p, vec![0, 1, 0, 1]).unwrap();
    let a = graded_z4_if();
    for t in grade_grid(q(1, 10)) {
        let cert = v.image_levelcut_props(&f, &a, &t).unwrap();
        assert!(cert.verdict, "t = {t}");
    }
    let grid = grade_grid(q(1, 4));
    for b in all_if_sets(p.carrier(), &grid) {
        let pulled = v.preimage_if(&f, &b).unwrap();
        let target_ok = v.check_if_hv_submodule(&p, &b).unwrap().verdict;
        assert_eq!(pulled.assertion.verdict().is_some(), target_ok);
        if target_ok {
            assert_eq!(pulled.assertion.verdict(), Some(true));
        }
    }
}

#[test]
fn image_props_require_surjection() {
    let v = Verifier::default();
    let g = graded_z4();
    let f = HvModuleMap::new(&g, &g, vec![0, 0, 2, 2]).unwrap();
    assert!(matches!(
        v.image_levelcut_props(&f, &graded_z4_if(), &q(1, 2)),
        Err(Error::Precondition { .. })
    ));
}

#[test]
fn maps_need_a_shared_ring() {
    let pool = ordinary_pool();
    let (z2, z3) = (pool[0].to_hv(), pool[1].to_hv());
    assert!(HvModuleMap::new(&z2, &z3, vec![0, 0]).is_err());
}
