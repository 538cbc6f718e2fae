//! Small reference structures and exhaustive grade grids.

use crate::carrier::{Carrier, Subset};
use crate::error::Result;
use crate::fuzzy::{FuzzySet, IfSet, Q};
use crate::hyper::{HvModule, HvRing, HyperAction, HyperOp};
use crate::induce::{induce_hv_module, induce_hv_ring, OrdModule, OrdRing};

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// `Z_n` as a module over itself.
pub fn zn_module(n: usize) -> Result<OrdModule> {
    Ok(OrdModule::regular(&OrdRing::zn(n)?))
}

fn klein_carrier() -> Carrier {
    Carrier::new(["00", "01", "10", "11"]).expect("distinct names")
}

/// `Z_2 × Z_2` with componentwise operations.
pub fn klein_ring() -> OrdRing {
    let add = (0..16).map(|k| (k / 4) ^ (k % 4)).collect();
    let mul = (0..16).map(|k| (k / 4) & (k % 4)).collect();
    OrdRing::new(klein_carrier(), add, mul, 0, vec![0, 1, 2, 3]).expect("Z_2 x Z_2 is a ring")
}

/// An elementary abelian 2-group on `2^k` points as a module over `ring`,
/// where scalar `r` acts as multiplication by `parity(r)`.
fn two_group_over(ring: OrdRing, points: Carrier, parity: impl Fn(usize) -> usize) -> OrdModule {
    let n = points.len();
    let rn = ring.carrier().len();
    let add = (0..n * n).map(|k| (k / n) ^ (k % n)).collect();
    let action = (0..rn * n)
        .map(|k| if parity(k / n) == 1 { k % n } else { 0 })
        .collect();
    OrdModule::new(ring, points, add, 0, (0..n).collect(), action).expect("valid 2-group module")
}

/// `Z_2 × Z_2` as a `Z_2`-vector space.
pub fn klein_over_z2() -> OrdModule {
    two_group_over(OrdRing::zn(2).expect("Z_2"), klein_carrier(), |r| r)
}

/// `Z_2` as a `Z_4`-module through reduction mod 2.
pub fn z2_over_z4() -> OrdModule {
    two_group_over(
        OrdRing::zn(4).expect("Z_4"),
        Carrier::range(2).expect("Z_2"),
        |r| r % 2,
    )
}

/// `Z_2 × Z_2` as a `Z_4`-module through reduction mod 2.
pub fn klein_over_z4() -> OrdModule {
    two_group_over(OrdRing::zn(4).expect("Z_4"), klein_carrier(), |r| r % 2)
}

/// Ordinary modules used for exhaustive sweeps, smallest first.
pub fn ordinary_pool() -> Vec<OrdModule> {
    vec![
        zn_module(2).expect("Z_2"),
        zn_module(3).expect("Z_3"),
        z2_over_z4(),
        zn_module(4).expect("Z_4"),
        klein_over_z2(),
        klein_over_z4(),
        OrdModule::regular(&klein_ring()),
    ]
}

/// The H_v-module induced on `m` by grading the ring with `ring_grades`
/// and the module with `module_grades`.
pub fn induced(
    m: &OrdModule,
    ring_grades: &FuzzySet,
    module_grades: &FuzzySet,
) -> Result<HvModule> {
    let ring = induce_hv_ring(m.ring(), ring_grades)?;
    induce_hv_module(m, module_grades, &ring)
}

/// `Z_2` over `Z_2` with single-valued operations.
pub fn classical_z2() -> HvModule {
    zn_module(2).expect("Z_2").to_hv()
}

/// Grades on `Z_4`: `0 ↦ 1`, `1, 3 ↦ 3/10`, `2 ↦ 7/10`.
pub fn z4_grades() -> FuzzySet {
    FuzzySet::new(
        Carrier::range(4).expect("Z_4"),
        vec![q(1, 1), q(3, 10), q(7, 10), q(3, 10)],
    )
    .expect("grades in range")
}

/// `Z_4` over `Z_4` with both structures induced by [`z4_grades`]. The
/// level classes are `{0}`, `{2}`, `{1,3}`.
pub fn graded_z4() -> HvModule {
    let mu = z4_grades();
    induced(&zn_module(4).expect("Z_4"), &mu, &mu).expect("matching carriers")
}

/// IF set on [`graded_z4`]: membership [`z4_grades`], non-membership
/// `(0, 1/2, 1/5, 1/2)`.
pub fn graded_z4_if() -> IfSet {
    let lambda = FuzzySet::new(
        Carrier::range(4).expect("Z_4"),
        vec![q(0, 1), q(1, 2), q(1, 5), q(1, 2)],
    )
    .expect("grades in range");
    IfSet::new(z4_grades(), lambda).expect("sum at most 1")
}

/// `Z_2` over the H_v-ring of [`graded_z4`], scalars acting by parity.
/// Reduction mod 2 from [`graded_z4`] onto it is a strong epimorphism.
pub fn parity_image() -> HvModule {
    let source = graded_z4();
    let c = Carrier::range(2).expect("Z_2");
    HvModule::new(
        source.ring.clone(),
        HyperOp::from_binary(c.clone(), |x, y| x ^ y).expect("Z_2 addition"),
        HyperAction::from_fn(source.ring.carrier().clone(), c, |r, x| {
            Subset::singleton(r % 2 * x)
        })
        .expect("parity action"),
    )
    .expect("shared ring")
}

/// `Z_n` over `Z_n` with every hyperoperation total, as induced by a
/// constant grade.
pub fn total_module(n: usize) -> Result<HvModule> {
    let m = zn_module(n)?;
    let flat = FuzzySet::constant(m.carrier().clone(), q(1, 2))?;
    induced(&m, &flat, &flat)
}

/// A homomorphism that is not strong on the left, over the one-point ring.
///
/// Three points collapse onto two; the fiber of `0` is `{0}` and
/// `0+0 = {0,1}`, so `z = 2` has no left lift at `(x, y) = (0, 0)`.
pub fn non_strong_collapse() -> (HvModule, HvModule, Vec<usize>) {
    let one = Carrier::range(1).expect("one point");
    let ring = HvRing::new(HyperOp::total(one.clone()), HyperOp::total(one.clone()))
        .expect("shared carrier");
    let src = Carrier::range(3).expect("three points");
    let tgt = Carrier::range(2).expect("two points");
    let add = HyperOp::from_fn(src.clone(), |x, y| match (x.min(y), x.max(y)) {
        (0, 1) | (1, 2) => Subset::from_indices([0, 2]),
        (2, 2) => Subset::full(3),
        _ => Subset::from_indices([0, 1]),
    })
    .expect("non-empty entries");
    let source = HvModule::new(
        ring.clone(),
        add,
        HyperAction::from_fn(one.clone(), src, |_, x| Subset::singleton(x))
            .expect("identity action"),
    )
    .expect("shared ring");
    let target = HvModule::new(
        ring,
        HyperOp::total(tgt.clone()),
        HyperAction::from_fn(one, tgt, |_, x| Subset::singleton(x)).expect("identity action"),
    )
    .expect("shared ring");
    (source, target, vec![0, 1, 1])
}

/// `{0, step, 2·step, …, 1}`; `step` must divide 1.
pub fn grade_grid(step: Q) -> Vec<Q> {
    let mut grid = vec![Q::from_integer(0)];
    let one = Q::from_integer(1);
    while *grid.last().expect("non-empty") < one {
        let next = *grid.last().expect("non-empty") + step;
        grid.push(next.min(one));
    }
    grid
}

/// Every assignment of a grid value to each of `n` points, in
/// lexicographic order with the first point varying slowest.
fn assignments<T: Clone>(choices: &[T], n: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// All fuzzy sets on `carrier` with grades in `grid`.
pub fn all_fuzzy_sets(carrier: &Carrier, grid: &[Q]) -> Vec<FuzzySet> {
    assignments(grid, carrier.len())
        .into_iter()
        .map(|g| FuzzySet::new(carrier.clone(), g).expect("grid grades are in range"))
        .collect()
}

/// All IF sets on `carrier` with both grades in `grid`.
pub fn all_if_sets(carrier: &Carrier, grid: &[Q]) -> Vec<IfSet> {
    let one = Q::from_integer(1);
    let pairs: Vec<(Q, Q)> = grid
        .iter()
        .flat_map(|m| {
            grid.iter()
                .filter(move |l| *m + **l <= one)
                .map(move |l| (*m, *l))
        })
        .collect();
    assignments(&pairs, carrier.len())
        .into_iter()
        .map(|ps| {
            let (mu, lambda): (Vec<Q>, Vec<Q>) = ps.into_iter().unzip();
            IfSet::new(
                FuzzySet::new(carrier.clone(), mu).expect("grid grades"),
                FuzzySet::new(carrier.clone(), lambda).expect("grid grades"),
            )
            .expect("pairs sum to at most 1")
        })
        .collect()
}
