//! Ordinary finite rings and modules, and the H_v-structures induced on them
//! by a fuzzy set: each product is replaced by the whole level class of the
//! ordinary result, `x⊕y = {s | μ(s) = μ(x+y)}`.

use crate::carrier::{Carrier, Subset};
use crate::error::{Error, Result};
use crate::fuzzy::{gmax, gmin, FuzzySet, Grade, IfSet};
use crate::hyper::{HvModule, HvRing, HyperAction, HyperOp};
use crate::report::{AxiomReport, Violation};
use crate::verifier::Verifier;

/// A finite ring given by single-valued tables. Not required to be unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdRing {
    carrier: Carrier,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
}

fn check_binary(name: &str, table: &[usize], n: usize) -> Result<()> {
    if table.len() != n * n {
        return Err(Error::InvalidTable(format!(
            "{name} table has {} entries, expected {}",
            table.len(),
            n * n
        )));
    }
    if table.iter().any(|&v| v >= n) {
        return Err(Error::Domain(format!("{name} table leaves the carrier")));
    }
    Ok(())
}

fn check_unary(name: &str, table: &[usize], zero: usize, n: usize) -> Result<()> {
    if table.len() != n || table.iter().any(|&v| v >= n) || zero >= n {
        return Err(Error::InvalidTable(format!(
            "{name} table or zero is malformed"
        )));
    }
    Ok(())
}

impl OrdRing {
    /// Builds the ring and verifies every ring axiom exhaustively.
    pub fn new(
        carrier: Carrier,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        neg: Vec<usize>,
    ) -> Result<Self> {
        let ring = Self::from_tables(carrier, add, mul, zero, neg)?;
        let report = Verifier::default().validate_ord_ring(&ring);
        if !report.passed {
            return Err(Error::AxiomsFailed {
                what: "ordinary ring".into(),
                report: Box::new(report),
            });
        }
        Ok(ring)
    }

    /// Shape checks only; use [`Verifier::validate_ord_ring`] for the axioms.
    pub fn from_tables(
        carrier: Carrier,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        neg: Vec<usize>,
    ) -> Result<Self> {
        let n = carrier.len();
        check_binary("addition", &add, n)?;
        check_binary("multiplication", &mul, n)?;
        check_unary("negation", &neg, zero, n)?;
        Ok(Self {
            carrier,
            add,
            mul,
            zero,
            neg,
        })
    }

    /// `Z_n` with carrier names `0..n`.
    pub fn zn(n: usize) -> Result<Self> {
        let carrier = Carrier::range(n)?;
        let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let mul = (0..n * n).map(|k| (k / n) * (k % n) % n).collect();
        let neg = (0..n).map(|x| (n - x) % n).collect();
        Self::new(carrier, add, mul, 0, neg)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.carrier.len() + y]
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.carrier.len() + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// The ring as singleton hyperoperations.
    pub fn to_hv(&self) -> HvRing {
        let c = self.carrier.clone();
        HvRing::new(
            HyperOp::from_binary(c.clone(), |x, y| self.add(x, y)).expect("valid table"),
            HyperOp::from_binary(c, |x, y| self.mul(x, y)).expect("valid table"),
        )
        .expect("shared carrier")
    }
}

/// A finite module over an [`OrdRing`], given by single-valued tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdModule {
    ring: OrdRing,
    carrier: Carrier,
    add: Vec<usize>,
    zero: usize,
    neg: Vec<usize>,
    action: Vec<usize>,
}

impl OrdModule {
    pub fn new(
        ring: OrdRing,
        carrier: Carrier,
        add: Vec<usize>,
        zero: usize,
        neg: Vec<usize>,
        action: Vec<usize>,
    ) -> Result<Self> {
        let m = Self::from_tables(ring, carrier, add, zero, neg, action)?;
        let report = Verifier::default().validate_ord_module(&m);
        if !report.passed {
            return Err(Error::AxiomsFailed {
                what: "ordinary module".into(),
                report: Box::new(report),
            });
        }
        Ok(m)
    }

    pub fn from_tables(
        ring: OrdRing,
        carrier: Carrier,
        add: Vec<usize>,
        zero: usize,
        neg: Vec<usize>,
        action: Vec<usize>,
    ) -> Result<Self> {
        let n = carrier.len();
        check_binary("module addition", &add, n)?;
        check_unary("module negation", &neg, zero, n)?;
        if action.len() != ring.carrier.len() * n || action.iter().any(|&v| v >= n) {
            return Err(Error::InvalidTable("action table is malformed".into()));
        }
        Ok(Self {
            ring,
            carrier,
            add,
            zero,
            neg,
            action,
        })
    }

    /// A ring regarded as a module over itself.
    pub fn regular(ring: &OrdRing) -> Self {
        Self {
            ring: ring.clone(),
            carrier: ring.carrier.clone(),
            add: ring.add.clone(),
            zero: ring.zero,
            neg: ring.neg.clone(),
            action: ring.mul.clone(),
        }
    }

    pub fn ring(&self) -> &OrdRing {
        &self.ring
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.carrier.len() + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn act(&self, r: usize, x: usize) -> usize {
        self.action[r * self.carrier.len() + x]
    }

    /// The module as singleton hyperoperations over [`OrdRing::to_hv`].
    pub fn to_hv(&self) -> HvModule {
        let c = self.carrier.clone();
        let add = HyperOp::from_binary(c.clone(), |x, y| self.add(x, y)).expect("valid table");
        let action = HyperAction::from_fn(self.ring.carrier.clone(), c, |r, x| {
            Subset::singleton(self.act(r, x))
        })
        .expect("valid table");
        HvModule::new(self.ring.to_hv(), add, action).expect("shared carriers")
    }
}

/// `classes[v]` is the level class `{t | μ(t) = μ(v)}`.
pub fn level_classes<G: Grade>(mu: &FuzzySet<G>) -> Vec<Subset> {
    let n = mu.carrier().len();
    (0..n)
        .map(|v| (0..n).filter(|&t| mu.grade(t) == mu.grade(v)).collect())
        .collect()
}

/// `a∘b = {t | μ_B(t) = μ_B(a+b)}`, `a*b = {t | μ_B(t) = μ_B(ab)}`.
pub fn induce_hv_ring<G: Grade>(r: &OrdRing, mu_b: &FuzzySet<G>) -> Result<HvRing> {
    if mu_b.carrier() != r.carrier() {
        return Err(Error::CarrierMismatch(
            "fuzzy set is not on the ring carrier".into(),
        ));
    }
    let class = level_classes(mu_b);
    let c = r.carrier().clone();
    HvRing::new(
        HyperOp::from_fn(c.clone(), |a, b| class[r.add(a, b)])?,
        HyperOp::from_fn(c, |a, b| class[r.mul(a, b)])?,
    )
}

/// `x⊕y = {s | μ_A(s) = μ_A(x+y)}`, `r⊙x = {s | μ_A(s) = μ_A(r·x)}`, over
/// the given (normally induced) H_v-ring on the same scalar carrier.
pub fn induce_hv_module<G: Grade>(
    m: &OrdModule,
    mu_a: &FuzzySet<G>,
    ring: &HvRing,
) -> Result<HvModule> {
    if mu_a.carrier() != m.carrier() {
        return Err(Error::CarrierMismatch(
            "fuzzy set is not on the module carrier".into(),
        ));
    }
    if ring.carrier() != m.ring().carrier() {
        return Err(Error::CarrierMismatch(
            "H_v-ring carrier differs from the module's scalar ring".into(),
        ));
    }
    let class = level_classes(mu_a);
    let c = m.carrier().clone();
    let add = HyperOp::from_fn(c.clone(), |x, y| class[m.add(x, y)])?;
    let action = HyperAction::from_fn(ring.carrier().clone(), c, |r, x| class[m.act(r, x)])?;
    HvModule::new(ring.clone(), add, action)
}

impl Verifier {
    pub fn validate_ord_ring(&self, r: &OrdRing) -> AxiomReport {
        let n = r.carrier.len();
        let z = r.zero;
        let v = self.scan(n, |x, sink| {
            if r.add(x, z) != x || r.add(z, x) != x {
                sink.record(Violation::new("additive identity", vec![x]));
            }
            if r.add(x, r.neg(x)) != z {
                sink.record(Violation::new("additive inverse", vec![x]));
            }
            for y in 0..n {
                if r.add(x, y) != r.add(y, x) {
                    sink.record(Violation::new("additive commutativity", vec![x, y]));
                }
                for w in 0..n {
                    if r.add(r.add(x, y), w) != r.add(x, r.add(y, w)) {
                        sink.record(Violation::new("additive associativity", vec![x, y, w]));
                    }
                    if r.mul(r.mul(x, y), w) != r.mul(x, r.mul(y, w)) {
                        sink.record(Violation::new(
                            "multiplicative associativity",
                            vec![x, y, w],
                        ));
                    }
                    if r.mul(x, r.add(y, w)) != r.add(r.mul(x, y), r.mul(x, w)) {
                        sink.record(Violation::new("left distributivity", vec![x, y, w]));
                    }
                    if r.mul(r.add(x, y), w) != r.add(r.mul(x, w), r.mul(y, w)) {
                        sink.record(Violation::new("right distributivity", vec![x, y, w]));
                    }
                }
            }
        });
        AxiomReport::from_violations(v, self.witness_cap)
    }

    /// All classical module axioms by exhaustion, including those of the ring.
    pub fn validate_ord_module(&self, m: &OrdModule) -> AxiomReport {
        let ring = &m.ring;
        let (rn, n, z) = (ring.carrier.len(), m.carrier.len(), m.zero);
        let group = self.scan(n, |x, sink| {
            if m.add(x, z) != x || m.add(z, x) != x {
                sink.record(Violation::new("module additive identity", vec![x]));
            }
            if m.add(x, m.neg(x)) != z {
                sink.record(Violation::new("module additive inverse", vec![x]));
            }
            for y in 0..n {
                if m.add(x, y) != m.add(y, x) {
                    sink.record(Violation::new("module additive commutativity", vec![x, y]));
                }
                for w in 0..n {
                    if m.add(m.add(x, y), w) != m.add(x, m.add(y, w)) {
                        sink.record(Violation::new(
                            "module additive associativity",
                            vec![x, y, w],
                        ));
                    }
                }
            }
        });
        let action = self.scan(rn, |r, sink| {
            for x in 0..n {
                for y in 0..n {
                    if m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y)) {
                        sink.record(Violation::new("r·(x+y) = r·x+r·y", vec![r, x, y]));
                    }
                }
                for s in 0..rn {
                    if m.act(ring.add(r, s), x) != m.add(m.act(r, x), m.act(s, x)) {
                        sink.record(Violation::new("(r+s)·x = r·x+s·x", vec![r, s, x]));
                    }
                    if m.act(ring.mul(r, s), x) != m.act(r, m.act(s, x)) {
                        sink.record(Violation::new("(rs)·x = r·(s·x)", vec![r, s, x]));
                    }
                }
            }
        });
        let cap = self.witness_cap;
        self.validate_ord_ring(ring)
            .and(AxiomReport::from_violations(group, cap), cap)
            .and(AxiomReport::from_violations(action, cap), cap)
    }

    /// Fuzzy submodule of an ordinary module: `μ(0) = 1`,
    /// `min{μ(x), μ(y)} ≤ μ(x−y)`, `μ(x) ≤ μ(rx)`.
    pub fn check_fuzzy_submodule_classical<G: Grade>(
        &self,
        m: &OrdModule,
        mu: &FuzzySet<G>,
    ) -> Result<AxiomReport> {
        if mu.carrier() != m.carrier() {
            return Err(Error::CarrierMismatch(
                "fuzzy set is not on the module".into(),
            ));
        }
        let mut head = Vec::new();
        if *mu.grade(m.zero) != G::one() {
            head.push(Violation::new("μ(0) = 1", vec![m.zero]));
        }
        let body = self.membership_conditions(m, mu, "");
        let mut all = head;
        all.extend(body);
        all.truncate(self.witness_cap.max(1));
        Ok(AxiomReport::from_violations(all, self.witness_cap.max(1)))
    }

    fn membership_conditions<G: Grade>(
        &self,
        m: &OrdModule,
        mu: &FuzzySet<G>,
        tag: &str,
    ) -> Vec<Violation> {
        let (rn, n) = (m.ring.carrier.len(), m.carrier.len());
        self.scan(n, |x, sink| {
            for y in 0..n {
                if gmin(mu.grade(x), mu.grade(y)) > *mu.grade(m.sub(x, y)) {
                    sink.record(Violation::new(
                        format!("{tag}min{{μ(x),μ(y)}} ≤ μ(x−y)"),
                        vec![x, y],
                    ));
                }
            }
            for r in 0..rn {
                if mu.grade(x) > mu.grade(m.act(r, x)) {
                    sink.record(Violation::new(format!("{tag}μ(x) ≤ μ(r·x)"), vec![r, x]));
                }
            }
        })
    }

    /// Intuitionistic fuzzy submodule of an ordinary module: the three
    /// membership conditions plus `λ(0) = 0`, `λ(x−y) ≤ max{λ(x), λ(y)}`,
    /// `λ(rx) ≤ λ(x)`.
    pub fn check_if_submodule_classical<G: Grade>(
        &self,
        m: &OrdModule,
        a: &IfSet<G>,
    ) -> Result<AxiomReport> {
        if a.carrier() != m.carrier() {
            return Err(Error::CarrierMismatch("IF set is not on the module".into()));
        }
        let (mu, lambda) = (a.mu(), a.lambda());
        let (rn, n) = (m.ring.carrier.len(), m.carrier.len());
        let mut all = Vec::new();
        if *mu.grade(m.zero) != G::one() {
            all.push(Violation::new("(1) μ(0) = 1", vec![m.zero]));
        }
        all.extend(self.membership_conditions(m, mu, ""));
        if *lambda.grade(m.zero) != G::zero() {
            all.push(Violation::new("(4) λ(0) = 0", vec![m.zero]));
        }
        all.extend(self.scan(n, |x, sink| {
            for y in 0..n {
                if *lambda.grade(m.sub(x, y)) > gmax(lambda.grade(x), lambda.grade(y)) {
                    sink.record(Violation::new("(5) λ(x−y) ≤ max{λ(x),λ(y)}", vec![x, y]));
                }
            }
            for r in 0..rn {
                if lambda.grade(m.act(r, x)) > lambda.grade(x) {
                    sink.record(Violation::new("(6) λ(r·x) ≤ λ(x)", vec![r, x]));
                }
            }
        }));
        all.truncate(self.witness_cap.max(1));
        Ok(AxiomReport::from_violations(all, self.witness_cap.max(1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzy::Q;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn z4_module() -> OrdModule {
        OrdModule::regular(&OrdRing::zn(4).unwrap())
    }

    fn mu_z4() -> FuzzySet {
        FuzzySet::new(
            Carrier::range(4).unwrap(),
            vec![q(1, 1), q(3, 10), q(7, 10), q(3, 10)],
        )
        .unwrap()
    }

    #[test]
    fn zn_modules_validate() {
        let v = Verifier::default();
        for n in 1..=6 {
            assert!(
                v.validate_ord_module(&OrdModule::regular(&OrdRing::zn(n).unwrap()))
                    .passed
            );
        }
    }

    #[test]
    fn planted_non_distributive_action_fails() {
        let m = z4_module();
        let mut action = m.action.clone();
        // 1·1 := 2
        action[4 + 1] = 2;
        let bad = OrdModule::from_tables(
            m.ring.clone(),
            m.carrier.clone(),
            m.add.clone(),
            0,
            m.neg.clone(),
            action,
        )
        .unwrap();
        let report = Verifier::default().validate_ord_module(&bad);
        assert!(!report.passed);
        // brute-force oracle: first failing triple of r·(x+y) = r·x + r·y
        let mut first = None;
        'outer: for x in 0..4 {
            for y in 0..4 {
                if bad.act(1, bad.add(x, y)) != bad.add(bad.act(1, x), bad.act(1, y)) {
                    first = Some(vec![1, x, y]);
                    break 'outer;
                }
            }
        }
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == "r·(x+y) = r·x+r·y" && Some(&v.witness) == first.as_ref()));
        assert!(matches!(
            OrdModule::new(
                m.ring.clone(),
                m.carrier.clone(),
                m.add.clone(),
                0,
                m.neg.clone(),
                bad.action
            ),
            Err(Error::AxiomsFailed { .. })
        ));
    }

    #[test]
    fn constant_grade_induces_total_ops() {
        let r = OrdRing::zn(3).unwrap();
        let c = FuzzySet::constant(r.carrier().clone(), q(1, 2)).unwrap();
        let hv = induce_hv_ring(&r, &c).unwrap();
        assert!(hv.add.table().iter().all(|&s| s == Subset::full(3)));
        assert!(hv.mul.table().iter().all(|&s| s == Subset::full(3)));
        let m = induce_hv_module(&OrdModule::regular(&r), &c, &hv).unwrap();
        assert!(m.action.table().iter().all(|&s| s == Subset::full(3)));
    }

    #[test]
    fn injective_grade_induces_singletons() {
        let r = OrdRing::zn(4).unwrap();
        let inj = FuzzySet::new(
            r.carrier().clone(),
            vec![q(0, 1), q(1, 3), q(2, 3), q(1, 1)],
        )
        .unwrap();
        let hv = induce_hv_ring(&r, &inj).unwrap();
        assert_eq!(hv, r.to_hv());
        let m = induce_hv_module(&OrdModule::regular(&r), &inj, &hv).unwrap();
        assert_eq!(m, OrdModule::regular(&r).to_hv());
    }

    #[test]
    fn graded_z4_table_entries() {
        let r = OrdRing::zn(4).unwrap();
        let ring = induce_hv_ring(&r, &mu_z4()).unwrap();
        assert_eq!(ring.add.get(1, 2), Subset::from_indices([1, 3]));
        let m = induce_hv_module(&OrdModule::regular(&r), &mu_z4(), &ring).unwrap();
        assert_eq!(m.act(3, 3), Subset::from_indices([1, 3]));
        assert_eq!(
            m.add
                .hyper_extend(Subset::singleton(1), Subset::singleton(2))
                .unwrap(),
            Subset::from_indices([1, 3])
        );
    }

    #[test]
    fn classical_fuzzy_submodule() {
        let m = z4_module();
        let v = Verifier::default();
        let mu = FuzzySet::new(
            m.carrier().clone(),
            vec![q(1, 1), q(1, 4), q(1, 2), q(1, 4)],
        )
        .unwrap();
        assert!(v.check_fuzzy_submodule_classical(&m, &mu).unwrap().passed);
        let one = FuzzySet::constant(m.carrier().clone(), q(1, 1)).unwrap();
        assert!(v.check_fuzzy_submodule_classical(&m, &one).unwrap().passed);
        let chi: FuzzySet =
            FuzzySet::characteristic(m.carrier().clone(), Subset::from_indices([0, 2])).unwrap();
        assert!(v.check_fuzzy_submodule_classical(&m, &chi).unwrap().passed);
        // 2 ↦ 1/4, 1 ↦ 1/2 makes μ(1) > μ(2·1)
        let bad = FuzzySet::new(
            m.carrier().clone(),
            vec![q(1, 1), q(1, 2), q(1, 4), q(1, 2)],
        )
        .unwrap();
        assert!(!v.check_fuzzy_submodule_classical(&m, &bad).unwrap().passed);
    }

    #[test]
    fn classical_if_submodule() {
        let m = z4_module();
        let v = Verifier::default();
        let c = m.carrier().clone();
        let full = IfSet::constant(c.clone(), q(1, 1), q(0, 1)).unwrap();
        assert!(v.check_if_submodule_classical(&m, &full).unwrap().passed);

        let mu = FuzzySet::new(c.clone(), vec![q(1, 1), q(1, 4), q(1, 2), q(1, 4)]).unwrap();
        let lambda = FuzzySet::from_fn(c.clone(), |i| (q(1, 1) - *mu.grade(i)) / 2).unwrap();
        let a = IfSet::new(mu.clone(), lambda).unwrap();
        // λ = (0, 3/8, 1/4, 3/8): lower cuts {0}, {0,2}, Z_4 are all submodules
        assert!(v.check_if_submodule_classical(&m, &a).unwrap().passed);

        // λ(0) > 0 forces μ(0) < 1 as well
        let mu = FuzzySet::new(c.clone(), vec![q(1, 2), q(1, 4), q(1, 2), q(1, 4)]).unwrap();
        let bad = IfSet::new(mu, FuzzySet::constant(c, q(1, 10)).unwrap()).unwrap();
        let r = v.check_if_submodule_classical(&m, &bad).unwrap();
        assert!(!r.passed);
        assert!(r.axioms_violated().contains(&"(4) λ(0) = 0"));
    }
}
