//! Finite hyperoperations and the H_v axiom systems.
//!
//! A hyperoperation is stored as a dense `n × n` table of non-empty
//! [`Subset`]s; the external action of a ring on a module is an `|R| × |M|`
//! table. All axiom checks are exhaustive scans driven by [`Verifier`].

use crate::carrier::{Carrier, Subset};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Violation};
use crate::verifier::Verifier;

/// A total map from element pairs to non-empty subsets of one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperOp {
    carrier: Carrier,
    table: Vec<Subset>,
}

impl HyperOp {
    pub fn new(carrier: Carrier, table: Vec<Subset>) -> Result<Self> {
        let n = carrier.len();
        if table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "hyperoperation table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        let full = carrier.full();
        for (k, entry) in table.iter().enumerate() {
            let (x, y) = (k / n, k % n);
            if entry.is_empty() {
                return Err(Error::InvalidTable(format!(
                    "empty hyperproduct at ({}, {})",
                    carrier.name(x),
                    carrier.name(y)
                )));
            }
            if !entry.is_subset(full) {
                return Err(Error::InvalidTable(format!(
                    "hyperproduct at ({}, {}) leaves the carrier",
                    carrier.name(x),
                    carrier.name(y)
                )));
            }
        }
        Ok(Self { carrier, table })
    }

    pub fn from_fn(carrier: Carrier, f: impl Fn(usize, usize) -> Subset) -> Result<Self> {
        let n = carrier.len();
        let table = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::new(carrier, table)
    }

    /// Singleton hyperoperation of an ordinary binary operation.
    pub fn from_binary(carrier: Carrier, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::from_fn(carrier, |x, y| Subset::singleton(f(x, y)))
    }

    /// Every product is the whole carrier.
    pub fn total(carrier: Carrier) -> Self {
        let n = carrier.len();
        let table = vec![carrier.full(); n * n];
        Self { carrier, table }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Subset {
        self.table[x * self.carrier.len() + y]
    }

    /// `A*B`, the union of `a*b` over `a ∈ A`, `b ∈ B`.
    pub fn hyper_extend(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.carrier.check_subset(a)?;
        self.carrier.check_subset(b)?;
        Ok(self.product(a, b))
    }

    #[inline]
    pub(crate) fn product(&self, a: Subset, b: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.get(x, y));
            }
        }
        out
    }

    /// True when every entry is a singleton.
    pub fn is_single_valued(&self) -> bool {
        self.table.iter().all(|s| s.len() == 1)
    }
}

/// External hyperoperation `R × M → P*(M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperAction {
    scalars: Carrier,
    points: Carrier,
    table: Vec<Subset>,
}

impl HyperAction {
    pub fn new(scalars: Carrier, points: Carrier, table: Vec<Subset>) -> Result<Self> {
        let (r, m) = (scalars.len(), points.len());
        if table.len() != r * m {
            return Err(Error::InvalidTable(format!(
                "action table has {} entries, expected {}",
                table.len(),
                r * m
            )));
        }
        let full = points.full();
        for (k, entry) in table.iter().enumerate() {
            if entry.is_empty() || !entry.is_subset(full) {
                return Err(Error::InvalidTable(format!(
                    "action entry at ({}, {}) is {}",
                    scalars.name(k / m),
                    points.name(k % m),
                    if entry.is_empty() {
                        "an empty hyperproduct"
                    } else {
                        "outside the module carrier"
                    }
                )));
            }
        }
        Ok(Self {
            scalars,
            points,
            table,
        })
    }

    pub fn from_fn(
        scalars: Carrier,
        points: Carrier,
        f: impl Fn(usize, usize) -> Subset,
    ) -> Result<Self> {
        let m = points.len();
        let table = (0..scalars.len() * m).map(|k| f(k / m, k % m)).collect();
        Self::new(scalars, points, table)
    }

    pub fn total(scalars: Carrier, points: Carrier) -> Self {
        let table = vec![points.full(); scalars.len() * points.len()];
        Self {
            scalars,
            points,
            table,
        }
    }

    pub fn scalars(&self) -> &Carrier {
        &self.scalars
    }

    pub fn points(&self) -> &Carrier {
        &self.points
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    #[inline]
    pub fn get(&self, r: usize, x: usize) -> Subset {
        self.table[r * self.points.len() + x]
    }

    /// `W·U`, the union of `r·x` over `r ∈ W`, `x ∈ U`.
    pub fn hyper_extend(&self, w: Subset, u: Subset) -> Result<Subset> {
        self.scalars.check_subset(w)?;
        self.points.check_subset(u)?;
        Ok(self.product(w, u))
    }

    #[inline]
    pub(crate) fn product(&self, w: Subset, u: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for r in w {
            for x in u {
                out = out.union(self.get(r, x));
            }
        }
        out
    }
}

/// `(R, +, ·)` with two hyperoperations on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HvRing {
    pub add: HyperOp,
    pub mul: HyperOp,
}

impl HvRing {
    pub fn new(add: HyperOp, mul: HyperOp) -> Result<Self> {
        if add.carrier() != mul.carrier() {
            return Err(Error::CarrierMismatch(
                "ring addition and multiplication use different carriers".into(),
            ));
        }
        Ok(Self { add, mul })
    }

    pub fn carrier(&self) -> &Carrier {
        self.add.carrier()
    }
}

/// A module carrier with additive hyperoperation and a hyperaction of an H_v-ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HvModule {
    pub ring: HvRing,
    pub add: HyperOp,
    pub action: HyperAction,
}

impl HvModule {
    pub fn new(ring: HvRing, add: HyperOp, action: HyperAction) -> Result<Self> {
        if action.scalars() != ring.carrier() {
            return Err(Error::CarrierMismatch(
                "action scalars differ from the ring carrier".into(),
            ));
        }
        if action.points() != add.carrier() {
            return Err(Error::CarrierMismatch(
                "action points differ from the module carrier".into(),
            ));
        }
        Ok(Self { ring, add, action })
    }

    pub fn carrier(&self) -> &Carrier {
        self.add.carrier()
    }

    /// `r·x`
    #[inline]
    pub fn act(&self, r: usize, x: usize) -> Subset {
        self.action.get(r, x)
    }

    /// `x+y`
    #[inline]
    pub fn sum(&self, x: usize, y: usize) -> Subset {
        self.add.get(x, y)
    }
}

impl Verifier {
    /// `(x*(y*z)) ∩ ((x*y)*z) ≠ ∅` for all triples.
    pub fn check_weak_associative(&self, op: &HyperOp) -> AxiomReport {
        let n = op.carrier().len();
        let v = self.scan(n, |x, sink| {
            let sx = Subset::singleton(x);
            for y in 0..n {
                let xy = op.get(x, y);
                for z in 0..n {
                    let left = op.product(sx, op.get(y, z));
                    let right = op.product(xy, Subset::singleton(z));
                    if !left.meets(right) {
                        sink.record(Violation::new("weak associativity", vec![x, y, z]));
                    }
                }
            }
        });
        AxiomReport::from_violations(v, self.witness_cap)
    }

    /// `a*H = H*a = H` for every `a`.
    pub fn check_reproduction(&self, op: &HyperOp) -> AxiomReport {
        let c = op.carrier();
        let n = c.len();
        let full = c.full();
        let v = self.scan(n, |a, sink| {
            let sa = Subset::singleton(a);
            let row = op.product(sa, full);
            let col = op.product(full, sa);
            if row != full {
                sink.record(
                    Violation::new("reproduction (left)", vec![a]).with_note(format!(
                        "{}+H={}≠H",
                        c.name(a),
                        c.render(row)
                    )),
                );
            }
            if col != full {
                sink.record(
                    Violation::new("reproduction (right)", vec![a]).with_note(format!(
                        "H+{}={}≠H",
                        c.name(a),
                        c.render(col)
                    )),
                );
            }
        });
        AxiomReport::from_violations(v, self.witness_cap)
    }

    pub fn check_hv_group(&self, op: &HyperOp) -> AxiomReport {
        self.check_weak_associative(op)
            .and(self.check_reproduction(op), self.witness_cap)
    }

    /// `(x*y) ∩ (y*x) ≠ ∅` for all pairs.
    pub fn check_weak_commutative(&self, op: &HyperOp) -> AxiomReport {
        let n = op.carrier().len();
        let v = self.scan(n, |x, sink| {
            for y in 0..n {
                if !op.get(x, y).meets(op.get(y, x)) {
                    sink.record(Violation::new("weak commutativity", vec![x, y]));
                }
            }
        });
        AxiomReport::from_violations(v, self.witness_cap)
    }

    pub fn check_hv_ring(&self, ring: &HvRing) -> AxiomReport {
        let (add, mul) = (&ring.add, &ring.mul);
        let n = ring.carrier().len();
        let distributive = self.scan(n, |x, sink| {
            let sx = Subset::singleton(x);
            for y in 0..n {
                for z in 0..n {
                    let sz = Subset::singleton(z);
                    let lhs = mul.product(sx, add.get(y, z));
                    let rhs = add.product(mul.get(x, y), mul.get(x, z));
                    if !lhs.meets(rhs) {
                        sink.record(Violation::new("weak left distributivity", vec![x, y, z]));
                    }
                    let lhs = mul.product(add.get(x, y), sz);
                    let rhs = add.product(mul.get(x, z), mul.get(y, z));
                    if !lhs.meets(rhs) {
                        sink.record(Violation::new("weak right distributivity", vec![x, y, z]));
                    }
                }
            }
        });
        let cap = self.witness_cap;
        self.check_hv_group(add)
            .and(self.check_weak_associative(mul), cap)
            .and(AxiomReport::from_violations(distributive, cap), cap)
    }

    /// Checks the module axioms; the ring must already be an H_v-ring.
    pub fn check_hv_module(&self, m: &HvModule) -> Result<AxiomReport> {
        let ring_report = self.check_hv_ring(&m.ring);
        if !ring_report.passed {
            return Err(Error::precondition_with(
                "scalar ring is not an H_v-ring",
                ring_report,
            ));
        }
        let rn = m.ring.carrier().len();
        let n = m.carrier().len();
        let (radd, rmul) = (&m.ring.add, &m.ring.mul);
        let action = &m.action;
        let axioms = self.scan(rn, |a, sink| {
            let sa = Subset::singleton(a);
            for x in 0..n {
                let sx = Subset::singleton(x);
                for y in 0..n {
                    let lhs = action.product(sa, m.sum(x, y));
                    let rhs = m.add.product(m.act(a, x), m.act(a, y));
                    if !lhs.meets(rhs) {
                        sink.record(Violation::new("a·(x+y) ∩ (a·x+a·y)", vec![a, x, y]));
                    }
                }
                for b in 0..rn {
                    let lhs = action.product(radd.get(a, b), sx);
                    let rhs = m.add.product(m.act(a, x), m.act(b, x));
                    if !lhs.meets(rhs) {
                        sink.record(Violation::new("(a+b)·x ∩ (a·x+b·x)", vec![a, b, x]));
                    }
                    let lhs = action.product(rmul.get(a, b), sx);
                    let rhs = action.product(sa, m.act(b, x));
                    if !lhs.meets(rhs) {
                        sink.record(Violation::new("(ab)·x ∩ a·(b·x)", vec![a, b, x]));
                    }
                }
            }
        });
        let cap = self.witness_cap;
        Ok(self
            .check_hv_group(&m.add)
            .and(self.check_weak_commutative(&m.add), cap)
            .and(AxiomReport::from_violations(axioms, cap), cap))
    }
}
