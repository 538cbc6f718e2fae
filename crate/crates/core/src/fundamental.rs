//! Fundamental relations of H_v-rings and H_v-modules, the classical
//! quotients they produce, and the projection of IF sets onto them.
//!
//! Expression values are computed as a least fixpoint over bitmask subsets.
//! Singletons are admitted as expressions, so co-membership is reflexive;
//! the fundamental relation is its transitive closure.

use std::collections::HashMap;

use crate::carrier::{Carrier, Subset};
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySet, Grade, IfSet};
use crate::hyper::{HvModule, HvRing};
use crate::induce::{OrdModule, OrdRing};
use crate::report::{SubmoduleCertificate, Violation};
use crate::verifier::Verifier;

/// How a family value was first produced. Indices refer to the family
/// holding the value, except the scalar operand of `Act`, which indexes the
/// ring family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Leaf(usize),
    Sum(usize, usize),
    Product(usize, usize),
    Act(usize, usize),
}

/// An explicit expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Leaf(usize),
    Sum(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    /// Scalar expression acting on a module expression.
    Act(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Value over a ring: `+` and `·` only.
    pub fn eval_ring(&self, r: &HvRing) -> Result<Subset> {
        Ok(match self {
            Expr::Leaf(x) => Subset::singleton(*x),
            Expr::Sum(a, b) => r.add.product(a.eval_ring(r)?, b.eval_ring(r)?),
            Expr::Product(a, b) => r.mul.product(a.eval_ring(r)?, b.eval_ring(r)?),
            Expr::Act(..) => {
                return Err(Error::Structural(
                    "external action in a ring expression".into(),
                ))
            }
        })
    }

    /// Value over a module: sums of module expressions and ring expressions
    /// acting on them.
    pub fn eval_module(&self, m: &HvModule) -> Result<Subset> {
        Ok(match self {
            Expr::Leaf(x) => Subset::singleton(*x),
            Expr::Sum(a, b) => m.add.product(a.eval_module(m)?, b.eval_module(m)?),
            Expr::Act(w, u) => m.action.product(w.eval_ring(&m.ring)?, u.eval_module(m)?),
            Expr::Product(..) => {
                return Err(Error::Structural(
                    "ring product in a module expression".into(),
                ))
            }
        })
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Leaf(_) => 0,
            Expr::Sum(a, b) | Expr::Product(a, b) | Expr::Act(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// All values of finite expressions over a carrier, with the provenance of
/// each. Contains every singleton; values are in discovery order.
#[derive(Clone, Debug)]
pub struct ExpressionFamily {
    base: Carrier,
    values: Vec<Subset>,
    origins: Vec<Origin>,
}

impl ExpressionFamily {
    pub fn base(&self) -> &Carrier {
        &self.base
    }

    pub fn values(&self) -> &[Subset] {
        &self.values
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.values.contains(&s)
    }

    /// Values in ascending bitmask order.
    pub fn sorted_values(&self) -> Vec<Subset> {
        let mut v = self.values.clone();
        v.sort();
        v
    }

    /// The expression tree recorded for value `i`. `ring` supplies trees
    /// for scalar operands and is required for module families.
    pub fn expr(&self, i: usize, ring: Option<&ExpressionFamily>) -> Result<Expr> {
        Ok(match self.origins[i] {
            Origin::Leaf(x) => Expr::Leaf(x),
            Origin::Sum(a, b) => {
                Expr::Sum(Box::new(self.expr(a, ring)?), Box::new(self.expr(b, ring)?))
            }
            Origin::Product(a, b) => {
                Expr::Product(Box::new(self.expr(a, ring)?), Box::new(self.expr(b, ring)?))
            }
            Origin::Act(w, u) => {
                let ring =
                    ring.ok_or_else(|| Error::Structural("scalar family required".into()))?;
                Expr::Act(
                    Box::new(ring.expr(w, None)?),
                    Box::new(self.expr(u, Some(ring))?),
                )
            }
        })
    }

    /// Partition into the classes of the transitive closure of co-membership.
    pub fn partition(&self) -> Partition {
        let mut blocks: Vec<Subset> = Vec::new();
        for &v in &self.values {
            let mut merged = v;
            blocks.retain(|&b| {
                if b.meets(merged) {
                    merged = merged.union(b);
                    false
                } else {
                    true
                }
            });
            blocks.push(merged);
        }
        Partition::from_blocks(self.base.clone(), blocks)
    }
}

/// A binary operation on values, tagged with how its results are recorded.
type BinaryStep<'a> = (
    fn(usize, usize) -> Origin,
    &'a dyn Fn(Subset, Subset) -> Subset,
);

/// Worklist fixpoint: every pair `(i, j)` with `j ≤ i` is combined once, in
/// both orders, under each binary operation; `unary` extends each new value.
fn closure(
    base: &Carrier,
    binary: &[BinaryStep],
    unary: &dyn Fn(Subset) -> Vec<(usize, Subset)>,
) -> ExpressionFamily {
    let n = base.len();
    let mut values: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    let mut origins: Vec<Origin> = (0..n).map(Origin::Leaf).collect();
    let mut index: HashMap<Subset, usize> =
        values.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut push = |v: Subset, o: Origin, values: &mut Vec<Subset>, origins: &mut Vec<Origin>| {
        index.entry(v).or_insert_with(|| {
            values.push(v);
            origins.push(o);
            values.len() - 1
        });
    };
    let mut i = 0;
    while i < values.len() {
        for j in 0..=i {
            for (origin, op) in binary {
                let (vi, vj) = (values[i], values[j]);
                push(op(vi, vj), origin(i, j), &mut values, &mut origins);
                push(op(vj, vi), origin(j, i), &mut values, &mut origins);
            }
        }
        for (w, v) in unary(values[i]) {
            push(v, Origin::Act(w, i), &mut values, &mut origins);
        }
        i += 1;
    }
    ExpressionFamily {
        base: base.clone(),
        values,
        origins,
    }
}

/// An exact cover of a carrier by disjoint non-empty blocks, ordered by
/// least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    base: Carrier,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl Partition {
    fn from_blocks(base: Carrier, mut blocks: Vec<Subset>) -> Self {
        blocks.sort_by_key(|b: &Subset| Subset::min(*b));
        let mut block_of = vec![0; base.len()];
        for (k, b) in blocks.iter().enumerate() {
            for x in b.iter() {
                block_of[x] = k;
            }
        }
        Self {
            base,
            blocks,
            block_of,
        }
    }

    pub fn base(&self) -> &Carrier {
        &self.base
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    /// Name of a block: the name of its least element.
    pub fn block_name(&self, k: usize) -> &str {
        self.base
            .name(self.blocks[k].min().expect("blocks are non-empty"))
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.base.len()
    }

    /// Carrier of the quotient, one element per block.
    pub fn quotient_carrier(&self) -> Result<Carrier> {
        Carrier::new((0..self.len()).map(|k| self.block_name(k).to_string()))
    }

    /// Blocks as lists of element names.
    pub fn named_blocks(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|x| self.base.name(x).to_string()).collect())
            .collect()
    }
}

/// A fundamental quotient module over its fundamental quotient ring.
#[derive(Clone, Debug)]
pub struct FundamentalModule {
    pub ring_partition: Partition,
    pub module_partition: Partition,
    pub quotient: OrdModule,
    /// Index of the zero block of the quotient.
    pub core: usize,
}

impl FundamentalModule {
    /// The zero block as a subset of the original carrier.
    pub fn core_block(&self) -> Subset {
        self.module_partition.blocks()[self.core]
    }

    /// Whether the core is the class of the given element.
    pub fn core_is_class_of(&self, x: usize) -> bool {
        self.module_partition.block_of(x) == self.core
    }
}

/// The block holding every element of `s`, if there is exactly one.
fn single_block(p: &Partition, s: Subset) -> Option<usize> {
    let k = p.block_of(s.min()?);
    s.is_subset(p.blocks()[k]).then_some(k)
}

fn quotient_table(
    p: &Partition,
    rows: &Partition,
    what: &str,
    op: impl Fn(Subset, Subset) -> Subset,
) -> Result<Vec<usize>> {
    let mut table = Vec::with_capacity(rows.len() * p.len());
    for (i, &a) in rows.blocks().iter().enumerate() {
        for (j, &b) in p.blocks().iter().enumerate() {
            let value = op(a, b);
            let k = single_block(p, value).ok_or_else(|| {
                Error::SingleValuedness(format!(
                    "{what} of blocks {} and {} spans {}",
                    rows.block_name(i),
                    p.block_name(j),
                    p.base().render(value)
                ))
            })?;
            table.push(k);
        }
    }
    Ok(table)
}

/// Additive identity and negation table of a single-valued quotient addition.
fn zero_and_negation(add: &[usize], n: usize, what: &str) -> Result<(usize, Vec<usize>)> {
    let zero = (0..n)
        .find(|&z| (0..n).all(|x| add[z * n + x] == x && add[x * n + z] == x))
        .ok_or_else(|| Error::Structural(format!("{what} has no zero")))?;
    let neg = (0..n)
        .map(|x| {
            (0..n)
                .find(|&y| add[x * n + y] == zero)
                .ok_or_else(|| Error::Structural(format!("{what} has no negative")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((zero, neg))
}

fn structural(e: Error) -> Error {
    match e {
        Error::AxiomsFailed { what, report } => Error::Structural(format!(
            "{what} quotient is not classical: {}",
            report.axioms_violated().join(", ")
        )),
        other => other,
    }
}

impl Verifier {
    fn check_closure_size(&self, n: usize) -> Result<()> {
        if n > self.closure_bound {
            return Err(Error::BoundExceeded {
                what: "carrier size for expression closure",
                size: n,
                bound: self.closure_bound,
            });
        }
        Ok(())
    }

    /// Least family of subsets of `R` containing the singletons and closed
    /// under the extended `+` and `·`.
    pub fn expression_closure_ring(&self, r: &HvRing) -> Result<ExpressionFamily> {
        self.check_closure_size(r.carrier().len())?;
        let add = |a, b| r.add.product(a, b);
        let mul = |a, b| r.mul.product(a, b);
        Ok(closure(
            r.carrier(),
            &[(Origin::Sum, &add), (Origin::Product, &mul)],
            &|_| Vec::new(),
        ))
    }

    /// Least family of subsets of `M` containing the singletons, closed
    /// under the extended `+`, and under the action of every value of the
    /// ring family `scalars`.
    pub fn expression_closure_module(
        &self,
        m: &HvModule,
        scalars: &ExpressionFamily,
    ) -> Result<ExpressionFamily> {
        self.check_closure_size(m.carrier().len())?;
        if scalars.base() != m.ring.carrier() {
            return Err(Error::CarrierMismatch(
                "scalar family is not over the module's ring".into(),
            ));
        }
        let add = |a, b| m.add.product(a, b);
        let act = |u: Subset| {
            scalars
                .values()
                .iter()
                .enumerate()
                .map(|(w, &ws)| (w, m.action.product(ws, u)))
                .collect()
        };
        Ok(closure(m.carrier(), &[(Origin::Sum, &add)], &act))
    }

    pub fn gamma_star(&self, r: &HvRing) -> Result<Partition> {
        Ok(self.expression_closure_ring(r)?.partition())
    }

    pub fn epsilon_star(&self, m: &HvModule) -> Result<Partition> {
        let scalars = self.expression_closure_ring(&m.ring)?;
        Ok(self.expression_closure_module(m, &scalars)?.partition())
    }

    /// Quotient ring and module with single-valuedness checked on every
    /// pair of blocks.
    pub fn fundamental_module(&self, m: &HvModule) -> Result<FundamentalModule> {
        let scalars = self.expression_closure_ring(&m.ring)?;
        let rp = scalars.partition();
        let mp = self.expression_closure_module(m, &scalars)?.partition();

        let r_add = quotient_table(&rp, &rp, "ring sum", |a, b| m.ring.add.product(a, b))?;
        let r_mul = quotient_table(&rp, &rp, "ring product", |a, b| m.ring.mul.product(a, b))?;
        let (r_zero, r_neg) = zero_and_negation(&r_add, rp.len(), "fundamental ring")?;
        let ring = OrdRing::new(rp.quotient_carrier()?, r_add, r_mul, r_zero, r_neg)
            .map_err(structural)?;

        let m_add = quotient_table(&mp, &mp, "module sum", |a, b| m.add.product(a, b))?;
        let action = quotient_table(&mp, &rp, "action", |w, u| m.action.product(w, u))?;
        let (core, m_neg) = zero_and_negation(&m_add, mp.len(), "fundamental module")?;
        let quotient = OrdModule::new(ring, mp.quotient_carrier()?, m_add, core, m_neg, action)
            .map_err(structural)?;
        Ok(FundamentalModule {
            ring_partition: rp,
            module_partition: mp,
            quotient,
            core,
        })
    }

    /// `A/ε*`: largest membership and least non-membership over each block,
    /// overridden to `(1, 0)` on the core.
    pub fn project_if<G: Grade>(&self, f: &FundamentalModule, a: &IfSet<G>) -> Result<IfSet<G>> {
        let p = &f.module_partition;
        if a.carrier() != p.base() {
            return Err(Error::CarrierMismatch(
                "IF set is not on the partitioned carrier".into(),
            ));
        }
        let mu = project_sup(f, a.mu())?;
        let lambda = project_inf(f, a.lambda())?;
        IfSet::new(mu, lambda).map_err(|e| Error::Postcondition(format!("projection: {e}")))
    }

    /// Checks, for an IF H_v-submodule `A`: the complement of the projected
    /// complement of `λ` equals the projected `λ`; the projected `μ` is a
    /// fuzzy submodule of the quotient; `A/ε*` is an IF submodule of it.
    pub fn verify_fundamental_theorems<G: Grade>(
        &self,
        m: &HvModule,
        a: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        let pre = self.check_if_hv_submodule(m, a)?;
        if !pre.verdict {
            return Err(Error::precondition(format!(
                "not an intuitionistic fuzzy H_v-submodule: {}",
                pre.violations.first().map_or("", |v| v.axiom.as_str())
            )));
        }
        let f = self.fundamental_module(m)?;
        let projected = self.project_if(&f, a)?;
        let mut cert =
            SubmoduleCertificate::new("fuzzy structure passes to the fundamental module");

        let dual = project_sup(&f, &a.lambda().complement())?.complement();
        let identity = dual == *projected.lambda();
        cert.fact("complement of projected λ^c = projected λ", identity);
        if !identity {
            let blocks = (0..f.module_partition.len())
                .filter(|&k| dual.grade(k) != projected.lambda().grade(k))
                .collect();
            cert.fail(Violation::new(
                "complement of projected λ^c = projected λ",
                blocks,
            ));
        }

        let fuzzy = self.check_fuzzy_submodule_classical(&f.quotient, projected.mu())?;
        cert.fact("projected μ is a fuzzy submodule", fuzzy.passed);
        let intuitionistic = self.check_if_submodule_classical(&f.quotient, &projected)?;
        cert.fact("A/ε* is an IF submodule", intuitionistic.passed);
        for v in fuzzy
            .violations
            .into_iter()
            .chain(intuitionistic.violations)
        {
            cert.fail(v);
        }
        Ok(cert)
    }
}

fn project_sup<G: Grade>(f: &FundamentalModule, mu: &FuzzySet<G>) -> Result<FuzzySet<G>> {
    let p = &f.module_partition;
    FuzzySet::from_fn(p.quotient_carrier()?, |k| {
        if k == f.core {
            G::one()
        } else {
            mu.sup_on(p.blocks()[k]).expect("blocks are non-empty")
        }
    })
}

fn project_inf<G: Grade>(f: &FundamentalModule, lambda: &FuzzySet<G>) -> Result<FuzzySet<G>> {
    let p = &f.module_partition;
    FuzzySet::from_fn(p.quotient_carrier()?, |k| {
        if k == f.core {
            G::zero()
        } else {
            lambda.inf_on(p.blocks()[k]).expect("blocks are non-empty")
        }
    })
}
