//! Fuzzy and intuitionistic fuzzy sets over finite carriers.
//!
//! Grades are generic over [`Grade`]; the default is the exact rational
//! [`Q`], under which every identity checked by this crate holds with plain
//! equality. Suprema and infima over finite sets are maxima and minima.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::Num;

use crate::carrier::{Carrier, Subset};
use crate::error::{Error, Result};
use crate::report::{AxiomReport, Violation};
use crate::verifier::Verifier;

/// Exact rational grade type.
pub type Q = Ratio<i64>;

/// Scalar usable as a membership grade.
pub trait Grade: Num + PartialOrd + Clone + Debug + Send + Sync {
    fn in_unit_interval(&self) -> bool {
        *self >= Self::zero() && *self <= Self::one()
    }
}

impl<T: Num + PartialOrd + Clone + Debug + Send + Sync> Grade for T {}

pub(crate) fn gmin<G: Grade>(a: &G, b: &G) -> G {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub(crate) fn gmax<G: Grade>(a: &G, b: &G) -> G {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// A total map from carrier elements to grades in `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet<G = Q> {
    carrier: Carrier,
    grades: Vec<G>,
}

impl<G: Grade> FuzzySet<G> {
    pub fn new(carrier: Carrier, grades: Vec<G>) -> Result<Self> {
        if grades.len() != carrier.len() {
            return Err(Error::CarrierMismatch(format!(
                "{} grades for a carrier of {} elements",
                grades.len(),
                carrier.len()
            )));
        }
        if let Some(g) = grades.iter().find(|g| !g.in_unit_interval()) {
            return Err(Error::GradeOutOfRange(format!("{g:?}")));
        }
        Ok(Self { carrier, grades })
    }

    pub fn from_fn(carrier: Carrier, f: impl Fn(usize) -> G) -> Result<Self> {
        let grades = (0..carrier.len()).map(f).collect();
        Self::new(carrier, grades)
    }

    pub fn constant(carrier: Carrier, g: G) -> Result<Self> {
        let grades = vec![g; carrier.len()];
        Self::new(carrier, grades)
    }

    /// Characteristic function of `s`.
    pub fn characteristic(carrier: Carrier, s: Subset) -> Result<Self> {
        carrier.check_subset(s)?;
        Self::from_fn(
            carrier,
            |i| if s.contains(i) { G::one() } else { G::zero() },
        )
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn grades(&self) -> &[G] {
        &self.grades
    }

    #[inline]
    pub fn grade(&self, i: usize) -> &G {
        &self.grades[i]
    }

    /// `μ^c(x) = 1 − μ(x)`
    pub fn complement(&self) -> Self {
        Self {
            carrier: self.carrier.clone(),
            grades: self.grades.iter().map(|g| G::one() - g.clone()).collect(),
        }
    }

    /// `U(μ;t) = {x | μ(x) ≥ t}`
    pub fn upper_cut(&self, t: &G) -> Subset {
        self.select(|g| g >= t)
    }

    /// `L(μ;t) = {x | μ(x) ≤ t}`
    pub fn lower_cut(&self, t: &G) -> Subset {
        self.select(|g| g <= t)
    }

    fn select(&self, pred: impl Fn(&G) -> bool) -> Subset {
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| pred(g))
            .map(|(i, _)| i)
            .collect()
    }

    /// Element of `s` attaining the maximum grade on `s` (lowest index on ties).
    pub fn sup_witness(&self, s: Subset) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in s {
            match best {
                Some(b) if self.grades[b] >= self.grades[i] => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Element of `s` attaining the minimum grade on `s` (lowest index on ties).
    pub fn inf_witness(&self, s: Subset) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in s {
            match best {
                Some(b) if self.grades[b] <= self.grades[i] => {}
                _ => best = Some(i),
            }
        }
        best
    }

    /// Maximum grade on `s`, `None` for the empty set.
    pub fn sup_on(&self, s: Subset) -> Option<G> {
        self.sup_witness(s).map(|i| self.grades[i].clone())
    }

    pub fn inf_on(&self, s: Subset) -> Option<G> {
        self.inf_witness(s).map(|i| self.grades[i].clone())
    }

    /// Distinct grades in ascending order.
    pub fn attained(&self) -> Vec<G> {
        let mut out: Vec<G> = Vec::new();
        for g in &self.grades {
            if !out.contains(g) {
                out.push(g.clone());
            }
        }
        out.sort_by(|a, b| a.partial_cmp(b).expect("grades are comparable"));
        out
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    /// `f(μ)(y) = max{μ(x) | f(x) = y}`, or 0 on an empty fiber.
    pub fn image(&self, f: &CarrierMap) -> Result<Self> {
        if f.source() != &self.carrier {
            return Err(Error::CarrierMismatch(
                "fuzzy set is not on the map source".into(),
            ));
        }
        let mut grades = vec![G::zero(); f.target().len()];
        let mut seen = vec![false; f.target().len()];
        for (x, &y) in f.table().iter().enumerate() {
            if !seen[y] || self.grades[x] > grades[y] {
                grades[y] = self.grades[x].clone();
                seen[y] = true;
            }
        }
        Self::new(f.target().clone(), grades)
    }

    /// `f^{-1}(λ)(x) = λ(f(x))`
    pub fn preimage(&self, f: &CarrierMap) -> Result<Self> {
        if f.target() != &self.carrier {
            return Err(Error::CarrierMismatch(
                "fuzzy set is not on the map target".into(),
            ));
        }
        Self::from_fn(f.source().clone(), |x| self.grades[f.apply(x)].clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IfsOp {
    Intersection,
    Union,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modal {
    /// `□A = (μ, μ^c)`
    Necessity,
    /// `◇A = (λ^c, λ)`
    Possibility,
}

/// An intuitionistic fuzzy set: membership `mu` and non-membership `lambda`
/// with `mu(x) + lambda(x) ≤ 1` everywhere.
#[derive(Clone, Debug, PartialEq)]
pub struct IfSet<G = Q> {
    mu: FuzzySet<G>,
    lambda: FuzzySet<G>,
}

impl<G: Grade> IfSet<G> {
    pub fn new(mu: FuzzySet<G>, lambda: FuzzySet<G>) -> Result<Self> {
        if mu.carrier != lambda.carrier {
            return Err(Error::CarrierMismatch(
                "membership and non-membership use different carriers".into(),
            ));
        }
        for (i, (m, l)) in mu.grades.iter().zip(&lambda.grades).enumerate() {
            if m.clone() + l.clone() > G::one() {
                return Err(Error::NotIntuitionistic(i));
            }
        }
        Ok(Self { mu, lambda })
    }

    pub fn constant(carrier: Carrier, mu: G, lambda: G) -> Result<Self> {
        Self::new(
            FuzzySet::constant(carrier.clone(), mu)?,
            FuzzySet::constant(carrier, lambda)?,
        )
    }

    pub fn mu(&self) -> &FuzzySet<G> {
        &self.mu
    }

    pub fn lambda(&self) -> &FuzzySet<G> {
        &self.lambda
    }

    pub fn carrier(&self) -> &Carrier {
        &self.mu.carrier
    }

    pub fn into_parts(self) -> (FuzzySet<G>, FuzzySet<G>) {
        (self.mu, self.lambda)
    }

    /// `A^c = (λ, μ)`
    pub fn complement(&self) -> Self {
        Self {
            mu: self.lambda.clone(),
            lambda: self.mu.clone(),
        }
    }

    pub fn combine(&self, other: &Self, op: IfsOp) -> Result<Self> {
        if self.carrier() != other.carrier() {
            return Err(Error::CarrierMismatch(
                "IF sets on different carriers".into(),
            ));
        }
        let n = self.carrier().len();
        let (mu, lambda): (Vec<G>, Vec<G>) = (0..n)
            .map(|i| {
                let (ma, mb) = (self.mu.grade(i), other.mu.grade(i));
                let (la, lb) = (self.lambda.grade(i), other.lambda.grade(i));
                match op {
                    IfsOp::Intersection => (gmin(ma, mb), gmax(la, lb)),
                    IfsOp::Union => (gmax(ma, mb), gmin(la, lb)),
                }
            })
            .unzip();
        Self::new(
            FuzzySet::new(self.carrier().clone(), mu)?,
            FuzzySet::new(self.carrier().clone(), lambda)?,
        )
    }

    pub fn modal(&self, kind: Modal) -> Self {
        match kind {
            Modal::Necessity => Self {
                mu: self.mu.clone(),
                lambda: self.mu.complement(),
            },
            Modal::Possibility => Self {
                mu: self.lambda.complement(),
                lambda: self.lambda.clone(),
            },
        }
    }

    /// `A ⊆ B` iff `μ_A ≤ μ_B` and `λ_A ≥ λ_B` pointwise.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.mu.le(&other.mu) && other.lambda.le(&self.lambda)
    }

    /// `f^{-1}(B) = (f^{-1}(μ_B), f^{-1}(λ_B))`
    pub fn preimage(&self, f: &CarrierMap) -> Result<Self> {
        Self::new(self.mu.preimage(f)?, self.lambda.preimage(f)?)
    }
}

/// A total function between two carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarrierMap {
    source: Carrier,
    target: Carrier,
    map: Vec<usize>,
}

impl CarrierMap {
    pub fn new(source: Carrier, target: Carrier, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::InvalidTable(format!(
                "map defined on {} of {} source elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&y) = map.iter().find(|&&y| y >= target.len()) {
            return Err(Error::Domain(format!("map value {y} outside the target")));
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn identity(carrier: Carrier) -> Self {
        let map = (0..carrier.len()).collect();
        Self {
            source: carrier.clone(),
            target: carrier,
            map,
        }
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `f(S)`
    pub fn image(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.map[x]).collect()
    }

    /// `f^{-1}(N)`
    pub fn preimage(&self, n: Subset) -> Subset {
        (0..self.map.len())
            .filter(|&x| n.contains(self.map[x]))
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full()) == self.target.full()
    }
}

impl Verifier {
    /// Checks `μ(x) = max{α ∈ G | x ∈ U(μ;α)}` and
    /// `λ(x) = min{α ∈ G | x ∈ L(λ;α)}` for every `x`, where `G` is the set
    /// of attained grades together with 0 and 1. Cuts only change at
    /// attained grades, so this grid loses nothing.
    pub fn representation_check<G: Grade>(
        &self,
        mu: &FuzzySet<G>,
        lambda: &FuzzySet<G>,
    ) -> AxiomReport {
        let grid = |f: &FuzzySet<G>| {
            let mut g = f.attained();
            for extra in [G::zero(), G::one()] {
                if !g.contains(&extra) {
                    g.push(extra);
                }
            }
            g
        };
        let mu_grid = grid(mu);
        let lambda_grid = grid(lambda);
        let mut v = Vec::new();
        for x in 0..mu.carrier().len() {
            let sup = mu_grid
                .iter()
                .filter(|a| mu.upper_cut(a).contains(x))
                .fold(None::<G>, |acc, a| {
                    Some(acc.map_or(a.clone(), |b| gmax(&b, a)))
                });
            if sup.as_ref() != Some(mu.grade(x)) {
                v.push(Violation::new("membership representation", vec![x]));
            }
        }
        for x in 0..lambda.carrier().len() {
            let inf = lambda_grid
                .iter()
                .filter(|a| lambda.lower_cut(a).contains(x))
                .fold(None::<G>, |acc, a| {
                    Some(acc.map_or(a.clone(), |b| gmin(&b, a)))
                });
            if inf.as_ref() != Some(lambda.grade(x)) {
                v.push(Violation::new("non-membership representation", vec![x]));
            }
        }
        v.truncate(self.witness_cap.max(1));
        AxiomReport::from_violations(v, self.witness_cap.max(1))
    }
}
