//! Homomorphisms of H_v-modules over a shared H_v-ring, strongness, and the
//! preimage and level-cut transport results.

use crate::carrier::Subset;
use crate::error::{Error, Result};
use crate::fuzzy::{CarrierMap, Grade, IfSet};
use crate::hyper::HvModule;
use crate::report::{AxiomReport, SubmoduleCertificate, Violation};
use crate::verifier::Verifier;

/// A total map between the carriers of two H_v-modules over the same ring.
#[derive(Clone, Debug)]
pub struct HvModuleMap<'a> {
    source: &'a HvModule,
    target: &'a HvModule,
    map: CarrierMap,
}

/// Which operand a strong homomorphism may re-choose within its fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// Outcome of a theorem postcondition that is only asserted when its
/// hypotheses hold.
#[derive(Clone, Debug, PartialEq)]
pub enum Assertion {
    Checked(SubmoduleCertificate),
    /// Failed hypotheses, by name.
    Skipped(Vec<String>),
}

impl Assertion {
    /// `Some(verdict)` when the assertion ran.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Assertion::Checked(c) => Some(c.verdict),
            Assertion::Skipped(_) => None,
        }
    }
}

/// A set-level result paired with its theorem assertion.
#[derive(Clone, Debug, PartialEq)]
pub struct Asserted<T> {
    pub value: T,
    pub assertion: Assertion,
}

impl<'a> HvModuleMap<'a> {
    pub fn new(source: &'a HvModule, target: &'a HvModule, map: Vec<usize>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::CarrierMismatch(
                "source and target are over different H_v-rings".into(),
            ));
        }
        let map = CarrierMap::new(source.carrier().clone(), target.carrier().clone(), map)?;
        Ok(Self {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &HvModule {
        self.source
    }

    pub fn target(&self) -> &HvModule {
        self.target
    }

    pub fn map(&self) -> &CarrierMap {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }

    pub fn is_surjective(&self) -> bool {
        self.map.is_surjective()
    }
}

impl Verifier {
    /// `f(x+y) = f(x)+f(y)` and `f(r·x) = r·f(x)` as sets.
    pub fn check_homomorphism(&self, f: &HvModuleMap) -> AxiomReport {
        let (m1, m2) = (f.source, f.target);
        let n = m1.carrier().len();
        let rn = m1.ring.carrier().len();
        let v = self.scan(n, |x, sink| {
            let fx = f.apply(x);
            for y in 0..n {
                if f.map.image(m1.sum(x, y)) != m2.sum(fx, f.apply(y)) {
                    sink.record(Violation::new("f(x+y) = f(x)+f(y)", vec![x, y]));
                }
            }
            for r in 0..rn {
                if f.map.image(m1.act(r, x)) != m2.act(r, fx) {
                    sink.record(Violation::new("f(r·x) = r·f(x)", vec![r, x]));
                }
            }
        });
        AxiomReport::from_violations(v, self.witness_cap)
    }

    /// Left: `f(z) ∈ f(x)+f(y)` yields `x'` with `f(x') = f(x)` and
    /// `z ∈ x'+y`. Right: the same with `y'` replacing `y`.
    pub fn check_strong(&self, f: &HvModuleMap, side: Side) -> Result<AxiomReport> {
        let hom = self.check_homomorphism(f);
        if !hom.passed {
            return Err(Error::precondition_with("map is not a homomorphism", hom));
        }
        let (m1, m2) = (f.source, f.target);
        let n = m1.carrier().len();
        let fiber = |x: usize| f.map.preimage(Subset::singleton(f.apply(x)));
        let left = matches!(side, Side::Left | Side::Both);
        let right = matches!(side, Side::Right | Side::Both);
        let v = self.scan(n, |x, sink| {
            for y in 0..n {
                let target_sum = m2.sum(f.apply(x), f.apply(y));
                for z in 0..n {
                    if !target_sum.contains(f.apply(z)) {
                        continue;
                    }
                    if left && !fiber(x).iter().any(|x2| m1.sum(x2, y).contains(z)) {
                        sink.record(Violation::new("strong on the left", vec![x, y, z]));
                    }
                    if right && !fiber(y).iter().any(|y2| m1.sum(x, y2).contains(z)) {
                        sink.record(Violation::new("strong on the right", vec![x, y, z]));
                    }
                }
            }
        });
        Ok(AxiomReport::from_violations(v, self.witness_cap))
    }

    /// Reasons, if any, that `f` is not a strong epimorphism.
    fn strong_epi_gaps(&self, f: &HvModuleMap) -> Vec<String> {
        let mut gaps = Vec::new();
        if !f.is_surjective() {
            gaps.push("map is not surjective".to_string());
        }
        match self.check_strong(f, Side::Both) {
            Err(_) => gaps.push("map is not a homomorphism".into()),
            Ok(r) if !r.passed => gaps.push("homomorphism is not strong".into()),
            Ok(_) => {}
        }
        gaps
    }

    /// `f⁻¹(N)`, asserted to be an H_v-submodule of the source when `f` is a
    /// strong epimorphism and `N` an H_v-submodule of the target.
    pub fn preimage_crisp(&self, f: &HvModuleMap, n: Subset) -> Result<Asserted<Subset>> {
        f.target.carrier().check_subset(n)?;
        let value = f.map.preimage(n);
        let mut gaps = self.strong_epi_gaps(f);
        if !self.check_crisp_hv_submodule(f.target, n)?.verdict {
            gaps.push("N is not an H_v-submodule of the target".into());
        }
        let assertion = if gaps.is_empty() {
            Assertion::Checked(self.check_crisp_hv_submodule(f.source, value)?)
        } else {
            Assertion::Skipped(gaps)
        };
        Ok(Asserted { value, assertion })
    }

    /// `f⁻¹(B) = (μ_B∘f, λ_B∘f)`, asserted to be an IF H_v-submodule of the
    /// source when `f` is a strong epimorphism and `B` an IF H_v-submodule.
    pub fn preimage_if<G: Grade>(
        &self,
        f: &HvModuleMap,
        b: &IfSet<G>,
    ) -> Result<Asserted<IfSet<G>>> {
        let value = b.preimage(&f.map)?;
        let mut gaps = self.strong_epi_gaps(f);
        if !self.check_if_hv_submodule(f.target, b)?.verdict {
            gaps.push("B is not an intuitionistic fuzzy H_v-submodule of the target".into());
        }
        let assertion = if gaps.is_empty() {
            Assertion::Checked(self.check_if_hv_submodule(f.source, &value)?)
        } else {
            Assertion::Skipped(gaps)
        };
        Ok(Asserted { value, assertion })
    }

    /// For surjective `f` and an IF H_v-submodule `A` of the source:
    /// `f(U(μ;t)) = U(f(μ);t)` and `L(f(λ);t) ⊆ f(L(λ;t))`. The converse
    /// inclusion is reported as the fact "f(L(λ;t)) ⊆ L(f(λ);t)".
    pub fn image_levelcut_props<G: Grade>(
        &self,
        f: &HvModuleMap,
        a: &IfSet<G>,
        t: &G,
    ) -> Result<SubmoduleCertificate> {
        if !f.is_surjective() {
            return Err(Error::precondition("map is not surjective"));
        }
        if !self.check_if_hv_submodule(f.source, a)?.verdict {
            return Err(Error::precondition(
                "A is not an intuitionistic fuzzy H_v-submodule of the source",
            ));
        }
        let mu_image = a.mu().image(&f.map)?;
        let lambda_image = a.lambda().image(&f.map)?;
        let upper_lhs = f.map.image(a.mu().upper_cut(t));
        let upper_rhs = mu_image.upper_cut(t);
        let lower_image = f.map.image(a.lambda().lower_cut(t));
        let lower_target = lambda_image.lower_cut(t);

        let mut cert = SubmoduleCertificate::new("level cuts commute with surjective images");
        let upper = upper_lhs == upper_rhs;
        let lower_proved = lower_target.is_subset(lower_image);
        cert.fact("f(U(μ;t)) = U(f(μ);t)", upper);
        cert.fact("L(f(λ);t) ⊆ f(L(λ;t))", lower_proved);
        cert.fact("f(L(λ;t)) ⊆ L(f(λ);t)", lower_image.is_subset(lower_target));
        if !upper {
            cert.fail(Violation::new(
                "f(U(μ;t)) = U(f(μ);t)",
                upper_lhs.iter().collect(),
            ));
        }
        if !lower_proved {
            cert.fail(Violation::new(
                "L(f(λ);t) ⊆ f(L(λ;t))",
                lower_target.difference(lower_image).iter().collect(),
            ));
        }
        Ok(cert)
    }

    /// `f⁻¹(U(μ;t)) = U(μ∘f;t)` and `f⁻¹(L(λ;t)) = L(λ∘f;t)` for any map.
    pub fn preimage_levelcut_props<G: Grade>(
        &self,
        f: &HvModuleMap,
        b: &IfSet<G>,
        t: &G,
    ) -> Result<SubmoduleCertificate> {
        let pulled = b.preimage(&f.map)?;
        let mut cert = SubmoduleCertificate::new("level cuts commute with preimages");
        let pairs = [
            (
                "f⁻¹(U(μ;t)) = U(f⁻¹(μ);t)",
                f.map.preimage(b.mu().upper_cut(t)),
                pulled.mu().upper_cut(t),
            ),
            (
                "f⁻¹(L(λ;t)) = L(f⁻¹(λ);t)",
                f.map.preimage(b.lambda().lower_cut(t)),
                pulled.lambda().lower_cut(t),
            ),
        ];
        for (name, lhs, rhs) in pairs {
            if lhs != rhs {
                cert.fail(Violation::new(name, lhs.iter().collect()));
            }
        }
        Ok(cert)
    }
}
