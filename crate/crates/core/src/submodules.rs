//! Crisp, fuzzy and intuitionistic fuzzy H_v-submodules, their level-cut
//! characterisation, the modal operators, and the step/characteristic
//! constructions built from a crisp submodule.

use crate::carrier::Subset;
use crate::error::{Error, Result};
use crate::fuzzy::{gmax, gmin, FuzzySet, Grade, IfSet, Modal};
use crate::hyper::HvModule;
use crate::report::{ExistentialWitness, SubmoduleCertificate, Violation};
use crate::verifier::Verifier;

fn same_carrier<G: Grade>(m: &HvModule, f: &FuzzySet<G>) -> Result<()> {
    if f.carrier() != m.carrier() {
        return Err(Error::CarrierMismatch(
            "fuzzy set is not on the module carrier".into(),
        ));
    }
    Ok(())
}

/// Smallest `y` with `x ∈ a+y` and `ok(y)`.
fn left_solution(m: &HvModule, a: usize, x: usize, ok: impl Fn(usize) -> bool) -> Option<usize> {
    (0..m.carrier().len()).find(|&y| m.sum(a, y).contains(x) && ok(y))
}

/// Smallest `z` with `x ∈ z+a` and `ok(z)`.
fn right_solution(m: &HvModule, a: usize, x: usize, ok: impl Fn(usize) -> bool) -> Option<usize> {
    (0..m.carrier().len()).find(|&z| m.sum(z, a).contains(x) && ok(z))
}

impl Verifier {
    /// Non-empty `S` with `a+S = S = S+a` for `a ∈ S`, weakly associative on
    /// `S`, and `R·S ⊆ S`.
    pub fn check_crisp_hv_submodule(
        &self,
        m: &HvModule,
        s: Subset,
    ) -> Result<SubmoduleCertificate> {
        m.carrier().check_subset(s)?;
        let mut cert = SubmoduleCertificate::new("crisp H_v-submodule");
        if s.is_empty() {
            cert.fail(Violation::new("empty", vec![]));
            return Ok(cert);
        }
        let elems: Vec<usize> = s.iter().collect();
        let k = elems.len();
        let rn = m.ring.carrier().len();
        let v = self.scan(k, |i, sink| {
            let a = elems[i];
            let sa = Subset::singleton(a);
            if m.add.product(sa, s) != s {
                sink.record(Violation::new("a+S = S", vec![a]));
            }
            if m.add.product(s, sa) != s {
                sink.record(Violation::new("S+a = S", vec![a]));
            }
            for &y in &elems {
                for &z in &elems {
                    let l = m.add.product(sa, m.sum(y, z));
                    let r = m.add.product(m.sum(a, y), Subset::singleton(z));
                    if !l.meets(r) {
                        sink.record(Violation::new("weak associativity on S", vec![a, y, z]));
                    }
                }
            }
            for r in 0..rn {
                if !m.act(r, a).is_subset(s) {
                    sink.record(Violation::new("R·S ⊆ S", vec![r, a]));
                }
            }
        });
        for violation in v {
            cert.fail(violation);
        }
        Ok(cert)
    }

    /// Every subset passing [`Verifier::check_crisp_hv_submodule`], in
    /// ascending bitmask order.
    pub fn enumerate_crisp_submodules(&self, m: &HvModule) -> Result<Vec<Subset>> {
        let n = m.carrier().len();
        if n > self.enumeration_bound {
            return Err(Error::BoundExceeded {
                what: "carrier size for submodule enumeration",
                size: n,
                bound: self.enumeration_bound,
            });
        }
        let quiet = Verifier {
            witness_cap: 1,
            parallel: false,
            ..*self
        };
        let mut out = Vec::new();
        for mask in 1..(1u64 << n) {
            let s = Subset(mask);
            if quiet.check_crisp_hv_submodule(m, s)?.verdict {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Fuzzy H_v-submodule: the infimum bound over `x+y`, the two
    /// reproduction conditions with separate witnesses `y` and `z`, and the
    /// infimum bound over `r·x`.
    pub fn check_fuzzy_hv_submodule<G: Grade>(
        &self,
        m: &HvModule,
        mu: &FuzzySet<G>,
    ) -> Result<SubmoduleCertificate> {
        same_carrier(m, mu)?;
        let n = m.carrier().len();
        let rn = m.ring.carrier().len();
        let record = self.record_witnesses;
        let (v, w) = self.scan_with(n, |x, sink, wit| {
            for y in 0..n {
                let bound = gmin(mu.grade(x), mu.grade(y));
                if mu.inf_on(m.sum(x, y)).is_some_and(|inf| bound > inf) {
                    sink.record(Violation::new(
                        "(1) min{μ(x),μ(y)} ≤ inf μ(x+y)",
                        vec![x, y],
                    ));
                }
            }
            for a in 0..n {
                let need = gmin(mu.grade(a), mu.grade(x));
                let y = left_solution(m, a, x, |y| *mu.grade(y) >= need);
                let z = right_solution(m, a, x, |z| *mu.grade(z) >= need);
                if y.is_none() {
                    sink.record(Violation::new(
                        "(2) ∃y: x ∈ a+y, min{μ(a),μ(x)} ≤ μ(y)",
                        vec![a, x],
                    ));
                }
                if z.is_none() {
                    sink.record(Violation::new(
                        "(3) ∃z: x ∈ z+a, min{μ(a),μ(x)} ≤ μ(z)",
                        vec![a, x],
                    ));
                }
                if let (true, Some(y), Some(z)) = (record, y, z) {
                    wit.push(ExistentialWitness {
                        condition: "(2)(3)".into(),
                        a,
                        x,
                        y,
                        z,
                    });
                }
            }
            for r in 0..rn {
                if mu.inf_on(m.act(r, x)).is_some_and(|inf| *mu.grade(x) > inf) {
                    sink.record(Violation::new("(4) μ(x) ≤ inf μ(r·x)", vec![r, x]));
                }
            }
        });
        let mut cert = SubmoduleCertificate::new("fuzzy H_v-submodule");
        for violation in v {
            cert.fail(violation);
        }
        cert.witnesses = w;
        Ok(cert)
    }

    /// Intuitionistic fuzzy H_v-submodule, conditions (1)–(6).
    ///
    /// The reproduction conditions (2) and (5) use independent witness pairs
    /// unless `strict_witness_pair` is set, in which case one pair `(y, z)`
    /// must satisfy both.
    pub fn check_if_hv_submodule<G: Grade>(
        &self,
        m: &HvModule,
        a_set: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        same_carrier(m, a_set.mu())?;
        let (mu, lambda) = (a_set.mu(), a_set.lambda());
        let n = m.carrier().len();
        let rn = m.ring.carrier().len();
        let strict = self.strict_witness_pair;
        let record = self.record_witnesses;
        let (v, w) = self.scan_with(n, |x, sink, wit| {
            for y in 0..n {
                let sum = m.sum(x, y);
                let bound = gmin(mu.grade(x), mu.grade(y));
                if mu.inf_on(sum).is_some_and(|inf| bound > inf) {
                    sink.record(Violation::new(
                        "(1) min{μ(x),μ(y)} ≤ inf μ(x+y)",
                        vec![x, y],
                    ));
                }
                let bound = gmax(lambda.grade(x), lambda.grade(y));
                if lambda.sup_on(sum).is_some_and(|sup| sup > bound) {
                    sink.record(Violation::new(
                        "(4) sup λ(x+y) ≤ max{λ(x),λ(y)}",
                        vec![x, y],
                    ));
                }
            }
            for a in 0..n {
                let mu_need = gmin(mu.grade(a), mu.grade(x));
                let lambda_need = gmax(lambda.grade(a), lambda.grade(x));
                let mu_ok = |t: usize| *mu.grade(t) >= mu_need;
                let lambda_ok = |t: usize| *lambda.grade(t) <= lambda_need;
                if strict {
                    let both = |t: usize| mu_ok(t) && lambda_ok(t);
                    let pair = left_solution(m, a, x, both).zip(right_solution(m, a, x, both));
                    match pair {
                        None => sink.record(Violation::new(
                            "(2)+(5) shared pair: x ∈ (a+y)∩(z+a) for both bounds",
                            vec![a, x],
                        )),
                        Some((y, z)) if record => wit.push(ExistentialWitness {
                            condition: "(2)+(5)".into(),
                            a,
                            x,
                            y,
                            z,
                        }),
                        Some(_) => {}
                    }
                    continue;
                }
                let mu_pair = left_solution(m, a, x, mu_ok).zip(right_solution(m, a, x, mu_ok));
                let lambda_pair =
                    left_solution(m, a, x, lambda_ok).zip(right_solution(m, a, x, lambda_ok));
                if mu_pair.is_none() {
                    sink.record(Violation::new(
                        "(2) ∃y,z: x ∈ (a+y)∩(z+a), min{μ(a),μ(x)} ≤ min{μ(y),μ(z)}",
                        vec![a, x],
                    ));
                }
                if lambda_pair.is_none() {
                    sink.record(Violation::new(
                        "(5) ∃y,z: x ∈ (a+y)∩(z+a), max{λ(y),λ(z)} ≤ max{λ(a),λ(x)}",
                        vec![a, x],
                    ));
                }
                if record {
                    for (cond, pair) in [("(2)", mu_pair), ("(5)", lambda_pair)] {
                        if let Some((y, z)) = pair {
                            wit.push(ExistentialWitness {
                                condition: cond.into(),
                                a,
                                x,
                                y,
                                z,
                            });
                        }
                    }
                }
            }
            for r in 0..rn {
                let prod = m.act(r, x);
                if mu.inf_on(prod).is_some_and(|inf| *mu.grade(x) > inf) {
                    sink.record(Violation::new("(3) μ(x) ≤ inf μ(r·x)", vec![r, x]));
                }
                if lambda
                    .sup_on(prod)
                    .is_some_and(|sup| sup > *lambda.grade(x))
                {
                    sink.record(Violation::new("(6) sup λ(r·x) ≤ λ(x)", vec![r, x]));
                }
            }
        });
        let mut cert = SubmoduleCertificate::new(if strict {
            "intuitionistic fuzzy H_v-submodule (shared witness pair)"
        } else {
            "intuitionistic fuzzy H_v-submodule"
        });
        for violation in v {
            cert.fail(violation);
        }
        cert.witnesses = w;
        Ok(cert)
    }

    /// Refined grid of an IF set: every attained grade of `μ` and `λ`, plus 0 and 1.
    pub fn refined_grid<G: Grade>(a: &IfSet<G>) -> Vec<G> {
        let mut grid = a.mu().attained();
        for g in a
            .lambda()
            .attained()
            .into_iter()
            .chain([G::zero(), G::one()])
        {
            if !grid.contains(&g) {
                grid.push(g);
            }
        }
        grid.sort_by(|x, y| x.partial_cmp(y).expect("grades are comparable"));
        grid
    }

    /// Whether every non-empty cut `U(μ;t)` and `L(λ;t)`, `t` on the refined
    /// grid, is a crisp H_v-submodule. Failing cuts are reported as
    /// violations with the cut's elements as witness.
    pub fn level_cuts_are_submodules<G: Grade>(
        &self,
        m: &HvModule,
        a: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        same_carrier(m, a.mu())?;
        let quiet = Verifier {
            witness_cap: 1,
            parallel: false,
            ..*self
        };
        let mut cert = SubmoduleCertificate::new("all non-empty level cuts are H_v-submodules");
        let mut checked: Vec<Subset> = Vec::new();
        for t in Self::refined_grid(a) {
            for (kind, cut) in [
                ("U(μ;t)", a.mu().upper_cut(&t)),
                ("L(λ;t)", a.lambda().lower_cut(&t)),
            ] {
                if cut.is_empty() || checked.contains(&cut) {
                    continue;
                }
                checked.push(cut);
                if !quiet.check_crisp_hv_submodule(m, cut)?.verdict {
                    cert.fail(
                        Violation::new(kind, cut.iter().collect()).with_note(format!("t = {t:?}")),
                    );
                    if cert.violations.len() >= self.witness_cap.max(1) {
                        return Ok(cert);
                    }
                }
            }
        }
        Ok(cert)
    }

    /// For an IF H_v-submodule, every cut `U(μ;t)` and `L(λ;t)` with
    /// `t ∈ Im(μ) ∩ Im(λ)` is a crisp H_v-submodule. Reports vacuity when
    /// the two images are disjoint.
    pub fn levelcut_forward<G: Grade>(
        &self,
        m: &HvModule,
        a: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        let pre = self.check_if_hv_submodule(m, a)?;
        if !pre.verdict {
            let what = format!(
                "not an intuitionistic fuzzy H_v-submodule: {}",
                pre.violations.first().map_or("", |v| v.axiom.as_str())
            );
            return Err(Error::precondition(what));
        }
        let lambda_image = a.lambda().attained();
        let common: Vec<G> = a
            .mu()
            .attained()
            .into_iter()
            .filter(|t| lambda_image.contains(t))
            .collect();
        let mut cert = SubmoduleCertificate::new("level cuts at Im(μ)∩Im(λ) are H_v-submodules");
        cert.fact("vacuous", common.is_empty());
        let quiet = Verifier {
            witness_cap: 1,
            ..*self
        };
        for t in &common {
            for (kind, cut) in [
                ("U(μ;t)", a.mu().upper_cut(t)),
                ("L(λ;t)", a.lambda().lower_cut(t)),
            ] {
                if !quiet.check_crisp_hv_submodule(m, cut)?.verdict {
                    cert.fail(
                        Violation::new(kind, cut.iter().collect()).with_note(format!("t = {t:?}")),
                    );
                }
            }
        }
        Ok(cert)
    }

    /// If all non-empty refined-grid cuts are H_v-submodules then `A` is an
    /// IF H_v-submodule. Reports the hypothesis and the conclusion; the
    /// verdict is the implication.
    pub fn levelcut_converse<G: Grade>(
        &self,
        m: &HvModule,
        a: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        let hypothesis = self.level_cuts_are_submodules(m, a)?;
        let conclusion = self.check_if_hv_submodule(m, a)?;
        let mut cert =
            SubmoduleCertificate::new("non-empty level cuts are submodules ⟹ IF H_v-submodule");
        cert.fact("hypothesis", hypothesis.verdict);
        cert.fact("conclusion", conclusion.verdict);
        if hypothesis.verdict && !conclusion.verdict {
            for v in conclusion.violations {
                cert.fail(v);
            }
        }
        Ok(cert)
    }

    /// Truth values of: `A`, `□A`, `◇A` are IF H_v-submodules, `μ_A` and
    /// `λ_A^c` are fuzzy H_v-submodules. The verdict asserts
    /// `A ⟹ □A`, `A ⟹ ◇A`, `A ⟺ □A ∧ ◇A` and `A ⟺ μ_A ∧ λ_A^c`.
    pub fn modal_theorem<G: Grade>(
        &self,
        m: &HvModule,
        a: &IfSet<G>,
    ) -> Result<SubmoduleCertificate> {
        let quiet = Verifier {
            witness_cap: 1,
            record_witnesses: false,
            ..*self
        };
        let is_a = quiet.check_if_hv_submodule(m, a)?.verdict;
        let is_box = quiet
            .check_if_hv_submodule(m, &a.modal(Modal::Necessity))?
            .verdict;
        let is_diamond = quiet
            .check_if_hv_submodule(m, &a.modal(Modal::Possibility))?
            .verdict;
        let is_mu = quiet.check_fuzzy_hv_submodule(m, a.mu())?.verdict;
        let is_lambda_c = quiet
            .check_fuzzy_hv_submodule(m, &a.lambda().complement())?
            .verdict;

        let mut cert = SubmoduleCertificate::new("modal characterisation");
        cert.fact("A", is_a);
        cert.fact("□A", is_box);
        cert.fact("◇A", is_diamond);
        cert.fact("μ_A fuzzy", is_mu);
        cert.fact("λ_A^c fuzzy", is_lambda_c);
        let claims = [
            ("A ⟹ □A", !is_a || is_box),
            ("A ⟹ ◇A", !is_a || is_diamond),
            ("A ⟺ □A ∧ ◇A", is_a == (is_box && is_diamond)),
            ("A ⟺ μ_A ∧ λ_A^c", is_a == (is_mu && is_lambda_c)),
        ];
        for (name, holds) in claims {
            if !holds {
                cert.fail(Violation::new(name, vec![]));
            }
        }
        Ok(cert)
    }

    /// Two-valued IF set from a crisp submodule `S`: `μ = α₀` on `S`, `α₁`
    /// elsewhere; `λ = β₀` on `S`, `β₁` elsewhere.
    pub fn two_valued_if<G: Grade>(
        &self,
        m: &HvModule,
        s: Subset,
        alpha: (G, G),
        beta: (G, G),
    ) -> Result<IfSet<G>> {
        let ((a0, a1), (b0, b1)) = (alpha, beta);
        if a1 < G::zero() || a1 >= a0 {
            return Err(Error::precondition("need 0 ≤ α₁ < α₀"));
        }
        if b0 < G::zero() || b0 >= b1 {
            return Err(Error::precondition("need 0 ≤ β₀ < β₁"));
        }
        if a0.clone() + b0.clone() > G::one() {
            return Err(Error::precondition("need α₀ + β₀ ≤ 1"));
        }
        if a1.clone() + b1.clone() > G::one() {
            return Err(Error::precondition("need α₁ + β₁ ≤ 1"));
        }
        self.require_crisp(m, s)?;
        let c = m.carrier().clone();
        let pick = |i: usize, inside: &G, outside: &G| {
            if s.contains(i) {
                inside.clone()
            } else {
                outside.clone()
            }
        };
        let a = IfSet::new(
            FuzzySet::from_fn(c.clone(), |i| pick(i, &a0, &a1))?,
            FuzzySet::from_fn(c, |i| pick(i, &b0, &b1))?,
        )?;
        if a.mu().upper_cut(&a0) != s || a.lambda().lower_cut(&b0) != s {
            return Err(Error::Postcondition("U(μ;α₀) = S = L(λ;β₀) fails".into()));
        }
        self.require_if(m, &a)?;
        Ok(a)
    }

    /// `(χ_S, χ_S^c)` for a crisp submodule `S`.
    pub fn characteristic_if<G: Grade>(&self, m: &HvModule, s: Subset) -> Result<IfSet<G>> {
        self.require_crisp(m, s)?;
        let chi = FuzzySet::characteristic(m.carrier().clone(), s)?;
        let a = IfSet::new(chi.clone(), chi.complement())?;
        self.require_if(m, &a)?;
        Ok(a)
    }

    fn require_crisp(&self, m: &HvModule, s: Subset) -> Result<()> {
        let cert = self.check_crisp_hv_submodule(m, s)?;
        if !cert.verdict {
            return Err(Error::precondition(format!(
                "{} is not an H_v-submodule",
                m.carrier().render(s)
            )));
        }
        Ok(())
    }

    fn require_if<G: Grade>(&self, m: &HvModule, a: &IfSet<G>) -> Result<()> {
        if !self.check_if_hv_submodule(m, a)?.verdict {
            return Err(Error::Postcondition(
                "constructed set is not an intuitionistic fuzzy H_v-submodule".into(),
            ));
        }
        Ok(())
    }
}
