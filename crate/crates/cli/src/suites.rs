//! Verification suites over parsed structures, and seeded fixture generation.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use hyvkit_core::fixtures::{all_if_sets, grade_grid, induced};
use hyvkit_core::{
    AxiomReport, Carrier, ExistentialWitness, Fact, FuzzySet, HvModule, HvModuleMap, IfSet,
    OrdModule, OrdRing, Side, SubmoduleCertificate, Subset, Verifier, Violation, Q,
};
use indexmap::IndexMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::format::{FormatError, Structure};

/// Largest number of grid IF sets a sweep may visit.
pub const SWEEP_BOUND: u64 = 2_000_000;
/// Largest carrier a generated fixture may have.
pub const MAX_FIXTURE_SIZE: usize = 16;
/// Samples drawn by the `sample-induced` suite.
pub const SAMPLES: usize = 100;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Format(#[from] FormatError),

    #[error("input signature mismatch: {0}")]
    Signature(String),

    #[error("resource bound exceeded: {0}")]
    Bound(String),

    #[error(transparent)]
    Core(hyvkit_core::Error),
}

impl From<hyvkit_core::Error> for CliError {
    fn from(e: hyvkit_core::Error) -> Self {
        match e {
            hyvkit_core::Error::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 3 for resource bounds, 2 for every input problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Bound(_) => 3,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Induce H_v-structures from an ordinary module and grades, then check them.
    #[value(name = "example33", alias = "induced")]
    #[serde(rename = "example33")]
    Induced,
    HvRing,
    HvModule,
    /// Enumerate every crisp H_v-submodule.
    Submodules,
    /// Check one subset.
    Crisp,
    Fuzzy,
    If,
    /// IF submodules versus submodule level cuts, swept over the grade grid.
    LevelcutIff,
    Modal,
    Fundamental,
    Morphism,
    /// Seeded random gradings of an ordinary module.
    SampleInduced,
    Representation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FixtureKind {
    OrdRing,
    OrdModule,
    HvRing,
    HvModule,
    FuzzySet,
    IfSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SuiteOptions {
    #[serde(serialize_with = "as_string")]
    pub grid_step: Q,
    pub seed: u64,
    pub witness_cap: usize,
    pub strict_witness_pair: bool,
    #[serde(skip)]
    pub parallel: bool,
}

fn as_string<S: serde::Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            grid_step: Q::new(1, 4),
            seed: 0,
            witness_cap: hyvkit_core::verifier::DEFAULT_WITNESS_CAP,
            strict_witness_pair: false,
            parallel: false,
        }
    }
}

impl SuiteOptions {
    fn verifier(&self) -> Verifier {
        Verifier::default()
            .with_witness_cap(self.witness_cap)
            .strict(self.strict_witness_pair)
            .parallel(self.parallel)
    }

    fn grid(&self) -> Result<Vec<Q>> {
        let step = self.grid_step;
        if step <= Q::from_integer(0)
            || step > Q::from_integer(1)
            || !(Q::from_integer(1) / step).is_integer()
        {
            return Err(CliError::Input(format!(
                "grid step {step} must be 1/k for a positive integer k"
            )));
        }
        Ok(grade_grid(step))
    }
}

/// One verdict with its evidence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<Fact>,
    #[serde(skip_serializing_if = "IndexMap::is_empty")]
    pub counts: IndexMap<String, u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub truncated: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<ExistentialWitness>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            passed,
            facts: Vec::new(),
            counts: IndexMap::new(),
            items: Vec::new(),
            violations: Vec::new(),
            truncated: false,
            witnesses: Vec::new(),
        }
    }

    fn axioms(name: impl Into<String>, r: AxiomReport) -> Self {
        Self {
            violations: r.violations,
            truncated: r.truncated,
            ..Self::new(name, r.passed)
        }
    }

    fn certificate(name: impl Into<String>, c: SubmoduleCertificate) -> Self {
        Self {
            facts: c.facts,
            violations: c.violations,
            witnesses: c.witnesses,
            ..Self::new(name, c.verdict)
        }
    }

    fn count(mut self, key: &str, value: u64) -> Self {
        self.counts.insert(key.to_string(), value);
        self
    }
}

/// Conjunction of checks. Timing is kept out of the machine-readable form.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub passed: bool,
    pub options: SuiteOptions,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let suite = self.suite.to_possible_value().expect("no skipped variants");
        let _ = writeln!(out, "{} {verdict} ({:.1?})", suite.get_name(), self.elapsed);
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  [{}] {}",
                if c.passed { "pass" } else { "FAIL" },
                c.name
            );
            for f in &c.facts {
                let _ = writeln!(out, "      {} = {}", f.name, f.holds);
            }
            for (k, v) in &c.counts {
                let _ = writeln!(out, "      {k}: {v}");
            }
            for item in &c.items {
                let _ = writeln!(out, "      {item}");
            }
            for v in &c.violations {
                let note = v
                    .note
                    .as_deref()
                    .map(|n| format!(" ({n})"))
                    .unwrap_or_default();
                let _ = writeln!(out, "      violated {} at {:?}{note}", v.axiom, v.witness);
            }
            if c.truncated {
                let _ = writeln!(out, "      … further violations omitted");
            }
        }
        out
    }
}

/// Inputs consumed by kind, in file order.
struct Inputs<'a> {
    items: Vec<Option<&'a Structure>>,
}

impl<'a> Inputs<'a> {
    fn new(inputs: &'a [Structure]) -> Self {
        Self {
            items: inputs.iter().map(Some).collect(),
        }
    }

    fn optional(&mut self, kind: &str) -> Option<&'a Structure> {
        let slot = self
            .items
            .iter_mut()
            .find(|s| s.is_some_and(|s| s.kind() == kind))?;
        slot.take()
    }

    fn take(&mut self, kind: &str) -> Result<&'a Structure> {
        self.optional(kind)
            .ok_or_else(|| CliError::Signature(format!("expected an input of kind {kind}")))
    }

    fn finish(self) -> Result<()> {
        match self.items.into_iter().flatten().next() {
            Some(s) => Err(CliError::Signature(format!(
                "unexpected input of kind {}",
                s.kind()
            ))),
            None => Ok(()),
        }
    }
}

macro_rules! expect_kind {
    ($inputs:expr, $kind:literal, $variant:ident) => {
        match $inputs.take($kind)? {
            Structure::$variant(x) => x,
            _ => unreachable!("kind matched"),
        }
    };
}

fn optional_if<'a>(inputs: &mut Inputs<'a>) -> Option<&'a IfSet> {
    match inputs.optional("if_set") {
        Some(Structure::IfSet(a)) => Some(a),
        _ => None,
    }
}

fn optional_subset<'a>(inputs: &mut Inputs<'a>) -> Option<(&'a Carrier, Subset)> {
    match inputs.optional("subset") {
        Some(Structure::Subset { carrier, subset }) => Some((carrier, *subset)),
        _ => None,
    }
}

fn same_carrier(expected: &Carrier, got: &Carrier, what: &str) -> Result<()> {
    if expected != got {
        return Err(CliError::Signature(format!(
            "{what} is not on the expected carrier"
        )));
    }
    Ok(())
}

/// Number of IF sets on `n` points over `grid`, if within [`SWEEP_BOUND`].
fn sweep_size(grid: &[Q], n: usize) -> Result<u64> {
    let k = grid.len() as u64;
    let pairs = k * (k + 1) / 2;
    let mut total: u64 = 1;
    for _ in 0..n {
        total = total.saturating_mul(pairs);
    }
    if total > SWEEP_BOUND {
        return Err(CliError::Bound(format!(
            "{total} IF sets exceed the sweep bound {SWEEP_BOUND}"
        )));
    }
    Ok(total)
}

/// Runs a suite. The report is a deterministic function of the inputs and
/// options apart from `elapsed`.
pub fn run_suite(suite: Suite, inputs: &[Structure], opts: &SuiteOptions) -> Result<Report> {
    let start = Instant::now();
    let v = opts.verifier();
    let mut inp = Inputs::new(inputs);
    let checks = match suite {
        Suite::Induced => induced_suite(&v, &mut inp)?,
        Suite::HvRing => {
            let r = expect_kind!(inp, "hv_ring", HvRing);
            vec![Check::axioms("H_v-ring axioms", v.check_hv_ring(r))]
        }
        Suite::HvModule => {
            let m = expect_kind!(inp, "hv_module", HvModule);
            vec![module_check(&v, m)?]
        }
        Suite::Submodules => {
            let m = expect_kind!(inp, "hv_module", HvModule);
            let subs = v.enumerate_crisp_submodules(m)?;
            let mut c = Check::new("crisp H_v-submodules", true).count("found", subs.len() as u64);
            c.items = subs.iter().map(|s| m.carrier().render(*s)).collect();
            vec![c]
        }
        Suite::Crisp => {
            let m = expect_kind!(inp, "hv_module", HvModule);
            let (c, s) = optional_subset(&mut inp)
                .ok_or_else(|| CliError::Signature("expected an input of kind subset".into()))?;
            same_carrier(m.carrier(), c, "subset")?;
            vec![Check::certificate(
                format!("{} is an H_v-submodule", c.render(s)),
                v.check_crisp_hv_submodule(m, s)?,
            )]
        }
        Suite::Fuzzy => {
            let m = expect_kind!(inp, "hv_module", HvModule);
            let mu = expect_kind!(inp, "fuzzy_set", FuzzySet);
            same_carrier(m.carrier(), mu.carrier(), "fuzzy set")?;
            vec![Check::certificate(
                "fuzzy H_v-submodule",
                v.check_fuzzy_hv_submodule(m, mu)?,
            )]
        }
        Suite::If => {
            let m = expect_kind!(inp, "hv_module", HvModule);
            let a = expect_kind!(inp, "if_set", IfSet);
            same_carrier(m.carrier(), a.carrier(), "IF set")?;
            vec![Check::certificate(
                "IF H_v-submodule",
                v.check_if_hv_submodule(m, a)?,
            )]
        }
        Suite::LevelcutIff => levelcut_iff(&v, opts, &mut inp)?,
        Suite::Modal => modal(&v, opts, &mut inp)?,
        Suite::Fundamental => fundamental(&v, opts, &mut inp)?,
        Suite::Morphism => morphism(&v, opts, &mut inp)?,
        Suite::SampleInduced => sample_induced(&v, opts, &mut inp)?,
        Suite::Representation => {
            let a = expect_kind!(inp, "if_set", IfSet);
            vec![Check::axioms(
                "level-cut representation",
                v.representation_check(a.mu(), a.lambda()),
            )]
        }
    };
    inp.finish()?;
    Ok(Report {
        suite,
        passed: checks.iter().all(|c| c.passed),
        options: *opts,
        checks,
        elapsed: start.elapsed(),
    })
}

fn module_check(v: &Verifier, m: &HvModule) -> Result<Check> {
    Ok(match v.check_hv_module(m) {
        Ok(r) => Check::axioms("H_v-module axioms", r),
        Err(hyvkit_core::Error::Precondition {
            report: Some(r), ..
        }) => Check::axioms("H_v-module axioms (scalar ring fails)", *r),
        Err(e) => return Err(e.into()),
    })
}

fn induced_suite(v: &Verifier, inp: &mut Inputs) -> Result<Vec<Check>> {
    let m = expect_kind!(inp, "ord_module", OrdModule);
    let module_grades = expect_kind!(inp, "fuzzy_set", FuzzySet);
    let ring_grades = match inp.optional("fuzzy_set") {
        Some(Structure::FuzzySet(g)) => g,
        _ => module_grades,
    };
    same_carrier(m.carrier(), module_grades.carrier(), "module grades")?;
    same_carrier(m.ring().carrier(), ring_grades.carrier(), "ring grades")?;
    let hv = induced(m, ring_grades, module_grades)?;
    Ok(vec![
        Check::axioms("induced H_v-ring", v.check_hv_ring(&hv.ring)),
        module_check(v, &hv)?,
    ])
}

fn levelcut_iff(v: &Verifier, opts: &SuiteOptions, inp: &mut Inputs) -> Result<Vec<Check>> {
    let m = expect_kind!(inp, "hv_module", HvModule);
    let grid = opts.grid()?;
    let total = sweep_size(&grid, m.carrier().len())?;
    let quiet = Verifier {
        witness_cap: 1,
        record_witnesses: false,
        parallel: false,
        ..*v
    };
    let mut submodules = 0;
    let mut mismatches = Vec::new();
    for a in all_if_sets(m.carrier(), &grid) {
        let direct = quiet.check_if_hv_submodule(m, &a)?.verdict;
        let cuts = quiet.level_cuts_are_submodules(m, &a)?.verdict;
        submodules += u64::from(direct);
        if direct != cuts && mismatches.len() < v.witness_cap {
            mismatches.push(describe_if(&a));
        }
    }
    let mut sweep = Check::new(
        "IF submodule ⟺ all non-empty cuts are submodules",
        mismatches.is_empty(),
    )
    .count("if_sets", total)
    .count("submodules", submodules)
    .count("discrepancies", mismatches.len() as u64);
    sweep.items = mismatches;
    let mut checks = vec![sweep];
    if let Some(a) = optional_if(inp) {
        same_carrier(m.carrier(), a.carrier(), "IF set")?;
        match v.levelcut_forward(m, a) {
            Ok(c) => checks.push(Check::certificate("cuts of the given IF submodule", c)),
            Err(hyvkit_core::Error::Precondition { what, .. }) => {
                let mut c = Check::new("cuts of the given IF submodule", true);
                c.items.push(format!("skipped: {what}"));
                checks.push(c);
            }
            Err(e) => return Err(e.into()),
        }
        checks.push(Check::certificate(
            "cuts ⟹ IF submodule for the given set",
            v.levelcut_converse(m, a)?,
        ));
    }
    Ok(checks)
}

fn describe_if(a: &IfSet) -> String {
    let c = a.carrier();
    (0..c.len())
        .map(|x| {
            format!(
                "{}:({},{})",
                c.name(x),
                a.mu().grade(x),
                a.lambda().grade(x)
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn modal(v: &Verifier, opts: &SuiteOptions, inp: &mut Inputs) -> Result<Vec<Check>> {
    let m = expect_kind!(inp, "hv_module", HvModule);
    if let Some(a) = optional_if(inp) {
        same_carrier(m.carrier(), a.carrier(), "IF set")?;
        return Ok(vec![Check::certificate(
            "modal characterisation",
            v.modal_theorem(m, a)?,
        )]);
    }
    let grid = opts.grid()?;
    let total = sweep_size(&grid, m.carrier().len())?;
    let mut failures = Vec::new();
    let mut submodules = 0;
    for a in all_if_sets(m.carrier(), &grid) {
        let cert = v.modal_theorem(m, &a)?;
        submodules += u64::from(cert.fact_value("A") == Some(true));
        if !cert.verdict && failures.len() < v.witness_cap {
            failures.push(describe_if(&a));
        }
    }
    let mut c = Check::new("modal characterisation over the grid", failures.is_empty())
        .count("if_sets", total)
        .count("submodules", submodules)
        .count("discrepancies", failures.len() as u64);
    c.items = failures;
    Ok(vec![c])
}

fn fundamental(v: &Verifier, opts: &SuiteOptions, inp: &mut Inputs) -> Result<Vec<Check>> {
    let m = expect_kind!(inp, "hv_module", HvModule);
    let given = optional_if(inp);
    let f = match v.fundamental_module(m) {
        Ok(f) => f,
        Err(e @ (hyvkit_core::Error::SingleValuedness(_) | hyvkit_core::Error::Structural(_))) => {
            let mut c = Check::new("fundamental quotient", false);
            c.items.push(e.to_string());
            return Ok(vec![c]);
        }
        Err(e) => return Err(e.into()),
    };
    let render = |p: &hyvkit_core::Partition| {
        p.named_blocks()
            .iter()
            .map(|b| format!("{{{}}}", b.join(",")))
            .collect::<Vec<_>>()
    };
    let mut ring = Check::new("fundamental ring classes", true)
        .count("classes", f.ring_partition.len() as u64);
    ring.items = render(&f.ring_partition);
    let mut module = Check::axioms(
        "fundamental module is an ordinary module",
        v.validate_ord_module(&f.quotient),
    )
    .count("classes", f.module_partition.len() as u64);
    module.items = render(&f.module_partition);
    module
        .items
        .push(format!("core = {}", m.carrier().render(f.core_block())));
    let mut checks = vec![ring, module];

    let theorem = |a: &IfSet, checks: &mut Vec<Check>, label: &str| -> Result<()> {
        let projected = v.project_if(&f, a)?;
        let mut p = Check::new(format!("projection of {label}"), true);
        p.items = (0..f.module_partition.len())
            .map(|k| {
                format!(
                    "{}: ({}, {})",
                    f.module_partition.block_name(k),
                    projected.mu().grade(k),
                    projected.lambda().grade(k)
                )
            })
            .collect();
        checks.push(p);
        checks.push(Check::certificate(
            format!("quotient theorems for {label}"),
            v.verify_fundamental_theorems(m, a)?,
        ));
        Ok(())
    };
    match given {
        Some(a) => {
            same_carrier(m.carrier(), a.carrier(), "IF set")?;
            if v.check_if_hv_submodule(m, a)?.verdict {
                theorem(a, &mut checks, "the given IF set")?;
            } else {
                let mut c = Check::new("quotient theorems for the given IF set", true);
                c.items.push("skipped: not an IF H_v-submodule".into());
                checks.push(c);
            }
        }
        None => {
            let grid = opts.grid()?;
            let total = sweep_size(&grid, m.carrier().len())?;
            let quiet = Verifier {
                witness_cap: 1,
                record_witnesses: false,
                ..*v
            };
            let (mut seen, mut failures) = (0, Vec::new());
            for a in all_if_sets(m.carrier(), &grid) {
                if !quiet.check_if_hv_submodule(m, &a)?.verdict {
                    continue;
                }
                seen += 1;
                if !quiet.verify_fundamental_theorems(m, &a)?.verdict
                    && failures.len() < v.witness_cap
                {
                    failures.push(describe_if(&a));
                }
            }
            let mut c = Check::new("quotient theorems over the grid", failures.is_empty())
                .count("if_sets", total)
                .count("submodules", seen)
                .count("failures", failures.len() as u64);
            c.items = failures;
            checks.push(c);
        }
    }
    Ok(checks)
}

fn morphism(v: &Verifier, opts: &SuiteOptions, inp: &mut Inputs) -> Result<Vec<Check>> {
    let source = expect_kind!(inp, "hv_module", HvModule);
    let target = expect_kind!(inp, "hv_module", HvModule);
    let map = expect_kind!(inp, "map", Map);
    same_carrier(source.carrier(), map.source(), "map source")?;
    same_carrier(target.carrier(), map.target(), "map target")?;
    let f = HvModuleMap::new(source, target, map.table().to_vec())?;
    let hom = v.check_homomorphism(&f);
    let is_hom = hom.passed;
    let mut checks = vec![Check::axioms("homomorphism", hom)];
    if !is_hom {
        return Ok(checks);
    }
    let strong = v.check_strong(&f, Side::Both)?;
    let mut c = Check::axioms("strong homomorphism", strong);
    c.facts.push(Fact {
        name: "surjective".into(),
        holds: f.is_surjective(),
    });
    // strongness is a property, not a requirement of this suite
    c.passed = true;
    checks.push(c);

    if let Some((carrier, n)) = optional_subset(inp) {
        same_carrier(target.carrier(), carrier, "subset")?;
        checks.push(asserted_check(
            "preimage of a crisp submodule",
            v.preimage_crisp(&f, n)?.assertion,
        ));
    }
    let grid = opts.grid()?;
    while let Some(a) = optional_if(inp) {
        if a.carrier() == target.carrier() {
            let pulled = v.preimage_if(&f, a)?;
            checks.push(asserted_check(
                "preimage of an IF submodule",
                pulled.assertion,
            ));
            let mut ok = true;
            for t in &grid {
                ok &= v.preimage_levelcut_props(&f, a, t)?.verdict;
            }
            checks.push(
                Check::new("cuts commute with preimages", ok)
                    .count("thresholds", grid.len() as u64),
            );
        }
        if a.carrier() == source.carrier() {
            let mut c = Check::new("cuts commute with surjective images", true);
            for t in &grid {
                match v.image_levelcut_props(&f, a, t) {
                    Ok(cert) => c.passed &= cert.verdict,
                    Err(hyvkit_core::Error::Precondition { what, .. }) => {
                        c.items.push(format!("skipped: {what}"));
                        break;
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            checks.push(c);
        }
        if a.carrier() != source.carrier() && a.carrier() != target.carrier() {
            return Err(CliError::Signature("IF set is on neither carrier".into()));
        }
    }
    Ok(checks)
}

fn asserted_check(name: &str, assertion: hyvkit_core::Assertion) -> Check {
    match assertion {
        hyvkit_core::Assertion::Checked(cert) => Check::certificate(name, cert),
        hyvkit_core::Assertion::Skipped(gaps) => {
            let mut c = Check::new(name, true);
            c.items = gaps.into_iter().map(|g| format!("skipped: {g}")).collect();
            c
        }
    }
}

fn sample_induced(v: &Verifier, opts: &SuiteOptions, inp: &mut Inputs) -> Result<Vec<Check>> {
    let m = expect_kind!(inp, "ord_module", OrdModule);
    let grid = opts.grid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = Vec::new();
    for _ in 0..SAMPLES {
        let ring_grades = random_fuzzy(&mut rng, m.ring().carrier(), &grid);
        let module_grades = random_fuzzy(&mut rng, m.carrier(), &grid);
        let hv = induced(m, &ring_grades, &module_grades)?;
        let ok = v.check_hv_ring(&hv.ring).passed && module_check(v, &hv)?.passed;
        if !ok && failures.len() < v.witness_cap {
            failures.push(format!(
                "ring {:?} module {:?}",
                ring_grades.grades(),
                module_grades.grades()
            ));
        }
    }
    let mut c = Check::new("sampled induced structures are H_v", failures.is_empty())
        .count("samples", SAMPLES as u64)
        .count("failures", failures.len() as u64);
    c.items = failures;
    Ok(vec![c])
}

fn random_fuzzy(rng: &mut ChaCha8Rng, c: &Carrier, grid: &[Q]) -> FuzzySet {
    let grades = (0..c.len())
        .map(|_| grid[rng.gen_range(0..grid.len())])
        .collect();
    FuzzySet::new(c.clone(), grades).expect("grid grades")
}

fn random_if(rng: &mut ChaCha8Rng, c: &Carrier, grid: &[Q]) -> IfSet {
    let one = Q::from_integer(1);
    let pairs: Vec<(Q, Q)> = (0..c.len())
        .map(|_| {
            let mu = grid[rng.gen_range(0..grid.len())];
            let allowed: Vec<Q> = grid.iter().copied().filter(|l| mu + l <= one).collect();
            (mu, allowed[rng.gen_range(0..allowed.len())])
        })
        .collect();
    IfSet::new(
        FuzzySet::new(c.clone(), pairs.iter().map(|p| p.0).collect()).expect("grid grades"),
        FuzzySet::new(c.clone(), pairs.iter().map(|p| p.1).collect()).expect("grid grades"),
    )
    .expect("pairs sum to at most 1")
}

/// A seeded structure on `Z_size`. H_v-structures come from a random
/// grading pushed through the induced construction and are checked before
/// they are returned.
pub fn generate_fixture(
    kind: FixtureKind,
    size: usize,
    seed: u64,
    grid_step: Q,
) -> Result<Structure> {
    if size == 0 || size > MAX_FIXTURE_SIZE {
        return Err(CliError::Input(format!(
            "unsupported size {size}: fixtures have 1 to {MAX_FIXTURE_SIZE} elements"
        )));
    }
    let grid = SuiteOptions {
        grid_step,
        ..SuiteOptions::default()
    }
    .grid()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = OrdRing::zn(size)?;
    let module = OrdModule::regular(&ring);
    let c = ring.carrier().clone();
    Ok(match kind {
        FixtureKind::OrdRing => Structure::OrdRing(ring),
        FixtureKind::OrdModule => Structure::OrdModule(module),
        FixtureKind::FuzzySet => Structure::FuzzySet(random_fuzzy(&mut rng, &c, &grid)),
        FixtureKind::IfSet => Structure::IfSet(random_if(&mut rng, &c, &grid)),
        FixtureKind::HvRing | FixtureKind::HvModule => {
            let ring_grades = random_fuzzy(&mut rng, &c, &grid);
            let module_grades = random_fuzzy(&mut rng, &c, &grid);
            let hv = induced(&module, &ring_grades, &module_grades)?;
            let v = Verifier::default();
            if !v.check_hv_module(&hv)?.passed {
                return Err(CliError::Core(hyvkit_core::Error::Postcondition(
                    "generated structure is not an H_v-module".into(),
                )));
            }
            if kind == FixtureKind::HvRing {
                Structure::HvRing(hv.ring)
            } else {
                Structure::HvModule(hv)
            }
        }
    })
}

/// Parses `p/q` or an integer.
pub fn parse_grade(text: &str) -> std::result::Result<Q, String> {
    text.trim()
        .parse::<Q>()
        .map_err(|e| format!("invalid grade '{text}': {e}"))
}

/// Parses and validates every input file.
pub fn load_inputs(paths: &[std::path::PathBuf]) -> Result<Vec<Structure>> {
    paths
        .iter()
        .map(|p| {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            crate::format::parse_structure(&text).map_err(|e| match e {
                FormatError::Syntax {
                    line,
                    column,
                    message,
                } => CliError::Format(FormatError::Syntax {
                    line,
                    column,
                    message: format!("{}: {message}", p.display()),
                }),
                FormatError::Semantic(m) => {
                    CliError::Format(FormatError::Semantic(format!("{}: {m}", p.display())))
                }
            })
        })
        .collect()
}
