//! Checker configuration and the ordered scan driver behind every check.

use rayon::prelude::*;

use crate::report::Violation;

pub const DEFAULT_WITNESS_CAP: usize = 32;
pub const DEFAULT_CLOSURE_BOUND: usize = 16;
pub const DEFAULT_ENUMERATION_BOUND: usize = 16;

/// Entry point for all verification operations.
///
/// Holds only configuration; every check is a pure function of its inputs.
/// With `parallel` set, the outer loop of a scan is fanned out and merged in
/// index order, so reports are identical either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verifier {
    pub witness_cap: usize,
    /// Largest carrier accepted by the expression-closure fixpoint.
    pub closure_bound: usize,
    /// Largest carrier accepted by crisp submodule enumeration.
    pub enumeration_bound: usize,
    /// Require one `(y, z)` pair to serve both reproduction conditions of an
    /// intuitionistic fuzzy submodule.
    pub strict_witness_pair: bool,
    pub parallel: bool,
    pub record_witnesses: bool,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            witness_cap: DEFAULT_WITNESS_CAP,
            closure_bound: DEFAULT_CLOSURE_BOUND,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            strict_witness_pair: false,
            parallel: false,
            record_witnesses: true,
        }
    }
}

/// Collects violations for one outer index, ignoring any beyond the cap.
pub(crate) struct Sink {
    cap: usize,
    pub(crate) out: Vec<Violation>,
}

impl Sink {
    pub(crate) fn record(&mut self, v: Violation) {
        if self.out.len() < self.cap {
            self.out.push(v);
        }
    }
}

impl Verifier {
    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn strict(mut self, on: bool) -> Self {
        self.strict_witness_pair = on;
        self
    }

    pub fn with_witness_cap(mut self, cap: usize) -> Self {
        self.witness_cap = cap.max(1);
        self
    }

    pub(crate) fn sink(&self) -> Sink {
        Sink {
            cap: self.witness_cap.max(1),
            out: Vec::new(),
        }
    }

    /// Runs `body` for each outer index `0..outer` and concatenates the
    /// violations in index order, truncated to the witness cap.
    pub(crate) fn scan<F>(&self, outer: usize, body: F) -> Vec<Violation>
    where
        F: Fn(usize, &mut Sink) + Sync + Send,
    {
        self.scan_with::<(), _>(outer, |i, sink, _| body(i, sink)).0
    }

    /// Like [`Verifier::scan`], also gathering per-index side output (such as
    /// existential witnesses) in the same order.
    pub(crate) fn scan_with<T, F>(&self, outer: usize, body: F) -> (Vec<Violation>, Vec<T>)
    where
        T: Send,
        F: Fn(usize, &mut Sink, &mut Vec<T>) + Sync + Send,
    {
        let cap = self.witness_cap.max(1);
        let run = |i: usize| {
            let mut sink = self.sink();
            let mut extra = Vec::new();
            body(i, &mut sink, &mut extra);
            (sink.out, extra)
        };
        let mut merged = Vec::new();
        let mut side = Vec::new();
        if self.parallel && outer > 1 {
            let parts: Vec<_> = (0..outer).into_par_iter().map(run).collect();
            for (v, extra) in parts {
                merged.extend(v);
                side.extend(extra);
                if merged.len() >= cap {
                    break;
                }
            }
        } else {
            for i in 0..outer {
                let (v, extra) = run(i);
                merged.extend(v);
                side.extend(extra);
                if merged.len() >= cap {
                    break;
                }
            }
        }
        merged.truncate(cap);
        (merged, side)
    }
}
