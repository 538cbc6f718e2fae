//! Finite H_v-structures and their fuzzy and intuitionistic fuzzy
//! submodules.
//!
//! Carriers are at most 64 elements and subsets are bitmasks. Every check
//! lives on [`Verifier`], which only carries configuration. Grades are
//! generic over [`Grade`]; the default is exact rational arithmetic.

pub mod carrier;
pub mod error;
pub mod fixtures;
pub mod fundamental;
pub mod fuzzy;
pub mod hyper;
pub mod induce;
pub mod morphisms;
pub mod report;
pub mod submodules;
pub mod verifier;

pub use carrier::{Carrier, Subset, MAX_CARRIER};
pub use error::{Error, Result};
pub use fundamental::{Expr, ExpressionFamily, FundamentalModule, Origin, Partition};
pub use fuzzy::{CarrierMap, FuzzySet, Grade, IfSet, IfsOp, Modal, Q};
pub use hyper::{HvModule, HvRing, HyperAction, HyperOp};
pub use induce::{induce_hv_module, induce_hv_ring, level_classes, OrdModule, OrdRing};
pub use morphisms::{Asserted, Assertion, HvModuleMap, Side};
pub use report::{AxiomReport, ExistentialWitness, Fact, SubmoduleCertificate, Violation};
pub use verifier::Verifier;

pub type FuzzySetF64 = FuzzySet<f64>;
pub type IfSetF64 = IfSet<f64>;
