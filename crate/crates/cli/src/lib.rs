//! Structure files, verification suites and seeded fixtures for the `hyvkit` binary.

pub mod format;
pub mod suites;
