//! Verification of every inequality over single functions and corpora.

mod corpus;
mod families;
mod report;
mod solver;

pub use corpus::{verify_corpus, CheckTally, CorpusSpec, CorpusSummary, FailureRecord, MAX_EXHAUSTIVE_N};
pub use families::{counterexample_constraints, verify_families, FamilyCheck, FamilySummary};
pub use report::{
    quartic_ratio, rational_string, sha256_hex, table_identity, verify_function, verify_with,
    MeasureReport, Status, Verdict, CHECK_NAMES, NONCONSTANT_ONLY, REPORT_VERSION,
};
pub use solver::Solver;
