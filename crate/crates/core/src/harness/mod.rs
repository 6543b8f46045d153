//! Experiment specs, verification suites and their reports.

mod report;
mod spec;
mod suites;
mod verify;

pub use report::{CheckResult, ExperimentReport, InstanceRow, Outcome, Summary};
pub use spec::{verify_binding, Check, ClassDescriptor, ExperimentSpec, Family, GeneratorPlan, NamedClass};
pub use suites::{run_suite, table1, table1_fixtures, SuiteOptions, SUITES};
pub use verify::{
    verify_equivalence, verify_equivalences, verify_hadwiger, verify_separator_bound, verify_unboundedness,
    Equivalence, UnboundedFamily,
};
