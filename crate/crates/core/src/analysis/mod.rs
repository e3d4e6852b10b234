//! Growth fitting, benchmark records, table reproduction, and the dynamic
//! priority-queue scenario.

pub mod bench;
pub mod dynamic;
pub mod growth;
pub mod suites;
pub mod tables;
pub mod workload;

pub use bench::{run_case, write_csv, BenchCase, BenchPlan, BenchRecord, CSV_HEADER};
pub use dynamic::{dynamic_scenario, generate_workload, DynamicTrace, QueueOp};
pub use growth::{growth_fit, GrowthClass, GrowthFit};
pub use suites::{differential_inputs, differential_suite, heap_property_suite, SuiteSummary};
pub use tables::{reproduce_tables, tables_report, CellStatus, ReportCell, TableId, TablesReport};
pub use workload::{Dataset, Distribution};
