//! Instrumented binary heap, in-place heapsort, six baseline sorts, and the
//! measurement harness used to check their operation-count complexity,
//! auxiliary space, and stability.
//!
//! Every sort takes an explicit [`OpCounters`] so runs are deterministic and
//! independent of wall-clock noise.

pub mod analysis;
pub mod baselines;
pub mod element;
pub mod error;
pub mod heap;
pub mod instrumentation;
pub mod uhs;


pub use baselines::{AlgorithmId, PivotRule, RadixPlan, SortConfig};
pub use element::{Decimal, Keyed, SortKey, SortOrder, TaggedElement};
pub use error::{Error, Result};
pub use heap::{Heap, HeapOrder};
pub use instrumentation::OpCounters;
