//! Interleaved insert/extract-max workloads run against the heap and a
//! sorted-list oracle side by side.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::heap::{Heap, HeapOrder};
use crate::instrumentation::OpCounters;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueueOp {
    Push(i64),
    ExtractMax,
}

/// A random workload of `len` operations that never extracts from an empty
/// queue. Pushes are drawn with probability `push_probability` whenever the
/// queue is nonempty.
pub fn generate_workload(len: usize, push_probability: f64, seed: u64) -> Vec<QueueOp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut live = 0usize;
    (0..len)
        .map(|_| {
            if live == 0 || rng.gen_bool(push_probability) {
                live += 1;
                QueueOp::Push(rng.gen_range(-1_000_000..1_000_000))
            } else {
                live -= 1;
                QueueOp::ExtractMax
            }
        })
        .collect()
}

/// Ascending `Vec`; inserts scan from the back and shift larger elements.
#[derive(Debug, Default)]
struct SortedListOracle {
    items: Vec<i64>,
    shifts: u64,
}

impl SortedListOracle {
    fn push(&mut self, x: i64) {
        let mut pos = self.items.len();
        while pos > 0 && self.items[pos - 1] > x {
            pos -= 1;
        }
        self.shifts += (self.items.len() - pos) as u64;
        self.items.insert(pos, x);
    }

    fn extract_max(&mut self) -> Option<i64> {
        self.items.pop()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DynamicStep {
    pub op: QueueOp,
    /// Value returned by the extraction, if the op was one.
    pub extracted: Option<i64>,
    pub heap_comparisons: u64,
    pub oracle_shifts: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DynamicTrace {
    pub steps: Vec<DynamicStep>,
}

impl DynamicTrace {
    pub fn heap_comparisons(&self) -> u64 {
        self.steps.last().map_or(0, |s| s.heap_comparisons)
    }

    pub fn oracle_shifts(&self) -> u64 {
        self.steps.last().map_or(0, |s| s.oracle_shifts)
    }

    pub fn extracted(&self) -> Vec<i64> {
        self.steps.iter().filter_map(|s| s.extracted).collect()
    }
}

/// Executes `ops` on a max-heap and on the oracle, checking after every step
/// that both agree on the extracted value, the size, and the maximum.
///
/// On disagreement the error carries the shortest failing prefix.
pub fn dynamic_scenario(ops: &[QueueOp]) -> Result<DynamicTrace> {
    let mut heap = Heap::new(HeapOrder::MaxAtRoot);
    let mut counters = OpCounters::new();
    let mut oracle = SortedListOracle::default();
    let mut trace = DynamicTrace::default();

    for (step, &op) in ops.iter().enumerate() {
        let fail = |detail: String| Error::DifferentialFailure {
            step,
            detail: format!("{detail}; failing prefix: {}", render_prefix(&ops[..=step])),
        };
        let extracted = match op {
            QueueOp::Push(x) => {
                heap.push(x, &mut counters);
                oracle.push(x);
                None
            }
            QueueOp::ExtractMax => {
                let expect = oracle
                    .extract_max()
                    .ok_or_else(|| fail("extract from an empty queue".into()))?;
                let got = heap.pop_root(&mut counters).map_err(|e| fail(e.to_string()))?;
                if got != expect {
                    return Err(fail(format!("heap extracted {got}, oracle {expect}")));
                }
                Some(got)
            }
        };
        if heap.len() != oracle.items.len() {
            return Err(fail(format!(
                "heap holds {} elements, oracle {}",
                heap.len(),
                oracle.items.len()
            )));
        }
        if heap.peek().ok() != oracle.items.last().copied() {
            return Err(fail("maxima differ".into()));
        }
        if !heap.is_valid() {
            return Err(fail("is_heap failed".into()));
        }
        trace.steps.push(DynamicStep {
            op,
            extracted,
            heap_comparisons: counters.comparisons,
            oracle_shifts: oracle.shifts,
        });
    }

    let mut remaining = heap.as_slice().to_vec();
    remaining.sort_unstable();
    if remaining != oracle.items {
        return Err(Error::DifferentialFailure {
            step: ops.len(),
            detail: "final multisets differ".into(),
        });
    }
    Ok(trace)
}

fn render_prefix(ops: &[QueueOp]) -> String {
    const SHOWN: usize = 32;
    let body: Vec<String> = ops
        .iter()
        .take(SHOWN)
        .map(|op| match op {
            QueueOp::Push(x) => format!("push {x}"),
            QueueOp::ExtractMax => "extract".to_string(),
        })
        .collect();
    if ops.len() > SHOWN {
        format!("[{} ... ({} ops)]", body.join(", "), ops.len())
    } else {
        format!("[{}]", body.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_in_ten_out() {
        let values = [5i64, -3, 12, 0, 7, 7, 99, -50, 1, 2];
        let mut ops: Vec<QueueOp> = values.iter().map(|&v| QueueOp::Push(v)).collect();
        ops.extend(std::iter::repeat_n(QueueOp::ExtractMax, 10));
        let trace = dynamic_scenario(&ops).unwrap();
        let mut expect = values.to_vec();
        expect.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(trace.extracted(), expect);
    }

    #[test]
    fn generator_never_underflows() {
        let ops = generate_workload(5000, 0.3, 1);
        let mut live = 0i64;
        for op in ops {
            live += if op == QueueOp::ExtractMax { -1 } else { 1 };
            assert!(live >= 0);
        }
    }

    #[test]
    fn mixed_workload_agrees_and_is_cheaper() {
        let ops = generate_workload(10_000, 0.6, 0);
        let trace = dynamic_scenario(&ops).unwrap();
        assert_eq!(trace.steps.len(), 10_000);
        assert!(trace.heap_comparisons() < trace.oracle_shifts());
    }

    #[test]
    fn extracting_from_empty_is_reported() {
        let err = dynamic_scenario(&[QueueOp::Push(1), QueueOp::ExtractMax, QueueOp::ExtractMax]);
        assert!(matches!(err, Err(Error::DifferentialFailure { step: 2, .. })));
    }
}
