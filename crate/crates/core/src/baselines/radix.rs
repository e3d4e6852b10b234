use crate::element::{Keyed, SortKey, SortOrder};
use crate::error::{Error, Result};
use crate::instrumentation::OpCounters;

/// Digit alphabet size `base` (k) and number of digit passes `digits` (d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RadixPlan {
    pub base: u64,
    pub digits: u32,
}

impl RadixPlan {
    pub const DEFAULT_BASE: u64 = 256;

    pub fn new(base: u64, digits: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::domain(format!("radix base must be at least 2, got {base}")));
        }
        if digits == 0 {
            return Err(Error::domain("radix digit count must be positive"));
        }
        Ok(RadixPlan { base, digits })
    }

    /// Byte-wise plan wide enough for `max_key`: `k = 256`,
    /// `d = ceil(bits / 8)` with at least one pass.
    pub fn bytewise_for(max_key: u64) -> Self {
        let bits = u64::BITS - max_key.leading_zeros();
        RadixPlan {
            base: Self::DEFAULT_BASE,
            digits: bits.div_ceil(8).max(1),
        }
    }

    /// `k^d`, or `None` when it exceeds `u64`.
    pub fn capacity(&self) -> Option<u64> {
        self.base.checked_pow(self.digits)
    }

    pub fn covers(&self, key: u64) -> bool {
        self.capacity().is_none_or(|cap| key < cap)
    }
}

/// Stable LSD radix sort on non-negative integer keys.
///
/// Each pass is a counting sort on one digit, scattering every element once,
/// so a full run makes exactly `d·n` element moves and no key comparisons.
/// Passes alternate between the input and one scratch buffer; if the result
/// lands in the scratch buffer it is copied back in bulk, which is not
/// counted as a move. Metered space is `n` slots plus `k` digit counters.
pub fn radix_sort<T: Keyed>(
    elements: &mut [T],
    order: SortOrder,
    counters: &mut OpCounters,
    plan: Option<RadixPlan>,
) -> Result<()> {
    let mut max_key = 0;
    for e in elements.iter() {
        let key = e.key().radix_digits().ok_or_else(|| {
            Error::domain(format!("radix sort needs non-negative integer keys, got {}", e.key()))
        })?;
        max_key = max_key.max(key);
    }
    let plan = plan.unwrap_or_else(|| RadixPlan::bytewise_for(max_key));
    if !plan.covers(max_key) {
        return Err(Error::domain(format!(
            "key {max_key} does not fit in {} digits of base {}",
            plan.digits, plan.base
        )));
    }
    let n = elements.len();
    if n == 0 {
        return Ok(());
    }

    let base = plan.base;
    // `place` is `None` once `base^pass` overflows; every digit there is zero.
    let slot = |key: u64, place: Option<u64>| -> usize {
        let digit = place.map_or(0, |p| (key / p) % base);
        (match order {
            SortOrder::Ascending => digit,
            SortOrder::Descending => base - 1 - digit,
        }) as usize
    };

    counters.acquire_aux(base);
    let mut counts = vec![0usize; base as usize];
    let mut scratch = counters.scratch(elements);
    let mut in_scratch = false;
    let mut place = Some(1u64);
    for _ in 0..plan.digits {
        let (src, dst): (&[T], &mut [T]) = if in_scratch {
            (&scratch, &mut *elements)
        } else {
            (&*elements, &mut scratch)
        };
        counts.fill(0);
        for e in src {
            counts[slot(key_of(e), place)] += 1;
        }
        let mut total = 0;
        for c in counts.iter_mut() {
            let here = *c;
            *c = total;
            total += here;
        }
        for e in src {
            let s = slot(key_of(e), place);
            dst[counts[s]] = *e;
            counts[s] += 1;
        }
        counters.moves(n as u64);
        in_scratch = !in_scratch;
        place = place.and_then(|p| p.checked_mul(base));
    }
    if in_scratch {
        elements.copy_from_slice(&scratch);
    }
    counters.release_scratch(scratch);
    counters.release_aux(base);
    Ok(())
}

fn key_of<T: Keyed>(e: &T) -> u64 {
    e.key().radix_digits().expect("validated before sorting")
}
