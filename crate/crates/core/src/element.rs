//! Element and key types shared by the heap and every sort.
//!
//! Sorts operate on any [`Keyed`] element: a bare key (`i64`, `u64`,
//! [`Decimal`]) or a [`TaggedElement`] carrying its original position.
//! Only the key ever takes part in a comparison.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A totally ordered key.
///
/// The two projections describe the domains of the non-comparison sorts:
/// bucket sort needs a value in `[0, 1)`, radix sort needs a non-negative
/// integer. Keys outside those domains return `None` and the sort reports a
/// domain error.
pub trait SortKey: Ord + Copy + fmt::Debug + fmt::Display {
    fn unit_interval(&self) -> Option<f64>;
    fn radix_digits(&self) -> Option<u64>;
}

impl SortKey for i64 {
    fn unit_interval(&self) -> Option<f64> {
        None
    }

    fn radix_digits(&self) -> Option<u64> {
        u64::try_from(*self).ok()
    }
}

impl SortKey for u64 {
    fn unit_interval(&self) -> Option<f64> {
        None
    }

    fn radix_digits(&self) -> Option<u64> {
        Some(*self)
    }
}

/// A 64-bit decimal with a total order.
///
/// NaN is rejected on construction and `-0.0` is folded into `0.0`, so the
/// derived order is a plain numeric order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decimal(f64);

impl Decimal {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() {
            return Err(Error::domain("NaN is not an orderable key"));
        }
        Ok(Decimal(if value == 0.0 { 0.0 } else { value }))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Eq for Decimal {}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Decimal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value: f64 = s
            .parse()
            .map_err(|_| Error::domain(format!("not a decimal: {s:?}")))?;
        Decimal::new(value)
    }
}

impl SortKey for Decimal {
    fn unit_interval(&self) -> Option<f64> {
        (0.0..1.0).contains(&self.0).then_some(self.0)
    }

    fn radix_digits(&self) -> Option<u64> {
        None
    }
}

/// Anything a sort can order.
pub trait Keyed: Copy {
    type Key: SortKey;

    fn key(&self) -> Self::Key;
}

impl<K: SortKey> Keyed for K {
    type Key = K;

    fn key(&self) -> K {
        *self
    }
}

/// A key paired with its index in the original input.
///
/// `origin` never participates in ordering; it exists so stability can be
/// judged after the sort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaggedElement<K> {
    pub key: K,
    pub origin: usize,
}

impl<K: SortKey> TaggedElement<K> {
    /// Tags each key with its position.
    pub fn tag_all(keys: &[K]) -> Vec<Self> {
        keys.iter()
            .enumerate()
            .map(|(origin, &key)| TaggedElement { key, origin })
            .collect()
    }
}

impl<K: SortKey> Keyed for TaggedElement<K> {
    type Key = K;

    fn key(&self) -> K {
        self.key
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SortOrder {
    #[default]
    Ascending,
    Descending,
}

impl SortOrder {
    /// True when `a` must be placed strictly before `b`.
    #[inline]
    pub fn strictly_before<K: Ord>(self, a: &K, b: &K) -> bool {
        match self {
            SortOrder::Ascending => a < b,
            SortOrder::Descending => a > b,
        }
    }

    /// True when `a` may be placed before `b` (`a ≤ b` for ascending).
    #[inline]
    pub fn in_order<K: Ord>(self, a: &K, b: &K) -> bool {
        !self.strictly_before(b, a)
    }
}

/// True when `elements` is ordered by key according to `order`.
pub fn is_sorted_by_key<T: Keyed>(elements: &[T], order: SortOrder) -> bool {
    elements
        .windows(2)
        .all(|w| order.in_order(&w[0].key(), &w[1].key()))
}
