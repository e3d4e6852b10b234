//! Binary heap over a contiguous sequence.
//!
//! Storage is 0-based: the children of `i` are `2i + 1` and `2i + 2`. The
//! slice-level functions (`sift_down`, `sift_up`, `build_in_place`) work on
//! any `&mut [T]` plus a live `heap_size`, which lets heapsort run in place
//! on caller storage. [`Heap`] wraps the same functions around an owned
//! `Vec` for priority-queue use.
//!
//! Sifting never allocates and never recurses, so a heap operation needs no
//! auxiliary element storage and constant control space.

use std::cell::Cell;

use crate::element::Keyed;
use crate::error::{Error, Result};
use crate::instrumentation::OpCounters;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HeapOrder {
    #[default]
    MaxAtRoot,
    MinAtRoot,
}

impl HeapOrder {
    /// Strict domination: `a` must sit above `b`.
    #[inline]
    pub fn dominates<K: Ord>(self, a: &K, b: &K) -> bool {
        match self {
            HeapOrder::MaxAtRoot => a > b,
            HeapOrder::MinAtRoot => a < b,
        }
    }
}

/// Height of a node above the leaf level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeHeight(pub u32);

#[inline]
pub fn left(i: usize) -> usize {
    2 * i + 1
}

#[inline]
pub fn right(i: usize) -> usize {
    2 * i + 2
}

pub fn parent(i: usize) -> Result<usize> {
    if i == 0 {
        return Err(Error::domain("the root has no parent"));
    }
    Ok((i - 1) / 2)
}

/// Height of node `i` in a complete tree of `n` nodes; leaves are 0.
pub fn node_height(i: usize, n: usize) -> Result<NodeHeight> {
    if i >= n {
        return Err(Error::domain(format!("node {i} is not in a tree of {n} nodes")));
    }
    // The leftmost descending path is always the longest in a complete tree.
    let mut height = 0;
    let mut j = i;
    while left(j) < n {
        j = left(j);
        height += 1;
    }
    Ok(NodeHeight(height))
}

thread_local! {
    static CHILD_SELECTION_FAULT: Cell<bool> = const { Cell::new(false) };
}

/// Mutation hook for exercising the verification harness: while enabled on
/// the current thread, `sift_down` descends into the wrong child.
#[doc(hidden)]
pub fn set_child_selection_fault(enabled: bool) {
    CHILD_SELECTION_FAULT.with(|f| f.set(enabled));
}

fn child_selection_fault() -> bool {
    CHILD_SELECTION_FAULT.with(Cell::get)
}

fn check_in_heap(i: usize, heap_size: usize, len: usize) -> Result<()> {
    if heap_size > len {
        return Err(Error::domain(format!(
            "heap_size {heap_size} exceeds storage length {len}"
        )));
    }
    if i >= heap_size {
        return Err(Error::IndexOutOfHeap { index: i, heap_size });
    }
    Ok(())
}

/// Lets `elements[i]` descend until it dominates both of its children.
///
/// Both subtrees of `i` must already be heaps. Costs at most two comparisons
/// per level: one between the children, one against the parent. Children
/// that tie with each other resolve to the left one, and a child equal to
/// its parent is never swapped up.
pub fn sift_down<T: Keyed>(
    elements: &mut [T],
    heap_size: usize,
    i: usize,
    order: HeapOrder,
    counters: &mut OpCounters,
) -> Result<()> {
    check_in_heap(i, heap_size, elements.len())?;
    let faulty = child_selection_fault();
    let mut node = i;
    loop {
        let l = left(node);
        if l >= heap_size {
            break;
        }
        let r = l + 1;
        let mut child = l;
        if r < heap_size {
            counters.compare();
            if order.dominates(&elements[r].key(), &elements[l].key()) != faulty {
                child = r;
            }
        }
        counters.compare();
        if !order.dominates(&elements[child].key(), &elements[node].key()) {
            break;
        }
        elements.swap(node, child);
        counters.swap();
        node = child;
    }
    Ok(())
}

/// Lets `elements[i]` ascend while it dominates its parent. Returns the
/// index where it settled.
pub fn sift_up<T: Keyed>(
    elements: &mut [T],
    heap_size: usize,
    i: usize,
    order: HeapOrder,
    counters: &mut OpCounters,
) -> Result<usize> {
    check_in_heap(i, heap_size, elements.len())?;
    let mut node = i;
    while node > 0 {
        let p = (node - 1) / 2;
        counters.compare();
        if !order.dominates(&elements[node].key(), &elements[p].key()) {
            break;
        }
        elements.swap(node, p);
        counters.swap();
        node = p;
    }
    Ok(node)
}

/// Bottom-up heap construction: sift down every internal node from
/// `n/2 - 1` to the root.
///
/// Each sift at a node of height `h` costs at most `2h` comparisons, and
/// node heights sum to at most `n - 1`, so the whole build costs at most
/// `2(n - 1)` comparisons.
pub fn build_in_place<T: Keyed>(elements: &mut [T], order: HeapOrder, counters: &mut OpCounters) {
    let n = elements.len();
    for i in (0..n / 2).rev() {
        sift_down(elements, n, i, order, counters).expect("internal node is inside the heap");
    }
}

/// True iff every parent in `elements[..size]` dominates or equals its
/// children under `order`. Returns false when `size` exceeds the slice.
pub fn is_heap<T: Keyed>(elements: &[T], size: usize, order: HeapOrder) -> bool {
    if size > elements.len() {
        return false;
    }
    (1..size).all(|c| {
        let p = (c - 1) / 2;
        !order.dominates(&elements[c].key(), &elements[p].key())
    })
}

/// An owned binary heap.
///
/// `elements[..heap_size]` is the live heap. Popped elements stay parked past
/// `heap_size` (so draining a max-heap leaves `elements` ascending) and are
/// overwritten by later pushes.
#[derive(Debug, Clone, PartialEq)]
pub struct Heap<T> {
    elements: Vec<T>,
    heap_size: usize,
    order: HeapOrder,
}

impl<T: Keyed> Heap<T> {
    pub fn new(order: HeapOrder) -> Self {
        Heap {
            elements: Vec::new(),
            heap_size: 0,
            order,
        }
    }

    pub fn build(elements: Vec<T>, order: HeapOrder, counters: &mut OpCounters) -> Self {
        let mut elements = elements;
        build_in_place(&mut elements, order, counters);
        Heap {
            heap_size: elements.len(),
            elements,
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.heap_size
    }

    pub fn is_empty(&self) -> bool {
        self.heap_size == 0
    }

    pub fn order(&self) -> HeapOrder {
        self.order
    }

    /// The live heap, root first.
    pub fn as_slice(&self) -> &[T] {
        &self.elements[..self.heap_size]
    }

    /// The full backing storage, including parked elements past the heap.
    pub fn storage(&self) -> &[T] {
        &self.elements
    }

    pub fn into_storage(self) -> Vec<T> {
        self.elements
    }

    pub fn peek(&self) -> Result<T> {
        self.as_slice().first().copied().ok_or(Error::EmptyHeap)
    }

    pub fn push(&mut self, x: T, counters: &mut OpCounters) {
        if self.heap_size == self.elements.len() {
            self.elements.push(x);
        } else {
            self.elements[self.heap_size] = x;
        }
        counters.moves(1);
        self.heap_size += 1;
        sift_up(
            &mut self.elements,
            self.heap_size,
            self.heap_size - 1,
            self.order,
            counters,
        )
        .expect("appended index is inside the heap");
    }

    /// Removes the root: swap it with the last live element, shrink the
    /// boundary, and sift the new root down.
    pub fn pop_root(&mut self, counters: &mut OpCounters) -> Result<T> {
        if self.heap_size == 0 {
            return Err(Error::EmptyHeap);
        }
        self.remove_at(0, counters)
    }

    /// Removes `elements[i]`. The last live element fills the hole and is
    /// sifted up, or down if it did not move up.
    pub fn remove_at(&mut self, i: usize, counters: &mut OpCounters) -> Result<T> {
        if i >= self.heap_size {
            return Err(Error::IndexOutOfHeap {
                index: i,
                heap_size: self.heap_size,
            });
        }
        let last = self.heap_size - 1;
        if i != last {
            self.elements.swap(i, last);
            counters.swap();
        }
        self.heap_size = last;
        if i < self.heap_size {
            let settled = sift_up(&mut self.elements, self.heap_size, i, self.order, counters)?;
            if settled == i {
                sift_down(&mut self.elements, self.heap_size, i, self.order, counters)?;
            }
        }
        Ok(self.elements[last])
    }

    pub fn is_valid(&self) -> bool {
        is_heap(&self.elements, self.heap_size, self.order)
    }
}
