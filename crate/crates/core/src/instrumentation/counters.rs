use std::fmt;

/// Machine-independent cost of one sort or heap run.
///
/// Every field only ever grows during a run. `aux_peak_slots` and
/// `recursion_peak` are high-water marks fed by [`OpCounters::acquire_aux`]
/// and [`OpCounters::enter`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounters {
    pub comparisons: u64,
    pub swaps: u64,
    pub element_moves: u64,
    pub aux_peak_slots: u64,
    pub recursion_peak: u64,
    aux_live: u64,
    depth: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn compare(&mut self) {
        self.comparisons += 1;
    }

    #[inline]
    pub fn swap(&mut self) {
        self.swaps += 1;
    }

    #[inline]
    pub fn moves(&mut self, count: u64) {
        self.element_moves += count;
    }

    /// Records `slots` auxiliary slots coming into use.
    pub fn acquire_aux(&mut self, slots: u64) {
        self.aux_live += slots;
        self.aux_peak_slots = self.aux_peak_slots.max(self.aux_live);
    }

    pub fn release_aux(&mut self, slots: u64) {
        debug_assert!(slots <= self.aux_live, "released more aux slots than held");
        self.aux_live = self.aux_live.saturating_sub(slots);
    }

    /// Allocates a metered scratch buffer initialised from `template`.
    ///
    /// This is the only way the library's sorts obtain element storage, so
    /// `aux_peak_slots` is exactly the largest scratch footprint alive at once.
    /// Hand the buffer back through [`OpCounters::release_scratch`].
    pub fn scratch<T: Copy>(&mut self, template: &[T]) -> Vec<T> {
        self.acquire_aux(template.len() as u64);
        template.to_vec()
    }

    pub fn release_scratch<T>(&mut self, buffer: Vec<T>) {
        self.release_aux(buffer.len() as u64);
    }

    /// Marks entry into one level of recursion.
    pub fn enter(&mut self) {
        self.depth += 1;
        self.recursion_peak = self.recursion_peak.max(self.depth);
    }

    pub fn exit(&mut self) {
        debug_assert!(self.depth > 0, "unbalanced recursion exit");
        self.depth = self.depth.saturating_sub(1);
    }

    /// The five reported counters, dropping the in-flight bookkeeping.
    pub fn snapshot(&self) -> OpCounters {
        OpCounters {
            comparisons: self.comparisons,
            swaps: self.swaps,
            element_moves: self.element_moves,
            aux_peak_slots: self.aux_peak_slots,
            recursion_peak: self.recursion_peak,
            aux_live: 0,
            depth: 0,
        }
    }
}

impl fmt::Display for OpCounters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "comparisons={} swaps={} element_moves={} aux_peak_slots={} recursion_peak={}",
            self.comparisons, self.swaps, self.element_moves, self.aux_peak_slots, self.recursion_peak
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn starts_at_zero() {
        assert_eq!(OpCounters::new().snapshot(), OpCounters::default());
    }

    #[test]
    fn peaks_track_high_water_marks() {
        let mut c = OpCounters::new();
        c.acquire_aux(4);
        c.acquire_aux(3);
        c.release_aux(7);
        c.acquire_aux(5);
        assert_eq!(c.aux_peak_slots, 7);

        c.enter();
        c.enter();
        c.exit();
        c.enter();
        c.exit();
        c.exit();
        assert_eq!(c.recursion_peak, 2);
    }

    #[test]
    fn scratch_is_metered() {
        let mut c = OpCounters::new();
        let buf = c.scratch(&[1, 2, 3]);
        assert_eq!(c.aux_peak_slots, 3);
        c.release_scratch(buf);
        let buf = c.scratch(&[1, 2]);
        c.release_scratch(buf);
        assert_eq!(c.aux_peak_slots, 3);
    }
}
