//! Open-addressing transposition table holding value bounds per position.
//!
//! Entries live in two-slot buckets. The table starts small, doubles while
//! under its memory cap, and afterwards overwrites on collision. Every entry
//! is a bound on an exact game value, so eviction never changes results.

use std::mem::size_of;

#[derive(Clone, Copy, Default)]
struct Entry {
    dominator: u64,
    staller: u64,
    lo: u8,
    hi: u8,
    used: bool,
}

pub(crate) struct Table {
    slots: Vec<Entry>,
    mask: usize,
    filled: usize,
    max_slots: usize,
}

const INITIAL_SLOTS: usize = 1 << 10;

impl Table {
    pub fn new(memory_bytes: usize) -> Table {
        let max_slots = (memory_bytes / size_of::<Entry>()).max(INITIAL_SLOTS);
        let max_slots = if max_slots.is_power_of_two() {
            max_slots
        } else {
            max_slots.next_power_of_two() >> 1
        };
        let size = INITIAL_SLOTS.min(max_slots);
        Table {
            slots: vec![Entry::default(); size],
            mask: size - 1,
            filled: 0,
            max_slots,
        }
    }

    #[inline]
    fn index(&self, dominator: u64, staller: u64) -> usize {
        let h = (dominator ^ staller.rotate_left(29) ^ staller >> 7)
            .wrapping_mul(0x9E37_79B9_7F4A_7C15);
        (h >> 20) as usize & self.mask & !1
    }

    /// `(lo, hi)` with `lo <= value <= hi`, if the position is stored.
    #[inline]
    pub fn get(&self, dominator: u64, staller: u64) -> Option<(u8, u8)> {
        let i = self.index(dominator, staller);
        self.slots[i..i + 2]
            .iter()
            .find(|e| e.used && e.dominator == dominator && e.staller == staller)
            .map(|e| (e.lo, e.hi))
    }

    pub fn store(&mut self, dominator: u64, staller: u64, lo: u8, hi: u8) {
        let i = self.index(dominator, staller);
        let bucket = &mut self.slots[i..i + 2];
        if let Some(e) = bucket
            .iter_mut()
            .find(|e| e.used && e.dominator == dominator && e.staller == staller)
        {
            e.lo = e.lo.max(lo);
            e.hi = e.hi.min(hi);
            return;
        }
        let fresh = Entry {
            dominator,
            staller,
            lo,
            hi,
            used: true,
        };
        match bucket.iter_mut().find(|e| !e.used) {
            Some(e) => {
                *e = fresh;
                self.filled += 1;
            }
            None => bucket[0] = fresh,
        }
        if self.filled * 2 > self.slots.len() && self.slots.len() < self.max_slots {
            self.grow();
        }
    }

    fn grow(&mut self) {
        let doubled = vec![Entry::default(); self.slots.len() * 2];
        let old = std::mem::replace(&mut self.slots, doubled);
        self.mask = self.slots.len() - 1;
        self.filled = 0;
        for e in old.into_iter().filter(|e| e.used) {
            self.store(e.dominator, e.staller, e.lo, e.hi);
        }
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.filled
    }
}
