//! Arithmetic operation counting.
//!
//! Every scalar domain reports its ring operations here. Counting is off
//! unless a [`measure`] scope is active on the current thread, so counts are
//! per invocation and never shared between threads.

use std::cell::Cell;

/// Scalar operation tallies. Divisions and inversions are counted as
/// multiplications; negations as additions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub mults: u64,
    pub adds: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.mults + self.adds
    }
}

impl std::ops::Add for OpCounts {
    type Output = OpCounts;

    fn add(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            mults: self.mults + rhs.mults,
            adds: self.adds + rhs.adds,
        }
    }
}

thread_local! {
    static ACTIVE: Cell<bool> = const { Cell::new(false) };
    static MULTS: Cell<u64> = const { Cell::new(0) };
    static ADDS: Cell<u64> = const { Cell::new(0) };
}

#[inline]
pub(crate) fn tick_mul() {
    if ACTIVE.with(Cell::get) {
        MULTS.with(|c| c.set(c.get() + 1));
    }
}

#[inline]
pub(crate) fn tick_add() {
    if ACTIVE.with(Cell::get) {
        ADDS.with(|c| c.set(c.get() + 1));
    }
}

/// Runs `f` with counting enabled and returns its result together with the
/// operations it performed. Scopes nest: an inner scope's operations are
/// also charged to the enclosing one.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let was_active = ACTIVE.with(|a| a.replace(true));
    let outer_mults = MULTS.with(|c| c.replace(0));
    let outer_adds = ADDS.with(|c| c.replace(0));

    let result = f();

    let counts = OpCounts {
        mults: MULTS.with(Cell::get),
        adds: ADDS.with(Cell::get),
    };
    MULTS.with(|c| c.set(outer_mults + counts.mults));
    ADDS.with(|c| c.set(outer_adds + counts.adds));
    ACTIVE.with(|a| a.set(was_active));
    (result, counts)
}
