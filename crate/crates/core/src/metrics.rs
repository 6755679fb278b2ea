//! Per-thread field-operation counters.
//!
//! Counting is off unless a closure runs inside [`measure`]. Field
//! multiplications and inversions report here, attributed to whichever
//! decoding [`Step`] the running pipeline last entered. Each thread keeps its
//! own tally, so trials measured on different threads never interfere.

use std::cell::RefCell;
use std::fmt;
use std::ops::AddAssign;

/// Step labels of the decoding pipelines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// Erasure locator Λ(x) computed up front (Truong only).
    Locator,
    /// Interpolation of the received word.
    Interpolate,
    /// Preparation of the key-equation modulus or known polynomial.
    Prepare,
    /// Key-equation solving.
    Solve,
    /// Recovery of the message by exact division.
    Recover,
}

impl Step {
    pub const ALL: [Step; 5] = [
        Step::Locator,
        Step::Interpolate,
        Step::Prepare,
        Step::Solve,
        Step::Recover,
    ];

    fn index(self) -> usize {
        self as usize
    }

    /// Row label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Step::Locator => "0",
            Step::Interpolate => "1",
            Step::Prepare => "2a",
            Step::Solve => "2b",
            Step::Recover => "3",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StepCounts {
    pub mults: u64,
    pub invs: u64,
    pub iterations: u64,
}

impl AddAssign for StepCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.mults += rhs.mults;
        self.invs += rhs.invs;
        self.iterations += rhs.iterations;
    }
}

/// Operation counts of one measured run, broken down by step.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    steps: [StepCounts; 5],
}

impl OpCounts {
    pub fn step(&self, step: Step) -> StepCounts {
        self.steps[step.index()]
    }

    pub fn total(&self) -> StepCounts {
        let mut acc = StepCounts::default();
        for s in self.steps {
            acc += s;
        }
        acc
    }

    pub fn total_mults(&self) -> u64 {
        self.total().mults
    }
}

impl AddAssign for OpCounts {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.steps.iter_mut().zip(rhs.steps) {
            *a += b;
        }
    }
}

struct Tally {
    step: Step,
    counts: OpCounts,
    paused: u32,
}

thread_local! {
    static TALLY: RefCell<Option<Tally>> = const { RefCell::new(None) };
}

fn with_active(f: impl FnOnce(&mut Tally)) {
    TALLY.with(|cell| {
        if let Ok(mut slot) = cell.try_borrow_mut() {
            if let Some(tally) = slot.as_mut() {
                if tally.paused == 0 {
                    f(tally);
                }
            }
        }
    });
}

/// Runs `f` with counting enabled and returns its result with the counts.
///
/// Nested calls measure independently; the outer tally does not see the
/// inner run's operations.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let outer = TALLY.with(|cell| {
        cell.borrow_mut().replace(Tally {
            step: Step::Interpolate,
            counts: OpCounts::default(),
            paused: 0,
        })
    });
    let out = f();
    let tally = TALLY.with(|cell| std::mem::replace(&mut *cell.borrow_mut(), outer));
    (out, tally.map(|t| t.counts).unwrap_or_default())
}

/// Runs `f` without counting, e.g. for consistency checks that are not
/// part of the algorithm being measured.
pub fn unmetered<R>(f: impl FnOnce() -> R) -> R {
    let adjust = |up: bool| {
        TALLY.with(|cell| {
            if let Some(t) = cell.borrow_mut().as_mut() {
                t.paused = if up { t.paused + 1 } else { t.paused.saturating_sub(1) };
            }
        })
    };
    adjust(true);
    let out = f();
    adjust(false);
    out
}

pub(crate) fn enter(step: Step) {
    with_active(|t| t.step = step);
}

pub(crate) fn count_mul() {
    with_active(|t| t.counts.steps[t.step.index()].mults += 1);
}

pub(crate) fn count_inv() {
    with_active(|t| t.counts.steps[t.step.index()].invs += 1);
}

pub(crate) fn count_iteration() {
    with_active(|t| t.counts.steps[t.step.index()].iterations += 1);
}
