//! Integer intervals and the orders defined on them.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A closed interval `[lo, hi]` of nonnegative integers, `lo <= hi`.
///
/// The derived `Ord` is lexicographic on `(lo, hi)` and is only used for
/// sorting; the interval orders live in [`IntervalOrder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntInterval {
    lo: u32,
    hi: u32,
}

impl IntInterval {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(IntInterval { lo, hi })
    }

    pub const fn point(v: u32) -> Self {
        IntInterval { lo: v, hi: v }
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    /// `hi - lo`; zero for degenerate (point) intervals.
    pub fn width(self) -> u32 {
        self.hi - self.lo
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// `x <= y` in the strong order: `x` ends strictly before `y` starts, or
/// the intervals are equal.
pub fn leq_strong(x: IntInterval, y: IntInterval) -> bool {
    x.hi < y.lo || x == y
}

/// `x ⊆ y`.
pub fn subset(x: IntInterval, y: IntInterval) -> bool {
    x.lo >= y.lo && x.hi <= y.hi
}

/// `x <= y` in the weak order, i.e. the product order on endpoints.
pub fn leq_weak(x: IntInterval, y: IntInterval) -> bool {
    x.lo <= y.lo && x.hi <= y.hi
}

/// The interval orders a rank function or interval poset may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalOrder {
    Strong,
    Weak,
    Subset,
    /// `>=_W`, the dual of the weak order.
    DualWeak,
    /// `⊇`.
    Superset,
}

impl IntervalOrder {
    pub const ALL: [IntervalOrder; 5] = [
        IntervalOrder::Strong,
        IntervalOrder::Weak,
        IntervalOrder::Subset,
        IntervalOrder::DualWeak,
        IntervalOrder::Superset,
    ];

    pub fn leq(self, x: IntInterval, y: IntInterval) -> bool {
        match self {
            IntervalOrder::Strong => leq_strong(x, y),
            IntervalOrder::Weak => leq_weak(x, y),
            IntervalOrder::Subset => subset(x, y),
            IntervalOrder::DualWeak => leq_weak(y, x),
            IntervalOrder::Superset => subset(y, x),
        }
    }

    pub fn lt(self, x: IntInterval, y: IntInterval) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn name(self) -> &'static str {
        match self {
            IntervalOrder::Strong => "strong",
            IntervalOrder::Weak => "weak",
            IntervalOrder::Subset => "subset",
            IntervalOrder::DualWeak => "dual-weak",
            IntervalOrder::Superset => "superset",
        }
    }
}

impl fmt::Display for IntervalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every `[a, b]` with `lo_min <= a <= b <= hi_max`, lexicographically.
pub fn all_intervals(lo_min: u32, hi_max: u32) -> Vec<IntInterval> {
    (lo_min..=hi_max)
        .flat_map(|a| (a..=hi_max).map(move |b| IntInterval { lo: a, hi: b }))
        .collect()
}

/// Intervals with `lo_min <= lo < hi <= hi_max`, excluding single points.
pub fn proper_intervals(lo_min: u32, hi_max: u32) -> Vec<IntInterval> {
    all_intervals(lo_min, hi_max)
        .into_iter()
        .filter(|x| x.lo < x.hi)
        .collect()
}

fn interval_labels(ground: &[IntInterval]) -> Vec<String> {
    ground.iter().map(ToString::to_string).collect()
}

/// Materializes `order` on a finite set of distinct intervals.
pub fn interval_poset(ground: &[IntInterval], order: IntervalOrder) -> Result<Poset> {
    Poset::from_matrix(interval_labels(ground), |i, j| {
        order.leq(ground[i], ground[j])
    })
}

/// An explicit partial order on a finite list of intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRelationTable {
    ground: Vec<IntInterval>,
    order: Poset,
}

impl OrderRelationTable {
    /// Validates `leq` as a partial order over `ground`.
    pub fn new<F>(ground: Vec<IntInterval>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let order = Poset::from_matrix(interval_labels(&ground), leq)?;
        Ok(OrderRelationTable { ground, order })
    }

    pub fn from_interval_order(ground: Vec<IntInterval>, order: IntervalOrder) -> Result<Self> {
        let poset = interval_poset(&ground, order)?;
        Ok(OrderRelationTable {
            ground,
            order: poset,
        })
    }

    /// Total order following the ground list.
    pub fn chain(ground: Vec<IntInterval>) -> Result<Self> {
        Self::new(ground, |i, j| i <= j)
    }

    /// The discrete order: nothing comparable.
    pub fn antichain(ground: Vec<IntInterval>) -> Result<Self> {
        Self::new(ground, |i, j| i == j)
    }

    pub(crate) fn from_parts(ground: Vec<IntInterval>, order: Poset) -> Self {
        OrderRelationTable { ground, order }
    }

    pub fn ground(&self) -> &[IntInterval] {
        &self.ground
    }

    pub fn as_poset(&self) -> &Poset {
        &self.order
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.order.comparable(i, j)
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.ground == other.ground {
            Ok(())
        } else {
            Err(Error::GroundMismatch)
        }
    }

    /// For each distinct pair, in how many of the two orders it is comparable.
    fn comparability_counts(&self, other: &Self) -> Vec<u8> {
        let n = self.ground.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.comparable(i, j) as u8 + other.comparable(i, j) as u8)
            .collect()
    }
}

/// Every distinct pair is comparable in exactly one of the two orders.
pub fn are_conjugate(a: &OrderRelationTable, b: &OrderRelationTable) -> Result<bool> {
    a.same_ground(b)?;
    Ok(a.comparability_counts(b).iter().all(|&c| c == 1))
}

/// Every distinct pair is comparable in at least one of the two orders.
pub fn are_pseudo_conjugate(a: &OrderRelationTable, b: &OrderRelationTable) -> Result<bool> {
    a.same_ground(b)?;
    Ok(a.comparability_counts(b).iter().all(|&c| c >= 1))
}
