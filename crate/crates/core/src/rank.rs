//! Interval rank functions and the interval rank poset.
//!
//! For a bounded poset of height `h`, the standard interval rank of `a` is
//! `[height(↑a) - 1, h - height(↓a)]`: the top has rank `[0,0]`, the bottom
//! `[h-1,h-1]`, and exactly the elements on a longest chain get point
//! intervals. Collapsing equal ranks and ordering the distinct intervals by
//! `>=_W` gives the interval rank poset; iterating that construction always
//! ends in a chain, which induces a total preorder on the original elements.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::interval::{IntInterval, IntervalOrder};
use crate::poset::{Heights, Poset};

/// An interval per element of `poset`, with every endpoint `<= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankAssignment<'a> {
    poset: &'a Poset,
    ranks: Vec<IntInterval>,
    bound: u32,
}

impl<'a> RankAssignment<'a> {
    pub fn new(poset: &'a Poset, ranks: Vec<IntInterval>, bound: u32) -> Result<Self> {
        if ranks.len() != poset.len() {
            return Err(Error::LabelCount {
                expected: poset.len(),
                got: ranks.len(),
            });
        }
        if let Some(r) = ranks.iter().find(|r| r.hi() > bound) {
            return Err(Error::Range(format!("{r} exceeds bound {bound}")));
        }
        Ok(RankAssignment {
            poset,
            ranks,
            bound,
        })
    }

    pub fn poset(&self) -> &'a Poset {
        self.poset
    }

    pub fn ranks(&self) -> &[IntInterval] {
        &self.ranks
    }

    pub fn get(&self, a: usize) -> IntInterval {
        self.ranks[a]
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }
}

fn rankable_heights(p: &Poset) -> Result<Heights> {
    if p.len() < 2 {
        return Err(Error::TooSmall);
    }
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    Ok(p.heights())
}

fn interval(lo: usize, hi: usize) -> IntInterval {
    IntInterval::new(lo as u32, hi as u32).expect("rank endpoints are ordered")
}

/// `a ↦ [height(↑a) - 1, h - height(↓a)]`.
pub fn standard_rank(p: &Poset) -> Result<RankAssignment<'_>> {
    let hs = rankable_heights(p)?;
    let h = hs.height;
    let ranks = (0..p.len())
        .map(|a| interval(hs.up[a] - 1, h - hs.down[a]))
        .collect();
    RankAssignment::new(p, ranks, (h - 1) as u32)
}

/// `a ↦ [height(↑a) - 1, h + height(↓a) - 2]`.
pub fn conjugate_rank(p: &Poset) -> Result<RankAssignment<'_>> {
    let hs = rankable_heights(p)?;
    let h = hs.height;
    let ranks = (0..p.len())
        .map(|a| interval(hs.up[a] - 1, h + hs.down[a] - 2))
        .collect();
    RankAssignment::new(p, ranks, 2 * (h - 1) as u32)
}

/// Which interval order an interval-valued map is a strict rank function
/// for, read off the monotonicity of its endpoint maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RankClass {
    Weak,
    DualWeak,
    Subset,
    Superset,
    None,
}

impl RankClass {
    pub fn order(self) -> Option<IntervalOrder> {
        match self {
            RankClass::Weak => Some(IntervalOrder::Weak),
            RankClass::DualWeak => Some(IntervalOrder::DualWeak),
            RankClass::Subset => Some(IntervalOrder::Subset),
            RankClass::Superset => Some(IntervalOrder::Superset),
            RankClass::None => None,
        }
    }
}

impl fmt::Display for RankClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            Some(o) => write!(f, "{o}"),
            None => f.write_str("none"),
        }
    }
}

#[derive(Clone, Copy)]
enum Direction {
    Isotone,
    Antitone,
}

fn strictly(p: &Poset, values: impl Fn(usize) -> u32, dir: Direction) -> bool {
    (0..p.len()).all(|a| {
        p.above(a).all(|b| match dir {
            Direction::Isotone => values(a) < values(b),
            Direction::Antitone => values(a) > values(b),
        })
    })
}

/// Classifies `f` by the strict monotonicity of its endpoints.
///
/// On a poset with at least one strict comparison at most one class can
/// match. On an antichain every class matches vacuously and the first of
/// dual-weak, subset, weak, superset is reported.
pub fn classify_rank_function(f: &RankAssignment<'_>) -> RankClass {
    use Direction::*;
    let p = f.poset;
    let lo = |dir| strictly(p, |a| f.ranks[a].lo(), dir);
    let hi = |dir| strictly(p, |a| f.ranks[a].hi(), dir);
    if lo(Antitone) && hi(Antitone) {
        RankClass::DualWeak
    } else if lo(Antitone) && hi(Isotone) {
        RankClass::Subset
    } else if lo(Isotone) && hi(Isotone) {
        RankClass::Weak
    } else if lo(Isotone) && hi(Antitone) {
        RankClass::Superset
    } else {
        RankClass::None
    }
}

/// Whether `a < b` implies `f(a)` strictly below `f(b)` in `order`.
pub fn is_interval_rank_function(f: &RankAssignment<'_>, order: IntervalOrder) -> bool {
    let p = f.poset;
    (0..p.len()).all(|a| p.above(a).all(|b| order.lt(f.ranks[a], f.ranks[b])))
}

/// Homomorphic image of a poset under an interval rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankPoset {
    intervals: Vec<IntInterval>,
    order: Poset,
    blocks: Vec<usize>,
}

impl RankPoset {
    fn from_ranks(ranks: &[IntInterval], order: IntervalOrder) -> Result<RankPoset> {
        let mut intervals = ranks.to_vec();
        intervals.sort_unstable();
        intervals.dedup();
        let blocks = ranks
            .iter()
            .map(|r| intervals.binary_search(r).expect("rank is present"))
            .collect();
        let labels = intervals.iter().map(ToString::to_string).collect();
        let poset = Poset::from_matrix(labels, |i, j| order.leq(intervals[i], intervals[j]))?;
        Ok(RankPoset {
            intervals,
            order: poset,
            blocks,
        })
    }

    /// Distinct rank values, sorted lexicographically.
    pub fn intervals(&self) -> &[IntInterval] {
        &self.intervals
    }

    /// The image poset; element `i` is `intervals()[i]`.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// `blocks()[a]` is the image element source element `a` maps to.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Source elements collapsed onto image element `i`.
    pub fn block_members(&self, i: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&a| self.blocks[a] == i)
            .collect()
    }
}

/// Distinct standard ranks ordered by `>=_W`.
pub fn rank_image(p: &Poset) -> Result<RankPoset> {
    let r = standard_rank(p)?;
    RankPoset::from_ranks(r.ranks(), IntervalOrder::DualWeak)
}

/// Distinct conjugate ranks ordered by `⊆`.
pub fn conjugate_image(p: &Poset) -> Result<RankPoset> {
    let r = conjugate_rank(p)?;
    RankPoset::from_ranks(r.ranks(), IntervalOrder::Subset)
}

/// `[x, y] ↦ [x, 2(h-1) - y]`, carrying standard ranks onto conjugate ranks.
pub fn phi(x: IntInterval, height: usize) -> Result<IntInterval> {
    let span = 2 * height.saturating_sub(1) as u32;
    let hi = span
        .checked_sub(x.hi())
        .ok_or_else(|| Error::Range(format!("{x} does not fit height {height}")))?;
    IntInterval::new(x.lo(), hi).map_err(|_| Error::Range(format!("{x} maps to an empty interval")))
}

/// Same elements, ordered by `p < q` iff `R(p) >_W R(q)`. Equal ranks stay
/// incomparable.
pub fn rank_all(p: &Poset) -> Result<Poset> {
    let r = standard_rank(p)?;
    let ranks = r.ranks();
    Poset::from_matrix(p.labels().to_vec(), |a, b| {
        a == b || IntervalOrder::DualWeak.lt(ranks[a], ranks[b])
    })
}

/// Successive rank images of a poset, down to a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationTrace {
    /// `stages[k]` is the rank operator applied `k + 1` times.
    pub stages: Vec<RankPoset>,
    pub iterations_to_chain: usize,
    /// Ordered partition of the original elements, top level first.
    pub preorder_levels: Vec<Vec<usize>>,
}

impl IterationTrace {
    /// Number of elements of the final chain.
    pub fn final_chain_size(&self) -> usize {
        self.preorder_levels.len()
    }
}

/// Applies [`rank_image`] until the result is a chain. A chain input takes
/// zero steps.
pub fn iterate_to_chain(p: &Poset) -> Result<IterationTrace> {
    rankable_heights(p)?;
    let cap = p.len();
    let mut stages: Vec<RankPoset> = Vec::new();
    let mut blocks: Vec<usize> = (0..p.len()).collect();
    let mut current = p.clone();
    while !current.is_chain() {
        if stages.len() >= cap {
            return Err(Error::CapExceeded(cap));
        }
        let image = rank_image(&current)?;
        for b in blocks.iter_mut() {
            *b = image.blocks[*b];
        }
        current = image.order.clone();
        stages.push(image);
    }
    let mut top_first: Vec<usize> = (0..current.len()).collect();
    top_first.sort_by_key(|&e| current.up_count(e));
    let mut level_of = vec![0; current.len()];
    for (level, &e) in top_first.iter().enumerate() {
        level_of[e] = level;
    }
    let mut preorder_levels = vec![Vec::new(); current.len()];
    for (a, &b) in blocks.iter().enumerate() {
        preorder_levels[level_of[b]].push(a);
    }
    Ok(IterationTrace {
        iterations_to_chain: stages.len(),
        stages,
        preorder_levels,
    })
}

/// The total preorder reached by [`iterate_to_chain`], top level first.
pub fn total_preorder(p: &Poset) -> Result<Vec<Vec<usize>>> {
    Ok(iterate_to_chain(p)?.preorder_levels)
}

/// Mean width of the standard rank intervals.
pub fn average_rank_width(p: &Poset) -> Result<Ratio<u64>> {
    let r = standard_rank(p)?;
    let total: u64 = r.ranks().iter().map(|x| x.width() as u64).sum();
    Ok(Ratio::new(total, p.len() as u64))
}
