//! Search for conjugate orders.
//!
//! A conjugate of an order `≤` on a ground set is a partial order whose
//! comparability graph is exactly the complement of `≤`'s comparability
//! graph. Finding one means finding a transitive orientation of that
//! complement graph. The search branches on the direction of one undecided
//! edge at a time and propagates the two forcing rules:
//!
//! * `a - b - c` with `a` and `c` non-adjacent: `a < b` forces `c < b`, since
//!   `a < b < c` would need the missing edge `a - c`;
//! * a triangle `a, b, c` with `a < b` and `b < c` forces `a < c`.

use crate::error::{Error, Result};
use crate::interval::{all_intervals, IntInterval, IntervalOrder, OrderRelationTable};
use crate::poset::Poset;

/// Largest ground set [`find_conjugates_of_strong`] accepts.
pub const MAX_CONJUGATE_GROUND: usize = 12;

#[derive(Clone)]
struct Orientation {
    n: usize,
    // +1: i below j, -1: j below i, 0: undecided or not an edge
    dir: Vec<i8>,
}

impl Orientation {
    fn get(&self, i: usize, j: usize) -> i8 {
        self.dir[i * self.n + j]
    }

    fn below(&self, i: usize, j: usize) -> bool {
        self.get(i, j) == 1
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [bool],
    limit: Option<usize>,
    found: Vec<Orientation>,
}

impl Search<'_> {
    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.n + j]
    }

    /// Records `lo < hi` and everything it forces. Returns false on conflict.
    fn assign(&self, state: &mut Orientation, lo: usize, hi: usize) -> bool {
        let mut queue = vec![(lo, hi)];
        while let Some((a, b)) = queue.pop() {
            match state.get(a, b) {
                1 => continue,
                -1 => return false,
                _ => {}
            }
            state.dir[a * self.n + b] = 1;
            state.dir[b * self.n + a] = -1;
            for c in 0..self.n {
                if c == a || c == b {
                    continue;
                }
                let ac = self.adjacent(a, c);
                let bc = self.adjacent(b, c);
                match (ac, bc) {
                    (false, true) => queue.push((c, b)),
                    (true, false) => queue.push((a, c)),
                    (true, true) => {
                        if state.below(b, c) {
                            queue.push((a, c));
                        }
                        if state.below(c, a) {
                            queue.push((c, b));
                        }
                    }
                    (false, false) => {}
                }
            }
        }
        true
    }

    fn next_edge(&self, state: &Orientation) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.adjacent(i, j) && state.get(i, j) == 0)
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn run(&mut self, state: Orientation) {
        if self.done() {
            return;
        }
        let Some((i, j)) = self.next_edge(&state) else {
            self.found.push(state);
            return;
        };
        for (lo, hi) in [(i, j), (j, i)] {
            let mut branch = state.clone();
            if self.assign(&mut branch, lo, hi) {
                self.run(branch);
            }
        }
    }
}

/// All (or the first `limit`) orders on `reference`'s ground set that are
/// conjugate to it, in a fixed search order. No size cap.
pub fn find_conjugates(
    reference: &OrderRelationTable,
    limit: Option<usize>,
) -> Result<Vec<OrderRelationTable>> {
    let ground = reference.ground().to_vec();
    let n = ground.len();
    let mut adj = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            adj[i * n + j] = i != j && !reference.comparable(i, j);
        }
    }
    let mut search = Search {
        n,
        adj: &adj,
        limit,
        found: Vec::new(),
    };
    search.run(Orientation {
        n,
        dir: vec![0; n * n],
    });
    let labels: Vec<String> = ground.iter().map(IntInterval::to_string).collect();
    search
        .found
        .into_iter()
        .map(|o| {
            let order = Poset::from_matrix(labels.clone(), |i, j| i == j || o.below(i, j))?;
            Ok(OrderRelationTable::from_parts(ground.clone(), order))
        })
        .collect()
}

/// Conjugates of the strong order on `all_intervals(lo_min, hi_max)`.
pub fn find_conjugates_of_strong(
    lo_min: u32,
    hi_max: u32,
    limit: Option<usize>,
) -> Result<Vec<OrderRelationTable>> {
    if lo_min > hi_max {
        return Err(Error::InvalidInterval {
            lo: lo_min,
            hi: hi_max,
        });
    }
    let ground = all_intervals(lo_min, hi_max);
    if ground.len() > MAX_CONJUGATE_GROUND {
        return Err(Error::BudgetExceeded(format!(
            "{} intervals exceed the conjugate search cap of {MAX_CONJUGATE_GROUND}",
            ground.len()
        )));
    }
    let strong = OrderRelationTable::from_interval_order(ground, IntervalOrder::Strong)?;
    find_conjugates(&strong, limit)
}
