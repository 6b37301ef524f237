//! Brute-force oracles shared by the integration tests.

#![allow(dead_code)]

use intrank_core::generate::enumerate_bounded_posets;
use intrank_core::{IntInterval, Poset};

/// Largest antichain, by trying every subset.
pub fn brute_width(p: &Poset) -> usize {
    let n = p.len();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|a| {
                (a + 1..n).all(|b| mask >> a & 1 == 0 || mask >> b & 1 == 0 || !p.comparable(a, b))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Longest chain, by trying every subset.
pub fn brute_height(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|a| {
                (a + 1..n).all(|b| mask >> a & 1 == 0 || mask >> b & 1 == 0 || p.comparable(a, b))
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mono {
    Isotone,
    Antitone,
}

/// Strict monotonicity flags of the endpoint maps, read pair by pair:
/// `(lo isotone, lo antitone, hi isotone, hi antitone)`.
pub fn endpoint_flags(p: &Poset, f: &[IntInterval]) -> [bool; 4] {
    let mut flags = [true; 4];
    for a in 0..p.len() {
        for b in 0..p.len() {
            if a != b && p.leq(a, b) {
                flags[0] &= f[a].lo() < f[b].lo();
                flags[1] &= f[a].lo() > f[b].lo();
                flags[2] &= f[a].hi() < f[b].hi();
                flags[3] &= f[a].hi() > f[b].hi();
            }
        }
    }
    flags
}

fn respects(m: Mono, below: u32, above: u32) -> bool {
    match m {
        Mono::Isotone => below < above,
        Mono::Antitone => below > above,
    }
}

/// Calls `visit` on every interval-valued map into `[0, bound]` whose lower
/// and upper endpoints are strictly monotone in the given directions.
pub fn for_each_strict(
    p: &Poset,
    bound: u32,
    lo_dir: Mono,
    hi_dir: Mono,
    mut visit: impl FnMut(&[IntInterval]),
) {
    let n = p.len();
    // any order works for correctness; sizes keep comparable pairs early
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| p.below(a).count());
    let mut assigned: Vec<Option<IntInterval>> = vec![None; n];
    fn go(
        k: usize,
        p: &Poset,
        order: &[usize],
        bound: u32,
        dirs: (Mono, Mono),
        assigned: &mut Vec<Option<IntInterval>>,
        visit: &mut dyn FnMut(&[IntInterval]),
    ) {
        if k == order.len() {
            let full: Vec<IntInterval> = assigned.iter().map(|x| x.unwrap()).collect();
            visit(&full);
            return;
        }
        let a = order[k];
        for lo in 0..=bound {
            for hi in lo..=bound {
                let fits = (0..p.len()).all(|b| match assigned[b] {
                    None => true,
                    Some(y) if p.lt(b, a) => {
                        respects(dirs.0, y.lo(), lo) && respects(dirs.1, y.hi(), hi)
                    }
                    Some(y) if p.lt(a, b) => {
                        respects(dirs.0, lo, y.lo()) && respects(dirs.1, hi, y.hi())
                    }
                    Some(_) => true,
                });
                if fits {
                    assigned[a] = Some(IntInterval::new(lo, hi).unwrap());
                    go(k + 1, p, order, bound, dirs, assigned, visit);
                    assigned[a] = None;
                }
            }
        }
    }
    go(
        0,
        p,
        &order,
        bound,
        (lo_dir, hi_dir),
        &mut assigned,
        &mut visit,
    );
}

/// Every bounded poset of sizes 3 through 9, grouped by size.
pub fn bounded_corpus() -> Vec<Poset> {
    (3..=9)
        .flat_map(|s| enumerate_bounded_posets(s).expect("bounded enumeration"))
        .collect()
}
