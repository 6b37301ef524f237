//! Small posets that come up over and over in tests and examples.

use super::Poset;

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> Poset {
    let gens: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_relation(n, &gens, None).expect("chain is acyclic")
}

pub fn antichain(n: usize) -> Poset {
    Poset::from_relation(n, &[], None).expect("antichain is valid")
}

/// `k` atoms between a fresh bottom and top.
pub fn bounded_antichain(k: usize) -> Poset {
    antichain(k).add_bounds()
}

/// `BOT < a, b < TOP`.
pub fn diamond() -> Poset {
    Poset::from_relation(
        4,
        &[(0, 1), (0, 2), (1, 3), (2, 3)],
        Some(names(&["BOT", "a", "b", "TOP"])),
    )
    .expect("diamond is acyclic")
}

/// The pentagon: `BOT < x < y < TOP` and `BOT < z < TOP`.
///
/// Indices: `BOT = 0, x = 1, y = 2, z = 3, TOP = 4`.
pub fn n5() -> Poset {
    Poset::from_relation(
        5,
        &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        Some(names(&["BOT", "x", "y", "z", "TOP"])),
    )
    .expect("N5 is acyclic")
}

/// Subsets of a `k`-set under inclusion; element `i` is the bitmask `i`.
pub fn boolean_lattice(k: u32) -> Poset {
    let n = 1usize << k;
    let labels = (0..n)
        .map(|m| format!("{m:0width$b}", width = k as usize))
        .collect();
    Poset::from_matrix(labels, |a, b| a & b == a).expect("inclusion is a partial order")
}
