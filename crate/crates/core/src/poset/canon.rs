//! Canonical labeling of posets.
//!
//! Vertices are first split into cells by iterated color refinement over
//! structural invariants (up/down-set sizes, chain heights, cover degrees,
//! then the multisets of neighbour colors). The canonical code is the
//! lexicographically largest relation encoding over all orderings that keep
//! the cells in color order, found by backtracking with prefix pruning.
//! Interchangeable twins (same strict up- and down-sets) are tried once
//! per level.

use std::collections::{BTreeMap, HashSet};

use super::{bits, Poset};

/// Relabeling-invariant encoding of a poset's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u64>,
}

impl CanonicalForm {
    pub fn size(&self) -> usize {
        self.n
    }
}

fn rank_signatures(sigs: Vec<Vec<usize>>) -> (Vec<usize>, usize) {
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for s in &sigs {
        ids.entry(s.clone()).or_insert(0);
    }
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    let distinct = ids.len();
    (sigs.iter().map(|s| ids[s]).collect(), distinct)
}

fn refined_colors(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let hs = p.heights();
    let covers = p.covers();
    let mut cover_up = vec![0usize; n];
    let mut cover_down = vec![0usize; n];
    for &(a, b) in covers.pairs() {
        cover_up[a] += 1;
        cover_down[b] += 1;
    }
    let initial = (0..n)
        .map(|a| {
            vec![
                hs.down[a],
                hs.up[a],
                p.down_count(a),
                p.up_count(a),
                cover_down[a],
                cover_up[a],
            ]
        })
        .collect();
    let (mut colors, mut distinct) = rank_signatures(initial);
    loop {
        let sigs = (0..n)
            .map(|a| {
                let mut above: Vec<usize> = p.above(a).map(|b| colors[b]).collect();
                let mut below: Vec<usize> = p.below(a).map(|b| colors[b]).collect();
                above.sort_unstable();
                below.sort_unstable();
                let mut sig = Vec::with_capacity(above.len() + below.len() + 2);
                sig.push(colors[a]);
                sig.extend(below);
                sig.push(usize::MAX);
                sig.extend(above);
                sig
            })
            .collect();
        let (next, next_distinct) = rank_signatures(sigs);
        colors = next;
        if next_distinct == distinct {
            return colors;
        }
        distinct = next_distinct;
    }
}

struct Search<'a> {
    p: &'a Poset,
    cells: Vec<usize>,
    colors: Vec<usize>,
    twin: Vec<usize>,
    perm: Vec<usize>,
    used: Vec<bool>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, k: usize) {
        let n = self.p.len();
        if k == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.code > *best,
            };
            if better {
                self.best = Some((self.code.clone(), self.perm.clone()));
            }
            return;
        }
        let mut tried_twins = HashSet::new();
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.cells[k] || !tried_twins.insert(self.twin[v])
            {
                continue;
            }
            let mark = self.code.len();
            for i in 0..k {
                let u = self.perm[i];
                self.code.push(self.p.leq(u, v));
                self.code.push(self.p.leq(v, u));
            }
            let prune = match &self.best {
                Some((best, _)) => self.code[..] < best[..self.code.len()],
                None => false,
            };
            if !prune {
                self.used[v] = true;
                self.perm.push(v);
                self.run(k + 1);
                self.perm.pop();
                self.used[v] = false;
            }
            self.code.truncate(mark);
        }
    }
}

fn twin_classes(p: &Poset) -> Vec<usize> {
    let mut ids: BTreeMap<(Vec<u64>, Vec<u64>), usize> = BTreeMap::new();
    (0..p.len())
        .map(|a| {
            let mut up = p.up_row(a).to_vec();
            let mut down = p.down_row(a).to_vec();
            up[a / bits::WORD] &= !(1 << (a % bits::WORD));
            down[a / bits::WORD] &= !(1 << (a % bits::WORD));
            let next = ids.len();
            *ids.entry((up, down)).or_insert(next)
        })
        .collect()
}

pub(super) fn canonical_labeling(p: &Poset) -> (CanonicalForm, Vec<usize>) {
    let n = p.len();
    let colors = refined_colors(p);
    let mut cells = colors.clone();
    cells.sort_unstable();
    let mut search = Search {
        p,
        cells,
        colors,
        twin: twin_classes(p),
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::with_capacity(n * n),
        best: None,
    };
    search.run(0);
    let (code, perm) = search.best.expect("at least one ordering exists");
    let mut packed = vec![0u64; code.len().div_ceil(64)];
    for (i, &bit) in code.iter().enumerate() {
        if bit {
            bits::set(&mut packed, i);
        }
    }
    (CanonicalForm { n, code: packed }, perm)
}
