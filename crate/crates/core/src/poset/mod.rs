//! Dense finite posets.
//!
//! A [`Poset`] stores its order as two bit matrices: row `a` of `up` holds
//! every `b` with `a <= b`, row `a` of `down` every `b` with `b <= a`. Both
//! are kept closed (reflexive and transitive) at all times, so every order
//! query is a single bit test.

mod canon;
pub mod named;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub use canon::CanonicalForm;

pub(crate) mod bits {
    pub const WORD: usize = 64;

    pub fn words_for(n: usize) -> usize {
        n.div_ceil(WORD).max(1)
    }

    #[inline]
    pub fn test(row: &[u64], j: usize) -> bool {
        row[j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(row: &mut [u64], j: usize) {
        row[j / WORD] |= 1 << (j % WORD);
    }

    pub fn count(row: &[u64]) -> usize {
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }
}

/// A finite partially ordered set over elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    words: usize,
    up: Vec<u64>,
    down: Vec<u64>,
}

/// Transitive reduction of a poset, as `(lower, upper)` pairs sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverRelation {
    pairs: Vec<(usize, usize)>,
}

impl CoverRelation {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, lower: usize, upper: usize) -> bool {
        self.pairs.binary_search(&(lower, upper)).is_ok()
    }
}

/// A subset of a poset's elements carrying the restricted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetView<'a> {
    parent: &'a Poset,
    members: Vec<usize>,
}

impl<'a> SubsetView<'a> {
    pub fn new(parent: &'a Poset, mut members: Vec<usize>) -> Result<Self> {
        for &m in &members {
            parent.check_index(m)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(SubsetView { parent, members })
    }

    pub fn parent(&self) -> &'a Poset {
        self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    /// Size of the longest chain inside the subset.
    pub fn height(&self) -> usize {
        self.parent.longest_chain_within(&self.members)
    }

    /// Materializes the induced subposet, keeping the parent's labels.
    pub fn to_poset(&self) -> Poset {
        self.parent.induced(&self.members)
    }
}

/// Per-element chain heights: `up[a]` is `height(↑a)`, `down[a]` is
/// `height(↓a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heights {
    pub up: Vec<usize>,
    pub down: Vec<usize>,
    pub height: usize,
}

impl Heights {
    /// Length of the longest chain through `a`.
    pub fn spindle_length(&self, a: usize) -> usize {
        self.up[a] + self.down[a] - 1
    }

    pub fn is_spindle(&self, a: usize) -> bool {
        self.spindle_length(a) == self.height
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_labels(n: usize, labels: &[String]) -> Result<()> {
    if labels.len() != n {
        return Err(Error::LabelCount {
            expected: n,
            got: labels.len(),
        });
    }
    let mut seen = HashSet::with_capacity(n);
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl Poset {
    /// Builds the reflexive-transitive closure of `generators` on `n`
    /// elements. Fails if the closure is not antisymmetric.
    pub fn from_relation(
        n: usize,
        generators: &[(usize, usize)],
        labels: Option<Vec<String>>,
    ) -> Result<Poset> {
        if n == 0 {
            return Err(Error::DegenerateInput(
                "a poset needs at least one element".into(),
            ));
        }
        let labels = labels.unwrap_or_else(|| default_labels(n));
        check_labels(n, &labels)?;
        let words = bits::words_for(n);
        let mut up = vec![0u64; n * words];
        for i in 0..n {
            bits::set(&mut up[i * words..(i + 1) * words], i);
        }
        for &(a, b) in generators {
            for idx in [a, b] {
                if idx >= n {
                    return Err(Error::Index {
                        index: idx,
                        size: n,
                    });
                }
            }
            bits::set(&mut up[a * words..(a + 1) * words], b);
        }
        // Warshall over bit rows
        let mut pivot = vec![0u64; words];
        for k in 0..n {
            pivot.copy_from_slice(&up[k * words..(k + 1) * words]);
            for i in 0..n {
                let row = &mut up[i * words..(i + 1) * words];
                if bits::test(row, k) {
                    for (r, p) in row.iter_mut().zip(&pivot) {
                        *r |= p;
                    }
                }
            }
        }
        for i in 0..n {
            for j in bits::ones(&up[i * words..(i + 1) * words]) {
                if j != i && bits::test(&up[j * words..(j + 1) * words], i) {
                    return Err(Error::Cycle(i.min(j), i.max(j)));
                }
            }
        }
        Ok(Self::from_closed_rows(labels, words, up))
    }

    /// Builds a poset from an explicit relation `leq(i, j)`, which must
    /// already be a partial order.
    pub fn from_matrix<F>(labels: Vec<String>, leq: F) -> Result<Poset>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        if n == 0 {
            return Err(Error::DegenerateInput(
                "a poset needs at least one element".into(),
            ));
        }
        check_labels(n, &labels)?;
        let words = bits::words_for(n);
        let mut up = vec![0u64; n * words];
        for i in 0..n {
            if !leq(i, i) {
                return Err(Error::NotPartialOrder(format!(
                    "element {i} is not reflexive"
                )));
            }
            for j in 0..n {
                if leq(i, j) {
                    bits::set(&mut up[i * words..(i + 1) * words], j);
                }
            }
        }
        for i in 0..n {
            let row_i = &up[i * words..(i + 1) * words];
            for j in bits::ones(row_i) {
                let row_j = &up[j * words..(j + 1) * words];
                if j != i && bits::test(row_j, i) {
                    return Err(Error::NotPartialOrder(format!(
                        "elements {i} and {j} violate antisymmetry"
                    )));
                }
                if row_j.iter().zip(row_i).any(|(rj, ri)| rj & !ri != 0) {
                    return Err(Error::NotPartialOrder(format!(
                        "relation is not transitive through {i} <= {j}"
                    )));
                }
            }
        }
        Ok(Self::from_closed_rows(labels, words, up))
    }

    /// Trusted constructor: `up` must already be a closed partial order.
    pub(crate) fn from_closed_rows(labels: Vec<String>, words: usize, up: Vec<u64>) -> Poset {
        let n = labels.len();
        let mut down = vec![0u64; n * words];
        for i in 0..n {
            for j in bits::ones(&up[i * words..(i + 1) * words]) {
                bits::set(&mut down[j * words..(j + 1) * words], i);
            }
        }
        Poset {
            labels,
            words,
            up,
            down,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: posets have at least one element.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Replaces the element names. Structure is unchanged.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Poset> {
        check_labels(self.len(), &labels)?;
        self.labels = labels;
        Ok(self)
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<()> {
        if a < self.len() {
            Ok(())
        } else {
            Err(Error::Index {
                index: a,
                size: self.len(),
            })
        }
    }

    pub(crate) fn up_row(&self, a: usize) -> &[u64] {
        &self.up[a * self.words..(a + 1) * self.words]
    }

    pub(crate) fn down_row(&self, a: usize) -> &[u64] {
        &self.down[a * self.words..(a + 1) * self.words]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        bits::test(self.up_row(a), b)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements `b` with `a < b`.
    pub fn above(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.up_row(a)).filter(move |&b| b != a)
    }

    /// Elements `b` with `b < a`.
    pub fn below(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.down_row(a)).filter(move |&b| b != a)
    }

    /// `|↑a|`, counting `a` itself.
    pub fn up_count(&self, a: usize) -> usize {
        bits::count(self.up_row(a))
    }

    /// `|↓a|`, counting `a` itself.
    pub fn down_count(&self, a: usize) -> usize {
        bits::count(self.down_row(a))
    }

    /// Number of pairs `(a, b)` with `a <= b`, diagonal included.
    pub fn relation_size(&self) -> usize {
        bits::count(&self.up)
    }

    /// All pairs `(a, b)` with `a <= b`, diagonal included.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| bits::ones(self.up_row(a)).map(move |b| (a, b)))
            .collect()
    }

    /// A linear extension: elements sorted by down-set size (ties by index).
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&a| (self.down_count(a), a));
        order
    }

    pub fn covers(&self) -> CoverRelation {
        let mut pairs = Vec::new();
        for a in 0..self.len() {
            for b in self.above(a) {
                let between = self
                    .up_row(a)
                    .iter()
                    .zip(self.down_row(b))
                    .map(|(u, d)| (u & d).count_ones())
                    .sum::<u32>();
                if between == 2 {
                    pairs.push((a, b));
                }
            }
        }
        CoverRelation { pairs }
    }

    pub fn upset(&self, a: usize) -> Result<SubsetView<'_>> {
        self.check_index(a)?;
        Ok(SubsetView {
            parent: self,
            members: bits::ones(self.up_row(a)).collect(),
        })
    }

    pub fn downset(&self, a: usize) -> Result<SubsetView<'_>> {
        self.check_index(a)?;
        Ok(SubsetView {
            parent: self,
            members: bits::ones(self.down_row(a)).collect(),
        })
    }

    /// `↑a ∪ ↓a`.
    pub fn hourglass(&self, a: usize) -> Result<SubsetView<'_>> {
        self.check_index(a)?;
        let members = self
            .up_row(a)
            .iter()
            .zip(self.down_row(a))
            .map(|(u, d)| u | d)
            .collect::<Vec<_>>();
        Ok(SubsetView {
            parent: self,
            members: bits::ones(&members).collect(),
        })
    }

    /// The closed interval `{c : a <= c <= b}`.
    pub fn interval(&self, a: usize, b: usize) -> Result<SubsetView<'_>> {
        self.check_index(a)?;
        self.check_index(b)?;
        if !self.leq(a, b) {
            return Err(Error::NotComparable(a, b));
        }
        let members = self
            .up_row(a)
            .iter()
            .zip(self.down_row(b))
            .map(|(u, d)| u & d)
            .collect::<Vec<_>>();
        Ok(SubsetView {
            parent: self,
            members: bits::ones(&members).collect(),
        })
    }

    fn longest_chain_within(&self, members: &[usize]) -> usize {
        let mut order = members.to_vec();
        order.sort_by_key(|&a| (self.down_count(a), a));
        let mut best = vec![0usize; order.len()];
        let mut height = 0;
        for i in 0..order.len() {
            let longest_below = (0..i)
                .filter(|&j| self.lt(order[j], order[i]))
                .map(|j| best[j])
                .max()
                .unwrap_or(0);
            best[i] = longest_below + 1;
            height = height.max(best[i]);
        }
        height
    }

    /// `height(↑a)` and `height(↓a)` for every element, via longest paths
    /// along a linear extension.
    pub fn heights(&self) -> Heights {
        let n = self.len();
        let order = self.linear_extension();
        let mut down = vec![1usize; n];
        for &b in &order {
            down[b] = self.below(b).map(|a| down[a] + 1).max().unwrap_or(1);
        }
        let mut up = vec![1usize; n];
        for &a in order.iter().rev() {
            up[a] = self.above(a).map(|b| up[b] + 1).max().unwrap_or(1);
        }
        let height = up.iter().copied().max().unwrap_or(0);
        Heights { up, down, height }
    }

    /// Size of a largest chain.
    pub fn height(&self) -> usize {
        self.heights().height
    }

    /// Size of a largest antichain, as a minimum chain cover: `n` minus a
    /// maximum matching in the split graph of `<`.
    pub fn width(&self) -> usize {
        let n = self.len();
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut matched = 0;
        for left in 0..n {
            let mut seen = vec![false; n];
            if self.augment(left, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        n - matched
    }

    fn augment(&self, left: usize, seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
        for right in self.above(left) {
            if seen[right] {
                continue;
            }
            seen[right] = true;
            let free = match match_right[right] {
                None => true,
                Some(other) => self.augment(other, seen, match_right),
            };
            if free {
                match_right[right] = Some(left);
                return true;
            }
        }
        false
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.down_count(a) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.up_count(a) == 1).collect()
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.up_count(a) == self.len())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.down_count(a) == self.len())
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|a| self.up_count(a) + self.down_count(a) == self.len() + 1)
    }

    pub fn is_antichain(&self) -> bool {
        self.relation_size() == self.len()
    }

    /// All maximal chains, each listed bottom-up. Exponential in general.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let covers = self.covers();
        let mut upper: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in covers.pairs() {
            upper[a].push(b);
        }
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for start in self.minimal_elements() {
            Self::walk_chains(start, &upper, &mut path, &mut chains);
        }
        chains
    }

    fn walk_chains(
        a: usize,
        upper: &[Vec<usize>],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        path.push(a);
        if upper[a].is_empty() {
            out.push(path.clone());
        } else {
            for &b in &upper[a] {
                Self::walk_chains(b, upper, path, out);
            }
        }
        path.pop();
    }

    /// Maximal chains of maximum size.
    pub fn spindle_chains(&self) -> Vec<Vec<usize>> {
        let h = self.height();
        self.maximal_chains()
            .into_iter()
            .filter(|c| c.len() == h)
            .collect()
    }

    /// Elements lying on some chain of maximum size.
    pub fn spindle_elements(&self) -> Vec<usize> {
        let hs = self.heights();
        (0..self.len()).filter(|&a| hs.is_spindle(a)).collect()
    }

    /// `height(↑a) + height(↓a) - 1`.
    pub fn spindle_length(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.heights().spindle_length(a))
    }

    /// Whether a rank function exists with `rank(top) = 0` decreasing by one
    /// along every cover. Requires a top element.
    pub fn is_graded(&self) -> Result<bool> {
        if self.top().is_none() {
            return Err(Error::Unbounded);
        }
        let hs = self.heights();
        Ok(self
            .covers()
            .pairs()
            .iter()
            .all(|&(a, b)| hs.up[a] == hs.up[b] + 1))
    }

    /// Adjoins a fresh bottom (index `n`) and a fresh top (index `n + 1`).
    pub fn add_bounds(&self) -> Poset {
        let n = self.len();
        let fresh = |base: &str| {
            let mut name = base.to_string();
            while self.labels.contains(&name) {
                name.push('\'');
            }
            name
        };
        let mut labels = self.labels.clone();
        labels.push(fresh("BOT"));
        labels.push(fresh("TOP"));
        let m = n + 2;
        let words = bits::words_for(m);
        let mut up = vec![0u64; m * words];
        for a in 0..n {
            let row = &mut up[a * words..(a + 1) * words];
            for b in bits::ones(self.up_row(a)) {
                bits::set(row, b);
            }
            bits::set(row, n + 1);
        }
        for b in 0..m {
            bits::set(&mut up[n * words..(n + 1) * words], b);
        }
        bits::set(&mut up[(n + 1) * words..(n + 2) * words], n + 1);
        Poset::from_closed_rows(labels, words, up)
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            labels: self.labels.clone(),
            words: self.words,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Induced subposet on `members` (in the given order).
    pub fn induced(&self, members: &[usize]) -> Poset {
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let words = bits::words_for(members.len());
        let mut up = vec![0u64; members.len() * words];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.leq(a, b) {
                    bits::set(&mut up[i * words..(i + 1) * words], j);
                }
            }
        }
        Poset::from_closed_rows(labels, words, up)
    }

    /// Relabels structure: element `i` of the result is element `perm[i]`
    /// of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Poset {
        self.induced(perm)
    }

    /// Edges `{a, b}` (with `a < b` as indices) of comparable distinct pairs.
    pub fn comparability_graph(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if self.comparable(a, b) {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canon::canonical_labeling(self).0
    }

    /// Canonical form plus the permutation realizing it: position `i` of the
    /// canonical ordering holds element `perm[i]`.
    pub fn canonical_labeling(&self) -> (CanonicalForm, Vec<usize>) {
        canon::canonical_labeling(self)
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.len() == other.len()
            && self.relation_size() == other.relation_size()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<_> = self
            .covers()
            .pairs()
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}
