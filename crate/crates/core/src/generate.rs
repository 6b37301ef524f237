//! Poset generators: exhaustive enumeration up to isomorphism and two
//! random models.
//!
//! Enumeration grows posets one element at a time. Every poset on `n`
//! elements arises from one on `n - 1` elements by adding a new maximal
//! element whose strict down-set is an order ideal of the smaller poset, so
//! extending each class representative by each of its ideals and keeping one
//! poset per canonical form yields every class exactly once.
//!
//! Random posets use ChaCha8 seeded from a `u64`, so a given seed yields the
//! same poset on every platform. Corpora derive the seed of poset `i` as
//! `seed + i`.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest core size [`enumerate_posets`] will produce.
pub const MAX_ENUMERATION_SIZE: usize = 7;

/// Number of unlabeled posets on `n` elements for `n = 0..=7`.
pub const POSET_COUNTS: [usize; 8] = [1, 1, 2, 5, 16, 63, 318, 2045];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Exhaustive,
    RandomGraph,
    RandomKdim,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenConfig {
    pub model: Model,
    /// Core size, before any bounds are added.
    pub n: usize,
    /// Edge probability for the random graph model.
    pub p: f64,
    /// Number of linear orders intersected by the k-dimensional model.
    pub k: usize,
    pub seed: u64,
    pub add_bounds: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            model: Model::RandomGraph,
            n: 10,
            p: 0.5,
            k: 3,
            seed: 0,
            add_bounds: true,
        }
    }
}

impl GenConfig {
    pub fn random_graph(n: usize, p: f64, seed: u64) -> Self {
        GenConfig {
            model: Model::RandomGraph,
            n,
            p,
            seed,
            ..Default::default()
        }
    }

    pub fn random_kdim(n: usize, k: usize, seed: u64) -> Self {
        GenConfig {
            model: Model::RandomKdim,
            n,
            k,
            seed,
            ..Default::default()
        }
    }

    pub fn with_bounds(mut self, add_bounds: bool) -> Self {
        self.add_bounds = add_bounds;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        match self.model {
            Model::RandomGraph if !(0.0..=1.0).contains(&self.p) => Err(Error::Config(format!(
                "edge probability {} outside [0,1]",
                self.p
            ))),
            Model::RandomKdim if self.k == 0 => Err(Error::Config("k must be at least 1".into())),
            _ => Ok(()),
        }
    }
}

fn order_ideals(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n)
                .filter(|&a| mask >> a & 1 == 1)
                .all(|a| p.below(a).all(|b| mask >> b & 1 == 1))
        })
        .map(|mask| (0..n).filter(|&a| mask >> a & 1 == 1).collect())
        .collect()
}

fn extend_with_maximal(p: &Poset, ideal: &[usize]) -> Poset {
    let n = p.len();
    let mut gens = p.covers().pairs().to_vec();
    gens.extend(ideal.iter().map(|&a| (a, n)));
    Poset::from_relation(n + 1, &gens, None).expect("new element is maximal")
}

/// One representative per isomorphism class of posets on `n` elements,
/// each relabeled into its canonical ordering and sorted by canonical form.
pub fn enumerate_posets(n: usize) -> Result<Vec<Poset>> {
    if n == 0 {
        return Err(Error::DegenerateInput(
            "posets have at least one element".into(),
        ));
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::BudgetExceeded(format!(
            "enumeration is capped at {MAX_ENUMERATION_SIZE} elements, got {n}"
        )));
    }
    let mut level = vec![Poset::from_relation(1, &[], None)?];
    for _ in 1..n {
        let mut classes = HashMap::new();
        for p in &level {
            for ideal in order_ideals(p) {
                let q = extend_with_maximal(p, &ideal);
                let (form, perm) = q.canonical_labeling();
                classes
                    .entry(form)
                    .or_insert_with(|| perm_relabel(&q, &perm));
            }
        }
        let mut next: Vec<_> = classes.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, p)| p).collect();
    }
    Ok(level)
}

fn perm_relabel(q: &Poset, perm: &[usize]) -> Poset {
    let labels = (0..q.len()).map(|i| i.to_string()).collect();
    q.permuted(perm)
        .with_labels(labels)
        .expect("index labels are distinct")
}

/// Every poset on `size - 2` elements with a fresh bottom and top added.
pub fn enumerate_bounded_posets(size: usize) -> Result<Vec<Poset>> {
    if !(3..=MAX_ENUMERATION_SIZE + 2).contains(&size) {
        return Err(Error::BudgetExceeded(format!(
            "bounded enumeration covers sizes 3..={}, got {size}",
            MAX_ENUMERATION_SIZE + 2
        )));
    }
    Ok(enumerate_posets(size - 2)?
        .iter()
        .map(Poset::add_bounds)
        .collect())
}

fn finish(core: Poset, add_bounds: bool) -> Poset {
    if add_bounds {
        core.add_bounds()
    } else {
        core
    }
}

/// Erdős–Rényi graph on `0..n`, edges directed from the smaller label to the
/// larger, then closed.
pub fn random_graph_poset(cfg: &GenConfig) -> Result<Poset> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut gens = Vec::new();
    for i in 0..cfg.n {
        for j in i + 1..cfg.n {
            if rng.gen::<f64>() < cfg.p {
                gens.push((i, j));
            }
        }
    }
    Ok(finish(
        Poset::from_relation(cfg.n, &gens, None)?,
        cfg.add_bounds,
    ))
}

/// The `k` random permutations behind [`random_kdim_poset`]. Each vector
/// lists the elements from lowest to highest.
pub fn sample_linear_orders(cfg: &GenConfig) -> Result<Vec<Vec<usize>>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok((0..cfg.k)
        .map(|_| {
            let mut order: Vec<usize> = (0..cfg.n).collect();
            order.shuffle(&mut rng);
            order
        })
        .collect())
}

/// The poset `a <= b` iff `a` comes no later than `b` in every order. Each
/// order lists the same elements `0..n`, lowest first.
pub fn intersect_linear_orders(n: usize, orders: &[Vec<usize>]) -> Result<Poset> {
    let mut positions = Vec::with_capacity(orders.len());
    for order in orders {
        let mut pos = vec![usize::MAX; n];
        for (i, &e) in order.iter().enumerate() {
            if e >= n {
                return Err(Error::Index { index: e, size: n });
            }
            pos[e] = i;
        }
        if order.len() != n || pos.contains(&usize::MAX) {
            return Err(Error::Config("linear order is not a permutation".into()));
        }
        positions.push(pos);
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Poset::from_matrix(labels, |a, b| positions.iter().all(|pos| pos[a] <= pos[b]))
}

/// Intersection of `k` random linear orders on `0..n`.
pub fn random_kdim_poset(cfg: &GenConfig) -> Result<Poset> {
    let orders = sample_linear_orders(cfg)?;
    Ok(finish(
        intersect_linear_orders(cfg.n, &orders)?,
        cfg.add_bounds,
    ))
}

/// Dispatches on `cfg.model`; the exhaustive model is not a single poset.
pub fn generate(cfg: &GenConfig) -> Result<Poset> {
    match cfg.model {
        Model::RandomGraph => random_graph_poset(cfg),
        Model::RandomKdim => random_kdim_poset(cfg),
        Model::Exhaustive => Err(Error::Config(
            "the exhaustive model yields a list; use enumerate_posets".into(),
        )),
    }
}

/// `count` posets from `cfg`, poset `i` seeded with `cfg.seed + i`.
pub fn random_corpus(cfg: &GenConfig, count: usize) -> Result<Vec<Poset>> {
    (0..count as u64)
        .map(|i| generate(&cfg.clone().with_seed(cfg.seed.wrapping_add(i))))
        .collect()
}
