//! Batch iteration statistics and least-squares fits.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::generate::{random_graph_poset, random_kdim_poset, GenConfig};
use crate::poset::Poset;
use crate::rank::{average_rank_width, iterate_to_chain};

/// Column header for record CSV files.
pub const CSV_HEADER: [&str; 8] = [
    "poset_id",
    "size",
    "height",
    "width",
    "iterations",
    "final_chain_size",
    "final_height",
    "avg_rank_width",
];

/// What happened when one poset was iterated to a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationRecord {
    pub poset_id: String,
    pub size: usize,
    pub height: usize,
    pub width: usize,
    pub iterations: usize,
    pub final_chain_size: usize,
    /// Height of the final chain, which is its size.
    pub final_height: usize,
    pub avg_rank_width: Ratio<u64>,
}

impl IterationRecord {
    pub fn measure(poset_id: impl Into<String>, p: &Poset) -> Result<Self> {
        let trace = iterate_to_chain(p)?;
        let chain = trace.final_chain_size();
        Ok(IterationRecord {
            poset_id: poset_id.into(),
            size: p.len(),
            height: p.height(),
            width: p.width(),
            iterations: trace.iterations_to_chain,
            final_chain_size: chain,
            final_height: chain,
            avg_rank_width: average_rank_width(p)?,
        })
    }

    /// Fields in [`CSV_HEADER`] order; the rational is written as a decimal.
    pub fn csv_fields(&self) -> [String; 8] {
        [
            self.poset_id.clone(),
            self.size.to_string(),
            self.height.to_string(),
            self.width.to_string(),
            self.iterations.to_string(),
            self.final_chain_size.to_string(),
            self.final_height.to_string(),
            format!("{:.6}", to_f64(self.avg_rank_width)),
        ]
    }
}

/// One record per poset, in corpus order.
pub fn run_iteration_experiment(corpus: &[(String, Poset)]) -> Result<Vec<IterationRecord>> {
    corpus
        .iter()
        .map(|(id, p)| IterationRecord::measure(id.clone(), p))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKey {
    Size,
    Height,
}

/// Exact means over one group of records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMeans {
    pub key: usize,
    pub count: usize,
    pub chain_size: Ratio<u64>,
    pub iterations: Ratio<u64>,
    pub final_height: Ratio<u64>,
}

pub fn aggregate_by(records: &[IterationRecord], key: GroupKey) -> Result<Vec<GroupMeans>> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut sums: BTreeMap<usize, [u64; 4]> = BTreeMap::new();
    for r in records {
        let k = match key {
            GroupKey::Size => r.size,
            GroupKey::Height => r.height,
        };
        let s = sums.entry(k).or_default();
        s[0] += 1;
        s[1] += r.final_chain_size as u64;
        s[2] += r.iterations as u64;
        s[3] += r.final_height as u64;
    }
    Ok(sums
        .into_iter()
        .map(|(key, [count, chain, iters, height])| GroupMeans {
            key,
            count: count as usize,
            chain_size: Ratio::new(chain, count),
            iterations: Ratio::new(iters, count),
            final_height: Ratio::new(height, count),
        })
        .collect())
}

pub fn to_f64(r: Ratio<u64>) -> f64 {
    r.to_f64().expect("u64 ratios convert")
}

/// Rounds half away from zero to `places` decimals.
pub fn round_to(r: Ratio<u64>, places: u32) -> f64 {
    let scale = 10u64.pow(places);
    let scaled = (r * scale).round();
    to_f64(scaled) / scale as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FitKind {
    Linear,
    Logarithmic,
}

/// `y = a·x + b` (linear) or `y = a·ln(x) + b` (logarithmic).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitResult {
    pub kind: FitKind,
    pub a: f64,
    pub b: f64,
    pub r_squared: f64,
}

impl fmt::Display for FitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0.0 { '-' } else { '+' };
        match self.kind {
            FitKind::Linear => write!(f, "y = {:.4} x {sign} {:.4}", self.a, self.b.abs())?,
            FitKind::Logarithmic => {
                write!(f, "y = {:.4} ln(x) {sign} {:.4}", self.a, self.b.abs())?
            }
        }
        write!(f, ", R^2 = {:.4}", self.r_squared)
    }
}

fn least_squares(kind: FitKind, xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    if xs.len() != ys.len() {
        return Err(Error::DegenerateInput(format!(
            "{} x values but {} y values",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::DegenerateInput("need at least two points".into()));
    }
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::DegenerateInput("all x values are equal".into()));
    }
    let sxy: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let a = sxy / sxx;
    let b = mean_y - a * mean_x;
    let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - (a * x + b)).powi(2))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - ss_res / ss_tot
    };
    Ok(FitResult {
        kind,
        a,
        b,
        r_squared,
    })
}

/// Ordinary least squares line through `(x, y)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    least_squares(FitKind::Linear, xs, ys)
}

/// Least squares on `(ln x, y)`.
pub fn log_fit(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    if let Some(x) = xs.iter().find(|&&x| x <= 0.0 || x.is_nan()) {
        return Err(Error::Domain(format!(
            "logarithmic fit needs x > 0, got {x}"
        )));
    }
    let logs: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    least_squares(FitKind::Logarithmic, &logs, ys)
}

/// Bounded random posets of each size in `sizes`, `per_size` apiece: the
/// first half from the random graph model with `p = 0.5`, the rest from the
/// random 3-dimensional model. Poset `i` of the whole corpus uses seed
/// `seed + i`.
pub fn random_reference_corpus(
    sizes: impl IntoIterator<Item = usize>,
    per_size: usize,
    seed: u64,
) -> Result<Vec<(String, Poset)>> {
    let mut corpus = Vec::new();
    let mut index = 0u64;
    for size in sizes {
        if size < 3 {
            return Err(Error::Config(format!("bounded size {size} is below 3")));
        }
        let core = size - 2;
        for i in 0..per_size {
            let s = seed.wrapping_add(index);
            index += 1;
            let (id, p) = if i < per_size / 2 {
                (
                    format!("rg-{size:02}-{i:03}"),
                    random_graph_poset(&GenConfig::random_graph(core, 0.5, s))?,
                )
            } else {
                (
                    format!("kd-{size:02}-{i:03}"),
                    random_kdim_poset(&GenConfig::random_kdim(core, 3, s))?,
                )
            };
            corpus.push((id, p));
        }
    }
    Ok(corpus)
}

/// Group-mean series `(key, mean)` for one column.
pub fn mean_series(
    groups: &[GroupMeans],
    column: impl Fn(&GroupMeans) -> Ratio<u64>,
) -> (Vec<f64>, Vec<f64>) {
    groups
        .iter()
        .map(|g| (g.key as f64, to_f64(column(g))))
        .unzip()
}
