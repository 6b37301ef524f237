//! Subcommand implementations. Each writes its report to `out`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use intrank_core::conjugate::find_conjugates;
use intrank_core::experiments::{
    aggregate_by, linear_fit, log_fit, mean_series, round_to, GroupKey, GroupMeans,
    IterationRecord, CSV_HEADER,
};
use intrank_core::generate::{
    enumerate_bounded_posets, enumerate_posets, random_corpus, GenConfig, Model,
};
use intrank_core::interval::{all_intervals, are_conjugate, proper_intervals};
use intrank_core::rank::{conjugate_rank, iterate_to_chain, standard_rank};
use intrank_core::{IntervalOrder, OrderRelationTable, Poset};

use crate::document::{load, save, write_atomic};
use crate::dot::to_dot;
use crate::{
    CliError, ConjugateArgs, FitArg, GenArgs, GroupArg, IterateArgs, ModelArg, RankArgs, StatsArgs,
};

/// Widest endpoint range searched without `--force`.
pub const MAX_UNFORCED_SPAN: u32 = 3;

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |e| CliError::Io(format!("{}: {e}", path.display()))
}

fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| CliError::Io(format!("stdout: {e}")))
}

fn model_name(m: ModelArg) -> &'static str {
    match m {
        ModelArg::Exhaustive => "exhaustive",
        ModelArg::RandomGraph => "random-graph",
        ModelArg::RandomKdim => "random-kdim",
    }
}

pub fn gen(a: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.p.is_some() && a.model != ModelArg::RandomGraph {
        return Err(CliError::Usage(
            "--p only applies to --model random-graph".into(),
        ));
    }
    if a.k.is_some() && a.model != ModelArg::RandomKdim {
        return Err(CliError::Usage(
            "--k only applies to --model random-kdim".into(),
        ));
    }
    let bounds = a.add_bounds();
    let core = if bounds {
        a.n.checked_sub(2).filter(|&c| c > 0).ok_or_else(|| {
            CliError::Usage(format!("--n {} is too small for a bounded poset", a.n))
        })?
    } else {
        a.n
    };
    let posets = match a.model {
        ModelArg::Exhaustive if bounds => enumerate_bounded_posets(a.n)?,
        ModelArg::Exhaustive => enumerate_posets(a.n)?,
        ModelArg::RandomGraph | ModelArg::RandomKdim => {
            let cfg = GenConfig {
                model: if a.model == ModelArg::RandomGraph {
                    Model::RandomGraph
                } else {
                    Model::RandomKdim
                },
                n: core,
                p: a.p.unwrap_or(0.5),
                k: a.k.unwrap_or(3),
                seed: a.seed,
                add_bounds: bounds,
            };
            cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
            random_corpus(&cfg, a.count)?
        }
    };
    fs::create_dir_all(&a.out).map_err(io_err(&a.out))?;
    let stem = match a.model {
        ModelArg::Exhaustive => format!("exhaustive-n{}", a.n),
        m => format!("{}-n{}-s{}", model_name(m), a.n, a.seed),
    };
    for (i, p) in posets.iter().enumerate() {
        save(&a.out.join(format!("{stem}-{i:04}.json")), p)?;
    }
    emit(
        out,
        format!("wrote {} documents to {}", posets.len(), a.out.display()),
    )
}

pub fn rank(a: &RankArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&a.input.file, a.input.matrix)?;
    let ranks = if a.conjugate {
        conjugate_rank(&p)?
    } else {
        standard_rank(&p)?
    };
    let spindle = p.spindle_elements();
    for x in 0..p.len() {
        emit(
            out,
            format!(
                "{} {} spindle={}",
                p.label(x),
                ranks.get(x),
                spindle.contains(&x)
            ),
        )?;
    }
    Ok(())
}

fn level_names(p: &Poset, members: &[usize]) -> String {
    let names: Vec<&str> = members.iter().map(|&a| p.label(a)).collect();
    format!("[{}]", names.join(" "))
}

pub fn iterate(a: &IterateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = load(&a.input.file, a.input.matrix)?;
    let trace = iterate_to_chain(&p)?;
    emit(out, format!("iterations: {}", trace.iterations_to_chain))?;
    emit(
        out,
        format!("final chain size: {}", trace.final_chain_size()),
    )?;
    let levels: String = trace
        .preorder_levels
        .iter()
        .map(|l| level_names(&p, l))
        .collect();
    emit(out, format!("levels: {levels}"))?;

    if a.trace {
        let mut blocks: Vec<usize> = (0..p.len()).collect();
        for (k, stage) in trace.stages.iter().enumerate() {
            for b in blocks.iter_mut() {
                *b = stage.blocks()[*b];
            }
            let parts: Vec<String> = stage
                .intervals()
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let members: Vec<usize> = (0..p.len()).filter(|&e| blocks[e] == i).collect();
                    format!("{x}{}", level_names(&p, &members))
                })
                .collect();
            let chain = if stage.order().is_chain() {
                " (chain)"
            } else {
                ""
            };
            emit(out, format!("stage {}: {}{chain}", k + 1, parts.join(" ")))?;
        }
    }

    if let Some(dir) = &a.dot {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        write_atomic(&dir.join("stage-0.dot"), &to_dot(&p, "stage-0"))?;
        for (k, stage) in trace.stages.iter().enumerate() {
            let name = format!("stage-{}", k + 1);
            write_atomic(
                &dir.join(format!("{name}.dot")),
                &to_dot(stage.order(), &name),
            )?;
        }
    }
    Ok(())
}

pub fn conjugate_search(a: &ConjugateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.lo > a.hi {
        return Err(CliError::Usage(format!(
            "--lo {} exceeds --hi {}",
            a.lo, a.hi
        )));
    }
    if a.hi - a.lo > MAX_UNFORCED_SPAN && !a.force {
        return Err(CliError::Budget(format!(
            "endpoint range {}..{} is wider than {MAX_UNFORCED_SPAN}; pass --force to search anyway",
            a.lo, a.hi
        )));
    }
    let ground = if a.proper {
        proper_intervals(a.lo, a.hi)
    } else {
        all_intervals(a.lo, a.hi)
    };
    if ground.is_empty() {
        return Err(CliError::Usage("no intervals in range".into()));
    }
    let names: Vec<String> = ground.iter().map(ToString::to_string).collect();
    emit(out, format!("ground: {}", names.join(" ")))?;
    let strong = OrderRelationTable::from_interval_order(ground, IntervalOrder::Strong)?;
    let found = find_conjugates(&strong, a.limit)?;
    for (i, t) in found.iter().enumerate() {
        let p = t.as_poset();
        let covers: Vec<String> = p
            .covers()
            .pairs()
            .iter()
            .map(|&(x, y)| format!("{}<{}", p.label(x), p.label(y)))
            .collect();
        emit(out, format!("order {}: {}", i + 1, covers.join(" ")))?;
        emit(out, format!("conjugate: {}", are_conjugate(t, &strong)?))?;
    }
    emit(out, format!("found: {}", found.len()))
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

fn poset_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn write_csv(path: &Path, records: &[IterationRecord]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Io(format!("{}: {e}", path.display()));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        w.write_record(r.csv_fields()).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    write_atomic(
        path,
        &String::from_utf8(bytes).expect("csv output is utf-8"),
    )
}

fn means_table(groups: &[GroupMeans], key: &str, out: &mut dyn Write) -> Result<(), CliError> {
    emit(
        out,
        format!(
            "{key:>6} {:>6} {:>10} {:>10} {:>12}",
            "count", "chain", "iterations", "final_height"
        ),
    )?;
    for g in groups {
        emit(
            out,
            format!(
                "{:>6} {:>6} {:>10.3} {:>10.3} {:>12.3}",
                g.key,
                g.count,
                round_to(g.chain_size, 3),
                round_to(g.iterations, 3),
                round_to(g.final_height, 3)
            ),
        )?;
    }
    Ok(())
}

pub fn stats(a: &StatsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let files = corpus_files(&a.corpus)?;
    if files.is_empty() {
        return Err(CliError::Invalid(format!(
            "no .json documents in {}",
            a.corpus.display()
        )));
    }
    let mut records = files
        .par_iter()
        .map(|f| {
            let p = load(f, false)?;
            IterationRecord::measure(poset_id(f), &p)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", f.display())))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    records.sort_by(|x, y| x.poset_id.cmp(&y.poset_id));

    if let Some(path) = &a.csv {
        write_csv(path, &records)?;
    }
    let (key, name) = match a.group {
        GroupArg::Size => (GroupKey::Size, "size"),
        GroupArg::Height => (GroupKey::Height, "height"),
    };
    let groups = aggregate_by(&records, key)?;
    means_table(&groups, name, out)?;

    if let Some(fit) = a.fit {
        let series = [
            ("chain", mean_series(&groups, |g| g.chain_size)),
            ("iterations", mean_series(&groups, |g| g.iterations)),
            ("final_height", mean_series(&groups, |g| g.final_height)),
        ];
        for (label, (xs, ys)) in series {
            let result = match fit {
                FitArg::Linear => linear_fit(&xs, &ys)?,
                FitArg::Log => log_fit(&xs, &ys)?,
            };
            emit(out, format!("fit {label}: {result}"))?;
        }
    }
    Ok(())
}
