//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria 1 to 6 are hard requirements and make the process exit nonzero
//! when they fail. Criterion 7 compares a random-corpus regression against
//! reference coefficients and only reports.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;

use common::{bounded_corpus, brute_width, endpoint_flags, for_each_strict, Mono};
use intrank_core::conjugate::{find_conjugates, find_conjugates_of_strong};
use intrank_core::experiments::{
    aggregate_by, linear_fit, log_fit, mean_series, random_reference_corpus,
    run_iteration_experiment, to_f64, GroupKey, IterationRecord,
};
use intrank_core::generate::{enumerate_bounded_posets, enumerate_posets};
use intrank_core::interval::{
    all_intervals, are_conjugate, are_pseudo_conjugate, leq_weak, proper_intervals, subset,
};
use intrank_core::poset::named::{boolean_lattice, n5};
use intrank_core::rank::{
    classify_rank_function, conjugate_image, conjugate_rank, is_interval_rank_function,
    iterate_to_chain, phi, rank_all, rank_image, standard_rank,
};
use intrank_core::{
    IntInterval, IntervalOrder, OrderRelationTable, Poset, RankAssignment, RankClass,
};

type Outcome = Result<String, String>;

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{what} took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn enumeration_counts() -> Outcome {
    let start = Instant::now();
    let expected = [1, 2, 5, 16, 63, 318, 2045];
    let got: Vec<usize> = (1..=7)
        .map(|n| enumerate_posets(n).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    if got != expected {
        return Err(format!(
            "classes for n = 1..7: {got:?}, expected {expected:?}"
        ));
    }
    let bounded: Vec<usize> = (3..=9)
        .map(|s| enumerate_bounded_posets(s).map(|v| v.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let total: usize = bounded.iter().sum();
    if total != 2450 {
        return Err(format!(
            "bounded total {total} ({bounded:?}), expected 2450"
        ));
    }
    within(Duration::from_secs(300), start, "enumeration")?;
    Ok(format!(
        "{got:?}; bounded sizes 3..9 {bounded:?} total {total}"
    ))
}

fn table_one(records: &[IterationRecord]) -> Outcome {
    let chain = [3.0, 3.5, 4.2, 4.75, 5.381, 5.959, 6.517];
    let iters = [0.0, 0.5, 0.8, 1.00, 1.127, 1.236, 1.335];
    let heights = [3.0, 4.348, 6.068, 7.092, 7.806, 8.409, 9.0];
    let by_size = aggregate_by(records, GroupKey::Size).map_err(|e| e.to_string())?;
    let by_height = aggregate_by(records, GroupKey::Height).map_err(|e| e.to_string())?;
    let mut problems = Vec::new();
    let mut check = |row: &str, key: usize, got: Ratio<u64>, want: f64| {
        let g = to_f64(got);
        if (g - want).abs() > 0.0005 {
            problems.push(format!("{row}[{key}] = {got} ({g:.4}), expected {want}"));
        }
    };
    let keys = |groups: &[intrank_core::experiments::GroupMeans]| -> Vec<usize> {
        groups.iter().map(|g| g.key).collect()
    };
    if keys(&by_size) != (3..=9).collect::<Vec<_>>()
        || keys(&by_height) != (3..=9).collect::<Vec<_>>()
    {
        return Err(format!(
            "group keys: size {:?}, height {:?}",
            keys(&by_size),
            keys(&by_height)
        ));
    }
    for (i, g) in by_size.iter().enumerate() {
        check("chain", g.key, g.chain_size, chain[i]);
        check("iterations", g.key, g.iterations, iters[i]);
    }
    for (i, g) in by_height.iter().enumerate() {
        check("final height", g.key, g.final_height, heights[i]);
    }
    if !problems.is_empty() {
        return Err(problems.join("; "));
    }
    let fmt = |gs: &[intrank_core::experiments::GroupMeans],
               f: fn(&intrank_core::experiments::GroupMeans) -> Ratio<u64>| {
        gs.iter()
            .map(|g| format!("{:.3}", to_f64(f(g))))
            .collect::<Vec<_>>()
            .join(" ")
    };
    Ok(format!(
        "chain [{}] iterations [{}] final height [{}]",
        fmt(&by_size, |g| g.chain_size),
        fmt(&by_size, |g| g.iterations),
        fmt(&by_height, |g| g.final_height)
    ))
}

fn phi_is_isomorphism(p: &Poset) -> Result<bool, String> {
    let h = p.height();
    let image = rank_image(p).map_err(|e| e.to_string())?;
    let conj = conjugate_image(p).map_err(|e| e.to_string())?;
    let mapped: Vec<IntInterval> = image
        .intervals()
        .iter()
        .map(|&x| phi(x, h))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let mut sorted = mapped.clone();
    sorted.sort();
    if sorted != conj.intervals() {
        return Ok(false);
    }
    let xs = image.intervals();
    let embeds = (0..xs.len()).all(|i| {
        (0..xs.len()).all(|j| {
            IntervalOrder::DualWeak.leq(xs[i], xs[j])
                == IntervalOrder::Subset.leq(mapped[i], mapped[j])
        })
    });
    Ok(embeds && image.order().is_isomorphic(conj.order()))
}

fn property_suite(corpus: &[Poset]) -> Outcome {
    let mut violations: Vec<String> = Vec::new();
    let mut note = |name: &str, idx: usize| {
        if violations.len() < 10 {
            violations.push(format!("{name} on poset #{idx}"));
        }
    };
    let mut count = 0;
    for (idx, p) in corpus.iter().enumerate() {
        count += 1;
        let r = standard_rank(p).map_err(|e| e.to_string())?;
        let image = rank_image(p).map_err(|e| e.to_string())?;
        let graded = p.is_graded().map_err(|e| e.to_string())?;
        if image.order().height() < p.height() {
            note("height grows", idx);
        }
        if image.order().width() > p.width() {
            note("width shrinks", idx);
        }
        if graded && !image.order().is_chain() {
            note("graded gives chain", idx);
        }
        let spindle = p.spindle_elements();
        for a in 0..p.len() {
            if (r.get(a).width() == 0) != spindle.contains(&a) {
                note("zero width iff spindle", idx);
            }
        }
        let all = rank_all(p).map_err(|e| e.to_string())?;
        if !graded && all.relation_size() <= p.relation_size() {
            note("ungraded adds comparisons", idx);
        }
        match iterate_to_chain(p) {
            Ok(t) if t.iterations_to_chain <= p.len() => {}
            _ => note("iteration reaches chain", idx),
        }
        if !phi_is_isomorphism(p)? {
            note("phi isomorphism", idx);
        }
    }
    if violations.is_empty() {
        Ok(format!(
            "{count} bounded posets, 7 properties, zero violations"
        ))
    } else {
        Err(violations.join("; "))
    }
}

fn oracle_suites() -> Outcome {
    let start = Instant::now();
    let mut checked_width = 0;
    for n in 1..=6 {
        for p in enumerate_posets(n).map_err(|e| e.to_string())? {
            if p.width() != brute_width(&p) {
                return Err(format!("width mismatch on {p:?}"));
            }
            checked_width += 1;
        }
    }
    let mut max_fns = 0usize;
    let mut min_fns = 0usize;
    for size in 3..=7 {
        for p in enumerate_bounded_posets(size).map_err(|e| e.to_string())? {
            let h = p.height() as u32;
            let std = standard_rank(&p).map_err(|e| e.to_string())?;
            let mut bad = None;
            for_each_strict(&p, h - 1, Mono::Antitone, Mono::Antitone, |f| {
                max_fns += 1;
                if let Some(a) = (0..p.len()).find(|&a| !subset(f[a], std.get(a))) {
                    bad.get_or_insert(format!("{} not inside {}", f[a], std.get(a)));
                }
            });
            let conj = conjugate_rank(&p).map_err(|e| e.to_string())?;
            for_each_strict(&p, 2 * (h - 1), Mono::Antitone, Mono::Isotone, |f| {
                min_fns += 1;
                if let Some(a) = (0..p.len()).find(|&a| !leq_weak(conj.get(a), f[a])) {
                    bad.get_or_insert(format!("{} not above {} in weak order", f[a], conj.get(a)));
                }
            });
            if let Some(b) = bad {
                return Err(format!("{b} on {p:?}"));
            }
        }
    }
    let mut classified = 0usize;
    let values = all_intervals(0, 2);
    for n in 2..=4 {
        for p in enumerate_posets(n).map_err(|e| e.to_string())? {
            let n = p.len();
            let total = values.len().pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let f: Vec<IntInterval> = (0..n)
                    .map(|_| {
                        let x = values[c % values.len()];
                        c /= values.len();
                        x
                    })
                    .collect();
                let [lo_iso, lo_anti, hi_iso, hi_anti] = endpoint_flags(&p, &f);
                let expected = [
                    (lo_anti && hi_anti, RankClass::DualWeak),
                    (lo_anti && hi_iso, RankClass::Subset),
                    (lo_iso && hi_iso, RankClass::Weak),
                    (lo_iso && hi_anti, RankClass::Superset),
                ];
                let assignment =
                    RankAssignment::new(&p, f.clone(), 2).map_err(|e| e.to_string())?;
                let got = classify_rank_function(&assignment);
                let matching: Vec<RankClass> = expected
                    .iter()
                    .filter(|(hit, _)| *hit)
                    .map(|&(_, c)| c)
                    .collect();
                let ok = match got {
                    RankClass::None => matching.is_empty(),
                    c => {
                        matching.contains(&c)
                            && (p.is_antichain() || matching.len() == 1)
                            && is_interval_rank_function(&assignment, c.order().unwrap())
                    }
                };
                if !ok {
                    return Err(format!(
                        "classified {got} but flags give {matching:?} for {f:?} on {p:?}"
                    ));
                }
                classified += 1;
            }
        }
    }
    within(Duration::from_secs(600), start, "oracle suites")?;
    Ok(format!(
        "width on {checked_width} posets; {max_fns} strict dual-weak and {min_fns} strict subset rank \
         functions; {classified} endpoint classifications"
    ))
}

fn named_instances() -> Outcome {
    let n = n5();
    if n.is_graded().map_err(|e| e.to_string())? {
        return Err("N5 reported graded".into());
    }
    let img = rank_image(&n).map_err(|e| e.to_string())?;
    if !(img.order().is_chain() && img.len() == 5) {
        return Err(format!(
            "N5 image has {} elements, chain = {}",
            img.len(),
            img.order().is_chain()
        ));
    }
    let cube = boolean_lattice(3);
    if !cube.is_graded().map_err(|e| e.to_string())? {
        return Err("boolean 3-cube reported ungraded".into());
    }
    if !rank_image(&cube)
        .map_err(|e| e.to_string())?
        .order()
        .is_chain()
    {
        return Err("boolean 3-cube image is not a chain".into());
    }
    let (x, y) = (
        IntInterval::new(3, 4).unwrap(),
        IntInterval::new(2, 4).unwrap(),
    );
    if !(subset(x, y) && leq_weak(y, x)) {
        return Err("[3,4] ⊆ [2,4] and [2,4] <=_W [3,4] not both reported".into());
    }
    let ground = all_intervals(2, 4);
    let weak =
        OrderRelationTable::from_interval_order(ground.clone(), IntervalOrder::Weak).unwrap();
    let sub = OrderRelationTable::from_interval_order(ground, IntervalOrder::Subset).unwrap();
    let pseudo = are_pseudo_conjugate(&weak, &sub).map_err(|e| e.to_string())?;
    let exact = are_conjugate(&weak, &sub).map_err(|e| e.to_string())?;
    if !pseudo || exact {
        return Err(format!(
            "weak vs subset on [2,4]: pseudo {pseudo}, conjugate {exact}"
        ));
    }
    Ok(
        "N5 ungraded with 5-chain image; 3-cube graded with chain image; [3,4]/[2,4] witness"
            .into(),
    )
}

fn conjugate_search() -> Outcome {
    let start = Instant::now();
    let small = find_conjugates_of_strong(1, 2, None).map_err(|e| e.to_string())?;
    if small.len() != 2 {
        return Err(format!(
            "endpoints 1..2 gave {} conjugates, expected 2",
            small.len()
        ));
    }
    let found = find_conjugates_of_strong(1, 4, None).map_err(|e| e.to_string())?;
    within(Duration::from_secs(60), start, "conjugate search")?;
    let strong =
        OrderRelationTable::from_interval_order(all_intervals(1, 4), IntervalOrder::Strong)
            .unwrap();
    for t in &found {
        if !are_conjugate(t, &strong).map_err(|e| e.to_string())? {
            return Err("a returned order is not conjugate".into());
        }
    }
    if found.is_empty() {
        let proper =
            OrderRelationTable::from_interval_order(proper_intervals(1, 4), IntervalOrder::Strong)
                .unwrap();
        let without_points = find_conjugates(&proper, None)
            .map_err(|e| e.to_string())?
            .len();
        return Err(format!(
            "endpoints 1..2 gave 2; endpoints 1..4 (all 10 intervals) gave 0, the overlap graph has no \
             transitive orientation; without single-point intervals (6 intervals) there are {without_points}"
        ));
    }
    Ok(format!(
        "endpoints 1..2 gave 2; endpoints 1..4 gave {}, all conjugate",
        found.len()
    ))
}

fn stochastic_reference() -> Outcome {
    let corpus = random_reference_corpus(10..=25, 200, 1).map_err(|e| e.to_string())?;
    let records = run_iteration_experiment(&corpus).map_err(|e| e.to_string())?;
    let groups = aggregate_by(&records, GroupKey::Size).map_err(|e| e.to_string())?;
    let (xs, chain) = mean_series(&groups, |g| g.chain_size);
    let (_, iters) = mean_series(&groups, |g| g.iterations);
    let lin = linear_fit(&xs, &chain).map_err(|e| e.to_string())?;
    let log = log_fit(&xs, &iters).map_err(|e| e.to_string())?;
    let summary = format!("chain: {lin}; iterations: {log}");
    let slope_ok = (lin.a - 0.70).abs() <= 0.15;
    let coef_ok = (log.a - 0.80).abs() <= 0.25;
    if slope_ok && coef_ok {
        return Ok(summary);
    }
    let mut per_model = Vec::new();
    for prefix in ["rg-", "kd-"] {
        let subset: Vec<IterationRecord> = records
            .iter()
            .filter(|r| r.poset_id.starts_with(prefix))
            .cloned()
            .collect();
        let groups = aggregate_by(&subset, GroupKey::Size).map_err(|e| e.to_string())?;
        let (xs, chain) = mean_series(&groups, |g| g.chain_size);
        let (_, iters) = mean_series(&groups, |g| g.iterations);
        let lin = linear_fit(&xs, &chain).map_err(|e| e.to_string())?;
        let log = log_fit(&xs, &iters).map_err(|e| e.to_string())?;
        per_model.push(format!(
            "{prefix} slope {:.3}, log coefficient {:.3}",
            lin.a, log.a
        ));
    }
    Err(format!(
        "{summary}; slope within 0.70±0.15: {slope_ok}, log coefficient within 0.80±0.25: {coef_ok}; \
         by model: {}",
        per_model.join(", ")
    ))
}

fn main() -> ExitCode {
    let mut hard_failures = 0;
    let mut report = |id: u32, name: &str, advisory: bool, start: Instant, outcome: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match (outcome, advisory) {
            (Ok(detail), false) => println!("criterion {id} {name}: PASS ({secs:.1}s) {detail}"),
            (Ok(detail), true) => {
                println!("criterion {id} {name}: PASS (advisory, {secs:.1}s) {detail}")
            }
            (Err(detail), false) => {
                hard_failures += 1;
                println!("criterion {id} {name}: FAIL ({secs:.1}s) {detail}");
            }
            (Err(detail), true) => {
                println!("criterion {id} {name}: DEVIATION (advisory, {secs:.1}s) {detail}")
            }
        }
    };

    let t = Instant::now();
    report(1, "enumeration counts", false, t, enumeration_counts());

    let t = Instant::now();
    let corpus = bounded_corpus();
    let labelled: Vec<(String, Poset)> = corpus
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("b{i}"), p.clone()))
        .collect();
    let outcome = run_iteration_experiment(&labelled)
        .map_err(|e| e.to_string())
        .and_then(|records| table_one(&records));
    report(2, "iteration averages", false, t, outcome);

    let t = Instant::now();
    report(3, "property suite", false, t, property_suite(&corpus));

    let t = Instant::now();
    report(4, "oracle suites", false, t, oracle_suites());

    let t = Instant::now();
    report(5, "named instances", false, t, named_instances());

    let t = Instant::now();
    report(6, "conjugate search", false, t, conjugate_search());

    let t = Instant::now();
    report(7, "random corpus fits", true, t, stochastic_reference());

    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{hard_failures} hard criteria failed");
        ExitCode::FAILURE
    }
}
