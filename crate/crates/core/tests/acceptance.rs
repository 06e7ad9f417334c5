//! Desk-scale acceptance run. Prints one PASS/FAIL line per criterion.
//!
//! Exit status is nonzero when a criterion fails, except for criteria listed
//! in `KNOWN_FALSE`: statements that were checked and found not to hold as
//! written. Those still print FAIL; the run errors out if one of them starts
//! passing, so the list cannot go stale silently.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use young_monotone::dimension::{
    conj14_from_table, dim_hook, dim_paths, factorial, sweep_cor23, DimTTable,
};
use young_monotone::measure::{check_thm12, dominates_flow, dominates_upperset, Thm12Outcome};
use young_monotone::moves::CaseTag;
use young_monotone::partition::{dominance_geq, enumerate_partitions};
use young_monotone::poset::DEFAULT_UPPER_SET_LIMIT;
use young_monotone::symfunc::{sweep_conj22, sweep_conj24, sweep_prop22};
use young_monotone::thoma::{
    clutch_params, convergence_experiment, d_inf, extreme_measure, lipschitz_check,
    lln_experiment, mean_abs_deviation, GrowthSampler, LlnKind,
};
use young_monotone::{rat, MeasureOnLevel, Partition, Rat, ThomaParams, Verdict};

/// Criteria whose statement was found to be false; see the README.
const KNOWN_FALSE: &[&str] = &["conj24-rerun"];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_params(rng: &mut ChaCha8Rng) -> ThomaParams {
    let la = rng.gen_range(0..=3);
    let lb = rng.gen_range(0..=3);
    let weights: Vec<i64> = (0..la + lb).map(|_| rng.gen_range(1..=20)).collect();
    let total: i64 = weights.iter().sum();
    let den = total + rng.gen_range(0..=10);
    let mut alpha: Vec<Rat> = weights[..la].iter().map(|&w| rat(w, den.max(1))).collect();
    let mut beta: Vec<Rat> = weights[la..].iter().map(|&w| rat(w, den.max(1))).collect();
    alpha.sort_by(|a, b| b.cmp(a));
    beta.sort_by(|a, b| b.cmp(a));
    ThomaParams::new(alpha, beta).unwrap()
}

fn random_measure(rng: &mut ChaCha8Rng, n: usize) -> MeasureOnLevel {
    let parts = enumerate_partitions(n);
    let mut masses: Vec<(Partition, i64)> = Vec::new();
    for l in parts {
        if rng.gen_bool(0.6) {
            masses.push((l, rng.gen_range(1..=9)));
        }
    }
    if masses.is_empty() {
        return MeasureOnLevel::delta(&Partition::row(n));
    }
    let total: i64 = masses.iter().map(|(_, w)| w).sum();
    MeasureOnLevel::new(n, masses.into_iter().map(|(l, w)| (l, rat(w, total)))).unwrap()
}

fn dimension_cross_validation() -> Outcome {
    for n in 0..=10 {
        let mut sq = young_monotone::Nat::zero();
        for l in enumerate_partitions(n) {
            let d = dim_hook(&l);
            let p = dim_paths(&l, 10).map_err(|e| e.to_string())?;
            ensure(d == p, || format!("dim mismatch at {l}: {d} vs {p}"))?;
            sq += &d * &d;
        }
        ensure(sq == factorial(n), || format!("Σ dim² ≠ {n}!"))?;
    }
    Ok("hook = paths for |λ| ≤ 10, Σ dim² = n! for n ≤ 10".into())
}

fn coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut points = vec![ThomaParams::plancherel()];
    points.extend((0..5).map(|_| random_params(&mut rng)));
    for ps in &points {
        let mut upper = extreme_measure(8, ps);
        for n in (1..=8).rev() {
            let lower = extreme_measure(n - 1, ps);
            ensure(upper.total_mass().is_one(), || format!("{ps}: M_{n} mass ≠ 1"))?;
            let proj = upper.project_one().map_err(|e| e.to_string())?;
            ensure(proj == lower, || format!("{ps}: projection of M_{n} ≠ M_{}", n - 1))?;
            upper = lower;
        }
    }
    Ok(format!("{} parameter points, n ≤ 8, exact", points.len()))
}

fn thm12_sweep() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=7 {
        let parts = enumerate_partitions(n);
        for l in &parts {
            for lh in &parts {
                if !dominance_geq(l, lh).unwrap() {
                    continue;
                }
                let (a, b) = (MeasureOnLevel::delta(l), MeasureOnLevel::delta(lh));
                for k in 0..n {
                    match check_thm12(&a, &b, k).map_err(|e| e.to_string())? {
                        Thm12Outcome::Holds(_) => checked += 1,
                        Thm12Outcome::Fails { .. } => {
                            return Err(format!("projection of {l} ≥ {lh} to level {k} fails"))
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (pair, k) checks, n ≤ 7, zero failures"))
}

fn prop22_cor23() -> Outcome {
    let report = sweep_prop22(8, 10);
    ensure(report.all_hold(), || {
        format!("{} counterexamples in the Schur sweep", report.counterexamples.len())
    })?;
    let disagree: Vec<_> = report
        .quadruples
        .iter()
        .filter(|r| r.detail.get("reduced_agrees").map(String::as_str) != Some("true"))
        .collect();
    let asserted_disagree = disagree.iter().filter(|r| r.case != CaseTag::Between).count();
    ensure(asserted_disagree == 0, || {
        format!("reduced form disagrees on {asserted_disagree} tagged instances")
    })?;
    let cor = sweep_cor23(8);
    ensure(cor.all_hold(), || format!("{} dimension-ratio counterexamples", cor.counterexamples.len()))?;
    Ok(format!(
        "{} (quadruple, N) instances and {} dimension-ratio instances hold; reduced form agrees on \
         every r<i / r>î instance ({} between-case instances, where nothing is asserted, differ)",
        report.summary.total,
        cor.summary.total,
        disagree.len()
    ))
}

fn conj22() -> Outcome {
    let report = sweep_conj22(6);
    ensure(report.all_hold(), || {
        let c = &report.counterexamples[0];
        format!(
            "{} counterexamples, first {} / {} at {:?}",
            report.counterexamples.len(),
            c.lambda,
            c.lambda_hat,
            c.detail.get("first_failing_monomial")
        )
    })?;
    Ok(format!("{} quadruples n ≤ 6, conjectured sign on every m_ν", report.summary.total))
}

fn conj24() -> Outcome {
    let grid = [rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)];
    let report = sweep_conj24(5, 4, &grid).map_err(|e| e.to_string())?;
    let sign_ok = report.all_hold();
    let prop = sweep_prop22(5, 4);
    let key = |r: &young_monotone::verdict::InstanceVerdict| {
        (r.lambda.clone(), r.lambda_hat.clone(), r.mu.clone(), r.detail["N"].clone())
    };
    let prop_map: BTreeMap<_, _> = prop.quadruples.iter().map(|r| (key(r), r.verdict)).collect();
    let zero_rows: Vec<_> = report.quadruples.iter().filter(|r| r.detail["t"] == "0/1").collect();
    let t0_ok = zero_rows.len() == prop_map.len()
        && zero_rows.iter().all(|r| prop_map.get(&key(r)) == Some(&r.verdict));
    let one_rows: Vec<_> = report
        .quadruples
        .iter()
        .filter(|r| r.detail["t"] == "1/1" && r.verdict != Verdict::NotApplicable)
        .collect();
    let unequal: Vec<_> = one_rows.iter().filter(|r| !r.equality).collect();
    let summary = format!(
        "sign holds: {sign_ok} ({} rows); t=0 matches the Schur verdicts on {} instances: {t0_ok}; \
         t=1 equalities: {}/{} tagged instances",
        report.summary.total,
        zero_rows.len(),
        one_rows.len() - unequal.len(),
        one_rows.len()
    );
    if sign_ok && t0_ok && unequal.is_empty() {
        Ok(summary)
    } else {
        let example = unequal
            .first()
            .map(|r| {
                format!(
                    "; e.g. λ={} λ̂={} N={}: {} vs {}",
                    r.lambda, r.lambda_hat, r.detail["N"], r.lhs, r.rhs
                )
            })
            .unwrap_or_default();
        Err(summary + &example)
    }
}

fn conj14() -> Outcome {
    let mut total = 0;
    for (p, n_max) in [(2u64, 6usize), (3, 5)] {
        for n in 1..=n_max {
            let table = DimTTable::compute(n, p, 6, 3).map_err(|e| e.to_string())?;
            let sum: u64 = table.vertex.values().sum();
            let want = p.pow((n * (n - 1) / 2) as u32);
            ensure(sum == want, || format!("p={p} n={n}: Σ dim_t = {sum} ≠ {want}"))?;
            let report = conj14_from_table(&table);
            ensure(report.all_hold(), || {
                let c = &report.counterexamples[0];
                format!("p={p} n={n}: fails at λ={} λ̂={} ({} vs {})", c.lambda, c.lambda_hat, c.lhs, c.rhs)
            })?;
            total += report.summary.holds;
        }
    }
    Ok(format!("{total} applicable instances hold; Σ dim_t = p^(n(n−1)/2)"))
}

fn dominance_equivalence() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let parts = enumerate_partitions(n);
        for a in &parts {
            for b in &parts {
                let (x, y) = (MeasureOnLevel::delta(a), MeasureOnLevel::delta(b));
                let flow = dominates_flow(&x, &y).map_err(|e| e.to_string())?.0;
                let up = dominates_upperset(&x, &y, DEFAULT_UPPER_SET_LIMIT).map_err(|e| e.to_string())?;
                ensure(flow == up, || format!("checkers disagree on δ_{a} vs δ_{b}"))?;
                ensure(flow == dominance_geq(a, b).unwrap(), || format!("atom verdict wrong for {a}, {b}"))?;
                pairs += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let mut holds = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let x = random_measure(&mut rng, n);
        let y = random_measure(&mut rng, n);
        let flow = dominates_flow(&x, &y).map_err(|e| e.to_string())?.0;
        let up = dominates_upperset(&x, &y, DEFAULT_UPPER_SET_LIMIT).map_err(|e| e.to_string())?;
        ensure(flow == up, || format!("checkers disagree on {x} vs {y}"))?;
        holds += flow as usize;
    }
    Ok(format!("{pairs} atom pairs and 500 random pairs agree ({holds} dominating)"))
}

fn sampler() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut points = vec![ThomaParams::plancherel()];
    points.extend((0..3).map(|_| random_params(&mut rng)));
    for ps in &points {
        let s = GrowthSampler::<Rat>::new(ps, 7);
        for n in 0..=6 {
            let pushed = s.pushforward(&extreme_measure(n, ps)).map_err(|e| e.to_string())?;
            ensure(pushed == extreme_measure(n + 1, ps), || format!("{ps}: pushforward of M_{n} ≠ M_{}", n + 1))?;
        }
    }
    let s = GrowthSampler::<Rat>::new(&ThomaParams::plancherel(), 3);
    let trials = 100_000u64;
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for seed in 0..trials {
        *counts.entry(s.sample_diagram(3, seed).map_err(|e| e.to_string())?).or_default() += 1;
    }
    let exact = extreme_measure(3, &ThomaParams::plancherel());
    let mut worst: f64 = 0.0;
    for (l, p) in exact.iter() {
        let p = young_monotone::scalar::Scalar::to_f64_lossy(p);
        let c = *counts.get(l).unwrap_or(&0) as f64;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        let z = (c - trials as f64 * p).abs() / sigma;
        worst = worst.max(z);
    }
    ensure(worst <= 3.0, || format!("n=3 Plancherel frequencies off by {worst:.2}σ"))?;
    Ok(format!(
        "pushforward exact for {} parameter points, n ≤ 6; 10^5 draws within {worst:.2}σ",
        points.len()
    ))
}

fn lln() -> Outcome {
    let ps = ThomaParams::parse("7/10,3/10", "").unwrap();
    let rows = lln_experiment::<Rat>(&ps, 1000, 50, 42).map_err(|e| e.to_string())?;
    let d1 = mean_abs_deviation(&rows, LlnKind::Row, 1, 0.7);
    let d2 = mean_abs_deviation(&rows, LlnKind::Row, 2, 0.3);
    let dual = lln_experiment::<Rat>(&ps.swapped(), 1000, 50, 42).map_err(|e| e.to_string())?;
    let c1 = mean_abs_deviation(&dual, LlnKind::Col, 1, 0.7);
    let c2 = mean_abs_deviation(&dual, LlnKind::Col, 2, 0.3);
    let msg = format!("rows: {d1:.4}, {d2:.4}; mirrored columns: {c1:.4}, {c2:.4}");
    ensure([d1, d2, c1, c2].iter().all(|d| *d < 0.05), || msg.clone())?;
    Ok(format!("mean |deviation| {msg}"))
}

fn thoma_convergence() -> Outcome {
    let ps = ThomaParams::parse("1/2,1/4", "1/8,1/8").unwrap();
    let m2 = extreme_measure(2, &ps);
    ensure(
        m2.mass(&Partition::row(2)) == rat(41, 64) && m2.mass(&Partition::column(2)) == rat(23, 64),
        || format!("M_2 = {m2}"),
    )?;
    let rows = convergence_experiment(&ps, 2, &[50, 100, 200, 400]).map_err(|e| e.to_string())?;
    let tv: Vec<f64> = rows
        .iter()
        .map(|r| young_monotone::scalar::Scalar::to_f64_lossy(&r.tv))
        .collect();
    let msg = format!("tv = {tv:.5?}");
    ensure(rows.windows(2).all(|w| w[1].tv < w[0].tv), || format!("not decreasing: {msg}"))?;
    ensure(tv[3] < 0.05, || format!("tv(400) too large: {msg}"))?;
    Ok(format!("M_2 = {{41/64, 23/64}}; {msg}"))
}

fn lemma42() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checks = 0;
    for _ in 0..1000 {
        let a = random_params(&mut rng);
        let b = random_params(&mut rng);
        for k in 1..=8 {
            let out = lipschitz_check(&a, &b, k).map_err(|e| e.to_string())?;
            ensure(out.holds, || format!("{a} vs {b}, k={k}: {} > {}", out.lhs, out.rhs))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} checks, 1000 pairs, k ≤ 8"))
}

fn lemma44() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..10 {
        let ps = random_params(&mut rng);
        for eps in [rat(1, 10), rat(1, 100)] {
            let c = clutch_params(&ps, &eps).map_err(|e| e.to_string())?;
            for side in [&c.minus, &c.plus] {
                ensure(side.is_strict_and_full(), || format!("{ps}, ε={eps}: {side} invalid"))?;
                ensure(side.alpha().iter().chain(side.beta()).all(|x| *x > Rat::zero()), || {
                    format!("{ps}: nonpositive entry in {side}")
                })?;
                let d = d_inf(&ps, side);
                ensure(d < &eps / rat(2, 1), || format!("{ps}: d_∞ to {side} is {d}"))?;
            }
            let d = d_inf(&c.minus, &c.plus);
            ensure(d < eps, || format!("{ps}, ε={eps}: d_∞(minus, plus) = {d}"))?;
        }
    }
    Ok("10 points × ε ∈ {1/10, 1/100}: valid, strictly decreasing, Σ = 1, d_∞ < ε".into())
}

fn main() {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("dimension-cross-validation", Duration::from_secs(10), dimension_cross_validation),
        ("coherence", Duration::from_secs(30), coherence),
        ("thm12-sweep", Duration::from_secs(300), thm12_sweep),
        ("prop22-cor23-sweeps", Duration::from_secs(300), prop22_cor23),
        ("conj22-rerun", Duration::from_secs(600), conj22),
        ("conj24-rerun", Duration::from_secs(600), conj24),
        ("conj14-rerun", Duration::from_secs(600), conj14),
        ("dominance-checker-equivalence", Duration::from_secs(120), dominance_equivalence),
        ("sampler-correctness", Duration::from_secs(120), sampler),
        ("lln-reproduction", Duration::from_secs(300), lln),
        ("thoma-convergence", Duration::from_secs(300), thoma_convergence),
        ("lipschitz-bound", Duration::from_secs(10), lemma42),
        ("clutch-construction", Duration::from_secs(10), lemma44),
    ];
    let mut stderr = std::io::stderr();
    let (mut passed, mut failed, mut unexpected) = (0, Vec::new(), Vec::new());
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let timing = format!("{:.1}s / {}s", took.as_secs_f64(), budget.as_secs());
        let outcome = match outcome {
            Ok(msg) if took > budget => Err(format!("over time budget; {msg}")),
            other => other,
        };
        match outcome {
            Ok(msg) => {
                passed += 1;
                if KNOWN_FALSE.contains(&name) {
                    unexpected.push(name);
                }
                writeln!(stderr, "PASS {name} [{timing}] {msg}").unwrap();
            }
            Err(msg) => {
                if !KNOWN_FALSE.contains(&name) {
                    unexpected.push(name);
                }
                failed.push(name);
                writeln!(stderr, "FAIL {name} [{timing}] {msg}").unwrap();
            }
        }
    }
    writeln!(
        stderr,
        "acceptance: {passed} passed, {} failed {:?}; known-false criteria: {KNOWN_FALSE:?}",
        failed.len(),
        failed
    )
    .unwrap();
    if !unexpected.is_empty() {
        writeln!(stderr, "unexpected outcome for {unexpected:?}").unwrap();
        std::process::exit(1);
    }
}
