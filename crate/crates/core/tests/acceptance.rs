//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use syt_core::hopf::pr_product;
use syt_core::kl::{self, KlTable, Pivot};
use syt_core::orders::{default_cache, sandwich_report, OrderKind};
use syt_core::shapes::longest_dominance_chain;
use syt_core::skew::{suspension_maps, verify_skew_mobius};
use syt_core::verify::{
    all_passed, chains, counterexamples, find_mobius_interval, mobius_top, morphisms, theorem_pr,
};
use syt_core::{Partition, Result, Tableau};

const SECOND: Duration = Duration::from_secs(1);

fn t(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `Ok(None)` passes; `Ok(Some(reason))` and errors fail.
type Outcome = Result<Option<String>>;

fn fails(reason: impl Into<String>) -> Outcome {
    Ok(Some(reason.into()))
}

fn coincidence() -> Outcome {
    let cache = default_cache();
    for n in 2..=5 {
        let weak = cache.order(OrderKind::Weak, n)?.relation();
        let kl = cache.order(OrderKind::Kl, n)?.relation();
        let chain = cache.order(OrderKind::Chain, n)?.relation();
        if weak != kl || weak != chain {
            return fails(format!("orders differ at n = {n}"));
        }
    }
    Ok(None)
}

fn divergence() -> Outcome {
    let report = sandwich_report(default_cache(), 6)?;
    let (s, t1, t2) = (t("1 2 3|4 5 6"), t("1 2 5|3 6|4"), t("1 3 6|2 4|5"));
    let mut expected = vec![
        (s.clone(), t1.clone()),
        (s.clone(), t2.clone()),
        (t1.transpose(), s.transpose()),
        (t2.transpose(), s.transpose()),
    ];
    expected.sort();
    let mut found = report.kl_minus_weak.clone();
    found.sort();
    if found != expected {
        return fails(format!("kl minus weak has {} pairs", found.len()));
    }
    let pair = (t("1 3 4|2 6|5"), t("1 3 6|2 4|5"));
    if !report.chain_minus_kl.contains(&pair) {
        return fails("same-shape pair missing from chain minus kl");
    }
    Ok(None)
}

fn product_intervals() -> Outcome {
    let cache = default_cache();
    for kind in OrderKind::ALL {
        for n in 2..=6 {
            let check = theorem_pr(cache, kind, n)?;
            if !check.passed {
                return fails(check.detail);
            }
        }
    }
    let product = pr_product(&t("1 2|3"), &t("1|2"))?;
    let mut expected = vec![t("1 2 4|3 5"), t("1 2 4|3|5"), t("1 2|3 4|5"), t("1 2|3|4|5")];
    expected.sort();
    if product.tableaux() != expected || !product.is_multiplicity_free() {
        return fails(format!("five-cell product is {product}"));
    }
    Ok(None)
}

fn top_mobius() -> Outcome {
    let cache = default_cache();
    for n in 3..=7 {
        for kind in OrderKind::ALL {
            if kind == OrderKind::Kl && n > 6 {
                continue;
            }
            let check = mobius_top(cache, kind, n)?;
            if !check.passed {
                return fails(format!("{}: {}", check.name, check.detail));
            }
        }
    }
    Ok(None)
}

fn figure_two() -> Outcome {
    let cache = default_cache();
    let weak = cache.order(OrderKind::Weak, 8)?;
    let Some((x, y)) = find_mobius_interval(&weak, -2) else {
        return fails("no weak interval with mu = -2 in SYT_8");
    };
    let chain = cache.order(OrderKind::Chain, 8)?;
    let Some((a, b)) = find_mobius_interval(&chain, 2) else {
        return fails("no chain interval with mu = 2 in SYT_8");
    };
    println!("    weak  mu = -2 on [{x}, {y}]");
    println!("    chain mu = +2 on [{a}, {b}]");
    Ok(None)
}

fn skew_mobius() -> Outcome {
    let cache = default_cache();
    let cases = [
        ("1", 2, OrderKind::Weak, 1),
        ("1", 3, OrderKind::Weak, -1),
        ("2,2", 2, OrderKind::Weak, 1),
        ("2,1", 2, OrderKind::Weak, 0),
        ("2,1", 3, OrderKind::Weak, 0),
        ("2,2", 2, OrderKind::Kl, 1),
        ("2,1", 2, OrderKind::Kl, 0),
    ];
    for (mu, n, base, expected) in cases {
        let report = verify_skew_mobius(cache, &p(mu), n, base)?;
        if report.mobius != expected {
            return fails(format!("mu = ({mu}), n = {n}, {base}: {}", report.mobius));
        }
    }
    Ok(None)
}

fn suspension() -> Outcome {
    for r in [t("1"), t("1 2|3")] {
        for n in 2..=3 {
            suspension_maps(default_cache(), &r, n, OrderKind::Weak)?;
        }
    }
    Ok(None)
}

fn morphism_suite() -> Outcome {
    for kind in OrderKind::ALL {
        for n in 1..=6 {
            let checks = morphisms(default_cache(), kind, n)?;
            if let Some(bad) = checks.iter().find(|c| !c.passed) {
                return fails(bad.name.clone());
            }
        }
    }
    Ok(None)
}

fn chain_sizes() -> Outcome {
    let cache = default_cache();
    let mut failures = Vec::new();
    for n in 3..=7 {
        for kind in OrderKind::ALL {
            if kind == OrderKind::Kl && n > 6 {
                continue;
            }
            let checks = chains(cache, kind, n)?;
            failures.extend(checks.into_iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)));
        }
        if longest_dominance_chain(n) < n {
            failures.push(format!("partition chain too short at n = {n}"));
        }
    }
    if failures.is_empty() {
        Ok(None)
    } else {
        fails(failures.join("; "))
    }
}

fn kl_health() -> Outcome {
    let convention = kl::auto_convention()?;
    for n in 1..=6 {
        let table = KlTable::new(n)?;
        if !kl::cells_match_knuth_classes(&table, convention) {
            return fails(format!("cells differ from Knuth classes at n = {n}"));
        }
    }
    let table = KlTable::new(5)?;
    let other = KlTable::with_pivot(5, Pivot::Largest)?;
    let size = table.perms().len();
    for w in 0..size {
        for x in 0..size {
            if !table.bruhat_leq_idx(x, w) {
                continue;
            }
            let poly = table.poly_idx(x, w);
            if poly.coeff(0) != 1 {
                return fails("constant term differs from 1");
            }
            let gap = table.length_of(w) - table.length_of(x);
            if x != w && poly.degree().is_some_and(|d| 2 * d > gap - 1) {
                return fails("degree bound violated");
            }
            let alt = other.poly(&table.perms()[x], &table.perms()[w])?;
            if *poly != alt {
                return fails("pivot choice changes a polynomial");
            }
        }
    }
    println!("    descent convention: {convention}");
    Ok(None)
}

fn counterexample_suite() -> Outcome {
    let checks = counterexamples(default_cache())?;
    if all_passed(&checks) {
        Ok(None)
    } else {
        let bad: Vec<String> = checks.into_iter().filter(|c| !c.passed).map(|c| c.name).collect();
        fails(bad.join(", "))
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "orders coincide for n = 2..5", limit: 10 * SECOND, run: coincidence },
        Criterion { id: 2, name: "divergence at n = 6", limit: 120 * SECOND, run: divergence },
        Criterion { id: 3, name: "products are intervals", limit: 60 * SECOND, run: product_intervals },
        Criterion { id: 4, name: "Möbius value of the whole poset", limit: 60 * SECOND, run: top_mobius },
        Criterion { id: 5, name: "Möbius -2 (weak) and +2 (chain) in SYT_8", limit: 1800 * SECOND, run: figure_two },
        Criterion { id: 6, name: "skew Möbius values", limit: 300 * SECOND, run: skew_mobius },
        Criterion { id: 7, name: "suspension map triple", limit: 10 * SECOND, run: suspension },
        Criterion { id: 8, name: "morphisms", limit: 300 * SECOND, run: morphism_suite },
        Criterion { id: 9, name: "shortest and longest chains", limit: 300 * SECOND, run: chain_sizes },
        Criterion { id: 10, name: "KL engine health", limit: 300 * SECOND, run: kl_health },
        Criterion { id: 11, name: "counterexample regression", limit: 10 * SECOND, run: counterexample_suite },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(None) if elapsed <= c.limit => "PASS".to_string(),
            Ok(None) => format!("FAIL (took {elapsed:.1?}, limit {:?})", c.limit),
            Ok(Some(reason)) => format!("FAIL ({reason})"),
            Err(e) => format!("FAIL (error: {e})"),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("criterion {:>2} {verdict} [{elapsed:.2?}] {}", c.id, c.name);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
