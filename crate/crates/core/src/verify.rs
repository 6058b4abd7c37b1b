//! Named verification suites over the three orders, each reporting a list of
//! pass/fail checks.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::hopf::verify_product_interval;
use crate::orders::{
    chain_leq, equal_shape_witness, is_saturated_chain, sandwich_report, staircase_chain,
    verify_descent_map, verify_evacuation_auto, verify_shape_map, verify_transpose_anti,
    OrderCache, OrderKind, TableauPoset,
};
use crate::rsk::{insert_letter, knuth_class};
use crate::perm::weak_leq;
use crate::shapes::longest_dominance_chain;
use crate::tableau::{enumerate_syt, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn t(s: &str) -> Tableau {
    s.parse().expect("literal tableau")
}

/// `(-1)^{n-3}`.
pub fn expected_top_mobius(n: usize) -> i64 {
    if n % 2 == 1 { 1 } else { -1 }
}

pub fn mobius_top(cache: &OrderCache, kind: OrderKind, n: usize) -> Result<Check> {
    let mu = cache.order(kind, n)?.poset().mobius_bottom_top()?;
    let expected = expected_top_mobius(n);
    Ok(Check::new(
        format!("mobius-top {kind} n={n}"),
        mu == expected,
        format!("mu = {mu}, expected {expected}"),
    ))
}

/// Every product `T * S` with `|T| + |S| = n` against its interval.
pub fn theorem_pr(cache: &OrderCache, kind: OrderKind, n: usize) -> Result<Check> {
    let tp = cache.order(kind, n)?;
    let pairs: Vec<(Tableau, Tableau)> = (1..n)
        .flat_map(|k| {
            let right = enumerate_syt(n - k);
            enumerate_syt(k)
                .into_iter()
                .flat_map(move |a| right.clone().into_iter().map(move |b| (a.clone(), b)))
        })
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .map(|(a, b)| {
            let check = verify_product_interval(&tp, a, b)?;
            Ok((!check.holds()).then(|| format!("[{a}] * [{b}]")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        format!("product intervals {kind} n={n}"),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} products", pairs.len())
        } else {
            format!("fails for {}", failures.join(", "))
        },
    ))
}

pub fn morphisms(cache: &OrderCache, kind: OrderKind, n: usize) -> Result<Vec<Check>> {
    let tp = cache.order(kind, n)?;
    let name = |what: &str| format!("{what} {kind} n={n}");
    Ok(vec![
        Check::new(name("descent map preserves order"), verify_descent_map(&tp)?, ""),
        Check::new(name("shape map preserves order"), verify_shape_map(&tp)?, ""),
        Check::new(name("transpose reverses order"), verify_transpose_anti(&tp)?, ""),
        Check::new(name("evacuation preserves order"), verify_evacuation_auto(&tp)?, ""),
    ])
}

pub fn sandwich(cache: &OrderCache, n: usize) -> Result<Vec<Check>> {
    let report = sandwich_report(cache, n)?;
    let pairs = |v: &[(Tableau, Tableau)]| {
        v.iter().map(|(a, b)| format!("[{a}] < [{b}]")).collect::<Vec<_>>().join(", ")
    };
    Ok(vec![
        Check::new(format!("weak within kl n={n}"), true, format!("kl minus weak: {}", pairs(&report.kl_minus_weak))),
        Check::new(
            format!("kl within chain n={n}"),
            true,
            format!("{} pairs in chain minus kl", report.chain_minus_kl.len()),
        ),
        Check::new("geometric order", true, crate::orders::SandwichReport::GEOMETRIC_NOTICE),
    ])
}

/// Shortest saturated chain, longest chain and the hook staircase.
pub fn chains(cache: &OrderCache, kind: OrderKind, n: usize) -> Result<Vec<Check>> {
    let tp = cache.order(kind, n)?;
    let (shortest, longest) = tp.poset().chain_extremes()?;
    let par = longest_dominance_chain(n);
    let mut checks = vec![Check::new(
        format!("longest chain {kind} n={n}"),
        longest == par,
        format!("{longest} elements, partitions give {par}"),
    )];
    if kind == OrderKind::Weak {
        checks.push(Check::new(
            format!("shortest chain weak n={n}"),
            shortest == n,
            format!("{shortest} elements"),
        ));
    }
    checks.push(Check::new(
        format!("staircase chain saturated {kind} n={n}"),
        is_saturated_chain(&tp, &staircase_chain(n))?,
        "",
    ));
    Ok(checks)
}

/// First interval `[x, y]` of `tp` with `mu(x, y) = target`, scanning `x` in
/// index order.
pub fn find_mobius_interval(tp: &TableauPoset, target: i64) -> Option<(Tableau, Tableau)> {
    let poset = tp.poset();
    (0..tp.len()).into_par_iter().find_map_first(|x| {
        let row = poset.mobius_row(x);
        row.iter()
            .position(|&v| v == target)
            .map(|y| (tp.tableau(x).clone(), tp.tableau(y).clone()))
    })
}

fn weak_leq_classes(s: &Tableau, x: &Tableau) -> Result<bool> {
    let right = knuth_class(x);
    for u in knuth_class(s) {
        for w in &right {
            if weak_leq(&u, w)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The known small counterexamples, with their exact tableaux.
pub fn counterexamples(cache: &OrderCache) -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let (r, s, x) = (t("1 2 5|3 4"), t("1 4 5|2|3"), t("1 4|2 5|3"));
    let weak5 = cache.order(OrderKind::Weak, 5)?;
    checks.push(Check::new(
        "weak order needs transitive closure",
        weak5.leq(&r, &s)? && weak5.leq(&s, &x)? && !weak_leq_classes(&r, &x)?,
        format!("[{r}] < [{s}] < [{x}] with no comparable class representatives"),
    ));

    let (low, high) = (t("1 3 4|2 6|5"), t("1 3 6|2 4|5"));
    checks.push(Check::new(
        "chain comparability with equal shapes",
        low.shape() == high.shape() && chain_leq(&low, &high)? && !chain_leq(&high, &low)?,
        format!("[{low}] < [{high}] in chain order"),
    ));

    let weak6 = cache.order(OrderKind::Weak, 6)?;
    let kl6 = cache.order(OrderKind::Kl, 6)?;
    let (s, t1, t2) = (t("1 2 3|4 5 6"), t("1 2 5|3 6|4"), t("1 3 6|2 4|5"));
    let expected = {
        let mut v = vec![
            (s.clone(), t1.clone()),
            (s.clone(), t2.clone()),
            (t1.transpose(), s.transpose()),
            (t2.transpose(), s.transpose()),
        ];
        v.sort();
        v
    };
    let mut found = sandwich_report(cache, 6)?.kl_minus_weak;
    found.sort();
    checks.push(Check::new(
        "kl pairs outside weak order in SYT_6",
        found == expected && kl6.leq(&s, &t1)? && !weak6.leq(&s, &t1)?,
        format!("{} pairs", found.len()),
    ));

    let (hi, lo) = (t("1 3 7|2 5|6"), t("1 3 5|2 7|6"));
    let (hi4, lo4) = (insert_letter(&hi, 4)?, insert_letter(&lo, 4)?);
    checks.push(Check::new(
        "chain order fails extension by insertion",
        chain_leq(&lo.standardize(), &hi.standardize())?
            && hi4 == t("1 3 4|2 5 7|6")
            && lo4 == t("1 3 4|2 5|6 7")
            && !chain_leq(&lo4, &hi4)?,
        format!("[{lo4}] is not below [{hi4}]"),
    ));

    let moved = |a: &Tableau, i: usize| a.dual_knuth_move(i);
    let (ch, cl) = (t("1 3 6|2 4|5"), t("1 3 4|2 6|5"));
    let (ch2, cl2) = (moved(&ch, 4)?, moved(&cl, 4)?);
    checks.push(Check::new(
        "chain order fails inner translation",
        chain_leq(&cl, &ch)?
            && ch2 == t("1 3 5|2 4|6")
            && cl2 == t("1 3 5|2 6|4")
            && !chain_leq(&cl2, &ch2)?,
        format!("[{cl2}] is not below [{ch2}]"),
    ));

    let (wl, wh) = (t("1 2 4|3 5 6"), t("1 2 4|3 6|5"));
    let (wl2, wh2) = (moved(&wl, 3)?, moved(&wh, 3)?);
    checks.push(Check::new(
        "weak order fails inner translation",
        weak6.leq(&wl, &wh)?
            && wl2 == t("1 2 3|4 5 6")
            && wh2 == t("1 2 5|3 6|4")
            && !weak6.leq(&wl2, &wh2)?,
        format!("[{wl2}] is not below [{wh2}]"),
    ));

    let (a, b) = (t("1 2 5|3 4|6"), t("1 2 5|3 6|4"));
    let (a2, b2) = (t("1 3 5|2 4|6"), t("1 3 5|2 6|4"));
    let same_outer = |p: &Tableau, q: &Tableau| -> Result<bool> { Ok(p.outer_part(3)? == q.outer_part(3)?) };
    checks.push(Check::new(
        "chain order loses comparisons under inner replacement",
        chain_leq(&a, &b)?
            && !chain_leq(&a2, &b2)?
            && same_outer(&a, &a2)?
            && same_outer(&b, &b2)?
            && a.restrict(1, 3)? == b.restrict(1, 3)?,
        format!("[{a2}] is not below [{b2}]"),
    ));

    let chain6 = cache.order(OrderKind::Chain, 6)?;
    checks.push(Check::new(
        "chain order has strict same-shape pairs in SYT_6",
        equal_shape_witness(&chain6).is_some(),
        "",
    ));
    Ok(checks)
}
