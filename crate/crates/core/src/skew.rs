//! Skew tableau posets, the fixed-inner intervals `SYT_m^R`, and the map
//! triple `(f, i, j)` behind their Möbius values.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::orders::{OrderCache, OrderKind, TableauPoset};
use crate::poset::{is_order_preserving, poset_isomorphic, Poset};
use crate::shapes::Partition;
use crate::tableau::{enumerate_skew_syt, enumerate_syt_of_shape, Tableau};

/// `R` with `k+1..k+n` appended to its first row.
pub fn zero_hat(r: &Tableau, n: usize) -> Tableau {
    let k = r.n() as u8;
    let mut rows = r.rows().to_vec();
    if rows.is_empty() {
        rows.push(Vec::new());
    }
    rows[0].extend(k + 1..=k + n as u8);
    Tableau::from_rows(rows).expect("appending to the first row")
}

/// `R` with `k+1..k+n` appended down its first column.
pub fn one_hat(r: &Tableau, n: usize) -> Tableau {
    let k = r.n() as u8;
    let mut rows = r.rows().to_vec();
    rows.extend((k + 1..=k + n as u8).map(|v| vec![v]));
    Tableau::from_rows(rows).expect("appending to the first column")
}

/// All `T` on `[k+n]` with `T_{[1,k]} = R`, sorted.
pub fn fixed_inner_members(r: &Tableau, n: usize) -> Vec<Tableau> {
    let k = r.n() as u8;
    let mut out: Vec<Tableau> = enumerate_skew_syt(&r.shape(), n)
        .iter()
        .map(|u| r.fill_inner(&u.shifted(k)).expect("outer filling fits"))
        .collect();
    out.sort();
    out
}

/// `SYT_m^R` as an induced subposet of the base order on `SYT_m`.
#[derive(Debug, Clone)]
pub struct FixedInner {
    pub r: Tableau,
    pub n: usize,
    pub base: OrderKind,
    pub members: Vec<Tableau>,
    pub poset: Poset,
    pub zero: Tableau,
    pub one: Tableau,
    /// Members coincide with the interval `[zero, one]` of the base order.
    pub is_interval: bool,
}

pub fn fixed_inner_poset(cache: &OrderCache, r: &Tableau, n: usize, base: OrderKind) -> Result<FixedInner> {
    if !r.is_straight() || !r.is_standard() {
        return Err(Error::InvalidTableau(format!("{r} is not a standard straight tableau")));
    }
    let tp = cache.order(base, r.n() + n)?;
    let members = fixed_inner_members(r, n);
    let mut idx: Vec<usize> = members.iter().map(|t| tp.idx(t)).collect::<Result<_>>()?;
    idx.sort_unstable();
    let (zero, one) = (zero_hat(r, n), one_hat(r, n));
    let interval = tp.poset().interval_members(tp.idx(&zero)?, tp.idx(&one)?)?;
    Ok(FixedInner {
        r: r.clone(),
        n,
        base,
        members: idx.iter().map(|&i| tp.tableau(i).clone()).collect(),
        poset: tp.poset().induced(&idx),
        zero,
        one,
        is_interval: interval == idx,
    })
}

/// A poset on skew tableaux of inner shape `mu`.
#[derive(Debug, Clone)]
pub struct SkewPoset {
    pub mu: Partition,
    pub n: usize,
    pub base: OrderKind,
    pub tableaux: Vec<Tableau>,
    pub poset: Poset,
}

/// Orders the skew tableaux by comparing their lifts under the filling `r`.
fn lifted_order(tp: &TableauPoset, r: &Tableau, tableaux: &[Tableau]) -> Result<Poset> {
    let k = r.n() as u8;
    let lifts: Vec<usize> = tableaux
        .iter()
        .map(|u| tp.idx(&r.fill_inner(&u.shifted(k))?))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..lifts.len())
        .flat_map(|a| (0..lifts.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && tp.poset().leq(lifts[a], lifts[b]))
        .collect();
    Poset::from_indexed(tableaux.iter().map(|t| t.to_string()).collect(), &pairs)
}

/// `SYT_n^mu`: `U <= V` iff their fillings by the row-superstandard `R`
/// compare on `SYT_{|mu|+n}`. Only the KL order qualifies as a base.
pub fn skew_order_poset(cache: &OrderCache, mu: &Partition, n: usize, base: OrderKind) -> Result<SkewPoset> {
    if base != OrderKind::Kl {
        return Err(Error::InnerTranslationUnsupported(base.to_string()));
    }
    let tp = cache.order(base, mu.size() + n)?;
    let tableaux = enumerate_skew_syt(mu, n);
    let r = Tableau::superstandard(mu);
    let poset = lifted_order(&tp, &r, &tableaux)?;
    if let Some(alt) = enumerate_syt_of_shape(mu).into_iter().rfind(|x| *x != r) {
        let other = lifted_order(&tp, &alt, &tableaux)?;
        if !poset.same_order(&other) || !poset_isomorphic(&poset, &other) {
            return Err(Error::HypothesisFailed("inner translation".into(), alt.to_string()));
        }
    }
    Ok(SkewPoset { mu: mu.clone(), n, base, tableaux, poset })
}

/// Entry replacement `R -> R'` carries `SYT_m^R` onto `SYT_m^{R'}` as an order
/// isomorphism.
pub fn replacement_is_isomorphism(
    cache: &OrderCache,
    r: &Tableau,
    r2: &Tableau,
    n: usize,
    base: OrderKind,
) -> Result<bool> {
    if r.shape() != r2.shape() {
        return Err(Error::InvalidTableau(format!("{r} and {r2} differ in shape")));
    }
    let k = r.n();
    let p = fixed_inner_poset(cache, r, n, base)?;
    let q = fixed_inner_poset(cache, r2, n, base)?;
    let swap = |from: &Tableau, to: &Tableau| {
        let (from, to) = (from.clone(), to.clone());
        move |label: &str| -> Option<String> {
            let t: Tableau = label.parse().ok()?;
            if t.restrict(1, k).ok()? != from {
                return None;
            }
            Some(to.fill_inner(&t.restrict(k + 1, k + n).ok()?).ok()?.to_string())
        }
    };
    Ok(is_order_preserving(swap(r, r2), &p.poset, &q.poset)?
        && is_order_preserving(swap(r2, r), &q.poset, &p.poset)?)
}

/// Pairs `S <= T` sharing the inner filling `R`, together with a filling `R'`
/// of the same shape under which the comparison is lost. Searches every
/// inner size `1 <= k < m`.
pub fn replacement_witness(
    cache: &OrderCache,
    m: usize,
    base: OrderKind,
) -> Result<Option<(Tableau, Tableau, Tableau)>> {
    let tp = cache.order(base, m)?;
    for k in 1..m {
        for mu in crate::shapes::enumerate_partitions(k) {
            let fillings = enumerate_syt_of_shape(&mu);
            if fillings.len() < 2 {
                continue;
            }
            let outers = enumerate_skew_syt(&mu, m - k);
            let lift = |r: &Tableau, u: &Tableau| tp.idx(&r.fill_inner(&u.shifted(k as u8))?);
            for r in &fillings {
                let idx: Vec<usize> = outers.iter().map(|u| lift(r, u)).collect::<Result<_>>()?;
                for r2 in fillings.iter().filter(|x| *x != r) {
                    let idx2: Vec<usize> = outers.iter().map(|u| lift(r2, u)).collect::<Result<_>>()?;
                    for a in 0..outers.len() {
                        for b in 0..outers.len() {
                            if tp.poset().leq(idx[a], idx[b]) && !tp.poset().leq(idx2[a], idx2[b]) {
                                return Ok(Some((
                                    tp.tableau(idx[a]).clone(),
                                    tp.tableau(idx[b]).clone(),
                                    r2.clone(),
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Sizes and Möbius values seen while checking the map triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspensionReport {
    pub p_size: usize,
    pub q_size: usize,
    pub ideal_size: usize,
    pub filter_size: usize,
    pub mobius_p: i64,
    pub mobius_q: i64,
}

fn fail(condition: &str, witness: impl std::fmt::Display) -> Error {
    Error::HypothesisFailed(condition.into(), witness.to_string())
}

/// Checks the map triple between `P = SYT_m^R` and `Q = SYT_{m-1}^R`:
/// `f` restricts to `[1, m-1]`, `i` appends `m` to the first row and `j`
/// appends `m` to the first column.
pub fn suspension_maps(cache: &OrderCache, r: &Tableau, n: usize, base: OrderKind) -> Result<SuspensionReport> {
    if n < 2 {
        return Err(Error::LimitExceeded("the map triple needs n >= 2".into()));
    }
    let p = fixed_inner_poset(cache, r, n, base)?;
    let q = fixed_inner_poset(cache, r, n - 1, base)?;
    for side in [&p, &q] {
        if !side.is_interval {
            return Err(fail("interval", format!("[{}, {}]", side.zero, side.one)));
        }
    }
    let m = r.n() + n;
    let (pp, qp) = (&p.poset, &q.poset);
    let (q0, q1) = qp.bounds()?;
    if q0 == q1 {
        return Err(fail("bounded", &q.zero));
    }
    let (p0, p1) = pp.bounds()?;
    let f = |t: &Tableau| t.restrict(1, m - 1).expect("range inside [1, m]");
    let i = |t: &Tableau| t.extend_row();
    let j = |t: &Tableau| t.extend_col();
    let p_of = |t: &Tableau| pp.index_of(&t.to_string());
    let q_of = |t: &Tableau| qp.index_of(&t.to_string());

    fn via(g: impl Fn(&Tableau) -> Tableau) -> impl Fn(&str) -> Option<String> {
        move |label| label.parse::<Tableau>().ok().map(|t| g(&t).to_string())
    }
    if !is_order_preserving(via(&f), pp, qp)? {
        return Err(fail("f order preserving", m));
    }
    if !is_order_preserving(via(&i), qp, pp)? {
        return Err(fail("i order preserving", m));
    }
    if !is_order_preserving(via(&j), qp, pp)? {
        return Err(fail("j order preserving", m));
    }

    let in_ideal: Vec<bool> = p.members.iter().map(|t| !t.descent_set().contains(m - 1)).collect();
    let members_idx: Vec<usize> = p.members.iter().map(p_of).collect::<Result<_>>()?;
    let ideal: HashSet<usize> = members_idx
        .iter()
        .zip(&in_ideal)
        .filter(|(_, &b)| b)
        .map(|(&x, _)| x)
        .collect();
    for (a, b) in pp.covers() {
        if ideal.contains(&b) && !ideal.contains(&a) {
            return Err(fail("ideal", format!("{} < {}", pp.label(a), pp.label(b))));
        }
    }

    for s in &q.members {
        let (is, js) = (i(s), j(s));
        if !ideal.contains(&p_of(&is)?) {
            return Err(fail("(i) image of i", is));
        }
        if ideal.contains(&p_of(&js)?) {
            return Err(fail("(i) image of j", js));
        }
        if f(&is) != *s || f(&js) != *s {
            return Err(fail("(ii) f after i and j", s));
        }
    }

    for t in &p.members {
        let x = p_of(t)?;
        let base = f(t);
        if !pp.leq(p_of(&i(&base))?, x) || !pp.leq(x, p_of(&j(&base))?) {
            return Err(fail("(iii) i f <= id <= j f", t));
        }
        let y = q_of(&base)?;
        if y == q0 && ideal.contains(&x) && x != p0 {
            return Err(fail("(iv) fibre over bottom", t));
        }
        if y == q1 && !ideal.contains(&x) && x != p1 {
            return Err(fail("(iv) fibre over top", t));
        }
    }

    let mobius_p = pp.mobius_idx(p0, p1)?;
    let mobius_q = qp.mobius_idx(q0, q1)?;
    if mobius_p != -mobius_q {
        return Err(Error::MobiusMismatch { computed: mobius_p, expected: -mobius_q });
    }
    Ok(SuspensionReport {
        p_size: p.members.len(),
        q_size: q.members.len(),
        ideal_size: ideal.len(),
        filter_size: p.members.len() - ideal.len(),
        mobius_p,
        mobius_q,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMobiusReport {
    pub mu: Partition,
    pub n: usize,
    pub base: OrderKind,
    pub size: usize,
    pub mobius: i64,
    pub expected: i64,
}

/// `(-1)^{n-2}` for a rectangular inner shape, else 0.
pub fn expected_skew_mobius(mu: &Partition, n: usize) -> i64 {
    match (mu.is_rectangular(), n % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    }
}

/// Möbius value of `SYT_n^mu` (KL base) or of `SYT_m^R` with `R` row
/// superstandard (other bases), checked against [`expected_skew_mobius`].
pub fn verify_skew_mobius(cache: &OrderCache, mu: &Partition, n: usize, base: OrderKind) -> Result<SkewMobiusReport> {
    if mu.is_empty() || n == 0 {
        return Err(Error::InvalidTableau("inner shape and outer part must be nonempty".into()));
    }
    let poset = match base {
        OrderKind::Kl => skew_order_poset(cache, mu, n, base)?.poset,
        _ => fixed_inner_poset(cache, &Tableau::superstandard(mu), n, base)?.poset,
    };
    let mobius = poset.mobius_bottom_top()?;
    let expected = expected_skew_mobius(mu, n);
    if mobius != expected {
        return Err(Error::MobiusMismatch { computed: mobius, expected });
    }
    Ok(SkewMobiusReport { mu: mu.clone(), n, base, size: poset.len(), mobius, expected })
}

/// Connected components of the proper part of a bounded poset.
pub fn proper_part_components(poset: &Poset) -> Result<usize> {
    let (b, t) = poset.bounds()?;
    let inner: Vec<usize> = (0..poset.len()).filter(|&x| x != b && x != t).collect();
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for &start in &inner {
        if !seen.insert(start) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &inner {
                if (poset.lt(x, y) || poset.lt(y, x)) && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    Ok(count)
}
