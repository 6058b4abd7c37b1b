//! Weak, KL and chain orders on `SYT_n`, a shared cache of built posets, and
//! the structural checks run against them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kl::{self, DescentConvention, KlTable};
use crate::perm::{DescentSet, Permutation};
use crate::poset::{is_order_preserving, is_order_reversing, Poset};
use crate::rsk::{insert_letter, insertion_tableau};
use crate::shapes::{dominance_leq_op, enumerate_partitions};
use crate::tableau::{enumerate_syt, Tableau};

/// Largest `n` for the weak and chain orders.
pub const MAX_N: usize = 8;
/// Largest `n` for the KL order without the big-run flag.
pub const KL_SMALL_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderKind {
    Weak,
    Kl,
    Chain,
}

impl OrderKind {
    pub const ALL: [OrderKind; 3] = [OrderKind::Weak, OrderKind::Kl, OrderKind::Chain];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Weak => "weak",
            OrderKind::Kl => "kl",
            OrderKind::Chain => "chain",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<OrderKind> {
        match s {
            "weak" => Ok(OrderKind::Weak),
            "kl" => Ok(OrderKind::Kl),
            "chain" => Ok(OrderKind::Chain),
            other => Err(Error::Parse(format!("unknown order {other:?}"))),
        }
    }
}

/// A poset on `SYT_n`; element `i` of the poset is `tableaux[i]`, and the
/// tableaux follow [`enumerate_syt`] for every kind.
#[derive(Debug)]
pub struct TableauPoset {
    pub kind: OrderKind,
    pub n: usize,
    tableaux: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    poset: Poset,
}

impl TableauPoset {
    fn new(kind: OrderKind, n: usize, tableaux: Vec<Tableau>, poset: Poset) -> TableauPoset {
        let index = tableaux.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TableauPoset { kind, n, tableaux, index, poset }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn tableau(&self, i: usize) -> &Tableau {
        &self.tableaux[i]
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn idx(&self, t: &Tableau) -> Result<usize> {
        self.index
            .get(t)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(t.to_string()))
    }

    pub fn leq(&self, s: &Tableau, t: &Tableau) -> Result<bool> {
        Ok(self.poset.leq(self.idx(s)?, self.idx(t)?))
    }

    /// Strict relation as index pairs.
    pub fn relation(&self) -> BTreeSet<(usize, usize)> {
        self.poset.strict_pairs().into_iter().collect()
    }
}

/// Which descent convention the KL preorder uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConventionChoice {
    Right,
    Left,
    Auto,
}

impl FromStr for ConventionChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<ConventionChoice> {
        match s {
            "right" => Ok(ConventionChoice::Right),
            "left" => Ok(ConventionChoice::Left),
            "auto" => Ok(ConventionChoice::Auto),
            other => Err(Error::Parse(format!("unknown descent convention {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrderConfig {
    /// Admits the KL order at `n = 7`.
    pub allow_big: bool,
    pub convention: ConventionChoice,
    /// Directory holding KL table caches.
    pub kl_cache: Option<PathBuf>,
}

impl Default for OrderConfig {
    fn default() -> OrderConfig {
        OrderConfig {
            allow_big: false,
            convention: ConventionChoice::Auto,
            kl_cache: None,
        }
    }
}

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

/// Builds each `(kind, n)` poset and each KL table at most once.
#[derive(Debug, Default)]
pub struct OrderCache {
    config: OrderConfig,
    posets: Mutex<HashMap<(OrderKind, usize), Slot<TableauPoset>>>,
    tables: Mutex<HashMap<usize, Slot<KlTable>>>,
}

impl OrderCache {
    pub fn new(config: OrderConfig) -> OrderCache {
        OrderCache { config, ..OrderCache::default() }
    }

    pub fn config(&self) -> &OrderConfig {
        &self.config
    }

    pub fn convention(&self) -> Result<DescentConvention> {
        match self.config.convention {
            ConventionChoice::Right => Ok(DescentConvention::Right),
            ConventionChoice::Left => Ok(DescentConvention::Left),
            ConventionChoice::Auto => kl::auto_convention(),
        }
    }

    /// Rejects requests past the size limits.
    pub fn check_limits(&self, kind: OrderKind, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::LimitExceeded("n must be at least 1".into()));
        }
        match kind {
            OrderKind::Weak | OrderKind::Chain if n > MAX_N => Err(Error::LimitExceeded(format!(
                "{kind} order is limited to n <= {MAX_N}"
            ))),
            OrderKind::Kl if n > kl::MAX_KL_N => Err(Error::LimitExceeded(format!(
                "kl order is limited to n <= {}",
                kl::MAX_KL_N
            ))),
            OrderKind::Kl if n > KL_SMALL_N && !self.config.allow_big => Err(Error::LimitExceeded(
                format!("kl order at n = {n} needs the big-run flag"),
            )),
            _ => Ok(()),
        }
    }

    pub fn kl_table(&self, n: usize) -> Result<Arc<KlTable>> {
        self.check_limits(OrderKind::Kl, n)?;
        let slot = self.tables.lock().expect("cache lock").entry(n).or_default().clone();
        slot.get_or_init(|| self.build_table(n).map(Arc::new)).clone()
    }

    fn build_table(&self, n: usize) -> Result<KlTable> {
        let Some(dir) = &self.config.kl_cache else {
            return KlTable::new(n);
        };
        let convention = self.convention()?;
        let path = dir.join(format!("s{n}-{convention}.kl"));
        if path.exists() {
            return KlTable::load(&path, n, convention);
        }
        std::fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        let table = KlTable::new(n)?;
        table.save(&path, convention)?;
        Ok(table)
    }

    pub fn order(&self, kind: OrderKind, n: usize) -> Result<Arc<TableauPoset>> {
        self.check_limits(kind, n)?;
        let slot = self
            .posets
            .lock()
            .expect("cache lock")
            .entry((kind, n))
            .or_default()
            .clone();
        slot.get_or_init(|| self.build(kind, n).map(Arc::new)).clone()
    }

    fn build(&self, kind: OrderKind, n: usize) -> Result<TableauPoset> {
        match kind {
            OrderKind::Weak => weak_order_poset(n),
            OrderKind::Chain => chain_order_poset(n),
            OrderKind::Kl => {
                let table = self.kl_table(n)?;
                let (tableaux, poset) = kl::kl_order_on_tableaux(&table, self.convention()?)?;
                Ok(TableauPoset::new(OrderKind::Kl, n, tableaux, poset))
            }
        }
    }
}

/// Process-wide cache with the default configuration.
pub fn default_cache() -> &'static OrderCache {
    static CACHE: OnceLock<OrderCache> = OnceLock::new();
    CACHE.get_or_init(OrderCache::default)
}

/// `order_poset(kind, n)` from the default cache.
pub fn order_poset(kind: OrderKind, n: usize) -> Result<Arc<TableauPoset>> {
    default_cache().order(kind, n)
}

fn labels(tableaux: &[Tableau]) -> Vec<String> {
    tableaux.iter().map(|t| t.to_string()).collect()
}

/// Closure of `(P(u), P(u s_i))` over the weak covers of `S_n`.
pub fn weak_order_poset(n: usize) -> Result<TableauPoset> {
    if n == 0 || n > MAX_N {
        return Err(Error::LimitExceeded(format!("weak order is limited to 1 <= n <= {MAX_N}")));
    }
    let tableaux = enumerate_syt(n);
    let index: HashMap<&Tableau, u32> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
    let class_of: Vec<u32> = Permutation::all(n)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|u| index[&insertion_tableau(u.word())])
        .collect();
    let pairs: BTreeSet<(usize, usize)> = Permutation::all(n)
        .flat_map(|u| {
            let from = class_of[u.lex_rank()];
            (1..n)
                .filter(|&i| u.at(i) < u.at(i + 1))
                .map(|i| (from, class_of[u.right_mul_simple(i).lex_rank()]))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a as usize, b as usize))
                .collect::<Vec<_>>()
        })
        .collect();
    let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
    let poset = Poset::from_indexed(labels(&tableaux), &pairs)?;
    Ok(TableauPoset::new(OrderKind::Weak, n, tableaux, poset))
}

/// Prefix sums of `sh(st(T_{[i,j]}))` for every segment, full range first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentShapes(Vec<Vec<u8>>);

impl SegmentShapes {
    pub fn of(t: &Tableau) -> SegmentShapes {
        let n = t.n();
        let mut segments = vec![(1, n)];
        segments.extend(
            (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .filter(|&seg| seg != (1, n)),
        );
        SegmentShapes(
            segments
                .into_iter()
                .filter(|&(i, j)| i < j)
                .map(|(i, j)| {
                    let shape = t.restrict_standardize(i, j).expect("segment in range").shape();
                    shape
                        .parts()
                        .iter()
                        .scan(0u8, |acc, &p| {
                            *acc += p as u8;
                            Some(*acc)
                        })
                        .collect()
                })
                .collect(),
        )
    }

    /// Opposite dominance on every segment.
    pub fn leq(&self, other: &SegmentShapes) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| {
            let total = *a.last().unwrap_or(&0);
            (0..a.len().max(b.len())).all(|k| {
                a.get(k).copied().unwrap_or(total) >= b.get(k).copied().unwrap_or(total)
            })
        })
    }
}

/// `s <=_chain t`: every segment shape of `s` is opposite-dominance below
/// that of `t`.
pub fn chain_leq(s: &Tableau, t: &Tableau) -> Result<bool> {
    if s.n() != t.n() {
        return Err(Error::SizeMismatch(s.n(), t.n()));
    }
    if !s.is_straight() || !t.is_straight() {
        return Err(Error::InvalidTableau("chain order needs straight shapes".into()));
    }
    Ok(SegmentShapes::of(s).leq(&SegmentShapes::of(t)))
}

pub fn chain_order_poset(n: usize) -> Result<TableauPoset> {
    if n == 0 || n > MAX_N {
        return Err(Error::LimitExceeded(format!("chain order is limited to 1 <= n <= {MAX_N}")));
    }
    let tableaux = enumerate_syt(n);
    let shapes: Vec<SegmentShapes> = tableaux.par_iter().map(SegmentShapes::of).collect();
    let pairs: Vec<(usize, usize)> = (0..tableaux.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let shapes = &shapes;
            (0..shapes.len())
                .filter(move |&b| a != b && shapes[a].leq(&shapes[b]))
                .map(move |b| (a, b))
        })
        .collect();
    let poset = Poset::from_indexed(labels(&tableaux), &pairs)?;
    Ok(TableauPoset::new(OrderKind::Chain, n, tableaux, poset))
}

/// `(2^{[m]}, ⊆)` labelled by the text form of [`DescentSet`].
pub fn boolean_algebra(m: usize) -> Poset {
    let sets: Vec<DescentSet> = (0..1u32 << m).map(|mask| DescentSet(mask << 1)).collect();
    let labels = sets.iter().map(|d| d.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..sets.len())
        .flat_map(|a| (0..sets.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && sets[a].is_subset(&sets[b]))
        .collect();
    Poset::from_indexed(labels, &pairs).expect("inclusion is a partial order")
}

/// `(Par_n, <=^op_dom)` labelled by partition text.
pub fn dominance_poset(n: usize) -> Poset {
    let parts = enumerate_partitions(n);
    let labels = parts.iter().map(|p| p.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..parts.len())
        .flat_map(|a| (0..parts.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && dominance_leq_op(&parts[a], &parts[b]).expect("same size"))
        .collect();
    Poset::from_indexed(labels, &pairs).expect("dominance is a partial order")
}

fn parse_label(label: &str) -> Option<Tableau> {
    label.parse().ok()
}

/// `Des` is order preserving into the Boolean algebra.
pub fn verify_descent_map(tp: &TableauPoset) -> Result<bool> {
    let target = boolean_algebra(tp.n.saturating_sub(1));
    is_order_preserving(
        |l| parse_label(l).map(|t| t.descent_set().to_string()),
        tp.poset(),
        &target,
    )
}

/// The shape map is order preserving into `(Par_n, <=^op_dom)`.
pub fn verify_shape_map(tp: &TableauPoset) -> Result<bool> {
    let target = dominance_poset(tp.n);
    is_order_preserving(|l| parse_label(l).map(|t| t.shape().to_string()), tp.poset(), &target)
}

/// Transposition reverses the order; being an involution it is then an
/// anti-automorphism.
pub fn verify_transpose_anti(tp: &TableauPoset) -> Result<bool> {
    is_order_reversing(
        |l| parse_label(l).map(|t| t.transpose().to_string()),
        tp.poset(),
        tp.poset(),
    )
}

/// Evacuation preserves the order; being an involution it is then an automorphism.
pub fn verify_evacuation_auto(tp: &TableauPoset) -> Result<bool> {
    is_order_preserving(
        |l| parse_label(l).map(|t| t.evacuate().to_string()),
        tp.poset(),
        tp.poset(),
    )
}

/// First cover `(S, T)` with `|Des(T) \ Des(S)| >= 2`.
pub fn weak_cover_descent_witness(tp: &TableauPoset) -> Option<(Tableau, Tableau)> {
    tp.poset().covers().into_iter().find_map(|(a, b)| {
        let (s, t) = (tp.tableau(a), tp.tableau(b));
        (t.descent_set().difference(&s.descent_set()).len() >= 2).then(|| (s.clone(), t.clone()))
    })
}

/// First strict pair `S < T` with equal shapes.
pub fn equal_shape_witness(tp: &TableauPoset) -> Option<(Tableau, Tableau)> {
    tp.poset().strict_pairs().into_iter().find_map(|(a, b)| {
        let (s, t) = (tp.tableau(a), tp.tableau(b));
        (s.shape() == t.shape()).then(|| (s.clone(), t.clone()))
    })
}

/// `1 2 .. k` in the first row and `k+1, .., n` down the first column, for
/// `k = n, n-1, .., 1`.
pub fn staircase_chain(n: usize) -> Vec<Tableau> {
    (1..=n)
        .rev()
        .map(|k| {
            let mut rows = vec![(1..=k as u8).collect::<Vec<_>>()];
            rows.extend((k as u8 + 1..=n as u8).map(|v| vec![v]));
            Tableau::from_rows(rows).expect("hook tableau")
        })
        .collect()
}

/// Each consecutive pair is a cover.
pub fn is_saturated_chain(tp: &TableauPoset, chain: &[Tableau]) -> Result<bool> {
    let idx: Vec<usize> = chain.iter().map(|t| tp.idx(t)).collect::<Result<_>>()?;
    Ok(idx.windows(2).all(|w| tp.poset().upper_covers(w[0]).contains(&w[1])))
}

/// `S <= T` implies `st(S_{[i,j]}) <= st(T_{[i,j]})`; `smaller[k]` is the
/// poset on `SYT_k` (index 0 unused).
pub fn restriction_witness(
    tp: &TableauPoset,
    smaller: &[Arc<TableauPoset>],
) -> Result<Option<(Tableau, Tableau, usize, usize)>> {
    let n = tp.n;
    for (a, b) in tp.poset().strict_pairs() {
        let (s, t) = (tp.tableau(a), tp.tableau(b));
        for i in 1..=n {
            for j in i + 1..=n {
                let target = &smaller[j - i + 1];
                if !target.leq(&s.restrict_standardize(i, j)?, &t.restrict_standardize(i, j)?)? {
                    return Ok(Some((s.clone(), t.clone(), i, j)));
                }
            }
        }
    }
    Ok(None)
}

/// `Ω₁` and `Ω₂` are order preserving from `tp` into `next` on `SYT_{n+1}`.
pub fn verify_extension_maps(tp: &TableauPoset, next: &TableauPoset) -> Result<bool> {
    for (a, b) in tp.poset().strict_pairs() {
        let (s, t) = (tp.tableau(a), tp.tableau(b));
        if !next.leq(&s.extend_row(), &t.extend_row())? || !next.leq(&s.extend_col(), &t.extend_col())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relabels a standard tableau onto `[n] \ {i}` by raising entries `>= i`.
pub fn open_gap(t: &Tableau, i: u8) -> Tableau {
    let rows = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| if v >= i { v + 1 } else { v }).collect())
        .collect();
    Tableau::from_rows(rows).expect("relabelling keeps rows and columns increasing")
}

/// Looks for `S <= T` on `SYT_{n-1}` and a letter `i` with
/// `Ś^{↓i} !<= Ť^{↓i}` in `next` on `SYT_n`.
pub fn rsk_extension_witness(
    tp: &TableauPoset,
    next: &TableauPoset,
) -> Result<Option<(Tableau, Tableau, u8)>> {
    let n = next.n as u8;
    for (a, b) in tp.poset().strict_pairs() {
        let (s, t) = (tp.tableau(a), tp.tableau(b));
        for i in 1..=n {
            let si = insert_letter(&open_gap(s, i), i)?;
            let ti = insert_letter(&open_gap(t, i), i)?;
            if !next.leq(&si, &ti)? {
                return Ok(Some((s.clone(), t.clone(), i)));
            }
        }
    }
    Ok(None)
}

/// Pairs in `outer` missing from `inner`, as tableaux; errors when `inner`
/// has a pair `outer` lacks.
fn relation_difference(
    inner: &TableauPoset,
    outer: &TableauPoset,
) -> Result<Vec<(Tableau, Tableau)>> {
    let a = inner.relation();
    let b = outer.relation();
    if let Some(&(x, y)) = a.difference(&b).next() {
        return Err(Error::InclusionViolated(
            format!("{} ⊆ {}", inner.kind, outer.kind),
            inner.tableau(x).to_string(),
            inner.tableau(y).to_string(),
        ));
    }
    Ok(b.difference(&a)
        .map(|&(x, y)| (outer.tableau(x).clone(), outer.tableau(y).clone()))
        .collect())
}

/// Relations of the three orders on `SYT_n`, checked to nest.
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub n: usize,
    pub convention: DescentConvention,
    pub kl_minus_weak: Vec<(Tableau, Tableau)>,
    pub chain_minus_kl: Vec<(Tableau, Tableau)>,
}

impl SandwichReport {
    pub const GEOMETRIC_NOTICE: &'static str =
        "the geometric order is not computed; it lies between the kl and chain relations";
}

pub fn sandwich_report(cache: &OrderCache, n: usize) -> Result<SandwichReport> {
    let weak = cache.order(OrderKind::Weak, n)?;
    let kl = cache.order(OrderKind::Kl, n)?;
    let chain = cache.order(OrderKind::Chain, n)?;
    Ok(SandwichReport {
        n,
        convention: cache.convention()?,
        kl_minus_weak: relation_difference(&weak, &kl)?,
        chain_minus_kl: relation_difference(&kl, &chain)?,
    })
}
