//! Finite posets over opaque string labels.
//!
//! A [`Poset`] is built from a generating relation and stores its
//! reflexive-transitive closure. Small posets keep a dense bit matrix of the
//! closed relation in both directions; posets above [`DENSE_LIMIT`] elements
//! keep only the generating DAG and answer reachability queries on demand.
//! Labels are never interpreted here.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest element count stored as a dense relation matrix.
pub const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone)]
enum Relation {
    /// `up[x]` = {y : x <= y}, `down[x]` = {y : y <= x}.
    Dense {
        up: Vec<FixedBitSet>,
        down: Vec<FixedBitSet>,
    },
    /// Generating edges of an acyclic relation; reachability by search.
    Sparse {
        succ: Vec<Vec<usize>>,
        pred: Vec<Vec<usize>>,
    },
}

/// A finite partial order on labelled elements.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    rel: Relation,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other)
    }
}

impl Eq for Poset {}

/// Storage selection for [`Poset::build_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Storage {
    Auto,
    Dense,
    Sparse,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `relations` on `elements`.
    pub fn build<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Poset> {
        Self::build_with(elements, relations, Storage::Auto)
    }

    pub fn build_with<S: AsRef<str>>(
        elements: &[S],
        relations: &[(S, S)],
        storage: Storage,
    ) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let index = index_labels(&labels)?;
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.as_ref().to_string()))
        };
        let pairs = relations
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indexed_with(labels, &pairs, storage)
    }

    /// Builds a poset from labels and index pairs `(a, b)` meaning `a <= b`.
    pub fn from_indexed(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        Self::from_indexed_with(labels, pairs, Storage::Auto)
    }

    pub fn from_indexed_with(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
        storage: Storage,
    ) -> Result<Poset> {
        let n = labels.len();
        let index = index_labels(&labels)?;
        if let Some(&(a, b)) = pairs.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::UnknownLabel(format!("index {}", a.max(b))));
        }
        let dense = match storage {
            Storage::Auto => n <= DENSE_LIMIT,
            Storage::Dense => true,
            Storage::Sparse => false,
        };
        let rel = if dense {
            dense_closure(&labels, pairs)?
        } else {
            sparse_relation(&labels, pairs)?
        };
        Ok(Poset {
            mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
            labels,
            index,
            rel,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.rel, Relation::Dense { .. })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `x <= y` by element index.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        match &self.rel {
            Relation::Dense { up, .. } => up[x].contains(y),
            Relation::Sparse { succ, .. } => x == y || reach(succ, x, self.len()).contains(y),
        }
    }

    pub fn leq_labels(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// {y : x <= y}
    pub fn up_set(&self, x: usize) -> FixedBitSet {
        match &self.rel {
            Relation::Dense { up, .. } => up[x].clone(),
            Relation::Sparse { succ, .. } => reach(succ, x, self.len()),
        }
    }

    /// {y : y <= x}
    pub fn down_set(&self, x: usize) -> FixedBitSet {
        match &self.rel {
            Relation::Dense { down, .. } => down[x].clone(),
            Relation::Sparse { pred, .. } => reach(pred, x, self.len()),
        }
    }

    /// All strict relations `x < y` as index pairs, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| {
                self.up_set(x)
                    .ones()
                    .filter(move |&y| y != x)
                    .map(move |y| (x, y))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Upper covers of `x` in the Hasse diagram.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        let mut strict = self.up_set(x);
        strict.set(x, false);
        let mut redundant = FixedBitSet::with_capacity(self.len());
        for y in strict.ones() {
            let mut above = self.up_set(y);
            above.set(y, false);
            redundant.union_with(&above);
        }
        strict.difference(&redundant).collect()
    }

    /// Hasse diagram edges `(x, y)` with `x` covered by `y`, sorted by index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| self.upper_covers(x).into_iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down_set(x).count_ones(..) == 1)
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.up_set(x).count_ones(..) == 1)
            .collect()
    }

    /// The unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    /// The unique maximum, if any.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn bounds(&self) -> Result<(usize, usize)> {
        match (self.bottom(), self.top()) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::NotBounded),
        }
    }

    /// A deterministic linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        match &self.rel {
            Relation::Dense { down, .. } => {
                let mut order: Vec<usize> = (0..self.len()).collect();
                order.sort_by_key(|&x| (down[x].count_ones(..), x));
                order
            }
            Relation::Sparse { succ, pred } => {
                let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
                let mut ready: std::collections::BTreeSet<usize> =
                    (0..self.len()).filter(|&x| indeg[x] == 0).collect();
                let mut order = Vec::with_capacity(self.len());
                while let Some(x) = ready.pop_first() {
                    order.push(x);
                    for &y in &succ[x] {
                        indeg[y] -= 1;
                        if indeg[y] == 0 {
                            ready.insert(y);
                        }
                    }
                }
                order
            }
        }
    }

    /// Row of Möbius values `mu(x, -)`, zero off the up-set of `x`.
    /// Computed once per source element and cached.
    pub fn mobius_row(&self, x: usize) -> &[i64] {
        self.mobius_rows[x].get_or_init(|| self.compute_mobius_row(x))
    }

    fn compute_mobius_row(&self, x: usize) -> Vec<i64> {
        let n = self.len();
        let up = self.up_set(x);
        let mut mu = vec![0i64; n];
        let mut acc = vec![0i64; n];
        for z in self.linear_extension().into_iter().filter(|&z| up.contains(z)) {
            mu[z] = if z == x { 1 } else { -acc[z] };
            if mu[z] == 0 {
                continue;
            }
            for y in self.up_set(z).ones().filter(|&y| y != z) {
                acc[y] += mu[z];
            }
        }
        mu
    }

    pub fn mobius_idx(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// Möbius function `mu(x, y)`; fails unless `x <= y`.
    pub fn mobius(&self, x: &str, y: &str) -> Result<i64> {
        self.mobius_idx(self.index_of(x)?, self.index_of(y)?)
    }

    /// `mu(0, 1)` of a bounded poset.
    pub fn mobius_bottom_top(&self) -> Result<i64> {
        let (b, t) = self.bounds()?;
        self.mobius_idx(b, t)
    }

    /// Induced subposet on the given element indices, in the given order.
    pub fn induced(&self, members: &[usize]) -> Poset {
        let labels: Vec<String> = members.iter().map(|&i| self.labels[i].clone()).collect();
        let pairs: Vec<(usize, usize)> = members
            .iter()
            .enumerate()
            .flat_map(|(a, &x)| {
                members
                    .iter()
                    .enumerate()
                    .filter(move |&(b, &y)| a != b && self.leq(x, y))
                    .map(move |(b, _)| (a, b))
            })
            .collect();
        Poset::from_indexed(labels, &pairs).expect("induced subposet of a poset is a poset")
    }

    pub fn interval_idx(&self, x: usize, y: usize) -> Result<Poset> {
        Ok(self.induced(&self.interval_members(x, y)?))
    }

    /// Element indices of `[x, y]`, ascending.
    pub fn interval_members(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.labels[x].clone(),
                self.labels[y].clone(),
            ));
        }
        let mut members = self.up_set(x);
        members.intersect_with(&self.down_set(y));
        Ok(members.ones().collect())
    }

    /// The closed interval `[x, y]` as an induced subposet.
    pub fn interval(&self, x: &str, y: &str) -> Result<Poset> {
        self.interval_idx(self.index_of(x)?, self.index_of(y)?)
    }

    /// Sizes (in elements) of the shortest saturated chain from the bottom to
    /// the top and of the longest chain.
    pub fn chain_extremes(&self) -> Result<(usize, usize)> {
        let (bottom, top) = self.bounds()?;
        let covers: Vec<Vec<usize>> = (0..self.len()).map(|x| self.upper_covers(x)).collect();

        let mut dist = vec![usize::MAX; self.len()];
        dist[bottom] = 1;
        let mut queue = VecDeque::from([bottom]);
        while let Some(x) = queue.pop_front() {
            for &y in &covers[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }

        let mut longest = vec![1usize; self.len()];
        for x in self.linear_extension() {
            for &y in &covers[x] {
                longest[y] = longest[y].max(longest[x] + 1);
            }
        }
        Ok((dist[top], longest[top]))
    }

    /// True when both posets have the same labels and the same relation.
    pub fn same_order(&self, other: &Poset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let map: Option<Vec<usize>> = self
            .labels
            .iter()
            .map(|l| other.index.get(l).copied())
            .collect();
        let Some(map) = map else {
            return false;
        };
        (0..self.len()).all(|x| {
            let mine = self.up_set(x);
            let theirs = other.up_set(map[x]);
            mine.count_ones(..) == theirs.count_ones(..)
                && mine.ones().all(|y| theirs.contains(map[y]))
        })
    }

    /// Graphviz rendering of the Hasse diagram, elements sorted by label.
    pub fn to_dot(&self) -> String {
        let (labels, covers) = self.sorted_export();
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for l in &labels {
            let _ = writeln!(out, "  \"{}\";", escape_dot(l));
        }
        for (a, b) in &covers {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", escape_dot(a), escape_dot(b));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let (elements, covers) = self.sorted_export();
        let doc = PosetJson {
            elements,
            covers: covers.into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&doc).expect("poset JSON serialization")
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let doc: PosetJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let pairs: Vec<(String, String)> =
            doc.covers.into_iter().map(|[a, b]| (a, b)).collect();
        Poset::build(&doc.elements, &pairs)
    }

    fn sorted_export(&self) -> (Vec<String>, Vec<(String, String)>) {
        let mut labels = self.labels.clone();
        labels.sort();
        let mut covers: Vec<(String, String)> = self
            .covers()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect();
        covers.sort();
        (labels, covers)
    }
}

/// JSON document schema for exported posets.
#[derive(Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::Parse(format!("duplicate element label {l:?}")));
        }
    }
    Ok(index)
}

fn dense_closure(labels: &[String], pairs: &[(usize, usize)]) -> Result<Relation> {
    let n = labels.len();
    let mut up: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(i);
            row
        })
        .collect();
    for &(a, b) in pairs {
        up[a].insert(b);
    }
    for k in 0..n {
        let row_k = up[k].clone();
        for (i, row) in up.iter_mut().enumerate() {
            if i != k && row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    let mut down: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
    for (x, row) in up.iter().enumerate() {
        for y in row.ones() {
            if y != x && up[y].contains(x) {
                return Err(Error::CycleDetected(labels[x].clone(), labels[y].clone()));
            }
            down[y].insert(x);
        }
    }
    Ok(Relation::Dense { up, down })
}

fn sparse_relation(labels: &[String], pairs: &[(usize, usize)]) -> Result<Relation> {
    let n = labels.len();
    let mut succ = vec![Vec::new(); n];
    let mut pred = vec![Vec::new(); n];
    for &(a, b) in pairs {
        if a != b {
            succ[a].push(b);
            pred[b].push(a);
        }
    }
    for list in succ.iter_mut().chain(pred.iter_mut()) {
        list.sort_unstable();
        list.dedup();
    }
    // Kahn's algorithm; leftovers lie on or above a cycle.
    let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    let mut seen = 0;
    while let Some(x) = queue.pop_front() {
        seen += 1;
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    if seen < n {
        let start = (0..n).find(|&x| indeg[x] > 0).expect("cycle vertex");
        // Walk backwards along unresolved predecessors until a vertex repeats.
        let mut visited = vec![usize::MAX; n];
        let mut path = Vec::new();
        let mut x = start;
        while visited[x] == usize::MAX {
            visited[x] = path.len();
            path.push(x);
            x = *pred[x].iter().find(|&&p| indeg[p] > 0).expect("cycle predecessor");
        }
        let cycle = &path[visited[x]..];
        let (a, b) = (cycle[0], cycle[cycle.len() - 1]);
        return Err(Error::CycleDetected(labels[a].clone(), labels[b].clone()));
    }
    Ok(Relation::Sparse { succ, pred })
}

fn reach(adj: &[Vec<usize>], start: usize, n: usize) -> FixedBitSet {
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen.put(y) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Checks that `f` maps every relation of `p` to a relation of `q`.
pub fn is_order_preserving<F>(f: F, p: &Poset, q: &Poset) -> Result<bool>
where
    F: Fn(&str) -> Option<String>,
{
    check_monotone(f, p, q, false)
}

/// Checks that `x <= y` in `p` implies `f(y) <= f(x)` in `q`.
pub fn is_order_reversing<F>(f: F, p: &Poset, q: &Poset) -> Result<bool>
where
    F: Fn(&str) -> Option<String>,
{
    check_monotone(f, p, q, true)
}

fn check_monotone<F>(f: F, p: &Poset, q: &Poset, reverse: bool) -> Result<bool>
where
    F: Fn(&str) -> Option<String>,
{
    let image = p
        .labels()
        .iter()
        .map(|l| {
            f(l).and_then(|img| q.index.get(&img).copied())
                .ok_or_else(|| Error::UnmappedElement(l.clone()))
        })
        .collect::<Result<Vec<usize>>>()?;
    // Checking covers suffices by transitivity of q.
    Ok(p.covers().into_iter().all(|(x, y)| {
        if reverse {
            q.leq(image[y], image[x])
        } else {
            q.leq(image[x], image[y])
        }
    }))
}

/// Order-isomorphism test by backtracking with degree and level pruning.
pub fn poset_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let keys = |poset: &Poset| {
        let mut lower = vec![0usize; poset.len()];
        let mut upper = vec![0usize; poset.len()];
        for (a, b) in poset.covers() {
            upper[a] += 1;
            lower[b] += 1;
        }
        (0..poset.len())
            .map(|x| {
                (
                    poset.down_set(x).count_ones(..),
                    poset.up_set(x).count_ones(..),
                    lower[x],
                    upper[x],
                )
            })
            .collect::<Vec<_>>()
    };
    let p_keys = keys(p);
    let q_keys = keys(q);
    let mut a = p_keys.clone();
    let mut b = q_keys.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b || p.strict_pairs().len() != q.strict_pairs().len() {
        return false;
    }

    let order = p.linear_extension();
    let mut assignment = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];

    fn extend(
        depth: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        p_keys: &[(usize, usize, usize, usize)],
        q_keys: &[(usize, usize, usize, usize)],
        assignment: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..q.len() {
            if used[y] || q_keys[y] != p_keys[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a| {
                let fa = assignment[a];
                p.leq(a, x) == q.leq(fa, y) && p.leq(x, a) == q.leq(y, fa)
            });
            if !consistent {
                continue;
            }
            assignment[x] = y;
            used[y] = true;
            if extend(depth + 1, order, p, q, p_keys, q_keys, assignment, used) {
                return true;
            }
            used[y] = false;
            assignment[x] = usize::MAX;
        }
        false
    }

    extend(0, &order, p, q, &p_keys, &q_keys, &mut assignment, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn diamond() -> Poset {
        Poset::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    #[test]
    fn singleton() {
        let p = Poset::build::<&str>(&["a"], &[]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.chain_extremes().unwrap(), (1, 1));
        assert_eq!(p.interval("a", "a").unwrap().len(), 1);
    }

    #[test]
    fn closure_adds_transitive_pairs() {
        let p = chain3();
        assert!(p.leq_labels("a", "c").unwrap());
        assert!(!p.leq_labels("c", "a").unwrap());
        assert_eq!(p.covers().len(), 2);
    }

    #[test]
    fn cycle_detected() {
        let err = Poset::build(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(..)));
        let err = Poset::build_with(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "b")],
            Storage::Sparse,
        )
        .unwrap_err();
        assert_eq!(err, Error::CycleDetected("b".into(), "c".into()));
    }

    #[test]
    fn unknown_endpoint() {
        let err = Poset::build(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownLabel("z".into()));
    }

    #[test]
    fn mobius_small() {
        assert_eq!(chain3().mobius("a", "c").unwrap(), 0);
        assert_eq!(chain3().mobius("a", "b").unwrap(), -1);
        assert_eq!(diamond().mobius("a", "d").unwrap(), 1);
        assert!(matches!(
            diamond().mobius("b", "c"),
            Err(Error::NotComparable(..))
        ));
    }

    #[test]
    fn interval_of_chain_is_whole_chain() {
        let p = chain3();
        assert_eq!(p.interval("a", "c").unwrap(), p);
        assert!(matches!(p.interval("c", "a"), Err(Error::NotComparable(..))));
    }

    #[test]
    fn order_preserving_maps() {
        let p = diamond();
        assert!(is_order_preserving(|l| Some(l.to_string()), &p, &p).unwrap());
        assert!(is_order_preserving(|_| Some("a".to_string()), &p, &p).unwrap());
        let swap = |l: &str| Some(if l == "a" { "d" } else { "a" }.to_string());
        assert!(!is_order_preserving(swap, &p, &p).unwrap());
        assert!(matches!(
            is_order_preserving(|_| None, &p, &p),
            Err(Error::UnmappedElement(_))
        ));
    }

    #[test]
    fn chain_extremes_of_unranked_poset() {
        // a < b < c < e and a < d < e: shortest saturated 3, longest 4.
        let p = Poset::build(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("b", "c"), ("c", "e"), ("a", "d"), ("d", "e")],
        )
        .unwrap();
        assert_eq!(p.chain_extremes().unwrap(), (3, 4));
        let anti = Poset::build::<&str>(&["a", "b"], &[]).unwrap();
        assert_eq!(anti.chain_extremes(), Err(Error::NotBounded));
    }

    #[test]
    fn isomorphism() {
        assert!(poset_isomorphic(&diamond(), &diamond()));
        assert!(!poset_isomorphic(&chain3(), &diamond()));
        let relabelled =
            Poset::build(&["w", "x", "y", "z"], &[("z", "x"), ("z", "y"), ("x", "w"), ("y", "w")])
                .unwrap();
        assert!(poset_isomorphic(&diamond(), &relabelled));
        let four_chain =
            Poset::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        assert!(!poset_isomorphic(&four_chain, &diamond()));
    }

    #[test]
    fn exports() {
        let single = Poset::build::<&str>(&["a"], &[]).unwrap();
        assert_eq!(single.to_dot(), "digraph poset {\n  rankdir=BT;\n  \"a\";\n}\n");
        let two = Poset::build(&["b", "a"], &[("a", "b")]).unwrap();
        assert_eq!(two.to_json(), r#"{"elements":["a","b"],"covers":[["a","b"]]}"#);
        let d = diamond();
        assert_eq!(Poset::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn sparse_matches_dense() {
        let elements: Vec<String> = (0..12).map(|i| format!("e{i:02}")).collect();
        let rel: Vec<(String, String)> = (0..12)
            .flat_map(|i| [2 * i + 1, 3 * i + 2].into_iter().map(move |j| (i, j)))
            .filter(|&(_, j)| j < 12)
            .map(|(i, j)| (elements[i].clone(), elements[j].clone()))
            .collect();
        let dense = Poset::build_with(&elements, &rel, Storage::Dense).unwrap();
        let sparse = Poset::build_with(&elements, &rel, Storage::Sparse).unwrap();
        assert!(!sparse.is_dense());
        assert_eq!(dense, sparse);
        assert_eq!(dense.covers(), sparse.covers());
        for x in 0..12 {
            assert_eq!(dense.mobius_row(x), sparse.mobius_row(x));
        }
    }

    #[test]
    fn zeta_times_mobius_is_identity() {
        let p = diamond();
        for x in 0..p.len() {
            for y in 0..p.len() {
                let total: i64 = (0..p.len())
                    .filter(|&z| p.leq(x, z) && p.leq(z, y))
                    .map(|z| p.mobius_row(x)[z])
                    .sum();
                assert_eq!(total, i64::from(x == y) * i64::from(p.leq(x, y)));
            }
        }
    }
}
