//! Kazhdan–Lusztig polynomials of `S_n`, the `μ̄` coefficients, the KL
//! preorder and the induced order on tableaux.

use std::collections::HashMap;
use std::fmt;
use std::io::{Read, Write};
use std::ops::{Add, Mul, Neg, Sub};
use std::path::Path;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{DescentSet, Permutation};
use crate::poset::Poset;
use crate::rsk::insertion_tableau;
use crate::tableau::{enumerate_syt, Tableau};

/// Largest `n` a table can be built for.
pub const MAX_KL_N: usize = 7;

const CACHE_MAGIC: &[u8; 5] = b"SYTKL";
const CACHE_VERSION: u8 = 1;

/// Integer polynomial in `q`, coefficients by ascending power, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial(Vec<i64>);

impl QPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> QPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial(coeffs)
    }

    pub fn zero() -> QPolynomial {
        QPolynomial(Vec::new())
    }

    pub fn one() -> QPolynomial {
        QPolynomial(vec![1])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> QPolynomial {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        QPolynomial(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `[q^k]`.
    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        QPolynomial(c)
    }

    /// Terms of degree at most `d`.
    pub fn truncate(&self, d: usize) -> QPolynomial {
        QPolynomial::new(self.0.iter().take(d + 1).copied().collect())
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c)
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.0.len().max(rhs.0.len());
        QPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::new(c)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Which simple reflection of `D_L(w)` drives the recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    Smallest,
    Largest,
}

/// Descent sets compared by the generating relation of the preorder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescentConvention {
    Right,
    Left,
}

impl DescentConvention {
    pub fn descents(self, u: &Permutation) -> DescentSet {
        match self {
            DescentConvention::Right => u.descents_right(),
            DescentConvention::Left => u.descents_left(),
        }
    }

    fn code(self) -> u8 {
        match self {
            DescentConvention::Right => 0,
            DescentConvention::Left => 1,
        }
    }
}

impl fmt::Display for DescentConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DescentConvention::Right => "right",
            DescentConvention::Left => "left",
        })
    }
}

/// Fixed-width coefficient buffer used while filling the table.
type Coeffs = [i64; 16];

/// All KL polynomials of `S_n`, with permutations indexed by length then
/// lexicographically.
pub struct KlTable {
    n: usize,
    pivot: Pivot,
    perms: Vec<Permutation>,
    by_rank: Vec<u32>,
    length: Vec<u8>,
    left_mul: Vec<Vec<u32>>,
    below: Vec<FixedBitSet>,
    pool: Vec<QPolynomial>,
    ids: Vec<u32>,
    mu: Vec<Vec<(u32, i64)>>,
}

impl fmt::Debug for KlTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KlTable")
            .field("n", &self.n)
            .field("pivot", &self.pivot)
            .field("distinct_polynomials", &self.pool.len())
            .finish()
    }
}

impl KlTable {
    pub fn new(n: usize) -> Result<KlTable> {
        KlTable::with_pivot(n, Pivot::Smallest)
    }

    pub fn with_pivot(n: usize, pivot: Pivot) -> Result<KlTable> {
        let mut t = KlTable::skeleton(n, pivot)?;
        t.fill();
        Ok(t)
    }

    fn skeleton(n: usize, pivot: Pivot) -> Result<KlTable> {
        if n > MAX_KL_N {
            return Err(Error::LimitExceeded(format!(
                "KL polynomials of S_{n} are out of reach (limit n = {MAX_KL_N})"
            )));
        }
        let mut perms: Vec<Permutation> = Permutation::all(n).collect();
        perms.sort_by_cached_key(|u| (u.length(), u.clone()));
        let mut by_rank = vec![0u32; perms.len()];
        for (i, u) in perms.iter().enumerate() {
            by_rank[u.lex_rank()] = i as u32;
        }
        let length: Vec<u8> = perms.iter().map(|u| u.length() as u8).collect();
        let left_mul: Vec<Vec<u32>> = perms
            .iter()
            .map(|u| {
                (1..n)
                    .map(|i| by_rank[u.left_mul_simple(i).lex_rank()])
                    .collect()
            })
            .collect();
        let size = perms.len();
        let mut t = KlTable {
            n,
            pivot,
            perms,
            by_rank,
            length,
            left_mul,
            below: Vec::with_capacity(size),
            pool: vec![QPolynomial::zero(), QPolynomial::one()],
            ids: vec![0; size * size],
            mu: vec![Vec::new(); size],
        };
        t.fill_below();
        Ok(t)
    }

    /// `below(w) = below(sw) ∪ s·below(sw)` for any `s ∈ D_L(w)`.
    fn fill_below(&mut self) {
        let size = self.perms.len();
        let mut first = FixedBitSet::with_capacity(size);
        first.insert(0);
        self.below.push(first);
        for w in 1..size {
            let s = self.pivot_of(w);
            let v = self.left_mul[w][s] as usize;
            let mut set = self.below[v].clone();
            for x in self.below[v].ones() {
                set.insert(self.left_mul[x][s] as usize);
            }
            self.below.push(set);
        }
    }

    /// Index into `left_mul` rows of the chosen left descent of `w`.
    fn pivot_of(&self, w: usize) -> usize {
        let mut descents = (0..self.n - 1).filter(|&s| self.is_left_descent(s, w));
        match self.pivot {
            Pivot::Smallest => descents.next(),
            Pivot::Largest => descents.last(),
        }
        .expect("non-identity element has a left descent")
    }

    fn is_left_descent(&self, s: usize, x: usize) -> bool {
        self.length[self.left_mul[x][s] as usize] < self.length[x]
    }

    fn fill(&mut self) {
        let size = self.perms.len();
        self.ids[0] = 1;
        let mut intern: HashMap<QPolynomial, u32> =
            self.pool.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        let mut start = 1;
        while start < size {
            let len = self.length[start];
            let end = (start..size).find(|&i| self.length[i] != len).unwrap_or(size);
            let rows: Vec<Vec<(usize, Coeffs)>> =
                (start..end).into_par_iter().map(|w| self.compute_row(w)).collect();
            for (w, row) in (start..end).zip(rows) {
                for (x, c) in row {
                    let p = QPolynomial::new(c.to_vec());
                    let next = self.pool.len() as u32;
                    let id = *intern.entry(p.clone()).or_insert_with(|| {
                        self.pool.push(p);
                        next
                    });
                    self.ids[w * size + x] = id;
                }
                self.mu[w] = self.compute_mu_list(w);
            }
            start = end;
        }
    }

    fn coeffs(&self, x: usize, w: usize) -> &[i64] {
        self.pool[self.ids[w * self.perms.len() + x] as usize].coeffs()
    }

    fn compute_row(&self, w: usize) -> Vec<(usize, Coeffs)> {
        let s = self.pivot_of(w);
        let v = self.left_mul[w][s] as usize;
        let lw = self.length[w] as usize;
        let corrections: Vec<(usize, i64, usize)> = self.mu[v]
            .iter()
            .filter(|&&(z, _)| self.is_left_descent(s, z as usize))
            .map(|&(z, m)| (z as usize, m, (lw - self.length[z as usize] as usize) / 2))
            .collect();
        self.below[w]
            .ones()
            .map(|x| {
                let mut c: Coeffs = [0; 16];
                let sx = self.left_mul[x][s] as usize;
                let shift_sx = usize::from(!self.is_left_descent(s, x));
                let shift_x = 1 - shift_sx;
                for (k, a) in self.coeffs(sx, v).iter().enumerate() {
                    c[k + shift_sx] += a;
                }
                for (k, a) in self.coeffs(x, v).iter().enumerate() {
                    c[k + shift_x] += a;
                }
                for &(z, m, shift) in &corrections {
                    if self.below[z].contains(x) {
                        for (k, a) in self.coeffs(x, z).iter().enumerate() {
                            c[k + shift] -= m * a;
                        }
                    }
                }
                (x, c)
            })
            .collect()
    }

    fn compute_mu_list(&self, w: usize) -> Vec<(u32, i64)> {
        let lw = self.length[w] as usize;
        self.below[w]
            .ones()
            .filter_map(|z| {
                let l = lw - self.length[z] as usize;
                if l % 2 == 0 {
                    return None;
                }
                let m = self.coeffs(z, w).get((l - 1) / 2).copied().unwrap_or(0);
                (m != 0).then_some((z as u32, m))
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pivot(&self) -> Pivot {
        self.pivot
    }

    /// Permutations in table order (by length, then lexicographic).
    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn index_of(&self, u: &Permutation) -> usize {
        self.by_rank[u.lex_rank()] as usize
    }

    pub fn length_of(&self, i: usize) -> usize {
        self.length[i] as usize
    }

    pub fn bruhat_leq_idx(&self, x: usize, w: usize) -> bool {
        self.below[w].contains(x)
    }

    pub fn poly_idx(&self, x: usize, w: usize) -> &QPolynomial {
        &self.pool[self.ids[w * self.perms.len() + x] as usize]
    }

    /// `P_{u,w}`; zero unless `u <= w` in Bruhat order.
    pub fn poly(&self, u: &Permutation, w: &Permutation) -> Result<QPolynomial> {
        if u.n() != self.n || w.n() != self.n {
            return Err(Error::SizeMismatch(u.n().max(w.n()), self.n));
        }
        Ok(self.poly_idx(self.index_of(u), self.index_of(w)).clone())
    }

    pub fn mu_bar_idx(&self, u: usize, w: usize) -> i64 {
        if !self.below[w].contains(u) {
            return 0;
        }
        let l = self.length[w] as usize - self.length[u] as usize;
        if l % 2 == 0 {
            return 0;
        }
        self.poly_idx(u, w).coeff((l - 1) / 2)
    }

    /// `μ̄(u, w)`: `[q^{(l(u,w)-1)/2}] P_{u,w}` when `l(u,w)` is odd, else 0.
    pub fn mu_bar(&self, u: &Permutation, w: &Permutation) -> Result<i64> {
        if u.n() != self.n || w.n() != self.n {
            return Err(Error::SizeMismatch(u.n().max(w.n()), self.n));
        }
        Ok(self.mu_bar_idx(self.index_of(u), self.index_of(w)))
    }

    /// Pairs `z < w` with `μ̄(z, w) != 0`.
    pub fn mu_pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.mu
            .iter()
            .enumerate()
            .flat_map(|(w, list)| list.iter().map(move |&(z, m)| (z as usize, w, m)))
    }

    pub fn distinct_polynomials(&self) -> usize {
        self.pool.len()
    }

    /// Writes the table in the versioned binary cache format.
    pub fn save(&self, path: &Path, convention: DescentConvention) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut buf = Vec::new();
        buf.extend_from_slice(CACHE_MAGIC);
        buf.push(CACHE_VERSION);
        buf.push(self.n as u8);
        buf.push(convention.code());
        buf.push(match self.pivot {
            Pivot::Smallest => 0,
            Pivot::Largest => 1,
        });
        buf.extend_from_slice(&(self.pool.len() as u32).to_le_bytes());
        for p in &self.pool {
            buf.push(p.coeffs().len() as u8);
            for c in p.coeffs() {
                buf.extend_from_slice(&c.to_le_bytes());
            }
        }
        for id in &self.ids {
            buf.extend_from_slice(&id.to_le_bytes());
        }
        let mut file = std::fs::File::create(path).map_err(io)?;
        file.write_all(&buf).map_err(io)
    }

    /// Reads a cache written by [`KlTable::save`]; the header must match
    /// `n` and `convention`.
    pub fn load(path: &Path, n: usize, convention: DescentConvention) -> Result<KlTable> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let mut bytes = Vec::new();
        std::fs::File::open(path).map_err(io)?.read_to_end(&mut bytes).map_err(io)?;
        let mut r = Reader { bytes: &bytes, at: 0 };
        if r.take(5)? != CACHE_MAGIC {
            return Err(Error::Cache("not a KL cache file".into()));
        }
        let header = r.take(4)?;
        if header[0] != CACHE_VERSION {
            return Err(Error::Cache(format!("unsupported cache version {}", header[0])));
        }
        if header[1] as usize != n || header[2] != convention.code() {
            return Err(Error::Cache(format!(
                "cache holds n = {} with convention code {}, wanted n = {n} ({convention})",
                header[1], header[2]
            )));
        }
        let pivot = if header[3] == 0 { Pivot::Smallest } else { Pivot::Largest };
        let mut t = KlTable::skeleton(n, pivot)?;
        let pool_len = r.u32()? as usize;
        t.pool = (0..pool_len)
            .map(|_| {
                let len = r.take(1)?[0] as usize;
                (0..len).map(|_| r.i64()).collect::<Result<Vec<_>>>().map(QPolynomial::new)
            })
            .collect::<Result<_>>()?;
        for id in t.ids.iter_mut() {
            *id = r.u32()?;
            if *id as usize >= pool_len {
                return Err(Error::Cache("polynomial id out of range".into()));
            }
        }
        if r.at != bytes.len() {
            return Err(Error::Cache("trailing bytes in cache".into()));
        }
        for w in 0..t.perms.len() {
            t.mu[w] = t.compute_mu_list(w);
        }
        Ok(t)
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Reader<'_> {
    fn take(&mut self, k: usize) -> Result<&[u8]> {
        let out = self
            .bytes
            .get(self.at..self.at + k)
            .ok_or_else(|| Error::Cache("truncated cache".into()))?;
        self.at += k;
        Ok(out)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn i64(&mut self) -> Result<i64> {
        Ok(i64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }
}

/// Generating pairs `(u, w)` (table indices) of the opposite right preorder:
/// `μ̄(u,w)` or `μ̄(w,u)` nonzero and some descent of `w` is not one of `u`.
pub fn kl_preorder_edges(table: &KlTable, convention: DescentConvention) -> Vec<(usize, usize)> {
    let des: Vec<DescentSet> = table.perms.iter().map(|u| convention.descents(u)).collect();
    let mut edges = Vec::new();
    for (z, w, _) in table.mu_pairs() {
        if !des[w].difference(&des[z]).is_empty() {
            edges.push((z, w));
        }
        if !des[z].difference(&des[w]).is_empty() {
            edges.push((w, z));
        }
    }
    edges.sort_unstable();
    edges
}

/// Strongly connected components of the preorder, each sorted, listed by
/// smallest member.
pub fn kl_cells(table: &KlTable, convention: DescentConvention) -> Vec<Vec<usize>> {
    let mut graph = DiGraph::<(), ()>::with_capacity(table.perms.len(), 0);
    let nodes: Vec<_> = (0..table.perms.len()).map(|_| graph.add_node(())).collect();
    for (u, w) in kl_preorder_edges(table, convention) {
        graph.add_edge(nodes[u], nodes[w], ());
    }
    let mut cells: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cells.sort();
    cells
}

/// True iff every cell is exactly one Knuth class.
pub fn cells_match_knuth_classes(table: &KlTable, convention: DescentConvention) -> bool {
    let p: Vec<Tableau> = table.perms.iter().map(|u| insertion_tableau(u.word())).collect();
    let cells = kl_cells(table, convention);
    let class_count = enumerate_syt(table.n).len();
    cells.len() == class_count && cells.iter().all(|c| c.iter().all(|&u| p[u] == p[c[0]]))
}

/// The KL order on `SYT_n`: tableaux in [`enumerate_syt`] order, labelled by
/// their text form.
pub fn kl_order_on_tableaux(
    table: &KlTable,
    convention: DescentConvention,
) -> Result<(Vec<Tableau>, Poset)> {
    if !cells_match_knuth_classes(table, convention) {
        return Err(Error::CellMismatch(table.n));
    }
    let tableaux = enumerate_syt(table.n);
    let index: HashMap<&Tableau, usize> = tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let class_of: Vec<usize> = table
        .perms
        .iter()
        .map(|u| index[&insertion_tableau(u.word())])
        .collect();
    let mut pairs: Vec<(usize, usize)> = kl_preorder_edges(table, convention)
        .into_iter()
        .map(|(u, w)| (class_of[u], class_of[w]))
        .filter(|(a, b)| a != b)
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let labels = tableaux.iter().map(|t| t.to_string()).collect();
    let poset = Poset::from_indexed(labels, &pairs)?;
    Ok((tableaux, poset))
}

/// The convention whose cells are the Knuth classes, right preferred; decided
/// once on `S_4`.
pub fn auto_convention() -> Result<DescentConvention> {
    static CHOSEN: OnceLock<Option<DescentConvention>> = OnceLock::new();
    let chosen = CHOSEN.get_or_init(|| {
        let table = KlTable::new(4).ok()?;
        [DescentConvention::Right, DescentConvention::Left]
            .into_iter()
            .find(|&c| cells_match_knuth_classes(&table, c))
    });
    chosen.ok_or(Error::CellMismatch(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::bruhat_leq;
    use crate::rsk::knuth_class;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(c: &[i64]) -> QPolynomial {
        QPolynomial::new(c.to_vec())
    }

    /// KL polynomials from R-polynomials:
    /// `q^{l(x,w)} P_{x,w}(1/q) - P_{x,w}(q) = Σ_{x<y<=w} R_{x,y} P_{y,w}`,
    /// and the degree bound singles out `P_{x,w}` as minus the low part of the sum.
    struct Oracle {
        perms: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
        r: Vec<Vec<QPolynomial>>,
    }

    impl Oracle {
        fn new(n: usize) -> Oracle {
            let mut perms: Vec<Permutation> = Permutation::all(n).collect();
            perms.sort_by_key(|u| u.length());
            let index: HashMap<Permutation, usize> =
                perms.iter().enumerate().map(|(i, u)| (u.clone(), i)).collect();
            let size = perms.len();
            let mut r = vec![vec![QPolynomial::zero(); size]; size];
            r[0][0] = QPolynomial::one();
            let q_minus_1 = poly(&[-1, 1]);
            let q = poly(&[0, 1]);
            for w in 1..size {
                let s = (1..n).find(|&i| perms[w].descents_left().contains(i)).unwrap();
                let v = index[&perms[w].left_mul_simple(s)];
                for x in 0..size {
                    let sx = index[&perms[x].left_mul_simple(s)];
                    r[x][w] = if perms[x].descents_left().contains(s) {
                        r[sx][v].clone()
                    } else {
                        &(&q_minus_1 * &r[x][v]) + &(&q * &r[sx][v])
                    };
                }
            }
            Oracle { perms, index, r }
        }

        /// `P_{x,w}` for every `x`, filled from the top of the interval down.
        fn column(&self, w: usize) -> Vec<QPolynomial> {
            let lw = self.perms[w].length();
            let mut col = vec![QPolynomial::zero(); self.perms.len()];
            col[w] = QPolynomial::one();
            for x in (0..w).rev() {
                if self.r[x][w].is_zero() {
                    continue;
                }
                let mut sum = QPolynomial::zero();
                for y in x + 1..=w {
                    if !self.r[x][y].is_zero() && !col[y].is_zero() {
                        sum = &sum + &(&self.r[x][y] * &col[y]);
                    }
                }
                let l = lw - self.perms[x].length();
                col[x] = -&sum.truncate((l - 1) / 2);
            }
            col
        }
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = poly(&[1, 1]);
        assert_eq!(&a * &a, poly(&[1, 2, 1]));
        assert_eq!(&a - &a, QPolynomial::zero());
        assert_eq!(a.shift(2), poly(&[0, 0, 1, 1]));
        assert_eq!(poly(&[1, 0, -2]).to_string(), "1 - 2q^2");
        assert_eq!(poly(&[0, 1]).to_string(), "q");
        assert_eq!(poly(&[1, 2, 1]).eval(2), 9);
        assert_eq!(poly(&[1, 0, 0]).degree(), Some(0));
    }

    #[test]
    fn matches_r_polynomial_oracle_on_s4() {
        let table = KlTable::new(4).unwrap();
        let oracle = Oracle::new(4);
        for (w, v) in oracle.perms.iter().enumerate() {
            let col = oracle.column(w);
            for (x, u) in oracle.perms.iter().enumerate() {
                assert_eq!(table.poly(u, v).unwrap(), col[x], "P_{{{u},{v}}}");
            }
        }
    }

    #[test]
    fn singular_examples_in_s4() {
        let table = KlTable::new(4).unwrap();
        let oracle = Oracle::new(4);
        let via = |a: &str, b: &str| oracle.column(oracle.index[&p(b)])[oracle.index[&p(a)]].clone();
        assert_eq!(table.poly(&p("1234"), &p("3412")).unwrap(), poly(&[1, 1]));
        assert_eq!(table.poly(&p("1324"), &p("3412")).unwrap(), poly(&[1, 1]));
        assert_eq!(table.poly(&p("1234"), &p("4231")).unwrap(), poly(&[1, 1]));
        assert_eq!(table.poly(&p("2143"), &p("4231")).unwrap(), poly(&[1, 1]));
        assert_eq!(table.poly(&p("1324"), &p("4231")).unwrap(), via("1324", "4231"));
        assert_eq!(table.poly(&p("1324"), &p("4231")).unwrap(), QPolynomial::one());
        assert_eq!(table.mu_bar(&p("1324"), &p("3412")).unwrap(), 1);
        assert_eq!(table.mu_bar(&p("1234"), &p("3412")).unwrap(), 0);
        assert_eq!(table.mu_bar(&p("3412"), &p("1324")).unwrap(), 0);
    }

    #[test]
    fn matches_r_polynomial_oracle_on_s5_sample() {
        let table = KlTable::new(5).unwrap();
        let oracle = Oracle::new(5);
        let w0 = oracle.index[&Permutation::longest(5)];
        let tops = [w0, oracle.index[&p("45312")], oracle.index[&p("35142")], oracle.index[&p("52341")]];
        for &w in &tops {
            let col = oracle.column(w);
            for (x, u) in oracle.perms.iter().enumerate() {
                assert_eq!(table.poly(u, &oracle.perms[w]).unwrap(), col[x]);
            }
        }
    }

    #[test]
    fn basic_properties_on_s5() {
        let table = KlTable::new(5).unwrap();
        let perms = table.perms().to_vec();
        for (x, u) in perms.iter().enumerate() {
            for (w, v) in perms.iter().enumerate() {
                let pol = table.poly_idx(x, w);
                let le = bruhat_leq(u, v).unwrap();
                assert_eq!(table.bruhat_leq_idx(x, w), le);
                if !le {
                    assert!(pol.is_zero());
                    continue;
                }
                assert_eq!(pol.coeff(0), 1);
                let l = table.length_of(w) - table.length_of(x);
                if x == w {
                    assert_eq!(*pol, QPolynomial::one());
                } else {
                    assert!(2 * pol.degree().unwrap() < l.max(1));
                    if l == 1 {
                        assert_eq!(*pol, QPolynomial::one());
                        assert_eq!(table.mu_bar_idx(x, w), 1);
                    }
                }
                if l % 2 == 0 {
                    assert_eq!(table.mu_bar_idx(x, w), 0);
                }
            }
        }
    }

    #[test]
    fn pivot_independence_on_s5() {
        let a = KlTable::with_pivot(5, Pivot::Smallest).unwrap();
        let b = KlTable::with_pivot(5, Pivot::Largest).unwrap();
        for x in 0..a.perms().len() {
            for w in 0..a.perms().len() {
                assert_eq!(a.poly_idx(x, w), b.poly_idx(x, w));
            }
        }
    }

    #[test]
    fn cells_are_knuth_classes_for_right_convention() {
        for n in 1..=6 {
            let table = KlTable::new(n).unwrap();
            assert!(cells_match_knuth_classes(&table, DescentConvention::Right), "n = {n}");
        }
        assert_eq!(auto_convention().unwrap(), DescentConvention::Right);
    }

    #[test]
    fn left_convention_gives_other_cells() {
        let table = KlTable::new(4).unwrap();
        assert!(!cells_match_knuth_classes(&table, DescentConvention::Left));
        assert_eq!(
            kl_order_on_tableaux(&table, DescentConvention::Left).unwrap_err(),
            Error::CellMismatch(4)
        );
    }

    #[test]
    fn n3_cells_and_edges() {
        let table = KlTable::new(3).unwrap();
        let cells = kl_cells(&table, DescentConvention::Right);
        assert_eq!(cells.len(), 4);
        for x in enumerate_syt(3) {
            let class: Vec<usize> = knuth_class(&x).iter().map(|u| table.index_of(u)).collect();
            let mut class = class;
            class.sort_unstable();
            assert!(cells.contains(&class));
        }
        let two = KlTable::new(2).unwrap();
        let edges = kl_preorder_edges(&two, DescentConvention::Right);
        assert_eq!(edges, vec![(0, 1)]);
    }

    #[test]
    fn order_is_bounded_by_row_and_column() {
        for n in 1..=5 {
            let table = KlTable::new(n).unwrap();
            let (tableaux, poset) = kl_order_on_tableaux(&table, DescentConvention::Right).unwrap();
            let (b, t) = poset.bounds().unwrap();
            assert_eq!(tableaux[b], Tableau::single_row(n));
            assert_eq!(tableaux[t], Tableau::single_column(n));
        }
    }

    #[test]
    fn cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("syt-kl-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("s4.kl");
        let table = KlTable::new(4).unwrap();
        table.save(&path, DescentConvention::Right).unwrap();
        let back = KlTable::load(&path, 4, DescentConvention::Right).unwrap();
        for x in 0..24 {
            for w in 0..24 {
                assert_eq!(table.poly_idx(x, w), back.poly_idx(x, w));
            }
        }
        assert!(matches!(KlTable::load(&path, 5, DescentConvention::Right), Err(Error::Cache(_))));
        assert!(matches!(KlTable::load(&path, 4, DescentConvention::Left), Err(Error::Cache(_))));
        std::fs::write(&path, b"junk").unwrap();
        assert!(matches!(KlTable::load(&path, 4, DescentConvention::Right), Err(Error::Cache(_))));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn size_limit() {
        assert!(matches!(KlTable::new(8), Err(Error::LimitExceeded(_))));
    }
}
