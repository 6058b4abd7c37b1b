//! Standard and skew-standard Young tableaux.
//!
//! A tableau stores its inner shape and, for each row, the entries to the
//! right of the inner cells. Entries are distinct positive letters; most
//! operations expect them to be exactly `1..=n`.

use std::cmp::Reverse;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::DescentSet;
use crate::rsk;
use crate::shapes::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    inner: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Tableau> {
        Tableau::skew(Partition::empty(), rows)
    }

    /// Skew tableau: `rows[r]` lists the entries right of the inner cells of row `r`.
    pub fn skew(inner: Partition, mut rows: Vec<Vec<u8>>) -> Result<Tableau> {
        while rows.len() > inner.len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(rows.len().max(inner.len()), Vec::new());
        let t = Tableau { inner, rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidTableau(format!("{self}: {why}")));
        let outer: Vec<usize> = (0..self.rows.len()).map(|r| self.row_end(r)).collect();
        if outer.windows(2).any(|w| w[0] < w[1]) {
            return bad("row lengths increase");
        }
        for r in 0..self.rows.len() {
            if self.rows[r].windows(2).any(|w| w[0] >= w[1]) {
                return bad("row not increasing");
            }
            if r > 0 && self.rows[r].is_empty() && self.inner.part(r) == 0 {
                return bad("empty row");
            }
        }
        let mut seen = HashSet::new();
        for (r, c, v) in self.cells() {
            if v == 0 || !seen.insert(v) {
                return bad("entries must be distinct positive letters");
            }
            if r > 0 {
                if let Some(above) = self.get(r - 1, c) {
                    if above >= v {
                        return bad("column not increasing");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of entries.
    pub fn n(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn row_end(&self, r: usize) -> usize {
        self.inner.part(r) + self.rows[r].len()
    }

    /// The outer shape `λ`.
    pub fn shape(&self) -> Partition {
        Partition::new((0..self.rows.len()).map(|r| self.row_end(r)).collect())
            .expect("validated")
    }

    /// Entry at `(row, col)` when that cell lies in the skew part.
    pub fn get(&self, r: usize, c: usize) -> Option<u8> {
        let start = self.inner.part(r);
        self.rows.get(r)?.get(c.checked_sub(start)?).copied()
    }

    /// `(row, col, entry)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let start = self.inner.part(r);
            row.iter().enumerate().map(move |(k, &v)| (r, start + k, v))
        })
    }

    pub fn entries(&self) -> Vec<u8> {
        let mut e: Vec<u8> = self.cells().map(|(_, _, v)| v).collect();
        e.sort_unstable();
        e
    }

    /// Entries are exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        self.entries().iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn position(&self, v: u8) -> Option<(usize, usize)> {
        self.cells().find(|&(_, _, x)| x == v).map(|(r, c, _)| (r, c))
    }

    pub fn row_of(&self, v: u8) -> Option<usize> {
        self.position(v).map(|(r, _)| r)
    }

    /// Bottom row first, left to right.
    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// `{i : i+1 sits in a lower row than i}` over consecutive letters present.
    pub fn descent_set(&self) -> DescentSet {
        let mut row = vec![usize::MAX; 256];
        for (r, _, v) in self.cells() {
            row[v as usize] = r;
        }
        DescentSet::from_iter(
            (1..255).filter(|&i| row[i] != usize::MAX && row[i + 1] != usize::MAX && row[i + 1] > row[i]),
        )
    }

    /// Order-preserving relabelling onto `1..=n`.
    pub fn standardize(&self) -> Tableau {
        let sorted = self.entries();
        let rank = |v: u8| sorted.binary_search(&v).expect("present") as u8 + 1;
        Tableau {
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|row| row.iter().map(|&v| rank(v)).collect()).collect(),
        }
    }

    /// `T_{[i,j]}`: the cells holding letters in `[i, j]`, as a skew tableau.
    /// For a straight standard tableau the inner shape is that of `T_{[1,i-1]}`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<Tableau> {
        let n = self.n();
        if i < 1 || i > j || j > n {
            return Err(Error::BadRange(i, j, n));
        }
        let inside = |v: u8| (i..=j).contains(&(v as usize));
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for r in 0..self.rows.len() {
            let start = self.inner.part(r);
            let lead = self.rows[r].iter().take_while(|&&v| (v as usize) < i).count();
            inner.push(start + lead);
            rows.push(self.rows[r].iter().copied().filter(|&v| inside(v)).collect::<Vec<_>>());
        }
        Tableau::skew(Partition::new(inner)?, rows)
    }

    /// `st(T_{[i,j]})` through RSK of the restricted reading word.
    pub fn restrict_standardize(&self, i: usize, j: usize) -> Result<Tableau> {
        let n = self.n();
        if i < 1 || i > j || j > n {
            return Err(Error::BadRange(i, j, n));
        }
        let word: Vec<u8> = self
            .reading_word()
            .into_iter()
            .filter(|&v| (i..=j).contains(&(v as usize)))
            .map(|v| v - (i as u8 - 1))
            .collect();
        Ok(rsk::insertion_tableau(&word))
    }

    /// `st(T_{[i,j]})` by jeu-de-taquin rectification.
    pub fn restrict_standardize_jdt(&self, i: usize, j: usize) -> Result<Tableau> {
        Ok(self.restrict(i, j)?.rectify().standardize())
    }

    /// Jeu-de-taquin rectification to a straight shape.
    pub fn rectify(&self) -> Tableau {
        let mut grid = self.grid();
        let mut inner = self.inner.clone();
        while let Some(&r) = inner.inner_corners().last() {
            let c = inner.part(r) - 1;
            inner = inner.with_cell_removed(r);
            slide(&mut grid, r, c);
        }
        from_grid(grid)
    }

    fn grid(&self) -> Vec<Vec<Option<u8>>> {
        (0..self.rows.len())
            .map(|r| {
                let mut row = vec![None; self.inner.part(r)];
                row.extend(self.rows[r].iter().map(|&v| Some(v)));
                row
            })
            .collect()
    }

    pub fn transpose(&self) -> Tableau {
        assert!(self.is_straight(), "transpose needs a straight shape");
        let cols = self.rows.first().map_or(0, Vec::len);
        let rows = (0..cols)
            .map(|c| self.rows.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect())
            .collect();
        Tableau { inner: Partition::empty(), rows }
    }

    /// Schützenberger evacuation of a straight standard tableau.
    pub fn evacuate(&self) -> Tableau {
        assert!(self.is_straight(), "evacuation needs a straight shape");
        let n = self.n();
        let mut out: Vec<Vec<u8>> = self.rows.iter().map(|row| vec![0; row.len()]).collect();
        let mut grid = self.grid();
        for k in 0..n {
            let (r, c) = slide(&mut grid, 0, 0);
            out[r][c] = (n - k) as u8;
        }
        Tableau { inner: Partition::empty(), rows: out }
    }

    /// Exchanges two letters in place; the caller guarantees the result is standard.
    fn swap_letters(&self, a: u8, b: u8) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| if v == a { b } else if v == b { a } else { v })
                    .collect()
            })
            .collect();
        Tableau { inner: self.inner.clone(), rows }
    }

    /// Dual Knuth move at `i`, defined when exactly one of `i`, `i+1` is a descent.
    pub fn dual_knuth_move(&self, i: usize) -> Result<Tableau> {
        let des = self.descent_set();
        let (a, b, c) = (i as u8, i as u8 + 1, i as u8 + 2);
        let rows = (self.row_of(a), self.row_of(b), self.row_of(c));
        let (Some(ri), Some(rj), Some(rk)) = rows else {
            return Err(Error::NotApplicable(i));
        };
        match (des.contains(i), des.contains(i + 1)) {
            (false, true) => {
                if rk > ri && ri >= rj {
                    Ok(self.swap_letters(c, b))
                } else if ri >= rk && rk > rj {
                    Ok(self.swap_letters(a, b))
                } else {
                    Err(Error::NotApplicable(i))
                }
            }
            (true, false) => {
                if rj > ri && ri >= rk {
                    Ok(self.swap_letters(c, b))
                } else if rj >= rk && rk > ri {
                    Ok(self.swap_letters(a, b))
                } else {
                    Err(Error::NotApplicable(i))
                }
            }
            _ => Err(Error::NotApplicable(i)),
        }
    }

    /// Every tableau one dual Knuth move away.
    pub fn dual_knuth_neighbors(&self) -> Vec<Tableau> {
        let n = self.n();
        (1..n.saturating_sub(1))
            .filter_map(|i| self.dual_knuth_move(i).ok())
            .collect()
    }

    /// `Ω₁`: appends `n+1` to the first row.
    pub fn extend_row(&self) -> Tableau {
        let mut rows = self.rows.clone();
        let next = self.n() as u8 + 1;
        match rows.first_mut() {
            Some(row) => row.push(next),
            None => rows.push(vec![next]),
        }
        Tableau { inner: self.inner.clone(), rows }
    }

    /// `Ω₂`: appends `n+1` below the first column.
    pub fn extend_col(&self) -> Tableau {
        assert!(self.is_straight(), "column extension needs a straight shape");
        let mut rows = self.rows.clone();
        rows.push(vec![self.n() as u8 + 1]);
        Tableau { inner: self.inner.clone(), rows }
    }

    /// Adds `shift` to every entry.
    pub fn shifted(&self, shift: u8) -> Tableau {
        Tableau {
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|v| v + shift).collect()).collect(),
        }
    }

    /// Straight tableau with `self` in its inner cells and `outer` (a skew
    /// tableau with inner shape `sh(self)`) around it.
    pub fn fill_inner(&self, outer: &Tableau) -> Result<Tableau> {
        if outer.inner != self.shape() {
            return Err(Error::InvalidTableau(format!(
                "inner shape {} of {outer} does not match {self}",
                outer.inner
            )));
        }
        let len = self.rows.len().max(outer.rows.len());
        let rows = (0..len)
            .map(|r| {
                let mut row = self.rows.get(r).cloned().unwrap_or_default();
                row.extend(outer.rows.get(r).into_iter().flatten());
                row
            })
            .collect();
        Tableau::from_rows(rows)
    }

    /// The cells of a straight tableau holding letters above `k`, with inner
    /// shape `sh(T_{[1,k]})`, relabelled to start at 1.
    pub fn outer_part(&self, k: usize) -> Result<Tableau> {
        let n = self.n();
        if k >= n {
            let inner = self.shape();
            let rows = vec![Vec::new(); inner.len()];
            return Tableau::skew(inner, rows);
        }
        let t = self.restrict(k + 1, n)?;
        Ok(t.shifted_down(k as u8))
    }

    fn shifted_down(&self, shift: u8) -> Tableau {
        Tableau {
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|v| v - shift).collect()).collect(),
        }
    }

    /// Single-row tableau on `1..=n`.
    pub fn single_row(n: usize) -> Tableau {
        Tableau { inner: Partition::empty(), rows: vec![(1..=n as u8).collect()] }
    }

    /// Single-column tableau on `1..=n`.
    pub fn single_column(n: usize) -> Tableau {
        Tableau {
            inner: Partition::empty(),
            rows: (1..=n as u8).map(|v| vec![v]).collect(),
        }
    }

    /// Row-superstandard filling of `shape`.
    pub fn superstandard(shape: &Partition) -> Tableau {
        let mut next = 0u8;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row = (next + 1..=next + len as u8).collect();
                next += len as u8;
                row
            })
            .collect();
        Tableau { inner: Partition::empty(), rows }
    }
}

/// Slides the hole at `(r, c)` outwards and removes the cell where it ends.
/// Returns that cell.
fn slide(grid: &mut Vec<Vec<Option<u8>>>, mut r: usize, mut c: usize) -> (usize, usize) {
    grid[r][c] = None;
    loop {
        let right = grid[r].get(c + 1).copied().flatten();
        let below = grid.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
        let (nr, nc) = match (right, below) {
            (None, None) => break,
            (Some(x), Some(y)) if y < x => (r + 1, c),
            (Some(_), _) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
        };
        grid[r][c] = grid[nr][nc].take();
        r = nr;
        c = nc;
    }
    grid[r].pop();
    while grid.last().is_some_and(|row| row.is_empty()) {
        grid.pop();
    }
    (r, c)
}

fn from_grid(grid: Vec<Vec<Option<u8>>>) -> Tableau {
    Tableau {
        inner: Partition::empty(),
        rows: grid
            .into_iter()
            .map(|row| row.into_iter().map(|v| v.expect("rectified")).collect())
            .collect(),
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows.len())
            .map(|r| {
                let mut cells: Vec<String> = vec![".".to_string(); self.inner.part(r)];
                cells.extend(self.rows[r].iter().map(|v| v.to_string()));
                cells.join(" ")
            })
            .collect();
        f.write_str(&rows.join("|"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `|`, entries by spaces, inner cells written `.`.
    fn from_str(s: &str) -> Result<Tableau> {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        if !s.trim().is_empty() {
            for row in s.split('|') {
                let mut dots = 0;
                let mut entries = Vec::new();
                for tok in row.split_whitespace() {
                    if tok == "." {
                        if !entries.is_empty() {
                            return Err(Error::Parse(format!("inner cell after entries in {s:?}")));
                        }
                        dots += 1;
                    } else {
                        entries.push(
                            tok.parse::<u8>()
                                .map_err(|_| Error::Parse(format!("bad entry {tok:?} in {s:?}")))?,
                        );
                    }
                }
                inner.push(dots);
                rows.push(entries);
            }
        }
        Tableau::skew(Partition::new(inner)?, rows)
    }
}

/// All straight standard tableaux with `n` cells: shapes in decreasing
/// lexicographic order, then tableaux by rows.
pub fn enumerate_syt(n: usize) -> Vec<Tableau> {
    let mut out = enumerate_skew_syt(&Partition::empty(), n);
    out.sort_by(|a, b| (Reverse(a.shape()), &a.rows).cmp(&(Reverse(b.shape()), &b.rows)));
    out
}

/// All standard tableaux of the given straight shape.
pub fn enumerate_syt_of_shape(shape: &Partition) -> Vec<Tableau> {
    enumerate_syt(shape.size())
        .into_iter()
        .filter(|t| t.shape() == *shape)
        .collect()
}

/// All skew standard tableaux on `1..=n` with inner shape `mu`.
pub fn enumerate_skew_syt(mu: &Partition, n: usize) -> Vec<Tableau> {
    fn grow(t: &Tableau, next: u8, n: u8, out: &mut Vec<Tableau>) {
        if next > n {
            out.push(t.clone());
            return;
        }
        for r in t.shape().outer_corners() {
            let mut rows = t.rows.clone();
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(next);
            let child = Tableau { inner: t.inner.clone(), rows };
            grow(&child, next + 1, n, out);
        }
    }
    let start = Tableau { inner: mu.clone(), rows: vec![Vec::new(); mu.len()] };
    let mut out = Vec::new();
    grow(&start, 1, n as u8, &mut out);
    out.sort();
    out
}

/// BFS over dual Knuth moves.
pub fn dual_knuth_equivalent(s: &Tableau, t: &Tableau) -> bool {
    if s.n() != t.n() {
        return false;
    }
    let mut seen = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(x) = queue.pop_front() {
        if x == *t {
            return true;
        }
        for y in x.dual_knuth_neighbors() {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{Permutation, Side};
    use crate::rsk::insertion_tableau;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    /// Recursive count by removing the largest entry from an inner corner.
    fn count_syt(shape: &Partition) -> usize {
        if shape.is_empty() {
            return 1;
        }
        shape
            .inner_corners()
            .into_iter()
            .map(|r| count_syt(&shape.with_cell_removed(r)))
            .sum()
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in ["1 2 5|3 4", "1", ". . 1|. 2|3", ". .|. .|1 2"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert!("1 2|2".parse::<Tableau>().is_err());
        assert!("2 1".parse::<Tableau>().is_err());
        assert!("1|2 3".parse::<Tableau>().is_err());
        assert!("1 3|2 4|5 6".parse::<Tableau>().is_ok());
        assert!("2 3|1 4".parse::<Tableau>().is_err());
    }

    #[test]
    fn syt_counts() {
        assert_eq!(enumerate_syt(1).len(), 1);
        assert_eq!(enumerate_syt(4).len(), 10);
        assert_eq!(enumerate_syt(5).len(), 26);
        for n in 1..=8 {
            let expected: usize = crate::shapes::enumerate_partitions(n)
                .iter()
                .map(count_syt)
                .sum();
            let all = enumerate_syt(n);
            assert_eq!(all.len(), expected);
            assert!(all.iter().all(|t| t.is_standard() && t.is_straight()));
        }
        assert_eq!(enumerate_syt(8).len(), 764);
    }

    #[test]
    fn skew_enumeration() {
        assert_eq!(enumerate_skew_syt(&Partition::empty(), 4).len(), 10);
        let one: Partition = "1".parse().unwrap();
        let got: Vec<String> = enumerate_skew_syt(&one, 1).iter().map(|t| t.to_string()).collect();
        assert_eq!(got, vec![".|1", ". 1"]);
        let square: Partition = "2,2".parse().unwrap();
        // 1 right of the square leaves three corners for 2; 1 below leaves three more.
        assert_eq!(enumerate_skew_syt(&square, 2).len(), 6);
    }

    #[test]
    fn descent_examples() {
        assert!(Tableau::single_row(5).descent_set().is_empty());
        assert_eq!(Tableau::single_column(5).descent_set(), DescentSet::full(5));
        assert_eq!(t("1 3 6|2 4|5").descent_set(), DescentSet::from_iter([1, 3, 4]));
        assert_eq!(t(". 1|2").descent_set(), DescentSet::from_iter([1]));
    }

    #[test]
    fn restriction_examples() {
        let x = t("1 3 6|2 4|5");
        assert_eq!(x.restrict_standardize(1, 6).unwrap(), x);
        assert_eq!(x.restrict_standardize(3, 3).unwrap(), Tableau::single_row(1));
        assert_eq!(x.restrict_standardize(4, 6).unwrap().shape(), "2,1".parse().unwrap());
        assert_eq!(x.restrict_standardize_jdt(4, 6).unwrap().shape(), "2,1".parse().unwrap());
        assert_eq!(x.restrict(4, 6).unwrap().to_string(), ". . 6|. 4|5");
        assert_eq!(x.restrict_standardize(0, 2), Err(Error::BadRange(0, 2, 6)));
        assert_eq!(x.restrict_standardize(2, 7), Err(Error::BadRange(2, 7, 6)));
    }

    #[test]
    fn jdt_agrees_with_rsk_route() {
        for n in 1..=6 {
            for x in enumerate_syt(n) {
                for i in 1..=n {
                    for j in i..=n {
                        assert_eq!(
                            x.restrict_standardize(i, j).unwrap(),
                            x.restrict_standardize_jdt(i, j).unwrap(),
                            "{x} [{i},{j}]"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rectify_matches_insertion_of_reading_word() {
        for mu in ["1", "2,1", "2,2", "3,1"] {
            let mu: Partition = mu.parse().unwrap();
            for s in enumerate_skew_syt(&mu, 3) {
                assert_eq!(s.rectify(), insertion_tableau(&s.reading_word()));
            }
        }
    }

    #[test]
    fn reading_word_inserts_to_itself() {
        for n in 1..=6 {
            for x in enumerate_syt(n) {
                assert_eq!(insertion_tableau(&x.reading_word()), x);
            }
        }
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Tableau::single_row(4).transpose(), Tableau::single_column(4));
        assert_eq!(t("1 2|3").transpose(), t("1 3|2"));
        for x in enumerate_syt(6) {
            assert_eq!(x.transpose().transpose(), x);
            assert_eq!(x.transpose().descent_set(), DescentSet::full(6).difference(&x.descent_set()));
        }
    }

    #[test]
    fn evacuation_examples() {
        assert_eq!(Tableau::single_row(4).evacuate(), Tableau::single_row(4));
        assert_eq!(t("1 2|3").evacuate(), t("1 3|2"));
        for x in enumerate_syt(6) {
            assert_eq!(x.evacuate().evacuate(), x);
            assert_eq!(x.evacuate().shape(), x.shape());
        }
    }

    #[test]
    fn w0_symmetries_under_insertion() {
        for u in Permutation::all(5) {
            let p = insertion_tableau(u.word());
            assert_eq!(insertion_tableau(u.apply_w0(Side::Right).word()), p.transpose());
            assert_eq!(insertion_tableau(u.apply_w0(Side::Both).word()), p.evacuate());
        }
    }

    #[test]
    fn dual_knuth_examples() {
        assert_eq!(t("1 3|2").dual_knuth_move(1).unwrap(), t("1 2|3"));
        assert_eq!(t("1 2 3").dual_knuth_move(1), Err(Error::NotApplicable(1)));
        for x in enumerate_syt(6) {
            for i in 1..=4 {
                if let Ok(y) = x.dual_knuth_move(i) {
                    assert_eq!(y.shape(), x.shape());
                    assert!(y.is_standard());
                    assert_eq!(y.dual_knuth_move(i).unwrap(), x);
                    let (dx, dy) = (x.descent_set(), y.descent_set());
                    assert_eq!(dx.contains(i), dy.contains(i + 1));
                    assert_eq!(dx.contains(i + 1), dy.contains(i));
                }
            }
        }
    }

    #[test]
    fn dual_knuth_classes_are_shapes() {
        assert!(dual_knuth_equivalent(&t("1 3|2"), &t("1 3|2")));
        assert!(dual_knuth_equivalent(&t("1 3|2"), &t("1 2|3")));
        assert!(!dual_knuth_equivalent(&t("1 2 3"), &t("1 3|2")));
        for n in 1..=6 {
            let all = enumerate_syt(n);
            for s in &all {
                for x in &all {
                    assert_eq!(dual_knuth_equivalent(s, x), s.shape() == x.shape());
                }
            }
        }
    }

    #[test]
    fn extension_maps() {
        assert_eq!(Tableau::single_row(3).extend_row(), Tableau::single_row(4));
        assert_eq!(Tableau::single_column(3).extend_col(), Tableau::single_column(4));
        for x in enumerate_syt(5) {
            assert_eq!(x.transpose().extend_row().transpose(), x.extend_col());
        }
    }

    #[test]
    fn descents_split_over_overlapping_segments() {
        for n in 3..=7 {
            for x in enumerate_syt(n) {
                let left = x.restrict_standardize(1, n - 1).unwrap().descent_set();
                let right = x.restrict_standardize(2, n).unwrap().descent_set();
                let shifted = DescentSet(right.0 << 1);
                assert_eq!(x.descent_set(), left.union(&shifted));
            }
        }
    }

    #[test]
    fn fill_and_split() {
        let x = t("1 3 6|2 4|5");
        let r = x.restrict(1, 3).unwrap();
        let outer = x.outer_part(3).unwrap();
        assert_eq!(outer.to_string(), ". . 3|. 1|2");
        assert_eq!(r.fill_inner(&outer.shifted(3)).unwrap(), x);
        assert_eq!(Tableau::superstandard(&"2,1".parse().unwrap()), t("1 2|3"));
    }
}
