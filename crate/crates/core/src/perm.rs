//! The symmetric group in one-line notation: inversion and descent sets,
//! weak and Bruhat orders, shuffles and the longest-element symmetries.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `n` whose left inversion set fits the 64-bit mask.
pub const MAX_N: usize = 11;

/// A subset of `[n-1]`, bit `i` standing for `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DescentSet(pub u32);

impl DescentSet {
    pub fn from_iter<I: IntoIterator<Item = usize>>(items: I) -> DescentSet {
        DescentSet(items.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// `{1, .., n-1}`.
    pub fn full(n: usize) -> DescentSet {
        DescentSet::from_iter(1..n)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(&self, other: &DescentSet) -> DescentSet {
        DescentSet(self.0 & !other.0)
    }

    pub fn union(&self, other: &DescentSet) -> DescentSet {
        DescentSet(self.0 | other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Left inversion set `{(i, j) : i < j, u^{-1}(i) > u^{-1}(j)}` as a bit mask
/// over value pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct InversionSet(pub u64);

impl InversionSet {
    /// Bit index of the value pair `(i, j)`, `1 <= i < j`.
    pub fn bit(i: usize, j: usize) -> u32 {
        ((j - 1) * (j - 2) / 2 + (i - 1)) as u32
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0 & (1 << Self::bit(i, j)) != 0
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }
}

/// Which side of `u` the longest element `w0` multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `w0 u`: values reversed.
    Left,
    /// `u w0`: positions reversed.
    Right,
    /// `w0 u w0`.
    Both,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Permutation> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("{word:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n as u8).collect())
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Permutation {
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.0
    }

    pub fn into_word(self) -> Vec<u8> {
        self.0
    }

    /// `u(i)` for 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u8 + 1;
        }
        Permutation(inv)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        self.inversions_left().len()
    }

    pub fn inversions_left(&self) -> InversionSet {
        let pos = self.inverse();
        let mut mask = 0u64;
        for j in 2..=self.n() {
            for i in 1..j {
                if pos.at(i) > pos.at(j) {
                    mask |= 1 << InversionSet::bit(i, j);
                }
            }
        }
        InversionSet(mask)
    }

    /// Left inversion pairs `(i, j)` listed explicitly.
    pub fn inversion_pairs(&self) -> Vec<(usize, usize)> {
        let inv = self.inversions_left();
        (2..=self.n())
            .flat_map(|j| (1..j).map(move |i| (i, j)))
            .filter(|&(i, j)| inv.contains(i, j))
            .collect()
    }

    /// `Des_L(u) = {i : u^{-1}(i) > u^{-1}(i+1)}`.
    pub fn descents_left(&self) -> DescentSet {
        let pos = self.inverse();
        DescentSet::from_iter((1..self.n()).filter(|&i| pos.at(i) > pos.at(i + 1)))
    }

    /// `Des_R(u) = {i : u(i) > u(i+1)}`.
    pub fn descents_right(&self) -> DescentSet {
        DescentSet::from_iter((1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)))
    }

    /// `s_i u`: exchanges the values `i` and `i+1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        )
    }

    /// `u s_i`: exchanges the positions `i` and `i+1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn apply_w0(&self, side: Side) -> Permutation {
        let n = self.n() as u8;
        match side {
            Side::Left => Permutation(self.0.iter().map(|&x| n + 1 - x).collect()),
            Side::Right => Permutation(self.0.iter().rev().copied().collect()),
            Side::Both => Permutation(self.0.iter().rev().map(|&x| n + 1 - x).collect()),
        }
    }

    /// `st(u_{[i,j]})`: the letters of `[i, j]` in order, lowered by `i - 1`.
    pub fn restrict_standardize_word(&self, i: usize, j: usize) -> Result<Permutation> {
        if i < 1 || i > j || j > self.n() {
            return Err(Error::BadRange(i, j, self.n()));
        }
        Ok(Permutation(
            self.0
                .iter()
                .filter(|&&x| (i..=j).contains(&(x as usize)))
                .map(|&x| x - (i as u8 - 1))
                .collect(),
        ))
    }

    /// Rank in lexicographic order of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let mut rank = 0;
        for (k, &x) in self.0.iter().enumerate() {
            let smaller_later = self.0[k + 1..].iter().filter(|&&y| y < x).count();
            rank = rank * (n - k) + smaller_later;
        }
        rank
    }

    /// Every permutation of `S_n` in lexicographic order, generated lazily.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_to_string(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Permutation> {
        Permutation::new(parse_word(s)?)
    }
}

/// Text form of a word: digits run together when every letter is below 10,
/// otherwise comma separated.
pub fn word_to_string(word: &[u8]) -> String {
    if word.iter().all(|&x| x < 10) {
        word.iter().map(|x| x.to_string()).collect()
    } else {
        word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    let bad = |t: &str| Error::Parse(format!("bad letter {t:?} in word {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad(t)))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(&c.to_string())))
            .collect()
    }
}

/// Lexicographic stream over `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.0.clone();
        let n = w.len();
        if n >= 2 {
            if let Some(k) = (0..n - 1).rev().find(|&k| w[k] < w[k + 1]) {
                let l = (k + 1..n).rev().find(|&l| w[k] < w[l]).expect("successor exists");
                w.swap(k, l);
                w[k + 1..].reverse();
                self.next = Some(Permutation(w));
            }
        }
        Some(current)
    }
}

/// `u <=_weak w` iff `Inv_L(u) ⊆ Inv_L(w)`.
pub fn weak_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    Ok(u.inversions_left().is_subset(&w.inversions_left()))
}

/// Bruhat order by the sorted-prefix criterion: for every `j`, the sorted
/// first `j` letters of `u` are entrywise at most those of `w`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(u.n(), w.n()));
    }
    let n = u.n();
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for j in 0..n {
        insert_sorted(&mut a, u.0[j]);
        insert_sorted(&mut b, w.0[j]);
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let at = v.partition_point(|&y| y < x);
    v.insert(at, x);
}

/// All right weak covers `(u, u s_i)` with `u(i) < u(i+1)`.
pub fn weak_covers(n: usize) -> impl Iterator<Item = (Permutation, Permutation)> {
    Permutation::all(n).flat_map(move |u| {
        (1..n)
            .filter(|&i| u.at(i) < u.at(i + 1))
            .map(|i| (u.clone(), u.right_mul_simple(i)))
            .collect::<Vec<_>>()
    })
}

/// Weak-order maximum of `{σ : Des_L(σ) = d}`.
///
/// Passing to inverses turns the class into a right-descent class; its
/// maximum is the value reversal of the minimum of the complementary class,
/// and that minimum fills the maximal decreasing runs with consecutive values.
pub fn descent_class_max(d: DescentSet, n: usize) -> Permutation {
    let complement = DescentSet::full(n).difference(&d);
    let mut word = Vec::with_capacity(n);
    let mut start = 1;
    while start <= n {
        let mut end = start;
        while end < n && complement.contains(end) {
            end += 1;
        }
        word.extend((start..=end).rev().map(|v| v as u8));
        start = end + 1;
    }
    Permutation(word).apply_w0(Side::Left).inverse()
}

/// Every interleaving of `u` and `v` preserving both orders.
pub fn shuffles(u: &[u8], v: &[u8]) -> Result<Vec<Vec<u8>>> {
    if let Some(&x) = u.iter().find(|x| v.contains(x)) {
        return Err(Error::AlphabetOverlap(x));
    }
    fn rec(u: &[u8], v: &[u8], prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if u.is_empty() && v.is_empty() {
            out.push(prefix.clone());
            return;
        }
        if let Some((&x, rest)) = u.split_first() {
            prefix.push(x);
            rec(rest, v, prefix, out);
            prefix.pop();
        }
        if let Some((&y, rest)) = v.split_first() {
            prefix.push(y);
            rec(u, rest, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(u, v, &mut Vec::with_capacity(u.len() + v.len()), &mut out);
    Ok(out)
}
