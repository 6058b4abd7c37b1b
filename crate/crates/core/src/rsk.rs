//! Row-insertion RSK, Knuth moves and Knuth classes.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableau::Tableau;

/// Insertion and recording tableaux of a word with distinct letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RskPair {
    pub p: Tableau,
    pub q: Tableau,
}

/// Row-inserts `x`, returning the row where a new cell was created.
fn row_insert(rows: &mut Vec<Vec<u8>>, mut x: u8) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let at = row.partition_point(|&y| y < x);
        if at == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[at], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

pub fn rsk(word: &[u8]) -> Result<RskPair> {
    let mut seen = HashSet::new();
    if let Some(&x) = word.iter().find(|&&x| !seen.insert(x)) {
        return Err(Error::RepeatedLetter(x));
    }
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u8>> = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(k as u8 + 1);
    }
    Ok(RskPair {
        p: Tableau::from_rows(p)?,
        q: Tableau::from_rows(q)?,
    })
}

/// `P(word)` for a word with distinct letters.
pub fn insertion_tableau(word: &[u8]) -> Tableau {
    let mut p: Vec<Vec<u8>> = Vec::new();
    for &x in word {
        row_insert(&mut p, x);
    }
    Tableau::from_rows(p).expect("insertion of distinct letters is standard")
}

/// `t^{↓i}`: row-inserts a letter missing from `t`.
pub fn insert_letter(t: &Tableau, i: u8) -> Result<Tableau> {
    if t.entries().contains(&i) {
        return Err(Error::AlphabetError(i));
    }
    let mut rows = t.rows().to_vec();
    row_insert(&mut rows, i);
    Tableau::from_rows(rows)
}

/// Words one elementary Knuth move away: in a window `a b c`, swap `b, c`
/// when `a` lies between them, or `a, b` when `c` lies between them.
pub fn knuth_neighbors(word: &[u8]) -> BTreeSet<Vec<u8>> {
    let between = |x: u8, lo: u8, hi: u8| lo.min(hi) < x && x < lo.max(hi);
    let mut out = BTreeSet::new();
    for k in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[k], word[k + 1], word[k + 2]);
        if between(a, b, c) {
            let mut w = word.to_vec();
            w.swap(k + 1, k + 2);
            out.insert(w);
        }
        if between(c, a, b) {
            let mut w = word.to_vec();
            w.swap(k, k + 1);
            out.insert(w);
        }
    }
    out
}

/// `C_T = {u : P(u) = t}` by BFS over Knuth moves from the reading word, sorted.
pub fn knuth_class(t: &Tableau) -> Vec<Permutation> {
    let start = t.reading_word();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for v in knuth_neighbors(&w) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut class: Vec<Permutation> = seen
        .into_iter()
        .map(|w| Permutation::new(w).expect("standard tableau"))
        .collect();
    class.sort();
    class
}
