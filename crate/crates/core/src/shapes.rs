//! Integer partitions, dominance order and shape containment.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition is
/// allowed and stands for the empty inner shape of a straight tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{parts:?} is not a weakly decreasing sequence of positive parts"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// True iff all parts are equal (a single row counts, as does the empty shape).
    pub fn is_rectangular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// True iff `mu` fits inside `self` part by part.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Rows where a cell can be added keeping a partition shape.
    pub fn outer_corners(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r) < self.part(r - 1))
            .collect()
    }

    /// Rows whose last cell can be removed keeping a partition shape.
    pub fn inner_corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    pub fn with_cell_added(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition(parts)
    }

    pub fn with_cell_removed(&self, row: usize) -> Partition {
        let mut parts = self.0.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition(parts)
    }

    fn prefix_sums(&self, len: usize) -> impl Iterator<Item = usize> + '_ {
        (0..len).scan(0, move |acc, i| {
            *acc += self.part(i);
            Some(*acc)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `lambda <=_dom^op mu`: every prefix sum of `lambda` is at least the
/// matching prefix sum of `mu`.
pub fn dominance_leq_op(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let len = lambda.len().max(mu.len());
    Ok(lambda
        .prefix_sums(len)
        .zip(mu.prefix_sums(len))
        .all(|(a, b)| a >= b))
}

/// All partitions of `n` in ascending lexicographic order of their parts.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Size (in elements) of the longest chain of `(Par_n, <=_dom)`, by
/// exhaustive longest-path search over strict dominance.
pub fn longest_dominance_chain(n: usize) -> usize {
    let parts = enumerate_partitions(n);
    let strictly_below = |a: &Partition, b: &Partition| {
        a != b && dominance_leq_op(b, a).expect("same size")
    };
    let mut memo: Vec<Option<usize>> = vec![None; parts.len()];
    fn longest_from(
        i: usize,
        parts: &[Partition],
        below: &dyn Fn(&Partition, &Partition) -> bool,
        memo: &mut Vec<Option<usize>>,
    ) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut best = 1;
        for j in 0..parts.len() {
            if below(&parts[i], &parts[j]) {
                best = best.max(1 + longest_from(j, parts, below, memo));
            }
        }
        memo[i] = Some(best);
        best
    }
    (0..parts.len())
        .map(|i| longest_from(i, &parts, &strictly_below, &mut memo))
        .max()
        .unwrap_or(0)
}
