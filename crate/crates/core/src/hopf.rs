//! The product of plactic classes and its interval description.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::orders::TableauPoset;
use crate::perm::shuffles;
use crate::rsk::{insertion_tableau, knuth_class};
use crate::tableau::Tableau;

fn straight(t: &Tableau) -> Result<()> {
    if t.is_straight() && t.is_standard() {
        Ok(())
    } else {
        Err(Error::InvalidTableau(format!("{t} is not a standard straight tableau")))
    }
}

/// `T/S`: row `i` of `T` followed by row `i` of `S` shifted by `|T|`.
pub fn slash(t: &Tableau, s: &Tableau) -> Result<Tableau> {
    straight(t)?;
    straight(s)?;
    let shifted = s.shifted(t.n() as u8);
    let len = t.rows().len().max(shifted.rows().len());
    let rows = (0..len)
        .map(|r| {
            let mut row = t.rows().get(r).cloned().unwrap_or_default();
            row.extend(shifted.rows().get(r).into_iter().flatten());
            row
        })
        .collect();
    Tableau::from_rows(rows)
}

/// `T\S`: column `j` of `T` followed by column `j` of `S` shifted by `|T|`.
pub fn backslash(t: &Tableau, s: &Tableau) -> Result<Tableau> {
    Ok(slash(&t.transpose(), &s.transpose())?.transpose())
}

/// Formal sum of tableaux with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableauSum(BTreeMap<Tableau, u64>);

impl TableauSum {
    pub fn single(t: Tableau) -> TableauSum {
        TableauSum(BTreeMap::from([(t, 1)]))
    }

    pub fn add(&mut self, t: Tableau, mult: u64) {
        if mult > 0 {
            *self.0.entry(t).or_default() += mult;
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, t: &Tableau) -> u64 {
        self.0.get(t).copied().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.0.values().all(|&m| m == 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, u64)> {
        self.0.iter().map(|(t, &m)| (t, m))
    }

    pub fn tableaux(&self) -> Vec<Tableau> {
        self.0.keys().cloned().collect()
    }

    /// Bilinear extension of [`pr_product`].
    pub fn multiply(&self, other: &TableauSum) -> Result<TableauSum> {
        let mut out = TableauSum::default();
        for (a, ma) in self.iter() {
            for (b, mb) in other.iter() {
                for (c, mc) in pr_product(a, b)?.iter() {
                    out.add(c.clone(), ma * mb * mc);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TableauSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (k, (t, m)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "[{t}]")?;
        }
        Ok(())
    }
}

/// Insertion tableaux of the shuffles `shf(u, w̄)` for `u` in `C_T`, `w`
/// in `C_S`, counted per word.
pub fn pr_product_words(t: &Tableau, s: &Tableau) -> Result<BTreeMap<Tableau, usize>> {
    straight(t)?;
    straight(s)?;
    let k = t.n() as u8;
    let left = knuth_class(t);
    let right: Vec<Vec<u8>> = knuth_class(s)
        .iter()
        .map(|w| w.word().iter().map(|&x| x + k).collect())
        .collect();
    let mut counts = BTreeMap::new();
    for u in &left {
        for w in &right {
            for word in shuffles(u.word(), w)? {
                *counts.entry(insertion_tableau(&word)).or_insert(0) += 1;
            }
        }
    }
    Ok(counts)
}

/// `PC_T * PC_S` as a sum over the distinct insertion tableaux.
pub fn pr_product(t: &Tableau, s: &Tableau) -> Result<TableauSum> {
    let mut sum = TableauSum::default();
    for r in pr_product_words(t, s)?.into_keys() {
        sum.add(r, 1);
    }
    Ok(sum)
}

/// Comparison of a product with the interval `[T/S, T\S]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCheck {
    pub low: Tableau,
    pub high: Tableau,
    pub product: Vec<Tableau>,
    /// In the interval but not in the product.
    pub missing: Vec<Tableau>,
    /// In the product but not in the interval.
    pub extra: Vec<Tableau>,
}

impl ProductCheck {
    pub fn holds(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Compares `pr_product(t, s)` with the interval `[T/S, T\S]` of `tp`.
pub fn verify_product_interval(tp: &TableauPoset, t: &Tableau, s: &Tableau) -> Result<ProductCheck> {
    if t.n() + s.n() != tp.n {
        return Err(Error::SizeMismatch(t.n() + s.n(), tp.n));
    }
    let (low, high) = (slash(t, s)?, backslash(t, s)?);
    let product = pr_product(t, s)?.tableaux();
    let interval: Vec<Tableau> = tp
        .poset()
        .interval_members(tp.idx(&low)?, tp.idx(&high)?)?
        .into_iter()
        .map(|i| tp.tableau(i).clone())
        .collect();
    let missing = interval.iter().filter(|x| product.binary_search(x).is_err()).cloned().collect();
    let extra = product.iter().filter(|x| !interval.contains(x)).cloned().collect();
    Ok(ProductCheck { low, high, product, missing, extra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{order_poset, OrderKind};
    use crate::perm::{weak_leq, Permutation};
    use crate::tableau::enumerate_syt;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn syt_upto(n: usize) -> Vec<Tableau> {
        (1..=n).flat_map(enumerate_syt).collect()
    }

    #[test]
    fn slash_examples() {
        let (a, b) = (t("1 2|3"), t("1|2"));
        assert_eq!(slash(&a, &b).unwrap(), t("1 2 4|3 5"));
        assert_eq!(backslash(&a, &b).unwrap(), t("1 2|3|4|5"));
        let empty = Tableau::from_rows(vec![]).unwrap();
        assert_eq!(slash(&a, &empty).unwrap(), a);
        assert_eq!(backslash(&empty, &a).unwrap(), a);
    }

    #[test]
    fn slash_is_insertion_of_concatenated_words() {
        for a in syt_upto(4) {
            for b in syt_upto(6 - a.n()) {
                let k = a.n() as u8;
                let (low, high) = (slash(&a, &b).unwrap(), backslash(&a, &b).unwrap());
                for u in knuth_class(&a) {
                    for w in knuth_class(&b) {
                        let shifted: Vec<u8> = w.word().iter().map(|&x| x + k).collect();
                        let mut up = u.word().to_vec();
                        up.extend(&shifted);
                        let mut down = shifted.clone();
                        down.extend(u.word());
                        assert_eq!(insertion_tableau(&up), low);
                        assert_eq!(insertion_tableau(&down), high);
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_recovers_factors() {
        for a in syt_upto(5) {
            for b in syt_upto(6 - a.n()) {
                let (k, l) = (a.n(), b.n());
                for x in [slash(&a, &b).unwrap(), backslash(&a, &b).unwrap()] {
                    assert_eq!(x.restrict_standardize(1, k).unwrap(), a);
                    assert_eq!(x.restrict_standardize(k + 1, k + l).unwrap(), b);
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let one = t("1");
        let p = pr_product(&one, &one).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.multiplicity(&t("1 2")) == 1 && p.multiplicity(&t("1|2")) == 1);
        let p = pr_product(&t("1 2|3"), &t("1|2")).unwrap();
        let mut expected = vec![t("1 2 4|3 5"), t("1 2 4|3|5"), t("1 2|3 4|5"), t("1 2|3|4|5")];
        expected.sort();
        assert_eq!(p.tableaux(), expected);
        assert!(p.is_multiplicity_free());
        assert_eq!(p.to_string().matches(" + ").count(), 3);
    }

    #[test]
    fn word_counts_are_whole_classes() {
        for a in syt_upto(3) {
            for b in syt_upto(6 - a.n()) {
                let counts = pr_product_words(&a, &b).unwrap();
                let total: usize = counts.values().sum();
                let (k, l) = (a.n(), b.n());
                let binom = (1..=l).fold(1, |acc, i| acc * (k + i) / i);
                assert_eq!(total, knuth_class(&a).len() * knuth_class(&b).len() * binom);
                for (r, c) in counts {
                    assert_eq!(c, knuth_class(&r).len());
                }
            }
        }
    }

    #[test]
    fn product_is_an_interval() {
        for kind in OrderKind::ALL {
            for n in 2..=6 {
                let tp = order_poset(kind, n).unwrap();
                for a in syt_upto(n - 1) {
                    for b in enumerate_syt(n - a.n()) {
                        let check = verify_product_interval(&tp, &a, &b).unwrap();
                        assert!(check.holds(), "{kind} {a} {b} {check:?}");
                        assert!(tp.leq(&check.low, &check.high).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn shuffles_form_weak_intervals() {
        for n in 2..=6 {
            let all: Vec<Permutation> = Permutation::all(n).collect();
            for k in 1..n {
                for sigma in Permutation::all(k) {
                    for tau in Permutation::all(n - k) {
                        let bar: Vec<u8> = tau.word().iter().map(|&x| x + k as u8).collect();
                        let mut low = sigma.word().to_vec();
                        low.extend(&bar);
                        let mut high = bar.clone();
                        high.extend(sigma.word());
                        let (low, high) = (Permutation::new(low).unwrap(), Permutation::new(high).unwrap());
                        let mut shf: Vec<Vec<u8>> = shuffles(sigma.word(), &bar).unwrap();
                        shf.sort();
                        let interval: Vec<Vec<u8>> = all
                            .iter()
                            .filter(|u| weak_leq(&low, u).unwrap() && weak_leq(u, &high).unwrap())
                            .map(|u| u.word().to_vec())
                            .collect();
                        assert_eq!(shf, interval);
                    }
                }
            }
        }
    }

    #[test]
    fn associativity() {
        let all = syt_upto(4);
        for a in &all {
            for b in all.iter().filter(|b| a.n() + b.n() <= 5) {
                for c in all.iter().filter(|c| a.n() + b.n() + c.n() <= 6) {
                    let (x, y, z) = (
                        TableauSum::single(a.clone()),
                        TableauSum::single(b.clone()),
                        TableauSum::single(c.clone()),
                    );
                    let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
                    let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
                    assert_eq!(left, right, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn rejects_skew_factors() {
        let skew: Tableau = ". 1".parse().unwrap();
        assert!(matches!(slash(&skew, &t("1")), Err(Error::InvalidTableau(_))));
        let tp = order_poset(OrderKind::Weak, 3).unwrap();
        assert_eq!(verify_product_interval(&tp, &t("1"), &t("1")), Err(Error::SizeMismatch(2, 3)));
    }
}
