use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactpoly::{int, Rational};

/// Finite multiset of rationals. Multiplicities are always at least one;
/// absent values have multiplicity zero. Iteration is in ascending order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootMultiset {
    entries: BTreeMap<Rational, usize>,
}

impl RootMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_values(values: Vec<Rational>) -> Self {
        let mut m = Self::new();
        for v in values {
            m.insert(v, 1);
        }
        m
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_values(values.iter().map(|&v| int(v)).collect())
    }

    pub fn from_pairs<I: IntoIterator<Item = (Rational, usize)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (v, k) in pairs {
            m.insert(v, k);
        }
        m
    }

    pub fn insert(&mut self, value: Rational, count: usize) {
        if count > 0 {
            *self.entries.entry(value).or_insert(0) += count;
        }
    }

    /// Removes one copy of `value`; returns false if it was absent.
    pub fn remove_one(&mut self, value: &Rational) -> bool {
        match self.entries.get_mut(value) {
            None => false,
            Some(k) => {
                *k -= 1;
                if *k == 0 {
                    self.entries.remove(value);
                }
                true
            }
        }
    }

    pub fn multiplicity(&self, value: &Rational) -> usize {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn contains(&self, value: &Rational) -> bool {
        self.entries.contains_key(value)
    }

    /// Cardinality, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct values, ascending.
    pub fn underlying(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, usize)> + '_ {
        self.entries.iter().map(|(v, &k)| (v, k))
    }

    /// Every element repeated according to its multiplicity, ascending.
    pub fn values(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.entries
            .iter()
            .flat_map(|(v, &k)| std::iter::repeat(v).take(k))
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    pub fn is_submultiset_of(&self, other: &RootMultiset) -> bool {
        self.iter().all(|(v, k)| other.multiplicity(v) >= k)
    }

    /// Multiset difference `self \ other`; `other` must be contained in
    /// `self`.
    pub fn difference(&self, other: &RootMultiset) -> Result<RootMultiset> {
        if !other.is_submultiset_of(self) {
            return Err(Error::NotSubmultiset);
        }
        Ok(self.saturating_difference(other))
    }

    /// Multiset difference, dropping multiplicities that would go negative.
    pub fn saturating_difference(&self, other: &RootMultiset) -> RootMultiset {
        RootMultiset::from_pairs(
            self.iter()
                .map(|(v, k)| (v.clone(), k.saturating_sub(other.multiplicity(v)))),
        )
    }

    /// Multiset sum.
    pub fn union(&self, other: &RootMultiset) -> RootMultiset {
        let mut out = self.clone();
        for (v, k) in other.iter() {
            out.insert(v.clone(), k);
        }
        out
    }

    /// Number of elements (with multiplicity) satisfying `pred`.
    pub fn count_where<F: Fn(&Rational) -> bool>(&self, pred: F) -> usize {
        self.iter().filter(|(v, _)| pred(v)).map(|(_, k)| k).sum()
    }

    /// Every element translated by `by`.
    pub fn translate(&self, by: &Rational) -> RootMultiset {
        RootMultiset::from_pairs(self.iter().map(|(v, k)| (v + by, k)))
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.values().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<Rational> for RootMultiset {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RootMultiset::from_values(iter.into_iter().collect())
    }
}
