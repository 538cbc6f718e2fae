//! Finite carriers and bitmask subsets over them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest carrier the bitmask representation can hold.
pub const MAX_CARRIER: usize = 64;

/// An ordered list of distinct element names.
///
/// Elements are addressed by their index in the list everywhere in the
/// crate; names only matter for parsing and rendering. Cloning is cheap.
#[derive(Clone)]
pub struct Carrier {
    names: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidCarrier("carrier must be non-empty".into()));
        }
        if names.len() > MAX_CARRIER {
            return Err(Error::BoundExceeded {
                what: "carrier size",
                size: names.len(),
                bound: MAX_CARRIER,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidCarrier(format!("duplicate element {name:?}")));
            }
        }
        Ok(Self {
            names: names.into(),
            index: Arc::new(index),
        })
    }

    /// Carrier named `0..n`.
    pub fn range(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Fails with a domain error unless `s` only uses indices of this carrier.
    pub fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset(self.full()) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "subset {s:?} leaves a carrier of size {}",
                self.len()
            )))
        }
    }

    pub fn render(&self, s: Subset) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// A subset of a carrier as a bitmask over element indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_CARRIER);
        if n == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest index in the subset.
    pub fn min(self) -> Option<usize> {
        (!self.is_empty()).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

/// Ascending iterator over the indices of a [`Subset`].
#[derive(Clone)]
pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}
