//! Sets of factorization lengths and the invariants derived from them.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of factorization lengths, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LengthSet(BTreeSet<u64>);

impl LengthSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(l: u64) -> Self {
        Self(BTreeSet::from([l]))
    }

    pub fn insert(&mut self, l: u64) -> bool {
        self.0.insert(l)
    }

    pub fn extend(&mut self, other: &LengthSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn contains(&self, l: u64) -> bool {
        self.0.contains(&l)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.0.iter().copied().collect()
    }

    /// `{x + y : x ∈ self, y ∈ other}`.
    pub fn sumset(&self, other: &LengthSet) -> LengthSet {
        let mut out = LengthSet::new();
        for x in self.iter() {
            for y in other.iter() {
                out.insert(x + y);
            }
        }
        out
    }

    pub fn delta_set(&self) -> Result<BTreeSet<u64>> {
        delta_set(self)
    }

    pub fn elasticity(&self) -> Result<Elasticity> {
        elasticity(self)
    }
}

impl FromIterator<u64> for LengthSet {
    fn from_iter<T: IntoIterator<Item = u64>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u64; N]> for LengthSet {
    fn from(v: [u64; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Ratio `max L / min L`; infinite when `min L = 0 < max L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elasticity {
    Finite(Ratio<u64>),
    Infinite,
}

impl fmt::Display for Elasticity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elasticity::Finite(r) => write!(f, "{r}"),
            Elasticity::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Elasticity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Gaps between consecutive lengths.
pub fn delta_set(lengths: &LengthSet) -> Result<BTreeSet<u64>> {
    if lengths.is_empty() {
        return Err(Error::domain("delta set of an empty length set"));
    }
    let v = lengths.to_vec();
    Ok(v.windows(2).map(|w| w[1] - w[0]).collect())
}

/// `max L / min L`, with `ρ({0}) = 1`.
pub fn elasticity(lengths: &LengthSet) -> Result<Elasticity> {
    let (lo, hi) = match (lengths.min(), lengths.max()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::domain("elasticity of an empty length set")),
    };
    Ok(match (lo, hi) {
        (0, 0) => Elasticity::Finite(Ratio::from_integer(1)),
        (0, _) => Elasticity::Infinite,
        _ => Elasticity::Finite(Ratio::new(hi, lo)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_and_rho_of_small_sets() {
        let l = LengthSet::from([2, 3]);
        assert_eq!(delta_set(&l).unwrap(), BTreeSet::from([1]));
        assert_eq!(elasticity(&l).unwrap(), Elasticity::Finite(Ratio::new(3, 2)));

        let l = LengthSet::from([2, 5]);
        assert_eq!(delta_set(&l).unwrap(), BTreeSet::from([3]));
        assert_eq!(elasticity(&l).unwrap().to_string(), "5/2");
    }

    #[test]
    fn rho_of_zero_is_one() {
        let l = LengthSet::singleton(0);
        assert_eq!(elasticity(&l).unwrap().to_string(), "1");
        assert!(delta_set(&l).unwrap().is_empty());
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(delta_set(&LengthSet::new()), Err(Error::Domain(_))));
        assert!(matches!(elasticity(&LengthSet::new()), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_with_positive_lengths_is_infinite() {
        assert_eq!(elasticity(&LengthSet::from([0, 3])).unwrap(), Elasticity::Infinite);
    }
}
