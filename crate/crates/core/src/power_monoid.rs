//! Finite subsets of ℕ under setwise addition.
//!
//! [`NatSet`] is an element of the finitary power monoid `P_fin(ℕ)`; sets with
//! minimum `0` form the reduced submonoid `P_fin,0(ℕ)`, whose factorization
//! questions are answered by [`ReducedPowerMonoid`] through the generic engine.
//! The non-reduced monoid is reached with [`reduce`]: a set with minimum `s`
//! is its reduced part plus `s` copies of the atom `{1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{CandidateSink, Engine, GradedMonoid, SearchConfig};
use crate::error::{Error, Result};
use crate::lengths::LengthSet;

/// A nonempty finite subset of ℕ, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct NatSet(Vec<u64>);

impl NatSet {
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(Error::domain("a set in the power monoid must be nonempty"));
        }
        v.sort_unstable();
        v.dedup();
        Ok(NatSet(v))
    }

    /// The identity `{0}`.
    pub fn zero() -> Self {
        NatSet(vec![0])
    }

    pub fn singleton(x: u64) -> Self {
        NatSet(vec![x])
    }

    /// `{0} ∪ other`.
    pub fn with_zero(other: &NatSet) -> Self {
        let mut v = Vec::with_capacity(other.len() + 1);
        if other.min_element() != 0 {
            v.push(0);
        }
        v.extend_from_slice(&other.0);
        NatSet(v)
    }

    pub(crate) fn from_sorted(v: Vec<u64>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        NatSet(v)
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min_element(&self) -> u64 {
        self.0[0]
    }

    pub fn max_element(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_reduced(&self) -> bool {
        self.min_element() == 0
    }

    pub fn is_subset(&self, other: &NatSet) -> bool {
        self.0.iter().all(|&x| other.contains(x))
    }

    pub fn shift(&self, s: u64) -> Result<NatSet> {
        self.0
            .iter()
            .map(|&x| x.checked_add(s).ok_or(Error::Overflow("set shift")))
            .collect::<Result<Vec<_>>>()
            .map(NatSet)
    }

    /// Comma-separated text form, e.g. `0,1,4`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        parts.join(",")
    }
}

impl TryFrom<Vec<u64>> for NatSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        NatSet::new(v)
    }
}

impl From<NatSet> for Vec<u64> {
    fn from(s: NatSet) -> Self {
        s.0
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_text())
    }
}

impl FromStr for NatSet {
    type Err = Error;

    /// Accepts `0,1,4`, `{0,1,4}` and the JSON form `[0,1,4]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
            .unwrap_or(t);
        let elements = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| Error::parse(format!("not a natural number: {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if elements.is_empty() {
            return Err(Error::parse(format!("empty set literal: {s:?}")));
        }
        NatSet::new(elements)
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &NatSet, b: &NatSet) -> Result<NatSet> {
    let mut v = Vec::with_capacity(a.len() * b.len());
    for &x in a.elements() {
        for &y in b.elements() {
            v.push(x.checked_add(y).ok_or(Error::Overflow("sumset"))?);
        }
    }
    v.sort_unstable();
    v.dedup();
    Ok(NatSet(v))
}

/// True iff no element of `a` is a sum of two (not necessarily distinct) elements of `a`.
pub fn is_sum_free(a: &NatSet) -> bool {
    let el = a.elements();
    for (i, &x) in el.iter().enumerate() {
        for &y in &el[i..] {
            match x.checked_add(y) {
                Some(s) if s > a.max_element() => break,
                Some(s) if a.contains(s) => return false,
                Some(_) => {}
                None => break,
            }
        }
    }
    true
}

/// `{c ∈ ℕ : B + c ⊆ A}`, or `None` when no shift of `b` fits inside `a`.
pub fn set_colon(a: &NatSet, b: &NatSet) -> Option<NatSet> {
    let lo = b.min_element();
    let v: Vec<u64> = a
        .elements()
        .iter()
        .filter(|&&x| x >= lo)
        .map(|&x| x - lo)
        .filter(|&c| {
            b.elements()
                .iter()
                .all(|&y| y.checked_add(c).is_some_and(|s| a.contains(s)))
        })
        .collect();
    (!v.is_empty()).then_some(NatSet(v))
}

/// Splits `a` into its minimum and the reduced set `a - min(a)`.
pub fn reduce(a: &NatSet) -> (u64, NatSet) {
    let s = a.min_element();
    (s, NatSet(a.elements().iter().map(|&x| x - s).collect()))
}

fn require_reduced(a: &NatSet) -> Result<()> {
    if a.is_reduced() {
        Ok(())
    } else {
        Err(Error::domain(format!("{a} does not contain 0")))
    }
}

/// All unordered pairs `(B, C)` of non-identity sets with `B + C = A`, smaller
/// grade (then lexicographically smaller set) first.
pub fn decompose_reduced(a: &NatSet) -> Result<Vec<(NatSet, NatSet)>> {
    require_reduced(a)?;
    if *a == NatSet::zero() {
        return Ok(Vec::new());
    }
    let engine = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited());
    Ok(engine.split(a)?.as_ref().clone())
}

pub fn is_atom_reduced(a: &NatSet) -> Result<bool> {
    require_reduced(a)?;
    if *a == NatSet::zero() {
        return Ok(false);
    }
    Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited()).is_atom(a)
}

/// The set of factorization lengths of `a` in `P_fin,0(ℕ)`.
pub fn lengths_reduced(a: &NatSet) -> Result<LengthSet> {
    require_reduced(a)?;
    Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited()).lengths(a)
}

/// The reduced power monoid `P_fin,0(ℕ)` graded by the maximum.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReducedPowerMonoid;

impl GradedMonoid for ReducedPowerMonoid {
    type Elem = NatSet;

    fn identity(&self) -> NatSet {
        NatSet::zero()
    }

    fn product(&self, a: &NatSet, b: &NatSet) -> Result<NatSet> {
        sumset(a, b)
    }

    fn colon(&self, whole: &NatSet, part: &NatSet) -> Option<NatSet> {
        set_colon(whole, part)
    }

    fn grade(&self, e: &NatSet) -> u64 {
        e.max_element()
    }

    fn canonical_key(&self, e: &NatSet) -> String {
        e.to_string()
    }

    /// Both factors of a reduced set lie inside it and contain `0`, so the
    /// candidates are 0-containing subsets `B ⊊ A` with `max B < max A`.
    fn candidate_divisors(&self, whole: &NatSet, sink: &mut CandidateSink<'_, NatSet>) -> Result<()> {
        walk_subset_candidates(whole, &mut |b| match b {
            Some(b) => sink.emit(b),
            None => sink.tick(),
        })
    }
}

/// Streams the 0-containing sets `B ⊊ A` with `max B < max A` that survive the
/// covering test below; every summand of a split of the reduced set `A` is
/// among them. `visit` receives `None` for every internal node.
///
/// Walks the elements of `A` in increasing order deciding membership in `B`.
/// An element left out of `B` must already be a sum `b + c` with `b` chosen
/// and `c` in `A : B`, since later elements of `B` are too large to help.
pub(crate) fn walk_subset_candidates(
    whole: &NatSet,
    visit: &mut dyn FnMut(Option<NatSet>) -> Result<()>,
) -> Result<()> {
    if !whole.is_reduced() || whole.len() < 2 {
        return Ok(());
    }
    let mut walk = SubsetWalk {
        whole: whole.elements(),
        chosen: vec![0],
        excluded: Vec::new(),
        visit,
    };
    let cofactors = whole.elements().to_vec();
    walk.descend(1, &cofactors)
}

struct SubsetWalk<'w, 'c> {
    whole: &'w [u64],
    chosen: Vec<u64>,
    excluded: Vec<u64>,
    visit: &'c mut dyn FnMut(Option<NatSet>) -> Result<()>,
}

impl SubsetWalk<'_, '_> {
    fn in_whole(&self, x: u64) -> bool {
        self.whole.binary_search(&x).is_ok()
    }

    fn covered(&self, x: u64, cofactors: &[u64]) -> bool {
        self.chosen
            .iter()
            .take_while(|&&b| b <= x)
            .any(|&b| cofactors.binary_search(&(x - b)).is_ok())
    }

    fn descend(&mut self, idx: usize, cofactors: &[u64]) -> Result<()> {
        (self.visit)(None)?;
        let top = *self.whole.last().unwrap();
        if idx == self.whole.len() {
            if self.chosen.len() > 1 {
                (self.visit)(Some(NatSet::from_sorted(self.chosen.clone())))?;
            }
            return Ok(());
        }
        let x = self.whole[idx];

        if x < top {
            let narrowed: Vec<u64> = cofactors
                .iter()
                .copied()
                .filter(|&c| x.checked_add(c).is_some_and(|s| self.in_whole(s)))
                .collect();
            // The cofactor must be a non-identity set.
            if narrowed.len() > 1 {
                self.chosen.push(x);
                if self.excluded.iter().all(|&y| self.covered(y, &narrowed)) {
                    self.descend(idx + 1, &narrowed)?;
                }
                self.chosen.pop();
            }
        }

        if self.covered(x, cofactors) {
            self.excluded.push(x);
            self.descend(idx + 1, cofactors)?;
            self.excluded.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> NatSet {
        NatSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&s(&[0]), &s(&[0, 3, 7])).unwrap(), s(&[0, 3, 7]));
        assert_eq!(sumset(&s(&[0, 1]), &s(&[0, 1])).unwrap(), s(&[0, 1, 2]));
        // 0+0, 0+3, 2+0, 2+3
        assert_eq!(sumset(&s(&[0, 2]), &s(&[0, 3])).unwrap(), s(&[0, 2, 3, 5]));
    }

    #[test]
    fn sumset_overflow_is_an_error() {
        let big = s(&[0, u64::MAX]);
        assert_eq!(sumset(&big, &s(&[1])), Err(Error::Overflow("sumset")));
    }

    #[test]
    fn sum_free_examples() {
        assert!(is_sum_free(&s(&[1, 3, 5])));
        assert!(!is_sum_free(&s(&[1, 2])));
        assert!(is_sum_free(&s(&[1, 3, 7])));
        assert!(!is_sum_free(&s(&[0, 5])));
    }

    #[test]
    fn colon_examples() {
        assert_eq!(set_colon(&s(&[0, 1, 2]), &s(&[0, 1])), Some(s(&[0, 1])));
        assert_eq!(set_colon(&s(&[0, 2]), &s(&[0, 2])), Some(s(&[0])));
        assert_eq!(set_colon(&s(&[0, 1, 3, 4]), &s(&[0, 1])), Some(s(&[0, 3])));
        assert_eq!(set_colon(&s(&[0, 2]), &s(&[0, 1])), None);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            decompose_reduced(&s(&[0, 1, 2])).unwrap(),
            vec![(s(&[0, 1]), s(&[0, 1]))]
        );
        assert!(decompose_reduced(&s(&[0, 2])).unwrap().is_empty());
        assert!(decompose_reduced(&s(&[0, 1, 2, 4])).unwrap().is_empty());
        assert!(matches!(decompose_reduced(&s(&[1, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn atom_examples() {
        assert!(is_atom_reduced(&s(&[0, 1, 3, 7])).unwrap());
        assert!(!is_atom_reduced(&s(&[0, 1, 2])).unwrap());
        assert!(is_atom_reduced(&s(&[0, 1, 4, 7, 8])).unwrap());
        assert!(!is_atom_reduced(&NatSet::zero()).unwrap());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&s(&[1])), (1, s(&[0])));
        assert_eq!(reduce(&s(&[2, 5])), (2, s(&[0, 3])));
        assert_eq!(reduce(&s(&[3, 4, 6])), (3, s(&[0, 1, 3])));
    }

    #[test]
    fn length_examples() {
        assert_eq!(lengths_reduced(&s(&[0, 2])).unwrap(), LengthSet::from([1]));
        assert_eq!(lengths_reduced(&s(&[0, 1, 2])).unwrap(), LengthSet::from([2]));
        assert_eq!(
            lengths_reduced(&s(&[0, 1, 3, 4, 7, 8, 10, 11])).unwrap(),
            LengthSet::from([2, 3])
        );
        assert_eq!(lengths_reduced(&NatSet::zero()).unwrap(), LengthSet::from([0]));
    }

    #[test]
    fn lengths_of_two_element_sets() {
        for i in 1..=12 {
            assert_eq!(lengths_reduced(&s(&[0, i])).unwrap(), LengthSet::from([1]));
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!("0,1,4".parse::<NatSet>().unwrap(), s(&[0, 1, 4]));
        assert_eq!("{0, 1, 4}".parse::<NatSet>().unwrap(), s(&[0, 1, 4]));
        assert_eq!("[4,1,0]".parse::<NatSet>().unwrap(), s(&[0, 1, 4]));
        assert!("{}".parse::<NatSet>().is_err());
        assert!("0,x".parse::<NatSet>().is_err());
        assert_eq!(serde_json::to_string(&s(&[0, 1, 4, 7, 8])).unwrap(), "[0,1,4,7,8]");
        assert!(serde_json::from_str::<NatSet>("[]").is_err());
    }
}
