//! Named families of finite sets: the single points `β_i`, the odd and even
//! staircases `δ_k`, and the sets `A_n`, `B_n`, `C_n` built from a
//! super-increasing [`SumSequence`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::power_monoid::NatSet;

/// Positive integers `a_1, ..., a_{n+1}` (with `n >= 2`) satisfying
///
/// * (C1) `a_{n+1} = a_1 + ... + a_{n-1} + 2·a_n`;
/// * (C2) `a_{i+1} > 2·(a_1 + ... + a_i)` for every `i` in `[1, n-1]`.
///
/// Indices in this API are 1-based, matching the usual `a_I` notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SumSequence {
    terms: Vec<u64>,
}

impl SumSequence {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.len() < 3 {
            return Err(Error::domain(format!(
                "a sequence needs n+1 >= 3 terms, got {}",
                terms.len()
            )));
        }
        if terms.contains(&0) {
            return Err(Error::domain("sequence terms must be positive"));
        }
        let n = terms.len() - 1;
        let mut prefix: u64 = 0;
        for i in 0..n - 1 {
            prefix = prefix.checked_add(terms[i]).ok_or(Error::Overflow("sequence prefix"))?;
            let bound = prefix.checked_mul(2).ok_or(Error::Overflow("sequence prefix"))?;
            if terms[i + 1] <= bound {
                return Err(Error::domain(format!(
                    "growth condition fails at i={}: {} <= 2·{}",
                    i + 1,
                    terms[i + 1],
                    prefix
                )));
            }
        }
        // prefix = a_1 + ... + a_{n-1}
        let closing = terms[n - 1]
            .checked_mul(2)
            .and_then(|x| x.checked_add(prefix))
            .ok_or(Error::Overflow("closing term"))?;
        if terms[n] != closing {
            return Err(Error::domain(format!(
                "closing condition fails: a_{{n+1}} = {} but a_1+...+a_{{n-1}}+2a_n = {}",
                terms[n], closing
            )));
        }
        Ok(SumSequence { terms })
    }

    /// The smallest witness: `a_1 = 1`, `a_{i+1} = 2·(a_1+...+a_i) + 1`, and
    /// `a_{n+1}` forced by the closing condition.
    pub fn minimal(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::domain(format!("minimal sequence needs n >= 2, got {n}")));
        }
        let overflow = || Error::Overflow("minimal sequence");
        let mut terms = vec![1u64];
        let mut prefix = 1u64;
        for _ in 1..n {
            let next = prefix.checked_mul(2).and_then(|x| x.checked_add(1)).ok_or_else(overflow)?;
            terms.push(next);
            prefix = prefix.checked_add(next).ok_or_else(overflow)?;
        }
        let a_n = terms[n - 1];
        let closing = (prefix - a_n)
            .checked_add(a_n.checked_mul(2).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
        terms.push(closing);
        SumSequence::new(terms)
    }

    /// The parameter `n` (one less than the number of terms).
    pub fn n(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// `a_i` for a 1-based index.
    pub fn term(&self, i: usize) -> Result<u64> {
        if i == 0 || i > self.terms.len() {
            return Err(Error::domain(format!("index {i} outside [1, {}]", self.terms.len())));
        }
        Ok(self.terms[i - 1])
    }

    /// `a_I` for a set of 1-based indices; `a_∅ = 0`.
    pub fn subset_sum(&self, indices: &[usize]) -> Result<u64> {
        let mut seen = 0u64;
        let mut total = 0u64;
        for &i in indices {
            let a = self.term(i)?;
            let bit = 1u64 << (i - 1);
            if seen & bit != 0 {
                return Err(Error::domain(format!("index {i} repeated")));
            }
            seen |= bit;
            total = total.checked_add(a).ok_or(Error::Overflow("subset sum"))?;
        }
        Ok(total)
    }

    /// `a_I` where bit `i-1` of `mask` selects index `i`.
    pub fn subset_sum_mask(&self, mask: u64) -> Result<u64> {
        let len = self.terms.len();
        if len < 64 && mask >> len != 0 {
            return Err(Error::domain(format!("mask {mask:#b} selects indices beyond {len}")));
        }
        let mut total = 0u64;
        for (i, &a) in self.terms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                total = total.checked_add(a).ok_or(Error::Overflow("subset sum"))?;
            }
        }
        Ok(total)
    }

    /// All subset sums over the indices selected by `range_mask`.
    fn subset_sums_within(&self, range_mask: u64) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        let mut sub = range_mask;
        loop {
            out.push(self.subset_sum_mask(sub)?);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & range_mask;
        }
        Ok(out)
    }
}

impl TryFrom<Vec<u64>> for SumSequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        SumSequence::new(v)
    }
}

impl From<SumSequence> for Vec<u64> {
    fn from(s: SumSequence) -> Self {
        s.terms
    }
}

impl fmt::Display for SumSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SumSequence {
    type Err = Error;

    /// Accepts `1,3,7` or the JSON form `[1,3,7]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let terms = inner
            .split(',')
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<u64>().map_err(|_| Error::parse(format!("bad term {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        SumSequence::new(terms)
    }
}

fn mask_upto(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// `A_n = {a_I : I ⊆ [1, n-1]}`.
pub fn build_a(seq: &SumSequence) -> Result<NatSet> {
    NatSet::new(seq.subset_sums_within(mask_upto(seq.n() - 1))?)
}

/// `B_n = A_n ∪ {a_[1,n]} ∪ (A_n + a_{n+1})`.
pub fn build_b(seq: &SumSequence) -> Result<NatSet> {
    let n = seq.n();
    let a_n = build_a(seq)?;
    let top = seq.subset_sum_mask(mask_upto(n))?;
    let last = seq.term(n + 1)?;
    let shifted = a_n.shift(last)?;
    let mut v = a_n.elements().to_vec();
    v.push(top);
    v.extend_from_slice(shifted.elements());
    let b = NatSet::new(v)?;
    debug_assert_eq!(b.len(), (1usize << n) + 1);
    Ok(b)
}

/// `C_n = {a_I : I ⊆ [1, n+1]}`; fails if two subsets share a sum.
pub fn build_c(seq: &SumSequence) -> Result<NatSet> {
    let n = seq.n();
    let sums = seq.subset_sums_within(mask_upto(n + 1))?;
    let count = sums.len();
    let c = NatSet::new(sums)?;
    if c.len() != count {
        return Err(Error::domain(format!(
            "subset sums of {seq} are not distinct ({} of {count})",
            c.len()
        )));
    }
    Ok(c)
}

/// `β_i = {i}`.
pub fn build_beta(i: u64) -> Result<NatSet> {
    if i < 1 {
        return Err(Error::domain("beta needs i >= 1"));
    }
    Ok(NatSet::singleton(i))
}

/// `δ_{2i+1} = {1, 3, ..., 2i+1}`.
pub fn build_delta_odd(i: u64) -> Result<NatSet> {
    if i < 1 {
        return Err(Error::domain("odd delta needs i >= 1"));
    }
    let v = (0..=i)
        .map(|j| j.checked_mul(2).and_then(|x| x.checked_add(1)))
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Overflow("odd delta"))?;
    NatSet::new(v)
}

/// `δ_{2i} = {1, 2, 4, ..., 2i}`.
///
/// `{0} ∪ δ_{2i}` gives the even staircase ideal, which is an atom of the full
/// ideal monoid only for `i >= 3`; the set itself is defined for `i >= 1`.
pub fn build_delta_even(i: u64) -> Result<NatSet> {
    if i < 1 {
        return Err(Error::domain("even delta needs i >= 1"));
    }
    let mut v = vec![1];
    for j in 1..=i {
        v.push(j.checked_mul(2).ok_or(Error::Overflow("even delta"))?);
    }
    NatSet::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> NatSet {
        NatSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn minimal_sequences() {
        assert_eq!(SumSequence::minimal(2).unwrap().terms(), &[1, 3, 7]);
        assert_eq!(SumSequence::minimal(3).unwrap().terms(), &[1, 3, 9, 22]);
        assert_eq!(SumSequence::minimal(4).unwrap().terms(), &[1, 3, 9, 27, 67]);
        assert!(SumSequence::minimal(1).is_err());
        assert!(matches!(SumSequence::minimal(80), Err(Error::Overflow(_))));
    }

    #[test]
    fn validation_is_strict() {
        // a_2 = 2·a_1 violates the strict growth bound
        assert!(SumSequence::new(vec![1, 2, 5]).is_err());
        // off-by-one closing term
        assert!(SumSequence::new(vec![1, 3, 8]).is_err());
        assert!(SumSequence::new(vec![1, 3]).is_err());
        assert!(SumSequence::new(vec![0, 3, 6]).is_err());
        assert!(SumSequence::new(vec![2, 5, 12]).is_ok());
        assert!(SumSequence::new(vec![1, 4, 11, 27]).is_ok());
    }

    #[test]
    fn subset_sums() {
        let seq = SumSequence::minimal(2).unwrap();
        assert_eq!(seq.subset_sum(&[]).unwrap(), 0);
        assert_eq!(seq.subset_sum(&[1, 2]).unwrap(), 4);
        assert_eq!(seq.subset_sum(&[1, 2, 3]).unwrap(), 11);
        assert!(matches!(seq.subset_sum(&[4]), Err(Error::Domain(_))));
        assert!(matches!(seq.subset_sum(&[0]), Err(Error::Domain(_))));
        assert!(matches!(seq.subset_sum(&[1, 1]), Err(Error::Domain(_))));
        assert_eq!(seq.subset_sum_mask(0b101).unwrap(), 8);
        assert!(seq.subset_sum_mask(0b1000).is_err());
    }

    #[test]
    fn family_sets() {
        let seq2 = SumSequence::minimal(2).unwrap();
        assert_eq!(build_a(&seq2).unwrap(), s(&[0, 1]));
        assert_eq!(build_b(&seq2).unwrap(), s(&[0, 1, 4, 7, 8]));
        assert_eq!(build_c(&seq2).unwrap(), s(&[0, 1, 3, 4, 7, 8, 10, 11]));
        let seq3 = SumSequence::minimal(3).unwrap();
        assert_eq!(build_b(&seq3).unwrap(), s(&[0, 1, 3, 4, 13, 22, 23, 25, 26]));
    }

    #[test]
    fn family_sizes_and_even_maximum() {
        for n in 2..=6 {
            let seq = SumSequence::minimal(n).unwrap();
            let b = build_b(&seq).unwrap();
            assert_eq!(b.len(), (1 << n) + 1);
            let half = seq.subset_sum_mask(mask_upto(n)).unwrap();
            assert_eq!(b.max_element(), 2 * half);
            assert_eq!(b.max_element() % 2, 0);
            assert_eq!(build_c(&seq).unwrap().len(), 1 << (n + 1));
        }
    }

    #[test]
    fn point_and_staircase_sets() {
        assert_eq!(build_beta(4).unwrap(), s(&[4]));
        assert_eq!(build_delta_odd(2).unwrap(), s(&[1, 3, 5]));
        assert_eq!(build_delta_even(2).unwrap(), s(&[1, 2, 4]));
        assert!(build_beta(0).is_err());
        assert!(build_delta_odd(0).is_err());
        assert!(build_delta_even(0).is_err());
    }

    #[test]
    fn sequence_text_forms() {
        let seq: SumSequence = "1,3,9,22".parse().unwrap();
        assert_eq!(seq, SumSequence::minimal(3).unwrap());
        assert_eq!("[1, 3, 7]".parse::<SumSequence>().unwrap().n(), 2);
        assert_eq!(serde_json::to_string(&seq).unwrap(), "[1,3,9,22]");
        assert!(serde_json::from_str::<SumSequence>("[1,3,8]").is_err());
    }
}
