//! Brute-force reference implementations used to cross-check the engine.
//!
//! Nothing here is clever: splits are found by trying every pair of
//! candidate factors inside the obvious bounding region, with no colon test
//! and no pruning. Only tiny inputs are practical.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lengths::LengthSet;
use crate::monomial_ideal::{ExpPair, MonIdeal};
use crate::power_monoid::NatSet;

fn mask_of(a: &NatSet) -> u64 {
    a.elements().iter().fold(0, |m, &x| m | 1 << x)
}

fn set_of(mask: u64) -> NatSet {
    NatSet::new((0..64).filter(|&i| mask >> i & 1 == 1)).unwrap()
}

fn mask_sumset(b: u64, c: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = b;
    while rest != 0 {
        let i = rest.trailing_zeros();
        out |= c << i;
        rest &= rest - 1;
    }
    out
}

/// Every unordered pair `(B, C)` of 0-containing subsets of `A`, both `≠ {0}`,
/// with `B + C = A`; sorted by `(max B, B, C)` with `max B <= max C` and, on a
/// tie, `B <= C`.
pub fn set_splits(a: &NatSet) -> Result<Vec<(NatSet, NatSet)>> {
    if !a.is_reduced() {
        return Err(Error::domain(format!("{a} does not contain 0")));
    }
    if a.max_element() >= 32 {
        return Err(Error::domain("the set oracle handles maxima below 32 only"));
    }
    let whole = mask_of(a);
    let top = a.max_element();
    // all submasks of `whole` containing bit 0, grouped by their top bit
    let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); top as usize + 1];
    let rest = whole & !1;
    let mut sub = rest;
    loop {
        let m = sub | 1;
        by_max[63 - m.leading_zeros() as usize].push(m);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    let mut out = Vec::new();
    for mb in 1..=top / 2 {
        for &b in &by_max[mb as usize] {
            for &c in &by_max[(top - mb) as usize] {
                if mask_sumset(b, c) != whole {
                    continue;
                }
                let (sb, sc) = (set_of(b), set_of(c));
                if mb * 2 == top && sc < sb {
                    continue;
                }
                out.push((sb, sc));
            }
        }
    }
    out.sort_by(|x, y| (x.0.max_element(), &x.0, &x.1).cmp(&(y.0.max_element(), &y.0, &y.1)));
    Ok(out)
}

/// Sets of lengths in the reduced power monoid from [`set_splits`].
pub fn set_lengths(a: &NatSet) -> Result<LengthSet> {
    fn go(a: &NatSet, memo: &mut HashMap<NatSet, LengthSet>) -> Result<LengthSet> {
        if *a == NatSet::zero() {
            return Ok(LengthSet::singleton(0));
        }
        if let Some(l) = memo.get(a) {
            return Ok(l.clone());
        }
        let splits = set_splits(a)?;
        let mut acc = LengthSet::new();
        if splits.is_empty() {
            acc.insert(1);
        }
        for (b, c) in &splits {
            let lb = go(b, memo)?;
            let lc = go(c, memo)?;
            acc.extend(&lb.sumset(&lc));
        }
        memo.insert(a.clone(), acc.clone());
        Ok(acc)
    }
    go(a, &mut HashMap::new())
}

/// Every nonzero monomial ideal whose minimal generators lie in the box
/// `[0, mx] × [0, my]`, by enumerating nonincreasing profiles.
pub fn ideals_in_box(mx: u64, my: u64) -> Vec<MonIdeal> {
    // profile value my+1 stands for "no monomial in this column"
    fn go(x: u64, mx: u64, cap: u64, none: u64, prof: &mut Vec<u64>, out: &mut Vec<MonIdeal>) {
        if x > mx {
            let gens: Vec<ExpPair> = prof
                .iter()
                .enumerate()
                .filter(|&(_, &h)| h != none)
                .map(|(i, &h)| ExpPair::new(i as u64, h))
                .collect();
            if let Ok(i) = MonIdeal::from_generators(gens) {
                out.push(i);
            }
            return;
        }
        for h in 0..=cap {
            prof.push(h);
            go(x + 1, mx, h, none, prof, out);
            prof.pop();
        }
    }
    let mut out = Vec::new();
    go(0, mx, my + 1, my + 1, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Every unordered pair `(a, b)` of non-unit monomial ideals with `a·b = e`,
/// found by multiplying all pairs of ideals between `e` and `R` in the
/// bounding box of `e`; sorted by `(mdeg a, a, b)` with `mdeg a <= mdeg b` and,
/// on a tie, `a <= b`.
pub fn mon_splits(e: &MonIdeal) -> Result<Vec<(MonIdeal, MonIdeal)>> {
    if e.is_unit() {
        return Err(Error::domain("the unit ideal has no splits"));
    }
    let over: Vec<MonIdeal> = ideals_in_box(e.max_x(), e.max_y())
        .into_iter()
        .filter(|a| !a.is_unit() && a.contains_ideal(e))
        .collect();
    let m = e.mdeg();
    let mut out = Vec::new();
    for a in &over {
        for b in &over {
            let (da, db) = (a.mdeg(), b.mdeg());
            if da + db != m || da > db || (da == db && b < a) {
                continue;
            }
            if a.product(b)? == *e {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out.sort_by(|x, y| (x.0.mdeg(), &x.0, &x.1).cmp(&(y.0.mdeg(), &y.0, &y.1)));
    Ok(out)
}

/// Sets of lengths in `Mon(R)` from [`mon_splits`].
pub fn mon_lengths(e: &MonIdeal) -> Result<LengthSet> {
    fn go(e: &MonIdeal, memo: &mut HashMap<MonIdeal, LengthSet>) -> Result<LengthSet> {
        if e.is_unit() {
            return Ok(LengthSet::singleton(0));
        }
        if let Some(l) = memo.get(e) {
            return Ok(l.clone());
        }
        let splits = mon_splits(e)?;
        let mut acc = LengthSet::new();
        if splits.is_empty() {
            acc.insert(1);
        }
        for (a, b) in &splits {
            let la = go(a, memo)?;
            let lb = go(b, memo)?;
            acc.extend(&la.sumset(&lb));
        }
        memo.insert(e.clone(), acc.clone());
        Ok(acc)
    }
    go(e, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial_ideal::{build_a, build_c};

    fn s(v: &[u64]) -> NatSet {
        NatSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn set_oracle_basics() {
        assert_eq!(set_splits(&s(&[0, 1, 2])).unwrap(), vec![(s(&[0, 1]), s(&[0, 1]))]);
        assert!(set_splits(&s(&[0, 1, 2, 4])).unwrap().is_empty());
        assert_eq!(set_lengths(&s(&[0, 1, 3, 4, 7, 8, 10, 11])).unwrap(), LengthSet::from([2, 3]));
    }

    #[test]
    fn box_enumeration_counts() {
        // nonincreasing maps [0,1] -> {0,1,2} minus the all-"none" profile
        assert_eq!(ideals_in_box(1, 1).len(), 5);
        assert!(ideals_in_box(2, 2).contains(&build_a(2).unwrap()));
    }

    #[test]
    fn mon_oracle_basics() {
        let a1 = build_a(1).unwrap();
        let splits = mon_splits(&build_a(2).unwrap()).unwrap();
        assert_eq!(splits, vec![(a1.clone(), a1)]);
        assert!(mon_splits(&build_c(4).unwrap()).unwrap().is_empty());
        assert_eq!(mon_lengths(&build_a(4).unwrap()).unwrap(), LengthSet::from([2, 3, 4]));
    }
}
