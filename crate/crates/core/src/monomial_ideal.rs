//! Monomial ideals of `K[X,Y]`.
//!
//! A nonzero monomial ideal is stored as its minimal generating set, an
//! antichain of exponent pairs sorted by the `X`-exponent descending. Two
//! ideals are equal exactly when their generator lists are equal.
//!
//! Much of the arithmetic goes through the *profile* of an ideal: for each
//! `x`, the least `y` with `X^x Y^y` in the ideal. Profiles are nonincreasing,
//! intersections take their pointwise maximum, and the generators sit where
//! the profile drops.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{CandidateSink, Engine, GradedMonoid, SearchConfig};
use crate::error::{Error, Result};
use crate::families::{self, SumSequence};
use crate::power_monoid::{set_colon, sumset, walk_subset_candidates, NatSet, ReducedPowerMonoid};

/// The monomial `X^x Y^y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u64, u64)", into = "(u64, u64)")]
pub struct ExpPair {
    pub x: u64,
    pub y: u64,
}

impl ExpPair {
    pub const fn new(x: u64, y: u64) -> Self {
        ExpPair { x, y }
    }

    pub fn divides(&self, other: &ExpPair) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn degree(&self) -> u64 {
        self.x + self.y
    }

    fn checked_mul(&self, other: &ExpPair) -> Result<ExpPair> {
        let overflow = || Error::Overflow("monomial product");
        Ok(ExpPair {
            x: self.x.checked_add(other.x).ok_or_else(overflow)?,
            y: self.y.checked_add(other.y).ok_or_else(overflow)?,
        })
    }
}

impl From<(u64, u64)> for ExpPair {
    fn from((x, y): (u64, u64)) -> Self {
        ExpPair { x, y }
    }
}

impl From<ExpPair> for (u64, u64) {
    fn from(p: ExpPair) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for ExpPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn var(f: &mut fmt::Formatter<'_>, name: char, e: u64) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{name}"),
                _ => write!(f, "{name}^{e}"),
            }
        }
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (_, 0) => var(f, 'X', self.x),
            (0, _) => var(f, 'Y', self.y),
            _ => {
                var(f, 'X', self.x)?;
                write!(f, " ")?;
                var(f, 'Y', self.y)
            }
        }
    }
}

/// A nonzero monomial ideal of `K[X,Y]`, given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonIdeal {
    gens: Vec<ExpPair>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    gens: Vec<ExpPair>,
}

impl TryFrom<IdealJson> for MonIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        MonIdeal::from_generators(j.gens)
    }
}

impl From<MonIdeal> for IdealJson {
    fn from(i: MonIdeal) -> Self {
        IdealJson { gens: i.gens }
    }
}

/// Keeps the divisibility-minimal pairs, sorted by `x` descending.
fn minimize(mut raw: Vec<ExpPair>) -> Vec<ExpPair> {
    // Sorting by (x asc, y asc) means a pair can only be divided by an earlier
    // one, and the survivors have strictly decreasing y.
    raw.sort_unstable();
    raw.dedup();
    let mut kept: Vec<ExpPair> = Vec::with_capacity(raw.len());
    for p in raw {
        if kept.last().is_none_or(|last| p.y < last.y) {
            kept.push(p);
        }
    }
    kept.reverse();
    kept
}

impl MonIdeal {
    pub fn from_generators(raw: impl IntoIterator<Item = ExpPair>) -> Result<Self> {
        let raw: Vec<ExpPair> = raw.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::domain("a monomial ideal needs at least one generator"));
        }
        Ok(MonIdeal { gens: minimize(raw) })
    }

    /// Convenience constructor from `(x, y)` tuples.
    pub fn from_pairs(raw: &[(u64, u64)]) -> Result<Self> {
        Self::from_generators(raw.iter().map(|&p| ExpPair::from(p)))
    }

    fn from_minimal(gens: Vec<ExpPair>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0].x > w[1].x && w[0].y < w[1].y));
        MonIdeal { gens }
    }

    /// The unit ideal `R = ⟨1⟩`.
    pub fn unit() -> Self {
        MonIdeal::from_minimal(vec![ExpPair::new(0, 0)])
    }

    pub fn principal(x: u64, y: u64) -> Self {
        MonIdeal::from_minimal(vec![ExpPair::new(x, y)])
    }

    pub fn gens(&self) -> &[ExpPair] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens[0] == ExpPair::new(0, 0)
    }

    pub fn contains_monomial(&self, m: ExpPair) -> bool {
        self.gens.iter().any(|g| g.divides(&m))
    }

    /// True iff `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains_monomial(g))
    }

    pub fn product(&self, other: &MonIdeal) -> Result<MonIdeal> {
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.checked_mul(b)?);
            }
        }
        Ok(MonIdeal { gens: minimize(raw) })
    }

    pub fn mdeg(&self) -> u64 {
        self.gens.iter().map(ExpPair::degree).min().unwrap()
    }

    /// Largest `X`-exponent among the generators (the pure `X`-power when primitive).
    pub fn max_x(&self) -> u64 {
        self.gens[0].x
    }

    pub fn max_y(&self) -> u64 {
        self.gens[self.gens.len() - 1].y
    }

    pub fn min_x(&self) -> u64 {
        self.gens[self.gens.len() - 1].x
    }

    pub fn min_y(&self) -> u64 {
        self.gens[0].y
    }

    /// Least `y` with `X^x Y^y` in the ideal, or `None` if there is none.
    pub fn height(&self, x: u64) -> Option<u64> {
        // gens with g.x <= x form a suffix; its first entry has the least y
        let i = self.gens.partition_point(|g| g.x > x);
        self.gens.get(i).map(|g| g.y)
    }

    /// Splits off the largest monomial factor: `self = X^i Y^j · rest` where
    /// `rest` has a pure power of `X` and of `Y` among its generators.
    pub fn primitive_part(&self) -> (ExpPair, MonIdeal) {
        let (i, j) = (self.min_x(), self.min_y());
        let gens = self.gens.iter().map(|g| ExpPair::new(g.x - i, g.y - j)).collect();
        (ExpPair::new(i, j), MonIdeal::from_minimal(gens))
    }

    pub fn shift(&self, m: ExpPair) -> Result<MonIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_mul(&m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonIdeal::from_minimal(gens))
    }

    /// `self ∩ other`, generated by pairwise least common multiples.
    pub fn intersection(&self, other: &MonIdeal) -> MonIdeal {
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(ExpPair::new(a.x.max(b.x), a.y.max(b.y)));
            }
        }
        MonIdeal { gens: minimize(raw) }
    }

    /// `self + other`.
    pub fn sum(&self, other: &MonIdeal) -> MonIdeal {
        let mut raw = self.gens.clone();
        raw.extend_from_slice(&other.gens);
        MonIdeal { gens: minimize(raw) }
    }

    /// `(self : X^a Y^b)`.
    pub fn colon_monomial(&self, m: ExpPair) -> MonIdeal {
        let raw = self
            .gens
            .iter()
            .map(|g| ExpPair::new(g.x.saturating_sub(m.x), g.y.saturating_sub(m.y)))
            .collect();
        MonIdeal { gens: minimize(raw) }
    }

    /// The largest monomial ideal `Q` with `other·Q ⊆ self`.
    pub fn colon(&self, other: &MonIdeal) -> MonIdeal {
        let mut acc = self.colon_monomial(other.gens[0]);
        for &g in &other.gens[1..] {
            acc = acc.intersection(&self.colon_monomial(g));
        }
        acc
    }

    /// The `Y`-exponents of the monomials of degree `m = mdeg` when both `X^m`
    /// and `Y^m` lie in the ideal; this set then contains `0` and `m`.
    pub fn top_diagonal(&self) -> Option<NatSet> {
        let m = self.mdeg();
        if self.max_x() != m || self.max_y() != m {
            return None;
        }
        NatSet::new(self.gens.iter().filter(|g| g.degree() == m).map(|g| g.y)).ok()
    }

    /// Text form such as `X^4, X^3 Y, X^2 Y^2, Y^4`; the unit ideal prints as `1`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(ExpPair::to_string).collect();
        parts.join(", ")
    }
}

impl fmt::Display for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_text())
    }
}

fn parse_monomial(term: &str) -> Result<ExpPair> {
    let bad = || Error::parse(format!("bad monomial {term:?}"));
    let chars: Vec<char> = term.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if chars.is_empty() {
        return Err(bad());
    }
    if chars == ['1'] {
        return Ok(ExpPair::new(0, 0));
    }
    let mut m = ExpPair::new(0, 0);
    let mut i = 0;
    while i < chars.len() {
        let var = chars[i].to_ascii_uppercase();
        if var != 'X' && var != 'Y' {
            return Err(bad());
        }
        i += 1;
        let mut e = 1u64;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            e = digits.parse().map_err(|_| bad())?;
        }
        let slot = if var == 'X' { &mut m.x } else { &mut m.y };
        *slot = slot.checked_add(e).ok_or(Error::Overflow("monomial exponent"))?;
    }
    Ok(m)
}

impl FromStr for MonIdeal {
    type Err = Error;

    /// Accepts the JSON form `{"gens": [[x, y], ...]}` and the text form
    /// `X^4, X^3 Y, X^2 Y^2, Y^4`, optionally wrapped in `<...>` or `⟨...⟩`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| Error::parse(e.to_string()));
        }
        let inner = t
            .strip_prefix('<')
            .and_then(|r| r.strip_suffix('>'))
            .or_else(|| t.strip_prefix('⟨').and_then(|r| r.strip_suffix('⟩')))
            .unwrap_or(t);
        let gens = inner
            .split(',')
            .map(parse_monomial)
            .collect::<Result<Vec<_>>>()?;
        MonIdeal::from_generators(gens)
    }
}

/// `Φ(A) = ⟨X^{max A − a} Y^a : a ∈ A⟩`.
pub fn phi(a: &NatSet) -> MonIdeal {
    let m = a.max_element();
    let gens = a.elements().iter().map(|&v| ExpPair::new(m - v, v)).collect();
    MonIdeal::from_minimal(gens)
}

/// `𝔞_k = ⟨X, Y⟩^k`.
pub fn build_a(k: u64) -> Result<MonIdeal> {
    if k < 1 {
        return Err(Error::domain("a_k needs k >= 1"));
    }
    Ok(MonIdeal::from_minimal((0..=k).rev().map(|x| ExpPair::new(x, k - x)).collect()))
}

/// `𝔟_i = ⟨X^i, Y^i⟩`.
pub fn build_b(i: u64) -> Result<MonIdeal> {
    if i < 1 {
        return Err(Error::domain("b_i needs i >= 1"));
    }
    Ok(MonIdeal::from_minimal(vec![ExpPair::new(i, 0), ExpPair::new(0, i)]))
}

/// `𝔠_k`: the image of `{0, 1, 3, ..., 2i+1}` for `k = 2i+1`, and of
/// `{0, 1, 2, 4, ..., 2i}` for `k = 2i` with `i >= 2`.
pub fn build_c(k: u64) -> Result<MonIdeal> {
    let set = match k {
        _ if k >= 3 && !k.is_multiple_of(2) => NatSet::with_zero(&families::build_delta_odd(k / 2)?),
        _ if k >= 4 && k.is_multiple_of(2) => NatSet::with_zero(&families::build_delta_even(k / 2)?),
        _ => return Err(Error::domain(format!("c_k needs k odd >= 3 or even >= 4, got {k}"))),
    };
    Ok(phi(&set))
}

#[allow(non_snake_case)]
pub fn build_I_B(seq: &SumSequence) -> Result<MonIdeal> {
    Ok(phi(&families::build_b(seq)?))
}

#[allow(non_snake_case)]
pub fn build_I_C(seq: &SumSequence) -> Result<MonIdeal> {
    Ok(phi(&families::build_c(seq)?))
}

/// `𝔟̃_r = 𝔟_{a_1}·𝔟_{a_3}⋯𝔟_{a_r} + ⟨X^{a_3+...+a_r − a_2} Y^{a_3 − a_2}⟩`.
pub fn build_tilde_b(seq: &SumSequence, r: usize) -> Result<MonIdeal> {
    let n = seq.n();
    if r < 3 || r > n {
        return Err(Error::domain(format!("tilde_b needs 3 <= r <= n = {n}, got r = {r}")));
    }
    let mut acc = build_b(seq.term(1)?)?;
    for i in 3..=r {
        acc = acc.product(&build_b(seq.term(i)?)?)?;
    }
    let a2 = seq.term(2)?;
    let tail: Vec<usize> = (3..=r).collect();
    let extra = ExpPair::new(seq.subset_sum(&tail)? - a2, seq.term(3)? - a2);
    Ok(acc.sum(&MonIdeal::principal(extra.x, extra.y)))
}

/// An upper bound on the lengths of factorizations of `e` in `Mon(R)`, when
/// `e` has a top diagonal `E` (see [`MonIdeal::top_diagonal`]).
///
/// In a factorization `e = u_1⋯u_k` every `u_i` contains `X^{d_i}` and `Y^{d_i}`
/// with `d_i = mdeg(u_i)`, and the top diagonals satisfy `E = D_1 + ... + D_k`
/// with each `D_i ≠ {0}`. Refining each `D_i` into atoms gives a factorization
/// of `E` of length at least `k`, so `k <= max L(E)` in the reduced power monoid.
pub fn diagonal_length_bound(e: &MonIdeal, config: SearchConfig) -> Result<Option<u64>> {
    let Some(diag) = e.top_diagonal() else {
        return Ok(None);
    };
    let lengths = Engine::new(&ReducedPowerMonoid, config).lengths(&diag)?;
    Ok(lengths.max())
}

/// The monoid `Mon(R)` of nonzero monomial ideals under product, graded by `mdeg`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MonomialMonoid;

impl GradedMonoid for MonomialMonoid {
    type Elem = MonIdeal;

    fn identity(&self) -> MonIdeal {
        MonIdeal::unit()
    }

    fn is_identity(&self, e: &MonIdeal) -> bool {
        e.is_unit()
    }

    fn product(&self, a: &MonIdeal, b: &MonIdeal) -> Result<MonIdeal> {
        a.product(b)
    }

    fn colon(&self, whole: &MonIdeal, part: &MonIdeal) -> Option<MonIdeal> {
        Some(whole.colon(part))
    }

    fn grade(&self, e: &MonIdeal) -> u64 {
        e.mdeg()
    }

    fn canonical_key(&self, e: &MonIdeal) -> String {
        e.to_text()
    }

    /// Writes `whole = X^i Y^j · e` with `e` primitive. Every factor is a
    /// monomial times a primitive factor of `e`, so the candidates are
    /// `X^{i'} Y^{j'}·a` with `i' <= i`, `j' <= j` and `a` running over `R`,
    /// `e` and the proper primitive candidates of `e`.
    fn candidate_divisors(&self, whole: &MonIdeal, sink: &mut CandidateSink<'_, MonIdeal>) -> Result<()> {
        let (shift, prim) = whole.primitive_part();
        if shift == ExpPair::new(0, 0) {
            sink.emit(MonIdeal::unit())?;
            return primitive_candidates(whole, &mut |a, sink| sink.emit(a), sink);
        }
        let mut parts = vec![MonIdeal::unit()];
        if !prim.is_unit() {
            parts.push(prim.clone());
            primitive_candidates(&prim, &mut |a, _| {
                parts.push(a);
                Ok(())
            }, sink)?;
        }
        for i in 0..=shift.x {
            for j in 0..=shift.y {
                for a in &parts {
                    sink.emit(a.shift(ExpPair::new(i, j))?)?;
                }
            }
        }
        Ok(())
    }
}

/// Streams every primitive `a ≠ R, e` that could satisfy `a·b = e` for a
/// primitive `e`.
///
/// Such an `a` has pure powers `X^p`, `Y^q` with `0 < p < max_x(e)` and
/// `0 < q < max_y(e)`, its partner has `X^{max_x − p}` and `Y^{max_y − q}`, and
/// so `e + ⟨X^p, Y^q⟩ ⊆ a ⊆ e : ⟨X^{max_x − p}, Y^{max_y − q}⟩`. The profile
/// of `a` is enumerated between the profiles of these two bounds.
///
/// When `X^m` and `Y^m` both lie in `e` for `m = mdeg(e)`, a factor of
/// min-degree `d` must contain `X^d` and `Y^d`, so `p = q = d` and every
/// monomial of `a` has degree at least `d`. Degree-`m` monomials of `a·b` are
/// then exactly the products of degree-`d` monomials of `a` with degree-`(m−d)`
/// monomials of `b`. Reading off `Y`-exponents, the degree-`d` diagonal of `a`
/// is a summand of the degree-`m` diagonal of `e` in the power monoid, which
/// fixes the profile of `a` on every column where it touches the diagonal.
fn primitive_candidates(
    e: &MonIdeal,
    out: &mut dyn FnMut(MonIdeal, &mut CandidateSink<'_, MonIdeal>) -> Result<()>,
    sink: &mut CandidateSink<'_, MonIdeal>,
) -> Result<()> {
    let (mx, my) = (e.max_x(), e.max_y());
    let m = e.mdeg();
    let height = |x: u64| e.height(x).expect("primitive ideal has a pure Y-power");
    let balanced = mx == m && my == m;

    // (p, q, degree-p diagonal of the candidate when it is forced)
    let mut shapes: Vec<(u64, u64, Option<NatSet>)> = Vec::new();
    if balanced {
        let diagonal = NatSet::new(e.gens.iter().filter(|g| g.degree() == m).map(|g| g.y))?;
        let mut summands: Vec<NatSet> = Vec::new();
        walk_subset_candidates(&diagonal, &mut |c| match c {
            None => sink.tick(),
            Some(c) => {
                if set_colon(&diagonal, &c)
                    .is_some_and(|q| sumset(&c, &q).is_ok_and(|s| s == diagonal))
                {
                    summands.push(c);
                }
                Ok(())
            }
        })?;
        summands.sort_by_key(|c| (c.max_element(), c.clone()));
        for c in summands {
            let d = c.max_element();
            shapes.push((d, d, Some(c)));
        }
    } else {
        for p in 1..mx {
            for q in 1..my {
                shapes.push((p, q, None));
            }
        }
    }

    for (p, q, diagonal) in shapes {
        sink.tick()?;
        let (cx, cy) = (mx - p, my - q);
        let upper = |x: u64| height(x + cx).max(height(x).saturating_sub(cy));
        let lower = |x: u64| q.min(height(x));
        if upper(0) > q || upper(p) > 0 {
            continue;
        }
        let mut lo: Vec<u64> = (0..p).map(|x| upper(x).max(1)).collect();
        let mut hi: Vec<u64> = (0..p).map(lower).collect();
        if let Some(diag) = &diagonal {
            for x in 0..p {
                let y = p - x;
                let i = x as usize;
                if diag.contains(y) {
                    lo[i] = lo[i].max(y);
                    hi[i] = hi[i].min(y);
                } else {
                    lo[i] = lo[i].max(y + 1);
                }
            }
        }
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            continue;
        }
        let mut walk = ProfileWalk {
            e,
            p,
            lo,
            hi,
            profile: vec![q; p as usize],
            corners: vec![ExpPair::new(0, q)],
            out: &mut *out,
            sink: &mut *sink,
        };
        if walk.feasible(0)? {
            walk.descend(1)?;
        }
    }
    Ok(())
}

/// Depth-first walk over nonincreasing profiles `h(0) = q >= h(1) >= ... >= h(p-1) >= 1`
/// with `lo[x] <= h(x) <= hi[x]`.
///
/// Once `h` is fixed on `[0, x]`, the candidate contains the ideal `A_x`
/// spanned by those corners and `X^p`, so its partner lies in `e : A_x`. A
/// generator of `e` in column at most `x` can only come from a monomial of
/// `A_x`, hence must lie in `A_x·(e : A_x)`; otherwise the branch is dead.
struct ProfileWalk<'a, 's, 'b> {
    e: &'a MonIdeal,
    p: u64,
    lo: Vec<u64>,
    hi: Vec<u64>,
    profile: Vec<u64>,
    /// Corners of the profile so far, by increasing column.
    corners: Vec<ExpPair>,
    out: &'a mut dyn FnMut(MonIdeal, &mut CandidateSink<'b, MonIdeal>) -> Result<()>,
    sink: &'s mut CandidateSink<'b, MonIdeal>,
}

impl ProfileWalk<'_, '_, '_> {
    fn ideal_with(&self, tail: Option<ExpPair>) -> MonIdeal {
        let mut gens: Vec<ExpPair> = tail.into_iter().collect();
        gens.extend(self.corners.iter().rev().copied());
        MonIdeal::from_minimal(gens)
    }

    fn feasible(&self, x: u64) -> Result<bool> {
        let part = self.ideal_with(Some(ExpPair::new(self.p, 0)));
        let reach = part.product(&self.e.colon(&part))?;
        Ok(self
            .e
            .gens
            .iter()
            .filter(|g| g.x <= x)
            .all(|&g| reach.contains_monomial(g)))
    }

    fn descend(&mut self, x: u64) -> Result<()> {
        self.sink.tick()?;
        if x == self.p {
            let a = self.ideal_with(Some(ExpPair::new(self.p, 0)));
            return (self.out)(a, self.sink);
        }
        let i = x as usize;
        let prev = self.profile[i - 1];
        let top = self.hi[i].min(prev);
        let new_row = self.e.gens.iter().any(|g| g.x == x);
        for h in (self.lo[i]..=top).rev() {
            self.profile[i] = h;
            let corner = h < prev;
            if corner {
                self.corners.push(ExpPair::new(x, h));
            }
            if !(corner || new_row) || self.feasible(x)? {
                self.descend(x + 1)?;
            }
            if corner {
                self.corners.pop();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(v: &[(u64, u64)]) -> MonIdeal {
        MonIdeal::from_pairs(v).unwrap()
    }

    fn c4() -> MonIdeal {
        ideal(&[(4, 0), (3, 1), (2, 2), (0, 4)])
    }

    #[test]
    fn minimization() {
        assert_eq!(ideal(&[(2, 0), (2, 1)]).gens(), &[ExpPair::new(2, 0)]);
        assert_eq!(c4().gens().len(), 4);
        assert_eq!(ideal(&[(1, 0), (0, 1), (1, 1)]), ideal(&[(0, 1), (1, 0)]));
        assert!(MonIdeal::from_pairs(&[]).is_err());
    }

    #[test]
    fn membership_and_containment() {
        assert!(!c4().contains_monomial(ExpPair::new(1, 3)));
        assert!(c4().contains_monomial(ExpPair::new(2, 5)));
        let m = build_a(1).unwrap();
        assert!(!m.contains_monomial(ExpPair::new(0, 0)));
        assert!(m.contains_ideal(&c4()));
        assert!(!c4().contains_ideal(&m));
        assert!(c4().contains_ideal(&c4()));
    }

    #[test]
    fn products() {
        let m = build_a(1).unwrap();
        let cube = build_a(3).unwrap();
        assert_eq!(m.product(&build_a(2).unwrap()).unwrap(), cube);
        assert_eq!(m.product(&build_b(2).unwrap()).unwrap(), cube);
        assert_eq!(
            build_b(2).unwrap().product(&build_b(3).unwrap()).unwrap(),
            ideal(&[(5, 0), (3, 2), (2, 3), (0, 5)])
        );
        assert_eq!(c4().product(&MonIdeal::unit()).unwrap(), c4());
        let big = MonIdeal::principal(u64::MAX, 0);
        assert!(matches!(big.product(&m), Err(Error::Overflow(_))));
    }

    #[test]
    fn min_degree() {
        assert_eq!(c4().mdeg(), 4);
        assert_eq!(MonIdeal::unit().mdeg(), 0);
        let seq = SumSequence::minimal(3).unwrap();
        assert_eq!(build_tilde_b(&seq, 3).unwrap().mdeg(), 10);
    }

    #[test]
    fn colon_examples() {
        let m = build_a(1).unwrap();
        let q = c4().colon(&m);
        assert_eq!(q, ideal(&[(3, 0), (2, 1), (1, 3), (0, 4)]));
        assert_eq!(c4().colon(&MonIdeal::unit()), c4());
        assert_eq!(m.product(&q).unwrap(), ideal(&[(4, 0), (3, 1), (2, 2), (1, 4), (0, 5)]));
    }

    #[test]
    fn colon_matches_grid_membership() {
        let m = build_a(1).unwrap();
        let q = c4().colon(&m);
        for x in 0..=6 {
            for y in 0..=6 {
                let in_colon = m
                    .gens()
                    .iter()
                    .all(|g| c4().contains_monomial(ExpPair::new(x + g.x, y + g.y)));
                assert_eq!(q.contains_monomial(ExpPair::new(x, y)), in_colon, "({x},{y})");
            }
        }
    }

    #[test]
    fn phi_examples() {
        let s = |v: &[u64]| NatSet::new(v.iter().copied()).unwrap();
        assert_eq!(phi(&s(&[0, 1])), build_a(1).unwrap());
        assert_eq!(phi(&s(&[0, 1, 2, 4])), c4());
        assert_eq!(phi(&s(&[0, 1, 3])), ideal(&[(3, 0), (2, 1), (0, 3)]));
    }

    #[test]
    fn named_families() {
        let seq = SumSequence::minimal(3).unwrap();
        let tb = build_tilde_b(&seq, 3).unwrap();
        assert_eq!(tb, ideal(&[(10, 0), (9, 1), (6, 6), (1, 9), (0, 10)]));
        let b1b9 = build_b(1).unwrap().product(&build_b(9).unwrap()).unwrap();
        assert!(!b1b9.contains_monomial(ExpPair::new(6, 6)));
        assert_eq!(build_c(4).unwrap(), c4());
        assert_eq!(build_a(2).unwrap(), ideal(&[(2, 0), (1, 1), (0, 2)]));
        assert_eq!(build_c(3).unwrap(), ideal(&[(3, 0), (2, 1), (0, 3)]));
        assert!(build_c(2).is_err());
        assert!(build_c(1).is_err());
        assert!(build_tilde_b(&seq, 2).is_err());
        assert!(build_tilde_b(&seq, 4).is_err());
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(c4().to_text(), "X^4, X^3 Y, X^2 Y^2, Y^4");
        assert_eq!(MonIdeal::unit().to_text(), "1");
        assert_eq!("X^4, X^3 Y, X^2 Y^2, Y^4".parse::<MonIdeal>().unwrap(), c4());
        assert_eq!("<X^3Y^2, y>".parse::<MonIdeal>().unwrap(), ideal(&[(0, 1)]));
        assert_eq!("1".parse::<MonIdeal>().unwrap(), MonIdeal::unit());
        let json = serde_json::to_string(&c4()).unwrap();
        assert_eq!(json, r#"{"gens":[[4,0],[3,1],[2,2],[0,4]]}"#);
        assert_eq!(json.parse::<MonIdeal>().unwrap(), c4());
        assert!("X^, Y".parse::<MonIdeal>().is_err());
        assert!("Z".parse::<MonIdeal>().is_err());
    }

    #[test]
    fn diagonal_bound() {
        let seq = SumSequence::minimal(3).unwrap();
        let ic = build_I_C(&seq).unwrap();
        assert_eq!(ic.top_diagonal(), Some(families::build_c(&seq).unwrap()));
        assert_eq!(diagonal_length_bound(&ic, SearchConfig::unlimited()).unwrap(), Some(4));
        assert_eq!(diagonal_length_bound(&build_a(5).unwrap(), SearchConfig::unlimited()).unwrap(), Some(5));
        let lopsided = ideal(&[(5, 0), (0, 3)]);
        assert_eq!(lopsided.top_diagonal(), None);
    }

    #[test]
    fn primitive_parts() {
        let e = ideal(&[(5, 2), (3, 3), (2, 6)]);
        let (m, p) = e.primitive_part();
        assert_eq!(m, ExpPair::new(2, 2));
        assert_eq!(p, ideal(&[(3, 0), (1, 1), (0, 4)]));
        assert_eq!(p.shift(m).unwrap(), e);
    }

    #[test]
    fn candidates_under_min_degree_rule() {
        let eng = Engine::new(&MonomialMonoid, SearchConfig::unlimited());
        let a2 = eng.candidates(&build_a(2).unwrap()).unwrap();
        assert!(a2.contains(&build_a(1).unwrap()));

        let cands = eng.candidates(&c4()).unwrap();
        let at2: Vec<&MonIdeal> = cands.iter().filter(|a| a.mdeg() == 2).collect();
        assert!(at2.iter().all(|a| {
            a.contains_monomial(ExpPair::new(2, 0)) && a.contains_monomial(ExpPair::new(0, 2))
        }));
        // Neither diagonal {0,1,2} nor {0,2} is a summand of {0,1,2,4}.
        assert!(!cands.contains(&build_a(2).unwrap()));
        assert!(!cands.contains(&build_b(2).unwrap()));

        let a4 = build_a(4).unwrap();
        let cands = eng.candidates(&a4).unwrap();
        assert!(cands.contains(&build_a(2).unwrap()));
        assert!(cands.contains(&build_c(3).unwrap()));
    }

    #[test]
    fn candidates_of_two_generator_ideal_have_pure_powers() {
        let eng = Engine::new(&MonomialMonoid, SearchConfig::unlimited());
        let e = ideal(&[(5, 0), (0, 3)]);
        for a in eng.candidates(&e).unwrap() {
            assert_eq!(a.gens()[0].y, 0, "{a}");
            assert_eq!(a.gens().last().unwrap().x, 0, "{a}");
        }
    }

    #[test]
    fn small_atoms_and_splits() {
        let eng = Engine::new(&MonomialMonoid, SearchConfig::unlimited());
        assert!(eng.is_atom(&c4()).unwrap());
        assert!(eng.is_atom(&ideal(&[(5, 0), (0, 3)])).unwrap());
        let a1 = build_a(1).unwrap();
        let splits = eng.split(&build_a(2).unwrap()).unwrap();
        assert!(splits.contains(&(a1.clone(), a1)));
        assert!(eng.is_atom(&MonIdeal::principal(1, 0)).unwrap());
        assert!(!eng.is_atom(&MonIdeal::principal(1, 1)).unwrap());
    }
}
