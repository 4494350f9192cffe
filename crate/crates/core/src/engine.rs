//! Atom tests, splits, sets of lengths and factorizations over any reduced,
//! unit-cancellative monoid with an additive grade.
//!
//! A monoid plugs in through [`GradedMonoid`]. The search never pairs
//! candidates blindly: for a candidate divisor `a` of `e`, the colon `e : a`
//! is the largest element `q` with `a·q` dividing into `e`, so `a` has a
//! cofactor iff `a·(e : a) = e`. Once all divisors are known, splits are the
//! pairs of divisors of complementary grade whose product is `e`; this also
//! catches distinct cofactors of the same divisor, which matters because
//! neither monoid here is cancellative.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lengths::LengthSet;

/// The contract a monoid fulfils to be searched by [`Engine`].
///
/// `grade` must be additive and vanish only on the identity. Every divisor `a`
/// of `whole` with `1 <= grade(a) < grade(whole)` must be passed to the sink by
/// `candidate_divisors`; extra candidates are harmless.
pub trait GradedMonoid: Sync {
    type Elem: Clone + Eq + Hash + Ord + Send + Sync + fmt::Debug + fmt::Display;

    fn identity(&self) -> Self::Elem;

    fn is_identity(&self, e: &Self::Elem) -> bool {
        *e == self.identity()
    }

    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    /// The maximal cofactor candidate of `part` inside `whole`, if any.
    fn colon(&self, whole: &Self::Elem, part: &Self::Elem) -> Option<Self::Elem>;

    fn grade(&self, e: &Self::Elem) -> u64;

    fn canonical_key(&self, e: &Self::Elem) -> String;

    fn candidate_divisors(
        &self,
        whole: &Self::Elem,
        sink: &mut CandidateSink<'_, Self::Elem>,
    ) -> Result<()>;
}

/// Search limits. Exceeding either budget yields [`Error::Inconclusive`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Maximum number of explored candidates (enumeration nodes included).
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
    /// Worker threads used to test candidates; `1` runs on the calling thread.
    pub parallelism: usize,
    /// Largest grade for which full factorization lists are produced.
    pub max_factorization_grade: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: Some(5_000_000),
            max_seconds: Some(120.0),
            parallelism: 1,
            max_factorization_grade: 64,
        }
    }
}

impl SearchConfig {
    pub fn unlimited() -> Self {
        SearchConfig {
            max_nodes: None,
            max_seconds: None,
            parallelism: 1,
            max_factorization_grade: u64::MAX,
        }
    }

    pub fn with_parallelism(mut self, width: usize) -> Self {
        self.parallelism = width.max(1);
        self
    }

    pub fn with_max_nodes(mut self, n: u64) -> Self {
        self.max_nodes = Some(n);
        self
    }

    pub fn with_max_seconds(mut self, s: f64) -> Self {
        self.max_seconds = Some(s);
        self
    }
}

struct Budget {
    explored: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Budget {
    fn new(config: &SearchConfig) -> Self {
        Budget {
            explored: AtomicU64::new(0),
            max_nodes: config.max_nodes,
            deadline: config
                .max_seconds
                .map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))),
        }
    }

    fn charge(&self) -> Result<()> {
        let n = self.explored.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| n > m);
        let over_time = n.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            Err(self.exhausted())
        } else {
            Ok(())
        }
    }

    fn exhausted(&self) -> Error {
        Error::Inconclusive {
            explored: self.explored.load(Ordering::Relaxed),
            partial: None,
        }
    }
}

type Probe<'b, E> = dyn Fn(&E) -> Result<bool> + 'b;

/// Receives candidate divisors from [`GradedMonoid::candidate_divisors`] and
/// charges every enumeration step against the search budget.
pub struct CandidateSink<'b, E> {
    found: Vec<E>,
    budget: &'b Budget,
    /// In probing mode candidates are tested as they arrive instead of stored.
    probe: Option<&'b Probe<'b, E>>,
    hit: Option<E>,
}

impl<E> CandidateSink<'_, E> {
    pub fn emit(&mut self, candidate: E) -> Result<()> {
        self.budget.charge()?;
        match self.probe {
            None => self.found.push(candidate),
            Some(probe) => {
                if probe(&candidate)? {
                    self.hit = Some(candidate);
                    // unwinds the provider; `first_split` looks at `hit` before the error
                    return Err(self.budget.exhausted());
                }
            }
        }
        Ok(())
    }

    /// Accounts for an internal enumeration node that produced no candidate.
    pub fn tick(&mut self) -> Result<()> {
        self.budget.charge()
    }
}

/// A factorization: a multiset of atoms, sorted, whose product is the element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization<E> {
    atoms: Vec<E>,
}

impl<E: Ord + Clone> Factorization<E> {
    pub fn new(mut atoms: Vec<E>) -> Self {
        atoms.sort();
        Factorization { atoms }
    }

    pub fn atoms(&self) -> &[E] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    fn merged(&self, other: &Self) -> Self {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Factorization::new(atoms)
    }
}

/// Serializable view of a factorization by canonical keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationKeys {
    pub length: usize,
    pub atoms: Vec<String>,
}

type SplitList<E> = Arc<Vec<(E, E)>>;
type FactorizationList<E> = Arc<Vec<Factorization<E>>>;

/// One search run: a monoid, a budget and the memo tables shared by every
/// query made through this engine.
pub struct Engine<'m, M: GradedMonoid> {
    monoid: &'m M,
    config: SearchConfig,
    budget: Budget,
    pool: Option<rayon::ThreadPool>,
    splits: Mutex<HashMap<M::Elem, SplitList<M::Elem>>>,
    lengths: Mutex<HashMap<M::Elem, LengthSet>>,
    factorizations: Mutex<HashMap<M::Elem, FactorizationList<M::Elem>>>,
}

impl<'m, M: GradedMonoid> Engine<'m, M> {
    pub fn new(monoid: &'m M, config: SearchConfig) -> Self {
        let pool = (config.parallelism > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.parallelism)
                .build()
                .expect("failed to build worker pool")
        });
        Engine {
            monoid,
            budget: Budget::new(&config),
            config,
            pool,
            splits: Mutex::default(),
            lengths: Mutex::default(),
            factorizations: Mutex::default(),
        }
    }

    pub fn monoid(&self) -> &M {
        self.monoid
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    pub fn explored(&self) -> u64 {
        self.budget.explored.load(Ordering::Relaxed)
    }

    fn run<R: Send>(&self, job: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(job),
            None => job(),
        }
    }

    fn has_cofactor(&self, whole: &M::Elem, a: &M::Elem) -> Result<bool> {
        match self.monoid.colon(whole, a) {
            Some(q) => Ok(self.monoid.product(a, &q)? == *whole),
            None => Ok(false),
        }
    }

    /// The raw candidate stream for `e`, restricted to grades in `[1, grade(e))`
    /// and sorted by `(grade, element)`.
    pub fn candidates(&self, e: &M::Elem) -> Result<Vec<M::Elem>> {
        let m = self.monoid;
        let g = m.grade(e);
        let mut sink = CandidateSink {
            found: Vec::new(),
            budget: &self.budget,
            probe: None,
            hit: None,
        };
        m.candidate_divisors(e, &mut sink)?;
        let mut candidates = sink.found;
        candidates.retain(|a| (1..g).contains(&m.grade(a)));
        candidates.sort_by(|a, b| (m.grade(a), a).cmp(&(m.grade(b), b)));
        candidates.dedup();
        Ok(candidates)
    }

    /// All divisors `a` of `e` with `1 <= grade(a) < grade(e)`, sorted by
    /// `(grade, element)`.
    pub fn divisors(&self, e: &M::Elem) -> Result<Vec<M::Elem>> {
        let candidates = self.candidates(e)?;

        let checks: Vec<Result<bool>> = if self.pool.is_some() {
            self.run(|| candidates.par_iter().map(|a| self.has_cofactor(e, a)).collect())
        } else {
            candidates.iter().map(|a| self.has_cofactor(e, a)).collect()
        };
        let mut out = Vec::new();
        for (a, ok) in candidates.into_iter().zip(checks) {
            if ok? {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// All unordered pairs `(a, b)` of non-identity elements with `a·b = e`,
    /// listed with `grade(a) <= grade(b)` and, on equal grades, `a <= b`.
    pub fn split(&self, e: &M::Elem) -> Result<SplitList<M::Elem>> {
        let m = self.monoid;
        if m.is_identity(e) {
            return Err(Error::domain("the identity has no splits"));
        }
        if let Some(hit) = self.splits.lock().unwrap().get(e) {
            return Ok(hit.clone());
        }

        let g = m.grade(e);
        let divisors = self.divisors(e)?;
        let mut by_grade: BTreeMap<u64, Vec<&M::Elem>> = BTreeMap::new();
        for d in &divisors {
            by_grade.entry(m.grade(d)).or_default().push(d);
        }
        let mut jobs: Vec<(&M::Elem, &M::Elem)> = Vec::new();
        for (&ga, left) in by_grade.range(..=g / 2) {
            let Some(right) = by_grade.get(&(g - ga)) else {
                continue;
            };
            for &a in left {
                for &b in right {
                    if ga == g - ga && b < a {
                        continue;
                    }
                    jobs.push((a, b));
                }
            }
        }
        let test = |&(a, b): &(&M::Elem, &M::Elem)| -> Result<Option<(M::Elem, M::Elem)>> {
            Ok((m.product(a, b)? == *e).then(|| (a.clone(), b.clone())))
        };
        type Tested<E> = Result<Option<(E, E)>>;
        let tested: Vec<Tested<M::Elem>> = if self.pool.is_some() {
            self.run(|| jobs.par_iter().map(test).collect())
        } else {
            jobs.iter().map(test).collect()
        };
        let mut pairs = Vec::new();
        for t in tested {
            if let Some(p) = t? {
                pairs.push(p);
            }
        }

        let pairs = Arc::new(pairs);
        self.splits.lock().unwrap().insert(e.clone(), pairs.clone());
        Ok(pairs)
    }

    /// Some pair `(a, b)` of non-identity elements with `a·b = e`, or `None`
    /// when `e` is an atom.
    ///
    /// Candidates are tested as the monoid produces them and the search stops
    /// at the first divisor, so memory stays bounded even when `e` has
    /// millions of divisors. The pair is the first split in candidate order
    /// when splits are already cached, and otherwise the first divisor found
    /// together with its colon cofactor.
    pub fn first_split(&self, e: &M::Elem) -> Result<Option<(M::Elem, M::Elem)>> {
        let m = self.monoid;
        if m.is_identity(e) {
            return Err(Error::domain("the identity is a unit, not an atom"));
        }
        if let Some(hit) = self.splits.lock().unwrap().get(e) {
            return Ok(hit.first().cloned());
        }
        let g = m.grade(e);
        let probe = |a: &M::Elem| -> Result<bool> {
            Ok((1..g).contains(&m.grade(a)) && self.has_cofactor(e, a)?)
        };
        let mut sink = CandidateSink {
            found: Vec::new(),
            budget: &self.budget,
            probe: Some(&probe),
            hit: None,
        };
        let run = m.candidate_divisors(e, &mut sink);
        if let Some(a) = sink.hit {
            let b = m.colon(e, &a).expect("a divisor has a cofactor");
            let pair = if (m.grade(&b), &b) < (m.grade(&a), &a) { (b, a) } else { (a, b) };
            return Ok(Some(pair));
        }
        run?;
        self.splits.lock().unwrap().insert(e.clone(), Arc::new(Vec::new()));
        Ok(None)
    }

    pub fn is_atom(&self, e: &M::Elem) -> Result<bool> {
        Ok(self.first_split(e)?.is_none())
    }

    /// The set of lengths of `e`; the identity has `{0}`.
    ///
    /// On budget exhaustion the error carries, as `partial`, the lengths
    /// already certified at this level of the recursion.
    pub fn lengths(&self, e: &M::Elem) -> Result<LengthSet> {
        let m = self.monoid;
        if m.is_identity(e) {
            return Ok(LengthSet::singleton(0));
        }
        if let Some(hit) = self.lengths.lock().unwrap().get(e) {
            return Ok(hit.clone());
        }
        let pairs = self.split(e)?;
        let mut acc = LengthSet::new();
        if pairs.is_empty() {
            acc.insert(1);
        }
        for (a, b) in pairs.iter() {
            let both = self.lengths(a).and_then(|la| Ok((la, self.lengths(b)?)));
            match both {
                Ok((la, lb)) => acc.extend(&la.sumset(&lb)),
                Err(Error::Inconclusive { explored, .. }) => {
                    return Err(Error::Inconclusive {
                        explored,
                        partial: (!acc.is_empty()).then_some(acc),
                    })
                }
                Err(other) => return Err(other),
            }
        }
        self.lengths.lock().unwrap().insert(e.clone(), acc.clone());
        Ok(acc)
    }

    /// Every factorization of `e` up to reordering, canonically sorted.
    pub fn factorizations(&self, e: &M::Elem) -> Result<Arc<Vec<Factorization<M::Elem>>>> {
        let m = self.monoid;
        if m.grade(e) > self.config.max_factorization_grade {
            return Err(Error::domain(format!(
                "grade {} exceeds the factorization bound {}",
                m.grade(e),
                self.config.max_factorization_grade
            )));
        }
        if m.is_identity(e) {
            return Ok(Arc::new(vec![Factorization::new(Vec::new())]));
        }
        if let Some(hit) = self.factorizations.lock().unwrap().get(e) {
            return Ok(hit.clone());
        }
        let pairs = self.split(e)?;
        let mut all = BTreeSet::new();
        if pairs.is_empty() {
            all.insert(Factorization::new(vec![e.clone()]));
        }
        for (a, b) in pairs.iter() {
            let za = self.factorizations(a)?;
            let zb = self.factorizations(b)?;
            for x in za.iter() {
                for y in zb.iter() {
                    all.insert(x.merged(y));
                }
            }
        }
        let out = Arc::new(all.into_iter().collect::<Vec<_>>());
        self.factorizations.lock().unwrap().insert(e.clone(), out.clone());
        Ok(out)
    }

    pub fn factorization_keys(&self, z: &Factorization<M::Elem>) -> FactorizationKeys {
        FactorizationKeys {
            length: z.len(),
            atoms: z.atoms().iter().map(|a| self.monoid.canonical_key(a)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::power_monoid::{NatSet, ReducedPowerMonoid};

    fn s(v: &[u64]) -> NatSet {
        NatSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn identity_has_empty_factorization_and_no_splits() {
        let eng = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited());
        let z = eng.factorizations(&NatSet::zero()).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].is_empty());
        assert!(matches!(eng.split(&NatSet::zero()), Err(Error::Domain(_))));
        assert_eq!(eng.lengths(&NatSet::zero()).unwrap(), LengthSet::from([0]));
    }

    #[test]
    fn atom_has_single_factorization() {
        let eng = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited());
        let a = s(&[0, 1, 2, 4]);
        let z = eng.factorizations(&a).unwrap();
        assert_eq!(z.as_slice(), &[Factorization::new(vec![a.clone()])]);
    }

    #[test]
    fn node_budget_gives_inconclusive() {
        let eng = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited().with_max_nodes(3));
        let e = s(&[0, 1, 2, 3, 4, 5, 6, 7, 8]);
        assert!(eng.lengths(&e).unwrap_err().is_inconclusive());
    }

    #[test]
    fn partial_lengths_are_a_subset_of_the_truth() {
        let e = s(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        let truth = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited())
            .lengths(&e)
            .unwrap();
        for budget in [50, 200, 1000, 5000] {
            let eng = Engine::new(
                &ReducedPowerMonoid,
                SearchConfig::unlimited().with_max_nodes(budget),
            );
            match eng.lengths(&e) {
                Ok(l) => assert_eq!(l, truth),
                Err(Error::Inconclusive { partial, .. }) => {
                    if let Some(p) = partial {
                        assert!(p.iter().all(|l| truth.contains(l)));
                    }
                }
                Err(other) => panic!("unexpected {other}"),
            }
        }
    }

    #[test]
    fn factorization_lengths_match_length_set() {
        let eng = Engine::new(&ReducedPowerMonoid, SearchConfig::unlimited());
        let e = s(&[0, 1, 2, 3, 4, 5, 6]);
        let from_z: LengthSet = eng
            .factorizations(&e)
            .unwrap()
            .iter()
            .map(|z| z.len() as u64)
            .collect();
        assert_eq!(from_z, eng.lengths(&e).unwrap());
    }
}
