//! A registry of checkable claims about both monoids, and the report produced
//! by running them.
//!
//! Every claim is a finite, exact computation. A claim passes, fails with a
//! witness describing what went wrong, or is inconclusive when the engine ran
//! out of budget before reaching a verdict.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::{Engine, SearchConfig};
use crate::error::{Error, Result};
use crate::families::{self, SumSequence};
use crate::graded_ideal::{c4_factors, min_degree_piece_check, GradedIdeal2};
use crate::lengths::LengthSet;
use crate::monomial_ideal::{self as mi, ExpPair, MonIdeal, MonomialMonoid};
use crate::oracle;
use crate::power_monoid::{is_sum_free, sumset, NatSet, ReducedPowerMonoid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Stretch,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Suite::Core),
            "stretch" => Ok(Suite::Stretch),
            _ => Err(Error::parse(format!("unknown suite {s:?} (core or stretch)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Budget for every core claim.
    pub search: SearchConfig,
    /// Budget for the direct engine attempt made by stretch claims.
    pub stretch_search: SearchConfig,
    /// Seed for the sampled claims.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            search: SearchConfig::default(),
            stretch_search: SearchConfig::default()
                .with_max_nodes(2_000_000)
                .with_max_seconds(30.0),
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub criterion: u8,
    pub statement: &'static str,
    pub status: Status,
    pub elapsed_ms: u64,
    pub witness: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub results: Vec<ClaimResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn count(&self, status: Status) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    /// 3 if anything failed, else 2 if anything was inconclusive, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Fail) > 0 {
            3
        } else if self.count(Status::Inconclusive) > 0 {
            2
        } else {
            0
        }
    }

    /// The report with all timings zeroed, for comparing runs.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        r.results.iter_mut().for_each(|c| c.elapsed_ms = 0);
        r
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "inconclusive": self.count(Status::Inconclusive),
            },
            "results": self.results,
        })
    }

    pub fn to_table(&self) -> String {
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<12}  {:>9}  statement", "claim", "status", "ms");
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<width$}  {:<12}  {:>9}  {}",
                r.id, r.status, r.elapsed_ms, r.statement
            );
            if r.status != Status::Pass {
                let _ = writeln!(out, "{:<width$}  witness: {}", "", r.witness);
            }
        }
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} inconclusive",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Inconclusive)
        );
        out
    }
}

/// Collects sub-checks of one claim; the claim passes iff none failed.
#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Value>,
    notes: Vec<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, v: Value) {
        self.notes.push(v);
    }

    fn finish(self) -> Outcome {
        let witness = if self.failures.is_empty() {
            json!({ "checked": self.checked, "details": self.notes })
        } else {
            json!({ "checked": self.checked, "failures": self.failures })
        };
        Outcome {
            pass: self.failures.is_empty(),
            witness,
        }
    }
}

struct Outcome {
    pass: bool,
    witness: Value,
}

type ClaimFn = fn(&VerifyConfig) -> Result<Outcome>;

struct Claim {
    id: &'static str,
    criterion: u8,
    suite: Suite,
    statement: &'static str,
    run: ClaimFn,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: "mon-atoms",
        criterion: 1,
        suite: Suite::Core,
        statement: "b_i (i<=8), <X^m,Y^n> (m,n<=8), c3..c7, I_B (n=2,3) and tilde_b_r ((n,r)=(3,3),(4,3),(4,4)) are atoms of Mon(R)",
        run: mon_atoms,
    },
    Claim {
        id: "mon-non-atoms",
        criterion: 2,
        suite: Suite::Core,
        statement: "a_k (2<=k<=6) split; phi{0,j,2j} = b_j^2; phi{0,j,m} is an atom for m<=9, m != 2j",
        run: mon_non_atoms,
    },
    Claim {
        id: "mon-lengths",
        criterion: 3,
        suite: Suite::Core,
        statement: "L(a_k) = [2,k] for 2<=k<=6 and L(I_C) = {2,3} for the minimal sequence with n=2",
        run: mon_lengths,
    },
    Claim {
        id: "set-lengths",
        criterion: 4,
        suite: Suite::Core,
        statement: "L(C_n) = {2,n+1} and B_n is an atom of P_fin,0 for minimal sequences, n=2,3,4",
        run: set_lengths,
    },
    Claim {
        id: "product-identities",
        criterion: 5,
        suite: Suite::Core,
        statement: "I_C = b_a1...b_a(n+1) = b_an I_B; b_a2 tilde_b_r = b_a1...b_ar; I_C = b_a2 tilde_b_r b_a(r+1)...b_a(n+1); a1 a2 = a1 b2; a5 = a1 c4",
        run: product_identities,
    },
    Claim {
        id: "graded-identities",
        criterion: 6,
        suite: Suite::Core,
        statement: "<X^2,XY+Y^2><X^2,XY-Y^2> = c4 over Q; (IJ) in degree d+e equals I_d J_e for monomial I, J",
        run: graded_identities,
    },
    Claim {
        id: "subset-sums",
        criterion: 7,
        suite: Suite::Core,
        statement: "subset sums of minimal sequences: disjoint sums, membership in A_n, B_n, C_n, and the a_J - a_I gap",
        run: subset_sums,
    },
    Claim {
        id: "sum-free-pipeline",
        criterion: 8,
        suite: Suite::Core,
        statement: "for every sum-free A in [1,12], {0} u A is an atom of P_fin,0 and its image under phi is an atom of Mon(R)",
        run: sum_free_pipeline,
    },
    Claim {
        id: "oracle-equivalence",
        criterion: 9,
        suite: Suite::Core,
        statement: "engine splits and lengths equal brute force on all 0-containing A in [0,10] and 200 sampled ideals in [0,4]^2",
        run: oracle_equivalence,
    },
    Claim {
        id: "phi-homomorphism",
        criterion: 10,
        suite: Suite::Core,
        statement: "phi(A+B) = phi(A) phi(B) and phi is injective on 500 sampled pairs in [0,10]",
        run: phi_homomorphism,
    },
    Claim {
        id: "mon-lengths-ic3",
        criterion: 3,
        suite: Suite::Stretch,
        statement: "L(I_C) = {2,3,4} for the minimal sequence with n=3",
        run: lengths_ic3,
    },
];

/// `(id, criterion, statement)` for every claim in the suite.
pub fn list(suite: Suite) -> Vec<(&'static str, u8, &'static str)> {
    CLAIMS
        .iter()
        .filter(|c| c.suite == suite)
        .map(|c| (c.id, c.criterion, c.statement))
        .collect()
}

pub fn run_claim(id: &str, config: &VerifyConfig) -> Result<ClaimResult> {
    let claim = CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::parse(format!("unknown claim {id:?}")))?;
    Ok(execute(claim, config))
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Report {
    let results = CLAIMS
        .iter()
        .filter(|c| c.suite == suite)
        .map(|c| execute(c, config))
        .collect();
    Report {
        suite,
        seed: config.seed,
        results,
    }
}

fn execute(claim: &Claim, config: &VerifyConfig) -> ClaimResult {
    let start = Instant::now();
    let (status, witness) = match (claim.run)(config) {
        Ok(o) if o.pass => (Status::Pass, o.witness),
        Ok(o) => (Status::Fail, o.witness),
        Err(Error::Inconclusive { explored, partial }) => (
            Status::Inconclusive,
            json!({ "explored": explored, "partial_lengths": partial }),
        ),
        Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
    };
    ClaimResult {
        id: claim.id,
        criterion: claim.criterion,
        statement: claim.statement,
        status,
        elapsed_ms: start.elapsed().as_millis() as u64,
        witness,
    }
}

fn rng_for(config: &VerifyConfig, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream);
    rng
}

fn set(v: &[u64]) -> NatSet {
    NatSet::new(v.iter().copied()).expect("nonempty literal")
}

fn product_all(ideals: impl IntoIterator<Item = MonIdeal>) -> Result<MonIdeal> {
    ideals
        .into_iter()
        .try_fold(MonIdeal::unit(), |acc, i| acc.product(&i))
}

fn b_of(seq: &SumSequence, i: usize) -> Result<MonIdeal> {
    mi::build_b(seq.term(i)?)
}

fn mon_atoms(config: &VerifyConfig) -> Result<Outcome> {
    let mut named: Vec<(String, MonIdeal)> = Vec::new();
    for i in 1..=8 {
        named.push((format!("b_{i}"), mi::build_b(i)?));
    }
    for m in 1..=8 {
        for n in 1..=8 {
            named.push((format!("<X^{m},Y^{n}>"), MonIdeal::from_pairs(&[(m, 0), (0, n)])?));
        }
    }
    for k in 3..=7 {
        named.push((format!("c_{k}"), mi::build_c(k)?));
    }
    for n in [2, 3] {
        named.push((format!("I_B(n={n})"), mi::build_I_B(&SumSequence::minimal(n)?)?));
    }
    for (n, r) in [(3, 3), (4, 3), (4, 4)] {
        let seq = SumSequence::minimal(n)?;
        named.push((format!("tilde_b(n={n},r={r})"), mi::build_tilde_b(&seq, r)?));
    }
    let mut t = Tally::default();
    for (name, e) in &named {
        let engine = Engine::new(&MonomialMonoid, config.search.clone());
        let splits = engine.split(e)?;
        t.check(splits.is_empty(), || {
            let (a, b) = &splits[0];
            json!({ "ideal": name, "split": [a.to_string(), b.to_string()] })
        });
    }
    t.note(json!({ "atoms": named.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>() }));
    Ok(t.finish())
}

fn mon_non_atoms(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let engine = Engine::new(&MonomialMonoid, config.search.clone());
    for k in 2..=6 {
        let e = mi::build_a(k)?;
        let splits = engine.split(&e)?;
        match splits.first() {
            Some((a, b)) => {
                let holds = a.product(b)? == e;
                t.check(holds, || json!({ "ideal": format!("a_{k}"), "bad_split": [a.to_string(), b.to_string()] }));
                t.note(json!({ "ideal": format!("a_{k}"), "split": [a.to_string(), b.to_string()] }));
            }
            None => t.check(false, || json!({ "ideal": format!("a_{k}"), "reported": "atom" })),
        }
    }
    for j in 1..=4 {
        let e = mi::phi(&set(&[0, j, 2 * j]));
        let bj = mi::build_b(j)?;
        let square = bj.product(&bj)?;
        t.check(e == square, || json!({ "set": format!("{{0,{j},{}}}", 2 * j), "phi": e.to_string(), "b_j^2": square.to_string() }));
        t.check(!engine.is_atom(&e)?, || json!({ "set": format!("{{0,{j},{}}}", 2 * j), "reported": "atom" }));
    }
    let mut atoms = 0;
    for m in 2..=9u64 {
        for j in 1..m {
            if m == 2 * j {
                continue;
            }
            let e = mi::phi(&set(&[0, j, m]));
            let splits = engine.split(&e)?;
            atoms += 1;
            t.check(splits.is_empty(), || {
                json!({ "set": format!("{{0,{j},{m}}}"), "split": [splits[0].0.to_string(), splits[0].1.to_string()] })
            });
        }
    }
    t.note(json!({ "three_element_atoms": atoms }));
    Ok(t.finish())
}

fn mon_lengths(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let engine = Engine::new(&MonomialMonoid, config.search.clone());
    for k in 2..=6 {
        let got = engine.lengths(&mi::build_a(k)?)?;
        let want: LengthSet = (2..=k).collect();
        t.note(json!({ "ideal": format!("a_{k}"), "lengths": got }));
        t.check(got == want, || json!({ "ideal": format!("a_{k}"), "got": got, "want": want }));
    }
    let ic = mi::build_I_C(&SumSequence::minimal(2)?)?;
    let got = engine.lengths(&ic)?;
    let want = LengthSet::from([2, 3]);
    t.note(json!({ "ideal": "I_C(n=2)", "lengths": got }));
    t.check(got == want, || json!({ "ideal": "I_C(n=2)", "got": got, "want": want }));
    Ok(t.finish())
}

fn set_lengths(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let engine = Engine::new(&ReducedPowerMonoid, config.search.clone());
    for n in 2..=4 {
        let seq = SumSequence::minimal(n)?;
        let c = families::build_c(&seq)?;
        let got = engine.lengths(&c)?;
        let want = LengthSet::from([2, n as u64 + 1]);
        t.note(json!({ "set": format!("C(n={n})"), "lengths": got }));
        t.check(got == want, || json!({ "set": format!("C(n={n})"), "got": got, "want": want }));
        let b = families::build_b(&seq)?;
        let splits = engine.split(&b)?;
        t.check(splits.is_empty(), || {
            json!({ "set": format!("B(n={n})"), "split": [splits[0].0.to_string(), splits[0].1.to_string()] })
        });
    }
    Ok(t.finish())
}

fn product_identities(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let mismatch = |what: String, lhs: &MonIdeal, rhs: &MonIdeal| {
        json!({ "identity": what, "lhs": lhs.to_string(), "rhs": rhs.to_string() })
    };
    for n in 2..=4 {
        let seq = SumSequence::minimal(n)?;
        let ic = mi::build_I_C(&seq)?;
        let all = product_all((1..=n + 1).map(|i| b_of(&seq, i)).collect::<Result<Vec<_>>>()?)?;
        t.check(ic == all, || mismatch(format!("I_C = prod b (n={n})"), &ic, &all));
        let via_b = b_of(&seq, n)?.product(&mi::build_I_B(&seq)?)?;
        t.check(ic == via_b, || mismatch(format!("I_C = b_an I_B (n={n})"), &ic, &via_b));
    }
    for n in 3..=4 {
        let seq = SumSequence::minimal(n)?;
        let ic = mi::build_I_C(&seq)?;
        for r in 3..=n {
            let lhs = b_of(&seq, 2)?.product(&mi::build_tilde_b(&seq, r)?)?;
            let rhs = product_all((1..=r).map(|i| b_of(&seq, i)).collect::<Result<Vec<_>>>()?)?;
            t.check(lhs == rhs, || mismatch(format!("b_a2 tilde_b = prod (n={n}, r={r})"), &lhs, &rhs));
            let tail = product_all((r + 1..=n + 1).map(|i| b_of(&seq, i)).collect::<Result<Vec<_>>>()?)?;
            let full = lhs.product(&tail)?;
            t.check(full == ic, || mismatch(format!("I_C = b_a2 tilde_b tail (n={n}, r={r})"), &full, &ic));
        }
    }
    let a1 = mi::build_a(1)?;
    let lhs = a1.product(&mi::build_a(2)?)?;
    let rhs = a1.product(&mi::build_b(2)?)?;
    t.check(lhs == rhs, || mismatch("a1 a2 = a1 b2".into(), &lhs, &rhs));
    let a5 = mi::build_a(5)?;
    let rhs = a1.product(&mi::build_c(4)?)?;
    t.check(a5 == rhs, || mismatch("a5 = a1 c4".into(), &a5, &rhs));
    Ok(t.finish())
}

fn random_ideal(rng: &mut ChaCha8Rng, bound: u64, max_gens: usize) -> MonIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| ExpPair::new(rng.gen_range(0..=bound), rng.gen_range(0..=bound)));
    MonIdeal::from_generators(gens).expect("at least one generator")
}

fn graded_identities(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let (f, g) = c4_factors();
    let c4 = GradedIdeal2::from_monomial(&mi::build_c(4)?);
    let prod = f.product(&g);
    t.check(prod.equals(&c4), || {
        json!({ "identity": "c4 factorization", "product": prod.gens().iter().map(|p| p.to_string()).collect::<Vec<_>>() })
    });
    let mut rng = rng_for(config, 6);
    let mut pairs: Vec<(MonIdeal, MonIdeal)> = (0..20)
        .map(|_| (random_ideal(&mut rng, 6, 4), random_ideal(&mut rng, 6, 4)))
        .collect();
    pairs.push((mi::build_b(2)?, mi::build_b(3)?));
    pairs.push((mi::build_c(4)?, mi::build_a(1)?));
    for (i, j) in &pairs {
        t.check(min_degree_piece_check(i, j), || json!({ "I": i.to_string(), "J": j.to_string() }));
    }
    Ok(t.finish())
}

fn masks(bits: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let range = bits.into_iter().fold(0u64, |m, i| m | 1 << (i - 1));
    let mut out = Vec::new();
    let mut sub = range;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & range;
    }
    out.sort_unstable();
    out
}

fn indices(mask: u64) -> Vec<usize> {
    (1..=64).filter(|&i| mask >> (i - 1) & 1 == 1).collect()
}

fn subset_sums(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let bad = |rule: &str, n: usize, i: u64, j: u64| {
        json!({ "rule": rule, "n": n, "I": indices(i), "J": indices(j) })
    };

    for n in 2..=5 {
        let seq = SumSequence::minimal(n)?;
        let a = |m: u64| seq.subset_sum_mask(m);
        for k in 1..=n {
            let sums: BTreeSet<u64> = masks(1..=k).into_iter().map(a).collect::<Result<_>>()?;
            for &i in &masks(1..=k) {
                for &j in &masks(1..=k) {
                    let hit = sums.contains(&(a(i)? + a(j)?));
                    t.check(hit == (i & j == 0), || bad("disjoint sums", n, i, j));
                }
            }
        }
        // a_[1,n-1] + a_H = a_I + a_J forces I u J = [1,n-1] and H = I n J
        let low = masks(1..n);
        let full = (1u64 << (n - 1)) - 1;
        for &h in &low {
            for &i in &low {
                for &j in &low {
                    if a(full)? + a(h)? == a(i)? + a(j)? {
                        t.check(i | j == full && h == i & j, || bad("complement sums", n, i, j));
                    }
                }
            }
        }
    }

    for n in 2..=4 {
        let seq = SumSequence::minimal(n)?;
        let a = |m: u64| seq.subset_sum_mask(m);
        let an = families::build_a(&seq)?;
        let bn = families::build_b(&seq)?;
        let cn = families::build_c(&seq)?;
        let low = masks(1..n);
        for &i in &low {
            for &j in &low {
                t.check(an.contains(a(i)? + a(j)?) == (i & j == 0), || bad("A_n membership", n, i, j));
            }
        }
        let top = 1u64 << n;
        let js: Vec<u64> = low.iter().flat_map(|&y| [y, y | top]).collect();
        for &i in &low {
            for &j in &js {
                t.check(bn.contains(a(i)? + a(j)?) == (i & j == 0), || bad("B_n membership", n, i, j));
            }
            let first_n = (1u64 << n) - 1;
            t.check(bn.contains(a(first_n)? + a(i)?) == (i == 0), || bad("B_n top", n, first_n, i));
        }
        let first_n = (1u64 << n) - 1;
        let last = 1u64 << (n - 1);
        for &i in &masks(1..=n + 1) {
            for &j in &masks(1..=n + 1) {
                let expect = i & j == 0 || (i | j == first_n && i & j & last != 0);
                t.check(cn.contains(a(i)? + a(j)?) == expect, || bad("C_n membership", n, i, j));
            }
        }
    }

    for n in 4..=5 {
        let seq = SumSequence::minimal(n)?;
        let a = |m: u64| seq.subset_sum_mask(m).map(|v| v as i64);
        let (a1, a3) = (a(1)?, a(4)?);
        for r in 4..=n {
            let pool = masks(std::iter::once(1).chain(3..=r));
            for &i in &pool {
                for &j in &pool {
                    let d = a(j)? - a(i)?;
                    if d > a1 && d != a3 - a1 {
                        t.check(d >= a3, || bad("difference gap", n, i, j));
                    }
                }
            }
        }
    }
    Ok(t.finish())
}

fn sum_free_pipeline(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let sets = Engine::new(&ReducedPowerMonoid, config.search.clone());
    let ideals = Engine::new(&MonomialMonoid, config.search.clone());
    let mut count = 0;
    for mask in 1u64..1 << 12 {
        let a = NatSet::new((1..=12).filter(|&i| mask >> (i - 1) & 1 == 1))?;
        if !is_sum_free(&a) {
            continue;
        }
        count += 1;
        let a0 = NatSet::with_zero(&a);
        t.check(sets.is_atom(&a0)?, || json!({ "set": a0.to_string(), "monoid": "pfin0" }));
        t.check(ideals.is_atom(&mi::phi(&a0))?, || json!({ "set": a0.to_string(), "monoid": "mon" }));
    }
    t.note(json!({ "sum_free_sets": count }));
    Ok(t.finish())
}

fn oracle_equivalence(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let sets = Engine::new(&ReducedPowerMonoid, config.search.clone());
    let mut set_count = 0;
    for mask in 0u64..1 << 10 {
        let a = NatSet::new(std::iter::once(0).chain((1..=10).filter(|&i| mask >> (i - 1) & 1 == 1)))?;
        if a == NatSet::zero() {
            continue;
        }
        set_count += 1;
        let mine = sets.split(&a)?;
        let theirs = oracle::set_splits(&a)?;
        t.check(*mine == theirs, || json!({ "set": a.to_string(), "engine": mine.len(), "oracle": theirs.len() }));
        let (lm, lo) = (sets.lengths(&a)?, oracle::set_lengths(&a)?);
        t.check(lm == lo, || json!({ "set": a.to_string(), "engine": lm, "oracle": lo }));
    }

    let ideals = Engine::new(&MonomialMonoid, config.search.clone());
    let mut rng = rng_for(config, 9);
    let mut sampled = 0;
    while sampled < 200 {
        let e = random_ideal(&mut rng, 4, 5);
        if e.is_unit() {
            continue;
        }
        sampled += 1;
        let mine = ideals.split(&e)?;
        let theirs = oracle::mon_splits(&e)?;
        t.check(*mine == theirs, || json!({ "ideal": e.to_string(), "engine": mine.len(), "oracle": theirs.len() }));
        let (lm, lo) = (ideals.lengths(&e)?, oracle::mon_lengths(&e)?);
        t.check(lm == lo, || json!({ "ideal": e.to_string(), "engine": lm, "oracle": lo }));
    }
    t.note(json!({ "sets": set_count, "ideals": sampled }));
    Ok(t.finish())
}

fn random_set(rng: &mut ChaCha8Rng, bound: u64) -> NatSet {
    loop {
        let v: Vec<u64> = (0..=bound).filter(|_| rng.gen_bool(0.35)).collect();
        if let Ok(s) = NatSet::new(v) {
            return s;
        }
    }
}

fn phi_homomorphism(config: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::default();
    let mut rng = rng_for(config, 10);
    for _ in 0..500 {
        let (a, b) = (random_set(&mut rng, 10), random_set(&mut rng, 10));
        let (pa, pb) = (mi::phi(&a), mi::phi(&b));
        let lhs = mi::phi(&sumset(&a, &b)?);
        let rhs = pa.product(&pb)?;
        t.check(lhs == rhs, || json!({ "A": a.to_string(), "B": b.to_string(), "phi(A+B)": lhs.to_string(), "phi(A)phi(B)": rhs.to_string() }));
        t.check((a == b) == (pa == pb), || json!({ "A": a.to_string(), "B": b.to_string(), "injectivity": false }));
    }
    Ok(t.finish())
}

/// Tries the engine under the stretch budget; if that runs out, certifies the
/// set of lengths from an upper bound plus one factorization per length.
fn lengths_ic3(config: &VerifyConfig) -> Result<Outcome> {
    let seq = SumSequence::minimal(3)?;
    let ic = mi::build_I_C(&seq)?;
    let want = LengthSet::from([2, 3, 4]);
    let direct = Engine::new(&MonomialMonoid, config.stretch_search.clone());
    let explored = match direct.lengths(&ic) {
        Ok(got) => {
            let pass = got == want;
            return Ok(Outcome {
                pass,
                witness: json!({ "method": "search", "got": got, "want": want }),
            });
        }
        Err(Error::Inconclusive { explored, .. }) => explored,
        Err(e) => return Err(e),
    };

    let mut t = Tally::default();
    let engine = Engine::new(&MonomialMonoid, config.search.clone());
    let bound = mi::diagonal_length_bound(&ic, config.search.clone())?;
    t.check(bound == Some(4), || json!({ "upper_bound": bound }));

    let b = |i: usize| b_of(&seq, i);
    let factorizations: Vec<Vec<MonIdeal>> = vec![
        vec![b(3)?, mi::build_I_B(&seq)?],
        vec![b(2)?, mi::build_tilde_b(&seq, 3)?, b(4)?],
        vec![b(1)?, b(2)?, b(3)?, b(4)?],
    ];
    let mut shown = Vec::new();
    for z in &factorizations {
        let prod = product_all(z.iter().cloned())?;
        t.check(prod == ic, || json!({ "factorization": z.iter().map(|u| u.to_string()).collect::<Vec<_>>(), "product": prod.to_string() }));
        for u in z {
            t.check(engine.is_atom(u)?, || json!({ "not_an_atom": u.to_string() }));
        }
        shown.push(json!({ "length": z.len(), "atoms": z.iter().map(|u| u.to_string()).collect::<Vec<_>>() }));
    }
    t.note(json!({
        "method": "certificate",
        "search_explored": explored,
        "upper_bound": bound,
        "factorizations": shown,
    }));
    Ok(t.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_listed() {
        let mut seen = BTreeSet::new();
        for c in CLAIMS {
            assert!(seen.insert(c.id), "duplicate claim id {}", c.id);
        }
        let core = list(Suite::Core);
        let criteria: BTreeSet<u8> = core.iter().map(|c| c.1).collect();
        assert_eq!(criteria, (1..=10).collect());
        assert_eq!(list(Suite::Stretch).len(), 1);
    }

    #[test]
    fn exit_codes() {
        let mut r = Report {
            suite: Suite::Core,
            seed: 7,
            results: vec![],
        };
        assert_eq!(r.exit_code(), 0);
        let row = |status| ClaimResult {
            id: "x",
            criterion: 1,
            statement: "",
            status,
            elapsed_ms: 0,
            witness: Value::Null,
        };
        r.results.push(row(Status::Inconclusive));
        assert_eq!(r.exit_code(), 2);
        r.results.push(row(Status::Fail));
        assert_eq!(r.exit_code(), 3);
    }

    #[test]
    fn quick_claims_pass() {
        let config = VerifyConfig::default();
        for id in ["product-identities", "subset-sums", "phi-homomorphism"] {
            let r = run_claim(id, &config).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {}", r.witness);
        }
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let config = VerifyConfig {
            search: SearchConfig::default().with_max_nodes(10),
            ..Default::default()
        };
        let r = run_claim("mon-lengths", &config).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
    }
}
