use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use idealfact::experiments::{atom_density, phi_transport};
use idealfact::monomial_ideal::MonomialMonoid;
use idealfact::power_monoid::{reduce, ReducedPowerMonoid};
use idealfact::verify::{self, Suite, VerifyConfig};
use idealfact::{parse_target, Engine, Error, FamilyArgs, LengthSet, NatSet, SearchConfig, SumSequence, Target};

const TARGET_HELP: &str = "\
Targets:
  a_5  b_3  c_7  c4             powers of <X,Y>, <X^i,Y^i>, staircases c_k
  tilde_b --minimal 3 --r 3     tilde b_r over a sequence
  I_B --minimal 2, I_C --seq 1,3,9,22
  A | B | C --minimal n         the set families
  beta_4  delta_odd_2  delta_even_3
  {0,1,4}                       a set literal
  \"X^4, X^3 Y, Y^4\"             an ideal literal, also <...> or {\"gens\":[[4,0],[0,4]]}

Exit codes: 0 conclusive or pass, 1 usage error, 2 inconclusive, 3 verification failure.";

#[derive(Parser)]
#[command(name = "idealfact", version, about = "Atoms and sets of lengths of finite sets of naturals and monomial ideals", after_help = TARGET_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Monoid to work in.
    #[arg(long, global = true, value_enum, default_value_t = Monoid::Mon)]
    monoid: Monoid,
    /// Use the minimal sequence with this n for families that need one.
    #[arg(long, global = true)]
    minimal: Option<usize>,
    /// Use this sequence a1,a2,... for families that need one.
    #[arg(long, global = true)]
    seq: Option<SumSequence>,
    /// The index r of tilde_b.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Maximum number of explored candidates.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-time budget in seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Worker threads for candidate testing.
    #[arg(long, global = true, default_value_t = 1)]
    parallelism: usize,
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    /// Seed for sampled claims and experiments.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Monoid {
    /// Finite nonempty subsets of N under sumset.
    Pfin,
    /// Finite subsets of N containing 0.
    Pfin0,
    /// Nonzero monomial ideals of K[X,Y].
    Mon,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a target is an atom.
    Atom { target: String },
    /// Compute the set of lengths with its delta set and elasticity.
    Lengths { target: String },
    /// Run the built-in claim suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Core)]
        suite: SuiteArg,
        /// Only list the claim ids.
        #[arg(long)]
        list: bool,
    },
    /// Run an exploratory experiment.
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Core,
    Stretch,
}

#[derive(Subcommand)]
enum Experiment {
    /// Fraction of atoms among random 0-containing subsets of [0, max].
    AtomDensity {
        #[arg(long, default_value_t = 14)]
        max: u64,
        #[arg(long, default_value_t = 500)]
        samples: u64,
    },
    /// Search for atoms of P_fin,0 whose image is not an atom of Mon(R).
    PhiTransport {
        #[arg(long, default_value_t = 9)]
        max: u64,
    },
}

impl Global {
    fn search(&self) -> SearchConfig {
        let mut c = SearchConfig::default().with_parallelism(self.parallelism);
        if let Some(n) = self.budget_nodes {
            c = c.with_max_nodes(n);
        }
        if let Some(s) = self.budget_seconds {
            c = c.with_max_seconds(s);
        }
        c
    }

    fn families(&self) -> FamilyArgs {
        FamilyArgs {
            minimal: self.minimal,
            seq: self.seq.clone(),
            r: self.r,
        }
    }
}

enum Failure {
    Usage(String),
    /// Budget ran out; carries the explored count and any certified lengths.
    Inconclusive(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconclusive { explored, partial } => {
                Failure::Inconclusive(json!({ "explored": explored, "partial_lengths": partial }))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(value: &Value, table: bool) {
    if !table {
        println!("{value}");
        return;
    }
    if let Value::Object(map) = value {
        for (k, v) in map {
            match v {
                Value::String(s) => println!("{k}: {s}"),
                other => println!("{k}: {other}"),
            }
        }
    } else {
        println!("{value}");
    }
}

fn pair(a: impl ToString, b: impl ToString) -> Value {
    json!([a.to_string(), b.to_string()])
}

/// Verdict and witness split, or `None` for an atom.
fn atom_verdict(target: Target, g: &Global) -> Result<(Value, Option<Value>), Failure> {
    let search = g.search();
    match g.monoid {
        Monoid::Mon => {
            let e = target.into_ideal();
            if e.is_unit() {
                return Err(Failure::Usage("the unit ideal is not an atom or a non-unit".into()));
            }
            let engine = Engine::new(&MonomialMonoid, search);
            let split = engine.first_split(&e)?;
            Ok((json!(e.to_string()), split.map(|(a, b)| pair(a, b))))
        }
        Monoid::Pfin0 => {
            let a = reduced_set(target)?;
            let engine = Engine::new(&ReducedPowerMonoid, search);
            let split = engine.first_split(&a)?;
            Ok((json!(a.to_string()), split.map(|(b, c)| pair(b, c))))
        }
        Monoid::Pfin => {
            let a = full_set(target)?;
            let (shift, a0) = reduce(&a);
            if a == NatSet::singleton(1) {
                return Ok((json!(a.to_string()), None));
            }
            if shift > 0 {
                let rest = NatSet::new(a.elements().iter().map(|&x| x - 1))?;
                return Ok((json!(a.to_string()), Some(pair(NatSet::singleton(1), rest))));
            }
            let engine = Engine::new(&ReducedPowerMonoid, search);
            let split = engine.first_split(&a0)?;
            Ok((json!(a.to_string()), split.map(|(b, c)| pair(b, c))))
        }
    }
}

fn reduced_set(target: Target) -> Result<NatSet, Failure> {
    let a = full_set(target)?;
    if !a.is_reduced() {
        return Err(Failure::Usage(format!("{a} does not contain 0; use --monoid pfin")));
    }
    if a == NatSet::zero() {
        return Err(Failure::Usage("{0} is the identity".into()));
    }
    Ok(a)
}

fn full_set(target: Target) -> Result<NatSet, Failure> {
    target
        .into_set()
        .map_err(|_| Failure::Usage("ideal targets need --monoid mon".into()))
}

fn lengths_of(target: Target, g: &Global) -> Result<(Value, LengthSet), Failure> {
    let search = g.search();
    match g.monoid {
        Monoid::Mon => {
            let e = target.into_ideal();
            let l = Engine::new(&MonomialMonoid, search).lengths(&e)?;
            Ok((json!(e.to_string()), l))
        }
        Monoid::Pfin0 => {
            let a = full_set(target)?;
            if !a.is_reduced() {
                return Err(Failure::Usage(format!("{a} does not contain 0; use --monoid pfin")));
            }
            let l = Engine::new(&ReducedPowerMonoid, search).lengths(&a)?;
            Ok((json!(a.to_string()), l))
        }
        Monoid::Pfin => {
            let a = full_set(target)?;
            let (shift, a0) = reduce(&a);
            let l0 = Engine::new(&ReducedPowerMonoid, search).lengths(&a0)?;
            Ok((json!(a.to_string()), l0.iter().map(|k| k + shift).collect()))
        }
    }
}

fn run(cli: Cli) -> Result<(Value, i32), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Atom { target } => {
            let t = parse_target(target, &g.families())?;
            let (shown, split) = atom_verdict(t, g)?;
            Ok((json!({ "target": shown, "atom": split.is_none(), "witness": split }), 0))
        }
        Command::Lengths { target } => {
            let t = parse_target(target, &g.families())?;
            let (shown, l) = lengths_of(t, g)?;
            let delta = l.delta_set().ok();
            let rho = l.elasticity().ok().map(|r| r.to_string());
            Ok((json!({ "target": shown, "lengths": l, "delta": delta, "rho": rho }), 0))
        }
        Command::Verify { suite, list } => {
            let suite = match suite {
                SuiteArg::Core => Suite::Core,
                SuiteArg::Stretch => Suite::Stretch,
            };
            if *list {
                let ids: Vec<Value> = verify::list(suite)
                    .into_iter()
                    .map(|(id, criterion, statement)| json!({ "id": id, "criterion": criterion, "statement": statement }))
                    .collect();
                if g.table {
                    for id in &ids {
                        println!("{}", id["id"].as_str().unwrap_or_default());
                    }
                    return Ok((Value::Null, 0));
                }
                return Ok((json!(ids), 0));
            }
            let config = VerifyConfig {
                search: g.search(),
                seed: g.seed,
                ..Default::default()
            };
            let report = verify::run_suite(suite, &config);
            if g.table {
                print!("{}", report.to_table());
                return Ok((Value::Null, report.exit_code()));
            }
            Ok((report.to_json(), report.exit_code()))
        }
        Command::Experiment(Experiment::AtomDensity { max, samples }) => {
            let r = atom_density(*max, *samples, g.seed, g.search())?;
            Ok((serde_json::to_value(r).expect("plain data"), 0))
        }
        Command::Experiment(Experiment::PhiTransport { max }) => {
            let r = phi_transport(*max, g.search())?;
            Ok((serde_json::to_value(r).expect("plain data"), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let table = cli.global.table;
    let verdict_key = match cli.command {
        Command::Lengths { .. } => "lengths",
        _ => "atom",
    };
    match run(cli) {
        Ok((value, code)) => {
            if !value.is_null() {
                emit(&value, table);
            }
            ExitCode::from(code as u8)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Inconclusive(detail)) => {
            emit(&json!({ verdict_key: "inconclusive", "witness": detail }), table);
            ExitCode::from(2)
        }
    }
}
