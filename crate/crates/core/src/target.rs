//! A small language for naming sets and ideals on the command line.
//!
//! ```text
//! a_5  b_3  c_7  c4          ideals ⟨X,Y⟩^k, ⟨X^i,Y^i⟩ and the staircases 𝔠_k
//! tilde_b --minimal 3 --r 3  the ideal 𝔟̃_r over a sequence
//! I_B --seq 1,3,7            Φ(B_n); likewise I_C
//! A --minimal 3              the sets A_n, B_n, C_n
//! beta_4  delta_odd_2  delta_even_3
//! {0,1,4} or [0,1,4]         a set literal
//! X^4, X^3 Y, Y^4            an ideal literal (also <...> or {"gens": ...})
//! ```
//!
//! Sequence and `r` parameters may appear inside the target text or be supplied as
//! defaults from the surrounding command line.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, SumSequence};
use crate::monomial_ideal::{self, MonIdeal};
use crate::power_monoid::NatSet;

/// What a target names: a finite set or a monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Set(NatSet),
    Ideal(MonIdeal),
}

impl Target {
    /// The ideal itself, or `Φ` of the set.
    pub fn into_ideal(self) -> MonIdeal {
        match self {
            Target::Set(s) => monomial_ideal::phi(&s),
            Target::Ideal(i) => i,
        }
    }

    pub fn into_set(self) -> Result<NatSet> {
        match self {
            Target::Set(s) => Ok(s),
            Target::Ideal(i) => Err(Error::domain(format!("{i} is an ideal, not a set"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Set(s) => write!(f, "{s}"),
            Target::Ideal(i) => write!(f, "{i}"),
        }
    }
}

/// Sequence parameters used when the target text does not give them.
#[derive(Debug, Clone, Default)]
pub struct FamilyArgs {
    pub minimal: Option<usize>,
    pub seq: Option<SumSequence>,
    pub r: Option<usize>,
}

impl FamilyArgs {
    fn sequence(&self) -> Result<SumSequence> {
        match (&self.seq, self.minimal) {
            (Some(s), _) => Ok(s.clone()),
            (None, Some(n)) => SumSequence::minimal(n),
            (None, None) => Err(Error::parse("this family needs --minimal n or --seq a1,a2,...")),
        }
    }
}

fn looks_like_ideal(s: &str) -> bool {
    s.contains("gens") || s.chars().any(|c| matches!(c, 'X' | 'Y' | 'x' | 'y' | '<' | '⟨'))
}

fn looks_like_set(s: &str) -> bool {
    s.starts_with('{') || s.starts_with('[') || s.starts_with(|c: char| c.is_ascii_digit())
}

/// Splits `name_12`, `name12` or `name_{12}` into the name and the index.
fn split_index(word: &str) -> Option<(&str, u64)> {
    let cut = word.find(|c: char| c.is_ascii_digit() || c == '{')?;
    let name = word[..cut].trim_end_matches('_');
    let digits = word[cut..].trim_start_matches('{').trim_end_matches('}');
    Some((name, digits.parse().ok()?))
}

fn parse_index(tok: Option<&str>, name: &str) -> Result<u64> {
    tok.ok_or_else(|| Error::parse(format!("{name} needs an index")))?
        .parse()
        .map_err(|_| Error::parse(format!("bad index for {name}")))
}

/// Parses a target; `defaults` fills in missing `--minimal`, `--seq`, `--r`.
pub fn parse_target(text: &str, defaults: &FamilyArgs) -> Result<Target> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("empty target"));
    }
    let head = text.split_whitespace().next().unwrap();
    let is_family_word = head.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && !head.contains(',')
        && !head.contains('^');
    if !is_family_word || text.contains(',') && !text.contains("--") {
        if looks_like_ideal(text) && !text.starts_with('[') {
            return Ok(Target::Ideal(text.parse()?));
        }
        if looks_like_set(text) {
            return Ok(Target::Set(text.parse()?));
        }
        if looks_like_ideal(text) {
            return Ok(Target::Ideal(text.parse()?));
        }
        return Err(Error::parse(format!("cannot read target {text:?}")));
    }

    let mut args = defaults.clone();
    let mut words: Vec<&str> = Vec::new();
    let mut toks = text.split_whitespace();
    while let Some(t) = toks.next() {
        match t {
            "--minimal" => {
                let v = toks.next().ok_or_else(|| Error::parse("--minimal needs a value"))?;
                args.minimal = Some(v.parse().map_err(|_| Error::parse("bad --minimal value"))?);
                args.seq = None;
            }
            "--seq" => {
                let v = toks.next().ok_or_else(|| Error::parse("--seq needs a value"))?;
                args.seq = Some(v.parse()?);
            }
            "--r" => {
                let v = toks.next().ok_or_else(|| Error::parse("--r needs a value"))?;
                args.r = Some(v.parse().map_err(|_| Error::parse("bad --r value"))?);
            }
            _ if t.starts_with("--") => return Err(Error::parse(format!("unknown option {t}"))),
            _ => words.push(t),
        }
    }

    let (name, index) = match split_index(words[0]) {
        Some((n, i)) => (n.to_string(), Some(i)),
        None => (words[0].to_string(), None),
    };
    let index = match index {
        Some(i) => Some(i),
        None => words.get(1).map(|w| parse_index(Some(w), &name)).transpose()?,
    };
    let need = |what: &str| index.ok_or_else(|| Error::parse(format!("{what} needs an index, e.g. {what}_3")));

    Ok(match name.as_str() {
        "a" => Target::Ideal(monomial_ideal::build_a(need("a")?)?),
        "b" => Target::Ideal(monomial_ideal::build_b(need("b")?)?),
        "c" => Target::Ideal(monomial_ideal::build_c(need("c")?)?),
        "tilde_b" | "tb" => {
            let r = match (index, args.r) {
                (_, Some(r)) => r,
                (Some(i), None) => i as usize,
                (None, None) => return Err(Error::parse("tilde_b needs --r k")),
            };
            Target::Ideal(monomial_ideal::build_tilde_b(&args.sequence()?, r)?)
        }
        "I_B" | "i_b" | "IB" => Target::Ideal(monomial_ideal::build_I_B(&args.sequence()?)?),
        "I_C" | "i_c" | "IC" => Target::Ideal(monomial_ideal::build_I_C(&args.sequence()?)?),
        "A" => Target::Set(families::build_a(&args.sequence()?)?),
        "B" => Target::Set(families::build_b(&args.sequence()?)?),
        "C" => Target::Set(families::build_c(&args.sequence()?)?),
        "beta" => Target::Set(families::build_beta(need("beta")?)?),
        "delta_odd" => Target::Set(families::build_delta_odd(need("delta_odd")?)?),
        "delta_even" => Target::Set(families::build_delta_even(need("delta_even")?)?),
        _ if looks_like_ideal(text) => Target::Ideal(text.parse()?),
        _ => return Err(Error::parse(format!("unknown family {name:?}"))),
    })
}
