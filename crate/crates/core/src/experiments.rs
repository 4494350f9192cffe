//! Exploratory computations whose outcomes are reported, not asserted.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::engine::{Engine, SearchConfig};
use crate::error::{Error, Result};
use crate::monomial_ideal::{phi, MonomialMonoid};
use crate::power_monoid::{NatSet, ReducedPowerMonoid};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AtomDensity {
    pub max: u64,
    pub samples: u64,
    pub seed: u64,
    pub atoms: u64,
    pub fraction: f64,
}

/// Samples uniform 0-containing subsets of `[0, max]` other than `{0}` and
/// counts the atoms of `P_fin,0` among them.
pub fn atom_density(max: u64, samples: u64, seed: u64, config: SearchConfig) -> Result<AtomDensity> {
    if samples == 0 {
        return Err(Error::domain("atom-density needs at least one sample"));
    }
    if !(1..=40).contains(&max) {
        return Err(Error::domain(format!("atom-density needs 1 <= max <= 40, got {max}")));
    }
    let engine = Engine::new(&ReducedPowerMonoid, config);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut atoms = 0;
    for _ in 0..samples {
        let a = loop {
            let s = NatSet::new(std::iter::once(0).chain((1..=max).filter(|_| rng.gen_bool(0.5))))?;
            if s != NatSet::zero() {
                break s;
            }
        };
        if engine.is_atom(&a)? {
            atoms += 1;
        }
    }
    Ok(AtomDensity {
        max,
        samples,
        seed,
        atoms,
        fraction: atoms as f64 / samples as f64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiTransport {
    pub max: u64,
    /// Atoms of `P_fin,0` with maximum at most `max` that were examined.
    pub atoms_checked: u64,
    /// Atoms whose image under `Φ` factors in `Mon(R)`.
    pub counterexamples: Vec<NatSet>,
}

/// Checks, for every atom `A` of `P_fin,0` with `max A <= max`, whether `Φ(A)`
/// is an atom of `Mon(R)`.
pub fn phi_transport(max: u64, config: SearchConfig) -> Result<PhiTransport> {
    if !(1..=16).contains(&max) {
        return Err(Error::domain(format!("phi-transport needs 1 <= max <= 16, got {max}")));
    }
    let sets = Engine::new(&ReducedPowerMonoid, config.clone());
    let ideals = Engine::new(&MonomialMonoid, config);
    let mut atoms_checked = 0;
    let mut counterexamples = Vec::new();
    for mask in 1u64..1 << max {
        let a = NatSet::new(std::iter::once(0).chain((1..=max).filter(|&i| mask >> (i - 1) & 1 == 1)))?;
        if !sets.is_atom(&a)? {
            continue;
        }
        atoms_checked += 1;
        if !ideals.is_atom(&phi(&a))? {
            counterexamples.push(a);
        }
    }
    Ok(PhiTransport {
        max,
        atoms_checked,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_is_reproducible() {
        let cfg = SearchConfig::default();
        let a = atom_density(10, 50, 7, cfg.clone()).unwrap();
        let b = atom_density(10, 50, 7, cfg.clone()).unwrap();
        assert_eq!(a, b);
        assert!((0.0..=1.0).contains(&a.fraction));
        assert!(atom_density(10, 0, 7, cfg).is_err());
    }

    #[test]
    fn small_transport_search() {
        let r = phi_transport(6, SearchConfig::default()).unwrap();
        // {0,1}, {0,2}, ... every reduced atom up to 6
        assert!(r.atoms_checked > 10);
        assert!(r.counterexamples.is_empty());
    }
}
