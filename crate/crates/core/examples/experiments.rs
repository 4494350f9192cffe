//! The two exploratory experiments: how common atoms are among random sets,
//! and whether set atoms stay atoms as monomial ideals.

use idealfact::experiments::{atom_density, phi_transport};
use idealfact::SearchConfig;

fn main() -> idealfact::Result<()> {
    for max in [6, 10, 14, 18] {
        let d = atom_density(max, 400, 7, SearchConfig::default())?;
        println!("max {max:>2}: {:>3} of {} sampled sets are atoms ({:.3})", d.atoms, d.samples, d.fraction);
    }
    let t = phi_transport(9, SearchConfig::default())?;
    println!(
        "{} set atoms with max <= 9 checked, counterexamples: {:?}",
        t.atoms_checked, t.counterexamples
    );
    Ok(())
}
