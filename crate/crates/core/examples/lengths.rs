//! Sets of lengths, their gaps and elasticity, and full factorization lists.

use idealfact::monomial_ideal::{build_a, build_I_C, diagonal_length_bound};
use idealfact::{Engine, Error, MonomialMonoid, SearchConfig, SumSequence};

fn main() -> idealfact::Result<()> {
    let engine = Engine::new(&MonomialMonoid, SearchConfig::default());
    for k in 2..=6 {
        let l = engine.lengths(&build_a(k)?)?;
        println!("L(a_{k}) = {l}, delta {:?}, rho {}", l.delta_set()?, l.elasticity()?);
    }

    let a4 = build_a(4)?;
    for z in engine.factorizations(&a4)?.iter() {
        let atoms: Vec<String> = z.atoms().iter().map(|u| u.to_string()).collect();
        println!("a_4 = {}", atoms.join(" * "));
    }

    let ic2 = build_I_C(&SumSequence::minimal(2)?)?;
    println!("L(I_C, n=2) = {}", engine.lengths(&ic2)?);

    // the n=3 ideal has millions of divisors; a small budget gives up cleanly
    let ic3 = build_I_C(&SumSequence::minimal(3)?)?;
    let small = Engine::new(&MonomialMonoid, SearchConfig::default().with_max_nodes(50_000));
    match small.lengths(&ic3) {
        Err(Error::Inconclusive { explored, .. }) => println!("I_C, n=3: inconclusive after {explored} nodes"),
        other => println!("I_C, n=3: {other:?}"),
    }
    println!(
        "its lengths are still bounded above by {:?}",
        diagonal_length_bound(&ic3, SearchConfig::default())?
    );
    Ok(())
}
