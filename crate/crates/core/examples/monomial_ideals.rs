//! Monomial ideals of K[X,Y]: staircase arithmetic and the map from sets.

use idealfact::monomial_ideal::{build_a, build_b, build_c, build_tilde_b, phi};
use idealfact::{Engine, MonIdeal, MonomialMonoid, NatSet, SearchConfig, SumSequence};

fn main() -> idealfact::Result<()> {
    let c4 = build_c(4)?;
    let m = build_a(1)?;
    println!("c4 = {c4}, mdeg {}", c4.mdeg());
    println!("<X,Y> * c4 = {}", m.product(&c4)?);
    println!("c4 : <X,Y> = {}", c4.colon(&m));

    // non-minimal generators are dropped on construction
    let i: MonIdeal = "X^3, X^2 Y, X^3 Y^5, Y^4".parse()?;
    println!("parsed {i} from four generators; JSON {}", serde_json::to_string(&i).unwrap());

    let a: NatSet = "{0,1,3}".parse()?;
    let b: NatSet = "{0,2}".parse()?;
    let lhs = phi(&idealfact::power_monoid::sumset(&a, &b)?);
    let rhs = phi(&a).product(&phi(&b))?;
    println!("phi(A+B) = {lhs}, phi(A) phi(B) = {rhs}, equal: {}", lhs == rhs);

    let engine = Engine::new(&MonomialMonoid, SearchConfig::default());
    let seq = SumSequence::minimal(3)?;
    let candidates = [
        ("b_5", build_b(5)?),
        ("c4", c4.clone()),
        ("a_3", build_a(3)?),
        ("<X^5,Y^3>", MonIdeal::from_pairs(&[(5, 0), (0, 3)])?),
        ("tilde_b_3", build_tilde_b(&seq, 3)?),
    ];
    for (name, e) in &candidates {
        match engine.first_split(e)? {
            None => println!("{name} is an atom"),
            Some((x, y)) => println!("{name} = {x} * {y}"),
        }
    }
    Ok(())
}
