//! Finite sets under setwise addition: sumsets, atoms and their splits.
//!
//! Run with `cargo run --example sumsets`.

use idealfact::power_monoid::{decompose_reduced, is_atom_reduced, is_sum_free, lengths_reduced, reduce, sumset};
use idealfact::NatSet;

fn main() -> idealfact::Result<()> {
    let a: NatSet = "{0,1,3}".parse()?;
    let b: NatSet = "{0,2}".parse()?;
    let s = sumset(&a, &b)?;
    println!("{a} + {b} = {s}");
    println!("max is additive: {} + {} = {}", a.max_element(), b.max_element(), s.max_element());

    for text in ["{0,1,2}", "{0,1,2,4}", "{0,2,3,5}", "{0,1,3,4,7,8,10,11}"] {
        let set: NatSet = text.parse()?;
        let splits = decompose_reduced(&set)?;
        print!("{set}: atom = {}", is_atom_reduced(&set)?);
        if let Some((x, y)) = splits.first() {
            print!(", e.g. {x} + {y}");
        }
        println!(", {} split(s), lengths {}", splits.len(), lengths_reduced(&set)?);
    }

    // sum-free sets with 0 adjoined are always atoms
    let free: NatSet = "{3,4,5}".parse()?;
    let with_zero = NatSet::with_zero(&free);
    println!("{free} sum-free: {}; {with_zero} atom: {}", is_sum_free(&free), is_atom_reduced(&with_zero)?);

    // every finite set is a translate of one containing 0
    let (shift, base) = reduce(&"{5,6,9}".parse()?);
    println!("{{5,6,9}} = {{{shift}}} + {base}");
    Ok(())
}
