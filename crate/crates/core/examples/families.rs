//! Super-increasing sequences and the set families built from them.

use idealfact::families::{build_a, build_b, build_c, build_delta_even, build_delta_odd};
use idealfact::power_monoid::{is_atom_reduced, lengths_reduced};
use idealfact::SumSequence;

fn main() -> idealfact::Result<()> {
    for n in 2..=4 {
        let seq = SumSequence::minimal(n)?;
        let (a, b, c) = (build_a(&seq)?, build_b(&seq)?, build_c(&seq)?);
        println!("n = {n}, sequence {seq}");
        println!("  A = {a}");
        println!("  B = {b}  (atom: {})", is_atom_reduced(&b)?);
        println!("  C has {} elements, lengths {}", c.len(), lengths_reduced(&c)?);
    }

    // any sequence passing both growth conditions works, not only the minimal one
    let seq: SumSequence = "1,4,11,27".parse()?;
    println!("custom {seq}: a_{{1,3}} = {}", seq.subset_sum(&[1, 3])?);
    match "1,2,5".parse::<SumSequence>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected 1,2,5: {e}"),
    }

    println!("odd staircase {}, even staircase {}", build_delta_odd(3)?, build_delta_even(3)?);
    Ok(())
}
