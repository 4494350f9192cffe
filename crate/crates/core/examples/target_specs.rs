//! The family mini-language used by the command line.

use idealfact::{parse_target, FamilyArgs, Target};

fn main() -> idealfact::Result<()> {
    let defaults = FamilyArgs { minimal: Some(3), ..Default::default() };
    for text in ["a_3", "c_5", "tilde_b --r 3", "I_B --seq 1,3,7", "B", "delta_odd 2", "{0,2,5}", "<X^2, Y^3>"] {
        match parse_target(text, &defaults)? {
            Target::Set(s) => println!("{text:<16} set   {s}"),
            Target::Ideal(i) => println!("{text:<16} ideal {i}"),
        }
    }
    Ok(())
}
