//! Exact rational checks on homogeneous ideals that monomial arithmetic cannot see.

use idealfact::graded_ideal::{c4_factors, min_degree_piece_check, GradedIdeal2};
use idealfact::monomial_ideal::{build_b, build_c};

fn main() -> idealfact::Result<()> {
    let (f, g) = c4_factors();
    let product = f.product(&g);
    let c4 = GradedIdeal2::from_monomial(&build_c(4)?);
    for t in 0..=5 {
        println!("degree {t}: rank {} vs {}", product.rank(t), c4.rank(t));
    }
    println!("<X^2, XY + Y^2> <X^2, XY - Y^2> = c4: {}", product.equals(&c4));

    let (b2, b3) = (build_b(2)?, build_b(3)?);
    println!("lowest piece of b2*b3 is the product of the lowest pieces: {}", min_degree_piece_check(&b2, &b3));
    Ok(())
}
