//! Alexander polynomials from the reduced Burau representation.

use ttknot::burau::{burau_of_word, knot_determinant};
use ttknot::{alexander_from_braid, alexander_span, torus_braid, twisted_torus_braid, Result, TwistedTorusParams};

fn main() -> Result<()> {
    let trefoil = torus_braid(2, 3)?;
    let m = burau_of_word(&torus_braid(3, 2)?)?;
    println!("Burau image of (s1 s2)^2 is {}x{}", m.dim(), m.dim());
    println!("T(2,3)  {}", alexander_from_braid(&trefoil)?.display_with("t"));

    for (p, q, r, s) in [(9, 5, 7, -1), (19, 13, 15, -1), (9, 5, 7, 1)] {
        let b = twisted_torus_braid(&TwistedTorusParams::new(p, q, r, s)?)?;
        let alex = alexander_from_braid(&b)?;
        println!(
            "TT({p},{q},{r},{s})  span {}, determinant {}\n  {}",
            alexander_span(&alex)?,
            knot_determinant(&b)?,
            alex.display_with("t")
        );
    }
    Ok(())
}
