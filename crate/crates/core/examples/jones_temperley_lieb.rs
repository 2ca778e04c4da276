//! Kauffman bracket and Jones polynomial through the Temperley-Lieb transfer.

use ttknot::temperley_lieb::catalan;
use ttknot::{jones_from_braid, kauffman_bracket, torus_braid, BraidWord, Error, Result, DEFAULT_MAX_STRANDS};

fn main() -> Result<()> {
    let right = BraidWord::new(2, vec![1, 1, 1])?;
    println!("bracket of [1,1,1]   {}", kauffman_bracket(&right, DEFAULT_MAX_STRANDS)?.display_with("A"));
    println!("right trefoil        {}", jones_from_braid(&right, DEFAULT_MAX_STRANDS)?.display_with("t"));
    println!("left trefoil         {}", jones_from_braid(&right.mirror(), DEFAULT_MAX_STRANDS)?.display_with("t"));

    let figure_eight: BraidWord = "3;1,-2,1,-2".parse()?;
    println!("figure-eight         {}", jones_from_braid(&figure_eight, DEFAULT_MAX_STRANDS)?.display_with("t"));
    println!("T(3,5)               {}", jones_from_braid(&torus_braid(3, 5)?, DEFAULT_MAX_STRANDS)?.display_with("t"));

    for n in [6, 9, 12] {
        println!("basis size on {n} strands: {}", catalan(n));
    }
    match jones_from_braid(&torus_braid(13, 2)?, DEFAULT_MAX_STRANDS) {
        Err(e @ Error::TooManyStrands { .. }) => println!("T(13,2): {e}"),
        other => println!("T(13,2): unexpected {other:?}"),
    }
    Ok(())
}
