//! Parsing knot expressions and evaluating their invariants.

use ttknot::family::verify_pair;
use ttknot::knot_expr::{expr_alexander, expr_jones, expr_to_braid};
use ttknot::{KnotExpr, Level, Result, VerifyOptions, DEFAULT_MAX_STRANDS};

fn main() -> Result<()> {
    for text in ["T(2,3)", "Mirror(T(2,3))", "Sum(T(2,3);T(2,-5))", "TT(9,5,7,-1)"] {
        let e: KnotExpr = text.parse()?;
        println!(
            "{e}\n  braid    {}\n  alexander {}\n  jones    {}",
            expr_to_braid(&e)?,
            expr_alexander(&e)?.display_with("t"),
            expr_jones(&e, DEFAULT_MAX_STRANDS)?.display_with("t"),
        );
    }

    if let Err(e) = "Sum(T(2,3); T(4,6))".parse::<KnotExpr>() {
        println!("rejected: {e}");
    }

    let trefoil = KnotExpr::torus(2, 3)?;
    let report = verify_pair(&trefoil, &KnotExpr::mirror(trefoil.clone()), VerifyOptions::at(Level::Full))?;
    print!("{}", report.summary());
    Ok(())
}
