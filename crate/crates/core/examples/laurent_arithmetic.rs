//! Exact Laurent polynomial arithmetic: products, exact quotients and
//! Alexander normalization.

use ttknot::{LaurentPoly, Result};

fn main() -> Result<()> {
    let trefoil = LaurentPoly::from_terms([(0, 1), (1, -1), (2, 1)]);
    let cinquefoil = LaurentPoly::from_terms([(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)]);
    let product = &trefoil * &cinquefoil;
    println!("product      {}", product.display_with("t"));
    println!("quotient     {}", product.div_exact(&trefoil)?.display_with("t"));

    let shifted = product.shift(-3).scale(&(-1).into());
    println!("shifted      {}", shifted.display_with("t"));
    println!("normalized   {}", shifted.normalize_alexander()?.display_with("t"));
    println!("mirror       {}", trefoil.shift(-1).invert_var().display_with("t"));
    println!("value at -1  {}", product.eval_unit(-1)?);

    let not_divisible = trefoil.div_exact(&LaurentPoly::from_terms([(0, 2), (1, 1)]));
    println!("inexact      {}", not_divisible.unwrap_err());
    println!("json         {}", serde_json::to_string(&trefoil.to_serial("t")).unwrap());
    Ok(())
}
