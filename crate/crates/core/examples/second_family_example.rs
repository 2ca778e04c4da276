//! The 19-strand family member: exact Alexander comparison and a JSON
//! report with Jones recorded as skipped.

use ttknot::family::family_verify;
use ttknot::{FamilyParams, Result, VerifyOptions};

fn main() -> Result<()> {
    let opts = VerifyOptions {
        timing: true,
        ..VerifyOptions::default()
    };
    let report = family_verify(FamilyParams::new(2, 4, 2)?, opts)?;
    print!("{}", report.summary());
    println!("{}", serde_json::to_string(&report).unwrap());
    Ok(())
}
