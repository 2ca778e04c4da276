//! Sweeps a window of the family in parallel and tabulates the verdicts.

use ttknot::family::{family_enumerate, family_verify_batch};
use ttknot::{Level, Result, VerifyOptions};

fn main() -> Result<()> {
    let grid = family_enumerate(3, 4, 4)?;
    let reports = family_verify_batch(&grid, VerifyOptions::at(Level::Standard));
    println!("{:>3} {:>3} {:>3}  {:<18} verdict", "a", "k1", "k2", "twisted torus");
    for (fp, report) in grid.iter().zip(reports) {
        let report = report?;
        println!(
            "{:>3} {:>3} {:>3}  {:<18} {}",
            fp.a,
            fp.k1,
            fp.k2,
            report.lhs,
            report.verdict.as_str()
        );
    }
    Ok(())
}
