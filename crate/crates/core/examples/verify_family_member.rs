//! Verifies one member of the composite family at every level.
//!
//! Usage: `cargo run --release --example verify_family_member -- [a k1 k2]`
//! (defaults to `1 2 2`).

use ttknot::family::{bunch_certificate, family_instantiate, family_verify};
use ttknot::{FamilyParams, Level, Result, VerifyOptions};

fn main() -> Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (a, k1, k2) = match args[..] {
        [a, k1, k2] => (a, k1, k2),
        _ => (1, 2, 2),
    };
    let fp = FamilyParams::new(a, k1, k2)?;
    let inst = family_instantiate(fp)?;
    println!("{} should decompose as {}", inst.lhs, inst.rhs);

    let cert = bunch_certificate(fp)?;
    println!(
        "bunches  p {:?}\n         q {:?}\n         r {:?}",
        cert.p_partition, cert.q_partition, cert.r_partition
    );

    for level in [Level::Alexander, Level::Standard, Level::Full] {
        print!("{}", family_verify(fp, VerifyOptions::at(level))?.summary());
    }
    Ok(())
}
