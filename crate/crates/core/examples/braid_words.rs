//! Torus and twisted torus braid words, closures and PD export.

use ttknot::{torus_braid, twisted_torus_braid, BraidWord, Result, TwistedTorusParams};

fn main() -> Result<()> {
    let trefoil = torus_braid(2, 3)?;
    println!("T(2,3)           {trefoil}");
    println!("PD code          {}", trefoil.closure_pd_code()?);

    for (p, q, r, s) in [(9, 5, 7, -1), (19, 13, 15, -1)] {
        let b = twisted_torus_braid(&TwistedTorusParams::new(p, q, r, s)?)?;
        println!(
            "TT({p},{q},{r},{s})  {} strands, {} letters, writhe {}, knot {}",
            b.strands(),
            b.len(),
            b.writhe(),
            b.is_knot_closure()
        );
    }

    let link = torus_braid(2, 4)?;
    println!("T(2,4) closes to {} components", link.closure_components());

    let word: BraidWord = "3;1,-2,1,-2".parse()?;
    let sum = trefoil.connected_sum(&word)?;
    println!("trefoil # figure-eight  {sum}");
    println!("stabilized              {}", word.stabilize(true));
    Ok(())
}
