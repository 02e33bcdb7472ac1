// Hilbert function, e0, e1 and the h-polynomial, each computed two ways.

use std::sync::Arc;

use numsg_hilbert::hilbert::{self, HilbertData};
use numsg_hilbert::{monomial_reduction, NumericalSemigroup, SemigroupIdeal};

fn show(i: &SemigroupIdeal) -> Result<(), Box<dyn std::error::Error>> {
    let hd = HilbertData::compute(i)?;
    let q = monomial_reduction(i)?;
    println!("{i} over <{}>", i.base());
    println!("  HF        {:?}", &hd.hf[..hd.hf.len().min(10)]);
    println!("  linear from n = {}", hd.stabilization_index);
    println!(
        "  e0 = {}, e1 = {} (from HF), {} (from quotient lengths)",
        hd.e0,
        hilbert::e1_via_polynomial(&hd)?,
        hilbert::e1_via_huckaba(i, &q)?
    );
    println!("  h         {:?}", hd.h_poly);
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for gens in [
        [7, 15, 18, 26, 27].as_slice(),
        &[8, 17, 21, 30, 39, 52],
        &[5, 6, 7, 8, 9],
    ] {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        show(&SemigroupIdeal::maximal(&h))?;
    }
    let h = Arc::new(NumericalSemigroup::from_generators(&[5, 7, 11])?);
    show(&SemigroupIdeal::from_valuations(&h, &[7, 10])?)?;

    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 5])?);
    match HilbertData::compute(&SemigroupIdeal::unit(&h)) {
        Err(e) => println!("unit ideal: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
