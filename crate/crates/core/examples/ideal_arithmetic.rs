// Monomial ideals as valuation sets: products, sums, intersections, lengths.

use std::sync::Arc;

use numsg_hilbert::{NumericalSemigroup, SemigroupIdeal};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = Arc::new(NumericalSemigroup::from_generators(&[3, 5])?);
    let i = SemigroupIdeal::from_valuations(&h, &[5, 6])?;
    println!("I = {i} over <{h}>");
    println!(
        "  finite part {:?}, everything from {:?} on",
        i.finite_part(),
        i.threshold()
    );
    println!("  l(A/I) = {}", i.colength()?);

    let i2 = i.multiply(&i)?;
    println!("I^2 = {i2}, l(A/I^2) = {}", i2.colength()?);

    let j5 = SemigroupIdeal::principal(&h, 5)?;
    let j6 = SemigroupIdeal::principal(&h, 6)?;
    let meet = j5.intersect(&j6)?;
    println!(
        "(u^5) ∩ (u^6) = {meet}, finite part {:?}",
        meet.finite_part()
    );
    println!("(u^5) + (u^6) = {}", j5.sum(&j6)?);
    println!("l((u^5)/(u^5)∩(u^6)) = {}", j5.relative_length(&meet)?);

    // ℓ(m^2/Qm) for Q = (u^6) in k[[u^6, u^13, u^40, u^41]]
    let h = Arc::new(NumericalSemigroup::from_generators(&[6, 13, 40, 41])?);
    let m = SemigroupIdeal::maximal(&h);
    let q = SemigroupIdeal::principal(&h, 6)?;
    let qm = q.multiply(&m)?;
    println!(
        "l(m^2/Qm) = {} over <{h}>",
        m.power(2).relative_length(&qm)?
    );
    println!("Q ∩ m^2 = Qm: {}", q.intersect(&m.power(2))? == qm);

    let json = serde_json::to_string(&i)?;
    println!("JSON: {json}");
    let back: SemigroupIdeal = serde_json::from_str(&json)?;
    assert_eq!(back, i);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
