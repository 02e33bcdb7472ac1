// Frobenius number, gaps, Apéry sets and type of a few numerical semigroups.

use numsg_hilbert::NumericalSemigroup;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for gens in [
        vec![3, 5],
        vec![7, 15, 18, 26, 27],
        vec![8, 17, 21, 30, 39, 52],
        vec![6, 13, 40, 41, 52],
    ] {
        let h = NumericalSemigroup::from_generators(&gens)?;
        println!("<{h}>");
        println!(
            "  multiplicity {}, embedding dimension {}",
            h.multiplicity(),
            h.embedding_dimension()
        );
        println!(
            "  Frobenius {}, conductor {}, genus {}",
            h.frobenius(),
            h.conductor(),
            h.genus()
        );
        println!(
            "  Apéry set w.r.t. {}: {:?}",
            h.multiplicity(),
            h.apery_set(h.multiplicity() as u64)?
        );
        println!(
            "  pseudo-Frobenius {:?}, type {}",
            h.pseudo_frobenius()?,
            h.semigroup_type()?
        );
        if h.minimal_generators().len() < gens.len() {
            println!("  (dropped redundant generators from {gens:?})");
        }
    }

    // Generating sets without a coprime pair still work.
    let h = NumericalSemigroup::from_generators(&[6, 10, 15])?;
    println!("<{h}>: Frobenius {}", h.frobenius());
    assert_eq!(h.frobenius(), 29);

    match NumericalSemigroup::from_generators(&[4, 6]) {
        Err(e) => println!("<4,6> rejected: {e}"),
        Ok(_) => unreachable!("gcd 2"),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
