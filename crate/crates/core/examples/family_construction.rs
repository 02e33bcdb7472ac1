// The stretched family built from (b, e, ℓ, b_n): validation, closed-form
// predictions and verification against the engine.

use numsg_hilbert::family::{self, FamilyParams, Preset};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = FamilyParams::new(2, 6, 3, [(4, 6), (5, 6)]);
    let predicted = params.expected_profile()?;
    println!("{}", serde_json::to_string(&params)?);
    println!(
        "  predicted k={} r={} Λ={:?} HF = 6(n+1) - {}",
        predicted.k, predicted.r, predicted.lambda, predicted.hf_constant
    );
    let rep = family::verify_family(&params)?;
    println!(
        "  semigroup {:?}, all assertions pass: {}",
        rep.semigroup,
        rep.passed()
    );

    let bad = FamilyParams::new(2, 6, 2, [(3, 4), (4, 6), (5, 6)]);
    for v in bad.violations() {
        println!("invalid: {v}");
    }

    for preset in Preset::ALL {
        let inst = preset.instantiate(3, 9)?;
        let rep = family::verify_family(&inst.params)?;
        println!(
            "{:<6} b=3 e=9 -> {:?}: k={} r={} Λ={:?} rank={} (filled {:?})",
            preset.name(),
            rep.semigroup,
            rep.computed.k,
            rep.computed.r,
            rep.computed.lambda,
            rep.classification.rank,
            inst.filled
        );
    }

    let (all, _) = family::sweep(&[2], 5..=8, usize::MAX);
    let passing = all
        .iter()
        .filter(|p| family::verify_family(p).is_ok())
        .count();
    println!(
        "b=2, e=5..=8: {passing}/{} parameter tuples verified",
        all.len()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
