// Stretchedness, k, r, Λ and the small-rank characterizations.

use std::sync::Arc;

use numsg_hilbert::stretched::{self, CheckStatus};
use numsg_hilbert::{monomial_reduction, ClassifyError, NumericalSemigroup, SemigroupIdeal};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases: [&[u32]; 5] = [
        &[7, 15, 18, 26, 27],
        &[8, 17, 21, 30, 39, 52],
        &[6, 13, 33, 40, 47],
        &[4, 5, 6, 7],
        &[5, 6, 7],
    ];
    for gens in cases {
        let h = Arc::new(NumericalSemigroup::from_generators(gens)?);
        let m = SemigroupIdeal::maximal(&h);
        let q = monomial_reduction(&m)?;
        let witness = stretched::is_stretched(&m, &q)?;
        let rep = match stretched::classify(&m, &q) {
            Ok(rep) => rep,
            Err(ClassifyError::TheoremViolation(v)) => {
                println!("<{h}> violates {:?}", v.failed);
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        println!("<{h}>");
        println!(
            "  Q∩m^2 = Qm: {}, l(Q+m^2/Q+m^3) = {} -> stretched: {}",
            witness.intersection_equal, witness.length, rep.stretched
        );
        println!(
            "  k = {}, r = {}, Λ = {:?}, rank = {}, G CM: {}",
            rep.k, rep.r, rep.lambda, rep.rank, rep.g_cm
        );
        if let Some(p) = &rep.pattern {
            println!("  matches {p}");
        }
        let passed: Vec<&str> = rep
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Pass)
            .map(|c| c.name.as_str())
            .collect();
        println!("  passed: {}", passed.join(" "));
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
