// Random semigroups, each maximal ideal checked against the numerator and
// Nagata identities; prints a short summary.

use std::sync::Arc;

use numsg_hilbert::corpus::random_semigroup;
use numsg_hilbert::hilbert::{e1_via_huckaba, e1_via_polynomial, HilbertData};
use numsg_hilbert::{monomial_reduction, SemigroupIdeal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tight = 0;
    for _ in 0..50 {
        let h = Arc::new(random_semigroup(&mut rng, 40, 4)?);
        let m = SemigroupIdeal::maximal(&h);
        let hd = HilbertData::compute(&m)?;
        let e1 = e1_via_polynomial(&hd)?;
        assert_eq!(e1, e1_via_huckaba(&m, &monomial_reduction(&m)?)?);
        assert_eq!(hd.h_poly.iter().sum::<i64>(), hd.e0 as i64);
        assert!(e1 >= hd.e0 as i64 - 1);
        tight += (e1 == hd.e0 as i64 - 1) as usize;
    }
    println!("50 random semigroups checked, {tight} with e1 = e0 - 1");
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
