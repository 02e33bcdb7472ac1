//! Powers `I^n` and products `QI^n` for a monomial ideal and its monomial
//! reduction `Q = (u^a)`, computed once and shared by the Hilbert and
//! classification passes.

use crate::error::HilbertError;
use crate::ideal::SemigroupIdeal;

#[derive(Clone, Debug)]
pub struct PowerTower {
    ideal: SemigroupIdeal,
    reduction: SemigroupIdeal,
    /// `powers[n] = I^n`.
    powers: Vec<SemigroupIdeal>,
    reduction_number: usize,
}

/// Valuation `a` of the monomial reduction `Q = (u^a)` of `I`.
pub fn reduction_valuation(ideal: &SemigroupIdeal) -> Result<u64, HilbertError> {
    if ideal.is_zero() {
        return Err(HilbertError::Ideal(crate::error::IdealError::ZeroIdeal));
    }
    if ideal.is_unit() {
        return Err(HilbertError::UnitIdeal);
    }
    Ok(ideal.min_valuation().expect("nonzero"))
}

/// `(u^a)` with `a` the least valuation of `I`.
pub fn monomial_reduction(ideal: &SemigroupIdeal) -> Result<SemigroupIdeal, HilbertError> {
    let a = reduction_valuation(ideal)?;
    Ok(SemigroupIdeal::principal(ideal.base(), a)?)
}

/// Search cap for the reduction number.
pub fn reduction_search_cap(ideal: &SemigroupIdeal) -> usize {
    let base = ideal.base();
    let t = ideal.threshold().unwrap_or(0);
    (base.conductor().max(t) + ideal.min_valuation().unwrap_or(0)) as usize
}

impl PowerTower {
    pub fn new(ideal: &SemigroupIdeal, reduction: &SemigroupIdeal) -> Result<Self, HilbertError> {
        let a = reduction_valuation(ideal)?;
        if *reduction != SemigroupIdeal::principal(ideal.base(), a)? {
            return Err(HilbertError::NotMonomialReduction { expected: a });
        }
        let cap = reduction_search_cap(ideal);
        let mut powers = vec![SemigroupIdeal::unit(ideal.base()), ideal.clone()];
        let mut n = 0;
        loop {
            // Is I^(n+1) = Q I^n ?
            let qin = reduction.multiply(&powers[n])?;
            if qin == powers[n + 1] {
                break;
            }
            n += 1;
            if n > cap {
                return Err(HilbertError::NotAReduction(cap));
            }
            let next = ideal.multiply(&powers[n])?;
            powers.push(next);
        }
        Ok(Self {
            ideal: ideal.clone(),
            reduction: reduction.clone(),
            powers,
            reduction_number: n,
        })
    }

    pub fn for_ideal(ideal: &SemigroupIdeal) -> Result<Self, HilbertError> {
        let q = monomial_reduction(ideal)?;
        Self::new(ideal, &q)
    }

    pub fn ideal(&self) -> &SemigroupIdeal {
        &self.ideal
    }

    pub fn reduction(&self) -> &SemigroupIdeal {
        &self.reduction
    }

    pub fn reduction_valuation(&self) -> u64 {
        self.reduction.min_valuation().expect("nonzero")
    }

    /// `r = min{n ≥ 0 : I^(n+1) = QI^n}`.
    pub fn reduction_number(&self) -> usize {
        self.reduction_number
    }

    pub fn extend_to(&mut self, n: usize) {
        while self.powers.len() <= n {
            let last = self.powers.last().expect("nonempty");
            let next = self.ideal.multiply(last).expect("same base");
            self.powers.push(next);
        }
    }

    /// `I^n`; call [`extend_to`](Self::extend_to) first.
    pub fn power(&self, n: usize) -> &SemigroupIdeal {
        &self.powers[n]
    }

    pub fn computed_up_to(&self) -> usize {
        self.powers.len() - 1
    }

    /// `QI^n`.
    pub fn q_times(&self, n: usize) -> SemigroupIdeal {
        self.reduction.multiply(&self.powers[n]).expect("same base")
    }
}
