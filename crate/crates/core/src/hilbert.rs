//! Hilbert–Samuel function `HF(n) = ℓ_A(A/I^(n+1))` of an `m`-primary monomial
//! ideal in a one-dimensional semigroup ring, its coefficients `e0`, `e1`, and
//! the numerator of the Hilbert series.
//!
//! In dimension one `HF(n) = e0 (n+1) - e1` once `n ≥ r - 1`, where `r` is the
//! reduction number, and `e1 = Σ_{n≥0} ℓ(I^(n+1)/QI^n)`. The two descriptions of
//! `e1` are computed along separate paths (colengths of powers versus relative
//! lengths against `QI^n`) and compared by the callers.

use serde::{Deserialize, Serialize};

use crate::error::HilbertError;
use crate::ideal::SemigroupIdeal;
use crate::tower::{reduction_valuation, PowerTower};

/// Hard cap for the adaptive table length.
pub const N_MAX_CAP: usize = 512;
/// Consecutive slope-`e0` steps required past the reduction number.
const STABLE_STEPS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "HilbertRepr", into = "HilbertRepr")]
pub struct HilbertData {
    /// `hf[n] = ℓ_A(A/I^(n+1))` for `n = 0..=n_max`.
    pub hf: Vec<u64>,
    /// Least `n0` with `HF(n) = e0 (n+1) - e1` for all `n ≥ n0`.
    pub stabilization_index: usize,
    pub e0: u64,
    pub e1_polynomial: i64,
    pub e1_huckaba: i64,
    pub h_poly: Vec<i64>,
}

impl HilbertData {
    pub fn compute(ideal: &SemigroupIdeal) -> Result<Self, HilbertError> {
        let mut tower = PowerTower::for_ideal(ideal)?;
        Self::from_tower(&mut tower, 0)
    }

    /// Like [`compute`](Self::compute) but tabulates at least `min_n_max + 1` values.
    pub fn compute_through(ideal: &SemigroupIdeal, min_n_max: usize) -> Result<Self, HilbertError> {
        let mut tower = PowerTower::for_ideal(ideal)?;
        Self::from_tower(&mut tower, min_n_max)
    }

    pub(crate) fn from_tower(
        tower: &mut PowerTower,
        min_n_max: usize,
    ) -> Result<Self, HilbertError> {
        let e0 = tower.reduction_valuation();
        let r = tower.reduction_number();
        let base = tower.ideal().base().clone();

        let mut n_max = (base.conductor() / e0) as usize + 4;
        while n_max < r + STABLE_STEPS {
            n_max *= 2;
        }
        if n_max > N_MAX_CAP {
            return Err(HilbertError::NotStabilized(N_MAX_CAP));
        }
        let n_max = n_max.max(min_n_max);

        tower.extend_to(n_max + 1);
        let hf = (0..=n_max)
            .map(|n| tower.power(n + 1).colength())
            .collect::<Result<Vec<_>, _>>()?;

        let e1_huckaba = (0..r)
            .map(|n| tower.power(n + 1).relative_length(&tower.q_times(n)))
            .sum::<Result<u64, _>>()? as i64;

        let mut hd = HilbertData {
            hf,
            stabilization_index: 0,
            e0,
            e1_polynomial: 0,
            e1_huckaba,
            h_poly: Vec::new(),
        };
        hd.stabilization_index =
            stabilization_index(&hd.hf, e0).ok_or(HilbertError::NotStabilized(n_max))?;
        hd.e1_polynomial = e1_via_polynomial(&hd)?;
        hd.h_poly = h_polynomial(&hd)?;
        Ok(hd)
    }

    pub fn n_max(&self) -> usize {
        self.hf.len() - 1
    }

    /// `ℓ_A(A/I)`.
    pub fn colength(&self) -> u64 {
        self.hf[0]
    }
}

/// Least `n0` such that `HF` is exactly linear of slope `e0` on `n0..=n_max`,
/// provided the last [`STABLE_STEPS`] steps already have slope `e0`.
fn stabilization_index(hf: &[u64], e0: u64) -> Option<usize> {
    let n_max = hf.len() - 1;
    if n_max < STABLE_STEPS {
        return None;
    }
    if (n_max + 1 - STABLE_STEPS..=n_max).any(|n| hf[n] != hf[n - 1] + e0) {
        return None;
    }
    let mut n0 = n_max;
    while n0 > 0 && hf[n0] == hf[n0 - 1] + e0 {
        n0 -= 1;
    }
    Some(n0)
}

/// `HF(n) = ℓ_A(A/I^(n+1))` for `n = 0..=n_max`, straight from colengths.
pub fn hilbert_function(ideal: &SemigroupIdeal, n_max: usize) -> Result<Vec<u64>, HilbertError> {
    reduction_valuation(ideal)?;
    let mut out = Vec::with_capacity(n_max + 1);
    let mut power = ideal.clone();
    for _ in 0..=n_max {
        out.push(power.colength()?);
        power = ideal.multiply(&power)?;
    }
    Ok(out)
}

/// `e0(I)`: the least valuation `a` of `I`, checked against the eventual slope
/// of the Hilbert function.
pub fn multiplicity(ideal: &SemigroupIdeal) -> Result<u64, HilbertError> {
    let a = reduction_valuation(ideal)?;
    let hd = HilbertData::compute(ideal)?;
    let n = hd.n_max();
    let slope = hd.hf[n] - hd.hf[n - 1];
    if slope != a {
        return Err(HilbertError::OracleMismatch(format!(
            "least valuation {a} but eventual Hilbert slope {slope}"
        )));
    }
    Ok(a)
}

/// `e1 = e0 (n+1) - HF(n)`, constant over the stabilized range.
pub fn e1_via_polynomial(hd: &HilbertData) -> Result<i64, HilbertError> {
    let n_max = hd.n_max();
    let n0 = stabilization_index(&hd.hf, hd.e0).ok_or(HilbertError::NotStabilized(n_max))?;
    let at = |n: usize| hd.e0 as i64 * (n as i64 + 1) - hd.hf[n] as i64;
    let e1 = at(n_max);
    debug_assert!((n0..=n_max).all(|n| at(n) == e1));
    Ok(e1)
}

/// `e1 = Σ_{n≥0} ℓ(I^(n+1)/QI^n)`, summed up to the reduction number.
pub fn e1_via_huckaba(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<i64, HilbertError> {
    let tower = PowerTower::new(ideal, reduction)?;
    let total = (0..tower.reduction_number())
        .map(|n| tower.power(n + 1).relative_length(&tower.q_times(n)))
        .sum::<Result<u64, _>>()?;
    Ok(total as i64)
}

/// Numerator `h(z) = (1 - z) HS_I(z)` with `h_i = ℓ(I^i/I^(i+1)) - ℓ(I^(i-1)/I^i)`,
/// trailing zeros removed.
pub fn h_polynomial(hd: &HilbertData) -> Result<Vec<i64>, HilbertError> {
    stabilization_index(&hd.hf, hd.e0).ok_or(HilbertError::NotStabilized(hd.n_max()))?;
    let hf: Vec<i64> = hd.hf.iter().map(|&v| v as i64).collect();
    let at = |n: isize| if n < 0 { 0 } else { hf[n as usize] };
    let mut h: Vec<i64> = (0..hf.len() as isize)
        .map(|i| at(i) - 2 * at(i - 1) + at(i - 2))
        .collect();
    while h.last() == Some(&0) {
        h.pop();
    }
    Ok(h)
}

#[derive(Serialize, Deserialize)]
struct HilbertRepr {
    hf: Vec<u64>,
    e0: u64,
    e1: i64,
    h_poly: Vec<i64>,
    n0: usize,
}

impl From<HilbertData> for HilbertRepr {
    fn from(hd: HilbertData) -> Self {
        HilbertRepr {
            hf: hd.hf,
            e0: hd.e0,
            e1: hd.e1_polynomial,
            h_poly: hd.h_poly,
            n0: hd.stabilization_index,
        }
    }
}

impl From<HilbertRepr> for HilbertData {
    fn from(r: HilbertRepr) -> Self {
        HilbertData {
            hf: r.hf,
            stabilization_index: r.n0,
            e0: r.e0,
            e1_polynomial: r.e1,
            e1_huckaba: r.e1,
            h_poly: r.h_poly,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;
    use std::sync::Arc;

    fn maximal(gens: &[u32]) -> SemigroupIdeal {
        SemigroupIdeal::maximal(&Arc::new(
            NumericalSemigroup::from_generators(gens).unwrap(),
        ))
    }

    /// `HF(n)` by direct enumeration: count elements of `H` below the least
    /// element of every `(n+1)`-fold sum of nonzero elements.
    fn brute_hf(gens: &[u32], n: usize) -> u64 {
        let h = NumericalSemigroup::from_generators(gens).unwrap();
        let bound = (h.conductor() + h.multiplicity() as u64 * (n as u64 + 2)) as usize;
        let nonzero: Vec<usize> = (1..bound).filter(|&x| h.contains(x as i64)).collect();
        let mut level = vec![false; bound];
        level[0] = true;
        for _ in 0..=n {
            let mut next = vec![false; bound];
            for (x, &on) in level.iter().enumerate() {
                if on {
                    for &y in &nonzero {
                        if x + y < bound {
                            next[x + y] = true;
                        }
                    }
                }
            }
            level = next;
        }
        (0..bound)
            .filter(|&x| h.contains(x as i64) && !level[x])
            .count() as u64
    }

    #[test]
    fn hilbert_function_examples() {
        let hf = hilbert_function(&maximal(&[7, 15, 18, 26, 27]), 12).unwrap();
        for (n, &v) in hf.iter().enumerate().skip(2) {
            assert_eq!(v, 7 * (n as u64 + 1) - 9);
        }
        let hf = hilbert_function(&maximal(&[8, 17, 21, 30, 39, 52]), 12).unwrap();
        for (n, &v) in hf.iter().enumerate().skip(3) {
            assert_eq!(v, 8 * (n as u64 + 1) - 11);
        }
        let hf = hilbert_function(&maximal(&[2, 3]), 6).unwrap();
        assert_eq!(hf, vec![1, 3, 5, 7, 9, 11, 13]);
    }

    #[test]
    fn hilbert_function_agrees_with_enumeration() {
        for gens in [&[3u32, 5][..], &[4, 6, 9], &[5, 6, 7], &[6, 13, 40, 41]] {
            let hf = hilbert_function(&maximal(gens), 5).unwrap();
            for (n, &v) in hf.iter().enumerate() {
                assert_eq!(v, brute_hf(gens, n), "{gens:?} n={n}");
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&maximal(&[6, 13, 33, 34, 41])).unwrap(), 6);
        assert_eq!(multiplicity(&maximal(&[2, 3])).unwrap(), 2);
        assert_eq!(multiplicity(&maximal(&[7, 15, 18, 26, 27])).unwrap(), 7);
    }

    #[test]
    fn unit_ideal_rejected() {
        let b = Arc::new(NumericalSemigroup::from_generators(&[2, 3]).unwrap());
        let unit = SemigroupIdeal::unit(&b);
        assert_eq!(hilbert_function(&unit, 3), Err(HilbertError::UnitIdeal));
        assert_eq!(HilbertData::compute(&unit), Err(HilbertError::UnitIdeal));
    }

    #[test]
    fn first_coefficient_examples() {
        let cases: [(&[u32], i64); 3] = [
            (&[7, 15, 18, 26, 27], 9),
            (&[8, 17, 21, 30, 39, 52], 11),
            (&[2, 3], 1),
        ];
        for (gens, e1) in cases {
            let m = maximal(gens);
            let hd = HilbertData::compute(&m).unwrap();
            assert_eq!(e1_via_polynomial(&hd).unwrap(), e1);
            let q = crate::tower::monomial_reduction(&m).unwrap();
            assert_eq!(e1_via_huckaba(&m, &q).unwrap(), e1);
        }
    }

    #[test]
    fn huckaba_rejects_other_reductions() {
        let m = maximal(&[3, 5]);
        let wrong = SemigroupIdeal::principal(m.base(), 5).unwrap();
        assert!(matches!(
            e1_via_huckaba(&m, &wrong),
            Err(HilbertError::NotMonomialReduction { expected: 3 })
        ));
    }

    #[test]
    fn minimal_reduction_number_one_gives_nagata_equality() {
        // I^2 = QI  ⇒  e1 = e0 - ℓ(A/I)
        for gens in [&[4u32, 5, 6, 7][..], &[3, 4, 5], &[5, 6, 7, 8, 9]] {
            let m = maximal(gens);
            let hd = HilbertData::compute(&m).unwrap();
            assert_eq!(hd.e1_polynomial, hd.e0 as i64 - 1);
        }
    }

    #[test]
    fn h_polynomial_examples() {
        let cases: [(&[u32], &[i64]); 3] = [
            (&[6, 13, 33, 40, 47, 48], &[1, 4, 0, 0, 0, 1]),
            (&[6, 13, 40, 41], &[1, 3, 1, 0, 1]),
            (&[2, 3], &[1, 1]),
        ];
        for (gens, h) in cases {
            let hd = HilbertData::compute(&maximal(gens)).unwrap();
            assert_eq!(h_polynomial(&hd).unwrap(), h);
            assert_eq!(hd.h_poly, h);
        }
    }

    #[test]
    fn numerator_identities_on_non_maximal_ideals() {
        let b = Arc::new(NumericalSemigroup::from_generators(&[5, 7, 11]).unwrap());
        for vals in [&[5u64, 7][..], &[7, 10, 11], &[10, 12, 14]] {
            let i = SemigroupIdeal::from_valuations(&b, vals).unwrap();
            let hd = HilbertData::compute(&i).unwrap();
            assert_eq!(hd.e1_polynomial, hd.e1_huckaba);
            assert_eq!(hd.h_poly.iter().sum::<i64>(), hd.e0 as i64);
            let weighted: i64 = hd
                .h_poly
                .iter()
                .enumerate()
                .map(|(i, &h)| i as i64 * h)
                .sum();
            assert_eq!(weighted, hd.e1_polynomial);
            assert_eq!(hd.h_poly[0], i.colength().unwrap() as i64);
        }
    }

    #[test]
    fn not_stabilized_on_short_table() {
        let hd = HilbertData {
            hf: vec![1, 3],
            stabilization_index: 0,
            e0: 2,
            e1_polynomial: 1,
            e1_huckaba: 1,
            h_poly: vec![],
        };
        assert!(matches!(
            h_polynomial(&hd),
            Err(HilbertError::NotStabilized(_))
        ));
    }

    #[test]
    fn json_shape() {
        let hd = HilbertData::compute(&maximal(&[2, 3])).unwrap();
        let v = serde_json::to_value(&hd).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["e0", "e1", "h_poly", "hf", "n0"]);
        assert_eq!(v["e1"], 1);
        let back: HilbertData = serde_json::from_value(v).unwrap();
        assert_eq!(back, hd);
    }
}
