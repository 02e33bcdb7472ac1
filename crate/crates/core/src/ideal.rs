//! Monomial ideals of `A = k[[H]]`, stored as valuation sets `E ⊆ H` with
//! `E + H ⊆ E`.
//!
//! A nonzero ideal is cofinite, so it is kept as a bitmap of `0..T` together with
//! the threshold `T`, the least integer such that `[T, ∞) ⊆ E`. Every length
//! `ℓ_A(J1/J2)` between nested monomial ideals is the number of valuations in
//! `E1 \ E2`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::IdealError;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct SemigroupIdeal {
    base: Arc<NumericalSemigroup>,
    /// `None` for the zero ideal.
    threshold: Option<u64>,
    below: Bits,
}

impl SemigroupIdeal {
    /// `E = ∪ (v + H)` over the given valuations.
    pub fn from_valuations(
        base: &Arc<NumericalSemigroup>,
        vals: &[u64],
    ) -> Result<Self, IdealError> {
        if vals.is_empty() {
            return Err(IdealError::EmptyValuations);
        }
        if let Some(&v) = vals.iter().find(|&&v| !base.contains(v as i64)) {
            return Err(IdealError::GeneratorNotInRing(v));
        }
        let least = *vals.iter().min().expect("nonempty");
        let bound = (least + base.conductor()) as usize;
        let h = base.membership(bound);
        let mut dense = Bits::zeros(bound);
        for &v in vals {
            dense.or_shifted(&h, v as usize);
        }
        Ok(Self::from_dense(base.clone(), dense))
    }

    pub fn principal(base: &Arc<NumericalSemigroup>, a: u64) -> Result<Self, IdealError> {
        Self::from_valuations(base, &[a])
    }

    /// The ring itself, `0 + H`.
    pub fn unit(base: &Arc<NumericalSemigroup>) -> Self {
        Self::from_valuations(base, &[0]).expect("0 lies in every semigroup")
    }

    /// `m = H \ {0}`.
    pub fn maximal(base: &Arc<NumericalSemigroup>) -> Self {
        let gens: Vec<u64> = base
            .minimal_generators()
            .iter()
            .map(|&g| g as u64)
            .collect();
        Self::from_valuations(base, &gens).expect("generators lie in the semigroup")
    }

    pub fn zero(base: &Arc<NumericalSemigroup>) -> Self {
        Self {
            base: base.clone(),
            threshold: None,
            below: Bits::zeros(0),
        }
    }

    /// `dense` describes `0..dense.len()`; everything at or beyond its length
    /// is taken to be in the set.
    fn from_dense(base: Arc<NumericalSemigroup>, mut dense: Bits) -> Self {
        let t = dense.cofinite_start();
        dense.truncate(t);
        Self {
            base,
            threshold: Some(t as u64),
            below: dense,
        }
    }

    pub fn base(&self) -> &Arc<NumericalSemigroup> {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.threshold.is_none()
    }

    pub fn is_unit(&self) -> bool {
        self.contains(0)
    }

    /// Least `T` with `[T, ∞) ⊆ E`; `None` for the zero ideal.
    pub fn threshold(&self) -> Option<u64> {
        self.threshold
    }

    pub fn contains(&self, x: u64) -> bool {
        match self.threshold {
            None => false,
            Some(t) if x >= t => true,
            Some(_) => self.below.get(x as usize),
        }
    }

    /// Elements of `E` below the threshold, ascending.
    pub fn finite_part(&self) -> Vec<u64> {
        self.below.iter_ones().map(|x| x as u64).collect()
    }

    /// Least valuation of the ideal.
    pub fn min_valuation(&self) -> Option<u64> {
        let t = self.threshold?;
        Some(self.below.iter_ones().next().map_or(t, |x| x as u64))
    }

    /// Valuations of a minimal monomial generating set.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let Some(t) = self.threshold else {
            return Vec::new();
        };
        let e = self.base.multiplicity() as u64;
        let len = (t + e) as usize;
        let dense = self.dense(len);
        let gens = self.base.minimal_generators();
        dense
            .iter_ones()
            .filter(|&x| {
                gens.iter()
                    .all(|&g| x < g as usize || !dense.get(x - g as usize))
            })
            .map(|x| x as u64)
            .collect()
    }

    /// Membership bitmap of `0..len`, including the cofinite tail.
    fn dense(&self, len: usize) -> Bits {
        let mut out = Bits::zeros(len);
        if let Some(t) = self.threshold {
            out.copy_prefix_from(&self.below);
            out.set_range(t as usize, len);
        }
        out
    }

    fn check_base(&self, other: &Self) -> Result<(), IdealError> {
        if Arc::ptr_eq(&self.base, &other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(IdealError::BaseMismatch)
        }
    }

    /// Product ideal; its valuation set is the sumset `E1 + E2`.
    pub fn multiply(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_base(other)?;
        let (Some(_), Some(_)) = (self.threshold, other.threshold) else {
            return Ok(Self::zero(&self.base));
        };
        let g1 = self.minimal_generators();
        let g2 = other.minimal_generators();
        let (gens, set) = if g1.len() <= g2.len() {
            (g1, other)
        } else {
            (g2, self)
        };
        let t = set.threshold.expect("nonzero");
        let bound = (gens[0] + t) as usize;
        let src = set.dense(bound);
        let mut dense = Bits::zeros(bound);
        for &g in &gens {
            dense.or_shifted(&src, g as usize);
        }
        Ok(Self::from_dense(self.base.clone(), dense))
    }

    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(&self.base);
        for _ in 0..n {
            acc = self.multiply(&acc).expect("same base");
        }
        acc
    }

    pub fn sum(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_base(other)?;
        let bound = match (self.threshold, other.threshold) {
            (None, _) => return Ok(other.clone()),
            (_, None) => return Ok(self.clone()),
            (Some(a), Some(b)) => a.min(b) as usize,
        };
        let mut dense = self.dense(bound);
        dense.or_assign(&other.dense(bound));
        Ok(Self::from_dense(self.base.clone(), dense))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, IdealError> {
        self.check_base(other)?;
        let bound = match (self.threshold, other.threshold) {
            (Some(a), Some(b)) => a.max(b) as usize,
            _ => return Ok(Self::zero(&self.base)),
        };
        let mut dense = self.dense(bound);
        dense.and_assign(&other.dense(bound));
        Ok(Self::from_dense(self.base.clone(), dense))
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool, IdealError> {
        self.check_base(other)?;
        Ok(match (self.threshold, other.threshold) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => {
                if a > b {
                    return Ok(false);
                }
                let bound = b as usize;
                other.dense(bound).is_subset_of(&self.dense(bound))
            }
        })
    }

    /// `ℓ_A(A/J) = |H \ E|`.
    pub fn colength(&self) -> Result<u64, IdealError> {
        let t = self.threshold.ok_or(IdealError::ZeroIdeal)?;
        Ok(self.base.count_below(t) - self.below.count_ones() as u64)
    }

    /// `ℓ_A(self/inner) = |E_self \ E_inner|`; requires `inner ⊆ self`.
    pub fn relative_length(&self, inner: &Self) -> Result<u64, IdealError> {
        if inner.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if !self.contains_ideal(inner)? {
            return Err(IdealError::NotNested);
        }
        Ok(inner.colength()? - self.colength()?)
    }
}

impl PartialEq for SemigroupIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.threshold == other.threshold
            && self.below == other.below
            && (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
    }
}

impl Eq for SemigroupIdeal {}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self
            .minimal_generators()
            .iter()
            .map(u64::to_string)
            .collect();
        write!(f, "gens={}", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    base: Vec<u32>,
    finite_part: Vec<u64>,
    threshold: Option<u64>,
}

impl From<SemigroupIdeal> for IdealRepr {
    fn from(j: SemigroupIdeal) -> Self {
        IdealRepr {
            base: j.base.minimal_generators().to_vec(),
            finite_part: j.finite_part(),
            threshold: j.threshold,
        }
    }
}

impl TryFrom<IdealRepr> for SemigroupIdeal {
    type Error = IdealError;

    fn try_from(r: IdealRepr) -> Result<Self, IdealError> {
        let base = Arc::new(NumericalSemigroup::from_generators(&r.base)?);
        let invalid = |m: &str| IdealError::InvalidRepresentation(m.to_string());
        let Some(t) = r.threshold else {
            if !r.finite_part.is_empty() {
                return Err(invalid("zero ideal with nonempty finite part"));
            }
            return Ok(Self::zero(&base));
        };
        let mut dense = Bits::zeros(t as usize);
        for &x in &r.finite_part {
            if x >= t {
                return Err(invalid("finite part reaches the threshold"));
            }
            if !base.contains(x as i64) {
                return Err(IdealError::GeneratorNotInRing(x));
            }
            dense.set(x as usize);
        }
        if t > 0 && dense.get(t as usize - 1) {
            return Err(invalid("threshold is not minimal"));
        }
        if (t as i64) <= base.frobenius() {
            return Err(invalid("cofinite tail contains gaps of the semigroup"));
        }
        let candidate = Self {
            base: base.clone(),
            threshold: Some(t),
            below: dense,
        };
        let gens = base.minimal_generators();
        for x in candidate.below.iter_ones() {
            if gens
                .iter()
                .any(|&g| !candidate.contains(x as u64 + g as u64))
            {
                return Err(invalid("set is not closed under adding semigroup elements"));
            }
        }
        Ok(candidate)
    }
}
