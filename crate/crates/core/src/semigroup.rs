//! Numerical semigroups `H = <g_1, ..., g_k>` and their classical invariants.
//!
//! Membership is decided through the Apéry set of the multiplicity: for every
//! residue class modulo `e` we keep the least element of `H` in that class
//! (computed with a shortest-path pass over `Z/eZ`). An integer `x >= 0` lies in
//! `H` iff it is at least the Apéry element of its class.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::SemigroupError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct NumericalSemigroup {
    minimal_generators: Vec<u32>,
    frobenius: i64,
    /// Membership of `0..conductor`.
    below_conductor: Bits,
    elements_below_conductor: u64,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.minimal_generators == other.minimal_generators
    }
}

impl Eq for NumericalSemigroup {}

impl std::hash::Hash for NumericalSemigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.minimal_generators.hash(state);
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing to the minimal
    /// generating set.
    pub fn from_generators(gens: &[u32]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::NonPositiveGenerator);
        }
        let g = gens.iter().fold(0u64, |acc, &x| gcd(acc, x as u64));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let minimal_generators = reduce_to_minimal(&sorted);

        let apery = apery_by_shortest_paths(&minimal_generators);
        let e = minimal_generators[0] as u64;
        let max_apery = *apery.iter().max().expect("nonempty residue table");
        let frobenius = max_apery as i64 - e as i64;
        let conductor = (frobenius + 1) as usize;

        let mut below_conductor = Bits::zeros(conductor);
        for x in 0..conductor as u64 {
            if x >= apery[(x % e) as usize] {
                below_conductor.set(x as usize);
            }
        }
        let elements_below_conductor = below_conductor.count_ones() as u64;

        Ok(Self {
            minimal_generators,
            frobenius,
            below_conductor,
            elements_below_conductor,
        })
    }

    pub fn minimal_generators(&self) -> &[u32] {
        &self.minimal_generators
    }

    /// Smallest nonzero element `e`.
    pub fn multiplicity(&self) -> u32 {
        self.minimal_generators[0]
    }

    /// Number of minimal generators, i.e. the embedding dimension `μ(m)`.
    pub fn embedding_dimension(&self) -> usize {
        self.minimal_generators.len()
    }

    /// Largest integer outside `H`; `-1` when `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.frobenius < 0
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        if x >= self.conductor() {
            return true;
        }
        self.below_conductor.get(x as usize)
    }

    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor())
            .filter(|&x| !self.below_conductor.get(x as usize))
            .collect()
    }

    pub fn genus(&self) -> u64 {
        self.conductor() - self.elements_below_conductor
    }

    /// Number of elements of `H` in `0..bound`.
    pub fn count_below(&self, bound: u64) -> u64 {
        let c = self.conductor();
        if bound >= c {
            self.elements_below_conductor + (bound - c)
        } else {
            self.below_conductor.count_ones_below(bound as usize) as u64
        }
    }

    /// Membership bitmap of `0..len`.
    pub(crate) fn membership(&self, len: usize) -> Bits {
        let mut out = Bits::zeros(len);
        out.copy_prefix_from(&self.below_conductor);
        let c = self.conductor() as usize;
        if len > c {
            out.set_range(c, len);
        }
        out
    }

    /// `Ap(H, a) = {h in H : h - a not in H}`, sorted ascending.
    pub fn apery_set(&self, a: u64) -> Result<Vec<u64>, SemigroupError> {
        if a == 0 || !self.contains(a as i64) {
            return Err(SemigroupError::NotMember(a));
        }
        let mut least = vec![None; a as usize];
        let mut found = 0u64;
        let mut x = 0u64;
        while found < a {
            if self.contains(x as i64) {
                let slot = &mut least[(x % a) as usize];
                if slot.is_none() {
                    *slot = Some(x);
                    found += 1;
                }
            }
            x += 1;
        }
        let mut out: Vec<u64> = least
            .into_iter()
            .map(|v| v.expect("all classes hit"))
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Gaps `x` with `x + h in H` for every nonzero `h in H`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u64>, SemigroupError> {
        if self.is_trivial() {
            return Err(SemigroupError::TrivialSemigroup);
        }
        // Testing against the minimal generators suffices.
        Ok(self
            .gaps()
            .into_iter()
            .filter(|&x| {
                self.minimal_generators
                    .iter()
                    .all(|&g| self.contains(x as i64 + g as i64))
            })
            .collect())
    }

    /// Cohen-Macaulay type of `k[[H]]`.
    pub fn semigroup_type(&self) -> Result<usize, SemigroupError> {
        Ok(self.pseudo_frobenius()?.len())
    }

    pub fn literal(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.minimal_generators.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for NumericalSemigroup {
    type Error = SemigroupError;

    fn try_from(gens: Vec<u32>) -> Result<Self, Self::Error> {
        Self::from_generators(&gens)
    }
}

impl From<NumericalSemigroup> for Vec<u32> {
    fn from(h: NumericalSemigroup) -> Self {
        h.minimal_generators
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `sorted` must be strictly increasing. A generator is redundant iff it is a
/// sum of strictly smaller ones.
fn reduce_to_minimal(sorted: &[u32]) -> Vec<u32> {
    let max = *sorted.last().expect("nonempty") as usize;
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    let mut kept = Vec::new();
    for &g in sorted {
        let g = g as usize;
        if reach[g] {
            continue;
        }
        kept.push(g as u32);
        for x in g..=max {
            if reach[x - g] {
                reach[x] = true;
            }
        }
    }
    kept
}

fn apery_by_shortest_paths(gens: &[u32]) -> Vec<u64> {
    let e = gens[0] as usize;
    let mut dist = vec![u64::MAX; e];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nr = (r + g as usize) % e;
            let nd = d + g as u64;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Membership by explicit dynamic programming over the raw generators.
    fn brute_members(gens: &[u32], bound: usize) -> Vec<bool> {
        let mut reach = vec![false; bound];
        reach[0] = true;
        for x in 1..bound {
            reach[x] = gens
                .iter()
                .any(|&g| (g as usize) <= x && reach[x - g as usize]);
        }
        reach
    }

    #[test]
    fn from_generators_examples() {
        let h = NumericalSemigroup::from_generators(&[6, 13, 27, 34, 41]).unwrap();
        assert_eq!(h.minimal_generators(), &[6, 13, 27, 34, 41]);
        assert_eq!(h.multiplicity(), 6);

        let h = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(h.frobenius(), 1);
        assert_eq!(h.gaps(), vec![1]);

        let h = NumericalSemigroup::from_generators(&[3, 5, 8]).unwrap();
        assert_eq!(h.minimal_generators(), &[3, 5]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(SemigroupError::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::GcdNotOne(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 3]),
            Err(SemigroupError::NonPositiveGenerator)
        );
    }

    #[test]
    fn natural_numbers() {
        let n = NumericalSemigroup::from_generators(&[1, 5]).unwrap();
        assert_eq!(n.minimal_generators(), &[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert!(n.contains(0));
        assert_eq!(n.pseudo_frobenius(), Err(SemigroupError::TrivialSemigroup));
    }

    #[test]
    fn membership_three_five() {
        let h = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert!(!h.contains(7));
        assert!(h.contains(8));
        assert!(h.contains(0));
        assert!(!h.contains(-3));
        assert_eq!(h.gaps(), vec![1, 2, 4, 7]);
    }

    #[test]
    fn apery_examples() {
        let h = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(h.apery_set(3).unwrap(), vec![0, 5, 10]);
        let h = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(h.apery_set(2).unwrap(), vec![0, 3]);
        assert_eq!(h.apery_set(1), Err(SemigroupError::NotMember(1)));
    }

    #[test]
    fn pseudo_frobenius_examples() {
        let h = NumericalSemigroup::from_generators(&[3, 5]).unwrap();
        assert_eq!(h.pseudo_frobenius().unwrap(), vec![7]);
        let h = NumericalSemigroup::from_generators(&[8, 17, 21, 30, 39, 52]).unwrap();
        assert_eq!(h.semigroup_type().unwrap(), 3);
        let h = NumericalSemigroup::from_generators(&[6, 13, 40, 41]).unwrap();
        assert_eq!(h.semigroup_type().unwrap(), 3);
    }

    #[test]
    fn serde_uses_generator_list() {
        let h = NumericalSemigroup::from_generators(&[6, 13, 40, 41]).unwrap();
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(json, "[6,13,40,41]");
        let back: NumericalSemigroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<NumericalSemigroup>("[4,6]").is_err());
    }

    fn generator_sets() -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(2u32..40, 1..5).prop_filter("gcd 1", |v| {
            v.iter().fold(0u64, |a, &x| gcd(a, x as u64)) == 1
        })
    }

    proptest! {
        #[test]
        fn membership_matches_brute_force(gens in generator_sets()) {
            let h = NumericalSemigroup::from_generators(&gens).unwrap();
            let bound = h.conductor() as usize + 80;
            let brute = brute_members(&gens, bound);
            for (x, &m) in brute.iter().enumerate() {
                prop_assert_eq!(h.contains(x as i64), m, "x = {}", x);
            }
            prop_assert!(!h.contains(h.frobenius()));
            prop_assert_eq!(h.genus() as usize, h.gaps().len());
        }

        #[test]
        fn apery_cardinality_and_minimality(gens in generator_sets(), pick in 0usize..20) {
            let h = NumericalSemigroup::from_generators(&gens).unwrap();
            let a = (1..).map(|x: u64| x).filter(|&x| h.contains(x as i64)).nth(pick).unwrap();
            let ap = h.apery_set(a).unwrap();
            prop_assert_eq!(ap.len() as u64, a);
            for &w in &ap {
                prop_assert!(h.contains(w as i64) && !h.contains(w as i64 - a as i64));
            }
            prop_assert!(h.embedding_dimension() <= h.multiplicity() as usize);
            for (i, &g) in h.minimal_generators().iter().enumerate() {
                let others: Vec<u32> = h.minimal_generators().iter().enumerate()
                    .filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
                if !others.is_empty() {
                    prop_assert!(!brute_members(&others, g as usize + 1)[g as usize]);
                }
            }
        }
    }
}
