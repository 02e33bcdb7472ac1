//! The stretched family `H = ⟨e, be+1, {b_n e + n : ℓ+1 ≤ n ≤ e-1}⟩`.
//!
//! Parameters are validated against the defining inequalities, the invariants
//! of the maximal ideal are predicted in closed form, and [`verify_family`]
//! compares the predictions with the engine.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::stretched::{self, Check, CheckStatus, ClassificationReport};
use crate::tower::PowerTower;

/// `(b, e, ℓ, {b_n})`; `b_table` holds `b_n` for `ℓ+1 ≤ n ≤ e-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub b: u32,
    pub e: u32,
    pub ell: u32,
    #[serde(default)]
    pub b_table: BTreeMap<u32, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintViolation {
    /// The inequality that failed, e.g. `b_{n+1} <= b_n + ceil(b/2)`.
    pub constraint: String,
    pub message: String,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.constraint, self.message)
    }
}

/// Closed-form invariants of the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPrediction {
    pub k: u64,
    pub r: usize,
    pub lambda: Vec<usize>,
    /// `c` in `ℓ(A/m^(n+1)) = e(n+1) - c` for `n ≥ r-1`.
    pub hf_constant: i64,
    pub semigroup_type: usize,
    pub embedding_dimension: usize,
    pub g_cm: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub params: FamilyParams,
    pub semigroup: Vec<u32>,
    pub predicted: FamilyPrediction,
    pub computed: FamilyPrediction,
    pub stretched: bool,
    /// `ℓ(A/m^(n+1))` for `n = 0..=n_max`.
    pub hf: Vec<u64>,
    pub assertions: Vec<Check>,
    pub classification: ClassificationReport,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.assertions
            .iter()
            .all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failed(&self) -> Vec<String> {
        self.assertions
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.clone())
            .collect()
    }
}

fn ceil_half(b: u32) -> u32 {
    b.div_ceil(2)
}

impl FamilyParams {
    pub fn new(b: u32, e: u32, ell: u32, b_table: impl IntoIterator<Item = (u32, u32)>) -> Self {
        FamilyParams {
            b,
            e,
            ell,
            b_table: b_table.into_iter().collect(),
        }
    }

    /// `b_n`, with `b_1 = b`.
    pub fn b_n(&self, n: u32) -> Option<u32> {
        if n == 1 {
            Some(self.b)
        } else {
            self.b_table.get(&n).copied()
        }
    }

    /// Every violated constraint; empty when the parameters are valid.
    pub fn violations(&self) -> Vec<ConstraintViolation> {
        let mut out = Vec::new();
        let mut bad = |constraint: &str, message: String| {
            out.push(ConstraintViolation {
                constraint: constraint.into(),
                message,
            })
        };
        let (b, e, ell) = (self.b as i64, self.e as i64, self.ell as i64);
        if b < 2 {
            bad("b >= 2", format!("b = {b}"));
        }
        if ell < 2 || ell > e - 1 {
            bad("2 <= ell <= e-1", format!("ell = {ell}, e = {e}"));
            return out;
        }
        let range = self.ell + 1..self.e;
        for &n in self.b_table.keys() {
            if !range.contains(&n) {
                bad(
                    "ell+1 <= n <= e-1",
                    format!("b_{n} given but n must lie in {}..={}", ell + 1, e - 1),
                );
            }
        }
        for n in range.clone() {
            if !self.b_table.contains_key(&n) {
                bad("ell+1 <= n <= e-1", format!("b_{n} is missing"));
            }
        }
        let half = ceil_half(self.b) as i64;
        for n in range.clone() {
            let Some(bn) = self.b_n(n).map(i64::from) else {
                continue;
            };
            let nn = n as i64;
            if bn < half * nn + 1 {
                bad(
                    "ceil(b/2)*n + 1 <= b_n",
                    format!("b_{n} = {bn} < {}", half * nn + 1),
                );
            }
            if bn > (b - 1) * nn + ell {
                bad(
                    "b_n <= (b-1)*n + ell",
                    format!("b_{n} = {bn} > {}", (b - 1) * nn + ell),
                );
            }
            if n == self.ell + 1 && bn > b * ell + b - 1 {
                bad(
                    "b_{ell+1} <= b*ell + b - 1",
                    format!("b_{n} = {bn} > {}", b * ell + b - 1),
                );
            }
            if let Some(next) = self.b_n(n + 1).filter(|_| n + 1 < self.e) {
                if next as i64 > bn + half {
                    bad(
                        "b_{n+1} <= b_n + ceil(b/2)",
                        format!("b_{} = {next} > b_{n} + {half} = {}", n + 1, bn + half),
                    );
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(FamilyError::Invalid(
                v.iter().map(ToString::to_string).collect(),
            ))
        }
    }

    /// `max({n < e : b_n > bn - n + 1} ∪ {ℓ})`.
    pub fn expected_r(&self) -> u32 {
        self.b_table
            .iter()
            .filter(|&(&n, &bn)| n < self.e && bn as i64 > (self.b as i64 - 1) * n as i64 + 1)
            .map(|(&n, _)| n)
            .fold(self.ell, u32::max)
    }

    /// `e, be+1` and `b_n e + n`, before minimality reduction.
    pub fn generators(&self) -> Vec<u32> {
        let mut g = vec![self.e, self.b * self.e + 1];
        g.extend(self.b_table.iter().map(|(&n, &bn)| bn * self.e + n));
        g
    }

    pub fn build_semigroup(&self) -> Result<NumericalSemigroup, FamilyError> {
        self.validate()?;
        Ok(NumericalSemigroup::from_generators(&self.generators())?)
    }

    pub fn expected_profile(&self) -> Result<FamilyPrediction, FamilyError> {
        self.validate()?;
        let (b, e, ell) = (self.b as i64, self.e as i64, self.ell as i64);
        let r = self.expected_r();
        let lambda = {
            let mut v: Vec<usize> = (self.ell + 1..=r)
                .map(|n| (b * n as i64 - self.b_n(n).unwrap() as i64 + 1) as usize)
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let tail: i64 = (self.ell + 1..=r)
            .map(|j| self.b_n(j).unwrap() as i64 - b * j as i64 + j as i64 - 1)
            .sum();
        Ok(FamilyPrediction {
            k: self.ell as u64,
            r: r as usize,
            lambda,
            hf_constant: e - 1 + ell * (ell - 1) / 2 + tail,
            semigroup_type: (e - ell) as usize,
            embedding_dimension: (e - ell + 1) as usize,
            g_cm: r == self.ell,
        })
    }

    /// `b_{ℓ+1} ≤ bℓ + b - ℓ`, vacuous when `ℓ = e-1`.
    pub fn cm_inequality(&self) -> bool {
        self.b_n(self.ell + 1)
            .is_none_or(|bn| bn as i64 <= (self.b * self.ell + self.b) as i64 - self.ell as i64)
    }
}

/// The Hilbert function is compared with its prediction at least up to this `n`.
const HF_CHECK_THROUGH: usize = 12;

/// Builds the semigroup, runs the engine on the maximal ideal and compares
/// every prediction. Any mismatch is returned as [`FamilyError::Violation`].
pub fn verify_family(params: &FamilyParams) -> Result<FamilyReport, FamilyError> {
    let report = evaluate_family(params)?;
    if report.passed() {
        Ok(report)
    } else {
        Err(FamilyError::Violation(Box::new(report)))
    }
}

/// Like [`verify_family`] but returns failing reports as `Ok`.
pub fn evaluate_family(params: &FamilyParams) -> Result<FamilyReport, FamilyError> {
    let predicted = params.expected_profile()?;
    let h = Arc::new(params.build_semigroup()?);
    let m = SemigroupIdeal::maximal(&h);
    let mut tower = PowerTower::for_ideal(&m)?;
    let analysis = stretched::analyze_tower(&mut tower, HF_CHECK_THROUGH)?;
    let rep = &analysis.report;
    let computed = FamilyPrediction {
        k: rep.k,
        r: rep.r,
        lambda: rep.lambda.clone(),
        hf_constant: {
            let n = analysis.hilbert.n_max();
            params.e as i64 * (n as i64 + 1) - analysis.hilbert.hf[n] as i64
        },
        semigroup_type: h.semigroup_type()?,
        embedding_dimension: h.embedding_dimension(),
        g_cm: rep.g_cm,
    };

    let e = params.e as i64;
    let c = predicted.hf_constant;
    let from = predicted.r.saturating_sub(1);
    let hf = analysis.hilbert.hf.clone();
    let hf_ok = hf.len() > from
        && hf
            .iter()
            .enumerate()
            .skip(from)
            .all(|(n, &v)| v as i64 == e * (n as i64 + 1) - c);

    let mut assertions = Vec::new();
    let mut push = |name: &str, ok: bool| {
        assertions.push(Check {
            name: name.into(),
            status: if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
        })
    };
    push("stretched", rep.stretched);
    push("type", computed.semigroup_type == predicted.semigroup_type);
    push(
        "embedding_dimension",
        computed.embedding_dimension == predicted.embedding_dimension,
    );
    push("k", computed.k == predicted.k);
    push("r", computed.r == predicted.r);
    push("lambda", computed.lambda == predicted.lambda);
    push(
        "lambda_count",
        predicted.lambda.len() == predicted.r - params.ell as usize,
    );
    push("hilbert_function", hf_ok);
    push(
        "cohen_macaulay",
        computed.g_cm == predicted.g_cm && predicted.g_cm == params.cm_inequality(),
    );
    push("classifier", rep.failed_checks().is_empty());

    Ok(FamilyReport {
        params: params.clone(),
        semigroup: h.minimal_generators().to_vec(),
        predicted,
        computed,
        stretched: rep.stretched,
        hf,
        assertions,
        classification: analysis.report,
    })
}

/// Admissible range for `b_n` given `b_{n-1}` (or `None` at `n = ℓ+1`).
fn range_for(b: u32, ell: u32, n: u32, prev: Option<u32>) -> std::ops::RangeInclusive<u32> {
    let half = ceil_half(b);
    let lo = half * n + 1;
    let mut hi = (b - 1) * n + ell;
    match prev {
        None => hi = hi.min(b * ell + b - 1),
        Some(p) => hi = hi.min(p + half),
    }
    lo..=hi
}

/// Every valid parameter tuple for fixed `(b, e, ℓ)`, in lexicographic order
/// of `(b_{ℓ+1}, …, b_{e-1})`.
pub fn chains(b: u32, e: u32, ell: u32) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    if b < 2 || ell < 2 || ell + 1 > e {
        return out;
    }
    let mut current = Vec::new();
    fn go(b: u32, e: u32, ell: u32, cur: &mut Vec<u32>, out: &mut Vec<FamilyParams>) {
        let n = ell + 1 + cur.len() as u32;
        if n >= e {
            out.push(FamilyParams::new(
                b,
                e,
                ell,
                (ell + 1..).zip(cur.iter().copied()),
            ));
            return;
        }
        for v in range_for(b, ell, n, cur.last().copied()) {
            cur.push(v);
            go(b, e, ell, cur, out);
            cur.pop();
        }
    }
    go(b, e, ell, &mut current, &mut out);
    out
}

/// All valid tuples over the given `b` and `e` values and every `ℓ`, truncated
/// at `cap`. The flag reports whether truncation happened.
pub fn sweep(
    bs: &[u32],
    es: impl IntoIterator<Item = u32> + Clone,
    cap: usize,
) -> (Vec<FamilyParams>, bool) {
    let mut out = Vec::new();
    for &b in bs {
        for e in es.clone() {
            for ell in 2..e {
                for p in chains(b, e, ell) {
                    if out.len() == cap {
                        return (out, true);
                    }
                    out.push(p);
                }
            }
        }
    }
    (out, false)
}

/// A tuple drawn uniformly from all valid chains for `(b, e, ℓ)`.
pub fn sample<R: Rng + ?Sized>(
    rng: &mut R,
    b: u32,
    e: u32,
    ell: u32,
) -> Result<FamilyParams, FamilyError> {
    let probe = FamilyParams::new(b, e, ell, []);
    if b < 2 || ell < 2 || ell + 1 > e {
        probe.validate()?;
    }
    // completions[i][v]: number of valid tails when b_{ℓ+1+i} = v.
    let last = e - 1;
    let len = (last + 1).saturating_sub(ell + 1) as usize;
    let max_v = (b - 1) * e + ell + 1;
    let mut completions = vec![vec![0u128; max_v as usize + 1]; len + 1];
    if len == 0 {
        return Ok(probe);
    }
    for i in (0..len).rev() {
        let n = ell + 1 + i as u32;
        for v in 0..=max_v {
            completions[i][v as usize] = if i + 1 == len {
                1
            } else {
                range_for(b, ell, n + 1, Some(v))
                    .map(|w| completions[i + 1][w as usize])
                    .sum()
            };
        }
    }
    let mut table = Vec::with_capacity(len);
    let mut prev = None;
    for (i, counts) in completions.iter().take(len).enumerate() {
        let n = ell + 1 + i as u32;
        let options: Vec<(u32, u128)> = range_for(b, ell, n, prev)
            .map(|v| (v, counts[v as usize]))
            .collect();
        let total: u128 = options.iter().map(|o| o.1).sum();
        let mut pick = rng.gen_range(0..total);
        let v = options
            .iter()
            .find(|&&(_, w)| {
                if pick < w {
                    true
                } else {
                    pick -= w;
                    false
                }
            })
            .expect("pick below total")
            .0;
        table.push((n, v));
        prev = Some(v);
    }
    Ok(FamilyParams::new(b, e, ell, table))
}

/// Parameter schemas as functions of `(b, e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// `ℓ=2, b_3=3b-2`: rank one, CM.
    Ex1,
    /// `ℓ=2, b_3=3b-1, b_4=4b-3`: rank two.
    Ex2,
    /// `ℓ=3, b_4=4b-3`: rank three, CM.
    Ex3_1,
    /// `ℓ=2, b_3=3b-1, b_4=4b-2, b_5=5b-4`: rank three, `Λ = {2,3}`.
    Ex3_2,
    /// `ℓ=3, b_4=4b-2, b_5=5b-4`: rank four, `Λ = {3}`.
    Ex4_1,
    /// `ℓ=2, b_3=3b-1, b_4=4b-2, b_5=5b-3, b_6=6b-5`: rank four, `Λ = {2,3,4}`.
    Ex4_2,
}

/// Invariants stated for a preset, with `hf_offset = c - e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetExpectation {
    pub k: u64,
    pub r: usize,
    pub lambda: Vec<usize>,
    pub hf_offset: i64,
    pub g_cm: bool,
    pub rank: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetInstance {
    pub preset: String,
    pub params: FamilyParams,
    /// Indices `n` whose `b_n` were filled in rather than fixed by the schema.
    pub filled: Vec<u32>,
    /// Schema entries dropped because `n ≥ e`.
    pub dropped: Vec<u32>,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::Ex1,
        Preset::Ex2,
        Preset::Ex3_1,
        Preset::Ex3_2,
        Preset::Ex4_1,
        Preset::Ex4_2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Ex1 => "ex1",
            Preset::Ex2 => "ex2",
            Preset::Ex3_1 => "ex3-1",
            Preset::Ex3_2 => "ex3-2",
            Preset::Ex4_1 => "ex4-1",
            Preset::Ex4_2 => "ex4-2",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, FamilyError> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| FamilyError::UnknownPreset(s.to_string()))
    }

    pub fn ell(self) -> u32 {
        match self {
            Preset::Ex3_1 | Preset::Ex4_1 => 3,
            _ => 2,
        }
    }

    /// `(n, d)` with `b_n = nb - d`.
    fn schema(self) -> &'static [(u32, u32)] {
        match self {
            Preset::Ex1 => &[(3, 2)],
            Preset::Ex2 => &[(3, 1), (4, 3)],
            Preset::Ex3_1 => &[(4, 3)],
            Preset::Ex3_2 => &[(3, 1), (4, 2), (5, 4)],
            Preset::Ex4_1 => &[(4, 2), (5, 4)],
            Preset::Ex4_2 => &[(3, 1), (4, 2), (5, 3), (6, 5)],
        }
    }

    pub fn min_e(self) -> u32 {
        match self {
            Preset::Ex1 => 3,
            Preset::Ex2 => 4,
            Preset::Ex3_1 | Preset::Ex3_2 | Preset::Ex4_1 => 5,
            Preset::Ex4_2 => 6,
        }
    }

    pub fn expectation(self) -> PresetExpectation {
        let (k, r, lambda, hf_offset, g_cm, rank): (u64, usize, &[usize], i64, bool, i64) =
            match self {
                Preset::Ex1 => (2, 2, &[], 0, true, 1),
                Preset::Ex2 => (2, 3, &[2], 1, false, 2),
                Preset::Ex3_1 => (3, 3, &[], 2, true, 3),
                Preset::Ex3_2 => (2, 4, &[2, 3], 2, false, 3),
                Preset::Ex4_1 => (3, 4, &[3], 3, false, 4),
                Preset::Ex4_2 => (2, 5, &[2, 3, 4], 3, false, 4),
            };
        PresetExpectation {
            k,
            r,
            lambda: lambda.to_vec(),
            hf_offset,
            g_cm,
            rank,
        }
    }

    /// Fixes the schema at `(b, e)`. Indices past the schema are filled with
    /// `b_{n+1} = min(b_n + ceil(b/2), (b-1)(n+1) + ℓ)`.
    pub fn instantiate(self, b: u32, e: u32) -> Result<PresetInstance, FamilyError> {
        if e < self.min_e() {
            return Err(FamilyError::Invalid(vec![format!(
                "{} requires e >= {}",
                self.name(),
                self.min_e()
            )]));
        }
        let ell = self.ell();
        let mut table = BTreeMap::new();
        let mut dropped = Vec::new();
        for &(n, d) in self.schema() {
            if n < e {
                table.insert(n, (n * b).saturating_sub(d));
            } else {
                dropped.push(n);
            }
        }
        let mut filled = Vec::new();
        let listed_to = table.keys().max().copied().unwrap_or(ell);
        for n in listed_to + 1..e {
            let prev = table[&(n - 1)];
            table.insert(n, (prev + ceil_half(b)).min((b - 1) * n + ell));
            filled.push(n);
        }
        let params = FamilyParams {
            b,
            e,
            ell,
            b_table: table,
        };
        params.validate()?;
        Ok(PresetInstance {
            preset: self.name().into(),
            params,
            filled,
            dropped,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn p(ell: u32, table: &[(u32, u32)]) -> FamilyParams {
        FamilyParams::new(2, 6, ell, table.iter().copied())
    }

    #[test]
    fn validation_examples() {
        assert!(p(2, &[(3, 4), (4, 5), (5, 6)]).violations().is_empty());
        let v = p(2, &[(3, 7), (4, 7), (5, 7)]).violations();
        assert!(
            v.iter()
                .any(|x| x.constraint == "b_{ell+1} <= b*ell + b - 1"),
            "{v:?}"
        );
        let v = p(2, &[(3, 4), (4, 6), (5, 6)]).violations();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].constraint, "b_{n+1} <= b_n + ceil(b/2)");
        assert!(v[0].message.contains("b_3 + 1 = 5"));
        let v = p(2, &[(3, 4)]).violations();
        assert!(v.iter().any(|x| x.message.contains("b_4 is missing")));
        let v = FamilyParams::new(1, 6, 7, []).violations();
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn expected_r_examples() {
        assert_eq!(p(2, &[(3, 4), (4, 5), (5, 6)]).expected_r(), 2);
        assert_eq!(p(3, &[(4, 6), (5, 6)]).expected_r(), 4);
        assert_eq!(p(2, &[(3, 5), (4, 6), (5, 7)]).expected_r(), 5);
    }

    #[test]
    fn build_examples() {
        let gens = |q: FamilyParams| q.build_semigroup().unwrap().minimal_generators().to_vec();
        assert_eq!(
            gens(p(2, &[(3, 4), (4, 5), (5, 6)])),
            vec![6, 13, 27, 34, 41]
        );
        assert_eq!(gens(p(3, &[(4, 6), (5, 6)])), vec![6, 13, 40, 41]);
        assert_eq!(
            gens(p(2, &[(3, 5), (4, 6), (5, 6)])),
            vec![6, 13, 33, 40, 41]
        );
        assert!(matches!(
            p(2, &[(3, 9)]).build_semigroup(),
            Err(FamilyError::Invalid(_))
        ));
    }

    #[test]
    fn predictions() {
        let pr = p(3, &[(4, 6), (5, 6)]).expected_profile().unwrap();
        assert_eq!(
            (
                pr.k,
                pr.r,
                pr.lambda.clone(),
                pr.hf_constant,
                pr.semigroup_type
            ),
            (3, 4, vec![3], 9, 3)
        );
        assert!(!pr.g_cm);
        let pr = p(2, &[(3, 4), (4, 5), (5, 6)]).expected_profile().unwrap();
        assert_eq!((pr.k, pr.r, pr.hf_constant), (2, 2, 6));
        assert!(pr.lambda.is_empty() && pr.g_cm);
        let pr = p(2, &[(3, 5), (4, 6), (5, 7)]).expected_profile().unwrap();
        assert_eq!(
            (pr.r, pr.lambda.clone(), pr.hf_constant),
            (5, vec![2, 3, 4], 9)
        );
    }

    #[test]
    fn verify_examples() {
        for table in [
            (2, vec![(3, 4), (4, 5), (5, 6)]),
            (2, vec![(3, 5), (4, 5), (5, 6)]),
            (3, vec![(4, 5), (5, 6)]),
            (2, vec![(3, 5), (4, 6), (5, 6)]),
            (3, vec![(4, 6), (5, 6)]),
            (2, vec![(3, 5), (4, 6), (5, 7)]),
        ] {
            let rep = verify_family(&p(table.0, &table.1)).unwrap();
            assert!(rep.passed());
        }
    }

    #[test]
    fn presets_match_their_stated_invariants() {
        for preset in Preset::ALL {
            for b in 2..=4 {
                for e in preset.min_e().max(6)..=10 {
                    // Steps of b-1 exceed ceil(b/2) once b >= 4.
                    if b == 4 && matches!(preset, Preset::Ex3_2 | Preset::Ex4_2) {
                        let err = preset.instantiate(b, e).unwrap_err();
                        assert!(err.to_string().contains("b_{n+1} <= b_n + ceil(b/2)"));
                        continue;
                    }
                    let inst = preset.instantiate(b, e).unwrap();
                    let rep = verify_family(&inst.params).unwrap();
                    let want = preset.expectation();
                    assert_eq!(rep.computed.k, want.k, "{} b={b} e={e}", preset.name());
                    assert_eq!(rep.computed.r, want.r);
                    assert_eq!(rep.computed.lambda, want.lambda);
                    assert_eq!(rep.computed.hf_constant, e as i64 + want.hf_offset);
                    assert_eq!(rep.computed.g_cm, want.g_cm);
                    assert_eq!(rep.classification.rank, want.rank);
                }
            }
        }
    }

    #[test]
    fn preset_fill_is_reported() {
        let inst = Preset::Ex4_1.instantiate(2, 8).unwrap();
        assert_eq!(inst.filled, vec![6, 7]);
        assert_eq!(inst.params.b_table[&6], 7);
        let inst = Preset::Ex4_2.instantiate(2, 6).unwrap();
        assert_eq!(inst.dropped, vec![6]);
        assert!(Preset::Ex4_2.instantiate(2, 5).is_err());
        assert!(Preset::from_name("ex9").is_err());
    }

    #[test]
    fn chains_are_valid_and_distinct() {
        let all = chains(3, 8, 3);
        assert!(!all.is_empty());
        let distinct: HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|q| q.violations().is_empty()));
        // brute force over a box containing every admissible value
        let mut brute = 0;
        for b4 in 0..20u32 {
            for b5 in 0..20u32 {
                for b6 in 0..20u32 {
                    for b7 in 0..20u32 {
                        let q = FamilyParams::new(3, 8, 3, [(4, b4), (5, b5), (6, b6), (7, b7)]);
                        brute += q.violations().is_empty() as usize;
                    }
                }
            }
        }
        assert_eq!(brute, all.len());
    }

    #[test]
    fn sweep_respects_cap() {
        let (all, truncated) = sweep(&[2], 5..=7, usize::MAX);
        assert!(!truncated);
        let (some, truncated) = sweep(&[2], 5..=7, 3);
        assert!(truncated);
        assert_eq!(&all[..3], &some[..]);
    }

    #[test]
    fn sampling_is_uniform_over_chains() {
        let all = chains(2, 7, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut counts = std::collections::HashMap::new();
        let draws = 200 * all.len();
        for _ in 0..draws {
            *counts
                .entry(sample(&mut rng, 2, 7, 2).unwrap())
                .or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), all.len());
        assert!(
            counts.values().all(|&c| (120..=280).contains(&c)),
            "{counts:?}"
        );
    }

    #[test]
    fn params_json_shape() {
        let q = p(3, &[(4, 6), (5, 6)]);
        let v = serde_json::to_value(&q).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"b": 2, "e": 6, "ell": 3, "b_table": {"4": 6, "5": 6}})
        );
        assert_eq!(serde_json::from_value::<FamilyParams>(v).unwrap(), q);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn sampled_params_verify(seed in any::<u64>(), b in 2u32..5, e in 4u32..10, ell_off in 0u32..8) {
            let ell = 2 + ell_off % (e - 2);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = sample(&mut rng, b, e, ell).unwrap();
            prop_assert!(q.violations().is_empty());
            let rep = verify_family(&q).unwrap();
            prop_assert!(rep.passed());
        }
    }
}
