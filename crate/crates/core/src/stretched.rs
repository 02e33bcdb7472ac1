//! Reduction profile of a monomial ideal with respect to its monomial
//! reduction `Q = (u^a)`, stretchedness, and the numerical characterizations of
//! stretched ideals with small first Hilbert coefficient.
//!
//! Everything is decided "with respect to the monomial reduction": a monomial
//! ideal admits no other monomial reduction, and stretchedness may depend on the
//! choice of `Q`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ClassifyError, HilbertError};
use crate::hilbert::HilbertData;
use crate::ideal::SemigroupIdeal;
use crate::tower::PowerTower;

/// The two defining conditions of a stretched ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchedWitness {
    /// `Q ∩ I^2 = QI`.
    pub intersection_equal: bool,
    /// `ℓ_A(Q + I^2 / Q + I^3)`.
    pub length: u64,
}

impl StretchedWitness {
    pub fn holds(&self) -> bool {
        self.intersection_equal && self.length == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionProfile {
    pub q_valuation: u64,
    /// `r_I = min{n ≥ 0 : I^(n+1) = QI^n}`.
    pub r: usize,
    /// `n_I = min{n ≥ 0 : I^(n+1) ⊆ Q}`.
    pub n_nilp: usize,
    /// `k_I = ℓ(I^2/QI) + 1`.
    pub k: u64,
    /// `ℓ(I^(n+1)/QI^n)` for `n = 1..=r`.
    pub quotient_lengths: Vec<u64>,
    /// `Λ = {n ≥ 1 : QI^(n-1) ∩ I^(n+1) ≠ QI^n}`.
    pub lambda_set: Vec<usize>,
    /// `I^(n+1) ∩ Q = QI^n` for `n = 1..=r`.
    pub vv_flags: Vec<bool>,
    pub witness: StretchedWitness,
    pub stretched: bool,
    pub g_cohen_macaulay: bool,
    pub colength: u64,
    /// `ℓ(I/I^2)`.
    pub cotangent_length: u64,
    /// `Σ_{n≥1} ℓ(I^(n+1)/QI^n) = e1 - e0 + ℓ(A/I)`.
    pub rank: i64,
    /// `ℓ(I^(n+1) / QI^n + I^(n+2))` for `n = 1..=r`.
    pub graded_piece_lengths: Vec<u64>,
    /// `ℓ(I^(n+1) + Q / Q)` for `n = 1..=r`.
    pub lengths_mod_q: Vec<u64>,
}

impl ReductionProfile {
    pub fn compute(
        ideal: &SemigroupIdeal,
        reduction: &SemigroupIdeal,
    ) -> Result<Self, HilbertError> {
        let mut tower = PowerTower::new(ideal, reduction)?;
        Self::from_tower(&mut tower)
    }

    pub(crate) fn from_tower(tower: &mut PowerTower) -> Result<Self, HilbertError> {
        let r = tower.reduction_number();
        tower.extend_to(r + 2);
        let q = tower.reduction().clone();
        let i = |n: usize| tower.power(n);
        let qi: Vec<SemigroupIdeal> = (0..=r + 1).map(|n| tower.q_times(n)).collect();

        let mut quotient_lengths = Vec::with_capacity(r);
        let mut vv_flags = Vec::with_capacity(r);
        let mut lambda_set = Vec::new();
        let mut graded_piece_lengths = Vec::with_capacity(r);
        let mut lengths_mod_q = Vec::with_capacity(r);
        for n in 1..=r {
            quotient_lengths.push(i(n + 1).relative_length(&qi[n])?);
            vv_flags.push(i(n + 1).intersect(&q)? == qi[n]);
            if qi[n - 1].intersect(i(n + 1))? != qi[n] {
                lambda_set.push(n);
            }
            graded_piece_lengths.push(i(n + 1).relative_length(&qi[n].sum(i(n + 2))?)?);
            lengths_mod_q.push(i(n + 1).sum(&q)?.relative_length(&q)?);
        }

        let n_nilp = (0..=r)
            .find(|&n| q.contains_ideal(i(n + 1)).unwrap_or(false))
            .expect("I^(r+1) = QI^r lies in Q");
        let k = i(2).relative_length(&qi[1])? + 1;

        let witness = StretchedWitness {
            intersection_equal: q.intersect(i(2))? == qi[1],
            length: i(2).sum(&q)?.relative_length(&i(3).sum(&q)?)?,
        };
        let colength = i(1).colength()?;
        let cotangent_length = i(1).relative_length(i(2))?;

        Ok(Self {
            q_valuation: tower.reduction_valuation(),
            r,
            n_nilp,
            k,
            rank: quotient_lengths.iter().sum::<u64>() as i64,
            quotient_lengths,
            lambda_set,
            g_cohen_macaulay: vv_flags.iter().all(|&f| f),
            vv_flags,
            stretched: witness.holds(),
            witness,
            colength,
            cotangent_length,
            graded_piece_lengths,
            lengths_mod_q,
        })
    }

    /// `ℓ(I^(n+1)/QI^n)` for any `n ≥ 1`.
    pub fn quotient_length(&self, n: usize) -> u64 {
        if n == 0 {
            return self.q_valuation - self.colength;
        }
        self.quotient_lengths.get(n - 1).copied().unwrap_or(0)
    }
}

pub fn reduction_number(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<usize, HilbertError> {
    Ok(PowerTower::new(ideal, reduction)?.reduction_number())
}

pub fn is_stretched(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<StretchedWitness, HilbertError> {
    let tower = PowerTower::new(ideal, reduction)?;
    let mut tower = tower;
    tower.extend_to(3);
    let (i2, i3) = (tower.power(2), tower.power(3));
    Ok(StretchedWitness {
        intersection_equal: reduction.intersect(i2)? == tower.q_times(1),
        length: i2.sum(reduction)?.relative_length(&i3.sum(reduction)?)?,
    })
}

/// `k_I = ℓ(I^2/QI) + 1`, cross-checked against `e0 = ℓ(I/I^2) + k_I - 1`.
pub fn k_invariant(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<u64, HilbertError> {
    let mut tower = PowerTower::new(ideal, reduction)?;
    tower.extend_to(2);
    let k = tower.power(2).relative_length(&tower.q_times(1))? + 1;
    let e0 = tower.reduction_valuation();
    let cotangent = ideal.relative_length(tower.power(2))?;
    if e0 != cotangent + k - 1 {
        return Err(HilbertError::OracleMismatch(format!(
            "e0 = {e0} but l(I/I^2) + k - 1 = {}",
            cotangent + k - 1
        )));
    }
    Ok(k)
}

pub fn lambda_set(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<Vec<usize>, HilbertError> {
    Ok(ReductionProfile::compute(ideal, reduction)?.lambda_set)
}

/// Valabrega–Valla: `G` is Cohen–Macaulay iff `I^(n+1) ∩ Q = QI^n` for all `n`.
/// For stretched ideals the verdict must agree with `r = k`.
pub fn is_g_cohen_macaulay(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<bool, ClassifyError> {
    let p = ReductionProfile::compute(ideal, reduction)?;
    if p.stretched && p.g_cohen_macaulay != (p.r as u64 == p.k) {
        let analysis = analyze(ideal)?;
        return Err(ClassifyError::TheoremViolation(Box::new(
            TheoremViolation::new(ideal, analysis.report, vec!["Prop4.1".into()]),
        )));
    }
    Ok(p.g_cohen_macaulay)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub rank: i64,
    pub k: u64,
    pub r: usize,
    pub n_nilp: usize,
    pub lambda: Vec<usize>,
    pub quotient_lengths: Vec<u64>,
    /// Stretched with respect to the monomial reduction.
    pub stretched: bool,
    pub g_cm: bool,
    pub e0: u64,
    pub e1: i64,
    pub colength: u64,
    pub h_poly: Vec<i64>,
    /// Structural pattern matched among the rank 1–4 characterizations.
    pub pattern: Option<String>,
    pub checks: Vec<Check>,
}

impl ClassificationReport {
    pub fn failed_checks(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.clone())
            .collect()
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }
}

/// A failed check, with everything needed to reproduce the instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremViolation {
    pub semigroup: Vec<u32>,
    pub ideal: Vec<u64>,
    pub failed: Vec<String>,
    pub report: ClassificationReport,
}

impl TheoremViolation {
    fn new(ideal: &SemigroupIdeal, report: ClassificationReport, failed: Vec<String>) -> Self {
        TheoremViolation {
            semigroup: ideal.base().minimal_generators().to_vec(),
            ideal: ideal.minimal_generators(),
            failed,
            report,
        }
    }
}

/// Hilbert data and classification for one ideal, from a single power tower.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub hilbert: HilbertData,
    pub profile: ReductionProfile,
    pub report: ClassificationReport,
}

/// Computes everything and evaluates every check, without failing on checks.
pub fn analyze(ideal: &SemigroupIdeal) -> Result<Analysis, HilbertError> {
    let mut tower = PowerTower::for_ideal(ideal)?;
    analyze_tower(&mut tower, 0)
}

pub(crate) fn analyze_tower(
    tower: &mut PowerTower,
    min_n_max: usize,
) -> Result<Analysis, HilbertError> {
    let hilbert = HilbertData::from_tower(tower, min_n_max)?;
    let profile = ReductionProfile::from_tower(tower)?;
    let report = build_report(&hilbert, &profile);
    Ok(Analysis {
        hilbert,
        profile,
        report,
    })
}

/// Classification with every applicable check; any failed check is returned as
/// a [`TheoremViolation`].
pub fn classify(
    ideal: &SemigroupIdeal,
    reduction: &SemigroupIdeal,
) -> Result<ClassificationReport, ClassifyError> {
    let mut tower = PowerTower::new(ideal, reduction)?;
    let analysis = analyze_tower(&mut tower, 0)?;
    into_checked(ideal, analysis.report)
}

pub(crate) fn into_checked(
    ideal: &SemigroupIdeal,
    report: ClassificationReport,
) -> Result<ClassificationReport, ClassifyError> {
    let failed = report.failed_checks();
    if failed.is_empty() {
        Ok(report)
    } else {
        Err(ClassifyError::TheoremViolation(Box::new(
            TheoremViolation::new(ideal, report, failed),
        )))
    }
}

fn binom2(n: u64) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

fn trimmed(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &str, applicable: bool, ok: impl FnOnce() -> bool) {
        let status = if !applicable {
            CheckStatus::NotApplicable
        } else if ok() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.0.push(Check {
            name: name.to_string(),
            status,
        });
    }
}

fn build_report(hd: &HilbertData, p: &ReductionProfile) -> ClassificationReport {
    let e0 = hd.e0 as i64;
    let e1 = hd.e1_polynomial;
    let c = p.colength as i64;
    let rank = e1 - (e0 - c);
    let k = p.k;
    let r = p.r;
    let q = |n: usize| p.quotient_length(n);
    // I^(m+1) = QI^m
    let settles_by = |m: usize| r <= m;
    let lambda: BTreeSet<usize> = p.lambda_set.iter().copied().collect();
    let lambda_is = |want: &[usize]| lambda.iter().copied().eq(want.iter().copied());
    let h_is = |want: Vec<i64>| hd.h_poly == trimmed(want);
    let g_cm = p.g_cohen_macaulay;
    let st = p.stretched;

    let cor52 = settles_by(2);
    let cor53 = q(1) == 1 && q(2) == 1 && settles_by(3);
    let p54_one = q(1) == 2 && settles_by(3);
    let p54_two = (1..=3).all(|n| q(n) == 1) && settles_by(4);
    let t55_one = q(1) == 2 && q(2) == 1 && q(3) == 1 && settles_by(4);
    let t55_two = (1..=4).all(|n| q(n) == 1) && settles_by(5);
    let patterns = [
        ("Cor5.2", cor52),
        ("Cor5.3", cor53),
        ("Prop5.4(I)", p54_one),
        ("Prop5.4(II)", p54_two),
        ("Thm5.5(I)", t55_one),
        ("Thm5.5(II)", t55_two),
    ];
    let pattern = if st {
        patterns
            .iter()
            .find(|(_, hit)| *hit)
            .map(|(name, _)| name.to_string())
    } else {
        None
    };

    let lambda_sum: i64 = lambda.iter().map(|&s| s as i64).sum();
    let lambda_len = lambda.len() as i64;
    let huckaba_form = binom2(r as u64) - lambda_sum + lambda_len;
    let sum_q: i64 = (1..=r).map(|n| q(n) as i64).sum();

    let mut ch = Checks(Vec::new());

    // Identities valid for every m-primary monomial ideal in dimension one.
    ch.push("HuckabaEquality", true, || {
        hd.e1_polynomial == hd.e1_huckaba && hd.e1_huckaba == e0 - c + sum_q
    });
    ch.push("Nagata", true, || e1 >= e0 - c);
    ch.push("Numerator", true, || {
        let weighted: i64 = hd
            .h_poly
            .iter()
            .enumerate()
            .map(|(i, &h)| i as i64 * h)
            .sum();
        hd.h_poly.iter().sum::<i64>() == e0 && weighted == e1 && hd.h_poly.first() == Some(&c)
    });
    ch.push("Rem2.1(1)", true, || hd.e0 == p.cotangent_length + k - 1);
    ch.push("ValabregaValla", true, || {
        g_cm == p.vv_flags.iter().all(|&f| f)
    });

    // Stretched ideals.
    ch.push("Rem2.1(2)", st, || k == p.n_nilp as u64 && k <= r as u64);
    ch.push("Rem5.1", st, || rank >= 1);
    ch.push("LambdaRange", st, || {
        lambda.iter().all(|&n| n >= 2 && n < r)
    });
    ch.push("Lem2.2(2)", st, || (1..=r).all(|n| q(n) >= q(n + 1)));
    ch.push("Lem2.2(3)", st, || {
        p.graded_piece_lengths.iter().all(|&l| l <= 1)
    });
    ch.push("Lem2.3(1)", st, || {
        (1..=k as usize).all(|n| p.lengths_mod_q.get(n - 1).copied().unwrap_or(0) == k - n as u64)
    });
    ch.push("Lem2.3(2)", st, || {
        (2..r).all(|n| q(n) as i64 == q(n - 1) as i64 - i64::from(!lambda.contains(&n)))
    });
    ch.push("Prop2.4(1)", st, || lambda_len == r as i64 - k as i64);
    ch.push("Prop2.4(2)", st, || sum_q == huckaba_form);
    ch.push("Cor2.5", st, || e1 == e0 - c + huckaba_form);
    ch.push("Prop4.1", st, || {
        let bound = binom2(k);
        rank >= bound && (rank == bound) == (r as u64 == k) && (r as u64 == k) == g_cm
    });
    ch.push("Prop4.1(i,iii)", st && r as u64 == k, || {
        let lengths_ok = (1..=k as usize).all(|n| q(n) == k - n as u64);
        let mut h = vec![c, e0 - c - k as i64 + 1];
        h.extend(std::iter::repeat_n(1, k as usize - 1));
        lengths_ok && h_is(h)
    });

    let k3 = st && k == 3;
    ch.push("Cor4.2", k3, || {
        (rank == 3) == settles_by(3) && settles_by(3) == g_cm
    });
    ch.push("Cor4.2(i,iii)", k3 && rank == 3, || {
        q(2) == 1 && r == 3 && lambda.is_empty() && h_is(vec![c, e0 - c - 2, 1, 1])
    });
    ch.push("Thm4.4", k3, || {
        (rank == 4) == (q(2) == 1 && q(3) == 1 && settles_by(4))
    });
    ch.push("Thm4.4(i,iii)", k3 && rank == 4, || {
        lambda_is(&[3]) && h_is(vec![c, e0 - c - 2, 1, 0, 1]) && !g_cm
    });

    ch.push("Cor5.2", st, || (rank == 1) == cor52);
    ch.push("Cor5.2(i-iv)", st && rank == 1, || {
        q(1) == 1 && k == 2 && r == 2 && lambda.is_empty() && h_is(vec![c, e0 - c - 1, 1]) && g_cm
    });
    ch.push("Cor5.3", st, || (rank == 2) == cor53);
    ch.push("Cor5.3(i,iii)", st && rank == 2, || {
        lambda_is(&[2]) && h_is(vec![c, e0 - c - 1, 0, 1]) && !g_cm
    });
    ch.push("Prop5.4", st, || {
        (rank == 3) == (p54_one || p54_two) && !(p54_one && p54_two)
    });
    ch.push("Prop5.4(I)", st && rank == 3 && p54_one, || {
        q(2) == 1 && lambda.is_empty() && h_is(vec![c, e0 - c - 2, 1, 1]) && g_cm
    });
    ch.push("Prop5.4(II)", st && rank == 3 && p54_two, || {
        lambda_is(&[2, 3]) && h_is(vec![c, e0 - c - 1, 0, 0, 1]) && !g_cm
    });
    ch.push("Thm5.5", st, || {
        (rank == 4) == (t55_one || t55_two) && !(t55_one && t55_two)
    });
    ch.push("Thm5.5(I)", st && rank == 4 && t55_one, || {
        lambda_is(&[3]) && h_is(vec![c, e0 - c - 2, 1, 0, 1]) && !g_cm
    });
    ch.push("Thm5.5(II)", st && rank == 4 && t55_two, || {
        lambda_is(&[2, 3, 4]) && h_is(vec![c, e0 - c - 1, 0, 0, 0, 1]) && !g_cm
    });
    ch.push("Cor5.6", st && rank <= 4, || {
        patterns.iter().filter(|(_, hit)| *hit).count() == 1
    });

    ClassificationReport {
        rank,
        k,
        r,
        n_nilp: p.n_nilp,
        lambda: lambda.into_iter().collect(),
        quotient_lengths: p.quotient_lengths.clone(),
        stretched: st,
        g_cm,
        e0: hd.e0,
        e1,
        colength: p.colength,
        h_poly: hd.h_poly.clone(),
        pattern,
        checks: ch.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;
    use crate::tower::monomial_reduction;
    use std::sync::Arc;

    fn maximal(gens: &[u32]) -> (SemigroupIdeal, SemigroupIdeal) {
        let m = SemigroupIdeal::maximal(&Arc::new(
            NumericalSemigroup::from_generators(gens).unwrap(),
        ));
        let q = monomial_reduction(&m).unwrap();
        (m, q)
    }

    #[test]
    fn reduction_number_examples() {
        let (m, q) = maximal(&[6, 13, 27, 34, 41]);
        assert_eq!(reduction_number(&m, &q).unwrap(), 2);
        let (m, q) = maximal(&[6, 13, 33, 40, 47, 48]);
        assert_eq!(reduction_number(&m, &q).unwrap(), 5);
        let (m, q) = maximal(&[2, 3]);
        assert_eq!(reduction_number(&m, &q).unwrap(), 1);
    }

    #[test]
    fn stretched_examples() {
        let (m, q) = maximal(&[8, 17, 21, 30, 39, 52]);
        assert!(is_stretched(&m, &q).unwrap().holds());
        let (m, q) = maximal(&[4, 5, 6, 7]);
        let w = is_stretched(&m, &q).unwrap();
        assert_eq!(w.length, 0);
        assert!(!w.holds());
        let (m, q) = maximal(&[5, 6, 7]);
        let w = is_stretched(&m, &q).unwrap();
        assert_eq!(w.length, 2);
        assert!(!w.holds());
    }

    #[test]
    fn k_invariant_examples() {
        let (m, q) = maximal(&[7, 15, 18, 26, 27]);
        assert_eq!(k_invariant(&m, &q).unwrap(), 3);
        let (m, q) = maximal(&[6, 13, 33, 34, 41]);
        assert_eq!(k_invariant(&m, &q).unwrap(), 2);
        let (m, q) = maximal(&[2, 3]);
        assert_eq!(k_invariant(&m, &q).unwrap(), 1);
    }

    #[test]
    fn lambda_examples() {
        let (m, q) = maximal(&[6, 13, 33, 40, 41]);
        assert_eq!(lambda_set(&m, &q).unwrap(), vec![2, 3]);
        let (m, q) = maximal(&[6, 13, 40, 41]);
        assert_eq!(lambda_set(&m, &q).unwrap(), vec![3]);
        let (m, q) = maximal(&[6, 13, 27, 34, 41]);
        assert!(lambda_set(&m, &q).unwrap().is_empty());
    }

    #[test]
    fn cohen_macaulay_examples() {
        let (m, q) = maximal(&[6, 13, 34, 41]);
        assert!(is_g_cohen_macaulay(&m, &q).unwrap());
        let (m, q) = maximal(&[6, 13, 33, 34, 41]);
        assert!(!is_g_cohen_macaulay(&m, &q).unwrap());
        let (m, q) = maximal(&[2, 3]);
        assert!(is_g_cohen_macaulay(&m, &q).unwrap());
    }

    fn assert_all_pass(report: &ClassificationReport) {
        assert!(
            report.failed_checks().is_empty(),
            "{:?}",
            report.failed_checks()
        );
    }

    #[test]
    fn classify_rank_four_pattern_one() {
        let (m, q) = maximal(&[6, 13, 40, 41]);
        let rep = classify(&m, &q).unwrap();
        assert_eq!((rep.rank, rep.k, rep.r), (4, 3, 4));
        assert_eq!(rep.pattern.as_deref(), Some("Thm5.5(I)"));
        assert_eq!(rep.lambda, vec![3]);
        assert!(!rep.g_cm);
        assert_eq!(rep.status_of("Thm5.5(I)"), Some(CheckStatus::Pass));
        assert_eq!(rep.status_of("Thm4.4(i,iii)"), Some(CheckStatus::Pass));
        assert_all_pass(&rep);
    }

    #[test]
    fn classify_rank_one() {
        let (m, q) = maximal(&[6, 13, 27, 34, 41]);
        let rep = classify(&m, &q).unwrap();
        assert_eq!(rep.rank, 1);
        assert!(rep.g_cm);
        assert_eq!(rep.h_poly, vec![1, 4, 1]);
        assert_eq!(rep.status_of("Cor5.2(i-iv)"), Some(CheckStatus::Pass));
        assert_eq!(rep.e1, rep.e0 as i64);
    }

    #[test]
    fn classify_rank_four_pattern_two() {
        let (m, q) = maximal(&[6, 13, 33, 40, 47, 48]);
        let rep = classify(&m, &q).unwrap();
        assert_eq!(rep.rank, 4);
        assert_eq!(rep.pattern.as_deref(), Some("Thm5.5(II)"));
        assert_eq!(rep.lambda, vec![2, 3, 4]);
        assert_eq!(rep.quotient_lengths, vec![1, 1, 1, 1, 0]);
        assert_eq!(rep.e1, 9);
        assert_all_pass(&rep);
    }

    #[test]
    fn non_stretched_marks_theorems_not_applicable() {
        let (m, q) = maximal(&[2, 3]);
        let rep = classify(&m, &q).unwrap();
        assert!(!rep.stretched);
        assert_eq!(rep.rank, 0);
        assert_eq!(rep.k, 1);
        assert_eq!(rep.status_of("Thm5.5"), Some(CheckStatus::NotApplicable));
        assert_eq!(rep.status_of("Nagata"), Some(CheckStatus::Pass));
        assert_eq!(rep.pattern, None);
    }

    #[test]
    fn rejects_non_monomial_reduction() {
        let (m, _) = maximal(&[3, 5]);
        let q = SemigroupIdeal::principal(m.base(), 6).unwrap();
        assert!(matches!(
            classify(&m, &q),
            Err(ClassifyError::Hilbert(HilbertError::NotMonomialReduction {
                expected: 3
            }))
        ));
    }

    #[test]
    fn report_json_round_trip() {
        let (m, q) = maximal(&[8, 17, 21, 30, 39, 52]);
        let rep = classify(&m, &q).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert!(s.contains(r#""status":"n/a""#) || s.contains(r#""status":"pass""#));
        let back: ClassificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rep);
    }
}
