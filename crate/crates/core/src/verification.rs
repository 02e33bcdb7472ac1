//! End-to-end checks of the worked examples, the family predictions, the
//! oracle identities on random input and the corpus falsification run.
//!
//! Each criterion returns a [`CriterionOutcome`]; nothing panics on failure.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, CorpusQuery};
use crate::error::CorpusError;
use crate::family::{self, FamilyParams};
use crate::hilbert::{self, HilbertData};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;
use crate::stretched;
use crate::tower::{monomial_reduction, PowerTower};

pub const SEED: u64 = 0x5eed_2024;
pub const CORPUS_TIME_LIMIT: Duration = Duration::from_secs(120);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: u128,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {} {} {} ({} ms)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.elapsed_ms
        )
    }
}

#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{label}: got {got:?}, expected {want:?}"));
        }
    }
}

fn timed(
    id: u8,
    title: &str,
    body: impl FnOnce(&mut Tally) -> Result<(), String>,
) -> CriterionOutcome {
    let start = Instant::now();
    let mut tally = Tally::default();
    if let Err(e) = body(&mut tally) {
        tally.failures.push(e);
    }
    CriterionOutcome {
        id,
        title: title.into(),
        passed: tally.failures.is_empty(),
        failures: tally.failures,
        notes: tally.notes,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn maximal_ideal(gens: &[u32]) -> Result<SemigroupIdeal, String> {
    let h = NumericalSemigroup::from_generators(gens).map_err(|e| e.to_string())?;
    Ok(SemigroupIdeal::maximal(&Arc::new(h)))
}

fn analyze_through(m: &SemigroupIdeal, n_max: usize) -> Result<stretched::Analysis, String> {
    let mut tower = PowerTower::for_ideal(m).map_err(|e| e.to_string())?;
    stretched::analyze_tower(&mut tower, n_max).map_err(|e| e.to_string())
}

/// Checks `HF(n) = e0 (n+1) - c` on `range`.
fn hf_line(t: &mut Tally, hd: &HilbertData, range: std::ops::RangeInclusive<usize>, c: i64) {
    for n in range {
        let want = hd.e0 as i64 * (n as i64 + 1) - c;
        match hd.hf.get(n) {
            Some(&got) => t.expect(got as i64 == want, || {
                format!("HF({n}) = {got}, expected {want}")
            }),
            None => t.failures.push(format!("HF({n}) not computed")),
        }
    }
}

pub fn example_cm() -> CriterionOutcome {
    timed(
        1,
        "<7,15,18,26,27>: k=r=3, HF=7(n+1)-9, e1=9, G Cohen-Macaulay",
        |t| {
            let m = maximal_ideal(&[7, 15, 18, 26, 27])?;
            let a = analyze_through(&m, 12)?;
            let rep = &a.report;
            t.eq("mu(m)", m.minimal_generators().len(), 5);
            t.eq("k", rep.k, 3);
            t.eq("r", rep.r, 3);
            hf_line(t, &a.hilbert, 2..=12, 9);
            t.eq("e0", rep.e0, 7);
            t.eq("e1", rep.e1, 9);
            t.eq("e1 - e0", rep.e1 - rep.e0 as i64, 2);
            t.eq("G Cohen-Macaulay", rep.g_cm, true);
            t.eq("failed checks", rep.failed_checks(), Vec::<String>::new());
            t.notes.push(format!(
                "h = {:?}, pattern {}",
                rep.h_poly,
                rep.pattern.as_deref().unwrap_or("none")
            ));
            Ok(())
        },
    )
}

pub fn example_not_cm() -> CriterionOutcome {
    timed(
        2,
        "<8,17,21,30,39,52>: k=3, r=4, Λ={3}, HF=8(n+1)-11, e1=11, G not CM",
        |t| {
            let gens = [8, 17, 21, 30, 39, 52];
            let m = maximal_ideal(&gens)?;
            let a = analyze_through(&m, 12)?;
            let rep = &a.report;
            t.eq("mu(m)", m.minimal_generators().len(), 6);
            t.eq(
                "type",
                m.base().semigroup_type().map_err(|e| e.to_string())?,
                3,
            );
            t.eq("k", rep.k, 3);
            t.eq("r", rep.r, 4);
            t.eq("lambda", rep.lambda.clone(), vec![3]);
            hf_line(t, &a.hilbert, 3..=12, 11);
            t.eq("e1", rep.e1, 11);
            t.eq("e1 - e0", rep.e1 - rep.e0 as i64, 3);
            t.eq("G Cohen-Macaulay", rep.g_cm, false);
            // numerator [ℓ(A/m), e0 - ℓ(A/m) - 2, 1, 0, 1] with e0 = 8, ℓ(A/m) = 1
            t.eq("h-polynomial", rep.h_poly.clone(), vec![1, 5, 1, 0, 1]);
            t.eq("failed checks", rep.failed_checks(), Vec::<String>::new());
            Ok(())
        },
    )
}

/// The six `(e, b) = (6, 2)` family instances with their stated invariants:
/// `(params, minimal generators, k, r, Λ, c, CM)`.
#[allow(clippy::type_complexity)]
pub fn six_family_cases() -> Vec<(FamilyParams, Vec<u32>, u64, usize, Vec<usize>, i64, bool)> {
    let p = |ell, t: &[(u32, u32)]| FamilyParams::new(2, 6, ell, t.iter().copied());
    vec![
        (
            p(2, &[(3, 4), (4, 5), (5, 6)]),
            vec![6, 13, 27, 34, 41],
            2,
            2,
            vec![],
            6,
            true,
        ),
        (
            p(2, &[(3, 5), (4, 5), (5, 6)]),
            vec![6, 13, 33, 34, 41],
            2,
            3,
            vec![2],
            7,
            false,
        ),
        (
            p(3, &[(4, 5), (5, 6)]),
            vec![6, 13, 34, 41],
            3,
            3,
            vec![],
            8,
            true,
        ),
        (
            p(2, &[(3, 5), (4, 6), (5, 6)]),
            vec![6, 13, 33, 40, 41],
            2,
            4,
            vec![2, 3],
            8,
            false,
        ),
        (
            p(3, &[(4, 6), (5, 6)]),
            vec![6, 13, 40, 41],
            3,
            4,
            vec![3],
            9,
            false,
        ),
        (
            p(2, &[(3, 5), (4, 6), (5, 7)]),
            vec![6, 13, 33, 40, 47],
            2,
            5,
            vec![2, 3, 4],
            9,
            false,
        ),
    ]
}

pub fn family_examples() -> CriterionOutcome {
    timed(
        3,
        "six family instances at e=6, b=2 match stated (k, r, Λ, c, CM)",
        |t| {
            for (i, (params, gens, k, r, lambda, c, cm)) in
                six_family_cases().into_iter().enumerate()
            {
                let label = format!("case {}", i + 1);
                let rep = family::evaluate_family(&params).map_err(|e| format!("{label}: {e}"))?;
                t.eq(&format!("{label} generators"), rep.semigroup.clone(), gens);
                t.eq(&format!("{label} k"), rep.computed.k, k);
                t.eq(&format!("{label} r"), rep.computed.r, r);
                t.eq(
                    &format!("{label} lambda"),
                    rep.computed.lambda.clone(),
                    lambda,
                );
                t.eq(&format!("{label} HF constant"), rep.computed.hf_constant, c);
                t.eq(&format!("{label} CM"), rep.computed.g_cm, cm);
                t.eq(
                    &format!("{label} failed assertions"),
                    rep.failed(),
                    Vec::<String>::new(),
                );
            }
            Ok(())
        },
    )
}

pub const SWEEP_CAP: usize = 5000;

pub fn family_sweep() -> CriterionOutcome {
    timed(
        4,
        "family sweep b in {2,3}, e in 5..=12, every valid chain",
        |t| {
            let (params, truncated) = family::sweep(&[2, 3], 5..=12, SWEEP_CAP);
            t.notes.push(format!(
                "{} parameter tuples{}",
                params.len(),
                if truncated { " (capped)" } else { "" }
            ));
            let failures: Vec<String> = params
                .par_iter()
                .filter_map(|p| match family::evaluate_family(p) {
                    Ok(rep) if rep.passed() => None,
                    Ok(rep) => Some(format!("{p:?}: {}", rep.failed().join(", "))),
                    Err(e) => Some(format!("{p:?}: {e}")),
                })
                .collect();
            t.failures.extend(failures);
            Ok(())
        },
    )
}

pub const RANDOM_SEMIGROUPS: usize = 500;
pub const RANDOM_TRIPLES: usize = 1000;

fn random_ideal<R: Rng>(rng: &mut R, h: &Arc<NumericalSemigroup>) -> SemigroupIdeal {
    let top = h.conductor() + 2 * h.multiplicity() as u64;
    let elements: Vec<u64> = (1..=top).filter(|&x| h.contains(x as i64)).collect();
    let count = rng.gen_range(1..=3);
    let vals: Vec<u64> = (0..count)
        .map(|_| elements[rng.gen_range(0..elements.len())])
        .collect();
    SemigroupIdeal::from_valuations(h, &vals).expect("valuations lie in H")
}

pub fn oracle_properties() -> CriterionOutcome {
    timed(
        5,
        "oracle identities on 500 random semigroups, additivity on 1000 nested triples",
        |t| {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            let semigroups: Vec<NumericalSemigroup> = (0..RANDOM_SEMIGROUPS)
                .map(|_| corpus::random_semigroup(&mut rng, 60, 5))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let failures: Vec<String> = semigroups
                .par_iter()
                .flat_map_iter(|h| {
                    let mut bad = Vec::new();
                    let m = SemigroupIdeal::maximal(&Arc::new(h.clone()));
                    let mut check = || -> Result<(), String> {
                        let q = monomial_reduction(&m).map_err(|e| e.to_string())?;
                        let hd = HilbertData::compute(&m).map_err(|e| e.to_string())?;
                        let e1_poly = hilbert::e1_via_polynomial(&hd).map_err(|e| e.to_string())?;
                        let e1_huck = hilbert::e1_via_huckaba(&m, &q).map_err(|e| e.to_string())?;
                        let direct =
                            hilbert::hilbert_function(&m, hd.n_max()).map_err(|e| e.to_string())?;
                        let h_poly = hilbert::h_polynomial(&hd).map_err(|e| e.to_string())?;
                        let colength = m.colength().map_err(|e| e.to_string())? as i64;
                        let e0 = hd.e0 as i64;
                        if e1_poly != e1_huck {
                            bad.push(format!(
                                "<{h}>: e1 {e1_poly} from HF vs {e1_huck} from quotient lengths"
                            ));
                        }
                        if direct != hd.hf {
                            bad.push(format!(
                                "<{h}>: Hilbert function differs between computations"
                            ));
                        }
                        if h_poly.iter().sum::<i64>() != e0 {
                            bad.push(format!(
                                "<{h}>: sum of h = {} != e0 = {e0}",
                                h_poly.iter().sum::<i64>()
                            ));
                        }
                        let weighted: i64 =
                            h_poly.iter().enumerate().map(|(i, &x)| i as i64 * x).sum();
                        if weighted != e1_poly {
                            bad.push(format!(
                                "<{h}>: sum of i*h_i = {weighted} != e1 = {e1_poly}"
                            ));
                        }
                        if e1_poly < e0 - colength {
                            bad.push(format!(
                                "<{h}>: e1 = {e1_poly} below e0 - l(A/m) = {}",
                                e0 - colength
                            ));
                        }
                        Ok(())
                    };
                    if let Err(e) = check() {
                        bad.push(format!("<{h}>: {e}"));
                    }
                    bad
                })
                .collect();
            t.failures.extend(failures);

            let mut additivity_failures = 0;
            for _ in 0..RANDOM_TRIPLES {
                let h =
                    Arc::new(corpus::random_semigroup(&mut rng, 60, 5).map_err(|e| e.to_string())?);
                let j1 = random_ideal(&mut rng, &h);
                let j2 = j1
                    .intersect(&random_ideal(&mut rng, &h))
                    .map_err(|e| e.to_string())?;
                let j3 = j2
                    .intersect(&random_ideal(&mut rng, &h))
                    .map_err(|e| e.to_string())?;
                let len = |a: &SemigroupIdeal, b: &SemigroupIdeal| {
                    a.relative_length(b).map_err(|e| e.to_string())
                };
                let col = |a: &SemigroupIdeal| a.colength().map_err(|e| e.to_string());
                let ok = len(&j1, &j3)? == len(&j1, &j2)? + len(&j2, &j3)?
                    && col(&j3)? == col(&j1)? + len(&j1, &j3)?;
                if !ok {
                    additivity_failures += 1;
                    t.failures.push(format!(
                        "length additivity fails over <{h}>: {j1} ⊇ {j2} ⊇ {j3}"
                    ));
                }
            }
            t.notes.push(format!(
            "{RANDOM_SEMIGROUPS} semigroups, {RANDOM_TRIPLES} triples, {additivity_failures} additivity failures"
        ));
            Ok(())
        },
    )
}

pub fn corpus_falsification() -> CriterionOutcome {
    timed(
        6,
        "all semigroups with generators <= 40 and at most 5 generators: no violations",
        |t| {
            let start = Instant::now();
            let query = CorpusQuery::new(40, 5).with_cap(usize::MAX);
            match corpus::search(&query) {
                Ok(res) => {
                    t.notes.push(format!(
                        "{} semigroups, {} stretched",
                        res.enumerated, res.stretched
                    ));
                    for rank in 1..=4 {
                        let mut by_pattern: std::collections::BTreeMap<&str, usize> =
                            Default::default();
                        for row in res.rows.iter().filter(|r| r.stretched && r.rank == rank) {
                            *by_pattern
                                .entry(row.pattern.as_deref().unwrap_or("none"))
                                .or_default() += 1;
                        }
                        let parts: Vec<String> = by_pattern
                            .iter()
                            .map(|(p, n)| format!("{p} x{n}"))
                            .collect();
                        t.notes
                            .push(format!("stretched with rank {rank}: {}", parts.join(", ")));
                    }
                }
                Err(CorpusError::Violation(v)) => {
                    t.failures.push(format!(
                        "violation: {}",
                        serde_json::to_string(&v).unwrap_or_else(|_| format!("{v:?}"))
                    ));
                }
                Err(e) => t.failures.push(e.to_string()),
            }
            let elapsed = start.elapsed();
            t.expect(elapsed < CORPUS_TIME_LIMIT, || {
                format!("took {elapsed:?}, limit {CORPUS_TIME_LIMIT:?}")
            });
            Ok(())
        },
    )
}

pub fn run_criterion(id: u8) -> Option<CriterionOutcome> {
    Some(match id {
        1 => example_cm(),
        2 => example_not_cm(),
        3 => family_examples(),
        4 => family_sweep(),
        5 => oracle_properties(),
        6 => corpus_falsification(),
        _ => return None,
    })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=6).filter_map(run_criterion).collect()
}
