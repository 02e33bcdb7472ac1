//! Exhaustive enumeration of numerical semigroups by minimal generating sets
//! and classification of their maximal ideals.
//!
//! Generating sets are produced in lexicographic order, each semigroup exactly
//! once. Classification fans out over rayon and results are merged back in
//! enumeration order, so output does not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::error::{ClassifyError, CorpusError, SemigroupError};
use crate::ideal::SemigroupIdeal;
use crate::semigroup::{gcd, NumericalSemigroup};
use crate::stretched::{self, ClassificationReport};

pub const DEFAULT_CAP: usize = 100_000;

pub const CSV_HEADER: [&str; 11] = [
    "semigroup",
    "e0",
    "e1",
    "k",
    "r",
    "nilp",
    "lambda",
    "stretched",
    "g_cm",
    "rank",
    "h_poly",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    All,
    Stretched,
    Rank(i64),
    GCm,
    NotGCm,
}

impl Filter {
    pub fn accepts(&self, row: &CorpusRow) -> bool {
        match *self {
            Filter::All => true,
            Filter::Stretched => row.stretched,
            Filter::Rank(n) => row.stretched && row.rank == n,
            Filter::GCm => row.g_cm,
            Filter::NotGCm => !row.g_cm,
        }
    }
}

impl FromStr for Filter {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all" => Ok(Filter::All),
            "stretched" => Ok(Filter::Stretched),
            "g_cm" => Ok(Filter::GCm),
            "not_g_cm" => Ok(Filter::NotGCm),
            other => other
                .strip_prefix("rank=")
                .and_then(|n| n.parse::<i64>().ok())
                .filter(|&n| n >= 0)
                .map(Filter::Rank)
                .ok_or_else(|| {
                    CorpusError::InvalidQuery(format!(
                        "unknown filter {other:?}; expected all, stretched, rank=N, g_cm or not_g_cm"
                    ))
                }),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => f.write_str("all"),
            Filter::Stretched => f.write_str("stretched"),
            Filter::Rank(n) => write!(f, "rank={n}"),
            Filter::GCm => f.write_str("g_cm"),
            Filter::NotGCm => f.write_str("not_g_cm"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusQuery {
    /// Largest allowed minimal generator.
    pub generator_bound: u32,
    /// Largest allowed number of minimal generators.
    pub count_bound: usize,
    /// Inclusive range for the multiplicity.
    pub multiplicity_range: (u32, u32),
    pub filter: Filter,
    pub cap: usize,
}

impl CorpusQuery {
    pub fn new(generator_bound: u32, count_bound: usize) -> Self {
        CorpusQuery {
            generator_bound,
            count_bound,
            multiplicity_range: (1, generator_bound),
            filter: Filter::All,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_multiplicity(mut self, lo: u32, hi: u32) -> Self {
        self.multiplicity_range = (lo, hi);
        self
    }

    fn validate(&self) -> Result<(), CorpusError> {
        if self.generator_bound == 0 || self.count_bound == 0 {
            return Err(CorpusError::InvalidQuery("bounds must be positive".into()));
        }
        if self.multiplicity_range.0 > self.multiplicity_range.1 {
            return Err(CorpusError::InvalidQuery("empty multiplicity range".into()));
        }
        Ok(())
    }
}

/// One classified semigroup, flattened for tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub semigroup: Vec<u32>,
    pub e0: u64,
    pub e1: i64,
    pub k: u64,
    pub r: usize,
    pub nilp: usize,
    pub lambda: Vec<usize>,
    pub stretched: bool,
    pub g_cm: bool,
    pub rank: i64,
    pub h_poly: Vec<i64>,
    pub pattern: Option<String>,
}

impl CorpusRow {
    fn from_report(semigroup: Vec<u32>, rep: &ClassificationReport) -> Self {
        CorpusRow {
            semigroup,
            e0: rep.e0,
            e1: rep.e1,
            k: rep.k,
            r: rep.r,
            nilp: rep.n_nilp,
            lambda: rep.lambda.clone(),
            stretched: rep.stretched,
            g_cm: rep.g_cm,
            rank: rep.rank,
            h_poly: rep.h_poly.clone(),
            pattern: rep.pattern.clone(),
        }
    }

    fn csv_record(&self) -> [String; 11] {
        fn join<T: ToString>(v: &[T]) -> String {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
        [
            join(&self.semigroup),
            self.e0.to_string(),
            self.e1.to_string(),
            self.k.to_string(),
            self.r.to_string(),
            self.nilp.to_string(),
            join(&self.lambda),
            self.stretched.to_string(),
            self.g_cm.to_string(),
            self.rank.to_string(),
            join(&self.h_poly),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub k: u64,
    pub r: usize,
    pub rank: i64,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusResult {
    pub query: CorpusQuery,
    /// Semigroups enumerated and classified.
    pub enumerated: usize,
    pub stretched: usize,
    /// Rows accepted by the filter, in enumeration order.
    pub rows: Vec<CorpusRow>,
    /// Counts by `(k, r, rank)` over the accepted rows.
    pub histogram: Vec<HistogramBin>,
    /// Set when enumeration stopped at the instance cap.
    pub partial: bool,
}

/// Minimal generating sets in lexicographic order. Stops after `limit`
/// sets; the flag reports whether more exist.
pub fn enumerate_generators(query: &CorpusQuery, limit: usize) -> (Vec<Vec<u32>>, bool) {
    let mut out = Vec::new();
    let bound = query.generator_bound as usize;
    let (lo, hi) = query.multiplicity_range;
    let mut stack = Vec::new();
    let mut more = false;
    // reach[i] holds ⟨g_1..g_i⟩ ∩ [0, bound].
    let mut reach = vec![{
        let mut b = Bits::zeros(bound + 1);
        b.set(0);
        b
    }];

    #[allow(clippy::too_many_arguments)]
    fn go(
        bound: usize,
        max_len: usize,
        limit: usize,
        stack: &mut Vec<u32>,
        reach: &mut Vec<Bits>,
        g: u64,
        out: &mut Vec<Vec<u32>>,
        more: &mut bool,
    ) {
        if *more {
            return;
        }
        if g == 1 {
            if out.len() == limit {
                *more = true;
                return;
            }
            out.push(stack.clone());
        }
        if stack.len() == max_len {
            return;
        }
        let start = *stack.last().unwrap() as usize + 1;
        for next in start..=bound {
            let cur = reach.last().unwrap();
            if cur.get(next) {
                continue;
            }
            let mut grown = cur.clone();
            for x in next..=bound {
                if grown.get(x - next) {
                    grown.set(x);
                }
            }
            reach.push(grown);
            stack.push(next as u32);
            go(
                bound,
                max_len,
                limit,
                stack,
                reach,
                gcd(g, next as u64),
                out,
                more,
            );
            stack.pop();
            reach.pop();
            if *more {
                return;
            }
        }
    }

    for first in lo.max(2)..=hi.min(query.generator_bound) {
        let mut base = Bits::zeros(bound + 1);
        for x in (0..=bound).step_by(first as usize) {
            base.set(x);
        }
        reach.truncate(1);
        reach.push(base);
        stack.clear();
        stack.push(first);
        go(
            bound,
            query.count_bound,
            limit,
            &mut stack,
            &mut reach,
            first as u64,
            &mut out,
            &mut more,
        );
        if more {
            break;
        }
    }
    // ℕ = ⟨1⟩ has no maximal-ideal invariants worth listing; it is skipped.
    (out, more)
}

/// Classifies the maximal ideal of `⟨gens⟩`; failed checks become violations.
pub fn classify_semigroup(gens: &[u32]) -> Result<ClassificationReport, CorpusError> {
    let engine = |source| CorpusError::Engine {
        semigroup: gens.to_vec(),
        source,
    };
    let h = Arc::new(
        NumericalSemigroup::from_generators(gens)
            .map_err(|e| CorpusError::InvalidQuery(format!("{e}")))?,
    );
    let m = SemigroupIdeal::maximal(&h);
    let analysis = stretched::analyze(&m).map_err(engine)?;
    match stretched::into_checked(&m, analysis.report) {
        Ok(rep) => Ok(rep),
        Err(ClassifyError::TheoremViolation(v)) => Err(CorpusError::Violation(v)),
        Err(ClassifyError::Hilbert(e)) => Err(engine(e)),
    }
}

/// Enumerates, classifies and filters. The first violation in enumeration
/// order aborts the search.
pub fn search(query: &CorpusQuery) -> Result<CorpusResult, CorpusError> {
    query.validate()?;
    let (gens, partial) = enumerate_generators(query, query.cap);
    let rows: Vec<Result<CorpusRow, CorpusError>> = gens
        .into_par_iter()
        .map(|g| classify_semigroup(&g).map(|rep| CorpusRow::from_report(g, &rep)))
        .collect();
    let mut kept = Vec::new();
    let mut enumerated = 0;
    let mut stretched = 0;
    for row in rows {
        let row = row?;
        enumerated += 1;
        stretched += row.stretched as usize;
        if query.filter.accepts(&row) {
            kept.push(row);
        }
    }
    let mut hist: BTreeMap<(u64, usize, i64), usize> = BTreeMap::new();
    for row in &kept {
        *hist.entry((row.k, row.r, row.rank)).or_default() += 1;
    }
    let result = CorpusResult {
        query: query.clone(),
        enumerated,
        stretched,
        rows: kept,
        histogram: hist
            .into_iter()
            .map(|((k, r, rank), count)| HistogramBin { k, r, rank, count })
            .collect(),
        partial,
    };
    if partial {
        Err(CorpusError::CapExceeded(Box::new(result)))
    } else {
        Ok(result)
    }
}

pub fn write_csv<W: Write>(rows: &[CorpusRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

/// Plain-text table of the rows followed by the histogram.
pub fn render_table(result: &CorpusResult) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<28} {:>4} {:>4} {:>3} {:>3} {:>4} {:<10} {:>5} {:>5} {:>4}  h_poly",
        "semigroup", "e0", "e1", "k", "r", "nilp", "lambda", "str", "g_cm", "rank"
    );
    for row in &result.rows {
        let rec = row.csv_record();
        let _ = writeln!(
            s,
            "{:<28} {:>4} {:>4} {:>3} {:>3} {:>4} {:<10} {:>5} {:>5} {:>4}  [{}]",
            format!("<{}>", rec[0]),
            rec[1],
            rec[2],
            rec[3],
            rec[4],
            rec[5],
            format!("{{{}}}", rec[6]),
            if row.stretched { "yes" } else { "no" },
            if row.g_cm { "yes" } else { "no" },
            rec[9],
            rec[10]
        );
    }
    let _ = writeln!(
        s,
        "\n{} semigroups enumerated, {} stretched, {} rows match filter {}{}",
        result.enumerated,
        result.stretched,
        result.rows.len(),
        result.query.filter,
        if result.partial {
            " (partial: cap reached)"
        } else {
            ""
        }
    );
    let _ = writeln!(s, "{:>3} {:>3} {:>5} {:>8}", "k", "r", "rank", "count");
    for bin in &result.histogram {
        let _ = writeln!(
            s,
            "{:>3} {:>3} {:>5} {:>8}",
            bin.k, bin.r, bin.rank, bin.count
        );
    }
    s
}

/// A random nontrivial semigroup: `2..=max_gens` distinct values in
/// `2..=generator_bound` with gcd 1, reduced to its minimal generators.
pub fn random_semigroup<R: Rng + ?Sized>(
    rng: &mut R,
    generator_bound: u32,
    max_gens: usize,
) -> Result<NumericalSemigroup, SemigroupError> {
    if generator_bound < 3 || max_gens < 2 {
        return NumericalSemigroup::from_generators(&[2, 3]);
    }
    loop {
        let count = rng.gen_range(2..=max_gens);
        let mut gens: Vec<u32> = (0..count)
            .map(|_| rng.gen_range(2..=generator_bound))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0u64, |g, &x| gcd(g, x as u64)) == 1 {
            return NumericalSemigroup::from_generators(&gens);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// All subsets of 2..=bound with at most `k` elements and gcd 1, reduced to
    /// their semigroups and deduplicated by gap set.
    fn brute_semigroups(bound: u32, k: usize) -> HashSet<Vec<u64>> {
        let vals: Vec<u32> = (2..=bound).collect();
        let mut out = HashSet::new();
        let n = vals.len();
        for mask in 1u64..(1 << n) {
            if mask.count_ones() as usize > k {
                continue;
            }
            let gens: Vec<u32> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vals[i])
                .collect();
            if let Ok(h) = NumericalSemigroup::from_generators(&gens) {
                if h.minimal_generators().len() <= k
                    && h.minimal_generators().iter().all(|&g| g <= bound)
                {
                    out.insert(h.gaps());
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (bound, k) in [(9, 3), (12, 4), (14, 2)] {
            let (gens, more) = enumerate_generators(&CorpusQuery::new(bound, k), usize::MAX);
            assert!(!more);
            let gap_sets: Vec<Vec<u64>> = gens
                .iter()
                .map(|g| {
                    let h = NumericalSemigroup::from_generators(g).unwrap();
                    assert_eq!(h.minimal_generators(), &g[..]);
                    h.gaps()
                })
                .collect();
            let distinct: HashSet<_> = gap_sets.iter().cloned().collect();
            assert_eq!(
                distinct.len(),
                gap_sets.len(),
                "duplicates at bound {bound}"
            );
            assert_eq!(distinct, brute_semigroups(bound, k));
            let mut sorted = gens.clone();
            sorted.sort();
            assert_eq!(sorted, gens);
        }
    }

    #[test]
    fn multiplicity_range_and_cap() {
        let q = CorpusQuery::new(15, 3).with_multiplicity(4, 5);
        let (gens, _) = enumerate_generators(&q, usize::MAX);
        assert!(gens.iter().all(|g| (4..=5).contains(&g[0])));
        assert!(gens.contains(&vec![4, 5]) && gens.contains(&vec![5, 6, 7]));
        let capped = search(&CorpusQuery::new(15, 3).with_cap(10));
        match capped {
            Err(CorpusError::CapExceeded(partial)) => {
                assert!(partial.partial);
                assert_eq!(partial.enumerated, 10);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn filters_parse() {
        assert_eq!("rank=4".parse::<Filter>().unwrap(), Filter::Rank(4));
        assert_eq!("not_g_cm".parse::<Filter>().unwrap(), Filter::NotGCm);
        assert!("rank=-1".parse::<Filter>().is_err());
        assert!("bogus".parse::<Filter>().is_err());
        for f in [
            Filter::All,
            Filter::Stretched,
            Filter::Rank(2),
            Filter::GCm,
            Filter::NotGCm,
        ] {
            assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
        }
    }

    #[test]
    fn stretched_rows_satisfy_lambda_count() {
        let res = search(&CorpusQuery::new(30, 4).with_filter(Filter::Stretched)).unwrap();
        assert!(!res.rows.is_empty());
        for row in &res.rows {
            assert_eq!(
                row.lambda.len() as i64,
                row.r as i64 - row.k as i64,
                "{:?}",
                row.semigroup
            );
        }
    }

    #[test]
    fn rank_filters_match_characterizations() {
        let res = search(&CorpusQuery::new(30, 4).with_filter(Filter::Rank(1))).unwrap();
        assert!(!res.rows.is_empty());
        assert!(res
            .rows
            .iter()
            .all(|r| r.r == 2 && r.k == 2 && r.lambda.is_empty() && r.g_cm));
        let res = search(&CorpusQuery::new(30, 4).with_filter(Filter::Rank(4))).unwrap();
        assert!(!res.rows.is_empty());
        for row in &res.rows {
            let p = row.pattern.as_deref();
            assert!(
                matches!(p, Some("Thm5.5(I)") | Some("Thm5.5(II)")),
                "{row:?}"
            );
        }
    }

    #[test]
    fn csv_is_deterministic_and_quoted() {
        let q = CorpusQuery::new(12, 3).with_filter(Filter::Stretched);
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_csv(&search(&q).unwrap().rows, &mut a).unwrap();
        write_csv(&search(&q).unwrap().rows, &mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("semigroup,e0,e1,k,r,nilp,lambda,stretched,g_cm,rank,h_poly\n"));
        let mut rdr = csv::Reader::from_reader(text.as_bytes());
        for rec in rdr.records() {
            let rec = rec.unwrap();
            assert_eq!(rec.len(), 11);
            assert!(NumericalSemigroup::from_generators(
                &rec[0]
                    .split(',')
                    .map(|x| x.parse().unwrap())
                    .collect::<Vec<u32>>()
            )
            .is_ok());
        }
    }

    #[test]
    fn result_json_round_trip() {
        let res = search(&CorpusQuery::new(10, 3)).unwrap();
        let s = serde_json::to_string(&res).unwrap();
        assert_eq!(serde_json::from_str::<CorpusResult>(&s).unwrap(), res);
        let total: usize = res.histogram.iter().map(|b| b.count).sum();
        assert_eq!(total, res.rows.len());
    }

    #[test]
    fn random_semigroups_respect_bounds() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let h = random_semigroup(&mut rng, 60, 5).unwrap();
            assert!(!h.is_trivial());
            assert!(h.minimal_generators().len() <= 5);
            assert!(h.minimal_generators().iter().all(|&g| g <= 60));
        }
    }
}
