//! Exhaustive census of Seidel polynomials over all labeled graphs of small
//! order.
//!
//! Each order `n` has `2^C(n,2)` labeled graphs, one per edge bitmask. The
//! mask range is cut into contiguous chunks, one per worker; each worker
//! tallies `(triple, remainder)` keys and the partial tallies are summed
//! into a sorted map, so the result does not depend on the worker count.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::algebra::{ExponentTriple, Gf3, Poly};
use crate::graph::{emit_graph6, pair_count, Graph};
use crate::sample;
use crate::seidel::{necessity_class, seidel_charpoly};

/// Largest order enumerated without opting in.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Largest order enumerated at all (`2^28` graphs).
pub const LARGE_MAX_ORDER: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("order {n} exceeds the census limit of {max}")]
    Capacity { n: usize, max: usize },
    #[error("empty order range {lo}..={hi}")]
    EmptyRange { lo: usize, hi: usize },
    #[error("bad census line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub n_lo: usize,
    pub n_hi: usize,
    pub workers: usize,
    pub allow_large: bool,
}

impl CensusConfig {
    pub fn new(n_lo: usize, n_hi: usize) -> Self {
        CensusConfig { n_lo, n_hi, workers: 1, allow_large: false }
    }

    pub fn workers(self, workers: usize) -> Self {
        CensusConfig { workers: workers.max(1), ..self }
    }

    fn check(&self) -> Result<(), CensusError> {
        if self.n_lo > self.n_hi {
            return Err(CensusError::EmptyRange { lo: self.n_lo, hi: self.n_hi });
        }
        check_order(self.n_hi, self.allow_large)
    }
}

fn check_order(n: usize, allow_large: bool) -> Result<(), CensusError> {
    let max = if allow_large { LARGE_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    if n > max {
        return Err(CensusError::Capacity { n, max });
    }
    Ok(())
}

fn graph_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// Every labeled graph of order `n`, in increasing edge-mask order.
pub fn enumerate_masks(n: usize, allow_large: bool) -> Result<impl Iterator<Item = Graph>, CensusError> {
    check_order(n, allow_large)?;
    Ok((0..graph_count(n)).map(move |mask| Graph::from_mask(n, mask).expect("order is within mask range")))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    #[serde(flatten)]
    pub triple: ExponentTriple,
    #[serde(rename = "rem", with = "bracket")]
    pub remainder: Poly,
    pub count: u64,
}

impl CensusRecord {
    /// `x^r (x-1)^s (x+1)^t · remainder`.
    pub fn polynomial(&self) -> Poly {
        &Poly::split(self.triple) * &self.remainder
    }

    pub fn is_fully_split(&self) -> bool {
        self.remainder == Poly::one()
    }
}

mod bracket {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::algebra::Poly;

    pub fn serialize<S: Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_bracket())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Poly, D::Error> {
        let text = String::deserialize(d)?;
        Poly::from_bracket(&text).map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFooter {
    pub total: u64,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusSummary {
    pub n_lo: usize,
    pub n_hi: usize,
    pub total: u64,
    /// Sorted by `(n, r, s, t, remainder)`.
    pub records: Vec<CensusRecord>,
    /// graph6 strings of graphs with a split polynomial outside the allowed
    /// congruence classes.
    pub violations: Vec<String>,
}

type Key = (usize, ExponentTriple, Poly);

#[derive(Default)]
struct Tally {
    counts: HashMap<Key, u64>,
    violations: Vec<(usize, u64)>,
}

fn classify(p: &Poly) -> (ExponentTriple, Poly) {
    let split = p.split_linear().expect("characteristic polynomials are monic");
    (split.exponents, split.remainder)
}

fn tally_range(n: usize, lo: u64, hi: u64) -> Tally {
    let mut tally = Tally::default();
    for mask in lo..hi {
        let g = Graph::from_mask(n, mask).expect("order is within mask range");
        let (triple, remainder) = classify(&seidel_charpoly(&g));
        if remainder == Poly::one() && !necessity_class(triple) {
            tally.violations.push((n, mask));
        }
        *tally.counts.entry((n, triple, remainder)).or_insert(0) += 1;
    }
    tally
}

/// Computes the census for orders `n_lo..=n_hi`.
pub fn census_summary(cfg: &CensusConfig) -> Result<CensusSummary, CensusError> {
    cfg.check()?;
    let workers = cfg.workers.max(1) as u64;
    let mut merged: BTreeMap<Key, u64> = BTreeMap::new();
    let mut violations = Vec::new();

    for n in cfg.n_lo..=cfg.n_hi {
        let size = graph_count(n);
        let chunk = size.div_ceil(workers);
        let parts: Vec<Tally> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = (w * chunk).min(size);
                    let hi = ((w + 1) * chunk).min(size);
                    scope.spawn(move || tally_range(n, lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("census worker panicked")).collect()
        });
        for part in parts {
            for (key, count) in part.counts {
                *merged.entry(key).or_insert(0) += count;
            }
            violations.extend(part.violations);
        }
    }
    violations.sort_unstable();

    let records: Vec<CensusRecord> = merged
        .into_iter()
        .map(|((n, triple, remainder), count)| CensusRecord { n, triple, remainder, count })
        .collect();
    Ok(CensusSummary {
        n_lo: cfg.n_lo,
        n_hi: cfg.n_hi,
        total: records.iter().map(|r| r.count).sum(),
        records,
        violations: violations
            .into_iter()
            .map(|(n, mask)| emit_graph6(&Graph::from_mask(n, mask).expect("mask came from the census")))
            .collect(),
    })
}

/// Computes the census and writes it to `out` as JSONL.
pub fn census_run(cfg: &CensusConfig, out: &mut dyn Write) -> Result<CensusSummary, CensusError> {
    let summary = census_summary(cfg)?;
    summary.write_jsonl(out)?;
    Ok(summary)
}

impl CensusSummary {
    pub fn footer(&self) -> CensusFooter {
        CensusFooter { total: self.total, violations: self.violations.clone() }
    }

    /// One line per record, then a `{"total", "violations"}` footer.
    pub fn write_jsonl(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for record in &self.records {
            serde_json::to_writer(&mut *out, record)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(&mut *out, &self.footer())?;
        out.write_all(b"\n")?;
        out.flush()
    }

    /// Reads back the output of [`CensusSummary::write_jsonl`]. The order
    /// range is taken from the records.
    pub fn read_jsonl(input: impl BufRead) -> Result<Self, CensusError> {
        let mut records = Vec::new();
        let mut footer = None;
        for (idx, line) in input.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let parse_err = |e: serde_json::Error| CensusError::Parse { line: idx + 1, message: e.to_string() };
            if footer.is_some() {
                return Err(CensusError::Parse { line: idx + 1, message: "content after footer".into() });
            }
            let value: serde_json::Value = serde_json::from_str(&line).map_err(parse_err)?;
            if value.get("total").is_some() {
                footer = Some(serde_json::from_value::<CensusFooter>(value).map_err(parse_err)?);
            } else {
                records.push(serde_json::from_value::<CensusRecord>(value).map_err(parse_err)?);
            }
        }
        let footer = footer.ok_or(CensusError::Parse { line: 0, message: "missing footer".into() })?;
        Ok(CensusSummary {
            n_lo: records.iter().map(|r| r.n).min().unwrap_or(0),
            n_hi: records.iter().map(|r| r.n).max().unwrap_or(0),
            total: footer.total,
            records,
            violations: footer.violations,
        })
    }

    /// Records of order `n`.
    pub fn at_order(&self, n: usize) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(move |r| r.n == n)
    }

    /// Fully split triples with `r > s + t`: outside the region covered by
    /// the basic constructions.
    pub fn open_region_triples(&self) -> BTreeSet<ExponentTriple> {
        self.records
            .iter()
            .filter(|r| r.is_fully_split() && r.triple.r > r.triple.s + r.triple.t)
            .map(|r| r.triple)
            .collect()
    }
}

/// Spot-checks a summary:
///
/// * per-order counts sum to `2^C(n,2)` and the total matches;
/// * every record has degree `n` and zero `x^(n-1)` coefficient;
/// * `samples` records, picked with `seed`, are recounted from scratch
///   (each order involved is re-enumerated once);
/// * `samples` random (graph, subset) pairs are switching invariant and
///   land on an existing record.
pub fn census_audit(summary: &CensusSummary, samples: usize, seed: u64) -> bool {
    let mut per_order: BTreeMap<usize, u64> = BTreeMap::new();
    for record in &summary.records {
        *per_order.entry(record.n).or_insert(0) += record.count;
        let p = record.polynomial();
        if record.count == 0 || p.degree() != Some(record.n) {
            return false;
        }
        if record.n >= 1 && p.coeff(record.n - 1) != Gf3::ZERO {
            return false;
        }
    }
    let orders_ok = (summary.n_lo..=summary.n_hi).all(|n| per_order.get(&n).copied() == Some(graph_count(n)));
    if !orders_ok || per_order.len() != summary.n_hi + 1 - summary.n_lo {
        return false;
    }
    if per_order.values().sum::<u64>() != summary.total {
        return false;
    }
    if samples == 0 || summary.records.is_empty() {
        return true;
    }

    let mut rng = sample::rng(seed);
    let mut recounted: HashMap<usize, HashMap<(ExponentTriple, Poly), u64>> = HashMap::new();
    for _ in 0..samples {
        let idx = sample::below(&mut rng, summary.records.len() as u64) as usize;
        let record = &summary.records[idx];
        let counts = recounted.entry(record.n).or_insert_with(|| {
            let mut counts = HashMap::new();
            for mask in 0..graph_count(record.n) {
                let g = Graph::from_mask(record.n, mask).expect("order is within mask range");
                *counts.entry(classify(&seidel_charpoly(&g))).or_insert(0) += 1;
            }
            counts
        });
        if counts.get(&(record.triple, record.remainder.clone())).copied() != Some(record.count) {
            return false;
        }
    }

    let known: BTreeSet<(usize, ExponentTriple, &Poly)> =
        summary.records.iter().map(|r| (r.n, r.triple, &r.remainder)).collect();
    for _ in 0..samples {
        let n = sample::order_between(&mut rng, summary.n_lo, summary.n_hi);
        let g = sample::graph(&mut rng, n);
        let u = sample::subset(&mut rng, n);
        let p = seidel_charpoly(&g);
        let q = seidel_charpoly(&g.switch(&u).expect("subset is in range"));
        let (triple, remainder) = classify(&q);
        if p != q || !known.contains(&(n, triple, &remainder)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(lo: usize, hi: usize, workers: usize) -> CensusSummary {
        census_summary(&CensusConfig::new(lo, hi).workers(workers)).unwrap()
    }

    fn triple(r: u64, s: u64, t: u64) -> ExponentTriple {
        ExponentTriple::new(r, s, t)
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_masks(2, false).unwrap().count(), 2);
        assert_eq!(enumerate_masks(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_masks(5, false).unwrap().count(), 1024);
        let masks: Vec<u64> = enumerate_masks(3, false).unwrap().map(|g| g.mask().unwrap()).collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
        assert!(matches!(enumerate_masks(8, false), Err(CensusError::Capacity { n: 8, max: 7 })));
        assert!(enumerate_masks(8, true).is_ok());
        assert!(enumerate_masks(9, true).is_err());
    }

    #[test]
    fn small_orders() {
        let s = run(1, 1, 1);
        assert_eq!(s.records.len(), 1);
        assert_eq!((s.records[0].triple, s.records[0].count), (triple(1, 0, 0), 1));

        let s = run(2, 2, 1);
        assert_eq!(s.records.len(), 1);
        assert_eq!((s.records[0].triple, s.records[0].count), (triple(0, 1, 1), 2));

        let s = run(3, 3, 2);
        let got: Vec<_> = s.records.iter().map(|r| (r.triple, r.count, r.is_fully_split())).collect();
        assert_eq!(got, vec![(triple(0, 0, 3), 4, true), (triple(0, 3, 0), 4, true)]);
        assert!(s.violations.is_empty());
    }

    #[test]
    fn worker_count_does_not_matter() {
        let one = run(1, 5, 1);
        for w in [2, 3, 7, 64] {
            assert_eq!(run(1, 5, w), one);
        }
        assert_eq!(one.total, 1 + 2 + 8 + 64 + 1024);
        assert!(one.violations.is_empty());
    }

    #[test]
    fn jsonl_round_trip() {
        let s = run(0, 4, 2);
        let mut buf = Vec::new();
        s.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.lines().next().unwrap().starts_with(r#"{"n":0,"r":0,"s":0,"t":0,"rem":"[1]","count":1}"#));
        assert_eq!(text.lines().last().unwrap(), format!(r#"{{"total":{},"violations":[]}}"#, s.total));
        let back = CensusSummary::read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn records_reconstruct_to_degree_n() {
        let s = run(1, 6, 2);
        for record in &s.records {
            assert_eq!(record.polynomial().degree(), Some(record.n));
        }
        let split: Vec<_> = s.records.iter().filter(|r| r.is_fully_split()).collect();
        assert!(split.iter().all(|r| necessity_class(r.triple)));
    }

    #[test]
    fn audit_accepts_and_detects_faults() {
        let s = run(1, 4, 2);
        assert!(census_audit(&s, 0, 0));
        assert!(census_audit(&s, 20, 5));

        let n3 = run(3, 3, 1);
        assert!(census_audit(&n3, 8, 1));

        let mut bad = n3.clone();
        bad.records[0].count += 1;
        assert!(!census_audit(&bad, 0, 0));

        // Counts shuffled between records keep the totals but fail recounts.
        let mut swapped = run(4, 4, 1);
        let last = swapped.records.len() - 1;
        swapped.records[0].count += 1;
        swapped.records[last].count -= 1;
        assert!(census_audit(&swapped, 0, 0));
        assert!(!census_audit(&swapped, 64, 3));
    }

    #[test]
    fn singleton_switching_permutes_each_order() {
        for n in 1..=5 {
            let mut before: HashMap<Poly, u64> = HashMap::new();
            let mut after: HashMap<Poly, u64> = HashMap::new();
            for g in enumerate_masks(n, false).unwrap() {
                *before.entry(seidel_charpoly(&g)).or_insert(0) += 1;
                let h = g.switch(&[n - 1]).unwrap();
                *after.entry(seidel_charpoly(&h)).or_insert(0) += 1;
            }
            assert_eq!(before, after, "n = {n}");
        }
    }
}
