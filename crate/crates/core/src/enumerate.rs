//! Exhaustive search for cycles over a finite candidate set, dihedral
//! dedup, and bulk classification into irreducible orbits.
//!
//! The search extends prefixes depth first while keeping the running
//! eta-product. The last entry is never branched on: `P * eta(x) = lambda Id`
//! forces `P = [[0, lambda], [-lambda, p22]]` and `x = lambda * p22`, so it is
//! solved for and looked up among the candidates.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::cycle::{is_canonical, QuiddityCycle};
use crate::error::{Error, Result};
use crate::eta::{eta, Matrix2};
use crate::reduce::is_reducible;
use crate::ring::{Domain, RingElement, Sign, SubsetSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationTask {
    domain: Domain,
    candidates: Vec<RingElement>,
    length: usize,
    lambda_filter: Option<Sign>,
    dedup: bool,
}

impl EnumerationTask {
    /// Candidates are sorted in the domain order and deduplicated.
    pub fn new(
        domain: Domain,
        candidates: impl IntoIterator<Item = RingElement>,
        length: usize,
    ) -> Result<Self> {
        let mut candidates: Vec<RingElement> = candidates.into_iter().collect();
        if let Some(bad) = candidates.iter().find(|x| x.domain() != domain) {
            return Err(Error::Domain(format!("candidate {bad} is not in {domain}")));
        }
        candidates.sort();
        candidates.dedup();
        if candidates.is_empty() {
            return Err(Error::Length("the candidate set is empty".into()));
        }
        if length < 2 {
            return Err(Error::Length(format!("cycles have length at least 2, got {length}")));
        }
        Ok(EnumerationTask {
            domain,
            candidates,
            length,
            lambda_filter: None,
            dedup: false,
        })
    }

    /// Integer candidates `lo..=hi`.
    pub fn int_range(lo: i64, hi: i64, length: usize) -> Result<Self> {
        EnumerationTask::new(Domain::Integer, (lo..=hi).map(RingElement::int), length)
    }

    pub fn with_lambda(mut self, lambda: Option<Sign>) -> Self {
        self.lambda_filter = lambda.map(|l| l.normalized(self.domain));
        self
    }

    pub fn with_dedup(mut self, dedup: bool) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn with_length(&self, length: usize) -> Result<Self> {
        if length < 2 {
            return Err(Error::Length(format!("cycles have length at least 2, got {length}")));
        }
        Ok(EnumerationTask {
            length,
            ..self.clone()
        })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn candidates(&self) -> &[RingElement] {
        &self.candidates
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn lambda_filter(&self) -> Option<Sign> {
        self.lambda_filter
    }

    pub fn dedup(&self) -> bool {
        self.dedup
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Prefixes extended by one entry.
    pub nodes_visited: u64,
    /// Sequences satisfying the product identity (before dedup).
    pub cycles_found: u64,
    /// Cycles passed to the consumer.
    pub emitted: u64,
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.nodes_visited += other.nodes_visited;
        self.cycles_found += other.cycles_found;
        self.emitted += other.emitted;
    }
}

struct Search<'a, F> {
    task: &'a EnumerationTask,
    prefix: Vec<RingElement>,
    stats: SearchStats,
    visit: F,
}

impl<F: FnMut(QuiddityCycle)> Search<'_, F> {
    fn extend(&mut self, product: Option<&Matrix2>) {
        let m = self.task.length;
        if self.prefix.len() == m - 1 {
            let p = product.expect("length >= 2 gives a nonempty prefix");
            self.close(p);
            return;
        }
        for idx in 0..self.task.candidates.len() {
            let c = &self.task.candidates[idx];
            self.stats.nodes_visited += 1;
            let next = match product {
                None => eta(c),
                Some(p) => p.mul_eta(c),
            };
            self.prefix.push(c.clone());
            self.extend(Some(&next));
            self.prefix.pop();
        }
    }

    fn close(&mut self, p: &Matrix2) {
        let dom = self.task.domain;
        if !p.a11().is_zero() {
            return;
        }
        for &lambda in Sign::distinct_in(dom) {
            if self.task.lambda_filter.is_some_and(|f| f != lambda) {
                continue;
            }
            let l = lambda.element(dom);
            if *p.a12() != l || *p.a21() != -&l {
                continue;
            }
            let last = &l * p.a22();
            if self.task.candidates.binary_search(&last).is_err() {
                continue;
            }
            self.stats.nodes_visited += 1;
            self.prefix.push(last);
            self.stats.cycles_found += 1;
            if !self.task.dedup || is_canonical(&self.prefix) {
                let cycle = QuiddityCycle::with_lambda(self.prefix.clone(), lambda)
                    .expect("closing entry solves the product identity");
                self.stats.emitted += 1;
                (self.visit)(cycle);
            }
            self.prefix.pop();
        }
    }
}

/// Streams every cycle of the task to `visit` in lexicographic order of the
/// candidate order.
pub fn for_each_cycle(task: &EnumerationTask, visit: impl FnMut(QuiddityCycle)) -> SearchStats {
    let mut search = Search {
        task,
        prefix: Vec::with_capacity(task.length),
        stats: SearchStats::default(),
        visit,
    };
    search.extend(None);
    search.stats
}

fn search_from(task: &EnumerationTask, first: usize) -> (Vec<QuiddityCycle>, SearchStats) {
    let mut out = Vec::new();
    let first_el = task.candidates[first].clone();
    let mut search = Search {
        task,
        prefix: vec![first_el.clone()],
        stats: SearchStats {
            nodes_visited: 1,
            ..SearchStats::default()
        },
        visit: |c| out.push(c),
    };
    search.extend(Some(&eta(&first_el)));
    let stats = search.stats;
    (out, stats)
}

pub fn enumerate_cycles(task: &EnumerationTask) -> Vec<QuiddityCycle> {
    let mut out = Vec::new();
    for_each_cycle(task, |c| out.push(c));
    out
}

/// Progress notification sent after each first-entry partition completes.
#[derive(Clone, Copy, Debug)]
pub struct PartitionDone {
    pub index: usize,
    pub partitions: usize,
    pub stats: SearchStats,
}

/// Runs the search split by first entry on `jobs` threads. The output order
/// is the same as [`enumerate_cycles`] for every `jobs`.
pub fn enumerate_parallel(
    task: &EnumerationTask,
    jobs: usize,
    on_partition: &(dyn Fn(PartitionDone) + Sync),
) -> Result<(Vec<QuiddityCycle>, SearchStats)> {
    let partitions = task.candidates.len();
    let run = || {
        (0..partitions)
            .into_par_iter()
            .map(|idx| {
                let (found, stats) = search_from(task, idx);
                on_partition(PartitionDone {
                    index: idx,
                    partitions,
                    stats,
                });
                (found, stats)
            })
            .collect::<Vec<_>>()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(format!("cannot start worker threads: {e}")))?;
    let parts = pool.install(run);
    let mut all = Vec::new();
    let mut stats = SearchStats::default();
    for (found, s) in parts {
        all.extend(found);
        stats.merge(&s);
    }
    Ok((all, stats))
}

/// Orbits of one task partitioned by reducibility over a subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub task: EnumerationTask,
    pub subset: SubsetSpec,
    /// Sequences found, counting every member of every orbit.
    pub total_cycles: u64,
    pub total_orbits: u64,
    /// Canonical representatives, in enumeration order.
    pub irreducible_orbits: Vec<QuiddityCycle>,
    pub reducible_count: u64,
}

impl ClassificationReport {
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "m = {}  subset = {}  candidates = {}",
            self.task.length,
            self.subset,
            self.task
                .candidates
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(
            out,
            "  cycles: {}  orbits: {}  reducible: {}  irreducible: {}",
            self.total_cycles,
            self.total_orbits,
            self.reducible_count,
            self.irreducible_orbits.len()
        );
        for c in &self.irreducible_orbits {
            let _ = writeln!(out, "  irreducible ({c})  lambda = {}", c.lambda());
        }
        out
    }
}

/// Enumerates the orbits of `task` and sorts them by reducibility over `s`.
pub fn classify(task: &EnumerationTask, s: &SubsetSpec) -> Result<ClassificationReport> {
    classify_parallel(task, s, 1, &|_| {})
}

pub fn classify_parallel(
    task: &EnumerationTask,
    s: &SubsetSpec,
    jobs: usize,
    on_partition: &(dyn Fn(PartitionDone) + Sync),
) -> Result<ClassificationReport> {
    if s.domain() != task.domain {
        return Err(Error::Domain(format!(
            "task over {} but subset over {}",
            task.domain,
            s.domain()
        )));
    }
    if let Some(bad) = task.candidates.iter().find(|x| !s.contains(x)) {
        return Err(Error::Membership {
            element: bad.to_string(),
            subset: s.to_string(),
        });
    }
    if task.length < 3 {
        return Err(Error::Length(format!(
            "classification needs length at least 3, got {}",
            task.length
        )));
    }
    let dedup_task = task.clone().with_dedup(true);
    let (orbits, stats) = enumerate_parallel(&dedup_task, jobs, on_partition)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(format!("cannot start worker threads: {e}")))?;
    let verdicts = pool.install(|| {
        orbits
            .par_iter()
            .map(|c| is_reducible(c, s).map(|w| w.is_some()))
            .collect::<Result<Vec<bool>>>()
    })?;
    let mut irreducible_orbits = Vec::new();
    let mut reducible_count = 0;
    for (c, reducible) in orbits.into_iter().zip(verdicts) {
        if reducible {
            reducible_count += 1;
        } else {
            irreducible_orbits.push(c);
        }
    }
    Ok(ClassificationReport {
        task: task.clone(),
        subset: s.clone(),
        total_cycles: stats.cycles_found,
        total_orbits: stats.emitted,
        irreducible_orbits,
        reducible_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::{canonical_form, verify_cycle};
    use std::collections::BTreeSet;

    // Every sequence in candidates^m, filtered by the product identity.
    fn naive(task: &EnumerationTask) -> Vec<QuiddityCycle> {
        let n = task.candidates().len();
        let m = task.length();
        let mut idx = vec![0usize; m];
        let mut out = Vec::new();
        loop {
            let seq: Vec<_> = idx.iter().map(|&i| task.candidates()[i].clone()).collect();
            if let Some(l) = verify_cycle(&seq).unwrap() {
                if task.lambda_filter().is_none_or(|f| f == l) {
                    out.push(QuiddityCycle::new(seq).unwrap());
                }
            }
            let mut pos = m;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < n {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn ints(vals: &[i64]) -> QuiddityCycle {
        QuiddityCycle::from_ints(vals).unwrap()
    }

    #[test]
    fn length_two() {
        let task = EnumerationTask::int_range(0, 0, 2).unwrap();
        let found = enumerate_cycles(&task);
        assert_eq!(found, [ints(&[0, 0])]);
        assert_eq!(found[0].lambda(), Sign::Minus);
    }

    #[test]
    fn length_three() {
        let task = EnumerationTask::new(Domain::Integer, [-1, 1].map(RingElement::int), 3).unwrap();
        assert_eq!(enumerate_cycles(&task), [ints(&[-1, -1, -1]), ints(&[1, 1, 1])]);
    }

    #[test]
    fn length_four_orbits_match_brute_force() {
        let task = EnumerationTask::int_range(-2, 2, 4).unwrap();
        let all = naive(&task);
        assert_eq!(enumerate_cycles(&task), all);
        let orbits: BTreeSet<Vec<RingElement>> =
            all.iter().map(|c| canonical_form(c.entries()).0).collect();
        let got: Vec<_> = enumerate_cycles(&task.clone().with_dedup(true))
            .into_iter()
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(got, orbits.into_iter().collect::<Vec<_>>());
        // (a,0,-a,0) for a in {0,1,2} up to sign, and the unit cycles
        // (1,2,1,2), (-1,-2,-1,-2)
        let shown: Vec<String> = got.iter().map(|c| crate::cycle::join(c)).collect();
        assert_eq!(
            shown,
            ["-2,-1,-2,-1", "-2,0,2,0", "-1,0,1,0", "0,0,0,0", "1,2,1,2"]
        );
    }

    #[test]
    fn backtracking_matches_naive() {
        for (lo, hi, m) in [(-2, 2, 2), (-2, 2, 3), (-1, 3, 5), (-2, 2, 6), (0, 3, 6), (-3, 3, 5)] {
            let task = EnumerationTask::int_range(lo, hi, m).unwrap();
            assert_eq!(enumerate_cycles(&task), naive(&task), "{lo}..{hi} m={m}");
            let task = task.with_lambda(Some(Sign::Plus));
            assert_eq!(enumerate_cycles(&task), naive(&task));
        }
        let g = EnumerationTask::new(
            Domain::Gaussian,
            [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1)].map(|(a, b)| RingElement::gaussian(a, b)),
            4,
        )
        .unwrap();
        assert_eq!(enumerate_cycles(&g), naive(&g));
        let z5 = Domain::modular(5).unwrap();
        let t = EnumerationTask::new(z5, (0..5).map(|v| RingElement::modular(v, 5)), 4).unwrap();
        assert_eq!(enumerate_cycles(&t), naive(&t));
        let z2 = Domain::modular(2).unwrap();
        let t = EnumerationTask::new(z2, (0..2).map(|v| RingElement::modular(v, 2)), 5).unwrap();
        assert_eq!(enumerate_cycles(&t), naive(&t));
    }

    #[test]
    fn dedup_orbits_are_distinct_and_cover() {
        let task = EnumerationTask::int_range(-2, 3, 5).unwrap();
        let all = enumerate_cycles(&task);
        let orbits = enumerate_cycles(&task.clone().with_dedup(true));
        let mut sizes = 0;
        for (n, o) in orbits.iter().enumerate() {
            for p in &orbits[n + 1..] {
                assert!(!o.is_dihedral_equivalent(p));
            }
            sizes += all.iter().filter(|c| c.is_dihedral_equivalent(o)).count();
        }
        assert_eq!(sizes, all.len());
    }

    #[test]
    fn parallel_output_is_deterministic() {
        let task = EnumerationTask::int_range(-2, 3, 6).unwrap().with_dedup(true);
        let seq = enumerate_cycles(&task);
        for jobs in [1, 2, 4] {
            let (par, stats) = enumerate_parallel(&task, jobs, &|_| {}).unwrap();
            assert_eq!(par, seq);
            assert_eq!(stats.emitted as usize, seq.len());
        }
    }

    #[test]
    fn classify_small_slices() {
        let task = EnumerationTask::int_range(0, 4, 4).unwrap();
        let r = classify(&task, &SubsetSpec::non_negative()).unwrap();
        assert_eq!(r.irreducible_orbits, [ints(&[0, 0, 0, 0])]);
        assert_eq!(r.reducible_count + 1, r.total_orbits);

        let task = EnumerationTask::int_range(-3, 3, 4).unwrap();
        let r = classify(&task, &SubsetSpec::whole(Domain::Integer)).unwrap();
        let shown: Vec<String> = r.irreducible_orbits.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["-3,0,3,0", "-2,0,2,0", "0,0,0,0"]);
    }

    #[test]
    fn classify_errors() {
        let task = EnumerationTask::int_range(-1, 2, 4).unwrap();
        assert!(matches!(
            classify(&task, &SubsetSpec::non_negative()),
            Err(Error::Membership { .. })
        ));
        let short = EnumerationTask::int_range(0, 2, 2).unwrap();
        assert!(matches!(
            classify(&short, &SubsetSpec::non_negative()),
            Err(Error::Length(_))
        ));
        assert!(EnumerationTask::int_range(1, 0, 3).is_err());
        assert!(EnumerationTask::int_range(0, 1, 1).is_err());
    }
}
