//! Batch checks of the structural statements about Hankel edge ideals over
//! families of small graphs.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::closed_forms::{path_initial_ideal, t1_groebner_set, t1_initial_ideal, t2_groebner_set, t2_initial_ideal};
use super::ideal::{hankel_edge_ideal, hankel_full_ideal};
use super::prime::{minimal_prime_candidates, verify_minimal_primes};
use super::report::{property_report_with, Radicality, ReportOptions};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::{
    classify_labeling, enumerate_rooted_labelings, is_closed_labeling, standard, tree_isomorphism_classes, LabeledGraph,
};
use crate::groebner::{ideals_equal, initial_ideal, is_groebner_basis, Ideal};
use crate::ideal_ops::{height, intersect_ideals, monomial_is_ci, radicals_equal};
use crate::ring::MonomialOrder;

const SEED: u64 = 0x4a4b_1d2e;
/// Cap on sampled chord subsets per class and size.
const SAMPLE_CAP: usize = 512;
const RADICAL_SAMPLES: usize = 10;

/// The statements that [`verify_theorem`] can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub enum TheoremTag {
    /// Height `n-1` and the listed minimal primes for labeled Hamiltonian
    /// and semi-Hamiltonian graphs.
    HamiltonianHeight,
    /// `I_{K_n} = I_X`, `I_{K_n - e} = I_X ∩ (x2..xn)`, and radicality
    /// exactly for these two graphs.
    CompleteGraphRadical,
    /// Almost complete intersection exactly for `C_n` and `L_n + {t, t+s}`.
    AlmostCompleteIntersection,
    /// Among `L_n + {t, t+s}`, closed exactly when `s = 2`.
    ClosedUnicyclic,
    /// Non-path rooted trees have height at most `n-2`.
    TreeHeightBound,
    /// Rooted trees are complete intersections exactly when they are paths
    /// rooted at a leaf or at a neighbor of a leaf.
    RootedTreeCompleteIntersection,
    /// Closed-form initial ideals of `L_n`, `T1(n)`, `T2(n)`.
    RootedPathInitialIdeals,
    /// `rad(I_G) = rad(I_{L_n})` for labeled semi-Hamiltonian graphs.
    SemiHamiltonianRadical,
}

pub const ALL_THEOREMS: [TheoremTag; 8] = [
    TheoremTag::HamiltonianHeight,
    TheoremTag::CompleteGraphRadical,
    TheoremTag::AlmostCompleteIntersection,
    TheoremTag::ClosedUnicyclic,
    TheoremTag::TreeHeightBound,
    TheoremTag::RootedTreeCompleteIntersection,
    TheoremTag::RootedPathInitialIdeals,
    TheoremTag::SemiHamiltonianRadical,
];

impl TheoremTag {
    pub fn tag(self) -> &'static str {
        match self {
            TheoremTag::HamiltonianHeight => "thm2.2",
            TheoremTag::CompleteGraphRadical => "cor2.3",
            TheoremTag::AlmostCompleteIntersection => "prop2.6",
            TheoremTag::ClosedUnicyclic => "cor2.7",
            TheoremTag::TreeHeightBound => "thm3.1",
            TheoremTag::RootedTreeCompleteIntersection => "thm3.2",
            TheoremTag::RootedPathInitialIdeals => "prop3.5",
            TheoremTag::SemiHamiltonianRadical => "prop2.8-radical",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremTag::HamiltonianHeight => "height I_G = n-1 with the listed minimal primes",
            TheoremTag::CompleteGraphRadical => "I_{K_n} = I_X and I_{K_n-e} = I_X ∩ (x2,...,xn); radical only for these",
            TheoremTag::AlmostCompleteIntersection => "almost CI exactly for C_n and L_n + {t,t+s}",
            TheoremTag::ClosedUnicyclic => "L_n + {t,t+s} is closed iff s = 2",
            TheoremTag::TreeHeightBound => "height I_T <= n-2 for non-path rooted trees",
            TheoremTag::RootedTreeCompleteIntersection => "CI iff path rooted at a leaf or a neighbor of a leaf",
            TheoremTag::RootedPathInitialIdeals => "closed-form initial ideals of L_n, T1(n), T2(n)",
            TheoremTag::SemiHamiltonianRadical => "rad I_G = rad I_{L_n}",
        }
    }

    /// Smallest and largest supported `n`.
    pub fn bounds(self) -> (usize, usize) {
        match self {
            TheoremTag::HamiltonianHeight => (2, 6),
            TheoremTag::CompleteGraphRadical => (3, 5),
            TheoremTag::AlmostCompleteIntersection => (3, 6),
            TheoremTag::ClosedUnicyclic => (4, 7),
            TheoremTag::TreeHeightBound => (4, 7),
            TheoremTag::RootedTreeCompleteIntersection => (3, 7),
            TheoremTag::RootedPathInitialIdeals => (3, 8),
            TheoremTag::SemiHamiltonianRadical => (3, 6),
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl From<TheoremTag> for String {
    fn from(t: TheoremTag) -> String {
        t.tag().to_string()
    }
}

impl FromStr for TheoremTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub key: String,
    pub n: usize,
    pub graph: Option<LabeledGraph>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub tag: TheoremTag,
    pub statement: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub instances: Vec<InstanceResult>,
    pub passed: usize,
    pub failed: usize,
    pub ok: bool,
}

impl TheoremReport {
    /// `(n, passed, total)` per size, ascending.
    pub fn per_n(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for r in &self.instances {
            match out.last_mut() {
                Some(last) if last.0 == r.n => {
                    last.1 += r.passed as usize;
                    last.2 += 1;
                }
                _ => out.push((r.n, r.passed as usize, 1)),
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
enum Check {
    MinimalPrimes,
    CompleteEqualsCurve,
    CompleteMinusEdgeIntersection,
    Radical { expected: bool },
    AlmostCi { expected: bool },
    Closed { expected: bool },
    HeightAtMost { bound: usize },
    Ci { expected: bool },
    PathInitial,
    T1Initial,
    T2Initial,
    SameRadicalAsPath,
}

#[derive(Clone, Debug)]
struct Job {
    key: String,
    n: usize,
    graph: Option<LabeledGraph>,
    check: Check,
}

impl Job {
    fn on(graph: LabeledGraph, label: &str, check: Check) -> Job {
        Job {
            key: format!("n={} {label} {graph}", graph.n()),
            n: graph.n(),
            graph: Some(graph),
            check,
        }
    }

    fn bare(n: usize, label: &str, check: Check) -> Job {
        Job {
            key: format!("n={n} {label}"),
            n,
            graph: None,
            check,
        }
    }
}

/// Pairs `{i, j}` with `j >= i + 2`, leaving out `{1, n}`.
fn chords(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            if (i, j) != (1, n) {
                out.push((i, j));
            }
        }
    }
    out
}

fn with_chords(base: &LabeledGraph, chords: &[(usize, usize)], mask: u64) -> Result<LabeledGraph> {
    let mut g = base.clone();
    for (k, &(a, b)) in chords.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g = g.with_edge(a, b)?;
        }
    }
    Ok(g)
}

/// All chord subsets added to `base` when there are at most `cap` of them,
/// otherwise the empty and full subsets plus a seeded sample.
fn chord_family(base: &LabeledGraph, cap: usize, rng: &mut ChaCha8Rng) -> Result<Vec<LabeledGraph>> {
    let chords = chords(base.n());
    let count = 1u64 << chords.len();
    let masks: Vec<u64> = if count as usize <= cap {
        (0..count).collect()
    } else {
        let mut all: Vec<u64> = (1..count - 1).collect();
        all.shuffle(rng);
        let mut picked: Vec<u64> = all.into_iter().take(cap - 2).collect();
        picked.push(0);
        picked.push(count - 1);
        picked.sort_unstable();
        picked
    };
    masks.into_iter().map(|m| with_chords(base, &chords, m)).collect()
}

fn hamiltonian_family(n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<Vec<LabeledGraph>> {
    if n == 2 {
        return Ok(vec![standard::path(2)?]);
    }
    chord_family(&standard::cycle(n)?, cap, rng)
}

fn semi_hamiltonian_family(n: usize, cap: usize, rng: &mut ChaCha8Rng) -> Result<Vec<LabeledGraph>> {
    if n == 2 {
        return Ok(Vec::new());
    }
    chord_family(&standard::path(n)?, cap, rng)
}

/// `L_n + {t, t+s}` for all `s >= 2`, `t + s <= n`.
fn unicyclic_family(n: usize) -> Result<Vec<(usize, usize, LabeledGraph)>> {
    let mut out = Vec::new();
    for s in 2..n {
        for t in 1..=n - s {
            out.push((t, s, standard::path_plus_edge(n, t, s)?));
        }
    }
    Ok(out)
}

/// Every rooted labeling of every tree shape on `n` vertices.
fn rooted_trees(n: usize) -> Result<Vec<LabeledGraph>> {
    let mut out = Vec::new();
    for shape in tree_isomorphism_classes(n)? {
        out.extend(enumerate_rooted_labelings(&shape)?);
    }
    Ok(out)
}

fn root_near_leaf(t: &LabeledGraph) -> bool {
    t.degree(1) == 1 || t.neighbors(1).into_iter().any(|v| t.degree(v) == 1)
}

fn jobs_for(tag: TheoremTag, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    match tag {
        TheoremTag::HamiltonianHeight => {
            for g in hamiltonian_family(n, SAMPLE_CAP, rng)? {
                jobs.push(Job::on(g, "hamiltonian", Check::MinimalPrimes));
            }
            for g in semi_hamiltonian_family(n, SAMPLE_CAP, rng)? {
                jobs.push(Job::on(g, "semi-hamiltonian", Check::MinimalPrimes));
            }
        }
        TheoremTag::CompleteGraphRadical => {
            jobs.push(Job::bare(n, "I_K = I_X", Check::CompleteEqualsCurve));
            jobs.push(Job::bare(n, "I_{K-e} = I_X ∩ (x2..xn)", Check::CompleteMinusEdgeIntersection));
            let full = standard::complete(n)?;
            for g in hamiltonian_family(n, SAMPLE_CAP, rng)? {
                let expected = g == full;
                jobs.push(Job::on(g, "hamiltonian", Check::Radical { expected }));
            }
            let almost = standard::complete_minus_edge(n)?;
            for g in semi_hamiltonian_family(n, SAMPLE_CAP, rng)? {
                let expected = g == almost;
                jobs.push(Job::on(g, "semi-hamiltonian", Check::Radical { expected }));
            }
        }
        TheoremTag::AlmostCompleteIntersection => {
            let cycle = standard::cycle(n)?;
            for g in hamiltonian_family(n, SAMPLE_CAP, rng)? {
                let expected = g == cycle;
                jobs.push(Job::on(g, "hamiltonian", Check::AlmostCi { expected }));
            }
            if n >= 4 {
                for (t, s, g) in unicyclic_family(n)? {
                    jobs.push(Job::on(g, &format!("t={t} s={s}"), Check::AlmostCi { expected: true }));
                }
            }
        }
        TheoremTag::ClosedUnicyclic => {
            for (t, s, g) in unicyclic_family(n)? {
                jobs.push(Job::on(g, &format!("t={t} s={s}"), Check::Closed { expected: s == 2 }));
            }
        }
        TheoremTag::TreeHeightBound => {
            for t in rooted_trees(n)?.into_iter().filter(|t| !t.is_path()) {
                jobs.push(Job::on(t, "rooted tree", Check::HeightAtMost { bound: n - 2 }));
            }
        }
        TheoremTag::RootedTreeCompleteIntersection => {
            for t in rooted_trees(n)? {
                let expected = t.is_path() && root_near_leaf(&t);
                jobs.push(Job::on(t, "rooted tree", Check::Ci { expected }));
            }
        }
        TheoremTag::RootedPathInitialIdeals => {
            jobs.push(Job::on(standard::path(n)?, "L", Check::PathInitial));
            jobs.push(Job::on(standard::t1(n)?, "T1", Check::T1Initial));
            if n >= 4 {
                jobs.push(Job::on(standard::t2(n)?, "T2", Check::T2Initial));
            }
        }
        TheoremTag::SemiHamiltonianRadical => {
            if n == 6 {
                jobs.push(Job::on(standard::figure2(), "figure 2", Check::SameRadicalAsPath));
            }
            let chords = chords(n);
            let mut seen = std::collections::BTreeSet::new();
            let distinct = 1usize << chords.len();
            while seen.len() < RADICAL_SAMPLES.min(distinct) {
                let mask: u64 = rand::Rng::gen_range(rng, 0..distinct as u64);
                if seen.insert(mask) {
                    let g = with_chords(&standard::path(n)?, &chords, mask)?;
                    jobs.push(Job::on(g, "random", Check::SameRadicalAsPath));
                }
            }
        }
    }
    Ok(jobs)
}

fn no_radicality() -> ReportOptions {
    ReportOptions {
        radicality: false,
        order: MonomialOrder::RevLex,
    }
}

fn run(job: &Job, budget: &Budget) -> Result<InstanceResult> {
    let ord = MonomialOrder::RevLex;
    let n = job.n;
    let graph = job.graph.as_ref();
    let (passed, detail) = match &job.check {
        Check::MinimalPrimes => {
            let g = graph.expect("graph instance");
            let h = hankel_edge_ideal(g)?;
            let ht = height(h.ideal(), ord, budget)?;
            let candidates = minimal_prime_candidates(g)?;
            let report = verify_minimal_primes(&h, &candidates, budget)?;
            let shown: Vec<String> = candidates.iter().map(|p| p.to_string()).collect();
            (
                ht == n - 1 && report.verified(),
                format!("height {ht}; primes [{}] verified: {}", shown.join(", "), report.verified()),
            )
        }
        Check::CompleteEqualsCurve => {
            let h = hankel_edge_ideal(&standard::complete(n)?)?;
            let eq = ideals_equal(h.ideal(), &hankel_full_ideal(n)?, ord, budget)?;
            (eq, format!("equal: {eq}"))
        }
        Check::CompleteMinusEdgeIntersection => {
            let h = hankel_edge_ideal(&standard::complete_minus_edge(n)?)?;
            let curve = hankel_full_ideal(n)?;
            let vars = Ideal::variables(h.context(), 1..n)?;
            let meet = intersect_ideals(&curve, &vars, budget)?;
            let eq = ideals_equal(h.ideal(), &meet, ord, budget)?;
            (eq, format!("equal: {eq}"))
        }
        Check::Radical { expected } => {
            let g = graph.expect("graph instance");
            let r = property_report_with(g, budget, ReportOptions::default())?;
            let got = r.is_radical;
            let want = if *expected { Radicality::Radical } else { Radicality::NotRadical };
            (got == want, format!("radical: {got:?}, expected {want:?}"))
        }
        Check::AlmostCi { expected } => {
            let g = graph.expect("graph instance");
            let r = property_report_with(g, budget, no_radicality())?;
            (
                r.is_almost_ci == *expected,
                format!("mu {} height {}; almost CI {}, expected {expected}", r.mu, r.height, r.is_almost_ci),
            )
        }
        Check::Closed { expected } => {
            let g = graph.expect("graph instance");
            let closed = is_closed_labeling(g);
            (closed == *expected, format!("closed {closed}, expected {expected}"))
        }
        Check::HeightAtMost { bound } => {
            let h = hankel_edge_ideal(graph.expect("graph instance"))?;
            let ht = height(h.ideal(), ord, budget)?;
            (ht <= *bound, format!("height {ht} <= {bound}: {}", ht <= *bound))
        }
        Check::Ci { expected } => {
            let g = graph.expect("graph instance");
            let r = property_report_with(g, budget, no_radicality())?;
            (
                r.is_ci == *expected,
                format!("mu {} height {}; CI {}, expected {expected}", r.mu, r.height, r.is_ci),
            )
        }
        Check::PathInitial => {
            let h = hankel_edge_ideal(graph.expect("graph instance"))?;
            let ini = initial_ideal(h.ideal(), ord, budget)?;
            let want = path_initial_ideal(n)?;
            let ci = monomial_is_ci(&ini);
            (ini == want && ci, format!("initial ideal {ini}; CI {ci}"))
        }
        Check::T1Initial | Check::T2Initial => {
            let g = graph.expect("graph instance");
            let h = hankel_edge_ideal(g)?;
            let ini = initial_ideal(h.ideal(), ord, budget)?;
            let (want, set) = if matches!(job.check, Check::T1Initial) {
                (t1_initial_ideal(n)?, t1_groebner_set(n)?)
            } else {
                (t2_initial_ideal(n)?, t2_groebner_set(n)?)
            };
            let is_gb = is_groebner_basis(&set, ord);
            let generates = ideals_equal(&Ideal::new(set)?, h.ideal(), ord, budget)?;
            let ci = monomial_is_ci(&ini);
            (
                ini == want && is_gb && generates && !ci,
                format!("initial ideal {ini}; matches closed form {}; listed set is a GB of I_T: {}; CI {ci}", ini == want, is_gb && generates),
            )
        }
        Check::SameRadicalAsPath => {
            let g = graph.expect("graph instance");
            let class = classify_labeling(g);
            let h = hankel_edge_ideal(g)?;
            let path = hankel_edge_ideal(&standard::path(n)?)?;
            let eq = radicals_equal(h.ideal(), path.ideal(), budget)?;
            (
                class.labeled_semi_hamiltonian && eq,
                format!("semi-hamiltonian {}; radicals equal {eq}", class.labeled_semi_hamiltonian),
            )
        }
    };
    Ok(InstanceResult {
        key: job.key.clone(),
        n,
        graph: job.graph.clone(),
        passed,
        detail,
    })
}

/// Runs the instance family of `tag` for each `n` in `range` on `jobs`
/// worker threads. Instances are reported in generation order regardless
/// of `jobs`.
pub fn verify_theorem(tag: TheoremTag, range: RangeInclusive<usize>, jobs: usize, budget: &Budget) -> Result<TheoremReport> {
    let (lo, hi) = tag.bounds();
    let (start, end) = (*range.start(), *range.end());
    if end > hi {
        return Err(Error::RangeTooLarge {
            tag: tag.to_string(),
            max: hi,
            requested: end,
        });
    }
    let start = start.max(lo);
    if start > end {
        return Err(Error::OutOfRange(format!("{tag} needs n >= {lo}, requested up to {end}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut all = Vec::new();
    for n in start..=end {
        all.extend(jobs_for(tag, n, &mut rng)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?;
    let instances: Vec<InstanceResult> = pool.install(|| all.par_iter().map(|j| run(j, budget)).collect::<Result<_>>())?;
    let passed = instances.iter().filter(|r| r.passed).count();
    let failed = instances.len() - passed;
    Ok(TheoremReport {
        tag,
        statement: tag.statement(),
        n_min: start,
        n_max: end,
        instances,
        passed,
        failed,
        ok: failed == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_round_trip() {
        for t in ALL_THEOREMS {
            assert_eq!(t.tag().parse::<TheoremTag>().unwrap(), t);
        }
        assert!(matches!("thm9.9".parse::<TheoremTag>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn refuses_large_ranges() {
        let b = Budget::default();
        let err = verify_theorem(TheoremTag::CompleteGraphRadical, 3..=9, 1, &b).unwrap_err();
        assert!(matches!(err, Error::RangeTooLarge { max: 5, requested: 9, .. }));
    }

    #[test]
    fn chord_counts() {
        assert_eq!(chords(3).len(), 0);
        assert_eq!(chords(4).len(), 2);
        assert_eq!(chords(5).len(), 5);
    }

    #[test]
    fn closed_unicyclic_small() {
        let r = verify_theorem(TheoremTag::ClosedUnicyclic, 4..=5, 1, &Budget::default()).unwrap();
        assert!(r.ok);
        assert_eq!(r.instances.len(), 3 + 6);
    }

    #[test]
    fn parallel_matches_serial() {
        let b = Budget::default();
        let a = verify_theorem(TheoremTag::RootedPathInitialIdeals, 3..=5, 1, &b).unwrap();
        let c = verify_theorem(TheoremTag::RootedPathInitialIdeals, 3..=5, 3, &b).unwrap();
        assert!(a.ok);
        let keys = |r: &TheoremReport| r.instances.iter().map(|i| i.key.clone()).collect::<Vec<_>>();
        assert_eq!(keys(&a), keys(&c));
    }
}
