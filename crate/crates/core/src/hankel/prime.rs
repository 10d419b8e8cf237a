use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::ideal::{minors, HankelIdeal};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::{classify_labeling, standard, LabeledGraph};
use crate::groebner::{buchberger, Ideal, ReducedGroebnerBasis};
use crate::ideal_ops::{intersect_ideals, radical_member};
use crate::ring::{MonomialOrder, Polynomial, VariableContext};
use crate::{Rational, RatIdeal};

/// A prime of the shape `(x_v : v in variables) + (g_ij : a <= i < j <= b)`.
///
/// The minors of a contiguous Hankel block live in `x_a .. x_{b+1}`, which
/// must be disjoint from the listed variables. Such an ideal is prime: a
/// variable ideal plus, in disjoint variables, the ideal of a rational
/// normal curve (taken as known, not computed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StructuredPrime {
    variables: BTreeSet<usize>,
    minors: Option<(usize, usize)>,
}

impl StructuredPrime {
    /// Variables are 1-based labels; `minors = Some((a, b))` needs `a < b`.
    pub fn new(variables: impl IntoIterator<Item = usize>, minors: Option<(usize, usize)>) -> Result<Self> {
        let variables: BTreeSet<usize> = variables.into_iter().collect();
        if variables.contains(&0) {
            return Err(Error::InvalidPrime("variables are numbered from 1".into()));
        }
        if let Some((a, b)) = minors {
            if a == 0 || a >= b {
                return Err(Error::InvalidPrime(format!("minor range {a}..{b} needs 1 <= a < b")));
            }
            if let Some(v) = variables.iter().find(|&&v| v >= a && v <= b + 1) {
                return Err(Error::InvalidPrime(format!(
                    "x{v} overlaps the minors of x{a}..x{}",
                    b + 1
                )));
            }
        }
        if variables.is_empty() && minors.is_none() {
            return Err(Error::InvalidPrime("the zero ideal is not a candidate".into()));
        }
        Ok(StructuredPrime { variables, minors })
    }

    pub fn from_variables(variables: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(variables, None)
    }

    /// Variables plus the minors on `a..=b`; a block with fewer than two
    /// columns contributes nothing.
    pub fn with_block(variables: impl IntoIterator<Item = usize>, a: usize, b: usize) -> Result<Self> {
        Self::new(variables, (a < b).then_some((a, b)))
    }

    /// The ideal of the rational normal curve, all minors of `1..=n`.
    pub fn rational_normal_curve(n: usize) -> Result<Self> {
        Self::new([], Some((1, n)))
    }

    pub fn variables(&self) -> &BTreeSet<usize> {
        &self.variables
    }

    pub fn minors(&self) -> Option<(usize, usize)> {
        self.minors
    }

    /// Largest variable index this prime mentions.
    fn max_index(&self) -> usize {
        let v = self.variables.iter().next_back().copied().unwrap_or(0);
        let m = self.minors.map_or(0, |(_, b)| b + 1);
        v.max(m)
    }
}

impl fmt::Display for StructuredPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.variables.iter().map(|v| format!("x{v}")).collect();
        if let Some((a, b)) = self.minors {
            parts.push(format!("minors({a}..{b})"));
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// Text form `vars=1,2,4;minors=3..5`; either part may be omitted.
impl FromStr for StructuredPrime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidPrime(format!("`{s}`: {m}"));
        let mut variables = Vec::new();
        let mut minors = None;
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            if let Some(list) = part.strip_prefix("vars=") {
                for v in list.split(',').map(str::trim).filter(|v| !v.is_empty()) {
                    let v = v.trim_start_matches('x');
                    variables.push(v.parse::<usize>().map_err(|_| bad("bad variable"))?);
                }
            } else if let Some(range) = part.strip_prefix("minors=") {
                let (a, b) = range.split_once("..").ok_or_else(|| bad("expected a..b"))?;
                let a = a.trim().parse().map_err(|_| bad("bad range start"))?;
                let b = b.trim().parse().map_err(|_| bad("bad range end"))?;
                minors = Some((a, b));
            } else {
                return Err(bad("expected `vars=` or `minors=`"));
            }
        }
        StructuredPrime::new(variables, minors)
    }
}

/// The generators of `prime` in `ctx`: its variables, then its minors.
pub fn expand_structured_prime(prime: &StructuredPrime, ctx: &Arc<VariableContext>) -> Result<RatIdeal> {
    if prime.max_index() > ctx.base_count() {
        return Err(Error::InvalidPrime(format!(
            "{prime} does not fit in {ctx}"
        )));
    }
    let mut gens: Vec<Polynomial<Rational>> = prime
        .variables
        .iter()
        .map(|&v| Polynomial::var(ctx, v - 1))
        .collect();
    if let Some((a, b)) = prime.minors {
        gens.extend(minors(ctx, a, b));
    }
    Ideal::new(gens)
}

fn range(a: usize, b: usize) -> impl Iterator<Item = usize> {
    a..=b
}

/// The known list of minimal primes for the covered graph classes: labeled
/// Hamiltonian, labeled semi-Hamiltonian, and the two rooted paths whose
/// root is adjacent to a leaf (`standard::t1`, `standard::t2`).
pub fn minimal_prime_candidates(g: &LabeledGraph) -> Result<Vec<StructuredPrime>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::NoCandidateList);
    }
    let curve = StructuredPrime::rational_normal_curve(n)?;
    let class = classify_labeling(g);
    if class.labeled_hamiltonian {
        return Ok(vec![curve]);
    }
    if class.labeled_semi_hamiltonian {
        return Ok(vec![curve, StructuredPrime::from_variables(range(2, n))?]);
    }
    if n >= 3 && *g == standard::t1(n)? {
        if n == 3 {
            // (x1, x2) and (x1, x2) + minors(3..3) coincide; (x2, x3) misses g_13
            return Ok(vec![curve, StructuredPrime::from_variables([1, 2])?]);
        }
        if n == 4 {
            // (x1, x2, x4) misses g_34, the subpath on {3, 4} having no variable prime
            return Ok(vec![
                curve,
                StructuredPrime::from_variables(range(2, 4))?,
                StructuredPrime::with_block([1, 2], 3, 4)?,
            ]);
        }
        return Ok(vec![
            curve,
            StructuredPrime::from_variables([1, 2].into_iter().chain(range(4, n)))?,
            StructuredPrime::from_variables(range(2, n))?,
            StructuredPrime::with_block([1, 2], 3, n)?,
        ]);
    }
    if n >= 4 && *g == standard::t2(n)? {
        let mut list = vec![
            curve,
            StructuredPrime::from_variables([1, 2].into_iter().chain(range(4, n)))?,
            StructuredPrime::from_variables(range(2, n))?,
            StructuredPrime::with_block([1, 2, 3], 4, n)?,
        ];
        // at n = 4 the last two coincide; at n = 5 the last one is not minimal
        if n >= 6 {
            list.push(StructuredPrime::from_variables([1, 2, 3].into_iter().chain(range(5, n)))?);
        }
        return Ok(list);
    }
    Err(Error::NoCandidateList)
}

/// Checks on one candidate prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub prime: StructuredPrime,
    /// Every generator of `I_G` lies in the candidate.
    pub contains_ideal: bool,
    /// No other candidate contains it or is contained in it.
    pub incomparable_with_others: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinPrimesReport {
    pub verdicts: Vec<CandidateVerdict>,
    /// `I_G` is contained in the intersection of the candidates.
    pub ideal_in_intersection: bool,
    /// Every generator of the intersection lies in `rad(I_G)`.
    pub intersection_in_radical: bool,
    pub intersection_matches_radical: bool,
    #[serde(skip)]
    pub intersection: RatIdeal,
}

impl MinPrimesReport {
    pub fn candidates(&self) -> impl Iterator<Item = &StructuredPrime> {
        self.verdicts.iter().map(|v| &v.prime)
    }

    pub fn verified(&self) -> bool {
        self.intersection_matches_radical
            && self
                .verdicts
                .iter()
                .all(|v| v.contains_ideal && v.incomparable_with_others)
    }
}

/// Certifies `Min(I_G) = candidates`: each candidate contains `I_G`, the
/// candidates are pairwise incomparable, and their intersection equals
/// `rad(I_G)`. With primality of the candidates this pins down the minimal
/// primes.
pub fn verify_minimal_primes(h: &HankelIdeal, candidates: &[StructuredPrime], budget: &Budget) -> Result<MinPrimesReport> {
    let ord = MonomialOrder::RevLex;
    if candidates.is_empty() {
        return Err(Error::InvalidPrime("empty candidate list".into()));
    }
    let ideals: Vec<RatIdeal> = candidates
        .iter()
        .map(|p| expand_structured_prime(p, h.context()))
        .collect::<Result<_>>()?;
    let bases: Vec<ReducedGroebnerBasis<Rational>> = ideals
        .iter()
        .map(|i| buchberger(i, ord, budget))
        .collect::<Result<_>>()?;
    let within = |a: usize, b: usize| ideals[a].generators().iter().all(|g| bases[b].contains(g));

    let mut verdicts = Vec::with_capacity(candidates.len());
    for (k, prime) in candidates.iter().enumerate() {
        let contains_ideal = h.ideal().generators().iter().all(|g| bases[k].contains(g));
        let incomparable_with_others = (0..candidates.len())
            .filter(|&o| o != k)
            .all(|o| !within(k, o) && !within(o, k));
        verdicts.push(CandidateVerdict {
            prime: prime.clone(),
            contains_ideal,
            incomparable_with_others,
        });
    }

    let mut intersection = ideals[0].clone();
    for next in &ideals[1..] {
        intersection = intersect_ideals(&intersection, next, budget)?;
    }
    let meet = buchberger(&intersection, ord, budget)?;
    let ideal_in_intersection = h.ideal().generators().iter().all(|g| meet.contains(g));
    let own = buchberger(h.ideal(), ord, budget)?;
    let mut intersection_in_radical = true;
    for g in meet.elements() {
        if own.contains(g) {
            continue;
        }
        if !radical_member(g, h.ideal(), budget)? {
            intersection_in_radical = false;
            break;
        }
    }
    Ok(MinPrimesReport {
        verdicts,
        ideal_in_intersection,
        intersection_in_radical,
        intersection_matches_radical: ideal_in_intersection && intersection_in_radical,
        intersection: meet.as_ideal(),
    })
}
