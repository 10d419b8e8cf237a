use serde::Serialize;

use super::ideal::hankel_edge_ideal;
use super::prime::{minimal_prime_candidates, verify_minimal_primes};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graphs::LabeledGraph;
use crate::groebner::ideals_equal;
use crate::ideal_ops::{height, is_minimal_generating_set};
use crate::ring::MonomialOrder;

/// Radicality verdict; only decided when a verified list of minimal primes
/// is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Radicality {
    Radical,
    NotRadical,
    Unknown,
    NotChecked,
}

impl Radicality {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Radicality::Radical => Some(true),
            Radicality::NotRadical => Some(false),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    /// Number of generators, one per edge.
    pub mu: usize,
    /// No generator lies in the ideal of the others, so `mu` is minimal.
    pub mu_minimal: bool,
    pub height: usize,
    pub is_ci: bool,
    pub is_almost_ci: bool,
    pub is_radical: Radicality,
    /// Which checks ran, in order.
    pub evidence: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    /// Decide radicality through the minimal-prime certificate.
    pub radicality: bool,
    pub order: MonomialOrder,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            radicality: true,
            order: MonomialOrder::RevLex,
        }
    }
}

pub fn property_report(g: &LabeledGraph, budget: &Budget) -> Result<PropertyReport> {
    property_report_with(g, budget, ReportOptions::default())
}

pub fn property_report_with(g: &LabeledGraph, budget: &Budget, opts: ReportOptions) -> Result<PropertyReport> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let h = hankel_edge_ideal(g)?;
    let mut evidence = Vec::new();
    let mu = g.edge_count();
    let mu_minimal = is_minimal_generating_set(h.ideal(), opts.order, budget)?;
    evidence.push(format!("minimal generation by ideal membership: {mu_minimal}"));
    let ht = height(h.ideal(), opts.order, budget)?;
    evidence.push(format!("height from the initial ideal under {}: {ht}", opts.order));
    let is_ci = mu_minimal && mu == ht;
    let is_almost_ci = mu_minimal && mu == ht + 1;

    let is_radical = if !opts.radicality {
        Radicality::NotChecked
    } else {
        match minimal_prime_candidates(g) {
            Err(Error::NoCandidateList) => {
                evidence.push("radicality: no candidate list for this class".into());
                Radicality::Unknown
            }
            Err(e) => return Err(e),
            Ok(candidates) => {
                let report = verify_minimal_primes(&h, &candidates, budget)?;
                if !report.verified() {
                    evidence.push("radicality: candidate list failed verification".into());
                    Radicality::Unknown
                } else {
                    let equal = ideals_equal(h.ideal(), &report.intersection, opts.order, budget)?;
                    evidence.push(format!(
                        "radicality: {} verified minimal primes, ideal equals their intersection: {equal}",
                        candidates.len()
                    ));
                    if equal {
                        Radicality::Radical
                    } else {
                        Radicality::NotRadical
                    }
                }
            }
        }
    };
    Ok(PropertyReport {
        mu,
        mu_minimal,
        height: ht,
        is_ci,
        is_almost_ci,
        is_radical,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::standard;

    #[test]
    fn complete_cycle_path() {
        let b = Budget::default();
        let k4 = property_report(&standard::complete(4).unwrap(), &b).unwrap();
        assert_eq!((k4.mu, k4.height, k4.is_ci), (6, 3, false));
        assert_eq!(k4.is_radical, Radicality::Radical);
        let c5 = property_report(&standard::cycle(5).unwrap(), &b).unwrap();
        assert!(c5.is_almost_ci && !c5.is_ci);
        assert_eq!(c5.is_radical, Radicality::NotRadical);
        let l5 = property_report(&standard::path(5).unwrap(), &b).unwrap();
        assert!(l5.is_ci && l5.mu == 4 && l5.height == 4);
        assert_eq!(l5.is_radical, Radicality::NotRadical);
    }

    #[test]
    fn uncovered_and_disconnected() {
        let b = Budget::default();
        let r = property_report(&standard::figure4(), &b).unwrap();
        assert_eq!(r.is_radical, Radicality::Unknown);
        let g = LabeledGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(property_report(&g, &b).unwrap_err(), Error::DisconnectedGraph);
    }
}
