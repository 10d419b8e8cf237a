//! Hankel edge ideals `I_G = (x_i x_{j+1} - x_j x_{i+1} : {i,j} in E(G))`,
//! their minimal primes and structural properties.

mod closed_forms;
mod ideal;
mod prime;
mod report;
mod verify;

pub use closed_forms::{
    cubic_f, cubic_h, path_initial_ideal, t1_groebner_set, t1_initial_ideal, t2_groebner_set, t2_initial_ideal,
};
pub use ideal::{edge_binomials, hankel_binomial, hankel_edge_ideal, hankel_full_ideal, HankelIdeal};
pub use prime::{
    expand_structured_prime, minimal_prime_candidates, verify_minimal_primes, CandidateVerdict, MinPrimesReport,
    StructuredPrime,
};
pub use report::{property_report, property_report_with, PropertyReport, Radicality, ReportOptions};
pub use verify::{verify_theorem, InstanceResult, TheoremReport, TheoremTag, ALL_THEOREMS};
