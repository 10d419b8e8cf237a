//! Labeled graphs, labeling classes, rooted labelings of trees and tree
//! enumeration.

mod classify;
mod graph;
mod io;
mod rooted;
pub mod standard;
mod trees;

pub use classify::{classify_labeling, is_closed_labeling, maximal_cliques, LabelClass};
pub use graph::LabeledGraph;
pub use io::{format_graph, parse_graph};
pub use rooted::{enumerate_rooted_labelings, is_rooted_labeling, RootedLabelingCertificate};
pub use standard::builtin;
pub use trees::{all_labeled_trees, canonical_form, prufer_decode, tree_isomorphism_classes};
