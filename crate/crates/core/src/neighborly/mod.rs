//! Neighborly graphs and the combinatorial components `V¹(Γ)` they index.

mod component;
mod decomposition;
mod enumerate;
mod graph;
mod partner;

pub use component::{k_gamma, v1_contains, v1_k_contains, Component, ComponentReport, KGamma, Witness};
pub use decomposition::{decomposition_check, DecompositionReport, GraphCount};
pub use enumerate::{
    enumerate_neighborly, neighborly_candidates, ConeChoice, EnumMode, EnumOptions, MAX_GRAPH_POINTS,
    MAX_PARTITION_POINTS,
};
pub use graph::{Graph, NeighborlyMode};
pub use partner::{extension_of, gamma_of, generic_graph, generic_partner, generic_partner_search, partner_bound};

