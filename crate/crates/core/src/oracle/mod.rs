//! Brute-force ground truth over small finite rings.

mod fit;
mod hessian;
mod regulus;
mod scan;

pub use fit::{fit_forms, fit_in_span, monomials, FormFit, SpanFit};
pub use hessian::{hessian_check, hessian_graph, HessianReport};
pub use regulus::{regulus_check, regulus_check_planes, RegulusReport, DEFAULT_SEED};
pub use scan::{cap_from_env, scan_component, scan_resonance, ComponentScan, GraphGroup, ScanPoint, ScanReport, DEFAULT_CAP};
