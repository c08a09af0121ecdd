//! Exact arithmetic and linear algebra over `F_p`, `F_{p^k}`, `Z/N` and `Q`.

mod howell;
mod matrix;
mod pairs;
mod ring;
mod space;
mod subspace;

pub use howell::{kernel_mod_n, HowellModule};
pub use matrix::{Kernel, Matrix};
pub use pairs::{are_dependent, dependence_relation, is_parallel, minor, minors2, pair_index};
pub use ring::{make_ring, Ring, RingSpec, Scalar};
pub use space::{projective_at, projective_size, space_size, vector_at};
pub use subspace::Subspace;

pub(crate) use matrix::rref_in_place;
