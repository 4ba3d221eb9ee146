//! Exact verification that the presentation
//! `⟨x, y | y⁻²xy²x⁻¹, x⁻³(y⁻¹xy)x²(y⁻¹x⁻²y)⟩` gives a 2-complex with the
//! fundamental group and Euler characteristic of a Klein bottle with a
//! bubble, whose second homotopy module is stably free but not free.
//!
//! Layers, bottom up: free-group [`word`]s; [`presentation`]s with Fox
//! calculus; the coefficient ring [`laurent`] `R = ℤ[x, x⁻¹]`; the group
//! ring [`klein`] `S = R[y, y⁻¹, σ]`; division by `y + s` and Stafford's
//! module in [`skew`]; product-of-conjugates [`certificate`]s; and the
//! assembled verdict in [`stafford`].

pub mod builtin;
pub mod certificate;
pub mod error;
pub mod expr;
pub mod klein;
pub mod laurent;
pub mod presentation;
pub mod skew;
pub mod stafford;
pub mod word;

pub use certificate::{equivalence_verdict, ConjugacyCertificate, Factor, Relation};
pub use error::{Error, Result};
pub use klein::{eval_combo, eval_word, GroupElem, SPoly};
pub use laurent::RPoly;
pub use presentation::{boundary_matrices, fox_derivative, Boundaries, FreeCombo, Presentation};
pub use skew::{divide, in_right_ideal, in_v, lift_kernel, no_monic_degree_one, witnesses, StaffordInstance};
pub use stafford::{psi, theorem_a_report, BezoutWitness, ChainData, NonFreenessReport};
pub use word::{generators, Generator, Word};
