//! Schubert calculus on a Grassmann algebra.
//!
//! The canonical Hasse-Schmidt derivation `D_t` on the exterior algebra of
//! `M(p) = XA[X]/pXA[X]` generates an operator ring on ⋀ᵏM(p). For
//! `p = Xⁿ`, `Xⁿ + q` or an equivariant deformation, that ring is the
//! classical, small quantum or equivariant cohomology of the Grassmannian
//! G(k, n). This crate computes
//!
//! * the action of `Dₕ` and of the inverse coefficients `D̄ₕ` on wedges
//!   ([`derivation`]),
//! * Schur determinants and Giambelli's formula ([`schur`]),
//! * presentations by generators `D₁…D_k` and relations ([`presentation`]),
//! * products of Schubert classes ([`classes`]).

pub mod classes;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod exterior;
pub mod presentation;
pub mod report;
pub mod ring;
pub mod schur;

pub use classes::{
    class_to_vector, multiply_classes, pieri_on_class, structure_constants, vector_to_classes,
    ClassCombination, Context, SchubertClass, StructureConstant,
};
pub use derivation::{
    apply_d, apply_dbar, dbar_operator_poly, leibniz_expand, pieri_expand, pieri_shifts,
    DerivationEngine,
};
pub use error::{Error, Result};
pub use exterior::{normalize_wedge, IndexTuple, ModuleKind, ModuleSpec, MultiVector};
pub use presentation::{
    dtilde_poly, dtilde_series, normal_form, presentation, relation_poly, PresentationResult,
};
pub use ring::{CoeffPoly, Degree, Generator, OperatorPoly, Ring};
pub use schur::{giambelli_vector, index_to_partition, partition_to_index, schur_delta, Partition};
