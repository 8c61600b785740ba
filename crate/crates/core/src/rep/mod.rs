//! Representations of Dynkin quivers over the rationals and the bounded
//! derived category built from them.

mod catalog;
mod derived;
mod representation;

pub use catalog::{Catalog, Indecomposable};
pub use derived::{
    cy3_hom_dims, f_period, f_tilde, frobenius_transport, graded_hom, hom_q, universal_coextension,
    universal_extension, DerivedObject, Shifted,
};
pub use representation::{
    coextension, cokernel, ext1_dim, ext1_space, extension, hom_dim, hom_space, join_morphisms, kernel,
    reflect_at_source, stack_morphisms, ExtClass, Morphism, Representation,
};
