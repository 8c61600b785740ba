//! Spherical Artin groups: Garside normal forms deciding the word problem,
//! images of folded generators as orbit products, and the action of
//! spherical twists on `K`.
//!
//! Verifying a folded relation shows only that the orbit products satisfy
//! it. Injectivity of the induced map from the folded Artin group is not
//! checked; for `D4` it rests on faithfulness of the twist action.

mod coxeter;
mod folding;
mod garside;
mod word;

pub use coxeter::{CoxeterSystem, Element};
pub use folding::{
    alternating, check_relation, check_twist_action, orbit_embedding, orbit_generators_commute, twist_k_matrix,
    verify_folded_relation, vertex_twists, RelationCheck, TwistCheck,
};
pub use garside::{normal_form, words_equal, GarsideNormalForm};
pub use word::ArtinWord;
