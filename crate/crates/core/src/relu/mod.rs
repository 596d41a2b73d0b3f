//! Relative universes over a functor `J: C -> D` from a finite category
//! into a target category, their weak forms, representable maps of
//! presheaves, and transfer along squares of functors.

mod rep;
mod target;
mod transfer;
mod universe;

pub use rep::{cwf_from_rep_gaunt, forget, rep_check, rep_failure, rep_map_check, representations, yoneda_data};
pub use target::{yoneda_embedding, Embedding, FinCatTarget, PresheafCategory, Square, TargetCategory};
pub use transfer::{
    converse_hypotheses, identity_square, rep_to_skeleton_cwf, skeleton_square, transfer_cwf_to_skeleton,
    transfer_universe_split, transfer_weak_universe, weak_universe_equivalence_suite, weak_universe_pair,
    EquivalenceEntry, EquivalenceReport, FunctorSquare, LiftOracle, Precomposition, TargetFunctor,
};
pub use universe::{
    check_jpullback, cwf_to_relu, first_jpullback, is_weak_relative_universe, jpullback_failure, jpullbacks,
    relu_to_cwf, weak_universe_failure, JPullback, RelUnivData, RelativeUniverse,
};
