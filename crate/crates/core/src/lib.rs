//! Finite categories, presheaves, and the structures that model dependent
//! type theory over them: categories with families, split type-categories
//! and relative universes, with their conversions and transfer
//! constructions as checked algorithms.

pub mod catalog;
pub mod error;
pub mod fincat;
pub mod finding;
pub mod io;
pub mod presheaf;
pub mod relu;
pub mod structures;

pub use error::{Error, Result};
pub use fincat::{Arrow, CommutingSquare, FinCat, FinFunctor, NatIso};
pub use finding::{Finding, Law};
pub use presheaf::{Presheaf, PresheafMap, PresheafSquare};
pub use structures::{
    CwfStructure, ObjExtStructure, QMorphismStructure, SplitTypeCatStructure, TermStructure,
};
