//! Built-in categories, skeletons, and bounded exhaustive generators of
//! structures.

mod builtin;
mod skeleton;
mod structures;

pub use builtin::{
    builtin, chain, discrete, free_category, interval, iso_pair, monoid, preorder, suite_categories, terminal,
    three_with_iso_pair, z2,
};
pub use skeleton::{skeletonize, SkeletonData};
pub use structures::{enumerate_cwf, enumerate_obj_ext, enumerate_qq, enumerate_split_typecat, enumerate_term};
