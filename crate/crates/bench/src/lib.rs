//! Inputs shared by the benchmarks.

use std::sync::Arc;

use cwfkit_core::catalog;
use cwfkit_core::FinCat;

/// Named base categories, smallest first.
pub fn bases() -> Vec<(&'static str, Arc<FinCat>)> {
    vec![
        ("interval", Arc::new(catalog::interval())),
        ("iso-pair", Arc::new(catalog::iso_pair())),
        ("chain(2)", Arc::new(catalog::chain(2))),
        ("three-iso", Arc::new(catalog::three_with_iso_pair())),
    ]
}
