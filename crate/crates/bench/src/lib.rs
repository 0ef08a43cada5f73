//! Fixtures shared by the benchmarks.

use lefschetz_core::AlgebraDocument;

pub const KODAIRA_THURSTON: &str = include_str!("../../../corpus/kodaira_thurston.lie");
pub const SOLV6: &str = include_str!("../../../corpus/solv6.lie");
pub const TORUS6: &str = include_str!("../../../corpus/torus6.lie");

pub fn document(text: &str) -> AlgebraDocument {
    AlgebraDocument::parse(text).expect("corpus files parse")
}
