//! Edge-colored graph saturation toolkit.
//!
//! A `t`-edge-colored graph is *saturated* for a family of colored graphs when
//! it contains no member of the family, yet adding any missing edge in any of
//! the `t` colors creates one. This crate provides:
//!
//! - colored graph representation with canonical forms under vertex (and
//!   optionally palette) permutation ([`graph`], [`canon`]);
//! - forbidden families "copies of `H` using exactly `r` colors" and the
//!   containment / creates-on-addition tests ([`family`]);
//! - saturation verification, deficiency reports and greedy completion
//!   ([`saturation`]);
//! - parameterized generators for the known saturated families
//!   ([`constructions`]);
//! - complete multipartite covers, their weight function and an exact
//!   branch-and-bound minimizer ([`cover`]);
//! - exhaustive computation of saturation numbers at small orders by canonical
//!   augmentation, degree-sequence restricted searches, and the convexity
//!   bound utility ([`search`]);
//! - the self-check suite behind `colorsat paper-suite` ([`suite`]).

mod bitset;
pub mod canon;
pub mod constructions;
pub mod cover;
pub mod family;
pub mod graph;
pub mod saturation;
pub mod search;
pub mod suite;

pub use canon::{canonical_key, CanonMode, CanonicalKey};
pub use family::{ColorRule, ForbiddenFamily};
pub use graph::{Color, ColorNeighborhood, EdgeColoredGraph, SimpleGraph};
pub use saturation::{saturation_report, SaturationReport};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge")]
    MissingEdge(usize, usize),
    #[error("color {0} outside palette 1..={1}")]
    PaletteOutOfRange(graph::Color, usize),
    #[error("family requires {needed} colors but the palette has only {have}")]
    InfeasibleFamily { needed: usize, have: usize },
    #[error("graph already contains a member of {0}")]
    NotFree(String),
    #[error("graph is not saturated: {0}")]
    NotSaturated(String),
    #[error("non-edge ({0}, {1}) has no rainbow 2-path")]
    NoRainbowPath(usize, usize),
    #[error("malformed cover: parts of member {0} overlap")]
    OverlappingParts(usize),
    #[error("host too large for exhaustive check: e(H) = {0} > {1}")]
    HostTooLarge(usize, usize),
    #[error("degree sequence is not graphical")]
    NotGraphical,
    #[error("instance exceeds guard: {0} (use --force or COLORSAT_GUARD to override)")]
    GuardExceeded(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

#[inline]
pub(crate) fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(choose2(7), 21);
        assert_eq!(choose2(0), 0);
    }
}
