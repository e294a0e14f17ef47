//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// errors reported by the library's validated entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// a vertex id that is not present in the graph.
    UnknownVertex(u32),
    /// edges_between requires disjoint vertex sets.
    OverlappingSets,
    /// the plex parameter must be at least 1.
    PlexParamZero,
    /// kernelization requires s >= 2 (s=1 is handled by the solver alone).
    UnsupportedPlexParam(u32),
    /// a witness failed its structural invariants.
    InvalidFisg(&'static str),
    /// enumeration needs max_size >= s+2, the smallest possible witness.
    MaxSizeTooSmall { max_size: u32, min: u32 },
    /// an operation required G−X to be an s-plex cluster graph.
    NotAClusterGraph,
    /// is_redundant requires r ⊆ h.
    NotASubset,
    /// brute force refuses graphs above its vertex cap.
    TooLarge { n: usize, cap: usize },
    /// a generator spec that cannot be satisfied.
    UnsatisfiableSpec(String),
    /// a solution did not verify against the instance it was claimed for.
    InvalidSolution,
    /// an internal consistency check failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::OverlappingSets => write!(f, "vertex sets must be disjoint"),
            Error::PlexParamZero => write!(f, "plex parameter s must be at least 1"),
            Error::UnsupportedPlexParam(s) => {
                write!(f, "kernelization requires s >= 2, got s={s}")
            }
            Error::InvalidFisg(why) => write!(f, "invalid witness: {why}"),
            Error::MaxSizeTooSmall { max_size, min } => {
                write!(f, "max_size {max_size} below smallest witness size {min}")
            }
            Error::NotAClusterGraph => {
                write!(f, "graph minus X is not an s-plex cluster graph")
            }
            Error::NotASubset => write!(f, "candidate set is not contained in the component"),
            Error::TooLarge { n, cap } => {
                write!(f, "graph has {n} vertices, brute force is capped at {cap}")
            }
            Error::UnsatisfiableSpec(why) => write!(f, "unsatisfiable generator spec: {why}"),
            Error::InvalidSolution => write!(f, "solution does not verify for this instance"),
            Error::Internal(why) => write!(f, "internal error: {why}"),
        }
    }
}

impl core::error::Error for Error {}
