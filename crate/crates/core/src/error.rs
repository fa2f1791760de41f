use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::MultiPoly;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResourceLimit {
    Pairs,
    Degree,
}

/// State of an interrupted Buchberger run.
#[derive(Debug, Clone)]
pub struct ResourceExceeded {
    pub limit: ResourceLimit,
    pub pairs_processed: usize,
    pub max_degree_seen: u32,
    pub partial_basis: Vec<MultiPoly>,
}

#[derive(Debug, Clone)]
pub enum Error {
    RegistryMismatch,
    DuplicateVariable(String),
    UnknownVariable(String),
    MissingAssignment(String),
    NoLeadingTerm,
    ZeroDivisor,
    ZeroPolynomial,
    EmptyIdeal,
    NotSuffixBlock,
    RadicalUnavailable,
    NotSquarefree,
    InvalidInterval,
    AllRealsAreRoots,
    AlreadyLifted,
    AlreadyAugmented,
    NoInequalities,
    UnsupportedKind(&'static str),
    NotXOnly(String),
    InfiniteProjection(String),
    Resource(alloc::boxed::Box<ResourceExceeded>),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RegistryMismatch => {
                write!(f, "polynomials belong to different variable registries")
            }
            Error::DuplicateVariable(v) => write!(f, "duplicate variable `{v}`"),
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::MissingAssignment(v) => write!(f, "no value assigned to variable `{v}`"),
            Error::NoLeadingTerm => write!(f, "no leading term: zero polynomial"),
            Error::ZeroDivisor => write!(f, "division by the zero polynomial"),
            Error::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            Error::EmptyIdeal => write!(f, "ideal needs at least one nonzero generator"),
            Error::NotSuffixBlock => {
                write!(
                    f,
                    "kept variables are not a suffix of the lex order; elimination inapplicable"
                )
            }
            Error::RadicalUnavailable => {
                write!(
                    f,
                    "radical strategy unavailable: ideal is not zero-dimensional"
                )
            }
            Error::NotSquarefree => write!(f, "polynomial is not squarefree"),
            Error::InvalidInterval => write!(f, "invalid interval"),
            Error::AllRealsAreRoots => write!(f, "all reals are roots of the zero polynomial"),
            Error::AlreadyLifted => write!(f, "system already carries slack variables"),
            Error::AlreadyAugmented => write!(f, "system already carries a graph variable"),
            Error::NoInequalities => {
                write!(f, "singular-locus systems need at least one inequality")
            }
            Error::UnsupportedKind(k) => write!(f, "system kind {k} not supported here"),
            Error::NotXOnly(p) => write!(
                f,
                "problem polynomial `{p}` uses variables outside the problem"
            ),
            Error::InfiniteProjection(v) => write!(f, "intersection not finite in coordinate {v}"),
            Error::Resource(r) => write!(
                f,
                "Gröbner resource guard exceeded ({:?}) after {} pairs, max degree {}",
                r.limit, r.pairs_processed, r.max_degree_seen
            ),
        }
    }
}

impl core::error::Error for Error {}
