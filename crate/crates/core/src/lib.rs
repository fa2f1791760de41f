//! Exact polynomial optimization over basic semi-algebraic sets.
//!
//! The pipeline builds Fritz John / KKT first-order systems, splits them
//! along monomial factors, adds a graph variable for the objective,
//! eliminates everything else with a lex Gröbner basis and reads
//! the optimal value off the real roots of the resulting univariate
//! polynomials. All arithmetic is over arbitrary-precision rationals.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command line
//! front end live in the `polyopt` companion crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod fo_systems;
pub mod groebner;
pub mod image_closure;
pub mod interval;
pub mod optimizer;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use error::{Error, ResourceExceeded, ResourceLimit, Result};
pub use fo_systems::{build_first_order, FirstOrderKind, FirstOrderSystem, PopProblem};
pub use groebner::{
    buchberger, eliminant, eliminate, is_zero_dimensional, s_polynomial, split_components,
    zero_dim_radical, GroebnerBasis, GroebnerConfig, Ideal, SelectionStrategy,
};
pub use image_closure::{
    image_closure_semialgebraic, image_closure_variety, image_dimension, ClosureOptions,
    ClosureTimings, Eliminants, ImageDimension, Provenance, RadicalMode,
};
pub use optimizer::{
    critical_value_dimension, extract_points, filter_candidates, optimize, CandidateValue,
    Diagnostics, Feasibility, OptResult, OptStatus, OptimizeOptions, PointSet, StageTimings,
};
pub use poly::{divide, Monomial, MultiPoly, RingOp, VarRegistry};
pub use rational::{format_rational, parse_rational, Integer, Rational};
pub use univariate::{
    common_real_roots, isolate_real_roots, min_root, sturm_count, AlgebraicNumber, Bound,
    CommonRoots, ExtendedValue, RealAlgebraic, UnivariatePoly,
};
