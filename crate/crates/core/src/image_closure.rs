//! Zariski closure of the image of a variety or a basic semi-algebraic set
//! under a polynomial map, as univariate eliminants in a graph variable.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::error::{Error, Result};
use crate::fo_systems::augment_graph;
use crate::groebner::{
    buchberger, eliminate, is_zero_dimensional, radical_basis, split_components, GroebnerBasis,
    GroebnerConfig, Ideal,
};
use crate::poly::{same_registry, MultiPoly, VarRegistry};
use crate::univariate::{common_real_roots, min_root, CommonRoots, ExtendedValue, UnivariatePoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadicalMode {
    /// Seidenberg augmentation whenever the graph ideal is zero-dimensional.
    #[default]
    Auto,
    Off,
}

/// Whether the eliminants came from a radical ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    RadicalApplied,
    /// No radical was taken; the eliminant variety may be strictly larger
    /// than the image closure.
    ClosureSuperset,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::RadicalApplied => "radical-applied",
            Provenance::ClosureSuperset => "closure-superset",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ClosureOptions {
    pub radical: RadicalMode,
    pub groebner: GroebnerConfig,
    /// Monotonic clock for stage timings; timings stay zero without one.
    pub clock: Option<fn() -> Duration>,
}

impl ClosureOptions {
    pub(crate) fn now(&self) -> Duration {
        self.clock.map(|c| c()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClosureTimings {
    pub groebner: Duration,
    pub radical: Duration,
    pub elimination: Duration,
}

/// Univariate generators of the image closure together with the reduced lex
/// bases they were read from.
#[derive(Debug, Clone)]
pub struct Eliminants {
    polys: Vec<UnivariatePoly>,
    provenance: Provenance,
    bases: Vec<GroebnerBasis>,
    components: Vec<Vec<UnivariatePoly>>,
    registry: Arc<VarRegistry>,
    graph: usize,
    timings: ClosureTimings,
}

impl Eliminants {
    pub fn polys(&self) -> &[UnivariatePoly] {
        &self.polys
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Reduced bases the eliminants were read from, one per component
    /// the system was split into.
    pub fn bases(&self) -> &[GroebnerBasis] {
        &self.bases
    }

    /// Eliminants of each component, aligned with [`Eliminants::bases`].
    pub fn component_polys(&self) -> &[Vec<UnivariatePoly>] {
        &self.components
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.registry
    }

    pub fn graph_index(&self) -> usize {
        self.graph
    }

    pub fn graph_name(&self) -> &str {
        self.registry().name(self.graph)
    }

    pub fn timings(&self) -> ClosureTimings {
        self.timings
    }

    pub fn common_roots(&self) -> CommonRoots {
        common_real_roots(&self.polys)
    }

    pub fn min_value(&self) -> ExtendedValue {
        min_root(&self.common_roots())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ImageDimension {
    Zero,
    One,
}

impl ImageDimension {
    pub fn value(self) -> u8 {
        match self {
            ImageDimension::Zero => 0,
            ImageDimension::One => 1,
        }
    }
}

pub fn image_dimension(e: &Eliminants) -> ImageDimension {
    if e.polys.iter().all(UnivariatePoly::is_zero) {
        ImageDimension::One
    } else {
        ImageDimension::Zero
    }
}

/// The common registry of `h`, or `f`'s registry when `h` is empty.
fn base_registry(f: &MultiPoly, h: &[MultiPoly]) -> Result<Arc<VarRegistry>> {
    let Some(first) = h.first() else {
        return Ok(f.registry().clone());
    };
    let vars = first.registry().clone();
    if h.iter().any(|p| !same_registry(p.registry(), &vars)) {
        return Err(Error::RegistryMismatch);
    }
    for name in f.registry().names() {
        if vars.index_of(name).is_none() {
            return Err(Error::UnknownVariable(name.clone()));
        }
    }
    Ok(vars)
}

/// Generators of the closure of `f(V(h))`.
///
/// `f` lives on the x-registry; `h` may live on an extension of it (extra
/// variables such as multipliers are eliminated as well).
pub fn image_closure_variety(
    f: &MultiPoly,
    h: &[MultiPoly],
    opts: &ClosureOptions,
) -> Result<Eliminants> {
    let vars = base_registry(f, h)?;
    closure_of(&vars, h, f, opts)
}

/// Generators of the closure of `f(S(g) ∩ V(h))`.
///
/// Lifting `g_j ≥ 0` to `g_j = y_j²` does not change the eliminants: each
/// slack occurs in one generator only, so the lifted ideal meets the ring
/// without slacks in exactly the ideal of `h`, and it is zero-dimensional
/// iff that ideal is. The slacks are therefore never materialized; `g`
/// only matters to the caller's feasibility checks.
pub fn image_closure_semialgebraic(
    f: &MultiPoly,
    g: &[MultiPoly],
    h: &[MultiPoly],
    opts: &ClosureOptions,
) -> Result<Eliminants> {
    if g.iter().any(|p| !same_registry(p.registry(), f.registry())) {
        return Err(Error::RegistryMismatch);
    }
    image_closure_variety(f, h, opts)
}

/// Monic least common multiple.
fn lcm(a: &UnivariatePoly, b: &UnivariatePoly) -> UnivariatePoly {
    let (q, _) = a.mul(b).div_rem(&a.gcd(b)).expect("nonzero gcd");
    q.monic()
}

fn closure_of(
    vars: &Arc<VarRegistry>,
    h: &[MultiPoly],
    f: &MultiPoly,
    opts: &ClosureOptions,
) -> Result<Eliminants> {
    let embedded = h
        .iter()
        .map(|p| p.embed(vars))
        .collect::<Result<Vec<_>>>()?;
    // splitting drops multiplicities, so it only runs alongside the radical
    let mut branches = match opts.radical {
        RadicalMode::Auto => split_components(&embedded, opts.groebner.max_branches.max(1)),
        RadicalMode::Off => vec![embedded],
    };
    if branches.is_empty() {
        branches.push(vec![MultiPoly::one(vars)]);
    }
    let mut timings = ClosureTimings::default();
    let mut bases = Vec::with_capacity(branches.len());
    let mut per_branch = Vec::with_capacity(branches.len());
    let mut provenance = Provenance::RadicalApplied;
    let mut ext = vars.clone();
    let mut graph = 0;
    for branch in &branches {
        let (e, polys, graph_name) = augment_graph(vars, branch, f, f.registry().len())?;
        graph = e.index_of(&graph_name).unwrap();
        ext = e;

        let t0 = opts.now();
        let gb = buchberger(&Ideal::new(&ext, &polys)?, &opts.groebner)?;
        let t1 = opts.now();
        timings.groebner += t1.saturating_sub(t0);

        let basis = if opts.radical == RadicalMode::Auto && is_zero_dimensional(&gb) {
            radical_basis(&gb, &opts.groebner)?.0
        } else {
            provenance = Provenance::ClosureSuperset;
            gb
        };
        let t2 = opts.now();
        timings.radical += t2.saturating_sub(t1);

        let found: Vec<UnivariatePoly> = eliminate(&basis, &[graph])?
            .iter()
            .map(|p| UnivariatePoly::from_multipoly(p, graph).expect("eliminant is univariate"))
            .collect();
        timings.elimination += opts.now().saturating_sub(t2);
        per_branch.push(found);
        bases.push(basis);
    }
    // the union of the branch images is cut out by the lcm of their generators
    let polys = if per_branch.len() == 1 {
        per_branch[0].clone()
    } else if per_branch.iter().any(|p| p.is_empty()) {
        Vec::new()
    } else {
        let joined = per_branch
            .iter()
            .fold(UnivariatePoly::one(), |acc, p| lcm(&acc, &p[0]));
        vec![joined]
    };
    Ok(Eliminants {
        polys,
        provenance,
        bases,
        components: per_branch,
        registry: ext,
        graph,
        timings,
    })
}
