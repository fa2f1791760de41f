//! End-to-end exact optimization: first-order system, image closure,
//! minimum root, and feasibility filtering of the candidate values.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::time::Duration;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fo_systems::{build_first_order, FirstOrderKind, FirstOrderSystem, PopProblem};
use crate::groebner::{buchberger, eliminant, split_components, GroebnerConfig, Ideal};
use crate::image_closure::{
    image_closure_semialgebraic, image_dimension, ClosureOptions, Eliminants, ImageDimension,
};
use crate::interval::Interval;
use crate::poly::{same_registry, MultiPoly, VarRegistry};
use crate::rational::{pow2_neg, Rational};
use crate::univariate::{
    isolate_real_roots, sturm_count, AlgebraicNumber, Bound, CommonRoots, ExtendedValue,
    RealAlgebraic, UnivariatePoly,
};
use alloc::sync::Arc;

#[derive(Debug, Clone)]
pub struct OptimizeOptions {
    pub closure: ClosureOptions,
    /// Check candidate values for feasibility before reporting.
    pub filter: bool,
    pub extract_minimizers: bool,
    /// Irrational points are resolved down to interval width `2^-precision`.
    pub precision: u32,
    /// Also compute the dimension of the critical-value image.
    pub critical_dimension: bool,
}

impl Default for OptimizeOptions {
    fn default() -> Self {
        OptimizeOptions {
            closure: ClosureOptions::default(),
            filter: true,
            extract_minimizers: true,
            precision: 64,
            critical_dimension: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptStatus {
    ExactOptimal,
    CandidateMinUnfiltered,
    MinusInfinityInconclusive,
    PlusInfinityNoSolution,
}

impl OptStatus {
    pub fn name(self) -> &'static str {
        match self {
            OptStatus::ExactOptimal => "exact-optimal",
            OptStatus::CandidateMinUnfiltered => "candidate-min-unfiltered",
            OptStatus::MinusInfinityInconclusive => "minus-infinity-inconclusive",
            OptStatus::PlusInfinityNoSolution => "plus-infinity-no-solution",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point where every constraint holds and the objective takes the value.
    FeasibleWithWitness(Vec<RealAlgebraic>),
    Infeasible,
    /// Undecided; carries the coordinate eliminants when extraction got that far.
    Unknown(Vec<UnivariatePoly>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateValue {
    pub value: RealAlgebraic,
    pub feasibility: Feasibility,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StageTimings {
    pub build: Duration,
    pub groebner: Duration,
    pub radical: Duration,
    pub elimination: Duration,
    pub roots: Duration,
    pub filtering: Duration,
}

#[derive(Debug, Clone)]
pub struct Diagnostics {
    pub kind: FirstOrderKind,
    pub eliminants: Eliminants,
    pub candidates: Vec<CandidateValue>,
    pub timings: StageTimings,
    pub critical_dimension: Option<ImageDimension>,
}

#[derive(Debug, Clone)]
pub struct OptResult {
    pub value: ExtendedValue,
    pub status: OptStatus,
    pub minimizers: Vec<Vec<RealAlgebraic>>,
    pub diagnostics: Diagnostics,
}

/// Points of `S(g) ∩ V(h)` found by per-coordinate elimination.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PointSet {
    /// Verified points, in lex order.
    pub points: Vec<Vec<RealAlgebraic>>,
    /// Candidate points whose feasibility could not be decided.
    pub unresolved: Vec<Vec<RealAlgebraic>>,
    /// One eliminant per coordinate.
    pub eliminants: Vec<UnivariatePoly>,
}

impl PointSet {
    pub fn is_unknown(&self) -> bool {
        self.points.is_empty() && !self.unresolved.is_empty()
    }

    /// Union with `other`; coordinate eliminants combine by lcm.
    fn absorb(&mut self, other: PointSet) {
        self.points.extend(other.points);
        self.unresolved.extend(other.unresolved);
        for list in [&mut self.points, &mut self.unresolved] {
            list.sort();
            list.dedup();
        }
        if self.eliminants.is_empty() {
            self.eliminants = other.eliminants;
        } else if !other.eliminants.is_empty() {
            self.eliminants = self
                .eliminants
                .iter()
                .zip(&other.eliminants)
                .map(|(a, b)| {
                    let (q, _) = a.mul(b).div_rem(&a.gcd(b)).expect("nonzero gcd");
                    q.monic()
                })
                .collect();
        }
    }
}

enum Check<'a> {
    NonNeg(&'a MultiPoly),
    Zero(&'a MultiPoly),
    /// `f(x)` equals the irrational value.
    Value(&'a MultiPoly, &'a AlgebraicNumber),
}

enum Verdict {
    Holds,
    Fails,
    Unresolved,
}

/// Sign of a univariate polynomial at an irrational algebraic number.
fn sign_at_algebraic(q: &UnivariatePoly, alpha: &AlgebraicNumber) -> Ordering {
    if q.is_zero() {
        return Ordering::Equal;
    }
    let g = q.gcd(alpha.poly());
    if !g.is_constant() {
        let (lo, hi) = alpha.interval();
        let n = sturm_count(&g, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
            .expect("divides a squarefree poly");
        if n > 0 {
            return Ordering::Equal;
        }
    }
    let mut width = alpha.width();
    loop {
        let a = alpha.refine(&width);
        let (lo, hi) = a.interval();
        if let Some(s) = Interval::eval_univariate(q, &Interval::new(lo.clone(), hi.clone())).sign()
        {
            return s;
        }
        width /= Rational::from_integer(2.into());
    }
}

struct PointView<'a> {
    point: &'a [RealAlgebraic],
    irrational: Vec<usize>,
}

impl<'a> PointView<'a> {
    fn new(point: &'a [RealAlgebraic]) -> Self {
        let irrational = (0..point.len())
            .filter(|&i| point[i].as_rational().is_none())
            .collect();
        PointView { point, irrational }
    }

    fn rational_at(&self, p: &MultiPoly) -> Rational {
        let dense: Vec<Rational> = self
            .point
            .iter()
            .map(|c| c.as_rational().unwrap().clone())
            .collect();
        p.evaluate_dense(&dense)
    }

    /// `p` with every rational coordinate substituted, as a polynomial in
    /// the single irrational coordinate `j`.
    fn restrict(&self, p: &MultiPoly, j: usize) -> UnivariatePoly {
        let mut s = p.clone();
        for (i, c) in self.point.iter().enumerate() {
            if let Some(r) = c.as_rational() {
                s = s.substitute(i, r);
            }
        }
        UnivariatePoly::from_multipoly(&s, j).expect("only one free coordinate")
    }

    fn algebraic(&self, j: usize) -> &AlgebraicNumber {
        match &self.point[j] {
            RealAlgebraic::Algebraic(a) => a,
            RealAlgebraic::Rational(_) => unreachable!(),
        }
    }

    fn boxes(&self, precision: u32) -> impl Iterator<Item = Vec<Interval>> + '_ {
        (1..=precision).map(move |bits| {
            let w = pow2_neg(bits);
            self.point
                .iter()
                .map(|c| Interval::enclosing(&c.refine(&w)))
                .collect()
        })
    }

    fn sign(&self, p: &MultiPoly, precision: u32) -> Option<Ordering> {
        match self.irrational[..] {
            [] => Some(self.rational_at(p).cmp(&Rational::zero())),
            [j] => Some(sign_at_algebraic(&self.restrict(p, j), self.algebraic(j))),
            _ => self
                .boxes(precision)
                .find_map(|b| Interval::eval(p, &b).sign().filter(|s| s.is_ne())),
        }
    }

    fn value_equals(&self, f: &MultiPoly, t: &AlgebraicNumber, precision: u32) -> Verdict {
        let (tlo, thi) = t.interval();
        match self.irrational[..] {
            [] => Verdict::Fails,
            [j] => {
                let q = self.restrict(f, j);
                let alpha = self.algebraic(j);
                if sign_at_algebraic(&t.poly().compose_univariate(&q), alpha).is_ne() {
                    return Verdict::Fails;
                }
                // f(a) is some root of t's polynomial; t's interval isolates one
                let mut width = alpha.width();
                loop {
                    let a = alpha.refine(&width);
                    let (lo, hi) = a.interval();
                    let iv = Interval::eval_univariate(&q, &Interval::new(lo.clone(), hi.clone()));
                    if iv.inside_open(tlo, thi) {
                        return Verdict::Holds;
                    }
                    if iv.disjoint_from(tlo, thi) {
                        return Verdict::Fails;
                    }
                    width /= Rational::from_integer(2.into());
                }
            }
            _ => {
                for b in self.boxes(precision) {
                    if Interval::eval(f, &b).disjoint_from(tlo, thi) {
                        return Verdict::Fails;
                    }
                }
                Verdict::Unresolved
            }
        }
    }

    fn check(&self, c: &Check<'_>, precision: u32) -> Verdict {
        match c {
            Check::NonNeg(g) => match self.sign(g, precision) {
                Some(Ordering::Less) => Verdict::Fails,
                Some(_) => Verdict::Holds,
                None => Verdict::Unresolved,
            },
            Check::Zero(h) => match self.sign(h, precision) {
                Some(Ordering::Equal) => Verdict::Holds,
                Some(_) => Verdict::Fails,
                None => Verdict::Unresolved,
            },
            Check::Value(f, t) => self.value_equals(f, t, precision),
        }
    }
}

fn check_point(point: &[RealAlgebraic], checks: &[Check<'_>], precision: u32) -> Verdict {
    let view = PointView::new(point);
    let mut unresolved = false;
    for c in checks {
        match view.check(c, precision) {
            Verdict::Fails => return Verdict::Fails,
            Verdict::Unresolved => unresolved = true,
            Verdict::Holds => {}
        }
    }
    if unresolved {
        Verdict::Unresolved
    } else {
        Verdict::Holds
    }
}

/// Points of one component: per-coordinate eliminants, then the Cartesian
/// product of their real roots filtered by `checks`.
fn extract_component(
    x_vars: &Arc<VarRegistry>,
    system: &[MultiPoly],
    checks: &[Check<'_>],
    config: &GroebnerConfig,
    precision: u32,
) -> Result<PointSet> {
    let n = x_vars.len();
    let gb = buchberger(&Ideal::new(system[0].registry(), system)?, config)?;
    if gb.is_unit() {
        return Ok(PointSet::default());
    }
    let mut eliminants = Vec::with_capacity(n);
    let mut coords = Vec::with_capacity(n);
    for k in 0..n {
        let e = eliminant(&gb, k, config)?;
        if e.is_zero() {
            return Err(Error::InfiniteProjection(x_vars.name(k).into()));
        }
        coords.push(isolate_real_roots(&e)?);
        eliminants.push(e);
    }
    let mut out = PointSet {
        eliminants,
        ..PointSet::default()
    };
    if coords.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; n];
    loop {
        let point: Vec<RealAlgebraic> = idx
            .iter()
            .enumerate()
            .map(|(k, &i)| coords[k][i].clone())
            .collect();
        match check_point(&point, checks, precision) {
            Verdict::Holds => out.points.push(point),
            Verdict::Unresolved => out.unresolved.push(point),
            Verdict::Fails => {}
        }
        // odometer, last coordinate fastest
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < coords[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Core of point extraction. `system` lives on a registry whose first
/// `x_vars.len()` variables are `x`; `checks` live on `x_vars`.
///
/// Inequalities are not lifted to slacks here: the complex projection onto
/// `x` is the same with or without them, and the sign conditions are
/// enforced by `checks`.
fn extract_with(
    x_vars: &Arc<VarRegistry>,
    system: &[MultiPoly],
    checks: &[Check<'_>],
    config: &GroebnerConfig,
    precision: u32,
) -> Result<PointSet> {
    if system.is_empty() {
        return Err(Error::InfiniteProjection(x_vars.name(0).into()));
    }
    let mut out = PointSet::default();
    for part in split_components(system, config.max_branches.max(1)) {
        out.absorb(extract_component(x_vars, &part, checks, config, precision)?);
    }
    Ok(out)
}

/// All points of `S(g) ∩ V(h)` when that set is finite.
///
/// `g` lives on `x_vars`; `h` may live on an extension whose leading
/// variables are `x_vars` (for instance a first-order system), in which case
/// the extra variables are projected away. Coordinates come from
/// per-coordinate eliminants of `h`; every point of the
/// Cartesian product of their real roots is checked against `g ≥ 0` and the
/// members of `h` that involve `x` only (exactly when at most one coordinate
/// is irrational, by interval enclosure otherwise).
pub fn extract_points(
    x_vars: &Arc<VarRegistry>,
    g: &[MultiPoly],
    h: &[MultiPoly],
    config: &GroebnerConfig,
    precision: u32,
) -> Result<PointSet> {
    if g.iter().any(|p| !same_registry(p.registry(), x_vars)) {
        return Err(Error::RegistryMismatch);
    }
    let Some(first) = h.first() else {
        return Err(Error::EmptyIdeal);
    };
    let ext = first.registry();
    let n = x_vars.len();
    if h.iter().any(|p| !same_registry(p.registry(), ext))
        || ext.names().get(..n) != Some(x_vars.names())
    {
        return Err(Error::RegistryMismatch);
    }
    let x_only = h
        .iter()
        .filter(|p| p.variables().iter().all(|&i| i < n))
        .map(|p| p.embed(x_vars))
        .collect::<Result<Vec<_>>>()?;
    let checks: Vec<Check<'_>> = g
        .iter()
        .map(Check::NonNeg)
        .chain(x_only.iter().map(Check::Zero))
        .collect();
    extract_with(x_vars, h, &checks, config, precision)
}

struct CandidateOutcome {
    feasibility: Feasibility,
    points: Vec<Vec<RealAlgebraic>>,
}

fn vanishes_at(e: &UnivariatePoly, t: &RealAlgebraic) -> bool {
    match t {
        RealAlgebraic::Rational(r) => e.eval(r).is_zero(),
        RealAlgebraic::Algebraic(a) => sign_at_algebraic(e, a).is_eq(),
    }
}

/// Points of the first-order variety at objective value `t`. Only
/// components whose eliminant vanishes at `t` can reach it, and inside those
/// the value is pinned through the graph variable.
fn critical_points_at(
    x_vars: &Arc<VarRegistry>,
    eliminants: &Eliminants,
    t: &RealAlgebraic,
    checks: &[Check<'_>],
    config: &GroebnerConfig,
    precision: u32,
) -> Result<PointSet> {
    let (ext, graph) = (eliminants.registry(), eliminants.graph_index());
    let mut all = PointSet::default();
    for (basis, polys) in eliminants.bases().iter().zip(eliminants.component_polys()) {
        if basis.is_unit() || !polys.iter().all(|e| vanishes_at(e, t)) {
            continue;
        }
        let pin = match (t, polys.first()) {
            (RealAlgebraic::Rational(r), _) => UnivariatePoly::linear_root(r),
            (RealAlgebraic::Algebraic(a), Some(e)) => a.poly().gcd(e),
            (RealAlgebraic::Algebraic(a), None) => a.poly().clone(),
        };
        let mut system = basis.polys().to_vec();
        system.push(pin.to_multipoly(ext, graph));
        all.absorb(extract_with(x_vars, &system, checks, config, precision)?);
    }
    Ok(all)
}

fn check_candidate(
    problem: &PopProblem,
    eliminants: &Eliminants,
    t: &RealAlgebraic,
    opts: &OptimizeOptions,
) -> CandidateOutcome {
    let f = problem.objective();
    let level = match t {
        RealAlgebraic::Rational(r) => f - &MultiPoly::constant(f.registry(), r.clone()),
        RealAlgebraic::Algebraic(a) => a.poly().compose(f),
    };
    let mut checks: Vec<Check<'_>> = problem.inequalities().iter().map(Check::NonNeg).collect();
    checks.extend(problem.equalities().iter().map(Check::Zero));
    match t {
        RealAlgebraic::Rational(_) => checks.push(Check::Zero(&level)),
        RealAlgebraic::Algebraic(a) => checks.push(Check::Value(f, a)),
    }
    let config = &opts.closure.groebner;
    let mut plain: Vec<MultiPoly> = problem.equalities().to_vec();
    plain.push(level.clone());
    let vars = problem.registry();
    let mut found = extract_with(vars, &plain, &checks, config, opts.precision);
    if matches!(found, Err(Error::InfiniteProjection(_))) {
        found = critical_points_at(vars, eliminants, t, &checks, config, opts.precision);
    }
    match found {
        Ok(set) if !set.points.is_empty() => CandidateOutcome {
            feasibility: Feasibility::FeasibleWithWitness(set.points[0].clone()),
            points: set.points,
        },
        Ok(set) if set.unresolved.is_empty() => CandidateOutcome {
            feasibility: Feasibility::Infeasible,
            points: vec![],
        },
        Ok(set) => CandidateOutcome {
            feasibility: Feasibility::Unknown(set.eliminants),
            points: vec![],
        },
        Err(_) => CandidateOutcome {
            feasibility: Feasibility::Unknown(vec![]),
            points: vec![],
        },
    }
}

/// Feasibility verdict for every candidate value.
pub fn filter_candidates(
    problem: &PopProblem,
    system: &FirstOrderSystem,
    candidates: &[RealAlgebraic],
    opts: &OptimizeOptions,
) -> Vec<CandidateValue> {
    let f = problem.objective();
    let closure =
        image_closure_semialgebraic(f, problem.inequalities(), system.polys(), &opts.closure);
    candidates
        .iter()
        .map(|t| CandidateValue {
            value: t.clone(),
            feasibility: match &closure {
                Ok(e) => check_candidate(problem, e, t, opts).feasibility,
                Err(_) => Feasibility::Unknown(vec![]),
            },
        })
        .collect()
}

/// Exact minimum of `f` over `S(g) ∩ V(h)` through the chosen first-order
/// system.
pub fn optimize(
    problem: &PopProblem,
    kind: FirstOrderKind,
    opts: &OptimizeOptions,
) -> Result<OptResult> {
    if matches!(kind, FirstOrderKind::Sing | FirstOrderKind::SingPlus) {
        return Err(Error::UnsupportedKind(kind.name()));
    }
    let clock = &opts.closure;
    let mut timings = StageTimings::default();
    let t0 = clock.now();
    let system = build_first_order(problem, kind)?;
    timings.build = clock.now().saturating_sub(t0);

    let f = problem.objective();
    let eliminants = image_closure_semialgebraic(f, problem.inequalities(), system.polys(), clock)?;
    let ct = eliminants.timings();
    (timings.groebner, timings.radical, timings.elimination) =
        (ct.groebner, ct.radical, ct.elimination);

    let t1 = clock.now();
    let roots = eliminants.common_roots();
    timings.roots = clock.now().saturating_sub(t1);

    let critical_dimension = match opts.critical_dimension && !problem.inequalities().is_empty() {
        true => Some(critical_value_dimension(
            f,
            problem.inequalities(),
            kind.is_plus(),
            clock,
        )?),
        false => None,
    };

    let mut candidates = Vec::new();
    let mut minimizers = Vec::new();
    let (value, status) = match roots {
        CommonRoots::AllReals => (
            ExtendedValue::MinusInfinity,
            OptStatus::MinusInfinityInconclusive,
        ),
        CommonRoots::Empty => (
            ExtendedValue::PlusInfinity,
            OptStatus::PlusInfinityNoSolution,
        ),
        CommonRoots::Finite(roots) if !opts.filter => {
            candidates = roots
                .iter()
                .map(|t| CandidateValue {
                    value: t.clone(),
                    feasibility: Feasibility::Unknown(vec![]),
                })
                .collect();
            (
                ExtendedValue::Finite(roots[0].clone()),
                OptStatus::CandidateMinUnfiltered,
            )
        }
        CommonRoots::Finite(roots) => {
            let t2 = clock.now();
            let mut outcome = (
                ExtendedValue::PlusInfinity,
                OptStatus::PlusInfinityNoSolution,
            );
            for t in &roots {
                let checked = check_candidate(problem, &eliminants, t, opts);
                let verdict = checked.feasibility.clone();
                candidates.push(CandidateValue {
                    value: t.clone(),
                    feasibility: checked.feasibility,
                });
                match verdict {
                    Feasibility::Infeasible => continue,
                    Feasibility::FeasibleWithWitness(_) => {
                        if opts.extract_minimizers {
                            minimizers = checked.points;
                        }
                        outcome = (ExtendedValue::Finite(t.clone()), OptStatus::ExactOptimal);
                    }
                    Feasibility::Unknown(_) => {
                        outcome = (
                            ExtendedValue::Finite(t.clone()),
                            OptStatus::CandidateMinUnfiltered,
                        );
                    }
                }
                break;
            }
            timings.filtering = clock.now().saturating_sub(t2);
            outcome
        }
    };
    Ok(OptResult {
        value,
        status,
        minimizers,
        diagnostics: Diagnostics {
            kind,
            eliminants,
            candidates,
            timings,
            critical_dimension,
        },
    })
}

/// Dimension (0 or 1) of the image under `f` of the critical points of
/// `S(g)`, via the singular-locus system.
pub fn critical_value_dimension(
    f: &MultiPoly,
    g: &[MultiPoly],
    plus: bool,
    opts: &ClosureOptions,
) -> Result<ImageDimension> {
    let problem = PopProblem::new(f.clone(), g.to_vec(), vec![])?;
    let kind = if plus {
        FirstOrderKind::SingPlus
    } else {
        FirstOrderKind::Sing
    };
    let system = build_first_order(&problem, kind)?;
    let e = image_closure_semialgebraic(f, g, system.polys(), opts)?;
    Ok(image_dimension(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn plane() -> Arc<VarRegistry> {
        VarRegistry::new(["x1", "x2"]).unwrap()
    }

    fn v(vars: &Arc<VarRegistry>, name: &str) -> MultiPoly {
        MultiPoly::var(vars, name).unwrap()
    }

    fn c(vars: &Arc<VarRegistry>, k: i64) -> MultiPoly {
        MultiPoly::constant(vars, int(k))
    }

    fn q(r: Rational) -> RealAlgebraic {
        RealAlgebraic::Rational(r)
    }

    fn example1() -> PopProblem {
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        PopProblem::new(b.clone(), vec![-&a, &a - &b.pow(2)], vec![]).unwrap()
    }

    fn example2() -> PopProblem {
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let f = &a - &(&c(&r, 5) * &b);
        let g = vec![
            &a.pow(2) - &b,
            &(-&a.pow(2)) + &(&c(&r, 4) * &b),
            &(-&b) + &c(&r, 1),
        ];
        PopProblem::new(f, g, vec![]).unwrap()
    }

    #[test]
    fn example1_fritz_john() {
        let res = optimize(&example1(), FirstOrderKind::FJ, &OptimizeOptions::default()).unwrap();
        assert_eq!(res.status, OptStatus::ExactOptimal);
        assert_eq!(res.value, ExtendedValue::Finite(q(int(0))));
        assert_eq!(res.minimizers, vec![vec![q(int(0)), q(int(0))]]);
    }

    #[test]
    fn example2_kkt_and_fj_agree() {
        let p = example2();
        let kkt = optimize(&p, FirstOrderKind::KKT, &OptimizeOptions::default()).unwrap();
        assert_eq!(kkt.status, OptStatus::ExactOptimal);
        assert_eq!(kkt.value, ExtendedValue::Finite(q(int(-7))));
        assert_eq!(kkt.minimizers, vec![vec![q(int(-2)), q(int(1))]]);
        let fj = optimize(&p, FirstOrderKind::FJ, &OptimizeOptions::default()).unwrap();
        assert_eq!(fj.value, kkt.value);
    }

    #[test]
    fn example2_critical_dimension() {
        let p = example2();
        let d = critical_value_dimension(
            p.objective(),
            p.inequalities(),
            false,
            &ClosureOptions::default(),
        )
        .unwrap();
        assert_eq!(d, ImageDimension::Zero);
    }

    #[test]
    fn smooth_constraint_has_no_critical_values() {
        let r = plane();
        let a = v(&r, "x1");
        let d =
            critical_value_dimension(&a, &[a.clone()], false, &ClosureOptions::default()).unwrap();
        assert_eq!(d, ImageDimension::Zero);
    }

    #[test]
    fn sentinels() {
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let p = PopProblem::new(a.clone(), vec![-&b.pow(2)], vec![]).unwrap();
        let res = optimize(&p, FirstOrderKind::FJ, &OptimizeOptions::default()).unwrap();
        assert!(res
            .diagnostics
            .eliminants
            .polys()
            .iter()
            .all(UnivariatePoly::is_zero));
        assert_eq!(res.status, OptStatus::MinusInfinityInconclusive);
        assert_eq!(res.value, ExtendedValue::MinusInfinity);

        let p = PopProblem::new(a.clone(), vec![], vec![]).unwrap();
        let res = optimize(&p, FirstOrderKind::KKT, &OptimizeOptions::default()).unwrap();
        assert_eq!(res.diagnostics.eliminants.polys(), &[UnivariatePoly::one()]);
        assert_eq!(res.status, OptStatus::PlusInfinityNoSolution);
        assert_eq!(res.value, ExtendedValue::PlusInfinity);
    }

    #[test]
    fn extraction_examples() {
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let cfg = GroebnerConfig::default();
        let h = vec![&a.pow(2) - &c(&r, 1), &b - &a];
        let all = extract_points(&r, &[], &h, &cfg, 32).unwrap();
        assert_eq!(
            all.points,
            vec![vec![q(int(-1)), q(int(-1))], vec![q(int(1)), q(int(1))]]
        );
        let pos = extract_points(&r, &[a.clone()], &h, &cfg, 32).unwrap();
        assert_eq!(pos.points, vec![vec![q(int(1)), q(int(1))]]);

        // slacks make {x2 = 0} ∩ S(g) a complex curve; the Fritz John
        // equations cut it down to finitely many points
        let p = example1();
        let level = vec![p.objective().clone()];
        let curve = extract_points(&r, p.inequalities(), &level, &cfg, 32);
        assert!(matches!(curve, Err(Error::InfiniteProjection(_))));
        let sys = build_first_order(&p, FirstOrderKind::FJ).unwrap();
        let mut polys = sys.polys().to_vec();
        polys.push(p.objective().embed(sys.registry()).unwrap());
        let pts = extract_points(&r, p.inequalities(), &polys, &cfg, 32).unwrap();
        assert_eq!(pts.points, vec![vec![q(int(0)), q(int(0))]]);

        let free = extract_points(&r, &[], &[&a - &b], &cfg, 32);
        assert!(matches!(free, Err(Error::InfiniteProjection(v)) if v == "x1"));
    }

    #[test]
    fn candidate_filtering() {
        let p = example1();
        let sys = build_first_order(&p, FirstOrderKind::FJ).unwrap();
        let opts = OptimizeOptions::default();
        let out = filter_candidates(&p, &sys, &[q(int(0)), q(int(-1))], &opts);
        assert_eq!(
            out[0].feasibility,
            Feasibility::FeasibleWithWitness(vec![q(int(0)), q(int(0))])
        );
        assert_eq!(out[1].feasibility, Feasibility::Infeasible);
    }

    #[test]
    fn complex_only_candidate_is_removed() {
        // V(x1² + 1) is empty over the reals, so no value is attained
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let p = PopProblem::new(b.clone(), vec![], vec![&a.pow(2) + &c(&r, 1), b.clone()]).unwrap();
        let sys = build_first_order(&p, FirstOrderKind::KKT).unwrap();
        let out = filter_candidates(&p, &sys, &[q(int(0))], &OptimizeOptions::default());
        assert_eq!(out[0].feasibility, Feasibility::Infeasible);
    }

    #[test]
    fn irrational_optimum_is_certified() {
        // min x1 subject to x1² ≥ 2, x1 ≥ 0, x2 = 0: value √2
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let p = PopProblem::new(
            a.clone(),
            vec![&a.pow(2) - &c(&r, 2), a.clone()],
            vec![b.clone()],
        )
        .unwrap();
        let res = optimize(&p, FirstOrderKind::FJ, &OptimizeOptions::default()).unwrap();
        assert_eq!(res.status, OptStatus::ExactOptimal);
        let ExtendedValue::Finite(RealAlgebraic::Algebraic(t)) = &res.value else {
            panic!("{:?}", res.value)
        };
        assert_eq!(t.poly(), &UnivariatePoly::from_ints(&[-2, 0, 1]));
        assert!(res.value > ExtendedValue::Finite(q(int(1))));
        assert_eq!(res.minimizers.len(), 1);
        assert_eq!(res.minimizers[0][1], q(int(0)));
    }

    #[test]
    fn unfiltered_reports_min_root() {
        let opts = OptimizeOptions {
            filter: false,
            ..OptimizeOptions::default()
        };
        let res = optimize(&example2(), FirstOrderKind::KKT, &opts).unwrap();
        assert_eq!(res.status, OptStatus::CandidateMinUnfiltered);
        let ExtendedValue::Finite(v) = &res.value else {
            panic!()
        };
        assert!(v <= &q(int(-7)));
        assert!(res.minimizers.is_empty());
    }

    #[test]
    fn singular_kinds_rejected() {
        assert!(matches!(
            optimize(
                &example1(),
                FirstOrderKind::Sing,
                &OptimizeOptions::default()
            ),
            Err(Error::UnsupportedKind("sing"))
        ));
    }

    #[test]
    fn unconstrained_quadratic() {
        // (x1 − 1/2)² + x2² has minimum 0 at (1/2, 0)
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let half = MultiPoly::constant(&r, frac(1, 2));
        let f = &(&a - &half).pow(2) + &b.pow(2);
        let p = PopProblem::new(f, vec![], vec![]).unwrap();
        let res = optimize(&p, FirstOrderKind::KKT, &OptimizeOptions::default()).unwrap();
        assert_eq!(res.status, OptStatus::ExactOptimal);
        assert_eq!(res.value, ExtendedValue::Finite(q(int(0))));
        assert_eq!(res.minimizers, vec![vec![q(frac(1, 2)), q(int(0))]]);
    }
}
