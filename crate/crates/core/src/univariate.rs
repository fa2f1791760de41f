//! Univariate polynomials over ℚ and exact real-root machinery.
//!
//! Roots are isolated with Sturm sequences from a Cauchy bound. Rational
//! roots are recognised exactly: once an isolating interval is narrower than
//! `1/L²` (with `L` the leading coefficient of the primitive integer form),
//! the only possible rational root inside is the simplest fraction of the
//! interval, which is then tested by exact evaluation. Everything else is
//! returned as an [`AlgebraicNumber`].

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly, VarRegistry};
use crate::rational::{self, Rational};

/// Dense coefficients, constant term first; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    /// `None` if `p` involves a variable other than `var`.
    pub fn from_multipoly(p: &MultiPoly, var: usize) -> Option<Self> {
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.support().any(|(i, _)| i != var) {
                return None;
            }
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Some(Self::new(coeffs))
    }

    pub fn to_multipoly(&self, vars: &Arc<VarRegistry>, var: usize) -> MultiPoly {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Monomial::var(vars.len(), var, k as u16), c.clone()))
            .collect();
        MultiPoly::from_terms(vars, terms)
    }

    /// Substitutes the multivariate `inner` for the variable: `self(inner)`.
    pub fn compose(&self, inner: &MultiPoly) -> MultiPoly {
        let vars = inner.registry();
        let mut acc = MultiPoly::zero(vars);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &MultiPoly::constant(vars, c.clone());
        }
        acc
    }

    /// `self(inner)` for a univariate `inner`.
    pub fn compose_univariate(&self, inner: &UnivariatePoly) -> UnivariatePoly {
        let mut acc = UnivariatePoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UnivariatePoly::constant(c.clone()));
        }
        acc
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `0` for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i8 {
        if !self.coeffs.iter().all(|c| c.denom().is_one()) {
            return sign(&self.eval(x));
        }
        // integer Horner on the homogenized form Σ c_k p^k q^(d−k), q > 0
        let (p, q) = (x.numer(), x.denom());
        let mut iter = self.coeffs.iter().rev();
        let Some(lead) = iter.next() else {
            return 0;
        };
        let mut acc = lead.numer().clone();
        let mut qpow = q.clone();
        for c in iter {
            acc = acc * p + c.numer() * &qpow;
            qpow *= q;
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    /// Divides out the content without changing signs.
    fn integral(&self) -> Self {
        self.scale(&rational::content(self.coeffs.iter()).recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Integer coprime coefficients, positive leading coefficient.
    pub fn primitive(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let mut c = rational::content(self.coeffs.iter());
                if lc.is_negative() {
                    c = -c;
                }
                self.scale(&c.recip())
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|k| k * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lc = divisor.coeffs.last().ok_or(Error::ZeroDivisor)?;
        let dd = divisor.degree();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / lc;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).unwrap();
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `u / gcd(u, u')`, primitive: same roots, all simple.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.div_rem(&g)?;
        Ok(q.primitive())
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    pub fn sturm_chain(&self) -> Vec<UnivariatePoly> {
        // positive scaling keeps sign patterns intact; integer coefficients
        // keep evaluation cheap
        let mut chain = vec![self.integral()];
        let mut next = self.derivative().integral();
        while !next.is_zero() {
            let (_, r) = chain.last().unwrap().div_rem(&next).unwrap();
            chain.push(next);
            next = r.scale(&-Rational::one()).integral();
        }
        chain
    }

    /// Cauchy bound: all real roots lie in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.coeffs.last().expect("nonzero").abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_default();
        m + Rational::one()
    }
}

fn sign(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Debug for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePoly({})", self.display("t"))
    }
}

impl UnivariatePoly {
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let vars = VarRegistry::new([var]).unwrap();
        alloc::format!("{}", self.to_multipoly(&vars, 0))
    }
}

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn chain_variations(chain: &[UnivariatePoly], at: &Bound) -> usize {
    match at {
        Bound::Finite(x) => variations(chain.iter().map(|p| p.sign_at(x))),
        Bound::PosInf => variations(chain.iter().map(|p| sign(p.leading_coefficient().unwrap()))),
        Bound::NegInf => variations(chain.iter().map(|p| {
            let s = sign(p.leading_coefficient().unwrap());
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        })),
    }
}

/// Number of distinct real roots of a squarefree `u` in `(a, b]`.
pub fn sturm_count(u: &UnivariatePoly, a: &Bound, b: &Bound) -> Result<usize> {
    if u.is_zero() {
        return Err(Error::AllRealsAreRoots);
    }
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let ordered = match (a, b) {
        (Bound::Finite(x), Bound::Finite(y)) => x < y,
        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
        _ => true,
    };
    if !ordered {
        return Err(Error::InvalidInterval);
    }
    let chain = u.sturm_chain();
    Ok(count_with_chain(&chain, a, b))
}

fn count_with_chain(chain: &[UnivariatePoly], a: &Bound, b: &Bound) -> usize {
    chain_variations(chain, a).saturating_sub(chain_variations(chain, b))
}

/// An irrational real root of a squarefree polynomial, isolated in the open
/// interval `(lo, hi)` whose endpoints are not roots and have opposite signs.
///
/// Equality compares the numbers, not their representations.
#[derive(Clone)]
pub struct AlgebraicNumber {
    poly: UnivariatePoly,
    lo: Rational,
    hi: Rational,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in ({}, {})",
            self.poly.display("t"),
            self.lo,
            self.hi
        )
    }
}

impl AlgebraicNumber {
    /// Validates the isolation and that the root is irrational.
    pub fn new(poly: UnivariatePoly, lo: Rational, hi: Rational) -> Result<Self> {
        if lo >= hi || poly.is_zero() {
            return Err(Error::InvalidInterval);
        }
        if !poly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let (slo, shi) = (poly.sign_at(&lo), poly.sign_at(&hi));
        if slo == 0 || shi == 0 || slo == shi {
            return Err(Error::InvalidInterval);
        }
        let chain = poly.sturm_chain();
        if count_with_chain(
            &chain,
            &Bound::Finite(lo.clone()),
            &Bound::Finite(hi.clone()),
        ) != 1
        {
            return Err(Error::InvalidInterval);
        }
        let poly = poly.primitive();
        if rational_root_in(&poly, &chain, lo.clone(), hi.clone()).is_some() {
            return Err(Error::InvalidInterval);
        }
        Ok(AlgebraicNumber { poly, lo, hi })
    }

    fn new_unchecked(poly: UnivariatePoly, lo: Rational, hi: Rational) -> Self {
        AlgebraicNumber { poly, lo, hi }
    }

    pub fn poly(&self) -> &UnivariatePoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / rational::int(2);
        let smid = self.poly.sign_at(&mid);
        debug_assert!(
            smid != 0,
            "irrational root cannot sit on a rational midpoint"
        );
        if smid == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Same root with an isolating interval no wider than `width`.
    pub fn refine(&self, width: &Rational) -> AlgebraicNumber {
        let mut out = self.clone();
        while &out.width() > width {
            out.bisect();
        }
        out
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let mut a = self.clone();
        loop {
            if r <= &a.lo {
                return Ordering::Greater;
            }
            if r >= &a.hi {
                return Ordering::Less;
            }
            a.bisect();
        }
    }

    fn cmp_algebraic(&self, other: &AlgebraicNumber) -> Ordering {
        let (mut a, mut b) = (self.clone(), other.clone());
        let g = a.poly.gcd(&b.poly);
        if !g.is_constant() {
            let lo = if a.lo > b.lo {
                a.lo.clone()
            } else {
                b.lo.clone()
            };
            let hi = if a.hi < b.hi {
                a.hi.clone()
            } else {
                b.hi.clone()
            };
            if lo < hi {
                let chain = g.sturm_chain();
                if count_with_chain(&chain, &Bound::Finite(lo), &Bound::Finite(hi)) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.bisect();
            b.bisect();
        }
    }
}

/// An exact real number: rational, or an irrational algebraic number.
#[derive(Clone)]
pub enum RealAlgebraic {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealAlgebraic::Rational(r) => write!(f, "{r}"),
            RealAlgebraic::Algebraic(a) => write!(f, "{a:?}"),
        }
    }
}

impl RealAlgebraic {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealAlgebraic::Rational(r) => Some(r),
            RealAlgebraic::Algebraic(_) => None,
        }
    }

    /// Rationals are exact and come back unchanged.
    pub fn refine(&self, width: &Rational) -> RealAlgebraic {
        match self {
            RealAlgebraic::Rational(_) => self.clone(),
            RealAlgebraic::Algebraic(a) => RealAlgebraic::Algebraic(a.refine(width)),
        }
    }

    /// Enclosing interval `[lo, hi]` (degenerate for rationals).
    pub fn enclosure(&self) -> (Rational, Rational) {
        match self {
            RealAlgebraic::Rational(r) => (r.clone(), r.clone()),
            RealAlgebraic::Algebraic(a) => (a.lo.clone(), a.hi.clone()),
        }
    }

    /// A squarefree polynomial vanishing at this number.
    pub fn defining_poly(&self) -> UnivariatePoly {
        match self {
            RealAlgebraic::Rational(r) => UnivariatePoly::linear_root(r),
            RealAlgebraic::Algebraic(a) => a.poly.clone(),
        }
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_algebraic(other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealAlgebraic::Rational(a), RealAlgebraic::Rational(b)) => a.cmp(b),
            (RealAlgebraic::Algebraic(a), RealAlgebraic::Rational(b)) => a.cmp_rational(b),
            (RealAlgebraic::Rational(a), RealAlgebraic::Algebraic(b)) => {
                b.cmp_rational(a).reverse()
            }
            (RealAlgebraic::Algebraic(a), RealAlgebraic::Algebraic(b)) => a.cmp_algebraic(b),
        }
    }
}

/// `−∞`, an exact finite real, or `+∞`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtendedValue {
    MinusInfinity,
    Finite(RealAlgebraic),
    PlusInfinity,
}

/// The root of `u` in the isolating interval `(lo, hi]`, if it is rational.
///
/// A rational root `p/q` of the primitive form has `q` dividing the leading
/// coefficient `L`, so two candidates differ by at least `1/L²`; once the
/// interval is narrower than that only the simplest rational in it can be
/// the root.
fn rational_root_in(
    u: &UnivariatePoly,
    chain: &[UnivariatePoly],
    mut lo: Rational,
    mut hi: Rational,
) -> Option<Rational> {
    if u.eval(&hi).is_zero() {
        return Some(hi);
    }
    let two = rational::int(2);
    // `lo` may be a neighbouring root; step off it with Sturm counts
    while u.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / &two;
        if u.eval(&mid).is_zero() {
            return Some(mid);
        }
        if count_with_chain(
            chain,
            &Bound::Finite(lo.clone()),
            &Bound::Finite(mid.clone()),
        ) == 1
        {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let lc = u.primitive().leading_coefficient().unwrap().clone();
    let target = (&lc * &lc).recip();
    let low_sign = u.sign_at(&lo);
    while &hi - &lo >= target {
        let mid = (&lo + &hi) / &two;
        match u.sign_at(&mid) {
            0 => return Some(mid),
            s if s == low_sign => lo = mid,
            _ => hi = mid,
        }
    }
    let r = rational::simplest_between(&lo, &hi);
    (r > lo && u.eval(&r).is_zero()).then_some(r)
}

/// Isolating intervals `(a, b]`, one root each, ascending.
fn isolate_intervals(u: &UnivariatePoly, chain: &[UnivariatePoly]) -> Vec<(Rational, Rational)> {
    let bound = u.root_bound();
    let mut stack = vec![(-bound.clone(), bound)];
    let mut found = Vec::new();
    while let Some((a, b)) = stack.pop() {
        let n = count_with_chain(chain, &Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
        match n {
            0 => {}
            1 => found.push((a, b)),
            _ => {
                let mid = (&a + &b) / rational::int(2);
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    found.sort();
    found
}

/// All real roots of `u`, ascending. Rational roots are exact.
pub fn isolate_real_roots(u: &UnivariatePoly) -> Result<Vec<RealAlgebraic>> {
    if u.is_zero() {
        return Err(Error::AllRealsAreRoots);
    }
    if u.is_constant() {
        return Ok(Vec::new());
    }
    let s = u.squarefree_part()?;
    let chain = s.sturm_chain();
    let mut rationals = Vec::new();
    for (a, b) in isolate_intervals(&s, &chain) {
        if let Some(r) = rational_root_in(&s, &chain, a, b) {
            rationals.push(r);
        }
    }
    let mut rest = s.clone();
    for r in &rationals {
        rest = rest.div_rem(&UnivariatePoly::linear_root(r))?.0;
    }
    let rest = rest.primitive();
    let mut roots: Vec<RealAlgebraic> =
        rationals.into_iter().map(RealAlgebraic::Rational).collect();
    if !rest.is_constant() {
        let chain = rest.sturm_chain();
        for (a, b) in isolate_intervals(&rest, &chain) {
            // no rational roots remain, so endpoints are never roots
            roots.push(RealAlgebraic::Algebraic(AlgebraicNumber::new_unchecked(
                rest.clone(),
                a,
                b,
            )));
        }
    }
    roots.sort();
    Ok(roots)
}

/// Common real zero set of a univariate system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommonRoots {
    AllReals,
    Empty,
    Finite(Vec<RealAlgebraic>),
}

pub fn common_real_roots(system: &[UnivariatePoly]) -> CommonRoots {
    let mut g = UnivariatePoly::zero();
    for p in system {
        g = g.gcd(p);
    }
    if g.is_zero() {
        return CommonRoots::AllReals;
    }
    let roots = isolate_real_roots(&g).expect("nonzero gcd");
    if roots.is_empty() {
        CommonRoots::Empty
    } else {
        CommonRoots::Finite(roots)
    }
}

pub fn min_root(v: &CommonRoots) -> ExtendedValue {
    match v {
        CommonRoots::AllReals => ExtendedValue::MinusInfinity,
        CommonRoots::Empty => ExtendedValue::PlusInfinity,
        CommonRoots::Finite(roots) => ExtendedValue::Finite(roots[0].clone()),
    }
}
