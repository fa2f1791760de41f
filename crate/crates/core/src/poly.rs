//! Sparse multivariate polynomials over ℚ in lex order.
//!
//! A [`VarRegistry`] fixes the variables and their lex priority (position 0
//! is the highest). Monomials are dense exponent vectors over the registry,
//! so comparing two of them lexicographically as slices is exactly the lex
//! monomial order.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarRegistry {
    names: Vec<String>,
}

impl VarRegistry {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarRegistry { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name derived from `base` that is not yet in the registry.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = String::from(base);
        while self.index_of(&candidate).is_some() {
            candidate.push('_');
        }
        candidate
    }

    /// New registry with `names` inserted (made fresh) starting at `pos`.
    /// Returns the registry and the names actually used.
    pub fn with_inserted(&self, pos: usize, names: &[String]) -> (Arc<Self>, Vec<String>) {
        let mut all = self.names.clone();
        let mut used = Vec::with_capacity(names.len());
        for (k, base) in names.iter().enumerate() {
            let probe = VarRegistry { names: all.clone() };
            let fresh = probe.fresh_name(base);
            all.insert(pos + k, fresh.clone());
            used.push(fresh);
        }
        (Arc::new(VarRegistry { names: all }), used)
    }

    /// Same variables with `index` moved to the lowest lex priority.
    pub fn with_last(&self, index: usize) -> Arc<Self> {
        let mut names = self.names.clone();
        let v = names.remove(index);
        names.push(v);
        Arc::new(VarRegistry { names })
    }
}

pub(crate) fn same_registry(a: &Arc<VarRegistry>, b: &Arc<VarRegistry>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector; derived `Ord` is lex with index 0 most significant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(SmallVec<[u16; 16]>);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    /// `Some(i)` when the monomial is `x_i^k` with `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, _) in self.support() {
            if found.is_some() {
                return None;
            }
            found = Some(i);
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Panics on exponent overflow past `u16::MAX`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub(crate) fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut out = Monomial::one(nvars);
        for (i, e) in self.support() {
            out.0[map[i]] = e;
        }
        out
    }

    /// Bit `i % 64` set when variable `i` occurs.
    pub(crate) fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, _) in self.support() {
            m |= 1 << (i % 64);
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// Polynomial with terms in strictly decreasing lex order and no zero
/// coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Arc<VarRegistry>,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_registry(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarRegistry>) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &Arc<VarRegistry>, c: Rational) -> Self {
        Self::from_terms(vars, vec![(Monomial::one(vars.len()), c)])
    }

    pub fn one(vars: &Arc<VarRegistry>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Arc<VarRegistry>, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &Arc<VarRegistry>, index: usize) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), index, 1), Rational::one())],
        }
    }

    pub fn monomial(vars: &Arc<VarRegistry>, mono: Monomial, c: Rational) -> Self {
        Self::from_terms(vars, vec![(mono, c)])
    }

    /// Builds a normalized polynomial from arbitrary terms (any order,
    /// duplicates and zeros allowed).
    pub fn from_terms(vars: &Arc<VarRegistry>, mut terms: Vec<(Monomial, Rational)>) -> Self {
        assert!(
            terms.iter().all(|(m, _)| m.nvars() == vars.len()),
            "monomial arity mismatch"
        );
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        MultiPoly {
            vars: vars.clone(),
            terms: out,
        }
    }

    /// Trusted constructor: terms already sorted decreasing, nonzero.
    pub(crate) fn from_sorted(vars: &Arc<VarRegistry>, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, index: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    /// Sorted indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vars.len()];
        for (m, _) in &self.terms {
            for (i, _) in m.support() {
                seen[i] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn uses_only(&self, allowed: &[usize]) -> bool {
        self.variables().iter().all(|v| allowed.contains(v))
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &Rational)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if same_registry(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    pub fn ring_op(&self, other: &MultiPoly, op: RingOp) -> Result<MultiPoly> {
        self.check_same(other)?;
        Ok(match op {
            RingOp::Add => self.merge(other, false),
            RingOp::Sub => self.merge(other, true),
            RingOp::Mul => self.product(other),
        })
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring_op(other, RingOp::Add)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring_op(other, RingOp::Sub)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.ring_op(other, RingOp::Mul)
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.mul(mono), k * c))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = Self::one(&self.vars);
        for _ in 0..exp {
            acc = acc.product(self);
        }
        acc
    }

    /// Rational multiple with integer coprime coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => {
                let mut c = rational::content(self.terms.iter().map(|(_, c)| c));
                if lc.is_negative() {
                    c = -c;
                }
                self.scale(&c.recip())
            }
        }
    }

    pub fn monic(&self) -> MultiPoly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    pub fn partial_derivative(&self, name: &str) -> Result<MultiPoly> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.derivative_index(i))
    }

    pub fn derivative_index(&self, index: usize) -> MultiPoly {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(index);
            if e > 0 {
                let mut d = m.clone();
                d.0[index] = e - 1;
                terms.push((d, c * Rational::from_integer(e.into())));
            }
        }
        // lowering one exponent keeps lex order strictly decreasing
        MultiPoly::from_sorted(&self.vars, terms)
    }

    pub fn gradient(&self, indices: &[usize]) -> Vec<MultiPoly> {
        indices.iter().map(|&i| self.derivative_index(i)).collect()
    }

    /// Evaluates at a named assignment; only occurring variables need values.
    pub fn evaluate(&self, point: &BTreeMap<String, Rational>) -> Result<Rational> {
        let mut dense: Vec<Option<&Rational>> = vec![None; self.vars.len()];
        for i in self.variables() {
            let name = self.vars.name(i);
            dense[i] = Some(
                point
                    .get(name)
                    .ok_or_else(|| Error::MissingAssignment(name.to_string()))?,
            );
        }
        Ok(self.eval_with(|i| dense[i].unwrap()))
    }

    /// Evaluates at a full dense assignment.
    pub fn evaluate_dense(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars.len());
        self.eval_with(|i| &point[i])
    }

    fn eval_with<'a, F: Fn(usize) -> &'a Rational>(&self, value: F) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.support() {
                t *= num_traits::pow(value(i).clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Replaces variable `index` by the constant `value`.
    pub fn substitute(&self, index: usize, value: &Rational) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponent(index);
                let mut m = m.clone();
                m.0[index] = 0;
                (m, c * num_traits::pow(value.clone(), e as usize))
            })
            .collect();
        MultiPoly::from_terms(&self.vars, terms)
    }

    /// Re-expresses the polynomial over `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<VarRegistry>) -> Result<MultiPoly> {
        if same_registry(&self.vars, target) {
            return Ok(MultiPoly {
                vars: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = vec![usize::MAX; self.vars.len()];
        for i in self.variables() {
            let name = self.vars.name(i);
            map[i] = target
                .index_of(name)
                .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(&map, target.len()), c.clone()))
            .collect();
        Ok(MultiPoly::from_terms(target, terms))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, e) in m.support() {
                if e == 1 {
                    factors.push(self.vars.name(i).to_string());
                } else {
                    factors.push(alloc::format!("{}^{}", self.vars.name(i), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Registry-checked operators; they panic when the registries differ.
impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("registry mismatch")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("registry mismatch")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("registry mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

/// Textbook multivariate division by an ordered divisor list.
///
/// Returns quotients and remainder with `p = Σ qᵢ·dᵢ + r`, where no term of
/// `r` is divisible by any leading term of the divisors.
pub fn divide(p: &MultiPoly, divisors: &[MultiPoly]) -> Result<(Vec<MultiPoly>, MultiPoly)> {
    for d in divisors {
        p.check_same(d)?;
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
    }
    let vars = p.registry();
    let mut quotients: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut rest = p.clone();
    while let Some((lm, lc)) = rest.terms.first().cloned() {
        let mut divided = false;
        for (k, d) in divisors.iter().enumerate() {
            let (dm, dc) = d.leading_term()?;
            if let Some(q) = lm.div(dm) {
                let qc = &lc / dc;
                rest = rest.merge(&d.mul_term(&q, &qc), true);
                quotients[k].push((q, qc));
                divided = true;
                break;
            }
        }
        if !divided {
            remainder.push(rest.terms.remove(0));
        }
    }
    let quotients = quotients
        .into_iter()
        .map(|t| MultiPoly::from_terms(vars, t))
        .collect();
    Ok((quotients, MultiPoly::from_sorted(vars, remainder)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn reg(names: &[&str]) -> Arc<VarRegistry> {
        VarRegistry::new(names.iter().copied()).unwrap()
    }

    fn v(r: &Arc<VarRegistry>, n: &str) -> MultiPoly {
        MultiPoly::var(r, n).unwrap()
    }

    fn c(r: &Arc<VarRegistry>, k: i64) -> MultiPoly {
        MultiPoly::constant(r, int(k))
    }

    #[test]
    fn ring_ops_examples() {
        let r = reg(&["x1", "x2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        assert_eq!(&(&x1 + &x2) + &(&x1 - &x2), c(&r, 2) * x1.clone());
        assert_eq!(&(&x1 - &x2) * &(&x1 + &x2), &(&x1 * &x1) - &(&x2 * &x2));
        let p = &(&x1 * &x1) - &x2;
        let z = &p * &MultiPoly::zero(&r);
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
    }

    #[test]
    fn registry_mismatch_is_an_error() {
        let r1 = reg(&["x1"]);
        let r2 = reg(&["y"]);
        let err = v(&r1, "x1").checked_add(&v(&r2, "y"));
        assert!(matches!(err, Err(Error::RegistryMismatch)));
        // equal registries created separately are compatible
        let r3 = reg(&["x1"]);
        assert!(v(&r1, "x1").checked_mul(&v(&r3, "x1")).is_ok());
    }

    #[test]
    fn leading_terms() {
        let r = reg(&["x1", "x2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let p = &(&x1 * &x2) + &x2.pow(3);
        let (m, k) = p.leading_term().unwrap();
        assert_eq!(m.exponents(), &[1, 1]);
        assert_eq!(*k, int(1));

        let q = &(&c(&r, 3) * &x2.pow(2)) - &c(&r, 5);
        let (m, k) = q.leading_term().unwrap();
        assert_eq!(m.exponents(), &[0, 2]);
        assert_eq!(*k, int(3));

        // x2 ≻ x1: 2x1² − x2 leads with −x2
        let r = reg(&["x2", "x1"]);
        let p = &(&c(&r, 2) * &v(&r, "x1").pow(2)) - &v(&r, "x2");
        let (m, k) = p.leading_term().unwrap();
        assert_eq!(m.exponents(), &[1, 0]);
        assert_eq!(*k, int(-1));

        assert!(matches!(
            MultiPoly::zero(&r).leading_term(),
            Err(Error::NoLeadingTerm)
        ));
    }

    #[test]
    fn division_examples() {
        let r = reg(&["x1", "x2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let one = c(&r, 1);

        let p = &(&x1 * &x1) - &x2;
        let (q, rem) = divide(&p, &[p.clone()]).unwrap();
        assert_eq!(q, vec![one.clone()]);
        assert!(rem.is_zero());

        let f = &(&(&x1.pow(2) * &x2) + &(&x1 * &x2.pow(2))) + &x2.pow(2);
        let d1 = &(&x1 * &x2) - &one;
        let d2 = &x2.pow(2) - &one;
        let (q, rem) = divide(&f, &[d1.clone(), d2.clone()]).unwrap();
        assert_eq!(q[0], &x1 + &x2);
        assert_eq!(q[1], one.clone());
        assert_eq!(rem, &(&x1 + &x2) + &one);
        let back = &(&(&q[0] * &d1) + &(&q[1] * &d2)) + &rem;
        assert_eq!(back, f);

        let (q, rem) = divide(&x2.pow(3), &[x1.clone()]).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, x2.pow(3));

        assert!(matches!(
            divide(&x1, &[MultiPoly::zero(&r)]),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn derivatives() {
        let r = reg(&["x1", "x2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let p = &x1 - &x2.pow(2);
        assert_eq!(p.partial_derivative("x2").unwrap(), &c(&r, -2) * &x2);
        assert!(c(&r, 7).partial_derivative("x1").unwrap().is_zero());
        let q = &x1.pow(2) * &x2.pow(3);
        assert_eq!(
            q.partial_derivative("x1").unwrap(),
            &(&c(&r, 2) * &x1) * &x2.pow(3)
        );
        assert!(matches!(
            p.partial_derivative("z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn evaluation() {
        let r = reg(&["x1", "x2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let mut pt = BTreeMap::new();
        pt.insert("x1".to_string(), int(0));
        pt.insert("x2".to_string(), int(0));
        assert_eq!((&x1 - &x2.pow(2)).evaluate(&pt).unwrap(), int(0));
        pt.insert("x1".to_string(), int(-2));
        pt.insert("x2".to_string(), int(1));
        assert_eq!((&x1 - &(&c(&r, 5) * &x2)).evaluate(&pt).unwrap(), int(-7));
        assert_eq!(c(&r, 7).evaluate(&BTreeMap::new()).unwrap(), int(7));
        let mut partial = BTreeMap::new();
        partial.insert("x1".to_string(), frac(1, 2));
        assert!(matches!(
            (&x1 + &x2).evaluate(&partial),
            Err(Error::MissingAssignment(_))
        ));
    }

    #[test]
    fn primitive_and_display() {
        let r = reg(&["x1", "x2"]);
        let p = MultiPoly::from_terms(
            &r,
            vec![
                (Monomial::from_exponents(&[0, 1]), frac(-2, 3)),
                (Monomial::from_exponents(&[2, 0]), frac(-4, 3)),
            ],
        );
        let q = p.primitive();
        assert_eq!(alloc::format!("{q}"), "2*x1^2 + x2");
        assert_eq!(alloc::format!("{}", p.monic()), "x1^2 + 1/2*x2");
    }

    #[test]
    fn embed_and_fresh_names() {
        let r = reg(&["x1", "x2"]);
        let (big, used) = r.with_inserted(1, &["y".to_string(), "x2".to_string()]);
        assert_eq!(big.names(), &["x1", "y", "x2_", "x2"]);
        assert_eq!(used, vec!["y".to_string(), "x2_".to_string()]);
        let p = &v(&r, "x1") * &v(&r, "x2");
        let e = p.embed(&big).unwrap();
        assert_eq!(e.terms()[0].0.exponents(), &[1, 0, 0, 1]);
        assert!(matches!(
            VarRegistry::new(["a", "a"]),
            Err(Error::DuplicateVariable(_))
        ));
    }
}
