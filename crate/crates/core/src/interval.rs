//! Closed rational intervals, used to bound polynomial values at points with
//! irrational coordinates.

use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::univariate::{RealAlgebraic, UnivariatePoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn enclosing(x: &RealAlgebraic) -> Self {
        let (lo, hi) = x.enclosure();
        Interval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when every point of the interval has the same sign.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Strictly inside the open interval `(lo, hi)`.
    pub fn inside_open(&self, lo: &Rational, hi: &Rational) -> bool {
        &self.lo > lo && &self.hi < hi
    }

    pub fn disjoint_from(&self, lo: &Rational, hi: &Rational) -> bool {
        &self.hi < lo || &self.lo > hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval { lo, hi }
    }

    pub fn scale(&self, k: &Rational) -> Interval {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    /// Tight for even powers of intervals straddling zero.
    pub fn pow(&self, exp: u16) -> Interval {
        if exp == 0 {
            return Interval::point(Rational::one());
        }
        let a = pow(&self.lo, exp);
        let b = pow(&self.hi, exp);
        if exp % 2 == 1 {
            Interval { lo: a, hi: b }
        } else if self.contains_zero() {
            Interval {
                lo: Rational::zero(),
                hi: a.max(b),
            }
        } else {
            Interval {
                lo: a.clone().min(b.clone()),
                hi: a.max(b),
            }
        }
    }

    /// Encloses `p` over the box (one interval per variable).
    pub fn eval(p: &MultiPoly, point: &[Interval]) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for (m, c) in p.terms() {
            let mut t = Interval::point(c.clone());
            for (i, e) in m.support() {
                t = t.mul(&point[i].pow(e));
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn eval_univariate(p: &UnivariatePoly, x: &Interval) -> Interval {
        let mut acc = Interval::point(Rational::zero());
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&x.pow(k as u16).scale(c));
            }
        }
        acc
    }
}

fn pow(x: &Rational, exp: u16) -> Rational {
    num_traits::pow(x.clone(), exp as usize)
}
