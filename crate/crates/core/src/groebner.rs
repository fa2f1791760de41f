//! Buchberger's algorithm in lex order, elimination and zero-dimensional
//! radicals.
//!
//! Internally basis elements are kept as primitive integer polynomials and
//! reduced fraction-free; the public surface speaks [`MultiPoly`] over ℚ.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ResourceExceeded, ResourceLimit, Result};
use crate::poly::{same_registry, Monomial, MultiPoly, VarRegistry};
use crate::rational::Rational;
use crate::univariate::UnivariatePoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionStrategy {
    /// Pair with the lex-smallest lcm first.
    #[default]
    Normal,
    /// Pair with the smallest sugar degree first, lcm breaking ties.
    Sugar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
    pub max_degree: u32,
    pub strategy: SelectionStrategy,
    /// Most components a system is split into along monomial factors
    /// before Buchberger runs; 1 disables splitting.
    pub max_branches: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 200_000,
            max_degree: 200,
            strategy: SelectionStrategy::Normal,
            max_branches: 256,
        }
    }
}

/// Generators are nonzero, primitive, with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    vars: Arc<VarRegistry>,
    gens: Vec<MultiPoly>,
}

impl Ideal {
    pub fn new(vars: &Arc<VarRegistry>, gens: &[MultiPoly]) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !same_registry(g.registry(), vars) {
                return Err(Error::RegistryMismatch);
            }
            if !g.is_zero() {
                let p = g.primitive();
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        Ok(Ideal {
            vars: vars.clone(),
            gens: out,
        })
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.vars
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.gens
    }
}

/// A reduced lex Gröbner basis with monic generators, sorted by decreasing
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ideal: Ideal,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.ideal.vars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.ideal.gens
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Basis equals `{1}`: the variety is empty over ℂ.
    pub fn is_unit(&self) -> bool {
        self.ideal.gens.len() == 1 && self.ideal.gens[0].is_constant()
    }

    /// Remainder of `p` on division by the basis (the unique normal form).
    pub fn normal_form(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if !same_registry(p.registry(), self.registry()) {
            return Err(Error::RegistryMismatch);
        }
        Ok(reduce_rational(p, &self.ideal.gens))
    }

    pub fn contains(&self, p: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_criterion(&self) -> bool {
        let g = &self.ideal.gens;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let s = s_polynomial(&g[i], &g[j]).expect("nonzero basis");
                if !reduce_rational(&s, g).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Full reduction over ℚ; the divisor with the first matching leading
/// monomial in list order is used.
pub(crate) fn reduce_rational(p: &MultiPoly, divisors: &[MultiPoly]) -> MultiPoly {
    let vars = p.registry().clone();
    let lts: Vec<(&Monomial, &Rational, u64)> = divisors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| {
            let (m, c) = d.leading_term().unwrap();
            (m, c, m.mask())
        })
        .collect();
    let divs: Vec<&MultiPoly> = divisors.iter().filter(|d| !d.is_zero()).collect();
    let mut rest: Vec<(Monomial, Rational)> = p.terms().to_vec();
    let mut done: Vec<(Monomial, Rational)> = Vec::new();
    while !rest.is_empty() {
        let (m, c) = rest[0].clone();
        let mm = m.mask();
        let hit = lts
            .iter()
            .position(|(lm, _, mask)| mask & !mm == 0 && lm.divides(&m));
        match hit {
            Some(k) => {
                let (lm, lc, _) = lts[k];
                let q = m.div(lm).unwrap();
                let qc = &c / lc;
                let sub = divs[k].mul_term(&q, &qc);
                rest = sub_terms(&rest, sub.terms());
            }
            None => {
                done.push(rest.remove(0));
            }
        }
    }
    MultiPoly::from_sorted(&vars, done)
}

fn sub_terms(a: &[(Monomial, Rational)], b: &[(Monomial, Rational)]) -> Vec<(Monomial, Rational)> {
    use core::cmp::Ordering::*;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Greater,
            _ => Less,
        };
        match ord {
            Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Less => {
                out.push((b[j].0.clone(), -&b[j].1));
                j += 1;
            }
            Equal => {
                let c = &a[i].1 - &b[j].1;
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `(lcm/LT(p))·p − (lcm/LT(q))·q` with the lcm of the leading monomials.
pub fn s_polynomial(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    let (pm, pc) = p.leading_term().map_err(|_| Error::ZeroPolynomial)?;
    let (qm, qc) = q.leading_term().map_err(|_| Error::ZeroPolynomial)?;
    if !same_registry(p.registry(), q.registry()) {
        return Err(Error::RegistryMismatch);
    }
    let l = pm.lcm(qm);
    let a = p.mul_term(&l.div(pm).unwrap(), &pc.recip());
    let b = q.mul_term(&l.div(qm).unwrap(), &qc.recip());
    a.checked_sub(&b)
}

// ---------------------------------------------------------------------------
// integer polynomials used inside Buchberger

#[derive(Clone, Debug)]
struct IntPoly {
    terms: Vec<(Monomial, BigInt)>,
    mask: u64,
    sugar: u32,
}

impl IntPoly {
    fn from_multipoly(p: &MultiPoly) -> IntPoly {
        let prim = p.primitive();
        let terms: Vec<(Monomial, BigInt)> = prim
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer().clone()))
            .collect();
        let sugar = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let mask = terms.first().map(|(m, _)| m.mask()).unwrap_or(0);
        IntPoly { terms, mask, sugar }
    }

    fn to_monic(&self, vars: &Arc<VarRegistry>) -> MultiPoly {
        let lc = &self.terms[0].1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone())))
            .collect();
        MultiPoly::from_sorted(vars, terms)
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        let neg = self
            .terms
            .first()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if neg {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
        self.mask = self.terms.first().map(|(m, _)| m.mask()).unwrap_or(0);
    }
}

/// `a·p[start..] − b·mono·g[1..]`, where `p[start]` and `mono·LT(g)` cancel.
/// Terms before `start` are multiplied by `a` and kept in place.
fn fraction_free_step(
    p: &[(Monomial, BigInt)],
    start: usize,
    a: &BigInt,
    b: &BigInt,
    mono: &Monomial,
    g: &[(Monomial, BigInt)],
) -> Vec<(Monomial, BigInt)> {
    use core::cmp::Ordering::*;
    let scale_a = !a.is_one();
    let mut out = Vec::with_capacity(p.len() + g.len());
    for (m, c) in &p[..start] {
        out.push((m.clone(), if scale_a { c * a } else { c.clone() }));
    }
    let rest = &p[start + 1..];
    let tail = &g[1..];
    let (mut i, mut j) = (0, 0);
    let mut gm: Option<Monomial> = tail.first().map(|(m, _)| m.mul(mono));
    while i < rest.len() || gm.is_some() {
        let ord = match (rest.get(i), gm.as_ref()) {
            (Some(x), Some(y)) => x.0.cmp(y),
            (Some(_), None) => Greater,
            _ => Less,
        };
        match ord {
            Greater => {
                let (m, c) = &rest[i];
                out.push((m.clone(), if scale_a { c * a } else { c.clone() }));
                i += 1;
            }
            Less => {
                out.push((gm.take().unwrap(), -(b * &tail[j].1)));
                j += 1;
                gm = tail.get(j).map(|(m, _)| m.mul(mono));
            }
            Equal => {
                let c = if scale_a {
                    &rest[i].1 * a
                } else {
                    rest[i].1.clone()
                } - b * &tail[j].1;
                if !c.is_zero() {
                    out.push((rest[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gm = tail.get(j).map(|(m, _)| m.mul(mono));
            }
        }
    }
    out
}

/// Fully reduces `p` by the given basis elements (fraction-free).
/// With `tail == false` only the leading term is reduced away.
fn reduce_int(mut p: IntPoly, basis: &[IntPoly], usable: &[usize], tail: bool) -> IntPoly {
    let mut pos = 0usize;
    let mut steps = 0usize;
    while pos < p.terms.len() {
        let m = &p.terms[pos].0;
        let mm = m.mask();
        let hit = usable
            .iter()
            .copied()
            .find(|&k| basis[k].mask & !mm == 0 && basis[k].lm().divides(m));
        match hit {
            Some(k) => {
                let g = &basis[k];
                let q = m.div(g.lm()).unwrap();
                let c = &p.terms[pos].1;
                let gc = &g.terms[0].1;
                let d = c.gcd(gc);
                let (mut a, mut b) = (gc / &d, c / &d);
                if a.is_negative() {
                    a = -a;
                    b = -b;
                }
                p.terms = fraction_free_step(&p.terms, pos, &a, &b, &q, &g.terms);
                p.sugar = p.sugar.max(g.sugar + q.degree());
                steps += 1;
                if steps.is_multiple_of(8) {
                    p.make_primitive();
                }
            }
            None => {
                if !tail {
                    break;
                }
                pos += 1;
            }
        }
    }
    p.make_primitive();
    p
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Buchberger {
    vars: Arc<VarRegistry>,
    config: GroebnerConfig,
    polys: Vec<IntPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    processed: usize,
    max_degree_seen: u32,
}

impl Buchberger {
    fn active_indices(&self) -> Vec<usize> {
        (0..self.polys.len()).filter(|&k| self.active[k]).collect()
    }

    fn resource_error(&self, limit: ResourceLimit) -> Error {
        let partial_basis = self
            .active_indices()
            .iter()
            .map(|&k| self.polys[k].to_monic(&self.vars))
            .collect();
        Error::Resource(Box::new(ResourceExceeded {
            limit,
            pairs_processed: self.processed,
            max_degree_seen: self.max_degree_seen,
            partial_basis,
        }))
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let si = self.polys[i].sugar - self.polys[i].lm().degree();
        let sj = self.polys[j].sugar - self.polys[j].lm().degree();
        lcm.degree() + si.max(sj)
    }

    /// Gebauer–Möller update for the new element `h`.
    fn insert(&mut self, h: usize) {
        let hm = self.polys[h].lm().clone();
        let mut candidates: Vec<(usize, Monomial)> = (0..h)
            .filter(|&k| self.active[k])
            .map(|k| (k, self.polys[k].lm().lcm(&hm)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g, l) = candidates.remove(0);
            let coprime = self.polys[g].lm().is_coprime(&hm);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hm) != p.lcm
                && polys[p.j].lm().lcm(&hm) != p.lcm)
        });
        for (g, l) in kept {
            if !self.polys[g].lm().is_coprime(&hm) {
                let sugar = self.pair_sugar(g, h, &l);
                self.pairs.push(Pair {
                    i: g,
                    j: h,
                    lcm: l,
                    sugar,
                });
            }
        }
        for k in 0..h {
            if self.active[k] && hm.divides(self.polys[k].lm()) {
                self.active[k] = false;
            }
        }
        self.active[h] = true;
    }

    fn add_poly(&mut self, p: IntPoly) -> Result<bool> {
        let deg = p.degree();
        self.max_degree_seen = self.max_degree_seen.max(deg);
        if deg > self.config.max_degree {
            return Err(self.resource_error(ResourceLimit::Degree));
        }
        let unit = p.lm().is_one();
        self.polys.push(p);
        self.active.push(false);
        let h = self.polys.len() - 1;
        if unit {
            for a in self.active.iter_mut() {
                *a = false;
            }
            self.active[h] = true;
            self.pairs.clear();
            return Ok(true);
        }
        self.insert(h);
        Ok(false)
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let best = match self.config.strategy {
            SelectionStrategy::Normal => (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.lcm
                        .cmp(&pb.lcm)
                        .then(pa.sugar.cmp(&pb.sugar))
                        .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap(),
            SelectionStrategy::Sugar => (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then(pa.lcm.cmp(&pb.lcm))
                        .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
                })
                .unwrap(),
        };
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> IntPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = pair.lcm.div(f.lm()).unwrap();
        let mg = pair.lcm.div(g.lm()).unwrap();
        let (cf, cg) = (&f.terms[0].1, &g.terms[0].1);
        let d = cf.gcd(cg);
        let (a, b) = (cg / &d, cf / &d);
        // a·mf·f − b·mg·g
        let scaled: Vec<(Monomial, BigInt)> =
            f.terms.iter().map(|(m, c)| (m.mul(&mf), c * &a)).collect();
        let terms = fraction_free_step(&scaled, 0, &BigInt::one(), &b, &mg, &g.terms);
        let mut out = IntPoly {
            terms,
            mask: 0,
            sugar: pair.sugar,
        };
        out.make_primitive();
        out
    }

    fn run(mut self, gens: &[MultiPoly]) -> Result<GroebnerBasis> {
        let mut inputs: Vec<IntPoly> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(IntPoly::from_multipoly)
            .collect();
        if inputs.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        inputs.sort_by(|a, b| a.lm().cmp(b.lm()));
        let mut unit = false;
        for p in inputs {
            let usable = self.active_indices();
            let r = reduce_int(p, &self.polys, &usable, false);
            if r.terms.is_empty() {
                continue;
            }
            if self.add_poly(r)? {
                unit = true;
                break;
            }
        }
        while !unit {
            let Some(pair) = self.select() else { break };
            self.processed += 1;
            if self.processed > self.config.max_pairs {
                return Err(self.resource_error(ResourceLimit::Pairs));
            }
            let s = self.spoly(&pair);
            if s.terms.is_empty() {
                continue;
            }
            let usable = self.active_indices();
            let r = reduce_int(s, &self.polys, &usable, false);
            if r.terms.is_empty() {
                continue;
            }
            let r = reduce_int(r, &self.polys, &usable, true);
            unit = self.add_poly(r)?;
        }
        Ok(self.finish())
    }

    fn finish(self) -> GroebnerBasis {
        let mut idx = self.active_indices();
        idx.sort_by(|&a, &b| self.polys[a].lm().cmp(self.polys[b].lm()));
        let mut reduced: Vec<IntPoly> = idx.iter().map(|&k| self.polys[k].clone()).collect();
        // minimal basis: leading monomials are not reducible by the others
        for k in 0..reduced.len() {
            let others: Vec<usize> = (0..reduced.len()).filter(|&o| o != k).collect();
            let p = reduced[k].clone();
            reduced[k] = reduce_int(p, &reduced, &others, true);
        }
        let mut gens: Vec<MultiPoly> = reduced.iter().map(|p| p.to_monic(&self.vars)).collect();
        gens.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
        GroebnerBasis {
            ideal: Ideal {
                vars: self.vars.clone(),
                gens,
            },
            reduced: true,
        }
    }
}

/// Reduced lex Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &Ideal, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let engine = Buchberger {
        vars: gens.vars.clone(),
        config: *config,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        processed: 0,
        max_degree_seen: 0,
    };
    engine.run(&gens.gens)
}

fn check_suffix(nvars: usize, keep: &[usize]) -> Result<usize> {
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let start = nvars - sorted.len();
    if sorted.iter().enumerate().all(|(k, &v)| v == start + k) {
        Ok(start)
    } else {
        Err(Error::NotSuffixBlock)
    }
}

/// Basis elements involving only `keep_vars`; a Gröbner basis of the
/// elimination ideal when `keep_vars` is a suffix of the lex order.
pub fn eliminate(gb: &GroebnerBasis, keep_vars: &[usize]) -> Result<Vec<MultiPoly>> {
    let start = check_suffix(gb.registry().len(), keep_vars)?;
    Ok(gb
        .polys()
        .iter()
        .filter(|p| {
            p.terms()
                .iter()
                .all(|(m, _)| m.exponents()[..start].iter().all(|&e| e == 0))
        })
        .cloned()
        .collect())
}

/// Every variable has a pure power among the leading monomials (or the
/// basis is `{1}`).
pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    if gb.is_unit() {
        return true;
    }
    let n = gb.registry().len();
    let mut hit = vec![false; n];
    for p in gb.polys() {
        if let Some(i) = p.leading_monomial().and_then(Monomial::pure_power_var) {
            hit[i] = true;
        }
    }
    hit.iter().all(|&h| h)
}

/// Monic generator of `I ∩ ℚ[var]`, or the zero polynomial if that
/// intersection is trivial.
pub fn eliminant(
    gb: &GroebnerBasis,
    var: usize,
    config: &GroebnerConfig,
) -> Result<UnivariatePoly> {
    let n = gb.registry().len();
    if gb.is_unit() {
        return Ok(UnivariatePoly::one());
    }
    if var + 1 == n {
        let found = eliminate(gb, &[var])?;
        return Ok(match found.first() {
            Some(p) => UnivariatePoly::from_multipoly(p, var).expect("univariate"),
            None => UnivariatePoly::zero(),
        });
    }
    if is_zero_dimensional(gb) {
        return Ok(minimal_polynomial(gb, var));
    }
    let reordered = gb.registry().with_last(var);
    let gens = gb
        .polys()
        .iter()
        .map(|p| p.embed(&reordered))
        .collect::<Result<Vec<_>>>()?;
    let gb2 = buchberger(&Ideal::new(&reordered, &gens)?, config)?;
    eliminant(&gb2, n - 1, config)
}

/// Minimal polynomial of multiplication by `var` on the quotient ring,
/// found as the first linear dependency among the normal forms of the
/// powers of `var`. Requires a zero-dimensional ideal.
fn minimal_polynomial(gb: &GroebnerBasis, var: usize) -> UnivariatePoly {
    let vars = gb.registry();
    let basis = gb.polys();
    let x = MultiPoly::var_index(vars, var);
    // echelon rows keyed by pivot monomial: (row with pivot coefficient 1, combination)
    let mut rows: BTreeMap<Monomial, (MultiPoly, Vec<Rational>)> = BTreeMap::new();
    let mut power = reduce_rational(&MultiPoly::one(vars), basis);
    let mut k = 0usize;
    loop {
        let mut w = power.clone();
        let mut comb = vec![Rational::zero(); k + 1];
        comb[k] = Rational::one();
        loop {
            let hit = w
                .terms()
                .iter()
                .find(|(m, _)| rows.contains_key(m))
                .cloned();
            let Some((m, c)) = hit else { break };
            let (row, rc) = &rows[&m];
            w = w.checked_sub(&row.scale(&c)).unwrap();
            for (i, v) in rc.iter().enumerate() {
                comb[i] -= v * &c;
            }
        }
        if w.is_zero() {
            return UnivariatePoly::new(comb).monic();
        }
        let (pm, pc) = w
            .leading_term()
            .map(|(m, c)| (m.clone(), c.recip()))
            .unwrap();
        let row = w.scale(&pc);
        let rc: Vec<Rational> = comb.iter().map(|v| v * &pc).collect();
        rows.insert(pm, (row, rc));
        power = reduce_rational(&power.checked_mul(&x).unwrap(), basis);
        k += 1;
    }
}

/// Seidenberg augmentation: adds the squarefree part of every variable's
/// eliminant. Returns the radical's reduced basis and whether anything was
/// added.
pub(crate) fn radical_basis(
    gb: &GroebnerBasis,
    config: &GroebnerConfig,
) -> Result<(GroebnerBasis, bool)> {
    if !is_zero_dimensional(gb) {
        return Err(Error::RadicalUnavailable);
    }
    if gb.is_unit() {
        return Ok((gb.clone(), false));
    }
    let vars = gb.registry();
    let mut gens: Vec<MultiPoly> = gb.polys().to_vec();
    let mut changed = false;
    for v in 0..vars.len() {
        let e = eliminant(gb, v, config)?;
        let sq = e.squarefree_part()?;
        if sq.degree() < e.degree() {
            gens.push(sq.to_multipoly(vars, v));
            changed = true;
        }
    }
    if !changed {
        return Ok((gb.clone(), false));
    }
    Ok((buchberger(&Ideal::new(vars, &gens)?, config)?, true))
}

/// Generators of the radical of a zero-dimensional ideal: the input
/// generators plus squarefree eliminants.
pub fn zero_dim_radical(gens: &Ideal, config: &GroebnerConfig) -> Result<Ideal> {
    let gb = buchberger(gens, config)?;
    if !is_zero_dimensional(&gb) {
        return Err(Error::RadicalUnavailable);
    }
    let vars = gens.registry();
    let mut out = gens.generators().to_vec();
    for v in 0..vars.len() {
        let e = eliminant(&gb, v, config)?;
        let sq = e.squarefree_part()?;
        if sq.degree() < e.degree() {
            out.push(sq.to_multipoly(vars, v));
        }
    }
    Ideal::new(vars, &out)
}

enum Factor {
    Var(usize),
    Poly(MultiPoly),
}

/// Factors of `p` read off its monomial content: each variable dividing
/// every term, and the cofactor when it is not constant.
fn monomial_factors(p: &MultiPoly) -> Vec<Factor> {
    let n = p.registry().len();
    let mut content = vec![u16::MAX; n];
    for (m, _) in p.terms() {
        for (c, &e) in content.iter_mut().zip(m.exponents()) {
            *c = (*c).min(e);
        }
    }
    if content.iter().all(|&e| e == 0) {
        return Vec::new();
    }
    let content = Monomial::from_exponents(&content);
    let mut out: Vec<Factor> = content.support().map(|(i, _)| Factor::Var(i)).collect();
    let cofactor = MultiPoly::from_sorted(
        p.registry(),
        p.terms()
            .iter()
            .map(|(m, c)| (m.div(&content).unwrap(), c.clone()))
            .collect(),
    );
    if !cofactor.is_constant() {
        out.push(Factor::Poly(cofactor.primitive()));
    }
    out
}

fn push_unique(list: &mut Vec<MultiPoly>, p: MultiPoly) {
    if !p.is_zero() && !list.contains(&p) {
        list.push(p);
    }
}

fn branch(gens: &[MultiPoly], k: usize, factor: &Factor) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(gens.len());
    match factor {
        Factor::Var(v) => {
            push_unique(&mut out, MultiPoly::var_index(gens[k].registry(), *v));
            for (i, p) in gens.iter().enumerate() {
                if i != k {
                    push_unique(&mut out, p.substitute(*v, &Rational::zero()).primitive());
                }
            }
        }
        Factor::Poly(q) => {
            for (i, p) in gens.iter().enumerate() {
                push_unique(&mut out, if i == k { q.clone() } else { p.clone() });
            }
        }
    }
    out
}

/// Splits the variety of `gens` along generators with a monomial factor:
/// `v·q = 0` becomes the branches `v = 0` (substituted into the other
/// generators) and `q = 0`. The varieties of the returned systems cover
/// exactly the variety of `gens`; inconsistent branches are dropped, so an
/// empty result means an empty variety. No more than `max_branches` systems
/// are produced; past that limit branches are returned unsplit.
pub fn split_components(gens: &[MultiPoly], max_branches: usize) -> Vec<Vec<MultiPoly>> {
    let mut start = Vec::with_capacity(gens.len());
    for p in gens {
        push_unique(&mut start, p.primitive());
    }
    let mut done = Vec::new();
    let mut todo = vec![start];
    while let Some(sys) = todo.pop() {
        if sys.iter().any(MultiPoly::is_constant) {
            continue;
        }
        let found = sys.iter().enumerate().find_map(|(k, p)| {
            let factors = monomial_factors(p);
            let trivial = match &factors[..] {
                [Factor::Var(v)] => p.len() == 1 && p.total_degree() == 1 && p.degree_in(*v) == 1,
                [] => true,
                _ => false,
            };
            (!trivial).then_some((k, factors))
        });
        match found {
            Some((k, factors)) if done.len() + todo.len() + factors.len() <= max_branches => {
                todo.extend(factors.iter().map(|f| branch(&sys, k, f)));
            }
            _ => done.push(sys),
        }
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn reg(names: &[&str]) -> Arc<VarRegistry> {
        VarRegistry::new(names.iter().copied()).unwrap()
    }

    fn parse(r: &Arc<VarRegistry>, terms: &[(i64, &[u16])]) -> MultiPoly {
        MultiPoly::from_terms(
            r,
            terms
                .iter()
                .map(|(c, e)| (Monomial::from_exponents(e), int(*c)))
                .collect(),
        )
    }

    fn gb(r: &Arc<VarRegistry>, gens: &[MultiPoly]) -> GroebnerBasis {
        buchberger(&Ideal::new(r, gens).unwrap(), &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let r = reg(&["x1", "x2", "x3"]);
        let p = parse(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        assert!(s_polynomial(&p, &p).unwrap().is_zero());
        let q = parse(&r, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        assert_eq!(
            s_polynomial(&p, &q).unwrap(),
            parse(&r, &[(-1, &[1, 1, 0]), (1, &[0, 0, 1])])
        );
        let a = parse(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]);
        let b = parse(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
        assert_eq!(
            s_polynomial(&a, &b).unwrap(),
            parse(&r, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])])
        );
        assert!(matches!(
            s_polynomial(&a, &MultiPoly::zero(&r)),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn single_generator_becomes_monic() {
        let r = reg(&["x1", "x2"]);
        let p = parse(&r, &[(3, &[2, 0]), (6, &[0, 1])]);
        let g = gb(&r, &[p.clone()]);
        assert_eq!(g.polys(), &[p.monic()]);
    }

    #[test]
    fn twisted_cubic() {
        let r = reg(&["x1", "x2", "x3"]);
        let p = parse(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        let q = parse(&r, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        let g = gb(&r, &[p.clone(), q.clone()]);
        let expected = vec![
            p.clone(),
            parse(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 1])]),
            parse(&r, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]),
            parse(&r, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])]),
        ];
        assert_eq!(g.polys(), expected.as_slice());
        assert!(g.satisfies_criterion());
        assert!(g.contains(&p).unwrap() && g.contains(&q).unwrap());

        let elim = eliminate(&g, &[1, 2]).unwrap();
        assert_eq!(elim, vec![parse(&r, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])])]);
        assert_eq!(eliminate(&g, &[0, 1, 2]).unwrap(), g.polys().to_vec());
        assert!(matches!(eliminate(&g, &[0]), Err(Error::NotSuffixBlock)));
    }

    #[test]
    fn zero_dimensionality() {
        let r = reg(&["x1", "x2"]);
        let a = gb(
            &r,
            &[
                parse(&r, &[(1, &[2, 0]), (-1, &[0, 0])]),
                parse(&r, &[(1, &[0, 1]), (-1, &[1, 0])]),
            ],
        );
        assert!(is_zero_dimensional(&a));
        let b = gb(&r, &[parse(&r, &[(1, &[1, 1])])]);
        assert!(!is_zero_dimensional(&b));
        let c = gb(&r, &[parse(&r, &[(1, &[0, 0])])]);
        assert!(c.is_unit());
        assert!(is_zero_dimensional(&c));
    }

    #[test]
    fn eliminant_examples() {
        let cfg = GroebnerConfig::default();
        let r = reg(&["x1", "x2"]);
        let a = gb(
            &r,
            &[
                parse(&r, &[(1, &[2, 0]), (-1, &[0, 0])]),
                parse(&r, &[(1, &[0, 1]), (-1, &[1, 0])]),
            ],
        );
        assert_eq!(
            eliminant(&a, 1, &cfg).unwrap(),
            UnivariatePoly::from_ints(&[-1, 0, 1])
        );
        assert_eq!(
            eliminant(&a, 0, &cfg).unwrap(),
            UnivariatePoly::from_ints(&[-1, 0, 1])
        );
        let r1 = reg(&["x1"]);
        let b = gb(&r1, &[parse(&r1, &[(1, &[1])])]);
        assert_eq!(
            eliminant(&b, 0, &cfg).unwrap(),
            UnivariatePoly::from_ints(&[0, 1])
        );
        let c = gb(&r, &[parse(&r, &[(1, &[1, 1])])]);
        assert!(eliminant(&c, 0, &cfg).unwrap().is_zero());
        assert!(eliminant(&c, 1, &cfg).unwrap().is_zero());
    }

    #[test]
    fn radical_examples() {
        let cfg = GroebnerConfig::default();
        let r = reg(&["x1", "x2"]);
        let i = Ideal::new(
            &r,
            &[parse(&r, &[(1, &[2, 0])]), parse(&r, &[(1, &[0, 2])])],
        )
        .unwrap();
        let rad = zero_dim_radical(&i, &cfg).unwrap();
        let g = buchberger(&rad, &cfg).unwrap();
        assert_eq!(
            g.polys(),
            &[parse(&r, &[(1, &[1, 0])]), parse(&r, &[(1, &[0, 1])])]
        );

        let r1 = reg(&["x1"]);
        let j = Ideal::new(&r1, &[parse(&r1, &[(1, &[1]), (-1, &[0])])]).unwrap();
        assert_eq!(zero_dim_radical(&j, &cfg).unwrap(), j);

        let k = Ideal::new(&r, &[parse(&r, &[(1, &[1, 1])])]).unwrap();
        assert!(matches!(
            zero_dim_radical(&k, &cfg),
            Err(Error::RadicalUnavailable)
        ));
    }

    #[test]
    fn guards_report_partial_state() {
        let r = reg(&["x1", "x2", "x3"]);
        let p = parse(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        let q = parse(&r, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]);
        let cfg = GroebnerConfig {
            max_pairs: 1,
            ..GroebnerConfig::default()
        };
        match buchberger(&Ideal::new(&r, &[p, q]).unwrap(), &cfg) {
            Err(Error::Resource(e)) => {
                assert_eq!(e.limit, ResourceLimit::Pairs);
                assert!(!e.partial_basis.is_empty());
            }
            other => panic!("expected resource error, got {other:?}"),
        }
    }
}
