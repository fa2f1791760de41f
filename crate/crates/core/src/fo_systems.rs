//! First-order optimality systems, slack lifting and graph augmentation.
//!
//! Variables are laid out as `x ≻ y ≻ λ ≻ x_{n+1}`: the problem variables,
//! then slacks, then multipliers, then the graph variable, so that a lex
//! basis eliminates down to the objective value.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{same_registry, MultiPoly, VarRegistry};
use crate::rational::Rational;

/// `min f(x)` subject to `g_j(x) ≥ 0` and `h_i(x) = 0`.
#[derive(Debug, Clone)]
pub struct PopProblem {
    vars: Arc<VarRegistry>,
    objective: MultiPoly,
    inequalities: Vec<MultiPoly>,
    equalities: Vec<MultiPoly>,
}

impl PopProblem {
    pub fn new(
        objective: MultiPoly,
        inequalities: Vec<MultiPoly>,
        equalities: Vec<MultiPoly>,
    ) -> Result<Self> {
        let vars = objective.registry().clone();
        if inequalities
            .iter()
            .chain(&equalities)
            .any(|p| !same_registry(p.registry(), &vars))
        {
            return Err(Error::RegistryMismatch);
        }
        Ok(PopProblem {
            vars,
            objective,
            inequalities,
            equalities,
        })
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.vars
    }

    pub fn objective(&self) -> &MultiPoly {
        &self.objective
    }

    pub fn inequalities(&self) -> &[MultiPoly] {
        &self.inequalities
    }

    pub fn equalities(&self) -> &[MultiPoly] {
        &self.equalities
    }

    /// Whether `point` (one value per variable) satisfies every constraint.
    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        self.inequalities
            .iter()
            .all(|g| !g.evaluate_dense(point).is_negative())
            && self
                .equalities
                .iter()
                .all(|h| h.evaluate_dense(point).is_zero())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FirstOrderKind {
    FJ,
    FJPlus,
    KKT,
    KKTPlus,
    Sing,
    SingPlus,
}

impl FirstOrderKind {
    pub fn is_plus(self) -> bool {
        matches!(
            self,
            FirstOrderKind::FJPlus | FirstOrderKind::KKTPlus | FirstOrderKind::SingPlus
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FirstOrderKind::FJ => "fj",
            FirstOrderKind::FJPlus => "fj+",
            FirstOrderKind::KKT => "kkt",
            FirstOrderKind::KKTPlus => "kkt+",
            FirstOrderKind::Sing => "sing",
            FirstOrderKind::SingPlus => "sing+",
        }
    }

    fn objective_multiplier(self) -> bool {
        matches!(self, FirstOrderKind::FJ | FirstOrderKind::FJPlus)
    }

    fn normalized(self) -> bool {
        !matches!(self, FirstOrderKind::KKT | FirstOrderKind::KKTPlus)
    }
}

/// A polynomial system over an extended registry, with bookkeeping of which
/// variables play which role.
#[derive(Debug, Clone)]
pub struct FirstOrderSystem {
    kind: FirstOrderKind,
    vars: Arc<VarRegistry>,
    polys: Vec<MultiPoly>,
    x: Vec<String>,
    multipliers: Vec<String>,
    eq_multipliers: Vec<String>,
    slacks: Vec<String>,
    graph: Option<String>,
}

impl FirstOrderSystem {
    pub fn kind(&self) -> FirstOrderKind {
        self.kind
    }

    pub fn registry(&self) -> &Arc<VarRegistry> {
        &self.vars
    }

    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn x_names(&self) -> &[String] {
        &self.x
    }

    /// `λ_0, λ_1, …, λ_m` for Fritz John kinds, `λ_1, …, λ_m` otherwise.
    pub fn multiplier_names(&self) -> &[String] {
        &self.multipliers
    }

    /// Free multipliers attached to user equalities.
    pub fn equality_multiplier_names(&self) -> &[String] {
        &self.eq_multipliers
    }

    pub fn slack_names(&self) -> &[String] {
        &self.slacks
    }

    pub fn graph_name(&self) -> Option<&str> {
        self.graph.as_deref()
    }

    pub fn x_indices(&self) -> Vec<usize> {
        self.x
            .iter()
            .map(|n| self.vars.index_of(n).expect("x variable"))
            .collect()
    }

    /// Prepends `g_j − y_j²` with fresh slacks placed right after the x-block.
    pub fn slack_lift(&self, g: &[MultiPoly]) -> Result<FirstOrderSystem> {
        if !self.slacks.is_empty() {
            return Err(Error::AlreadyLifted);
        }
        let (vars, polys, slacks) = lift_slacks(&self.vars, &self.polys, self.x.len(), g)?;
        Ok(FirstOrderSystem {
            vars,
            polys,
            slacks,
            ..self.clone()
        })
    }

    /// Appends `x_{n+1} − f` with a fresh lowest-priority variable.
    pub fn graph_augment(&self, f: &MultiPoly) -> Result<FirstOrderSystem> {
        if self.graph.is_some() {
            return Err(Error::AlreadyAugmented);
        }
        let (vars, polys, graph) = augment_graph(&self.vars, &self.polys, f, self.x.len())?;
        Ok(FirstOrderSystem {
            vars,
            polys,
            graph: Some(graph),
            ..self.clone()
        })
    }
}

/// Inserts slacks `y_1 … y_m` at position `pos` and prepends `g_j − y_j²`.
pub(crate) fn lift_slacks(
    vars: &Arc<VarRegistry>,
    polys: &[MultiPoly],
    pos: usize,
    g: &[MultiPoly],
) -> Result<(Arc<VarRegistry>, Vec<MultiPoly>, Vec<String>)> {
    if g.is_empty() {
        return Ok((vars.clone(), polys.to_vec(), Vec::new()));
    }
    let bases: Vec<String> = (1..=g.len()).map(|j| format!("y{j}")).collect();
    let (lifted, names) = vars.with_inserted(pos, &bases);
    let mut out = Vec::with_capacity(g.len() + polys.len());
    for (gj, y) in g.iter().zip(&names) {
        let y = MultiPoly::var(&lifted, y)?;
        out.push(gj.embed(&lifted)?.checked_sub(&y.pow(2))?);
    }
    for p in polys {
        out.push(p.embed(&lifted)?);
    }
    Ok((lifted, out, names))
}

/// Appends the graph variable (named after the `n_x + 1`-th coordinate)
/// and the polynomial `x_{n+1} − f`.
pub(crate) fn augment_graph(
    vars: &Arc<VarRegistry>,
    polys: &[MultiPoly],
    f: &MultiPoly,
    n_x: usize,
) -> Result<(Arc<VarRegistry>, Vec<MultiPoly>, String)> {
    let (ext, names) = vars.with_inserted(vars.len(), &[format!("x{}", n_x + 1)]);
    let t = MultiPoly::var(&ext, &names[0])?;
    let mut out = polys
        .iter()
        .map(|p| p.embed(&ext))
        .collect::<Result<Vec<_>>>()?;
    out.push(t.checked_sub(&f.embed(&ext)?)?);
    let name = names.into_iter().next().unwrap();
    Ok((ext, out, name))
}

/// Builds the chosen first-order system of `problem`.
///
/// User equalities `h_i` get free multipliers `μ_i` in the gradient rows
/// (and in the normalization for Fritz John and singular kinds) and are
/// appended as polynomials.
pub fn build_first_order(problem: &PopProblem, kind: FirstOrderKind) -> Result<FirstOrderSystem> {
    let g = problem.inequalities();
    let h = problem.equalities();
    let m = g.len();
    if m == 0 && matches!(kind, FirstOrderKind::Sing | FirstOrderKind::SingPlus) {
        return Err(Error::NoInequalities);
    }
    let x_vars = problem.registry();
    let n = x_vars.len();
    let first = if kind.objective_multiplier() { 0 } else { 1 };
    let mut bases: Vec<String> = (first..=m).map(|j| format!("l{j}")).collect();
    bases.extend((1..=h.len()).map(|i| format!("m{i}")));
    let (vars, names) = x_vars.with_inserted(n, &bases);
    let lambda_count = m + 1 - first;
    let (multipliers, eq_multipliers) = (
        names[..lambda_count].to_vec(),
        names[lambda_count..].to_vec(),
    );

    let var = |name: &String| MultiPoly::var(&vars, name);
    let lam = multipliers.iter().map(var).collect::<Result<Vec<_>>>()?;
    let mu = eq_multipliers.iter().map(var).collect::<Result<Vec<_>>>()?;
    let weight = |l: &MultiPoly| if kind.is_plus() { l.pow(2) } else { l.clone() };

    let f = problem.objective().embed(&vars)?;
    let g = g
        .iter()
        .map(|p| p.embed(&vars))
        .collect::<Result<Vec<_>>>()?;
    let h = h
        .iter()
        .map(|p| p.embed(&vars))
        .collect::<Result<Vec<_>>>()?;
    let (lam0, lam_g) = if kind.objective_multiplier() {
        (Some(&lam[0]), &lam[1..])
    } else {
        (None, &lam[..])
    };
    let is_sing = matches!(kind, FirstOrderKind::Sing | FirstOrderKind::SingPlus);

    let mut polys = Vec::with_capacity(n + m + h.len() + 1);
    for i in 0..n {
        let mut row = MultiPoly::zero(&vars);
        if !is_sing {
            let df = f.derivative_index(i);
            row = match lam0 {
                Some(l0) => &weight(l0) * &df,
                None => df,
            };
        }
        for (l, gj) in lam_g.iter().zip(&g) {
            let term = &weight(l) * &gj.derivative_index(i);
            row = if is_sing { &row + &term } else { &row - &term };
        }
        for (u, hk) in mu.iter().zip(&h) {
            let term = u * &hk.derivative_index(i);
            row = if is_sing { &row + &term } else { &row - &term };
        }
        polys.push(row);
    }
    for (l, gj) in lam_g.iter().zip(&g) {
        polys.push(&weight(l) * gj);
    }
    if kind.normalized() {
        let mut norm = MultiPoly::one(&vars);
        for l in lam.iter().chain(&mu) {
            norm = &norm - &l.pow(2);
        }
        polys.push(norm);
    }
    polys.extend(h);

    Ok(FirstOrderSystem {
        kind,
        vars,
        polys,
        x: x_vars.names().to_vec(),
        multipliers,
        eq_multipliers,
        slacks: Vec::new(),
        graph: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::rational::int;
    use alloc::vec;

    fn plane() -> Arc<VarRegistry> {
        VarRegistry::new(["x1", "x2"]).unwrap()
    }

    fn v(vars: &Arc<VarRegistry>, name: &str) -> MultiPoly {
        MultiPoly::var(vars, name).unwrap()
    }

    fn c(vars: &Arc<VarRegistry>, k: i64) -> MultiPoly {
        MultiPoly::constant(vars, int(k))
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
    fn fritz_john_example() {
        let sys = build_first_order(&example1(), FirstOrderKind::FJ).unwrap();
        let r = sys.registry().clone();
        assert_eq!(r.names(), ["x1", "x2", "l0", "l1", "l2"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let (l0, l1, l2) = (v(&r, "l0"), v(&r, "l1"), v(&r, "l2"));
        let expected = vec![
            &l1 - &l2,
            &(&(&c(&r, 2) * &x2) * &l2) + &l0,
            -&(&l1 * &x1),
            &l2 * &(&x1 - &x2.pow(2)),
            &(&(&c(&r, 1) - &l0.pow(2)) - &l1.pow(2)) - &l2.pow(2),
        ];
        assert_eq!(sys.polys(), &expected[..]);
        assert_eq!(sys.multiplier_names(), ["l0", "l1", "l2"]);
    }

    #[test]
    fn kkt_without_constraints_is_gradient() {
        let r = plane();
        let f = &v(&r, "x1").pow(2) + &v(&r, "x2");
        let p = PopProblem::new(f.clone(), vec![], vec![]).unwrap();
        let sys = build_first_order(&p, FirstOrderKind::KKT).unwrap();
        assert_eq!(sys.registry().names(), ["x1", "x2"]);
        let grad: Vec<_> = f.gradient(&[0, 1]);
        assert_eq!(sys.polys(), &grad[..]);
        let fj = build_first_order(&p, FirstOrderKind::FJ).unwrap();
        let l0 = v(fj.registry(), "l0");
        let emb = |q: &MultiPoly| q.embed(fj.registry()).unwrap();
        assert_eq!(
            fj.polys(),
            &[
                &l0 * &emb(&grad[0]),
                &l0 * &emb(&grad[1]),
                &c(fj.registry(), 1) - &l0.pow(2)
            ]
        );
    }

    #[test]
    fn singular_locus_example() {
        let sys = build_first_order(&example2(), FirstOrderKind::Sing).unwrap();
        let r = sys.registry().clone();
        assert_eq!(r.names(), ["x1", "x2", "l1", "l2", "l3"]);
        let (x1, x2) = (v(&r, "x1"), v(&r, "x2"));
        let (l1, l2, l3) = (v(&r, "l1"), v(&r, "l2"), v(&r, "l3"));
        let two = c(&r, 2);
        let expected = vec![
            &(&(&two * &x1) * &l1) - &(&(&two * &x1) * &l2),
            &(&(-&l1) + &(&c(&r, 4) * &l2)) - &l3,
            &l1 * &(&x1.pow(2) - &x2),
            &l2 * &(&(-&x1.pow(2)) + &(&c(&r, 4) * &x2)),
            &l3 * &(&(-&x2) + &c(&r, 1)),
            &(&(&c(&r, 1) - &l1.pow(2)) - &l2.pow(2)) - &l3.pow(2),
        ];
        assert_eq!(sys.polys(), &expected[..]);
        let p = PopProblem::new(v(&plane(), "x1"), vec![], vec![]).unwrap();
        assert!(matches!(
            build_first_order(&p, FirstOrderKind::Sing),
            Err(Error::NoInequalities)
        ));
    }

    #[test]
    fn slack_lift_and_graph() {
        let p = example1();
        let sys = build_first_order(&p, FirstOrderKind::FJ).unwrap();
        let lifted = sys.slack_lift(p.inequalities()).unwrap();
        let r = lifted.registry().clone();
        assert_eq!(r.names(), ["x1", "x2", "y1", "y2", "l0", "l1", "l2"]);
        let (x1, x2, y1, y2) = (v(&r, "x1"), v(&r, "x2"), v(&r, "y1"), v(&r, "y2"));
        assert_eq!(lifted.polys()[0], &(-&x1) - &y1.pow(2));
        assert_eq!(lifted.polys()[1], &(&x1 - &x2.pow(2)) - &y2.pow(2));
        assert_eq!(lifted.polys().len(), 7);
        assert!(matches!(
            lifted.slack_lift(p.inequalities()),
            Err(Error::AlreadyLifted)
        ));

        let aug = lifted.graph_augment(p.objective()).unwrap();
        assert_eq!(aug.graph_name(), Some("x3"));
        let r = aug.registry().clone();
        assert_eq!(r.names().last().unwrap(), "x3");
        assert_eq!(aug.polys().last().unwrap(), &(&v(&r, "x3") - &v(&r, "x2")));
        assert!(matches!(
            aug.graph_augment(p.objective()),
            Err(Error::AlreadyAugmented)
        ));

        // m = 0 leaves the system alone
        let q = PopProblem::new(v(&plane(), "x1"), vec![], vec![]).unwrap();
        let s = build_first_order(&q, FirstOrderKind::KKT).unwrap();
        let l = s.slack_lift(q.inequalities()).unwrap();
        assert_eq!(l.polys(), s.polys());
        assert_eq!(l.registry().names(), s.registry().names());
    }

    #[test]
    fn example2_lift_and_graph_rows() {
        let p = example2();
        let sys = build_first_order(&p, FirstOrderKind::Sing).unwrap();
        let aug = sys
            .slack_lift(p.inequalities())
            .unwrap()
            .graph_augment(p.objective())
            .unwrap();
        let r = aug.registry().clone();
        let (x1, x2, x3) = (v(&r, "x1"), v(&r, "x2"), v(&r, "x3"));
        let y3 = v(&r, "y3");
        assert_eq!(aug.polys()[2], &(&(-&x2) - &y3.pow(2)) + &c(&r, 1));
        assert_eq!(
            aug.polys().last().unwrap(),
            &(&(&(-&x1) + &(&c(&r, 5) * &x2)) + &x3)
        );
    }

    #[test]
    fn graph_name_avoids_collisions() {
        let r = VarRegistry::new(["x1", "x3"]).unwrap();
        let p = PopProblem::new(v(&r, "x1"), vec![], vec![]).unwrap();
        let sys = build_first_order(&p, FirstOrderKind::KKT).unwrap();
        let aug = sys.graph_augment(p.objective()).unwrap();
        assert_eq!(aug.graph_name(), Some("x3_"));
    }

    #[test]
    fn fritz_john_witness_modulo_algebraic_multiplier() {
        // at (0, 0) with λ0 = 0 and λ1 = λ2 = t every row vanishes mod 2t² − 1
        let sys = build_first_order(&example1(), FirstOrderKind::FJ).unwrap();
        let t_reg = VarRegistry::new(["t"]).unwrap();
        let t = MultiPoly::var(&t_reg, "t").unwrap();
        let modulus = &(&MultiPoly::constant(&t_reg, int(2)) * &t.pow(2)) - &MultiPoly::one(&t_reg);
        for p in sys.polys() {
            let mut acc = MultiPoly::zero(&t_reg);
            for (mono, coef) in p.terms() {
                let e = mono.exponents();
                if e[0] > 0 || e[1] > 0 || e[2] > 0 {
                    continue;
                }
                let deg = e[3] + e[4];
                acc = &acc + &MultiPoly::monomial(&t_reg, Monomial::var(1, 0, deg), coef.clone());
            }
            let (_, r) = crate::poly::divide(&acc, &[modulus.clone()]).unwrap();
            assert!(r.is_zero(), "{p} leaves {r}");
        }
    }

    #[test]
    fn plus_variants_square_inequality_multipliers() {
        let p = example2();
        let plain = build_first_order(&p, FirstOrderKind::KKT).unwrap();
        let plus = build_first_order(&p, FirstOrderKind::KKTPlus).unwrap();
        let r = plain.registry().clone();
        for (a, b) in plain.polys().iter().zip(plus.polys()) {
            let mut sub = a.clone();
            for name in plain.multiplier_names() {
                let i = r.index_of(name).unwrap();
                sub = square_substitute(&sub, i);
            }
            assert_eq!(&sub, b);
        }
    }

    fn square_substitute(p: &MultiPoly, i: usize) -> MultiPoly {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[i] *= 2;
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        MultiPoly::from_terms(p.registry(), terms)
    }

    #[test]
    fn equalities_get_free_multipliers() {
        let r = plane();
        let (a, b) = (v(&r, "x1"), v(&r, "x2"));
        let p = PopProblem::new(a.clone(), vec![b.clone()], vec![&a + &b]).unwrap();
        let sys = build_first_order(&p, FirstOrderKind::KKT).unwrap();
        assert_eq!(sys.registry().names(), ["x1", "x2", "l1", "m1"]);
        assert_eq!(sys.equality_multiplier_names(), ["m1"]);
        let r = sys.registry().clone();
        let (x1, x2, l1, m1) = (v(&r, "x1"), v(&r, "x2"), v(&r, "l1"), v(&r, "m1"));
        assert_eq!(
            sys.polys(),
            &[&c(&r, 1) - &m1, &(-&l1) - &m1, &l1 * &x2, &x1 + &x2]
        );
    }
}
