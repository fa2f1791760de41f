//! Problem files.
//!
//! A problem is a JSON document listing the variables and the polynomials as
//! term lists. Coefficients are exact strings (`"3"`, `"-1/2"`); decimals are
//! rejected.
//!
//! ```json
//! {
//!   "variables": ["x1", "x2"],
//!   "objective": [{ "coef": "1", "mono": { "x2": 1 } }],
//!   "inequalities": [
//!     [{ "coef": "-1", "mono": { "x1": 1 } }],
//!     [{ "coef": "1", "mono": { "x1": 1 } }, { "coef": "-1", "mono": { "x2": 2 } }]
//!   ],
//!   "equalities": []
//! }
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use polyopt_core::{parse_rational, Monomial, MultiPoly, PopProblem, Rational, VarRegistry};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum ProblemError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}` (declare it under \"variables\")")]
    UnknownVariable(String),
    #[error("no variables declared")]
    NoVariables,
    #[error("invalid problem: {0}")]
    Invalid(String),
}

/// An exact rational coefficient written as a string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coef(pub Rational);

impl Serialize for Coef {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = Coef;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an exact rational string such as \"3\" or \"-1/2\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Coef, E> {
                parse_rational(v).map(Coef).ok_or_else(|| {
                    E::custom(format!(
                        "invalid coefficient \"{v}\": expected an integer or p/q (decimals are not accepted)"
                    ))
                })
            }
        }
        d.deserialize_str(Visitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coef: Coef,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub mono: BTreeMap<String, u16>,
}

/// The on-disk shape of a problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub objective: Vec<Term>,
    #[serde(default)]
    pub inequalities: Vec<Vec<Term>>,
    #[serde(default)]
    pub equalities: Vec<Vec<Term>>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, ProblemError> {
        serde_json::from_str(text).map_err(|e| ProblemError::Syntax {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    pub fn from_problem(problem: &PopProblem) -> Self {
        let vars = problem.registry();
        ProblemFile {
            variables: vars.names().to_vec(),
            objective: terms_of(problem.objective()),
            inequalities: problem.inequalities().iter().map(terms_of).collect(),
            equalities: problem.equalities().iter().map(terms_of).collect(),
        }
    }

    pub fn to_problem(&self) -> Result<PopProblem, ProblemError> {
        if self.variables.is_empty() {
            return Err(ProblemError::NoVariables);
        }
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !seen.insert(v.as_str()) {
                return Err(ProblemError::DuplicateVariable(v.clone()));
            }
        }
        let vars = VarRegistry::new(self.variables.iter().cloned())
            .map_err(|e| ProblemError::Invalid(e.to_string()))?;
        let poly = |terms: &[Term]| build_poly(&vars, terms);
        let f = poly(&self.objective)?;
        let g = self
            .inequalities
            .iter()
            .map(|t| poly(t))
            .collect::<Result<Vec<_>, _>>()?;
        let h = self
            .equalities
            .iter()
            .map(|t| poly(t))
            .collect::<Result<Vec<_>, _>>()?;
        PopProblem::new(f, g, h).map_err(|e| ProblemError::Invalid(e.to_string()))
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn build_poly(vars: &Arc<VarRegistry>, terms: &[Term]) -> Result<MultiPoly, ProblemError> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut exps = vec![0u16; vars.len()];
        for (name, &e) in &t.mono {
            let i = vars
                .index_of(name)
                .ok_or_else(|| ProblemError::UnknownVariable(name.clone()))?;
            exps[i] += e;
        }
        out.push((Monomial::from_exponents(&exps), t.coef.0.clone()));
    }
    Ok(MultiPoly::from_terms(vars, out))
}

fn terms_of(p: &MultiPoly) -> Vec<Term> {
    let vars = p.registry();
    p.terms()
        .iter()
        .map(|(m, c)| Term {
            coef: Coef(c.clone()),
            mono: m
                .support()
                .map(|(i, e)| (vars.name(i).to_string(), e))
                .collect(),
        })
        .collect()
}

pub fn parse_problem_str(text: &str) -> Result<PopProblem, ProblemError> {
    ProblemFile::from_json(text)?.to_problem()
}

pub fn parse_problem(path: &Path) -> Result<PopProblem, ProblemError> {
    let text = std::fs::read_to_string(path).map_err(|source| ProblemError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_problem_str(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = r#"{
        "variables": ["x1", "x2"],
        "objective": [{"coef": "1", "mono": {"x2": 1}}],
        "inequalities": [
            [{"coef": "-1", "mono": {"x1": 1}}],
            [{"coef": "1", "mono": {"x1": 1}}, {"coef": "-1", "mono": {"x2": 2}}]
        ]
    }"#;

    #[test]
    fn parses_example() {
        let p = parse_problem_str(EXAMPLE1).unwrap();
        assert_eq!(p.objective().to_string(), "x2");
        let g: Vec<String> = p.inequalities().iter().map(|g| g.to_string()).collect();
        assert_eq!(g, ["-x1", "x1 - x2^2"]);
        assert!(p.equalities().is_empty());
    }

    #[test]
    fn rejects_decimals_with_position() {
        let text = "{\"variables\": [\"x\"],\n \"objective\": [{\"coef\": \"0.5\"}]}";
        match parse_problem_str(text) {
            Err(ProblemError::Syntax { line, message, .. }) => {
                assert_eq!(line, 2);
                assert!(message.contains("0.5"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let numeric = r#"{"variables": ["x"], "objective": [{"coef": 1}]}"#;
        assert!(matches!(
            parse_problem_str(numeric),
            Err(ProblemError::Syntax { .. })
        ));
    }

    #[test]
    fn rejects_bad_variables() {
        let dup = r#"{"variables": ["x", "x"], "objective": []}"#;
        assert!(
            matches!(parse_problem_str(dup), Err(ProblemError::DuplicateVariable(v)) if v == "x")
        );
        let unknown = r#"{"variables": ["x"], "objective": [{"coef": "1", "mono": {"y": 1}}]}"#;
        assert!(
            matches!(parse_problem_str(unknown), Err(ProblemError::UnknownVariable(v)) if v == "y")
        );
        let extra = r#"{"variables": ["x"], "objective": [], "bounds": []}"#;
        assert!(matches!(
            parse_problem_str(extra),
            Err(ProblemError::Syntax { .. })
        ));
    }

    #[test]
    fn unconstrained_problem() {
        let text = r#"{"variables": ["x"], "objective": [{"coef": "1/2", "mono": {"x": 2}}]}"#;
        let p = parse_problem_str(text).unwrap();
        assert!(p.inequalities().is_empty() && p.equalities().is_empty());
        assert_eq!(p.objective().to_string(), "1/2*x^2");
    }

    #[test]
    fn file_round_trip() {
        let p = parse_problem_str(EXAMPLE1).unwrap();
        let file = ProblemFile::from_problem(&p);
        let text = serde_json::to_string(&file).unwrap();
        let back = parse_problem_str(&text).unwrap();
        assert_eq!(back.objective(), p.objective());
        assert_eq!(back.inequalities(), p.inequalities());
    }
}
