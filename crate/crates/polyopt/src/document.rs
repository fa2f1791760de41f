//! Result documents written to standard output.

use std::time::Duration;

use polyopt_core::{
    format_rational, parse_rational, CandidateValue, ClosureTimings, Eliminants, ExtendedValue,
    Feasibility, OptResult, RealAlgebraic, UnivariatePoly,
};
use serde::{Deserialize, Serialize};

/// An exact real value: a rational string, `"-inf"`/`"+inf"`, or an
/// irrational root given by its polynomial and an isolating interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueDoc {
    Exact(String),
    Algebraic {
        poly: PolyDoc,
        interval: [String; 2],
    },
}

impl ValueDoc {
    pub fn from_real(x: &RealAlgebraic) -> Self {
        match x {
            RealAlgebraic::Rational(r) => ValueDoc::Exact(format_rational(r)),
            RealAlgebraic::Algebraic(a) => {
                let (lo, hi) = a.interval();
                ValueDoc::Algebraic {
                    poly: PolyDoc::new(a.poly(), "t"),
                    interval: [format_rational(lo), format_rational(hi)],
                }
            }
        }
    }

    pub fn from_extended(v: &ExtendedValue) -> Self {
        match v {
            ExtendedValue::MinusInfinity => ValueDoc::Exact("-inf".into()),
            ExtendedValue::PlusInfinity => ValueDoc::Exact("+inf".into()),
            ExtendedValue::Finite(x) => ValueDoc::from_real(x),
        }
    }

    pub fn as_rational(&self) -> Option<polyopt_core::Rational> {
        match self {
            ValueDoc::Exact(s) => parse_rational(s),
            ValueDoc::Algebraic { .. } => None,
        }
    }
}

/// A univariate polynomial: its coefficients (constant term first) and a
/// readable rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub variable: String,
    pub coefficients: Vec<String>,
    pub text: String,
}

impl PolyDoc {
    pub fn new(p: &UnivariatePoly, var: &str) -> Self {
        PolyDoc {
            variable: var.to_string(),
            coefficients: p.coeffs().iter().map(format_rational).collect(),
            text: p.display(var),
        }
    }

    pub fn to_poly(&self) -> Option<UnivariatePoly> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Option<Vec<_>>>()?;
        Some(UnivariatePoly::new(coeffs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub value: ValueDoc,
    pub feasibility: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<ValueDoc>>,
}

impl CandidateDoc {
    fn new(c: &CandidateValue) -> Self {
        let (feasibility, witness) = match &c.feasibility {
            Feasibility::FeasibleWithWitness(p) => (
                "feasible",
                Some(p.iter().map(ValueDoc::from_real).collect()),
            ),
            Feasibility::Infeasible => ("infeasible", None),
            Feasibility::Unknown(_) => ("unknown", None),
        };
        CandidateDoc {
            value: ValueDoc::from_real(&c.value),
            feasibility: feasibility.into(),
            witness,
        }
    }
}

/// Wall-clock seconds per stage.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TimingsDoc {
    pub build: f64,
    pub groebner: f64,
    pub radical: f64,
    pub elimination: f64,
    pub roots: f64,
    pub filtering: f64,
    pub total: f64,
}

impl TimingsDoc {
    pub fn from_closure(t: &ClosureTimings) -> Self {
        TimingsDoc {
            groebner: t.groebner.as_secs_f64(),
            radical: t.radical.as_secs_f64(),
            elimination: t.elimination.as_secs_f64(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    pub task: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<String>,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<ValueDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub minimizers: Vec<Vec<ValueDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub critical_dimension: Option<u8>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub eliminants: Vec<PolyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<CandidateDoc>,
    #[serde(default)]
    pub timings: TimingsDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ResultDocument {
    pub fn new(task: &str) -> Self {
        ResultDocument {
            file: None,
            task: task.into(),
            system: None,
            status: String::new(),
            value: None,
            minimizers: Vec::new(),
            dimension: None,
            critical_dimension: None,
            eliminants: Vec::new(),
            provenance: None,
            candidates: Vec::new(),
            timings: TimingsDoc::default(),
            error: None,
        }
    }

    pub fn error(task: &str, message: String) -> Self {
        ResultDocument {
            status: "error".into(),
            error: Some(message),
            ..ResultDocument::new(task)
        }
    }

    pub fn set_eliminants(&mut self, e: &Eliminants) {
        self.eliminants = e
            .polys()
            .iter()
            .map(|p| PolyDoc::new(p, e.graph_name()))
            .collect();
        self.provenance = Some(e.provenance().name().into());
    }

    pub fn from_opt(system: &str, res: &OptResult) -> Self {
        let d = &res.diagnostics;
        let t = &d.timings;
        let mut doc = ResultDocument {
            system: Some(system.into()),
            status: res.status.name().into(),
            value: Some(ValueDoc::from_extended(&res.value)),
            minimizers: res
                .minimizers
                .iter()
                .map(|p| p.iter().map(ValueDoc::from_real).collect())
                .collect(),
            critical_dimension: d.critical_dimension.map(|x| x.value()),
            candidates: d.candidates.iter().map(CandidateDoc::new).collect(),
            timings: TimingsDoc {
                build: secs(t.build),
                groebner: secs(t.groebner),
                radical: secs(t.radical),
                elimination: secs(t.elimination),
                roots: secs(t.roots),
                filtering: secs(t.filtering),
                total: 0.0,
            },
            ..ResultDocument::new("optimize")
        };
        doc.set_eliminants(&d.eliminants);
        doc
    }

    /// Plain-text rendering for `--output text`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(f) = &self.file {
            out.push_str(&format!("file:        {f}\n"));
        }
        out.push_str(&format!("task:        {}\n", self.task));
        if let Some(s) = &self.system {
            out.push_str(&format!("system:      {s}\n"));
        }
        out.push_str(&format!("status:      {}\n", self.status));
        if let Some(v) = &self.value {
            out.push_str(&format!("value:       {}\n", value_text(v)));
        }
        for m in &self.minimizers {
            let coords: Vec<String> = m.iter().map(value_text).collect();
            out.push_str(&format!("minimizer:   ({})\n", coords.join(", ")));
        }
        if let Some(d) = self.dimension {
            out.push_str(&format!("dimension:   {d}\n"));
        }
        if let Some(d) = self.critical_dimension {
            out.push_str(&format!("critical:    {d}\n"));
        }
        if !self.eliminants.is_empty() || self.provenance.is_some() {
            let polys: Vec<&str> = self.eliminants.iter().map(|p| p.text.as_str()).collect();
            out.push_str(&format!("eliminants:  [{}]\n", polys.join(", ")));
        }
        if let Some(p) = &self.provenance {
            out.push_str(&format!("provenance:  {p}\n"));
        }
        if let Some(e) = &self.error {
            out.push_str(&format!("error:       {e}\n"));
        }
        out.push_str(&format!("time:        {:.3}s\n", self.timings.total));
        out
    }
}

fn secs(d: Duration) -> f64 {
    d.as_secs_f64()
}

fn value_text(v: &ValueDoc) -> String {
    match v {
        ValueDoc::Exact(s) => s.clone(),
        ValueDoc::Algebraic { poly, interval } => {
            format!(
                "root of {} in ({}, {})",
                poly.text, interval[0], interval[1]
            )
        }
    }
}
