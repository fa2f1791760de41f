//! Command-line driver.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use polyopt_core::{
    critical_value_dimension, image_closure_semialgebraic, image_dimension, optimize,
    ClosureOptions, FirstOrderKind, GroebnerConfig, OptStatus, OptimizeOptions, PopProblem,
    RadicalMode,
};
use rayon::prelude::*;

use crate::document::{ResultDocument, TimingsDoc};
use crate::problem::parse_problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Task {
    Optimize,
    DimCritical,
    Closure,
}

impl Task {
    fn name(self) -> &'static str {
        match self {
            Task::Optimize => "optimize",
            Task::DimCritical => "dim-critical",
            Task::Closure => "closure",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum System {
    #[value(name = "fj")]
    Fj,
    #[value(name = "fj+")]
    FjPlus,
    #[value(name = "kkt")]
    Kkt,
    #[value(name = "kkt+")]
    KktPlus,
}

impl System {
    fn kind(self) -> FirstOrderKind {
        match self {
            System::Fj => FirstOrderKind::FJ,
            System::FjPlus => FirstOrderKind::FJPlus,
            System::Kkt => FirstOrderKind::KKT,
            System::KktPlus => FirstOrderKind::KKTPlus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Radical {
    Auto,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

/// Exact global minimization of polynomials over basic semi-algebraic sets.
#[derive(Debug, Parser)]
#[command(name = "polyopt", version)]
pub struct Args {
    /// Problem files (JSON); each produces one result document.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,

    #[arg(long, value_enum, default_value = "optimize")]
    pub task: Task,

    /// First-order system for `optimize` [default: fj]
    #[arg(long, value_enum)]
    pub system: Option<System>,

    /// Use the squared-multiplier singular locus for `dim-critical`.
    #[arg(long)]
    pub plus: bool,

    #[arg(long, value_enum, default_value = "auto")]
    pub radical: Radical,

    /// Feasibility filtering of candidate values (`optimize` only) [default: on]
    #[arg(long, value_enum)]
    pub filter: Option<Switch>,

    /// Report minimizers (`optimize` only) [default: on]
    #[arg(long, value_enum)]
    pub extract_minimizers: Option<Switch>,

    /// Resolve irrational points down to interval width 2^-PRECISION.
    #[arg(long, default_value_t = 64)]
    pub precision: u32,

    /// Also report the dimension of the critical-value image (`optimize` only).
    #[arg(long)]
    pub critical_dimension: bool,

    #[arg(long, default_value_t = GroebnerConfig::default().max_pairs)]
    pub max_pairs: usize,

    #[arg(long, default_value_t = GroebnerConfig::default().max_degree)]
    pub max_degree: u32,

    #[arg(long, value_enum, default_value = "json")]
    pub output: Output,
}

impl Args {
    /// Flags that only make sense for another task.
    pub fn validate(&self) -> Result<(), String> {
        let misplaced =
            |flag: &str, task: Task| format!("--{flag} only applies to --task {}", task.name());
        if self.task != Task::Optimize {
            if self.system.is_some() {
                return Err(misplaced("system", Task::Optimize));
            }
            if self.filter.is_some() {
                return Err(misplaced("filter", Task::Optimize));
            }
            if self.extract_minimizers.is_some() {
                return Err(misplaced("extract-minimizers", Task::Optimize));
            }
            if self.critical_dimension {
                return Err(misplaced("critical-dimension", Task::Optimize));
            }
        }
        if self.plus && self.task != Task::DimCritical {
            return Err(misplaced("plus", Task::DimCritical));
        }
        if self.extract_minimizers == Some(Switch::On) && self.filter == Some(Switch::Off) {
            return Err("--extract-minimizers on needs --filter on".into());
        }
        Ok(())
    }

    fn closure_options(&self) -> ClosureOptions {
        ClosureOptions {
            radical: match self.radical {
                Radical::Auto => RadicalMode::Auto,
                Radical::Off => RadicalMode::Off,
            },
            groebner: GroebnerConfig {
                max_pairs: self.max_pairs,
                max_degree: self.max_degree,
                ..GroebnerConfig::default()
            },
            clock: Some(clock),
        }
    }

    fn optimize_options(&self) -> OptimizeOptions {
        OptimizeOptions {
            closure: self.closure_options(),
            filter: self.filter != Some(Switch::Off),
            extract_minimizers: self.extract_minimizers != Some(Switch::Off)
                && self.filter != Some(Switch::Off),
            precision: self.precision,
            critical_dimension: self.critical_dimension,
        }
    }
}

fn clock() -> Duration {
    static START: OnceLock<Instant> = OnceLock::new();
    START.get_or_init(Instant::now).elapsed()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed = 0,
    Inconclusive = 2,
    Failed = 1,
}

impl Outcome {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Runs one task on one problem.
pub fn solve(problem: &PopProblem, args: &Args) -> (Outcome, ResultDocument) {
    let task = args.task.name();
    let start = clock();
    let (outcome, mut doc) = match args.task {
        Task::Optimize => {
            let system = args.system.unwrap_or(System::Fj);
            let kind = system.kind();
            match optimize(problem, kind, &args.optimize_options()) {
                Ok(res) => {
                    let outcome = match res.status {
                        OptStatus::ExactOptimal => Outcome::Completed,
                        _ => Outcome::Inconclusive,
                    };
                    (outcome, ResultDocument::from_opt(kind.name(), &res))
                }
                Err(e) => (Outcome::Failed, ResultDocument::error(task, e.to_string())),
            }
        }
        Task::DimCritical => {
            let opts = args.closure_options();
            match critical_value_dimension(
                problem.objective(),
                problem.inequalities(),
                args.plus,
                &opts,
            ) {
                Ok(d) => {
                    let mut doc = ResultDocument::new(task);
                    doc.status = "completed".into();
                    doc.system = Some(if args.plus { "sing+" } else { "sing" }.into());
                    doc.dimension = Some(d.value());
                    (Outcome::Completed, doc)
                }
                Err(e) => (Outcome::Failed, ResultDocument::error(task, e.to_string())),
            }
        }
        Task::Closure => {
            let opts = args.closure_options();
            let f = problem.objective();
            match image_closure_semialgebraic(
                f,
                problem.inequalities(),
                problem.equalities(),
                &opts,
            ) {
                Ok(e) => {
                    let mut doc = ResultDocument::new(task);
                    doc.status = "completed".into();
                    doc.dimension = Some(image_dimension(&e).value());
                    doc.set_eliminants(&e);
                    doc.timings = TimingsDoc::from_closure(&e.timings());
                    (Outcome::Completed, doc)
                }
                Err(e) => (Outcome::Failed, ResultDocument::error(task, e.to_string())),
            }
        }
    };
    doc.timings.total = clock().saturating_sub(start).as_secs_f64();
    (outcome, doc)
}

/// Parses and solves every file; documents come back in argument order.
pub fn run(args: &Args) -> (Outcome, Vec<ResultDocument>) {
    let task = args.task.name();
    if let Err(msg) = args.validate() {
        return (Outcome::Failed, vec![ResultDocument::error(task, msg)]);
    }
    let docs: Vec<(Outcome, ResultDocument)> = args
        .files
        .par_iter()
        .map(|path| {
            let (outcome, mut doc) = match parse_problem(path) {
                Ok(problem) => solve(&problem, args),
                Err(e) => (Outcome::Failed, ResultDocument::error(task, e.to_string())),
            };
            doc.file = Some(path.display().to_string());
            (outcome, doc)
        })
        .collect();
    let worst = docs
        .iter()
        .map(|(o, _)| *o)
        .max_by_key(|o| severity(*o))
        .unwrap_or(Outcome::Completed);
    (worst, docs.into_iter().map(|(_, d)| d).collect())
}

fn severity(o: Outcome) -> u8 {
    match o {
        Outcome::Completed => 0,
        Outcome::Inconclusive => 1,
        Outcome::Failed => 2,
    }
}

pub fn render(docs: &[ResultDocument], output: Output) -> String {
    match output {
        Output::Json => {
            let mut out = String::new();
            for d in docs {
                out.push_str(&serde_json::to_string_pretty(d).expect("documents serialize"));
                out.push('\n');
            }
            out
        }
        Output::Text => docs
            .iter()
            .map(ResultDocument::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Entry point shared by the binary and the tests: returns the exit code and
/// what should go to standard output and standard error.
pub fn main_with<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string(), String::new());
            }
            let doc = ResultDocument::error("unknown", e.kind().to_string());
            return (
                Outcome::Failed.code(),
                render(&[doc], Output::Json),
                e.to_string(),
            );
        }
    };
    let (outcome, docs) = run(&args);
    (outcome.code(), render(&docs, args.output), String::new())
}
