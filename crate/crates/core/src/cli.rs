//! The `cubesum` command line.
//!
//! [`run`] does all the work and returns the exit code with captured output,
//! so the binary is a thin wrapper and tests can call it directly.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::classifier::{classify, Scope, Status};
use crate::constructors::{descent_trace, lucas_triple_search, lucas_witness, solution_from_relation, tangent_step, Point, TraceEnd};
use crate::criteria::prime_report;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::factorization::{classify_rational_prime, factor, PrimeClass};
use crate::kelement::KElement;
use crate::search::{relation_search, search_eisenstein, search_rational, SearchBudget};
use crate::syntax::parse_rational_int;
use crate::tables::{diff, generate, ExpectedTables, TableKind};
use crate::verify::{run_all, Level};

/// Overrides the default denominator budget.
pub const BUDGET_ENV: &str = "CUBESUM_BUDGET_DENOM";

#[derive(Parser, Debug)]
#[command(name = "cubesum", version, about = "Decide and solve x^3 + y^3 = M over Q and Q(w)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct BudgetArgs {
    /// Largest denominator tried by witness searches
    #[arg(long, value_name = "N")]
    pub budget_denom: Option<u32>,
    /// Coordinate bound of the Eisenstein box search
    #[arg(long, value_name = "N")]
    pub budget_coord: Option<u32>,
    /// Coordinate bound of the relation search
    #[arg(long, value_name = "N")]
    pub budget_relation: Option<u32>,
    /// Bound on |A| + |B| in the Lucas triple search
    #[arg(long, value_name = "N")]
    pub budget_lucas: Option<u32>,
}

impl BudgetArgs {
    fn resolve(&self) -> Result<SearchBudget> {
        let mut b = SearchBudget::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            b.denom_bound = v
                .trim()
                .parse()
                .map_err(|_| Error::parse(v.clone(), format!("{BUDGET_ENV} must be a non-negative integer")))?;
        }
        b.denom_bound = self.budget_denom.unwrap_or(b.denom_bound);
        b.coord_bound = self.budget_coord.unwrap_or(b.coord_bound);
        b.relation_bound = self.budget_relation.unwrap_or(b.relation_bound);
        b.lucas_bound = self.budget_lucas.unwrap_or(b.lucas_bound);
        b.validate()?;
        Ok(b)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScopeArg {
    #[value(name = "Q", alias = "q")]
    Q,
    #[value(name = "K", alias = "k")]
    K,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Scope {
        match s {
            ScopeArg::Q => Scope::Q,
            ScopeArg::K => Scope::K,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Lucas,
    Relation,
    Tangent,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide solvability with a theorem citation or a witness
    Classify {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum, default_value = "K")]
        scope: ScopeArg,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Factor an Eisenstein integer into distinguished irreducibles
    Factor {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        json: bool,
    },
    /// Show how a rational prime decomposes in Z[w]
    SplitPrime {
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// Condition (I), Exceptional A and Exceptional B for a prime
    Report {
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a witness with one constructor
    Solve {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Known point "x,y" for the tangent method
        #[arg(long, allow_hyphen_values = true)]
        from: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run the descent from a solution of x^3 + y^3 = M
    Descend {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// List every witness within the search budget
    Search {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, value_enum, default_value = "K")]
        scope: ScopeArg,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate a prime table and compare it with the reference values
    Tables {
        /// conditionI, excA, excB or excA-mod9-first5
        which: String,
        #[arg(long)]
        max: Option<u64>,
        /// JSON file replacing the built-in reference values
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance checks
    Verify {
        #[arg(default_value = "quick")]
        level: String,
        /// JSON file replacing the built-in reference tables
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(message: impl Into<String>) -> Self {
        Outcome { code: 1, stdout: String::new(), stderr: message.into() }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::error(e.to_string().lines().next().unwrap_or("error: invalid arguments").to_string()),
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::error(format!("error: {e}")),
    }
}

fn element(s: &str) -> Result<KElement> {
    s.parse()
}

fn integral(s: &str) -> Result<EisensteinInt> {
    element(s)?
        .to_eint()
        .ok_or_else(|| Error::parse(s, "expected an element of Z[w]"))
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        format!("{}\n", serde_json::to_string(&value).expect("JSON values serialize"))
    } else {
        format!("{text}\n")
    }
}

fn point_json(p: &Point) -> Value {
    json!([p.0.to_string(), p.1.to_string()])
}

fn point_text(p: &Point) -> String {
    format!("x = {}, y = {}", p.0, p.1)
}

fn load_fixture(path: &Option<String>) -> Result<ExpectedTables> {
    match path {
        None => Ok(ExpectedTables::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::parse(p.clone(), e.to_string()))?;
            ExpectedTables::from_json(&text)
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Classify { m, scope, budget, json } => {
            let m = element(&m)?;
            let v = classify(&m, scope.into(), &budget.resolve()?)?;
            Ok(Outcome::with_code(v.exit_code(), render(json, v.to_json(), v.to_string())))
        }
        Command::Factor { x, json } => {
            let x = integral(&x)?;
            let f = factor(&x)?;
            Ok(Outcome::ok(render(json, f.to_json(), format!("{x} = {f}"))))
        }
        Command::SplitPrime { p, json } => {
            let p = parse_rational_int(&p)?;
            let (value, text) = match classify_rational_prime(p.clone())? {
                PrimeClass::Ramified => (
                    json!({"p": p.to_string(), "class": "ramified", "factors": ["1+2*w", "1+2*w"]}),
                    format!("{p} ramifies: {p} = -(1+2*w)^2"),
                ),
                PrimeClass::Inert => (
                    json!({"p": p.to_string(), "class": "inert", "factors": [p.to_string()]}),
                    format!("{p} is inert"),
                ),
                PrimeClass::Split { pi, pi_bar } => (
                    json!({"p": p.to_string(), "class": "split", "factors": [pi.to_string(), pi_bar.to_string()]}),
                    format!("{p} splits: {p} = ({pi}) * ({pi_bar})"),
                ),
            };
            Ok(Outcome::ok(render(json, value, text)))
        }
        Command::Report { p, json } => {
            let p = parse_rational_int(&p)?;
            let r = prime_report(p)?;
            let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            let mut text = format!(
                "p={} mod9={} conditionI={} excA={} excB={}",
                r.p,
                r.residue9,
                show(r.condition_i),
                show(r.exceptional_a),
                show(r.exceptional_b)
            );
            if let Some(pi) = &r.pi {
                text.push_str(&format!(" pi={pi}"));
            }
            if let Some((x, y)) = &r.exceptional_a_witness {
                text.push_str(&format!(" 4p={x}^2+243*{y}^2"));
            }
            Ok(Outcome::ok(render(json, r.to_json(), text)))
        }
        Command::Solve { m, method, from, budget, json } => solve(&m, method, from, &budget.resolve()?, json),
        Command::Descend { x, y, m, max_steps, json } => {
            let (x, y, m) = (element(&x)?, element(&y)?, integral(&m)?);
            let trace = descent_trace(&x, &y, &m, max_steps)?;
            let end = match &trace.end {
                TraceEnd::UnitsCase => "units case reached".to_string(),
                TraceEnd::StructureAbsent(why) => format!("stopped: {why}"),
            };
            let text = if json {
                let mut lines = trace.to_json_lines();
                lines.push(json!({"end": end}).to_string());
                lines.join("\n") + "\n"
            } else {
                let mut lines: Vec<String> = trace.triples.iter().enumerate().map(|(k, t)| format!("step {k}: {t}")).collect();
                lines.push(end);
                lines.join("\n") + "\n"
            };
            Ok(Outcome::ok(text))
        }
        Command::Search { m, scope, budget, json } => {
            let m = element(&m)?;
            let hits = search_all(&m, scope.into(), &budget.resolve()?)?;
            let value = Value::Array(hits.iter().map(point_json).collect());
            let text = if hits.is_empty() {
                "no witnesses within the budget".to_string()
            } else {
                hits.iter().map(point_text).collect::<Vec<_>>().join("\n")
            };
            Ok(Outcome::with_code(if hits.is_empty() { 2 } else { 0 }, render(json, value, text)))
        }
        Command::Tables { which, max, fixture, json } => {
            let kind: TableKind = which.parse()?;
            let max = max.unwrap_or(kind.default_max());
            let expected = load_fixture(&fixture)?;
            let table = generate(kind, max);
            let problems = diff(&table, max, &expected);
            let stdout = render(json, table.to_json(), table.to_string().trim_end().to_string());
            if problems.is_empty() {
                Ok(Outcome::ok(stdout))
            } else {
                Ok(Outcome { code: 1, stdout, stderr: problems.join("\n") })
            }
        }
        Command::Verify { level, fixture, json } => {
            let level: Level = level.parse()?;
            let report = run_all(level, &load_fixture(&fixture)?);
            let code = if report.passed() { 0 } else { 1 };
            Ok(Outcome::with_code(code, render(json, report.to_json(), report.to_string())))
        }
    }
}

/// All witnesses for `M` within the budget; fractional targets are cleared of
/// denominators first and the witnesses scaled back.
fn search_all(m: &KElement, scope: Scope, budget: &SearchBudget) -> Result<Vec<Point>> {
    if m.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let den = KElement::from_int(m.den().clone());
    let target = m.num().scale(&m.den().pow(2));
    let hits = match scope {
        Scope::Q => {
            if !m.is_rational() {
                return Err(Error::NonRationalTarget(m.to_string()));
            }
            search_rational(target.a(), budget.denom_bound)
        }
        Scope::K => search_eisenstein(&target, budget.coord_bound, budget.denom_bound),
    };
    hits.into_iter()
        .map(|(x, y)| Ok((x.checked_div(&den)?, y.checked_div(&den)?)))
        .collect()
}

fn parse_point(s: &str) -> Result<Point> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| Error::parse(s, "expected a point x,y"))?;
    Ok((element(x)?, element(y)?))
}

fn solve(m: &str, method: Option<Method>, from: Option<String>, budget: &SearchBudget, json: bool) -> Result<Outcome> {
    let target = element(m)?;
    if target.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let method = method.unwrap_or(if from.is_some() {
        Method::Tangent
    } else if target.is_rational() {
        Method::Lucas
    } else {
        Method::Relation
    });
    let found: Option<(Point, String)> = match method {
        Method::Lucas => {
            let n: BigInt = target
                .to_eint()
                .filter(|x| x.is_rational())
                .map(|x| x.a().clone())
                .ok_or_else(|| Error::parse(m, "the Lucas method needs a rational integer"))?;
            match lucas_triple_search(&n, budget.lucas_bound) {
                Some((a, b)) => {
                    let note = format!("A={a}, B={b}, C={}", -(&a + &b));
                    Some((lucas_witness(a, b, &n)?, note))
                }
                None => None,
            }
        }
        Method::Relation => {
            let me = integral(m)?;
            match relation_search(&me, budget.relation_bound) {
                Some((r, s, t)) => {
                    let note = format!("r={r}, s={s}, t={t}");
                    Some((solution_from_relation(&r, &s, &t, &me)?, note))
                }
                None => None,
            }
        }
        Method::Tangent => {
            let from = from.ok_or_else(|| Error::parse("--from", "the tangent method needs a starting point"))?;
            let p = parse_point(&from)?;
            Some((tangent_step(&target, &p)?, format!("tangent at ({}, {})", p.0, p.1)))
        }
    };
    let name = match method {
        Method::Lucas => "lucas",
        Method::Relation => "relation",
        Method::Tangent => "tangent",
    };
    Ok(match found {
        Some((w, note)) => {
            let value = json!({"input": target.to_string(), "method": name, "witness": point_json(&w), "construction": note});
            Outcome::ok(render(json, value, format!("{} [{name}] {note}", point_text(&w))))
        }
        None => {
            let value = json!({"input": target.to_string(), "method": name, "status": Status::Unknown.name()});
            Outcome::with_code(2, render(json, value, format!("no {name} construction within the budget")))
        }
    })
}
