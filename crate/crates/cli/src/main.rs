//! `precedent`: consistency checking, forced outcomes, updates, translations,
//! explanations and model checking for factor-based case bases.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative answer (reported
//! with a witness), 2 for usage, input or capacity errors.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use precedent_logic::bcl::model::FULL_MODEL_BOUND;
use precedent_logic::bcl::parse::{parse_formula, print_formula};
use precedent_logic::bcl::search::{is_satisfiable_tiny, ModelClass, TINY_BOUND};
use precedent_logic::bridge::{
    canonical_model, corollary2_decide, theorem1_decide, tr1, tr2, Canonical,
};
use precedent_logic::explain::{explanations_for, explanations_in_all_models, ExplanationKind};
use precedent_logic::gen::DEFAULT_SEED;
use precedent_logic::io;
use precedent_logic::selftest::{run_all, SelftestConfig};
use precedent_logic::{
    AtomSet, CaseBase, Error, Forced, Outcome, Result, Signature, UpdateVerdict,
};

use output::Report;

#[derive(Parser, Debug)]
#[command(
    name = "precedent",
    version,
    about = "Reason with precedents as binary classifiers"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Seed for randomized suites.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Largest signature for model enumeration (at most 3).
    #[arg(long, global = true)]
    bound: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TranslationMode {
    Result,
    Reason,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Axp,
    Cxp,
    Pimp,
    Waxp,
    Wcxp,
}

impl From<Kind> for ExplanationKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Axp => ExplanationKind::AXp,
            Kind::Cxp => ExplanationKind::CXp,
            Kind::Pimp => ExplanationKind::PImp,
            Kind::Waxp => ExplanationKind::WAXp,
            Kind::Wcxp => ExplanationKind::WCXp,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a case base for consistency.
    Check { casebase: PathBuf },
    /// Outcome forced on a fact situation.
    Decide {
        casebase: PathBuf,
        /// Comma-separated factors.
        #[arg(long, default_value = "")]
        facts: String,
    },
    /// Whether a new case may be added.
    Update {
        casebase: PathBuf,
        /// The case as JSON: {"id", "facts", "reason", "outcome"}.
        #[arg(long = "case")]
        case: String,
    },
    /// Translate a case base into the classifier logic.
    Translate {
        casebase: PathBuf,
        #[arg(long, value_enum, default_value_t = TranslationMode::Reason)]
        model: TranslationMode,
        /// Write the canonical model to this file.
        #[arg(long)]
        emit_model: Option<PathBuf>,
    },
    /// Explain a decision of the canonical model.
    Explain {
        casebase: PathBuf,
        #[arg(long, default_value = "")]
        facts: String,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Target outcome: 1, 0 or ?. Defaults to the decision at the facts.
        #[arg(long)]
        outcome: Option<String>,
        /// Keep only explanations valid in every precedent-respecting model.
        #[arg(long)]
        all_models: bool,
    },
    /// Evaluate a formula at a state of a model.
    Eval {
        model: PathBuf,
        #[arg(long, default_value = "")]
        state: String,
        #[arg(long)]
        formula: String,
    },
    /// Decide satisfiability by enumerating every model.
    Sat {
        /// The signature as JSON: {"plaintiff": [...], "defendant": [...]}.
        #[arg(long)]
        signature: String,
        #[arg(long)]
        formula: String,
        /// Only models over every valuation that respect precedent.
        #[arg(long)]
        prec: bool,
    },
    /// Run the built-in randomized and exhaustive checks.
    Selftest {
        /// Random instances per sampled suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            report.print(cli.format == Format::Json);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn tiny_bound(cli: &Cli) -> Result<usize> {
    match cli.bound {
        Some(b) if b > TINY_BOUND => Err(Error::Capacity {
            what: "--bound",
            bound: TINY_BOUND,
            actual: b,
        }),
        Some(b) => Ok(b),
        None => Ok(TINY_BOUND),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_case_base(path: &Path) -> Result<CaseBase> {
    let cb = io::parse_case_base(&read(path)?)?;
    for w in cb.validate().warnings {
        eprintln!("warning: {w}");
    }
    Ok(cb)
}

fn parse_list(sig: &Signature, list: &str) -> Result<AtomSet> {
    let names: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|n| !n.is_empty())
        .collect();
    sig.set_of(&names)
}

fn parse_outcome(text: &str) -> Result<Outcome> {
    let mut chars = text.trim().chars();
    match (chars.next().and_then(Outcome::from_symbol), chars.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(Error::Usage(format!("outcome `{text}` is not 1, 0 or ?"))),
    }
}

fn disagreement(what: &str) -> Error {
    Error::Usage(format!(
        "internal disagreement between decision procedures on {what}"
    ))
}

fn run(cli: &Cli) -> Result<Report> {
    let bound = tiny_bound(cli)?;
    match &cli.command {
        Command::Check { casebase } => check(&load_case_base(casebase)?),
        Command::Decide { casebase, facts } => {
            let cb = load_case_base(casebase)?;
            let s = parse_list(cb.signature(), facts)?;
            Ok(decide(&cb, s))
        }
        Command::Update { casebase, case } => {
            let cb = load_case_base(casebase)?;
            update(&cb, case)
        }
        Command::Translate {
            casebase,
            model,
            emit_model,
        } => translate(&load_case_base(casebase)?, *model, emit_model.as_deref()),
        Command::Explain {
            casebase,
            facts,
            kind,
            outcome,
            all_models,
        } => {
            let cb = load_case_base(casebase)?;
            let s = parse_list(cb.signature(), facts)?;
            let outcome = outcome.as_deref().map(parse_outcome).transpose()?;
            explain(&cb, s, (*kind).into(), outcome, all_models.then_some(bound))
        }
        Command::Eval {
            model,
            state,
            formula,
        } => {
            let m = io::parse_model(&read(model)?)?;
            let s = parse_list(m.signature(), state)?;
            let f = parse_formula(formula, m.signature())?;
            let value = m.satisfies(s, &f)?;
            Ok(Report::new(
                if value { 0 } else { 1 },
                json!({ "value": value }),
                value.to_string(),
            ))
        }
        Command::Sat {
            signature,
            formula,
            prec,
        } => {
            let sig = io::parse_signature(signature)?;
            sig_within(&sig, bound)?;
            let f = parse_formula(formula, &sig)?;
            let class = if *prec {
                ModelClass::CmPrec
            } else {
                ModelClass::Cm
            };
            sat(&sig, &f, class)
        }
        Command::Selftest { samples } => selftest(SelftestConfig {
            seed: cli.seed,
            tiny_bound: bound,
            samples: *samples,
        }),
    }
}

fn sig_within(sig: &Signature, bound: usize) -> Result<()> {
    if sig.len() > bound {
        return Err(Error::Capacity {
            what: "model enumeration",
            bound,
            actual: sig.len(),
        });
    }
    Ok(())
}

fn check(cb: &CaseBase) -> Result<Report> {
    let consistent = cb.is_consistent();
    if cb.signature().len() <= FULL_MODEL_BOUND && theorem1_decide(cb)? != consistent {
        return Err(disagreement("consistency"));
    }
    if consistent {
        return Ok(Report::new(
            0,
            json!({ "consistent": true, "cases": cb.len() }),
            format!("consistent ({} cases)", cb.len()),
        ));
    }
    let witness = cb
        .conflict_witness()
        .expect("inconsistent base has a witness");
    let state = cb
        .conflict_state()
        .expect("inconsistent base has a conflict state");
    let mut report = output::conflict(cb.signature(), &witness, state);
    report.json["consistent"] = json!(false);
    report.text = format!("inconsistent\n{}", report.text);
    Ok(report)
}

fn decide(cb: &CaseBase, s: AtomSet) -> Report {
    let sig = cb.signature();
    let ids = |x| cb.forcing(s, x).map(|c| c.id.clone()).collect::<Vec<_>>();
    let (for_1, for_0) = (ids(Outcome::Plaintiff), ids(Outcome::Defendant));
    let forced = cb.forced_outcome(s);
    let mut lines = vec![forced.to_string()];
    let mut table = output::Table::default();
    if !for_1.is_empty() {
        table.row("forcing 1:", for_1.join(", "));
    }
    if !for_0.is_empty() {
        table.row("forcing 0:", for_0.join(", "));
    }
    lines.extend(table.lines());
    Report::new(
        if forced == Forced::Conflict { 1 } else { 0 },
        json!({
            "state": sig.names_of(s),
            "outcome": forced.to_string(),
            "forcing": { "1": for_1, "0": for_0 },
        }),
        lines.join("\n"),
    )
}

fn update(cb: &CaseBase, case: &str) -> Result<Report> {
    let sig = cb.signature();
    let new_case = io::parse_case(sig, case)?;
    let verdict = cb.check_update(&new_case)?;
    if sig.len() <= FULL_MODEL_BOUND && corollary2_decide(cb, &new_case)? != verdict.is_accept() {
        return Err(disagreement("update admissibility"));
    }
    match verdict {
        UpdateVerdict::Accept => Ok(Report::new(0, json!({ "accept": true }), "accept".into())),
        UpdateVerdict::Reject { witness, state } => {
            let mut report = output::conflict(sig, &witness, state);
            report.json["accept"] = json!(false);
            report.text = format!("reject\n{}", report.text);
            Ok(report)
        }
    }
}

fn translate(cb: &CaseBase, mode: TranslationMode, emit: Option<&Path>) -> Result<Report> {
    let sig = cb.signature();
    let conjuncts = cb
        .cases()
        .iter()
        .map(|c| match mode {
            TranslationMode::Result => tr1(sig, c),
            TranslationMode::Reason => Ok(tr2(sig, c)),
        })
        .map(|f| f.map(|f| print_formula(&f, sig)))
        .collect::<Result<Vec<_>>>()?;
    let mode_name = match mode {
        TranslationMode::Result => "result",
        TranslationMode::Reason => "reason",
    };
    let text = if conjuncts.is_empty() {
        "true".to_string()
    } else {
        conjuncts.join("\n")
    };
    let mut report = Report::new(
        0,
        json!({ "mode": mode_name, "conjuncts": conjuncts }),
        text,
    );
    if let Some(path) = emit {
        match canonical_model(cb)? {
            Canonical::Model(m) => {
                output::write_atomically(path, &io::model_to_json(&m)?)?;
                report.json["model"] = json!(path.display().to_string());
            }
            Canonical::Conflict(c) => return Ok(output::canonical_conflict(sig, &c)),
        }
    }
    Ok(report)
}

fn explain(
    cb: &CaseBase,
    s: AtomSet,
    kind: ExplanationKind,
    outcome: Option<Outcome>,
    all_models: Option<usize>,
) -> Result<Report> {
    let sig = cb.signature();
    let model = match canonical_model(cb)? {
        Canonical::Model(m) => m,
        Canonical::Conflict(c) => return Ok(output::canonical_conflict(sig, &c)),
    };
    let x = match (outcome, kind) {
        (Some(x), _) => x,
        (None, ExplanationKind::PImp) => {
            return Err(Error::Usage("--kind pimp needs --outcome".into()))
        }
        (None, _) => model.decision(s).expect("canonical model is full"),
    };
    let set = match all_models {
        Some(bound) => {
            sig_within(sig, bound)?;
            explanations_in_all_models(cb, kind, s, x)?
        }
        None => explanations_for(&model, kind, s, x)?,
    };
    Ok(output::explanation(sig, &set))
}

fn sat(
    sig: &Signature,
    f: &precedent_logic::bcl::formula::Formula,
    class: ModelClass,
) -> Result<Report> {
    match is_satisfiable_tiny(f, sig, class)? {
        Some(pointed) => {
            let model: serde_json::Value =
                serde_json::from_str(&io::model_to_json(&pointed.model)?)?;
            let text = format!(
                "satisfiable\nstate: {}\nmodel:\n{}",
                sig.format_set(pointed.state),
                serde_json::to_string_pretty(&model)?
            );
            Ok(Report::new(
                0,
                json!({
                    "satisfiable": true,
                    "state": sig.names_of(pointed.state),
                    "model": model,
                }),
                text,
            ))
        }
        None => Ok(Report::new(
            1,
            json!({ "satisfiable": false }),
            "unsatisfiable".into(),
        )),
    }
}

fn selftest(config: SelftestConfig) -> Result<Report> {
    let suites = run_all(config)?;
    let passed = suites.iter().all(|s| s.passed());
    let mut table = output::Table::default();
    for s in &suites {
        let verdict = if s.passed() { "pass" } else { "FAIL" };
        table.row(s.name, format!("{verdict}  {} checked", s.checked));
        for failure in s.failures.iter().take(5) {
            table.row("", format!("  {failure}"));
        }
    }
    let json = json!({
        "seed": config.seed,
        "passed": passed,
        "suites": suites.iter().map(|s| json!({
            "name": s.name,
            "checked": s.checked,
            "failures": s.failures,
        })).collect::<Vec<_>>(),
    });
    Ok(Report::new(
        if passed { 0 } else { 1 },
        json,
        table.lines().join("\n"),
    ))
}
