//! JSON formats for signatures, case bases, single cases, classifier models
//! and explanation reports.
//!
//! Factor names are resolved against the signature, so Greek aliases such as
//! `π1` are accepted wherever `pi1` is. Output always uses the names as
//! declared.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bcl::model::ClassifierModel;
use crate::casebase::{CaseBase, Precedent};
use crate::error::{Error, Result};
use crate::explain::ExplanationSet;
use crate::signature::{AtomSet, Outcome, Signature};

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureFile {
    #[serde(default)]
    pub plaintiff: Vec<String>,
    #[serde(default)]
    pub defendant: Vec<String>,
}

impl SignatureFile {
    pub fn of(sig: &Signature) -> Self {
        SignatureFile {
            plaintiff: sig.plaintiff_names().to_vec(),
            defendant: sig.defendant_names().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Signature> {
        Signature::new(&self.plaintiff, &self.defendant)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plaintiff,
    Defendant,
}

impl From<Side> for Outcome {
    fn from(side: Side) -> Outcome {
        match side {
            Side::Plaintiff => Outcome::Plaintiff,
            Side::Defendant => Outcome::Defendant,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    #[serde(default = "default_case_id")]
    pub id: String,
    pub facts: Vec<String>,
    pub reason: Vec<String>,
    pub outcome: Side,
}

fn default_case_id() -> String {
    "new".to_string()
}

impl CaseFile {
    pub fn of(sig: &Signature, c: &Precedent) -> Result<Self> {
        let outcome = match c.outcome {
            Outcome::Plaintiff => Side::Plaintiff,
            Outcome::Defendant => Side::Defendant,
            Outcome::Undecided => return Err(Error::UndefinedOpposite),
        };
        Ok(CaseFile {
            id: c.id.clone(),
            facts: names(sig, c.facts),
            reason: names(sig, c.reason),
            outcome,
        })
    }

    pub fn build(&self, sig: &Signature) -> Result<Precedent> {
        Ok(Precedent::new(
            self.id.clone(),
            sig.set_of(&self.facts)?,
            sig.set_of(&self.reason)?,
            self.outcome.into(),
        ))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseBaseFile {
    pub signature: SignatureFile,
    #[serde(default)]
    pub cases: Vec<CaseFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub signature: SignatureFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub states: Option<Vec<Vec<String>>>,
    pub decisions: Vec<String>,
}

fn names(sig: &Signature, set: AtomSet) -> Vec<String> {
    sig.names_of(set).into_iter().map(String::from).collect()
}

fn decision(symbol: &str) -> Result<Outcome> {
    let mut chars = symbol.chars();
    match (chars.next().and_then(Outcome::from_symbol), chars.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(Error::InvalidModel(format!(
            "decision `{symbol}` is not 1, 0 or ?"
        ))),
    }
}

pub fn parse_signature(text: &str) -> Result<Signature> {
    serde_json::from_str::<SignatureFile>(text)?.build()
}

/// Reads a case base and rejects it unless every case is well formed.
pub fn parse_case_base(text: &str) -> Result<CaseBase> {
    let file: CaseBaseFile = serde_json::from_str(text)?;
    let sig = file.signature.build()?;
    let cases = file
        .cases
        .iter()
        .map(|c| c.build(&sig))
        .collect::<Result<Vec<_>>>()?;
    let mut cb = CaseBase::new(sig);
    for c in cases {
        cb.insert(c);
    }
    let report = cb.validate();
    if !report.is_ok() {
        return Err(Error::Validation(
            report.violations.iter().map(ToString::to_string).collect(),
        ));
    }
    Ok(cb)
}

/// Reads a single case over `sig` and checks it is well formed.
pub fn parse_case(sig: &Signature, text: &str) -> Result<Precedent> {
    let c = serde_json::from_str::<CaseFile>(text)?.build(sig)?;
    let violations = c.violations(sig);
    if !violations.is_empty() {
        return Err(Error::Validation(
            violations
                .iter()
                .map(|v| format!("case `{}`: {v}", c.id))
                .collect(),
        ));
    }
    Ok(c)
}

pub fn case_base_to_json(cb: &CaseBase) -> Result<String> {
    let file = CaseBaseFile {
        signature: SignatureFile::of(cb.signature()),
        cases: cb
            .cases()
            .iter()
            .map(|c| CaseFile::of(cb.signature(), c))
            .collect::<Result<_>>()?,
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn parse_model(text: &str) -> Result<ClassifierModel> {
    let file: ModelFile = serde_json::from_str(text)?;
    let sig = file.signature.build()?;
    let decisions = file
        .decisions
        .iter()
        .map(|d| decision(d))
        .collect::<Result<Vec<_>>>()?;
    let states: Vec<AtomSet> = match &file.states {
        Some(states) => states
            .iter()
            .map(|s| sig.set_of(s))
            .collect::<Result<_>>()?,
        None => {
            sig.ensure_at_most(
                "model without explicit states",
                crate::bcl::model::FULL_MODEL_BOUND,
            )?;
            sig.valuations().collect()
        }
    };
    if states.len() != decisions.len() {
        return Err(Error::InvalidModel(format!(
            "{} states but {} decisions",
            states.len(),
            decisions.len()
        )));
    }
    ClassifierModel::new(sig, states.into_iter().zip(decisions))
}

/// Writes every state explicitly, in canonical order.
pub fn model_to_json(model: &ClassifierModel) -> Result<String> {
    let sig = model.signature();
    let file = ModelFile {
        signature: SignatureFile::of(sig),
        states: Some(model.states().iter().map(|&s| names(sig, s)).collect()),
        decisions: model
            .decisions()
            .iter()
            .map(|x| x.symbol().to_string())
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn explanation_to_json(sig: &Signature, set: &ExplanationSet) -> Value {
    let terms: Vec<Value> = set
        .terms
        .iter()
        .map(
            |t| json!({"positive": names(sig, t.positive()), "negative": names(sig, t.negative())}),
        )
        .collect();
    json!({
        "kind": set.kind.name(),
        "target": set.target.symbol(),
        "state": set.state.map(|s| names(sig, s)),
        "terms": terms,
    })
}
