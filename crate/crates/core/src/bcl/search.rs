//! Exact satisfiability and validity by enumerating every model of a tiny
//! signature.

use crate::bcl::formula::Formula;
use crate::bcl::model::ClassifierModel;
use crate::bcl::precedent::check_2mon;
use crate::error::Result;
use crate::signature::{AtomSet, Outcome, Signature};

/// Largest signature whose model space is enumerated.
pub const TINY_BOUND: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelClass {
    /// All classifier models.
    Cm,
    /// Models over every valuation whose decisions respect precedent.
    CmPrec,
}

/// A model together with the state at which a formula was evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedModel {
    pub model: ClassifierModel,
    pub state: AtomSet,
}

/// All decision functions on `states`, in base-3 counting order.
fn decision_functions(states: Vec<AtomSet>) -> impl Iterator<Item = Vec<(AtomSet, Outcome)>> {
    let n = states.len();
    let total = 3usize.pow(n as u32);
    (0..total).map(move |mut code| {
        states
            .iter()
            .map(|&s| {
                let x = Outcome::ALL[code % 3];
                code /= 3;
                (s, x)
            })
            .collect()
    })
}

/// Every model of `class` over `sig`, in a fixed order: state sets by
/// ascending bit pattern, then decision functions in counting order.
pub fn enumerate_models(
    sig: &Signature,
    class: ModelClass,
) -> Result<impl Iterator<Item = ClassifierModel> + '_> {
    sig.ensure_at_most("model enumeration", TINY_BOUND)?;
    let valuations: Vec<AtomSet> = sig.valuations().collect();
    let state_sets: Box<dyn Iterator<Item = Vec<AtomSet>>> = match class {
        ModelClass::CmPrec => Box::new(std::iter::once(valuations)),
        ModelClass::Cm => {
            let n = valuations.len();
            Box::new((1u64..(1 << n)).map(move |pick| {
                valuations
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| pick & (1 << i) != 0)
                    .map(|(_, &s)| s)
                    .collect()
            }))
        }
    };
    Ok(state_sets
        .flat_map(decision_functions)
        .map(move |entries| {
            ClassifierModel::new(sig.clone(), entries).expect("enumerated states are valid")
        })
        .filter(move |m| class == ModelClass::Cm || check_2mon(m)))
}

/// The first pointed model of `class` satisfying `f`, if any.
pub fn is_satisfiable_tiny(
    f: &Formula,
    sig: &Signature,
    class: ModelClass,
) -> Result<Option<PointedModel>> {
    for model in enumerate_models(sig, class)? {
        if let Some(state) = model.first_satisfying(f)? {
            return Ok(Some(PointedModel { model, state }));
        }
    }
    Ok(None)
}

/// `None` when `f` is valid over `class`, otherwise a countermodel.
pub fn is_valid_tiny(
    f: &Formula,
    sig: &Signature,
    class: ModelClass,
) -> Result<Option<PointedModel>> {
    is_satisfiable_tiny(&Formula::not(f.clone()), sig, class)
}
