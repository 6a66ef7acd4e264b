//! The classifier logic: formulas, concrete syntax, classifier models and
//! their satisfaction relation, plus exhaustive search at tiny scale.

pub mod axioms;
pub mod formula;
pub mod model;
pub mod parse;
pub mod precedent;
pub mod search;
pub mod term;

pub use formula::Formula;
pub use model::ClassifierModel;
pub use parse::{parse_formula, print_formula, ParseError};
pub use precedent::{build_2mon, build_compl, check_2mon, check_compl, in_cm_prec};
pub use search::{is_satisfiable_tiny, is_valid_tiny, ModelClass, PointedModel};
pub use term::Term;
