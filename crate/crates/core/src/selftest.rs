//! Randomized and exhaustive self-checks over the whole library, seeded for
//! reproducibility. Each suite reports how many instances it checked and a
//! description of every failure.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bcl::axioms::check_axiom_suite;
use crate::bcl::model::ClassifierModel;
use crate::bcl::parse::print_formula;
use crate::bcl::search::{enumerate_models, ModelClass, TINY_BOUND};
use crate::bridge::{theorem1_decide, tr1, tr2, tr2_cb};
use crate::casebase::{brute_force_consistent, CaseBase};
use crate::error::{Error, Result};
use crate::explain::{
    check_mhs_duality, check_prop2, check_prop3, check_prop4, check_prop5, check_prop6, PropReport,
    DUALITY_BOUND,
};
use crate::gen::{
    all_cases, random_case, random_case_base, random_consistent_case_base, random_full_model,
    random_result_case, random_signature, random_subset, rng, DEFAULT_SEED,
};
use crate::signature::Signature;

/// Largest signature for the proposition and consistency suites.
pub const CASE_BASE_ATOMS: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Largest signature for suites that enumerate model spaces.
    pub tiny_bound: usize,
    /// Random instances per sampled suite.
    pub samples: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: DEFAULT_SEED,
            tiny_bound: TINY_BOUND,
            samples: 200,
        }
    }
}

impl SelftestConfig {
    fn validated(self) -> Result<Self> {
        if self.tiny_bound > TINY_BOUND {
            return Err(Error::capacity(
                "self-test model enumeration",
                TINY_BOUND,
                self.tiny_bound,
            ));
        }
        Ok(self)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        rng(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, report: PropReport) {
        self.checked += report.checked;
        self.failures.extend(report.counterexamples);
    }
}

fn describe(cb: &CaseBase) -> String {
    let sig = cb.signature();
    let cases: Vec<String> = cb
        .cases()
        .iter()
        .map(|c| {
            format!(
                "({}, {}, {})",
                sig.format_set(c.facts),
                sig.format_set(c.reason),
                c.outcome
            )
        })
        .collect();
    format!("[{}]", cases.join(", "))
}

/// Every signature of exactly `atoms` factors, over each split.
fn signatures(atoms: usize) -> impl Iterator<Item = Signature> {
    (0..=atoms).map(move |p| Signature::numbered(p, atoms - p).expect("small signature"))
}

/// Satisfiability of the reason-model translation over the given models,
/// which must be every model of the precedent-respecting class.
fn prec_satisfiable(cb: &CaseBase, prec_models: &[ClassifierModel]) -> Result<bool> {
    let f = tr2_cb(cb);
    for m in prec_models {
        if m.first_satisfying(&f)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Pairwise consistency, the canonical model and brute-force satisfiability
/// of the translation all agree: exhaustively on bases of at most two cases
/// over two factors, and on random bases at the tiny bound.
pub fn theorem1_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let config = config.validated()?;
    let mut result = SuiteResult::new("theorem1");
    let mut models: HashMap<(usize, usize), Vec<ClassifierModel>> = HashMap::new();
    let mut check = |cb: &CaseBase, result: &mut SuiteResult| -> Result<()> {
        let prec = models
            .entry((cb.signature().plaintiff_len(), cb.signature().len()))
            .or_insert_with(|| {
                enumerate_models(cb.signature(), ModelClass::CmPrec)
                    .expect("within bound")
                    .collect()
            });
        let pairwise = cb.is_consistent();
        let canonical = theorem1_decide(cb)?;
        let brute = prec_satisfiable(cb, prec)?;
        result.checked += 1;
        if pairwise != canonical || pairwise != brute {
            result.failures.push(format!(
                "{}: pairwise {pairwise}, canonical {canonical}, brute force {brute}",
                describe(cb)
            ));
        }
        Ok(())
    };
    let small = config.tiny_bound.min(2);
    for sig in signatures(small) {
        let cases = all_cases(&sig);
        check(&CaseBase::new(sig.clone()), &mut result)?;
        for (i, a) in cases.iter().enumerate() {
            for b in &cases[i..] {
                let cb = CaseBase::with_cases(sig.clone(), [a.clone(), b.clone()]);
                check(&cb, &mut result)?;
            }
        }
    }
    let mut rng = config.rng(1);
    for _ in 0..config.samples {
        let sig = random_signature(&mut rng, config.tiny_bound);
        let cb = random_case_base(&mut rng, &sig, 4);
        check(&cb, &mut result)?;
    }
    Ok(result)
}

/// Pairwise consistency against enumeration of every pair of reasons.
pub fn consistency_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let mut result = SuiteResult::new("consistency");
    let mut rng = config.rng(2);
    for _ in 0..config.samples {
        let atoms = rng.gen_range(1..=CASE_BASE_ATOMS);
        let sig = random_signature(&mut rng, atoms);
        let cb = random_case_base(&mut rng, &sig, 5);
        result.checked += 1;
        let brute = brute_force_consistent(&cb)?;
        if cb.is_consistent() != brute {
            result
                .failures
                .push(format!("{}: brute force says {brute}", describe(&cb)));
        }
    }
    Ok(result)
}

/// Axiom schemata valid over every model at up to two factors, with spot
/// checks at the tiny bound.
pub fn axiom_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let config = config.validated()?;
    let mut result = SuiteResult::new("axioms");
    let mut rng = config.rng(3);
    let per_schema = (config.samples / 4).max(1);
    let mut run = |sig: &Signature, instances: usize, result: &mut SuiteResult| -> Result<()> {
        let report = check_axiom_suite(&mut rng, sig, instances)?;
        for s in &report.schemata {
            result.checked += s.instances;
            for (f, counter) in &s.failures {
                result.failures.push(format!(
                    "{} instance {} fails at {}",
                    s.schema,
                    print_formula(f, sig),
                    sig.format_set(counter.state)
                ));
            }
        }
        result.checked += report.necessitation_checked;
        for (f, _) in &report.necessitation_failures {
            result.failures.push(format!(
                "necessitation of {} is not valid",
                print_formula(f, sig)
            ));
        }
        Ok(())
    };
    for atoms in 0..=config.tiny_bound.min(2) {
        for sig in signatures(atoms) {
            run(&sig, per_schema, &mut result)?;
        }
    }
    if config.tiny_bound == TINY_BOUND {
        run(&Signature::numbered(2, 1)?, 2, &mut result)?;
    }
    Ok(result)
}

/// Propositions linking precedents to explanations in the canonical model.
pub fn proposition_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let mut result = SuiteResult::new("propositions");
    let mut rng = config.rng(4);
    for _ in 0..config.samples {
        let atoms = rng.gen_range(1..=CASE_BASE_ATOMS);
        let sig = random_signature(&mut rng, atoms);
        let cb = random_consistent_case_base(&mut rng, &sig, 6);
        for report in [
            check_prop2(&cb)?,
            check_prop3(&cb)?,
            check_prop4(&cb)?,
            check_prop5(&cb)?,
        ] {
            result.absorb(report);
        }
    }
    Ok(result)
}

/// Validity of the precedent-to-explanation formula by model enumeration.
pub fn prop6_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let config = config.validated()?;
    let mut result = SuiteResult::new("prop6");
    let mut rng = config.rng(5);
    for atoms in 0..=config.tiny_bound.min(2) {
        for sig in signatures(atoms) {
            result.absorb(check_prop6(&sig, &all_cases(&sig))?);
        }
    }
    if config.tiny_bound == TINY_BOUND {
        let sig = random_signature(&mut rng, TINY_BOUND);
        let cases: Vec<_> = (0..2)
            .map(|i| random_case(&mut rng, &sig, format!("c{i}")))
            .collect();
        result.absorb(check_prop6(&sig, &cases)?);
    }
    Ok(result)
}

/// Both translations coincide on result-model cases.
pub fn fact1_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let mut result = SuiteResult::new("fact1");
    let mut rng = config.rng(6);
    for i in 0..config.samples.max(1) * 5 {
        let atoms = rng.gen_range(0..=CASE_BASE_ATOMS);
        let sig = random_signature(&mut rng, atoms);
        let c = random_result_case(&mut rng, &sig, format!("c{i}"));
        result.checked += 1;
        if tr1(&sig, &c)? != tr2(&sig, &c) {
            result.failures.push(format!(
                "result case ({}, {}, {}) translates differently",
                sig.format_set(c.facts),
                sig.format_set(c.reason),
                c.outcome
            ));
        }
    }
    Ok(result)
}

/// Abductive and contrastive explanations are minimal hitting sets of each
/// other on random models over every valuation.
pub fn duality_suite(config: SelftestConfig) -> Result<SuiteResult> {
    let mut result = SuiteResult::new("duality");
    let mut rng = config.rng(7);
    for _ in 0..config.samples {
        let atoms = rng.gen_range(1..=DUALITY_BOUND);
        let sig = random_signature(&mut rng, atoms);
        let model = random_full_model(&mut rng, &sig)?;
        let s = random_subset(&mut rng, sig.all());
        let report = check_mhs_duality(&model, s)?;
        result.checked += 1;
        if !report.holds() {
            result.failures.push(format!(
                "state {} of a random model over {} factors: {report:?}",
                sig.format_set(s),
                atoms
            ));
        }
    }
    Ok(result)
}

pub fn run_all(config: SelftestConfig) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        theorem1_suite(config)?,
        consistency_suite(config)?,
        axiom_suite(config)?,
        proposition_suite(config)?,
        prop6_suite(config)?,
        fact1_suite(config)?,
        duality_suite(config)?,
    ])
}
