//! Runnable property checks over generated or user-supplied instances.
//!
//! Each instance draws its own generator stream from `(seed, index)`, so
//! instances are independent and the report does not depend on how many
//! threads ran them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::asp::{answer_sets, is_closed, models_that_are_not_answer_sets};
use crate::error::{Error, Result};
use crate::generate::{
    atom_names, generate_program, Connectives, FormulaGen, GenSpec, ProgramClass,
};
use crate::models::{enumerate_models, least_model, Alphabet, LeastModel, Limits, Valuation};
use crate::semantics::{knowledge_leq, satisfies, Interpretation, Logic, Theory};
use crate::syntax::{Literal, Program, Rule};
use crate::text::theory_text;
use crate::transform::{
    as_l_theory, as_n_theory, definition_completion, vakarelov_translate, weak_completion,
};
use crate::wcs::{phi_iterates, wc_models};

const LUKASIEWICZ_DEPTH: usize = 5;
const MAX_REPORTED_NOTES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "&'static str")]
pub enum Property {
    Prop1ClosedNModel,
    Prop2AsImpliesNModel,
    Prop3BasicDichotomy,
    Prop4WcAnswerSets,
    Lemma1Completion,
    Lemma2ModelEquality,
    Theorem1Vakarelov,
    Theorem2Correspondence,
    PhiEqualsWcModel,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::Prop1ClosedNModel,
        Property::Prop2AsImpliesNModel,
        Property::Prop3BasicDichotomy,
        Property::Prop4WcAnswerSets,
        Property::Lemma1Completion,
        Property::Lemma2ModelEquality,
        Property::Theorem1Vakarelov,
        Property::Theorem2Correspondence,
        Property::PhiEqualsWcModel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Prop1ClosedNModel => "prop1-closed-nmodel",
            Property::Prop2AsImpliesNModel => "prop2-as-implies-nmodel",
            Property::Prop3BasicDichotomy => "prop3-basic-dichotomy",
            Property::Prop4WcAnswerSets => "prop4-wc-answersets",
            Property::Lemma1Completion => "lemma1-completion",
            Property::Lemma2ModelEquality => "lemma2-model-equality",
            Property::Theorem1Vakarelov => "theorem1-vakarelov",
            Property::Theorem2Correspondence => "theorem2-correspondence",
            Property::PhiEqualsWcModel => "phi-equals-wcmodel",
        }
    }

    /// Program classes the property is stated for.
    pub fn classes(self) -> &'static [ProgramClass] {
        use ProgramClass::*;
        match self {
            Property::Prop1ClosedNModel | Property::Prop2AsImpliesNModel => &ProgramClass::ALL,
            Property::Prop3BasicDichotomy | Property::Lemma2ModelEquality => &[Basic, WcNormal],
            Property::Prop4WcAnswerSets | Property::Lemma1Completion => {
                &[NormalNested, Basic, WcNormal]
            }
            Property::Theorem1Vakarelov => &ProgramClass::ALL,
            Property::Theorem2Correspondence | Property::PhiEqualsWcModel => &[WcNormal],
        }
    }

    /// Default random sizes: `(class, max atoms, max rules)`.
    fn defaults(self) -> (Option<ProgramClass>, usize, usize) {
        use ProgramClass::*;
        match self {
            Property::Prop1ClosedNModel | Property::Prop2AsImpliesNModel => (None, 4, 5),
            Property::Prop3BasicDichotomy => (Some(Basic), 4, 5),
            Property::Prop4WcAnswerSets => (Some(NormalNested), 4, 5),
            Property::Lemma1Completion => (Some(NormalNested), 4, 4),
            Property::Lemma2ModelEquality => (Some(Basic), 5, 5),
            // atoms, formulas per theory
            Property::Theorem1Vakarelov => (None, 4, 3),
            Property::Theorem2Correspondence | Property::PhiEqualsWcModel => {
                (Some(WcNormal), 6, 10)
            }
        }
    }
}

impl From<Property> for &'static str {
    fn from(p: Property) -> Self {
        p.name()
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: u64,
    /// Program text, or the theory for `theorem1-vakarelov`.
    pub program: String,
    pub witness: Option<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: Property,
    pub instances: u64,
    pub seed: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub passed: bool,
}

impl CheckReport {
    fn new(property: Property, instances: u64, seed: u64, outcomes: Vec<Outcome>) -> Self {
        let mut failures = Vec::new();
        let mut notes = Vec::new();
        let mut noted = 0;
        for (index, o) in outcomes.into_iter().enumerate() {
            if let Some(v) = o.verdict {
                failures.push(Failure {
                    instance: index as u64,
                    program: o.subject,
                    witness: v.witness,
                    expected: v.expected,
                    actual: v.actual,
                });
            }
            if !o.notes.is_empty() {
                noted += 1;
                let prefix = if instances == 1 {
                    String::new()
                } else {
                    format!("instance {index}: ")
                };
                notes.extend(o.notes.into_iter().map(|n| format!("{prefix}{n}")));
            }
        }
        if notes.len() > MAX_REPORTED_NOTES {
            let total = notes.len();
            notes.truncate(MAX_REPORTED_NOTES);
            notes.push(format!("{} more notes omitted", total - MAX_REPORTED_NOTES));
        }
        if property == Property::Prop2AsImpliesNModel && instances > 1 {
            notes.push(format!(
                "{noted} of {instances} instances have N-models that are not answer sets"
            ));
        }
        let passed = failures.is_empty();
        CheckReport {
            property,
            instances,
            seed,
            failures,
            notes,
            passed,
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} instances, seed {}, {} failures: {}",
            self.property,
            self.instances,
            self.seed,
            self.failures.len(),
            if self.passed { "PASS" } else { "FAIL" }
        )?;
        for x in &self.failures {
            writeln!(f, "  instance {}:", x.instance)?;
            for line in x.program.lines() {
                writeln!(f, "    {line}")?;
            }
            if let Some(w) = &x.witness {
                writeln!(f, "    witness: {w}")?;
            }
            writeln!(f, "    expected: {}", x.expected)?;
            writeln!(f, "    actual: {}", x.actual)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

struct Verdict {
    witness: Option<String>,
    expected: String,
    actual: String,
}

impl Verdict {
    fn new(
        witness: Option<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        Verdict {
            witness,
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

struct Outcome {
    subject: String,
    verdict: Option<Verdict>,
    notes: Vec<String>,
}

fn show(models: &[Interpretation]) -> String {
    let items: Vec<String> = models.iter().map(|m| m.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn show_least(l: &LeastModel) -> String {
    match l {
        LeastModel::Least(m) => format!("least model {m}"),
        LeastModel::NoModel => "no model".to_owned(),
        LeastModel::NoLeast(ms) => format!("no least model, minimal models {}", show(ms)),
    }
}

/// First element of the symmetric difference of two sorted model lists.
fn first_difference(a: &[Interpretation], b: &[Interpretation]) -> Option<String> {
    a.iter()
        .find(|m| !b.contains(m))
        .or_else(|| b.iter().find(|m| !a.contains(m)))
        .map(|m| m.to_string())
}

fn compare_sets(
    a: Vec<Interpretation>,
    b: Vec<Interpretation>,
    what_a: &str,
    what_b: &str,
) -> Option<Verdict> {
    (a != b).then(|| {
        Verdict::new(
            first_difference(&a, &b),
            format!("{what_a} = {what_b}"),
            format!("{what_a} {}, {what_b} {}", show(&a), show(&b)),
        )
    })
}

fn check_closed_iff_model(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    // Closedness is defined for regular programs; reg(P) = P when P is
    // regular.
    let reg = p.regularized();
    let n = as_n_theory(p);
    let alpha = Alphabet::new(&p.atoms(), limits)?;
    for v in Valuation::all(alpha.len()) {
        let i = alpha.interpretation(v);
        let closed = is_closed(&i, &reg)?;
        let model = satisfies(&i, &n);
        if closed != model {
            return Ok(Some(Verdict::new(
                Some(i.to_string()),
                "closed under reg(P) iff model of N(P)",
                format!("closed {closed}, N-model {model}"),
            )));
        }
    }
    Ok(None)
}

fn check_answer_sets_are_models(
    p: &Program,
    limits: Limits,
    notes: &mut Vec<String>,
) -> Result<Option<Verdict>> {
    let n = as_n_theory(p);
    if let Some(bad) = answer_sets(p, limits)?
        .into_iter()
        .find(|i| !satisfies(i, &n))
    {
        return Ok(Some(Verdict::new(
            Some(bad.to_string()),
            "every answer set is a model of N(P)",
            "answer set is not a model of N(P)",
        )));
    }
    for m in models_that_are_not_answer_sets(p, limits)? {
        notes.push(format!("N-model {m} is not an answer set"));
    }
    Ok(None)
}

fn check_basic_dichotomy(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    let answers = answer_sets(p, limits)?;
    let least = least_model(&as_n_theory(p), &p.atoms(), limits)?;
    let ok = match (answers.as_slice(), &least) {
        ([a], LeastModel::Least(m)) => a == m,
        ([], LeastModel::NoModel) => true,
        _ => false,
    };
    Ok((!ok).then(|| {
        Verdict::new(
            answers.first().map(|m| m.to_string()),
            "a unique answer set equal to the least N-model, or no answer set and no N-model",
            format!("answer sets {}, {}", show(&answers), show_least(&least)),
        )
    }))
}

fn check_wc_keeps_answer_sets(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    let wc = weak_completion(p)?;
    Ok(compare_sets(
        answer_sets(p, limits)?,
        answer_sets(&wc, limits)?,
        "AS(P)",
        "AS(wc(P))",
    ))
}

/// Extends `p` by `L ← φ_L` for a few literals `L` that head no rule of `p`,
/// and compares against the version with `L ↔ φ_L`.
fn check_completion(
    p: &Program,
    rng: &mut ChaCha8Rng,
    limits: Limits,
) -> Result<(String, Option<Verdict>)> {
    let atoms: Vec<_> = p.atoms().into_iter().collect();
    let heads = p.head_literals();
    let candidates: Vec<Literal> = atoms
        .iter()
        .flat_map(|a| [Literal::positive(a.clone()), Literal::negative(a.clone())])
        .filter(|l| !heads.contains(l))
        .collect();
    let size = rng.gen_range(1..=2).min(candidates.len());
    let gen = FormulaGen { atoms: &atoms };
    let mut with_rules = p.clone();
    let mut with_equivs = p.clone();
    for l in candidates.choose_multiple(rng, size) {
        let phi = gen.formula(rng, 2, Connectives::ALL);
        let rule = Rule::new(l.to_formula(), phi.clone())?;
        with_rules.push(rule.clone());
        with_equivs.push(rule);
        with_equivs.push(Rule::new(phi, l.to_formula())?);
    }
    let verdict = compare_sets(
        answer_sets(&with_rules, limits)?,
        answer_sets(&with_equivs, limits)?,
        "AS(P ∪ {L ← φ})",
        "AS(P ∪ {L ↔ φ})",
    );
    Ok((with_equivs.to_string(), verdict))
}

fn check_model_equality(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    // dc(P) heads like ∼∼A are not literals; regularizing first keeps the
    // weak completion defined.
    let n = as_n_theory(&weak_completion(&definition_completion(p)?.regularized())?);
    let l = as_l_theory(&weak_completion(p)?)?;
    let atoms = p.atoms();
    Ok(compare_sets(
        enumerate_models(&n, &atoms, limits)?,
        enumerate_models(&l, &atoms, limits)?,
        "models of N(wc(reg(dc(P))))",
        "models of Ł(wc(P))",
    ))
}

fn check_translation(t: &Theory, limits: Limits) -> Result<Option<Verdict>> {
    let translated = vakarelov_translate(t)?;
    let atoms = t.atoms();
    Ok(compare_sets(
        enumerate_models(t, &atoms, limits)?,
        enumerate_models(&translated, &atoms, limits)?,
        "Ł-models",
        "N-models of the translation",
    ))
}

fn check_correspondence(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    let wc = wc_models(p, limits)?;
    let asp = answer_sets(&definition_completion(p)?, limits)?;
    let ok = wc == asp && wc.len() <= 1;
    Ok((!ok).then(|| {
        Verdict::new(
            first_difference(&wc, &asp),
            "a single wc-model equal to the single answer set of dc(P), or neither",
            format!(
                "wc-models {}, answer sets of dc(P) {}",
                show(&wc),
                show(&asp)
            ),
        )
    }))
}

fn check_phi(p: &Program, limits: Limits) -> Result<Option<Verdict>> {
    let bound = p.atoms().len() + 1;
    let chain = match phi_iterates(p) {
        Ok(c) => c,
        Err(Error::PhiDiverged(_)) => {
            return Ok(Some(Verdict::new(
                None,
                format!("Φ settles within {bound} steps"),
                "diverged",
            )))
        }
        Err(e) => return Err(e),
    };
    if chain.len() > bound {
        return Ok(Some(Verdict::new(
            None,
            format!("at most {bound} iterates"),
            format!("{} iterates", chain.len()),
        )));
    }
    if let Some(w) = chain.windows(2).find(|w| !knowledge_leq(&w[0], &w[1])) {
        return Ok(Some(Verdict::new(
            Some(w[1].to_string()),
            "≤k-increasing iterates",
            format!("{} then {}", w[0], w[1]),
        )));
    }
    let fixpoint = chain.last().unwrap().clone();
    let wc = wc_models(p, limits)?;
    Ok((wc != [fixpoint.clone()]).then(|| {
        Verdict::new(
            Some(fixpoint.to_string()),
            "least fixpoint of Φ is the unique wc-model",
            format!("wc-models {}", show(&wc)),
        )
    }))
}

/// Runs a program-based property on one program.
fn check_on(
    property: Property,
    p: &Program,
    rng: &mut ChaCha8Rng,
    limits: Limits,
) -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut subject = p.to_string();
    let verdict = match property {
        Property::Prop1ClosedNModel => check_closed_iff_model(p, limits)?,
        Property::Prop2AsImpliesNModel => check_answer_sets_are_models(p, limits, &mut notes)?,
        Property::Prop3BasicDichotomy => check_basic_dichotomy(p, limits)?,
        Property::Prop4WcAnswerSets => check_wc_keeps_answer_sets(p, limits)?,
        Property::Lemma1Completion => {
            let (s, v) = check_completion(p, rng, limits)?;
            subject = s;
            v
        }
        Property::Lemma2ModelEquality => check_model_equality(p, limits)?,
        Property::Theorem1Vakarelov => {
            let t = as_l_theory(p)?;
            subject = theory_text(&t);
            check_translation(&t, limits)?
        }
        Property::Theorem2Correspondence => check_correspondence(p, limits)?,
        Property::PhiEqualsWcModel => check_phi(p, limits)?,
    };
    Ok(Outcome {
        subject,
        verdict,
        notes,
    })
}

fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// How an instance picks its sizes.
#[derive(Clone, Copy)]
enum Sizes {
    Random {
        class: Option<ProgramClass>,
        max_atoms: usize,
        max_rules: usize,
    },
    Exact {
        class: ProgramClass,
        atoms: usize,
        rules: usize,
    },
}

fn run_instance(
    property: Property,
    sizes: Sizes,
    seed: u64,
    index: u64,
    limits: Limits,
) -> Result<Outcome> {
    let mut rng = instance_rng(seed, index);
    let (class, atoms, rules) = match sizes {
        Sizes::Random {
            class,
            max_atoms,
            max_rules,
        } => {
            let class = class.unwrap_or_else(|| *ProgramClass::ALL.choose(&mut rng).unwrap());
            (
                class,
                rng.gen_range(1..=max_atoms),
                rng.gen_range(0..=max_rules),
            )
        }
        Sizes::Exact {
            class,
            atoms,
            rules,
        } => (class, atoms, rules),
    };
    if property == Property::Theorem1Vakarelov {
        let names = atom_names(atoms);
        let gen = FormulaGen { atoms: &names };
        let count = match sizes {
            Sizes::Random { .. } => rng.gen_range(1..=rules.max(1)),
            Sizes::Exact { .. } => rules.max(1),
        };
        let formulas = (0..count)
            .map(|_| gen.lukasiewicz(&mut rng, LUKASIEWICZ_DEPTH))
            .collect();
        let t = Theory::new(formulas, Logic::Lukasiewicz)?;
        // Every interpretation over the full generated alphabet, not only
        // the atoms that happen to occur.
        let verdict = check_translation_over(&t, &names.into_iter().collect(), limits)?;
        return Ok(Outcome {
            subject: theory_text(&t),
            verdict,
            notes: Vec::new(),
        });
    }
    let spec = GenSpec {
        atoms,
        rules,
        class,
        seed: rng.gen(),
        one_sign_per_atom: property == Property::Lemma2ModelEquality,
    };
    let p = generate_program(spec)?;
    check_on(property, &p, &mut rng, limits)
}

fn check_translation_over(
    t: &Theory,
    alphabet: &BTreeSet<crate::syntax::Atom>,
    limits: Limits,
) -> Result<Option<Verdict>> {
    let translated = vakarelov_translate(t)?;
    Ok(compare_sets(
        enumerate_models(t, alphabet, limits)?,
        enumerate_models(&translated, alphabet, limits)?,
        "Ł-models",
        "N-models of the translation",
    ))
}

fn run(
    property: Property,
    sizes: Sizes,
    instances: u64,
    seed: u64,
    limits: Limits,
) -> Result<CheckReport> {
    let results: Vec<Result<Outcome>> = (0..instances)
        .into_par_iter()
        .map(|i| run_instance(property, sizes, seed, i, limits))
        .collect();
    let outcomes = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(property, instances, seed, outcomes))
}

/// Runs `property` on `instances` generated instances of varying size.
pub fn run_check(
    property: Property,
    instances: u64,
    seed: u64,
    limits: Limits,
) -> Result<CheckReport> {
    let (class, max_atoms, max_rules) = property.defaults();
    run(
        property,
        Sizes::Random {
            class,
            max_atoms,
            max_rules,
        },
        instances,
        seed,
        limits,
    )
}

/// Runs `property` on generated programs of exactly the given shape. For
/// `theorem1-vakarelov`, `rules` is the number of formulas per theory.
pub fn fuzz(
    property: Property,
    class: ProgramClass,
    atoms: usize,
    rules: usize,
    seed: u64,
    instances: u64,
    limits: Limits,
) -> Result<CheckReport> {
    if !property.classes().contains(&class) {
        let names: Vec<_> = property.classes().iter().map(|c| c.name()).collect();
        return Err(Error::UnsatisfiableGenerator(format!(
            "{property} is stated for {}, not {class}",
            names.join(", ")
        )));
    }
    limits.check(atoms)?;
    run(
        property,
        Sizes::Exact {
            class,
            atoms,
            rules,
        },
        instances,
        seed,
        limits,
    )
}

/// Runs `property` on a single given program.
pub fn check_program(property: Property, p: &Program, limits: Limits) -> Result<CheckReport> {
    let mut rng = instance_rng(0, 0);
    let outcome = check_on(property, p, &mut rng, limits)?;
    Ok(CheckReport::new(property, 1, 0, vec![outcome]))
}
