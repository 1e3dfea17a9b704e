//! Answer Set Semantics: reduct, closedness and answer sets.
//!
//! Answer sets are the knowledge-minimal interpretations closed under the
//! reduct of the regularized program with respect to themselves. Search is
//! exhaustive: every candidate over `at(P)` is checked for closedness, and
//! closed candidates are checked for minimality against their own downset.

use crate::error::{Error, Result};
use crate::models::{all_true, Alphabet, Limits, Valuation};
use crate::semantics::{satisfies, Interpretation, Logic, Theory};
use crate::syntax::{Formula, Program, Rule};
use crate::truth::TruthValue;

/// The reduct `φᴵ` of a regular implication-free formula: weakly negated
/// subformulas are replaced by `⊥` when `I` satisfies their reduct and by
/// `⊤` otherwise.
pub fn reduct(f: &Formula, i: &Interpretation) -> Result<Formula> {
    require_regular(f)?;
    Ok(reduct_by(f, &|a| i.value(a)))
}

fn require_regular(f: &Formula) -> Result<()> {
    if f.has_implication() {
        return Err(Error::ImplicationInRule(f.to_string()));
    }
    if !f.is_regular() {
        return Err(Error::NotRegular(f.to_string()));
    }
    Ok(())
}

fn reduct_by<A: Clone>(f: &Formula<A>, lookup: &impl Fn(&A) -> TruthValue) -> Formula<A> {
    match f {
        Formula::WeakNeg(x) => {
            if reduct_by(x, lookup).truth(lookup).is_true() {
                Formula::bottom()
            } else {
                Formula::top()
            }
        }
        Formula::And(l, r) => Formula::and(reduct_by(l, lookup), reduct_by(r, lookup)),
        Formula::Or(l, r) => Formula::or(reduct_by(l, lookup), reduct_by(r, lookup)),
        // literals, constants
        _ => f.clone(),
    }
}

/// `Pᴵ`, rule by rule.
pub fn reduct_program(p: &Program, i: &Interpretation) -> Result<Program> {
    let rules = p
        .rules()
        .iter()
        .map(|r| Ok(Rule::from_parts(reduct(r.head(), i)?, reduct(r.body(), i)?)))
        .collect::<Result<_>>()?;
    Ok(p.with_rules(rules))
}

fn require_regular_program(p: &Program) -> Result<()> {
    p.rules().iter().try_for_each(|r| {
        require_regular(r.head())?;
        require_regular(r.body())
    })
}

/// Whether every rule whose body `I` satisfies also has its head satisfied.
pub fn is_closed(i: &Interpretation, p: &Program) -> Result<bool> {
    require_regular_program(p)?;
    Ok(p.rules().iter().all(|r| {
        let sat = |f: &Formula| f.truth(&|a| i.value(a)).is_true();
        !sat(r.body()) || sat(r.head())
    }))
}

/// A regularized program compiled against its alphabet.
struct Compiled {
    alpha: Alphabet,
    rules: Vec<(Formula<usize>, Formula<usize>)>,
}

impl Compiled {
    fn new(p: &Program, extra: Option<&Interpretation>, limits: Limits) -> Result<Self> {
        let reg = p.regularized();
        let mut atoms = reg.atoms();
        if let Some(i) = extra {
            atoms.extend(i.true_atoms().iter().cloned());
            atoms.extend(i.false_atoms().iter().cloned());
        }
        let alpha = Alphabet::new(&atoms, limits)?;
        let rules = reg
            .rules()
            .iter()
            .map(|r| (alpha.compile(r.head()), alpha.compile(r.body())))
            .collect();
        Ok(Compiled { alpha, rules })
    }

    /// The reduct with respect to `v`, as implications read classically.
    fn reduct_at(&self, v: Valuation) -> Vec<Formula<usize>> {
        let lookup = |i: &usize| v.value(*i);
        self.rules
            .iter()
            .map(|(h, b)| {
                Formula::implies(
                    crate::syntax::ImplKind::Classical,
                    reduct_by(h, &lookup),
                    reduct_by(b, &lookup),
                )
            })
            .collect()
    }

    fn is_answer_set(&self, v: Valuation) -> bool {
        let reduct = self.reduct_at(v);
        all_true(&reduct, v) && !v.strictly_below().any(|w| all_true(&reduct, w))
    }
}

/// Whether `i` is a knowledge-minimal interpretation closed under
/// `reg(P)ᴵ`.
pub fn is_answer_set(i: &Interpretation, p: &Program) -> bool {
    // The alphabet is at most at(P) ∪ atoms(I); the downset is bounded by
    // the literal count of `i`, which the u64 masks already cap.
    let limits = Limits::new(usize::MAX);
    match Compiled::new(p, Some(i), limits) {
        Ok(c) => c.is_answer_set(c.alpha.valuation(i)),
        Err(_) => false,
    }
}

/// All answer sets of `p` over `at(P)`, sorted.
pub fn answer_sets(p: &Program, limits: Limits) -> Result<Vec<Interpretation>> {
    let c = Compiled::new(p, None, limits)?;
    let mut out: Vec<_> = Valuation::all(c.alpha.len())
        .filter(|v| c.is_answer_set(*v))
        .map(|v| c.alpha.interpretation(v))
        .collect();
    out.sort();
    Ok(out)
}

/// N-models of `P` that are not answer sets, for probing the converse of
/// "answer sets are N-models".
pub fn models_that_are_not_answer_sets(p: &Program, limits: Limits) -> Result<Vec<Interpretation>> {
    let n = crate::transform::as_n_theory(p);
    let answer = answer_sets(p, limits)?;
    Ok(crate::models::enumerate_models(&n, &p.atoms(), limits)?
        .into_iter()
        .filter(|m| !answer.contains(m))
        .collect())
}

/// `N(reg(P)ᴵ)`.
pub fn n_theory_of_reduct(p: &Program, i: &Interpretation) -> Result<Theory> {
    let reduct = reduct_program(&p.regularized(), i)?;
    Theory::new(
        reduct
            .rules()
            .iter()
            .map(|r| r.to_formula(crate::syntax::ImplKind::Classical))
            .collect(),
        Logic::Classical,
    )
}

/// Whether `i` satisfies `N(P)`.
pub fn is_n_model(i: &Interpretation, p: &Program) -> bool {
    satisfies(i, &crate::transform::as_n_theory(p))
}
