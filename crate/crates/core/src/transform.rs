//! Program-to-program and program-to-theory transformations.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::semantics::{Logic, Theory};
use crate::syntax::{Clause, Formula, ImplKind, Literal, Program, Rule};

fn as_theory(p: &Program, logic: Logic) -> Result<Theory> {
    let kind = logic.implication();
    let formulas = p
        .clauses()
        .into_iter()
        .map(|c| match c {
            Clause::Rule(r) => r.to_formula(kind),
            Clause::Equiv(r) => Formula::iff(kind, r.head().clone(), r.body().clone()),
        })
        .collect();
    Theory::new(formulas, logic)
}

/// `N(P)`: every `←` read as classical implication.
pub fn as_n_theory(p: &Program) -> Theory {
    // Rules are implication-free, so the classical reading is always admissible.
    as_theory(p, Logic::Classical).expect("rules are implication-free")
}

/// `Ł(P)`: every `←` read as Łukasiewicz implication. Fails on weak negation.
pub fn as_l_theory(p: &Program) -> Result<Theory> {
    if let Some(r) = p
        .rules()
        .iter()
        .find(|r| r.head().has_weak_neg() || r.body().has_weak_neg())
    {
        return Err(Error::WeakNegation(r.to_string()));
    }
    as_theory(p, Logic::Lukasiewicz)
}

/// `def(P, L)`: the rules whose head is `l`.
pub fn defined(p: &Program, l: &Literal) -> Result<Vec<Rule>> {
    p.require_normal_nested()?;
    Ok(p.rules()
        .iter()
        .filter(|r| r.head_literal().as_ref() == Some(l))
        .cloned()
        .collect())
}

/// `undef(P)`: literals over `at(P)` with no defining rule.
pub fn undef(p: &Program) -> Result<BTreeSet<Literal>> {
    p.require_normal_nested()?;
    let heads = p.head_literals();
    Ok(p.atoms()
        .into_iter()
        .flat_map(|a| [Literal::positive(a.clone()), Literal::negative(a)])
        .filter(|l| !heads.contains(l))
        .collect())
}

/// Defined literals in order of first definition, each with its distinct
/// bodies in source order.
fn definitions(p: &Program) -> Result<Vec<(Literal, Vec<&Formula>)>> {
    p.require_normal_nested()?;
    let mut defs: Vec<(Literal, Vec<&Formula>)> = Vec::new();
    for r in p.rules() {
        let head = r.head_literal().expect("normal nested");
        let slot = match defs.iter().position(|(l, _)| *l == head) {
            Some(i) => &mut defs[i].1,
            None => {
                defs.push((head, Vec::new()));
                &mut defs.last_mut().unwrap().1
            }
        };
        if !slot.contains(&r.body()) {
            slot.push(r.body());
        }
    }
    Ok(defs)
}

/// `P∨`: one rule per defined literal whose body disjoins its definitions.
pub fn pdisj(p: &Program) -> Result<Program> {
    let rules = definitions(p)?
        .into_iter()
        .map(|(l, bodies)| {
            Rule::from_parts(
                l.to_formula(),
                Formula::disjunction(bodies.into_iter().cloned()),
            )
        })
        .collect();
    Ok(p.with_rules(rules))
}

/// `wc(P)`: each rule `L ← φ` of `P∨` strengthened to the pair `L ← φ`,
/// `φ ← L`.
pub fn weak_completion(p: &Program) -> Result<Program> {
    let rules = pdisj(p)?
        .rules()
        .iter()
        .flat_map(|r| {
            [
                r.clone(),
                Rule::from_parts(r.body().clone(), r.head().clone()),
            ]
        })
        .collect();
    Ok(p.with_rules(rules))
}

/// `dc(P) = P ∪ {∼L ← ∼φ | L ← φ ∈ P∨}`. Double strong negations in the new
/// heads are kept; [`crate::syntax::regularize_program`] removes them.
pub fn definition_completion(p: &Program) -> Result<Program> {
    let mut rules = p.rules().to_vec();
    for r in pdisj(p)?.rules() {
        rules.push(Rule::from_parts(
            Formula::strong_neg(r.head().clone()),
            Formula::strong_neg(r.body().clone()),
        ));
    }
    Ok(p.with_rules(rules))
}

/// Replaces every `φ ←Ł ψ`, innermost first, by
/// `(φ ←CL ψ) ∧ (∼ψ ←CL ∼φ)`.
pub fn vakarelov_translate(t: &Theory) -> Result<Theory> {
    if t.logic() != Logic::Lukasiewicz {
        return Err(Error::Inadmissible {
            formula: t
                .formulas()
                .first()
                .map(|f| f.to_string())
                .unwrap_or_default(),
            logic: t.logic(),
            reason: "the translation takes a Lukasiewicz theory",
        });
    }
    Theory::new(
        t.formulas().iter().map(translate).collect(),
        Logic::Classical,
    )
}

fn translate(f: &Formula) -> Formula {
    match f {
        Formula::Const(_) | Formula::Atom(_) => f.clone(),
        Formula::StrongNeg(x) => Formula::strong_neg(translate(x)),
        Formula::WeakNeg(x) => Formula::weak_neg(translate(x)),
        Formula::And(l, r) => Formula::and(translate(l), translate(r)),
        Formula::Or(l, r) => Formula::or(translate(l), translate(r)),
        Formula::Impl(ImplKind::Lukasiewicz, h, b) => {
            let (h, b) = (translate(h), translate(b));
            Formula::and(
                Formula::implies(ImplKind::Classical, h.clone(), b.clone()),
                Formula::implies(
                    ImplKind::Classical,
                    Formula::strong_neg(b),
                    Formula::strong_neg(h),
                ),
            )
        }
        Formula::Impl(k, h, b) => Formula::implies(*k, translate(h), translate(b)),
    }
}
