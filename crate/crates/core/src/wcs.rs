//! Weak Completion Semantics.
//!
//! A wc-model of a normal nested program is a knowledge-minimal model of
//! `Ł(wc(P))`. For wc-normal programs the unique wc-model is also the least
//! fixpoint of the consequence operator Φ, iterated from `⟨∅, ∅⟩`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::models::{minimal_models, Limits};
use crate::semantics::{knowledge_leq, Interpretation};
use crate::syntax::{Atom, Program};
use crate::transform::{as_l_theory, weak_completion};

/// The knowledge-minimal models of `Ł(wc(P))` over `at(P)`.
pub fn wc_models(p: &Program, limits: Limits) -> Result<Vec<Interpretation>> {
    if let Some(r) = p
        .rules()
        .iter()
        .find(|r| r.head().has_weak_neg() || r.body().has_weak_neg())
    {
        return Err(Error::WeakNegation(r.to_string()));
    }
    let theory = as_l_theory(&weak_completion(p)?)?;
    minimal_models(&theory, &p.atoms(), limits)
}

/// One application of Φ: an atom becomes true if some defining body is true,
/// and false if it has definitions and all of them are false.
pub fn phi_step(p: &Program, i: &Interpretation) -> Result<Interpretation> {
    p.require_wc_normal()?;
    Ok(phi_unchecked(p, i))
}

fn phi_unchecked(p: &Program, i: &Interpretation) -> Interpretation {
    let mut true_atoms = BTreeSet::new();
    let mut defined = BTreeSet::new();
    let mut not_false = BTreeSet::<Atom>::new();
    for r in p.rules() {
        let head = r.head_literal().expect("wc-normal").atom;
        // Bodies are basic, where both logics agree.
        let v = r.body().truth(&|a| i.value(a));
        if v.is_true() {
            true_atoms.insert(head.clone());
        }
        if v != crate::truth::TruthValue::False {
            not_false.insert(head.clone());
        }
        defined.insert(head);
    }
    let false_atoms = defined.difference(&not_false).cloned().collect();
    Interpretation::new(true_atoms, false_atoms).expect("Φ never makes an atom both true and false")
}

/// The Φ iterates `⟨∅,∅⟩ = I₀ ⊆ I₁ ⊆ … ⊆ Iₖ = Φ(Iₖ)`, ending at the
/// fixpoint. Fails if the chain is not increasing or does not settle within
/// `|at(P)| + 1` applications; either would be a bug.
pub fn phi_iterates(p: &Program) -> Result<Vec<Interpretation>> {
    p.require_wc_normal()?;
    let bound = p.atoms().len() + 1;
    let mut chain = vec![Interpretation::empty()];
    for _ in 0..bound {
        let cur = chain.last().unwrap();
        let next = phi_unchecked(p, cur);
        if next == *cur {
            return Ok(chain);
        }
        if !knowledge_leq(cur, &next) {
            return Err(Error::PhiDiverged(bound));
        }
        chain.push(next);
    }
    Err(Error::PhiDiverged(bound))
}

pub fn phi_fixpoint(p: &Program) -> Result<Interpretation> {
    Ok(phi_iterates(p)?.pop().unwrap())
}
