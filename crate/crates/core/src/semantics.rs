//! Interpretations, the two three-valued logics, and model checking.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::syntax::{Atom, Formula, ImplKind, Literal};
use crate::truth::TruthValue;

/// The logic a theory is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Logic {
    /// Three-valued Łukasiewicz logic: `∼ ∧ ∨ ←Ł` and constants.
    Lukasiewicz,
    /// Classical logic with strong negation: `∼ ¬ ∧ ∨ ←CL` and constants.
    Classical,
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Logic::Lukasiewicz => "L",
            Logic::Classical => "N",
        })
    }
}

impl Logic {
    pub fn implication(self) -> ImplKind {
        match self {
            Logic::Lukasiewicz => ImplKind::Lukasiewicz,
            Logic::Classical => ImplKind::Classical,
        }
    }

    pub fn check_admissible(self, f: &Formula) -> Result<()> {
        let reason = if f.has_implication_of(ImplKind::Program) {
            Some("logic-programming implication has no truth table")
        } else {
            match self {
                Logic::Lukasiewicz if f.has_weak_neg() => Some("weak negation is not a connective"),
                Logic::Lukasiewicz if f.has_implication_of(ImplKind::Classical) => {
                    Some("classical implication is not a connective")
                }
                Logic::Classical if f.has_implication_of(ImplKind::Lukasiewicz) => {
                    Some("Lukasiewicz implication is not a connective")
                }
                _ => None,
            }
        };
        match reason {
            Some(reason) => Err(Error::Inadmissible {
                formula: f.to_string(),
                logic: self,
                reason,
            }),
            None => Ok(()),
        }
    }
}

/// A three-valued interpretation `⟨I⊤, I⊥⟩`. Atoms in neither set are
/// unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation {
    true_atoms: BTreeSet<Atom>,
    false_atoms: BTreeSet<Atom>,
}

impl Interpretation {
    pub fn new(true_atoms: BTreeSet<Atom>, false_atoms: BTreeSet<Atom>) -> Result<Self> {
        if let Some(a) = true_atoms.intersection(&false_atoms).next() {
            return Err(Error::InconsistentInterpretation(a.to_string()));
        }
        Ok(Interpretation {
            true_atoms,
            false_atoms,
        })
    }

    pub fn empty() -> Self {
        Interpretation::default()
    }

    /// From the literal-set view `I⊤ ∪ ∼I⊥`.
    pub fn from_literals<'a>(lits: impl IntoIterator<Item = &'a Literal>) -> Result<Self> {
        let mut t = BTreeSet::new();
        let mut f = BTreeSet::new();
        for l in lits {
            if l.strongly_negated {
                f.insert(l.atom.clone());
            } else {
                t.insert(l.atom.clone());
            }
        }
        Interpretation::new(t, f)
    }

    /// Convenience constructor from atom names; panics on invalid names or
    /// overlap. Intended for tests and examples.
    pub fn of(true_atoms: &[&str], false_atoms: &[&str]) -> Self {
        let set = |xs: &[&str]| xs.iter().map(|x| Atom::new(x).unwrap()).collect();
        Interpretation::new(set(true_atoms), set(false_atoms)).unwrap()
    }

    pub(crate) fn from_parts_unchecked(t: BTreeSet<Atom>, f: BTreeSet<Atom>) -> Self {
        debug_assert!(t.is_disjoint(&f));
        Interpretation {
            true_atoms: t,
            false_atoms: f,
        }
    }

    pub fn true_atoms(&self) -> &BTreeSet<Atom> {
        &self.true_atoms
    }

    pub fn false_atoms(&self) -> &BTreeSet<Atom> {
        &self.false_atoms
    }

    pub fn value(&self, atom: &Atom) -> TruthValue {
        if self.true_atoms.contains(atom) {
            TruthValue::True
        } else if self.false_atoms.contains(atom) {
            TruthValue::False
        } else {
            TruthValue::Unknown
        }
    }

    /// The literal-set view, sorted by atom.
    pub fn literals(&self) -> Vec<Literal> {
        let mut out: Vec<Literal> = self
            .true_atoms
            .iter()
            .cloned()
            .map(Literal::positive)
            .chain(self.false_atoms.iter().cloned().map(Literal::negative))
            .collect();
        out.sort_by(|a, b| a.atom.cmp(&b.atom));
        out
    }

    pub fn known_count(&self) -> usize {
        self.true_atoms.len() + self.false_atoms.len()
    }

    /// Atoms of `alphabet` that are unknown.
    pub fn unknown_atoms<'a>(&self, alphabet: &'a BTreeSet<Atom>) -> Vec<&'a Atom> {
        alphabet
            .iter()
            .filter(|a| !self.true_atoms.contains(*a) && !self.false_atoms.contains(*a))
            .collect()
    }

    pub fn eval(&self, f: &Formula, logic: Logic) -> Result<TruthValue> {
        eval(f, self, logic)
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.literals().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

/// `I ⊆k J`: `I⊤ ⊆ J⊤` and `I⊥ ⊆ J⊥`.
pub fn knowledge_leq(i: &Interpretation, j: &Interpretation) -> bool {
    i.true_atoms.is_subset(&j.true_atoms) && i.false_atoms.is_subset(&j.false_atoms)
}

/// `I ⊆t J`: `I⊤ ⊆ J⊤` and `J⊥ ⊆ I⊥`.
pub fn truth_leq(i: &Interpretation, j: &Interpretation) -> bool {
    i.true_atoms.is_subset(&j.true_atoms) && j.false_atoms.is_subset(&i.false_atoms)
}

/// Evaluates `f` under `i` with the truth tables of `logic`.
pub fn eval(f: &Formula, i: &Interpretation, logic: Logic) -> Result<TruthValue> {
    logic.check_admissible(f)?;
    Ok(f.truth(&|a| i.value(a)))
}

/// A set of formulas read in one logic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    formulas: Vec<Formula>,
    logic: Logic,
}

impl Theory {
    pub fn new(formulas: Vec<Formula>, logic: Logic) -> Result<Self> {
        for f in &formulas {
            logic.check_admissible(f)?;
        }
        Ok(Theory { formulas, logic })
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn logic(&self) -> Logic {
        self.logic
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in &self.formulas {
            f.collect_atoms(&mut out);
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }
}

/// `I ⊨ Γ`: every formula of the theory evaluates to true.
pub fn satisfies(i: &Interpretation, t: &Theory) -> bool {
    t.formulas
        .iter()
        .all(|f| f.truth(&|a| i.value(a)).is_true())
}
