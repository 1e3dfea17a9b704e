//! Exhaustive model enumeration over a finite alphabet.
//!
//! Interpretations are swept as pairs of bitmasks over an indexed alphabet,
//! and formulas are evaluated on index-compiled copies. Results are converted
//! back to [`Interpretation`]s and returned in sorted order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::semantics::{Interpretation, Theory};
use crate::syntax::{Atom, Formula};
use crate::truth::TruthValue;

pub const DEFAULT_MAX_ATOMS: usize = 12;

/// Masks are `u64`, so no configuration can exceed this.
const MAX_REPRESENTABLE_ATOMS: usize = 63;

/// Bounds on exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_atoms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_atoms: DEFAULT_MAX_ATOMS,
        }
    }
}

impl Limits {
    pub fn new(max_atoms: usize) -> Self {
        Limits { max_atoms }
    }

    pub(crate) fn check(&self, atoms: usize) -> Result<()> {
        let cap = self.max_atoms.min(MAX_REPRESENTABLE_ATOMS);
        if atoms > cap {
            Err(Error::CapExceeded { atoms, cap })
        } else {
            Ok(())
        }
    }
}

/// An interpretation over an indexed alphabet: bit `i` of `pos` (resp.
/// `neg`) is set when atom `i` is true (resp. false).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct Valuation {
    pub pos: u64,
    pub neg: u64,
}

impl Valuation {
    pub fn value(self, i: usize) -> TruthValue {
        if self.pos >> i & 1 == 1 {
            TruthValue::True
        } else if self.neg >> i & 1 == 1 {
            TruthValue::False
        } else {
            TruthValue::Unknown
        }
    }

    pub fn leq(self, other: Valuation) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    pub fn known(self) -> u32 {
        self.pos.count_ones() + self.neg.count_ones()
    }

    /// All `3^n` valuations over the first `n` atoms.
    pub fn all(n: usize) -> impl Iterator<Item = Valuation> {
        let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        (0..=mask).flat_map(move |pos| submasks(mask & !pos).map(move |neg| Valuation { pos, neg }))
    }

    /// Every valuation strictly below `self` in the knowledge order.
    pub fn strictly_below(self) -> impl Iterator<Item = Valuation> {
        submasks(self.pos)
            .flat_map(move |pos| submasks(self.neg).map(move |neg| Valuation { pos, neg }))
            .filter(move |v| *v != self)
    }
}

/// All submasks of `mask`, from `mask` down to `0`.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// A sorted, indexed atom set.
#[derive(Clone, Debug)]
pub(crate) struct Alphabet {
    atoms: Vec<Atom>,
    index: BTreeMap<Atom, usize>,
}

impl Alphabet {
    pub fn new(atoms: &BTreeSet<Atom>, limits: Limits) -> Result<Self> {
        limits.check(atoms.len())?;
        let atoms: Vec<Atom> = atoms.iter().cloned().collect();
        let index = atoms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, a)| (a, i))
            .collect();
        Ok(Alphabet { atoms, index })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    /// Panics if `f` mentions an atom outside the alphabet.
    pub fn compile(&self, f: &Formula) -> Formula<usize> {
        f.map_atoms(&|a| self.index[a])
    }

    pub fn interpretation(&self, v: Valuation) -> Interpretation {
        let pick = |mask: u64| {
            self.atoms
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| a.clone())
                .collect()
        };
        Interpretation::from_parts_unchecked(pick(v.pos), pick(v.neg))
    }

    /// Panics if `i` mentions an atom outside the alphabet.
    pub fn valuation(&self, i: &Interpretation) -> Valuation {
        let mask = |atoms: &BTreeSet<Atom>| atoms.iter().fold(0u64, |m, a| m | 1 << self.index[a]);
        Valuation {
            pos: mask(i.true_atoms()),
            neg: mask(i.false_atoms()),
        }
    }
}

pub(crate) fn truth_at(f: &Formula<usize>, v: Valuation) -> TruthValue {
    f.truth(&|i| v.value(*i))
}

pub(crate) fn all_true(fs: &[Formula<usize>], v: Valuation) -> bool {
    fs.iter().all(|f| truth_at(f, v).is_true())
}

/// Keeps the knowledge-minimal elements of `vals`.
pub(crate) fn minimal_valuations(mut vals: Vec<Valuation>) -> Vec<Valuation> {
    vals.sort_by_key(|v| v.known());
    let mut minimal: Vec<Valuation> = Vec::new();
    for v in vals {
        // Anything strictly below `v` has fewer known atoms and was seen first.
        if !minimal.iter().any(|m| m.leq(v)) {
            minimal.push(v);
        }
    }
    minimal
}

fn theory_alphabet(t: &Theory, alphabet: &BTreeSet<Atom>, limits: Limits) -> Result<Alphabet> {
    let mut atoms = alphabet.clone();
    atoms.extend(t.atoms());
    Alphabet::new(&atoms, limits)
}

fn model_valuations(t: &Theory, alpha: &Alphabet) -> Vec<Valuation> {
    let compiled: Vec<_> = t.formulas().iter().map(|f| alpha.compile(f)).collect();
    Valuation::all(alpha.len())
        .filter(|v| all_true(&compiled, *v))
        .collect()
}

fn to_sorted(alpha: &Alphabet, vals: impl IntoIterator<Item = Valuation>) -> Vec<Interpretation> {
    let mut out: Vec<_> = vals.into_iter().map(|v| alpha.interpretation(v)).collect();
    out.sort();
    out
}

/// All models of `t` over `alphabet` (extended with the atoms of `t`).
pub fn enumerate_models(
    t: &Theory,
    alphabet: &BTreeSet<Atom>,
    limits: Limits,
) -> Result<Vec<Interpretation>> {
    let alpha = theory_alphabet(t, alphabet, limits)?;
    Ok(to_sorted(&alpha, model_valuations(t, &alpha)))
}

/// The knowledge-minimal models of `t`.
pub fn minimal_models(
    t: &Theory,
    alphabet: &BTreeSet<Atom>,
    limits: Limits,
) -> Result<Vec<Interpretation>> {
    let alpha = theory_alphabet(t, alphabet, limits)?;
    Ok(to_sorted(
        &alpha,
        minimal_valuations(model_valuations(t, &alpha)),
    ))
}

/// Outcome of a least-model query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeastModel {
    Least(Interpretation),
    NoModel,
    /// Several incomparable minimal models.
    NoLeast(Vec<Interpretation>),
}

impl LeastModel {
    pub fn model(&self) -> Option<&Interpretation> {
        match self {
            LeastModel::Least(i) => Some(i),
            _ => None,
        }
    }
}

pub fn least_model(t: &Theory, alphabet: &BTreeSet<Atom>, limits: Limits) -> Result<LeastModel> {
    let mut minimal = minimal_models(t, alphabet, limits)?;
    Ok(match minimal.len() {
        0 => LeastModel::NoModel,
        1 => LeastModel::Least(minimal.pop().unwrap()),
        _ => LeastModel::NoLeast(minimal),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{knowledge_leq, satisfies, Logic};
    use crate::syntax::ImplKind;
    use crate::text::parse_formula;

    fn atoms(names: &[&str]) -> BTreeSet<Atom> {
        names.iter().map(|n| Atom::new(n).unwrap()).collect()
    }

    fn n_theory(fs: Vec<Formula>) -> Theory {
        Theory::new(fs, Logic::Classical).unwrap()
    }

    #[test]
    fn sweep_counts() {
        assert_eq!(Valuation::all(0).count(), 1);
        assert_eq!(Valuation::all(3).count(), 27);
        let distinct: std::collections::HashSet<_> = Valuation::all(4).collect();
        assert_eq!(distinct.len(), 81);
        let v = Valuation {
            pos: 0b101,
            neg: 0b010,
        };
        assert_eq!(v.strictly_below().count(), 7);
        assert!(v.strictly_below().all(|w| w.leq(v) && w != v));
    }

    #[test]
    fn strong_negation_rule_models() {
        // {∼p ←CL q}: brute force over the 9 interpretations of {p, q}.
        let rule = Formula::implies(
            ImplKind::Classical,
            parse_formula("-p").unwrap(),
            parse_formula("q").unwrap(),
        );
        let t = n_theory(vec![rule]);
        let models = enumerate_models(&t, &atoms(&["p", "q"]), Limits::default()).unwrap();
        let all: Vec<_> = Valuation::all(2)
            .map(|v| {
                Alphabet::new(&atoms(&["p", "q"]), Limits::default())
                    .unwrap()
                    .interpretation(v)
            })
            .filter(|i| satisfies(i, &t))
            .collect();
        assert_eq!(models.len(), all.len());
        assert_eq!(models.len(), 7);
        assert!(models.contains(&Interpretation::empty()));
        assert!(models.contains(&Interpretation::of(&["p"], &["q"])));
    }

    #[test]
    fn inconsistent_theory() {
        let t = n_theory(vec![
            parse_formula("a").unwrap(),
            parse_formula("-a").unwrap(),
        ]);
        assert!(enumerate_models(&t, &BTreeSet::new(), Limits::default())
            .unwrap()
            .is_empty());
        assert_eq!(
            least_model(&t, &BTreeSet::new(), Limits::default()).unwrap(),
            LeastModel::NoModel
        );
    }

    #[test]
    fn empty_theory() {
        let t = n_theory(vec![]);
        let p = atoms(&["p"]);
        assert_eq!(
            enumerate_models(&t, &p, Limits::default()).unwrap().len(),
            3
        );
        assert_eq!(
            minimal_models(&t, &p, Limits::default()).unwrap(),
            vec![Interpretation::empty()]
        );
    }

    #[test]
    fn no_least_model() {
        let t = n_theory(vec![parse_formula("a ; b").unwrap()]);
        match least_model(&t, &BTreeSet::new(), Limits::default()).unwrap() {
            LeastModel::NoLeast(ms) => {
                assert_eq!(
                    ms,
                    vec![
                        Interpretation::of(&["a"], &[]),
                        Interpretation::of(&["b"], &[])
                    ]
                )
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn least_is_below_every_model() {
        let t = n_theory(vec![parse_formula("a, (b ; -b ; c)").unwrap()]);
        let alpha = atoms(&["a", "b", "c"]);
        let all = enumerate_models(&t, &alpha, Limits::default()).unwrap();
        if let LeastModel::Least(m) = least_model(&t, &alpha, Limits::default()).unwrap() {
            assert!(all.iter().all(|i| knowledge_leq(&m, i)));
        }
    }

    #[test]
    fn cap() {
        let t = n_theory(vec![]);
        let many: BTreeSet<Atom> = (0..13)
            .map(|i| Atom::new(&format!("a{i}")).unwrap())
            .collect();
        assert_eq!(
            enumerate_models(&t, &many, Limits::default()),
            Err(Error::CapExceeded { atoms: 13, cap: 12 })
        );
    }
}
