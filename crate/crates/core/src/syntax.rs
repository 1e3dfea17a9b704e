//! Atoms, literals, formulas, rules and programs over the two-negation
//! syntax, together with the structural queries and classifications used by
//! both semantics.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::truth::TruthValue;

/// A propositional atom. Names start with a lowercase letter followed by
/// letters, digits or underscores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self> {
        if is_atom_name(name) {
            Ok(Atom(name.into()))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

/// Keywords of the text format that cannot be used as atom names.
pub const RESERVED: [&str; 4] = ["not", "true", "false", "unknown"];

pub fn is_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&name)
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Atom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// An atom or its strong negation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Literal {
    pub atom: Atom,
    pub strongly_negated: bool,
}

impl Literal {
    pub fn positive(atom: Atom) -> Self {
        Literal {
            atom,
            strongly_negated: false,
        }
    }

    pub fn negative(atom: Atom) -> Self {
        Literal {
            atom,
            strongly_negated: true,
        }
    }

    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            strongly_negated: !self.strongly_negated,
        }
    }

    pub fn to_formula(&self) -> Formula {
        let atom = Formula::Atom(self.atom.clone());
        if self.strongly_negated {
            Formula::strong_neg(atom)
        } else {
            atom
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strongly_negated {
            write!(f, "-{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

/// Which implication an `Impl` node denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ImplKind {
    /// Material implication of classical logic with strong negation.
    Classical,
    /// Łukasiewicz implication.
    Lukasiewicz,
    /// The logic-programming arrow; it has no truth table of its own and is
    /// retagged by a semantics before evaluation.
    Program,
}

/// A formula tree. The atom type is generic so that the evaluator can run on
/// index-compiled copies; everything user-facing uses `Formula<Atom>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula<A = Atom> {
    Const(TruthValue),
    Atom(A),
    StrongNeg(Box<Formula<A>>),
    WeakNeg(Box<Formula<A>>),
    And(Box<Formula<A>>, Box<Formula<A>>),
    Or(Box<Formula<A>>, Box<Formula<A>>),
    /// `head ← body`.
    Impl(ImplKind, Box<Formula<A>>, Box<Formula<A>>),
}

impl<A> Formula<A> {
    pub fn top() -> Self {
        Formula::Const(TruthValue::True)
    }

    pub fn bottom() -> Self {
        Formula::Const(TruthValue::False)
    }

    pub fn strong_neg(f: Self) -> Self {
        Formula::StrongNeg(Box::new(f))
    }

    pub fn weak_neg(f: Self) -> Self {
        Formula::WeakNeg(Box::new(f))
    }

    pub fn and(l: Self, r: Self) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Self, r: Self) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(kind: ImplKind, head: Self, body: Self) -> Self {
        Formula::Impl(kind, Box::new(head), Box::new(body))
    }

    /// `(l ← r) ∧ (r ← l)`.
    pub fn iff(kind: ImplKind, l: Self, r: Self) -> Self
    where
        A: Clone,
    {
        Formula::and(
            Formula::implies(kind, l.clone(), r.clone()),
            Formula::implies(kind, r, l),
        )
    }

    /// Left-nested conjunction; `⊤` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; `⊥` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or_else(Formula::bottom)
    }

    pub fn map_atoms<B>(&self, f: &impl Fn(&A) -> B) -> Formula<B> {
        match self {
            Formula::Const(v) => Formula::Const(*v),
            Formula::Atom(a) => Formula::Atom(f(a)),
            Formula::StrongNeg(x) => Formula::strong_neg(x.map_atoms(f)),
            Formula::WeakNeg(x) => Formula::weak_neg(x.map_atoms(f)),
            Formula::And(l, r) => Formula::and(l.map_atoms(f), r.map_atoms(f)),
            Formula::Or(l, r) => Formula::or(l.map_atoms(f), r.map_atoms(f)),
            Formula::Impl(k, h, b) => Formula::implies(*k, h.map_atoms(f), b.map_atoms(f)),
        }
    }

    /// True if any node satisfies `pred`.
    pub fn any_node(&self, pred: &impl Fn(&Formula<A>) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Formula::Const(_) | Formula::Atom(_) => false,
            Formula::StrongNeg(x) | Formula::WeakNeg(x) => x.any_node(pred),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(_, l, r) => {
                l.any_node(pred) || r.any_node(pred)
            }
        }
    }

    pub fn has_implication(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::Impl(..)))
    }

    pub fn has_implication_of(&self, kind: ImplKind) -> bool {
        self.any_node(&|f| matches!(f, Formula::Impl(k, ..) if *k == kind))
    }

    pub fn has_weak_neg(&self) -> bool {
        self.any_node(&|f| matches!(f, Formula::WeakNeg(_)))
    }

    pub fn is_implication_free(&self) -> bool {
        !self.has_implication()
    }

    /// Implication-free and without weak negation.
    pub fn is_basic(&self) -> bool {
        !self.any_node(&|f| matches!(f, Formula::Impl(..) | Formula::WeakNeg(_)))
    }

    /// Strong negation occurs only immediately in front of atoms.
    pub fn is_regular(&self) -> bool {
        !self.any_node(&|f| matches!(f, Formula::StrongNeg(x) if !matches!(**x, Formula::Atom(_))))
    }

    /// Evaluates the formula bottom-up with the connective tables. The caller
    /// guarantees that no `ImplKind::Program` node is present.
    pub(crate) fn truth(&self, lookup: &impl Fn(&A) -> TruthValue) -> TruthValue {
        match self {
            Formula::Const(v) => *v,
            Formula::Atom(a) => lookup(a),
            Formula::StrongNeg(x) => x.truth(lookup).strong_neg(),
            Formula::WeakNeg(x) => x.truth(lookup).weak_neg(),
            Formula::And(l, r) => match l.truth(lookup) {
                TruthValue::False => TruthValue::False,
                v => v.and(r.truth(lookup)),
            },
            Formula::Or(l, r) => match l.truth(lookup) {
                TruthValue::True => TruthValue::True,
                v => v.or(r.truth(lookup)),
            },
            Formula::Impl(ImplKind::Classical, h, b) => match b.truth(lookup) {
                TruthValue::True => h.truth(lookup),
                _ => TruthValue::True,
            },
            Formula::Impl(ImplKind::Lukasiewicz, h, b) => {
                h.truth(lookup).lukasiewicz_implied_by(b.truth(lookup))
            }
            Formula::Impl(ImplKind::Program, ..) => {
                unreachable!("logic-programming implication must be retagged before evaluation")
            }
        }
    }
}

impl Formula<Atom> {
    pub fn atom(name: &str) -> Result<Self> {
        Atom::new(name).map(Formula::Atom)
    }

    /// The literal this formula denotes, if it is an atom or a strongly
    /// negated atom.
    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Formula::Atom(a) => Some(Literal::positive(a.clone())),
            Formula::StrongNeg(x) => match &**x {
                Formula::Atom(a) => Some(Literal::negative(a.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Const(_) => {}
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::StrongNeg(x) | Formula::WeakNeg(x) => x.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    /// Every literal occurrence, including those under weak negation.
    pub fn collect_literals(&self, out: &mut BTreeSet<Literal>) {
        if let Some(l) = self.as_literal() {
            out.insert(l);
            return;
        }
        match self {
            Formula::Const(_) | Formula::Atom(_) => {}
            Formula::StrongNeg(x) | Formula::WeakNeg(x) => x.collect_literals(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Impl(_, l, r) => {
                l.collect_literals(out);
                r.collect_literals(out);
            }
        }
    }

    pub fn classify(&self) -> FormulaClass {
        FormulaClass {
            implication_free: self.is_implication_free(),
            basic: self.is_basic(),
            regular: self.is_regular(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaClass {
    pub implication_free: bool,
    pub basic: bool,
    pub regular: bool,
}

/// Rewrites `f` into an equivalent regular formula by pushing strong
/// negation inward:
///
/// ```text
/// ∼∼φ ≡ φ      ∼¬φ ≡ φ      ∼(φ ∧ ψ) ≡ ∼φ ∨ ∼ψ
/// ∼(φ ∨ ψ) ≡ ∼φ ∧ ∼ψ      ∼(φ ←CL ψ) ≡ ∼φ ∧ ψ
/// ```
///
/// Strong negation of a constant is folded (`∼⊤ = ⊥`, `∼⊥ = ⊤`, `∼U = U`).
/// Equivalence here is agreement on satisfaction, not on truth values:
/// `∼¬p` is false where `p` is unknown.
pub fn regularize(f: &Formula) -> Result<Formula> {
    match f {
        Formula::Const(_) | Formula::Atom(_) => Ok(f.clone()),
        Formula::StrongNeg(x) => regularize_negated(x),
        Formula::WeakNeg(x) => Ok(Formula::weak_neg(regularize(x)?)),
        Formula::And(l, r) => Ok(Formula::and(regularize(l)?, regularize(r)?)),
        Formula::Or(l, r) => Ok(Formula::or(regularize(l)?, regularize(r)?)),
        Formula::Impl(ImplKind::Classical, h, b) => Ok(Formula::implies(
            ImplKind::Classical,
            regularize(h)?,
            regularize(b)?,
        )),
        Formula::Impl(..) => Err(Error::Inadmissible {
            formula: f.to_string(),
            logic: crate::semantics::Logic::Classical,
            reason: "only classical implications can be regularized",
        }),
    }
}

/// `reg(∼f)`.
fn regularize_negated(f: &Formula) -> Result<Formula> {
    match f {
        Formula::Const(v) => Ok(Formula::Const(v.strong_neg())),
        Formula::Atom(_) => Ok(Formula::strong_neg(f.clone())),
        Formula::StrongNeg(x) | Formula::WeakNeg(x) => regularize(x),
        Formula::And(l, r) => Ok(Formula::or(regularize_negated(l)?, regularize_negated(r)?)),
        Formula::Or(l, r) => Ok(Formula::and(regularize_negated(l)?, regularize_negated(r)?)),
        Formula::Impl(ImplKind::Classical, h, b) => {
            Ok(Formula::and(regularize_negated(h)?, regularize(b)?))
        }
        Formula::Impl(..) => regularize(f),
    }
}

/// A rule `head ← body` over implication-free formulas.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    head: Formula,
    body: Formula,
}

impl Rule {
    pub fn new(head: Formula, body: Formula) -> Result<Self> {
        for f in [&head, &body] {
            if f.has_implication() {
                return Err(Error::ImplicationInRule(f.to_string()));
            }
        }
        Ok(Rule { head, body })
    }

    /// `head ← ⊤`.
    pub fn fact(head: Formula) -> Result<Self> {
        Rule::new(head, Formula::top())
    }

    /// Both rules are implication-free by construction.
    pub(crate) fn from_parts(head: Formula, body: Formula) -> Self {
        debug_assert!(head.is_implication_free() && body.is_implication_free());
        Rule { head, body }
    }

    pub fn head(&self) -> &Formula {
        &self.head
    }

    pub fn body(&self) -> &Formula {
        &self.body
    }

    pub fn head_literal(&self) -> Option<Literal> {
        self.head.as_literal()
    }

    /// The rule read as `head ←X body` for the given implication.
    pub fn to_formula(&self, kind: ImplKind) -> Formula {
        Formula::implies(kind, self.head.clone(), self.body.clone())
    }

    pub fn regularized(&self) -> Rule {
        // Rules never contain implications, so regularization cannot fail.
        Rule {
            head: regularize(&self.head).expect("implication-free"),
            body: regularize(&self.body).expect("implication-free"),
        }
    }

    pub fn is_converse_of(&self, other: &Rule) -> bool {
        self.head == other.body && self.body == other.head
    }
}

/// One entry of a program listing: a single rule, or a pair `φ ← ψ`, `ψ ← φ`
/// written as `φ ↔ ψ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause<'a> {
    Rule(&'a Rule),
    Equiv(&'a Rule),
}

/// A finite set of rules, stored in source order, plus an optional declared
/// alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    rules: Vec<Rule>,
    declared: BTreeSet<Atom>,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Self {
        Program {
            rules,
            declared: BTreeSet::new(),
        }
    }

    pub fn with_declared(rules: Vec<Rule>, declared: BTreeSet<Atom>) -> Self {
        Program { rules, declared }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn declared_atoms(&self) -> &BTreeSet<Atom> {
        &self.declared
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn push(&mut self, rule: Rule) {
        self.rules.push(rule);
    }

    pub fn declare(&mut self, atom: Atom) {
        self.declared.insert(atom);
    }

    /// A program with the same declarations and different rules.
    pub fn with_rules(&self, rules: Vec<Rule>) -> Program {
        Program {
            rules,
            declared: self.declared.clone(),
        }
    }

    /// `self ∪ other`, keeping the rules of `self` first.
    pub fn union(&self, other: &Program) -> Program {
        let mut out = self.clone();
        out.rules.extend(other.rules.iter().cloned());
        out.declared.extend(other.declared.iter().cloned());
        out
    }

    /// `at(P)`: atoms occurring in the rules, plus declared atoms.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.declared.clone();
        for r in &self.rules {
            r.head.collect_atoms(&mut out);
            r.body.collect_atoms(&mut out);
        }
        out
    }

    /// `Head(P)`: literals occurring in rule heads.
    pub fn head_literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            r.head.collect_literals(&mut out);
        }
        out
    }

    /// `Body(P)`: literals occurring in rule bodies, including those under
    /// weak negation.
    pub fn body_literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for r in &self.rules {
            r.body.collect_literals(&mut out);
        }
        out
    }

    pub fn has_weak_neg(&self) -> bool {
        self.rules
            .iter()
            .any(|r| r.head.has_weak_neg() || r.body.has_weak_neg())
    }

    pub fn regularized(&self) -> Program {
        self.with_rules(self.rules.iter().map(Rule::regularized).collect())
    }

    /// Groups adjacent converse rule pairs into equivalences.
    pub fn clauses(&self) -> Vec<Clause<'_>> {
        let mut out = Vec::with_capacity(self.rules.len());
        let mut i = 0;
        while i < self.rules.len() {
            let r = &self.rules[i];
            match self.rules.get(i + 1) {
                Some(next) if r.is_converse_of(next) => {
                    out.push(Clause::Equiv(r));
                    i += 2;
                }
                _ => {
                    out.push(Clause::Rule(r));
                    i += 1;
                }
            }
        }
        out
    }

    pub fn classify(&self) -> Classification {
        let mut c = Classification::default();
        for r in &self.rules {
            let rc = classify_rule(r);
            c.implication_free &= rc.implication_free;
            c.basic &= rc.basic;
            c.regular &= rc.regular;
            c.normal_nested &= rc.normal_nested;
            c.extended &= rc.extended;
            c.normal &= rc.normal;
            c.wc_normal &= rc.wc_normal;
        }
        c
    }

    pub fn require_normal_nested(&self) -> Result<()> {
        match self.rules.iter().find(|r| r.head_literal().is_none()) {
            Some(r) => Err(Error::NotNormalNested(r.head.to_string())),
            None => Ok(()),
        }
    }

    pub fn require_wc_normal(&self) -> Result<()> {
        match self.rules.iter().find(|r| !classify_rule(r).wc_normal) {
            Some(r) => Err(Error::NotWcNormal(r.to_string())),
            None => Ok(()),
        }
    }
}

/// Program classes; each flag holds when every rule is in the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub implication_free: bool,
    pub basic: bool,
    pub regular: bool,
    pub normal_nested: bool,
    pub extended: bool,
    pub normal: bool,
    pub wc_normal: bool,
}

impl Default for Classification {
    fn default() -> Self {
        Classification {
            implication_free: true,
            basic: true,
            regular: true,
            normal_nested: true,
            extended: true,
            normal: true,
            wc_normal: true,
        }
    }
}

fn classify_rule(r: &Rule) -> Classification {
    let head = r.head.classify();
    let body = r.body.classify();
    let head_lit = r.head_literal();
    let normal_nested = head_lit.is_some();
    let extended = normal_nested && is_extended_body(&r.body);
    let positive_head = matches!(head_lit, Some(ref l) if !l.strongly_negated);
    let normal = extended && positive_head;
    let basic = head.basic && body.basic;
    let assumption = r.body == Formula::bottom();
    Classification {
        implication_free: head.implication_free && body.implication_free,
        basic,
        regular: head.regular && body.regular,
        normal_nested,
        extended,
        normal,
        wc_normal: positive_head && basic && (assumption || is_extended_body(&r.body)),
    }
}

/// `⊤`, or a conjunction of literals and weakly negated literals.
fn is_extended_body(body: &Formula) -> bool {
    fn item(f: &Formula) -> bool {
        match f {
            Formula::And(l, r) => item(l) && item(r),
            Formula::WeakNeg(x) => x.as_literal().is_some(),
            _ => f.as_literal().is_some(),
        }
    }
    *body == Formula::top() || item(body)
}

pub fn atoms_of(p: &Program) -> BTreeSet<Atom> {
    p.atoms()
}

pub fn regularize_program(p: &Program) -> Program {
    p.regularized()
}
