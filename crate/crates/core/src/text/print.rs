use std::fmt::{self, Write};

use serde::Serialize;
use serde_json::{json, Value};

use crate::semantics::{Interpretation, Theory};
use crate::syntax::{Atom, Clause, Formula, ImplKind, Program, Rule};

const OR: u8 = 1;
const AND: u8 = 2;
const UNARY: u8 = 3;

fn write_formula(out: &mut impl Write, f: &Formula, ctx: u8) -> fmt::Result {
    let (level, open) = match f {
        Formula::Or(..) => (OR, ctx > OR),
        Formula::And(..) => (AND, ctx > AND),
        _ => (UNARY, false),
    };
    if open {
        out.write_char('(')?;
    }
    match f {
        Formula::Const(v) => out.write_str(v.symbol())?,
        Formula::Atom(a) => out.write_str(a.name())?,
        Formula::StrongNeg(x) => {
            out.write_char('-')?;
            write_formula(out, x, UNARY)?;
        }
        Formula::WeakNeg(x) => {
            out.write_str("not ")?;
            write_formula(out, x, UNARY)?;
        }
        Formula::And(l, r) => {
            write_formula(out, l, level)?;
            out.write_str(", ")?;
            write_formula(out, r, level + 1)?;
        }
        Formula::Or(l, r) => {
            write_formula(out, l, level)?;
            out.write_str(" ; ")?;
            write_formula(out, r, level + 1)?;
        }
        Formula::Impl(kind, h, b) => {
            let arrow = match kind {
                ImplKind::Classical => "<-cl",
                ImplKind::Lukasiewicz => "<-l",
                ImplKind::Program => ":-",
            };
            out.write_char('(')?;
            write_formula(out, h, 0)?;
            write!(out, " {arrow} ")?;
            write_formula(out, b, 0)?;
            out.write_char(')')?;
        }
    }
    if open {
        out.write_char(')')?;
    }
    Ok(())
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, 0)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.body() == Formula::top() {
            write!(f, "{}.", self.head())
        } else {
            write!(f, "{} :- {}.", self.head(), self.body())
        }
    }
}

impl fmt::Display for Clause<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Rule(r) => write!(f, "{r}"),
            Clause::Equiv(r) => write!(f, "{} <-> {}.", r.head(), r.body()),
        }
    }
}

/// Canonical text: an optional `#atoms` line, then one clause per line.
impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.declared_atoms().is_empty() {
            let names: Vec<&str> = self.declared_atoms().iter().map(Atom::name).collect();
            writeln!(f, "#atoms {}.", names.join(", "))?;
        }
        for c in self.clauses() {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize)]
struct JsonRule {
    head: String,
    body: String,
}

pub fn program_json(p: &Program) -> Value {
    let rules: Vec<JsonRule> = p
        .rules()
        .iter()
        .map(|r| JsonRule {
            head: r.head().to_string(),
            body: r.body().to_string(),
        })
        .collect();
    json!({
        "declared_atoms": p.declared_atoms(),
        "rules": rules,
        "classification": p.classify(),
    })
}

pub fn print_program(p: &Program, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => format!("{:#}\n", program_json(p)),
    }
}

pub fn theory_text(t: &Theory) -> String {
    t.formulas().iter().map(|f| format!("{f}\n")).collect()
}

pub fn theory_json(t: &Theory) -> Value {
    json!({
        "logic": t.logic().to_string(),
        "formulas": t.formulas().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
    })
}

/// Sorted literal strings of an interpretation.
pub fn literal_strings(i: &Interpretation) -> Vec<String> {
    i.literals().iter().map(|l| l.to_string()).collect()
}

/// `{"<key>": [[literals…]…], "unknown": [[atoms…]…]}` with one entry per
/// model, unknown atoms taken relative to `alphabet`.
pub fn models_json(
    key: &str,
    models: &[Interpretation],
    alphabet: &std::collections::BTreeSet<Atom>,
) -> Value {
    let lits: Vec<_> = models.iter().map(literal_strings).collect();
    let unknown: Vec<Vec<&str>> = models
        .iter()
        .map(|m| {
            m.unknown_atoms(alphabet)
                .into_iter()
                .map(Atom::name)
                .collect()
        })
        .collect();
    json!({ key: lits, "unknown": unknown })
}
