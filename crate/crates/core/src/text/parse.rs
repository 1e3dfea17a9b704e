//! Parser for the program text format.
//!
//! ```text
//! program  := item*
//! item     := "#atoms" atom ("," atom)* "."
//!           | formula [(":-" | "<->") formula] "."
//! formula  := conj (";" conj)*
//! conj     := unary ("," unary)*
//! unary    := "-" unary | "not" unary | primary
//! primary  := atom | "true" | "false" | "unknown" | "(" formula ")"
//! ```
//!
//! `%` starts a comment that runs to the end of the line.

use crate::error::{Error, Result};
use crate::semantics::Interpretation;
use crate::syntax::{is_atom_name, Atom, Formula, Literal, Program, Rule};
use crate::truth::TruthValue;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Directive(String),
    Minus,
    Comma,
    Semi,
    LParen,
    RParen,
    If,
    Iff,
    Dot,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Directive(s) => format!("`#{s}`"),
            Tok::Minus => "`-`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::If => "`:-`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn error(at: Span, message: impl Into<String>) -> Error {
    Error::Parse {
        line: at.line,
        column: at.column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let at = Span { line, column: col };
        let mut take = |n: usize, tok: Tok| {
            out.push((tok, at));
            n
        };
        let n = match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => 1,
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '-' => take(1, Tok::Minus),
            ',' => take(1, Tok::Comma),
            ';' => take(1, Tok::Semi),
            '(' => take(1, Tok::LParen),
            ')' => take(1, Tok::RParen),
            '.' => take(1, Tok::Dot),
            ':' if chars.get(i + 1) == Some(&'-') => take(2, Tok::If),
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                take(3, Tok::Iff)
            }
            '#' | 'a'..='z' | 'A'..='Z' | '_' | '0'..='9' => {
                let start = if c == '#' { i + 1 } else { i };
                let mut end = start;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_')
                {
                    end += 1;
                }
                let word: String = chars[start..end].iter().collect();
                let tok = if c == '#' {
                    Tok::Directive(word)
                } else {
                    Tok::Ident(word)
                };
                take(end - i, tok)
            }
            other => return Err(error(at, format!("unexpected character `{other}`"))),
        };
        i += n;
        col += n;
    }
    out.push((Tok::Eof, Span { line, column: col }));
    Ok(out)
}

/// A parsed program with source positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceProgram {
    pub program: Program,
    /// Position of the clause each rule came from; both rules of an
    /// equivalence share one span.
    pub rule_spans: Vec<Span>,
    /// Positions of every `not`.
    pub weak_negations: Vec<Span>,
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    weak_negations: Vec<Span>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(error(
                self.span(),
                format!(
                    "expected {}, found {}",
                    tok.describe(),
                    self.peek().describe()
                ),
            ))
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while *self.peek() == Tok::Semi {
            self.bump();
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.unary()?;
        while *self.peek() == Tok::Comma {
            self.bump();
            f = Formula::and(f, self.unary()?);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Minus => Ok(Formula::strong_neg(self.unary()?)),
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(w) => match w.as_str() {
                "not" => {
                    self.weak_negations.push(at);
                    Ok(Formula::weak_neg(self.unary()?))
                }
                "true" => Ok(Formula::Const(TruthValue::True)),
                "false" => Ok(Formula::Const(TruthValue::False)),
                "unknown" => Ok(Formula::Const(TruthValue::Unknown)),
                name if is_atom_name(name) => Ok(Formula::Atom(Atom::new(name)?)),
                name => Err(error(at, format!("invalid atom name `{name}`"))),
            },
            other => Err(error(
                at,
                format!("expected a formula, found {}", other.describe()),
            )),
        }
    }

    fn declaration(&mut self, program: &mut Program) -> Result<()> {
        loop {
            let (tok, at) = self.bump();
            match tok {
                Tok::Ident(name) if is_atom_name(&name) => program.declare(Atom::new(&name)?),
                other => {
                    return Err(error(
                        at,
                        format!("expected an atom, found {}", other.describe()),
                    ))
                }
            }
            match self.bump() {
                (Tok::Comma, _) => continue,
                (Tok::Dot, _) => return Ok(()),
                (other, at) => {
                    return Err(error(
                        at,
                        format!("expected `,` or `.`, found {}", other.describe()),
                    ))
                }
            }
        }
    }

    fn program(&mut self) -> Result<(Program, Vec<Span>)> {
        let mut program = Program::default();
        let mut spans = Vec::new();
        loop {
            let at = self.span();
            match self.peek().clone() {
                Tok::Eof => return Ok((program, spans)),
                Tok::Directive(d) if d == "atoms" => {
                    self.bump();
                    self.declaration(&mut program)?;
                }
                Tok::Directive(d) => return Err(error(at, format!("unknown directive `#{d}`"))),
                _ => {
                    let head = self.formula()?;
                    let (tok, op_at) = self.bump();
                    let rules = match tok {
                        Tok::Dot => {
                            vec![Rule::fact(head)?]
                        }
                        Tok::If => {
                            let body = self.formula()?;
                            self.expect(Tok::Dot)?;
                            vec![Rule::new(head, body)?]
                        }
                        Tok::Iff => {
                            let body = self.formula()?;
                            self.expect(Tok::Dot)?;
                            vec![
                                Rule::new(head.clone(), body.clone())?,
                                Rule::new(body, head)?,
                            ]
                        }
                        other => {
                            return Err(error(
                                op_at,
                                format!("expected `.`, `:-` or `<->`, found {}", other.describe()),
                            ))
                        }
                    };
                    for r in rules {
                        program.push(r);
                        spans.push(at);
                    }
                }
            }
        }
    }
}

pub fn parse_source(text: &str) -> Result<SourceProgram> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        weak_negations: Vec::new(),
    };
    let (program, rule_spans) = p.program()?;
    Ok(SourceProgram {
        program,
        rule_spans,
        weak_negations: p.weak_negations,
    })
}

pub fn parse_program(text: &str) -> Result<Program> {
    parse_source(text).map(|s| s.program)
}

/// Parses a single formula (no trailing `.`).
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        weak_negations: Vec::new(),
    };
    let f = p.formula()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

/// Parses an interpretation written as a literal set, e.g. `{a, -b}`. The
/// braces are optional.
pub fn parse_interpretation(text: &str) -> Result<Interpretation> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .unwrap_or(trimmed);
    let mut lits = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (neg, name) = match item.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, item),
        };
        let atom = Atom::new(name).map_err(|_| Error::Parse {
            line: 1,
            column: 1,
            message: format!("invalid literal `{item}`"),
        })?;
        lits.push(Literal {
            atom,
            strongly_negated: neg,
        });
    }
    Interpretation::from_literals(&lits)
}
