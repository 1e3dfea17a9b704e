//! Text and JSON formats.

mod parse;
mod print;

pub use parse::{
    parse_formula, parse_interpretation, parse_program, parse_source, SourceProgram, Span,
};
pub use print::{
    literal_strings, models_json, print_program, program_json, theory_json, theory_text, Format,
};
