//! Weak Completion Semantics and Answer Set Semantics over a shared
//! three-valued syntax with strong (`-`) and weak (`not`) negation.
//!
//! The crate provides:
//!
//! - formulas, rules and programs with their syntactic classes ([`syntax`]);
//! - interpretations and evaluation under Łukasiewicz and N-logic
//!   ([`semantics`]), plus exhaustive model search ([`models`]);
//! - the program transformations `P∨`, `wc`, `dc` and the Vakarelov
//!   translation ([`transform`]);
//! - answer sets ([`asp`]) and wc-models with the Φ operator ([`wcs`]);
//! - a text format ([`text`]), seeded generators ([`generate`]) and
//!   property checks tying the two semantics together ([`check`]).
//!
//! ```
//! use wcs_asp_core::{answer_sets, definition_completion, parse_program, wc_models, Limits};
//!
//! let p = parse_program("l :- e, -ab1. e :- false. ab1 :- false.").unwrap();
//! let wc = wc_models(&p, Limits::default()).unwrap();
//! let dc = answer_sets(&definition_completion(&p).unwrap(), Limits::default()).unwrap();
//! assert_eq!(wc, dc);
//! assert_eq!(wc[0].to_string(), "{-ab1, -e, -l}");
//! ```

pub mod asp;
pub mod check;
pub mod error;
pub mod generate;
pub mod models;
pub mod semantics;
pub mod syntax;
pub mod text;
pub mod transform;
pub mod truth;
pub mod wcs;

pub use asp::{answer_sets, is_answer_set, is_closed, reduct, reduct_program};
pub use check::{check_program, fuzz, run_check, CheckReport, Failure, Property};
pub use error::{Error, Result};
pub use generate::{generate_lukasiewicz_formula, generate_program, GenSpec, ProgramClass};
pub use models::{
    enumerate_models, least_model, minimal_models, LeastModel, Limits, DEFAULT_MAX_ATOMS,
};
pub use semantics::{eval, knowledge_leq, satisfies, truth_leq, Interpretation, Logic, Theory};
pub use syntax::{regularize, Atom, Classification, Formula, ImplKind, Literal, Program, Rule};
pub use text::{
    parse_formula, parse_interpretation, parse_program, parse_source, Format, SourceProgram,
};
pub use transform::{
    as_l_theory, as_n_theory, definition_completion, pdisj, vakarelov_translate, weak_completion,
};
pub use truth::TruthValue;
pub use wcs::{phi_fixpoint, phi_iterates, phi_step, wc_models};
