//! Fixed program corpora shared by the benchmarks.

use wcs_asp_core::{generate_program, GenSpec, Program, ProgramClass};

/// `count` generated programs of one shape, seeded `0..count`.
pub fn corpus(class: ProgramClass, atoms: usize, rules: usize, count: u64) -> Vec<Program> {
    (0..count)
        .map(|seed| generate_program(GenSpec::new(atoms, rules, class, seed)).expect("valid shape"))
        .collect()
}
